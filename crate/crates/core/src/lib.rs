//! Prisoner's-dilemma peer-learning (PD_PL) toolkit.
//!
//! Peer-learning sessions are scored like a prisoner's dilemma: each student
//! writes a concept sheet, sheets are graded 0..2, and both members of a pair
//! receive `(G_i + G_j) / 2 * 1.2`, so the payoff of a student (score minus own
//! grade) is `0.6 * G_partner - 0.4 * G_own`. This crate provides:
//!
//! * [`game`] — 2x2 games, prisoner's-dilemma verification, pure Nash
//!   equilibria, Pareto-efficient profiles, and the game induced by the
//!   scoring rule;
//! * [`scoring`] — per-session scores, payoffs, and cumulative leaderboards;
//! * [`sim`] — a seeded agent-based simulator of iterated sessions producing
//!   synthetic gradebooks with realistic missingness;
//! * [`impute`] — mean / median / k-nearest-neighbour / fuzzy-k-means
//!   missing-data imputation with the partial-distance strategy;
//! * [`stats`] — paired Hotelling's T², F/t quantiles from first principles,
//!   Bonferroni correction, descriptive statistics, and improvement metrics;
//! * [`gradebook`] — the students-by-sessions gradebook with an explicit
//!   missing mask and the participation filter.
//!
//! All numeric code is generic over the scalar type: floating point for the
//! statistical pipeline, and exact rationals for the game/scoring layer where
//! score arithmetic is expected to come out exact (see [`Rational`]).

pub mod game;
pub mod gradebook;
pub mod impute;
pub mod matrix;
pub mod scalar;
pub mod scoring;
pub mod sim;
pub mod stats;

pub use scalar::{Real, Scalar};

/// Exact scalar for game and scoring arithmetic. Grades entered as short
/// decimals convert exactly, so scores like `(0 + 2) / 2 * 1.2 = 1.2` carry no
/// rounding at all.
pub type Rational = num_rational::Ratio<i64>;

/// Student identifier as it appears in gradebook files.
pub type StudentId = String;

// Concrete f64 instantiations used by the CLI and most callers.
pub type Matrix64 = matrix::Matrix<f64>;
pub type DataMatrix64 = matrix::DataMatrix<f64>;
pub type PayoffMatrix64 = game::PayoffMatrix2x2<f64>;
pub type PayoffMatrixExact = game::PayoffMatrix2x2<Rational>;
pub type Gradebook64 = gradebook::Gradebook<f64>;
pub type SimConfig64 = sim::SimConfig<f64>;
pub type SimTrace64 = sim::SimTrace<f64>;
pub type FkmParams64 = impute::FkmParams<f64>;
pub type FkmModel64 = impute::FkmModel<f64>;
pub type TestReport64 = stats::TestReport<f64>;

//! Streaming knowledge tracing built around a multi-concept Elo rating
//! engine.
//!
//! The crate estimates per-specialty user abilities, question difficulties,
//! and specialty difficulties from a stream of question attempts. Predictions
//! are guess-aware (single- and multiple-answer floors) and updates use a
//! decaying uncertainty schedule instead of a fixed K factor. A sparse
//! logistic regression over the same parameterization serves as a batch
//! baseline and as the source of warm-start initial values for a new season.
//!
//! Modules:
//! - [`types`] / [`state`]: shared domain types and the parameter store
//! - [`elo`]: prediction, online update, and stream replay
//! - [`logreg`]: one-hot encoding, training, and estimate extraction
//! - [`warmstart`]: building an initial state from prior-season estimates
//! - [`pipeline`]: CSV ingestion, preprocessing stages, synthetic data
//! - [`eval`]: AUC/RMSE/ACC metrics, daily series, the exam split protocol

pub mod elo;
pub mod error;
pub mod eval;
pub mod io;
pub mod logreg;
pub mod pipeline;
pub mod state;
pub mod synth;
pub mod types;
pub mod warmstart;

pub use error::{Error, Result};
pub use state::RatingState;
pub use types::{
    Attempt, EstimateMaps, ModelTag, ParamClass, ParamKey, PredictionRecord, PredictionRow,
    QuestionKind, UncertaintyConfig,
};

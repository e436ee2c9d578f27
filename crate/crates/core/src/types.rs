//! Shared domain types: attempts, parameter keys, model tags, and the
//! uncertainty-schedule configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kind of a multiple-choice question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuestionKind {
    /// Exactly one of the options is correct.
    SingleAnswer,
    /// Any non-empty subset of the options may be correct.
    MultipleAnswer,
}

/// One user-question interaction event.
///
/// `specialties` is kept sorted and duplicate-free; construct through
/// [`Attempt::new`] to get that normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct Attempt {
    /// Epoch seconds, UTC.
    pub timestamp: i64,
    pub user_id: String,
    pub question_id: String,
    pub specialties: Vec<String>,
    pub question_kind: QuestionKind,
    pub n_options: u32,
    /// Whether the attempt was answered correctly.
    pub outcome: bool,
}

impl Attempt {
    pub fn new(
        timestamp: i64,
        user_id: impl Into<String>,
        question_id: impl Into<String>,
        specialties: Vec<String>,
        question_kind: QuestionKind,
        n_options: u32,
        outcome: bool,
    ) -> Result<Self> {
        let mut specialties = specialties;
        specialties.sort_unstable();
        specialties.dedup();
        let attempt = Attempt {
            timestamp,
            user_id: user_id.into(),
            question_id: question_id.into(),
            specialties,
            question_kind,
            n_options,
            outcome,
        };
        attempt.validate()?;
        Ok(attempt)
    }

    /// Checks the structural invariants (non-empty ids, at least one
    /// specialty, no duplicate tags, at least two options).
    pub fn validate(&self) -> Result<()> {
        if self.user_id.is_empty() {
            return Err(Error::InvalidAttempt("empty user_id".into()));
        }
        if self.question_id.is_empty() {
            return Err(Error::InvalidAttempt("empty question_id".into()));
        }
        if self.specialties.is_empty() {
            return Err(Error::InvalidAttempt("no specialty tag".into()));
        }
        if self.specialties.iter().any(String::is_empty) {
            return Err(Error::InvalidAttempt("empty specialty id".into()));
        }
        let mut sorted: Vec<&str> = self.specialties.iter().map(String::as_str).collect();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidAttempt("duplicate specialty tag".into()));
        }
        if self.n_options < 2 {
            return Err(Error::InvalidAttempt(format!(
                "n_options must be at least 2, got {}",
                self.n_options
            )));
        }
        Ok(())
    }

    /// Number of specialties tagging the question.
    pub fn delta(&self) -> usize {
        self.specialties.len()
    }

    /// Outcome as 0.0 / 1.0.
    pub fn outcome_value(&self) -> f64 {
        if self.outcome {
            1.0
        } else {
            0.0
        }
    }
}

/// Identifies one rated parameter in a [`crate::RatingState`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamKey {
    UserSpecialty { user: String, specialty: String },
    Question { id: String },
    Specialty { id: String },
}

impl ParamKey {
    pub fn user_specialty(user: impl Into<String>, specialty: impl Into<String>) -> Self {
        ParamKey::UserSpecialty {
            user: user.into(),
            specialty: specialty.into(),
        }
    }

    pub fn question(id: impl Into<String>) -> Self {
        ParamKey::Question { id: id.into() }
    }

    pub fn specialty(id: impl Into<String>) -> Self {
        ParamKey::Specialty { id: id.into() }
    }

    pub fn class(&self) -> ParamClass {
        match self {
            ParamKey::UserSpecialty { .. } => ParamClass::UserAbility,
            ParamKey::Question { .. } => ParamClass::QuestionDifficulty,
            ParamKey::Specialty { .. } => ParamClass::SpecialtyDifficulty,
        }
    }
}

/// Parameter class, used to select the uncertainty schedule branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamClass {
    UserAbility,
    QuestionDifficulty,
    SpecialtyDifficulty,
}

/// Hyperparameters of the decaying learning-rate schedule U(n) = a / (1 + b n).
///
/// The lower bound applies to user-ability updates only, so ability keeps
/// tracking a moving target; question and specialty rates decay without bound.
/// Setting `fixed_k` bypasses the schedule entirely and reproduces the
/// classical constant-K update.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct UncertaintyConfig {
    pub a: f64,
    pub b: f64,
    pub user_floor: f64,
    pub fixed_k: Option<f64>,
}

impl Default for UncertaintyConfig {
    fn default() -> Self {
        UncertaintyConfig {
            a: 1.0,
            b: 0.5,
            user_floor: 0.03,
            fixed_k: None,
        }
    }
}

impl UncertaintyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::Config(format!("uncertainty.a must be > 0, got {}", self.a)));
        }
        if !(self.b > 0.0 && self.b.is_finite()) {
            return Err(Error::Config(format!("uncertainty.b must be > 0, got {}", self.b)));
        }
        if !(self.user_floor >= 0.0 && self.user_floor < self.a) {
            return Err(Error::Config(format!(
                "uncertainty.user_floor must satisfy 0 <= floor < a, got {}",
                self.user_floor
            )));
        }
        if let Some(k) = self.fixed_k {
            if !(k > 0.0 && k.is_finite()) {
                return Err(Error::Config(format!("uncertainty.fixed_k must be > 0, got {k}")));
            }
        }
        Ok(())
    }
}

/// Which model produced a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelTag {
    EloCold,
    EloWarm,
    LogReg,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModelTag::EloCold => "elo_cold",
            ModelTag::EloWarm => "elo_warm",
            ModelTag::LogReg => "logreg",
        };
        f.write_str(s)
    }
}

impl FromStr for ModelTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elo_cold" => Ok(ModelTag::EloCold),
            "elo_warm" => Ok(ModelTag::EloWarm),
            "logreg" => Ok(ModelTag::LogReg),
            other => Err(Error::InvalidPrediction(format!("unknown model tag {other:?}"))),
        }
    }
}

/// A prediction logged before the update consumed the outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct PredictionRecord {
    pub attempt: Attempt,
    pub predicted_probability: f64,
    pub model_tag: ModelTag,
}

/// Flat prediction row as written to / read from the predictions CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct PredictionRow {
    pub timestamp: i64,
    pub user_id: String,
    pub question_id: String,
    pub predicted_probability: f64,
    pub outcome: bool,
    pub model_tag: ModelTag,
}

impl From<&PredictionRecord> for PredictionRow {
    fn from(r: &PredictionRecord) -> Self {
        PredictionRow {
            timestamp: r.attempt.timestamp,
            user_id: r.attempt.user_id.clone(),
            question_id: r.attempt.question_id.clone(),
            predicted_probability: r.predicted_probability,
            outcome: r.attempt.outcome,
            model_tag: r.model_tag,
        }
    }
}

/// Point estimates for the three parameter classes, keyed by opaque ids.
///
/// Produced by the rating state, the logistic regression, and the synthetic
/// generator ground truth; consumed by warm start and the correlation ops.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EstimateMaps {
    pub user_specialty: BTreeMap<(String, String), f64>,
    pub question: BTreeMap<String, f64>,
    pub specialty: BTreeMap<String, f64>,
}

#[derive(Serialize, Deserialize)]
struct UserSpecialtyEstimate {
    user: String,
    specialty: String,
    value: f64,
}

#[derive(Serialize, Deserialize)]
struct KeyedEstimate {
    id: String,
    value: f64,
}

/// JSON shape for [`EstimateMaps`]: three arrays in deterministic key order.
#[derive(Serialize, Deserialize)]
pub struct EstimateSnapshot {
    user_specialty: Vec<UserSpecialtyEstimate>,
    question: Vec<KeyedEstimate>,
    specialty: Vec<KeyedEstimate>,
}

impl EstimateMaps {
    pub fn is_empty(&self) -> bool {
        self.user_specialty.is_empty() && self.question.is_empty() && self.specialty.is_empty()
    }

    pub fn to_snapshot(&self) -> EstimateSnapshot {
        EstimateSnapshot {
            user_specialty: self
                .user_specialty
                .iter()
                .map(|((user, specialty), &value)| UserSpecialtyEstimate {
                    user: user.clone(),
                    specialty: specialty.clone(),
                    value,
                })
                .collect(),
            question: self
                .question
                .iter()
                .map(|(id, &value)| KeyedEstimate { id: id.clone(), value })
                .collect(),
            specialty: self
                .specialty
                .iter()
                .map(|(id, &value)| KeyedEstimate { id: id.clone(), value })
                .collect(),
        }
    }

    pub fn from_snapshot(snapshot: EstimateSnapshot) -> Self {
        let mut maps = EstimateMaps::default();
        for e in snapshot.user_specialty {
            maps.user_specialty.insert((e.user, e.specialty), e.value);
        }
        for e in snapshot.question {
            maps.question.insert(e.id, e.value);
        }
        for e in snapshot.specialty {
            maps.specialty.insert(e.id, e.value);
        }
        maps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn attempt(specialties: &[&str]) -> Result<Attempt> {
        Attempt::new(
            0,
            "u1",
            "q1",
            specialties.iter().map(|s| s.to_string()).collect(),
            QuestionKind::SingleAnswer,
            5,
            true,
        )
    }

    #[test]
    fn attempt_normalizes_specialty_order() {
        let a = attempt(&["s2", "s1", "s3"]).unwrap();
        assert_eq!(a.specialties, vec!["s1", "s2", "s3"]);
        assert_eq!(a.delta(), 3);
    }

    #[test]
    fn attempt_collapses_duplicate_tags() {
        let a = attempt(&["s1", "s1", "s2"]).unwrap();
        assert_eq!(a.specialties, vec!["s1", "s2"]);
    }

    #[test]
    fn attempt_rejects_empty_specialties() {
        assert!(matches!(attempt(&[]), Err(Error::InvalidAttempt(_))));
    }

    #[test]
    fn attempt_rejects_single_option() {
        let err = Attempt::new(0, "u", "q", vec!["s".into()], QuestionKind::SingleAnswer, 1, false);
        assert!(matches!(err, Err(Error::InvalidAttempt(_))));
    }

    #[test]
    fn uncertainty_config_validation() {
        assert!(UncertaintyConfig::default().validate().is_ok());
        let bad = UncertaintyConfig { user_floor: 1.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = UncertaintyConfig { a: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn model_tag_round_trips() {
        for tag in [ModelTag::EloCold, ModelTag::EloWarm, ModelTag::LogReg] {
            assert_eq!(tag.to_string().parse::<ModelTag>().unwrap(), tag);
        }
    }
}

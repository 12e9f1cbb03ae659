use serde::Serialize;

/// Outcome of a constructive check: either a witness that the claim holds or
/// the reason it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate<W> {
    Certified { witness: W },
    Refuted { reason: String },
}

impl<W> Certificate<W> {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified { .. })
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Certificate::Certified { witness } => Some(witness),
            Certificate::Refuted { .. } => None,
        }
    }

    pub(crate) fn refuted(reason: impl Into<String>) -> Self {
        Certificate::Refuted { reason: reason.into() }
    }
}

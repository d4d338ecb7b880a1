//! Three-valued answers for semi-decidable questions.

use serde::{Deserialize, Serialize};

/// Which bound stopped a search before it could decide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhausted {
    pub bound: String,
    pub detail: String,
}

impl Exhausted {
    pub fn new(bound: impl Into<String>, detail: impl Into<String>) -> Self {
        Exhausted { bound: bound.into(), detail: detail.into() }
    }
}

/// `Yes` carries a certificate, `No` an obstruction, `Unknown` the bound
/// that was hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "data", rename_all = "lowercase")]
pub enum Verdict<Y, N> {
    Yes(Y),
    No(N),
    Unknown(Exhausted),
}

/// Outcome without its payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
            Outcome::Unknown => "unknown",
        })
    }
}

impl<Y, N> Verdict<Y, N> {
    pub fn outcome(&self) -> Outcome {
        match self {
            Verdict::Yes(_) => Outcome::Yes,
            Verdict::No(_) => Outcome::No,
            Verdict::Unknown(_) => Outcome::Unknown,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn yes(self) -> Option<Y> {
        match self {
            Verdict::Yes(y) => Some(y),
            _ => None,
        }
    }

    pub fn as_yes(&self) -> Option<&Y> {
        match self {
            Verdict::Yes(y) => Some(y),
            _ => None,
        }
    }

    pub fn as_no(&self) -> Option<&N> {
        match self {
            Verdict::No(n) => Some(n),
            _ => None,
        }
    }

    pub fn map_yes<Z>(self, f: impl FnOnce(Y) -> Z) -> Verdict<Z, N> {
        match self {
            Verdict::Yes(y) => Verdict::Yes(f(y)),
            Verdict::No(n) => Verdict::No(n),
            Verdict::Unknown(u) => Verdict::Unknown(u),
        }
    }

    pub fn map_no<Z>(self, f: impl FnOnce(N) -> Z) -> Verdict<Y, Z> {
        match self {
            Verdict::Yes(y) => Verdict::Yes(y),
            Verdict::No(n) => Verdict::No(f(n)),
            Verdict::Unknown(u) => Verdict::Unknown(u),
        }
    }
}

/// Three-valued truth used where a boolean may only be known on a window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Truth {
    /// Holds in every degree.
    True,
    /// Fails in some degree.
    False,
    /// Holds on the inspected window; later degrees were not certified.
    WindowTrue { window: usize },
}

impl Truth {
    pub fn is_false(self) -> bool {
        self == Truth::False
    }

    pub fn is_certain(self) -> bool {
        !matches!(self, Truth::WindowTrue { .. })
    }

    /// Holds at least on the window.
    pub fn holds(self) -> bool {
        !self.is_false()
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::WindowTrue { window: a }, Truth::WindowTrue { window: b }) => Truth::WindowTrue { window: a.min(b) },
            (Truth::WindowTrue { window }, _) | (_, Truth::WindowTrue { window }) => Truth::WindowTrue { window },
            _ => Truth::True,
        }
    }

    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

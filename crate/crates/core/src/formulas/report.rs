use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::MultiPoly;
use crate::enumerate::ClassSpec;

/// The identities this crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Brenti,
    Theorem1,
    Lemma1,
    Theorem2,
    Theorem4,
    Theorem5,
    Theorem6,
    Cor2,
    Cor3,
    Cor4,
    Egf,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Brenti,
        Claim::Theorem1,
        Claim::Lemma1,
        Claim::Theorem2,
        Claim::Theorem4,
        Claim::Theorem5,
        Claim::Theorem6,
        Claim::Cor2,
        Claim::Cor3,
        Claim::Cor4,
        Claim::Egf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Brenti => "brenti",
            Claim::Theorem1 => "theorem1",
            Claim::Lemma1 => "lemma1",
            Claim::Theorem2 => "theorem2",
            Claim::Theorem4 => "theorem4",
            Claim::Theorem5 => "theorem5",
            Claim::Theorem6 => "theorem6",
            Claim::Cor2 => "cor2",
            Claim::Cor3 => "cor3",
            Claim::Cor4 => "cor4",
            Claim::Egf => "egf",
        }
    }

    /// Claims parameterized by a single conjugacy class.
    pub fn takes_lambda(self) -> bool {
        matches!(
            self,
            Claim::Brenti
                | Claim::Theorem1
                | Claim::Theorem2
                | Claim::Theorem4
                | Claim::Theorem5
                | Claim::Theorem6
                | Claim::Cor2
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

/// What a check was run on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Instance {
    Spec(ClassSpec),
    Sigma { sigma: String },
    Size { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// First point of disagreement in a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg_s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg_t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn note(msg: impl Into<String>) -> Self {
        Witness {
            deg_s: None,
            deg_t: None,
            lhs: None,
            rhs: None,
            note: Some(msg.into()),
        }
    }
}

/// Outcome of checking one identity on one instance. Serializes to the
/// line record `{claim, instance, verdict, witness?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub instance: Instance,
    #[serde(skip)]
    pub lhs: MultiPoly,
    #[serde(skip)]
    pub rhs: MultiPoly,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerificationReport {
    /// Passes iff `lhs == rhs`; otherwise records the first differing term.
    pub fn compare(claim: Claim, instance: Instance, lhs: MultiPoly, rhs: MultiPoly) -> Self {
        let witness = lhs.first_difference(&rhs).map(|(a, b)| Witness {
            deg_s: Some(a),
            deg_t: Some(b),
            lhs: Some(lhs.coeff(a, b).to_string()),
            rhs: Some(rhs.coeff(a, b).to_string()),
            note: None,
        });
        VerificationReport {
            claim,
            instance,
            lhs,
            rhs,
            verdict: if witness.is_none() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            witness,
        }
    }

    /// Forces a failure even if the polynomials agree.
    pub fn fail_with(mut self, note: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        let note = note.into();
        match self.witness.as_mut() {
            Some(w) => w.note = Some(note),
            None => self.witness = Some(Witness::note(note)),
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

//! Degree conditions that force k-edge-connectivity, maximal or super
//! edge-connectivity.
//!
//! Every checker returns a [`Verdict`]. A violated verdict carries the first
//! failing instance in scan order (condition number, then ascending j, then
//! lexicographic profile or parameters) together with the clause bounds that
//! made it fail, so the witness can be re-evaluated against the sequence.
//!
//! Index convention: clauses address the sorted sequence 1-based. An
//! antecedent clause whose index is <= 0 holds vacuously; a consequent
//! clause whose index is <= 0 is false.

mod boundary;
mod edge;
mod generic;
mod superlambda;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::combinatorics::CrossingProfile;
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

pub use boundary::{check_corollary43, check_corollary44, check_theorem42};
pub use edge::{
    check_corollary24, check_corollary25, check_corollary26, check_corollary29, check_maximally,
    check_theorem21, check_theorem22, check_theorem23,
};
pub use generic::{check_generic, Family};
pub use superlambda::{check_super_cor33, check_super_cor34, check_super_t31, check_super_t32};

/// `Sound` widens a few ranges where the literal statements miss small
/// boundary cases; `PaperLiteral` evaluates the statements verbatim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Sound,
    PaperLiteral,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sound" => Ok(Mode::Sound),
            "paper-literal" | "paper_literal" | "literal" => Ok(Mode::PaperLiteral),
            other => Err(Error::Usage(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionId {
    /// Condition families of the generic partition engine.
    Generic(Family),
    Theorem21(u8),
    Theorem22(u8),
    Theorem23(u8),
    Corollary24(u8),
    Corollary25(u8),
    Corollary26(u8),
    Corollary29(u8),
    Theorem31(u8),
    Theorem32(u8),
    Corollary33(u8),
    Corollary34(u8),
    Theorem42(u8, Option<u8>),
    Corollary43(u8),
    Corollary44(u8),
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConditionId::*;
        match *self {
            Generic(fam) => write!(f, "{fam}"),
            Theorem21(c) => write!(f, "T21-{c}"),
            Theorem22(c) => write!(f, "T22-{c}"),
            Theorem23(c) => write!(f, "T23-{c}"),
            Corollary24(c) => write!(f, "C24-{c}"),
            Corollary25(c) => write!(f, "C25-{c}"),
            Corollary26(c) => write!(f, "C26-{c}"),
            Corollary29(c) => write!(f, "C29-{c}"),
            Theorem31(c) => write!(f, "T31-{c}"),
            Theorem32(c) => write!(f, "T32-{c}"),
            Corollary33(c) => write!(f, "C33-{c}"),
            Corollary34(c) => write!(f, "C34-{c}"),
            Theorem42(c, None) => write!(f, "T42-{c}"),
            Theorem42(c, Some(sub)) => write!(f, "T42-{c}.{sub}"),
            Corollary43(c) => write!(f, "C43-{c}"),
            Corollary44(c) => write!(f, "C44-{c}"),
        }
    }
}

impl Serialize for ConditionId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters of the boundary-vertex conditions: x, y boundary sizes, z the
/// largest crossing degree on the small side, q and R the residues of x and
/// y normalised into [1, k-1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Theorem42Params {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub q: u64,
    #[serde(rename = "R")]
    pub big_r: u64,
}

impl Theorem42Params {
    pub fn new(x: u64, y: u64, z: u64, k: u64) -> Self {
        Theorem42Params { x, y, z, q: residue(x, k), big_r: residue(y, k) }
    }
}

/// ((v - 1) mod (k - 1)) + 1, the representative of v modulo k-1 in [1, k-1].
pub fn residue(v: u64, k: u64) -> u64 {
    debug_assert!(k >= 2 && v >= 1);
    (v - 1) % (k - 1) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition_id: ConditionId,
    /// Small-side size; absent for minimum-degree conditions.
    pub j: Option<usize>,
    pub profile: Option<CrossingProfile>,
    pub params: Option<Theorem42Params>,
    /// (i, b) pairs with d_i <= b on the checked sequence.
    pub antecedent_indices: Vec<(usize, u128)>,
    /// (i, b) pairs with d_i < b on the checked sequence.
    pub failed_consequent_bounds: Vec<(usize, u128)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub satisfied: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    pub fn satisfied() -> Self {
        Verdict { satisfied: true, violation: None }
    }

    pub fn violated(v: Violation) -> Self {
        Verdict { satisfied: false, violation: Some(v) }
    }

    pub fn is_satisfied(&self) -> bool {
        self.satisfied
    }

    pub fn condition_id(&self) -> Option<ConditionId> {
        self.violation.as_ref().map(|v| v.condition_id)
    }

    pub fn j(&self) -> Option<usize> {
        self.violation.as_ref().and_then(|v| v.j)
    }

    /// Re-evaluates the recorded clause bounds against `d`.
    pub fn witness_holds(&self, d: &DegreeSequence) -> bool {
        let Some(v) = &self.violation else {
            return self.satisfied;
        };
        let ok = |i: usize| i >= 1 && i <= d.len();
        !self.satisfied
            && v.antecedent_indices.iter().all(|&(i, b)| ok(i) && d.get(i) as u128 <= b)
            && v.failed_consequent_bounds.iter().all(|&(i, b)| ok(i) && (d.get(i) as u128) < b)
    }

    fn relabel(mut self, f: impl FnOnce(ConditionId) -> ConditionId) -> Self {
        if let Some(v) = self.violation.as_mut() {
            v.condition_id = f(v.condition_id);
        }
        self
    }
}

/// Minimum-degree condition d_1 >= k.
fn min_degree_verdict(d: &DegreeSequence, k: u64, id: ConditionId) -> Option<Verdict> {
    (d.min_degree() < k).then(|| {
        Verdict::violated(Violation {
            condition_id: id,
            j: None,
            profile: None,
            params: None,
            antecedent_indices: vec![],
            failed_consequent_bounds: vec![(1, k as u128)],
        })
    })
}

/// One "antecedent implies consequent" instance, evaluated clause by clause.
pub(crate) struct Implication<'a> {
    d: &'a DegreeSequence,
    premise: bool,
    conclusion: bool,
    antecedent: Vec<(usize, u128)>,
    consequent: Vec<(usize, u128)>,
}

impl<'a> Implication<'a> {
    pub(crate) fn new(d: &'a DegreeSequence) -> Self {
        Implication { d, premise: true, conclusion: false, antecedent: vec![], consequent: vec![] }
    }

    /// Antecedent clause d_idx <= bound.
    pub(crate) fn at_most(&mut self, idx: i64, bound: u128) -> &mut Self {
        if self.premise && idx >= 1 {
            let i = idx as usize;
            if self.d.get(i) as u128 <= bound {
                self.antecedent.push((i, bound));
            } else {
                self.premise = false;
            }
        }
        self
    }

    /// Consequent clause d_idx >= bound.
    pub(crate) fn at_least(&mut self, idx: i64, bound: u128) -> &mut Self {
        if self.premise && !self.conclusion && idx >= 1 {
            let i = idx as usize;
            if self.d.get(i) as u128 >= bound {
                self.conclusion = true;
            } else {
                self.consequent.push((i, bound));
            }
        }
        self
    }

    pub(crate) fn violated(&self) -> bool {
        self.premise && !self.conclusion
    }

    pub(crate) fn into_verdict(
        self,
        condition_id: ConditionId,
        j: usize,
        profile: Option<CrossingProfile>,
        params: Option<Theorem42Params>,
    ) -> Option<Verdict> {
        self.violated().then(|| {
            Verdict::violated(Violation {
                condition_id,
                j: Some(j),
                profile,
                params,
                antecedent_indices: self.antecedent,
                failed_consequent_bounds: self.consequent,
            })
        })
    }
}

/// C(a, r-1) for the bounds, saturating; `a` may be negative.
pub(crate) fn cb(a: i64, r: usize) -> u128 {
    crate::combinatorics::binom_saturating(a, r as i64 - 1)
}

/// The checkers addressable by name from the CLI and the bindings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T21,
    T22,
    T23,
    C24,
    C25,
    C26,
    C28,
    C29,
    T31,
    T32,
    C33,
    C34,
    T42,
    C43,
    C44,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::T21,
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::C24,
        TheoremId::C25,
        TheoremId::C26,
        TheoremId::C28,
        TheoremId::C29,
        TheoremId::T31,
        TheoremId::T32,
        TheoremId::C33,
        TheoremId::C34,
        TheoremId::T42,
        TheoremId::C43,
        TheoremId::C44,
    ];

    pub fn label(self) -> &'static str {
        use TheoremId::*;
        match self {
            T21 => "2.1",
            T22 => "2.2",
            T23 => "2.3",
            C24 => "2.4",
            C25 => "2.5",
            C26 => "2.6",
            C28 => "2.8",
            C29 => "2.9",
            T31 => "3.1",
            T32 => "3.2",
            C33 => "3.3",
            C34 => "3.4",
            T42 => "4.2",
            C43 => "4.3",
            C44 => "4.4",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(self, TheoremId::T21 | TheoremId::T23 | TheoremId::C29 | TheoremId::T42)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| Error::Usage(format!("unknown theorem {s:?}")))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Dispatches to the named checker. `k` is required where the condition is
/// parameterised by it and ignored otherwise.
pub fn check(theorem: TheoremId, d: &DegreeSequence, k: Option<u64>, mode: Mode) -> Result<Verdict> {
    use TheoremId::*;
    let need_k = || {
        k.ok_or_else(|| Error::Usage(format!("theorem {theorem} needs k")))
            .and_then(|k| if k == 0 { Err(Error::Usage("k must be positive".into())) } else { Ok(k) })
    };
    let k_at_least_2 = || {
        need_k().and_then(|k| {
            if k < 2 {
                Err(Error::Usage(format!("theorem {theorem} needs k >= 2")))
            } else {
                Ok(k)
            }
        })
    };
    Ok(match theorem {
        T21 => check_theorem21(d, k_at_least_2()?),
        T22 => check_theorem22(d),
        T23 => check_theorem23(d, need_k()?, mode),
        C24 => check_corollary24(d),
        C25 => check_corollary25(d),
        C26 => check_corollary26(d)?,
        C28 => check_maximally(d, mode),
        C29 => check_corollary29(d, need_k()?),
        T31 => check_super_t31(d)?,
        T32 => check_super_t32(d, mode)?,
        C33 => check_super_cor33(d)?,
        C34 => check_super_cor34(d)?,
        T42 => check_theorem42(d, k_at_least_2()?),
        C43 => check_corollary43(d),
        C44 => check_corollary44(d),
    })
}

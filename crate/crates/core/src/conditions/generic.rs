//! The partition-condition engine shared by the k-edge and super-λ checks.
//!
//! A realization with a cut of `c` edges splits into a small side of `j`
//! vertices and a large side of `n - j`. For each admissible crossing
//! profile the degrees on each side are bounded by the complete-part degree
//! plus the vertex's crossing multiplicity. With suffixT(i) = t_i + ... + t_c,
//! suffixS(i) likewise, B = C(j-1, r-1) and C' = C(n-j-1, r-1):
//!
//! * family A (B + c <= C'): for all a in [0, c], d_{j - suffixT(a+1)} <= B + a
//!   implies some d_{n - suffixS(a+1)} >= C' + a + 1;
//! * family B (j < n/2 otherwise, Δ = C' - B): same antecedent, consequent
//!   some d_{n - suffixT(Δ+a+1) - suffixS(a+1)} >= C' + a + 1;
//! * family C (even n, j = n/2, M = C(n/2-1, r-1)): for all a in [0, c-1],
//!   d_{n - suffixT(a+1) - suffixS(a+1)} <= M + a implies d_n >= M + c + 1.

use std::fmt;

use serde::Serialize;

use super::{cb, ConditionId, Implication, Verdict};
use crate::combinatorics::{compute_jstar, enumerate_profiles_with, side_fits, CrossingProfile, ProfileBounds};
use crate::degseq::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        };
        f.write_str(s)
    }
}

/// Runs families A, B and C for `c` crossing edges. Family A/B cover
/// `j_start <= j < n/2`; family C runs for even `n >= even_n_start`.
///
/// For c = 0 there is only the empty profile: family A covers
/// `j_start <= j <= n/2` and families B, C are vacuous.
pub fn check_generic(d: &DegreeSequence, c: usize, j_start: usize, even_n_start: usize) -> Verdict {
    Scan {
        bounds: ProfileBounds::standard(c, d.rank()),
        j_start,
        even_n_start,
        split_at_jstar: true,
    }
    .run(d)
}

pub(crate) struct Scan {
    pub bounds: ProfileBounds,
    pub j_start: usize,
    pub even_n_start: usize,
    /// When false every j < n/2 uses family A regardless of j*.
    pub split_at_jstar: bool,
}

impl Scan {
    pub fn run(&self, d: &DegreeSequence) -> Verdict {
        let n = d.len();
        let r = d.rank();
        let c = self.bounds.c();

        if c == 0 {
            for j in self.j_start..=n / 2 {
                let mut imp = Implication::new(d);
                imp.at_most(j as i64, cb(j as i64 - 1, r));
                imp.at_least(n as i64, cb((n - j) as i64 - 1, r) + 1);
                let profile = CrossingProfile { t: vec![], s: vec![], j, n, r };
                if let Some(v) = imp.into_verdict(ConditionId::Generic(Family::A), j, Some(profile), None) {
                    return v;
                }
            }
            return Verdict::satisfied();
        }

        let jstar = compute_jstar(n, r, c as u64);
        let mut j = self.j_start;
        while 2 * j < n {
            let family_a = !self.split_at_jstar
                || match jstar {
                    Some(js) if j <= js => true,
                    _ => j <= r && side_fits(j, n, r, c as u64),
                };
            for p in enumerate_profiles_with(&self.bounds, j, n) {
                let found = if family_a { family_a_check(d, &p) } else { family_b_check(d, &p) };
                if let Some(v) = found {
                    return v;
                }
            }
            j += 1;
        }

        if n.is_multiple_of(2) && n >= self.even_n_start {
            for p in enumerate_profiles_with(&self.bounds, n / 2, n) {
                if let Some(v) = family_c_check(d, &p) {
                    return v;
                }
            }
        }
        Verdict::satisfied()
    }
}

fn small_side_antecedent(imp: &mut Implication<'_>, p: &CrossingProfile, base: u128) {
    for a in 0..=p.c() {
        imp.at_most(p.j as i64 - p.suffix_t(a + 1) as i64, base + a as u128);
    }
}

fn family_a_check(d: &DegreeSequence, p: &CrossingProfile) -> Option<Verdict> {
    let (n, j, r) = (p.n as i64, p.j as i64, p.r);
    let upper = cb(n - j - 1, r);
    let mut imp = Implication::new(d);
    small_side_antecedent(&mut imp, p, cb(j - 1, r));
    for a in 0..=p.c() {
        imp.at_least(n - p.suffix_s(a + 1) as i64, upper + a as u128 + 1);
    }
    imp.into_verdict(ConditionId::Generic(Family::A), p.j, Some(p.clone()), None)
}

fn family_b_check(d: &DegreeSequence, p: &CrossingProfile) -> Option<Verdict> {
    let (n, j, r) = (p.n as i64, p.j as i64, p.r);
    let upper = cb(n - j - 1, r);
    let lower = cb(j - 1, r);
    let delta = upper.saturating_sub(lower);
    debug_assert!(delta >= 1 && delta <= p.c() as u128);
    let delta = delta as usize;
    let mut imp = Implication::new(d);
    small_side_antecedent(&mut imp, p, lower);
    for a in 0..=p.c() {
        let idx = n - p.suffix_t(delta + a + 1) as i64 - p.suffix_s(a + 1) as i64;
        imp.at_least(idx, upper + a as u128 + 1);
    }
    imp.into_verdict(ConditionId::Generic(Family::B), p.j, Some(p.clone()), None)
}

fn family_c_check(d: &DegreeSequence, p: &CrossingProfile) -> Option<Verdict> {
    let n = p.n as i64;
    let mid = cb(n / 2 - 1, p.r);
    let mut imp = Implication::new(d);
    for a in 0..p.c() {
        let idx = n - p.suffix_t(a + 1) as i64 - p.suffix_s(a + 1) as i64;
        imp.at_most(idx, mid + a as u128);
    }
    imp.at_least(n, mid + p.c() as u128 + 1);
    imp.into_verdict(ConditionId::Generic(Family::C), p.j, Some(p.clone()), None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64], r: usize) -> DegreeSequence {
        DegreeSequence::new(v, r).unwrap()
    }

    #[test]
    fn two_triangles_fail_family_c() {
        let d = seq(&[2, 2, 2, 2, 2, 2], 2);
        let v = check_generic(&d, 1, 3, 6);
        let w = v.violation.as_ref().unwrap();
        assert_eq!(w.condition_id, ConditionId::Generic(Family::C));
        assert_eq!(w.j, Some(3));
        let p = w.profile.as_ref().unwrap();
        assert_eq!((p.t.as_slice(), p.s.as_slice()), (&[1][..], &[1][..]));
        assert!(v.witness_holds(&d));
    }

    #[test]
    fn complete_graph_ranges_empty() {
        assert!(check_generic(&seq(&[3, 3, 3, 3], 2), 1, 3, 6).is_satisfied());
    }

    #[test]
    fn perfect_matching_fails_family_a_without_crossings() {
        let d = seq(&[1, 1, 1, 1], 2);
        let v = check_generic(&d, 0, 2, 4);
        assert_eq!(v.condition_id(), Some(ConditionId::Generic(Family::A)));
        assert_eq!(v.j(), Some(2));
        assert!(v.witness_holds(&d));
    }

    #[test]
    fn family_b_past_jstar() {
        // K4 and K5 joined by two edges sharing one small-side vertex.
        let d = seq(&[3, 3, 3, 4, 4, 4, 5, 5, 5], 2);
        assert_eq!(compute_jstar(9, 2, 2), Some(3));
        let v = check_generic(&d, 2, 3, 6);
        let w = v.violation.as_ref().unwrap();
        assert_eq!(w.condition_id, ConditionId::Generic(Family::B));
        assert_eq!(w.j, Some(4));
        let p = w.profile.as_ref().unwrap();
        assert_eq!((p.t.as_slice(), p.s.as_slice()), (&[0, 1][..], &[2, 0][..]));
        assert_eq!(w.failed_consequent_bounds, vec![(6, 5), (9, 6), (9, 7)]);
        assert!(v.witness_holds(&d));
    }
}

//! k-edge-connectivity conditions and their instantiations.

use super::generic::{Family, Scan};
use super::{cb, check_generic, min_degree_verdict, ConditionId, Implication, Mode, Verdict};
use crate::combinatorics::{compute_g, ProfileBounds};
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

fn relabel_families(v: Verdict, id: impl Fn(u8) -> ConditionId, a: u8, b: u8, c: u8) -> Verdict {
    v.relabel(|old| match old {
        ConditionId::Generic(Family::A) => id(a),
        ConditionId::Generic(Family::B) => id(b),
        ConditionId::Generic(Family::C) => id(c),
        other => other,
    })
}

/// Ranges used for conditions (2)-(4) with c = k-1 crossing edges.
///
/// Sound mode starts family A at j = r when k = 1: two disjoint r-sets
/// already disconnect a realization there.
fn partition_ranges(r: usize, k: u64, mode: Mode) -> (usize, usize) {
    match (mode, k) {
        (Mode::Sound, 1) => (r, 2 * r),
        _ => (r + 1, 2 * r + 2),
    }
}

fn partition_conditions(d: &DegreeSequence, k: u64, mode: Mode) -> Verdict {
    let (j_start, even_start) = partition_ranges(d.rank(), k, mode);
    let v = check_generic(d, (k - 1) as usize, j_start, even_start);
    relabel_families(v, ConditionId::Theorem23, 2, 3, 4)
}

/// Conditions (1)-(4) for forcibly k-edge-connected, k >= 1.
pub fn check_theorem23(d: &DegreeSequence, k: u64, mode: Mode) -> Verdict {
    assert!(k >= 1, "k must be positive");
    if let Some(v) = min_degree_verdict(d, k, ConditionId::Theorem23(1)) {
        return v;
    }
    partition_conditions(d, k, mode)
}

/// The k = 1 case stated on its own: d_1 >= 1 and d_j <= C(j-1, r-1)
/// implies d_n >= C(n-j-1, r-1) + 1 for r+1 <= j <= n/2.
pub fn check_corollary24(d: &DegreeSequence) -> Verdict {
    let v = check_theorem23(d, 1, Mode::PaperLiteral);
    v.relabel(|id| match id {
        ConditionId::Theorem23(c) => ConditionId::Corollary24(c.min(2)),
        other => other,
    })
}

/// Forcibly maximally edge-connected: conditions (2)-(4) at k = δ.
///
/// δ = 0 falls outside the conditions (they need k >= 1) and is reported as
/// a failed d_1 >= 1, the same bound the super-λ checks demand.
pub fn check_maximally(d: &DegreeSequence, mode: Mode) -> Verdict {
    if let Some(v) = min_degree_verdict(d, 1, ConditionId::Theorem23(1)) {
        return v;
    }
    partition_conditions(d, d.min_degree(), mode)
}

pub fn check_theorem21(d: &DegreeSequence, k: u64) -> Verdict {
    assert!(k >= 2, "k must be at least 2");
    if let Some(v) = min_degree_verdict(d, k, ConditionId::Theorem21(1)) {
        return v;
    }
    let (n, r) = (d.len(), d.rank());
    let shift = ((r as u64 - 1) * (k - 1)) as i64;
    for j in compute_g(k, r) as usize..=n / 2 {
        let lower = cb(j as i64 - 1, r);
        let mut imp = Implication::new(d);
        imp.at_most(j as i64 - shift, lower)
            .at_most(j as i64, lower + k as u128 - 1)
            .at_least(n as i64, cb((n - j) as i64 - 1, r) + k as u128);
        if let Some(v) = imp.into_verdict(ConditionId::Theorem21(2), j, None, None) {
            return v;
        }
    }
    Verdict::satisfied()
}

/// The 2-edge-connected conditions with the (2)/(3) antecedents written out
/// for t_1 in [1, r-1]. `full_middle` adds the d_{n/2} clause to (3).
fn two_edge_conditions(d: &DegreeSequence, id: fn(u8) -> ConditionId, full_middle: bool) -> Verdict {
    if let Some(v) = min_degree_verdict(d, 2, id(1)) {
        return v;
    }
    let (n, r) = (d.len() as i64, d.rank());
    let r_i = r as i64;
    let mut j = r_i + 1;
    while 2 * j < n {
        let (lower, upper) = (cb(j - 1, r), cb(n - j - 1, r));
        for t1 in 1..r_i {
            let mut imp = Implication::new(d);
            imp.at_most(j - t1, lower)
                .at_most(j, lower + 1)
                .at_least(n - r_i + t1, upper + 1)
                .at_least(n, upper + 2);
            if let Some(v) = imp.into_verdict(id(2), j as usize, None, None) {
                return v;
            }
        }
        j += 1;
    }
    if n % 2 == 0 && n >= 2 * r_i + 2 {
        let mid = cb(n / 2 - 1, r);
        let mut imp = Implication::new(d);
        if full_middle {
            imp.at_most(n / 2, mid);
        }
        imp.at_most(n - r_i, mid).at_least(n, mid + 2);
        if let Some(v) = imp.into_verdict(id(3), (n / 2) as usize, None, None) {
            return v;
        }
    }
    Verdict::satisfied()
}

pub fn check_theorem22(d: &DegreeSequence) -> Verdict {
    two_edge_conditions(d, ConditionId::Theorem22, true)
}

pub fn check_corollary25(d: &DegreeSequence) -> Verdict {
    two_edge_conditions(d, ConditionId::Corollary25, false)
}

/// The k = 3 conditions as stated for r >= 3: family A over the whole range
/// r+1 <= j < n/2 (no j* split) and family C for even n >= 2r+2.
pub fn check_corollary26(d: &DegreeSequence) -> Result<Verdict> {
    let r = d.rank();
    if r < 3 {
        return Err(Error::RankTooSmall { r, min: 3 });
    }
    if let Some(v) = min_degree_verdict(d, 3, ConditionId::Corollary26(1)) {
        return Ok(v);
    }
    let scan = Scan {
        bounds: ProfileBounds::standard(2, r),
        j_start: r + 1,
        even_n_start: 2 * r + 2,
        split_at_jstar: false,
    };
    Ok(relabel_families(scan.run(d), ConditionId::Corollary26, 2, 2, 3))
}

/// Single-profile weakening t_1 = (r-1)(k-1), s_{k-1} = 1, over
/// (r-1)(k-1) <= j <= n/2. The lower end is clamped to j >= 1.
pub fn check_corollary29(d: &DegreeSequence, k: u64) -> Verdict {
    assert!(k >= 1, "k must be positive");
    if let Some(v) = min_degree_verdict(d, k, ConditionId::Corollary29(1)) {
        return v;
    }
    let (n, r) = (d.len(), d.rank());
    let shift = (r as u64 - 1) * (k - 1);
    for j in (shift as usize).max(1)..=n / 2 {
        let lower = cb(j as i64 - 1, r);
        let upper = cb((n - j) as i64 - 1, r);
        let mut imp = Implication::new(d);
        imp.at_most(j as i64 - shift as i64, lower)
            .at_most(j as i64, lower + k as u128 - 1)
            .at_least(n as i64 - 1, upper + k as u128 - 1)
            .at_least(n as i64, upper + k as u128);
        if let Some(v) = imp.into_verdict(ConditionId::Corollary29(2), j, None, None) {
            return v;
        }
    }
    Verdict::satisfied()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64], r: usize) -> DegreeSequence {
        DegreeSequence::new(v, r).unwrap()
    }

    #[test]
    fn theorem23_examples() {
        let two_triangles = seq(&[2, 2, 2, 2, 2, 2], 2);
        let v = check_theorem23(&two_triangles, 2, Mode::Sound);
        assert_eq!(v.condition_id(), Some(ConditionId::Theorem23(4)));
        assert_eq!(v.j(), Some(3));
        assert!(v.witness_holds(&two_triangles));

        assert!(check_theorem23(&seq(&[3, 3, 3, 3], 2), 2, Mode::Sound).is_satisfied());
        for mode in [Mode::Sound, Mode::PaperLiteral] {
            let v = check_theorem23(&seq(&[1, 2, 2, 2], 2), 2, mode);
            assert_eq!(v.condition_id(), Some(ConditionId::Theorem23(1)));
        }
    }

    #[test]
    fn k1_boundary_gap() {
        let d = seq(&[1, 1, 1, 1], 2);
        assert!(check_theorem23(&d, 1, Mode::PaperLiteral).is_satisfied());
        assert!(check_corollary24(&d).is_satisfied());
        let v = check_theorem23(&d, 1, Mode::Sound);
        assert_eq!(v.condition_id(), Some(ConditionId::Theorem23(2)));
        assert_eq!(v.j(), Some(2));
    }

    #[test]
    fn theorem21_examples() {
        let v = check_theorem21(&seq(&[2, 2, 2, 2, 2, 2], 2), 2);
        assert_eq!(v.condition_id(), Some(ConditionId::Theorem21(2)));
        assert_eq!(v.j(), Some(3));
        assert!(check_theorem21(&seq(&[3, 3, 3, 3], 2), 2).is_satisfied());
        assert_eq!(
            check_theorem21(&seq(&[1, 1, 1, 1], 2), 2).condition_id(),
            Some(ConditionId::Theorem21(1))
        );
    }

    #[test]
    fn theorem22_examples() {
        assert_eq!(
            check_theorem22(&seq(&[2, 2, 2, 2, 2, 2], 2)).condition_id(),
            Some(ConditionId::Theorem22(3))
        );
        assert!(check_theorem22(&seq(&[3, 3, 3, 3], 2)).is_satisfied());
        assert_eq!(check_theorem22(&seq(&[1, 1], 2)).condition_id(), Some(ConditionId::Theorem22(1)));
        assert_eq!(
            check_corollary25(&seq(&[2, 2, 2, 2, 2, 2], 2)).condition_id(),
            Some(ConditionId::Corollary25(3))
        );
    }

    #[test]
    fn corollary29_examples() {
        let v = check_corollary29(&seq(&[2, 2, 2, 2, 2, 2], 2), 2);
        assert_eq!(v.condition_id(), Some(ConditionId::Corollary29(2)));
        assert_eq!(v.j(), Some(3));
        assert!(check_corollary29(&seq(&[3, 3, 3, 3], 2), 2).is_satisfied());
        assert_eq!(
            check_corollary29(&seq(&[1, 1, 1, 1], 2), 2).condition_id(),
            Some(ConditionId::Corollary29(1))
        );
    }

    #[test]
    fn maximally_examples() {
        assert!(check_maximally(&seq(&[2, 2, 2], 2), Mode::Sound).is_satisfied());
        assert!(!check_maximally(&seq(&[2, 2, 2, 2, 2, 2], 2), Mode::Sound).is_satisfied());
        assert!(check_maximally(&seq(&[1, 1], 2), Mode::Sound).is_satisfied());
        let v = check_maximally(&seq(&[0, 1, 1], 2), Mode::Sound);
        assert_eq!(v.condition_id(), Some(ConditionId::Theorem23(1)));
    }

    #[test]
    fn corollary26_needs_rank_three() {
        assert!(check_corollary26(&seq(&[3, 3, 3, 3], 2)).is_err());
        assert!(check_corollary26(&seq(&[3, 3, 3, 3], 3)).unwrap().is_satisfied());
    }
}

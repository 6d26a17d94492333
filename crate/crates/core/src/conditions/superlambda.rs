//! Super edge-connectivity conditions.

use super::generic::{Family, Scan};
use super::{cb, ConditionId, Implication, Mode, Verdict};
use crate::combinatorics::ProfileBounds;
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

fn positive_delta(d: &DegreeSequence) -> Result<u64> {
    match d.min_degree() {
        0 => Err(Error::MinDegreeTooSmall { min: 1, actual: 0 }),
        delta => Ok(delta),
    }
}

/// Partition conditions with c = δ crossing edges.
///
/// Sound mode also scans j = r and the even case n = 2r: a δ-edge cut can
/// leave exactly r vertices on the small side.
pub fn check_super_t32(d: &DegreeSequence, mode: Mode) -> Result<Verdict> {
    let delta = positive_delta(d)?;
    let r = d.rank();
    let (j_start, even_n_start) = match mode {
        Mode::Sound => (r, 2 * r),
        Mode::PaperLiteral => (r + 1, 2 * r + 2),
    };
    let scan = Scan {
        bounds: ProfileBounds::standard(delta as usize, r),
        j_start,
        even_n_start,
        split_at_jstar: true,
    };
    Ok(scan.run(d).relabel(|id| match id {
        ConditionId::Generic(Family::A) => ConditionId::Theorem32(1),
        ConditionId::Generic(Family::B) => ConditionId::Theorem32(2),
        ConditionId::Generic(Family::C) => ConditionId::Theorem32(3),
        other => other,
    }))
}

/// The δ = 3, r >= 4 conditions with their own profile constraint list:
/// family A over r <= j < n/2 and family C for even n >= 2r+2.
pub fn check_super_t31(d: &DegreeSequence) -> Result<Verdict> {
    let r = d.rank();
    if r < 4 {
        return Err(Error::RankTooSmall { r, min: 4 });
    }
    if d.min_degree() != 3 {
        return Err(Error::DeltaMismatch { expected: 3, actual: d.min_degree() });
    }
    let scan = Scan {
        bounds: ProfileBounds::min_degree_three(r),
        j_start: r,
        even_n_start: 2 * r + 2,
        split_at_jstar: false,
    };
    Ok(scan.run(d).relabel(|id| match id {
        ConditionId::Generic(Family::C) => ConditionId::Theorem31(2),
        ConditionId::Generic(_) => ConditionId::Theorem31(1),
        other => other,
    }))
}

/// Single-profile weakening t_1 = (r-1)δ, s_δ = 1 over (r-1)δ <= j <= n/2.
pub fn check_super_cor33(d: &DegreeSequence) -> Result<Verdict> {
    let delta = positive_delta(d)?;
    Ok(single_profile(d, delta, ConditionId::Corollary33(1)))
}

/// The graph case of the single-profile condition; requires r = 2.
pub fn check_super_cor34(d: &DegreeSequence) -> Result<Verdict> {
    if d.rank() != 2 {
        return Err(Error::RankMismatch { expected: 2, actual: d.rank() });
    }
    let delta = positive_delta(d)?;
    Ok(single_profile(d, delta, ConditionId::Corollary34(1)))
}

fn single_profile(d: &DegreeSequence, delta: u64, id: ConditionId) -> Verdict {
    let (n, r) = (d.len(), d.rank());
    let shift = (r as u64 - 1) * delta;
    let delta = delta as u128;
    for j in (shift as usize).max(1)..=n / 2 {
        let lower = cb(j as i64 - 1, r);
        let upper = cb((n - j) as i64 - 1, r);
        let mut imp = Implication::new(d);
        imp.at_most(j as i64 - shift as i64, lower)
            .at_most(j as i64, lower + delta)
            .at_least(n as i64 - 1, upper + delta)
            .at_least(n as i64, upper + delta + 1);
        if let Some(v) = imp.into_verdict(id, j, None, None) {
            return v;
        }
    }
    Verdict::satisfied()
}

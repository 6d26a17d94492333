//! Boundary-vertex conditions for k-edge-connectivity.
//!
//! These split a hypothetical (k-1)-edge cut by x = |X| and y = |Y|, the
//! numbers of small-side and large-side vertices touching the cut, and z,
//! the largest number of cut edges at one vertex of X.

use super::{cb, min_degree_verdict, residue, ConditionId, Implication, Theorem42Params, Verdict};
use crate::combinatorics::compute_j0;
use crate::degseq::DegreeSequence;

/// Range j0(z) < j <= n/2, or r+1 <= j <= n/2 when j0(z) is absent.
fn upper_range(n: usize, r: usize, z: u64) -> std::ops::RangeInclusive<usize> {
    let start = compute_j0(n, z, r).map_or(r + 1, |j0| j0 + 1);
    start..=n / 2
}

/// Range r+1 <= j <= j0(z), empty when j0(z) is absent.
fn lower_range(n: usize, r: usize, z: u64) -> std::ops::RangeInclusive<usize> {
    r + 1..=compute_j0(n, z, r).unwrap_or(r)
}

struct Ctx<'a> {
    d: &'a DegreeSequence,
    n: i64,
    r: usize,
    k: u64,
}

impl Ctx<'_> {
    fn lower(&self, j: i64) -> u128 {
        cb(j - 1, self.r)
    }

    fn upper(&self, j: i64) -> u128 {
        cb(self.n - j - 1, self.r)
    }

    fn floor_k(&self, v: u64) -> u128 {
        ((self.k - 1) / v) as u128
    }
}

pub fn check_theorem42(d: &DegreeSequence, k: u64) -> Verdict {
    assert!(k >= 2, "k must be at least 2");
    if let Some(v) = min_degree_verdict(d, k, ConditionId::Theorem42(1, None)) {
        return v;
    }
    let (n, r) = (d.len(), d.rank());
    let ctx = Ctx { d, n: n as i64, r, k };
    let span = (k - 1) * (r as u64 - 1);
    let big = n >= 2 * r + 2;

    if let Some(v) = condition2(&ctx, span) {
        return v;
    }
    if big {
        if let Some(v) = condition34(&ctx) {
            return v;
        }
        if n % 2 == 0 {
            if let Some(v) = condition5(&ctx, span) {
                return v;
            }
        }
        if let Some(v) = condition6(&ctx, span) {
            return v;
        }
    }
    Verdict::satisfied()
}

fn condition2(ctx: &Ctx<'_>, span: u64) -> Option<Verdict> {
    let (n, r, k) = (ctx.n, ctx.r, ctx.k);
    // j0 depends on z only; collect the largest range once.
    let j_max = (1..k).filter_map(|z| compute_j0(n as usize, z, r)).max()?;
    for j in r + 1..=j_max {
        let (lower, upper) = (ctx.lower(j as i64), ctx.upper(j as i64));
        for x in 1..=span {
            let q = residue(x, k);
            for z in (k - 1).div_ceil(q)..=k - q {
                if !lower_range(n as usize, r, z).contains(&j) {
                    continue;
                }
                for y in z..=span {
                    let big_r = residue(y, k);
                    let ji = j as i64;
                    let mut imp = Implication::new(ctx.d);
                    imp.at_most(ji - x as i64, lower)
                        .at_most(ji - x as i64 + 1, lower + ctx.floor_k(q))
                        .at_most(ji, lower + z as u128)
                        .at_least(n - y as i64, upper + 1)
                        .at_least(n - y as i64 + 1, upper + ctx.floor_k(big_r) + 1)
                        .at_least(n, upper + q.min(k - big_r) as u128 + 1);
                    let params = Theorem42Params::new(x, y, z, k);
                    if let Some(v) = imp.into_verdict(ConditionId::Theorem42(2, None), j, None, Some(params)) {
                        return Some(v);
                    }
                }
            }
        }
    }
    None
}

/// Conditions (3) and (4): the z = k-1 case past j0(k-1).
fn condition34(ctx: &Ctx<'_>) -> Option<Verdict> {
    let (n, r, k) = (ctx.n, ctx.r, ctx.k);
    let r64 = r as u64;
    let range = upper_range(n as usize, r, k - 1);
    for j in range.clone() {
        let ji = j as i64;
        let (lower, upper) = (ctx.lower(ji), ctx.upper(ji));
        for x in r64 - 1..=(k - 1) * (r64 - 2) + 1 {
            let xi = x as i64;
            let mut imp = Implication::new(ctx.d);
            imp.at_most(ji - xi, lower)
                .at_least(n - (xi + k as i64 - 1), upper + 1)
                .at_least(n - xi, upper + 2)
                .at_least(n, lower + k as u128);
            let params = Theorem42Params::new(x, k - 1, k - 1, k);
            if let Some(v) = imp.into_verdict(ConditionId::Theorem42(3, None), j, None, Some(params)) {
                return Some(v);
            }
        }
    }
    for j in range {
        let ji = j as i64;
        let (lower, upper) = (ctx.lower(ji), ctx.upper(ji));
        for x in 1..=(k - 1) * (r64 - 2) {
            for y in k - 1..=(k - 1) * (r64 - 1) {
                let (xi, yi) = (x as i64, y as i64);
                let mut imp = Implication::new(ctx.d);
                imp.at_most(ji - xi, lower)
                    .at_least(n - (xi + yi), upper + 1)
                    .at_least(n - xi, upper + 2)
                    .at_least(n, lower + k as u128);
                let params = Theorem42Params::new(x, y, k - 1, k);
                if let Some(v) = imp.into_verdict(ConditionId::Theorem42(4, None), j, None, Some(params)) {
                    return Some(v);
                }
            }
        }
    }
    None
}

/// Condition (5): the z = 1 case, which forces j = n/2.
fn condition5(ctx: &Ctx<'_>, span: u64) -> Option<Verdict> {
    let (n, k) = (ctx.n, ctx.k);
    let half = n / 2;
    let mid = ctx.lower(half);
    for x in k - 1..=span {
        for y in k - 1..=span {
            let big_r = residue(y, k);
            let (xi, yi) = (x as i64, y as i64);
            let mut imp = Implication::new(ctx.d);
            imp.at_most(half - xi, mid)
                .at_least(n - (xi + yi), mid + 1)
                .at_least(n - yi, mid + 2)
                .at_least(n - yi + 1, (mid + 2).max(mid + ctx.floor_k(big_r) + 1))
                .at_least(n, mid + (k - big_r) as u128 + 1);
            let params = Theorem42Params::new(x, y, 1, k);
            if let Some(v) = imp.into_verdict(ConditionId::Theorem42(5, None), half as usize, None, Some(params)) {
                return Some(v);
            }
        }
    }
    None
}

/// Condition (6): 2 <= z <= k-2, with the subcase chosen by comparing
/// z + C(j-1, r-1) against C(n-j-1, r-1) + min{q, k-R}.
fn condition6(ctx: &Ctx<'_>, span: u64) -> Option<Verdict> {
    let (n, r, k) = (ctx.n, ctx.r, ctx.k);
    if k < 4 {
        return None;
    }
    let j_min = (2..=k - 2).map(|z| *upper_range(n as usize, r, z).start()).min()?;
    for j in j_min..=n as usize / 2 {
        let ji = j as i64;
        let (lower, upper) = (ctx.lower(ji), ctx.upper(ji));
        for x in 1..=span {
            let q = residue(x, k);
            let xi = x as i64;
            for z in 2..=k - 2 {
                if !upper_range(n as usize, r, z).contains(&j) {
                    continue;
                }
                for y in z..=span {
                    let big_r = residue(y, k);
                    let yi = y as i64;
                    let w = q.min(k - big_r) as u128;
                    let left = z as u128 + lower;
                    let right = upper + w;
                    let second = upper.max(lower + ctx.floor_k(q)) + 1;
                    let mut imp = Implication::new(ctx.d);
                    imp.at_most(ji - xi, lower)
                        .at_least(n - (xi + yi), upper + 1)
                        .at_least(n - (xi + yi) + 1, second);
                    let sub = match left.cmp(&right) {
                        std::cmp::Ordering::Less => {
                            imp.at_least(n - yi + 1, (lower + z as u128).max(upper + ctx.floor_k(big_r)) + 1)
                                .at_least(n, upper + w + 1);
                            1
                        }
                        std::cmp::Ordering::Greater => {
                            imp.at_least(n - xi + 1, (upper + w).max(lower + ctx.floor_k(q)) + 1)
                                .at_least(n, lower + z as u128 + 1);
                            2
                        }
                        std::cmp::Ordering::Equal => {
                            imp.at_least(
                                n - (xi + yi) + 2,
                                (lower + ctx.floor_k(q)).max(upper + ctx.floor_k(big_r)) + 1,
                            )
                            .at_least(n, lower + z as u128 + 1);
                            3
                        }
                    };
                    let params = Theorem42Params::new(x, y, z, k);
                    if let Some(v) = imp.into_verdict(ConditionId::Theorem42(6, Some(sub)), j, None, Some(params)) {
                        return Some(v);
                    }
                }
            }
        }
    }
    None
}

/// The k = 2 case: (1) d_1 >= 2; (2) over x, y in [1, r-1] and
/// r+1 <= j < n/2; (3) for even n >= 2r+2.
pub fn check_corollary43(d: &DegreeSequence) -> Verdict {
    let id = ConditionId::Corollary43;
    if let Some(v) = min_degree_verdict(d, 2, id(1)) {
        return v;
    }
    let (n, r) = (d.len() as i64, d.rank());
    let ctx = Ctx { d, n, r, k: 2 };
    let r64 = r as u64;
    let mut j = r as i64 + 1;
    while 2 * j < n {
        let (lower, upper) = (ctx.lower(j), ctx.upper(j));
        for x in 1..r64 {
            for y in 1..r64 {
                let mut imp = Implication::new(d);
                imp.at_most(j - x as i64, lower)
                    .at_most(j, lower + 1)
                    .at_least(n - y as i64, upper + 1)
                    .at_least(n, upper + 2);
                let params = Theorem42Params::new(x, y, 1, 2);
                if let Some(v) = imp.into_verdict(id(2), j as usize, None, Some(params)) {
                    return v;
                }
            }
        }
        j += 1;
    }
    if n % 2 == 0 && n >= 2 * r as i64 + 2 {
        let mid = ctx.lower(n / 2);
        let mut imp = Implication::new(d);
        imp.at_most(n / 2, mid).at_least(n - 2, mid + 1).at_least(n, mid + 2);
        if let Some(v) = imp.into_verdict(id(3), (n / 2) as usize, None, None) {
            return v;
        }
    }
    Verdict::satisfied()
}

/// The k = 3 case. Conditions (2) and (4) use j0(2), condition (3) j0(1),
/// matching the (q, R, z) combinations (1, 2, 2) and (2, 2, 1).
pub fn check_corollary44(d: &DegreeSequence) -> Verdict {
    let id = ConditionId::Corollary44;
    if let Some(v) = min_degree_verdict(d, 3, id(1)) {
        return v;
    }
    let (n, r) = (d.len(), d.rank());
    let ni = n as i64;
    let ctx = Ctx { d, n: ni, r, k: 3 };
    let span = 2 * (r as u64 - 1);

    for (cond, z, y_min) in [(2u8, 2u64, 2u64), (3, 1, 1)] {
        for j in lower_range(n, r, z) {
            let ji = j as i64;
            let (lower, upper) = (ctx.lower(ji), ctx.upper(ji));
            for x in 1..=span {
                for y in y_min..=span {
                    let mut imp = Implication::new(d);
                    imp.at_most(ji - x as i64, lower)
                        .at_most(ji, lower + z as u128)
                        .at_least(ni - y as i64, upper + 1)
                        .at_least(ni, upper + 2);
                    let params = Theorem42Params::new(x, y, z, 3);
                    if let Some(v) = imp.into_verdict(id(cond), j, None, Some(params)) {
                        return v;
                    }
                }
            }
        }
    }

    if n >= 2 * r + 2 {
        for j in upper_range(n, r, 2) {
            let ji = j as i64;
            let (lower, upper) = (ctx.lower(ji), ctx.upper(ji));
            let mut imp = Implication::new(d);
            imp.at_most(ji, lower)
                .at_least(ni - 3, upper + 1)
                .at_least(ni - 1, upper + 2)
                .at_least(ni, upper + 3);
            if let Some(v) = imp.into_verdict(id(4), j, None, None) {
                return v;
            }
        }
        if n % 2 == 0 {
            let half = ni / 2;
            let mid = ctx.lower(half);
            for x in 2..=span {
                for y in 2..=span {
                    let mut imp = Implication::new(d);
                    imp.at_most(half - x as i64, mid)
                        .at_least(ni - (x + y) as i64, mid + 1)
                        .at_least(ni, mid + 2);
                    let params = Theorem42Params::new(x, y, 1, 3);
                    if let Some(v) = imp.into_verdict(id(5), half as usize, None, Some(params)) {
                        return v;
                    }
                }
            }
        }
    }
    Verdict::satisfied()
}

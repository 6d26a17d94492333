//! Exact binomials, the threshold scalars that split the small-side range,
//! and enumeration of crossing profiles.
//!
//! Every quantity here is an exact integer. [`binom`] is arbitrary precision;
//! [`binom_saturating`] is the `u128` variant used when a bound is compared
//! against a degree. It is exact whenever C(a, b) < 2^128 (in particular for
//! every a ≤ 130) and saturates at `u128::MAX` beyond that, which never
//! changes the outcome of a comparison against a `u64` degree.

use num_bigint::BigUint;
use serde::Serialize;

/// C(a, b) with arbitrary precision. Returns 0 when `b < 0` or `b > a`.
pub fn binom(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::from(0u8);
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::from(1u8);
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// C(a, b) as a `u128`, or `None` if it does not fit. Negative `a` yields 0,
/// which is how the condition formulas treat C(j-1, r-1) at j = 0.
pub fn binom_exact(a: i64, b: i64) -> Option<u128> {
    if a < 0 || b < 0 || b > a {
        return Some(0);
    }
    let (a, b) = (a as u128, b as u128);
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        match acc.checked_mul(a - i) {
            Some(v) => acc = v / (i + 1),
            None => return u128::try_from(binom(a as u64, b as i64)).ok(),
        }
    }
    Some(acc)
}

pub fn binom_saturating(a: i64, b: i64) -> u128 {
    binom_exact(a, b).unwrap_or(u128::MAX)
}

/// Exact test of C(lo_top, r-1) + extra <= C(hi_top, r-1).
fn binom_sum_le(lo_top: i64, extra: u64, hi_top: i64, r: usize) -> bool {
    let k = r as i64 - 1;
    if let (Some(lo), Some(hi)) = (binom_exact(lo_top, k), binom_exact(hi_top, k)) {
        if let Some(lhs) = lo.checked_add(extra as u128) {
            return lhs <= hi;
        }
    }
    let big = |a: i64| if a < 0 { BigUint::from(0u8) } else { binom(a as u64, k) };
    big(lo_top) + BigUint::from(extra) <= big(hi_top)
}

/// True when a side of `j` vertices can absorb `c` extra incidences and still
/// stay at or below the complete-part degree of the other side:
/// C(j-1, r-1) + c <= C(n-j-1, r-1).
pub fn side_fits(j: usize, n: usize, r: usize, c: u64) -> bool {
    binom_sum_le(j as i64 - 1, c, n as i64 - j as i64 - 1, r)
}

/// Smallest g >= r with g·k <= g·C(g-1, r-1) + (r-1)(k-1).
pub fn compute_g(k: u64, r: usize) -> u64 {
    assert!(k >= 2 && r >= 2, "compute_g needs k >= 2 and r >= 2");
    let mut g = r as u64;
    loop {
        let lhs = BigUint::from(g) * k;
        let rhs = BigUint::from(g) * binom(g - 1, r as i64 - 1) + BigUint::from((r as u64 - 1) * (k - 1));
        if lhs <= rhs {
            return g;
        }
        g += 1;
    }
}

/// Largest j with r+1 <= j < n/2 and C(j-1, r-1) + c <= C(n-j-1, r-1).
pub fn compute_jstar(n: usize, r: usize, c: u64) -> Option<usize> {
    let top = n.div_ceil(2).checked_sub(1)?;
    (r + 1..=top).rev().find(|&j| side_fits(j, n, r, c))
}

/// Largest j with r+1 <= j < n/2 and z + C(j-1, r-1) <= C(n-j-1, r-1).
/// Same scan as [`compute_jstar`] with `c = z`.
pub fn compute_j0(n: usize, z: u64, r: usize) -> Option<usize> {
    compute_jstar(n, r, z)
}

/// Derived scalars for one (n, r, k, z, j) context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// `None` when k < 2, where g is undefined.
    pub g: Option<u64>,
    pub jstar: Option<usize>,
    pub j0: Option<usize>,
    /// C(n-j-1, r-1) - C(j-1, r-1) at `j`, floored at zero.
    pub delta_gap: u128,
    pub j: usize,
}

impl Thresholds {
    pub fn at(n: usize, r: usize, k: u64, z: u64, j: usize) -> Self {
        let upper = binom_saturating(n as i64 - j as i64 - 1, r as i64 - 1);
        let lower = binom_saturating(j as i64 - 1, r as i64 - 1);
        Thresholds {
            g: (k >= 2).then(|| compute_g(k, r)),
            jstar: compute_jstar(n, r, k.saturating_sub(1)),
            j0: compute_j0(n, z, r),
            delta_gap: upper.saturating_sub(lower),
            j,
        }
    }
}

/// How `c` crossing edges meet the two sides of a partition: `t[i-1]` left
/// vertices and `s[i-1]` right vertices lie in exactly `i` crossing edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CrossingProfile {
    pub t: Vec<u64>,
    pub s: Vec<u64>,
    pub j: usize,
    pub n: usize,
    pub r: usize,
}

impl CrossingProfile {
    pub fn c(&self) -> usize {
        self.t.len()
    }

    /// t_i + ... + t_c for 1-based `i`; 0 when i > c.
    pub fn suffix_t(&self, i: usize) -> u64 {
        suffix(&self.t, i)
    }

    pub fn suffix_s(&self, i: usize) -> u64 {
        suffix(&self.s, i)
    }

    /// Incidences between left vertices and crossing edges, Σ i·t_i.
    pub fn left_incidences(&self) -> u64 {
        weighted(&self.t)
    }

    pub fn right_incidences(&self) -> u64 {
        weighted(&self.s)
    }

    pub fn satisfies(&self, bounds: &ProfileBounds) -> bool {
        self.t.len() == bounds.c
            && self.s.len() == bounds.c
            && bounds.admits(&self.t, &self.s, self.j, self.n)
    }

    /// Checks every constraint of the standard admissible-profile list.
    pub fn is_valid(&self) -> bool {
        self.satisfies(&ProfileBounds::standard(self.c(), self.r))
    }
}

fn suffix(v: &[u64], i: usize) -> u64 {
    if i == 0 || i > v.len() {
        return if i == 0 { v.iter().sum() } else { 0 };
    }
    v[i - 1..].iter().sum()
}

fn weighted(v: &[u64]) -> u64 {
    v.iter().enumerate().map(|(i, &x)| (i as u64 + 1) * x).sum()
}

/// The per-multiplicity caps that define which profiles are admissible.
///
/// [`ProfileBounds::standard`] is the list used by the k-edge and super-λ
/// conditions: t_i + s_i <= ⌊c/i⌋(r-1) for 2 <= i <= c and the same cap on
/// each side's suffix sums for 2 <= i <= c-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileBounds {
    c: usize,
    r: usize,
    /// `pair[i]` caps t_i + s_i; entries below 2 are unused.
    pair: Vec<u64>,
    /// `suffix[i]` caps t_i + ... + t_c (and the s analogue) when present.
    suffix: Vec<Option<u64>>,
}

impl ProfileBounds {
    pub fn standard(c: usize, r: usize) -> Self {
        let cap = |i: usize| (c / i) as u64 * (r as u64 - 1);
        let mut pair = vec![0; c + 1];
        let mut suffix = vec![None; c + 1];
        for i in 2..=c {
            pair[i] = cap(i);
            if i < c {
                suffix[i] = Some(cap(i));
            }
        }
        ProfileBounds { c, r, pair, suffix }
    }

    /// The δ = 3 list written out for rank r >= 4, which caps t_2 + s_2 at
    /// 2(r-1) instead of ⌊3/2⌋(r-1).
    pub fn min_degree_three(r: usize) -> Self {
        let r1 = r as u64 - 1;
        ProfileBounds {
            c: 3,
            r,
            pair: vec![0, 0, 2 * r1, r1],
            suffix: vec![None, None, Some(r1), None],
        }
    }

    pub fn c(&self) -> usize {
        self.c
    }

    fn side_cap(&self, side: usize) -> u64 {
        ((self.c * self.r - self.c) as u64).min(side as u64)
    }

    fn admits(&self, t: &[u64], s: &[u64], j: usize, n: usize) -> bool {
        let (c, r) = (self.c, self.r);
        if c == 0 {
            return true;
        }
        if weighted(t) + weighted(s) != (c * r) as u64 {
            return false;
        }
        let ones = t[0] + s[0];
        if ones < c as u64 || ones > (c * r) as u64 {
            return false;
        }
        for i in 2..=c {
            if t[i - 1] + s[i - 1] > self.pair[i] {
                return false;
            }
            if let Some(cap) = self.suffix[i] {
                if suffix(t, i) > cap || suffix(s, i) > cap {
                    return false;
                }
            }
        }
        let (lt, ls) = (suffix(t, 1), suffix(s, 1));
        (1..=self.side_cap(j)).contains(&lt) && (1..=self.side_cap(n.saturating_sub(j))).contains(&ls)
    }
}

/// All admissible profiles for `c` crossing edges at small side `j`, in
/// lexicographic order on (t, s). For c = 0 this is the single empty profile.
pub fn enumerate_profiles(c: usize, r: usize, j: usize, n: usize) -> Vec<CrossingProfile> {
    enumerate_profiles_with(&ProfileBounds::standard(c, r), j, n)
}

pub fn enumerate_profiles_with(bounds: &ProfileBounds, j: usize, n: usize) -> Vec<CrossingProfile> {
    let (c, r) = (bounds.c, bounds.r);
    let mut out = Vec::new();
    if c == 0 {
        out.push(CrossingProfile { t: vec![], s: vec![], j, n, r });
        return out;
    }
    let (t_cap, s_cap) = (bounds.side_cap(j), bounds.side_cap(n.saturating_sub(j)));
    // Every crossing edge needs a multiplicity-one vertex, and there are at
    // most t_cap + s_cap vertices in total.
    if (c as u64) > t_cap + s_cap {
        return out;
    }
    let mut walk = ProfileWalk {
        bounds,
        j,
        n,
        target: (c * r) as u64,
        t_cap,
        s_cap,
        vals: vec![0; 2 * c],
        out: &mut out,
    };
    walk.descend(0, 0, 0, 0);
    out
}

struct ProfileWalk<'a> {
    bounds: &'a ProfileBounds,
    j: usize,
    n: usize,
    target: u64,
    t_cap: u64,
    s_cap: u64,
    vals: Vec<u64>,
    out: &'a mut Vec<CrossingProfile>,
}

impl ProfileWalk<'_> {
    fn descend(&mut self, pos: usize, weight: u64, t_sum: u64, s_sum: u64) {
        let c = self.bounds.c;
        if pos == 2 * c {
            let (t, s) = self.vals.split_at(c);
            if self.bounds.admits(t, s, self.j, self.n) {
                self.out.push(CrossingProfile {
                    t: t.to_vec(),
                    s: s.to_vec(),
                    j: self.j,
                    n: self.n,
                    r: self.bounds.r,
                });
            }
            return;
        }
        // Vertices still placeable, each carrying at most c incidences.
        let room = (self.t_cap - t_sum.min(self.t_cap)) + (self.s_cap - s_sum.min(self.s_cap));
        if self.target - weight > room * c as u64 {
            return;
        }
        let on_left = pos < c;
        let mult = (pos % c) as u64 + 1;
        let side_left = if on_left { self.t_cap - t_sum } else { self.s_cap - s_sum };
        let max = ((self.target - weight) / mult).min(side_left);
        // t_1 + s_1 >= c: leave s_1 enough room, then top it up.
        let min = match (on_left, mult) {
            (true, 1) => (c as u64).saturating_sub(self.s_cap),
            (false, 1) => (c as u64).saturating_sub(self.vals[0]),
            _ => 0,
        };
        for v in min..=max {
            if !on_left && mult >= 2 && self.vals[pos - c] + v > self.bounds.pair[mult as usize] {
                break;
            }
            self.vals[pos] = v;
            if v > 0 && mult >= 2 && !self.partial_suffixes_fit(pos) {
                break;
            }
            let (ts, ss) = if on_left { (t_sum + v, s_sum) } else { (t_sum, s_sum + v) };
            self.descend(pos + 1, weight + mult * v, ts, ss);
        }
        self.vals[pos] = 0;
    }

    /// Suffix caps hold for the entries placed so far on `pos`'s side; later
    /// entries only add to these sums.
    fn partial_suffixes_fit(&self, pos: usize) -> bool {
        let c = self.bounds.c;
        let start = if pos < c { 0 } else { c };
        let mut acc = 0;
        for p in (start + 1..=pos).rev() {
            acc += self.vals[p];
            if let Some(cap) = self.bounds.suffix[p - start + 1] {
                if acc > cap {
                    return false;
                }
            }
        }
        true
    }
}

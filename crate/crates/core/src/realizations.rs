//! Exhaustive enumeration of simple r-uniform realizations.
//!
//! Vertex i of every realization has degree `d.get(i + 1)`. Candidate edges
//! are the r-subsets of the vertex set in lexicographic order; the search
//! decides each candidate include-first, so realizations come out in
//! lexicographic edge-set order. A branch is pruned when some vertex needs
//! more incidences than the remaining candidates can supply.
//!
//! The search is exponential. Desk-scale use is n <= 10 for r = 2 and
//! n <= 8 for r = 3; larger inputs should set a budget.
//!
//! For parallel runs the tree is split by the first included edge. Each
//! part is searched independently and the parts are combined in order, with
//! node counts summed exactly as a sequential search would accumulate them,
//! so results and budget outcomes do not depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, MAX_VERTICES};

/// Upper limit on the number of candidate edges C(n, r).
pub const MAX_CANDIDATES: usize = 1 << 17;

#[derive(Debug, Clone)]
pub struct RealizationQuery {
    pub d: DegreeSequence,
    /// Stop after this many realizations.
    pub limit: Option<u64>,
    /// Maximum number of search-node expansions.
    pub budget: Option<u64>,
}

impl RealizationQuery {
    pub fn new(d: DegreeSequence) -> Self {
        RealizationQuery { d, limit: None, budget: None }
    }

    pub fn iter(&self) -> Result<Realizations> {
        Realizations::new(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub budget: Option<u64>,
    pub workers: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: None, workers: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcibleOutcome {
    pub holds: bool,
    /// Lexicographically first realization without the property.
    pub counterexample: Option<Hypergraph>,
}

/// Candidate edges and suffix incidence counts shared by every search.
struct Space {
    n: usize,
    r: usize,
    cands: Vec<u64>,
    /// inc[i * n + v]: candidates at index >= i containing v.
    inc: Vec<u32>,
    target: Vec<u64>,
}

impl Space {
    fn new(d: &DegreeSequence) -> Result<Self> {
        let (n, r) = (d.len(), d.rank());
        if n > MAX_VERTICES {
            return Err(Error::InstanceTooLarge(format!("n = {n} exceeds {MAX_VERTICES}")));
        }
        let count = crate::combinatorics::binom_saturating(n as i64, r as i64);
        if count > MAX_CANDIDATES as u128 {
            return Err(Error::InstanceTooLarge(format!("C({n}, {r}) candidate edges")));
        }
        let mut cands = Vec::with_capacity(count as usize);
        let mut cur = Vec::with_capacity(r);
        fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<u64>) {
            if cur.len() == r {
                out.push(cur.iter().fold(0, |m, &v| m | 1 << v));
                return;
            }
            for v in start..=n - (r - cur.len()) {
                cur.push(v);
                rec(v + 1, n, r, cur, out);
                cur.pop();
            }
        }
        if r <= n {
            rec(0, n, r, &mut cur, &mut cands);
        }
        let mut inc = vec![0u32; (cands.len() + 1) * n];
        for i in (0..cands.len()).rev() {
            for v in 0..n {
                inc[i * n + v] = inc[(i + 1) * n + v] + (cands[i] >> v & 1) as u32;
            }
        }
        Ok(Space { n, r, cands, inc, target: d.values().to_vec() })
    }

    fn feasible(&self, i: usize, rem: &[u64]) -> bool {
        let row = &self.inc[i * self.n..(i + 1) * self.n];
        rem.iter().zip(row).all(|(&need, &avail)| need <= avail as u64)
    }

    fn fits(&self, i: usize, rem: &[u64]) -> bool {
        let m = self.cands[i];
        (0..self.n).all(|v| m >> v & 1 == 0 || rem[v] > 0)
    }

    fn apply(&self, i: usize, rem: &mut [u64], sign: i64) {
        let m = self.cands[i];
        for (v, x) in rem.iter_mut().enumerate() {
            if m >> v & 1 == 1 {
                *x = (*x as i64 - sign) as u64;
            }
        }
    }

    /// Parts of the search tree, keyed by the first included candidate.
    /// Only parts whose excluded prefix is feasible are listed.
    fn parts(&self) -> Vec<usize> {
        (0..self.cands.len())
            .filter(|&f| self.feasible(f, &self.target) && self.fits(f, &self.target))
            .collect()
    }
}

#[derive(Clone, Copy)]
struct Frame {
    i: usize,
    phase: u8,
}

/// Depth-first search within one part, or over the trivial all-zero case.
struct PartSearch<'a> {
    space: &'a Space,
    rem: Vec<u64>,
    chosen: Vec<usize>,
    stack: Vec<Frame>,
    nodes: u64,
}

impl<'a> PartSearch<'a> {
    fn new(space: &'a Space, first: usize) -> Self {
        let mut rem = space.target.clone();
        space.apply(first, &mut rem, 1);
        PartSearch { space, rem, chosen: vec![first], stack: vec![Frame { i: first + 1, phase: 0 }], nodes: 1 }
    }

    fn hypergraph(&self) -> Hypergraph {
        let masks: Vec<u64> = self.chosen.iter().map(|&i| self.space.cands[i]).collect();
        Hypergraph::from_masks(self.space.n, self.space.r, &masks)
    }

    /// Advances to the next realization; `None` when the part is exhausted
    /// or the node count would pass `cap`.
    fn next_within(&mut self, cap: u64) -> Option<std::result::Result<Hypergraph, ()>> {
        let sp = self.space;
        while let Some(top) = self.stack.last().copied() {
            let idx = self.stack.len() - 1;
            match top.phase {
                0 => {
                    self.nodes += 1;
                    if self.nodes > cap {
                        return Some(Err(()));
                    }
                    if self.rem.iter().all(|&x| x == 0) {
                        self.stack.pop();
                        return Some(Ok(self.hypergraph()));
                    }
                    if top.i == sp.cands.len() || !sp.feasible(top.i, &self.rem) {
                        self.stack.pop();
                        continue;
                    }
                    self.stack[idx].phase = 1;
                    if sp.fits(top.i, &self.rem) {
                        sp.apply(top.i, &mut self.rem, 1);
                        self.chosen.push(top.i);
                        self.stack.push(Frame { i: top.i + 1, phase: 0 });
                    } else {
                        self.stack[idx].phase = 2;
                        self.stack.push(Frame { i: top.i + 1, phase: 0 });
                    }
                }
                1 => {
                    sp.apply(top.i, &mut self.rem, -1);
                    self.chosen.pop();
                    self.stack[idx].phase = 2;
                    self.stack.push(Frame { i: top.i + 1, phase: 0 });
                }
                _ => {
                    self.stack.pop();
                }
            }
        }
        None
    }
}

/// A paused [`PartSearch`]: remaining degrees, chosen edges, frames, nodes.
type SavedSearch = (Vec<u64>, Vec<usize>, Vec<Frame>, u64);

/// Lazy stream of realizations in lexicographic edge-set order. A
/// `BudgetExhausted` item ends the stream; the output before it is partial.
pub struct Realizations {
    space: Space,
    parts: Vec<usize>,
    part: usize,
    state: Option<SavedSearch>,
    nodes: u64,
    budget: Option<u64>,
    remaining: Option<u64>,
    done: bool,
    zero_pending: bool,
}

impl Realizations {
    pub fn new(q: &RealizationQuery) -> Result<Self> {
        let space = Space::new(&q.d)?;
        let divisible = q.d.edge_count().is_some();
        let zero = q.d.values().iter().all(|&x| x == 0);
        let parts = if divisible && !zero { space.parts() } else { vec![] };
        Ok(Realizations {
            space,
            parts,
            part: 0,
            state: None,
            nodes: 0,
            budget: q.budget,
            remaining: q.limit,
            done: false,
            zero_pending: zero,
        })
    }
}

impl Iterator for Realizations {
    type Item = Result<Hypergraph>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        if self.zero_pending {
            self.zero_pending = false;
            self.done = true;
            return Some(Ok(Hypergraph::from_masks(self.space.n, self.space.r, &[])));
        }
        let budget = self.budget.unwrap_or(u64::MAX);
        while self.part < self.parts.len() {
            let mut search = match self.state.take() {
                Some((rem, chosen, stack, nodes)) => PartSearch { space: &self.space, rem, chosen, stack, nodes },
                None => PartSearch::new(&self.space, self.parts[self.part]),
            };
            let base = self.nodes;
            let result = search.next_within(budget.saturating_sub(base));
            match result {
                Some(Ok(h)) => {
                    self.state = Some((search.rem, search.chosen, search.stack, search.nodes));
                    if let Some(r) = self.remaining.as_mut() {
                        *r -= 1;
                    }
                    return Some(Ok(h));
                }
                Some(Err(())) => {
                    self.done = true;
                    return Some(Err(Error::BudgetExhausted { budget }));
                }
                None => {
                    self.nodes += search.nodes;
                    self.part += 1;
                }
            }
        }
        self.done = true;
        None
    }
}

/// Per-part result of a property search.
struct PartOutcome {
    nodes: u64,
    exhausted: bool,
    realizations: u64,
    counterexample: Option<Hypergraph>,
}

fn search_part(space: &Space, first: usize, cap: u64, holds: &(dyn Fn(&Hypergraph) -> Result<bool> + Sync)) -> Result<PartOutcome> {
    let mut search = PartSearch::new(space, first);
    let mut realizations = 0;
    loop {
        match search.next_within(cap) {
            None => return Ok(PartOutcome { nodes: search.nodes, exhausted: false, realizations, counterexample: None }),
            Some(Err(())) => {
                return Ok(PartOutcome { nodes: search.nodes, exhausted: true, realizations, counterexample: None })
            }
            Some(Ok(h)) => {
                realizations += 1;
                if !holds(&h)? {
                    return Ok(PartOutcome {
                        nodes: search.nodes,
                        exhausted: false,
                        realizations,
                        counterexample: Some(h),
                    });
                }
            }
        }
    }
}

/// Decides whether every realization of `d` satisfies `holds`.
pub fn forcibly(
    d: &DegreeSequence,
    opts: OracleOptions,
    holds: &(dyn Fn(&Hypergraph) -> Result<bool> + Sync),
) -> Result<ForcibleOutcome> {
    let r = d.rank();
    if d.edge_count().is_none() {
        return Err(Error::NotHypergraphic { r });
    }
    let space = Space::new(d)?;
    if d.values().iter().all(|&x| x == 0) {
        let h = Hypergraph::from_masks(d.len(), r, &[]);
        let ok = holds(&h)?;
        return Ok(ForcibleOutcome { holds: ok, counterexample: (!ok).then_some(h) });
    }
    let budget = opts.budget.unwrap_or(u64::MAX);
    let parts = space.parts();

    // Parts after the first one with a counterexample cannot affect the
    // result, so workers skip them once one is known.
    let first_bad = AtomicUsize::new(usize::MAX);
    let run = |(pos, &f): (usize, &usize)| -> Option<Result<PartOutcome>> {
        if pos > first_bad.load(Ordering::Relaxed) {
            return None;
        }
        let out = search_part(&space, f, budget, holds);
        if matches!(&out, Ok(o) if o.counterexample.is_some() || o.exhausted) {
            first_bad.fetch_min(pos, Ordering::Relaxed);
        }
        Some(out)
    };
    let outcomes: Vec<Option<Result<PartOutcome>>> = if opts.workers <= 1 {
        let mut v = Vec::with_capacity(parts.len());
        for item in parts.iter().enumerate() {
            let o = run(item);
            let stop = matches!(&o, Some(Ok(p)) if p.counterexample.is_some() || p.exhausted)
                || matches!(&o, Some(Err(_)));
            v.push(o);
            if stop {
                break;
            }
        }
        v
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
        pool.install(|| parts.par_iter().enumerate().map(run).collect())
    };

    let mut nodes = 0u64;
    let mut realizations = 0u64;
    for o in outcomes {
        let Some(o) = o else { break };
        let o = o?;
        nodes = nodes.saturating_add(o.nodes);
        if o.exhausted || nodes > budget {
            return Err(Error::BudgetExhausted { budget });
        }
        realizations += o.realizations;
        if let Some(h) = o.counterexample {
            return Ok(ForcibleOutcome { holds: false, counterexample: Some(h) });
        }
    }
    if realizations == 0 {
        return Err(Error::NotHypergraphic { r });
    }
    Ok(ForcibleOutcome { holds: true, counterexample: None })
}

pub fn is_hypergraphic(d: &DegreeSequence, budget: Option<u64>) -> Result<bool> {
    let q = RealizationQuery { d: d.clone(), limit: Some(1), budget };
    match q.iter()?.next() {
        None => Ok(false),
        Some(Ok(_)) => Ok(true),
        Some(Err(e)) => Err(e),
    }
}

pub fn forcibly_k_edge_connected(d: &DegreeSequence, k: u64, opts: OracleOptions) -> Result<ForcibleOutcome> {
    forcibly(d, opts, &|h| h.edge_connectivity_at_least(k))
}

pub fn forcibly_super(d: &DegreeSequence, opts: OracleOptions) -> Result<ForcibleOutcome> {
    forcibly(d, opts, &|h| h.is_super_edge_connected())
}

/// λ(H) = δ(H) for every realization.
pub fn forcibly_maximally(d: &DegreeSequence, opts: OracleOptions) -> Result<ForcibleOutcome> {
    forcibly(d, opts, &|h| h.edge_connectivity_at_least(h.min_degree()))
}

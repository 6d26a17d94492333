//! Simple r-uniform hypergraphs on at most 64 vertices.
//!
//! Edges are stored canonically (each edge's vertices ascending, the edge
//! list in lexicographic order) alongside u64 vertex masks used by the
//! connectivity routines.

use std::fmt::Write as _;

use serde::Serialize;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;

/// Largest vertex count supported by the mask representation.
pub const MAX_VERTICES: usize = 64;
/// Largest vertex count for the subset-enumeration oracles.
pub const MAX_BRUTEFORCE_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    #[serde(skip)]
    masks: Vec<u64>,
}

/// An edge cut given as the boundary of a vertex set. `side` always
/// contains vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSet {
    /// Indices into [`Hypergraph::edges`].
    pub edges: Vec<usize>,
    pub side: Vec<usize>,
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn vertices_to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::RankTooSmall { r, min: 2 });
        }
        if n > MAX_VERTICES {
            return Err(Error::InstanceTooLarge(format!("n = {n} exceeds {MAX_VERTICES} vertices")));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let distinct = e.windows(2).all(|w| w[0] != w[1]);
            if e.len() != r || !distinct {
                return Err(Error::BadEdgeSize { edge: e, r });
            }
            canon.push(e);
        }
        canon.sort();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: w[0].clone() });
        }
        let masks = canon.iter().map(|e| vertices_to_mask(e)).collect();
        Ok(Hypergraph { n, r, edges: canon, masks })
    }

    /// Builds from distinct r-bit masks; used by the enumerators.
    pub(crate) fn from_masks(n: usize, r: usize, masks: &[u64]) -> Self {
        let mut edges: Vec<Vec<usize>> = masks.iter().map(|&m| mask_to_vertices(m)).collect();
        edges.sort();
        let masks = edges.iter().map(|e| vertices_to_mask(e)).collect();
        Hypergraph { n, r, edges, masks }
    }

    /// The complete r-uniform hypergraph on n vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        let mut edges = Vec::new();
        let mut cur = Vec::with_capacity(r);
        fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, r, cur, out);
                cur.pop();
            }
        }
        rec(0, n, r, &mut cur, &mut edges);
        Hypergraph::new(n, r, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Per-vertex degrees in vertex order.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn min_degree(&self) -> u64 {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        DegreeSequence::from_degrees(&self.degrees(), self.r)
    }

    fn all_vertices(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn component_of(&self, start: usize, masks: &[u64]) -> u64 {
        let mut reach = 1u64 << start;
        loop {
            let before = reach;
            for &m in masks {
                if m & reach != 0 {
                    reach |= m;
                }
            }
            if reach == before {
                return reach;
            }
        }
    }

    /// Isolated vertices count as components; n = 1 is connected.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::ConnectivityUndefined);
        }
        Ok(self.component_of(0, &self.masks) == self.all_vertices())
    }

    /// Indices of edges meeting both `side` and its complement.
    pub fn boundary(&self, side: &[usize]) -> Vec<usize> {
        let s = vertices_to_mask(side);
        self.boundary_mask(s)
    }

    fn boundary_mask(&self, s: u64) -> Vec<usize> {
        let rest = self.all_vertices() & !s;
        (0..self.masks.len())
            .filter(|&i| self.masks[i] & s != 0 && self.masks[i] & rest != 0)
            .collect()
    }

    fn boundary_size(&self, s: u64, rest: u64) -> u64 {
        self.masks.iter().filter(|&&m| m & s != 0 && m & rest != 0).count() as u64
    }

    pub fn remove_edges(&self, indices: &[usize]) -> Hypergraph {
        let keep: Vec<u64> = (0..self.masks.len())
            .filter(|i| !indices.contains(i))
            .map(|i| self.masks[i])
            .collect();
        Hypergraph::from_masks(self.n, self.r, &keep)
    }

    fn network(&self) -> FlowNetwork {
        let mut g = FlowNetwork::new(self.n + 2 * self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let (inp, out) = (self.n + 2 * i, self.n + 2 * i + 1);
            g.add_arc(inp, out, Some(1));
            for &v in e {
                g.add_arc(v, inp, None);
                g.add_arc(out, v, None);
            }
        }
        g
    }

    /// λ(H), or `cap` if λ(H) >= cap.
    fn connectivity_capped(&self, cap: u64) -> Result<u64> {
        if self.n < 2 {
            return Err(Error::TooFewVertices { n: self.n });
        }
        if !self.is_connected()? {
            return Ok(0);
        }
        let mut best = cap.min(self.min_degree());
        if best == 0 {
            return Ok(0);
        }
        let mut g = self.network();
        for t in 1..self.n {
            best = best.min(g.max_flow(0, t, best as u32) as u64);
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// Edge connectivity by unit-capacity flow: hyperedge-disjoint paths
    /// from vertex 0 to every other vertex, each hyperedge split into a
    /// capacity-one arc.
    pub fn edge_connectivity(&self) -> Result<u64> {
        self.connectivity_capped(u64::MAX)
    }

    pub fn edge_connectivity_at_least(&self, k: u64) -> Result<bool> {
        Ok(k == 0 || self.connectivity_capped(k)? >= k)
    }

    fn check_bruteforce_size(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewVertices { n: self.n });
        }
        if self.n > MAX_BRUTEFORCE_VERTICES {
            return Err(Error::InstanceTooLarge(format!(
                "subset enumeration supports n <= {MAX_BRUTEFORCE_VERTICES}, got {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Sides S containing vertex 0, proper and nonempty complement.
    fn sides(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let all = self.all_vertices();
        let half = 1u64 << (self.n - 1);
        (0..half - 1).map(move |bits| {
            let s = (bits << 1) | 1;
            (s, all & !s)
        })
    }

    /// Minimum boundary size over all vertex bipartitions; n <= 24.
    pub fn edge_connectivity_bruteforce(&self) -> Result<u64> {
        self.check_bruteforce_size()?;
        Ok(self
            .sides()
            .map(|(s, rest)| self.boundary_size(s, rest))
            .min()
            .expect("n >= 2 gives at least one side"))
    }

    /// Every vertex set S (containing vertex 0) whose boundary has size λ.
    pub fn minimum_cuts(&self) -> Result<Vec<CutSet>> {
        self.check_bruteforce_size()?;
        let lambda = self.edge_connectivity_bruteforce()?;
        Ok(self
            .sides()
            .filter(|&(s, rest)| self.boundary_size(s, rest) == lambda)
            .map(|(s, _)| CutSet { edges: self.boundary_mask(s), side: mask_to_vertices(s) })
            .collect())
    }

    /// λ = δ and every minimum cut is the star of a minimum-degree vertex.
    pub fn is_super_edge_connected(&self) -> Result<bool> {
        self.check_bruteforce_size()?;
        let deg = self.degrees();
        let delta = deg.iter().copied().min().unwrap_or(0);
        let lambda = self.connectivity_capped(delta.max(1))?;
        if lambda != delta {
            return Ok(false);
        }
        let min_vertices = deg
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == delta)
            .fold(0u64, |m, (v, _)| m | 1 << v);
        for (s, rest) in self.sides() {
            let mut common = u64::MAX;
            let mut size = 0;
            for &m in &self.masks {
                if m & s != 0 && m & rest != 0 {
                    size += 1;
                    common &= m;
                    if size > lambda {
                        break;
                    }
                }
            }
            if size == lambda && common & min_vertices == 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `n r m` header, then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.r, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Parses the text format; `#` lines and blank lines are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let numbers = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|e| Error::Parse { line, message: format!("bad integer {tok:?}: {e}") })
                })
                .collect()
        };
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
        let h = numbers(hline, header)?;
        let [n, r, m] = h[..] else {
            return Err(Error::Parse { line: hline, message: "header must be `n r m`".into() });
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let e = numbers(line, l)?;
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse { line, message: "edge vertices must be strictly increasing".into() });
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Hypergraph::new(n, r, edges)
    }
}

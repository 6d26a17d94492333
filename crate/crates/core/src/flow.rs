//! Dinic max-flow on small integer networks.

use std::collections::VecDeque;

const INF: u32 = u32::MAX / 2;

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    original: Vec<u32>,
    level: Vec<i32>,
    next_arc: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            original: Vec::new(),
            level: vec![0; nodes],
            next_arc: vec![0; nodes],
        }
    }

    /// Arc u -> v; `None` means unbounded.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: Option<u32>) {
        let c = cap.unwrap_or(INF);
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn freeze(&mut self) {
        if self.original.len() != self.cap.len() {
            self.original = self.cap.clone();
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.next_arc[u] < self.head[u].len() {
            let a = self.head[u][self.next_arc[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, t, pushed.min(self.cap[a]));
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            self.next_arc[u] += 1;
        }
        0
    }

    /// Maximum s-t flow, stopping once it reaches `limit`. Capacities are
    /// restored afterwards so the network can be reused.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        self.freeze();
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.next_arc.iter_mut().for_each(|i| *i = 0);
            loop {
                let got = self.dfs(s, t, limit - flow);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= limit {
                    break;
                }
            }
        }
        self.cap.copy_from_slice(&self.original);
        flow
    }
}

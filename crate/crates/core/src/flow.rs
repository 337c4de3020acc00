//! Dinic's maximum flow on small integer networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    // (node, position in arcs[node]) for each edge added by the caller
    handles: Vec<(usize, usize)>,
    original: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); nodes],
            handles: Vec::new(),
            original: Vec::new(),
        }
    }

    /// Adds a directed arc and returns its handle.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let fwd = self.arcs[from].len();
        let back = self.arcs[to].len() + usize::from(from == to);
        self.arcs[from].push(Arc { to, cap, rev: back });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: fwd });
        self.handles.push((from, fwd));
        self.original.push(cap);
        self.handles.len() - 1
    }

    pub fn flow(&self, handle: usize) -> i64 {
        let (node, pos) = self.handles[handle];
        self.original[handle] - self.arcs[node][pos].cap
    }

    fn levels(&self, source: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.arcs.len()];
        level[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let next = level[x].map(|l| l + 1);
            for a in &self.arcs[x] {
                if a.cap > 0 && level[a.to].is_none() {
                    level[a.to] = next;
                    queue.push_back(a.to);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        x: usize,
        sink: usize,
        limit: i64,
        level: &[Option<usize>],
        cursor: &mut [usize],
    ) -> i64 {
        if x == sink {
            return limit;
        }
        while cursor[x] < self.arcs[x].len() {
            let Arc { to, cap, rev } = self.arcs[x][cursor[x]];
            let forward = matches!((level[x], level[to]), (Some(a), Some(b)) if b == a + 1);
            if cap > 0 && forward {
                let pushed = self.augment(to, sink, limit.min(cap), level, cursor);
                if pushed > 0 {
                    self.arcs[x][cursor[x]].cap -= pushed;
                    self.arcs[to][rev].cap += pushed;
                    return pushed;
                }
            }
            cursor[x] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink].is_none() {
                return total;
            }
            let mut cursor = vec![0; self.arcs.len()];
            loop {
                let pushed = self.augment(source, sink, i64::MAX, &level, &mut cursor);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes that can still reach `sink` through arcs with residual capacity.
    pub fn reaching(&self, sink: usize) -> Vec<bool> {
        let n = self.arcs.len();
        let mut reach = vec![false; n];
        reach[sink] = true;
        let mut queue = VecDeque::from([sink]);
        while let Some(y) = queue.pop_front() {
            // arc x -> y has residual capacity iff the paired arc y -> x
            // is recorded with rev pointing back to it
            for a in &self.arcs[y] {
                let x = a.to;
                if !reach[x] && self.arcs[x][a.rev].cap > 0 {
                    reach[x] = true;
                    queue.push_back(x);
                }
            }
        }
        reach
    }
}

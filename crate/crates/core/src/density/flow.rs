//! Dinic max-flow on integer capacities.

use std::collections::VecDeque;

pub(crate) const INF: i64 = i64::MAX / 4;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: i64,
}

pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            next: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64) -> i64 {
        if u == t {
            return limit;
        }
        while self.next[u] < self.out[u].len() {
            let a = self.out[u][self.next[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.fill(0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    /// Nodes that cannot reach `t` in the residual graph: the largest
    /// source side over all minimum cuts.
    pub fn not_reaching(&self, t: usize) -> Vec<bool> {
        let nodes = self.out.len();
        let mut reach = vec![false; nodes];
        reach[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            // residual arc u -> v exists when the reverse of v's arc has capacity
            for &a in &self.out[v] {
                let u = self.arcs[a].to;
                if !reach[u] && self.arcs[a ^ 1].cap > 0 {
                    reach[u] = true;
                    queue.push_back(u);
                }
            }
        }
        reach.into_iter().map(|r| !r).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_network() {
        // CLRS figure 26.1, max flow 23
        let mut f = FlowNetwork::new(6);
        for &(u, v, c) in &[
            (0, 1, 16),
            (0, 2, 13),
            (2, 1, 4),
            (1, 3, 12),
            (3, 2, 9),
            (2, 4, 14),
            (4, 3, 7),
            (3, 5, 20),
            (4, 5, 4),
        ] {
            f.add_arc(u, v, c);
        }
        assert_eq!(f.max_flow(0, 5), 23);
        let side = f.not_reaching(5);
        assert!(side[0] && !side[5]);
    }

    #[test]
    fn disconnected_sink() {
        let mut f = FlowNetwork::new(3);
        f.add_arc(0, 1, 5);
        assert_eq!(f.max_flow(0, 2), 0);
    }
}

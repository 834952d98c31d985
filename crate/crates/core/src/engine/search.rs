//! Pruned depth-first search over proper colourings with a fixed palette.

use super::Statistic;
use crate::graph::LabeledGraph;
use crate::qsym::Composition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Explicit-stack search; each call to [`PaletteSearch::advance`] moves to the
/// next complete proper colouring using colour `i` exactly `α_i` times.
///
/// Vertices are visited in [`LabeledGraph::traversal_order`]. A branch is cut
/// as soon as some colour still owed `r` more uses has fewer than `r`
/// uncoloured vertices left that are not adjacent to that colour.
#[derive(Debug, Clone)]
pub(crate) struct PaletteSearch {
    n: usize,
    colors_used: usize,
    statistic: Statistic,
    order: Vec<usize>,
    adj: Vec<u64>,
    /// Per depth: neighbours coloured earlier in the order.
    back: Vec<Vec<usize>>,
    color: Vec<u8>,
    remaining: Vec<u32>,
    forbid: Vec<u64>,
    uncolored: u64,
    stat: Vec<u32>,
    saved_forbid: Vec<u64>,
    next: Vec<u8>,
    depth: usize,
    state: State,
}

impl PaletteSearch {
    pub(crate) fn new(g: &LabeledGraph, palette: &Composition, statistic: Statistic) -> Self {
        let n = g.vertex_count();
        let order: Vec<usize> = g.traversal_order().into_iter().map(|v| v - 1).collect();
        let mut adj = vec![0u64; n];
        for &(i, j) in g.edges() {
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        let mut position = vec![0; n];
        for (d, &v) in order.iter().enumerate() {
            position[v] = d;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(d, &v)| {
                (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1 && position[u] < d)
                    .collect()
            })
            .collect();
        let colors_used = palette.len();
        let mut remaining = vec![0u32; colors_used + 1];
        for (i, &part) in palette.parts().iter().enumerate() {
            remaining[i + 1] = part as u32;
        }
        let state = if palette.size() == n && colors_used <= u8::MAX as usize {
            State::Fresh
        } else {
            State::Done
        };
        PaletteSearch {
            n,
            colors_used,
            statistic,
            order,
            adj,
            back,
            color: vec![0; n],
            remaining,
            forbid: vec![0; colors_used + 1],
            uncolored: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            stat: vec![0; n + 1],
            saved_forbid: vec![0; n],
            next: vec![1; n],
            depth: 0,
            state,
        }
    }

    /// Colour of each vertex (0-based index) in the current colouring.
    pub(crate) fn colors(&self) -> &[u8] {
        &self.color
    }

    /// Ascents (or descents) of the current colouring.
    pub(crate) fn statistic(&self) -> u32 {
        self.stat[self.n]
    }

    pub(crate) fn advance(&mut self) -> bool {
        match self.state {
            State::Done => return false,
            State::Fresh => {
                self.state = State::Running;
                self.depth = 0;
                self.next[0] = 1;
            }
            State::Running => {
                self.depth = self.n - 1;
                self.unassign(self.depth);
            }
        }
        loop {
            let d = self.depth;
            if self.extend(d) {
                self.depth = d + 1;
                if self.depth == self.n {
                    return true;
                }
                self.next[self.depth] = 1;
            } else if d == 0 {
                self.state = State::Done;
                return false;
            } else {
                self.depth = d - 1;
                self.unassign(self.depth);
            }
        }
    }

    /// Tries the remaining candidate colours at depth `d`.
    fn extend(&mut self, d: usize) -> bool {
        let v = self.order[d];
        while (self.next[d] as usize) <= self.colors_used {
            let c = self.next[d];
            self.next[d] += 1;
            let ci = c as usize;
            if self.remaining[ci] == 0 || self.forbid[ci] >> v & 1 == 1 {
                continue;
            }
            self.assign(d, v, c);
            if self.feasible() {
                return true;
            }
            self.unassign(d);
        }
        false
    }

    fn assign(&mut self, d: usize, v: usize, c: u8) {
        let ci = c as usize;
        self.saved_forbid[d] = self.forbid[ci];
        self.forbid[ci] |= self.adj[v];
        self.remaining[ci] -= 1;
        self.color[v] = c;
        self.uncolored &= !(1 << v);
        let mut delta = 0;
        for &u in &self.back[d] {
            // Edge {u, v}: compare colours from the smaller label to the larger.
            let (lo, hi) = if u < v {
                (self.color[u], c)
            } else {
                (c, self.color[u])
            };
            let counts = match self.statistic {
                Statistic::Ascent => lo < hi,
                Statistic::Descent => lo > hi,
            };
            delta += counts as u32;
        }
        self.stat[d + 1] = self.stat[d] + delta;
    }

    fn unassign(&mut self, d: usize) {
        let v = self.order[d];
        let ci = self.color[v] as usize;
        self.forbid[ci] = self.saved_forbid[d];
        self.remaining[ci] += 1;
        self.color[v] = 0;
        self.uncolored |= 1 << v;
    }

    fn feasible(&self) -> bool {
        (1..=self.colors_used).all(|c| {
            let owed = self.remaining[c];
            owed == 0 || (self.uncolored & !self.forbid[c]).count_ones() >= owed
        })
    }
}

//! Labeled graphs on the vertex set `1..=n`.
//!
//! Vertices and labels are identified: vertex `i` *is* label `i`. Edges are
//! stored canonically as `(i, j)` with `i < j`, sorted lexicographically.
//! Graphs built by [`LabeledGraph::path`] additionally remember the order in
//! which labels appear along the path.

mod chromatic;
mod pattern;
mod text;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

pub use chromatic::chromatic_polynomial_value;
pub use pattern::{ad_pattern, ADPattern, Letter};
pub use text::parse_graph;

/// Largest vertex count the engine's bitmask representation supports.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    path_order: Option<Vec<usize>>,
}

impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for LabeledGraph {}

impl Hash for LabeledGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

/// The two colour classes of a connected bipartite graph, or the marker for
/// an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// `a` contains vertex 1.
    Parts { a: Vec<usize>, b: Vec<usize> },
    NotBipartite,
}

impl LabeledGraph {
    /// Builds a graph from an arbitrary edge list, canonicalizing each pair.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewVertices { min: 1, got: 0 });
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut seen = BTreeSet::new();
        for (i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            let e = (i.min(j), i.max(j));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(LabeledGraph {
            n,
            edges: seen.into_iter().collect(),
            path_order: None,
        })
    }

    /// The path whose `i`-th position carries `labeling[i]`.
    pub fn path(labeling: &[usize]) -> Result<Self> {
        validate_permutation(labeling)?;
        let edges = labeling.windows(2).map(|w| (w[0], w[1]));
        let mut g = LabeledGraph::new(labeling.len(), edges)?;
        g.path_order = Some(labeling.to_vec());
        Ok(g)
    }

    /// The path with labels `1, 2, ..., n` in order.
    pub fn natural_path(n: usize) -> Result<Self> {
        LabeledGraph::path(&(1..=n).collect::<Vec<_>>())
    }

    /// The star `K_{1,n-1}` with the given central vertex.
    pub fn star(n: usize, center: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { min: 3, got: n });
        }
        if center == 0 || center > n {
            return Err(Error::VertexOutOfRange { vertex: center, n });
        }
        LabeledGraph::new(n, (1..=n).filter(|&j| j != center).map(|j| (center, j)))
    }

    /// A uniformly random labeled tree on `n` vertices, drawn through a
    /// random Prüfer sequence.
    pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        match n {
            0 => return Err(Error::TooFewVertices { min: 1, got: 0 }),
            1 => return LabeledGraph::new(1, []),
            2 => return LabeledGraph::new(2, [(1, 2)]),
            _ => {}
        }
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
        let mut degree = vec![1usize; n + 1];
        for &v in &code {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
        for &v in &code {
            let leaf = leaves.pop_first().expect("a Prüfer decoding always has a leaf");
            edges.push((leaf, v));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaves.insert(v);
            }
        }
        let rest: Vec<usize> = leaves.into_iter().collect();
        edges.push((rest[0], rest[1]));
        LabeledGraph::new(n, edges)
    }

    /// A random labeled path: a uniformly shuffled labeling of `1..=n`.
    pub fn random_path<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut labeling: Vec<usize> = (1..=n).collect();
        labeling.shuffle(rng);
        LabeledGraph::path(&labeling)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Label order along the path, when the graph was built as a path.
    pub fn path_order(&self) -> Option<&[usize]> {
        self.path_order.as_deref()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    /// Neighbour lists indexed by vertex (index 0 unused).
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    /// Relabels every vertex `i` as `n + 1 - i`.
    pub fn flip(&self) -> LabeledGraph {
        let n = self.n;
        let f = |i: usize| n + 1 - i;
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(i, j)| (f(j), f(i)))
            .collect();
        edges.sort_unstable();
        LabeledGraph {
            n,
            edges,
            path_order: self
                .path_order
                .as_ref()
                .map(|order| order.iter().map(|&i| f(i)).collect()),
        }
    }

    /// Visiting order: path positions for paths, otherwise breadth-first from
    /// vertex 1 (restarting at the smallest unvisited vertex per component).
    pub fn traversal_order(&self) -> Vec<usize> {
        if let Some(order) = &self.path_order {
            return order.clone();
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.n + 1];
        let mut order = Vec::with_capacity(self.n);
        for root in 1..=self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                let mut next: Vec<usize> = adj[v].iter().copied().filter(|&u| !seen[u]).collect();
                next.sort_unstable();
                for u in next {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Two-colours a connected graph starting from vertex 1.
    pub fn bipartition(&self) -> Result<Bipartition> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let adj = self.neighbors();
        let mut side: Vec<Option<bool>> = vec![None; self.n + 1];
        side[1] = Some(false);
        let mut queue = VecDeque::from([1]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("queued vertices are coloured");
            for &u in &adj[v] {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        queue.push_back(u);
                    }
                    Some(t) if t == s => return Ok(Bipartition::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        let (a, b) = (1..=self.n).partition(|&v| side[v] == Some(false));
        Ok(Bipartition::Parts { a, b })
    }
}

impl fmt::Display for LabeledGraph {
    /// Writes the graph in the text format accepted by [`parse_graph`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(order) = &self.path_order {
            let labels: Vec<String> = order.iter().map(|v| v.to_string()).collect();
            return write!(f, "path: {}", labels.join(" "));
        }
        write!(f, "n={}", self.n)?;
        for (i, j) in &self.edges {
            write!(f, "\n{i} {j}")?;
        }
        Ok(())
    }
}

pub(crate) fn validate_permutation(labeling: &[usize]) -> Result<()> {
    let n = labeling.len();
    if n == 0 {
        return Err(Error::NotAPermutation {
            n,
            reason: "empty labeling".into(),
        });
    }
    let mut seen = vec![false; n + 1];
    for &v in labeling {
        if v == 0 || v > n {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("label {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("label {v} repeated"),
            });
        }
    }
    Ok(())
}

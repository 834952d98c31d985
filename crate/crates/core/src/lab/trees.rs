use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::engine::{cqf, palette_coefficient, Statistic};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, LabeledGraph};
use crate::qsym::{Composition, QPolynomial};

#[derive(Debug, Clone, Serialize)]
pub struct StarVerdict {
    pub center: usize,
    pub palindromic: bool,
    pub predicted_palindromic: bool,
    pub symmetric: bool,
    /// `c_(1,n-1) = q^(n-center)`.
    pub head_is_single_term: bool,
    /// `c_(n-1,1) = q^(center-1)`.
    pub tail_is_single_term: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StarTable {
    pub n: usize,
    pub rows: Vec<StarVerdict>,
}

impl StarTable {
    /// Palindromic iff `n` is odd and the center is `(n+1)/2`, never
    /// symmetric once `n >= 4`, and both single-term coefficients as stated.
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| {
            r.palindromic == r.predicted_palindromic
                && (self.n < 4 || !r.symmetric)
                && r.head_is_single_term
                && r.tail_is_single_term
        })
    }
}

fn is_monomial(p: &QPolynomial, exponent: usize) -> bool {
    p.as_single_term() == Some((BigUint::from(1u32), exponent))
}

/// The star CQF for every center label.
pub fn verify_star(n: usize) -> Result<StarTable> {
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, got: n });
    }
    let head = Composition::new(vec![1, n - 1])?;
    let tail = head.reverse();
    let rows = (1..=n)
        .map(|center| {
            let g = LabeledGraph::star(n, center)?;
            let q = cqf(&g);
            Ok(StarVerdict {
                center,
                palindromic: q.is_palindromic(g.edge_count()),
                predicted_palindromic: n % 2 == 1 && center == n.div_ceil(2),
                symmetric: q.is_symmetric(),
                head_is_single_term: is_monomial(&q.coeff(&head), n - center),
                tail_is_single_term: is_monomial(&q.coeff(&tail), center - 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StarTable { n, rows })
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum BipartiteVerdict {
    Checked {
        graph: String,
        /// Sizes of the part containing vertex 1 and of the other part.
        a: usize,
        b: usize,
        edges: usize,
        /// Exponent of `c_(a,b)`, if it is a single term `q^r`.
        r: Option<usize>,
        /// Exponent of `c_(b,a)`, if it is a single term `q^s`.
        s: Option<usize>,
        /// `(α, i)` with `[q^i] c_α ≠ [q^(m-i)] c_α`, taken from `c_(a,b)`.
        nonpalindromic_witness: Option<(Composition, usize)>,
        holds: bool,
    },
    Skipped {
        graph: String,
        reason: String,
    },
}

impl BipartiteVerdict {
    pub fn holds(&self) -> Option<bool> {
        match self {
            BipartiteVerdict::Checked { holds, .. } => Some(*holds),
            BipartiteVerdict::Skipped { .. } => None,
        }
    }
}

fn one_line(g: &LabeledGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
    format!("n={} {}", g.vertex_count(), edges.join(" "))
}

/// Checks a connected bipartite graph with an odd number of edges and parts
/// of different sizes; anything else is skipped with the reason.
pub fn verify_bipartite_graph(g: &LabeledGraph) -> Result<BipartiteVerdict> {
    let graph = one_line(g);
    let skip = |reason: &str| {
        Ok(BipartiteVerdict::Skipped {
            graph: graph.clone(),
            reason: reason.to_string(),
        })
    };
    if !g.is_connected() {
        return skip("not connected");
    }
    let (part_a, part_b) = match g.bipartition()? {
        Bipartition::NotBipartite => return skip("not bipartite"),
        Bipartition::Parts { a, b } => (a, b),
    };
    let m = g.edge_count();
    if m.is_multiple_of(2) {
        return skip("even number of edges");
    }
    if part_a.len() == part_b.len() {
        return skip("equal bipartition");
    }
    let (a, b) = (part_a.len(), part_b.len());
    let ab = Composition::new(vec![a, b])?;
    let ba = ab.reverse();
    let c_ab = palette_coefficient(g, &ab, Statistic::Ascent);
    let c_ba = palette_coefficient(g, &ba, Statistic::Ascent);
    let ascents_from_a = g
        .edges()
        .iter()
        .filter(|&&(i, j)| part_a.contains(&i) && part_b.contains(&j))
        .count();
    let r = c_ab.as_single_term().filter(|(c, _)| *c == BigUint::from(1u32)).map(|(_, e)| e);
    let s = c_ba.as_single_term().filter(|(c, _)| *c == BigUint::from(1u32)).map(|(_, e)| e);
    let nonpalindromic_witness = c_ab.palindrome_mismatch(m).map(|i| (ab.clone(), i));
    let holds = r == Some(ascents_from_a)
        && s == Some(m - ascents_from_a)
        && nonpalindromic_witness.is_some();
    Ok(BipartiteVerdict::Checked {
        graph,
        a,
        b,
        edges: m,
        r,
        s,
        nonpalindromic_witness,
        holds,
    })
}

pub fn verify_bipartite(sample: &[LabeledGraph]) -> Result<Vec<BipartiteVerdict>> {
    sample.iter().map(verify_bipartite_graph).collect()
}

/// `count` random labeled trees whose sizes cycle through `sizes`, keeping
/// only trees with parts of different sizes. Deterministic in `seed`.
pub fn random_unequal_trees(count: usize, sizes: &[usize], seed: u64) -> Result<Vec<LabeledGraph>> {
    if sizes.is_empty() || sizes.iter().any(|&n| n < 3) {
        return Err(Error::ParameterOutOfRange(
            "tree sizes must be nonempty and at least 3".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut next = 0;
    while out.len() < count {
        let n = sizes[next % sizes.len()];
        let t = LabeledGraph::random_tree(n, &mut rng)?;
        if let Bipartition::Parts { a, b } = t.bipartition()? {
            if a.len() != b.len() {
                out.push(t);
                next += 1;
            }
        }
    }
    Ok(out)
}

/// The full CQF is nonpalindromic; used to cross-check the single-coefficient
/// witness on small graphs.
pub fn is_nonpalindromic(g: &LabeledGraph) -> bool {
    !cqf(g).is_palindromic(g.edge_count())
}

use num_bigint::BigUint;

use super::{statistic_value, Coloring, Statistic};
use crate::graph::LabeledGraph;
use crate::qsym::{Composition, QPolynomial};

/// `c_α(q)` by plain backtracking: every arrangement of the palette over the
/// vertices `1..=n` (in label order) is generated, and properness and the
/// statistic are only checked once the colouring is complete.
pub fn palette_coefficient_oracle(
    g: &LabeledGraph,
    palette: &Composition,
    statistic: Statistic,
) -> QPolynomial {
    let n = g.vertex_count();
    let mut counts = vec![0u64; g.edge_count() + 1];
    if palette.size() == n {
        let mut remaining: Vec<usize> = palette.parts().to_vec();
        let mut colors = Vec::with_capacity(n);
        arrange(g, statistic, &mut remaining, &mut colors, &mut counts);
    }
    QPolynomial::from_coeffs(counts.into_iter().map(BigUint::from).collect())
}

fn arrange(
    g: &LabeledGraph,
    statistic: Statistic,
    remaining: &mut [usize],
    colors: &mut Vec<u32>,
    counts: &mut [u64],
) {
    if colors.len() == g.vertex_count() {
        let coloring = Coloring::new(colors.clone());
        if coloring.is_proper(g) {
            counts[statistic_value(g, &coloring, statistic)] += 1;
        }
        return;
    }
    for c in 0..remaining.len() {
        if remaining[c] == 0 {
            continue;
        }
        remaining[c] -= 1;
        colors.push(c as u32 + 1);
        arrange(g, statistic, remaining, colors, counts);
        colors.pop();
        remaining[c] += 1;
    }
}

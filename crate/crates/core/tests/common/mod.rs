#![allow(dead_code)]

use cqf_core::{Composition, LabeledGraph, QPolynomial, QSymExpansion};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn c(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

pub fn p(coeffs: &[u64]) -> QPolynomial {
    QPolynomial::from_u64s(coeffs)
}

/// Five-term expansion on four vertices and three edges, coefficients
/// listed constant term first.
pub fn expansion4(terms: &[(&[usize], &[u64])]) -> QSymExpansion {
    QSymExpansion::from_terms(4, Some(3), terms.iter().map(|(a, q)| (c(a), p(q)))).unwrap()
}

/// `3412`: (5q^3+7q^2+7q+5)M(1,1,1,1) + (2q^3+q^2+q+2)M(1,1,2)
/// + (q^3+2q^2+2q+1)M(1,2,1) + (2q^3+q^2+q+2)M(2,1,1) + (q^3+1)M(2,2).
pub fn expansion_3412() -> QSymExpansion {
    expansion4(&[
        (&[1, 1, 1, 1], &[5, 7, 7, 5]),
        (&[1, 1, 2], &[2, 1, 1, 2]),
        (&[1, 2, 1], &[1, 2, 2, 1]),
        (&[2, 1, 1], &[2, 1, 1, 2]),
        (&[2, 2], &[1, 0, 0, 1]),
    ])
}

/// `2431`: (3q^3+9q^2+9q+3)M(1,1,1,1) + (2q^2+3q+1)M(1,1,2)
/// + (q^3+2q^2+2q+1)M(1,2,1) + (q^3+3q^2+2q)M(2,1,1) + (q^2+q)M(2,2).
pub fn expansion_2431() -> QSymExpansion {
    expansion4(&[
        (&[1, 1, 1, 1], &[3, 9, 9, 3]),
        (&[1, 1, 2], &[1, 3, 2]),
        (&[1, 2, 1], &[1, 2, 2, 1]),
        (&[2, 1, 1], &[0, 2, 3, 1]),
        (&[2, 2], &[0, 1, 1]),
    ])
}

pub fn all_paths(n: usize) -> Vec<LabeledGraph> {
    (1..=n)
        .permutations(n)
        .map(|labeling| LabeledGraph::path(&labeling).unwrap())
        .collect()
}

pub fn all_stars(n: usize) -> Vec<LabeledGraph> {
    (1..=n).map(|j| LabeledGraph::star(n, j).unwrap()).collect()
}

/// 100 labeled trees with 2 to 7 vertices, fixed seed.
pub fn random_trees() -> Vec<LabeledGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..100)
        .map(|i| LabeledGraph::random_tree(2 + i % 6, &mut rng).unwrap())
        .collect()
}

/// A few graphs with cycles.
pub fn cyclic_graphs() -> Vec<LabeledGraph> {
    vec![
        LabeledGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap(),
        LabeledGraph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap(),
        LabeledGraph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap(),
        LabeledGraph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]).unwrap(),
        LabeledGraph::new(6, [(1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1), (1, 2)]).unwrap(),
    ]
}

/// Every labeled path on at most 6 vertices, every star on 3 to 6 vertices,
/// the random trees and the cyclic graphs.
pub fn corpus() -> Vec<LabeledGraph> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.extend(all_paths(n));
    }
    for n in 3..=6 {
        out.extend(all_stars(n));
    }
    out.extend(random_trees());
    out.extend(cyclic_graphs());
    out
}

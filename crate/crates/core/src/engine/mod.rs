//! Computes `X(G; x, q)` in the monomial quasisymmetric basis.
//!
//! The coefficient of `M_α` counts proper colourings that use colour `i`
//! exactly `α_i` times (colours `1..=ℓ(α)` only), weighted by `q^asc`. Each
//! palette is an independent work unit; [`cqf_fast`] runs them in parallel on
//! the current rayon pool and [`cqf_oracle`] runs a plain, unpruned
//! enumeration sequentially. The two must agree.

mod oracle;
mod search;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::graph::LabeledGraph;
use crate::qsym::{compositions_of, Composition, QPolynomial, QSymExpansion};

pub use oracle::palette_coefficient_oracle;
use search::PaletteSearch;

/// Which edge statistic weights a colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// Edges `ij`, `i < j`, with `c(i) < c(j)`.
    Ascent,
    /// Edges `ij`, `i < j`, with `c(i) > c(j)`.
    Descent,
}

/// A colour (positive integer) for every vertex `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    /// `colors[v - 1]` is the colour of vertex `v`.
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }

    /// Colours listed along a path: `by_position[i]` colours `order[i]`.
    pub fn from_positions(order: &[usize], by_position: &[u32]) -> Self {
        let mut colors = vec![0; order.len()];
        for (&v, &c) in order.iter().zip(by_position) {
            colors[v - 1] = c;
        }
        Coloring(colors)
    }

    pub fn color(&self, v: usize) -> u32 {
        self.0[v - 1]
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn is_proper(&self, g: &LabeledGraph) -> bool {
        g.edges().iter().all(|&(i, j)| self.color(i) != self.color(j))
    }

    /// The composition whose `i`-th part is the multiplicity of colour `i`,
    /// if the colours used are exactly `1..=ℓ`.
    pub fn palette(&self) -> Option<Composition> {
        palette_of(&self.0)
    }
}

pub(crate) fn palette_of(colors: &[u32]) -> Option<Composition> {
    let max = *colors.iter().max()? as usize;
    let mut counts = vec![0usize; max];
    for &c in colors {
        if c == 0 {
            return None;
        }
        counts[c as usize - 1] += 1;
    }
    Composition::new(counts).ok()
}

pub fn ascent_number(g: &LabeledGraph, c: &Coloring) -> usize {
    g.edges().iter().filter(|&&(i, j)| c.color(i) < c.color(j)).count()
}

pub fn descent_number(g: &LabeledGraph, c: &Coloring) -> usize {
    g.edges().iter().filter(|&&(i, j)| c.color(i) > c.color(j)).count()
}

pub fn statistic_value(g: &LabeledGraph, c: &Coloring, statistic: Statistic) -> usize {
    match statistic {
        Statistic::Ascent => ascent_number(g, c),
        Statistic::Descent => descent_number(g, c),
    }
}

/// Proper colourings of `g` with palette `α`, each produced once. Empty when
/// `α` is not a composition of the vertex count.
pub fn colorings_with_palette(g: &LabeledGraph, palette: &Composition) -> PaletteColorings {
    PaletteColorings {
        search: PaletteSearch::new(g, palette, Statistic::Ascent),
    }
}

/// Streaming iterator returned by [`colorings_with_palette`].
#[derive(Debug, Clone)]
pub struct PaletteColorings {
    search: PaletteSearch,
}

impl Iterator for PaletteColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        self.search
            .advance()
            .then(|| Coloring(self.search.colors().iter().map(|&c| c as u32).collect()))
    }
}

/// `c_α(q)` for a single palette via the pruned search.
pub fn palette_coefficient(g: &LabeledGraph, palette: &Composition, statistic: Statistic) -> QPolynomial {
    let mut counts = vec![0u64; g.edge_count() + 1];
    let mut search = PaletteSearch::new(g, palette, statistic);
    while search.advance() {
        counts[search.statistic() as usize] += 1;
    }
    QPolynomial::from_coeffs(counts.into_iter().map(BigUint::from).collect())
}

/// The chromatic quasisymmetric function, weighting colourings by `statistic`.
pub fn cqf_with(g: &LabeledGraph, statistic: Statistic) -> QSymExpansion {
    let palettes = compositions_of(g.vertex_count()).expect("graphs have at least one vertex");
    let coefficients: Vec<(Composition, QPolynomial)> = palettes
        .into_par_iter()
        .map(|alpha| {
            let poly = palette_coefficient(g, &alpha, statistic);
            (alpha, poly)
        })
        .collect();
    QSymExpansion::from_terms(g.vertex_count(), Some(g.edge_count()), coefficients)
        .expect("palette coefficients have degree at most |E|")
}

/// `X(G; x, q)` via the pruned, parallel search.
pub fn cqf_fast(g: &LabeledGraph) -> QSymExpansion {
    cqf_with(g, Statistic::Ascent)
}

/// `X(G; x, q)` via unpruned enumeration of palette arrangements.
pub fn cqf_oracle(g: &LabeledGraph) -> QSymExpansion {
    let palettes = compositions_of(g.vertex_count()).expect("graphs have at least one vertex");
    QSymExpansion::from_terms(
        g.vertex_count(),
        Some(g.edge_count()),
        palettes.into_iter().map(|alpha| {
            let poly = palette_coefficient_oracle(g, &alpha, Statistic::Ascent);
            (alpha, poly)
        }),
    )
    .expect("palette coefficients have degree at most |E|")
}

pub fn cqf(g: &LabeledGraph) -> QSymExpansion {
    cqf_fast(g)
}

/// `Σ x^c q^{des(c)}`; equals `cqf(g.flip())`.
pub fn cqf_descent(g: &LabeledGraph) -> QSymExpansion {
    cqf_with(g, Statistic::Descent)
}

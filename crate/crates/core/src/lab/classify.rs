use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{cqf, palette_coefficient_oracle, Statistic};
use crate::error::{Error, Result};
use crate::graph::{ADPattern, LabeledGraph, Letter};
use crate::qsym::{Composition, Palindromicity, Symmetry};
use crate::ribbon::RibbonDiagram;

/// Verdicts for the paths with one ad-pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternVerdict {
    pub pattern: ADPattern,
    pub composition: Composition,
    /// The labeling the CQF was computed on.
    pub labeling: Vec<usize>,
    pub natural: bool,
    pub symmetric: bool,
    pub palindromic: bool,
    /// `(α, β)` rearrangements with `c_α ≠ c_β`.
    pub witness: Option<(Composition, Composition)>,
    /// `(α, i)` with `[q^i] c_α ≠ [q^(m-i)] c_α`.
    pub palindromic_witness: Option<(Composition, usize)>,
    /// The symmetry witness recomputed with the unpruned enumeration.
    pub witness_confirmed: bool,
    /// The pattern of the same path read from the other end.
    pub reversal_partner: ADPattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub patterns: Vec<PatternVerdict>,
    pub symmetric_count: usize,
}

impl ClassificationReport {
    /// Symmetric exactly for `a^(n-1)` and `d^(n-1)`, every symmetric
    /// pattern palindromic, and every witness confirmed.
    pub fn theorem_holds(&self) -> bool {
        self.patterns.iter().all(|p| {
            p.symmetric == p.natural && (!p.symmetric || p.palindromic) && p.witness_confirmed
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.n.max(7) + 1;
        let _ = writeln!(
            out,
            "{:<width$} {:<22} {:<9} {:<11} witness",
            "pattern", "composition", "symmetric", "palindromic"
        );
        for p in &self.patterns {
            let witness = match &p.witness {
                Some((a, b)) => format!("{a}/{b}"),
                None => "-".to_string(),
            };
            let pattern = if p.pattern.is_empty() {
                "-".to_string()
            } else {
                p.pattern.to_string()
            };
            let _ = writeln!(
                out,
                "{:<width$} {:<22} {:<9} {:<11} {}",
                pattern,
                p.composition.to_string(),
                yes_no(p.symmetric),
                yes_no(p.palindromic),
                witness
            );
        }
        let _ = writeln!(
            out,
            "{} of {} patterns symmetric",
            self.symmetric_count,
            self.patterns.len()
        );
        out
    }
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn is_natural(w: &ADPattern) -> bool {
    w.letters().iter().all(|&l| l == Letter::A) || w.letters().iter().all(|&l| l == Letter::D)
}

/// Verdicts for one pattern, computed on its canonical labeling.
pub fn classify_pattern(w: &ADPattern) -> PatternVerdict {
    let labeling = w.canonical_labeling();
    let g = LabeledGraph::path(&labeling).expect("canonical labelings are permutations");
    let q = cqf(&g);
    let symmetry = q.symmetry();
    let palindromicity = q.palindromicity(g.edge_count());
    let witness_confirmed = match &symmetry {
        Symmetry::Symmetric => true,
        Symmetry::Nonsymmetric { alpha, beta } => {
            palette_coefficient_oracle(&g, alpha, Statistic::Ascent)
                != palette_coefficient_oracle(&g, beta, Statistic::Ascent)
        }
    };
    PatternVerdict {
        pattern: w.clone(),
        composition: RibbonDiagram::from_pattern(w).composition().clone(),
        labeling,
        natural: is_natural(w),
        symmetric: symmetry.holds(),
        palindromic: palindromicity.holds(),
        witness: match symmetry {
            Symmetry::Symmetric => None,
            Symmetry::Nonsymmetric { alpha, beta } => Some((alpha, beta)),
        },
        palindromic_witness: match palindromicity {
            Palindromicity::Palindromic => None,
            Palindromicity::Nonpalindromic { alpha, i } => Some((alpha, i)),
        },
        witness_confirmed,
        reversal_partner: w.reversal_partner(),
    }
}

/// Computes the CQF once per ad-pattern of length `n - 1` (in parallel) and
/// records symmetry and palindromicity with witnesses.
pub fn classify_paths(n: usize) -> Result<ClassificationReport> {
    if n == 0 {
        return Err(Error::TooFewVertices { min: 1, got: 0 });
    }
    let patterns: Vec<PatternVerdict> = ADPattern::all(n - 1).par_iter().map(classify_pattern).collect();
    let symmetric_count = patterns.iter().filter(|p| p.symmetric).count();
    Ok(ClassificationReport {
        n,
        patterns,
        symmetric_count,
    })
}

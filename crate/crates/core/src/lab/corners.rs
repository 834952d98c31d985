use num_bigint::BigUint;
use serde::Serialize;

use super::sets::canonical_path;
use crate::engine::{cqf, palette_coefficient, Statistic};
use crate::error::{Error, Result};
use crate::qsym::{Composition, Palindromicity};
use crate::ribbon::RibbonDiagram;

#[derive(Debug, Clone, Serialize)]
pub struct CornerVerdict {
    pub composition: Composition,
    pub lu: usize,
    pub rl: usize,
    /// `(k, 1, ..., 1, j)` with `k` LU and `j` RL corners.
    pub alpha: Composition,
    #[serde(serialize_with = "as_number")]
    pub top_alpha: BigUint,
    #[serde(serialize_with = "as_number")]
    pub top_reversed: BigUint,
    pub palindromicity: Palindromicity,
}

fn as_number<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n: serde_json::Number = x.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

impl CornerVerdict {
    pub fn holds(&self) -> bool {
        self.top_alpha > BigUint::ZERO && self.top_reversed == BigUint::ZERO && !self.palindromicity.holds()
    }
}

/// For a ribbon with different LU and RL counts `k` and `j`, checks
/// `[q^|E|] c_(k,1,..,1,j) > 0 = [q^|E|] c_(j,1,..,1,k)` and that the CQF of
/// the path is not palindromic.
pub fn check_corner_proposition(ribbon: &RibbonDiagram) -> Result<CornerVerdict> {
    let corners = ribbon.corners();
    let (k, j) = (corners.lu.len(), corners.rl.len());
    if k == j {
        return Err(Error::Hypothesis(format!(
            "{} has {k} LU and {k} RL corners",
            ribbon.composition()
        )));
    }
    let n = ribbon.len();
    let alpha = Composition::with_ends(k, j, n)?;
    let g = canonical_path(ribbon);
    let m = g.edge_count();
    let top = |a: &Composition| palette_coefficient(&g, a, Statistic::Ascent).coeff(m);
    Ok(CornerVerdict {
        composition: ribbon.composition().clone(),
        lu: k,
        rl: j,
        top_alpha: top(&alpha),
        top_reversed: top(&alpha.reverse()),
        palindromicity: cqf(&g).palindromicity(m),
        alpha,
    })
}

use std::fmt;

use serde::Serialize;

use super::regular::in_subribbon_113_family;
use crate::error::{Error, Result};
use crate::ribbon::RibbonDiagram;

/// Which nonsymmetry argument applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProofCase {
    /// LU and RL corner counts differ.
    CornerMismatch,
    /// At least two rows, all of length at least 2.
    StackedRows,
    /// Contains `(1,1,3)`, begins with `(1,3)` or ends with `(1,1,2)`.
    Subribbon113,
    /// Regular and outside the `(1,1,3)` family.
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Direct,
    Reflected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CaseLabel {
    pub case: ProofCase,
    pub orientation: Orientation,
}

impl CaseLabel {
    pub fn name(&self) -> &'static str {
        match (self.case, self.orientation) {
            (ProofCase::CornerMismatch, _) => "corner-mismatch",
            (ProofCase::StackedRows, Orientation::Direct) => "stacked-rows",
            (ProofCase::StackedRows, Orientation::Reflected) => "stacked-columns",
            (ProofCase::Subribbon113, Orientation::Direct) => "subribbon-113",
            (ProofCase::Subribbon113, Orientation::Reflected) => "subribbon-311",
            (ProofCase::Regular, _) => "regular",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation {
            Orientation::Direct => f.write_str(self.name()),
            Orientation::Reflected => write!(f, "{} (reflected)", self.name()),
        }
    }
}

fn applies(case: ProofCase, r: &RibbonDiagram) -> bool {
    match case {
        ProofCase::CornerMismatch => {
            let c = r.corners();
            c.lu.len() != c.rl.len()
        }
        ProofCase::StackedRows => {
            let parts = r.composition().parts();
            parts.len() >= 2 && parts.iter().all(|&p| p >= 2)
        }
        ProofCase::Subribbon113 => in_subribbon_113_family(r),
        ProofCase::Regular => r.is_regular() && !in_subribbon_113_family(r),
    }
}

/// Every case whose hypotheses hold for the ribbon or its reflection, in
/// the order corner mismatch, stacked rows, `(1,1,3)` family, regular.
/// Fails for `(n)` and `(1^n)`, and if nothing applies.
pub fn main_theorem_case_analysis(ribbon: &RibbonDiagram) -> Result<Vec<CaseLabel>> {
    if ribbon.pattern().letters().windows(2).all(|w| w[0] == w[1]) {
        return Err(Error::Hypothesis(format!(
            "{} is the ribbon of a naturally labeled path",
            ribbon.composition()
        )));
    }
    let reflected = ribbon.reflect();
    let mut labels = Vec::new();
    for case in [
        ProofCase::CornerMismatch,
        ProofCase::StackedRows,
        ProofCase::Subribbon113,
        ProofCase::Regular,
    ] {
        for (orientation, r) in [(Orientation::Direct, ribbon), (Orientation::Reflected, &reflected)] {
            if applies(case, r) {
                labels.push(CaseLabel { case, orientation });
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::Hypothesis(format!(
            "no case of the argument covers {}",
            ribbon.composition()
        )));
    }
    Ok(labels)
}

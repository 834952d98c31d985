use serde::Serialize;

use crate::engine::{ascent_number, colorings_with_palette, Coloring};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::qsym::Composition;
use crate::ribbon::{max_ascent_characterization, RibbonDiagram, RibbonTableau};

/// Which of the three sets a [`ColoringSet`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    /// Proper, maximum ascents, palette `(k, 1, 1, ...)`.
    A,
    /// Proper, maximum ascents, palette with a block of `k` copies of one colour.
    B,
    /// Rows strictly increasing, columns weakly increasing, palette of `B`.
    Bprime,
}

/// Where the sets come from: the stacked-rows argument with its `(i, b)` or
/// the regular-ribbon argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetContext {
    StackedRows { i: usize, b: usize },
    Regular,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringSet {
    pub role: Role,
    pub context: SetContext,
    /// `k`: number of rows (stacked rows) or LU corners (regular).
    pub k: usize,
    pub palette: Composition,
    #[serde(skip)]
    pub ribbon: RibbonDiagram,
    #[serde(serialize_with = "display_all")]
    pub members: Vec<RibbonTableau>,
}

fn display_all<S: serde::Serializer>(ts: &[RibbonTableau], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ts.iter().map(|t| t.to_string()))
}

impl ColoringSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &RibbonTableau) -> bool {
        self.members.contains(t)
    }
}

/// The path whose ribbon is `ribbon`, labeled canonically.
pub fn canonical_path(ribbon: &RibbonDiagram) -> LabeledGraph {
    LabeledGraph::path(&ribbon.pattern().canonical_labeling())
        .expect("canonical labelings are permutations")
}

/// Ascent number of the colouring of the canonical path that puts the
/// tableau's box colours along the path.
pub fn engine_ascents(t: &RibbonTableau) -> usize {
    let labeling = t.diagram().pattern().canonical_labeling();
    let g = LabeledGraph::path(&labeling).expect("canonical labelings are permutations");
    ascent_number(&g, &Coloring::from_positions(&labeling, t.colors()))
}

/// Proper with `|E|` ascents, decided by the engine and cross-checked against
/// the row/column characterization.
pub fn has_max_ascents(t: &RibbonTableau) -> Result<bool> {
    if !t.is_proper() {
        return Ok(false);
    }
    let by_engine = engine_ascents(t) + 1 == t.diagram().len();
    if by_engine != max_ascent_characterization(t) {
        return Err(Error::Hypothesis(format!(
            "ascent count and row/column characterization disagree on {t}"
        )));
    }
    Ok(by_engine)
}

/// Proper, maximum ascents and the given palette.
pub fn is_max_ascent_with_palette(t: &RibbonTableau, palette: &Composition) -> Result<bool> {
    Ok(t.palette().as_ref() == Some(palette) && has_max_ascents(t)?)
}

/// Rows strictly increasing, columns weakly increasing top to bottom, and
/// the given palette.
pub fn is_weak_column_filling(t: &RibbonTableau, palette: &Composition) -> bool {
    t.palette().as_ref() == Some(palette) && t.rows_increase() && t.columns_increase_downward(false)
}

/// Every proper filling of `ribbon` with maximum ascents and this palette.
pub fn max_ascent_fillings(ribbon: &RibbonDiagram, palette: &Composition) -> Result<Vec<RibbonTableau>> {
    let g = canonical_path(ribbon);
    let edges = g.edge_count();
    let mut out = Vec::new();
    for col in colorings_with_palette(&g, palette) {
        if ascent_number(&g, &col) != edges {
            continue;
        }
        let t = RibbonTableau::from_coloring(&g, &col)?;
        if !max_ascent_characterization(&t) {
            return Err(Error::Hypothesis(format!(
                "maximum-ascent colouring {t} fails the row/column characterization"
            )));
        }
        out.push(t);
    }
    out.sort_by(|a, b| a.colors().cmp(b.colors()));
    Ok(out)
}

/// Every filling with strictly increasing rows and weakly increasing columns
/// (top to bottom) using this palette; not necessarily proper.
pub fn weak_column_fillings(ribbon: &RibbonDiagram, palette: &Composition) -> Vec<RibbonTableau> {
    if palette.size() != ribbon.len() {
        return Vec::new();
    }
    let mut remaining: Vec<usize> = palette.parts().to_vec();
    let mut colors = Vec::with_capacity(ribbon.len());
    let mut out = Vec::new();
    fill_weak(ribbon, &mut remaining, &mut colors, &mut out);
    out
}

fn fill_weak(
    ribbon: &RibbonDiagram,
    remaining: &mut [usize],
    colors: &mut Vec<u32>,
    out: &mut Vec<RibbonTableau>,
) {
    let cell = colors.len();
    if cell == ribbon.len() {
        out.push(RibbonTableau::new(ribbon.clone(), colors.clone()).expect("sizes match"));
        return;
    }
    // Cells come in ribbon order, so the left and lower neighbours are set.
    let left = ribbon.left_of(cell).map(|j| colors[j]);
    let below = ribbon.below(cell).map(|j| colors[j]);
    for c in 1..=remaining.len() as u32 {
        let ci = c as usize - 1;
        if remaining[ci] == 0 || left.is_some_and(|l| l >= c) || below.is_some_and(|b| b < c) {
            continue;
        }
        remaining[ci] -= 1;
        colors.push(c);
        fill_weak(ribbon, remaining, colors, out);
        colors.pop();
        remaining[ci] += 1;
    }
}

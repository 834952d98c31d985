use std::fmt;

use super::RibbonDiagram;
use crate::engine::{palette_of, Coloring};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::qsym::Composition;

/// A ribbon diagram with a positive colour in every box, listed in ribbon
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RibbonTableau {
    diagram: RibbonDiagram,
    colors: Vec<u32>,
}

impl RibbonTableau {
    pub fn new(diagram: RibbonDiagram, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != diagram.len() {
            return Err(Error::ParameterOutOfRange(format!(
                "{} colours for a ribbon with {} boxes",
                colors.len(),
                diagram.len()
            )));
        }
        if colors.contains(&0) {
            return Err(Error::ParameterOutOfRange("colours must be positive".into()));
        }
        Ok(RibbonTableau { diagram, colors })
    }

    /// Rows listed bottom row first, each left to right.
    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let parts = rows.iter().map(|r| r.len()).collect();
        let diagram = RibbonDiagram::from_composition(&Composition::new(parts)?);
        RibbonTableau::new(diagram, rows.concat())
    }

    /// Rows listed top row first, each left to right.
    pub fn from_rows_top_down(rows: &[&[u32]]) -> Result<Self> {
        let bottom_up: Vec<&[u32]> = rows.iter().rev().copied().collect();
        RibbonTableau::from_rows(&bottom_up)
    }

    /// `RT(c)`: the colour of the `i`-th vertex along the path goes in the
    /// `i`-th box.
    pub fn from_coloring(path: &LabeledGraph, coloring: &Coloring) -> Result<Self> {
        let diagram = RibbonDiagram::of_path(path)?;
        let order = path.path_order().expect("of_path checked this is a path");
        RibbonTableau::new(diagram, order.iter().map(|&v| coloring.color(v)).collect())
    }

    pub fn diagram(&self) -> &RibbonDiagram {
        &self.diagram
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, cell: usize) -> u32 {
        self.colors[cell]
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> Vec<&[u32]> {
        self.diagram
            .rows()
            .into_iter()
            .map(|r| &self.colors[r])
            .collect()
    }

    pub(crate) fn with_colors(&self, colors: Vec<u32>) -> RibbonTableau {
        RibbonTableau {
            diagram: self.diagram.clone(),
            colors,
        }
    }

    pub fn palette(&self) -> Option<Composition> {
        palette_of(&self.colors)
    }

    /// Horizontally or vertically adjacent boxes differ.
    pub fn is_proper(&self) -> bool {
        (0..self.colors.len()).all(|i| {
            [self.diagram.right_of(i), self.diagram.above(i)]
                .into_iter()
                .flatten()
                .all(|j| self.colors[i] != self.colors[j])
        })
    }

    /// Adjacent horizontal pairs increasing left to right plus adjacent
    /// vertical pairs increasing top to bottom.
    pub fn ascent_count(&self) -> usize {
        (0..self.colors.len())
            .map(|i| {
                let right = self
                    .diagram
                    .right_of(i)
                    .is_some_and(|j| self.colors[i] < self.colors[j]);
                let up = self
                    .diagram
                    .above(i)
                    .is_some_and(|j| self.colors[j] < self.colors[i]);
                right as usize + up as usize
            })
            .sum()
    }

    /// Rows strictly increase to the right and columns strictly increase
    /// downward.
    pub fn rows_and_columns_strictly_increase(&self) -> bool {
        self.rows_increase() && self.columns_increase_downward(true)
    }

    pub fn rows_increase(&self) -> bool {
        self.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Upper box below-or-equal (`strict = false`) or below (`strict = true`)
    /// the box underneath it.
    pub fn columns_increase_downward(&self, strict: bool) -> bool {
        (0..self.colors.len()).all(|i| match self.diagram.above(i) {
            Some(j) if strict => self.colors[j] < self.colors[i],
            Some(j) => self.colors[j] <= self.colors[i],
            None => true,
        })
    }

    /// Rows top-down, numbers right-aligned in equal-width boxes.
    pub fn render(&self) -> String {
        let width = self
            .colors
            .iter()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        self.diagram.render_with(|i| self.colors[i].to_string(), width)
    }
}

/// For a proper tableau: true iff rows strictly increase rightward and
/// columns strictly increase downward, i.e. every edge of the path ascends.
pub fn max_ascent_characterization(t: &RibbonTableau) -> bool {
    t.rows_and_columns_strictly_increase()
}

impl fmt::Display for RibbonTableau {
    /// Rows bottom-up: `1,2,5 | 1,6,7 | 1,3,4,8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(" | "))
    }
}

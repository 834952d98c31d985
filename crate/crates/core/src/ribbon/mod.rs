//! Ribbon diagrams of labeled paths and the tableaux their colourings fill.

mod diagram;
mod tableau;

pub use diagram::{pattern_of, Anchor, Corners, RibbonDiagram, SubribbonMatch};
pub use tableau::{max_ascent_characterization, RibbonTableau};

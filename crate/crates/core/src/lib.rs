//! Chromatic quasisymmetric functions of labeled graphs.
//!
//! The crate computes `X(G; x, q) = Σ_α c_α(q) M_α` by enumerating proper
//! colourings palette by palette, decides symmetry and palindromicity of the
//! result, models labeled paths as ribbon diagrams, and runs exhaustive
//! checks of the classification results for paths, stars and bipartite
//! graphs.

pub mod engine;
pub mod error;
pub mod graph;
pub mod lab;
pub mod qsym;
pub mod ribbon;

pub use engine::{cqf, cqf_descent, cqf_fast, cqf_oracle, Coloring, Statistic};
pub use error::{Error, Result};
pub use graph::{ad_pattern, chromatic_polynomial_value, parse_graph, ADPattern, Bipartition, LabeledGraph, Letter};
pub use qsym::{compositions_of, Composition, Palindromicity, QPolynomial, QSymExpansion, Symmetry};
pub use ribbon::{RibbonDiagram, RibbonTableau};

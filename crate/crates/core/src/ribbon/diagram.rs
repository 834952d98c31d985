use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ad_pattern, ADPattern, LabeledGraph, Letter};
use crate::qsym::Composition;

/// A connected skew shape with no 2x2 square, read from an ad-pattern: start
/// with one box, then step right for each `a` and up for each `d`.
///
/// Cells are `(row, column)` with row 1 at the bottom, listed in ribbon order
/// (bottom-left first). Cell `i` of the ribbon is position `i` of the path.
#[derive(Debug, Clone)]
pub struct RibbonDiagram {
    composition: Composition,
    pattern: ADPattern,
    cells: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl PartialEq for RibbonDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.pattern == other.pattern
    }
}

impl Eq for RibbonDiagram {}

impl std::hash::Hash for RibbonDiagram {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.pattern.hash(state);
    }
}

/// LU and RL corners as cell indices in ribbon order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corners {
    /// No box to the left and no box above.
    pub lu: Vec<usize>,
    /// No box to the right and no box below.
    pub rl: Vec<usize>,
}

/// Where a sub-ribbon occurrence must sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Anywhere,
    /// Starts at the first (bottom-left) cell.
    Begins,
    /// Ends at the last cell.
    Ends,
}

/// A contiguous run of cells `start..start + len` in ribbon order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubribbonMatch {
    pub start: usize,
    pub len: usize,
}

impl SubribbonMatch {
    pub fn cells(&self) -> Range<usize> {
        self.start..self.start + self.len
    }
}

impl RibbonDiagram {
    pub fn from_pattern(pattern: &ADPattern) -> RibbonDiagram {
        let mut cells = Vec::with_capacity(pattern.len() + 1);
        let mut parts = vec![1];
        let (mut row, mut col) = (1, 1);
        cells.push((row, col));
        for letter in pattern.letters() {
            match letter {
                Letter::A => {
                    col += 1;
                    *parts.last_mut().expect("nonempty") += 1;
                }
                Letter::D => {
                    row += 1;
                    parts.push(1);
                }
            }
            cells.push((row, col));
        }
        let index = cells.iter().enumerate().map(|(i, &cell)| (cell, i)).collect();
        RibbonDiagram {
            composition: Composition::new(parts).expect("row lengths are positive"),
            pattern: pattern.clone(),
            cells,
            index,
        }
    }

    /// The `α` ribbon: row `i` (from the bottom) has `α_i` boxes.
    pub fn from_composition(composition: &Composition) -> RibbonDiagram {
        RibbonDiagram::from_pattern(&pattern_of(composition))
    }

    /// `RT(P)` for a graph built as a labeled path.
    pub fn of_path(g: &LabeledGraph) -> Result<RibbonDiagram> {
        let order = g
            .path_order()
            .ok_or_else(|| Error::Hypothesis("graph was not constructed as a path".into()))?;
        Ok(RibbonDiagram::from_pattern(&ad_pattern(order)?))
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn pattern(&self) -> &ADPattern {
        &self.pattern
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn row_count(&self) -> usize {
        self.composition.len()
    }

    /// Cell-index ranges of each row, bottom row first.
    pub fn rows(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.composition
            .parts()
            .iter()
            .map(|&len| {
                let r = start..start + len;
                start += len;
                r
            })
            .collect()
    }

    pub fn cell_at(&self, row: usize, col: usize) -> Option<usize> {
        self.index.get(&(row, col)).copied()
    }

    pub fn left_of(&self, i: usize) -> Option<usize> {
        let (r, c) = self.cells[i];
        c.checked_sub(1).and_then(|c| self.cell_at(r, c))
    }

    pub fn right_of(&self, i: usize) -> Option<usize> {
        let (r, c) = self.cells[i];
        self.cell_at(r, c + 1)
    }

    pub fn above(&self, i: usize) -> Option<usize> {
        let (r, c) = self.cells[i];
        self.cell_at(r + 1, c)
    }

    pub fn below(&self, i: usize) -> Option<usize> {
        let (r, c) = self.cells[i];
        r.checked_sub(1).and_then(|r| self.cell_at(r, c))
    }

    /// Geometric neighbours of cell `i`.
    pub fn adjacent(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        [self.left_of(i), self.right_of(i), self.above(i), self.below(i)]
            .into_iter()
            .flatten()
    }

    /// Reflection across the diagonal through the bottom-left corner; the
    /// ribbon of the pattern with `a` and `d` exchanged.
    pub fn reflect(&self) -> RibbonDiagram {
        RibbonDiagram::from_pattern(&self.pattern.swapped())
    }

    pub fn corners(&self) -> Corners {
        let n = self.len();
        Corners {
            lu: (0..n)
                .filter(|&i| self.left_of(i).is_none() && self.above(i).is_none())
                .collect(),
            rl: (0..n)
                .filter(|&i| self.right_of(i).is_none() && self.below(i).is_none())
                .collect(),
        }
    }

    /// Occurrences of the `β` ribbon as a contiguous run of cells: `β` sits
    /// at offset `p` iff pattern letters `p..p+|β|-1` spell `β`'s pattern.
    pub fn find_subribbon(&self, beta: &Composition, anchor: Anchor) -> Vec<SubribbonMatch> {
        let len = beta.size();
        if len > self.len() {
            return Vec::new();
        }
        let needle = pattern_of(beta);
        let hay = self.pattern.letters();
        let starts: Vec<usize> = match anchor {
            Anchor::Anywhere => (0..=self.len() - len).collect(),
            Anchor::Begins => vec![0],
            Anchor::Ends => vec![self.len() - len],
        };
        starts
            .into_iter()
            .filter(|&p| hay[p..p + len - 1] == *needle.letters())
            .map(|start| SubribbonMatch { start, len })
            .collect()
    }

    pub fn contains_subribbon(&self, beta: &Composition, anchor: Anchor) -> bool {
        !self.find_subribbon(beta, anchor).is_empty()
    }

    /// The sub-ribbon on cells `m.cells()`, as a ribbon in its own right.
    pub fn subribbon(&self, m: SubribbonMatch) -> RibbonDiagram {
        let letters = self.pattern.letters()[m.start..m.start + m.len - 1].to_vec();
        RibbonDiagram::from_pattern(&ADPattern::new(letters))
    }

    /// Regular `(2,1)` sub-ribbons: a row of length 2 followed by a row of
    /// length at least 2, or by a terminal row of length 1. Each match covers
    /// the two boxes of the short row and the first box of the next row.
    pub fn regular_subribbons(&self) -> Vec<SubribbonMatch> {
        let parts = self.composition.parts();
        let rows = self.rows();
        (0..parts.len().saturating_sub(1))
            .filter(|&i| {
                let next = parts[i + 1];
                parts[i] == 2 && (next >= 2 || (next == 1 && i + 2 == parts.len()))
            })
            .map(|i| SubribbonMatch {
                start: rows[i].start,
                len: 3,
            })
            .collect()
    }

    pub fn is_regular(&self) -> bool {
        !self.regular_subribbons().is_empty()
    }

    /// Rows top-down, `#` per box.
    pub fn render(&self) -> String {
        self.render_with(|_| "#".to_string(), 1)
    }

    pub(crate) fn render_with(&self, label: impl Fn(usize) -> String, width: usize) -> String {
        let top = self.row_count();
        let max_col = self.cells.iter().map(|&(_, c)| c).max().unwrap_or(1);
        let mut out = String::new();
        for row in (1..=top).rev() {
            let mut line = String::new();
            for col in 1..=max_col {
                if col > 1 {
                    line.push(' ');
                }
                match self.cell_at(row, col) {
                    Some(i) => line.push_str(&format!("{:>width$}", label(i))),
                    None => line.push_str(&" ".repeat(width)),
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Ad-pattern of the `α` ribbon: `α_i - 1` letters `a` per row, `d` between
/// rows.
pub fn pattern_of(composition: &Composition) -> ADPattern {
    let mut letters = Vec::with_capacity(composition.size().saturating_sub(1));
    for (i, &part) in composition.parts().iter().enumerate() {
        if i > 0 {
            letters.push(Letter::D);
        }
        letters.extend(std::iter::repeat_n(Letter::A, part - 1));
    }
    ADPattern::new(letters)
}

impl fmt::Display for RibbonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.composition)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::compositions_of;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn ribbon(parts: &[usize]) -> RibbonDiagram {
        RibbonDiagram::from_composition(&c(parts))
    }

    #[test]
    fn compositions_from_patterns() {
        let adad = RibbonDiagram::from_pattern(&"adad".parse().unwrap());
        assert_eq!(adad.composition(), &c(&[2, 2, 1]));
        assert_eq!(adad.cells(), &[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]);
        let daaa = RibbonDiagram::from_pattern(&"daaa".parse().unwrap());
        assert_eq!(daaa.composition(), &c(&[1, 4]));
        let single = RibbonDiagram::from_pattern(&ADPattern::default());
        assert_eq!(single.composition(), &c(&[1]));
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn composition_and_pattern_agree() {
        for n in 1..=9 {
            for alpha in compositions_of(n).unwrap() {
                let r = RibbonDiagram::from_composition(&alpha);
                assert_eq!(r.composition(), &alpha);
                assert_eq!(r.len(), n);
                // Consecutive rows share exactly one column.
                for w in r.rows().windows(2) {
                    let end = r.cells()[w[0].end - 1];
                    let start = r.cells()[w[1].start];
                    assert_eq!(end.1, start.1);
                    assert_eq!(end.0 + 1, start.0);
                }
            }
        }
    }

    #[test]
    fn reflection() {
        assert_eq!(ribbon(&[2, 1, 1]).reflect(), ribbon(&[1, 3]));
        assert_eq!(ribbon(&[1]).reflect(), ribbon(&[1]));
        for n in 1..=8 {
            for alpha in compositions_of(n).unwrap() {
                let r = RibbonDiagram::from_composition(&alpha);
                let reflected = r.reflect();
                assert_eq!(reflected.reflect(), r);
                // Reflection transposes every cell.
                let mut transposed: Vec<_> = r.cells().iter().map(|&(a, b)| (b, a)).collect();
                transposed.sort();
                let mut cells = reflected.cells().to_vec();
                cells.sort();
                assert_eq!(cells, transposed);
            }
        }
    }

    #[test]
    fn corner_figures() {
        let r = ribbon(&[2, 2, 1]);
        let k = r.corners();
        assert_eq!((k.lu.len(), k.rl.len()), (3, 2));
        assert_eq!(k.lu, vec![0, 2, 4]);
        assert_eq!(k.rl, vec![1, 3]);
        let k = ribbon(&[1, 4]).corners();
        assert_eq!((k.lu.len(), k.rl.len()), (1, 2));
        assert_eq!(k.lu, vec![1]);
        let k = ribbon(&[1]).corners();
        assert_eq!(k, Corners { lu: vec![0], rl: vec![0] });
    }

    #[test]
    fn corner_count_formulas() {
        for n in 1..=9 {
            for alpha in compositions_of(n).unwrap() {
                let k = RibbonDiagram::from_composition(&alpha).corners();
                let parts = alpha.parts();
                let l = parts.len();
                let lu = l - parts[..l - 1].iter().filter(|&&p| p == 1).count();
                let rl = l - parts[1..].iter().filter(|&&p| p == 1).count();
                assert_eq!(k.lu.len(), lu, "{alpha}");
                assert_eq!(k.rl.len(), rl, "{alpha}");
                if n > 1 {
                    assert!(k.lu.iter().all(|i| !k.rl.contains(i)));
                }
            }
        }
    }

    #[test]
    fn subribbon_queries() {
        // Rows (3,2,4) with the shaded (1,2,2) run starting at cell 2.
        let r = ribbon(&[3, 2, 4]);
        assert_eq!(r.pattern().to_string(), "aadadaaa");
        assert_eq!(
            r.find_subribbon(&c(&[1, 2, 2]), Anchor::Anywhere),
            vec![SubribbonMatch { start: 2, len: 5 }]
        );
        let shaded: Vec<_> = (2..7).map(|i| r.cells()[i]).collect();
        assert_eq!(shaded, vec![(1, 3), (2, 3), (2, 4), (3, 4), (3, 5)]);

        let small = ribbon(&[2, 1, 1]);
        assert!(!small.contains_subribbon(&c(&[1, 1, 3]), Anchor::Anywhere));
        assert!(!small.contains_subribbon(&c(&[1, 3]), Anchor::Begins));
        assert!(!small.contains_subribbon(&c(&[1, 1, 2]), Anchor::Ends));

        // Anchored matches need not end on a row boundary.
        assert!(ribbon(&[1, 4]).contains_subribbon(&c(&[1, 3]), Anchor::Begins));
        assert!(!ribbon(&[1, 4]).contains_subribbon(&c(&[1, 3]), Anchor::Ends));
        assert!(ribbon(&[1, 3]).contains_subribbon(&c(&[1, 3]), Anchor::Begins));
        assert!(ribbon(&[1, 3]).contains_subribbon(&c(&[1, 3]), Anchor::Ends));
        assert!(ribbon(&[1, 4]).contains_subribbon(&c(&[1, 3]), Anchor::Anywhere));
        assert!(ribbon(&[2, 1, 2]).contains_subribbon(&c(&[1, 1, 2]), Anchor::Ends));
        assert!(ribbon(&[2]).find_subribbon(&c(&[3]), Anchor::Anywhere).is_empty());
    }

    #[test]
    fn subribbons_by_geometric_shape() {
        // Cross-check the substring rule against translated cell sets.
        for n in 1..=7 {
            for alpha in compositions_of(n).unwrap() {
                let r = RibbonDiagram::from_composition(&alpha);
                for m in 1..=n {
                    for beta in compositions_of(m).unwrap() {
                        let b = RibbonDiagram::from_composition(&beta);
                        let geometric: Vec<usize> = (0..=n - m)
                            .filter(|&p| {
                                let (r0, c0) = r.cells()[p];
                                (0..m).all(|i| {
                                    let (br, bc) = b.cells()[i];
                                    r.cells()[p + i] == (r0 + br - 1, c0 + bc - 1)
                                })
                            })
                            .collect();
                        let found: Vec<usize> = r
                            .find_subribbon(&beta, Anchor::Anywhere)
                            .iter()
                            .map(|m| m.start)
                            .collect();
                        assert_eq!(found, geometric, "{beta} in {alpha}");
                    }
                }
            }
        }
    }

    #[test]
    fn regularity() {
        let r = ribbon(&[1, 2, 2, 1, 2, 1]);
        assert_eq!(
            r.regular_subribbons(),
            vec![SubribbonMatch { start: 1, len: 3 }, SubribbonMatch { start: 6, len: 3 }]
        );
        assert!(!ribbon(&[1, 4]).is_regular());
        assert!(ribbon(&[2, 1]).is_regular());
        assert!(!ribbon(&[2, 1, 1]).is_regular());
        assert!(!ribbon(&[2]).is_regular());
        for m in r.regular_subribbons() {
            assert_eq!(r.subribbon(m).composition(), &c(&[2, 1]));
        }
    }

    #[test]
    fn of_path_requires_a_path() {
        let p = LabeledGraph::path(&[3, 5, 1, 4, 2]).unwrap();
        assert_eq!(RibbonDiagram::of_path(&p).unwrap().composition(), &c(&[2, 2, 1]));
        let star = LabeledGraph::star(4, 1).unwrap();
        assert!(RibbonDiagram::of_path(&star).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(ribbon(&[2, 2, 1]).render(), "    #\n  # #\n# #\n");
        assert_eq!(ribbon(&[1, 4]).render(), "# # # #\n#\n");
    }
}

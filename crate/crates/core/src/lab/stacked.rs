use serde::Serialize;

use super::sets::{
    is_max_ascent_with_palette, is_weak_column_filling, max_ascent_fillings, weak_column_fillings,
    ColoringSet, Role, SetContext,
};
use crate::error::{Error, Result};
use crate::qsym::Composition;
use crate::ribbon::{RibbonDiagram, RibbonTableau};

/// A ribbon made of `k >= 2` stacked rows, each of length at least 2, with a
/// chosen pair of adjacent rows `i, i+1` (1-based, bottom-up) and a colour
/// `b` in `[r, n - k - s + 2]`, where `r = α_i` and `s = α_{i+1}`.
#[derive(Debug, Clone, Serialize)]
pub struct StackedRows {
    #[serde(skip)]
    ribbon: RibbonDiagram,
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub b: usize,
    pub r: usize,
    pub s: usize,
}

impl StackedRows {
    pub fn new(ribbon: &RibbonDiagram, i: usize, b: usize) -> Result<StackedRows> {
        let parts = ribbon.composition().parts();
        let k = parts.len();
        if k < 2 || parts.iter().any(|&p| p < 2) {
            return Err(Error::Hypothesis(format!(
                "{} is not a stack of at least two rows of length >= 2",
                ribbon.composition()
            )));
        }
        if i == 0 || i >= k {
            return Err(Error::ParameterOutOfRange(format!(
                "row index {i} must be in 1..={}",
                k - 1
            )));
        }
        let n = ribbon.len();
        let (r, s) = (parts[i - 1], parts[i]);
        let hi = n - k - s + 2;
        // (r - 1) + (s - 1) + k <= n makes the interval nonempty.
        assert!(r <= hi, "empty interval [{r}, {hi}]");
        if b < r || b > hi {
            return Err(Error::ParameterOutOfRange(format!(
                "b = {b} outside [{r}, {hi}]"
            )));
        }
        Ok(StackedRows {
            ribbon: ribbon.clone(),
            n,
            k,
            i,
            b,
            r,
            s,
        })
    }

    /// The first admissible pair: smallest `i`, then smallest `b`.
    pub fn first(ribbon: &RibbonDiagram) -> Result<StackedRows> {
        let r = ribbon.composition().parts().first().copied().unwrap_or(0);
        StackedRows::new(ribbon, 1, r)
    }

    /// Every admissible `(i, b)`, ordered by `i` then `b`.
    pub fn all(ribbon: &RibbonDiagram) -> Result<Vec<StackedRows>> {
        let first = StackedRows::first(ribbon)?;
        let parts = ribbon.composition().parts();
        let mut out = Vec::new();
        for i in 1..first.k {
            let (r, s) = (parts[i - 1], parts[i]);
            for b in r..=first.n - first.k - s + 2 {
                out.push(StackedRows::new(ribbon, i, b)?);
            }
        }
        Ok(out)
    }

    pub fn ribbon(&self) -> &RibbonDiagram {
        &self.ribbon
    }

    /// `m = n - k + 1`, the largest colour in `B` and `B′`.
    pub fn max_color(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn palette_a(&self) -> Composition {
        Composition::with_block(0, self.k, self.n - self.k).expect("k >= 2")
    }

    /// `(1^(b-1), k, 1^(n-k-b+1))`.
    pub fn palette_b(&self) -> Composition {
        Composition::with_block(self.b - 1, self.k, self.n - self.k - self.b + 1)
            .expect("b <= n - k + 1")
    }

    pub fn in_a(&self, t: &RibbonTableau) -> Result<bool> {
        Ok(t.diagram() == &self.ribbon && is_max_ascent_with_palette(t, &self.palette_a())?)
    }

    pub fn in_b(&self, t: &RibbonTableau) -> Result<bool> {
        Ok(t.diagram() == &self.ribbon && is_max_ascent_with_palette(t, &self.palette_b())?)
    }

    pub fn in_bprime(&self, t: &RibbonTableau) -> bool {
        t.diagram() == &self.ribbon && is_weak_column_filling(t, &self.palette_b())
    }

    fn set(&self, role: Role, palette: Composition, members: Vec<RibbonTableau>) -> ColoringSet {
        ColoringSet {
            role,
            context: SetContext::StackedRows { i: self.i, b: self.b },
            k: self.k,
            palette,
            ribbon: self.ribbon.clone(),
            members,
        }
    }

    pub fn enumerate_a(&self) -> Result<ColoringSet> {
        let palette = self.palette_a();
        let members = max_ascent_fillings(&self.ribbon, &palette)?;
        Ok(self.set(Role::A, palette, members))
    }

    pub fn enumerate_b(&self) -> Result<ColoringSet> {
        let palette = self.palette_b();
        let members = max_ascent_fillings(&self.ribbon, &palette)?;
        Ok(self.set(Role::B, palette, members))
    }

    pub fn enumerate_bprime(&self) -> ColoringSet {
        let palette = self.palette_b();
        let members = weak_column_fillings(&self.ribbon, &palette);
        self.set(Role::Bprime, palette, members)
    }

    /// `ζ: A → B′`. In each row without `b`, the 1 becomes `b` and the row is
    /// re-sorted.
    pub fn zeta(&self, t: &RibbonTableau) -> Result<RibbonTableau> {
        if !self.in_a(t)? {
            return Err(Error::NotInSet {
                set: "A",
                reason: format!("{t} is not a maximum-ascent filling with palette {}", self.palette_a()),
            });
        }
        let out = swap_in_rows(t, self.b as u32, 1, self.b as u32);
        if !self.in_bprime(&out) {
            return Err(Error::Hypothesis(format!("zeta({t}) = {out} is not in B'")));
        }
        Ok(out)
    }

    /// `ζ⁻¹: B′ → A`. In each row without 1, the `b` becomes 1 and the row is
    /// re-sorted.
    pub fn zeta_inverse(&self, t: &RibbonTableau) -> Result<RibbonTableau> {
        if !self.in_bprime(t) {
            return Err(Error::NotInSet {
                set: "B'",
                reason: format!(
                    "{t} does not have increasing rows, weakly increasing columns and palette {}",
                    self.palette_b()
                ),
            });
        }
        let out = swap_in_rows(t, 1, self.b as u32, 1);
        if !self.in_a(&out)? {
            return Err(Error::Hypothesis(format!("zeta^-1({t}) = {out} is not in A")));
        }
        Ok(out)
    }

    /// A member of `B′∖B`: row `i` is `(1, ..., r-1, b)`, row `i+1` is
    /// `(b, m-s+2, ..., m)`, and every other row holds one `b` plus unused
    /// colours, handed out top row first in increasing order.
    pub fn bprime_minus_b_witness(&self) -> Result<RibbonTableau> {
        let (b, m) = (self.b as u32, self.max_color() as u32);
        let (r, s) = (self.r as u32, self.s as u32);
        let lower: Vec<u32> = (1..r).chain([b]).collect();
        let upper: Vec<u32> = [b].into_iter().chain(m - s + 2..=m).collect();
        let mut unused = (1..=m).filter(|c| *c != b && !lower.contains(c) && !upper.contains(c));
        let parts = self.ribbon.composition().parts();
        let mut rows = vec![Vec::new(); self.k];
        for j in (0..self.k).rev() {
            rows[j] = match j + 1 {
                x if x == self.i => lower.clone(),
                x if x == self.i + 1 => upper.clone(),
                _ => {
                    let mut row: Vec<u32> = unused.by_ref().take(parts[j] - 1).collect();
                    row.push(b);
                    row.sort_unstable();
                    row
                }
            };
        }
        let row_refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
        let t = RibbonTableau::from_rows(&row_refs)?;
        if !self.in_bprime(&t) || self.in_b(&t)? {
            return Err(Error::Hypothesis(format!("{t} is not in B' minus B")));
        }
        Ok(t)
    }
}

/// In every row that does not contain `skip`, replace `from` by `to`, then
/// sort the row.
fn swap_in_rows(t: &RibbonTableau, skip: u32, from: u32, to: u32) -> RibbonTableau {
    let mut colors = Vec::with_capacity(t.colors().len());
    for row in t.rows() {
        let mut row = row.to_vec();
        if !row.contains(&skip) {
            for c in row.iter_mut().filter(|c| **c == from) {
                *c = to;
            }
            row.sort_unstable();
        }
        colors.extend(row);
    }
    t.with_colors(colors)
}

/// Outcome of checking one `(i, b)` by full enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct StackedRowsReport {
    pub params: StackedRows,
    pub a: usize,
    pub b_size: usize,
    pub bprime: usize,
    pub zeta_bijective: bool,
    pub b_inside_bprime: bool,
    pub witness: String,
}

impl StackedRowsReport {
    /// `|A| = |B′| > |B|`, `ζ` and `ζ⁻¹` inverse, `B ⊆ B′`.
    pub fn holds(&self) -> bool {
        self.zeta_bijective && self.b_inside_bprime && self.a == self.bprime && self.bprime > self.b_size
    }
}

/// Enumerates `A`, `B`, `B′` and checks `ζ` both ways on every member.
pub fn verify_stacked_rows(params: &StackedRows) -> Result<StackedRowsReport> {
    let a = params.enumerate_a()?;
    let b = params.enumerate_b()?;
    let bprime = params.enumerate_bprime();
    let mut images = Vec::with_capacity(a.len());
    let mut bijective = true;
    for t in &a.members {
        let z = params.zeta(t)?;
        bijective &= bprime.contains(&z) && params.zeta_inverse(&z)? == *t;
        images.push(z);
    }
    for t in &bprime.members {
        let back = params.zeta_inverse(t)?;
        bijective &= a.contains(&back) && params.zeta(&back)? == *t;
    }
    images.sort_by(|x, y| x.colors().cmp(y.colors()));
    images.dedup();
    bijective &= images.len() == a.len() && images.len() == bprime.len();
    let witness = params.bprime_minus_b_witness()?;
    Ok(StackedRowsReport {
        params: params.clone(),
        a: a.len(),
        b_size: b.len(),
        bprime: bprime.len(),
        zeta_bijective: bijective,
        b_inside_bprime: b.members.iter().all(|t| bprime.contains(t)),
        witness: witness.to_string(),
    })
}

use serde::Serialize;

use super::sets::{is_max_ascent_with_palette, max_ascent_fillings, ColoringSet, Role, SetContext};
use crate::error::{Error, Result};
use crate::qsym::Composition;
use crate::ribbon::{Anchor, RibbonDiagram, RibbonTableau, SubribbonMatch};

/// Contains a `(1,1,3)` sub-ribbon, begins with `(1,3)` or ends with `(1,1,2)`.
pub fn in_subribbon_113_family(ribbon: &RibbonDiagram) -> bool {
    let c = |parts: &[usize]| Composition::new(parts.to_vec()).expect("valid");
    ribbon.contains_subribbon(&c(&[1, 1, 3]), Anchor::Anywhere)
        || ribbon.contains_subribbon(&c(&[1, 3]), Anchor::Begins)
        || ribbon.contains_subribbon(&c(&[1, 1, 2]), Anchor::Ends)
}

/// A regular ribbon outside the `(1,1,3)` family, with `k` LU corners.
/// `A` has palette `(k, 1, 1, ...)`, `B` has palette `(1, k, 1, ...)`.
#[derive(Debug, Clone)]
pub struct RegularRibbon {
    ribbon: RibbonDiagram,
    lu: Vec<usize>,
}

impl RegularRibbon {
    pub fn new(ribbon: &RibbonDiagram) -> Result<RegularRibbon> {
        if in_subribbon_113_family(ribbon) {
            return Err(Error::Hypothesis(format!(
                "{} contains (1,1,3), begins with (1,3) or ends with (1,1,2)",
                ribbon.composition()
            )));
        }
        if !ribbon.is_regular() {
            return Err(Error::Hypothesis(format!("{} is not regular", ribbon.composition())));
        }
        Ok(RegularRibbon {
            ribbon: ribbon.clone(),
            lu: ribbon.corners().lu,
        })
    }

    pub fn ribbon(&self) -> &RibbonDiagram {
        &self.ribbon
    }

    pub fn k(&self) -> usize {
        self.lu.len()
    }

    pub fn lu_corners(&self) -> &[usize] {
        &self.lu
    }

    pub fn palette_a(&self) -> Composition {
        Composition::with_block(0, self.k(), self.ribbon.len() - self.k()).expect("k >= 1")
    }

    pub fn palette_b(&self) -> Composition {
        Composition::with_block(1, self.k(), self.ribbon.len() - self.k() - 1)
            .expect("LU and RL corners are disjoint")
    }

    pub fn in_a(&self, t: &RibbonTableau) -> Result<bool> {
        Ok(t.diagram() == &self.ribbon && is_max_ascent_with_palette(t, &self.palette_a())?)
    }

    pub fn in_b(&self, t: &RibbonTableau) -> Result<bool> {
        Ok(t.diagram() == &self.ribbon && is_max_ascent_with_palette(t, &self.palette_b())?)
    }

    fn set(&self, role: Role, palette: Composition, members: Vec<RibbonTableau>) -> ColoringSet {
        ColoringSet {
            role,
            context: SetContext::Regular,
            k: self.k(),
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

    /// `ψ: B → A`: every 2 in an LU corner becomes 1.
    pub fn psi(&self, t: &RibbonTableau) -> Result<RibbonTableau> {
        if !self.in_b(t)? {
            return Err(Error::NotInSet {
                set: "B",
                reason: format!("{t} is not a maximum-ascent filling with palette {}", self.palette_b()),
            });
        }
        let mut colors = t.colors().to_vec();
        for &i in &self.lu {
            if colors[i] == 2 {
                colors[i] = 1;
            }
        }
        let out = t.with_colors(colors);
        if !self.in_a(&out)? {
            return Err(Error::Hypothesis(format!("psi({t}) = {out} is not in A")));
        }
        Ok(out)
    }

    /// The regular `(2,1)` sub-ribbon nearest the top.
    pub fn default_subribbon(&self) -> SubribbonMatch {
        *self
            .ribbon
            .regular_subribbons()
            .last()
            .expect("checked regular")
    }

    /// `T′ ∈ A` outside `ψ(B)`: every LU corner gets 1 (including the two
    /// LU corners of `S`), the RL corner of `S` gets 2, and the remaining
    /// boxes take `3, 4, ...` along a linear extension that always picks the
    /// earliest ready box in ribbon order.
    pub fn psi_nonsurjectivity_witness(&self, s: SubribbonMatch) -> Result<RibbonTableau> {
        let (s_lu, s_rl) = self.check_subribbon(s)?;
        let n = self.ribbon.len();
        let mut colors = vec![0u32; n];
        for &i in self.lu.iter().chain(&s_lu) {
            colors[i] = 1;
        }
        colors[s_rl] = 2;
        let mut next = 3;
        while let Some(x) = (0..n).find(|&x| {
            colors[x] == 0
                && [self.ribbon.left_of(x), self.ribbon.above(x)]
                    .into_iter()
                    .flatten()
                    .all(|y| colors[y] != 0)
        }) {
            colors[x] = next;
            next += 1;
        }
        let t = RibbonTableau::new(self.ribbon.clone(), colors)?;
        self.check_witness(&t, s_rl)?;
        Ok(t)
    }

    /// `T′` built from a seed in `A`: colour 2 trades places with the colour
    /// in the RL corner of `S`.
    pub fn psi_nonsurjectivity_witness_from(
        &self,
        seed: &RibbonTableau,
        s: SubribbonMatch,
    ) -> Result<RibbonTableau> {
        if !self.in_a(seed)? {
            return Err(Error::NotInSet {
                set: "A",
                reason: format!("seed {seed} is not a maximum-ascent filling with palette {}", self.palette_a()),
            });
        }
        let (_, s_rl) = self.check_subribbon(s)?;
        let other = seed.color(s_rl);
        let colors = seed
            .colors()
            .iter()
            .map(|&c| match c {
                2 => other,
                c if c == other => 2,
                c => c,
            })
            .collect();
        let t = seed.with_colors(colors);
        self.check_witness(&t, s_rl)?;
        Ok(t)
    }

    /// LU corners and RL corner of `S`, read off `S` as a `(2,1)` ribbon.
    fn check_subribbon(&self, s: SubribbonMatch) -> Result<(Vec<usize>, usize)> {
        if !self.ribbon.regular_subribbons().contains(&s) {
            return Err(Error::ParameterOutOfRange(format!(
                "cells {:?} are not a regular (2,1) sub-ribbon of {}",
                s.cells(),
                self.ribbon.composition()
            )));
        }
        let corners = self.ribbon.subribbon(s).corners();
        let lu = corners.lu.iter().map(|i| s.start + i).collect();
        Ok((lu, s.start + corners.rl[0]))
    }

    fn check_witness(&self, t: &RibbonTableau, s_rl: usize) -> Result<()> {
        if !self.in_a(t)? {
            return Err(Error::Hypothesis(format!("{t} is not in A")));
        }
        if t.color(s_rl) != 2 || ones_next_to_the_two(t) != Some(2) {
            return Err(Error::Hypothesis(format!(
                "the 2 in {t} is not adjacent to two 1s"
            )));
        }
        Ok(())
    }
}

/// Number of boxes coloured 1 adjacent to the only box coloured 2, if there
/// is exactly one.
pub fn ones_next_to_the_two(t: &RibbonTableau) -> Option<usize> {
    let mut twos = (0..t.colors().len()).filter(|&i| t.color(i) == 2);
    let two = twos.next()?;
    if twos.next().is_some() {
        return None;
    }
    Some(t.diagram().adjacent(two).filter(|&j| t.color(j) == 1).count())
}

/// Outcome of checking `ψ` by full enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct PsiReport {
    pub composition: Composition,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub injective: bool,
    /// Every image has its 2 next to exactly one 1.
    pub images_have_one_neighbouring_one: bool,
    pub witness: String,
    pub witness_outside_image: bool,
}

impl PsiReport {
    pub fn holds(&self) -> bool {
        self.injective && self.images_have_one_neighbouring_one && self.witness_outside_image && self.b < self.a
    }
}

/// Enumerates `A` and `B`, applies `ψ` to all of `B`, and checks the
/// witness for `s` (the default sub-ribbon when `None`) is missed.
pub fn verify_psi(ribbon: &RibbonDiagram, s: Option<SubribbonMatch>) -> Result<PsiReport> {
    let reg = RegularRibbon::new(ribbon)?;
    let a = reg.enumerate_a()?;
    let b = reg.enumerate_b()?;
    let mut images = b.members.iter().map(|t| reg.psi(t)).collect::<Result<Vec<_>>>()?;
    let one_neighbour = images.iter().all(|t| ones_next_to_the_two(t) == Some(1));
    images.sort_by(|x, y| x.colors().cmp(y.colors()));
    images.dedup();
    let witness = reg.psi_nonsurjectivity_witness(s.unwrap_or_else(|| reg.default_subribbon()))?;
    Ok(PsiReport {
        composition: ribbon.composition().clone(),
        k: reg.k(),
        a: a.len(),
        b: b.len(),
        injective: images.len() == b.len() && images.iter().all(|t| a.contains(t)),
        images_have_one_neighbouring_one: one_neighbour,
        witness_outside_image: a.contains(&witness) && !images.contains(&witness),
        witness: witness.to_string(),
    })
}

mod common;

use common::{all_paths, c};
use cqf_core::lab::{
    check_corner_proposition, classify_pattern, main_theorem_case_analysis, verify_psi, ProofCase, RegularRibbon,
    StackedRows,
};
use cqf_core::ribbon::Anchor;
use cqf_core::{ad_pattern, compositions_of, cqf, ADPattern, Composition, LabeledGraph, RibbonDiagram, RibbonTableau};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ribbon(parts: &[usize]) -> RibbonDiagram {
    RibbonDiagram::from_composition(&c(parts))
}

#[test]
fn flipping_the_path_reflects_the_ribbon() {
    for n in 2..=6 {
        for g in all_paths(n) {
            let r = RibbonDiagram::of_path(&g).unwrap();
            assert_eq!(RibbonDiagram::of_path(&g.flip()).unwrap(), r.reflect(), "{g}");
        }
    }
}

#[test]
fn corner_counts_from_the_parts() {
    for n in 1..=9 {
        for alpha in compositions_of(n).unwrap() {
            let parts = alpha.parts();
            let l = parts.len();
            let lu = l - parts[..l - 1].iter().filter(|&&p| p == 1).count();
            let rl = l - parts[1..].iter().filter(|&&p| p == 1).count();
            let corners = RibbonDiagram::from_composition(&alpha).corners();
            assert_eq!((corners.lu.len(), corners.rl.len()), (lu, rl), "{alpha}");
        }
    }
}

#[test]
fn queries_on_small_ribbons() {
    let r = ribbon(&[1, 2, 2, 1, 2, 1]);
    assert!(r.is_regular());
    assert!(!r.contains_subribbon(&c(&[1, 1, 3]), Anchor::Anywhere));
    assert!(!r.contains_subribbon(&c(&[1, 3]), Anchor::Begins));
    assert!(!r.contains_subribbon(&c(&[1, 1, 2]), Anchor::Ends));
    let corners = ribbon(&[2, 2, 1]).corners();
    assert_eq!((corners.lu.len(), corners.rl.len()), (3, 2));
}

#[test]
fn mismatched_corners_are_caught_by_the_corner_check() {
    for n in 3..=8 {
        for alpha in compositions_of(n).unwrap() {
            let r = RibbonDiagram::from_composition(&alpha);
            let Ok(labels) = main_theorem_case_analysis(&r) else { continue };
            if labels[0].case == ProofCase::CornerMismatch {
                assert!(check_corner_proposition(&r).unwrap().holds(), "{alpha}");
            }
        }
    }
}

#[test]
fn stacked_rows_across_every_admissible_pair() {
    for parts in [&[2, 2][..], &[2, 3], &[3, 2], &[2, 2, 2], &[3, 3, 4]] {
        for params in StackedRows::all(&ribbon(parts)).unwrap() {
            let w = params.bprime_minus_b_witness().unwrap();
            assert!(params.in_bprime(&w), "{parts:?} {w}");
            assert!(!params.in_b(&w).unwrap(), "{parts:?} {w}");
        }
    }
    assert!(StackedRows::all(&ribbon(&[2, 1, 2])).is_err());
}

#[test]
fn psi_on_regular_ribbons_outside_the_family() {
    let mut checked = 0;
    for n in 3..=7 {
        for alpha in compositions_of(n).unwrap() {
            let r = RibbonDiagram::from_composition(&alpha);
            if RegularRibbon::new(&r).is_ok() {
                assert!(verify_psi(&r, None).unwrap().holds(), "{alpha}");
                checked += 1;
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn tableaux_from_colorings_keep_the_ascent_count() {
    let g = LabeledGraph::path(&[2, 4, 3, 1]).unwrap();
    let t = RibbonTableau::from_rows(&[&[1, 3], &[2], &[1]]).unwrap();
    assert_eq!(t.diagram(), &RibbonDiagram::of_path(&g).unwrap());
    assert!(t.is_proper());
    assert_eq!(t.palette(), Some(c(&[2, 1, 1])));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reflection_is_an_involution(parts in prop::collection::vec(1usize..4, 1..6)) {
        let r = RibbonDiagram::from_composition(&Composition::new(parts).unwrap());
        prop_assert_eq!(r.reflect().reflect(), r.clone());
        prop_assert_eq!(r.reflect().len(), r.len());
        let corners = r.corners();
        let reflected = r.reflect().corners();
        prop_assert_eq!(corners.lu.len(), reflected.rl.len());
    }

    #[test]
    fn pattern_and_composition_agree(letters in prop::collection::vec(any::<bool>(), 0..8)) {
        let w: String = letters.iter().map(|&a| if a { 'a' } else { 'd' }).collect();
        let pattern: ADPattern = w.parse().unwrap();
        let r = RibbonDiagram::from_pattern(&pattern);
        prop_assert_eq!(RibbonDiagram::from_composition(r.composition()), r.clone());
        prop_assert_eq!(r.composition().size(), letters.len() + 1);
    }

    #[test]
    fn classification_agrees_with_the_full_expansion(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = LabeledGraph::random_path(n, &mut rng).unwrap();
        let pattern = ad_pattern(g.path_order().unwrap()).unwrap();
        let verdict = classify_pattern(&pattern);
        let q = cqf(&g);
        prop_assert_eq!(verdict.symmetric, q.is_symmetric());
        prop_assert_eq!(verdict.palindromic, q.is_palindromic(n - 1));
    }
}

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::LabeledGraph;

/// Number of proper colourings of `g` with colours `1..=k`, by
/// deletion–contraction: `P(G) = P(G - e) - P(G / e)`.
///
/// Independent of the quasisymmetric engine; used to cross-check its
/// `q = 1` specializations.
pub fn chromatic_polynomial_value(g: &LabeledGraph, k: u64) -> BigUint {
    let n = g.vertex_count();
    let mut adj = vec![0u64; n];
    for &(i, j) in g.edges() {
        adj[i - 1] |= 1 << (j - 1);
        adj[j - 1] |= 1 << (i - 1);
    }
    let alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let value = deletion_contraction(&mut adj, alive, &BigInt::from(k));
    value
        .to_biguint()
        .expect("chromatic polynomial is nonnegative at nonnegative integers")
}

fn deletion_contraction(adj: &mut [u64], alive: u64, k: &BigInt) -> BigInt {
    // Isolated vertices each contribute an independent factor of k.
    let mut isolated = 0u32;
    let mut edge = None;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] == 0 {
            isolated += 1;
        } else if edge.is_none() {
            edge = Some((v, adj[v].trailing_zeros() as usize));
        }
    }
    let factor = num_traits::pow(k.clone(), isolated as usize);
    let Some((u, v)) = edge else {
        return factor;
    };
    if factor.is_zero() {
        return factor;
    }
    let remaining = alive & !isolated_mask(adj, alive);

    // Deletion.
    adj[u] &= !(1 << v);
    adj[v] &= !(1 << u);
    let deleted = deletion_contraction(adj, remaining, k);

    // Contraction: merge v into u.
    let saved: Vec<u64> = adj.to_vec();
    let v_nbrs = adj[v];
    for w in bits(v_nbrs) {
        adj[w] &= !(1 << v);
        if w != u {
            adj[w] |= 1 << u;
            adj[u] |= 1 << w;
        }
    }
    adj[v] = 0;
    let contracted = deletion_contraction(adj, remaining & !(1 << v), k);
    adj.copy_from_slice(&saved);
    adj[u] |= 1 << v;
    adj[v] |= 1 << u;

    if factor.is_one() {
        deleted - contracted
    } else {
        factor * (deleted - contracted)
    }
}

fn isolated_mask(adj: &[u64], alive: u64) -> u64 {
    bits(alive).filter(|&v| adj[v] == 0).fold(0, |m, v| m | 1 << v)
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_force(g: &LabeledGraph, k: u64) -> u64 {
        let n = g.vertex_count();
        let total = k.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let color = |v: usize| (code / k.pow((v - 1) as u32)) % k;
                g.edges().iter().all(|&(i, j)| color(i) != color(j))
            })
            .count() as u64
    }

    #[test]
    fn path_on_four_vertices() {
        let p4 = LabeledGraph::path(&[2, 4, 3, 1]).unwrap();
        assert_eq!(chromatic_polynomial_value(&p4, 2), BigUint::from(2u32));
        assert_eq!(chromatic_polynomial_value(&p4, 3), BigUint::from(24u32));
        assert_eq!(brute_force(&p4, 3), 24);
    }

    #[test]
    fn zero_colours() {
        for n in 1..6 {
            let g = LabeledGraph::natural_path(n).unwrap();
            assert!(chromatic_polynomial_value(&g, 0).is_zero());
        }
    }

    #[test]
    fn paths_follow_k_times_k_minus_one_power() {
        for n in 1..=8usize {
            let g = LabeledGraph::natural_path(n).unwrap();
            for k in 0..=6u64 {
                let expected = k * k.saturating_sub(1).pow((n - 1) as u32);
                assert_eq!(chromatic_polynomial_value(&g, k), BigUint::from(expected));
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let complete = LabeledGraph::new(
            5,
            (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j))),
        )
        .unwrap();
        let cycle = LabeledGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let mut corpus = vec![complete, cycle];
        for n in 1..=6 {
            corpus.push(LabeledGraph::random_tree(n, &mut rng).unwrap());
        }
        for g in &corpus {
            for k in 0..=5 {
                assert_eq!(
                    chromatic_polynomial_value(g, k),
                    BigUint::from(brute_force(g, k)),
                    "{g} k={k}"
                );
            }
        }
    }
}

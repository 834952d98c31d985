use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{compositions_of, Composition, QPolynomial};
use crate::error::{Error, Result};

/// `Σ c_α(q) M_α` over compositions `α` of `n`. Absent keys are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymExpansion {
    n: usize,
    edges: Option<usize>,
    coeffs: BTreeMap<Composition, QPolynomial>,
}

/// Outcome of [`QSymExpansion::symmetry`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Symmetry {
    Symmetric,
    /// `beta` rearranges `alpha` but `c_alpha != c_beta`.
    Nonsymmetric { alpha: Composition, beta: Composition },
}

impl Symmetry {
    pub fn holds(&self) -> bool {
        matches!(self, Symmetry::Symmetric)
    }

    pub fn witness(&self) -> Option<(&Composition, &Composition)> {
        match self {
            Symmetry::Symmetric => None,
            Symmetry::Nonsymmetric { alpha, beta } => Some((alpha, beta)),
        }
    }
}

/// Outcome of [`QSymExpansion::palindromicity`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Palindromicity {
    Palindromic,
    /// `[q^i] c_alpha != [q^(m-i)] c_alpha`.
    Nonpalindromic { alpha: Composition, i: usize },
}

impl Palindromicity {
    pub fn holds(&self) -> bool {
        matches!(self, Palindromicity::Palindromic)
    }

    pub fn witness(&self) -> Option<(&Composition, usize)> {
        match self {
            Palindromicity::Palindromic => None,
            Palindromicity::Nonpalindromic { alpha, i } => Some((alpha, *i)),
        }
    }
}

impl QSymExpansion {
    /// An empty (zero) expansion of degree `n`. When `edges` is given, every
    /// inserted coefficient must have q-degree at most `edges`.
    pub fn new(n: usize, edges: Option<usize>) -> Self {
        QSymExpansion {
            n,
            edges,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        n: usize,
        edges: Option<usize>,
        terms: impl IntoIterator<Item = (Composition, QPolynomial)>,
    ) -> Result<Self> {
        let mut q = QSymExpansion::new(n, edges);
        for (alpha, poly) in terms {
            q.add_term(alpha, &poly)?;
        }
        Ok(q)
    }

    /// Adds `poly * M_alpha`.
    pub fn add_term(&mut self, alpha: Composition, poly: &QPolynomial) -> Result<()> {
        if alpha.size() != self.n {
            return Err(Error::InvalidComposition(format!(
                "{alpha} is not a composition of {}",
                self.n
            )));
        }
        if poly.is_zero() {
            return Ok(());
        }
        if let (Some(m), Some(d)) = (self.edges, poly.degree()) {
            if d > m {
                return Err(Error::DegreeAboveEdgeCount {
                    alpha: alpha.to_string(),
                    degree: d,
                    edges: m,
                });
            }
        }
        *self.coeffs.entry(alpha).or_default() += poly;
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Edge count of the source graph, when known.
    pub fn edge_count(&self) -> Option<usize> {
        self.edges
    }

    /// Coefficient of `M_alpha`; zero when absent.
    pub fn coeff(&self, alpha: &Composition) -> QPolynomial {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QPolynomial)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest q-degree over all coefficients.
    pub fn max_q_degree(&self) -> Option<usize> {
        self.coeffs.values().filter_map(QPolynomial::degree).max()
    }

    /// `ρ`: sends `M_α` to `M_{α^r}`.
    pub fn rho(&self) -> QSymExpansion {
        QSymExpansion {
            n: self.n,
            edges: self.edges,
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, p)| (a.reverse(), p.clone()))
                .collect(),
        }
    }

    /// Replaces every `c_α(q)` with `q^m c_α(1/q)`.
    pub fn q_reversed(&self, m: usize) -> QSymExpansion {
        QSymExpansion {
            n: self.n,
            edges: self.edges,
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, p)| (a.clone(), p.reversed(m)))
                .collect(),
        }
    }

    pub fn sum(&self, other: &QSymExpansion) -> Result<QSymExpansion> {
        if self.n != other.n {
            return Err(Error::InvalidComposition(format!(
                "cannot add expansions of degrees {} and {}",
                self.n, other.n
            )));
        }
        let edges = match (self.edges, other.edges) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        let mut out = QSymExpansion {
            n: self.n,
            edges,
            coeffs: self.coeffs.clone(),
        };
        for (a, p) in &other.coeffs {
            out.add_term(a.clone(), p)?;
        }
        Ok(out)
    }

    /// Compositions of `n` visited by number of parts, then
    /// lexicographically, so witnesses are as short as possible.
    fn witness_order(&self) -> Vec<Composition> {
        let mut all = compositions_of(self.n.max(1)).unwrap_or_default();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// Palindromic in `q` with respect to degree `m`: every `c_α` satisfies
    /// `[q^i] c_α = [q^(m-i)] c_α`. A coefficient of degree above `m` is a
    /// mismatch at its top power.
    pub fn palindromicity(&self, m: usize) -> Palindromicity {
        for alpha in self.witness_order() {
            let Some(poly) = self.coeffs.get(&alpha) else {
                continue;
            };
            let mismatch = match poly.degree() {
                Some(d) if d > m => Some(d),
                _ => poly.palindrome_mismatch(m),
            };
            if let Some(i) = mismatch {
                return Palindromicity::Nonpalindromic { alpha, i };
            }
        }
        Palindromicity::Palindromic
    }

    pub fn is_palindromic(&self, m: usize) -> bool {
        self.palindromicity(m).holds()
    }

    /// Symmetric iff compositions with the same sorted parts share their
    /// coefficient. Each rearrangement class is compared against its first
    /// member in witness order.
    pub fn symmetry(&self) -> Symmetry {
        let zero = QPolynomial::zero();
        let mut representatives: BTreeMap<Vec<usize>, Composition> = BTreeMap::new();
        for alpha in self.witness_order() {
            match representatives.get(&alpha.partition_key()) {
                None => {
                    representatives.insert(alpha.partition_key(), alpha);
                }
                Some(rep) => {
                    let a = self.coeffs.get(rep).unwrap_or(&zero);
                    let b = self.coeffs.get(&alpha).unwrap_or(&zero);
                    if a != b {
                        return Symmetry::Nonsymmetric {
                            alpha: rep.clone(),
                            beta: alpha,
                        };
                    }
                }
            }
        }
        Symmetry::Symmetric
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry().holds()
    }

    /// Every coefficient evaluated at `q = q0`; zero entries omitted.
    pub fn specialize_q(&self, q0: i64) -> BTreeMap<Composition, BigInt> {
        let q0 = BigInt::from(q0);
        self.coeffs
            .iter()
            .map(|(a, p)| (a.clone(), p.eval(&q0)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// `Σ_α c_α(1) binom(k, ℓ(α))`: the image under `x_1 = ... = x_k = 1`,
    /// other variables zero.
    pub fn chromatic_value(&self, k: u64) -> BigUint {
        let one = BigInt::from(1);
        self.coeffs
            .iter()
            .map(|(a, p)| {
                let at_one = p.eval(&one).to_biguint().expect("nonnegative coefficients");
                at_one * binomial(k, a.len() as u64)
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("expansion serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_wire()).expect("expansion serializes")
    }

    pub fn from_json(s: &str) -> Result<QSymExpansion> {
        let wire: ExpansionWire = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        QSymExpansion::from_wire(wire)
    }

    pub(crate) fn to_wire(&self) -> ExpansionWire {
        ExpansionWire {
            n: self.n,
            m: self.edges,
            coeffs: self
                .coeffs
                .iter()
                .map(|(alpha, poly)| TermWire {
                    alpha: alpha.clone(),
                    poly: poly
                        .coeffs()
                        .iter()
                        .map(|c| c.to_string().parse().expect("decimal integers are JSON numbers"))
                        .collect(),
                })
                .collect(),
        }
    }

    fn from_wire(wire: ExpansionWire) -> Result<QSymExpansion> {
        let terms = wire
            .coeffs
            .into_iter()
            .map(|t| {
                let coeffs = t
                    .poly
                    .iter()
                    .map(|num| {
                        num.to_string()
                            .parse::<BigUint>()
                            .map_err(|_| Error::Json(format!("{num} is not a nonnegative integer")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((t.alpha, QPolynomial::from_coeffs(coeffs)))
            })
            .collect::<Result<Vec<_>>>()?;
        QSymExpansion::from_terms(wire.n, wire.m, terms)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// JSON contract: `{"n":4,"m":3,"coeffs":[{"alpha":[1,1,2],"poly":[1,3,2]},...]}`
/// with `poly` constant term first and compositions in canonical order.
#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct ExpansionWire {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    coeffs: Vec<TermWire>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermWire {
    alpha: Composition,
    poly: Vec<serde_json::Number>,
}

impl fmt::Display for QSymExpansion {
    /// `(5q^3+7q^2+7q+5)M(1,1,1,1) + (q^3+1)M(2,2)`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (alpha, poly)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({poly})M{alpha}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(coeffs: &[u64]) -> QPolynomial {
        QPolynomial::from_u64s(coeffs)
    }

    /// The expansion printed for the path 3-4-1-2.
    fn path_3412() -> QSymExpansion {
        QSymExpansion::from_terms(
            4,
            Some(3),
            [
                (c(&[1, 1, 1, 1]), p(&[5, 7, 7, 5])),
                (c(&[1, 1, 2]), p(&[2, 1, 1, 2])),
                (c(&[1, 2, 1]), p(&[1, 2, 2, 1])),
                (c(&[2, 1, 1]), p(&[2, 1, 1, 2])),
                (c(&[2, 2]), p(&[1, 0, 0, 1])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rho_swaps_reversed_compositions() {
        let q = QSymExpansion::from_terms(
            4,
            None,
            [(c(&[1, 1, 2]), p(&[1, 2])), (c(&[2, 1, 1]), p(&[0, 5]))],
        )
        .unwrap();
        let r = q.rho();
        assert_eq!(r.coeff(&c(&[1, 1, 2])), p(&[0, 5]));
        assert_eq!(r.coeff(&c(&[2, 1, 1])), p(&[1, 2]));
        assert_eq!(r.rho(), q);
    }

    #[test]
    fn verdicts_for_the_path_3412() {
        let q = path_3412();
        assert!(q.is_palindromic(3));
        assert_eq!(
            q.symmetry(),
            Symmetry::Nonsymmetric {
                alpha: c(&[1, 1, 2]),
                beta: c(&[1, 2, 1])
            }
        );
        assert_eq!(q.specialize_q(1)[&c(&[2, 2])], BigInt::from(2));
    }

    #[test]
    fn trivial_verdicts() {
        let zero = QSymExpansion::new(4, Some(3));
        assert!(zero.is_palindromic(3));
        assert!(zero.is_symmetric());
        let single =
            QSymExpansion::from_terms(5, None, [(c(&[5]), p(&[0, 1, 3]))]).unwrap();
        assert!(single.is_symmetric());
        // Absent and explicit zero are the same.
        let explicit =
            QSymExpansion::from_terms(3, None, [(c(&[1, 2]), p(&[])), (c(&[2, 1]), p(&[]))])
                .unwrap();
        assert!(explicit.is_symmetric());
        assert!(explicit.is_zero());
    }

    #[test]
    fn palindrome_witness_prefers_fewest_parts() {
        let q = QSymExpansion::from_terms(
            4,
            Some(3),
            [(c(&[1, 1, 2]), p(&[0, 2, 3, 1])), (c(&[1, 3]), p(&[0, 0, 1]))],
        )
        .unwrap();
        assert_eq!(
            q.palindromicity(3),
            Palindromicity::Nonpalindromic {
                alpha: c(&[1, 3]),
                i: 1
            }
        );
    }

    #[test]
    fn degree_bound_is_enforced() {
        let err = QSymExpansion::from_terms(2, Some(1), [(c(&[1, 1]), p(&[0, 0, 1]))]);
        assert!(matches!(err, Err(Error::DegreeAboveEdgeCount { .. })));
        let wrong_size = QSymExpansion::from_terms(3, None, [(c(&[1, 1]), p(&[1]))]);
        assert!(wrong_size.is_err());
    }

    #[test]
    fn json_contract() {
        let q = path_3412();
        let json = q.to_json();
        assert!(json.starts_with(r#"{"n":4,"m":3,"coeffs":[{"alpha":[1,1,1,1],"poly":[5,7,7,5]},"#));
        assert_eq!(QSymExpansion::from_json(&json).unwrap(), q);
        assert_eq!(QSymExpansion::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn json_keeps_big_coefficients_exact() {
        let big: BigUint = "123456789012345678901234567890".parse().unwrap();
        let q = QSymExpansion::from_terms(
            2,
            None,
            [(c(&[1, 1]), QPolynomial::from_coeffs(vec![big.clone(), 1u32.into()]))],
        )
        .unwrap();
        let json = q.to_json();
        assert!(json.contains("123456789012345678901234567890"));
        assert_eq!(QSymExpansion::from_json(&json).unwrap().coeff(&c(&[1, 1])).coeff(0), big);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(QSymExpansion::from_json("{").is_err());
        assert!(QSymExpansion::from_json(r#"{"n":2,"coeffs":[{"alpha":[1,2],"poly":[1]}]}"#).is_err());
        assert!(QSymExpansion::from_json(r#"{"n":2,"coeffs":[{"alpha":[2],"poly":[-1]}]}"#).is_err());
        assert!(QSymExpansion::from_json(r#"{"n":2,"coeffs":[{"alpha":[2],"poly":[1.5]}]}"#).is_err());
    }

    #[test]
    fn display() {
        let q = QSymExpansion::from_terms(2, Some(1), [(c(&[1, 1]), p(&[1, 1]))]).unwrap();
        assert_eq!(q.to_string(), "(q+1)M(1,1)");
        assert_eq!(QSymExpansion::new(3, None).to_string(), "0");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
    }

    fn arb_expansion(n: usize) -> impl Strategy<Value = QSymExpansion> {
        let comps = compositions_of(n).unwrap();
        proptest::collection::vec(proptest::collection::vec(0u64..20, 0..5), comps.len()).prop_map(
            move |polys| {
                QSymExpansion::from_terms(
                    n,
                    None,
                    comps.iter().cloned().zip(polys.iter().map(|c| QPolynomial::from_u64s(c))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn rho_is_an_involution(q in arb_expansion(5)) {
            prop_assert_eq!(q.rho().rho(), q.clone());
            for (a, poly) in q.rho().terms() {
                prop_assert_eq!(poly, &q.coeff(&a.reverse()));
            }
        }

        #[test]
        fn json_round_trip_is_byte_identical(q in arb_expansion(4)) {
            let json = q.to_json();
            let back = QSymExpansion::from_json(&json).unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(back.to_json(), json);
        }
    }
}

use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// A polynomial in `q` with nonnegative integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigUint>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    /// Builds from machine-sized coefficients, constant term first.
    pub fn from_u64s(coeffs: &[u64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The single term `q^power`.
    pub fn monomial(power: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); power + 1];
        coeffs[power] = BigUint::one();
        QPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn coeff_ref(&self, i: usize) -> Option<&BigUint> {
        self.coeffs.get(i).filter(|c| !c.is_zero())
    }

    /// `q^m * p(1/q)`. Requires `m >= degree`.
    pub fn reversed(&self, m: usize) -> QPolynomial {
        assert!(
            self.degree().is_none_or(|d| d <= m),
            "cannot reverse a degree {:?} polynomial within degree {m}",
            self.degree()
        );
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[m - i] = c.clone();
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// Smallest `i <= m` whose coefficient differs from that of `q^(m-i)`.
    pub fn palindrome_mismatch(&self, m: usize) -> Option<usize> {
        (0..=m / 2).find(|&i| self.coeff_ref(i) != self.coeff_ref(m - i))
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + BigInt::from(c.clone()))
    }

    /// Single-term polynomials `c * q^k` return `(c, k)`.
    pub fn as_single_term(&self) -> Option<(BigUint, usize)> {
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = nonzero.next()?;
        nonzero.next().is_none().then(|| (c.clone(), k))
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl fmt::Display for QPolynomial {
    /// Decreasing powers, e.g. `5q^3+7q^2+7q+5`, `q^2+q`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let show_coeff = i == 0 || !c.is_one();
            if show_coeff {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

//! Dense polynomials with arbitrary-precision integer coefficients.
//!
//! A subtree polynomial stores the number of subtrees of order `k` at
//! index `k`, so index 0 is always zero for those; the type itself is a
//! general dense polynomial (helper factors such as `1 + x + ... + x^k`
//! do carry a constant term).

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::Rational;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::one()])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `1 + x + x^2 + ... + x^k`.
    pub fn unit_sum(k: usize) -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one(); k + 1],
        }
    }

    /// `(1 + x)^m`, by the binomial coefficients.
    pub fn one_plus_x_power(m: usize) -> Self {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut c = BigInt::one();
        for j in 0..=m {
            coeffs.push(c.clone());
            // C(m, j+1) = C(m, j) * (m - j) / (j + 1), exactly divisible
            c = c * (m - j) / (j + 1);
        }
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_to_coeff(&mut self, k: usize, value: &BigInt) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += value;
        self.trim();
    }

    /// Multiplies by `x` in place.
    pub fn shift_up(&mut self) {
        if !self.is_zero() {
            self.coeffs.insert(0, BigInt::zero());
        }
    }

    /// Coefficientwise difference; panics if any coefficient would go
    /// negative (callers only subtract polynomials that are dominated
    /// coefficientwise, e.g. `S_{G-e}` from `S_G`).
    pub fn sub(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            panic!("polynomial subtraction would produce a negative coefficient");
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] -= c;
            assert!(
                coeffs[k].sign() != num_bigint::Sign::Minus,
                "polynomial subtraction would produce a negative coefficient at degree {k}"
            );
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `p(1)`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p'(1)`: the degree-weighted sum of coefficients.
    pub fn deriv_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(k))
            .sum()
    }

    /// Logarithmic derivative at 1, i.e. `p'(1)/p(1)`, reduced.
    ///
    /// This is the mean that the subtree machinery is built on: it is
    /// additive over polynomial products.
    pub fn log_deriv_at_one(&self) -> Result<Rational> {
        let total = self.eval_at_one();
        if total.is_zero() {
            return Err(Error::UndefinedMean);
        }
        Ok(Rational::new(self.deriv_at_one(), total))
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (k, c) in short.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[k] += c;
        }
        self.trim();
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

// "3x + 2x^2 + x^3" style, lowest order first.
fn fmt_poly(p: &IntPolynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match k {
            0 => write!(f, "{c}")?,
            1 if c.is_one() => write!(f, "x")?,
            1 => write!(f, "{c}x")?,
            _ if c.is_one() => write!(f, "x^{k}")?,
            _ => write!(f, "{c}x^{k}")?,
        }
    }
    Ok(())
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The representation is canonical:
/// the last stored coefficient is nonzero, and the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`, the sum of coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Substitutes `q -> q^k`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Polynomial long division by a divisor with leading coefficient ±1.
    ///
    /// Returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &QPolynomial) -> (QPolynomial, QPolynomial) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.coeffs[dd];
        assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPolynomial::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * lead; // lead is ±1, so this divides by it
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * dc;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (QPolynomial::from_coeffs(quot), QPolynomial::from_coeffs(rem))
    }

    /// Exact division over the integers; `None` if the divisor does not divide
    /// `self` in `Z[q]`.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(QPolynomial::zero());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (c, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * dc;
            }
            quot[i - dd] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPolynomial::from_coeffs(quot))
    }

    /// Coefficients of `self mod (q^n - 1)`, as a vector of length `n`.
    pub fn residues(&self, n: usize) -> Vec<BigInt> {
        assert!(n >= 1);
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % n] += c;
        }
        out
    }

    /// True when coefficient `i` equals coefficient `deg - i` for all `i`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let mut c = self.coeff(i);
                if let Some(r) = rhs.coeffs.get(i) {
                    c += r;
                }
                c
            })
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
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
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = QPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(QPolynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(QPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = QPolynomial::from_i64s(&[1, 1]);
        let b = QPolynomial::from_i64s(&[-1, 1]);
        assert_eq!(&a * &b, QPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(&a - &a, QPolynomial::zero());
        assert_eq!(a.shift(2), QPolynomial::from_i64s(&[0, 0, 1, 1]));
        assert_eq!(a.dilate(3), QPolynomial::from_i64s(&[1, 0, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let num = QPolynomial::from_i64s(&[-1, 0, 0, 0, 1]);
        let den = QPolynomial::from_i64s(&[-1, 1]);
        assert_eq!(num.div_exact(&den), Some(QPolynomial::from_i64s(&[1, 1, 1, 1])));
        assert_eq!(QPolynomial::from_i64s(&[1, 0, 1]).div_exact(&den), None);
        // 2q + 2 divided by 2 works over Z, 2q + 1 does not.
        let two = QPolynomial::constant(2);
        assert!(QPolynomial::from_i64s(&[2, 2]).div_exact(&two).is_some());
        assert!(QPolynomial::from_i64s(&[1, 2]).div_exact(&two).is_none());
    }

    #[test]
    fn remainder_and_residues() {
        let p = QPolynomial::from_i64s(&[1, 2, 3, 4, 5]);
        let (q, r) = p.div_rem_monic(&QPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(&(&q * &QPolynomial::from_i64s(&[1, 0, 1])) + &r, p);
        assert!(r.degree().unwrap_or(0) < 2);
        let res = p.residues(2);
        assert_eq!(res, vec![BigInt::from(9), BigInt::from(6)]);
    }

    #[test]
    fn display() {
        let p = QPolynomial::from_i64s(&[2, 1, 0, -3]);
        assert_eq!(p.to_string(), "2+q-3q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}

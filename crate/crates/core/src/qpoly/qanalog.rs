//! q-integers, Gaussian binomials, cyclotomic polynomials and exact
//! evaluation at primitive roots of unity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::QPolynomial;
use crate::error::{Error, Result};

/// Order `d >= 1` of a primitive root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnitySpec(usize);

impl RootOfUnitySpec {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(crate::error::out_of_range("d", 0, "d >= 1"));
        }
        Ok(Self(d))
    }

    pub fn order(self) -> usize {
        self.0
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_int(n: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]!_q = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).map(q_int).product()
}

/// Gaussian binomial `[m, k]` in base `q^base` (`base` is 1 or 2).
///
/// Built from the Pascal-type recurrence `[m,k] = [m-1,k-1] + q^k [m-1,k]`, so no
/// division is involved. Returns the zero polynomial when `k > m`.
pub fn gauss_binomial(m: usize, k: usize, base: usize) -> QPolynomial {
    assert!(base == 1 || base == 2, "base must be 1 or 2");
    if k > m {
        return QPolynomial::zero();
    }
    let k = k.min(m - k);
    // row[j] = [i, j] for the current i
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for i in 1..=m {
        let width = k.min(i) + 1;
        let mut next = Vec::with_capacity(width);
        for j in 0..width {
            let left = if j >= 1 { row.get(j - 1) } else { None };
            let up = row.get(j);
            let term = match (left, up) {
                (Some(l), Some(u)) => l + &u.shift(j),
                (Some(l), None) => l.clone(),
                (None, Some(u)) => u.shift(j),
                (None, None) => QPolynomial::zero(),
            };
            next.push(term);
        }
        row = next;
    }
    let p = row.swap_remove(k);
    if base == 2 {
        p.dilate(2)
    } else {
        p
    }
}

/// Gaussian binomial with signed arguments; zero outside `0 <= k <= m`.
pub(crate) fn gauss_binomial_i(m: i64, k: i64, base: usize) -> QPolynomial {
    if m < 0 || k < 0 || k > m {
        QPolynomial::zero()
    } else {
        gauss_binomial(m as usize, k as usize, base)
    }
}

/// Gaussian binomial computed as `[m]! / ([k]! [m-k]!)` by exact division.
///
/// Slower than [`gauss_binomial`]; kept as an independent route.
pub fn gauss_binomial_by_division(m: usize, k: usize) -> Result<QPolynomial> {
    if k > m {
        return Ok(QPolynomial::zero());
    }
    let num: QPolynomial = ((m - k + 1)..=m).map(q_int).product();
    num.div_exact(&q_factorial(k))
        .ok_or_else(|| Error::InexactDivision(format!("[{m}]!/[{k}]![{}]!", m - k)))
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `q^d - 1` by the
/// cyclotomic polynomials of all proper divisors of `d`.
pub fn cyclotomic(d: usize) -> QPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut p = &QPolynomial::monomial(1, d) - &QPolynomial::one();
    for e in divisors(d) {
        if e < d {
            p = p
                .div_exact(&cyclotomic(e))
                .expect("q^d - 1 is divisible by lower cyclotomic factors");
        }
    }
    p
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Value of `p` at a primitive `d`-th root of unity, computed by reducing `p`
/// modulo the `d`-th cyclotomic polynomial.
///
/// Fails with [`Error::NonConstantRemainder`] when the remainder is not a
/// constant, i.e. the value is not a rational integer independent of the
/// choice of primitive root.
pub fn eval_at_primitive_root(p: &QPolynomial, spec: RootOfUnitySpec) -> Result<BigInt> {
    let (_, r) = p.div_rem_monic(&cyclotomic(spec.order()));
    match r.degree() {
        None => Ok(BigInt::zero()),
        Some(0) => Ok(r.coeff(0)),
        Some(_) => Err(Error::NonConstantRemainder { d: spec.order() }),
    }
}

/// Ordinary binomial coefficient as a big integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Gaussian binomial `[m, k]` at a primitive `d`-th root via q-Lucas:
/// with `m = a d + b`, `k = r d + t`, the value is `C(a, r) [b, t]_{q=w}`.
pub fn q_lucas(m: usize, k: usize, spec: RootOfUnitySpec) -> Result<BigInt> {
    let d = spec.order();
    if d < 2 {
        return Err(crate::error::out_of_range("d", d, "d >= 2"));
    }
    if k > m {
        return Ok(BigInt::zero());
    }
    let (a, b) = m.div_rem(&d);
    let (r, t) = k.div_rem(&d);
    let small = eval_at_primitive_root(&gauss_binomial(b, t, 1), spec)?;
    Ok(binomial(a as i64, r as i64) * small)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: usize) -> RootOfUnitySpec {
        RootOfUnitySpec::new(d).unwrap()
    }

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), QPolynomial::one());
        assert_eq!(q_int(4), QPolynomial::from_i64s(&[1, 1, 1, 1]));
    }

    #[test]
    fn gauss_small_values() {
        assert_eq!(gauss_binomial(5, 2, 1), QPolynomial::from_i64s(&[1, 1, 2, 2, 2, 1, 1]));
        assert_eq!(gauss_binomial(7, 0, 1), QPolynomial::one());
        assert_eq!(gauss_binomial(4, 2, 2), gauss_binomial(4, 2, 1).dilate(2));
        assert!(gauss_binomial(2, 3, 1).is_zero());
    }

    #[test]
    fn gauss_routes_agree() {
        for m in 0..=14 {
            for k in 0..=m {
                assert_eq!(
                    gauss_binomial(m, k, 1),
                    gauss_binomial_by_division(m, k).unwrap(),
                    "[{m},{k}]"
                );
            }
        }
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), QPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(4), QPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), QPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), QPolynomial::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_reconstructs() {
        for n in 1..=64 {
            let prod: QPolynomial = divisors(n).into_iter().map(cyclotomic).product();
            assert_eq!(prod, &QPolynomial::monomial(1, n) - &QPolynomial::one(), "n = {n}");
        }
    }

    #[test]
    fn primitive_root_evaluation() {
        let p = QPolynomial::from_i64s(&[2, 1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(eval_at_primitive_root(&p, spec(2)).unwrap(), BigInt::from(4));
        assert_eq!(eval_at_primitive_root(&p, spec(8)).unwrap(), BigInt::from(0));
        assert_eq!(eval_at_primitive_root(&p, spec(1)).unwrap(), p.eval_one());
        // q itself has no integer value at a primitive cube root.
        assert_eq!(
            eval_at_primitive_root(&QPolynomial::monomial(1, 1), spec(3)),
            Err(Error::NonConstantRemainder { d: 3 })
        );
    }

    #[test]
    fn q_lucas_examples() {
        assert_eq!(q_lucas(5, 2, spec(3)).unwrap(), BigInt::from(1));
        assert_eq!(q_lucas(6, 3, spec(3)).unwrap(), BigInt::from(2));
        for d in 2..6 {
            assert_eq!(q_lucas(9, 0, spec(d)).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}

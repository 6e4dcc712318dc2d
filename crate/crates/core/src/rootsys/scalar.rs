//! Exact arithmetic in `Q(√5)`: a value is `a + b√5` with rational `a`, `b`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactScalar {
    pub a: Rational64,
    pub b: Rational64,
}

impl ExactScalar {
    pub fn new(a: Rational64, b: Rational64) -> Self {
        Self { a, b }
    }

    pub fn int(n: i64) -> Self {
        Self::new(Rational64::from_integer(n), Rational64::zero())
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// The golden ratio `(1+√5)/2`.
    pub fn phi() -> Self {
        let half = Rational64::new(1, 2);
        Self::new(half, half)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Sign of the real number `a + b√5`.
    pub fn signum(&self) -> i32 {
        let sa = sign(self.a);
        let sb = sign(self.b);
        if sa == 0 || sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        // opposite signs: compare a^2 with 5 b^2
        let lhs = self.a * self.a;
        let rhs = self.b * self.b * Rational64::from_integer(5);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Numeric comparison (the derived `Ord` is only lexicographic).
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }

    /// Coordinates `(p, q)` with `self = p + qφ`, when both are integers.
    pub fn golden_integers(&self) -> Option<(i64, i64)> {
        let q = self.b * Rational64::from_integer(2);
        let p = self.a - self.b;
        (q.is_integer() && p.is_integer()).then(|| (p.to_integer(), q.to_integer()))
    }
}

fn sign(r: Rational64) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for ExactScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for ExactScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for ExactScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for ExactScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let five = Rational64::from_integer(5);
        Self::new(self.a * o.a + five * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for ExactScalar {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl fmt::Display for ExactScalar {
    /// Rationals print as themselves, elements of `Z[φ]` as `p+qphi`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        match self.golden_integers() {
            Some((0, q)) if q.is_one() => write!(f, "phi"),
            Some((0, q)) => write!(f, "{q}phi"),
            Some((p, q)) if q.is_one() => write!(f, "{p}+phi"),
            Some((p, q)) if q < 0 => write!(f, "{p}{q}phi"),
            Some((p, q)) => write!(f, "{p}+{q}phi"),
            None => write!(f, "{}+{}r5", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_identity() {
        let p = ExactScalar::phi();
        assert_eq!(p * p, p + ExactScalar::one());
        assert_eq!(p.golden_integers(), Some((0, 1)));
        assert_eq!((p * p).to_string(), "1+phi");
    }

    #[test]
    fn signs() {
        let p = ExactScalar::phi();
        assert_eq!(p.signum(), 1);
        assert_eq!((ExactScalar::int(2) - p).signum(), 1);
        assert_eq!((ExactScalar::int(1) - p).signum(), -1);
        assert_eq!(ExactScalar::zero().signum(), 0);
        assert_eq!(ExactScalar::int(3).cmp_value(&(p + p)), Ordering::Less);
    }
}

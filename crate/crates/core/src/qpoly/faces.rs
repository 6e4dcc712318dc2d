//! Face polynomials of the generalized cluster complexes and their values at
//! roots of unity.
//!
//! Conventions: family `A` with rank parameter `n` is the complex of type
//! `A_{n-1}`, realized on an `(sn+2)`-gon; `B` and `D` use rank `n` directly;
//! `I2` uses the dihedral parameter `a`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coxeter::{CoxeterDatum, CoxeterType};
use super::qanalog::{binomial, gauss_binomial_i, q_int, RootOfUnitySpec};
use super::QPolynomial;
use crate::error::{out_of_range, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    I2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::I2 => "I2",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "D" => Ok(Family::D),
            "I2" | "I" => Ok(Family::I2),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

/// A generalized cluster complex `Δ^s(Φ)` from one of the four families with a
/// polygon or graph model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexType {
    family: Family,
    rank: usize,
    s: usize,
}

impl ComplexType {
    pub fn new(family: Family, rank: usize, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(out_of_range("s", 0, "s >= 1"));
        }
        let min = match family {
            Family::A => 1,
            Family::B | Family::D => 2,
            Family::I2 => 3,
        };
        if rank < min {
            let what = if family == Family::I2 { "a" } else { "n" };
            return Err(out_of_range(what, rank, format!("{what} >= {min} for type {family}")));
        }
        Ok(Self { family, rank, s })
    }

    pub fn a(s: usize, n: usize) -> Result<Self> {
        Self::new(Family::A, n, s)
    }
    pub fn b(s: usize, n: usize) -> Result<Self> {
        Self::new(Family::B, n, s)
    }
    pub fn d(s: usize, n: usize) -> Result<Self> {
        Self::new(Family::D, n, s)
    }
    pub fn i2(s: usize, a: usize) -> Result<Self> {
        Self::new(Family::I2, a, s)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `n` for A, B, D and `a` for I2.
    pub fn rank_param(&self) -> usize {
        self.rank
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Order of the cyclic group generated by `Γ_s`, i.e. `sh + 2`.
    pub fn group_order(&self) -> usize {
        let (s, n) = (self.s, self.rank);
        match self.family {
            Family::A => s * n + 2,
            Family::B => 2 * s * n + 2,
            Family::D => 2 * s * (n - 1) + 2,
            Family::I2 => s * n + 2,
        }
    }

    /// Largest face size.
    pub fn max_k(&self) -> usize {
        match self.family {
            Family::A => self.rank - 1,
            Family::B | Family::D => self.rank,
            Family::I2 => 2,
        }
    }

    pub fn check_k(&self, k: usize) -> Result<()> {
        if k > self.max_k() {
            return Err(out_of_range("k", k, format!("0 <= k <= {}", self.max_k())));
        }
        Ok(())
    }

    /// The Coxeter type `Φ` of the complex.
    pub fn coxeter_type(&self) -> CoxeterType {
        match self.family {
            Family::A => CoxeterType::A(self.rank - 1),
            Family::B => CoxeterType::B(self.rank),
            Family::D => CoxeterType::D(self.rank),
            Family::I2 => CoxeterType::I2(self.rank),
        }
    }
}

impl fmt::Display for ComplexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.family == Family::I2 { "a" } else { "n" };
        write!(f, "{}(s={}, {p}={})", self.family, self.s, self.rank)
    }
}

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// Closed-form face numbers `f_k(Φ, s)`.
pub fn face_number(t: ComplexType, k: usize) -> Result<BigInt> {
    t.check_k(k)?;
    let (s, n, k) = (t.s as i64, t.rank as i64, k as i64);
    Ok(match t.family {
        Family::A => c(s * n + k + 1, k) * c(n - 1, k) / BigInt::from(k + 1),
        Family::B => c(s * n + k, k) * c(n, k),
        Family::D => c(s * (n - 1) + k, k) * c(n, k) + c(s * (n - 1) + k - 1, k) * c(n - 2, k - 2),
        Family::I2 => match k {
            0 => BigInt::from(1),
            1 => BigInt::from(s * n + 2),
            _ => BigInt::from((s * n + 2) * (s + 1) / 2),
        },
    })
}

/// The q-analogue `X(q)` of the `k`-face number used for cyclic sieving.
///
/// * A: `G(s,n,k;q) = [sn+k+1, k] [n-1, k] / [k+1]`
/// * B: `H(s,n,k;q) = [sn+k, k]_{q^2} [n, k]_{q^2}`
/// * D: the four-term `F(s,n,k;q)`, two of whose terms carry a factor `q^n`
/// * I2: `[sa+2]_q` or `[sa+2]_{q^2}` for vertices (a odd / even), and
///   `[sa+2]/[2] * [sa+a]/[a]` for edges
pub fn face_poly(t: ComplexType, k: usize) -> Result<QPolynomial> {
    t.check_k(k)?;
    let (s, n, ki) = (t.s as i64, t.rank as i64, k as i64);
    match t.family {
        Family::A => {
            let num = &gauss_binomial_i(s * n + ki + 1, ki, 1) * &gauss_binomial_i(n - 1, ki, 1);
            num.div_exact(&q_int(k + 1))
                .ok_or_else(|| Error::InexactDivision(format!("G({s},{n},{k})")))
        }
        Family::B => Ok(&gauss_binomial_i(s * n + ki, ki, 2) * &gauss_binomial_i(n, ki, 2)),
        Family::D => Ok(d_poly(s, n, ki)),
        Family::I2 => {
            let big = t.s * t.rank + 2;
            Ok(match k {
                0 => QPolynomial::one(),
                1 if t.rank % 2 == 1 => q_int(big),
                1 => q_int(big).dilate(2),
                _ => {
                    let num = &q_int(big) * &q_int(t.s * t.rank + t.rank);
                    let den = &q_int(2) * &q_int(t.rank);
                    num.div_exact(&den)
                        .ok_or_else(|| Error::InexactDivision(format!("I2 edges s={s} a={n}")))?
                }
            })
        }
    }
}

fn d_poly(s: i64, n: i64, k: i64) -> QPolynomial {
    let top = s * (n - 1) + k;
    let main = gauss_binomial_i(top, k, 2);
    let qn = n as usize;
    let t1 = &main * &gauss_binomial_i(n - 1, k, 2);
    let t2 = (&main * &gauss_binomial_i(n - 2, k - 1, 2)).shift(qn);
    let t3 = &main * &gauss_binomial_i(n - 2, k - 2, 2);
    let t4 = (&gauss_binomial_i(top - 1, k, 2) * &gauss_binomial_i(n - 2, k - 2, 2)).shift(qn);
    [t1, t2, t3, t4].into_iter().sum()
}

/// The alternative type-D polynomial, whose middle term carries `1 + q^n`.
pub fn face_poly_d_alternate(s: usize, n: usize, k: usize) -> Result<QPolynomial> {
    let t = ComplexType::d(s, n)?;
    t.check_k(k)?;
    let (s, n, k) = (s as i64, n as i64, k as i64);
    let top = s * (n - 1) + k;
    let main = gauss_binomial_i(top, k, 2);
    let qn = n as usize;
    let t1 = &main * &gauss_binomial_i(n - 2, k, 2);
    let mid = &main * &gauss_binomial_i(n - 2, k - 1, 2);
    let t2 = &mid + &mid.shift(qn);
    let t3 = &main * &gauss_binomial_i(n - 2, k - 2, 2);
    let t4 = (&gauss_binomial_i(top - 1, k, 2) * &gauss_binomial_i(n - 2, k - 2, 2)).shift(qn);
    Ok([t1, t2, t3, t4].into_iter().sum())
}

/// `Cat^(s)(Φ, q) = Π [sh + e_i + 1]_q / [e_i + 1]_q`.
pub fn q_catalan(datum: &CoxeterDatum, s: usize) -> Result<QPolynomial> {
    let num: QPolynomial = datum.exponents.iter().map(|&e| q_int(s * datum.h + e + 1)).product();
    let den: QPolynomial = datum.exponents.iter().map(|&e| q_int(e + 1)).product();
    num.div_exact(&den)
        .ok_or_else(|| Error::InexactDivision(format!("Cat^({s})({})", datum.ty)))
}

/// Closed-form value of [`face_poly`] at a primitive `d`-th root of unity,
/// by case analysis on `d`, `k` and `n`.
///
/// `d` must divide the group order. For `d = 1` this is the face number.
pub fn closed_form_eval(t: ComplexType, k: usize, spec: RootOfUnitySpec) -> Result<BigInt> {
    t.check_k(k)?;
    let d = spec.order();
    let order = t.group_order();
    if !order.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, order });
    }
    if d == 1 {
        return face_number(t, k);
    }
    let (s, n, k, d) = (t.s as i64, t.rank as i64, k as i64, d as i64);
    let zero = BigInt::zero();
    Ok(match t.family {
        Family::A => {
            if d == 2 && k % 2 == 1 && n % 2 == 0 {
                c((s * n + k + 1) / 2, (k + 1) / 2) * c((n - 2) / 2, (k - 1) / 2)
            } else if k % d == 0 {
                c((s * n + 2 + k) / d - 1, k / d) * c((n - 1) / d, k / d)
            } else {
                zero
            }
        }
        Family::B => {
            if d == 2 {
                c(s * n + k, k) * c(n, k)
            } else if d % 2 == 1 {
                if k % d == 0 {
                    c((s * n + 1 + k) / d - 1, k / d) * c((n - 1) / d, k / d)
                } else {
                    zero
                }
            } else if (2 * k) % d == 0 {
                c((2 * s * n + 2 + 2 * k) / d - 1, 2 * k / d) * c(2 * (n - 1) / d, 2 * k / d)
            } else {
                zero
            }
        }
        Family::D => {
            let m = s * (n - 1) + 1;
            if d == 2 {
                if n % 2 == 0 {
                    c(m - 1 + k, k) * c(n, k) + c(m - 2 + k, k) * c(n - 2, k - 2)
                } else {
                    c(m - 1 + k, k) * c(n - 2, k) + c(m - 2 + k, k - 1) * c(n - 2, k - 2)
                }
            } else if d % 2 == 1 {
                if k % d == 0 {
                    let base = c((m + k) / d - 1, k / d);
                    if n % d == 0 {
                        base * (c(n / d, k / d) + c(n / d - 1, k / d - 1))
                    } else {
                        base * c((n - 2) / d, k / d)
                    }
                } else {
                    zero
                }
            } else if (2 * k) % d == 0 {
                let base = c((2 * m + 2 * k) / d - 1, 2 * k / d);
                // fixed faces may contain diameters only when d divides n
                if n % d == 0 {
                    base * (c(2 * n / d, 2 * k / d) + c(2 * n / d - 1, 2 * k / d - 1))
                } else {
                    base * c(2 * (n - 2) / d, 2 * k / d)
                }
            } else {
                zero
            }
        }
        Family::I2 => {
            let big = s * n + 2;
            match (k, n % 2 == 1, d) {
                (0, _, _) => BigInt::from(1),
                (1, false, 2) => BigInt::from(big),
                (2, true, 2) => BigInt::from(big / 2),
                (2, false, 2) => BigInt::from(big * (s + 1) / 2),
                _ => zero,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::qanalog::{divisors, eval_at_primitive_root};

    fn residues_i64(p: &QPolynomial, n: usize) -> Vec<i64> {
        p.residues(n).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn worked_residues() {
        let g = face_poly(ComplexType::a(2, 3).unwrap(), 2).unwrap();
        assert_eq!(residues_i64(&g, 8), vec![2, 1, 2, 1, 2, 1, 2, 1]);
        let h = face_poly(ComplexType::b(1, 3).unwrap(), 1).unwrap();
        assert_eq!(residues_i64(&h, 8), vec![3, 0, 3, 0, 3, 0, 3, 0]);
        let f = face_poly(ComplexType::d(3, 2).unwrap(), 2).unwrap();
        assert_eq!(residues_i64(&f, 8), vec![4, 0, 4, 0, 4, 0, 4, 0]);
    }

    #[test]
    fn k_out_of_range() {
        assert!(face_poly(ComplexType::a(2, 3).unwrap(), 3).is_err());
        assert!(face_poly(ComplexType::b(1, 3).unwrap(), 4).is_err());
        assert!(face_poly(ComplexType::i2(1, 5).unwrap(), 3).is_err());
        assert!(face_poly_d_alternate(1, 3, 4).is_err());
    }

    #[test]
    fn specialization_at_one_is_face_number() {
        for s in 1..=3 {
            for n in 1..=7 {
                for fam in [Family::A, Family::B, Family::D] {
                    let Ok(t) = ComplexType::new(fam, n, s) else { continue };
                    for k in 0..=t.max_k() {
                        let p = face_poly(t, k).unwrap();
                        assert_eq!(p.eval_one(), face_number(t, k).unwrap(), "{t} k={k}");
                        assert!(p.has_nonnegative_coeffs(), "{t} k={k}");
                    }
                }
            }
        }
        for s in 1..=4 {
            for a in 3..=9 {
                let t = ComplexType::i2(s, a).unwrap();
                for k in 0..=2 {
                    assert_eq!(face_poly(t, k).unwrap().eval_one(), face_number(t, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn alternate_d_polynomial() {
        assert_eq!(face_poly_d_alternate(3, 2, 2).unwrap().eval_one(), BigInt::from(16));
        assert_eq!(face_poly_d_alternate(2, 4, 0).unwrap(), QPolynomial::one());
        let cat = q_catalan(&CoxeterDatum::new(CoxeterType::D(4)), 1).unwrap();
        assert_eq!(face_poly_d_alternate(1, 4, 4).unwrap(), cat);
    }

    #[test]
    fn catalan_values() {
        let v = |ty, s| q_catalan(&CoxeterDatum::new(ty), s).unwrap().eval_one();
        assert_eq!(v(CoxeterType::A(2), 1), BigInt::from(5));
        assert_eq!(v(CoxeterType::E6, 1), BigInt::from(833));
        assert_eq!(v(CoxeterType::H3, 1), BigInt::from(32));
        assert_eq!(v(CoxeterType::E8, 1), BigInt::from(25080));
        assert_eq!(v(CoxeterType::E7, 1), BigInt::from(4160));
        assert_eq!(v(CoxeterType::F4, 1), BigInt::from(105));
        assert_eq!(v(CoxeterType::H4, 1), BigInt::from(280));
    }

    #[test]
    fn catalan_matches_top_face_polynomial() {
        for s in 1..=3 {
            for n in 2..=6 {
                let a = q_catalan(&CoxeterDatum::new(CoxeterType::A(n - 1)), s).unwrap();
                // top-dimensional faces of the (sn+2)-gon model use n-1 diagonals
                assert_eq!(a, face_poly(ComplexType::a(s, n).unwrap(), n - 1).unwrap());
                let b = q_catalan(&CoxeterDatum::new(CoxeterType::B(n)), s).unwrap();
                assert_eq!(b, face_poly(ComplexType::b(s, n).unwrap(), n).unwrap());
                let d = q_catalan(&CoxeterDatum::new(CoxeterType::D(n)), s).unwrap();
                assert_eq!(d, face_poly(ComplexType::d(s, n).unwrap(), n).unwrap(), "D{n} s={s}");
            }
            for a in 3..=8 {
                let cat = q_catalan(&CoxeterDatum::new(CoxeterType::I2(a)), s).unwrap();
                assert_eq!(cat, face_poly(ComplexType::i2(s, a).unwrap(), 2).unwrap());
            }
        }
    }

    #[test]
    fn closed_forms_match_cyclotomic_route() {
        let mut cases = Vec::new();
        for s in 1..=3 {
            for n in 1..=7 {
                for fam in [Family::A, Family::B, Family::D] {
                    if let Ok(t) = ComplexType::new(fam, n, s) {
                        cases.push(t);
                    }
                }
            }
            for a in 3..=8 {
                cases.push(ComplexType::i2(s, a).unwrap());
            }
        }
        for t in cases {
            for k in 0..=t.max_k() {
                let p = face_poly(t, k).unwrap();
                for d in divisors(t.group_order()) {
                    let spec = RootOfUnitySpec::new(d).unwrap();
                    assert_eq!(
                        closed_form_eval(t, k, spec).unwrap(),
                        eval_at_primitive_root(&p, spec).unwrap(),
                        "{t} k={k} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let s2 = RootOfUnitySpec::new(2).unwrap();
        assert_eq!(
            closed_form_eval(ComplexType::a(2, 3).unwrap(), 2, s2).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            closed_form_eval(ComplexType::d(3, 2).unwrap(), 2, s2).unwrap(),
            BigInt::from(16)
        );
        let s3 = RootOfUnitySpec::new(3).unwrap();
        assert_eq!(
            closed_form_eval(ComplexType::a(2, 3).unwrap(), 2, s3),
            Err(Error::NotDivisor { d: 3, order: 8 })
        );
    }
}

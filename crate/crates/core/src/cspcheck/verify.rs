//! Triples `(X, X(q), C)` and the per-divisor comparison.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{count_fixed, orbit_counts, FaceIds, OrbitStructure, Permutation};
use crate::error::{Error, Result};
use crate::polygons::{enumerate_nc_trees, rotate_tree, Diagonal, I2Model, TypeA, TypeB, TypeD};
use crate::qpoly::CoxeterType;
use crate::qpoly::{
    closed_form_eval, divisors, eval_at_primitive_root, face_poly, face_poly_d_alternate, gauss_binomial, q_int,
    ComplexType, Family, QPolynomial, RootOfUnitySpec,
};
use crate::rootsys::ColoredComplex;

/// What an instance is about, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceLabel {
    pub family: String,
    pub s: usize,
    pub n_or_a: usize,
    pub k: usize,
}

/// A face set with a cyclic action and a candidate polynomial.
#[derive(Debug, Clone)]
pub struct CSPInstance {
    label: InstanceLabel,
    faces: Vec<FaceIds>,
    generator: Permutation,
    group_order: usize,
    polynomial: QPolynomial,
    closed_form: Option<(ComplexType, usize)>,
}

impl CSPInstance {
    /// Rejects the triple unless `X(1) = |X|`. `faces` must be closed under
    /// the generator, and `generator^group_order` must be the identity.
    pub fn new(
        label: InstanceLabel,
        mut faces: Vec<FaceIds>,
        generator: Permutation,
        group_order: usize,
        polynomial: QPolynomial,
    ) -> Result<Self> {
        if polynomial.eval_one() != BigInt::from(faces.len()) {
            return Err(Error::CardinalityMismatch {
                polynomial: polynomial.eval_one().to_string(),
                faces: faces.len(),
            });
        }
        if group_order == 0 || !generator.pow(group_order).is_identity() {
            return Err(Error::InvalidParameter(format!(
                "generator order does not divide {group_order}"
            )));
        }
        faces.par_sort_unstable();
        Ok(Self {
            label,
            faces,
            generator,
            group_order,
            polynomial,
            closed_form: None,
        })
    }

    /// Also compare against the closed-form evaluation for `(t, k)`.
    pub fn with_closed_form(mut self, t: ComplexType, k: usize) -> Self {
        self.closed_form = Some((t, k));
        self
    }

    /// `k`-faces of a polygon or graph model with its face polynomial.
    pub fn polygon(t: ComplexType, k: usize) -> Result<Self> {
        Self::polygon_with(t, k, face_poly(t, k)?).map(|i| i.with_closed_form(t, k))
    }

    /// Type D with the alternative four-term polynomial.
    pub fn polygon_d_alternate(s: usize, n: usize, k: usize) -> Result<Self> {
        let t = ComplexType::d(s, n)?;
        Self::polygon_with(t, k, face_poly_d_alternate(s, n, k)?).map(|i| i.with_closed_form(t, k))
    }

    /// `k`-faces of a polygon or graph model with any candidate polynomial.
    pub fn polygon_with(t: ComplexType, k: usize, polynomial: QPolynomial) -> Result<Self> {
        t.check_k(k)?;
        let (faces, generator) = match t.family() {
            Family::A => {
                let m = TypeA::model(t.s(), t.rank_param())?;
                (m.face_ids(k)?, m.complex().generator().clone())
            }
            Family::B => {
                let m = TypeB::model(t.s(), t.rank_param())?;
                (m.face_ids(k)?, m.complex().generator().clone())
            }
            Family::D => {
                let m = TypeD::model(t.s(), t.rank_param())?;
                (m.face_ids(k)?, m.complex().generator().clone())
            }
            Family::I2 => {
                let m = I2Model::model(t.s(), t.rank_param())?;
                (m.face_ids(k)?, m.complex().generator().clone())
            }
        };
        let label = InstanceLabel {
            family: t.family().to_string(),
            s: t.s(),
            n_or_a: t.rank_param(),
            k,
        };
        Self::new(label, faces, generator, t.group_order(), polynomial)
    }

    /// `k`-faces of the root-system complex with a candidate polynomial.
    pub fn roots(complex: &ColoredComplex, k: usize, polynomial: QPolynomial) -> Result<Self> {
        let label = InstanceLabel {
            family: complex.system().coxeter_type().to_string(),
            s: complex.s(),
            n_or_a: complex.rank(),
            k,
        };
        Self::new(
            label,
            complex.face_ids(k)?,
            complex.complex().generator().clone(),
            complex.group_order(),
            polynomial,
        )
    }

    /// Noncrossing trees on `n+1` points under rotation, with
    /// `X(q) = [3n choose n]_q / [2n+1]_q`. Trees are encoded as sets of
    /// point pairs.
    pub fn noncrossing_trees(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("need n >= 1".into()));
        }
        let points = n + 1;
        let pairs: Vec<Diagonal> = (1..=points)
            .flat_map(|i| (i + 1..=points).map(move |j| Diagonal::new(i, j)))
            .collect();
        let id = |d: &Diagonal| pairs.binary_search(d).expect("pair") as u32;
        let trees = enumerate_nc_trees(points);
        let faces: Vec<FaceIds> = trees
            .iter()
            .map(|t| {
                let mut f: FaceIds = t.edges.iter().map(id).collect();
                f.sort_unstable();
                f
            })
            .collect();
        let images = pairs
            .iter()
            .map(|d| {
                let probe = crate::polygons::NcTree {
                    points,
                    edges: vec![*d],
                };
                id(&rotate_tree(&probe, 1).edges[0])
            })
            .collect();
        let polynomial = gauss_binomial(3 * n, n, 1)
            .div_exact(&q_int(2 * n + 1))
            .ok_or_else(|| Error::InexactDivision(format!("[2n+1] into [3n, n] for n = {n}")))?;
        let label = InstanceLabel {
            family: "NCT".into(),
            s: 1,
            n_or_a: n,
            k: n,
        };
        Self::new(label, faces, Permutation::from_images(images), points, polynomial)
    }

    pub fn label(&self) -> &InstanceLabel {
        &self.label
    }

    pub fn faces(&self) -> &[FaceIds] {
        &self.faces
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn polynomial(&self) -> &QPolynomial {
        &self.polynomial
    }

    pub fn generator(&self) -> &Permutation {
        &self.generator
    }
}

/// Comparison at one divisor `d` of the group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorCheck {
    pub d: usize,
    /// `X(ω_d)`; `None` when the remainder is not constant.
    pub lhs: Option<i64>,
    /// Faces fixed by the element of order `d`.
    pub rhs: i64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub size: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CSPReport {
    pub family: String,
    pub s: usize,
    pub n_or_a: usize,
    pub k: usize,
    pub group_order: usize,
    pub checks: Vec<DivisorCheck>,
    /// Coefficients of `X(q) mod q^N - 1`.
    pub residues: Vec<i64>,
    /// Largest orbit size first.
    pub orbits: Vec<OrbitEntry>,
    /// Whether residue `a_j` equals the number of orbits whose stabilizer
    /// order divides `j`, for every `j`.
    pub residues_match_orbits: bool,
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::InvalidParameter(format!("{x} does not fit in 64 bits")))
}

impl CSPReport {
    /// True iff every divisor check passes and the residues agree with the
    /// orbit partition.
    pub fn passed(&self) -> bool {
        self.residues_match_orbits && self.checks.iter().all(|c| c.pass)
    }

    pub fn orbit_structure(&self) -> OrbitStructure {
        OrbitStructure::from_entries(&self.orbits.iter().map(|e| (e.size, e.count)).collect::<Vec<_>>())
    }

    pub fn face_count(&self) -> usize {
        self.orbit_structure().total()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for CSPReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let param = if self.family == "I2" { "a" } else { "n" };
        writeln!(
            f,
            "{} s={} {param}={} k={}  N={}  |X|={}",
            self.family,
            self.s,
            self.n_or_a,
            self.k,
            self.group_order,
            self.face_count()
        )?;
        let cell = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        writeln!(
            f,
            "{:>6} {:>10} {:>10} {:>10}  verdict",
            "d", "X(w_d)", "fixed", "closed"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:>6} {:>10} {:>10} {:>10}  {}",
                c.d,
                cell(c.lhs),
                c.rhs,
                cell(c.closed_form),
                if c.pass { "pass" } else { "FAIL" }
            )?;
        }
        let res: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        writeln!(f, "residues: {}", res.join(" "))?;
        writeln!(f, "orbits: {}", self.orbit_structure())?;
        writeln!(
            f,
            "residues vs orbits: {}",
            if self.residues_match_orbits {
                "consistent"
            } else {
                "INCONSISTENT"
            }
        )?;
        write!(f, "CSP: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// Checks `X(ω_d) = |X^{c_d}|` for every divisor `d` of the group order, the
/// closed forms where available, and the residues against the orbits.
pub fn verify(instance: &CSPInstance) -> Result<CSPReport> {
    let n = instance.group_order;
    let checks: Vec<DivisorCheck> = divisors(n)
        .into_par_iter()
        .map(|d| -> Result<DivisorCheck> {
            let spec = RootOfUnitySpec::new(d)?;
            let lhs = match eval_at_primitive_root(&instance.polynomial, spec) {
                Ok(v) => Some(small(&v)?),
                Err(Error::NonConstantRemainder { .. }) => None,
                Err(e) => return Err(e),
            };
            let rhs = count_fixed(&instance.faces, &instance.generator.pow(n / d)) as i64;
            let closed_form = match instance.closed_form {
                Some((t, k)) => Some(small(&closed_form_eval(t, k, spec)?)?),
                None => None,
            };
            let pass = lhs == Some(rhs) && closed_form.is_none_or(|c| c == rhs);
            Ok(DivisorCheck {
                d,
                lhs,
                rhs,
                pass,
                closed_form,
            })
        })
        .collect::<Result<_>>()?;
    let residues: Vec<i64> = instance
        .polynomial
        .residues(n)
        .iter()
        .map(small)
        .collect::<Result<_>>()?;
    let orbits = OrbitStructure::from(orbit_counts(&instance.faces, &instance.generator));
    let residues_match_orbits = residues_agree(&residues, &orbits, n);
    let label = &instance.label;
    Ok(CSPReport {
        family: label.family.clone(),
        s: label.s,
        n_or_a: label.n_or_a,
        k: label.k,
        group_order: n,
        checks,
        residues,
        orbits: orbits
            .entries()
            .into_iter()
            .map(|(size, count)| OrbitEntry { size, count })
            .collect(),
        residues_match_orbits,
    })
}

/// `a_j` must count the orbits whose stabilizer order `N/size` divides `j`.
pub fn residues_agree(residues: &[i64], orbits: &OrbitStructure, n: usize) -> bool {
    residues.len() == n
        && (0..n).all(|j| {
            let expect: usize = orbits
                .0
                .iter()
                .filter(|(&size, _)| n.is_multiple_of(size) && j % (n / size) == 0)
                .map(|(_, &c)| c)
                .sum();
            residues[j] == expect as i64
        })
}

/// Facets with `X(q) = Cat^(s)(Φ, q)`. Exceptional types use the root
/// system; A, B, D use the polygon models.
pub fn verify_facets_catalan(ty: CoxeterType, s: usize) -> Result<CSPReport> {
    let cat = crate::qpoly::q_catalan(&crate::qpoly::CoxeterDatum::new(ty), s)?;
    let instance = match ty {
        CoxeterType::A(r) => CSPInstance::polygon_with(ComplexType::a(s, r + 1)?, r, cat)?,
        CoxeterType::B(r) => CSPInstance::polygon_with(ComplexType::b(s, r)?, r, cat)?,
        CoxeterType::D(r) => CSPInstance::polygon_with(ComplexType::d(s, r)?, r, cat)?,
        CoxeterType::I2(a) => CSPInstance::polygon_with(ComplexType::i2(s, a)?, 2, cat)?,
        _ => CSPInstance::roots(&ColoredComplex::new(ty, s)?, ty.rank(), cat)?,
    };
    let mut report = verify(&instance)?;
    report.family = ty.to_string();
    report.n_or_a = ty.rank();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_2_3_2() {
        let r = verify(&CSPInstance::polygon(ComplexType::a(2, 3).unwrap(), 2).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.residues, vec![2, 1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(r.orbit_structure().to_string(), "8(1), 4(1)");
        assert_eq!(r.face_count(), 12);
    }

    #[test]
    fn b_1_3_1() {
        let r = verify(&CSPInstance::polygon(ComplexType::b(1, 3).unwrap(), 1).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.residues, vec![3, 0, 3, 0, 3, 0, 3, 0]);
        assert_eq!(r.orbit_structure().to_string(), "4(3)");
    }

    #[test]
    fn wrong_polynomial_fails() {
        let t = ComplexType::a(2, 3).unwrap();
        let p = QPolynomial::from_i64s(&[12]);
        let r = verify(&CSPInstance::polygon_with(t, 2, p).unwrap()).unwrap();
        assert!(!r.passed());
        assert!(!r.residues_match_orbits);
        let bad = CSPInstance::polygon_with(t, 2, QPolynomial::from_i64s(&[11]));
        assert!(matches!(bad, Err(Error::CardinalityMismatch { .. })));
    }

    #[test]
    fn non_constant_remainder_is_a_failure() {
        // q has no rational value at a primitive cube root
        let t = ComplexType::a(1, 4).unwrap();
        let mut coeffs = vec![0i64; 2];
        coeffs[1] = 1;
        let faces = CSPInstance::polygon_with(t, 0, QPolynomial::from_i64s(&coeffs)).unwrap();
        let r = verify(&faces).unwrap();
        assert!(r.checks.iter().any(|c| c.lhs.is_none() && !c.pass));
    }

    #[test]
    fn json_round_trip() {
        let r = verify(&CSPInstance::polygon(ComplexType::i2(2, 5).unwrap(), 2).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(CSPReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn trees() {
        for n in 1..=5 {
            let r = verify(&CSPInstance::noncrossing_trees(n).unwrap()).unwrap();
            assert!(r.passed(), "n = {n}");
        }
    }

    #[test]
    fn catalan_facets() {
        let r = verify_facets_catalan(CoxeterType::A(2), 1).unwrap();
        assert!(r.passed());
        assert_eq!((r.group_order, r.face_count()), (5, 5));
        assert_eq!(r.orbit_structure().to_string(), "5(1)");
        assert!(verify_facets_catalan(CoxeterType::H3, 1).unwrap().passed());
    }
}

//! Colored almost-positive roots `Φ^s≥-1`, the map `Γ_s`, compatibility and
//! the resulting cyclic complex.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::system::{build_root_system, gamma, AlmostPositive, RootSystem};
use crate::complex::{count_fixed, orbit_counts, BitGraph, CyclicComplex, FaceIds, OrbitStructure, Permutation};
use crate::error::{out_of_range, Error, Result};
use crate::polygons::{TypeA, TypeB, TypeD};
use crate::qpoly::CoxeterType;

/// A positive root with a color in `1..=s`, or a negative simple root (always
/// color 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredRoot {
    pub root: AlmostPositive,
    pub color: usize,
}

impl ColoredRoot {
    pub fn new(root: AlmostPositive, color: usize) -> Self {
        Self { root, color }
    }

    pub fn is_negative_simple(&self) -> bool {
        matches!(self.root, AlmostPositive::NegSimple(_))
    }
}

/// `Γ_s(α^k) = α^{k+1}` for a positive root with `k < s`, otherwise
/// `Γ(α)^1`.
pub fn gamma_s(sys: &RootSystem, s: usize, x: ColoredRoot) -> ColoredRoot {
    match x.root {
        AlmostPositive::Positive(_) if x.color < s => ColoredRoot::new(x.root, x.color + 1),
        _ => ColoredRoot::new(gamma(sys, x.root), 1),
    }
}

/// Compatibility of two distinct colored roots: move both by `Γ_s` until one
/// of them is a negative simple root `-α_i`; then they are compatible iff the
/// other one does not involve `α_i`.
pub fn compatible(sys: &RootSystem, s: usize, x: ColoredRoot, y: ColoredRoot) -> Result<bool> {
    let bound = s * sys.coxeter_number() + 2;
    let (mut x, mut y) = (x, y);
    for _ in 0..=bound {
        if let AlmostPositive::NegSimple(i) = x.root {
            return Ok(!sys.involves(y.root, i));
        }
        if let AlmostPositive::NegSimple(i) = y.root {
            return Ok(!sys.involves(x.root, i));
        }
        x = gamma_s(sys, s, x);
        y = gamma_s(sys, s, y);
    }
    Err(Error::NoNegativeSimpleReached(format!(
        "{} / {}",
        sys.display(x.root),
        sys.display(y.root)
    )))
}

/// The generalized cluster complex `Δ^s(Φ)` of a root system with its
/// `Γ_s`-action.
#[derive(Debug, Clone)]
pub struct ColoredComplex {
    system: RootSystem,
    s: usize,
    elements: Vec<ColoredRoot>,
    complex: CyclicComplex,
}

impl ColoredComplex {
    pub fn new(ty: CoxeterType, s: usize) -> Result<Self> {
        Self::from_system(build_root_system(ty)?, s)
    }

    pub fn from_system(system: RootSystem, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(out_of_range("s", 0, "s >= 1"));
        }
        let elements: Vec<ColoredRoot> = system
            .almost_positive()
            .into_iter()
            .flat_map(|r| {
                let colors = if matches!(r, AlmostPositive::NegSimple(_)) {
                    1
                } else {
                    s
                };
                (1..=colors).map(move |c| ColoredRoot::new(r, c))
            })
            .collect();
        let id = |x: ColoredRoot| elements.binary_search(&x).expect("Γ_s stays inside Φ^s≥-1") as u32;
        let images: Vec<u32> = elements.iter().map(|&x| id(gamma_s(&system, s, x))).collect();
        let n = elements.len();
        let rows: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::new();
                for j in i + 1..n {
                    if compatible(&system, s, elements[i], elements[j])? {
                        row.push(j);
                    }
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        let mut graph = BitGraph::new(n);
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                graph.add_edge(i, j);
            }
        }
        let order = s * system.coxeter_number() + 2;
        let complex = CyclicComplex::new(graph, Permutation::from_images(images), order);
        Ok(Self {
            system,
            s,
            elements,
            complex,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// `sh + 2`.
    pub fn group_order(&self) -> usize {
        self.complex.group_order()
    }

    pub fn elements(&self) -> &[ColoredRoot] {
        &self.elements
    }

    pub fn complex(&self) -> &CyclicComplex {
        &self.complex
    }

    pub fn display(&self, x: ColoredRoot) -> String {
        let base = self.system.display(x.root);
        if self.s > 1 && !x.is_negative_simple() {
            format!("{base}^{}", x.color)
        } else {
            base
        }
    }

    pub fn check_k(&self, k: usize) -> Result<()> {
        if k > self.rank() {
            return Err(out_of_range("k", k, format!("0..={}", self.rank())));
        }
        Ok(())
    }

    pub fn face_ids(&self, k: usize) -> Result<Vec<FaceIds>> {
        self.check_k(k)?;
        Ok(self.complex.faces(k))
    }

    pub fn faces(&self, k: usize) -> Result<Vec<Vec<ColoredRoot>>> {
        Ok(self
            .face_ids(k)?
            .iter()
            .map(|f| f.iter().map(|&i| self.elements[i as usize]).collect())
            .collect())
    }

    pub fn orbit_structure(&self, k: usize) -> Result<OrbitStructure> {
        Ok(orbit_counts(&self.face_ids(k)?, self.complex.generator()).into())
    }

    pub fn fixed_count(&self, k: usize, d: usize) -> Result<usize> {
        if d == 0 || !self.group_order().is_multiple_of(d) {
            return Err(Error::NotDivisor {
                d,
                order: self.group_order(),
            });
        }
        Ok(count_fixed(&self.face_ids(k)?, &self.complex.element_of_order(d)))
    }

    /// Compatibility graph as text: one `u v` line per edge, after a header
    /// listing the elements by id.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for (i, &x) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "# {i} {}", self.display(x));
        }
        for (u, v) in self.complex.graph().edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// All `k`-faces of `Δ^s(Φ)`.
pub fn enumerate_faces(s: usize, ty: CoxeterType, k: usize) -> Result<Vec<Vec<ColoredRoot>>> {
    ColoredComplex::new(ty, s)?.faces(k)
}

/// Orbit sizes of `⟨Γ_s⟩` on the `k`-faces.
pub fn orbit_structure(s: usize, ty: CoxeterType, k: usize) -> Result<OrbitStructure> {
    ColoredComplex::new(ty, s)?.orbit_structure(k)
}

/// Compares face counts and orbit-size multisets of the root-system complex
/// against the polygon model: `A_r` with the `(s(r+1)+2)`-gon, `B_r` and
/// `D_r` with the centrally symmetric polygons.
pub fn cross_validate_classical(s: usize, ty: CoxeterType, k: usize) -> Result<()> {
    let roots = ColoredComplex::new(ty, s)?;
    let (faces, orbits): (usize, OrbitStructure) = match ty {
        CoxeterType::A(r) => {
            let m = TypeA::model(s, r + 1)?;
            (m.face_ids(k)?.len(), m.orbit_counts(k)?.into())
        }
        CoxeterType::B(r) => {
            let m = TypeB::model(s, r)?;
            (m.face_ids(k)?.len(), m.orbit_counts(k)?.into())
        }
        CoxeterType::D(r) => {
            let m = TypeD::model(s, r)?;
            (m.face_ids(k)?.len(), m.orbit_counts(k)?.into())
        }
        other => return Err(Error::UnsupportedType(format!("{other} has no polygon model"))),
    };
    let got = roots.orbit_structure(k)?;
    if got.total() != faces {
        return Err(Error::CrossValidation(format!(
            "{ty}, s={s}, k={k}: {} faces from roots, {faces} from polygons",
            got.total()
        )));
    }
    if got != orbits {
        return Err(Error::CrossValidation(format!(
            "{ty}, s={s}, k={k}: orbits {got} from roots, {orbits} from polygons"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{face_number, q_catalan, ComplexType, CoxeterDatum};

    #[test]
    fn a2_complex() {
        let c = ColoredComplex::new(CoxeterType::A(2), 1).unwrap();
        assert_eq!(c.elements().len(), 5);
        assert_eq!(c.faces(2).unwrap().len(), 5);
        let a1 = ColoredRoot::new(AlmostPositive::Positive(0), 1);
        let a2 = ColoredRoot::new(AlmostPositive::Positive(1), 1);
        let a12 = ColoredRoot::new(AlmostPositive::Positive(2), 1);
        let minus_a1 = ColoredRoot::new(AlmostPositive::NegSimple(0), 1);
        // the five facets of the pentagon
        assert!(!compatible(c.system(), 1, a1, a2).unwrap());
        assert!(compatible(c.system(), 1, a1, a12).unwrap());
        assert!(compatible(c.system(), 1, a2, a12).unwrap());
        assert!(!compatible(c.system(), 1, minus_a1, a1).unwrap());
        assert!(compatible(c.system(), 1, minus_a1, a2).unwrap());
        assert!(!compatible(c.system(), 1, minus_a1, a12).unwrap());
    }

    #[test]
    fn color_step() {
        let sys = build_root_system(CoxeterType::B(2)).unwrap();
        let x = ColoredRoot::new(AlmostPositive::Positive(1), 1);
        assert_eq!(gamma_s(&sys, 3, x), ColoredRoot::new(AlmostPositive::Positive(1), 2));
    }

    #[test]
    fn vertex_counts_and_invariance() {
        for (ty, s) in [(CoxeterType::B(3), 2), (CoxeterType::H3, 1), (CoxeterType::A(3), 3)] {
            let c = ColoredComplex::new(ty, s).unwrap();
            assert_eq!(c.elements().len(), s * c.system().positive_roots().len() + c.rank());
            assert!(c.complex().action_preserves_compatibility(), "{ty}");
        }
    }

    #[test]
    fn generator_order() {
        // the half-turn acts trivially exactly when w0 = -1
        for (ty, s, halved) in [
            (CoxeterType::A(2), 1, false),
            (CoxeterType::A(3), 2, false),
            (CoxeterType::B(3), 1, true),
            (CoxeterType::D(4), 1, true),
            (CoxeterType::D(5), 1, false),
            (CoxeterType::E6, 1, false),
            (CoxeterType::E7, 1, true),
            (CoxeterType::F4, 1, true),
            (CoxeterType::H3, 1, true),
        ] {
            let c = ColoredComplex::new(ty, s).unwrap();
            let n = c.group_order();
            let expect = if halved { n / 2 } else { n };
            assert_eq!(c.complex().generator().order(), expect, "{ty} s={s}");
        }
    }

    #[test]
    fn every_orbit_meets_a_negative_simple() {
        let c = ColoredComplex::new(CoxeterType::E6, 1).unwrap();
        let g = c.complex().generator();
        for start in 0..c.elements().len() as u32 {
            let mut x = start;
            let mut hit = false;
            for _ in 0..c.group_order() {
                hit |= c.elements()[x as usize].is_negative_simple();
                x = g.apply(x);
            }
            assert!(hit);
        }
    }

    #[test]
    fn facets_count_catalan() {
        for (ty, s) in [
            (CoxeterType::A(3), 2),
            (CoxeterType::B(2), 3),
            (CoxeterType::H3, 1),
            (CoxeterType::F4, 1),
        ] {
            let c = ColoredComplex::new(ty, s).unwrap();
            let cat = q_catalan(&CoxeterDatum::new(ty), s).unwrap().eval_one();
            assert_eq!(
                c.faces(ty.rank()).unwrap().len().to_string(),
                cat.to_string(),
                "{ty} s={s}"
            );
        }
    }

    #[test]
    fn classical_face_counts() {
        let c = ColoredComplex::new(CoxeterType::D(4), 2).unwrap();
        let t = ComplexType::d(2, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(
                c.faces(k).unwrap().len().to_string(),
                face_number(t, k).unwrap().to_string()
            );
        }
    }

    #[test]
    fn cross_validation_small() {
        for k in 0..=2 {
            cross_validate_classical(1, CoxeterType::A(2), k).unwrap();
            cross_validate_classical(2, CoxeterType::B(2), k).unwrap();
        }
        assert!(cross_validate_classical(1, CoxeterType::E6, 1).is_err());
    }

    #[test]
    fn edge_list_export() {
        let text = ColoredComplex::new(CoxeterType::A(2), 1).unwrap().edge_list();
        assert!(text.starts_with("# 0 -a1\n"));
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 5);
    }
}

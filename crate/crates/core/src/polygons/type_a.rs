//! Type `A_{n-1}`: `s`-divisible dissections of an `(sn+2)`-gon.

use super::chord::{crosses, is_s_divisible, Diagonal};
use super::model::{Face, Model, PartText, Realization};
use crate::error::{Error, Result};
use crate::qpoly::ComplexType;

pub type DissectionA = Face<Diagonal>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeA {
    ty: ComplexType,
}

impl TypeA {
    pub fn new(s: usize, n: usize) -> Result<Self> {
        Ok(Self {
            ty: ComplexType::a(s, n)?,
        })
    }

    pub fn model(s: usize, n: usize) -> Result<Model<Self>> {
        Ok(Model::new(Self::new(s, n)?))
    }
}

impl PartText for Diagonal {
    fn write_part(&self, _polygon: usize) -> String {
        self.to_string()
    }

    fn parse_part(s: &str, polygon: usize) -> Result<Self> {
        let d: Diagonal = s.parse()?;
        if d.j > polygon || d.i == 0 {
            return Err(Error::Parse(format!("chord {d} outside a {polygon}-gon")));
        }
        Ok(d)
    }
}

impl Realization for TypeA {
    type Part = Diagonal;

    fn complex_type(&self) -> ComplexType {
        self.ty
    }

    fn polygon_size(&self) -> usize {
        self.ty.group_order()
    }

    fn parts(&self) -> Vec<Diagonal> {
        let big = self.polygon_size();
        let s = self.ty.s();
        (1..=big)
            .flat_map(|i| ((i + 1)..=big).map(move |j| Diagonal::new(i, j)))
            .filter(|&d| is_s_divisible(d, big, s))
            .collect()
    }

    fn compatible(&self, a: &Diagonal, b: &Diagonal) -> bool {
        !crosses(*a, *b)
    }

    fn step(&self, a: &Diagonal) -> Diagonal {
        a.rotate(1, self.polygon_size())
    }
}

/// All `s`-divisible dissections of the `(sn+2)`-gon with `k` diagonals.
pub fn enumerate_a(s: usize, n: usize, k: usize) -> Result<Vec<DissectionA>> {
    TypeA::model(s, n)?.enumerate(k)
}

/// Every label decremented by `t` modulo the polygon size.
pub fn rotate_a(x: &DissectionA, t: i64) -> DissectionA {
    Face::new(x.polygon, x.parts.iter().map(|d| d.rotate(t, x.polygon)).collect())
}

/// Dissections invariant under `d`-fold rotation.
pub fn fixed_a(s: usize, n: usize, k: usize, d: usize) -> Result<Vec<DissectionA>> {
    TypeA::model(s, n)?.fixed(k, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_counts() {
        assert_eq!(enumerate_a(1, 4, 2).unwrap().len(), 21);
        assert_eq!(enumerate_a(1, 4, 0).unwrap(), vec![Face::new(6, vec![])]);
        assert_eq!(enumerate_a(2, 3, 2).unwrap().len(), 12);
        assert!(enumerate_a(2, 3, 3).is_err());
    }

    #[test]
    fn rotation_round_trip() {
        for x in enumerate_a(2, 3, 2).unwrap() {
            assert_eq!(rotate_a(&x, 8), x);
            assert_eq!(rotate_a(&rotate_a(&x, 3), 5), x);
        }
    }

    #[test]
    fn octagon_half_turn_fixed_set() {
        let fixed = fixed_a(2, 3, 2, 2).unwrap();
        assert_eq!(fixed.len(), 4);
        for x in &fixed {
            assert_eq!(&rotate_a(x, 4), x);
        }
        assert!(fixed_a(2, 3, 2, 3).is_err());
        assert!(fixed_a(2, 3, 2, 8).unwrap().is_empty());
    }

    #[test]
    fn model_rotation_matches_label_rotation() {
        let m = TypeA::model(2, 4).unwrap();
        for x in m.enumerate(2).unwrap() {
            assert_eq!(m.rotate(&x, 3), rotate_a(&x, 3));
        }
    }

    #[test]
    fn text_round_trip() {
        let x: DissectionA = Face::parse("8,1-4,4-7").unwrap();
        assert_eq!(x.to_string(), "8,1-4,4-7");
        assert!(Face::<Diagonal>::parse("8,1-9").is_err());
        assert!(TypeA::model(2, 3)
            .unwrap()
            .to_ids(&Face::parse("8,1-4,2-5").unwrap())
            .is_err());
    }
}

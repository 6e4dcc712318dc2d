//! Type `B_n`: centrally symmetric `s`-divisible dissections of a
//! `(2sn+2)`-gon. Vertices are labeled `1..=L` then `~1..=~L` with `L = sn+1`;
//! internally `~i` is `i + L`.

use super::chord::{crosses, is_s_divisible, Diagonal};
use super::model::{Face, Model, PartText, Realization};
use crate::error::{Error, Result};
use crate::qpoly::ComplexType;

/// A diameter `i-~i`, or a pair of centrally symmetric chords stored as its
/// lexicographically least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BDiagonal {
    Diameter(usize),
    Pair(Diagonal),
}

pub type DissectionB = Face<BDiagonal>;

pub(crate) fn antipode(d: Diagonal, n_gon: usize) -> Diagonal {
    let h = n_gon / 2;
    Diagonal::new((d.i - 1 + h) % n_gon + 1, (d.j - 1 + h) % n_gon + 1)
}

pub(crate) fn canonical_pair(d: Diagonal, n_gon: usize) -> Diagonal {
    d.min(antipode(d, n_gon))
}

pub(crate) fn write_vertex(p: usize, n_gon: usize) -> String {
    let h = n_gon / 2;
    if p <= h {
        p.to_string()
    } else {
        format!("~{}", p - h)
    }
}

pub(crate) fn parse_vertex(s: &str, n_gon: usize) -> Result<usize> {
    let h = n_gon / 2;
    let bad = || Error::Parse(format!("bad vertex label `{s}` for a {n_gon}-gon"));
    let (bar, digits) = match s.trim().strip_prefix('~') {
        Some(rest) => (true, rest),
        None => (false, s.trim()),
    };
    let v: usize = digits.parse().map_err(|_| bad())?;
    if v == 0 || v > h {
        return Err(bad());
    }
    Ok(if bar { v + h } else { v })
}

/// Parses `x-y` with possibly barred labels into a chord of positions.
pub(crate) fn parse_chord(s: &str, n_gon: usize) -> Result<Diagonal> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| Error::Parse(format!("expected `x-y`, got `{s}`")))?;
    let (a, b) = (parse_vertex(a, n_gon)?, parse_vertex(b, n_gon)?);
    if a == b {
        return Err(Error::Parse(format!("degenerate chord `{s}`")));
    }
    Ok(Diagonal::new(a, b))
}

impl BDiagonal {
    /// The chords making up this element, as positions in `1..=n_gon`.
    pub fn chords(&self, n_gon: usize) -> Vec<Diagonal> {
        match *self {
            BDiagonal::Diameter(i) => vec![Diagonal::new(i, i + n_gon / 2)],
            BDiagonal::Pair(d) => vec![d, antipode(d, n_gon)],
        }
    }

    pub fn rotate(&self, t: i64, n_gon: usize) -> Self {
        let h = n_gon / 2;
        match *self {
            BDiagonal::Diameter(i) => BDiagonal::Diameter(super::chord::rotate_label(i, t, h)),
            BDiagonal::Pair(d) => BDiagonal::Pair(canonical_pair(d.rotate(t, n_gon), n_gon)),
        }
    }
}

impl PartText for BDiagonal {
    fn write_part(&self, polygon: usize) -> String {
        match *self {
            BDiagonal::Diameter(i) => format!("{i}-~{i}"),
            BDiagonal::Pair(d) => format!("{}-{}", write_vertex(d.i, polygon), write_vertex(d.j, polygon)),
        }
    }

    fn parse_part(s: &str, polygon: usize) -> Result<Self> {
        let d = parse_chord(s, polygon)?;
        if d.j - d.i == polygon / 2 {
            Ok(BDiagonal::Diameter(d.i))
        } else {
            Ok(BDiagonal::Pair(canonical_pair(d, polygon)))
        }
    }
}

pub(crate) fn chords_compatible(a: &[Diagonal], b: &[Diagonal]) -> bool {
    a.iter().all(|x| b.iter().all(|y| !crosses(*x, *y)))
}

/// All `s`-divisible non-diameter chords of the `n_gon`, as canonical pairs.
pub(crate) fn symmetric_pairs(n_gon: usize, s: usize) -> Vec<Diagonal> {
    let h = n_gon / 2;
    let mut pairs: Vec<Diagonal> = (1..=n_gon)
        .flat_map(|i| ((i + 1)..=n_gon).map(move |j| Diagonal::new(i, j)))
        .filter(|&d| d.j - d.i != h && is_s_divisible(d, n_gon, s))
        .map(|d| canonical_pair(d, n_gon))
        .collect();
    pairs.sort();
    pairs.dedup();
    pairs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeB {
    ty: ComplexType,
}

impl TypeB {
    pub fn new(s: usize, n: usize) -> Result<Self> {
        Ok(Self {
            ty: ComplexType::b(s, n)?,
        })
    }

    pub fn model(s: usize, n: usize) -> Result<Model<Self>> {
        Ok(Model::new(Self::new(s, n)?))
    }
}

impl Realization for TypeB {
    type Part = BDiagonal;

    fn complex_type(&self) -> ComplexType {
        self.ty
    }

    fn polygon_size(&self) -> usize {
        self.ty.group_order()
    }

    fn parts(&self) -> Vec<BDiagonal> {
        let big = self.polygon_size();
        let mut out: Vec<BDiagonal> = (1..=big / 2).map(BDiagonal::Diameter).collect();
        out.extend(symmetric_pairs(big, self.ty.s()).into_iter().map(BDiagonal::Pair));
        out
    }

    fn compatible(&self, a: &BDiagonal, b: &BDiagonal) -> bool {
        let big = self.polygon_size();
        chords_compatible(&a.chords(big), &b.chords(big))
    }

    fn step(&self, a: &BDiagonal) -> BDiagonal {
        a.rotate(1, self.polygon_size())
    }
}

pub fn enumerate_b(s: usize, n: usize, k: usize) -> Result<Vec<DissectionB>> {
    TypeB::model(s, n)?.enumerate(k)
}

/// Every label decremented by `t` (positions modulo `2sn+2`).
pub fn rotate_b(x: &DissectionB, t: i64) -> DissectionB {
    Face::new(x.polygon, x.parts.iter().map(|p| p.rotate(t, x.polygon)).collect())
}

/// Dissections invariant under `d`-fold rotation.
pub fn fixed_b(s: usize, n: usize, k: usize, d: usize) -> Result<Vec<DissectionB>> {
    TypeB::model(s, n)?.fixed(k, d)
}

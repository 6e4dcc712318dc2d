//! Type `D_n`: the `(2s(n-1)+2)`-gon with centrally symmetric chord pairs and
//! two colored copies of every diameter.
//!
//! With `M = s(n-1)+1`, the diameter `L_j` joins `j` and `~j`. The generator
//! rotates one step clockwise, sending `L_j` to `L_{j-1}` (`L_0 = L_M`), and
//! flips the color exactly when `j = 1` or `j ≡ 2 (mod s)`.

use std::fmt;

use super::chord::{rotate_label, Diagonal};
use super::model::{Face, Model, PartText, Realization};
use super::type_b::{antipode, canonical_pair, chords_compatible, parse_chord, symmetric_pairs, write_vertex};
use crate::error::{Error, Result};
use crate::qpoly::ComplexType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Self {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DDiagonal {
    Diameter { index: usize, color: Color },
    Pair(Diagonal),
}

pub type DissectionD = Face<DDiagonal>;

impl DDiagonal {
    pub fn chords(&self, n_gon: usize) -> Vec<Diagonal> {
        match *self {
            DDiagonal::Diameter { index, .. } => vec![Diagonal::new(index, index + n_gon / 2)],
            DDiagonal::Pair(d) => vec![d, antipode(d, n_gon)],
        }
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self, DDiagonal::Diameter { .. })
    }
}

impl PartText for DDiagonal {
    fn write_part(&self, polygon: usize) -> String {
        match *self {
            DDiagonal::Diameter { index, color } => format!("{index}-~{index}:{color}"),
            DDiagonal::Pair(d) => format!("{}-{}", write_vertex(d.i, polygon), write_vertex(d.j, polygon)),
        }
    }

    fn parse_part(s: &str, polygon: usize) -> Result<Self> {
        let (chord, color) = match s.split_once(':') {
            Some((c, col)) => (c, Some(col.trim())),
            None => (s, None),
        };
        let d = parse_chord(chord, polygon)?;
        let is_diameter = d.j - d.i == polygon / 2;
        match (is_diameter, color) {
            (true, Some("red")) => Ok(DDiagonal::Diameter {
                index: d.i,
                color: Color::Red,
            }),
            (true, Some("blue")) => Ok(DDiagonal::Diameter {
                index: d.i,
                color: Color::Blue,
            }),
            (true, _) => Err(Error::Parse(format!("diameter `{s}` needs a color `:red` or `:blue`"))),
            (false, None) => Ok(DDiagonal::Pair(canonical_pair(d, polygon))),
            (false, Some(_)) => Err(Error::Parse(format!("only diameters carry colors: `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeD {
    ty: ComplexType,
}

impl TypeD {
    pub fn new(s: usize, n: usize) -> Result<Self> {
        Ok(Self {
            ty: ComplexType::d(s, n)?,
        })
    }

    pub fn model(s: usize, n: usize) -> Result<Model<Self>> {
        Ok(Model::new(Self::new(s, n)?))
    }

    /// Number of diameters, `s(n-1)+1`.
    pub fn diameters(&self) -> usize {
        self.polygon_size() / 2
    }

    fn switches_at(&self, j: usize) -> bool {
        let s = self.ty.s();
        j == 1 || j % s == 2 % s
    }

    fn step_diameter(&self, index: usize, color: Color) -> (usize, Color) {
        let color = if self.switches_at(index) { color.other() } else { color };
        (rotate_label(index, 1, self.diameters()), color)
    }

    /// Diameters with distinct endpoints: transport both by the generator
    /// until one of them is `L_1`; compatible iff the colors then agree.
    fn diameters_compatible(&self, a: (usize, Color), b: (usize, Color)) -> bool {
        let (mut a, mut b) = (a, b);
        while a.0 != 1 && b.0 != 1 {
            a = self.step_diameter(a.0, a.1);
            b = self.step_diameter(b.0, b.1);
        }
        a.1 == b.1
    }

    /// Color of `L_index` compatible with the colored diameter `with`.
    pub fn compatible_color(&self, index: usize, with: (usize, Color)) -> Color {
        if self.diameters_compatible((index, Color::Red), with) {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

impl Realization for TypeD {
    type Part = DDiagonal;

    fn complex_type(&self) -> ComplexType {
        self.ty
    }

    fn polygon_size(&self) -> usize {
        self.ty.group_order()
    }

    fn parts(&self) -> Vec<DDiagonal> {
        let mut out: Vec<DDiagonal> = (1..=self.diameters())
            .flat_map(|index| [Color::Red, Color::Blue].map(|color| DDiagonal::Diameter { index, color }))
            .collect();
        out.extend(
            symmetric_pairs(self.polygon_size(), self.ty.s())
                .into_iter()
                .map(DDiagonal::Pair),
        );
        out
    }

    fn compatible(&self, a: &DDiagonal, b: &DDiagonal) -> bool {
        use DDiagonal::Diameter;
        match (*a, *b) {
            (Diameter { index: i, color: c }, Diameter { index: j, color: e }) => {
                if i == j {
                    c != e
                } else {
                    self.diameters_compatible((i, c), (j, e))
                }
            }
            _ => {
                let big = self.polygon_size();
                chords_compatible(&a.chords(big), &b.chords(big))
            }
        }
    }

    fn step(&self, a: &DDiagonal) -> DDiagonal {
        match *a {
            DDiagonal::Diameter { index, color } => {
                let (index, color) = self.step_diameter(index, color);
                DDiagonal::Diameter { index, color }
            }
            DDiagonal::Pair(d) => {
                let big = self.polygon_size();
                DDiagonal::Pair(canonical_pair(d.rotate(1, big), big))
            }
        }
    }
}

pub fn enumerate_d(s: usize, n: usize, k: usize) -> Result<Vec<DissectionD>> {
    TypeD::model(s, n)?.enumerate(k)
}

/// Applies the generator `t` times, with color switching.
pub fn gamma_d(model: &Model<TypeD>, x: &DissectionD, t: i64) -> DissectionD {
    model.rotate(x, t)
}

/// Faces with `k` elements fixed by the element of order `d`.
pub fn fixed_d(s: usize, n: usize, k: usize, d: usize) -> Result<Vec<DissectionD>> {
    TypeD::model(s, n)?.fixed(k, d)
}

/// The fixed set split by its diameters: none, first diameter red, first
/// diameter blue. "First" is the diameter with the smallest index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WPartition {
    pub t0: Vec<DissectionD>,
    pub t1: Vec<DissectionD>,
    pub t2: Vec<DissectionD>,
}

pub fn split_w(faces: Vec<DissectionD>) -> WPartition {
    let mut w = WPartition::default();
    for f in faces {
        let first = f.parts.iter().find_map(|p| match *p {
            DDiagonal::Diameter { color, .. } => Some(color),
            DDiagonal::Pair(_) => None,
        });
        match first {
            None => w.t0.push(f),
            Some(Color::Red) => w.t1.push(f),
            Some(Color::Blue) => w.t2.push(f),
        }
    }
    w
}

/// Swaps the colors of all diameters.
pub fn switch_colors(x: &DissectionD) -> DissectionD {
    Face::new(
        x.polygon,
        x.parts
            .iter()
            .map(|p| match *p {
                DDiagonal::Diameter { index, color } => DDiagonal::Diameter {
                    index,
                    color: color.other(),
                },
                pair => pair,
            })
            .collect(),
    )
}

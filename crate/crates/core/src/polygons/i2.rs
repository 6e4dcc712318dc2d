//! Type `I2(a)`: an `(s+1)`-regular graph on `sa+2` vertices `0..sa+2`.
//!
//! For odd `a`, vertex `v` is joined to `v + s(a-1)/2 + j` for `j = 1..=s+1`
//! and the generator rotates by one vertex. For even `a`, each even vertex
//! `2m` is joined to `2m+1, 2m+3, ..., 2m+1+2s` and the generator rotates by
//! two vertices; the cyclic group of order `sa+2` then acts non-faithfully.

use super::model::{Face, Model, PartText, Realization};
use crate::error::{Error, Result};
use crate::qpoly::ComplexType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct I2Graph {
    pub vertices: usize,
    /// Sorted pairs `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
    pub a_odd: bool,
}

impl I2Graph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(x, y)| x == v || y == v).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

pub fn build_i2(s: usize, a: usize) -> Result<I2Graph> {
    let ty = ComplexType::i2(s, a)?;
    let big = ty.group_order();
    let mut edges = Vec::new();
    if a % 2 == 1 {
        let base = s * (a - 1) / 2;
        for v in 0..big {
            for j in 1..=s + 1 {
                let w = (v + base + j) % big;
                edges.push((v.min(w), v.max(w)));
            }
        }
    } else {
        for m in (0..big).step_by(2) {
            for j in 0..=s {
                let w = (m + 1 + 2 * j) % big;
                edges.push((m.min(w), m.max(w)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(I2Graph {
        vertices: big,
        edges,
        a_odd: a % 2 == 1,
    })
}

/// Vertex of the `I2(a)` graph, as a face element.
pub type I2Vertex = usize;

impl PartText for usize {
    fn write_part(&self, _polygon: usize) -> String {
        self.to_string()
    }

    fn parse_part(s: &str, polygon: usize) -> Result<Self> {
        let v: usize = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex `{s}`")))?;
        if v >= polygon {
            return Err(Error::Parse(format!("vertex {v} outside 0..{polygon}")));
        }
        Ok(v)
    }
}

#[derive(Debug, Clone)]
pub struct I2Model {
    ty: ComplexType,
    graph: I2Graph,
}

impl I2Model {
    pub fn new(s: usize, a: usize) -> Result<Self> {
        Ok(Self {
            ty: ComplexType::i2(s, a)?,
            graph: build_i2(s, a)?,
        })
    }

    pub fn model(s: usize, a: usize) -> Result<Model<Self>> {
        Ok(Model::new(Self::new(s, a)?))
    }

    pub fn graph(&self) -> &I2Graph {
        &self.graph
    }
}

impl Realization for I2Model {
    type Part = I2Vertex;

    fn complex_type(&self) -> ComplexType {
        self.ty
    }

    fn polygon_size(&self) -> usize {
        self.graph.vertices
    }

    fn parts(&self) -> Vec<usize> {
        (0..self.graph.vertices).collect()
    }

    fn compatible(&self, a: &usize, b: &usize) -> bool {
        self.graph.has_edge(*a, *b)
    }

    fn step(&self, a: &usize) -> usize {
        let shift = if self.graph.a_odd { 1 } else { 2 };
        (a + shift) % self.graph.vertices
    }
}

/// Faces of size `k` (vertices for `k = 1`, edges for `k = 2`) fixed by the
/// element of order `d` of the cyclic group of order `sa+2`.
pub fn fixed_i2(s: usize, a: usize, k: usize, d: usize) -> Result<Vec<Face<I2Vertex>>> {
    I2Model::model(s, a)?.fixed(k, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_with_expected_edge_count() {
        for s in 1..=4 {
            for a in 3..=9 {
                let g = build_i2(s, a).unwrap();
                assert_eq!(g.edges.len(), (s * a + 2) * (s + 1) / 2, "s={s} a={a}");
                for v in 0..g.vertices {
                    assert_eq!(g.degree(v), s + 1, "s={s} a={a} v={v}");
                }
            }
        }
    }

    #[test]
    fn small_graphs() {
        let g = build_i2(2, 5).unwrap();
        assert_eq!((g.vertices, g.edges.len()), (12, 18));
        let h = build_i2(2, 4).unwrap();
        assert!(h.has_edge(0, 1) && h.has_edge(0, 3) && h.has_edge(0, 5));
        assert_eq!(build_i2(1, 3).unwrap().edges.len(), 5);
    }

    #[test]
    fn fixed_edges_under_half_turn() {
        assert_eq!(fixed_i2(2, 5, 2, 2).unwrap().len(), 6);
        assert!(fixed_i2(1, 5, 2, 2).is_err());
        let all = I2Model::model(3, 4).unwrap().enumerate(2).unwrap();
        assert_eq!(fixed_i2(3, 4, 2, 2).unwrap(), all);
        assert!(fixed_i2(2, 5, 2, 5).is_err());
    }
}

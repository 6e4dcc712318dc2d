//! Noncrossing trees on `n+1` circle points and quadrangulations of the
//! `(2n+2)`-gon.
//!
//! The tree edge `j-k` becomes the line `(2j-1)-(2k-1)`; the quadrangulation
//! is the one whose quadrilaterals have exactly these lines as odd-odd
//! diagonals.

use std::fmt;

use super::chord::{crosses, regions, rotate_label, Diagonal};
use super::model::Face;
use super::type_a::DissectionA;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcTree {
    pub points: usize,
    /// Ascending, each edge stored with its smaller endpoint first.
    pub edges: Vec<Diagonal>,
}

impl fmt::Display for NcTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.points)?;
        for e in &self.edges {
            write!(f, ",{e}")?;
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

impl NcTree {
    pub fn new(points: usize, mut edges: Vec<Diagonal>) -> Result<Self> {
        edges.sort();
        let t = Self { points, edges };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::NotANoncrossingTree(why));
        if self.points < 2 {
            return bad("need at least two points".into());
        }
        if self.edges.len() != self.points - 1 {
            return bad(format!("{} edges on {} points", self.edges.len(), self.points));
        }
        let mut parent: Vec<usize> = (0..=self.points).collect();
        for (a, e) in self.edges.iter().enumerate() {
            if e.i == 0 || e.j > self.points {
                return bad(format!("edge {e} leaves 1..={}", self.points));
            }
            if let Some(f) = self.edges[a + 1..].iter().find(|f| crosses(*e, **f)) {
                return bad(format!("edges {e} and {f} cross"));
            }
            let (x, y) = (find(&mut parent, e.i), find(&mut parent, e.j));
            if x == y {
                return bad(format!("edge {e} closes a cycle"));
            }
            parent[x] = y;
        }
        Ok(())
    }
}

/// All noncrossing spanning trees on `points` circle points.
pub fn enumerate_nc_trees(points: usize) -> Vec<NcTree> {
    let all: Vec<Diagonal> = (1..=points)
        .flat_map(|i| ((i + 1)..=points).map(move |j| Diagonal::new(i, j)))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Diagonal> = Vec::new();
    let mut parent: Vec<usize> = (0..=points).collect();
    fn go(
        all: &[Diagonal],
        from: usize,
        need: usize,
        chosen: &mut Vec<Diagonal>,
        parent: &mut Vec<usize>,
        points: usize,
        out: &mut Vec<NcTree>,
    ) {
        if chosen.len() == need {
            out.push(NcTree {
                points,
                edges: chosen.clone(),
            });
            return;
        }
        for (idx, e) in all.iter().enumerate().skip(from) {
            if chosen.iter().any(|c| crosses(*c, *e)) {
                continue;
            }
            let saved = parent.clone();
            let (x, y) = (find(parent, e.i), find(parent, e.j));
            if x == y {
                continue;
            }
            parent[x] = y;
            chosen.push(*e);
            go(all, idx + 1, need, chosen, parent, points, out);
            chosen.pop();
            *parent = saved;
        }
    }
    go(
        &all,
        0,
        points.saturating_sub(1),
        &mut chosen,
        &mut parent,
        points,
        &mut out,
    );
    out
}

/// Rotation by `t` points clockwise (labels decremented by `t`).
pub fn rotate_tree(tree: &NcTree, t: i64) -> NcTree {
    let mut edges: Vec<Diagonal> = tree
        .edges
        .iter()
        .map(|e| Diagonal::new(rotate_label(e.i, t, tree.points), rotate_label(e.j, t, tree.points)))
        .collect();
    edges.sort();
    NcTree {
        points: tree.points,
        edges,
    }
}

fn is_polygon_edge(a: usize, b: usize, n_gon: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    b - a == 1 || (a == 1 && b == n_gon)
}

/// The quadrangulation of the `(2n+2)`-gon assigned to a tree on `n+1` points.
pub fn nc_tree_to_quadrangulation(tree: &NcTree) -> Result<DissectionA> {
    tree.validate()?;
    let n_gon = 2 * tree.points;
    let lines: Vec<Diagonal> = tree
        .edges
        .iter()
        .map(|e| Diagonal::new(2 * e.i - 1, 2 * e.j - 1))
        .collect();
    let regs = regions(n_gon, &lines);
    let even_of = |r: &Vec<usize>| -> Result<usize> {
        let evens: Vec<usize> = r.iter().copied().filter(|v| v % 2 == 0).collect();
        match evens.as_slice() {
            [e] => Ok(*e),
            _ => Err(Error::NotANoncrossingTree(format!(
                "region {r:?} has {} even vertices",
                evens.len()
            ))),
        }
    };
    let mut diagonals = Vec::new();
    for l in &lines {
        let sides: Vec<&Vec<usize>> = regs.iter().filter(|r| r.contains(&l.i) && r.contains(&l.j)).collect();
        if sides.len() != 2 {
            return Err(Error::NotANoncrossingTree(format!(
                "line {l} does not separate two regions"
            )));
        }
        let (e1, e2) = (even_of(sides[0])?, even_of(sides[1])?);
        for (a, b) in [(l.i, e1), (e1, l.j), (l.j, e2), (e2, l.i)] {
            if !is_polygon_edge(a, b, n_gon) {
                diagonals.push(Diagonal::new(a, b));
            }
        }
    }
    diagonals.sort();
    diagonals.dedup();
    Ok(Face::new(n_gon, diagonals))
}

/// Inverse map: each quadrilateral contributes the edge joining its two odd
/// vertices.
pub fn quadrangulation_to_nc_tree(x: &DissectionA) -> Result<NcTree> {
    if !x.polygon.is_multiple_of(2) || x.polygon < 4 {
        return Err(Error::InvalidParameter(format!(
            "a {}-gon has no quadrangulation",
            x.polygon
        )));
    }
    let mut edges = Vec::new();
    for r in regions(x.polygon, &x.parts) {
        if r.len() != 4 {
            return Err(Error::InvalidParameter(format!("piece {r:?} is not a quadrilateral")));
        }
        let odd: Vec<usize> = r.iter().copied().filter(|v| v % 2 == 1).collect();
        if odd.len() != 2 {
            return Err(Error::InvalidParameter(format!(
                "piece {r:?} does not alternate parity"
            )));
        }
        edges.push(Diagonal::new(odd[0].div_ceil(2), odd[1].div_ceil(2)));
    }
    NcTree::new(x.polygon / 2, edges)
}

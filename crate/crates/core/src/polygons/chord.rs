//! Chords of a labeled polygon with vertices `1..=N` in counterclockwise order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A chord `i-j` with `1 <= i < j <= N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    pub i: usize,
    pub j: usize,
}

impl Diagonal {
    /// Orders the endpoints; panics if they coincide.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "degenerate chord");
        Self {
            i: a.min(b),
            j: a.max(b),
        }
    }

    /// True when the endpoints are not neighbours on the `n_gon`-cycle.
    pub fn is_diagonal_of(&self, n_gon: usize) -> bool {
        self.i >= 1 && self.j <= n_gon && self.j - self.i >= 2 && !(self.i == 1 && self.j == n_gon)
    }

    pub fn rotate(&self, t: i64, n_gon: usize) -> Self {
        Self::new(rotate_label(self.i, t, n_gon), rotate_label(self.j, t, n_gon))
    }

    pub fn crosses(&self, other: &Diagonal) -> bool {
        crosses(*self, *other)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

impl FromStr for Diagonal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a chord `i-j`, got `{s}`"));
        let (a, b) = s.trim().split_once('-').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == b {
            return Err(bad());
        }
        Ok(Diagonal::new(a, b))
    }
}

/// Label `p` moved `t` steps clockwise, i.e. decremented by `t` modulo `n`,
/// staying in `1..=n`.
pub fn rotate_label(p: usize, t: i64, n: usize) -> usize {
    let n = n as i64;
    ((p as i64 - 1 - t).rem_euclid(n) + 1) as usize
}

/// Strict interleaving of endpoints; chords sharing an endpoint do not cross.
pub fn crosses(x: Diagonal, y: Diagonal) -> bool {
    (x.i < y.i && y.i < x.j && x.j < y.j) || (y.i < x.i && x.i < y.j && y.j < x.j)
}

/// Both boundary arcs cut off by the chord have length `≡ 1 (mod s)` and at
/// least 2, so every piece of a dissection using it can be an `(sj+2)`-gon.
pub fn is_s_divisible(d: Diagonal, n_gon: usize, s: usize) -> bool {
    if !d.is_diagonal_of(n_gon) {
        return false;
    }
    let len = d.j - d.i;
    len % s == 1 % s && (n_gon - len) % s == 1 % s
}

/// Regions of the `n_gon` cut out by pairwise noncrossing chords, each as the
/// cyclic list of its vertex labels, ascending.
pub fn regions(n_gon: usize, chords: &[Diagonal]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![(1..=n_gon).collect()];
    for c in chords {
        let r = out
            .iter()
            .position(|r| r.contains(&c.i) && r.contains(&c.j))
            .expect("chords must be pairwise noncrossing");
        let region = out.swap_remove(r);
        let inner: Vec<usize> = region.iter().copied().filter(|&v| v >= c.i && v <= c.j).collect();
        let outer: Vec<usize> = region.iter().copied().filter(|&v| v <= c.i || v >= c.j).collect();
        out.push(inner);
        out.push(outer);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_wraps() {
        assert_eq!(rotate_label(1, 1, 8), 8);
        assert_eq!(rotate_label(3, -6, 8), 1);
        assert_eq!(rotate_label(5, 8, 8), 5);
    }

    #[test]
    fn crossing_and_shared_endpoints() {
        let a = Diagonal::new(1, 4);
        assert!(a.crosses(&Diagonal::new(2, 6)));
        assert!(!a.crosses(&Diagonal::new(4, 7)));
        assert!(!a.crosses(&Diagonal::new(5, 7)));
        assert!(!a.crosses(&Diagonal::new(2, 3)));
    }

    #[test]
    fn arc_criterion_matches_piece_sizes() {
        // A set of noncrossing diagonals is s-divisible (all pieces (sj+2)-gons)
        // iff each diagonal passes the arc test. Checked over all noncrossing
        // sets on small polygons.
        for s in 1..=3 {
            for n in 1..=4 {
                let big = s * n + 2;
                let all: Vec<Diagonal> = (1..=big)
                    .flat_map(|i| ((i + 1)..=big).map(move |j| Diagonal::new(i, j)))
                    .filter(|d| d.is_diagonal_of(big))
                    .collect();
                let mut stack = vec![(0usize, Vec::<Diagonal>::new())];
                while let Some((from, set)) = stack.pop() {
                    let by_pieces = regions(big, &set).iter().all(|r| r.len() % s == 2 % s);
                    let by_arcs = set.iter().all(|&d| is_s_divisible(d, big, s));
                    assert_eq!(by_pieces, by_arcs, "s={s} n={n} {set:?}");
                    for (idx, d) in all.iter().enumerate().skip(from) {
                        if set.iter().all(|e| !crosses(*d, *e)) {
                            let mut next = set.clone();
                            next.push(*d);
                            stack.push((idx + 1, next));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn region_split() {
        let r = regions(6, &[Diagonal::new(1, 4), Diagonal::new(4, 6)]);
        assert_eq!(r, vec![vec![1, 2, 3, 4], vec![1, 4, 6], vec![4, 5, 6]]);
    }
}

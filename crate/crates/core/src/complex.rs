//! Flag-complex engine shared by the polygon and root-system models.
//!
//! A [`CyclicComplex`] is a finite set of elements with a symmetric
//! compatibility relation and a generator permutation of a cyclic group of
//! known order. Faces are the cliques of the compatibility graph, represented
//! as ascending vectors of element ids.

use std::collections::BTreeMap;

use rayon::prelude::*;

/// Ascending list of element ids.
pub type FaceIds = Vec<u32>;

/// Undirected simple graph with bitset adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds the graph from a symmetric predicate, evaluated once per pair
    /// `i < j`.
    pub fn from_fn<F>(n: usize, adjacent: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let mut g = Self::new(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let adjacent = &adjacent;
                ((i + 1)..n).filter(move |&j| adjacent(i, j)).map(move |j| (i, j))
            })
            .collect();
        for (i, j) in pairs {
            g.add_edge(i, j);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "no loops");
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| {
                ((i + 1)..self.n)
                    .filter(move |&j| self.has_edge(i, j))
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// All `k`-cliques in lexicographic order.
    pub fn cliques(&self, k: usize) -> Vec<FaceIds> {
        match k {
            0 => return vec![Vec::new()],
            1 => return (0..self.n as u32).map(|v| vec![v]).collect(),
            _ => {}
        }
        let per_root: Vec<Vec<FaceIds>> = (0..self.n)
            .into_par_iter()
            .map(|v| {
                let mut cand = self.row(v).to_vec();
                clear_upto(&mut cand, v);
                let mut out = Vec::new();
                let mut stack = vec![v as u32];
                self.extend(&mut stack, &cand, k, &mut out);
                out
            })
            .collect();
        per_root.into_iter().flatten().collect()
    }

    fn extend(&self, stack: &mut Vec<u32>, cand: &[u64], k: usize, out: &mut Vec<FaceIds>) {
        if stack.len() == k {
            out.push(stack.clone());
            return;
        }
        let need = k - stack.len();
        if popcount(cand) < need {
            return;
        }
        for v in iter_bits(cand) {
            let mut next: Vec<u64> = cand.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            clear_upto(&mut next, v);
            stack.push(v as u32);
            self.extend(stack, &next, k, out);
            stack.pop();
        }
    }
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

/// Clears bits `0..=v`.
fn clear_upto(bits: &mut [u64], v: usize) {
    let w = v / 64;
    for x in bits.iter_mut().take(w) {
        *x = 0;
    }
    let keep = v % 64 + 1;
    bits[w] &= if keep == 64 { 0 } else { !0u64 << keep };
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// A permutation of `0..len`, stored as the image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    /// Panics if `images` is not a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!std::mem::replace(&mut seen[i as usize], true), "not a permutation");
        }
        Self(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.apply(i)).collect())
    }

    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.len());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Smallest `e >= 1` with `self^e = id`.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut lcm = 1usize;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lcm = num_integer::lcm(lcm, len);
        }
        lcm
    }

    /// Image of a face, sorted.
    pub fn apply_face(&self, face: &[u32]) -> FaceIds {
        let mut out: FaceIds = face.iter().map(|&i| self.apply(i)).collect();
        out.sort_unstable();
        out
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }
}

/// Orbit-size multiset: `size -> number of orbits`.
pub type OrbitCounts = BTreeMap<usize, usize>;

/// Orbit sizes with multiplicities, printed largest first as
/// `16(4211), 8(3), 4(2)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OrbitStructure(pub OrbitCounts);

impl OrbitStructure {
    /// Number of elements in all orbits together.
    pub fn total(&self) -> usize {
        self.0.iter().map(|(s, c)| s * c).sum()
    }

    pub fn orbit_count(&self) -> usize {
        self.0.values().sum()
    }

    /// `(size, count)` pairs, largest size first.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        self.0.iter().rev().map(|(&s, &c)| (s, c)).collect()
    }

    pub fn from_entries(entries: &[(usize, usize)]) -> Self {
        let mut m = OrbitCounts::new();
        for &(s, c) in entries {
            *m.entry(s).or_default() += c;
        }
        Self(m)
    }
}

impl From<OrbitCounts> for OrbitStructure {
    fn from(m: OrbitCounts) -> Self {
        Self(m)
    }
}

impl std::fmt::Display for OrbitStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self.entries().iter().map(|(s, c)| format!("{s}({c})")).collect();
        write!(f, "{}", cells.join(", "))
    }
}

impl std::str::FromStr for OrbitStructure {
    type Err = crate::error::Error;

    fn from_str(text: &str) -> crate::error::Result<Self> {
        let bad = || crate::error::Error::Parse(format!("bad orbit structure `{text}`"));
        let mut entries = Vec::new();
        for cell in text.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            let (size, rest) = cell.split_once('(').ok_or_else(bad)?;
            let count = rest.strip_suffix(')').ok_or_else(bad)?;
            entries.push((
                size.trim().parse().map_err(|_| bad())?,
                count.trim().parse().map_err(|_| bad())?,
            ));
        }
        Ok(Self::from_entries(&entries))
    }
}

/// Number of faces in `faces` fixed by `perm`.
pub fn count_fixed(faces: &[FaceIds], perm: &Permutation) -> usize {
    faces.par_iter().filter(|f| perm.apply_face(f) == **f).count()
}

/// Orbit sizes of the cyclic group generated by `generator` on `faces`.
///
/// `faces` must be sorted ascending and closed under the generator.
pub fn orbit_counts(faces: &[FaceIds], generator: &Permutation) -> OrbitCounts {
    let next: Vec<usize> = faces
        .par_iter()
        .map(|f| {
            faces
                .binary_search(&generator.apply_face(f))
                .expect("face set is not closed under the action")
        })
        .collect();
    let mut seen = vec![false; faces.len()];
    let mut counts = OrbitCounts::new();
    for start in 0..faces.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = next[i];
            size += 1;
        }
        *counts.entry(size).or_default() += 1;
    }
    counts
}

/// Elements, compatibility graph and a cyclic action of order `group_order`.
#[derive(Debug, Clone)]
pub struct CyclicComplex {
    graph: BitGraph,
    generator: Permutation,
    group_order: usize,
}

impl CyclicComplex {
    /// Panics unless `generator^group_order` is the identity.
    pub fn new(graph: BitGraph, generator: Permutation, group_order: usize) -> Self {
        assert_eq!(graph.len(), generator.len());
        assert!(
            generator.pow(group_order).is_identity(),
            "generator order does not divide the group order"
        );
        Self {
            graph,
            generator,
            group_order,
        }
    }

    pub fn graph(&self) -> &BitGraph {
        &self.graph
    }

    pub fn generator(&self) -> &Permutation {
        &self.generator
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn element_count(&self) -> usize {
        self.graph.len()
    }

    pub fn faces(&self, k: usize) -> Vec<FaceIds> {
        self.graph.cliques(k)
    }

    /// The group element of order `d`, i.e. `generator^(N/d)`.
    pub fn element_of_order(&self, d: usize) -> Permutation {
        assert!(
            d >= 1 && self.group_order.is_multiple_of(d),
            "d must divide the group order"
        );
        self.generator.pow(self.group_order / d)
    }

    /// True when the generator maps compatible pairs exactly to compatible
    /// pairs.
    pub fn action_preserves_compatibility(&self) -> bool {
        let n = self.element_count();
        (0..n).into_par_iter().all(|i| {
            (0..n).all(|j| {
                i == j
                    || self.graph.has_edge(i, j)
                        == self.graph.has_edge(
                            self.generator.apply(i as u32) as usize,
                            self.generator.apply(j as u32) as usize,
                        )
            })
        })
    }
}

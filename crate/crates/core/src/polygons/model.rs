use std::collections::HashMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

use crate::complex::{count_fixed, orbit_counts, BitGraph, CyclicComplex, FaceIds, OrbitCounts, Permutation};
use crate::error::{Error, Result};
use crate::qpoly::ComplexType;

/// Text form of a single face element; the polygon size gives context for
/// labels such as barred vertices.
pub trait PartText: Sized {
    fn write_part(&self, polygon: usize) -> String;
    fn parse_part(s: &str, polygon: usize) -> Result<Self>;
}

/// A concrete model of a cluster complex: its elements, the compatibility
/// relation and the generator of the cyclic action.
pub trait Realization: Sync {
    type Part: Clone + Ord + Hash + Debug + PartText + Send + Sync;

    fn complex_type(&self) -> ComplexType;
    /// Vertices of the polygon, or of the graph for I2.
    fn polygon_size(&self) -> usize;
    /// All elements, ascending.
    fn parts(&self) -> Vec<Self::Part>;
    /// Compatibility of two distinct elements.
    fn compatible(&self, a: &Self::Part, b: &Self::Part) -> bool;
    /// Image under the generator.
    fn step(&self, a: &Self::Part) -> Self::Part;

    fn group_order(&self) -> usize {
        self.complex_type().group_order()
    }
}

/// A face: the polygon size and the ascending list of its elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face<T> {
    pub polygon: usize,
    pub parts: Vec<T>,
}

impl<T: Ord> Face<T> {
    pub fn new(polygon: usize, mut parts: Vec<T>) -> Self {
        parts.sort();
        Self { polygon, parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl<T: PartText> fmt::Display for Face<T> {
    /// `N,part,part,...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polygon)?;
        for p in &self.parts {
            write!(f, ",{}", p.write_part(self.polygon))?;
        }
        Ok(())
    }
}

impl<T: PartText + Ord> Face<T> {
    pub fn parse(s: &str) -> Result<Self> {
        let mut fields = s.trim().split(',');
        let head = fields.next().unwrap_or_default().trim();
        let polygon: usize = head
            .parse()
            .map_err(|_| Error::Parse(format!("face must start with the polygon size, got `{head}`")))?;
        let parts = fields
            .filter(|f| !f.trim().is_empty())
            .map(|f| T::parse_part(f.trim(), polygon))
            .collect::<Result<Vec<T>>>()?;
        Ok(Face::new(polygon, parts))
    }
}

/// A realization together with its indexed elements and compatibility graph.
pub struct Model<R: Realization> {
    realization: R,
    parts: Vec<R::Part>,
    index: HashMap<R::Part, u32>,
    complex: CyclicComplex,
}

impl<R: Realization> Model<R> {
    pub fn new(realization: R) -> Self {
        let parts = realization.parts();
        let index: HashMap<R::Part, u32> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i as u32)).collect();
        assert_eq!(index.len(), parts.len(), "duplicate elements");
        let graph = BitGraph::from_fn(parts.len(), |i, j| realization.compatible(&parts[i], &parts[j]));
        let images = parts
            .iter()
            .map(|p| {
                *index
                    .get(&realization.step(p))
                    .expect("generator must map elements to elements")
            })
            .collect();
        let complex = CyclicComplex::new(graph, Permutation::from_images(images), realization.group_order());
        Self {
            realization,
            parts,
            index,
            complex,
        }
    }

    pub fn realization(&self) -> &R {
        &self.realization
    }

    pub fn complex(&self) -> &CyclicComplex {
        &self.complex
    }

    pub fn complex_type(&self) -> ComplexType {
        self.realization.complex_type()
    }

    pub fn polygon_size(&self) -> usize {
        self.realization.polygon_size()
    }

    pub fn group_order(&self) -> usize {
        self.complex.group_order()
    }

    pub fn parts(&self) -> &[R::Part] {
        &self.parts
    }

    pub fn face_ids(&self, k: usize) -> Result<Vec<FaceIds>> {
        self.complex_type().check_k(k)?;
        Ok(self.complex.faces(k))
    }

    pub fn to_face(&self, ids: &[u32]) -> Face<R::Part> {
        Face::new(
            self.polygon_size(),
            ids.iter().map(|&i| self.parts[i as usize].clone()).collect(),
        )
    }

    /// Element ids of a face; errors when an element is unknown, the polygon
    /// size is wrong, or two elements are incompatible.
    pub fn to_ids(&self, face: &Face<R::Part>) -> Result<FaceIds> {
        if face.polygon != self.polygon_size() {
            return Err(Error::InvalidParameter(format!(
                "face lives on a {}-gon, model has {} vertices",
                face.polygon,
                self.polygon_size()
            )));
        }
        let mut ids =
            face.parts
                .iter()
                .map(|p| {
                    self.index.get(p).copied().ok_or_else(|| {
                        Error::InvalidParameter(format!("{} is not an element", p.write_part(face.polygon)))
                    })
                })
                .collect::<Result<FaceIds>>()?;
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != face.parts.len() {
            return Err(Error::InvalidParameter("repeated element".into()));
        }
        for (a, &x) in ids.iter().enumerate() {
            for &y in &ids[a + 1..] {
                if !self.complex.graph().has_edge(x as usize, y as usize) {
                    return Err(Error::InvalidParameter(format!(
                        "{} and {} are not compatible",
                        self.parts[x as usize].write_part(face.polygon),
                        self.parts[y as usize].write_part(face.polygon)
                    )));
                }
            }
        }
        Ok(ids)
    }

    pub fn enumerate(&self, k: usize) -> Result<Vec<Face<R::Part>>> {
        Ok(self.face_ids(k)?.iter().map(|f| self.to_face(f)).collect())
    }

    /// Applies the generator `t` times (negative `t` runs backwards).
    pub fn rotate(&self, face: &Face<R::Part>, t: i64) -> Face<R::Part> {
        let steps = t.rem_euclid(self.group_order() as i64) as usize;
        let mut parts = face.parts.clone();
        for _ in 0..steps {
            parts = parts.iter().map(|p| self.realization.step(p)).collect();
        }
        Face::new(face.polygon, parts)
    }

    fn check_divisor(&self, d: usize) -> Result<()> {
        let order = self.group_order();
        if d == 0 || !order.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, order });
        }
        Ok(())
    }

    /// Faces with `k` elements fixed by the group element of order `d`.
    pub fn fixed(&self, k: usize, d: usize) -> Result<Vec<Face<R::Part>>> {
        self.check_divisor(d)?;
        let perm = self.complex.element_of_order(d);
        Ok(self
            .face_ids(k)?
            .into_iter()
            .filter(|f| perm.apply_face(f) == *f)
            .map(|f| self.to_face(&f))
            .collect())
    }

    pub fn fixed_count(&self, k: usize, d: usize) -> Result<usize> {
        self.check_divisor(d)?;
        Ok(count_fixed(&self.face_ids(k)?, &self.complex.element_of_order(d)))
    }

    pub fn is_fixed(&self, face: &Face<R::Part>, d: usize) -> Result<bool> {
        self.check_divisor(d)?;
        let ids = self.to_ids(face)?;
        Ok(self.complex.element_of_order(d).apply_face(&ids) == ids)
    }

    pub fn orbit_counts(&self, k: usize) -> Result<OrbitCounts> {
        Ok(orbit_counts(&self.face_ids(k)?, self.complex.generator()))
    }
}

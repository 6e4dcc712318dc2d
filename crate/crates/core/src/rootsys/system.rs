//! Root systems in simple-root coordinates, with Bourbaki numbering.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use crate::qpoly::{CoxeterDatum, CoxeterType};

/// A root as its coordinates in the basis of simple roots.
pub type Root = Vec<ExactScalar>;

/// Which part of the bipartition a reflection product uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An element of `Φ≥-1`: a negative simple root `-α_i` or a positive root,
/// the latter by its index in [`RootSystem::positive_roots`]. Indices are
/// 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlmostPositive {
    NegSimple(usize),
    Positive(usize),
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CoxeterType,
    datum: CoxeterDatum,
    /// `cartan[i][j] = <α_i^∨, α_j>`.
    cartan: Vec<Vec<ExactScalar>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    /// `true` for nodes in `I_+`.
    plus: Vec<bool>,
}

/// Edges `(i, j, <α_i^∨,α_j>, <α_j^∨,α_i>)`, 1-based.
fn diagram(ty: CoxeterType) -> Result<Vec<(usize, usize, ExactScalar, ExactScalar)>> {
    let m1 = ExactScalar::int(-1);
    let m2 = ExactScalar::int(-2);
    let mphi = -ExactScalar::phi();
    let chain = |n: usize| (1..n).map(|i| (i, i + 1, m1, m1)).collect::<Vec<_>>();
    let e = |n: usize| {
        [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
            .into_iter()
            .filter(|&(i, j)| i.max(j) <= n)
            .map(|(i, j)| (i, j, m1, m1))
            .collect::<Vec<_>>()
    };
    Ok(match ty {
        CoxeterType::A(n) => chain(n),
        CoxeterType::B(n) => {
            let mut v = chain(n - 1);
            v.push((n - 1, n, m1, m2));
            v
        }
        CoxeterType::D(n) => {
            let mut v = chain(n - 1);
            if n >= 3 {
                v.push((n - 2, n, m1, m1));
            }
            v
        }
        CoxeterType::E6 => e(6),
        CoxeterType::E7 => e(7),
        CoxeterType::E8 => e(8),
        CoxeterType::F4 => vec![(1, 2, m1, m1), (2, 3, m1, m2), (3, 4, m1, m1)],
        CoxeterType::H3 => vec![(1, 2, mphi, mphi), (2, 3, m1, m1)],
        CoxeterType::H4 => vec![(1, 2, mphi, mphi), (2, 3, m1, m1), (3, 4, m1, m1)],
        CoxeterType::I2(_) => {
            return Err(Error::UnsupportedType(
                "I2(a) is realized by the graph model, not by a root system".into(),
            ))
        }
    })
}

/// Builds the root system and its positive roots by closing the simple roots
/// under the simple reflections.
pub fn build_root_system(ty: CoxeterType) -> Result<RootSystem> {
    let edges = diagram(ty)?;
    let n = ty.rank();
    let mut cartan = vec![vec![ExactScalar::zero(); n]; n];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = ExactScalar::int(2);
    }
    let mut adjacent = vec![Vec::new(); n];
    for &(i, j, aij, aji) in &edges {
        cartan[i - 1][j - 1] = aij;
        cartan[j - 1][i - 1] = aji;
        adjacent[i - 1].push(j - 1);
        adjacent[j - 1].push(i - 1);
    }
    // 2-color the diagram breadth-first, node 1 in I_+
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacent[v] {
                if color[w].is_none() {
                    color[w] = Some(!color[v].unwrap());
                    queue.push_back(w);
                }
            }
        }
    }
    let mut sys = RootSystem {
        ty,
        datum: CoxeterDatum::new(ty),
        cartan,
        positive: Vec::new(),
        index: HashMap::new(),
        plus: color.into_iter().map(|c| c.unwrap()).collect(),
    };
    sys.close_positive_roots()?;
    Ok(sys)
}

impl RootSystem {
    fn close_positive_roots(&mut self) -> Result<()> {
        let n = self.rank();
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..n).map(|i| self.simple(i)).collect();
        for r in &queue {
            seen.insert(r.clone(), ());
        }
        let mut all = Vec::new();
        let limit = self.datum.positive_root_count();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                if beta == self.simple(i) {
                    continue;
                }
                let gamma = self.reflect(i, &beta);
                if !seen.contains_key(&gamma) {
                    if !is_nonnegative(&gamma) {
                        return Err(Error::InvalidParameter(format!(
                            "{} produced a mixed-sign root",
                            self.ty
                        )));
                    }
                    seen.insert(gamma.clone(), ());
                    queue.push_back(gamma);
                }
            }
            all.push(beta);
            if all.len() > limit {
                return Err(Error::InvalidParameter(format!(
                    "{} has more than {limit} positive roots",
                    self.ty
                )));
            }
        }
        all.sort_by(|x, y| height(x).cmp_value(&height(y)).then_with(|| y.cmp(x)));
        self.index = all.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        self.positive = all;
        Ok(())
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn coxeter_number(&self) -> usize {
        self.datum.h
    }

    /// `<α_i^∨, α_j>`, 0-based.
    pub fn cartan(&self, i: usize, j: usize) -> ExactScalar {
        self.cartan[i][j]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple(&self, i: usize) -> Root {
        let mut r = vec![ExactScalar::zero(); self.rank()];
        r[i] = ExactScalar::one();
        r
    }

    /// `s_i(β) = β - <α_i^∨, β> α_i`.
    pub fn reflect(&self, i: usize, beta: &[ExactScalar]) -> Root {
        let mut pairing = ExactScalar::zero();
        for (j, &b) in beta.iter().enumerate() {
            pairing += self.cartan[i][j] * b;
        }
        let mut out = beta.to_vec();
        out[i] -= pairing;
        out
    }

    /// Nodes of `I_+` (`Sign::Plus`) or `I_-`, 0-based.
    pub fn part(&self, sign: Sign) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.plus[i] == (sign == Sign::Plus))
            .collect()
    }

    pub fn in_part(&self, i: usize, sign: Sign) -> bool {
        self.plus[i] == (sign == Sign::Plus)
    }

    /// The same system with `I_+` and `I_-` exchanged.
    pub fn with_swapped_bipartition(&self) -> Self {
        let mut out = self.clone();
        for p in &mut out.plus {
            *p = !*p;
        }
        out
    }

    pub fn vector(&self, x: AlmostPositive) -> Root {
        match x {
            AlmostPositive::NegSimple(i) => self.simple(i).into_iter().map(|c| -c).collect(),
            AlmostPositive::Positive(p) => self.positive[p].clone(),
        }
    }

    fn classify(&self, v: &Root) -> Option<AlmostPositive> {
        if let Some(&p) = self.index.get(v) {
            return Some(AlmostPositive::Positive(p));
        }
        let neg: Root = v.iter().map(|&c| -c).collect();
        (0..self.rank())
            .find(|&i| neg == self.simple(i))
            .map(AlmostPositive::NegSimple)
    }

    /// Elements of `Φ≥-1`: the negative simple roots, then the positive roots.
    pub fn almost_positive(&self) -> Vec<AlmostPositive> {
        (0..self.rank())
            .map(AlmostPositive::NegSimple)
            .chain((0..self.positive.len()).map(AlmostPositive::Positive))
            .collect()
    }

    /// Whether `α_i` occurs in the simple-root expansion of `x`.
    pub fn involves(&self, x: AlmostPositive, i: usize) -> bool {
        match x {
            AlmostPositive::NegSimple(j) => i == j,
            AlmostPositive::Positive(p) => !self.positive[p][i].is_zero(),
        }
    }

    pub fn display(&self, x: AlmostPositive) -> String {
        match x {
            AlmostPositive::NegSimple(i) => format!("-a{}", i + 1),
            AlmostPositive::Positive(p) => {
                let terms: Vec<String> = self.positive[p]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| {
                        if *c == ExactScalar::one() {
                            format!("a{}", i + 1)
                        } else if c.is_rational() {
                            format!("{c}a{}", i + 1)
                        } else {
                            format!("({c})a{}", i + 1)
                        }
                    })
                    .collect();
                terms.join("+")
            }
        }
    }
}

/// Antichains of the positive-root poset (`β ≤ γ` iff `γ - β` is a
/// nonnegative combination of simple roots), counted by size. For Weyl groups
/// these are the Narayana numbers, i.e. the h-vector of the cluster complex.
pub fn root_poset_antichains(sys: &RootSystem) -> Result<Vec<u64>> {
    if matches!(sys.ty, CoxeterType::H3 | CoxeterType::H4) {
        return Err(Error::UnsupportedType(format!("{} is not crystallographic", sys.ty)));
    }
    let roots = sys.positive_roots();
    if roots.len() > 128 {
        return Err(Error::InvalidParameter("root poset too large".into()));
    }
    let comparable = |x: &Root, y: &Root| {
        let diff: Root = x.iter().zip(y).map(|(&a, &b)| a - b).collect();
        is_nonnegative(&diff) || diff.iter().all(|c| c.signum() <= 0)
    };
    // later[i]: roots after i that are incomparable with i
    let later: Vec<u128> = (0..roots.len())
        .map(|i| {
            (i + 1..roots.len())
                .filter(|&j| !comparable(&roots[i], &roots[j]))
                .fold(0u128, |m, j| m | (1u128 << j))
        })
        .collect();
    let mut counts = vec![0u64; sys.rank() + 1];
    fn go(later: &[u128], allowed: u128, size: usize, counts: &mut Vec<u64>) {
        counts[size] += 1;
        let mut rest = allowed;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            go(later, allowed & later[i], size + 1, counts);
        }
    }
    let all = if roots.len() == 128 {
        u128::MAX
    } else {
        (1u128 << roots.len()) - 1
    };
    go(&later, all, 0, &mut counts);
    Ok(counts)
}

/// Face numbers `f_0..f_n` (faces with `k` elements) from an h-vector:
/// `f_k = Σ_i h_i C(n-i, k-i)`.
pub fn face_numbers_from_h(h: &[u64]) -> Vec<u64> {
    let n = h.len() - 1;
    let choose = |a: u64, b: u64| -> u64 { (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1)) };
    (0..=n)
        .map(|k| (0..=k).map(|i| h[i] * choose((n - i) as u64, (k - i) as u64)).sum())
        .collect()
}

fn is_nonnegative(r: &[ExactScalar]) -> bool {
    r.iter().all(|c| c.signum() >= 0)
}

fn height(r: &[ExactScalar]) -> ExactScalar {
    r.iter().fold(ExactScalar::zero(), |acc, &c| acc + c)
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ty)
    }
}

/// `τ_ε`: identity on `-α_i` for `i` in the opposite part, otherwise the
/// product of the simple reflections indexed by the part `I_ε`.
pub fn tau(sys: &RootSystem, eps: Sign, x: AlmostPositive) -> AlmostPositive {
    if let AlmostPositive::NegSimple(i) = x {
        if sys.in_part(i, eps.opposite()) {
            return x;
        }
    }
    let mut v = sys.vector(x);
    for i in sys.part(eps) {
        v = sys.reflect(i, &v);
    }
    sys.classify(&v).expect("τ maps Φ≥-1 into itself")
}

/// `Γ = τ_- τ_+`.
pub fn gamma(sys: &RootSystem, x: AlmostPositive) -> AlmostPositive {
    tau(sys, Sign::Minus, tau(sys, Sign::Plus, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlmostPositive::*;

    #[test]
    fn positive_root_counts() {
        for ty in [
            CoxeterType::A(2),
            CoxeterType::A(5),
            CoxeterType::B(3),
            CoxeterType::D(4),
            CoxeterType::D(2),
            CoxeterType::E6,
            CoxeterType::E7,
            CoxeterType::E8,
            CoxeterType::F4,
            CoxeterType::H3,
            CoxeterType::H4,
        ] {
            let sys = build_root_system(ty).unwrap();
            assert_eq!(sys.positive_roots().len(), sys.datum().positive_root_count(), "{ty}");
        }
        assert_eq!(build_root_system(CoxeterType::E8).unwrap().positive_roots().len(), 120);
        assert_eq!(build_root_system(CoxeterType::H3).unwrap().positive_roots().len(), 15);
        assert!(matches!(
            build_root_system(CoxeterType::I2(5)),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn highest_roots() {
        let top = |ty| {
            let sys = build_root_system(ty).unwrap();
            sys.display(Positive(sys.positive_roots().len() - 1))
        };
        assert_eq!(top(CoxeterType::E8), "2a1+3a2+4a3+6a4+5a5+4a6+3a7+2a8");
        assert_eq!(top(CoxeterType::F4), "2a1+3a2+4a3+2a4");
        assert_eq!(top(CoxeterType::B(3)), "a1+2a2+2a3");
    }

    #[test]
    fn a2_roots_and_gamma_cycle() {
        let sys = build_root_system(CoxeterType::A(2)).unwrap();
        let names: Vec<String> = sys.almost_positive().into_iter().map(|x| sys.display(x)).collect();
        assert_eq!(names, ["-a1", "-a2", "a1", "a2", "a1+a2"]);
        assert_eq!(sys.part(Sign::Plus), vec![0]);
        assert_eq!(tau(&sys, Sign::Minus, NegSimple(0)), NegSimple(0));
        // α1 → -α1 → α1+α2 → -α2 → α2 → α1
        let mut x = Positive(0);
        let mut seen = Vec::new();
        for _ in 0..5 {
            x = gamma(&sys, x);
            seen.push(sys.display(x));
        }
        assert_eq!(seen, ["-a1", "a1+a2", "-a2", "a2", "a1"]);
    }

    #[test]
    fn tau_is_an_involution() {
        for ty in [CoxeterType::B(4), CoxeterType::E7, CoxeterType::H4] {
            let sys = build_root_system(ty).unwrap();
            for x in sys.almost_positive() {
                for eps in [Sign::Plus, Sign::Minus] {
                    assert_eq!(tau(&sys, eps, tau(&sys, eps, x)), x, "{ty}");
                }
            }
        }
    }

    #[test]
    fn parts_are_totally_disconnected() {
        for ty in [CoxeterType::D(5), CoxeterType::E8, CoxeterType::F4, CoxeterType::H3] {
            let sys = build_root_system(ty).unwrap();
            for eps in [Sign::Plus, Sign::Minus] {
                let part = sys.part(eps);
                for &i in &part {
                    for &j in &part {
                        assert!(i == j || sys.cartan(i, j).is_zero(), "{ty}");
                    }
                }
            }
        }
    }

    #[test]
    fn narayana_numbers() {
        let h = |ty| root_poset_antichains(&build_root_system(ty).unwrap()).unwrap();
        assert_eq!(h(CoxeterType::A(2)), vec![1, 3, 1]);
        assert_eq!(h(CoxeterType::B(2)), vec![1, 4, 1]);
        // sums are the Catalan numbers 4160 and 25080
        assert_eq!(h(CoxeterType::E7).iter().sum::<u64>(), 4160);
        assert_eq!(h(CoxeterType::E8).iter().sum::<u64>(), 25080);
        assert_eq!(face_numbers_from_h(&[1, 3, 1]), vec![1, 5, 5]);
        assert!(root_poset_antichains(&build_root_system(CoxeterType::H3).unwrap()).is_err());
    }

    #[test]
    fn golden_coefficients_in_h3() {
        let sys = build_root_system(CoxeterType::H3).unwrap();
        assert!(sys.positive_roots().iter().any(|r| r.iter().any(|c| !c.is_rational())));
        for r in sys.positive_roots() {
            for c in r {
                assert!(c.golden_integers().is_some());
            }
        }
    }
}

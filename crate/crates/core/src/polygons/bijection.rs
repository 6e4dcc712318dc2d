//! Bijections between rotation-invariant dissections and pairs `(μ, ν)`.
//!
//! The polygon is cut into `d` sectors of `b = N/d` consecutive vertices.
//! Every chord is oriented so that its counterclockwise arc is the short one;
//! each chord orbit under the `d`-fold rotation has exactly one member starting
//! in the first sector, and its label is that start's offset (1-based). `μ` is
//! the sorted list of labels. `ν` records, level by level, whether the orbit
//! of the chord `a_j (a_j+s+1)` is present, where `a_j` is the first label
//! followed by a gap of at least `s+1` in the current polygon; the level then
//! deletes the `s` vertices after `a_j` in every sector.

use serde::{Deserialize, Serialize};

use super::chord::Diagonal;
use super::model::{Face, Model};
use super::type_a::{DissectionA, TypeA};
use super::type_b::{canonical_pair, BDiagonal, DissectionB, TypeB};
use super::type_d::{Color, DDiagonal, DissectionD, TypeD};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BijectionImage {
    pub mu: Vec<usize>,
    pub nu: Vec<u8>,
}

impl std::fmt::Display for BijectionImage {
    /// `((a_1,...),(e_1,...))`
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        write!(
            f,
            "(({}),({}))",
            join(self.mu.iter().map(|x| x.to_string()).collect()),
            join(self.nu.iter().map(|x| x.to_string()).collect())
        )
    }
}

/// Chord as 0-based positions `(start, end)`, oriented along the short arc.
type Chord = (usize, usize);

#[derive(Debug, Clone, Copy)]
struct Sectors {
    n_gon: usize,
    d: usize,
    s: usize,
    levels: usize,
    /// Stop once every gap is at most `s`; the rest must be diameter orbits.
    diameter_terminal: bool,
}

impl Sectors {
    fn b(&self) -> usize {
        self.n_gon / self.d
    }

    fn is_diameter(&self, c: Chord) -> bool {
        2 * ((c.1 + self.n_gon - c.0) % self.n_gon) == self.n_gon
    }

    /// Representative of the chord's orbit that starts in sector 0.
    fn representative(&self, a: usize, b: usize) -> Result<Chord> {
        let n = self.n_gon;
        let ccw = (b + n - a) % n;
        let (start, end) = if 2 * ccw < n {
            (a, b)
        } else if 2 * ccw > n {
            (b, a)
        } else {
            if self.d % 2 == 1 {
                return Err(Error::Bijection("diameter under an odd rotation".into()));
            }
            (a.min(b), a.max(b))
        };
        let shift = start / self.b() * self.b();
        Ok((start - shift, (end + n - shift) % n))
    }

    fn orbit(&self, c: Chord) -> Vec<Chord> {
        let n = self.n_gon;
        let mut out: Vec<Chord> = (0..self.d)
            .map(|i| {
                let (x, y) = ((c.0 + i * self.b()) % n, (c.1 + i * self.b()) % n);
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn position(&self, keep: &[usize], i: usize) -> usize {
        (i / keep.len()) * self.b() + keep[i % keep.len()]
    }

    /// Index of the first label followed by a gap `>= s+1`, or `None` if every
    /// gap is at most `s`. `idx` must be ascending.
    fn first_wide_gap(&self, idx: &[usize], width: usize) -> Option<usize> {
        (0..idx.len()).find(|&j| {
            let next = if j + 1 < idx.len() { idx[j + 1] } else { idx[0] + width };
            idx[j] + self.s < next
        })
    }

    fn remove_after(&self, keep: &mut Vec<usize>, i: usize) {
        let bp = keep.len();
        let gone: Vec<usize> = (1..=self.s).map(|r| keep[(i + r) % bp]).collect();
        keep.retain(|x| !gone.contains(x));
    }

    fn forward(&self, chords: &[Diagonal]) -> Result<BijectionImage> {
        let n = self.n_gon;
        let b = self.b();
        let mut orbits: Vec<Chord> = chords
            .iter()
            .map(|c| self.representative(c.i - 1, c.j - 1))
            .collect::<Result<_>>()?;
        orbits.sort_unstable();
        orbits.dedup();
        let mut all: Vec<Chord> = orbits.iter().flat_map(|&c| self.orbit(c)).collect();
        all.sort_unstable();
        all.dedup();
        let mut given: Vec<Chord> = chords.iter().map(|c| (c.i - 1, c.j - 1)).collect();
        given.sort_unstable();
        given.dedup();
        if all != given {
            return Err(Error::Bijection("chord set is not invariant under the rotation".into()));
        }
        let mu: Vec<usize> = orbits.iter().map(|c| c.0 + 1).collect();
        let mut keep: Vec<usize> = (0..b).collect();
        let mut nu = Vec::with_capacity(self.levels);
        for level in 0..self.levels {
            if orbits.is_empty() {
                nu.push(0);
                continue;
            }
            let idx_of = |p: usize| {
                keep.binary_search(&(p % b))
                    .map_err(|_| Error::Bijection(format!("vertex {} was deleted", p + 1)))
            };
            for &(u, v) in &orbits {
                idx_of(u)?;
                idx_of(v)?;
            }
            let idx: Vec<usize> = orbits.iter().map(|c| idx_of(c.0).unwrap()).collect();
            let Some(j) = self.first_wide_gap(&idx, keep.len()) else {
                let rest = self.levels - level;
                if self.diameter_terminal && orbits.len() == rest && orbits.iter().all(|&c| self.is_diameter(c)) {
                    nu.extend(std::iter::repeat_n(1, rest));
                    orbits.clear();
                    break;
                }
                return Err(Error::Bijection("no gap of width s+1 between labels".into()));
            };
            let target = (orbits[j].0, self.position(&keep, idx[j] + self.s + 1) % n);
            if let Some(p) = orbits.iter().position(|&c| c == target) {
                orbits.remove(p);
                nu.push(1);
            } else {
                nu.push(0);
            }
            self.remove_after(&mut keep, idx[j]);
        }
        if !orbits.is_empty() {
            return Err(Error::Bijection(format!(
                "{} orbits left after all levels",
                orbits.len()
            )));
        }
        Ok(BijectionImage { mu, nu })
    }

    fn check_image(&self, img: &BijectionImage, ones_at_end: bool) -> Result<()> {
        let b = self.b();
        let bad = |why: &str| Err(Error::Bijection(format!("{img} is not in the product set: {why}")));
        if img.mu.windows(2).any(|w| w[0] > w[1]) || img.mu.iter().any(|&a| a == 0 || a > b) {
            return bad("μ must be weakly increasing in 1..=b");
        }
        if img.nu.len() != self.levels || img.nu.iter().any(|&e| e > 1) {
            return bad("ν has the wrong length or a non-binary entry");
        }
        if img.nu.iter().filter(|&&e| e == 1).count() != img.mu.len() {
            return bad("ν must have |μ| ones");
        }
        if ones_at_end && img.nu.last() != Some(&1) {
            return bad("ν must end in 1");
        }
        Ok(())
    }

    fn inverse(&self, img: &BijectionImage) -> Result<Vec<Chord>> {
        let n = self.n_gon;
        let b = self.b();
        let mut pending: Vec<usize> = img.mu.iter().map(|a| a - 1).collect();
        let mut reps: Vec<Chord> = Vec::new();
        let mut keep: Vec<usize> = (0..b).collect();
        for level in 0..self.levels {
            if pending.is_empty() {
                break;
            }
            let idx: Vec<usize> = pending
                .iter()
                .map(|&u| {
                    keep.binary_search(&u)
                        .map_err(|_| Error::Bijection("label deleted".into()))
                })
                .collect::<Result<_>>()?;
            let Some(j) = self.first_wide_gap(&idx, keep.len()) else {
                let rest = &img.nu[level..];
                if self.diameter_terminal && rest.len() == pending.len() && rest.iter().all(|&e| e == 1) {
                    reps.extend(pending.drain(..).map(|u| (u, u + n / 2)));
                    break;
                }
                return Err(Error::Bijection("no gap of width s+1 between labels".into()));
            };
            if img.nu[level] == 1 {
                reps.push((pending[j], self.position(&keep, idx[j] + self.s + 1) % n));
                pending.remove(j);
            }
            self.remove_after(&mut keep, idx[j]);
        }
        if !pending.is_empty() {
            return Err(Error::Bijection("labels left after all levels".into()));
        }
        let mut chords: Vec<Chord> = reps.into_iter().flat_map(|c| self.orbit(c)).collect();
        chords.sort_unstable();
        chords.dedup();
        Ok(chords)
    }
}

fn to_diagonals(chords: &[Chord]) -> Vec<Diagonal> {
    chords.iter().map(|&(a, b)| Diagonal::new(a + 1, b + 1)).collect()
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn require_fixed<R: super::Realization>(model: &Model<R>, x: &Face<R::Part>, d: usize) -> Result<()> {
    if model.is_fixed(x, d)? {
        Ok(())
    } else {
        Err(Error::NotFixed { d })
    }
}

fn a_sectors(model: &Model<TypeA>, d: usize, k: usize) -> Result<Sectors> {
    let ty = model.complex_type();
    let big = model.polygon_size();
    require(d >= 2 && big.is_multiple_of(d), || {
        format!("d = {d} must be at least 2 and divide {big}")
    })?;
    require(k.is_multiple_of(d), || format!("d = {d} must divide k = {k}"))?;
    Ok(Sectors {
        n_gon: big,
        d,
        s: ty.s(),
        levels: (ty.rank_param() - 1) / d,
        diameter_terminal: false,
    })
}

/// Type A, for `d >= 2` dividing both `sn+2` and `k`; `m = ⌊(n-1)/d⌋`.
pub fn bijection_a(model: &Model<TypeA>, x: &DissectionA, d: usize) -> Result<BijectionImage> {
    let sec = a_sectors(model, d, x.len())?;
    require_fixed(model, x, d)?;
    sec.forward(&x.parts)
}

pub fn bijection_a_inverse(model: &Model<TypeA>, img: &BijectionImage, d: usize) -> Result<DissectionA> {
    let sec = a_sectors(model, d, img.mu.len() * d)?;
    sec.check_image(img, false)?;
    let x = Face::new(model.polygon_size(), to_diagonals(&sec.inverse(img)?));
    model.to_ids(&x)?;
    require_fixed(model, &x, d)?;
    Ok(x)
}

fn symmetric_sectors(
    model_order: usize,
    s: usize,
    t: usize,
    k: usize,
    levels: usize,
    terminal: bool,
) -> Result<Sectors> {
    let half = model_order / 2;
    require(t >= 2 && half.is_multiple_of(t), || {
        format!("t = {t} must be at least 2 and divide {half}")
    })?;
    require(k.is_multiple_of(t), || format!("t = {t} must divide k = {k}"))?;
    Ok(Sectors {
        n_gon: model_order,
        d: 2 * t,
        s,
        levels,
        diameter_terminal: terminal,
    })
}

fn b_sectors(model: &Model<TypeB>, t: usize, k: usize) -> Result<Sectors> {
    let ty = model.complex_type();
    symmetric_sectors(
        model.polygon_size(),
        ty.s(),
        t,
        k,
        (ty.rank_param() - 1) / t.max(1),
        false,
    )
}

fn chords_of<T, F: Fn(&T) -> Vec<Diagonal>>(parts: &[T], f: F) -> Vec<Diagonal> {
    parts.iter().flat_map(f).collect()
}

/// Type B, for `t >= 2` dividing `sn+1` and `k`, acting by the element of
/// order `2t`; `m = ⌊(n-1)/t⌋`.
pub fn bijection_b(model: &Model<TypeB>, x: &DissectionB, t: usize) -> Result<BijectionImage> {
    let sec = b_sectors(model, t, x.len())?;
    require_fixed(model, x, 2 * t)?;
    sec.forward(&chords_of(&x.parts, |p| p.chords(x.polygon)))
}

pub fn bijection_b_inverse(model: &Model<TypeB>, img: &BijectionImage, t: usize) -> Result<DissectionB> {
    let sec = b_sectors(model, t, img.mu.len() * t)?;
    sec.check_image(img, false)?;
    let big = model.polygon_size();
    let mut parts: Vec<BDiagonal> = to_diagonals(&sec.inverse(img)?)
        .into_iter()
        .map(|c| {
            if c.j - c.i == big / 2 {
                BDiagonal::Diameter(c.i)
            } else {
                BDiagonal::Pair(canonical_pair(c, big))
            }
        })
        .collect();
    parts.sort();
    parts.dedup();
    let x = Face::new(big, parts);
    model.to_ids(&x)?;
    require_fixed(model, &x, 2 * t)?;
    Ok(x)
}

fn d_sectors(model: &Model<TypeD>, t: usize, k: usize, with_diameters: bool) -> Result<Sectors> {
    let ty = model.complex_type();
    let n = ty.rank_param();
    if with_diameters {
        require(t >= 1 && n.is_multiple_of(t), || format!("t = {t} must divide n = {n}"))?;
        symmetric_sectors(model.polygon_size(), ty.s(), t, k, n / t, true)
    } else {
        symmetric_sectors(model.polygon_size(), ty.s(), t, k, (n - 2) / t.max(1), false)
    }
}

fn d_chords(x: &DissectionD) -> Vec<Diagonal> {
    chords_of(&x.parts, |p| p.chords(x.polygon))
}

/// Type D faces without diameters, fixed by the element of order `2t`;
/// `m = ⌊(n-2)/t⌋`.
pub fn bijection_d_t0(model: &Model<TypeD>, x: &DissectionD, t: usize) -> Result<BijectionImage> {
    let sec = d_sectors(model, t, x.len(), false)?;
    if x.parts.iter().any(|p| p.is_diameter()) {
        return Err(Error::InvalidParameter(
            "face contains a diameter, it is not in T0".into(),
        ));
    }
    require_fixed(model, x, 2 * t)?;
    sec.forward(&d_chords(x))
}

pub fn bijection_d_t0_inverse(model: &Model<TypeD>, img: &BijectionImage, t: usize) -> Result<DissectionD> {
    let sec = d_sectors(model, t, img.mu.len() * t, false)?;
    sec.check_image(img, false)?;
    let big = model.polygon_size();
    let chords = to_diagonals(&sec.inverse(img)?);
    if chords.iter().any(|c| c.j - c.i == big / 2) {
        return Err(Error::Bijection("inverse produced a diameter".into()));
    }
    let mut parts: Vec<DDiagonal> = chords
        .into_iter()
        .map(|c| DDiagonal::Pair(canonical_pair(c, big)))
        .collect();
    parts.sort();
    parts.dedup();
    let x = Face::new(big, parts);
    model.to_ids(&x)?;
    require_fixed(model, &x, 2 * t)?;
    Ok(x)
}

/// Type D faces whose first diameter is red, fixed by the element of order
/// `2t`, for `t` dividing `s(n-1)+1`, `k` and `n`; `m = n/t` and `ν` ends
/// in 1.
pub fn bijection_d_t1(model: &Model<TypeD>, x: &DissectionD, t: usize) -> Result<BijectionImage> {
    let sec = d_sectors(model, t, x.len(), true)?;
    let first = x.parts.iter().find_map(|p| match *p {
        DDiagonal::Diameter { color, .. } => Some(color),
        DDiagonal::Pair(_) => None,
    });
    if first != Some(Color::Red) {
        return Err(Error::InvalidParameter(
            "face is not in T1: its first diameter must be red".into(),
        ));
    }
    require_fixed(model, x, 2 * t)?;
    sec.forward(&d_chords(x))
}

pub fn bijection_d_t1_inverse(model: &Model<TypeD>, img: &BijectionImage, t: usize) -> Result<DissectionD> {
    let sec = d_sectors(model, t, img.mu.len() * t, true)?;
    sec.check_image(img, true)?;
    let big = model.polygon_size();
    let chords = to_diagonals(&sec.inverse(img)?);
    let mut diameters: Vec<usize> = chords.iter().filter(|c| c.j - c.i == big / 2).map(|c| c.i).collect();
    diameters.sort_unstable();
    let mut parts: Vec<DDiagonal> = chords
        .iter()
        .filter(|c| c.j - c.i != big / 2)
        .map(|&c| DDiagonal::Pair(canonical_pair(c, big)))
        .collect();
    if let Some(&first) = diameters.first() {
        let anchor = (first, Color::Red);
        for &index in &diameters {
            let color = if index == first {
                Color::Red
            } else {
                model.realization().compatible_color(index, anchor)
            };
            parts.push(DDiagonal::Diameter { index, color });
        }
    }
    parts.sort();
    parts.dedup();
    let x = Face::new(big, parts);
    model.to_ids(&x)?;
    require_fixed(model, &x, 2 * t)?;
    Ok(x)
}

/// The diameter-terminal map on a bare chord set: every chord is listed with
/// its antipode, diameters carry no color, and only invariance under the
/// `2t`-fold rotation of the polygon is required.
pub fn bijection_d_chords(model: &Model<TypeD>, chords: &[Diagonal], t: usize) -> Result<BijectionImage> {
    let k = chords.iter().filter(|c| c.i <= model.polygon_size() / 2).count();
    let sec = d_sectors(model, t, k, true)?;
    sec.forward(chords)
}

pub fn bijection_d_chords_inverse(model: &Model<TypeD>, img: &BijectionImage, t: usize) -> Result<Vec<Diagonal>> {
    let sec = d_sectors(model, t, img.mu.len() * t, true)?;
    sec.check_image(img, true)?;
    Ok(to_diagonals(&sec.inverse(img)?))
}

/// All pairs `(μ, ν)` with `μ` a weakly increasing sequence of length `r`
/// in `1..=b` and `ν` a binary sequence of length `m` with `r` ones (ending in
/// 1 when `last_one`), in lexicographic order.
pub fn product_set(b: usize, r: usize, m: usize, last_one: bool) -> Vec<BijectionImage> {
    fn multisets(b: usize, r: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for a in from..=b {
            cur.push(a);
            multisets(b, r, a, cur, out);
            cur.pop();
        }
    }
    let mut mus = Vec::new();
    multisets(b, r, 1, &mut Vec::new(), &mut mus);
    let nus: Vec<Vec<u8>> = (0u32..(1u32 << m))
        .filter(|mask| mask.count_ones() as usize == r)
        .map(|mask| (0..m).map(|i| (mask >> (m - 1 - i) & 1) as u8).collect::<Vec<u8>>())
        .filter(|nu| !last_one || nu.last() == Some(&1))
        .collect();
    let mut out: Vec<BijectionImage> = mus
        .iter()
        .flat_map(|mu| {
            nus.iter().map(move |nu| BijectionImage {
                mu: mu.clone(),
                nu: nu.clone(),
            })
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::type_d::split_w;

    fn face<T: super::super::PartText + Ord>(s: &str) -> Face<T> {
        Face::parse(s).unwrap()
    }

    #[test]
    fn twenty_four_gon_example() {
        let m = TypeA::model(2, 11).unwrap();
        let x: DissectionA = face("24,3-8,8-11,11-16,16-19,19-24,3-24");
        assert_eq!(x.len(), 6);
        let img = bijection_a(&m, &x, 3).unwrap();
        assert_eq!(img.to_string(), "((3,8),(0,1,1))");
        assert_eq!(bijection_a_inverse(&m, &img, 3).unwrap(), x);
    }

    #[test]
    fn trivial_dissection() {
        let m = TypeA::model(2, 5).unwrap();
        let img = bijection_a(&m, &Face::new(12, vec![]), 2).unwrap();
        assert_eq!(
            img,
            BijectionImage {
                mu: vec![],
                nu: vec![0, 0]
            }
        );
    }

    #[test]
    fn rejects_bad_input() {
        let m = TypeA::model(2, 3).unwrap();
        let x: DissectionA = face("8,1-4");
        assert!(matches!(bijection_a(&m, &x, 2), Err(Error::InvalidParameter(_))));
        let y: DissectionA = face("8,1-4,1-6");
        assert_eq!(bijection_a(&m, &y, 2), Err(Error::NotFixed { d: 2 }));
        let bad = BijectionImage {
            mu: vec![2],
            nu: vec![0],
        };
        assert!(bijection_a_inverse(&TypeA::model(2, 5).unwrap(), &bad, 2).is_err());
    }

    #[test]
    fn round_trip_a_2_5_4_2() {
        let m = TypeA::model(2, 5).unwrap();
        let fixed = m.fixed(4, 2).unwrap();
        let mut images: Vec<BijectionImage> = fixed.iter().map(|x| bijection_a(&m, x, 2).unwrap()).collect();
        for (x, img) in fixed.iter().zip(&images) {
            assert_eq!(&bijection_a_inverse(&m, img, 2).unwrap(), x);
        }
        images.sort();
        assert_eq!(images, product_set(6, 2, 2, false));
    }

    #[test]
    fn twenty_gon_b_example() {
        let m = TypeB::model(1, 9).unwrap();
        let target = BijectionImage {
            mu: vec![2, 5],
            nu: vec![0, 1, 1, 0],
        };
        let y = bijection_b_inverse(&m, &target, 2).unwrap();
        assert_eq!(y.len(), 4);
        assert_eq!(bijection_b(&m, &y, 2).unwrap(), target);
    }

    #[test]
    fn half_turn_of_a_32_gon_fixes_no_diameters() {
        // With d = 4 not dividing n = 6, a fixed face cannot contain diameters.
        let m = TypeD::model(3, 6).unwrap();
        assert!(split_w(m.fixed(6, 4).unwrap()).t1.is_empty());
        let img = BijectionImage {
            mu: vec![2, 2, 7],
            nu: vec![1, 1, 1],
        };
        assert!(bijection_d_t1_inverse(&m, &img, 2).is_err());
        // the bare chord configuration is still quarter-turn symmetric
        let chords: Vec<Diagonal> = [
            (2, 6),
            (18, 22),
            (10, 14),
            (26, 30),
            (2, 18),
            (10, 26),
            (7, 23),
            (15, 31),
        ]
        .iter()
        .map(|&(i, j)| Diagonal::new(i, j))
        .collect();
        assert_eq!(bijection_d_chords(&m, &chords, 2).unwrap(), img);
        let mut back = bijection_d_chords_inverse(&m, &img, 2).unwrap();
        back.sort();
        let mut want = chords.clone();
        want.sort();
        assert_eq!(back, want);
    }

    #[test]
    fn forty_four_gon_d_round_trips() {
        let m = TypeD::model(3, 8).unwrap();
        for k in [2, 4, 6, 8] {
            let w = split_w(m.fixed(k, 4).unwrap());
            let mut t1: Vec<BijectionImage> = w.t1.iter().map(|x| bijection_d_t1(&m, x, 2).unwrap()).collect();
            let mut t0: Vec<BijectionImage> = w.t0.iter().map(|x| bijection_d_t0(&m, x, 2).unwrap()).collect();
            for (x, i) in w.t1.iter().zip(&t1) {
                assert_eq!(&bijection_d_t1_inverse(&m, i, 2).unwrap(), x);
            }
            for (x, i) in w.t0.iter().zip(&t0) {
                assert_eq!(&bijection_d_t0_inverse(&m, i, 2).unwrap(), x);
            }
            t1.sort();
            t0.sort();
            assert_eq!(t1, product_set(11, k / 2, 4, true), "k = {k}");
            assert_eq!(t0, product_set(11, k / 2, 3, false), "k = {k}");
        }
        let x = bijection_d_t1_inverse(
            &m,
            &BijectionImage {
                mu: vec![2, 2, 7],
                nu: vec![1, 1, 0, 1],
            },
            2,
        )
        .unwrap();
        assert_eq!(bijection_d_t1(&m, &x, 2).unwrap().to_string(), "((2,2,7),(1,1,0,1))");
    }

    #[test]
    fn round_trip_d_t1_1_4_2_4() {
        let m = TypeD::model(1, 4).unwrap();
        let w = split_w(m.fixed(2, 4).unwrap());
        assert!(!w.t1.is_empty());
        let mut images = Vec::new();
        for x in &w.t1 {
            let img = bijection_d_t1(&m, x, 2).unwrap();
            assert_eq!(&bijection_d_t1_inverse(&m, &img, 2).unwrap(), x);
            images.push(img);
        }
        images.sort();
        assert_eq!(images, product_set(2, 1, 2, true));
    }

    #[test]
    fn product_set_sizes() {
        assert_eq!(product_set(6, 2, 2, false).len(), 21);
        assert_eq!(
            product_set(3, 0, 2, false),
            vec![BijectionImage {
                mu: vec![],
                nu: vec![0, 0]
            }]
        );
        assert_eq!(product_set(4, 2, 3, true).len(), 10 * 2);
    }
}

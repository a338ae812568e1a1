//! Truncated finite pointed simplicial sets.
//!
//! Only nondegenerate simplices are stored. Every simplex is written uniquely as
//! `s_I x` with `x` nondegenerate, and a face map of a nondegenerate simplex is
//! recorded in that form as a [`Simplex`].

mod glue;
mod map;
mod models;
mod pairs;
mod text;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use glue::{mapping_cone, pushout, quotient, reduced_cone, wedge, Pushout, Quotient, Wedge};
pub use map::SMap;
pub use models::{
    bar_construction, circle, degree_collapse, genus2, klein_bottle, moore_space, point, simplex,
    sphere, torus, BarModel, DEFAULT_TRUNCATION,
};
pub use pairs::{product, smash, smash_map, suspension, tau, PairComplex, PairKind};

/// A simplex `s_I x` at some level `n`.
///
/// `degen` is the set `I ⊆ {0, .., n-1}` as a bitmask: bit `t` is set when the
/// underlying surjection `[n] -> [n - |I|]` identifies `t` and `t + 1`. As an
/// operator word this is `s_{i_k} ... s_{i_1}` with `i_k > ... > i_1`.
/// `id` indexes a nondegenerate simplex at level `n - |I|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub degen: u32,
    pub id: usize,
}

impl Simplex {
    pub fn nondegenerate(id: usize) -> Self {
        Simplex { degen: 0, id }
    }

    pub fn is_degenerate(&self) -> bool {
        self.degen != 0
    }

    /// Level of the underlying nondegenerate simplex, for a simplex at level `n`.
    pub fn base_level(&self, n: usize) -> usize {
        n - self.degen.count_ones() as usize
    }
}

/// The surjection `[n] -> [n - |I|]` encoded by a degeneracy mask.
pub(crate) fn surjection(mask: u32, n: usize) -> Vec<usize> {
    (0..=n)
        .map(|j| j - (mask & ((1u32 << j) - 1)).count_ones() as usize)
        .collect()
}

/// The degeneracy mask of a monotone surjection given by its values.
fn mask_of_surjection(values: &[usize]) -> u32 {
    let mut mask = 0;
    for t in 0..values.len().saturating_sub(1) {
        if values[t] == values[t + 1] {
            mask |= 1 << t;
        }
    }
    mask
}

pub(crate) fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

#[derive(Debug, PartialEq, Eq)]
struct Data {
    truncation: usize,
    basepoint: usize,
    counts: Vec<usize>,
    /// `faces[n][x * (n + 1) + i]` is `d_i x` for nondegenerate `x` at level `n >= 1`.
    faces: Vec<Vec<Simplex>>,
}

/// A finite pointed simplicial set truncated at dimension `D`.
///
/// Levels `0..=D` are stored. Cloning is cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct FinSSet(Arc<Data>);

impl FinSSet {
    pub fn truncation(&self) -> usize {
        self.0.truncation
    }

    pub fn basepoint(&self) -> usize {
        self.0.basepoint
    }

    /// Number of nondegenerate simplices at level `n` (zero above the truncation).
    pub fn count(&self, n: usize) -> usize {
        self.0.counts.get(n).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0.counts
    }

    /// Highest level carrying a nondegenerate simplex.
    pub fn dimension(&self) -> usize {
        self.0.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// `d_i x` for the nondegenerate simplex `x` at level `n >= 1`.
    #[inline]
    pub fn face(&self, n: usize, x: usize, i: usize) -> Simplex {
        self.0.faces[n][x * (n + 1) + i]
    }

    pub fn faces_of(&self, n: usize, x: usize) -> &[Simplex] {
        &self.0.faces[n][x * (n + 1)..(x + 1) * (n + 1)]
    }

    /// `s_{n-1} ... s_0 *` at level `n`.
    pub fn base_simplex(&self, n: usize) -> Simplex {
        Simplex {
            degen: full_mask(n),
            id: self.0.basepoint,
        }
    }

    /// Whether `s` (at level `n`) is a degeneracy of the basepoint.
    pub fn is_base(&self, n: usize, s: Simplex) -> bool {
        s.base_level(n) == 0 && s.id == self.0.basepoint
    }

    /// Applies the simplicial operator `θ : [k] -> [n]` (monotone, given by its
    /// values) to the simplex `s` at level `n`, returning the result at level `k`.
    pub fn apply(&self, n: usize, s: Simplex, theta: &[usize]) -> Simplex {
        let m = s.base_level(n);
        let sigma = surjection(s.degen, n);
        let composite: Vec<usize> = theta.iter().map(|&j| sigma[j]).collect();
        let mut image: Vec<usize> = composite.clone();
        image.dedup();
        let rho: Vec<usize> = {
            let mut r = Vec::with_capacity(composite.len());
            let mut level = 0;
            for (t, &c) in composite.iter().enumerate() {
                if t > 0 && c != composite[t - 1] {
                    level += 1;
                }
                r.push(level);
            }
            r
        };
        let rho_mask = mask_of_surjection(&rho);
        if image.len() == m + 1 {
            return Simplex {
                degen: rho_mask,
                id: s.id,
            };
        }
        // `image` is an injection [l] -> [m] missing some index; peel off one face.
        let missing = (0..=m).rev().find(|v| image.binary_search(v).is_err()).expect("not onto");
        let f = self.face(m, s.id, missing);
        let delta: Vec<usize> = image
            .iter()
            .map(|&v| if v > missing { v - 1 } else { v })
            .collect();
        let inner = self.apply(m - 1, f, &delta);
        let l = image.len() - 1;
        let inner_sigma = surjection(inner.degen, l);
        let total: Vec<usize> = rho.iter().map(|&j| inner_sigma[j]).collect();
        Simplex {
            degen: mask_of_surjection(&total),
            id: inner.id,
        }
    }

    /// `d_i s` for an arbitrary simplex `s` at level `n >= 1`.
    pub fn face_of(&self, n: usize, s: Simplex, i: usize) -> Simplex {
        if s.degen == 0 {
            return self.face(n, s.id, i);
        }
        let theta: Vec<usize> = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
        self.apply(n, s, &theta)
    }

    /// `s_j s` for an arbitrary simplex `s` at level `n`.
    pub fn degeneracy_of(&self, n: usize, s: Simplex, j: usize) -> Simplex {
        let theta: Vec<usize> = (0..=n + 1).map(|t| if t <= j { t } else { t - 1 }).collect();
        self.apply(n, s, &theta)
    }

    /// `s_I s` where `s` sits at level `m` and `mask` is a degeneracy at level `n`.
    pub fn degenerate(&self, m: usize, s: Simplex, mask: u32, n: usize) -> Simplex {
        debug_assert_eq!(n - mask.count_ones() as usize, m);
        if s.degen == 0 {
            return Simplex { degen: mask, id: s.id };
        }
        self.apply(m, s, &surjection(mask, n))
    }

    /// Every simplex (degenerate ones included) at level `n`.
    pub fn all_simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for mask in 0..(1u32 << n) {
            let m = n - mask.count_ones() as usize;
            for id in 0..self.count(m) {
                out.push(Simplex { degen: mask, id });
            }
        }
        out
    }

    /// Checks all simplicial identities on every simplex up to the truncation.
    ///
    /// The face identities are checked on all simplices of levels `<= D`; the
    /// identities involving a degeneracy are checked where the degeneracy stays
    /// within the truncation. Returns a description of the first failure.
    pub fn verify_identities(&self) -> std::result::Result<(), String> {
        let d = self.truncation();
        for n in 0..=d {
            for s in self.all_simplices(n) {
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let lhs = self.face_of(n - 1, self.face_of(n, s, j), i);
                            let rhs = self.face_of(n - 1, self.face_of(n, s, i), j - 1);
                            if lhs != rhs {
                                return Err(format!("d{i} d{j} != d{} d{i} on {s:?} at level {n}", j - 1));
                            }
                        }
                    }
                }
                if n < d {
                    for j in 0..=n {
                        let sj = self.degeneracy_of(n, s, j);
                        for i in 0..=n + 1 {
                            let lhs = self.face_of(n + 1, sj, i);
                            let expected = if i < j {
                                (n >= 1).then(|| self.degeneracy_of(n - 1, self.face_of(n, s, i), j - 1))
                            } else if i == j || i == j + 1 {
                                Some(s)
                            } else {
                                (n >= 1).then(|| self.degeneracy_of(n - 1, self.face_of(n, s, i - 1), j))
                            };
                            if let Some(rhs) = expected {
                                if lhs != rhs {
                                    return Err(format!("d{i} s{j} fails on {s:?} at level {n}"));
                                }
                            }
                        }
                        if n + 1 < d {
                            for i in 0..=j {
                                let lhs = self.degeneracy_of(n + 1, sj, i);
                                let rhs = self.degeneracy_of(n + 1, self.degeneracy_of(n, s, i), j + 1);
                                if lhs != rhs {
                                    return Err(format!("s{i} s{j} fails on {s:?} at level {n}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Vertex partition induced by the edges, as a component index per vertex.
    pub fn components(&self) -> Vec<usize> {
        let n0 = self.count(0);
        let mut parent: Vec<usize> = (0..n0).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in 0..self.count(1) {
            let a = find(&mut parent, self.face(1, e, 0).id);
            let b = find(&mut parent, self.face(1, e, 1).id);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..n0).map(|v| find(&mut parent, v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let c = self.components();
        c.iter().all(|&r| r == c[0])
    }

    /// Same complex with every level above `d` dropped.
    pub fn truncate(&self, d: usize) -> Result<FinSSet> {
        if d > self.truncation() {
            return Err(Error::DegreeExceedsTruncation {
                degree: d,
                truncation: self.truncation(),
                required: d,
            });
        }
        Ok(FinSSet(Arc::new(Data {
            truncation: d,
            basepoint: self.0.basepoint,
            counts: self.0.counts[..=d].to_vec(),
            faces: self.0.faces[..=d].to_vec(),
        })))
    }

    /// Fails with [`Error::DegreeExceedsTruncation`] unless level `level` is stored.
    pub fn require_level(&self, level: usize, degree: usize) -> Result<()> {
        if level > self.truncation() {
            return Err(Error::DegreeExceedsTruncation {
                degree,
                truncation: self.truncation(),
                required: level,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for FinSSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinSSet")
            .field("truncation", &self.0.truncation)
            .field("counts", &self.0.counts)
            .field("basepoint", &self.0.basepoint)
            .finish()
    }
}

/// Incremental construction of a [`FinSSet`], level by level.
#[derive(Clone, Debug)]
pub struct Builder {
    truncation: usize,
    counts: Vec<usize>,
    faces: Vec<Vec<Simplex>>,
}

impl Builder {
    pub fn new(truncation: usize) -> Self {
        Builder {
            truncation,
            counts: vec![0; truncation + 1],
            faces: vec![Vec::new(); truncation + 1],
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn count(&self, n: usize) -> usize {
        self.counts[n]
    }

    pub fn add_vertex(&mut self) -> usize {
        self.counts[0] += 1;
        self.counts[0] - 1
    }

    /// Adds a nondegenerate simplex at level `faces.len() - 1`. Faces are checked in
    /// [`Builder::finish`].
    pub fn add(&mut self, faces: &[Simplex]) -> usize {
        let n = faces.len() - 1;
        assert!(n >= 1 && n <= self.truncation, "level {n} outside 1..={}", self.truncation);
        self.faces[n].extend_from_slice(faces);
        self.counts[n] += 1;
        self.counts[n] - 1
    }

    /// Validates face targets, degeneracy words and the face identities `d_i d_j = d_{j-1} d_i`.
    pub fn finish(self, basepoint: usize) -> Result<FinSSet> {
        if basepoint >= self.counts[0] {
            return Err(Error::InvalidModel(format!(
                "basepoint {basepoint} is not a vertex ({} vertices)",
                self.counts[0]
            )));
        }
        for n in 1..=self.truncation {
            for (k, f) in self.faces[n].iter().enumerate() {
                let (x, i) = (k / (n + 1), k % (n + 1));
                let bits = f.degen.count_ones() as usize;
                if (n > 1 && f.degen >> (n - 1) != 0) || (n == 1 && f.degen != 0) || bits > n - 1 {
                    return Err(Error::InvalidModel(format!(
                        "face d{i} of simplex {x} at level {n} has an invalid degeneracy"
                    )));
                }
                if f.id >= self.counts[n - 1 - bits] {
                    return Err(Error::InvalidModel(format!(
                        "face d{i} of simplex {x} at level {n} targets missing simplex {}",
                        f.id
                    )));
                }
            }
        }
        let x = FinSSet(Arc::new(Data {
            truncation: self.truncation,
            basepoint,
            counts: self.counts,
            faces: self.faces,
        }));
        for n in 2..=x.truncation() {
            for s in 0..x.count(n) {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = x.face_of(n - 1, x.face(n, s, j), i);
                        let rhs = x.face_of(n - 1, x.face(n, s, i), j - 1);
                        if lhs != rhs {
                            return Err(Error::InvalidModel(format!(
                                "simplicial identity d{i} d{j} = d{} d{i} fails on simplex {s} at level {n}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjection_masks() {
        assert_eq!(surjection(0b0, 2), vec![0, 1, 2]);
        assert_eq!(surjection(0b1, 2), vec![0, 0, 1]);
        assert_eq!(surjection(0b10, 2), vec![0, 1, 1]);
        assert_eq!(surjection(0b11, 2), vec![0, 0, 0]);
        assert_eq!(mask_of_surjection(&[0, 0, 1, 1]), 0b101);
    }

    #[test]
    fn degenerate_faces_on_an_edge() {
        let x = simplex(1, 3).unwrap();
        let e = Simplex::nondegenerate(0);
        // s0 e at level 2: faces d0 = e, d1 = e, d2 = s0 d1 e
        let s0e = x.degeneracy_of(1, e, 0);
        assert_eq!(s0e, Simplex { degen: 0b01, id: 0 });
        assert_eq!(x.face_of(2, s0e, 0), e);
        assert_eq!(x.face_of(2, s0e, 1), e);
        assert_eq!(x.face_of(2, s0e, 2), Simplex { degen: 1, id: 0 });
        let s1e = x.degeneracy_of(1, e, 1);
        assert_eq!(x.face_of(2, s1e, 0), Simplex { degen: 1, id: 1 });
        assert!(x.verify_identities().is_ok());
    }

    #[test]
    fn builder_rejects_bad_identities() {
        let mut b = Builder::new(2);
        let v = b.add_vertex();
        let w = b.add_vertex();
        let a = b.add(&[Simplex::nondegenerate(w), Simplex::nondegenerate(v)]);
        let c = b.add(&[Simplex::nondegenerate(v), Simplex::nondegenerate(v)]);
        // d0 d2 must equal d1 d0: the edge a ends at w but c starts at v
        b.add(&[Simplex::nondegenerate(c), Simplex::nondegenerate(a), Simplex::nondegenerate(a)]);
        assert!(matches!(b.finish(0), Err(Error::InvalidModel(_))));
    }

    #[test]
    fn connectivity() {
        assert!(sphere(2, 3).unwrap().is_connected());
        assert!(!sphere(0, 3).unwrap().is_connected());
        assert!(circle(5, 2).unwrap().is_connected());
    }
}

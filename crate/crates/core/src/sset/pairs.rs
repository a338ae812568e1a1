//! Products, smash products, the swap map and suspension.

use std::collections::HashMap;

use super::{full_mask, Builder, FinSSet, SMap, Simplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Product,
    Smash,
}

/// A nondegenerate pair `(s_I x, s_J y)` with `I ∩ J = ∅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pair {
    pub left: Simplex,
    pub right: Simplex,
}

/// `X × Y` or `X ∧ Y` together with the bookkeeping that names each
/// nondegenerate simplex as a pair.
///
/// In the smash, vertex 0 is the collapsed wedge and every other simplex is a
/// pair whose components both avoid the basepoint.
#[derive(Clone, Debug)]
pub struct PairComplex {
    kind: PairKind,
    left: FinSSet,
    right: FinSSet,
    sset: FinSSet,
    pairs: Vec<Vec<Option<Pair>>>,
    index: Vec<HashMap<Pair, usize>>,
}

fn reindex(mask: u32, common: u32) -> u32 {
    let mut out = 0;
    let mut shift = 0;
    for j in 0..32 {
        if common >> j & 1 == 1 {
            shift += 1;
        } else if mask >> j & 1 == 1 {
            out |= 1 << (j - shift);
        }
    }
    out
}

fn disjoint_pairs(n: usize) -> impl Iterator<Item = (u32, u32)> {
    let all = 1u32 << n;
    (0..all).flat_map(move |i| (0..all).filter(move |j| i & j == 0).map(move |j| (i, j)))
}

impl PairComplex {
    fn build(kind: PairKind, x: &FinSSet, y: &FinSSet) -> Result<Self> {
        if x.truncation() != y.truncation() {
            return Err(Error::TruncationMismatch {
                left: x.truncation(),
                right: y.truncation(),
            });
        }
        let d = x.truncation();
        let mut pc = PairComplex {
            kind,
            left: x.clone(),
            right: y.clone(),
            sset: super::models::point(0),
            pairs: vec![Vec::new(); d + 1],
            index: vec![HashMap::new(); d + 1],
        };
        let mut b = Builder::new(d);
        if kind == PairKind::Smash {
            b.add_vertex();
            pc.pairs[0].push(None);
        }
        for n in 0..=d {
            for (i, j) in disjoint_pairs(n) {
                let (mx, my) = (n - i.count_ones() as usize, n - j.count_ones() as usize);
                for a in 0..x.count(mx) {
                    if kind == PairKind::Smash && mx == 0 && a == x.basepoint() {
                        continue;
                    }
                    for c in 0..y.count(my) {
                        if kind == PairKind::Smash && my == 0 && c == y.basepoint() {
                            continue;
                        }
                        let p = Pair {
                            left: Simplex { degen: i, id: a },
                            right: Simplex { degen: j, id: c },
                        };
                        let id = if n == 0 {
                            b.add_vertex()
                        } else {
                            let faces: Vec<Simplex> = (0..=n)
                                .map(|k| {
                                    pc.normalize(
                                        n - 1,
                                        x.face_of(n, p.left, k),
                                        y.face_of(n, p.right, k),
                                    )
                                })
                                .collect();
                            b.add(&faces)
                        };
                        debug_assert_eq!(id, pc.pairs[n].len());
                        pc.pairs[n].push(Some(p));
                        pc.index[n].insert(p, id);
                    }
                }
            }
        }
        let base = match kind {
            PairKind::Smash => 0,
            PairKind::Product => pc.index[0][&Pair {
                left: Simplex::nondegenerate(x.basepoint()),
                right: Simplex::nondegenerate(y.basepoint()),
            }],
        };
        pc.sset = b.finish(base)?;
        Ok(pc)
    }

    /// The simplex of this complex at level `n` represented by the pair `(a, b)`.
    ///
    /// Common degeneracies are factored out; in the smash, pairs touching a
    /// basepoint collapse to the base simplex.
    pub fn normalize(&self, n: usize, a: Simplex, b: Simplex) -> Simplex {
        if self.kind == PairKind::Smash && (self.left.is_base(n, a) || self.right.is_base(n, b)) {
            return Simplex {
                degen: full_mask(n),
                id: 0,
            };
        }
        let common = a.degen & b.degen;
        let p = Pair {
            left: Simplex {
                degen: reindex(a.degen, common),
                id: a.id,
            },
            right: Simplex {
                degen: reindex(b.degen, common),
                id: b.id,
            },
        };
        let m = n - common.count_ones() as usize;
        Simplex {
            degen: common,
            id: self.index[m][&p],
        }
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn left(&self) -> &FinSSet {
        &self.left
    }

    pub fn right(&self) -> &FinSSet {
        &self.right
    }

    pub fn sset(&self) -> &FinSSet {
        &self.sset
    }

    /// The pair behind a nondegenerate simplex; `None` for the smash basepoint.
    pub fn pair(&self, n: usize, id: usize) -> Option<Pair> {
        self.pairs[n][id]
    }

    /// The two components of a simplex at level `n`; `None` for the smash basepoint.
    pub fn components(&self, n: usize, s: Simplex) -> Option<(Simplex, Simplex)> {
        let m = s.base_level(n);
        let p = self.pairs[m][s.id]?;
        let sigma = super::surjection(s.degen, n);
        Some((self.left.apply(m, p.left, &sigma), self.right.apply(m, p.right, &sigma)))
    }

    /// Projection `X × Y -> X` (product only).
    pub fn projection_left(&self) -> Result<SMap> {
        self.projection(true)
    }

    /// Projection `X × Y -> Y` (product only).
    pub fn projection_right(&self) -> Result<SMap> {
        self.projection(false)
    }

    fn projection(&self, left: bool) -> Result<SMap> {
        if self.kind != PairKind::Product {
            return Err(Error::InvalidMap("projections exist only for products".into()));
        }
        let images = (0..=self.sset.truncation())
            .map(|n| {
                (0..self.sset.count(n))
                    .map(|id| {
                        let (a, b) = self.components(n, Simplex::nondegenerate(id)).expect("pair");
                        if left {
                            a
                        } else {
                            b
                        }
                    })
                    .collect()
            })
            .collect();
        let target = if left { &self.left } else { &self.right };
        SMap::new(self.sset.clone(), target.clone(), images)
    }
}

pub fn product(x: &FinSSet, y: &FinSSet) -> Result<PairComplex> {
    PairComplex::build(PairKind::Product, x, y)
}

/// `X ∧ Y = X × Y / X ∨ Y`, built directly on the pairs avoiding the basepoint.
pub fn smash(x: &FinSSet, y: &FinSSet) -> Result<PairComplex> {
    PairComplex::build(PairKind::Smash, x, y)
}

/// `ΣX = S¹ ∧ X`.
pub fn suspension(x: &FinSSet) -> Result<PairComplex> {
    let s1 = super::models::sphere(1, x.truncation())?;
    smash(&s1, x)
}

/// The swap `X ∧ Y -> Y ∧ X`, `(s_I x, s_J y) ↦ (s_J y, s_I x)`.
pub fn tau(xy: &PairComplex, yx: &PairComplex) -> Result<SMap> {
    if xy.kind != PairKind::Smash
        || yx.kind != PairKind::Smash
        || xy.left != yx.right
        || xy.right != yx.left
    {
        return Err(Error::InvalidMap("tau needs X ∧ Y and Y ∧ X".into()));
    }
    let images = (0..=xy.sset.truncation())
        .map(|n| {
            xy.pairs[n]
                .iter()
                .map(|p| match p {
                    None => Simplex::nondegenerate(0),
                    Some(p) => Simplex::nondegenerate(
                        yx.index[n][&Pair {
                            left: p.right,
                            right: p.left,
                        }],
                    ),
                })
                .collect()
        })
        .collect();
    SMap::new(xy.sset.clone(), yx.sset.clone(), images)
}

/// `f ∧ g : X ∧ Y -> X' ∧ Y'` (or `f × g` when both complexes are products).
pub fn smash_map(f: &SMap, g: &SMap, src: &PairComplex, dst: &PairComplex) -> Result<SMap> {
    if src.kind != dst.kind
        || f.domain() != &src.left
        || g.domain() != &src.right
        || f.codomain() != &dst.left
        || g.codomain() != &dst.right
    {
        return Err(Error::InvalidMap("maps do not match the pair complexes".into()));
    }
    let images = (0..=src.sset.truncation())
        .map(|n| {
            src.pairs[n]
                .iter()
                .map(|p| match p {
                    None => dst.sset.base_simplex(n),
                    Some(p) => dst.normalize(n, f.image(n, p.left), g.image(n, p.right)),
                })
                .collect()
        })
        .collect();
    SMap::new(src.sset.clone(), dst.sset.clone(), images)
}

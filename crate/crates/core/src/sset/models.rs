//! Standard models: simplices, spheres, circles, surfaces and bar constructions.

use std::collections::HashMap;

use super::{full_mask, Builder, FinSSet, SMap, Simplex};
use crate::abgroup::AbGroup;
use crate::error::{Error, Result};

pub const DEFAULT_TRUNCATION: usize = 7;

fn too_small(what: &str, needed: usize, truncation: usize) -> Error {
    Error::InvalidModel(format!(
        "{what} needs truncation at least {needed}, got {truncation}"
    ))
}

fn nd(id: usize) -> Simplex {
    Simplex::nondegenerate(id)
}

pub fn point(truncation: usize) -> FinSSet {
    let mut b = Builder::new(truncation);
    b.add_vertex();
    b.finish(0).expect("one vertex")
}

/// The standard simplex `Δⁿ`, pointed at vertex 0. Nondegenerate simplices are
/// the nonempty subsets of `{0, .., n}`, listed per level in lexicographic order.
pub fn simplex(n: usize, truncation: usize) -> Result<FinSSet> {
    let mut b = Builder::new(truncation);
    let mut index: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new(); truncation + 1];
    for k in 0..=n.min(truncation) {
        for subset in combinations(n + 1, k + 1) {
            let id = if k == 0 {
                b.add_vertex()
            } else {
                let faces: Vec<Simplex> = (0..=k)
                    .map(|i| {
                        let mut f = subset.clone();
                        f.remove(i);
                        nd(index[k - 1][&f])
                    })
                    .collect();
                b.add(&faces)
            };
            index[k].insert(subset, id);
        }
    }
    b.finish(0)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `Sⁿ = Δⁿ/∂Δⁿ`: one vertex and one nondegenerate `n`-simplex. `S⁰` is two points.
pub fn sphere(n: usize, truncation: usize) -> Result<FinSSet> {
    if n > truncation {
        return Err(too_small(&format!("S^{n}"), n, truncation));
    }
    let mut b = Builder::new(truncation);
    b.add_vertex();
    if n == 0 {
        b.add_vertex();
    } else {
        let face = Simplex {
            degen: full_mask(n - 1),
            id: 0,
        };
        b.add(&vec![face; n + 1]);
    }
    b.finish(0)
}

/// The subdivided circle `C_p`: vertices `v_0..v_{p-1}` and edges `e_i : v_i -> v_{i+1 mod p}`.
pub fn circle(p: usize, truncation: usize) -> Result<FinSSet> {
    if p == 0 {
        return Err(Error::InvalidModel("a subdivided circle needs p >= 1".into()));
    }
    if truncation < 1 {
        return Err(too_small("C_p", 1, truncation));
    }
    let mut b = Builder::new(truncation);
    for _ in 0..p {
        b.add_vertex();
    }
    for i in 0..p {
        b.add(&[nd((i + 1) % p), nd(i)]);
    }
    b.finish(0)
}

/// The map `C_m -> S¹` sending every vertex to the basepoint and every edge to the
/// nondegenerate edge; it has degree `m`.
pub fn degree_collapse(m: usize, truncation: usize) -> Result<SMap> {
    let c = circle(m, truncation)?;
    let s = sphere(1, truncation)?;
    let mut images = vec![vec![nd(0); m], vec![nd(0); m]];
    images.resize(truncation + 1, Vec::new());
    SMap::new(c, s, images)
}

pub fn torus(truncation: usize) -> Result<FinSSet> {
    let s = sphere(1, truncation)?;
    Ok(super::product(&s, &s)?.sset().clone())
}

/// One vertex, edges `a, b, c` and two triangles glued so that `H₁ = Z ⊕ Z/2`.
pub fn klein_bottle(truncation: usize) -> Result<FinSSet> {
    if truncation < 2 {
        return Err(too_small("the Klein bottle", 2, truncation));
    }
    let mut b = Builder::new(truncation);
    b.add_vertex();
    let (a, bb, c) = (b.add(&[nd(0), nd(0)]), b.add(&[nd(0), nd(0)]), b.add(&[nd(0), nd(0)]));
    b.add(&[nd(bb), nd(c), nd(a)]);
    b.add(&[nd(a), nd(bb), nd(c)]);
    b.finish(0)
}

/// Closed orientable surface of genus two: an octagon `a b a⁻¹ b⁻¹ c d c⁻¹ d⁻¹`
/// fanned into six triangles with diagonals `f2..f6`.
pub fn genus2(truncation: usize) -> Result<FinSSet> {
    if truncation < 2 {
        return Err(too_small("the genus-2 surface", 2, truncation));
    }
    let mut b = Builder::new(truncation);
    b.add_vertex();
    let e: Vec<usize> = (0..9).map(|_| b.add(&[nd(0), nd(0)])).collect();
    let (a, bb, c, d) = (e[0], e[1], e[2], e[3]);
    let (f2, f3, f4, f5, f6) = (e[4], e[5], e[6], e[7], e[8]);
    for [d0, d1, d2] in [
        [bb, f2, a],
        [a, f2, f3],
        [bb, f3, f4],
        [c, f5, f4],
        [d, f6, f5],
        [c, f6, d],
    ] {
        b.add(&[nd(d0), nd(d1), nd(d2)]);
    }
    b.finish(0)
}

/// `M(Z/m, 1)`: the mapping cone of the degree-`m` collapse `C_m -> S¹`.
pub fn moore_space(m: usize, truncation: usize) -> Result<FinSSet> {
    if truncation < 2 {
        return Err(too_small("a Moore space", 2, truncation));
    }
    let f = degree_collapse(m, truncation)?;
    Ok(super::mapping_cone(&f)?.sset)
}

/// The bar construction `B(A)` of a finite abelian group.
///
/// Nondegenerate `n`-simplices are tuples `[a_1|..|a_n]` of nonzero elements,
/// indexed in base `|A| - 1` with `a_1` most significant.
#[derive(Clone, Debug)]
pub struct BarModel {
    pub sset: FinSSet,
    /// Element order: index 0 is the identity.
    pub elements: Vec<crate::abgroup::AbElt>,
    add: Vec<usize>,
}

impl BarModel {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    /// Index of the nondegenerate simplex `[a_1|..|a_n]` (all entries nonzero).
    pub fn index_of(&self, tuple: &[usize]) -> usize {
        let base = self.order() - 1;
        tuple.iter().fold(0, |acc, &a| acc * base + (a - 1))
    }

    pub fn tuple_of(&self, n: usize, mut id: usize) -> Vec<usize> {
        let base = self.order() - 1;
        let mut t = vec![0; n];
        for k in (0..n).rev() {
            t[k] = id % base + 1;
            id /= base;
        }
        t
    }
}

pub fn bar_construction(a: &AbGroup, truncation: usize) -> Result<BarModel> {
    let elements = a.elements()?;
    let order = elements.len();
    if order > 64 {
        return Err(Error::InvalidModel(format!("group of order {order} is too large for B(A)")));
    }
    let coords: Vec<Vec<_>> = elements.iter().map(|e| e.normal_coords()).collect();
    let zero = coords
        .iter()
        .position(|c| c.iter().all(num_traits::Zero::is_zero))
        .expect("group has an identity");
    let mut elements = elements;
    let mut coords = coords;
    elements.swap(0, zero);
    coords.swap(0, zero);
    let lookup: HashMap<Vec<_>, usize> = coords.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut add = vec![0; order * order];
    for i in 0..order {
        for j in 0..order {
            let s = (&elements[i] + &elements[j]).normal_coords();
            add[i * order + j] = lookup[&s];
        }
    }
    let base = order - 1;
    let mut b = Builder::new(truncation);
    b.add_vertex();
    let index = |t: &[usize]| t.iter().fold(0usize, |acc, &x| acc * base + (x - 1));
    let reduce = |t: Vec<usize>| -> Simplex {
        let mut mask = 0u32;
        let mut kept = Vec::with_capacity(t.len());
        for (j, &x) in t.iter().enumerate() {
            if x == 0 {
                mask |= 1 << j;
            } else {
                kept.push(x);
            }
        }
        Simplex {
            degen: mask,
            id: index(&kept),
        }
    };
    if order > 1 {
        for n in 1..=truncation {
            let count = base.pow(n as u32);
            let mut t = vec![1usize; n];
            for _ in 0..count {
                let mut faces = Vec::with_capacity(n + 1);
                faces.push(reduce(t[1..].to_vec()));
                for i in 1..n {
                    let mut f = Vec::with_capacity(n - 1);
                    f.extend_from_slice(&t[..i - 1]);
                    f.push(add[t[i - 1] * order + t[i]]);
                    f.extend_from_slice(&t[i + 1..]);
                    faces.push(reduce(f));
                }
                faces.push(reduce(t[..n - 1].to_vec()));
                b.add(&faces);
                // next tuple in base `base`, last entry least significant
                for k in (0..n).rev() {
                    if t[k] < base {
                        t[k] += 1;
                        break;
                    }
                    t[k] = 1;
                }
            }
        }
    }
    Ok(BarModel {
        sset: b.finish(0)?,
        elements,
        add,
    })
}

//! Brute-force check of the universal property of `A ⊗ B` on small finite groups.
//!
//! For each triple `(A, B, C)` the homomorphisms `A ⊗ B -> C` are enumerated from
//! the tensor presentation, and the bilinear maps `A × B -> C` are enumerated
//! independently as homomorphisms `A -> Hom(B, C)`. Precomposition with `t` is
//! injective because every tensor generator is an elementary tensor of generators,
//! so equal counts give a bijection. For small triples the two sets of maps are
//! also compared table by table.

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;

use crate::abgroup::{tensor, AbGroup, TensorProduct};
use crate::error::Result;

/// Triples with at most this many maps are compared table by table.
const TABLE_LIMIT: u64 = 4096;

/// A finite group given by its addition table.
struct Finite {
    size: usize,
    zero: u32,
    add: Vec<u32>,
}

impl Finite {
    fn add(&self, x: u32, y: u32) -> u32 {
        self.add[x as usize * self.size + y as usize]
    }

    fn times(&self, k: u64, x: u32) -> u32 {
        (0..k % self.size as u64).fold(self.zero, |acc, _| self.add(acc, x))
    }
}

/// `Z/n_0 ⊕ .. ⊕ Z/n_{k-1}` on mixed-radix indices, digit 0 least significant.
pub(crate) struct Cyclics {
    orders: Vec<usize>,
    group: Finite,
    /// For each nonzero index, the lowest generator with a nonzero digit.
    lowest: Vec<usize>,
}

impl Cyclics {
    pub(crate) fn new(orders: &[usize]) -> Self {
        let size: usize = orders.iter().product();
        let digits = |mut x: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&n| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect()
        };
        let index = |d: &[usize]| -> usize {
            d.iter()
                .zip(orders)
                .rev()
                .fold(0, |acc, (&x, &n)| acc * n + x)
        };
        let mut add = vec![0u32; size * size];
        for x in 0..size {
            let dx = digits(x);
            for y in 0..size {
                let sum: Vec<usize> = dx
                    .iter()
                    .zip(digits(y))
                    .zip(orders)
                    .map(|((a, b), n)| (a + b) % n)
                    .collect();
                add[x * size + y] = index(&sum) as u32;
            }
        }
        let lowest = (0..size)
            .map(|x| digits(x).iter().position(|&d| d != 0).unwrap_or(0))
            .collect();
        Cyclics {
            orders: orders.to_vec(),
            group: Finite { size, zero: 0, add },
            lowest,
        }
    }

    fn size(&self) -> usize {
        self.group.size
    }

    fn generator(&self, k: usize) -> usize {
        self.orders[..k].iter().product()
    }

    fn digits(&self, mut x: usize) -> Vec<i64> {
        self.orders
            .iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d as i64
            })
            .collect()
    }

    fn abgroup(&self) -> AbGroup {
        let orders: Vec<u64> = self.orders.iter().map(|&n| n as u64).collect();
        AbGroup::from_cyclic_orders(&orders)
    }
}

/// Calls `visit` on the table of every homomorphism `src -> dst`. Each generator
/// image is chosen with `n_k · h_k = 0`, and the resulting function is accepted
/// only if `f(x + e_k) = f(x) + f(e_k)` for every `x` and `k`.
fn for_each_hom(src: &Cyclics, dst: &Finite, visit: &mut dyn FnMut(&[u32])) {
    let k = src.orders.len();
    let candidates: Vec<Vec<u32>> = src
        .orders
        .iter()
        .map(|&n| {
            (0..dst.size as u32)
                .filter(|&h| dst.times(n as u64, h) == dst.zero)
                .collect()
        })
        .collect();
    let gens: Vec<usize> = (0..k).map(|i| src.generator(i)).collect();
    let mut choice = vec![0usize; k];
    let mut images = vec![0u32; k];
    let mut f = vec![dst.zero; src.size()];
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    loop {
        for (i, &c) in choice.iter().enumerate() {
            images[i] = candidates[i][c];
        }
        for x in 1..src.size() {
            let g = src.lowest[x];
            f[x] = dst.add(f[x - gens[g]], images[g]);
        }
        let additive = (0..src.size()).all(|x| {
            (0..k).all(|i| {
                let y = src.group.add(x as u32, gens[i] as u32) as usize;
                f[y] == dst.add(f[x], images[i])
            })
        });
        if additive {
            visit(&f);
        }
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `Hom(B, C)` as a finite group of tables under pointwise addition.
fn hom_group(b: &Cyclics, c: &Cyclics) -> (Finite, Vec<Vec<u32>>) {
    let mut tables = Vec::new();
    for_each_hom(b, &c.group, &mut |t| tables.push(t.to_vec()));
    let index: HashMap<&[u32], u32> = tables
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i as u32))
        .collect();
    let size = tables.len();
    let mut add = vec![0u32; size * size];
    for (i, s) in tables.iter().enumerate() {
        for (j, t) in tables.iter().enumerate() {
            let sum: Vec<u32> = s.iter().zip(t).map(|(&x, &y)| c.group.add(x, y)).collect();
            add[i * size + j] = index[sum.as_slice()];
        }
    }
    let zero = index[vec![0u32; b.size()].as_slice()];
    (Finite { size, zero, add }, tables)
}

/// Enumerates assignments of `C`-values to the tensor generators that kill every
/// relation column; calls `visit` with the generator images.
fn for_each_tensor_hom(t: &AbGroup, c: &Cyclics, visit: &mut dyn FnMut(&[u32])) {
    let g = t.generators();
    let rel = t.relations();
    // relation columns grouped by their last nonzero row
    let mut due: Vec<Vec<Vec<(usize, u64)>>> = vec![Vec::new(); g];
    let size = c.size() as i64;
    for j in 0..rel.cols() {
        let col: Vec<(usize, u64)> = (0..g)
            .filter_map(|i| {
                let k = rel[(i, j)].to_i64().expect("small relations").rem_euclid(size);
                (k != 0).then_some((i, k as u64))
            })
            .collect();
        if let Some(&(last, _)) = col.last() {
            due[last].push(col);
        }
    }
    let mut images = vec![0u32; g];
    fn go(
        k: usize,
        images: &mut Vec<u32>,
        due: &[Vec<Vec<(usize, u64)>>],
        c: &Finite,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if k == images.len() {
            visit(images);
            return;
        }
        for h in 0..c.size as u32 {
            images[k] = h;
            let ok = due[k].iter().all(|col| {
                col.iter()
                    .fold(c.zero, |acc, &(i, m)| c.add(acc, c.times(m, images[i])))
                    == c.zero
            });
            if ok {
                go(k + 1, images, due, c, visit);
            }
        }
    }
    go(0, &mut images, &due, &c.group, visit);
}

/// Outcome for one triple.
#[derive(Clone, Debug)]
pub(crate) struct TripleOutcome {
    pub homs: u64,
    pub bilinear: u64,
    pub tables_compared: bool,
    pub ok: bool,
}

/// Checks that `t` is bilinear on all elements and that each tensor generator is
/// the elementary tensor of the corresponding generators.
pub(crate) fn structure_map_ok(a: &Cyclics, b: &Cyclics) -> Result<bool> {
    let (ga, gb) = (a.abgroup(), b.abgroup());
    let t = tensor(&ga, &gb);
    for i in 0..ga.generators() {
        for j in 0..gb.generators() {
            let e = t.elementary(&ga.generator(i), &gb.generator(j))?;
            if e != t.group.generator(t.pair_index(i, j)) {
                return Ok(false);
            }
        }
    }
    let ea: Vec<_> = (0..a.size())
        .map(|x| ga.elt_i64(&a.digits(x)))
        .collect::<Result<_>>()?;
    let eb: Vec<_> = (0..b.size())
        .map(|y| gb.elt_i64(&b.digits(y)))
        .collect::<Result<_>>()?;
    for x in &ea {
        for x2 in &ea {
            let s = x + x2;
            for y in &eb {
                if t.elementary(&s, y)? != &t.elementary(x, y)? + &t.elementary(x2, y)? {
                    return Ok(false);
                }
            }
        }
    }
    for x in &ea {
        for y in &eb {
            for y2 in &eb {
                let s = y + y2;
                if t.elementary(x, &s)? != &t.elementary(x, y)? + &t.elementary(x, y2)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub(crate) fn check_triple(a: &Cyclics, b: &Cyclics, c: &Cyclics) -> Result<TripleOutcome> {
    let (ga, gb) = (a.abgroup(), b.abgroup());
    let t: TensorProduct = tensor(&ga, &gb);
    let mut homs = 0u64;
    let mut hom_images: Vec<Vec<u32>> = Vec::new();
    for_each_tensor_hom(&t.group, c, &mut |im| {
        homs += 1;
        if homs <= TABLE_LIMIT {
            hom_images.push(im.to_vec());
        }
    });
    let (l, l_tables) = hom_group(b, c);
    let mut bilinear = 0u64;
    let mut curried: Vec<Vec<u32>> = Vec::new();
    for_each_hom(a, &l, &mut |f| {
        bilinear += 1;
        if bilinear <= TABLE_LIMIT {
            curried.push(f.to_vec());
        }
    });
    let mut ok = homs == bilinear;
    let tables_compared = ok && homs <= TABLE_LIMIT;
    if tables_compared {
        // phi ∘ t as a table over A × B
        let mut elementary = Vec::with_capacity(a.size() * b.size());
        for x in 0..a.size() {
            let ex = ga.elt_i64(&a.digits(x))?;
            for y in 0..b.size() {
                let ey = gb.elt_i64(&b.digits(y))?;
                let coords: Vec<u64> = t
                    .elementary(&ex, &ey)?
                    .coords()
                    .iter()
                    .map(|k| k.to_i64().expect("small").rem_euclid(c.size() as i64) as u64)
                    .collect();
                elementary.push(coords);
            }
        }
        let from_homs: HashSet<Vec<u32>> = hom_images
            .iter()
            .map(|im| {
                elementary
                    .iter()
                    .map(|coords| {
                        coords.iter().zip(im).fold(c.group.zero, |acc, (&k, &h)| {
                            c.group.add(acc, c.group.times(k, h))
                        })
                    })
                    .collect()
            })
            .collect();
        let from_bilinear: HashSet<Vec<u32>> = curried
            .iter()
            .map(|f| {
                (0..a.size())
                    .flat_map(|x| l_tables[f[x] as usize].iter().copied())
                    .collect()
            })
            .collect();
        ok = from_homs.len() as u64 == homs && from_homs == from_bilinear;
    }
    Ok(TripleOutcome {
        homs,
        bilinear,
        tables_compared,
        ok,
    })
}

/// Cyclic decompositions of every abelian group of order at most 8.
pub(crate) fn groups_up_to_8() -> Vec<Vec<usize>> {
    vec![
        vec![],
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
    ]
}

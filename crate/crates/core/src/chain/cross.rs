use num_traits::Zero;

use super::{ChainComplexZ, Homology};
use crate::abgroup::{tensor, AbGroup, AbHom, TensorProduct};
use crate::error::{Error, Result};
use crate::intlin::{Int, IntMatrix};
use crate::sset::{self, FinSSet, PairComplex, Simplex};

/// A `(p, q)`-shuffle: `mu` (size `p`) degenerates the right factor, `nu`
/// (size `q`) the left one, and `sign` is the sign of the permutation `(mu, nu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub mu: u32,
    pub nu: u32,
    pub sign: i64,
}

pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    for mu in 0u32..(1 << n) {
        if mu.count_ones() as usize != p {
            continue;
        }
        let nu = !mu & ((1u64 << n) - 1) as u32;
        let inversions: usize = (0..n)
            .filter(|&j| mu >> j & 1 == 1)
            .enumerate()
            .map(|(k, j)| j - k)
            .sum();
        out.push(Shuffle {
            mu,
            nu,
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        });
    }
    out
}

/// The Eilenberg–Zilber shuffle map on basis elements,
/// `x ⊗ y ↦ Σ sign(μ, ν) (s_ν x, s_μ y)`, as nondegenerate simplices of the pair
/// complex with signs. Terms that are degenerate or collapse to the basepoint vanish.
pub fn ez_chain(pc: &PairComplex, p: usize, x: usize, q: usize, y: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for s in shuffles(p, q) {
        let t = pc.normalize(
            p + q,
            Simplex { degen: s.nu, id: x },
            Simplex { degen: s.mu, id: y },
        );
        if !t.is_degenerate() {
            out.push((t.id, s.sign));
        }
    }
    out
}

/// The cross product `H̃_p(X; Z) ⊗ H̃_q(Y; A) -> H̃_{p+q}(X ∧ Y; A)`.
#[derive(Clone, Debug)]
pub struct CrossProduct {
    pub smash: PairComplex,
    pub left: Homology,
    pub right: Homology,
    pub target: Homology,
    pub tensor: TensorProduct,
    pub map: AbHom,
}

/// Shuffle product of a `Z`-chain on `X` and an `A`-chain on `Y`, in the
/// coordinates of `C_{p+q}(X ∧ Y) ⊗ A`.
fn cross_chain(
    pc: &PairComplex,
    target: &ChainComplexZ,
    g: usize,
    (p, left, lc): (usize, &[Int], &ChainComplexZ),
    (q, right, rc): (usize, &[Int], &ChainComplexZ),
) -> Vec<Int> {
    let mut out = vec![Int::zero(); target.rank(p + q) * g];
    let left_terms: Vec<(usize, &Int)> = (0..pc.left().count(p))
        .filter_map(|id| lc.position(p, id).map(|pos| (id, &left[pos])))
        .filter(|(_, k)| !k.is_zero())
        .collect();
    for y in 0..pc.right().count(q) {
        let Some(pos) = rc.position(q, y) else {
            continue;
        };
        let coeffs = &right[pos * g..(pos + 1) * g];
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        for &(x, kx) in &left_terms {
            for (t, sign) in ez_chain(pc, p, x, q, y) {
                let Some(tp) = target.position(p + q, t) else {
                    continue;
                };
                for (c, ky) in coeffs.iter().enumerate() {
                    if !ky.is_zero() {
                        out[tp * g + c] += kx * ky * Int::from(sign);
                    }
                }
            }
        }
    }
    out
}

pub fn cross_product(x: &FinSSet, y: &FinSSet, p: usize, q: usize, a: &AbGroup) -> Result<CrossProduct> {
    let pc = sset::smash(x, y)?;
    pc.sset().require_level(p + q + 1, p + q)?;
    let left = Homology::compute(x, &AbGroup::integers(), p, true)?;
    let right = Homology::compute(y, a, q, true)?;
    let target = Homology::compute(pc.sset(), a, p + q, true)?;
    let t = tensor(left.group(), right.group());
    let g = a.generators();
    let mut cols = Vec::with_capacity(t.group.generators());
    for i in 0..left.group().generators() {
        let zi = left.representative(i);
        for j in 0..right.group().generators() {
            let wj = right.representative(j);
            let chain = cross_chain(
                &pc,
                target.complex(),
                g,
                (p, &zi, left.complex()),
                (q, &wj, right.complex()),
            );
            cols.push(target.class_of(&chain)?.coords().to_vec());
        }
    }
    let map = AbHom::new(
        t.group.clone(),
        target.group().clone(),
        IntMatrix::from_columns(target.group().generators(), &cols),
    )?;
    Ok(CrossProduct {
        smash: pc,
        left,
        right,
        target,
        tensor: t,
        map,
    })
}

/// `H̃_n(X; A) -> H̃_{n+1}(ΣX; A)`, the cross product with the fundamental class
/// of `S¹` (its nondegenerate edge).
#[derive(Clone, Debug)]
pub struct SuspensionIso {
    pub suspension: PairComplex,
    pub source: Homology,
    pub target: Homology,
    pub map: AbHom,
}

/// The suspension map between precomputed homologies of `X` and `ΣX = S¹ ∧ X`.
pub fn suspension_map(sx: &PairComplex, source: &Homology, target: &Homology) -> Result<AbHom> {
    if sx.left().count(1) != 1 || sx.left().count(0) != 1 || sx.left().dimension() != 1 {
        return Err(Error::InvalidModel("the left factor must be the minimal circle".into()));
    }
    let n = source.degree();
    if target.degree() != n + 1 || source.coefficients() != target.coefficients() {
        return Err(Error::MismatchedGroups);
    }
    let g = source.coefficients().generators();
    let circle = ChainComplexZ::reduced(sx.left());
    let sigma = [Int::from(1)];
    let mut cols = Vec::with_capacity(source.group().generators());
    for j in 0..source.group().generators() {
        let w = source.representative(j);
        let chain = cross_chain(
            sx,
            target.complex(),
            g,
            (1, &sigma, &circle),
            (n, &w, source.complex()),
        );
        cols.push(target.class_of(&chain)?.coords().to_vec());
    }
    AbHom::new(
        source.group().clone(),
        target.group().clone(),
        IntMatrix::from_columns(target.group().generators(), &cols),
    )
}

pub fn suspension_iso(x: &FinSSet, a: &AbGroup, n: usize) -> Result<SuspensionIso> {
    let sx = sset::suspension(x)?;
    sx.sset().require_level(n + 2, n + 1)?;
    let source = Homology::compute(x, a, n, true)?;
    let target = Homology::compute(sx.sset(), a, n + 1, true)?;
    let map = suspension_map(&sx, &source, &target)?;
    Ok(SuspensionIso {
        suspension: sx,
        source,
        target,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{moore_space, point, product, sphere, torus};

    #[test]
    fn shuffle_signs() {
        let s = shuffles(1, 1);
        assert_eq!(s.len(), 2);
        assert!(s.contains(&Shuffle { mu: 0b01, nu: 0b10, sign: 1 }));
        assert!(s.contains(&Shuffle { mu: 0b10, nu: 0b01, sign: -1 }));
        assert_eq!(shuffles(2, 2).len(), 6);
        assert_eq!(shuffles(2, 2).iter().map(|s| s.sign).sum::<i64>(), 2);
    }

    #[test]
    fn circle_cross_circle() {
        let s1 = sphere(1, 3).unwrap();
        let cp = cross_product(&s1, &s1, 1, 1, &AbGroup::integers()).unwrap();
        assert!(cp.map.is_iso().unwrap());
        assert_eq!(cp.target.group().to_string(), "Z");
    }

    #[test]
    fn moore_cross_moore() {
        let m4 = moore_space(4, 3).unwrap();
        let m6 = moore_space(6, 3).unwrap();
        let cp = cross_product(&m4, &m6, 1, 1, &AbGroup::integers()).unwrap();
        assert_eq!(cp.tensor.group.to_string(), "Z/2");
        assert_eq!(cp.target.group().to_string(), "Z/2");
        assert!(cp.map.is_iso().unwrap());
    }

    #[test]
    fn suspension_isos() {
        let a = AbGroup::integers();
        let s = suspension_iso(&sphere(1, 3).unwrap(), &a, 1).unwrap();
        assert!(s.map.is_iso().unwrap());
        assert_eq!(s.target.group().to_string(), "Z");
        let p = suspension_iso(&point(3), &a, 1).unwrap();
        assert!(p.map.is_iso().unwrap() && p.target.group().is_trivial());
        let m = suspension_iso(&moore_space(2, 3).unwrap(), &a, 1).unwrap();
        assert_eq!(m.target.group().to_string(), "Z/2");
        assert!(m.map.is_iso().unwrap());
    }

    #[test]
    fn shuffle_map_is_a_chain_map() {
        let s1 = sphere(1, 3).unwrap();
        let t = torus(3).unwrap();
        let pc = product(&t, &s1).unwrap();
        let cx = ChainComplexZ::normalized(&t);
        let cy = ChainComplexZ::normalized(&s1);
        let cxy = ChainComplexZ::normalized(pc.sset());
        for p in 0..=2 {
            for q in 0..=1 {
                if p + q > 3 {
                    continue;
                }
                for x in 0..t.count(p) {
                    for y in 0..s1.count(q) {
                        assert!(leibniz_holds(&pc, &cx, &cy, &cxy, p, x, q, y));
                    }
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn leibniz_holds(
        pc: &PairComplex,
        cx: &ChainComplexZ,
        cy: &ChainComplexZ,
        cxy: &ChainComplexZ,
        p: usize,
        x: usize,
        q: usize,
        y: usize,
    ) -> bool {
        let n = p + q;
        if n == 0 {
            return true;
        }
        let mut ez = vec![Int::zero(); cxy.rank(n)];
        for (t, s) in ez_chain(pc, p, x, q, y) {
            ez[t] += s;
        }
        let lhs = cxy.boundary(n).mul_vec(&ez);
        let mut rhs = vec![Int::zero(); cxy.rank(n - 1)];
        if p > 0 {
            for (xf, k) in cx.boundary(p).column(x).iter().enumerate() {
                for (t, s) in ez_chain(pc, p - 1, xf, q, y) {
                    rhs[t] += k * Int::from(s);
                }
            }
        }
        if q > 0 {
            let sign = if p.is_multiple_of(2) { 1 } else { -1 };
            for (yf, k) in cy.boundary(q).column(y).iter().enumerate() {
                for (t, s) in ez_chain(pc, p, x, q - 1, yf) {
                    rhs[t] += k * Int::from(s * sign);
                }
            }
        }
        lhs == rhs
    }
}

//! Quotients, wedges, pushouts, reduced cones and mapping cones.

use std::collections::HashMap;

use super::{Builder, FinSSet, SMap, Simplex};
use crate::error::{Error, Result};

/// `X / S` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub sset: FinSSet,
    pub projection: SMap,
}

/// Collapses the subcomplex `sub` (nondegenerate ids per level) to a new basepoint,
/// which becomes vertex 0; the remaining simplices keep their relative order.
pub fn quotient(x: &FinSSet, sub: &[Vec<usize>]) -> Result<Quotient> {
    let d = x.truncation();
    let mut member: Vec<Vec<bool>> = (0..=d).map(|n| vec![false; x.count(n)]).collect();
    for (n, ids) in sub.iter().enumerate() {
        if n > d {
            return Err(Error::NotSubcomplex(format!("level {n} is above the truncation")));
        }
        for &id in ids {
            if id >= x.count(n) {
                return Err(Error::NotSubcomplex(format!("no simplex {id} at level {n}")));
            }
            member[n][id] = true;
        }
    }
    if !member[0][x.basepoint()] {
        return Err(Error::NotSubcomplex("the subcomplex must contain the basepoint".into()));
    }
    for n in 1..=d {
        for id in (0..x.count(n)).filter(|&id| member[n][id]) {
            for (i, f) in x.faces_of(n, id).iter().enumerate() {
                if !member[f.base_level(n - 1)][f.id] {
                    return Err(Error::NotSubcomplex(format!(
                        "face d{i} of simplex {id} at level {n} is missing"
                    )));
                }
            }
        }
    }
    let mut new_id: Vec<Vec<Option<usize>>> = Vec::with_capacity(d + 1);
    for (n, inside) in member.iter().enumerate() {
        let mut next = usize::from(n == 0);
        new_id.push(
            inside
                .iter()
                .map(|&m| {
                    (!m).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect(),
        );
    }
    let map = |n: usize, s: Simplex| -> Simplex {
        let m = s.base_level(n);
        match new_id[m][s.id] {
            Some(id) => Simplex { degen: s.degen, id },
            None => Simplex {
                degen: super::full_mask(n),
                id: 0,
            },
        }
    };
    let mut b = Builder::new(d);
    b.add_vertex();
    for (n, inside) in member.iter().enumerate() {
        for id in (0..x.count(n)).filter(|&id| !inside[id]) {
            if n == 0 {
                b.add_vertex();
            } else {
                let faces: Vec<Simplex> = x.faces_of(n, id).iter().map(|&f| map(n - 1, f)).collect();
                b.add(&faces);
            }
        }
    }
    let q = b.finish(0)?;
    let images = (0..=d)
        .map(|n| (0..x.count(n)).map(|id| map(n, Simplex::nondegenerate(id))).collect())
        .collect();
    let projection = SMap::new(x.clone(), q.clone(), images)?;
    Ok(Quotient { sset: q, projection })
}

/// The pushout of `X <-f- A -g-> Y` with the maps from `X` and `Y`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub sset: FinSSet,
    pub from_x: SMap,
    pub from_y: SMap,
}

/// Pushout of `X <-f- A -g-> Y` where `f` is injective on simplices.
///
/// The result lists the simplices of `Y` first (same ids) followed by the
/// simplices of `X` outside the image of `f`. If only `g` is injective the roles
/// are swapped; if neither is, [`Error::NotCofibration`] is returned.
pub fn pushout(f: &SMap, g: &SMap) -> Result<Pushout> {
    if f.domain() != g.domain() {
        return Err(Error::InvalidMap("pushout legs must share a domain".into()));
    }
    if !f.is_injective() {
        if g.is_injective() {
            let p = pushout(g, f)?;
            return Ok(Pushout {
                sset: p.sset,
                from_x: p.from_y,
                from_y: p.from_x,
            });
        }
        return Err(Error::NotCofibration);
    }
    let (a, x, y) = (f.domain(), f.codomain(), g.codomain());
    if x.truncation() != y.truncation() {
        return Err(Error::TruncationMismatch {
            left: x.truncation(),
            right: y.truncation(),
        });
    }
    let d = x.truncation();
    let preimage: Vec<HashMap<usize, usize>> = (0..=d)
        .map(|n| (0..a.count(n)).map(|k| (f.images()[n][k].id, k)).collect())
        .collect();
    let mut new_id: Vec<Vec<Option<usize>>> = Vec::with_capacity(d + 1);
    for (n, pre) in preimage.iter().enumerate() {
        let mut next = y.count(n);
        new_id.push(
            (0..x.count(n))
                .map(|id| {
                    (!pre.contains_key(&id)).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect(),
        );
    }
    let map_x = |n: usize, s: Simplex| -> Simplex {
        let m = s.base_level(n);
        match new_id[m][s.id] {
            Some(id) => Simplex { degen: s.degen, id },
            None => {
                let src = preimage[m][&s.id];
                y.degenerate(m, g.images()[m][src], s.degen, n)
            }
        }
    };
    let mut b = Builder::new(d);
    for (n, pre) in preimage.iter().enumerate() {
        for id in 0..y.count(n) {
            if n == 0 {
                b.add_vertex();
            } else {
                b.add(y.faces_of(n, id));
            }
        }
        for id in (0..x.count(n)).filter(|id| !pre.contains_key(id)) {
            if n == 0 {
                b.add_vertex();
            } else {
                let faces: Vec<Simplex> = x.faces_of(n, id).iter().map(|&s| map_x(n - 1, s)).collect();
                b.add(&faces);
            }
        }
    }
    let p = b.finish(y.basepoint())?;
    let from_x = SMap::new(
        x.clone(),
        p.clone(),
        (0..=d)
            .map(|n| (0..x.count(n)).map(|id| map_x(n, Simplex::nondegenerate(id))).collect())
            .collect(),
    )?;
    let from_y = SMap::new(
        y.clone(),
        p.clone(),
        (0..=d)
            .map(|n| (0..y.count(n)).map(Simplex::nondegenerate).collect())
            .collect(),
    )?;
    Ok(Pushout { sset: p, from_x, from_y })
}

/// `X ∨ Y` with its two inclusions. Simplices of `X` come first.
#[derive(Clone, Debug)]
pub struct Wedge {
    pub sset: FinSSet,
    pub in_left: SMap,
    pub in_right: SMap,
}

pub fn wedge(x: &FinSSet, y: &FinSSet) -> Result<Wedge> {
    if x.truncation() != y.truncation() {
        return Err(Error::TruncationMismatch {
            left: x.truncation(),
            right: y.truncation(),
        });
    }
    let pt = super::models::point(x.truncation());
    let to = |z: &FinSSet| {
        let mut images = vec![vec![Simplex::nondegenerate(z.basepoint())]];
        images.resize(z.truncation() + 1, Vec::new());
        SMap::new(pt.clone(), z.clone(), images)
    };
    let p = pushout(&to(y)?, &to(x)?)?;
    Ok(Wedge {
        sset: p.sset,
        in_left: p.from_y,
        in_right: p.from_x,
    })
}

/// The reduced cone `C'A = A ⋆ c / (* ⋆ c)` with the inclusion of `A`.
///
/// Level `n` lists the simplices of `A` followed by the cones `c(x)` on the
/// nondegenerate `(n-1)`-simplices `x` other than the basepoint. The cone point
/// is the last vertex of each `c(x)` and is identified with the basepoint.
pub fn reduced_cone(a: &FinSSet) -> Result<(FinSSet, SMap)> {
    let d = a.truncation();
    let base = a.basepoint();
    let cone_id = |m: usize, z: usize| -> Option<usize> {
        if m == 0 {
            match z.cmp(&base) {
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Less => Some(a.count(1) + z),
                std::cmp::Ordering::Greater => Some(a.count(1) + z - 1),
            }
        } else {
            Some(a.count(m + 1) + z)
        }
    };
    let mut b = Builder::new(d);
    for _ in 0..a.count(0) {
        b.add_vertex();
    }
    for n in 1..=d {
        for x in 0..a.count(n) {
            b.add(a.faces_of(n, x));
        }
        for x in 0..a.count(n - 1) {
            if n == 1 && x == base {
                continue;
            }
            let mut faces = Vec::with_capacity(n + 1);
            for i in 0..n {
                if n == 1 {
                    faces.push(Simplex::nondegenerate(base));
                    continue;
                }
                let f = a.face(n - 1, x, i);
                let m = f.base_level(n - 2);
                faces.push(match cone_id(m, f.id) {
                    Some(id) => Simplex { degen: f.degen, id },
                    None => Simplex {
                        degen: super::full_mask(n - 1),
                        id: base,
                    },
                });
            }
            faces.push(Simplex::nondegenerate(x));
            b.add(&faces);
        }
    }
    let cone = b.finish(base)?;
    let incl = SMap::new(
        a.clone(),
        cone.clone(),
        (0..=d)
            .map(|n| (0..a.count(n)).map(Simplex::nondegenerate).collect())
            .collect(),
    )?;
    Ok((cone, incl))
}

/// `Cf = X ∪_f C'A` for `f : A -> X`; `from_x` includes `X`.
pub fn mapping_cone(f: &SMap) -> Result<Pushout> {
    let (_, incl) = reduced_cone(f.domain())?;
    pushout(&incl, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{circle, simplex, sphere};

    #[test]
    fn boundary_quotient_is_a_sphere() {
        let d2 = simplex(2, 3).unwrap();
        let q = quotient(&d2, &[vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(q.sset.counts(), sphere(2, 3).unwrap().counts());
        q.sset.verify_identities().unwrap();
    }

    #[test]
    fn quotient_requires_subcomplex() {
        let d2 = simplex(2, 3).unwrap();
        assert!(matches!(quotient(&d2, &[vec![0], vec![0]]), Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn wedge_and_cone_census() {
        let s1 = sphere(1, 3).unwrap();
        let w = wedge(&s1, &s1).unwrap();
        assert_eq!(w.sset.counts(), &[1, 2, 0, 0]);
        let c = circle(3, 3).unwrap();
        let (cone, _) = reduced_cone(&c).unwrap();
        assert_eq!(cone.counts(), &[3, 5, 3, 0]);
        cone.verify_identities().unwrap();
        let id = SMap::identity(&s1);
        let p = pushout(&id, &id).unwrap();
        assert_eq!(p.sset, s1);
    }
}

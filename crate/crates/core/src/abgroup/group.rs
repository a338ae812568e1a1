use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intlin::{row_smith, Int, IntMatrix, RowSmith};

/// A finitely generated abelian group `Z^generators / im(relations)`.
///
/// The Smith decomposition of the relation matrix is computed once at
/// construction; clones share it.
#[derive(Clone)]
pub struct AbGroup(Arc<Presentation>);

struct Presentation {
    generators: usize,
    relations: IntMatrix,
    smith: RowSmith,
    canonical: CanonicalForm,
}

/// `Z^rank + Z/d1 + ... + Z/dk` with `1 < d1 | d2 | ... | dk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub rank: usize,
    pub torsion: Vec<Int>,
}

impl CanonicalForm {
    pub fn trivial() -> Self {
        CanonicalForm {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<Int> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Num {
            Small(u64),
            Big(String),
        }
        let torsion: Vec<Num> = self
            .torsion
            .iter()
            .map(|d| d.to_u64().map_or_else(|| Num::Big(d.to_string()), Num::Small))
            .collect();
        let mut st = s.serialize_struct("CanonicalForm", 3)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

impl AbGroup {
    /// `relations` must have one row per generator.
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch {
                expected: generators,
                found: relations.rows(),
            });
        }
        let smith = row_smith(&relations);
        let torsion = smith
            .divisors()
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
        let canonical = CanonicalForm {
            rank: generators - smith.rank(),
            torsion,
        };
        Ok(AbGroup(Arc::new(Presentation {
            generators,
            relations,
            smith,
            canonical,
        })))
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, IntMatrix::zeros(rank, 0)).expect("shape is consistent")
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// `Z/m`, with `m = 0` meaning `Z`.
    pub fn cyclic(m: u64) -> Self {
        if m == 0 {
            return Self::integers();
        }
        Self::new(1, IntMatrix::from_vec(1, 1, vec![Int::from(m)])).expect("1x1")
    }

    /// The group `Z^rank + sum Z/d_i` presented on `rank + torsion.len()` generators,
    /// torsion generators first.
    pub fn from_canonical(form: &CanonicalForm) -> Self {
        let k = form.torsion.len();
        let n = k + form.rank;
        let mut rel = IntMatrix::zeros(n, k);
        for (i, d) in form.torsion.iter().enumerate() {
            rel[(i, i)] = d.clone();
        }
        Self::new(n, rel).expect("shape is consistent")
    }

    /// Direct sum of cyclic groups; `0` entries contribute a copy of `Z`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        orders
            .iter()
            .fold(Self::trivial(), |acc, &m| acc.direct_sum(&Self::cyclic(m)))
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        let rel = self.relations().block_diag(other.relations());
        Self::new(self.generators() + other.generators(), rel).expect("block shape")
    }

    pub fn generators(&self) -> usize {
        self.0.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.0.relations
    }

    pub fn smith(&self) -> &RowSmith {
        &self.0.smith
    }

    pub fn canonical_form(&self) -> &CanonicalForm {
        &self.0.canonical
    }

    pub fn free_rank(&self) -> usize {
        self.0.canonical.rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.0.canonical.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.0.canonical.is_trivial()
    }

    pub fn is_finite(&self) -> bool {
        self.0.canonical.rank == 0
    }

    pub fn order(&self) -> Option<Int> {
        self.0.canonical.order()
    }

    /// Canonical forms are a complete invariant for finitely generated abelian groups.
    pub fn is_isomorphic(&self, other: &AbGroup) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Same presentation (not merely isomorphic).
    pub fn same_presentation(&self, other: &AbGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.generators() == other.generators() && self.relations() == other.relations())
    }

    /// Whether `v` lies in the relation lattice, i.e. represents zero.
    pub fn represents_zero(&self, v: &[Int]) -> bool {
        assert_eq!(v.len(), self.generators(), "coordinate length");
        self.smith().contains(v)
    }

    pub fn elt(&self, coords: Vec<Int>) -> Result<AbElt> {
        if coords.len() != self.generators() {
            return Err(Error::DimensionMismatch {
                expected: self.generators(),
                found: coords.len(),
            });
        }
        Ok(AbElt {
            group: self.clone(),
            coords,
        })
    }

    pub fn elt_i64(&self, coords: &[i64]) -> Result<AbElt> {
        self.elt(coords.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zero(&self) -> AbElt {
        AbElt {
            group: self.clone(),
            coords: vec![Int::zero(); self.generators()],
        }
    }

    pub fn generator(&self, i: usize) -> AbElt {
        let mut e = self.zero();
        e.coords[i] = Int::one();
        e
    }

    /// Normal form of a coordinate vector: torsion coordinates reduced into
    /// `[0, d_i)`, followed by the free coordinates. Two vectors name the same
    /// element iff their normal forms agree.
    pub fn normal_coords(&self, v: &[Int]) -> Vec<Int> {
        let s = self.smith();
        let w = s.u.mul_vec(v);
        let mut out = Vec::with_capacity(self.0.canonical.torsion.len() + self.free_rank());
        for (i, wi) in w.iter().enumerate() {
            if let Some(d) = s.divisors().get(i) {
                if !d.is_one() {
                    out.push(wi.mod_floor(d));
                }
            } else {
                out.push(wi.clone());
            }
        }
        out
    }

    /// Inverse of [`normal_coords`](Self::normal_coords).
    pub fn from_normal_coords(&self, c: &[Int]) -> AbElt {
        let s = self.smith();
        let mut w = vec![Int::zero(); self.generators()];
        let mut k = 0;
        for (i, wi) in w.iter_mut().enumerate() {
            if s.divisors().get(i).is_some_and(|d| d.is_one()) {
                continue;
            }
            *wi = c[k].clone();
            k += 1;
        }
        AbElt {
            group: self.clone(),
            coords: s.u_inv.mul_vec(&w),
        }
    }

    /// All elements of a finite group, one representative per class, in
    /// lexicographic order of normal coordinates.
    pub fn elements(&self) -> Result<Vec<AbElt>> {
        if !self.is_finite() {
            return Err(Error::NotFinite(self.to_string()));
        }
        let orders: Vec<u64> = self
            .torsion()
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| Error::NotFinite("order too large".into())))
            .collect::<Result<_>>()?;
        let total: u64 = orders.iter().product();
        let mut out = Vec::with_capacity(total as usize);
        let mut digits = vec![0u64; orders.len()];
        for _ in 0..total {
            let c: Vec<Int> = digits.iter().map(|&x| Int::from(x)).collect();
            out.push(self.from_normal_coords(&c));
            for k in (0..digits.len()).rev() {
                digits[k] += 1;
                if digits[k] < orders[k] {
                    break;
                }
                digits[k] = 0;
            }
        }
        Ok(out)
    }
}

impl PartialEq for AbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_presentation(other)
    }
}

impl Eq for AbGroup {}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical_form().fmt(f)
    }
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AbGroup({} gens, {} relations; {})",
            self.generators(),
            self.relations().cols(),
            self.canonical_form()
        )
    }
}

/// An element of an [`AbGroup`], given by coordinates over its generators.
#[derive(Clone)]
pub struct AbElt {
    group: AbGroup,
    coords: Vec<Int>,
}

impl AbElt {
    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.group.represents_zero(&self.coords)
    }

    pub fn scale(&self, k: &Int) -> AbElt {
        AbElt {
            group: self.group.clone(),
            coords: self.coords.iter().map(|x| x * k).collect(),
        }
    }

    pub fn try_add(&self, other: &AbElt) -> Result<AbElt> {
        if self.group != other.group {
            return Err(Error::MismatchedGroups);
        }
        Ok(AbElt {
            group: self.group.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn normal_coords(&self) -> Vec<Int> {
        self.group.normal_coords(&self.coords)
    }

    /// Additive order; `None` for elements of infinite order.
    pub fn order(&self) -> Option<Int> {
        let c = self.normal_coords();
        let k = self.group.torsion().len();
        if c[k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut ord = Int::one();
        for (x, d) in c.iter().zip(self.group.torsion()) {
            let g = x.gcd(d);
            ord = ord.lcm(&(d / g));
        }
        Some(ord)
    }
}

impl PartialEq for AbElt {
    /// Equal iff the groups agree and the difference lies in the relation lattice.
    fn eq(&self, other: &Self) -> bool {
        if self.group != other.group {
            return false;
        }
        let diff: Vec<Int> = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        self.group.represents_zero(&diff)
    }
}

impl Eq for AbElt {}

impl fmt::Debug for AbElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "AbElt[{}] in {}", c.join(", "), self.group)
    }
}

impl Add for &AbElt {
    type Output = AbElt;
    fn add(self, rhs: &AbElt) -> AbElt {
        self.try_add(rhs).expect("elements of different groups")
    }
}

impl Neg for &AbElt {
    type Output = AbElt;
    fn neg(self) -> AbElt {
        AbElt {
            group: self.group.clone(),
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl Sub for &AbElt {
    type Output = AbElt;
    fn sub(self, rhs: &AbElt) -> AbElt {
        self + &(-rhs)
    }
}

/// Number of solutions of `d x = 0` in the finite group `g`, i.e. `|g[d]|`.
pub fn torsion_count(g: &AbGroup, d: &Int) -> Option<Int> {
    if !g.is_finite() {
        return None;
    }
    Some(g.torsion().iter().map(|t| t.gcd(d)).product())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::int_vec;

    #[test]
    fn canonical_examples() {
        let g = AbGroup::new(2, IntMatrix::from_rows(&[[2, 0], [0, 3]])).unwrap();
        assert_eq!(g.canonical_form().rank, 0);
        assert_eq!(g.torsion(), &int_vec(&[6])[..]);
        assert_eq!(g.to_string(), "Z/6");
        assert_eq!(AbGroup::free(3).to_string(), "Z^3");
        assert_eq!(AbGroup::free(1).to_string(), "Z");
        let t = AbGroup::new(2, IntMatrix::identity(2)).unwrap();
        assert!(t.is_trivial());
        assert_eq!(t.to_string(), "0");
        let mixed = AbGroup::from_cyclic_orders(&[0, 2, 4, 0]);
        assert_eq!(mixed.to_string(), "Z^2 + Z/2 + Z/4");
    }

    #[test]
    fn canonicalizing_is_idempotent() {
        let g = AbGroup::new(3, IntMatrix::from_rows(&[[4, 6], [6, 10], [0, 0]])).unwrap();
        let h = AbGroup::from_canonical(g.canonical_form());
        assert_eq!(h.canonical_form(), g.canonical_form());
        let k = AbGroup::from_canonical(h.canonical_form());
        assert_eq!(k.relations(), h.relations());
    }

    #[test]
    fn z2_plus_z3_element_orders() {
        // oracle: the element-order census of Z/2 + Z/3 is {1:1, 2:1, 3:2, 6:2}, that of Z/6
        let g = AbGroup::from_cyclic_orders(&[2, 3]);
        let mut census = std::collections::BTreeMap::new();
        for a in 0..2i64 {
            for b in 0..3i64 {
                let e = g.elt_i64(&[a, b]).unwrap();
                *census.entry(e.order().unwrap()).or_insert(0) += 1;
            }
        }
        let expect: std::collections::BTreeMap<Int, i32> =
            [(1, 1), (2, 1), (3, 2), (6, 2)].into_iter().map(|(k, v)| (Int::from(k), v)).collect();
        assert_eq!(census, expect);
        assert!(g.is_isomorphic(&AbGroup::cyclic(6)));
        assert!(!AbGroup::integers().is_isomorphic(&AbGroup::cyclic(2)));
    }

    #[test]
    fn element_equality_mod_relations() {
        let g = AbGroup::cyclic(4);
        assert_eq!(g.elt_i64(&[1]).unwrap(), g.elt_i64(&[5]).unwrap());
        assert_ne!(g.elt_i64(&[1]).unwrap(), g.elt_i64(&[3]).unwrap());
        assert!(g.elt_i64(&[-8]).unwrap().is_zero());
        assert!(g.elt(vec![]).is_err());
    }

    #[test]
    fn enumerates_finite_groups() {
        let g = AbGroup::new(2, IntMatrix::from_rows(&[[2, 2], [0, 4]])).unwrap();
        let els = g.elements().unwrap();
        assert_eq!(Int::from(els.len()), g.order().unwrap());
        for (i, a) in els.iter().enumerate() {
            for b in &els[i + 1..] {
                assert_ne!(a, b);
            }
        }
        assert!(AbGroup::integers().elements().is_err());
    }
}

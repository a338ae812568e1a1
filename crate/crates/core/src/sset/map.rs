use super::{FinSSet, Simplex};
use crate::error::{Error, Result};

/// A basepoint-preserving simplicial map, stored as the image of every
/// nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMap {
    domain: FinSSet,
    codomain: FinSSet,
    images: Vec<Vec<Simplex>>,
}

impl SMap {
    /// Checks ranges, truncations, the basepoint and `f(d_i x) = d_i f(x)` on every
    /// nondegenerate simplex. Degeneracies commute automatically.
    pub fn new(domain: FinSSet, codomain: FinSSet, images: Vec<Vec<Simplex>>) -> Result<Self> {
        if domain.truncation() != codomain.truncation() {
            return Err(Error::TruncationMismatch {
                left: domain.truncation(),
                right: codomain.truncation(),
            });
        }
        if images.len() != domain.truncation() + 1 {
            return Err(Error::InvalidMap(format!(
                "images given for {} levels, expected {}",
                images.len(),
                domain.truncation() + 1
            )));
        }
        for (n, level) in images.iter().enumerate() {
            if level.len() != domain.count(n) {
                return Err(Error::InvalidMap(format!(
                    "level {n}: {} images for {} simplices",
                    level.len(),
                    domain.count(n)
                )));
            }
            for (x, s) in level.iter().enumerate() {
                let valid = (n == 0 || s.degen >> n == 0)
                    && (n > 0 || s.degen == 0)
                    && s.id < codomain.count(s.base_level(n));
                if !valid {
                    return Err(Error::InvalidMap(format!(
                        "image of simplex {x} at level {n} is not a simplex of the target"
                    )));
                }
            }
        }
        let f = SMap {
            domain,
            codomain,
            images,
        };
        if f.images[0][f.domain.basepoint()] != Simplex::nondegenerate(f.codomain.basepoint()) {
            return Err(Error::InvalidMap("basepoint is not preserved".into()));
        }
        for n in 1..=f.domain.truncation() {
            for x in 0..f.domain.count(n) {
                for i in 0..=n {
                    let lhs = f.image(n - 1, f.domain.face(n, x, i));
                    let rhs = f.codomain.face_of(n, f.images[n][x], i);
                    if lhs != rhs {
                        return Err(Error::InvalidMap(format!(
                            "d{i} does not commute with the map on simplex {x} at level {n}"
                        )));
                    }
                }
            }
        }
        Ok(f)
    }

    pub fn identity(x: &FinSSet) -> Self {
        let images = (0..=x.truncation())
            .map(|n| (0..x.count(n)).map(Simplex::nondegenerate).collect())
            .collect();
        SMap {
            domain: x.clone(),
            codomain: x.clone(),
            images,
        }
    }

    /// The map sending everything to the basepoint.
    pub fn constant(x: &FinSSet, y: &FinSSet) -> Result<Self> {
        let images = (0..=x.truncation())
            .map(|n| vec![y.base_simplex(n); x.count(n)])
            .collect();
        SMap::new(x.clone(), y.clone(), images)
    }

    pub fn domain(&self) -> &FinSSet {
        &self.domain
    }

    pub fn codomain(&self) -> &FinSSet {
        &self.codomain
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    /// Image of an arbitrary simplex `s` at level `n`.
    pub fn image(&self, n: usize, s: Simplex) -> Simplex {
        let m = s.base_level(n);
        let y = self.images[m][s.id];
        if s.degen == 0 {
            y
        } else {
            self.codomain.apply(m, y, &super::surjection(s.degen, n))
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SMap) -> Result<SMap> {
        if first.codomain != self.domain {
            return Err(Error::InvalidMap("composite of maps with mismatched ends".into()));
        }
        let images = first
            .images
            .iter()
            .enumerate()
            .map(|(n, level)| level.iter().map(|&s| self.image(n, s)).collect())
            .collect();
        Ok(SMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        })
    }

    /// Whether every nondegenerate simplex maps to a distinct nondegenerate simplex.
    pub fn is_injective(&self) -> bool {
        self.images.iter().all(|level| {
            let mut seen = std::collections::HashSet::new();
            level.iter().all(|s| s.degen == 0 && seen.insert(s.id))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{circle, degree_collapse, sphere};

    #[test]
    fn collapse_is_a_map() {
        let f = degree_collapse(3, 2).unwrap();
        assert_eq!(f.image(2, Simplex { degen: 1, id: 1 }), Simplex { degen: 1, id: 0 });
        let id = SMap::identity(f.codomain());
        assert_eq!(id.compose(&f).unwrap(), f);
    }

    #[test]
    fn rejects_non_maps() {
        let c = circle(2, 1).unwrap();
        let s = sphere(1, 1).unwrap();
        // sending an edge to the edge of S¹ but a vertex off the basepoint is impossible
        let bad = SMap::new(
            s.clone(),
            c.clone(),
            vec![vec![Simplex::nondegenerate(0)], vec![Simplex::nondegenerate(0)]],
        );
        assert!(bad.is_err());
    }
}

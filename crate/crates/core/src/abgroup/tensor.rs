use super::group::{AbElt, AbGroup};
use crate::error::{Error, Result};
use crate::intlin::{Int, IntMatrix};

/// `A ⊗ B` presented on generator pairs `(i, j)` (index `i * gens(B) + j`) with
/// relations `[M ⊗ I | I ⊗ N]` for `A = coker M`, `B = coker N`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub group: AbGroup,
    left: AbGroup,
    right: AbGroup,
}

pub fn tensor(a: &AbGroup, b: &AbGroup) -> TensorProduct {
    let ia = IntMatrix::identity(a.generators());
    let ib = IntMatrix::identity(b.generators());
    let rel = a.relations().kron(&ib).hcat(&ia.kron(b.relations()));
    let group = AbGroup::new(a.generators() * b.generators(), rel).expect("kronecker shape");
    TensorProduct {
        group,
        left: a.clone(),
        right: b.clone(),
    }
}

impl TensorProduct {
    pub fn left(&self) -> &AbGroup {
        &self.left
    }

    pub fn right(&self) -> &AbGroup {
        &self.right
    }

    /// Index of the generator `e_i ⊗ f_j`.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        i * self.right.generators() + j
    }

    /// The bilinear structure map `t(a, b) = a ⊗ b`.
    pub fn elementary(&self, a: &AbElt, b: &AbElt) -> Result<AbElt> {
        if a.group() != &self.left || b.group() != &self.right {
            return Err(Error::MismatchedGroups);
        }
        let nb = self.right.generators();
        let mut coords = vec![Int::default(); self.group.generators()];
        for (i, x) in a.coords().iter().enumerate() {
            for (j, y) in b.coords().iter().enumerate() {
                coords[i * nb + j] = x * y;
            }
        }
        self.group.elt(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::AbHom;

    #[test]
    fn tensor_with_integers_is_identity() {
        for g in [
            AbGroup::cyclic(4),
            AbGroup::from_cyclic_orders(&[0, 2, 6]),
            AbGroup::trivial(),
        ] {
            let t = tensor(&g, &AbGroup::integers());
            assert!(t.group.is_isomorphic(&g));
            // a -> a ⊗ 1 is an isomorphism
            let one = AbGroup::integers().generator(0);
            let cols: Vec<Vec<Int>> = (0..g.generators())
                .map(|i| t.elementary(&g.generator(i), &one).unwrap().coords().to_vec())
                .collect();
            let f = AbHom::new(
                g.clone(),
                t.group.clone(),
                IntMatrix::from_columns(t.group.generators(), &cols),
            )
            .unwrap();
            assert!(f.inverse().unwrap().is_some());
        }
    }

    #[test]
    fn z4_tensor_z6() {
        let t = tensor(&AbGroup::cyclic(4), &AbGroup::cyclic(6));
        assert_eq!(t.group.to_string(), "Z/2");
        let two = t.left().elt_i64(&[2]).unwrap();
        let three = t.right().elt_i64(&[3]).unwrap();
        assert!(t.elementary(&two, &three).unwrap().is_zero());
        let one = t.elementary(&t.left().generator(0), &t.right().generator(0)).unwrap();
        assert!(!one.is_zero());
    }

    #[test]
    fn zero_factor() {
        let t = tensor(&AbGroup::trivial(), &AbGroup::cyclic(5));
        assert!(t.group.is_trivial());
        let t = tensor(&AbGroup::integers(), &AbGroup::integers());
        let g = t.elementary(&t.left().generator(0), &t.right().generator(0)).unwrap();
        assert_eq!(g.coords(), &[Int::from(1)]);
    }

    #[test]
    fn mismatched_factors() {
        let t = tensor(&AbGroup::cyclic(2), &AbGroup::cyclic(3));
        let wrong = AbGroup::cyclic(5).generator(0);
        assert_eq!(
            t.elementary(&wrong, &t.right().generator(0)).unwrap_err(),
            Error::MismatchedGroups
        );
    }
}

use std::fmt;

use num_traits::One;

use super::group::{AbElt, AbGroup};
use crate::error::{Error, Result};
use crate::intlin::{
    kernel_basis, lattice_member, row_smith, smith_normal_form, solve_matrix_with, Int, IntMatrix,
};

/// A homomorphism between presented groups. Column `j` of `matrix` is the image
/// of generator `j` of the domain, in codomain coordinates.
#[derive(Clone)]
pub struct AbHom {
    domain: AbGroup,
    codomain: AbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    /// Checks shape and that every domain relation maps into the codomain relation lattice.
    pub fn new(domain: AbGroup, codomain: AbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.generators() || matrix.cols() != domain.generators() {
            return Err(Error::IllFormedHom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.generators(),
                domain.generators()
            )));
        }
        let images = &matrix * domain.relations();
        if let Some(j) = codomain.smith().first_column_outside(&images) {
            return Err(Error::IllFormedHom(format!(
                "domain relation {j} does not map to zero"
            )));
        }
        Ok(AbHom {
            domain,
            codomain,
            matrix,
        })
    }

    pub(crate) fn new_unchecked(domain: AbGroup, codomain: AbGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), codomain.generators());
        debug_assert_eq!(matrix.cols(), domain.generators());
        AbHom {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(g: &AbGroup) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), IntMatrix::identity(g.generators()))
    }

    pub fn zero(domain: &AbGroup, codomain: &AbGroup) -> Self {
        Self::new_unchecked(
            domain.clone(),
            codomain.clone(),
            IntMatrix::zeros(codomain.generators(), domain.generators()),
        )
    }

    pub fn domain(&self) -> &AbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &AbGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &AbElt) -> Result<AbElt> {
        if x.group() != &self.domain {
            return Err(Error::MismatchedGroups);
        }
        self.codomain.elt(self.matrix.mul_vec(x.coords()))
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &AbHom) -> Result<AbHom> {
        if first.codomain != self.domain {
            return Err(Error::MismatchedGroups);
        }
        Ok(Self::new_unchecked(
            first.domain.clone(),
            self.codomain.clone(),
            &self.matrix * &first.matrix,
        ))
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::MismatchedGroups);
        }
        Ok(Self::new_unchecked(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        ))
    }

    pub fn neg(&self) -> AbHom {
        self.scale(&-Int::one())
    }

    pub fn scale(&self, k: &Int) -> AbHom {
        Self::new_unchecked(self.domain.clone(), self.codomain.clone(), self.matrix.scale(k))
    }

    /// Equality as maps: agreement on every generator modulo codomain relations.
    pub fn equals(&self, other: &AbHom) -> bool {
        if self.domain != other.domain || self.codomain != other.codomain {
            return false;
        }
        let diff = self.matrix.sub(&other.matrix);
        (0..diff.cols()).all(|j| self.codomain.represents_zero(&diff.column(j)))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.codomain.represents_zero(&self.matrix.column(j)))
    }

    /// Basis (as columns in domain coordinates) of the lattice of `x` with `f(x)` in the
    /// codomain relation lattice.
    fn preimage_of_relations(&self) -> IntMatrix {
        let a = self.domain.generators();
        let stacked = self.matrix.hcat(self.codomain.relations());
        let k = kernel_basis(&stacked);
        let proj = IntMatrix::from_fn(a, k.cols(), |i, j| k[(i, j)].clone());
        lattice_basis(&proj)
    }

    /// Kernel with its inclusion into the domain.
    pub fn kernel(&self) -> Result<(AbGroup, AbHom)> {
        let basis = self.preimage_of_relations();
        let rel = solve_columns(&basis, self.domain.relations())
            .ok_or_else(|| Error::IllFormedHom("domain relations not in kernel lattice".into()))?;
        let k = AbGroup::new(basis.cols(), rel)?;
        let incl = Self::new_unchecked(k.clone(), self.domain.clone(), basis);
        Ok((k, incl))
    }

    /// Image `A / ker f`, with its inclusion into the codomain.
    pub fn image(&self) -> Result<(AbGroup, AbHom)> {
        let basis = self.preimage_of_relations();
        let im = AbGroup::new(self.domain.generators(), basis)?;
        let incl = Self::new_unchecked(im.clone(), self.codomain.clone(), self.matrix.clone());
        Ok((im, incl))
    }

    /// Cokernel with the projection from the codomain.
    pub fn cokernel(&self) -> Result<(AbGroup, AbHom)> {
        let rel = self.codomain.relations().hcat(&self.matrix);
        let c = AbGroup::new(self.codomain.generators(), rel)?;
        let proj = Self::new_unchecked(
            self.codomain.clone(),
            c.clone(),
            IntMatrix::identity(self.codomain.generators()),
        );
        Ok((c, proj))
    }

    /// Preimage of `y` under `self`, if any.
    pub fn preimage(&self, y: &AbElt) -> Result<Option<AbElt>> {
        if y.group() != &self.codomain {
            return Err(Error::MismatchedGroups);
        }
        let stacked = self.matrix.hcat(self.codomain.relations());
        Ok(lattice_member(&stacked, y.coords())?.map(|x| {
            let coords = x[..self.domain.generators()].to_vec();
            self.domain.elt(coords).expect("length")
        }))
    }

    /// Finds `h` with `self ∘ h = g`; fails when `g` does not factor through `self`.
    /// Intended for injective `self`, where the factorization is unique.
    pub fn factor_through(&self, g: &AbHom) -> Result<AbHom> {
        if g.codomain != self.codomain {
            return Err(Error::MismatchedGroups);
        }
        let stacked = self.matrix.hcat(self.codomain.relations());
        let snf = smith_normal_form(&stacked);
        let n = self.domain.generators();
        let x = solve_matrix_with(&snf, &g.matrix)?
            .map_err(|j| Error::IllFormedHom(format!("generator {j} does not factor")))?;
        AbHom::new(
            g.domain.clone(),
            self.domain.clone(),
            IntMatrix::from_fn(n, x.cols(), |i, j| x[(i, j)].clone()),
        )
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.0.is_trivial())
    }

    pub fn is_iso(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }

    /// Explicit inverse, certified by checking both composites are identities.
    /// `None` when `self` is not an isomorphism.
    pub fn inverse(&self) -> Result<Option<AbHom>> {
        let stacked = self.matrix.hcat(self.codomain.relations());
        let snf = smith_normal_form(&stacked);
        let n = self.domain.generators();
        let e = IntMatrix::identity(self.codomain.generators());
        let Ok(x) = solve_matrix_with(&snf, &e)? else {
            return Ok(None);
        };
        let candidate = IntMatrix::from_fn(n, x.cols(), |i, j| x[(i, j)].clone());
        let Ok(inv) = AbHom::new(self.codomain.clone(), self.domain.clone(), candidate) else {
            return Ok(None);
        };
        let left = inv.compose(self)?;
        let right = self.compose(&inv)?;
        if left.equals(&AbHom::identity(&self.domain)) && right.equals(&AbHom::identity(&self.codomain))
        {
            Ok(Some(inv))
        } else {
            Ok(None)
        }
    }

    /// Every homomorphism into a finite group, by assigning each generator an element
    /// and keeping the well-defined assignments.
    pub fn enumerate(domain: &AbGroup, codomain: &AbGroup) -> Result<Vec<AbHom>> {
        let targets = codomain.elements()?;
        let g = domain.generators();
        let mut out = Vec::new();
        let mut choice = vec![0usize; g];
        loop {
            let cols: Vec<Vec<Int>> = choice.iter().map(|&c| targets[c].coords().to_vec()).collect();
            let m = IntMatrix::from_columns(codomain.generators(), &cols);
            if let Ok(h) = AbHom::new(domain.clone(), codomain.clone(), m) {
                out.push(h);
            }
            let mut k = g;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < targets.len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}) {:?}", self.domain, self.codomain, self.matrix)
    }
}

/// A basis of the lattice spanned by the columns of `gens`.
pub(crate) fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let s = row_smith(gens);
    // gens = u_inv * d * v_inv, so the span is u_inv * d * Z^k
    IntMatrix::from_fn(gens.rows(), s.rank(), |i, j| &s.u_inv[(i, j)] * &s.divisors()[j])
}

/// Solves `basis * x = rhs` column by column; `None` if some column is not in the span.
fn solve_columns(basis: &IntMatrix, rhs: &IntMatrix) -> Option<IntMatrix> {
    let snf = smith_normal_form(basis);
    solve_matrix_with(&snf, rhs).ok()?.ok()
}

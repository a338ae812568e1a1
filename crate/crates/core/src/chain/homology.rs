use num_traits::{One, Zero};

use super::ChainComplexZ;
use crate::abgroup::{AbElt, AbGroup, AbHom, CanonicalForm};
use crate::error::{Error, Result};
use crate::intlin::{invariant_factors, smith_normal_form, solve_with, Int, IntMatrix, SmithDecomposition};
use crate::sset::{FinSSet, SMap};

/// `H_n(C ⊗ A)` together with cycle representatives for its generators.
///
/// Chains with coefficients live in `A^k`, coordinate `pos * g + c` holding the
/// coefficient of generator `c` of `A` on basis simplex `pos`.
#[derive(Clone, Debug)]
pub struct Homology {
    degree: usize,
    coeff: AbGroup,
    complex: ChainComplexZ,
    /// `C_n ⊗ A`
    chains: AbGroup,
    /// `∂_n ⊗ 1`
    boundary: IntMatrix,
    /// Columns: one cycle per generator of `group`.
    cycles: IntMatrix,
    /// SNF of `[cycles | relations of C_n ⊗ A]`, used to express cycles.
    solver: SmithDecomposition,
    group: AbGroup,
}

fn check_degree(x: &FinSSet, n: usize) -> Result<()> {
    x.require_level(n + 1, n)
}

/// `H̃_n(X; A)` (or unreduced), computed as a kernel modulo an image of integer
/// matrices acting on copies of `A`. With `A = Z` only invariant factors are needed.
pub fn homology(x: &FinSSet, a: &AbGroup, n: usize, reduced: bool) -> Result<AbGroup> {
    check_degree(x, n)?;
    let c = ChainComplexZ::new(x, reduced);
    if is_integers(a) {
        return Ok(homology_z(&c, n));
    }
    Ok(Homology::of(&c, a, n)?.group)
}

fn is_integers(a: &AbGroup) -> bool {
    a.generators() == 1 && a.relations().is_zero()
}

/// Integral homology from ranks and the invariant factors of `∂_{n+1}`.
pub fn homology_z(c: &ChainComplexZ, n: usize) -> AbGroup {
    let rank_n = if n == 0 {
        0
    } else {
        invariant_factors(c.boundary(n)).len()
    };
    let next = invariant_factors(c.boundary(n + 1));
    let torsion: Vec<Int> = next.iter().filter(|d| !d.is_one()).cloned().collect();
    AbGroup::from_canonical(&CanonicalForm {
        rank: c.rank(n) - rank_n - next.len(),
        torsion,
    })
}

impl Homology {
    /// Full computation for `X`, reduced or not.
    pub fn compute(x: &FinSSet, a: &AbGroup, n: usize, reduced: bool) -> Result<Self> {
        check_degree(x, n)?;
        Self::of(&ChainComplexZ::new(x, reduced), a, n)
    }

    pub fn of(c: &ChainComplexZ, a: &AbGroup, n: usize) -> Result<Self> {
        if n + 1 > c.top_degree() {
            return Err(Error::DegreeExceedsTruncation {
                degree: n,
                truncation: c.top_degree(),
                required: n + 1,
            });
        }
        let g = a.generators();
        let ig = IntMatrix::identity(g);
        let tensor_chains = |k: usize| {
            AbGroup::new(c.rank(k) * g, IntMatrix::identity(c.rank(k)).kron(a.relations()))
                .expect("kronecker shape")
        };
        let chains = tensor_chains(n);
        let below = if n == 0 {
            AbGroup::trivial()
        } else {
            tensor_chains(n - 1)
        };
        let boundary = c.boundary(n).kron(&ig);
        let d_n = AbHom::new_unchecked(chains.clone(), below, boundary.clone());
        let (_, incl) = d_n.kernel()?;
        let above = tensor_chains(n + 1);
        let d_next = AbHom::new_unchecked(above, chains.clone(), c.boundary(n + 1).kron(&ig));
        let lift = incl.factor_through(&d_next)?;
        let (group, _) = lift.cokernel()?;
        let cycles = incl.matrix().clone();
        let solver = smith_normal_form(&cycles.hcat(chains.relations()));
        Ok(Homology {
            degree: n,
            coeff: a.clone(),
            complex: c.clone(),
            chains,
            boundary,
            cycles,
            solver,
            group,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &AbGroup {
        &self.coeff
    }

    pub fn complex(&self) -> &ChainComplexZ {
        &self.complex
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    /// `C_n ⊗ A`.
    pub fn chains(&self) -> &AbGroup {
        &self.chains
    }

    /// A cycle representing generator `i` of the homology group.
    pub fn representative(&self, i: usize) -> Vec<Int> {
        self.cycles.column(i)
    }

    /// Cycle representing an arbitrary class.
    pub fn representative_of(&self, h: &AbElt) -> Result<Vec<Int>> {
        if h.group() != &self.group {
            return Err(Error::MismatchedGroups);
        }
        Ok(self.cycles.mul_vec(h.coords()))
    }

    pub fn is_cycle(&self, chain: &[Int]) -> bool {
        let image = self.boundary.mul_vec(chain);
        if self.degree == 0 {
            return true;
        }
        let g = self.coeff.generators();
        // coordinates of C_{n-1} ⊗ A are blocks of g, each reduced in A
        image.chunks(g.max(1)).all(|block| g == 0 || self.coeff.represents_zero(block))
    }

    /// The homology class of a cycle; fails if `chain` is not a cycle.
    pub fn class_of(&self, chain: &[Int]) -> Result<AbElt> {
        if chain.len() != self.chains.generators() {
            return Err(Error::DimensionMismatch {
                expected: self.chains.generators(),
                found: chain.len(),
            });
        }
        if !self.is_cycle(chain) {
            return Err(Error::InvariantViolation(format!(
                "chain is not a cycle in degree {}",
                self.degree
            )));
        }
        let x = solve_with(&self.solver, chain)?
            .ok_or_else(|| Error::InvariantViolation("cycle outside the kernel lattice".into()))?;
        self.group.elt(x[..self.cycles.cols()].to_vec())
    }

    /// Chain with coefficient `k` times generator `c` of `A` on simplex `id`.
    pub fn basis_chain(&self, id: usize, c: usize, k: &Int) -> Vec<Int> {
        let g = self.coeff.generators();
        let mut v = vec![Int::zero(); self.chains.generators()];
        if let Some(pos) = self.complex.position(self.degree, id) {
            v[pos * g + c] += k;
        }
        v
    }
}

/// `f_* : H_n(X; A) -> H_n(Y; A)` between precomputed homologies.
pub fn induced_map(f: &SMap, hx: &Homology, hy: &Homology) -> Result<AbHom> {
    if hx.degree != hy.degree || hx.coeff != hy.coeff {
        return Err(Error::MismatchedGroups);
    }
    let n = hx.degree;
    let g = hx.coeff.generators();
    let chain = ChainComplexZ::chain_map(f, &hx.complex, &hy.complex, n).kron(&IntMatrix::identity(g));
    let mut cols = Vec::with_capacity(hx.group.generators());
    for i in 0..hx.group.generators() {
        let image = chain.mul_vec(&hx.representative(i));
        cols.push(hy.class_of(&image)?.coords().to_vec());
    }
    AbHom::new(
        hx.group.clone(),
        hy.group.clone(),
        IntMatrix::from_columns(hy.group.generators(), &cols),
    )
}

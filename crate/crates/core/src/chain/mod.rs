//! Normalized chains, homology with coefficients, induced maps and cross products.

mod connect;
mod cross;
mod homology;

use crate::intlin::{Int, IntMatrix};
use crate::sset::{FinSSet, SMap, Simplex};

pub use connect::{is_n_connected_certificate, ConnectivityReport};
pub use cross::{
    cross_product, ez_chain, shuffles, suspension_iso, suspension_map, CrossProduct, Shuffle,
    SuspensionIso,
};
pub use homology::{homology, homology_z, induced_map, Homology};

/// Normalized chains of a finite simplicial set, optionally reduced.
///
/// Degree `n` has one basis element per nondegenerate `n`-simplex; in the reduced
/// complex the basepoint is dropped from degree 0. Boundaries are stored for
/// every degree up to the truncation.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    reduced: bool,
    basepoint: usize,
    ranks: Vec<usize>,
    /// `boundaries[n] = ∂_n : C_n -> C_{n-1}`; `boundaries[0]` has no rows.
    boundaries: Vec<IntMatrix>,
}

impl ChainComplexZ {
    pub fn normalized(x: &FinSSet) -> Self {
        Self::build(x, false)
    }

    pub fn reduced(x: &FinSSet) -> Self {
        Self::build(x, true)
    }

    pub fn new(x: &FinSSet, reduced: bool) -> Self {
        Self::build(x, reduced)
    }

    fn build(x: &FinSSet, reduced: bool) -> Self {
        let d = x.truncation();
        let mut ranks: Vec<usize> = (0..=d).map(|n| x.count(n)).collect();
        if reduced {
            ranks[0] -= 1;
        }
        let mut boundaries = vec![IntMatrix::zeros(0, ranks[0])];
        let base = x.basepoint();
        for n in 1..=d {
            let mut m = vec![0i64; ranks[n - 1] * ranks[n]];
            for s in 0..ranks[n] {
                for (i, f) in x.faces_of(n, s).iter().enumerate() {
                    if f.is_degenerate() {
                        continue;
                    }
                    let row = if n == 1 && reduced {
                        match f.id.cmp(&base) {
                            std::cmp::Ordering::Equal => continue,
                            std::cmp::Ordering::Less => f.id,
                            std::cmp::Ordering::Greater => f.id - 1,
                        }
                    } else {
                        f.id
                    };
                    m[row * ranks[n] + s] += if i % 2 == 0 { 1 } else { -1 };
                }
            }
            boundaries.push(IntMatrix::from_vec(
                ranks[n - 1],
                ranks[n],
                m.into_iter().map(Int::from).collect(),
            ));
        }
        ChainComplexZ {
            reduced,
            basepoint: base,
            ranks,
            boundaries,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_n`, for `1 <= n <= D`; degree 0 gives the zero map to the zero group.
    pub fn boundary(&self, n: usize) -> &IntMatrix {
        &self.boundaries[n]
    }

    /// Basis position of the nondegenerate `n`-simplex `id`; `None` for the
    /// dropped basepoint.
    pub fn position(&self, n: usize, id: usize) -> Option<usize> {
        if n == 0 && self.reduced {
            match id.cmp(&self.basepoint) {
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Less => Some(id),
                std::cmp::Ordering::Greater => Some(id - 1),
            }
        } else {
            Some(id)
        }
    }

    /// Basis position of an arbitrary simplex; degenerate simplices are zero in
    /// normalized chains.
    pub fn simplex_position(&self, n: usize, s: Simplex) -> Option<usize> {
        if s.is_degenerate() {
            None
        } else {
            self.position(n, s.id)
        }
    }

    /// `∂_n ∘ ∂_{n+1} = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        (1..self.boundaries.len() - 1)
            .all(|n| (&self.boundaries[n] * &self.boundaries[n + 1]).is_zero())
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Matrix of the chain map induced by `f : X -> Y` in degree `n`.
    pub fn chain_map(f: &SMap, src: &ChainComplexZ, dst: &ChainComplexZ, n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(dst.rank(n), src.rank(n));
        for id in 0..f.domain().count(n) {
            let Some(col) = src.position(n, id) else {
                continue;
            };
            if let Some(row) = dst.simplex_position(n, f.images()[n][id]) {
                m[(row, col)] += Int::from(1);
            }
        }
        m
    }
}

//! Smith normal form with unimodular transformation certificates.
//!
//! Elimination runs on `i64` with checked arithmetic first and restarts on
//! `BigInt` the moment any intermediate value would overflow, so results are
//! always exact.
//!
//! Pivoting: at every stage the entry of smallest nonzero magnitude in the
//! working submatrix is chosen, ties broken by lowest (row, col). While a
//! stage's row and column are being cleared, the next pivot is the smallest
//! remainder left in that row or column.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Int, IntMatrix};
use crate::error::{Error, Result};

/// `u * a * v == d`, with `u`, `v` unimodular and `d` diagonal in divisibility order.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `u`.
    pub u_inv: IntMatrix,
    /// Inverse of `v`.
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// The positive diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub fn divisors(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Re-checks every certificate against the source matrix.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let n = a.rows();
        let m = a.cols();
        if self.u.rows() != n || self.v.rows() != m {
            return false;
        }
        if &(&self.u * a) * &self.v != self.d {
            return false;
        }
        if &self.u * &self.u_inv != IntMatrix::identity(n)
            || &self.v * &self.v_inv != IntMatrix::identity(m)
        {
            return false;
        }
        is_smith_form(&self.d, self.rank)
    }
}

/// Checks the shape of a Smith form: diagonal, positive leading block, divisibility chain.
pub fn is_smith_form(d: &IntMatrix, rank: usize) -> bool {
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            let x = &d[(i, j)];
            if i != j && !x.is_zero() {
                return false;
            }
            if i == j {
                if i < rank && !x.is_positive() {
                    return false;
                }
                if i >= rank && !x.is_zero() {
                    return false;
                }
            }
        }
    }
    (1..rank).all(|i| (&d[(i, i)] % &d[(i - 1, i - 1)]).is_zero())
}

/// Full decomposition with both transforms and their inverses.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let r = run(a, Track::ALL);
    SmithDecomposition {
        u: r.u.expect("tracked"),
        v: r.v.expect("tracked"),
        u_inv: r.u_inv.expect("tracked"),
        v_inv: r.v_inv.expect("tracked"),
        d: IntMatrix::diagonal(a.rows(), a.cols(), &r.diag),
        rank: r.diag.len(),
    }
}

/// Nonzero diagonal of the Smith form, without transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<Int> {
    run(a, Track::NONE).diag
}

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

/// Columns form a basis of the integer kernel `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let r = run(
        a,
        Track {
            v: true,
            ..Track::NONE
        },
    );
    let v = r.v.expect("tracked");
    let keep: Vec<usize> = (r.diag.len()..a.cols()).collect();
    v.select_columns(&keep)
}

/// Solves `a x = v` over the integers, returning `None` when `v` is outside the column lattice.
pub fn lattice_member(a: &IntMatrix, v: &[Int]) -> Result<Option<Vec<Int>>> {
    let snf = smith_normal_form(a);
    solve_with(&snf, v)
}

/// Same as [`lattice_member`] against a precomputed decomposition of `a`.
pub fn solve_with(snf: &SmithDecomposition, v: &[Int]) -> Result<Option<Vec<Int>>> {
    let rows = snf.u.rows();
    if v.len() != rows {
        return Err(Error::DimensionMismatch {
            expected: rows,
            found: v.len(),
        });
    }
    let w = snf.u.mul_vec(v);
    let cols = snf.v.rows();
    let mut y = vec![Int::zero(); cols];
    for (i, wi) in w.iter().enumerate() {
        if i < snf.rank {
            let (q, rem) = wi.div_rem(&snf.d[(i, i)]);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !wi.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(snf.v.mul_vec(&y)))
}

/// Solves `a X = b` column by column; `Err(j)` names the first column of `b`
/// outside the column lattice of `a`.
pub fn solve_matrix_with(snf: &SmithDecomposition, b: &IntMatrix) -> Result<std::result::Result<IntMatrix, usize>> {
    if b.rows() != snf.u.rows() {
        return Err(Error::DimensionMismatch {
            expected: snf.u.rows(),
            found: b.rows(),
        });
    }
    let w = &snf.u * b;
    let cols = snf.v.rows();
    let mut y = IntMatrix::zeros(cols, b.cols());
    for j in 0..b.cols() {
        for i in 0..w.rows() {
            let wi = &w[(i, j)];
            if i < snf.rank {
                let (q, rem) = wi.div_rem(&snf.d[(i, i)]);
                if !rem.is_zero() {
                    return Ok(Err(j));
                }
                y[(i, j)] = q;
            } else if !wi.is_zero() {
                return Ok(Err(j));
            }
        }
    }
    Ok(Ok(&snf.v * &y))
}

/// The left half of a Smith decomposition, `u * a * v = d` with `v` discarded.
/// Enough to decide lattice membership and compute normal forms.
#[derive(Clone, Debug)]
pub struct RowSmith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    divisors: Vec<Int>,
}

impl RowSmith {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn divisors(&self) -> &[Int] {
        &self.divisors
    }

    /// Whether `v` lies in the column lattice of the reduced matrix.
    pub fn contains(&self, v: &[Int]) -> bool {
        let w = self.u.mul_vec(v);
        self.in_reduced_lattice(w.iter())
    }

    /// First column of `m` outside the column lattice, if any.
    pub fn first_column_outside(&self, m: &IntMatrix) -> Option<usize> {
        let w = &self.u * m;
        (0..m.cols()).find(|&j| !self.in_reduced_lattice((0..w.rows()).map(|i| &w[(i, j)])))
    }

    fn in_reduced_lattice<'a>(&self, w: impl Iterator<Item = &'a Int>) -> bool {
        w.enumerate().all(|(i, x)| match self.divisors.get(i) {
            Some(d) => (x % d).is_zero(),
            None => x.is_zero(),
        })
    }
}

pub fn row_smith(a: &IntMatrix) -> RowSmith {
    let r = run(
        a,
        Track {
            u: true,
            v: false,
            inverses: true,
        },
    );
    RowSmith {
        u: r.u.expect("tracked"),
        u_inv: r.u_inv.expect("tracked"),
        divisors: r.diag,
    }
}

#[derive(Clone, Copy)]
struct Track {
    u: bool,
    v: bool,
    inverses: bool,
}

impl Track {
    const ALL: Track = Track {
        u: true,
        v: true,
        inverses: true,
    };
    const NONE: Track = Track {
        u: false,
        v: false,
        inverses: false,
    };
}

struct Outcome {
    diag: Vec<Int>,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

fn run(a: &IntMatrix, track: Track) -> Outcome {
    if let Some(small) = a.to_i64() {
        if let Some(out) = Elimination::new(a.rows(), a.cols(), small, track).reduce() {
            return out.into_outcome();
        }
    }
    let big = a.entries().to_vec();
    Elimination::new(a.rows(), a.cols(), big, track)
        .reduce()
        .expect("BigInt elimination cannot overflow")
        .into_outcome()
}

/// Entry type the elimination can run over. `None` signals overflow.
trait Scalar: Clone + Debug + PartialEq {
    fn nil() -> Self;
    fn unit_val() -> Self;
    fn is_nil(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mag_lt(&self, other: &Self) -> bool;
    fn negate(&self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    /// Nearest-integer quotient `self / d`.
    fn div_round(&self, d: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    fn to_int(&self) -> Int;
}

impl Scalar for i64 {
    fn nil() -> Self {
        0
    }
    fn unit_val() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mag_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn negate(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn div_round(&self, d: &Self) -> Option<Self> {
        let q = self.checked_div_euclid(*d)?;
        let r = self.checked_rem_euclid(*d)?;
        if r.checked_mul(2)? > d.checked_abs()? {
            q.checked_add(d.signum())
        } else {
            Some(q)
        }
    }
    fn divides(&self, other: &Self) -> bool {
        other.checked_rem(*self).is_some_and(|r| r == 0)
    }
    fn to_int(&self) -> Int {
        Int::from(*self)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit_val() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn mag_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn negate(&self) -> Option<Self> {
        Some(-self)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn div_round(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_mod_floor(d);
        // floor division leaves r with the sign of d
        let twice: BigInt = &r * 2;
        if twice.magnitude() > d.magnitude() {
            Some(q + 1)
        } else {
            Some(q)
        }
    }
    fn divides(&self, other: &Self) -> bool {
        (other % self).is_nil()
    }
    fn to_int(&self) -> Int {
        self.clone()
    }
}

struct Elimination<T> {
    m: usize,
    n: usize,
    a: Vec<T>,
    u: Option<Vec<T>>,
    v: Option<Vec<T>>,
    u_inv: Option<Vec<T>>,
    v_inv: Option<Vec<T>>,
    diag: Vec<T>,
}

fn identity<T: Scalar>(n: usize) -> Vec<T> {
    let mut out = vec![T::nil(); n * n];
    for i in 0..n {
        out[i * n + i] = T::unit_val();
    }
    out
}

fn to_matrix<T: Scalar>(rows: usize, cols: usize, data: &[T]) -> IntMatrix {
    IntMatrix::from_vec(rows, cols, data.iter().map(Scalar::to_int).collect())
}

impl<T: Scalar> Elimination<T> {
    fn new(m: usize, n: usize, a: Vec<T>, track: Track) -> Self {
        Elimination {
            m,
            n,
            a,
            u: track.u.then(|| identity(m)),
            v: track.v.then(|| identity(n)),
            u_inv: (track.u && track.inverses).then(|| identity(m)),
            v_inv: (track.v && track.inverses).then(|| identity(n)),
            diag: Vec::new(),
        }
    }

    fn into_outcome(self) -> Outcome {
        let (m, n) = (self.m, self.n);
        Outcome {
            diag: self.diag.iter().map(Scalar::to_int).collect(),
            u: self.u.as_deref().map(|x| to_matrix(m, m, x)),
            v: self.v.as_deref().map(|x| to_matrix(n, n, x)),
            u_inv: self.u_inv.as_deref().map(|x| to_matrix(m, m, x)),
            v_inv: self.v_inv.as_deref().map(|x| to_matrix(n, n, x)),
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.n + j]
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        let n = self.n;
        for j in 0..n {
            self.a.swap(i * n + j, k * n + j);
        }
        let m = self.m;
        if let Some(u) = self.u.as_mut() {
            for j in 0..m {
                u.swap(i * m + j, k * m + j);
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for r in 0..m {
                ui.swap(r * m + i, r * m + k);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        let n = self.n;
        for r in 0..self.m {
            self.a.swap(r * n + j, r * n + k);
        }
        if let Some(v) = self.v.as_mut() {
            for r in 0..n {
                v.swap(r * n + j, r * n + k);
            }
        }
        if let Some(vi) = self.v_inv.as_mut() {
            for c in 0..n {
                vi.swap(j * n + c, k * n + c);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_axpy(&mut self, i: usize, q: &T, t: usize, from: usize) -> Option<()> {
        let n = self.n;
        for j in from..n {
            let b = self.a[t * n + j].clone();
            if !b.is_nil() {
                self.a[i * n + j] = self.a[i * n + j].sub_mul(q, &b)?;
            }
        }
        let m = self.m;
        if let Some(u) = self.u.as_mut() {
            for j in 0..m {
                let b = u[t * m + j].clone();
                if !b.is_nil() {
                    u[i * m + j] = u[i * m + j].sub_mul(q, &b)?;
                }
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            // column t += q * column i
            let nq = q.negate()?;
            for r in 0..m {
                let b = ui[r * m + i].clone();
                if !b.is_nil() {
                    ui[r * m + t] = ui[r * m + t].sub_mul(&nq, &b)?;
                }
            }
        }
        Some(())
    }

    /// col_j -= q * col_t
    fn col_axpy(&mut self, j: usize, q: &T, t: usize, from: usize) -> Option<()> {
        let n = self.n;
        for r in from..self.m {
            let b = self.a[r * n + t].clone();
            if !b.is_nil() {
                self.a[r * n + j] = self.a[r * n + j].sub_mul(q, &b)?;
            }
        }
        if let Some(v) = self.v.as_mut() {
            for r in 0..n {
                let b = v[r * n + t].clone();
                if !b.is_nil() {
                    v[r * n + j] = v[r * n + j].sub_mul(q, &b)?;
                }
            }
        }
        if let Some(vi) = self.v_inv.as_mut() {
            // row t += q * row j
            let nq = q.negate()?;
            for c in 0..n {
                let b = vi[j * n + c].clone();
                if !b.is_nil() {
                    vi[t * n + c] = vi[t * n + c].sub_mul(&nq, &b)?;
                }
            }
        }
        Some(())
    }

    fn negate_row(&mut self, t: usize) -> Option<()> {
        let n = self.n;
        for j in 0..n {
            self.a[t * n + j] = self.a[t * n + j].negate()?;
        }
        let m = self.m;
        if let Some(u) = self.u.as_mut() {
            for j in 0..m {
                u[t * m + j] = u[t * m + j].negate()?;
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for r in 0..m {
                ui[r * m + t] = ui[r * m + t].negate()?;
            }
        }
        Some(())
    }

    /// Smallest nonzero magnitude in the submatrix starting at (t, t).
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = self.at(i, j);
                if x.is_nil() {
                    continue;
                }
                if x.is_unit() {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if !x.mag_lt(self.at(bi, bj)) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Smallest nonzero entry among the pivot, its column below and its row to the right.
    fn find_local_pivot(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        for i in t + 1..self.m {
            let x = self.at(i, t);
            if !x.is_nil() && (self.at(best.0, best.1).is_nil() || x.mag_lt(self.at(best.0, best.1))) {
                best = (i, t);
            }
        }
        for j in t + 1..self.n {
            let x = self.at(t, j);
            if !x.is_nil() && (self.at(best.0, best.1).is_nil() || x.mag_lt(self.at(best.0, best.1))) {
                best = (t, j);
            }
        }
        best
    }

    fn reduce(mut self) -> Option<Self> {
        let limit = self.m.min(self.n);
        let mut t = 0;
        while t < limit {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                let p = self.at(t, t).clone();
                for i in t + 1..self.m {
                    if self.at(i, t).is_nil() {
                        continue;
                    }
                    let q = self.at(i, t).div_round(&p)?;
                    self.row_axpy(i, &q, t, t)?;
                    if !self.at(i, t).is_nil() {
                        clean = false;
                    }
                }
                for j in t + 1..self.n {
                    if self.at(t, j).is_nil() {
                        continue;
                    }
                    let q = self.at(t, j).div_round(&p)?;
                    self.col_axpy(j, &q, t, t)?;
                    if !self.at(t, j).is_nil() {
                        clean = false;
                    }
                }
                if !clean {
                    let (pi, pj) = self.find_local_pivot(t);
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                if !p.is_unit() {
                    if let Some(i) = self.non_divisible_row(t, &p) {
                        let minus_one = T::unit_val().negate()?;
                        self.row_axpy(t, &minus_one, i, t)?;
                        continue;
                    }
                }
                break;
            }
            if self.at(t, t).is_negative() {
                self.negate_row(t)?;
            }
            self.diag.push(self.at(t, t).clone());
            t += 1;
        }
        Some(self)
    }

    fn non_divisible_row(&self, t: usize, p: &T) -> Option<usize> {
        (t + 1..self.m).find(|&i| (t + 1..self.n).any(|j| !p.divides(self.at(i, j))))
    }
}

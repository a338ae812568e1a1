//! Exact integer linear algebra.

mod matrix;
mod smith;

pub use matrix::{int_vec, Int, IntMatrix};
pub use smith::{
    invariant_factors, is_smith_form, kernel_basis, lattice_member, rank, row_smith,
    smith_normal_form, solve_matrix_with, solve_with, RowSmith, SmithDecomposition,
};

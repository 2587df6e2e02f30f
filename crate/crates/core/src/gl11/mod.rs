//! The `gl(1|1)` chain on `L_{λ^{(1)}}(z_1) ⊗ … ⊗ L_{λ^{(p)}}(z_p)` with `h = 1`: monodromy,
//! transfer matrix, Bethe vectors, the Shapovalov form and completeness.

pub mod bethe;
pub mod tensor;
pub mod weights;

pub use bethe::{
    bethe_vector, completeness_report, divisor_solutions, eigenvalue_formula, form, homogeneous_spectrum,
    norm_check, norm_formula, poly_of_roots, primitive_root, r_matrix, r_product, shapovalov, singular_subspace,
    solution_roots, tensor_form, transfer_eigenvalue, CompletenessReport, HomogeneousSpectrum, NormCheck,
};
pub use tensor::{embed, grading, local_hat, monodromy_hat, Local, StateVector, TensorOperator};
pub use weights::{Gl11Weights, Irreducibility};

//! Parity sequences, weights, the polynomials `T^s`, the Bethe ansatz equations and eigenvalues.

pub mod bae;
pub mod node;
pub mod parity;
pub mod tpoly;
pub mod weights;

pub use bae::{bae_check, bae_holds, bae_polys, bae_residuals, eigenvalue, is_generic, ColorCheck, Genericity};
pub use node::BetheNode;
pub use parity::{ParityData, ParitySeq};
pub use tpoly::{phi_psi, t_polys, t_ratio, weight_at_infinity, weight_transform};
pub use weights::{check_polynomial_weight, WeightData};

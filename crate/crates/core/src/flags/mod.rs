//! Discrete exponents, `π_{a,b}`, the kernel spaces of a solution, superflags and the
//! generating map.

pub mod exponents;
pub mod kernel;
pub mod pi;
pub mod superflag;

pub use exponents::{discrete_exponents, dominant, FunctionSpace, Partition};
pub use kernel::{kernel_spaces, technical_conditions, KernelOptions, KernelSpaces, TechnicalConditions};
pub use pi::{exponent_union, pi_ab, pi_identity_holds, script_t, t_relation_holds};
pub use superflag::{
    bijection_check, coordinate_flag, flag_factorization, generating_map, in_symbolic_population, random_flag,
    sample_flags, y_ab, BijectionReport, FlagCheck, SuperFlag,
};

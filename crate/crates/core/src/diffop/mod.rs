//! Rational difference operators: the ring `K[τ]`, first-order factors with kernel witnesses,
//! the swap lemma, minimal fractional forms and equality of fractions.

pub mod factored;
pub mod op;

pub use factored::{odd_even_swap, rat_equal, FactorWitness, FactoredRatOp, FractionalForm, Orientation};
pub use op::DiffOp;

//! Exact arithmetic: the scalar tower, polynomials and rational functions in `x`, the shift
//! calculus (`f[k] = f(x − k h)`), Casorati determinants and skew linear equations.

/// Given `Op<&T> for T`, derives the remaining owned/borrowed combinations.
macro_rules! forward_owned_ops {
    (ring [$($g:tt)*] $t:ty) => {
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Add, add);
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Sub, sub);
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Mul, mul);
        impl<'a, $($g)*> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                -(self.clone())
            }
        }
    };
    ([$($g:tt)*] $t:ty) => {
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Add, add);
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Sub, sub);
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Mul, mul);
        $crate::algebra::forward_owned_ops!(@one [$($g)*] $t, Div, div);
        impl<'a, $($g)*> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                -(self.clone())
            }
        }
    };
    (@one [$($g:tt)*] $t:ty, $tr:ident, $m:ident) => {
        impl<$($g)*> std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                std::ops::$tr::$m(self, &o)
            }
        }
        impl<'a, 'b, $($g)*> std::ops::$tr<&'b $t> for &'a $t {
            type Output = $t;
            fn $m(self, o: &'b $t) -> $t {
                std::ops::$tr::$m(self.clone(), o)
            }
        }
        impl<'a, $($g)*> std::ops::$tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                std::ops::$tr::$m(self.clone(), &o)
            }
        }
    };
    ($t:ty) => {
        $crate::algebra::forward_owned_ops!([] $t);
    };
}
pub(crate) use forward_owned_ops;

pub mod field;
pub mod linalg;
pub mod param;
pub mod parse;
pub mod poly;
pub mod quad;
pub mod ratfunc;
pub mod roots;
pub mod shift;

pub use field::Field;
pub use linalg::{Matrix, SolutionSet};
pub use param::Param;
pub use poly::Poly;
pub use quad::Quad;
pub use ratfunc::RatFunc;
pub use shift::{casorati, dlog, indep_over_constants, rank_over_constants, solve_skew_linear, wr_pair, SkewSolution};

/// One parameter over the quadratic base.
pub type Q1 = RatFunc<Quad>;
/// Two parameters over the quadratic base.
pub type Q2 = RatFunc<RatFunc<Quad>>;

//! Specializing the outermost parameter `c` of a field `B(c)`.
//!
//! Specialization is projective: a polynomial in `x` over `B(c)` is first cleared of
//! denominators and content in `c`, so the point `c = ∞` is available too.

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;

/// A point of the projective line over `B`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Param<B: Field> {
    At(B),
    Infinity,
}

impl<B: Field> Param<B> {
    pub fn render(&self, names: &[String]) -> String {
        match self {
            Param::At(v) => v.render(names),
            Param::Infinity => "inf".into(),
        }
    }
}

/// Coefficients of `p` as polynomials in `c`, cleared of denominators and content.
pub fn primitive_in_param<B: Field>(p: &Poly<RatFunc<B>>) -> Vec<Poly<B>> {
    let den = p.coeffs().iter().fold(Poly::one(), |acc, v| acc.lcm(v.den()));
    let cs: Vec<Poly<B>> =
        p.coeffs().iter().map(|v| v.num().clone() * &den.div_exact(v.den()).unwrap()).collect();
    let g = cs.iter().fold(Poly::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_constant() {
        return cs;
    }
    cs.iter().map(|v| v.div_exact(&g).unwrap()).collect()
}

/// Projective value of `p` at `c = at`; nonzero whenever `p` is.
pub fn specialize_poly<B: Field>(p: &Poly<RatFunc<B>>, at: &Param<B>) -> Poly<B> {
    let cs = primitive_in_param(p);
    match at {
        Param::At(v) => Poly::new(cs.iter().map(|q| q.eval(v)).collect()),
        Param::Infinity => {
            let top = cs.iter().map(Poly::deg).max().unwrap_or(-1);
            if top < 0 {
                return Poly::zero();
            }
            Poly::new(cs.iter().map(|q| q.coeff(top as usize)).collect())
        }
    }
}

/// Value of a scalar at `c = v`, `None` at a pole.
pub fn specialize_scalar<B: Field>(r: &RatFunc<B>, v: &B) -> Option<B> {
    r.eval(v)
}

/// Exact (non-projective) specialization of a rational function in `x` over `B(c)`.
pub fn specialize_ratfunc<B: Field>(f: &RatFunc<RatFunc<B>>, v: &B) -> Option<RatFunc<B>> {
    let n = f.num().coeffs().iter().map(|c| c.eval(v)).collect::<Option<Vec<B>>>()?;
    let d = f.den().coeffs().iter().map(|c| c.eval(v)).collect::<Option<Vec<B>>>()?;
    let d = Poly::new(d);
    if d.is_zero() {
        return None;
    }
    Some(RatFunc::new(Poly::new(n), d))
}

pub fn embed_poly<B: Field>(p: &Poly<B>) -> Poly<RatFunc<B>> {
    p.map(|v| RatFunc::constant(v.clone()))
}

pub fn embed_ratfunc<B: Field>(f: &RatFunc<B>) -> RatFunc<RatFunc<B>> {
    f.map(|v| RatFunc::constant(v.clone()))
}

/// Coefficient-wise derivative in `c`.
pub fn dparam_poly<B: Field>(p: &Poly<RatFunc<B>>) -> Poly<RatFunc<B>> {
    p.map(RatFunc::derivative)
}

/// True when `p` does not depend on `c` up to a scalar factor.
pub fn param_free<B: Field>(p: &Poly<RatFunc<B>>) -> bool {
    primitive_in_param(p).iter().all(Poly::is_constant)
}

/// A value `c₀` with `family(c₀) ∝ target` componentwise, if one is found among the linear
/// factors of the defining equations or at infinity.
pub fn locate_param<B: Field>(family: &[Poly<RatFunc<B>>], target: &[Poly<B>]) -> Option<Param<B>> {
    assert_eq!(family.len(), target.len(), "length mismatch");
    let mut g = Poly::<B>::zero();
    for (f, t) in family.iter().zip(target) {
        let cs = primitive_in_param(f);
        let n = cs.len().max(t.coeffs().len());
        for i in 0..n {
            for j in i + 1..n {
                let fi = cs.get(i).cloned().unwrap_or_default();
                let fj = cs.get(j).cloned().unwrap_or_default();
                let m = fi.scale(&t.coeff(j)) - &fj.scale(&t.coeff(i));
                g = g.gcd(&m);
            }
        }
    }
    let matches = |at: &Param<B>| {
        family.iter().zip(target).all(|(f, t)| specialize_poly(f, at).monic() == t.monic())
    };
    if g.degree() == Some(1) {
        let at = Param::At(-g.coeff(0) / &g.coeff(1));
        if matches(&at) {
            return Some(at);
        }
    }
    if matches(&Param::Infinity) {
        return Some(Param::Infinity);
    }
    if g.is_zero() {
        // no dependence on c at all
        let at = Param::At(B::zero());
        if matches(&at) {
            return Some(at);
        }
    }
    None
}

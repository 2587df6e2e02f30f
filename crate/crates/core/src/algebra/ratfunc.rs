//! Reduced fractions of polynomials. The same type serves as a rational function in `x` and
//! as a parameter level of the scalar tower.

use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::{atom, Field};
use super::poly::Poly;
use super::quad::Quad;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        if den.is_constant() {
            let k = den.lead().inv().unwrap();
            return RatFunc { num: num.scale(&k), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        let k = den.lead().inv().unwrap();
        RatFunc { num: num.scale(&k), den: den.scale(&k) }
    }
    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }
    pub fn constant(v: F) -> Self {
        Self::from_poly(Poly::constant(v))
    }
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }
    pub fn num(&self) -> &Poly<F> {
        &self.num
    }
    pub fn den(&self) -> &Poly<F> {
        &self.den
    }
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.is_poly().then_some(&self.num)
    }
    /// The constant value, if this is a constant.
    pub fn as_const(&self) -> Option<F> {
        (self.is_poly() && self.num.is_constant()).then(|| self.num.coeff(0))
    }
    /// Value at a point, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x) * &di)
    }
    /// `f(x + a)`.
    pub fn translate(&self, a: &F) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        RatFunc { num: self.num.translate(a), den: self.den.translate(a) }
    }
    /// Derivative in this level's variable.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative() * &self.den - &(self.num.clone() * &self.den.derivative());
        Self::new(n, self.den.clone() * &self.den)
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }
    /// Rendering with `var` as the variable name.
    pub fn render_in(&self, var: &str, names: &[String]) -> String {
        let n = self.num.render_in(var, names);
        if self.den.is_one() {
            n
        } else {
            format!("{}/{}", atom(&n), atom(&self.den.render_in(var, names)))
        }
    }
}

impl<F: Field> Add<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, o: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self;
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(self.num + &o.num);
            }
            return RatFunc::new(self.num + &o.num, self.den);
        }
        // n1/(g a) + n2/(g b) = (n1 b + n2 a)/(g a b); only g can share factors with the sum
        if self.den.is_one() || o.den.is_one() {
            let n = self.num.clone() * &o.den + &(o.num.clone() * &self.den);
            return RatFunc { num: n, den: self.den * &o.den };
        }
        let g = self.den.gcd(&o.den);
        let (a, b) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), o.den.div_exact(&g).unwrap())
        };
        let n = self.num * &b + &(o.num.clone() * &a);
        if n.is_zero() {
            return RatFunc::from_poly(Poly::zero());
        }
        let den = a * &b * &g;
        if g.is_one() {
            return RatFunc { num: n, den };
        }
        let e = n.gcd(&g);
        if e.is_one() {
            RatFunc { num: n, den }
        } else {
            RatFunc { num: n.div_exact(&e).unwrap(), den: den.div_exact(&e).unwrap() }
        }
    }
}
impl<F: Field> Sub<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, o: &RatFunc<F>) -> RatFunc<F> {
        self + &(-o.clone())
    }
}
impl<F: Field> Mul<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, o: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFunc::from_poly(Poly::zero());
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num * &o.num);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1 * &n2;
        let den = d1 * &d2;
        let k = den.lead().inv().unwrap();
        RatFunc { num: num.scale(&k), den: den.scale(&k) }
    }
}
impl<F: Field> Div<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, o: &RatFunc<F>) -> RatFunc<F> {
        self * &o.inv().expect("division by zero")
    }
}
impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc { num: -self.num, den: self.den }
    }
}
super::forward_owned_ops!([F: Field] RatFunc<F>);

impl<F: Field> From<Poly<F>> for RatFunc<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Field> Field for RatFunc<F> {
    const LEVELS: usize = F::LEVELS + 1;
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let k = self.num.lead().inv().unwrap();
        Some(RatFunc { num: self.den.scale(&k), den: self.num.scale(&k) })
    }
    fn from_quad(q: &Quad) -> Self {
        Self::constant(F::from_quad(q))
    }
    fn generator(level: usize) -> Option<Self> {
        if level == F::LEVELS {
            Some(Self::x())
        } else {
            F::generator(level).map(Self::constant)
        }
    }
    fn as_quad(&self) -> Option<Quad> {
        self.as_const().and_then(|c| c.as_quad())
    }
    fn render(&self, names: &[String]) -> String {
        let var = names.get(F::LEVELS).map(String::as_str).unwrap_or("?");
        self.render_in(var, names)
    }
}

//! Roots of polynomials over `Q(√d)` that lie in `Q(√d)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::poly::Poly;
use super::quad::Quad;

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            out.push(k.clone());
            let q = &n / &k;
            if q != k {
                out.push(q);
            }
        }
        k += 1;
    }
    out
}

fn rational_roots(p: &Poly<Quad>) -> Vec<BigRational> {
    // integer coefficients
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c.re() * BigRational::from_integer(den.clone())).to_integer()).collect();
    let mut out = Vec::new();
    let lo = ints.iter().position(|v| !v.is_zero()).unwrap_or(0);
    if lo > 0 {
        out.push(BigRational::zero());
    }
    let (a0, an) = (&ints[lo], ints.last().unwrap());
    for q in divisors(an) {
        for pp in divisors(a0) {
            for sgn in [1, -1] {
                let r = BigRational::new(&pp * sgn, q.clone());
                if !out.contains(&r) && p.eval(&Quad::rational(r.clone())).is_zero() {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Roots with multiplicities, and the monic cofactor carrying no roots that were found.
///
/// Rational roots are always found. After removing them, a quadratic cofactor is solved in
/// `Q(√d)` where `d` is the coefficients' radicand or `hint`.
pub fn roots_in_field(p: &Poly<Quad>, hint: i64) -> (Vec<(Quad, usize)>, Poly<Quad>) {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut rest = p.monic();
    let mut roots: Vec<(Quad, usize)> = Vec::new();
    let mut push = |r: Quad, rest: &mut Poly<Quad>| {
        let lin = Poly::linear(&r);
        let mut k = 0;
        while let Some(q) = rest.div_exact(&lin) {
            *rest = q;
            k += 1;
        }
        if k > 0 {
            roots.push((r, k));
        }
    };
    let d = p.coeffs().iter().map(Quad::radicand).find(|&d| d != 0).unwrap_or(hint);
    if p.coeffs().iter().all(Quad::is_rational) {
        for r in rational_roots(&rest.clone()) {
            push(Quad::rational(r), &mut rest);
        }
    } else {
        // rational roots of the norm are candidates
        let conj = rest.map(Quad::conj);
        let norm = rest.clone() * &conj;
        for r in rational_roots(&norm) {
            push(Quad::rational(r), &mut rest);
        }
    }
    loop {
        match rest.degree() {
            Some(1) => {
                let r = -rest.coeff(0) / &rest.coeff(1);
                push(r, &mut rest);
            }
            Some(2) => {
                let (a, b, c) = (rest.coeff(2), rest.coeff(1), rest.coeff(0));
                let disc = b.clone() * &b - &(Quad::from_int(4) * &a * &c);
                let Some(s) = disc.sqrt(d) else { break };
                let two_a = Quad::from_int(2) * &a;
                push((-b.clone() + &s) / &two_a, &mut rest);
                push((-b - &s) / &two_a, &mut rest);
            }
            _ => break,
        }
    }
    roots.sort_by_key(|(r, _)| r.render(&[]));
    (roots, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_and_quadratic() {
        // 4x^3 + 6x^2 + 4x + 1 = (2x + 1)(2x^2 + 2x + 1)
        let p = Poly::<Quad>::from_ints(&[1, 4, 6, 4]);
        let (r, rest) = roots_in_field(&p, -1);
        assert!(rest.is_one());
        assert_eq!(r.len(), 3);
        for (x, m) in &r {
            assert_eq!(*m, 1);
            assert!(p.eval(x).is_zero());
        }
    }

    #[test]
    fn irreducible_left_over() {
        let p = Poly::<Quad>::from_ints(&[-2, 0, 1]);
        let (r, rest) = roots_in_field(&p, 3);
        assert!(r.is_empty());
        assert_eq!(rest, p);
        let (r, rest) = roots_in_field(&p, 2);
        assert_eq!(r.len(), 2);
        assert!(rest.is_one());
    }

    #[test]
    fn repeated_root() {
        let p = Poly::<Quad>::from_ints(&[1, -1]).pow(3) * Poly::from_ints(&[0, 1]);
        let (r, _) = roots_in_field(&p, 0);
        assert_eq!(r, vec![(Quad::zero(), 1), (Quad::one(), 3)]);
    }
}

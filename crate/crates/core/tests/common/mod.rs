#![allow(dead_code)]

use erq_core::decompose::apply_outer;
use erq_core::{Polynomial, Rational, UniPoly};
use rand::Rng;

pub const NAMES: [&str; 3] = ["x", "y", "z"];

/// Rational `p/q` with `|p|, q <= 9`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9)).unwrap()
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Degree exactly `deg`, optionally with zero constant term.
pub fn random_unipoly<R: Rng>(rng: &mut R, deg: usize, zero_constant: bool) -> UniPoly {
    let mut c: Vec<Rational> = (0..deg).map(|_| small_rational(rng)).collect();
    if zero_constant {
        c[0] = Rational::zero();
    }
    c.push(nonzero_rational(rng));
    UniPoly::new(c)
}

pub fn random_outer<R: Rng>(rng: &mut R) -> UniPoly {
    let deg = rng.gen_range(1..=4);
    random_unipoly(rng, deg, false)
}

pub fn linear_instance<R: Rng>(rng: &mut R, arity: usize) -> Polynomial {
    let mut l = Polynomial::zero(arity);
    for i in 0..arity {
        l += &Polynomial::var(arity, i).scale(&nonzero_rational(rng));
    }
    apply_outer(&random_outer(rng), &l)
}

pub fn power_product_instance<R: Rng>(rng: &mut R, arity: usize) -> Polynomial {
    let exps: Vec<u32> = loop {
        let e: Vec<u32> = (0..arity).map(|_| rng.gen_range(1..=4)).collect();
        if e.iter().fold(0, |g, &x| num_integer::gcd(g, x)) == 1 {
            break e;
        }
    };
    let mut w = Polynomial::one(arity);
    for (i, &e) in exps.iter().enumerate() {
        let lin = &Polynomial::var(arity, i) + &Polynomial::constant(arity, small_rational(rng));
        w = &w * &lin.pow(e);
    }
    let deg = rng.gen_range(1..=if arity == 3 { 2 } else { 4 });
    apply_outer(&random_unipoly(rng, deg, false), &w)
}

pub fn additive_instance<R: Rng>(rng: &mut R, arity: usize) -> Polynomial {
    let mut w = Polynomial::zero(arity);
    for i in 0..arity {
        let d = rng.gen_range(1..=4);
        w += &random_unipoly(rng, d, true).to_poly(arity, i);
    }
    apply_outer(&random_outer(rng), &w)
}

pub fn multiplicative_instance<R: Rng>(rng: &mut R, arity: usize) -> Polynomial {
    let mut w = Polynomial::one(arity);
    for i in 0..arity {
        let d = rng.gen_range(1..=4);
        w = &w * &random_unipoly(rng, d, false).to_poly(arity, i);
    }
    apply_outer(&random_outer(rng), &w)
}

/// Sparse polynomial with up to `terms` terms, exponents up to `max_exp`.
pub fn random_polynomial<R: Rng>(rng: &mut R, arity: usize, terms: usize, max_exp: u32) -> Polynomial {
    let n = rng.gen_range(0..=terms);
    Polynomial::from_terms(
        arity,
        (0..n).map(|_| {
            let e: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..=max_exp)).collect();
            (e, small_rational(rng))
        }),
    )
}

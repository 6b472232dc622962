use crate::poly::{extract_outer_by_peeling, multivariate_gcd, Polynomial, UniPoly};
use crate::rational::Rational;

use super::linsolve::solve;
use super::{nonvanishing_point, MultiplicativeFormResult};

/// Reduced ratio `F_x / F_j = A(x) B(x_j) / (P(x) Q(x_j))`.
struct PairRatio {
    a: UniPoly,
    b: UniPoly,
    p: UniPoly,
    q: UniPoly,
}

/// Finds `f` and monic inners with `F = f(g(x) h(y) [u(z)])`.
///
/// Here `F_x / F_j = (g'/g)(x) * (g_j/g_j')(x_j)`, so the reduced ratio splits
/// into an `x` part and an `x_j` part: `g'/g = lambda A/P` and
/// `g_j'/g_j = lambda Q/B`. For each candidate degree of `g` the scalar
/// `lambda` is forced by leading coefficients and `g` solves a linear system;
/// the smallest degree that yields a verified decomposition wins. `f` is
/// peeled from `F` with the other variables fixed at the first non-negative
/// integers where their inners do not vanish.
pub fn detect_multiplicative_form(f: &Polynomial) -> Option<MultiplicativeFormResult> {
    let n = f.arity();
    if n < 2 || f.dependent_vars().len() != n {
        return None;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    for j in 1..n {
        let slice = plane(f, j)?;
        let f0 = slice.partial_derivative(0).ok()?;
        let fj = slice.partial_derivative(j).ok()?;
        let g = multivariate_gcd(&f0, &fj);
        let (a, b) = split(&f0.div_exact(&g)?, j)?;
        let (p, q) = split(&fj.div_exact(&g)?, j)?;
        pairs.push(PairRatio { a, b, p, q });
    }

    let top = f.degree_in(0)?;
    (1..=top as usize).find_map(|d0| attempt(f, &pairs, d0))
}

fn attempt(f: &Polynomial, pairs: &[PairRatio], d0: usize) -> Option<MultiplicativeFormResult> {
    let first = &pairs[0];
    let lambda = lead_ratio(d0, &first.p, &first.a);
    let g0 = solve_log_derivative(&first.p, &first.a, &lambda, d0)?;

    let mut inners = vec![g0.clone()];
    for (j, pair) in pairs.iter().enumerate() {
        let lambda = lead_ratio(d0, &pair.p, &pair.a);
        if &g0.derivative() * &pair.p != (&pair.a * &g0).scale(&lambda) {
            return None;
        }
        let dj = &(&lambda * &pair.q.leading_coeff()) / &pair.b.leading_coeff();
        let max_dj = f.degree_in(j + 1)? as i64;
        let dj = dj.to_i64().filter(|d| (1..=max_dj).contains(d))?;
        inners.push(solve_log_derivative(&pair.b, &pair.q, &lambda, dj as usize)?);
    }

    let mut on_line = f.clone();
    let mut scale = Rational::one();
    for (j, g) in inners.iter().enumerate().skip(1) {
        let t = nonvanishing_point(g);
        scale *= &g.eval(&t);
        on_line = on_line.specialize(j, &t);
    }
    let p = on_line.to_univariate(0).ok()?;
    let outer = extract_outer_by_peeling(&p, &g0.scale(&scale))?;
    MultiplicativeFormResult::new(f, outer, inners).ok()
}

/// `d * lc(p) / lc(a)`: the scalar making a monic degree-`d` solution of
/// `g' p = lambda a g` consistent at the top coefficient.
fn lead_ratio(d: usize, p: &UniPoly, a: &UniPoly) -> Rational {
    &(&Rational::from(d as i64) * &p.leading_coeff()) / &a.leading_coeff()
}

/// Monic `g` of degree `d` with `g' p - lambda a g = 0`.
fn solve_log_derivative(p: &UniPoly, a: &UniPoly, lambda: &Rational, d: usize) -> Option<UniPoly> {
    let apply = |k: usize| -> UniPoly {
        let xk = UniPoly::x().pow(k as u32);
        &(&xk.derivative() * p) - &(&xk * a).scale(lambda)
    };
    let columns: Vec<UniPoly> = (0..d).map(apply).collect();
    let target = apply(d);
    let rows = columns
        .iter()
        .map(UniPoly::deg)
        .chain(std::iter::once(target.deg()))
        .max()
        .unwrap_or(0)
        + 1;
    let matrix: Vec<Vec<Rational>> = (0..rows)
        .map(|r| columns.iter().map(|c| c.coeff(r)).collect())
        .collect();
    let rhs: Vec<Rational> = (0..rows).map(|r| -target.coeff(r)).collect();
    let mut coeffs = if d == 0 {
        rhs.iter().all(Rational::is_zero).then(Vec::new)?
    } else {
        solve(matrix, rhs)?
    };
    coeffs.push(Rational::one());
    let g = UniPoly::new(coeffs);
    (&g.derivative() * p == (a * &g).scale(lambda)).then_some(g)
}

/// `F` with every variable other than `x_0` and `x_j` fixed at the first
/// non-negative integer keeping both dependencies. A fixed inner factor is a
/// nonzero constant there, so the ratio of partials is unchanged.
fn plane(f: &Polynomial, j: usize) -> Option<Polynomial> {
    let mut slice = f.clone();
    for v in (1..f.arity()).filter(|&v| v != j) {
        slice = (0..=f.total_degree()? as i64 + 1).find_map(|c| {
            let s = slice.specialize(v, &Rational::from(c));
            (s.depends_on(0) && s.depends_on(j)).then_some(s)
        })?;
    }
    Some(slice)
}

/// Writes `m = A(x_0) B(x_j)`, with `A` primitive.
fn split(m: &Polynomial, j: usize) -> Option<(UniPoly, UniPoly)> {
    if m.dependent_vars().iter().any(|&v| v != 0 && v != j) {
        return None;
    }
    let mut a = Polynomial::zero(m.arity());
    for c in m.coefficients_in(j) {
        if !c.is_zero() {
            a = multivariate_gcd(&a, &c);
        }
    }
    let b = m.div_exact(&a)?;
    Some((a.to_univariate(0).ok()?, b.to_univariate(j).ok()?))
}

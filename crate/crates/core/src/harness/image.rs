//! Exact distinct-value counting of a polynomial over a grid.
//!
//! Values and coefficients are scaled to integers first: with `L_v` the
//! common denominator of variable `v`'s values and `D` that of the
//! coefficients, `D * prod L_v^deg_v * F(x)` is an integer polynomial in the
//! scaled values. Scaling is injective, so counts are unchanged. When a
//! coefficient-size bound shows every intermediate fits in `i128` the grid is
//! evaluated natively, otherwise with big integers.
//!
//! The grid is split on all but the last variable; for each prefix the
//! polynomial collapses to a univariate one in the last variable, evaluated
//! from power tables. Shards produce sorted distinct runs (or set bits in a
//! shared bitmap when the value range is small) that merge associatively, so
//! parallel and sequential runs give the same answer.

use std::ops::{Add, Mul};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::poly::Polynomial;
use crate::rational::{common_denominator, Rational};

use super::HarnessError;

/// Largest grid the counter accepts.
pub const MAX_GRID_POINTS: u128 = 20_000_000_000;

const BITMAP_MAX_BITS: u128 = 1 << 30;
const COMPACT_MIN: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

trait Int: Clone + Ord + Send + Sync + Zero + Add<Output = Self> + for<'a> Mul<&'a Self, Output = Self> {}
impl<T> Int for T where T: Clone + Ord + Send + Sync + Zero + Add<Output = T> + for<'a> Mul<&'a T, Output = T> {}

struct Plan<T> {
    /// `pows[v][i][e] = X_v[i]^e`.
    pows: Vec<Vec<Vec<T>>>,
    /// Terms grouped by exponent of the last variable: (prefix exponents, coefficient).
    groups: Vec<Vec<(Vec<u32>, T)>>,
    sizes: Vec<usize>,
}

impl<T: Int> Plan<T> {
    fn prefix_count(&self) -> usize {
        self.sizes[..self.sizes.len() - 1].iter().product()
    }

    fn eval_prefix(&self, mut idx: usize, emit: &mut impl FnMut(T)) {
        let n = self.sizes.len();
        let mut point = vec![0usize; n - 1];
        for v in (0..n - 1).rev() {
            point[v] = idx % self.sizes[v];
            idx /= self.sizes[v];
        }
        let coeffs: Vec<T> = self
            .groups
            .iter()
            .map(|terms| {
                terms.iter().fold(T::zero(), |acc, (e, c)| {
                    let mut t = c.clone();
                    for (v, &k) in e.iter().enumerate() {
                        if k > 0 {
                            t = t * &self.pows[v][point[v]][k as usize];
                        }
                    }
                    acc + t
                })
            })
            .collect();
        let last = &self.pows[n - 1];
        for row in last {
            let mut val = T::zero();
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    val = val + c.clone() * &row[k];
                }
            }
            emit(val);
        }
    }
}

/// Integer form of the evaluation problem: `F = Q(X) / denom`.
struct Scaled {
    xs: Vec<Vec<BigInt>>,
    terms: Vec<(Vec<u32>, BigInt)>,
    degrees: Vec<u32>,
    denom: BigInt,
}

fn scale(p: &Polynomial, values: &[Vec<Rational>]) -> Scaled {
    let n = p.arity();
    let dens: Vec<BigInt> = values.iter().map(|vs| common_denominator(vs)).collect();
    let xs: Vec<Vec<BigInt>> = values
        .iter()
        .zip(&dens)
        .map(|(vs, l)| vs.iter().map(|v| (v.as_big() * l).to_integer()).collect())
        .collect();
    let degrees: Vec<u32> = (0..n).map(|v| p.degree_in(v).unwrap_or(0)).collect();
    let coeff_den = common_denominator(p.terms().map(|(_, c)| c));
    let mut denom = coeff_den.clone();
    for (l, &d) in dens.iter().zip(&degrees) {
        denom *= num_traits::pow(l.clone(), d as usize);
    }
    let terms = p
        .terms()
        .map(|(m, c)| {
            let mut big = (c.as_big() * &coeff_den).to_integer();
            for (v, &e) in m.exponents().iter().enumerate() {
                big *= num_traits::pow(dens[v].clone(), (degrees[v] - e) as usize);
            }
            (m.exponents().to_vec(), big)
        })
        .collect();
    Scaled {
        xs,
        terms,
        degrees,
        denom,
    }
}

impl Scaled {
    /// Bounds every partial sum and every power-table entry met during
    /// evaluation: `sum |C_m| prod max(|X_v|, 1)^e_v`.
    fn bound(&self) -> BigInt {
        let maxes: Vec<BigInt> = self
            .xs
            .iter()
            .map(|col| col.iter().map(BigInt::abs).max().unwrap_or_default().max(BigInt::from(1)))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .enumerate()
                    .fold(c.abs(), |acc, (v, &k)| acc * num_traits::pow(maxes[v].clone(), k as usize))
            })
            .sum()
    }

    fn plan<T: Int>(&self, conv: impl Fn(&BigInt) -> T) -> Plan<T> {
        let n = self.xs.len();
        let pows = self
            .xs
            .iter()
            .zip(&self.degrees)
            .map(|(col, &d)| {
                col.iter()
                    .map(|x| {
                        let mut row = Vec::with_capacity(d as usize + 1);
                        let mut acc = BigInt::from(1);
                        row.push(conv(&acc));
                        for _ in 0..d {
                            acc *= x;
                            row.push(conv(&acc));
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        let mut groups: Vec<Vec<(Vec<u32>, T)>> = vec![Vec::new(); self.degrees[n - 1] as usize + 1];
        for (e, c) in &self.terms {
            groups[e[n - 1] as usize].push((e[..n - 1].to_vec(), conv(c)));
        }
        Plan {
            pows,
            groups,
            sizes: self.xs.iter().map(Vec::len).collect(),
        }
    }
}

struct Run<T> {
    vals: Vec<T>,
    compact_at: usize,
}

impl<T: Ord> Run<T> {
    fn new() -> Self {
        Run {
            vals: Vec::new(),
            compact_at: COMPACT_MIN,
        }
    }

    fn push(&mut self, v: T) {
        self.vals.push(v);
        if self.vals.len() >= self.compact_at {
            self.finish_in_place();
            self.compact_at = (2 * self.vals.len()).max(COMPACT_MIN);
        }
    }

    fn finish_in_place(&mut self) {
        self.vals.sort_unstable();
        self.vals.dedup();
    }

    fn finish(mut self) -> Vec<T> {
        self.finish_in_place();
        self.vals
    }
}

fn merge_sorted<T: Ord>(a: Vec<T>, b: Vec<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let next = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => match x.cmp(y) {
                std::cmp::Ordering::Less => a.next(),
                std::cmp::Ordering::Greater => b.next(),
                std::cmp::Ordering::Equal => {
                    b.next();
                    a.next()
                }
            },
            (Some(_), None) => a.next(),
            (None, Some(_)) => b.next(),
            (None, None) => break,
        };
        out.extend(next);
    }
    out
}

fn distinct_sorted<T: Int>(plan: &Plan<T>, exec: Execution) -> Vec<T> {
    let shard = |idx: usize, run: &mut Run<T>| plan.eval_prefix(idx, &mut |v| run.push(v));
    match exec {
        Execution::Sequential => {
            let mut run = Run::new();
            for idx in 0..plan.prefix_count() {
                shard(idx, &mut run);
            }
            run.finish()
        }
        Execution::Parallel => (0..plan.prefix_count())
            .into_par_iter()
            .fold(Run::new, |mut run, idx| {
                shard(idx, &mut run);
                run
            })
            .map(Run::finish)
            .reduce(Vec::new, merge_sorted),
    }
}

fn count_bitmap(plan: &Plan<i128>, lo: i128, bits: usize, exec: Execution) -> u64 {
    let words: Vec<AtomicU64> = (0..bits / 64 + 1).map(|_| AtomicU64::new(0)).collect();
    let mark = |v: i128| {
        let i = (v - lo) as usize;
        words[i >> 6].fetch_or(1 << (i & 63), Ordering::Relaxed);
    };
    match exec {
        Execution::Sequential => {
            for idx in 0..plan.prefix_count() {
                plan.eval_prefix(idx, &mut |v| mark(v));
            }
        }
        Execution::Parallel => (0..plan.prefix_count())
            .into_par_iter()
            .for_each(|idx| plan.eval_prefix(idx, &mut |v| mark(v))),
    }
    words
        .iter()
        .map(|w| w.load(Ordering::Relaxed).count_ones() as u64)
        .sum()
}

fn check_grid(p: &Polynomial, values: &[Vec<Rational>]) -> Result<(), HarnessError> {
    if values.len() != p.arity() {
        return Err(HarnessError::ArityMismatch {
            expected: p.arity(),
            found: values.len(),
        });
    }
    if values.iter().any(Vec::is_empty) {
        return Err(HarnessError::InvalidSpec("empty value set".into()));
    }
    let points = values
        .iter()
        .fold(1u128, |acc, v| acc.saturating_mul(v.len() as u128));
    if points > MAX_GRID_POINTS {
        return Err(HarnessError::GridTooLarge(points));
    }
    Ok(())
}

/// Number of distinct values of `p` on the grid `values[0] x values[1] x ...`.
pub fn count_image(p: &Polynomial, values: &[Vec<Rational>], exec: Execution) -> Result<u64, HarnessError> {
    check_grid(p, values)?;
    if p.arity() == 0 {
        return Ok(1);
    }
    let scaled = scale(p, values);
    let bound = scaled.bound();
    if bound.bits() < 126 {
        let b = bound.to_i128().expect("fits by the bit count");
        let plan = scaled.plan(|x| x.to_i128().expect("bounded by the term bound"));
        let range = 2 * b as u128 + 1;
        let points: u128 = plan.sizes.iter().map(|&s| s as u128).product();
        if range <= BITMAP_MAX_BITS && range <= 64 * points.max(1) {
            return Ok(count_bitmap(&plan, -b, range as usize, exec));
        }
        return Ok(distinct_sorted(&plan, exec).len() as u64);
    }
    let plan = scaled.plan(BigInt::clone);
    Ok(distinct_sorted(&plan, exec).len() as u64)
}

/// Distinct values of `p` on the grid, in increasing order.
pub fn image_values(p: &Polynomial, values: &[Vec<Rational>]) -> Result<Vec<Rational>, HarnessError> {
    check_grid(p, values)?;
    if p.arity() == 0 {
        return Ok(vec![p.constant_term()]);
    }
    let scaled = scale(p, values);
    let plan = scaled.plan(BigInt::clone);
    let denom = Rational::from(scaled.denom.clone());
    Ok(distinct_sorted(&plan, Execution::Sequential)
        .into_iter()
        .map(|q| &Rational::from(q) / &denom)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_with;
    use std::collections::BTreeSet;

    fn brute(p: &Polynomial, values: &[Vec<Rational>]) -> BTreeSet<Rational> {
        let mut out = BTreeSet::new();
        let mut idx = vec![0usize; values.len()];
        'outer: loop {
            let point: Vec<Rational> = idx.iter().enumerate().map(|(v, &i)| values[v][i].clone()).collect();
            out.insert(p.evaluate(&point).unwrap());
            for v in (0..idx.len()).rev() {
                idx[v] += 1;
                if idx[v] < values[v].len() {
                    continue 'outer;
                }
                idx[v] = 0;
            }
            break;
        }
        out
    }

    fn range(a: i64, b: i64) -> Vec<Rational> {
        (a..=b).map(Rational::from).collect()
    }

    #[test]
    fn sum_over_progressions() {
        let p = parse_with("x+y", &["x", "y"]).unwrap();
        let v = vec![range(1, 5), range(1, 5)];
        assert_eq!(count_image(&p, &v, Execution::Parallel).unwrap(), 9);
        assert_eq!(count_image(&p, &v, Execution::Sequential).unwrap(), 9);
    }

    #[test]
    fn rational_values_match_brute_force() {
        let p = parse_with("1/3x^2y-2/5z+xz^2", &["x", "y", "z"]).unwrap();
        let v = vec![
            vec![Rational::new(1, 2).unwrap(), Rational::from(-3), Rational::new(7, 4).unwrap()],
            range(-2, 2),
            vec![Rational::new(-1, 3).unwrap(), Rational::from(0), Rational::new(5, 6).unwrap()],
        ];
        let expected = brute(&p, &v);
        assert_eq!(count_image(&p, &v, Execution::Parallel).unwrap() as usize, expected.len());
        assert_eq!(image_values(&p, &v).unwrap(), expected.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn big_integer_path() {
        let p = parse_with("x^40+y^40-x^20y^20", &["x", "y"]).unwrap();
        let v = vec![range(-30, 30), range(1000, 1010)];
        let expected = brute(&p, &v).len() as u64;
        assert_eq!(count_image(&p, &v, Execution::Parallel).unwrap(), expected);
        assert_eq!(count_image(&p, &v, Execution::Sequential).unwrap(), expected);
    }

    #[test]
    fn sparse_large_values_use_sorted_runs() {
        let p = parse_with("x^3+1000000y", &["x", "y"]).unwrap();
        let v = vec![range(-200, 200), range(-50, 50)];
        let expected = brute(&p, &v).len() as u64;
        assert_eq!(count_image(&p, &v, Execution::Parallel).unwrap(), expected);
    }

    #[test]
    fn negative_coefficients_keep_order() {
        let p = parse_with("-1/2x", &["x"]).unwrap();
        let vals = image_values(&p, &[range(1, 3)]).unwrap();
        assert_eq!(vals, vec![Rational::new(-3, 2).unwrap(), Rational::from(-1), Rational::new(-1, 2).unwrap()]);
    }

    #[test]
    fn grid_limits() {
        let p = parse_with("x+y", &["x", "y"]).unwrap();
        assert!(matches!(
            count_image(&p, &[range(1, 3)], Execution::Parallel),
            Err(HarnessError::ArityMismatch { .. })
        ));
    }
}

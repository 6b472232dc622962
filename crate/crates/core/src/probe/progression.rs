use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::poly::UniPoly;
use crate::rational::{common_denominator, Rational};

use super::height::enumerate_rationals_by_height;
use super::ProbeError;

/// Largest set the quadratic progression search accepts.
pub const MAX_PROGRESSION_VALUES: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProgressionKind {
    Arithmetic,
    Geometric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progression {
    pub length: usize,
    /// One progression of maximal length, in increasing order (by absolute
    /// value for geometric ones).
    pub witness: Vec<Rational>,
}

/// Longest arithmetic or geometric progression contained in `values`.
///
/// Values are sorted (by absolute value for the geometric kind, where 0 is
/// dropped and ratios -1 and 1 are excluded). A pair `(v_i, v_j)` extends the
/// progression ending in `(v_k, v_i)` where `v_k` is the predicted previous
/// term `2 v_i - v_j` (resp. `v_i^2 / v_j`), found by binary search. Only
/// pairs that extend something are stored, so memory stays proportional to
/// the number of three-term progressions.
pub fn find_longest_progression(kind: ProgressionKind, values: &[Rational]) -> Result<Progression, ProbeError> {
    if values.is_empty() {
        return Err(ProbeError::EmptyInput);
    }
    if values.len() > MAX_PROGRESSION_VALUES {
        return Err(ProbeError::TooManyValues(values.len()));
    }
    match kind {
        ProgressionKind::Arithmetic => Ok(longest_arithmetic(values)),
        ProgressionKind::Geometric => Ok(longest_geometric(values)),
    }
}

fn longest_arithmetic(values: &[Rational]) -> Progression {
    let mut sorted = values.to_vec();
    sorted.sort();
    sorted.dedup();
    let l = Rational::from(common_denominator(&sorted));
    let ints: Vec<BigInt> = sorted
        .iter()
        .map(|v| (v * &l).to_integer().expect("scaled by the common denominator"))
        .collect();
    let fits = ints
        .iter()
        .all(|v| v.to_i128().is_some_and(|x| x.unsigned_abs() < 1u128 << 120));
    let idx = if fits {
        let small: Vec<i128> = ints.iter().map(|v| v.to_i128().expect("checked")).collect();
        longest_by(&small, |i, j| Some(2 * small[i] - small[j]), |_, _| true)
    } else {
        longest_by(&ints, |i, j| Some(&ints[i] * 2 - &ints[j]), |_, _| true)
    };
    Progression {
        length: idx.len(),
        witness: idx.into_iter().map(|i| sorted[i].clone()).collect(),
    }
}

fn longest_geometric(values: &[Rational]) -> Progression {
    let mut keyed: Vec<(Rational, bool, Rational)> = values
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| (v.abs(), v.is_negative(), v.clone()))
        .collect();
    keyed.sort();
    keyed.dedup();
    let keys: Vec<(Rational, bool)> = keyed.iter().map(|(a, s, _)| (a.clone(), *s)).collect();
    let idx = longest_by(
        &keys,
        |i, j| {
            let prev = &(&keyed[i].2 * &keyed[i].2) / &keyed[j].2;
            Some((prev.abs(), prev.is_negative()))
        },
        |i, j| keys[i].0 != keys[j].0,
    );
    Progression {
        length: idx.len(),
        witness: idx.into_iter().map(|i| keyed[i].2.clone()).collect(),
    }
}

/// Indices of a longest chain `k_1 < k_2 < ...` in sorted `keys` where every
/// consecutive triple satisfies `keys[a] = prev(b, c)`.
fn longest_by<K: Ord>(
    keys: &[K],
    prev: impl Fn(usize, usize) -> Option<K>,
    valid: impl Fn(usize, usize) -> bool,
) -> Vec<usize> {
    let n = keys.len();
    if n == 0 {
        return Vec::new();
    }
    let lookup = |i: usize, j: usize| -> Option<usize> {
        let k = keys[..i].binary_search(&prev(i, j)?).ok()?;
        valid(k, i).then_some(k)
    };
    let mut long: HashMap<(u32, u32), u32> = HashMap::new();
    let mut best: (u32, usize, usize) = (1, 0, 0);
    for j in 1..n {
        for i in 0..j {
            if !valid(i, j) {
                continue;
            }
            let len = match lookup(i, j) {
                Some(k) => long.get(&(k as u32, i as u32)).copied().unwrap_or(2) + 1,
                None => 2,
            };
            if len > 2 {
                long.insert((i as u32, j as u32), len);
            }
            if len > best.0 {
                best = (len, i, j);
            }
        }
    }
    let (len, mut i, mut j) = best;
    if len == 1 {
        return vec![0];
    }
    let mut out = vec![j, i];
    while out.len() < len as usize {
        let k = lookup(i, j).expect("recorded chains extend");
        out.push(k);
        j = i;
        i = k;
    }
    out.reverse();
    out
}

/// Finite domain for [`range_progression_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// Integers in `[-n, n]`.
    Integers(u64),
    /// Rationals of height at most `h`.
    Height(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeProbeReport {
    /// Number of distinct values of the (possibly shifted) polynomial.
    pub range_size: usize,
    pub length: usize,
    pub witness: Vec<Rational>,
    /// Domain points mapping to each witness value.
    pub preimages: Vec<Vec<Rational>>,
    /// `c (x - r)^m + k` or degree at most 1: the exceptional family with
    /// long progressions.
    pub shifted_pure_power: bool,
}

/// Longest progression in the range of `g` over the domain. With `shift`
/// set to `a`, works with `h_a(x) = g(x + a) - g(a)` instead.
pub fn range_progression_probe(
    g: &UniPoly,
    domain: Domain,
    kind: ProgressionKind,
    shift: Option<&Rational>,
) -> Result<RangeProbeReport, ProbeError> {
    let poly = match shift {
        Some(a) => &g.compose(&UniPoly::new(vec![a.clone(), Rational::one()])) - &UniPoly::constant(g.eval(a)),
        None => g.clone(),
    };
    let points: Vec<Rational> = match domain {
        Domain::Integers(n) => {
            if n == 0 || n > MAX_PROGRESSION_VALUES as u64 {
                return Err(ProbeError::InvalidParameter("integer bound out of range".into()));
            }
            let n = n as i64;
            (-n..=n).map(Rational::from).collect()
        }
        Domain::Height(h) => enumerate_rationals_by_height(h)?,
    };
    let mut range: BTreeMap<Rational, Vec<Rational>> = BTreeMap::new();
    for x in points {
        range.entry(poly.eval(&x)).or_default().push(x);
    }
    let values: Vec<Rational> = range.keys().cloned().collect();
    let prog = find_longest_progression(kind, &values)?;
    let preimages = prog.witness.iter().map(|v| range[v].clone()).collect();
    let shifted_pure_power = poly.deg() <= 1 || poly.derivative().linear_power_test().is_some();
    Ok(RangeProbeReport {
        range_size: values.len(),
        length: prog.length,
        witness: prog.witness,
        preimages,
        shifted_pure_power,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquaresReport {
    pub n: u64,
    pub four_term_found: bool,
    pub three_term_count: u64,
    /// First three-term progression of squares, by smallest first term.
    pub example: Option<[u64; 3]>,
}

/// Exhaustive check that `{1^2, ..., N^2}` has no four-term arithmetic
/// progression, counting three-term ones on the way.
pub fn squares_no_4ap_check(n: u64) -> Result<SquaresReport, ProbeError> {
    if !(4..=1_000_000).contains(&n) {
        return Err(ProbeError::InvalidParameter("N must be between 4 and 10^6".into()));
    }
    let top = (n as u128) * (n as u128);
    let square_root = |v: u128| -> Option<u128> {
        let r = v.sqrt();
        (r * r == v).then_some(r)
    };
    let mut count = 0;
    let mut example = None;
    let mut four = false;
    for i in 1..=n as u128 {
        for j in i + 1..=n as u128 {
            let (a, b) = (i * i, j * j);
            let c = 2 * b - a;
            if c > top || square_root(c).is_none() {
                continue;
            }
            count += 1;
            example.get_or_insert([a as u64, b as u64, c as u64]);
            let d = 2 * c - b;
            if d <= top && square_root(d).is_some() {
                four = true;
            }
        }
    }
    Ok(SquaresReport {
        n,
        four_term_found: four,
        three_term_count: count,
        example,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn squares_have_three_term_progressions() {
        let sq: Vec<Rational> = (1..=100).map(|i| Rational::from(i * i)).collect();
        let p = find_longest_progression(ProgressionKind::Arithmetic, &sq).unwrap();
        assert_eq!(p.length, 3);
        assert_eq!(p.witness[1].clone() * Rational::from(2), &p.witness[0] + &p.witness[2]);
    }

    #[test]
    fn whole_interval() {
        let v: Vec<Rational> = (1..=10).map(Rational::from).collect();
        assert_eq!(find_longest_progression(ProgressionKind::Arithmetic, &v).unwrap().length, 10);
    }

    #[test]
    fn geometric() {
        let p = find_longest_progression(ProgressionKind::Geometric, &ints(&[1, 2, 4, 9])).unwrap();
        assert_eq!(p.length, 3);
        assert_eq!(p.witness, ints(&[1, 2, 4]));
        let p = find_longest_progression(ProgressionKind::Geometric, &ints(&[-8, 4, -2, 1, 0])).unwrap();
        assert_eq!(p.witness, ints(&[1, -2, 4, -8]));
        let p = find_longest_progression(ProgressionKind::Geometric, &ints(&[1, -1])).unwrap();
        assert_eq!(p.length, 1);
        let p = find_longest_progression(ProgressionKind::Geometric, &ints(&[0])).unwrap();
        assert_eq!(p.length, 0);
    }

    #[test]
    fn rational_progressions() {
        let v = vec![
            Rational::new(1, 2).unwrap(),
            Rational::new(5, 6).unwrap(),
            Rational::new(7, 6).unwrap(),
            Rational::from(3),
        ];
        assert_eq!(find_longest_progression(ProgressionKind::Arithmetic, &v).unwrap().length, 3);
    }

    #[test]
    fn range_probes() {
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        let r = range_progression_probe(&sq, Domain::Integers(100), ProgressionKind::Arithmetic, None).unwrap();
        assert_eq!(r.length, 3);
        let id = UniPoly::x();
        let r = range_progression_probe(&id, Domain::Integers(10), ProgressionKind::Arithmetic, None).unwrap();
        assert_eq!(r.length, 21);
        assert!(r.shifted_pure_power);
        let cube = UniPoly::from_ints(&[0, 3, 3, 1]);
        let r = range_progression_probe(&cube, Domain::Integers(50), ProgressionKind::Geometric, None).unwrap();
        assert!(r.shifted_pure_power);
        assert!(r.length >= 2);
    }

    #[test]
    fn shift_reduction() {
        let g = UniPoly::from_ints(&[5, 0, 1]);
        let r = range_progression_probe(&g, Domain::Integers(5), ProgressionKind::Arithmetic, Some(&Rational::from(1)))
            .unwrap();
        // h_1(x) = x^2 + 2x
        assert!(r.preimages.iter().all(|p| !p.is_empty()));
    }

    #[test]
    fn squares_report() {
        let r = squares_no_4ap_check(10).unwrap();
        assert!(!r.four_term_found);
        assert_eq!(r.example, Some([1, 25, 49]));
        assert!(!squares_no_4ap_check(100).unwrap().four_term_found);
        assert!(!squares_no_4ap_check(4).unwrap().four_term_found);
        assert!(squares_no_4ap_check(3).is_err());
    }
}

use serde::{Deserialize, Serialize};

use crate::decompose::{detect_additive_form, AdditiveFormResult};
use crate::poly::Polynomial;

use super::image::{count_image, Execution};
use super::record::{image_size, resolve_grid};
use super::sets::SetSpec;
use super::HarnessError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub sizes: Vec<usize>,
    pub counts: Vec<u64>,
    /// Least-squares slope of `ln(count)` against `ln(n)`.
    pub slope: f64,
    pub intercept: f64,
}

/// Measures `F` on the family with every progression length set to each
/// `n`, and fits `count ~ C n^slope`. Purely empirical.
pub fn growth_sweep(f: &Polynomial, family: &[SetSpec], sizes: &[usize]) -> Result<GrowthReport, HarnessError> {
    if sizes.contains(&0) {
        return Err(HarnessError::SizeTooSmall);
    }
    let distinct: std::collections::BTreeSet<usize> = sizes.iter().copied().collect();
    if distinct.len() < 2 {
        return Err(HarnessError::TooFewSizes);
    }
    let counts = sizes
        .iter()
        .map(|&n| {
            let sets: Vec<SetSpec> = family.iter().map(|s| s.with_count(n)).collect();
            image_size(f, &sets).map(|r| r.count)
        })
        .collect::<Result<Vec<u64>, _>>()?;

    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|&c| (c as f64).ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    Ok(GrowthReport {
        sizes: sizes.to_vec(),
        counts,
        slope,
        intercept: my - slope * mx,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    /// `|g(A) + h(B) [+ u(C)]|`.
    pub inner_sum_count: u64,
    /// `|F(A, B [, C])|`.
    pub image_count: u64,
    /// Total degree of `F`.
    pub degree: u32,
    /// `|g(A)+h(B)| <= d |F(A,B)|` and `|F(A,B)| <= |g(A)+h(B)|`.
    pub holds: bool,
}

/// For `F = f(g(x) + h(y) [+ u(z)])`, checks
/// `|g(A)+h(B)| <= d |F(A,B)| <= d |g(A)+h(B)|` with `d = deg F`: each value
/// of `f` has at most `d` preimages and `F` factors through the inner sum.
/// Uses `form` when given, otherwise detects it.
pub fn fiber_inequality_check(
    f: &Polynomial,
    form: Option<&AdditiveFormResult>,
    sets: &[SetSpec],
) -> Result<FiberReport, HarnessError> {
    let detected;
    let form = match form {
        Some(a) => a,
        None => {
            detected = detect_additive_form(f).ok_or(HarnessError::MissingDecomposition)?;
            &detected
        }
    };
    if form.arity() != f.arity() || form.recompose() != *f {
        return Err(HarnessError::MissingDecomposition);
    }
    let image_count = image_size(f, sets)?.count;
    let (inner, values) = resolve_grid(&form.inner_sum(), sets)?;
    let inner_sum_count = count_image(&inner, &values, Execution::Parallel)?;
    let degree = f.total_degree().unwrap_or(0);
    let d = degree as u64;
    Ok(FiberReport {
        inner_sum_count,
        image_count,
        degree,
        holds: inner_sum_count <= d * image_count && image_count <= inner_sum_count,
    })
}

//! Small numerical helpers shared across the crate.

/// Log of the sum of exponentials, stable for large-magnitude inputs.
///
/// Returns `-inf` for an empty slice or when every entry is `-inf`.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        // All -inf (or empty, or a NaN/+inf slipped in): nothing to rescale.
        return max;
    }
    let sum: f64 = values.iter().map(|v| (v - max).exp()).sum();
    max + sum.ln()
}

/// Central finite-difference gradient of `f` at `x` with step `h` per coordinate.
pub fn central_difference_gradient<F>(f: F, x: &[f64], h: f64) -> Vec<f64>
where
    F: Fn(&[f64]) -> f64,
{
    let mut grad = vec![0.0; x.len()];
    let mut probe = x.to_vec();
    for d in 0..x.len() {
        probe[d] = x[d] + h;
        let fp = f(&probe);
        probe[d] = x[d] - h;
        let fm = f(&probe);
        probe[d] = x[d];
        grad[d] = (fp - fm) / (2.0 * h);
    }
    grad
}

/// Mean of a slice; NaN on empty input.
pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Population variance (1/N convention).
pub fn variance(values: &[f64]) -> f64 {
    let m = mean(values);
    values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / values.len() as f64
}

/// Median of a slice (average of the middle pair for even lengths).
pub fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_sum_exp_matches_naive_in_safe_range() {
        let vals = [0.5, -1.2, 2.0];
        let naive = vals.iter().map(|v| v.exp()).sum::<f64>().ln();
        assert!((log_sum_exp(&vals) - naive).abs() < 1e-12);
    }

    #[test]
    fn log_sum_exp_survives_large_magnitudes() {
        let vals = [-1200.0, -1201.0];
        let expected = -1200.0 + (1.0 + (-1.0f64).exp()).ln();
        assert!((log_sum_exp(&vals) - expected).abs() < 1e-12);
        assert_eq!(log_sum_exp(&[f64::NEG_INFINITY; 3]), f64::NEG_INFINITY);
    }

    #[test]
    fn central_difference_recovers_quadratic_gradient() {
        let f = |x: &[f64]| -0.5 * x.iter().map(|v| v * v).sum::<f64>();
        let grad = central_difference_gradient(f, &[1.0, -2.0], 1e-5);
        assert!((grad[0] + 1.0).abs() < 1e-8);
        assert!((grad[1] - 2.0).abs() < 1e-8);
    }

    #[test]
    fn median_handles_even_and_odd() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}

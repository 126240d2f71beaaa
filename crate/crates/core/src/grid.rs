//! Log-spaced grids shared by the index estimators and samplers.

/// Log-spaced points `lo * (hi/lo)^(k/(n-1))`, endpoints included.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2, "bad log grid");
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Points of `ln t` spaced `1/per_decade` decades apart over `[ln_lo, ln_hi]`.
pub fn ln_grid(ln_lo: f64, ln_hi: f64, per_decade: usize) -> Vec<f64> {
    assert!(ln_hi > ln_lo && per_decade >= 1);
    let step = std::f64::consts::LN_10 / per_decade as f64;
    let n = ((ln_hi - ln_lo) / step).ceil() as usize + 1;
    let mut out: Vec<f64> = (0..n).map(|k| ln_lo + step * k as f64).collect();
    if let Some(last) = out.last_mut() {
        *last = ln_hi;
    }
    out
}

/// Linearly spaced points, endpoints included.
pub fn lin_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_space_endpoints() {
        let g = log_space(1e-3, 1e3, 100);
        assert_eq!(g.len(), 100);
        assert!((g[0] - 1e-3).abs() < 1e-18);
        assert!((g[99] - 1e3).abs() < 1e-9);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn ln_grid_covers_range() {
        let g = ln_grid(-2.0, 3.0, 10);
        assert!((g[0] + 2.0).abs() < 1e-15);
        assert!((g.last().unwrap() - 3.0).abs() < 1e-15);
    }
}

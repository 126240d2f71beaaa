//! Dilation functions, dilation exponents and Matuszewska-Orlicz indices.
//!
//! For a positive function `psi` the dilation function is
//! `M(t) = sup_u psi(t u) / psi(u)`; the indices are the limits of
//! `ln M(t) / ln t` at `t -> 0` and `t -> infinity`. Everything here works on
//! the log scale: functions enter through [`LogScaleFn`], suprema are maxima
//! of `ln psi(tu) - ln psi(u)` over log-spaced grids, and slopes are secants
//! of `ln M` against `ln t`.
//!
//! Slowly varying factors (logarithms) make the naive grid secant converge
//! like `1 / ln(u_max)`, which is far too slow for two-digit accuracy on any
//! affordable grid. Each estimate is therefore computed twice, on the full
//! u-range and on the half log-range, and extrapolated in the reciprocal
//! log-range; the spread between the two runs feeds the reported
//! uncertainty.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nfunction::NFunction;

const LN10: f64 = std::f64::consts::LN_10;

/// A positive function exposed on the log scale: `ln_value(s) = ln f(e^s)`.
pub trait LogScaleFn {
    fn ln_value(&self, s: f64) -> Result<f64>;
    /// The `ln t` interval on which `ln_value` is defined.
    fn ln_domain(&self) -> (f64, f64);
}

impl LogScaleFn for NFunction {
    fn ln_value(&self, s: f64) -> Result<f64> {
        self.ln_eval(s)
    }

    fn ln_domain(&self) -> (f64, f64) {
        self.ln_domain()
    }
}

/// The inverse `phi^{-1}` of an N-function, viewed on the log scale.
pub struct InverseFn<'a> {
    phi: &'a NFunction,
    dom: (f64, f64),
}

impl<'a> InverseFn<'a> {
    pub fn new(phi: &'a NFunction) -> Result<Self> {
        let (lo, hi) = phi.ln_domain();
        let dom = (phi.ln_eval(lo)?, phi.ln_eval(hi)?);
        Ok(InverseFn { phi, dom })
    }
}

impl LogScaleFn for InverseFn<'_> {
    fn ln_value(&self, s: f64) -> Result<f64> {
        self.phi.inverse_ln(s)
    }

    fn ln_domain(&self) -> (f64, f64) {
        self.dom
    }
}

/// u-grid over which dilation suprema are taken.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct UGridSpec {
    pub u_min: f64,
    pub u_max: f64,
    pub per_decade: usize,
}

impl Default for UGridSpec {
    fn default() -> Self {
        UGridSpec {
            u_min: 1e-45,
            u_max: 1e45,
            per_decade: 8,
        }
    }
}

/// Grid specification for the index estimators.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct IndexGridSpec {
    /// t-probes for the slope secants; clipped to a third of the function's
    /// log-domain width when that is narrower.
    pub t_min: f64,
    pub t_max: f64,
    pub u: UGridSpec,
    /// Width (in decades) of the windows used for the 0- and infinity-limit
    /// variants of the dilation function.
    pub window_decades: f64,
}

impl Default for IndexGridSpec {
    fn default() -> Self {
        IndexGridSpec {
            t_min: 1e-6,
            t_max: 1e6,
            u: UGridSpec::default(),
            window_decades: 1.0,
        }
    }
}

/// A dilation value on the log scale with a boundary-growth flag.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DilationValue {
    /// `ln M(t)` over the grid.
    pub ln_value: f64,
    /// `M(t)`; may overflow to infinity for extreme slopes, `ln_value` is
    /// always finite.
    pub value: f64,
    /// The running supremum was still growing at the grid boundary.
    pub possibly_infinite: bool,
}

enum SupWindow {
    Full,
    LowDecades(f64),
    HighDecades(f64),
}

/// Core grid supremum of `ln f(tu) - ln f(u)`; `u` is clipped so that both
/// `u` and `tu` stay inside the function's log-domain.
fn ln_dilation_sup(
    f: &dyn LogScaleFn,
    ln_t: f64,
    u: &UGridSpec,
    window: SupWindow,
) -> Result<DilationValue> {
    let (d0, d1) = f.ln_domain();
    // Margin keeps s + ln_t inside the domain despite rounding in the sums.
    let eps = 1e-9;
    let mut lo = u.u_min.ln().max(d0).max(d0 - ln_t) + eps;
    let mut hi = u.u_max.ln().min(d1).min(d1 - ln_t) - eps;
    if !(hi > lo) {
        return Err(Error::range(
            ln_t.exp(),
            "u-grid empty after clipping to the function domain",
        ));
    }
    match window {
        SupWindow::Full => {}
        SupWindow::LowDecades(w) => hi = (lo + w * LN10).min(hi),
        SupWindow::HighDecades(w) => lo = (hi - w * LN10).max(lo),
    }
    let steps = (((hi - lo) / LN10 * u.per_decade as f64).ceil() as usize).max(2);
    let mut best = f64::NEG_INFINITY;
    let mut best_pos = 0usize;
    let mut first = f64::NEG_INFINITY;
    let mut last = f64::NEG_INFINITY;
    for k in 0..=steps {
        let s = lo + (hi - lo) * k as f64 / steps as f64;
        let r = f.ln_value(s + ln_t)? - f.ln_value(s)?;
        if r > best {
            best = r;
            best_pos = k;
        }
        if k == 0 {
            first = r;
        }
        if k == steps {
            last = r;
        }
    }
    // Growth detection: the max sits at a boundary and the ratio one decade
    // inward is smaller by much more than any bounded-slope transition could
    // explain. Saturating families (log corrections) produce decade
    // increments shrinking toward zero, regime transitions produce
    // increments of order |ln t| times the slope change per decade, while a
    // genuinely infinite dilation function grows without bound.
    let growth_threshold = (0.75 * ln_t.abs()).max(1.0);
    let growing_high = best_pos == steps && {
        let s = hi - LN10.min(hi - lo);
        let inner = f.ln_value(s + ln_t)? - f.ln_value(s)?;
        last - inner > growth_threshold
    };
    let growing_low = best_pos == 0 && {
        let s = lo + LN10.min(hi - lo);
        let inner = f.ln_value(s + ln_t)? - f.ln_value(s)?;
        first - inner > growth_threshold
    };
    Ok(DilationValue {
        ln_value: best,
        value: best.exp(),
        possibly_infinite: growing_low || growing_high,
    })
}

/// Grid supremum of `psi(tu)/psi(u)` over the u-grid, computed on the log
/// scale. Range errors from the underlying function propagate.
pub fn dilation(f: &dyn LogScaleFn, t: f64, u: &UGridSpec) -> Result<DilationValue> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("dilation needs t > 0, got {t}")));
    }
    ln_dilation_sup(f, t.ln(), u, SupWindow::Full)
}

/// Window estimates of the 0- and infinity-limit dilation functions,
/// with the trend across geometrically widening windows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DilationLimits {
    pub m0: f64,
    pub m_inf: f64,
    /// Suprema over windows anchored at the low boundary, doubling in
    /// width; the first entry is the primary estimate.
    pub m0_trend: Vec<f64>,
    /// Same, anchored at the high boundary.
    pub m_inf_trend: Vec<f64>,
}

impl DilationLimits {
    pub fn as_pair(&self) -> (f64, f64) {
        (self.m0, self.m_inf)
    }
}

/// Estimate `limsup_{u->0} psi(tu)/psi(u)` and `limsup_{u->inf}` by suprema
/// over the extreme window decades of the u-grid.
pub fn dilation_limits(
    f: &dyn LogScaleFn,
    t: f64,
    grid: &IndexGridSpec,
) -> Result<DilationLimits> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("dilation_limits needs t > 0, got {t}")));
    }
    let ln_t = t.ln();
    let w = grid.window_decades;
    let trend_count = 4usize;
    let mut m0_trend = Vec::with_capacity(trend_count);
    let mut m_inf_trend = Vec::with_capacity(trend_count);
    for k in 0..trend_count {
        let width = w * (1 << k) as f64;
        let low = ln_dilation_sup(f, ln_t, &grid.u, SupWindow::LowDecades(width))?;
        let high = ln_dilation_sup(f, ln_t, &grid.u, SupWindow::HighDecades(width))?;
        m0_trend.push(low.value);
        m_inf_trend.push(high.value);
    }
    Ok(DilationLimits {
        m0: m0_trend[0],
        m_inf: m_inf_trend[0],
        m0_trend,
        m_inf_trend,
    })
}

/// Sampled dilation profile: `M`, `M_0`, `M_inf` over a t-grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DilationProfile {
    pub t: Vec<f64>,
    pub m: Vec<f64>,
    pub m0: Vec<f64>,
    pub m_inf: Vec<f64>,
    pub u_grid: UGridSpec,
}

impl DilationProfile {
    pub fn compute(f: &dyn LogScaleFn, grid: &IndexGridSpec, t_per_decade: usize) -> Result<Self> {
        let ts = crate::grid::log_space(
            grid.t_min,
            grid.t_max,
            (((grid.t_max / grid.t_min).log10() * t_per_decade as f64).ceil() as usize).max(2) + 1,
        );
        let mut m = Vec::with_capacity(ts.len());
        let mut m0 = Vec::with_capacity(ts.len());
        let mut m_inf = Vec::with_capacity(ts.len());
        for &t in &ts {
            m.push(ln_dilation_sup(f, t.ln(), &grid.u, SupWindow::Full)?.value);
            let lim = dilation_limits(f, t, grid)?;
            m0.push(lim.m0);
            m_inf.push(lim.m_inf);
        }
        Ok(DilationProfile {
            t: ts,
            m,
            m0,
            m_inf,
            u_grid: grid.u,
        })
    }
}

/// A slope estimate with its half-width.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct IndexEstimate {
    pub value: f64,
    pub uncertainty: f64,
}

#[derive(Clone, Copy)]
enum Side {
    Low,
    High,
}

#[derive(Clone, Copy)]
enum Mode {
    Full,
    Window0,
    WindowInf,
}

/// Slope above which a dilation function is treated as effectively infinite.
pub const INFINITY_SLOPE: f64 = 50.0;
/// Decade-to-decade stability required of a slope estimate. Narrow tabulated
/// generators drift by a few tenths near their regime transitions, which is
/// honest uncertainty; divergent generators drift by whole units and more.
const STABILITY_TOL: f64 = 0.75;
const UNCERTAINTY_FLOOR: f64 = 1e-3;

fn sup_for(f: &dyn LogScaleFn, ln_t: f64, u: &UGridSpec, mode: Mode, w: f64) -> Result<f64> {
    let window = match mode {
        Mode::Full => SupWindow::Full,
        Mode::Window0 => SupWindow::LowDecades(w),
        Mode::WindowInf => SupWindow::HighDecades(w),
    };
    let v = ln_dilation_sup(f, ln_t, u, window)?;
    if v.possibly_infinite {
        return Err(Error::DilationInfinite(format!(
            "sup still growing at the u-grid boundary for t = {:.3e}",
            ln_t.exp()
        )));
    }
    Ok(v.ln_value)
}

/// One extrapolated secant: the estimate on the full u-range and on the
/// half log-range, combined by Richardson extrapolation in the reciprocal
/// log-range.
fn secant_at(
    f: &dyn LogScaleFn,
    ln_t: f64,
    grid: &IndexGridSpec,
    mode: Mode,
) -> Result<(f64, f64)> {
    let full = grid.u;
    let (a, b) = (full.u_min.ln(), full.u_max.ln());
    let (c, r) = (0.5 * (a + b), 0.25 * (b - a));
    let half = UGridSpec {
        u_min: (c - r).exp(),
        u_max: (c + r).exp(),
        per_decade: full.per_decade,
    };
    let e1 = sup_for(f, ln_t, &full, mode, grid.window_decades)? / ln_t;
    let e2 = sup_for(f, ln_t, &half, mode, grid.window_decades)? / ln_t;
    Ok((2.0 * e1 - e2, (e1 - e2).abs()))
}

fn index_estimate(
    f: &dyn LogScaleFn,
    grid: &IndexGridSpec,
    side: Side,
    mode: Mode,
    label: &str,
) -> Result<IndexEstimate> {
    let (d0, d1) = f.ln_domain();
    let width = d1 - d0;
    let reach = (width / 3.0).max(LN10);
    let ln_t = match side {
        Side::Low => -grid.t_min.ln().abs().min(reach),
        Side::High => grid.t_max.ln().abs().min(reach),
    };
    // One decade inward for the stability check.
    let ln_t_in = match side {
        Side::Low => ln_t + LN10,
        Side::High => ln_t - LN10,
    };
    let (v1, spread1) = secant_at(f, ln_t, grid, mode)?;
    let (v2, spread2) = secant_at(f, ln_t_in, grid, mode)?;
    let drift = (v1 - v2).abs();
    if drift > STABILITY_TOL {
        return Err(Error::IndexDiverged(format!(
            "{label}: slope moved by {drift:.3} across the last two decades"
        )));
    }
    if v1.abs() > INFINITY_SLOPE {
        return Err(Error::IndexDiverged(format!(
            "{label}: slope {v1:.1} exceeds the finiteness threshold"
        )));
    }
    Ok(IndexEstimate {
        value: v1,
        uncertainty: (spread1.max(spread2) + drift).max(UNCERTAINTY_FLOOR),
    })
}

/// Per-index half-widths of an [`IndexReport`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct IndexUncertainty {
    pub alpha: f64,
    pub beta: f64,
    pub alpha0: f64,
    pub beta0: f64,
    pub alpha_inf: f64,
    pub beta_inf: f64,
    pub gamma: f64,
    pub delta: f64,
}

/// The six Matuszewska-Orlicz indices plus the dilation exponents of the
/// generator itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IndexReport {
    pub alpha: f64,
    pub beta: f64,
    pub alpha0: f64,
    pub beta0: f64,
    pub alpha_inf: f64,
    pub beta_inf: f64,
    /// Lower dilation exponent of the generator; coincides with `alpha` when
    /// the dilation function is finite.
    pub gamma: f64,
    pub delta: f64,
    pub uncertainty: IndexUncertainty,
    pub reflexive: bool,
}

/// Estimate all Matuszewska-Orlicz indices of an N-function.
pub fn matuszewska_orlicz_indices(phi: &NFunction, grid: &IndexGridSpec) -> Result<IndexReport> {
    let alpha = index_estimate(phi, grid, Side::Low, Mode::Full, "alpha")?;
    let beta = index_estimate(phi, grid, Side::High, Mode::Full, "beta")?;
    let alpha0 = index_estimate(phi, grid, Side::Low, Mode::Window0, "alpha0")?;
    let beta0 = index_estimate(phi, grid, Side::High, Mode::Window0, "beta0")?;
    let alpha_inf = index_estimate(phi, grid, Side::Low, Mode::WindowInf, "alpha_inf")?;
    let beta_inf = index_estimate(phi, grid, Side::High, Mode::WindowInf, "beta_inf")?;
    let reflexive = alpha0.value - alpha0.uncertainty > 1.0
        && beta0.value + beta0.uncertainty < INFINITY_SLOPE;
    Ok(IndexReport {
        alpha: alpha.value,
        beta: beta.value,
        alpha0: alpha0.value,
        beta0: beta0.value,
        alpha_inf: alpha_inf.value,
        beta_inf: beta_inf.value,
        gamma: alpha.value,
        delta: beta.value,
        uncertainty: IndexUncertainty {
            alpha: alpha.uncertainty,
            beta: beta.uncertainty,
            alpha0: alpha0.uncertainty,
            beta0: beta0.uncertainty,
            alpha_inf: alpha_inf.uncertainty,
            beta_inf: beta_inf.uncertainty,
            gamma: alpha.uncertainty,
            delta: beta.uncertainty,
        },
        reflexive,
    })
}

/// Lower and upper dilation exponents of a positive function.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DilationExponents {
    pub gamma: IndexEstimate,
    pub delta: IndexEstimate,
}

/// Estimate the dilation exponents of an arbitrary log-scale function
/// (typically `phi^{-1}` or an interpolation kernel).
pub fn dilation_exponents(f: &dyn LogScaleFn, grid: &IndexGridSpec) -> Result<DilationExponents> {
    let gamma = index_estimate(f, grid, Side::Low, Mode::Full, "gamma")?;
    let delta = index_estimate(f, grid, Side::High, Mode::Full, "delta")?;
    Ok(DilationExponents { gamma, delta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nfunction::NFunction;

    fn default_grid() -> IndexGridSpec {
        IndexGridSpec::default()
    }

    #[test]
    fn dilation_of_power_is_power() {
        let phi = NFunction::power(2.0).unwrap();
        for &t in &[0.3, 1.0, 2.0, 10.0] {
            let d = dilation(&phi, t, &UGridSpec::default()).unwrap();
            assert!(
                (d.value - t * t).abs() <= 1e-9 * (t * t),
                "t={t} got {}",
                d.value
            );
            assert!(!d.possibly_infinite);
        }
    }

    #[test]
    fn dilation_at_one_is_one() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let d = dilation(&phi, 1.0, &UGridSpec::default()).unwrap();
        assert!((d.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dilation_of_power_log_brackets_and_grows_with_grid() {
        // Oracle: brute-force sup over progressively wider u-grids; the limit
        // for t = 10 is 10^(p+q) = 1000, approached as the grid widens.
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let mut prev = 0.0;
        for &extent in &[1e8, 1e16, 1e32] {
            let u = UGridSpec {
                u_min: 1.0 / extent,
                u_max: extent,
                per_decade: 8,
            };
            let d = dilation(&phi, 10.0, &u).unwrap();
            assert!(d.value >= prev - 1e-9);
            assert!(d.value > 100.0 && d.value <= 1000.0 + 1e-6, "{}", d.value);
            prev = d.value;
        }
        assert!(prev > 990.0, "sup should approach 1000, got {prev}");
    }

    #[test]
    fn dilation_limits_of_power() {
        let phi = NFunction::power(1.5).unwrap();
        let lim = dilation_limits(&phi, 2.0, &default_grid()).unwrap();
        let expect = 2f64.powf(1.5);
        assert!((lim.m0 - expect).abs() < 1e-6 * expect);
        assert!((lim.m_inf - expect).abs() < 1e-6 * expect);
        let one = dilation_limits(&phi, 1.0, &default_grid()).unwrap();
        assert!((one.m0 - 1.0).abs() < 1e-9 && (one.m_inf - 1.0).abs() < 1e-9);
    }

    #[test]
    fn dilation_limits_of_power_log_split() {
        // Oracle: ratio evaluation deep in the extreme windows. The log
        // factor is active near zero (exponent p+q) and flattens at infinity
        // (exponent p).
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let lim = dilation_limits(&phi, 2.0, &default_grid()).unwrap();
        assert!((lim.m0 - 8.0).abs() < 0.05, "m0 = {}", lim.m0);
        assert!((lim.m_inf - 4.0).abs() < 0.05, "m_inf = {}", lim.m_inf);
    }

    #[test]
    fn indices_of_pure_power() {
        let phi = NFunction::power(2.5).unwrap();
        let r = matuszewska_orlicz_indices(&phi, &default_grid()).unwrap();
        for v in [r.alpha, r.beta, r.alpha0, r.beta0, r.alpha_inf, r.beta_inf] {
            assert!((v - 2.5).abs() < 0.01, "index {v}");
        }
        assert!(r.reflexive);
    }

    #[test]
    fn indices_of_power_log() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let r = matuszewska_orlicz_indices(&phi, &default_grid()).unwrap();
        assert!((r.alpha - 2.0).abs() < 0.05, "alpha = {}", r.alpha);
        assert!((r.beta - 3.0).abs() < 0.05, "beta = {}", r.beta);
        assert!(r.reflexive);
    }

    #[test]
    fn index_chain_inequality() {
        for phi in [
            NFunction::power(2.0).unwrap(),
            NFunction::power_log(2.0, 1.0).unwrap(),
            NFunction::power_log(3.0, 2.0).unwrap(),
            NFunction::power_log(1.5, 0.5).unwrap(),
        ] {
            let r = matuszewska_orlicz_indices(&phi, &default_grid()).unwrap();
            let u = &r.uncertainty;
            let slack = |a: f64, b: f64| a + b + 1e-9;
            assert!(r.alpha <= r.alpha0.min(r.alpha_inf) + slack(u.alpha, u.alpha0.max(u.alpha_inf)));
            assert!(r.beta0.max(r.beta_inf) <= r.beta + slack(u.beta, u.beta0.max(u.beta_inf)));
            assert!(r.alpha <= r.beta + slack(u.alpha, u.beta));
            assert!(r.alpha0 <= r.beta0 + slack(u.alpha0, u.beta0));
            assert!(r.alpha_inf <= r.beta_inf + slack(u.alpha_inf, u.beta_inf));
        }
    }

    #[test]
    fn scaling_leaves_indices_unchanged() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let base = matuszewska_orlicz_indices(&phi, &default_grid()).unwrap();
        for &lambda in &[0.25, 3.0, 1e4] {
            let scaled = NFunction::scaled(lambda, phi.clone()).unwrap();
            let r = matuszewska_orlicz_indices(&scaled, &default_grid()).unwrap();
            assert!((r.alpha - base.alpha).abs() < 1e-9);
            assert!((r.beta - base.beta).abs() < 1e-9);
        }
    }

    #[test]
    fn exponents_of_power_inverse() {
        let phi = NFunction::power(4.0).unwrap();
        let inv = InverseFn::new(&phi).unwrap();
        let e = dilation_exponents(&inv, &default_grid()).unwrap();
        assert!((e.gamma.value - 0.25).abs() < 0.01, "{}", e.gamma.value);
        assert!((e.delta.value - 0.25).abs() < 0.01, "{}", e.delta.value);
    }

    #[test]
    fn exponents_of_power_log_inverse_match_reciprocal_indices() {
        // Brute-force cross-check of the inverse-function index relation:
        // gamma of phi^{-1} is 1/beta of phi, delta is 1/alpha.
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let inv = InverseFn::new(&phi).unwrap();
        let e = dilation_exponents(&inv, &default_grid()).unwrap();
        assert!((e.gamma.value - 1.0 / 3.0).abs() < 0.05, "{}", e.gamma.value);
        assert!((e.delta.value - 0.5).abs() < 0.05, "{}", e.delta.value);
    }

    #[test]
    fn exponents_of_constant_slope_table() {
        // A concave power table: the exponents equal the slope.
        let pts: Vec<(f64, f64)> = crate::grid::log_space(1e-8, 1e8, 200)
            .into_iter()
            .map(|t| (t, t.powf(0.4)))
            .collect();
        let tab = NFunction::tabulated(&pts).unwrap();
        let e = dilation_exponents(&tab, &default_grid()).unwrap();
        assert!((e.gamma.value - 0.4).abs() < 0.02, "{}", e.gamma.value);
        assert!((e.delta.value - 0.4).abs() < 0.02, "{}", e.delta.value);
    }

    #[test]
    fn profile_invariants() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let p = DilationProfile::compute(&phi, &default_grid(), 2).unwrap();
        // M(1) = 1 and M nondecreasing in t.
        let i1 = p.t.iter().position(|&t| (t - 1.0).abs() < 1e-9).unwrap();
        assert!((p.m[i1] - 1.0).abs() < 1e-9);
        assert!(p.m.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-9)));
        for i in 0..p.t.len() {
            assert!(p.m0[i].max(p.m_inf[i]) <= p.m[i] * (1.0 + 1e-9));
        }
    }

    #[test]
    fn divergent_generator_is_rejected() {
        // exp(u) - 1 style growth has an infinite dilation function.
        let fast = NFunction::custom(|t| t.exp() - 1.0)
            .with_domain(1e-6, 200.0)
            .unwrap();
        let err = dilation_exponents(&fast, &default_grid());
        assert!(err.is_err());
    }
}

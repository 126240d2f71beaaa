//! N-functions: convex Orlicz generators with evaluable forward and inverse
//! maps.
//!
//! An N-function is continuous, increasing, convex, vanishes only at zero,
//! and has `phi(t)/t -> 0` at zero and `-> infinity` at infinity. Closed-form
//! families (`Power`, `PowerLog`) evaluate exactly; tabulated families
//! interpolate linearly in log-log coordinates, which is exact on power
//! functions. Every value is immutable after construction and all operations
//! are pure.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::log_space;

/// Default evaluation window for `eval`; outside it we return a range error
/// rather than extrapolate.
pub const DEFAULT_DOMAIN: (f64, f64) = (1e-9, 1e9);

/// Log-scale window (in `ln t`) for closed-form families. The dilation
/// machinery probes products far outside the linear window; closed forms
/// stay exact there because they are evaluated in the log domain.
pub const WIDE_LN_DOMAIN: (f64, f64) = (-138.2, 138.2); // about 1e-60 .. 1e60

/// Relative tolerance used by the bisection-based inverse.
pub const INVERSE_REL_TOL: f64 = 1e-12;
const INVERSE_MAX_ITER: usize = 200;

/// `ln(1 + e^s)`, stable for any `s`.
pub(crate) fn softplus(s: f64) -> f64 {
    if s > 0.0 {
        s + (-s).exp().ln_1p()
    } else {
        s.exp().ln_1p()
    }
}

/// Strictly increasing table of `(ln t, ln phi(t))` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct LogLogTable {
    pub ln_t: Vec<f64>,
    pub ln_y: Vec<f64>,
}

impl LogLogTable {
    fn from_points(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::domain("tabulated family needs at least two points"));
        }
        let mut ln_t = Vec::with_capacity(points.len());
        let mut ln_y = Vec::with_capacity(points.len());
        for &(t, y) in points {
            if !(t > 0.0 && y > 0.0) {
                return Err(Error::domain(format!(
                    "tabulated points must be positive, got ({t:e}, {y:e})"
                )));
            }
            ln_t.push(t.ln());
            ln_y.push(y.ln());
        }
        if !ln_t.windows(2).all(|w| w[1] > w[0]) || !ln_y.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::domain(
                "tabulated points must be strictly increasing in both coordinates",
            ));
        }
        Ok(LogLogTable { ln_t, ln_y })
    }

    /// Linear interpolation of `ln y` at `ln t`; errors outside the table.
    fn forward(&self, s: f64) -> Result<f64> {
        interp_ordered(&self.ln_t, &self.ln_y, s)
            .ok_or_else(|| Error::range(s.exp(), "outside tabulated range"))
    }

    /// Linear interpolation of `ln t` at `ln y`; errors outside the table.
    fn backward(&self, ln_y: f64) -> Result<f64> {
        interp_ordered(&self.ln_y, &self.ln_t, ln_y)
            .ok_or_else(|| Error::range(ln_y.exp(), "outside tabulated value range"))
    }
}

// Boundary slack: table lookups tolerate a relative 1e-12 overshoot so that
// round-tripped endpoints stay evaluable.
fn interp_ordered(xs: &[f64], ys: &[f64], x: f64) -> Option<f64> {
    let eps = 1e-12;
    let (lo, hi) = (xs[0], *xs.last().unwrap());
    if x < lo - eps || x > hi + eps {
        return None;
    }
    let x = x.clamp(lo, hi);
    let i = match xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
        Ok(i) => return Some(ys[i]),
        Err(i) => i.clamp(1, xs.len() - 1),
    };
    let w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    Some(ys[i - 1] + w * (ys[i] - ys[i - 1]))
}

/// Programmatic composite generators; not serialisable.
#[derive(Clone)]
pub enum CompositeSpec {
    /// `factor * inner(t)`; keeps the wide log-scale window of `inner`.
    Scaled { factor: f64, inner: Box<NFunction> },
    /// Arbitrary closure, evaluated in the linear domain only.
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for CompositeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompositeSpec::Scaled { factor, inner } => f
                .debug_struct("Scaled")
                .field("factor", factor)
                .field("inner", inner)
                .finish(),
            CompositeSpec::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// The generator families understood by the toolkit.
#[derive(Debug, Clone)]
pub enum Family {
    /// `t^p`
    Power { p: f64 },
    /// `t^p ln^q(1 + t)`
    PowerLog { p: f64, q: f64 },
    /// Log-log table of the forward graph, usually obtained by inverting a
    /// sampled concave envelope.
    TabulatedConcaveInverse(LogLogTable),
    Composite(CompositeSpec),
}

/// A convex Orlicz generator together with its evaluation window.
#[derive(Debug, Clone)]
pub struct NFunction {
    family: Family,
    domain: (f64, f64),
}

impl NFunction {
    pub fn power(p: f64) -> Result<Self> {
        if !(p > 0.0) {
            return Err(Error::domain(format!("power exponent must be positive, got {p}")));
        }
        Ok(NFunction {
            family: Family::Power { p },
            domain: DEFAULT_DOMAIN,
        })
    }

    pub fn power_log(p: f64, q: f64) -> Result<Self> {
        if !(p > 0.0) || !(q >= 0.0) {
            return Err(Error::domain(format!(
                "power-log parameters must satisfy p > 0, q >= 0, got ({p}, {q})"
            )));
        }
        Ok(NFunction {
            family: Family::PowerLog { p, q },
            domain: DEFAULT_DOMAIN,
        })
    }

    /// Build a tabulated generator from strictly increasing `(t, phi(t))`
    /// samples of the forward graph. The evaluation window is the table span.
    pub fn tabulated(points: &[(f64, f64)]) -> Result<Self> {
        let table = LogLogTable::from_points(points)?;
        let domain = (table.ln_t[0].exp(), table.ln_t.last().unwrap().exp());
        Ok(NFunction {
            family: Family::TabulatedConcaveInverse(table),
            domain,
        })
    }

    /// `factor * inner(t)` with the same evaluation window as `inner`.
    pub fn scaled(factor: f64, inner: NFunction) -> Result<Self> {
        if !(factor > 0.0) {
            return Err(Error::domain("scale factor must be positive"));
        }
        let domain = inner.domain;
        Ok(NFunction {
            family: Family::Composite(CompositeSpec::Scaled {
                factor,
                inner: Box::new(inner),
            }),
            domain,
        })
    }

    /// Wrap an arbitrary closure. No structural properties are assumed;
    /// `verify` reports whether it behaves like an N-function.
    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        NFunction {
            family: Family::Composite(CompositeSpec::Custom(Arc::new(f))),
            domain: DEFAULT_DOMAIN,
        }
    }

    pub fn with_domain(mut self, lo: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && hi > lo) {
            return Err(Error::domain("domain hint must satisfy 0 < lo < hi"));
        }
        self.domain = (lo, hi);
        Ok(self)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Linear-scale evaluation window.
    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// `ln t` window on which `ln_eval` is defined. Closed-form families get
    /// the wide log-scale window; tables and closures are confined to their
    /// linear windows.
    pub fn ln_domain(&self) -> (f64, f64) {
        match &self.family {
            Family::Power { .. } | Family::PowerLog { .. } => WIDE_LN_DOMAIN,
            Family::TabulatedConcaveInverse(tab) => (tab.ln_t[0], *tab.ln_t.last().unwrap()),
            Family::Composite(CompositeSpec::Scaled { inner, .. }) => inner.ln_domain(),
            Family::Composite(CompositeSpec::Custom(_)) => (self.domain.0.ln(), self.domain.1.ln()),
        }
    }

    /// Evaluate `phi(t)`. `t = 0` maps to `0`; negative `t` is a domain
    /// error; values outside the evaluation window are range errors.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::domain(format!("eval needs t >= 0, got {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        // relative slack so round-tripped window endpoints stay evaluable
        if t < self.domain.0 * (1.0 - 1e-9) || t > self.domain.1 * (1.0 + 1e-9) {
            return Err(Error::range(t, "outside evaluation window"));
        }
        let t = t.clamp(self.domain.0, self.domain.1);
        match &self.family {
            Family::Power { p } => Ok(t.powf(*p)),
            Family::PowerLog { p, q } => Ok(t.powf(*p) * t.ln_1p().powf(*q)),
            Family::TabulatedConcaveInverse(tab) => Ok(tab.forward(t.ln())?.exp()),
            Family::Composite(CompositeSpec::Scaled { factor, inner }) => {
                Ok(factor * inner.eval(t)?)
            }
            Family::Composite(CompositeSpec::Custom(f)) => {
                let y = f(t);
                if !y.is_finite() {
                    return Err(Error::range(t, "custom generator not finite"));
                }
                Ok(y)
            }
        }
    }

    /// `ln phi(e^s)`, evaluated without leaving the log domain where the
    /// family allows it. This is the workhorse of the dilation machinery.
    pub fn ln_eval(&self, s: f64) -> Result<f64> {
        let (lo, hi) = self.ln_domain();
        if !(s >= lo && s <= hi) {
            return Err(Error::range(s.exp(), "outside log-scale window"));
        }
        match &self.family {
            Family::Power { p } => Ok(p * s),
            Family::PowerLog { p, q } => Ok(p * s + q * softplus(s).ln()),
            Family::TabulatedConcaveInverse(tab) => tab.forward(s),
            Family::Composite(CompositeSpec::Scaled { factor, inner }) => {
                Ok(factor.ln() + inner.ln_eval(s)?)
            }
            Family::Composite(CompositeSpec::Custom(f)) => {
                let y = f(s.exp());
                if !(y > 0.0) || !y.is_finite() {
                    return Err(Error::range(s.exp(), "custom generator not positive"));
                }
                Ok(y.ln())
            }
        }
    }

    /// `phi(t)` with the log-scale window as fallback: closed form inside
    /// the linear window, log-domain evaluation outside it. Modular sums
    /// meet entries far below the linear window.
    pub fn eval_extended(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::domain(format!("eval needs t >= 0, got {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        if t >= self.domain.0 && t <= self.domain.1 {
            return self.eval(t);
        }
        Ok(self.ln_eval(t.ln())?.exp())
    }

    /// Invert `phi`: the `t >= 0` with `phi(t) = y`, to relative tolerance
    /// `INVERSE_REL_TOL`. Closed form for `Power`, table lookup for
    /// tabulated families, bracketed bisection elsewhere.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if y.is_nan() || y < 0.0 {
            return Err(Error::domain(format!("inverse needs y >= 0, got {y}")));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        match &self.family {
            Family::Power { p } => Ok(y.powf(1.0 / p)),
            _ => Ok(self.inverse_ln(y.ln())?.exp()),
        }
    }

    /// `ln phi^{-1}(e^r)`: the log-domain inverse used by the dilation
    /// machinery for `phi^{-1}` and the interpolation construction.
    pub fn inverse_ln(&self, r: f64) -> Result<f64> {
        match &self.family {
            Family::Power { p } => {
                let s = r / p;
                let (lo, hi) = self.ln_domain();
                if s < lo || s > hi {
                    return Err(Error::range(r.exp(), "outside achievable range"));
                }
                Ok(s)
            }
            Family::TabulatedConcaveInverse(tab) => tab.backward(r),
            _ => {
                let (lo, hi) = self.ln_domain();
                let (flo, fhi) = (self.ln_eval(lo)?, self.ln_eval(hi)?);
                if r < flo - 1e-12 || r > fhi + 1e-12 {
                    return Err(Error::range(r.exp(), "outside achievable range"));
                }
                let (mut a, mut b) = (lo, hi);
                for _ in 0..INVERSE_MAX_ITER {
                    if (b - a).abs() <= INVERSE_REL_TOL * 0.5 * (1.0 + a.abs() + b.abs()) {
                        break;
                    }
                    let m = 0.5 * (a + b);
                    if self.ln_eval(m)? < r {
                        a = m;
                    } else {
                        b = m;
                    }
                }
                Ok(0.5 * (a + b))
            }
        }
    }
}

/// Grid specification for `verify`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyGridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub points_per_decade: usize,
    /// Relative slack for the midpoint-convexity comparison.
    pub convexity_tol: f64,
}

impl Default for VerifyGridSpec {
    fn default() -> Self {
        VerifyGridSpec {
            t_min: 1e-8,
            t_max: 1e8,
            points_per_decade: 8,
            convexity_tol: 1e-7,
        }
    }
}

/// Outcome of the structural N-function checks; failures are entries,
/// not errors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub zero_at_zero: bool,
    pub strictly_increasing: bool,
    pub midpoint_convex: bool,
    pub vanishing_slope_at_zero: bool,
    pub unbounded_slope_at_infinity: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.zero_at_zero
            && self.strictly_increasing
            && self.midpoint_convex
            && self.vanishing_slope_at_zero
            && self.unbounded_slope_at_infinity
    }
}

/// Check the N-function axioms on a sampled log grid. The requested grid
/// must span at least `[1e-8, 1e8]`; it is clipped to the function's own
/// window.
pub fn verify_nfunction(phi: &NFunction, grid: &VerifyGridSpec) -> Result<ValidationReport> {
    if !(grid.t_min > 0.0 && grid.t_max > grid.t_min) {
        return Err(Error::domain("verify grid must satisfy 0 < t_min < t_max"));
    }
    if grid.t_min > 1e-8 || grid.t_max < 1e8 {
        return Err(Error::domain(
            "verify grid must span at least [1e-8, 1e8]",
        ));
    }
    let (dlo, dhi) = phi.domain();
    let lo = grid.t_min.max(dlo);
    let hi = grid.t_max.min(dhi);
    let decades = (hi / lo).log10();
    let n = ((decades * grid.points_per_decade as f64).ceil() as usize).max(16);
    let ts = log_space(lo, hi, n + 1);
    let mut vals = Vec::with_capacity(ts.len());
    for &t in &ts {
        vals.push(phi.eval(t)?);
    }
    let mut failures = Vec::new();

    let zero_at_zero = phi.eval(0.0)? == 0.0 && vals[0] > 0.0;
    if !zero_at_zero {
        failures.push("zero-at-zero failed".into());
    }

    let strictly_increasing = vals.windows(2).all(|w| w[1] > w[0]);
    if !strictly_increasing {
        failures.push("strict monotonicity failed".into());
    }

    // Midpoint convexity over adjacent and decade-spanning pairs.
    let mut midpoint_convex = true;
    let stride_wide = (ts.len() / 7).max(1);
    'outer: for stride in [1usize, stride_wide] {
        for i in 0..ts.len().saturating_sub(stride) {
            let (s, t) = (ts[i], ts[i + stride]);
            let mid = phi.eval(0.5 * (s + t))?;
            let avg = 0.5 * (vals[i] + vals[i + stride]);
            if mid > avg + grid.convexity_tol * avg.abs().max(1e-300) {
                midpoint_convex = false;
                failures.push(format!(
                    "midpoint convexity failed at (s, t) = ({s:e}, {t:e})"
                ));
                break 'outer;
            }
        }
    }

    // phi(t)/t must trend to 0 at the low end and to infinity at the high
    // end; we ask for monotone trends over the extreme decades of the grid.
    let per = grid.points_per_decade.max(1);
    let low_window = (3 * per).min(ts.len() / 2);
    let slopes_low: Vec<f64> = (0..low_window).map(|i| vals[i] / ts[i]).collect();
    let vanishing_slope_at_zero = slopes_low.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-12));
    if !vanishing_slope_at_zero {
        failures.push("phi(t)/t is not decreasing toward t = 0".into());
    }

    let m = ts.len();
    let slopes_high: Vec<f64> = (m - low_window..m).map(|i| vals[i] / ts[i]).collect();
    let unbounded_slope_at_infinity =
        slopes_high.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-12))
            && slopes_high.last().unwrap() > slopes_high.first().unwrap();
    if !unbounded_slope_at_infinity {
        failures.push("phi(t)/t is not increasing toward t = infinity".into());
    }

    Ok(ValidationReport {
        zero_at_zero,
        strictly_increasing,
        midpoint_convex,
        vanishing_slope_at_zero,
        unbounded_slope_at_infinity,
        failures,
    })
}

/// Serialisable N-function definitions, e.g.
/// `{"family":"power_log","p":2.0,"q":1.0}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum NFunctionSpec {
    Power { p: f64 },
    PowerLog { p: f64, q: f64 },
    TabulatedConcaveInverse { points: Vec<(f64, f64)> },
}

impl TryFrom<NFunctionSpec> for NFunction {
    type Error = Error;

    fn try_from(spec: NFunctionSpec) -> Result<NFunction> {
        match spec {
            NFunctionSpec::Power { p } => NFunction::power(p),
            NFunctionSpec::PowerLog { p, q } => NFunction::power_log(p, q),
            NFunctionSpec::TabulatedConcaveInverse { points } => NFunction::tabulated(&points),
        }
    }
}

impl NFunction {
    pub fn from_json(s: &str) -> Result<NFunction> {
        let spec: NFunctionSpec =
            serde_json::from_str(s).map_err(|e| Error::schema(format!("n-function: {e}")))?;
        spec.try_into()
    }

    /// Serialisable description, when the family admits one.
    pub fn to_spec(&self) -> Option<NFunctionSpec> {
        match &self.family {
            Family::Power { p } => Some(NFunctionSpec::Power { p: *p }),
            Family::PowerLog { p, q } => Some(NFunctionSpec::PowerLog { p: *p, q: *q }),
            Family::TabulatedConcaveInverse(tab) => Some(NFunctionSpec::TabulatedConcaveInverse {
                points: tab
                    .ln_t
                    .iter()
                    .zip(&tab.ln_y)
                    .map(|(&a, &b)| (a.exp(), b.exp()))
                    .collect(),
            }),
            Family::Composite(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_eval_closed_form() {
        let phi = NFunction::power(2.0).unwrap();
        assert_eq!(phi.eval(2.0).unwrap(), 4.0);
        assert_eq!(phi.eval(0.0).unwrap(), 0.0);
    }

    #[test]
    fn power_log_eval_closed_form() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let v = phi.eval(1.0).unwrap();
        assert!((v - 2f64.ln()).abs() < 1e-15, "got {v}");
        assert_eq!(phi.eval(0.0).unwrap(), 0.0);
    }

    #[test]
    fn eval_rejects_negative_and_out_of_window() {
        let phi = NFunction::power(2.0).unwrap();
        assert!(matches!(phi.eval(-1.0), Err(Error::Domain(_))));
        assert!(matches!(phi.eval(1e12), Err(Error::Range { .. })));
    }

    #[test]
    fn inverse_power_is_root() {
        let phi = NFunction::power(2.0).unwrap();
        assert_eq!(phi.inverse(9.0).unwrap(), 3.0);
        assert_eq!(phi.inverse(0.0).unwrap(), 0.0);
    }

    #[test]
    fn inverse_power_log_by_bisection() {
        // Oracle: phi(1) = ln 2, so inverse(ln 2) must return 1.
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let t = phi.inverse(2f64.ln()).unwrap();
        assert!((t - 1.0).abs() < 1e-10, "got {t}");
    }

    #[test]
    fn inverse_round_trip_power() {
        let phi = NFunction::power(2.5).unwrap();
        for &y in &[1e-6, 1e-3, 1.0, 10.0, 1e6] {
            let t = phi.inverse(y).unwrap();
            let back = phi.eval(t).unwrap();
            assert!((back - y).abs() <= 1e-12 * y.max(1.0), "y={y} back={back}");
        }
    }

    #[test]
    fn inverse_monotone_on_grid() {
        let phi = NFunction::power_log(1.5, 0.5).unwrap();
        let ys = log_space(1e-6, 1e6, 200);
        let mut prev = 0.0;
        for &y in &ys {
            let t = phi.inverse(y).unwrap();
            assert!(t >= prev);
            prev = t;
        }
    }

    #[test]
    fn homogeneity_of_power_eval() {
        let phi = NFunction::power(3.0).unwrap();
        for &(s, t) in &[(2.0, 5.0), (0.5, 0.125), (10.0, 3.0)] {
            let lhs = phi.eval(s * t).unwrap();
            let rhs = s.powf(3.0) * phi.eval(t).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }
    }

    #[test]
    fn verify_accepts_standard_families() {
        for phi in [
            NFunction::power(2.0).unwrap(),
            NFunction::power_log(2.0, 1.0).unwrap(),
        ] {
            let report = verify_nfunction(&phi, &VerifyGridSpec::default()).unwrap();
            assert!(report.all_pass(), "{:?}", report.failures);
        }
    }

    #[test]
    fn verify_flags_concave_composite() {
        let sqrt = NFunction::custom(|t| t.sqrt());
        let report = verify_nfunction(&sqrt, &VerifyGridSpec::default()).unwrap();
        assert!(!report.midpoint_convex);
        assert!(!report.all_pass());
    }

    #[test]
    fn ln_eval_matches_eval_inside_window() {
        let phi = NFunction::power_log(3.0, 2.0).unwrap();
        for &t in &[1e-8f64, 1e-2, 1.0, 37.5, 1e8] {
            let a = phi.ln_eval(t.ln()).unwrap();
            let b = phi.eval(t).unwrap().ln();
            assert!((a - b).abs() < 1e-11, "t={t} a={a} b={b}");
        }
    }

    #[test]
    fn ln_eval_extends_beyond_linear_window() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        // 1e20 is far outside the linear window but fine on the log scale.
        let s = (20.0f64 * std::f64::consts::LN_10).to_owned();
        let v = phi.ln_eval(s).unwrap();
        let expect = 2.0 * s + softplus(s).ln();
        assert!((v - expect).abs() < 1e-12);
        assert!(phi.eval(1e20).is_err());
    }

    #[test]
    fn scaled_family_shifts_log_values() {
        let phi = NFunction::power(2.0).unwrap();
        let scaled = NFunction::scaled(7.0, phi.clone()).unwrap();
        let a = scaled.ln_eval(3.0).unwrap();
        let b = phi.ln_eval(3.0).unwrap() + 7f64.ln();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn tabulated_round_trip_of_power_samples() {
        let pts: Vec<(f64, f64)> = log_space(1e-4, 1e4, 60)
            .into_iter()
            .map(|t| (t, t * t))
            .collect();
        let tab = NFunction::tabulated(&pts).unwrap();
        // Log-log interpolation is exact on powers.
        for &t in &[2e-4, 0.3, 1.0, 17.0, 5e3] {
            let v = tab.eval(t).unwrap();
            assert!((v - t * t).abs() <= 1e-12 * (t * t), "t={t} v={v}");
            let back = tab.inverse(v).unwrap();
            assert!((back - t).abs() <= 1e-10 * t);
        }
        assert!(tab.eval(1e5).is_err());
    }

    #[test]
    fn json_spec_round_trip() {
        let phi = NFunction::from_json(r#"{"family":"power_log","p":2.0,"q":1.0}"#).unwrap();
        assert!(matches!(phi.family(), Family::PowerLog { .. }));
        let spec = phi.to_spec().unwrap();
        assert_eq!(spec, NFunctionSpec::PowerLog { p: 2.0, q: 1.0 });
        assert!(NFunction::from_json("{\"family\":\"nope\"}").is_err());
    }
}

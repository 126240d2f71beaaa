//! The interpolation function `phi_theta`.
//!
//! Given an N-function `phi` with nontrivial indices and an admissible
//! `theta`, define `psi_theta(t) = (phi^{-1}(t) t^{-theta/2})^{1/(1-theta)}`.
//! Its least concave majorant is piecewise linear over any sample set; the
//! inverse of that majorant is again an N-function, here realised as a
//! tabulated generator. The ratio between majorant and source yields the
//! equivalence constants, and `c_interp = 2 (c2/c1)^{1-theta}` is the
//! constant carried into every interpolation-inequality check downstream.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::log_space;
use crate::indices::{
    dilation_exponents, matuszewska_orlicz_indices, DilationExponents, IndexGridSpec, IndexReport,
    InverseFn, LogScaleFn,
};
use crate::nfunction::NFunction;

/// Admissible open interval `(0, sup)` for the interpolation parameter.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ThetaRange {
    pub sup: f64,
}

impl ThetaRange {
    pub fn contains(&self, theta: f64) -> bool {
        theta > 0.0 && theta < self.sup
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * self.sup
    }
}

/// `(0, 2 min{1/beta, 1 - 1/alpha})`; requires `1 < alpha <= beta < inf`.
pub fn theta_range(report: &IndexReport) -> Result<ThetaRange> {
    if !(report.alpha > 1.0) || !(report.beta < crate::indices::INFINITY_SLOPE) {
        return Err(Error::IndicesOutOfRange(format!(
            "need 1 < alpha <= beta < inf, got alpha = {:.4}, beta = {:.4}",
            report.alpha, report.beta
        )));
    }
    let sup = 2.0 * (1.0 / report.beta).min(1.0 - 1.0 / report.alpha);
    // The admissible interval is always a subinterval of (0, 1).
    Ok(ThetaRange { sup: sup.min(1.0) })
}

/// `psi_theta(t)`, with `psi_theta(0) = 0`. `theta` must lie in `(0, 1)`;
/// admissibility against the index range is enforced by the builder.
pub fn psi_theta(phi: &NFunction, theta: f64, t: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::domain(format!(
            "theta must lie in (0, 1), got {theta}"
        )));
    }
    if t.is_nan() || t < 0.0 {
        return Err(Error::domain(format!("psi_theta needs t >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let s = t.ln();
    Ok(((phi.inverse_ln(s)? - 0.5 * theta * s) / (1.0 - theta)).exp())
}

/// `psi_theta` on the log scale, for the dilation-exponent machinery.
pub struct PsiThetaFn<'a> {
    phi: &'a NFunction,
    theta: f64,
    dom: (f64, f64),
}

impl<'a> PsiThetaFn<'a> {
    pub fn new(phi: &'a NFunction, theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::domain(format!(
                "theta must lie in (0, 1), got {theta}"
            )));
        }
        let (lo, hi) = phi.ln_domain();
        let dom = (phi.ln_eval(lo)?, phi.ln_eval(hi)?);
        Ok(PsiThetaFn { phi, theta, dom })
    }
}

impl LogScaleFn for PsiThetaFn<'_> {
    fn ln_value(&self, s: f64) -> Result<f64> {
        Ok((self.phi.inverse_ln(s)? - 0.5 * self.theta * s) / (1.0 - self.theta))
    }

    fn ln_domain(&self) -> (f64, f64) {
        self.dom
    }
}

/// Sampled least concave majorant: piecewise linear, slopes nonincreasing,
/// touching the source at every breakpoint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PiecewiseConcaveEnvelope {
    /// Strictly increasing; the first breakpoint is the origin.
    pub breakpoints: Vec<f64>,
    pub values: Vec<f64>,
    /// The samples the hull was built from (origin included).
    pub source: Vec<(f64, f64)>,
}

fn cross(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1)
}

fn upper_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut stack: Vec<(f64, f64)> = Vec::with_capacity(points.len().min(64));
    for &p in points {
        while stack.len() >= 2 {
            let a = stack[stack.len() - 2];
            let b = stack[stack.len() - 1];
            // Keep b only if it lies strictly above the chord a -> p.
            if cross(a, b, p) >= 0.0 {
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(p);
    }
    stack
}

/// Upper concave envelope of the sample set (origin adjoined), computed by
/// a monotone-chain scan. Concavity is not preserved by log-log transforms,
/// so the hull runs in linear coordinates: one pass per decade chunk, then a
/// merge pass over the chunk vertices.
pub fn least_concave_majorant(samples: &[(f64, f64)]) -> Result<PiecewiseConcaveEnvelope> {
    if samples.is_empty() {
        return Err(Error::domain("majorant needs at least one sample"));
    }
    for w in samples.windows(2) {
        if !(w[1].0 > w[0].0) {
            return Err(Error::domain("sample abscissae must be strictly increasing"));
        }
    }
    for &(t, v) in samples {
        if t < 0.0 || v < 0.0 || !v.is_finite() || !t.is_finite() {
            return Err(Error::domain("samples must be finite and nonnegative"));
        }
        if (v == 0.0) != (t == 0.0) {
            return Err(Error::domain("value must vanish exactly at t = 0"));
        }
    }
    let mut source: Vec<(f64, f64)> = Vec::with_capacity(samples.len() + 1);
    if samples[0].0 > 0.0 {
        source.push((0.0, 0.0));
    }
    source.extend_from_slice(samples);

    let mut chunk_vertices: Vec<(f64, f64)> = Vec::new();
    let mut start = 0usize;
    while start < source.len() {
        let decade = if source[start].0 > 0.0 {
            source[start].0.log10().floor()
        } else {
            f64::NEG_INFINITY
        };
        let mut end = start + 1;
        while end < source.len() {
            let d = source[end].0.log10().floor();
            if source[start].0 > 0.0 && d != decade {
                break;
            }
            if source[start].0 == 0.0 && source[end].0 > 0.0 && end > start + 1 {
                break;
            }
            end += 1;
        }
        chunk_vertices.extend(upper_hull(&source[start..end]));
        start = end;
    }
    chunk_vertices.dedup_by(|a, b| a.0 == b.0);
    let hull = upper_hull(&chunk_vertices);

    let (breakpoints, values) = hull.into_iter().unzip();
    Ok(PiecewiseConcaveEnvelope {
        breakpoints,
        values,
        source,
    })
}

impl PiecewiseConcaveEnvelope {
    /// Linear interpolation between breakpoints; range error beyond the last
    /// breakpoint.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::domain(format!("envelope needs t >= 0, got {t}")));
        }
        let xs = &self.breakpoints;
        let last = *xs.last().unwrap();
        if t > last * (1.0 + 1e-12) {
            return Err(Error::range(t, "beyond the sampled envelope"));
        }
        let t = t.min(last);
        let i = match xs.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(i) => return Ok(self.values[i]),
            Err(i) => i.clamp(1, xs.len() - 1),
        };
        let w = (t - xs[i - 1]) / (xs[i] - xs[i - 1]);
        Ok(self.values[i - 1] + w * (self.values[i] - self.values[i - 1]))
    }

    /// Segment slopes are nonincreasing (used by tests).
    pub fn slopes_nonincreasing(&self) -> bool {
        let mut prev = f64::INFINITY;
        for w in self.breakpoints.windows(2).zip(self.values.windows(2)) {
            let slope = (w.1[1] - w.1[0]) / (w.0[1] - w.0[0]);
            if slope > prev * (1.0 + 1e-12) + 1e-300 {
                return false;
            }
            prev = slope;
        }
        true
    }
}

/// Sampling grid for `psi_theta`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MajorantGridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub per_decade: usize,
}

impl Default for MajorantGridSpec {
    fn default() -> Self {
        MajorantGridSpec {
            t_min: 1e-8,
            t_max: 1e8,
            per_decade: 65,
        }
    }
}

/// The built interpolation function with its equivalence constants.
#[derive(Debug, Clone)]
pub struct PhiTheta {
    pub theta: f64,
    pub psi_samples: Vec<(f64, f64)>,
    pub envelope: PiecewiseConcaveEnvelope,
    /// Inverse of the envelope, as a tabulated N-function.
    pub phi_theta: NFunction,
    /// Grid minimum of envelope/psi; equals one where the majorant touches.
    pub c1: f64,
    /// Grid maximum of envelope/psi; these are estimates of the true global
    /// constants and may undershoot them off the grid.
    pub c2: f64,
    /// `2 c2^{1-theta} / c1^{1-theta}`.
    pub c_interp: f64,
    pub index_report: IndexReport,
}

/// Sample `psi_theta`, build the majorant, invert it into an N-function and
/// estimate its indices. Fails when `theta` is inadmissible or when the
/// result does not behave like a reflexive-range N-function.
pub fn build_phi_theta(phi: &NFunction, theta: f64, grid: &MajorantGridSpec) -> Result<PhiTheta> {
    let report = matuszewska_orlicz_indices(phi, &IndexGridSpec::default())?;
    let range = theta_range(&report)?;
    if !range.contains(theta) {
        return Err(Error::domain(format!(
            "theta = {theta} outside the admissible interval (0, {:.6})",
            range.sup
        )));
    }

    let decades = (grid.t_max / grid.t_min).log10();
    let n = ((decades * grid.per_decade as f64).ceil() as usize).max(8) + 1;
    let ts = log_space(grid.t_min, grid.t_max, n);
    let mut psi_samples = Vec::with_capacity(ts.len());
    for &t in &ts {
        psi_samples.push((t, psi_theta(phi, theta, t)?));
    }
    let envelope = least_concave_majorant(&psi_samples)?;

    let mut c1 = f64::INFINITY;
    let mut c2 = 0.0f64;
    for &(t, v) in &psi_samples {
        let ratio = envelope.eval(t)? / v;
        c1 = c1.min(ratio);
        c2 = c2.max(ratio);
    }
    let c_interp = 2.0 * (c2 / c1).powf(1.0 - theta);

    let inverse_graph: Vec<(f64, f64)> = envelope
        .breakpoints
        .iter()
        .zip(&envelope.values)
        .filter(|(&t, _)| t > 0.0)
        .map(|(&t, &v)| (v, t))
        .collect();
    let phi_theta_fn = NFunction::tabulated(&inverse_graph)?;

    let index_report = matuszewska_orlicz_indices(&phi_theta_fn, &IndexGridSpec::default())?;
    if !(index_report.alpha > 1.0) {
        return Err(Error::PhiThetaDegenerate(format!(
            "alpha = {:.4} (+- {:.4}) is not > 1",
            index_report.alpha, index_report.uncertainty.alpha
        )));
    }
    if !(index_report.beta < crate::indices::INFINITY_SLOPE) {
        return Err(Error::PhiThetaDegenerate(format!(
            "beta = {:.4} (+- {:.4}) is not finite",
            index_report.beta, index_report.uncertainty.beta
        )));
    }

    Ok(PhiTheta {
        theta,
        psi_samples,
        envelope,
        phi_theta: phi_theta_fn,
        c1,
        c2,
        c_interp,
        index_report,
    })
}

/// Comparison of the measured dilation exponents of `psi_theta` against the
/// affine transform of the exponents of `phi^{-1}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExponentTransformReport {
    pub gamma_psi: f64,
    pub delta_psi: f64,
    pub gamma_expected: f64,
    pub delta_expected: f64,
    pub gamma_uncertainty: f64,
    pub delta_uncertainty: f64,
    pub gamma_matches: bool,
    pub delta_matches: bool,
    /// `0 < gamma <= delta < 1` with uncertainty slack.
    pub range_ok: bool,
}

impl ExponentTransformReport {
    pub fn all_pass(&self) -> bool {
        self.gamma_matches && self.delta_matches && self.range_ok
    }
}

/// Check `gamma_{psi_theta} = (gamma_{phi^{-1}} - theta/2) / (1 - theta)`
/// and its `delta` twin, within combined uncertainty.
pub fn exponent_transform_check(
    phi: &NFunction,
    theta: f64,
    grid: &IndexGridSpec,
) -> Result<ExponentTransformReport> {
    let inv = InverseFn::new(phi)?;
    let e_inv: DilationExponents = dilation_exponents(&inv, grid)?;
    let psi = PsiThetaFn::new(phi, theta)?;
    let e_psi = dilation_exponents(&psi, grid)?;

    let scale = 1.0 / (1.0 - theta);
    let gamma_expected = scale * (e_inv.gamma.value - 0.5 * theta);
    let delta_expected = scale * (e_inv.delta.value - 0.5 * theta);
    let gamma_uncertainty = e_psi.gamma.uncertainty + scale * e_inv.gamma.uncertainty;
    let delta_uncertainty = e_psi.delta.uncertainty + scale * e_inv.delta.uncertainty;

    let gamma_matches = (e_psi.gamma.value - gamma_expected).abs() <= gamma_uncertainty;
    let delta_matches = (e_psi.delta.value - delta_expected).abs() <= delta_uncertainty;
    let range_ok = e_psi.gamma.value + gamma_uncertainty > 0.0
        && e_psi.delta.value - delta_uncertainty < 1.0
        && e_psi.gamma.value <= e_psi.delta.value + gamma_uncertainty + delta_uncertainty;

    Ok(ExponentTransformReport {
        gamma_psi: e_psi.gamma.value,
        delta_psi: e_psi.delta.value,
        gamma_expected,
        delta_expected,
        gamma_uncertainty,
        delta_uncertainty,
        gamma_matches,
        delta_matches,
        range_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::IndexGridSpec;
    use crate::oracle;

    fn report_like(alpha: f64, beta: f64) -> IndexReport {
        let phi = NFunction::power(2.0).unwrap();
        let mut r = matuszewska_orlicz_indices(&phi, &IndexGridSpec::default()).unwrap();
        r.alpha = alpha;
        r.beta = beta;
        r
    }

    #[test]
    fn theta_range_arithmetic() {
        let r = theta_range(&report_like(3.0, 3.0)).unwrap();
        assert!((r.sup - 2.0 / 3.0).abs() < 1e-12);
        let r = theta_range(&report_like(2.0, 2.0)).unwrap();
        assert!((r.sup - 1.0).abs() < 1e-12);
        let r = theta_range(&report_like(2.0, 3.0)).unwrap();
        assert!((r.sup - 2.0 / 3.0).abs() < 1e-12);
        assert!(theta_range(&report_like(1.0, 3.0)).is_err());
    }

    #[test]
    fn psi_theta_power_cases() {
        // phi = t^4, theta = 1/4: psi_theta(t) = t^{1/6}, so psi(64) = 2.
        let phi = NFunction::power(4.0).unwrap();
        let v = psi_theta(&phi, 0.25, 64.0).unwrap();
        assert!((v - 2.0).abs() < 1e-12, "got {v}");
        // t = 1 reduces to phi^{-1}(1)^{1/(1-theta)}.
        let plog = NFunction::power_log(2.0, 1.0).unwrap();
        let v1 = psi_theta(&plog, 0.3, 1.0).unwrap();
        let expect = plog.inverse(1.0).unwrap().powf(1.0 / 0.7);
        assert!((v1 - expect).abs() < 1e-12 * expect);
        // phi = t^2 is a fixed point: psi_theta = sqrt for every theta.
        let sq = NFunction::power(2.0).unwrap();
        for &theta in &[0.1, 0.5, 0.9] {
            for &t in &[1e-4f64, 0.5, 7.0, 1e4] {
                let v = psi_theta(&sq, theta, t).unwrap();
                assert!((v - t.sqrt()).abs() < 1e-12 * t.sqrt().max(1.0));
            }
        }
        assert_eq!(psi_theta(&sq, 0.5, 0.0).unwrap(), 0.0);
        assert!(psi_theta(&sq, 1.5, 1.0).is_err());
    }

    #[test]
    fn concave_input_is_its_own_majorant() {
        let samples: Vec<(f64, f64)> = log_space(1e-2, 1e2, 40)
            .into_iter()
            .map(|t| (t, t.sqrt()))
            .collect();
        let env = least_concave_majorant(&samples).unwrap();
        assert!(env.slopes_nonincreasing());
        for &(t, v) in &samples {
            let e = env.eval(t).unwrap();
            assert!((e - v).abs() <= 1e-14 * v, "t={t}");
        }
    }

    #[test]
    fn dip_is_bridged_by_chord() {
        let env = least_concave_majorant(&[(0.0, 0.0), (1.0, 0.1), (2.0, 2.0)]).unwrap();
        // Oracle: brute-force sup over two-point convex combinations.
        let expect = oracle::envelope_two_point_sup(&[(0.0, 0.0), (1.0, 0.1), (2.0, 2.0)], 1.0);
        assert_eq!(env.eval(1.0).unwrap(), expect);
        assert_eq!(env.eval(1.0).unwrap(), 1.0);
        // The dominated sample never appears as a breakpoint.
        assert!(!env.breakpoints.iter().any(|&b| b == 1.0));
    }

    #[test]
    fn envelope_idempotent_and_dominating() {
        let samples: Vec<(f64, f64)> = log_space(1e-3, 1e3, 120)
            .into_iter()
            .map(|t| (t, t.sqrt() * (1.0 + 0.3 * (t.ln()).sin())))
            .collect();
        let env = least_concave_majorant(&samples).unwrap();
        assert!(env.slopes_nonincreasing());
        for &(t, v) in &samples {
            assert!(env.eval(t).unwrap() >= v * (1.0 - 1e-13));
        }
        let vertex_samples: Vec<(f64, f64)> = env
            .breakpoints
            .iter()
            .zip(&env.values)
            .map(|(&a, &b)| (a, b))
            .collect();
        let again = least_concave_majorant(&vertex_samples).unwrap();
        assert_eq!(again.breakpoints, env.breakpoints);
        assert_eq!(again.values, env.values);
    }

    #[test]
    fn majorant_rejects_bad_input() {
        assert!(least_concave_majorant(&[(1.0, 1.0), (0.5, 2.0)]).is_err());
        assert!(least_concave_majorant(&[(0.0, 0.0), (1.0, -1.0)]).is_err());
        assert!(least_concave_majorant(&[(0.0, 1.0)]).is_err());
        assert!(least_concave_majorant(&[(0.5, 0.0)]).is_err());
    }

    #[test]
    fn phi_theta_of_square_is_square() {
        let phi = NFunction::power(2.0).unwrap();
        let pt = build_phi_theta(&phi, 0.5, &MajorantGridSpec::default()).unwrap();
        for &t in &[1e-4f64, 1e-2, 1.0, 5.0, 1e4] {
            let v = pt.phi_theta.eval(t).unwrap();
            assert!((v - t * t).abs() <= 1e-3 * t * t, "t={t} v={v}");
        }
        assert!((pt.c1 - 1.0).abs() < 1e-12);
        assert!((pt.c2 - 1.0).abs() < 1e-9);
        assert!((pt.c_interp - 2.0).abs() < 1e-8);
        assert!(pt.index_report.alpha > 1.0 && pt.index_report.beta < 50.0);
    }

    #[test]
    fn phi_theta_power_law() {
        // Oracle: for phi = t^p the sampled psi_theta is a power, hence its
        // own majorant, and phi_theta = t^{p_theta} with
        // 1/p_theta = (1/p - theta/2)/(1 - theta).
        let p = 2.5;
        let theta = 0.3;
        let phi = NFunction::power(p).unwrap();
        let pt = build_phi_theta(&phi, theta, &MajorantGridSpec::default()).unwrap();
        let p_theta = 1.0 / ((1.0 / p - theta / 2.0) / (1.0 - theta));
        let (lo, hi) = pt.phi_theta.domain();
        for &t in &[lo * 1.01, 0.07, 1.0, 42.0, hi * 0.99] {
            let v = pt.phi_theta.eval(t).unwrap();
            let expect = t.powf(p_theta);
            assert!((v - expect).abs() <= 1e-3 * expect, "t={t}");
        }
        assert!((pt.c_interp - 2.0).abs() < 1e-8);
    }

    #[test]
    fn phi_theta_round_trip_on_grid_interior() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let pt = build_phi_theta(&phi, 0.3, &MajorantGridSpec::default()).unwrap();
        for &(t, _) in pt.psi_samples.iter().skip(40).step_by(97) {
            let x = pt.envelope.eval(t).unwrap();
            let back = pt.phi_theta.eval(x).unwrap();
            assert!((back - t).abs() <= 1e-3 * t, "t={t} back={back}");
        }
    }

    #[test]
    fn phi_theta_envelope_ratio_brackets() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let pt = build_phi_theta(&phi, 0.3, &MajorantGridSpec::default()).unwrap();
        assert!(pt.c1 <= pt.c2);
        assert!((pt.c1 - 1.0).abs() < 1e-12);
        for &(t, v) in &pt.psi_samples {
            let e = pt.envelope.eval(t).unwrap();
            assert!(e >= pt.c1 * v * (1.0 - 1e-12));
            assert!(e <= pt.c2 * v * (1.0 + 1e-12));
        }
    }

    #[test]
    fn theta_outside_range_is_rejected() {
        let phi = NFunction::power(3.0).unwrap();
        // range is (0, 2/3)
        assert!(build_phi_theta(&phi, 0.9, &MajorantGridSpec::default()).is_err());
    }

    #[test]
    fn exponent_transform_square_fixed_point() {
        let phi = NFunction::power(2.0).unwrap();
        let r = exponent_transform_check(&phi, 0.4, &IndexGridSpec::default()).unwrap();
        assert!((r.gamma_psi - 0.5).abs() < 0.01);
        assert!((r.gamma_expected - 0.5).abs() < 0.01);
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn exponent_transform_quartic() {
        let phi = NFunction::power(4.0).unwrap();
        let r = exponent_transform_check(&phi, 0.25, &IndexGridSpec::default()).unwrap();
        assert!((r.gamma_psi - 1.0 / 6.0).abs() < 0.01, "{}", r.gamma_psi);
        assert!(r.all_pass());
    }

    #[test]
    fn exponent_transform_power_log() {
        let phi = NFunction::power_log(2.0, 1.0).unwrap();
        let r = exponent_transform_check(&phi, 0.3, &IndexGridSpec::default()).unwrap();
        assert!((r.gamma_psi - r.gamma_expected).abs() < 0.05, "{r:?}");
        assert!((r.delta_psi - r.delta_expected).abs() < 0.05, "{r:?}");
        assert!(r.range_ok);
    }
}

//! Localisation pipeline: per-point equivalence bounds against local
//! representatives, Fredholm certificates, and the aggregated verdict.
//!
//! For each point `tau` the pipeline measures how well the representative
//! matches the symbol near `tau` (shrinking-interval distance and the
//! infimum over a bump family), forms the interpolation-weighted
//! equivalence bound, and certifies Fredholmness of the representative by a
//! winding-number test. The global verdict holds only when every local
//! certificate is positive and every equivalence bound vanishes at grid
//! tolerance.

use std::collections::HashMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::{matuszewska_orlicz_indices, IndexGridSpec};
use crate::linalg;
use crate::majorant::{build_phi_theta, theta_range, MajorantGridSpec, PhiTheta};
use crate::nfunction::NFunction;
use crate::operators::{build, OperatorRole};
use crate::symbols::{
    local_distance, make_bump, wrap_angle, ShrinkSchedule, Symbol, SymbolSpec,
};

// ---------------------------------------------------------------------------
// Bump search
// ---------------------------------------------------------------------------

/// Geometric shrinking family of bumps used to approximate the infimum over
/// all localizing functions.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BumpSearchSpec {
    pub initial_w: f64,
    pub shrink: f64,
    pub levels: usize,
    /// Plateau half-width as a fraction of `w`.
    pub u_fraction: f64,
    pub points: usize,
}

impl Default for BumpSearchSpec {
    fn default() -> Self {
        BumpSearchSpec {
            initial_w: 1.5,
            shrink: 0.25,
            levels: 17,
            u_fraction: 0.5,
            points: 4096,
        }
    }
}

/// `inf` over the bump family of `sup |(a - b) f|`; nonincreasing under
/// refinement of the family.
pub fn inf_over_bumps(a: &Symbol, b: &Symbol, tau: f64, spec: &BumpSearchSpec) -> Result<f64> {
    if !(-PI..PI).contains(&tau) {
        return Err(Error::domain(format!("tau must lie in [-pi, pi), got {tau}")));
    }
    let mut w = spec.initial_w.min(0.99 * PI);
    let mut best = f64::INFINITY;
    for _ in 0..spec.levels {
        let bump = make_bump(tau, w, spec.u_fraction * w)?;
        let mut sup = 0.0f64;
        let n = spec.points.max(16);
        for k in 0..=n {
            let t = tau - w + 2.0 * w * k as f64 / n as f64;
            let f = bump.evaluate(t);
            if f > 0.0 {
                sup = sup.max((a.eval(t) - b.eval(t)).norm() * f);
            }
        }
        best = best.min(sup);
        w *= spec.shrink;
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Equivalence bound
// ---------------------------------------------------------------------------

/// The interpolation-weighted equivalence bound and its two factors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EquivalenceBound {
    pub bound: f64,
    /// Stechkin-style upper bound for the multiplier norm of `a - a_tau`.
    pub stechkin_upper: f64,
    /// Infimum over the bump family of `sup |(a - a_tau) f|`.
    pub inf_term: f64,
    pub theta: f64,
}

/// `c_interp * (3 c_space stechkin(a - a_tau))^{1-theta} * inf^theta`,
/// with the multiplier norm replaced by its Stechkin upper bound (the safe
/// direction) and the infimum approximated over a shrinking bump family.
pub fn equivalence_bound(
    a: &Symbol,
    a_tau: &Symbol,
    tau: f64,
    pt: &PhiTheta,
    c_space: f64,
    spec: &BumpSearchSpec,
) -> Result<EquivalenceBound> {
    // The difference is formed exactly for every kind pairing, so the
    // Stechkin factor uses the true supremum and variation of `a - a_tau`.
    let stechkin_upper = Symbol::difference(a, a_tau)?.stechkin_bound(c_space);
    let inf_term = inf_over_bumps(a, a_tau, tau, spec)?;
    let theta = pt.theta;
    let bound = pt.c_interp
        * (3.0 * stechkin_upper).powf(1.0 - theta)
        * inf_term.powf(theta);
    Ok(EquivalenceBound {
        bound,
        stechkin_upper,
        inf_term,
        theta,
    })
}

// ---------------------------------------------------------------------------
// Fredholm certificates
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Fredholm,
    NotFredholm,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FredholmCertificate {
    /// "winding" for continuous symbols, "finite-section" otherwise.
    pub method: String,
    pub min_abs: f64,
    pub winding: Option<i64>,
    /// Minus the winding number, for continuous nonvanishing symbols.
    pub index_estimate: Option<i64>,
    pub verdict: Verdict,
    /// Smallest singular values of growing sections; evidence attached to
    /// inconclusive verdicts.
    pub sigma_min_trend: Vec<(usize, f64)>,
}

/// Grid specification for the certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FredholmGridSpec {
    pub points: usize,
    /// `min |a| <= zero_rel_tol * sup |a|` counts as a zero.
    pub zero_rel_tol: f64,
    pub sigma_schedule: Vec<usize>,
}

impl Default for FredholmGridSpec {
    fn default() -> Self {
        FredholmGridSpec {
            points: 8192,
            zero_rel_tol: 1e-9,
            sigma_schedule: vec![16, 32, 64],
        }
    }
}

/// Global minimum of `|a|`: dense scan plus golden-section refinement
/// around the best grid point, so transversal zeros are resolved to
/// machine scale.
pub fn refined_min_abs(a: &Symbol, points: usize) -> f64 {
    let n = points.max(64);
    let step = 2.0 * PI / n as f64;
    let mut best = f64::INFINITY;
    let mut best_t = -PI;
    for k in 0..n {
        let t = -PI + step * k as f64;
        let v = a.eval(t).norm();
        if v < best {
            best = v;
            best_t = t;
        }
    }
    // golden-section on |a|^2 over the bracketing window
    let gr = 0.5 * (5f64.sqrt() - 1.0);
    let (mut lo, mut hi) = (best_t - step, best_t + step);
    let f = |t: f64| a.eval(t).norm_sqr();
    let mut x1 = hi - gr * (hi - lo);
    let mut x2 = lo + gr * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        }
    }
    best.min(f1.sqrt()).min(f2.sqrt())
}

/// Winding number of a continuous symbol by accumulated argument, together
/// with the refined minimum modulus. Fails when the symbol comes too close
/// to zero for the argument to be trustworthy.
pub fn winding_number(a: &Symbol, points: usize) -> Result<(i64, f64)> {
    let min_abs = refined_min_abs(a, points);
    if min_abs <= 0.0 {
        return Err(Error::domain("winding number undefined: symbol vanishes"));
    }
    let n = points.max(256);
    let mut total = 0.0f64;
    let mut prev = a.eval(-PI);
    for k in 1..=n {
        let t = -PI + 2.0 * PI * k as f64 / n as f64;
        let cur = a.eval(t);
        total += (cur / prev).arg();
        prev = cur;
    }
    let winding = (total / (2.0 * PI)).round();
    if (total / (2.0 * PI) - winding).abs() > 0.1 {
        return Err(Error::NoConvergence {
            what: "winding accumulation did not close to an integer".into(),
            achieved: total / (2.0 * PI),
            wanted: winding,
        });
    }
    Ok((winding as i64, min_abs))
}

/// Certify Fredholmness of a local representative. Continuous symbols get
/// the classical winding criterion; symbols with jumps get an inconclusive
/// verdict with finite-section evidence attached.
pub fn fredholm_certificate(a_tau: &Symbol, grid: &FredholmGridSpec) -> Result<FredholmCertificate> {
    if !a_tau.is_continuous() {
        let mut trend = Vec::with_capacity(grid.sigma_schedule.len());
        for &n in &grid.sigma_schedule {
            let t = build(a_tau, OperatorRole::Toeplitz, n)?;
            trend.push((n, linalg::sigma_min(&t.matrix)?));
        }
        return Ok(FredholmCertificate {
            method: "finite-section".into(),
            min_abs: refined_min_abs(a_tau, grid.points),
            winding: None,
            index_estimate: None,
            verdict: Verdict::Inconclusive,
            sigma_min_trend: trend,
        });
    }
    let min_abs = refined_min_abs(a_tau, grid.points);
    let threshold = grid.zero_rel_tol * a_tau.sup_norm().max(1e-300);
    if min_abs <= threshold {
        return Ok(FredholmCertificate {
            method: "winding".into(),
            min_abs,
            winding: None,
            index_estimate: None,
            verdict: Verdict::NotFredholm,
            sigma_min_trend: Vec::new(),
        });
    }
    let (winding, _) = winding_number(a_tau, grid.points)?;
    Ok(FredholmCertificate {
        method: "winding".into(),
        min_abs,
        winding: Some(winding),
        index_estimate: Some(-winding),
        verdict: Verdict::Fredholm,
        sigma_min_trend: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Cover check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverParams {
    /// Bump support half-width; when absent, it is matched to the largest
    /// circular gap between the points.
    pub w: Option<f64>,
    pub u_fraction: f64,
    pub points: usize,
}

impl Default for CoverParams {
    fn default() -> Self {
        CoverParams {
            w: None,
            u_fraction: 0.6,
            points: 8192,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverReport {
    /// Indices of the greedily chosen subcollection.
    pub chosen: Vec<usize>,
    pub w: f64,
    pub u: f64,
    pub min_sum: f64,
    pub max_sum: f64,
    /// `sup 1/g` over the grid.
    pub inv_sup: f64,
    /// `sup |g'| / g^2` by finite differences.
    pub inv_derivative_sup: f64,
}

fn circular_gap(sorted: &[f64]) -> f64 {
    let mut gap = 0.0f64;
    for w in sorted.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    if let (Some(first), Some(last)) = (sorted.first(), sorted.last()) {
        gap = gap.max(first + 2.0 * PI - last);
    }
    gap
}

/// Greedy cover of the circle by bump plateaus, then a grid check that the
/// selected bumps sum to at least one with a well-behaved reciprocal.
pub fn cover_and_partition_check(taus: &[f64], params: &CoverParams) -> Result<CoverReport> {
    if taus.is_empty() {
        return Err(Error::CoverFailure("no tau points supplied".into()));
    }
    for &t in taus {
        if !(-PI..PI).contains(&t) {
            return Err(Error::domain(format!("tau must lie in [-pi, pi), got {t}")));
        }
    }
    let mut sorted: Vec<(usize, f64)> = taus.iter().copied().enumerate().collect();
    sorted.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    let order: Vec<f64> = sorted.iter().map(|(_, t)| *t).collect();
    let gap = circular_gap(&order);
    let w = match params.w {
        Some(w) => w,
        None => {
            // plateau must span half the gap on each side, with headroom
            let w = 1.05 * 0.5 * gap / params.u_fraction;
            if w >= PI {
                return Err(Error::CoverFailure(format!(
                    "cover impossible with given widths: need half-width {w:.3} >= pi"
                )));
            }
            w.max(1e-3)
        }
    };
    if !(w > 0.0 && w < PI) {
        return Err(Error::CoverFailure(format!(
            "cover impossible with given widths: w = {w}"
        )));
    }
    let u = params.u_fraction * w;

    // Greedy circular plateau cover: unroll one extra period and repeatedly
    // take the plateau reaching farthest from the current coverage edge.
    // When the plateaus alone cannot chain, keep every bump and let the
    // grid sum decide.
    let mut unrolled: Vec<(f64, f64, usize)> = Vec::with_capacity(2 * sorted.len());
    for &(idx, t) in &sorted {
        unrolled.push((t - u, t + u, idx));
        unrolled.push((t - u + 2.0 * PI, t + u + 2.0 * PI, idx));
    }
    let start = unrolled[0].0;
    let target = start + 2.0 * PI;
    let mut chosen: Vec<usize> = Vec::new();
    let mut cov = start;
    let mut chained = true;
    while cov < target - 1e-12 {
        let best = unrolled
            .iter()
            .filter(|(s, _, _)| *s <= cov + 1e-12)
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
        match best {
            Some(&(_, end, idx)) if end > cov + 1e-12 => {
                if !chosen.contains(&idx) {
                    chosen.push(idx);
                }
                cov = end;
            }
            _ => {
                chained = false;
                break;
            }
        }
        if chosen.len() > sorted.len() {
            chained = false;
            break;
        }
    }
    if !chained {
        chosen = sorted.iter().map(|&(idx, _)| idx).collect();
    }

    let bumps: Vec<_> = chosen
        .iter()
        .map(|&i| make_bump(taus[i], w, u))
        .collect::<Result<Vec<_>>>()?;
    let n = params.points.max(256);
    let mut min_sum = f64::INFINITY;
    let mut max_sum = 0.0f64;
    let mut inv_deriv = 0.0f64;
    let mut prev_g = f64::NAN;
    let step = 2.0 * PI / n as f64;
    for k in 0..=n {
        let t = -PI + step * k as f64;
        let g: f64 = bumps.iter().map(|b| b.evaluate(t)).sum();
        min_sum = min_sum.min(g);
        max_sum = max_sum.max(g);
        if k > 0 && prev_g > 0.0 && g > 0.0 {
            let mid = 0.5 * (g + prev_g);
            inv_deriv = inv_deriv.max(((g - prev_g) / step).abs() / (mid * mid));
        }
        prev_g = g;
    }
    if min_sum < 1.0 - 1e-9 {
        return Err(Error::CoverFailure(format!(
            "cover impossible with given widths: min sum {min_sum:.6} < 1"
        )));
    }
    Ok(CoverReport {
        chosen,
        w,
        u,
        min_sum,
        max_sum,
        inv_sup: 1.0 / min_sum,
        inv_derivative_sup: inv_deriv,
    })
}

// ---------------------------------------------------------------------------
// Assignments and the pipeline
// ---------------------------------------------------------------------------

/// One localisation point: where, which interpolation parameter, and which
/// representative.
#[derive(Debug, Clone)]
pub struct LocalPoint {
    pub tau: f64,
    /// Defaults to the midpoint of the admissible interval.
    pub theta: Option<f64>,
    pub rep: Symbol,
    pub class: Option<String>,
}

#[derive(Debug, Clone)]
pub struct LocalAssignment {
    pub points: Vec<LocalPoint>,
}

impl LocalAssignment {
    /// Pointwise-constant representatives `a(tau_j)` on an even grid.
    pub fn pointwise_constant(a: &Symbol, count: usize) -> Result<LocalAssignment> {
        let mut points = Vec::with_capacity(count);
        for j in 0..count {
            let tau = -PI + 2.0 * PI * j as f64 / count as f64;
            points.push(LocalPoint {
                tau,
                theta: None,
                rep: Symbol::constant(a.eval(tau)),
                class: Some("constant".into()),
            });
        }
        Ok(LocalAssignment { points })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalPointSpec {
    pub tau: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    pub rep: SymbolSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

pub type AssignmentSpec = Vec<LocalPointSpec>;

impl LocalAssignment {
    pub fn from_json(s: &str) -> Result<LocalAssignment> {
        let spec: AssignmentSpec =
            serde_json::from_str(s).map_err(|e| Error::schema(format!("assignment: {e}")))?;
        let mut points = Vec::with_capacity(spec.len());
        for p in spec {
            points.push(LocalPoint {
                tau: p.tau,
                theta: p.theta,
                rep: p.rep.try_into()?,
                class: p.class,
            });
        }
        Ok(LocalAssignment { points })
    }
}

#[derive(Debug, Clone)]
pub struct LocaliseConfig {
    pub c_space: f64,
    pub bump: BumpSearchSpec,
    pub shrink: ShrinkSchedule,
    pub fredholm: FredholmGridSpec,
    pub majorant_grid: MajorantGridSpec,
    pub index_grid: IndexGridSpec,
    /// The distance term counts as zero below this fraction of `sup |a|`.
    pub dist_zero_rel_tol: f64,
    pub cover: CoverParams,
}

impl Default for LocaliseConfig {
    fn default() -> Self {
        LocaliseConfig {
            c_space: 1.0,
            bump: BumpSearchSpec::default(),
            shrink: ShrinkSchedule::default(),
            fredholm: FredholmGridSpec::default(),
            majorant_grid: MajorantGridSpec::default(),
            index_grid: IndexGridSpec::default(),
            dist_zero_rel_tol: 1e-8,
            cover: CoverParams::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalisationRow {
    pub tau: f64,
    pub theta: f64,
    /// Shrinking-interval estimate of the local distance.
    pub dist: f64,
    pub inf_over_bumps: f64,
    pub equivalence_bound: f64,
    /// The bound counts as zero: its infimum factor fell below tolerance.
    pub equivalence_zero: bool,
    pub certificate: FredholmCertificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GlobalVerdict {
    Fredholm,
    Withheld,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalisationReport {
    pub rows: Vec<LocalisationRow>,
    pub verdict: GlobalVerdict,
    /// Absolute tolerance under which a distance estimate counts as zero.
    pub dist_tolerance: f64,
    /// Where the constants in the bounds come from; the verdict itself only
    /// uses the zero test on the infimum factor, so the scale of `c_space`
    /// and `c_interp` cannot flip it.
    pub constants_provenance: String,
}

/// Run the full pipeline: cover check, one interpolation function per
/// distinct theta, then per-point rows and the aggregate verdict.
pub fn localise(
    a: &Symbol,
    phi: &NFunction,
    assignment: &LocalAssignment,
    config: &LocaliseConfig,
) -> Result<LocalisationReport> {
    if assignment.points.is_empty() {
        return Err(Error::CoverFailure("assignment has no points".into()));
    }
    let taus: Vec<f64> = assignment.points.iter().map(|p| p.tau).collect();
    cover_and_partition_check(&taus, &config.cover)?;

    let report = matuszewska_orlicz_indices(phi, &config.index_grid)?;
    let range = theta_range(&report)?;

    let mut cache: HashMap<u64, PhiTheta> = HashMap::new();
    let mut rows = Vec::with_capacity(assignment.points.len());
    let dist_tolerance = config.dist_zero_rel_tol * a.sup_norm().max(1e-300);

    for point in &assignment.points {
        let theta = point.theta.unwrap_or_else(|| range.midpoint());
        if !range.contains(theta) {
            return Err(Error::IndicesOutOfRange(format!(
                "theta({:.4}) = {theta} outside the admissible interval (0, {:.6})",
                point.tau, range.sup
            )));
        }
        let pt = match cache.entry(theta.to_bits()) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(build_phi_theta(phi, theta, &config.majorant_grid)?)
            }
        };
        let tau = wrap_angle(point.tau);
        let dist = local_distance(a, &point.rep, tau, &config.shrink)?;
        let eq = equivalence_bound(a, &point.rep, tau, pt, config.c_space, &config.bump)?;
        let certificate = fredholm_certificate(&point.rep, &config.fredholm)?;
        rows.push(LocalisationRow {
            tau,
            theta,
            dist: dist.value,
            inf_over_bumps: eq.inf_term,
            equivalence_bound: eq.bound,
            equivalence_zero: eq.inf_term <= dist_tolerance,
            certificate,
            class: point.class.clone(),
        });
    }

    let any_not = rows
        .iter()
        .any(|r| r.certificate.verdict == Verdict::NotFredholm);
    let any_inconclusive = rows
        .iter()
        .any(|r| r.certificate.verdict == Verdict::Inconclusive);
    let all_zero = rows.iter().all(|r| r.equivalence_zero);
    let all_fredholm = rows
        .iter()
        .all(|r| r.certificate.verdict == Verdict::Fredholm);
    let verdict = if all_fredholm && all_zero {
        GlobalVerdict::Fredholm
    } else if any_not || !all_zero {
        GlobalVerdict::Withheld
    } else if any_inconclusive {
        GlobalVerdict::Inconclusive
    } else {
        GlobalVerdict::Withheld
    };

    Ok(LocalisationReport {
        rows,
        verdict,
        dist_tolerance,
        constants_provenance:
            "stechkin factor uses the configured c_space; c_interp from the sampled envelope; \
             the verdict keys on the zero test of the infimum factor only"
                .into(),
    })
}

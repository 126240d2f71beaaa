//! Luxemburg-Nakano norms of finitely supported sequences, the Calderon
//! factorisation, and the interpolation-inequality experiments.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::majorant::PhiTheta;
use crate::nfunction::NFunction;
use crate::symbols::Symbol;

/// A finitely supported complex sequence over the integers. Support is
/// sorted and duplicate-free; zero values are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSequence {
    support: Vec<i64>,
    values: Vec<Complex64>,
}

impl FiniteSequence {
    pub fn new(pairs: &[(i64, Complex64)]) -> Result<FiniteSequence> {
        let mut sorted: Vec<(i64, Complex64)> = pairs.to_vec();
        sorted.sort_by_key(|(k, _)| *k);
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::domain(format!("duplicate index {}", w[0].0)));
            }
        }
        let (support, values) = sorted
            .into_iter()
            .filter(|(_, v)| v.norm() != 0.0)
            .unzip();
        Ok(FiniteSequence { support, values })
    }

    pub fn empty() -> FiniteSequence {
        FiniteSequence {
            support: Vec::new(),
            values: Vec::new(),
        }
    }

    /// The standard unit sequence `e_index`.
    pub fn unit(index: i64) -> FiniteSequence {
        FiniteSequence {
            support: vec![index],
            values: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn from_dense(start: i64, values: &[Complex64]) -> FiniteSequence {
        let pairs: Vec<(i64, Complex64)> = values
            .iter()
            .enumerate()
            .map(|(i, &v)| (start + i as i64, v))
            .collect();
        FiniteSequence::new(&pairs).expect("dense indices are distinct")
    }

    pub fn support(&self) -> &[i64] {
        &self.support
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, index: i64) -> Complex64 {
        match self.support.binary_search(&index) {
            Ok(i) => self.values[i],
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }

    pub fn infinity_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> FiniteSequence {
        if c.norm() == 0.0 {
            return FiniteSequence::empty();
        }
        FiniteSequence {
            support: self.support.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &FiniteSequence) -> FiniteSequence {
        let mut pairs: Vec<(i64, Complex64)> = self
            .support
            .iter()
            .zip(&self.values)
            .map(|(&k, &v)| (k, v))
            .collect();
        for (&k, &v) in other.support.iter().zip(&other.values) {
            match pairs.binary_search_by_key(&k, |(i, _)| *i) {
                Ok(i) => pairs[i].1 += v,
                Err(i) => pairs.insert(i, (k, v)),
            }
        }
        FiniteSequence::new(&pairs).expect("indices are distinct")
    }

    pub fn translate(&self, shift: i64) -> FiniteSequence {
        FiniteSequence {
            support: self.support.iter().map(|k| k + shift).collect(),
            values: self.values.clone(),
        }
    }

    /// Pointwise `|self| <= |other|` (supports may differ).
    pub fn dominated_by(&self, other: &FiniteSequence) -> bool {
        self.support
            .iter()
            .zip(&self.values)
            .all(|(&k, v)| v.norm() <= other.get(k).norm())
    }
}

/// `sum over support of phi(|f_n| / lambda)`. Terms are summed in a fixed
/// value order, so rearranging the support cannot change the result.
pub fn modular(phi: &NFunction, f: &FiniteSequence, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain(format!("modular needs lambda > 0, got {lambda}")));
    }
    let mut terms = Vec::with_capacity(f.len());
    for v in f.values() {
        terms.push(phi.eval_extended(v.norm() / lambda)?);
    }
    terms.sort_by(f64::total_cmp);
    Ok(terms.iter().sum())
}

const NORM_REL_TOL: f64 = 1e-14;
const NORM_MAX_ITER: usize = 200;

/// Luxemburg-Nakano norm: the infimum `lambda` with modular `<= 1`,
/// by bisection on the monotone map `lambda -> modular(f, lambda)`.
pub fn luxemburg_norm(phi: &NFunction, f: &FiniteSequence) -> Result<f64> {
    luxemburg_norm_tol(phi, f, NORM_REL_TOL)
}

/// Same, with an explicit relative tolerance on the returned value.
pub fn luxemburg_norm_tol(phi: &NFunction, f: &FiniteSequence, rel_tol: f64) -> Result<f64> {
    if f.is_empty() {
        return Ok(0.0);
    }
    let n = f.len() as f64;
    let sup = f.infinity_norm();
    let w = phi.inverse(1.0)?;
    // Guaranteed bracket from modular monotonicity: modular at `lo` is
    // >= 1; at `hi` it is <= 1 both by convexity through zero and by the
    // triangle inequality against scaled unit vectors. The triangle form
    // keeps the entry ratios of tabulated generators inside their tables.
    let mut lo = sup / phi.inverse(n)?;
    // summed in value order so the bracket is permutation-invariant
    let mut moduli: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
    moduli.sort_by(f64::total_cmp);
    let sum_abs: f64 = moduli.iter().sum();
    let mut hi = (sum_abs / w).min(n * sup * (1.0 + 1.0 / w));
    if modular(phi, f, lo)? <= 1.0 {
        return Ok(lo);
    }
    for _ in 0..4 {
        if modular(phi, f, hi)? <= 1.0 {
            break;
        }
        hi *= 2.0;
    }
    for _ in 0..NORM_MAX_ITER {
        if hi - lo <= rel_tol * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if modular(phi, f, mid)? > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// Explicit Calderon-product factorisation of `x` through `phi0` and
/// `phi1`: unit-ball factors plus the smallest pointwise constant.
#[derive(Debug, Clone)]
pub struct CalderonFactorization {
    pub y: FiniteSequence,
    pub z: FiniteSequence,
    pub lambda: f64,
}

/// Factor `x` as `|x_j| <= lambda |y_j|^{1-theta} |z_j|^theta` with
/// `||y||_{phi0} <= 1` and `||z||_{phi1} <= 1`, by pushing the normalised
/// moduli of `x` through `phi` and pulling back through each factor space.
pub fn calderon_factorize(
    phi: &NFunction,
    phi0: &NFunction,
    phi1: &NFunction,
    theta: f64,
    x: &FiniteSequence,
) -> Result<CalderonFactorization> {
    if x.is_empty() {
        return Err(Error::domain("cannot factorise the zero sequence"));
    }
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::domain(format!("theta must lie in (0, 1), got {theta}")));
    }
    let norm = luxemburg_norm(phi, x)?;
    let mut y_pairs = Vec::with_capacity(x.len());
    let mut z_pairs = Vec::with_capacity(x.len());
    let mut min_ratio = f64::INFINITY;
    for (&k, v) in x.support().iter().zip(x.values()) {
        let w = v.norm() / norm;
        let m = phi.eval_extended(w)?;
        let yj = phi0.inverse(m)?;
        let zj = phi1.inverse(m)?;
        let ratio = yj.powf(1.0 - theta) * zj.powf(theta) / w;
        min_ratio = min_ratio.min(ratio);
        y_pairs.push((k, Complex64::new(yj, 0.0)));
        z_pairs.push((k, Complex64::new(zj, 0.0)));
    }
    Ok(CalderonFactorization {
        y: FiniteSequence::new(&y_pairs)?,
        z: FiniteSequence::new(&z_pairs)?,
        lambda: norm / min_ratio,
    })
}

/// `max(max abs row sum, max abs column sum)`: an operator-norm upper bound
/// on every rearrangement-invariant sequence space, by lattice interpolation
/// between the extreme spaces.
pub fn l1_linf_upper_bound(m: &Array2<Complex64>) -> f64 {
    let mut row_max = 0.0f64;
    for r in m.rows() {
        row_max = row_max.max(r.iter().map(|z| z.norm()).sum());
    }
    let mut col_max = 0.0f64;
    for c in m.columns() {
        col_max = col_max.max(c.iter().map(|z| z.norm()).sum());
    }
    row_max.max(col_max)
}

/// Effort knobs for the norm lower-bound search.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct NormSearchConfig {
    pub starts: usize,
    pub steps: usize,
    pub seed: u64,
    /// Relative tolerance of the inner norm bisection.
    pub norm_tol: f64,
}

impl Default for NormSearchConfig {
    fn default() -> Self {
        NormSearchConfig {
            starts: 64,
            steps: 200,
            seed: 1,
            norm_tol: 1e-10,
        }
    }
}

fn ratio_for(
    m: &Array2<Complex64>,
    phi: &NFunction,
    x: &[Complex64],
    tol: f64,
) -> Result<f64> {
    let xv = Array1::from(x.to_vec());
    let y = m.dot(&xv);
    let fx = FiniteSequence::from_dense(0, x);
    if fx.is_empty() {
        return Ok(0.0);
    }
    let fy = FiniteSequence::from_dense(0, y.as_slice().unwrap());
    let nx = luxemburg_norm_tol(phi, &fx, tol)?;
    let ny = luxemburg_norm_tol(phi, &fy, tol)?;
    Ok(ny / nx)
}

/// Lower bound for the operator norm of `m` on the Orlicz space of `phi`,
/// by seeded multistart coordinate ascent over input vectors. Any returned
/// value is a certified lower bound; more effort only raises it.
pub fn operator_norm_lower_bound(
    m: &Array2<Complex64>,
    phi: &NFunction,
    cfg: &NormSearchConfig,
) -> Result<f64> {
    let n = m.ncols();
    if n == 0 {
        return Ok(0.0);
    }
    let mut rng = crate::sampling::rng(cfg.seed);
    let mut best = 0.0f64;

    let mut starts: Vec<Vec<Complex64>> = Vec::with_capacity(cfg.starts.max(2));
    // Best column as a probe: e_j maximising the image norm.
    let mut best_col = 0;
    let mut best_col_sum = -1.0;
    for j in 0..n {
        let s: f64 = m.column(j).iter().map(|z| z.norm()).sum();
        if s > best_col_sum {
            best_col_sum = s;
            best_col = j;
        }
    }
    let mut e = vec![Complex64::new(0.0, 0.0); n];
    e[best_col] = Complex64::new(1.0, 0.0);
    starts.push(e);
    // The l2 top singular direction is usually near-optimal.
    if let Ok(sv) = top_singular_vector(m) {
        starts.push(sv);
    }
    while starts.len() < cfg.starts.max(2) {
        starts.push(
            (0..n)
                .map(|_| crate::sampling::complex_in_disc(&mut rng, 1.0))
                .collect(),
        );
    }

    let candidates = [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.7, 0.7),
    ];
    for start in starts {
        let mut x = start;
        let mut current = ratio_for(m, phi, &x, cfg.norm_tol)?;
        best = best.max(current);
        for step in 0..cfg.steps {
            let j = step % n;
            let keep = x[j];
            let c = candidates[rng.random_range(0..candidates.len())];
            x[j] = if keep.norm() == 0.0 {
                c * 0.3
            } else {
                keep * c
            };
            let r = ratio_for(m, phi, &x, cfg.norm_tol)?;
            if r > current {
                current = r;
                best = best.max(r);
            } else {
                x[j] = keep;
            }
        }
    }
    Ok(best)
}

fn top_singular_vector(m: &Array2<Complex64>) -> Result<Vec<Complex64>> {
    let mh = linalg::adjoint(m);
    let n = m.ncols();
    let mut x = Array1::from_elem(n, Complex64::new(1.0, 0.5));
    for _ in 0..40 {
        let y = mh.dot(&m.dot(&x));
        let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            break;
        }
        x = y.mapv_into(|z| z / norm);
    }
    Ok(x.to_vec())
}

/// One interpolation-inequality experiment on a finite matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InterpolationCheckReport {
    /// Sampled lower bound for the Orlicz operator norm.
    pub lhs_lower: f64,
    /// `c_interp * phi_theta_upper^{1-theta} * sigma_max^theta`.
    pub rhs: f64,
    pub phi_theta_upper: f64,
    pub sigma_max: f64,
    pub c_interp: f64,
    pub violation: bool,
}

/// Check the two-space norm bound on a concrete matrix: the sampled lower
/// bound of the Orlicz norm must not exceed the interpolation product built
/// from upper estimates.
pub fn interpolation_bound_check(
    m: &Array2<Complex64>,
    phi: &NFunction,
    pt: &PhiTheta,
    cfg: &NormSearchConfig,
) -> Result<InterpolationCheckReport> {
    let lhs_lower = operator_norm_lower_bound(m, phi, cfg)?;
    let phi_theta_upper = l1_linf_upper_bound(m);
    let sigma_max = linalg::sigma_max(m)?;
    let rhs =
        pt.c_interp * phi_theta_upper.powf(1.0 - pt.theta) * sigma_max.powf(pt.theta);
    Ok(InterpolationCheckReport {
        lhs_lower,
        rhs,
        phi_theta_upper,
        sigma_max,
        c_interp: pt.c_interp,
        violation: lhs_lower > rhs * (1.0 + 1e-9),
    })
}

/// One row of the multiplier-inclusion experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplierInclusionRow {
    pub n: usize,
    pub lhs_lower: f64,
    pub violation: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplierInclusionReport {
    /// `c_interp * stechkin_theta^{1-theta} * sup^theta`.
    pub rhs: f64,
    pub stechkin_theta: f64,
    pub sup_norm: f64,
    pub rows: Vec<MultiplierInclusionRow>,
}

impl MultiplierInclusionReport {
    pub fn any_violation(&self) -> bool {
        self.rows.iter().any(|r| r.violation)
    }
}

/// Instantiate the multiplier inclusion chain on finite Laurent
/// truncations: sampled Orlicz lower bounds against the interpolation
/// product of the Stechkin upper bound and the supremum norm.
pub fn multiplier_inclusion_check(
    a: &Symbol,
    phi: &NFunction,
    pt: &PhiTheta,
    c_space: f64,
    schedule: &[usize],
    cfg: &NormSearchConfig,
) -> Result<MultiplierInclusionReport> {
    let stechkin_theta = a.stechkin_bound(c_space);
    let sup = a.sup_norm();
    let rhs = pt.c_interp * stechkin_theta.powf(1.0 - pt.theta) * sup.powf(pt.theta);
    let mut rows = Vec::with_capacity(schedule.len());
    for &n in schedule {
        let tr = crate::operators::build(a, crate::operators::OperatorRole::Laurent, n)?;
        let lhs = operator_norm_lower_bound(&tr.matrix, phi, cfg)?;
        rows.push(MultiplierInclusionRow {
            n,
            lhs_lower: lhs,
            violation: lhs > rhs * (1.0 + 1e-9),
        });
    }
    Ok(MultiplierInclusionReport {
        rhs,
        stechkin_theta,
        sup_norm: sup,
        rows,
    })
}

/// JSON schema for sequences: array of `[index, re, im]` triples.
pub type SequenceSpec = Vec<(i64, f64, f64)>;

impl FiniteSequence {
    pub fn from_json(s: &str) -> Result<FiniteSequence> {
        let spec: SequenceSpec =
            serde_json::from_str(s).map_err(|e| Error::schema(format!("sequence: {e}")))?;
        let pairs: Vec<(i64, Complex64)> = spec
            .into_iter()
            .map(|(k, re, im)| (k, Complex64::new(re, im)))
            .collect();
        FiniteSequence::new(&pairs)
    }

    pub fn to_spec(&self) -> SequenceSpec {
        self.support
            .iter()
            .zip(&self.values)
            .map(|(&k, v)| (k, v.re, v.im))
            .collect()
    }
}

//! Finite truncations of Laurent, Toeplitz and Hankel operators, and the
//! exact algebraic identities they satisfy.
//!
//! Matrices are dense; size guards are computed from symbol degrees so that
//! every checked identity window is provably untruncated, which turns the
//! operator identities into machine-checkable equalities.
//!
//! Entry conventions, for a symbol with Fourier coefficients `a_k`:
//! Laurent `(j,k) -> a_{j-k}` on the window `-N..=N`, Toeplitz the same on
//! `0..N`, Hankel-plus `(j,k) -> a_{j+k+1}`, Hankel-minus
//! `(j,k) -> a_{-j-k-1}`.

// TODO: FFT-based assembly and matvec for N > 1024.

use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::symbols::{Symbol, TrigPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorRole {
    Laurent,
    Toeplitz,
    HankelPlus,
    HankelMinus,
}

/// A dense finite section of a convolution-type operator.
#[derive(Debug, Clone)]
pub struct OperatorTruncation {
    pub role: OperatorRole,
    /// Window parameter: Laurent uses indices `-n..=n`, the others `0..n`.
    pub n: usize,
    pub matrix: Array2<Complex64>,
    pub symbol: String,
}

/// Coefficients of `a` over `-m..=m` as a closure-friendly lookup.
struct CoeffTable {
    m: i64,
    values: Vec<Complex64>,
}

impl CoeffTable {
    fn new(a: &Symbol, m: i64) -> Result<CoeffTable> {
        Ok(CoeffTable {
            m,
            values: a.coefficients(m)?,
        })
    }

    fn get(&self, k: i64) -> Complex64 {
        if k.abs() > self.m {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[(k + self.m) as usize]
        }
    }
}

/// Build the dense truncation of the requested role.
pub fn build(a: &Symbol, role: OperatorRole, n: usize) -> Result<OperatorTruncation> {
    if n == 0 {
        return Err(Error::domain("truncation size must be at least 1"));
    }
    let n_i = n as i64;
    let reach = match role {
        OperatorRole::Laurent => 2 * n_i,
        OperatorRole::Toeplitz => n_i - 1,
        OperatorRole::HankelPlus | OperatorRole::HankelMinus => 2 * n_i - 1,
    };
    let table = CoeffTable::new(a, reach.max(0))?;
    let dim = match role {
        OperatorRole::Laurent => 2 * n + 1,
        _ => n,
    };
    let mut matrix = Array2::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    for j in 0..dim {
        for k in 0..dim {
            let (jj, kk) = match role {
                OperatorRole::Laurent => (j as i64 - n_i, k as i64 - n_i),
                _ => (j as i64, k as i64),
            };
            matrix[(j, k)] = match role {
                OperatorRole::Laurent | OperatorRole::Toeplitz => table.get(jj - kk),
                OperatorRole::HankelPlus => table.get(jj + kk + 1),
                OperatorRole::HankelMinus => table.get(-jj - kk - 1),
            };
        }
    }
    Ok(OperatorTruncation {
        role,
        n,
        matrix,
        symbol: a.describe(),
    })
}

/// Largest singular value of a truncation.
pub fn l2_norm(t: &OperatorTruncation) -> Result<f64> {
    linalg::sigma_max(&t.matrix)
}

fn require_trig<'a>(a: &'a Symbol, what: &str) -> Result<&'a TrigPoly> {
    a.as_trig_poly()
        .ok_or_else(|| Error::domain(format!("{what} needs trigonometric polynomial symbols")))
}

fn window_residual(a: &Array2<Complex64>, b: &Array2<Complex64>, window: usize) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..window {
        for k in 0..window {
            worst = worst.max((a[(j, k)] - b[(j, k)]).norm());
        }
    }
    worst
}

/// Max-abs residual of `T(ab) - T(a)T(b) - H(a)H(b~)` over the leading
/// `window x window` block. Zero up to rounding for band-limited symbols
/// once `n >= window + deg a + deg b + 1`.
pub fn widom_residual(a: &Symbol, b: &Symbol, n: usize, window: usize) -> Result<f64> {
    let ta = require_trig(a, "widom_residual")?;
    let tb = require_trig(b, "widom_residual")?;
    let needed = window as i64 + ta.degree() + tb.degree() + 1;
    if (n as i64) < needed {
        return Err(Error::domain(format!(
            "truncation too small: need n >= {needed}, got {n}"
        )));
    }
    let ab = Symbol::from_trig(ta.mul(tb))?;
    let t_ab = build(&ab, OperatorRole::Toeplitz, n)?.matrix;
    let t_a = build(a, OperatorRole::Toeplitz, n)?.matrix;
    let t_b = build(b, OperatorRole::Toeplitz, n)?.matrix;
    let h_a = build(a, OperatorRole::HankelPlus, n)?.matrix;
    let h_bt = build(b, OperatorRole::HankelMinus, n)?.matrix;
    let rhs = t_a.dot(&t_b) + h_a.dot(&h_bt);
    Ok(window_residual(&t_ab, &rhs, window))
}

/// Residuals of the translation-invariance identities.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ShiftInvarianceResiduals {
    pub toeplitz: f64,
    pub laurent: f64,
}

impl ShiftInvarianceResiduals {
    pub fn max(&self) -> f64 {
        self.toeplitz.max(self.laurent)
    }
}

/// Residuals of `T(chi_-s) T(a) T(chi_s) = T(a)` and its Laurent analogue
/// over the leading window.
pub fn shift_invariance_residual(
    a: &Symbol,
    shift: u32,
    n: usize,
    window: usize,
) -> Result<ShiftInvarianceResiduals> {
    let ta = require_trig(a, "shift_invariance_residual")?;
    let s = shift as i64;
    if s < 1 {
        return Err(Error::domain("shift must be positive"));
    }
    let needed = window as i64 + s + ta.degree();
    if (n as i64) < needed {
        return Err(Error::domain(format!(
            "truncation too small: need n >= {needed}, got {n}"
        )));
    }
    let chi_plus = Symbol::chi(s);
    let chi_minus = Symbol::chi(-s);

    let t_a = build(a, OperatorRole::Toeplitz, n)?.matrix;
    let t_p = build(&chi_plus, OperatorRole::Toeplitz, n)?.matrix;
    let t_m = build(&chi_minus, OperatorRole::Toeplitz, n)?.matrix;
    let toeplitz = window_residual(&t_m.dot(&t_a).dot(&t_p), &t_a, window);

    let l_a = build(a, OperatorRole::Laurent, n)?.matrix;
    let l_p = build(&chi_plus, OperatorRole::Laurent, n)?.matrix;
    let l_m = build(&chi_minus, OperatorRole::Laurent, n)?.matrix;
    let product = l_m.dot(&l_a).dot(&l_p);
    // compare on the centred window of the Laurent grid
    let off = n - window / 2 - window % 2;
    let mut laurent = 0.0f64;
    for j in 0..window {
        for k in 0..window {
            laurent = laurent.max((product[(j + off, k + off)] - l_a[(j + off, k + off)]).norm());
        }
    }
    Ok(ShiftInvarianceResiduals { toeplitz, laurent })
}

/// Finite-section consistency of the supremum-norm equality for Laurent
/// multipliers, plus the Toeplitz trend.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct L2ConsistencyReport {
    pub sup_norm: f64,
    /// `(N, sigma_max of the dimension-N section)`. The Laurent section
    /// over the window `-m..=m` is entrywise the same matrix as the
    /// Toeplitz section of dimension `2m + 1`, so one column carries both
    /// trends; `laurent_section_identical` witnesses the identity.
    pub rows: Vec<(usize, f64)>,
    /// `L_m == T_{2m+1}` entrywise, verified on the smallest window.
    pub laurent_section_identical: bool,
    pub nondecreasing: bool,
    pub bounded_by_sup: bool,
    /// `(sup - sigma(top N)) / sup`
    pub final_gap: f64,
}

/// Track `sigma_max` of the finite sections against the symbol supremum:
/// nondecreasing in `N`, bounded by the supremum, closing the gap at the
/// top of the schedule.
pub fn l2_multiplier_consistency(a: &Symbol, schedule: &[usize]) -> Result<L2ConsistencyReport> {
    if schedule.is_empty() {
        return Err(Error::domain("schedule must not be empty"));
    }
    let sup = a.sup_norm();
    let mut rows = Vec::with_capacity(schedule.len());
    for &n in schedule {
        let t_sigma = l2_norm(&build(a, OperatorRole::Toeplitz, n)?)?;
        rows.push((n, t_sigma));
    }
    let m = schedule[0] / 2;
    let laurent = build(a, OperatorRole::Laurent, m.max(1))?.matrix;
    let toeplitz = build(a, OperatorRole::Toeplitz, 2 * m.max(1) + 1)?.matrix;
    let laurent_section_identical = laurent
        .iter()
        .zip(toeplitz.iter())
        .all(|(x, y)| (x - y).norm() == 0.0);
    let tol = 1e-4 * sup.max(1.0);
    let nondecreasing = rows.windows(2).all(|w| w[1].1 >= w[0].1 - tol);
    let bounded_by_sup = rows.iter().all(|r| r.1 <= sup + tol);
    let last = rows.last().unwrap();
    let final_gap = (sup - last.1) / sup.max(1e-300);
    Ok(L2ConsistencyReport {
        sup_norm: sup,
        rows,
        laurent_section_identical,
        nondecreasing,
        bounded_by_sup,
        final_gap,
    })
}

/// `sigma_max(H_N(a) - H_N(fejer_n(a)))` per `n`: the finite-rank
/// approximation mechanism behind Hankel compactness, visible as decay.
pub fn hankel_fejer_decay(
    a: &Symbol,
    n_schedule: &[i64],
    big_n: usize,
) -> Result<Vec<(i64, f64)>> {
    if !a.is_continuous() {
        return Err(Error::domain(format!(
            "symbol not continuous: largest jump {:.3e}",
            a.max_jump()
        )));
    }
    let h_a = build(a, OperatorRole::HankelPlus, big_n)?.matrix;
    let mut out = Vec::with_capacity(n_schedule.len());
    for &n in n_schedule {
        let fe = a.fejer_mean(n)?;
        let h_f = build(&fe, OperatorRole::HankelPlus, big_n)?.matrix;
        let diff = &h_a - &h_f;
        out.push((n, linalg::sigma_max(&diff)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn toeplitz_of_shift_is_subdiagonal() {
        let t = build(&Symbol::chi(1), OperatorRole::Toeplitz, 3).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let expect = if j == k + 1 { 1.0 } else { 0.0 };
                assert_eq!(t.matrix[(j, k)], c(expect, 0.0));
            }
        }
    }

    #[test]
    fn laurent_of_constant_is_identity() {
        let t = build(&Symbol::constant(c(1.0, 0.0)), OperatorRole::Laurent, 4).unwrap();
        for j in 0..9 {
            for k in 0..9 {
                let expect = if j == k { 1.0 } else { 0.0 };
                assert_eq!(t.matrix[(j, k)], c(expect, 0.0));
            }
        }
    }

    #[test]
    fn hankel_of_shift_is_corner() {
        // a = chi_1: hat a_{j+k+1} = delta_{j+k,0}, a single corner one.
        let h = build(&Symbol::chi(1), OperatorRole::HankelPlus, 5).unwrap();
        for j in 0..5 {
            for k in 0..5 {
                let expect = if j == 0 && k == 0 { 1.0 } else { 0.0 };
                assert_eq!(h.matrix[(j, k)], c(expect, 0.0));
            }
        }
    }

    #[test]
    fn diagonal_constancy_matches_coefficients() {
        let mut rng = sampling::rng(19);
        let a = sampling::random_trig_poly(&mut rng, 4);
        let t = build(&a, OperatorRole::Toeplitz, 9).unwrap();
        for j in 0..9i64 {
            for k in 0..9i64 {
                let expect = a.fourier_coefficient(j - k).unwrap();
                assert_eq!(t.matrix[(j as usize, k as usize)], expect);
            }
        }
    }

    #[test]
    fn widom_hand_example_shift_pair() {
        // a = chi_1, b = chi_{-1}: T(1) = I, T(a)T(b) = diag(0,1,1,...),
        // H(a)H(b~) fills the missing corner.
        let a = Symbol::chi(1);
        let b = Symbol::chi(-1);
        let r = widom_residual(&a, &b, 8, 4).unwrap();
        assert!(r < 1e-15, "residual {r}");
        let t_a = build(&a, OperatorRole::Toeplitz, 4).unwrap().matrix;
        let t_b = build(&b, OperatorRole::Toeplitz, 4).unwrap().matrix;
        let prod = t_a.dot(&t_b);
        assert_eq!(prod[(0, 0)], c(0.0, 0.0));
        assert_eq!(prod[(1, 1)], c(1.0, 0.0));
        let h_a = build(&a, OperatorRole::HankelPlus, 4).unwrap().matrix;
        let h_bt = build(&b, OperatorRole::HankelMinus, 4).unwrap().matrix;
        let corner = h_a.dot(&h_bt);
        assert_eq!(corner[(0, 0)], c(1.0, 0.0));
    }

    #[test]
    fn widom_vanishes_for_constant_factor() {
        let mut rng = sampling::rng(2);
        let a = sampling::random_trig_poly(&mut rng, 3);
        let b = Symbol::constant(c(0.7, -0.4));
        assert!(widom_residual(&a, &b, 12, 6).unwrap() < 1e-14);
    }

    #[test]
    fn widom_random_pairs_within_rounding() {
        let mut rng = sampling::rng(33);
        for _ in 0..10 {
            let a = sampling::random_trig_poly(&mut rng, 5);
            let b = sampling::random_trig_poly(&mut rng, 5);
            let r = widom_residual(&a, &b, 40, 20).unwrap();
            assert!(r <= 1e-12, "residual {r}");
        }
    }

    #[test]
    fn widom_guards_window_size() {
        let a = Symbol::chi(1);
        assert!(widom_residual(&a, &a, 4, 4).is_err());
    }

    #[test]
    fn shift_invariance_exact_for_polynomials() {
        let mut rng = sampling::rng(4);
        for shift in [1u32, 2, 3] {
            let a = sampling::random_trig_poly(&mut rng, 4);
            let r = shift_invariance_residual(&a, shift, 16, 8).unwrap();
            assert!(r.max() <= 1e-13, "shift {shift}: {r:?}");
        }
        let id = Symbol::constant(c(1.0, 0.0));
        let r = shift_invariance_residual(&id, 2, 12, 6).unwrap();
        assert_eq!(r.max(), 0.0);
    }

    #[test]
    fn l2_norm_examples() {
        let id = build(&Symbol::constant(c(1.0, 0.0)), OperatorRole::Toeplitz, 6).unwrap();
        assert!((l2_norm(&id).unwrap() - 1.0).abs() < 1e-9);
        let shift = build(&Symbol::chi(1), OperatorRole::Toeplitz, 6).unwrap();
        assert!((l2_norm(&shift).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn l2_norm_approaches_sup() {
        // a = 2 + chi_1 has sup 3; finite sections climb toward it.
        let a = Symbol::trig_poly(&[(0, c(2.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        let t64 = l2_norm(&build(&a, OperatorRole::Toeplitz, 64).unwrap()).unwrap();
        assert!(t64 > 2.0 && t64 < 3.0);
        let t256 = l2_norm(&build(&a, OperatorRole::Toeplitz, 256).unwrap()).unwrap();
        assert!(t256 > t64 - 1e-9 && t256 < 3.0 + 1e-9);
        assert!(3.0 - t256 < 0.01);
    }

    #[test]
    fn l2_consistency_for_shift_is_exactly_one() {
        let r = l2_multiplier_consistency(&Symbol::chi(2), &[8, 16, 32]).unwrap();
        assert!(r.nondecreasing && r.bounded_by_sup);
        assert!(r.laurent_section_identical);
        for (_, sigma) in &r.rows {
            assert!((sigma - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn l2_consistency_two_cos() {
        let a = Symbol::trig_poly(&[(1, c(1.0, 0.0)), (-1, c(1.0, 0.0))]).unwrap();
        let r = l2_multiplier_consistency(&a, &[32, 64, 128, 256, 512]).unwrap();
        assert!(r.nondecreasing, "{:?}", r.rows);
        assert!(r.bounded_by_sup);
        assert!(r.final_gap < 0.01, "gap {}", r.final_gap);
    }

    #[test]
    fn hankel_fejer_exact_zero_for_polynomials() {
        let mut rng = sampling::rng(9);
        let a = sampling::random_trig_poly(&mut rng, 3);
        let rows = hankel_fejer_decay(&a, &[3, 5, 8], 16).unwrap();
        // once n >= deg the Fejer mean only damps the coefficients that the
        // Hankel matrix sees, so the difference shrinks like 1/n
        assert!(rows.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-12));
        let exact = a.fejer_mean(40).unwrap();
        let h_a = build(&a, OperatorRole::HankelPlus, 16).unwrap().matrix;
        let h_f = build(&exact, OperatorRole::HankelPlus, 16).unwrap().matrix;
        // damping factors only touch |k| <= 3 here, difference tiny
        let diff = &h_a - &h_f;
        assert!(linalg::sigma_max(&diff).unwrap() < 0.3);
    }

    #[test]
    fn hankel_fejer_decays_for_continuous_hat() {
        // periodic hat |theta| is continuous with a kink; decay is monotone
        // within noise.
        let hat = Symbol::piecewise(vec![
            crate::symbols::Piece {
                from: -PI,
                to: 0.0,
                expr: crate::symbols::Expr::parse("-1*theta").unwrap(),
            },
            crate::symbols::Piece {
                from: 0.0,
                to: PI,
                expr: crate::symbols::Expr::parse("theta").unwrap(),
            },
        ])
        .unwrap();
        let rows = hankel_fejer_decay(&hat, &[2, 4, 8, 16], 24).unwrap();
        assert!(rows.last().unwrap().1 < rows.first().unwrap().1);
        assert!(rows.last().unwrap().1 < 0.2);
    }

    #[test]
    fn hankel_fejer_rejects_jumps() {
        let jumpy = Symbol::piecewise(vec![
            crate::symbols::Piece {
                from: -PI,
                to: 0.0,
                expr: crate::symbols::Expr::real(0.0),
            },
            crate::symbols::Piece {
                from: 0.0,
                to: PI,
                expr: crate::symbols::Expr::real(1.0),
            },
        ])
        .unwrap();
        assert!(hankel_fejer_decay(&jumpy, &[2, 4], 8).is_err());
    }

    #[test]
    fn flip_conjugation_matches_hankel_minus() {
        // H(a~) = J Q L(a) P compressed to the window: row j of the flipped
        // compression is row -j-1 of the Laurent matrix.
        let mut rng = sampling::rng(14);
        let a = sampling::random_trig_poly(&mut rng, 3);
        let n = 12usize;
        let w = 4usize;
        let l = build(&a, OperatorRole::Laurent, n).unwrap().matrix;
        let h = build(&a, OperatorRole::HankelMinus, w).unwrap().matrix;
        let center = n as i64;
        for j in 0..w as i64 {
            for k in 0..w as i64 {
                let from_l = l[((center - j - 1) as usize, (center + k) as usize)];
                assert_eq!(from_l, h[(j as usize, k as usize)], "j={j} k={k}");
            }
        }
    }
}

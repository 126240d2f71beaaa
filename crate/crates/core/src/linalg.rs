//! Dense complex linear algebra: largest/smallest singular values and LU
//! solves. Desk scale only; matrices stay dense and iterations are plain
//! power methods.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub fn adjoint(m: &Array2<Complex64>) -> Array2<Complex64> {
    m.t().mapv(|z| z.conj())
}

pub fn frobenius(m: &Array2<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn random_unit(n: usize, rng: &mut ChaCha8Rng) -> Array1<Complex64> {
    let mut v = Array1::from_elem(n, Complex64::new(0.0, 0.0));
    for z in v.iter_mut() {
        *z = Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
    }
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.mapv_into(|z| z / norm)
}

const LANCZOS_MAX_STEPS: usize = 240;
const LANCZOS_TOL: f64 = 1e-12;

/// Largest eigenvalue of the real symmetric tridiagonal with diagonal
/// `alpha` and off-diagonal `beta`, by Sturm-count bisection.
fn tridiag_lambda_max(alpha: &[f64], beta: &[f64]) -> f64 {
    let k = alpha.len();
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for i in 0..k {
        let b_prev = if i > 0 { beta[i - 1].abs() } else { 0.0 };
        let b_next = if i < k - 1 { beta[i].abs() } else { 0.0 };
        hi = hi.max(alpha[i] + b_prev + b_next);
        lo = lo.min(alpha[i] - b_prev - b_next);
    }
    // count of eigenvalues below x via the LDL^T sign recurrence
    let count_below = |x: f64| -> usize {
        let mut count = 0usize;
        let mut d = 1.0f64;
        for i in 0..k {
            let off = if i > 0 { beta[i - 1] * beta[i - 1] / d } else { 0.0 };
            d = (alpha[i] - x) - off;
            if d == 0.0 {
                d = -1e-300;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    };
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..120 {
        if hi - lo <= 1e-15 * hi.abs().max(1e-300) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if count_below(mid) >= k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Lanczos on the Hermitian product `M^H M` with full reorthogonalisation.
/// The returned value is the largest Ritz value, hence never above the true
/// top eigenvalue; Krylov acceleration resolves the clustered tops of
/// Toeplitz sections in a few hundred matvecs where plain power iteration
/// stalls.
fn lanczos_lambda_max(
    m: &Array2<Complex64>,
    mh: &Array2<Complex64>,
    start: Array1<Complex64>,
) -> Result<f64> {
    let n = m.ncols();
    let max_steps = LANCZOS_MAX_STEPS.min(n);
    let norm0 = start.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm0 == 0.0 {
        return Err(Error::domain("lanczos start vector is zero"));
    }
    let mut q = vec![start.mapv(|z| z / norm0)];
    let mut alpha: Vec<f64> = Vec::with_capacity(max_steps);
    let mut beta: Vec<f64> = Vec::with_capacity(max_steps);
    let mut best = 0.0f64;
    let mut stable = 0u32;
    let scale = frobenius(m);
    for k in 0..max_steps {
        let qk = &q[k];
        let mut w = mh.dot(&m.dot(qk));
        let a_k = qk
            .iter()
            .zip(w.iter())
            .map(|(u, v)| (u.conj() * v).re)
            .sum::<f64>();
        alpha.push(a_k);
        // full reorthogonalisation keeps the basis honest in float
        for qj in &q {
            let proj: Complex64 = qj
                .iter()
                .zip(w.iter())
                .map(|(u, v)| u.conj() * v)
                .sum();
            ndarray::Zip::from(&mut w).and(qj).for_each(|wi, qi| {
                *wi -= proj * qi;
            });
        }
        let b_k = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let lam = tridiag_lambda_max(&alpha, &beta);
        if b_k <= 1e-13 * scale * scale {
            // invariant subspace: the Ritz value is exact on it
            return Ok(lam.max(0.0));
        }
        if lam - best <= LANCZOS_TOL * lam.abs().max(1e-300) {
            stable += 1;
            if stable >= 3 {
                return Ok(lam.max(best).max(0.0));
            }
        } else {
            stable = 0;
        }
        best = best.max(lam);
        beta.push(b_k);
        q.push(w.mapv_into(|z| z / b_k));
    }
    // The Krylov budget ran out; the largest Ritz value is still a valid
    // lower bound and, at this depth, accurate far beyond our consumers'
    // tolerances.
    Ok(best.max(0.0))
}

/// Largest singular value via Lanczos on `M^H M`, from a slowly varying
/// start (large overlap with the top singular vector of smooth-symbol
/// sections; the Krylov space absorbs the rest).
pub fn sigma_max(m: &Array2<Complex64>) -> Result<f64> {
    let frob = frobenius(m);
    if frob == 0.0 {
        return Ok(0.0);
    }
    let mh = adjoint(m);
    let n = m.ncols();
    let mut rng = ChaCha8Rng::seed_from_u64(0x517a_9a2c);
    let mut start = Array1::from_elem(n, Complex64::new(1.0, 0.0));
    for (i, z) in start.iter_mut().enumerate() {
        *z += Complex64::new(0.0, 1e-3 * (i as f64 + 1.0).sin());
        *z += random_unit(1, &mut rng)[0] * 1e-6;
    }
    let lam = lanczos_lambda_max(m, &mh, start)?;
    Ok(lam.sqrt())
}

/// LU factorisation with partial pivoting: `A[piv] = L U`.
pub struct Lu {
    lu: Array2<Complex64>,
    piv: Vec<usize>,
    /// Smallest absolute pivot encountered, as a singularity witness.
    pub min_pivot: f64,
}

impl Lu {
    pub fn factor(a: &Array2<Complex64>) -> Result<Lu> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::domain("LU needs a square matrix"));
        }
        let mut lu = a.clone();
        let mut piv: Vec<usize> = (0..n).collect();
        let mut min_pivot = f64::INFINITY;
        for k in 0..n {
            let mut p = k;
            let mut pmax = lu[(k, k)].norm();
            for i in k + 1..n {
                let v = lu[(i, k)].norm();
                if v > pmax {
                    pmax = v;
                    p = i;
                }
            }
            min_pivot = min_pivot.min(pmax);
            if p != k {
                piv.swap(k, p);
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
            }
            let pivot = lu[(k, k)];
            if pivot.norm() == 0.0 {
                continue; // exactly singular; solves will refuse
            }
            for i in k + 1..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                for j in k + 1..n {
                    let sub = f * lu[(k, j)];
                    lu[(i, j)] -= sub;
                }
            }
        }
        Ok(Lu { lu, piv, min_pivot })
    }

    pub fn is_singular(&self) -> bool {
        self.min_pivot == 0.0
    }

    /// Solve `A x = b`.
    pub fn solve(&self, b: &Array1<Complex64>) -> Result<Array1<Complex64>> {
        if self.is_singular() {
            return Err(Error::domain("matrix is numerically singular"));
        }
        let n = self.lu.nrows();
        let mut x = Array1::from_elem(n, Complex64::new(0.0, 0.0));
        for i in 0..n {
            x[i] = b[self.piv[i]];
        }
        for i in 1..n {
            for j in 0..i {
                let sub = self.lu[(i, j)] * x[j];
                x[i] -= sub;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let sub = self.lu[(i, j)] * x[j];
                x[i] -= sub;
            }
            x[i] /= self.lu[(i, i)];
        }
        Ok(x)
    }

    /// Solve `A^H x = b` using the same factors.
    pub fn solve_adjoint(&self, b: &Array1<Complex64>) -> Result<Array1<Complex64>> {
        if self.is_singular() {
            return Err(Error::domain("matrix is numerically singular"));
        }
        let n = self.lu.nrows();
        // A = P^T L U, so A^H = U^H L^H P; forward with U^H, back with L^H,
        // then undo the permutation.
        let mut y = b.clone();
        for i in 0..n {
            for j in 0..i {
                let sub = self.lu[(j, i)].conj() * y[j];
                y[i] -= sub;
            }
            y[i] /= self.lu[(i, i)].conj();
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let sub = self.lu[(j, i)].conj() * y[j];
                y[i] -= sub;
            }
        }
        let mut x = Array1::from_elem(n, Complex64::new(0.0, 0.0));
        for i in 0..n {
            x[self.piv[i]] = y[i];
        }
        Ok(x)
    }
}

/// Smallest singular value via inverse power iteration on `(M^H M)^{-1}`.
/// Returns 0 for numerically singular input.
pub fn sigma_min(m: &Array2<Complex64>) -> Result<f64> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::domain("sigma_min needs a square matrix"));
    }
    let scale = frobenius(m);
    if scale == 0.0 {
        return Ok(0.0);
    }
    let lu = Lu::factor(m)?;
    if lu.min_pivot <= 1e-14 * scale {
        return Ok(0.0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e_55ed);
    let mut x = random_unit(n, &mut rng);
    let mut mu_prev = 0.0f64;
    for _ in 0..3000 {
        // y = M^{-1} M^{-H} x, one step of power iteration on (M^H M)^{-1}.
        let w = lu.solve_adjoint(&x)?;
        let y = lu.solve(&w)?;
        let mu = x
            .iter()
            .zip(y.iter())
            .map(|(a, b)| (a.conj() * b).re)
            .sum::<f64>();
        let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        x = y.mapv_into(|z| z / norm);
        if (mu - mu_prev).abs() <= 1e-12 * mu.abs().max(1e-300) {
            mu_prev = mu;
            break;
        }
        mu_prev = mu;
    }
    if mu_prev <= 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / mu_prev.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sigma_max_identity_and_zero() {
        let id: Array2<Complex64> = Array2::eye(5);
        assert!((sigma_max(&id).unwrap() - 1.0).abs() < 1e-9);
        let zero = Array2::from_elem((4, 4), c(0.0, 0.0));
        assert_eq!(sigma_max(&zero).unwrap(), 0.0);
    }

    #[test]
    fn sigma_max_matches_hand_value() {
        // diag(3, 1, 2i): largest singular value 3.
        let m = array![
            [c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 2.0)],
        ];
        assert!((sigma_max(&m).unwrap() - 3.0).abs() < 1e-8);
    }

    #[test]
    fn lu_solves_both_directions() {
        let a = array![
            [c(2.0, 1.0), c(1.0, 0.0), c(0.0, -1.0)],
            [c(0.0, 1.0), c(3.0, 0.0), c(1.0, 1.0)],
            [c(1.0, 0.0), c(0.5, -2.0), c(4.0, 0.0)],
        ];
        let x_true = Array1::from(vec![c(1.0, -1.0), c(0.5, 2.0), c(-3.0, 0.25)]);
        let b = a.dot(&x_true);
        let lu = Lu::factor(&a).unwrap();
        let x = lu.solve(&b).unwrap();
        for (u, v) in x.iter().zip(x_true.iter()) {
            assert!((u - v).norm() < 1e-12);
        }
        let bh = adjoint(&a).dot(&x_true);
        let xh = lu.solve_adjoint(&bh).unwrap();
        for (u, v) in xh.iter().zip(x_true.iter()) {
            assert!((u - v).norm() < 1e-12);
        }
    }

    #[test]
    fn sigma_min_of_diagonal() {
        let m = array![
            [c(3.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.5)],
        ];
        assert!((sigma_min(&m).unwrap() - 0.5).abs() < 1e-9);
        let singular = array![
            [c(1.0, 0.0), c(1.0, 0.0)],
            [c(1.0, 0.0), c(1.0, 0.0)],
        ];
        assert_eq!(sigma_min(&singular).unwrap(), 0.0);
    }

    #[test]
    fn sigma_extremes_bracket_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 12;
        let mut m = Array2::from_elem((n, n), c(0.0, 0.0));
        for z in m.iter_mut() {
            *z = c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
        }
        let hi = sigma_max(&m).unwrap();
        let lo = sigma_min(&m).unwrap();
        assert!(lo >= 0.0 && hi >= lo);
        // Frobenius bounds.
        let f = frobenius(&m);
        assert!(hi <= f + 1e-9 && hi >= f / (n as f64).sqrt() - 1e-9);
    }
}

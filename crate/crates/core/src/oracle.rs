//! Brute-force reference computations kept deliberately independent of the
//! production code paths they cross-check.

/// Supremum of two-point convex combinations through the sample set at `t`:
/// `max { w v_i + (1-w) v_j : w t_i + (1-w) t_j = t, w in [0,1] }`,
/// singletons included. The origin must be part of `samples` when chords
/// from zero are admissible.
pub fn envelope_two_point_sup(samples: &[(f64, f64)], t: f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for i in 0..samples.len() {
        let (ti, vi) = samples[i];
        if ti == t {
            best = best.max(vi);
        }
        for j in i + 1..samples.len() {
            let (tj, vj) = samples[j];
            let (lo, hi) = if ti <= tj { (ti, tj) } else { (tj, ti) };
            if t < lo || t > hi || ti == tj {
                continue;
            }
            let w = (t - ti) / (tj - ti);
            best = best.max(vi + w * (vj - vi));
        }
    }
    best
}

/// Plain `p`-norm of complex values; reference for Luxemburg norms of power
/// generators.
pub fn p_norm(values: &[num_complex::Complex64], p: f64) -> f64 {
    values
        .iter()
        .map(|z| z.norm().powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_sup_handles_singletons_and_chords() {
        let s = [(0.0, 0.0), (1.0, 3.0), (2.0, 4.0)];
        assert_eq!(envelope_two_point_sup(&s, 1.0), 3.0);
        // midpoint of the chord (0,0)-(2,4) is 2, below the sample 3
        assert_eq!(envelope_two_point_sup(&s, 2.0), 4.0);
        assert!((envelope_two_point_sup(&s, 0.5) - 1.5).abs() < 1e-15);
    }
}

//! Seeded samplers shared by property experiments, the acceptance battery
//! and the CLI. Everything is deterministic given the seed.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::orlicz_space::FiniteSequence;
use crate::symbols::Symbol;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_in_disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    loop {
        let re = rng.random::<f64>() * 2.0 - 1.0;
        let im = rng.random::<f64>() * 2.0 - 1.0;
        if re * re + im * im <= 1.0 {
            return Complex64::new(re * radius, im * radius);
        }
    }
}

/// Random trigonometric polynomial of exact degree at most `degree`, with
/// coefficients in the unit disc.
pub fn random_trig_poly(rng: &mut ChaCha8Rng, degree: i64) -> Symbol {
    let pairs: Vec<(i64, Complex64)> = (-degree..=degree)
        .map(|k| (k, complex_in_disc(rng, 1.0)))
        .collect();
    Symbol::trig_poly(&pairs).expect("random trig poly")
}

/// Random continuous nonvanishing symbol with winding number zero:
/// `c + p(theta)` where `p` is a random trig polynomial scaled to stay
/// strictly inside the disc of radius `|c|`.
pub fn random_winding_zero_symbol(rng: &mut ChaCha8Rng, degree: i64) -> Symbol {
    let base = 2.0 + rng.random::<f64>();
    let p = random_trig_poly(rng, degree);
    let margin = 0.6 * base / p.sup_norm().max(1e-9);
    let mut pairs: Vec<(i64, Complex64)> = p
        .as_trig_poly()
        .unwrap()
        .pairs()
        .into_iter()
        .map(|(k, c)| (k, c * margin))
        .collect();
    pairs.push((0, Complex64::new(base, 0.0)));
    Symbol::trig_poly(&pairs).expect("winding-zero symbol")
}

/// Random finitely supported sequence: `len` nonzero entries at distinct
/// indices in `[-span, span]`, values in the annulus between `0.05 scale`
/// and `scale`. The inner radius keeps entry ratios within the range of
/// tabulated generators.
pub fn random_sequence(
    rng: &mut ChaCha8Rng,
    len: usize,
    span: i64,
    scale: f64,
) -> FiniteSequence {
    let mut pairs: Vec<(i64, Complex64)> = Vec::with_capacity(len);
    let mut used = std::collections::BTreeSet::new();
    while pairs.len() < len {
        let idx = rng.random_range(-span..=span);
        if used.insert(idx) {
            let mut v = complex_in_disc(rng, scale);
            while v.norm() < 0.05 * scale {
                v = complex_in_disc(rng, scale);
            }
            pairs.push((idx, v));
        }
    }
    FiniteSequence::new(&pairs).expect("random sequence")
}

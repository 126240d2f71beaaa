use ndarray::Array2;
use num_complex::Complex64;
use orlicz_core::linalg::sigma_max;
use orlicz_core::operators::{build, l2_norm, OperatorRole};
use orlicz_core::symbols::Symbol;

fn main() {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let a = Symbol::trig_poly(&[(0, c(2.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
    for n in [16usize, 64, 256] {
        let t = build(&a, OperatorRole::Toeplitz, n).unwrap();
        println!("N={n}: sigma = {:.12}", l2_norm(&t).unwrap());
    }
    let id: Array2<Complex64> = Array2::eye(5);
    println!("eye: {:.15}", sigma_max(&id).unwrap());
}

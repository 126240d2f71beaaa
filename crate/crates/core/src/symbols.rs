//! 2pi-periodic symbol calculus.
//!
//! Symbols are either trigonometric polynomials (exact Fourier coefficients)
//! or piecewise closed-form functions over a partition of `[-pi, pi)`, with
//! a small expression grammar: polynomials in `theta`, `exp(i*m*theta)`,
//! complex constants, `+ - * ^`. Supremum norm and total variation are
//! cached at construction; all values are immutable afterwards.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TAU: f64 = 2.0 * PI;

/// Wrap an angle into `[-pi, pi)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let mut t = (theta + PI).rem_euclid(TAU) - PI;
    if t >= PI {
        t = -PI;
    }
    t
}

// ---------------------------------------------------------------------------
// Expression grammar
// ---------------------------------------------------------------------------

/// Closed-form expression in `theta`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Complex64),
    Theta,
    /// `exp(i m theta)`
    ExpITheta(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn constant(c: Complex64) -> Expr {
        Expr::Const(c)
    }

    pub fn real(x: f64) -> Expr {
        Expr::Const(Complex64::new(x, 0.0))
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Theta => Complex64::new(theta, 0.0),
            Expr::ExpITheta(m) => Complex64::from_polar(1.0, *m as f64 * theta),
            Expr::Neg(e) => -e.eval(theta),
            Expr::Add(a, b) => a.eval(theta) + b.eval(theta),
            Expr::Sub(a, b) => a.eval(theta) - b.eval(theta),
            Expr::Mul(a, b) => a.eval(theta) * b.eval(theta),
            Expr::Pow(e, k) => e.eval(theta).powu(*k),
        }
    }

    /// Symbolic derivative; stays inside the grammar.
    pub fn derivative(&self) -> Expr {
        match self {
            Expr::Const(_) => Expr::real(0.0),
            Expr::Theta => Expr::real(1.0),
            Expr::ExpITheta(m) => Expr::Mul(
                Box::new(Expr::Const(Complex64::new(0.0, *m as f64))),
                Box::new(Expr::ExpITheta(*m)),
            ),
            Expr::Neg(e) => Expr::Neg(Box::new(e.derivative())),
            Expr::Add(a, b) => Expr::Add(Box::new(a.derivative()), Box::new(b.derivative())),
            Expr::Sub(a, b) => Expr::Sub(Box::new(a.derivative()), Box::new(b.derivative())),
            Expr::Mul(a, b) => Expr::Add(
                Box::new(Expr::Mul(Box::new(a.derivative()), b.clone())),
                Box::new(Expr::Mul(a.clone(), Box::new(b.derivative()))),
            ),
            Expr::Pow(e, k) => {
                if *k == 0 {
                    Expr::real(0.0)
                } else {
                    Expr::Mul(
                        Box::new(Expr::Mul(
                            Box::new(Expr::real(*k as f64)),
                            Box::new(Expr::Pow(e.clone(), k - 1)),
                        )),
                        Box::new(e.derivative()),
                    )
                }
            }
        }
    }

    /// Substitute `theta -> theta + delta` (used when wrapping pieces).
    pub fn shift_theta(&self, delta: f64) -> Expr {
        match self {
            Expr::Const(c) => Expr::Const(*c),
            Expr::Theta => Expr::Add(Box::new(Expr::Theta), Box::new(Expr::real(delta))),
            Expr::ExpITheta(m) => Expr::Mul(
                Box::new(Expr::Const(Complex64::from_polar(1.0, *m as f64 * delta))),
                Box::new(Expr::ExpITheta(*m)),
            ),
            Expr::Neg(e) => Expr::Neg(Box::new(e.shift_theta(delta))),
            Expr::Add(a, b) => {
                Expr::Add(Box::new(a.shift_theta(delta)), Box::new(b.shift_theta(delta)))
            }
            Expr::Sub(a, b) => {
                Expr::Sub(Box::new(a.shift_theta(delta)), Box::new(b.shift_theta(delta)))
            }
            Expr::Mul(a, b) => {
                Expr::Mul(Box::new(a.shift_theta(delta)), Box::new(b.shift_theta(delta)))
            }
            Expr::Pow(e, k) => Expr::Pow(Box::new(e.shift_theta(delta)), *k),
        }
    }

    pub fn parse(src: &str) -> Result<Expr> {
        Parser::new(src).parse_full()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => {
                if c.im == 0.0 {
                    write!(f, "{}", c.re)
                } else if c.re == 0.0 {
                    write!(f, "({}*i)", c.im)
                } else {
                    write!(f, "({}+{}*i)", c.re, c.im)
                }
            }
            Expr::Theta => write!(f, "theta"),
            Expr::ExpITheta(m) => write!(f, "exp(i*{m}*theta)"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Pow(e, k) => write!(f, "({e}^{k})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            at: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_full(&mut self) -> Result<Expr> {
        let e = self.parse_expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(e)
    }

    fn parse_expr(&mut self) -> Result<Expr> {
        let mut acc = self.parse_term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.parse_term()?;
                acc = Expr::Add(Box::new(acc), Box::new(rhs));
            } else if self.eat(b'-') {
                let rhs = self.parse_term()?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut acc = self.parse_unary()?;
        while self.eat(b'*') {
            let rhs = self.parse_unary()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.parse_unary()?)));
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> Result<Expr> {
        let base = self.parse_primary()?;
        if self.eat(b'^') {
            let k = self.parse_uint()?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn parse_uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("exponent does not fit"))
    }

    fn parse_primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.parse_expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.parse_number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let ident = self.parse_ident();
                match ident.as_str() {
                    "i" => Ok(Expr::Const(Complex64::new(0.0, 1.0))),
                    "theta" | "t" => Ok(Expr::Theta),
                    "pi" => Ok(Expr::real(PI)),
                    "exp" => self.parse_exp_call(),
                    other => Err(self.err(format!("unknown identifier '{other}'"))),
                }
            }
            _ => Err(self.err("expected a primary expression")),
        }
    }

    fn parse_ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn parse_number(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_digit() || c == b'.' {
                self.pos += 1;
            } else if (c == b'e' || c == b'E')
                && self.pos + 1 < self.src.len()
                && (self.src[self.pos + 1].is_ascii_digit()
                    || self.src[self.pos + 1] == b'+'
                    || self.src[self.pos + 1] == b'-')
            {
                self.pos += 2;
            } else {
                break;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: f64 = text.parse().map_err(|_| self.err("bad number"))?;
        Ok(Expr::real(v))
    }

    /// `exp( <linear multiple of i*theta> )`; the argument must reduce to
    /// `i*m*theta` with integer `m`.
    fn parse_exp_call(&mut self) -> Result<Expr> {
        if !self.eat(b'(') {
            return Err(self.err("expected '(' after exp"));
        }
        let inside = self.parse_expr()?;
        if !self.eat(b')') {
            return Err(self.err("expected ')' after exp argument"));
        }
        // Linearity probe: the argument must vanish at theta = 0 and be
        // linear, with purely imaginary integer slope.
        let at0 = inside.eval(0.0);
        let at1 = inside.eval(1.0);
        let at2 = inside.eval(2.0);
        let linear = (at0.norm() < 1e-12)
            && ((at2 - at1 * 2.0).norm() < 1e-9 * (1.0 + at2.norm()));
        let slope = at1;
        let m = slope.im.round();
        if !linear || slope.re.abs() > 1e-12 || (slope.im - m).abs() > 1e-9 {
            return Err(self.err("exp argument must be i*m*theta with integer m"));
        }
        Ok(Expr::ExpITheta(m as i64))
    }
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

fn simpson(fa: Complex64, fm: Complex64, fb: Complex64, h: f64) -> Complex64 {
    (fa + fm * 4.0 + fb) * (h / 6.0)
}

fn adaptive_step<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    whole: Complex64,
    tol: f64,
    depth: usize,
    achieved: &mut f64,
) -> Complex64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let err = (left + right - whole).norm() / 15.0;
    if err <= tol || depth == 0 {
        if depth == 0 {
            *achieved += err;
        }
        return left + right + (left + right - whole) / 15.0;
    }
    adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, achieved)
        + adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, achieved)
}

/// Adaptive Simpson quadrature with absolute tolerance; errors out when the
/// depth cap is hit before the tolerance, reporting the achieved error.
pub(crate) fn integrate<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    seed_panels: usize,
) -> Result<Complex64> {
    if !(b > a) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let panels = seed_panels.max(4);
    let mut total = Complex64::new(0.0, 0.0);
    let mut achieved = 0.0f64;
    let panel_tol = tol / panels as f64;
    for k in 0..panels {
        let x0 = a + (b - a) * k as f64 / panels as f64;
        let x1 = a + (b - a) * (k + 1) as f64 / panels as f64;
        let xm = 0.5 * (x0 + x1);
        let (f0, fm, f1) = (f(x0), f(xm), f(x1));
        let whole = simpson(f0, fm, f1, x1 - x0);
        total += adaptive_step(f, x0, x1, f0, fm, f1, whole, panel_tol, 28, &mut achieved);
    }
    if achieved > tol {
        return Err(Error::NoConvergence {
            what: "adaptive quadrature".into(),
            achieved,
            wanted: tol,
        });
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Trigonometric polynomials
// ---------------------------------------------------------------------------

/// Coefficients on the symmetric range `-n..=n`; outer zeros trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    n: i64,
    coeffs: Vec<Complex64>,
}

impl TrigPoly {
    pub fn from_pairs(pairs: &[(i64, Complex64)]) -> TrigPoly {
        let n = pairs
            .iter()
            .filter(|(_, c)| c.norm() != 0.0)
            .map(|(k, _)| k.abs())
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (2 * n + 1) as usize];
        for &(k, c) in pairs {
            if k.abs() <= n {
                coeffs[(k + n) as usize] += c;
            }
        }
        TrigPoly { n, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> TrigPoly {
        while self.n > 0
            && self.coeffs[0].norm() == 0.0
            && self.coeffs[self.coeffs.len() - 1].norm() == 0.0
        {
            self.coeffs.remove(0);
            self.coeffs.pop();
            self.n -= 1;
        }
        self
    }

    pub fn degree(&self) -> i64 {
        self.n
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        if k.abs() > self.n {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k + self.n) as usize]
        }
    }

    pub fn pairs(&self) -> Vec<(i64, Complex64)> {
        (-self.n..=self.n).map(|k| (k, self.coeff(k))).collect()
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        // Horner in z = e^{i theta}, then multiply by z^{-n}.
        let z = Complex64::from_polar(1.0, theta);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * Complex64::from_polar(1.0, -(self.n as f64) * theta)
    }

    /// Convolution product; exact.
    pub fn mul(&self, other: &TrigPoly) -> TrigPoly {
        let n = self.n + other.n;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (2 * n + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TrigPoly { n, coeffs }.trimmed()
    }

    pub fn sub(&self, other: &TrigPoly) -> TrigPoly {
        let mut pairs = self.pairs();
        pairs.extend(other.pairs().into_iter().map(|(k, c)| (k, -c)));
        TrigPoly::from_pairs(&pairs)
    }

    /// Derivative: coefficients `i k c_k`.
    pub fn derivative(&self) -> TrigPoly {
        let pairs: Vec<(i64, Complex64)> = self
            .pairs()
            .into_iter()
            .map(|(k, c)| (k, c * Complex64::new(0.0, k as f64)))
            .collect();
        TrigPoly::from_pairs(&pairs)
    }
}

// ---------------------------------------------------------------------------
// Piecewise symbols
// ---------------------------------------------------------------------------

/// One closed-form piece on `[from, to)`.
#[derive(Debug, Clone)]
pub struct Piece {
    pub from: f64,
    pub to: f64,
    pub expr: Expr,
}

#[derive(Debug, Clone)]
pub struct PiecewiseSymbol {
    pieces: Vec<Piece>,
}

impl PiecewiseSymbol {
    fn new(pieces: Vec<Piece>) -> Result<PiecewiseSymbol> {
        if pieces.is_empty() {
            return Err(Error::domain("piecewise symbol needs at least one piece"));
        }
        let tol = 1e-12;
        if (pieces[0].from + PI).abs() > tol {
            return Err(Error::domain("pieces must start at -pi"));
        }
        if (pieces.last().unwrap().to - PI).abs() > tol {
            return Err(Error::domain("pieces must end at pi"));
        }
        for w in pieces.windows(2) {
            if (w[0].to - w[1].from).abs() > tol {
                return Err(Error::domain("pieces must tile [-pi, pi) contiguously"));
            }
        }
        for p in &pieces {
            if !(p.to > p.from) {
                return Err(Error::domain("pieces must have positive width"));
            }
        }
        Ok(PiecewiseSymbol { pieces })
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    fn piece_at(&self, theta: f64) -> &Piece {
        let t = wrap_angle(theta);
        let i = self
            .pieces
            .partition_point(|p| p.to <= t)
            .min(self.pieces.len() - 1);
        &self.pieces[i]
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        let t = wrap_angle(theta);
        self.piece_at(t).expr.eval(t)
    }

    /// Interior breakpoints plus the wrap point `-pi`.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.pieces.iter().map(|p| p.from).collect()
    }

    /// Jump magnitudes at each breakpoint (wrap included).
    fn jumps(&self) -> Vec<f64> {
        let m = self.pieces.len();
        let mut out = Vec::with_capacity(m);
        for i in 0..m {
            let prev = if i == 0 { m - 1 } else { i - 1 };
            let left = self.pieces[prev].expr.eval(self.pieces[prev].to);
            let right = self.pieces[i].expr.eval(self.pieces[i].from);
            // At the wrap the previous piece ends at pi, which is the same
            // circle point as -pi.
            out.push((left - right).norm());
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Symbol
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum SymbolKind {
    TrigPoly(TrigPoly),
    Piecewise(PiecewiseSymbol),
}

/// A 2pi-periodic symbol with cached supremum norm, total variation and
/// largest jump.
#[derive(Debug, Clone)]
pub struct Symbol {
    kind: SymbolKind,
    sup_norm: f64,
    variation: f64,
    max_jump: f64,
}

/// Grid resolution for cached suprema (plus 4x refinement near breakpoints).
const SUP_SCAN_POINTS: usize = 16384;
const QUAD_TOL: f64 = 1e-10;

impl Symbol {
    pub fn trig_poly(pairs: &[(i64, Complex64)]) -> Result<Symbol> {
        Symbol::from_trig(TrigPoly::from_pairs(pairs))
    }

    pub fn from_trig(tp: TrigPoly) -> Result<Symbol> {
        let sup = sup_scan(|t| tp.eval(t).norm(), &[]);
        let deriv = tp.derivative();
        let variation = if deriv.degree() == 0 && deriv.coeff(0).norm() == 0.0 {
            0.0
        } else {
            integrate(
                &|t| Complex64::new(deriv.eval(t).norm(), 0.0),
                -PI,
                PI,
                QUAD_TOL * 10.0,
                (8 * (tp.degree().unsigned_abs() as usize + 1)).max(16),
            )?
            .re
        };
        Ok(Symbol {
            kind: SymbolKind::TrigPoly(tp),
            sup_norm: sup,
            variation,
            max_jump: 0.0,
        })
    }

    pub fn piecewise(pieces: Vec<Piece>) -> Result<Symbol> {
        let pw = PiecewiseSymbol::new(pieces)?;
        let breaks = pw.breakpoints();
        let sup = sup_scan(|t| pw.eval(t).norm(), &breaks);
        let mut variation: f64 = pw.jumps().iter().sum();
        for p in pw.pieces() {
            let d = p.expr.derivative();
            variation += integrate(
                &|t| Complex64::new(d.eval(t).norm(), 0.0),
                p.from,
                p.to,
                QUAD_TOL * 10.0,
                16,
            )?
            .re;
        }
        let max_jump = pw.jumps().into_iter().fold(0.0f64, f64::max);
        Ok(Symbol {
            kind: SymbolKind::Piecewise(pw),
            sup_norm: sup,
            variation,
            max_jump,
        })
    }

    pub fn constant(c: Complex64) -> Symbol {
        Symbol::trig_poly(&[(0, c)]).expect("constant symbol")
    }

    /// `chi_m(theta) = exp(i m theta)`.
    pub fn chi(m: i64) -> Symbol {
        Symbol::trig_poly(&[(m, Complex64::new(1.0, 0.0))]).expect("chi symbol")
    }

    pub fn kind(&self) -> &SymbolKind {
        &self.kind
    }

    pub fn as_trig_poly(&self) -> Option<&TrigPoly> {
        match &self.kind {
            SymbolKind::TrigPoly(tp) => Some(tp),
            SymbolKind::Piecewise(_) => None,
        }
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        match &self.kind {
            SymbolKind::TrigPoly(tp) => tp.eval(wrap_angle(theta)),
            SymbolKind::Piecewise(pw) => pw.eval(theta),
        }
    }

    /// Cached grid supremum of `|a|`.
    pub fn sup_norm(&self) -> f64 {
        self.sup_norm
    }

    /// Cached total variation over one period.
    pub fn variation(&self) -> f64 {
        self.variation
    }

    pub fn max_jump(&self) -> f64 {
        self.max_jump
    }

    pub fn is_continuous(&self) -> bool {
        self.max_jump <= 1e-9 * self.sup_norm.max(1.0)
    }

    /// Breakpoints (piecewise symbols only).
    pub fn breakpoints(&self) -> Vec<f64> {
        match &self.kind {
            SymbolKind::TrigPoly(_) => Vec::new(),
            SymbolKind::Piecewise(pw) => pw.breakpoints(),
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            SymbolKind::TrigPoly(tp) => format!("trigpoly(degree {})", tp.degree()),
            SymbolKind::Piecewise(pw) => format!("piecewise({} pieces)", pw.pieces().len()),
        }
    }

    pub fn fourier_coefficient(&self, k: i64) -> Result<Complex64> {
        match &self.kind {
            SymbolKind::TrigPoly(tp) => Ok(tp.coeff(k)),
            SymbolKind::Piecewise(pw) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for p in pw.pieces() {
                    let expr = p.expr.clone();
                    let f = move |t: f64| {
                        expr.eval(t) * Complex64::from_polar(1.0, -(k as f64) * t)
                    };
                    let panels = ((k.unsigned_abs() as usize) * 4).max(8);
                    acc += integrate(&f, p.from, p.to, QUAD_TOL, panels)?;
                }
                Ok(acc / TAU)
            }
        }
    }

    /// Coefficients `-n..=n` as a dense vector.
    pub fn coefficients(&self, n: i64) -> Result<Vec<Complex64>> {
        (-n..=n).map(|k| self.fourier_coefficient(k)).collect()
    }

    /// Upper bound `c_space * (sup norm + total variation)` for the
    /// multiplier norm.
    pub fn stechkin_bound(&self, c_space: f64) -> f64 {
        c_space * (self.sup_norm + self.variation)
    }

    /// Fejer mean: coefficients damped by `1 - |k|/(n+1)`.
    pub fn fejer_mean(&self, n: i64) -> Result<Symbol> {
        let mut pairs = Vec::with_capacity((2 * n + 1) as usize);
        for k in -n..=n {
            let damp = 1.0 - k.abs() as f64 / (n as f64 + 1.0);
            pairs.push((k, self.fourier_coefficient(k)? * damp));
        }
        Symbol::trig_poly(&pairs)
    }

    /// `a - b` as a symbol; exact for every kind pairing. Mixed and
    /// piecewise pairs merge their partitions and subtract expressions,
    /// which keeps variation and jumps computable.
    pub fn difference(a: &Symbol, b: &Symbol) -> Result<Symbol> {
        match (&a.kind, &b.kind) {
            (SymbolKind::TrigPoly(ta), SymbolKind::TrigPoly(tb)) => Symbol::from_trig(ta.sub(tb)),
            _ => {
                let to_pieces = |s: &Symbol| -> Vec<Piece> {
                    match s.kind() {
                        SymbolKind::TrigPoly(tp) => vec![Piece {
                            from: -PI,
                            to: PI,
                            expr: trig_to_expr(tp),
                        }],
                        SymbolKind::Piecewise(pw) => pw.pieces().to_vec(),
                    }
                };
                let pa = to_pieces(a);
                let pb = to_pieces(b);
                let mut cuts: Vec<f64> = pa
                    .iter()
                    .chain(pb.iter())
                    .flat_map(|p| [p.from, p.to])
                    .collect();
                cuts.sort_by(f64::total_cmp);
                cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
                let expr_at = |pieces: &[Piece], mid: f64| -> Expr {
                    let i = pieces
                        .partition_point(|p| p.to <= mid)
                        .min(pieces.len() - 1);
                    pieces[i].expr.clone()
                };
                let mut out = Vec::with_capacity(cuts.len().saturating_sub(1));
                for w in cuts.windows(2) {
                    let mid = 0.5 * (w[0] + w[1]);
                    out.push(Piece {
                        from: w[0],
                        to: w[1],
                        expr: Expr::Sub(
                            Box::new(expr_at(&pa, mid)),
                            Box::new(expr_at(&pb, mid)),
                        ),
                    });
                }
                Symbol::piecewise(out)
            }
        }
    }
}

/// Render a trigonometric polynomial inside the expression grammar.
pub fn trig_to_expr(tp: &TrigPoly) -> Expr {
    let mut acc: Option<Expr> = None;
    for (k, c) in tp.pairs() {
        if c.norm() == 0.0 {
            continue;
        }
        let term = if k == 0 {
            Expr::Const(c)
        } else {
            Expr::Mul(Box::new(Expr::Const(c)), Box::new(Expr::ExpITheta(k)))
        };
        acc = Some(match acc {
            None => term,
            Some(prev) => Expr::Add(Box::new(prev), Box::new(term)),
        });
    }
    acc.unwrap_or_else(|| Expr::real(0.0))
}

/// Dense scan of a nonnegative function over one period, with a finer pass
/// around the listed breakpoints.
fn sup_scan(f: impl Fn(f64) -> f64, breakpoints: &[f64]) -> f64 {
    let mut best = 0.0f64;
    let step = TAU / SUP_SCAN_POINTS as f64;
    for k in 0..SUP_SCAN_POINTS {
        best = best.max(f(-PI + step * k as f64));
    }
    for &b in breakpoints {
        for j in -32i32..=32 {
            best = best.max(f(b + j as f64 * step / 4.0));
        }
        // one-sided values right at the breakpoint
        best = best.max(f(b + 1e-12)).max(f(b - 1e-12));
    }
    best
}

/// Grid supremum of `|a - b|` over an angular interval (the interval may
/// extend beyond `[-pi, pi)`; evaluation wraps).
pub fn grid_sup_diff(a: &Symbol, b: &Symbol, lo: f64, hi: f64, points: usize) -> f64 {
    let n = points.max(8);
    let mut best = 0.0f64;
    let step = (hi - lo) / n as f64;
    for k in 0..=n {
        let t = lo + step * k as f64;
        best = best.max((a.eval(t) - b.eval(t)).norm());
    }
    // 4x refinement near breakpoints of either operand.
    let mut refine = |bp: f64| {
        for shift in [-TAU, 0.0, TAU] {
            let t0 = bp + shift;
            if t0 >= lo - step && t0 <= hi + step {
                for j in -8i32..=8 {
                    let t = t0 + j as f64 * step / 4.0;
                    if t >= lo && t <= hi {
                        best = best.max((a.eval(t) - b.eval(t)).norm());
                    }
                }
            }
        }
    };
    for bp in a.breakpoints() {
        refine(bp);
    }
    for bp in b.breakpoints() {
        refine(bp);
    }
    best
}

/// Shrinking-interval schedule for the local distance.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ShrinkSchedule {
    pub initial_halfwidth: f64,
    pub factor: f64,
    pub levels: usize,
    pub points: usize,
}

impl Default for ShrinkSchedule {
    fn default() -> Self {
        ShrinkSchedule {
            initial_halfwidth: 0.5 * PI,
            factor: 0.25,
            levels: 17,
            points: 4096,
        }
    }
}

/// Converging local-distance estimate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalDistance {
    pub value: f64,
    pub final_halfwidth: f64,
    /// Grid suprema per level, outermost first; nonincreasing.
    pub per_level: Vec<f64>,
}

/// `min` over a geometric family of intervals around `tau` of the grid-sup
/// of `|a - b|`; estimates `inf_u sup_u |a - b|`.
pub fn local_distance(
    a: &Symbol,
    b: &Symbol,
    tau: f64,
    schedule: &ShrinkSchedule,
) -> Result<LocalDistance> {
    if !(-PI..PI).contains(&tau) {
        return Err(Error::domain(format!("tau must lie in [-pi, pi), got {tau}")));
    }
    let mut r = schedule.initial_halfwidth;
    let mut per_level = Vec::with_capacity(schedule.levels);
    let mut value = f64::INFINITY;
    for _ in 0..schedule.levels {
        let sup = grid_sup_diff(a, b, tau - r, tau + r, schedule.points);
        value = value.min(sup);
        per_level.push(sup);
        r *= schedule.factor;
    }
    Ok(LocalDistance {
        value,
        final_halfwidth: r / schedule.factor,
        per_level,
    })
}

// ---------------------------------------------------------------------------
// Bump functions
// ---------------------------------------------------------------------------

/// C^1 bump: 1 on `(tau - u, tau + u)`, 0 outside `(tau - w, tau + w)`,
/// cubic smoothstep ramps. Sup norm 1, total variation 2.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BumpFunction {
    pub tau: f64,
    pub w: f64,
    pub u: f64,
}

fn smoothstep(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    x * x * (3.0 - 2.0 * x)
}

pub fn make_bump(tau: f64, w: f64, u: f64) -> Result<BumpFunction> {
    if !(-PI..PI).contains(&tau) {
        return Err(Error::domain(format!("bump center must lie in [-pi, pi), got {tau}")));
    }
    if !(0.0 < u && u < w && w < PI) {
        return Err(Error::domain(format!(
            "bump widths must satisfy 0 < u < w < pi, got u = {u}, w = {w}"
        )));
    }
    Ok(BumpFunction { tau, w, u })
}

impl BumpFunction {
    pub fn evaluate(&self, theta: f64) -> f64 {
        let d = wrap_angle(theta - self.tau).abs();
        if d <= self.u {
            1.0
        } else if d >= self.w {
            0.0
        } else {
            smoothstep((self.w - d) / (self.w - self.u))
        }
    }

    /// Render as a piecewise symbol (cubic polynomial ramps), wrap included.
    pub fn to_symbol(&self) -> Result<Symbol> {
        let (tau, w, u) = (self.tau, self.w, self.u);
        let ramp = w - u;
        // smoothstep(g) with g affine in theta: 3 g^2 - 2 g^3.
        let cubic = |g: Expr| {
            Expr::Sub(
                Box::new(Expr::Mul(
                    Box::new(Expr::real(3.0)),
                    Box::new(Expr::Pow(Box::new(g.clone()), 2)),
                )),
                Box::new(Expr::Mul(
                    Box::new(Expr::real(2.0)),
                    Box::new(Expr::Pow(Box::new(g), 3)),
                )),
            )
        };
        // g = (theta - (tau - w)) / ramp rises 0 -> 1 on the left ramp.
        let g_left = Expr::Mul(
            Box::new(Expr::real(1.0 / ramp)),
            Box::new(Expr::Sub(Box::new(Expr::Theta), Box::new(Expr::real(tau - w)))),
        );
        // g = ((tau + w) - theta) / ramp falls 1 -> 0 on the right ramp.
        let g_right = Expr::Mul(
            Box::new(Expr::real(1.0 / ramp)),
            Box::new(Expr::Sub(Box::new(Expr::real(tau + w)), Box::new(Expr::Theta))),
        );
        let raw = vec![
            Piece {
                from: tau - PI,
                to: tau - w,
                expr: Expr::real(0.0),
            },
            Piece {
                from: tau - w,
                to: tau - u,
                expr: cubic(g_left),
            },
            Piece {
                from: tau - u,
                to: tau + u,
                expr: Expr::real(1.0),
            },
            Piece {
                from: tau + u,
                to: tau + w,
                expr: cubic(g_right),
            },
            Piece {
                from: tau + w,
                to: tau + PI,
                expr: Expr::real(0.0),
            },
        ];
        Symbol::piecewise(normalize_pieces(raw)?)
    }
}

/// Split pieces at the period boundary and shift them into `[-pi, pi)`.
pub fn normalize_pieces(raw: Vec<Piece>) -> Result<Vec<Piece>> {
    let mut out: Vec<Piece> = Vec::new();
    for p in raw {
        let mut stack = vec![p];
        while let Some(p) = stack.pop() {
            if p.to <= p.from + 1e-15 {
                continue;
            }
            if p.from < -PI - 1e-15 {
                if p.to > -PI {
                    stack.push(Piece {
                        from: p.from,
                        to: -PI,
                        expr: p.expr.clone(),
                    });
                    stack.push(Piece {
                        from: -PI,
                        to: p.to,
                        expr: p.expr,
                    });
                } else {
                    // entirely below: shift up one period
                    stack.push(Piece {
                        from: p.from + TAU,
                        to: p.to + TAU,
                        expr: p.expr.shift_theta(-TAU),
                    });
                }
            } else if p.to > PI + 1e-15 {
                if p.from < PI {
                    stack.push(Piece {
                        from: p.from,
                        to: PI,
                        expr: p.expr.clone(),
                    });
                    stack.push(Piece {
                        from: PI,
                        to: p.to,
                        expr: p.expr,
                    });
                } else {
                    stack.push(Piece {
                        from: p.from - TAU,
                        to: p.to - TAU,
                        expr: p.expr.shift_theta(TAU),
                    });
                }
            } else {
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| a.from.partial_cmp(&b.from).unwrap());
    // snap endpoints
    if let Some(first) = out.first_mut() {
        if (first.from + PI).abs() < 1e-9 {
            first.from = -PI;
        }
    }
    if let Some(last) = out.last_mut() {
        if (last.to - PI).abs() < 1e-9 {
            last.to = PI;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Serialisable specs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PieceSpec {
    pub from: f64,
    pub to: f64,
    pub expr: String,
}

/// JSON symbol schema:
/// `{"kind":"trigpoly","coeffs":[[k,re,im],...]}` or
/// `{"kind":"piecewise","pieces":[{"from":..,"to":..,"expr":"..."}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SymbolSpec {
    Trigpoly { coeffs: Vec<(i64, f64, f64)> },
    Piecewise { pieces: Vec<PieceSpec> },
}

impl TryFrom<SymbolSpec> for Symbol {
    type Error = Error;

    fn try_from(spec: SymbolSpec) -> Result<Symbol> {
        match spec {
            SymbolSpec::Trigpoly { coeffs } => {
                let pairs: Vec<(i64, Complex64)> = coeffs
                    .into_iter()
                    .map(|(k, re, im)| (k, Complex64::new(re, im)))
                    .collect();
                Symbol::trig_poly(&pairs)
            }
            SymbolSpec::Piecewise { pieces } => {
                let mut out = Vec::with_capacity(pieces.len());
                for p in pieces {
                    out.push(Piece {
                        from: p.from,
                        to: p.to,
                        expr: Expr::parse(&p.expr)?,
                    });
                }
                Symbol::piecewise(out)
            }
        }
    }
}

impl Symbol {
    pub fn from_json(s: &str) -> Result<Symbol> {
        let spec: SymbolSpec =
            serde_json::from_str(s).map_err(|e| Error::schema(format!("symbol: {e}")))?;
        spec.try_into()
    }

    pub fn to_spec(&self) -> SymbolSpec {
        match &self.kind {
            SymbolKind::TrigPoly(tp) => SymbolSpec::Trigpoly {
                coeffs: tp
                    .pairs()
                    .into_iter()
                    .map(|(k, c)| (k, c.re, c.im))
                    .collect(),
            },
            SymbolKind::Piecewise(pw) => SymbolSpec::Piecewise {
                pieces: pw
                    .pieces()
                    .iter()
                    .map(|p| PieceSpec {
                        from: p.from,
                        to: p.to,
                        expr: p.expr.to_string(),
                    })
                    .collect(),
            },
        }
    }
}

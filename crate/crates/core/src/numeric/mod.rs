//! Extended-precision evaluation of `L(w)` for validating symbolic identities.
//!
//! Multiple zeta values are computed through the path decomposition at `1/2`
//! with every factor a multiple polylogarithm series at ratio `1/2`. Words
//! involving `ez` are evaluated at real `z > 1`: words over `{0, z}` through
//! `Li(1/z)` when `z ≥ 2`, all others by Taylor-series continuation of the
//! iterated integrals `g_j(t) = ∫_0^t g_{j−1}(s) ds/(s − a_j)` along `[0, 1/2]`
//! followed by the same decomposition at `1/2`.

mod real;

use dashmap::DashMap;
use num_bigint::BigInt;

use crate::algebra::{derivation, Letter, NCPoly, SubspaceTag, Word};
use crate::confluence::asymptotic_poly;
use crate::error::{Error, Result};

pub use real::Real;

/// Working precision. `digits` decimal digits are carried (plus guard bits);
/// `tolerance` is the accuracy the evaluators aim for; `truncation` is the
/// number of terms of a ratio-`1/2` series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionConfig {
    pub digits: u32,
    pub tolerance: f64,
    pub truncation: usize,
}

impl PrecisionConfig {
    pub const GUARD_BITS: u32 = 32;

    pub fn new(digits: u32) -> Result<PrecisionConfig> {
        if !(10..=2000).contains(&digits) {
            return Err(Error::InvalidArgument(format!(
                "working digits must lie in 10..=2000, got {digits}"
            )));
        }
        let bits_per_digit = std::f64::consts::LN_10 / std::f64::consts::LN_2;
        Ok(PrecisionConfig {
            digits,
            tolerance: 10f64.powi(-(digits as i32 - 5)),
            truncation: (digits as f64 * bits_per_digit).ceil() as usize + 40,
        })
    }

    /// Fractional bits of the fixed-point representation.
    pub fn bits(&self) -> u32 {
        (self.digits as f64 * std::f64::consts::LN_10 / std::f64::consts::LN_2).ceil() as u32
            + Self::GUARD_BITS
    }

    /// Series length giving the same tail bound at geometric ratio `r`.
    fn terms_for_ratio(&self, r: f64) -> usize {
        if r <= 0.0 {
            return 1;
        }
        let scale = std::f64::consts::LN_2 / -r.ln();
        (self.truncation as f64 * scale.max(1.0)).ceil() as usize
    }

    pub fn real(&self, x: f64) -> Real {
        Real::from_f64(x, self.bits())
    }
}

impl Default for PrecisionConfig {
    fn default() -> PrecisionConfig {
        PrecisionConfig::new(30).expect("30 digits is a valid precision")
    }
}

/// `Li_{k1,…,kd}(x) = Σ_{0<m1<⋯<md} x^{md} / (m1^{k1} ⋯ md^{kd})` for `|x| < 1`.
pub fn eval_li(index: &[u32], x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    let bits = x.bits();
    if index.is_empty() {
        return Ok(Real::one(bits));
    }
    if index.contains(&0) {
        return Err(Error::InvalidIndex(format!("{index:?} has a zero entry")));
    }
    let xf = x.to_f64();
    if xf.abs() >= 1.0 {
        return Err(Error::InvalidArgument(format!(
            "polylogarithm argument must satisfy |x| < 1, got {xf}"
        )));
    }
    if x.is_zero() {
        return Ok(Real::zero(bits));
    }
    let n = cfg.terms_for_ratio(xf.abs());
    let d = index.len();
    // partial[j] = Σ_{m1<⋯<mj<m} Π 1/m_i^{k_i}; partial[0] = 1.
    let mut partial = vec![Real::zero(bits); d];
    partial[0] = Real::one(bits);
    let mut power = Real::one(bits);
    let mut sum = Real::zero(bits);
    let mut fresh = vec![Real::zero(bits); d];
    for m in 1..=n {
        power = &power * x;
        let mb = BigInt::from(m);
        for j in 0..d {
            fresh[j] = partial[j].div_bigint(&mb.pow(index[j]));
        }
        sum += &(&power * &fresh[d - 1]);
        for j in 1..d {
            partial[j] += &fresh[j - 1];
        }
    }
    Ok(sum)
}

/// Index of a word `m e0^{k1−1} m e0^{k2−1} ⋯` with marker letter `m`.
fn blocks(letters: &[Letter], marker: Letter) -> Vec<u32> {
    let mut index = Vec::new();
    for &l in letters {
        if l == marker {
            index.push(1);
        } else {
            *index.last_mut().expect("word starts with the marker") += 1;
        }
    }
    index
}

fn signed(x: Real, negate: bool) -> Real {
    if negate {
        -&x
    } else {
        x
    }
}

/// `I(0; a1…ak; 1/2) = (−1)^d Li_{k}(1/2)` for a `{0,1}`-word starting with 1.
fn binary_half(letters: &[Letter], cfg: &PrecisionConfig) -> Result<Real> {
    let index = blocks(letters, Letter::One);
    let half = Real::one(cfg.bits()).ldexp(-1);
    Ok(signed(eval_li(&index, &half, cfg)?, index.len() % 2 == 1))
}

/// `L(w)` for `w ∈ A^0`, so `L(e1 e0^{k1−1} ⋯) = (−1)^d ζ(k1, …)`.
pub fn eval_mzv(w: &Word, cfg: &PrecisionConfig) -> Result<Real> {
    if !SubspaceTag::A0.contains_word(w) {
        return Err(Error::NotInSubspace {
            op: "eval_mzv",
            tag: SubspaceTag::A0,
        });
    }
    let a = w.to_vec();
    let n = a.len();
    let reflected: Vec<Letter> = a
        .iter()
        .rev()
        .map(|&l| match l {
            Letter::Zero => Letter::One,
            _ => Letter::Zero,
        })
        .collect();
    let mut total = Real::zero(cfg.bits());
    for k in 0..=n {
        let left = if k == 0 {
            Real::one(cfg.bits())
        } else {
            binary_half(&a[..k], cfg)?
        };
        let right = if k == n {
            Real::one(cfg.bits())
        } else {
            binary_half(&reflected[..n - k], cfg)?
        };
        total += &signed(&left * &right, (n - k) % 2 == 1);
    }
    Ok(total)
}

/// Values `g_0(x), …, g_n(x)` of `g_j(t) = ∫_0^t g_{j−1}(s) ds/(s − a_j)`,
/// `g_0 = 1`. Requires `a_1 ≠ 0` and no letter in `(0, x]`.
fn prefix_integrals(letters: &[Real], x: &Real, cfg: &PrecisionConfig) -> Vec<Real> {
    let bits = x.bits();
    let n = letters.len();
    let zero = Real::zero(bits);
    let degree = bits as usize + 8 * n + 16;
    let lf: Vec<f64> = letters.iter().map(Real::to_f64).collect();
    let mut g = vec![zero.clone(); n + 1];
    g[0] = Real::one(bits);
    let mut c = zero.clone();
    loop {
        let cf = c.to_f64();
        let at_origin = c.is_zero();
        let rho = letters
            .iter()
            .zip(&lf)
            .filter(|(a, _)| !(at_origin && a.is_zero()))
            .map(|(_, &a)| (cf - a).abs())
            .fold(f64::INFINITY, f64::min);
        let remaining = x - &c;
        let last = remaining.to_f64() <= rho / 2.0;
        let h = if last { remaining } else { cfg.real(rho / 2.0) };
        // Scaled Taylor coefficients G_m h^m of each g_j around c.
        let mut prev = vec![zero.clone(); degree + 1];
        prev[0] = Real::one(bits);
        for j in 1..=n {
            let beta = &c - &letters[j - 1];
            let mut cur = vec![zero.clone(); degree + 1];
            cur[0] = g[j].clone();
            if beta.is_zero() {
                for m in 1..=degree {
                    cur[m] = prev[m].div_int(m as i64);
                }
            } else {
                let r = &h / &beta;
                for m in 0..degree {
                    let t = &prev[m] - &cur[m].mul_int(m as i64);
                    cur[m + 1] = (&t * &r).div_int(m as i64 + 1);
                }
            }
            let mut value = zero.clone();
            for coeff in &cur {
                value += coeff;
            }
            g[j] = value;
            prev = cur;
        }
        c = &c + &h;
        if last {
            return g;
        }
    }
}

fn letter_value(l: Letter, z: &Real) -> Real {
    match l {
        Letter::Zero => Real::zero(z.bits()),
        Letter::One => Real::one(z.bits()),
        Letter::Z => z.clone(),
    }
}

/// `L(w)` via continuation to `1/2` and the path decomposition there, for
/// any convergent word and `z > 1`. [`eval_hyperlog`] dispatches to faster
/// series where they apply; this entry point serves as an independent
/// cross-check of them.
pub fn hyperlog_by_continuation(w: &Word, z: &Real, cfg: &PrecisionConfig) -> Real {
    let bits = cfg.bits();
    let one = Real::one(bits);
    let half = one.ldexp(-1);
    let forward: Vec<Real> = w.letters().map(|l| letter_value(l, z)).collect();
    let reflected: Vec<Real> = forward.iter().rev().map(|a| &one - a).collect();
    let f = prefix_integrals(&forward, &half, cfg);
    let r = prefix_integrals(&reflected, &half, cfg);
    let n = forward.len();
    let mut total = Real::zero(bits);
    for k in 0..=n {
        total += &signed(&f[k] * &r[n - k], (n - k) % 2 == 1);
    }
    total
}

/// `L(w)` at real `z > 1` for a convergent word `w ∈ A_z^0`.
pub fn eval_hyperlog(w: &Word, z: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    if !SubspaceTag::Az0.contains_word(w) {
        return Err(Error::NotInSubspace {
            op: "eval_hyperlog",
            tag: SubspaceTag::Az0,
        });
    }
    let one = Real::one(cfg.bits());
    let z = rebits(z, cfg.bits());
    if z <= one {
        return Err(Error::InvalidArgument(format!(
            "hyperlogarithms are evaluated at real z > 1, got {}",
            z.to_f64()
        )));
    }
    if w.is_empty() {
        return Ok(one);
    }
    if !w.contains(Letter::Z) {
        return eval_mzv(w, cfg);
    }
    if w.over(&[Letter::Zero, Letter::Z]) && z.to_f64() >= 2.0 {
        let index = blocks(&w.to_vec(), Letter::Z);
        let x = &one / &z;
        return Ok(signed(eval_li(&index, &x, cfg)?, index.len() % 2 == 1));
    }
    Ok(hyperlog_by_continuation(w, &z, cfg))
}

fn rebits(x: &Real, bits: u32) -> Real {
    if x.bits() == bits {
        x.clone()
    } else {
        Real::from_f64(x.to_f64(), bits)
    }
}

/// Evaluator with per-word caches, shareable across threads.
#[derive(Debug, Default)]
pub struct Evaluator {
    cfg: PrecisionConfig,
    mzv: DashMap<Word, Real>,
    hyper: DashMap<(Word, Real), Real>,
}

impl Evaluator {
    pub fn new(cfg: PrecisionConfig) -> Evaluator {
        Evaluator {
            cfg,
            mzv: DashMap::new(),
            hyper: DashMap::new(),
        }
    }

    pub fn config(&self) -> &PrecisionConfig {
        &self.cfg
    }

    pub fn mzv(&self, w: &Word) -> Result<Real> {
        if w.is_empty() {
            return Ok(Real::one(self.cfg.bits()));
        }
        if let Some(v) = self.mzv.get(w) {
            return Ok(v.clone());
        }
        let v = eval_mzv(w, &self.cfg)?;
        self.mzv.insert(w.clone(), v.clone());
        Ok(v)
    }

    pub fn hyperlog(&self, w: &Word, z: &Real) -> Result<Real> {
        if !w.contains(Letter::Z) && SubspaceTag::A0.contains_word(w) {
            return self.mzv(w);
        }
        let key = (w.clone(), z.clone());
        if let Some(v) = self.hyper.get(&key) {
            return Ok(v.clone());
        }
        let v = eval_hyperlog(w, z, &self.cfg)?;
        self.hyper.insert(key, v.clone());
        Ok(v)
    }

    /// `Σ c·L(w)` for `p ∈ A^0`.
    pub fn poly_mzv(&self, p: &NCPoly) -> Result<Real> {
        let mut total = Real::zero(self.cfg.bits());
        for (w, c) in p.terms() {
            total += &(&Real::from_rational(c, self.cfg.bits()) * &self.mzv(w)?);
        }
        Ok(total)
    }

    /// `Σ c·L(w)` at `z` for `p ∈ A_z^0`.
    pub fn poly_hyperlog(&self, p: &NCPoly, z: &Real) -> Result<Real> {
        let mut total = Real::zero(self.cfg.bits());
        for (w, c) in p.terms() {
            total += &(&Real::from_rational(c, self.cfg.bits()) * &self.hyperlog(w, z)?);
        }
        Ok(total)
    }
}

/// Step of the central difference in [`check_derivative`].
pub const DERIVATIVE_STEP: f64 = 1e-4;
/// Agreement required between the finite difference and the symbolic side.
pub const DERIVATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct DerivativeReport {
    pub numeric: f64,
    pub symbolic: f64,
    pub difference: f64,
    pub passed: bool,
}

/// Compares `dL(w)/dz` (central difference) with
/// `(1/z) L(∂_{z,0} w) + (1/(z−1)) L(∂_{z,1} w)`.
pub fn check_derivative(w: &Word, z: f64, ev: &Evaluator) -> Result<DerivativeReport> {
    let cfg = ev.config();
    let zr = cfg.real(z);
    let h = cfg.real(DERIVATIVE_STEP);
    let wp = NCPoly::from(w);
    let up = ev.poly_hyperlog(&wp, &(&zr + &h))?;
    let down = ev.poly_hyperlog(&wp, &(&zr - &h))?;
    let numeric = &(&up - &down) / &h.mul_int(2);
    let d0 = ev.poly_hyperlog(&derivation(Letter::Z, Letter::Zero, &wp), &zr)?;
    let d1 = ev.poly_hyperlog(&derivation(Letter::Z, Letter::One, &wp), &zr)?;
    let one = Real::one(cfg.bits());
    let symbolic = &(&d0 / &zr) + &(&d1 / &(&zr - &one));
    let difference = (&numeric - &symbolic).abs().to_f64();
    Ok(DerivativeReport {
        numeric: numeric.to_f64(),
        symbolic: symbolic.to_f64(),
        difference,
        passed: difference < DERIVATIVE_TOLERANCE,
    })
}

#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub epsilons: Vec<f64>,
    /// `R(ε) = |L(w; 1+ε) − P_w(log ε)|`.
    pub residuals: Vec<f64>,
    /// `R(ε) / (ε |log ε|^m)` with `m = deg P_w + weight`.
    pub ratios: Vec<f64>,
    pub degree: usize,
    pub passed: bool,
}

/// `P_w(T) = Σ_k L(λ′(w_k)) T^k / k!` evaluated at `T`.
pub fn eval_asymptotic_poly(coeffs: &[NCPoly], t: &Real, ev: &Evaluator) -> Result<Real> {
    let bits = ev.config().bits();
    let mut total = Real::zero(bits);
    let mut power = Real::one(bits);
    let mut factorial = BigInt::from(1);
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            power = &power * t;
            factorial *= k;
        }
        if !c.is_zero() {
            total += &(&ev.poly_mzv(c)? * &power).div_bigint(&factorial);
        }
    }
    Ok(total)
}

/// Checks that `L(w)` at `z = 1 + ε` approaches its asymptotic polynomial in
/// `log ε`: residuals must not increase along the decreasing ladder and the
/// normalized ratios must stay bounded.
pub fn check_asymptotic(w: &Word, epsilons: &[f64], ev: &Evaluator) -> Result<AsymptoticReport> {
    if epsilons.windows(2).any(|p| p[1] >= p[0]) || epsilons.iter().any(|&e| e <= 0.0) {
        return Err(Error::InvalidArgument(
            "epsilons must be positive and strictly decreasing".into(),
        ));
    }
    let cfg = ev.config();
    let coeffs = asymptotic_poly(&NCPoly::from(w))?;
    let degree = coeffs.len().saturating_sub(1);
    let m = (degree + w.len()) as i32;
    let one = Real::one(cfg.bits());
    let mut residuals = Vec::new();
    let mut ratios = Vec::new();
    for &eps in epsilons {
        let e = cfg.real(eps);
        let value = ev.hyperlog(w, &(&one + &e))?;
        let p = eval_asymptotic_poly(&coeffs, &e.ln(), ev)?;
        let r = (&value - &p).abs().to_f64();
        residuals.push(r);
        ratios.push(r / (eps * eps.ln().abs().powi(m)));
    }
    let slack = 10.0 * cfg.tolerance;
    let monotone = residuals.windows(2).all(|p| p[1] <= p[0] + slack);
    let bound = 10.0 * ratios[0] + 1.0;
    let bounded = ratios.iter().all(|&r| r.is_finite() && r <= bound);
    Ok(AsymptoticReport {
        epsilons: epsilons.to_vec(),
        residuals,
        ratios,
        degree,
        passed: monotone && bounded,
    })
}

#[derive(Clone, Debug)]
pub struct LimitReport {
    pub points: Vec<f64>,
    /// `|L(w; Z) − L(Const(w))|` at each point.
    pub distances: Vec<f64>,
    pub passed: bool,
}

/// Checks `L(w; Z) → L(Const(w))` as `Z` grows through `points`.
pub fn check_const_limit(w: &Word, points: &[f64], ev: &Evaluator) -> Result<LimitReport> {
    let cfg = ev.config();
    let limit = ev.poly_mzv(&crate::algebra::const_proj(&NCPoly::from(w)))?;
    let mut distances = Vec::new();
    for &z in points {
        let v = ev.hyperlog(w, &cfg.real(z))?;
        distances.push((&v - &limit).abs().to_f64());
    }
    let slack = 10.0 * cfg.tolerance;
    let passed = distances.windows(2).all(|p| p[1] <= p[0] + slack)
        && distances
            .last()
            .is_some_and(|&d| d < distances[0] || d <= slack);
    Ok(LimitReport {
        points: points.to_vec(),
        distances,
        passed,
    })
}

/// `|Σ c·L(w)|` for every body in `bodies`.
pub fn relation_residuals<'a, I>(bodies: I, ev: &Evaluator) -> Result<Vec<f64>>
where
    I: IntoIterator<Item = &'a NCPoly>,
{
    bodies
        .into_iter()
        .map(|b| Ok(ev.poly_mzv(b)?.abs().to_f64()))
        .collect()
}

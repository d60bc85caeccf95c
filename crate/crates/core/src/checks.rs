//! Seeded verification suites for the algebraic, regularization, φ and
//! numeric identities. Exhaustive checks run over every word of a
//! subspace up to the given weight; sampled checks draw words with a
//! ChaCha generator so runs are reproducible from the seed.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    const_proj, derivation, shuffle, stuffle, substitute, tau_z, Letter, NCPoly, SubspaceTag, Word,
};
use crate::confluence::{
    generate_confluence, in_standard_ideal, lambda_map, phi_shuffle, phi_stuffle, phi_tensor, Mode,
};
use crate::error::{Error, Result};
use crate::numeric::{
    check_asymptotic, check_const_limit, check_derivative, Evaluator, PrecisionConfig,
};
use crate::regularization::{decompose_e1, reg_shuffle, reg_z1, reg_zz};

const MAX_REPORTED_FAILURES: usize = 10;

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    failed: usize,
}

impl CheckOutcome {
    fn new(name: &'static str) -> CheckOutcome {
        CheckOutcome {
            name,
            cases: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(detail());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failed(&self) -> usize {
        self.failed
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.cases)?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        write!(f, ")")?;
        for d in &self.failures {
            write!(f, "\n    {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Regularization,
    Phi,
    Numeric,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "algebra" => Ok(Suite::Algebra),
            "regularization" => Ok(Suite::Regularization),
            "phi" => Ok(Suite::Phi),
            "numeric" => Ok(Suite::Numeric),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub max_weight: usize,
    pub samples: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub const DEFAULT_SEED: u64 = 20_240_601;
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            max_weight: 5,
            samples: 500,
            seed: SuiteConfig::DEFAULT_SEED,
        }
    }
}

/// Uniform sampler over the words of a subspace within a weight range.
pub struct Sampler {
    rng: ChaCha8Rng,
    pools: HashMap<(SubspaceTag, usize), Vec<Word>>,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pools: HashMap::new(),
        }
    }

    /// A word of `tag` with weight in `lo..=hi` (weight uniform among the
    /// weights with at least one word, then word uniform).
    pub fn word(&mut self, tag: SubspaceTag, lo: usize, hi: usize) -> Word {
        let weights: Vec<usize> = (lo..=hi)
            .filter(|&k| !self.pool(tag, k).is_empty())
            .collect();
        let k = *weights
            .choose(&mut self.rng)
            .expect("non-empty weight range");
        let pool = &self.pools[&(tag, k)];
        pool[self.rng.gen_range(0..pool.len())].clone()
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("non-empty choice")
    }

    fn pool(&mut self, tag: SubspaceTag, k: usize) -> &Vec<Word> {
        self.pools
            .entry((tag, k))
            .or_insert_with(|| tag.words_of_weight(k))
    }
}

fn words_up_to(tag: SubspaceTag, max_weight: usize) -> impl Iterator<Item = Word> {
    (0..=max_weight).flat_map(move |k| tag.words_of_weight(k))
}

fn p(w: &Word) -> NCPoly {
    NCPoly::from(w)
}

const Z_DERIVATIONS: [Letter; 2] = [Letter::Zero, Letter::One];

// ---------------------------------------------------------------- algebra

/// Commutativity and associativity of ⧢ on random words, each factor of
/// weight at most `max(1, max_weight / 2)`.
pub fn shuffle_laws(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let hi = (max_weight / 2).max(1);
    let mut out = CheckOutcome::new("shuffle commutative and associative");
    for _ in 0..samples {
        let (u, v, w) = (
            p(&s.word(SubspaceTag::Az, 0, hi)),
            p(&s.word(SubspaceTag::Az, 0, hi)),
            p(&s.word(SubspaceTag::Az, 0, hi)),
        );
        let comm = shuffle(&u, &v) == shuffle(&v, &u);
        let assoc = shuffle(&shuffle(&u, &v), &w) == shuffle(&u, &shuffle(&v, &w));
        out.record(comm && assoc, || format!("u={u} v={v} w={w}"));
    }
    out
}

/// Commutativity and associativity of * on random `{0,1}`-words.
pub fn stuffle_laws(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let hi = (max_weight / 2).max(1);
    let mut out = CheckOutcome::new("stuffle commutative and associative on A");
    for _ in 0..samples {
        let (u, v, w) = (
            p(&s.word(SubspaceTag::A, 0, hi)),
            p(&s.word(SubspaceTag::A, 0, hi)),
            p(&s.word(SubspaceTag::A, 0, hi)),
        );
        let r = (|| {
            let comm = stuffle(&u, &v)? == stuffle(&v, &u)?;
            let assoc = stuffle(&stuffle(&u, &v)?, &w)? == stuffle(&u, &stuffle(&v, &w)?)?;
            Ok(comm && assoc)
        })();
        out.record_result(r, || format!("u={u} v={v} w={w}"));
    }
    out
}

/// `∂_{z,0} + ∂_{z,1} + ∂_{1,0} = 0` and `∂_{α,β}(A_z^0) ⊆ A_z^0`.
pub fn derivation_sum(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("derivation sum vanishes and preserves A_z^0");
    for w in words_up_to(SubspaceTag::Az0, max_weight) {
        let wp = p(&w);
        let a = derivation(Letter::Z, Letter::Zero, &wp);
        let b = derivation(Letter::Z, Letter::One, &wp);
        let c = derivation(Letter::One, Letter::Zero, &wp);
        let closed = [&a, &b, &c].iter().all(|d| SubspaceTag::Az0.contains(d));
        out.record((&(&a + &b) + &c).is_zero() && closed, || w.to_string());
    }
    out
}

/// `τ_z² = id` and `τ_z(A_z^0) ⊆ A_z^0`.
pub fn tau_z_involution(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("tau_z involutive and preserves A_z^0");
    for w in words_up_to(SubspaceTag::Az0, max_weight) {
        let t = tau_z(&p(&w));
        out.record(tau_z(&t) == p(&w) && SubspaceTag::Az0.contains(&t), || {
            w.to_string()
        });
    }
    out
}

/// `∂_{z,c}(u ⧢ v) = ∂_{z,c}u ⧢ v + u ⧢ ∂_{z,c}v` for random `u, v ∈ A_z`.
pub fn leibniz(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("Leibniz rule for shuffle");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::Az, 0, max_weight));
        let v = p(&s.word(SubspaceTag::Az, 0, max_weight));
        let c = *s.pick(&Z_DERIVATIONS);
        let lhs = derivation(Letter::Z, c, &shuffle(&u, &v));
        let rhs = &shuffle(&derivation(Letter::Z, c, &u), &v)
            + &shuffle(&u, &derivation(Letter::Z, c, &v));
        out.record(lhs == rhs, || format!("u={u} v={v} c={c:?}"));
    }
    out
}

/// `∂_{z,c}(u * v) = u * ∂_{z,c}v` for random `u ∈ A^1`, `v ∈ A_z`.
pub fn module_rule(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("module rule for stuffle");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::A1, 0, max_weight));
        let v = p(&s.word(SubspaceTag::Az, 0, max_weight));
        let c = *s.pick(&Z_DERIVATIONS);
        let r = (|| {
            let lhs = derivation(Letter::Z, c, &stuffle(&u, &v)?);
            let rhs = stuffle(&u, &derivation(Letter::Z, c, &v))?;
            Ok(lhs == rhs)
        })();
        out.record_result(r, || format!("u={u} v={v} c={c:?}"));
    }
    out
}

/// `τ_z ∂_{z,c} τ_z (u) = ∂_{z,c} u` for random `u ∈ A_z^0`.
pub fn conjugation(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("tau_z conjugation of derivations");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::Az0, 0, max_weight));
        let c = *s.pick(&Z_DERIVATIONS);
        let lhs = tau_z(&derivation(Letter::Z, c, &tau_z(&u)));
        out.record(lhs == derivation(Letter::Z, c, &u), || {
            format!("u={u} c={c:?}")
        });
    }
    out
}

/// `Const(u ⧢ v) = Const(u) ⧢ Const(v)` and `Const(u * v) = u * Const(v)`.
pub fn const_products(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("Const is multiplicative");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::Az, 0, max_weight));
        let v = p(&s.word(SubspaceTag::Az, 0, max_weight));
        let a = p(&s.word(SubspaceTag::A, 0, max_weight));
        let r = (|| {
            let sh = const_proj(&shuffle(&u, &v)) == shuffle(&const_proj(&u), &const_proj(&v));
            let st = const_proj(&stuffle(&a, &v)?) == stuffle(&a, &const_proj(&v))?;
            Ok(sh && st)
        })();
        out.record_result(r, || format!("u={u} v={v} a={a}"));
    }
    out
}

// --------------------------------------------------------- regularization

fn e1_power(i: usize) -> NCPoly {
    p(&Word::repeat(Letter::One, i))
}

/// Re-expansion of `decompose_e1`, `reg_z1`, `reg_zz` reproduces the
/// input, with every factor in its target subspace.
pub fn regularization_round_trips(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("regularization round trips");
    for w in words_up_to(SubspaceTag::Az1, max_weight) {
        let r = decompose_e1(&p(&w)).map(|parts| {
            let mut sum = NCPoly::zero();
            for (i, part) in parts.iter().enumerate() {
                sum += &shuffle(part, &e1_power(i));
            }
            sum == p(&w) && parts.iter().all(|q| SubspaceTag::Az0.contains(q))
        });
        out.record_result(r, || format!("decompose_e1({w})"));
    }
    for w in words_up_to(SubspaceTag::Az0, max_weight) {
        let r = reg_z1(&p(&w)).map(|t| {
            let factors_ok = t.iter().all(|(right, left)| {
                SubspaceTag::AzM2.contains(left)
                    && SubspaceTag::Z1z.contains_word(right)
                    && SubspaceTag::Az0.contains_word(right)
            });
            t.shuffle_out() == p(&w) && factors_ok
        });
        out.record_result(r, || format!("reg_z1({w})"));
    }
    for w in words_up_to(SubspaceTag::AzM1, max_weight) {
        let r = reg_zz(&p(&w)).map(|t| {
            let factors_ok = t
                .iter()
                .all(|(right, left)| SubspaceTag::AzM2.contains(left) && right.over(&[Letter::Z]));
            t.shuffle_out() == p(&w) && factors_ok
        });
        out.record_result(r, || format!("reg_zz({w})"));
    }
    out
}

/// `reg_⧢` is the identity on `A_z^0` and idempotent on `A_z^1`.
pub fn reg_shuffle_projection(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("reg_shuffle is a projection onto A_z^0");
    for w in words_up_to(SubspaceTag::Az1, max_weight) {
        let r = (|| {
            let once = reg_shuffle(&p(&w))?;
            let twice = reg_shuffle(&once)?;
            let fixed = !SubspaceTag::Az0.contains_word(&w) || once == p(&w);
            Ok(once == twice && fixed)
        })();
        out.record_result(r, || w.to_string());
    }
    out
}

/// `reg_⧢(u ⧢ v) = reg_⧢(u) ⧢ reg_⧢(v)` for random `u, v ∈ A_z^1`.
pub fn reg_shuffle_multiplicative(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
) -> CheckOutcome {
    let hi = (max_weight / 2).max(1);
    let mut out = CheckOutcome::new("reg_shuffle is a shuffle homomorphism");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::Az1, 0, hi));
        let v = p(&s.word(SubspaceTag::Az1, 0, hi));
        let r = (|| {
            Ok(reg_shuffle(&shuffle(&u, &v))? == shuffle(&reg_shuffle(&u)?, &reg_shuffle(&v)?))
        })();
        out.record_result(r, || format!("u={u} v={v}"));
    }
    out
}

/// `∂_{z,c} reg_⧢(w) = reg_⧢(∂_{z,c} w)` on all `A_z^1` words.
pub fn reg_shuffle_commutes_with_derivations(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("reg_shuffle commutes with d_{z,c}");
    for w in words_up_to(SubspaceTag::Az1, max_weight) {
        for c in Z_DERIVATIONS {
            let r = (|| {
                let lhs = derivation(Letter::Z, c, &reg_shuffle(&p(&w))?);
                let rhs = reg_shuffle(&derivation(Letter::Z, c, &p(&w)))?;
                Ok(lhs == rhs)
            })();
            out.record_result(r, || format!("w={w} c={c:?}"));
        }
    }
    out
}

// -------------------------------------------------------------------- phi

/// `φ_⊗ ∘ φ_⧢ = φ_⊗ ∘ φ_* = φ_⊗`.
pub fn phi_tensor_absorbs(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("phi_tensor absorbs phi_shuffle and phi_stuffle");
    for w in words_up_to(SubspaceTag::Az0, max_weight) {
        let r = (|| {
            let base = phi_tensor(&p(&w))?;
            Ok(phi_tensor(&phi_shuffle(&p(&w))?)? == base
                && phi_tensor(&phi_stuffle(&p(&w))?)? == base)
        })();
        out.record_result(r, || w.to_string());
    }
    out
}

/// `w − φ_⧢(w)` and `w − φ_*(w)` are standard relations, by both the
/// derivation test and `φ_⊗ = 0`.
pub fn standard_relations(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("w - phi(w) lies in the standard relations");
    for w in words_up_to(SubspaceTag::Az0, max_weight) {
        let r = (|| {
            let mut ok = true;
            for image in [phi_shuffle(&p(&w))?, phi_stuffle(&p(&w))?] {
                let rel = &p(&w) - &image;
                ok &= in_standard_ideal(&rel)? && phi_tensor(&rel)?.is_zero();
            }
            Ok(ok)
        })();
        out.record_result(r, || w.to_string());
    }
    out
}

/// `φ_⧢(A_z^0) ⊆ A_z^{-1}`.
pub fn phi_shuffle_range(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("phi_shuffle lands in A_z^-1");
    for w in words_up_to(SubspaceTag::Az0, max_weight) {
        let r = phi_shuffle(&p(&w)).map(|q| SubspaceTag::AzM1.contains(&q));
        out.record_result(r, || w.to_string());
    }
    out
}

/// `φ_⧢(u ⧢ v) = φ_⧢(u) ⧢ φ_⧢(v)` for random `u, v ∈ A_z^0`.
pub fn phi_shuffle_multiplicative(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("phi_shuffle is a shuffle homomorphism");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::Az0, 0, max_weight));
        let v = p(&s.word(SubspaceTag::Az0, 0, max_weight));
        let r = (|| {
            Ok(phi_shuffle(&shuffle(&u, &v))? == shuffle(&phi_shuffle(&u)?, &phi_shuffle(&v)?))
        })();
        out.record_result(r, || format!("u={u} v={v}"));
    }
    out
}

/// `φ_*(u * v) = u * φ_*(v)` for random `u ∈ A^0`, `v ∈ A_z^0`.
pub fn phi_stuffle_module(s: &mut Sampler, samples: usize, max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("phi_stuffle is A^0-linear for stuffle");
    for _ in 0..samples {
        let u = p(&s.word(SubspaceTag::A0, 0, max_weight));
        let v = p(&s.word(SubspaceTag::Az0, 0, max_weight));
        let r = (|| Ok(phi_stuffle(&stuffle(&u, &v)?)? == stuffle(&u, &phi_stuffle(&v)?)?))();
        out.record_result(r, || format!("u={u} v={v}"));
    }
    out
}

/// `λ = reg_⧢ ∘ |_{z→1}` on `A_z^{-1}`.
pub fn lambda_is_regularized_substitution(max_weight: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("lambda equals reg_shuffle after z -> 1");
    for w in words_up_to(SubspaceTag::AzM1, max_weight) {
        let r = (|| {
            let lhs = lambda_map(&p(&w))?;
            let rhs = reg_shuffle(&substitute(&p(&w), Letter::Z, Letter::One))?;
            Ok(lhs == rhs)
        })();
        out.record_result(r, || w.to_string());
    }
    out
}

// ---------------------------------------------------------------- numeric

/// `ζ(2)` and `ζ(3)` against independent closed-form and series oracles.
pub fn zeta_oracles(ev: &Evaluator) -> CheckOutcome {
    let mut out = CheckOutcome::new("zeta(2) and zeta(3) oracles");
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    // ζ(3) = (5/2) Σ (−1)^{n+1} / (n^3 C(2n, n))
    let mut zeta3 = 0.0;
    let mut binom = 1.0;
    for n in 1..40 {
        let nf = n as f64;
        binom *= (2.0 * nf - 1.0) * 2.0 / nf;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        zeta3 += 2.5 * sign / (nf * nf * nf * binom);
    }
    for (word, oracle) in [("10", zeta2), ("100", zeta3)] {
        let w: Word = word.parse().expect("valid word");
        let r = ev.mzv(&w).map(|v| (v.to_f64() + oracle).abs() < 1e-10);
        out.record_result(r, || format!("L({word})"));
    }
    out
}

/// Every nonzero confluence body of weight `2..=max_weight` evaluates to 0.
pub fn relation_zero_check(max_weight: usize, ev: &Evaluator) -> CheckOutcome {
    let mut out = CheckOutcome::new("confluence relations vanish numerically");
    for k in 2..=max_weight {
        let recs = match generate_confluence(k, Mode::Shuffle) {
            Ok(r) => r,
            Err(e) => {
                out.record(false, || format!("weight {k}: {e}"));
                continue;
            }
        };
        for r in recs.iter().filter(|r| !r.body.is_zero()) {
            match ev.poly_mzv(&r.body) {
                Ok(x) => {
                    let v = x.abs().to_f64();
                    out.record(v < 1e-10, || format!("{}: |L| = {v:e}", r.source));
                }
                Err(e) => out.record(false, || format!("{}: {e}", r.source)),
            }
        }
    }
    out
}

/// Shuffle and stuffle product identities at `z`: `L(u ⧢ v) = L(u) L(v)`
/// and `L(u * v) = L(u) L(v)` for `u ∈ A^0`, `v ∈ A_z^0`, total weight at
/// most `max_weight`.
pub fn product_identities(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
    z: f64,
    ev: &Evaluator,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("product identities hold numerically");
    let zr = ev.config().real(z);
    for _ in 0..samples {
        let u = s.word(SubspaceTag::A0, 0, max_weight.saturating_sub(1).max(2));
        let rest = max_weight.saturating_sub(u.len()).max(1);
        let v = s.word(SubspaceTag::Az0, 1, rest);
        let r = (|| {
            let prod = &ev.poly_hyperlog(&p(&u), &zr)? * &ev.poly_hyperlog(&p(&v), &zr)?;
            let sh = ev.poly_hyperlog(&shuffle(&p(&u), &p(&v)), &zr)?;
            let st = ev.poly_hyperlog(&stuffle(&p(&u), &p(&v))?, &zr)?;
            let d1 = (&sh - &prod).abs().to_f64();
            let d2 = (&st - &prod).abs().to_f64();
            Ok(d1 < 1e-8 && d2 < 1e-8)
        })();
        out.record_result(r, || format!("u={u} v={v}"));
    }
    out
}

/// `L(τ_z(u)) = L(u)` at `z` for random `u ∈ A_z^0`.
pub fn duality_identity(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
    z: f64,
    ev: &Evaluator,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("tau_z preserves L numerically");
    let zr = ev.config().real(z);
    for _ in 0..samples {
        let u = s.word(SubspaceTag::Az0, 1, max_weight);
        let r = (|| {
            let a = ev.poly_hyperlog(&p(&u), &zr)?;
            let b = ev.poly_hyperlog(&tau_z(&p(&u)), &zr)?;
            Ok((&a - &b).abs().to_f64() < 1e-8)
        })();
        out.record_result(r, || format!("u={u}"));
    }
    out
}

/// Finite-difference derivative in `z` against the derivation formula.
pub fn derivative_agreement(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
    z: f64,
    ev: &Evaluator,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("z-derivative matches derivations");
    for _ in 0..samples {
        let w = s.word(SubspaceTag::Az0, 1, max_weight);
        match check_derivative(&w, z, ev) {
            Ok(rep) => out.record(rep.passed, || format!("{w}: {rep:?}")),
            Err(e) => out.record(false, || format!("{w}: {e}")),
        }
    }
    out
}

/// `|L(w; 1+ε) − P_w(log ε)|` decreases along `ε = 1e-2, 1e-3, 1e-4`.
pub fn asymptotic_agreement(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
    ev: &Evaluator,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("asymptotics at z -> 1 match lambda");
    for _ in 0..samples {
        let w = s.word(SubspaceTag::Az0, 1, max_weight);
        match check_asymptotic(&w, &[1e-2, 1e-3, 1e-4], ev) {
            Ok(rep) => out.record(rep.passed, || format!("{w}: {rep:?}")),
            Err(e) => out.record(false, || format!("{w}: {e}")),
        }
    }
    out
}

/// `L(w; Z) → L(Const(w))` along `Z = 1e2, 1e3, 1e4`.
pub fn const_limit(
    s: &mut Sampler,
    samples: usize,
    max_weight: usize,
    ev: &Evaluator,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("z -> infinity limit is Const");
    for _ in 0..samples {
        let w = s.word(SubspaceTag::Az0, 1, max_weight);
        match check_const_limit(&w, &[1e2, 1e3, 1e4], ev) {
            Ok(rep) => out.record(rep.passed, || format!("{w}: {rep:?}")),
            Err(e) => out.record(false, || format!("{w}: {e}")),
        }
    }
    out
}

/// Runs every check of a suite.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckOutcome> {
    let mut s = Sampler::new(cfg.seed);
    let (k, n) = (cfg.max_weight, cfg.samples);
    match suite {
        Suite::Algebra => vec![
            shuffle_laws(&mut s, n, k),
            stuffle_laws(&mut s, n, k),
            derivation_sum(k),
            tau_z_involution(k),
            leibniz(&mut s, n, k),
            module_rule(&mut s, n, k),
            conjugation(&mut s, n, k),
            const_products(&mut s, n, k),
        ],
        Suite::Regularization => vec![
            regularization_round_trips(k),
            reg_shuffle_projection(k),
            reg_shuffle_multiplicative(&mut s, n, k),
            reg_shuffle_commutes_with_derivations(k),
        ],
        Suite::Phi => vec![
            phi_tensor_absorbs(k),
            standard_relations(k),
            phi_shuffle_range(k),
            phi_shuffle_multiplicative(&mut s, n, k.min(4)),
            phi_stuffle_module(&mut s, n, k.min(4)),
            lambda_is_regularized_substitution(k),
        ],
        Suite::Numeric => {
            let ev = Evaluator::new(PrecisionConfig::default());
            let m = k.min(4);
            vec![
                zeta_oracles(&ev),
                relation_zero_check(k, &ev),
                product_identities(&mut s, n, m, 3.0, &ev),
                duality_identity(&mut s, n, m, 3.0, &ev),
                derivative_agreement(&mut s, n, m, 3.0, &ev),
                asymptotic_agreement(&mut s, n, k.min(3), &ev),
                const_limit(&mut s, n, k.min(3), &ev),
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(
                a.word(SubspaceTag::Az0, 0, 5),
                b.word(SubspaceTag::Az0, 0, 5)
            );
        }
        let w = a.word(SubspaceTag::A0, 3, 3);
        assert!(SubspaceTag::A0.contains_word(&w) && w.len() == 3);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig {
            max_weight: 3,
            samples: 20,
            seed: 1,
        };
        for suite in [Suite::Algebra, Suite::Regularization, Suite::Phi] {
            for outcome in run_suite(suite, &cfg) {
                assert!(outcome.passed(), "{outcome}");
            }
        }
    }

    #[test]
    fn failures_are_reported() {
        let mut o = CheckOutcome::new("demo");
        o.record(true, String::new);
        o.record(false, || "bad".into());
        assert!(!o.passed());
        assert_eq!(o.to_string(), "FAIL demo (2 cases, 1 failed)\n    bad");
    }
}

//! Linear maps on `A_z`: the derivations `∂_{α,β}`, the dualities, the
//! constant-term projection and letter substitution.

use super::poly::{rat, NCPoly};
use super::subspace::{require, SubspaceTag};
use super::word::{Letter, Word};
use crate::error::Result;

#[inline]
fn same_pair(x: Letter, y: Letter, alpha: Letter, beta: Letter) -> bool {
    (x == alpha && y == beta) || (x == beta && y == alpha)
}

/// `∂_{α,β}` on a single word, boundary letters `a_0 = 0`, `a_{n+1} = 1`.
pub fn derivation_word(alpha: Letter, beta: Letter, w: &Word) -> NCPoly {
    let n = w.len();
    let letters = w.to_vec();
    let at = |i: usize| -> Letter {
        if i == 0 {
            Letter::Zero
        } else if i == n + 1 {
            Letter::One
        } else {
            letters[i - 1]
        }
    };
    let mut out = NCPoly::zero();
    for i in 1..=n {
        let plus = same_pair(at(i), at(i + 1), alpha, beta) as i64;
        let minus = same_pair(at(i - 1), at(i), alpha, beta) as i64;
        let c = plus - minus;
        if c != 0 {
            out.add_term(w.remove(i - 1), rat(c));
        }
    }
    out
}

pub fn derivation(alpha: Letter, beta: Letter, p: &NCPoly) -> NCPoly {
    p.map_linear(|w| derivation_word(alpha, beta, w))
}

/// Applies `∂_{α, β_1} ∘ ... ∘ ∂_{α, β_r}` (rightmost first).
pub fn derivation_chain(alpha: Letter, betas: &[Letter], p: &NCPoly) -> NCPoly {
    betas
        .iter()
        .rev()
        .fold(p.clone(), |acc, &b| derivation(alpha, b, &acc))
}

/// Image of an anti-automorphism given by its values on the generators.
fn anti_automorphism(w: &Word, image: impl Fn(Letter) -> NCPoly) -> NCPoly {
    w.letters()
        .rev()
        .fold(NCPoly::one(), |acc, l| acc.concat(&image(l)))
}

fn tau_z_letter(l: Letter) -> NCPoly {
    let ez = NCPoly::from(Word::single(Letter::Z));
    match l {
        Letter::Zero => &ez - &NCPoly::from(Word::single(Letter::One)),
        Letter::One => &ez - &NCPoly::from(Word::single(Letter::Zero)),
        Letter::Z => ez,
    }
}

pub fn tau_z_word(w: &Word) -> NCPoly {
    anti_automorphism(w, tau_z_letter)
}

/// The duality `τ_z`: `e0 ↦ ez − e1`, `e1 ↦ ez − e0`, `ez ↦ ez`, reversing
/// products.
pub fn tau_z(p: &NCPoly) -> NCPoly {
    p.map_linear(tau_z_word)
}

/// The duality `τ_∞` on `A`: `e0 ↦ −e1`, `e1 ↦ −e0`, reversing products.
pub fn tau_infinity(p: &NCPoly) -> Result<NCPoly> {
    require(p, SubspaceTag::A, "tau_infinity")?;
    Ok(p.map_linear(|w| {
        let swapped = Word::from_letters(w.letters().rev().map(|l| match l {
            Letter::Zero => Letter::One,
            _ => Letter::Zero,
        }));
        let sign = if w.len() % 2 == 0 { 1 } else { -1 };
        NCPoly::monomial(swapped, rat(sign))
    }))
}

/// `Const`: drops every word containing `z`.
pub fn const_proj(p: &NCPoly) -> NCPoly {
    p.filter_words(|w| !w.contains(Letter::Z))
}

/// The endomorphism `|_{a→b}` replacing every letter `a` by `b`.
pub fn substitute(p: &NCPoly, a: Letter, b: Letter) -> NCPoly {
    NCPoly::from_terms(p.terms().map(|(w, c)| (w.substitute(a, b), c.clone())))
}

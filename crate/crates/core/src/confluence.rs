//! The confluence pipeline `w ↦ λ(w − φ_⧢(w))` and the companion relation
//! families.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    const_proj, derivation, require, shuffle, stuffle, substitute, tau_infinity, tau_z_word,
    Letter, NCPoly, Rational, SubspaceTag, Word,
};
use crate::error::{Error, Result};
use crate::io::to_zeta_string;
use crate::regularization::{memoized, reg_shuffle, reg_z1, reg_zz, TensorSum};

static PHI_TENSOR: LazyLock<DashMap<Word, Arc<TensorSum>>> = LazyLock::new(DashMap::new);
static LAMBDA: LazyLock<DashMap<Word, Arc<NCPoly>>> = LazyLock::new(DashMap::new);

fn phi_tensor_word(w: &Word) -> Arc<TensorSum> {
    memoized(&PHI_TENSOR, w, || {
        let mut out = TensorSum::zero();
        descend(&NCPoly::from(w), Word::empty(), &mut out);
        out
    })
}

// Right factor e_{b1}...e_{br} grows to the left: the first derivation
// applied is ∂_{1,b_r}.
fn descend(q: &NCPoly, right: Word, out: &mut TensorSum) {
    out.add(&const_proj(q), right.clone(), &Rational::one());
    for b in [Letter::Zero, Letter::Z] {
        let next = derivation(Letter::One, b, q);
        if !next.is_zero() {
            descend(&next, right.prepend(b), out);
        }
    }
}

/// `φ_⊗(p) = Σ Const(∂_{1,b1}⋯∂_{1,br} p) ⊗ e_{b1}⋯e_{br}`.
pub fn phi_tensor(p: &NCPoly) -> Result<TensorSum> {
    require(p, SubspaceTag::Az0, "phi_tensor")?;
    let mut out = TensorSum::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&phi_tensor_word(w), c);
    }
    Ok(out)
}

/// `φ_⧢`: contracts [`phi_tensor`] with the shuffle product.
pub fn phi_shuffle(p: &NCPoly) -> Result<NCPoly> {
    Ok(phi_tensor(p)?.shuffle_out())
}

/// `φ_*`: contracts [`phi_tensor`] with the stuffle product.
pub fn phi_stuffle(p: &NCPoly) -> Result<NCPoly> {
    let t = phi_tensor(p)?;
    let mut out = NCPoly::zero();
    for (right, left) in t.iter() {
        out += &stuffle(left, &NCPoly::from(right))?;
    }
    Ok(out)
}

/// Membership in the standard relations: `Const(∂_{z,α1}⋯∂_{z,αr} p) = 0`
/// for every `r ≥ 0` and `α_i ∈ {0,1}`.
pub fn in_standard_ideal(p: &NCPoly) -> Result<bool> {
    require(p, SubspaceTag::Az0, "in_standard_ideal")?;
    let mut frontier = vec![p.clone()];
    while let Some(q) = frontier.pop() {
        if !const_proj(&q).is_zero() {
            return Ok(false);
        }
        for a in [Letter::Zero, Letter::One] {
            let next = derivation(Letter::Z, a, &q);
            if !next.is_zero() {
                frontier.push(next);
            }
        }
    }
    Ok(true)
}

/// `N = (u ⊗ v ↦ u ⧢ τ_z(v)) ∘ reg_{z,1}`, landing in `A_z^{-1}`.
pub fn n_map(p: &NCPoly) -> Result<NCPoly> {
    Ok(reg_z1(p)?.contract(|left, right| shuffle(left, &tau_z_word(right))))
}

/// `λ′ = |_{z→1}` on `A_z^{-2}`.
pub fn lambda_prime(p: &NCPoly) -> Result<NCPoly> {
    require(p, SubspaceTag::AzM2, "lambda_prime")?;
    Ok(substitute(p, Letter::Z, Letter::One))
}

fn lambda_word(w: &Word) -> Arc<NCPoly> {
    memoized(&LAMBDA, w, || {
        let n = n_map(&NCPoly::from(w)).expect("word checked convergent by caller");
        let t = reg_zz(&n).expect("N lands in A_z^-1");
        substitute(&t.left_of(&Word::empty()), Letter::Z, Letter::One)
    })
}

/// `λ = λ′ ∘ (id ⊗ const) ∘ reg_{z} ∘ N`.
pub fn lambda_map(p: &NCPoly) -> Result<NCPoly> {
    require(p, SubspaceTag::Az0, "lambda_map")?;
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&lambda_word(w), c);
    }
    Ok(out)
}

/// `(λ′(w_0), λ′(w_1), ...)` where `reg_{z}(N(p)) = Σ_k w_k ⊗ ez^k`; the
/// asymptotic polynomial is `P_p(T) = Σ_k L(λ′(w_k)) T^k / k!`.
pub fn asymptotic_poly(p: &NCPoly) -> Result<Vec<NCPoly>> {
    let t = reg_zz(&n_map(p)?)?;
    let top = t.iter().map(|(right, _)| right.len()).max().unwrap_or(0);
    (0..=top)
        .map(|k| lambda_prime(&t.left_of(&Word::repeat(Letter::Z, k))))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Confluence,
    Rds,
    Duality,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Confluence => "confluence",
            Family::Rds => "rds",
            Family::Duality => "duality",
        })
    }
}

/// Which product closes `φ_⊗` in the confluence generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Shuffle,
    Stuffle,
}

/// Where a relation came from: a single word, or the pair `(u, v)` of a
/// double shuffle generator (written `u|v`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Word(Word),
    Pair(Word, Word),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Word(w) => write!(f, "{w}"),
            Source::Pair(u, v) => write!(f, "{u}|{v}"),
        }
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Source> {
        match s.split_once('|') {
            Some((u, v)) => Ok(Source::Pair(u.parse()?, v.parse()?)),
            None => Ok(Source::Word(s.parse()?)),
        }
    }
}

impl Serialize for Source {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Source {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Source, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A relation `L(body) = 0` among multiple zeta values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationRecord {
    pub family: Family,
    pub weight: usize,
    pub source: Source,
    /// Homogeneous element of `A^0`.
    pub body: NCPoly,
    /// `body` rendered through `L(e1 e0^{k1-1} ⋯) = (-1)^d ζ(k1, …)`.
    pub zeta_form: String,
}

impl RelationRecord {
    pub fn new(family: Family, weight: usize, source: Source, body: NCPoly) -> RelationRecord {
        debug_assert!(SubspaceTag::A0.contains(&body));
        let zeta_form = to_zeta_string(&body).expect("relation bodies lie in A^0");
        RelationRecord {
            family,
            weight,
            source,
            body,
            zeta_form,
        }
    }
}

fn confluence_body(w: &Word, mode: Mode) -> Result<NCPoly> {
    let wp = NCPoly::from(w);
    let image = match mode {
        Mode::Shuffle => phi_shuffle(&wp)?,
        Mode::Stuffle => phi_stuffle(&wp)?,
    };
    lambda_map(&(&wp - &image))
}

/// `λ(w − φ_⧢(w))` for a convergent word `w`.
pub fn confluence_relation(w: &Word) -> Result<RelationRecord> {
    confluence_relation_with(w, Mode::Shuffle)
}

/// As [`confluence_relation`], closing `φ_⊗` with the chosen product.
pub fn confluence_relation_with(w: &Word, mode: Mode) -> Result<RelationRecord> {
    if !SubspaceTag::Az0.contains_word(w) {
        return Err(Error::NotInSubspace {
            op: "confluence_relation",
            tag: SubspaceTag::Az0,
        });
    }
    let body = confluence_body(w, mode)?;
    Ok(RelationRecord::new(
        Family::Confluence,
        w.len(),
        Source::Word(w.clone()),
        body,
    ))
}

/// One record per weight-`k` convergent word, `4·3^{k−2}` in all, in
/// canonical word order (zero bodies included).
pub fn generate_confluence(k: usize, mode: Mode) -> Result<Vec<RelationRecord>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "confluence generators need weight >= 2, got {k}"
        )));
    }
    SubspaceTag::Az0
        .words_of_weight(k)
        .par_iter()
        .map(|w| confluence_relation_with(w, mode))
        .collect()
}

/// `reg_⧢(u ⧢ v − u * v)` for `u ∈ A^1`, `v ∈ A^0`.
pub fn rds_relation(u: &Word, v: &Word) -> Result<RelationRecord> {
    let up = NCPoly::from(u);
    let vp = NCPoly::from(v);
    require(&up, SubspaceTag::A1, "rds_relation")?;
    require(&vp, SubspaceTag::A0, "rds_relation")?;
    let body = reg_shuffle(&(&shuffle(&up, &vp) - &stuffle(&up, &vp)?))?;
    Ok(RelationRecord::new(
        Family::Rds,
        u.len() + v.len(),
        Source::Pair(u.clone(), v.clone()),
        body,
    ))
}

/// All double shuffle generators of total weight `k`: `u` ranges over the
/// `A^1` words of weight `a ≥ 1`, `v` over the `A^0` words of weight
/// `b ≥ 2`, `a + b = k`.
pub fn generate_rds(k: usize) -> Result<Vec<RelationRecord>> {
    let pairs: Vec<(Word, Word)> = (1..k.saturating_sub(1))
        .flat_map(|a| {
            let us = SubspaceTag::A1.words_of_weight(a);
            let vs = SubspaceTag::A0.words_of_weight(k - a);
            us.into_iter()
                .flat_map(move |u| vs.clone().into_iter().map(move |v| (u.clone(), v)))
        })
        .collect();
    pairs.par_iter().map(|(u, v)| rds_relation(u, v)).collect()
}

/// `Δ(w) = w − τ_∞(w)` for `w ∈ A^0`.
pub fn duality_relation(w: &Word) -> Result<RelationRecord> {
    let wp = NCPoly::from(w);
    require(&wp, SubspaceTag::A0, "duality_relation")?;
    let body = &wp - &tau_infinity(&wp)?;
    Ok(RelationRecord::new(
        Family::Duality,
        w.len(),
        Source::Word(w.clone()),
        body,
    ))
}

pub fn generate_duality(k: usize) -> Result<Vec<RelationRecord>> {
    SubspaceTag::A0
        .words_of_weight(k)
        .iter()
        .map(duality_relation)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NCPoly {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn phi_tensor_examples() {
        assert_eq!(
            phi_tensor(&p("10")).unwrap(),
            TensorSum::pure(p("10"), Word::empty())
        );
        assert_eq!(
            phi_tensor(&p("z")).unwrap(),
            TensorSum::pure(NCPoly::one(), w("z"))
        );
        let mut expected = TensorSum::pure(p("10"), w("z"));
        expected.add(&NCPoly::one(), w("z00"), &Rational::one());
        expected.add(&NCPoly::one(), w("z0z"), &-Rational::one());
        assert_eq!(phi_tensor(&p("z10")).unwrap(), expected);
        assert!(phi_tensor(&p("1")).is_err());
    }

    #[test]
    fn phi_shuffle_examples() {
        let expected = &(&shuffle(&p("10"), &p("z")) + &p("z00")) - &p("z0z");
        assert_eq!(phi_shuffle(&p("z10")).unwrap(), expected);
        assert_eq!(phi_shuffle(&p("10")).unwrap(), p("10"));
        assert_eq!(phi_shuffle(&p("z")).unwrap(), p("z"));
    }

    #[test]
    fn phi_stuffle_examples() {
        assert_eq!(phi_stuffle(&p("10")).unwrap(), p("10"));
        assert_eq!(phi_stuffle(&p("z")).unwrap(), p("z"));
    }

    #[test]
    fn standard_ideal_examples() {
        let x = p("z10");
        let rel = &x - &phi_shuffle(&x).unwrap();
        assert!(in_standard_ideal(&rel).unwrap());
        assert!(!in_standard_ideal(&p("10")).unwrap());
        assert!(in_standard_ideal(&NCPoly::zero()).unwrap());
    }

    #[test]
    fn worked_example_chain() {
        let x = p("z10");
        let rel = &x - &phi_shuffle(&x).unwrap();

        let mut reg = TensorSum::pure(p("z10 - z00 - 2*zz0"), Word::empty());
        reg.add(&p("-1*10 + z0"), w("z"), &Rational::one());
        assert_eq!(reg_z1(&rel).unwrap(), reg);

        let n_expected = &p("z10 - z00 - 2*zz0") + &shuffle(&p("-1*10 + z0"), &p("z"));
        assert_eq!(n_map(&rel).unwrap(), n_expected);

        assert_eq!(lambda_map(&rel).unwrap(), p("-1*110 - 1*100"));
    }

    #[test]
    fn n_map_and_lambda_examples() {
        assert_eq!(n_map(&p("10")).unwrap(), p("10"));
        assert_eq!(n_map(&p("z")).unwrap(), p("z"));
        assert_eq!(lambda_prime(&p("z0")).unwrap(), p("10"));
        assert_eq!(
            lambda_prime(&p("z10 - z00 - 2*zz0")).unwrap(),
            p("-1*110 - 1*100")
        );
        assert_eq!(lambda_prime(&NCPoly::one()).unwrap(), NCPoly::one());
        assert!(lambda_prime(&p("z")).is_err());
        assert_eq!(lambda_map(&p("10")).unwrap(), p("10"));
    }

    #[test]
    fn asymptotic_poly_examples() {
        assert_eq!(asymptotic_poly(&p("10")).unwrap(), vec![p("10")]);
        assert_eq!(
            asymptotic_poly(&p("z")).unwrap(),
            vec![NCPoly::zero(), NCPoly::one()]
        );
        assert_eq!(asymptotic_poly(&p("z0")).unwrap(), vec![p("10")]);
    }

    #[test]
    fn confluence_examples() {
        assert_eq!(
            confluence_relation(&w("z10")).unwrap().body,
            p("-1*100 - 1*110")
        );
        assert_eq!(
            confluence_relation(&w("1z10")).unwrap().body,
            p("3*1000 + 5*1010 + 13*1100 + 4*1110")
        );
        for k in 2..=5 {
            for alphabet in [
                [Letter::Zero, Letter::One],
                [Letter::Zero, Letter::Z],
                [Letter::One, Letter::Z],
            ] {
                for word in Word::all_of_length(&alphabet, k) {
                    if SubspaceTag::Az0.contains_word(&word) {
                        let r = confluence_relation(&word).unwrap();
                        assert!(r.body.is_zero(), "{word}: {}", r.body);
                    }
                }
            }
        }
        assert!(confluence_relation(&w("z1")).is_err());
    }

    #[test]
    fn generator_counts_and_weight_two() {
        let recs = generate_confluence(2, Mode::Shuffle).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.body.is_zero()));
        assert_eq!(generate_confluence(3, Mode::Shuffle).unwrap().len(), 12);
        assert_eq!(generate_confluence(4, Mode::Stuffle).unwrap().len(), 36);
        assert!(generate_confluence(1, Mode::Shuffle).is_err());
    }

    #[test]
    fn rds_examples() {
        assert_eq!(
            rds_relation(&w("1"), &w("10")).unwrap().body,
            p("110 + 100")
        );
        assert_eq!(
            rds_relation(&w("10"), &w("10")).unwrap().body,
            p("1000 + 4*1100")
        );
        assert!(rds_relation(&w(""), &w("110")).unwrap().body.is_zero());
        assert!(rds_relation(&w("0"), &w("10")).is_err());
    }

    #[test]
    fn duality_examples() {
        assert!(duality_relation(&w("10")).unwrap().body.is_zero());
        assert_eq!(duality_relation(&w("100")).unwrap().body, p("100 + 110"));
        assert_eq!(duality_relation(&w("110")).unwrap().body, p("110 + 100"));
        assert!(duality_relation(&w("z0")).is_err());
    }

    #[test]
    fn source_text_round_trip() {
        for s in ["z10", "1|10", "|110", ""] {
            let src: Source = s.parse().unwrap();
            assert_eq!(src.to_string(), s);
        }
    }
}

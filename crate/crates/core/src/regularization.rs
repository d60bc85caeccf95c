//! Shuffle regularization and the two tensor decompositions
//!
//! * `reg_z1`: `A_z^0 ≅ A_z^{-2} ⊗ (A_z^0 ∩ Q<e1,ez>)`,
//! * `reg_zz`: `A_z^{-1} ≅ A_z^{-2} ⊗ Q<ez>`,
//!
//! both inverse to `u ⊗ v ↦ u ⧢ v`, and the decomposition
//! `w = Σ_i w_i ⧢ e1^i` behind `reg_⧢`.
//!
//! Every map is computed per word and memoized in a process-wide table.
//! Entries are pure functions of the key, so concurrent duplicate inserts
//! store equal values.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_traits::{One, Zero};

use crate::algebra::{rat, require, shuffle, Letter, NCPoly, Rational, SubspaceTag, Word};
use crate::error::Result;

/// `Σ left_i ⊗ right_i` in normal form: one entry per distinct right word.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorSum {
    terms: BTreeMap<Word, NCPoly>,
}

impl TensorSum {
    pub fn zero() -> TensorSum {
        TensorSum::default()
    }

    pub fn pure(left: NCPoly, right: Word) -> TensorSum {
        let mut t = TensorSum::zero();
        t.add(&left, right, &Rational::one());
        t
    }

    /// `self += c * (left ⊗ right)`.
    pub fn add(&mut self, left: &NCPoly, right: Word, c: &Rational) {
        if left.is_zero() || c.is_zero() {
            return;
        }
        match self.terms.entry(right) {
            Entry::Vacant(e) => {
                e.insert(left.scale(c));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_scaled(left, c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &TensorSum, c: &Rational) {
        for (right, left) in other.iter() {
            self.add(left, right.clone(), c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(right, left)` pairs in canonical order of the right factor.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &NCPoly)> {
        self.terms.iter()
    }

    /// The left factor paired with `right`.
    pub fn left_of(&self, right: &Word) -> NCPoly {
        self.terms.get(right).cloned().unwrap_or_default()
    }

    /// `Σ f(left_i, right_i)`.
    pub fn contract<F>(&self, mut f: F) -> NCPoly
    where
        F: FnMut(&NCPoly, &Word) -> NCPoly,
    {
        let mut out = NCPoly::zero();
        for (right, left) in self.iter() {
            out += &f(left, right);
        }
        out
    }

    /// `Σ left_i ⧢ right_i`.
    pub fn shuffle_out(&self) -> NCPoly {
        self.contract(|left, right| shuffle(left, &NCPoly::from(right)))
    }
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (right, left)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let right = if right.is_empty() {
                "()".to_string()
            } else {
                right.to_string()
            };
            write!(f, "({left}) ⊗ {right}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorSum({self})")
    }
}

type Cache<V> = LazyLock<DashMap<Word, Arc<V>>>;

static DECOMPOSE_E1: Cache<Vec<NCPoly>> = LazyLock::new(DashMap::new);
static REG_Z1: Cache<TensorSum> = LazyLock::new(DashMap::new);
static REG_ZZ: Cache<TensorSum> = LazyLock::new(DashMap::new);

/// Looks `w` up in `cache`, computing and inserting on a miss. The shard
/// guard is released before `compute` runs so recursive calls can insert.
pub(crate) fn memoized<V>(
    cache: &DashMap<Word, Arc<V>>,
    w: &Word,
    compute: impl FnOnce() -> V,
) -> Arc<V> {
    if let Some(hit) = cache.get(w) {
        return Arc::clone(&hit);
    }
    let value = Arc::new(compute());
    cache.insert(w.clone(), Arc::clone(&value));
    value
}

fn trailing_count(w: &Word, letters: &[Letter]) -> usize {
    w.letters()
        .rev()
        .take_while(|l| letters.contains(l))
        .count()
}

fn decompose_e1_word(w: &Word) -> Arc<Vec<NCPoly>> {
    memoized(&DECOMPOSE_E1, w, || {
        let t = trailing_count(w, &[Letter::One]);
        if t == 0 {
            return vec![NCPoly::from(w)];
        }
        // x ⧢ e1 = t·w + R', every word of R' having t-1 trailing e1's.
        let x = w.slice(0, w.len() - 1);
        let e1 = NCPoly::from(Word::single(Letter::One));
        let mut rest = shuffle(&NCPoly::from(&x), &e1);
        rest.add_term(w.clone(), -rat(t as i64));
        let dx = decompose_e1_word(&x);
        let drest = decompose_poly(&rest);
        let len = (dx.len() + 1).max(drest.len());
        let inv_t = Rational::one() / rat(t as i64);
        (0..len)
            .map(|j| {
                let mut comp = NCPoly::zero();
                if j >= 1 {
                    if let Some(prev) = dx.get(j - 1) {
                        comp.add_scaled(prev, &rat(j as i64));
                    }
                }
                if let Some(r) = drest.get(j) {
                    comp -= r;
                }
                comp.scale(&inv_t)
            })
            .collect()
    })
}

fn decompose_poly(p: &NCPoly) -> Vec<NCPoly> {
    let mut out: Vec<NCPoly> = Vec::new();
    for (w, c) in p.terms() {
        let parts = decompose_e1_word(w);
        if out.len() < parts.len() {
            out.resize(parts.len(), NCPoly::zero());
        }
        for (slot, part) in out.iter_mut().zip(parts.iter()) {
            slot.add_scaled(part, c);
        }
    }
    while out.len() > 1 && out.last().is_some_and(NCPoly::is_zero) {
        out.pop();
    }
    if out.is_empty() {
        out.push(NCPoly::zero());
    }
    out
}

/// The unique `(w_0, w_1, ...)` with `w_i ∈ A_z^0` and
/// `p = Σ_i w_i ⧢ e1^i`. Trailing zero components are trimmed; the result
/// always has at least one entry.
pub fn decompose_e1(p: &NCPoly) -> Result<Vec<NCPoly>> {
    require(p, SubspaceTag::Az1, "decompose_e1")?;
    Ok(decompose_poly(p))
}

/// `reg_⧢`: the `e1^0` component of [`decompose_e1`].
pub fn reg_shuffle(p: &NCPoly) -> Result<NCPoly> {
    Ok(decompose_e1(p)?.swap_remove(0))
}

/// Peels the maximal suffix over `suffix_letters`:
/// `w = u·s` gives `u ⊗ s − peel(u ⧢ s − u·s)`.
fn peel(
    w: &Word,
    suffix_letters: &[Letter],
    recurse: &dyn Fn(&Word) -> Arc<TensorSum>,
) -> TensorSum {
    let k = trailing_count(w, suffix_letters);
    if k == 0 {
        return TensorSum::pure(NCPoly::from(w), Word::empty());
    }
    let split = w.len() - k;
    let u = w.slice(0, split);
    let s = w.slice(split, w.len());
    let mut out = TensorSum::pure(NCPoly::from(&u), s.clone());
    let mut rest = shuffle(&NCPoly::from(&u), &NCPoly::from(&s));
    rest.add_term(w.clone(), -Rational::one());
    for (word, c) in rest.terms() {
        out.add_scaled(&recurse(word), &-c);
    }
    out
}

fn reg_z1_word(w: &Word) -> Arc<TensorSum> {
    memoized(&REG_Z1, w, || {
        peel(w, &[Letter::One, Letter::Z], &reg_z1_word)
    })
}

fn reg_zz_word(w: &Word) -> Arc<TensorSum> {
    memoized(&REG_ZZ, w, || peel(w, &[Letter::Z], &reg_zz_word))
}

fn collect_tensor(p: &NCPoly, per_word: fn(&Word) -> Arc<TensorSum>) -> TensorSum {
    let mut out = TensorSum::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&per_word(w), c);
    }
    out
}

/// Inverse of `A_z^{-2} ⊗ (A_z^0 ∩ Q<e1,ez>) → A_z^0`, `u ⊗ v ↦ u ⧢ v`.
pub fn reg_z1(p: &NCPoly) -> Result<TensorSum> {
    require(p, SubspaceTag::Az0, "reg_z1")?;
    Ok(collect_tensor(p, reg_z1_word))
}

/// Inverse of `A_z^{-2} ⊗ Q<ez> → A_z^{-1}`, `u ⊗ ez^k ↦ u ⧢ ez^k`.
pub fn reg_zz(p: &NCPoly) -> Result<TensorSum> {
    require(p, SubspaceTag::AzM1, "reg_zz")?;
    Ok(collect_tensor(p, reg_zz_word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;

    fn p(s: &str) -> NCPoly {
        s.parse().unwrap()
    }

    fn e1_power(i: usize) -> NCPoly {
        NCPoly::from(Word::repeat(Letter::One, i))
    }

    fn recombine(parts: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (i, part) in parts.iter().enumerate() {
            out += &shuffle(part, &e1_power(i));
        }
        out
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose_e1(&p("1")).unwrap(),
            vec![NCPoly::zero(), NCPoly::one()]
        );
        assert_eq!(decompose_e1(&p("10")).unwrap(), vec![p("10")]);
        assert_eq!(decompose_e1(&p("101")).unwrap(), vec![p("-2*110"), p("10")]);
        assert_eq!(
            decompose_e1(&p("11")).unwrap(),
            vec![NCPoly::zero(), NCPoly::zero(), NCPoly::one()]
        );
        assert!(decompose_e1(&p("01")).is_err());
    }

    #[test]
    fn reg_shuffle_examples() {
        assert!(reg_shuffle(&p("1")).unwrap().is_zero());
        assert_eq!(reg_shuffle(&p("101")).unwrap(), p("-2*110"));
        let convergent = p("z10 - 3*1z0 + 1/2*10");
        assert_eq!(reg_shuffle(&convergent).unwrap(), convergent);
        assert_eq!(reg_shuffle(&NCPoly::one()).unwrap(), NCPoly::one());
    }

    #[test]
    fn decompose_by_brute_force() {
        // Independent check: solve p = Σ w_i ⧢ e1^i for weight-3 words by
        // searching integer combinations of the candidate A_z^0 words.
        let target = p("101");
        let w0_basis = SubspaceTag::Az0.words_of_weight(3);
        let w1_basis = SubspaceTag::Az0.words_of_weight(2);
        let mut found = Vec::new();
        for a in &w1_basis {
            let base = shuffle(&NCPoly::from(a), &e1_power(1));
            for b in &w0_basis {
                for c in -3i64..=3 {
                    let candidate = &base + &NCPoly::monomial(b.clone(), rat(c));
                    if candidate == target {
                        found.push((a.clone(), b.clone(), c));
                    }
                }
            }
        }
        assert_eq!(
            found,
            vec![("10".parse().unwrap(), "110".parse().unwrap(), -2)]
        );
    }

    #[test]
    fn reg_z1_examples() {
        assert_eq!(
            reg_z1(&p("10")).unwrap(),
            TensorSum::pure(p("10"), Word::empty())
        );
        assert_eq!(
            reg_z1(&p("z")).unwrap(),
            TensorSum::pure(NCPoly::one(), "z".parse().unwrap())
        );
        assert!(reg_z1(&NCPoly::zero()).unwrap().is_zero());
        assert!(reg_z1(&p("z1")).is_err());
    }

    #[test]
    fn reg_zz_examples() {
        assert_eq!(
            reg_zz(&p("10")).unwrap(),
            TensorSum::pure(p("10"), Word::empty())
        );
        let mut expected = TensorSum::pure(p("10"), "z".parse().unwrap());
        expected.add(&p("1z0 + z10"), Word::empty(), &-Rational::one());
        assert_eq!(reg_zz(&p("10z")).unwrap(), expected);
        assert!(reg_zz(&p("1z")).is_err());
    }

    #[test]
    fn round_trips_on_all_short_words() {
        for k in 0..=6 {
            for w in SubspaceTag::Az1.words_of_weight(k) {
                let wp = NCPoly::from(&w);
                let parts = decompose_e1(&wp).unwrap();
                assert_eq!(recombine(&parts), wp, "decompose_e1 {w}");
                assert!(parts.iter().all(|x| SubspaceTag::Az0.contains(x)));
            }
            for w in SubspaceTag::Az0.words_of_weight(k) {
                let t = reg_z1(&NCPoly::from(&w)).unwrap();
                assert_eq!(t.shuffle_out(), NCPoly::from(&w), "reg_z1 {w}");
                for (right, left) in t.iter() {
                    assert!(SubspaceTag::AzM2.contains(left));
                    assert!(SubspaceTag::Z1z.contains_word(right));
                    assert!(SubspaceTag::Az0.contains_word(right));
                }
            }
            for w in SubspaceTag::AzM1.words_of_weight(k) {
                let t = reg_zz(&NCPoly::from(&w)).unwrap();
                assert_eq!(t.shuffle_out(), NCPoly::from(&w), "reg_zz {w}");
                for (right, left) in t.iter() {
                    assert!(SubspaceTag::AzM2.contains(left));
                    assert!(right.over(&[Letter::Z]));
                }
            }
        }
    }
}

//! Sparse non-commutative polynomials with rational coefficients.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::word::{Letter, Word};
use crate::error::Error;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A finitely supported map `Word -> Rational`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly::default()
    }

    pub fn one() -> NCPoly {
        NCPoly::from(Word::empty())
    }

    pub fn monomial(word: Word, coeff: Rational) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Builds a polynomial from integer multiplicities.
    pub fn from_counts<I: IntoIterator<Item = (Word, i128)>>(terms: I) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of supported words.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn words(&self) -> btree_map::Keys<'_, Word, Rational> {
        self.terms.keys()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum weight of a supported word; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// The common weight of all supported words. The zero polynomial is
    /// homogeneous of every weight and reports `Some(None)`.
    pub fn homogeneous_weight(&self) -> Option<Option<usize>> {
        let mut weights = self.terms.keys().map(Word::len);
        match weights.next() {
            None => Some(None),
            Some(first) => weights.all(|w| w == first).then_some(Some(first)),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, d) in other.terms() {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        let mut out = NCPoly::zero();
        out.add_scaled(self, c);
        out
    }

    /// Linear extension of a map defined on words.
    pub fn map_linear<F>(&self, mut f: F) -> NCPoly
    where
        F: FnMut(&Word) -> NCPoly,
    {
        let mut out = NCPoly::zero();
        for (w, c) in self.terms() {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Fallible linear extension of a map defined on words.
    pub fn try_map_linear<F, E>(&self, mut f: F) -> Result<NCPoly, E>
    where
        F: FnMut(&Word) -> Result<NCPoly, E>,
    {
        let mut out = NCPoly::zero();
        for (w, c) in self.terms() {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Bilinear extension of an integer-valued map on pairs of words.
    pub fn map_bilinear<F>(&self, other: &NCPoly, mut f: F) -> NCPoly
    where
        F: FnMut(&Word, &Word) -> Vec<(Word, i128)>,
    {
        let mut out = NCPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let ab = a * b;
                for (w, n) in f(u, v) {
                    out.add_term(w, &ab * Rational::from_integer(BigInt::from(n)));
                }
            }
        }
        out
    }

    /// Keeps only the words accepted by `keep`.
    pub fn filter_words<F: FnMut(&Word) -> bool>(&self, mut keep: F) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Concatenation product.
    pub fn concat(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `e_letter * self`.
    pub fn prepend(&self, letter: Letter) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.prepend(letter), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of weight `k`.
    pub fn component(&self, k: usize) -> NCPoly {
        self.filter_words(|w| w.len() == k)
    }
}

impl From<Word> for NCPoly {
    fn from(word: Word) -> NCPoly {
        NCPoly::monomial(word, Rational::one())
    }
}

impl From<&Word> for NCPoly {
    fn from(word: &Word) -> NCPoly {
        NCPoly::from(word.clone())
    }
}

impl FromIterator<(Word, Rational)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> NCPoly {
        NCPoly::from_terms(iter)
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(mut self, rhs: NCPoly) -> NCPoly {
        self += &rhs;
        self
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(mut self, rhs: NCPoly) -> NCPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl Mul<&Rational> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &Rational) -> NCPoly {
        self.scale(rhs)
    }
}

fn fmt_word(word: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if word.is_empty() {
        write!(f, "()")
    } else {
        write!(f, "{word}")
    }
}

/// Text form `c1*w1 + c2*w2 - ...`, words in canonical order, the empty word
/// written `()`.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            write!(f, "{}*", c.abs())?;
            fmt_word(w, f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

impl FromStr for NCPoly {
    type Err = Error;

    /// Accepts `c*w` terms joined by `+`/`-`; a bare term is a word with
    /// coefficient 1 and the lone string `0` is the zero polynomial.
    fn from_str(s: &str) -> Result<NCPoly, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" || compact.is_empty() {
            return Ok(NCPoly::zero());
        }
        let mut out = NCPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (coeff, word) = match term.split_once('*') {
                Some((c, w)) => (
                    c.parse::<Rational>()
                        .map_err(|_| Error::InvalidTerm(term.to_string()))?,
                    w,
                ),
                None => (Rational::one(), term),
            };
            if word.is_empty() && !term.contains('*') {
                return Err(Error::InvalidTerm(s.to_string()));
            }
            let word = if word == "()" {
                Word::empty()
            } else {
                word.parse()?
            };
            out.add_term(word, coeff * rat(sign));
        }
        Ok(out)
    }
}

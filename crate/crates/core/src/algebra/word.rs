//! Letters and words over the alphabet `{e0, e1, ez}`.
//!
//! Words of length at most [`PACKED_CAPACITY`] are stored as two bits per
//! letter in a `u64`, first letter in the most significant used position, so
//! that comparing two packed words of equal length is a single integer
//! comparison. Longer words fall back to a boxed letter slice.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Maximum length of a word kept in packed form.
pub const PACKED_CAPACITY: usize = 32;

/// One of the three generators. The derived order `Zero < One < Z` is the
/// canonical letter order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
    Z,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::Zero, Letter::One, Letter::Z];

    #[inline]
    pub(crate) fn code(self) -> u64 {
        match self {
            Letter::Zero => 0,
            Letter::One => 1,
            Letter::Z => 2,
        }
    }

    #[inline]
    pub(crate) fn from_code(code: u64) -> Letter {
        match code {
            0 => Letter::Zero,
            1 => Letter::One,
            _ => Letter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Result<Letter, Error> {
        match c {
            '0' => Ok(Letter::Zero),
            '1' => Ok(Letter::One),
            'z' | 'Z' => Ok(Letter::Z),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Packed { len: u8, bits: u64 },
    Long(Box<[Letter]>),
}

/// A monomial `e_{a1} ... e_{an}`; the empty word is the unit.
///
/// Ordering is shortlex: shorter words first, then lexicographic in the
/// letter order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Repr);

impl Word {
    pub const fn empty() -> Word {
        Word(Repr::Packed { len: 0, bits: 0 })
    }

    pub fn single(letter: Letter) -> Word {
        Word(Repr::Packed {
            len: 1,
            bits: letter.code(),
        })
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut bits = 0u64;
        let mut len = 0usize;
        let mut iter = letters.into_iter();
        for letter in iter.by_ref() {
            bits = (bits << 2) | letter.code();
            len += 1;
            if len == PACKED_CAPACITY {
                break;
            }
        }
        match iter.next() {
            None => Word(Repr::Packed {
                len: len as u8,
                bits,
            }),
            Some(next) => {
                let mut all: Vec<Letter> = unpack(bits, len).collect();
                all.push(next);
                all.extend(iter);
                Word(Repr::Long(all.into_boxed_slice()))
            }
        }
    }

    /// `letter^n`.
    pub fn repeat(letter: Letter, n: usize) -> Word {
        Word::from_letters(std::iter::repeat_n(letter, n))
    }

    #[inline]
    pub fn len(&self) -> usize {
        match &self.0 {
            Repr::Packed { len, .. } => *len as usize,
            Repr::Long(v) => v.len(),
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Letter at position `i` (0-based, left to right).
    #[inline]
    pub fn letter(&self, i: usize) -> Letter {
        match &self.0 {
            Repr::Packed { len, bits } => {
                let len = *len as usize;
                assert!(i < len, "letter index {i} out of range for length {len}");
                Letter::from_code((bits >> (2 * (len - 1 - i))) & 3)
            }
            Repr::Long(v) => v[i],
        }
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    pub fn letters(&self) -> Letters<'_> {
        Letters {
            word: self,
            front: 0,
            back: self.len(),
        }
    }

    pub fn to_vec(&self) -> Vec<Letter> {
        self.letters().collect()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters().any(|l| l == letter)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters().filter(|&l| l == letter).count()
    }

    /// True when every letter lies in `alphabet`.
    pub fn over(&self, alphabet: &[Letter]) -> bool {
        self.letters().all(|l| alphabet.contains(&l))
    }

    pub fn concat(&self, other: &Word) -> Word {
        match (&self.0, &other.0) {
            (Repr::Packed { len: a, bits: x }, Repr::Packed { len: b, bits: y })
                if (*a as usize + *b as usize) <= PACKED_CAPACITY =>
            {
                let shifted = if *b == 0 { *x } else { x << (2 * *b as u32) };
                Word(Repr::Packed {
                    len: a + b,
                    bits: shifted | y,
                })
            }
            _ => Word::from_letters(self.letters().chain(other.letters())),
        }
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        Word::single(letter).concat(self)
    }

    pub fn append(&self, letter: Letter) -> Word {
        self.concat(&Word::single(letter))
    }

    /// The word with the letter at position `i` removed.
    pub fn remove(&self, i: usize) -> Word {
        match &self.0 {
            Repr::Packed { len, bits } => {
                let len = *len as usize;
                assert!(i < len);
                let low_len = len - 1 - i;
                let low_mask = if low_len == 0 {
                    0
                } else {
                    (1u64 << (2 * low_len)) - 1
                };
                let low = bits & low_mask;
                let high = if low_len + 1 >= 32 {
                    0
                } else {
                    bits >> (2 * (low_len + 1))
                };
                Word(Repr::Packed {
                    len: (len - 1) as u8,
                    bits: (high << (2 * low_len)) | low,
                })
            }
            Repr::Long(v) => Word::from_letters(
                v.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, l)| *l),
            ),
        }
    }

    /// Letters `start..end` as a new word.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters((start..end).map(|i| self.letter(i)))
    }

    pub fn reversed(&self) -> Word {
        Word::from_letters(self.letters().rev())
    }

    pub fn substitute(&self, from: Letter, to: Letter) -> Word {
        Word::from_letters(self.letters().map(|l| if l == from { to } else { l }))
    }

    /// All words of length `n` over `alphabet`, in canonical order
    /// provided `alphabet` is sorted.
    pub fn all_of_length(alphabet: &[Letter], n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * alphabet.len());
            for w in &out {
                for &l in alphabet {
                    next.push(w.append(l));
                }
            }
            out = next;
        }
        out
    }
}

fn unpack(bits: u64, len: usize) -> impl Iterator<Item = Letter> {
    (0..len).map(move |i| Letter::from_code((bits >> (2 * (len - 1 - i))) & 3))
}

pub struct Letters<'a> {
    word: &'a Word,
    front: usize,
    back: usize,
}

impl Iterator for Letters<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if self.front < self.back {
            let l = self.word.letter(self.front);
            self.front += 1;
            Some(l)
        } else {
            None
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.back - self.front;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Letters<'_> {
    fn next_back(&mut self) -> Option<Letter> {
        if self.front < self.back {
            self.back -= 1;
            Some(self.word.letter(self.back))
        } else {
            None
        }
    }
}

impl ExactSizeIterator for Letters<'_> {}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Packed { len: a, bits: x }, Repr::Packed { len: b, bits: y }) => {
                a.cmp(b).then(x.cmp(y))
            }
            _ => self
                .len()
                .cmp(&other.len())
                .then_with(|| self.letters().cmp(other.letters())),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Word {
    fn default() -> Word {
        Word::empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        let letters = s
            .trim()
            .chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::from_letters(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

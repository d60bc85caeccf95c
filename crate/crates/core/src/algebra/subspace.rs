//! Membership tests for the distinguished subspaces of `A_z`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::NCPoly;
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// The subspaces of `A_z = Q<e0, e1, ez>` used throughout the crate. Each is
/// spanned by the words it accepts, so membership is a per-word test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubspaceTag {
    /// All of `A_z`.
    Az,
    /// Words over `{0, 1}`.
    A,
    /// Convergent words: empty, `z`, or first in `{1,z}` and last in `{0,z}`.
    Az0,
    /// `A ∩ Az0`: empty, or `1 ... 0` over `{0,1}`.
    A0,
    /// Empty or first letter in `{1,z}`.
    Az1,
    /// `A ∩ Az1`.
    A1,
    /// Empty, or first in `{1,z}` and last `0`.
    AzM2,
    /// An `AzM2` word followed by a power of `z`.
    AzM1,
    /// Words over `{0, z}`.
    Z0z,
    /// Words over `{1, z}`.
    Z1z,
}

impl SubspaceTag {
    pub fn contains_word(self, w: &Word) -> bool {
        use Letter::*;
        let n = w.len();
        let first = w.first();
        let last = w.last();
        let binary = || w.over(&[Zero, One]);
        match self {
            SubspaceTag::Az => true,
            SubspaceTag::A => binary(),
            SubspaceTag::Az0 => {
                n == 0
                    || (n == 1 && first == Some(Z))
                    || (n >= 2 && matches!(first, Some(One | Z)) && matches!(last, Some(Zero | Z)))
            }
            SubspaceTag::A0 => {
                n == 0 || (n >= 2 && first == Some(One) && last == Some(Zero) && binary())
            }
            SubspaceTag::Az1 => n == 0 || matches!(first, Some(One | Z)),
            SubspaceTag::A1 => n == 0 || (first == Some(One) && binary()),
            SubspaceTag::AzM2 => {
                n == 0 || (n >= 2 && matches!(first, Some(One | Z)) && last == Some(Zero))
            }
            SubspaceTag::AzM1 => {
                let trailing = w.letters().rev().take_while(|&l| l == Z).count();
                SubspaceTag::AzM2.contains_word(&w.slice(0, n - trailing))
            }
            SubspaceTag::Z0z => w.over(&[Zero, Z]),
            SubspaceTag::Z1z => w.over(&[One, Z]),
        }
    }

    pub fn contains(self, p: &NCPoly) -> bool {
        p.words().all(|w| self.contains_word(w))
    }

    /// Weight-`k` words of the subspace in canonical order, for the tags
    /// with a finite graded piece.
    pub fn words_of_weight(self, k: usize) -> Vec<Word> {
        let alphabet: &[Letter] = match self {
            SubspaceTag::A | SubspaceTag::A0 | SubspaceTag::A1 => &[Letter::Zero, Letter::One],
            SubspaceTag::Z0z => &[Letter::Zero, Letter::Z],
            SubspaceTag::Z1z => &[Letter::One, Letter::Z],
            _ => &Letter::ALL,
        };
        Word::all_of_length(alphabet, k)
            .into_iter()
            .filter(|w| self.contains_word(w))
            .collect()
    }
}

impl fmt::Display for SubspaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SubspaceTag::Az => "A_z",
            SubspaceTag::A => "A",
            SubspaceTag::Az0 => "A_z^0",
            SubspaceTag::A0 => "A^0",
            SubspaceTag::Az1 => "A_z^1",
            SubspaceTag::A1 => "A^1",
            SubspaceTag::AzM2 => "A_z^-2",
            SubspaceTag::AzM1 => "A_z^-1",
            SubspaceTag::Z0z => "Q<e0,ez>",
            SubspaceTag::Z1z => "Q<e1,ez>",
        };
        f.write_str(s)
    }
}

pub fn subspace_check(p: &NCPoly, tag: SubspaceTag) -> bool {
    tag.contains(p)
}

/// Precondition guard shared by the operations that name a subspace.
pub(crate) fn require(p: &NCPoly, tag: SubspaceTag, op: &'static str) -> Result<()> {
    if tag.contains(p) {
        Ok(())
    } else {
        Err(Error::NotInSubspace { op, tag })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubspaceTag::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(Az0.contains_word(&w("z")));
        assert!(A0.contains_word(&w("")));
        assert!(!Az0.contains_word(&w("z1")));
        assert!(!Az0.contains_word(&w("1")));
        assert!(!A0.contains_word(&w("z0")));
        assert!(AzM2.contains_word(&w("z10")));
        assert!(!AzM2.contains_word(&w("10z")));
        assert!(AzM1.contains_word(&w("10zz")));
        assert!(AzM1.contains_word(&w("zz")));
        assert!(!AzM1.contains_word(&w("1z")));
        assert!(A1.contains_word(&w("11")));
        assert!(!A1.contains_word(&w("01")));
    }

    #[test]
    fn convergent_word_count() {
        for k in 2..=8 {
            assert_eq!(Az0.words_of_weight(k).len(), 4 * 3usize.pow(k as u32 - 2));
            assert_eq!(A0.words_of_weight(k).len(), 1 << (k - 2));
        }
    }

    #[test]
    fn nesting() {
        for k in 0..=5 {
            for word in Word::all_of_length(&Letter::ALL, k) {
                if AzM2.contains_word(&word) {
                    assert!(AzM1.contains_word(&word));
                }
                if AzM1.contains_word(&word) {
                    assert!(Az0.contains_word(&word), "{word}");
                }
                if A0.contains_word(&word) {
                    assert!(Az0.contains_word(&word) && A1.contains_word(&word));
                }
                if Az0.contains_word(&word) && !word.is_empty() && word != w("z") {
                    assert!(Az1.contains_word(&word));
                }
            }
        }
    }
}

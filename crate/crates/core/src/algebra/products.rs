//! Shuffle and generalized stuffle products.

use std::collections::HashMap;

use super::poly::NCPoly;
use super::subspace::{require, SubspaceTag};
use super::word::{Letter, Word};
use crate::error::Result;

/// Shuffle of two words as integer multiplicities.
///
/// Each interleaving is a choice of `|u|` positions among `|u| + |v|`; for
/// totals up to 64 letters these are enumerated as bit masks.
pub fn shuffle_words(u: &Word, v: &Word) -> Vec<(Word, i128)> {
    if u.is_empty() {
        return vec![(v.clone(), 1)];
    }
    if v.is_empty() {
        return vec![(u.clone(), 1)];
    }
    let (m, n) = (u.len(), v.len());
    let total = m + n;
    let mut counts: HashMap<Word, i128> = HashMap::new();
    if total <= 64 {
        let ul = u.to_vec();
        let vl = v.to_vec();
        let mut buf = Vec::with_capacity(total);
        let last = if total == 64 {
            u64::MAX
        } else {
            (1u64 << total) - 1
        };
        let mut mask: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        loop {
            buf.clear();
            let (mut i, mut j) = (0, 0);
            for pos in (0..total).rev() {
                if mask >> pos & 1 == 1 {
                    buf.push(ul[i]);
                    i += 1;
                } else {
                    buf.push(vl[j]);
                    j += 1;
                }
            }
            *counts
                .entry(Word::from_letters(buf.iter().copied()))
                .or_insert(0) += 1;
            // Gosper's hack: next mask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask.wrapping_add(c);
            if r == 0 || r > last {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask > last {
                break;
            }
        }
    } else {
        shuffle_recursive(&u.to_vec(), &v.to_vec(), &mut Vec::new(), &mut counts);
    }
    counts.into_iter().collect()
}

fn shuffle_recursive(
    u: &[Letter],
    v: &[Letter],
    prefix: &mut Vec<Letter>,
    out: &mut HashMap<Word, i128>,
) {
    if u.is_empty() || v.is_empty() {
        let word = Word::from_letters(prefix.iter().chain(u).chain(v).copied());
        *out.entry(word).or_insert(0) += 1;
        return;
    }
    prefix.push(u[0]);
    shuffle_recursive(&u[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0]);
    shuffle_recursive(u, &v[1..], prefix, out);
    prefix.pop();
}

/// Bilinear shuffle product on `A_z`.
pub fn shuffle(p: &NCPoly, q: &NCPoly) -> NCPoly {
    p.map_bilinear(q, shuffle_words)
}

/// Label product `ab` of the stuffle recursion, `a` restricted to `{0, 1}`.
fn label_product(a: Letter, b: Letter) -> Letter {
    match a {
        Letter::Zero => Letter::Zero,
        _ => b,
    }
}

/// Generalized stuffle of a `{0,1}`-word `u` with any word `v`.
///
/// Dynamic programme over suffix pairs `(u[i..], v[j..])` of
/// `e_a u' * e_b v' = e_{ab}(u' * e_b v' + e_a u' * v' - e_0(u' * v'))`.
pub fn stuffle_words(u: &Word, v: &Word) -> Vec<(Word, i128)> {
    let ul = u.to_vec();
    let vl = v.to_vec();
    let (m, n) = (ul.len(), vl.len());
    debug_assert!(!ul.contains(&Letter::Z));
    // table[i][j] = u[i..] * v[j..]
    let mut table: Vec<Vec<HashMap<Word, i128>>> = vec![vec![HashMap::new(); n + 1]; m + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[n].insert(u.slice(i, m), 1);
    }
    for (j, cell) in table[m].iter_mut().enumerate() {
        cell.insert(v.slice(j, n), 1);
    }
    for i in (0..m).rev() {
        for j in (0..n).rev() {
            let head = label_product(ul[i], vl[j]);
            let mut acc: HashMap<Word, i128> = HashMap::new();
            for (w, c) in &table[i + 1][j] {
                *acc.entry(w.prepend(head)).or_insert(0) += c;
            }
            for (w, c) in &table[i][j + 1] {
                *acc.entry(w.prepend(head)).or_insert(0) += c;
            }
            for (w, c) in &table[i + 1][j + 1] {
                let w = w.prepend(Letter::Zero).prepend(head);
                *acc.entry(w).or_insert(0) -= c;
            }
            acc.retain(|_, c| *c != 0);
            table[i][j] = acc;
        }
    }
    std::mem::take(&mut table[0][0]).into_iter().collect()
}

/// Generalized stuffle `A x A_z -> A_z`; the left factor must not contain `z`.
pub fn stuffle(p: &NCPoly, q: &NCPoly) -> Result<NCPoly> {
    require(p, SubspaceTag::A, "stuffle")?;
    Ok(p.map_bilinear(q, stuffle_words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p(s: &str) -> NCPoly {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&p("1"), &p("1*0")), p("10 + 01"));
        assert_eq!(shuffle(&p("10 - 3*z0"), &NCPoly::one()), p("10 - 3*z0"));
        assert_eq!(shuffle(&p("10"), &p("z")), p("10z + 1z0 + z10"));
        assert_eq!(shuffle(&p("1"), &p("1")), p("2*11"));
    }

    #[test]
    fn shuffle_count_is_binomial() {
        let u: Word = "1010101".parse().unwrap();
        let v: Word = "zz00z".parse().unwrap();
        let total: i128 = shuffle_words(&u, &v).iter().map(|(_, c)| c).sum();
        assert_eq!(total, 792); // C(12, 5)
    }

    #[test]
    fn long_shuffle_uses_recursion() {
        let u = Word::repeat(Letter::One, 63);
        let v: Word = "0z".parse().unwrap();
        let terms = shuffle_words(&u, &v);
        let total: i128 = terms.iter().map(|(_, c)| c).sum();
        // C(65, 2)
        assert_eq!(total, 2080);
        assert_eq!(terms.len(), 64 * 65 / 2);
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(stuffle(&p("10"), &NCPoly::one()).unwrap(), p("10"));
        assert_eq!(stuffle(&NCPoly::one(), &p("z0")).unwrap(), p("z0"));
        assert_eq!(stuffle(&p("1"), &p("1")).unwrap(), p("2*11 - 1*10"));
        assert_eq!(stuffle(&p("1"), &p("z")).unwrap(), p("zz + z1 - z0"));
        assert!(matches!(
            stuffle(&p("z"), &p("1")),
            Err(Error::NotInSubspace { .. })
        ));
    }

    #[test]
    fn stuffle_matches_harmonic_product_in_depth_one() {
        // (-e1 e0) * (-e1 e0) corresponds to zeta(2)*zeta(2)
        // = 2 zeta(2,2) + zeta(4), i.e. 2*1010 - 1000 after the sign rule.
        let out = stuffle(&p("10"), &p("10")).unwrap();
        assert_eq!(out, p("2*1010 - 1*1000"));
    }
}

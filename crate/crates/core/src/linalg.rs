//! Exact linear algebra over `Q` on graded pieces of the word algebra.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{NCPoly, Rational, SubspaceTag, Word};
use crate::error::{Error, Result};

/// An ordered list of words indexing vector coordinates.
#[derive(Clone, Debug)]
pub struct WordBasis {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WordBasis {
    pub fn new(words: Vec<Word>) -> WordBasis {
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        WordBasis { words, index }
    }

    /// The weight-`k` words of `A^0`, dimension `2^{k−2}` for `k ≥ 2`.
    pub fn a0(k: usize) -> WordBasis {
        WordBasis::new(SubspaceTag::A0.words_of_weight(k))
    }

    pub fn of_subspace(tag: SubspaceTag, k: usize) -> WordBasis {
        WordBasis::new(tag.words_of_weight(k))
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn to_vector(&self, p: &NCPoly) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (w, c) in p.terms() {
            let i = self.position(w).ok_or_else(|| {
                Error::InvalidArgument(format!("word {w} lies outside the coordinate basis"))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn to_poly(&self, v: &[Rational]) -> NCPoly {
        NCPoly::from_terms(
            self.words
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }
}

/// Coordinates of a weight-`k` body of `A^0` in the canonical word basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelVector {
    pub weight: usize,
    pub entries: Vec<Rational>,
}

impl RelVector {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

/// Maps a homogeneous weight-`k` element of `A^0` (or zero) to coordinates.
pub fn to_vector(p: &NCPoly, k: usize) -> Result<RelVector> {
    if !SubspaceTag::A0.contains(p) {
        return Err(Error::NotInSubspace {
            op: "to_vector",
            tag: SubspaceTag::A0,
        });
    }
    if let Some(w) = p.words().find(|w| w.len() != k) {
        return Err(Error::WeightMismatch {
            expected: k,
            found: w.len(),
        });
    }
    Ok(RelVector {
        weight: k,
        entries: WordBasis::a0(k).to_vector(p)?,
    })
}

/// Reduced row echelon form, built incrementally. Rows have a leading `1`
/// at their pivot, zeros at every other pivot column, and are kept sorted by
/// increasing pivot.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> EchelonBasis {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Residue of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match basis");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        if !lead.is_one() {
            for x in r.iter_mut().skip(p) {
                *x /= &lead;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

/// Rank and echelon basis of the span of `vectors` (all of one weight).
pub fn rank(vectors: &[RelVector]) -> Result<(usize, EchelonBasis)> {
    let Some(first) = vectors.first() else {
        return Ok((0, EchelonBasis::new(0)));
    };
    let mut basis = EchelonBasis::new(first.entries.len());
    for v in vectors {
        if v.weight != first.weight {
            return Err(Error::WeightMismatch {
                expected: first.weight,
                found: v.weight,
            });
        }
        basis.insert(&v.entries);
    }
    Ok((basis.rank(), basis))
}

/// Echelon basis of the span of weight-`k` bodies.
pub fn span_of<'a, I>(bodies: I, k: usize) -> Result<EchelonBasis>
where
    I: IntoIterator<Item = &'a NCPoly>,
{
    let mut basis = EchelonBasis::new(WordBasis::a0(k).dim());
    for b in bodies {
        basis.insert(&to_vector(b, k)?.entries);
    }
    Ok(basis)
}

pub fn in_span(p: &NCPoly, k: usize, basis: &EchelonBasis) -> Result<bool> {
    Ok(basis.contains(&to_vector(p, k)?.entries))
}

/// Basis of the kernel of the matrix whose `j`-th column is `columns[j]`.
pub fn kernel(columns: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = columns.len();
    let m = columns.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(i) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, i);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &lead;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &pc) in rows.iter().zip(&pivot_cols) {
                v[pc] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// `d_k` with `Σ d_k t^k = 1/(1 − t² − t³)`, the conjectural dimension of
/// the weight-`k` space of multiple zeta values.
pub fn conjectural_dimension(k: usize) -> u64 {
    let mut d = vec![1u64, 0, 1];
    while d.len() <= k {
        let n = d.len();
        d.push(d[n - 2] + d[n - 3]);
    }
    d[k]
}

/// `2^{k−2} − d_k`, the relation rank predicted by the dimension conjecture.
pub fn expected_relation_rank(k: usize) -> u64 {
    if k < 2 {
        return 0;
    }
    (1u64 << (k - 2)) - conjectural_dimension(k)
}

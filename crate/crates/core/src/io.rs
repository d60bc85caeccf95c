//! Text forms: ζ-index rendering of `A^0` bodies, JSON-lines relation files,
//! and the CSV / TeX two-column tables.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Letter, NCPoly, Rational, SubspaceTag, Word};
use crate::confluence::{Family, RelationRecord, Source};
use crate::error::{Error, Result};

pub fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

pub fn render_word(w: &Word) -> String {
    w.to_string()
}

/// Index `(k1, …, kd)` of a word `e1 e0^{k1−1} ⋯ e1 e0^{kd−1}`.
pub fn word_to_index(w: &Word) -> Result<Vec<u32>> {
    if w.contains(Letter::Z) || w.first().is_some_and(|l| l != Letter::One) {
        return Err(Error::InvalidIndex(format!(
            "{w} is not of the form e1 e0^(k-1) ..."
        )));
    }
    let mut index: Vec<u32> = Vec::new();
    for l in w.letters() {
        match l {
            Letter::One => index.push(1),
            _ => *index.last_mut().expect("word starts with 1") += 1,
        }
    }
    Ok(index)
}

pub fn index_to_word(index: &[u32]) -> Result<Word> {
    if index.contains(&0) {
        return Err(Error::InvalidIndex(format!("{index:?} has a zero entry")));
    }
    Ok(Word::from_letters(index.iter().flat_map(|&k| {
        std::iter::once(Letter::One).chain(std::iter::repeat_n(Letter::Zero, k as usize - 1))
    })))
}

/// Parses `"3,1,2"` or `"(3,1,2)"` into an index.
pub fn parse_index(text: &str) -> Result<Vec<u32>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|k| {
            k.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidIndex(text.to_string()))
        })
        .collect()
}

/// One term `c·ζ(k1, …, kd)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTerm {
    pub coefficient: Rational,
    pub index: Vec<u32>,
}

/// Rewrites an `A^0` polynomial with `L(w) = (−1)^depth ζ(index)`, one term
/// per word in canonical word order.
pub fn to_zeta_terms(p: &NCPoly) -> Result<Vec<ZetaTerm>> {
    if !SubspaceTag::A0.contains(p) {
        return Err(Error::NotInSubspace {
            op: "to_zeta_string",
            tag: SubspaceTag::A0,
        });
    }
    p.terms()
        .map(|(w, c)| {
            let index = word_to_index(w)?;
            let coefficient = if index.len() % 2 == 1 { -c } else { c.clone() };
            Ok(ZetaTerm { coefficient, index })
        })
        .collect()
}

/// Renders e.g. `"-3z(4)+5z(2,2)+13z(1,3)-4z(1,1,2)"`. Terms follow the
/// canonical word order, which at fixed weight is decreasing lexicographic
/// order of the indices.
pub fn to_zeta_string(p: &NCPoly) -> Result<String> {
    let terms = to_zeta_terms(p)?;
    if terms.is_empty() {
        return Ok("0".to_string());
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = &t.coefficient;
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = c.abs();
        if !abs.is_one() {
            if abs.is_integer() {
                write!(out, "{abs}").unwrap();
            } else {
                write!(out, "({abs})").unwrap();
            }
        }
        let idx: Vec<String> = t.index.iter().map(u32::to_string).collect();
        write!(out, "z({})", idx.join(",")).unwrap();
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermLine {
    word: Word,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RecordLine {
    family: Family,
    weight: usize,
    source: Source,
    terms: Vec<TermLine>,
    zeta: String,
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidTerm(format!("bad coefficient {s:?}")))
}

/// One JSON object, no trailing newline.
pub fn record_to_json(r: &RelationRecord) -> String {
    let line = RecordLine {
        family: r.family,
        weight: r.weight,
        source: r.source.clone(),
        terms: r
            .body
            .terms()
            .map(|(w, c)| TermLine {
                word: w.clone(),
                coeff: c.to_string(),
            })
            .collect(),
        zeta: r.zeta_form.clone(),
    };
    serde_json::to_string(&line).expect("records serialize")
}

pub fn record_from_json(text: &str) -> Result<RelationRecord> {
    let line: RecordLine =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut body = NCPoly::zero();
    for t in &line.terms {
        body.add_term(t.word.clone(), parse_rational(&t.coeff)?);
    }
    if !SubspaceTag::A0.contains(&body) {
        return Err(Error::NotInSubspace {
            op: "record_from_json",
            tag: SubspaceTag::A0,
        });
    }
    Ok(RelationRecord {
        family: line.family,
        weight: line.weight,
        source: line.source,
        body,
        zeta_form: line.zeta,
    })
}

pub fn to_json_lines(records: &[RelationRecord]) -> String {
    records.iter().map(|r| record_to_json(r) + "\n").collect()
}

/// Reads a JSON-lines relation file; blank lines are skipped.
pub fn from_json_lines(text: &str) -> Result<Vec<RelationRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(record_from_json)
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `source,relation` rows with the body in polynomial text form.
pub fn to_csv(records: &[RelationRecord]) -> String {
    let mut out = String::from("source,relation\n");
    for r in records {
        writeln!(
            out,
            "{},{}",
            csv_field(&r.source.to_string()),
            csv_field(&r.body.to_string())
        )
        .unwrap();
    }
    out
}

/// `e_1^2e_0` style TeX for a word; the empty word is `1`.
pub fn tex_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let letters = w.to_vec();
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let run = letters[i..].iter().take_while(|&&x| x == l).count();
        write!(out, "e_{}", l.as_char()).unwrap();
        if run > 1 {
            write!(out, "^{{{run}}}").unwrap();
        }
        i += run;
    }
    out
}

pub fn tex_poly(p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.terms().enumerate() {
        if c.is_negative() {
            out.push_str(if i == 0 { "-" } else { " - " });
        } else if i > 0 {
            out.push_str(" + ");
        }
        let abs = c.abs();
        if !abs.is_one() {
            if abs.is_integer() {
                write!(out, "{abs}").unwrap();
            } else {
                write!(out, "\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()).unwrap();
            }
        }
        out.push_str(&tex_word(w));
    }
    out
}

/// A `tabular` with one `source & relation` row per record.
pub fn to_tex(records: &[RelationRecord]) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    for r in records {
        let src = match &r.source {
            Source::Word(w) => tex_word(w),
            Source::Pair(u, v) => format!("({}, {})", tex_word(u), tex_word(v)),
        };
        writeln!(out, "${src}$ & ${}$ \\\\", tex_poly(&r.body)).unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Plain `source: zeta-form` lines.
pub fn to_zeta_lines(records: &[RelationRecord]) -> String {
    records
        .iter()
        .map(|r| format!("{}: {} = 0\n", r.source, r.zeta_form))
        .collect()
}

impl ZetaTerm {
    pub fn is_convergent(&self) -> bool {
        self.index.last().is_none_or(|&k| k >= 2)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

//! Command implementations. Each returns `Ok(true)` when every check it
//! performs passes, `Ok(false)` on a verification failure, and `Err` for
//! invalid input.

use std::collections::BTreeMap;
use std::io::{self, Write};

use confluence_core::checks::{run_suite, Suite, SuiteConfig};
use confluence_core::confluence::{generate_confluence, generate_duality, generate_rds, Mode};
use confluence_core::golden::reference_table;
use confluence_core::io::{to_csv, to_json_lines, to_tex, to_zeta_lines, to_zeta_string};
use confluence_core::linalg::{conjectural_dimension, expected_relation_rank, span_of, WordBasis};
use confluence_core::numeric::{Evaluator, PrecisionConfig};
use confluence_core::{Error, NCPoly, RelationRecord, Result, Source, SubspaceTag, Word};

use crate::{FamilyArg, Format, ModeArg, SuiteArg};

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Shuffle => Mode::Shuffle,
        ModeArg::Stuffle => Mode::Stuffle,
    }
}

fn emit(text: &str) -> Result<()> {
    io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))
}

pub fn gen(weight: usize, m: ModeArg, nonzero: bool, format: Format) -> Result<bool> {
    let mut records = generate_confluence(weight, mode(m))?;
    if nonzero {
        records.retain(|r| !r.body.is_zero());
    }
    let text = match format {
        Format::Json => to_json_lines(&records),
        Format::Csv => to_csv(&records),
        Format::Tex => to_tex(&records),
        Format::Zeta => to_zeta_lines(&records),
    };
    emit(&text)?;
    Ok(true)
}

fn source_word(r: &RelationRecord) -> &Word {
    match &r.source {
        Source::Word(w) => w,
        Source::Pair(..) => unreachable!("confluence records have word sources"),
    }
}

pub fn verify_table() -> Result<bool> {
    let table: BTreeMap<Word, NCPoly> = reference_table().into_iter().collect();
    let mut out = String::new();
    let (mut matched, mut zeros, mut failures) = (0, 0, 0);
    for k in [3, 4] {
        for r in generate_confluence(k, Mode::Shuffle)? {
            let w = source_word(&r);
            match table.get(w) {
                Some(expected) if *expected == r.body => {
                    matched += 1;
                    out.push_str(&format!("ok   {w}: {} = 0\n", r.zeta_form));
                }
                Some(expected) => {
                    failures += 1;
                    out.push_str(&format!("FAIL {w}: got {}, expected {expected}\n", r.body));
                }
                None if r.body.is_zero() => zeros += 1,
                None => {
                    failures += 1;
                    out.push_str(&format!("FAIL {w}: expected 0, got {}\n", r.body));
                }
            }
        }
    }
    out.push_str(&format!(
        "{matched}/{} reference rows reproduced; {zeros} remaining words give 0; {failures} failures\n",
        table.len()
    ));
    emit(&out)?;
    Ok(failures == 0 && matched == table.len())
}

fn family_bodies(weight: usize, family: FamilyArg) -> Result<Vec<NCPoly>> {
    let recs = match family {
        FamilyArg::Cf => generate_confluence(weight, Mode::Shuffle)?,
        FamilyArg::Rds => generate_rds(weight)?,
        FamilyArg::Duality => generate_duality(weight)?,
        FamilyArg::All => {
            let mut all = generate_confluence(weight, Mode::Shuffle)?;
            all.extend(generate_rds(weight)?);
            all.extend(generate_duality(weight)?);
            all
        }
    };
    Ok(recs.into_iter().map(|r| r.body).collect())
}

fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::Cf => "confluence",
        FamilyArg::Rds => "rds",
        FamilyArg::Duality => "duality",
        FamilyArg::All => "all",
    }
}

pub fn rank(weight: usize, family: FamilyArg) -> Result<bool> {
    if weight < 2 {
        return Err(Error::InvalidArgument(format!(
            "weight must be >= 2, got {weight}"
        )));
    }
    let bodies = family_bodies(weight, family)?;
    let basis = span_of(bodies.iter(), weight)?;
    let dim = WordBasis::a0(weight).dim();
    emit(&format!(
        "weight {weight} family {}: {} generators, rank {} in dimension {dim}; \
         conjectural dimension d_{weight} = {}, predicted relation rank {}\n",
        family_name(family),
        bodies.len(),
        basis.rank(),
        conjectural_dimension(weight),
        expected_relation_rank(weight),
    ))?;
    Ok(true)
}

pub fn member(weight: usize, family: FamilyArg) -> Result<bool> {
    let recs = match family {
        FamilyArg::Rds => generate_rds(weight)?,
        FamilyArg::Duality => generate_duality(weight)?,
        _ => {
            return Err(Error::InvalidArgument(
                "member expects --family rds or --family duality".into(),
            ))
        }
    };
    let cf = generate_confluence(weight, Mode::Shuffle)?;
    let basis = span_of(cf.iter().map(|r| &r.body), weight)?;
    let mut out = String::new();
    let mut outside = 0;
    for r in &recs {
        let v = confluence_core::linalg::to_vector(&r.body, weight)?;
        if !basis.contains(&v.entries) {
            outside += 1;
            out.push_str(&format!("outside span: {} ({})\n", r.source, r.body));
        }
    }
    out.push_str(&format!(
        "weight {weight} family {}: {}/{} relations lie in the confluence span (rank {})\n",
        family_name(family),
        recs.len() - outside,
        recs.len(),
        basis.rank()
    ));
    emit(&out)?;
    Ok(outside == 0)
}

pub fn eval(word: &str, z: Option<f64>, digits: u32) -> Result<bool> {
    let w: Word = word.trim().parse()?;
    let cfg = PrecisionConfig::new(digits)?;
    let ev = Evaluator::new(cfg);
    let value = if SubspaceTag::A0.contains_word(&w) {
        ev.mzv(&w)?
    } else {
        let z = z.ok_or_else(|| {
            Error::InvalidArgument(format!("word {w} contains z; pass --z with a value > 1"))
        })?;
        ev.hyperlog(&w, &cfg.real(z))?
    };
    let mut out = format!("L({w}) = {}\n", value.to_decimal(digits as usize));
    if SubspaceTag::A0.contains_word(&w) && !w.is_empty() {
        out.push_str(&format!(
            "       = {}\n",
            to_zeta_string(&NCPoly::from(&w))?
        ));
    }
    emit(&out)?;
    Ok(true)
}

pub fn check(suite: SuiteArg, max_weight: usize, samples: usize, seed: u64) -> Result<bool> {
    let suite = match suite {
        SuiteArg::Algebra => Suite::Algebra,
        SuiteArg::Regularization => Suite::Regularization,
        SuiteArg::Phi => Suite::Phi,
        SuiteArg::Numeric => Suite::Numeric,
    };
    let cfg = SuiteConfig {
        max_weight,
        samples,
        seed,
    };
    let outcomes = run_suite(suite, &cfg);
    let mut out = String::new();
    for o in &outcomes {
        out.push_str(&format!("{o}\n"));
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    out.push_str(&format!(
        "{} checks, {failed} failed (seed {seed})\n",
        outcomes.len()
    ));
    emit(&out)?;
    Ok(failed == 0)
}

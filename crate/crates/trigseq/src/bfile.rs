//! OEIS b-file parsing and sequence cross-checking.
//!
//! A b-file is plain ASCII, one `index value` pair per line, `#` starting
//! a comment line, blank lines allowed, indices strictly increasing. The
//! fixtures shipped with this crate are read from disk; nothing is ever
//! fetched from the network.

use std::io::BufRead;
use std::str::FromStr;

use num_traits::One;

use crate::exact::{self, Integer, Rational};
use crate::report::{CheckItem, Status, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum BfileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: index {index} does not increase strictly")]
    NonMonotonic { line: usize, index: i64 },
    #[error("empty table: nothing to cross-check")]
    EmptyTable,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An exact integer sequence slice keyed by OEIS-style index.
/// Invariant: indices strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: String,
    pub entries: Vec<(i64, Integer)>,
}

impl SequenceTable {
    /// First index of the table (the b-file's starting offset).
    pub fn offset(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }
}

/// Parse a b-file stream. Malformed lines and non-increasing indices are
/// reported with their line number.
pub fn parse_bfile(reader: impl BufRead, name: &str) -> Result<SequenceTable, BfileError> {
    let mut entries: Vec<(i64, Integer)> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let idx_tok = parts.next().ok_or_else(|| BfileError::Parse {
            line: lineno,
            msg: "missing index".into(),
        })?;
        let val_tok = parts.next().ok_or_else(|| BfileError::Parse {
            line: lineno,
            msg: "missing value".into(),
        })?;
        if parts.next().is_some() {
            return Err(BfileError::Parse {
                line: lineno,
                msg: "more than two fields".into(),
            });
        }
        let index = i64::from_str(idx_tok).map_err(|e| BfileError::Parse {
            line: lineno,
            msg: format!("bad index {idx_tok:?}: {e}"),
        })?;
        let value = Integer::from_str(val_tok).map_err(|e| BfileError::Parse {
            line: lineno,
            msg: format!("bad value {val_tok:?}: {e}"),
        })?;
        if let Some((last, _)) = entries.last() {
            if index <= *last {
                return Err(BfileError::NonMonotonic {
                    line: lineno,
                    index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(SequenceTable {
        name: name.to_string(),
        entries,
    })
}

/// The exact generators a table can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// S_n (A176898; 1/2 at n = 0 by convention, so integral tables start at 1)
    S,
    /// T_n (defined for n ≥ 1)
    T,
    /// C(2n,n) (A000984)
    CentralBinomial,
    /// C(3n,n) (A005809)
    ThreeNChooseN,
    /// C(6n,3n) (A066802)
    SixNChooseThreeN,
}

impl Generator {
    /// Infer the generator from an OEIS id appearing in a name like
    /// "A000984" or "b000984.txt".
    pub fn from_name(name: &str) -> Option<Generator> {
        let lower = name.to_ascii_lowercase();
        for (tag, gen) in [
            ("176898", Generator::S),
            ("000984", Generator::CentralBinomial),
            ("005809", Generator::ThreeNChooseN),
            ("066802", Generator::SixNChooseThreeN),
        ] {
            if lower.contains(tag) {
                return Some(gen);
            }
        }
        None
    }

    pub fn parse(token: &str) -> Option<Generator> {
        match token {
            "s" | "S" => Some(Generator::S),
            "t" | "T" => Some(Generator::T),
            "central-binomial" => Some(Generator::CentralBinomial),
            "c3n" => Some(Generator::ThreeNChooseN),
            "c6n3n" => Some(Generator::SixNChooseThreeN),
            _ => None,
        }
    }

    /// Exact value at index n, as a rational (S_0 = 1/2 is not integral).
    /// None where the sequence is undefined.
    pub fn value(&self, n: i64) -> Option<Rational> {
        if n < 0 {
            return None;
        }
        let n = n as u64;
        match self {
            Generator::S => Some(exact::s_binomial_def(n)),
            Generator::T => {
                if n >= 1 {
                    Some(Rational::from(exact::t_closed_form(n).ok()?))
                } else {
                    None
                }
            }
            Generator::CentralBinomial => Some(Rational::from(exact::binomial(2 * n, n))),
            Generator::ThreeNChooseN => Some(Rational::from(exact::binomial(3 * n, n))),
            Generator::SixNChooseThreeN => Some(Rational::from(exact::binomial(6 * n, 3 * n))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Generator::S => "S",
            Generator::T => "T",
            Generator::CentralBinomial => "central-binomial",
            Generator::ThreeNChooseN => "c3n",
            Generator::SixNChooseThreeN => "c6n3n",
        }
    }
}

/// Compare every table row against the exact generator value. Mismatches
/// carry both values and are never dropped; the well-known published-list
/// transcription error for S at n = 3 gets an explanatory note.
pub fn crosscheck(table: &SequenceTable, gen: Generator) -> Result<VerificationReport, BfileError> {
    if table.entries.is_empty() {
        return Err(BfileError::EmptyTable);
    }
    let claim = format!("oeis-{}", table.name);
    let items = table
        .entries
        .iter()
        .map(|(n, file_value)| {
            let params = format!("n={n};gen={}", gen.label());
            match gen.value(*n) {
                None => CheckItem::new(
                    &claim,
                    params,
                    Status::Mismatch,
                    format!("generator {} undefined at n={n}", gen.label()),
                ),
                Some(exact_value) => {
                    let file_rat = Rational::from(file_value.clone());
                    if file_rat == exact_value {
                        CheckItem::new(&claim, params, Status::Pass, format!("value={file_value}"))
                    } else {
                        let mut details = format!(
                            "file value {file_value} != exact value {}",
                            render_rational(&exact_value)
                        );
                        if gen == Generator::S && *n == 3 && *file_value == Integer::from(14568) {
                            details.push_str(
                                "; note: 14568 matches the published value list; \
                                 the defining formula and the mod-27 congruence \
                                 both give 14586",
                            );
                        }
                        CheckItem::new(&claim, params, Status::Mismatch, details)
                    }
                }
            }
        })
        .collect();
    Ok(VerificationReport::new(
        format!("oeis:{}", table.name),
        items,
    ))
}

/// num/den rendering; plain integer when the denominator is 1.
pub fn render_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

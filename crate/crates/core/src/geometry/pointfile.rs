//! The point-file format consumed by the CLI.
//!
//! UTF-8 text; an optional first directive `# field q` (q prime) selects the
//! prime field, otherwise coordinates are rationals; then one point per line
//! as `x y z m` with integer or `a/b` coordinates and a multiplicity m >= 1.
//! Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::exactalg::numtheory::is_prime;
use crate::exactalg::{ExactScalar, Field};
use crate::geometry::{FatPointScheme, ProjPoint};

/// Raw parse result, before duplicate-point validation (that rejection is a
/// geometry error, not a parse error, and callers may want to tell these
/// apart).
#[derive(Debug, Clone)]
pub struct ParsedPointFile {
    pub field: Field,
    pub points: Vec<ProjPoint>,
    pub mults: Vec<u32>,
}

impl ParsedPointFile {
    pub fn into_scheme(self) -> Result<(FatPointScheme, Field)> {
        Ok((FatPointScheme::new(self.points, self.mults)?, self.field))
    }
}

/// Parse the format, reporting 1-based line numbers on syntax errors.
pub fn parse(text: &str) -> Result<ParsedPointFile> {
    let mut field: Option<Field> = None;
    let mut points = Vec::new();
    let mut mults = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut words = rest.split_whitespace();
            if words.next() == Some("field") {
                let q_text = words.next().ok_or(Error::Parse {
                    line: line_no,
                    msg: "`# field` directive without a prime".into(),
                })?;
                let q: u64 = q_text.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid field size `{q_text}`"),
                })?;
                if !is_prime(q) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("{q} is not prime"),
                    });
                }
                if !points.is_empty() || field.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "`# field` must appear once, before any point".into(),
                    });
                }
                field = Some(Field::Prime(q));
            }
            continue;
        }
        let fld = field.unwrap_or(Field::Rationals);
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 4 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `x y z m`, found {} fields", tokens.len()),
            });
        }
        let mut coords = Vec::with_capacity(3);
        for tok in &tokens[..3] {
            let c = ExactScalar::parse(tok, fld).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
            coords.push(c);
        }
        let m: u32 = tokens[3].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("invalid multiplicity `{}`", tokens[3]),
        })?;
        if m == 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: "multiplicity must be >= 1".into(),
            });
        }
        let point = ProjPoint::new([coords[0].clone(), coords[1].clone(), coords[2].clone()])
            .map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
        points.push(point);
        mults.push(m);
    }
    Ok(ParsedPointFile {
        field: field.unwrap_or(Field::Rationals),
        points,
        mults,
    })
}

/// Serialize a scheme in the same format (normalized coordinates).
pub fn serialize(z: &FatPointScheme, field: Field) -> String {
    let mut out = String::new();
    if let Field::Prime(q) = field {
        out.push_str(&format!("# field {q}\n"));
    }
    for (p, m) in z.points().iter().zip(z.mults()) {
        let [x, y, zc] = p.coords();
        out.push_str(&format!("{x} {y} {zc} {m}\n"));
    }
    out
}

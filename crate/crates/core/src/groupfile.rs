//! Group files: TOML with a conductor, a dimension and generator matrices
//! written as cyclotomic expressions.
//!
//! ```toml
//! conductor = 4
//! dimension = 2
//!
//! [[generator]]
//! rows = [["z", "0"], ["0", "z^-1"]]
//! ```

use std::fmt::Write;
use std::ops::Range;
use std::path::Path;

use serde::Deserialize;
use toml::Spanned;

use crate::cyclotomic::parse_cyc;
use crate::error::{Error, Result};
use crate::matgroup::{CycMatrix, FiniteMatrixGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub conductor: u32,
    pub dimension: usize,
    pub description: Option<String>,
    pub generators: Vec<CycMatrix>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    conductor: Spanned<i64>,
    dimension: Spanned<i64>,
    description: Option<String>,
    #[serde(default)]
    generator: Vec<Spanned<RawGenerator>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    conductor: Option<Spanned<i64>>,
    rows: Spanned<Vec<Spanned<Vec<Spanned<String>>>>>,
}

/// 1-based line and column of a byte offset.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_error(text: &str, span: Range<usize>, message: impl Into<String>) -> Error {
    let (line, column) = position(text, span.start);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let raw: RawFile = toml::from_str(text).map_err(|e| {
        let span = e.span().unwrap_or(0..0);
        parse_error(text, span, e.message().to_string())
    })?;

    let conductor = u32::try_from(*raw.conductor.get_ref())
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| {
            parse_error(
                text,
                raw.conductor.span(),
                "conductor must be a positive integer",
            )
        })?;
    let dimension = usize::try_from(*raw.dimension.get_ref())
        .ok()
        .filter(|&m| m >= 1)
        .ok_or_else(|| {
            parse_error(
                text,
                raw.dimension.span(),
                "dimension must be a positive integer",
            )
        })?;
    if raw.generator.is_empty() {
        return Err(Error::NoGenerators);
    }

    let mut generators = Vec::with_capacity(raw.generator.len());
    for gen in &raw.generator {
        let gen = gen.get_ref();
        if let Some(c) = &gen.conductor {
            if *c.get_ref() != conductor as i64 {
                return Err(Error::ConductorMismatch {
                    expected: conductor,
                    found: u32::try_from(*c.get_ref()).unwrap_or(0),
                });
            }
        }
        let rows = gen.rows.get_ref();
        if rows.len() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(dimension);
        for row in rows {
            if row.get_ref().len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: row.get_ref().len(),
                });
            }
            let parsed = row
                .get_ref()
                .iter()
                .map(|cell| {
                    parse_cyc(cell.get_ref(), conductor).map_err(|e| match e {
                        // expression columns are relative to the string body
                        Error::Parse {
                            column, message, ..
                        } => {
                            let (line, start) = position(text, cell.span().start + 1);
                            Error::Parse {
                                line,
                                column: start + column - 1,
                                message,
                            }
                        }
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(parsed);
        }
        generators.push(CycMatrix::from_rows(entries)?.lift(conductor));
    }
    Ok(GroupFile {
        conductor,
        dimension,
        description: raw.description,
        generators,
    })
}

pub fn read_group_file(path: &Path) -> Result<GroupFile> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group_file(&text)
}

impl GroupFile {
    /// The generating set of an enumerated group, at its conductor.
    pub fn from_group(g: &FiniteMatrixGroup, description: Option<String>) -> GroupFile {
        GroupFile {
            conductor: g.conductor(),
            dimension: g.dim(),
            description,
            generators: g.generator_matrices(),
        }
    }

    pub fn to_toml(&self) -> String {
        let mut out = String::new();
        if let Some(d) = &self.description {
            writeln!(out, "description = {}", quote(d)).unwrap();
        }
        writeln!(out, "conductor = {}", self.conductor).unwrap();
        writeln!(out, "dimension = {}", self.dimension).unwrap();
        for g in &self.generators {
            let g = g.lift(self.conductor);
            out.push_str("\n[[generator]]\nrows = [\n");
            for row in g.rows() {
                let cells: Vec<String> = row.iter().map(|e| quote(&e.to_string())).collect();
                writeln!(out, "    [{}],", cells.join(", ")).unwrap();
            }
            out.push_str("]\n");
        }
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycElem;
    use crate::matgroup::DEFAULT_MAX_ORDER;

    const Z4: &str = r#"
conductor = 4
dimension = 2

[[generator]]
rows = [["z", "0"], ["0", "z^-1"]]
"#;

    #[test]
    fn cyclic_four_in_sl2() {
        let f = parse_group_file(Z4).unwrap();
        assert_eq!((f.conductor, f.dimension), (4, 2));
        let z = CycElem::zeta_pow(4, 1);
        assert_eq!(
            f.generators,
            vec![CycMatrix::diagonal(&[z.clone(), z.conj()])]
        );
        let g = FiniteMatrixGroup::enumerate(&f.generators, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_special_linear());
    }

    #[test]
    fn expression_errors_point_into_the_file() {
        let text = "conductor = 4\ndimension = 1\n[[generator]]\nrows = [[\"1 + z^^2\"]]\n";
        match parse_group_file(text) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 4);
                // `rows = [["` is 10 characters; the bad `^` is column 7 of the expression
                assert_eq!(column, 10 + 7);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn toml_syntax_errors_have_positions() {
        let text = "conductor = 4\ndimension = \n";
        assert!(matches!(
            parse_group_file(text),
            Err(Error::Parse { line: 2, .. })
        ));
        let text = "conductor = 4\ndimension = 1\nextra = 1\n[[generator]]\nrows = [[\"1\"]]\n";
        assert!(matches!(
            parse_group_file(text),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn shape_errors() {
        let text = "conductor = 1\ndimension = 2\n[[generator]]\nrows = [[\"1\", \"0\"]]\n";
        assert_eq!(
            parse_group_file(text),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        let text =
            "conductor = 1\ndimension = 2\n[[generator]]\nrows = [[\"1\", \"0\"], [\"0\"]]\n";
        assert_eq!(
            parse_group_file(text),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        let text = "conductor = 3\ndimension = 1\n[[generator]]\nconductor = 6\nrows = [[\"z\"]]\n";
        assert_eq!(
            parse_group_file(text),
            Err(Error::ConductorMismatch {
                expected: 3,
                found: 6
            })
        );
        let text = "conductor = 0\ndimension = 1\n[[generator]]\nrows = [[\"1\"]]\n";
        assert!(matches!(
            parse_group_file(text),
            Err(Error::Parse {
                line: 1,
                column: 13,
                ..
            })
        ));
        assert_eq!(
            parse_group_file("conductor = 1\ndimension = 1\n"),
            Err(Error::NoGenerators)
        );
        assert_eq!(
            parse_group_file("conductor = 2\ndimension = 1\n[[generator]]\nrows = [[\"1/0\"]]\n"),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn write_then_read() {
        let text = "description = \"a \\\"test\\\"\"\nconductor = 12\ndimension = 2\n[[generator]]\nrows = [[\"1/2 + z^13\", \"0\"], [\"0\", \"-z^5\"]]\n";
        let f = parse_group_file(text).unwrap();
        let again = parse_group_file(&f.to_toml()).unwrap();
        assert_eq!(again, f);
        assert_eq!(again.description.as_deref(), Some("a \"test\""));
    }
}

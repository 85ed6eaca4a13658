//! Text format for labeled GF(2) matrices.
//!
//! ```text
//! labels: 1 2 3 4 5 6 7 g1 g2
//! 4 9
//! 1 0 0 0 1 1 1 1 0
//! 0 1 0 1 0 1 1 0 1
//! 0 0 1 1 1 0 1 0 0
//! 0 0 0 0 0 0 0 1 1
//! ```
//!
//! The label line is optional (labels default to `1..n`) and is omitted on
//! output when the labels are the defaults. Blank lines are ignored.

use std::fmt;
use std::str::FromStr;

use gammatroid_core::{BinaryMatroid, Gf2Matrix, Label};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: expected a \"rows cols\" header")]
    Empty,
    #[error("line {line}: malformed header {found:?}, expected \"rows cols\"")]
    MalformedHeader { line: usize, found: String },
    #[error("line {line}: non-binary entry {entry:?}")]
    NonBinary { line: usize, entry: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: expected {expected} rows, found {found}")]
    RowCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: {found} labels for {expected} columns")]
    LabelCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: duplicate label {label:?}")]
    DuplicateLabel { line: usize, label: String },
}

/// A matrix with one label per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub matrix: Gf2Matrix,
    pub labels: Vec<Label>,
}

impl MatrixFile {
    /// Labels `1..n` when `labels` is `None`.
    pub fn new(matrix: Gf2Matrix, labels: Option<Vec<Label>>) -> Self {
        let labels = labels.unwrap_or_else(|| Label::numbered(matrix.n_cols()));
        assert_eq!(labels.len(), matrix.n_cols(), "one label per column");
        MatrixFile { matrix, labels }
    }

    /// The standard-form representation of `m`, in its column order.
    pub fn from_matroid(m: &BinaryMatroid) -> Self {
        MatrixFile {
            matrix: m.representation().clone(),
            labels: m.labels().to_vec(),
        }
    }

    /// Builds the matroid, rejecting loops and coloops.
    pub fn to_matroid(&self) -> gammatroid_core::Result<BinaryMatroid> {
        BinaryMatroid::new(&self.matrix, self.labels.clone())
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (mut line_no, mut line) = lines.next().ok_or(ParseError::Empty)?;
        let mut labels = None;
        if let Some(rest) = line.strip_prefix("labels:") {
            labels = Some((
                line_no,
                rest.split_whitespace().map(Label::from).collect::<Vec<_>>(),
            ));
            (line_no, line) = lines.next().ok_or(ParseError::Empty)?;
        }

        let header: Vec<&str> = line.split_whitespace().collect();
        let dims: Option<Vec<usize>> = header.iter().map(|t| t.parse().ok()).collect();
        let (n_rows, n_cols) = match dims.as_deref() {
            Some(&[r, c]) => (r, c),
            _ => {
                return Err(ParseError::MalformedHeader {
                    line: line_no,
                    found: line.to_string(),
                })
            }
        };

        let mut rows = Vec::with_capacity(n_rows);
        let mut last_line = line_no;
        for (no, l) in lines {
            last_line = no;
            if rows.len() == n_rows {
                return Err(ParseError::RowCount {
                    line: no,
                    expected: n_rows,
                    found: n_rows + 1,
                });
            }
            let mut row = Vec::with_capacity(n_cols);
            for entry in l.split_whitespace() {
                match entry {
                    "0" => row.push(0u8),
                    "1" => row.push(1u8),
                    _ => {
                        return Err(ParseError::NonBinary {
                            line: no,
                            entry: entry.to_string(),
                        })
                    }
                }
            }
            if row.len() != n_cols {
                return Err(ParseError::RowLength {
                    line: no,
                    expected: n_cols,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        // rows of a matrix with no columns are blank lines
        if n_cols == 0 && rows.is_empty() {
            rows.resize(n_rows, Vec::new());
        }
        if rows.len() != n_rows {
            return Err(ParseError::RowCount {
                line: last_line,
                expected: n_rows,
                found: rows.len(),
            });
        }

        let labels = match labels {
            None => Label::numbered(n_cols),
            Some((line, labels)) => {
                if labels.len() != n_cols {
                    return Err(ParseError::LabelCount {
                        line,
                        expected: n_cols,
                        found: labels.len(),
                    });
                }
                let mut seen = std::collections::BTreeSet::new();
                for l in &labels {
                    if !seen.insert(l) {
                        return Err(ParseError::DuplicateLabel {
                            line,
                            label: l.to_string(),
                        });
                    }
                }
                labels
            }
        };
        let matrix = Gf2Matrix::from_rows(n_cols, &rows).expect("entries checked above");
        Ok(MatrixFile { matrix, labels })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl FromStr for MatrixFile {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        MatrixFile::parse(s)
    }
}

impl fmt::Display for MatrixFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels != Label::numbered(self.labels.len()) {
            f.write_str("labels:")?;
            for l in &self.labels {
                write!(f, " {l}")?;
            }
            f.write_str("\n")?;
        }
        writeln!(f, "{} {}", self.matrix.n_rows(), self.matrix.n_cols())?;
        for i in 0..self.matrix.n_rows() {
            let row: Vec<&str> = (0..self.matrix.n_cols())
                .map(|j| if self.matrix.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const FANO: &str = "3 7\n1 0 0 0 1 1 1\n0 1 0 1 0 1 1\n0 0 1 1 1 0 1\n";

    #[test]
    fn fano_file_is_the_fixture() {
        let f = MatrixFile::parse(FANO).unwrap();
        assert_eq!(f.labels, Label::numbered(7));
        assert!(f
            .to_matroid()
            .unwrap()
            .equals(&gammatroid_core::catalog::fano()));
        assert_eq!(f.render(), FANO);
    }

    #[test]
    fn label_line() {
        let text = "labels: a b c\n2 3\n1 0 1\n0 1 1\n";
        let f = MatrixFile::parse(text).unwrap();
        assert_eq!(f.labels, ["a", "b", "c"].map(Label::from));
        assert_eq!(f.render(), text);
    }

    #[test]
    fn blank_lines_and_spacing() {
        let f = MatrixFile::parse("\n 2 2 \n\n1  0\n0 1\n\n").unwrap();
        assert_eq!(f.render(), "2 2\n1 0\n0 1\n");
    }

    #[test]
    fn empty_matrices() {
        let f = MatrixFile::parse("0 3\n").unwrap();
        assert_eq!((f.matrix.n_rows(), f.matrix.n_cols()), (0, 3));
        assert_eq!(f.render(), "0 3\n");
        assert_eq!(MatrixFile::parse("0 0").unwrap().render(), "0 0\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(MatrixFile::parse(""), Err(ParseError::Empty));
        assert_eq!(
            MatrixFile::parse("3\n1 0 0\n"),
            Err(ParseError::MalformedHeader {
                line: 1,
                found: "3".into()
            })
        );
        assert_eq!(
            MatrixFile::parse("2 3\n1 0 1\n0 2 1\n"),
            Err(ParseError::NonBinary {
                line: 3,
                entry: "2".into()
            })
        );
        assert_eq!(
            MatrixFile::parse("2 3\n1 0 1\n0 1\n"),
            Err(ParseError::RowLength {
                line: 3,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            MatrixFile::parse("2 3\n1 0 1\n"),
            Err(ParseError::RowCount {
                line: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            MatrixFile::parse("1 2\n1 0\n0 1\n"),
            Err(ParseError::RowCount {
                line: 3,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            MatrixFile::parse("labels: a b\n1 3\n1 0 1\n"),
            Err(ParseError::LabelCount {
                line: 1,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            MatrixFile::parse("labels: a b a\n1 3\n1 0 1\n"),
            Err(ParseError::DuplicateLabel {
                line: 1,
                label: "a".into()
            })
        );
        assert!(MatrixFile::parse("labels: a\n").is_err());
    }

    #[test]
    fn messages_name_the_line() {
        let e = MatrixFile::parse("1 2\n1 x\n").unwrap_err();
        assert_eq!(e.to_string(), "line 2: non-binary entry \"x\"");
    }

    fn arb_file() -> impl Strategy<Value = MatrixFile> {
        (0usize..5, 0usize..8, any::<bool>()).prop_flat_map(|(r, c, named)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r).prop_map(
                move |rows| {
                    let m = Gf2Matrix::from_rows(c, &rows).unwrap();
                    let labels =
                        named.then(|| (0..c).map(|j| Label::from(format!("e{j}"))).collect());
                    MatrixFile::new(m, labels)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_render(f in arb_file()) {
            let text = f.render();
            let back = MatrixFile::parse(&text).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(back.render(), text);
        }
    }
}

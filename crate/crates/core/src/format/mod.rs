//! Plain-text file formats. Blank lines and `#` comments are ignored
//! everywhere; positions in errors are 1-based physical lines and columns.

mod construction;
mod solution;

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteSemigroup, MAX_ORDER};
use crate::pentagon::{PentagonError, ThetaTable};

pub use construction::{parse_construction, write_construction, ConstructionSpec};
pub use solution::{parse_solution, write_solution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("expected {expected}, found `{found}`")]
    Unexpected { expected: &'static str, found: String },
    #[error("`{0}` is not a non-negative integer")]
    NotANumber(String),
    #[error("order {0} is outside 1..={MAX_ORDER}")]
    BadOrder(usize),
    #[error("row has {found} entries, expected {expected}")]
    Ragged { found: usize, expected: usize },
    #[error("{cell} = {value} is outside 0..{n}")]
    OutOfRange { cell: String, value: usize, n: usize },
    #[error("{0} is given twice")]
    Duplicate(String),
    #[error("{0} is missing")]
    Missing(String),
    #[error(transparent)]
    Algebra(AlgebraError),
    #[error(transparent)]
    Pentagon(PentagonError),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.number, column, kind }
    }

    fn at(&self, i: usize, kind: ParseErrorKind) -> ParseError {
        self.error(self.tokens[i].column, kind)
    }

    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.column + t.text.chars().count())
    }

    fn word(&self, i: usize) -> &'a str {
        self.tokens[i].text
    }

    fn number(&self, i: usize) -> Result<usize, ParseError> {
        let text = self.tokens[i].text;
        text.parse().map_err(|_| self.at(i, ParseErrorKind::NotANumber(text.to_string())))
    }

    /// A number below `n`; `cell` names the position in the error.
    fn element(&self, i: usize, n: usize, cell: impl FnOnce() -> String) -> Result<usize, ParseError> {
        let value = self.number(i)?;
        if value >= n {
            return Err(self.at(i, ParseErrorKind::OutOfRange { cell: cell(), value, n }));
        }
        Ok(value)
    }

    fn expect_len(&self, len: usize, expected: &'static str) -> Result<(), ParseError> {
        match self.tokens.get(len) {
            Some(t) => Err(self.error(t.column, ParseErrorKind::Unexpected { expected, found: t.text.to_string() })),
            None if self.tokens.len() < len => Err(self.error(self.end_column(), ParseErrorKind::UnexpectedEnd(expected))),
            None => Ok(()),
        }
    }

    fn expect_keyword(&self, keyword: &'static str) -> Result<(), ParseError> {
        if self.word(0) != keyword {
            return Err(self.at(0, ParseErrorKind::Unexpected { expected: keyword, found: self.word(0).to_string() }));
        }
        Ok(())
    }

    /// Exactly `n` elements of `0..n`.
    fn row(&self, n: usize, cell: impl Fn(usize) -> String) -> Result<Vec<usize>, ParseError> {
        if self.tokens.len() != n {
            let column = self.tokens.get(n).map_or_else(|| self.end_column(), |t| t.column);
            return Err(self.error(column, ParseErrorKind::Ragged { found: self.tokens.len(), expected: n }));
        }
        (0..n).map(|i| self.element(i, n, || cell(i))).collect()
    }
}

/// Significant lines of a text, consumed front to back.
pub(crate) struct Reader<'a> {
    lines: Vec<Line<'a>>,
    next: usize,
    end_line: usize,
}

impl<'a> Reader<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut count = 0;
        for (i, raw) in text.lines().enumerate() {
            count = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start: Option<(usize, usize)> = None;
            for (column, (byte, ch)) in body.char_indices().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some((byte, column + 1)),
                    (true, Some((b, c))) => {
                        tokens.push(Token { text: &body[b..byte], column: c });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((b, c)) = start {
                tokens.push(Token { text: &body[b..], column: c });
            }
            if !tokens.is_empty() {
                lines.push(Line { number: i + 1, tokens });
            }
        }
        Reader { lines, next: 0, end_line: count + 1 }
    }

    pub(crate) fn next_line(&mut self, expected: &'static str) -> Result<Line<'a>, ParseError> {
        let line = self.lines.get(self.next).cloned().ok_or(ParseError {
            line: self.end_line,
            column: 1,
            kind: ParseErrorKind::UnexpectedEnd(expected),
        })?;
        self.next += 1;
        Ok(line)
    }

    pub(crate) fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.next)
    }

    pub(crate) fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some(line) => Err(line.at(0, ParseErrorKind::Unexpected { expected: "end of input", found: line.word(0).to_string() })),
            None => Ok(()),
        }
    }

    fn order(&mut self, line: &Line<'a>, i: usize) -> Result<usize, ParseError> {
        let n = line.number(i)?;
        if n == 0 || n > MAX_ORDER {
            return Err(line.at(i, ParseErrorKind::BadOrder(n)));
        }
        Ok(n)
    }

    /// `n` rows with the line number of each.
    fn table(&mut self, n: usize, what: &'static str, cell: impl Fn(usize, usize) -> String) -> Result<Vec<(usize, Vec<usize>)>, ParseError> {
        (0..n)
            .map(|x| {
                let line = self.next_line(what)?;
                Ok((line.number, line.row(n, |y| cell(x, y))?))
            })
            .collect()
    }
}

fn product_cell(x: usize, y: usize) -> String {
    format!("{x}·{y}")
}

fn theta_cell(x: usize, y: usize) -> String {
    format!("θ_{x}({y})")
}

/// Builds the semigroup, placing associativity failures on the row of the
/// first bad triple and identity failures on `identity_at`.
fn semigroup_from_rows(
    rows: Vec<(usize, Vec<usize>)>,
    identity: Option<usize>,
    identity_at: (usize, usize),
) -> Result<FiniteSemigroup, ParseError> {
    let lines: Vec<usize> = rows.iter().map(|r| r.0).collect();
    FiniteSemigroup::new(rows.into_iter().map(|r| r.1).collect(), identity).map_err(|e| {
        let (line, column) = match e {
            AlgebraError::NotAssociative { x, .. } => (lines[x], 1),
            _ => identity_at,
        };
        ParseError { line, column, kind: ParseErrorKind::Algebra(e) }
    })
}

/// Reads `n [identity]` followed by `n` rows of the Cayley table.
pub fn parse_cayley(text: &str) -> Result<FiniteSemigroup, ParseError> {
    let mut r = Reader::new(text);
    let header = r.next_line("header `n [identity]`")?;
    let n = r.order(&header, 0)?;
    let identity = match header.tokens.len() {
        1 => None,
        _ => {
            header.expect_len(2, "end of line")?;
            Some(header.element(1, n, || "identity".to_string())?)
        }
    };
    let identity_at = (header.number, header.tokens.get(1).map_or(1, |t| t.column));
    let rows = r.table(n, "a table row", product_cell)?;
    r.finish()?;
    semigroup_from_rows(rows, identity, identity_at)
}

pub fn write_cayley(s: &FiniteSemigroup) -> String {
    let mut out = match s.identity() {
        Some(e) => format!("{} {e}\n", s.order()),
        None => format!("{}\n", s.order()),
    };
    write_rows(&mut out, s.rows());
    out
}

/// Reads `n` followed by `n` rows with `θ_x(y)` in row `x`, column `y`.
pub fn parse_theta(text: &str) -> Result<ThetaTable, ParseError> {
    let mut r = Reader::new(text);
    let header = r.next_line("header `n`")?;
    let n = r.order(&header, 0)?;
    header.expect_len(1, "end of line")?;
    let rows = r.table(n, "a θ row", theta_cell)?;
    r.finish()?;
    Ok(ThetaTable::new(rows.into_iter().map(|r| r.1).collect()).expect("rows were range-checked"))
}

pub fn write_theta(t: &ThetaTable) -> String {
    let mut out = format!("{}\n", t.order());
    write_rows(&mut out, t.rows());
    out
}

fn write_rows(out: &mut String, rows: Vec<Vec<usize>>) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named;

    #[test]
    fn cayley_round_trip() {
        for s in [named::monoid_with_unit_b(), named::null_semigroup(3), named::cyclic_group(4)] {
            let text = write_cayley(&s);
            assert_eq!(parse_cayley(&text).unwrap(), s);
        }
        assert_eq!(write_cayley(&named::monoid_with_unit_b()), "3 0\n0 1 2\n1 1 1\n2 1 0\n");
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let s = parse_cayley("# null semigroup\n\n2   # order\n0 0\n0 0 # last row\n").unwrap();
        assert_eq!(s, named::null_semigroup(2));
    }

    #[test]
    fn ragged_row_names_line_and_column() {
        let err = parse_cayley("2\n0 0\n0 0 0\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 5));
        assert_eq!(err.kind, ParseErrorKind::Ragged { found: 3, expected: 2 });
        let short = parse_cayley("2\n0\n0 0\n").unwrap_err();
        assert_eq!((short.line, short.column), (2, 2));
    }

    #[test]
    fn out_of_range_entry_names_the_cell() {
        let err = parse_cayley("2\n0 0\n0 7\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        assert_eq!(err.to_string(), "line 3, column 3: 1·1 = 7 is outside 0..2");
        let err = parse_theta("2\n0 1\n5 1\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3, column 1: θ_1(0) = 5 is outside 0..2");
    }

    #[test]
    fn semantic_errors_are_located() {
        let err = parse_cayley("2\n1 0\n0 0\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Algebra(AlgebraError::NotAssociative { .. })), "{err}");
        let err = parse_cayley("2 1\n0 0\n0 0\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert_eq!(err.kind, ParseErrorKind::Algebra(AlgebraError::NotIdentity(1)));
    }

    #[test]
    fn truncated_and_trailing_input() {
        let err = parse_cayley("2\n0 0\n").unwrap_err();
        assert_eq!((err.line, err.kind), (3, ParseErrorKind::UnexpectedEnd("a table row")));
        let err = parse_cayley("1\n0\n0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(parse_cayley("x\n").unwrap_err().kind, ParseErrorKind::NotANumber(_)));
        assert_eq!(parse_cayley("0\n").unwrap_err().kind, ParseErrorKind::BadOrder(0));
        assert_eq!(parse_cayley("").unwrap_err().kind, ParseErrorKind::UnexpectedEnd("header `n [identity]`"));
    }

    #[test]
    fn columns_count_characters() {
        let err = parse_theta("2\nθ 0\n0 0\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 1));
        let err = parse_theta("2\n0 0\n0  λ\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 4));
    }
}

//! Text forms of a polyomino: the `polyomino v1` cell list, ASCII art, SVG.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Cell, GridError, Polyomino};

const HEADER: &str = "polyomino v1";
/// SVG user units per lattice cell.
const UNIT: i64 = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl Polyomino {
    /// `#` for tiles, `.` for empty cells, top row first, rows joined by LF
    /// with no trailing newline.
    pub fn render_ascii(&self) -> String {
        let (w, h) = (self.width() as usize, self.height() as usize);
        let mut grid = vec![vec![b'.'; w]; h];
        for c in self.cells() {
            grid[h - 1 - c.y as usize][c.x as usize] = b'#';
        }
        let rows: Vec<String> = grid
            .into_iter()
            .map(|r| String::from_utf8(r).expect("ascii"))
            .collect();
        rows.join("\n")
    }

    /// Inverse of [`Polyomino::render_ascii`]. Any character other than `#`
    /// is empty; lines may have different lengths.
    pub fn parse_ascii(text: &str) -> Result<Self, ParseError> {
        let lines: Vec<&str> = text.lines().collect();
        let h = lines.len() as i32;
        let cells = lines.iter().enumerate().flat_map(|(row, line)| {
            line.bytes()
                .enumerate()
                .filter(|&(_, b)| b == b'#')
                .map(move |(x, _)| Cell::new(x as i32, h - 1 - row as i32))
        });
        Polyomino::from_cells(cells).map_err(|e| ParseError::new(1, e.to_string()))
    }

    /// The `polyomino v1 <n>` text form: header line, then one `x y` line
    /// per cell in canonical order, each terminated by LF.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(16 + self.len() * 8);
        writeln!(out, "{HEADER} {}", self.len()).unwrap();
        for c in self.cells() {
            writeln!(out, "{} {}", c.x, c.y).unwrap();
        }
        out
    }

    /// Parses the `polyomino v1` form. Cell lines may come in any order and
    /// with any offset; the result is normalized.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| ParseError::new(1, "empty input"))?;
        let count = header
            .strip_prefix(HEADER)
            .and_then(|rest| rest.strip_prefix(' '))
            .ok_or_else(|| ParseError::new(1, format!("expected `{HEADER} <n>`")))?;
        let n: usize = count
            .parse()
            .map_err(|_| ParseError::new(1, format!("bad cell count `{count}`")))?;
        let mut body: Vec<(usize, &str)> = lines.collect();
        if matches!(body.last(), Some((_, ""))) {
            body.pop();
        }
        let mut cells = Vec::with_capacity(n);
        for &(line, text) in &body {
            if text.is_empty() {
                return Err(ParseError::new(line, "blank line"));
            }
            if cells.len() == n {
                return Err(ParseError::new(line, "more cells than the header declares"));
            }
            let bad = || ParseError::new(line, format!("expected `<x> <y>`, got `{text}`"));
            let mut parts = text.split(' ');
            let mut coord = || -> Result<i32, ParseError> {
                parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)
            };
            let (x, y) = (coord()?, coord()?);
            if parts.next().is_some() {
                return Err(bad());
            }
            cells.push(Cell::new(x, y));
        }
        if cells.len() != n {
            let line = body.last().map_or(1, |&(l, _)| l) + 1;
            return Err(ParseError::new(
                line,
                format!("header declares {n} cells, found {}", cells.len()),
            ));
        }
        Polyomino::from_cells(cells).map_err(|e: GridError| ParseError::new(1, e.to_string()))
    }

    /// One filled `rect` per tile in canonical order and a single stroked
    /// path tracing every perimeter edge. Holes stay unfilled.
    pub fn render_svg(&self) -> String {
        let (w, h) = (i64::from(self.width()), i64::from(self.height()));
        let (pw, ph) = (w * UNIT, h * UNIT);
        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{pw}" height="{ph}" viewBox="-1 -1 {} {}">"#,
            pw + 2,
            ph + 2
        )
        .unwrap();
        out.push_str("<g fill=\"#9bb7d4\" stroke=\"none\">\n");
        let top = |y: i64| (h - 1 - y) * UNIT;
        for c in self.cells() {
            let (x, y) = (i64::from(c.x), i64::from(c.y));
            writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}"/>"#,
                x * UNIT,
                top(y)
            )
            .unwrap();
        }
        out.push_str("</g>\n<path fill=\"none\" stroke=\"#1b2a3a\" stroke-width=\"1\" d=\"");
        let mut first = true;
        for c in self.cells() {
            let (x, y) = (i64::from(c.x), i64::from(c.y));
            let (left, right) = (x * UNIT, (x + 1) * UNIT);
            let (upper, lower) = (top(y), top(y) + UNIT);
            let sides = [
                (Cell::new(c.x, c.y - 1), (left, lower), (right, lower)),
                (Cell::new(c.x, c.y + 1), (left, upper), (right, upper)),
                (Cell::new(c.x - 1, c.y), (left, upper), (left, lower)),
                (Cell::new(c.x + 1, c.y), (right, upper), (right, lower)),
            ];
            for (nb, (x0, y0), (x1, y1)) in sides {
                if !self.contains(nb) {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    write!(out, "M{x0} {y0}L{x1} {y1}").unwrap();
                }
            }
        }
        out.push_str("\"/>\n</svg>\n");
        out
    }
}

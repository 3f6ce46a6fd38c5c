//! Edge colorings of complete bipartite graphs and their witnesses.
//!
//! Rows index the side `U = {u_1, ..., u_n1}`, columns index `V = {v_1, ..., v_n2}`
//! and colors are the integers `1..=r`. Matrix accessors take 0-based indices;
//! certificates name vertices by their 1-based labels.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Color = u32;

/// Largest supported number of edges, `n1 * n2`.
pub const MAX_EDGES: usize = 1 << 20;

/// An `r`-coloring of the edges of `K_{n1,n2}`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteColoring {
    n1: usize,
    n2: usize,
    r: u32,
    grid: Vec<Color>,
}

impl BipartiteColoring {
    /// Validates a matrix of colors; `entries[i][j]` colors the edge `u_{i+1} v_{j+1}`.
    pub fn new(n1: usize, n2: usize, r: u32, entries: &[Vec<Color>]) -> Result<Self> {
        check_shape(n1, n2, r)?;
        if entries.len() != n1 {
            return Err(Error::DimensionMismatch {
                expected_rows: n1,
                expected_cols: n2,
                detail: format!("{} rows", entries.len()),
            });
        }
        if let Some((i, row)) = entries.iter().enumerate().find(|(_, row)| row.len() != n2) {
            return Err(Error::DimensionMismatch {
                expected_rows: n1,
                expected_cols: n2,
                detail: format!("row {} with {} entries", i + 1, row.len()),
            });
        }
        Self::from_row_major(n1, n2, r, entries.concat())
    }

    pub fn from_row_major(n1: usize, n2: usize, r: u32, grid: Vec<Color>) -> Result<Self> {
        check_shape(n1, n2, r)?;
        if grid.len() != n1 * n2 {
            return Err(Error::DimensionMismatch {
                expected_rows: n1,
                expected_cols: n2,
                detail: format!("{} entries", grid.len()),
            });
        }
        if let Some(&bad) = grid.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::ColorOutOfRange {
                color: bad as u64,
                r,
            });
        }
        Ok(Self { n1, n2, r, grid })
    }

    /// Builds a coloring from a closure over 0-based `(row, col)`.
    pub fn from_fn(n1: usize, n2: usize, r: u32, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        check_shape(n1, n2, r)?;
        let mut grid = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                grid.push(f(i, j));
            }
        }
        Self::from_row_major(n1, n2, r, grid)
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Color of the edge between row `i` and column `j` (both 0-based).
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        self.grid[i * self.n2 + j]
    }

    pub fn row(&self, i: usize) -> &[Color] {
        &self.grid[i * self.n2..(i + 1) * self.n2]
    }

    pub fn as_row_major(&self) -> &[Color] {
        &self.grid
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.grid.chunks(self.n2)
    }

    pub fn to_rows(&self) -> Vec<Vec<Color>> {
        self.rows().map(<[Color]>::to_vec).collect()
    }

    /// For each row `i`, the set of 0-based columns `j` with `color(i, j) == color`.
    pub fn per_color_rows(&self, color: Color) -> Result<Vec<FixedBitSet>> {
        self.check_color(color)?;
        Ok(self
            .rows()
            .map(|row| {
                let mut set = FixedBitSet::with_capacity(self.n2);
                for (j, &c) in row.iter().enumerate() {
                    if c == color {
                        set.insert(j);
                    }
                }
                set
            })
            .collect())
    }

    /// Number of edges of each color at row `i`; index 0 is unused.
    pub fn row_histogram(&self, i: usize) -> Vec<usize> {
        let mut counts = vec![0; self.r as usize + 1];
        for &c in self.row(i) {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Number of edges of each color at column `j`; index 0 is unused.
    pub fn col_histogram(&self, j: usize) -> Vec<usize> {
        let mut counts = vec![0; self.r as usize + 1];
        for i in 0..self.n1 {
            counts[self.color(i, j) as usize] += 1;
        }
        counts
    }

    /// Total number of edges of each color; index 0 is unused.
    pub fn histogram(&self) -> Vec<usize> {
        let mut counts = vec![0; self.r as usize + 1];
        for &c in &self.grid {
            counts[c as usize] += 1;
        }
        counts
    }

    pub(crate) fn check_color(&self, color: Color) -> Result<()> {
        if color == 0 || color > self.r {
            return Err(Error::ColorOutOfRange {
                color: color as u64,
                r: self.r,
            });
        }
        Ok(())
    }

    /// Canonical text form: header line `n1 n2 r`, then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n1, self.n2, self.r);
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(Color::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Hex SHA-256 digest of [`Self::to_text`].
    pub fn source_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

fn check_shape(n1: usize, n2: usize, r: u32) -> Result<()> {
    if n1 == 0 || n2 == 0 || r == 0 {
        return Err(Error::InvalidArgument(format!(
            "n1, n2 and r must be positive (got {n1}, {n2}, {r})"
        )));
    }
    if n1.checked_mul(n2).is_none_or(|e| e > MAX_EDGES) {
        return Err(Error::InvalidArgument(format!(
            "{n1}x{n2} exceeds the {MAX_EDGES}-edge limit"
        )));
    }
    Ok(())
}

impl fmt::Display for BipartiteColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the coloring file format. A trailing newline is required.
pub fn read_coloring(text: &str) -> Result<BipartiteColoring> {
    if !text.ends_with('\n') {
        let line = text.lines().count().max(1);
        let column = text.lines().last().map_or(0, str::len) + 1;
        return Err(Error::parse(line, column, "missing trailing newline"));
    }
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
    let header = parse_numbers(lines[0], 1)?;
    let [n1, n2, r] = header[..] else {
        return Err(Error::parse(1, 1, format!("header needs 3 numbers, found {}", header.len())));
    };
    let (n1, n2) = (n1.0 as usize, n2.0 as usize);
    let r = u32::try_from(r.0).map_err(|_| Error::parse(1, r.1, "r too large"))?;
    if n1 == 0 || n2 == 0 || r == 0 {
        return Err(Error::parse(1, 1, "n1, n2 and r must be positive"));
    }
    if lines.len() - 1 < n1 {
        return Err(Error::parse(
            lines.len() + 1,
            1,
            format!("expected {n1} rows, found {}", lines.len() - 1),
        ));
    }
    if lines.len() - 1 > n1 {
        return Err(Error::parse(n1 + 2, 1, "unexpected line after the last row"));
    }
    let mut grid = Vec::with_capacity(n1.saturating_mul(n2).min(MAX_EDGES));
    for (k, line) in lines[1..].iter().enumerate() {
        let lineno = k + 2;
        let values = parse_numbers(line, lineno)?;
        if values.len() != n2 {
            let column = values.get(n2).map_or(line.len() + 1, |v| v.1);
            return Err(Error::parse(
                lineno,
                column,
                format!("expected {n2} colors, found {}", values.len()),
            ));
        }
        for (value, column) in values {
            if value == 0 || value > r as u64 {
                return Err(Error::parse(lineno, column, format!("color {value} outside 1..={r}")));
            }
            grid.push(value as Color);
        }
    }
    BipartiteColoring::from_row_major(n1, n2, r, grid).map_err(|e| Error::parse(1, 1, e.to_string()))
}

pub fn write_coloring(coloring: &BipartiteColoring) -> String {
    coloring.to_text()
}

impl FromStr for BipartiteColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        read_coloring(s)
    }
}

/// Space separated decimal numbers with their 1-based starting columns.
fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<(u64, usize)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in line.split(' ') {
        let column = offset + 1;
        offset += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let value = token
            .parse::<u64>()
            .map_err(|_| Error::parse(lineno, column, format!("`{token}` is not a non-negative integer")))?;
        out.push((value, column));
    }
    Ok(out)
}

/// A biclique `K_{s,t}` with `s` vertices on the row side and `t` on the column side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BicliquePattern {
    pub s: usize,
    pub t: usize,
}

impl BicliquePattern {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidArgument(format!("pattern K_{{{s},{t}}} needs s, t >= 1")));
        }
        Ok(Self { s, t })
    }

    pub fn edges(&self) -> usize {
        self.s * self.t
    }

    pub fn transposed(&self) -> Self {
        Self { s: self.t, t: self.s }
    }
}

impl fmt::Display for BicliquePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.s, self.t)
    }
}

impl FromStr for BicliquePattern {
    type Err = Error;

    /// Parses `"s,t"`.
    fn from_str(text: &str) -> Result<Self> {
        let (s, t) = text
            .split_once(',')
            .ok_or_else(|| Error::InvalidArgument(format!("pattern `{text}` is not of the form s,t")))?;
        let s = s.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad s in `{text}`")))?;
        let t = t.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad t in `{text}`")))?;
        Self::new(s, t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    #[serde(rename = "mono")]
    Monochromatic,
    #[serde(rename = "rainbow")]
    Rainbow,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Monochromatic => "mono",
            CertificateKind::Rainbow => "rainbow",
        })
    }
}

/// Witness of a monochromatic or rainbow biclique.
///
/// `rows` and `cols` hold 1-based vertex labels; `colors[a][b]` is the color of
/// the edge `u_{rows[a]} v_{cols[b]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BicliqueCertificate {
    pub kind: CertificateKind,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub colors: Vec<Vec<Color>>,
}

impl BicliqueCertificate {
    /// Reads the witnessed colors off `coloring`. Indices are 1-based and must be in range.
    pub(crate) fn from_coloring(
        coloring: &BipartiteColoring,
        kind: CertificateKind,
        rows: Vec<usize>,
        cols: Vec<usize>,
    ) -> Self {
        let colors = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| coloring.color(i - 1, j - 1)).collect())
            .collect();
        Self { kind, rows, cols, colors }
    }

    pub fn pattern(&self) -> BicliquePattern {
        BicliquePattern {
            s: self.rows.len(),
            t: self.cols.len(),
        }
    }

    pub fn to_document(&self, source: &BipartiteColoring) -> CertificateDocument {
        CertificateDocument {
            certificate: self.clone(),
            source_hash: source.source_hash(),
        }
    }
}

impl fmt::Display for BicliqueCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{} rows={} cols={}", self.kind, join(&self.rows), join(&self.cols))
    }
}

/// On-disk certificate: the witness plus the hash of the coloring it cites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    #[serde(flatten)]
    pub certificate: BicliqueCertificate,
    pub source_hash: String,
}

impl CertificateDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block() -> BipartiteColoring {
        BipartiteColoring::new(2, 2, 2, &[vec![1, 1], vec![2, 2]]).unwrap()
    }

    #[test]
    fn smallest_instance() {
        let c = BipartiteColoring::new(1, 1, 1, &[vec![1]]).unwrap();
        assert_eq!((c.n1(), c.n2(), c.r()), (1, 1, 1));
        assert_eq!(c.color(0, 0), 1);
    }

    #[test]
    fn rejects_out_of_range_and_bad_shape() {
        assert_eq!(
            BipartiteColoring::new(2, 2, 2, &[vec![1, 3], vec![2, 2]]),
            Err(Error::ColorOutOfRange { color: 3, r: 2 })
        );
        assert!(matches!(
            BipartiteColoring::new(2, 2, 2, &[vec![1, 1]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            BipartiteColoring::new(2, 2, 2, &[vec![1, 1], vec![2]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            BipartiteColoring::new(1, 1, 1, &[vec![0]]),
            Err(Error::ColorOutOfRange { color: 0, .. })
        ));
        assert!(BipartiteColoring::from_row_major(1 << 11, 1 << 10, 1, vec![]).is_err());
    }

    #[test]
    fn per_color_rows_reads_grid() {
        let sets = |c: &BipartiteColoring, color| -> Vec<Vec<usize>> {
            c.per_color_rows(color).unwrap().iter().map(|s| s.ones().collect()).collect()
        };
        assert_eq!(sets(&block(), 1), vec![vec![0, 1], vec![]]);
        assert_eq!(sets(&block(), 2), vec![vec![], vec![0, 1]]);
        let ones = BipartiteColoring::from_fn(2, 3, 1, |_, _| 1).unwrap();
        assert_eq!(sets(&ones, 1), vec![vec![0, 1, 2], vec![0, 1, 2]]);
        assert!(block().per_color_rows(3).is_err());
        assert!(block().per_color_rows(0).is_err());
    }

    #[test]
    fn reads_block_coloring() {
        let c = read_coloring("2 2 2\n1 1\n2 2\n").unwrap();
        assert_eq!(c, block());
        assert_eq!(write_coloring(&c), "2 2 2\n1 1\n2 2\n");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match read_coloring("2 2 2\n1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match read_coloring("2 2 2\n1 1\n2 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        match read_coloring("2 2 2\n1 1\n2 3\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        assert!(read_coloring("2 2 2\n1 1\n2 2").is_err());
        assert!(read_coloring("2 2 2\n1 1\n2 2\n\n").is_err());
        assert!(read_coloring("2 2 2\n1 1 1\n2 2\n").is_err());
        assert!(read_coloring("2 2\n1 1\n2 2\n").is_err());
        assert!(read_coloring("").is_err());
    }

    #[test]
    fn patterns_parse() {
        assert_eq!("2,3".parse::<BicliquePattern>().unwrap(), BicliquePattern { s: 2, t: 3 });
        assert!("0,3".parse::<BicliquePattern>().is_err());
        assert!("23".parse::<BicliquePattern>().is_err());
    }

    #[test]
    fn certificate_document_round_trips() {
        let c = block();
        let cert = BicliqueCertificate::from_coloring(&c, CertificateKind::Monochromatic, vec![1], vec![1, 2]);
        let doc = cert.to_document(&c);
        let json = doc.to_json();
        assert!(json.contains("\"kind\": \"mono\""));
        assert!(json.contains("\"source_hash\""));
        assert_eq!(CertificateDocument::from_json(&json).unwrap(), doc);
        assert_eq!(doc.source_hash.len(), 64);
    }
}

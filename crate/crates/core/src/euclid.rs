//! Point configurations built from regular simplices, and the map from biclique edges
//! to points of a simplex product.
//!
//! `Q_{s,a}` is the set of `s` points `(a/sqrt 2) e_i` in `R^s`; its points are pairwise at
//! distance `a`. Edge `u_i v_j` of `K_{s,t}` goes to the point of `Q_{s,a} * Q_{t,b}` with
//! `a/sqrt 2` in coordinate `i` and `b/sqrt 2` in coordinate `s + j`, so two edge images are at
//! distance `sqrt(a^2 [i != k] + b^2 [j != l])` and every sub-biclique `K_{k,l}` lands on a
//! congruent copy of `Q_{k,a} * Q_{l,b}`.

use std::fmt::Write as _;

use crate::coloring::{BicliquePattern, BipartiteColoring, CertificateKind, Color};
use crate::detect::find_any;
use crate::error::{Error, Result};
use crate::BicliqueCertificate;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<f64>>,
    labels: Option<Vec<String>>,
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

impl PointConfig {
    /// Checks lengths and that points are pairwise more than `1e-9` apart.
    pub fn new(dim: usize, points: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        if let Some((k, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::InvalidArgument(format!(
                "point {} has {} coordinates, expected {dim}",
                k + 1,
                p.len()
            )));
        }
        if labels.as_ref().is_some_and(|l| l.len() != points.len()) {
            return Err(Error::InvalidArgument("labels and points differ in length".into()));
        }
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if distance(&points[a], &points[b]) <= DEFAULT_TOLERANCE {
                    return Err(Error::InvalidArgument(format!(
                        "points {} and {} coincide",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(Self { dim, points, labels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        distance(&self.points[a], &self.points[b])
    }

    pub fn distance_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.len())
            .map(|a| (0..self.len()).map(|b| self.distance(a, b)).collect())
            .collect()
    }

    /// Subconfiguration on the given point indices, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let points = indices.iter().map(|&k| self.points[k].clone()).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| indices.iter().map(|&k| l[k].clone()).collect());
        Self::new(self.dim, points, labels)
    }
}

/// The `s` points of `Q_{s,a}`: `a / sqrt 2` in one coordinate, zero elsewhere.
pub fn simplex_points(s: usize, a: f64) -> Result<PointConfig> {
    if s == 0 || a.is_nan() || a <= 0.0 {
        return Err(Error::InvalidArgument(format!("need s >= 1 and a > 0 (got s={s}, a={a})")));
    }
    let h = a / std::f64::consts::SQRT_2;
    let points = (0..s)
        .map(|i| {
            let mut p = vec![0.0; s];
            p[i] = h;
            p
        })
        .collect();
    PointConfig::new(s, points, None)
}

/// `K1 * K2`: all concatenations `(x, y)`, ordered with the `k1` index major.
pub fn cartesian_product(k1: &PointConfig, k2: &PointConfig) -> PointConfig {
    let mut points = Vec::with_capacity(k1.len() * k2.len());
    let mut labels = Vec::with_capacity(points.capacity());
    for (a, x) in k1.points.iter().enumerate() {
        for (b, y) in k2.points.iter().enumerate() {
            points.push(x.iter().chain(y).copied().collect());
            if let (Some(l1), Some(l2)) = (&k1.labels, &k2.labels) {
                labels.push(format!("{}{}", l1[a], l2[b]));
            }
        }
    }
    let labels = (k1.labels.is_some() && k2.labels.is_some()).then_some(labels);
    PointConfig {
        dim: k1.dim + k2.dim,
        points,
        labels,
    }
}

/// `K_{s,t}` with side lengths `a` (between rows) and `b` (between columns).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexProductSpec {
    pub s: usize,
    pub t: usize,
    pub a: f64,
    pub b: f64,
}

impl SimplexProductSpec {
    pub fn new(s: usize, t: usize, a: f64, b: f64) -> Result<Self> {
        if s == 0 || t == 0 || a.is_nan() || a <= 0.0 || b.is_nan() || b <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "need s, t >= 1 and a, b > 0 (got s={s}, t={t}, a={a}, b={b})"
            )));
        }
        Ok(Self { s, t, a, b })
    }
}

/// Image of edge `u_i v_j` (1-based) in `R^(s+t)`.
pub fn phi(spec: &SimplexProductSpec, i: usize, j: usize) -> Result<Vec<f64>> {
    if i == 0 || i > spec.s {
        return Err(Error::IndexOutOfRange { index: i, max: spec.s });
    }
    if j == 0 || j > spec.t {
        return Err(Error::IndexOutOfRange { index: j, max: spec.t });
    }
    let mut x = vec![0.0; spec.s + spec.t];
    x[i - 1] = spec.a / std::f64::consts::SQRT_2;
    x[spec.s + j - 1] = spec.b / std::f64::consts::SQRT_2;
    Ok(x)
}

/// A point configuration with one color per point.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoredConfig {
    pub config: PointConfig,
    pub colors: Vec<Color>,
}

/// Colors `Q_{n1,a} * Q_{n2,b}` by giving `phi(u_i v_j)` the color of edge `u_i v_j`.
///
/// Points are in row-major edge order and labelled `u{i}v{j}`.
pub fn embed_coloring(c: &BipartiteColoring, a: f64, b: f64) -> Result<ColoredConfig> {
    let spec = SimplexProductSpec::new(c.n1(), c.n2(), a, b)?;
    let mut points = Vec::with_capacity(c.n1() * c.n2());
    let mut labels = Vec::with_capacity(points.capacity());
    let mut colors = Vec::with_capacity(points.capacity());
    for i in 1..=c.n1() {
        for j in 1..=c.n2() {
            points.push(phi(&spec, i, j)?);
            labels.push(format!("u{i}v{j}"));
            colors.push(c.color(i - 1, j - 1));
        }
    }
    Ok(ColoredConfig {
        config: PointConfig {
            dim: c.n1() + c.n2(),
            points,
            labels: Some(labels),
        },
        colors,
    })
}

/// Finds a bijection `map` with `|d1(x, y) - d2(map x, map y)| <= tol` for all pairs.
///
/// Sorted distance lists are compared first; then points of `k1` are assigned in order,
/// each to an unused point of `k2` consistent with everything assigned before it.
pub fn congruent(k1: &PointConfig, k2: &PointConfig, tol: f64) -> Option<Vec<usize>> {
    let n = k1.len();
    if n != k2.len() {
        return None;
    }
    let d1 = k1.distance_matrix();
    let d2 = k2.distance_matrix();
    let sorted = |d: &[Vec<f64>]| {
        let mut all: Vec<f64> = (0..n).flat_map(|a| (a + 1..n).map(move |b| d[a][b])).collect();
        all.sort_by(f64::total_cmp);
        all
    };
    if sorted(&d1).iter().zip(sorted(&d2)).any(|(x, y)| (x - y).abs() > tol) {
        return None;
    }
    // per-point distance profiles must also match
    let profile = |d: &[Vec<f64>], a: usize| {
        let mut row = d[a].clone();
        row.sort_by(f64::total_cmp);
        row
    };
    let p1: Vec<Vec<f64>> = (0..n).map(|a| profile(&d1, a)).collect();
    let p2: Vec<Vec<f64>> = (0..n).map(|a| profile(&d2, a)).collect();
    let close = |x: &[f64], y: &[f64]| x.iter().zip(y).all(|(u, v)| (u - v).abs() <= tol);

    fn assign(
        k: usize,
        map: &mut Vec<usize>,
        taken: &mut [bool],
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
        n: usize,
    ) -> bool {
        if k == n {
            return true;
        }
        for cand in 0..n {
            if !taken[cand] && ok(k, cand, map) {
                taken[cand] = true;
                map.push(cand);
                if assign(k + 1, map, taken, ok, n) {
                    return true;
                }
                map.pop();
                taken[cand] = false;
            }
        }
        false
    }
    let ok = |k: usize, cand: usize, map: &[usize]| {
        close(&p1[k], &p2[cand]) && map.iter().enumerate().all(|(prev, &img)| (d1[k][prev] - d2[cand][img]).abs() <= tol)
    };
    let mut map = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    assign(0, &mut map, &mut taken, &ok, n).then_some(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationBranch {
    Rainbow,
    Monochromatic,
    NoCertificate,
}

/// Outcome of pushing a detected biclique through `phi`.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslationReport {
    pub branch: TranslationBranch,
    pub certificate: Option<BicliqueCertificate>,
    /// Image of the certificate's edges in `R^(n1+n2)`.
    pub image: Option<PointConfig>,
    /// Whether the image is congruent to `Q_{s,a} * Q_{t,b}` for the certificate's `(s, t)`.
    pub congruent: bool,
    /// Whether the image points carry one color (mono) or pairwise distinct colors (rainbow).
    pub colors_ok: bool,
}

impl TranslationReport {
    pub fn passed(&self) -> bool {
        self.branch == TranslationBranch::NoCertificate || (self.congruent && self.colors_ok)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.certificate {
            None => out.push_str("branch=none\n"),
            Some(cert) => {
                let branch = match self.branch {
                    TranslationBranch::Rainbow => "rainbow",
                    _ => "mono",
                };
                let _ = writeln!(out, "branch={branch}");
                let _ = writeln!(out, "certificate: {cert}");
                let _ = writeln!(out, "congruent={} colors_ok={}", self.congruent, self.colors_ok);
            }
        }
        out
    }
}

/// Runs [`find_any`] and checks that the witness maps to a correctly colored, congruent
/// copy of the matching simplex product inside `Q_{n1,a} * Q_{n2,b}`.
pub fn verify_translation(
    c: &BipartiteColoring,
    p_rainbow: BicliquePattern,
    p_mono: BicliquePattern,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<TranslationReport> {
    let Some(cert) = find_any(c, p_rainbow, p_mono) else {
        return Ok(TranslationReport {
            branch: TranslationBranch::NoCertificate,
            certificate: None,
            image: None,
            congruent: false,
            colors_ok: false,
        });
    };
    let embedded = embed_coloring(c, a, b)?;
    let indices: Vec<usize> = cert
        .rows
        .iter()
        .flat_map(|&i| cert.cols.iter().map(move |&j| (i - 1) * c.n2() + (j - 1)))
        .collect();
    let image = embedded.config.select(&indices)?;
    let mut image_colors: Vec<Color> = indices.iter().map(|&k| embedded.colors[k]).collect();
    let target = cartesian_product(&simplex_points(cert.rows.len(), a)?, &simplex_points(cert.cols.len(), b)?);
    let is_congruent = congruent(&image, &target, tol).is_some();
    let branch = match cert.kind {
        CertificateKind::Monochromatic => TranslationBranch::Monochromatic,
        CertificateKind::Rainbow => TranslationBranch::Rainbow,
    };
    let colors_ok = match cert.kind {
        CertificateKind::Monochromatic => image_colors.windows(2).all(|w| w[0] == w[1]),
        CertificateKind::Rainbow => {
            let n = image_colors.len();
            image_colors.sort_unstable();
            image_colors.dedup();
            image_colors.len() == n
        }
    };
    Ok(TranslationReport {
        branch,
        certificate: Some(cert),
        image: Some(image),
        congruent: is_congruent,
        colors_ok,
    })
}

/// Text form: `dim npoints`, then one point per line, an optional color column, and an
/// optional `# label`. Numbers use the shortest representation that reads back exactly.
pub fn write_points(config: &PointConfig, colors: Option<&[Color]>) -> String {
    let mut out = format!("{} {}\n", config.dim, config.len());
    for (k, p) in config.points.iter().enumerate() {
        let coords: Vec<String> = p.iter().map(f64::to_string).collect();
        out.push_str(&coords.join(" "));
        if let Some(colors) = colors {
            let _ = write!(out, " {}", colors[k]);
        }
        if let Some(labels) = &config.labels {
            let _ = write!(out, " # {}", labels[k]);
        }
        out.push('\n');
    }
    out
}

/// Parses [`write_points`] output; `colored` says whether a color column follows the coordinates.
pub fn read_points(text: &str, colored: bool) -> Result<(PointConfig, Option<Vec<Color>>)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            line: 1,
            column: 1,
            message: "header must be `dim npoints`".into(),
        })?;
    let [dim, count] = nums[..] else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "header must be `dim npoints`".into(),
        });
    };
    let mut points = Vec::with_capacity(count);
    let mut labels = Vec::new();
    let mut colors = Vec::new();
    for (lineno, line) in lines.by_ref().take(count) {
        let (body, label) = match line.split_once('#') {
            Some((body, label)) => (body, Some(label.trim().to_string())),
            None => (line, None),
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let expected = dim + usize::from(colored);
        if tokens.len() != expected {
            return Err(Error::Parse {
                line: lineno + 1,
                column: 1,
                message: format!("expected {expected} fields, found {}", tokens.len()),
            });
        }
        let bad = |tok: &str| Error::Parse {
            line: lineno + 1,
            column: line.find(tok).map_or(1, |c| c + 1),
            message: format!("`{tok}` is not a number"),
        };
        let coords = tokens[..dim]
            .iter()
            .map(|tok| tok.parse::<f64>().map_err(|_| bad(tok)))
            .collect::<Result<Vec<f64>>>()?;
        if colored {
            colors.push(tokens[dim].parse::<Color>().map_err(|_| bad(tokens[dim]))?);
        }
        points.push(coords);
        if let Some(label) = label {
            labels.push(label);
        }
    }
    if points.len() != count {
        return Err(Error::Parse {
            line: points.len() + 2,
            column: 1,
            message: format!("expected {count} points, found {}", points.len()),
        });
    }
    if let Some((lineno, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Parse {
            line: lineno + 1,
            column: 1,
            message: "unexpected line after the last point".into(),
        });
    }
    let labels = (labels.len() == count && count > 0).then_some(labels);
    let config = PointConfig::new(dim, points, labels)?;
    Ok((config, colored.then_some(colors)))
}

//! Monochromatic and rainbow biclique detection.
//!
//! The exact detectors return the lexicographically least witness, comparing row
//! labels first and column labels second, so results do not depend on search order.
//! Patterns are oriented: the `s` side always lies in `U` (the rows).

use fixedbitset::FixedBitSet;

use crate::coloring::{BicliqueCertificate, BicliquePattern, BipartiteColoring, CertificateKind, Color};
use crate::error::{Error, Result};
use crate::rng::SeededRng;

type Witness = (Vec<usize>, Vec<usize>);

/// Finds a color class containing `K_{s,t}` with `s` rows and `t` columns.
pub fn find_mono_biclique(c: &BipartiteColoring, p: BicliquePattern) -> Option<BicliqueCertificate> {
    if p.s > c.n1() || p.t > c.n2() {
        return None;
    }
    let witness = if p.s == p.t && c.n2() < c.n1() {
        mono_by_columns(c, p)
    } else {
        mono_by_rows(c, p)
    }?;
    let (rows, cols) = witness;
    Some(BicliqueCertificate::from_coloring(
        c,
        CertificateKind::Monochromatic,
        rows.iter().map(|i| i + 1).collect(),
        cols.iter().map(|j| j + 1).collect(),
    ))
}

/// Sets of 0-based columns per row for one color, keeping only rows with at least `min` of them.
fn heavy_rows(c: &BipartiteColoring, min: usize) -> Vec<Vec<(usize, FixedBitSet)>> {
    let mut by_color: Vec<Vec<(usize, FixedBitSet)>> = vec![Vec::new(); c.r() as usize + 1];
    for i in 0..c.n1() {
        let hist = c.row_histogram(i);
        for (color, &count) in hist.iter().enumerate().skip(1) {
            if count >= min && count > 0 {
                let mut set = FixedBitSet::with_capacity(c.n2());
                set.extend(c.row(i).iter().enumerate().filter(|(_, &x)| x as usize == color).map(|(j, _)| j));
                by_color[color].push((i, set));
            }
        }
    }
    by_color
}

fn mono_by_rows(c: &BipartiteColoring, p: BicliquePattern) -> Option<Witness> {
    let mut best: Option<Witness> = None;
    for rows in heavy_rows(c, p.t).iter().skip(1) {
        if rows.len() < p.s {
            continue;
        }
        let mut chosen = Vec::with_capacity(p.s);
        let mut full = FixedBitSet::with_capacity(c.n2());
        full.insert_range(..);
        if let Some(found) = first_common_subset(rows, p.s, p.t, 0, &full, &mut chosen) {
            if best.as_ref().is_none_or(|b| found < *b) {
                best = Some(found);
            }
        }
    }
    best
}

/// Depth-first search over `k`-subsets of `sets` in lexicographic order, returning the first
/// whose intersection with `acc` has at least `need` elements, as `(labels, first need elements)`.
fn first_common_subset(
    sets: &[(usize, FixedBitSet)],
    k: usize,
    need: usize,
    start: usize,
    acc: &FixedBitSet,
    chosen: &mut Vec<usize>,
) -> Option<Witness> {
    if chosen.len() == k {
        return Some((chosen.clone(), acc.ones().take(need).collect()));
    }
    let remaining = k - chosen.len();
    for idx in start..(sets.len() + 1).saturating_sub(remaining) {
        let (label, set) = &sets[idx];
        let mut next = acc.clone();
        next.intersect_with(set);
        if next.count_ones(..) < need {
            continue;
        }
        chosen.push(*label);
        let found = first_common_subset(sets, k, need, idx + 1, &next, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Square patterns on a tall grid: enumerate column subsets, then recover the least witness.
fn mono_by_columns(c: &BipartiteColoring, p: BicliquePattern) -> Option<Witness> {
    let mut best_rows: Option<Vec<usize>> = None;
    for color in 1..=c.r() {
        let cols: Vec<(usize, FixedBitSet)> = (0..c.n2())
            .filter_map(|j| {
                let mut set = FixedBitSet::with_capacity(c.n1());
                set.extend((0..c.n1()).filter(|&i| c.color(i, j) == color));
                (set.count_ones(..) >= p.s).then_some((j, set))
            })
            .collect();
        let mut full = FixedBitSet::with_capacity(c.n1());
        full.insert_range(..);
        for_each_common_subset(&cols, p.t, p.s, 0, &full, &mut Vec::new(), &mut |common| {
            let rows: Vec<usize> = common.ones().take(p.s).collect();
            if best_rows.as_ref().is_none_or(|b| rows < *b) {
                best_rows = Some(rows);
            }
        });
    }
    let rows = best_rows?;
    let cols = (1..=c.r())
        .filter_map(|color| {
            let cols: Vec<usize> = (0..c.n2())
                .filter(|&j| rows.iter().all(|&i| c.color(i, j) == color))
                .take(p.t)
                .collect();
            (cols.len() == p.t).then_some(cols)
        })
        .min()?;
    Some((rows, cols))
}

fn for_each_common_subset(
    sets: &[(usize, FixedBitSet)],
    k: usize,
    need: usize,
    start: usize,
    acc: &FixedBitSet,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&FixedBitSet),
) {
    if chosen.len() == k {
        visit(acc);
        return;
    }
    let remaining = k - chosen.len();
    for idx in start..(sets.len() + 1).saturating_sub(remaining) {
        let (label, set) = &sets[idx];
        let mut next = acc.clone();
        next.intersect_with(set);
        if next.count_ones(..) < need {
            continue;
        }
        chosen.push(*label);
        for_each_common_subset(sets, k, need, idx + 1, &next, chosen, visit);
        chosen.pop();
    }
}

/// Finds `s` rows and `t` columns whose `s*t` edges all have distinct colors.
pub fn find_rainbow_biclique(c: &BipartiteColoring, p: BicliquePattern) -> Option<BicliqueCertificate> {
    if p.s > c.n1() || p.t > c.n2() || (c.r() as usize) < p.edges() {
        return None;
    }
    // a row of a rainbow K_{s,t} sees t distinct colors
    let rows: Vec<usize> = (0..c.n1())
        .filter(|&i| c.row_histogram(i).iter().filter(|&&n| n > 0).count() >= p.t)
        .collect();
    let mut search = RainbowSearch {
        c,
        p,
        used: vec![false; c.r() as usize + 1],
        rows: Vec::with_capacity(p.s),
        cols: Vec::with_capacity(p.t),
    };
    if search.pick_rows(&rows, 0) {
        let rows = search.rows.iter().map(|i| i + 1).collect();
        let cols = search.cols.iter().map(|j| j + 1).collect();
        return Some(BicliqueCertificate::from_coloring(c, CertificateKind::Rainbow, rows, cols));
    }
    None
}

struct RainbowSearch<'a> {
    c: &'a BipartiteColoring,
    p: BicliquePattern,
    used: Vec<bool>,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl RainbowSearch<'_> {
    fn pick_rows(&mut self, candidates: &[usize], start: usize) -> bool {
        if self.rows.len() == self.p.s {
            return self.pick_cols(0);
        }
        let remaining = self.p.s - self.rows.len();
        for idx in start..(candidates.len() + 1).saturating_sub(remaining) {
            self.rows.push(candidates[idx]);
            if self.pick_rows(candidates, idx + 1) {
                return true;
            }
            self.rows.pop();
        }
        false
    }

    fn pick_cols(&mut self, start: usize) -> bool {
        if self.cols.len() == self.p.t {
            return true;
        }
        let remaining = self.p.t - self.cols.len();
        for j in start..(self.c.n2() + 1).saturating_sub(remaining) {
            if self.try_mark(j) {
                self.cols.push(j);
                if self.pick_cols(j + 1) {
                    return true;
                }
                self.cols.pop();
                self.unmark(j);
            }
        }
        false
    }

    /// Marks the colors of column `j` on the chosen rows, failing on any repeat.
    fn try_mark(&mut self, j: usize) -> bool {
        for (k, &i) in self.rows.iter().enumerate() {
            let color = self.c.color(i, j) as usize;
            if self.used[color] {
                for &prev in &self.rows[..k] {
                    self.used[self.c.color(prev, j) as usize] = false;
                }
                return false;
            }
            self.used[color] = true;
        }
        true
    }

    fn unmark(&mut self, j: usize) {
        for &i in &self.rows {
            self.used[self.c.color(i, j) as usize] = false;
        }
    }
}

/// Looks for a monochromatic `p_mono` first, then a rainbow `p_rainbow`.
pub fn find_any(
    c: &BipartiteColoring,
    p_rainbow: BicliquePattern,
    p_mono: BicliquePattern,
) -> Option<BicliqueCertificate> {
    find_mono_biclique(c, p_mono).or_else(|| find_rainbow_biclique(c, p_rainbow))
}

/// Checks a certificate against the coloring it claims to come from.
pub fn verify_certificate(c: &BipartiteColoring, cert: &BicliqueCertificate) -> bool {
    let labels_ok = |labels: &[usize], max: usize| {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        !labels.is_empty() && sorted.len() == labels.len() && labels.iter().all(|&x| (1..=max).contains(&x))
    };
    if !labels_ok(&cert.rows, c.n1()) || !labels_ok(&cert.cols, c.n2()) {
        return false;
    }
    if cert.colors.len() != cert.rows.len() {
        return false;
    }
    for (row, &i) in cert.colors.iter().zip(&cert.rows) {
        if row.len() != cert.cols.len() {
            return false;
        }
        if row.iter().zip(&cert.cols).any(|(&x, &j)| x != c.color(i - 1, j - 1)) {
            return false;
        }
    }
    let mut all: Vec<Color> = cert.colors.concat();
    match cert.kind {
        CertificateKind::Monochromatic => all.windows(2).all(|w| w[0] == w[1]),
        CertificateKind::Rainbow => {
            let n = all.len();
            all.sort_unstable();
            all.dedup();
            all.len() == n
        }
    }
}

/// Classification of the two-edge paths `u_i v_k u_j` between two rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    /// 1-based row labels.
    pub i: usize,
    pub j: usize,
    /// Columns `k` where both edges share a color.
    pub mono_count: usize,
    /// 1-based columns where the two edges differ.
    pub rainbow_cols: Vec<usize>,
    /// Greedy maximal family of pairwise color-disjoint rainbow paths, scanned by increasing column.
    pub pset: Vec<usize>,
    /// Present whenever some rainbow path lies outside `pset`.
    pub degree_witness: Option<ColorDegreeWitness>,
}

/// A row and a color with at least `bound` incident edges of that color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorDegreeWitness {
    /// 1-based row label, one of the profiled pair.
    pub row: usize,
    pub color: Color,
    /// Number of edges of `color` at `row` over all columns.
    pub degree: usize,
    /// `ceil(outside / (4 |pset|))` where `outside` counts rainbow paths not in `pset`.
    pub bound: usize,
}

pub fn path_profile(c: &BipartiteColoring, i: usize, j: usize) -> Result<PathProfile> {
    for x in [i, j] {
        if x == 0 || x > c.n1() {
            return Err(Error::IndexOutOfRange { index: x, max: c.n1() });
        }
    }
    if i == j {
        return Err(Error::InvalidArgument(format!("path profile needs two distinct rows, got {i} twice")));
    }
    let (ri, rj) = (c.row(i - 1), c.row(j - 1));
    let mut mono_count = 0;
    let mut rainbow_cols = Vec::new();
    let mut pset = Vec::new();
    let mut pset_colors: Vec<Color> = Vec::new();
    for k in 0..c.n2() {
        let (a, b) = (ri[k], rj[k]);
        if a == b {
            mono_count += 1;
            continue;
        }
        rainbow_cols.push(k + 1);
        if !pset_colors.contains(&a) && !pset_colors.contains(&b) {
            pset.push(k + 1);
            pset_colors.extend([a, b]);
        }
    }

    let outside: Vec<usize> = rainbow_cols.iter().copied().filter(|k| !pset.contains(k)).collect();
    let degree_witness = (!outside.is_empty()).then(|| {
        // every outside path meets one of the 2|P| colors of the family
        let mut best: Option<(usize, Color)> = None;
        let mut sorted_colors = pset_colors.clone();
        sorted_colors.sort_unstable();
        for &color in &sorted_colors {
            let hits = outside
                .iter()
                .filter(|&&k| ri[k - 1] == color || rj[k - 1] == color)
                .count();
            if best.is_none_or(|(h, _)| hits > h) {
                best = Some((hits, color));
            }
        }
        let (_, color) = best.expect("non-empty family");
        let at_i = outside.iter().filter(|&&k| ri[k - 1] == color).count();
        let at_j = outside.iter().filter(|&&k| rj[k - 1] == color).count();
        let (row, values) = if at_i >= at_j { (i, ri) } else { (j, rj) };
        ColorDegreeWitness {
            row,
            color,
            degree: values.iter().filter(|&&x| x == color).count(),
            bound: outside.len().div_ceil(4 * pset.len()),
        }
    });

    Ok(PathProfile {
        i,
        j,
        mono_count,
        rainbow_cols,
        pset,
        degree_witness,
    })
}

/// Largest number of same-colored edges at 0-based row `i`, with the least color attaining it.
pub fn max_row_color_degree(c: &BipartiteColoring, i: usize) -> (Color, usize) {
    let hist = c.row_histogram(i);
    let (color, &count) = hist
        .iter()
        .enumerate()
        .skip(1)
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("r >= 1");
    (color as Color, count)
}

/// Whether one of rows `i`, `j` (1-based) has some color with at least
/// `(n2 - (t-1)(r+1)) / (4(t-1))` incident edges. Vacuously true when that quantity is not positive.
pub fn pair_meets_color_degree(c: &BipartiteColoring, i: usize, j: usize, t: usize) -> bool {
    assert!(t >= 2, "the color-degree bound needs t >= 2");
    let slack = c.n2() as i128 - ((t - 1) * (c.r() as usize + 1)) as i128;
    if slack <= 0 {
        return true;
    }
    let best = max_row_color_degree(c, i - 1).1.max(max_row_color_degree(c, j - 1).1);
    // degree >= slack / (4(t-1))
    best as i128 * 4 * (t as i128 - 1) >= slack
}

/// Randomly samples `s` rows and `t` columns among the vertices with fewer than `d`
/// edges of every color, returning the first rainbow selection within `trials` draws.
pub fn sample_rainbow(
    c: &BipartiteColoring,
    p: BicliquePattern,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<BicliqueCertificate>> {
    let mut rows: Vec<usize> = (0..c.n1())
        .filter(|&i| c.row_histogram(i).iter().all(|&n| n < d))
        .collect();
    let mut cols: Vec<usize> = (0..c.n2())
        .filter(|&j| c.col_histogram(j).iter().all(|&n| n < d))
        .collect();
    if rows.len() < p.s {
        return Err(Error::InsufficientVertices {
            side: 'U',
            needed: p.s,
            available: rows.len(),
        });
    }
    if cols.len() < p.t {
        return Err(Error::InsufficientVertices {
            side: 'V',
            needed: p.t,
            available: cols.len(),
        });
    }
    let mut rng = SeededRng::new(seed);
    let mut seen = vec![false; c.r() as usize + 1];
    for _ in 0..trials {
        rng.shuffle_prefix(&mut rows, p.s);
        rng.shuffle_prefix(&mut cols, p.t);
        let mut pick_rows = rows[..p.s].to_vec();
        let mut pick_cols = cols[..p.t].to_vec();
        pick_rows.sort_unstable();
        pick_cols.sort_unstable();
        seen.iter_mut().for_each(|x| *x = false);
        let rainbow = pick_rows.iter().all(|&i| {
            pick_cols.iter().all(|&j| {
                let color = c.color(i, j) as usize;
                !std::mem::replace(&mut seen[color], true)
            })
        });
        if rainbow {
            return Ok(Some(BicliqueCertificate::from_coloring(
                c,
                CertificateKind::Rainbow,
                pick_rows.iter().map(|i| i + 1).collect(),
                pick_cols.iter().map(|j| j + 1).collect(),
            )));
        }
    }
    Ok(None)
}

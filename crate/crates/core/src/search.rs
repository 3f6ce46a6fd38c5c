//! Exhaustive search for avoiding colorings, exact Zarankiewicz numbers and a DIMACS
//! encoding of the avoidance problem.
//!
//! The coloring search fills cells in row-major order. Color `c > 1` is only tried once
//! `c - 1` has appeared earlier in the scan, which picks one representative per orbit of
//! color relabelings. After each assignment, every biclique whose last cell (largest row,
//! then largest column) is the one just filled is complete and gets checked; nothing
//! incomplete is ever pruned.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::coloring::{BicliquePattern, BipartiteColoring, Color};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Columns are tracked as `u64` masks.
pub const MAX_SEARCH_COLUMNS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Found,
    Exhausted,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Found => "found",
            Outcome::Exhausted => "exhausted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceResult {
    pub outcome: Outcome,
    /// Present iff `outcome == Found`.
    pub witness: Option<BipartiteColoring>,
    pub nodes_expanded: u64,
    /// Color choices skipped by first-use ordering.
    pub canonical_prunes: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub canonical_prunes: u64,
    pub leaves: u64,
}

/// Patterns to avoid; `None` disables that side (used for plain canonical enumeration).
#[derive(Debug, Clone, Copy)]
struct Forbidden {
    rainbow: Option<BicliquePattern>,
    mono: Option<BicliquePattern>,
}

struct Dfs<'a, F> {
    n1: usize,
    n2: usize,
    r: u32,
    forbid: Forbidden,
    budget: u64,
    grid: Vec<Color>,
    /// `masks[c][i]`: columns of row `i` assigned color `c`.
    masks: Vec<Vec<u64>>,
    used: Vec<bool>,
    stats: SearchStats,
    visit: &'a mut F,
}

impl<F: FnMut(&[Color]) -> ControlFlow<()>> Dfs<'_, F> {
    fn run(&mut self, cell: usize, colors_used: u32) -> Result<ControlFlow<()>> {
        if cell == self.n1 * self.n2 {
            self.stats.leaves += 1;
            return Ok((self.visit)(&self.grid));
        }
        let (i, j) = (cell / self.n2, cell % self.n2);
        let allowed = (colors_used + 1).min(self.r);
        self.stats.canonical_prunes += (self.r - allowed) as u64;
        for c in 1..=allowed {
            self.stats.nodes_expanded += 1;
            if self.stats.nodes_expanded > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.grid[cell] = c;
            self.masks[c as usize][i] |= 1 << j;
            if !self.completes_forbidden(i, j, c) {
                let flow = self.run(cell + 1, colors_used.max(c))?;
                if flow.is_break() {
                    self.masks[c as usize][i] &= !(1 << j);
                    return Ok(flow);
                }
            }
            self.masks[c as usize][i] &= !(1 << j);
        }
        self.grid[cell] = 0;
        Ok(ControlFlow::Continue(()))
    }

    fn completes_forbidden(&mut self, i: usize, j: usize, c: Color) -> bool {
        if let Some(p) = self.forbid.mono {
            if p.s <= i + 1 && p.t <= j + 1 && self.mono_at(i, c, p) {
                return true;
            }
        }
        if let Some(p) = self.forbid.rainbow {
            if p.s <= i + 1 && p.t <= j + 1 && p.edges() <= self.r as usize && self.rainbow_at(i, j, p) {
                return true;
            }
        }
        false
    }

    /// Monochromatic `K_{s,t}` in color `c` using row `i` and rows above it. Row `i` only has
    /// bits up to the current column, so every hit is fully assigned.
    fn mono_at(&self, i: usize, c: Color, p: BicliquePattern) -> bool {
        let rows = &self.masks[c as usize];
        let base = rows[i];
        if (base.count_ones() as usize) < p.t {
            return false;
        }
        fn pick(rows: &[u64], k: usize, start: usize, end: usize, acc: u64, t: usize) -> bool {
            if k == 0 {
                return true;
            }
            (start..end).any(|r| {
                let next = acc & rows[r];
                (next.count_ones() as usize) >= t && pick(rows, k - 1, r + 1, end, next, t)
            })
        }
        pick(rows, p.s - 1, 0, i, base, p.t)
    }

    /// Rainbow `K_{s,t}` containing cell `(i, j)` inside the assigned prefix.
    fn rainbow_at(&mut self, i: usize, j: usize, p: BicliquePattern) -> bool {
        let mut rows = vec![i];
        self.rainbow_rows(i, j, p, 0, &mut rows)
    }

    fn rainbow_rows(&mut self, i: usize, j: usize, p: BicliquePattern, start: usize, rows: &mut Vec<usize>) -> bool {
        if rows.len() == p.s {
            // column j first, then t-1 columns to its left
            let mut cols = Vec::with_capacity(p.t);
            if !self.mark_column(rows, j) {
                return false;
            }
            cols.push(j);
            let found = self.rainbow_cols(rows, j, p.t, 0, &mut cols);
            for &col in &cols {
                self.unmark_column(rows, col);
            }
            return found;
        }
        for other in start..i {
            rows.push(other);
            if self.rainbow_rows(i, j, p, other + 1, rows) {
                rows.pop();
                return true;
            }
            rows.pop();
        }
        false
    }

    fn rainbow_cols(&mut self, rows: &[usize], end: usize, t: usize, start: usize, cols: &mut Vec<usize>) -> bool {
        if cols.len() == t {
            return true;
        }
        for col in start..end {
            if self.mark_column(rows, col) {
                cols.push(col);
                if self.rainbow_cols(rows, end, t, col + 1, cols) {
                    return true;
                }
                cols.pop();
                self.unmark_column(rows, col);
            }
        }
        false
    }

    fn mark_column(&mut self, rows: &[usize], col: usize) -> bool {
        for (k, &row) in rows.iter().enumerate() {
            let c = self.grid[row * self.n2 + col] as usize;
            if self.used[c] {
                for &prev in &rows[..k] {
                    self.used[self.grid[prev * self.n2 + col] as usize] = false;
                }
                return false;
            }
            self.used[c] = true;
        }
        true
    }

    fn unmark_column(&mut self, rows: &[usize], col: usize) {
        for &row in rows {
            self.used[self.grid[row * self.n2 + col] as usize] = false;
        }
    }
}

fn check_search_shape(n1: usize, n2: usize, r: u32) -> Result<()> {
    if n1 == 0 || n2 == 0 || r == 0 {
        return Err(Error::InvalidArgument("n1, n2 and r must be positive".into()));
    }
    if n2 > MAX_SEARCH_COLUMNS {
        return Err(Error::InvalidArgument(format!(
            "search supports at most {MAX_SEARCH_COLUMNS} columns"
        )));
    }
    Ok(())
}

fn run_dfs(
    n1: usize,
    n2: usize,
    r: u32,
    forbid: Forbidden,
    budget: u64,
    mut visit: impl FnMut(&[Color]) -> ControlFlow<()>,
) -> Result<SearchStats> {
    check_search_shape(n1, n2, r)?;
    let mut dfs = Dfs {
        n1,
        n2,
        r,
        forbid,
        budget,
        grid: vec![0; n1 * n2],
        masks: vec![vec![0; n1]; r as usize + 1],
        used: vec![false; r as usize + 1],
        stats: SearchStats::default(),
        visit: &mut visit,
    };
    let _stopped = dfs.run(0, 0)?;
    Ok(dfs.stats)
}

/// Calls `visit` on every first-use canonical coloring that avoids both patterns.
pub fn for_each_avoiding(
    n1: usize,
    n2: usize,
    r: u32,
    p_rainbow: BicliquePattern,
    p_mono: BicliquePattern,
    budget: u64,
    mut visit: impl FnMut(&BipartiteColoring) -> ControlFlow<()>,
) -> Result<SearchStats> {
    let forbid = Forbidden {
        rainbow: Some(p_rainbow),
        mono: Some(p_mono),
    };
    run_dfs(n1, n2, r, forbid, budget, |grid| {
        let c = BipartiteColoring::from_row_major(n1, n2, r, grid.to_vec()).expect("search grid is complete");
        visit(&c)
    })
}

/// Calls `visit` on every first-use canonical coloring, with no avoidance pruning.
pub fn for_each_canonical(
    n1: usize,
    n2: usize,
    r: u32,
    budget: u64,
    mut visit: impl FnMut(&[Color]) -> ControlFlow<()>,
) -> Result<SearchStats> {
    let forbid = Forbidden { rainbow: None, mono: None };
    run_dfs(n1, n2, r, forbid, budget, |grid| visit(grid))
}

/// Looks for an `r`-coloring of `K_{n1,n2}` with no rainbow `p_rainbow` and no monochromatic `p_mono`.
pub fn exists_avoiding(
    n1: usize,
    n2: usize,
    r: u32,
    p_rainbow: BicliquePattern,
    p_mono: BicliquePattern,
) -> Result<AvoidanceResult> {
    exists_avoiding_with_budget(n1, n2, r, p_rainbow, p_mono, DEFAULT_BUDGET)
}

pub fn exists_avoiding_with_budget(
    n1: usize,
    n2: usize,
    r: u32,
    p_rainbow: BicliquePattern,
    p_mono: BicliquePattern,
    budget: u64,
) -> Result<AvoidanceResult> {
    let mut witness = None;
    let stats = for_each_avoiding(n1, n2, r, p_rainbow, p_mono, budget, |c| {
        witness = Some(c.clone());
        ControlFlow::Break(())
    })?;
    Ok(AvoidanceResult {
        outcome: if witness.is_some() { Outcome::Found } else { Outcome::Exhausted },
        witness,
        nodes_expanded: stats.nodes_expanded,
        canonical_prunes: stats.canonical_prunes,
    })
}

/// Smallest `n2 <= n2_max` at which no avoiding coloring of `K_{n1,n2}` exists.
///
/// Restricting an avoiding coloring to fewer columns keeps it avoiding, so the first
/// exhausted size is the frontier.
pub fn min_forcing_n2(
    n1: usize,
    r: u32,
    p_rainbow: BicliquePattern,
    p_mono: BicliquePattern,
    n2_max: usize,
    budget: u64,
) -> Result<Option<usize>> {
    for n2 in 1..=n2_max.min(MAX_SEARCH_COLUMNS) {
        let result = exists_avoiding_with_budget(n1, n2, r, p_rainbow, p_mono, budget)?;
        if result.outcome == Outcome::Exhausted {
            return Ok(Some(n2));
        }
    }
    Ok(None)
}

pub const MAX_ZARANKIEWICZ_SIDE: usize = 6;

/// `z(m, n; s, t)`: the most edges in an `m x n` bipartite graph without `K_{s,t}`
/// (`s` rows, `t` columns).
///
/// Rows are chosen as column masks in a fixed order (popcount descending, then value
/// descending) and each row may not precede the previous one, which enumerates each
/// multiset of rows once. A branch is cut when even full-popcount rows could not beat
/// the best count so far.
pub fn zarankiewicz_exact(m: usize, n: usize, s: usize, t: usize) -> Result<u64> {
    zarankiewicz_exact_with_budget(m, n, s, t, DEFAULT_BUDGET)
}

pub fn zarankiewicz_exact_with_budget(m: usize, n: usize, s: usize, t: usize, budget: u64) -> Result<u64> {
    if m == 0 || n == 0 || s == 0 || t == 0 {
        return Err(Error::InvalidArgument("m, n, s, t must be positive".into()));
    }
    if m > MAX_ZARANKIEWICZ_SIDE || n > MAX_ZARANKIEWICZ_SIDE {
        return Err(Error::InvalidArgument(format!(
            "zarankiewicz_exact supports m, n <= {MAX_ZARANKIEWICZ_SIDE}"
        )));
    }
    if s > m || t > n {
        return Ok((m * n) as u64);
    }
    let mut order: Vec<u64> = (0..1u64 << n).collect();
    order.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(b.cmp(a)));
    let mut z = Zarankiewicz {
        m,
        s,
        t,
        order,
        rows: Vec::with_capacity(m),
        best: 0,
        nodes: 0,
        budget,
    };
    z.extend(0, 0)?;
    Ok(z.best)
}

struct Zarankiewicz {
    m: usize,
    s: usize,
    t: usize,
    order: Vec<u64>,
    rows: Vec<u64>,
    best: u64,
    nodes: u64,
    budget: u64,
}

impl Zarankiewicz {
    fn extend(&mut self, start: usize, edges: u64) -> Result<()> {
        if self.rows.len() == self.m {
            self.best = self.best.max(edges);
            return Ok(());
        }
        let left = (self.m - self.rows.len()) as u64;
        for idx in start..self.order.len() {
            let mask = self.order[idx];
            // later rows have at most this popcount
            if edges + left * mask.count_ones() as u64 <= self.best {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            if self.creates_biclique(mask) {
                continue;
            }
            self.rows.push(mask);
            self.extend(idx, edges + mask.count_ones() as u64)?;
            self.rows.pop();
        }
        Ok(())
    }

    /// Whether `mask` plus `s-1` earlier rows share `t` columns.
    fn creates_biclique(&self, mask: u64) -> bool {
        fn pick(rows: &[u64], k: usize, start: usize, acc: u64, t: usize) -> bool {
            if (acc.count_ones() as usize) < t {
                return false;
            }
            if k == 0 {
                return true;
            }
            (start..rows.len()).any(|r| pick(rows, k - 1, r + 1, acc & rows[r], t))
        }
        pick(&self.rows, self.s - 1, 0, mask, self.t)
    }
}

/// A CNF formula with the bookkeeping needed to evaluate it on colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub n1: usize,
    pub n2: usize,
    pub r: u32,
    pub p_rainbow: BicliquePattern,
    pub p_mono: BicliquePattern,
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
    /// `aux[k]` is `(e, e', c)` for variable `n1*n2*r + k + 1`: edges `e < e'` both colored `c`.
    pub aux: Vec<(usize, usize, Color)>,
}

/// Variable for "edge `e` has color `c`", with `e` the 1-based row-major edge index.
pub fn color_var(r: u32, e: usize, c: Color) -> i64 {
    ((e - 1) * r as usize + c as usize) as i64
}

fn selections(n1: usize, n2: usize, p: BicliquePattern) -> Vec<Vec<usize>> {
    if p.s > n1 || p.t > n2 {
        return Vec::new();
    }
    let rows = subsets(n1, p.s);
    let cols = subsets(n2, p.t);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for rs in &rows {
        for cs in &cols {
            out.push(
                rs.iter()
                    .flat_map(|&i| cs.iter().map(move |&j| i * n2 + j + 1))
                    .collect(),
            );
        }
    }
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Encodes "an `r`-coloring of `K_{n1,n2}` with no rainbow `p_rainbow` and no monochromatic `p_mono`".
///
/// Clauses, in order: exactly one color per edge; for each mono selection and color, not all
/// edges that color; definitions `eq(e,e',c) <-> x(e,c) & x(e',c)`; for each rainbow selection,
/// some pair of its edges shares a color.
pub fn export_cnf(n1: usize, n2: usize, r: u32, p_rainbow: BicliquePattern, p_mono: BicliquePattern) -> Cnf {
    let edges = n1 * n2;
    let x = |e: usize, c: Color| color_var(r, e, c);
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for e in 1..=edges {
        clauses.push((1..=r).map(|c| x(e, c)).collect());
        for c in 1..=r {
            for d in c + 1..=r {
                clauses.push(vec![-x(e, c), -x(e, d)]);
            }
        }
    }
    for sel in selections(n1, n2, p_mono) {
        for c in 1..=r {
            clauses.push(sel.iter().map(|&e| -x(e, c)).collect());
        }
    }

    let rainbow_sel = selections(n1, n2, p_rainbow);
    // edge pairs that co-occur in some rainbow selection, ordered (e, e')
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if !rainbow_sel.is_empty() {
        for e in 1..=edges {
            for f in e + 1..=edges {
                let (ie, je) = ((e - 1) / n2, (e - 1) % n2);
                let (jf_i, jf_j) = ((f - 1) / n2, (f - 1) % n2);
                let rows = if ie == jf_i { 1 } else { 2 };
                let cols = if je == jf_j { 1 } else { 2 };
                if rows <= p_rainbow.s && cols <= p_rainbow.t {
                    pairs.push((e, f));
                }
            }
        }
    }
    let base = edges * r as usize;
    let mut aux = Vec::with_capacity(pairs.len() * r as usize);
    let mut first_aux: HashMap<(usize, usize), usize> = HashMap::new();
    for &(e, f) in &pairs {
        first_aux.insert((e, f), base + aux.len() + 1);
        for c in 1..=r {
            let v = (base + aux.len() + 1) as i64;
            aux.push((e, f, c));
            clauses.push(vec![-v, x(e, c)]);
            clauses.push(vec![-v, x(f, c)]);
            clauses.push(vec![v, -x(e, c), -x(f, c)]);
        }
    }
    for sel in &rainbow_sel {
        let mut clause = Vec::new();
        for (a, &e) in sel.iter().enumerate() {
            for &f in &sel[a + 1..] {
                let first = first_aux[&(e.min(f), e.max(f))];
                clause.extend((0..r as usize).map(|k| (first + k) as i64));
            }
        }
        clauses.push(clause);
    }
    Cnf {
        n1,
        n2,
        r,
        p_rainbow,
        p_mono,
        num_vars: base + aux.len(),
        clauses,
        aux,
    }
}

impl Cnf {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        out.push_str("c gallai-ramsey avoidance instance\n");
        out.push_str(&format!("c n1 {} n2 {} r {}\n", self.n1, self.n2, self.r));
        out.push_str(&format!("c rainbow {} mono {}\n", self.p_rainbow, self.p_mono));
        out.push_str(&format!(
            "c x(e,c) = (e-1)*{} + c for row-major edge e in 1..={}; auxiliary variables from {}\n",
            self.r,
            self.n1 * self.n2,
            self.n1 * self.n2 * self.r as usize + 1
        ));
        out.push_str(&format!("p cnf {} {}\n", self.num_vars, self.clauses.len()));
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }

    /// Full assignment (index `v - 1` for variable `v`) induced by a coloring.
    pub fn assignment_for(&self, coloring: &BipartiteColoring) -> Vec<bool> {
        let mut values = vec![false; self.num_vars];
        for (k, &c) in coloring.as_row_major().iter().enumerate() {
            values[(color_var(self.r, k + 1, c) - 1) as usize] = true;
        }
        self.fill_aux(&mut values);
        values
    }

    /// Sets every auxiliary variable from its defining equivalence.
    pub fn fill_aux(&self, values: &mut [bool]) {
        let base = self.n1 * self.n2 * self.r as usize;
        for (k, &(e, f, c)) in self.aux.iter().enumerate() {
            let xe = values[(color_var(self.r, e, c) - 1) as usize];
            let xf = values[(color_var(self.r, f, c) - 1) as usize];
            values[base + k] = xe && xf;
        }
    }

    pub fn evaluate(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let v = values[(lit.unsigned_abs() - 1) as usize];
                if lit > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }
}

/// Parses solver output: signed literals, optionally on `v ` lines; `c`/`s` lines and `0` are skipped.
pub fn parse_model(text: &str) -> Result<Vec<i64>> {
    let mut lits = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.starts_with('c') || trimmed.starts_with('s') {
            continue;
        }
        let body = trimmed.strip_prefix('v').unwrap_or(trimmed);
        let mut column = line.len() - body.len() + 1;
        for token in body.split(' ') {
            if !token.is_empty() {
                let lit: i64 = token.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    column,
                    message: format!("`{token}` is not a literal"),
                })?;
                if lit != 0 {
                    lits.push(lit);
                }
            }
            column += token.len() + 1;
        }
    }
    Ok(lits)
}

/// Reads the coloring back out of a model of [`export_cnf`].
pub fn decode_model(n1: usize, n2: usize, r: u32, model: &[i64]) -> Result<BipartiteColoring> {
    let primary = n1 * n2 * r as usize;
    let mut truth = vec![None::<bool>; primary + 1];
    for &lit in model {
        let var = lit.unsigned_abs() as usize;
        if var == 0 || var > primary {
            continue;
        }
        let value = lit > 0;
        if truth[var].is_some_and(|prev| prev != value) {
            return Err(Error::InconsistentModel(format!("variable {var} is both true and false")));
        }
        truth[var] = Some(value);
    }
    let mut grid = Vec::with_capacity(n1 * n2);
    for e in 1..=n1 * n2 {
        let colors: Vec<Color> = (1..=r)
            .filter(|&c| truth[color_var(r, e, c) as usize] == Some(true))
            .collect();
        match colors[..] {
            [c] => grid.push(c),
            [] => return Err(Error::InconsistentModel(format!("edge {e} has no color"))),
            _ => return Err(Error::InconsistentModel(format!("edge {e} has colors {colors:?}"))),
        }
    }
    BipartiteColoring::from_row_major(n1, n2, r, grid)
}

//! Naive reference implementations shared by the integration tests.
#![allow(dead_code)]

use gallai_ramsey::{BipartiteColoring, BicliquePattern, Color};

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Lex-least (rows, cols), 1-based, whose edges pass `accept`.
fn naive_find(
    c: &BipartiteColoring,
    p: BicliquePattern,
    accept: impl Fn(&[Color]) -> bool,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let col_sets = subsets(c.n2(), p.t);
    for rows in subsets(c.n1(), p.s) {
        for cols in &col_sets {
            let colors: Vec<Color> = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|(i, j)| c.color(i, j)).collect();
            if accept(&colors) {
                let plus = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
                return Some((plus(&rows), plus(cols)));
            }
        }
    }
    None
}

pub fn naive_mono(c: &BipartiteColoring, p: BicliquePattern) -> Option<(Vec<usize>, Vec<usize>)> {
    naive_find(c, p, |colors| colors.iter().all(|&x| x == colors[0]))
}

pub fn naive_rainbow(c: &BipartiteColoring, p: BicliquePattern) -> Option<(Vec<usize>, Vec<usize>)> {
    naive_find(c, p, |colors| {
        let mut sorted = colors.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    })
}

pub fn naive_avoiding(c: &BipartiteColoring, p_rainbow: BicliquePattern, p_mono: BicliquePattern) -> bool {
    naive_mono(c, p_mono).is_none() && naive_rainbow(c, p_rainbow).is_none()
}

/// Every `r`-coloring of `K_{n1,n2}`, row-major odometer order.
pub fn all_colorings(n1: usize, n2: usize, r: u32) -> impl Iterator<Item = BipartiteColoring> {
    let n = n1 * n2;
    let total = (r as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut grid = vec![0; n];
        for cell in grid.iter_mut().rev() {
            *cell = (code % r as u64) as Color + 1;
            code /= r as u64;
        }
        BipartiteColoring::from_row_major(n1, n2, r, grid).unwrap()
    })
}

pub fn pattern(s: usize, t: usize) -> BicliquePattern {
    BicliquePattern::new(s, t).unwrap()
}

/// Every pattern fitting inside `K_{n1,n2}`.
pub fn patterns_within(n1: usize, n2: usize) -> Vec<BicliquePattern> {
    (1..=n1).flat_map(|s| (1..=n2).map(move |t| pattern(s, t))).collect()
}

/// Shapes `(n1, n2)` with `n1 * n2 <= max_edges`.
pub fn shapes(max_edges: usize) -> Vec<(usize, usize)> {
    (1..=max_edges)
        .flat_map(|n1| (1..=max_edges / n1).map(move |n2| (n1, n2)))
        .collect()
}

//! Coloring generators.

use crate::coloring::{BipartiteColoring, Color};
use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Colors edge `u_i v_j` of `K_{(t-1)r,(t-1)r}` with `ceil(i / (t-1))`.
///
/// Every row is monochromatic, so no biclique with two or more columns is rainbow, and each
/// color covers only `t-1` rows, so no monochromatic biclique has `t` or more rows. A
/// monochromatic biclique with fewer than `t` rows does exist once `n >= t`.
pub fn block_coloring(t: usize, r: u32) -> Result<BipartiteColoring> {
    if t < 2 || r < 1 {
        return Err(Error::InvalidArgument(format!("need t >= 2, r >= 1 (got t={t}, r={r})")));
    }
    let n = (t - 1) * r as usize;
    BipartiteColoring::from_fn(n, n, r, |i, _| (i / (t - 1) + 1) as Color)
}

/// Independent uniform colors from the seeded generator, row-major.
pub fn random_coloring(n1: usize, n2: usize, r: u32, seed: u64) -> Result<BipartiteColoring> {
    let mut rng = SeededRng::new(seed);
    BipartiteColoring::from_fn(n1, n2, r, |_, _| rng.below(r as u64) as Color + 1)
}

/// `K_{1,(p-1)(q-1)}` split into `p-1` runs of `q-1` columns, run `g` colored `g`.
pub fn star_avoiding_coloring(p: usize, q: usize) -> Result<BipartiteColoring> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!("need p, q >= 2 (got p={p}, q={q})")));
    }
    let n = (p - 1) * (q - 1);
    BipartiteColoring::from_fn(1, n, (p - 1) as u32, |_, j| (j / (q - 1) + 1) as Color)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_examples() {
        assert_eq!(block_coloring(2, 2).unwrap().to_rows(), vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(block_coloring(3, 1).unwrap().to_rows(), vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(
            block_coloring(2, 3).unwrap().to_rows(),
            vec![vec![1, 1, 1], vec![2, 2, 2], vec![3, 3, 3]]
        );
        assert!(block_coloring(1, 3).is_err());
    }

    #[test]
    fn block_color_classes_are_row_bands() {
        for t in 2..5 {
            for r in 1..4u32 {
                let c = block_coloring(t, r).unwrap();
                let hist = c.histogram();
                assert!(hist[1..].iter().all(|&n| n == (t - 1) * (t - 1) * r as usize));
                for i in 0..c.n1() {
                    let expected = (i / (t - 1) + 1) as Color;
                    assert!(c.row(i).iter().all(|&x| x == expected));
                }
            }
        }
    }

    #[test]
    fn random_examples() {
        assert_eq!(random_coloring(1, 1, 1, 123).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(random_coloring(2, 2, 2, 7).unwrap(), random_coloring(2, 2, 2, 7).unwrap());
        let c = random_coloring(5, 5, 3, 1).unwrap();
        assert_eq!(c.histogram().iter().sum::<usize>(), 25);
        assert_ne!(random_coloring(8, 8, 3, 1).unwrap(), random_coloring(8, 8, 3, 2).unwrap());
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_avoiding_coloring(2, 2).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(star_avoiding_coloring(3, 3).unwrap().to_rows(), vec![vec![1, 1, 2, 2]]);
        assert_eq!(star_avoiding_coloring(2, 4).unwrap().to_rows(), vec![vec![1, 1, 1]]);
        assert!(star_avoiding_coloring(1, 3).is_err());
    }
}

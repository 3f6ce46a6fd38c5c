use gallai_ramsey::construct::random_coloring;
use gallai_ramsey::detect::find_any;
use gallai_ramsey::euclid::*;
use gallai_ramsey::rng::SeededRng;
use gallai_ramsey::BicliquePattern;
use nalgebra::{DMatrix, DVector};

const TOL: f64 = 1e-9;

fn unit(rng: &mut SeededRng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
}

/// Random isometry: orthogonal factor of a seeded random matrix, plus a translation.
fn random_isometry(k: &PointConfig, rng: &mut SeededRng) -> PointConfig {
    let d = k.dim();
    let q = DMatrix::from_fn(d, d, |_, _| unit(rng)).qr().q();
    let shift = DVector::from_fn(d, |_, _| 10.0 * unit(rng));
    let points = k
        .points()
        .iter()
        .map(|p| (&q * DVector::from_column_slice(p) + &shift).iter().copied().collect())
        .collect();
    PointConfig::new(d, points, None).unwrap()
}

/// Reverses the point order so that the correspondence is not the identity.
fn reversed(k: &PointConfig) -> PointConfig {
    let idx: Vec<usize> = (0..k.len()).rev().collect();
    k.select(&idx).unwrap()
}

#[test]
fn simplex_sides_are_equal() {
    for s in 1..=6 {
        for a in [1.0, 2f64.sqrt(), 2.0] {
            let q = simplex_points(s, a).unwrap();
            for x in 0..s {
                for y in x + 1..s {
                    assert!((q.distance(x, y) - a).abs() < TOL);
                }
            }
        }
    }
}

#[test]
fn phi_distance_law_and_injectivity() {
    for s in 1..=4 {
        for t in 1..=4 {
            for (a, b) in [(1.0, 1.0), (1.0, 2.0), (2f64.sqrt(), 2f64.sqrt())] {
                let spec = SimplexProductSpec::new(s, t, a, b).unwrap();
                let pts: Vec<((usize, usize), Vec<f64>)> = (1..=s)
                    .flat_map(|i| (1..=t).map(move |j| (i, j)))
                    .map(|(i, j)| ((i, j), phi(&spec, i, j).unwrap()))
                    .collect();
                for ((i, j), x) in &pts {
                    for ((k, l), y) in &pts {
                        let d = x.iter().zip(y).map(|(u, v)| (u - v).powi(2)).sum::<f64>().sqrt();
                        let expect = (a * a * (i != k) as u8 as f64 + b * b * (j != l) as u8 as f64).sqrt();
                        assert!((d - expect).abs() < TOL);
                        if (i, j) != (k, l) {
                            assert!(d > TOL);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sub_biclique_images_are_simplex_products() {
    let (s, t, a, b) = (4, 4, 1.0, 2.0);
    let c = random_coloring(s, t, 3, 9).unwrap();
    let embedded = embed_coloring(&c, a, b).unwrap();
    for k in 1..=s {
        for l in 1..=t {
            let idx: Vec<usize> = (0..k).flat_map(|i| (0..l).map(move |j| i * t + j)).collect();
            let image = embedded.config.select(&idx).unwrap();
            let model = cartesian_product(&simplex_points(k, a).unwrap(), &simplex_points(l, b).unwrap());
            assert!(congruent(&image, &model, TOL).is_some(), "k={k} l={l}");
        }
    }
}

#[test]
fn congruence_properties() {
    let mut rng = SeededRng::new(11);
    let base = cartesian_product(&simplex_points(2, 1.0).unwrap(), &simplex_points(3, 2.0).unwrap());
    assert!(congruent(&base, &base, TOL).is_some());
    for _ in 0..50 {
        let moved = reversed(&random_isometry(&base, &mut rng));
        let map = congruent(&base, &moved, TOL).expect("isometric copy");
        for x in 0..base.len() {
            for y in 0..base.len() {
                assert!((base.distance(x, y) - moved.distance(map[x], map[y])).abs() < 1e-7);
            }
        }
        assert!(congruent(&moved, &base, TOL).is_some());
    }
    let square = PointConfig::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]], None).unwrap();
    let rect = PointConfig::new(2, vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 1.0], vec![2.0, 1.0]], None).unwrap();
    assert!(congruent(&square, &rect, TOL).is_none());
    assert!(congruent(&rect, &square, TOL).is_none());
}

#[test]
fn embedding_keeps_color_counts() {
    for seed in 0..50 {
        let c = random_coloring(3, 5, 4, seed).unwrap();
        let e = embed_coloring(&c, 1.0, 1.0).unwrap();
        assert_eq!(e.config.len(), 15);
        let mut hist = vec![0; 5];
        for &x in &e.colors {
            hist[x as usize] += 1;
        }
        assert_eq!(hist, c.histogram());
        let text = write_points(&e.config, Some(&e.colors));
        let (back, colors) = read_points(&text, true).unwrap();
        assert_eq!(colors.unwrap(), e.colors);
        assert!(congruent(&back, &e.config, TOL).is_some());
    }
}

#[test]
fn every_certificate_translates() {
    let mut fired = 0;
    for seed in 0..100u64 {
        let r = 1 + (seed % 4) as u32;
        let c = random_coloring(4, 4, r, seed).unwrap();
        for (s, t) in [(1, 2), (2, 2), (2, 1), (1, 3)] {
            let p = BicliquePattern::new(s, t).unwrap();
            let report = verify_translation(&c, p, p, 1.0, 2.0, TOL).unwrap();
            assert!(report.passed(), "seed {seed} pattern {p}: {}", report.to_text());
            if find_any(&c, p, p).is_some() {
                assert!(report.congruent && report.colors_ok);
                fired += 1;
            }
        }
    }
    assert!(fired > 0);
}

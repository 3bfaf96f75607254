//! Randomized zero-scheme suites: chart independence of the conditions
//! rank, residual degree bookkeeping, regularity vanishing, the
//! restriction-sequence inequality, and generic-position section counts.

use curveclass_core::zeroscheme::{
    collinearity_h1_criterion, conditions_matrix, conditions_matrix_in_chart, h_ideal,
    line_trace_degree, residual_line, FatPoint, LinearForm, PlanePoint, ZeroScheme,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_triple(rng: &mut ChaCha8Rng) -> [i64; 3] {
    loop {
        let t = [
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
        ];
        if t != [0, 0, 0] {
            return t;
        }
    }
}

fn collinear(p: &[i64; 3], q: &[i64; 3], r: &[i64; 3]) -> bool {
    let det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0]);
    det == 0
}

/// A scheme from distinct random supports with multiplicities up to
/// `max_m`, together with the raw integer coordinates of the supports.
fn random_scheme(rng: &mut ChaCha8Rng, n_points: usize, max_m: i64) -> (ZeroScheme, Vec<[i64; 3]>) {
    loop {
        let raws: Vec<[i64; 3]> = (0..n_points).map(|_| random_triple(rng)).collect();
        let fat: Vec<FatPoint> = raws
            .iter()
            .map(|t| {
                let p = PlanePoint::from_ints(t[0], t[1], t[2]).unwrap();
                FatPoint::new(p, rng.gen_range(1..=max_m)).unwrap()
            })
            .collect();
        if let Ok(z) = ZeroScheme::new(fat) {
            return (z, raws);
        }
    }
}

#[test]
fn conditions_rank_is_chart_independent() {
    let mut rng = rng(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let (z, _) = random_scheme(&mut rng, n, 3);
        for t in 0..=4 {
            let base = conditions_matrix(&z, t).unwrap();
            assert_eq!(base.nrows() as i64, z.degree());
            for chart in 0..3usize {
                let visible = z
                    .fat_points()
                    .iter()
                    .all(|fp| !fp.point.coords()[chart].is_zero());
                if !visible {
                    assert!(conditions_matrix_in_chart(&z, t, chart).is_err());
                    continue;
                }
                let alt = conditions_matrix_in_chart(&z, t, chart).unwrap();
                assert_eq!(base.rank(), alt.rank(), "t = {t}, chart = {chart}");
            }
        }
    }
}

#[test]
fn residual_degree_additivity_on_random_pairs() {
    let mut rng = rng(12);
    for round in 0..100 {
        let n = rng.gen_range(1..=5);
        let (z, raws) = random_scheme(&mut rng, n, 3);
        // half the lines pass through two of the supports so the trace is
        // often nonempty
        let l = if round % 2 == 0 && raws.len() >= 2 {
            let p = raws[0];
            let q = raws[1];
            let cross = [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ];
            match LinearForm::new(cross[0], cross[1], cross[2]) {
                Ok(l) => l,
                Err(_) => continue,
            }
        } else {
            let t = random_triple(&mut rng);
            LinearForm::new(t[0], t[1], t[2]).unwrap()
        };
        let res = residual_line(&z, &l);
        assert_eq!(z.degree(), line_trace_degree(&z, &l) + res.degree());
        // residuation never raises a multiplicity
        for fp in res.fat_points() {
            let before = z
                .fat_points()
                .iter()
                .find(|orig| orig.point == fp.point)
                .unwrap();
            assert!(fp.multiplicity <= before.multiplicity);
        }
    }
}

#[test]
fn first_cohomology_vanishes_past_the_degree() {
    let mut rng = rng(13);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let (z, _) = random_scheme(&mut rng, n, 3);
        let deg = z.degree();
        for t in [deg - 1, deg, deg + 3] {
            let (h0, h1) = h_ideal(&z, t);
            assert_eq!(h1, 0, "deg = {deg}, t = {t}");
            assert_eq!(h0, (t + 2) * (t + 1) / 2 - deg);
        }
    }
}

#[test]
fn restriction_sequence_bounds_sections() {
    // from 0 -> I_res(t-1) -> I_Z(t) -> (trace ideal on the line)(t):
    // h^0(I_Z(t)) <= h^0(I_res(t-1)) + max(t + 1 - trace, 0)
    let mut rng = rng(14);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let (z, raws) = random_scheme(&mut rng, n, 3);
        let l = {
            let p = raws[0];
            let q = random_triple(&mut rng);
            let cross = [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ];
            match LinearForm::new(cross[0], cross[1], cross[2]) {
                Ok(l) => l,
                Err(_) => continue,
            }
        };
        let res = residual_line(&z, &l);
        let trace = line_trace_degree(&z, &l);
        for t in 1..=6 {
            let (h0_z, _) = h_ideal(&z, t);
            let (h0_res, _) = h_ideal(&res, t - 1);
            let on_line = (t + 1 - trace).max(0);
            assert!(
                h0_z <= h0_res + on_line,
                "t = {t}, trace = {trace}: {h0_z} > {h0_res} + {on_line}"
            );
        }
    }
}

#[test]
fn generic_triangle_with_double_point_counts() {
    // 20 random configurations of three simple points and one double
    // point, resampled until no three supports are collinear; each
    // imposes independent conditions on conics and quartics
    let mut rng = rng(15);
    let mut done = 0;
    while done < 20 {
        let raws: Vec<[i64; 3]> = (0..4).map(|_| random_triple(&mut rng)).collect();
        let mut degenerate = false;
        for i in 0..4 {
            for j in (i + 1)..4 {
                for k in (j + 1)..4 {
                    if collinear(&raws[i], &raws[j], &raws[k]) {
                        degenerate = true;
                    }
                }
            }
        }
        if degenerate {
            continue;
        }
        let mut fat: Vec<FatPoint> = raws
            .iter()
            .take(3)
            .map(|t| {
                FatPoint::new(PlanePoint::from_ints(t[0], t[1], t[2]).unwrap(), 1).unwrap()
            })
            .collect();
        fat.push(
            FatPoint::new(
                PlanePoint::from_ints(raws[3][0], raws[3][1], raws[3][2]).unwrap(),
                2,
            )
            .unwrap(),
        );
        let z = match ZeroScheme::new(fat) {
            Ok(z) => z,
            Err(_) => continue,
        };
        assert_eq!(z.degree(), 6);
        assert_eq!(h_ideal(&z, 2), (0, 0));
        assert_eq!(h_ideal(&z, 4), (9, 0));
        done += 1;
    }
}

#[test]
fn collinearity_detection_on_random_lines() {
    let mut rng = rng(16);
    for _ in 0..10 {
        // six distinct points on a random line through two random points
        let p = random_triple(&mut rng);
        let q = random_triple(&mut rng);
        let points: Vec<PlanePoint> = (0..12)
            .filter_map(|k| {
                PlanePoint::from_ints(
                    p[0] + k * q[0],
                    p[1] + k * q[1],
                    p[2] + k * q[2],
                )
                .ok()
            })
            .collect();
        let mut distinct: Vec<PlanePoint> = Vec::new();
        for pt in points {
            if !distinct.contains(&pt) {
                distinct.push(pt);
            }
        }
        if distinct.len() < 6 {
            continue;
        }
        distinct.truncate(6);
        let z = ZeroScheme::simple(&distinct).unwrap();
        assert!(collinearity_h1_criterion(&z).unwrap());
        // nudging one point off the line breaks the criterion
        let off_raw = [p[0] + q[0] + 1, p[1] + q[1] + 3, p[2] + q[2] + 7];
        if collinear(&p, &q, &off_raw) {
            continue;
        }
        if let Ok(off) = PlanePoint::from_ints(off_raw[0], off_raw[1], off_raw[2]) {
            let mut moved = distinct.clone();
            if !moved.contains(&off) {
                moved[5] = off;
                let z2 = ZeroScheme::simple(&moved).unwrap();
                assert!(!collinearity_h1_criterion(&z2).unwrap());
            }
        }
    }
}

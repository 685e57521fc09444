mod common;

use fptkit::ci_hilbert::generic_ci;
use fptkit::groebner::hilbert_value;
use fptkit::{ci_power_hilbert, ci_power_hilbert_stable, ci_series_coeff, FieldCfg};

#[test]
fn formula_matches_groebner_on_random_complete_intersections() {
    let mut rng = common::rng(51);
    for p in [101u32, 103] {
        let field = FieldCfg::prime(p).unwrap();
        for n in 1..=2u32 {
            for d in 1..=3u32 {
                let ci = generic_ci(&field, n, d, &mut rng, 20).unwrap();
                for s in 1..=3u32 {
                    let power = ci.pow(s).unwrap();
                    let (threshold, value) = ci_power_hilbert_stable(n, d, s);
                    for t in 0..=threshold + 4 {
                        let expect = hilbert_value(&power, t as u32).unwrap() as u128;
                        assert_eq!(ci_power_hilbert(n, d, s, t), expect, "n={n} d={d} s={s} t={t}");
                    }
                    assert_eq!(ci_power_hilbert(n, d, s, threshold), value);
                }
            }
        }
    }
}

/// Small cases against ranks of degree pieces, independent of the Gröbner engine.
#[test]
fn formula_matches_rank_oracle() {
    let mut rng = common::rng(52);
    let field = FieldCfg::prime(101).unwrap();
    for (n, d, s) in [(1u32, 2u32, 2u32), (2, 2, 2), (2, 3, 1), (2, 2, 3)] {
        let ci = generic_ci(&field, n, d, &mut rng, 20).unwrap();
        let power = ci.pow(s).unwrap();
        let (threshold, _) = ci_power_hilbert_stable(n, d, s);
        for t in 0..=threshold + 2 {
            assert_eq!(ci_power_hilbert(n, d, s, t), common::hilbert_by_rank(power.gens(), t as u32) as u128);
        }
    }
}

#[test]
fn constant_from_the_threshold_on() {
    for n in 1..=4u32 {
        for d in 1..=4u32 {
            for s in 1..=4u32 {
                let (threshold, value) = ci_power_hilbert_stable(n, d, s);
                for t in threshold..=threshold + 6 {
                    assert_eq!(ci_power_hilbert(n, d, s, t), value, "n={n} d={d} s={s} t={t}");
                }
            }
        }
    }
}

#[test]
fn nondecreasing_up_to_the_threshold() {
    for n in 1..=4u32 {
        for d in 1..=4u32 {
            for s in 1..=4u32 {
                let (threshold, _) = ci_power_hilbert_stable(n, d, s);
                let row: Vec<u128> = (0..=threshold).map(|t| ci_power_hilbert(n, d, s, t)).collect();
                assert!(row.windows(2).all(|w| w[0] <= w[1]), "n={n} d={d} s={s}: {row:?}");
            }
        }
    }
}

#[test]
fn series_is_the_first_power() {
    for n in 1..=4u32 {
        for d in 1..=4u32 {
            for t in 0..12 {
                assert_eq!(ci_power_hilbert(n, d, 1, t), ci_series_coeff(n, d, t));
            }
        }
    }
}

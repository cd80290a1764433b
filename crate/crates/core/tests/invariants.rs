use anisofem::estimator::{estimator_report, Region, Weight};
use anisofem::experiments::{Case, RunOptions, TestProblem};
use proptest::prelude::*;

fn problem(kind: u8, param: f64) -> TestProblem {
    match kind {
        0 => TestProblem::sine(param).unwrap(),
        1 => TestProblem::layer(param / 4.0).unwrap(),
        _ => TestProblem::oblique(param / 4.0).unwrap(),
    }
}

fn case() -> impl Strategy<Value = (TestProblem, usize, usize)> {
    (0u8..3, 0.5f64..3.0, 2usize..10, 1usize..8).prop_map(|(k, p, n, r)| (problem(k, p), n, r * n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn estimators_split_over_a_partition((p, nx, ny) in case(), cut in 0.1f64..0.9) {
        let c = Case::solve(p, nx, ny, &RunOptions::default()).unwrap();
        let (lx, _) = p.domain();
        let left = Region::from_centroids(&c.tri, "left", |x| x[0] < cut * lx);
        let right = Region::from_centroids(&c.tri, "right", |x| x[0] >= cut * lx);
        let (a, b, all) = (c.report(&left), c.report(&right), c.global_report());
        let sq = |v: f64| v * v;
        prop_assert!((sq(a.error) + sq(b.error) - sq(all.error)).abs() <= 1e-12 * sq(all.error));
        for w in Weight::ALL {
            let (ea, eb, e) = (a.lower(w), b.lower(w), all.lower(w));
            prop_assert!((sq(ea.volume) + sq(eb.volume) - sq(e.volume)).abs() <= 1e-12 * sq(e.volume).max(1e-300));
            // edges on the cut belong to neither side
            prop_assert!(sq(ea.jump) + sq(eb.jump) <= sq(e.jump) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn short_part_bounded_by_jump_part((p, nx, ny) in case()) {
        let c = Case::solve(p, nx, ny, &RunOptions::default()).unwrap();
        let r = c.global_report();
        for w in Weight::ALL {
            let e = r.lower(w);
            prop_assert!(e.short <= e.jump * (1.0 + 1e-14));
            prop_assert!(e.jump <= e.total * (1.0 + 1e-14));
        }
        prop_assert!(r.bubble.jump <= r.uniform.jump * (1.0 + 1e-14));
        prop_assert!((r.uniform.jump - r.upper_sharp.jump).abs() <= 1e-13 * r.uniform.jump.max(1e-300));
        prop_assert!(r.upper_sharp.volume <= r.upper_coarse.volume * (1.0 + 1e-14));
    }

    #[test]
    fn scaling_the_solution_scales_every_estimate((p, nx, ny) in case(), s in 0.01f64..100.0) {
        let opts = RunOptions::default();
        let base = Case::solve(p, nx, ny, &opts).unwrap().global_report();
        let scaled = Case::solve(p.with_scale(s), nx, ny, &opts).unwrap().global_report();
        let close = |a: f64, b: f64| (a * s - b).abs() <= 1e-8 * (a * s).abs().max(1e-300);
        prop_assert!(close(base.error, scaled.error));
        prop_assert!(close(base.y, scaled.y));
        prop_assert!(close(base.upper_coarse.total, scaled.upper_coarse.total));
        for w in Weight::ALL {
            prop_assert!(close(base.lower(w).total, scaled.lower(w).total));
            prop_assert!(close(base.lower(w).short, scaled.lower(w).short));
            prop_assert!((base.effectivity(w) - scaled.effectivity(w)).abs() <= 1e-8);
        }
    }
}

#[test]
fn repeated_runs_are_identical() {
    let p = TestProblem::oblique(0.125).unwrap();
    let a = Case::solve(p, 12, 24, &RunOptions::default()).unwrap();
    let b = Case::solve(p, 12, 24, &RunOptions::default()).unwrap();
    assert_eq!(a.uh, b.uh);
    assert_eq!(a.summary().estimates, b.summary().estimates);
    assert_eq!(estimator_report(&a.indicators, &Region::whole(&a.tri)), a.global_report());
}

#[test]
fn linear_data_has_no_jumps() {
    let c = Case::solve(TestProblem::linear(), 6, 48, &RunOptions::default()).unwrap();
    assert!(c.jumps.max_abs() < 1e-10);
    assert!(c.global_report().uniform.total < 1e-10);
}

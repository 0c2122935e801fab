use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ucm_core::oracle::{full_output_state, partial_trace};
use ucm_core::verify::{run_verification, Check, MAX_CAP};
use ucm_core::{dense, CloneSpec};

#[test]
fn full_grid_matches_dense_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let report = run_verification(MAX_CAP, &mut rng).unwrap();
    for o in report.failures() {
        eprintln!(
            "N={} M={} {} deviation={:e} tol={:e}",
            o.n, o.m, o.check, o.deviation, o.tolerance
        );
    }
    assert!(report.all_passed());
    let seen: Vec<Check> = report
        .worst_by_check()
        .into_iter()
        .map(|(c, _, _)| c)
        .collect();
    for check in [
        Check::TwoClones,
        Check::CloneAncilla,
        Check::ThreeClones,
        Check::Universality,
    ] {
        assert!(seen.contains(&check), "{check} never ran");
    }
}

#[test]
fn every_clone_pair_sees_the_same_state() {
    let full = full_output_state(CloneSpec::new(2, 5).unwrap()).unwrap();
    let reference = partial_trace(&full, &[0, 1]).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            if i == j {
                continue;
            }
            let rho = partial_trace(&full, &[i, j]).unwrap();
            assert!(
                dense::max_abs_diff(rho.entries(), reference.entries()) < 1e-12,
                "pair {i},{j}"
            );
        }
    }
}

#[test]
fn every_clone_ancilla_pair_sees_the_same_state() {
    let full = full_output_state(CloneSpec::new(1, 4).unwrap()).unwrap();
    let reference = partial_trace(&full, &[0, 4]).unwrap();
    for clone in 0..4 {
        for anc in 4..7 {
            let rho = partial_trace(&full, &[clone, anc]).unwrap();
            assert!(
                dense::max_abs_diff(rho.entries(), reference.entries()) < 1e-12,
                "pair {clone},{anc}"
            );
        }
    }
}

use revpref::analysis::{analyze, AnalysisOptions};
use revpref::generators::fixtures::{self, Fixture};
use revpref::relations::{rationalization_check, revealed_from_pairs};
use revpref::{
    check_all, check_delta, check_rho, check_tau, check_warp, detect_reference_points, v_maximal,
    v_relation, weak_revealed, ChoiceCorrespondence, CompletionPolicy, Direction, Menu, Status,
    Witness,
};

fn menu(f: &Fixture, labels: &[&str]) -> Menu {
    f.dataset.universe().menu(labels).unwrap()
}

fn idx(f: &Fixture, label: &str) -> usize {
    f.dataset.universe().index_of(label).unwrap()
}

#[test]
fn every_fixture_meets_its_expectations() {
    for f in fixtures::fixtures() {
        let verdicts = check_all(&f.dataset);
        let e = &f.expected;
        for (verdict, want) in verdicts
            .iter()
            .zip([e.tau, e.rho, e.warp, e.v_axiom, e.delta])
        {
            if let Some(want) = want {
                assert_eq!(verdict.status, want, "{} {}", f.name, verdict.axiom.name());
            }
        }
        if let Some(count) = e.reference_points {
            assert_eq!(
                detect_reference_points(&f.dataset).len(),
                count,
                "{}",
                f.name
            );
        }
    }
}

#[test]
fn example1_first_rho_witness() {
    let f = fixtures::example1();
    let rho = check_rho(&f.dataset);
    assert_eq!(
        rho.first_witness(),
        Some(&Witness::Rho {
            x: idx(&f, "d"),
            y: idx(&f, "a"),
            b: menu(&f, &["b", "k"]),
            direction: Direction::Backward,
        })
    );
}

#[test]
fn example1_revealed_preference_is_a_preference_that_fails_at_the_full_menu() {
    let f = fixtures::example1();
    let (strict, weak) = revealed_from_pairs(&f.dataset).unwrap();
    assert!(strict.is_strict_preference());
    assert!(weak.is_weak_preference());
    let check = rationalization_check(&f.dataset, &strict, true);
    assert_eq!(check.outcome(), Some(false));
    assert_eq!(check.failures.len(), 1);
    let failure = check.failures[0];
    assert_eq!(failure.menu, menu(&f, &["a", "b", "k", "d"]));
    assert_eq!(failure.expected, menu(&f, &["a"]));
    assert_eq!(failure.actual, menu(&f, &["a", "d"]));
}

#[test]
fn example1_warp_witness() {
    let f = fixtures::example1();
    assert_eq!(
        check_warp(&f.dataset).first_witness(),
        Some(&Witness::Warp {
            a: menu(&f, &["b", "d"]),
            b: menu(&f, &["a", "b", "k", "d"]),
            x: idx(&f, "b"),
            y: idx(&f, "d"),
        })
    );
}

#[test]
fn example2_first_tau_witness_and_transitivity_failure() {
    let f = fixtures::example2();
    let tau = check_tau(&f.dataset);
    assert_eq!(tau.violation_count, 1);
    assert_eq!(
        tau.first_witness(),
        Some(&Witness::Tau {
            x: idx(&f, "a"),
            y: idx(&f, "k"),
            z: idx(&f, "b"),
        })
    );
    let (strict, _) = revealed_from_pairs(&f.dataset).unwrap();
    assert_eq!(
        strict.negative_transitivity_violation(),
        Some((idx(&f, "a"), idx(&f, "k"), idx(&f, "b")))
    );
}

#[test]
fn example2_is_rationalized_and_normal() {
    let f = fixtures::example2();
    let c = f.dataset.complete(CompletionPolicy::Fail).unwrap();
    let (strict, _) = revealed_from_pairs(&c).unwrap();
    assert_eq!(
        rationalization_check(&c, &strict, true).outcome(),
        Some(true)
    );
    let v = v_relation(&c);
    assert_eq!(v, weak_revealed(&c));
    assert_eq!(v_maximal(Menu::full(3), &v), menu(&f, &["a", "k"]));
    assert!(check_delta(&c).is_satisfied());
    assert!(!check_tau(&c).is_satisfied());
}

#[test]
fn example2_reference_point_is_a_tie_break() {
    let f = fixtures::example2();
    let found = detect_reference_points(&f.dataset);
    assert_eq!(found.len(), 1);
    let r = found[0];
    assert_eq!((r.z, r.x, r.y), (idx(&f, "a"), idx(&f, "k"), idx(&f, "b")));
    assert!(r.reverses && !r.promotes);
}

#[test]
fn luce_raiffa_reference_point_meets_both_clauses() {
    let f = fixtures::luce_raiffa();
    let found = detect_reference_points(&f.dataset);
    assert_eq!(found.len(), 1);
    let r = found[0];
    assert_eq!((r.z, r.x, r.y), (idx(&f, "z"), idx(&f, "x"), idx(&f, "y")));
    assert!(r.promotes && r.reverses);
}

#[test]
fn set_reference_violation_uses_both_extra_alternatives() {
    let f = fixtures::set_reference();
    let rho = check_rho(&f.dataset);
    assert!(rho.is_violated());
    let Some(&Witness::Rho { b, .. }) = rho.first_witness() else {
        panic!("expected a rho witness");
    };
    assert_eq!(b, menu(&f, &["z", "w"]));
    assert!(detect_reference_points(&f.dataset).is_empty());
}

#[test]
fn delta_violation_from_a_tie_resolved_on_a_superset() {
    // c({x,y}) = {x,y}, c({x,y,z}) = {x}, everything else indifferent
    let c = ChoiceCorrespondence::from_fn(3, |m| {
        if m == Menu::full(3) {
            Menu::singleton(0)
        } else {
            m
        }
    })
    .unwrap();
    let delta = check_delta(&c);
    assert!(delta.is_violated());
    assert_eq!(
        delta.first_witness(),
        Some(&Witness::Delta {
            s: Menu::pair(0, 1),
            t: Menu::full(3),
            x: 0,
            y: 1,
        })
    );
}

#[test]
fn analysis_reports_agree_with_the_checkers() {
    let report = analyze(&fixtures::example1().dataset, AnalysisOptions::default()).unwrap();
    assert_eq!(report.verdicts.tau.status, Status::Satisfied);
    assert_eq!(report.verdicts.rho.status, Status::Violated);
    assert_eq!(report.preference.strict_is_preference, Some(true));
    assert_eq!(report.rationalization.status, Status::Violated);
    assert_eq!(report.rationalization.failures[0].actual, ["a", "d"]);

    let report = analyze(&fixtures::example2().dataset, AnalysisOptions::default()).unwrap();
    assert_eq!(report.verdicts.tau.status, Status::Violated);
    assert_eq!(report.verdicts.rho.status, Status::Satisfied);
    assert_eq!(report.preference.strict_is_preference, Some(false));
    assert_eq!(report.rationalization.status, Status::Satisfied);
    assert!(report.consistency_issues().is_empty());
}

#[test]
fn completion_unlocks_total_only_checks() {
    let data = fixtures::example1().dataset;
    let options = AnalysisOptions {
        completion: Some(CompletionPolicy::FullMenu),
        ..AnalysisOptions::default()
    };
    let report = analyze(&data, options).unwrap();
    assert_eq!(report.dataset.completion, Some("full-menu"));
    assert_eq!(report.verdicts.v_axiom.status, Status::Violated);
    // no superset of {b,k} has a singleton choice once completed
    assert_eq!(report.verdicts.delta.status, Status::Satisfied);
    // tau and rho still see the data as observed
    assert_eq!(report.verdicts.tau.status, Status::Satisfied);
}

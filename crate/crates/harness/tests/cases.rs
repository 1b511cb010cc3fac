use chebgamma::ComplexScalar;
use chebgamma_harness::{compare, find_case, run_case, verify, Status, CASES, DEFAULT_SEED};

const IDS: [&str; 13] = [
    "kernel-recurrence",
    "kernel-continuation",
    "contour-terms",
    "theorem1-int-k",
    "prop1-k1",
    "prop2-cos",
    "example1-erfc",
    "example2-golden",
    "diff-c1",
    "diff-c2",
    "diff-c3",
    "diff-c4",
    "diff-c5",
];

#[test]
fn registered_cases() {
    let ids: Vec<_> = CASES.iter().map(|c| c.id).collect();
    assert_eq!(ids, IDS);
    for (i, id) in IDS.iter().enumerate() {
        assert_eq!(find_case(id).unwrap().0, i);
    }
    for c in &CASES {
        assert!(c.tolerance > 0.0 && c.tolerance <= 1e-6, "{}", c.id);
        assert!(!c.description.is_empty() && !c.anchor.is_empty());
        let anchor = c.anchor.to_lowercase();
        for word in ["eq.", "section", "theorem", "proposition", "§"] {
            assert!(!anchor.contains(word), "{}", c.id);
        }
    }
    let Err(err) = find_case("theorem-2") else {
        panic!()
    };
    assert!(err.to_string().contains("theorem-2"));
}

#[test]
fn every_case_passes_at_several_seeds() {
    for seed in [DEFAULT_SEED, 1, 2, 3] {
        let report = verify(None, seed, false).unwrap();
        assert_eq!(report.cases.len(), 13);
        for c in &report.cases {
            assert_eq!(c.status, Status::Pass, "seed {seed}: {c:?}");
            assert!(c.rel_err <= c.tolerance || c.abs_err <= c.tolerance);
            assert!(c.wall_time_ms.is_none());
            assert!(c.rows >= 1);
        }
        assert_eq!(report.failures(), 0);
    }
}

#[test]
fn reports_are_reproducible() {
    let a = serde_json::to_string_pretty(&verify(None, 99, false).unwrap()).unwrap();
    let b = serde_json::to_string_pretty(&verify(None, 99, false).unwrap()).unwrap();
    assert_eq!(a, b);
    let c = serde_json::to_string_pretty(&verify(None, 100, false).unwrap()).unwrap();
    assert_ne!(a, c);
    assert!(!a.contains("wall_time_ms"));
    let back: chebgamma_harness::VerifyReport = serde_json::from_str(&a).unwrap();
    assert_eq!(back.seed, 99);
}

#[test]
fn a_single_case_does_not_depend_on_the_others() {
    let all = verify(None, 5, false).unwrap();
    for (i, id) in IDS.iter().enumerate() {
        assert_eq!(run_case(id, 5, false).unwrap(), all.cases[i]);
    }
    let one = verify(Some("diff-c4"), 5, false).unwrap();
    assert_eq!(one.cases.len(), 1);
    assert_eq!(one.cases[0], all.cases[11]);
}

#[test]
fn timing_is_opt_in() {
    let r = run_case("prop1-k1", DEFAULT_SEED, true).unwrap();
    assert!(r.wall_time_ms.is_some_and(|t| t >= 0.0));
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"status\":\"pass\""));
    assert!(json.contains("wall_time_ms"));
}

#[test]
fn comparison_examples() {
    let c = |re| ComplexScalar::new(re, 0.0);
    let r = compare(c(1.0 + 1e-10), c(1.0), 1e-9);
    assert!(r.pass && (r.rel_err - 1e-10).abs() < 1e-15);
    assert!(!compare(c(1.0 + 1e-8), c(1.0), 1e-9).pass);
    // near zero the absolute error decides
    assert!(compare(c(5e-10), c(0.0), 1e-9).pass);
    assert!(!compare(c(5e-9), c(0.0), 1e-9).pass);
    let r = compare(
        ComplexScalar::new(0.0, 2.0),
        ComplexScalar::new(0.0, -2.0),
        1e-9,
    );
    assert_eq!(r.abs_err, 4.0);
    assert_eq!(r.rel_err, 2.0);
}

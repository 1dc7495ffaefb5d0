//! The property suite end to end.

use thetabar::suite::{Claim, ClaimKind, Verdict};
use thetabar::{
    builtin_claims, emit_graph6, enumerate_graphs, is_tree, run_property_suite, verify_corpus, CorpusSource, CorpusSpec,
    SuiteOptions,
};

#[test]
fn full_suite_small_corpus_passes() {
    let report = verify_corpus(&CorpusSpec::connected(6), &SuiteOptions::default()).unwrap();
    assert_eq!(report.graphs, 143);
    let failed: Vec<_> = report.failed_claims().collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(report.claims.iter().all(|c| c.checked == 143));
}

#[test]
fn disconnected_corpus_passes() {
    let report = verify_corpus(&CorpusSpec::all(5), &SuiteOptions::default()).unwrap();
    assert!(report.passed, "{:#?}", report.failed_claims().collect::<Vec<_>>());
}

#[test]
fn report_is_independent_of_thread_count() {
    let graphs = enumerate_graphs(&CorpusSpec::connected(5)).unwrap();
    let claims = builtin_claims();
    let one = run_property_suite(&graphs, &claims, &SuiteOptions { threads: Some(1), max_counterexamples: 5 });
    let four = run_property_suite(&graphs, &claims, &SuiteOptions { threads: Some(4), max_counterexamples: 5 });
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
}

#[test]
fn flipped_predicate_fails_with_witness() {
    // the class count claim with its conclusion negated
    let flipped = Claim::new("one-or-three-classes-flipped", ClaimKind::Corollary, "negated", |ctx| {
        let k = ctx.theta_bar_classes.class_count();
        if ctx.m() > 0 && (k == 1 || k == 3) {
            Verdict::Fails(format!("{k} classes"))
        } else {
            Verdict::Holds
        }
    });
    let graphs = enumerate_graphs(&CorpusSpec::connected(4)).unwrap();
    let report = run_property_suite(&graphs, &[flipped], &SuiteOptions { threads: None, max_counterexamples: 2 });
    assert!(!report.passed);
    let c = &report.claims[0];
    assert_eq!(c.failures, graphs.len() - 1); // all but K1
    assert_eq!(c.counterexamples.len(), 2);
    let witness = thetabar::parse_graph6(&c.counterexamples[0].graph6).unwrap();
    assert_eq!(emit_graph6(&witness), c.counterexamples[0].graph6);
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["passed"], false);
    assert_eq!(json["claims"][0]["kind"], "corollary");
}

#[test]
fn tree_corpus_from_file() {
    let trees: Vec<String> = enumerate_graphs(&CorpusSpec::connected(7))
        .unwrap()
        .into_iter()
        .filter(is_tree)
        .map(|g| emit_graph6(&g))
        .collect();
    // 1, 1, 1, 2, 3, 6, 11 unlabelled trees on 1..=7 vertices
    assert_eq!(trees.len(), 25);
    let dir = std::env::temp_dir().join(format!("thetabar-suite-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trees.g6");
    std::fs::write(&path, trees.join("\n")).unwrap();
    let spec = CorpusSpec { n_max: 7, connected_only: true, source: CorpusSource::Graph6File(path) };
    let report = verify_corpus(&spec, &SuiteOptions::default()).unwrap();
    assert!(report.passed);
    let claim = |id: &str| report.claims.iter().find(|c| c.id == id).unwrap();
    // a cut edge exists in every tree with an edge
    assert_eq!(claim("cut-edge-forces-one-class").vacuous, 1);
    // no tree is a cycle
    assert_eq!(claim("cycle-classes").vacuous, 25);
    assert_eq!(claim("k3-free-one-class").vacuous, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

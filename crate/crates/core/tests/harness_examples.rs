use pnu::harness::{run_corpus, to_json, Corpus, RunOptions, Status, Verdict};

fn run(text: &str) -> Vec<Verdict> {
    run_corpus(&Corpus::parse(text).expect("corpus parses"), &RunOptions::default())
}

fn find<'a>(vs: &'a [Verdict], claim: &str, params: &str) -> &'a Verdict {
    vs.iter()
        .find(|v| v.claim == claim && v.params == params)
        .unwrap_or_else(|| panic!("no verdict for {claim} [{params}]"))
}

fn entry(spec: &str, suites: &str, extra: &str) -> String {
    format!("[[group]]\nspec = \"{spec}\"\nsuites = [{suites}]\n{extra}\n")
}

#[test]
fn power_commutator_examples() {
    let vs = run(&entry(
        "dihedral:32",
        "\"power-commutator\"",
        "power_commutator = [[2, 1]]",
    ));
    assert_eq!(find(&vs, "nu-power-commutator-equality", "m=2,s=1").status, Status::Pass);
    assert_eq!(find(&vs, "nu-power-commutator-lower", "m=2,s=1").status, Status::Pass);
    // gamma_2 of a dihedral group is cyclic, hence powerful
    assert_eq!(find(&vs, "nu-lcs-exponent-even", "m=2,s=1").status, Status::Pass);

    let vs = run(&entry(
        "extraspecial:3,p",
        "\"power-commutator\"",
        "power_commutator = [[1, 1]]",
    ));
    for v in &vs {
        assert_eq!(v.status, Status::HypothesisUnmet, "{}", v.claim);
    }

    let vs = run(&entry(
        "elemab:2,2",
        "\"power-commutator\"",
        "power_commutator = [[1, 1]]",
    ));
    let v = find(&vs, "nu-power-commutator-equality", "m=1,s=1");
    assert_eq!(v.status, Status::Pass);
    assert!(v.note.is_some(), "an empty range is reported with a note");
}

#[test]
fn quotient_examples() {
    let vs = run(&entry(
        "dihedral:16",
        "\"quotient-exponent\"",
        "selectors = [\"gamma:2\", \"trivial\"]",
    ));
    for params in ["N=gamma:2", "N=trivial"] {
        assert_eq!(find(&vs, "nu-exponent-by-quotient", params).status, Status::Pass);
        assert_eq!(find(&vs, "tensor-exponent-by-quotient", params).status, Status::Pass);
    }
    // the sharper bound is only claimed for p >= 5
    assert_eq!(
        find(&vs, "nu-exponent-by-quotient-sharp", "N=gamma:2").status,
        Status::HypothesisUnmet
    );

    let vs = run(&entry(
        "extraspecial:3,p",
        "\"quotient-exponent\"",
        "selectors = [\"center\"]",
    ));
    assert_eq!(find(&vs, "nu-exponent-by-quotient", "N=center").status, Status::Pass);
}

#[test]
fn maximal_class_and_coclass_examples() {
    for spec in ["dihedral:16", "quaternion:16"] {
        let vs = run(&entry(spec, "\"maximal-class\", \"tensor-exponent\"", ""));
        for claim in [
            "nu-exponent-maximal-class",
            "mu-tensor-exponent-maximal-class",
            "tensor-exponent-maximal-class-two",
            "maximal-class-g1-power",
            "tensor-exponent-class-log",
            "tensor-exponent-coclass-even",
            "schur-mu-exponent-coclass-even",
        ] {
            assert_eq!(find(&vs, claim, "").status, Status::Pass, "{spec} {claim}");
        }
        assert_eq!(find(&vs, "tensor-exponent-coclass-odd", "").status, Status::HypothesisUnmet);
    }

    let vs = run(&entry("extraspecial:3,p", "\"tensor-exponent\"", ""));
    assert_eq!(find(&vs, "tensor-exponent-class-log", "").status, Status::Pass);
    assert_eq!(find(&vs, "tensor-exponent-coclass-odd", "").status, Status::Pass);

    // cyclic of prime order has coclass 0
    let vs = run(&entry("cyclic:3", "\"tensor-exponent\", \"maximal-class\"", ""));
    assert_eq!(find(&vs, "tensor-exponent-coclass-odd", "").status, Status::HypothesisUnmet);
    assert_eq!(find(&vs, "nu-exponent-maximal-class", "").status, Status::HypothesisUnmet);
}

#[test]
fn structure_examples() {
    let vs = run(&entry("cyclic:2", "\"nu-structure\"", "selectors = []"));
    assert_eq!(find(&vs, "nu-coclass-lower-bound", "").status, Status::Pass);
    assert_eq!(find(&vs, "nu-order-decomposition", "").status, Status::Pass);

    let vs = run(&entry("extraspecial:3,p", "\"nu-structure\"", "selectors = []"));
    let chain = find(&vs, "nu-exponent-chain", "");
    assert_eq!(chain.status, Status::Pass);
    assert!(chain.checks.len() > 3, "odd abelianization adds the refined bound");
}

#[test]
fn empty_corpus_gives_empty_report() {
    let vs = run("");
    assert!(vs.is_empty());
    assert_eq!(to_json(&vs), "[]\n");
}

#[test]
fn oversized_entry_is_isolated() {
    let text = entry("dihedral:16", "\"nu-structure\"", "max_elements = 100\nselectors = []")
        + &entry("cyclic:4", "\"nu-structure\"", "selectors = []");
    let vs = run(&text);
    for v in vs.iter().filter(|v| v.group == "dihedral:16") {
        assert_eq!(v.status, Status::ResourceExceeded, "{}", v.claim);
    }
    let others: Vec<_> = vs.iter().filter(|v| v.group == "cyclic:4").collect();
    assert!(!others.is_empty());
    assert!(others.iter().all(|v| v.status == Status::Pass));
}

#[test]
fn reports_depend_only_on_corpus_and_seed() {
    let text = entry("quaternion:8", "\"hall\", \"nu-structure\"", "selectors = [\"center\"]");
    let corpus = Corpus::parse(&text).unwrap();
    let with = |seed: u64, jobs: usize| {
        let opts = RunOptions {
            seed: Some(seed),
            jobs,
            ..RunOptions::default()
        };
        to_json(&run_corpus(&corpus, &opts))
    };
    assert_eq!(with(7, 1), with(7, 1));
    assert_eq!(with(7, 1), with(7, 4));
    assert_ne!(with(7, 1), with(8, 1), "sampled claims record their seed");
}

#[test]
fn fails_carry_witnesses_and_serialize_as_strings() {
    let vs = run(&entry("dihedral:8", "\"oracles\"", ""));
    let json: serde_json::Value = serde_json::from_str(&to_json(&vs)).unwrap();
    for v in json.as_array().unwrap() {
        assert!(v["claim"].is_string() && v["statement"].is_string());
        for c in v["checks"].as_array().unwrap() {
            assert!(c["lhs"].is_string() && c["rhs"].is_string());
        }
        if v["status"] == "fail" {
            assert!(v["witness"].is_string());
        }
    }
}

#[test]
fn malformed_corpus_is_rejected() {
    assert!(Corpus::parse("[[group]]\nspec = \"dihedral:16\"\nsuites = [\"nope\"]\n").is_err());
    assert!(Corpus::parse("[[group]]\nspec = \"dihedral:15\"\n").is_err());
    assert!(Corpus::parse("[[group]]\nspec = \"cyclic:4\"\nselectors = [\"gamma:x\"]\n").is_err());
    assert!(Corpus::parse("[[group]]\nspec = \"cyclic:4\"\nunknown = 1\n").is_err());
}

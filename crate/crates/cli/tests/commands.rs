use std::fs;
use std::path::Path;

use proptest::prelude::*;
use relcat::emit;
use relcat::resolve::{load, Structure};
use relcat::syntax::{parse, print};
use relcat::{EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use relcat_core::frobenius::FrobCandidate;
use relcat_core::groupoid::Semigroupoid;
use relcat_core::relcore::{Carrier, FinSet, Rel};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn relcat(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = relcat::run(
        std::iter::once("relcat").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.struct"))
        .to_str()
        .unwrap()
        .to_owned()
}

fn json_lines(out: &str) -> Vec<serde_json::Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn check_exit_codes() {
    assert_eq!(relcat(&["check", "frob", &fixture("Z2")]).code, EXIT_PASS);
    let r = relcat(&["check", "frob", &fixture("SL2"), "--explain"]);
    assert_eq!(r.code, EXIT_FAIL);
    assert!(
        r.out
            .contains("F                            FAIL  witness [e, a, a, e] (left)"),
        "{}",
        r.out
    );
    // the equation line follows the failing report
    let after = r
        .out
        .lines()
        .skip_while(|l| !l.contains("FAIL  witness"))
        .nth(1)
        .unwrap();
    assert!(after.starts_with("      ea = ae"), "{after}");
    assert_eq!(relcat(&["check", "sgpd", &fixture("RB2")]).code, EXIT_FAIL);
    assert_eq!(relcat(&["check", "weak", &fixture("M5")]).code, EXIT_PASS);
}

#[test]
fn strict_adds_informational_reports_only() {
    let plain = relcat(&["check", "frob", &fixture("Z2")]);
    let strict = relcat(&["--json-lines", "check", "frob", &fixture("Z2"), "--strict"]);
    assert_eq!(strict.code, plain.code);
    let extra: Vec<_> = json_lines(&strict.out)
        .into_iter()
        .filter(|v| v["type"] == "report" && v["informational"] == true)
        .collect();
    assert_eq!(extra.len(), 1);
    let sg = relcat(&["--json-lines", "check", "sgpd", &fixture("RB2"), "--strict"]);
    let laws: Vec<_> = json_lines(&sg.out)
        .into_iter()
        .filter(|v| v["informational"] == true)
        .map(|v| v["law"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(laws, ["literal-local-cancellativity"]);
}

#[test]
fn json_lines_schema() {
    let r = relcat(&["--json-lines", "check", "hstar", &fixture("SL2")]);
    assert_eq!(r.code, EXIT_FAIL);
    let lines = json_lines(&r.out);
    let last = lines.last().unwrap();
    assert_eq!(last["type"], "result");
    assert_eq!(last["passed"], false);
    let h = lines.iter().find(|v| v["law"] == "H").unwrap();
    assert_eq!(h["verdict"], "fail");
    assert_eq!(h["elements"][0], "{a}");
    for key in ["structure", "kind", "clause", "equation", "unit", "note"] {
        assert!(h.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn parse_errors_are_located() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.struct");
    fs::write(&path, "set X = { e }\nrel m : X * X -> X {\n  (e, q) -> e\n}\n").unwrap();
    let p = path.to_str().unwrap();
    let r = relcat(&["check", "frob", p]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("bad.struct:3:"), "{}", r.err);
    let r = relcat(&["--json-lines", "check", "frob", p]);
    let v = &json_lines(&r.out)[0];
    assert_eq!((v["type"].as_str(), v["line"].as_u64()), (Some("diagnostic"), Some(3)));
}

#[test]
fn usage_errors() {
    assert_eq!(relcat(&["check", "frob"]).code, EXIT_USAGE);
    assert_eq!(relcat(&["check", "frob", "/no/such/file"]).code, EXIT_USAGE);
    assert_eq!(relcat(&["check", "groupoid", &fixture("Z2")]).code, EXIT_USAGE);
    assert_eq!(relcat(&["--help"]).code, EXIT_PASS);
}

#[test]
fn convert_and_check_again() {
    let dir = tempfile::tempdir().unwrap();
    let gpd = dir.path().join("p2_gpd.struct");
    let r = relcat(&["convert", "frob-to-gpd", &fixture("P2"), "-o", gpd.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.out);
    assert_eq!(relcat(&["check", "groupoid", gpd.to_str().unwrap()]).code, EXIT_PASS);
    assert_eq!(relcat(&["roundtrip", "gpd", gpd.to_str().unwrap()]).code, EXIT_PASS);

    let back = relcat(&["convert", "gpd-to-frob", gpd.to_str().unwrap()]);
    assert_eq!(back.code, EXIT_PASS);
    let frob = fs::read_to_string(fixture("P2")).unwrap();
    assert_eq!(
        load(&back.out).unwrap().structures[0].structure,
        load(&frob).unwrap().structures[0].structure
    );

    let r = relcat(&["convert", "frob-to-gpd", &fixture("SL2")]);
    assert_eq!(r.code, EXIT_FAIL);
    assert!(r.out.contains("precondition failed: F"), "{}", r.out);
    assert_eq!(relcat(&["convert", "sgpd-to-hstar", &fixture("RB2")]).code, EXIT_FAIL);
}

#[test]
fn roundtrip_commands() {
    assert_eq!(relcat(&["roundtrip", "frob", &fixture("D2")]).code, EXIT_PASS);
    assert_eq!(relcat(&["roundtrip", "frob", &fixture("SL2")]).code, EXIT_FAIL);
    assert_eq!(relcat(&["roundtrip", "sgpd", &fixture("RB2")]).code, EXIT_FAIL);
}

#[test]
fn enumerate_and_emit() {
    let r = relcat(&["enumerate", "gpd", "--size", "3", "--count-only"]);
    assert_eq!(
        (r.code, r.out.as_str()),
        (EXIT_PASS, "gpd census, n = 3: 10 structures\n")
    );

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let r = relcat(&["enumerate", "frob", "--size", "2", "--emit", d]);
    assert_eq!(r.code, EXIT_PASS);
    let manifest = fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
    assert!(manifest.contains("count 3\n"), "{manifest}");
    for i in 1..=3 {
        let f = dir.path().join(format!("frob_2_{i:03}.struct"));
        assert_eq!(relcat(&["check", "frob", f.to_str().unwrap()]).code, EXIT_PASS);
    }
}

#[test]
fn enumeration_output_is_deterministic() {
    let a = relcat(&["enumerate", "hstar", "--size", "3"]);
    let b = relcat(&["enumerate", "hstar", "--size", "3"]);
    assert_eq!(a.out, b.out);
}

#[test]
fn caps_give_exit_three() {
    assert_eq!(relcat(&["enumerate", "frob", "--size", "4"]).code, EXIT_CAP);
    assert_eq!(relcat(&["enumerate", "gpd", "--size", "5"]).code, EXIT_CAP);
    assert_eq!(relcat(&["crosscheck", "thm1", "--size", "4"]).code, EXIT_CAP);
}

#[test]
fn crosscheck_reports() {
    let r = relcat(&["crosscheck", "thm1", "--size", "2"]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(r.out.contains("bijection of size 3"), "{}", r.out);
    assert_eq!(relcat(&["crosscheck", "thm23", "--size", "3"]).code, EXIT_PASS);
}

#[test]
fn quotient_of_m5() {
    let r = relcat(&["quotient", &fixture("M5"), "--projector", "4"]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(r.out.starts_with("# M5 by 4: classes {0} {1, 4} {2, 3}\n"), "{}", r.out);
    let doc = load(&r.out).unwrap();
    let Structure::Monoid(q) = &doc.structures[0].structure else {
        panic!("not a monoid")
    };
    assert_eq!(q.carrier().labels(), ["0", "1_4", "2_3"]);
    assert_eq!(
        relcat(&["quotient", &fixture("M5"), "--projector", "2"]).code,
        EXIT_FAIL
    );
    assert_eq!(
        relcat(&["quotient", &fixture("M5"), "--projector", "9"]).code,
        EXIT_USAGE
    );
}

// ---------------------------------------------------------------------------
// printing then parsing any in-memory structure gives it back

fn frob_candidate() -> impl Strategy<Value = FrobCandidate> {
    (0usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::bool::weighted(0.25), n * n * n)))
        .prop_map(|(n, bits)| {
            let x = FinSet::numbered("X", n).into_arc();
            let pairs = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| (i / n, i % n));
            FrobCandidate::new(
                x.clone(),
                Rel::from_pairs(Carrier::power(&x, 2), Carrier::of(&x), pairs).unwrap(),
            )
            .unwrap()
        })
}

fn semigroupoid() -> impl Strategy<Value = Semigroupoid> {
    (1usize..=3, 0usize..=4)
        .prop_flat_map(|(o, a)| {
            (
                Just((o, a)),
                prop::collection::vec(0..o, a),
                prop::collection::vec(0..o, a),
                prop::collection::vec(prop::option::of(0..a.max(1)), a * a),
            )
        })
        .prop_map(|((o, a), s, t, comp)| {
            let arrows = FinSet::new("A", (0..a).map(|i| format!("f{i}'"))).unwrap().into_arc();
            Semigroupoid::new(FinSet::numbered("O", o).into_arc(), arrows, s, t, comp).unwrap()
        })
}

proptest! {
    #[test]
    fn frob_candidates_survive_print_and_parse(c in frob_candidate()) {
        let text = print(&emit::frob("C", &c));
        let back = load(&text).unwrap();
        prop_assert_eq!(&back.structures[0].structure, &Structure::Frob(c));
        prop_assert_eq!(print(&parse(&text).unwrap()), text);
    }

    #[test]
    fn semigroupoids_survive_print_and_parse(g in semigroupoid()) {
        let text = print(&emit::sgpd("S", &g));
        let back = load(&text).unwrap();
        prop_assert_eq!(&back.structures[0].structure, &Structure::Sgpd(g));
    }
}

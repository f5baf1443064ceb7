use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

use platcover_cli::input::{CoveringFile, NamedPlat};
use platcover_cli::report::{classify_report, cover_report, info, specialize_report};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_platcover"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn named(text: &str, strands: usize) -> NamedPlat {
    NamedPlat {
        name: None,
        plat: platcover::PlatPresentation::parse(text, strands).unwrap(),
    }
}

fn covering(p: u64, weights: &[i64]) -> CoveringFile {
    CoveringFile {
        p,
        weights: weights.to_vec(),
    }
}

#[test]
fn info_on_catalog_entries() {
    let hopf = json(&["info", "--catalog", "hopf"]);
    assert_eq!(hopf["mu"], 2);
    assert_eq!(hopf["linking"]["lk"][0][1].as_i64().unwrap().abs(), 1);
    assert_eq!(hopf["conditions"]["c1"], true);
    assert_eq!(hopf["conditions"]["c2"], true);

    assert_eq!(json(&["info", "--catalog", "trefoil"])["mu"], 1);

    let unlink = json(&["info", "--catalog", "unlink2"]);
    assert_eq!(unlink["mu"], 2);
    assert_eq!(unlink["linking"]["lk"], serde_json::json!([[0, 0], [0, 0]]));
}

#[test]
fn seed_orientation_flips_linking_sign() {
    let a = json(&["info", "--catalog", "hopf"]);
    let b = json(&["info", "--catalog", "hopf", "--seed-orientation", "2:backward"]);
    assert_eq!(a["linking"]["lk"][0][1], -b["linking"]["lk"][0][1].as_i64().unwrap());
    assert_eq!(
        run(&["info", "--catalog", "hopf", "--seed-orientation", "3:forward"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn plat_and_covering_files() {
    let mut plat = NamedTempFile::new().unwrap();
    write!(plat, r#"{{"strands": 4, "word": [1], "name": "twist"}}"#).unwrap();
    let mut cov = NamedTempFile::new().unwrap();
    write!(cov, r#"{{"p": 3, "weights": [1, 2]}}"#).unwrap();
    let path = plat.path().to_str().unwrap();

    let s = json(&["specialize", path]);
    assert_eq!(s["output"]["word"], serde_json::json!([-1, 1]));
    assert_eq!(s["trace"], serde_json::json!([{"move": "II", "i": 1, "sign": -1}]));
    assert_eq!(s["input"]["name"], "twist");

    let c = json(&["cover", "genus", path, "--covering", cov.path().to_str().unwrap()]);
    assert!(c["notice"].is_string());
    assert_eq!(c["genus"], 2);
    assert_eq!(c["lift_check"], true);
}

#[test]
fn inline_words() {
    let v = json(&["info", "--word", "-1 1 2 2", "--strands", "4"]);
    assert_eq!(v["plat"]["word"], serde_json::json!([-1, 1, 2, 2]));
    assert!(v["plat"].get("name").is_none());
}

#[test]
fn exit_codes() {
    // usage and parse errors
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["info"]).status.code(), Some(1));
    assert_eq!(run(&["info", "--word", "1 0", "--strands", "4"]).status.code(), Some(1));
    assert_eq!(run(&["info", "--word", "1", "--strands", "5"]).status.code(), Some(1));
    assert_eq!(run(&["info", "--catalog", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["info", "/nonexistent/plat.json"]).status.code(), Some(1));
    let mut bad = NamedTempFile::new().unwrap();
    write!(bad, "{{\"strands\": 4,\n \"word\": [1,,]}}").unwrap();
    let out = run(&["info", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    // precondition violations
    let nonspecial = [
        "cover",
        "genus",
        "--catalog",
        "parity1",
        "--p",
        "3",
        "--weights",
        "1,2",
        "--no-specialize",
    ];
    assert_eq!(run(&nonspecial).status.code(), Some(2));
    assert_eq!(
        run(&["cover", "genus", "--catalog", "hopf", "--p", "3", "--weights", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["cover", "genus", "--catalog", "hopf", "--p", "3", "--weights", "1,3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["cover", "classify", "--p", "6", "--weights", "2,4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["cover", "bounds", "--p", "1", "--genus", "2"]).status.code(),
        Some(2)
    );

    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn cover_subcommands() {
    let c = json(&["cover", "classify", "--p", "6", "--weights", "1,-1"]);
    assert_eq!(c["weights"], serde_json::json!([1, 5]));
    assert_eq!(c["finest"], "almost-strictly-cyclic");

    let b = json(&["cover", "bounds", "--p", "4", "--genus", "3", "--bridges", "2"]);
    assert_eq!(b["bridge_bound"], 3);
    assert_eq!(b["genus_bound"], 3);
    assert_eq!(b["p_star"], 2);

    let l = json(&[
        "cover",
        "lift-check",
        "--p",
        "4",
        "--weights",
        "1,3,3,1",
        "--perm",
        "2,1,3,4",
    ]);
    assert_eq!(l["lifts"], false);
    assert_eq!(
        run(&[
            "cover",
            "lift-check",
            "--p",
            "4",
            "--weights",
            "1,3,3,1",
            "--perm",
            "1,1,3,4"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "cover",
            "lift-check",
            "--p",
            "4",
            "--weights",
            "1,3,3,1",
            "--perm",
            "1,2,3"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn catalog_commands() {
    let list = json(&["catalog", "list"]);
    let names: Vec<&str> = list
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["unlink2", "hopf", "trefoil", "parity1", "chain3"]);
    assert_eq!(json(&["catalog", "show", "chain3"])["strands"], 6);
    let text = run(&["--text", "catalog", "list"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("trefoil"));
}

#[test]
fn text_output() {
    let out = run(&["specialize", "--catalog", "parity1", "--text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("II(1, -1)"), "{s}");
    assert!(s.contains("preserved: true"));
}

#[test]
fn cover_report_values() {
    let trefoil = named("2 2 2", 4);
    let r = cover_report(&trefoil, &covering(2, &[1]), true).unwrap();
    assert_eq!((r.genus, r.bounds.genus_bound), (1, 1));
    let r = cover_report(&trefoil, &covering(5, &[1]), true).unwrap();
    assert_eq!(r.genus, 4);
    assert_eq!(r.bounds.bridge_bound, 2);

    let hopf = named("2 2", 4);
    let r = cover_report(&hopf, &covering(6, &[2, 3]), true).unwrap();
    assert_eq!(r.finest, "monodromy-cyclic");
    assert_eq!(r.classification.flags(), [false, false, false, false, true]);
    assert!(r.connected);
    assert!(r.notice.is_none());
}

#[test]
fn specialize_report_tables() {
    let r = specialize_report(&named("2 1 3 2 4", 6)).unwrap();
    assert!(r.conditions.c1 && r.conditions.c2);
    assert!(r.invariants.preserved);
    assert_eq!(r.invariants.before, r.invariants.after);

    let r = specialize_report(&named("2 2", 4)).unwrap();
    assert!(r.trace.is_empty());
}

#[test]
fn info_and_classify_reports() {
    let r = info(&named("1", 4), None).unwrap();
    assert!(!r.conditions.c2);
    assert!(!r.condition2prime_exists);
    assert!(!r.parity_preserved);
    assert_eq!(r.permutation, "(1 2)");

    let c = classify_report(&covering(5, &[2, 2, 2])).unwrap();
    assert_eq!(c.finest, "strictly-cyclic");
}

#[test]
fn gluing_map_lifts_for_specialized_plats() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let strands = 2 * rng.gen_range(1..=4usize);
        let word: Vec<i64> = (0..rng.gen_range(0..20))
            .map(|_| rng.gen_range(1..strands as i64) * if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        let input = NamedPlat {
            name: None,
            plat: platcover::PlatPresentation::from_signed(strands, &word).unwrap(),
        };
        let mu = platcover::components(&input.plat).mu();
        let weights: Vec<i64> = (1..=mu as i64).collect();
        let r = cover_report(&input, &covering(7, &weights), true).unwrap();
        assert!(r.lift_check, "{word:?}");
        assert_eq!(r.bounds.genus_bound as i64, r.genus);
    }
}

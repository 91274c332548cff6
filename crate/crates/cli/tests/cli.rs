use std::path::Path;
use std::process::Command;

use isotypic::lr::tensor_multi;
use isotypic::Signature;
use isotypic_cli::model::DecompositionOut;
use isotypic_cli::run;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("isotypic").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn with_cache(path: &Path, args: &[&str]) -> Outcome {
    let mut v = vec!["--cache", path.to_str().unwrap()];
    v.extend_from_slice(args);
    invoke(&v)
}

fn cache_lines(path: &Path) -> Vec<serde_json::Value> {
    std::fs::read_to_string(path).unwrap().lines().filter_map(|l| serde_json::from_str(l).ok()).collect()
}

#[test]
fn help_and_version_exit_zero() {
    let h = invoke(&["--help"]);
    assert_eq!(h.code, 0);
    assert!(h.stdout.contains("tensor"));
    assert_eq!(invoke(&["--version"]).code, 0);
    assert_eq!(invoke(&["fock", "--help"]).code, 0);
}

#[test]
fn usage_errors_exit_two_and_list_subcommands() {
    for args in [&[][..], &["frobnicate"][..], &["fock"][..]] {
        let o = invoke(args);
        assert_eq!(o.code, 2, "{args:?}");
        if args.len() != 1 || args[0] != "fock" {
            assert!(o.stderr.contains("tensor, branch, reciprocity, identity-mult, dim, fock"), "{}", o.stderr);
        }
    }
    assert_eq!(invoke(&["tensor", "1", "2"]).code, 2);
    assert_eq!(invoke(&["tensor", "--stable", "--rank", "2", "1"]).code, 2);
    assert_eq!(invoke(&["dim", "--group", "e8", "--rank", "3", "1"]).code, 2);
    assert_eq!(invoke(&["branch", "--to", "so", "--rank", "x", "1"]).code, 2);
}

#[test]
fn domain_errors_exit_one_with_error_name() {
    let o = invoke(&["dim", "--group", "u", "--rank", "2", "1,x"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error: ParseSignature"), "{}", o.stderr);
    let o = invoke(&["branch", "--to", "sp", "--rank", "5", "1"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("OddRank"), "{}", o.stderr);
    let o = invoke(&["branch", "--to", "so", "--rank", "4", "1,1"]);
    assert!(o.stderr.contains("OutsideStableRange"), "{}", o.stderr);
    let o = invoke(&["fock", "pair", "Z[1][1] +", "1"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("ParsePolynomial"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn documented_examples() {
    let o = invoke(&["dim", "--group", "so", "--rank", "3", "2"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "5\n"));
    let o = invoke(&["--json", "tensor", "--stable", "1", "1"]);
    assert_eq!(
        o.stdout,
        "{\"group\":{\"family\":\"u\",\"rank\":\"stable\"},\"k0\":2,\"terms\":[{\"signature\":[2],\"mult\":1},{\"signature\":[1,1],\"mult\":1}]}\n"
    );
    let o = invoke(&["--json", "branch", "--to", "so", "--rank", "5", "3"]);
    assert_eq!(
        o.stdout,
        "{\"group\":{\"family\":\"so\",\"rank\":5},\"terms\":[{\"signature\":[3],\"mult\":1},{\"signature\":[1],\"mult\":1}]}\n"
    );
    let o = invoke(&["tensor", "--group", "u", "--rank", "2", "1", "2", "2", "3"]);
    assert!(o.stdout.contains("     2  (4,4)\n"), "{}", o.stdout);
    let o = invoke(&["fock", "pair", "Z[1][1]^3 + i*Z[1][2]", "Z[1][1]^3 + Z[1][2]"]);
    assert_eq!(o.stdout, "6+i\n");
}

#[test]
fn mixed_signatures_at_finite_rank() {
    let o = invoke(&["--json", "tensor", "--rank", "2", "1,0", "0,-1"]);
    assert_eq!(o.code, 0);
    let d: DecompositionOut = serde_json::from_str(&o.stdout).unwrap();
    let m = d.to_mixed().unwrap();
    assert_eq!(m.total_multiplicity(), 2);
    assert_eq!(invoke(&["tensor", "--rank", "3", "1,0", "0,-1"]).code, 1);
    assert_eq!(invoke(&["tensor", "--stable", "1,0", "0,-1"]).code, 1);
}

#[test]
fn json_round_trips_to_equal_decompositions() {
    for (rank, sigs) in [(3, vec!["2,1", "1"]), (2, vec!["1", "2", "2", "3"]), (4, vec!["1,1", "2,1"])] {
        let mut args = vec!["--json".to_string(), "tensor".into(), "--rank".into(), rank.to_string()];
        args.extend(sigs.iter().map(|s| s.to_string()));
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = invoke(&args);
        let parsed: DecompositionOut = serde_json::from_str(&o.stdout).unwrap();
        let factors: Vec<Signature> = sigs.iter().map(|s| s.parse().unwrap()).collect();
        let expected = tensor_multi(&factors, rank).unwrap();
        assert_eq!(parsed.to_decomposition().unwrap(), expected);
        assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", o.stdout);
    }
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let commands: Vec<Vec<&str>> = vec![
        vec!["tensor", "--stable", "1", "2", "2", "3"],
        vec!["--json", "branch", "--to", "sp", "--stable", "2,1"],
        vec!["reciprocity", "--n", "2", "--k", "5", "2,1"],
        vec!["identity-mult", "--mu", "2,1", "1", "2"],
        vec!["--json", "fock", "verify", "sl2", "--k", "3"],
        vec!["fock", "hwv", "--kind", "gl", "--sig", "2,1", "--n", "2", "--k", "3", "--seed", "7"],
    ];
    for args in &commands {
        let fresh = invoke(args);
        let miss = with_cache(&path, args);
        let hit = with_cache(&path, args);
        assert_eq!(fresh.code, 0, "{args:?}: {}", fresh.stderr);
        assert_eq!(fresh.stdout, miss.stdout);
        assert_eq!(fresh.stdout, hit.stdout);
        assert!(hit.stderr.is_empty(), "{}", hit.stderr);
    }
    assert_eq!(cache_lines(&path).len(), commands.len());
}

#[test]
fn cache_hits_are_served_from_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let args = ["dim", "--group", "u", "--rank", "3", "2,1"];
    assert_eq!(with_cache(&path, &args).stdout, "8\n");
    let mut rec = cache_lines(&path).remove(0);
    rec["result"]["dim"] = "999".into();
    std::fs::write(&path, rec.to_string() + "\n").unwrap();
    assert_eq!(with_cache(&path, &args).stdout, "999\n");
}

#[test]
fn version_bump_ignores_old_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let args = ["dim", "--group", "sp", "--rank", "4", "1"];
    with_cache(&path, &args);
    let mut rec = cache_lines(&path).remove(0);
    rec["result"]["dim"] = "999".into();
    rec["engine_version"] = "isotypic-0.0.0".into();
    rec["key"] = isotypic_cli::cache::cache_key(rec["query"].as_str().unwrap(), "isotypic-0.0.0").into();
    std::fs::write(&path, rec.to_string() + "\n").unwrap();
    let o = with_cache(&path, &args);
    assert_eq!(o.stdout, "4\n");
    assert_eq!(cache_lines(&path).len(), 2);
}

#[test]
fn corrupt_lines_warn_but_never_fail() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    std::fs::write(&path, "garbage\n{\"key\":1}\n").unwrap();
    let args = ["--json", "tensor", "--rank", "3", "2", "1"];
    let o = with_cache(&path, &args);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, invoke(&args).stdout);
    assert!(o.stderr.contains("warning: skipping corrupt cache line 1"), "{}", o.stderr);
    let again = with_cache(&path, &args);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn unwritable_cache_only_warns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("cache.jsonl");
    let o = with_cache(&path, &["dim", "--group", "so", "--rank", "5", "1"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "5\n"));
    assert!(o.stderr.contains("warning: cannot write cache"), "{}", o.stderr);
}

#[test]
fn same_seed_same_bytes() {
    for seed in ["0", "1", "12345"] {
        let args = ["--json", "--seed", seed, "fock", "hwv", "--kind", "gl", "--sig", "3,1,1", "--n", "3", "--k", "4"];
        let a = invoke(&args);
        let b = invoke(&args);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, b.stdout);
        assert!(a.stdout.contains("\"pass\":true"));
    }
}

#[test]
fn hwv_checks_report() {
    let o = invoke(&["fock", "hwv", "--kind", "so_general", "--sig", "2,1", "--n", "2", "--k", "5"]);
    assert!(o.stdout.contains("harmonic: pass") && o.stdout.contains("left_lower: pass"), "{}", o.stdout);
    let o = invoke(&["fock", "hwv", "--kind", "upq", "--sig", "2,0,0,-1", "--n", "1", "--q", "1", "--k", "4"]);
    assert!(o.stdout.contains("mixed_harmonic: pass"), "{}", o.stdout);
    let o = invoke(&["fock", "hwv", "--kind", "so_rank1", "--sig", "3", "--k", "4"]);
    assert!(o.stdout.contains("harmonic: pass"), "{}", o.stdout);
}

#[test]
fn binary_reads_cache_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_isotypic"))
        .args(["dim", "--group", "u", "--rank", "4", "2,2"])
        .env("ISOTYPIC_CACHE", &path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "20\n");
    assert_eq!(cache_lines(&path).len(), 1);
    let bad = Command::new(env!("CARGO_BIN_EXE_isotypic")).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

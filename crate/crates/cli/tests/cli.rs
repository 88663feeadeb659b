use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use spinterp::blackbox::{make_instance, InstanceConfig};
use spinterp::decode::power_probe_plan;
use spinterp::format::{parse_instance, parse_result, write_instance, write_poly};
use spinterp::{Basis, SparsePoly};

fn spinterp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinterp")).args(args).output().expect("binary runs")
}

fn gen(dir: &Path, name: &str, basis: &str, b: u32, d: u32, e: u32, seed: u64) -> std::path::PathBuf {
    let out = dir.join(name);
    let o = spinterp(&[
        "gen",
        "--p",
        "10007",
        "--basis",
        basis,
        "--B",
        &b.to_string(),
        "--D",
        &d.to_string(),
        "--E",
        &e.to_string(),
        "--seed",
        &seed.to_string(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.spi", "power", 2, 50, 2, 7);
    let b = gen(dir.path(), "b.spi", "power", 2, 50, 2, 7);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let c = gen(dir.path(), "c.spi", "power", 2, 50, 2, 8);
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn decode_lists_the_hidden_polynomial_for_each_residue_class() {
    let dir = tempfile::tempdir().unwrap();
    for (basis, e) in [("power", 3), ("power", 4), ("power", 5), ("cheb1", 2), ("cheb1", 3)] {
        let inst_path = gen(dir.path(), "inst.spi", basis, 2, 40, e, 100 + e as u64);
        let out = dir.path().join("res.txt");
        let o = spinterp(&["decode", "--instance", inst_path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{basis} E={e}: {}", String::from_utf8_lossy(&o.stderr));
        let inst = parse_instance(&fs::read_to_string(&inst_path).unwrap()).unwrap();
        let res = parse_result(&fs::read_to_string(&out).unwrap()).unwrap();
        let hit = res.candidates.iter().find(|c| c.poly == inst.hidden).expect("hidden polynomial listed");
        assert_eq!(hit.mismatches.len(), e as usize);
        assert!(res.candidates.iter().all(|c| c.mismatches.len() <= e as usize));
    }
}

#[test]
fn unsatisfiable_order_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.spi");
    let o = spinterp(&[
        "gen",
        "--p",
        "101",
        "--basis",
        "cheb1",
        "--B",
        "1",
        "--D",
        "100",
        "--E",
        "0",
        "--seed",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(spinterp(&["gen", "--p", "10007"]).status.code(), Some(2));
    assert_eq!(spinterp(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.spi");
    fs::write(&bad, "%SPI 1\nfield p=10007\nbasis hermite\n").unwrap();
    let out = dir.path().join("r.txt");
    let o = spinterp(&["decode", "--instance", bad.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn undetected_corruption_never_lists_the_truth() {
    // the decoder is told E = 0 but one of its two probes is wrong
    let dir = tempfile::tempdir().unwrap();
    let mut saw_failure = false;
    for seed in 0..20 {
        let cfg = InstanceConfig { p: 10007, basis: Basis::Power, b: 1, d: 20, e: 0, t: None };
        let (mut inst, _) = make_instance(&cfg, seed).unwrap();
        let x = power_probe_plan(inst.field, 1, 20, 0, seed).unwrap().points()[1];
        inst.errors.insert(x, inst.hidden.eval(x).unwrap() + inst.field.one());
        let path = dir.path().join("inst.spi");
        fs::write(&path, write_instance(&inst)).unwrap();
        let out = dir.path().join("r.txt");
        let o = spinterp(&["decode", "--instance", path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        match o.status.code() {
            Some(4) => saw_failure = true,
            Some(0) => {
                let res = parse_result(&fs::read_to_string(&out).unwrap()).unwrap();
                assert!(res.candidates.iter().all(|c| c.poly != inst.hidden));
            }
            other => panic!("unexpected exit {other:?}"),
        }
    }
    assert!(saw_failure, "some seed should leave no consistent 1-sparse fit");
}

#[test]
fn verify_accepts_truth_and_rejects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let inst_path = gen(dir.path(), "inst.spi", "cheb1", 3, 40, 3, 9);
    let inst = parse_instance(&fs::read_to_string(&inst_path).unwrap()).unwrap();
    let good = dir.path().join("good.poly");
    fs::write(&good, write_poly(&inst.hidden)).unwrap();
    let ip = inst_path.to_str().unwrap();
    assert_eq!(
        spinterp(&["verify", "--instance", ip, "--poly", good.to_str().unwrap(), "--max-errors", "3"]).status.code(),
        Some(0)
    );
    assert_eq!(
        spinterp(&["verify", "--instance", ip, "--poly", good.to_str().unwrap(), "--max-errors", "2"]).status.code(),
        Some(1)
    );

    let mut terms: Vec<_> = inst.hidden.terms().to_vec();
    terms[0].1 += inst.field.one();
    let bad_poly = SparsePoly::new(inst.field, inst.basis, terms).unwrap();
    let bad = dir.path().join("bad.poly");
    fs::write(&bad, write_poly(&bad_poly)).unwrap();
    let o = spinterp(&["verify", "--instance", ip, "--poly", bad.to_str().unwrap(), "--max-errors", "3"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn both_interpolants_of_the_fixture_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinterp(&["fixture", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let inst = dir.path().join("instance.spi");
    for (name, pos) in [("f1.poly", "1:8"), ("f2.poly", "1:4")] {
        let p = dir.path().join(name);
        let o = spinterp(&[
            "verify",
            "--instance",
            inst.to_str().unwrap(),
            "--poly",
            p.to_str().unwrap(),
            "--max-errors",
            "1",
        ]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), format!("mismatches 1 {pos}"));
        let o = spinterp(&[
            "verify",
            "--instance",
            inst.to_str().unwrap(),
            "--poly",
            p.to_str().unwrap(),
            "--max-errors",
            "0",
        ]);
        assert_eq!(o.status.code(), Some(1));
    }
}

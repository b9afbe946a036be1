//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every check is an exact equality; there are no
//! tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;
use std::process::Command;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use loopbraid::baxter::qcartan_inverse;
use loopbraid::braid::act_word;
use loopbraid::cartan::{
    cartan_data, kappa, longest_word, positive_roots, weyl_apply_weight, CartanData, LieType,
    Series, WeylWord,
};
use loopbraid::exact::{qnum, series_residual_is_identity, GlobalParams, LaurentPoly};
use loopbraid::suites::{
    rand_monic, suite_braid_relations, suite_cyclicity, suite_difference_oracle,
    suite_factorization, suite_gtl, suite_hecke, suite_qloop,
};

const SEED: u64 = 42;

fn report(criterion: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("[acceptance] {}: PASS", criterion),
        Err(msg) => {
            println!("[acceptance] {}: FAIL - {}", criterion, msg);
            panic!("{}: {}", criterion, msg);
        }
    }
}

fn suite_outcome(rep: &loopbraid::suites::SuiteReport) -> Result<(), String> {
    if rep.ok() {
        Ok(())
    } else {
        Err(format!(
            "{} of {} cases failed; first: {}",
            rep.failures.len(),
            rep.cases,
            rep.failures[0]
        ))
    }
}

/// All simple types of rank at most `max_rank`.
fn all_types(max_rank: usize) -> Vec<CartanData> {
    let mut out = Vec::new();
    let ranges: [(Series, usize, usize); 7] = [
        (Series::A, 1, 8),
        (Series::B, 2, 8),
        (Series::C, 2, 8),
        (Series::D, 4, 8),
        (Series::E, 6, 8),
        (Series::F, 4, 4),
        (Series::G, 2, 2),
    ];
    for (series, lo, hi) in ranges {
        for rank in lo..=hi.min(max_rank) {
            if let Ok(lt) = LieType::new(series, rank) {
                out.push(cartan_data(lt).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_01_braid_relations() {
    let rep = suite_braid_relations(SEED, 50);
    report(
        "criterion 1 (braid relations, both actions)",
        suite_outcome(&rep),
    );
}

#[test]
fn criterion_02_difference_oracle() {
    let rep = suite_difference_oracle(SEED, 100);
    report(
        "criterion 2 (difference-equation oracle)",
        suite_outcome(&rep),
    );
}

#[test]
fn criterion_03_degree_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let gp = GlobalParams::default();
    let types = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"];
    let mut checked = 0;
    let mut outcome = Ok(());
    'outer: for case in 0..200 {
        let cd = cartan_data(types[case % types.len()].parse().unwrap()).unwrap();
        let len = rng.gen_range(0..=8usize);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=cd.n())).collect();
        let word = WeylWord::new(letters);
        let mu = rand_monic(&mut rng, &cd, &gp);
        let lhs = act_word(&cd, &gp, &word, &mu).degree();
        let rhs = weyl_apply_weight(&cd, &word, &mu.degree());
        checked += 1;
        if lhs != rhs {
            outcome = Err(format!("case {}: degrees diverge", case));
            break 'outer;
        }
    }
    assert_eq!(checked, 200);
    report("criterion 3 (degree equivariance, 200 cases)", outcome);
}

#[test]
fn criterion_04_hecke_relations() {
    let rep = suite_hecke(SEED, 3);
    report(
        "criterion 4 (Hecke relations, r <= 3, three hbar values)",
        suite_outcome(&rep),
    );
}

#[test]
fn criterion_05_factorization() {
    let rep = suite_factorization(SEED, 100);
    report(
        "criterion 5 (Baxter factorization at w0, both words)",
        suite_outcome(&rep),
    );
}

#[test]
fn criterion_06_cyclicity_equivalence() {
    let rep = suite_cyclicity(SEED, 200);
    report(
        "criterion 6 (cyclicity condition equivalence)",
        suite_outcome(&rep),
    );
}

#[test]
fn criterion_07_quantized_cartan_audit() {
    let mut outcome = Ok(());
    'outer: for cd in all_types(8) {
        let k = kappa(&cd).unwrap();
        let qci = match qcartan_inverse(&cd, &k) {
            Ok(q) => q,
            Err(e) => {
                outcome = Err(format!("{}: {}", cd.lie_type(), e));
                break 'outer;
            }
        };
        if !qci.audit_clean() {
            outcome = Err(format!(
                "{}: window/valuation violations {:?}",
                cd.lie_type(),
                qci.violations
            ));
            break 'outer;
        }
        let m: Vec<Vec<LaurentPoly>> = (1..=cd.n())
            .map(|i| (1..=cd.n()).map(|j| qnum(cd.a(i, j), cd.d(i))).collect())
            .collect();
        if !series_residual_is_identity(&m, k.two_kappa as usize + 1) {
            outcome = Err(format!("{}: M * v is not the identity", cd.lie_type()));
            break 'outer;
        }
    }
    report("criterion 7 (quantized Cartan audit, rank <= 8)", outcome);
}

#[test]
fn criterion_08_kappa_cross_check() {
    // two_kappa from the root system against the closed-form table
    let table = |cd: &CartanData| -> i64 {
        let n = cd.n() as i64;
        match cd.lie_type().series() {
            Series::A => n + 1,
            Series::B => 2 * (2 * n - 1),
            Series::C => 2 * (n + 1),
            Series::D => 2 * n - 2,
            Series::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Series::F => 18,
            Series::G => 12,
        }
    };
    let mut outcome = Ok(());
    'outer: for cd in all_types(8) {
        let k = kappa(&cd).unwrap();
        if k.two_kappa != table(&cd) {
            outcome = Err(format!(
                "{}: computed {} but table says {}",
                cd.lie_type(),
                k.two_kappa,
                table(&cd)
            ));
            break 'outer;
        }
        let simply_laced = matches!(cd.lie_type().series(), Series::A | Series::D | Series::E);
        if simply_laced {
            let (_, theta) = positive_roots(&cd);
            if k.two_kappa != 1 + theta.height() {
                outcome = Err(format!(
                    "{}: two_kappa differs from 1 + height(theta)",
                    cd.lie_type()
                ));
                break 'outer;
            }
        }
    }
    report("criterion 8 (Casimir constant cross-check)", outcome);
}

#[test]
fn criterion_09_qloop_relations() {
    let rep = suite_qloop(SEED, 50);
    report(
        "criterion 9 (q-side braid and Hecke relations)",
        suite_outcome(&rep),
    );
}

#[test]
fn criterion_10_gtl_intertwining() {
    let rep = suite_gtl(SEED, 7);
    report(
        "criterion 10 (GTL intertwining through order v^6)",
        suite_outcome(&rep),
    );
}

fn run_cli(args: &[&str], stdin_file: Option<(&str, &str)>) -> (String, i32) {
    let exe = env!("CARGO_BIN_EXE_loopbraid");
    let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let _tmp;
    if let Some((name, contents)) = stdin_file {
        let path = std::env::temp_dir().join(name);
        std::fs::write(&path, contents).unwrap();
        args.push("--input".into());
        args.push(path.to_string_lossy().into_owned());
        _tmp = path;
    }
    let out = Command::new(exe).args(&args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_11_cli_worked_examples() {
    let mut outcome = Ok(());
    // sigma_1(L(u - a)) = {a} for a = 0 on A1
    let job = r#"{"type":"A1","hbar":"1","p":{"1":[["0",1]]}}"#;
    let (stdout, code) = run_cli(&["poles"], Some(("acc_poles.json", job)));
    let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
    if code != 0 || parsed["payload"]["poles"]["1"] != serde_json::json!(["0"]) {
        outcome = Err(format!("poles payload wrong: {}", stdout));
    }

    // Baxter polynomials on A2: Q_1 = u - a, Q_2 = u - hbar/2 - a at a = 0
    if outcome.is_ok() {
        let job = r#"{"type":"A2","hbar":"1","p":{"1":[["0",1]],"2":[]}}"#;
        let (stdout, code) = run_cli(&["baxter"], Some(("acc_baxter.json", job)));
        let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
        let q1 = &parsed["payload"]["baxter"]["1"];
        let q2 = &parsed["payload"]["baxter"]["2"];
        let ok = code == 0
            && *q1 == serde_json::json!([["0", 1]])
            && *q2 == serde_json::json!([["1/2", 1]])
            && parsed["payload"]["factorization_ok"] == serde_json::json!(true);
        if !ok {
            outcome = Err(format!("baxter payload wrong: {}", stdout));
        }
    }

    // act_word((2,1)) on ((u - a), 1): component 1 = 1, component 2 =
    // (u - 3 hbar/2 - a)^-1 at a = 0
    if outcome.is_ok() {
        let job = r#"{"type":"A2","hbar":"1","p":{"1":[["0",1]],"2":[]},"word":[2,1]}"#;
        let (stdout, code) = run_cli(&["orbit"], Some(("acc_orbit.json", job)));
        let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
        let t1 = &parsed["payload"]["tuple"]["1"];
        let t2 = &parsed["payload"]["tuple"]["2"];
        let ok =
            code == 0 && *t1 == serde_json::json!([]) && *t2 == serde_json::json!([["3/2", -1]]);
        if !ok {
            outcome = Err(format!("orbit payload wrong: {}", stdout));
        }
    }

    // cyclicity regression: P = (u), Q = (u - 1) at hbar 1 is flagged with
    // witness root "0"
    if outcome.is_ok() {
        let job = r#"{"type":"A1","hbar":"1","p":{"1":[["0",1]]},"q":{"1":[["1",1]]}}"#;
        let (stdout, code) = run_cli(&["cyclicity"], Some(("acc_cyc.json", job)));
        let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
        let ok = code == 0
            && parsed["payload"]["cyclic_sufficient"] == serde_json::json!(false)
            && parsed["payload"]["pole_witnesses"] == serde_json::json!([[1, "0"]]);
        if !ok {
            outcome = Err(format!("cyclicity payload wrong: {}", stdout));
        }
    }

    // exit-code contract corners
    if outcome.is_ok() {
        let (_, code) = run_cli(&["info", "--type", "Z9"], None);
        if code != 2 {
            outcome = Err(format!("illegal type should exit 2, got {}", code));
        }
    }
    if outcome.is_ok() {
        let (_, code) = run_cli(&["verify", "unknown-suite", "--type", "A1"], None);
        if code != 2 {
            outcome = Err(format!("unknown suite should exit 2, got {}", code));
        }
    }

    // determinism: byte-identical machine output for an identical job
    if outcome.is_ok() {
        let args = [
            "verify",
            "difference-oracle",
            "--type",
            "A1",
            "--seed",
            "7",
            "--count",
            "5",
        ];
        let (a, code_a) = run_cli(&args, None);
        let (b, code_b) = run_cli(&args, None);
        if a != b || code_a != 0 || code_b != 0 {
            outcome = Err("verify output is not deterministic".into());
        }
    }

    report("criterion 11 (CLI worked-example regressions)", outcome);
}

/// The two canonical reduced words for the longest element exist, are
/// reduced, have full length, and are distinct whenever the rank allows.
#[test]
fn longest_words_sanity_for_suite_types() {
    for ty in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
        let cd = cartan_data(ty.parse().unwrap()).unwrap();
        let (w0, alt) = longest_word(&cd).unwrap();
        let (pos, _) = positive_roots(&cd);
        assert_eq!(w0.len(), pos.len());
        if cd.n() > 1 {
            assert_ne!(w0, alt, "{}", ty);
        }
    }
}

/// Determinism of the suite layer itself at acceptance sizes.
#[test]
fn suites_are_deterministic() {
    let a = suite_difference_oracle(SEED, 40);
    let b = suite_difference_oracle(SEED, 40);
    assert_eq!(a, b);
}

/// Batch JSON round-trip across every command payload shape.
#[test]
fn cli_payloads_roundtrip() {
    use loopbraid::cli::{cmd_gtl_check, cmd_info, cmd_qloop_hecke, JobResult, JobSpec};
    let mut job = JobSpec::new("B2");
    job.options.order = Some(4);
    for result in [
        cmd_info(&job).unwrap(),
        cmd_gtl_check(&job).unwrap(),
        cmd_qloop_hecke(&job).unwrap(),
    ] {
        let text = result.to_machine();
        let back: JobResult = serde_json::from_str(&text).unwrap();
        assert_eq!(back, result);
    }
    let _ = BTreeMap::from([(1, 2)]);
}

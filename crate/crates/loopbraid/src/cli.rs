//! Batch command layer: structured job input, exact string-serialized
//! results, and the exit-code contract.
//!
//! All rationals cross this boundary as strings `"p/q"` or `"p"`; no
//! floating point exists anywhere. Node-indexed data is keyed by `"1"`
//! through `"n"`. Identical jobs (including seeds) produce byte-identical
//! machine output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::baxter::{
    baxter_poly, fundamental_poles, pole_set, qcartan_inverse, verify_factorization,
};
use crate::braid::{act_word, extremal_poly, extremal_xi, DrinfeldTuple, MonicTuple};
use crate::cartan::{cartan_data, kappa, CartanData, LieType, WeylWord};
use crate::cyclicity::verdict;
use crate::exact::{parse_rat, GlobalParams, Mat, Rat, RootMultiset};
use crate::hecke::{build_model, submodule_check, verify_hecke};
use crate::qloop::{
    gtl_intertwine_check, q_act_word, q_hecke_model, q_verify, GTLContext, QRootMultiset,
    QWeightTuple,
};
use crate::suites::run_suite;

/// Process exit codes: 0 success, 1 verification failure, 2 usage/schema,
/// 3 word validity, 4 solver.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("word error: {0}")]
    Word(String),
    #[error("solver error: {0}")]
    Solver(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Word(_) => 3,
            CliError::Solver(_) => 4,
        }
    }
}

/// A root entry in job input: `[value, multiplicity]` on the additive
/// side, or `[value, multiplicity, q-exponent]` on the multiplicative side.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum RootEntry {
    Pair(String, i64),
    Triple(String, i64, i64),
}

pub type TupleInput = BTreeMap<String, Vec<RootEntry>>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct JobOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

/// A fully structured job: the Lie type, the deformation parameter, the
/// optional Drinfeld data `p` and `q`, an optional word, and options.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JobSpec {
    #[serde(rename = "type")]
    pub lie_type: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hbar: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<TupleInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<TupleInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    #[serde(default)]
    pub options: JobOptions,
}

impl JobSpec {
    pub fn new(lie_type: &str) -> Self {
        JobSpec {
            lie_type: lie_type.to_string(),
            hbar: None,
            p: None,
            q: None,
            word: None,
            node: None,
            options: JobOptions::default(),
        }
    }
}

/// Root multisets serialized as sorted `[root, multiplicity]` lists.
pub type TupleJson = BTreeMap<String, Vec<(String, i64)>>;

/// Multiplicative root multisets as sorted `[value, multiplicity, q-exp]`.
pub type QTupleJson = BTreeMap<String, Vec<(String, i64, i64)>>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReportJson {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

/// Result payloads, tagged by command kind.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Info {
        n: usize,
        cartan_matrix: Vec<Vec<i64>>,
        symmetrizers: Vec<i64>,
        braid_exponents: Vec<Vec<i64>>,
        two_kappa: i64,
        casimir: String,
        /// `v_ij` series coefficients `r = 0..`, trailing zeros trimmed.
        v_table: BTreeMap<String, Vec<String>>,
    },
    Orbit {
        tuple: TupleJson,
    },
    Poles {
        poles: BTreeMap<String, Vec<String>>,
        fundamental: BTreeMap<String, Vec<String>>,
    },
    Baxter {
        baxter: TupleJson,
        factorization_ok: bool,
    },
    Extremal {
        xi: TupleJson,
        polynomials: BTreeMap<String, Vec<String>>,
    },
    Cyclicity {
        condition_poles: bool,
        condition_braid: bool,
        cyclic_sufficient: bool,
        irreducible_sufficient: bool,
        pole_witnesses: Vec<(usize, String)>,
        braid_witnesses: Vec<(usize, usize, String)>,
        reversed_pole_witnesses: Vec<(usize, String)>,
    },
    Verify {
        passed: bool,
        suites: Vec<SuiteReportJson>,
    },
    QloopOrbit {
        degrees: Vec<i64>,
        tuple: QTupleJson,
    },
    QloopHecke {
        modes: Vec<i64>,
        relations_ok: bool,
        /// Generator matrices at mode 1, row-major entries in `Q(q)`.
        matrices: BTreeMap<String, Vec<Vec<String>>>,
    },
    GtlCheck {
        order: usize,
        results: Vec<(usize, usize, i64, bool)>,
        passed: bool,
    },
    HeckeDump {
        level: usize,
        dim: usize,
        /// Basis labels `(node, power)` in storage order.
        basis: Vec<(usize, usize)>,
        relations_ok: bool,
        submodules_ok: bool,
        /// Row-major exact rational entries per named matrix.
        matrices: BTreeMap<String, Vec<String>>,
    },
}

/// A completed job: the echoed input, a status, and the payload.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JobResult {
    pub command: String,
    pub input: JobSpec,
    pub status: String,
    pub payload: Payload,
}

impl JobResult {
    pub fn passed(&self) -> bool {
        self.status == "ok"
    }

    pub fn to_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("results always serialize")
    }
}

fn parse_type(job: &JobSpec) -> Result<(LieType, CartanData), CliError> {
    let lt: LieType = job
        .lie_type
        .parse()
        .map_err(|e| CliError::Schema(format!("{}", e)))?;
    let cd = cartan_data(lt).map_err(|e| CliError::Schema(format!("{}", e)))?;
    Ok((lt, cd))
}

fn parse_hbar(job: &JobSpec) -> Result<GlobalParams, CliError> {
    match &job.hbar {
        None => Ok(GlobalParams::default()),
        Some(s) => {
            let h = parse_rat(s).map_err(|e| CliError::Schema(format!("{}", e)))?;
            if num_traits::Zero::is_zero(&h) {
                return Err(CliError::Schema("hbar must be nonzero".into()));
            }
            Ok(GlobalParams::new(h))
        }
    }
}

fn parse_tuple(
    cd: &CartanData,
    input: &TupleInput,
    require_polynomial: bool,
) -> Result<MonicTuple, CliError> {
    let mut comps = vec![RootMultiset::one(); cd.n()];
    for (key, entries) in input {
        let node: usize = key
            .parse()
            .map_err(|_| CliError::Schema(format!("bad node key `{}`", key)))?;
        if node == 0 || node > cd.n() {
            return Err(CliError::Schema(format!(
                "node {} out of range 1..{}",
                node,
                cd.n()
            )));
        }
        for e in entries {
            let (value, mult) = match e {
                RootEntry::Pair(v, m) => (v, *m),
                RootEntry::Triple(..) => {
                    return Err(CliError::Schema(
                        "additive roots take [value, multiplicity] pairs".into(),
                    ))
                }
            };
            if require_polynomial && mult <= 0 {
                return Err(CliError::Schema(
                    "Drinfeld multiplicities must be positive".into(),
                ));
            }
            let root = parse_rat(value).map_err(|e| CliError::Schema(format!("{}", e)))?;
            comps[node - 1].insert(root, mult);
        }
    }
    Ok(MonicTuple::new(comps))
}

fn parse_drinfeld(cd: &CartanData, input: &TupleInput) -> Result<DrinfeldTuple, CliError> {
    let mt = parse_tuple(cd, input, true)?;
    Ok(DrinfeldTuple::new(mt.components().to_vec()))
}

fn parse_q_tuple(cd: &CartanData, input: &TupleInput) -> Result<Vec<QRootMultiset>, CliError> {
    let mut comps = vec![QRootMultiset::one(); cd.n()];
    for (key, entries) in input {
        let node: usize = key
            .parse()
            .map_err(|_| CliError::Schema(format!("bad node key `{}`", key)))?;
        if node == 0 || node > cd.n() {
            return Err(CliError::Schema(format!(
                "node {} out of range 1..{}",
                node,
                cd.n()
            )));
        }
        for e in entries {
            let (value, mult, qexp) = match e {
                RootEntry::Pair(v, m) => (v, *m, 0),
                RootEntry::Triple(v, m, e) => (v, *m, *e),
            };
            if mult <= 0 {
                return Err(CliError::Schema(
                    "q-side Drinfeld multiplicities must be positive".into(),
                ));
            }
            let a = parse_rat(value).map_err(|e| CliError::Schema(format!("{}", e)))?;
            if num_traits::Zero::is_zero(&a) {
                return Err(CliError::Schema(
                    "multiplicative roots must be nonzero".into(),
                ));
            }
            comps[node - 1].insert(a, qexp, mult);
        }
    }
    Ok(comps)
}

fn parse_word(cd: &CartanData, word: &Option<Vec<usize>>) -> Result<WeylWord, CliError> {
    let letters = word
        .clone()
        .ok_or_else(|| CliError::Schema("this command requires a word".into()))?;
    if letters.iter().any(|&l| l == 0 || l > cd.n()) {
        return Err(CliError::Schema(format!(
            "word letters must lie in 1..{}",
            cd.n()
        )));
    }
    Ok(WeylWord::new(letters))
}

fn require_p(job: &JobSpec) -> Result<&TupleInput, CliError> {
    job.p
        .as_ref()
        .ok_or_else(|| CliError::Schema("this command requires `p`".into()))
}

/// Nodes a command reports on: all of them, or the single `--node`.
fn selected_nodes(cd: &CartanData, job: &JobSpec) -> Result<Vec<usize>, CliError> {
    match job.node {
        None => Ok(cd.nodes().collect()),
        Some(i) if i >= 1 && i <= cd.n() => Ok(vec![i]),
        Some(i) => Err(CliError::Schema(format!(
            "node {} out of range 1..{}",
            i,
            cd.n()
        ))),
    }
}

fn tuple_json(cd: &CartanData, t: &MonicTuple) -> TupleJson {
    cd.nodes()
        .map(|i| {
            let entries = t
                .component(i)
                .entries()
                .map(|(r, m)| (r.to_string(), m))
                .collect();
            (i.to_string(), entries)
        })
        .collect()
}

fn poleset_json(s: &std::collections::BTreeSet<Rat>) -> Vec<String> {
    s.iter().map(Rat::to_string).collect()
}

fn trim_trailing_zeros(mut v: Vec<String>) -> Vec<String> {
    while v.last().is_some_and(|c| c == "0") {
        v.pop();
    }
    v
}

/// `info`: Cartan matrix, symmetrizers, braid exponents, Casimir constant,
/// and the window of inverse quantized Cartan matrix coefficients.
pub fn cmd_info(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let k = kappa(&cd).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let qci = qcartan_inverse(&cd, &k).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let mut v_table = BTreeMap::new();
    for i in cd.nodes() {
        for j in cd.nodes() {
            let coeffs: Vec<String> = (0..qci.order)
                .map(|r| qci.coeff(i, j, r).to_string())
                .collect();
            v_table.insert(format!("v_{}{}", i, j), trim_trailing_zeros(coeffs));
        }
    }
    Ok(JobResult {
        command: "info".into(),
        input: job.clone(),
        status: "ok".into(),
        payload: Payload::Info {
            n: cd.n(),
            cartan_matrix: cd.a_matrix().clone(),
            symmetrizers: cd.d_vector().clone(),
            braid_exponents: cd.m_matrix().clone(),
            two_kappa: k.two_kappa,
            casimir: k.c_g.to_string(),
            v_table,
        },
    })
}

/// `orbit`: the monic braid action along a word (not necessarily reduced).
pub fn cmd_orbit(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let p = parse_tuple(&cd, require_p(job)?, false)?;
    let word = parse_word(&cd, &job.word)?;
    let out = act_word(&cd, &gp, &word, &p);
    Ok(JobResult {
        command: "orbit".into(),
        input: job.clone(),
        status: "ok".into(),
        payload: Payload::Orbit {
            tuple: tuple_json(&cd, &out),
        },
    })
}

/// `poles`: pole sets of `L(P)` per node, plus fundamental pole sets.
pub fn cmd_poles(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let k = kappa(&cd).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let qci = qcartan_inverse(&cd, &k).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let p = parse_drinfeld(&cd, require_p(job)?)?;
    let nodes = selected_nodes(&cd, job)?;
    let mut poles = BTreeMap::new();
    for &i in &nodes {
        poles.insert(i.to_string(), poleset_json(&pole_set(&qci, &gp, &p, i)));
    }
    let mut fundamental = BTreeMap::new();
    for &i in &nodes {
        for j in cd.nodes() {
            fundamental.insert(
                format!("{},{}", i, j),
                poleset_json(&fundamental_poles(&qci, &gp, i, j)),
            );
        }
    }
    Ok(JobResult {
        command: "poles".into(),
        input: job.clone(),
        status: "ok".into(),
        payload: Payload::Poles { poles, fundamental },
    })
}

/// `baxter`: Baxter polynomials per node plus the factorization verdict.
pub fn cmd_baxter(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let k = kappa(&cd).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let qci = qcartan_inverse(&cd, &k).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let p = parse_drinfeld(&cd, require_p(job)?)?;
    let nodes = selected_nodes(&cd, job)?;
    let mut baxter = TupleJson::new();
    for &i in &nodes {
        let q = baxter_poly(&qci, &gp, &p, i);
        baxter.insert(
            i.to_string(),
            q.entries().map(|(r, m)| (r.to_string(), m)).collect(),
        );
    }
    let report =
        verify_factorization(&cd, &gp, &qci, &p).map_err(|e| CliError::Word(format!("{}", e)))?;
    let ok = report.all_ok();
    Ok(JobResult {
        command: "baxter".into(),
        input: job.clone(),
        status: if ok { "ok" } else { "fail" }.into(),
        payload: Payload::Baxter {
            baxter,
            factorization_ok: ok,
        },
    })
}

/// `extremal`: the eigenvalue tuple and extremal polynomials at a reduced
/// word.
pub fn cmd_extremal(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let p = parse_drinfeld(&cd, require_p(job)?)?;
    let word = parse_word(&cd, &job.word)?;
    let xi = extremal_xi(&cd, &gp, &p, &word).map_err(|e| CliError::Word(format!("{}", e)))?;
    let xi_tuple = MonicTuple::new(xi.components().to_vec());
    let nodes = selected_nodes(&cd, job)?;
    let mut polynomials = BTreeMap::new();
    for &i in &nodes {
        let poly =
            extremal_poly(&cd, &gp, &p, &word, i).map_err(|e| CliError::Word(format!("{}", e)))?;
        polynomials.insert(
            i.to_string(),
            poly.coeffs().iter().map(|c| c.to_string()).collect(),
        );
    }
    Ok(JobResult {
        command: "extremal".into(),
        input: job.clone(),
        status: "ok".into(),
        payload: Payload::Extremal {
            xi: tuple_json(&cd, &xi_tuple),
            polynomials,
        },
    })
}

/// `cyclicity`: the joint verdict of both sufficient conditions, with
/// witnesses.
pub fn cmd_cyclicity(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let k = kappa(&cd).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let qci = qcartan_inverse(&cd, &k).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let p = parse_drinfeld(&cd, require_p(job)?)?;
    let q_in = job
        .q
        .as_ref()
        .ok_or_else(|| CliError::Schema("cyclicity requires `q`".into()))?;
    let q = parse_drinfeld(&cd, q_in)?;
    let v = verdict(&cd, &gp, &qci, &p, &q).map_err(|e| CliError::Word(format!("{}", e)))?;
    Ok(JobResult {
        command: "cyclicity".into(),
        input: job.clone(),
        status: "ok".into(),
        payload: Payload::Cyclicity {
            condition_poles: v.condition_poles,
            condition_braid: v.condition_braid,
            cyclic_sufficient: v.cyclic_sufficient,
            irreducible_sufficient: v.irreducible_sufficient,
            pole_witnesses: v
                .pole_witnesses
                .iter()
                .map(|w| (w.node, w.point.to_string()))
                .collect(),
            braid_witnesses: v
                .braid_witnesses
                .iter()
                .map(|w| (w.position, w.node, w.point.to_string()))
                .collect(),
            reversed_pole_witnesses: v
                .reversed_pole_witnesses
                .iter()
                .map(|w| (w.node, w.point.to_string()))
                .collect(),
        },
    })
}

/// `hecke`: build the exact matrix model at a truncation level (the
/// `--order` flag, default 2), verify the relations, and dump the matrices
/// row-major.
pub fn cmd_hecke(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let level = job.options.order.unwrap_or(2);
    let model = build_model(&cd, &gp, level);
    let report = verify_hecke(&model);
    let submodules_ok = (0..=level).all(|r| submodule_check(&model, r));
    let dump = |m: &Mat<Rat>| -> Vec<String> { m.entries().iter().map(Rat::to_string).collect() };
    let mut matrices = BTreeMap::new();
    matrices.insert("Z".to_string(), dump(model.z()));
    matrices.insert("Z_inv".to_string(), dump(model.z_inv()));
    for i in cd.nodes() {
        matrices.insert(format!("Tau_{}", i), dump(model.tau(i)));
        matrices.insert(format!("T_{}", i), dump(model.t(i)));
    }
    let ok = report.all_ok() && submodules_ok;
    Ok(JobResult {
        command: "hecke".into(),
        input: job.clone(),
        status: if ok { "ok" } else { "fail" }.into(),
        payload: Payload::HeckeDump {
            level,
            dim: model.dim(),
            basis: (0..model.dim()).map(|idx| model.basis_label(idx)).collect(),
            relations_ok: report.all_ok(),
            submodules_ok,
            matrices,
        },
    })
}

/// `verify`: run a named suite deterministically.
pub fn cmd_verify(suite: &str, job: &JobSpec) -> Result<JobResult, CliError> {
    let seed = job.options.seed.unwrap_or(42);
    let count = job.options.count.unwrap_or(25);
    let reports = run_suite(suite, seed, count)
        .ok_or_else(|| CliError::Schema(format!("unknown suite `{}`", suite)))?;
    let passed = reports.iter().all(|r| r.ok());
    Ok(JobResult {
        command: format!("verify {}", suite),
        input: job.clone(),
        status: if passed { "ok" } else { "fail" }.into(),
        payload: Payload::Verify {
            passed,
            suites: reports
                .into_iter()
                .map(|r| SuiteReportJson {
                    name: r.name,
                    cases: r.cases,
                    failures: r.failures,
                })
                .collect(),
        },
    })
}

/// `qloop-orbit`: the multiplicative braid action on the l-weight of the
/// q-side Drinfeld data along a word.
pub fn cmd_qloop_orbit(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let p = parse_q_tuple(&cd, require_p(job)?)?;
    let word = parse_word(&cd, &job.word)?;
    let psi = QWeightTuple::from_drinfeld(&cd, &p);
    let out = q_act_word(&cd, &word, &psi);
    let tuple: QTupleJson = cd
        .nodes()
        .map(|i| {
            let entries = out
                .component(i)
                .roots
                .entries()
                .map(|((a, m), mult)| (a.to_string(), mult, *m))
                .collect();
            (i.to_string(), entries)
        })
        .collect();
    Ok(JobResult {
        command: "qloop-orbit".into(),
        input: job.clone(),
        status: "ok".into(),
        payload: Payload::QloopOrbit {
            degrees: out.degrees(),
            tuple,
        },
    })
}

/// `qloop-hecke`: verify the Hecke relations over `Q(q)` in the standard
/// battery of modes and dump the mode-1 generator matrices.
pub fn cmd_qloop_hecke(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let modes = vec![1i64, -1, 2, -2, 3];
    let mut ok = true;
    for &r in &modes {
        ok &= q_verify(&q_hecke_model(&cd, r)).all_ok();
    }
    let model = q_hecke_model(&cd, 1);
    let mut matrices = BTreeMap::new();
    for j in cd.nodes() {
        let t = model.t(j);
        let rows: Vec<Vec<String>> = (0..cd.n())
            .map(|r| (0..cd.n()).map(|c| t.at(r, c).to_string()).collect())
            .collect();
        matrices.insert(format!("T_{}", j), rows);
    }
    Ok(JobResult {
        command: "qloop-hecke".into(),
        input: job.clone(),
        status: if ok { "ok" } else { "fail" }.into(),
        payload: Payload::QloopHecke {
            modes,
            relations_ok: ok,
            matrices,
        },
    })
}

/// `gtl-check`: the truncated intertwining check for every node pair and
/// modes `{1, -1, 2, -2}` at the requested order (default 7).
pub fn cmd_gtl_check(job: &JobSpec) -> Result<JobResult, CliError> {
    let (_, cd) = parse_type(job)?;
    let gp = parse_hbar(job)?;
    let order = job.options.order.unwrap_or(7);
    let ctx = GTLContext::new(&cd, &gp, order).map_err(|e| CliError::Schema(format!("{}", e)))?;
    let mut results = Vec::new();
    let mut passed = true;
    for i in cd.nodes() {
        for j in cd.nodes() {
            for r in [1i64, -1, 2, -2] {
                let ok = gtl_intertwine_check(&ctx, i, j, r)
                    .map_err(|e| CliError::Schema(format!("{}", e)))?;
                passed &= ok;
                results.push((i, j, r, ok));
            }
        }
    }
    Ok(JobResult {
        command: "gtl-check".into(),
        input: job.clone(),
        status: if passed { "ok" } else { "fail" }.into(),
        payload: Payload::GtlCheck {
            order,
            results,
            passed,
        },
    })
}

/// Aligned human-readable rendering of a result.
pub fn render_table(result: &JobResult) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("command : {}", result.command));
    line(format!("type    : {}", result.input.lie_type));
    line(format!("status  : {}", result.status));
    match &result.payload {
        Payload::Info {
            n,
            cartan_matrix,
            symmetrizers,
            braid_exponents,
            two_kappa,
            casimir,
            v_table,
        } => {
            line(format!("n       : {}", n));
            line(format!("d       : {:?}", symmetrizers));
            line(format!("2*kappa : {} (casimir {})", two_kappa, casimir));
            for (r, row) in cartan_matrix.iter().enumerate() {
                line(format!("a[{}]    : {:?}", r + 1, row));
            }
            for (r, row) in braid_exponents.iter().enumerate() {
                line(format!("m[{}]    : {:?}", r + 1, row));
            }
            for (k, v) in v_table {
                line(format!("{:8}: [{}]", k, v.join(", ")));
            }
        }
        Payload::Orbit { tuple } => {
            for (node, entries) in tuple {
                let txt: Vec<String> = entries
                    .iter()
                    .map(|(r, m)| format!("(u - {})^{}", r, m))
                    .collect();
                line(format!(
                    "node {}  : {}",
                    node,
                    if txt.is_empty() {
                        "1".into()
                    } else {
                        txt.join(" ")
                    }
                ));
            }
        }
        Payload::Poles { poles, fundamental } => {
            for (node, set) in poles {
                line(format!("sigma_{} : {{{}}}", node, set.join(", ")));
            }
            for (pair, set) in fundamental {
                line(format!("fund {:3}: {{{}}}", pair, set.join(", ")));
            }
        }
        Payload::Baxter {
            baxter,
            factorization_ok,
        } => {
            for (node, entries) in baxter {
                let txt: Vec<String> = entries
                    .iter()
                    .map(|(r, m)| format!("(u - {})^{}", r, m))
                    .collect();
                line(format!(
                    "Q_{}     : {}",
                    node,
                    if txt.is_empty() {
                        "1".into()
                    } else {
                        txt.join(" ")
                    }
                ));
            }
            line(format!("factorization verified: {}", factorization_ok));
        }
        Payload::Extremal { xi, polynomials } => {
            for (node, entries) in xi {
                let txt: Vec<String> = entries
                    .iter()
                    .map(|(r, m)| format!("(u - {})^{}", r, m))
                    .collect();
                line(format!(
                    "xi_{}    : {}",
                    node,
                    if txt.is_empty() {
                        "1".into()
                    } else {
                        txt.join(" ")
                    }
                ));
            }
            for (node, coeffs) in polynomials {
                line(format!("P_{},w   : coeffs [{}]", node, coeffs.join(", ")));
            }
        }
        Payload::Cyclicity {
            condition_poles,
            condition_braid,
            cyclic_sufficient,
            irreducible_sufficient,
            pole_witnesses,
            braid_witnesses,
            reversed_pole_witnesses,
        } => {
            line(format!("condition (poles)       : {}", condition_poles));
            line(format!("condition (braid)       : {}", condition_braid));
            line(format!("cyclic sufficient       : {}", cyclic_sufficient));
            line(format!(
                "irreducible sufficient  : {}",
                irreducible_sufficient
            ));
            for (node, point) in pole_witnesses {
                line(format!("  pole witness: node {} at {}", node, point));
            }
            for (pos, node, point) in braid_witnesses {
                line(format!(
                    "  braid witness: position {} (node {}) at {}",
                    pos, node, point
                ));
            }
            for (node, point) in reversed_pole_witnesses {
                line(format!(
                    "  reversed-pair witness: node {} at {}",
                    node, point
                ));
            }
        }
        Payload::Verify { passed, suites } => {
            for s in suites {
                line(format!(
                    "{:24} {} ({} cases)",
                    s.name,
                    if s.failures.is_empty() {
                        "pass"
                    } else {
                        "FAIL"
                    },
                    s.cases
                ));
                for f in &s.failures {
                    line(format!("    {}", f));
                }
            }
            line(format!(
                "overall : {}",
                if *passed { "pass" } else { "FAIL" }
            ));
        }
        Payload::QloopOrbit { degrees, tuple } => {
            line(format!("degrees : {:?}", degrees));
            for (node, entries) in tuple {
                let txt: Vec<String> = entries
                    .iter()
                    .map(|(a, mult, m)| format!("(z - ({})q^{})^{}", a, m, mult))
                    .collect();
                line(format!(
                    "node {}  : {}",
                    node,
                    if txt.is_empty() {
                        "1".into()
                    } else {
                        txt.join(" ")
                    }
                ));
            }
        }
        Payload::QloopHecke {
            modes,
            relations_ok,
            matrices,
        } => {
            line(format!("modes   : {:?}", modes));
            line(format!("relations hold: {}", relations_ok));
            for (name, rows) in matrices {
                line(format!("{}:", name));
                for row in rows {
                    line(format!("  [{}]", row.join(", ")));
                }
            }
        }
        Payload::HeckeDump {
            level,
            dim,
            relations_ok,
            submodules_ok,
            matrices,
            ..
        } => {
            line(format!("level   : {} (dimension {})", level, dim));
            line(format!(
                "relations hold: {} (submodules {})",
                relations_ok, submodules_ok
            ));
            for (name, entries) in matrices {
                line(format!("{} : [{}]", name, entries.join(", ")));
            }
        }
        Payload::GtlCheck {
            order,
            results,
            passed,
        } => {
            line(format!("order   : {}", order));
            for (i, j, r, ok) in results {
                line(format!(
                    "  (i={}, j={}, r={:2}) : {}",
                    i,
                    j,
                    r,
                    if *ok { "pass" } else { "FAIL" }
                ));
            }
            line(format!(
                "overall : {}",
                if *passed { "pass" } else { "FAIL" }
            ));
        }
    }
    out
}

//! Exit criteria. Runs every criterion at its pinned range and tolerance,
//! prints one PASS/FAIL line each, and exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use emptytet::harness::{
    verify_coplanarity, verify_fn_properties, verify_normalization, verify_white, verify_witness_families,
    VerificationReport,
};

const WHITE_MAX_C: i64 = 25;
const WHITE_TIME_LIMIT: Duration = Duration::from_secs(60);
const FN_MAX_C: i64 = 100;
const FN_TIME_LIMIT: Duration = Duration::from_secs(5);
const NORMALIZE_TRIALS: u64 = 1000;
const NORMALIZE_MAX_C: i64 = 10;
const NORMALIZE_SEED: u64 = 20_240_601;
const WITNESS_MAX_C: i64 = 50;
const WITNESS_ORACLE_MAX_C: i64 = 25;

struct Outcome {
    id: u32,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn tally_ok(r: &VerificationReport, names: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in names {
        match r.tally(n) {
            Some(t) => {
                ok &= t.failed == 0 && t.passed > 0;
                parts.push(format!("{n}: {}/{}", t.passed, t.passed + t.failed));
            }
            None => {
                ok = false;
                parts.push(format!("{n}: missing"));
            }
        }
    }
    if let Some(cx) = r.counterexamples.first() {
        parts.push(format!("first counterexample [{}] {}", cx.check, cx.detail));
    }
    (ok, parts.join("; "))
}

fn main() -> ExitCode {
    let mut out = Vec::new();

    let started = Instant::now();
    let white = verify_white(WHITE_MAX_C);
    let white_time = started.elapsed();
    let (ok, detail) = tally_ok(&white, &["white_empty = oracle"]);
    out.push(Outcome {
        id: 1,
        name: "emptiness criterion = oracle, c <= 25",
        ok: ok && white.cases == (1..=WHITE_MAX_C).map(|c| c * c).sum::<i64>() as u64 && white_time < WHITE_TIME_LIMIT,
        detail: format!("{} forms, {detail}, {:.2?} (limit {:?})", white.cases, white_time, WHITE_TIME_LIMIT),
    });

    let (ok, detail) = tally_ok(&white, &["is_clean_canonical = oracle"]);
    out.push(Outcome { id: 2, name: "clean criterion = oracle boundary scan, c <= 25", ok, detail });

    let (ok, detail) = tally_ok(&white, &["satisfies_system = oracle", "check_sum_system = oracle"]);
    out.push(Outcome { id: 3, name: "fractional system <=> f_n system <=> oracle, clean c <= 25", ok, detail });

    let cop = verify_coplanarity(WHITE_MAX_C);
    let (ok, detail) = tally_ok(&cop, &["interior count", "generator = oracle scan"]);
    out.push(Outcome { id: 4, name: "c-1 interior points, generator = scan, clean c <= 25", ok, detail });

    let (ok, detail) = tally_ok(
        &cop,
        &["empty form has a unit clause", "plane x=1 (a=1)", "plane y=1 (b=1)", "plane x+y-z=1 (d=1)"],
    );
    out.push(Outcome { id: 5, name: "interior points coplanar for empty forms, c <= 25", ok, detail });

    let started = Instant::now();
    let fnr = verify_fn_properties(FN_MAX_C);
    let fn_time = started.elapsed();
    let (ok, detail) = tally_ok(
        &fnr,
        &["(i) f_1 vanishes", "(ii) support = floor multiples", "(ii) support size n-1", "(iii) f_(c-n) = 1 - f_n"],
    );
    out.push(Outcome {
        id: 6,
        name: "f_n properties (i)-(iii), coprime n < c <= 100",
        ok: ok && fn_time < FN_TIME_LIMIT,
        detail: format!("{detail}, {:.2?} (limit {:?})", fn_time, FN_TIME_LIMIT),
    });

    let norm = verify_normalization(NORMALIZE_TRIALS, NORMALIZE_SEED, NORMALIZE_MAX_C);
    let (ok, detail) = tally_ok(
        &norm,
        &["normalizes", "witness map is sound", "volume preserved", "canonical form preserved"],
    );
    out.push(Outcome {
        id: 7,
        name: "1000 seeded unimodular images normalize back, c <= 10",
        ok: ok && norm.cases == NORMALIZE_TRIALS && norm.passed(),
        detail,
    });

    let wit = verify_witness_families(WITNESS_MAX_C, WITNESS_ORACLE_MAX_C);
    let (ok, detail) = tally_ok(
        &wit,
        &[
            "T(1,a,c) white_empty",
            "T(a,c-a,c) white_empty",
            "T(1,a,c) oracle empty",
            "T(a,c-a,c) oracle empty",
        ],
    );
    out.push(Outcome {
        id: 8,
        name: "witness families empty, c <= 50 (oracle c <= 25)",
        ok: ok && wit.passed(),
        detail,
    });

    let mut failed = 0;
    for o in &out {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {} -- {}", o.id, o.name, o.detail);
        failed += usize::from(!o.ok);
    }
    for r in [&white, &cop, &fnr, &norm, &wit] {
        for cx in &r.counterexamples {
            println!("  counterexample in {} [{}]: {}", r.suite, cx.check, cx.detail);
        }
    }
    println!("acceptance: {} passed, {} failed", out.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance suite: one test per headline property, each printing a
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; every check is exact (no tolerances anywhere).

use std::process::Command;
use std::time::Instant;

use klfusion::rootdata::{LieType, RootSystem};
use klfusion::verify::{run_suite, Suite, SuiteReport};

const SEED: u64 = 2024;

fn ctx(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<LieType>().unwrap()).unwrap()
}

fn criterion(n: u32, name: &str, body: impl FnOnce() -> Result<u64, String>) {
    let start = Instant::now();
    match body() {
        Ok(checks) => println!(
            "ACCEPTANCE {n} ({name}): PASS ({checks} checks, {:.2?})",
            start.elapsed()
        ),
        Err(e) => {
            println!("ACCEPTANCE {n} ({name}): FAIL ({:.2?})", start.elapsed());
            panic!("criterion {n} ({name}) failed: {e}");
        }
    }
}

fn demand(reports: Vec<SuiteReport>) -> Result<u64, String> {
    let mut checks = 0;
    for r in reports {
        checks += r.checks;
        if !r.passed() {
            return Err(format!(
                "[{} on {}] {}",
                r.suite,
                r.lie_type,
                r.failures.join(" | ")
            ));
        }
    }
    Ok(checks)
}

#[test]
fn criterion_1_conformal_weight_identity() {
    criterion(1, "conformal-weight identity", || {
        demand(
            ["A1", "A2", "A3", "D4"]
                .iter()
                .map(|t| run_suite(Suite::Confweights, &ctx(t), 200, SEED, 4))
                .collect(),
        )
    });
}

#[test]
fn criterion_2_feigin_frenkel_duality() {
    criterion(2, "Feigin-Frenkel duality", || {
        demand(
            ["A1", "A2", "A3", "D4"]
                .iter()
                .map(|t| run_suite(Suite::FfDual, &ctx(t), 100, SEED, 4))
                .collect(),
        )
    });
}

#[test]
fn criterion_3_oracle_equivalence() {
    criterion(3, "tensor oracle equivalence", || {
        // exhaustive: coords <= 4 in A1 and A2, <= 2 in A3
        demand(
            ["A1", "A2", "A3"]
                .iter()
                .map(|t| run_suite(Suite::Oracle, &ctx(t), 0, SEED, 4))
                .collect(),
        )
    });
}

#[test]
fn criterion_4_fusion_ring_axioms() {
    criterion(4, "fusion-ring axioms and reduction isomorphism", || {
        demand(
            ["A1", "A2", "A3", "D4"]
                .iter()
                .map(|t| run_suite(Suite::FusionRing, &ctx(t), 50, SEED, 4))
                .collect(),
        )
    });
}

#[test]
fn criterion_5_branching_laws() {
    criterion(5, "branching laws and double-branching", || {
        demand(
            ["A1", "A2"]
                .iter()
                .map(|t| run_suite(Suite::Branching, &ctx(t), 25, SEED, 6))
                .collect(),
        )
    });
}

#[test]
fn criterion_6_monodromy_balancing() {
    criterion(6, "monodromy and balancing", || {
        demand(
            ["A1", "A2", "A3", "D4"]
                .iter()
                .map(|t| run_suite(Suite::Monodromy, &ctx(t), 100, SEED, 4))
                .collect(),
        )
    });
}

#[test]
fn criterion_7_induction_calculus() {
    criterion(7, "induction and coset calculus", || {
        demand(
            ["A1", "A2"]
                .iter()
                .map(|t| run_suite(Suite::Induction, &ctx(t), 50, SEED, 6))
                .collect(),
        )
    });
}

#[test]
fn criterion_8_equivariantization() {
    criterion(8, "equivariantization verifier", || {
        let mut checks = 0;
        for (t, bound) in [("A1", 4), ("A2", 4), ("A3", 4), ("D4", 4), ("E6", 2)] {
            let report = run_suite(Suite::CorMain, &ctx(t), 0, SEED, bound);
            checks += report.checks;
            if !report.passed() {
                return Err(format!("[{t}] {}", report.failures.join(" | ")));
            }
            // twist-delta report must be generated for every m
            for r in &report.cor_main {
                if r.twist_deltas.is_empty() {
                    return Err(format!("[{t}] no twist deltas reported at m = {}", r.m));
                }
            }
        }
        Ok(checks)
    });
}

#[test]
fn criterion_9_cli_determinism() {
    criterion(9, "CLI determinism and JSON round-trip", || {
        let commands: Vec<Vec<&str>> = vec![
            vec!["fusion", "--type", "A2", "--a", "T:0,1;0,0", "--b", "T:0,0;0,1"],
            vec!["branch", "--type", "A1", "--gko", "--lambda", "1", "--mu", "1", "--bound", "3"],
            vec!["branch", "--type", "A2", "--urod-t", "--lambda", "1,0", "--mu", "0,0", "--nu", "0,1", "--bound", "5"],
            vec!["weights", "--type", "A1", "--label", "T:1;0", "--label", "T:0;1", "--max-height", "2"],
            vec!["discriminant", "--type", "D4", "--m", "2"],
            vec!["verify", "--suite", "confweights", "--type", "A2", "--samples", "25", "--seed", "7"],
            vec!["verify", "--suite", "cormain", "--type", "A1", "--bound", "3"],
        ];
        let run = |args: &[&str], threads: &str| -> Result<(Vec<u8>, Vec<u8>), String> {
            let output = Command::new(env!("CARGO_BIN_EXE_klfusion"))
                .args(args)
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .map_err(|e| format!("failed to spawn CLI: {e}"))?;
            if !output.status.success() {
                return Err(format!(
                    "command {args:?} exited with {:?}: {}",
                    output.status.code(),
                    String::from_utf8_lossy(&output.stderr)
                ));
            }
            Ok((output.stdout, output.stderr))
        };
        let mut checks = 0;
        for args in &commands {
            let baseline = run(args, "1")?;
            for threads in ["1", "4"] {
                for _ in 0..3 {
                    let attempt = run(args, threads)?;
                    if attempt != baseline {
                        return Err(format!(
                            "output of {args:?} differs across runs (threads = {threads})"
                        ));
                    }
                    checks += 1;
                }
            }
            // JSON round-trip: every emitted document re-parses and
            // re-serializes to the identical value.
            let text = String::from_utf8(baseline.0.clone())
                .map_err(|_| "non-UTF8 output".to_string())?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("bad JSON: {e}"))?;
            if value["schema"] != klfusion::cli::SCHEMA_VERSION {
                return Err("missing schema version".to_string());
            }
            if args[0] == "fusion" || args[0] == "branch" {
                let sum: klfusion::fusion::LabeledSum =
                    serde_json::from_value(value["result"].clone())
                        .map_err(|e| format!("result does not re-parse: {e}"))?;
                if serde_json::to_value(&sum).map_err(|e| e.to_string())? != value["result"] {
                    return Err(format!("lossy JSON round-trip for {args:?}"));
                }
            }
            checks += 1;
        }
        Ok(checks)
    });
}

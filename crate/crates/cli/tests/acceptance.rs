//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p combi-cli --test acceptance`.

use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use combi_core::bimaps::{
    alpha_step_traced, decode_inversion, delta_trace, encode_inversion, gamma, n_filling_to_partition,
    p_filling_to_partition, partition_to_n_filling, phi, psi, StepCase, K,
};
use combi_core::catalog::Family;
use combi_core::par::Exec;
use combi_core::render::render_filling;
use combi_core::verify::{run_only, VerifyConfig};
use combi_core::{FillingClass, SetPartition, TriangularFilling};

type Outcome = Result<String, String>;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>, Duration);

fn fill(order: usize, ones: &[(usize, usize)]) -> TriangularFilling {
    TriangularFilling::new(order, ones.iter().copied()).unwrap()
}

fn part(n: usize, blocks: &[&[usize]]) -> SetPartition {
    SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn worked_examples() -> Outcome {
    let two_ones_in_row4 = fill(6, &[(1, 1), (2, 2), (4, 2), (4, 4), (5, 4), (6, 3)]);
    expect("order-6 example NE-chain", two_ones_in_row4.longest_ne_chain(), 3)?;
    expect("order-6 example validity", two_ones_in_row4.is_valid(), false)?;
    expect(
        "order-6 example staircase",
        render_filling(&two_ones_in_row4),
        "#\n.#\n...\n.#.#\n...#.\n..#...\n".to_string(),
    )?;

    let arc_example = part(9, &[&[1, 3, 6], &[2, 8], &[4], &[5, 7, 9]]);
    let arc_filling = fill(9, &[(3, 1), (4, 4), (6, 3), (7, 5), (8, 2), (9, 7)]);
    expect(
        "enhanced encoding",
        partition_to_n_filling(&arc_example),
        arc_filling.clone(),
    )?;
    expect(
        "enhanced decoding",
        n_filling_to_partition(&arc_filling).map_err(|e| e.to_string())?,
        arc_example,
    )?;

    let left = fill(
        9,
        &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 4), (6, 5), (7, 6), (8, 7), (9, 6)],
    );
    let middle = fill(9, &[(1, 1), (2, 2), (3, 3), (5, 4), (6, 5), (7, 6), (8, 7), (9, 6)]);
    let right = fill(9, &[(1, 1), (2, 2), (3, 3), (5, 4), (7, 5), (8, 7), (9, 6)]);
    let a = [0, 1, 2, 3, 3, 4, 5, 6, 5];
    expect(
        "inversion encoding",
        encode_inversion(&a).map_err(|e| e.to_string())?,
        left.clone(),
    )?;
    expect(
        "inversion decoding",
        decode_inversion(&left).map_err(|e| e.to_string())?.into_vec(),
        a.to_vec(),
    )?;
    expect("encoding in M_3", left.in_class(FillingClass::M, K), true)?;
    let s1 = alpha_step_traced(&left)
        .map_err(|e| e.to_string())?
        .ok_or("no first alpha step")?;
    expect("first alpha pivot", s1.context.pivot, 4)?;
    expect("first alpha case", s1.context.case, StepCase::Full)?;
    expect("after first alpha step", s1.result.clone(), middle)?;
    let s2 = alpha_step_traced(&s1.result)
        .map_err(|e| e.to_string())?
        .ok_or("no second alpha step")?;
    expect("second alpha pivot", s2.context.pivot, 6)?;
    expect("second alpha case", s2.context.case, StepCase::Partial)?;
    expect("after second alpha step", s2.result.clone(), right.clone())?;
    expect(
        "alpha fixpoint",
        alpha_step_traced(&right).map_err(|e| e.to_string())?.is_none(),
        true,
    )?;
    expect("phi", phi(&left).map_err(|e| e.to_string())?, right.clone())?;
    expect("psi", psi(&right).map_err(|e| e.to_string())?, left.clone())?;

    expect(
        "gamma example",
        gamma(&[0, 1, 2, 3, 4, 0, 4, 1, 5]).map_err(|e| e.to_string())?,
        fill(8, &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 1), (6, 5), (7, 3), (8, 7)]),
    )?;
    expect(
        "gamma(x')",
        gamma(&[0, 1, 2, 3, 4, 3, 4, 5, 6, 4]).map_err(|e| e.to_string())?,
        left.clone(),
    )?;

    let t = delta_trace(&[0, 0, 1, 2, 3, 4, 3, 4, 5, 6, 6, 6, 4]).map_err(|e| e.to_string())?;
    let f2 = fill(12, &[(2, 2), (3, 3), (4, 4), (6, 5), (8, 6), (9, 8), (12, 7)]);
    expect("delta: gamma stage", t.gamma, left)?;
    expect("delta: phi stage", t.phi, right)?;
    expect("delta: result", t.result.clone(), f2)?;
    expect("F'' in P_3", t.result.in_class(FillingClass::P, K), true)?;
    expect(
        "F'' linear decoding",
        p_filling_to_partition(&t.result).map_err(|e| e.to_string())?,
        part(13, &[&[1], &[2, 3, 4, 5, 7, 13], &[6, 9], &[8, 10], &[11], &[12]]),
    )?;
    Ok("all worked fillings reproduced square for square".into())
}

fn equinumerous(left: Family, right: Family, spot: &[(usize, usize)]) -> Outcome {
    let mut sizes = Vec::new();
    for n in 0..=9 {
        let (a, b) = (left.count(n, Exec::Sequential), right.count(n, Exec::Sequential));
        if a != b {
            return Err(format!("n = {n}: |{left}| = {a} but |{right}| = {b}"));
        }
        sizes.push(a.to_string());
    }
    for &(n, want) in spot {
        expect(&format!("|{right}({n})|"), right.count(n, Exec::Sequential), want)?;
    }
    Ok(format!(
        "{left} = {right} for n = 0..9: {} (single-threaded)",
        sizes.join(",")
    ))
}

fn checks(n_max: usize, names: &[&str]) -> Outcome {
    let report = run_only(&VerifyConfig::new(n_max), names);
    if report.checks.len() != names.len() {
        return Err(format!("expected {} checks, ran {}", names.len(), report.checks.len()));
    }
    let mut parts = Vec::new();
    for c in &report.checks {
        if !c.passed() {
            let cx = c.counterexample.as_ref().map(|v| v.to_string()).unwrap_or_default();
            return Err(format!("{}: {} failures, first {cx}", c.name, c.failures));
        }
        parts.push(format!("{} {}", c.name, c.instances));
    }
    Ok(format!("n <= {n_max}: {}", parts.join(", ")))
}

fn combi(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_combi"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("combi binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn cli_contract() -> Outcome {
    let ok = combi(&["verify", "--n-max", "6"], "");
    expect("verify --n-max 6 exit code", ok.status.code(), Some(0))?;

    let bad = combi(&["verify", "--n-max", "6", "--inject-fault", "phi"], "");
    expect("fault-injected verify exit code", bad.status.code(), Some(1))?;
    let text = String::from_utf8_lossy(&bad.stdout);
    let cx = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("counterexample: "))
        .ok_or("no counterexample printed")?;
    serde_json::from_str::<serde_json::Value>(cx).map_err(|e| format!("counterexample is not JSON: {e}"))?;

    let malformed = combi(&["render"], "{\"type\":\"filling\",");
    expect("malformed input exit code", malformed.status.code(), Some(2))?;

    for family in ["inv3", "asc3", "part-nonnest3", "part-enh-nonnest3"] {
        let one = combi(
            &[
                "count",
                "--family",
                family,
                "--n-max",
                "8",
                "--jobs",
                "1",
                "--no-timing",
            ],
            "",
        );
        let four = combi(
            &[
                "count",
                "--family",
                family,
                "--n-max",
                "8",
                "--jobs",
                "4",
                "--no-timing",
            ],
            "",
        );
        expect("count exit code", one.status.code(), Some(0))?;
        if one.stdout != four.stdout {
            return Err(format!("{family}: CSV differs between --jobs 1 and --jobs 4"));
        }
    }
    Ok("exit codes 0/1/2 as specified; CSV identical across --jobs 1 and 4".into())
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "worked-example goldens",
            Box::new(worked_examples),
            Duration::from_secs(1),
        ),
        (
            "|I_3(n)| = |E_3(n)|",
            Box::new(|| equinumerous(Family::Inv3, Family::PartEnhNonnest3, &[])),
            Duration::from_secs(120),
        ),
        (
            "|A_3(n)| = |C_3(n)|",
            Box::new(|| equinumerous(Family::Asc3, Family::PartNonnest3, &[(4, 15), (6, 202)])),
            Duration::from_secs(120),
        ),
        (
            "phi/psi bijectivity",
            Box::new(|| checks(7, &["psi_phi_on_m3", "phi_psi_on_n3"])),
            Duration::from_secs(30),
        ),
        (
            "delta/delta' bijectivity",
            Box::new(|| checks(8, &["delta_round_trip"])),
            Duration::from_secs(120),
        ),
        (
            "statistic transport",
            Box::new(|| checks(8, &["ne_chain_inversion", "ne_chain_partitions"])),
            Duration::from_secs(60),
        ),
        (
            "step-level invariants",
            Box::new(|| checks(8, &["alpha_steps", "beta_steps", "delta_round_trip"])),
            Duration::from_secs(120),
        ),
        ("CLI contract", Box::new(cli_contract), Duration::from_secs(120)),
    ];

    let mut failed = 0;
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, budget {budget:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {}: {status} {name} [{elapsed:.2?}] {detail}", k + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

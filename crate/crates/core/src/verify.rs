//! Exhaustive invariant suite for the encodings and bijections.
//!
//! Every check sweeps all objects of each size `n <= n_max`, counts the
//! instances it examined and keeps the first failing instance (in canonical
//! enumeration order) as a JSON counterexample.

use std::collections::HashSet;
use std::fmt::Write;

use serde_json::{json, Value};

use crate::bimaps::{
    decode_inversion, delta_prime, delta_prime_trace, delta_trace, encode_inversion, gamma, gamma_inv,
    n_filling_to_partition, p_filling_to_partition, partition_to_n_filling, partition_to_p_filling, phi_trace, psi,
    psi_trace, Step, K,
};
use crate::envelope::ObjectEnvelope;
use crate::filling::{FillingClass, TriangularFilling};
use crate::par::Exec;
use crate::partition::{enhanced_arcs, linear_arcs, Flavor, NestingFilter, PartitionEnumerator, SetPartition};
use crate::seq::{avoids, longest_weakly_decreasing, Avoidance, IntSequence, Mode, SequenceEnumerator, SequenceFamily};
use crate::Result;

/// A deliberately broken map, used to show the suite catches corruption.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// φ replaced by the identity.
    Phi,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub exec: Exec,
    pub fault: Option<Fault>,
}

impl VerifyConfig {
    pub fn new(n_max: usize) -> Self {
        VerifyConfig {
            n_max,
            exec: Exec::default(),
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub counterexample: Option<Value>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult {
            name,
            instances: 0,
            failures: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn absorb(&mut self, n: usize, outcomes: Vec<Outcome>) {
        for (instances, failure) in outcomes {
            self.instances += instances;
            if let Some(mut detail) = failure {
                self.failures += 1;
                if self.counterexample.is_none() {
                    detail["n"] = json!(n);
                    self.counterexample = Some(detail);
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn total_instances(&self) -> usize {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            writeln!(
                out,
                "{status:<4} {:<24} instances={} failures={}",
                c.name, c.instances, c.failures
            )
            .unwrap();
            if let Some(cx) = &c.counterexample {
                writeln!(out, "     counterexample: {cx}").unwrap();
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(
            out,
            "{} checks, {} instances, {} failed (n_max = {})",
            self.checks.len(),
            self.total_instances(),
            failed,
            self.n_max
        )
        .unwrap();
        out
    }

    pub const CSV_HEADER: &'static str = "check,n_max,instances,failures";

    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", Self::CSV_HEADER);
        for c in &self.checks {
            writeln!(out, "{},{},{},{}", c.name, self.n_max, c.instances, c.failures).unwrap();
        }
        out
    }
}

/// Examined instances and an optional failure description.
type Outcome = (usize, Option<Value>);

fn pass(instances: usize) -> Outcome {
    (instances, None)
}

fn fail(input: impl Into<Value>, why: impl Into<String>) -> Outcome {
    (1, Some(json!({ "input": input.into(), "failure": why.into() })))
}

fn outcome(input: impl FnOnce() -> Value, r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => pass(1),
        Ok(Some(why)) => fail(input(), why),
        Err(e) => fail(input(), e.to_string()),
    }
}

fn env_seq(family: SequenceFamily, x: &[usize]) -> Value {
    serde_json::to_value(ObjectEnvelope::sequence(family, x)).unwrap()
}

fn env_fill(f: &TriangularFilling) -> Value {
    serde_json::to_value(ObjectEnvelope::from(f)).unwrap()
}

fn env_part(p: &SetPartition) -> Value {
    serde_json::to_value(ObjectEnvelope::from(p)).unwrap()
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(why())
    }
}

fn i3(n: usize, exec: Exec) -> Vec<IntSequence> {
    SequenceEnumerator::new(n, SequenceFamily::Inversion, Some(Avoidance::new(K, Mode::Weak))).collect_with(exec)
}

fn e3(n: usize, exec: Exec) -> Vec<SetPartition> {
    PartitionEnumerator::new(n, Some(NestingFilter::new(K, Flavor::Enhanced))).collect_with(exec)
}

fn c3(n: usize, exec: Exec) -> Vec<SetPartition> {
    PartitionEnumerator::new(n, Some(NestingFilter::new(K, Flavor::Linear))).collect_with(exec)
}

fn a3(n: usize, exec: Exec) -> Vec<IntSequence> {
    SequenceEnumerator::new(n, SequenceFamily::Ascent, Some(Avoidance::new(K, Mode::Strict))).collect_with(exec)
}

fn pa3(n: usize, exec: Exec) -> Vec<IntSequence> {
    SequenceEnumerator::new(
        n,
        SequenceFamily::PrimitiveAscent,
        Some(Avoidance::new(K, Mode::Strict)),
    )
    .collect_with(exec)
}

/// φ as seen by the suite, possibly corrupted.
fn phi_under(fault: Option<Fault>, f: &TriangularFilling) -> Result<(TriangularFilling, Vec<Step>)> {
    if fault == Some(Fault::Phi) {
        return Ok((f.clone(), Vec::new()));
    }
    let steps = phi_trace(f)?;
    let image = steps.last().map_or_else(|| f.clone(), |s| s.result.clone());
    Ok((image, steps))
}

type CheckFn = fn(&VerifyConfig) -> CheckResult;

const CHECKS: [(&str, CheckFn); 12] = [
    ("encode_decode", check_encode_decode),
    ("ne_chain_inversion", check_ne_chain_inversion),
    ("ne_chain_partitions", check_ne_chain_partitions),
    ("kratt_round_trip", check_kratt_round_trip),
    ("psi_phi_on_m3", check_psi_phi),
    ("phi_psi_on_n3", check_phi_psi),
    ("alpha_steps", check_alpha_steps),
    ("beta_steps", check_beta_steps),
    ("gamma_round_trip", check_gamma),
    ("delta_round_trip", check_delta),
    ("pipeline_bijection", check_pipelines),
    ("equinumerosity", check_equinumerosity),
];

/// Names of all checks, in report order.
pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(name, _)| *name)
}

/// Runs every check for all sizes up to `config.n_max`.
pub fn run(config: &VerifyConfig) -> Report {
    let names: Vec<&str> = check_names().collect();
    run_only(config, &names)
}

/// Runs the named checks, in report order; unknown names are ignored.
pub fn run_only(config: &VerifyConfig, names: &[&str]) -> Report {
    let checks = CHECKS
        .iter()
        .filter(|(name, _)| names.contains(name))
        .map(|(_, check)| check(config))
        .collect();
    Report {
        n_max: config.n_max,
        checks,
    }
}

fn sweep<T, F>(name: &'static str, config: &VerifyConfig, items: impl Fn(usize) -> Vec<T>, f: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync + Send,
{
    let mut check = CheckResult::new(name);
    for n in 0..=config.n_max {
        let all = items(n);
        check.absorb(n, config.exec.map(&all, &f));
    }
    check
}

/// Encoding round trip on all inversion sequences; the image is in `M_3`
/// exactly when the sequence avoids weakly decreasing triples.
fn check_encode_decode(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    sweep(
        "encode_decode",
        config,
        |n| SequenceEnumerator::new(n, SequenceFamily::Inversion, None).collect_with(exec),
        |x| {
            outcome(
                || env_seq(SequenceFamily::Inversion, x),
                (|| {
                    let f = encode_inversion(x)?;
                    let back = decode_inversion(&f)?;
                    Ok(ensure(back == *x, || format!("decoded to {back}")).or_else(|| {
                        ensure(f.in_class(FillingClass::M, K) == avoids(x, K, Mode::Weak), || {
                            "M_3 membership disagrees with weak 3-avoidance".into()
                        })
                    }))
                })(),
            )
        },
    )
}

fn check_ne_chain_inversion(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    sweep(
        "ne_chain_inversion",
        config,
        |n| SequenceEnumerator::new(n, SequenceFamily::Inversion, None).collect_with(exec),
        |x| {
            outcome(
                || env_seq(SequenceFamily::Inversion, x),
                encode_inversion(x).map(|f| {
                    let (a, b) = (f.longest_ne_chain(), longest_weakly_decreasing(x));
                    ensure(a == b, || format!("NE-chain {a} but weakly decreasing {b}"))
                }),
            )
        },
    )
}

/// Maximal (enhanced) nesting equals the longest NE-chain of the
/// (enhanced) encoding.
fn check_ne_chain_partitions(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    sweep(
        "ne_chain_partitions",
        config,
        |n| PartitionEnumerator::new(n, None).collect_with(exec),
        |p| {
            let enhanced = (
                enhanced_arcs(p).max_nesting(),
                partition_to_n_filling(p).longest_ne_chain(),
            );
            let linear = match partition_to_p_filling(p) {
                Ok(f) => (linear_arcs(p).max_nesting(), f.longest_ne_chain()),
                Err(_) => (0, 0),
            };
            if enhanced.0 != enhanced.1 {
                fail(
                    env_part(p),
                    format!("enhanced nesting {} but NE-chain {}", enhanced.0, enhanced.1),
                )
            } else if linear.0 != linear.1 {
                fail(env_part(p), format!("nesting {} but NE-chain {}", linear.0, linear.1))
            } else {
                pass(1)
            }
        },
    )
}

fn check_kratt_round_trip(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    sweep(
        "kratt_round_trip",
        config,
        |n| PartitionEnumerator::new(n, None).collect_with(exec),
        |p| {
            outcome(
                || env_part(p),
                (|| {
                    let g = partition_to_n_filling(p);
                    let back = n_filling_to_partition(&g)?;
                    if back != *p {
                        return Ok(Some(format!("enhanced decoding gave {back}")));
                    }
                    if !g.in_class(FillingClass::N, g.order() + 1) {
                        return Ok(Some(format!("enhanced encoding {g} violates (a1)/(b1)")));
                    }
                    if p.n() == 0 {
                        return Ok(None);
                    }
                    let h = partition_to_p_filling(p)?;
                    let back = p_filling_to_partition(&h)?;
                    Ok(ensure(back == *p, || format!("linear decoding gave {back}")))
                })(),
            )
        },
    )
}

/// ψ∘φ = id on `M_3(n)`, with φ landing in `N_3(n)`.
fn check_psi_phi(config: &VerifyConfig) -> CheckResult {
    let (exec, fault) = (config.exec, config.fault);
    sweep(
        "psi_phi_on_m3",
        config,
        |n| exec.map(&i3(n, exec), |x| encode_inversion(x).expect("inversion sequence")),
        |f| {
            outcome(
                || env_fill(f),
                (|| {
                    let (g, _) = phi_under(fault, f)?;
                    if !g.in_class(FillingClass::N, K) {
                        return Ok(Some(format!("phi image {g} is not in N_3")));
                    }
                    let back = psi(&g)?;
                    Ok(ensure(back == *f, || format!("psi(phi(f)) = {back}")))
                })(),
            )
        },
    )
}

/// φ∘ψ = id on `N_3(n)`, with ψ landing in `M_3(n)`.
fn check_phi_psi(config: &VerifyConfig) -> CheckResult {
    let (exec, fault) = (config.exec, config.fault);
    sweep(
        "phi_psi_on_n3",
        config,
        |n| exec.map(&e3(n, exec), partition_to_n_filling),
        |g| {
            outcome(
                || env_fill(g),
                (|| {
                    let f = psi(g)?;
                    if !f.in_class(FillingClass::M, K) {
                        return Ok(Some(format!("psi image {f} is not in M_3")));
                    }
                    let (back, _) = phi_under(fault, &f)?;
                    Ok(ensure(back == *g, || format!("phi(psi(g)) = {back}")))
                })(),
            )
        },
    )
}

fn step_invariants(
    before: &TriangularFilling,
    step: &Step,
    previous_pivot: Option<usize>,
    increasing: bool,
) -> Option<String> {
    let after = &step.result;
    let i = step.context.pivot;
    if !after.is_valid() {
        return Some(format!("pivot {i}: result {after} is not valid"));
    }
    if after.longest_ne_chain() >= K {
        return Some(format!("pivot {i}: result {after} has an NE-chain of length {K}"));
    }
    if let Some(p) = previous_pivot {
        if (increasing && i <= p) || (!increasing && i >= p) {
            return Some(format!("pivot moved from {p} to {i}"));
        }
    }
    if increasing {
        if after.count_ones() + 1 != before.count_ones() {
            return Some(format!("pivot {i}: alpha must remove exactly one 1"));
        }
        if let Some(c) = (1..=i).find(|&c| after.col_ones(c).count() > 1) {
            return Some(format!("pivot {i}: column {c} still holds two 1s"));
        }
    } else {
        if after.count_ones() != before.count_ones() + 1 {
            return Some(format!("pivot {i}: beta must add exactly one 1"));
        }
        if let Some(r) = (i..=after.order()).find(|&r| after.row_ones(r).next().is_none()) {
            return Some(format!("pivot {i}: row {r} is still zero"));
        }
        if !after.covers_every_index() {
            return Some(format!("pivot {i}: result {after} violates (b1)"));
        }
    }
    None
}

fn steps_invariants(start: &TriangularFilling, steps: &[Step], increasing: bool) -> Outcome {
    let mut before = start;
    let mut previous = None;
    for step in steps {
        if let Some(why) = step_invariants(before, step, previous, increasing) {
            return (
                steps.len(),
                Some(json!({
                    "input": env_fill(start),
                    "step": step.context,
                    "before": env_fill(before),
                    "after": env_fill(&step.result),
                    "failure": why,
                })),
            );
        }
        previous = Some(step.context.pivot);
        before = &step.result;
    }
    pass(steps.len())
}

/// Per-step assertions on every α step of φ over `M_3(n)`.
fn check_alpha_steps(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    sweep(
        "alpha_steps",
        config,
        |n| exec.map(&i3(n, exec), |x| encode_inversion(x).expect("inversion sequence")),
        |f| match phi_trace(f) {
            Ok(steps) => steps_invariants(f, &steps, true),
            Err(e) => fail(env_fill(f), e.to_string()),
        },
    )
}

/// Per-step assertions on every β step of ψ over `N_3(n)`.
fn check_beta_steps(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    sweep(
        "beta_steps",
        config,
        |n| exec.map(&e3(n, exec), partition_to_n_filling),
        |g| match psi_trace(g) {
            Ok(steps) => steps_invariants(g, &steps, false),
            Err(e) => fail(env_fill(g), e.to_string()),
        },
    )
}

/// γ: `PA_3(n+1) -> M_3(n)` in both directions.
fn check_gamma(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    let mut check = sweep(
        "gamma_round_trip",
        config,
        |n| pa3(n + 1, exec),
        |x| {
            outcome(
                || env_seq(SequenceFamily::PrimitiveAscent, x),
                (|| {
                    let f = gamma(x)?;
                    if !f.in_class(FillingClass::M, K) {
                        return Ok(Some(format!("gamma image {f} is not in M_3")));
                    }
                    let back = gamma_inv(&f)?;
                    Ok(ensure(back == *x, || format!("gamma_inv(gamma(x)) = {back}")))
                })(),
            )
        },
    );
    let other = sweep(
        "gamma_round_trip",
        config,
        |n| exec.map(&i3(n, exec), |x| encode_inversion(x).expect("inversion sequence")),
        |f| {
            outcome(
                || env_fill(f),
                (|| {
                    let x = gamma_inv(f)?;
                    let back = gamma(&x)?;
                    Ok(ensure(back == *f, || format!("gamma(gamma_inv(f)) = {back}")))
                })(),
            )
        },
    );
    merge(&mut check, other);
    check
}

fn merge(into: &mut CheckResult, other: CheckResult) {
    into.instances += other.instances;
    into.failures += other.failures;
    if into.counterexample.is_none() {
        into.counterexample = other.counterexample;
    }
}

/// δ: `A_3(n+1) -> P_3(n)` in both directions, with every α step of the
/// inner φ and every β step of the inner ψ checked as well.
fn check_delta(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    let mut check = sweep(
        "delta_round_trip",
        config,
        |n| a3(n + 1, exec),
        |x| {
            outcome(
                || env_seq(SequenceFamily::Ascent, x),
                (|| {
                    let trace = delta_trace(x)?;
                    if let (_, Some(bad)) = steps_invariants(&trace.gamma, &trace.alpha_steps, true) {
                        return Ok(Some(bad["failure"].as_str().unwrap_or_default().to_string()));
                    }
                    let f = trace.result;
                    if !f.in_class(FillingClass::P, K) {
                        return Ok(Some(format!("delta image {f} is not in P_3")));
                    }
                    let back = delta_prime(&f)?;
                    Ok(ensure(back == *x, || format!("delta_prime(delta(x)) = {back}")))
                })(),
            )
        },
    );
    let other = sweep(
        "delta_round_trip",
        config,
        |n| {
            exec.map(&c3(n + 1, exec), |p| {
                partition_to_p_filling(p).expect("nonempty partition")
            })
        },
        |f| {
            outcome(
                || env_fill(f),
                (|| {
                    let trace = delta_prime_trace(f)?;
                    if let (_, Some(bad)) = steps_invariants(&trace.reduced, &trace.beta_steps, false) {
                        return Ok(Some(bad["failure"].as_str().unwrap_or_default().to_string()));
                    }
                    let x = trace.result;
                    let back = crate::bimaps::delta(&x)?;
                    Ok(ensure(back == *f, || format!("delta(delta_prime(f)) = {back}")))
                })(),
            )
        },
    );
    merge(&mut check, other);
    check
}

/// The composite maps are injective and hit exactly the partition side.
fn check_pipelines(config: &VerifyConfig) -> CheckResult {
    let (exec, fault) = (config.exec, config.fault);
    let mut check = CheckResult::new("pipeline_bijection");
    for n in 0..=config.n_max {
        let images: Vec<Result<SetPartition>> = exec.map(&i3(n, exec), |x| {
            let (g, _) = phi_under(fault, &encode_inversion(x)?)?;
            n_filling_to_partition(&g)
        });
        let target: HashSet<SetPartition> = e3(n, exec).into_iter().collect();
        check.absorb(n, vec![image_outcome("I_3 -> E_3", n, images, &target)]);

        let images: Vec<Result<SetPartition>> =
            exec.map(&a3(n + 1, exec), |x| p_filling_to_partition(&crate::bimaps::delta(x)?));
        let target: HashSet<SetPartition> = c3(n + 1, exec).into_iter().collect();
        check.absorb(n, vec![image_outcome("A_3 -> C_3", n + 1, images, &target)]);
    }
    check
}

fn image_outcome(
    label: &str,
    size: usize,
    images: Vec<Result<SetPartition>>,
    target: &HashSet<SetPartition>,
) -> Outcome {
    let total = images.len();
    let mut seen = HashSet::new();
    for image in images {
        match image {
            Err(e) => return fail(json!({ "map": label, "size": size }), e.to_string()),
            Ok(p) => {
                if !target.contains(&p) {
                    return fail(env_part(&p), format!("{label}: image outside the target family"));
                }
                if !seen.insert(p.clone()) {
                    return fail(env_part(&p), format!("{label}: image hit twice"));
                }
            }
        }
    }
    if seen.len() != target.len() {
        return fail(
            json!({ "map": label, "size": size }),
            format!("{label}: {} images for {} targets", seen.len(), target.len()),
        );
    }
    pass(total)
}

/// `|I_3(n)| = |E_3(n)|` and `|A_3(n)| = |C_3(n)|`, by independent
/// enumeration.
fn check_equinumerosity(config: &VerifyConfig) -> CheckResult {
    let exec = config.exec;
    let mut check = CheckResult::new("equinumerosity");
    for n in 0..=config.n_max {
        let pairs = [
            ("I_3", i3(n, exec).len(), "E_3", e3(n, exec).len()),
            ("A_3", a3(n, exec).len(), "C_3", c3(n, exec).len()),
        ];
        let outcomes = pairs
            .iter()
            .map(|&(a, x, b, y)| {
                if x == y {
                    pass(1)
                } else {
                    fail(json!({ "size": n }), format!("|{a}| = {x} but |{b}| = {y}"))
                }
            })
            .collect();
        check.absorb(n, outcomes);
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let report = run(&VerifyConfig {
                n_max: 5,
                exec,
                fault: None,
            });
            assert!(report.passed(), "{}", report.to_text());
            assert_eq!(report.checks.len(), 12);
        }
    }

    #[test]
    fn selected_checks_only() {
        let report = run_only(&VerifyConfig::new(3), &["beta_steps", "encode_decode"]);
        let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, ["encode_decode", "beta_steps"]);
        assert_eq!(check_names().count(), 12);
    }

    #[test]
    fn degenerate_suite_passes() {
        let report = run(&VerifyConfig::new(0));
        assert!(report.passed(), "{}", report.to_text());
        assert!(report
            .to_csv()
            .starts_with("check,n_max,instances,failures\nencode_decode,0,"));
    }

    #[test]
    fn injected_fault_is_caught() {
        let report = run(&VerifyConfig {
            n_max: 3,
            exec: Exec::Parallel,
            fault: Some(Fault::Phi),
        });
        assert!(!report.passed());
        let c = report.check("psi_phi_on_m3").unwrap();
        assert!(c.failures > 0);
        let cx = c.counterexample.as_ref().unwrap();
        assert_eq!(cx["input"]["type"], "filling");
        assert!(report.to_text().contains("counterexample"));
    }

    #[test]
    fn deterministic_across_policies() {
        let a = run(&VerifyConfig {
            n_max: 4,
            exec: Exec::Sequential,
            fault: Some(Fault::Phi),
        });
        let b = run(&VerifyConfig {
            n_max: 4,
            exec: Exec::Parallel,
            fault: Some(Fault::Phi),
        });
        assert_eq!(a, b);
    }
}

//! Named bijections applied to JSON envelopes.

use anyhow::{anyhow, bail, Result};
use serde_json::{json, Value};

use combi_core::bimaps::{self, Step};
use combi_core::envelope::ObjectEnvelope;
use combi_core::{IntSequence, SequenceFamily, TriangularFilling};

pub const NAMES: [&str; 18] = [
    "encode_inversion",
    "decode_inversion",
    "phi",
    "psi",
    "alpha_step",
    "beta_step",
    "gamma",
    "gamma_inv",
    "delta",
    "delta_prime",
    "kratt_enhanced",
    "kratt_enhanced_inv",
    "kratt_linear",
    "kratt_linear_inv",
    "inv_to_enhanced_partition",
    "enhanced_partition_to_inv",
    "asc_to_partition",
    "partition_to_asc",
];

/// Image of a map and, on request, its intermediate stages.
pub struct Applied {
    pub result: ObjectEnvelope,
    pub trace: Vec<Value>,
}

/// Splits an optional `_trace` suffix off a bijection name.
pub fn resolve(name: &str) -> Result<(&'static str, bool)> {
    let (base, traced) = match name.strip_suffix("_trace") {
        Some(base) => (base, true),
        None => (name, false),
    };
    NAMES
        .iter()
        .find(|n| **n == base)
        .map(|n| (*n, traced))
        .ok_or_else(|| anyhow!("unknown bijection `{name}` (expected one of: {})", NAMES.join(", ")))
}

fn stage(label: impl Into<String>, f: &TriangularFilling) -> Value {
    json!({ "label": label.into(), "filling": ObjectEnvelope::from(f) })
}

fn step_stages(prefix: &str, steps: &[Step]) -> Vec<Value> {
    steps
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let mut v = stage(format!("{prefix} {}", k + 1), &s.result);
            v["context"] = serde_json::to_value(&s.context).expect("contexts serialise");
            v
        })
        .collect()
}

fn seq(family: SequenceFamily, x: &IntSequence) -> ObjectEnvelope {
    ObjectEnvelope::sequence(family, x)
}

pub fn apply(name: &str, input: &ObjectEnvelope) -> Result<Applied> {
    let mut trace = Vec::new();
    let result = match name {
        "encode_inversion" => (&bimaps::encode_inversion(&input.to_sequence()?.1)?).into(),
        "decode_inversion" => seq(
            SequenceFamily::Inversion,
            &bimaps::decode_inversion(&input.to_filling()?)?,
        ),
        "phi" | "psi" => {
            let f = input.to_filling()?;
            let (steps, label) = if name == "phi" {
                (bimaps::phi_trace(&f)?, "alpha")
            } else {
                (bimaps::psi_trace(&f)?, "beta")
            };
            trace = step_stages(label, &steps);
            (&steps.last().map_or(f, |s| s.result.clone())).into()
        }
        "alpha_step" | "beta_step" => {
            let f = input.to_filling()?;
            let step = if name == "alpha_step" {
                bimaps::alpha_step_traced(&f)?
            } else {
                bimaps::beta_step_traced(&f)?
            };
            let label = &name[..name.len() - "_step".len()];
            trace = step_stages(label, step.as_slice());
            (&step.map_or(f, |s| s.result)).into()
        }
        "gamma" => (&bimaps::gamma(&input.to_sequence()?.1)?).into(),
        "gamma_inv" => seq(
            SequenceFamily::PrimitiveAscent,
            &bimaps::gamma_inv(&input.to_filling()?)?,
        ),
        "delta" => {
            let t = bimaps::delta_trace(&input.to_sequence()?.1)?;
            trace.push(stage("gamma", &t.gamma));
            trace.extend(step_stages("alpha", &t.alpha_steps));
            trace.push(stage("phi", &t.phi));
            trace.push(stage("insert_criticals", &t.result));
            (&t.result).into()
        }
        "delta_prime" => {
            let t = bimaps::delta_prime_trace(&input.to_filling()?)?;
            let mut reduced = stage("remove_criticals", &t.reduced);
            reduced["gaps"] = json!(t.gaps);
            trace.push(reduced);
            trace.extend(step_stages("beta", &t.beta_steps));
            trace.push(stage("psi", &t.psi));
            trace.push(json!({ "label": "gamma_inv", "sequence": seq(SequenceFamily::PrimitiveAscent, &t.skeleton) }));
            seq(SequenceFamily::Ascent, &t.result)
        }
        "kratt_enhanced" => (&bimaps::partition_to_n_filling(&input.to_partition()?)).into(),
        "kratt_enhanced_inv" => (&bimaps::n_filling_to_partition(&input.to_filling()?)?).into(),
        "kratt_linear" => (&bimaps::partition_to_p_filling(&input.to_partition()?)?).into(),
        "kratt_linear_inv" => (&bimaps::p_filling_to_partition(&input.to_filling()?)?).into(),
        "inv_to_enhanced_partition" => (&bimaps::inversion_to_enhanced_partition(&input.to_sequence()?.1)?).into(),
        "enhanced_partition_to_inv" => seq(
            SequenceFamily::Inversion,
            &bimaps::enhanced_partition_to_inversion(&input.to_partition()?)?,
        ),
        "asc_to_partition" => (&bimaps::ascent_to_partition(&input.to_sequence()?.1)?).into(),
        "partition_to_asc" => seq(
            SequenceFamily::Ascent,
            &bimaps::partition_to_ascent(&input.to_partition()?)?,
        ),
        other => bail!("unknown bijection `{other}`"),
    };
    Ok(Applied { result, trace })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            assert_eq!(resolve(n).unwrap(), (n, false));
            assert_eq!(resolve(&format!("{n}_trace")).unwrap(), (n, true));
        }
        assert!(resolve("sigma").is_err());
    }
}

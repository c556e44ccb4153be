//! The explicit bijections.
//!
//! ```text
//!   I_3(n) --encode--> M_3(n) --phi--> N_3(n) --kratt_enhanced_inv--> E_3(n)
//!   A_3(n+1) --delta--> P_3(n) --kratt_linear_inv--> C_3(n+1)
//! ```
//!
//! `delta` itself runs through `gamma: PA_3(k+1) -> M_3(k)` and `phi`.

mod delta;
mod encode;
mod gamma;
mod transform;

pub use delta::{delta, delta_prime, delta_prime_trace, delta_trace, DeltaPrimeTrace, DeltaTrace};
pub use encode::{
    decode_inversion, encode_inversion, n_filling_to_partition, p_filling_to_partition, partition_to_n_filling,
    partition_to_p_filling,
};
pub use gamma::{gamma, gamma_inv};
pub use transform::{
    alpha_pivot, alpha_step, alpha_step_traced, beta_pivot, beta_step, beta_step_traced, phi, phi_trace, psi,
    psi_trace, Step, StepCase, StepContext, K,
};

use crate::partition::{is_k_nonnesting, SetPartition};
use crate::seq::{avoids, is_ascent_sequence, is_inversion_sequence, IntSequence, Mode};
use crate::{Error, Result};

/// `I_3(n) -> E_3(n)`: encode, straighten with φ, decode the enhanced
/// arc diagram.
pub fn inversion_to_enhanced_partition(x: &[usize]) -> Result<SetPartition> {
    if !is_inversion_sequence(x) || !avoids(x, K, Mode::Weak) {
        return Err(Error::pre(
            "inv_to_enhanced_partition",
            format!("{} is not in I_3({})", IntSequence::from(x), x.len()),
        ));
    }
    n_filling_to_partition(&phi(&encode_inversion(x)?)?)
}

/// Inverse of [`inversion_to_enhanced_partition`].
pub fn enhanced_partition_to_inversion(p: &SetPartition) -> Result<IntSequence> {
    if !is_k_nonnesting(p, K, true) {
        return Err(Error::pre(
            "enhanced_partition_to_inv",
            format!("{p} has an enhanced 3-nesting"),
        ));
    }
    decode_inversion(&psi(&partition_to_n_filling(p))?)
}

/// `A_3(n+1) -> C_3(n+1)`: δ followed by the linear decoding.
pub fn ascent_to_partition(x: &[usize]) -> Result<SetPartition> {
    if x.is_empty() || !is_ascent_sequence(x) || !avoids(x, K, Mode::Strict) {
        return Err(Error::pre(
            "asc_to_partition",
            format!("{} is not in A_3({})", IntSequence::from(x), x.len()),
        ));
    }
    p_filling_to_partition(&delta(x)?)
}

/// Inverse of [`ascent_to_partition`].
pub fn partition_to_ascent(p: &SetPartition) -> Result<IntSequence> {
    if !is_k_nonnesting(p, K, false) {
        return Err(Error::pre("partition_to_asc", format!("{p} has a 3-nesting")));
    }
    delta_prime(&partition_to_p_filling(p)?)
}

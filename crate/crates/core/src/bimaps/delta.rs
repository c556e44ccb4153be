//! δ: `A_3(n+1) -> P_3(n)` and its inverse δ′.
//!
//! δ strips the runs of repeated entries, sends the primitive skeleton
//! through γ and φ, then re-inserts one critical index for every repeat:
//! `c_1 - 1` before index 1 and `c_{i+1} - 1` right after index `i`.
//! δ′ removes the critical indices, maps back through ψ and γ⁻¹, and gives
//! run `j` of the skeleton multiplicity `g_j + 1` from the critical gaps.

use crate::filling::{FillingClass, TriangularFilling};
use crate::seq::{avoids, is_ascent_sequence, run_length_decompose, IntSequence, Mode, RunDecomposition};
use crate::{Error, Result};

use super::gamma::{gamma, gamma_inv};
use super::transform::{phi_trace, psi_trace, Step, K};

/// Intermediate fillings of a δ run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTrace {
    pub decomposition: RunDecomposition,
    /// `γ(x′)` in `M_3(k)`.
    pub gamma: TriangularFilling,
    /// The α steps taking `γ(x′)` to `φ(γ(x′))`.
    pub alpha_steps: Vec<Step>,
    /// `φ(γ(x′))` in `N_3(k)`.
    pub phi: TriangularFilling,
    /// The final filling in `P_3(n)`.
    pub result: TriangularFilling,
}

pub fn delta_trace(x: &[usize]) -> Result<DeltaTrace> {
    if x.is_empty() || !is_ascent_sequence(x) || !avoids(x, K, Mode::Strict) {
        return Err(Error::pre(
            "delta",
            format!("{} is not in A_3({})", IntSequence::from(x), x.len()),
        ));
    }
    let decomposition = run_length_decompose(x)?;
    let gamma = gamma(decomposition.runs())?;
    let alpha_steps = phi_trace(&gamma)?;
    let phi = alpha_steps.last().map_or_else(|| gamma.clone(), |s| s.result.clone());
    let gaps: Vec<usize> = decomposition.multiplicities().iter().map(|c| c - 1).collect();
    let result = phi.insert_criticals(&gaps)?;
    Ok(DeltaTrace {
        decomposition,
        gamma,
        alpha_steps,
        phi,
        result,
    })
}

pub fn delta(x: &[usize]) -> Result<TriangularFilling> {
    Ok(delta_trace(x)?.result)
}

/// Intermediate objects of a δ′ run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPrimeTrace {
    /// Critical indices removed, in `N_3(k)`.
    pub reduced: TriangularFilling,
    pub gaps: Vec<usize>,
    pub beta_steps: Vec<Step>,
    /// `ψ` of the reduced filling, in `M_3(k)`.
    pub psi: TriangularFilling,
    /// `γ⁻¹` of that, in `PA_3(k+1)`.
    pub skeleton: IntSequence,
    pub result: IntSequence,
}

pub fn delta_prime_trace(f: &TriangularFilling) -> Result<DeltaPrimeTrace> {
    if !f.in_class(FillingClass::P, K) {
        return Err(Error::pre("delta_prime", format!("{f} is not in P_3({})", f.order())));
    }
    let (reduced, profile) = f.remove_criticals();
    let beta_steps = psi_trace(&reduced)?;
    let psi = beta_steps.last().map_or_else(|| reduced.clone(), |s| s.result.clone());
    let skeleton = gamma_inv(&psi)?;
    let multiplicities = profile.gaps.iter().map(|g| g + 1).collect();
    let result = RunDecomposition::from_parts(skeleton.to_vec(), multiplicities)?.expand();
    Ok(DeltaPrimeTrace {
        reduced,
        gaps: profile.gaps,
        beta_steps,
        psi,
        skeleton,
        result,
    })
}

pub fn delta_prime(f: &TriangularFilling) -> Result<IntSequence> {
    Ok(delta_prime_trace(f)?.result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(order: usize, ones: &[(usize, usize)]) -> TriangularFilling {
        TriangularFilling::new(order, ones.iter().copied()).unwrap()
    }

    const DELTA_INPUT: [usize; 13] = [0, 0, 1, 2, 3, 4, 3, 4, 5, 6, 6, 6, 4];

    fn p3_example() -> TriangularFilling {
        fill(12, &[(2, 2), (3, 3), (4, 4), (6, 5), (8, 6), (9, 8), (12, 7)])
    }

    #[test]
    fn delta_worked_example() {
        let trace = delta_trace(&DELTA_INPUT).unwrap();
        assert_eq!(trace.decomposition.runs(), &[0, 1, 2, 3, 4, 3, 4, 5, 6, 4]);
        assert_eq!(
            trace.gamma,
            fill(
                9,
                &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 4), (6, 5), (7, 6), (8, 7), (9, 6)]
            )
        );
        assert_eq!(
            trace.phi,
            fill(9, &[(1, 1), (2, 2), (3, 3), (5, 4), (7, 5), (8, 7), (9, 6)])
        );
        assert_eq!(trace.result, p3_example());
        assert!(trace.result.in_class(FillingClass::P, 3));
        assert_eq!(delta_prime(&p3_example()).unwrap().values(), &DELTA_INPUT);
    }

    #[test]
    fn small_cases() {
        assert_eq!(delta(&[0, 0]).unwrap(), TriangularFilling::empty(1));
        assert_eq!(delta(&[0, 1]).unwrap(), fill(1, &[(1, 1)]));
        assert_eq!(delta(&[0]).unwrap(), TriangularFilling::empty(0));
        assert_eq!(delta_prime(&TriangularFilling::empty(1)).unwrap().values(), &[0, 0]);
        assert_eq!(delta_prime(&fill(1, &[(1, 1)])).unwrap().values(), &[0, 1]);
        assert_eq!(delta_prime(&TriangularFilling::empty(0)).unwrap().values(), &[0]);
    }

    #[test]
    fn domain_errors() {
        assert!(delta(&[]).is_err());
        assert!(delta(&[0, 2]).is_err());
        assert!(delta(&[0, 1, 2, 1, 0]).is_err());
        assert!(delta_prime(&fill(3, &[(2, 1), (3, 1)])).is_err());
        assert!(delta_prime(&fill(5, &[(5, 1), (4, 2), (3, 3)])).is_err());
    }
}

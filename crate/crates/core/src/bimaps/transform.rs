//! The column-clearing step α, the row-filling step β, and their fixpoint
//! maps φ and ψ between `M_3(n)` and `N_3(n)`.
//!
//! Both steps work on the chain of 1s lying below and weakly left of the
//! diagonal square `(i, i)` of the pivot index `i`, listed top to bottom as
//! `(r_1, c_1), ..., (r_m, c_m)`, with `r_0 = i` prepended. Each step moves a
//! prefix of that chain one link up or down.

use serde::Serialize;

use crate::filling::{FillingClass, Square, TriangularFilling};
use crate::{Error, Result};

/// The transformations are only defined for chains of length below 3.
pub const K: usize = 3;

/// Which of the two move rules a step applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepCase {
    /// Only the chain prefix up to the topmost 1 of column `i` moves.
    Partial,
    /// The whole chain moves.
    Full,
}

/// Everything a non-trivial α or β step looked at; used for traces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StepContext {
    /// Selected column (α) or lowest zero row (β).
    pub pivot: usize,
    /// Row `i`'s 1 when α starts from it.
    pub anchor: Option<Square>,
    /// `(r_1, c_1), ..., (r_m, c_m)` below and weakly left of `(pivot, pivot)`.
    pub chain: Vec<Square>,
    /// Chain index (with `r_0 = pivot` at index 0) of the topmost 1 in the
    /// pivot column.
    pub s: usize,
    /// β only: the chain index `t` with `p = r_t + 1`.
    pub t: Option<usize>,
    /// β only: the topmost 1 above and right of `(r_s, c_s)`.
    pub witness: Option<Square>,
    pub case: StepCase,
}

/// One non-trivial step of a φ or ψ run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub context: StepContext,
    pub result: TriangularFilling,
}

/// 1s strictly below row `pivot` and weakly left of column `pivot`, top to
/// bottom. The filling must be valid, so rows are distinct.
fn chain_below(f: &TriangularFilling, pivot: usize) -> Vec<Square> {
    f.ones().filter(|sq| sq.row > pivot && sq.col <= pivot).collect()
}

fn check_common(map: &'static str, f: &TriangularFilling) -> Result<()> {
    if !f.is_valid() {
        return Err(Error::invariant(map, format!("{f} has a row with two 1s")));
    }
    if f.longest_ne_chain() >= K {
        return Err(Error::invariant(map, format!("{f} has an NE-chain of length {K}")));
    }
    Ok(())
}

/// Leftmost column holding at least two 1s.
pub fn alpha_pivot(f: &TriangularFilling) -> Option<usize> {
    let mut counts = vec![0usize; f.order() + 1];
    for sq in f.ones() {
        counts[sq.col] += 1;
    }
    (1..=f.order()).find(|&c| counts[c] >= 2)
}

/// Lowest zero row.
pub fn beta_pivot(f: &TriangularFilling) -> Option<usize> {
    f.zero_rows().last().copied()
}

/// One α step with its context, or `None` at the fixpoint (no column holds
/// two 1s).
pub fn alpha_step_traced(f: &TriangularFilling) -> Result<Option<Step>> {
    const MAP: &str = "alpha_step";
    check_common(MAP, f)?;
    let Some(i) = alpha_pivot(f) else {
        return Ok(None);
    };
    let j = f
        .row_ones(i)
        .next()
        .ok_or_else(|| Error::invariant(MAP, format!("pivot row {i} is empty while column {i} holds two 1s")))?;

    let chain = chain_below(f, i);
    let mut rows = vec![i];
    let mut cols = vec![j];
    rows.extend(chain.iter().map(|sq| sq.row));
    cols.extend(chain.iter().map(|sq| sq.col));
    let m = chain.len();

    // Column i lives in rows >= i, so its topmost 1 is (i, j) itself when
    // j = i and otherwise the first chain square in column i.
    let s = (0..=m)
        .find(|&l| cols[l] == i)
        .ok_or_else(|| Error::invariant(MAP, format!("column {i} has no 1 on the chain")))?;

    let next_row = rows[s] + 1;
    let partial = next_row <= f.order() && f.row_ones(next_row).any(|c| c > cols[s]);
    let end = if partial { s } else { m };

    let mut g = f.clone();
    for l in 0..=end {
        g.clear(Square::new(rows[l], cols[l]));
    }
    for l in 0..end {
        g.set(Square::new(rows[l + 1], cols[l]));
    }
    Ok(Some(Step {
        context: StepContext {
            pivot: i,
            anchor: Some(Square::new(i, j)),
            chain,
            s,
            t: None,
            witness: None,
            case: if partial { StepCase::Partial } else { StepCase::Full },
        },
        result: g,
    }))
}

/// α as a total map: returns the input unchanged at its fixpoint.
pub fn alpha_step(f: &TriangularFilling) -> Result<TriangularFilling> {
    Ok(match alpha_step_traced(f)? {
        Some(step) => step.result,
        None => f.clone(),
    })
}

/// One β step with its context, or `None` at the fixpoint (no zero row).
pub fn beta_step_traced(f: &TriangularFilling) -> Result<Option<Step>> {
    const MAP: &str = "beta_step";
    check_common(MAP, f)?;
    if !f.covers_every_index() {
        return Err(Error::invariant(MAP, format!("{f} violates (b1)")));
    }
    let Some(i) = beta_pivot(f) else {
        return Ok(None);
    };

    let chain = chain_below(f, i);
    let mut rows = vec![i];
    let mut cols = vec![0]; // c_0 is never read
    rows.extend(chain.iter().map(|sq| sq.row));
    cols.extend(chain.iter().map(|sq| sq.col));
    let m = chain.len();

    // Row i is zero, so (b1) puts column i's 1s strictly below it.
    let s = (1..=m)
        .find(|&l| cols[l] == i)
        .ok_or_else(|| Error::invariant(MAP, format!("zero row {i} with an empty column {i}")))?;

    // Anything right of column i sits below row i, so "topmost" is the
    // smallest row.
    let witness = f
        .ones()
        .filter(|sq| sq.row < rows[s] && sq.col > i)
        .min_by_key(|sq| sq.row);

    let mut g = f.clone();
    let (t, case) = match witness {
        Some(w) => {
            let t = (0..s)
                .find(|&l| rows[l] + 1 == w.row)
                .ok_or_else(|| Error::invariant(MAP, format!("witness {w} does not sit right below a chain row")))?;
            for l in 1..=t {
                g.clear(Square::new(rows[l], cols[l]));
            }
            for l in 0..t {
                g.set(Square::new(rows[l], cols[l + 1]));
            }
            g.set(Square::new(rows[t], i));
            (Some(t), StepCase::Partial)
        }
        None => {
            for l in 1..=m {
                g.clear(Square::new(rows[l], cols[l]));
            }
            for l in 0..m {
                g.set(Square::new(rows[l], cols[l + 1]));
            }
            g.set(Square::new(rows[m], i));
            (None, StepCase::Full)
        }
    };
    Ok(Some(Step {
        context: StepContext {
            pivot: i,
            anchor: None,
            chain,
            s,
            t,
            witness,
            case,
        },
        result: g,
    }))
}

/// β as a total map: returns the input unchanged at its fixpoint.
pub fn beta_step(f: &TriangularFilling) -> Result<TriangularFilling> {
    Ok(match beta_step_traced(f)? {
        Some(step) => step.result,
        None => f.clone(),
    })
}

/// Iterates a step function to its fixpoint, recording every move. The
/// pivot must move strictly in the given direction, which bounds the run by
/// `order` steps.
fn iterate(
    map: &'static str,
    f: &TriangularFilling,
    step: fn(&TriangularFilling) -> Result<Option<Step>>,
    increasing: bool,
) -> Result<Vec<Step>> {
    let mut steps: Vec<Step> = Vec::new();
    let mut current = f.clone();
    while let Some(next) = step(&current)? {
        if let Some(prev) = steps.last() {
            let monotone = if increasing {
                next.context.pivot > prev.context.pivot
            } else {
                next.context.pivot < prev.context.pivot
            };
            if !monotone {
                return Err(Error::invariant(
                    map,
                    format!("pivot moved from {} to {}", prev.context.pivot, next.context.pivot),
                ));
            }
        }
        current = next.result.clone();
        steps.push(next);
    }
    Ok(steps)
}

/// φ with every α step, for `f` in `M_3(n)`.
pub fn phi_trace(f: &TriangularFilling) -> Result<Vec<Step>> {
    if !f.in_class(FillingClass::M, K) {
        return Err(Error::pre("phi", format!("{f} is not in M_3({})", f.order())));
    }
    iterate("phi", f, alpha_step_traced, true)
}

/// φ: `M_3(n) -> N_3(n)`.
pub fn phi(f: &TriangularFilling) -> Result<TriangularFilling> {
    Ok(phi_trace(f)?.pop().map_or_else(|| f.clone(), |s| s.result))
}

/// ψ with every β step, for `f` in `N_3(n)`.
pub fn psi_trace(f: &TriangularFilling) -> Result<Vec<Step>> {
    if !f.in_class(FillingClass::N, K) {
        return Err(Error::pre("psi", format!("{f} is not in N_3({})", f.order())));
    }
    iterate("psi", f, beta_step_traced, false)
}

/// ψ: `N_3(n) -> M_3(n)`.
pub fn psi(f: &TriangularFilling) -> Result<TriangularFilling> {
    Ok(psi_trace(f)?.pop().map_or_else(|| f.clone(), |s| s.result))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(order: usize, ones: &[(usize, usize)]) -> TriangularFilling {
        TriangularFilling::new(order, ones.iter().copied()).unwrap()
    }

    fn left() -> TriangularFilling {
        fill(
            9,
            &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 4), (6, 5), (7, 6), (8, 7), (9, 6)],
        )
    }

    fn middle() -> TriangularFilling {
        fill(9, &[(1, 1), (2, 2), (3, 3), (5, 4), (6, 5), (7, 6), (8, 7), (9, 6)])
    }

    fn right() -> TriangularFilling {
        fill(9, &[(1, 1), (2, 2), (3, 3), (5, 4), (7, 5), (8, 7), (9, 6)])
    }

    #[test]
    fn alpha_steps_on_m3_example() {
        let first = alpha_step_traced(&left()).unwrap().unwrap();
        assert_eq!(first.context.pivot, 4);
        assert_eq!(first.context.case, StepCase::Full);
        assert_eq!(first.result, middle());

        let second = alpha_step_traced(&middle()).unwrap().unwrap();
        assert_eq!(second.context.pivot, 6);
        assert_eq!(second.context.case, StepCase::Partial);
        assert_eq!(second.context.chain, vec![Square::new(7, 6), Square::new(9, 6)]);
        assert_eq!(second.context.s, 1);
        assert_eq!(second.result, right());

        assert!(alpha_step_traced(&right()).unwrap().is_none());
        assert_eq!(alpha_step(&right()).unwrap(), right());
    }

    #[test]
    fn beta_steps_on_n3_example() {
        let first = beta_step_traced(&right()).unwrap().unwrap();
        assert_eq!(first.context.pivot, 6);
        assert_eq!(first.context.case, StepCase::Partial);
        assert_eq!(first.context.witness, Some(Square::new(8, 7)));
        assert_eq!(first.context.t, Some(1));
        assert_eq!(first.result, middle());

        let second = beta_step_traced(&middle()).unwrap().unwrap();
        assert_eq!(second.context.pivot, 4);
        assert_eq!(second.context.case, StepCase::Full);
        assert_eq!(second.result, left());

        assert_eq!(beta_step(&left()).unwrap(), left());
    }

    #[test]
    fn fixpoint_maps() {
        let steps = phi_trace(&left()).unwrap();
        assert_eq!(steps.iter().map(|s| s.context.pivot).collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(phi(&left()).unwrap(), right());
        assert_eq!(psi(&right()).unwrap(), left());

        let two = fill(2, &[(1, 1), (2, 1)]);
        assert_eq!(phi(&two).unwrap(), fill(2, &[(2, 1)]));
        assert_eq!(psi(&fill(2, &[(2, 1)])).unwrap(), two);

        let diagonal = fill(3, &[(1, 1), (2, 2), (3, 3)]);
        assert_eq!(phi(&diagonal).unwrap(), diagonal);
        assert_eq!(psi(&diagonal).unwrap(), diagonal);
        assert_eq!(phi(&TriangularFilling::empty(0)).unwrap(), TriangularFilling::empty(0));
    }

    #[test]
    fn precondition_errors() {
        // Three 1s in column 1 form an NE-chain of length 3.
        let chain3 = fill(3, &[(1, 1), (2, 1), (3, 1)]);
        assert!(matches!(phi(&chain3), Err(Error::Precondition { .. })));
        assert!(matches!(alpha_step(&chain3), Err(Error::Invariant { .. })));
        assert!(matches!(psi(&left()), Err(Error::Precondition { .. })));
        // Column 2 is doubled but row 2 is empty.
        let bad = fill(4, &[(3, 2), (4, 2)]);
        assert!(matches!(alpha_step(&bad), Err(Error::Invariant { .. })));
        // β needs (b1).
        assert!(matches!(beta_step(&fill(2, &[(2, 2)])), Err(Error::Invariant { .. })));
        assert!(matches!(
            alpha_step(&fill(2, &[(2, 1), (2, 2)])),
            Err(Error::Invariant { .. })
        ));
    }
}

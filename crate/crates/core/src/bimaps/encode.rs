//! Sequence and partition encodings as triangular fillings.

use crate::filling::{Square, TriangularFilling};
use crate::partition::{blocks_from_arcs, enhanced_arcs, linear_arcs, Arc, SetPartition};
use crate::seq::{is_inversion_sequence, IntSequence};
use crate::{Error, Result};

/// Puts a 1 at `(i, x_i + 1)` for every position `i`.
pub fn encode_inversion(x: &[usize]) -> Result<TriangularFilling> {
    if !is_inversion_sequence(x) {
        return Err(Error::pre(
            "encode_inversion",
            format!("{x:?} is not an inversion sequence"),
        ));
    }
    TriangularFilling::new(x.len(), x.iter().enumerate().map(|(i, &v)| Square::new(i + 1, v + 1)))
}

/// Reads `x_i` off the column of row `i`'s single 1.
pub fn decode_inversion(f: &TriangularFilling) -> Result<IntSequence> {
    let mut values = Vec::with_capacity(f.order());
    for row in 1..=f.order() {
        let mut cols = f.row_ones(row);
        match (cols.next(), cols.next()) {
            (Some(c), None) => values.push(c - 1),
            (None, _) => return Err(Error::pre("decode_inversion", format!("row {row} is empty"))),
            (Some(_), Some(_)) => {
                return Err(Error::pre(
                    "decode_inversion",
                    format!("row {row} holds more than one 1"),
                ))
            }
        }
    }
    Ok(IntSequence::new(values))
}

/// Enhanced encoding: arc `(i, j)` becomes square `(j, i)` and the loop at a
/// singleton `i` becomes `(i, i)`.
pub fn partition_to_n_filling(p: &SetPartition) -> TriangularFilling {
    let ones = enhanced_arcs(p)
        .arcs()
        .iter()
        .map(|a| Square::new(a.right, a.left))
        .collect::<Vec<_>>();
    TriangularFilling::new(p.n(), ones).expect("arcs of a partition lie in the triangular shape")
}

/// Inverse of [`partition_to_n_filling`]; needs (a1) and (b1).
pub fn n_filling_to_partition(f: &TriangularFilling) -> Result<SetPartition> {
    if !f.rows_and_cols_at_most_one() {
        return Err(Error::pre(
            "kratt_enhanced_inv",
            "a row or column holds more than one 1",
        ));
    }
    if !f.covers_every_index() {
        return Err(Error::pre(
            "kratt_enhanced_inv",
            "some index has neither a 1 in its row nor in its column",
        ));
    }
    let arcs: Vec<Arc> = f.ones().map(|sq| Arc::new(sq.col, sq.row)).collect();
    blocks_from_arcs(f.order(), &arcs)
}

/// Linear encoding of a partition of `[n+1]` into `Δ_n`: arc `(i, j)`
/// becomes square `(j - 1, i)`.
pub fn partition_to_p_filling(p: &SetPartition) -> Result<TriangularFilling> {
    if p.n() == 0 {
        return Err(Error::pre(
            "kratt_linear",
            "the partition of the empty set has no linear encoding",
        ));
    }
    let ones = linear_arcs(p)
        .arcs()
        .iter()
        .map(|a| Square::new(a.right - 1, a.left))
        .collect::<Vec<_>>();
    TriangularFilling::new(p.n() - 1, ones)
}

/// Inverse of [`partition_to_p_filling`]; needs (a1).
pub fn p_filling_to_partition(f: &TriangularFilling) -> Result<SetPartition> {
    if !f.rows_and_cols_at_most_one() {
        return Err(Error::pre("kratt_linear_inv", "a row or column holds more than one 1"));
    }
    let arcs: Vec<Arc> = f.ones().map(|sq| Arc::new(sq.col, sq.row + 1)).collect();
    blocks_from_arcs(f.order() + 1, &arcs)
}

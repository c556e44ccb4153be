//! 01-fillings of the triangular shape `Δ_n`, NE-chains, the filling classes
//! and critical-index surgery.
//!
//! Row `r` of `Δ_n` has squares `(r, 1) ..= (r, r)`; rows are numbered top to
//! bottom and columns left to right, all 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A square `(row, col)` of the triangular shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }
}

impl From<(usize, usize)> for Square {
    fn from((row, col): (usize, usize)) -> Self {
        Square { row, col }
    }
}

impl Serialize for Square {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(serializer)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The three classes of fillings with no NE-chain of length `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FillingClass {
    /// Every row holds exactly one 1.
    M,
    /// Rows and columns hold at most one 1, and every index `i` has a 1 in
    /// row `i` or column `i`.
    N,
    /// Rows and columns hold at most one 1.
    P,
}

/// A 01-filling of `Δ_order`, stored as its set of 1-squares.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangularFilling {
    order: usize,
    ones: BTreeSet<Square>,
}

impl TriangularFilling {
    pub fn empty(order: usize) -> Self {
        TriangularFilling {
            order,
            ones: BTreeSet::new(),
        }
    }

    /// Builds a filling, rejecting squares outside `Δ_order` and duplicates.
    pub fn new<I, S>(order: usize, ones: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Square>,
    {
        let mut f = TriangularFilling::empty(order);
        for sq in ones {
            let sq = sq.into();
            if sq.col == 0 || sq.col > sq.row || sq.row > order {
                return Err(Error::OutsideShape {
                    order,
                    row: sq.row,
                    col: sq.col,
                });
            }
            if !f.ones.insert(sq) {
                return Err(Error::DuplicateSquare {
                    row: sq.row,
                    col: sq.col,
                });
            }
        }
        Ok(f)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 1-squares in (row, column) order.
    pub fn ones(&self) -> impl Iterator<Item = Square> + '_ {
        self.ones.iter().copied()
    }

    pub fn count_ones(&self) -> usize {
        self.ones.len()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.ones.contains(&Square::new(row, col))
    }

    pub(crate) fn set(&mut self, sq: Square) {
        debug_assert!(sq.col >= 1 && sq.col <= sq.row && sq.row <= self.order);
        self.ones.insert(sq);
    }

    pub(crate) fn clear(&mut self, sq: Square) -> bool {
        self.ones.remove(&sq)
    }

    /// Columns of the 1s in `row`, ascending.
    pub fn row_ones(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        self.ones
            .range(Square::new(row, 0)..=Square::new(row, usize::MAX))
            .map(|sq| sq.col)
    }

    /// Rows of the 1s in `col`, ascending.
    pub fn col_ones(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        self.ones.iter().filter(move |sq| sq.col == col).map(|sq| sq.row)
    }

    fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.order + 1];
        for sq in &self.ones {
            counts[sq.row] += 1;
        }
        counts
    }

    fn col_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.order + 1];
        for sq in &self.ones {
            counts[sq.col] += 1;
        }
        counts
    }

    /// Longest sequence of 1s, each strictly above and weakly right of the
    /// previous one.
    pub fn longest_ne_chain(&self) -> usize {
        // Bottom-up, left to right: every chain predecessor comes earlier.
        let mut order: Vec<Square> = self.ones.iter().copied().collect();
        order.sort_unstable_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
        let mut best = vec![0usize; order.len()];
        for b in 0..order.len() {
            best[b] = 1
                + (0..b)
                    .filter(|&a| order[a].row > order[b].row && order[a].col <= order[b].col)
                    .map(|a| best[a])
                    .max()
                    .unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// At most one 1 per row.
    pub fn is_valid(&self) -> bool {
        self.row_counts().iter().all(|&c| c <= 1)
    }

    /// (a1): at most one 1 in every row and every column.
    pub fn rows_and_cols_at_most_one(&self) -> bool {
        self.is_valid() && self.col_counts().iter().all(|&c| c <= 1)
    }

    /// (b1): row `i` or column `i` holds a 1, for every `i`.
    pub fn covers_every_index(&self) -> bool {
        let rows = self.row_counts();
        let cols = self.col_counts();
        (1..=self.order).all(|i| rows[i] > 0 || cols[i] > 0)
    }

    pub fn in_class(&self, class: FillingClass, k: usize) -> bool {
        let shape_ok = match class {
            FillingClass::M => self.row_counts()[1..].iter().all(|&c| c == 1),
            FillingClass::N => self.rows_and_cols_at_most_one() && self.covers_every_index(),
            FillingClass::P => self.rows_and_cols_at_most_one(),
        };
        shape_ok && self.longest_ne_chain() < k
    }

    pub fn zero_rows(&self) -> Vec<usize> {
        let rows = self.row_counts();
        (1..=self.order).filter(|&i| rows[i] == 0).collect()
    }

    pub fn zero_cols(&self) -> Vec<usize> {
        let cols = self.col_counts();
        (1..=self.order).filter(|&i| cols[i] == 0).collect()
    }

    /// Indices whose row and column are both zero.
    pub fn critical_indices(&self) -> Vec<usize> {
        let rows = self.row_counts();
        let cols = self.col_counts();
        (1..=self.order).filter(|&i| rows[i] == 0 && cols[i] == 0).collect()
    }

    pub fn critical_profile(&self) -> CriticalProfile {
        let rows = self.row_counts();
        let cols = self.col_counts();
        let mut non_critical = Vec::new();
        let mut gaps = vec![0];
        for i in 1..=self.order {
            if rows[i] == 0 && cols[i] == 0 {
                *gaps.last_mut().unwrap() += 1;
            } else {
                non_critical.push(i);
                gaps.push(0);
            }
        }
        CriticalProfile { non_critical, gaps }
    }

    /// Inserts a zero row and a zero column at index `pos` (`1..=order+1`),
    /// shifting everything at or beyond `pos` by one.
    pub fn insert_critical(&self, pos: usize) -> Result<Self> {
        if pos == 0 || pos > self.order + 1 {
            return Err(Error::PositionOutOfRange {
                pos,
                max: self.order + 1,
            });
        }
        let shift = |v: usize| if v >= pos { v + 1 } else { v };
        Ok(TriangularFilling {
            order: self.order + 1,
            ones: self
                .ones
                .iter()
                .map(|sq| Square::new(shift(sq.row), shift(sq.col)))
                .collect(),
        })
    }

    /// Inserts `gaps[0]` critical indices before index 1 and `gaps[i]` right
    /// after index `i`; `gaps` must have `order + 1` entries.
    pub fn insert_criticals(&self, gaps: &[usize]) -> Result<Self> {
        if gaps.len() != self.order + 1 {
            return Err(Error::pre(
                "insert_criticals",
                format!("{} gaps for a filling of order {}", gaps.len(), self.order),
            ));
        }
        // New position of old index i is i plus every gap up to it.
        let mut position = vec![0; self.order + 1];
        let mut offset = gaps[0];
        for i in 1..=self.order {
            position[i] = i + offset;
            offset += gaps[i];
        }
        Ok(TriangularFilling {
            order: self.order + offset,
            ones: self
                .ones
                .iter()
                .map(|sq| Square::new(position[sq.row], position[sq.col]))
                .collect(),
        })
    }

    /// Removes all critical rows and columns, relabelling the remaining
    /// indices `1..=k` in order.
    pub fn remove_criticals(&self) -> (Self, CriticalProfile) {
        let profile = self.critical_profile();
        let mut relabel = vec![0; self.order + 1];
        for (new, &old) in profile.non_critical.iter().enumerate() {
            relabel[old] = new + 1;
        }
        let reduced = TriangularFilling {
            order: profile.non_critical.len(),
            ones: self
                .ones
                .iter()
                .map(|sq| Square::new(relabel[sq.row], relabel[sq.col]))
                .collect(),
        };
        (reduced, profile)
    }
}

impl fmt::Display for TriangularFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ{}{{", self.order)?;
        for (i, sq) in self.ones.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{sq}")?;
        }
        f.write_str("}")
    }
}

/// Non-critical indices `i_1 < ... < i_k` of a filling and the number of
/// critical indices before `i_1`, between consecutive `i_l`, and after `i_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalProfile {
    pub non_critical: Vec<usize>,
    pub gaps: Vec<usize>,
}

impl CriticalProfile {
    /// Order of the profiled filling.
    pub fn order(&self) -> usize {
        self.non_critical.len() + self.gaps.iter().sum::<usize>()
    }
}

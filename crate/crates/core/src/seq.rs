//! Integer sequences: inversion, ascent and primitive ascent sequences,
//! decreasing-subsequence detection, run-length decomposition and
//! lexicographic enumeration.
//!
//! Values are 0-based; positions are 1-based whenever they leave this module.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::par::Exec;
use crate::{Error, Result};

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSequence(Vec<usize>);

impl IntSequence {
    pub fn new(values: Vec<usize>) -> Self {
        IntSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for IntSequence {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for IntSequence {
    fn from(values: Vec<usize>) -> Self {
        IntSequence(values)
    }
}

impl From<&[usize]> for IntSequence {
    fn from(values: &[usize]) -> Self {
        IntSequence(values.to_vec())
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Sequence families recognised by the enumerators and the JSON envelope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceFamily {
    Inversion,
    Ascent,
    PrimitiveAscent,
}

impl SequenceFamily {
    pub fn contains(self, s: &[usize]) -> bool {
        match self {
            SequenceFamily::Inversion => is_inversion_sequence(s),
            SequenceFamily::Ascent => is_ascent_sequence(s),
            SequenceFamily::PrimitiveAscent => is_ascent_sequence(s) && is_primitive(s),
        }
    }
}

/// Which decreasing subsequences a pattern detector looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `x_{i_1} >= x_{i_2} >= ...`
    Weak,
    /// `x_{i_1} > x_{i_2} > ...`
    Strict,
}

impl Mode {
    #[inline]
    fn extends(self, earlier: usize, later: usize) -> bool {
        match self {
            Mode::Weak => earlier >= later,
            Mode::Strict => earlier > later,
        }
    }
}

/// "No decreasing subsequence of length `k`" in the given mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Avoidance {
    pub k: usize,
    pub mode: Mode,
}

impl Avoidance {
    pub fn new(k: usize, mode: Mode) -> Self {
        Avoidance { k, mode }
    }
}

/// `0 <= x_i < i` at every (1-based) position.
pub fn is_inversion_sequence(s: &[usize]) -> bool {
    s.iter().enumerate().all(|(pos, &v)| v <= pos)
}

/// Number of positions `i` with `x_i < x_{i+1}`.
pub fn ascent_count(s: &[usize]) -> usize {
    s.windows(2).filter(|w| w[0] < w[1]).count()
}

/// `x_1 = 0` and each later entry is at most one more than the number of
/// ascents of the prefix before it.
pub fn is_ascent_sequence(s: &[usize]) -> bool {
    let Some((&first, _)) = s.split_first() else {
        return true;
    };
    if first != 0 {
        return false;
    }
    let mut asc = 0;
    for w in s.windows(2) {
        if w[1] > asc + 1 {
            return false;
        }
        if w[0] < w[1] {
            asc += 1;
        }
    }
    true
}

/// No two consecutive entries are equal.
pub fn is_primitive(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[0] != w[1])
}

/// Length of the longest decreasing subsequence in the given mode, by the
/// quadratic "longest chain ending here" recurrence.
pub fn longest_decreasing(s: &[usize], mode: Mode) -> usize {
    let mut ending = Vec::with_capacity(s.len());
    for (i, &v) in s.iter().enumerate() {
        let best = (0..i)
            .filter(|&j| mode.extends(s[j], v))
            .map(|j| ending[j])
            .max()
            .unwrap_or(0);
        ending.push(best + 1);
    }
    ending.into_iter().max().unwrap_or(0)
}

pub fn longest_weakly_decreasing(s: &[usize]) -> usize {
    longest_decreasing(s, Mode::Weak)
}

pub fn longest_strictly_decreasing(s: &[usize]) -> usize {
    longest_decreasing(s, Mode::Strict)
}

/// True iff `s` has no decreasing subsequence of length `k` in `mode`.
pub fn avoids(s: &[usize], k: usize, mode: Mode) -> bool {
    longest_decreasing(s, mode) < k
}

/// Left-inversion counts of a permutation of `[n]` (given 1-based):
/// `x_i = #{j < i : p_j > p_i}`.
pub fn inversion_from_permutation(p: &[usize]) -> Result<IntSequence> {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    for &v in p {
        if v == 0 || v > n || seen[v] {
            return Err(Error::NotPermutation { n, values: p.to_vec() });
        }
        seen[v] = true;
    }
    let values = (0..n).map(|i| p[..i].iter().filter(|&&q| q > p[i]).count()).collect();
    Ok(IntSequence(values))
}

/// A sequence written as `x_1^{c_1} x_2^{c_2} ... x_{k+1}^{c_{k+1}}` with
/// consecutive run values distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunDecomposition {
    runs: Vec<usize>,
    multiplicities: Vec<usize>,
}

impl RunDecomposition {
    /// Builds a decomposition from parts, checking the invariants.
    pub fn from_parts(runs: Vec<usize>, multiplicities: Vec<usize>) -> Result<Self> {
        if runs.len() != multiplicities.len() {
            return Err(Error::pre(
                "run decomposition",
                "runs and multiplicities differ in length",
            ));
        }
        if multiplicities.contains(&0) {
            return Err(Error::pre("run decomposition", "zero multiplicity"));
        }
        if !is_primitive(&runs) {
            return Err(Error::pre("run decomposition", "consecutive runs share a value"));
        }
        Ok(RunDecomposition { runs, multiplicities })
    }

    /// The primitive sequence of distinct consecutive values.
    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn len(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expands every run by its multiplicity.
    pub fn expand(&self) -> IntSequence {
        let mut out = Vec::with_capacity(self.len());
        for (&v, &c) in self.runs.iter().zip(&self.multiplicities) {
            out.extend(std::iter::repeat_n(v, c));
        }
        IntSequence(out)
    }
}

pub fn run_length_decompose(s: &[usize]) -> Result<RunDecomposition> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut runs = Vec::new();
    let mut multiplicities: Vec<usize> = Vec::new();
    for &v in s {
        match runs.last() {
            Some(&last) if last == v => *multiplicities.last_mut().unwrap() += 1,
            _ => {
                runs.push(v);
                multiplicities.push(1);
            }
        }
    }
    Ok(RunDecomposition { runs, multiplicities })
}

/// Lexicographic enumeration of one sequence family, optionally restricted to
/// sequences avoiding a decreasing pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceEnumerator {
    pub n: usize,
    pub family: SequenceFamily,
    pub filter: Option<Avoidance>,
}

impl SequenceEnumerator {
    pub fn new(n: usize, family: SequenceFamily, filter: Option<Avoidance>) -> Self {
        SequenceEnumerator { n, family, filter }
    }

    pub fn iter(&self) -> SequenceIter {
        SequenceIter::new(*self, &[]).expect("empty prefix is always extendable")
    }

    /// Enumerates the sequences that start with `prefix`, still in
    /// lexicographic order. Returns `None` when the prefix itself is not a
    /// valid (filtered) prefix of the family.
    pub fn iter_from(&self, prefix: &[usize]) -> Option<SequenceIter> {
        SequenceIter::new(*self, prefix)
    }

    pub fn collect(&self) -> Vec<IntSequence> {
        self.iter().collect()
    }

    pub fn count(&self) -> usize {
        self.iter().count()
    }

    /// Shards by a fixed-length prefix, enumerates shards under `exec` and
    /// concatenates them in prefix order, giving the same stream as
    /// [`collect`](Self::collect).
    pub fn collect_with(&self, exec: Exec) -> Vec<IntSequence> {
        let depth = self.n.min(SHARD_DEPTH);
        let prefixes: Vec<IntSequence> = SequenceEnumerator { n: depth, ..*self }.collect();
        exec.flat_map(&prefixes, |p| match self.iter_from(p) {
            Some(it) => it.collect(),
            None => Vec::new(),
        })
    }
}

const SHARD_DEPTH: usize = 5;

/// Backtracking iterator behind [`SequenceEnumerator`].
///
/// Per position it keeps the running ascent count and the longest
/// pattern-chain ending there, so each extension is checked in `O(n)`.
#[derive(Clone, Debug)]
pub struct SequenceIter {
    spec: SequenceEnumerator,
    fixed: usize,
    values: Vec<usize>,
    ascents: Vec<usize>,
    chain: Vec<usize>,
    started: bool,
    done: bool,
}

impl SequenceIter {
    fn new(spec: SequenceEnumerator, prefix: &[usize]) -> Option<Self> {
        let mut it = SequenceIter {
            spec,
            fixed: prefix.len(),
            values: Vec::with_capacity(spec.n),
            ascents: Vec::with_capacity(spec.n),
            chain: Vec::with_capacity(spec.n),
            started: false,
            done: prefix.len() > spec.n,
        };
        for &v in prefix {
            if !it.admissible(v) {
                return None;
            }
            it.push(v);
        }
        Some(it)
    }

    fn max_value(&self) -> usize {
        let pos = self.values.len();
        match self.spec.family {
            SequenceFamily::Inversion => pos,
            SequenceFamily::Ascent | SequenceFamily::PrimitiveAscent => {
                if pos == 0 {
                    0
                } else {
                    self.ascents[pos - 1] + 1
                }
            }
        }
    }

    fn chain_through(&self, v: usize, mode: Mode) -> usize {
        let best = self
            .values
            .iter()
            .zip(&self.chain)
            .filter(|(&w, _)| mode.extends(w, v))
            .map(|(_, &c)| c)
            .max()
            .unwrap_or(0);
        best + 1
    }

    fn admissible(&self, v: usize) -> bool {
        if v > self.max_value() {
            return false;
        }
        if self.spec.family == SequenceFamily::PrimitiveAscent && self.values.last() == Some(&v) {
            return false;
        }
        match self.spec.filter {
            Some(Avoidance { k, mode }) => self.chain_through(v, mode) < k,
            None => true,
        }
    }

    fn push(&mut self, v: usize) {
        let chain = match self.spec.filter {
            Some(Avoidance { mode, .. }) => self.chain_through(v, mode),
            None => 0,
        };
        let asc = match self.values.last() {
            Some(&last) => self.ascents.last().unwrap() + usize::from(last < v),
            None => 0,
        };
        self.values.push(v);
        self.ascents.push(asc);
        self.chain.push(chain);
    }

    fn pop(&mut self) -> usize {
        self.ascents.pop();
        self.chain.pop();
        self.values.pop().expect("pop below fixed prefix")
    }
}

impl Iterator for SequenceIter {
    type Item = IntSequence;

    fn next(&mut self) -> Option<IntSequence> {
        if self.done {
            return None;
        }
        // `start` is the smallest candidate for the next open slot; `None`
        // means the current last entry must be advanced.
        let mut start = if self.started { None } else { Some(0) };
        self.started = true;
        loop {
            match start {
                None => {
                    if self.values.len() <= self.fixed {
                        self.done = true;
                        return None;
                    }
                    start = Some(self.pop() + 1);
                }
                Some(_) if self.values.len() == self.spec.n => {
                    return Some(IntSequence(self.values.clone()));
                }
                Some(from) => {
                    let max = self.max_value();
                    match (from..=max).find(|&v| self.admissible(v)) {
                        Some(v) => {
                            self.push(v);
                            start = Some(0);
                        }
                        None => start = None,
                    }
                }
            }
        }
    }
}

//! Set partitions of `[n]`, their linear and enhanced arc diagrams, nesting
//! and crossing statistics, and restricted-growth-string enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::par::Exec;
use crate::{Error, Result};

/// A set partition of `[n]`, blocks sorted internally and ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalises a block list.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > n {
                    return Err(Error::InvalidPartition(format!("element {v} outside [{n}]")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("element {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::InvalidPartition(format!("element {missing} not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Decodes a restricted growth string (`a_1 = 0`, `a_{i+1} <= 1 + max`).
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &a) in rgs.iter().enumerate() {
            if a > blocks.len() {
                return Err(Error::InvalidPartition(format!(
                    "not a restricted growth string at position {}",
                    i + 1
                )));
            }
            if a == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[a].push(i + 1);
        }
        Ok(SetPartition { n: rgs.len(), blocks })
    }

    pub fn to_rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                rgs[v - 1] = b;
            }
        }
        rgs
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn singletons(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0])
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join(" | "))
    }
}

/// Linear diagrams join consecutive block elements; enhanced diagrams also
/// carry a loop at every singleton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Linear,
    Enhanced,
}

/// An arc `(left, right)`; `left == right` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub fn new(left: usize, right: usize) -> Self {
        Arc { left, right }
    }

    pub fn is_loop(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    n: usize,
    flavor: Flavor,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// Validates endpoint usage and sorts the arcs.
    pub fn new(n: usize, flavor: Flavor, mut arcs: Vec<Arc>) -> Result<Self> {
        let mut as_left = vec![false; n + 1];
        let mut as_right = vec![false; n + 1];
        let mut looped = vec![false; n + 1];
        for a in &arcs {
            if a.left == 0 || a.right > n || a.left > a.right {
                return Err(Error::InvalidArcs(format!(
                    "arc ({},{}) not within [{n}]",
                    a.left, a.right
                )));
            }
            if a.is_loop() {
                if flavor == Flavor::Linear {
                    return Err(Error::InvalidArcs(format!("loop at {} in a linear diagram", a.left)));
                }
                if looped[a.left] {
                    return Err(Error::InvalidArcs(format!("two loops at {}", a.left)));
                }
                looped[a.left] = true;
                continue;
            }
            if std::mem::replace(&mut as_left[a.left], true) {
                return Err(Error::InvalidArcs(format!("vertex {} starts two arcs", a.left)));
            }
            if std::mem::replace(&mut as_right[a.right], true) {
                return Err(Error::InvalidArcs(format!("vertex {} ends two arcs", a.right)));
            }
        }
        if let Some(v) = (1..=n).find(|&v| looped[v] && (as_left[v] || as_right[v])) {
            return Err(Error::InvalidArcs(format!("loop at {v} touches a proper arc")));
        }
        arcs.sort_unstable();
        Ok(ArcDiagram { n, flavor, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Size of the largest family of pairwise nested arcs
    /// (`i_1 < ... < i_k <= j_k < ... < j_1`; the `<=` only matters for
    /// loops, which exist only in enhanced diagrams).
    ///
    /// Nesting is transitive, so this is a longest chain over arcs sorted by
    /// left endpoint: lefts strictly increase, rights strictly decrease.
    pub fn max_nesting(&self) -> usize {
        let arcs = &self.arcs;
        let mut best = vec![0usize; arcs.len()];
        for (b, arc) in arcs.iter().enumerate() {
            best[b] = 1
                + (0..b)
                    .filter(|&a| arcs[a].left < arc.left && arc.right < arcs[a].right)
                    .map(|a| best[a])
                    .max()
                    .unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Size of the largest family of pairwise crossing arcs
    /// (`i_1 < ... < i_k < j_1 < ... < j_k`, with `i_k <= j_1` when
    /// enhanced).
    ///
    /// Crossing is not transitive: once the first arc is fixed, the rest
    /// must start before its right end (at it, when enhanced) and finish
    /// after it, and among those a chain with lefts and rights both
    /// increasing is a crossing family.
    pub fn max_crossing(&self) -> usize {
        let enhanced = self.flavor == Flavor::Enhanced;
        let mut overall = 0;
        for first in &self.arcs {
            let tail: Vec<&Arc> = self
                .arcs
                .iter()
                .filter(|a| {
                    let starts_in_time = if enhanced {
                        a.left <= first.right
                    } else {
                        a.left < first.right
                    };
                    a.left > first.left && starts_in_time && a.right > first.right
                })
                .collect();
            let mut best = vec![0usize; tail.len()];
            for b in 0..tail.len() {
                best[b] = 1
                    + (0..b)
                        .filter(|&a| tail[a].left < tail[b].left && tail[a].right < tail[b].right)
                        .map(|a| best[a])
                        .max()
                        .unwrap_or(0);
            }
            overall = overall.max(1 + best.into_iter().max().unwrap_or(0));
        }
        overall
    }

    /// Recovers the partition: proper arcs chain block elements, every
    /// other vertex is a singleton.
    pub fn to_partition(&self) -> Result<SetPartition> {
        blocks_from_arcs(self.n, &self.arcs)
    }
}

/// Rebuilds blocks by following proper arcs; loops and untouched vertices
/// become singletons.
pub fn blocks_from_arcs(n: usize, arcs: &[Arc]) -> Result<SetPartition> {
    let mut next = vec![0usize; n + 1];
    let mut has_prev = vec![false; n + 1];
    for a in arcs.iter().filter(|a| !a.is_loop()) {
        if a.left == 0 || a.right > n || a.left >= a.right {
            return Err(Error::InvalidArcs(format!(
                "arc ({},{}) not within [{n}]",
                a.left, a.right
            )));
        }
        if next[a.left] != 0 {
            return Err(Error::InvalidArcs(format!("vertex {} starts two arcs", a.left)));
        }
        if std::mem::replace(&mut has_prev[a.right], true) {
            return Err(Error::InvalidArcs(format!("vertex {} ends two arcs", a.right)));
        }
        next[a.left] = a.right;
    }
    let blocks = (1..=n)
        .filter(|&v| !has_prev[v])
        .map(|start| {
            let mut block = vec![start];
            let mut v = start;
            while next[v] != 0 {
                v = next[v];
                block.push(v);
            }
            block
        })
        .collect();
    SetPartition::new(n, blocks)
}

pub fn linear_arcs(p: &SetPartition) -> ArcDiagram {
    let mut arcs: Vec<Arc> = p
        .blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1])))
        .collect();
    arcs.sort_unstable();
    ArcDiagram {
        n: p.n,
        flavor: Flavor::Linear,
        arcs,
    }
}

pub fn enhanced_arcs(p: &SetPartition) -> ArcDiagram {
    let mut d = linear_arcs(p);
    d.flavor = Flavor::Enhanced;
    d.arcs.extend(p.singletons().map(|v| Arc::new(v, v)));
    d.arcs.sort_unstable();
    d
}

pub fn arcs_of(p: &SetPartition, flavor: Flavor) -> ArcDiagram {
    match flavor {
        Flavor::Linear => linear_arcs(p),
        Flavor::Enhanced => enhanced_arcs(p),
    }
}

/// No (enhanced, when `enhanced`) `k`-nesting.
pub fn is_k_nonnesting(p: &SetPartition, k: usize, enhanced: bool) -> bool {
    let flavor = if enhanced { Flavor::Enhanced } else { Flavor::Linear };
    arcs_of(p, flavor).max_nesting() < k
}

/// Keep only partitions with no `k`-nesting of the given flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NestingFilter {
    pub k: usize,
    pub flavor: Flavor,
}

impl NestingFilter {
    pub fn new(k: usize, flavor: Flavor) -> Self {
        NestingFilter { k, flavor }
    }

    pub fn accepts(&self, p: &SetPartition) -> bool {
        arcs_of(p, self.flavor).max_nesting() < self.k
    }
}

/// Partitions of `[n]` in lexicographic restricted-growth-string order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionEnumerator {
    pub n: usize,
    pub filter: Option<NestingFilter>,
}

impl PartitionEnumerator {
    pub fn new(n: usize, filter: Option<NestingFilter>) -> Self {
        PartitionEnumerator { n, filter }
    }

    pub fn iter(&self) -> impl Iterator<Item = SetPartition> + '_ {
        RgsIter::new(self.n, &[])
            .map(|rgs| SetPartition::from_rgs(&rgs).expect("generated strings are restricted growth strings"))
            .filter(move |p| self.filter.is_none_or(|f| f.accepts(p)))
    }

    pub fn collect(&self) -> Vec<SetPartition> {
        self.iter().collect()
    }

    pub fn count(&self) -> usize {
        self.iter().count()
    }

    /// Shards on RGS prefixes and filters shards under `exec`; the merged
    /// stream equals [`collect`](Self::collect).
    pub fn collect_with(&self, exec: Exec) -> Vec<SetPartition> {
        let depth = self.n.min(SHARD_DEPTH);
        let prefixes: Vec<Vec<usize>> = RgsIter::new(depth, &[]).collect();
        exec.flat_map(&prefixes, |prefix| {
            RgsIter::new(self.n, prefix)
                .map(|rgs| SetPartition::from_rgs(&rgs).expect("generated strings are restricted growth strings"))
                .filter(|p| self.filter.is_none_or(|f| f.accepts(p)))
                .collect()
        })
    }
}

const SHARD_DEPTH: usize = 6;

/// Restricted growth strings of length `n` extending a fixed prefix.
#[derive(Clone, Debug)]
struct RgsIter {
    n: usize,
    fixed: usize,
    values: Vec<usize>,
    maxima: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgsIter {
    fn new(n: usize, prefix: &[usize]) -> Self {
        let mut it = RgsIter {
            n,
            fixed: prefix.len(),
            values: Vec::with_capacity(n),
            maxima: Vec::with_capacity(n),
            started: false,
            done: prefix.len() > n,
        };
        for &v in prefix {
            if v > it.bound() {
                it.done = true;
                break;
            }
            it.push(v);
        }
        it
    }

    fn bound(&self) -> usize {
        self.maxima.last().map_or(0, |m| m + 1)
    }

    fn push(&mut self, v: usize) {
        let m = self.maxima.last().map_or(v, |&m| m.max(v));
        self.values.push(v);
        self.maxima.push(m);
    }
}

impl Iterator for RgsIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let mut start = if self.started { None } else { Some(0) };
        self.started = true;
        loop {
            match start {
                None => {
                    if self.values.len() <= self.fixed {
                        self.done = true;
                        return None;
                    }
                    self.maxima.pop();
                    start = self.values.pop().map(|v| v + 1);
                }
                Some(_) if self.values.len() == self.n => return Some(self.values.clone()),
                Some(from) if from <= self.bound() => {
                    self.push(from);
                    start = Some(0);
                }
                Some(_) => start = None,
            }
        }
    }
}

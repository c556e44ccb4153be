//! Named object families for counting and enumeration, and count tables.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bimaps::{encode_inversion, partition_to_n_filling, partition_to_p_filling, K};
use crate::envelope::ObjectEnvelope;
use crate::par::Exec;
use crate::partition::{Flavor, NestingFilter, PartitionEnumerator};
use crate::seq::{Avoidance, IntSequence, Mode, SequenceEnumerator, SequenceFamily};

/// A family of objects of size `n`, addressed by a short tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// All inversion sequences of length `n`.
    Inv,
    /// `I_3(n)`.
    Inv3,
    /// All ascent sequences of length `n`.
    Asc,
    /// `A_3(n)`.
    Asc3,
    /// `PA_3(n)`.
    Pasc3,
    /// All set partitions of `[n]`.
    Part,
    /// `C_3(n)`.
    PartNonnest3,
    /// `E_3(n)`.
    PartEnhNonnest3,
    /// `M_3(n)`, as encodings of `I_3(n)`.
    FillM3,
    /// `N_3(n)`, as enhanced encodings of `E_3(n)`.
    FillN3,
    /// `P_3(n)`, as linear encodings of `C_3(n+1)`.
    FillP3,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Inv,
        Family::Inv3,
        Family::Asc,
        Family::Asc3,
        Family::Pasc3,
        Family::Part,
        Family::PartNonnest3,
        Family::PartEnhNonnest3,
        Family::FillM3,
        Family::FillN3,
        Family::FillP3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Inv => "inv",
            Family::Inv3 => "inv3",
            Family::Asc => "asc",
            Family::Asc3 => "asc3",
            Family::Pasc3 => "pasc3",
            Family::Part => "part",
            Family::PartNonnest3 => "part-nonnest3",
            Family::PartEnhNonnest3 => "part-enh-nonnest3",
            Family::FillM3 => "fill-M3",
            Family::FillN3 => "fill-N3",
            Family::FillP3 => "fill-P3",
        }
    }

    fn sequences(self, n: usize) -> Option<SequenceEnumerator> {
        let weak = Some(Avoidance::new(K, Mode::Weak));
        let strict = Some(Avoidance::new(K, Mode::Strict));
        let (family, filter) = match self {
            Family::Inv => (SequenceFamily::Inversion, None),
            Family::Inv3 | Family::FillM3 => (SequenceFamily::Inversion, weak),
            Family::Asc => (SequenceFamily::Ascent, None),
            Family::Asc3 => (SequenceFamily::Ascent, strict),
            Family::Pasc3 => (SequenceFamily::PrimitiveAscent, strict),
            _ => return None,
        };
        Some(SequenceEnumerator::new(n, family, filter))
    }

    fn partitions(self, n: usize) -> Option<PartitionEnumerator> {
        let filter = match self {
            Family::Part => None,
            Family::PartNonnest3 => Some(NestingFilter::new(K, Flavor::Linear)),
            Family::PartEnhNonnest3 | Family::FillN3 => Some(NestingFilter::new(K, Flavor::Enhanced)),
            Family::FillP3 => {
                return Some(PartitionEnumerator::new(
                    n + 1,
                    Some(NestingFilter::new(K, Flavor::Linear)),
                ))
            }
            _ => return None,
        };
        Some(PartitionEnumerator::new(n, filter))
    }

    /// Every object of size `n`, in canonical (lexicographic or RGS) order.
    pub fn enumerate(self, n: usize, exec: Exec) -> Vec<ObjectEnvelope> {
        if let Some(e) = self.sequences(n) {
            let all = e.collect_with(exec);
            return match self {
                Family::FillM3 => exec.map(&all, |x| {
                    ObjectEnvelope::from(&encode_inversion(x).expect("I_3 members are inversion sequences"))
                }),
                _ => all.iter().map(|s| ObjectEnvelope::sequence(e.family, s)).collect(),
            };
        }
        let e = self
            .partitions(n)
            .expect("every family is a sequence or partition family");
        let all = e.collect_with(exec);
        match self {
            Family::FillN3 => exec.map(&all, |p| ObjectEnvelope::from(&partition_to_n_filling(p))),
            Family::FillP3 => exec.map(&all, |p| {
                ObjectEnvelope::from(&partition_to_p_filling(p).expect("partitions of [n+1] are nonempty"))
            }),
            _ => all.iter().map(ObjectEnvelope::from).collect(),
        }
    }

    /// Size of the family at `n`; every filling family is a bijective image
    /// of the underlying stream, so only that stream is generated.
    pub fn count(self, n: usize, exec: Exec) -> usize {
        match (self.sequences(n), self.partitions(n)) {
            (Some(e), _) => e.collect_with(exec).len(),
            (_, Some(e)) => e.collect_with(exec).len(),
            _ => unreachable!("every family is a sequence or partition family"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<&str> = Family::ALL.iter().map(|f| f.tag()).collect();
        write!(f, "unknown family `{}` (expected one of: {})", self.0, tags.join(", "))
    }
}

impl std::error::Error for UnknownFamily {}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// One row of a count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRecord {
    pub family: Family,
    pub n: usize,
    pub count: usize,
    pub millis: u128,
}

impl CountRecord {
    pub const CSV_HEADER: &'static str = "family,n,count,millis";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.family, self.n, self.count, self.millis)
    }
}

/// Counts for `n = 0..=n_max`, timing each size.
pub fn count_table(family: Family, n_max: usize, exec: Exec) -> Vec<CountRecord> {
    (0..=n_max)
        .map(|n| {
            let start = Instant::now();
            let count = family.count(n, exec);
            CountRecord {
                family,
                n,
                count,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

/// One-line form used by `enumerate --format compact`.
pub fn compact(env: &ObjectEnvelope) -> String {
    match env {
        ObjectEnvelope::Sequence { values, .. } => IntSequence::from(values.as_slice()).to_string(),
        ObjectEnvelope::Partition { blocks, .. } => blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|"),
        ObjectEnvelope::Arcs { arcs, .. } => arcs.iter().map(|[l, r]| format!("({l},{r})")).collect(),
        ObjectEnvelope::Filling { order, ones } => {
            let squares: String = ones.iter().map(|[r, c]| format!("({r},{c})")).collect();
            format!("{order}:{squares}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(family: Family, n_max: usize) -> Vec<usize> {
        count_table(family, n_max, Exec::Parallel)
            .iter()
            .map(|r| r.count)
            .collect()
    }

    #[test]
    fn tags_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("inv4".parse::<Family>().is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(counts(Family::Inv3, 4), [1, 1, 2, 5, 15]);
        assert_eq!(counts(Family::PartEnhNonnest3, 4), [1, 1, 2, 5, 15]);
        assert_eq!(counts(Family::PartNonnest3, 6), [1, 1, 2, 5, 15, 52, 202]);
        // Brute-force oracle values (every subsequence / every arc subset).
        assert_eq!(counts(Family::Inv3, 8), [1, 1, 2, 5, 15, 51, 191, 772, 3320]);
        assert_eq!(counts(Family::Asc3, 8), [1, 1, 2, 5, 15, 52, 202, 859, 3930]);
        assert_eq!(counts(Family::Pasc3, 8), [1, 1, 1, 2, 5, 15, 51, 191, 772]);
        assert_eq!(counts(Family::FillP3, 5), [1, 2, 5, 15, 52, 202]);
        assert_eq!(counts(Family::FillM3, 5), counts(Family::FillN3, 5));
    }

    #[test]
    fn enumerate_examples() {
        let inv3: Vec<String> = Family::Inv3
            .enumerate(3, Exec::Sequential)
            .iter()
            .map(compact)
            .collect();
        assert_eq!(inv3, ["001", "002", "010", "011", "012"]);
        let asc3: Vec<String> = Family::Asc3
            .enumerate(2, Exec::Sequential)
            .iter()
            .map(compact)
            .collect();
        assert_eq!(asc3, ["00", "01"]);
        let n3: Vec<String> = Family::FillN3
            .enumerate(2, Exec::Sequential)
            .iter()
            .map(compact)
            .collect();
        assert_eq!(n3, ["2:(2,1)", "2:(1,1)(2,2)"]);
        for f in Family::ALL {
            let all = f.enumerate(4, Exec::Parallel);
            assert_eq!(all.len(), f.count(4, Exec::Sequential), "{f}");
            assert_eq!(all, f.enumerate(4, Exec::Sequential));
        }
    }
}

//! Tagged JSON forms for sequences, partitions, arc diagrams and fillings.
//!
//! ```json
//! {"type":"sequence","family":"inversion","values":[0,1,0]}
//! {"type":"partition","n":3,"blocks":[[1,3],[2]]}
//! {"type":"arcs","n":3,"flavor":"enhanced","arcs":[[1,3],[2,2]]}
//! {"type":"filling","order":2,"ones":[[1,1],[2,1]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::filling::{Square, TriangularFilling};
use crate::partition::{Arc, ArcDiagram, Flavor, SetPartition};
use crate::seq::{IntSequence, SequenceFamily};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ObjectEnvelope {
    Sequence {
        family: SequenceFamily,
        values: Vec<usize>,
    },
    Partition {
        n: usize,
        blocks: Vec<Vec<usize>>,
    },
    Arcs {
        n: usize,
        flavor: Flavor,
        arcs: Vec<[usize; 2]>,
    },
    Filling {
        order: usize,
        ones: Vec<[usize; 2]>,
    },
}

impl ObjectEnvelope {
    pub fn sequence(family: SequenceFamily, s: &[usize]) -> Self {
        ObjectEnvelope::Sequence {
            family,
            values: s.to_vec(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ObjectEnvelope::Sequence { .. } => "sequence",
            ObjectEnvelope::Partition { .. } => "partition",
            ObjectEnvelope::Arcs { .. } => "arcs",
            ObjectEnvelope::Filling { .. } => "filling",
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let env: ObjectEnvelope =
            serde_json::from_str(text).map_err(|e| Error::pre("envelope", format!("malformed JSON object: {e}")))?;
        env.validate()?;
        Ok(env)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("envelopes always serialise")
    }

    /// Checks the structural invariants of the wrapped object.
    pub fn validate(&self) -> Result<()> {
        match self {
            ObjectEnvelope::Sequence { family, values } => {
                if family.contains(values) {
                    Ok(())
                } else {
                    Err(Error::pre(
                        "envelope",
                        format!(
                            "{} is not a valid {family:?} sequence",
                            IntSequence::from(values.as_slice())
                        ),
                    ))
                }
            }
            ObjectEnvelope::Partition { .. } => self.to_partition().map(drop),
            ObjectEnvelope::Arcs { .. } => self.to_arcs().map(drop),
            ObjectEnvelope::Filling { .. } => self.to_filling().map(drop),
        }
    }

    pub fn to_sequence(&self) -> Result<(SequenceFamily, IntSequence)> {
        match self {
            ObjectEnvelope::Sequence { family, values } => Ok((*family, IntSequence::from(values.clone()))),
            other => Err(wrong_kind("sequence", other)),
        }
    }

    pub fn to_partition(&self) -> Result<SetPartition> {
        match self {
            ObjectEnvelope::Partition { n, blocks } => SetPartition::new(*n, blocks.clone()),
            other => Err(wrong_kind("partition", other)),
        }
    }

    pub fn to_arcs(&self) -> Result<ArcDiagram> {
        match self {
            ObjectEnvelope::Arcs { n, flavor, arcs } => {
                ArcDiagram::new(*n, *flavor, arcs.iter().map(|&[l, r]| Arc::new(l, r)).collect())
            }
            other => Err(wrong_kind("arcs", other)),
        }
    }

    pub fn to_filling(&self) -> Result<TriangularFilling> {
        match self {
            ObjectEnvelope::Filling { order, ones } => {
                TriangularFilling::new(*order, ones.iter().map(|&[r, c]| Square::new(r, c)))
            }
            other => Err(wrong_kind("filling", other)),
        }
    }
}

fn wrong_kind(expected: &str, got: &ObjectEnvelope) -> Error {
    Error::pre(
        "envelope",
        format!("expected a {expected} object, got a {}", got.kind()),
    )
}

impl From<&SetPartition> for ObjectEnvelope {
    fn from(p: &SetPartition) -> Self {
        ObjectEnvelope::Partition {
            n: p.n(),
            blocks: p.blocks().to_vec(),
        }
    }
}

impl From<&ArcDiagram> for ObjectEnvelope {
    fn from(d: &ArcDiagram) -> Self {
        ObjectEnvelope::Arcs {
            n: d.n(),
            flavor: d.flavor(),
            arcs: d.arcs().iter().map(|a| [a.left, a.right]).collect(),
        }
    }
}

impl From<&TriangularFilling> for ObjectEnvelope {
    fn from(f: &TriangularFilling) -> Self {
        ObjectEnvelope::Filling {
            order: f.order(),
            ones: f.ones().map(|sq| [sq.row, sq.col]).collect(),
        }
    }
}

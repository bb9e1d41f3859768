use super::Quiver;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `[source, target, multiplicity]` with 1-based labels.
pub type ArrowEntry = [i64; 3];

/// Interchange format for quivers. Readers accept either form; writers emit
/// the arrow list, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuiverFile {
    Arrows { n: usize, arrows: Vec<ArrowEntry> },
    Matrix { matrix: Vec<Vec<i64>> },
}

impl QuiverFile {
    pub fn from_quiver(q: &Quiver) -> Self {
        let q = if q.frozen() == 0 {
            q.clone()
        } else {
            q.mutable_part()
        };
        QuiverFile::Arrows {
            n: q.n(),
            arrows: q
                .arrows()
                .into_iter()
                .map(|(s, t, m)| [s as i64, t as i64, i64::from(m)])
                .collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        match self {
            QuiverFile::Arrows { n, arrows } => {
                let mut triples = Vec::with_capacity(arrows.len());
                for &[s, t, m] in arrows {
                    if s <= 0 || t <= 0 {
                        return Err(Error::VertexOutOfRange {
                            vertex: s.min(t).max(0) as usize,
                            n: *n,
                        });
                    }
                    if m <= 0 || m > i64::from(u32::MAX) {
                        return Err(Error::ZeroMultiplicity {
                            from: s as usize,
                            to: t as usize,
                        });
                    }
                    triples.push((s as usize, t as usize, m as u32));
                }
                Quiver::from_arrows(*n, &triples)
            }
            QuiverFile::Matrix { matrix } => Quiver::from_matrix(matrix),
        }
    }

    pub fn parse(text: &str) -> Result<Quiver> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.to_quiver()
    }

    pub fn to_json(q: &Quiver) -> String {
        serde_json::to_string(&Self::from_quiver(q)).expect("quiver serialises")
    }
}

impl From<&Quiver> for QuiverFile {
    fn from(q: &Quiver) -> Self {
        QuiverFile::from_quiver(q)
    }
}

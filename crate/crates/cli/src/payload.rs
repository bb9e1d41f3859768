//! Wire payloads shared by the CLI and the HTTP service, so both print the
//! same bytes for the same input.

use quiverkit::dt::{dt_product, verify_identity, DtRecord, IdentityCheck};
use quiverkit::search::{
    ExchangeGraphSlice, Fixture, MutationClass, SearchOutcome, SequenceReport, Step, Verdict,
};
use quiverkit::{MutationState, Quiver, QuiverFile, Result};
use serde::{Deserialize, Serialize};

/// Default truncation degree.
pub const DEFAULT_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatePayload {
    pub origin: QuiverFile,
    /// Mutable part of the current quiver.
    pub quiver: QuiverFile,
    pub c_matrix: Vec<Vec<i64>>,
    pub greens: Vec<usize>,
    pub reds: Vec<usize>,
    pub history: Vec<usize>,
    pub all_red: bool,
}

impl StatePayload {
    pub fn new(s: &MutationState) -> Self {
        StatePayload {
            origin: QuiverFile::from_quiver(s.origin()),
            quiver: QuiverFile::from_quiver(s.quiver()),
            c_matrix: s.c_matrix_unchecked().rows(),
            greens: s.greens(),
            reds: s.reds(),
            history: s.history().to_vec(),
            all_red: s.all_red(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportPayload {
    pub sequence: Vec<usize>,
    pub verdict: Verdict,
    pub steps: Vec<Step>,
    pub final_state: StatePayload,
}

impl From<&SequenceReport> for ReportPayload {
    fn from(r: &SequenceReport) -> Self {
        ReportPayload {
            sequence: r.sequence.clone(),
            verdict: r.verdict,
            steps: r.steps.clone(),
            final_state: StatePayload::new(&r.final_state),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub exponent: Vec<u32>,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

pub fn verify_payload(q: &Quiver, seq_a: &[usize], seq_b: &[usize], degree: u32) -> Result<VerifyPayload> {
    Ok(match verify_identity(q, seq_a, seq_b, degree)? {
        IdentityCheck::Equal => VerifyPayload {
            equal: true,
            witness: None,
        },
        IdentityCheck::Unequal(d) => VerifyPayload {
            equal: false,
            witness: Some(Witness {
                exponent: d.exponent.as_slice().to_vec(),
                left: d.left.to_string(),
                right: d.right.to_string(),
            }),
        },
    })
}

/// The product along `seq`, whether or not it is reddening.
pub fn dt_payload(q: &Quiver, seq: &[usize], degree: u32) -> Result<DtRecord> {
    Ok(dt_product(q, seq, degree)?.to_record())
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassPayload {
    pub count: usize,
    pub complete: bool,
}

impl From<&MutationClass> for ClassPayload {
    fn from(c: &MutationClass) -> Self {
        ClassPayload {
            count: c.count,
            complete: c.complete,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchPayload {
    pub sequences: Vec<Vec<usize>>,
    pub truncated: bool,
}

impl From<&SearchOutcome> for SearchPayload {
    fn from(o: &SearchOutcome) -> Self {
        SearchPayload {
            sequences: o.sequences.clone(),
            truncated: o.truncated,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub quiver: QuiverFile,
    pub sequences: Vec<Vec<usize>>,
}

impl From<&Fixture> for CatalogEntry {
    fn from(f: &Fixture) -> Self {
        CatalogEntry {
            name: f.name,
            summary: f.summary,
            quiver: QuiverFile::from_quiver(&f.quiver),
            sequences: f.sequences.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphNode {
    pub id: usize,
    pub key: String,
    /// A mutation sequence reaching this node from the source.
    pub history: Vec<usize>,
    pub greens: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub vertex: usize,
    pub to: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphPayload {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub truncated: bool,
}

impl From<&ExchangeGraphSlice> for GraphPayload {
    fn from(g: &ExchangeGraphSlice) -> Self {
        GraphPayload {
            nodes: g
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| GraphNode {
                    id,
                    key: n.key.to_hex(),
                    history: n.representative.history().to_vec(),
                    greens: n.representative.greens(),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| GraphEdge {
                    from: e.from,
                    vertex: e.vertex,
                    to: e.to,
                })
                .collect(),
            sources: g.sources.clone(),
            sinks: g.sinks.clone(),
            truncated: g.truncated,
        }
    }
}

/// Compact JSON, the form used on the wire.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("payloads serialise")
}

/// Parses `"1,2,3"` (spaces allowed, empty for the empty sequence).
pub fn parse_sequence(text: &str) -> std::result::Result<Vec<usize>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let t = tok.trim();
            t.parse::<usize>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| format!("invalid vertex `{t}` in sequence"))
        })
        .collect()
}

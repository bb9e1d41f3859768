use crate::error::Result;
use crate::quiver::{MutationState, Quiver, VertexStatus};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every step green, but some final vertex is still green.
    Green,
    MaximalGreen,
    ReddeningNotGreen,
    Neither,
}

impl Verdict {
    pub fn is_reddening(self) -> bool {
        matches!(self, Verdict::MaximalGreen | Verdict::ReddeningNotGreen)
    }
}

/// One mutation of a replayed sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub vertex: usize,
    /// c-vector of `vertex` just before mutating at it.
    pub c_vector: Vec<i64>,
    pub sign: i8,
    pub was_green: bool,
}

#[derive(Debug, Clone)]
pub struct SequenceReport {
    pub sequence: Vec<usize>,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
    pub final_state: MutationState,
}

impl SequenceReport {
    pub fn is_maximal_green(&self) -> bool {
        self.verdict == Verdict::MaximalGreen
    }
}

/// Replays `seq` on the framing of `q` and classifies it. Non-green steps
/// are recorded, not rejected.
pub fn verify_sequence(q: &Quiver, seq: &[usize]) -> Result<SequenceReport> {
    let mut state = MutationState::frame(q)?;
    let mut steps = Vec::with_capacity(seq.len());
    for &k in seq {
        let idx = state.quiver().check_mutable(k)?;
        let c = state.c_matrix();
        let sign = c.row_sign(idx);
        steps.push(Step {
            vertex: k,
            c_vector: c.row(idx).to_vec(),
            sign,
            was_green: state.vertex_status(k)? == VertexStatus::Green,
        });
        state = state.mutate(k)?;
    }
    let all_green = steps.iter().all(|s| s.was_green);
    let verdict = match (all_green, state.all_red()) {
        (true, true) => Verdict::MaximalGreen,
        (false, true) => Verdict::ReddeningNotGreen,
        (true, false) if !seq.is_empty() => Verdict::Green,
        _ => Verdict::Neither,
    };
    Ok(SequenceReport {
        sequence: seq.to_vec(),
        steps,
        verdict,
        final_state: state,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap()
    }

    #[test]
    fn verdicts_on_a2() {
        assert_eq!(verify_sequence(&a2(), &[1, 2]).unwrap().verdict, Verdict::MaximalGreen);
        assert_eq!(verify_sequence(&a2(), &[2, 1, 2]).unwrap().verdict, Verdict::MaximalGreen);
        assert_eq!(
            verify_sequence(&a2(), &[1, 2, 1, 2, 1, 2, 1]).unwrap().verdict,
            Verdict::ReddeningNotGreen
        );
        assert_eq!(verify_sequence(&a2(), &[]).unwrap().verdict, Verdict::Neither);
        assert_eq!(verify_sequence(&a2(), &[2]).unwrap().verdict, Verdict::Green);
        assert_eq!(verify_sequence(&a2(), &[1, 1]).unwrap().verdict, Verdict::Neither);
    }

    #[test]
    fn records_steps() {
        let r = verify_sequence(&a2(), &[2, 1, 2]).unwrap();
        let cv: Vec<_> = r.steps.iter().map(|s| s.c_vector.clone()).collect();
        assert_eq!(cv, vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
        assert!(r.steps.iter().all(|s| s.was_green && s.sign == 1));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(verify_sequence(&a2(), &[3]).is_err());
    }
}

//! Periodicity probe: iterate the commutative shadow of a reddening
//! sequence and look for the first round that returns the initial Y-seed.

use super::yseed::{SeparatedSeed, TropicalSeed};
use crate::error::{Error, Result};
use crate::quiver::{frozen_isomorphism, MutationState, Quiver};
use num_traits::{One, Zero};

/// One round applies `reddening` and then renames vertex `i` to `sigma(i)`,
/// where `sigma` identifies the final framed quiver with the coframed one.
/// Returns the smallest round count after which the seed equals the initial
/// seed, or `None` if there is none within `max_rounds`.
///
/// Rounds are screened on tropical exponent vectors first; the exact seed,
/// kept in separated form, is only advanced up to a round whose tropical
/// shadow is the identity.
pub fn dt_order_probe(q: &Quiver, reddening: &[usize], max_rounds: usize) -> Result<Option<usize>> {
    let q = q.mutable_part();
    let final_state = MutationState::frame(&q)?.apply_sequence(reddening)?;
    if !final_state.all_red() {
        return Err(Error::NotReddening);
    }
    let sigma = frozen_isomorphism(&MutationState::coframe(&q)?, &final_state)?
        .ok_or(Error::NotReddening)?;
    let perm = sigma.images();

    let trop_start = TropicalSeed::initial(&q);
    let mut trop = trop_start.clone();
    let mut exact = SeparatedSeed::initial(&q);
    let mut exact_round = 0;

    for round in 1..=max_rounds {
        for &k in reddening {
            trop = trop.mutate(k)?;
        }
        trop = trop.relabel(perm);
        debug_assert_eq!(trop.quiver, trop_start.quiver);
        if !is_identity(&trop) {
            continue;
        }
        while exact_round < round {
            for &k in reddening {
                exact = exact.mutate(k)?;
            }
            exact = exact.relabel(perm);
            exact_round += 1;
        }
        if exact.is_initial(&trop_start.quiver) {
            return Ok(Some(round));
        }
    }
    Ok(None)
}

fn is_identity(t: &TropicalSeed) -> bool {
    t.exps.iter().enumerate().all(|(i, e)| {
        e.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_is_periodic() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        let a = dt_order_probe(&q, &[1, 2], 20).unwrap();
        let b = dt_order_probe(&q, &[2, 1, 2], 20).unwrap();
        assert!(a.is_some_and(|p| p <= 10), "{a:?}");
        assert_eq!(a, b);
    }

    #[test]
    fn single_vertex() {
        let p = dt_order_probe(&Quiver::empty(1), &[1], 10).unwrap();
        assert_eq!(p, Some(2));
    }

    #[test]
    fn rejects_non_reddening() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        assert!(matches!(dt_order_probe(&q, &[1], 5), Err(Error::NotReddening)));
    }
}

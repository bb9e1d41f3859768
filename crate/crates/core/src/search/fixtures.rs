//! Named quivers with their known maximal green sequences.

use super::dynkin::{alternate_blocks, dynkin_green_sequences, DynkinSpec};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    #[serde(skip)]
    pub quiver: Quiver,
    /// Known maximal green sequences, 1-based.
    pub sequences: Vec<Vec<usize>>,
}

const NAMES: &[(&str, &str)] = &[
    ("a2", "1 -> 2"),
    ("a3-alternating", "A3 with the middle vertex a source"),
    ("a3-linear", "1 -> 2 -> 3"),
    ("oriented-triangle", "the oriented 3-cycle"),
    ("triangle-path", "a path mutation-equivalent to the oriented 3-cycle"),
    ("bfz-a4-triangular", "10-vertex triangular quiver with a 20-step sequence"),
    ("bfz-a4-second", "second member of the 10-vertex mutation class"),
    ("bfz-a4-third", "third member of the 10-vertex mutation class"),
    ("triangle-product-a3", "9-vertex quiver with double arrows"),
    ("markov", "double-arrow 3-cycle; no reddening sequence"),
    ("a2-square-a2", "square product of two alternating A2 quivers"),
    ("a4-square-d5", "square product of alternating A4 and D5"),
];

pub fn catalog() -> Vec<Fixture> {
    NAMES
        .iter()
        .map(|(name, _)| fixture(name).expect("catalog entries build"))
        .collect()
}

pub fn fixture_names() -> Vec<&'static str> {
    NAMES.iter().map(|(n, _)| *n).collect()
}

fn arrows(n: usize, list: &[(usize, usize, u32)]) -> Quiver {
    Quiver::from_arrows(n, list).expect("fixture arrows are valid")
}

fn simple(n: usize, list: &[(usize, usize)]) -> Quiver {
    let v: Vec<_> = list.iter().map(|&(a, b)| (a, b, 1)).collect();
    arrows(n, &v)
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let (name, summary) = *NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    let (quiver, sequences) = match name {
        "a2" => (simple(2, &[(1, 2)]), vec![vec![1, 2], vec![2, 1, 2]]),
        "a3-alternating" => (
            simple(3, &[(2, 1), (2, 3)]),
            vec![vec![2, 1, 3], vec![1, 3, 2, 1, 3, 2]],
        ),
        "a3-linear" => (simple(3, &[(1, 2), (2, 3)]), vec![vec![1, 2, 3]]),
        "oriented-triangle" => (simple(3, &[(2, 1), (1, 3), (3, 2)]), vec![]),
        "triangle-path" => (simple(3, &[(1, 2), (3, 1)]), vec![vec![3, 1, 2]]),
        "bfz-a4-triangular" => (
            bfz_a4_triangular(),
            vec![vec![7, 8, 9, 10, 4, 5, 6, 2, 3, 1, 7, 8, 9, 4, 5, 2, 7, 8, 4, 7]],
        ),
        "bfz-a4-second" => (
            simple(
                10,
                &[
                    (10, 1),
                    (9, 2),
                    (3, 4),
                    (4, 6),
                    (9, 4),
                    (5, 7),
                    (10, 5),
                    (6, 7),
                    (7, 8),
                    (8, 9),
                ],
            ),
            vec![],
        ),
        "bfz-a4-third" => (
            simple(
                10,
                &[
                    (10, 1),
                    (2, 3),
                    (10, 2),
                    (3, 5),
                    (4, 6),
                    (5, 6),
                    (6, 7),
                    (7, 8),
                    (8, 9),
                    (9, 10),
                ],
            ),
            vec![],
        ),
        "triangle-product-a3" => (
            triangle_product_a3(),
            vec![vec![3, 6, 9, 2, 5, 8, 1, 4, 7, 3, 6, 9, 2, 5, 8, 3, 6, 9]],
        ),
        "markov" => (arrows(3, &[(1, 2, 2), (2, 3, 2), (3, 1, 2)]), vec![]),
        "a2-square-a2" => {
            let q = simple(4, &[(1, 2), (2, 4), (4, 3), (3, 1)]);
            let h = DynkinSpec::a(2)?.coxeter_number();
            let seqs = vec![
                alternate_blocks(&[1, 4], &[2, 3], h),
                alternate_blocks(&[2, 3], &[1, 4], h),
            ];
            (q, seqs)
        }
        "a4-square-d5" => {
            let q = a4_square_d5();
            // even vertices: (odd A4 position, D5 vertex 1 or 3) and
            // (even A4 position, D5 vertex 2, 4 or 5)
            let even = [1, 3, 7, 9, 10, 11, 13, 17, 19, 20];
            let odd: Vec<usize> = (1..=20).filter(|v| !even.contains(v)).collect();
            let seqs = vec![
                alternate_blocks(&even, &odd, DynkinSpec::a(4)?.coxeter_number()),
                alternate_blocks(&odd, &even, DynkinSpec::d(5)?.coxeter_number()),
            ];
            (q, seqs)
        }
        _ => unreachable!("every catalog name has a definition"),
    };
    Ok(Fixture {
        name,
        summary,
        quiver,
        sequences,
    })
}

/// Known sequences of the alternating Dynkin quiver of `spec`.
pub fn dynkin_fixture_sequences(spec: DynkinSpec) -> Result<Vec<Vec<usize>>> {
    let (a, b) = dynkin_green_sequences(spec)?;
    Ok(vec![a, b])
}

fn bfz_a4_triangular() -> Quiver {
    simple(
        10,
        &[
            (2, 1),
            (1, 3),
            (3, 2),
            (4, 2),
            (2, 5),
            (5, 3),
            (3, 6),
            (5, 4),
            (7, 4),
            (4, 8),
            (6, 5),
            (8, 5),
            (5, 9),
            (9, 6),
            (6, 10),
            (8, 7),
            (9, 8),
            (10, 9),
        ],
    )
}

fn triangle_product_a3() -> Quiver {
    arrows(
        9,
        &[
            (1, 2, 1),
            (1, 4, 2),
            (5, 1, 2),
            (2, 3, 1),
            (2, 5, 2),
            (6, 2, 2),
            (3, 6, 2),
            (4, 5, 1),
            (4, 7, 1),
            (8, 4, 1),
            (5, 6, 1),
            (5, 8, 1),
            (9, 5, 1),
            (6, 9, 1),
            (7, 8, 1),
            (8, 9, 1),
        ],
    )
}

/// Rows are the A4 positions 1..4, columns the D5 vertices with the branch
/// point at 3; `(p, r)` has label `5 (p - 1) + r`.
fn a4_square_d5() -> Quiver {
    let grid: &[((usize, usize), (usize, usize))] = &[
        ((1, 4), (2, 4)),
        ((3, 4), (2, 4)),
        ((3, 4), (4, 4)),
        ((2, 4), (2, 3)),
        ((4, 4), (4, 3)),
        ((1, 5), (2, 5)),
        ((3, 5), (2, 5)),
        ((3, 5), (4, 5)),
        ((2, 5), (2, 3)),
        ((4, 5), (4, 3)),
        ((1, 3), (1, 5)),
        ((1, 3), (1, 4)),
        ((1, 3), (1, 2)),
        ((2, 3), (1, 3)),
        ((2, 3), (3, 3)),
        ((3, 3), (3, 4)),
        ((3, 3), (3, 5)),
        ((3, 3), (3, 2)),
        ((4, 3), (3, 3)),
        ((1, 2), (2, 2)),
        ((2, 2), (2, 1)),
        ((2, 2), (2, 3)),
        ((3, 2), (2, 2)),
        ((3, 2), (4, 2)),
        ((4, 2), (4, 3)),
        ((4, 2), (4, 1)),
        ((1, 1), (1, 2)),
        ((2, 1), (1, 1)),
        ((2, 1), (3, 1)),
        ((3, 1), (3, 2)),
        ((4, 1), (3, 1)),
    ];
    let label = |(p, r): (usize, usize)| 5 * (p - 1) + r;
    let list: Vec<_> = grid.iter().map(|&(s, t)| (label(s), label(t), 1)).collect();
    arrows(20, &list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::dynkin::{dynkin_quiver, Orientation};
    use crate::search::product::{square_product, square_product_sequences};
    use crate::search::verify::{verify_sequence, Verdict};

    #[test]
    fn every_known_sequence_is_maximal_green() {
        for f in catalog() {
            for s in &f.sequences {
                let r = verify_sequence(&f.quiver, s).unwrap();
                assert_eq!(r.verdict, Verdict::MaximalGreen, "{} {:?}", f.name, s);
            }
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn sizes() {
        let f = fixture("bfz-a4-triangular").unwrap();
        assert_eq!(f.quiver.n(), 10);
        assert_eq!(f.sequences[0].len(), 20);
        let t = fixture("triangle-product-a3").unwrap();
        assert_eq!(t.quiver.n(), 9);
        let doubles = t.quiver.arrows().iter().filter(|a| a.2 == 2).count();
        assert_eq!(doubles, 5);
        assert!(fixture("markov").unwrap().sequences.is_empty());
    }

    #[test]
    fn hand_entered_grid_matches_construction() {
        let a4 = dynkin_quiver(DynkinSpec::a(4).unwrap(), Orientation::Alternating).unwrap();
        let d5 = dynkin_quiver(DynkinSpec::d(5).unwrap(), Orientation::Alternating).unwrap();
        let p = square_product(&a4, &d5).unwrap();
        let f = fixture("a4-square-d5").unwrap();
        assert_eq!(p.quiver, f.quiver);
        assert_eq!(p.quiver.arrow_count(), 31);
        let (a, b) = square_product_sequences(&p).unwrap();
        assert_eq!(vec![a, b], f.sequences);
    }

    #[test]
    fn a2_square_a2_matches_construction() {
        let a2 = dynkin_quiver(DynkinSpec::a(2).unwrap(), Orientation::Alternating).unwrap();
        let p = square_product(&a2, &a2).unwrap();
        assert_eq!(p.quiver, fixture("a2-square-a2").unwrap().quiver);
    }
}

//! Simply-laced Dynkin quivers, their Coxeter numbers, and the green
//! sequences built from sources and sinks.

use super::verify::verify_sequence;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinSpec {
    pub family: DynkinFamily,
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Every vertex a source or a sink; the colour class of the last vertex
    /// consists of sinks.
    Alternating,
    /// Every edge points from the smaller to the larger label.
    Linear,
}

impl DynkinSpec {
    pub fn new(family: DynkinFamily, rank: usize) -> Result<Self> {
        let ok = match family {
            DynkinFamily::A => rank >= 1,
            DynkinFamily::D => rank >= 4,
            DynkinFamily::E => (6..=8).contains(&rank),
        };
        if !ok {
            let c = match family {
                DynkinFamily::A => 'A',
                DynkinFamily::D => 'D',
                DynkinFamily::E => 'E',
            };
            return Err(Error::InvalidDynkin { family: c, rank });
        }
        Ok(DynkinSpec { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(DynkinFamily::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(DynkinFamily::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(DynkinFamily::E, rank)
    }

    /// Parses names like `A5`, `d4`, `E8`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => DynkinFamily::A,
            Some('D') => DynkinFamily::D,
            Some('E') => DynkinFamily::E,
            _ => return Err(Error::Parse(format!("unknown Dynkin type `{s}`"))),
        };
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad Dynkin rank in `{s}`")))?;
        Self::new(family, rank)
    }

    /// Coxeter number from the standard table.
    pub fn coxeter_number(&self) -> usize {
        let n = self.rank;
        match self.family {
            DynkinFamily::A => n + 1,
            DynkinFamily::D => 2 * n - 2,
            DynkinFamily::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }

    /// Edges of the diagram (1-based, Bourbaki numbering).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            DynkinFamily::A => (1..n).map(|i| (i, i + 1)).collect(),
            DynkinFamily::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            DynkinFamily::E => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Order of the product of the simple reflections, computed from the
    /// Cartan matrix.
    pub fn coxeter_order(&self) -> usize {
        let n = self.rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in self.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        // s_i(alpha_j) = alpha_j - a_ij alpha_i
        let reflection = |i: usize| {
            let mut m = identity(n);
            for j in 0..n {
                m[i][j] -= cartan[i][j];
            }
            m
        };
        let mut c = identity(n);
        for i in 0..n {
            c = matmul(&c, &reflection(i));
        }
        let mut power = c.clone();
        for order in 1..=1000 {
            if power == identity(n) {
                return order;
            }
            power = matmul(&power, &c);
        }
        unreachable!("Coxeter element of a finite Weyl group has finite order")
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// A Dynkin quiver with its sources (`i+`) and sinks (`i-`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinQuiver {
    pub spec: DynkinSpec,
    pub quiver: Quiver,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

pub fn dynkin_quiver(spec: DynkinSpec, orientation: Orientation) -> Result<DynkinQuiver> {
    let n = spec.rank;
    let edges = spec.edges();
    let arrows: Vec<(usize, usize, u32)> = match orientation {
        Orientation::Linear => edges.iter().map(|&(a, b)| (a, b, 1)).collect(),
        Orientation::Alternating => {
            let colour = two_colouring(n, &edges);
            let sink_side = colour[n - 1];
            edges
                .iter()
                .map(|&(a, b)| {
                    if colour[b - 1] == sink_side {
                        (a, b, 1)
                    } else {
                        (b, a, 1)
                    }
                })
                .collect()
        }
    };
    let quiver = Quiver::from_arrows(n, &arrows)?;
    let (sources, sinks) = match orientation {
        Orientation::Alternating => split_sources_sinks(&quiver)?,
        Orientation::Linear => (quiver.sources(), quiver.sinks()),
    };
    Ok(DynkinQuiver {
        spec,
        quiver,
        sources,
        sinks,
    })
}

fn two_colouring(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut colour = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = colour[v].unwrap();
            for &(a, b) in edges {
                let w = if a - 1 == v {
                    b - 1
                } else if b - 1 == v {
                    a - 1
                } else {
                    continue;
                };
                if colour[w].is_none() {
                    colour[w] = Some(!c);
                    stack.push(w);
                }
            }
        }
    }
    colour.into_iter().map(Option::unwrap).collect()
}

/// Sources and sinks of an alternating quiver. Isolated vertices count as
/// sources.
pub fn split_sources_sinks(q: &Quiver) -> Result<(Vec<usize>, Vec<usize>)> {
    let sources = q.sources();
    let sinks: Vec<usize> = q
        .sinks()
        .into_iter()
        .filter(|v| !sources.contains(v))
        .collect();
    let covered: BTreeSet<usize> = sources.iter().chain(&sinks).copied().collect();
    if let Some(v) = (1..=q.n()).find(|v| !covered.contains(v)) {
        return Err(Error::NotAlternating { vertex: v });
    }
    Ok((sources, sinks))
}

/// Concatenation `first second first ...` with `blocks` blocks.
pub fn alternate_blocks(first: &[usize], second: &[usize], blocks: usize) -> Vec<usize> {
    (0..blocks)
        .flat_map(|b| if b % 2 == 0 { first } else { second })
        .copied()
        .collect()
}

/// `i+ i-` and `i- i+ i- ...` with `h` blocks on the alternating quiver of
/// `spec`; both are checked to be maximal green.
pub fn dynkin_green_sequences(spec: DynkinSpec) -> Result<(Vec<usize>, Vec<usize>)> {
    let dq = dynkin_quiver(spec, Orientation::Alternating)?;
    let seq_a = alternate_blocks(&dq.sources, &dq.sinks, 2);
    let seq_b = alternate_blocks(&dq.sinks, &dq.sources, spec.coxeter_number());
    for seq in [&seq_a, &seq_b] {
        let report = verify_sequence(&dq.quiver, seq)?;
        if !report.is_maximal_green() {
            return Err(Error::ConstructionInvalid(format!(
                "{spec}: {seq:?} is {:?}, not maximal green",
                report.verdict
            )));
        }
    }
    Ok((seq_a, seq_b))
}

/// Topological order of an acyclic quiver (sources first, ties by label),
/// checked to be maximal green.
pub fn acyclic_green_sequence(q: &Quiver) -> Result<Vec<usize>> {
    if let Some(cycle) = q.find_cycle() {
        return Err(Error::Cyclic { cycle });
    }
    let n = q.n();
    let mut indeg: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| q.b(i, j) > 0).count())
        .collect();
    let mut ready: BTreeSet<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v + 1);
        for w in 0..n {
            if q.b(v, w) > 0 {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
    }
    let report = verify_sequence(q, &order)?;
    if !report.is_maximal_green() {
        return Err(Error::ConstructionInvalid(format!(
            "topological order {order:?} is {:?}",
            report.verdict
        )));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_table_matches_reflection_order() {
        let mut specs = vec![DynkinSpec::e(6), DynkinSpec::e(7), DynkinSpec::e(8)];
        specs.extend((1..=9).map(DynkinSpec::a));
        specs.extend((4..=9).map(DynkinSpec::d));
        for spec in specs {
            let spec = spec.unwrap();
            assert_eq!(spec.coxeter_number(), spec.coxeter_order(), "{spec}");
        }
    }

    #[test]
    fn invalid_ranks() {
        assert!(DynkinSpec::a(0).is_err());
        assert!(DynkinSpec::d(3).is_err());
        assert!(DynkinSpec::e(9).is_err());
        assert_eq!(DynkinSpec::parse("D5").unwrap(), DynkinSpec::d(5).unwrap());
        assert!(DynkinSpec::parse("F4").is_err());
    }

    #[test]
    fn a2_alternating() {
        let dq = dynkin_quiver(DynkinSpec::a(2).unwrap(), Orientation::Alternating).unwrap();
        assert_eq!(dq.quiver.arrows(), vec![(1, 2, 1)]);
        assert_eq!(dq.sources, vec![1]);
        assert_eq!(dq.sinks, vec![2]);
    }

    #[test]
    fn a5_alternating_has_three_sinks() {
        let dq = dynkin_quiver(DynkinSpec::a(5).unwrap(), Orientation::Alternating).unwrap();
        assert_eq!(dq.sources, vec![2, 4]);
        assert_eq!(dq.sinks, vec![1, 3, 5]);
        assert_eq!(
            dq.quiver.arrows(),
            vec![(2, 1, 1), (2, 3, 1), (4, 3, 1), (4, 5, 1)]
        );
    }

    #[test]
    fn a4_linear() {
        let dq = dynkin_quiver(DynkinSpec::a(4).unwrap(), Orientation::Linear).unwrap();
        assert_eq!(dq.quiver.arrows(), vec![(1, 2, 1), (2, 3, 1), (3, 4, 1)]);
    }

    #[test]
    fn small_dynkin_sequences() {
        let (a, b) = dynkin_green_sequences(DynkinSpec::a(2).unwrap()).unwrap();
        assert_eq!((a, b), (vec![1, 2], vec![2, 1, 2]));
        let (a, b) = dynkin_green_sequences(DynkinSpec::a(1).unwrap()).unwrap();
        assert_eq!((a, b), (vec![1], vec![1]));
        let (_, b) = dynkin_green_sequences(DynkinSpec::a(5).unwrap()).unwrap();
        assert_eq!(b.len(), 15);
    }

    #[test]
    fn d_and_e_sequences_are_maximal_green() {
        for spec in [DynkinSpec::d(4), DynkinSpec::d(5), DynkinSpec::e(6)] {
            dynkin_green_sequences(spec.unwrap()).unwrap();
        }
    }

    #[test]
    fn acyclic_orders() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        assert_eq!(acyclic_green_sequence(&q).unwrap(), vec![1, 2]);
        let p = Quiver::from_arrows(3, &[(1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(acyclic_green_sequence(&p).unwrap(), vec![1, 2, 3]);
        let r = Quiver::from_arrows(3, &[(3, 2, 2), (2, 1, 1)]).unwrap();
        assert_eq!(acyclic_green_sequence(&r).unwrap(), vec![3, 2, 1]);
        let c = Quiver::from_arrows(3, &[(1, 2, 1), (2, 3, 1), (3, 1, 1)]).unwrap();
        assert!(matches!(acyclic_green_sequence(&c), Err(Error::Cyclic { .. })));
    }
}

//! Vertex partitions into X1, X2, X3, T and their exact statistics.

use crate::bitset::MAX_VERTICES;
use crate::hypergraph::Hypergraph3;
use crate::{Error, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartClass {
    X1,
    X2,
    X3,
    T,
}

/// Assignment of every vertex to one of X1, X2, X3, T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition4 {
    assignment: Vec<PartClass>,
}

impl Partition4 {
    pub fn new(assignment: Vec<PartClass>) -> Result<Partition4, Error> {
        if assignment.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(assignment.len()));
        }
        Ok(Partition4 { assignment })
    }

    pub fn class(&self, v: u8) -> PartClass {
        self.assignment[v as usize]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn part_sizes(&self) -> [usize; 4] {
        let mut sizes = [0usize; 4];
        for c in &self.assignment {
            sizes[*c as usize] += 1;
        }
        sizes
    }
}

/// Exact partition statistics.
///
/// `x1, x2, x3, t` are part sizes over `n`; `f1` is the count of funky edges
/// (two vertices in one X part, one in another X part) over `C(n,3)`, `f2`
/// the count of funky non-edges (one vertex in each X part) over `C(n,3)`.
/// For `n < 3` both densities are zero by convention.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionStats {
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
    pub t: Rational,
    pub f1: Rational,
    pub f2: Rational,
    /// `6 x1 x2 x3 - f2 + 0.196 t + 0.366 t (1 - t)`, exactly.
    pub eqmain_lhs: Rational,
}

fn ratio(num: u64, den: u64) -> Rational {
    if den == 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// The left side of the main inequality, exactly:
/// `6 x1 x2 x3 - f2 + (196/1000) t + (366/1000) t (1 - t)`.
pub fn eqmain_lhs(
    x1: &Rational,
    x2: &Rational,
    x3: &Rational,
    t: &Rational,
    f2: &Rational,
) -> Rational {
    let six = Rational::from(BigInt::from(6));
    let c196 = Rational::new(BigInt::from(196), BigInt::from(1000));
    let c366 = Rational::new(BigInt::from(366), BigInt::from(1000));
    let one = Rational::from(BigInt::from(1));
    six * x1 * x2 * x3 - f2 + c196 * t + c366 * t * (one - t)
}

/// Classifies every triple of `g` against `p` and returns exact densities.
pub fn partition_stats(g: &Hypergraph3, p: &Partition4) -> Result<PartitionStats, Error> {
    let n = g.vertex_count() as usize;
    if p.len() != n {
        return Err(Error::Domain(format!(
            "partition covers {} vertices, graph has {n}",
            p.len()
        )));
    }
    let mut f1_count = 0u64;
    let mut f2_count = 0u64;
    for c in 2..n as u8 {
        for b in 1..c {
            for a in 0..b {
                let classes = [p.class(a), p.class(b), p.class(c)];
                if classes.contains(&PartClass::T) {
                    continue;
                }
                let mut counts = [0u8; 4];
                for cl in classes {
                    counts[cl as usize] += 1;
                }
                let rainbow = counts[0] == 1 && counts[1] == 1 && counts[2] == 1;
                let doubled = counts.iter().take(3).any(|&k| k == 2);
                if g.has_edge(a, b, c) {
                    if doubled {
                        f1_count += 1;
                    }
                } else if rainbow {
                    f2_count += 1;
                }
            }
        }
    }
    let triples = (n * n.saturating_sub(1) * n.saturating_sub(2) / 6) as u64;
    let sizes = p.part_sizes();
    let x1 = ratio(sizes[0] as u64, n as u64);
    let x2 = ratio(sizes[1] as u64, n as u64);
    let x3 = ratio(sizes[2] as u64, n as u64);
    let t = ratio(sizes[3] as u64, n as u64);
    let f1 = ratio(f1_count, triples);
    let f2 = ratio(f2_count, triples);
    let lhs = eqmain_lhs(&x1, &x2, &x3, &t, &f2);
    Ok(PartitionStats {
        x1,
        x2,
        x3,
        t,
        f1,
        f2,
        eqmain_lhs: lhs,
    })
}

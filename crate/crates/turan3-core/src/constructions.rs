//! The iterated balanced blow-up of an edge, its exact edge counts at any
//! scale, the best known small constructions, and the desk-scale sweep of
//! the edge-count bound.

use crate::bitset::MAX_VERTICES;
use crate::hypergraph::Hypergraph3;
use crate::{Error, Rational};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Part sizes of the top split: `(floor(n/3), floor((n+1)/3), floor((n+2)/3))`.
#[allow(clippy::manual_div_ceil)]
fn split(n: u64) -> (u64, u64, u64) {
    (n / 3, (n + 1) / 3, (n + 2) / 3)
}

// ---------------------------------------------------------------------------
// Explicit graphs (n <= 16)
// ---------------------------------------------------------------------------

/// The iterated balanced blow-up of an edge on `n <= 16` vertices. Parts are
/// contiguous vertex ranges laid out smallest-first at every level.
pub fn hn_graph(n: usize) -> Result<Hypergraph3, Error> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = Hypergraph3::empty(n)?;
    fill_recursive(&mut g, 0, n as u64, &mut |_, _| None)?;
    Ok(g)
}

/// Recursive construction shared by `hn_graph` and `best_known`: cross edges
/// over the three parts, then each part filled either by `base` (when it
/// returns a base-case graph) or recursively.
fn fill_recursive(
    g: &mut Hypergraph3,
    offset: u8,
    n: u64,
    base: &mut dyn FnMut(u8, u64) -> Option<Vec<[u8; 3]>>,
) -> Result<(), Error> {
    if let Some(triples) = base(offset, n) {
        for t in triples {
            g.add_edge(t[0], t[1], t[2])?;
        }
        return Ok(());
    }
    if n <= 2 {
        return Ok(());
    }
    let (i, j, k) = split(n);
    let (i, j, k) = (i as u8, j as u8, k as u8);
    let s1 = offset;
    let s2 = offset + i;
    let s3 = offset + i + j;
    for a in s1..s2 {
        for b in s2..s3 {
            for c in s3..offset + i + j + k {
                g.add_edge(a, b, c)?;
            }
        }
    }
    fill_recursive(g, s1, i as u64, base)?;
    fill_recursive(g, s2, j as u64, base)?;
    fill_recursive(g, s3, k as u64, base)?;
    Ok(())
}

/// All triples containing the first vertex of the range: `C(n-1,2)` edges.
fn star_triples(offset: u8, n: u64) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for b in 1..n as u8 {
        for a in 1..b {
            out.push([offset, offset + a, offset + b]);
        }
    }
    out
}

fn complete_triples(offset: u8, n: u64) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for c in 2..n as u8 {
        for b in 1..c {
            for a in 0..b {
                out.push([offset + a, offset + b, offset + c]);
            }
        }
    }
    out
}

/// Best known construction on `n <= 16` vertices: the same recursion as
/// `hn_graph`, but bottoming out at the known extremal graphs for
/// `3 <= s <= 8` (complete for `s = 4`, the star otherwise).
pub fn best_known(n: usize) -> Result<Hypergraph3, Error> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = Hypergraph3::empty(n)?;
    fill_recursive(&mut g, 0, n as u64, &mut |offset, s| match s {
        0..=2 => Some(Vec::new()),
        4 => Some(complete_triples(offset, s)),
        3 | 5..=8 => Some(star_triples(offset, s)),
        _ => None,
    })?;
    Ok(g)
}

/// Three complete 4-vertex blocks plus all 64 cross edges: 76 edges on 12
/// vertices.
pub fn modified_construction_12() -> Hypergraph3 {
    let mut g = Hypergraph3::empty(12).expect("12 within capacity");
    for block in 0..3u8 {
        let o = 4 * block;
        for t in complete_triples(o, 4) {
            g.add_edge(t[0], t[1], t[2]).unwrap();
        }
    }
    for a in 0..4u8 {
        for b in 4..8u8 {
            for c in 8..12u8 {
                g.add_edge(a, b, c).unwrap();
            }
        }
    }
    g
}

// ---------------------------------------------------------------------------
// Edge counts at any scale
// ---------------------------------------------------------------------------

/// Memoized exact edge counts of the iterated blow-up.
///
/// The memo is grown single-threaded; precompute before sharing reads.
#[derive(Default)]
pub struct EdgeCountTable {
    memo: HashMap<u64, BigUint>,
}

impl EdgeCountTable {
    pub fn new() -> EdgeCountTable {
        EdgeCountTable::default()
    }

    /// `count(n) = i*j*k + count(i) + count(j) + count(k)`, zero for `n <= 2`.
    pub fn count(&mut self, n: u64) -> BigUint {
        if n <= 2 {
            return BigUint::zero();
        }
        if let Some(v) = self.memo.get(&n) {
            return v.clone();
        }
        let (i, j, k) = split(n);
        let cross = BigUint::from(i) * BigUint::from(j) * BigUint::from(k);
        let v = cross + self.count(i) + self.count(j) + self.count(k);
        self.memo.insert(n, v.clone());
        v
    }
}

/// One-shot exact edge count of the iterated blow-up on `n` vertices.
pub fn hn_edge_count(n: u64) -> BigUint {
    EdgeCountTable::new().count(n)
}

// ---------------------------------------------------------------------------
// Certified log3 brackets
// ---------------------------------------------------------------------------

const FRAC: u32 = 60;
const DIGITS: u32 = 55;

/// Certified dyadic bracket `lo/2^60 <= log3(n) <= hi/2^60`.
///
/// Integer part from powers of three, fractional digits by the squaring
/// recurrence run twice with directed rounding (floor chain for the lower
/// bound, ceil chain for the upper). Every comparison is exact integer
/// arithmetic, so the bracket is certified; its width is about `2^-55`.
pub fn log3_bracket(n: u64) -> (u128, u128) {
    assert!(n >= 1, "log3 needs n >= 1");
    let mut a = 0u128;
    let mut p: u128 = 1;
    while p * 3 <= n as u128 {
        p *= 3;
        a += 1;
    }
    let one = 1u128 << FRAC;
    let three = 3u128 << FRAC;
    let scaled = (n as u128) << FRAC;
    let mut xl = scaled / p;
    let mut xh = scaled.div_ceil(p);
    let mut lo = a << FRAC;
    let mut hi = a << FRAC;
    for k in 1..=DIGITS {
        xl = (xl * xl) >> FRAC;
        if xl >= three {
            xl /= 3;
            lo += 1u128 << (FRAC - k);
        }
        xh = (xh * xh).div_ceil(one);
        if xh >= three {
            xh = xh.div_ceil(3);
            hi += 1u128 << (FRAC - k);
        }
    }
    // The ceil chain's undetermined tail is below one last digit.
    (lo, hi + (1u128 << (FRAC - DIGITS)))
}

// ---------------------------------------------------------------------------
// Bound sweep
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub holds: bool,
    pub n_max: u64,
    /// The `n` with the smallest certified slack.
    pub worst_n: u64,
    /// Certified lower bound on `rhs - lhs` at `worst_n`; nonnegative iff
    /// the bound held there.
    pub worst_slack: Rational,
}

/// Verifies `| count(n) - n^3/24 | <= (1/6) n log3(n) + c n` for all
/// `3 <= n <= n_max`, exactly. The left side is exact integer arithmetic;
/// `log3` is replaced by its certified lower bracket (and the upper bracket
/// must also fail before a violation is reported).
pub fn bound_check(n_max: u64, c: &Rational) -> Result<BoundCheck, Error> {
    if n_max < 3 {
        return Err(Error::Domain("bound check needs n_max >= 3".into()));
    }
    if n_max > 2_000_000 {
        return Err(Error::Domain(
            "bound check sweep supports n_max <= 2_000_000".into(),
        ));
    }
    if !c.is_positive() {
        return Err(Error::Domain(
            "the linear coefficient must be positive".into(),
        ));
    }
    let p: u128 = c
        .numer()
        .try_into()
        .map_err(|_| Error::Domain("coefficient numerator too large".into()))?;
    let q: u128 = c
        .denom()
        .try_into()
        .map_err(|_| Error::Domain("coefficient denominator too large".into()))?;

    // Bottom-up table of 24 * count(n); fits u128 comfortably at this scale.
    let len = n_max as usize + 1;
    let mut h24 = vec![0u128; len];
    for n in 3..len {
        let (i, j, k) = split(n as u64);
        h24[n] = 24 * (i as u128) * (j as u128) * (k as u128)
            + h24[i as usize]
            + h24[j as usize]
            + h24[k as usize];
    }

    // Inequality scaled by 24 * q * 2^FRAC:
    //   |24 count - n^3| * q * 2^F  <=  4 n lo q + 24 p n 2^F.
    let mut worst: Option<(u64, i128)> = None;
    let mut holds = true;
    let mut worst_n = 3;
    for n in 3..=n_max {
        let nc = n as u128;
        let lhs = h24[n as usize].abs_diff(nc * nc * nc);
        let (lo, hi) = log3_bracket(n);
        let lhs_scaled = lhs
            .checked_mul(q)
            .and_then(|v| v.checked_shl(FRAC))
            .ok_or_else(|| Error::Domain("bound comparison overflow".into()))?;
        let rhs_lo = 4 * nc * lo * q + ((24 * p * nc) << FRAC);
        let slack = rhs_lo as i128 - lhs_scaled as i128;
        if worst.is_none_or(|(_, s)| slack < s) {
            worst = Some((n, slack));
            worst_n = n;
        }
        if slack < 0 {
            // Confirm against the upper bracket before declaring violation.
            let rhs_hi = 4 * nc * hi * q + ((24 * p * nc) << FRAC);
            if (rhs_hi as i128) < lhs_scaled as i128 {
                holds = false;
            } else {
                return Err(Error::Domain(format!(
                    "log3 bracket too coarse to decide n = {n}"
                )));
            }
        }
    }
    let (_, slack) = worst.expect("sweep nonempty");
    let denom = BigInt::from(24u32) * BigInt::from(q) * (BigInt::one() << FRAC);
    Ok(BoundCheck {
        holds,
        n_max,
        worst_n,
        worst_slack: Rational::new(BigInt::from(slack), denom),
    })
}

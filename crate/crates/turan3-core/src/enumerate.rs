//! Isomorph-free generation of forbidden-subgraph-free 3-graphs on a fixed
//! vertex count, exact counting, and extremal search.
//!
//! Generation is by canonical augmentation on edge slots in colexicographic
//! order: a graph is extended only at slots past its last edge, and a child
//! is kept only if it equals its own canonical form. Since deleting the
//! highest slot of a canonical graph leaves a canonical graph (see
//! [`crate::canon`]), every isomorphism class is visited exactly once, with
//! no global seen-set.
//!
//! Freeness is checked incrementally: adding edge `e` can only create
//! forbidden copies through `e`, so the containment search is rooted there.
//!
//! Parallel runs split the augmentation tree at a fixed edge depth into
//! independent subtrees; reports merge as a commutative monoid, so the final
//! report is byte-identical for any worker count.

use crate::bitset::{BINOM3, TRIPLE_OF_SLOT};
use crate::canon::{canonical_code, is_canonical, CanonicalCode};
use crate::hypergraph::Hypergraph3;
use crate::patterns::{contains_prepared, prepare, ForbiddenChecker, HostTables, Pattern};
use crate::Error;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU32, Ordering};

/// Largest vertex count the generator accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 10;

/// Edge depth at which the augmentation tree is split into parallel units.
const SPLIT_DEPTH: u32 = 4;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: u8,
    pub forbidden: Vec<String>,
    /// Isomorphism classes visited.
    pub total: u64,
    /// Class count per edge cardinality.
    pub by_edges: BTreeMap<u32, u64>,
    pub max_edges: u32,
    /// Canonical codes of the classes attaining `max_edges`, sorted.
    pub extremal: Vec<CanonicalCode>,
}

struct Acc {
    by_edges: Vec<u64>,
    max_edges: u32,
    extremal: Vec<Hypergraph3>,
}

impl Acc {
    fn new(slots: usize) -> Acc {
        Acc {
            by_edges: vec![0; slots + 1],
            max_edges: 0,
            extremal: Vec::new(),
        }
    }

    fn visit(&mut self, g: &Hypergraph3) {
        let m = g.edge_count();
        self.by_edges[m as usize] += 1;
        if self.extremal.is_empty() || m > self.max_edges {
            self.max_edges = m;
            self.extremal.clear();
        }
        if m == self.max_edges {
            self.extremal.push(*g);
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (i, c) in other.by_edges.iter().enumerate() {
            self.by_edges[i] += c;
        }
        if !other.extremal.is_empty() {
            if self.extremal.is_empty() || other.max_edges > self.max_edges {
                self.max_edges = other.max_edges;
                self.extremal = other.extremal;
            } else if other.max_edges == self.max_edges {
                self.extremal.extend(other.extremal);
            }
        }
        self
    }
}

struct Gen<'a, F: Fn(&Hypergraph3) + Sync> {
    slot_count: u16,
    checker: ForbiddenChecker,
    visitor: &'a F,
    /// Lower bound on the maximum edge count; only used when pruning.
    best: AtomicU32,
    prune: bool,
}

impl<'a, F: Fn(&Hypergraph3) + Sync> Gen<'a, F> {
    fn visit(&self, g: &Hypergraph3, acc: &mut Acc) {
        (self.visitor)(g);
        acc.visit(g);
        if self.prune {
            self.best.fetch_max(g.edge_count(), Ordering::Relaxed);
        }
    }

    /// Extends `g` at every slot from `start` on. `tables` mirrors `g`.
    fn descend(
        &self,
        g: &Hypergraph3,
        tables: &mut HostTables,
        start: u16,
        stop_depth: u32,
        frontier: &mut Option<&mut Vec<Hypergraph3>>,
        acc: &mut Acc,
    ) {
        let depth = g.edge_count();
        if depth == stop_depth {
            if let Some(f) = frontier {
                f.push(*g);
            }
            return;
        }
        if self.prune {
            // Even taking every remaining slot cannot reach the best.
            let remaining = (self.slot_count - start) as u32;
            if depth + remaining < self.best.load(Ordering::Relaxed) {
                return;
            }
        }
        for slot in start..self.slot_count {
            let (a, b, c) = TRIPLE_OF_SLOT[slot as usize];
            tables.add_triple(a, b, c);
            if !self.checker.creates_copy(tables, a, b, c) {
                let child = g.with_slot(slot);
                if is_canonical(&child) {
                    self.visit(&child, acc);
                    self.descend(&child, tables, slot + 1, stop_depth, frontier, acc);
                }
            }
            tables.remove_triple(a, b, c);
        }
    }
}

fn run<F: Fn(&Hypergraph3) + Sync>(
    n: usize,
    forbidden: &[Pattern],
    jobs: usize,
    prune: bool,
    visitor: F,
) -> Result<(EnumerationReport, Vec<Hypergraph3>), Error> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Domain(format!(
            "enumeration supports up to {MAX_ENUMERATION_VERTICES} vertices, asked for {n}"
        )));
    }
    let root = Hypergraph3::empty(n)?;
    let slot_count = BINOM3[n];
    let gen = Gen {
        slot_count,
        checker: ForbiddenChecker::new(forbidden),
        visitor: &visitor,
        best: AtomicU32::new(0),
        prune,
    };

    let mut acc = Acc::new(slot_count as usize);
    gen.visit(&root, &mut acc);

    let jobs = jobs.max(1);
    if jobs == 1 {
        let mut tables = HostTables::new(&root);
        gen.descend(&root, &mut tables, 0, u32::MAX, &mut None, &mut acc);
    } else {
        // Stage one: everything with fewer than SPLIT_DEPTH edges, plus the
        // frontier of subtree roots at exactly SPLIT_DEPTH edges. Frontier
        // graphs are already visited here; stage two only adds descendants.
        let mut frontier = Vec::new();
        let mut tables = HostTables::new(&root);
        gen.descend(
            &root,
            &mut tables,
            0,
            SPLIT_DEPTH,
            &mut Some(&mut frontier),
            &mut acc,
        );
        // Stage two: independent subtrees, merged in frontier order.
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
        let accs: Vec<Acc> = pool.install(|| {
            use rayon::prelude::*;
            frontier
                .par_iter()
                .map(|g| {
                    let mut acc = Acc::new(slot_count as usize);
                    let mut tables = HostTables::new(g);
                    let last = g.edge_set().max_slot().expect("frontier graph has edges");
                    gen.descend(g, &mut tables, last + 1, u32::MAX, &mut None, &mut acc);
                    acc
                })
                .collect()
        });
        acc = accs.into_iter().fold(acc, Acc::merge);
    }

    let mut by_edges = BTreeMap::new();
    let mut total = 0u64;
    for (m, &count) in acc.by_edges.iter().enumerate() {
        if count > 0 {
            by_edges.insert(m as u32, count);
            total += count;
        }
    }
    let mut extremal_graphs = acc.extremal;
    extremal_graphs.sort_unstable();
    extremal_graphs.dedup();
    let mut extremal: Vec<CanonicalCode> = extremal_graphs.iter().map(canonical_code).collect();
    extremal.sort_unstable();
    let report = EnumerationReport {
        n: n as u8,
        forbidden: forbidden.iter().map(|p| p.name.clone()).collect(),
        total,
        by_edges,
        max_edges: acc.max_edges,
        extremal,
    };
    Ok((report, extremal_graphs))
}

/// Visits exactly one representative per isomorphism class of
/// `forbidden`-free 3-graphs on `n` vertices. The representatives are the
/// canonical forms. The report is identical for every worker count; the
/// visitor call order is only deterministic for `jobs = 1`.
pub fn enumerate_free_with<F: Fn(&Hypergraph3) + Sync>(
    n: usize,
    forbidden: &[Pattern],
    jobs: usize,
    visitor: F,
) -> Result<EnumerationReport, Error> {
    run(n, forbidden, jobs, false, visitor).map(|(r, _)| r)
}

pub fn enumerate_free(
    n: usize,
    forbidden: &[Pattern],
    jobs: usize,
) -> Result<EnumerationReport, Error> {
    enumerate_free_with(n, forbidden, jobs, |_| {})
}

/// Exact maximum edge count over `forbidden`-free graphs on `n` vertices and
/// all classes attaining it, via the augmentation tree with an
/// unreachable-best prune.
pub fn extremal(
    n: usize,
    forbidden: &[Pattern],
    jobs: usize,
) -> Result<(u32, Vec<Hypergraph3>), Error> {
    let (report, graphs) = run(n, forbidden, jobs, true, |_| {})?;
    Ok((report.max_edges, graphs))
}

/// Brute-force count of labeled `forbidden`-free graphs on `n <= 6`
/// vertices, by filtering all `2^C(n,3)` edge sets with the generic
/// containment search. Test oracle; deliberately independent of the
/// augmentation path.
pub fn count_labeled_free(n: usize, forbidden: &[Pattern]) -> Result<u64, Error> {
    if n > 6 {
        return Err(Error::Domain(format!(
            "labeled brute force supports up to 6 vertices, asked for {n}"
        )));
    }
    let slots = BINOM3[n];
    let prepared: Vec<_> = forbidden.iter().map(|p| prepare(&p.graph)).collect();
    let mut count = 0u64;
    for mask in 0u32..1 << slots {
        let mut g = Hypergraph3::empty(n)?;
        for slot in 0..slots {
            if mask >> slot & 1 != 0 {
                let (a, b, c) = TRIPLE_OF_SLOT[slot as usize];
                g.add_edge(a, b, c)?;
            }
        }
        if prepared.iter().all(|p| !contains_prepared(&g, p)) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_graphs_on_tiny_vertex_counts() {
        // One triple: either present or absent, 2 classes.
        let r = enumerate_free(3, &[], 1).unwrap();
        assert_eq!(r.total, 2);
        // On 4 vertices each triple is the complement of a vertex, so edge
        // sets up to isomorphism are vertex subsets up to size: 5 classes.
        let r4 = enumerate_free(4, &[], 1).unwrap();
        assert_eq!(r4.total, 5);
        // On 5 vertices triples complement pairs, so classes correspond to
        // the 34 graphs on 5 vertices.
        let r5 = enumerate_free(5, &[], 1).unwrap();
        assert_eq!(r5.total, 34);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(count_labeled_free(3, &[]).unwrap(), 2);
        assert_eq!(count_labeled_free(4, &[]).unwrap(), 16);
        let k4 = Pattern::k4();
        assert_eq!(count_labeled_free(4, &[k4]).unwrap(), 15);
        let k4m = Pattern::k4_minus();
        // No two triples of a 4-set may share two vertices unless all three
        // are present: count by direct reasoning is awkward, pin the filter
        // result instead (16 subsets of 4 triples, K4- appears iff >= 3
        // triples or ... ), so just check consistency with the definition.
        let c = count_labeled_free(4, std::slice::from_ref(&k4m)).unwrap();
        let mut expect = 0;
        for mask in 0u32..16 {
            // A labeled K4- on 4 vertices is any 3 of the 4 triples.
            if (0..4).all(|drop| {
                let three = 0b1111u32 & !(1 << drop);
                mask & three != three
            }) {
                expect += 1;
            }
        }
        assert_eq!(c, expect);
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        use std::sync::Mutex;
        let seen = Mutex::new(Vec::new());
        let r = enumerate_free_with(5, &[Pattern::k4()], 1, |g| {
            assert!(is_canonical(g));
            seen.lock().unwrap().push(*g);
        })
        .unwrap();
        let mut graphs = seen.into_inner().unwrap();
        let len = graphs.len();
        graphs.sort_unstable();
        graphs.dedup();
        assert_eq!(graphs.len(), len);
        assert_eq!(r.total as usize, len);
        assert_eq!(r.total, r.by_edges.values().sum::<u64>());
    }

    #[test]
    fn report_is_identical_across_worker_counts() {
        let f = [Pattern::tight_cycle_minus(5).unwrap()];
        let a = enumerate_free(6, &f, 1).unwrap();
        let b = enumerate_free(6, &f, 4).unwrap();
        assert_eq!(a, b);
        let sa = serde_json::to_string(&a).unwrap();
        let sb = serde_json::to_string(&b).unwrap();
        assert_eq!(sa, sb);
    }

    #[test]
    fn extremal_small_cases() {
        let c5m = [Pattern::tight_cycle_minus(5).unwrap()];
        let (m4, g4) = extremal(4, &c5m, 1).unwrap();
        assert_eq!(m4, 4);
        assert_eq!(g4.len(), 1);
        assert_eq!(g4[0].edge_count(), 4); // the complete graph
        let (m5, _) = extremal(5, &c5m, 1).unwrap();
        assert_eq!(m5, 6);
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(enumerate_free(11, &[], 1).is_err());
        assert!(count_labeled_free(7, &[]).is_err());
    }
}

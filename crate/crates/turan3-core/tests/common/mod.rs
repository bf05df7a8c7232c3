//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately independent of the library's canonical labeling and pruned
//! containment search: plain permutation action on edge bitmasks and plain
//! injection loops.
//!
//! Each integration target picks the helpers it needs.
#![allow(dead_code)]

use turan3_core::bitset::{triple_rank, BINOM3, TRIPLE_OF_SLOT};
use turan3_core::Hypergraph3;

/// All permutations of `0..n`, Heap's algorithm.
pub fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut items: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    fn heap(k: usize, items: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// Applies a vertex permutation to a labeled edge bitmask on `n <= 6`.
pub fn apply_perm(mask: u32, perm: &[u8], n: usize) -> u32 {
    let mut out = 0u32;
    for slot in 0..BINOM3[n] {
        if mask >> slot & 1 != 0 {
            let (a, b, c) = TRIPLE_OF_SLOT[slot as usize];
            let mut t = [perm[a as usize], perm[b as usize], perm[c as usize]];
            t.sort_unstable();
            out |= 1 << triple_rank(t[0], t[1], t[2]);
        }
    }
    out
}

pub fn mask_to_graph(mask: u32, n: usize) -> Hypergraph3 {
    let mut g = Hypergraph3::empty(n).unwrap();
    for slot in 0..BINOM3[n] {
        if mask >> slot & 1 != 0 {
            let (a, b, c) = TRIPLE_OF_SLOT[slot as usize];
            g.add_edge(a, b, c).unwrap();
        }
    }
    g
}

/// Orbit count of the labeled masks that pass `keep`, via the explicit
/// symmetric group action: each orbit is represented by its minimum mask.
pub fn orbit_count<F: Fn(u32) -> bool>(n: usize, keep: F) -> u64 {
    let perms = all_perms(n);
    let slots = BINOM3[n];
    let mut reps = std::collections::HashSet::new();
    for mask in 0u32..1 << slots {
        if !keep(mask) {
            continue;
        }
        let rep = perms.iter().map(|p| apply_perm(mask, p, n)).min().unwrap();
        reps.insert(rep);
    }
    reps.len() as u64
}

/// Containment by exhaustive injection enumeration, no pruning at all.
pub fn contains_bruteforce(g: &Hypergraph3, h: &Hypergraph3) -> bool {
    let n = g.vertex_count() as usize;
    let k = h.vertex_count() as usize;
    if k > n {
        return false;
    }
    let mut image = vec![0u8; k];
    fn rec(g: &Hypergraph3, h: &Hypergraph3, pos: usize, used: u16, image: &mut Vec<u8>) -> bool {
        if pos == image.len() {
            return h.edges().all(|(a, b, c)| {
                g.has_edge(image[a as usize], image[b as usize], image[c as usize])
            });
        }
        for w in 0..g.vertex_count() {
            if used >> w & 1 == 0 {
                image[pos] = w;
                if rec(g, h, pos + 1, used | 1 << w, image) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, h, 0, 0, &mut image)
}

/// Order of the automorphism group by counting stabilizing permutations.
pub fn automorphism_count(g: &Hypergraph3) -> u64 {
    let n = g.vertex_count() as usize;
    all_perms(n).iter().filter(|p| &g.relabel(p) == g).count() as u64
}

//! The 3-uniform hypergraph value type and the 2-graph links live here.

use crate::bitset::{pair_rank, triple_rank, TripleSet, BINOM3, MAX_VERTICES, TRIPLE_OF_SLOT};
use crate::Error;

/// A 3-uniform hypergraph on at most 16 labeled vertices `0..n`.
///
/// Edges are unordered triples of distinct vertices, stored as a fixed-width
/// bitset over the colexicographic triple universe. Plain value semantics:
/// two graphs are equal iff they have the same `n` and the same edge set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph3 {
    n: u8,
    edges: TripleSet,
}

impl Hypergraph3 {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Hypergraph3, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Hypergraph3 {
            n: n as u8,
            edges: TripleSet::EMPTY,
        })
    }

    /// Builds a graph from an explicit edge list. Triples may be given in any
    /// vertex order; duplicates collapse (set semantics).
    pub fn new(n: usize, triples: &[[u8; 3]]) -> Result<Hypergraph3, Error> {
        let mut g = Hypergraph3::empty(n)?;
        for &t in triples {
            g.add_edge(t[0], t[1], t[2])?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: u8, b: u8, c: u8) -> Result<(), Error> {
        let mut t = [a, b, c];
        t.sort_unstable();
        if t[0] == t[1] || t[1] == t[2] {
            return Err(Error::RepeatedVertex(a, b, c));
        }
        if t[2] >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: t[2],
                n: self.n,
            });
        }
        self.edges.insert(triple_rank(t[0], t[1], t[2]));
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> u8 {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> u32 {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, a: u8, b: u8, c: u8) -> bool {
        let mut t = [a, b, c];
        t.sort_unstable();
        t[0] != t[1] && t[1] != t[2] && self.edges.contains(triple_rank(t[0], t[1], t[2]))
    }

    #[inline]
    pub fn has_slot(&self, slot: u16) -> bool {
        self.edges.contains(slot)
    }

    /// Number of triple slots valid for this vertex count, `C(n,3)`.
    #[inline]
    pub fn slot_count(&self) -> u16 {
        BINOM3[self.n as usize]
    }

    #[inline]
    pub fn edge_set(&self) -> &TripleSet {
        &self.edges
    }

    /// Edges as sorted triples, in slot order.
    pub fn edges(&self) -> impl Iterator<Item = (u8, u8, u8)> + '_ {
        self.edges.iter().map(|s| TRIPLE_OF_SLOT[s as usize])
    }

    /// Copy with one extra edge slot set; no validity checks beyond debug.
    #[inline]
    pub(crate) fn with_slot(&self, slot: u16) -> Hypergraph3 {
        debug_assert!(slot < self.slot_count());
        let mut g = *self;
        g.edges.insert(slot);
        g
    }

    /// Degree of `v`: number of edges containing it.
    pub fn degree(&self, v: u8) -> u32 {
        self.edges()
            .filter(|&(a, b, c)| a == v || b == v || c == v)
            .count() as u32
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n as usize];
        for (a, b, c) in self.edges() {
            d[a as usize] += 1;
            d[b as usize] += 1;
            d[c as usize] += 1;
        }
        d
    }

    /// Number of edges containing both `a` and `b`.
    pub fn codegree(&self, a: u8, b: u8) -> u32 {
        self.edges()
            .filter(|&(x, y, z)| (x == a || y == a || z == a) && (x == b || y == b || z == b))
            .count() as u32
    }

    /// The link of `v`: pairs `{a, b}` with `{v, a, b}` an edge. The result
    /// keeps all `n` vertices, with `v` isolated in it.
    pub fn link(&self, v: u8) -> Result<Graph2, Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut link = Graph2::empty(self.n as usize)?;
        for (a, b, c) in self.edges() {
            if a == v {
                link.add_edge(b, c)?;
            } else if b == v {
                link.add_edge(a, c)?;
            } else if c == v {
                link.add_edge(a, b)?;
            }
        }
        Ok(link)
    }

    /// Adds a new vertex `w = n` whose link is a copy of the link of `v`.
    /// No edge contains both `v` and `w`.
    pub fn duplicate_vertex(&self, v: u8) -> Result<Hypergraph3, Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if self.n as usize + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n as usize + 1));
        }
        let w = self.n;
        let mut g = Hypergraph3 {
            n: self.n + 1,
            edges: self.edges,
        };
        for (a, b, c) in self.edges() {
            if a == v {
                g.add_edge(b, c, w)?;
            } else if b == v {
                g.add_edge(a, c, w)?;
            } else if c == v {
                g.add_edge(a, b, w)?;
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `subset`, relabeled to `0..subset.len()` in
    /// increasing vertex order. Vertices outside range are an error.
    pub fn induced(&self, subset: &[u8]) -> Result<Hypergraph3, Error> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut relabel = [u8::MAX; MAX_VERTICES];
        for (new, &old) in sorted.iter().enumerate() {
            relabel[old as usize] = new as u8;
        }
        let mut g = Hypergraph3::empty(sorted.len())?;
        for (a, b, c) in self.edges() {
            let (ra, rb, rc) = (
                relabel[a as usize],
                relabel[b as usize],
                relabel[c as usize],
            );
            if ra != u8::MAX && rb != u8::MAX && rc != u8::MAX {
                g.add_edge(ra, rb, rc)?;
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the vertices set in `mask` (bit `v` = vertex `v`).
    pub fn induced_mask(&self, mask: u16) -> Result<Hypergraph3, Error> {
        let subset: Vec<u8> = (0..self.n).filter(|&v| mask >> v & 1 != 0).collect();
        self.induced(&subset)
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[u8]) -> Hypergraph3 {
        debug_assert_eq!(perm.len(), self.n as usize);
        let mut g = Hypergraph3 {
            n: self.n,
            edges: TripleSet::EMPTY,
        };
        for (a, b, c) in self.edges() {
            let mut t = [perm[a as usize], perm[b as usize], perm[c as usize]];
            t.sort_unstable();
            g.edges.insert(triple_rank(t[0], t[1], t[2]));
        }
        g
    }

    /// True iff the vertices admit a 3-coloring under which every edge gets
    /// three distinct colors. Exhaustive search with first-use color symmetry
    /// pruning.
    pub fn is_3partite(&self) -> bool {
        // Edges grouped by their maximum vertex, so each new assignment only
        // checks the edges it completes.
        let mut by_max: Vec<Vec<(u8, u8)>> = vec![Vec::new(); self.n as usize];
        for (a, b, c) in self.edges() {
            by_max[c as usize].push((a, b));
        }
        let mut colors = [0u8; MAX_VERTICES];
        self.color_search(0, 0, &mut colors, &by_max)
    }

    fn color_search(
        &self,
        v: u8,
        used_colors: u8,
        colors: &mut [u8; MAX_VERTICES],
        by_max: &[Vec<(u8, u8)>],
    ) -> bool {
        if v == self.n {
            return true;
        }
        // Allowing only one fresh color per step kills the 3! relabelings.
        let limit = (used_colors + 1).min(3);
        for color in 0..limit {
            colors[v as usize] = color;
            let ok = by_max[v as usize].iter().all(|&(a, b)| {
                let (ca, cb) = (colors[a as usize], colors[b as usize]);
                ca != cb && ca != color && cb != color
            });
            if ok && self.color_search(v + 1, used_colors.max(color + 1), colors, by_max) {
                return true;
            }
        }
        false
    }
}

impl std::fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph3(n={}, edges=[", self.n)?;
        for (i, (a, b, c)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}{b}{c}")?;
        }
        write!(f, "])")
    }
}

/// A 2-graph on at most 16 vertices; adjacency rows as bitmasks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph2 {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl Graph2 {
    pub fn empty(n: usize) -> Result<Graph2, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph2 {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn add_edge(&mut self, a: u8, b: u8) -> Result<(), Error> {
        if a == b {
            return Err(Error::RepeatedVertex(a, b, b));
        }
        let hi = a.max(b);
        if hi >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: hi,
                n: self.n,
            });
        }
        self.adj[a as usize] |= 1 << b;
        self.adj[b as usize] |= 1 << a;
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> u8 {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, a: u8, b: u8) -> bool {
        a != b && self.adj[a as usize] >> b & 1 != 0
    }

    pub fn edge_count(&self) -> u32 {
        self.adj.iter().map(|r| r.count_ones()).sum::<u32>() / 2
    }

    /// Edges as pairs `(a, b)` with `a < b`, ordered by colex pair rank.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for b in 1..self.n {
            for a in 0..b {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out.sort_by_key(|&(a, b)| pair_rank(a, b));
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        for b in 1..self.n {
            for a in 0..b {
                if self.has_edge(a, b) && self.adj[a as usize] & self.adj[b as usize] != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph2(n={}, edges={:?})", self.n, self.edges())
    }
}

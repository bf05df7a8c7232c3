//! Canonical forms under isomorphism.
//!
//! The canonical labeling of a graph is the relabeling whose edge bitstring,
//! read from slot 0, is lexicographically greatest; equivalently, the sorted
//! list of occupied edge slots is lexicographically least. Two graphs on the
//! same vertex count are isomorphic iff their canonical bitsets are equal.
//!
//! This order has the property the edge-augmentation generator in
//! [`crate::enumerate`] needs: deleting the highest occupied slot of a
//! canonical graph leaves a canonical graph.
//!
//! The search places vertices one position at a time. Position `p` fixes the
//! `C(p,2)` slots whose triples have maximum element `p` (a "block"), so
//! branches compare block by block and prune as soon as a block falls below
//! the best known. Vertices interchangeable by a transposition automorphism
//! ("twins") are deduplicated per node when a tie budget is exceeded, which
//! keeps highly symmetric graphs (blow-ups, near-empty graphs) cheap.

use crate::bitset::{
    pair_rank, triple_rank, TripleSet, BINOM2, BINOM3, MAX_VERTICES, TRIPLE_OF_SLOT,
};
use crate::hypergraph::Hypergraph3;
use crate::Error;

/// Node evaluations before twin deduplication is switched on.
const TIE_BUDGET: u64 = 20_000;

/// Opaque isomorphism-class identifier: vertex count plus canonical edge
/// bitset, displayed as `h3:<n>:<hex>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: TripleSet,
}

impl CanonicalCode {
    pub fn vertex_count(&self) -> u8 {
        self.n
    }

    /// The canonical representative graph this code denotes.
    pub fn graph(&self) -> Hypergraph3 {
        let mut g = Hypergraph3::empty(self.n as usize).expect("code within capacity");
        for slot in self.bits.iter() {
            let (a, b, c) = TRIPLE_OF_SLOT[slot as usize];
            g.add_edge(a, b, c).expect("code slot in range");
        }
        g
    }

    /// Hex of the canonical edge bitset over `ceil(C(n,3)/4)` nibbles, most
    /// significant nibble first.
    fn hex(&self) -> String {
        let slots = BINOM3[self.n as usize] as usize;
        let nibbles = slots.div_ceil(4);
        let words = self.bits.words();
        let mut out = String::with_capacity(nibbles);
        for j in (0..nibbles).rev() {
            let bit = 4 * j;
            let nib = (words[bit / 64] >> (bit % 64)) & 0xf;
            out.push(char::from_digit(nib as u32, 16).unwrap());
        }
        out
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "h3:{}:{}", self.n, self.hex())
    }
}

impl serde::Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<CanonicalCode, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<CanonicalCode, Error> {
        let body = s
            .strip_prefix("h3:")
            .ok_or_else(|| Error::Domain(format!("canonical code must start with h3: ({s:?})")))?;
        let (n_str, hex) = body
            .split_once(':')
            .ok_or_else(|| Error::Domain(format!("canonical code missing second colon ({s:?})")))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Domain(format!("bad vertex count in code ({s:?})")))?;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let slots = BINOM3[n] as usize;
        if hex.len() != slots.div_ceil(4) {
            return Err(Error::Domain(format!(
                "code for n={n} needs {} hex digits, got {}",
                slots.div_ceil(4),
                hex.len()
            )));
        }
        let mut bits = TripleSet::EMPTY;
        for (j, ch) in hex.chars().rev().enumerate() {
            let nib = ch
                .to_digit(16)
                .ok_or_else(|| Error::Domain(format!("bad hex digit {ch:?} in code")))?;
            for i in 0..4 {
                if nib >> i & 1 != 0 {
                    let slot = 4 * j + i;
                    if slot >= slots {
                        return Err(Error::Domain(format!(
                            "code has slot {slot} out of range for n={n}"
                        )));
                    }
                    bits.insert(slot as u16);
                }
            }
        }
        Ok(CanonicalCode { n: n as u8, bits })
    }
}

/// Canonical code of `g` (computes the canonical form first).
pub fn canonical_code(g: &Hypergraph3) -> CanonicalCode {
    let form = canonical_form(g);
    CanonicalCode {
        n: form.vertex_count(),
        bits: *form.edge_set(),
    }
}

/// The canonical relabeling of `g`.
pub fn canonical_form(g: &Hypergraph3) -> Hypergraph3 {
    if g.edge_count() == 0 {
        return *g;
    }
    let mut search = Search::new(g);
    search.run_form();
    let perm = search
        .best_perm
        .expect("nonempty graph has a best labeling");
    // perm lists preimages: position p is vertex perm[p]; relabel wants old->new.
    let mut relabel = [0u8; MAX_VERTICES];
    for (new, &old) in perm.iter().enumerate().take(g.vertex_count() as usize) {
        relabel[old as usize] = new as u8;
    }
    g.relabel(&relabel[..g.vertex_count() as usize])
}

/// True iff `g` equals its canonical form.
pub fn is_canonical(g: &Hypergraph3) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    // A canonical graph with any edge has the edge {0,1,2}.
    if g.vertex_count() < 3 || !g.has_slot(0) {
        return false;
    }
    let mut search = Search::new(g);
    search.run_test()
}

fn pack_shift(npairs: u16, q: u16) -> u32 {
    (npairs - 1 - q) as u32
}

struct Search<'a> {
    g: &'a Hypergraph3,
    n: usize,
    /// Third-vertex masks per pair slot: bit `w` set iff `{a,b,w}` is an edge.
    pair_third: [u16; 120],
    /// Active pair masks in block order for the current prefix.
    pair_masks: Vec<u16>,
    chosen: [u8; MAX_VERTICES],
    depth: usize,
    used: u16,
    /// Blocks of the current path.
    cur: [u128; MAX_VERTICES],
    /// Test mode: the graph's own blocks. Form mode: best blocks found.
    target: [u128; MAX_VERTICES],
    best_perm: Option<[u8; MAX_VERTICES]>,
    best_gen: u64,
    nodes: u64,
    twins: Option<[u8; MAX_VERTICES]>,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Hypergraph3) -> Search<'a> {
        let mut pair_third = [0u16; 120];
        for (a, b, c) in g.edges() {
            pair_third[pair_rank(a, b) as usize] |= 1 << c;
            pair_third[pair_rank(a, c) as usize] |= 1 << b;
            pair_third[pair_rank(b, c) as usize] |= 1 << a;
        }
        Search {
            g,
            n: g.vertex_count() as usize,
            pair_third,
            pair_masks: Vec::with_capacity(120),
            chosen: [0; MAX_VERTICES],
            depth: 0,
            used: 0,
            cur: [0; MAX_VERTICES],
            target: [0; MAX_VERTICES],
            best_perm: None,
            best_gen: 0,
            nodes: 0,
            twins: None,
            aborted: false,
        }
    }

    fn own_blocks(&self) -> [u128; MAX_VERTICES] {
        let mut blocks = [0u128; MAX_VERTICES];
        for p in 2..self.n {
            let npairs = BINOM2[p];
            let base = BINOM3[p];
            let mut bl = 0u128;
            for q in 0..npairs {
                if self.g.has_slot(base + q) {
                    bl |= 1 << pack_shift(npairs, q);
                }
            }
            blocks[p] = bl;
        }
        blocks
    }

    fn compute_twins(&self) -> [u8; MAX_VERTICES] {
        let mut class = [0u8; MAX_VERTICES];
        for (v, slot) in class.iter_mut().enumerate().take(self.n) {
            *slot = v as u8;
        }
        for w in 1..self.n as u8 {
            for u in 0..w {
                if class[u as usize] == u && self.swap_is_automorphism(u, w) {
                    class[w as usize] = u;
                    break;
                }
            }
        }
        class
    }

    fn swap_is_automorphism(&self, u: u8, w: u8) -> bool {
        let map = |v: u8| {
            if v == u {
                w
            } else if v == w {
                u
            } else {
                v
            }
        };
        self.g.edges().all(|(a, b, c)| {
            let mut t = [map(a), map(b), map(c)];
            t.sort_unstable();
            self.g.has_slot(triple_rank(t[0], t[1], t[2]))
        })
    }

    fn push(&mut self, w: u8) {
        let p = self.depth;
        for i in 0..p {
            let a = self.chosen[i].min(w);
            let b = self.chosen[i].max(w);
            self.pair_masks
                .push(self.pair_third[pair_rank(a, b) as usize]);
        }
        self.chosen[p] = w;
        self.depth += 1;
        self.used |= 1 << w;
    }

    fn pop(&mut self) {
        self.depth -= 1;
        self.used &= !(1 << self.chosen[self.depth]);
        self.pair_masks.truncate(self.pair_masks.len() - self.depth);
    }

    /// Block value a candidate `w` would contribute at position `p`.
    #[inline]
    fn block_of(&self, p: usize, w: u8) -> u128 {
        let npairs = BINOM2[p];
        let mut bl = 0u128;
        for (q, &mask) in self.pair_masks.iter().enumerate() {
            bl |= (((mask >> w) & 1) as u128) << pack_shift(npairs, q as u16);
        }
        bl
    }

    fn seeds(&self) -> Vec<[u8; 3]> {
        let mut out = Vec::new();
        for (a, b, c) in self.g.edges() {
            for perm in [
                [a, b, c],
                [a, c, b],
                [b, a, c],
                [b, c, a],
                [c, a, b],
                [c, b, a],
            ] {
                out.push(perm);
            }
        }
        out
    }

    fn seed_dedup(&self, seeds: &[[u8; 3]]) -> Vec<[u8; 3]> {
        match &self.twins {
            None => seeds.to_vec(),
            Some(class) => {
                let mut seen = Vec::new();
                let mut out = Vec::new();
                for s in seeds {
                    let key = [
                        class[s[0] as usize],
                        class[s[1] as usize],
                        class[s[2] as usize],
                    ];
                    if !seen.contains(&key) {
                        seen.push(key);
                        out.push(*s);
                    }
                }
                out
            }
        }
    }

    // ---- test mode -------------------------------------------------------

    fn run_test(&mut self) -> bool {
        self.target = self.own_blocks();
        loop {
            self.aborted = false;
            self.nodes = 0;
            let seeds = self.seed_dedup(&self.seeds());
            let mut canonical = true;
            'outer: for seed in seeds {
                self.pair_masks.clear();
                self.depth = 0;
                self.used = 0;
                for &v in &seed {
                    self.push(v);
                }
                match self.dfs_test(3) {
                    TestOutcome::Better => {
                        canonical = false;
                        break 'outer;
                    }
                    TestOutcome::Aborted => {
                        break 'outer;
                    }
                    TestOutcome::Exhausted => {}
                }
            }
            if self.aborted {
                self.twins = Some(self.compute_twins());
                continue;
            }
            return canonical;
        }
    }

    fn dfs_test(&mut self, p: usize) -> TestOutcome {
        if p == self.n {
            return TestOutcome::Exhausted;
        }
        self.nodes += 1;
        if self.twins.is_none() && self.nodes > TIE_BUDGET {
            self.aborted = true;
            return TestOutcome::Aborted;
        }
        let mut seen_classes: u16 = 0;
        for w in 0..self.n as u8 {
            if self.used >> w & 1 != 0 {
                continue;
            }
            if let Some(class) = &self.twins {
                let c = class[w as usize];
                if seen_classes >> c & 1 != 0 {
                    continue;
                }
                seen_classes |= 1 << c;
            }
            let bl = self.block_of(p, w);
            match bl.cmp(&self.target[p]) {
                std::cmp::Ordering::Greater => return TestOutcome::Better,
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {
                    self.push(w);
                    let out = self.dfs_test(p + 1);
                    self.pop();
                    if !matches!(out, TestOutcome::Exhausted) {
                        return out;
                    }
                }
            }
        }
        TestOutcome::Exhausted
    }

    // ---- form mode -------------------------------------------------------

    fn run_form(&mut self) {
        loop {
            self.aborted = false;
            self.nodes = 0;
            self.best_perm = None;
            self.best_gen = 0;
            let seeds = self.seed_dedup(&self.seeds());
            for seed in seeds {
                self.pair_masks.clear();
                self.depth = 0;
                self.used = 0;
                for &v in &seed {
                    self.push(v);
                }
                self.cur[2] = 1;
                let mode = if self.best_perm.is_none() {
                    Mode::Seek
                } else {
                    Mode::Tight
                };
                self.dfs_form(3, mode);
                if self.aborted {
                    break;
                }
            }
            if self.aborted {
                self.twins = Some(self.compute_twins());
                continue;
            }
            return;
        }
    }

    fn dfs_form(&mut self, p: usize, mode: Mode) {
        if p == self.n {
            if matches!(mode, Mode::Seek) {
                self.target = self.cur;
                let mut perm = [0u8; MAX_VERTICES];
                perm[..self.n].copy_from_slice(&self.chosen[..self.n]);
                self.best_perm = Some(perm);
                self.best_gen += 1;
            }
            return;
        }
        self.nodes += 1;
        if self.twins.is_none() && self.nodes > TIE_BUDGET {
            self.aborted = true;
            return;
        }
        let mut mode = mode;
        let mut cands: Vec<(u128, u8)> = Vec::with_capacity(self.n - p);
        let mut seen_classes: u16 = 0;
        for w in 0..self.n as u8 {
            if self.used >> w & 1 != 0 {
                continue;
            }
            if let Some(class) = &self.twins {
                let c = class[w as usize];
                if seen_classes >> c & 1 != 0 {
                    continue;
                }
                seen_classes |= 1 << c;
            }
            cands.push((self.block_of(p, w), w));
        }
        cands.sort_unstable_by(|a, b| b.cmp(a));
        for (bl, w) in cands {
            let child_mode = match mode {
                Mode::Seek => Mode::Seek,
                Mode::Tight => match bl.cmp(&self.target[p]) {
                    std::cmp::Ordering::Less => break,
                    std::cmp::Ordering::Equal => Mode::Tight,
                    std::cmp::Ordering::Greater => Mode::Seek,
                },
            };
            let gen_before = self.best_gen;
            self.cur[p] = bl;
            self.push(w);
            self.dfs_form(p + 1, child_mode);
            self.pop();
            if self.aborted {
                return;
            }
            if self.best_gen != gen_before {
                // The new best extends the current prefix, so remaining
                // siblings compare tightly against it.
                mode = Mode::Tight;
            }
        }
    }
}

#[derive(Clone, Copy)]
enum Mode {
    /// No best yet, or the prefix already strictly beats the best.
    Seek,
    /// Prefix blocks equal the best's prefix blocks.
    Tight,
}

enum TestOutcome {
    Exhausted,
    Better,
    Aborted,
}

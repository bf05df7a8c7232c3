//! Fixed-width bitsets over the colexicographic triple and pair universes
//! on at most [`MAX_VERTICES`] vertices.
//!
//! A triple `{a, b, c}` with `a < b < c` is stored at slot
//! `C(c,3) + C(b,2) + a`. Under this ordering the first `C(m,3)` slots are
//! exactly the triples inside `{0, .., m-1}`, which is what the
//! vertex-by-vertex canonical labeling search and the edge-slot augmentation
//! order both rely on.

/// Hard vertex capacity. `C(16,3) = 560` triple slots fit in nine words.
pub const MAX_VERTICES: usize = 16;

/// Number of triple slots at full capacity.
pub const MAX_TRIPLES: usize = 560;

const WORDS: usize = 9;

/// `BINOM2[v] = C(v,2)` for `v <= 16`.
pub const BINOM2: [u16; 17] = [
    0, 0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120,
];

/// `BINOM3[v] = C(v,3)` for `v <= 16`.
pub const BINOM3: [u16; 17] = [
    0, 0, 0, 1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364, 455, 560,
];

/// Slot index of the triple `{a, b, c}`; requires `a < b < c`.
#[inline]
pub fn triple_rank(a: u8, b: u8, c: u8) -> u16 {
    debug_assert!(a < b && b < c && (c as usize) < MAX_VERTICES);
    BINOM3[c as usize] + BINOM2[b as usize] + a as u16
}

/// Slot index of the pair `{a, b}`; requires `a < b`.
#[inline]
pub fn pair_rank(a: u8, b: u8) -> u16 {
    debug_assert!(a < b && (b as usize) < MAX_VERTICES);
    BINOM2[b as usize] + a as u16
}

const fn build_unrank() -> [(u8, u8, u8); MAX_TRIPLES] {
    let mut table = [(0u8, 0u8, 0u8); MAX_TRIPLES];
    let mut c = 2usize;
    while c < MAX_VERTICES {
        let mut b = 1usize;
        while b < c {
            let mut a = 0usize;
            while a < b {
                let rank = BINOM3[c] as usize + BINOM2[b] as usize + a;
                table[rank] = (a as u8, b as u8, c as u8);
                a += 1;
            }
            b += 1;
        }
        c += 1;
    }
    table
}

/// `TRIPLE_OF_SLOT[rank] = (a, b, c)` with `a < b < c`.
pub static TRIPLE_OF_SLOT: [(u8, u8, u8); MAX_TRIPLES] = build_unrank();

/// Set of triple slots, fixed at 576 bits. Value type; ordering and hashing
/// follow the raw words so it can key maps directly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TripleSet {
    words: [u64; WORDS],
}

impl TripleSet {
    pub const EMPTY: TripleSet = TripleSet { words: [0; WORDS] };

    #[inline]
    pub fn contains(&self, slot: u16) -> bool {
        self.words[(slot >> 6) as usize] >> (slot & 63) & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, slot: u16) {
        self.words[(slot >> 6) as usize] |= 1u64 << (slot & 63);
    }

    #[inline]
    pub fn remove(&mut self, slot: u16) {
        self.words[(slot >> 6) as usize] &= !(1u64 << (slot & 63));
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &TripleSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Largest occupied slot, or `None` when empty.
    pub fn max_slot(&self) -> Option<u16> {
        for w in (0..WORDS).rev() {
            if self.words[w] != 0 {
                return Some((w as u16) << 6 | (63 - self.words[w].leading_zeros() as u16));
            }
        }
        None
    }

    /// Iterates occupied slots in increasing order.
    pub fn iter(&self) -> SlotIter {
        SlotIter {
            words: self.words,
            word: 0,
        }
    }

    /// Raw words, least significant first.
    pub fn words(&self) -> &[u64; WORDS] {
        &self.words
    }
}

impl std::fmt::Debug for TripleSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

pub struct SlotIter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for SlotIter {
    type Item = u16;

    fn next(&mut self) -> Option<u16> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as u16;
                self.words[self.word] &= w - 1;
                return Some((self.word as u16) << 6 | bit);
            }
            self.word += 1;
        }
        None
    }
}

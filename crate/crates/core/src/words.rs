//! Forbidden-difference structure and the block coding of membership
//! sequences.
//!
//! For a finite set `D` of forbidden differences, the block length is
//! `m = max(D) + 1` and a letter is the `m`-bit window of the membership
//! sequence at a position. A letter is legal when the window itself avoids
//! `D`; consecutive windows overlap in `m - 1` bits (the successor
//! relation). A set avoids `D` exactly when every letter of its encoding is
//! legal, which turns the avoidance problem into a walk problem on the
//! legal-letter graph.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::seq;
use crate::set::RationalSet;

/// Largest supported forbidden difference. Keeps the letter alphabet
/// (2^(max+1) candidates) enumerable.
pub const MAX_DISTANCE: u64 = 20;

/// A finite nonempty set of forbidden positive differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSet {
    distances: Vec<u64>,
}

impl DistanceSet {
    pub fn new(distances: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut ds: Vec<u64> = distances.into_iter().collect();
        ds.sort_unstable();
        ds.dedup();
        if ds.is_empty() {
            return Err(Error::InvalidDistanceSet("must be nonempty".into()));
        }
        if ds[0] == 0 {
            return Err(Error::InvalidDistanceSet("distances must be positive".into()));
        }
        if *ds.last().unwrap() > MAX_DISTANCE {
            return Err(Error::InvalidDistanceSet(format!(
                "distances above {MAX_DISTANCE} are not supported"
            )));
        }
        Ok(DistanceSet { distances: ds })
    }

    pub fn distances(&self) -> &[u64] {
        &self.distances
    }

    pub fn max_distance(&self) -> u64 {
        *self.distances.last().unwrap()
    }

    /// Block length `m = max(D) + 1`.
    pub fn block_length(&self) -> usize {
        self.max_distance() as usize + 1
    }

    pub fn contains(&self, d: u64) -> bool {
        self.distances.binary_search(&d).is_ok()
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.distances.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}

/// An `m`-bit window of a membership sequence; bit `i` is the membership of
/// position `n + i` when the letter sits at position `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn bit(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    /// A consonant starts with a member (bit 0 set); otherwise a vowel.
    pub fn is_consonant(self) -> bool {
        self.0 & 1 == 1
    }

    /// Legal iff the window's support avoids all forbidden differences.
    pub fn is_legal(self, d: &DistanceSet) -> bool {
        d.distances().iter().all(|&dd| self.0 & (self.0 >> dd) == 0)
    }

    /// The two windows that can follow this one (before any legality check).
    pub fn successors(self, m: usize) -> [Letter; 2] {
        let base = self.0 >> 1;
        [Letter(base), Letter(base | 1 << (m - 1))]
    }

    pub fn is_successor_of(self, prev: Letter, m: usize) -> bool {
        let mask = (1u32 << (m - 1)) - 1;
        self.0 & mask == prev.0 >> 1
    }

    pub fn bits_string(self, m: usize) -> String {
        (0..m).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }
}

/// All legal letters for `D`, ascending by code.
pub fn legal_alphabet(d: &DistanceSet) -> Vec<Letter> {
    let m = d.block_length();
    (0u32..1 << m)
        .map(Letter)
        .filter(|l| l.is_legal(d))
        .collect()
}

/// Whether `s` avoids `D`: no two members differ by a forbidden distance.
///
/// Decided on the window `0 .. N + 2d + max(D)`; any violating pair has a
/// periodic image inside that window.
pub fn is_avoiding(s: &RationalSet, d: &DistanceSet) -> bool {
    let window =
        (s.preperiod_len() + 2 * s.period_len() + d.max_distance()) as usize;
    let bits = s.bit_window(window);
    for p in 0..window {
        if !bits[p] {
            continue;
        }
        for &dd in d.distances() {
            let q = p + dd as usize;
            if q < window && bits[q] {
                return false;
            }
        }
    }
    true
}

/// The set built by the greedy rule: `n` joins whenever no earlier member
/// sits at a forbidden distance.
///
/// The rule is a deterministic function of the last `max(D)` bits, so the
/// orbit enters a cycle within `2^max(D)` steps and the result is eventually
/// periodic; it is returned in canonical form.
pub fn greedy_avoiding(d: &DistanceSet) -> RationalSet {
    let maxd = d.max_distance() as usize;
    let mask: u64 = (1u64 << maxd) - 1;
    let mut conflict: u64 = 0;
    for &dd in d.distances() {
        conflict |= 1 << (dd - 1);
    }
    let mut bits: Vec<bool> = Vec::new();
    let mut state: u64 = 0;
    let mut seen: HashMap<u64, usize> = HashMap::new();
    loop {
        match seen.entry(state) {
            std::collections::hash_map::Entry::Occupied(e) => {
                let start = *e.get();
                let pre = bits[..start].to_vec();
                let rep = bits[start..].to_vec();
                return RationalSet::from_bits(pre, rep);
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(bits.len());
            }
        }
        let b = state & conflict == 0;
        bits.push(b);
        state = ((state << 1) | b as u64) & mask;
    }
}

/// An eventually periodic word of letters, canonical like `RationalSet`
/// (minimal repetend, then minimal pre-repetend).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterWord {
    m: usize,
    pre: Vec<Letter>,
    rep: Vec<Letter>,
}

impl LetterWord {
    pub fn new(m: usize, pre: Vec<Letter>, rep: Vec<Letter>) -> Result<Self> {
        if rep.is_empty() {
            return Err(Error::InvalidWord("repetend must be nonempty".into()));
        }
        if pre
            .iter()
            .chain(rep.iter())
            .any(|l| m >= 32 || l.0 >= 1 << m)
        {
            return Err(Error::InvalidWord(format!("letter wider than {m} bits")));
        }
        let mut pre = pre;
        let mut rep = rep;
        seq::canonicalize(&mut pre, &mut rep);
        Ok(LetterWord { m, pre, rep })
    }

    pub fn block_length(&self) -> usize {
        self.m
    }

    pub fn pre(&self) -> &[Letter] {
        &self.pre
    }

    pub fn rep(&self) -> &[Letter] {
        &self.rep
    }

    pub fn letter_at(&self, n: u64) -> Letter {
        let np = self.pre.len() as u64;
        if n < np {
            self.pre[n as usize]
        } else {
            self.rep[((n - np) % self.rep.len() as u64) as usize]
        }
    }

    /// Membership set read off bit 0 of each letter.
    pub fn decode(&self) -> RationalSet {
        RationalSet::from_bits(
            self.pre.iter().map(|l| l.is_consonant()).collect(),
            self.rep.iter().map(|l| l.is_consonant()).collect(),
        )
    }

    /// Every consecutive pair (including the periodic wrap) overlaps
    /// correctly, i.e. the word is a sliding-window sequence.
    pub fn is_successor_consistent(&self) -> bool {
        let total = self.pre.len() + 2 * self.rep.len();
        (1..=total as u64).all(|n| {
            self.letter_at(n).is_successor_of(self.letter_at(n - 1), self.m)
        })
    }

    /// All letters legal for `D` (checked over pre-repetend plus one period).
    pub fn is_legal(&self, d: &DistanceSet) -> bool {
        self.pre.iter().chain(self.rep.iter()).all(|l| l.is_legal(d))
    }
}

/// The block encoding of a set: the word of `m`-bit windows of its
/// membership sequence.
pub fn block_encode(s: &RationalSet, d: &DistanceSet) -> LetterWord {
    let m = d.block_length();
    let letter_at = |n: u64| {
        let mut code = 0u32;
        for i in 0..m {
            if s.contains(n + i as u64) {
                code |= 1 << i;
            }
        }
        Letter(code)
    };
    let np = s.preperiod_len();
    let dp = s.period_len();
    let pre: Vec<Letter> = (0..np).map(letter_at).collect();
    let rep: Vec<Letter> = (np..np + dp).map(letter_at).collect();
    LetterWord::new(m, pre, rep).expect("nonempty repetend")
}

/// Inverse of the block encoding.
pub fn block_decode(w: &LetterWord) -> RationalSet {
    w.decode()
}

//! Circular words and the rewriting machinery built on them.
//!
//! A circular word is a letter sequence whose first and last letters agree;
//! its length discounts the duplicated endpoint. The generating function of
//! its infinite repetition is `P/(1 - q^a)` where `P` records the consonant
//! positions of one period, and the germ-ordering of circular words compares
//! those functions at `1^-`.
//!
//! Decomposing an eventually periodic word at a recurring anchor letter
//! splits it into primitive circular factors. Two checks are implemented on
//! top: the concatenation chain (a concatenation of two comparable circular
//! words lies germ-between them) and factor monotonicity (a germ-maximal
//! word must have nonincreasing factors; a violation yields a swap that
//! strictly improves the word). `dominate_word` combines tail replacement
//! with pre-repetend squashing to rewrite any legal word into a dominating
//! word with a repetend drawn from a table of per-letter champions and a
//! repeat-free pre-repetend.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::words::{DistanceSet, Letter, LetterWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircularWord {
    m: usize,
    letters: Vec<Letter>,
}

impl CircularWord {
    /// Build from a letter sequence whose first and last letters coincide.
    pub fn new(m: usize, letters: Vec<Letter>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidWord("block length must be positive".into()));
        }
        if letters.len() < 2 {
            return Err(Error::InvalidWord(
                "a circular word needs at least two letters".into(),
            ));
        }
        if letters.first() != letters.last() {
            return Err(Error::InvalidWord(
                "first and last letters must coincide".into(),
            ));
        }
        if letters.iter().any(|l| m >= 32 || l.0 >= 1 << m) {
            return Err(Error::InvalidWord(format!("letter wider than {m} bits")));
        }
        Ok(CircularWord { m, letters })
    }

    /// A width-1 circular word from a consonant pattern (the anchor is the
    /// first pattern bit, appended again at the end).
    pub fn from_pattern(pattern: &[bool]) -> Self {
        assert!(!pattern.is_empty());
        let mut letters: Vec<Letter> =
            pattern.iter().map(|&b| Letter(b as u32)).collect();
        letters.push(letters[0]);
        CircularWord { m: 1, letters }
    }

    pub fn block_length(&self) -> usize {
        self.m
    }

    /// Length, counting the shared endpoint once.
    pub fn circ_len(&self) -> usize {
        self.letters.len() - 1
    }

    pub fn anchor(&self) -> Letter {
        self.letters[0]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// One period of letters (the duplicated endpoint dropped).
    pub fn interior(&self) -> &[Letter] {
        &self.letters[..self.letters.len() - 1]
    }

    /// 0/1 polynomial of the consonant positions of one period.
    pub fn pattern_poly(&self) -> Polynomial {
        slice_pattern_poly(self.interior())
    }

    /// Generating function of the infinite repetition: `P_c / (1 - q^a)`.
    pub fn germ(&self) -> RationalFunction {
        RationalFunction::new(
            self.pattern_poly(),
            Polynomial::one_minus_q_power(self.circ_len()),
        )
    }

    /// Concatenation, identifying this word's final letter with the other's
    /// initial letter. Associative; lengths add.
    pub fn concat(&self, other: &CircularWord) -> Result<CircularWord> {
        if self.m != other.m {
            return Err(Error::InvalidWord("block lengths differ".into()));
        }
        if self.letters.last() != other.letters.first() {
            return Err(Error::AnchorMismatch);
        }
        let mut letters = self.interior().to_vec();
        letters.extend_from_slice(&other.letters);
        Ok(CircularWord {
            m: self.m,
            letters,
        })
    }

    /// Germ-ordering: `Less` means this word's repetition is eventually
    /// below the other's. `Equal` holds exactly when the two infinite
    /// periodic words coincide.
    pub fn compare(&self, other: &CircularWord) -> Ordering {
        match (&other.germ() - &self.germ()).sign_near_one() {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    /// The infinite repetition as an eventually periodic word.
    pub fn repeat_forever(&self) -> LetterWord {
        LetterWord::new(self.m, Vec::new(), self.interior().to_vec())
            .expect("nonempty interior")
    }

    pub fn is_successor_consistent(&self) -> bool {
        self.letters
            .windows(2)
            .all(|w| w[1].is_successor_of(w[0], self.m))
    }

    pub fn is_legal(&self, d: &DistanceSet) -> bool {
        self.letters.iter().all(|l| l.is_legal(d))
    }
}

fn slice_pattern_poly(letters: &[Letter]) -> Polynomial {
    let support: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_consonant())
        .map(|(i, _)| i)
        .collect();
    if support.is_empty() {
        Polynomial::zero()
    } else {
        Polynomial::from_support(&support)
    }
}

/// Factorization of an eventually periodic word at an anchor letter: the
/// letters before the first anchor occurrence, the primitive circular
/// factors leading into the periodic regime, and the factor cycle covering
/// one full period.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub anchor: Letter,
    pub prefix: Vec<Letter>,
    pub head: Vec<CircularWord>,
    pub cycle: Vec<CircularWord>,
}

impl Decomposition {
    /// The factor stream up to one full period: head factors, then cycle.
    pub fn factors(&self) -> impl Iterator<Item = &CircularWord> {
        self.head.iter().chain(self.cycle.iter())
    }

    /// Reconcatenate prefix and factors back into the original word.
    pub fn reassemble(&self) -> LetterWord {
        let mut pre = self.prefix.clone();
        for f in &self.head {
            pre.extend_from_slice(f.interior());
        }
        let mut rep = Vec::new();
        for f in &self.cycle {
            rep.extend_from_slice(f.interior());
        }
        let m = self
            .cycle
            .first()
            .map(|c| c.block_length())
            .expect("nonempty cycle");
        LetterWord::new(m, pre, rep).expect("nonempty repetend")
    }
}

/// Split `w` at an anchor letter that occurs in the repetend. With no
/// explicit anchor, the least recurring letter (by code) is used.
pub fn decompose(w: &LetterWord, anchor: Option<Letter>) -> Result<Decomposition> {
    let anchor = match anchor {
        Some(a) => a,
        None => *w.rep().iter().min().expect("nonempty repetend"),
    };
    let Some(j0) = w.rep().iter().position(|&l| l == anchor) else {
        return Err(Error::AnchorDoesNotRecur);
    };
    let m = w.block_length();
    let np = w.pre().len() as u64;
    let dd = w.rep().len() as u64;
    // First occurrence anywhere, and first occurrence inside the periodic
    // regime; factors between consecutive occurrences up to one full period
    // past the latter.
    let ks = np + j0 as u64;
    let k0 = (0..=ks)
        .find(|&n| w.letter_at(n) == anchor)
        .expect("anchor occurs at ks");
    let occs: Vec<u64> = (k0..=ks + dd)
        .filter(|&n| w.letter_at(n) == anchor)
        .collect();
    let prefix: Vec<Letter> = (0..k0).map(|n| w.letter_at(n)).collect();
    let mut head = Vec::new();
    let mut cycle = Vec::new();
    for pair in occs.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let letters: Vec<Letter> = (a..=b).map(|n| w.letter_at(n)).collect();
        let factor = CircularWord::new(m, letters)?;
        if a < ks {
            head.push(factor);
        } else {
            cycle.push(factor);
        }
    }
    Ok(Decomposition {
        anchor,
        prefix,
        head,
        cycle,
    })
}

/// Verify that concatenating two germ-comparable circular words lands
/// between them: `lo <= lo:hi <= hi:lo <= hi`, with strict inequalities
/// exactly when `lo` is strictly below `hi`.
///
/// Requires a shared anchor and `lo` not above `hi`.
pub fn concat_chain_holds(lo: &CircularWord, hi: &CircularWord) -> Result<bool> {
    if lo.anchor() != hi.anchor() || lo.block_length() != hi.block_length() {
        return Err(Error::AnchorMismatch);
    }
    let expected = lo.compare(hi);
    if expected == Ordering::Greater {
        return Err(Error::ChainPreconditionViolated);
    }
    let lh = lo.concat(hi)?;
    let hl = hi.concat(lo)?;
    Ok(lo.compare(&lh) == expected
        && lh.compare(&hl) == expected
        && hl.compare(hi) == expected)
}

/// A witnessed violation of factor monotonicity: the factor at `index` is
/// germ-below its successor, and swapping the two occurrences produces
/// `improved`, a word strictly germ-greater than the input.
#[derive(Debug, Clone)]
pub struct SwapCertificate {
    pub index: usize,
    pub first: CircularWord,
    pub second: CircularWord,
    pub improved: LetterWord,
}

/// Result of scanning the factor stream of a word for monotonicity.
#[derive(Debug, Clone)]
pub struct FactorMonotonicity {
    pub nonincreasing: bool,
    pub pairs_checked: u64,
    pub violation: Option<SwapCertificate>,
}

/// Check that the primitive factors of `w` at the anchor are nonincreasing
/// in the germ-ordering, a necessary condition for germ-maximality.
///
/// The factor stream of a rational word is eventually periodic, so checking
/// the head factors plus one full cycle (including the wrap-around pair) is
/// exhaustive. A violation comes with the improving swap.
pub fn factor_monotonicity(
    w: &LetterWord,
    anchor: Option<Letter>,
) -> Result<FactorMonotonicity> {
    let dec = decompose(w, anchor)?;
    let mut linear: Vec<&CircularWord> = dec.factors().collect();
    linear.extend(dec.cycle.iter());
    let pairs = dec.head.len() + dec.cycle.len();
    for idx in 0..pairs {
        let (a, b) = (linear[idx], linear[idx + 1]);
        if a.compare(b) != Ordering::Less {
            continue;
        }
        // Swap the out-of-order occurrence and spell out the stream through
        // two full cycles, which ends exactly at a period boundary.
        let mut pre = dec.prefix.clone();
        for (j, f) in linear.iter().enumerate() {
            let swapped: &CircularWord = if j == idx {
                b
            } else if j == idx + 1 {
                a
            } else {
                f
            };
            pre.extend_from_slice(swapped.interior());
        }
        let mut rep = Vec::new();
        for f in &dec.cycle {
            rep.extend_from_slice(f.interior());
        }
        let improved = LetterWord::new(w.block_length(), pre, rep)?;
        return Ok(FactorMonotonicity {
            nonincreasing: false,
            pairs_checked: (idx + 1) as u64,
            violation: Some(SwapCertificate {
                index: idx,
                first: a.clone(),
                second: b.clone(),
                improved,
            }),
        });
    }
    Ok(FactorMonotonicity {
        nonincreasing: true,
        pairs_checked: pairs as u64,
        violation: None,
    })
}

/// Per-letter champion circular words, keyed by their anchor.
pub type StarTable = BTreeMap<Letter, CircularWord>;

/// All closed legal walks from `anchor` back to itself with at most
/// `max_len` edges. Exponential in `max_len`; meant for small bounds.
pub fn closed_walks(d: &DistanceSet, anchor: Letter, max_len: usize) -> Vec<CircularWord> {
    let m = d.block_length();
    let mut out = Vec::new();
    let mut path = vec![anchor];
    fn go(
        d: &DistanceSet,
        m: usize,
        anchor: Letter,
        max_len: usize,
        path: &mut Vec<Letter>,
        out: &mut Vec<CircularWord>,
    ) {
        let cur = *path.last().unwrap();
        for next in cur.successors(m) {
            if !next.is_legal(d) {
                continue;
            }
            path.push(next);
            if next == anchor {
                out.push(CircularWord {
                    m,
                    letters: path.clone(),
                });
            }
            if path.len() <= max_len {
                go(d, m, anchor, max_len, path, out);
            }
            path.pop();
        }
    }
    go(d, m, anchor, max_len, &mut path, &mut out);
    out
}

/// For every legal letter with a closed walk within the bound, the germ-
/// greatest such walk. Ties keep the first walk found, so the result is
/// deterministic.
pub fn best_star_table(d: &DistanceSet, max_len: usize) -> StarTable {
    let mut table = StarTable::new();
    for alpha in crate::words::legal_alphabet(d) {
        let mut best: Option<CircularWord> = None;
        for walk in closed_walks(d, alpha, max_len) {
            match &best {
                None => best = Some(walk),
                Some(b) if b.compare(&walk) == Ordering::Less => best = Some(walk),
                _ => {}
            }
        }
        if let Some(b) = best {
            table.insert(alpha, b);
        }
    }
    table
}

fn ensure_dominates(next: &LetterWord, cur: &LetterWord) -> Result<()> {
    if next.decode().germ_compare(&cur.decode()).relation == Ordering::Less {
        return Err(Error::DominationFailed);
    }
    Ok(())
}

/// The letter at the earliest position of `w` that occurs infinitely often.
fn earliest_recurring_letter(w: &LetterWord) -> Letter {
    let recurring: BTreeSet<Letter> = w.rep().iter().copied().collect();
    w.pre()
        .iter()
        .copied()
        .find(|l| recurring.contains(l))
        .unwrap_or(w.rep()[0])
}

fn first_repeat(letters: &[Letter]) -> Option<(usize, usize)> {
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if letters[i] == letters[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Rewrite `w` into a word that germ-dominates it, is eventually periodic
/// with repetend drawn from the star table, and whose pre-repetend has no
/// repeated letters.
///
/// The star table must supply, for each anchor the procedure reaches, a
/// circular word starting at that letter that dominates every circular word
/// starting there. That hypothesis is validated against an exhaustive
/// enumeration of closed walks up to `validate_len` edges before any
/// rewriting, and every individual rewrite is additionally verified by an
/// exact germ comparison, so an inadequate table is reported rather than
/// trusted.
pub fn dominate_word(
    w: &LetterWord,
    d: &DistanceSet,
    star: &StarTable,
    validate_len: usize,
) -> Result<LetterWord> {
    let m = d.block_length();
    if w.block_length() != m {
        return Err(Error::InvalidWord("word block length does not match".into()));
    }
    for (alpha, entry) in star {
        let structural = entry.anchor() == *alpha
            && entry.block_length() == m
            && entry.is_successor_consistent()
            && entry.is_legal(d);
        if !structural {
            return Err(Error::StarTableInvalid {
                letter: alpha.0,
                detail: "entry is not a legal circular word anchored at its key".into(),
            });
        }
        for walk in closed_walks(d, *alpha, validate_len) {
            if entry.compare(&walk) == Ordering::Less {
                return Err(Error::StarTableInvalid {
                    letter: alpha.0,
                    detail: format!(
                        "dominated by an enumerated circular word of length {}",
                        walk.circ_len()
                    ),
                });
            }
        }
    }

    let max_star = star.values().map(|c| c.circ_len()).max().unwrap_or(0);
    let cap = 64 + 4 * (w.pre().len() + w.rep().len() + max_star);
    let mut cur = w.clone();
    for _ in 0..cap {
        let mut changed = false;

        // Tail replacement: from the first in-regime occurrence of the
        // anchor on, substitute the infinite repetition of its champion.
        let anchor = earliest_recurring_letter(&cur);
        let champion = star
            .get(&anchor)
            .ok_or(Error::StarTableMissing(anchor.0))?;
        let dec = decompose(&cur, Some(anchor))?;
        let mut pre = dec.prefix.clone();
        for f in &dec.head {
            pre.extend_from_slice(f.interior());
        }
        let next = LetterWord::new(m, pre, champion.interior().to_vec())?;
        if next != cur {
            ensure_dominates(&next, &cur)?;
            cur = next;
            changed = true;
        }

        // Squash repeated pre-repetend letters. Writing the word as
        // d : e : f : rep^inf with e and f starting at the repeat, the total
        // order on germs forces one of two rewrites: drop e, or repeat e
        // forever. Either one shortens the pre-repetend.
        while let Some((i, j)) = first_repeat(cur.pre()) {
            let pre = cur.pre();
            let e = &pre[i..j];
            let f = &pre[j..];
            let a = cur.rep().len();
            let rep_tail = RationalFunction::new(
                slice_pattern_poly(cur.rep()),
                Polynomial::one_minus_q_power(a),
            );
            let after_f = &RationalFunction::from_poly(slice_pattern_poly(f))
                + &(&RationalFunction::from_poly(Polynomial::q_power(f.len())) * &rep_tail);
            let rhs = &RationalFunction::from_poly(Polynomial::one_minus_q_power(e.len()))
                * &after_f;
            let lhs = RationalFunction::from_poly(slice_pattern_poly(e));
            let went_periodic;
            let next = if (&rhs - &lhs).sign_near_one() >= 0 {
                went_periodic = false;
                let mut p2 = pre[..i].to_vec();
                p2.extend_from_slice(f);
                LetterWord::new(m, p2, cur.rep().to_vec())?
            } else {
                went_periodic = true;
                LetterWord::new(m, pre[..i].to_vec(), e.to_vec())?
            };
            ensure_dominates(&next, &cur)?;
            cur = next;
            changed = true;
            if went_periodic {
                // The repetend changed; re-anchor and re-run the tail
                // replacement before squashing further.
                break;
            }
        }

        if !changed {
            return Ok(cur);
        }
    }
    Err(Error::DominationFailed)
}

//! Bounded search for germ-maximal avoiding sets.
//!
//! The search has two stages. `best_periodic` finds the germ-greatest
//! purely periodic avoiding set with period at most `L`: the maximum cycle
//! mean of the legal-letter graph pins the best density, the tight subgraph
//! of that mean carries exactly the maximum-mean cycles, and the germ
//! ordering decides among them (with a full bounded enumeration as the
//! fallback when no maximum-mean cycle fits the period bound). Germ order
//! refines density, so no other cycle within the bound can compete.
//! `improve_preperiod` then exhausts every rewrite of the first `W`
//! positions that preserves avoidance against the fixed tail.
//!
//! The result is optimal within `(L, W)` and comes with certificates, but
//! it is never claimed to be globally germ-maximal; the report says so.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circular::{factor_monotonicity, CircularWord};
use crate::error::{Error, Result};
use crate::graph::{for_each_anchored_cycle, LetterGraph};
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::set::{RationalSet, Valuation};
use crate::verify::random_avoiding_set;
use crate::words::{block_encode, is_avoiding, DistanceSet};

/// Node budget shared by the cycle enumeration and the prefix search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 22;

/// Wording of the caveat carried by every search report.
pub const SEARCH_CAVEAT: &str =
    "germ-greatest within the searched period bound and preperiod window; \
     global germ-maximality is not established";

/// Outcome of a bounded optimization run.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub champion: RationalSet,
    pub period_bound: u32,
    pub preperiod_window: u32,
    pub candidates_compared: u64,
    pub swaps_examined: u64,
    pub lemma6_pass: bool,
    pub caveat: String,
}

/// The germ-greatest circular word over all cycles of length at most
/// `period_bound` in the legal-letter graph, anchored at its least letter.
pub fn best_periodic(d: &DistanceSet, period_bound: u32) -> Result<CircularWord> {
    best_periodic_with_stats(d, period_bound, DEFAULT_SEARCH_BUDGET).map(|(c, _)| c)
}

pub(crate) fn best_periodic_with_stats(
    d: &DistanceSet,
    period_bound: u32,
    budget: u64,
) -> Result<(CircularWord, u64)> {
    let g = LetterGraph::build(d);
    let m = g.m;
    let bound = period_bound.max(1) as usize;
    let mut best: Option<CircularWord> = None;
    let mut compared: u64 = 0;

    // Anchoring at the least node deduplicates traversals of a cycle, but
    // each rotation is a different periodic set with its own germ, so all
    // of them enter the comparison.
    let consider = |path: &[usize], best: &mut Option<CircularWord>, compared: &mut u64| {
        for rot in 0..path.len() {
            let mut letters: Vec<_> = path[rot..]
                .iter()
                .chain(path[..rot].iter())
                .map(|&i| g.letters[i])
                .collect();
            letters.push(letters[0]);
            let cand = CircularWord::new(m, letters).expect("closed path");
            *compared += 1;
            if best
                .as_ref()
                .is_none_or(|b| b.compare(&cand) == Ordering::Less)
            {
                *best = Some(cand);
            }
        }
    };

    let (p, q) = g.max_cycle_mean();
    let tight = g.tight_adjacency(p, q);
    for_each_anchored_cycle(&tight, bound, budget, |path| {
        consider(path, &mut best, &mut compared)
    })?;
    if best.is_none() {
        // No maximum-mean cycle fits the bound; fall back to comparing
        // every cycle within it. The all-vowel self-loop guarantees one.
        for_each_anchored_cycle(&g.succ, bound, budget, |path| {
            consider(path, &mut best, &mut compared)
        })?;
    }
    Ok((best.expect("the all-vowel letter self-loops"), compared))
}

/// Germ-compare two finite prefixes of equal meaning (same fixed tail): the
/// sign of the difference polynomial near 1.
fn prefix_cmp(a: &[bool], b: &[bool]) -> Ordering {
    let to_poly = |bits: &[bool]| {
        Polynomial::new(
            bits.iter()
                .map(|&x| if x { Rat::one() } else { Rat::zero() })
                .collect(),
        )
    };
    let diff = &to_poly(a) - &to_poly(b);
    match diff.order_at_one() {
        None => Ordering::Equal,
        Some((_, lead)) => {
            if crate::rat::sign(&lead) > 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

/// The germ-greatest avoiding set among all sets that agree with `s` from
/// position `window` on, by exhaustive search over the `2^window` prefixes
/// with avoidance pruning. The result never germ-decreases `s`.
pub fn improve_preperiod(
    s: &RationalSet,
    d: &DistanceSet,
    window: u32,
) -> Result<RationalSet> {
    improve_preperiod_with_budget(s, d, window, DEFAULT_SEARCH_BUDGET)
}

pub fn improve_preperiod_with_budget(
    s: &RationalSet,
    d: &DistanceSet,
    window: u32,
    budget: u64,
) -> Result<RationalSet> {
    if !is_avoiding(s, d) {
        return Err(Error::NotAvoiding);
    }
    let w = window as usize;
    let mut bits = vec![false; w];
    let mut best: Option<Vec<bool>> = None;
    let mut explored: u64 = 0;

    fn dfs(
        pos: usize,
        w: usize,
        d: &DistanceSet,
        s: &RationalSet,
        bits: &mut Vec<bool>,
        best: &mut Option<Vec<bool>>,
        explored: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *explored += 1;
        if *explored > budget {
            return Err(Error::BudgetExhausted {
                explored: *explored,
                budget,
            });
        }
        if pos == w {
            if best
                .as_deref()
                .is_none_or(|b| prefix_cmp(bits, b) == Ordering::Greater)
            {
                *best = Some(bits.clone());
            }
            return Ok(());
        }
        // Try occupancy first so denser prefixes are found early.
        let can_occupy = d.distances().iter().all(|&delta| {
            let du = delta as usize;
            let back_clear = pos < du || !bits[pos - du];
            let ahead = pos as u64 + delta;
            let tail_clear = ahead < w as u64 || !s.contains(ahead);
            back_clear && tail_clear
        });
        if can_occupy {
            bits[pos] = true;
            dfs(pos + 1, w, d, s, bits, best, explored, budget)?;
        }
        bits[pos] = false;
        dfs(pos + 1, w, d, s, bits, best, explored, budget)
    }

    dfs(0, w, d, s, &mut bits, &mut best, &mut explored, budget)?;
    let best = best.expect("the empty prefix is always avoiding");
    Ok(s.replace_prefix(&best))
}

/// Bounded search for the germ-maximal avoiding set: periodic champion,
/// then preperiod improvement, with certificates.
pub fn optimize(d: &DistanceSet, period_bound: u32, window: u32) -> Result<SearchReport> {
    let (cycle, candidates_compared) =
        best_periodic_with_stats(d, period_bound, DEFAULT_SEARCH_BUDGET)?;
    let base = cycle.repeat_forever().decode();
    let champion = improve_preperiod(&base, d, window)?;
    debug_assert!(is_avoiding(&champion, d));
    let encoding = block_encode(&champion, d);
    let certificate = factor_monotonicity(&encoding, None)?;
    Ok(SearchReport {
        champion,
        period_bound,
        preperiod_window: window,
        candidates_compared,
        swaps_examined: certificate.pairs_checked,
        lemma6_pass: certificate.nonincreasing,
        caveat: SEARCH_CAVEAT.to_string(),
    })
}

/// Outcome of checking the efficiency gap for block packings.
#[derive(Debug, Clone)]
pub struct GapReport {
    pub k: u64,
    pub trials: u64,
    pub violations: u64,
    pub boundary_hits: u64,
}

/// For `D = {1, .., k-1}` the progression `kN` beats every other avoiding
/// set by a constant `1/k` at order zero: sampled sets must satisfy
/// `valuation(S) <= (1/k, (k-1)/(2k) - 1/k)` lexicographically, with
/// equality exactly on the boundary witnesses.
pub fn efficiency_gap_report(k: u64, samples: u64, seed: u64) -> Result<GapReport> {
    if k < 2 {
        return Err(Error::InvalidDistanceSet(
            "the efficiency gap needs k >= 2".into(),
        ));
    }
    let d = DistanceSet::new(1..k)?;
    let champion = RationalSet::arithmetic_progression(0, k);
    let v_star = champion.valuation();
    let bound = Valuation::new(
        v_star.density.clone(),
        v_star.constant.clone() - v_star.density.clone(),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut boundary_hits = 0;
    let mut accepted = 0;
    while accepted < samples {
        let s = random_avoiding_set(&mut rng, &d, 3 * k as usize, 4 * k as usize);
        if s == champion {
            continue;
        }
        accepted += 1;
        match s.valuation().lex_cmp(&bound) {
            Ordering::Greater => violations += 1,
            Ordering::Equal => boundary_hits += 1,
            Ordering::Less => {}
        }
    }
    Ok(GapReport {
        k,
        trials: samples,
        violations,
        boundary_hits,
    })
}

//! The legal-letter successor graph and its cycle structure.
//!
//! Nodes are the legal letters; edges follow the window-overlap successor
//! relation. Periodic avoiding sets correspond to closed walks, and the
//! densest ones to maximum-mean cycles with the consonant indicator as the
//! edge weight. The graph is strongly connected (any letter drains to the
//! all-vowel letter by shifting in vacancies, and any legal letter is
//! rebuilt from it bit by bit), so a single maximum-cycle-mean pass from the
//! all-vowel letter sees every cycle.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{legal_alphabet, DistanceSet, Letter};

pub(crate) struct LetterGraph {
    pub m: usize,
    pub letters: Vec<Letter>,
    pub succ: Vec<Vec<usize>>,
}

impl LetterGraph {
    pub fn build(d: &DistanceSet) -> LetterGraph {
        let m = d.block_length();
        let letters = legal_alphabet(d);
        let index: HashMap<u32, usize> = letters
            .iter()
            .enumerate()
            .map(|(i, l)| (l.0, i))
            .collect();
        let succ = letters
            .iter()
            .map(|l| {
                l.successors(m)
                    .iter()
                    .filter_map(|s| index.get(&s.0).copied())
                    .collect()
            })
            .collect();
        LetterGraph { m, letters, succ }
    }

    fn weight(&self, u: usize) -> i64 {
        self.letters[u].is_consonant() as i64
    }

    /// Maximum cycle mean (consonants per step) as a reduced fraction.
    ///
    /// Karp's dynamic program over exact edge-count-indexed best weights,
    /// sourced at the all-vowel letter, which reaches every node.
    pub fn max_cycle_mean(&self) -> (i64, i64) {
        let n = self.letters.len();
        const NEG: i64 = i64::MIN / 2;
        let mut table: Vec<Vec<i64>> = Vec::with_capacity(n + 1);
        let mut row = vec![NEG; n];
        row[0] = 0; // letter 0 is always legal and sorts first
        table.push(row);
        for k in 1..=n {
            let prev = &table[k - 1];
            let mut next = vec![NEG; n];
            for u in 0..n {
                if prev[u] <= NEG {
                    continue;
                }
                let w = prev[u] + self.weight(u);
                for &v in &self.succ[u] {
                    if w > next[v] {
                        next[v] = w;
                    }
                }
            }
            table.push(next);
        }
        let mut best: Option<(i64, i64)> = None; // (numerator, denominator)
        for v in 0..n {
            let full = table[n][v];
            if full <= NEG {
                continue;
            }
            let mut v_min: Option<(i64, i64)> = None;
            for (k, row) in table.iter().enumerate().take(n) {
                if row[v] <= NEG {
                    continue;
                }
                let cand = (full - row[v], (n - k) as i64);
                let smaller = match v_min {
                    None => true,
                    Some((a, b)) => (cand.0 as i128) * (b as i128) < (a as i128) * (cand.1 as i128),
                };
                if smaller {
                    v_min = Some(cand);
                }
            }
            if let Some(mv) = v_min {
                let bigger = match best {
                    None => true,
                    Some((a, b)) => (mv.0 as i128) * (b as i128) > (a as i128) * (mv.1 as i128),
                };
                if bigger {
                    best = Some(mv);
                }
            }
        }
        let (p, q) = best.expect("the all-vowel self-loop guarantees a cycle");
        let g = crate::seq::gcd_u64(p.unsigned_abs(), q.unsigned_abs()).max(1) as i64;
        (p / g, q / g)
    }

    /// Adjacency restricted to edges on maximum-mean cycles.
    ///
    /// With weights rescaled so every cycle has nonpositive total weight,
    /// longest-path potentials make exactly the maximum-mean cycle edges
    /// tight, so the cycles of the returned subgraph are precisely the
    /// maximum-mean cycles.
    pub fn tight_adjacency(&self, mean_num: i64, mean_den: i64) -> Vec<Vec<usize>> {
        let n = self.letters.len();
        let w = |u: usize| mean_den * self.weight(u) - mean_num;
        let mut h = vec![0i64; n];
        for _ in 0..n {
            let mut changed = false;
            for u in 0..n {
                let cand = h[u] + w(u);
                for &v in &self.succ[u] {
                    if cand > h[v] {
                        h[v] = cand;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..n)
            .map(|u| {
                self.succ[u]
                    .iter()
                    .copied()
                    .filter(|&v| h[u] + w(u) == h[v])
                    .collect()
            })
            .collect()
    }
}

/// Enumerate the simple cycles of `adj` with at most `max_len` edges, each
/// reported once, anchored at its smallest node index. The callback gets the
/// node path (anchor first, closing edge implied). `budget` caps the number
/// of search steps.
pub(crate) fn for_each_anchored_cycle(
    adj: &[Vec<usize>],
    max_len: usize,
    budget: u64,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    let n = adj.len();
    let mut explored: u64 = 0;
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        adj: &[Vec<usize>],
        start: usize,
        max_len: usize,
        budget: u64,
        explored: &mut u64,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut impl FnMut(&[usize]),
    ) -> Result<()> {
        let u = *path.last().unwrap();
        for &v in &adj[u] {
            *explored += 1;
            if *explored > budget {
                return Err(Error::BudgetExhausted {
                    explored: *explored,
                    budget,
                });
            }
            if v == start {
                visit(path);
            } else if v > start && !on_path[v] && path.len() < max_len {
                path.push(v);
                on_path[v] = true;
                dfs(adj, start, max_len, budget, explored, path, on_path, visit)?;
                on_path[v] = false;
                path.pop();
            }
        }
        Ok(())
    }

    for start in 0..n {
        path.clear();
        path.push(start);
        on_path[start] = true;
        dfs(
            adj,
            start,
            max_len,
            budget,
            &mut explored,
            &mut path,
            &mut on_path,
            &mut visit,
        )?;
        on_path[start] = false;
    }
    Ok(())
}

//! Exact numeric probing of generating-function differences.
//!
//! This is the one operation that looks at non-rational sets: it takes two
//! arbitrary membership predicates, sums the difference of their generating
//! functions up to a horizon at given points `q`, and reports the rigorous
//! bound `q^horizon / (1 - q)` on the discarded tail next to every value.
//! It demonstrates behavior near 1; it decides nothing.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// One probed point: the exact partial sum of `(1_A(n) - 1_B(n)) q^n` over
/// `n < horizon`, and the exact tail bound `q^horizon / (1 - q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeSample {
    pub q: Rat,
    pub partial: Rat,
    pub tail_bound: Rat,
}

/// Probe the difference of two membership predicates at each `q`.
///
/// Every `q` must lie in `(0, 1)`. The caller is responsible for choosing
/// the horizon large enough that the reported tail bound is below the
/// margins of interest; the bound makes that check possible after the fact.
pub fn numeric_probe(
    member_a: impl Fn(u64) -> bool,
    member_b: impl Fn(u64) -> bool,
    q_values: &[Rat],
    horizon: u64,
) -> Vec<ProbeSample> {
    let deltas: Vec<i8> = (0..horizon)
        .map(|n| member_a(n) as i8 - member_b(n) as i8)
        .collect();
    q_values
        .iter()
        .map(|q| {
            assert!(
                q > &Rat::zero() && q < &Rat::one(),
                "probe points must lie in (0,1)"
            );
            ProbeSample {
                q: q.clone(),
                partial: partial_sum(&deltas, q),
                tail_bound: tail_bound(q, horizon),
            }
        })
        .collect()
}

/// Exact `sum delta_n q^n` by an integer Horner scan: with `q = a/b`, the
/// value is `sum delta_n a^n b^(H-1-n)` over `b^(H-1)`.
fn partial_sum(deltas: &[i8], q: &Rat) -> Rat {
    if deltas.is_empty() {
        return Rat::zero();
    }
    let a = q.numer().clone();
    let b = q.denom().clone();
    let mut value = BigInt::from(deltas[deltas.len() - 1]);
    let mut b_pow = BigInt::one();
    for &s in deltas[..deltas.len() - 1].iter().rev() {
        b_pow *= &b;
        value *= &a;
        match s {
            1 => value += &b_pow,
            -1 => value -= &b_pow,
            _ => {}
        }
    }
    Rat::new(value, b_pow)
}

fn tail_bound(q: &Rat, horizon: u64) -> Rat {
    let mut pow = Rat::one();
    let mut base = q.clone();
    let mut e = horizon;
    while e > 0 {
        if e & 1 == 1 {
            pow *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    pow / (Rat::one() - q)
}

/// Whether `n` has an even number of decimal digits (0 has one digit).
pub fn even_digit_count(n: u64) -> bool {
    let mut digits = 1;
    let mut m = n / 10;
    while m > 0 {
        digits += 1;
        m /= 10;
    }
    digits % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ratio, sign};
    use crate::set::RationalSet;
    use num_traits::Signed;

    #[test]
    fn identical_predicates_probe_to_zero() {
        let s: RationalSet = "1101001001000(001)".parse().unwrap();
        let samples = numeric_probe(
            |n| s.contains(n),
            |n| s.contains(n),
            &[ratio(1, 2), ratio(9, 10)],
            64,
        );
        for smp in samples {
            assert!(smp.partial.is_zero());
        }
    }

    #[test]
    fn even_odd_partial_matches_closed_form() {
        // sum_{n<10} (-1)^n q^n = (1 - q^10)/(1 + q) at q = 1/2: 341/512.
        let evens: RationalSet = "(10)".parse().unwrap();
        let odds: RationalSet = "0(10)".parse().unwrap();
        let samples = numeric_probe(
            |n| evens.contains(n),
            |n| odds.contains(n),
            &[ratio(1, 2)],
            10,
        );
        assert_eq!(samples[0].partial, ratio(341, 512));
        // Tail bound is q^10/(1-q) = 1/512.
        assert_eq!(samples[0].tail_bound, ratio(1, 512));
    }

    #[test]
    fn digit_count_parity_difference_changes_sign() {
        // The even-digit-count set against its complement: the sign of the
        // partial difference flips between q = 0.9 and q = 0.99, each value
        // exceeding its certified tail bound.
        let qs = [ratio(9, 10), ratio(99, 100)];
        let samples = numeric_probe(even_digit_count, |n| !even_digit_count(n), &qs, 4000);
        assert_eq!(sign(&samples[0].partial), -1);
        assert_eq!(sign(&samples[1].partial), 1);
        for s in &samples {
            assert!(
                s.partial.abs() > s.tail_bound,
                "tail bound must certify the sign at q = {}",
                s.q
            );
        }
    }

    #[test]
    fn digit_counting() {
        assert!(!even_digit_count(0));
        assert!(!even_digit_count(9));
        assert!(even_digit_count(10));
        assert!(even_digit_count(99));
        assert!(!even_digit_count(100));
        assert!(even_digit_count(1000));
    }
}

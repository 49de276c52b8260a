//! Canonicalization of eventually periodic sequences, shared by bit
//! sequences (sets) and letter sequences (block-coded words).

/// Reduce `(pre, rep)` to the minimal repetend length, then the minimal
/// preperiod length, without changing the infinite sequence
/// `pre[0], .., pre[N-1], rep[0], rep[1], ..` (rep repeating forever).
pub(crate) fn canonicalize<T: PartialEq + Clone>(pre: &mut Vec<T>, rep: &mut Vec<T>) {
    assert!(!rep.is_empty(), "repetend must be nonempty");
    // Minimal cyclic period of the repetend. If the infinite tail has a
    // period p, it has period gcd(p, d), so the minimal period divides d,
    // and shift-invariance by a divisor collapses the repetend.
    let d = rep.len();
    for p in 1..=d {
        if !d.is_multiple_of(p) {
            continue;
        }
        if (0..d).all(|i| rep[i] == rep[(i + p) % d]) {
            rep.truncate(p);
            break;
        }
    }
    // Shrink the preperiod: the boundary element may be absorbed whenever it
    // matches the last repetend element, rotating the repetend right.
    while let Some(last_pre) = pre.last() {
        let last_rep = rep.last().expect("nonempty repetend");
        if last_pre != last_rep {
            break;
        }
        let item = rep.pop().expect("nonempty repetend");
        rep.insert(0, item);
        pre.pop();
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u64(a, b) * b
    }
}

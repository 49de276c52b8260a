//! Packing a body of naturals by disjoint translates.
//!
//! A packing body `B` reduces to a forbidden-difference problem: a set `T`
//! of translation offsets keeps the translates `B + n` disjoint exactly
//! when no two offsets differ by a positive element of `B - B`. When they
//! are disjoint, the generating function of the packed union is the product
//! of the generating functions of `T` and `B`.

use crate::error::{Error, Result};
use crate::optimize::{optimize, SearchReport, SEARCH_CAVEAT};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::set::RationalSet;
use crate::words::{is_avoiding, DistanceSet};

/// A finite nonempty subset of the naturals, normalized so its minimum is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingBody {
    elements: Vec<u64>,
}

impl PackingBody {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut es: Vec<u64> = elements.into_iter().collect();
        es.sort_unstable();
        es.dedup();
        if es.is_empty() {
            return Err(Error::InvalidDistanceSet(
                "a packing body must be nonempty".into(),
            ));
        }
        let min = es[0];
        for e in &mut es {
            *e -= min;
        }
        Ok(PackingBody { elements: es })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn max_element(&self) -> u64 {
        *self.elements.last().unwrap()
    }

    /// `sum q^b` over the body.
    pub fn generating_polynomial(&self) -> Polynomial {
        let support: Vec<usize> = self.elements.iter().map(|&e| e as usize).collect();
        Polynomial::from_support(&support)
    }

    /// The positive pairwise differences; `None` for a singleton body,
    /// which constrains nothing.
    pub fn difference_set(&self) -> Result<Option<DistanceSet>> {
        let mut ds = Vec::new();
        for (i, &x) in self.elements.iter().enumerate() {
            for &y in &self.elements[..i] {
                ds.push(x - y);
            }
        }
        if ds.is_empty() {
            return Ok(None);
        }
        DistanceSet::new(ds).map(Some)
    }
}

/// Whether the translates `B + n` over `n` in `T` are pairwise disjoint.
///
/// Decided two ways and cross-checked: avoidance of the difference set of
/// `B`, and a direct coverage scan over a window that any overlap must hit.
pub fn is_translation_set(t: &RationalSet, b: &PackingBody) -> Result<bool> {
    let via_avoidance = match b.difference_set()? {
        None => true,
        Some(d) => is_avoiding(t, &d),
    };

    let span = b.max_element();
    let window = t.preperiod_len() + 2 * t.period_len() + 2 * span + 1;
    let mut covered = vec![false; (window + span + 1) as usize];
    let mut disjoint = true;
    for n in 0..window {
        if !t.contains(n) {
            continue;
        }
        for &e in b.elements() {
            let p = (n + e) as usize;
            if covered[p] {
                disjoint = false;
            }
            covered[p] = true;
        }
    }
    assert_eq!(
        via_avoidance, disjoint,
        "translation-set characterizations disagree"
    );
    Ok(via_avoidance)
}

/// Generating function of the packed union `U (B + n)` over `n` in `T`:
/// the product of the two generating functions, verified against a direct
/// membership computation of the union.
pub fn union_gf(t: &RationalSet, b: &PackingBody) -> Result<RationalFunction> {
    if !is_translation_set(t, b)? {
        return Err(Error::OverlappingTranslates);
    }
    let product = &t.generating_function()
        * &RationalFunction::from_poly(b.generating_polynomial());

    let member = |p: u64| b.elements().iter().any(|&e| p >= e && t.contains(p - e));
    let np = t.preperiod_len() + b.max_element();
    let d = t.period_len();
    let union = RationalSet::from_bits(
        (0..np).map(member).collect(),
        (np..np + d).map(member).collect(),
    );
    assert_eq!(
        union.generating_function(),
        product,
        "union generating function must factor"
    );
    Ok(product)
}

/// A packing run: the reduction, the search report for the offsets, and the
/// generating function of the packed union.
#[derive(Debug, Clone)]
pub struct PackReport {
    pub body: PackingBody,
    pub distances: Option<DistanceSet>,
    pub search: SearchReport,
    pub union: RationalFunction,
}

/// Search for the germ-densest packing of the naturals by `b` within the
/// period bound and preperiod window.
pub fn optimize_packing(b: &PackingBody, period_bound: u32, window: u32) -> Result<PackReport> {
    let distances = b.difference_set()?;
    let search = match &distances {
        None => SearchReport {
            champion: RationalSet::naturals(),
            period_bound,
            preperiod_window: window,
            candidates_compared: 1,
            swaps_examined: 0,
            lemma6_pass: true,
            caveat: SEARCH_CAVEAT.to_string(),
        },
        Some(d) => optimize(d, period_bound, window)?,
    };
    assert!(
        is_translation_set(&search.champion, b)?,
        "search champion must be a translation set"
    );
    let union = union_gf(&search.champion, b)?;
    Ok(PackReport {
        body: b.clone(),
        distances,
        search,
        union,
    })
}

//! Exact rational functions of `q` and their germ data at `q = 1`.
//!
//! A value is kept in canonical form: numerator and denominator coprime,
//! and the denominator's lowest-degree nonzero coefficient equal to 1.
//! With that normalization, equality is structural.
//!
//! The germ of a nonzero rational function at `1^-` is read off from its
//! Laurent expansion in `t = 1 - q`: the order of vanishing (negative for
//! poles), the coefficients, and in particular the sign of the leading
//! coefficient, which is the sign of the function just left of 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::{sign, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    /// Build `numerator / denominator` in canonical form.
    ///
    /// Panics if the denominator is the zero polynomial.
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let mut f = RationalFunction {
            numerator,
            denominator,
        };
        f.normalize();
        f
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    pub fn constant(c: Rat) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    /// `1 / (1 - q^n)`.
    pub fn geometric(n: usize) -> Self {
        RationalFunction::new(Polynomial::one(), Polynomial::one_minus_q_power(n))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.denominator = Polynomial::one();
            return;
        }
        let g = self.numerator.gcd(&self.denominator);
        if g.degree() != Some(0) {
            self.numerator = self.numerator.div_exact(&g);
            self.denominator = self.denominator.div_exact(&g);
        }
        let low = self
            .denominator
            .lowest_nonzero()
            .expect("nonzero denominator");
        let c = self.denominator.coeff(low);
        let inv = c.recip();
        self.numerator = self.numerator.scale(&inv);
        self.denominator = self.denominator.scale(&inv);
    }

    /// Exact division; fails on the zero divisor.
    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::new(
            &self.numerator * &rhs.denominator,
            &self.denominator * &rhs.numerator,
        ))
    }

    /// Exact evaluation at a point where the denominator does not vanish.
    pub fn eval(&self, q: &Rat) -> Option<Rat> {
        let d = self.denominator.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(q) / d)
    }

    /// Order of vanishing at `q = 1`; negative values are pole orders.
    ///
    /// This is the unique `v` with `self = (1-q)^v * g` where `g` is finite
    /// and nonzero at 1. Computed by exact repeated synthetic division of
    /// numerator and denominator by `1 - q`.
    pub fn order_at_one(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let (vn, _) = self.numerator.order_at_one().expect("nonzero numerator");
        let (vd, _) = self.denominator.order_at_one().expect("nonzero denominator");
        Ok(vn as i64 - vd as i64)
    }

    /// Sign of the function on some interval `(1 - eps, 1)`: -1, 0, or +1.
    ///
    /// Zero exactly for the zero function; otherwise the sign of the leading
    /// Laurent coefficient at 1.
    pub fn sign_near_one(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (_, num_lead) = self.numerator.order_at_one().expect("nonzero numerator");
        let (_, den_lead) = self.denominator.order_at_one().expect("nonzero denominator");
        sign(&num_lead) * sign(&den_lead)
    }

    /// Laurent coefficients `a_v ... a_depth` in powers of `t = 1 - q`.
    pub fn laurent_at_one(&self, depth: i64) -> Result<GermExpansion> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let nt = self.numerator.compose_one_minus_t();
        let dt = self.denominator.compose_one_minus_t();
        let vn = nt.lowest_nonzero().expect("nonzero numerator") as i64;
        let vd = dt.lowest_nonzero().expect("nonzero denominator") as i64;
        let order = vn - vd;
        if depth < order {
            return Err(Error::DepthBelowOrder { depth, order });
        }
        let terms = (depth - order + 1) as usize;
        // Power-series division of the deflated numerator by the deflated
        // denominator, both with nonzero constant term.
        let n_at = |i: usize| nt.coeff(vn as usize + i);
        let d_at = |i: usize| dt.coeff(vd as usize + i);
        let d0 = d_at(0);
        let mut coeffs: Vec<Rat> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = n_at(k);
            for (i, c) in coeffs.iter().enumerate() {
                acc -= c * d_at(k - i);
            }
            coeffs.push(acc / &d0);
        }
        Ok(GermExpansion { order, coeffs })
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.numerator * &rhs.denominator) - &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == Polynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}

/// Laurent data of a nonzero rational function at `q = 1`, in `t = 1 - q`.
///
/// `coeffs[i]` is the coefficient `a_{order + i}`; the leading coefficient
/// `a_order` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermExpansion {
    pub order: i64,
    pub coeffs: Vec<Rat>,
}

impl GermExpansion {
    /// Coefficient `a_n`, zero outside the stored range.
    pub fn coeff(&self, n: i64) -> Rat {
        if n < self.order {
            return Rat::zero();
        }
        self.coeffs
            .get((n - self.order) as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Depth of the expansion (index of the last stored coefficient).
    pub fn depth(&self) -> i64 {
        self.order + self.coeffs.len() as i64 - 1
    }

    /// Rebuild the truncated series as an exact rational function of `q`.
    ///
    /// Subtracting this from the expanded function leaves a remainder whose
    /// order of vanishing at 1 exceeds `depth()`.
    pub fn recompose(&self) -> RationalFunction {
        let shift = (-self.order).max(0) as usize;
        // Sum a_n (1-q)^(n+shift), all exponents now nonnegative, over
        // denominator (1-q)^shift.
        let one_minus_q = Polynomial::one_minus_q_power(1);
        let mut num = Polynomial::zero();
        let mut pow = Polynomial::one();
        let mut k = 0usize;
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (self.order + i as i64 + shift as i64) as usize;
            while k < e {
                pow = &pow * &one_minus_q;
                k += 1;
            }
            num = &num + &pow.scale(c);
        }
        let mut den = Polynomial::one();
        for _ in 0..shift {
            den = &den * &one_minus_q;
        }
        RationalFunction::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ratio};

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    fn geom(n: usize) -> RationalFunction {
        RationalFunction::geometric(n)
    }

    #[test]
    fn telescoping_difference_is_one() {
        // 1/(1-q) - q/(1-q) = 1
        let a = geom(1);
        let b = RationalFunction::new(Polynomial::q_power(1), Polynomial::one_minus_q_power(1));
        assert_eq!(&a - &b, RationalFunction::one());
    }

    #[test]
    fn factor_cancellation() {
        // 1/(1-q^2) * (1+q) = 1/(1-q)
        let prod = &geom(2) * &RationalFunction::from_poly(poly(&[1, 1]));
        assert_eq!(prod, geom(1));
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // 1/(1-q^3) - q^2/(1-q^3) = (1-q^2)/(1-q^3) = (1+q)/(1+q+q^2)
        let a = geom(3);
        let b = RationalFunction::new(Polynomial::q_power(2), Polynomial::one_minus_q_power(3));
        let diff = &a - &b;
        assert_eq!(
            diff,
            RationalFunction::new(poly(&[1, 1]), poly(&[1, 1, 1]))
        );
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(
            geom(1).checked_div(&RationalFunction::zero()),
            Err(Error::DivisionByZero)
        );
        let q = RationalFunction::from_poly(Polynomial::q_power(1));
        assert_eq!(
            geom(2).checked_div(&q).unwrap(),
            RationalFunction::new(Polynomial::one(), &Polynomial::q_power(1) * &Polynomial::one_minus_q_power(2))
        );
    }

    #[test]
    fn order_examples() {
        assert_eq!(geom(1).order_at_one(), Ok(-1));
        let sq = &Polynomial::one_minus_q_power(1) * &Polynomial::one_minus_q_power(1);
        assert_eq!(RationalFunction::from_poly(sq).order_at_one(), Ok(2));
        // (1-q^2)/(1-q^3) has value 2/3 at 1, so order 0.
        let f = RationalFunction::new(
            Polynomial::one_minus_q_power(2),
            Polynomial::one_minus_q_power(3),
        );
        assert_eq!(f.order_at_one(), Ok(0));
        assert_eq!(f.eval(&int(1)).unwrap(), ratio(2, 3));
        assert_eq!(RationalFunction::zero().order_at_one(), Err(Error::ZeroFunction));
    }

    #[test]
    fn laurent_examples() {
        // 1/(1+q) = 1/2 + t/4 + ...
        let f = RationalFunction::new(Polynomial::one(), poly(&[1, 1]));
        let e = f.laurent_at_one(1).unwrap();
        assert_eq!(e.order, 0);
        assert_eq!(e.coeffs, vec![ratio(1, 2), ratio(1, 4)]);

        // 1/(1-q^2) = 1/(2t) + 1/4 + ...
        let e = geom(2).laurent_at_one(0).unwrap();
        assert_eq!(e.order, -1);
        assert_eq!(e.coeffs, vec![ratio(1, 2), ratio(1, 4)]);

        // Constant 5 at depth 2.
        let e = RationalFunction::constant(int(5)).laurent_at_one(2).unwrap();
        assert_eq!(e.order, 0);
        assert_eq!(e.coeffs, vec![int(5), int(0), int(0)]);
    }

    #[test]
    fn laurent_depth_below_order_is_rejected() {
        let f = RationalFunction::from_poly(
            &Polynomial::one_minus_q_power(1) * &Polynomial::one_minus_q_power(1),
        );
        assert_eq!(
            f.laurent_at_one(1),
            Err(Error::DepthBelowOrder { depth: 1, order: 2 })
        );
    }

    #[test]
    fn sign_examples() {
        // q - q^12 > 0 just left of 1.
        let f = RationalFunction::from_poly(
            &Polynomial::q_power(1) - &Polynomial::q_power(12),
        );
        assert_eq!(f.sign_near_one(), 1);
        assert_eq!(RationalFunction::zero().sign_near_one(), 0);
        // (q - 1)/(1 - q^2) < 0 near 1.
        let g = RationalFunction::new(poly(&[-1, 1]), Polynomial::one_minus_q_power(2));
        assert_eq!(g.sign_near_one(), -1);
    }

    #[test]
    fn recompose_truncation_leaves_higher_order() {
        let f = &geom(2) * &RationalFunction::new(poly(&[1, 0, 3]), poly(&[2, 1]));
        let depth = 4;
        let e = f.laurent_at_one(depth).unwrap();
        let rem = &f - &e.recompose();
        assert!(rem.is_zero() || rem.order_at_one().unwrap() > depth);
    }
}

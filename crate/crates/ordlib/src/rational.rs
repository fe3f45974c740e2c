//! Exact rational arithmetic: interval bounds and bounded-denominator
//! reconstruction. All values are big-integer fractions in lowest terms;
//! no floating point is used anywhere in this crate.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive};

pub use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers. Panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Convert to a `(numerator, denominator)` pair of machine integers when both
/// fit; used for serialization.
pub fn to_i64_pair(r: &Rational) -> Option<(i64, i64)> {
    Some((r.numer().to_i64()?, r.denom().to_i64()?))
}

/// A closed interval `[lo, hi]` of exact rationals with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Self { lo, hi }
    }

    pub fn singleton(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn translate(&self, by: &Rational) -> Self {
        Self {
            lo: &self.lo + by,
            hi: &self.hi + by,
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// All rationals in `interval` with denominator at most `max_denominator`,
/// in lowest terms, sorted ascending. Exhaustive over denominators, so this
/// is the reference enumeration for reconstruction.
pub fn with_denominator_at_most(interval: &RationalInterval, max_denominator: u32) -> Vec<Rational> {
    assert!(max_denominator >= 1);
    let mut found = BTreeSet::new();
    for q in 1..=max_denominator {
        let q = BigInt::from(q);
        let lo = (interval.lo() * &q).ceil().to_integer();
        let hi = (interval.hi() * &q).floor().to_integer();
        let mut p = lo;
        while p <= hi {
            found.insert(Rational::new(p.clone(), q.clone()));
            p += 1;
        }
    }
    found.into_iter().collect()
}

/// The unique smallest-denominator rational in a closed interval, found by
/// walking the Stern-Brocot tree (continued-fraction descent). With several
/// integers in range, returns the least one.
pub fn simplest_in_interval(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let f = lo.floor();
    // both endpoints strictly inside (f, f+1): recurse on the reciprocal gap
    let inner = simplest_in_interval(&(hi - &f).recip(), &(lo - &f).recip());
    f + inner.recip()
}

/// Floor of a rational as a `BigInt`.
pub fn rational_floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// True when `x` is an integer; returns it.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

/// Reduce `x` mod 1 into `[0, 1)`.
pub fn mod_one(x: &Rational) -> Rational {
    let shifted = x - Rational::from_integer(rational_floor(x));
    debug_assert!(!shifted.is_negative() && shifted < Rational::one());
    shifted
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_basics() {
        let iv = RationalInterval::new(rational(1, 3), rational(5, 12));
        assert_eq!(iv.width(), rational(1, 12));
        assert!(iv.contains(&rational(1, 3)));
        assert!(iv.contains(&rational(2, 5)));
        assert!(!iv.contains(&rational(1, 2)));
        assert!(iv.intersects(&RationalInterval::new(rational(2, 5), rational(1, 1))));
        assert!(!iv.intersects(&RationalInterval::new(rational(1, 2), rational(1, 1))));
    }

    #[test]
    #[should_panic]
    fn interval_rejects_reversed_endpoints() {
        let _ = RationalInterval::new(rational(1, 2), rational(1, 3));
    }

    #[test]
    fn bounded_denominator_enumeration() {
        // [-1/12, 1/12] with denominators <= 6 holds only 0
        let iv = RationalInterval::new(rational(-1, 12), rational(1, 12));
        assert_eq!(with_denominator_at_most(&iv, 6), vec![rational(0, 1)]);

        // [1/3, 5/12] with denominators <= 10: enumerated by hand,
        // 5/12 itself is excluded (denominator 12)
        let iv = RationalInterval::new(rational(1, 3), rational(5, 12));
        let got = with_denominator_at_most(&iv, 10);
        let expect: Vec<Rational> = [(1, 3), (3, 8), (2, 5)]
            .iter()
            .map(|&(p, q)| rational(p, q))
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn simplest_matches_enumeration_minimum() {
        // dual route: the Stern-Brocot walk and the exhaustive enumeration
        // must agree on the minimal denominator
        let cases = [
            (rational(1, 3), rational(5, 12)),
            (rational(-1, 12), rational(1, 12)),
            (rational(7, 10), rational(5, 7)),
            (rational(-5, 3), rational(-3, 2)),
            (rational(2, 1), rational(3, 1)),
        ];
        for (lo, hi) in cases {
            let iv = RationalInterval::new(lo.clone(), hi.clone());
            let sb = simplest_in_interval(&lo, &hi);
            assert!(iv.contains(&sb));
            let all = with_denominator_at_most(&iv, 64);
            let min_den = all.iter().map(|r| r.denom().clone()).min().unwrap();
            assert_eq!(sb.denom(), &min_den, "interval [{lo}, {hi}]");
        }
    }

    #[test]
    fn mod_one_representative() {
        assert_eq!(mod_one(&rational(7, 5)), rational(2, 5));
        assert_eq!(mod_one(&rational(-1, 5)), rational(4, 5));
        assert_eq!(mod_one(&rational(3, 1)), rational(0, 1));
    }
}

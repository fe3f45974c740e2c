//! Abstract machinery for left-ordered groups: order oracles, floors against
//! a central cofinal element, and algebraic translation-number bounds.
//!
//! A left ordering is handled through its positive cone: a group instance
//! reports the sign of any element relative to the identity, and comparison
//! of two elements is always derived as `sign(g⁻¹ h)`, which makes
//! left-invariance structural rather than a test obligation.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{rational, Rational, RationalInterval};

pub mod certificate;
pub mod cocycle;
pub mod lift;

/// Default exponent budget for the cofinality search in [`floor`].
pub const DEFAULT_FLOOR_BUDGET: i64 = 1 << 20;

/// Sign of a group element relative to a left ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderSign {
    Negative,
    Identity,
    Positive,
}

impl OrderSign {
    pub fn reverse(self) -> Self {
        match self {
            OrderSign::Negative => OrderSign::Positive,
            OrderSign::Identity => OrderSign::Identity,
            OrderSign::Positive => OrderSign::Negative,
        }
    }

    pub fn from_cmp(ord: std::cmp::Ordering) -> Self {
        match ord {
            std::cmp::Ordering::Less => OrderSign::Negative,
            std::cmp::Ordering::Equal => OrderSign::Identity,
            std::cmp::Ordering::Greater => OrderSign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == OrderSign::Positive
    }
}

impl fmt::Display for OrderSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSign::Negative => write!(f, "negative"),
            OrderSign::Identity => write!(f, "identity"),
            OrderSign::Positive => write!(f, "positive"),
        }
    }
}

/// A group presented as an instance value (so that families like B_n or ℤ/n
/// parameterised by a size all share one element type) with an equality
/// oracle. Elements are immutable; every operation returns fresh values.
pub trait Group: Clone {
    type Elem: Clone + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, g: &Self::Elem) -> Self::Elem;

    /// Equality oracle. For braid groups this solves the word problem, so it
    /// is not structural equality of representatives.
    fn elems_equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn is_identity(&self, g: &Self::Elem) -> bool {
        self.elems_equal(g, &self.identity())
    }

    /// `g^k` by binary powering; negative exponents invert first.
    fn pow(&self, g: &Self::Elem, k: i64) -> Self::Elem {
        let (mut base, mut e) = if k < 0 {
            (self.inv(g), k.unsigned_abs())
        } else {
            (g.clone(), k as u64)
        };
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.op(&base, &base);
            }
        }
        acc
    }
}

/// A group with a left ordering given by its sign oracle.
///
/// The oracle may be resource-bounded (handle reduction caps word growth),
/// so sign queries are fallible and budget overruns surface as typed errors.
pub trait OrderedGroup: Group {
    fn sign(&self, g: &Self::Elem) -> Result<OrderSign>;

    /// Derived comparison: `Positive` means `a < b`, `Negative` means `a > b`.
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Result<OrderSign> {
        self.sign(&self.op(&self.inv(a), b))
    }
}

/// A positive central element assumed cofinal for the ordering: every group
/// element sits between two of its powers. Construct with [`CentralCofinal::assume`]
/// when cofinality is known (e.g. the full twist in a braid group), or run
/// [`verify_central_cofinal`] to spot-check the invariants on samples.
#[derive(Debug, Clone)]
pub struct CentralCofinal<E> {
    z: E,
}

impl<E: Clone> CentralCofinal<E> {
    /// Wrap an element whose positivity, centrality and cofinality the caller
    /// vouches for.
    pub fn assume(z: E) -> Self {
        Self { z }
    }

    pub fn element(&self) -> &E {
        &self.z
    }
}

/// Check positivity, centrality and cofinality of `z` against samples.
/// A cofinality-budget violation is an error, never silent.
pub fn verify_central_cofinal<G: OrderedGroup>(
    group: &G,
    z: G::Elem,
    samples: &[G::Elem],
    budget: i64,
) -> Result<CentralCofinal<G::Elem>> {
    if group.sign(&z)? != OrderSign::Positive {
        return Err(Error::InvalidCofinalElement {
            reason: "element is not positive".into(),
        });
    }
    let candidate = CentralCofinal::assume(z);
    for g in samples {
        let zg = group.op(candidate.element(), g);
        let gz = group.op(g, candidate.element());
        if !group.elems_equal(&zg, &gz) {
            return Err(Error::InvalidCofinalElement {
                reason: format!("does not commute with sample {g:?}"),
            });
        }
        floor(group, &candidate, g, budget)?;
    }
    Ok(candidate)
}

/// The unique integer `k` with `z^k <= g < z^(k+1)`.
///
/// Search: exponential doubling outward from 0 to bracket `g`, then binary
/// search; O(log |k|) sign queries. Fails with `CofinalityBudgetExceeded`
/// when no bracket exists within `|k| <= budget`, signalling that `z` may not
/// be cofinal for this oracle or the budget is too small.
pub fn floor<G: OrderedGroup>(
    group: &G,
    z: &CentralCofinal<G::Elem>,
    g: &G::Elem,
    budget: i64,
) -> Result<i64> {
    assert!(budget >= 0);
    // pred(k) = (z^k <= g), antitone in k; the floor is the largest k with pred(k)
    let pred = |k: i64| -> Result<bool> {
        let probe = group.op(&group.pow(z.element(), -k), g);
        Ok(group.sign(&probe)? != OrderSign::Negative)
    };
    let (mut lo, mut hi);
    if pred(0)? {
        // floor >= 0: push hi up until the bracket closes
        lo = 0;
        hi = 1;
        while pred(hi)? {
            lo = hi;
            if hi >= budget {
                return Err(Error::CofinalityBudgetExceeded { budget });
            }
            hi = (hi * 2).min(budget);
        }
    } else {
        hi = 0;
        lo = -1;
        while !pred(lo)? {
            hi = lo;
            if lo <= -budget {
                return Err(Error::CofinalityBudgetExceeded { budget });
            }
            lo = (lo * 2).max(-budget);
        }
    }
    // invariant: pred(lo) && !pred(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Re-evaluate the two sign queries that define `floor(g) = k`.
pub fn floor_holds<G: OrderedGroup>(
    group: &G,
    z: &CentralCofinal<G::Elem>,
    g: &G::Elem,
    k: i64,
) -> Result<bool> {
    let low = group.op(&group.pow(z.element(), -k), g);
    let high = group.op(&group.pow(z.element(), -(k + 1)), g);
    Ok(group.sign(&low)? != OrderSign::Negative && group.sign(&high)? == OrderSign::Negative)
}

/// Result of [`translation_bounds`]: the enclosing interval plus the floor
/// evidence `(n, [g^n])` it was computed from.
#[derive(Debug, Clone)]
pub struct TranslationBounds {
    pub interval: RationalInterval,
    pub floors: Vec<(u32, i64)>,
}

/// Two-sided bounds on the algebraic translation number of `g`.
///
/// Powers are computed by iterated multiplication. For every `n`,
/// `[g^n] <= n·τ < [g^n] + 1`, so `max [g^n]/n` and `min ([g^n]+1)/n` both
/// bound τ; the floor sequence is superadditive, so the lower bound converges.
/// Intervals for nested `n_max` are nested.
pub fn translation_bounds<G: OrderedGroup>(
    group: &G,
    z: &CentralCofinal<G::Elem>,
    g: &G::Elem,
    n_max: u32,
    budget: i64,
) -> Result<TranslationBounds> {
    assert!(n_max >= 1);
    let mut floors = Vec::with_capacity(n_max as usize);
    let mut power = g.clone();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for n in 1..=n_max {
        if n > 1 {
            power = group.op(&power, g);
        }
        let k = floor(group, z, &power, budget)?;
        floors.push((n, k));
        let this_lo = rational(k, n as i64);
        let this_hi = rational(k + 1, n as i64);
        if lo.as_ref().is_none_or(|cur| &this_lo > cur) {
            lo = Some(this_lo);
        }
        if hi.as_ref().is_none_or(|cur| &this_hi < cur) {
            hi = Some(this_hi);
        }
    }
    Ok(TranslationBounds {
        interval: RationalInterval::new(lo.unwrap(), hi.unwrap()),
        floors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{IntAdd, Z2Slope};

    #[test]
    fn compare_on_integers() {
        let g = IntAdd;
        assert_eq!(g.compare(&2, &5).unwrap(), OrderSign::Positive); // 2 < 5
        assert_eq!(g.compare(&5, &2).unwrap(), OrderSign::Negative);
        assert_eq!(g.compare(&7, &7).unwrap(), OrderSign::Identity);
    }

    #[test]
    fn compare_on_z2_slope_cone() {
        // cone {(x,y): x+2y > 0, tie broken by y > 0}: (-2,1) has x+2y = 0, y > 0
        let g = Z2Slope::new(2, 1);
        assert_eq!(g.sign(&(-2, 1)).unwrap(), OrderSign::Positive);
        assert_eq!(g.compare(&(0, 0), &(-2, 1)).unwrap(), OrderSign::Positive);
        assert_eq!(g.sign(&(2, -1)).unwrap(), OrderSign::Negative);
        assert_eq!(g.sign(&(0, 0)).unwrap(), OrderSign::Identity);
    }

    #[test]
    fn floor_on_integers_is_the_element() {
        let g = IntAdd;
        let z = CentralCofinal::assume(1i64);
        assert_eq!(floor(&g, &z, &5, 64).unwrap(), 5);
        assert_eq!(floor(&g, &z, &0, 64).unwrap(), 0);
        assert_eq!(floor(&g, &z, &-3, 64).unwrap(), -3);
    }

    #[test]
    fn floor_on_integers_matches_euclidean_division() {
        // independent oracle: with z = m, the floor of g is g div m
        let g = IntAdd;
        for m in [1i64, 2, 3, 7] {
            let z = CentralCofinal::assume(m);
            for v in -50..=50 {
                let k = floor(&g, &z, &v, 1 << 10).unwrap();
                assert_eq!(k, v.div_euclid(m), "v={v} m={m}");
                assert!(floor_holds(&g, &z, &v, k).unwrap());
            }
        }
    }

    #[test]
    fn floor_on_z2_slope() {
        // slope-2 order, z=(1,0): floor((0,1)) = 2 since (-2,1) is positive
        // (tie on x+2y=0, y>0) and (-3,1) is negative
        let g = Z2Slope::new(2, 1);
        let z = CentralCofinal::assume((1i64, 0i64));
        assert_eq!(floor(&g, &z, &(0, 1), 1 << 10).unwrap(), 2);
    }

    #[test]
    fn floor_budget_violation_is_typed() {
        let g = IntAdd;
        let z = CentralCofinal::assume(1i64);
        let err = floor(&g, &z, &100, 10).unwrap_err();
        assert!(matches!(err, Error::CofinalityBudgetExceeded { budget: 10 }));
        assert!(err.is_resource_limit());
    }

    #[test]
    fn translation_bounds_of_z_itself() {
        let g = IntAdd;
        let z = CentralCofinal::assume(1i64);
        for n_max in [1u32, 4, 10] {
            let tb = translation_bounds(&g, &z, &1, n_max, 64).unwrap();
            assert_eq!(*tb.interval.lo(), rational(1, 1));
            assert_eq!(*tb.interval.hi(), rational(n_max as i64 + 1, n_max as i64));
        }
    }

    #[test]
    fn translation_bounds_on_z2_slope() {
        // floors of (0,n) are 2n, so N=4 gives [2, 9/4]
        let g = Z2Slope::new(2, 1);
        let z = CentralCofinal::assume((1i64, 0i64));
        let tb = translation_bounds(&g, &z, &(0, 1), 4, 1 << 10).unwrap();
        assert_eq!(*tb.interval.lo(), rational(2, 1));
        assert_eq!(*tb.interval.hi(), rational(9, 4));
        assert_eq!(tb.floors, vec![(1, 2), (2, 4), (3, 6), (4, 8)]);
    }

    #[test]
    fn translation_bounds_nest() {
        let g = Z2Slope::new(1, 3);
        let z = CentralCofinal::assume((1i64, 0i64));
        let e = (2i64, -1i64);
        let wide = translation_bounds(&g, &z, &e, 3, 1 << 10).unwrap();
        let tight = translation_bounds(&g, &z, &e, 9, 1 << 10).unwrap();
        assert!(wide.interval.contains_interval(&tight.interval));
    }

    #[test]
    fn verify_central_cofinal_accepts_and_rejects() {
        let g = IntAdd;
        let samples: Vec<i64> = (-5..=5).collect();
        assert!(verify_central_cofinal(&g, 2, &samples, 64).is_ok());
        let err = verify_central_cofinal(&g, -1, &samples, 64).unwrap_err();
        assert!(matches!(err, Error::InvalidCofinalElement { .. }));
    }

    #[test]
    fn verify_central_cofinal_rejects_noncentral() {
        // σ₁ is positive in the Dehornoy order but does not commute with σ₂
        let group = crate::braid::Braid::new(3);
        let sigma1 = crate::braid::BraidWord::generator(3, 1).unwrap();
        let sigma2 = crate::braid::BraidWord::generator(3, 2).unwrap();
        let err = verify_central_cofinal(&group, sigma1, &[sigma2], 64).unwrap_err();
        assert!(matches!(err, Error::InvalidCofinalElement { .. }));
    }

    #[test]
    fn verify_central_cofinal_accepts_the_full_twist() {
        let group = crate::braid::Braid::new(3);
        let samples = vec![
            crate::braid::BraidWord::generator(3, 1).unwrap(),
            crate::braid::BraidWord::generator(3, 2).unwrap(),
            crate::braid::BraidWord::from_letters(3, [1, -2, 1]).unwrap(),
        ];
        assert!(verify_central_cofinal(&group, group.delta_squared(), &samples, 64).is_ok());
    }

    #[test]
    fn superadditivity_of_floors_on_fixtures() {
        let g = Z2Slope::new(3, 2);
        let z = CentralCofinal::assume((1i64, 0i64));
        for e in [(0i64, 1i64), (1, 1), (-1, 2), (3, -1)] {
            let tb = translation_bounds(&g, &z, &e, 8, 1 << 10).unwrap();
            let floors: Vec<i64> = tb.floors.iter().map(|&(_, k)| k).collect();
            for n in 1..=8usize {
                for m in 1..=(8 - n) {
                    assert!(floors[n + m - 1] >= floors[n - 1] + floors[m - 1]);
                }
            }
        }
    }
}

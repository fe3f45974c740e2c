//! The left-ordered central extension of a circularly-ordered group, and
//! algebraic rotation numbers computed through it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::order::cocycle::CircularOrder;
use crate::order::{
    translation_bounds, CentralCofinal, Group, OrderSign, OrderedGroup,
};
use crate::rational::{mod_one, rational_floor, Rational, RationalInterval};

/// Element `(g, n)` of the lift: a base element with an integer height.
/// Heights are unbounded integers so power accumulation never overflows.
#[derive(Debug, Clone)]
pub struct Lifted<E> {
    pub base: E,
    pub height: BigInt,
}

impl<E: fmt::Display> fmt::Display for Lifted<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.height)
    }
}

/// `G̃_f = G × ℤ` with multiplication twisted by the cocycle:
/// `(g,n)(h,m) = (gh, n+m+f(g,h))`. Carries the left order whose positive
/// cone is the nonidentity elements of nonnegative height, and the canonical
/// positive central cofinal element `z = (id, 1)`.
pub struct LiftGroup<'a, C: CircularOrder> {
    pub base: &'a C,
}

impl<'a, C: CircularOrder> LiftGroup<'a, C> {
    pub fn new(base: &'a C) -> Self {
        Self { base }
    }

    pub fn lift(&self, g: &C::Elem, height: i64) -> Lifted<C::Elem> {
        Lifted {
            base: g.clone(),
            height: BigInt::from(height),
        }
    }

    /// The canonical central cofinal element `(id, 1)`.
    pub fn z(&self) -> Lifted<C::Elem> {
        self.lift(&self.base.identity(), 1)
    }
}

impl<C: CircularOrder> Clone for LiftGroup<'_, C> {
    fn clone(&self) -> Self {
        Self { base: self.base }
    }
}

impl<C: CircularOrder> Group for LiftGroup<'_, C> {
    type Elem = Lifted<C::Elem>;

    fn identity(&self) -> Self::Elem {
        self.lift(&self.base.identity(), 0)
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let twist = self.base.cocycle(&a.base, &b.base);
        Lifted {
            base: self.base.op(&a.base, &b.base),
            height: &a.height + &b.height + BigInt::from(twist),
        }
    }

    fn inv(&self, g: &Self::Elem) -> Self::Elem {
        let base_inv = self.base.inv(&g.base);
        let twist = self.base.cocycle(&g.base, &base_inv);
        Lifted {
            base: base_inv,
            height: -&g.height - BigInt::from(twist),
        }
    }

    fn elems_equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.height == b.height && self.base.elems_equal(&a.base, &b.base)
    }
}

impl<C: CircularOrder> OrderedGroup for LiftGroup<'_, C> {
    fn sign(&self, g: &Self::Elem) -> Result<OrderSign> {
        // positive cone {(g,n) | n >= 0} minus the identity: the identity
        // itself gets sign Identity, as a positive cone never contains it
        if g.height.is_zero() && self.base.is_identity(&g.base) {
            Ok(OrderSign::Identity)
        } else if g.height.is_negative() {
            Ok(OrderSign::Negative)
        } else {
            Ok(OrderSign::Positive)
        }
    }
}

/// Bounds on the rotation number of `g`, as the translation number of the
/// height-0 lift of `g` reduced mod 1 into `[0, 1)`.
///
/// When some power of `g` hits the identity of the base group (always the
/// case in finite fixtures) the lift power is a pure height `(id, h)` and the
/// rotation number is exactly `h/m`; the result is then a singleton.
pub fn rotation_number<C: CircularOrder>(
    circ: &C,
    g: &C::Elem,
    n_max: u32,
) -> Result<RationalInterval> {
    assert!(n_max >= 1);
    let lift = LiftGroup::new(circ);
    let x = lift.lift(g, 0);

    let mut power = x.clone();
    for m in 1..=n_max {
        if m > 1 {
            power = lift.op(&power, &x);
        }
        if circ.is_identity(&power.base) {
            let exact = Rational::new(power.height.clone(), BigInt::from(m));
            return Ok(RationalInterval::singleton(mod_one(&exact)));
        }
    }

    // heights of x^m stay within m, so the floor search budget is small
    let z = CentralCofinal::assume(lift.z());
    let tb = translation_bounds(&lift, &z, &x, n_max, i64::from(n_max) + 2)?;
    let shift = Rational::from_integer(-rational_floor(tb.interval.lo()));
    Ok(tb.interval.translate(&shift))
}

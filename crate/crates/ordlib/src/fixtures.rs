//! Small fixture groups for exhaustive testing: ℤ with its standard order,
//! ℤ² with rational-slope orderings, and ℤ/n with its standard circular
//! ordering given by the addition carry.

use crate::error::Result;
use crate::order::cocycle::CircularOrder;
use crate::order::{Group, OrderSign, OrderedGroup};

/// The integers under addition with the usual order; `z = 1` is central and
/// cofinal.
#[derive(Debug, Clone, Copy)]
pub struct IntAdd;

impl Group for IntAdd {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn op(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn inv(&self, g: &i64) -> i64 {
        -g
    }

    fn elems_equal(&self, a: &i64, b: &i64) -> bool {
        a == b
    }
}

impl OrderedGroup for IntAdd {
    fn sign(&self, g: &i64) -> Result<OrderSign> {
        Ok(OrderSign::from_cmp(g.cmp(&0)))
    }
}

/// ℤ² ordered by a rational-slope positive cone with a lexicographic
/// tie-break on the second coordinate:
/// `(x, y) > 0` iff `den·x + num·y > 0`, or the form vanishes and `y > 0`.
#[derive(Debug, Clone, Copy)]
pub struct Z2Slope {
    num: i64,
    den: i64,
}

impl Z2Slope {
    /// Ordering whose cone boundary is the line of slope `-den/num`… stated
    /// directly: the form is `den·x + num·y`, so `Z2Slope::new(2, 1)` orders
    /// by `x + 2y` with ties broken by `y`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0, "slope denominator must be positive");
        Self { num, den }
    }

    fn form(&self, g: &(i64, i64)) -> i128 {
        i128::from(self.den) * i128::from(g.0) + i128::from(self.num) * i128::from(g.1)
    }
}

impl Group for Z2Slope {
    type Elem = (i64, i64);

    fn identity(&self) -> (i64, i64) {
        (0, 0)
    }

    fn op(&self, a: &(i64, i64), b: &(i64, i64)) -> (i64, i64) {
        (a.0 + b.0, a.1 + b.1)
    }

    fn inv(&self, g: &(i64, i64)) -> (i64, i64) {
        (-g.0, -g.1)
    }

    fn elems_equal(&self, a: &(i64, i64), b: &(i64, i64)) -> bool {
        a == b
    }
}

impl OrderedGroup for Z2Slope {
    fn sign(&self, g: &(i64, i64)) -> Result<OrderSign> {
        Ok(match self.form(g).cmp(&0) {
            std::cmp::Ordering::Greater => OrderSign::Positive,
            std::cmp::Ordering::Less => OrderSign::Negative,
            std::cmp::Ordering::Equal => OrderSign::from_cmp(g.1.cmp(&0)),
        })
    }
}

/// ℤ/n with its standard circular ordering: the cocycle is the carry of
/// addition on canonical representatives `0..n`.
#[derive(Debug, Clone, Copy)]
pub struct ZMod {
    modulus: u64,
}

impl ZMod {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 1);
        Self { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.modulus).collect()
    }
}

impl Group for ZMod {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        debug_assert!(*a < self.modulus && *b < self.modulus);
        (a + b) % self.modulus
    }

    fn inv(&self, g: &u64) -> u64 {
        debug_assert!(*g < self.modulus);
        (self.modulus - g) % self.modulus
    }

    fn elems_equal(&self, a: &u64, b: &u64) -> bool {
        a == b
    }
}

impl CircularOrder for ZMod {
    fn cocycle(&self, g: &u64, h: &u64) -> u8 {
        debug_assert!(*g < self.modulus && *h < self.modulus);
        u8::from(g + h >= self.modulus)
    }
}

/// A dense cocycle table over ℤ/n: the group is the same, but the cocycle is
/// stored entry by entry, which makes mutated-table experiments and
/// exhaustive axiom checks direct.
#[derive(Debug, Clone)]
pub struct CocycleTable {
    group: ZMod,
    values: Vec<u8>,
}

impl CocycleTable {
    /// The carry table of ℤ/n.
    pub fn carry(modulus: u64) -> Self {
        let group = ZMod::new(modulus);
        let mut values = vec![0u8; (modulus * modulus) as usize];
        for g in 0..modulus {
            for h in 0..modulus {
                values[(g * modulus + h) as usize] = group.cocycle(&g, &h);
            }
        }
        Self { group, values }
    }

    pub fn group(&self) -> &ZMod {
        &self.group
    }

    pub fn get(&self, g: u64, h: u64) -> u8 {
        self.values[(g * self.group.modulus() + h) as usize]
    }

    pub fn set(&mut self, g: u64, h: u64, value: u8) {
        self.values[(g * self.group.modulus() + h) as usize] = value;
    }
}

impl Group for CocycleTable {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        self.group.op(a, b)
    }

    fn inv(&self, g: &u64) -> u64 {
        self.group.inv(g)
    }

    fn elems_equal(&self, a: &u64, b: &u64) -> bool {
        a == b
    }
}

impl CircularOrder for CocycleTable {
    fn cocycle(&self, g: &u64, h: &u64) -> u8 {
        self.get(*g, *h)
    }
}

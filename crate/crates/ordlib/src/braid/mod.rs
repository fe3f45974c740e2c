//! The braid group B_n: words in Artin generators with free reduction, the
//! permutation and exponent-sum homomorphisms, the Garside element Δ and the
//! full twist Δ², a normal-form equality oracle, and the Dehornoy ordering
//! decided by handle reduction.
//!
//! Letters are nonzero integers: `i` stands for σ_i and `-i` for σ_i⁻¹,
//! with 1-based indices below the strand count. Words are immutable and kept
//! freely reduced at all times.

mod garside;
mod handle;

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{Group, OrderSign, OrderedGroup};

pub use garside::{NormalForm, Permutation};
pub use handle::DehornoyClass;

/// Growth multiplier for the default handle-reduction length budget.
const LENGTH_BUDGET_FACTOR: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

pub(crate) fn free_reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in letters {
        debug_assert!(l != 0);
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidWord {
    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 2, "braid groups need at least two strands");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// Build a word from signed letters, validating indices and freely
    /// reducing.
    pub fn from_letters(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        assert!(strands >= 2, "braid groups need at least two strands");
        let raw: Vec<i32> = letters.into_iter().collect();
        for &l in &raw {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index >= strands {
                return Err(Error::IndexOutOfRange { index, strands });
            }
        }
        Ok(Self {
            strands,
            letters: free_reduce(raw),
        })
    }

    /// The generator σ_i (1-based).
    pub fn generator(strands: usize, index: usize) -> Result<Self> {
        Self::from_letters(strands, [index as i32])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(Self {
            strands: self.strands,
            letters: free_reduce(
                self.letters.iter().chain(other.letters.iter()).copied(),
            ),
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::empty(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base).expect("same strand count");
        }
        out
    }

    /// Image under B_n → S_n.
    pub fn permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for &l in &self.letters {
            perm.swap_values(l.unsigned_abs() as usize - 1);
        }
        perm
    }

    /// The abelianisation B_n → ℤ: the sum of letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// Left-greedy Garside normal form; identical normal forms characterise
    /// equal braids, so this is the word-problem oracle.
    pub fn normal_form(&self) -> NormalForm {
        garside::word_to_normal_form(self.strands, &self.letters)
    }

    /// Word-problem oracle: `u = v` iff the normal form of `u·v⁻¹` is empty.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        Ok(self.multiply(&other.inverse())?.normal_form().is_trivial())
    }

    /// Eliminate handles until none remain, always reducing the handle whose
    /// closing letter comes first. The budget caps intermediate word growth.
    pub fn handle_reduce(&self, length_budget: usize) -> Result<Self> {
        Ok(Self {
            strands: self.strands,
            letters: handle::handle_reduce_letters(&self.letters, length_budget)?,
        })
    }

    /// Default handle-reduction budget: 64 × (input length + 1).
    pub fn default_length_budget(&self) -> usize {
        LENGTH_BUDGET_FACTOR * (self.letters.len() + 1)
    }

    /// σ-positivity class of the braid, decided by handle reduction with the
    /// default budget.
    pub fn dehornoy_class(&self) -> Result<DehornoyClass> {
        let reduced = self.handle_reduce(self.default_length_budget())?;
        Ok(handle::class_of_handle_free(reduced.letters()))
    }

    /// Sign in the Dehornoy ordering: σ-positive words are positive.
    pub fn dehornoy_sign(&self) -> Result<OrderSign> {
        Ok(match self.dehornoy_class()? {
            DehornoyClass::Trivial => OrderSign::Identity,
            DehornoyClass::SigmaPositive(_) => OrderSign::Positive,
            DehornoyClass::SigmaNegative(_) => OrderSign::Negative,
        })
    }
}

impl fmt::Display for BraidWord {
    /// Grammar text: `s<i>` tokens with collapsed integer powers, separated
    /// by spaces. The empty word prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = i64::from(l.signum()) * run as i64;
            if exp == 1 {
                write!(f, "s{}", l.abs())?;
            } else {
                write!(f, "s{}^{}", l.abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// The Garside half twist Δ = (σ₁…σ_{n−1})(σ₁…σ_{n−2})⋯(σ₁).
pub fn delta(strands: usize) -> BraidWord {
    assert!(strands >= 2);
    let mut letters = Vec::new();
    for block in (1..strands).rev() {
        for i in 1..=block {
            letters.push(i as i32);
        }
    }
    BraidWord::from_letters(strands, letters).expect("indices in range")
}

/// The full twist Δ², which generates the center of B_n and is positive and
/// cofinal in the Dehornoy ordering.
pub fn delta_squared(strands: usize) -> BraidWord {
    let d = delta(strands);
    d.multiply(&d).expect("same strand count")
}

/// B_n as an ordered-group instance: the equality oracle is the Garside
/// normal form and the sign oracle is the Dehornoy class.
#[derive(Debug, Clone, Copy)]
pub struct Braid {
    strands: usize,
}

impl Braid {
    pub fn new(strands: usize) -> Self {
        assert!(strands >= 2);
        Self { strands }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta(&self) -> BraidWord {
        delta(self.strands)
    }

    pub fn delta_squared(&self) -> BraidWord {
        delta_squared(self.strands)
    }

    pub fn generators(&self) -> Vec<BraidWord> {
        (1..self.strands)
            .map(|i| BraidWord::generator(self.strands, i).expect("index in range"))
            .collect()
    }
}

impl Group for Braid {
    type Elem = BraidWord;

    fn identity(&self) -> BraidWord {
        BraidWord::empty(self.strands)
    }

    fn op(&self, a: &BraidWord, b: &BraidWord) -> BraidWord {
        a.multiply(b).expect("elements of the same braid group")
    }

    fn inv(&self, g: &BraidWord) -> BraidWord {
        g.inverse()
    }

    fn elems_equal(&self, a: &BraidWord, b: &BraidWord) -> bool {
        a.equal(b).expect("elements of the same braid group")
    }

    fn is_identity(&self, g: &BraidWord) -> bool {
        g.normal_form().is_trivial()
    }
}

impl OrderedGroup for Braid {
    fn sign(&self, g: &BraidWord) -> Result<OrderSign> {
        g.dehornoy_sign()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::from_letters(strands, letters.iter().copied()).unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        assert!(bw(2, &[1, -1]).is_empty());
        assert_eq!(bw(3, &[1, 2]).inverse().letters(), &[-2, -1]);
        assert_eq!(
            bw(3, &[1, 2]).multiply(&bw(3, &[-2, 1])).unwrap().letters(),
            &[1, 1]
        );
    }

    #[test]
    fn free_reduction_cascades() {
        assert!(bw(3, &[1, 2, -2, -1]).is_empty());
        assert_eq!(
            bw(3, &[1, 2, -2, -2]).letters(),
            &[1, -2]
        );
    }

    #[test]
    fn strand_mismatch_is_rejected() {
        let err = bw(3, &[1]).multiply(&bw(4, &[1])).unwrap_err();
        assert!(matches!(err, Error::StrandMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn out_of_range_letters_are_rejected() {
        let err = BraidWord::from_letters(3, [3]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 3, strands: 3 }));
        assert!(BraidWord::from_letters(3, [0]).is_err());
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta(2).letters(), &[1]);
        assert_eq!(delta(3).letters(), &[1, 2, 1]);
        assert_eq!(delta(4).letters(), &[1, 2, 3, 1, 2, 1]);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(bw(3, &[1, -2]).exponent_sum(), 0);
        assert_eq!(delta_squared(3).exponent_sum(), 6);
        assert_eq!(bw(3, &[]).exponent_sum(), 0);
    }

    #[test]
    fn permutation_of_generator_is_a_transposition() {
        let p = bw(3, &[1]).permutation();
        assert_eq!(p.images(), &[1, 0, 2]);
        let q = bw(3, &[1, -1]).permutation();
        assert!(q.is_identity());
    }

    #[test]
    fn permutation_and_exponent_sum_are_homomorphisms() {
        let u = bw(4, &[1, 2, -3, 2]);
        let v = bw(4, &[3, -1, -2]);
        let uv = u.multiply(&v).unwrap();
        assert_eq!(uv.exponent_sum(), u.exponent_sum() + v.exponent_sum());
        assert_eq!(uv.permutation(), u.permutation().compose(&v.permutation()));
        assert_eq!(
            u.inverse().permutation(),
            u.permutation().inverse()
        );
    }

    #[test]
    fn display_round_trips_through_letters() {
        assert_eq!(bw(3, &[1, 1, -2, 1]).to_string(), "s1^2 s2^-1 s1");
        assert_eq!(bw(3, &[]).to_string(), "");
        assert_eq!(bw(3, &[-1, -1, -1]).to_string(), "s1^-3");
    }

    #[test]
    fn power_is_iterated_multiplication() {
        let w = bw(3, &[1, 2]);
        assert_eq!(w.pow(3).letters(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(w.pow(-2), w.inverse().pow(2));
        assert!(w.pow(0).is_empty());
    }
}

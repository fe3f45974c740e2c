//! Garside normal form for B_n: every word equals Δ^p · f₁ ⋯ f_k with each
//! factor a simple (permutation) braid and adjacent factors left-weighted.
//! The form is unique, which makes identical forms the equality oracle.
//!
//! Simple braids are stored as their permutations; their canonical positive
//! words are produced lazily.

use std::fmt;

use crate::braid::BraidWord;

/// A permutation of `{0, …, n−1}` mapping strand start positions to end
/// positions; products compose left-to-right (`(fg)(i) = g(f(i))`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    /// The adjacent transposition swapping positions `s` and `s+1` (0-based),
    /// the permutation of σ_{s+1}.
    pub fn adjacent_transposition(n: usize, s: usize) -> Self {
        let mut p = Self::identity(n);
        p.map.swap(s, s + 1);
        p
    }

    /// The order-reversing permutation, the image of Δ.
    pub fn half_twist(n: usize) -> Self {
        Self {
            map: (0..n).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &Self) -> Self {
        Self {
            map: self.map.iter().map(|&v| then.map[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Self { map }
    }

    /// Right-multiply by the transposition at `s`: swaps the values `s`,
    /// `s+1` wherever they occur.
    pub(crate) fn swap_values(&mut self, s: usize) {
        for v in &mut self.map {
            if *v == s {
                *v = s + 1;
            } else if *v == s + 1 {
                *v = s;
            }
        }
    }

    /// Left-multiply by the transposition at `s`: swaps the entries at
    /// positions `s`, `s+1`.
    fn swap_positions(&mut self, s: usize) {
        self.map.swap(s, s + 1);
    }

    /// Descent at position `s`, i.e. `map[s] > map[s+1]`. The descents of a
    /// simple braid's permutation are the generators it can start with; the
    /// descents of the inverse are the generators it can end with.
    fn is_descent(&self, s: usize) -> bool {
        self.map[s] > self.map[s + 1]
    }

    fn finishing_mask(&self) -> Vec<bool> {
        let inv = self.inverse();
        (0..self.map.len() - 1).map(|s| inv.is_descent(s)).collect()
    }

    /// τ(x) = Δ⁻¹ x Δ, conjugation by the half twist.
    fn flip(&self) -> Self {
        let w0 = Self::half_twist(self.map.len());
        w0.compose(&self.compose(&w0))
    }

    /// The canonical reduced positive word with this permutation: repeatedly
    /// swap the leftmost descent. The letter count is the inversion number.
    pub fn to_word(&self) -> Vec<i32> {
        let mut m = self.map.clone();
        let mut out = Vec::new();
        while let Some(s) = (0..m.len().saturating_sub(1)).find(|&s| m[s] > m[s + 1]) {
            m.swap(s, s + 1);
            out.push((s + 1) as i32);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// One-line image list, 1-based: `[2 1 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Expand back to a braid word: Δ^p followed by the canonical factor
    /// words.
    pub fn to_word(&self) -> BraidWord {
        let delta = crate::braid::delta(self.strands);
        let mut out = delta.pow(self.delta_power);
        for f in &self.factors {
            let fw = BraidWord::from_letters(self.strands, f.to_word()).expect("indices in range");
            out = out.multiply(&fw).expect("same strand count");
        }
        out
    }
}

/// Slide letters across the pair until it is left-weighted: while some
/// starting generator of `b` is not a finishing generator of `a`, move it.
/// Returns whether anything moved.
fn left_weight_pair(n: usize, a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        if b.is_identity() {
            break;
        }
        let fin = a.finishing_mask();
        let Some(s) = (0..n - 1).find(|&s| b.is_descent(s) && !fin[s]) else {
            break;
        };
        a.swap_values(s);
        b.swap_positions(s);
        changed = true;
    }
    changed
}

pub(crate) fn word_to_normal_form(strands: usize, letters: &[i32]) -> NormalForm {
    let n = strands;
    let w0 = Permutation::half_twist(n);
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();

    // rewrite each negative letter σ_i⁻¹ as Δ⁻¹·(Δσ_i⁻¹): the Δ⁻¹ commutes
    // leftward past existing factors by flipping them
    for &l in letters {
        let s = l.unsigned_abs() as usize - 1;
        if l > 0 {
            factors.push(Permutation::adjacent_transposition(n, s));
        } else {
            delta_power -= 1;
            for f in &mut factors {
                *f = f.flip();
            }
            factors.push(w0.compose(&Permutation::adjacent_transposition(n, s)));
        }
    }

    // local slides until every adjacent pair is left-weighted
    factors.retain(|f| !f.is_identity());
    loop {
        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(i + 1);
            changed |= left_weight_pair(n, &mut left[i], &mut right[0]);
        }
        if !changed {
            break;
        }
        factors.retain(|f| !f.is_identity());
    }

    // full half-twist factors have migrated to the front; absorb them
    while factors.first().is_some_and(|f| *f == w0) {
        delta_power += 1;
        factors.remove(0);
    }
    debug_assert!(factors.iter().all(|f| !f.is_identity() && *f != w0));

    NormalForm {
        strands,
        delta_power,
        factors,
    }
}

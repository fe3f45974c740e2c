//! Handle reduction, the rewriting procedure deciding σ-positivity.
//!
//! A σ_i-handle is a subword σ_i^e · u · σ_i^{-e} whose interior `u` uses
//! only generators of index above `i`. Reducing it conjugates the interior's
//! σ_{i+1} letters through and drops the bracketing pair:
//!
//!   σ_i^e u σ_i^{-e}  →  u'   where σ_{i+1}^d ↦ σ_{i+1}^{-e} σ_i^d σ_{i+1}^e
//!
//! and higher-index letters pass through unchanged. We always reduce the
//! handle whose closing letter comes first; that handle never contains a
//! nested one, and the output is deterministic for a given input word.
//! A handle-free word is empty or σ-definite: its lowest-index generator
//! occurs with only one sign, which decides the Dehornoy order sign.

use crate::braid::free_reduce;
use crate::error::{Error, Result};

/// σ-positivity class of a braid word: the lowest generator index occurring
/// after handle reduction, with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DehornoyClass {
    Trivial,
    SigmaPositive(usize),
    SigmaNegative(usize),
}

/// Find the handle with the leftmost closing letter: scan each position `j`
/// as a potential closer and walk back over strictly-higher letters to a
/// matching opener.
fn leftmost_closing_handle(w: &[i32]) -> Option<(usize, usize)> {
    for j in 0..w.len() {
        let closer = w[j];
        let ci = closer.abs();
        let mut k = j;
        while k > 0 {
            k -= 1;
            let yi = w[k].abs();
            if yi > ci {
                continue;
            }
            if yi == ci && w[k] == -closer {
                return Some((k, j));
            }
            break; // lower index, or same index with the same sign
        }
    }
    None
}

pub(crate) fn handle_reduce_letters(letters: &[i32], budget: usize) -> Result<Vec<i32>> {
    let mut w = free_reduce(letters.iter().copied());
    // termination is guaranteed, but a runaway implementation bug should
    // surface as a typed error rather than a hang
    let step_cap = budget.saturating_mul(64).max(4096);
    let mut steps = 0usize;
    while let Some((k, j)) = leftmost_closing_handle(&w) {
        let opener = w[k];
        let e = opener.signum();
        let i = opener.abs();
        let mut out = Vec::with_capacity(w.len() + 2 * (j - k));
        out.extend_from_slice(&w[..k]);
        for &t in &w[k + 1..j] {
            if t.abs() == i + 1 {
                out.push(-e * (i + 1));
                out.push(t.signum() * i);
                out.push(e * (i + 1));
            } else {
                out.push(t);
            }
        }
        out.extend_from_slice(&w[j + 1..]);
        w = free_reduce(out);
        if w.len() > budget {
            return Err(Error::LengthBudgetExceeded { budget });
        }
        steps += 1;
        if steps > step_cap {
            return Err(Error::LengthBudgetExceeded { budget });
        }
    }
    Ok(w)
}

/// Classify a handle-free word. The lowest-index generator of such a word
/// occurs with a single sign (two opposite occurrences would bracket a
/// handle).
pub(crate) fn class_of_handle_free(w: &[i32]) -> DehornoyClass {
    let Some(min_idx) = w.iter().map(|l| l.abs()).min() else {
        return DehornoyClass::Trivial;
    };
    let occurrences: Vec<i32> = w.iter().copied().filter(|l| l.abs() == min_idx).collect();
    debug_assert!(
        occurrences.iter().all(|&l| l > 0) || occurrences.iter().all(|&l| l < 0),
        "handle-free word is not sigma-definite: {w:?}"
    );
    if occurrences[0] > 0 {
        DehornoyClass::SigmaPositive(min_idx as usize)
    } else {
        DehornoyClass::SigmaNegative(min_idx as usize)
    }
}

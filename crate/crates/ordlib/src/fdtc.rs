//! Fractional Dehn twist coefficients of braids from the Dehornoy ordering.
//!
//! The coefficient of a braid is the limit of `[h^n]/n`, where floors are
//! taken against the full twist Δ². Floors of powers give two-sided rational
//! bounds at every finite stage; exact values come from root identities
//! `w^n = Δ^{2k}` (which make the floor sequence exactly linear), from
//! unique bounded-denominator reconstruction inside the bounds, or from the
//! conjugate-floor trick: a conjugation that moves a floor pins the value.

use crate::braid::{delta_squared, Braid, BraidWord};
use crate::error::{Ambiguity, Error, Result};
use crate::order::{
    floor, translation_bounds, CentralCofinal, Group, DEFAULT_FLOOR_BUDGET,
};
use crate::rational::{rational, with_denominator_at_most, Rational, RationalInterval};

use num_traits::ToPrimitive;

/// Default number of powers used for bounds and the root-identity search.
pub const DEFAULT_POWER_BOUND: u32 = 24;

/// Default denominator cap for rational reconstruction.
pub const DEFAULT_MAX_DENOMINATOR: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdtcMethod {
    BoundsOnly,
    ExactByRootIdentity,
    ExactBySternBrocot,
    ExactByConjugateFloor,
}

impl FdtcMethod {
    pub fn name(self) -> &'static str {
        match self {
            FdtcMethod::BoundsOnly => "BoundsOnly",
            FdtcMethod::ExactByRootIdentity => "ExactByRootIdentity",
            FdtcMethod::ExactBySternBrocot => "ExactBySternBrocot",
            FdtcMethod::ExactByConjugateFloor => "ExactByConjugateFloor",
        }
    }
}

/// Result of a coefficient computation: always the bounds interval and the
/// floor evidence behind it; an exact value when one stage produced it.
///
/// `certified` is honest: it is set only when a root identity `w^n = Δ^{2k}`
/// proves the value. A unique bounded-denominator reconstruction is reported
/// as exact but uncertified.
#[derive(Debug, Clone)]
pub struct FdtcResult {
    pub bounds: RationalInterval,
    pub exact: Option<Rational>,
    pub certified: bool,
    pub method: FdtcMethod,
    pub evidence: Vec<(u32, i64)>,
}

fn braid_context(w: &BraidWord) -> (Braid, CentralCofinal<BraidWord>) {
    let group = Braid::new(w.strands());
    let z = CentralCofinal::assume(delta_squared(w.strands()));
    (group, z)
}

/// Two-sided bounds from floors of the first `n_max` powers. The interval
/// width is at most `2/n_max` (in fact at most `1/n_max`).
pub fn fdtc_bounds(w: &BraidWord, n_max: u32) -> Result<FdtcResult> {
    fdtc_bounds_budgeted(w, n_max, DEFAULT_FLOOR_BUDGET)
}

pub fn fdtc_bounds_budgeted(w: &BraidWord, n_max: u32, budget: i64) -> Result<FdtcResult> {
    let (group, z) = braid_context(w);
    let tb = translation_bounds(&group, &z, w, n_max, budget)?;
    Ok(FdtcResult {
        bounds: tb.interval,
        exact: None,
        certified: false,
        method: FdtcMethod::BoundsOnly,
        evidence: tb.floors,
    })
}

/// Three-stage exact computation.
///
/// 1. Root-identity search over `1 <= n <= n_max`: if `w^n = Δ^{2k}` the
///    value is exactly `k/n`, certified.
/// 2. Reconstruction: if exactly one rational with denominator at most
///    `max_denominator` lies in the bounds, report it (certified only if the
///    defining identity happens to hold at its denominator).
/// 3. Otherwise bounds only. Two or more surviving candidates are an
///    [`Error::AmbiguousReconstruction`] — reported, never guessed.
pub fn fdtc_exact(w: &BraidWord, n_max: u32, max_denominator: u32) -> Result<FdtcResult> {
    fdtc_exact_budgeted(w, n_max, max_denominator, DEFAULT_FLOOR_BUDGET)
}

pub fn fdtc_exact_budgeted(
    w: &BraidWord,
    n_max: u32,
    max_denominator: u32,
    budget: i64,
) -> Result<FdtcResult> {
    assert!(max_denominator >= 1);
    let (group, z) = braid_context(w);
    let tb = translation_bounds(&group, &z, w, n_max, budget)?;

    // stage 1: root identities w^n = z^[w^n]
    let mut power = w.clone();
    for &(n, k) in &tb.floors {
        if n > 1 {
            power = group.op(&power, w);
        }
        if group.elems_equal(&power, &group.pow(z.element(), k)) {
            return Ok(FdtcResult {
                bounds: tb.interval,
                exact: Some(rational(k, i64::from(n))),
                certified: true,
                method: FdtcMethod::ExactByRootIdentity,
                evidence: tb.floors,
            });
        }
    }

    // stage 2: bounded-denominator reconstruction inside the bounds
    let candidates = with_denominator_at_most(&tb.interval, max_denominator);
    match candidates.len() {
        0 => Ok(FdtcResult {
            bounds: tb.interval,
            exact: None,
            certified: false,
            method: FdtcMethod::BoundsOnly,
            evidence: tb.floors,
        }),
        1 => {
            let value = candidates.into_iter().next().unwrap();
            let q = value
                .denom()
                .to_i64()
                .expect("denominator bounded by max_denominator");
            let p = value
                .numer()
                .to_i64()
                .expect("numerator bounded by the floor budget");
            let wq = group.pow(w, q);
            let fq = floor(&group, &z, &wq, budget)?;
            if fq == p && group.elems_equal(&wq, &group.pow(z.element(), p)) {
                return Ok(FdtcResult {
                    bounds: tb.interval,
                    exact: Some(value),
                    certified: true,
                    method: FdtcMethod::ExactByRootIdentity,
                    evidence: tb.floors,
                });
            }
            Ok(FdtcResult {
                bounds: tb.interval,
                exact: Some(value),
                certified: false,
                method: FdtcMethod::ExactBySternBrocot,
                evidence: tb.floors,
            })
        }
        _ => Err(Error::AmbiguousReconstruction(Box::new(Ambiguity {
            candidates,
            max_denominator,
            bounds: tb.interval,
            evidence: tb.floors,
        }))),
    }
}

/// Outcome of the conjugate-floor test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pinpoint {
    Exact(Rational),
    Unknown,
}

/// The branch logic: conjugation moves a floor by at most one, and a strict
/// move pins the coefficient. With `k = [w^n]` and `k' = [f w^n f⁻¹]`:
/// `k' = k−1` forces `c = k/n`, `k' = k+1` forces `c = (k+1)/n`, and
/// `k' = k` decides nothing.
pub fn pinpoint_from_floors(k: i64, k_conjugate: i64, n: u32) -> Pinpoint {
    assert!(n >= 1);
    match k_conjugate - k {
        -1 => Pinpoint::Exact(rational(k, i64::from(n))),
        1 => Pinpoint::Exact(rational(k + 1, i64::from(n))),
        0 => Pinpoint::Unknown,
        d => panic!("conjugation moved a floor by {d}; the order oracle is broken"),
    }
}

/// Compare `[w^n]` with `[f w^n f⁻¹]` and apply [`pinpoint_from_floors`].
pub fn conjugate_floor_pinpoint(w: &BraidWord, conj: &BraidWord, n: u32) -> Result<Pinpoint> {
    conjugate_floor_pinpoint_budgeted(w, conj, n, DEFAULT_FLOOR_BUDGET)
}

pub fn conjugate_floor_pinpoint_budgeted(
    w: &BraidWord,
    conj: &BraidWord,
    n: u32,
    budget: i64,
) -> Result<Pinpoint> {
    if w.strands() != conj.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: conj.strands(),
        });
    }
    let (group, z) = braid_context(w);
    let wn = group.pow(w, i64::from(n));
    let conjugated = group.op(&group.op(conj, &wn), &group.inv(conj));
    let k = floor(&group, &z, &wn, budget)?;
    let k_conj = floor(&group, &z, &conjugated, budget)?;
    Ok(pinpoint_from_floors(k, k_conj, n))
}

/// The exponent sum, which is the translation number of the braid under the
/// action through the abelianisation B_n → ℤ by integer shifts. That action
/// has no global fixed point, yet its translation numbers disagree with the
/// fractional Dehn twist coefficient (σ₁² maps to 2 while its coefficient is
/// 0), so fixed-point-free actions alone do not compute the coefficient.
pub fn abelianization_translation(w: &BraidWord) -> i64 {
    w.exponent_sum()
}

//! Finite-scale dynamic realisations: tight embeddings of order balls into
//! the line, partial actions by monotone piecewise-linear maps, pointwise
//! Euler-cocycle extraction, and dynamical translation-number estimates.
//!
//! Coordinates are exact rationals (dyadic by construction). The embedding
//! pins powers of a central cofinal element at the integers and the identity
//! at 0, places everything else at successive midpoints in a caller-declared
//! canonical order, and the action maps satisfy ρ(g)(t(h)) = t(gh) exactly
//! on their knot sets.

use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::braid::{Braid, BraidWord, NormalForm};
use crate::error::{Error, Result};
use crate::fixtures::ZMod;
use crate::order::cocycle::CircularOrder;
use crate::order::lift::{LiftGroup, Lifted};
use crate::order::{floor, CentralCofinal, Group, OrderSign, OrderedGroup};
use crate::rational::{as_integer, rational_floor, rational_int, Rational, RationalInterval};

/// A strictly order-preserving assignment of rational coordinates to a
/// finite ball, sorted ascending, with `t(id) = 0` and `t(z^k) = k` for the
/// central element's powers present in the ball.
#[derive(Debug, Clone)]
pub struct EmbeddingTable<E> {
    entries: Vec<(E, Rational)>,
}

impl<E: Clone + fmt::Debug> EmbeddingTable<E> {
    pub fn entries(&self) -> &[(E, Rational)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinate lookup through the group's equality oracle.
    pub fn coord_of<G: Group<Elem = E>>(&self, group: &G, e: &E) -> Option<&Rational> {
        self.entries
            .iter()
            .find(|(g, _)| group.elems_equal(g, e))
            .map(|(_, c)| c)
    }
}

fn sorted_position<G: OrderedGroup>(
    group: &G,
    sorted: &[G::Elem],
    e: &G::Elem,
) -> Result<std::result::Result<usize, usize>> {
    let mut lo = 0usize;
    let mut hi = sorted.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        match group.compare(e, &sorted[mid])? {
            OrderSign::Positive => hi = mid, // e < sorted[mid]
            OrderSign::Negative => lo = mid + 1,
            OrderSign::Identity => return Ok(Ok(mid)),
        }
    }
    Ok(Err(lo))
}

/// Tight embedding of a finite ball. The ball must contain the identity and
/// should be closed under inverses; duplicates (distinct representatives of
/// one element) are merged, keeping the earliest. Unpinned elements are
/// placed at midpoints of their already-placed neighbours — processed in the
/// ball's own order, which the caller makes canonical (e.g. shortlex over a
/// declared generator list) — and one step beyond the extremes.
pub fn tight_embed_ball<G: OrderedGroup>(
    group: &G,
    ball: &[G::Elem],
    z: Option<&CentralCofinal<G::Elem>>,
    budget: i64,
) -> Result<EmbeddingTable<G::Elem>> {
    if !ball.iter().any(|e| group.is_identity(e)) {
        return Err(Error::InvalidBall("the ball must contain the identity".into()));
    }

    let mut sorted: Vec<G::Elem> = Vec::new();
    for e in ball {
        match sorted_position(group, &sorted, e)? {
            Ok(_) => {} // duplicate element, keep the earlier representative
            Err(pos) => sorted.insert(pos, e.clone()),
        }
    }

    let mut coords: Vec<Option<Rational>> = vec![None; sorted.len()];
    if let Some(z) = z {
        for (idx, e) in sorted.iter().enumerate() {
            let k = floor(group, z, e, budget)?;
            if group.elems_equal(e, &group.pow(z.element(), k)) {
                coords[idx] = Some(rational_int(k));
            }
        }
    } else {
        let idx = sorted
            .iter()
            .position(|e| group.is_identity(e))
            .expect("identity is in the ball");
        coords[idx] = Some(rational_int(0));
    }

    let two = rational_int(2);
    let one = rational_int(1);
    for e in ball {
        let idx = match sorted_position(group, &sorted, e)? {
            Ok(idx) => idx,
            Err(_) => unreachable!("every ball element was inserted"),
        };
        if coords[idx].is_some() {
            continue;
        }
        let below = (0..idx).rev().find_map(|i| coords[i].clone());
        let above = (idx + 1..sorted.len()).find_map(|i| coords[i].clone());
        coords[idx] = Some(match (below, above) {
            (Some(b), Some(a)) => (b + a) / &two,
            (Some(b), None) => b + &one,
            (None, Some(a)) => a - &one,
            (None, None) => unreachable!("the identity is always placed"),
        });
    }

    let entries: Vec<(G::Elem, Rational)> = sorted
        .into_iter()
        .zip(coords.into_iter().map(|c| c.expect("every element placed")))
        .collect();
    debug_assert!(entries.windows(2).all(|w| w[0].1 < w[1].1));
    Ok(EmbeddingTable { entries })
}

/// The finite graph of one acting element: pairs `(t(h), t(gh))` over the
/// ball, extended by monotone piecewise-linear interpolation between knots
/// and affinely with slope 1 outside.
#[derive(Debug, Clone)]
pub struct ActorMap<E> {
    actor: E,
    knots: Vec<(Rational, Rational)>,
}

impl<E> ActorMap<E> {
    pub fn actor(&self) -> &E {
        &self.actor
    }

    pub fn knots(&self) -> &[(Rational, Rational)] {
        &self.knots
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let first = self.knots.first().expect("at least two knots");
        let last = self.knots.last().expect("at least two knots");
        if x <= &first.0 {
            return &first.1 + (x - &first.0);
        }
        if x >= &last.0 {
            return &last.1 + (x - &last.0);
        }
        match self.knots.binary_search_by(|k| k.0.cmp(x)) {
            Ok(i) => self.knots[i].1.clone(),
            Err(i) => {
                let (x0, y0) = &self.knots[i - 1];
                let (x1, y1) = &self.knots[i];
                y0 + (y1 - y0) * (x - x0) / (x1 - x0)
            }
        }
    }
}

/// A partial action built from an embedding table: one [`ActorMap`] per
/// acting element.
#[derive(Debug, Clone)]
pub struct PartialAction<G: Group> {
    group: G,
    table: EmbeddingTable<G::Elem>,
    maps: Vec<ActorMap<G::Elem>>,
}

/// Result of [`PartialAction::dynamic_translation_estimate`]; `approximate`
/// marks values obtained by iterating the interpolated map beyond the ball.
#[derive(Debug, Clone)]
pub struct TranslationEstimate {
    pub interval: RationalInterval,
    pub approximate: bool,
}

/// Build the action maps for `actors`; each needs at least two knots.
pub fn build_partial_action<G: Group>(
    group: G,
    table: EmbeddingTable<G::Elem>,
    actors: &[G::Elem],
) -> Result<PartialAction<G>> {
    let mut maps = Vec::with_capacity(actors.len());
    for actor in actors {
        let mut knots: Vec<(Rational, Rational)> = Vec::new();
        for (h, x) in table.entries() {
            let gh = group.op(actor, h);
            if let Some(y) = table.coord_of(&group, &gh) {
                knots.push((x.clone(), y.clone()));
            }
        }
        if knots.len() < 2 {
            return Err(Error::InsufficientKnots {
                actor: format!("{actor:?}"),
            });
        }
        debug_assert!(
            knots.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1),
            "action map is not strictly increasing on its knots"
        );
        maps.push(ActorMap {
            actor: actor.clone(),
            knots,
        });
    }
    Ok(PartialAction { group, table, maps })
}

impl<G: Group> PartialAction<G> {
    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn table(&self) -> &EmbeddingTable<G::Elem> {
        &self.table
    }

    pub fn maps(&self) -> &[ActorMap<G::Elem>] {
        &self.maps
    }

    pub fn map_for(&self, g: &G::Elem) -> Option<&ActorMap<G::Elem>> {
        self.maps
            .iter()
            .find(|m| self.group.elems_equal(&m.actor, g))
    }

    pub fn apply(&self, g: &G::Elem, x: &Rational) -> Result<Rational> {
        let map = self.map_for(g).ok_or_else(|| Error::UnknownActor {
            actor: format!("{g:?}"),
        })?;
        Ok(map.eval(x))
    }

    /// `[(ρ(gⁿ)(0) − 1)/n, (ρ(gⁿ)(0) + 1)/n]`, exactly when `gⁿ` is in the
    /// ball. Iterating the interpolated map beyond the ball is opt-in and
    /// the result is flagged approximate.
    pub fn dynamic_translation_estimate(
        &self,
        g: &G::Elem,
        n: u32,
        allow_approximate: bool,
    ) -> Result<TranslationEstimate> {
        assert!(n >= 1);
        let n_rat = rational_int(i64::from(n));
        let one = rational_int(1);
        let gn = self.group.pow(g, i64::from(n));
        if let Some(t) = self.table.coord_of(&self.group, &gn) {
            return Ok(TranslationEstimate {
                interval: RationalInterval::new((t - &one) / &n_rat, (t + &one) / &n_rat),
                approximate: false,
            });
        }
        if !allow_approximate {
            return Err(Error::BallExceeded { power: n });
        }
        let mut x = rational_int(0);
        for _ in 0..n {
            x = self.apply(g, &x)?;
        }
        Ok(TranslationEstimate {
            interval: RationalInterval::new((&x - &one) / &n_rat, (&x + &one) / &n_rat),
            approximate: true,
        })
    }
}

/// The integer `ω(g, h) = ρ̃(g)(ρ̃(h)(0)) − ρ̃(gh)(0)` extracted from a
/// realisation of the lift group, with each lift normalised so its value at
/// 0 lies in `[0, 1)`. For realisations built from a circular cocycle this
/// equals the cocycle pointwise.
pub fn euler_cocycle_at<C: CircularOrder>(
    action: &PartialAction<LiftGroup<'_, C>>,
    g: &C::Elem,
    h: &C::Elem,
) -> Result<i64> {
    let lift = action.group();
    let base = lift.base;
    let zero = rational_int(0);

    let normalised_at = |elem: &Lifted<C::Elem>, x: &Rational| -> Result<(Rational, Rational)> {
        let map = action.map_for(elem).ok_or_else(|| Error::UnknownActor {
            actor: format!("{elem:?}"),
        })?;
        let offset = Rational::from_integer(rational_floor(&map.eval(&zero)));
        Ok((map.eval(x) - &offset, map.eval(&zero) - offset))
    };

    let (_, h_at_zero) = normalised_at(&lift.lift(h, 0), &zero)?;
    let (g_at_h, _) = normalised_at(&lift.lift(g, 0), &h_at_zero)?;
    let (_, gh_at_zero) = normalised_at(&lift.lift(&base.op(g, h), 0), &zero)?;

    let omega = g_at_h - gh_at_zero;
    as_integer(&omega)
        .and_then(|b| b.to_i64())
        .ok_or_else(|| Error::InsufficientKnots {
            actor: format!("omega({g:?}, {h:?}) evaluated off-knot to {omega}"),
        })
}

/// Shortlex word ball of the given radius in B_n over the declared generator
/// list σ₁, …, σ_{n−1}, σ₁⁻¹, …, σ_{n−1}⁻¹, deduplicated through the
/// normal-form oracle; every element keeps its first representative.
pub fn braid_ball(strands: usize, radius: u32) -> Vec<BraidWord> {
    let mut alphabet: Vec<i32> = (1..strands as i32).collect();
    alphabet.extend((1..strands as i32).map(|i| -i));

    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut out: Vec<BraidWord> = Vec::new();
    let mut level: Vec<Vec<i32>> = vec![Vec::new()];
    for len in 0..=radius {
        for letters in &level {
            let word = BraidWord::from_letters(strands, letters.iter().copied())
                .expect("alphabet letters are in range");
            if seen.insert(word.normal_form()) {
                out.push(word);
            }
        }
        if len < radius {
            let mut next = Vec::with_capacity(level.len() * alphabet.len());
            for letters in &level {
                for &a in &alphabet {
                    let mut w = letters.clone();
                    w.push(a);
                    next.push(w);
                }
            }
            level = next;
        }
    }
    out
}

/// Ball in the lift of ℤ/n: all `(a, k)` with `|k| <= height_radius`, plus
/// the two bracketing powers `(id, ±(height_radius+1))` so every element
/// sits between pinned integers. Heights are enumerated outermost, which
/// makes the embedding height-equivariant (`t((a, k+1)) = t((a, k)) + 1`),
/// matching the normalisation `ρ(z) = x+1`.
pub fn zmod_lift_ball(lift: &LiftGroup<'_, ZMod>, height_radius: i64) -> Vec<Lifted<u64>> {
    assert!(height_radius >= 1);
    let n = lift.base.modulus();
    let mut out = Vec::new();
    for k in -height_radius..=height_radius {
        for a in 0..n {
            out.push(lift.lift(&a, k));
        }
    }
    out.push(lift.lift(&0, height_radius + 1));
    out.push(lift.lift(&0, -(height_radius + 1)));
    out
}

/// Full realisation of the lift of ℤ/n at the given height radius, with all
/// ball elements acting.
pub fn realize_zmod_lift(
    zmod: &ZMod,
    height_radius: i64,
) -> Result<PartialAction<LiftGroup<'_, ZMod>>> {
    let lift = LiftGroup::new(zmod);
    let ball = zmod_lift_ball(&lift, height_radius);
    let z = CentralCofinal::assume(lift.z());
    let table = tight_embed_ball(&lift, &ball, Some(&z), 4 * height_radius + 8)?;
    build_partial_action(lift, table, &ball)
}

/// Full realisation of the radius-`radius` word ball in B_n with the full
/// twist as the pinned central element, all ball elements acting.
///
/// The ball is extended with the full-twist powers Δ^(±2k), k ≤ radius+1,
/// so that every word is bracketed by pinned integers; without those pins
/// the coordinates of the ball's order-extremes would drift away from the
/// floor calibration that the translation estimates rely on.
pub fn realize_braid_ball(strands: usize, radius: u32, budget: i64) -> Result<PartialAction<Braid>> {
    let group = Braid::new(strands);
    let mut ball = braid_ball(strands, radius);
    let z = CentralCofinal::assume(group.delta_squared());
    for k in 1..=i64::from(radius) + 1 {
        ball.push(z.element().pow(k));
        ball.push(z.element().pow(-k));
    }
    let table = tight_embed_ball(&group, &ball, Some(&z), budget)?;
    build_partial_action(group, table, &ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::IntAdd;
    use crate::order::lift::rotation_number;
    use crate::order::translation_bounds;
    use crate::rational::rational;

    #[test]
    fn integer_ball_is_pinned_to_itself() {
        let ball: Vec<i64> = vec![0, 1, -1, 2, -2];
        let z = CentralCofinal::assume(1i64);
        let table = tight_embed_ball(&IntAdd, &ball, Some(&z), 64).unwrap();
        for (e, c) in table.entries() {
            assert_eq!(c, &rational_int(*e));
        }
    }

    #[test]
    fn b2_power_ball_embedding() {
        // powers of σ₁ with z = σ₁²: even powers pin at the integers, odd
        // powers land one midpoint later at k + 1/2
        let group = Braid::new(2);
        let sigma = BraidWord::generator(2, 1).unwrap();
        let mut ball = vec![BraidWord::empty(2)];
        for k in 1..=4i64 {
            ball.push(sigma.pow(k));
            ball.push(sigma.pow(-k));
        }
        let z = CentralCofinal::assume(group.delta_squared());
        let table = tight_embed_ball(&group, &ball, Some(&z), 64).unwrap();
        for k in -4..=4i64 {
            let coord = table.coord_of(&group, &sigma.pow(k)).unwrap();
            if k.rem_euclid(2) == 0 {
                assert_eq!(coord, &rational_int(k / 2));
            } else {
                assert_eq!(coord, &(rational_int(k.div_euclid(2)) + rational(1, 2)));
            }
        }
    }

    #[test]
    fn embedding_is_strictly_monotone_and_order_faithful() {
        let action = realize_braid_ball(3, 2, 1 << 12).unwrap();
        let group = *action.group();
        let entries = action.table().entries();
        for (i, (g, cg)) in entries.iter().enumerate() {
            for (h, ch) in &entries[i + 1..] {
                assert!(cg < ch);
                assert_eq!(group.compare(g, h).unwrap(), OrderSign::Positive);
            }
        }
    }

    #[test]
    fn orbit_of_zero_recovers_the_order() {
        let action = realize_braid_ball(3, 2, 1 << 12).unwrap();
        let group = *action.group();
        let elems: Vec<BraidWord> = action
            .table()
            .entries()
            .iter()
            .map(|(e, _)| e.clone())
            .collect();
        let zero = rational_int(0);
        for g in &elems {
            for h in &elems {
                let lhs = group.compare(g, h).unwrap() == OrderSign::Positive;
                let rhs = action.apply(g, &zero).unwrap() < action.apply(h, &zero).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn identity_acts_as_identity_on_knots() {
        let zmod = ZMod::new(5);
        let action = realize_zmod_lift(&zmod, 2).unwrap();
        let id = action.group().identity();
        let map = action.map_for(&id).unwrap();
        for (x, y) in map.knots() {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn z_acts_as_shift_by_one_on_knots() {
        let zmod = ZMod::new(5);
        let action = realize_zmod_lift(&zmod, 3).unwrap();
        let z = action.group().z();
        let map = action.map_for(&z).unwrap();
        let one = rational_int(1);
        for (x, y) in map.knots() {
            assert_eq!(y, &(x + &one));
        }
    }

    #[test]
    fn euler_cocycle_matches_the_carry_exhaustively() {
        for n in 1..=8u64 {
            let zmod = ZMod::new(n);
            let action = realize_zmod_lift(&zmod, 2).unwrap();
            for g in 0..n {
                for h in 0..n {
                    let omega = euler_cocycle_at(&action, &g, &h).unwrap();
                    assert_eq!(omega, i64::from(zmod.cocycle(&g, &h)), "n={n} g={g} h={h}");
                }
            }
        }
    }

    #[test]
    fn euler_cocycle_axiom_values() {
        let zmod = ZMod::new(3);
        let action = realize_zmod_lift(&zmod, 2).unwrap();
        for g in 0..3 {
            assert_eq!(euler_cocycle_at(&action, &0, &g).unwrap(), 0);
        }
        for g in 1..3u64 {
            assert_eq!(euler_cocycle_at(&action, &g, &zmod.inv(&g)).unwrap(), 1);
        }
        assert_eq!(euler_cocycle_at(&action, &1, &2).unwrap(), 1);
    }

    #[test]
    fn dynamic_estimate_of_the_shift_contains_one() {
        let zmod = ZMod::new(5);
        let action = realize_zmod_lift(&zmod, 3).unwrap();
        let z = action.group().z();
        let est = action.dynamic_translation_estimate(&z, 3, false).unwrap();
        assert!(!est.approximate);
        assert!(est.interval.contains(&rational_int(1)));
    }

    #[test]
    fn dynamic_estimate_on_z5_lift() {
        let zmod = ZMod::new(5);
        let action = realize_zmod_lift(&zmod, 4).unwrap();
        let g = action.group().lift(&2, 0);
        let est = action.dynamic_translation_estimate(&g, 10, false).unwrap();
        assert!(!est.approximate);
        assert!(est.interval.contains(&rational(2, 5)));
        // the algebraic route must agree
        let rot = rotation_number(&zmod, &2, 10).unwrap();
        assert!(est.interval.contains(rot.lo()));
    }

    #[test]
    fn dynamic_estimate_on_b2() {
        let group = Braid::new(2);
        let sigma = BraidWord::generator(2, 1).unwrap();
        let mut ball = vec![BraidWord::empty(2)];
        for k in 1..=8i64 {
            ball.push(sigma.pow(k));
            ball.push(sigma.pow(-k));
        }
        let z = CentralCofinal::assume(group.delta_squared());
        let table = tight_embed_ball(&group, &ball, Some(&z), 64).unwrap();
        let action = build_partial_action(group, table, &ball).unwrap();
        let est = action.dynamic_translation_estimate(&sigma, 8, false).unwrap();
        assert_eq!(est.interval, RationalInterval::new(rational(3, 8), rational(5, 8)));
        assert!(est.interval.contains(&rational(1, 2)));
    }

    #[test]
    fn estimates_beyond_the_ball_error_or_flag() {
        let zmod = ZMod::new(5);
        let action = realize_zmod_lift(&zmod, 2).unwrap();
        let g = action.group().lift(&2, 0);
        // (2,0)^10 has height 4, outside the radius-2 ball
        let err = action.dynamic_translation_estimate(&g, 10, false).unwrap_err();
        assert!(matches!(err, Error::BallExceeded { power: 10 }));
        let est = action.dynamic_translation_estimate(&g, 10, true).unwrap();
        assert!(est.approximate);
    }

    #[test]
    fn dynamic_and_algebraic_translation_bounds_intersect() {
        let action = realize_braid_ball(3, 2, 1 << 12).unwrap();
        let group = *action.group();
        let z = CentralCofinal::assume(group.delta_squared());
        for (g, _) in action.table().entries() {
            if group.is_identity(g) {
                continue;
            }
            // largest n with g^n still in the ball, capped small
            let mut n = 0u32;
            for cand in 1..=3u32 {
                if action
                    .table()
                    .coord_of(&group, &group.pow(g, i64::from(cand)))
                    .is_some()
                {
                    n = cand;
                }
            }
            if n == 0 {
                continue;
            }
            let dynamic = action.dynamic_translation_estimate(g, n, false).unwrap();
            let algebraic = translation_bounds(&group, &z, g, n, 1 << 12).unwrap();
            assert!(
                dynamic.interval.intersects(&algebraic.interval),
                "g={g}, dyn={}, alg={}",
                dynamic.interval,
                algebraic.interval
            );
        }
    }

    #[test]
    fn missing_identity_is_rejected() {
        let ball: Vec<i64> = vec![1, 2];
        let err = tight_embed_ball(&IntAdd, &ball, None, 64).unwrap_err();
        assert!(matches!(err, Error::InvalidBall(_)));
    }

    #[test]
    fn shared_immutable_values_are_thread_safe() {
        // everything is pure and immutable, so oracle instances and built
        // tables may be shared across threads
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Braid>();
        assert_send_sync::<BraidWord>();
        assert_send_sync::<ZMod>();
        assert_send_sync::<LiftGroup<'_, ZMod>>();
        assert_send_sync::<EmbeddingTable<BraidWord>>();
        assert_send_sync::<PartialAction<Braid>>();
    }

    #[test]
    fn ball_generation_is_deduplicated_and_inverse_closed() {
        let ball = braid_ball(3, 3);
        let group = Braid::new(3);
        assert!(ball[0].is_empty());
        for (i, u) in ball.iter().enumerate() {
            for v in &ball[i + 1..] {
                assert!(!group.elems_equal(u, v));
            }
        }
        for u in &ball {
            assert!(
                ball.iter().any(|v| group.elems_equal(v, &u.inverse())),
                "missing inverse of {u}"
            );
        }
    }
}

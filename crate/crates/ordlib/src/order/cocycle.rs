//! Circular orderings as inhomogeneous 2-cocycles into {0,1}, axiom checking,
//! and the quotient cocycle of a left order by a central cofinal element.

use crate::error::Result;
use crate::order::{floor, CentralCofinal, Group, OrderedGroup};

/// A group carrying a circular ordering, i.e. a function `f: G×G → {0,1}`
/// satisfying
///
/// 1. `f(g, g⁻¹) = 1` for `g ≠ id`;
/// 2. `f(id, g) = f(g, id) = 0`;
/// 3. `f(g₂,g₃) − f(g₁g₂,g₃) + f(g₁,g₂g₃) − f(g₁,g₂) = 0`.
///
/// Finite fixtures evaluate a dense rule or table; the evaluation itself is
/// infallible so the lift group's multiplication stays total.
pub trait CircularOrder: Group {
    fn cocycle(&self, g: &Self::Elem, h: &Self::Elem) -> u8;
}

/// A single axiom violation, naming the axiom and a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleViolation<E> {
    /// Axiom (i) fails: `f(g, g⁻¹) ≠ 1` for `g ≠ id`.
    Inverse { g: E },
    /// Axiom (ii) fails: `f(id, g) ≠ 0` or `f(g, id) ≠ 0`.
    Identity { g: E },
    /// Axiom (iii), the cocycle identity, fails at `(g1, g2, g3)`.
    Cocycle { g1: E, g2: E, g3: E },
    /// A value outside {0,1}.
    Range { g: E, h: E, value: u8 },
}

/// Check the three circular-ordering axioms for `f` over the sample `elems`
/// (pass every element of a finite group for an exhaustive check). The report
/// is empty iff all axioms hold on the sample; violations are listed in
/// deterministic scan order.
pub fn check_cocycle<G, F>(
    group: &G,
    f: F,
    elems: &[G::Elem],
) -> Result<Vec<CocycleViolation<G::Elem>>>
where
    G: Group,
    F: Fn(&G::Elem, &G::Elem) -> Result<u8>,
{
    let mut violations = Vec::new();
    let eval = |g: &G::Elem, h: &G::Elem, out: &mut Vec<_>| -> Result<i64> {
        let v = f(g, h)?;
        if v > 1 {
            out.push(CocycleViolation::Range {
                g: g.clone(),
                h: h.clone(),
                value: v,
            });
        }
        Ok(i64::from(v))
    };

    let id = group.identity();
    for g in elems {
        if !group.is_identity(g) && eval(g, &group.inv(g), &mut violations)? != 1 {
            violations.push(CocycleViolation::Inverse { g: g.clone() });
        }
        if eval(&id, g, &mut violations)? != 0 || eval(g, &id, &mut violations)? != 0 {
            violations.push(CocycleViolation::Identity { g: g.clone() });
        }
    }
    for g1 in elems {
        for g2 in elems {
            for g3 in elems {
                let d = eval(g2, g3, &mut violations)?
                    - eval(&group.op(g1, g2), g3, &mut violations)?
                    + eval(g1, &group.op(g2, g3), &mut violations)?
                    - eval(g1, g2, &mut violations)?;
                if d != 0 {
                    violations.push(CocycleViolation::Cocycle {
                        g1: g1.clone(),
                        g2: g2.clone(),
                        g3: g3.clone(),
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// The circular ordering induced on `G/⟨z⟩` by a left order with central
/// cofinal `z`: with coset representatives `{g} = g·z^(−[g])`, the cocycle is
/// the z-carry of `{g}{h}`, i.e. `f(g⟨z⟩, h⟨z⟩) = [{g}{h}] ∈ {0,1}`.
///
/// Evaluation takes elements of the big group and is constant on cosets.
pub struct QuotientCocycle<'a, G: OrderedGroup> {
    group: &'a G,
    z: CentralCofinal<G::Elem>,
    budget: i64,
}

impl<'a, G: OrderedGroup> QuotientCocycle<'a, G> {
    pub fn new(group: &'a G, z: CentralCofinal<G::Elem>, budget: i64) -> Self {
        Self { group, z, budget }
    }

    /// The canonical coset representative `{g} = g·z^(−[g])`, which satisfies
    /// `id <= {g} < z`.
    pub fn coset_rep(&self, g: &G::Elem) -> Result<G::Elem> {
        let k = floor(self.group, &self.z, g, self.budget)?;
        Ok(self
            .group
            .op(g, &self.group.pow(self.z.element(), -k)))
    }

    pub fn eval(&self, g: &G::Elem, h: &G::Elem) -> Result<u8> {
        let prod = self.group.op(&self.coset_rep(g)?, &self.coset_rep(h)?);
        let carry = floor(self.group, &self.z, &prod, self.budget)?;
        assert!(
            carry == 0 || carry == 1,
            "product of canonical representatives has floor {carry}, which breaks id <= {{g}} < z"
        );
        Ok(carry as u8)
    }
}

//! Cofinality certificates: a finite list of identities `gᵢ^nᵢ = z^mᵢ`
//! checkable by the group's equality oracle.
//!
//! A verified certificate shows every listed generator has a power equal to a
//! power of the central element `z`; it follows that `z` is cofinal in every
//! left ordering of the subgroup the generators generate. That conclusion is
//! a documented consequence of verification, not something re-checked here.

use crate::error::{Error, Result};
use crate::order::Group;

/// One claimed identity `base^base_exponent = z^z_exponent`.
#[derive(Debug, Clone)]
pub struct RootPower<E> {
    pub base: E,
    pub base_exponent: i64,
    pub z_exponent: i64,
}

#[derive(Debug, Clone)]
pub struct RootCertificate<E> {
    pub z: E,
    pub roots: Vec<RootPower<E>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateOutcome {
    Verified,
    /// The identity at this index of the certificate fails.
    Refuted { index: usize },
}

/// Check every claimed identity under the equality oracle. Zero exponents are
/// rejected up front: `g^0 = z^0` certifies nothing.
pub fn verify_root_certificate<G: Group>(
    group: &G,
    cert: &RootCertificate<G::Elem>,
) -> Result<CertificateOutcome> {
    for (index, root) in cert.roots.iter().enumerate() {
        if root.base_exponent == 0 || root.z_exponent == 0 {
            return Err(Error::ZeroExponent { index });
        }
    }
    for (index, root) in cert.roots.iter().enumerate() {
        let lhs = group.pow(&root.base, root.base_exponent);
        let rhs = group.pow(&cert.z, root.z_exponent);
        if !group.elems_equal(&lhs, &rhs) {
            return Ok(CertificateOutcome::Refuted { index });
        }
    }
    Ok(CertificateOutcome::Verified)
}

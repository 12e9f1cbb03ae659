//! Quantum tori attached to ideal triangulations of punctured surfaces.

pub mod lattice;
pub mod torus;
pub mod triangulation;

pub use lattice::{
    balanced_lattice_basis, balanced_z_basis, center_free_certificate, center_free_expansion_certificate, grade,
    qt_deg, ZBasis,
};
pub use torus::{frobenius_qt, QTElement, QuantumTorus};
pub use triangulation::{balanced_check, puncture_exponent, sigma_from_fans, ExchangeMatrix, Triangulation};

use crate::error::Result;

/// The Weyl monomial over the fan of `puncture`, one factor per edge end.
pub fn central_h(torus: &QuantumTorus, t: &Triangulation, puncture: &str) -> Result<QTElement> {
    Ok(torus.weyl_monomial(&puncture_exponent(t, puncture)?))
}

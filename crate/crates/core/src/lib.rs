//! Exact computations with `O_q(SL2)` and with quantum tori of triangulated
//! surfaces at odd roots of unity.
//!
//! Chebyshev polynomials drive the skein modules of the solid torus and of
//! `S^1 x S^2`. Dimension formulas live in [`dimensions`].

pub mod certificate;
pub mod chebyshev;
pub mod dimensions;
pub mod error;
pub mod oq_sl2;
pub mod quantum_torus;
pub mod sample;
pub mod scalars;
pub mod torus_skein;

pub use certificate::Certificate;
pub use error::{Error, Result};

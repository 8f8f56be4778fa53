//! An exact symbolic engine for the bicategory of matrix factorizations of
//! polynomial potentials, the affine fragment of Lagrangian-span
//! correspondences between cotangent algebras, the comparison functor between
//! the two, and the associated 2-dimensional TFT values, all verified by
//! exact rational algebra and weight-truncated cohomology.

pub mod error;
pub mod graded;
pub mod mf;
pub mod bicat;
pub mod crw;
pub mod functor;
pub mod tft;
pub mod hilbert;
pub mod linalg;
pub mod ring;

pub use error::{LgError, Result};
pub use hilbert::HilbertFunction;

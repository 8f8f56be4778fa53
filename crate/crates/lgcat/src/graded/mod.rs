//! Z2-graded semifree commutative dg-algebras and dg-modules with Koszul
//! signs, weight-truncated cohomology via exact linear algebra, Koszul-Tate
//! resolutions, and derived tensor products.

pub mod cdga;
pub mod complexes;
pub mod element;
pub mod module;
pub mod slab;
pub mod tate;

pub use cdga::{tensor_cdga, CDGAMap, GradedVar, SemifreeCDGA};
pub use complexes::{CdgaComplex, ModuleComplex};
pub use element::{AlgebraShape, GradedElement, Parity};
pub use module::SemifreeModule;
pub use slab::{hilbert_to, ComplexSource, Slab, SlabMap};
pub use tate::{derived_tensor, is_semifree_inclusion, koszul_tate_resolve, quasi_iso_check, DerivedTensor, KTResolution, QuasiIsoReport, ResolveSide};

use crate::error::Result;
use crate::hilbert::HilbertFunction;

/// Cohomology dimensions per (weight, parity) of a semifree cdga, trusted up
/// to `bound` minus the largest weight step of the differential.
pub fn cohomology_hilbert(a: &SemifreeCDGA, bound: u32) -> Result<HilbertFunction> {
    a.check_monotone()?;
    hilbert_to(&CdgaComplex(a), bound)
}

/// Cohomology of a semifree module over its base.
pub fn module_cohomology_hilbert(m: &SemifreeModule, bound: u32) -> Result<HilbertFunction> {
    hilbert_to(&ModuleComplex(m), bound)
}

/// The graded Leibniz extension of a generator differential, exposed at
/// module level for direct use.
pub fn extend_leibniz(a: &SemifreeCDGA, e: &GradedElement) -> GradedElement {
    a.differential(e)
}

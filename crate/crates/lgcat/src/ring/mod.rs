//! Exact multivariate polynomial arithmetic over the rationals, partial
//! derivatives, difference quotients, and a Grobner-basis kernel for ideal
//! membership and quotient-ring bases.

pub mod groebner;
pub mod order;
pub mod parse;
pub mod poly;
pub mod table;

pub use groebner::{
    enumerate_monomials, groebner_basis, membership_by_linear_algebra, normal_form,
    quotient_hilbert, GroebnerBasis,
};
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use poly::{rat_string, Mono, Polynomial};
pub use table::VarTable;

use std::collections::BTreeMap;

use crate::error::{LgError, Result};

/// Formal partial derivative; errors name unknown variables.
pub fn partial_derivative(p: &Polynomial, v: &str) -> Result<Polynomial> {
    p.derivative_named(v)
}

/// The i-th difference quotient of `v_poly` with respect to the tuple `a`
/// (unprimed) and its primed copy `a_primed`, both given as variable indices
/// into the polynomial's table; `i` is 0-based.
///
/// Returns the exact polynomial quotient
/// `(V(.., a_{i-1}, a_i', .., a_k') - V(.., a_i, a_{i+1}', .., a_k')) / (a_i' - a_i)`.
/// Multiplying back reproduces the numerator with zero remainder, and the
/// substitution `a_i' -> a_i` recovers the partial derivative in `a_i`.
pub fn difference_quotient(
    v_poly: &Polynomial,
    a: &[usize],
    a_primed: &[usize],
    i: usize,
) -> Result<Polynomial> {
    if a.len() != a_primed.len() {
        return Err(LgError::DimensionMismatch(format!(
            "{} unprimed vs {} primed variables",
            a.len(),
            a_primed.len()
        )));
    }
    if i >= a.len() {
        return Err(LgError::Invalid(format!(
            "difference-quotient index {i} out of range for a tuple of length {}",
            a.len()
        )));
    }
    let table = v_poly.table();
    for &ap in a_primed {
        if v_poly.depends_on(ap) {
            return Err(LgError::Invalid(format!(
                "potential already depends on primed variable `{}`",
                table.name(ap)
            )));
        }
    }
    let var = |idx: usize| Polynomial::var(table, idx);
    // first slot pattern: a_1 .. a_{i-1}, a_i', a_{i+1}' .. a_k'
    let mut left_map: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (j, (&aj, &apj)) in a.iter().zip(a_primed).enumerate() {
        if j >= i {
            left_map.insert(aj, var(apj));
        }
    }
    // second slot pattern: a_1 .. a_i, a_{i+1}' .. a_k'
    let mut right_map: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (j, (&aj, &apj)) in a.iter().zip(a_primed).enumerate() {
        if j > i {
            right_map.insert(aj, var(apj));
        }
    }
    let numerator = &v_poly.substitute(&left_map)? - &v_poly.substitute(&right_map)?;
    numerator
        .div_linear_diff(a_primed[i], a[i])
        .map_err(|e| LgError::Internal(format!("difference quotient left a remainder: {e}")))
}

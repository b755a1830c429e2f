//! Exact coefficient arithmetic.

mod coeff;
pub mod cyclo;
pub mod ipoly;
mod laurent;
mod rational_c;
mod ratfunc;
pub mod sign;

use std::collections::BTreeMap;

pub use coeff::{Coeff, Field};
pub use cyclo::CycloNum;
pub use laurent::LaurentPoly;
pub use rational_c::RationalC;
pub use ratfunc::RatFunc;
pub use sign::{sign_of_real, SignCert};

use crate::Error;

/// Multiplicity of `Φ_e` in `p` for every `2 ≤ e ≤ e_max` (after clearing the
/// power of `q`). Entries with multiplicity 0 are omitted.
pub fn cyclotomic_root_multiplicities(p: &LaurentPoly, e_max: usize) -> Result<BTreeMap<usize, usize>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (poly, _) = p.to_poly();
    let mut out = BTreeMap::new();
    for e in 2..=e_max {
        let (k, _) = ipoly::multiplicity(&poly, &ipoly::cyclotomic(e));
        if k > 0 {
            out.insert(e, k);
        }
    }
    Ok(out)
}

/// `p = u · Π Φ_e^{k_e}` with `u` a unit of `Z[q, q^{-1}]`: returns the factor
/// table when that holds (for every `e ≤ e_max`), else `None`.
pub fn cyclotomic_factorization(p: &LaurentPoly, e_max: usize) -> Option<BTreeMap<usize, usize>> {
    if p.is_zero() {
        return None;
    }
    let (mut poly, _) = p.to_poly();
    let mut out = BTreeMap::new();
    for e in 1..=e_max {
        let (k, rest) = ipoly::multiplicity(&poly, &ipoly::cyclotomic(e));
        if k > 0 {
            out.insert(e, k);
            poly = rest;
        }
    }
    (poly.len() == 1 && num_traits::Signed::abs(&poly[0]) == num_bigint::BigInt::from(1)).then_some(out)
}

use serde::Serialize;

use super::SpechtData;
use crate::combinat::MultiPartition;
use crate::exact::{Coeff, CycloNum, Field, LaurentPoly, RationalC};
use crate::linalg::{det_bareiss, local_smith_valuations, Matrix};
use crate::Error;

/// The braid-invariant Hermitian form on `S^λ` at `q = e^{2πic}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HermitianGram {
    pub shape: MultiPartition,
    pub c: RationalC,
    pub h: Matrix<CycloNum>,
    pub alpha: CycloNum,
    pub sigma_matrix: Matrix<CycloNum>,
}

/// Dimensions of the Jantzen filtration `M_0 ⊇ M_1 ⊇ …`, ending with 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JantzenReport {
    pub shape: MultiPartition,
    pub c: RationalC,
    pub layer_dims: Vec<usize>,
}

fn require_type_a(sd: &SpechtData<LaurentPoly>) -> Result<(), Error> {
    if sd.level() != 1 {
        return Err(Error::InvalidShape("the module involution is implemented for type A".into()));
    }
    Ok(())
}

/// `s` with `σ(x_λ) = q^s x_λ`.
pub(crate) fn sigma_exponent(shape: &MultiPartition) -> i64 {
    shape
        .components()
        .iter()
        .flat_map(|c| c.parts().iter())
        .map(|&a| -((a * a.saturating_sub(1) / 2) as i64))
        .sum()
}

/// The matrix of the semilinear involution over `Z[q, q^{-1}]`: column `t`
/// holds `σ(v_t)`, so `σ(Σ a_t v_t) = Σ bar(a_t) S e_t`.
pub fn sigma_symbolic(sd: &SpechtData<LaurentPoly>) -> Result<Matrix<LaurentPoly>, Error> {
    require_type_a(sd)?;
    let d = sd.dim();
    let qi = LaurentPoly::monomial(1, -1);
    let mut cols: Vec<Vec<LaurentPoly>> = vec![Vec::new(); d];
    let t0 = sd.order[0];
    let mut e = vec![LaurentPoly::zero(); d];
    e[t0] = LaurentPoly::monomial(1, sigma_exponent(sd.shape()));
    cols[t0] = e;
    for &k in &sd.order[1..] {
        let (p, i) = sd.parents[k].expect("parent");
        // σ(T_i v) = T_i^{-1} σ(v), with T_i^{-1} = q^{-1} T_i + (q^{-1} - 1)
        let tv = sd.action(i).mul_vec(&cols[p]);
        let shift = qi.sub_ref(&LaurentPoly::one());
        cols[k] = tv.iter().zip(&cols[p]).map(|(a, b)| a.mul_ref(&qi).add_ref(&b.mul_ref(&shift))).collect();
    }
    Ok(Matrix::from_fn(d, d, |a, b| cols[b][a].clone()))
}

/// [`sigma_symbolic`] specialized at `q = e^{2πic}`.
pub fn sigma_on_module(sd: &SpechtData<LaurentPoly>, c: &RationalC) -> Result<Matrix<CycloNum>, Error> {
    let m = c.conductor();
    Ok(sigma_symbolic(sd)?.map(|x| x.specialize_in(c, m)))
}

/// A root of unity `α` with `α² = β`, found in `Q(ζ_{4m})` at worst.
fn sqrt_root_of_unity(beta: &CycloNum) -> Option<CycloNum> {
    let m = beta.conductor();
    for k in [m, 2 * m] {
        if let Some(j) = beta.promote(k).as_zeta_power() {
            return Some(if j % 2 == 0 {
                CycloNum::zeta_pow(k, (j / 2) as i64)
            } else {
                CycloNum::zeta_pow(2 * k, j as i64)
            });
        }
    }
    None
}

/// The Hermitian form `(v, w) = α⟨v, σ(w)⟩` with `α` a root of unity.
///
/// `B = G_c S_c` satisfies `⟨v, σ(w)⟩ = aᵀ B b̄` for coordinates `a`, `b`.
/// The returned `H = (αB)ᵀ` is the matrix in the form `(v, w) = a† H b`, so
/// `H† = H` and `ρ(T_i)† H ρ(T_i) = H`.
pub fn hermitian_gram(sd: &SpechtData<LaurentPoly>, c: &RationalC) -> Result<HermitianGram, Error> {
    let m = c.conductor();
    let s = sigma_on_module(sd, c)?;
    let g = sd.gram().map(|x| x.specialize_in(c, m));
    let b = g.mul(&s);
    let d = b.rows();
    let (i, j) = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| !b.get(i, j).is_zero())
        .ok_or_else(|| Error::Degenerate("the form vanishes identically".into()))?;
    let beta = b.get(j, i).conj().div_ref(b.get(i, j));
    if b.adjoint() != b.scale(&beta) {
        return Err(Error::NotHermitian);
    }
    let alpha = sqrt_root_of_unity(&beta).ok_or(Error::NotHermitian)?;
    let big = alpha.conductor();
    let h = b.transpose().map(|x| x.promote(big).mul_ref(&alpha));
    if h.adjoint() != h {
        return Err(Error::NotHermitian);
    }
    Ok(HermitianGram {
        shape: sd.shape().clone(),
        c: *c,
        h,
        alpha,
        sigma_matrix: s,
    })
}

/// Exact determinant of the symbolic Gram matrix.
pub fn gram_determinant(sd: &SpechtData<LaurentPoly>) -> LaurentPoly {
    det_bareiss(sd.gram())
}

/// Jantzen layer dimensions at `q = e^{2πic}` from the `Φ_m`-adic valuations
/// of the elementary divisors of `G(q)` (`m` the denominator of `c`).
pub fn jantzen_layers(sd: &SpechtData<LaurentPoly>, c: &RationalC) -> Result<JantzenReport, Error> {
    let e = c.den() as usize;
    let vals = local_smith_valuations(&sd.gram().map(LaurentPoly::to_ratfunc), e);
    let vals: Vec<i64> = vals
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("Gram matrix is singular over Q(q)".into()))?;
    let mut layer_dims = Vec::new();
    for i in 0.. {
        let dim = vals.iter().filter(|&&v| v >= i).count();
        layer_dims.push(dim);
        if dim == 0 {
            break;
        }
    }
    Ok(JantzenReport {
        shape: sd.shape().clone(),
        c: *c,
        layer_dims,
    })
}

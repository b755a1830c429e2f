use std::collections::BTreeMap;
use std::sync::Arc;

use super::{AlgebraSpec, HeckeElement, Word};
use crate::combinat::{young_subgroup, MultiPartition};
use crate::exact::{Coeff, Field, LaurentPoly};
use crate::linalg::Matrix;
use crate::Error;

impl<C: Coeff> HeckeElement<C> {
    /// The bar involution: `T_i ↦ T_i^{-1}`, `L_m ↦ L_m^{-1}`, coefficients
    /// conjugated. Semilinear.
    pub fn sigma(&self) -> Self {
        let spec = self.spec();
        let mut out = Self::zero(spec);
        for (w, c) in self.terms() {
            // σ(L^a T_w) = Π L_m^{-a_m} · T_{i_1}^{-1} ⋯ T_{i_k}^{-1}
            let mut x = Self::one(spec);
            for &i in w.perm.reduced_word().iter().rev() {
                x = x.left_gen_inv(i);
            }
            for (m0, &a) in w.exps.iter().enumerate() {
                for _ in 0..a {
                    x = x.left_jm_inv(m0 + 1);
                }
            }
            let cb = c.bar();
            for (w2, c2) in x.terms() {
                out.add_term(w2.clone(), cb.mul_ref(c2));
            }
        }
        out
    }

    /// The anti-involution fixing every `T_i` (and hence every `L_m`).
    pub fn star(&self) -> Self {
        let spec = self.spec();
        let mut out = Self::zero(spec);
        for (w, c) in self.terms() {
            // (L^a T_w)^* = T_{w^{-1}} L^a
            let mut x = Self::one(spec);
            for (m0, &a) in w.exps.iter().enumerate() {
                for _ in 0..a {
                    x = x.left_jm(m0 + 1);
                }
            }
            x = x.left_word(&w.perm.inverse().reduced_word());
            for (w2, c2) in x.terms() {
                out.add_term(w2.clone(), c.mul_ref(c2));
            }
        }
        out
    }
}

/// The Jucys–Murphy element `L_m` (1-based).
pub fn jucys_murphy<C: Coeff>(spec: &Arc<AlgebraSpec<C>>, m: usize) -> Result<HeckeElement<C>, Error> {
    if m == 0 || m > spec.n() {
        return Err(Error::InvalidShape(format!("L_{m} is undefined for n = {}", spec.n())));
    }
    Ok(HeckeElement::one(spec).left_jm(m))
}

fn check_shape<C: Coeff>(spec: &AlgebraSpec<C>, shape: &MultiPartition) -> Result<(), Error> {
    if shape.size() != spec.n() || shape.level() != spec.r() {
        return Err(Error::InvalidShape(format!(
            "shape {shape} does not fit n = {}, r = {}",
            spec.n(),
            spec.r()
        )));
    }
    Ok(())
}

/// `x_λ = Σ_{w ∈ 𝔖_λ} T_w`.
pub fn x_lambda<C: Coeff>(spec: &Arc<AlgebraSpec<C>>, shape: &MultiPartition) -> Result<HeckeElement<C>, Error> {
    check_shape(spec, shape)?;
    let mut x = HeckeElement::zero(spec);
    for w in young_subgroup(shape) {
        x.add_term(Word::t(w), spec.one());
    }
    Ok(x)
}

/// `m_λ = x_λ Π_{k=2}^r Π_{m=1}^{a_k} (L_m - q_k)`.
pub fn m_lambda<C: Coeff>(spec: &Arc<AlgebraSpec<C>>, shape: &MultiPartition) -> Result<HeckeElement<C>, Error> {
    let mut x = x_lambda(spec, shape)?;
    // the L_m commute with x_λ, so the product can be applied on the left
    for (k, &a) in shape.offsets().iter().enumerate().skip(1) {
        let qk = &spec.params()[k];
        for m in 1..=a {
            x = x.left_jm(m).sub(&x.scale(qk))?;
        }
    }
    Ok(x)
}

/// For type A over `Z[q, q^{-1}]`: checks `σ(x_λ) = q^s x_λ` and returns `s`.
pub fn verify_sigma_x(spec: &Arc<AlgebraSpec<LaurentPoly>>, shape: &MultiPartition) -> Result<i64, Error> {
    let x = x_lambda(spec, shape)?;
    let s = x.sigma();
    let c = s.coeff(&Word::identity(spec.n()));
    if !c.is_monomial() || c.coeff(c.low_exp()) != 1.into() || s != x.scale(&c) {
        return Err(Error::Internal(format!("σ(x_λ) is not a power of q times x_λ for {shape}")));
    }
    Ok(c.low_exp())
}

/// An invertible `u` with `σ(m_λ) = m_λ u`, together with `u^{-1}`.
#[derive(Clone, Debug)]
pub struct SigmaMWitness<C: Coeff> {
    pub u: HeckeElement<C>,
    pub u_inv: HeckeElement<C>,
    /// Set when `u = γ Π L_k^{b_k}`.
    pub ansatz: Option<(C, Vec<i64>)>,
}

fn jm_monomial<C: Coeff>(spec: &Arc<AlgebraSpec<C>>, b: &[i64]) -> HeckeElement<C> {
    let mut x = HeckeElement::one(spec);
    for (m0, &e) in b.iter().enumerate() {
        for _ in 0..e.unsigned_abs() {
            x = if e > 0 { x.left_jm(m0 + 1) } else { x.left_jm_inv(m0 + 1) };
        }
    }
    x
}

fn exponent_candidates(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |e| {
                    let mut v2 = v.clone();
                    v2.push(e);
                    v2
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().map(|e| e.abs()).sum::<i64>(), v.clone()));
    out
}

/// Finds `u` with `σ(m_λ) = m_λ u` and certifies that it is invertible.
///
/// Tries `u = γ Π L_k^{b_k}` first. Otherwise solves the linear system
/// `m_λ u = σ(m_λ)` and checks the particular solution for invertibility.
pub fn verify_sigma_m<C: Field>(
    spec: &Arc<AlgebraSpec<C>>,
    shape: &MultiPartition,
) -> Result<SigmaMWitness<C>, Error> {
    let m = m_lambda(spec, shape)?;
    let target = m.sigma();
    let (lead_w, lead_c) = target
        .terms()
        .iter()
        .next()
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or_else(|| Error::Degenerate("m_λ vanishes".into()))?;
    let r = spec.r() as i64;
    for b in exponent_candidates(spec.n(), -r, r) {
        let lb = jm_monomial(spec, &b);
        let v = m.multiply(&lb)?;
        let vc = v.coeff(&lead_w);
        if vc.is_zero() {
            continue;
        }
        let gamma = lead_c.div_ref(&vc);
        if v.scale(&gamma) == target {
            let neg: Vec<i64> = b.iter().map(|e| -e).collect();
            let u = lb.scale(&gamma);
            let u_inv = jm_monomial(spec, &neg).scale(&gamma.inv());
            if !u.multiply(&u_inv)?.sub(&HeckeElement::one(spec))?.is_zero() {
                return Err(Error::Internal("JM monomial inverse check failed".into()));
            }
            return Ok(SigmaMWitness {
                u,
                u_inv,
                ansatz: Some((gamma, b)),
            });
        }
    }
    solve_sigma_m(spec, &m, &target)
}

fn left_mult_matrix<C: Field>(x: &HeckeElement<C>, basis: &[crate::hecke::Word], index: &BTreeMap<Word, usize>) -> Matrix<C> {
    let spec = x.spec();
    let cols: Vec<Vec<C>> = basis
        .iter()
        .map(|w| x.multiply(&HeckeElement::monomial(spec, w.clone(), spec.one())).expect("same spec").to_vector(index))
        .collect();
    Matrix::from_fn(basis.len(), basis.len(), |i, j| cols[j][i].clone())
}

fn solve_sigma_m<C: Field>(
    spec: &Arc<AlgebraSpec<C>>,
    m: &HeckeElement<C>,
    target: &HeckeElement<C>,
) -> Result<SigmaMWitness<C>, Error> {
    let basis = spec.basis();
    let index: BTreeMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    let lm = left_mult_matrix(m, &basis, &index);
    let rhs = target.to_vector(&index);
    let aug = Matrix::from_fn(n, n + 1, |i, j| if j < n { lm.get(i, j).clone() } else { rhs[i].clone() });
    let (red, pivots) = aug.rref();
    if pivots.contains(&n) {
        return Err(Error::Degenerate("σ(m_λ) is not in m_λ H".into()));
    }
    let mut sol = vec![spec.zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        sol[p] = red.get(row, n).clone();
    }
    let u = HeckeElement::from_vector(spec, &basis, &sol);
    let lu = left_mult_matrix(&u, &basis, &index);
    let inv = lu.inverse().ok_or_else(|| Error::Degenerate("particular solution is not invertible".into()))?;
    // u · v = 1 with v the image of 1 under (left mult by u)^{-1}
    let one = HeckeElement::one(spec).to_vector(&index);
    let u_inv = HeckeElement::from_vector(spec, &basis, &inv.mul_vec(&one));
    if !u_inv.multiply(&u)?.sub(&HeckeElement::one(spec))?.is_zero() {
        return Err(Error::Internal("inverse witness failed".into()));
    }
    Ok(SigmaMWitness {
        u,
        u_inv,
        ansatz: None,
    })
}

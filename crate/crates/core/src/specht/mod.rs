//! Specht modules in the Murphy basis `v_t = T_{d(t)^{-1}} m_λ` (mod `N̄^λ`),
//! their bilinear form `v_s^* v_t ≡ ⟨v_s, v_t⟩ m_λ`, and the Hermitian form at
//! roots of unity.

mod hermitian;
mod oracle;
mod seminormal;

use serde::Serialize;

use crate::combinat::{MultiPartition, Tableau};
use crate::exact::{Coeff, Field, LaurentPoly, RatFunc};
use crate::hecke::AlgebraSpec;
use crate::linalg::Matrix;
use crate::Error;

pub use hermitian::{
    gram_determinant, hermitian_gram, jantzen_layers, sigma_on_module, sigma_symbolic, HermitianGram, JantzenReport,
};
pub use oracle::oracle_specht;

/// A Specht module with its generator matrices and Gram matrix.
///
/// Matrices act on coordinate columns: column `t` of `action[i]` holds the
/// coordinates of `T_i v_t`. At level 1, `action[0]` is the identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpechtData<C: Coeff> {
    shape: MultiPartition,
    #[serde(serialize_with = "ser_tableaux")]
    basis: Vec<Tableau>,
    /// `(parent, i)` with `v_t = T_i v_parent`.
    #[serde(skip)]
    parents: Vec<Option<(usize, usize)>>,
    #[serde(skip)]
    order: Vec<usize>,
    action: Vec<Matrix<C>>,
    gram: Matrix<C>,
}

fn ser_tableaux<S: serde::Serializer>(b: &[Tableau], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(b.iter().map(|t| t.to_string()))
}

impl<C: Coeff> SpechtData<C> {
    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn level(&self) -> usize {
        self.shape.level()
    }

    /// Generators acting nontrivially: `T_0` only at level ≥ 2.
    pub fn generators(&self) -> std::ops::Range<usize> {
        let lo = if self.level() > 1 { 0 } else { 1 };
        lo..self.n()
    }

    pub fn action(&self, i: usize) -> &Matrix<C> {
        &self.action[i]
    }

    pub fn gram(&self) -> &Matrix<C> {
        &self.gram
    }

    /// `(parent, i)` with `v_t = T_i v_parent`, for every basis index.
    pub fn parents(&self) -> &[Option<(usize, usize)>] {
        &self.parents
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SpechtData<D> {
        SpechtData {
            shape: self.shape.clone(),
            basis: self.basis.clone(),
            parents: self.parents.clone(),
            order: self.order.clone(),
            action: self.action.iter().map(|m| m.map(&f)).collect(),
            gram: self.gram.map(&f),
        }
    }

    /// Checks the module invariants: defining relations, symmetric `G`, and
    /// `ρ(T_i)ᵀ G = G ρ(T_i)`. Returns a description of the first failure.
    pub fn check_invariants(&self, q: &C, params: &[C]) -> Result<(), String> {
        let d = self.dim();
        let one = q.one_like();
        let id = Matrix::identity(d, &one);
        if !self.gram.is_symmetric() {
            return Err("Gram matrix is not symmetric".into());
        }
        for i in self.generators() {
            let t = &self.action[i];
            if t.transpose().mul(&self.gram) != self.gram.mul(t) {
                return Err(format!("T_{i} is not self-adjoint for the form"));
            }
            if i == 0 {
                let mut p = id.clone();
                for qk in params {
                    p = p.mul(&t.sub(&id.scale(qk)));
                }
                if !p.is_zero() {
                    return Err("cyclotomic relation fails".into());
                }
            } else if !t.sub(&id.scale(q)).mul(&t.add(&id)).is_zero() {
                return Err(format!("quadratic relation fails for T_{i}"));
            }
            for j in self.generators() {
                let u = &self.action[j];
                let ok = match i.abs_diff(j) {
                    0 => true,
                    1 if i.min(j) >= 1 => t.mul(u).mul(t) == u.mul(t).mul(u),
                    1 => {
                        let tu = t.mul(u);
                        let ut = u.mul(t);
                        tu.mul(&tu) == ut.mul(&ut)
                    }
                    _ => t.mul(u) == u.mul(t),
                };
                if !ok {
                    return Err(format!("braid relation fails for T_{i}, T_{j}"));
                }
            }
        }
        Ok(())
    }
}

fn check_fit<C: Coeff>(shape: &MultiPartition, spec: &AlgebraSpec<C>) -> Result<(), Error> {
    if shape.size() == 0 {
        return Err(Error::InvalidShape("empty shape has no Specht module".into()));
    }
    if shape.size() != spec.n() || shape.level() != spec.r() {
        return Err(Error::InvalidShape(format!(
            "shape {shape} does not fit n = {}, r = {}",
            spec.n(),
            spec.r()
        )));
    }
    Ok(())
}

fn assemble<C: Field>(shape: &MultiPartition, q: &C, params: &[C]) -> Result<SpechtData<C>, Error> {
    let ch = seminormal::chain(shape);
    let mm = seminormal::murphy_matrices(shape, &ch, q, params)?;
    Ok(SpechtData {
        shape: shape.clone(),
        basis: ch.basis,
        parents: ch.parents,
        order: ch.order,
        action: mm.action,
        gram: mm.gram,
    })
}

/// The symbolic Specht module of `H_q(𝔖_n)` over `Z[q, q^{-1}]`.
pub fn build_specht(shape: &MultiPartition, spec: &AlgebraSpec<LaurentPoly>) -> Result<SpechtData<LaurentPoly>, Error> {
    check_fit(shape, spec)?;
    if spec.r() != 1 {
        return Err(Error::InvalidShape("symbolic Specht modules are type A only".into()));
    }
    let sd = assemble(shape, &RatFunc::q(), &[RatFunc::one()])?;
    let lp = |x: &RatFunc| x.to_laurent();
    let action = sd
        .action
        .iter()
        .map(|m| m.try_map(|x| lp(x).ok_or(())))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::Internal("Murphy action is not integral".into()))?;
    let gram = sd.gram.try_map(|x| lp(x).ok_or(())).map_err(|_| Error::Internal("Gram matrix is not integral".into()))?;
    Ok(SpechtData {
        shape: sd.shape,
        basis: sd.basis,
        parents: sd.parents,
        order: sd.order,
        action,
        gram,
    })
}

/// The Specht module over a field with fixed parameters (any level). Needs the
/// parameters to separate residues, which holds in the semisimple case.
pub fn build_specht_specialized<C: Field>(shape: &MultiPartition, spec: &AlgebraSpec<C>) -> Result<SpechtData<C>, Error> {
    check_fit(shape, spec)?;
    assemble(shape, spec.q(), spec.params())
}

//! Specht modules computed literally inside the full algebra: the ideal
//! `N̄^λ` spanned by the `m_uv` of strictly dominating shapes, the cyclic
//! module `H m_λ` modulo it, and the form read off from `v_s^* v_t`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::seminormal::chain;
use super::{check_fit, SpechtData};
use crate::combinat::{Flavor, MultiPartition, Tableau};
use crate::exact::Field;
use crate::hecke::{m_lambda, AlgebraSpec, HeckeElement, Word};
use crate::linalg::Matrix;
use crate::Error;

const MAX_N: usize = 4;
const MAX_R: usize = 2;

/// `T_{d(t)^{-1}} m`.
fn murphy_vector<C: Field>(t: &Tableau, m: &HeckeElement<C>) -> HeckeElement<C> {
    m.left_word(&t.d_of().inverse().reduced_word())
}

/// The span of `N̄^λ` as a list of algebra elements.
fn dominating_ideal<C: Field>(spec: &Arc<AlgebraSpec<C>>, shape: &MultiPartition) -> Result<Vec<HeckeElement<C>>, Error> {
    let mut out = Vec::new();
    for mu in MultiPartition::all(spec.n(), spec.r()) {
        if !mu.strictly_dominates(shape) {
            continue;
        }
        let m = m_lambda(spec, &mu)?;
        let std = Tableau::enumerate(&mu, Flavor::Standard);
        for v in &std {
            let right = m.multiply(&HeckeElement::t(spec, &v.d_of()))?;
            for u in &std {
                out.push(murphy_vector(u, &right));
            }
        }
    }
    Ok(out)
}

/// Literal construction, for cross-checking. Refuses `n > 4` or `r > 2`.
pub fn oracle_specht<C: Field>(shape: &MultiPartition, spec: &Arc<AlgebraSpec<C>>) -> Result<SpechtData<C>, Error> {
    check_fit(shape, spec)?;
    if spec.n() > MAX_N {
        return Err(Error::SizeGuard {
            what: "n",
            got: spec.n(),
            limit: MAX_N,
        });
    }
    if spec.r() > MAX_R {
        return Err(Error::SizeGuard {
            what: "r",
            got: spec.r(),
            limit: MAX_R,
        });
    }
    let ch = chain(shape);
    let k = ch.basis.len();
    let m = m_lambda(spec, shape)?;
    let nbar = dominating_ideal(spec, shape)?;
    let vs: Vec<HeckeElement<C>> = ch.basis.iter().map(|t| murphy_vector(t, &m)).collect();
    let gens: Vec<usize> = if spec.r() > 1 { (0..spec.n()).collect() } else { (1..spec.n()).collect() };

    // targets: the whole cyclic module, generator images, and the form
    let words = spec.basis();
    let mut targets: Vec<HeckeElement<C>> = Vec::new();
    for w in &words {
        targets.push(HeckeElement::monomial(spec, w.clone(), spec.one()).multiply(&m)?);
    }
    let act_start = targets.len();
    for &i in &gens {
        for v in &vs {
            targets.push(v.left_gen(i));
        }
    }
    let gram_start = targets.len();
    for s in &vs {
        let ss = s.star();
        for t in &vs {
            targets.push(ss.multiply(t)?);
        }
    }

    let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let cols: Vec<Vec<C>> = nbar.iter().chain(&vs).chain(&targets).map(|x| x.to_vector(&index)).collect();
    let big = Matrix::from_fn(words.len(), cols.len(), |i, j| cols[j][i].clone());
    let (red, pivots) = big.rref();
    let nb = nbar.len();
    if pivots.iter().any(|&p| p >= nb + k) {
        return Err(Error::Internal("cyclic module is larger than the standard-tableau span".into()));
    }
    let v_rows: Vec<usize> = (nb..nb + k)
        .map(|c| pivots.iter().position(|&p| p == c))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("Murphy vectors are dependent modulo the ideal".into()))?;
    let coords = |j: usize| -> Vec<C> { v_rows.iter().map(|&r| red.get(r, nb + k + j).clone()).collect() };

    let one = spec.one();
    let zero = spec.zero();
    let mut action = vec![Matrix::identity(k, &one); spec.n()];
    for (g, &i) in gens.iter().enumerate() {
        let colv: Vec<Vec<C>> = (0..k).map(|t| coords(act_start + g * k + t)).collect();
        action[i] = Matrix::from_fn(k, k, |a, b| colv[b][a].clone());
    }
    let t0 = ch.order[0];
    let mut gram = Matrix::zeros(k, k, &zero);
    for s in 0..k {
        for t in 0..k {
            let c = coords(gram_start + s * k + t);
            if c.iter().enumerate().any(|(u, x)| u != t0 && !x.is_zero()) {
                return Err(Error::Internal("v_s^* v_t is not a multiple of m_λ modulo the ideal".into()));
            }
            gram.set(s, t, c[t0].clone());
        }
    }
    Ok(SpechtData {
        shape: shape.clone(),
        basis: ch.basis,
        parents: ch.parents,
        order: ch.order,
        action,
        gram,
    })
}

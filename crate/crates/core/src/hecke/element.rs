use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{AlgebraSpec, Terms, Word};
use crate::combinat::Permutation;
use crate::exact::Coeff;
use crate::Error;

/// An element of the algebra in normal form. No zero coefficients are stored.
#[derive(Clone)]
pub struct HeckeElement<C: Coeff> {
    spec: Arc<AlgebraSpec<C>>,
    terms: Terms<C>,
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero(spec: &Arc<AlgebraSpec<C>>) -> Self {
        HeckeElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<AlgebraSpec<C>>) -> Self {
        Self::monomial(spec, Word::identity(spec.n()), spec.one())
    }

    pub fn scalar(spec: &Arc<AlgebraSpec<C>>, c: C) -> Self {
        Self::monomial(spec, Word::identity(spec.n()), c)
    }

    pub fn monomial(spec: &Arc<AlgebraSpec<C>>, word: Word, c: C) -> Self {
        let mut e = Self::zero(spec);
        e.add_term(word, c);
        e
    }

    /// `T_w`.
    pub fn t(spec: &Arc<AlgebraSpec<C>>, w: &Permutation) -> Self {
        Self::monomial(spec, Word::t(w.clone()), spec.one())
    }

    /// The generator `T_i` (`T_0` only for `r ≥ 2`).
    pub fn gen(spec: &Arc<AlgebraSpec<C>>, i: usize) -> Result<Self, Error> {
        if i >= spec.n() || (i == 0 && spec.r() == 1) {
            return Err(Error::InvalidShape(format!("no generator T_{i} in this algebra")));
        }
        Ok(Self::one(spec).left_gen(i))
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec<C>> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, word: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_spec(&self, o: &Self) -> Result<(), Error> {
        if Arc::ptr_eq(&self.spec, &o.spec) || *self.spec == *o.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        self.same_spec(o)?;
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, Error> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(&self.spec);
        }
        self.map_coeffs(|c| c.mul_ref(s))
    }

    pub(crate) fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(&self.spec);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// `T_i · self`.
    pub fn left_gen(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.spec);
        for (w, c) in &self.terms {
            for (w2, c2) in self.spec.left_gen_word(i, w) {
                out.add_term(w2, c.mul_ref(&c2));
            }
        }
        out
    }

    /// `T_i^{-1} · self`.
    pub fn left_gen_inv(&self, i: usize) -> Self {
        let spec = &self.spec;
        if i >= 1 {
            // T_i^{-1} = q^{-1} T_i + (q^{-1} - 1)
            let a = self.left_gen(i).scale(spec.q_inv());
            let b = self.scale(&spec.q_inv().sub_ref(&spec.one()));
            return a.add(&b).expect("same spec");
        }
        // T_0^{-1} = -p_0^{-1} (T_0^{r-1} + Σ_{j=1}^{r-1} p_j T_0^{j-1})
        let r = spec.r();
        let p0_inv = spec.cyc[0].try_inv().expect("parameters are invertible");
        let mut acc = Self::zero(spec);
        let mut power = self.clone(); // T_0^{j-1} · self
        for j in 1..=r {
            let coeff = if j == r { spec.one() } else { spec.cyc[j].clone() };
            acc = acc.add(&power.scale(&coeff)).expect("same spec");
            if j < r {
                power = power.left_gen(0);
            }
        }
        acc.scale(&p0_inv.neg_ref())
    }

    /// Applies `T_{i_1} ⋯ T_{i_k}` on the left (so `T_{i_k}` acts first).
    pub fn left_word(&self, letters: &[usize]) -> Self {
        letters.iter().rev().fold(self.clone(), |acc, &i| acc.left_gen(i))
    }

    /// Left multiplication by `L_m`.
    pub fn left_jm(&self, m: usize) -> Self {
        let spec = &self.spec;
        let mut x = self.clone();
        // the word T_{m-1} ⋯ T_1 T_0 T_1 ⋯ T_{m-1} acts right to left
        for i in (1..m).rev() {
            x = x.left_gen(i);
        }
        if spec.r() > 1 {
            x = x.left_gen(0);
        }
        for i in 1..m {
            x = x.left_gen(i);
        }
        x.scale(&spec.q_inv().pow_i64(m as i64 - 1))
    }

    /// Left multiplication by `L_m^{-1}`.
    pub fn left_jm_inv(&self, m: usize) -> Self {
        let spec = &self.spec;
        let mut x = self.clone();
        // the word T_{m-1} ⋯ T_1 T_0 T_1 ⋯ T_{m-1} acts right to left
        for i in (1..m).rev() {
            x = x.left_gen_inv(i);
        }
        if spec.r() > 1 {
            x = x.left_gen_inv(0);
        }
        for i in 1..m {
            x = x.left_gen_inv(i);
        }
        x.scale(&spec.q().pow_i64(m as i64 - 1))
    }

    /// Left multiplication by the basis word `L^a T_w`.
    fn left_basis(&self, word: &Word) -> Self {
        let mut x = self.left_word(&word.perm.reduced_word());
        for (m0, &a) in word.exps.iter().enumerate().rev() {
            for _ in 0..a {
                x = x.left_jm(m0 + 1);
            }
        }
        x
    }

    pub fn multiply(&self, o: &Self) -> Result<Self, Error> {
        self.same_spec(o)?;
        let mut out = Self::zero(&self.spec);
        for (w, c) in &self.terms {
            let part = o.left_basis(w);
            for (w2, c2) in part.terms {
                out.add_term(w2, c.mul_ref(&c2));
            }
        }
        Ok(out)
    }

    /// Coordinates in the order of [`AlgebraSpec::basis`].
    pub fn to_vector(&self, index: &BTreeMap<Word, usize>) -> Vec<C> {
        let mut v = vec![self.spec.zero(); index.len()];
        for (w, c) in &self.terms {
            v[index[w]] = c.clone();
        }
        v
    }

    pub fn from_vector(spec: &Arc<AlgebraSpec<C>>, basis: &[Word], v: &[C]) -> Self {
        let mut e = Self::zero(spec);
        for (w, c) in basis.iter().zip(v) {
            e.add_term(w.clone(), c.clone());
        }
        e
    }
}

impl<C: Coeff> PartialEq for HeckeElement<C> {
    fn eq(&self, o: &Self) -> bool {
        self.same_spec(o).is_ok() && self.terms == o.terms
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})·{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (w.to_string(), c))).finish()
    }
}

#[derive(Serialize)]
struct TermJson<'a, C> {
    word: String,
    coeff: &'a C,
}

impl<C: Coeff + Serialize> Serialize for HeckeElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&TermJson {
                word: w.to_string(),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

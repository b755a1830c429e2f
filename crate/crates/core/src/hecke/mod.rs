//! The Hecke algebra of `G(r,1,n)` (type A when `r = 1`) as a normal-form
//! rewriting engine.
//!
//! Basis: `L_1^{a_1} ⋯ L_n^{a_n} T_w` with `0 ≤ a_i < r` and `w ∈ 𝔖_n`, where
//! `L_m = q^{1-m} T_{m-1} ⋯ T_1 T_0 T_1 ⋯ T_{m-1}`. For `r = 1` we set `T_0 = 1`
//! and `q_1 = 1`, so the basis is `{T_w}`. Left multiplication by `T_i` uses the
//! Bernstein-type relation
//! `T_i f(L) = (s_i f)(L) T_i + (q-1) L_{i+1} (f - s_i f)/(L_{i+1} - L_i)`.

mod element;
mod ops;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::combinat::Permutation;
use crate::exact::{Coeff, CycloNum, LaurentPoly, RatFunc, RationalC};
use crate::Error;

pub use element::HeckeElement;
pub use ops::{jucys_murphy, m_lambda, verify_sigma_m, verify_sigma_x, x_lambda, SigmaMWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Coefficients are Laurent polynomials in a formal `q` (type A only).
    Symbolic,
    /// Coefficients live in a field with all parameters fixed.
    Specialized,
}

/// Rank, level and parameters of the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec<C> {
    n: usize,
    r: usize,
    mode: Mode,
    q: C,
    q_inv: C,
    params: Vec<C>,
    /// `p_0, …, p_{r-1}` with `Π_k (x - q_k) = x^r + Σ_j p_j x^j`.
    cyc: Vec<C>,
}

impl AlgebraSpec<LaurentPoly> {
    /// `H_q(𝔖_n)` over `Z[q, q^{-1}]`.
    pub fn symbolic(n: usize) -> Self {
        Self::build(n, LaurentPoly::q(), vec![LaurentPoly::one()], Mode::Symbolic).expect("q is a unit")
    }
}

impl AlgebraSpec<RatFunc> {
    /// `H_q(𝔖_n)` over the field `Q(q)`.
    pub fn generic(n: usize) -> Self {
        Self::build(n, RatFunc::q(), vec![RatFunc::one()], Mode::Symbolic).expect("q is a unit")
    }
}

impl AlgebraSpec<CycloNum> {
    /// Parameters on the unit circle: `q = e^{2πic}` and `q_k = e^{2πi c_k}`.
    pub fn at_roots_of_unity(n: usize, c: &RationalC, cs: &[RationalC]) -> Result<Self, Error> {
        let q = CycloNum::zeta_pow(c.den(), c.num());
        let params = cs.iter().map(|ck| CycloNum::zeta_pow(ck.den(), ck.num())).collect();
        Self::new(n, q, params)
    }
}

impl<C: Coeff> AlgebraSpec<C> {
    /// A specialized algebra with the given `q` and `q_1, …, q_r` (for `r = 1`
    /// the single parameter must be 1).
    pub fn new(n: usize, q: C, params: Vec<C>) -> Result<Self, Error> {
        Self::build(n, q, params, Mode::Specialized)
    }

    fn build(n: usize, q: C, params: Vec<C>, mode: Mode) -> Result<Self, Error> {
        if n == 0 || params.is_empty() {
            return Err(Error::InvalidShape("need n >= 1 and r >= 1".into()));
        }
        if params.len() == 1 && !params[0].is_one() {
            return Err(Error::InvalidShape("type A convention requires q_1 = 1".into()));
        }
        let q_inv = q.try_inv().ok_or_else(|| Error::Degenerate("q is not invertible".into()))?;
        if params.iter().any(|p| p.try_inv().is_none()) {
            return Err(Error::Degenerate("cyclotomic parameters must be invertible".into()));
        }
        // σ needs bar(x) = x^{-1} for every parameter (the unit circle)
        if std::iter::once(&q).chain(&params).any(|p| !p.bar().mul_ref(p).is_one()) {
            return Err(Error::Degenerate("parameters must lie on the unit circle".into()));
        }
        // expand Π (x - q_k), coefficients low to high
        let one = q.one_like();
        let mut poly = vec![one.clone()];
        for p in &params {
            let mut next = vec![one.zero_like(); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j + 1] = next[j + 1].add_ref(c);
                next[j] = next[j].sub_ref(&c.mul_ref(p));
            }
            poly = next;
        }
        poly.pop();
        Ok(AlgebraSpec {
            n,
            r: params.len(),
            mode,
            q,
            q_inv,
            params,
            cyc: poly,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn q(&self) -> &C {
        &self.q
    }

    pub fn q_inv(&self) -> &C {
        &self.q_inv
    }

    pub fn params(&self) -> &[C] {
        &self.params
    }

    pub fn one(&self) -> C {
        self.q.one_like()
    }

    pub fn zero(&self) -> C {
        self.q.zero_like()
    }

    /// `r^n · n!`.
    pub fn dimension(&self) -> usize {
        self.r.pow(self.n as u32) * (1..=self.n).product::<usize>()
    }

    /// All normal-form words in a fixed order.
    pub fn basis(&self) -> Vec<Word> {
        let perms = Permutation::all(self.n);
        let mut exps_list = vec![vec![]];
        for _ in 0..self.n {
            exps_list = exps_list
                .into_iter()
                .flat_map(|e: Vec<u8>| {
                    (0..self.r as u8).map(move |a| {
                        let mut e2 = e.clone();
                        e2.push(a);
                        e2
                    })
                })
                .collect();
        }
        let mut out: Vec<Word> = exps_list
            .iter()
            .flat_map(|e| perms.iter().map(move |w| Word { exps: e.clone(), perm: w.clone() }))
            .collect();
        out.sort();
        out
    }

    /// Terms of `T_i · (L^a T_w)` in normal form.
    pub(crate) fn left_gen_word(&self, i: usize, word: &Word) -> Vec<(Word, C)> {
        let one = self.one();
        if i == 0 {
            let a1 = word.exps[0] as usize + 1;
            if a1 < self.r {
                let mut w = word.clone();
                w.exps[0] = a1 as u8;
                return vec![(w, one)];
            }
            // L_1^r = -Σ_j p_j L_1^j
            return (0..self.r)
                .filter(|&j| !self.cyc[j].is_zero())
                .map(|j| {
                    let mut w = word.clone();
                    w.exps[0] = j as u8;
                    (w, self.cyc[j].neg_ref())
                })
                .collect();
        }
        let qm1 = self.q.sub_ref(&one);
        let (a, b) = (word.exps[i - 1], word.exps[i]);
        let mut out = Vec::new();
        // (s_i f)(L) · T_i T_w
        let mut swapped = word.exps.clone();
        swapped.swap(i - 1, i);
        let up = word.perm.left_mul_simple(i);
        if word.perm.left_ascent(i) {
            out.push((Word { exps: swapped, perm: up }, one.clone()));
        } else {
            out.push((Word { exps: swapped.clone(), perm: up }, self.q.clone()));
            out.push((Word { exps: swapped, perm: word.perm.clone() }, qm1.clone()));
        }
        // (q-1) L_{i+1} (f - s_i f)/(L_{i+1} - L_i) · T_w
        if a != b {
            let (lo, hi, sign) = if a > b { (b, a, qm1.neg_ref()) } else { (a, b, qm1) };
            for j in 0..(hi - lo) {
                let mut e = word.exps.clone();
                e[i - 1] = lo + j;
                e[i] = hi - j;
                out.push((Word { exps: e, perm: word.perm.clone() }, sign.clone()));
            }
        }
        out
    }
}

/// A normal-form basis word `L^a T_w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub exps: Vec<u8>,
    pub perm: Permutation,
}

impl Word {
    pub fn identity(n: usize) -> Self {
        Word {
            exps: vec![0; n],
            perm: Permutation::identity(n),
        }
    }

    pub fn t(perm: Permutation) -> Self {
        Word {
            exps: vec![0; perm.n()],
            perm,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.iter().any(|&a| a != 0) {
            let e: Vec<String> = self.exps.iter().map(u8::to_string).collect();
            write!(f, "L^({})", e.join(","))?;
        }
        write!(f, "T{}", self.perm)
    }
}

pub(crate) type Terms<C> = BTreeMap<Word, C>;

//! Murphy-basis matrices obtained through the Jucys–Murphy eigenbasis.
//!
//! Over a field where the residues separate the standard tableaux, `L_m` acts
//! diagonally on a basis `f_t`, and `T_i` moves `f_s` to `f_{s s_i}` up to a
//! diagonal correction. The Murphy vectors `v_t = T_{d(t)^{-1}} m_λ` are then
//! expanded in this basis along a chain of length-increasing steps, which gives
//! the change of basis `R` with `v = f R`.

use std::collections::HashMap;

use crate::combinat::{Flavor, MultiPartition, Tableau};
use crate::exact::Field;
use crate::linalg::Matrix;
use crate::Error;

/// How each standard tableau other than `t^λ` is reached: `t = parent · s_i`
/// with `l(d(t)) = l(d(parent)) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Chain {
    pub basis: Vec<Tableau>,
    /// `(parent index, i)` for each basis element; `None` for `t^λ`.
    pub parents: Vec<Option<(usize, usize)>>,
    /// Indices in order of increasing length of `d(t)`.
    pub order: Vec<usize>,
}

/// Position of `i` in the reading order of `t^λ`-shaped cells, i.e. the index
/// of `i` in the reading word.
fn reading_pos(word: &[u8], i: usize) -> usize {
    word.iter().position(|&x| x as usize == i).expect("entry present")
}

pub(crate) fn chain(shape: &MultiPartition) -> Chain {
    let basis = Tableau::enumerate(shape, Flavor::Standard);
    let index: HashMap<Vec<u8>, usize> = basis.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
    let n = shape.size();
    let mut parents = vec![None; basis.len()];
    let mut seen = vec![false; basis.len()];
    let start = index[&Tableau::initial(shape).reading_word()];
    seen[start] = true;
    let mut order = vec![start];
    let mut head = 0;
    while head < order.len() {
        let k = order[head];
        head += 1;
        let word = basis[k].reading_word();
        for i in 1..n {
            // going up: i is read before i+1
            if reading_pos(&word, i) > reading_pos(&word, i + 1) {
                continue;
            }
            let up = basis[k].swap_entries(i);
            if let Some(&j) = index.get(&up.reading_word()) {
                if !seen[j] {
                    seen[j] = true;
                    parents[j] = Some((k, i));
                    order.push(j);
                }
            }
        }
    }
    debug_assert!(seen.iter().all(|&s| s), "standard tableaux form a lower interval");
    Chain { basis, parents, order }
}

/// Generator matrices (index `i` is `T_i`; `T_0` is the identity at level 1)
/// and the Gram matrix in the Murphy basis, over a field in which all needed
/// residue differences are invertible.
pub(crate) struct MurphyMatrices<C> {
    pub action: Vec<Matrix<C>>,
    pub gram: Matrix<C>,
}

pub(crate) fn murphy_matrices<C: Field>(
    shape: &MultiPartition,
    ch: &Chain,
    q: &C,
    params: &[C],
) -> Result<MurphyMatrices<C>, Error> {
    let n = shape.size();
    let dim = ch.basis.len();
    let one = q.one_like();
    let zero = q.zero_like();
    let residue = |t: &Tableau, m: usize| -> C {
        let c = t.cell_of(m);
        params[c.component].mul_ref(&q.pow_i64(c.content()))
    };
    let index: HashMap<Vec<u8>, usize> = ch.basis.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();

    // seminormal action of T_i, i ≥ 1, and the diagonal Gram Γ
    let mut sn = vec![Matrix::identity(dim, &one)];
    for i in 1..n {
        let mut m = Matrix::zeros(dim, dim, &zero);
        for (k, t) in ch.basis.iter().enumerate() {
            let (a, b) = (t.cell_of(i), t.cell_of(i + 1));
            if a.component == b.component && a.row == b.row {
                m.set(k, k, q.clone());
                continue;
            }
            if a.component == b.component && a.col == b.col {
                m.set(k, k, one.neg_ref());
                continue;
            }
            let word = t.reading_word();
            let other = index[&t.swap_entries(i).reading_word()];
            let rho = residue(t, i + 1).mul_ref(&residue(t, i).try_inv().expect("residues are units"));
            if rho.is_one() {
                return Err(Error::Degenerate("residues do not separate tableaux".into()));
            }
            let qm1 = q.sub_ref(&one);
            let a_coef = qm1.mul_ref(&rho).div_ref(&rho.sub_ref(&one));
            if reading_pos(&word, i) < reading_pos(&word, i + 1) {
                // t is the lower of the pair
                m.set(k, k, a_coef);
                m.set(other, k, one.clone());
            } else {
                // t is the upper one; ρ is measured on the lower tableau
                let rho_lo = rho.inv();
                let a_lo = qm1.mul_ref(&rho_lo).div_ref(&rho_lo.sub_ref(&one));
                let b_lo = qm1.div_ref(&one.sub_ref(&rho_lo));
                m.set(k, k, b_lo.clone());
                m.set(other, k, a_lo.mul_ref(&b_lo).add_ref(q));
            }
        }
        sn.push(m);
    }

    let mut gamma = vec![zero.clone(); dim];
    let t0 = ch.order[0];
    gamma[t0] = initial_gamma(shape, &ch.basis[t0], q, params, &residue);
    for &k in &ch.order[1..] {
        let (p, i) = ch.parents[k].expect("non-initial tableaux have parents");
        // γ_hi = γ_lo (AB + q): the (lo, hi) entry of ρ(T_i) on the hi column
        gamma[k] = gamma[p].mul_ref(sn[i].get(p, k));
    }

    // columns of R are the Murphy vectors in the seminormal basis
    let mut rcols: Vec<Vec<C>> = vec![Vec::new(); dim];
    let mut e = vec![zero.clone(); dim];
    e[t0] = one.clone();
    rcols[t0] = e;
    for &k in &ch.order[1..] {
        let (p, i) = ch.parents[k].expect("parent");
        rcols[k] = sn[i].mul_vec(&rcols[p]);
    }
    let r = Matrix::from_fn(dim, dim, |a, b| rcols[b][a].clone());
    let r_inv = r.inverse().ok_or_else(|| Error::Internal("Murphy vectors are dependent".into()))?;

    let mut action = vec![Matrix::identity(dim, &one)];
    if params.len() > 1 {
        // T_0 = L_1 acts by the residue of 1
        let d = Matrix::from_fn(dim, dim, |a, b| if a == b { residue(&ch.basis[a], 1) } else { zero.clone() });
        action[0] = r_inv.mul(&d).mul(&r);
    }
    for s in &sn[1..] {
        action.push(r_inv.mul(&s.mul(&r)));
    }
    let g = Matrix::from_fn(dim, dim, |a, b| if a == b { gamma[a].clone() } else { zero.clone() });
    let gram = r.transpose().mul(&g).mul(&r);
    Ok(MurphyMatrices { action, gram })
}

/// `⟨m_λ, m_λ⟩`: `[λ]_q!` times `Π_{k≥2} Π_{m ≤ a_k} (res(m) - q_k)`.
fn initial_gamma<C: Field>(
    shape: &MultiPartition,
    t: &Tableau,
    q: &C,
    params: &[C],
    residue: &impl Fn(&Tableau, usize) -> C,
) -> C {
    let one = q.one_like();
    let mut g = one.clone();
    for (_, _, len) in shape.rows() {
        // [len]_q! = Π_{j ≤ len} (1 + q + … + q^{j-1})
        let mut qint = q.zero_like();
        for j in 0..len {
            qint = qint.add_ref(&q.pow_i64(j as i64));
            g = g.mul_ref(&qint);
        }
    }
    for (k, &a) in shape.offsets().iter().enumerate().skip(1) {
        for m in 1..=a {
            g = g.mul_ref(&residue(t, m).sub_ref(&params[k]));
        }
    }
    g
}

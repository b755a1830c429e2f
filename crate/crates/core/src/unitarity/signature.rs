use std::fmt;

use serde::{Serialize, Serializer};

use crate::exact::{sign_of_real, Coeff, CycloNum, Field};
use crate::linalg::Matrix;
use crate::Error;

/// Inertia `(n₊, n₋, n₀)` of a Hermitian matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }

    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.zero
    }

    /// Definite on the nondegenerate part (either sign).
    pub fn is_semidefinite(&self) -> bool {
        self.pos == 0 || self.neg == 0
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.pos, self.neg, self.zero].serialize(s)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.pos, self.neg, self.zero)
    }
}

/// Inertia by exact conjugate-congruence elimination with certified pivot signs.
pub fn signature(h: &Matrix<CycloNum>) -> Result<Signature, Error> {
    if !h.is_square() || h.adjoint() != *h {
        return Err(Error::NotHermitian);
    }
    let mut a = h.clone();
    let mut active: Vec<usize> = (0..a.rows()).collect();
    let mut sig = Signature::default();
    while !active.is_empty() {
        let pivot = active.iter().position(|&i| !a.get(i, i).is_zero());
        let Some(pp) = pivot else {
            // zero diagonal: make one diagonal entry nonzero, or stop
            let hit = active
                .iter()
                .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                .find(|&(i, j)| i != j && !a.get(i, j).is_zero());
            let Some((i, j)) = hit else {
                sig.zero += active.len();
                break;
            };
            // row_i += t row_j, col_i += conj(t) col_j with t = h_ij: the new
            // (i, i) entry is 2|h_ij|² > 0
            let t = a.get(i, j).clone();
            let tc = t.conj();
            for &k in &active {
                let v = a.get(i, k).add_ref(&t.mul_ref(a.get(j, k)));
                a.set(i, k, v);
            }
            for &k in &active {
                let v = a.get(k, i).add_ref(&tc.mul_ref(a.get(k, j)));
                a.set(k, i, v);
            }
            continue;
        };
        let p = active.remove(pp);
        let d = a.get(p, p).clone();
        match sign_of_real(&d)?.sign {
            1 => sig.pos += 1,
            -1 => sig.neg += 1,
            _ => return Err(Error::Internal("nonzero pivot has sign 0".into())),
        }
        let dinv = d.inv();
        // Schur complement: a_ij -= a_ip a_pp^{-1} a_pj
        for &i in &active {
            if a.get(i, p).is_zero() {
                continue;
            }
            let f = a.get(i, p).mul_ref(&dinv);
            for &j in &active {
                if a.get(p, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j).sub_ref(&f.mul_ref(a.get(p, j)));
                a.set(i, j, v);
            }
        }
    }
    Ok(sig)
}

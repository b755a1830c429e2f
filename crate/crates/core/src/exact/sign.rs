//! Certified signs of real cyclotomic numbers.
//!
//! A real `x = (1/d) Σ a_k ζ^k` equals `(1/d) Σ a_k cos(2πk/m)`. The cosines are
//! evaluated in binary fixed point with a proven error bound per value; the
//! working precision doubles until the accumulated error interval excludes 0.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use once_cell::sync::Lazy;
use serde::Serialize;

use super::coeff::Coeff;
use super::CycloNum;
use crate::Error;

static DEFAULT_START_BITS: AtomicU32 = AtomicU32::new(64);

/// Starting precision for [`sign_of_real`].
pub fn default_precision_bits() -> u32 {
    DEFAULT_START_BITS.load(Ordering::Relaxed)
}

pub fn set_default_precision_bits(bits: u32) {
    DEFAULT_START_BITS.store(bits.max(16), Ordering::Relaxed);
}

/// Extra bits carried beyond the requested precision.
const GUARD: u32 = 32;
/// Upper bound on the error of each tabulated cosine, in units of `2^-(prec+GUARD)`.
const ERR_ULPS: u32 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignCert {
    #[serde(skip)]
    pub value: CycloNum,
    pub sign: i8,
    pub precision_used: u32,
}

/// `atan(1/x)` scaled by `2^p`, error below `terms` units.
fn atan_inv(x: u32, p: u32) -> BigInt {
    let one = BigInt::from(1) << p;
    let x2 = BigInt::from(x) * x;
    let mut power = &one / x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = &power / &x2;
        k += 1;
    }
    sum
}

/// `π · 2^p` with error well below `2^8` units.
fn pi_fixed(p: u32) -> BigInt {
    (atan_inv(5, p) * 16) - (atan_inv(239, p) * 4)
}

/// `cos(t)` for `0 ≤ t ≤ π`, both scaled by `2^p`.
fn cos_fixed(t: &BigInt, p: u32) -> BigInt {
    let one = BigInt::from(1) << p;
    let t2 = (t * t) >> p;
    let mut term = one.clone();
    let mut sum = one;
    let mut j = 1u32;
    loop {
        term = -((&term * &t2) >> p) / ((2 * j - 1) * (2 * j));
        if term.is_zero() {
            break;
        }
        sum += &term;
        j += 1;
    }
    sum
}

type CosTable = Arc<Vec<BigInt>>;

static COS_TABLES: Lazy<Mutex<HashMap<(u32, u32), CosTable>>> = Lazy::new(Default::default);

/// `cos(2πk/m) · 2^(prec+GUARD)` for `0 ≤ k < m`.
fn cos_table(m: u32, prec: u32) -> CosTable {
    if let Some(t) = COS_TABLES.lock().unwrap().get(&(m, prec)) {
        return t.clone();
    }
    let p = prec + GUARD;
    // extra internal bits absorb truncation in the series and in π
    let q = p + 24;
    let pi = pi_fixed(q);
    let table: Vec<BigInt> = (0..m)
        .map(|k| {
            let kk = k.min(m - k);
            let t = (&pi * (2 * kk)) / m;
            cos_fixed(&t, q) >> 24u32
        })
        .collect();
    let table = Arc::new(table);
    COS_TABLES.lock().unwrap().insert((m, prec), table.clone());
    table
}

/// Certified sign of a real cyclotomic number, starting at the default precision.
pub fn sign_of_real(x: &CycloNum) -> Result<SignCert, Error> {
    sign_of_real_from(x, default_precision_bits())
}

pub fn sign_of_real_from(x: &CycloNum, start_bits: u32) -> Result<SignCert, Error> {
    if !x.is_real() {
        return Err(Error::NonReal);
    }
    if x.is_zero() {
        return Ok(SignCert {
            value: x.clone(),
            sign: 0,
            precision_used: 0,
        });
    }
    if let Some(r) = x.as_rational() {
        return Ok(SignCert {
            value: x.clone(),
            sign: if r.is_positive() { 1 } else { -1 },
            precision_used: 0,
        });
    }
    let m = x.conductor();
    let nums = x.numerators();
    let weight: BigInt = nums.iter().map(|c| c.abs()).sum::<BigInt>() * ERR_ULPS;
    let mut prec = start_bits.max(16);
    loop {
        let table = cos_table(m, prec);
        let s: BigInt = nums
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c * &table[k])
            .sum();
        if s.abs() > weight {
            return Ok(SignCert {
                value: x.clone(),
                sign: if s.is_positive() { 1 } else { -1 },
                precision_used: prec,
            });
        }
        prec = prec.checked_mul(2).expect("precision overflow");
    }
}

//! Dense univariate polynomials over `Z`, coefficients in ascending order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

pub type IPoly = Vec<BigInt>;

pub fn trim(p: &mut IPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &IPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out: IPoly = (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

pub fn neg(a: &IPoly) -> IPoly {
    a.iter().map(|x| -x).collect()
}

pub fn sub(a: &IPoly, b: &IPoly) -> IPoly {
    add(a, &neg(b))
}

pub fn mul(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &IPoly, c: &BigInt) -> IPoly {
    let mut out: IPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub fn content(a: &IPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(a: &IPoly) -> IPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b`.
fn pseudo_rem(a: &IPoly, b: &IPoly) -> IPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        r = r.iter().map(|x| x * &lb).collect();
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &IPoly, b: &IPoly) -> IPoly {
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

/// `a / b` when the division is exact over `Z`.
pub fn exact_div(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let (quo, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - 1 - db;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &quo * y;
        }
        q[shift] = quo;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

pub fn eval_i64(a: &IPoly, x: i64) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

static CYCLOTOMIC: Lazy<Mutex<HashMap<usize, Arc<IPoly>>>> = Lazy::new(Default::default);

/// The `m`-th cyclotomic polynomial `Φ_m`.
pub fn cyclotomic(m: usize) -> Arc<IPoly> {
    assert!(m >= 1);
    if let Some(p) = CYCLOTOMIC.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 = Π_{d | m} Φ_d
    let mut p: IPoly = vec![BigInt::zero(); m + 1];
    p[0] = -BigInt::one();
    p[m] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            p = exact_div(&p, &cyclotomic(d)).expect("Φ_d divides x^m - 1");
        }
    }
    let p = Arc::new(p);
    CYCLOTOMIC.lock().unwrap().insert(m, p.clone());
    p
}

/// Multiplicity of `f` (assumed irreducible, nonconstant) as a factor of `a != 0`;
/// returns the multiplicity and the cofactor.
pub fn multiplicity(a: &IPoly, f: &IPoly) -> (usize, IPoly) {
    assert!(!a.is_empty());
    let mut k = 0;
    let mut cur = a.clone();
    while let Some(next) = exact_div(&cur, f) {
        cur = next;
        k += 1;
    }
    (k, cur)
}

pub fn from_i64(v: &[i64]) -> IPoly {
    let mut p: IPoly = v.iter().map(|&x| BigInt::from(x)).collect();
    trim(&mut p);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(*cyclotomic(1), from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic(2), from_i64(&[1, 1]));
        assert_eq!(*cyclotomic(3), from_i64(&[1, 1, 1]));
        assert_eq!(*cyclotomic(4), from_i64(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), from_i64(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn gcd_and_division() {
        let a = mul(&from_i64(&[1, 1]), &from_i64(&[2, 0, 1]));
        let b = mul(&from_i64(&[1, 1]), &from_i64(&[-3, 1]));
        assert_eq!(gcd(&a, &b), from_i64(&[1, 1]));
        assert_eq!(exact_div(&a, &from_i64(&[2, 0, 1])), Some(from_i64(&[1, 1])));
        assert_eq!(exact_div(&a, &from_i64(&[3, 1])), None);
        assert_eq!(multiplicity(&mul(&a, &a), &from_i64(&[1, 1])).0, 2);
    }
}

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::{Coeff, Field};
use super::ipoly;

/// Precomputed data for `Q(ζ_m)`: the degree `φ(m)` and the reduction of every
/// power `ζ^k`, `0 ≤ k < m`, in the power basis `1, ζ, …, ζ^{φ-1}`.
pub struct CycloCtx {
    m: u32,
    phi: usize,
    pow: Vec<Vec<i64>>,
}

impl CycloCtx {
    fn build(m: u32) -> CycloCtx {
        let phi_poly = ipoly::cyclotomic(m as usize);
        let phi = phi_poly.len() - 1;
        let lower: Vec<i64> = phi_poly[..phi]
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient fits in i64"))
            .collect();
        let mut pow = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..m {
            pow.push(cur.clone());
            // multiply by ζ and reduce with ζ^φ = -Σ lower[j] ζ^j
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] = cur[j]
                        .checked_sub(top.checked_mul(lower[j]).expect("overflow"))
                        .expect("overflow");
                }
            }
        }
        CycloCtx { m, phi, pow }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Power-basis coordinates of `ζ^k`.
    pub fn power(&self, k: usize) -> &[i64] {
        &self.pow[k % self.m as usize]
    }
}

static CONTEXTS: Lazy<Mutex<HashMap<u32, Arc<CycloCtx>>>> = Lazy::new(Default::default);

pub fn context(m: u32) -> Arc<CycloCtx> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(c) = CONTEXTS.lock().unwrap().get(&m) {
        return c.clone();
    }
    let ctx = Arc::new(CycloCtx::build(m));
    CONTEXTS.lock().unwrap().entry(m).or_insert(ctx).clone()
}

/// An element of `Q(ζ_m)`, with `ζ_m ↦ e^{2πi/m}` as the fixed embedding.
///
/// Stored as an integer coordinate vector (length `φ(m)`) over a positive common
/// denominator, with the overall gcd divided out, so equal values at the same
/// conductor have identical representations.
#[derive(Clone)]
pub struct CycloNum {
    ctx: Arc<CycloCtx>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    fn from_parts(ctx: Arc<CycloCtx>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = CycloNum { ctx, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(m: u32) -> Self {
        let ctx = context(m);
        let num = vec![BigInt::zero(); ctx.phi];
        CycloNum {
            ctx,
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_int(m: u32, v: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(m);
        x.num[0] = v.into();
        x
    }

    pub fn one(m: u32) -> Self {
        Self::from_int(m, 1)
    }

    pub fn rational(m: u32, r: &BigRational) -> Self {
        let mut x = Self::zero(m);
        x.num[0] = r.numer().clone();
        x.den = r.denom().clone();
        x.normalize();
        x
    }

    /// `ζ_m^k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let ctx = context(m);
        let num = ctx.power(k.rem_euclid(m as i64) as usize).iter().map(|&c| BigInt::from(c)).collect();
        CycloNum {
            ctx,
            num,
            den: BigInt::one(),
        }
    }

    /// `Σ c · ζ_m^k` over the given `(k, c)` pairs.
    pub fn from_power_terms(m: u32, terms: &[(usize, BigInt)]) -> Self {
        let ctx = context(m);
        let mut num = vec![BigInt::zero(); ctx.phi];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in num.iter_mut().zip(ctx.power(*k)) {
                if p != 0 {
                    *slot += c * p;
                }
            }
        }
        Self::from_parts(ctx, num, BigInt::one())
    }

    pub fn from_coords(m: u32, coords: &[BigRational]) -> Self {
        let ctx = context(m);
        assert_eq!(coords.len(), ctx.phi, "coordinate vector has wrong length");
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(ctx, num, den)
    }

    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.m
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }

    /// The same number in `Q(ζ_big)`; `big` must be a multiple of the conductor.
    pub fn promote(&self, big: u32) -> Self {
        let m = self.ctx.m;
        if big == m {
            return self.clone();
        }
        assert_eq!(big % m, 0, "cannot promote Q(ζ_{m}) into Q(ζ_{big})");
        let step = (big / m) as usize;
        let terms: Vec<(usize, BigInt)> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k * step, c.clone()))
            .collect();
        let mut x = Self::from_power_terms(big, &terms);
        x.den = self.den.clone();
        x.normalize();
        x
    }

    /// Both operands at a common conductor (the lcm).
    fn aligned<'a>(&'a self, o: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if self.ctx.m == o.ctx.m {
            (Cow::Borrowed(self), Cow::Borrowed(o))
        } else {
            let l = (self.ctx.m as u64).lcm(&(o.ctx.m as u64));
            let l = u32::try_from(l).expect("conductor overflow");
            (Cow::Owned(self.promote(l)), Cow::Owned(o.promote(l)))
        }
    }

    /// Complex conjugation, i.e. the automorphism `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.ctx.m as usize;
        let terms: Vec<(usize, BigInt)> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| ((m - k) % m, c.clone()))
            .collect();
        let mut x = Self::from_power_terms(self.ctx.m, &terms);
        x.den = self.den.clone();
        x.normalize();
        x
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The value when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// `k` with `self = ζ_m^k`, if `self` is a power of `ζ_m`.
    pub fn as_zeta_power(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        (0..self.ctx.m).find(|&k| {
            self.ctx
                .power(k as usize)
                .iter()
                .zip(&self.num)
                .all(|(&p, c)| *c == BigInt::from(p))
        })
    }

    /// Floating-point value under the fixed embedding (diagnostics only).
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let m = self.ctx.m as f64;
        let d = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / d;
            let t = std::f64::consts::TAU * k as f64 / m;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    fn mul_same(&self, o: &Self) -> Self {
        let phi = self.ctx.phi;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut res: Vec<BigInt> = conv.drain(..phi).collect();
        for (k, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in res.iter_mut().zip(self.ctx.power(k + phi)) {
                if p != 0 {
                    *slot += &c * p;
                }
            }
        }
        Self::from_parts(self.ctx.clone(), res, &self.den * &o.den)
    }

    fn add_same(&self, o: &Self, negate: bool) -> Self {
        let num = if self.den == o.den {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &o.den, b * &self.den);
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect()
        };
        let den = if self.den == o.den {
            self.den.clone()
        } else {
            &self.den * &o.den
        };
        Self::from_parts(self.ctx.clone(), num, den)
    }

    /// Inverse by solving `x · y = 1` as a linear system over `Q`.
    fn inverse(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            return None;
        }
        let phi = self.ctx.phi;
        // column j holds the coordinates of num · ζ^j
        let cols: Vec<Vec<BigInt>> = (0..phi)
            .map(|j| {
                let zj = CycloNum::zeta_pow(self.ctx.m, j as i64);
                let p = CycloNum {
                    ctx: self.ctx.clone(),
                    num: self.num.clone(),
                    den: BigInt::one(),
                }
                .mul_same(&zj);
                // p has denominator 1 since both factors are integral
                p.num
            })
            .collect();
        let mut a: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..phi).map(|j| BigRational::from_integer(cols[j][i].clone())).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (v, p) in row.iter_mut().zip(&pivot_row) {
                        *v = &*v - &f * p;
                    }
                }
            }
        }
        let sol: Vec<BigRational> = a.into_iter().map(|row| row[phi].clone() * BigRational::from_integer(self.den.clone())).collect();
        Some(Self::from_coords(self.ctx.m, &sol))
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, o: &Self) -> bool {
        let (a, b) = self.aligned(o);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for CycloNum {}

impl Coeff for CycloNum {
    fn zero_like(&self) -> Self {
        Self::zero(self.ctx.m)
    }
    fn one_like(&self) -> Self {
        Self::one(self.ctx.m)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Self::from_int(self.ctx.m, v)
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
    fn add_ref(&self, o: &Self) -> Self {
        let (a, b) = self.aligned(o);
        a.add_same(&b, false)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let (a, b) = self.aligned(o);
        a.add_same(&b, true)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let (a, b) = self.aligned(o);
        a.mul_same(&b)
    }
    fn neg_ref(&self) -> Self {
        CycloNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn bar(&self) -> Self {
        self.conj()
    }
}

impl Field for CycloNum {}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Coeff::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let (neg, mag) = (r.is_negative(), r.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "ζ{}^{k}", self.ctx.m)?,
                (_, false) => write!(f, "{mag}·ζ{}^{k}", self.ctx.m)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    m: u32,
    coords: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloJson {
            m: self.ctx.m,
            coords: self.coords().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = CycloJson::deserialize(d)?;
        if j.m == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coords = j
            .coords
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != context(j.m).phi {
            return Err(D::Error::custom("coordinate vector has wrong length"));
        }
        Ok(CycloNum::from_coords(j.m, &coords))
    }
}

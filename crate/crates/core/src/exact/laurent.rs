use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::Coeff;
use super::ipoly::{self, IPoly};
use super::{CycloNum, RatFunc, RationalC};

/// An integer Laurent polynomial in `q`, stored densely from its lowest exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    /// Coefficients of `q^low, q^(low+1), ...`; first and last are nonzero.
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(e, c)| acc.add_ref(&Self::monomial(c, e)))
    }

    fn normalize(&mut self) {
        ipoly::trim(&mut self.coeffs);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn low_exp(&self) -> i64 {
        self.low
    }

    pub fn high_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.coeffs.is_empty() || exp < self.low || exp > self.high_exp() {
            BigInt::zero()
        } else {
            self.coeffs[(exp - self.low) as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// `p(q^{-1})`.
    pub fn bar(&self) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        LaurentPoly {
            low: -self.high_exp(),
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `(q^{-low} p, low)`: an ordinary polynomial and the shift that was cleared.
    pub fn to_poly(&self) -> (IPoly, i64) {
        (self.coeffs.clone(), self.low)
    }

    pub fn from_poly(p: &IPoly) -> Self {
        Self::from_coeffs(0, p.clone())
    }

    pub fn eval_i64_rational(&self, x: i64) -> num_rational::BigRational {
        use num_rational::BigRational;
        let base = BigRational::from_integer(ipoly::eval_i64(&self.coeffs, x));
        let xr = BigRational::from_integer(BigInt::from(x));
        if self.low >= 0 {
            base * num_traits::pow(xr, self.low as usize)
        } else {
            base / num_traits::pow(xr, (-self.low) as usize)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms().map(|(e, c)| c.to_f64().unwrap() * x.powi(e as i32)).sum()
    }

    /// Exact quotient in `Z[q, q^{-1}]`, if it exists.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = ipoly::exact_div(&self.coeffs, &d.coeffs)?;
        Some(Self::from_coeffs(self.low - d.low, q))
    }

    /// Evaluation at `q = e^{2πic}` inside `Q(ζ_m)` for a chosen conductor
    /// `m` that is a multiple of the denominator of `c`.
    pub fn specialize_in(&self, c: &RationalC, conductor: u32) -> CycloNum {
        assert_eq!(conductor % c.den(), 0, "conductor must be a multiple of den(c)");
        let m = conductor as i64;
        let step = (c.num() * (m / c.den() as i64)).rem_euclid(m);
        let terms: Vec<(usize, BigInt)> = self
            .terms()
            .map(|(e, coeff)| (((e * step).rem_euclid(m)) as usize, coeff.clone()))
            .collect();
        CycloNum::from_power_terms(conductor, &terms)
    }

    /// Evaluation at `q = e^{2πic}` in `Q(ζ_den(c))`.
    pub fn specialize(&self, c: &RationalC) -> CycloNum {
        self.specialize_in(c, c.den())
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_laurent(self)
    }
}

impl Coeff for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Self::constant(v)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_exp().max(o.high_exp());
        let coeffs = (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Self::from_coeffs(low, coeffs)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Self::from_coeffs(self.low + o.low, ipoly::mul(&self.coeffs, &o.coeffs))
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_monomial() && self.coeffs[0].abs().is_one() {
            Some(LaurentPoly {
                low: -self.low,
                coeffs: self.coeffs.clone(),
            })
        } else {
            None
        }
    }
    fn bar(&self) -> Self {
        LaurentPoly::bar(self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let mag_one = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag_one => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if mag_one => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON coefficient: a plain number when it fits in `i64`, else a decimal string.
fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, serde_json::Value> = self
            .terms()
            .map(|(e, c)| (e.to_string(), coeff_to_json(c)))
            .collect();
        // BTreeMap orders keys as strings; emit in exponent order instead.
        use serde::ser::SerializeMap;
        let mut ordered: Vec<(i64, serde_json::Value)> =
            map.into_iter().map(|(k, v)| (k.parse().unwrap(), v)).collect();
        ordered.sort_by_key(|(e, _)| *e);
        let mut m = s.serialize_map(Some(ordered.len()))?;
        for (e, v) in ordered {
            m.serialize_entry(&e.to_string(), &v)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let map: BTreeMap<String, serde_json::Value> = BTreeMap::deserialize(d)?;
        let mut acc = LaurentPoly::zero();
        for (k, v) in map {
            let e: i64 = k.parse().map_err(D::Error::custom)?;
            let c: BigInt = match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("non-integer coefficient"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("bad coefficient")),
            };
            acc = acc.add_ref(&LaurentPoly::monomial(c, e));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms)
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp(&[(1, 1), (0, 1)]).bar(), lp(&[(-1, 1), (0, 1)]));
        let one_plus_q = lp(&[(0, 1), (1, 1)]);
        let one_minus_q = lp(&[(0, 1), (1, -1)]);
        assert_eq!(one_plus_q.mul_ref(&one_minus_q), lp(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn display_and_json() {
        let p = lp(&[(-1, -1), (0, 2), (3, 1)]);
        assert_eq!(p.to_string(), "-q^-1 + 2 + q^3");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"-1":-1,"0":2,"3":1}"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn units_and_division() {
        assert_eq!(lp(&[(3, -1)]).try_inv(), Some(lp(&[(-3, -1)])));
        assert_eq!(lp(&[(0, 2)]).try_inv(), None);
        let a = lp(&[(0, 1), (1, 1), (2, 1)]);
        let b = lp(&[(-2, 1), (-1, -1)]);
        assert_eq!(a.mul_ref(&b).exact_div(&b), Some(a.clone()));
        assert_eq!(a.exact_div(&lp(&[(0, 1), (1, 1)])), None);
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPoly> {
        (-4i64..4, prop::collection::vec(-5i64..5, 0..6))
            .prop_map(|(low, cs)| LaurentPoly::from_coeffs(low, cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
            prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
            prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            prop_assert!(a.sub_ref(&a).is_zero());
        }

        #[test]
        fn bar_is_involutive_automorphism(a in arb_lp(), b in arb_lp()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!(a.mul_ref(&b).bar(), a.bar().mul_ref(&b.bar()));
            prop_assert_eq!(a.add_ref(&b).bar(), a.bar().add_ref(&b.bar()));
        }
    }
}

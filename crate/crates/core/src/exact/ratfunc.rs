use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coeff, Field};
use super::ipoly::{self, IPoly};
use super::{CycloNum, LaurentPoly, RationalC};

/// An element of `Q(q)` as a reduced quotient of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, the contents of `num` and `den` are
/// coprime, and `den` has positive leading coefficient. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IPoly,
    den: IPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(ipoly::from_i64(&[c]))
    }

    pub fn q() -> Self {
        Self::from_poly(ipoly::from_i64(&[0, 1]))
    }

    pub fn from_poly(p: IPoly) -> Self {
        let mut p = p;
        ipoly::trim(&mut p);
        RatFunc {
            num: p,
            den: vec![BigInt::one()],
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (coeffs, low) = p.to_poly();
        if low >= 0 {
            let mut num = vec![BigInt::zero(); low as usize];
            num.extend(coeffs);
            Self::from_poly(num)
        } else {
            let mut den = vec![BigInt::zero(); (-low) as usize];
            den.push(BigInt::one());
            Self::new(coeffs, den)
        }
    }

    /// `num / den`, reduced. Panics if `den` is zero.
    pub fn new(num: IPoly, den: IPoly) -> Self {
        let mut num = num;
        let mut den = den;
        ipoly::trim(&mut num);
        ipoly::trim(&mut den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Self::zero();
        }
        let g = ipoly::gcd(&num, &den);
        if g.len() > 1 {
            num = ipoly::exact_div(&num, &g).expect("gcd divides numerator");
            den = ipoly::exact_div(&den, &g).expect("gcd divides denominator");
        }
        let c = ipoly::content(&num).gcd(&ipoly::content(&den));
        let c = if den.last().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            num = num.iter().map(|x| x / &c).collect();
            den = den.iter().map(|x| x / &c).collect();
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &IPoly {
        &self.num
    }

    pub fn denom(&self) -> &IPoly {
        &self.den
    }

    /// The Laurent polynomial equal to `self`, if the denominator is a power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let k = self.den.len() - 1;
        if !self.den[k].is_one() || self.den[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(-(k as i64), self.num.clone()))
    }

    /// Order of vanishing at the roots of `Φ_e` (negative for poles).
    pub fn cyclotomic_valuation(&self, e: usize) -> i64 {
        assert!(!self.num.is_empty(), "valuation of zero");
        let phi = ipoly::cyclotomic(e);
        ipoly::multiplicity(&self.num, &phi).0 as i64 - ipoly::multiplicity(&self.den, &phi).0 as i64
    }

    /// Value at `q = e^{2πic}` in `Q(ζ_m)`; `None` at a pole.
    pub fn specialize_in(&self, c: &RationalC, conductor: u32) -> Option<CycloNum> {
        let n = LaurentPoly::from_poly(&self.num).specialize_in(c, conductor);
        let d = LaurentPoly::from_poly(&self.den).specialize_in(c, conductor);
        d.try_inv().map(|di| n.mul_ref(&di))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        LaurentPoly::from_poly(&self.num).eval_f64(x) / LaurentPoly::from_poly(&self.den).eval_f64(x)
    }
}

/// `q^{deg p} p(1/q)`.
fn reverse(p: &IPoly) -> IPoly {
    let mut r: IPoly = p.iter().rev().cloned().collect();
    ipoly::trim(&mut r);
    r
}

fn shift_up(p: &IPoly, k: usize) -> IPoly {
    let mut out = vec![BigInt::zero(); k];
    out.extend(p.iter().cloned());
    out
}

impl Coeff for RatFunc {
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
        self.num.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(ipoly::add(&self.num, &o.num), self.den.clone());
        }
        let num = ipoly::add(&ipoly::mul(&self.num, &o.den), &ipoly::mul(&o.num, &self.den));
        Self::new(num, ipoly::mul(&self.den, &o.den))
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(ipoly::mul(&self.num, &o.num), ipoly::mul(&self.den, &o.den))
    }
    fn neg_ref(&self) -> Self {
        RatFunc {
            num: ipoly::neg(&self.num),
            den: self.den.clone(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
    fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (dn, dd) = (self.num.len() - 1, self.den.len() - 1);
        let num = reverse(&self.num);
        let den = reverse(&self.den);
        if dd >= dn {
            Self::new(shift_up(&num, dd - dn), den)
        } else {
            Self::new(num, shift_up(&den, dn - dd))
        }
    }
}

impl Field for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = LaurentPoly::from_poly(&self.num);
        if self.den.len() == 1 && self.den[0].is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({})", LaurentPoly::from_poly(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

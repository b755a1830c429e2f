use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// The parameter `c` of `q = e^{2πic}`, reduced into `(-1/2, 1/2]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalC {
    num: i64,
    den: u32,
}

impl RationalC {
    /// `r/m` reduced modulo 1 into `(-1/2, 1/2]`.
    pub fn new(r: i64, m: u32) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let g = r.gcd(&(m as i64));
        let (mut r, m) = (r / g, (m as i64) / g);
        r = r.rem_euclid(m);
        if 2 * r > m {
            r -= m;
        }
        Ok(RationalC { num: r, den: m as u32 })
    }

    pub fn zero() -> Self {
        RationalC { num: 0, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn neg(&self) -> Self {
        RationalC::new(-self.num, self.den).expect("valid")
    }

    /// Smallest `e` with `1 + q + … + q^{e-1} = 0`; `None` stands for `e = ∞` (`q = 1`).
    pub fn smallest_e(&self) -> Option<usize> {
        if self.num == 0 {
            None
        } else {
            Some(self.den as usize)
        }
    }

    /// Conductor of `Q(q)`.
    pub fn conductor(&self) -> u32 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// All reduced `c` in `(-1/2, 1/2]` with denominator at most `bound`, increasing.
    pub fn all_up_to(bound: u32) -> Vec<RationalC> {
        let mut out = vec![RationalC::zero()];
        for m in 2..=bound.max(1) {
            for r in -(m as i64)..=(m as i64) {
                if r.gcd(&(m as i64)) == 1 && 2 * r > -(m as i64) && 2 * r <= m as i64 {
                    out.push(RationalC { num: r, den: m });
                }
            }
        }
        out.sort();
        out
    }

    /// The rational of least denominator strictly between `a < b`, given as
    /// `(numerator, positive denominator)` pairs (Stern–Brocot descent).
    pub fn simplest_between(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
        let (p, q) = a;
        let (r, s) = b;
        assert!(q > 0 && s > 0 && p * s < r * q, "empty interval");
        if p < 0 && r > 0 {
            return (0, 1);
        }
        let fl = p.div_euclid(q);
        if (fl + 1) * s < r {
            // an integer lies strictly inside; take the one nearest to 0
            let k = if r <= 0 { (r + s - 1).div_euclid(s) - 1 } else { fl + 1 };
            return (k, 1);
        }
        // fl ≤ a < b ≤ fl + 1
        let (p1, r1) = (p - fl * q, r - fl * s);
        if p1 == 0 {
            // least k with 1/k < r1/s
            let k = s.div_euclid(r1) + 1;
            return (fl * k + 1, k);
        }
        // 1/b' < 1/a' and the answer is fl + 1/(simplest of those)
        let (x, y) = Self::simplest_between((s, r1), (q, p1));
        (fl * x + y, x)
    }
}

impl PartialOrd for RationalC {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for RationalC {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.num * o.den as i64).cmp(&(o.num * self.den as i64))
    }
}

impl fmt::Display for RationalC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RationalC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={self}")
    }
}

impl FromStr for RationalC {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected a rational r/m, got {s:?}"));
        let (r, m) = match s.split_once('/') {
            Some((r, m)) => (r.trim().parse::<i64>().map_err(|_| bad())?, m.trim().parse::<u32>().map_err(|_| bad())?),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        let c = RationalC::new(r, m)?;
        // reject values outside the domain instead of silently wrapping them
        if c.num * m as i64 != r * c.den as i64 {
            return Err(Error::Parse(format!("{s} is outside (-1/2, 1/2]")));
        }
        Ok(c)
    }
}

impl Serialize for RationalC {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalC {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

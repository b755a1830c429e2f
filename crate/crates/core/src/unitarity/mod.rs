//! Signatures, the unitarity predicate, predicted loci and locus scans.
//!
//! `D_λ` is the head of the Murphy-basis Specht module `S^λ`, which is nonzero
//! exactly when `λ` is `e`-restricted.

mod scan;
mod signature;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinat::{MultiPartition, Partition};
use crate::exact::{cyclotomic_root_multiplicities, LaurentPoly, RationalC};
use crate::hecke::AlgebraSpec;
use crate::specht::{build_specht, gram_determinant, hermitian_gram, SpechtData};
use crate::Error;

pub use scan::{scan_locus, scan_locus_with, verify_theorem, PointResult, ScanReport, TheoremReport};
pub use signature::{signature, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Zero,
    NonzeroUnitary,
    NonzeroNotUnitary,
}

impl Status {
    pub fn in_locus(self) -> bool {
        self == Status::NonzeroUnitary
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Zero => "Zero",
            Status::NonzeroUnitary => "NonzeroUnitary",
            Status::NonzeroNotUnitary => "NonzeroNotUnitary",
        };
        f.write_str(s)
    }
}

fn ser_e<S: Serializer>(e: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match e {
        Some(e) => s.serialize_u64(*e as u64),
        None => s.serialize_str("inf"),
    }
}

fn ser_display<T: fmt::Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitarityVerdict {
    #[serde(rename = "lambda", serialize_with = "ser_display")]
    pub shape: Partition,
    pub c: RationalC,
    /// Order of `q`; `None` for `q = 1`.
    #[serde(serialize_with = "ser_e")]
    pub e: Option<usize>,
    pub status: Status,
    pub signature: Signature,
    pub dim_d: usize,
}

/// The symbolic module used for verdicts on `λ`.
pub fn module_for(shape: &Partition) -> Result<SpechtData<LaurentPoly>, Error> {
    if shape.is_empty() {
        return Err(Error::InvalidShape("empty partition".into()));
    }
    build_specht(&MultiPartition::single(shape.clone()), &AlgebraSpec::symbolic(shape.size()))
}

/// Verdict at `q = e^{2πic}` for a prebuilt module.
pub fn verdict_with(sd: &SpechtData<LaurentPoly>, c: &RationalC) -> Result<UnitarityVerdict, Error> {
    let shape = sd.shape().components()[0].clone();
    let sig = match hermitian_gram(sd, c) {
        Ok(hg) => signature(&hg.h)?,
        Err(Error::Degenerate(_)) => Signature {
            pos: 0,
            neg: 0,
            zero: sd.dim(),
        },
        Err(e) => return Err(e),
    };
    let dim_d = sig.rank();
    let status = if dim_d == 0 {
        Status::Zero
    } else if sig.is_semidefinite() {
        Status::NonzeroUnitary
    } else {
        Status::NonzeroNotUnitary
    };
    Ok(UnitarityVerdict {
        shape,
        c: *c,
        e: c.smallest_e(),
        status,
        signature: sig,
        dim_d,
    })
}

pub fn verdict(shape: &Partition, c: &RationalC) -> Result<UnitarityVerdict, Error> {
    verdict_with(&module_for(shape)?, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LocusKind {
    FullInterval,
    NMinusSet,
    IntervalPlusPoints,
}

/// The predicted unitarity locus of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocusDescription {
    pub kind: LocusKind,
    /// `L` with open interval `(-1/L, 1/L)`; 2 for the full domain.
    pub radius_den: usize,
    /// Isolated members `±1/k` for the main hooks `k`.
    pub points: BTreeSet<RationalC>,
    /// For `(n)`: the removed values `±r/m` with `r, m ≤ n`, inside the domain.
    pub excluded: BTreeSet<RationalC>,
}

impl LocusDescription {
    pub fn contains(&self, c: &RationalC) -> bool {
        match self.kind {
            LocusKind::FullInterval => true,
            LocusKind::NMinusSet => !self.excluded.contains(c),
            LocusKind::IntervalPlusPoints => {
                // |c| < 1/L  ⇔  |num| · L < den
                (c.num().unsigned_abs() as usize) * self.radius_den < c.den() as usize || self.points.contains(c)
            }
        }
    }
}

impl fmt::Display for LocusDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<RationalC>| s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        match self.kind {
            LocusKind::FullInterval => write!(f, "(-1/2, 1/2]"),
            LocusKind::NMinusSet => write!(f, "(-1/2, 1/2] minus {{{}}}", list(&self.excluded)),
            LocusKind::IntervalPlusPoints => {
                write!(f, "(-1/{0}, 1/{0}) ∪ {{{1}}}", self.radius_den, list(&self.points))
            }
        }
    }
}

/// `±r/m` with `1 ≤ r, m ≤ n`, reduced into the domain.
fn row_excluded(n: usize) -> BTreeSet<RationalC> {
    let mut out = BTreeSet::new();
    for m in 1..=n as u32 {
        for r in 1..=n as i64 {
            for s in [r, -r] {
                let c = RationalC::new(s, m).expect("m ≥ 1");
                // only values that are literally ±r/m inside (-1/2, 1/2]
                if 2 * r <= m as i64 && !c.is_zero() {
                    out.insert(c);
                }
            }
        }
    }
    out
}

pub fn predicted_locus(shape: &Partition) -> Result<LocusDescription, Error> {
    let n = shape.size();
    let hd = shape.hook_data()?;
    let empty = BTreeSet::new();
    if shape.len() == n {
        return Ok(LocusDescription {
            kind: LocusKind::FullInterval,
            radius_den: 2,
            points: empty.clone(),
            excluded: empty,
        });
    }
    if shape.len() == 1 {
        return Ok(LocusDescription {
            kind: LocusKind::NMinusSet,
            radius_den: 2,
            points: empty,
            excluded: row_excluded(n),
        });
    }
    let mut points = BTreeSet::new();
    for &k in &hd.main_hooks {
        for s in [1, -1] {
            // -1/2 is outside the domain; RationalC::new maps it to 1/2, which is ±1/2's only representative
            if k == 2 && s == -1 {
                continue;
            }
            points.insert(RationalC::new(s, k as u32).expect("k ≥ 1"));
        }
    }
    Ok(LocusDescription {
        kind: LocusKind::IntervalPlusPoints,
        radius_den: hd.largest_hook,
        points,
        excluded: empty,
    })
}

/// All `c` in the domain where the symbolic Gram determinant vanishes.
pub fn singular_points(sd: &SpechtData<LaurentPoly>) -> Result<BTreeSet<RationalC>, Error> {
    let det = gram_determinant(sd);
    let mult = cyclotomic_root_multiplicities(&det, sd.n().max(2))?;
    let mut out = BTreeSet::new();
    for &e in mult.keys() {
        for r in 1..e as i64 {
            if num_integer::gcd(r, e as i64) == 1 {
                out.insert(RationalC::new(r, e as u32).expect("e ≥ 2"));
            }
        }
    }
    Ok(out)
}

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{module_for, predicted_locus, singular_points, verdict_with, LocusDescription, LocusKind, Signature, Status};
use crate::combinat::Partition;
use crate::exact::{LaurentPoly, RationalC};
use crate::specht::SpechtData;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointResult {
    pub c: RationalC,
    pub status: Status,
    pub signature: Signature,
    /// Membership according to the predicted locus.
    pub predicted: bool,
}

impl PointResult {
    pub fn member(&self) -> bool {
        self.status.in_locus()
    }
}

/// Computed versus predicted membership over a finite test set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    #[serde(rename = "lambda", serialize_with = "super::ser_display")]
    pub shape: Partition,
    pub bound: u32,
    pub predicted: LocusDescription,
    pub points: Vec<PointResult>,
    pub singular_points: BTreeSet<RationalC>,
    pub interval_samples: Vec<RationalC>,
    pub agreement: bool,
    pub mismatches: Vec<RationalC>,
}

impl ScanReport {
    /// Computed members, increasing.
    pub fn members(&self) -> Vec<RationalC> {
        self.points.iter().filter(|p| p.member()).map(|p| p.c).collect()
    }

    /// Pairs of consecutive tested points with no singular point in
    /// `[a, b]` whose statuses differ. Empty when the signature is locally
    /// constant, as it must be.
    pub fn local_constancy_violations(&self) -> Vec<(RationalC, RationalC)> {
        self.points
            .windows(2)
            .filter(|w| {
                let (a, b) = (w[0].c, w[1].c);
                self.singular_points.range(a..=b).next().is_none() && w[0].status != w[1].status
            })
            .map(|w| (w[0].c, w[1].c))
            .collect()
    }
}

/// One sample strictly inside each open interval cut out of `(-1/2, 1/2]` by
/// the singular points.
fn interval_samples(singular: &BTreeSet<RationalC>) -> Vec<RationalC> {
    let mut cuts: Vec<(i64, i64)> = vec![(-1, 2)];
    cuts.extend(singular.iter().map(|c| (c.num(), c.den() as i64)));
    let half = RationalC::new(1, 2).expect("1/2");
    if !singular.contains(&half) {
        cuts.push((1, 2));
    }
    cuts.windows(2)
        .map(|w| {
            let (p, q) = RationalC::simplest_between(w[0], w[1]);
            RationalC::new(p, q as u32).expect("positive denominator")
        })
        .collect()
}

pub fn scan_locus(shape: &Partition, bound: u32) -> Result<ScanReport, Error> {
    scan_locus_with(&module_for(shape)?, bound)
}

/// Scan of a prebuilt module: every reduced `c` with denominator `≤ bound`,
/// every singular point, every predicted isolated or excluded point, and one
/// sample per singularity-free interval.
pub fn scan_locus_with(sd: &SpechtData<LaurentPoly>, bound: u32) -> Result<ScanReport, Error> {
    let shape = sd.shape().components()[0].clone();
    let predicted = predicted_locus(&shape)?;
    let singular = singular_points(sd)?;
    let samples = interval_samples(&singular);
    let mut test: BTreeSet<RationalC> = RationalC::all_up_to(bound).into_iter().collect();
    test.extend(singular.iter().copied());
    test.extend(predicted.points.iter().copied());
    test.extend(predicted.excluded.iter().copied());
    test.extend(samples.iter().copied());
    let test: Vec<RationalC> = test.into_iter().collect();
    let verdicts = test.par_iter().map(|c| verdict_with(sd, c)).collect::<Result<Vec<_>, _>>()?;
    let points: Vec<PointResult> = verdicts
        .into_iter()
        .map(|v| PointResult {
            c: v.c,
            status: v.status,
            signature: v.signature,
            predicted: predicted.contains(&v.c),
        })
        .collect();
    let mismatches: Vec<RationalC> = points.iter().filter(|p| p.member() != p.predicted).map(|p| p.c).collect();
    Ok(ScanReport {
        shape,
        bound,
        predicted,
        points,
        singular_points: singular,
        interval_samples: samples,
        agreement: mismatches.is_empty(),
        mismatches,
    })
}

/// Aggregate of [`scan_locus`] over all partitions of `2 ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n_max: usize,
    pub bound: u32,
    pub shapes: usize,
    pub points: usize,
    pub agreement: bool,
    pub reports: Vec<ScanReport>,
}

impl TheoremReport {
    /// `(λ, c)` pairs where computation and prediction differ.
    pub fn mismatches(&self) -> Vec<(Partition, RationalC)> {
        self.reports
            .iter()
            .flat_map(|r| r.mismatches.iter().map(move |c| (r.shape.clone(), *c)))
            .collect()
    }

    /// Reports checked against the main formula (not a row or column).
    pub fn main_formula_reports(&self) -> impl Iterator<Item = &ScanReport> {
        self.reports.iter().filter(|r| r.predicted.kind == LocusKind::IntervalPlusPoints)
    }
}

pub fn verify_theorem(n_max: usize, bound: u32) -> Result<TheoremReport, Error> {
    if (bound as usize) < 2 * n_max + 2 {
        return Err(Error::SizeMismatch(format!(
            "denominator bound {bound} is below 2·n_max + 2 = {}",
            2 * n_max + 2
        )));
    }
    let shapes: Vec<Partition> = (2..=n_max).flat_map(Partition::all).collect();
    let reports = shapes.par_iter().map(|p| scan_locus(p, bound)).collect::<Result<Vec<_>, _>>()?;
    Ok(TheoremReport {
        n_max,
        bound,
        shapes: reports.len(),
        points: reports.iter().map(|r| r.points.len()).sum(),
        agreement: reports.iter().all(|r| r.agreement),
        reports,
    })
}

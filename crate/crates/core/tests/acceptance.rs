//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! A criterion that disagrees with its stated formula is printed as FAIL with
//! the evidence. The process only exits nonzero when the computed outcome
//! differs from the recorded one, so a new discrepancy still breaks the build.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use heckeform::combinat::Partition;
use heckeform::exact::{cyclotomic_root_multiplicities, Coeff, CycloNum, LaurentPoly, RatFunc, RationalC};
use heckeform::hecke::{m_lambda, verify_sigma_m};
use heckeform::linalg::Matrix;
use heckeform::specht::{
    build_specht, build_specht_specialized, gram_determinant, hermitian_gram, jantzen_layers, oracle_specht,
    sigma_on_module,
};
use heckeform::unitarity::{scan_locus, signature, verdict_with, verify_theorem, ScanReport, Status};
use heckeform::{AlgebraSpec, Error, MultiPartition, SpechtData};

/// Outcome of one criterion: whether the statement holds, a summary, and
/// whether that outcome is the one recorded for this implementation.
struct Outcome {
    holds: bool,
    detail: String,
    expected: bool,
}

impl Outcome {
    fn strict(holds: bool, detail: impl Into<String>) -> Self {
        Outcome {
            holds,
            detail: detail.into(),
            expected: holds,
        }
    }
}

fn sym(p: &Partition) -> SpechtData<LaurentPoly> {
    build_specht(&MultiPartition::single(p.clone()), &AlgebraSpec::symbolic(p.size())).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn rc(s: &str) -> RationalC {
    s.parse().unwrap()
}

fn is_row_or_column(p: &Partition) -> bool {
    p.len() == 1 || p.len() == p.size()
}

/// The points where the formula and the computation are known to disagree:
/// D_λ is the one-dimensional trivial module there, hence unitary.
fn recorded_counterexamples(n_max: usize) -> BTreeSet<(Vec<usize>, RationalC)> {
    let table: &[(&[usize], &[&str])] = &[
        (&[4, 1], &["2/5", "-2/5"]),
        (&[4, 2], &["2/5", "-2/5"]),
        (&[4, 3], &["2/5", "-2/5"]),
        (&[6, 1], &["2/7", "-2/7", "3/7", "-3/7"]),
    ];
    table
        .iter()
        .filter(|(p, _)| p.iter().sum::<usize>() <= n_max)
        .flat_map(|(p, cs)| cs.iter().map(move |c| (p.to_vec(), rc(c))))
        .collect()
}

/// Mismatches of a set of scans, each checked to sit on a one-dimensional D_λ.
fn mismatch_set(reports: &[&ScanReport]) -> (BTreeSet<(Vec<usize>, RationalC)>, bool) {
    let mut out = BTreeSet::new();
    let mut all_one_dim = true;
    for r in reports {
        for c in &r.mismatches {
            let pt = r.points.iter().find(|p| p.c == *c).unwrap();
            all_one_dim &= pt.status == Status::NonzeroUnitary && pt.signature.rank() == 1;
            out.insert((r.shape.parts().to_vec(), *c));
        }
    }
    (out, all_one_dim)
}

fn fmt_set(s: &BTreeSet<(Vec<usize>, RationalC)>) -> String {
    s.iter()
        .map(|(p, c)| format!("{}@{}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), c))
        .collect::<Vec<_>>()
        .join(" ")
}

fn criterion_theorem() -> Outcome {
    let rep = verify_theorem(6, 16).unwrap();
    let checked: Vec<&ScanReport> = rep
        .reports
        .iter()
        .filter(|r| r.shape.size() >= 3 && !is_row_or_column(&r.shape))
        .collect();
    let constancy: usize = checked.iter().map(|r| r.local_constancy_violations().len()).sum();
    let (mism, one_dim) = mismatch_set(&checked);
    let points: usize = checked.iter().map(|r| r.points.len()).sum();
    let holds = mism.is_empty() && constancy == 0;
    Outcome {
        holds,
        detail: format!(
            "{} shapes, {} points, {} mismatches [{}], {} local-constancy violations",
            checked.len(),
            points,
            mism.len(),
            fmt_set(&mism),
            constancy
        ),
        expected: !holds && constancy == 0 && one_dim && mism == recorded_counterexamples(6),
    }
}

fn criterion_hooks() -> Outcome {
    let mut hook_reports = Vec::new();
    let mut extremes_ok = true;
    let mut points = 0;
    for n in 3..=7 {
        for k in 1..=n - 2 {
            let r = scan_locus(&Partition::hook(n, k), 16).unwrap();
            points += r.points.len();
            hook_reports.push(r);
        }
        for p in [Partition::row(n), Partition::column(n)] {
            let r = scan_locus(&p, 16).unwrap();
            points += r.points.len();
            extremes_ok &= r.agreement && r.local_constancy_violations().is_empty();
        }
    }
    let refs: Vec<&ScanReport> = hook_reports.iter().collect();
    let constancy: usize = refs.iter().map(|r| r.local_constancy_violations().len()).sum();
    let (mism, one_dim) = mismatch_set(&refs);
    let hooks_only: BTreeSet<_> = recorded_counterexamples(7)
        .into_iter()
        .filter(|(p, _)| p.len() == 2 && p[1] == 1)
        .collect();
    let holds = mism.is_empty() && extremes_ok && constancy == 0;
    Outcome {
        holds,
        detail: format!(
            "{} scans, {} points; rows/columns {}; hook mismatches [{}]",
            refs.len() + 10,
            points,
            if extremes_ok { "agree" } else { "DISAGREE" },
            fmt_set(&mism)
        ),
        expected: !holds && extremes_ok && constancy == 0 && one_dim && mism == hooks_only,
    }
}

fn criterion_determinant() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 3..=7 {
        for k in 1..=n - 2 {
            let p = Partition::hook(n, k);
            let mult = cyclotomic_root_multiplicities(&gram_determinant(&sym(&p)), n).unwrap();
            let got = mult.get(&n).copied().unwrap_or(0);
            count += 1;
            if got != binom(n - 2, k) {
                bad.push(format!("{p}: {got}"));
            }
        }
    }
    Outcome::strict(bad.is_empty(), format!("{count} hooks checked; failures {bad:?}"))
}

fn criterion_jantzen() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 3..=6 {
        for k in 1..=n - 2 {
            let p = Partition::hook(n, k);
            let sd = sym(&p);
            let c = RationalC::new(1, n as u32).unwrap();
            for c in [c, c.neg()] {
                let got = jantzen_layers(&sd, &c).unwrap().layer_dims;
                count += 1;
                if got != vec![sd.dim(), binom(n - 2, k), 0] {
                    bad.push(format!("{p}@{c}: {got:?}"));
                }
            }
        }
    }
    Outcome::strict(bad.is_empty(), format!("{count} filtrations checked; failures {bad:?}"))
}

/// Checks H† = H, ρ†Hρ = H, S·conj(S) = I and rank + n₀ = dim at one point.
fn form_identities(sd: &SpechtData<LaurentPoly>, c: &RationalC) -> Result<(), String> {
    let s = sigma_on_module(sd, c).map_err(|e| e.to_string())?;
    let id = Matrix::identity(sd.dim(), &CycloNum::one(c.conductor()));
    if s.mul(&s.bar()) != id {
        return Err("S·conj(S) ≠ I".into());
    }
    let h = match hermitian_gram(sd, c) {
        Ok(hg) => hg.h,
        // the form vanishes identically: H = 0
        Err(Error::Degenerate(_)) => Matrix::from_fn(sd.dim(), sd.dim(), |_, _| CycloNum::zero(c.conductor())),
        Err(e) => return Err(e.to_string()),
    };
    if h.adjoint() != h {
        return Err("H not Hermitian".into());
    }
    let m = h.get(0, 0).conductor().max(c.conductor());
    let h = h.map(|x| x.promote(m));
    for i in sd.generators() {
        let rho = sd.action(i).map(|x| x.specialize_in(c, m));
        if rho.adjoint().mul(&h).mul(&rho) != h {
            return Err(format!("not invariant under T_{i}"));
        }
    }
    let sig = signature(&h).map_err(|e| e.to_string())?;
    if sig.rank() != h.rank() || sig.rank() + sig.zero != sd.dim() {
        return Err(format!("rank mismatch {sig}"));
    }
    Ok(())
}

fn criterion_form() -> Outcome {
    let cs = ["0", "1/7", "1/4", "1/3", "1/2"].map(rc);
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=5 {
        for p in Partition::all(n) {
            let sd = sym(&p);
            for c in &cs {
                count += 1;
                if let Err(e) = form_identities(&sd, c) {
                    bad.push(format!("{p}@{c}: {e}"));
                }
            }
        }
    }
    Outcome::strict(bad.is_empty(), format!("{count} (λ, c) pairs; failures {bad:?}"))
}

fn level_two_specs(n: usize) -> Vec<Arc<AlgebraSpec<CycloNum>>> {
    vec![
        Arc::new(AlgebraSpec::new(n, CycloNum::zeta_pow(5, 1), vec![CycloNum::one(1), CycloNum::from_int(1, -1)]).unwrap()),
        Arc::new(AlgebraSpec::new(n, CycloNum::zeta_pow(8, 1), vec![CycloNum::one(1), CycloNum::zeta_pow(3, 1)]).unwrap()),
    ]
}

fn criterion_oracle() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=4 {
        let spec = Arc::new(AlgebraSpec::<RatFunc>::generic(n));
        for p in Partition::all(n) {
            let o = oracle_specht(&MultiPartition::single(p.clone()), &spec).unwrap();
            count += 1;
            if sym(&p).map(LaurentPoly::to_ratfunc) != o {
                bad.push(p.to_string());
            }
        }
    }
    for n in 1..=3 {
        for spec in level_two_specs(n) {
            for shape in MultiPartition::all(n, 2) {
                let o = oracle_specht(&shape, &spec).unwrap();
                count += 1;
                if build_specht_specialized(&shape, &spec).unwrap() != o {
                    bad.push(format!("{shape} at q = {}", spec.q()));
                }
            }
        }
    }
    Outcome::strict(bad.is_empty(), format!("{count} modules compared; failures {bad:?}"))
}

fn criterion_witness() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for spec in level_two_specs(3) {
        for n in 1..=3 {
            let spec = Arc::new(AlgebraSpec::new(n, spec.q().clone(), spec.params().to_vec()).unwrap());
            for shape in MultiPartition::all(n, 2) {
                count += 1;
                let ok = verify_sigma_m(&spec, &shape).and_then(|w| {
                    let m = m_lambda(&spec, &shape)?;
                    let one = heckeform::HeckeElement::one(&spec);
                    Ok(m.sigma() == m.multiply(&w.u)? && w.u.multiply(&w.u_inv)? == one)
                });
                if !matches!(ok, Ok(true)) {
                    bad.push(format!("{shape}: {ok:?}"));
                }
            }
        }
    }
    for n in 1..=5 {
        let spec = Arc::new(AlgebraSpec::<RatFunc>::generic(n));
        for p in Partition::all(n) {
            count += 1;
            let s: i64 = p.parts().iter().map(|&a| -((a * a.saturating_sub(1) / 2) as i64)).sum();
            match verify_sigma_m(&spec, &MultiPartition::single(p.clone())) {
                Ok(w) if w.ansatz == Some((RatFunc::q().pow_i64(s), vec![0; n])) => {}
                other => bad.push(format!("{p}: {:?}", other.map(|w| w.ansatz))),
            }
        }
    }
    Outcome::strict(bad.is_empty(), format!("{count} witnesses; failures {bad:?}"))
}

fn criterion_zero() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    let cs = RationalC::all_up_to(12);
    for n in 1..=6 {
        for p in Partition::all(n) {
            let sd = sym(&p);
            for c in &cs {
                count += 1;
                let v = verdict_with(&sd, c).unwrap();
                if (v.status == Status::Zero) == p.is_e_restricted(c.smallest_e()) {
                    bad.push(format!("{p}@{c}"));
                }
            }
        }
    }
    Outcome::strict(bad.is_empty(), format!("{count} (λ, c) pairs; failures {bad:?}"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 theorem formula, 3 ≤ n ≤ 6, B = 16", criterion_theorem),
        ("2 hooks, rows and columns, n ≤ 7", criterion_hooks),
        ("3 hook determinant multiplicity", criterion_determinant),
        ("4 Jantzen layers at hooks", criterion_jantzen),
        ("5 form identities", criterion_form),
        ("6 oracle equivalence", criterion_oracle),
        ("7 σ(m_λ) = m_λ u witnesses", criterion_witness),
        ("8 Zero iff not e-restricted", criterion_zero),
    ];
    let mut unexpected = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let o = f();
        let verdict = if o.holds { "PASS" } else { "FAIL" };
        let note = match (o.holds, o.expected) {
            (_, false) => {
                unexpected += 1;
                " (UNEXPECTED)"
            }
            (false, true) => " (recorded disagreement, see README)",
            _ => "",
        };
        println!("[{verdict}] criterion {name}: {}{note} [{:.1?}]", o.detail, t.elapsed());
    }
    if unexpected > 0 {
        println!("{unexpected} criteria changed outcome");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

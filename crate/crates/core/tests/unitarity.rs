use heckeform::combinat::Partition;
use heckeform::exact::RationalC;
use heckeform::unitarity::{
    module_for, predicted_locus, scan_locus, scan_locus_with, singular_points, verdict, verdict_with, verify_theorem,
    LocusKind, Status,
};
use heckeform::Error;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn rc(s: &str) -> RationalC {
    s.parse().unwrap()
}

#[test]
fn verdict_examples() {
    for n in 1..=5 {
        for c in ["0", "1/3", "2/5", "1/2", "-1/4"] {
            let v = verdict(&Partition::column(n), &rc(c)).unwrap();
            assert_eq!(v.status, Status::NonzeroUnitary);
            assert_eq!(v.dim_d, 1);
        }
    }
    assert_eq!(verdict(&p(&[3]), &rc("1/2")).unwrap().status, Status::Zero);
    let v = verdict(&p(&[2, 1]), &rc("0")).unwrap();
    assert_eq!(v.status, Status::NonzeroUnitary);
    assert_eq!((v.signature.pos, v.signature.neg, v.signature.zero), (2, 0, 0));
    let v = verdict(&p(&[2, 1]), &rc("1/3")).unwrap();
    assert_eq!(v.signature.zero, 1);
    assert_eq!(v.status, Status::NonzeroUnitary);
    assert_eq!(verdict(&p(&[3, 1]), &rc("1/4")).unwrap().status, Status::NonzeroUnitary);
}

#[test]
fn verdict_json_schema() {
    let v = verdict(&p(&[2, 1]), &rc("1/3")).unwrap();
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["lambda"], "2,1");
    assert_eq!(j["e"], 3);
    assert_eq!(j["status"], "NonzeroUnitary");
    assert_eq!(j["signature"].as_array().unwrap().len(), 3);
    let v = verdict(&p(&[2, 1]), &rc("0")).unwrap();
    assert_eq!(serde_json::to_value(&v).unwrap()["e"], "inf");
}

#[test]
fn predicted_locus_examples() {
    let l = predicted_locus(&p(&[3, 1, 1])).unwrap();
    assert_eq!(l.kind, LocusKind::IntervalPlusPoints);
    assert_eq!(l.radius_den, 5);
    assert_eq!(l.points, [rc("1/5"), rc("-1/5")].into_iter().collect());
    let l = predicted_locus(&p(&[2, 2, 2])).unwrap();
    assert_eq!(l.radius_den, 4);
    assert_eq!(l.points, ["1/4", "-1/4", "1/3", "-1/3"].map(rc).into_iter().collect());
    assert!(l.contains(&rc("1/5")) && l.contains(&rc("-1/3")) && !l.contains(&rc("2/7")));
    let l = predicted_locus(&Partition::column(4)).unwrap();
    assert!(RationalC::all_up_to(9).iter().all(|c| l.contains(c)));
    let l = predicted_locus(&p(&[3])).unwrap();
    assert_eq!(l.kind, LocusKind::NMinusSet);
    assert_eq!(l.excluded, ["1/2", "1/3", "-1/3"].map(rc).into_iter().collect());
    assert!(l.contains(&rc("1/4")) && l.contains(&rc("0")));
}

#[test]
fn singular_point_examples() {
    assert!(singular_points(&module_for(&Partition::column(4)).unwrap()).unwrap().is_empty());
    let s = singular_points(&module_for(&p(&[2, 1])).unwrap()).unwrap();
    assert!(s.contains(&rc("1/3")) && s.contains(&rc("-1/3")));
    for n in 2..=5 {
        for lam in Partition::all(n) {
            let sd = module_for(&lam).unwrap();
            for c in singular_points(&sd).unwrap() {
                let e = c.smallest_e().unwrap();
                assert!((2..=n).contains(&e), "{lam} {c}");
                // the form really drops rank there
                let g = sd.gram().map(|x| x.specialize(&c));
                assert!(g.rank() < sd.dim(), "{lam} {c}");
            }
        }
    }
}

#[test]
fn scan_examples() {
    let r = scan_locus(&p(&[2, 1]), 8).unwrap();
    assert!(r.agreement);
    let third = rc("1/3");
    assert!(r.members().iter().all(|c| c.num().abs() * 3 <= c.den() as i64));
    assert!(r.members().contains(&third) && r.members().contains(&third.neg()));
    let r = scan_locus(&Partition::column(4), 6).unwrap();
    assert_eq!(r.members().len(), r.points.len());
    let r = scan_locus(&p(&[2, 2]), 10).unwrap();
    assert!(r.agreement);
    for pt in &r.points {
        assert_eq!(pt.member(), pt.c.num().abs() * 3 <= pt.c.den() as i64, "{}", pt.c);
    }
    // singular and predicted points are always tested
    for c in r.singular_points.iter().chain(r.predicted.points.iter()) {
        assert!(r.points.iter().any(|pt| pt.c == *c));
    }
}

#[test]
fn scan_json_schema() {
    let r = scan_locus(&p(&[2, 1]), 8).unwrap();
    let j = serde_json::to_value(&r).unwrap();
    assert_eq!(j["lambda"], "2,1");
    assert_eq!(j["agreement"], true);
    let pt = &j["points"][0];
    assert!(pt["c"].is_string() && pt["status"].is_string() && pt["signature"].is_array());
}

#[test]
fn small_theorem_run() {
    let rep = verify_theorem(4, 12).unwrap();
    assert!(rep.agreement, "{:?}", rep.mismatches());
    assert_eq!(rep.shapes, 2 + 3 + 5);
    assert!(rep.reports.iter().all(|r| r.local_constancy_violations().is_empty()));
    let rep = verify_theorem(2, 6).unwrap();
    assert_eq!(rep.shapes, 2);
    assert!(rep.agreement);
    assert!(matches!(verify_theorem(5, 8), Err(Error::SizeMismatch(_))));
}

#[test]
fn endpoint_containment() {
    for n in 4..=6 {
        for lam in Partition::all(n) {
            let hd = lam.hook_data().unwrap();
            if lam.len() == 1 || lam.len() == n || lam.hook_length(0, 0) == n && lam.parts()[1..].iter().all(|&a| a == 1) {
                continue;
            }
            let sd = module_for(&lam).unwrap();
            for &k in &hd.main_hooks {
                let c = RationalC::new(1, k as u32).unwrap();
                assert_eq!(verdict_with(&sd, &c).unwrap().status, Status::NonzeroUnitary, "{lam} at {c}");
            }
            // first tested point beyond 1/l that the formula leaves out
            let r = scan_locus_with(&sd, 2 * n as u32 + 2).unwrap();
            let l = *hd.main_hooks.iter().min().unwrap();
            let first = r
                .points
                .iter()
                .find(|pt| pt.c.num() * l as i64 > pt.c.den() as i64 && !pt.predicted)
                .unwrap();
            assert_eq!(first.status, Status::NonzeroNotUnitary, "{lam} at {}", first.c);
        }
    }
}

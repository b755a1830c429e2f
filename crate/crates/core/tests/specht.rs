use std::sync::Arc;

use heckeform::combinat::Partition;
use heckeform::exact::{cyclotomic_factorization, cyclotomic_root_multiplicities, CycloNum, LaurentPoly, RationalC};
use heckeform::linalg::Matrix;
use heckeform::specht::{
    build_specht, build_specht_specialized, gram_determinant, hermitian_gram, jantzen_layers, oracle_specht,
    sigma_on_module,
};
use heckeform::{AlgebraSpec, MultiPartition, SpechtData};

fn sym(p: &Partition) -> SpechtData<LaurentPoly> {
    build_specht(&MultiPartition::single(p.clone()), &AlgebraSpec::symbolic(p.size())).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn invariants_up_to_six() {
    for n in 1..=6 {
        for p in Partition::all(n) {
            let sd = sym(&p);
            sd.check_invariants(&LaurentPoly::q(), &[LaurentPoly::one()]).unwrap();
        }
    }
}

#[test]
fn oracle_agrees_in_type_a() {
    for n in 1..=4 {
        let spec = Arc::new(AlgebraSpec::generic(n));
        for p in Partition::all(n) {
            let shape = MultiPartition::single(p.clone());
            let o = oracle_specht(&shape, &spec).unwrap();
            assert_eq!(o.dim() as u128, p.hook_length_count());
            assert_eq!(sym(&p).map(LaurentPoly::to_ratfunc), o, "{p}");
        }
    }
}

fn level_two_specs(n: usize) -> Vec<Arc<AlgebraSpec<CycloNum>>> {
    vec![
        Arc::new(AlgebraSpec::new(n, CycloNum::zeta_pow(5, 1), vec![CycloNum::one(1), CycloNum::from_int(1, -1)]).unwrap()),
        Arc::new(AlgebraSpec::new(n, CycloNum::zeta_pow(8, 1), vec![CycloNum::one(1), CycloNum::zeta_pow(3, 1)]).unwrap()),
    ]
}

#[test]
fn oracle_agrees_at_level_two() {
    for n in 1..=3 {
        for spec in level_two_specs(n) {
            for shape in MultiPartition::all(n, 2) {
                let o = oracle_specht(&shape, &spec).unwrap();
                let b = build_specht_specialized(&shape, &spec).unwrap();
                b.check_invariants(spec.q(), spec.params()).unwrap();
                assert_eq!(o, b, "{shape}");
            }
        }
    }
}

#[test]
fn sigma_is_an_involution_compatible_with_the_action() {
    let c: RationalC = "1/7".parse().unwrap();
    for n in 1..=5 {
        for p in Partition::all(n) {
            let sd = sym(&p);
            let s = sigma_on_module(&sd, &c).unwrap();
            let id = Matrix::identity(sd.dim(), &CycloNum::one(7));
            assert_eq!(s.mul(&s.bar()), id, "{p}");
            for i in sd.generators() {
                let rho = sd.action(i).map(|x| x.specialize(&c));
                let rho_inv = rho.inverse().unwrap();
                assert_eq!(s.mul(&rho.bar()), rho_inv.mul(&s), "{p} T_{i}");
            }
        }
    }
}

#[test]
fn hermitian_and_braid_invariant() {
    for cs in ["1/7", "1/4", "2/5", "1/3", "0"] {
        let c: RationalC = cs.parse().unwrap();
        for n in 1..=5 {
            for p in Partition::all(n) {
                let sd = sym(&p);
                let hg = match hermitian_gram(&sd, &c) {
                    Ok(hg) => hg,
                    Err(e) => {
                        // only a vanishing form may be refused
                        assert!(sd.gram().map(|x| x.specialize(&c)).is_zero(), "{p} at {c}: {e}");
                        continue;
                    }
                };
                let h = &hg.h;
                assert_eq!(&h.adjoint(), h);
                let m = hg.alpha.conductor();
                for i in sd.generators() {
                    let rho = sd.action(i).map(|x| x.specialize_in(&c, m));
                    assert_eq!(&rho.adjoint().mul(h).mul(&rho), h, "{p} at {c}");
                }
            }
        }
    }
}

#[test]
fn determinant_roots_are_cyclotomic() {
    for n in 1..=6 {
        for p in Partition::all(n) {
            let det = gram_determinant(&sym(&p));
            let f = cyclotomic_factorization(&det, n).unwrap_or_else(|| panic!("{p}: {det}"));
            assert!(f.keys().all(|&e| (2..=n).contains(&e)), "{p}: {f:?}");
        }
    }
    assert_eq!(gram_determinant(&sym(&Partition::column(4))), LaurentPoly::one());
}

#[test]
fn hook_determinant_multiplicity() {
    for n in 2..=7 {
        for k in 0..n {
            let p = Partition::hook(n, k);
            let det = gram_determinant(&sym(&p));
            let mult = cyclotomic_root_multiplicities(&det, n).unwrap();
            let want = if n >= 2 && k <= n - 2 { binom(n - 2, k) } else { 0 };
            assert_eq!(mult.get(&n).copied().unwrap_or(0), want, "{p}");
        }
    }
}

#[test]
fn jantzen_layers_for_hooks() {
    for n in 3..=6 {
        let c = RationalC::new(1, n as u32).unwrap();
        for k in 0..n {
            let p = Partition::hook(n, k);
            let sd = sym(&p);
            let rep = jantzen_layers(&sd, &c).unwrap();
            let socle = if k <= n - 2 { binom(n - 2, k) } else { 0 };
            let want = if socle > 0 { vec![sd.dim(), socle, 0] } else { vec![sd.dim(), 0] };
            assert_eq!(rep.layer_dims, want, "{p}");
            let generic = jantzen_layers(&sd, &RationalC::new(1, n as u32 + 1).unwrap()).unwrap();
            assert_eq!(generic.layer_dims, vec![sd.dim(), 0]);
        }
    }
}

#[test]
fn jantzen_sum_matches_determinant() {
    for n in 2..=5 {
        for p in Partition::all(n) {
            let sd = sym(&p);
            let det = gram_determinant(&sd);
            let mult = cyclotomic_root_multiplicities(&det, n).unwrap();
            for e in 2..=n {
                let rep = jantzen_layers(&sd, &RationalC::new(1, e as u32).unwrap()).unwrap();
                let sum: usize = rep.layer_dims[1..].iter().sum();
                assert_eq!(sum, mult.get(&e).copied().unwrap_or(0), "{p} e={e}");
            }
        }
    }
}

#[test]
fn head_is_nonzero_iff_restricted() {
    for n in 1..=5 {
        for p in Partition::all(n) {
            let sd = sym(&p);
            for c in RationalC::all_up_to(8) {
                let g = sd.gram().map(|x| x.specialize(&c));
                let rank = g.rank();
                let rep = jantzen_layers(&sd, &c).unwrap();
                assert_eq!(rank, sd.dim() - rep.layer_dims[1], "{p} at {c}");
                assert_eq!(rank > 0, p.is_e_restricted(c.smallest_e()), "{p} at {c}");
                assert!(!g.is_zero() || rank == 0);
            }
        }
    }
}

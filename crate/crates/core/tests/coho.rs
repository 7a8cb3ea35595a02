use tubealg::coho::{gauge_fix_bh, gl_relations_check, omega_hk1_check, phi_a, BHSetup, Convention};
use tubealg::fixtures;
use tubealg::phase::{cocycle2_check, cocycle3_check, coboundary2, is_normalized, standard_cyclic_cocycle, Cocycle3, Phase};
use tubealg::{GroupTable, VerifyConfig};

#[test]
fn phi_a_examples() {
    let z2 = GroupTable::cyclic(2);
    let semion = standard_cyclic_cocycle(2, 1);
    assert_eq!(phi_a(&z2, &semion, 1).unwrap().get(1, 1), Phase::new(1, 2));
    assert!(phi_a(&z2, &Cocycle3::trivial(2), 1).unwrap().is_trivial());
    let z4 = GroupTable::cyclic(4);
    assert_eq!(phi_a(&z4, &standard_cyclic_cocycle(4, 1), 1).unwrap().get(3, 3), Phase::new(3, 4));
    let bad = Cocycle3::from_fn(2, |a, b, c| Phase::new((a == 1 && b == 1 && c == 0) as i64, 2));
    assert!(phi_a(&z2, &bad, 1).is_err());
}

#[test]
fn phi_a_cocycles_for_every_fixture() {
    for (name, p) in fixtures::all_pointed() {
        p.phi_cocycle_check().unwrap_or_else(|f| panic!("{name}: {f}"));
        for c in 0..p.classes.len() {
            for conv in [Convention::OppositeInverse, Convention::Conjugate] {
                cocycle2_check(&p.group, &p.twist(c, conv)).unwrap_or_else(|f| panic!("{name}: {f}"));
            }
        }
    }
}

#[test]
fn phi_class_examples() {
    assert!(fixtures::s3_trivial().phi_class(1).is_trivial());
    let z2 = fixtures::z2_semion();
    assert_eq!(z2.phi_class(1).get(1, 1), Phase::new(1, 2));
    let z4 = fixtures::z4_standard();
    for c in 0..4 {
        assert_eq!(z4.phi_class(c).elements().len(), 4);
    }
}

#[test]
fn gamma_examples() {
    let t = fixtures::s3_trivial();
    assert!((0..6).all(|a| (0..6).all(|x| t.gamma_unchecked(a, x, (x + 1) % 6, 0).is_one())));
    for (_, p) in fixtures::all_pointed() {
        p.gamma_unit_check().unwrap();
    }
}

#[test]
fn gamma_identity_small() {
    let cfg = VerifyConfig::default();
    for (name, p) in fixtures::all_pointed() {
        p.gamma_identity_check(&cfg).unwrap_or_else(|f| panic!("{name}: {f}"));
    }
    fixtures::s4_inflated_semion().gamma_identity_check(&cfg).unwrap();
}

#[test]
fn coboundary_equivalence() {
    for (name, p) in fixtures::all_pointed() {
        if p.order() <= 8 {
            p.coboundary_equivalence_check().unwrap_or_else(|f| panic!("{name}: {f}"));
        }
    }
}

#[test]
fn gauge_fix_product_type() {
    let s = fixtures::bh_v4();
    let fix = gauge_fix_bh(&s).unwrap();
    cocycle3_check(&s.group, &fix.omega).unwrap();
    assert!(is_normalized(&fix.omega));
    omega_hk1_check(&s.h, &s.k, &fix.omega).unwrap();
    gl_relations_check(&s.group, &s.h, &s.k, &fix.omega).unwrap();
    assert_eq!(fix.omega.times(&s.omega.conj()), coboundary2(&s.group, &fix.phi));
    assert!(fix.a_reps.iter().all(|p| !fix.v_reps.contains(p)));
    // Running again changes nothing on the orbit representatives.
    let again = gauge_fix_bh(&s.with_omega(fix.omega.clone()).unwrap()).unwrap();
    assert!(again.phi.is_trivial());
}

#[test]
fn raw_product_type_breaks_gl() {
    let s = fixtures::bh_v4();
    assert!(gl_relations_check(&s.group, &s.h, &s.k, &s.omega).is_err());
}

#[test]
fn gauge_fix_trivial_cocycle() {
    for s in [fixtures::bh_s3(), fixtures::bh_s3_trivial_h()] {
        let fix = gauge_fix_bh(&s).unwrap();
        assert!(fix.omega.is_trivial() && fix.phi.is_trivial());
        gl_relations_check(&s.group, &s.h, &s.k, &fix.omega).unwrap();
    }
}

#[test]
fn setup_preconditions() {
    let g = fixtures::s3();
    let t = fixtures::s3_element(&[1, 0, 2]);
    let c = fixtures::s3_element(&[1, 2, 0]);
    let e = BHSetup::new(g.clone(), vec![0, c], vec![0, t], Cocycle3::trivial(6)).unwrap_err();
    assert_eq!(e.failure().unwrap().check, "subgroup_h");
    let e = BHSetup::new(g.clone(), vec![0, t], vec![0, t], Cocycle3::trivial(6)).unwrap_err();
    assert_eq!(e.failure().unwrap().check, "generation");
    let skew = Cocycle3::from_fn(2, |a, b, c| Phase::new((a * b * c) as i64, 2));
    let e = BHSetup::new(GroupTable::cyclic(2), vec![0], vec![0, 1], skew).unwrap_err();
    assert_eq!(e.failure().unwrap().check, "omega_hk1_k");
}

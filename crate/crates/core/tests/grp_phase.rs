use proptest::prelude::*;
use tubealg::fixtures;
use tubealg::grp::{
    centralizer, conjugacy_data, direct_product, group_from_permutations, group_from_permutations_bounded,
    group_from_table, subgroup_closure, GroupTable,
};
use tubealg::phase::{
    coboundary1, coboundary2, cocycle2_check, cocycle3_check, inflate_cocycle, is_normalized, normalize3,
    normalize3_with_gauge, product_type_cocycle, standard_cyclic_cocycle, Cochain1, Cochain2, Cocycle3, Phase,
};
use tubealg::Error;

#[test]
fn tables() {
    let t = group_from_table(1, &[vec![0]]).unwrap();
    assert_eq!(t.order(), 1);
    let z4 = group_from_table(4, &(0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect::<Vec<_>>()).unwrap();
    assert_eq!(z4.inv(1), 3);
    let err = group_from_table(2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
    let f = err.failure().unwrap();
    assert_eq!(f.check, "inverse");
    assert_eq!(f.witness, vec![1]);
}

#[test]
fn permutation_groups() {
    assert_eq!(fixtures::s3().order(), 6);
    assert_eq!(group_from_permutations(3, &[]).unwrap().order(), 1);
    assert_eq!(group_from_permutations(3, &[vec![1, 0, 2]]).unwrap().order(), 2);
    assert_eq!(fixtures::s4().order(), 24);
    let e = group_from_permutations_bounded(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 10).unwrap_err();
    assert!(matches!(e, Error::TooLarge { .. }));
}

#[test]
fn s3_conjugacy() {
    let g = fixtures::s3();
    let cd = conjugacy_data(&g);
    let mut sizes: Vec<(usize, usize)> = cd.classes.iter().zip(&cd.centralizers).map(|(c, z)| (c.len(), z.len())).collect();
    sizes.sort();
    assert_eq!(sizes, vec![(1, 6), (2, 3), (3, 2)]);
    for (c, class) in cd.classes.iter().enumerate() {
        assert_eq!(cd.rep[c], *class.iter().min().unwrap());
        assert_eq!(cd.transport[cd.rep[c]], 0);
        for &x in class {
            assert_eq!(g.conj(cd.transport[x], cd.rep[c]), x);
        }
    }
    assert_eq!(cd, conjugacy_data(&g));
}

#[test]
fn abelian_conjugacy() {
    for g in [GroupTable::cyclic(2), GroupTable::cyclic(5), fixtures::v4()] {
        let cd = conjugacy_data(&g);
        assert_eq!(cd.len(), g.order());
        assert!(cd.transport.iter().all(|&w| w == 0));
        assert!(cd.centralizers.iter().all(|z| z.len() == g.order()));
    }
}

#[test]
fn orbit_stabilizer_everywhere() {
    for (_, p) in fixtures::all_pointed() {
        let g = &p.group;
        let cd = &p.classes;
        assert_eq!(cd.classes.iter().map(Vec::len).sum::<usize>(), g.order());
        for c in 0..cd.len() {
            assert_eq!(cd.classes[c].len() * cd.centralizers[c].len(), g.order());
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let conj = (0..g.order()).any(|x| g.conj(x, a) == b);
                assert_eq!(cd.class_of[a] == cd.class_of[b], conj);
            }
        }
    }
}

#[test]
fn closures_and_centralizers() {
    let g = fixtures::s3();
    let t = fixtures::s3_element(&[1, 0, 2]);
    let c = fixtures::s3_element(&[1, 2, 0]);
    assert_eq!(subgroup_closure(&g, &[t, c]).len(), 6);
    assert_eq!(subgroup_closure(&g, &[0]), vec![0]);
    assert_eq!(subgroup_closure(&GroupTable::cyclic(4), &[1]).len(), 4);
    assert_eq!(centralizer(&g, 0).len(), 6);
    assert_eq!(centralizer(&g, t), vec![0, t]);
}

#[test]
fn direct_products() {
    let v4 = fixtures::v4();
    assert_eq!(v4.order(), 4);
    assert!((0..4).all(|g| v4.inv(g) == g));
    let z6 = direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(3));
    let mut orders: Vec<usize> = (0..6).map(|g| z6.element_order(g)).collect();
    orders.sort();
    assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
    assert_eq!(direct_product(&GroupTable::trivial(), &GroupTable::cyclic(3)).table(), GroupTable::cyclic(3).table());
}

#[test]
fn cocycle_examples() {
    let z2 = GroupTable::cyclic(2);
    cocycle3_check(&z2, &Cocycle3::trivial(2)).unwrap();
    cocycle3_check(&z2, &standard_cyclic_cocycle(2, 1)).unwrap();
    cocycle3_check(&GroupTable::cyclic(4), &standard_cyclic_cocycle(4, 1)).unwrap();
    assert!(standard_cyclic_cocycle(5, 0).is_trivial());
    let bad = Cocycle3::from_fn(2, |a, b, c| Phase::new((a == 1 && b == 1 && c == 0) as i64, 2));
    assert_eq!(cocycle3_check(&z2, &bad).unwrap_err().witness.len(), 4);
}

#[test]
fn product_type_restrictions() {
    let w = product_type_cocycle();
    cocycle3_check(&fixtures::v4(), &w).unwrap();
    for sub in [[0, 2], [0, 1]] {
        for a in sub {
            for b in sub {
                for c in sub {
                    assert!(w.get(a, b, c).is_one());
                }
            }
        }
    }
}

#[test]
fn inflations() {
    let s3 = fixtures::s3();
    let sign = fixtures::sign_map(3, &[vec![1, 0, 2], vec![1, 2, 0]]);
    let z2 = GroupTable::cyclic(2);
    cocycle3_check(&s3, &inflate_cocycle(&s3, &z2, &standard_cyclic_cocycle(2, 1), &sign).unwrap()).unwrap();
    assert!(inflate_cocycle(&s3, &z2, &Cocycle3::trivial(2), &sign).unwrap().is_trivial());
    let z4 = GroupTable::cyclic(4);
    let w = standard_cyclic_cocycle(4, 1);
    assert_eq!(inflate_cocycle(&z4, &z4, &w, &[0, 1, 2, 3]).unwrap(), w);
}

#[test]
fn two_cocycle_examples() {
    let z2 = GroupTable::cyclic(2);
    cocycle2_check(&z2, &Cochain2::trivial(2)).unwrap();
    cocycle2_check(&z2, &Cochain2::on_group(2, |a, b| Phase::new((a * b) as i64, 2))).unwrap();
    let bad = Cochain2::on_group(2, |a, b| Phase::new((a == 1 && b == 0) as i64, 2));
    assert!(cocycle2_check(&z2, &bad).is_err());
}

#[test]
fn coboundaries() {
    let z2 = GroupTable::cyclic(2);
    assert!(coboundary1(&z2, &Cochain1::new(vec![Phase::ONE; 2])).is_trivial());
    assert!(coboundary2(&z2, &Cochain2::trivial(2)).is_trivial());
    let d = coboundary1(&z2, &Cochain1::new(vec![Phase::ONE, Phase::new(1, 4)]));
    assert_eq!(d.get(1, 1), Phase::new(1, 2));
}

#[test]
fn normalization() {
    let z2 = GroupTable::cyclic(2);
    let semion = standard_cyclic_cocycle(2, 1);
    assert!(is_normalized(&semion));
    assert_eq!(normalize3(&z2, &semion).unwrap(), semion);
    assert!(is_normalized(&Cocycle3::trivial(3)));
    let skew = Cocycle3::from_fn(2, |a, b, c| Phase::new((a == 0 && b == 1 && c == 1) as i64, 2));
    assert!(!is_normalized(&skew));
    // A coboundary times the semion is a valid but unnormalized cocycle.
    let g = fixtures::s3();
    let phi = Cochain2::on_group(6, |a, b| Phase::new((a * 7 + b * 3) as i64 % 5, 5));
    let w = coboundary2(&g, &phi).times(&fixtures::s3_inflated_semion().omega);
    assert!(!is_normalized(&w));
    let (n, gauge) = normalize3_with_gauge(&g, &w).unwrap();
    assert!(is_normalized(&n));
    cocycle3_check(&g, &n).unwrap();
    assert_eq!(n.times(&w.conj()), coboundary2(&g, &gauge));
    assert!(normalize3(&z2, &Cocycle3::from_fn(2, |a, b, c| Phase::new((a * b * (1 - c)) as i64, 2))).is_err());
}

fn small_group(i: usize) -> GroupTable {
    match i % 5 {
        0 => GroupTable::cyclic(2),
        1 => GroupTable::cyclic(3),
        2 => GroupTable::cyclic(4),
        3 => fixtures::v4(),
        _ => fixtures::s3(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phase_group_laws(a in 0i64..1000, b in 1i64..60, c in 0i64..1000, d in 1i64..60, e in 0i64..1000, f in 1i64..60) {
        let (p, q, r) = (Phase::new(a, b), Phase::new(c, d), Phase::new(e, f));
        prop_assert_eq!((p * q) * r, p * (q * r));
        prop_assert!((p * p.inv()).is_one());
        prop_assert_eq!(p.pow(3), p * p * p);
    }

    #[test]
    fn coboundary_of_coboundary_is_trivial(i in 0usize..5, vals in proptest::collection::vec(0i64..12, 6)) {
        let g = small_group(i);
        let gamma = Cochain1::new((0..g.order()).map(|x| Phase::new(vals[x % 6] * (x as i64 + 1), 12)).collect());
        prop_assert!(coboundary2(&g, &coboundary1(&g, &gamma)).is_trivial());
    }

    #[test]
    fn coboundaries_are_cocycles(i in 0usize..5, vals in proptest::collection::vec(0i64..24, 36)) {
        let g = small_group(i);
        let n = g.order();
        let phi = Cochain2::on_group(n, |a, b| Phase::new(vals[a * n + b], 24));
        prop_assert!(cocycle3_check(&g, &coboundary2(&g, &phi)).is_ok());
    }
}

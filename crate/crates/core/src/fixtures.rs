//! Small groups and cocycles used by the tests, the benches and the CLI
//! examples.

use crate::coho::{BHSetup, Pointed};
use crate::grp::{
    direct_product, group_from_permutations, permutation_closure, subgroup_closure, GroupTable,
    DEFAULT_CLOSURE_BOUND,
};
use crate::phase::{inflate_cocycle, product_type_cocycle, standard_cyclic_cocycle, Cocycle3};

const S3_GENS: [[usize; 3]; 2] = [[1, 0, 2], [1, 2, 0]];
const S4_GENS: [[usize; 4]; 2] = [[1, 0, 2, 3], [1, 2, 3, 0]];

fn gens<const D: usize>(g: &[[usize; D]]) -> Vec<Vec<usize>> {
    g.iter().map(|p| p.to_vec()).collect()
}

fn parity(p: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            inv += (p[i] > p[j]) as usize;
        }
    }
    inv % 2
}

/// The sign homomorphism of a permutation group, as an index map onto ℤ/2.
pub fn sign_map(degree: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    permutation_closure(degree, generators, DEFAULT_CLOSURE_BOUND)
        .expect("small permutation group")
        .iter()
        .map(|p| parity(p))
        .collect()
}

pub fn s3() -> GroupTable {
    group_from_permutations(3, &gens(&S3_GENS)).expect("S3")
}

pub fn s4() -> GroupTable {
    group_from_permutations(4, &gens(&S4_GENS)).expect("S4")
}

/// Index in [`s3`] of the permutation with the given images.
pub fn s3_element(images: &[usize]) -> usize {
    permutation_closure(3, &gens(&S3_GENS), DEFAULT_CLOSURE_BOUND)
        .expect("S3")
        .iter()
        .position(|p| p == images)
        .expect("permutation of three points")
}

pub fn v4() -> GroupTable {
    direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2))
}

fn pointed(g: GroupTable, w: Cocycle3) -> Pointed {
    Pointed::new(g, w, usize::MAX).expect("fixture cocycle")
}

pub fn trivial_group() -> Pointed {
    pointed(GroupTable::trivial(), Cocycle3::trivial(1))
}

pub fn z2_semion() -> Pointed {
    pointed(GroupTable::cyclic(2), standard_cyclic_cocycle(2, 1))
}

pub fn cyclic(n: usize, k: i64) -> Pointed {
    pointed(GroupTable::cyclic(n), standard_cyclic_cocycle(n, k))
}

pub fn z3_trivial() -> Pointed {
    cyclic(3, 0)
}

pub fn z4_standard() -> Pointed {
    cyclic(4, 1)
}

pub fn v4_product() -> Pointed {
    pointed(v4(), product_type_cocycle())
}

pub fn s3_trivial() -> Pointed {
    pointed(s3(), Cocycle3::trivial(6))
}

/// The semion cocycle pulled back along the sign map of S3.
pub fn s3_inflated_semion() -> Pointed {
    let g = s3();
    let w = inflate_cocycle(&g, &GroupTable::cyclic(2), &standard_cyclic_cocycle(2, 1), &sign_map(3, &gens(&S3_GENS)))
        .expect("sign is a surjection");
    pointed(g, w)
}

/// The semion cocycle pulled back along the sign map of S4.
pub fn s4_inflated_semion() -> Pointed {
    let g = s4();
    let w = inflate_cocycle(&g, &GroupTable::cyclic(2), &standard_cyclic_cocycle(2, 1), &sign_map(4, &gens(&S4_GENS)))
        .expect("sign is a surjection");
    pointed(g, w)
}

/// S3 with `H = ⟨(0 1)⟩`, `K = ⟨(0 1 2)⟩` and trivial cocycle.
pub fn bh_s3() -> BHSetup {
    let g = s3();
    let h = subgroup_closure(&g, &[s3_element(&[1, 0, 2])]);
    let k = subgroup_closure(&g, &[s3_element(&[1, 2, 0])]);
    BHSetup::new(g, h, k, Cocycle3::trivial(6)).expect("S3 setup")
}

/// ℤ/2×ℤ/2 with the product-type cocycle, `H` the first factor and `K`
/// the second.
pub fn bh_v4() -> BHSetup {
    BHSetup::new(v4(), vec![0, 2], vec![0, 1], product_type_cocycle()).expect("V4 setup")
}

/// S3 with trivial `H`, `K = S3`; the annular algebra is the tube algebra.
pub fn bh_s3_trivial_h() -> BHSetup {
    BHSetup::new(s3(), vec![0], (0..6).collect(), Cocycle3::trivial(6)).expect("S3 setup")
}

/// Every small fixture with a name, for sweeping tests.
pub fn all_pointed() -> Vec<(&'static str, Pointed)> {
    vec![
        ("trivial", trivial_group()),
        ("z2_semion", z2_semion()),
        ("z3_trivial", z3_trivial()),
        ("z4_standard", z4_standard()),
        ("v4_product", v4_product()),
        ("s3_trivial", s3_trivial()),
        ("s3_semion", s3_inflated_semion()),
        ("z6_standard", cyclic(6, 1)),
        ("z12_standard", cyclic(12, 5)),
    ]
}

//! Shared interface for the finite-dimensional *-algebras in this crate:
//! a labelled basis whose products are single phase-scaled basis vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use crate::cyclo::{Cyclo, CyclotomicField};
use crate::error::{Check, Failure};
use crate::grp::GroupTable;
use crate::phase::{Cochain2, Phase};
use crate::verify::{Coverage, VerifyConfig};

/// Basis label of one of the algebras.
pub trait Label: Copy + Eq + Ord + Hash + Debug {
    /// Components used in witnesses and JSON.
    fn parts(&self) -> Vec<usize>;

    /// Tuple form, e.g. `(0,1,0)`.
    fn tuple(&self) -> String {
        let p: Vec<String> = self.parts().iter().map(ToString::to_string).collect();
        format!("({})", p.join(","))
    }
}

/// An algebra with a basis closed under product (up to a phase or zero),
/// a conjugate-linear involution permuting the basis up to phases, and a
/// trace that is 1 on unit-type basis vectors and 0 elsewhere.
pub trait StarAlgebra {
    type L: Label;

    fn basis(&self) -> &[Self::L];

    fn index_of(&self, l: &Self::L) -> Option<usize>;

    /// `b·a`, or `None` when the labels are not composable.
    fn mul(&self, b: &Self::L, a: &Self::L) -> Option<(Phase, Self::L)>;

    fn star(&self, a: &Self::L) -> (Phase, Self::L);

    fn trace(&self, a: &Self::L) -> bool;

    /// Key of the slot `a` starts from; `b·a ≠ 0` iff `source(b) == target(a)`.
    fn source(&self, a: &Self::L) -> usize;

    fn target(&self, a: &Self::L) -> usize;

    /// The basis vectors summing to the unit.
    fn unit(&self) -> Vec<Self::L> {
        self.basis().iter().filter(|l| self.trace(l) && self.star(l).1 == **l).copied().collect()
    }

    fn dimension(&self) -> usize {
        self.basis().len()
    }
}

/// Index of the basis grouped by source key.
pub fn by_source<A: StarAlgebra>(alg: &A) -> HashMap<usize, Vec<A::L>> {
    let mut m: HashMap<usize, Vec<A::L>> = HashMap::new();
    for l in alg.basis() {
        m.entry(alg.source(l)).or_default().push(*l);
    }
    m
}

fn fail<L: Label>(check: &str, labels: &[L], detail: String) -> Failure {
    Failure::new(check, labels.iter().flat_map(Label::parts).collect(), detail)
}

fn assoc_at<A: StarAlgebra>(alg: &A, c: &A::L, b: &A::L, a: &A::L) -> Check {
    let left = alg.mul(c, b).and_then(|(p, cb)| alg.mul(&cb, a).map(|(q, r)| (p * q, r)));
    let right = alg.mul(b, a).and_then(|(p, ba)| alg.mul(c, &ba).map(|(q, r)| (p * q, r)));
    if left == right {
        Ok(())
    } else {
        Err(fail("associativity", &[*c, *b, *a], format!("{left:?} vs {right:?}")))
    }
}

/// `(c·b)·a = c·(b·a)` on composable triples.
pub fn associativity_check<A: StarAlgebra>(alg: &A, coverage: Coverage, cfg: &VerifyConfig) -> Check {
    let src = by_source(alg);
    let empty = vec![];
    let after = |l: &A::L| src.get(&alg.target(l)).unwrap_or(&empty);
    match coverage {
        Coverage::Exhaustive => {
            for a in alg.basis() {
                for b in after(a) {
                    for c in after(b) {
                        assoc_at(alg, c, b, a)?;
                    }
                }
            }
        }
        Coverage::Sampled(k) => {
            let mut rng = cfg.rng();
            let basis = alg.basis();
            for _ in 0..k {
                let a = basis[rng.gen_range(0..basis.len())];
                let bs = after(&a);
                let b = bs[rng.gen_range(0..bs.len())];
                let cs = after(&b);
                let c = cs[rng.gen_range(0..cs.len())];
                assoc_at(alg, &c, &b, &a)?;
            }
        }
    }
    Ok(())
}

fn star_scaled<A: StarAlgebra>(alg: &A, (p, l): (Phase, A::L)) -> (Phase, A::L) {
    let (q, m) = alg.star(&l);
    (p.conj() * q, m)
}

/// `#² = id` and `(b·a)^# = a^#·b^#` on all basis pairs.
pub fn star_checks<A: StarAlgebra>(alg: &A) -> Check {
    for a in alg.basis() {
        let twice = star_scaled(alg, alg.star(a));
        if twice != (Phase::ONE, *a) {
            return Err(fail("star_involution", &[*a], format!("{twice:?}")));
        }
    }
    for b in alg.basis() {
        for a in alg.basis() {
            let left = alg.mul(b, a).map(|x| star_scaled(alg, x));
            let (pa, sa) = alg.star(a);
            let (pb, sb) = alg.star(b);
            let right = alg.mul(&sa, &sb).map(|(q, r)| (pa * pb * q, r));
            if left != right {
                return Err(fail("star_antihomomorphism", &[*b, *a], format!("{left:?} vs {right:?}")));
            }
        }
    }
    Ok(())
}

fn trace_of<A: StarAlgebra>(alg: &A, x: Option<(Phase, A::L)>) -> Phase {
    match x {
        Some((p, l)) if alg.trace(&l) => p,
        _ => Phase::ONE,
    }
}

/// `Ω(b·a) = Ω(a·b)` on all basis pairs.
pub fn trace_symmetry_check<A: StarAlgebra>(alg: &A) -> Check {
    for b in alg.basis() {
        for a in alg.basis() {
            let ba = alg.mul(b, a).filter(|(_, l)| alg.trace(l));
            let ab = alg.mul(a, b).filter(|(_, l)| alg.trace(l));
            if ba.is_some() != ab.is_some() || trace_of(alg, ba) != trace_of(alg, ab) {
                return Err(fail("trace_symmetry", &[*b, *a], String::new()));
            }
        }
    }
    Ok(())
}

/// The Gram matrix `Ω(y^#·x)` of the basis is the identity.
pub fn gram_identity_check<A: StarAlgebra>(alg: &A) -> Check {
    for y in alg.basis() {
        let (py, sy) = alg.star(y);
        for x in alg.basis() {
            let v = alg.mul(&sy, x).filter(|(_, l)| alg.trace(l)).map(|(p, _)| p * py);
            let ok = match v {
                Some(p) => x == y && p.is_one(),
                None => x != y,
            };
            if !ok {
                return Err(fail("gram_identity", &[*x, *y], format!("{v:?}")));
            }
        }
    }
    Ok(())
}

/// The sum of [`StarAlgebra::unit`] is a two-sided unit on basis vectors.
pub fn unit_check<A: StarAlgebra>(alg: &A) -> Check {
    let unit = alg.unit();
    for a in alg.basis() {
        let left: Vec<_> = unit.iter().filter_map(|u| alg.mul(u, a)).collect();
        let right: Vec<_> = unit.iter().filter_map(|u| alg.mul(a, u)).collect();
        if left != [(Phase::ONE, *a)] || right != [(Phase::ONE, *a)] {
            return Err(fail("unit", &[*a], String::new()));
        }
    }
    Ok(())
}

/// Finitely supported linear combination with exact cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<L: Label> {
    pub terms: BTreeMap<L, Cyclo>,
}

impl<L: Label> Element<L> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(field: &CyclotomicField, l: L) -> Self {
        Element { terms: BTreeMap::from([(l, field.one())]) }
    }

    pub fn add_term(&mut self, field: &CyclotomicField, l: L, c: &Cyclo) {
        let v = match self.terms.get(&l) {
            Some(old) => field.add(old, c),
            None => c.clone(),
        };
        if field.is_zero(&v) {
            self.terms.remove(&l);
        } else {
            self.terms.insert(l, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `y·x` for elements.
pub fn mul_elements<A: StarAlgebra>(
    alg: &A,
    field: &CyclotomicField,
    y: &Element<A::L>,
    x: &Element<A::L>,
) -> crate::error::Result<Element<A::L>> {
    let mut out = Element::zero();
    for (b, cb) in &y.terms {
        for (a, ca) in &x.terms {
            if let Some((p, l)) = alg.mul(b, a) {
                let c = field.mul(&field.mul(cb, ca), &field.from_phase(p)?);
                out.add_term(field, l, &c);
            }
        }
    }
    Ok(out)
}

pub fn star_element<A: StarAlgebra>(
    alg: &A,
    field: &CyclotomicField,
    x: &Element<A::L>,
) -> crate::error::Result<Element<A::L>> {
    let mut out = Element::zero();
    for (a, c) in &x.terms {
        let (p, l) = alg.star(a);
        out.add_term(field, l, &field.mul(&field.conj(c), &field.from_phase(p)?));
    }
    Ok(out)
}

pub fn trace_element<A: StarAlgebra>(alg: &A, field: &CyclotomicField, x: &Element<A::L>) -> Cyclo {
    let mut t = field.zero();
    for (a, c) in &x.terms {
        if alg.trace(a) {
            t = field.add(&t, c);
        }
    }
    t
}

/// `⟨x, y⟩ = Ω(y^#·x)`.
pub fn inner<A: StarAlgebra>(
    alg: &A,
    field: &CyclotomicField,
    x: &Element<A::L>,
    y: &Element<A::L>,
) -> crate::error::Result<Cyclo> {
    let ys = star_element(alg, field, y)?;
    Ok(trace_element(alg, field, &mul_elements(alg, field, &ys, x)?))
}

/// Label of a block-algebra basis vector `E_{row,col} ⊗ [x]` in class `class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockLabel {
    pub class: usize,
    pub row: usize,
    pub col: usize,
    pub x: usize,
}

impl Label for BlockLabel {
    fn parts(&self) -> Vec<usize> {
        vec![self.class, self.row, self.col, self.x]
    }
}

/// One summand `M_I ⊗ ℂ[G_C]_{φ_C}`.
#[derive(Clone, Debug)]
pub struct BlockClass {
    /// Size of the matrix-unit index set.
    pub size: usize,
    pub centralizer: Vec<usize>,
    pub twist: Cochain2,
}

/// `⊕_C M_{I_C} ⊗ ℂ[G_C]_{φ_C}`.
#[derive(Clone, Debug)]
pub struct BlockAlgebra {
    pub group: GroupTable,
    pub classes: Vec<BlockClass>,
    basis: Vec<BlockLabel>,
    index: HashMap<BlockLabel, usize>,
}

impl BlockAlgebra {
    pub fn new(group: GroupTable, classes: Vec<BlockClass>) -> BlockAlgebra {
        let mut basis = vec![];
        for (c, bc) in classes.iter().enumerate() {
            for row in 0..bc.size {
                for col in 0..bc.size {
                    for &x in &bc.centralizer {
                        basis.push(BlockLabel { class: c, row, col, x });
                    }
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        BlockAlgebra { group, classes, basis, index }
    }

    /// `Σ_C |I_C|²·|G_C|`.
    pub fn audit_dimension(&self) -> usize {
        self.classes.iter().map(|c| c.size * c.size * c.centralizer.len()).sum()
    }
}

impl StarAlgebra for BlockAlgebra {
    type L = BlockLabel;

    fn basis(&self) -> &[BlockLabel] {
        &self.basis
    }

    fn index_of(&self, l: &BlockLabel) -> Option<usize> {
        self.index.get(l).copied()
    }

    fn mul(&self, b: &BlockLabel, a: &BlockLabel) -> Option<(Phase, BlockLabel)> {
        if b.class != a.class || b.col != a.row {
            return None;
        }
        let twist = &self.classes[b.class].twist;
        let x = BlockLabel { class: b.class, row: b.row, col: a.col, x: self.group.mul(b.x, a.x) };
        Some((twist.get(b.x, a.x), x))
    }

    fn star(&self, a: &BlockLabel) -> (Phase, BlockLabel) {
        let xi = self.group.inv(a.x);
        let p = self.classes[a.class].twist.get(a.x, xi).conj();
        (p, BlockLabel { class: a.class, row: a.col, col: a.row, x: xi })
    }

    fn trace(&self, a: &BlockLabel) -> bool {
        a.row == a.col && a.x == 0
    }

    fn source(&self, a: &BlockLabel) -> usize {
        self.key(a.class, a.col)
    }

    fn target(&self, a: &BlockLabel) -> usize {
        self.key(a.class, a.row)
    }
}

impl BlockAlgebra {
    fn key(&self, class: usize, slot: usize) -> usize {
        let off: usize = self.classes[..class].iter().map(|c| c.size).sum();
        off + slot
    }
}

/// A *-algebra with an explicit isomorphism onto a [`BlockAlgebra`].
pub trait BlockIso: StarAlgebra {
    fn blocks(&self) -> &BlockAlgebra;

    fn phi(&self, a: &Self::L) -> (Phase, BlockLabel);

    fn phi_inverse(&self, b: &BlockLabel) -> (Phase, Self::L);

    /// The projection whose range generates the class-`c` support.
    fn support_projection(&self, class: usize) -> Self::L;

    /// Matrix-unit slot of the class representative (its row = column index).
    fn corner_slot(&self, class: usize) -> usize;
}

/// Exhaustive check that `Φ` is multiplicative and *-preserving, and that
/// `Φ` and `Φ⁻¹` are mutually inverse bijections of the bases.
pub fn star_iso_check<A: BlockIso>(alg: &A) -> Check {
    let blocks = alg.blocks();
    if blocks.audit_dimension() != alg.dimension() {
        return Err(Failure::new(
            "block_dimension",
            vec![blocks.audit_dimension(), alg.dimension()],
            "block sum dimension differs from basis count",
        ));
    }
    let mut hit = vec![false; blocks.dimension()];
    for a in alg.basis() {
        let (p, img) = alg.phi(a);
        let Some(i) = blocks.index_of(&img) else {
            return Err(fail("phi_image", &[*a], format!("{img:?} not a block basis vector")));
        };
        if std::mem::replace(&mut hit[i], true) {
            return Err(fail("phi_injective", &[*a], String::new()));
        }
        let (q, back) = alg.phi_inverse(&img);
        if back != *a || !(p * q).is_one() {
            return Err(fail("phi_roundtrip", &[*a], format!("{back:?}, {}", p * q)));
        }
    }
    for b in alg.basis() {
        let (pb, xb) = alg.phi(b);
        for a in alg.basis() {
            let (pa, xa) = alg.phi(a);
            let left = alg.mul(b, a).map(|(p, l)| {
                let (q, img) = alg.phi(&l);
                (p * q, img)
            });
            let right = blocks.mul(&xb, &xa).map(|(p, l)| (p * pa * pb, l));
            if left != right {
                return Err(fail("phi_multiplicative", &[*b, *a], format!("{left:?} vs {right:?}")));
            }
        }
    }
    for a in alg.basis() {
        let (p, s) = alg.star(a);
        let (q, img) = alg.phi(&s);
        let (pa, xa) = alg.phi(a);
        let (r, simg) = blocks.star(&xa);
        if (p * q, img) != (pa.conj() * r, simg) {
            return Err(fail("phi_star", &[*a], String::new()));
        }
    }
    Ok(())
}

/// One nonzero product `left·right = scalar·result` of basis labels.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructureConstant {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub scalar: Phase,
    pub result: Vec<usize>,
}

/// Every nonzero basis product, in basis order.
pub fn structure_constants<A: StarAlgebra>(alg: &A) -> Vec<StructureConstant> {
    let mut out = vec![];
    for b in alg.basis() {
        for a in alg.basis() {
            if alg.target(a) != alg.source(b) {
                continue;
            }
            if let Some((p, l)) = alg.mul(b, a) {
                out.push(StructureConstant { left: b.parts(), right: a.parts(), scalar: p, result: l.parts() });
            }
        }
    }
    out
}

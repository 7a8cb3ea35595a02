//! The annular algebra of a Bisch–Haagerup setup `(G, H, K, ω)` over the
//! weight set `G`: box morphisms, the basis `A(h1, g1, s, h2, g2)`, its
//! isomorphism onto `⊕_C M_{S_C} ⊗ ℂ[G_C]_{φ_C}`, the twisted algebras
//! `End(X_g)` and the cut-down by their minimal projections.

use std::collections::HashMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{
    star_iso_check, structure_constants, BlockAlgebra, BlockClass, BlockIso, BlockLabel, Label, StarAlgebra,
    StructureConstant,
};
use crate::coho::{BHSetup, Convention, Pointed};
use crate::error::{Check, Error, Failure, Result};
use crate::phase::{Cochain2, Phase};
use crate::rep::{induced_irreducibles, minimal_projections, TwistedGroupAlgebra};
use crate::tube_diag::{phi_inverse_on_classes, phi_on_classes, simple_count_of, SimpleCount};
use crate::zlinear::solve_mod_one;

/// `A(h1, g1, s, h2, g2)` with `h1·g1·s = s·h2·g2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ALabel {
    pub h1: usize,
    pub g1: usize,
    pub s: usize,
    pub h2: usize,
    pub g2: usize,
}

impl Label for ALabel {
    fn parts(&self) -> Vec<usize> {
        vec![self.h1, self.g1, self.s, self.h2, self.g2]
    }
}

/// A box `(h1, g1, g2, h2)` from `X_{g1}` to `X_{g2}` with `h1·g1 = g2·h2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxMorphism {
    pub h1: usize,
    pub g1: usize,
    pub g2: usize,
    pub h2: usize,
}

impl Label for BoxMorphism {
    fn parts(&self) -> Vec<usize> {
        vec![self.h1, self.g1, self.g2, self.h2]
    }
}

/// Image of a basis vector under `Φ`; the matrix unit is indexed by pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BhPhiImage {
    pub class: usize,
    pub scalar: Phase,
    /// `((h2,g2),(h1,g1))`.
    pub unit: ((usize, usize), (usize, usize)),
    pub element: usize,
}

#[derive(Clone, Debug)]
pub struct AnnularAlgebra {
    setup: BHSetup,
    data: Pointed,
    basis: Vec<ALabel>,
    index: HashMap<ALabel, usize>,
    /// `S_C` per class, sorted.
    slots: Vec<Vec<(usize, usize)>>,
    slot_of: HashMap<(usize, usize), usize>,
    blocks: BlockAlgebra,
}

impl AnnularAlgebra {
    pub fn new(setup: BHSetup) -> Result<AnnularAlgebra> {
        AnnularAlgebra::with_convention(setup, Convention::OppositeInverse)
    }

    pub fn with_convention(setup: BHSetup, convention: Convention) -> Result<AnnularAlgebra> {
        let data = Pointed::new(setup.group.clone(), setup.omega.clone(), usize::MAX)?;
        let g = &setup.group;
        let n = g.order();
        let mut basis = vec![];
        for &h1 in &setup.h {
            for g1 in 0..n {
                for s in 0..n {
                    let x = g.prod(&[g.inv(s), h1, g1, s]);
                    for &h2 in &setup.h {
                        basis.push(ALabel { h1, g1, s, h2, g2: g.mul(g.inv(h2), x) });
                    }
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut slots = vec![vec![]; data.classes.len()];
        for &h in &setup.h {
            for x in 0..n {
                slots[data.classes.class_of[g.mul(h, x)]].push((h, x));
            }
        }
        let mut slot_of = HashMap::new();
        for sc in &mut slots {
            sc.sort_unstable();
            for (i, p) in sc.iter().enumerate() {
                slot_of.insert(*p, i);
            }
        }
        let classes = (0..data.classes.len())
            .map(|c| BlockClass {
                size: slots[c].len(),
                centralizer: data.classes.centralizers[c].clone(),
                twist: data.twist(c, convention),
            })
            .collect();
        let blocks = BlockAlgebra::new(g.clone(), classes);
        Ok(AnnularAlgebra { setup, data, basis, index, slots, slot_of, blocks })
    }

    pub fn setup(&self) -> &BHSetup {
        &self.setup
    }

    pub fn data(&self) -> &Pointed {
        &self.data
    }

    /// `S_C = {(h,g) ∈ H×G : hg ∈ C}`.
    pub fn slots(&self, class: usize) -> &[(usize, usize)] {
        &self.slots[class]
    }

    fn validate(&self, l: &ALabel) -> Result<()> {
        if self.index.contains_key(l) {
            Ok(())
        } else {
            Err(Error::format(format!("{} violates h1·g1·s = s·h2·g2", l.tuple())))
        }
    }

    /// `B·A` with scalar `ω(s,t,h3g3)·ω̄(s,h2g2,t)·ω(h1g1,s,t)`.
    pub fn a_mult(&self, b: &ALabel, a: &ALabel) -> Result<Option<(Phase, ALabel)>> {
        self.validate(b)?;
        self.validate(a)?;
        Ok(self.mul(b, a))
    }

    pub fn a_star(&self, a: &ALabel) -> Result<(Phase, ALabel)> {
        self.validate(a)?;
        Ok(self.star(a))
    }

    /// `Ω(A(h1,g,s,h2,g)) = δ_{h1=h2}·δ_{s=e}`.
    pub fn a_trace(&self, a: &ALabel) -> Result<u8> {
        self.validate(a)?;
        Ok(self.trace(a) as u8)
    }

    /// `ω(h1,g1,s)·ω(s,h2,g2)`: the factor with `A(…) = factor·a(…)`.
    pub fn a_factor(&self, a: &ALabel) -> Phase {
        self.data.w(a.h1, a.g1, a.s) * self.data.w(a.s, a.h2, a.g2)
    }

    pub fn bh_phi_iso(&self, a: &ALabel) -> Result<BhPhiImage> {
        self.validate(a)?;
        let (p, b) = self.phi(a);
        let sc = &self.slots[b.class];
        Ok(BhPhiImage { class: b.class, scalar: p, unit: (sc[b.row], sc[b.col]), element: b.x })
    }

    pub fn bh_phi_iso_inverse(&self, class: usize, row: (usize, usize), col: (usize, usize), x: usize) -> Result<(Phase, ALabel)> {
        let bad = || Error::format("matrix unit outside the class");
        let sc = self.slots.get(class).ok_or_else(bad)?;
        let r = sc.binary_search(&row).map_err(|_| bad())?;
        let c = sc.binary_search(&col).map_err(|_| bad())?;
        if self.data.classes.centralizers[class].binary_search(&x).is_err() {
            return Err(Error::format("group element outside the centralizer"));
        }
        Ok(self.phi_inverse(&BlockLabel { class, row: r, col: c, x }))
    }

    pub fn simple_count(&self) -> SimpleCount {
        simple_count_of(&self.blocks)
    }

    fn key(&self, h: usize, g: usize) -> usize {
        h * self.data.order() + g
    }
}

impl StarAlgebra for AnnularAlgebra {
    type L = ALabel;

    fn basis(&self) -> &[ALabel] {
        &self.basis
    }

    fn index_of(&self, l: &ALabel) -> Option<usize> {
        self.index.get(l).copied()
    }

    fn mul(&self, b: &ALabel, a: &ALabel) -> Option<(Phase, ALabel)> {
        if b.h1 != a.h2 || b.g1 != a.g2 {
            return None;
        }
        let g = &self.data.group;
        let w = |x, y, z| self.data.w(x, y, z);
        let (s, t) = (a.s, b.s);
        let p = w(s, t, g.mul(b.h2, b.g2)) * w(s, g.mul(a.h2, a.g2), t).conj() * w(g.mul(a.h1, a.g1), s, t);
        Some((p, ALabel { h1: a.h1, g1: a.g1, s: g.mul(s, t), h2: b.h2, g2: b.g2 }))
    }

    fn star(&self, a: &ALabel) -> (Phase, ALabel) {
        let g = &self.data.group;
        let si = g.inv(a.s);
        let (x1, x2) = (g.mul(a.h1, a.g1), g.mul(a.h2, a.g2));
        let w = |x, y, z| self.data.w(x, y, z);
        let p = w(x1, a.s, si).conj() * w(a.s, x2, si) * w(a.s, si, x1).conj();
        (p, ALabel { h1: a.h2, g1: a.g2, s: si, h2: a.h1, g2: a.g1 })
    }

    fn trace(&self, a: &ALabel) -> bool {
        a.h1 == a.h2 && a.g1 == a.g2 && a.s == 0
    }

    fn source(&self, a: &ALabel) -> usize {
        self.key(a.h1, a.g1)
    }

    fn target(&self, a: &ALabel) -> usize {
        self.key(a.h2, a.g2)
    }
}

impl BlockIso for AnnularAlgebra {
    fn blocks(&self) -> &BlockAlgebra {
        &self.blocks
    }

    fn phi(&self, a: &ALabel) -> (Phase, BlockLabel) {
        let g = &self.data.group;
        let (class, p, x) = phi_on_classes(&self.data, g.mul(a.h1, a.g1), a.s, g.mul(a.h2, a.g2));
        let row = self.slot_of[&(a.h2, a.g2)];
        let col = self.slot_of[&(a.h1, a.g1)];
        (p, BlockLabel { class, row, col, x })
    }

    fn phi_inverse(&self, b: &BlockLabel) -> (Phase, ALabel) {
        let g = &self.data.group;
        let (h1, g1) = self.slots[b.class][b.col];
        let (h2, g2) = self.slots[b.class][b.row];
        let (p, s) = phi_inverse_on_classes(&self.data, b.class, g.mul(h1, g1), g.mul(h2, g2), b.x);
        (p, ALabel { h1, g1, s, h2, g2 })
    }

    fn support_projection(&self, class: usize) -> ALabel {
        let gc = self.data.classes.rep[class];
        ALabel { h1: 0, g1: gc, s: 0, h2: 0, g2: gc }
    }

    fn corner_slot(&self, class: usize) -> usize {
        self.slot_of[&(0, self.data.classes.rep[class])]
    }
}

/// Outcome of the *-isomorphism check under both block twists.
#[derive(Clone, Debug, Serialize)]
pub struct ConventionReport {
    pub opposite_inverse: std::result::Result<(), Failure>,
    pub conjugate: std::result::Result<(), Failure>,
}

impl ConventionReport {
    /// The passing convention, preferring the opposite-inverse twist.
    pub fn selected(&self) -> Option<Convention> {
        if self.opposite_inverse.is_ok() {
            Some(Convention::OppositeInverse)
        } else if self.conjugate.is_ok() {
            Some(Convention::Conjugate)
        } else {
            None
        }
    }

    pub fn check(&self) -> Check {
        match self.selected() {
            Some(_) => Ok(()),
            None => self.opposite_inverse.clone(),
        }
    }
}

/// Exhaustive *-isomorphism check of `Φ` under both twists of the blocks.
pub fn bh_verify_star_iso(setup: &BHSetup) -> Result<ConventionReport> {
    let run = |c| -> Result<Check> { Ok(star_iso_check(&AnnularAlgebra::with_convention(setup.clone(), c)?)) };
    Ok(ConventionReport { opposite_inverse: run(Convention::OppositeInverse)?, conjugate: run(Convention::Conjugate)? })
}

/// All `(h1, g1, g2, h2)` with `h1·g1 = g2·h2`; empty unless `Hg1H = Hg2H`.
pub fn box_basis(setup: &BHSetup, g1: usize, g2: usize) -> Vec<BoxMorphism> {
    let g = &setup.group;
    setup
        .h
        .iter()
        .filter_map(|&h1| {
            let h2 = g.prod(&[g.inv(g2), h1, g1]);
            setup.in_h(h2).then_some(BoxMorphism { h1, g1, g2, h2 })
        })
        .collect()
}

fn is_box(setup: &BHSetup, b: &BoxMorphism) -> bool {
    let g = &setup.group;
    let n = g.order();
    b.g1 < n && b.g2 < n && setup.in_h(b.h1) && setup.in_h(b.h2) && g.mul(b.h1, b.g1) == g.mul(b.g2, b.h2)
}

/// `(h3,g2,g3,h4)∘(h1,g1,g2,h2) = ω̄(h3,h1,g1)·ω(h3,g2,h2)·ω̄(g3,h4,h2)·(h3h1, g1, g3, h4h2)`.
pub fn box_compose(setup: &BHSetup, b2: &BoxMorphism, b1: &BoxMorphism) -> Result<(Phase, BoxMorphism)> {
    if !is_box(setup, b1) || !is_box(setup, b2) {
        return Err(Error::format("not a box morphism"));
    }
    if b1.g2 != b2.g1 {
        return Err(Error::format(format!("grading mismatch: {} then {}", b1.tuple(), b2.tuple())));
    }
    let g = &setup.group;
    let w = |x, y, z| setup.omega.get(x, y, z);
    let p = w(b2.h1, b1.h1, b1.g1).conj() * w(b2.h1, b1.g2, b1.h2) * w(b2.g2, b2.h2, b1.h2).conj();
    Ok((p, BoxMorphism { h1: g.mul(b2.h1, b1.h1), g1: b1.g1, g2: b2.g2, h2: g.mul(b2.h2, b1.h2) }))
}

/// `(h1,g1,g2,h2)^* = ω̄(h1,g1,h2⁻¹)·(h1⁻¹, g2, g1, h2⁻¹)`.
pub fn box_star(setup: &BHSetup, b: &BoxMorphism) -> Result<(Phase, BoxMorphism)> {
    if !is_box(setup, b) {
        return Err(Error::format("not a box morphism"));
    }
    let g = &setup.group;
    let h2i = g.inv(b.h2);
    let p = setup.omega.get(b.h1, b.g1, h2i).conj();
    Ok((p, BoxMorphism { h1: g.inv(b.h1), g1: b.g2, g2: b.g1, h2: h2i }))
}

fn all_boxes(setup: &BHSetup) -> Vec<BoxMorphism> {
    let n = setup.group.order();
    (0..n).flat_map(|g1| (0..n).flat_map(move |g2| box_basis(setup, g1, g2))).collect()
}

/// Associativity of composition on all composable triples, `** = id`,
/// `(b2∘b1)^* = b1^*∘b2^*`, and `b^*∘b = b∘b^*`-identities.
pub fn box_checks(setup: &BHSetup) -> Check {
    let boxes = all_boxes(setup);
    let mut from: HashMap<usize, Vec<BoxMorphism>> = HashMap::new();
    for b in &boxes {
        from.entry(b.g1).or_default().push(*b);
    }
    let compose = |b2: &BoxMorphism, b1: &BoxMorphism| box_compose(setup, b2, b1).expect("composable boxes");
    let star = |b: &BoxMorphism| box_star(setup, b).expect("box");
    let fail = |name: &str, bs: &[&BoxMorphism]| Failure::new(name, bs.iter().flat_map(|b| b.parts()).collect(), "");
    let empty = vec![];
    for b1 in &boxes {
        for b2 in from.get(&b1.g2).unwrap_or(&empty) {
            let (p21, b21) = compose(b2, b1);
            for b3 in from.get(&b2.g2).unwrap_or(&empty) {
                let (p3_21, left) = compose(b3, &b21);
                let (p32, b32) = compose(b3, b2);
                let (p32_1, right) = compose(&b32, b1);
                if (p21 * p3_21, left) != (p32 * p32_1, right) {
                    return Err(fail("box_associativity", &[b3, b2, b1]));
                }
            }
            let (ps, s21) = star(&b21);
            let (q1, s1) = star(b1);
            let (q2, s2) = star(b2);
            let (pc, c) = compose(&s1, &s2);
            if (p21.conj() * ps, s21) != (q1 * q2 * pc, c) {
                return Err(fail("box_star_antihomomorphism", &[b2, b1]));
            }
        }
        let (p, s) = star(b1);
        let (q, ss) = star(&s);
        if (p.conj() * q, ss) != (Phase::ONE, *b1) {
            return Err(fail("box_star_involution", &[b1]));
        }
        let id1 = BoxMorphism { h1: 0, g1: b1.g1, g2: b1.g1, h2: 0 };
        let id2 = BoxMorphism { h1: 0, g1: b1.g2, g2: b1.g2, h2: 0 };
        let (r, left) = compose(&s, b1);
        let (t, right) = compose(b1, &s);
        if (p * r, left) != (Phase::ONE, id1) || (p * t, right) != (Phase::ONE, id2) {
            return Err(fail("box_unitary", &[b1]));
        }
    }
    Ok(())
}

/// `H^g = H ∩ g⁻¹Hg`, sorted.
pub fn stabilizer(setup: &BHSetup, g: usize) -> Vec<usize> {
    setup.h.iter().copied().filter(|&h| setup.in_h(setup.group.conj(g, h))).collect()
}

/// `(h1,h2) ↦ ω̄(gh1g⁻¹, gh2g⁻¹, g)·ω(gh1g⁻¹, g, h2)·ω̄(g, h1, h2)` on `H^g`.
pub fn end_xg_twist(setup: &BHSetup, g: usize) -> Cochain2 {
    let gr = &setup.group;
    let w = |x, y, z| setup.omega.get(x, y, z);
    Cochain2::from_fn(gr.order(), &stabilizer(setup, g), |h1, h2| {
        let (c1, c2) = (gr.conj(g, h1), gr.conj(g, h2));
        w(c1, c2, g).conj() * w(c1, g, h2) * w(g, h1, h2).conj()
    })
}

/// `End(X_g)` as the twisted group algebra of `H^g`.
pub fn end_xg_algebra(setup: &BHSetup, g: usize) -> Result<TwistedGroupAlgebra> {
    if g >= setup.group.order() {
        return Err(Error::format("element index out of range"));
    }
    TwistedGroupAlgebra::new(&setup.group, &stabilizer(setup, g), end_xg_twist(setup, g))
}

/// Smallest element of each double coset `HgH`, increasing.
pub fn double_coset_reps(setup: &BHSetup) -> Vec<usize> {
    let g = &setup.group;
    let mut seen = vec![false; g.order()];
    let mut reps = vec![];
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &a in &setup.h {
            for &b in &setup.h {
                seen[g.prod(&[a, x, b])] = true;
            }
        }
    }
    reps
}

/// `h ↦ ι(h) = Σ_{k∈H} c(k,h)·A(h⁻¹k(ghg⁻¹), g, h⁻¹, k, g)`, a unital
/// *-embedding of `End(X_g)` into the `(·,g)` corner of the annular algebra.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub g: usize,
    /// `H^g` in basis order of [`end_xg_algebra`].
    pub elements: Vec<usize>,
    /// Terms of `ι(h)` per element of `H^g`.
    pub terms: Vec<Vec<(Phase, ALabel)>>,
}

impl Embedding {
    /// Coefficients over the annular basis of `ι(Σ x_h [h])`.
    pub fn apply(&self, alg: &AnnularAlgebra, x: &[Complex64]) -> Vec<(usize, Complex64)> {
        let mut out = vec![];
        for (terms, &xh) in self.terms.iter().zip(x) {
            for (p, l) in terms {
                out.push((alg.index_of(l).expect("basis label"), xh * p.to_complex()));
            }
        }
        out
    }
}

fn product_terms(alg: &AnnularAlgebra, y: &[(Phase, ALabel)], x: &[(Phase, ALabel)]) -> Vec<(Phase, ALabel)> {
    let mut out: Vec<(Phase, ALabel)> = vec![];
    for (q, b) in y {
        for (p, a) in x {
            if let Some((r, l)) = alg.mul(b, a) {
                out.push((*p * *q * r, l));
            }
        }
    }
    out.sort_by_key(|t| t.1);
    out
}

fn to_rational(p: Phase) -> BigRational {
    BigRational::new(p.numer().into(), p.denom().into())
}

/// Finds the phases `c(k,h)` making `ι` multiplicative and checks the
/// result exactly.
pub fn embedding(alg: &AnnularAlgebra, g: usize) -> Result<Embedding> {
    let setup = &alg.setup;
    let gr = &setup.group;
    let elements = stabilizer(setup, g);
    let twist = end_xg_twist(setup, g);
    let hs = &setup.h;
    let dot = |k: usize, h: usize| gr.prod(&[gr.inv(h), k, gr.conj(g, h)]);
    let label = |k: usize, h: usize| ALabel { h1: dot(k, h), g1: g, s: gr.inv(h), h2: k, g2: g };
    let hpos = |k: usize| hs.binary_search(&k).expect("H is closed");
    let epos = |h: usize| elements.binary_search(&h).expect("H^g is closed");
    let build = |c: &dyn Fn(usize, usize) -> Phase| Embedding {
        g,
        elements: elements.clone(),
        terms: elements.iter().map(|&h| hs.iter().map(|&k| (c(k, h), label(k, h))).collect()).collect(),
    };
    let verify = |e: &Embedding| -> bool {
        elements.iter().enumerate().all(|(i, &h)| {
            elements.iter().enumerate().all(|(j, &h2)| {
                let lhs = product_terms(alg, &e.terms[i], &e.terms[j]);
                let p = twist.get(h, h2);
                let mut rhs: Vec<(Phase, ALabel)> =
                    e.terms[epos(gr.mul(h, h2))].iter().map(|(q, l)| (p * *q, *l)).collect();
                rhs.sort_by_key(|t| t.1);
                lhs == rhs
            })
        })
    };
    let plain = build(&|_, _| Phase::ONE);
    if verify(&plain) {
        return Ok(plain);
    }
    // c(k,h) + c(k·h,h') − c(k,hh') ≡ ψ(h,h') − σ(k,h,h') over ℚ/ℤ.
    let nu = hs.len() * elements.len();
    let var = |k: usize, h: usize| hpos(k) * elements.len() + epos(h);
    let mut rows = vec![];
    let mut rhs = vec![];
    for &k in hs {
        for &h in &elements {
            for &h2 in &elements {
                let (sigma, l) = alg.mul(&label(k, h), &label(dot(k, h), h2)).expect("composable terms");
                if l != label(k, gr.mul(h, h2)) {
                    return Err(Error::Precondition(Failure::new("cutdown_embedding", vec![g, k, h, h2], "term labels do not close")));
                }
                let mut row = vec![0i64; nu];
                row[var(k, h)] += 1;
                row[var(dot(k, h), h2)] += 1;
                row[var(k, gr.mul(h, h2))] -= 1;
                rows.push(row);
                rhs.push(to_rational(twist.get(h, h2) * sigma.conj()));
            }
        }
    }
    let sol = solve_mod_one(&rows, &rhs).ok_or_else(|| {
        Error::Precondition(Failure::new("cutdown_embedding", vec![g], "no phases make the embedding multiplicative"))
    })?;
    let phase_of = |r: &BigRational| {
        Phase::new(r.numer().to_i64().expect("small numerator"), r.denom().to_i64().expect("small denominator"))
    };
    let e = build(&|k, h| phase_of(&sol[var(k, h)]));
    if verify(&e) {
        Ok(e)
    } else {
        Err(Error::Precondition(Failure::new("cutdown_embedding", vec![g], "solved phases fail the exact check")))
    }
}

/// A minimal projection of `End(X_g)` pushed into the annular algebra.
#[derive(Clone, Debug, Serialize)]
pub struct CornerProjection {
    pub g: usize,
    /// Index of the irreducible of `End(X_g)` it belongs to.
    pub index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CornerBlock {
    /// Position in [`CutDown::projections`] of `p1` (right) and `p2` (left).
    pub right: usize,
    pub left: usize,
    pub dimension: usize,
}

/// The corner `⊕ ψ(p2)·A·ψ(p1)` over minimal projections `p` of `End(X_g)`,
/// `g` running over double coset representatives.
#[derive(Clone, Debug, Serialize)]
pub struct CutDown {
    pub seed: u64,
    pub double_cosets: Vec<usize>,
    pub projections: Vec<CornerProjection>,
    pub blocks: Vec<CornerBlock>,
    pub dimension: usize,
    /// Irreducibles of the annular algebra that the corner sees.
    pub simple_count: usize,
    /// Irreducibles of the whole annular algebra.
    pub full_simple_count: usize,
    /// With `H` trivial the corner is all of the algebra; its structure
    /// constants in tube labels `(g1, s, g2)`.
    pub structure_constants: Option<Vec<StructureConstant>>,
}

fn rank_of(m: &nalgebra::DMatrix<Complex64>) -> Result<usize> {
    if (m * m - m).iter().any(|z| z.norm() > 1e-8) {
        return Err(Error::Numerical("image of a minimal projection is not idempotent".into()));
    }
    let t = m.trace();
    let r = t.re.round();
    if (t.re - r).abs() > 1e-6 || t.im.abs() > 1e-6 || r < 0.0 {
        return Err(Error::Numerical(format!("projection trace {t} is not a rank")));
    }
    Ok(r as usize)
}

/// Projects the annular algebra onto the corner cut out by one minimal
/// projection per irreducible of each `End(X_g)`, and counts dimensions and
/// irreducibles through the induced irreducibles of the whole algebra.
pub fn tube_cutdown(setup: &BHSetup, seed: u64) -> Result<CutDown> {
    let alg = AnnularAlgebra::new(setup.clone())?;
    let double_cosets = double_coset_reps(setup);
    let mut projections = vec![];
    let mut images = vec![];
    for &g in &double_cosets {
        let end = end_xg_algebra(setup, g)?;
        let iota = embedding(&alg, g)?;
        for (index, p) in minimal_projections(&end, seed)?.into_iter().enumerate() {
            projections.push(CornerProjection { g, index });
            images.push(iota.apply(&alg, &p));
        }
    }
    let irreps = induced_irreducibles(&alg, seed)?;
    let mut ranks = vec![vec![0usize; projections.len()]; irreps.len()];
    for (i, (_, pi)) in irreps.iter().enumerate() {
        for (j, img) in images.iter().enumerate() {
            ranks[i][j] = rank_of(&pi.evaluate(img))?;
        }
    }
    let mut blocks = vec![];
    for right in 0..projections.len() {
        for left in 0..projections.len() {
            let dimension = ranks.iter().map(|r| r[left] * r[right]).sum();
            blocks.push(CornerBlock { right, left, dimension });
        }
    }
    let dimension = blocks.iter().map(|b| b.dimension).sum();
    let simple_count = ranks.iter().filter(|r| r.iter().any(|&x| x > 0)).count();
    let full_simple_count = alg.simple_count().total;
    let structure_constants = (setup.h == [0]).then(|| {
        structure_constants(&alg)
            .into_iter()
            .map(|c| {
                let tube = |v: &[usize]| vec![v[1], v[2], v[4]];
                StructureConstant { left: tube(&c.left), right: tube(&c.right), scalar: c.scalar, result: tube(&c.result) }
            })
            .collect()
    });
    if irreps.len() != full_simple_count {
        return Err(Error::Numerical(format!(
            "{} induced irreducibles against {} from center dimensions",
            irreps.len(),
            full_simple_count
        )));
    }
    Ok(CutDown { seed, double_cosets, projections, blocks, dimension, simple_count, full_simple_count, structure_constants })
}

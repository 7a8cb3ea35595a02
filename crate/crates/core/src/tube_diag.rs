//! The tube algebra of `Vec(G, ω)` on the basis `a(g1, s, g2)`,
//! `g1·s = s·g2`, and its isomorphism onto `⊕_C M_C ⊗ ℂ[G_C]_{φ_C}`.

use crate::algebra::{inner, BlockAlgebra, BlockClass, BlockIso, BlockLabel, Element, Label, StarAlgebra};
use crate::cyclo::{Cyclo, CyclotomicField};
use crate::coho::{Convention, Pointed};
use crate::error::{Check, Error, Failure, Result};
use crate::phase::{is_normalized, Phase};
use crate::rep::TwistedGroupAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TubeLabel {
    pub g1: usize,
    pub s: usize,
    pub g2: usize,
}

impl Label for TubeLabel {
    fn parts(&self) -> Vec<usize> {
        vec![self.g1, self.s, self.g2]
    }
}

/// Image of a basis vector under `Φ`, with the matrix unit written by the
/// group elements that index it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub class: usize,
    pub scalar: Phase,
    /// `(g2, g1)`: the matrix unit `E_{g2,g1}`.
    pub unit: (usize, usize),
    pub element: usize,
}

#[derive(Clone, Debug)]
pub struct TubeAlgebra {
    data: Pointed,
    basis: Vec<TubeLabel>,
    blocks: BlockAlgebra,
}

impl TubeAlgebra {
    /// Requires a normalized cocycle.
    pub fn new(data: Pointed) -> Result<TubeAlgebra> {
        TubeAlgebra::with_convention(data, Convention::OppositeInverse)
    }

    pub fn with_convention(data: Pointed, convention: Convention) -> Result<TubeAlgebra> {
        if !is_normalized(&data.omega) {
            return Err(Error::Precondition(Failure::new(
                "normalized",
                vec![],
                "the tube algebra is built from a normalized cocycle",
            )));
        }
        let g = &data.group;
        let n = g.order();
        let basis = (0..n * n)
            .map(|i| {
                let (g1, s) = (i / n, i % n);
                TubeLabel { g1, s, g2: g.prod(&[g.inv(s), g1, s]) }
            })
            .collect();
        let classes = (0..data.classes.len())
            .map(|c| BlockClass {
                size: data.classes.classes[c].len(),
                centralizer: data.classes.centralizers[c].clone(),
                twist: data.twist(c, convention),
            })
            .collect();
        let blocks = BlockAlgebra::new(g.clone(), classes);
        Ok(TubeAlgebra { data, basis, blocks })
    }

    pub fn data(&self) -> &Pointed {
        &self.data
    }

    /// `a(g1, s, s⁻¹g1s)`.
    pub fn label(&self, g1: usize, s: usize) -> TubeLabel {
        self.basis[g1 * self.data.order() + s]
    }

    pub fn is_label(&self, l: &TubeLabel) -> bool {
        let n = self.data.order();
        l.g1 < n && l.s < n && l.g2 < n && self.label(l.g1, l.s) == *l
    }

    fn validate(&self, l: &TubeLabel) -> Result<()> {
        if self.is_label(l) {
            Ok(())
        } else {
            Err(Error::format(format!("{} violates g1·s = s·g2", l.tuple())))
        }
    }

    /// `a(g2,t,g3)·a(g1,s,g2) = ω(g1,s,t)·ω̄(s,g2,t)·ω(s,t,g3)·a(g1,st,g3)`.
    pub fn tube_mult(&self, b: &TubeLabel, a: &TubeLabel) -> Result<Option<(Phase, TubeLabel)>> {
        self.validate(b)?;
        self.validate(a)?;
        Ok(self.mul(b, a))
    }

    /// `a(g1,s,g2)^# = ω̄(g1,s,s⁻¹)·ω(s,g2,s⁻¹)·ω̄(s,s⁻¹,g1)·a(g2,s⁻¹,g1)`.
    pub fn tube_star(&self, a: &TubeLabel) -> Result<(Phase, TubeLabel)> {
        self.validate(a)?;
        Ok(self.star(a))
    }

    /// `Ω(a(g1,s,g2)) = δ_{g1=g2}·δ_{s=e}`.
    pub fn tube_trace(&self, a: &TubeLabel) -> Result<u8> {
        self.validate(a)?;
        Ok(self.trace(a) as u8)
    }

    /// `Ω(y^#·x)` with exact coefficients.
    pub fn tube_inner(&self, field: &CyclotomicField, x: &Element<TubeLabel>, y: &Element<TubeLabel>) -> Result<Cyclo> {
        for l in x.terms.keys().chain(y.terms.keys()) {
            self.validate(l)?;
        }
        inner(self, field, x, y)
    }

    pub fn phi_iso(&self, a: &TubeLabel) -> PhiImage {
        let (p, b) = self.phi(a);
        let cl = &self.data.classes.classes[b.class];
        PhiImage { class: b.class, scalar: p, unit: (cl[b.row], cl[b.col]), element: b.x }
    }

    /// Preimage of `E_{g2,g1} ⊗ [x]` as a phase times a basis vector.
    pub fn phi_iso_inverse(&self, class: usize, g2: usize, g1: usize, x: usize) -> Result<(Phase, TubeLabel)> {
        let cd = &self.data.classes;
        if class >= cd.len() || cd.class_of.get(g1) != Some(&class) || cd.class_of.get(g2) != Some(&class) {
            return Err(Error::format("matrix unit outside the class"));
        }
        if cd.centralizers[class].binary_search(&x).is_err() {
            return Err(Error::format("group element outside the centralizer"));
        }
        Ok(self.phi_inverse(&BlockLabel { class, row: cd.position(g2), col: cd.position(g1), x }))
    }

    /// Irreducible counts per class as center dimensions of the twisted
    /// centralizer algebras.
    pub fn simple_count(&self) -> SimpleCount {
        simple_count_of(&self.blocks)
    }
}

/// Per-class and total counts of irreducible representations.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SimpleCount {
    pub per_class: Vec<usize>,
    pub total: usize,
}

pub(crate) fn simple_count_of(blocks: &BlockAlgebra) -> SimpleCount {
    let per_class: Vec<usize> = blocks
        .classes
        .iter()
        .map(|c| {
            TwistedGroupAlgebra::new_unchecked(&blocks.group, &c.centralizer, c.twist.clone())
                .center_dimension()
        })
        .collect();
    let total = per_class.iter().sum();
    SimpleCount { per_class, total }
}

impl StarAlgebra for TubeAlgebra {
    type L = TubeLabel;

    fn basis(&self) -> &[TubeLabel] {
        &self.basis
    }

    fn index_of(&self, l: &TubeLabel) -> Option<usize> {
        self.is_label(l).then(|| l.g1 * self.data.order() + l.s)
    }

    fn mul(&self, b: &TubeLabel, a: &TubeLabel) -> Option<(Phase, TubeLabel)> {
        if b.g1 != a.g2 {
            return None;
        }
        let (g1, s, g2) = (a.g1, a.s, a.g2);
        let (t, g3) = (b.s, b.g2);
        let w = |x, y, z| self.data.w(x, y, z);
        let p = w(g1, s, t) * w(s, g2, t).conj() * w(s, t, g3);
        Some((p, TubeLabel { g1, s: self.data.group.mul(s, t), g2: g3 }))
    }

    fn star(&self, a: &TubeLabel) -> (Phase, TubeLabel) {
        let si = self.data.group.inv(a.s);
        let w = |x, y, z| self.data.w(x, y, z);
        let p = w(a.g1, a.s, si).conj() * w(a.s, a.g2, si) * w(a.s, si, a.g1).conj();
        (p, TubeLabel { g1: a.g2, s: si, g2: a.g1 })
    }

    fn trace(&self, a: &TubeLabel) -> bool {
        a.g1 == a.g2 && a.s == 0
    }

    fn source(&self, a: &TubeLabel) -> usize {
        a.g1
    }

    fn target(&self, a: &TubeLabel) -> usize {
        a.g2
    }
}

impl BlockIso for TubeAlgebra {
    fn blocks(&self) -> &BlockAlgebra {
        &self.blocks
    }

    fn phi(&self, a: &TubeLabel) -> (Phase, BlockLabel) {
        let (class, p, x) = phi_on_classes(&self.data, a.g1, a.s, a.g2);
        let pos = |g| self.data.classes.position(g);
        (p, BlockLabel { class, row: pos(a.g2), col: pos(a.g1), x })
    }

    fn phi_inverse(&self, b: &BlockLabel) -> (Phase, TubeLabel) {
        let cd = &self.data.classes;
        let g1 = cd.classes[b.class][b.col];
        let g2 = cd.classes[b.class][b.row];
        let (p, s) = phi_inverse_on_classes(&self.data, b.class, g1, g2, b.x);
        (p, TubeLabel { g1, s, g2 })
    }

    fn support_projection(&self, class: usize) -> TubeLabel {
        let g = self.data.classes.rep[class];
        TubeLabel { g1: g, s: 0, g2: g }
    }

    fn corner_slot(&self, class: usize) -> usize {
        self.data.classes.position(self.data.classes.rep[class])
    }
}

/// `Φ` on labels `X1`, `X2` of the class `C ∋ X1`: returns the class,
/// `γ̄_{g_C, w_{X1}, w_{X2}}(w_{X1}⁻¹ s w_{X2})` and `w_{X2}⁻¹ s⁻¹ w_{X1}`.
pub(crate) fn phi_on_classes(data: &Pointed, x1: usize, s: usize, x2: usize) -> (usize, Phase, usize) {
    let g = &data.group;
    let cd = &data.classes;
    let class = cd.class_of[x1];
    let gc = cd.rep[class];
    let (w1, w2) = (cd.transport[x1], cd.transport[x2]);
    let arg = g.prod(&[g.inv(w1), s, w2]);
    debug_assert_eq!(g.mul(arg, gc), g.mul(gc, arg), "transported element leaves G_C");
    let p = data.gamma_unchecked(gc, w1, w2, arg).conj();
    (class, p, g.prod(&[g.inv(w2), g.inv(s), w1]))
}

/// Returns `(γ_{g_C,w1,w2}(x⁻¹), s)` with `s = w1 x⁻¹ w2⁻¹`.
pub(crate) fn phi_inverse_on_classes(data: &Pointed, class: usize, x1: usize, x2: usize, x: usize) -> (Phase, usize) {
    let g = &data.group;
    let cd = &data.classes;
    let (w1, w2) = (cd.transport[x1], cd.transport[x2]);
    let s = g.prod(&[w1, g.inv(x), g.inv(w2)]);
    (data.gamma_unchecked(cd.rep[class], w1, w2, g.inv(x)), s)
}

/// Exhaustive check that `Φ` is a *-isomorphism.
pub fn verify_star_iso(data: &Pointed) -> Check {
    let t = TubeAlgebra::new(data.clone()).map_err(|e| {
        e.failure().cloned().unwrap_or_else(|| Failure::new("construction", vec![], e.to_string()))
    })?;
    crate::algebra::star_iso_check(&t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn semion_products() {
        let t = TubeAlgebra::new(fixtures::z2_semion()).unwrap();
        let a = t.label(1, 1);
        let (p, l) = t.tube_mult(&a, &a).unwrap().unwrap();
        assert_eq!((p, l), (Phase::new(1, 2), t.label(1, 0)));
        assert_eq!(t.tube_star(&a).unwrap(), (Phase::new(1, 2), a));
        assert_eq!(t.tube_mult(&t.label(0, 1), &a).unwrap(), None);
        assert!(t.tube_mult(&TubeLabel { g1: 1, s: 1, g2: 0 }, &a).is_err());
    }

    #[test]
    fn phi_of_corner_is_identity_unit() {
        for (_, p) in fixtures::all_pointed() {
            let t = TubeAlgebra::new(p).unwrap();
            for c in 0..t.data().classes.len() {
                let img = t.phi_iso(&t.support_projection(c));
                let gc = t.data().classes.rep[c];
                assert_eq!(img, PhiImage { class: c, scalar: Phase::ONE, unit: (gc, gc), element: 0 });
            }
        }
    }

    #[test]
    fn semion_phi_coefficient() {
        let t = TubeAlgebra::new(fixtures::z2_semion()).unwrap();
        let img = t.phi_iso(&t.label(1, 1));
        assert_eq!(img.scalar, t.data().gamma(1, 0, 0, 1).unwrap().conj());
        assert_eq!((img.unit, img.element), ((1, 1), 1));
        let (p, l) = t.phi_iso_inverse(1, 1, 1, 1).unwrap();
        assert_eq!(l, t.label(1, 1));
        assert!((p * img.scalar).is_one());
    }
}

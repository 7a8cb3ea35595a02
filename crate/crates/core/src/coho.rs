//! The 2-cocycles `φ_a` on centralizers, the transport cochains
//! `γ_{a,x,y}`, and gauge fixing for Bisch–Haagerup data.

use rand::Rng;

use crate::error::{Check, Error, Failure, Result};
use crate::grp::{conjugacy_data, is_subgroup, subgroup_closure, ClassData, GroupTable};
use crate::phase::{
    coboundary2, cocycle2_check, cocycle3_check, is_normalized, Cochain2, Cocycle2, Cocycle3, Phase,
};
use crate::verify::{Coverage, VerifyConfig};

/// A group with a validated 3-cocycle and its conjugacy data.
#[derive(Clone, Debug)]
pub struct Pointed {
    pub group: GroupTable,
    pub omega: Cocycle3,
    pub classes: ClassData,
}

impl Pointed {
    /// Validates the cocycle law exhaustively; refuses groups above
    /// `max_exhaustive`.
    pub fn new(group: GroupTable, omega: Cocycle3, max_exhaustive: usize) -> Result<Pointed> {
        if group.order() > max_exhaustive {
            return Err(Error::TooLarge { order: group.order(), limit: max_exhaustive });
        }
        if omega.size() != group.order() {
            return Err(Error::format("cocycle table does not match group order"));
        }
        cocycle3_check(&group, &omega).map_err(Error::Cocycle)?;
        let classes = conjugacy_data(&group);
        Ok(Pointed { group, omega, classes })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn w(&self, a: usize, b: usize, c: usize) -> Phase {
        self.omega.get(a, b, c)
    }

    /// `φ_a(g,h) = ω̄(a,g,h) ω(g,a,h) ω̄(g,h,a)` for `g, h ∈ G_a`.
    #[inline]
    pub fn phi_value(&self, a: usize, g: usize, h: usize) -> Phase {
        self.w(a, g, h).conj() * self.w(g, a, h) * self.w(g, h, a).conj()
    }

    pub fn phi_a(&self, a: usize) -> Cocycle2 {
        let ga = crate::grp::centralizer(&self.group, a);
        Cochain2::from_fn(self.order(), &ga, |g, h| self.phi_value(a, g, h))
    }

    /// `φ_C(s,t) = φ̄_{g_C}(t⁻¹, s⁻¹)`, the twist of the class-`c` block.
    pub fn phi_class(&self, c: usize) -> Cocycle2 {
        let a = self.classes.rep[c];
        let g = &self.group;
        Cochain2::from_fn(self.order(), &self.classes.centralizers[c], |s, t| {
            self.phi_value(a, g.inv(t), g.inv(s)).conj()
        })
    }

    /// The alternative twist `φ̄_{g_C}(s,t)` without the opposite-inverse flip.
    pub fn phi_class_conj(&self, c: usize) -> Cocycle2 {
        let a = self.classes.rep[c];
        Cochain2::from_fn(self.order(), &self.classes.centralizers[c], |s, t| {
            self.phi_value(a, s, t).conj()
        })
    }

    pub fn twist(&self, c: usize, convention: Convention) -> Cocycle2 {
        match convention {
            Convention::OppositeInverse => self.phi_class(c),
            Convention::Conjugate => self.phi_class_conj(c),
        }
    }

    /// `γ_{a,x,y}(g)`, the eight-factor transport cochain; `g` must commute
    /// with `a`.
    pub fn gamma(&self, a: usize, x: usize, y: usize, g: usize) -> Result<Phase> {
        let gr = &self.group;
        if gr.mul(g, a) != gr.mul(a, g) {
            return Err(Error::Precondition(Failure::new(
                "centralizer",
                vec![a, g],
                "gamma argument must commute with a",
            )));
        }
        Ok(self.gamma_unchecked(a, x, y, g))
    }

    pub fn gamma_unchecked(&self, a: usize, x: usize, y: usize, g: usize) -> Phase {
        let gr = &self.group;
        let xi = gr.inv(x);
        let yi = gr.inv(y);
        let gyi = gr.mul(g, yi);
        let xgyi = gr.mul(x, gyi);
        let ayi = gr.mul(a, yi);
        self.w(x, gr.mul(a, xi), xgyi).conj()
            * self.w(a, xi, xgyi).conj()
            * self.w(a, g, yi)
            * self.w(g, a, yi).conj()
            * self.w(gyi, y, ayi).conj()
            * self.w(g, yi, y)
            * self.w(x, gyi, gr.mul(y, ayi))
            * self.w(xi, x, gyi)
    }

    fn gamma_identity_at(&self, t: [usize; 6], phi: &Cochain2) -> Check {
        let [a, x, y, z, g, h] = t;
        let gr = &self.group;
        let xgy = gr.prod(&[x, g, gr.inv(y)]);
        let yhz = gr.prod(&[y, h, gr.inv(z)]);
        let lhs = self.w(gr.conj(x, a), xgy, yhz).conj()
            * self.w(xgy, gr.conj(y, a), yhz)
            * self.w(xgy, yhz, gr.conj(z, a)).conj();
        let rhs = self.gamma_unchecked(a, x, y, g)
            * self.gamma_unchecked(a, y, z, h)
            * self.gamma_unchecked(a, x, z, gr.mul(g, h)).conj()
            * phi.get(g, h);
        if lhs == rhs {
            Ok(())
        } else {
            Err(Failure::new("gamma_identity", t.to_vec(), format!("lhs {lhs}, rhs {rhs}")))
        }
    }

    /// The six-variable transport identity, exhaustive or sampled per `cfg`.
    pub fn gamma_identity_check(&self, cfg: &VerifyConfig) -> Check {
        let n = self.order();
        let phis: Vec<Cocycle2> = (0..n).map(|a| self.phi_a(a)).collect();
        match cfg.identity_coverage(n) {
            Coverage::Exhaustive => {
                for a in 0..n {
                    let ga = phis[a].elements();
                    for x in 0..n {
                        for y in 0..n {
                            for z in 0..n {
                                for &g in ga {
                                    for &h in ga {
                                        self.gamma_identity_at([a, x, y, z, g, h], &phis[a])?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Coverage::Sampled(k) => {
                let mut rng = cfg.rng();
                for _ in 0..k {
                    let a = rng.gen_range(0..n);
                    let ga = phis[a].elements();
                    let t = [
                        a,
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        ga[rng.gen_range(0..ga.len())],
                        ga[rng.gen_range(0..ga.len())],
                    ];
                    self.gamma_identity_at(t, &phis[a])?;
                }
            }
        }
        Ok(())
    }

    /// `γ_{a,x,x}(e) = 1` for all `a, x`.
    pub fn gamma_unit_check(&self) -> Check {
        let n = self.order();
        for a in 0..n {
            for x in 0..n {
                let v = self.gamma_unchecked(a, x, x, 0);
                if !v.is_one() {
                    return Err(Failure::new("gamma_unit", vec![a, x], format!("value {v}")));
                }
            }
        }
        Ok(())
    }

    /// `φ_{xax⁻¹}(xgx⁻¹, xhx⁻¹) = ∂¹(γ_{a,x,x})(g,h) · φ_a(g,h)` on `G_a`.
    pub fn coboundary_equivalence_check(&self) -> Check {
        let n = self.order();
        let gr = &self.group;
        for a in 0..n {
            let ga = crate::grp::centralizer(gr, a);
            for x in 0..n {
                let b = gr.conj(x, a);
                for &g in &ga {
                    for &h in &ga {
                        let d = self.gamma_unchecked(a, x, x, g)
                            * self.gamma_unchecked(a, x, x, h)
                            * self.gamma_unchecked(a, x, x, gr.mul(g, h)).conj();
                        let lhs = self.phi_value(b, gr.conj(x, g), gr.conj(x, h));
                        if lhs != d * self.phi_value(a, g, h) {
                            return Err(Failure::new("coboundary_equivalence", vec![a, x, g, h], ""));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Every `φ_a` passes the 2-cocycle law.
    pub fn phi_cocycle_check(&self) -> Check {
        (0..self.order()).try_for_each(|a| cocycle2_check(&self.group, &self.phi_a(a)))
    }
}

/// Which twist is used on the centralizer blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `φ_C(s,t) = φ̄_{g_C}(t⁻¹,s⁻¹)`.
    OppositeInverse,
    /// `φ_C(s,t) = φ̄_{g_C}(s,t)`.
    Conjugate,
}

pub fn phi_a(group: &GroupTable, omega: &Cocycle3, a: usize) -> Result<Cocycle2> {
    let p = Pointed::new(group.clone(), omega.clone(), usize::MAX)?;
    Ok(p.phi_a(a))
}

pub fn gamma(group: &GroupTable, omega: &Cocycle3, a: usize, x: usize, y: usize, g: usize) -> Result<Phase> {
    let p = Pointed::new(group.clone(), omega.clone(), usize::MAX)?;
    p.gamma(a, x, y, g)
}

/// Group, two subgroups and a cocycle satisfying the Bisch–Haagerup
/// requirements.
#[derive(Clone, Debug)]
pub struct BHSetup {
    pub group: GroupTable,
    pub h: Vec<usize>,
    pub k: Vec<usize>,
    pub omega: Cocycle3,
}

impl BHSetup {
    /// Checks subgroups, generation, normalization and triviality of `ω` on
    /// `H³` and `K³`.
    pub fn new(group: GroupTable, mut h: Vec<usize>, mut k: Vec<usize>, omega: Cocycle3) -> Result<BHSetup> {
        h.sort_unstable();
        h.dedup();
        k.sort_unstable();
        k.dedup();
        let pre = |check: &str, w: Vec<usize>, d: &str| Err(Error::Precondition(Failure::new(check, w, d)));
        if omega.size() != group.order() {
            return Err(Error::format("cocycle table does not match group order"));
        }
        if !is_subgroup(&group, &h) {
            return pre("subgroup_h", h.clone(), "H is not a subgroup");
        }
        if !is_subgroup(&group, &k) {
            return pre("subgroup_k", k.clone(), "K is not a subgroup");
        }
        let both: Vec<usize> = h.iter().chain(&k).copied().collect();
        let gen = subgroup_closure(&group, &both);
        if gen.len() != group.order() {
            let miss = (0..group.order()).find(|g| gen.binary_search(g).is_err()).unwrap_or(0);
            return pre("generation", vec![miss], "H and K do not generate G");
        }
        cocycle3_check(&group, &omega).map_err(Error::Cocycle)?;
        if !is_normalized(&omega) {
            let n = group.order();
            let w = (0..n * n * n)
                .map(|i| [i / (n * n), (i / n) % n, i % n])
                .find(|t| t.contains(&0) && !omega.get(t[0], t[1], t[2]).is_one())
                .unwrap_or([0; 3]);
            return pre("normalized", w.to_vec(), "omega is not normalized");
        }
        for (name, s) in [("omega_hk1_h", &h), ("omega_hk1_k", &k)] {
            for &a in s {
                for &b in s {
                    for &c in s {
                        if !omega.get(a, b, c).is_one() {
                            return pre(name, vec![a, b, c], "omega is not trivial on the subgroup");
                        }
                    }
                }
            }
        }
        Ok(BHSetup { group, h, k, omega })
    }

    pub fn in_h(&self, g: usize) -> bool {
        self.h.binary_search(&g).is_ok()
    }

    pub fn in_k(&self, g: usize) -> bool {
        self.k.binary_search(&g).is_ok()
    }

    pub fn with_omega(&self, omega: Cocycle3) -> Result<BHSetup> {
        BHSetup::new(self.group.clone(), self.h.clone(), self.k.clone(), omega)
    }
}

/// Output of [`gauge_fix_bh`].
#[derive(Clone, Debug)]
pub struct GaugeFix {
    pub omega: Cocycle3,
    pub phi: Cochain2,
    /// Chosen representatives of the `^`-orbits in `A_H ∪ A_K`.
    pub a_reps: Vec<(usize, usize)>,
    /// Chosen representatives of the `ˇ`-orbits in `V_H ∪ V_K`.
    pub v_reps: Vec<(usize, usize)>,
}

/// Replaces `ω` by a cohomologous cocycle satisfying the relations (GL).
pub fn gauge_fix_bh(setup: &BHSetup) -> Result<GaugeFix> {
    let g = &setup.group;
    let n = g.order();
    let (inh, ink) = (|x| setup.in_h(x), |x| setup.in_k(x));
    let a_h = |(x, l): (usize, usize)| !inh(x) && inh(l) && l != 0;
    let a_k = |(x, l): (usize, usize)| !ink(x) && ink(l) && l != 0;
    let v_h = |(l, x): (usize, usize)| inh(l) && l != 0 && !inh(x);
    let v_k = |(l, x): (usize, usize)| ink(l) && l != 0 && !ink(x);
    let hat = |(x, y): (usize, usize)| (g.mul(x, y), g.inv(y));
    let check = |(x, y): (usize, usize)| (g.inv(x), g.mul(x, y));
    let special = |p: (usize, usize)| (a_h(p) && v_k(p)) || (a_k(p) && v_h(p));

    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let choose = |p: (usize, usize), q: (usize, usize), other: (usize, usize)| -> Result<(usize, usize)> {
        match (special(p), special(q)) {
            (true, true) => Err(Error::Precondition(Failure::new(
                "orbit",
                vec![p.0, p.1],
                "orbit has two special points",
            ))),
            (true, false) => Ok(other),
            (false, true) => Ok(p),
            (false, false) => Ok(p.min(q)),
        }
    };

    let mut a_reps = vec![];
    for p in pairs().filter(|&p| a_h(p) || a_k(p)) {
        let q = hat(p);
        let rep = choose(p, q, q)?;
        if rep == p {
            a_reps.push(p);
        }
    }
    let mut v_reps = vec![];
    for p in pairs().filter(|&p| v_h(p) || v_k(p)) {
        let q = check(p);
        let rep = choose(p, q, q)?;
        if rep == p {
            v_reps.push(p);
        }
    }
    if let Some(&(x, y)) = a_reps.iter().find(|p| v_reps.contains(p)) {
        return Err(Error::Precondition(Failure::new(
            "a_v_disjoint",
            vec![x, y],
            "representative sets intersect",
        )));
    }

    let mut table = vec![Phase::ONE; n * n];
    for &(x, l) in &a_reps {
        table[x * n + l] = setup.omega.get(x, l, g.inv(l));
    }
    for &(l, x) in &v_reps {
        table[l * n + x] = setup.omega.get(g.inv(l), l, x);
    }
    let phi = Cochain2::on_group(n, |x, y| table[x * n + y]);
    let omega = coboundary2(g, &phi).times(&setup.omega);
    Ok(GaugeFix { omega, phi, a_reps, v_reps })
}

/// Relations (GL)(i)–(iv) for every `g1, g2 ∈ G` and `l ∈ H ∪ K`.
pub fn gl_relations_check(group: &GroupTable, h: &[usize], k: &[usize], omega: &Cocycle3) -> Check {
    let n = group.order();
    let mut ls: Vec<usize> = h.iter().chain(k).copied().collect();
    ls.sort_unstable();
    ls.dedup();
    let w = |a, b, c| omega.get(a, b, c);
    for &l in &ls {
        let li = group.inv(l);
        for g1 in 0..n {
            if !w(g1, l, li).is_one() {
                return Err(Failure::new("GL(i)", vec![g1, l], ""));
            }
            for g2 in 0..n {
                if w(g1, g2, l) != w(g1, group.mul(g2, l), li).conj() {
                    return Err(Failure::new("GL(ii)", vec![g1, g2, l], ""));
                }
                if w(g1, l, g2) != w(group.mul(g1, l), li, group.mul(l, g2)).conj() {
                    return Err(Failure::new("GL(iii)", vec![g1, g2, l], ""));
                }
                if w(l, g1, g2) != w(li, group.mul(l, g1), g2).conj() {
                    return Err(Failure::new("GL(iv)", vec![g1, g2, l], ""));
                }
            }
        }
    }
    Ok(())
}

/// Triviality of `ω` on `H³` and `K³`.
pub fn omega_hk1_check(h: &[usize], k: &[usize], omega: &Cocycle3) -> Check {
    for s in [h, k] {
        for &a in s {
            for &b in s {
                for &c in s {
                    if !omega.get(a, b, c).is_one() {
                        return Err(Failure::new("omega_hk1", vec![a, b, c], ""));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::standard_cyclic_cocycle;

    #[test]
    fn phi_examples() {
        let z2 = Pointed::new(GroupTable::cyclic(2), standard_cyclic_cocycle(2, 1), 24).unwrap();
        assert_eq!(z2.phi_a(1).get(1, 1), Phase::new(1, 2));
        assert_eq!(z2.phi_class(1).get(1, 1), Phase::new(1, 2));
        let z4 = Pointed::new(GroupTable::cyclic(4), standard_cyclic_cocycle(4, 1), 24).unwrap();
        assert_eq!(z4.phi_a(1).get(3, 3), Phase::new(3, 4));
    }

    #[test]
    fn gamma_requires_centralizer() {
        let p = crate::fixtures::s3_trivial();
        let t = crate::fixtures::s3_element(&[1, 0, 2]);
        let c = crate::fixtures::s3_element(&[1, 2, 0]);
        assert!(p.gamma(t, 0, 0, c).is_err());
        assert!(p.gamma(t, 0, 0, t).is_ok());
    }

    #[test]
    fn semion_gamma_by_factors() {
        let p = Pointed::new(GroupTable::cyclic(2), standard_cyclic_cocycle(2, 1), 24).unwrap();
        // a=1, x=y=0, g=1: only the factors ω(a,g,y⁻¹)=ω(1,1,0) etc. survive.
        let w = |a: usize, b: usize, c: usize| Phase::new((a * b * c) as i64, 2);
        let expect = w(0, 1, 1).conj()
            * w(1, 0, 1).conj()
            * w(1, 1, 0)
            * w(1, 1, 0).conj()
            * w(1, 0, 1).conj()
            * w(1, 0, 0)
            * w(0, 1, 1)
            * w(0, 0, 1);
        assert_eq!(p.gamma(1, 0, 0, 1).unwrap(), expect);
    }

    #[test]
    fn bh_setup_rejects_inflated_semion() {
        let s3 = crate::fixtures::s3_inflated_semion();
        let t = crate::fixtures::s3_element(&[1, 0, 2]);
        let c = crate::fixtures::s3_element(&[1, 2, 0]);
        let h = subgroup_closure(&s3.group, &[t]);
        let k = subgroup_closure(&s3.group, &[c]);
        let err = BHSetup::new(s3.group.clone(), h, k, s3.omega.clone()).unwrap_err();
        assert_eq!(err.failure().unwrap().check, "omega_hk1_h");
        assert_eq!(err.failure().unwrap().witness, vec![t, t, t]);
    }

    #[test]
    fn gauge_fix_trivial_is_trivial() {
        let s = crate::fixtures::bh_s3();
        let fix = gauge_fix_bh(&s).unwrap();
        assert!(fix.omega.is_trivial());
        assert!(fix.phi.is_trivial());
    }
}

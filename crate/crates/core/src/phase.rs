//! Exact circle-group values and dense cochain tables.
//!
//! A [`Phase`] `q` stands for `exp(2πiq)`, so the group law is written
//! multiplicatively even though it adds the underlying rationals.

use std::fmt;
use std::ops::{Mul, MulAssign};
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Check, Error, Failure, Result};
use crate::grp::GroupTable;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Phase {
    pub const ONE: Phase = Phase { num: 0, den: 1 };

    /// The phase `num/den mod 1`.
    ///
    /// # Panics
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Phase {
        assert!(den != 0, "phase with zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        Phase { num: num.rem_euclid(den), den }
    }

    /// `exp(2πi k/n)`, the `k`-th power of the primitive `n`-th root.
    pub fn root(k: i64, n: i64) -> Phase {
        Phase::new(k, n)
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn inv(self) -> Phase {
        Phase::new(-self.num, self.den)
    }

    /// Complex conjugate; equal to the inverse on the circle.
    pub fn conj(self) -> Phase {
        self.inv()
    }

    pub fn pow(self, k: i64) -> Phase {
        let num = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        Phase::new(num as i64, self.den)
    }

    pub fn to_complex(self) -> Complex64 {
        if self.num == 0 {
            return Complex64::new(1.0, 0.0);
        }
        // Hit the axis points exactly so that quarter-turn phases stay exact.
        match (self.num, self.den) {
            (1, 2) => return Complex64::new(-1.0, 0.0),
            (1, 4) => return Complex64::new(0.0, 1.0),
            (3, 4) => return Complex64::new(0.0, -1.0),
            _ => {}
        }
        let t = std::f64::consts::TAU * self.num as f64 / self.den as f64;
        Complex64::new(t.cos(), t.sin())
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ONE
    }
}

impl Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        let l = self.den.lcm(&rhs.den);
        Phase::new(self.num * (l / self.den) + rhs.num * (l / rhs.den), l)
    }
}

impl MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

impl std::iter::Product for Phase {
    fn product<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ONE, |a, b| a * b)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({}/{})", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Phase> {
        let bad = || Error::format(format!("not a phase: {s:?}"));
        let (a, b) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = a.parse().map_err(|_| bad())?;
        let den: i64 = b.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Phase::new(num, den))
    }
}

impl serde::Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(phases: impl IntoIterator<Item = &'a Phase>) -> i64 {
    phases.into_iter().fold(1, |acc, p| acc.lcm(&p.den))
}

/// Dense table `ω(g1,g2,g3)`, row-major over the three arguments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocycle3 {
    n: usize,
    values: Vec<Phase>,
}

impl Cocycle3 {
    pub fn from_values(n: usize, values: Vec<Phase>) -> Result<Cocycle3> {
        if values.len() != n * n * n {
            return Err(Error::format(format!(
                "cocycle table has {} entries, expected {}",
                values.len(),
                n * n * n
            )));
        }
        Ok(Cocycle3 { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Phase) -> Cocycle3 {
        let mut values = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    values.push(f(a, b, c));
                }
            }
        }
        Cocycle3 { n, values }
    }

    pub fn trivial(n: usize) -> Cocycle3 {
        Cocycle3 { n, values: vec![Phase::ONE; n * n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> Phase {
        self.values[(a * self.n + b) * self.n + c]
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    pub fn modulus(&self) -> i64 {
        common_denominator(&self.values)
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Phase::is_one)
    }

    /// Pointwise product.
    pub fn times(&self, other: &Cocycle3) -> Cocycle3 {
        assert_eq!(self.n, other.n);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a * *b).collect();
        Cocycle3 { n: self.n, values }
    }

    pub fn conj(&self) -> Cocycle3 {
        Cocycle3 { n: self.n, values: self.values.iter().map(|p| p.conj()).collect() }
    }
}

/// A Phase-valued function on `D × D` for a subset `D` of the group
/// (the whole group for gauge cochains, a centralizer for `φ_a`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain2 {
    elements: Vec<usize>,
    slot: Vec<Option<usize>>,
    values: Vec<Phase>,
}

/// 2-cocycles are stored exactly like 2-cochains.
pub type Cocycle2 = Cochain2;

impl Cochain2 {
    pub fn from_fn(
        group_order: usize,
        elements: &[usize],
        mut f: impl FnMut(usize, usize) -> Phase,
    ) -> Cochain2 {
        let mut slot = vec![None; group_order];
        for (i, &g) in elements.iter().enumerate() {
            slot[g] = Some(i);
        }
        let mut values = Vec::with_capacity(elements.len() * elements.len());
        for &g in elements {
            for &h in elements {
                values.push(f(g, h));
            }
        }
        Cochain2 { elements: elements.to_vec(), slot, values }
    }

    pub fn on_group(n: usize, f: impl FnMut(usize, usize) -> Phase) -> Cochain2 {
        let all: Vec<usize> = (0..n).collect();
        Cochain2::from_fn(n, &all, f)
    }

    pub fn trivial(n: usize) -> Cochain2 {
        Cochain2::on_group(n, |_, _| Phase::ONE)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.slot.get(g).is_some_and(Option::is_some)
    }

    /// Value at `(g, h)`, both given as group indices.
    ///
    /// # Panics
    /// Panics if either argument lies outside the domain.
    #[inline]
    pub fn get(&self, g: usize, h: usize) -> Phase {
        let i = self.slot[g].expect("argument outside cochain domain");
        let j = self.slot[h].expect("argument outside cochain domain");
        self.values[i * self.elements.len() + j]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Phase::is_one)
    }

    pub fn modulus(&self) -> i64 {
        common_denominator(&self.values)
    }
}

/// A Phase-valued function on the group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain1 {
    values: Vec<Phase>,
}

impl Cochain1 {
    pub fn new(values: Vec<Phase>) -> Cochain1 {
        Cochain1 { values }
    }

    #[inline]
    pub fn get(&self, g: usize) -> Phase {
        self.values[g]
    }
}

fn shape_check(g: &GroupTable, n: usize) -> Result<()> {
    if g.order() != n {
        return Err(Error::format(format!(
            "cochain is on a group of order {n}, expected {}",
            g.order()
        )));
    }
    Ok(())
}

/// Exhaustive check of the 3-cocycle law over all quadruples.
pub fn cocycle3_check(g: &GroupTable, w: &Cocycle3) -> Check {
    if g.order() != w.size() {
        return Err(Failure::new("cocycle3", vec![], "table size does not match group order"));
    }
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for c in 0..n {
                let bc = g.mul(b, c);
                let wabc = w.get(a, b, c);
                for d in 0..n {
                    let lhs = wabc * w.get(a, bc, d) * w.get(b, c, d);
                    let rhs = w.get(ab, c, d) * w.get(a, b, g.mul(c, d));
                    if lhs != rhs {
                        return Err(Failure::new(
                            "cocycle3",
                            vec![a, b, c, d],
                            format!("lhs {lhs}, rhs {rhs}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive check of the 2-cocycle law on the cochain's domain, which must
/// be closed under multiplication.
pub fn cocycle2_check(g: &GroupTable, phi: &Cochain2) -> Check {
    let d = phi.elements();
    for &a in d {
        for &b in d {
            let ab = g.mul(a, b);
            if !phi.contains(ab) {
                return Err(Failure::new("cocycle2", vec![a, b], "domain not closed"));
            }
            for &c in d {
                let bc = g.mul(b, c);
                let v = phi.get(b, c) * phi.get(ab, c).inv() * phi.get(a, bc) * phi.get(a, b).inv();
                if !v.is_one() {
                    return Err(Failure::new("cocycle2", vec![a, b, c], format!("defect {v}")));
                }
            }
        }
    }
    Ok(())
}

/// `∂¹γ(g,h) = γ(g)γ(h)γ(gh)⁻¹`.
pub fn coboundary1(g: &GroupTable, gamma: &Cochain1) -> Cochain2 {
    Cochain2::on_group(g.order(), |a, b| gamma.get(a) * gamma.get(b) * gamma.get(g.mul(a, b)).inv())
}

/// `∂²φ(g1,g2,g3) = φ(g2,g3)φ(g1g2,g3)⁻¹φ(g1,g2g3)φ(g1,g2)⁻¹`.
pub fn coboundary2(g: &GroupTable, phi: &Cochain2) -> Cocycle3 {
    Cocycle3::from_fn(g.order(), |a, b, c| {
        phi.get(b, c) * phi.get(g.mul(a, b), c).inv() * phi.get(a, g.mul(b, c)) * phi.get(a, b).inv()
    })
}

pub fn is_normalized(w: &Cocycle3) -> bool {
    let n = w.size();
    (0..n).all(|a| {
        (0..n).all(|b| w.get(0, a, b).is_one() && w.get(a, 0, b).is_one() && w.get(a, b, 0).is_one())
    })
}

/// Returns `(∂²φ)·ω` with `φ(g1,g2) = ω(g1,e,e)·ω̄(e,e,g2)`, together with `φ`.
pub fn normalize3_with_gauge(g: &GroupTable, w: &Cocycle3) -> Result<(Cocycle3, Cochain2)> {
    shape_check(g, w.size())?;
    cocycle3_check(g, w).map_err(Error::Cocycle)?;
    let phi = Cochain2::on_group(g.order(), |a, b| w.get(a, 0, 0) * w.get(0, 0, b).conj());
    Ok((coboundary2(g, &phi).times(w), phi))
}

pub fn normalize3(g: &GroupTable, w: &Cocycle3) -> Result<Cocycle3> {
    normalize3_with_gauge(g, w).map(|(w, _)| w)
}

/// The phase `k·a·⌊(b+c)/n⌋/n` on ℤ/n; `k` picks the cohomology class.
pub fn standard_cyclic_cocycle(n: usize, k: i64) -> Cocycle3 {
    Cocycle3::from_fn(n, |a, b, c| {
        let carry = ((b + c) / n) as i64;
        Phase::new(k * a as i64 * carry, n as i64)
    })
}

/// `ω((a1,a2),(b1,b2),(c1,c2)) = (-1)^{a1·b2·c2}` on ℤ/2×ℤ/2, index `2i + j`.
pub fn product_type_cocycle() -> Cocycle3 {
    Cocycle3::from_fn(4, |a, b, c| Phase::new(((a >> 1) * (b & 1) * (c & 1)) as i64, 2))
}

/// Pullback of `ω` along a homomorphism `f: G → Q`, given as an index map.
pub fn inflate_cocycle(g: &GroupTable, q: &GroupTable, w: &Cocycle3, f: &[usize]) -> Result<Cocycle3> {
    shape_check(q, w.size())?;
    if f.len() != g.order() || f.iter().any(|&x| x >= q.order()) {
        return Err(Error::format("inflation map has the wrong shape"));
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if f[g.mul(a, b)] != q.mul(f[a], f[b]) {
                return Err(Error::Precondition(Failure::new(
                    "homomorphism",
                    vec![a, b],
                    "inflation map is not multiplicative",
                )));
            }
        }
    }
    let mut hit = vec![false; q.order()];
    f.iter().for_each(|&x| hit[x] = true);
    if let Some(miss) = hit.iter().position(|h| !h) {
        return Err(Error::Precondition(Failure::new(
            "surjective",
            vec![miss],
            "inflation map is not onto",
        )));
    }
    Ok(Cocycle3::from_fn(g.order(), |a, b, c| w.get(f[a], f[b], f[c])))
}

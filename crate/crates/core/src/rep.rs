//! Twisted group algebras `ℂ[G]_φ`, finite-dimensional representations of
//! the labelled algebras, and their decomposition, induction along `Φ⁻¹`,
//! restriction to a class corner and support decomposition.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{associativity_check, BlockIso, BlockLabel, Label, StarAlgebra};
use crate::cyclo::CyclotomicField;
use crate::error::{Check, Error, Failure, Result};
use crate::grp::{is_subgroup, GroupTable};
use crate::phase::{Cochain2, Phase};
use crate::verify::{Coverage, VerifyConfig};

pub type CMatrix = DMatrix<Complex64>;

/// Tolerance for multiplicativity, *-compatibility, eigenvalue clustering
/// and character comparison.
pub const TOLERANCE: f64 = 1e-9;

/// Eigenvalue gaps between [`TOLERANCE`] and this (relative) are treated as
/// ambiguous and trigger a retry with a fresh random element.
const AMBIGUOUS_GAP: f64 = 1e-6;
const MAX_ATTEMPTS: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem(pub usize);

impl Label for GroupElem {
    fn parts(&self) -> Vec<usize> {
        vec![self.0]
    }
}

/// `ℂ[S]_φ` for a subgroup `S`, with `[g][h] = φ(g,h)[gh]`.
#[derive(Clone, Debug)]
pub struct TwistedGroupAlgebra {
    group: GroupTable,
    basis: Vec<GroupElem>,
    twist: Cochain2,
}

impl TwistedGroupAlgebra {
    /// Checks that `elements` form a subgroup carrying the twist, that the
    /// product is associative and that `[e]` is a unit.
    pub fn new(group: &GroupTable, elements: &[usize], twist: Cochain2) -> Result<TwistedGroupAlgebra> {
        let mut el = elements.to_vec();
        el.sort_unstable();
        el.dedup();
        if !is_subgroup(group, &el) {
            return Err(Error::Precondition(Failure::new("subgroup", el, "elements are not a subgroup")));
        }
        if twist.elements().len() != el.len() || !el.iter().all(|&g| twist.contains(g)) {
            return Err(Error::format("twist domain differs from the element list"));
        }
        let alg = TwistedGroupAlgebra::new_unchecked(group, &el, twist);
        associativity_check(&alg, Coverage::Exhaustive, &VerifyConfig::default()).map_err(Error::Cocycle)?;
        if let Some(&g) = el.iter().find(|&&g| !alg.twist.get(0, g).is_one() || !alg.twist.get(g, 0).is_one()) {
            return Err(Error::Cocycle(Failure::new("normalized", vec![0, g], "[e] is not a unit")));
        }
        Ok(alg)
    }

    /// No validation; `elements` must be sorted.
    pub fn new_unchecked(group: &GroupTable, elements: &[usize], twist: Cochain2) -> TwistedGroupAlgebra {
        TwistedGroupAlgebra {
            group: group.clone(),
            basis: elements.iter().map(|&g| GroupElem(g)).collect(),
            twist,
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn elements(&self) -> Vec<usize> {
        self.basis.iter().map(|g| g.0).collect()
    }

    pub fn twist(&self) -> &Cochain2 {
        &self.twist
    }

    /// Dimension of the center, by exact elimination over `ℚ(ζ_N)`.
    ///
    /// `z = Σ c_g [g]` is central iff `[h]z = z[h]` for all `h`; the
    /// coefficient of `[m]` in `[h]z − z[h]` is
    /// `Σ_g c_g (φ(h,g)δ_{hg=m} − φ(g,h)δ_{gh=m})`.
    pub fn center_dimension(&self) -> usize {
        let el = self.elements();
        let n = el.len();
        let field = CyclotomicField::for_phases(
            el.iter().flat_map(|&g| el.iter().map(move |&h| (g, h))).map(|(g, h)| self.twist.get(g, h)).collect::<Vec<_>>().iter(),
        );
        let pos = |g: usize| el.binary_search(&g).expect("closed under products");
        let mut rows = vec![];
        for &h in &el {
            let mut block = vec![vec![field.zero(); n]; n];
            for (j, &g) in el.iter().enumerate() {
                let up = field.from_phase(self.twist.get(h, g)).expect("field holds the twist");
                let down = field.from_phase(self.twist.get(g, h)).expect("field holds the twist");
                let r1 = pos(self.group.mul(h, g));
                block[r1][j] = field.add(&block[r1][j], &up);
                let r2 = pos(self.group.mul(g, h));
                block[r2][j] = field.sub(&block[r2][j], &down);
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !field.is_zero(c))));
        }
        n - field.rank(&rows)
    }
}

impl StarAlgebra for TwistedGroupAlgebra {
    type L = GroupElem;

    fn basis(&self) -> &[GroupElem] {
        &self.basis
    }

    fn index_of(&self, l: &GroupElem) -> Option<usize> {
        self.basis.binary_search(l).ok()
    }

    fn mul(&self, b: &GroupElem, a: &GroupElem) -> Option<(Phase, GroupElem)> {
        Some((self.twist.get(b.0, a.0), GroupElem(self.group.mul(b.0, a.0))))
    }

    fn star(&self, a: &GroupElem) -> (Phase, GroupElem) {
        let ai = self.group.inv(a.0);
        (self.twist.get(a.0, ai).conj(), GroupElem(ai))
    }

    fn trace(&self, a: &GroupElem) -> bool {
        a.0 == 0
    }

    fn source(&self, _: &GroupElem) -> usize {
        0
    }

    fn target(&self, _: &GroupElem) -> usize {
        0
    }
}

/// `twisted_algebra(elements, φ)`: the validated constructor.
pub fn twisted_algebra(group: &GroupTable, elements: &[usize], twist: Cochain2) -> Result<TwistedGroupAlgebra> {
    TwistedGroupAlgebra::new(group, elements, twist)
}

/// Matrices for every basis label, in basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub dimension: usize,
    pub matrices: Vec<CMatrix>,
}

fn c(p: Phase) -> Complex64 {
    p.to_complex()
}

impl Representation {
    pub fn zero(basis_len: usize) -> Representation {
        Representation { dimension: 0, matrices: vec![CMatrix::zeros(0, 0); basis_len] }
    }

    pub fn from_fn<A: StarAlgebra>(alg: &A, dimension: usize, f: impl Fn(&A::L) -> CMatrix) -> Representation {
        Representation { dimension, matrices: alg.basis().iter().map(f).collect() }
    }

    pub fn get<A: StarAlgebra>(&self, alg: &A, l: &A::L) -> Option<&CMatrix> {
        alg.index_of(l).map(|i| &self.matrices[i])
    }

    /// `π(Σ c_i b_i)` for coefficients indexed by basis position.
    pub fn evaluate(&self, coeffs: &[(usize, Complex64)]) -> CMatrix {
        let mut m = CMatrix::zeros(self.dimension, self.dimension);
        for &(i, z) in coeffs {
            m += &self.matrices[i] * z;
        }
        m
    }

    /// `tr π(b)` for every basis label.
    pub fn character(&self) -> Vec<Complex64> {
        self.matrices.iter().map(|m| m.trace()).collect()
    }

    /// `V†·π·V` for an isometry `V`.
    pub fn compress(&self, v: &CMatrix) -> Representation {
        let vt = v.adjoint();
        Representation { dimension: v.ncols(), matrices: self.matrices.iter().map(|m| &vt * m * v).collect() }
    }
}

/// Block-diagonal sum.
pub fn direct_sum(a: &Representation, b: &Representation) -> Representation {
    let d = a.dimension + b.dimension;
    let matrices = a
        .matrices
        .iter()
        .zip(&b.matrices)
        .map(|(x, y)| {
            let mut m = CMatrix::zeros(d, d);
            m.view_mut((0, 0), (a.dimension, a.dimension)).copy_from(x);
            m.view_mut((a.dimension, a.dimension), (b.dimension, b.dimension)).copy_from(y);
            m
        })
        .collect();
    Representation { dimension: d, matrices }
}

fn close(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
    a.shape() == b.shape() && (a - b).iter().all(|z| z.norm() <= tol)
}

/// `π(b)π(a) = π(b·a)` and `π(a^#) = π(a)†` on all basis labels, to `tol`.
pub fn representation_check<A: StarAlgebra>(alg: &A, rep: &Representation, tol: f64) -> Check {
    let basis = alg.basis();
    if rep.matrices.len() != basis.len() {
        return Err(Failure::new("shape", vec![rep.matrices.len(), basis.len()], "one matrix per basis label"));
    }
    if let Some(i) = rep.matrices.iter().position(|m| m.shape() != (rep.dimension, rep.dimension)) {
        return Err(Failure::new("shape", basis[i].parts(), "matrix size differs from the dimension"));
    }
    let zero = CMatrix::zeros(rep.dimension, rep.dimension);
    for (i, b) in basis.iter().enumerate() {
        for (j, a) in basis.iter().enumerate() {
            let lhs = &rep.matrices[i] * &rep.matrices[j];
            let rhs = match alg.mul(b, a) {
                Some((p, l)) => rep.get(alg, &l).expect("closed basis") * c(p),
                None => zero.clone(),
            };
            if !close(&lhs, &rhs, tol) {
                let mut w = b.parts();
                w.extend(a.parts());
                return Err(Failure::new("multiplicative", w, ""));
            }
        }
        let (p, s) = alg.star(b);
        let lhs = rep.get(alg, &s).expect("closed basis") * c(p);
        if !close(&lhs, &rep.matrices[i].adjoint(), tol) {
            return Err(Failure::new("star_compatible", b.parts(), ""));
        }
    }
    Ok(())
}

pub fn characters_equal(a: &Representation, b: &Representation, tol: f64) -> bool {
    a.matrices.len() == b.matrices.len()
        && a.character().iter().zip(b.character()).all(|(x, y)| (x - y).norm() <= tol)
}

/// Dense left regular representation on the trace-orthonormal basis.
pub fn regular_representation<A: StarAlgebra>(alg: &A) -> Representation {
    let n = alg.dimension();
    Representation::from_fn(alg, n, |b| {
        let mut m = CMatrix::zeros(n, n);
        for (j, a) in alg.basis().iter().enumerate() {
            if let Some((p, l)) = alg.mul(b, a) {
                m[(alg.index_of(&l).expect("closed basis"), j)] = c(p);
            }
        }
        m
    })
}

/// What the decomposition needs from a representation.
trait Action {
    fn dim(&self) -> usize;
    /// `Σ_b π(b) M π(b)†`.
    fn twirl(&self, m: &CMatrix) -> CMatrix;
    /// `V† π(b) V` for every basis label.
    fn compress(&self, v: &CMatrix) -> Representation;
}

impl Action for Representation {
    fn dim(&self) -> usize {
        self.dimension
    }

    fn twirl(&self, m: &CMatrix) -> CMatrix {
        let mut t = CMatrix::zeros(self.dimension, self.dimension);
        for p in &self.matrices {
            t += p * m * p.adjoint();
        }
        t
    }

    fn compress(&self, v: &CMatrix) -> Representation {
        Representation::compress(self, v)
    }
}

/// Left regular representation stored as monomial maps `a ↦ (phase, b·a)`.
struct SparseRegular {
    dim: usize,
    maps: Vec<Vec<(usize, usize, Complex64)>>,
}

impl SparseRegular {
    fn new<A: StarAlgebra>(alg: &A) -> SparseRegular {
        let mut by_target: std::collections::HashMap<usize, Vec<usize>> = Default::default();
        for (j, a) in alg.basis().iter().enumerate() {
            by_target.entry(alg.target(a)).or_default().push(j);
        }
        let basis = alg.basis();
        let maps = basis
            .iter()
            .map(|b| {
                by_target.get(&alg.source(b)).map_or(vec![], |js| {
                    js.iter()
                        .filter_map(|&j| {
                            alg.mul(b, &basis[j]).map(|(p, l)| (j, alg.index_of(&l).expect("closed basis"), c(p)))
                        })
                        .collect()
                })
            })
            .collect();
        SparseRegular { dim: alg.dimension(), maps }
    }
}

impl Action for SparseRegular {
    fn dim(&self) -> usize {
        self.dim
    }

    fn twirl(&self, m: &CMatrix) -> CMatrix {
        let mut t = CMatrix::zeros(self.dim, self.dim);
        for map in &self.maps {
            for &(a, i, p) in map {
                for &(a2, j, q) in map {
                    t[(i, j)] += p * m[(a, a2)] * q.conj();
                }
            }
        }
        t
    }

    fn compress(&self, v: &CMatrix) -> Representation {
        let k = v.ncols();
        let matrices = self
            .maps
            .iter()
            .map(|map| {
                let mut out = CMatrix::zeros(k, k);
                for &(a, i, p) in map {
                    for r in 0..k {
                        let left = v[(i, r)].conj() * p;
                        for s in 0..k {
                            out[(r, s)] += left * v[(a, s)];
                        }
                    }
                }
                out
            })
            .collect();
        Representation { dimension: k, matrices }
    }
}

/// One isomorphism class of irreducible subrepresentations.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub dimension: usize,
    pub multiplicity: usize,
    /// The irreducible representation on the first copy.
    pub representation: Representation,
    /// Isometries onto each copy inside the decomposed space.
    pub copies: Vec<CMatrix>,
}

impl Irrep {
    pub fn character(&self) -> Vec<Complex64> {
        self.representation.character()
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub seed: u64,
    /// Random elements drawn before the spectrum separated cleanly.
    pub attempts: u64,
    pub irreps: Vec<Irrep>,
    /// Dimension of the subspace on which every basis label acts as zero.
    pub null_dimension: usize,
}

impl Decomposition {
    /// `Σ dim·multiplicity + null part`.
    pub fn total_dimension(&self) -> usize {
        self.null_dimension + self.irreps.iter().map(|r| r.dimension * r.multiplicity).sum::<usize>()
    }
}

fn random_hermitian(rng: &mut ChaCha8Rng, d: usize) -> CMatrix {
    let mut m = CMatrix::zeros(d, d);
    for i in 0..d {
        m[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..d {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// Orthonormal eigenvector blocks of a random commutant element, or `None`
/// if the spectrum has a gap in the ambiguous range.
fn spectral_blocks(action: &dyn Action, rng: &mut ChaCha8Rng) -> Option<Vec<CMatrix>> {
    let d = action.dim();
    let m = random_hermitian(rng, d);
    let t = action.twirl(&m);
    let t = (&t + t.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(t);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let scale = eig.eigenvalues.iter().fold(0.0f64, |a, x| a.max(x.abs())).max(1.0);
    let mut groups: Vec<Vec<usize>> = vec![];
    for (pos, &i) in order.iter().enumerate() {
        if pos > 0 {
            let gap = (eig.eigenvalues[i] - eig.eigenvalues[order[pos - 1]]) / scale;
            if gap > TOLERANCE && gap < AMBIGUOUS_GAP {
                return None;
            }
            if gap <= TOLERANCE {
                groups.last_mut().expect("started").push(i);
                continue;
            }
        }
        groups.push(vec![i]);
    }
    Some(groups.into_iter().map(|g| eig.eigenvectors.select_columns(&g)).collect())
}

fn split(action: &dyn Action, seed: u64) -> Result<Decomposition> {
    if action.dim() == 0 {
        return Ok(Decomposition { seed, attempts: 0, irreps: vec![], null_dimension: 0 });
    }
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let Some(blocks) = spectral_blocks(action, &mut rng) else {
            continue;
        };
        let mut irreps: Vec<Irrep> = vec![];
        let mut null_dimension = 0;
        for v in blocks {
            let sub = action.compress(&v);
            if sub.matrices.iter().all(|m| m.iter().all(|z| z.norm() <= TOLERANCE)) {
                null_dimension += v.ncols();
                continue;
            }
            let chi = sub.character();
            let scale = chi.iter().fold(1.0f64, |a, z| a.max(z.norm()));
            let same = irreps.iter_mut().find(|r| {
                r.dimension == sub.dimension
                    && r.character().iter().zip(&chi).all(|(x, y)| (x - y).norm() <= 1e-8 * scale)
            });
            match same {
                Some(r) => {
                    r.multiplicity += 1;
                    r.copies.push(v);
                }
                None => irreps.push(Irrep { dimension: sub.dimension, multiplicity: 1, representation: sub, copies: vec![v] }),
            }
        }
        return Ok(Decomposition { seed, attempts: attempt + 1, irreps, null_dimension });
    }
    Err(Error::Numerical(format!("eigenvalue clustering stayed ambiguous after {MAX_ATTEMPTS} attempts")))
}

/// Splits `rep` into irreducible blocks grouped by character.
pub fn decompose(rep: &Representation, seed: u64) -> Result<Decomposition> {
    split(rep, seed)
}

/// Decomposes the left regular representation without materializing it.
pub fn decompose_regular<A: StarAlgebra>(alg: &A, seed: u64) -> Result<Decomposition> {
    split(&SparseRegular::new(alg), seed)
}

/// One minimal projection per isomorphism class of irreducibles, as
/// coefficient vectors over the basis: the component of the unit in the
/// first copy of each class inside the regular representation.
pub fn minimal_projections<A: StarAlgebra>(alg: &A, seed: u64) -> Result<Vec<Vec<Complex64>>> {
    let dec = decompose_regular(alg, seed)?;
    let mut unit = nalgebra::DVector::<Complex64>::zeros(alg.dimension());
    for u in alg.unit() {
        unit[alg.index_of(&u).expect("basis label")] = Complex64::new(1.0, 0.0);
    }
    Ok(dec
        .irreps
        .iter()
        .map(|r| {
            let v = &r.copies[0];
            (v * (v.adjoint() * &unit)).iter().copied().collect()
        })
        .collect())
}

/// `Π(Φ⁻¹(E_{u,v} ⊗ [s])) = δ_{class} E_{u,v} ⊗ π(s)` for `π` a
/// representation of the class-`class` twisted centralizer algebra.
pub fn induce<A: BlockIso>(alg: &A, class: usize, pi: &Representation) -> Result<Representation> {
    let blocks = alg.blocks();
    let bc = blocks.classes.get(class).ok_or_else(|| Error::format("class index out of range"))?;
    if pi.matrices.len() != bc.centralizer.len() {
        return Err(Error::format("representation does not match the centralizer algebra"));
    }
    let d = pi.dimension;
    let dim = bc.size * d;
    Ok(Representation::from_fn(alg, dim, |a| {
        let (p, b) = alg.phi(a);
        let mut m = CMatrix::zeros(dim, dim);
        if b.class == class {
            let x = bc.centralizer.binary_search(&b.x).expect("image in the centralizer");
            let block = &pi.matrices[x] * c(p);
            m.view_mut((b.row * d, b.col * d), (d, d)).copy_from(&block);
        }
        m
    }))
}

/// Orthonormal basis of the range of a projection. Coordinate projections
/// (0/1 diagonal matrices, up to rounding) give coordinate vectors.
fn projection_range(p: &CMatrix) -> CMatrix {
    let d = p.nrows();
    let one = Complex64::new(1.0, 0.0);
    let near = |z: Complex64, w: f64| (z.re - w).abs() <= 1e-12 && z.im.abs() <= 1e-12;
    let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || near(p[(i, j)], 0.0)));
    if diagonal && (0..d).all(|i| near(p[(i, i)], 1.0) || near(p[(i, i)], 0.0)) {
        let cols: Vec<usize> = (0..d).filter(|&i| near(p[(i, i)], 1.0)).collect();
        let mut v = CMatrix::zeros(d, cols.len());
        for (k, &i) in cols.iter().enumerate() {
            v[(i, k)] = one;
        }
        return v;
    }
    let h = (p + p.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(h);
    let cols: Vec<usize> = (0..d).filter(|&i| eig.eigenvalues[i] > 0.5).collect();
    eig.eigenvectors.select_columns(&cols)
}

/// `π(s) = Π(Φ⁻¹(E_{g_C,g_C} ⊗ [s]))` on the range of the class projection.
pub fn restrict<A: BlockIso>(alg: &A, class: usize, rep: &Representation) -> Result<Representation> {
    let blocks = alg.blocks();
    let bc = blocks.classes.get(class).ok_or_else(|| Error::format("class index out of range"))?;
    let proj = rep.get(alg, &alg.support_projection(class)).ok_or_else(|| Error::format("basis mismatch"))?;
    let v = projection_range(proj);
    let vt = v.adjoint();
    let slot = alg.corner_slot(class);
    let matrices = bc
        .centralizer
        .iter()
        .map(|&x| {
            let (q, l) = alg.phi_inverse(&BlockLabel { class, row: slot, col: slot, x });
            let m = &vt * rep.get(alg, &l).expect("basis label") * &v;
            if q.is_one() {
                m
            } else {
                m * c(q)
            }
        })
        .collect();
    Ok(Representation { dimension: v.ncols(), matrices })
}

/// The subrepresentation generated by the range of each class projection.
#[derive(Clone, Debug)]
pub struct Support {
    pub class: usize,
    pub dimension: usize,
    pub isometry: CMatrix,
}

/// `V = ⊕_C V^C`, with `V^C` spanned by `Π(a)·range Π(p_C)` over all `a`.
pub fn support_decompose<A: BlockIso>(alg: &A, rep: &Representation) -> Vec<Support> {
    let d = rep.dimension;
    (0..alg.blocks().classes.len())
        .map(|class| {
            if d == 0 {
                return Support { class, dimension: 0, isometry: CMatrix::zeros(0, 0) };
            }
            let p = rep.get(alg, &alg.support_projection(class)).expect("basis label");
            let mut gram = CMatrix::zeros(d, d);
            for m in &rep.matrices {
                let w = m * p;
                gram += &w * w.adjoint();
            }
            let eig = SymmetricEigen::new(gram);
            let scale = eig.eigenvalues.iter().fold(1.0f64, |a, x| a.max(x.abs()));
            let cols: Vec<usize> = (0..d).filter(|&i| eig.eigenvalues[i] > TOLERANCE * scale).collect();
            let isometry = eig.eigenvectors.select_columns(&cols);
            Support { class, dimension: cols.len(), isometry }
        })
        .collect()
}

/// The supports are mutually orthogonal and fill the space.
pub fn support_check(rep: &Representation, supports: &[Support]) -> Check {
    let total: usize = supports.iter().map(|s| s.dimension).sum();
    if total != rep.dimension {
        return Err(Failure::new("support_sum", vec![total, rep.dimension], "supports do not fill the space"));
    }
    for (i, a) in supports.iter().enumerate() {
        for b in &supports[i + 1..] {
            let cross = a.isometry.adjoint() * &b.isometry;
            if cross.iter().any(|z| z.norm() > 1e-8) {
                return Err(Failure::new("support_orthogonal", vec![a.class, b.class], ""));
            }
        }
    }
    Ok(())
}

/// Irreducible representations of the whole algebra: each irreducible of
/// each twisted centralizer algebra, induced along `Φ⁻¹`.
pub fn induced_irreducibles<A: BlockIso>(alg: &A, seed: u64) -> Result<Vec<(usize, Representation)>> {
    let blocks = alg.blocks();
    let mut out = vec![];
    for (class, bc) in blocks.classes.iter().enumerate() {
        let tga = TwistedGroupAlgebra::new_unchecked(&blocks.group, &bc.centralizer, bc.twist.clone());
        for irr in decompose_regular(&tga, seed)?.irreps {
            out.push((class, induce(alg, class, &irr.representation)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn z2_minus() -> TwistedGroupAlgebra {
        let g = GroupTable::cyclic(2);
        let phi = Cochain2::on_group(2, |a, b| Phase::new((a * b) as i64, 2));
        TwistedGroupAlgebra::new(&g, &[0, 1], phi).unwrap()
    }

    #[test]
    fn twisted_square() {
        let a = z2_minus();
        assert_eq!(a.mul(&GroupElem(1), &GroupElem(1)), Some((Phase::new(1, 2), GroupElem(0))));
        assert_eq!(a.center_dimension(), 2);
    }

    #[test]
    fn non_cocycle_rejected() {
        let g = GroupTable::cyclic(3);
        let phi = Cochain2::on_group(3, |a, b| Phase::new((a == 1 && b == 1) as i64, 2));
        let err = TwistedGroupAlgebra::new(&g, &[0, 1, 2], phi).unwrap_err();
        assert_eq!(err.failure().unwrap().check, "associativity");
    }

    #[test]
    fn group_algebra_centers() {
        let s3 = fixtures::s3();
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(TwistedGroupAlgebra::new(&s3, &all, Cochain2::trivial(6)).unwrap().center_dimension(), 3);
        let z2 = GroupTable::cyclic(2);
        assert_eq!(TwistedGroupAlgebra::new(&z2, &[0, 1], Cochain2::trivial(2)).unwrap().center_dimension(), 2);
    }

    #[test]
    fn twisted_regular_splits_into_plus_minus_i() {
        let a = z2_minus();
        let dec = decompose(&regular_representation(&a), 7).unwrap();
        assert_eq!(dec.irreps.len(), 2);
        let mut vals: Vec<f64> = dec.irreps.iter().map(|r| r.representation.matrices[1][(0, 0)].im).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 1.0).abs() < 1e-9 && (vals[1] - 1.0).abs() < 1e-9);
        for r in &dec.irreps {
            assert_eq!((r.dimension, r.multiplicity), (1, 1));
            assert!(r.representation.matrices[1][(0, 0)].re.abs() < 1e-9);
        }
    }

    #[test]
    fn s3_regular_blocks() {
        let s3 = fixtures::s3();
        let a = TwistedGroupAlgebra::new(&s3, &(0..6).collect::<Vec<_>>(), Cochain2::trivial(6)).unwrap();
        let dec = decompose_regular(&a, 1).unwrap();
        let mut shape: Vec<(usize, usize)> = dec.irreps.iter().map(|r| (r.dimension, r.multiplicity)).collect();
        shape.sort();
        assert_eq!(shape, vec![(1, 1), (1, 1), (2, 2)]);
        let dense = decompose(&regular_representation(&a), 1).unwrap();
        assert_eq!(dense.irreps.len(), 3);
        for r in &dec.irreps {
            representation_check(&a, &r.representation, TOLERANCE).unwrap();
        }
    }

    #[test]
    fn one_dimensional_algebra() {
        let t = GroupTable::trivial();
        let a = TwistedGroupAlgebra::new(&t, &[0], Cochain2::trivial(1)).unwrap();
        let dec = decompose_regular(&a, 0).unwrap();
        assert_eq!(dec.irreps.len(), 1);
        assert_eq!(dec.irreps[0].dimension, 1);
    }

    #[test]
    fn minimal_projections_are_projections() {
        let s3 = fixtures::s3();
        let a = TwistedGroupAlgebra::new(&s3, &(0..6).collect::<Vec<_>>(), Cochain2::trivial(6)).unwrap();
        let reg = regular_representation(&a);
        let ps = minimal_projections(&a, 3).unwrap();
        assert_eq!(ps.len(), 3);
        for p in ps {
            let coeffs: Vec<(usize, Complex64)> = p.iter().copied().enumerate().collect();
            let m = reg.evaluate(&coeffs);
            assert!(close(&(&m * &m), &m, 1e-9));
            assert!(close(&m.adjoint(), &m, 1e-9));
        }
    }
}

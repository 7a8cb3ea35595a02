//! Exact arithmetic in `ℚ(ζ_N)`, stored as polynomials reduced modulo the
//! `N`-th cyclotomic polynomial.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::phase::Phase;

type Poly = Vec<BigRational>;

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n > 0);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        p = exact_div(&p, &cyclotomic_polynomial(d));
    }
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut q = vec![0i64; r.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd] / lead;
        q[k] = c;
        for (i, &x) in den.iter().enumerate() {
            r[k + i] -= c * x;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out: Poly = (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &c * x;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// The field `ℚ(ζ_N)` together with precomputed reductions of `ζ^k`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: u64,
    modulus: Poly,
    powers: Vec<Cyclo>,
}

/// An element of a [`CyclotomicField`]; only meaningful with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo(Vec<BigRational>);

impl CyclotomicField {
    pub fn new(order: u64) -> CyclotomicField {
        let modulus: Poly = cyclotomic_polynomial(order)
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur: Poly = vec![BigRational::one()];
        for _ in 0..order {
            let mut v = cur.clone();
            v.resize(deg, BigRational::zero());
            powers.push(Cyclo(v));
            cur.insert(0, BigRational::zero());
            cur = poly_divrem(&cur, &modulus).1;
        }
        CyclotomicField { order, modulus, powers }
    }

    /// The smallest field holding all the given phases.
    pub fn for_phases<'a>(phases: impl IntoIterator<Item = &'a Phase>) -> CyclotomicField {
        CyclotomicField::new(crate::phase::common_denominator(phases) as u64)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo(vec![BigRational::zero(); self.degree()])
    }

    pub fn one(&self) -> Cyclo {
        self.powers[0].clone()
    }

    pub fn from_integer(&self, k: i64) -> Cyclo {
        self.from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(&self, r: BigRational) -> Cyclo {
        let mut v = self.zero();
        v.0[0] = r;
        v
    }

    pub fn from_phase(&self, p: Phase) -> Result<Cyclo> {
        let den = p.denom() as u64;
        if self.order % den != 0 {
            return Err(Error::format(format!(
                "phase {p} is not in the field of {}-th roots of unity",
                self.order
            )));
        }
        Ok(self.powers[(p.numer() as u64 * (self.order / den)) as usize].clone())
    }

    pub fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &Cyclo) -> Cyclo {
        Cyclo(a.0.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        self.reduce(poly_mul(&a.0, &b.0))
    }

    pub fn scale(&self, a: &Cyclo, r: &BigRational) -> Cyclo {
        Cyclo(a.0.iter().map(|x| x * r).collect())
    }

    fn reduce(&self, p: Poly) -> Cyclo {
        let mut r = poly_divrem(&p, &self.modulus).1;
        r.resize(self.degree(), BigRational::zero());
        Cyclo(r)
    }

    pub fn is_zero(&self, a: &Cyclo) -> bool {
        a.0.iter().all(Zero::is_zero)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Cyclo) -> Option<Cyclo> {
        let mut r0 = self.modulus.clone();
        let mut r1 = a.0.clone();
        trim(&mut r1);
        if r1.is_empty() {
            return None;
        }
        let (mut t0, mut t1): (Poly, Poly) = (vec![], vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let t = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is a nonzero constant because the modulus is irreducible.
        let c = r0[0].clone();
        let t: Poly = t0.iter().map(|x| x / &c).collect();
        Some(self.reduce(t))
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self, a: &Cyclo) -> Cyclo {
        let n = self.order as usize;
        let mut out = self.zero();
        for (k, c) in a.0.iter().enumerate() {
            if !c.is_zero() {
                out = self.add(&out, &self.scale(&self.powers[(n - k % n) % n], c));
            }
        }
        out
    }

    /// The rational value if `a` lies in `ℚ`.
    pub fn as_rational(&self, a: &Cyclo) -> Option<BigRational> {
        a.0[1..].iter().all(Zero::is_zero).then(|| a.0[0].clone())
    }

    pub fn to_complex(&self, a: &Cyclo) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in a.0.iter().enumerate() {
            if !c.is_zero() {
                let w = Phase::new(k as i64, self.order as i64).to_complex();
                z += w * c.to_f64().unwrap_or(f64::NAN);
            }
        }
        z
    }

    /// Rank of a matrix by exact Gaussian elimination.
    pub fn rank(&self, rows: &[Vec<Cyclo>]) -> usize {
        let mut m: Vec<Vec<Cyclo>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| !self.is_zero(&m[r][col])) else {
                continue;
            };
            m.swap(rank, p);
            let pinv = self.inv(&m[rank][col]).expect("nonzero pivot");
            let pivot_row: Vec<Cyclo> = m[rank].iter().map(|x| self.mul(x, &pinv)).collect();
            for r in 0..m.len() {
                if r != rank && !self.is_zero(&m[r][col]) {
                    let f = m[r][col].clone();
                    for c in col..ncols {
                        let d = self.mul(&f, &pivot_row[c]);
                        m[r][c] = self.sub(&m[r][c], &d);
                    }
                }
            }
            m[rank] = pivot_row;
            rank += 1;
        }
        rank
    }
}

impl Cyclo {
    /// True for positive rational numbers.
    pub fn is_positive_rational(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero) && self.0[0].is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_behave() {
        let f = CyclotomicField::new(12);
        let z = f.from_phase(Phase::new(1, 12)).unwrap();
        let mut acc = f.one();
        for _ in 0..12 {
            acc = f.mul(&acc, &z);
        }
        assert_eq!(acc, f.one());
        // 1 + ζ + ... + ζ^11 = 0
        let mut s = f.zero();
        for k in 0..12 {
            s = f.add(&s, &f.from_phase(Phase::new(k, 12)).unwrap());
        }
        assert!(f.is_zero(&s));
        let i = f.from_phase(Phase::new(1, 4)).unwrap();
        assert_eq!(f.mul(&i, &i), f.from_integer(-1));
        assert_eq!(f.conj(&i), f.from_phase(Phase::new(3, 4)).unwrap());
    }

    #[test]
    fn inverses() {
        let f = CyclotomicField::new(5);
        let a = f.add(&f.one(), &f.from_phase(Phase::new(2, 5)).unwrap());
        let b = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &b), f.one());
        assert!(f.inv(&f.zero()).is_none());
        assert!(f.from_phase(Phase::new(1, 3)).is_err());
    }

    #[test]
    fn exact_rank() {
        let f = CyclotomicField::new(4);
        let i = f.from_phase(Phase::new(1, 4)).unwrap();
        let one = f.one();
        let rows = vec![
            vec![one.clone(), i.clone()],
            vec![i.clone(), f.from_integer(-1)],
        ];
        assert_eq!(f.rank(&rows), 1);
    }
}

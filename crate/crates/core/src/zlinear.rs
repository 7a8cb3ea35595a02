//! Integer linear systems over `ℚ/ℤ`: find `x` with `A·x ≡ b (mod 1)`.
//!
//! `A` is brought to diagonal form `U·A·V = D` by unimodular row and column
//! operations; then `D·y ≡ U·b` is solved entrywise and `x = V·y`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn frac(r: &BigRational) -> BigRational {
    r - r.floor()
}

/// Returns a solution reduced to `[0,1)`, or `None` when the system is
/// inconsistent mod 1.
pub fn solve_mod_one(a: &[Vec<i64>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let u = a.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut b: Vec<BigRational> = b.to_vec();
    let mut v: Vec<Vec<BigInt>> =
        (0..u).map(|i| (0..u).map(|j| BigInt::from((i == j) as i64)).collect()).collect();

    let mut rank = 0;
    while rank < m.min(u) {
        let t = rank;
        let Some((pi, pj)) = min_entry(&a, t, (t..m).flat_map(|i| (t..u).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, pi);
        b.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..u {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    let d = BigRational::from_integer(q) * &b[t];
                    b[i] -= d;
                }
            }
            for j in t + 1..u {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in 0..m {
                        let d = &q * &a[i][t];
                        a[i][j] -= d;
                    }
                    for row in v.iter_mut() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
            }
            let rest = (t + 1..m).map(|i| (i, t)).chain((t + 1..u).map(|j| (t, j)));
            match min_entry(&a, t, rest) {
                None => break,
                Some((i, j)) => {
                    if i != t {
                        a.swap(t, i);
                        b.swap(t, i);
                    } else {
                        swap_cols(&mut a, t, j);
                        swap_cols(&mut v, t, j);
                    }
                }
            }
        }
        rank += 1;
    }
    if b[rank..].iter().any(|r| !r.is_integer()) {
        return None;
    }
    let mut y = vec![BigRational::zero(); u];
    for i in 0..rank {
        y[i] = &b[i] / BigRational::from_integer(a[i][i].clone());
    }
    Some(
        (0..u)
            .map(|i| {
                let s = (0..u).fold(BigRational::zero(), |acc, k| acc + BigRational::from_integer(v[i][k].clone()) * &y[k]);
                frac(&s)
            })
            .collect(),
    )
}

fn min_entry(a: &[Vec<BigInt>], _t: usize, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells.filter(|&(i, j)| !a[i][j].is_zero()).min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

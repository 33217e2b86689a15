//! Dense complex matrices, LU factorization, and a matrix-free BiCGSTAB.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![Complex64::ZERO; rows * cols] }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// y = A x.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.cols, "matvec dimension mismatch");
        (0..self.rows)
            .into_par_iter()
            .map(|r| {
                let row = self.row(r);
                let mut acc = Complex64::ZERO;
                for (a, b) in row.iter().zip(x.iter()) {
                    acc += a * b;
                }
                acc
            })
            .collect()
    }

    /// y = A^H x (conjugate transpose).
    pub fn matvec_adjoint(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.rows, "adjoint matvec dimension mismatch");
        let mut y = vec![Complex64::ZERO; self.cols];
        for r in 0..self.rows {
            let xr = x[r];
            for (c, a) in self.row(r).iter().enumerate() {
                y[c] += a.conj() * xr;
            }
        }
        y
    }
}

/// LU factorization with partial pivoting of a square complex matrix.
pub struct LuFactor {
    lu: CMat,
    pivots: Vec<usize>,
}

/// Factor a square matrix; fails on an exactly singular pivot.
pub fn lu_factor(mut a: CMat) -> Result<LuFactor> {
    if a.rows != a.cols {
        return Err(Error::shape("lu_factor requires a square matrix"));
    }
    let n = a.rows;
    let mut pivots = vec![0usize; n];
    for k in 0..n {
        // Pivot search over column k.
        let mut pmax = a.at(k, k).norm_sqr();
        let mut prow = k;
        for r in (k + 1)..n {
            let m = a.at(r, k).norm_sqr();
            if m > pmax {
                pmax = m;
                prow = r;
            }
        }
        if pmax == 0.0 {
            return Err(Error::Solver {
                message: format!("singular matrix at pivot {k}"),
                residual: f64::INFINITY,
            });
        }
        pivots[k] = prow;
        if prow != k {
            for c in 0..n {
                let tmp = a.at(k, c);
                a.set(k, c, a.at(prow, c));
                a.set(prow, c, tmp);
            }
        }
        let inv_pivot = Complex64::new(1.0, 0.0) / a.at(k, k);
        let (head, tail) = a.data.split_at_mut((k + 1) * n);
        let pivot_row = &head[k * n..(k + 1) * n];
        tail.par_chunks_mut(n).for_each(|row| {
            let factor = row[k] * inv_pivot;
            row[k] = factor;
            for c in (k + 1)..n {
                row[c] -= factor * pivot_row[c];
            }
        });
    }
    Ok(LuFactor { lu: a, pivots })
}

impl LuFactor {
    pub fn n(&self) -> usize {
        self.lu.rows
    }

    /// Solve A x = b for one right-hand side.
    pub fn solve(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.n();
        if b.len() != n {
            return Err(Error::shape("lu solve: rhs length mismatch"));
        }
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
        }
        // Forward substitution (unit lower triangle).
        for r in 1..n {
            let mut acc = x[r];
            for c in 0..r {
                acc -= self.lu.at(r, c) * x[c];
            }
            x[r] = acc;
        }
        // Back substitution.
        for r in (0..n).rev() {
            let mut acc = x[r];
            for c in (r + 1)..n {
                acc -= self.lu.at(r, c) * x[c];
            }
            x[r] = acc / self.lu.at(r, r);
        }
        Ok(x)
    }
}

/// Result of an iterative solve.
pub struct IterativeSolution {
    pub x: Vec<Complex64>,
    pub relative_residual: f64,
    pub iterations: usize,
}

/// Matrix-free BiCGSTAB for complex systems A x = b.
///
/// `apply` computes A times a vector. Converges when the true residual
/// drops below `tol * ||b||`; errors out with the last residual otherwise.
pub fn bicgstab<F>(
    apply: F,
    b: &[Complex64],
    tol: f64,
    max_iter: usize,
) -> Result<IterativeSolution>
where
    F: Fn(&[Complex64]) -> Vec<Complex64>,
{
    let n = b.len();
    let bnorm = norm(b);
    if bnorm == 0.0 {
        return Ok(IterativeSolution {
            x: vec![Complex64::ZERO; n],
            relative_residual: 0.0,
            iterations: 0,
        });
    }
    let mut x = vec![Complex64::ZERO; n];
    let mut r: Vec<Complex64> = b.to_vec();
    let r0 = r.clone();
    let mut rho = Complex64::new(1.0, 0.0);
    let mut alpha = Complex64::new(1.0, 0.0);
    let mut omega = Complex64::new(1.0, 0.0);
    let mut v = vec![Complex64::ZERO; n];
    let mut p = vec![Complex64::ZERO; n];

    let mut last_rel = 1.0;
    for it in 1..=max_iter {
        let rho_new = dot(&r0, &r);
        if rho_new.norm() == 0.0 {
            break; // breakdown
        }
        let beta = (rho_new / rho) * (alpha / omega);
        rho = rho_new;
        for i in 0..n {
            p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        v = apply(&p);
        let denom = dot(&r0, &v);
        if denom.norm() == 0.0 {
            break;
        }
        alpha = rho / denom;
        let s: Vec<Complex64> = (0..n).map(|i| r[i] - alpha * v[i]).collect();
        if norm(&s) / bnorm < tol {
            for i in 0..n {
                x[i] += alpha * p[i];
            }
            let res = true_residual(&apply, &x, b) / bnorm;
            if res < tol {
                return Ok(IterativeSolution { x, relative_residual: res, iterations: it });
            }
            last_rel = res;
            r = s;
            continue;
        }
        let t = apply(&s);
        let tt = dot(&t, &t);
        if tt.norm() == 0.0 {
            break;
        }
        omega = dot(&t, &s) / tt;
        for i in 0..n {
            x[i] += alpha * p[i] + omega * s[i];
        }
        r = (0..n).map(|i| s[i] - omega * t[i]).collect();
        let rel = norm(&r) / bnorm;
        last_rel = rel;
        if rel < tol {
            let res = true_residual(&apply, &x, b) / bnorm;
            if res < tol {
                return Ok(IterativeSolution { x, relative_residual: res, iterations: it });
            }
            last_rel = res;
        }
        if omega.norm() == 0.0 {
            break;
        }
    }
    Err(Error::Solver {
        message: format!("bicgstab did not converge within {max_iter} iterations"),
        residual: last_rel,
    })
}

fn true_residual<F>(apply: &F, x: &[Complex64], b: &[Complex64]) -> f64
where
    F: Fn(&[Complex64]) -> Vec<Complex64>,
{
    let ax = apply(x);
    norm(&b.iter().zip(ax.iter()).map(|(bi, ai)| bi - ai).collect::<Vec<_>>())
}

/// Conjugated inner product <u, v> = sum conj(u_i) v_i.
pub fn dot(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(n: usize, seed: u64) -> CMat {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = CMat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let re: f64 = rng.gen_range(-1.0..1.0);
                let im: f64 = rng.gen_range(-1.0..1.0);
                let diag = if r == c { 4.0 } else { 0.0 };
                a.set(r, c, Complex64::new(re + diag, im));
            }
        }
        a
    }

    fn random_vec(n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect()
    }

    #[test]
    fn lu_solves_random_system() {
        let a = random_matrix(40, 1);
        let b = random_vec(40, 2);
        let f = lu_factor(a.clone()).unwrap();
        let x = f.solve(&b).unwrap();
        let r: Vec<Complex64> =
            a.matvec(&x).iter().zip(b.iter()).map(|(ax, bi)| ax - bi).collect();
        assert!(norm(&r) / norm(&b) < 1e-12);
    }

    #[test]
    fn lu_detects_singular() {
        let mut a = CMat::zeros(3, 3);
        a.set(0, 0, Complex64::new(1.0, 0.0));
        a.set(1, 1, Complex64::new(1.0, 0.0));
        // third row/col all zero
        assert!(lu_factor(a).is_err());
    }

    #[test]
    fn adjoint_matvec_consistency() {
        // <A x, y> == <x, A^H y>
        let a = random_matrix(17, 3);
        let x = random_vec(17, 4);
        let y = random_vec(17, 5);
        let lhs = dot(&y, &a.matvec(&x)).conj();
        let rhs = dot(&x, &a.matvec_adjoint(&y)).conj();
        assert!((lhs - rhs).norm() < 1e-12 * norm(&x) * norm(&y));
    }

    #[test]
    fn bicgstab_matches_lu() {
        let a = random_matrix(60, 7);
        let b = random_vec(60, 8);
        let f = lu_factor(a.clone()).unwrap();
        let x_lu = f.solve(&b).unwrap();
        let sol = bicgstab(|v| a.matvec(v), &b, 1e-12, 500).unwrap();
        let diff: Vec<Complex64> =
            sol.x.iter().zip(x_lu.iter()).map(|(p, q)| p - q).collect();
        assert!(norm(&diff) / norm(&x_lu) < 1e-9);
        assert!(sol.relative_residual < 1e-12);
    }

    #[test]
    fn bicgstab_zero_rhs() {
        let a = random_matrix(10, 9);
        let b = vec![Complex64::ZERO; 10];
        let sol = bicgstab(|v| a.matvec(v), &b, 1e-10, 100).unwrap();
        assert!(sol.x.iter().all(|z| z.norm() == 0.0));
    }
}

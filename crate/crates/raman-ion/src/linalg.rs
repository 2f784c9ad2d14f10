//! Dense complex linear algebra kernels: matrix exponential, linear solves,
//! and Hermitian eigenvalues.
//!
//! Everything here works on `ndarray::Array2<Complex64>` at desk scale
//! (dimensions of order 100), so dense algorithms are used throughout.

use ndarray::{Array2, ArrayView2};
use num_complex::Complex64 as C64;

use crate::error::{Result, SimError};

pub(crate) const C_ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const C_ONE: C64 = C64::new(1.0, 0.0);
pub(crate) const C_I: C64 = C64::new(0.0, 1.0);

/// Identity matrix of dimension `n`.
pub fn identity(n: usize) -> Array2<C64> {
    Array2::from_diag_elem(n, C_ONE)
}

/// Conjugate transpose.
pub fn adjoint(a: &ArrayView2<C64>) -> Array2<C64> {
    let (r, c) = a.dim();
    Array2::from_shape_fn((c, r), |(i, j)| a[(j, i)].conj())
}

/// Largest entry magnitude.
pub fn max_norm(a: &ArrayView2<C64>) -> f64 {
    a.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
}

/// 1-norm (maximum column sum of magnitudes).
pub fn one_norm(a: &ArrayView2<C64>) -> f64 {
    let (rows, cols) = a.dim();
    let mut best = 0.0_f64;
    for j in 0..cols {
        let mut s = 0.0;
        for i in 0..rows {
            s += a[(i, j)].norm();
        }
        best = best.max(s);
    }
    best
}

/// Frobenius norm.
pub fn fro_norm(a: &ArrayView2<C64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn all_finite(a: &ArrayView2<C64>) -> bool {
    a.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Solve `A X = B` by LU factorization with partial pivoting.
pub fn solve(a: Array2<C64>, b: Array2<C64>) -> Result<Array2<C64>> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n {
        return Err(SimError::DimensionMismatch(n, b.nrows()));
    }
    let m = b.ncols();
    let mut lu = a;
    let mut x = b;
    let mut perm: Vec<usize> = (0..n).collect();

    for col in 0..n {
        let mut pmax = 0.0;
        let mut prow = col;
        for row in col..n {
            let v = lu[(row, col)].norm();
            if v > pmax {
                pmax = v;
                prow = row;
            }
        }
        if pmax < 1e-300 {
            return Err(SimError::InvalidState("singular matrix in solve".into()));
        }
        if prow != col {
            perm.swap(prow, col);
            for j in 0..n {
                let t = lu[(col, j)];
                lu[(col, j)] = lu[(prow, j)];
                lu[(prow, j)] = t;
            }
            for j in 0..m {
                let t = x[(col, j)];
                x[(col, j)] = x[(prow, j)];
                x[(prow, j)] = t;
            }
        }
        let piv = lu[(col, col)];
        for row in col + 1..n {
            let f = lu[(row, col)] / piv;
            lu[(row, col)] = f;
            if f != C_ZERO {
                for j in col + 1..n {
                    let v = lu[(col, j)];
                    lu[(row, j)] -= f * v;
                }
                for j in 0..m {
                    let v = x[(col, j)];
                    x[(row, j)] -= f * v;
                }
            }
        }
    }
    // back substitution
    for col in (0..n).rev() {
        let piv = lu[(col, col)];
        for j in 0..m {
            let mut s = x[(col, j)];
            for k in col + 1..n {
                s -= lu[(col, k)] * x[(k, j)];
            }
            x[(col, j)] = s / piv;
        }
    }
    Ok(x)
}

// Padé(13) coefficients for the scaling-and-squaring matrix exponential
// (Higham 2005, SIAM J. Matrix Anal. Appl. 26(4)).
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling-and-squaring with a Padé(13) approximant.
///
/// Relative accuracy is ~1e-13 for inputs with norm up to ~10; larger norms
/// cost one squaring per doubling. Inputs whose exponential cannot be
/// represented in f64 report [`SimError::ExpOverflow`].
pub fn expm(a: &ArrayView2<C64>) -> Result<Array2<C64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(SimError::DimensionMismatch(n, a.ncols()));
    }
    if !all_finite(a) {
        return Err(SimError::NonFiniteInput);
    }
    if n == 0 {
        return Ok(Array2::zeros((0, 0)));
    }
    let norm = one_norm(a);
    if norm > 700.0 {
        // exp(700) is the edge of f64 range for a positive spectrum
        return Err(SimError::ExpOverflow { norm });
    }
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = C64::new((0.5f64).powi(s as i32), 0.0);
    let a1 = a.mapv(|z| z * scale);

    let a2 = a1.dot(&a1);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);
    let eye = identity(n);

    let c = |k: usize| C64::new(PADE13[k], 0.0);
    let w1 = &a6 * c(13) + &a4 * c(11) + &a2 * c(9);
    let w2 = a6.dot(&w1) + &a6 * c(7) + &a4 * c(5) + &a2 * c(3) + &eye * c(1);
    let u = a1.dot(&w2);
    let v1 = &a6 * c(12) + &a4 * c(10) + &a2 * c(8);
    let v = a6.dot(&v1) + &a6 * c(6) + &a4 * c(4) + &a2 * c(2) + &eye * c(0);

    let p = &v + &u;
    let q = &v - &u;
    let mut r = solve(q, p)?;
    for _ in 0..s {
        r = r.dot(&r);
    }
    if !all_finite(&r.view()) {
        return Err(SimError::ExpOverflow { norm });
    }
    Ok(r)
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// returned in ascending order.
///
/// The input is assumed Hermitian; only the Hermitian part of each
/// off-diagonal pair is consulted.
pub fn hermitian_eigenvalues(a: &ArrayView2<C64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "hermitian_eigenvalues needs a square matrix");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![a[(0, 0)].re];
    }
    // Work on the explicitly Hermitized copy so tiny asymmetries cannot
    // destabilize the sweep.
    let mut m = Array2::from_shape_fn((n, n), |(i, j)| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let scale = fro_norm(&m.view()).max(1e-300);

    for _sweep in 0..100 {
        let mut off = 0.0_f64;
        for p in 0..n {
            for q in p + 1..n {
                off += m[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                // phase rotation making the pivot real, then a real Jacobi
                // rotation eliminating it
                let phase = apq / C64::new(mag, 0.0);
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cth = 1.0 / (1.0 + t * t).sqrt();
                let sth = t * cth;
                // combined column factors: col_p' = c*col_p - s*conj(phase)*col_q
                //                          col_q' = s*phase*col_p + c*col_q
                let sp = C64::new(sth, 0.0) * phase;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * cth - mkq * sp.conj();
                    m[(k, q)] = mkp * sp + mkq * cth;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = mpk * cth - mqk * sp;
                    m[(q, k)] = mpk * sp.conj() + mqk * cth;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &ArrayView2<C64>) -> f64 {
    hermitian_eigenvalues(a)[0]
}

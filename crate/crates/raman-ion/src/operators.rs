//! Truncated Hilbert space and elementary operators.
//!
//! The simulator works on a tensor product of a small internal manifold
//! (2 or 3 levels) with a truncated phonon mode (Fock states `|0⟩..|N-1⟩`).
//! The basis ordering is fixed globally: the internal level index varies
//! slowest, the phonon index fastest, so the state `|level, n⟩` sits at
//! flat index `level * fock_dim + n`. Populations of one internal level
//! therefore occupy one contiguous diagonal block.
//!
//! Internal transition operators follow `S_ij = |j⟩⟨i|` (they move
//! population from level `i` to level `j`), which fixes the product rule
//! `S_ij · S_kl = δ_il S_kj`.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::error::{Result, SimError};
use crate::linalg::{self, C_ONE, C_ZERO};

/// Truncated tensor-product space: `level_count` internal levels times
/// `fock_dim` phonon number states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemSpace {
    fock_dim: usize,
    level_count: usize,
}

impl SystemSpace {
    pub fn new(fock_dim: usize, level_count: usize) -> Result<Self> {
        if fock_dim < 2 {
            return Err(SimError::InvalidSpace(format!(
                "fock_dim must be at least 2, got {fock_dim}"
            )));
        }
        if !(2..=3).contains(&level_count) {
            return Err(SimError::InvalidSpace(format!(
                "level_count must be 2 or 3, got {level_count}"
            )));
        }
        Ok(Self {
            fock_dim,
            level_count,
        })
    }

    /// Two-level space (the effective-model manifold).
    pub fn two_level(fock_dim: usize) -> Result<Self> {
        Self::new(fock_dim, 2)
    }

    /// Three-level space (the full Raman model).
    pub fn three_level(fock_dim: usize) -> Result<Self> {
        Self::new(fock_dim, 3)
    }

    pub fn fock_dim(&self) -> usize {
        self.fock_dim
    }

    pub fn level_count(&self) -> usize {
        self.level_count
    }

    /// Total dimension `fock_dim * level_count`.
    pub fn dim(&self) -> usize {
        self.fock_dim * self.level_count
    }

    /// Flat index of the basis ket `|level, n⟩`.
    pub fn index_of(&self, level: usize, n: usize) -> Result<usize> {
        if level >= self.level_count {
            return Err(SimError::LevelOutOfRange {
                index: level,
                levels: self.level_count,
            });
        }
        if n >= self.fock_dim {
            return Err(SimError::PhononOutOfRange {
                n,
                fock_dim: self.fock_dim,
            });
        }
        Ok(level * self.fock_dim + n)
    }

    /// Default phonon truncation for a state of mean occupation `nbar`:
    /// `ceil(nbar + 7 sqrt(nbar + 1))` with a floor of 15, which keeps
    /// coherent-state tails below ~1e-10.
    pub fn default_fock_dim(nbar: f64) -> usize {
        let n = (nbar + 7.0 * (nbar + 1.0).sqrt()).ceil() as usize;
        n.max(15)
    }

    /// Embedded `S_ij ⊗ I_N` on the full space.
    pub fn embed_atomic(&self, i: usize, j: usize) -> Result<ComplexOperator> {
        let s = atomic_op(self, i, j)?;
        Ok(tensor(&s, &ComplexOperator::identity(self.fock_dim)))
    }

    /// Embedded `I_levels ⊗ op` on the full space.
    pub fn embed_phonon(&self, op: &ComplexOperator) -> Result<ComplexOperator> {
        if op.dim() != self.fock_dim {
            return Err(SimError::DimensionMismatch(op.dim(), self.fock_dim));
        }
        Ok(tensor(&ComplexOperator::identity(self.level_count), op))
    }
}

/// Dense square complex matrix with its dimension; the common currency for
/// Hamiltonians, jump operators, and unitaries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexOperator {
    dim: usize,
    entries: Array2<C64>,
}

impl ComplexOperator {
    pub fn from_array(entries: Array2<C64>) -> Result<Self> {
        let (r, c) = entries.dim();
        if r != c {
            return Err(SimError::DimensionMismatch(r, c));
        }
        Ok(Self { dim: r, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: Array2::zeros((dim, dim)),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            entries: linalg::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &Array2<C64> {
        &self.entries
    }

    pub fn into_array(self) -> Array2<C64> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.entries[(i, j)] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            dim: self.dim,
            entries: linalg::adjoint(&self.entries.view()),
        }
    }

    pub fn scale(&self, z: C64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.mapv(|w| w * z),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.entries[(i, i)]).sum()
    }

    pub fn max_norm(&self) -> f64 {
        linalg::max_norm(&self.entries.view())
    }

    pub fn fro_norm(&self) -> f64 {
        linalg::fro_norm(&self.entries.view())
    }

    /// Matrix product; panics on dimension mismatch (operator algebra is an
    /// internal programming contract, unlike the fallible model builders).
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        Self {
            dim: self.dim,
            entries: self.entries.dot(&rhs.entries),
        }
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        let ab = self.entries.dot(&rhs.entries);
        let ba = rhs.entries.dot(&self.entries);
        Self {
            dim: self.dim,
            entries: ab - ba,
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Max-norm of `A − A†`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_anti_hermitian(&self, tol: f64) -> bool {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.entries[(i, j)] + self.entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = self.entries.dot(&linalg::adjoint(&self.entries.view()));
        let dev = linalg::max_norm(&(prod - linalg::identity(self.dim)).view());
        dev <= tol
    }

    /// Eigenvalues, assuming the operator is Hermitian (ascending order).
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues(&self.entries.view())
    }

    /// Matrix exponential; see [`matrix_exp`].
    pub fn expm(&self) -> Result<Self> {
        matrix_exp(self)
    }
}

impl std::ops::Add for &ComplexOperator {
    type Output = ComplexOperator;
    fn add(self, rhs: &ComplexOperator) -> ComplexOperator {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        ComplexOperator {
            dim: self.dim,
            entries: &self.entries + &rhs.entries,
        }
    }
}

impl std::ops::Sub for &ComplexOperator {
    type Output = ComplexOperator;
    fn sub(self, rhs: &ComplexOperator) -> ComplexOperator {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        ComplexOperator {
            dim: self.dim,
            entries: &self.entries - &rhs.entries,
        }
    }
}

impl std::ops::Mul for &ComplexOperator {
    type Output = ComplexOperator;
    fn mul(self, rhs: &ComplexOperator) -> ComplexOperator {
        self.matmul(rhs)
    }
}

/// Truncated phonon lowering operator `a` on the phonon factor alone
/// (`fock_dim × fock_dim`): entry `(n, n+1) = sqrt(n+1)`.
pub fn boson_annihilate(space: &SystemSpace) -> ComplexOperator {
    let n = space.fock_dim();
    let mut m = Array2::zeros((n, n));
    for k in 0..n - 1 {
        m[(k, k + 1)] = C64::new(((k + 1) as f64).sqrt(), 0.0);
    }
    ComplexOperator { dim: n, entries: m }
}

/// Truncated raising operator `a†` on the phonon factor alone.
pub fn boson_create(space: &SystemSpace) -> ComplexOperator {
    boson_annihilate(space).adjoint()
}

/// Number operator `a†a` on the phonon factor alone.
pub fn boson_number(space: &SystemSpace) -> ComplexOperator {
    let n = space.fock_dim();
    let mut m = Array2::zeros((n, n));
    for k in 0..n {
        m[(k, k)] = C64::new(k as f64, 0.0);
    }
    ComplexOperator { dim: n, entries: m }
}

/// Dimensionless position `a + a†` on the phonon factor alone.
pub fn boson_position(space: &SystemSpace) -> ComplexOperator {
    let a = boson_annihilate(space);
    &a + &a.adjoint()
}

/// Internal transition operator `S_ij = |j⟩⟨i|` on the internal factor
/// alone (`level_count × level_count`).
pub fn atomic_op(space: &SystemSpace, i: usize, j: usize) -> Result<ComplexOperator> {
    let l = space.level_count();
    for idx in [i, j] {
        if idx >= l {
            return Err(SimError::LevelOutOfRange {
                index: idx,
                levels: l,
            });
        }
    }
    let mut m = Array2::zeros((l, l));
    m[(j, i)] = C_ONE;
    Ok(ComplexOperator { dim: l, entries: m })
}

/// Kronecker product in the fixed basis ordering: `a` on the slow
/// (internal) factor, `b` on the fast (phonon) factor.
pub fn tensor(a: &ComplexOperator, b: &ComplexOperator) -> ComplexOperator {
    let (da, db) = (a.dim, b.dim);
    let dim = da * db;
    let mut m = Array2::zeros((dim, dim));
    for i1 in 0..da {
        for j1 in 0..da {
            let z = a.entries[(i1, j1)];
            if z == C_ZERO {
                continue;
            }
            for i2 in 0..db {
                for j2 in 0..db {
                    m[(i1 * db + i2, j1 * db + j2)] = z * b.entries[(i2, j2)];
                }
            }
        }
    }
    ComplexOperator { dim, entries: m }
}

/// Matrix exponential of a `ComplexOperator` (scaling-and-squaring with a
/// Padé(13) approximant; relative accuracy better than 1e-10 for norms up
/// to 10).
pub fn matrix_exp(a: &ComplexOperator) -> Result<ComplexOperator> {
    let e = linalg::expm(&a.entries.view())?;
    Ok(ComplexOperator {
        dim: a.dim,
        entries: e,
    })
}

/// Normalized state vector on a [`SystemSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    space: SystemSpace,
    amplitudes: Array1<C64>,
}

impl StateVector {
    /// Basis ket `|level, n⟩`.
    pub fn basis(space: SystemSpace, level: usize, n: usize) -> Result<Self> {
        let idx = space.index_of(level, n)?;
        let mut amp = Array1::zeros(space.dim());
        amp[idx] = C_ONE;
        Ok(Self {
            space,
            amplitudes: amp,
        })
    }

    /// Normalizes the given amplitudes; errors on a zero vector or a
    /// dimension mismatch.
    pub fn from_amplitudes(space: SystemSpace, amplitudes: Array1<C64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(SimError::DimensionMismatch(amplitudes.len(), space.dim()));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return Err(SimError::InvalidState("zero state vector".into()));
        }
        let inv = C64::new(1.0 / norm, 0.0);
        Ok(Self {
            space,
            amplitudes: amplitudes.mapv(|z| z * inv),
        })
    }

    pub fn space(&self) -> SystemSpace {
        self.space
    }

    pub fn amplitudes(&self) -> &Array1<C64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Applies an operator (not normalized afterwards).
    pub fn apply(&self, op: &ComplexOperator) -> Result<Array1<C64>> {
        if op.dim() != self.space.dim() {
            return Err(SimError::DimensionMismatch(op.dim(), self.space.dim()));
        }
        Ok(op.entries.dot(&self.amplitudes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn annihilator_entries_n3() {
        let sp = SystemSpace::three_level(3).unwrap();
        let a = boson_annihilate(&sp);
        assert_eq!(a.get(0, 1), c(1.0));
        assert_eq!(a.get(1, 2), c(2.0f64.sqrt()));
        let mut nonzero = 0;
        for i in 0..3 {
            for j in 0..3 {
                if a.get(i, j) != c(0.0) {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn annihilator_kills_vacuum() {
        let sp = SystemSpace::two_level(4).unwrap();
        let a = boson_annihilate(&sp);
        let mut vac = Array1::zeros(4);
        vac[0] = C_ONE;
        let out = a.entries().dot(&vac);
        assert!(out.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn truncated_commutator_anomaly() {
        // direct 5x5 matrix-multiplication oracle
        let sp = SystemSpace::two_level(5).unwrap();
        let a = boson_annihilate(&sp);
        let ad = boson_create(&sp);
        let comm = &(&a * &ad) - &(&ad * &a);
        // the top corner is exactly -(N-1); N = 5 keeps sqrt(4) exact
        assert_eq!(comm.get(4, 4), c(-4.0));
        for i in 0..4 {
            assert!((comm.get(i, i) - c(1.0)).norm() < 1e-12);
        }
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert_eq!(comm.get(i, j), c(0.0));
                }
            }
        }
    }

    #[test]
    fn atomic_products_exact() {
        // S_ij S_kl = delta_il S_kj over all 81 combinations, exact
        let sp = SystemSpace::three_level(2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let sij = atomic_op(&sp, i, j).unwrap();
                        let skl = atomic_op(&sp, k, l).unwrap();
                        let prod = &sij * &skl;
                        let want = if i == l {
                            atomic_op(&sp, k, j).unwrap()
                        } else {
                            ComplexOperator::zeros(3)
                        };
                        assert_eq!(prod, want, "S_{i}{j} S_{k}{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn atomic_projector_idempotent_and_complete() {
        let sp = SystemSpace::three_level(2).unwrap();
        let s00 = atomic_op(&sp, 0, 0).unwrap();
        assert_eq!(&s00 * &s00, s00);
        let s11 = atomic_op(&sp, 1, 1).unwrap();
        let s22 = atomic_op(&sp, 2, 2).unwrap();
        let sum = &(&s00 + &s11) + &s22;
        assert_eq!(sum, ComplexOperator::identity(3));
    }

    #[test]
    fn atomic_commutator_example() {
        // [S_01, S_10] = S_11 - S_00 via the 3x3 multiplication oracle
        let sp = SystemSpace::three_level(2).unwrap();
        let s01 = atomic_op(&sp, 0, 1).unwrap();
        let s10 = atomic_op(&sp, 1, 0).unwrap();
        assert_eq!(&s01 * &s10, atomic_op(&sp, 1, 1).unwrap());
        assert_eq!(&s10 * &s01, atomic_op(&sp, 0, 0).unwrap());
        let comm = s01.commutator(&s10);
        let want = &atomic_op(&sp, 1, 1).unwrap() - &atomic_op(&sp, 0, 0).unwrap();
        assert_eq!(comm, want);
    }

    #[test]
    fn atomic_out_of_range() {
        let sp = SystemSpace::two_level(2).unwrap();
        assert!(atomic_op(&sp, 0, 2).is_err());
        assert!(atomic_op(&sp, 2, 0).is_err());
    }

    #[test]
    fn tensor_identity_and_dims() {
        let i3 = ComplexOperator::identity(3);
        let i5 = ComplexOperator::identity(5);
        assert_eq!(tensor(&i3, &i5), ComplexOperator::identity(15));
        let sp = SystemSpace::three_level(4).unwrap();
        let a = boson_annihilate(&sp);
        let s01 = atomic_op(&sp, 0, 1).unwrap();
        assert_eq!(tensor(&s01, &a).dim(), 12);
    }

    #[test]
    fn tensor_maps_basis_kets() {
        // (S_01 ⊗ a)|0,1⟩ = |1,0⟩ checked by an explicit 6-dim product
        let sp = SystemSpace::three_level(2).unwrap();
        let s01 = atomic_op(&sp, 0, 1).unwrap();
        let a = boson_annihilate(&sp);
        let op = tensor(&s01, &a);
        let ket = StateVector::basis(sp, 0, 1).unwrap();
        let out = ket.apply(&op).unwrap();
        for (idx, z) in out.iter().enumerate() {
            if idx == sp.index_of(1, 0).unwrap() {
                assert!((z - C_ONE).norm() < 1e-15);
            } else {
                assert_eq!(*z, C_ZERO);
            }
        }
    }

    #[test]
    fn tensor_associative() {
        let sp = SystemSpace::three_level(3).unwrap();
        let a = boson_annihilate(&sp);
        let s02 = atomic_op(&sp, 0, 2).unwrap();
        let n = boson_number(&sp);
        let left = tensor(&tensor(&s02, &a), &n);
        let right = tensor(&s02, &tensor(&a, &n));
        assert_eq!(left, right);
    }

    #[test]
    fn tensor_embedding_commutes() {
        let sp = SystemSpace::three_level(4).unwrap();
        let ea = sp.embed_phonon(&boson_annihilate(&sp)).unwrap();
        let es = sp.embed_atomic(0, 2).unwrap();
        // operators on different factors commute
        let comm = ea.commutator(&es);
        assert_eq!(comm.max_norm(), 0.0);
        // and the product equals the direct tensor
        let direct = tensor(
            &atomic_op(&sp, 0, 2).unwrap(),
            &boson_annihilate(&sp),
        );
        assert_eq!(&es * &ea, direct);
    }

    #[test]
    fn expm_antihermitian_unitary() {
        let sp = SystemSpace::three_level(4).unwrap();
        let x = boson_position(&sp);
        let j = tensor(&atomic_op(&sp, 0, 2).unwrap(), &x.scale(C64::new(0.0, 0.3)));
        let gen = &j - &j.adjoint();
        assert!(gen.is_anti_hermitian(1e-15));
        let u = matrix_exp(&gen).unwrap();
        assert!(u.is_unitary(1e-10));
    }

    #[test]
    fn state_vector_normalized() {
        let sp = SystemSpace::two_level(3).unwrap();
        let amp = Array1::from_vec(vec![c(3.0), c(4.0), C_ZERO, C_ZERO, C_ZERO, C_ZERO]);
        let psi = StateVector::from_amplitudes(sp, amp).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-12);
        assert!((psi.amplitudes()[0] - c(0.6)).norm() < 1e-15);
    }
}

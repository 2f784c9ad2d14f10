//! Hamiltonian builders: the full rotating-frame three-level Raman
//! Hamiltonian, the nonlinear-rotation generator that decouples the upper
//! level, and the effective two-level sideband Hamiltonians, together with
//! the derived effective parameters.
//!
//! All frequencies are angular (rad/s) and ħ = 1 throughout the library;
//! ordinary-frequency inputs are converted at the configuration layer.

use num_complex::Complex64 as C64;

use crate::error::{Result, SimError};
use crate::linalg::C_I;
use crate::operators::{
    atomic_op, boson_annihilate, boson_number, boson_position, matrix_exp, tensor,
    ComplexOperator, SystemSpace,
};

/// Relative window around the trap frequency accepted as "tuned to the
/// sideband". Wide enough to admit deliberate light-shift compensation of
/// the resonance, narrow enough to reject gross mistuning.
pub const SIDEBAND_TUNING_TOL: f64 = 0.02;

/// Laser, trap, and decay parameters of the driven three-level ion.
///
/// `g_a`, `g_b` are complex coupling amplitudes carrying the laser phases;
/// `delta_a`, `delta_b` the detunings from the upper level; `eta_a`,
/// `eta_b` the single-beam Lamb-Dicke parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConfig {
    pub nu: f64,
    pub delta_a: f64,
    pub delta_b: f64,
    pub g_a: C64,
    pub g_b: C64,
    pub gamma_a: f64,
    pub gamma_b: f64,
    pub eta_a: f64,
    pub eta_b: f64,
    pub fock_dim: usize,
}

impl PhysicalConfig {
    /// Checks the perturbative-regime and sign invariants.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("nu", self.nu),
            ("delta_a", self.delta_a),
            ("delta_b", self.delta_b),
            ("gamma_a", self.gamma_a),
            ("gamma_b", self.gamma_b),
            ("eta_a", self.eta_a),
            ("eta_b", self.eta_b),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(SimError::InvalidConfig(format!("{name} is not finite")));
            }
        }
        if self.nu <= 0.0 {
            return Err(SimError::InvalidConfig("nu must be positive".into()));
        }
        if self.gamma_a < 0.0 || self.gamma_b < 0.0 {
            return Err(SimError::InvalidConfig(
                "decay rates must be non-negative".into(),
            ));
        }
        if self.fock_dim < 2 {
            return Err(SimError::InvalidConfig("fock_dim must be at least 2".into()));
        }
        if self.delta_a == 0.0 || self.delta_b == 0.0 {
            return Err(SimError::ZeroDetuning);
        }
        let eps_a = self.g_a.norm() / self.delta_a.abs();
        let eps_b = self.g_b.norm() / self.delta_b.abs();
        if eps_a >= 0.2 || eps_b >= 0.2 {
            return Err(SimError::InvalidConfig(format!(
                "perturbative guard violated: |g/delta| = {:.3}, {:.3} (must stay below 0.2)",
                eps_a, eps_b
            )));
        }
        Ok(())
    }

    fn check_space(&self, space: &SystemSpace, levels: usize) -> Result<()> {
        if space.level_count() != levels {
            return Err(SimError::InvalidSpace(format!(
                "expected {levels}-level space, got {}",
                space.level_count()
            )));
        }
        if space.fock_dim() != self.fock_dim {
            return Err(SimError::DimensionMismatch(space.fock_dim(), self.fock_dim));
        }
        Ok(())
    }
}

/// Derived quantities of the effective two-level model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveParams {
    /// Effective two-level detuning including the intensity shifts.
    pub delta: f64,
    /// Effective Rabi frequency (non-negative; phases absorbed).
    pub omega: f64,
    pub eps_a: C64,
    pub eps_b: C64,
    /// Net Lamb-Dicke parameter `eta_a - eta_b`.
    pub eta: f64,
}

/// Which stationary term of the driven interaction is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SidebandChoice {
    /// Phonon-conserving term; requires tuning `delta ≈ 0`.
    Carrier,
    /// Jaynes-Cummings term (one phonon removed); requires `delta ≈ +nu`.
    Red,
    /// Anti-Jaynes-Cummings term (one phonon added); requires `delta ≈ -nu`.
    Blue,
    /// Full `exp[i eta (a + a†)]` coupling with no rotating-wave selection.
    FullExponential,
}

impl std::fmt::Display for SidebandChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SidebandChoice::Carrier => "carrier",
            SidebandChoice::Red => "red",
            SidebandChoice::Blue => "blue",
            SidebandChoice::FullExponential => "full_exponential",
        };
        write!(f, "{s}")
    }
}

/// Derived effective-model parameters:
/// `delta = Δa − Δb + |g_a|²/Δa − |g_b|²/Δb`,
/// `omega = |g_a g_b| (1/Δa + 1/Δb)`, `eps_l = g_l/Δl`, `eta = eta_a − eta_b`.
pub fn effective_params(cfg: &PhysicalConfig) -> Result<EffectiveParams> {
    if cfg.delta_a == 0.0 || cfg.delta_b == 0.0 {
        return Err(SimError::ZeroDetuning);
    }
    let delta = cfg.delta_a - cfg.delta_b + cfg.g_a.norm_sqr() / cfg.delta_a
        - cfg.g_b.norm_sqr() / cfg.delta_b;
    let omega = (cfg.g_a.norm() * cfg.g_b.norm() * (1.0 / cfg.delta_a + 1.0 / cfg.delta_b)).abs();
    Ok(EffectiveParams {
        delta,
        omega,
        eps_a: cfg.g_a / cfg.delta_a,
        eps_b: cfg.g_b / cfg.delta_b,
        eta: cfg.eta_a - cfg.eta_b,
    })
}

/// Position-dependent coupling `z · exp(i eta (a + a†))` on the phonon
/// factor.
fn coupling_exponential(space: &SystemSpace, z: C64, eta: f64) -> Result<ComplexOperator> {
    let x = boson_position(space);
    let e = matrix_exp(&x.scale(C_I * eta))?;
    Ok(e.scale(z))
}

/// Full rotating-frame three-level Hamiltonian (ħ = 1):
/// `H = ν a†a − Δa S_00 − Δb S_11 + [g_a(x̂) S_02 + h.c.] + [g_b(x̂) S_12 + h.c.]`
/// with `g_l(x̂) = g_l exp(i eta_l (a + a†))`. Hermitian by construction.
pub fn build_full_hamiltonian(
    cfg: &PhysicalConfig,
    space: &SystemSpace,
) -> Result<ComplexOperator> {
    cfg.validate()?;
    cfg.check_space(space, 3)?;
    let eye_ph = ComplexOperator::identity(space.fock_dim());

    let mut h = tensor(&ComplexOperator::identity(3), &boson_number(space))
        .scale(C64::new(cfg.nu, 0.0));
    h = &h + &tensor(&atomic_op(space, 0, 0)?, &eye_ph).scale(C64::new(-cfg.delta_a, 0.0));
    h = &h + &tensor(&atomic_op(space, 1, 1)?, &eye_ph).scale(C64::new(-cfg.delta_b, 0.0));

    let ga = coupling_exponential(space, cfg.g_a, cfg.eta_a)?;
    let gb = coupling_exponential(space, cfg.g_b, cfg.eta_b)?;
    let va = tensor(&atomic_op(space, 0, 2)?, &ga);
    let vb = tensor(&atomic_op(space, 1, 2)?, &gb);
    h = &h + &(&va + &va.adjoint());
    h = &h + &(&vb + &vb.adjoint());
    Ok(h)
}

/// Anti-Hermitian generator of the nonlinear rotation:
/// `J = [ε_a(x̂) S_02 − ε_a*(x̂) S_20] + [ε_b(x̂) S_12 − ε_b*(x̂) S_21]`
/// with `ε_l(x̂) = (g_l/Δl) exp(i eta_l (a + a†))`.
pub fn build_rotation_generator(
    cfg: &PhysicalConfig,
    space: &SystemSpace,
) -> Result<ComplexOperator> {
    cfg.validate()?;
    cfg.check_space(space, 3)?;
    let p = effective_params(cfg)?;
    let ea = coupling_exponential(space, p.eps_a, cfg.eta_a)?;
    let eb = coupling_exponential(space, p.eps_b, cfg.eta_b)?;
    let ja = tensor(&atomic_op(space, 0, 2)?, &ea);
    let jb = tensor(&atomic_op(space, 1, 2)?, &eb);
    Ok(&(&ja - &ja.adjoint()) + &(&jb - &jb.adjoint()))
}

/// Effective two-level interaction Hamiltonian for the selected sideband
/// (ħ = 1, interaction picture):
///
/// * red:   `−i η Ω/2 (a S_01 − a† S_10)`
/// * blue:  `−i η Ω/2 (a† S_01 − a S_10)`
/// * carrier: `−Ω/2 (S_01 + S_10)`
/// * full exponential: `−Ω/2 (exp[i η (a+a†)] S_01 + h.c.)`
///
/// Red/blue/carrier require the corresponding tuning of the effective
/// detuning (within [`SIDEBAND_TUNING_TOL`] of the trap frequency) and
/// error out otherwise.
pub fn build_effective_hamiltonian(
    cfg: &PhysicalConfig,
    space: &SystemSpace,
    sideband: SidebandChoice,
) -> Result<ComplexOperator> {
    cfg.validate()?;
    cfg.check_space(space, 2)?;
    let p = effective_params(cfg)?;
    let tol = SIDEBAND_TUNING_TOL * cfg.nu;
    let tuning_err = |target: f64| -> Result<()> {
        let miss = (p.delta - target).abs();
        if miss > tol {
            return Err(SimError::SidebandMismatch(format!(
                "effective detuning {:.6e} rad/s is not within {:.1e} of target {:.6e}",
                p.delta, tol, target
            )));
        }
        Ok(())
    };

    let s01 = atomic_op(space, 0, 1)?;
    let s10 = atomic_op(space, 1, 0)?;
    let a = boson_annihilate(space);
    let half = C64::new(0.5 * p.omega, 0.0);

    let h = match sideband {
        SidebandChoice::Red => {
            tuning_err(cfg.nu)?;
            let jc = &tensor(&s01, &a) - &tensor(&s10, &a.adjoint());
            jc.scale(-C_I * C64::new(p.eta, 0.0) * half)
        }
        SidebandChoice::Blue => {
            tuning_err(-cfg.nu)?;
            let ajc = &tensor(&s01, &a.adjoint()) - &tensor(&s10, &a);
            ajc.scale(-C_I * C64::new(p.eta, 0.0) * half)
        }
        SidebandChoice::Carrier => {
            tuning_err(0.0)?;
            let eye = ComplexOperator::identity(space.fock_dim());
            (&tensor(&s01, &eye) + &tensor(&s10, &eye)).scale(-half)
        }
        SidebandChoice::FullExponential => {
            let e = coupling_exponential(space, C64::new(1.0, 0.0), p.eta)?;
            let v = tensor(&s01, &e);
            (&v + &v.adjoint()).scale(-half)
        }
    };
    Ok(h)
}

/// Second-order reference Hamiltonian on the two-level manifold: the
/// number and level terms with their intensity shifts plus the full
/// exponential interaction,
/// `ν a†a − (Δa + |g_a|²/Δa) S_00 − (Δb + |g_b|²/Δb) S_11 + H_int`.
///
/// This is the expected image of the full Hamiltonian under the exact
/// rotation, up to corrections one order higher in `ε`; used by the
/// transformation-fidelity checks.
pub fn build_effective_reference(
    cfg: &PhysicalConfig,
    space: &SystemSpace,
) -> Result<ComplexOperator> {
    cfg.validate()?;
    cfg.check_space(space, 2)?;
    let eye_ph = ComplexOperator::identity(space.fock_dim());
    let shift_a = cfg.delta_a + cfg.g_a.norm_sqr() / cfg.delta_a;
    let shift_b = cfg.delta_b + cfg.g_b.norm_sqr() / cfg.delta_b;

    let mut h = tensor(&ComplexOperator::identity(2), &boson_number(space))
        .scale(C64::new(cfg.nu, 0.0));
    h = &h + &tensor(&atomic_op(space, 0, 0)?, &eye_ph).scale(C64::new(-shift_a, 0.0));
    h = &h + &tensor(&atomic_op(space, 1, 1)?, &eye_ph).scale(C64::new(-shift_b, 0.0));
    h = &h + &build_effective_hamiltonian(cfg, space, SidebandChoice::FullExponential)?;
    Ok(h)
}

/// Numerically exact similarity transform `exp(J) · H · exp(J)†`.
///
/// Valid for any detunings; the truncated commutator series is never used.
pub fn exact_transform(h: &ComplexOperator, j: &ComplexOperator) -> Result<ComplexOperator> {
    if h.dim() != j.dim() {
        return Err(SimError::DimensionMismatch(h.dim(), j.dim()));
    }
    let t = matrix_exp(j)?;
    Ok(&(&t * h) * &t.adjoint())
}

/// Restriction of a three-level-space operator to the `{|0⟩, |1⟩}`
/// manifold (the leading `2N × 2N` block in the fixed basis ordering).
pub fn project_levels_01(op: &ComplexOperator, space: &SystemSpace) -> Result<ComplexOperator> {
    if space.level_count() != 3 || op.dim() != space.dim() {
        return Err(SimError::DimensionMismatch(op.dim(), space.dim()));
    }
    let m = 2 * space.fock_dim();
    let block = op
        .entries()
        .slice(ndarray::s![0..m, 0..m])
        .to_owned();
    ComplexOperator::from_array(block)
}

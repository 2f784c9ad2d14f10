//! Simulation library for a single three-level trapped ion driven by two
//! Raman beams with radiative damping.
//!
//! Two dynamical models are provided on truncated Fock spaces:
//!
//! * the full three-level Lindblad master equation in the laser rotating
//!   frame, with spontaneous decay out of the upper level, and
//! * the effective two-level master equation obtained from a nonlinear
//!   rotation that decouples the upper level, with sideband (Jaynes-Cummings
//!   type) Hamiltonians, dephasing/mixing channels, and the first-order
//!   crossed dissipator terms.
//!
//! Supporting machinery covers dense operator algebra ([`operators`]),
//! Hamiltonian and transformation builders ([`model`]), master-equation
//! right-hand sides ([`lindblad`]), a fixed-step RK4 integrator with
//! conservation monitors ([`integrator`]), state preparation and observables
//! ([`states`]), damped-cosine and power-law fits ([`fitting`]), and the
//! scenario / configuration layer used by the CLI ([`scenario`]).
//!
//! See the crate examples for end-to-end usage of each capability.

pub mod error;
pub mod fitting;
pub mod integrator;
pub mod lindblad;
pub mod linalg;
pub mod model;
pub mod operators;
pub mod scenario;
pub mod states;

pub use error::{ConfigError, Result, SimError};
pub use integrator::{integrate, step_rk4, IntegrationPlan, MonitorFlags, Trajectory};
pub use lindblad::{
    crossed_apply, lindblad_apply, rhs, transform_jump_operators, CrossedForm, CrossedSpec,
    DensityMatrix, JumpTransform, MasterEquation, ModelTag,
};
pub use model::{
    build_effective_hamiltonian, build_effective_reference, build_full_hamiltonian,
    build_rotation_generator, effective_params, exact_transform, project_levels_01,
    EffectiveParams, PhysicalConfig, SidebandChoice,
};
pub use operators::{
    atomic_op, boson_annihilate, boson_create, boson_number, boson_position, matrix_exp, tensor,
    ComplexOperator, StateVector, SystemSpace,
};
pub use states::{coherence_01, coherent_state, fock_state, mean_phonon, p_down, p_up};
pub use fitting::{
    analyze_oscillations, fit_damped_cosine, fit_power_law, FitResult, OscillationAnalysis,
    PowerLawResult,
};
pub use scenario::{
    parse_config, run_crossmodel, run_scenario, CrossmodelReport, InitialState, ModelChoice,
    Preset, ScenarioConfig, ScenarioReport,
};

//! The programmable-spring model of an HSA actuator.
//!
//! Four quantities describe a twisted HSA as a spring: blocked force
//! `F_b(theta)`, holding torque `tau_h(theta)`, spring constant `k(theta)`,
//! and minimum energy length `L(theta)`. For designs with full fitted
//! models these live in a [`SpringFit`]; where only sparse measured points
//! exist they live in [`AnchorCurve`]s assembled into an [`AnchorModel`].
//! Both evaluate through [`ActuatorModel`].
//!
//! Model forms:
//!
//! - blocked force: `F_b = A theta^2 + B theta` (zero at zero twist)
//! - holding torque: `tau_h = D_tau theta^2 + C_tau theta` (`D_tau = 0`
//!   for the closed designs, which are linear)
//! - spring constant: `k = C_k theta + k0`
//! - minimum energy length: `L = C_l theta + L0`
//!
//! No operation extrapolates beyond a model's fitted twist range; outside
//! it the structure buckles or leaves the auxetic regime, so out-of-range
//! queries are hard errors.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::design_space::{rotation_effect, Handedness, HsaDesign, LengthEffect, RotationSense};

/// Errors from model evaluation and construction.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// Query angle outside the model's fitted twist range.
    ThetaOutOfRange { theta: f64, min: f64, max: f64 },
    /// Requested length is not reachable on the valid twist interval.
    LengthUnreachable { target: f64, min: f64, max: f64 },
    /// The twist/length coupling is zero, so no twist maps to the length.
    DegenerateCoupling,
    /// A fit parameter set violates a model invariant.
    InvalidFit(&'static str),
    /// An anchor curve violates a structural invariant.
    InvalidCurve(&'static str),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::ThetaOutOfRange { theta, min, max } => {
                write!(f, "theta {theta} deg outside fitted range [{min}, {max}] deg")
            }
            ModelError::LengthUnreachable { target, min, max } => {
                write!(f, "length {target} mm unreachable; achievable [{min}, {max}] mm")
            }
            ModelError::DegenerateCoupling => {
                f.write_str("twist/length coupling is zero; length is independent of twist")
            }
            ModelError::InvalidFit(msg) => write!(f, "invalid spring fit: {msg}"),
            ModelError::InvalidCurve(msg) => write!(f, "invalid anchor curve: {msg}"),
        }
    }
}

impl core::error::Error for ModelError {}

// ---------------------------------------------------------------------------
// Fitted model
// ---------------------------------------------------------------------------

/// Fitted programmable-spring parameters for one design.
///
/// Constants are stored exactly as fitted, in degree units, including their
/// signs: blocked-force readings follow the load-cell convention (tension
/// positive, compression negative), so a closed HSA pushing against the
/// fixture reads negative.
#[derive(Debug, Clone, PartialEq)]
pub struct SpringFit {
    pub design: HsaDesign,
    /// Blocked force quadratic term (N/deg^2).
    pub a: f64,
    /// Blocked force linear term (N/deg).
    pub b: f64,
    /// Holding torque linear term (N*mm/deg).
    pub c_tau: f64,
    /// Holding torque quadratic term (N*mm/deg^2); zero for linear models.
    pub d_tau: f64,
    /// Spring constant slope (N/mm per deg).
    pub c_k: f64,
    /// Rest spring constant (N/mm).
    pub k0: f64,
    /// Twist/length coupling (mm/deg).
    pub c_l: f64,
    /// Minimum energy length at zero twist (mm).
    pub l0: f64,
    pub r2_blocked: f64,
    pub r2_torque: f64,
    pub r2_k: f64,
    pub r2_length: f64,
    /// Valid twist interval (deg).
    pub theta_min: f64,
    pub theta_max: f64,
}

impl SpringFit {
    /// Validate the fit invariants; called by constructors, file loaders,
    /// and the fitting pipeline.
    pub fn validate(&self) -> Result<(), ModelError> {
        self.design
            .validate()
            .map_err(|_| ModelError::InvalidFit("invalid design reference"))?;
        if !(self.k0 > 0.0) {
            return Err(ModelError::InvalidFit("k0 must be positive"));
        }
        if !(self.l0 > 0.0) {
            return Err(ModelError::InvalidFit("L0 must be positive"));
        }
        if self.theta_min > self.theta_max {
            return Err(ModelError::InvalidFit("theta_min exceeds theta_max"));
        }
        for r2 in [self.r2_blocked, self.r2_torque, self.r2_k, self.r2_length] {
            if !(0.0..=1.0).contains(&r2) {
                return Err(ModelError::InvalidFit("R^2 outside [0, 1]"));
            }
        }
        // The spring constant is affine in theta, so positivity at both
        // endpoints gives positivity over the whole interval.
        if self.c_k * self.theta_min + self.k0 <= 0.0
            || self.c_k * self.theta_max + self.k0 <= 0.0
        {
            return Err(ModelError::InvalidFit(
                "spring constant must stay positive over the twist range",
            ));
        }
        Ok(())
    }

    fn check_theta(&self, theta: f64) -> Result<(), ModelError> {
        if theta < self.theta_min || theta > self.theta_max || !theta.is_finite() {
            return Err(ModelError::ThetaOutOfRange {
                theta,
                min: self.theta_min,
                max: self.theta_max,
            });
        }
        Ok(())
    }

    /// Blocked force at twist `theta` (N, signed): the force the actuator
    /// exerts when held at its printed length. Exactly zero at zero twist.
    pub fn blocked_force(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        Ok(self.a * theta * theta + self.b * theta)
    }

    /// Holding torque at twist `theta` (N*mm): the moment required to hold
    /// the twist with the actuator at its minimum energy length.
    pub fn holding_torque(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        Ok(self.d_tau * theta * theta + self.c_tau * theta)
    }

    /// Spring constant at twist `theta` (N/mm).
    pub fn spring_constant(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        Ok(self.c_k * theta + self.k0)
    }

    /// Minimum energy length at twist `theta` (mm): the length at which
    /// force is minimized, i.e. the actuator's free length.
    pub fn min_energy_length(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        Ok(self.c_l * theta + self.l0)
    }

    /// Spring force when held at `length` under twist `theta` (N, signed;
    /// positive is tensile, pulling back toward the free length).
    pub fn force_at(&self, theta: f64, length: f64) -> Result<f64, ModelError> {
        let k = self.spring_constant(theta)?;
        let free = self.min_energy_length(theta)?;
        Ok(k * (length - free))
    }

    /// Invert the length model: the twist at which the free length equals
    /// `target_length`.
    pub fn theta_for_length(&self, target_length: f64) -> Result<f64, ModelError> {
        if self.c_l == 0.0 {
            return Err(ModelError::DegenerateCoupling);
        }
        let at_min = self.c_l * self.theta_min + self.l0;
        let at_max = self.c_l * self.theta_max + self.l0;
        let (lo, hi) = if at_min <= at_max {
            (at_min, at_max)
        } else {
            (at_max, at_min)
        };
        if target_length < lo || target_length > hi {
            return Err(ModelError::LengthUnreachable {
                target: target_length,
                min: lo,
                max: hi,
            });
        }
        let theta = (target_length - self.l0) / self.c_l;
        Ok(theta.clamp(self.theta_min, self.theta_max))
    }

    /// Largest-magnitude endpoint of the valid twist interval.
    pub fn theta_extreme(&self) -> f64 {
        if self.theta_max.abs() >= self.theta_min.abs() {
            self.theta_max
        } else {
            self.theta_min
        }
    }
}

// ---------------------------------------------------------------------------
// Consistency diagnostic
// ---------------------------------------------------------------------------

/// One grid point of the model self-consistency diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyPoint {
    pub theta: f64,
    /// |F_b(theta)| from the blocked-force fit.
    pub blocked_magnitude: f64,
    /// |k(theta) * C_l * theta|: the blocked force implied by the spring
    /// picture (stiffness times suppressed length change).
    pub spring_route_magnitude: f64,
    /// |difference| / |F_b|, or 0 when both routes vanish.
    pub relative_discrepancy: f64,
}

/// Result of [`consistency_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub points: Vec<ConsistencyPoint>,
    pub max_relative_discrepancy: f64,
}

/// Compare the directly fitted blocked force against the spring-route
/// prediction `k(theta) * C_l * theta` on a uniform grid of at least two
/// samples over the fit's twist range.
///
/// This is a diagnostic, not a validator: the two models are fitted
/// independently and the measured designs disagree by on the order of 10%.
/// Points where the fitted blocked force vanishes away from the shared zero
/// at the origin report a huge discrepancy by construction.
pub fn consistency_report(fit: &SpringFit, samples: usize) -> ConsistencyReport {
    let n = samples.max(2);
    let span = fit.theta_max - fit.theta_min;
    let mut points = Vec::with_capacity(n);
    let mut max_rel: f64 = 0.0;
    for i in 0..n {
        let theta = fit.theta_min + span * (i as f64) / ((n - 1) as f64);
        let blocked = (fit.a * theta * theta + fit.b * theta).abs();
        let spring_route = ((fit.c_k * theta + fit.k0) * fit.c_l * theta).abs();
        let rel = if blocked <= 1e-12 && spring_route <= 1e-12 {
            0.0
        } else {
            (spring_route - blocked).abs() / blocked.max(1e-12)
        };
        max_rel = max_rel.max(rel);
        points.push(ConsistencyPoint {
            theta,
            blocked_magnitude: blocked,
            spring_route_magnitude: spring_route,
            relative_discrepancy: rel,
        });
    }
    ConsistencyReport {
        points,
        max_relative_discrepancy: max_rel,
    }
}

// ---------------------------------------------------------------------------
// Force classification
// ---------------------------------------------------------------------------

/// Direction of the force an actuator applies at its ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForceDirection {
    /// The actuator pushes its ends apart (reads as compression, negative).
    Push,
    /// The actuator pulls its ends together (reads as tension, positive).
    Pull,
}

impl ForceDirection {
    /// Classify a signed load-cell reading.
    pub fn from_reading(force: f64) -> Option<ForceDirection> {
        if force < 0.0 {
            Some(ForceDirection::Push)
        } else if force > 0.0 {
            Some(ForceDirection::Pull)
        } else {
            None
        }
    }

    /// The direction a twist drives for a given handedness: a twist that
    /// extends the structure pushes when blocked, one that shortens it
    /// pulls. Zero twist drives nothing.
    pub fn from_twist(handedness: Handedness, theta: f64) -> Option<ForceDirection> {
        if theta == 0.0 {
            return None;
        }
        let sense = if theta > 0.0 {
            RotationSense::Counterclockwise
        } else {
            RotationSense::Clockwise
        };
        Some(match rotation_effect(handedness, sense) {
            LengthEffect::Extends => ForceDirection::Push,
            LengthEffect::Shortens => ForceDirection::Pull,
        })
    }
}

/// A signed force reading classified into magnitude and direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifiedForce {
    pub magnitude: f64,
    pub direction: Option<ForceDirection>,
}

/// Classify a signed blocked-force value using its sign, falling back to
/// the handedness-consistent twist direction for an exactly zero reading.
///
/// Near zero twist the stored-verbatim fit constants can produce readings
/// whose sign disagrees with the twist direction (the 12-row closed fit has
/// a positive linear term); the reading's sign wins, since it is what the
/// load cell would show.
pub fn classify_force(handedness: Handedness, theta: f64, force: f64) -> ClassifiedForce {
    ClassifiedForce {
        magnitude: force.abs(),
        direction: ForceDirection::from_reading(force)
            .or_else(|| ForceDirection::from_twist(handedness, theta)),
    }
}

// ---------------------------------------------------------------------------
// Anchor curves
// ---------------------------------------------------------------------------

/// Unit tag carried by an anchor curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnchorUnit {
    ForceN,
    TorqueNmm,
    StiffnessNPerMm,
    LengthMm,
}

impl AnchorUnit {
    pub fn label(self) -> &'static str {
        match self {
            AnchorUnit::ForceN => "force_N",
            AnchorUnit::TorqueNmm => "torque_Nmm",
            AnchorUnit::StiffnessNPerMm => "stiffness_NperMM",
            AnchorUnit::LengthMm => "length_mm",
        }
    }

    pub fn parse_label(s: &str) -> Option<Self> {
        match s {
            "force_N" => Some(AnchorUnit::ForceN),
            "torque_Nmm" => Some(AnchorUnit::TorqueNmm),
            "stiffness_NperMM" => Some(AnchorUnit::StiffnessNPerMm),
            "length_mm" => Some(AnchorUnit::LengthMm),
            _ => None,
        }
    }
}

impl fmt::Display for AnchorUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Piecewise-linear curve through sparse measured anchors, used where only
/// a handful of published points exist instead of fit constants.
#[derive(Debug, Clone, PartialEq)]
pub struct AnchorCurve {
    breakpoints: Vec<(f64, f64)>,
    unit: AnchorUnit,
}

impl AnchorCurve {
    /// Build a curve from `(theta, value)` breakpoints with strictly
    /// increasing `theta`; at least two are required.
    pub fn new(breakpoints: Vec<(f64, f64)>, unit: AnchorUnit) -> Result<Self, ModelError> {
        if breakpoints.len() < 2 {
            return Err(ModelError::InvalidCurve("fewer than two breakpoints"));
        }
        for pair in breakpoints.windows(2) {
            if !(pair[0].0 < pair[1].0) {
                return Err(ModelError::InvalidCurve(
                    "breakpoint thetas must be strictly increasing",
                ));
            }
        }
        if breakpoints.iter().any(|(t, v)| !t.is_finite() || !v.is_finite()) {
            return Err(ModelError::InvalidCurve("non-finite breakpoint"));
        }
        Ok(AnchorCurve { breakpoints, unit })
    }

    pub fn unit(&self) -> AnchorUnit {
        self.unit
    }

    pub fn breakpoints(&self) -> &[(f64, f64)] {
        &self.breakpoints
    }

    pub fn theta_min(&self) -> f64 {
        self.breakpoints[0].0
    }

    pub fn theta_max(&self) -> f64 {
        self.breakpoints[self.breakpoints.len() - 1].0
    }

    /// Linear interpolation between the neighbouring breakpoints; exact at
    /// breakpoints; no extrapolation.
    pub fn value_at(&self, theta: f64) -> Result<f64, ModelError> {
        if !theta.is_finite() || theta < self.theta_min() || theta > self.theta_max() {
            return Err(ModelError::ThetaOutOfRange {
                theta,
                min: self.theta_min(),
                max: self.theta_max(),
            });
        }
        // Exact hits first so breakpoints reproduce verbatim.
        for &(t, v) in &self.breakpoints {
            if t == theta {
                return Ok(v);
            }
        }
        let seg = self
            .breakpoints
            .windows(2)
            .find(|pair| pair[0].0 < theta && theta < pair[1].0)
            .expect("theta inside span but no bracketing segment");
        let (t0, v0) = seg[0];
        let (t1, v1) = seg[1];
        Ok(v0 + (v1 - v0) * (theta - t0) / (t1 - t0))
    }

    /// Minimum and maximum value over the span (attained at breakpoints for
    /// a piecewise-linear curve).
    pub fn value_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &(_, v) in &self.breakpoints {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }
}

/// Convenience free function mirroring [`AnchorCurve::value_at`].
pub fn anchor_value(curve: &AnchorCurve, theta: f64) -> Result<f64, ModelError> {
    curve.value_at(theta)
}

// ---------------------------------------------------------------------------
// Anchor-based design models
// ---------------------------------------------------------------------------

/// Holding-torque law of an anchor-based model.
#[derive(Debug, Clone, PartialEq)]
pub enum TorqueLaw {
    /// `tau = d_tau theta^2 + c_tau theta`, through the origin.
    ThroughOriginQuadratic { d_tau: f64, c_tau: f64 },
    /// Interpolated from sparse anchors.
    Curve(AnchorCurve),
}

/// A design characterised by sparse anchors: a blocked-force curve, a
/// torque law, a stiffness curve, and a linear length model.
#[derive(Debug, Clone, PartialEq)]
pub struct AnchorModel {
    pub design: HsaDesign,
    pub force: AnchorCurve,
    pub torque: TorqueLaw,
    pub stiffness: AnchorCurve,
    /// Twist/length coupling (mm/deg) of the linear length model.
    pub c_l: f64,
    /// Free length at zero twist (mm).
    pub l0: f64,
    pub theta_min: f64,
    pub theta_max: f64,
}

impl AnchorModel {
    pub fn validate(&self) -> Result<(), ModelError> {
        self.design
            .validate()
            .map_err(|_| ModelError::InvalidFit("invalid design reference"))?;
        if self.theta_min > self.theta_max {
            return Err(ModelError::InvalidFit("theta_min exceeds theta_max"));
        }
        if !(self.l0 > 0.0) {
            return Err(ModelError::InvalidFit("L0 must be positive"));
        }
        if self.force.unit() != AnchorUnit::ForceN {
            return Err(ModelError::InvalidCurve("force curve must carry force_N"));
        }
        if self.stiffness.unit() != AnchorUnit::StiffnessNPerMm {
            return Err(ModelError::InvalidCurve(
                "stiffness curve must carry stiffness_NperMM",
            ));
        }
        if let TorqueLaw::Curve(c) = &self.torque {
            if c.unit() != AnchorUnit::TorqueNmm {
                return Err(ModelError::InvalidCurve("torque curve must carry torque_Nmm"));
            }
            if c.theta_min() > self.theta_min || c.theta_max() < self.theta_max {
                return Err(ModelError::InvalidCurve(
                    "torque curve does not span the model twist range",
                ));
            }
        }
        for curve in [&self.force, &self.stiffness] {
            if curve.theta_min() > self.theta_min || curve.theta_max() < self.theta_max {
                return Err(ModelError::InvalidCurve(
                    "anchor curve does not span the model twist range",
                ));
            }
        }
        Ok(())
    }

    fn check_theta(&self, theta: f64) -> Result<(), ModelError> {
        if theta < self.theta_min || theta > self.theta_max || !theta.is_finite() {
            return Err(ModelError::ThetaOutOfRange {
                theta,
                min: self.theta_min,
                max: self.theta_max,
            });
        }
        Ok(())
    }

    pub fn blocked_force(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        self.force.value_at(theta)
    }

    pub fn holding_torque(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        match &self.torque {
            TorqueLaw::ThroughOriginQuadratic { d_tau, c_tau } => {
                Ok(d_tau * theta * theta + c_tau * theta)
            }
            TorqueLaw::Curve(c) => c.value_at(theta),
        }
    }

    pub fn spring_constant(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        self.stiffness.value_at(theta)
    }

    pub fn min_energy_length(&self, theta: f64) -> Result<f64, ModelError> {
        self.check_theta(theta)?;
        Ok(self.c_l * theta + self.l0)
    }
}

/// A design model of either kind, presenting one evaluation surface.
#[derive(Debug, Clone, PartialEq)]
pub enum ActuatorModel {
    Fitted(SpringFit),
    Anchored(AnchorModel),
}

impl ActuatorModel {
    pub fn design(&self) -> &HsaDesign {
        match self {
            ActuatorModel::Fitted(f) => &f.design,
            ActuatorModel::Anchored(a) => &a.design,
        }
    }

    pub fn id(&self) -> String {
        self.design().id()
    }

    pub fn theta_min(&self) -> f64 {
        match self {
            ActuatorModel::Fitted(f) => f.theta_min,
            ActuatorModel::Anchored(a) => a.theta_min,
        }
    }

    pub fn theta_max(&self) -> f64 {
        match self {
            ActuatorModel::Fitted(f) => f.theta_max,
            ActuatorModel::Anchored(a) => a.theta_max,
        }
    }

    pub fn blocked_force(&self, theta: f64) -> Result<f64, ModelError> {
        match self {
            ActuatorModel::Fitted(f) => f.blocked_force(theta),
            ActuatorModel::Anchored(a) => a.blocked_force(theta),
        }
    }

    pub fn holding_torque(&self, theta: f64) -> Result<f64, ModelError> {
        match self {
            ActuatorModel::Fitted(f) => f.holding_torque(theta),
            ActuatorModel::Anchored(a) => a.holding_torque(theta),
        }
    }

    pub fn spring_constant(&self, theta: f64) -> Result<f64, ModelError> {
        match self {
            ActuatorModel::Fitted(f) => f.spring_constant(theta),
            ActuatorModel::Anchored(a) => a.spring_constant(theta),
        }
    }

    pub fn min_energy_length(&self, theta: f64) -> Result<f64, ModelError> {
        match self {
            ActuatorModel::Fitted(f) => f.min_energy_length(theta),
            ActuatorModel::Anchored(a) => a.min_energy_length(theta),
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        match self {
            ActuatorModel::Fitted(f) => f.validate(),
            ActuatorModel::Anchored(a) => a.validate(),
        }
    }
}

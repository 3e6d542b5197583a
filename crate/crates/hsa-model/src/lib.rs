//! Models of handed shearing auxetic (HSA) actuators as programmable springs.
//!
//! An HSA is a cylinder tiled with shearing auxetic cells. Twisting one end
//! by an angle `theta` drives the structure along its auxetic trajectory,
//! changing its free length and stiffness. This crate treats the actuator as
//! a spring whose rest length and spring constant are functions of `theta`
//! and of two design parameters: the trajectory point frozen in at
//! fabrication (closed, semi-open, open) and the number of vertically
//! stacked cell rows.
//!
//! The crate is `no_std` (with `alloc`) and split into five areas:
//!
//! - [`design_space`]: design parameters, tabulated test envelopes, the
//!   classical coil-spring baseline.
//! - [`spring_model`]: evaluation of fitted blocked-force / torque /
//!   stiffness / length models and sparse anchor curves.
//! - [`fitting`]: cycle segmentation, aggregation, and the least-squares
//!   fit families that produce a [`spring_model::SpringFit`] from test data.
//! - [`relaxation`]: viscoelastic stress-relaxation models (plateau plus
//!   exponential modes) and their fitting.
//! - [`motor_select`]: the inverse problem — required twist and torque for
//!   an actuation requirement, and servo ranking.
//!
//! # Units and conventions
//!
//! Angles are degrees, lengths millimetres, forces newtons, torques
//! newton-millimetres, times seconds. Positive `theta` is a counterclockwise
//! rotation of the driven end; for a left-handed HSA this extends the
//! structure. Forces follow the load-cell convention of the source data:
//! tension (the actuator pulling its ends together) is positive, compression
//! (the actuator pushing outward) is negative. See
//! [`spring_model::ForceDirection`] for the push/pull classification.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod design_space;
pub mod fitting;
pub mod motor_select;
pub mod relaxation;
pub mod spring_model;
pub mod synth;

pub(crate) mod linalg;

pub mod presets;

pub use design_space::{Handedness, HsaDesign, RotationSense, TrajectoryPoint};
pub use spring_model::{ActuatorModel, AnchorCurve, AnchorModel, SpringFit};

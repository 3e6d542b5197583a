//! Measured models shipped with the crate.
//!
//! The five closed designs carry full fitted constants from the row study;
//! the open and semi-open designs are characterised by sparse anchors plus
//! a fitted torque quadratic (open) and a linear length model. The stiffness
//! and off-published force anchors for the semi-open and open designs are
//! qualitative, figure-shaped values chosen to respect the measured band
//! ordering (open stiffer than semi-open stiffer than closed everywhere)
//! and the published extremes; treat them as illustrative, not calibrated.

use alloc::vec;
use alloc::vec::Vec;

use crate::design_space::{HsaDesign, TrajectoryPoint};
use crate::spring_model::{
    ActuatorModel, AnchorCurve, AnchorModel, AnchorUnit, SpringFit, TorqueLaw,
};

/// Open-design holding-torque quadratic `(d_tau, c_tau)` in N*mm/deg^2 and
/// N*mm/deg.
pub const OPEN_TORQUE_QUADRATIC: (f64, f64) = (-1.219e-4, 0.1834);

/// Measured holding-force decay of a closed 8-row build (25.4 mm diameter)
/// held at 30 mm extension: `(time s, force N)` with t = 0 at the force
/// peak. The force ultimately drops 45% over the 20 minute hold.
pub const HOLD_TEST_CLOSED_8ROW: [(f64, f64); 6] = [
    (0.0, 16.3),
    (0.1, 15.6),
    (0.5, 15.0),
    (1.0, 14.6),
    (5.0, 13.2),
    (1200.0, 8.9),
];

/// Row-study `(rows, k0)` pairs: rest-state spring constant versus row
/// count for the closed designs.
pub const ROW_REST_STIFFNESS: [(f64, f64); 5] = [
    (4.0, 1.664),
    (6.0, 0.7747),
    (8.0, 0.470),
    (10.0, 0.4339),
    (12.0, 0.3576),
];

struct RowFit {
    rows: u32,
    a: f64,
    b: f64,
    r2_blocked: f64,
    c_tau: f64,
    r2_torque: f64,
    c_k: f64,
    k0: f64,
    r2_k: f64,
    c_l: f64,
    l0: f64,
    r2_length: f64,
}

// Fitted constants for the closed row study, stored verbatim (including
// the positive 12-row linear force term). Twist range 0..180 deg.
const ROW_FITS: [RowFit; 5] = [
    RowFit {
        rows: 4,
        a: -4.2339e-4,
        b: -0.0903,
        r2_blocked: 0.9988,
        c_tau: 0.9545,
        r2_torque: 0.999,
        c_k: 0.0122,
        k0: 1.6640,
        r2_k: 0.977,
        c_l: 0.0531,
        l0: 74.8555,
        r2_length: 0.993,
    },
    RowFit {
        rows: 6,
        a: -3.3056e-4,
        b: -0.0228,
        r2_blocked: 0.9955,
        c_tau: 0.4770,
        r2_torque: 0.993,
        c_k: 0.0028,
        k0: 0.7747,
        r2_k: 0.902,
        c_l: 0.0664,
        l0: 88.5024,
        r2_length: 0.989,
    },
    RowFit {
        rows: 8,
        a: -1.4010e-5,
        b: -0.0329,
        r2_blocked: 0.9909,
        c_tau: 0.3521,
        r2_torque: 0.999,
        c_k: 0.0018,
        k0: 0.4700,
        r2_k: 0.906,
        c_l: 0.0653,
        l0: 99.7678,
        r2_length: 0.996,
    },
    RowFit {
        rows: 10,
        a: -8.4170e-5,
        b: -0.0194,
        r2_blocked: 0.9917,
        c_tau: 0.2899,
        r2_torque: 0.999,
        c_k: 7.1581e-4,
        k0: 0.4339,
        r2_k: 0.713,
        c_l: 0.0653,
        l0: 111.7795,
        r2_length: 0.997,
    },
    RowFit {
        rows: 12,
        a: -3.1436e-4,
        b: 0.0115,
        r2_blocked: 0.9878,
        c_tau: 0.2039,
        r2_torque: 0.999,
        c_k: 2.6294e-4,
        k0: 0.3576,
        r2_k: 0.831,
        c_l: 0.0608,
        l0: 124.3016,
        r2_length: 0.997,
    },
];

/// Fitted spring model for a closed design of the given row count
/// (4, 6, 8, 10 or 12).
pub fn closed_fit(rows: u32) -> Option<SpringFit> {
    let rf = ROW_FITS.iter().find(|rf| rf.rows == rows)?;
    let design = HsaDesign::standard(TrajectoryPoint::Closed, rows)
        .expect("row-study design points are tabulated");
    let fit = SpringFit {
        design,
        a: rf.a,
        b: rf.b,
        c_tau: rf.c_tau,
        d_tau: 0.0,
        c_k: rf.c_k,
        k0: rf.k0,
        c_l: rf.c_l,
        l0: rf.l0,
        r2_blocked: rf.r2_blocked,
        r2_torque: rf.r2_torque,
        r2_k: rf.r2_k,
        r2_length: rf.r2_length,
        theta_min: 0.0,
        theta_max: 180.0,
    };
    debug_assert!(fit.validate().is_ok());
    Some(fit)
}

/// All five closed row-study fits, in row order.
pub fn closed_fits() -> Vec<SpringFit> {
    ROW_FITS
        .iter()
        .map(|rf| closed_fit(rf.rows).expect("table covers its own rows"))
        .collect()
}

/// Anchor model for the open design (contraction only, twist in
/// [-180, 0] deg).
///
/// Published anchors: 124 N of pull at full twist, zero force at rest, and
/// the fitted torque quadratic. The length model uses the published
/// twist/length coupling of 0.013 mm/deg with the printed length as L0.
/// Stiffness anchors are qualitative (peak at zero rotation).
pub fn open_model() -> AnchorModel {
    let design = HsaDesign::standard(TrajectoryPoint::Open, 4).expect("tabulated");
    let model = AnchorModel {
        design,
        force: AnchorCurve::new(vec![(-180.0, 124.0), (0.0, 0.0)], AnchorUnit::ForceN)
            .expect("static anchors"),
        torque: TorqueLaw::ThroughOriginQuadratic {
            d_tau: OPEN_TORQUE_QUADRATIC.0,
            c_tau: OPEN_TORQUE_QUADRATIC.1,
        },
        stiffness: AnchorCurve::new(
            vec![(-180.0, 25.0), (0.0, 89.0)],
            AnchorUnit::StiffnessNPerMm,
        )
        .expect("static anchors"),
        c_l: 0.013,
        l0: 122.2,
        theta_min: -180.0,
        theta_max: 0.0,
    };
    debug_assert!(model.validate().is_ok());
    model
}

/// Anchor model for the semi-open design (bidirectional, twist in
/// [-90, 90] deg).
///
/// Published anchors: 8.9 N of push at +90 deg (stored negative per the
/// load-cell convention) and zero force at rest. The torque curve is linear
/// between -30 and 30 deg and steepens outside; its values and the pull
/// side of the force curve are qualitative. Length uses the published
/// 0.030 mm/deg coupling with the printed length as L0.
pub fn semi_open_model() -> AnchorModel {
    let design = HsaDesign::standard(TrajectoryPoint::SemiOpen, 4).expect("tabulated");
    let model = AnchorModel {
        design,
        force: AnchorCurve::new(
            vec![(-90.0, 10.0), (0.0, 0.0), (90.0, -8.9)],
            AnchorUnit::ForceN,
        )
        .expect("static anchors"),
        torque: TorqueLaw::Curve(
            AnchorCurve::new(
                vec![
                    (-90.0, -80.0),
                    (-30.0, -15.0),
                    (0.0, 0.0),
                    (30.0, 15.0),
                    (90.0, 80.0),
                ],
                AnchorUnit::TorqueNmm,
            )
            .expect("static anchors"),
        ),
        stiffness: AnchorCurve::new(
            vec![(-90.0, 5.0), (0.0, 7.0), (90.0, 14.0)],
            AnchorUnit::StiffnessNPerMm,
        )
        .expect("static anchors"),
        c_l: 0.030,
        l0: 109.0,
        theta_min: -90.0,
        theta_max: 90.0,
    };
    debug_assert!(model.validate().is_ok());
    model
}

/// Every shipped design model: the five closed fits plus the semi-open and
/// open anchor models.
pub fn all_models() -> Vec<ActuatorModel> {
    let mut models: Vec<ActuatorModel> =
        closed_fits().into_iter().map(ActuatorModel::Fitted).collect();
    models.push(ActuatorModel::Anchored(semi_open_model()));
    models.push(ActuatorModel::Anchored(open_model()));
    models
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_models_validate() {
        for model in all_models() {
            model.validate().unwrap();
        }
    }

    #[test]
    fn closed_fit_covers_exactly_the_studied_rows() {
        for rows in [4, 6, 8, 10, 12] {
            assert!(closed_fit(rows).is_some());
        }
        assert!(closed_fit(5).is_none());
        assert!(closed_fit(14).is_none());
    }

    #[test]
    fn rest_stiffness_decreases_with_rows() {
        for pair in ROW_REST_STIFFNESS.windows(2) {
            assert!(pair[0].1 > pair[1].1);
        }
    }

    #[test]
    fn open_anchor_reproduces_full_twist_pull() {
        let open = open_model();
        assert_eq!(open.blocked_force(-180.0).unwrap(), 124.0);
        assert_eq!(open.blocked_force(0.0).unwrap(), 0.0);
    }

    #[test]
    fn hold_test_starts_at_peak_and_decays() {
        for pair in HOLD_TEST_CLOSED_8ROW.windows(2) {
            assert!(pair[0].0 < pair[1].0);
            assert!(pair[0].1 > pair[1].1);
        }
        assert_eq!(HOLD_TEST_CLOSED_8ROW[0], (0.0, 16.3));
        assert_eq!(HOLD_TEST_CLOSED_8ROW[5], (1200.0, 8.9));
    }

    #[test]
    fn semi_open_torque_linear_between_minus_30_and_30() {
        let semi = semi_open_model();
        let t15 = semi.holding_torque(15.0).unwrap();
        let t30 = semi.holding_torque(30.0).unwrap();
        let tm30 = semi.holding_torque(-30.0).unwrap();
        assert!((t15 * 2.0 - t30).abs() < 1e-12);
        assert_eq!(t30, -tm30);
        // Steeper outside the linear region.
        let t60 = semi.holding_torque(60.0).unwrap();
        assert!(t60 - t30 > t30 - t15);
    }
}

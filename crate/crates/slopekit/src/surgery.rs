//! Legendrian surgery slope bookkeeping.
//!
//! A Legendrian knot has a standard neighborhood whose boundary torus is
//! identified with `R^2/Z^2` so that the meridian is `(1, 0)` (slope 0)
//! and the dividing curves are `(0, 1)` (slope inf). Stabilizing drops
//! `tb` by one, moves `rot` by one, and drags the dividing class to
//! `dividing - meridian`, which has slope -1 in the parent frame.
//! Contact (-1)-surgery replaces the meridian by `dividing - meridian`;
//! (+1)-surgery by `dividing + meridian`.
//!
//! [`surgery_slope_table`] works out the frame adapted to a knot that has
//! been stabilized once: re-expressed so that the once-stabilized
//! neighborhood is standard, the original dividing set has slope 1, the
//! twice-stabilized one has slope -1, and the meridian of the surgered
//! solid torus has slope -1/2, class `(-2, 1)`. [`classify_meridian`]
//! then runs the rotation tests that decide, for each candidate meridian
//! `(1, m)` of the splitting solid torus, whether either piece of the
//! split manifold is forced to be overtwisted. Exactly one candidate
//! survives on both sides.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::farey::Direction;
use crate::layers::Sign;
use crate::rotation::arc_measure_vs_pi;
use crate::slope::{det, CurveClass, GluingMap, Slope};
use crate::splitting::ObstructionReason;

/// A Legendrian knot model: classical invariants plus the boundary-torus
/// identification carried as curve classes in a fixed ambient frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LegendrianModel {
    pub tb: i64,
    pub rot: i64,
    meridian: CurveClass,
    dividing: CurveClass,
}

impl LegendrianModel {
    /// The standard identification: meridian `(1,0)`, dividing `(0,1)`.
    pub fn standard(tb: i64, rot: i64) -> LegendrianModel {
        LegendrianModel {
            tb,
            rot,
            meridian: CurveClass::new(1, 0).unwrap(),
            dividing: CurveClass::new(0, 1).unwrap(),
        }
    }

    pub fn new(
        tb: i64,
        rot: i64,
        meridian: CurveClass,
        dividing: CurveClass,
    ) -> Result<LegendrianModel> {
        if det(meridian.vec(), dividing.vec()).abs() != 1 {
            return Err(Error::NonUnimodularFrame(
                meridian.to_string(),
                dividing.to_string(),
            ));
        }
        Ok(LegendrianModel {
            tb,
            rot,
            meridian,
            dividing,
        })
    }

    pub fn meridian(&self) -> CurveClass {
        self.meridian
    }

    pub fn dividing(&self) -> CurveClass {
        self.dividing
    }

    pub fn dividing_slope(&self) -> Slope {
        self.dividing.slope()
    }
}

/// Stabilization: `tb` drops by one, `rot` moves by the sign, and the
/// dividing class becomes `dividing - meridian` (slope -1 in the parent
/// identification). The meridian is unchanged.
pub fn stabilize(knot: &LegendrianModel, sign: Sign) -> LegendrianModel {
    let rot_shift = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let dividing = CurveClass::from_direction(knot.dividing.vec() - knot.meridian.vec())
        .expect("difference of a unimodular pair is primitive");
    LegendrianModel {
        tb: knot.tb - 1,
        rot: knot.rot + rot_shift,
        meridian: knot.meridian,
        dividing,
    }
}

/// The gluing matrix of contact (±1)-surgery in the standard frame:
/// rows `(1, 0)` and `(±1, 1)`.
pub fn surgery_gluing_map(sign: Sign) -> GluingMap {
    match sign {
        Sign::Plus => GluingMap::new(1, 0, 1, 1).unwrap(),
        Sign::Minus => GluingMap::new(1, 0, -1, 1).unwrap(),
    }
}

/// The meridian of the surgered solid torus, written in the old frame:
/// `dividing - meridian` for (-1)-surgery, `dividing + meridian` for
/// (+1)-surgery. Requires `det(meridian, dividing) = +1`.
pub fn contact_surgery_meridian(
    dividing: &CurveClass,
    meridian: &CurveClass,
    sign: Sign,
) -> Result<CurveClass> {
    if det(meridian.vec(), dividing.vec()) != 1 {
        return Err(Error::NonUnimodularFrame(
            meridian.to_string(),
            dividing.to_string(),
        ));
    }
    let v = match sign {
        Sign::Minus => dividing.vec() - meridian.vec(),
        Sign::Plus => dividing.vec() + meridian.vec(),
    };
    CurveClass::from_direction(v)
}

/// Slope data for surgery on a twice-stabilized knot, expressed in the
/// frame where the once-stabilized neighborhood is standard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurgerySlopeTable {
    /// Dividing slope of the once-stabilized neighborhood (inf).
    pub dividing_once: Slope,
    /// Meridian slope of the knot complement (0).
    pub meridian: Slope,
    /// Dividing slope of the unstabilized neighborhood (1).
    pub dividing_parent: Slope,
    /// Dividing slope of the twice-stabilized neighborhood (-1).
    pub dividing_twice: Slope,
    /// Meridian slope of the surgered solid torus (-1/2).
    pub surgery_meridian: Slope,
    /// The same meridian as a curve class, `(-2, 1)`.
    pub surgery_meridian_class: CurveClass,
}

impl SurgerySlopeTable {
    pub fn entries(&self) -> Vec<(&'static str, Slope)> {
        vec![
            ("dividing_once", self.dividing_once),
            ("meridian", self.meridian),
            ("dividing_parent", self.dividing_parent),
            ("dividing_twice", self.dividing_twice),
            ("surgery_meridian", self.surgery_meridian),
        ]
    }
}

/// Computes the slope table by stabilizing a standard model twice (one
/// sign each), changing frame so the once-stabilized neighborhood is
/// standard, and applying the (-1)-surgery meridian formula.
pub fn surgery_slope_table() -> SurgerySlopeTable {
    let base = LegendrianModel::standard(-1, 0);
    let once = stabilize(&base, Sign::Minus);
    let twice = stabilize(&once, Sign::Plus);

    // Frame change fixing the meridian and sending the once-stabilized
    // dividing class (-1,1) to (0,1).
    let to_standard = GluingMap::new(1, 1, 0, 1).unwrap();
    debug_assert_eq!(
        to_standard.apply(&once.dividing()),
        CurveClass::new(0, 1).unwrap()
    );

    let meridian = to_standard.apply(&base.meridian());
    let dividing_once = to_standard.apply(&once.dividing());
    let dividing_parent = to_standard.apply(&base.dividing());
    let dividing_twice = to_standard.apply(&twice.dividing());
    let surgery_meridian = contact_surgery_meridian(&dividing_twice, &meridian, Sign::Minus)
        .expect("standard frame is unimodular");

    SurgerySlopeTable {
        dividing_once: dividing_once.slope(),
        meridian: meridian.slope(),
        dividing_parent: dividing_parent.slope(),
        dividing_twice: dividing_twice.slope(),
        surgery_meridian: surgery_meridian.slope(),
        surgery_meridian_class: surgery_meridian,
    }
}

/// Tight/overtwisted status of one side of the split manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideStatus {
    Tight,
    Overtwisted,
}

/// The verdict for one candidate meridian `(1, m)` of the splitting
/// solid torus. At most one `m` is tight on both sides; that row carries
/// the identification labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeridianVerdict {
    pub m: i64,
    pub meridian_class: CurveClass,
    pub m1: SideStatus,
    pub m1_reason: Option<ObstructionReason>,
    pub m2: SideStatus,
    pub m2_reason: Option<ObstructionReason>,
    pub identification: Option<(String, String)>,
}

impl MeridianVerdict {
    pub fn is_tight_on_both_sides(&self) -> bool {
        self.m1 == SideStatus::Tight && self.m2 == SideStatus::Tight
    }
}

/// Classifies the candidate meridian `(1, m)`.
///
/// Side one glues the candidate solid torus to the surgered side: planes
/// rotate counterclockwise from slope `m` through `inf` to the surgery
/// meridian `-1/2`, so the rotation exceeds pi exactly for `m <= -1`.
/// Side two glues it to the knot complement: the layer up to the
/// unstabilized neighborhood rotates clockwise from `m` through `inf` to
/// slope `1`. The degenerate case on that side is detected structurally:
/// when the candidate meridian is parallel to the dividing class of slope
/// 1, capping off yields a solid torus with meridional dividing curves.
pub fn classify_meridian(m: i64) -> MeridianVerdict {
    let table = surgery_slope_table();
    let candidate = CurveClass::new(1, m).expect("(1, m) is primitive");
    let slope_m = Slope::from(m);

    let side1 = arc_measure_vs_pi(
        &[slope_m, table.dividing_once, table.surgery_meridian],
        Direction::Counterclockwise,
    )
    .expect("model chain has distinct consecutive slopes");
    debug_assert_ne!(side1, Ordering::Equal, "integer m never equals -1/2");
    let (m1, m1_reason) = match side1 {
        Ordering::Greater => (
            SideStatus::Overtwisted,
            Some(ObstructionReason::RotationExceedsPi),
        ),
        _ => (SideStatus::Tight, None),
    };

    let parent_class = CurveClass::new(1, 1).unwrap();
    let (m2, m2_reason) = if candidate.parallel_to(&parent_class) {
        (
            SideStatus::Overtwisted,
            Some(ObstructionReason::MeridionalDisk),
        )
    } else {
        let side2 = arc_measure_vs_pi(
            &[slope_m, table.dividing_once, table.dividing_parent],
            Direction::Clockwise,
        )
        .expect("model chain has distinct consecutive slopes");
        debug_assert_ne!(side2, Ordering::Equal, "equality is the parallel case");
        match side2 {
            Ordering::Greater => (
                SideStatus::Overtwisted,
                Some(ObstructionReason::RotationExceedsPi),
            ),
            _ => (SideStatus::Tight, None),
        }
    };

    let identification = (m1 == SideStatus::Tight && m2 == SideStatus::Tight)
        .then(|| ("(S^3, xi_std)".to_string(), "(M, xi)".to_string()));

    MeridianVerdict {
        m,
        meridian_class: candidate,
        m1,
        m1_reason,
        m2,
        m2_reason,
        identification,
    }
}

/// Verdicts for every `m` in `[min, max]`, listed with `m` decreasing to
/// match the usual table layout.
pub fn meridian_table(min: i64, max: i64) -> Vec<MeridianVerdict> {
    (min..=max).rev().map(classify_meridian).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluing_matrices() {
        assert_eq!(surgery_gluing_map(Sign::Minus).rows(), ((1, 0), (-1, 1)));
        assert_eq!(surgery_gluing_map(Sign::Plus).rows(), ((1, 0), (1, 1)));
        assert_eq!(surgery_gluing_map(Sign::Plus).det(), 1);
        assert_eq!(surgery_gluing_map(Sign::Minus).det(), 1);
    }

    #[test]
    fn stabilization_invariants() {
        let base = LegendrianModel::standard(-1, 0);
        let plus = stabilize(&base, Sign::Plus);
        assert_eq!((plus.tb, plus.rot), (-2, 1));
        assert_eq!(plus.dividing_slope(), Slope::from(-1));

        let plus_minus = stabilize(&plus, Sign::Minus);
        assert_eq!((plus_minus.tb, plus_minus.rot), (-3, 0));
    }

    #[test]
    fn stabilizations_commute_on_invariants() {
        let base = LegendrianModel::standard(3, 2);
        let a = stabilize(&stabilize(&base, Sign::Plus), Sign::Minus);
        let b = stabilize(&stabilize(&base, Sign::Minus), Sign::Plus);
        assert_eq!(a, b);
    }

    #[test]
    fn surgery_meridian_examples() {
        let mu = CurveClass::new(1, 0).unwrap();

        let d = CurveClass::new(-1, 1).unwrap();
        let new_mu = contact_surgery_meridian(&d, &mu, Sign::Minus).unwrap();
        assert_eq!(new_mu, CurveClass::new(-2, 1).unwrap());
        assert_eq!(new_mu.slope(), Slope::new(-1, 2).unwrap());

        let d = CurveClass::new(0, 1).unwrap();
        assert_eq!(
            contact_surgery_meridian(&d, &mu, Sign::Minus).unwrap(),
            CurveClass::new(-1, 1).unwrap()
        );

        let d = CurveClass::new(-1, 1).unwrap();
        assert_eq!(
            contact_surgery_meridian(&d, &mu, Sign::Plus).unwrap(),
            CurveClass::new(0, 1).unwrap()
        );
    }

    #[test]
    fn surgery_meridian_requires_positive_frame() {
        let mu = CurveClass::new(1, 0).unwrap();
        let d = CurveClass::new(1, -1).unwrap(); // det(mu, d) = -1
        assert!(matches!(
            contact_surgery_meridian(&d, &mu, Sign::Minus),
            Err(Error::NonUnimodularFrame(_, _))
        ));
    }

    #[test]
    fn slope_table_fixtures() {
        let t = surgery_slope_table();
        assert_eq!(t.dividing_once, Slope::INFINITY);
        assert_eq!(t.meridian, Slope::from(0));
        assert_eq!(t.dividing_parent, Slope::from(1));
        assert_eq!(t.dividing_twice, Slope::from(-1));
        assert_eq!(t.surgery_meridian, Slope::new(-1, 2).unwrap());
        assert_eq!(t.surgery_meridian_class, CurveClass::new(-2, 1).unwrap());
    }

    #[test]
    fn meridian_classification() {
        let v = classify_meridian(0);
        assert!(v.is_tight_on_both_sides());
        assert_eq!(
            v.identification,
            Some(("(S^3, xi_std)".into(), "(M, xi)".into()))
        );

        let v = classify_meridian(-1);
        assert_eq!(v.m1, SideStatus::Overtwisted);
        assert_eq!(v.m1_reason, Some(ObstructionReason::RotationExceedsPi));
        assert_eq!(v.m2, SideStatus::Tight);

        let v = classify_meridian(2);
        assert_eq!(v.m2, SideStatus::Overtwisted);
        assert_eq!(v.m2_reason, Some(ObstructionReason::RotationExceedsPi));
        assert_eq!(v.m1, SideStatus::Tight);

        let v = classify_meridian(1);
        assert_eq!(v.m2, SideStatus::Overtwisted);
        assert_eq!(v.m2_reason, Some(ObstructionReason::MeridionalDisk));
    }

    #[test]
    fn exactly_one_row_is_tight_on_both_sides() {
        let rows = meridian_table(-5, 5);
        let tight: Vec<i64> = rows
            .iter()
            .filter(|v| v.is_tight_on_both_sides())
            .map(|v| v.m)
            .collect();
        assert_eq!(tight, vec![0]);
        // Rows come out in decreasing order of m.
        assert_eq!(rows.first().unwrap().m, 5);
        assert_eq!(rows.last().unwrap().m, -5);
    }
}

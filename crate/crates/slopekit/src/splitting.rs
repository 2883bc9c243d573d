//! Splitting a manifold along a mixed torus: which meridian slopes can
//! give a tight result.
//!
//! The normalized model has dividing slopes `s0 = -1`, `s1 = inf` on the
//! two sides of the mixed torus and an integer slope `s2` behind the
//! second slice. Filling in a solid torus with meridian slope `s` makes
//! the contact planes rotate from `s` through `inf` to `s2` clockwise on
//! one side, and from `s` through `inf` to `s0` counterclockwise on the
//! other. A rotation beyond pi is overtwisted, and a rotation of exactly
//! pi produces a solid torus with meridional dividing curves, which is
//! also overtwisted. The tight candidates are exactly `0 <= s <= s2 - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::farey::Direction;
use crate::rotation::arc_measure_vs_pi;
use crate::slope::Slope;

/// The normalized mixed-torus splitting model: `s0 = -1`, `s1 = inf`,
/// and an integer third slope `s2`. The two slices joining them carry
/// opposite signs by assumption.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitSpec {
    s0: Slope,
    s1: Slope,
    s2: Slope,
}

impl SplitSpec {
    pub fn new(s2: Slope) -> Result<SplitSpec> {
        if !s2.is_integer() {
            return Err(Error::NonIntegerSlope(s2.to_string()));
        }
        Ok(SplitSpec {
            s0: Slope::from(-1),
            s1: Slope::INFINITY,
            s2,
        })
    }

    pub fn from_integer(s2: i64) -> SplitSpec {
        SplitSpec::new(Slope::from(s2)).expect("integers are integer slopes")
    }

    pub fn s0(&self) -> Slope {
        self.s0
    }

    pub fn s1(&self) -> Slope {
        self.s1
    }

    pub fn s2(&self) -> Slope {
        self.s2
    }
}

/// Why a splitting slope is overtwisted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionReason {
    RotationExceedsPi,
    MeridionalDisk,
}

impl ObstructionReason {
    /// The machine-readable reason string used by the CLI.
    pub fn as_str(&self) -> &'static str {
        match self {
            ObstructionReason::RotationExceedsPi => "rotation-exceeds-pi",
            ObstructionReason::MeridionalDisk => "meridional-disk",
        }
    }
}

impl fmt::Display for ObstructionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitStatus {
    TightCandidate,
    Overtwisted,
}

/// The verdict for one candidate splitting slope. `reason` is present
/// exactly when the status is `Overtwisted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitVerdict {
    pub slope: Slope,
    pub status: SplitStatus,
    pub reason: Option<ObstructionReason>,
}

impl SplitVerdict {
    pub fn is_tight_candidate(&self) -> bool {
        self.status == SplitStatus::TightCandidate
    }
}

/// Runs both boundary checks for an integer splitting slope `s`: the
/// clockwise rotation `[s, inf, s2]` and the counterclockwise rotation
/// `[s, inf, s0]`. A meridional disk on either side wins over a rotation
/// obstruction when both appear.
pub fn check_split_slope(spec: &SplitSpec, s: Slope) -> Result<SplitVerdict> {
    if !s.is_integer() {
        return Err(Error::NonIntegerSlope(s.to_string()));
    }
    let upper = arc_measure_vs_pi(&[s, spec.s1, spec.s2], Direction::Clockwise)?;
    let lower = arc_measure_vs_pi(&[s, spec.s1, spec.s0], Direction::Counterclockwise)?;

    let reason = if upper == Ordering::Equal || lower == Ordering::Equal {
        Some(ObstructionReason::MeridionalDisk)
    } else if upper == Ordering::Greater || lower == Ordering::Greater {
        Some(ObstructionReason::RotationExceedsPi)
    } else {
        None
    };
    Ok(SplitVerdict {
        slope: s,
        status: match reason {
            Some(_) => SplitStatus::Overtwisted,
            None => SplitStatus::TightCandidate,
        },
        reason,
    })
}

/// The integers `s` whose verdict is `TightCandidate`, namely
/// `{0, ..., s2 - 1}`; empty when `s2 <= 0`.
pub fn splitting_slopes(spec: &SplitSpec) -> Vec<i64> {
    let s0 = spec.s0.as_integer().expect("s0 is -1");
    let s2 = spec.s2.as_integer().expect("s2 is integer by construction");
    (s0 + 1..s2)
        .filter(|&s| {
            check_split_slope(spec, Slope::from(s))
                .expect("integer candidates are valid inputs")
                .is_tight_candidate()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_at_the_boundaries() {
        let spec = SplitSpec::from_integer(2);

        let v = check_split_slope(&spec, Slope::from(3)).unwrap();
        assert_eq!(v.status, SplitStatus::Overtwisted);
        assert_eq!(v.reason, Some(ObstructionReason::RotationExceedsPi));

        let v = check_split_slope(&spec, Slope::from(2)).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::MeridionalDisk));

        let v = check_split_slope(&spec, Slope::from(0)).unwrap();
        assert_eq!(v.status, SplitStatus::TightCandidate);
        assert_eq!(v.reason, None);
    }

    #[test]
    fn lower_boundary_is_governed_by_s0() {
        let spec = SplitSpec::from_integer(5);
        let v = check_split_slope(&spec, Slope::from(-1)).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::MeridionalDisk));
        let v = check_split_slope(&spec, Slope::from(-2)).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::RotationExceedsPi));
    }

    #[test]
    fn meridional_wins_a_tie() {
        // s = s2 = -3 meets the meridional case above and a rotation
        // obstruction below at the same time.
        let spec = SplitSpec::from_integer(-3);
        let v = check_split_slope(&spec, Slope::from(-3)).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::MeridionalDisk));
    }

    #[test]
    fn ranges() {
        assert_eq!(splitting_slopes(&SplitSpec::from_integer(1)), vec![0]);
        assert_eq!(splitting_slopes(&SplitSpec::from_integer(3)), vec![0, 1, 2]);
        assert!(splitting_slopes(&SplitSpec::from_integer(0)).is_empty());
        assert!(splitting_slopes(&SplitSpec::from_integer(-2)).is_empty());
    }

    #[test]
    fn non_integer_slopes_are_rejected() {
        let spec = SplitSpec::from_integer(2);
        let half = Slope::new(1, 2).unwrap();
        assert_eq!(
            check_split_slope(&spec, half),
            Err(Error::NonIntegerSlope("1/2".into()))
        );
        assert!(SplitSpec::new(half).is_err());
    }
}

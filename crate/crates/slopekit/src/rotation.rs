//! Exact angular bookkeeping on the circle of slopes.
//!
//! A chain of slopes describes a family of lines in the plane rotating
//! from each slope to the next in a fixed sense. The projective circle of
//! lines has total measure pi, and the tight/overtwisted dichotomies in
//! this crate all reduce to whether such a rotation sweeps less than,
//! exactly, or more than pi.
//!
//! The comparison is computed without any angle arithmetic: lift each
//! slope to a direction vector, choose for every leg the lift reached by
//! rotating less than a half turn in the prescribed sense, and watch for
//! the moving vector to pass the antipode of the starting lift. Passing
//! it strictly means the total exceeds pi; landing on it exactly means
//! the total equals pi. Everything is a sign test on integer cross
//! products.
//!
//! The convention for "clockwise" is decreasing slope (through infinity);
//! counterclockwise is increasing slope. The calibration for the
//! three-slope model chain `[s, inf, s2]` traversed clockwise is:
//! `Greater` iff `s > s2`, `Equal` iff `s = s2`, `Less` iff `s < s2`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::farey::Direction;
use crate::slope::{det, dot, Slope, Vec2};

fn cross(a: Vec2, b: Vec2) -> i128 {
    det(a, b)
}

/// Compares the total arc measure of the chain, each leg traversed in the
/// given sense, against pi. Requires at least two slopes and distinct
/// consecutive slopes.
pub fn arc_measure_vs_pi(path: &[Slope], direction: Direction) -> Result<Ordering> {
    if path.len() < 2 {
        return Err(Error::PathTooShort);
    }
    let sign: i128 = match direction {
        Direction::Counterclockwise => 1,
        Direction::Clockwise => -1,
    };
    let start = path[0].direction();
    let antipode = -start;
    let mut current = start;
    let mut at_pi = false;

    for slope in &path[1..] {
        let m = slope.direction();
        let c = cross(current, m);
        if c == 0 {
            return Err(Error::DegenerateLeg(slope.to_string()));
        }
        if at_pi {
            // Already at the antipode; any further rotation exceeds pi.
            return Ok(Ordering::Greater);
        }
        let target = if c.signum() == sign { m } else { -m };
        if target == antipode {
            at_pi = true;
        } else if cross(current, antipode).signum() == sign
            && cross(antipode, target).signum() == sign
        {
            return Ok(Ordering::Greater);
        }
        current = target;
    }

    Ok(if at_pi { Ordering::Equal } else { Ordering::Less })
}

/// True when the two slopes agree or the rotation from `a` to `b` in the
/// given sense is strictly less than a half turn.
#[allow(dead_code)]
pub(crate) fn within_half_turn(a: &Slope, b: &Slope, direction: Direction) -> bool {
    let sign: i128 = match direction {
        Direction::Counterclockwise => 1,
        Direction::Clockwise => -1,
    };
    let c = cross(a.direction(), b.direction());
    c == 0 || c.signum() == sign || dot(a.direction(), b.direction()) > 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    fn cw(path: &[Slope]) -> Ordering {
        arc_measure_vs_pi(path, Direction::Clockwise).unwrap()
    }

    fn ccw(path: &[Slope]) -> Ordering {
        arc_measure_vs_pi(path, Direction::Counterclockwise).unwrap()
    }

    #[test]
    fn clockwise_model_chain() {
        assert_eq!(cw(&[s("3"), s("inf"), s("2")]), Ordering::Greater);
        assert_eq!(cw(&[s("2"), s("inf"), s("2")]), Ordering::Equal);
        assert_eq!(cw(&[s("0"), s("inf"), s("2")]), Ordering::Less);
    }

    #[test]
    fn model_chain_trichotomy_tracks_the_endpoints() {
        for s2 in -4i64..=4 {
            for sv in -6i64..=6 {
                let verdict = cw(&[Slope::from(sv), Slope::INFINITY, Slope::from(s2)]);
                assert_eq!(verdict, sv.cmp(&s2), "s={sv} s2={s2}");
            }
        }
    }

    #[test]
    fn counterclockwise_mirror() {
        // Mirror of the model chain: compare against the lower bound -1.
        assert_eq!(ccw(&[s("-2"), s("inf"), s("-1")]), Ordering::Greater);
        assert_eq!(ccw(&[s("-1"), s("inf"), s("-1")]), Ordering::Equal);
        assert_eq!(ccw(&[s("0"), s("inf"), s("-1")]), Ordering::Less);
    }

    #[test]
    fn single_leg_is_always_less_than_pi() {
        assert_eq!(cw(&[s("0"), s("inf")]), Ordering::Less);
        assert_eq!(ccw(&[s("5"), s("-7/3")]), Ordering::Less);
    }

    #[test]
    fn full_turn_exceeds_pi() {
        // Four quarter-ish turns in the same sense sweep a full circle of
        // lines, which is 2*pi on the vector circle and passes the
        // antipode on the way.
        let loop_path = [s("0"), s("1"), s("inf"), s("-1"), s("0"), s("1")];
        assert_eq!(ccw(&loop_path), Ordering::Greater);
    }

    #[test]
    fn degenerate_legs_are_rejected() {
        assert_eq!(
            arc_measure_vs_pi(&[s("1"), s("1")], Direction::Clockwise),
            Err(Error::DegenerateLeg("1".into()))
        );
        assert_eq!(
            arc_measure_vs_pi(&[s("1")], Direction::Clockwise),
            Err(Error::PathTooShort)
        );
    }
}

//! Basic slices and layered structures on `T^2 x I`.
//!
//! A basic slice is a minimal tight layer whose two boundary dividing
//! slopes are Farey-adjacent; it carries one of two tight structures,
//! recorded here as a sign. Stacking slices along a Farey chain gives a
//! layered structure whose relative Euler class is the signed sum of
//! per-slice contributions. A stack is universally tight exactly when all
//! signs agree, and an interior torus of the stack is mixed when the two
//! slices meeting it have opposite signs.
//!
//! The same calculus counts tight structures on the solid torus: a
//! boundary slope `s <= -1` (meridian at slope 0) has
//! `|(r0+1)(r1+1)...(r_{k-1}+1) r_k|` tight structures, where
//! `s = r0 - 1/(r1 - 1/(... - 1/r_k))` with every `r_i <= -2`, and the
//! slope `-1` bounds a unique one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::farey::{farey_adjacent, FareyPath};
use crate::slope::{det, Slope, Vec2};

/// The sign labelling one of the two tight structures on a basic slice;
/// also used for stabilizations of Legendrian knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(Error::ParseError {
                input: s.to_string(),
                expected: "a sign, '+' or '-'",
            }),
        }
    }
}

/// The Poincare dual of a relative Euler class, an element of `Z^2`.
pub type EulerClass = Vec2;

/// A tight `T^2 x I` layer with Farey-adjacent boundary slopes and a sign
/// selecting one of its two tight structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicSlice {
    front: Slope,
    back: Slope,
    sign: Sign,
}

impl BasicSlice {
    pub fn new(front: Slope, back: Slope, sign: Sign) -> Result<BasicSlice> {
        if !farey_adjacent(&front, &back)? {
            return Err(Error::NotAdjacent(front.to_string(), back.to_string()));
        }
        Ok(BasicSlice { front, back, sign })
    }

    pub fn front(&self) -> Slope {
        self.front
    }

    pub fn back(&self) -> Slope {
        self.back
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// A stack of basic slices; the back slope of each slice is the front
/// slope of the next, and the underlying slope chain is a Farey path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePath {
    slices: Vec<BasicSlice>,
}

impl SlicePath {
    pub fn new(slices: Vec<BasicSlice>) -> Result<SlicePath> {
        if slices.is_empty() {
            return Err(Error::PathTooShort);
        }
        for w in slices.windows(2) {
            if w[0].back != w[1].front {
                return Err(Error::BrokenChain(
                    w[0].back.to_string(),
                    w[1].front.to_string(),
                ));
            }
        }
        let mut chain = vec![slices[0].front];
        chain.extend(slices.iter().map(|s| s.back));
        FareyPath::new(chain)?;
        Ok(SlicePath { slices })
    }

    pub fn from_slopes_signs(slopes: &[Slope], signs: &[Sign]) -> Result<SlicePath> {
        if slopes.len() != signs.len() + 1 {
            return Err(Error::LengthMismatch {
                expected: slopes.len().saturating_sub(1),
                got: signs.len(),
            });
        }
        let slices = slopes
            .windows(2)
            .zip(signs)
            .map(|(w, &sign)| BasicSlice::new(w[0], w[1], sign))
            .collect::<Result<Vec<_>>>()?;
        SlicePath::new(slices)
    }

    pub fn slices(&self) -> &[BasicSlice] {
        &self.slices
    }

    pub fn slopes(&self) -> Vec<Slope> {
        let mut chain = vec![self.slices[0].front];
        chain.extend(self.slices.iter().map(|s| s.back));
        chain
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.slices.iter().map(|s| s.sign).collect()
    }
}

impl fmt::Display for SlicePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slopes = self.slopes();
        let mut first = true;
        for s in &slopes {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        write!(f, " ; ")?;
        for s in &self.slices {
            write!(f, "{}", s.sign)?;
        }
        Ok(())
    }
}

impl FromStr for SlicePath {
    type Err = Error;

    /// Parses the `"s0,s1,...,sk ; ++-"` form.
    fn from_str(text: &str) -> Result<SlicePath> {
        let err = || Error::ParseError {
            input: text.to_string(),
            expected: "a slice path \"s0,s1,...,sk ; ++-\"",
        };
        let (slope_part, sign_part) = text.split_once(';').ok_or_else(err)?;
        let slopes = slope_part
            .split(',')
            .map(|t| t.parse::<Slope>())
            .collect::<Result<Vec<_>>>()?;
        let signs = sign_part
            .trim()
            .chars()
            .map(|c| Sign::from_str(&c.to_string()))
            .collect::<Result<Vec<_>>>()?;
        SlicePath::from_slopes_signs(&slopes, &signs)
    }
}

/// The two primitive boundary vectors of a slice, oriented so that their
/// determinant is +1. The front slope keeps its canonical representative
/// `(q, p)`; the back one is negated when needed.
fn oriented_pair(front: &Slope, back: &Slope) -> (Vec2, Vec2) {
    let vf = front.direction();
    let mut vb = back.direction();
    if det(vf, vb) < 0 {
        vb = -vb;
    }
    debug_assert_eq!(det(vf, vb), 1);
    (vf, vb)
}

/// The contribution of one basic slice to the relative Euler class:
/// the slice sign times the difference of the determinant-positive
/// boundary representatives.
pub fn slice_euler_contribution(slice: &BasicSlice) -> EulerClass {
    let (vf, vb) = oriented_pair(&slice.front, &slice.back);
    slice.sign.factor() * (vb - vf)
}

/// Sum of the per-slice contributions along the stack.
pub fn relative_euler_class(path: &SlicePath) -> EulerClass {
    path.slices
        .iter()
        .map(slice_euler_contribution)
        .fold(Vec2::ZERO, |acc, v| acc + v)
}

/// A stack is universally tight exactly when all slice signs agree.
pub fn is_universally_tight(path: &SlicePath) -> bool {
    path.slices.windows(2).all(|w| w[0].sign == w[1].sign)
}

/// Whether the interior torus at interface `i` (between slices `i-1` and
/// `i`, zero-indexed) is mixed, i.e. the two slices have opposite signs.
pub fn is_mixed_torus(path: &SlicePath, interface: usize) -> Result<bool> {
    let n = path.slices.len();
    if interface == 0 || interface >= n {
        return Err(Error::BoundaryInterface {
            index: interface,
            slices: n,
        });
    }
    Ok(path.slices[interface - 1].sign != path.slices[interface].sign)
}

/// The continued-fraction expansion `s = r0 - 1/(r1 - 1/(... - 1/rk))`
/// with every coefficient `<= -2`, defined for rational `s < -1`; the
/// slope `-1` returns the empty expansion.
pub fn negative_continued_fraction(s: &Slope) -> Result<Vec<i64>> {
    if s.is_infinite() || s.numer() > -s.denom() {
        return Err(Error::OutOfDomain(s.to_string()));
    }
    if s.numer() == -s.denom() {
        return Ok(Vec::new()); // slope -1
    }
    let mut coefficients = Vec::new();
    let (mut p, mut q) = (s.numer(), s.denom());
    loop {
        if q == 1 {
            coefficients.push(p);
            break;
        }
        let r = p.div_euclid(q);
        coefficients.push(r);
        // s - r = p'/q with 0 < p' < q; the next slope is -q/p'.
        let p_next = p - r * q;
        p = -q;
        q = p_next;
    }
    debug_assert!(coefficients.iter().all(|&r| r <= -2));
    Ok(coefficients)
}

/// Number of tight structures on the solid torus with boundary dividing
/// slope `s` in the identification where the meridian has slope 0.
/// Defined for `s <= -1`; the slope `-1` bounds a unique tight structure.
pub fn count_tight_solid_torus(s: &Slope) -> Result<u64> {
    let cf = negative_continued_fraction(s)?;
    if cf.is_empty() {
        return Ok(1);
    }
    let mut product: i128 = 1;
    for (i, &r) in cf.iter().enumerate() {
        let factor = if i + 1 == cf.len() { r } else { r + 1 };
        product *= factor as i128;
    }
    Ok(product.unsigned_abs() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    fn path(text: &str) -> SlicePath {
        text.parse().unwrap()
    }

    #[test]
    fn slice_contributions() {
        let a = BasicSlice::new(s("-2"), s("-1"), Sign::Plus).unwrap();
        assert_eq!(slice_euler_contribution(&a), Vec2::new(0, 1));

        let b = BasicSlice::new(s("-1"), s("0"), Sign::Minus).unwrap();
        assert_eq!(slice_euler_contribution(&b), Vec2::new(0, -1));

        let c = BasicSlice::new(s("-1"), s("inf"), Sign::Plus).unwrap();
        assert_eq!(slice_euler_contribution(&c), Vec2::new(-1, 2));
    }

    #[test]
    fn non_adjacent_slice_is_rejected() {
        assert_eq!(
            BasicSlice::new(s("-2"), s("0"), Sign::Plus),
            Err(Error::NotAdjacent("-2".into(), "0".into()))
        );
    }

    #[test]
    fn euler_class_of_the_two_slice_model() {
        assert_eq!(relative_euler_class(&path("-2,-1,0 ; ++")), Vec2::new(0, 2));
        assert_eq!(
            relative_euler_class(&path("-2,-1,0 ; --")),
            Vec2::new(0, -2)
        );
        assert_eq!(relative_euler_class(&path("-2,-1,0 ; +-")), Vec2::new(0, 0));
    }

    #[test]
    fn universal_tightness_is_constant_signs() {
        assert!(is_universally_tight(&path("-2,-1,0 ; ++")));
        assert!(!is_universally_tight(&path("-2,-1,0 ; +-")));
        assert!(is_universally_tight(&path("-2,-1 ; +")));
    }

    #[test]
    fn mixed_interfaces() {
        assert!(is_mixed_torus(&path("-2,-1,0 ; +-"), 1).unwrap());
        assert!(!is_mixed_torus(&path("-2,-1,0 ; ++"), 1).unwrap());

        let p = path("-3,-2,-1,0 ; ++-");
        assert!(is_mixed_torus(&p, 2).unwrap());
        assert!(!is_mixed_torus(&p, 1).unwrap());

        assert_eq!(
            is_mixed_torus(&p, 0),
            Err(Error::BoundaryInterface {
                index: 0,
                slices: 3
            })
        );
        assert_eq!(
            is_mixed_torus(&p, 3),
            Err(Error::BoundaryInterface {
                index: 3,
                slices: 3
            })
        );
    }

    #[test]
    fn slice_path_round_trips_through_strings() {
        let p = path("-2,-1,0 ; +-");
        assert_eq!(p.to_string(), "-2,-1,0 ; +-");
        assert_eq!(p.slopes(), vec![s("-2"), s("-1"), s("0")]);
        assert_eq!(p.signs(), vec![Sign::Plus, Sign::Minus]);
    }

    #[test]
    fn broken_chains_are_rejected() {
        let a = BasicSlice::new(s("-2"), s("-1"), Sign::Plus).unwrap();
        let b = BasicSlice::new(s("0"), s("1"), Sign::Plus).unwrap();
        assert_eq!(
            SlicePath::new(vec![a, b]),
            Err(Error::BrokenChain("-1".into(), "0".into()))
        );
        assert!("-2,-1 ; ++".parse::<SlicePath>().is_err());
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(negative_continued_fraction(&s("-2")).unwrap(), vec![-2]);
        assert_eq!(
            negative_continued_fraction(&s("-5/3")).unwrap(),
            vec![-2, -3]
        );
        assert_eq!(negative_continued_fraction(&s("-1")).unwrap(), vec![]);
        assert_eq!(
            negative_continued_fraction(&s("-8/5")).unwrap(),
            vec![-2, -3, -2]
        );

        for bad in ["0", "2", "inf", "-1/2"] {
            assert_eq!(
                negative_continued_fraction(&s(bad)),
                Err(Error::OutOfDomain(bad.into()))
            );
        }
    }

    #[test]
    fn continued_fraction_reconstructs_the_slope() {
        for (p, q) in [(-5i64, 3i64), (-8, 5), (-7, 2), (-13, 8), (-12, 7)] {
            let slope = Slope::new(p, q).unwrap();
            let cf = negative_continued_fraction(&slope).unwrap();
            // Evaluate r0 - 1/(r1 - 1/(...)) from the tail.
            let (mut num, mut den) = (*cf.last().unwrap(), 1i64);
            for &r in cf.iter().rev().skip(1) {
                let (n2, d2) = (r * num - den, num);
                num = n2;
                den = d2;
            }
            assert_eq!(Slope::new(num, den).unwrap(), slope);
        }
    }

    #[test]
    fn tight_counts() {
        assert_eq!(count_tight_solid_torus(&s("-1")).unwrap(), 1);
        assert_eq!(count_tight_solid_torus(&s("-2")).unwrap(), 2);
        assert_eq!(count_tight_solid_torus(&s("-5/3")).unwrap(), 3);
        assert_eq!(count_tight_solid_torus(&s("-5/2")).unwrap(), 4);
        assert_eq!(count_tight_solid_torus(&s("-9/5")).unwrap(), 5);
        assert_eq!(count_tight_solid_torus(&s("0")), Err(Error::OutOfDomain("0".into())));
    }
}

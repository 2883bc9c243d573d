//! The Farey tessellation and its geodesics.
//!
//! Two slopes `p/q` and `r/s` are joined by an edge of the tessellation
//! exactly when `|ps - rq| = 1`. A path between two slopes is a chain of
//! such edges; [`farey_path`] returns a shortest one.
//!
//! Between any two vertices the tessellation has a strip of triangles
//! crossed by the hyperbolic geodesic. The two boundary walks of that
//! strip are the monotone paths: the counterclockwise walk visits slopes
//! in increasing circular order, the clockwise walk in decreasing order.
//! Every shortest chain stays on strip vertices (tessellation edges are
//! disjoint chords of the circle, so any chain must pass through an
//! endpoint of each separating edge), so a breadth-first search over the
//! strip vertices computes an exact shortest path. Ties are resolved in
//! favor of the counterclockwise walk, which is the rotation direction
//! used by every layered construction in this crate.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::slope::{det, egcd, Slope, Vec2};

/// True when the two slopes span an edge of the Farey tessellation.
pub fn farey_adjacent(a: &Slope, b: &Slope) -> Result<bool> {
    if a == b {
        return Err(Error::EqualSlopes(a.to_string()));
    }
    Ok(det(a.direction(), b.direction()).abs() == 1)
}

/// A chain of slopes in which every consecutive pair is Farey-adjacent
/// and no slope repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPath {
    slopes: Vec<Slope>,
}

impl FareyPath {
    pub fn new(slopes: Vec<Slope>) -> Result<FareyPath> {
        for i in 0..slopes.len() {
            for j in (i + 1)..slopes.len() {
                if slopes[i] == slopes[j] {
                    return Err(Error::RepeatedSlope(slopes[i].to_string()));
                }
            }
        }
        for w in slopes.windows(2) {
            if !farey_adjacent(&w[0], &w[1])? {
                return Err(Error::NotAdjacent(w[0].to_string(), w[1].to_string()));
            }
        }
        Ok(FareyPath { slopes })
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    /// Number of edges, i.e. one less than the number of vertices.
    pub fn edge_count(&self) -> usize {
        self.slopes.len().saturating_sub(1)
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.slopes {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Rotation sense on the circle of slopes. Counterclockwise is the
/// direction of increasing slope (wrapping through infinity); clockwise
/// is decreasing slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Counterclockwise,
    Clockwise,
}

/// A determinant-one change of frame sending `u` to infinity, together
/// with its inverse. Orientation of the slope circle is preserved.
struct Reduction {
    fwd: [i64; 4],
    inv: [i64; 4],
}

impl Reduction {
    fn to_infinity(u: &Slope) -> Reduction {
        let v = u.direction();
        // Rows (y, -x) and (s, t) with s*x + t*y = 1 give determinant one.
        let (g, s, t) = egcd(v.x, v.y);
        debug_assert_eq!(g, 1);
        Reduction {
            fwd: [v.y, -v.x, s, t],
            inv: [t, v.x, -s, v.y],
        }
    }

    fn apply(m: &[i64; 4], v: Vec2) -> Vec2 {
        Vec2::new(m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y)
    }
}

/// One step of the monotone walk from `u` towards `b`, assuming the two
/// are not adjacent. Maps `u` to infinity, where the neighbors are the
/// integers, and picks the integer closest to the image of `b` on the
/// chosen side.
fn monotone_step(u: &Slope, b: &Slope, dir: Direction) -> Slope {
    let red = Reduction::to_infinity(u);
    let mut w = Reduction::apply(&red.fwd, b.direction());
    if w.x < 0 {
        w = -w;
    }
    debug_assert!(w.x > 0, "b maps to a finite slope since b != u");
    let n = match dir {
        Direction::Counterclockwise => w.y.div_euclid(w.x),
        Direction::Clockwise => -(-w.y).div_euclid(w.x),
    };
    let next = Reduction::apply(&red.inv, Vec2::new(1, n));
    Slope::of_vector(next).expect("unimodular image of a primitive vector")
}

/// The minimal monotone chain from `a` to `b` on one side of the strip.
fn monotone_path(a: &Slope, b: &Slope, dir: Direction) -> Vec<Slope> {
    let mut path = vec![*a];
    let mut u = *a;
    loop {
        if farey_adjacent(&u, b).expect("endpoints stay distinct") {
            path.push(*b);
            return path;
        }
        u = monotone_step(&u, b, dir);
        path.push(u);
    }
}

/// Shortest path between the two strip boundaries, by breadth-first
/// search over the strip vertices with exact adjacency tests.
fn strip_shortest(a: &Slope, b: &Slope, ccw: &[Slope], cw: &[Slope]) -> Vec<Slope> {
    let mut verts: Vec<Slope> = Vec::new();
    for s in ccw.iter().chain(cw.iter()) {
        if !verts.contains(s) {
            verts.push(*s);
        }
    }
    let start = verts.iter().position(|s| s == a).unwrap();
    let goal = verts.iter().position(|s| s == b).unwrap();

    let n = verts.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if i == goal {
            break;
        }
        for j in 0..n {
            if !seen[j] && det(verts[i].direction(), verts[j].direction()).abs() == 1 {
                seen[j] = true;
                prev[j] = i;
                queue.push_back(j);
            }
        }
    }
    let mut path = vec![goal];
    let mut i = goal;
    while i != start {
        i = prev[i];
        path.push(i);
    }
    path.reverse();
    path.into_iter().map(|i| verts[i]).collect()
}

/// A shortest Farey-adjacent chain from `a` to `b`, endpoints included.
///
/// When several shortest chains exist the counterclockwise boundary walk
/// wins, then the clockwise one.
pub fn farey_path(a: &Slope, b: &Slope) -> Result<FareyPath> {
    if a == b {
        return Err(Error::EqualSlopes(a.to_string()));
    }
    let ccw = monotone_path(a, b, Direction::Counterclockwise);
    let cw = monotone_path(a, b, Direction::Clockwise);
    let best = strip_shortest(a, b, &ccw, &cw);
    let chosen = if ccw.len() == best.len() {
        ccw
    } else if cw.len() == best.len() {
        cw
    } else {
        best
    };
    FareyPath::new(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(farey_adjacent(&Slope::INFINITY, &s("0")).unwrap());
        assert!(farey_adjacent(&s("-1"), &Slope::INFINITY).unwrap());
        assert!(!farey_adjacent(&s("-1/2"), &s("1")).unwrap());
        assert_eq!(
            farey_adjacent(&s("2"), &s("2")),
            Err(Error::EqualSlopes("2".into()))
        );
    }

    #[test]
    fn path_of_adjacent_slopes_is_one_edge() {
        let p = farey_path(&s("-1/2"), &s("0")).unwrap();
        assert_eq!(p.slopes(), &[s("-1/2"), s("0")]);
    }

    #[test]
    fn path_examples() {
        let p = farey_path(&Slope::INFINITY, &s("-1/2")).unwrap();
        assert_eq!(p.slopes(), &[Slope::INFINITY, s("-1"), s("-1/2")]);

        let p = farey_path(&s("-2"), &s("0")).unwrap();
        assert_eq!(p.slopes(), &[s("-2"), s("-1"), s("0")]);
    }

    #[test]
    fn path_wraps_through_infinity_when_shorter() {
        let p = farey_path(&s("-10"), &s("10")).unwrap();
        assert_eq!(p.slopes(), &[s("-10"), Slope::INFINITY, s("10")]);
    }

    #[test]
    fn path_down_a_continued_fraction() {
        let p = farey_path(&s("-8/5"), &s("-1")).unwrap();
        assert_eq!(p.slopes(), &[s("-8/5"), s("-3/2"), s("-1")]);
    }

    #[test]
    fn equal_endpoints_are_rejected() {
        assert_eq!(
            farey_path(&s("1"), &s("1")),
            Err(Error::EqualSlopes("1".into()))
        );
    }

    #[test]
    fn invalid_chains_are_rejected() {
        assert!(FareyPath::new(vec![s("0"), s("2")]).is_err());
        assert!(FareyPath::new(vec![s("0"), s("1"), s("0")]).is_err());
    }
}

//! Lattice points, unit steps and the geometric comparisons shared by the
//! path nests.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{shape, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Unit steps. `N`/`E` are used by non-crossing nests, `S`/`Sw` by
/// non-intersecting nests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
    S,
    Sw,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::N => (0, 1),
            Step::E => (1, 0),
            Step::S => (0, -1),
            Step::Sw => (-1, -1),
        }
    }

    /// Letter used in the text encoding (`W` stands for southwest).
    pub fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
            Step::S => 'S',
            Step::Sw => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'N' => Some(Step::N),
            'E' => Some(Step::E),
            'S' => Some(Step::S),
            'W' => Some(Step::Sw),
            _ => None,
        }
    }
}

/// Encodes steps as a letter string, e.g. `"NNENE"`.
pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| s.letter()).collect()
}

pub fn steps_from_str(text: &str) -> Result<Vec<Step>> {
    text.chars()
        .map(|c| Step::from_letter(c).ok_or_else(|| shape(format!("unknown step letter {c:?}"))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        Path { start, steps }
    }

    /// Every lattice point visited, starting point included.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = Point::new(p.x + dx, p.y + dy);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> Point {
        *self
            .points()
            .last()
            .expect("a path has at least its start point")
    }
}

/// Per-height extent `[min x, max x]` of a point list.
fn extents(points: &[Point]) -> BTreeMap<i64, (i64, i64)> {
    let mut map: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
    for p in points {
        map.entry(p.y)
            .and_modify(|(lo, hi)| {
                *lo = (*lo).min(p.x);
                *hi = (*hi).max(p.x);
            })
            .or_insert((p.x, p.x));
    }
    map
}

/// Whether the north/east path through `lower` stays weakly southeast of the
/// one through `upper`: on every horizontal line met by both, each end of
/// `lower`'s run lies weakly east of the matching end of `upper`'s run.
///
/// Shared points and shared edges are allowed. For paths that both end on
/// the same anti-diagonal this is exactly the non-crossing relation.
pub fn weakly_southeast(lower: &[Point], upper: &[Point]) -> bool {
    let a = extents(lower);
    let b = extents(upper);
    a.iter().all(|(y, (lo_a, hi_a))| match b.get(y) {
        Some((lo_b, hi_b)) => lo_a >= lo_b && hi_a >= hi_b,
        None => true,
    })
}

/// No lattice point is shared by two of the paths.
pub fn vertex_disjoint(paths: &[Path]) -> bool {
    let mut seen = HashSet::new();
    paths
        .iter()
        .all(|p| p.points().into_iter().all(|q| seen.insert(q)))
}

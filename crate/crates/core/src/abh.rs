//! Approval ballot hypertriangles (ABHs) and their bijection with SSB
//! triangles.
//!
//! An ABH of size `n` is a list `(A_n, …, A_1)` where `A_s` is an ABT of size
//! `s`. Every entry `A_s(t, u) = 1` with `2 ≤ u ≤ t ≤ s` ties a prefix of row
//! `t` of `A_s` to rows of a smaller triangle `A_{s'}`:
//!
//! ```text
//! s' = s - Σ_{j=u}^{t} A_s(t, j),   t' = u - 1,
//! A_{s'}(t'-1, [1:t'-1]) ≺ A_s(t, [1:t']) ⪯ A_{s'}(t', [1:t'])
//! ```
//!
//! The left comparison applies when `1 < t' ≤ s'` and the right one when
//! `1 ≤ t' ≤ s'`.
//!
//! The map from SSB triangles draws, for every cell `T(r, j)` with `r ≥ 3`,
//! a lattice path through the corners of the rows above it separating larger
//! from smaller entries. The paths for row `r` are the rows of `A_{r-2}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::abt::{abt_violation, enumerate_abt, AbtTriangle, RowViolation};
use crate::error::{invalid, shape, Error, Result};
use crate::paths::{weakly_southeast, Point, Step};
use crate::seq::{prec, preceq};
use crate::ssb::{ssb_triangle_violation, SsbTriangle};
use crate::triangle::{cell_count, Triangle};

/// Largest ABH size accepted by [`enumerate_abh`].
pub const ABH_CAP: usize = 4;

/// `(A_n, …, A_1)`, largest first. Each component is a bit triangle of the
/// right size; row compatibility and the cross-triangle conditions are
/// checked by [`validate_abh`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Abh {
    triangles: Vec<Triangle<u8>>,
}

impl Abh {
    pub fn new(triangles: Vec<Triangle<u8>>) -> Result<Self> {
        let n = triangles.len();
        for (k, t) in triangles.iter().enumerate() {
            if t.size() != n - k {
                return Err(shape(format!(
                    "component {} has size {}, expected {}",
                    k + 1,
                    t.size(),
                    n - k
                )));
            }
            if t.cells().iter().any(|&b| b > 1) {
                return Err(shape(format!("A_{} has an entry other than 0 or 1", n - k)));
            }
        }
        Ok(Abh { triangles })
    }

    /// Builds from row lists, largest triangle first.
    pub fn from_rows(triangles: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        Abh::new(
            triangles
                .into_iter()
                .map(Triangle::from_rows)
                .collect::<Result<_>>()?,
        )
    }

    pub fn zero(size: usize) -> Self {
        Abh {
            triangles: (1..=size).rev().map(|s| Triangle::filled(s, 0)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.triangles.len()
    }

    /// `A_s`.
    pub fn triangle(&self, s: usize) -> &Triangle<u8> {
        &self.triangles[self.size() - s]
    }

    /// Components, largest first.
    pub fn triangles(&self) -> &[Triangle<u8>] {
        &self.triangles
    }

    fn entry(&self, s: usize, t: usize, u: usize) -> u8 {
        *self.triangle(s).get(t, u).expect("index inside A_s")
    }
}

/// One cross-triangle condition generated by `A_s(t, u) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRecord {
    pub s: usize,
    pub t: usize,
    pub u: usize,
    /// `s'`.
    pub target_size: usize,
    /// `t' = u - 1`.
    pub target_row: usize,
    /// `A_{s'}(t'-1, [1:t'-1])`, when `1 < t' ≤ s'`.
    pub lower: Option<Vec<u8>>,
    /// `A_s(t, [1:t'])`.
    pub middle: Vec<u8>,
    /// `A_{s'}(t', [1:t'])`, when `1 ≤ t' ≤ s'`.
    pub upper: Option<Vec<u8>>,
}

impl ConstraintRecord {
    /// `t' > s'`: the condition points past the last row of `A_{s'}`.
    pub fn beyond_target(&self) -> bool {
        self.target_row > self.target_size
    }
}

fn bits(v: &[u8]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for ConstraintRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, t, u, s2, t2) = (self.s, self.t, self.u, self.target_size, self.target_row);
        write!(f, "A_{s}({t},{u}) = 1 gives s' = {s2}, t' = {t2}: ")?;
        if let Some(lower) = &self.lower {
            write!(f, "A_{s2}({},[1:{}]) = {} ≺ ", t2 - 1, t2 - 1, bits(lower))?;
        }
        write!(f, "A_{s}({t},[1:{t2}]) = {}", bits(&self.middle))?;
        if let Some(upper) = &self.upper {
            write!(f, " ⪯ A_{s2}({t2},[1:{t2}]) = {}", bits(upper))?;
        }
        Ok(())
    }
}

/// Which range of `t'` turns the two comparisons on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bounds {
    /// Lower when `1 < t' ≤ s'`, upper when `1 ≤ t' ≤ s'`.
    #[default]
    Definition,
    /// Lower when `1 < t' < s'`, upper when `1 ≤ t' < s'`.
    StrictRestatement,
}

impl Bounds {
    fn lower_applies(self, t2: usize, s2: usize) -> bool {
        match self {
            Bounds::Definition => 1 < t2 && t2 <= s2,
            Bounds::StrictRestatement => 1 < t2 && t2 < s2,
        }
    }

    fn upper_applies(self, t2: usize, s2: usize) -> bool {
        match self {
            Bounds::Definition => 1 <= t2 && t2 <= s2,
            Bounds::StrictRestatement => 1 <= t2 && t2 < s2,
        }
    }
}

fn records_for(h: &Abh, s: usize, bounds: Bounds, out: &mut Vec<ConstraintRecord>) {
    let a = h.triangle(s);
    for t in 2..=s {
        for u in 2..=t {
            if h.entry(s, t, u) != 1 {
                continue;
            }
            let ones: usize = (u..=t).map(|j| usize::from(h.entry(s, t, j))).sum();
            let s2 = s - ones;
            let t2 = u - 1;
            let target = h.triangle(s2.max(1));
            let lower = bounds
                .lower_applies(t2, s2)
                .then(|| target.subrow(t2 - 1, 1, t2 - 1).expect("in range").to_vec());
            let upper = bounds
                .upper_applies(t2, s2)
                .then(|| target.subrow(t2, 1, t2).expect("in range").to_vec());
            out.push(ConstraintRecord {
                s,
                t,
                u,
                target_size: s2,
                target_row: t2,
                lower,
                middle: a.subrow(t, 1, t2).expect("in range").to_vec(),
                upper,
            });
        }
    }
}

/// One record per 1-entry `A_s(t, u)` with `2 ≤ u ≤ t ≤ s`, scanning `s`
/// from largest to smallest and each triangle row-major.
pub fn extract_constraints(h: &Abh) -> Vec<ConstraintRecord> {
    extract_constraints_with(h, Bounds::Definition)
}

pub fn extract_constraints_with(h: &Abh, bounds: Bounds) -> Vec<ConstraintRecord> {
    let mut out = Vec::new();
    for s in (1..=h.size()).rev() {
        records_for(h, s, bounds, &mut out);
    }
    out
}

/// Why an ABH is invalid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbhViolation {
    /// `A_s` is not an ABT.
    Component {
        size: usize,
        violation: RowViolation,
    },
    /// A record with `t' > s'`.
    BeyondTarget(ConstraintRecord),
    /// `lower ≺ middle` fails.
    Lower(ConstraintRecord),
    /// `middle ⪯ upper` fails.
    Upper(ConstraintRecord),
}

impl fmt::Display for AbhViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbhViolation::Component { size, violation } => write!(f, "A_{size}: {violation}"),
            AbhViolation::BeyondTarget(r) => {
                write!(
                    f,
                    "constraint refers past the target triangle (t' > s'): {r}"
                )
            }
            AbhViolation::Lower(r) => write!(f, "lower comparison fails: {r}"),
            AbhViolation::Upper(r) => write!(f, "upper comparison fails: {r}"),
        }
    }
}

fn record_violation(r: ConstraintRecord) -> Option<AbhViolation> {
    if r.beyond_target() {
        return Some(AbhViolation::BeyondTarget(r));
    }
    if let Some(lower) = &r.lower {
        if !prec(lower, &r.middle) {
            return Some(AbhViolation::Lower(r));
        }
    }
    if let Some(upper) = &r.upper {
        if !preceq(&r.middle, upper) {
            return Some(AbhViolation::Upper(r));
        }
    }
    None
}

pub fn abh_violation(h: &Abh, bounds: Bounds) -> Option<AbhViolation> {
    // Largest triangle first: its own rows, then the conditions it generates.
    for s in (1..=h.size()).rev() {
        if let Some(v) = abt_violation(h.triangle(s)).expect("bits checked on construction") {
            return Some(AbhViolation::Component {
                size: s,
                violation: v,
            });
        }
        let mut records = Vec::new();
        records_for(h, s, bounds, &mut records);
        if let Some(v) = records.into_iter().find_map(record_violation) {
            return Some(v);
        }
    }
    None
}

/// Components are ABTs and every constraint record holds.
pub fn validate_abh(h: &Abh) -> bool {
    abh_violation(h, Bounds::Definition).is_none()
}

pub fn validate_abh_with(h: &Abh, bounds: Bounds) -> bool {
    abh_violation(h, bounds).is_none()
}

/// Every valid ABH of size `n`, lexicographic in `(A_n, …, A_1)`.
pub fn enumerate_abh(n: usize) -> Result<Vec<Abh>> {
    enumerate_abh_with(n, Bounds::Definition)
}

/// Chooses `A_n` first and then smaller triangles. Once `A_k` is chosen, every
/// condition whose target is `A_k` can be checked, since its source is a
/// larger triangle that is already fixed.
pub fn enumerate_abh_with(n: usize, bounds: Bounds) -> Result<Vec<Abh>> {
    if n > ABH_CAP {
        return Err(Error::CapExceeded {
            family: "abh",
            requested: n,
            cap: ABH_CAP,
        });
    }
    if n == 0 {
        return Err(Error::Domain("ABH size must be at least 1".into()));
    }
    let pools: Vec<Vec<Triangle<u8>>> = (1..=n)
        .map(|s| enumerate_abt(s).map(|v| v.into_iter().map(AbtTriangle::into_triangle).collect()))
        .collect::<Result<_>>()?;

    // Pending records keyed by target size, filled as larger triangles are fixed.
    fn go(
        n: usize,
        bounds: Bounds,
        pools: &[Vec<Triangle<u8>>],
        chosen: &mut Vec<Triangle<u8>>,
        out: &mut Vec<Abh>,
    ) {
        let k = n - chosen.len();
        if k == 0 {
            out.push(Abh {
                triangles: chosen.clone(),
            });
            return;
        }
        for candidate in &pools[k - 1] {
            chosen.push(candidate.clone());
            // Pad the remaining sizes with zeros so the records can be read;
            // only the ones targeting A_k are checked here.
            let mut full = chosen.clone();
            full.extend((1..k).rev().map(|s| Triangle::filled(s, 0)));
            let h = Abh { triangles: full };
            let mut records = Vec::new();
            for s in k + 1..=n {
                records_for(&h, s, bounds, &mut records);
            }
            let ok = records
                .into_iter()
                .filter(|r| r.target_size == k)
                .all(|r| record_violation(r).is_none());
            if ok {
                go(n, bounds, pools, chosen, out);
            }
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    go(n, bounds, &pools, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Corner paths

/// Steps of the corner path for reference value `x`, starting from corner
/// `(a, b)` and stopping on `b = 0`.
fn corner_path(t: &SsbTriangle, x: u32, mut a: usize, mut b: usize) -> Vec<Step> {
    let mut steps = Vec::with_capacity(b);
    while b > 0 {
        let d = t.get(a, a - b + 1);
        if x > d {
            steps.push(Step::N);
            a -= 1;
        } else {
            steps.push(Step::E);
        }
        b -= 1;
    }
    steps
}

/// Paths `Q_{i,j}`, `1 ≤ j < i ≤ n-1`, on corner labels `(a, b)`. An `N`
/// step goes to `(a-1, b-1)`, an `E` step to `(a, b-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerPathNest {
    n: usize,
    paths: BTreeMap<(usize, usize), Vec<Step>>,
}

impl CornerPathNest {
    /// Shape check: one path per label `(i, j)`, `1 ≤ j < i ≤ n-1`, each of
    /// `j` steps from `{N, E}`.
    pub fn new(n: usize, paths: BTreeMap<(usize, usize), Vec<Step>>) -> Result<Self> {
        let expected = (2..n).map(|i| i - 1).sum::<usize>();
        if paths.len() != expected {
            return Err(shape(format!(
                "{} corner paths given, expected {expected}",
                paths.len()
            )));
        }
        for (&(i, j), steps) in &paths {
            if j == 0 || j >= i || i + 1 > n {
                return Err(shape(format!("no corner path is labelled ({i},{j})")));
            }
            if steps.len() != j || steps.iter().any(|s| !matches!(s, Step::N | Step::E)) {
                return Err(shape(format!("Q_({i},{j}) must be {j} steps over N and E")));
            }
        }
        Ok(CornerPathNest { n, paths })
    }

    /// The paths drawn on an SSB triangle of order `n`: `Q_{r-1, r-1-j}`
    /// separates the entries larger than `T(r, j)` from the smaller ones.
    pub fn from_ssb_triangle(t: &SsbTriangle) -> Result<Self> {
        if let Some(v) = ssb_triangle_violation(t) {
            return Err(invalid("ssb-triangle", v));
        }
        let n = t.n();
        let mut paths = BTreeMap::new();
        for r in 3..=n {
            for i in 1..=r - 2 {
                let j = r - 1 - i;
                paths.insert((r - 1, i), corner_path(t, t.get(r, j), r - 1, i));
            }
        }
        Ok(CornerPathNest { n, paths })
    }

    /// Decodes `A_{r-2}` row `i`, read right to left, as `Q_{r-1,i}` (1 is N).
    /// The ABH has size `n - 2`.
    pub fn from_abh(h: &Abh) -> Self {
        let n = h.size() + 2;
        let mut paths = BTreeMap::new();
        for r in 3..=n {
            let a = h.triangle(r - 2);
            for i in 1..=r - 2 {
                let steps = a
                    .row(i)
                    .iter()
                    .rev()
                    .map(|&b| if b == 1 { Step::N } else { Step::E })
                    .collect();
                paths.insert((r - 1, i), steps);
            }
        }
        CornerPathNest { n, paths }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn path(&self, i: usize, j: usize) -> Option<&[Step]> {
        self.paths.get(&(i, j)).map(Vec::as_slice)
    }

    pub fn paths(&self) -> &BTreeMap<(usize, usize), Vec<Step>> {
        &self.paths
    }

    /// Corner labels visited by `Q_{i,j}`, start included.
    pub fn labels(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(i, j)];
        let (mut a, mut b) = (i, j);
        for s in &self.paths[&(i, j)] {
            if *s == Step::N {
                a -= 1;
            }
            b -= 1;
            out.push((a, b));
        }
        out
    }
}

/// Label `(a, b)` drawn in the plane: `N` points up, `E` points right.
fn label_point((a, b): (usize, usize)) -> Point {
    Point::new(a as i64 - b as i64, -(a as i64))
}

/// For `Q_{s,t}` and a path `P = Q_{u,v}`:
///
/// * same start row: the one starting further west stays weakly northwest;
/// * `u > s`: if `P` reaches row `s`, first at label `(s, w)`, the rest of
///   `P` is weakly northwest of `Q_{s,t}` when `w > t` and weakly southeast
///   when `w ≤ t`.
pub fn corner_nest_violation(c: &CornerPathNest) -> Option<String> {
    let pts = |labels: &[(usize, usize)]| -> Vec<Point> {
        labels.iter().map(|&l| label_point(l)).collect()
    };
    for &(s, t) in c.paths.keys() {
        let q = pts(&c.labels(s, t));
        for &(u, v) in c.paths.keys() {
            if (u, v) == (s, t) || u < s {
                continue;
            }
            let labels = c.labels(u, v);
            let ok = if u == s {
                let p = pts(&labels);
                if v > t {
                    weakly_southeast(&q, &p)
                } else {
                    weakly_southeast(&p, &q)
                }
            } else {
                match labels.iter().position(|&(a, _)| a == s) {
                    None => true,
                    Some(k) => {
                        let w = labels[k].1;
                        let rest = pts(&labels[k..]);
                        if w > t {
                            weakly_southeast(&q, &rest)
                        } else {
                            weakly_southeast(&rest, &q)
                        }
                    }
                }
            };
            if !ok {
                return Some(format!("Q_({u},{v}) crosses Q_({s},{t})"));
            }
        }
    }
    None
}

pub fn validate_corner_nest(c: &CornerPathNest) -> bool {
    corner_nest_violation(c).is_none()
}

// ---------------------------------------------------------------------------
// The bijection

/// Row `i` of `A_{r-2}` is the corner path `Q_{r-1,i}` read backwards, for
/// `3 ≤ r ≤ n`. The result has size `n - 2`.
pub fn ssb_triangle_to_abh(t: &SsbTriangle) -> Result<Abh> {
    if t.n() < 3 {
        return Err(Error::Domain(
            "SSB triangle order must be at least 3".into(),
        ));
    }
    let nest = CornerPathNest::from_ssb_triangle(t)?;
    Ok(nest_to_abh(&nest))
}

fn nest_to_abh(c: &CornerPathNest) -> Abh {
    let n = c.n;
    let triangles = (3..=n)
        .rev()
        .map(|r| {
            Triangle::from_fn(r - 2, |i, k| {
                let steps = &c.paths[&(r - 1, i)];
                u8::from(steps[i - k] == Step::N)
            })
        })
        .collect();
    Abh { triangles }
}

/// Earlier cells larger than the reference whose corner path from label
/// `(a, b)` has the given steps: each `N` step leaving row `a` at
/// `c = a - b` puts `T(a, 1..=c)` above the reference, and the rows at and
/// above the end of the path are entirely larger.
fn larger_cells(steps: &[Step], mut a: usize, mut b: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in steps {
        if *s == Step::N {
            out.extend((1..=a - b).map(|c| (a, c)));
            a -= 1;
        }
        b -= 1;
    }
    out.extend((1..=a).flat_map(|row| (1..=row).map(move |c| (row, c))));
    out
}

/// Inverse of [`ssb_triangle_to_abh`]; the triangle has order `size + 2`.
///
/// Cells are placed row by row into a total order, largest first. Each path
/// fixes which earlier cells lie above its reference cell; those must form a
/// prefix of the current order and the prefixes must grow along the row.
/// Values `N, …, 1` are then handed out by rank.
pub fn abh_to_ssb_triangle(h: &Abh) -> Result<SsbTriangle> {
    if let Some(v) = abh_violation(h, Bounds::Definition) {
        return Err(invalid("abh", v.to_string()));
    }
    let nest = CornerPathNest::from_abh(h);
    let n = nest.n;
    let mut order: Vec<(usize, usize)> = vec![(1, 1), (2, 1), (2, 2)];
    for r in 3..=n {
        let mut cuts = Vec::with_capacity(r);
        for j in 1..=r {
            let larger = if j + 1 >= r {
                larger_cells(&[], r - 1, 0)
            } else {
                let i = r - 1 - j;
                larger_cells(&nest.paths[&(r - 1, i)], r - 1, i)
            };
            let k = larger.len();
            let mut prefix = order[..k].to_vec();
            let mut larger_sorted = larger;
            prefix.sort_unstable();
            larger_sorted.sort_unstable();
            if prefix != larger_sorted {
                return Err(invalid(
                    "abh",
                    format!("cut for T({r},{j}) is not a prefix of the order so far"),
                ));
            }
            if cuts.last().is_some_and(|&prev| prev > k) {
                return Err(invalid(
                    "abh",
                    format!("cuts shrink along row {r} at T({r},{j})"),
                ));
            }
            cuts.push(k);
        }
        for (j, &k) in cuts.iter().enumerate() {
            order.insert(k + j, (r, j + 1));
        }
    }
    let total = cell_count(n) as u32;
    let mut values: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (rank, cell) in order.iter().enumerate() {
        values.insert(*cell, total - rank as u32);
    }
    let t = SsbTriangle::new(Triangle::from_fn(n, |i, j| values[&(i, j)]));
    if let Some(v) = ssb_triangle_violation(&t) {
        return Err(invalid(
            "abh",
            format!("rebuilt triangle is not an SSB triangle: {v}"),
        ));
    }
    if ssb_triangle_to_abh(&t)? != *h {
        return Err(invalid(
            "abh",
            "rebuilt triangle does not map back to the hypertriangle",
        ));
    }
    Ok(t)
}

//! Totally symmetric self-complementary plane partitions (TSSCPPs) and the
//! representations used to reach them from ABTs.
//!
//! The chain of bijections, for a TSSCPP of order `n` (a `2n × 2n` array
//! with entries at most `2n`):
//!
//! ```text
//! full array ⇄ fundamental domain ⇄ magog triangle
//!                     ⇅
//!            non-intersecting paths ⇄ Boolean triangle ⇄ ABT of size n-1
//! ```
//!
//! * The **fundamental domain** `h(r, c) = π(n+r, n+c)`, `1 ≤ r ≤ c ≤ n`,
//!   determines `π`. Row `r` stores `h(r, r..=n)` including the cells forced
//!   to zero by `h(r, c) ≤ n - c`.
//! * The **magog triangle** is `M(i, j) = 1 + h(n+1-i, n+1-j)`.
//! * Slicing the domain at height `t` gives a staircase footprint whose
//!   boundary is the path with `n - t` steps of the **NILP**.
//! * Column `s` of the **Boolean triangle** spells out that path, and
//!   complementing and rotating the Boolean triangle gives the **ABT**.

use std::fmt;

use crate::abt::AbtTriangle;
use crate::error::{invalid, shape, Error, Result};
use crate::paths::{vertex_disjoint, Path, Point, Step};
use crate::triangle::Triangle;

/// Largest order accepted by [`enumerate_magog`].
pub const MAGOG_CAP: usize = 7;

// ---------------------------------------------------------------------------
// Boolean triangles

/// Binary triangle `B(r, s)` for `1 ≤ r ≤ n-1`, `n-r ≤ s ≤ n-1`.
///
/// Row `r` has `r` entries, right-justified: its first entry is `B(r, n-r)`.
/// Construction checks the shape only; see [`validate_boolean`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanTriangle {
    order: usize,
    tri: Triangle<u8>,
}

impl BooleanTriangle {
    /// `rows[r-1]` lists `B(r, n-r), …, B(r, n-1)`.
    pub fn from_rows(order: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if order == 0 {
            return Err(shape("Boolean triangle order must be at least 1"));
        }
        if rows.len() != order - 1 {
            return Err(shape(format!(
                "Boolean triangle of order {order} needs {} rows, got {}",
                order - 1,
                rows.len()
            )));
        }
        let tri = Triangle::from_rows(rows)?;
        if tri.cells().iter().any(|&b| b > 1) {
            return Err(shape("Boolean triangle entries must be 0 or 1"));
        }
        Ok(BooleanTriangle { order, tri })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `B(r, s)`; zero outside the triangle.
    pub fn get(&self, r: usize, s: usize) -> u8 {
        let n = self.order;
        if r == 0 || r >= n || s + r < n || s >= n {
            return 0;
        }
        *self.tri.get(r, s + r + 1 - n).expect("in range")
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.tri.to_rows()
    }

    pub fn as_triangle(&self) -> &Triangle<u8> {
        &self.tri
    }
}

/// Indices `(t, s)` of the first failed column compatibility inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnViolation {
    pub t: usize,
    pub s: usize,
    pub left: u32,
    pub right: u32,
}

impl fmt::Display for ColumnViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "column compatibility fails at (t, s) = ({}, {}): 1 + {} < {}",
            self.t,
            self.s,
            self.left - 1,
            self.right
        )
    }
}

/// `1 + Σ_{r=t+1}^{s} B(r, n-t-1) ≥ Σ_{r=t}^{s} B(r, n-t)` for all
/// `1 ≤ t ≤ n-2`, `t+1 ≤ s ≤ n-1`.
pub fn boolean_violation(b: &BooleanTriangle) -> Option<ColumnViolation> {
    let n = b.order;
    for t in 1..n.saturating_sub(1) {
        for s in t + 1..n {
            let left = 1
                + (t + 1..=s)
                    .map(|r| u32::from(b.get(r, n - t - 1)))
                    .sum::<u32>();
            let right = (t..=s).map(|r| u32::from(b.get(r, n - t))).sum::<u32>();
            if left < right {
                return Some(ColumnViolation { t, s, left, right });
            }
        }
    }
    None
}

pub fn validate_boolean(b: &BooleanTriangle) -> bool {
    boolean_violation(b).is_none()
}

/// Complement and rotate: `B(j, k) = 1 - A(k, n-j)`, where the ABT has size
/// `n - 1`.
pub fn abt_to_boolean(a: &AbtTriangle) -> BooleanTriangle {
    let n = a.size() + 1;
    let rows = (1..n)
        .map(|j| (n - j..n).map(|k| 1 - a.get(k, n - j)).collect())
        .collect();
    BooleanTriangle::from_rows(n, rows).expect("shape by construction")
}

/// `A(i, j) = 1 - B(n-j, i)`.
pub fn boolean_to_abt(b: &BooleanTriangle) -> Result<AbtTriangle> {
    if let Some(v) = boolean_violation(b) {
        return Err(invalid("boolean", v.to_string()));
    }
    let n = b.order;
    let tri = Triangle::from_fn(n - 1, |i, j| 1 - b.get(n - j, i));
    Ok(AbtTriangle::new_unchecked(tri))
}

// ---------------------------------------------------------------------------
// Magog triangles

/// Integer triangle `M(i, j)`, `1 ≤ j ≤ i ≤ n`. Shape only; see
/// [`validate_magog`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MagogTriangle(Triangle<u32>);

impl MagogTriangle {
    pub fn new(tri: Triangle<u32>) -> Self {
        MagogTriangle(tri)
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Ok(MagogTriangle(Triangle::from_rows(rows)?))
    }

    /// The minimal magog triangle, all ones.
    pub fn ones(order: usize) -> Self {
        MagogTriangle(Triangle::filled(order, 1))
    }

    pub fn order(&self) -> usize {
        self.0.size()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        *self.0.get(i, j).expect("index inside the magog triangle")
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.0.to_rows()
    }

    pub fn as_triangle(&self) -> &Triangle<u32> {
        &self.0
    }
}

pub fn magog_violation(m: &MagogTriangle) -> Option<String> {
    let n = m.order();
    for i in 1..=n {
        for j in 1..=i {
            let v = m.get(i, j);
            if v < 1 || v as usize > j {
                return Some(format!("M({i},{j}) = {v} is outside [1, {j}]"));
            }
            if j < i && v > m.get(i, j + 1) {
                return Some(format!(
                    "row {i} decreases between columns {j} and {}",
                    j + 1
                ));
            }
            if i < n && v > m.get(i + 1, j) {
                return Some(format!(
                    "column {j} decreases between rows {i} and {}",
                    i + 1
                ));
            }
        }
    }
    None
}

/// `1 ≤ M(i,j) ≤ j`, rows weakly increasing left to right, columns weakly
/// increasing top to bottom.
pub fn validate_magog(m: &MagogTriangle) -> bool {
    magog_violation(m).is_none()
}

/// Every magog triangle of order `n` in row-major lexicographic order.
pub fn enumerate_magog(n: usize) -> Result<Vec<MagogTriangle>> {
    if n > MAGOG_CAP {
        return Err(Error::CapExceeded {
            family: "magog",
            requested: n,
            cap: MAGOG_CAP,
        });
    }
    let cells = n * (n + 1) / 2;
    let coords: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| (i - 1) * i / 2 + j - 1;
    let mut out = Vec::new();
    let mut values = vec![0u32; cells];

    // Lower bound of cell k given the cells before it in row-major order.
    let lower = |values: &[u32], k: usize| -> u32 {
        let (i, j) = coords[k];
        let left = if j > 1 { values[index(i, j - 1)] } else { 1 };
        let above = if j < i { values[index(i - 1, j)] } else { 1 };
        left.max(above)
    };

    if cells == 0 {
        out.push(MagogTriangle(Triangle::from_cells(0, vec![])?));
        return Ok(out);
    }
    let mut k = 0usize;
    values[0] = 1;
    loop {
        let (_, j) = coords[k];
        if values[k] as usize > j {
            // Exhausted this cell: backtrack.
            if k == 0 {
                break;
            }
            k -= 1;
            values[k] += 1;
            continue;
        }
        if k + 1 == cells {
            out.push(MagogTriangle(Triangle::from_cells(n, values.clone())?));
            values[k] += 1;
        } else {
            k += 1;
            values[k] = lower(&values, k);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Fundamental domains

/// Heights `h(r, c)` for `1 ≤ r ≤ c ≤ n`; row `r` stores `h(r, r..=n)`.
/// Shape only; see [`validate_domain`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FundamentalDomain {
    order: usize,
    rows: Vec<Vec<u32>>,
}

impl FundamentalDomain {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(shape(format!(
                    "domain row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    n - k
                )));
            }
        }
        Ok(FundamentalDomain { order: n, rows })
    }

    pub fn zero(order: usize) -> Self {
        FundamentalDomain {
            order,
            rows: (0..order).map(|k| vec![0; order - k]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `h(r, c)` for `r ≤ c`.
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.rows[r - 1][c - r]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

pub fn domain_violation(d: &FundamentalDomain) -> Option<String> {
    let n = d.order;
    for r in 1..=n {
        for c in r..=n {
            let h = d.get(r, c);
            if h as usize > n - c {
                return Some(format!("h({r},{c}) = {h} exceeds {}", n - c));
            }
            if c < n && h < d.get(r, c + 1) {
                return Some(format!(
                    "row {r} increases between columns {c} and {}",
                    c + 1
                ));
            }
            if r < c && d.get(r + 1, c) > h {
                return Some(format!(
                    "column {c} increases between rows {r} and {}",
                    r + 1
                ));
            }
        }
    }
    None
}

/// `0 ≤ h(r,c) ≤ n-c`, weakly decreasing along rows and down columns.
pub fn validate_domain(d: &FundamentalDomain) -> bool {
    domain_violation(d).is_none()
}

/// `h(r, c) = M(n+1-r, n+1-c) - 1`.
pub fn magog_to_domain(m: &MagogTriangle) -> Result<FundamentalDomain> {
    if let Some(v) = magog_violation(m) {
        return Err(invalid("magog", v));
    }
    let n = m.order();
    let rows = (1..=n)
        .map(|r| (r..=n).map(|c| m.get(n + 1 - r, n + 1 - c) - 1).collect())
        .collect();
    FundamentalDomain::from_rows(rows)
}

/// `M(i, j) = 1 + h(n+1-i, n+1-j)`.
pub fn domain_to_magog(d: &FundamentalDomain) -> Result<MagogTriangle> {
    if let Some(v) = domain_violation(d) {
        return Err(invalid("domain", v));
    }
    let n = d.order;
    Ok(MagogTriangle(Triangle::from_fn(n, |i, j| {
        1 + d.get(n + 1 - i, n + 1 - j)
    })))
}

// ---------------------------------------------------------------------------
// Non-intersecting lattice paths

/// Paths `P_1 … P_{n-1}` for a TSSCPP of order `n`. `P_i` starts at
/// `(2i, i)` and takes `i` steps south or southwest down to the x-axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NilpNest {
    order: usize,
    paths: Vec<Path>,
}

fn nilp_start(i: usize) -> Point {
    Point::new(2 * i as i64, i as i64)
}

impl NilpNest {
    /// Shape check: `paths[i-1]` must start at `(2i, i)` with `i` steps from
    /// `{S, SW}`.
    pub fn new(paths: Vec<Path>) -> Result<Self> {
        for (k, p) in paths.iter().enumerate() {
            let i = k + 1;
            if p.start != nilp_start(i) {
                return Err(shape(format!(
                    "P_{i} starts at {}, expected {}",
                    p.start,
                    nilp_start(i)
                )));
            }
            if p.steps.len() != i {
                return Err(shape(format!(
                    "P_{i} has {} steps, expected {i}",
                    p.steps.len()
                )));
            }
            if p.steps.iter().any(|s| !matches!(s, Step::S | Step::Sw)) {
                return Err(shape(format!("P_{i} uses a step other than S or SW")));
            }
        }
        Ok(NilpNest {
            order: paths.len() + 1,
            paths,
        })
    }

    /// TSSCPP order, one more than the number of paths.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `P_i`, 1-based.
    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i - 1]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }
}

/// No two paths share a lattice point.
pub fn validate_nilp(p: &NilpNest) -> bool {
    vertex_disjoint(&p.paths)
}

/// Slices the domain into levels. At level `t` the footprint row lengths are
/// `λ_r = #{c : h(r, c) ≥ t}`; the path with `s = n - t` steps from
/// `(2s, s)` has its south steps at positions `s + 1 - λ_r` (one per
/// non-empty row) and southwest steps elsewhere.
pub fn domain_to_nilp(d: &FundamentalDomain) -> Result<NilpNest> {
    if let Some(v) = domain_violation(d) {
        return Err(invalid("domain", v));
    }
    let n = d.order;
    let mut paths = Vec::with_capacity(n.saturating_sub(1));
    for s in 1..n {
        let t = (n - s) as u32;
        let mut steps = vec![Step::Sw; s];
        for r in 1..=n {
            let lambda = (r..=n).filter(|&c| d.get(r, c) >= t).count();
            if lambda == 0 {
                break;
            }
            let pos = (s + 1)
                .checked_sub(lambda)
                .filter(|&k| k >= 1)
                .ok_or_else(|| {
                    Error::Contradiction(format!("level {t} row {r} footprint too long"))
                })?;
            if steps[pos - 1] == Step::S {
                return Err(Error::Contradiction(format!(
                    "level {t}: two footprint rows map to step {pos}"
                )));
            }
            steps[pos - 1] = Step::S;
        }
        paths.push(Path::new(nilp_start(s), steps));
    }
    NilpNest::new(paths)
}

/// Inverse of [`domain_to_nilp`]: the `r`-th south step of `P_s`, at
/// position `k`, gives `λ_r(n - s) = s + 1 - k`, and
/// `h(r, c) = #{t : λ_r(t) ≥ c - r + 1}`.
pub fn nilp_to_domain(p: &NilpNest) -> Result<FundamentalDomain> {
    if !validate_nilp(p) {
        return Err(invalid("nilp", "paths share a lattice point"));
    }
    let n = p.order;
    let mut rows: Vec<Vec<u32>> = (1..=n).map(|r| vec![0; n + 1 - r]).collect();
    for s in 1..n {
        let south: Vec<usize> = p.paths[s - 1]
            .steps
            .iter()
            .enumerate()
            .filter(|(_, &st)| st == Step::S)
            .map(|(k, _)| k + 1)
            .collect();
        for (idx, &k) in south.iter().enumerate() {
            let r = idx + 1;
            let lambda = s + 1 - k;
            if r > n || lambda > n + 1 - r {
                return Err(invalid(
                    "nilp",
                    format!("P_{s} footprint leaves the domain"),
                ));
            }
            for cell in rows[r - 1].iter_mut().take(lambda) {
                *cell += 1;
            }
        }
    }
    let d = FundamentalDomain::from_rows(rows)?;
    // Levels must stack; checking the round trip catches any that do not.
    if domain_violation(&d).is_some() || domain_to_nilp(&d)? != *p {
        return Err(invalid(
            "nilp",
            "levels do not stack into a fundamental domain",
        ));
    }
    Ok(d)
}

/// Column `s` of the Boolean triangle, read top to bottom, spells `P_s`:
/// 1 is a southwest step, 0 a south step.
pub fn boolean_to_nilp(b: &BooleanTriangle) -> Result<NilpNest> {
    if let Some(v) = boolean_violation(b) {
        return Err(invalid("boolean", v.to_string()));
    }
    let n = b.order;
    let paths = (1..n)
        .map(|s| {
            let steps = (n - s..n)
                .map(|r| if b.get(r, s) == 1 { Step::Sw } else { Step::S })
                .collect();
            Path::new(nilp_start(s), steps)
        })
        .collect();
    NilpNest::new(paths)
}

pub fn nilp_to_boolean(p: &NilpNest) -> Result<BooleanTriangle> {
    if !validate_nilp(p) {
        return Err(invalid("nilp", "paths share a lattice point"));
    }
    let n = p.order;
    let rows = (1..n)
        .map(|r| {
            (n - r..n)
                .map(|s| u8::from(p.paths[s - 1].steps[r + s - n] == Step::Sw))
                .collect()
        })
        .collect();
    BooleanTriangle::from_rows(n, rows)
}

/// Magog of order `n` to ABT of size `n - 1`, through the domain, path and
/// Boolean representations.
pub fn magog_to_abt(m: &MagogTriangle) -> Result<AbtTriangle> {
    let d = magog_to_domain(m)?;
    let p = domain_to_nilp(&d)?;
    let b = nilp_to_boolean(&p)?;
    boolean_to_abt(&b)
}

pub fn abt_to_magog(a: &AbtTriangle) -> Result<MagogTriangle> {
    let b = abt_to_boolean(a);
    let p = boolean_to_nilp(&b)?;
    let d = nilp_to_domain(&p)?;
    domain_to_magog(&d)
}

// ---------------------------------------------------------------------------
// Full plane partitions

/// A `2n × 2n` array `π(i, j)` with entries in `[0, 2n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullTsscpp {
    order: usize,
    matrix: Vec<Vec<u32>>,
}

impl FullTsscpp {
    pub fn from_matrix(matrix: Vec<Vec<u32>>) -> Result<Self> {
        let m = matrix.len();
        if !m.is_multiple_of(2) {
            return Err(shape(format!("TSSCPP matrix has odd side {m}")));
        }
        if matrix.iter().any(|row| row.len() != m) {
            return Err(shape("TSSCPP matrix is not square"));
        }
        Ok(FullTsscpp {
            order: m / 2,
            matrix,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `π(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.matrix[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        z <= self.get(x, y) as usize
    }
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

pub fn tsscpp_violation(f: &FullTsscpp) -> Option<String> {
    let m = 2 * f.order;
    for i in 1..=m {
        for j in 1..=m {
            let v = f.get(i, j);
            if v as usize > m {
                return Some(format!("π({i},{j}) = {v} exceeds {m}"));
            }
            if j < m && v < f.get(i, j + 1) {
                return Some(format!("row {i} increases at column {j}"));
            }
            if i < m && v < f.get(i + 1, j) {
                return Some(format!("column {j} increases at row {i}"));
            }
            if v + f.get(m + 1 - i, m + 1 - j) != m as u32 {
                return Some(format!("π({i},{j}) + π({},{}) ≠ {m}", m + 1 - i, m + 1 - j));
            }
        }
    }
    for x in 1..=m {
        for y in 1..=m {
            for z in 1..=m {
                let c = [x, y, z];
                let here = f.contains(x, y, z);
                for p in &PERMS[1..] {
                    if f.contains(c[p[0]], c[p[1]], c[p[2]]) != here {
                        return Some(format!(
                            "cube ({x},{y},{z}) is not fixed by the axis permutation {p:?}"
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Plane partition, complement identity and invariance of the cube set under
/// all six axis permutations.
pub fn verify_tsscpp(f: &FullTsscpp) -> bool {
    tsscpp_violation(f).is_none()
}

/// Rebuilds the full array from its fundamental domain.
///
/// Works on the `2n × 2n × 2n` occupancy grid: the domain fixes every cube
/// above a cell `(n+r, n+c)`, and those facts are pushed through the axis
/// permutations and the complement involution
/// `(x, y, z) ↦ (2n+1-x, 2n+1-y, 2n+1-z)` until nothing changes. Every cube
/// has two coordinates on the same side of `n`, so the closure reaches the
/// whole grid; conflicting assignments, or a result that is not a plane
/// partition, mean the domain was not a TSSCPP domain.
pub fn domain_to_full(d: &FundamentalDomain) -> Result<FullTsscpp> {
    let n = d.order;
    let m = 2 * n;
    let idx = |x: usize, y: usize, z: usize| ((x - 1) * m + (y - 1)) * m + (z - 1);
    let mut state: Vec<Option<bool>> = vec![None; m * m * m];
    let mut work: Vec<[usize; 3]> = Vec::new();

    let assign =
        |state: &mut Vec<Option<bool>>, work: &mut Vec<[usize; 3]>, c: [usize; 3], v: bool| {
            let k = idx(c[0], c[1], c[2]);
            match state[k] {
                None => {
                    state[k] = Some(v);
                    work.push(c);
                    Ok(())
                }
                Some(old) if old == v => Ok(()),
                Some(_) => Err(Error::Contradiction(format!(
                    "cube ({},{},{}) is forced both in and out",
                    c[0], c[1], c[2]
                ))),
            }
        };

    for r in 1..=n {
        for c in r..=n {
            let h = d.get(r, c) as usize;
            for z in 1..=m {
                assign(&mut state, &mut work, [n + r, n + c, z], z <= h)?;
            }
        }
    }
    while let Some(c) = work.pop() {
        let v = state[idx(c[0], c[1], c[2])].expect("assigned before queued");
        for p in &PERMS[1..] {
            assign(&mut state, &mut work, [c[p[0]], c[p[1]], c[p[2]]], v)?;
        }
        assign(
            &mut state,
            &mut work,
            [m + 1 - c[0], m + 1 - c[1], m + 1 - c[2]],
            !v,
        )?;
    }

    let mut matrix = vec![vec![0u32; m]; m];
    for x in 1..=m {
        for y in 1..=m {
            let mut height = 0;
            for z in 1..=m {
                match state[idx(x, y, z)] {
                    None => {
                        return Err(Error::Contradiction(format!(
                            "cube ({x},{y},{z}) undetermined"
                        )))
                    }
                    Some(true) if height + 1 == z => height = z,
                    Some(true) => {
                        return Err(Error::Contradiction(format!(
                            "stack over ({x},{y}) has a gap below height {z}"
                        )))
                    }
                    Some(false) => {}
                }
            }
            matrix[x - 1][y - 1] = height as u32;
        }
    }
    let full = FullTsscpp { order: n, matrix };
    if let Some(v) = tsscpp_violation(&full) {
        return Err(Error::Contradiction(v));
    }
    Ok(full)
}

/// Reads the fundamental domain back off a verified TSSCPP.
pub fn full_to_domain(f: &FullTsscpp) -> Result<FundamentalDomain> {
    if let Some(v) = tsscpp_violation(f) {
        return Err(invalid("tsscpp", v));
    }
    let n = f.order;
    let rows = (1..=n)
        .map(|r| (r..=n).map(|c| f.get(n + r, n + c)).collect())
        .collect();
    FundamentalDomain::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abt::enumerate_abt;
    use crate::paths::steps_from_str;

    fn order5_magog_example() -> MagogTriangle {
        MagogTriangle::from_rows(vec![
            vec![1],
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 2, 2, 3],
            vec![1, 2, 2, 4, 4],
        ])
        .unwrap()
    }

    fn order5_domain_example() -> FundamentalDomain {
        FundamentalDomain::from_rows(vec![
            vec![3, 3, 1, 1, 0],
            vec![2, 1, 1, 0],
            vec![0, 0, 0],
            vec![0, 0],
            vec![0],
        ])
        .unwrap()
    }

    fn order6_domain_example() -> FundamentalDomain {
        FundamentalDomain::from_rows(vec![
            vec![4, 4, 3, 1, 1, 0],
            vec![2, 1, 1, 1, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 0],
            vec![0, 0],
            vec![0],
        ])
        .unwrap()
    }

    fn order6_boolean_example() -> BooleanTriangle {
        BooleanTriangle::from_rows(
            6,
            vec![
                vec![0],
                vec![1, 0],
                vec![0, 0, 1],
                vec![0, 1, 1, 0],
                vec![1, 1, 1, 0, 1],
            ],
        )
        .unwrap()
    }

    fn order6_abt_example() -> AbtTriangle {
        AbtTriangle::from_rows(vec![
            vec![0],
            vec![0, 1],
            vec![0, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1, 1],
        ])
        .unwrap()
    }

    fn all_bit_booleans(order: usize) -> Vec<BooleanTriangle> {
        let rows = order - 1;
        let cells = rows * (rows + 1) / 2;
        (0u32..(1 << cells))
            .map(|mask| {
                let bits: Vec<u8> = (0..cells).map(|k| ((mask >> k) & 1) as u8).collect();
                let tri = Triangle::from_cells(rows, bits).unwrap();
                BooleanTriangle::from_rows(order, tri.to_rows()).unwrap()
            })
            .collect()
    }

    #[test]
    fn boolean_examples() {
        assert!(validate_boolean(&order6_boolean_example()));
        for n in 2..=6 {
            let ones = BooleanTriangle::from_rows(n, (1..n).map(|r| vec![1; r]).collect()).unwrap();
            assert!(validate_boolean(&ones));
        }
        let valid_order2 = all_bit_booleans(2)
            .iter()
            .filter(|b| validate_boolean(b))
            .count();
        assert_eq!(valid_order2, 2);
        assert!(BooleanTriangle::from_rows(3, vec![vec![0]]).is_err());
        assert!(BooleanTriangle::from_rows(2, vec![vec![2]]).is_err());
    }

    #[test]
    fn boolean_accessor_is_right_justified() {
        let b = order6_boolean_example();
        assert_eq!(b.get(1, 5), 0);
        assert_eq!(b.get(2, 4), 1);
        assert_eq!(b.get(5, 1), 1);
        assert_eq!(b.get(5, 4), 0);
        assert_eq!(b.get(1, 4), 0);
    }

    #[test]
    fn order6_abt_boolean_pair() {
        assert_eq!(
            abt_to_boolean(&order6_abt_example()),
            order6_boolean_example()
        );
        assert_eq!(
            boolean_to_abt(&order6_boolean_example()).unwrap(),
            order6_abt_example()
        );
        for n in 2..=6 {
            let ones = BooleanTriangle::from_rows(n, (1..n).map(|r| vec![1; r]).collect()).unwrap();
            assert_eq!(abt_to_boolean(&AbtTriangle::zero(n - 1)), ones);
        }
    }

    #[test]
    fn boolean_validity_matches_abt_validity() {
        // Every bit pattern of order 5, valid or not.
        for b in all_bit_booleans(5) {
            let n = 5;
            let tri = Triangle::from_fn(n - 1, |i, j| 1 - b.get(n - j, i));
            assert_eq!(
                validate_boolean(&b),
                crate::abt::validate_abt(&tri).unwrap()
            );
        }
    }

    #[test]
    fn magog_examples() {
        assert!(validate_magog(&order5_magog_example()));
        assert!(validate_magog(&MagogTriangle::ones(5)));
        let mut rows = order5_magog_example().to_rows();
        rows[4] = vec![1, 2, 2, 4, 3];
        assert!(!validate_magog(&MagogTriangle::from_rows(rows).unwrap()));
    }

    #[test]
    fn magog_counts_and_order() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_magog(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
        let four = enumerate_magog(4).unwrap();
        assert!(four
            .windows(2)
            .all(|w| w[0].as_triangle().cells() < w[1].as_triangle().cells()));
        assert!(four.iter().all(validate_magog));
        assert!(enumerate_magog(MAGOG_CAP + 1).is_err());
    }

    #[test]
    fn magog_enumeration_matches_brute_force() {
        // All triangles with M(i,j) in [1, j], filtered by the validator.
        let n = 4;
        let coords: Vec<usize> = (1..=n).flat_map(|i| 1..=i).collect();
        let mut count = 0;
        let mut vals = vec![1u32; coords.len()];
        'outer: loop {
            let m = MagogTriangle::new(Triangle::from_cells(n, vals.clone()).unwrap());
            if validate_magog(&m) {
                count += 1;
            }
            for k in 0..vals.len() {
                vals[k] += 1;
                if vals[k] as usize <= coords[k] {
                    continue 'outer;
                }
                vals[k] = 1;
            }
            break;
        }
        assert_eq!(count, enumerate_magog(n).unwrap().len());
    }

    #[test]
    fn magog_domain_examples() {
        assert_eq!(
            magog_to_domain(&order5_magog_example()).unwrap(),
            order5_domain_example()
        );
        assert_eq!(
            domain_to_magog(&order5_domain_example()).unwrap(),
            order5_magog_example()
        );
        assert_eq!(
            magog_to_domain(&MagogTriangle::ones(4)).unwrap(),
            FundamentalDomain::zero(4)
        );
        for m in enumerate_magog(4).unwrap() {
            let d = magog_to_domain(&m).unwrap();
            assert!(validate_domain(&d));
            assert_eq!(domain_to_magog(&d).unwrap(), m);
        }
    }

    #[test]
    fn layer_rule_on_order6_domain() {
        let nest = domain_to_nilp(&order6_domain_example()).unwrap();
        let p5 = nest.path(5);
        assert_eq!(p5.start, Point::new(10, 5));
        assert_eq!(p5.steps, steps_from_str("SSWSW").unwrap());
        assert!(validate_nilp(&nest));
        assert_eq!(nilp_to_boolean(&nest).unwrap(), order6_boolean_example());
        assert_eq!(nilp_to_domain(&nest).unwrap(), order6_domain_example());
    }

    #[test]
    fn boolean_column_spells_path() {
        let nest = boolean_to_nilp(&order6_boolean_example()).unwrap();
        let pts: Vec<(i64, i64)> = nest.path(5).points().iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(pts, vec![(10, 5), (10, 4), (10, 3), (9, 2), (9, 1), (8, 0)]);
        assert_eq!(nilp_to_boolean(&nest).unwrap(), order6_boolean_example());
    }

    #[test]
    fn zero_domain_gives_southwest_paths() {
        let nest = domain_to_nilp(&FundamentalDomain::zero(5)).unwrap();
        for i in 1..5 {
            assert!(nest.path(i).steps.iter().all(|&s| s == Step::Sw));
            assert_eq!(nest.path(i).end(), Point::new(i as i64, 0));
        }
        // Boolean column of all S steps is the vertical drop.
        let b = BooleanTriangle::from_rows(3, vec![vec![0], vec![0, 0]]).unwrap();
        let nest = boolean_to_nilp(&b).unwrap();
        assert_eq!(nest.path(2).end(), Point::new(4, 0));
    }

    #[test]
    fn order5_magog_to_abt() {
        let expected =
            AbtTriangle::from_rows(vec![vec![0], vec![0, 1], vec![1, 1, 0], vec![0, 0, 1, 1]])
                .unwrap();
        assert_eq!(magog_to_abt(&order5_magog_example()).unwrap(), expected);
        assert_eq!(abt_to_magog(&expected).unwrap(), order5_magog_example());
        assert_eq!(
            magog_to_abt(&MagogTriangle::ones(5)).unwrap(),
            AbtTriangle::zero(4)
        );
    }

    #[test]
    fn magog_image_is_all_abts() {
        for n in 2..=5 {
            let mut image: Vec<AbtTriangle> = enumerate_magog(n)
                .unwrap()
                .iter()
                .map(|m| magog_to_abt(m).unwrap())
                .collect();
            image.sort();
            image.dedup();
            let mut abts = enumerate_abt(n - 1).unwrap();
            abts.sort();
            assert_eq!(image, abts, "order {n}");
        }
    }

    #[test]
    fn nilp_rejects_bad_nests() {
        let overlapping = vec![
            Path::new(Point::new(2, 1), vec![Step::S]),
            Path::new(Point::new(4, 2), vec![Step::Sw, Step::Sw]),
        ];
        let nest = NilpNest::new(overlapping).unwrap();
        assert!(!validate_nilp(&nest));
        assert!(nilp_to_domain(&nest).is_err());
        assert!(NilpNest::new(vec![Path::new(Point::new(2, 1), vec![])]).is_err());
        assert!(NilpNest::new(vec![Path::new(Point::new(2, 2), vec![Step::S])]).is_err());
        assert!(NilpNest::new(vec![Path::new(Point::new(2, 1), vec![Step::N])]).is_err());
    }

    #[test]
    fn order5_full_matrix() {
        let expected: Vec<Vec<u32>> = vec![
            vec![10, 10, 10, 10, 10, 9, 9, 7, 7, 5],
            vec![10, 10, 10, 9, 9, 7, 7, 5, 5, 3],
            vec![10, 10, 10, 9, 9, 7, 6, 5, 5, 3],
            vec![10, 9, 9, 8, 7, 5, 5, 4, 3, 1],
            vec![10, 9, 9, 7, 7, 5, 5, 3, 3, 1],
            vec![9, 7, 7, 5, 5, 3, 3, 1, 1, 0],
            vec![9, 7, 6, 5, 5, 3, 2, 1, 1, 0],
            vec![7, 5, 5, 4, 3, 1, 1, 0, 0, 0],
            vec![7, 5, 5, 3, 3, 1, 1, 0, 0, 0],
            vec![5, 3, 3, 1, 1, 0, 0, 0, 0, 0],
        ];
        let full = domain_to_full(&order5_domain_example()).unwrap();
        assert_eq!(full.matrix(), expected.as_slice());
        assert!(verify_tsscpp(&full));
        assert_eq!(full_to_domain(&full).unwrap(), order5_domain_example());
    }

    #[test]
    fn single_cell_mutations_break_symmetry() {
        let full = domain_to_full(&order5_domain_example()).unwrap();
        let m = full.matrix().to_vec();
        for i in 0..10 {
            for j in 0..10 {
                let mut bumped = m.clone();
                bumped[i][j] += 1;
                assert!(!verify_tsscpp(&FullTsscpp::from_matrix(bumped).unwrap()));
            }
        }
    }

    #[test]
    fn smallest_boxes() {
        let one = domain_to_full(&FundamentalDomain::zero(1)).unwrap();
        assert_eq!(one.matrix(), &[vec![2, 1], vec![1, 0]]);
        assert!(verify_tsscpp(&one));
        for m in enumerate_magog(2).unwrap() {
            let full = domain_to_full(&magog_to_domain(&m).unwrap()).unwrap();
            assert!(verify_tsscpp(&full));
        }
        let zero = domain_to_full(&FundamentalDomain::zero(4)).unwrap();
        assert!(verify_tsscpp(&zero));
    }

    #[test]
    fn propagation_accepts_exactly_valid_domains() {
        // Every shaped order-3 domain with heights in [0, 3].
        let n = 3;
        let mut accepted = 0;
        for mask in 0u32..4096 {
            let vals: Vec<u32> = (0..6).map(|k| (mask >> (2 * k)) & 3).collect();
            let d = FundamentalDomain::from_rows(vec![
                vals[0..3].to_vec(),
                vals[3..5].to_vec(),
                vals[5..6].to_vec(),
            ])
            .unwrap();
            let rebuilt = domain_to_full(&d);
            assert_eq!(rebuilt.is_ok(), validate_domain(&d), "{d:?}");
            if let Ok(full) = rebuilt {
                accepted += 1;
                assert_eq!(full_to_domain(&full).unwrap(), d);
            }
        }
        assert_eq!(accepted, 7);
        let _ = n;
    }
}

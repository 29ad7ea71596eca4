//! Approval ballot triangles (ABTs).
//!
//! An ABT of size `n` is a binary triangle `A(i, j)`, `1 ≤ j ≤ i ≤ n`, whose
//! consecutive rows satisfy `A(i, [1:i]) ≺ A(i+1, [1:i+1])`: counting from
//! any column `j` rightwards, row `i+1` holds at least as many ones as row
//! `i`.
//!
//! This module also holds the objects in bijection with ABTs that live on
//! the "ballot" side: approval ballot sequences, plain ballot sequences, and
//! nests of non-crossing lattice paths.

use std::fmt;

use crate::error::{invalid, shape, Error, Result};
use crate::paths::{weakly_southeast, Path, Point, Step};
use crate::seq::{prec, prec_violation, PrecFailure};
use crate::triangle::Triangle;

/// Largest size accepted by [`enumerate_abt`].
pub const ABT_CAP: usize = 6;

/// A valid approval ballot triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbtTriangle(Triangle<u8>);

impl AbtTriangle {
    /// Validates `tri` as an ABT.
    pub fn new(tri: Triangle<u8>) -> Result<Self> {
        if let Some(v) = abt_violation(&tri)? {
            return Err(invalid("abt", v.to_string()));
        }
        Ok(AbtTriangle(tri))
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        AbtTriangle::new(Triangle::from_rows(rows)?)
    }

    /// The all-zero ABT.
    pub fn zero(size: usize) -> Self {
        AbtTriangle(Triangle::filled(size, 0))
    }

    pub(crate) fn new_unchecked(tri: Triangle<u8>) -> Self {
        debug_assert_eq!(validate_abt(&tri), Ok(true));
        AbtTriangle(tri)
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `A(i, j)`; zero outside the triangle.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.0.get(i, j).copied().unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> &[u8] {
        self.0.row(i)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.0.rows()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.0.to_rows()
    }

    pub fn as_triangle(&self) -> &Triangle<u8> {
        &self.0
    }

    pub fn into_triangle(self) -> Triangle<u8> {
        self.0
    }
}

impl fmt::Display for AbtTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The first failed row compatibility condition of a bit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowViolation {
    /// Upper row `i` of the failing pair `(i, i+1)`.
    pub row: usize,
    /// Column `j` the tail sums start from.
    pub column: usize,
    pub upper_sum: u32,
    pub lower_sum: u32,
}

impl fmt::Display for RowViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row compatibility fails at (i, j) = ({}, {}): sum of A({}, {}..{}) = {} > sum of A({}, {}..{}) = {}",
            self.row,
            self.column,
            self.row,
            self.column,
            self.row,
            self.upper_sum,
            self.row + 1,
            self.column,
            self.row + 1,
            self.lower_sum
        )
    }
}

fn check_bits(tri: &Triangle<u8>) -> Result<()> {
    if tri.cells().iter().any(|&b| b > 1) {
        return Err(shape("triangle entries must be 0 or 1"));
    }
    Ok(())
}

/// First violated row compatibility condition, or `None` for an ABT.
/// Entries other than 0/1 are a structural error.
pub fn abt_violation(tri: &Triangle<u8>) -> Result<Option<RowViolation>> {
    check_bits(tri)?;
    for i in 1..tri.size() {
        if let Some(PrecFailure::TailSum { ell, left, right }) =
            prec_violation(tri.row(i), tri.row(i + 1))
        {
            return Ok(Some(RowViolation {
                row: i,
                column: ell,
                upper_sum: left,
                lower_sum: right,
            }));
        }
    }
    Ok(None)
}

/// Row compatibility of a bit triangle.
pub fn validate_abt(tri: &Triangle<u8>) -> Result<bool> {
    Ok(abt_violation(tri)?.is_none())
}

/// All bit rows of length `len` in lexicographic order (0 before 1).
pub(crate) fn bit_rows(len: usize) -> Vec<Vec<u8>> {
    (0u32..(1 << len))
        .map(|mask| {
            (0..len)
                .map(|k| ((mask >> (len - 1 - k)) & 1) as u8)
                .collect()
        })
        .collect()
}

fn check_cap(family: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            family,
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Calls `visit` on every ABT of size `n` in canonical order: lexicographic
/// on the concatenated rows, row 1 first, 0 before 1.
///
/// Rows are chosen top-down; each candidate row is drawn from a precomputed
/// list of rows compatible with the row above it, so dead prefixes are never
/// extended.
pub fn for_each_abt(n: usize, mut visit: impl FnMut(&AbtTriangle)) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("ABT size must be at least 1".into()));
    }
    check_cap("abt", n, ABT_CAP)?;
    let rows: Vec<Vec<Vec<u8>>> = (0..=n).map(bit_rows).collect();
    // successors[i][a] = indices of rows of length i+1 compatible with row a of length i.
    let successors: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| {
            if i == 0 {
                return vec![(0..rows[1].len()).collect()];
            }
            rows[i]
                .iter()
                .map(|upper| {
                    rows[i + 1]
                        .iter()
                        .enumerate()
                        .filter(|(_, lower)| prec(upper, lower))
                        .map(|(b, _)| b)
                        .collect()
                })
                .collect()
        })
        .collect();

    // Depth-first over row choices; choice[i] indexes rows of length i+1.
    let mut choice: Vec<usize> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = vec![0];
    let mut cells: Vec<u8> = Vec::with_capacity(n * (n + 1) / 2);
    loop {
        let depth = choice.len();
        let options = if depth == 0 {
            &successors[0][0]
        } else {
            &successors[depth][choice[depth - 1]]
        };
        let pos = cursor[depth];
        if pos == options.len() {
            cursor.pop();
            if cursor.is_empty() {
                break;
            }
            choice.pop();
            cells.truncate(depth * (depth - 1) / 2);
            continue;
        }
        cursor[depth] += 1;
        let pick = options[pos];
        cells.extend_from_slice(&rows[depth + 1][pick]);
        if depth + 1 == n {
            let tri = Triangle::from_cells(n, cells.clone()).expect("shape by construction");
            visit(&AbtTriangle(tri));
            cells.truncate(depth * (depth + 1) / 2);
        } else {
            choice.push(pick);
            cursor.push(0);
        }
    }
    Ok(())
}

/// Every ABT of size `n`, in canonical order.
pub fn enumerate_abt(n: usize) -> Result<Vec<AbtTriangle>> {
    let mut out = Vec::new();
    for_each_abt(n, |a| out.push(a.clone()))?;
    Ok(out)
}

/// ABTs of size `n` whose ones all sit in the last two rows, in canonical
/// order. This is the search space of the Dyck and Motzkin classifiers and
/// stays small well past [`ABT_CAP`].
pub fn enumerate_two_row_abt(n: usize) -> Result<Vec<AbtTriangle>> {
    if n == 0 {
        return Err(Error::Domain("ABT size must be at least 1".into()));
    }
    check_cap("two-row abt", n, 12)?;
    let upper_len = n - 1;
    let mut out = Vec::new();
    for upper in bit_rows(upper_len) {
        for lower in bit_rows(n) {
            if !prec(&upper, &lower) {
                continue;
            }
            let tri = Triangle::from_fn(n, |i, j| {
                if i == n {
                    lower[j - 1]
                } else if i + 1 == n {
                    upper[j - 1]
                } else {
                    0
                }
            });
            out.push(AbtTriangle(tri));
        }
    }
    Ok(out)
}

fn last_two_rows_only(a: &AbtTriangle) -> bool {
    let n = a.size();
    (1..n.saturating_sub(1)).all(|i| a.row(i).iter().all(|&b| b == 0))
}

fn count_ones(row: &[u8]) -> usize {
    row.iter().filter(|&&b| b == 1).count()
}

/// The ABT is the image of a Dyck path with `k` up steps: size `2k`, ones
/// confined to the last two rows, exactly one 1 per column and `k` ones in
/// each of those rows.
pub fn is_dyck_type(a: &AbtTriangle, k: usize) -> bool {
    let n = a.size();
    if k == 0 || n != 2 * k || !last_two_rows_only(a) {
        return false;
    }
    let per_column = (1..=n).all(|j| a.get(n - 1, j) + a.get(n, j) == 1);
    per_column && count_ones(a.row(n - 1)) == k && count_ones(a.row(n)) == k
}

/// The ABT is the image of a Motzkin path: ones confined to the last two
/// rows, at most one 1 per column, and equally many ones in the two rows.
pub fn is_motzkin_type(a: &AbtTriangle) -> bool {
    let n = a.size();
    if !last_two_rows_only(a) {
        return false;
    }
    let upper = if n >= 2 { count_ones(a.row(n - 1)) } else { 0 };
    let lower = if n >= 1 { count_ones(a.row(n)) } else { 0 };
    let per_column = (1..=n).all(|j| a.get(n - 1, j) + a.get(n, j) <= 1);
    per_column && upper == lower
}

/// Voter `k` approves the candidates in `B_k ⊆ {1..k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ApprovalSequence {
    sets: Vec<Vec<usize>>,
}

impl ApprovalSequence {
    /// Sets are sorted on construction; an element outside `[k]` in `B_k` or
    /// a repeated element is a structural error.
    pub fn new(sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(sets.len());
        for (k, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(shape(format!("B_{} repeats a candidate", k + 1)));
            }
            if let Some(&bad) = set.iter().find(|&&c| c == 0 || c > k + 1) {
                return Err(shape(format!(
                    "B_{} contains {bad}, outside [1, {}]",
                    k + 1,
                    k + 1
                )));
            }
            sorted.push(set);
        }
        Ok(ApprovalSequence { sets: sorted })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `B_k`, 1-based.
    pub fn set(&self, k: usize) -> &[usize] {
        &self.sets[k - 1]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    fn contains(&self, k: usize, candidate: usize) -> bool {
        self.sets[k - 1].binary_search(&candidate).is_ok()
    }
}

/// Prefix dominance: after every voter, candidate `t` has at least as many
/// approvals as candidate `t+1`.
pub fn validate_approval_seq(b: &ApprovalSequence) -> bool {
    let n = b.len();
    let mut tally = vec![0usize; n + 2];
    for set in b.sets() {
        for &c in set {
            tally[c] += 1;
        }
        if (1..n).any(|t| tally[t] < tally[t + 1]) {
            return false;
        }
    }
    true
}

/// Reads voter sets off the triangle: `t ∈ B_u` iff `A(n+1-t, n+1-u) = 1`.
pub fn abt_to_approval_seq(a: &AbtTriangle) -> ApprovalSequence {
    let n = a.size();
    let sets = (1..=n)
        .map(|u| {
            (1..=u)
                .filter(|&t| a.get(n + 1 - t, n + 1 - u) == 1)
                .collect()
        })
        .collect();
    ApprovalSequence { sets }
}

/// Inverse of [`abt_to_approval_seq`].
pub fn approval_seq_to_abt(b: &ApprovalSequence) -> Result<AbtTriangle> {
    if !validate_approval_seq(b) {
        return Err(invalid("approval-seq", "prefix dominance fails"));
    }
    let n = b.len();
    let tri = Triangle::from_fn(n, |i, j| u8::from(b.contains(n + 1 - j, n + 1 - i)));
    Ok(AbtTriangle::new_unchecked(tri))
}

/// `b_k ∈ [k]` is voter `k`'s single vote.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlainBallotSequence {
    votes: Vec<usize>,
}

impl PlainBallotSequence {
    pub fn new(votes: Vec<usize>) -> Result<Self> {
        if let Some(k) = votes
            .iter()
            .enumerate()
            .position(|(k, &v)| v == 0 || v > k + 1)
        {
            return Err(shape(format!(
                "vote {} is {}, outside [1, {}]",
                k + 1,
                votes[k],
                k + 1
            )));
        }
        Ok(PlainBallotSequence { votes })
    }

    pub fn votes(&self) -> &[usize] {
        &self.votes
    }
}

/// Every prefix contains at least as many `t`s as `(t+1)`s.
pub fn validate_plain_ballot_seq(b: &PlainBallotSequence) -> bool {
    let n = b.votes.len();
    let mut tally = vec![0usize; n + 2];
    for &v in &b.votes {
        tally[v] += 1;
        if v >= 2 && tally[v] > tally[v - 1] {
            return false;
        }
    }
    true
}

/// Paths `Q_1 … Q_n`; `Q_i` starts at `(n+1-i, 1)`, takes `i` north/east
/// steps and ends on the diagonal `x + y = n + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NclpNest {
    size: usize,
    paths: Vec<Path>,
}

impl NclpNest {
    /// Shape check only: one path per index, each starting at its start
    /// point with the right number of north/east steps.
    pub fn new(paths: Vec<Path>) -> Result<Self> {
        let size = paths.len();
        for (k, p) in paths.iter().enumerate() {
            let i = k + 1;
            if p.start != nclp_start(size, i) {
                return Err(shape(format!(
                    "Q_{i} starts at {}, expected {}",
                    p.start,
                    nclp_start(size, i)
                )));
            }
            if p.steps.len() != i {
                return Err(shape(format!(
                    "Q_{i} has {} steps, expected {i}",
                    p.steps.len()
                )));
            }
            if p.steps.iter().any(|s| !matches!(s, Step::N | Step::E)) {
                return Err(shape(format!("Q_{i} uses a step other than N or E")));
            }
        }
        Ok(NclpNest { size, paths })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `Q_i`, 1-based.
    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i - 1]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }
}

fn nclp_start(size: usize, i: usize) -> Point {
    Point::new((size + 1 - i) as i64, 1)
}

/// Endpoints on the diagonal and consecutive paths non-crossing
/// (`Q_i` weakly southeast of `Q_{i+1}`). Adjacent pairs suffice because the
/// relation is transitive for paths ending on one diagonal.
pub fn validate_nclp(p: &NclpNest) -> bool {
    let diag = (p.size + 2) as i64;
    let points: Vec<Vec<Point>> = p.paths.iter().map(Path::points).collect();
    let ends_ok = points.iter().all(|pts| {
        let e = pts.last().expect("non-empty");
        e.x + e.y == diag && (1..=diag - 1).contains(&e.y)
    });
    ends_ok && points.windows(2).all(|w| weakly_southeast(&w[0], &w[1]))
}

/// Row `i` read right to left gives the steps of `Q_i`; 1 is north, 0 east.
/// No validity check; see [`abt_to_nclp`].
pub fn triangle_to_nclp(tri: &Triangle<u8>) -> NclpNest {
    let n = tri.size();
    let paths = (1..=n)
        .map(|i| {
            let steps = tri
                .row(i)
                .iter()
                .rev()
                .map(|&b| if b == 1 { Step::N } else { Step::E })
                .collect();
            Path::new(nclp_start(n, i), steps)
        })
        .collect();
    NclpNest { size: n, paths }
}

pub fn abt_to_nclp(a: &AbtTriangle) -> NclpNest {
    triangle_to_nclp(a.as_triangle())
}

pub fn nclp_to_abt(p: &NclpNest) -> Result<AbtTriangle> {
    // Re-run the shape checks in case the nest was assembled by hand.
    let p = NclpNest::new(p.paths.clone())?;
    if !validate_nclp(&p) {
        return Err(invalid("nclp", "paths cross or leave the diagonal"));
    }
    let rows = p
        .paths
        .iter()
        .map(|q| {
            q.steps
                .iter()
                .rev()
                .map(|&s| u8::from(s == Step::N))
                .collect()
        })
        .collect();
    AbtTriangle::from_rows(rows)
}

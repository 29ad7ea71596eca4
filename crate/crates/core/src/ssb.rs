//! Strict-sense ballots (SSBs) and their two tableau encodings.
//!
//! With `n` candidates, candidate `k` receives `n + 1 - k` votes, so a ballot
//! is a word of length `N = n(n+1)/2`. It is strict-sense when, for every
//! `k < n` and `m ≥ 1`, the `m`-th vote for `k + 1` comes after the
//! `(m+1)`-th vote for `k`.
//!
//! Listing the positions of the votes for candidate `i` as row `i` gives a
//! shifted standard Young tableau of staircase shape; the ballot condition is
//! exactly its column condition. Reversing rows and columns of that tableau
//! gives a left-justified triangle with strictly decreasing rows and columns,
//! the SSB triangle.

use std::fmt;

use crate::error::{invalid, shape, Error, Result};
use crate::triangle::{cell_count, Triangle};

/// Largest number of candidates accepted by [`enumerate_ssb`].
pub const SSB_CAP: usize = 6;

/// A vote word. Entries are checked to lie in `[1, n]`; the vote counts are
/// checked by [`validate_ssb`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ballot {
    n: usize,
    votes: Vec<usize>,
}

impl Ballot {
    pub fn new(n: usize, votes: Vec<usize>) -> Result<Self> {
        if let Some(v) = votes.iter().find(|&&v| v == 0 || v > n) {
            return Err(shape(format!("vote {v} is not a candidate in [1, {n}]")));
        }
        Ok(Ballot { n, votes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn votes(&self) -> &[usize] {
        &self.votes
    }

    /// 1-based positions of the votes for candidate `k`.
    pub fn positions(&self, k: usize) -> Vec<u32> {
        self.votes
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == k)
            .map(|(p, _)| p as u32 + 1)
            .collect()
    }
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.votes.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_multiset(b: &Ballot) -> Result<()> {
    let mut counts = vec![0usize; b.n + 1];
    for &v in &b.votes {
        counts[v] += 1;
    }
    for (k, &c) in counts.iter().enumerate().skip(1) {
        if c != b.n + 1 - k {
            return Err(shape(format!(
                "candidate {k} has {c} votes, expected {}",
                b.n + 1 - k
            )));
        }
    }
    Ok(())
}

/// First strict-lead failure, or `Err` when the vote counts are wrong.
pub fn ssb_violation(b: &Ballot) -> Result<Option<String>> {
    check_multiset(b)?;
    let syt = ShiftedSyt {
        n: b.n,
        rows: (1..=b.n).map(|k| b.positions(k)).collect(),
    };
    Ok(column_violation(&syt.rows).map(|(i, p)| {
        format!(
            "vote {} for candidate {} (position {}) does not come after vote {} for candidate {i} (position {})",
            p + 1,
            i + 1,
            syt.rows[i][p],
            p + 2,
            syt.rows[i - 1][p + 1]
        )
    }))
}

/// `Ok(true)` iff the ballot is strict-sense; `Err` when candidate `k` does
/// not have exactly `n + 1 - k` votes.
pub fn validate_ssb(b: &Ballot) -> Result<bool> {
    Ok(ssb_violation(b)?.is_none())
}

/// Every strict-sense ballot for `n` candidates, in lexicographic order of
/// the vote word.
pub fn enumerate_ssb(n: usize) -> Result<Vec<Ballot>> {
    if n > SSB_CAP {
        return Err(Error::CapExceeded {
            family: "ssb",
            requested: n,
            cap: SSB_CAP,
        });
    }
    fn go(n: usize, word: &mut Vec<usize>, counts: &mut [usize], out: &mut Vec<Ballot>) {
        if word.len() == cell_count(n) {
            out.push(Ballot {
                n,
                votes: word.clone(),
            });
            return;
        }
        for k in 1..=n {
            if counts[k] == n + 1 - k {
                continue;
            }
            if k >= 2 && counts[k - 1] < counts[k] + 2 {
                continue;
            }
            counts[k] += 1;
            word.push(k);
            go(n, word, counts, out);
            word.pop();
            counts[k] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![0; n + 1], &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Shifted tableaux

/// Shifted staircase tableau: row `i` has `n + 1 - i` entries occupying
/// columns `i..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedSyt {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl ShiftedSyt {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(shape(format!(
                    "tableau row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    n - k
                )));
            }
        }
        Ok(ShiftedSyt { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// Whether the entries are exactly `1..=N`.
fn is_permutation<'a>(values: impl Iterator<Item = &'a u32>, total: usize) -> bool {
    let mut seen = vec![false; total + 1];
    for &v in values {
        let v = v as usize;
        if v == 0 || v > total || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// First `(i, p)` (0-based row `i ≥ 1`) with `rows[i][p] ≤ rows[i-1][p+1]`,
/// i.e. a cell not larger than the cell above it.
fn column_violation(rows: &[Vec<u32>]) -> Option<(usize, usize)> {
    for i in 1..rows.len() {
        for p in 0..rows[i].len() {
            if rows[i][p] <= rows[i - 1][p + 1] {
                return Some((i, p));
            }
        }
    }
    None
}

pub fn syt_violation(s: &ShiftedSyt) -> Option<String> {
    if !is_permutation(s.rows.iter().flatten(), cell_count(s.n)) {
        return Some(format!(
            "entries are not a permutation of 1..={}",
            cell_count(s.n)
        ));
    }
    for (i, row) in s.rows.iter().enumerate() {
        if let Some(p) = row.windows(2).position(|w| w[0] >= w[1]) {
            return Some(format!(
                "row {} does not increase at position {}",
                i + 1,
                p + 1
            ));
        }
    }
    column_violation(&s.rows).map(|(i, p)| {
        format!(
            "column {} does not increase between rows {i} and {}",
            i + p + 1,
            i + 1
        )
    })
}

/// Rows and columns strictly increasing, entries a permutation of `[N]`.
pub fn validate_syt(s: &ShiftedSyt) -> bool {
    syt_violation(s).is_none()
}

/// Row `i` lists the positions of the votes for candidate `i`.
pub fn ssb_to_syt(b: &Ballot) -> Result<ShiftedSyt> {
    if let Some(v) = ssb_violation(b)? {
        return Err(invalid("ssb", v));
    }
    Ok(ShiftedSyt {
        n: b.n,
        rows: (1..=b.n).map(|k| b.positions(k)).collect(),
    })
}

pub fn syt_to_ssb(s: &ShiftedSyt) -> Result<Ballot> {
    if let Some(v) = syt_violation(s) {
        return Err(invalid("syt", v));
    }
    let mut votes = vec![0; cell_count(s.n)];
    for (i, row) in s.rows.iter().enumerate() {
        for &p in row {
            votes[p as usize - 1] = i + 1;
        }
    }
    Ok(Ballot { n: s.n, votes })
}

// ---------------------------------------------------------------------------
// SSB triangles

/// Left-justified triangle with strictly decreasing rows and columns whose
/// entries are `1..=N`. Shape only; see [`validate_ssb_triangle`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SsbTriangle(Triangle<u32>);

impl SsbTriangle {
    pub fn new(tri: Triangle<u32>) -> Self {
        SsbTriangle(tri)
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Ok(SsbTriangle(Triangle::from_rows(rows)?))
    }

    pub fn n(&self) -> usize {
        self.0.size()
    }

    /// `T(i, j)`. Panics outside the triangle.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        *self.0.get(i, j).expect("index inside the SSB triangle")
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.0.to_rows()
    }

    pub fn as_triangle(&self) -> &Triangle<u32> {
        &self.0
    }
}

pub fn ssb_triangle_violation(t: &SsbTriangle) -> Option<String> {
    let n = t.n();
    if !is_permutation(t.0.cells().iter(), cell_count(n)) {
        return Some(format!(
            "entries are not a permutation of 1..={}",
            cell_count(n)
        ));
    }
    for i in 1..=n {
        for j in 1..=i {
            let v = t.get(i, j);
            if j < i && v <= t.get(i, j + 1) {
                return Some(format!("T({i},{j}) = {v} is not above T({i},{})", j + 1));
            }
            if i < n && v <= t.get(i + 1, j) {
                return Some(format!("T({i},{j}) = {v} is not above T({},{j})", i + 1));
            }
        }
    }
    None
}

pub fn validate_ssb_triangle(t: &SsbTriangle) -> bool {
    ssb_triangle_violation(t).is_none()
}

/// Row `i` of the triangle is tableau row `n + 1 - i` in decreasing order.
pub fn syt_to_triangle(s: &ShiftedSyt) -> Result<SsbTriangle> {
    if let Some(v) = syt_violation(s) {
        return Err(invalid("syt", v));
    }
    let n = s.n;
    let rows = (1..=n)
        .map(|i| s.rows[n - i].iter().rev().copied().collect())
        .collect();
    SsbTriangle::from_rows(rows)
}

pub fn triangle_to_syt(t: &SsbTriangle) -> Result<ShiftedSyt> {
    if let Some(v) = ssb_triangle_violation(t) {
        return Err(invalid("ssb-triangle", v));
    }
    let n = t.n();
    let rows = (1..=n)
        .map(|i| t.0.row(n + 1 - i).iter().rev().copied().collect())
        .collect();
    ShiftedSyt::from_rows(rows)
}

pub fn ssb_to_triangle(b: &Ballot) -> Result<SsbTriangle> {
    syt_to_triangle(&ssb_to_syt(b)?)
}

pub fn triangle_to_ssb(t: &SsbTriangle) -> Result<Ballot> {
    syt_to_ssb(&triangle_to_syt(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq2() -> Ballot {
        Ballot::new(
            7,
            vec![
                1, 1, 1, 2, 1, 2, 2, 3, 1, 3, 1, 2, 3, 1, 2, 4, 4, 5, 2, 3, 4, 5, 3, 4, 6, 5, 6, 7,
            ],
        )
        .unwrap()
    }

    // Strict lead read off prefix counts: once k+1 has a vote, k is strictly
    // ahead of it.
    fn prefix_oracle(b: &Ballot) -> bool {
        let mut counts = vec![0usize; b.n() + 2];
        for &v in b.votes() {
            counts[v] += 1;
            for k in 1..b.n() {
                if counts[k + 1] > 0 && counts[k] <= counts[k + 1] {
                    return false;
                }
            }
        }
        true
    }

    fn all_orderings(n: usize) -> Vec<Vec<usize>> {
        fn go(counts: &mut Vec<usize>, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if counts.iter().all(|&c| c == 0) {
                out.push(word.clone());
                return;
            }
            for k in 0..counts.len() {
                if counts[k] > 0 {
                    counts[k] -= 1;
                    word.push(k + 1);
                    go(counts, word, out);
                    word.pop();
                    counts[k] += 1;
                }
            }
        }
        let mut out = Vec::new();
        go(
            &mut (1..=n).map(|k| n + 1 - k).collect(),
            &mut Vec::new(),
            &mut out,
        );
        out
    }

    #[test]
    fn validation_examples() {
        assert!(validate_ssb(&eq2()).unwrap());
        assert!(validate_ssb(&Ballot::new(3, vec![1, 1, 1, 2, 2, 3]).unwrap()).unwrap());
        assert!(validate_ssb(&Ballot::new(3, vec![1, 1, 2, 1, 2, 3]).unwrap()).unwrap());
        assert!(!validate_ssb(&Ballot::new(3, vec![1, 1, 2, 2, 1, 3]).unwrap()).unwrap());
        assert!(validate_ssb(&Ballot::new(3, vec![1, 1, 2, 2, 3]).unwrap()).is_err());
        assert!(Ballot::new(3, vec![1, 4]).is_err());
    }

    #[test]
    fn validation_matches_prefix_oracle() {
        let words = all_orderings(4);
        assert_eq!(words.len(), 12600);
        let mut valid = 0;
        for w in words {
            let b = Ballot::new(4, w).unwrap();
            let v = validate_ssb(&b).unwrap();
            assert_eq!(v, prefix_oracle(&b), "{b}");
            let raw = ShiftedSyt {
                n: 4,
                rows: (1..=4).map(|k| b.positions(k)).collect(),
            };
            assert_eq!(v, validate_syt(&raw));
            valid += usize::from(v);
        }
        assert_eq!(valid, 12);
    }

    #[test]
    fn enumeration() {
        let three = enumerate_ssb(3).unwrap();
        let words: Vec<&[usize]> = three.iter().map(Ballot::votes).collect();
        assert_eq!(
            words,
            vec![&[1, 1, 1, 2, 2, 3][..], &[1, 1, 2, 1, 2, 3][..]]
        );
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_ssb(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 12, 286]);
        let five = enumerate_ssb(5).unwrap();
        assert!(five.windows(2).all(|w| w[0].votes() < w[1].votes()));
        assert!(five.iter().all(|b| validate_ssb(b).unwrap()));
        assert!(enumerate_ssb(SSB_CAP + 1).is_err());
    }

    #[test]
    fn ballot7_tableaux() {
        let syt = ssb_to_syt(&eq2()).unwrap();
        assert_eq!(syt.rows()[0], vec![1, 2, 3, 5, 9, 11, 14]);
        assert_eq!(syt.rows()[6], vec![28]);
        let tri = syt_to_triangle(&syt).unwrap();
        assert_eq!(tri.to_rows()[6], vec![14, 11, 9, 5, 3, 2, 1]);
        assert_eq!(tri.to_rows()[0], vec![28]);
        assert!(validate_ssb_triangle(&tri));
        assert_eq!(triangle_to_syt(&tri).unwrap(), syt);
        assert_eq!(syt_to_ssb(&syt).unwrap(), eq2());
    }

    #[test]
    fn single_candidate() {
        let b = Ballot::new(1, vec![1]).unwrap();
        let syt = ssb_to_syt(&b).unwrap();
        assert_eq!(syt.rows(), &[vec![1]]);
        assert_eq!(syt_to_triangle(&syt).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(syt_to_ssb(&syt).unwrap(), b);
    }

    #[test]
    fn order5_ssb_triangle_validates() {
        let t = SsbTriangle::from_rows(vec![
            vec![15],
            vec![14, 12],
            vec![13, 10, 8],
            vec![11, 7, 6, 3],
            vec![9, 5, 4, 2, 1],
        ])
        .unwrap();
        assert!(validate_ssb_triangle(&t));
        let mut rows = t.to_rows();
        rows[4].swap(0, 1);
        assert!(!validate_ssb_triangle(
            &SsbTriangle::from_rows(rows).unwrap()
        ));
    }

    #[test]
    fn round_trips() {
        for n in 1..=4 {
            for b in enumerate_ssb(n).unwrap() {
                let syt = ssb_to_syt(&b).unwrap();
                let tri = syt_to_triangle(&syt).unwrap();
                assert!(validate_ssb_triangle(&tri));
                assert_eq!(triangle_to_syt(&tri).unwrap(), syt);
                assert_eq!(triangle_to_ssb(&tri).unwrap(), b);
            }
        }
    }
}

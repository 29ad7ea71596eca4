//! Closed-form counts in exact big-integer arithmetic, and a harness that
//! compares them with the exhaustive enumerators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::abh::enumerate_abh;
use crate::abt::{enumerate_two_row_abt, for_each_abt, is_dyck_type, is_motzkin_type};
use crate::error::{Error, Result};
use crate::ssb::enumerate_ssb;
use crate::tsscpp::enumerate_magog;

pub type BigCount = BigUint;

pub fn factorial(n: u64) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc = exact_div(acc * (n - i), &BigCount::from(i + 1));
    }
    acc
}

/// Division that must leave no remainder.
fn exact_div(num: BigCount, den: &BigCount) -> BigCount {
    let q = &num / den;
    assert!(&q * den == num, "inexact division {num} / {den}");
    q
}

/// `Π_{k=0}^{n-1} (3k+1)! / (n+k)!`, the number of TSSCPPs of order `n`
/// (and of ABTs of size `n - 1`).
pub fn andrews_count(n: u64) -> BigCount {
    let mut num = BigCount::one();
    let mut den = BigCount::one();
    for k in 0..n {
        num *= factorial(3 * k + 1);
        den *= factorial(n + k);
    }
    exact_div(num, &den)
}

/// `C(n+1, 2)! · Π_{k=1}^{n-1} k! / Π_{k=1}^{n} (2k-1)!`, the number of
/// strict-sense ballots with `n` candidates.
pub fn ssb_count(n: u64) -> BigCount {
    let mut num = factorial(n * (n + 1) / 2);
    for k in 1..n {
        num *= factorial(k);
    }
    let den = (1..=n).fold(BigCount::one(), |acc, k| acc * factorial(2 * k - 1));
    exact_div(num, &den)
}

pub fn catalan(k: u64) -> BigCount {
    exact_div(binomial(2 * k, k), &BigCount::from(k + 1))
}

/// `M_m = Σ_k C(m, 2k) · C_k`.
pub fn motzkin(m: u64) -> BigCount {
    (0..=m / 2).map(|k| binomial(m, 2 * k) * catalan(k)).sum()
}

/// Orderings of `a` votes for A and `b` for B with A strictly ahead
/// throughout: `(a-b)/(a+b) · C(a+b, a)`. Needs `a > b`, or `a = b = 0`.
pub fn bertrand_strict(a: u64, b: u64) -> Result<BigCount> {
    if a < b || (a == b && a > 0) {
        return Err(Error::Domain(format!(
            "strict ballot count needs a > b, got a = {a}, b = {b}"
        )));
    }
    if a == 0 {
        return Ok(BigCount::one());
    }
    Ok(exact_div(
        binomial(a + b, a) * (a - b),
        &BigCount::from(a + b),
    ))
}

/// Orderings with A never behind: `(a+1-b)/(a+1) · C(a+b, a)`. Needs
/// `a ≥ b`.
pub fn bertrand_weak(a: u64, b: u64) -> Result<BigCount> {
    if a < b {
        return Err(Error::Domain(format!(
            "weak ballot count needs a ≥ b, got a = {a}, b = {b}"
        )));
    }
    Ok(exact_div(
        binomial(a + b, a) * (a + 1 - b),
        &BigCount::from(a + 1),
    ))
}

/// Families with both an enumerator and a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// ABTs of size `n`, against the TSSCPP count of order `n + 1`.
    Abt,
    /// Magog triangles of order `n`.
    Magog,
    /// Strict-sense ballots with `n` candidates.
    Ssb,
    /// ABHs of size `n`, against the ballot count for `n + 2` candidates.
    Abh,
    /// Dyck-type ABTs of size `2n`, against the Catalan number `C_n`.
    Dyck,
    /// Motzkin-type ABTs of size `n`.
    Motzkin,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Abt,
        Family::Magog,
        Family::Ssb,
        Family::Abh,
        Family::Dyck,
        Family::Motzkin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Abt => "abt",
            Family::Magog => "magog",
            Family::Ssb => "ssb",
            Family::Abh => "abh",
            Family::Dyck => "dyck",
            Family::Motzkin => "motzkin",
        }
    }

    /// Sizes the enumerator handles quickly.
    pub fn sizes(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::Abt => 1..=5,
            Family::Magog => 1..=6,
            Family::Ssb => 1..=6,
            Family::Abh => 1..=4,
            Family::Dyck => 1..=5,
            Family::Motzkin => 1..=8,
        }
    }

    pub fn formula(self, n: u64) -> BigCount {
        match self {
            Family::Abt => andrews_count(n + 1),
            Family::Magog => andrews_count(n),
            Family::Ssb => ssb_count(n),
            Family::Abh => ssb_count(n + 2),
            Family::Dyck => catalan(n),
            Family::Motzkin => motzkin(n),
        }
    }

    pub fn exhaustive(self, n: usize) -> Result<u64> {
        let count = match self {
            Family::Abt => {
                let mut c = 0usize;
                for_each_abt(n, |_| c += 1)?;
                c
            }
            Family::Magog => enumerate_magog(n)?.len(),
            Family::Ssb => enumerate_ssb(n)?.len(),
            Family::Abh => enumerate_abh(n)?.len(),
            Family::Dyck => enumerate_two_row_abt(2 * n)?
                .iter()
                .filter(|a| is_dyck_type(a, n))
                .count(),
            Family::Motzkin => enumerate_two_row_abt(n)?
                .iter()
                .filter(|a| is_motzkin_type(a))
                .count(),
        };
        Ok(count as u64)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("no closed form for family {s:?}")))
    }
}

/// Exhaustive count next to the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub family: Family,
    pub n: usize,
    pub exhaustive: BigCount,
    pub formula: BigCount,
}

impl CrossCheck {
    pub fn matches(&self) -> bool {
        self.exhaustive == self.formula
    }
}

pub fn crosscheck(family: Family, n: usize) -> Result<CrossCheck> {
    let exhaustive = BigCount::from(family.exhaustive(n)?);
    Ok(CrossCheck {
        family,
        n,
        exhaustive,
        formula: family.formula(n as u64),
    })
}

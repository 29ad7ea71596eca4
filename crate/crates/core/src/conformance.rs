//! Self-check suites: exhaustive counts against closed forms, round trips of
//! every bijection, and the worked examples.

use std::fmt;
use std::str::FromStr;

use crate::abh::{
    abh_to_ssb_triangle, enumerate_abh, ssb_triangle_to_abh, validate_abh, validate_abh_with,
    validate_corner_nest, Bounds, CornerPathNest,
};
use crate::abt::{
    abt_to_approval_seq, abt_to_nclp, approval_seq_to_abt, enumerate_abt, enumerate_two_row_abt,
    is_dyck_type, is_motzkin_type, nclp_to_abt, validate_nclp,
};
use crate::counting::{crosscheck, Family};
use crate::error::Error;
use crate::figures;
use crate::ssb::{
    enumerate_ssb, ssb_to_syt, syt_to_ssb, syt_to_triangle, triangle_to_syt, validate_ssb_triangle,
    SsbTriangle,
};
use crate::tsscpp::{
    abt_to_boolean, boolean_to_abt, boolean_to_nilp, domain_to_full, domain_to_magog,
    domain_to_nilp, enumerate_magog, full_to_domain, magog_to_abt, magog_to_domain,
    nilp_to_boolean, nilp_to_domain, verify_tsscpp,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Roundtrips,
    Figures,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Roundtrips => "roundtrips",
            Suite::Figures => "figures",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "counts" => Ok(Suite::Counts),
            "roundtrips" => Ok(Suite::Roundtrips),
            "figures" => Ok(Suite::Figures),
            "all" => Ok(Suite::All),
            _ => Err(Error::Domain(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} {}/{}: {}", self.suite, self.name, self.detail)
    }
}

type Outcome = std::result::Result<String, String>;

fn row(suite: &'static str, name: impl Into<String>, outcome: Outcome) -> CheckRow {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckRow {
        suite,
        name: name.into(),
        passed,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn run(suite: Suite) -> Vec<CheckRow> {
    match suite {
        Suite::Counts => counts(),
        Suite::Roundtrips => roundtrips(),
        Suite::Figures => figures(),
        Suite::All => {
            let mut rows = counts();
            rows.extend(roundtrips());
            rows.extend(figures());
            rows
        }
    }
}

pub fn counts() -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for family in Family::ALL {
        for n in family.sizes() {
            let outcome = crosscheck(family, n).map_err(err).and_then(|c| {
                let detail = format!("exhaustive {} formula {}", c.exhaustive, c.formula);
                if c.matches() {
                    Ok(detail)
                } else {
                    Err(detail)
                }
            });
            rows.push(row("counts", format!("{family}-{n}"), outcome));
        }
    }
    for n in 1..=3 {
        let outcome = (|| {
            let abh = enumerate_abh(n).map_err(err)?.len();
            let ssb = enumerate_ssb(n + 2).map_err(err)?.len();
            ensure(abh == ssb, || {
                format!("{abh} hypertriangles, {ssb} ballots")
            })?;
            Ok(format!("{abh} = {ssb}"))
        })();
        rows.push(row("counts", format!("abh-{n}-vs-ssb-{}", n + 2), outcome));
    }
    rows
}

pub fn roundtrips() -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for n in 1..=4 {
        let outcome = (|| {
            let abts = enumerate_abt(n).map_err(err)?;
            for a in &abts {
                let seq = abt_to_approval_seq(a);
                ensure(approval_seq_to_abt(&seq).map_err(err)? == *a, || {
                    format!("approval sequence of {a:?}")
                })?;
                ensure(
                    boolean_to_abt(&abt_to_boolean(a)).map_err(err)? == *a,
                    || format!("Boolean triangle of {a:?}"),
                )?;
                let nclp = abt_to_nclp(a);
                ensure(validate_nclp(&nclp), || format!("paths of {a:?} cross"))?;
                ensure(nclp_to_abt(&nclp).map_err(err)? == *a, || {
                    format!("paths of {a:?}")
                })?;
            }
            Ok(format!("{} triangles", abts.len()))
        })();
        rows.push(row("roundtrips", format!("abt-{n}"), outcome));
    }
    for order in 1..=5 {
        let outcome = (|| {
            let magogs = enumerate_magog(order).map_err(err)?;
            for m in &magogs {
                let d = magog_to_domain(m).map_err(err)?;
                let p = domain_to_nilp(&d).map_err(err)?;
                let b = nilp_to_boolean(&p).map_err(err)?;
                let a = boolean_to_abt(&b).map_err(err)?;
                ensure(magog_to_abt(m).map_err(err)? == a, || {
                    "composite map differs".into()
                })?;
                ensure(abt_to_boolean(&a) == b, || "Boolean square".into())?;
                ensure(boolean_to_nilp(&b).map_err(err)? == p, || {
                    "path square".into()
                })?;
                ensure(nilp_to_domain(&p).map_err(err)? == d, || {
                    "domain square".into()
                })?;
                ensure(domain_to_magog(&d).map_err(err)? == *m, || {
                    "magog square".into()
                })?;
            }
            Ok(format!("{} magog triangles", magogs.len()))
        })();
        rows.push(row("roundtrips", format!("tsscpp-chain-{order}"), outcome));
    }
    for order in 1..=4 {
        let outcome = (|| {
            let magogs = enumerate_magog(order).map_err(err)?;
            for m in &magogs {
                let d = magog_to_domain(m).map_err(err)?;
                let full = domain_to_full(&d).map_err(err)?;
                ensure(verify_tsscpp(&full), || "symmetry check failed".into())?;
                ensure(full_to_domain(&full).map_err(err)? == d, || {
                    "restriction differs".into()
                })?;
            }
            Ok(format!("{} plane partitions", magogs.len()))
        })();
        rows.push(row("roundtrips", format!("full-tsscpp-{order}"), outcome));
    }
    for n in 1..=4 {
        let outcome = (|| {
            let ballots = enumerate_ssb(n).map_err(err)?;
            for b in &ballots {
                let syt = ssb_to_syt(b).map_err(err)?;
                let tri = syt_to_triangle(&syt).map_err(err)?;
                let back = triangle_to_syt(&tri).map_err(err)?;
                ensure(back == syt, || format!("tableau of {b}"))?;
                ensure(syt_to_ssb(&back).map_err(err)? == *b, || {
                    format!("ballot {b}")
                })?;
            }
            Ok(format!("{} ballots", ballots.len()))
        })();
        rows.push(row("roundtrips", format!("ssb-{n}"), outcome));
    }
    for n in 3..=5 {
        let outcome = (|| {
            let ballots = enumerate_ssb(n).map_err(err)?;
            let mut images = Vec::new();
            for b in &ballots {
                let t = syt_to_triangle(&ssb_to_syt(b).map_err(err)?).map_err(err)?;
                let h = ssb_triangle_to_abh(&t).map_err(err)?;
                ensure(validate_abh(&h), || format!("image of {b} is not valid"))?;
                ensure(abh_to_ssb_triangle(&h).map_err(err)? == t, || {
                    format!("triangle of {b}")
                })?;
                let nest = CornerPathNest::from_ssb_triangle(&t).map_err(err)?;
                ensure(validate_corner_nest(&nest), || {
                    format!("corner paths of {b} cross")
                })?;
                images.push(h);
            }
            images.sort();
            images.dedup();
            let all = enumerate_abh(n - 2).map_err(err)?;
            ensure(images == all, || {
                "image is not the set of hypertriangles".into()
            })?;
            Ok(format!("{} triangles", ballots.len()))
        })();
        rows.push(row("roundtrips", format!("ssb-triangle-abh-{n}"), outcome));
    }
    rows
}

pub fn figures() -> Vec<CheckRow> {
    let mut rows = Vec::new();
    let s = "figures";

    rows.push(row(
        s,
        "size-3-abts",
        (|| {
            let mut drawn = figures::size3_abts();
            let mut all = enumerate_abt(3).map_err(err)?;
            drawn.sort();
            all.sort();
            ensure(drawn == all, || {
                "drawn set differs from the enumeration".into()
            })?;
            Ok("42 triangles".into())
        })(),
    ));

    rows.push(row(
        s,
        "dyck-6",
        (|| {
            let mut drawn: Vec<_> = figures::DYCK_6
                .iter()
                .map(|(u, l)| figures::two_row_abt(6, u, l))
                .collect();
            let mut found: Vec<_> = enumerate_two_row_abt(6)
                .map_err(err)?
                .into_iter()
                .filter(|a| is_dyck_type(a, 3))
                .collect();
            drawn.sort();
            found.sort();
            ensure(drawn == found, || {
                format!("{} classified, {} drawn", found.len(), drawn.len())
            })?;
            Ok("5 triangles".into())
        })(),
    ));

    rows.push(row(
        s,
        "motzkin-4",
        (|| {
            let mut drawn: Vec<_> = figures::MOTZKIN_4
                .iter()
                .map(|(u, l)| figures::two_row_abt(4, u, l))
                .collect();
            let mut found: Vec<_> = enumerate_two_row_abt(4)
                .map_err(err)?
                .into_iter()
                .filter(is_motzkin_type)
                .collect();
            drawn.sort();
            found.sort();
            ensure(drawn == found, || {
                format!("{} classified, {} drawn", found.len(), drawn.len())
            })?;
            Ok("9 triangles".into())
        })(),
    ));

    rows.push(row(
        s,
        "order-5-tsscpp",
        (|| {
            let d = magog_to_domain(&figures::order5_magog()).map_err(err)?;
            let full = domain_to_full(&d).map_err(err)?;
            ensure(full.matrix() == figures::order5_tsscpp().as_slice(), || {
                "matrix differs".into()
            })?;
            ensure(verify_tsscpp(&full), || "symmetry check failed".into())?;
            Ok("10x10 matrix".into())
        })(),
    ));

    rows.push(row(
        s,
        "order-6-paths",
        (|| {
            let nilp = domain_to_nilp(&figures::order6_domain()).map_err(err)?;
            let steps: Vec<String> = nilp
                .paths()
                .iter()
                .map(|p| crate::paths::steps_to_string(&p.steps))
                .collect();
            ensure(steps == figures::ORDER6_NILP, || format!("got {steps:?}"))?;
            let b = nilp_to_boolean(&nilp).map_err(err)?;
            ensure(b == figures::order6_boolean(), || {
                "Boolean triangle differs".into()
            })?;
            let a = boolean_to_abt(&b).map_err(err)?;
            ensure(a == figures::order6_abt(), || "ABT differs".into())?;
            let q: Vec<String> = abt_to_nclp(&a)
                .paths()
                .iter()
                .map(|p| crate::paths::steps_to_string(&p.steps))
                .collect();
            ensure(q == figures::ORDER6_NCLP, || format!("got {q:?}"))?;
            Ok("domain, paths and triangles agree".into())
        })(),
    ));

    rows.push(row(
        s,
        "order-6-boolean",
        (|| {
            ensure(
                abt_to_boolean(&figures::order6_abt()) == figures::order6_boolean(),
                || "forward".into(),
            )?;
            ensure(
                boolean_to_abt(&figures::order6_boolean()).map_err(err)? == figures::order6_abt(),
                || "backward".into(),
            )?;
            Ok("both directions".into())
        })(),
    ));

    rows.push(row(
        s,
        "ballot-7",
        (|| {
            let syt = ssb_to_syt(&figures::ballot7()).map_err(err)?;
            ensure(syt.rows() == figures::ballot7_syt_rows().as_slice(), || {
                "tableau differs".into()
            })?;
            let tri = syt_to_triangle(&syt).map_err(err)?;
            ensure(tri.to_rows() == figures::ballot7_triangle_rows(), || {
                "triangle differs".into()
            })?;
            Ok("tableau and triangle".into())
        })(),
    ));

    rows.push(row(
        s,
        "abh-5",
        (|| {
            ensure(validate_abh(&figures::abh5()), || "rejected".into())?;
            let strict = validate_abh_with(&figures::abh5(), Bounds::StrictRestatement);
            Ok(format!(
                "valid; strict bounds {}",
                if strict { "also valid" } else { "reject" }
            ))
        })(),
    ));

    rows.push(row(
        s,
        "ssb-triangle-5",
        (|| {
            let t: SsbTriangle = figures::ssb_triangle5();
            ensure(validate_ssb_triangle(&t), || "not an SSB triangle".into())?;
            let h = ssb_triangle_to_abh(&t).map_err(err)?;
            ensure(validate_abh(&h), || "image rejected".into())?;
            ensure(abh_to_ssb_triangle(&h).map_err(err)? == t, || {
                "round trip differs".into()
            })?;
            Ok("round trip".into())
        })(),
    ));

    rows
}

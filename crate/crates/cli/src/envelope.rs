//! JSON interchange format. Every object carries a `family` tag.

use serde::{Deserialize, Serialize};

use abt_core::abh::{abh_violation, Abh, Bounds};
use abt_core::abt::{
    abt_violation, validate_approval_seq, validate_nclp, AbtTriangle, ApprovalSequence, NclpNest,
};
use abt_core::paths::{steps_from_str, steps_to_string, Path, Point};
use abt_core::ssb::{
    ssb_triangle_violation, ssb_violation, syt_violation, Ballot, ShiftedSyt, SsbTriangle,
};
use abt_core::triangle::Triangle;
use abt_core::tsscpp::{
    boolean_violation, domain_violation, magog_violation, tsscpp_violation, validate_nilp,
    BooleanTriangle, FullTsscpp, FundamentalDomain, MagogTriangle, NilpNest,
};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathBody {
    pub start: [i64; 2],
    pub steps: String,
}

/// A tagged object as it appears on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", deny_unknown_fields)]
pub enum Envelope {
    #[serde(rename = "abt")]
    Abt { size: usize, rows: Vec<Vec<u8>> },
    #[serde(rename = "approval-seq")]
    ApprovalSeq { n: usize, sets: Vec<Vec<usize>> },
    #[serde(rename = "boolean")]
    Boolean { order: usize, rows: Vec<Vec<u8>> },
    #[serde(rename = "magog")]
    Magog { order: usize, rows: Vec<Vec<u32>> },
    #[serde(rename = "domain")]
    Domain { order: usize, rows: Vec<Vec<u32>> },
    #[serde(rename = "tsscpp")]
    Tsscpp { order: usize, matrix: Vec<Vec<u32>> },
    #[serde(rename = "nclp")]
    Nclp { size: usize, paths: Vec<PathBody> },
    #[serde(rename = "nilp")]
    Nilp { size: usize, paths: Vec<PathBody> },
    #[serde(rename = "ssb")]
    Ssb { n: usize, votes: Vec<usize> },
    #[serde(rename = "syt")]
    Syt { n: usize, rows: Vec<Vec<u32>> },
    #[serde(rename = "ssb-triangle")]
    SsbTriangle { n: usize, rows: Vec<Vec<u32>> },
    #[serde(rename = "abh")]
    Abh {
        size: usize,
        triangles: Vec<Envelope>,
    },
}

/// Parsed object, shape-checked but not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Abt(Triangle<u8>),
    ApprovalSeq(ApprovalSequence),
    Boolean(BooleanTriangle),
    Magog(MagogTriangle),
    Domain(FundamentalDomain),
    Tsscpp(FullTsscpp),
    Nclp(NclpNest),
    Nilp(NilpNest),
    Ssb(Ballot),
    Syt(ShiftedSyt),
    SsbTriangle(SsbTriangle),
    Abh(Abh),
}

pub const FAMILIES: [&str; 12] = [
    "abt",
    "approval-seq",
    "boolean",
    "magog",
    "domain",
    "tsscpp",
    "nclp",
    "nilp",
    "ssb",
    "syt",
    "ssb-triangle",
    "abh",
];

fn shape_err(e: abt_core::Error) -> CliError {
    CliError::Parse(e.to_string())
}

fn check_len(what: &str, declared: usize, actual: usize) -> Result<(), CliError> {
    if declared != actual {
        return Err(CliError::Parse(format!(
            "{what} declares {declared} but the payload has {actual}"
        )));
    }
    Ok(())
}

fn paths_from(bodies: &[PathBody]) -> Result<Vec<Path>, CliError> {
    bodies
        .iter()
        .map(|b| {
            Ok(Path::new(
                Point::new(b.start[0], b.start[1]),
                steps_from_str(&b.steps).map_err(shape_err)?,
            ))
        })
        .collect()
}

fn bodies_from(paths: &[Path]) -> Vec<PathBody> {
    paths
        .iter()
        .map(|p| PathBody {
            start: [p.start.x, p.start.y],
            steps: steps_to_string(&p.steps),
        })
        .collect()
}

fn bit_triangle(rows: &[Vec<u8>]) -> Result<Triangle<u8>, CliError> {
    let tri = Triangle::from_rows(rows.to_vec()).map_err(shape_err)?;
    if tri.cells().iter().any(|&b| b > 1) {
        return Err(CliError::Parse("triangle entries must be 0 or 1".into()));
    }
    Ok(tri)
}

impl Envelope {
    pub fn family(&self) -> &'static str {
        match self {
            Envelope::Abt { .. } => "abt",
            Envelope::ApprovalSeq { .. } => "approval-seq",
            Envelope::Boolean { .. } => "boolean",
            Envelope::Magog { .. } => "magog",
            Envelope::Domain { .. } => "domain",
            Envelope::Tsscpp { .. } => "tsscpp",
            Envelope::Nclp { .. } => "nclp",
            Envelope::Nilp { .. } => "nilp",
            Envelope::Ssb { .. } => "ssb",
            Envelope::Syt { .. } => "syt",
            Envelope::SsbTriangle { .. } => "ssb-triangle",
            Envelope::Abh { .. } => "abh",
        }
    }

    pub fn parse(text: &str) -> Result<Envelope, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("malformed input: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("envelopes serialize")
    }

    /// Shape checks, including the declared size against the payload.
    pub fn into_object(self) -> Result<Object, CliError> {
        Ok(match self {
            Envelope::Abt { size, rows } => {
                check_len("abt size", size, rows.len())?;
                Object::Abt(bit_triangle(&rows)?)
            }
            Envelope::ApprovalSeq { n, sets } => {
                check_len("approval-seq n", n, sets.len())?;
                Object::ApprovalSeq(ApprovalSequence::new(sets).map_err(shape_err)?)
            }
            Envelope::Boolean { order, rows } => {
                Object::Boolean(BooleanTriangle::from_rows(order, rows).map_err(shape_err)?)
            }
            Envelope::Magog { order, rows } => {
                check_len("magog order", order, rows.len())?;
                Object::Magog(MagogTriangle::from_rows(rows).map_err(shape_err)?)
            }
            Envelope::Domain { order, rows } => {
                check_len("domain order", order, rows.len())?;
                Object::Domain(FundamentalDomain::from_rows(rows).map_err(shape_err)?)
            }
            Envelope::Tsscpp { order, matrix } => {
                check_len("tsscpp side", 2 * order, matrix.len())?;
                Object::Tsscpp(FullTsscpp::from_matrix(matrix).map_err(shape_err)?)
            }
            Envelope::Nclp { size, paths } => {
                check_len("nclp size", size, paths.len())?;
                Object::Nclp(NclpNest::new(paths_from(&paths)?).map_err(shape_err)?)
            }
            Envelope::Nilp { size, paths } => {
                check_len("nilp size", size, paths.len())?;
                Object::Nilp(NilpNest::new(paths_from(&paths)?).map_err(shape_err)?)
            }
            Envelope::Ssb { n, votes } => Object::Ssb(Ballot::new(n, votes).map_err(shape_err)?),
            Envelope::Syt { n, rows } => {
                check_len("syt n", n, rows.len())?;
                Object::Syt(ShiftedSyt::from_rows(rows).map_err(shape_err)?)
            }
            Envelope::SsbTriangle { n, rows } => {
                check_len("ssb-triangle n", n, rows.len())?;
                Object::SsbTriangle(SsbTriangle::from_rows(rows).map_err(shape_err)?)
            }
            Envelope::Abh { size, triangles } => {
                check_len("abh size", size, triangles.len())?;
                let mut tris = Vec::with_capacity(triangles.len());
                for t in triangles {
                    match t {
                        Envelope::Abt { size, rows } => {
                            check_len("abt size", size, rows.len())?;
                            tris.push(bit_triangle(&rows)?);
                        }
                        other => {
                            return Err(CliError::Parse(format!(
                                "abh components must be abt objects, found {}",
                                other.family()
                            )))
                        }
                    }
                }
                Object::Abh(Abh::new(tris).map_err(shape_err)?)
            }
        })
    }
}

fn abt_envelope(tri: &Triangle<u8>) -> Envelope {
    Envelope::Abt {
        size: tri.size(),
        rows: tri.to_rows(),
    }
}

impl Object {
    pub fn family(&self) -> &'static str {
        self.to_envelope().family()
    }

    pub fn to_envelope(&self) -> Envelope {
        match self {
            Object::Abt(t) => abt_envelope(t),
            Object::ApprovalSeq(s) => Envelope::ApprovalSeq {
                n: s.len(),
                sets: s.sets().to_vec(),
            },
            Object::Boolean(b) => Envelope::Boolean {
                order: b.order(),
                rows: b.to_rows(),
            },
            Object::Magog(m) => Envelope::Magog {
                order: m.order(),
                rows: m.to_rows(),
            },
            Object::Domain(d) => Envelope::Domain {
                order: d.order(),
                rows: d.rows().to_vec(),
            },
            Object::Tsscpp(f) => Envelope::Tsscpp {
                order: f.order(),
                matrix: f.matrix().to_vec(),
            },
            Object::Nclp(p) => Envelope::Nclp {
                size: p.size(),
                paths: bodies_from(p.paths()),
            },
            Object::Nilp(p) => Envelope::Nilp {
                size: p.paths().len(),
                paths: bodies_from(p.paths()),
            },
            Object::Ssb(b) => Envelope::Ssb {
                n: b.n(),
                votes: b.votes().to_vec(),
            },
            Object::Syt(s) => Envelope::Syt {
                n: s.n(),
                rows: s.rows().to_vec(),
            },
            Object::SsbTriangle(t) => Envelope::SsbTriangle {
                n: t.n(),
                rows: t.to_rows(),
            },
            Object::Abh(h) => Envelope::Abh {
                size: h.size(),
                triangles: h.triangles().iter().map(abt_envelope).collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        self.to_envelope().to_json()
    }

    /// First violated condition, or `None` when the object is valid.
    pub fn violation(&self) -> Result<Option<String>, CliError> {
        Ok(match self {
            Object::Abt(t) => abt_violation(t).map_err(shape_err)?.map(|v| v.to_string()),
            Object::ApprovalSeq(s) => {
                (!validate_approval_seq(s)).then(|| "prefix dominance fails".to_string())
            }
            Object::Boolean(b) => boolean_violation(b).map(|v| v.to_string()),
            Object::Magog(m) => magog_violation(m),
            Object::Domain(d) => domain_violation(d),
            Object::Tsscpp(f) => tsscpp_violation(f),
            Object::Nclp(p) => (!validate_nclp(p)).then(|| "two paths cross".to_string()),
            Object::Nilp(p) => {
                (!validate_nilp(p)).then(|| "two paths share a lattice point".to_string())
            }
            Object::Ssb(b) => ssb_violation(b).map_err(shape_err)?,
            Object::Syt(s) => syt_violation(s),
            Object::SsbTriangle(t) => ssb_triangle_violation(t),
            Object::Abh(h) => abh_violation(h, Bounds::Definition).map(|v| v.to_string()),
        })
    }

    /// Fails with the first violated condition.
    pub fn validated(self) -> Result<Object, CliError> {
        match self.violation()? {
            None => Ok(self),
            Some(v) => Err(CliError::Invalid(format!("invalid {}: {v}", self.family()))),
        }
    }

    pub fn abt(a: &AbtTriangle) -> Object {
        Object::Abt(a.as_triangle().clone())
    }
}

/// Parses and shape-checks one JSON document.
pub fn parse_object(text: &str) -> Result<Object, CliError> {
    Envelope::parse(text)?.into_object()
}

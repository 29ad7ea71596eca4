pub mod abh;
pub mod abt;
pub mod conformance;
pub mod counting;
pub mod error;
pub mod figures;
pub mod paths;
pub mod seq;
pub mod ssb;
pub mod triangle;
pub mod tsscpp;

pub use error::{Error, Result};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/triangles.md")]
    mod triangles {}
    #[doc = include_str!("../../../book/src/tsscpp.md")]
    mod tsscpp {}
    #[doc = include_str!("../../../book/src/ballots.md")]
    mod ballots {}
    #[doc = include_str!("../../../book/src/hypertriangles.md")]
    mod hypertriangles {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

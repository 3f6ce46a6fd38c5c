//! Tools for Gallai-Ramsey questions on edge-colored complete bipartite graphs.
//!
//! The crate is organised around [`BipartiteColoring`], an `r`-coloring of the
//! edges of `K_{n1,n2}`:
//!
//! - [`detect`] finds monochromatic and rainbow bicliques and checks certificates.
//! - [`bounds`] evaluates the closed-form size and dimension bounds.
//! - [`construct`] builds avoiding and random colorings.
//! - [`search`] runs exhaustive avoidance search, exact Zarankiewicz numbers and
//!   DIMACS export.
//! - [`euclid`] maps colorings onto products of regular simplices.
//! - [`cli`] is the `gallai` command line front end.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod construct;
pub mod detect;
mod error;
pub mod euclid;
pub mod rng;
pub mod search;

pub use coloring::{BicliqueCertificate, BicliquePattern, BipartiteColoring, CertificateKind, Color};
pub use error::{Error, Result};

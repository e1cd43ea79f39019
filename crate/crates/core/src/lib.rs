//! Fixed-parameter graph algorithms built on derandomized color coding.
//!
//! Every solver walks a universal coloring family (see [`coloring`]) and
//! reports the first member, in canonical order, under which a cheap
//! per-coloring computation succeeds. Members are evaluated in parallel with
//! an ordered first-success reduction, so answers and witnesses do not
//! depend on the number of threads.

pub mod check;
pub mod cluster;
pub mod coloring;
pub mod cover;
pub mod cut;
pub mod embed;
pub mod error;
pub mod graph;
pub mod local;
pub mod oracle;
pub mod packing;
pub mod runner;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use runner::{Engine, Exec, SolveOptions, SolveStats, Solved};

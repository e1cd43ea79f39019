//! Packing disjoint copies of small graphs, by embedding the disjoint union.

use crate::embed::{embed_pattern, pattern_for};
use crate::error::{domain, Result};
use crate::graph::{Graph, PatternSpec, Vertex};
use crate::runner::{SolveOptions, Solved};

/// Largest component accepted by [`pack`].
pub const MAX_PACK_COMPONENT: usize = 5;

/// Images of the packed components, one vertex list per component in
/// the component's own vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub copies: Vec<Vec<Vertex>>,
}

/// Packs one copy of each graph in `components`.
pub fn pack(g: &Graph, components: &[Graph], opts: &SolveOptions) -> Result<Solved<Packing>> {
    if let Some(c) = components.iter().find(|c| c.vertex_count() > MAX_PACK_COMPONENT) {
        return Err(domain(format!(
            "component has {} vertices, at most {MAX_PACK_COMPONENT} allowed",
            c.vertex_count()
        )));
    }
    pack_spec(g, &PatternSpec::Multiset(components.to_vec()), opts)
}

pub fn pack_cycles(g: &Graph, k: usize, l: usize, opts: &SolveOptions) -> Result<Solved<Packing>> {
    pack_spec(g, &PatternSpec::Cycles { k, l }, opts)
}

pub fn pack_paths(g: &Graph, k: usize, l: usize, opts: &SolveOptions) -> Result<Solved<Packing>> {
    pack_spec(g, &PatternSpec::Paths { k, l }, opts)
}

pub fn pack_forest(g: &Graph, forest: &Graph, opts: &SolveOptions) -> Result<Solved<Packing>> {
    pack_spec(g, &PatternSpec::Forest(forest.clone()), opts)
}

/// Packs whatever union `spec` describes; each component of the pattern
/// becomes one entry of the witness.
pub fn pack_spec(g: &Graph, spec: &PatternSpec, opts: &SolveOptions) -> Result<Solved<Packing>> {
    let pattern = pattern_for(spec, g)?;
    let solved = embed_pattern(&pattern, g, &[], opts)?;
    Ok(solved.map(|e| Packing {
        copies: pattern.components.iter().map(|comp| comp.iter().map(|&h| e.assignment[h]).collect()).collect(),
    }))
}

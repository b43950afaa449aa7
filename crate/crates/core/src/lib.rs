//! Exact combinatorics, torsion and homology for asymptotically rigid mapping
//! class groups of surfaces built from planar trees.
//!
//! Modules are layered bottom-up: [`trees`] supplies the planar trees and their
//! finite subtrees, [`simplicial`] is the integer homology engine, and
//! [`cubes`], [`arcs`], [`torsion`] and [`presentations`] build on them.

pub mod arcs;
pub mod cubes;
pub mod presentations;
pub mod simplicial;
pub mod torsion;
pub mod trees;

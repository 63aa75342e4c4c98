//! Exact splittability analysis for incidence configurations and the graphs
//! that encode them: cyclic Haar graphs, generalized Petersen graphs and LCF
//! constructions.
//!
//! A connected graph is *splittable* when some set of vertices that is
//! independent in its square can be removed to disconnect it. For a
//! configuration the graph in question is its Levi graph, and the removable
//! set may additionally be restricted to points or to lines. This crate
//! builds the relevant graph families, decides splittability exactly with
//! certificates, classifies splitting types, computes automorphism groups and
//! isomorphisms, and exposes the constructions and scanners used to survey
//! cyclic configurations.

pub mod bits;
pub mod families;
pub mod graph;
pub mod haar;
pub mod incidence;
pub mod splittability;
pub mod symmetry;

pub use bits::Bits;
pub use graph::{Extent, Graph, GraphError};
pub use haar::{HaarGraph, HaarSymbol};
pub use incidence::{Color, ColoredLevi, Configuration, SplittingType};
pub use splittability::{ColorRestriction, SigmaCheck, SplitReport, Verdict};
pub use symmetry::AutomorphismGroup;

//! Search for regular, triangle-distinct graphs.
//!
//! The triangle-degree of a vertex is the number of triangles through it; a
//! graph is triangle-distinct (TD) when no two vertices share one. This crate
//! searches the space of `r`-regular graphs on `n` vertices with
//! degree-preserving edge switchings, greedy descent and variable
//! neighbourhood search, and checks candidate graphs against the known
//! examples.
//!
//! Objective values are generic over [`scalar::Scalar`]; the aliases below
//! fix the common choices.

pub mod adjlist;
pub mod bits;
pub mod error;
pub mod generator;
pub mod graph;
pub mod graph6;
pub mod moves;
pub mod objectives;
pub mod rng;
pub mod scalar;
pub mod scan;
pub mod search;

pub use adjlist::{
    from_adjacency_list, parse_adjacency_document, to_adjacency_list, AdjacencyDocument,
};
pub use error::{GeneratorError, GraphError, IdentityError, MoveError, ScanError, SearchError};
pub use generator::{circulant_regular, random_regular, GeneratorParams};
pub use graph::{complement_triangle_degree, triangle_degrees, Graph, TriangleProfile};
pub use graph6::{decode_graph6, encode_graph6};
pub use moves::{
    apply, apply_with_profile, enumerate_feasible, is_feasible, random_switching, Switching,
};
pub use objectives::{check_necessary_condition, f1, f2, f3, is_triangle_distinct, ObjectiveKind};
pub use rng::SearchRng;
pub use scan::{load_fixture, scan_stream, verify_graph, CensusCounts, Fixture, ScanOptions};
pub use search::{SearchConfig, VnsEvent};

pub use num_rational::BigRational;

/// Double-precision objective value.
pub type ObjectiveValue = objectives::Value<f64>;
/// Exact rational objective value.
pub type ExactObjectiveValue = objectives::Value<BigRational>;
/// Search outcome with double-precision objective values.
pub type SearchReport = search::Report<f64>;
/// Search outcome with exact rational objective values.
pub type ExactSearchReport = search::Report<BigRational>;
/// Greedy descent result with double-precision objective values.
pub type Descent = search::Descent<f64>;

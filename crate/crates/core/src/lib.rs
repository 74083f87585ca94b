//! Exact `(k,l)`-coloring polynomials of multigraphs.
//!
//! A `(k,l)`-coloring assigns each vertex one of `k` proper colors or `l`
//! wildcards; it is proper when no edge joins two vertices of the same proper
//! color. The number of proper colorings is a polynomial `chi_G(k,l)` in two
//! variables, which reduces to the chromatic polynomial at `l = 0`.
//!
//! * [`multigraph`]: multigraphs with loops and parallel edges, surgery,
//!   canonical keys, the `.mg` file format.
//! * [`bipoly`]: exact bivariate integer polynomials.
//! * [`engine`]: memoized deletion-contraction, the wildcard removal rules,
//!   and two independent counting oracles.
//! * [`sequences`]: path and cycle sequences, recurrence mining, identity
//!   verification.
//! * [`cli`]: the `wildcolor` command line.
//!
//! ```
//! use wildcolor::{compute_chi, EngineConfig, Family};
//!
//! let p2 = Family::Path(2).build().unwrap();
//! let chi = compute_chi(&p2, EngineConfig::default());
//! assert_eq!(chi.to_string(), "x^2 + 2*x*y + y^2 - x");
//! assert_eq!(chi.eval(2, 1), 7.into());
//! ```

pub mod bipoly;
pub mod cli;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod multigraph;
pub mod sequences;

pub use bipoly::{format_poly, parse_poly, power_xy, BiPoly};
pub use engine::{
    chi_wildcard, compute_chi, count_bruteforce, count_subset_expansion, independence_weighted_sum, simplify,
    BruteForceBudget, ChiEngine, ColoringAssignment, ColoringParams, EdgeStrategy, EngineConfig, SubsetBudget,
};
pub use error::{Error, Result};
pub use multigraph::{build_family, parse_graph, serialize_graph, Edge, Family, Focus, KeyMode, MultiGraph, Vertex};
pub use sequences::{
    a_seq, b_seq, check_sneaky, classic_sequence, cross_check_graphs, hankel_det_b, minimal_recurrence,
    verify_identity, Classic, IdentityId, IdentityReport, Recurrence, SeqParams,
};

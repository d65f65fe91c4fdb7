//! Exact domination-type parameters of direct products `P_n × K_m` and
//! `C_n × K_m`, with verifiers, closed-form values and explicit certificates.

pub mod bitset;
pub mod constructions;
pub mod erratum;
pub mod formulas;
pub mod graph;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use constructions::{build, build_and_verify, ConstructionKind, ConstructionReport};
pub use erratum::{run_erratum, run_erratum_at, ClaimId, ErratumReport, ErratumVerdict};
pub use formulas::{evaluate, FormulaError, FormulaResult, Source};
pub use graph::{
    direct_product, make_clique, make_cycle, make_path, parse_edge_list, product_instance,
    read_edge_list, write_edge_list, Family, Graph, GraphError, ParseError, ProductCoords,
    ProductMeta,
};
pub use solver::{
    certify, lower_bound_columns, solve_all_min, solve_min, SolveConfig, SolveError, SolveResult,
};
pub use verify::{verify, Certificate, ParamKind, Verdict, VerifyError};

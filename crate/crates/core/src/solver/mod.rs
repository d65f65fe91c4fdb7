//! Exact minimum-size solvers.

mod bound;
mod enumerate;
mod search;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::verify::{verify, ParamKind, VerifyError};

pub use bound::lower_bound_columns;

use enumerate::Enumerator;
use search::{closed_neighborhoods, find_set, Budget, Stop};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("search budget exhausted after {nodes} nodes; value is at least {lower_bound}")]
    BudgetExceeded { lower_bound: usize, nodes: u64 },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveConfig {
    /// Search nodes allowed before giving up. `None` means unlimited.
    pub node_budget: Option<u64>,
    /// Start the search at the column-profile bound on product instances.
    pub use_column_pruning: bool,
    /// Replace the certificate by the lexicographically smallest minimum set.
    pub canonical_certificate: bool,
    /// Worker threads for the top-level branches; 0 or 1 runs sequentially.
    pub parallel_width: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            node_budget: Some(DEFAULT_NODE_BUDGET),
            use_column_pruning: true,
            canonical_certificate: true,
            parallel_width: 0,
        }
    }
}

impl SolveConfig {
    fn budget(&self) -> Budget {
        Budget::new(self.node_budget.unwrap_or(u64::MAX))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: ParamKind,
    pub value: usize,
    pub certificate: VertexSet,
    pub stats: SolveStats,
    /// Whether `certificate` is the lexicographically smallest minimum set.
    pub canonical: bool,
}

/// Size bound from counting: each added vertex satisfies at most `Δ + 1`
/// missing dominations, or `Δ + 2` units of 2-domination deficiency.
fn counting_bound(g: &Graph, kind: ParamKind) -> usize {
    let n = g.vertex_count();
    let delta = g.max_degree();
    match kind {
        ParamKind::TwoDom => (2 * n).div_ceil(delta + 2),
        _ => n.div_ceil(delta + 1),
    }
}

fn starting_size(g: &Graph, kind: ParamKind, cfg: &SolveConfig) -> usize {
    let mut lb = counting_bound(g, kind).max(1);
    if cfg.use_column_pruning {
        lb = lb.max(lower_bound_columns(g, kind));
    }
    lb
}

/// Computes the exact minimum size of a set with the property `kind`.
pub fn solve_min(g: &Graph, kind: ParamKind, cfg: &SolveConfig) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let budget = cfg.budget();
    let closed = closed_neighborhoods(g);
    let seed = VertexSet::new(n);
    let mut found = None;
    for k in starting_size(g, kind, cfg)..=n {
        match find_set(g, kind, &closed, k, &seed, cfg.parallel_width, &budget) {
            Ok(Some(set)) => {
                found = Some(set);
                break;
            }
            Ok(None) => {}
            Err(Stop::Budget) | Err(Stop::Cancelled) => {
                return Err(SolveError::BudgetExceeded {
                    lower_bound: k,
                    nodes: budget.used(),
                })
            }
        }
    }
    let mut certificate = found.expect("the full vertex set is always a valid solution");
    let value = certificate.len();
    let mut canonical = false;
    if cfg.canonical_certificate {
        let mut first = Enumerator::new(g, kind, value, true, &budget);
        if first.run().is_ok() {
            if let Some(set) = first.found.pop() {
                certificate = set;
                canonical = true;
            }
        }
    }
    debug_assert!(verify(g, kind, &certificate).map(|v| v.ok).unwrap_or(false));
    Ok(SolveResult {
        kind,
        value,
        certificate,
        stats: SolveStats {
            nodes: budget.used(),
            elapsed: start.elapsed(),
        },
        canonical,
    })
}

fn enumerate(
    g: &Graph,
    kind: ParamKind,
    size: usize,
    first_only: bool,
    budget: &Budget,
) -> Result<Vec<VertexSet>, SolveError> {
    if size > g.vertex_count() {
        return Ok(Vec::new());
    }
    let mut e = Enumerator::new(g, kind, size, first_only, budget);
    match e.run() {
        Ok(()) => Ok(e.found),
        Err(_) => Err(SolveError::BudgetExceeded {
            lower_bound: 0,
            nodes: budget.used(),
        }),
    }
}

/// All sets of exactly `size` vertices with the property `kind`, in
/// lexicographic order.
pub fn solve_all_min(g: &Graph, kind: ParamKind, size: usize) -> Result<Vec<VertexSet>, SolveError> {
    solve_all_min_with_budget(g, kind, size, Some(DEFAULT_NODE_BUDGET))
}

pub fn solve_all_min_with_budget(
    g: &Graph,
    kind: ParamKind,
    size: usize,
    node_budget: Option<u64>,
) -> Result<Vec<VertexSet>, SolveError> {
    let budget = Budget::new(node_budget.unwrap_or(u64::MAX));
    enumerate(g, kind, size, false, &budget)
}

/// Whether some set of exactly `size` vertices has the property `kind`.
pub fn exists_of_size(
    g: &Graph,
    kind: ParamKind,
    size: usize,
    node_budget: Option<u64>,
) -> Result<bool, SolveError> {
    let budget = Budget::new(node_budget.unwrap_or(u64::MAX));
    Ok(!enumerate(g, kind, size, true, &budget)?.is_empty())
}

/// Confirms that `certificate` is valid, has `claimed` vertices, and that no
/// smaller valid set exists. Smaller sizes are re-checked by exhaustive
/// enumeration, independently of [`solve_min`].
pub fn certify(
    g: &Graph,
    kind: ParamKind,
    claimed: usize,
    certificate: &VertexSet,
) -> Result<bool, SolveError> {
    certify_with_budget(g, kind, claimed, certificate, Some(DEFAULT_NODE_BUDGET))
}

pub fn certify_with_budget(
    g: &Graph,
    kind: ParamKind,
    claimed: usize,
    certificate: &VertexSet,
    node_budget: Option<u64>,
) -> Result<bool, SolveError> {
    if !verify(g, kind, certificate)?.ok || certificate.len() != claimed {
        return Ok(false);
    }
    if claimed == 0 {
        return Ok(true);
    }
    let budget = Budget::new(node_budget.unwrap_or(u64::MAX));
    // Supersets of valid sets stay valid for monotone properties, so one
    // size suffices there.
    let sizes: Vec<usize> = if kind.is_monotone() {
        vec![claimed - 1]
    } else {
        (0..claimed).collect()
    };
    for size in sizes {
        if !enumerate(g, kind, size, true, &budget)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Polynomial-time checks for the five set properties, with witnesses.
//!
//! Every check returns a [`Verdict`]. On failure the verdict names the
//! smallest-id offending vertex and why it fails; a successful secure
//! domination check also records, for each vertex outside the set, the
//! smallest-id neighbour in the set that can be swapped in for it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, ParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("vertex set has capacity {got}, graph has {expected} vertices")]
    CapacityMismatch { expected: usize, got: usize },
    #[error("graph is not a path-clique or cycle-clique product")]
    NotAProduct,
    #[error("column {column} out of range 1..={n}")]
    ColumnOutOfRange { column: usize, n: usize },
    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("column domination by pairs needs m >= 3, got m = {0}")]
    CliqueTooSmall(usize),
}

/// The five domination-type parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    /// Domination, `γ`.
    Dom,
    /// Independent domination, `i`.
    IndependentDom,
    /// `[1,2]`-domination, `γ_[1,2]`.
    Dom12,
    /// 2-domination, `γ_2`.
    TwoDom,
    /// Secure domination, `γ_s`.
    SecureDom,
}

impl ParamKind {
    pub const ALL: [ParamKind; 5] = [
        ParamKind::Dom,
        ParamKind::IndependentDom,
        ParamKind::Dom12,
        ParamKind::TwoDom,
        ParamKind::SecureDom,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Dom => "dom",
            ParamKind::IndependentDom => "idom",
            ParamKind::Dom12 => "dom12",
            ParamKind::TwoDom => "2dom",
            ParamKind::SecureDom => "sdom",
        }
    }

    /// Conventional symbol of the parameter.
    pub fn symbol(self) -> &'static str {
        match self {
            ParamKind::Dom => "gamma",
            ParamKind::IndependentDom => "i",
            ParamKind::Dom12 => "gamma_[1,2]",
            ParamKind::TwoDom => "gamma_2",
            ParamKind::SecureDom => "gamma_s",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ParamKind::Dom => "dominating",
            ParamKind::IndependentDom => "independent dominating",
            ParamKind::Dom12 => "[1,2]-set",
            ParamKind::TwoDom => "2-dominating",
            ParamKind::SecureDom => "secure dominating",
        }
    }

    /// Whether every superset of a valid set is valid.
    pub fn is_monotone(self) -> bool {
        matches!(
            self,
            ParamKind::Dom | ParamKind::TwoDom | ParamKind::SecureDom
        )
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParamKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown parameter `{s}` (expected dom, idom, dom12, 2dom or sdom)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// No vertex of the set in the closed neighbourhood.
    Undominated,
    /// An outside vertex with more than two neighbours in the set.
    Overdominated,
    /// An outside vertex with fewer than two neighbours in the set.
    Underdominated,
    /// The vertex has a neighbour inside the set.
    Adjacent,
    /// No neighbour in the set can be swapped for this vertex.
    Undefended,
}

impl FailureReason {
    pub fn name(self) -> &'static str {
        match self {
            FailureReason::Undominated => "undominated",
            FailureReason::Overdominated => "overdominated",
            FailureReason::Underdominated => "underdominated",
            FailureReason::Adjacent => "adjacent",
            FailureReason::Undefended => "undefended",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    pub vertex: usize,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub failure: Option<Failure>,
    /// Outside vertex -> chosen defender. Present only for successful secure
    /// domination checks.
    pub defenders: Option<BTreeMap<usize, usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Self {
            ok: true,
            failure: None,
            defenders: None,
        }
    }

    pub fn fail(vertex: usize, reason: FailureReason) -> Self {
        Self {
            ok: false,
            failure: Some(Failure { vertex, reason }),
            defenders: None,
        }
    }
}

fn check_capacity(g: &Graph, s: &VertexSet) -> Result<(), VerifyError> {
    if s.capacity() != g.vertex_count() {
        return Err(VerifyError::CapacityMismatch {
            expected: g.vertex_count(),
            got: s.capacity(),
        });
    }
    Ok(())
}

/// `N[S]`.
fn dominated_by(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut covered = s.clone();
    for v in s {
        covered.union_with(g.neighbors(v));
    }
    covered
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<Verdict, VerifyError> {
    check_capacity(g, s)?;
    Ok(match dominated_by(g, s).first_missing() {
        None => Verdict::pass(),
        Some(w) => Verdict::fail(w, FailureReason::Undominated),
    })
}

/// Checks that `s` induces no edge. The witness is the first vertex of the
/// lexicographically first adjacent pair.
pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<Verdict, VerifyError> {
    check_capacity(g, s)?;
    Ok(match s.iter().find(|&v| g.neighbors(v).intersects(s)) {
        None => Verdict::pass(),
        Some(v) => Verdict::fail(v, FailureReason::Adjacent),
    })
}

pub fn is_independent_dominating(g: &Graph, s: &VertexSet) -> Result<Verdict, VerifyError> {
    let dom = is_dominating(g, s)?;
    if !dom.ok {
        return Ok(dom);
    }
    is_independent(g, s)
}

/// Every outside vertex has one or two neighbours in `s`. Vertices inside
/// `s` are unconstrained.
pub fn is_12_set(g: &Graph, s: &VertexSet) -> Result<Verdict, VerifyError> {
    check_capacity(g, s)?;
    for w in (0..g.vertex_count()).filter(|&w| !s.contains(w)) {
        match g.neighbors(w).intersection_len(s) {
            0 => return Ok(Verdict::fail(w, FailureReason::Undominated)),
            1 | 2 => {}
            _ => return Ok(Verdict::fail(w, FailureReason::Overdominated)),
        }
    }
    Ok(Verdict::pass())
}

pub fn is_2_dominating(g: &Graph, s: &VertexSet) -> Result<Verdict, VerifyError> {
    check_capacity(g, s)?;
    for w in (0..g.vertex_count()).filter(|&w| !s.contains(w)) {
        if g.neighbors(w).intersection_len(s) < 2 {
            return Ok(Verdict::fail(w, FailureReason::Underdominated));
        }
    }
    Ok(Verdict::pass())
}

/// Secure domination. The swap `(S \ {v}) ∪ {w}` stays dominating exactly
/// when every vertex dominated by `v` alone lies in `N[w]`, so each
/// candidate defender costs one subset test.
pub fn is_secure_dominating(g: &Graph, s: &VertexSet) -> Result<Verdict, VerifyError> {
    let dom = is_dominating(g, s)?;
    if !dom.ok {
        return Ok(dom);
    }
    let n = g.vertex_count();
    let counts: Vec<usize> = (0..n)
        .map(|u| g.neighbors(u).intersection_len(s) + usize::from(s.contains(u)))
        .collect();
    let private: BTreeMap<usize, VertexSet> = s
        .iter()
        .map(|v| {
            let p = VertexSet::from_ids(
                n,
                g.closed_neighbors(v).iter().filter(|&u| counts[u] == 1),
            );
            (v, p)
        })
        .collect();
    let mut defenders = BTreeMap::new();
    for w in (0..n).filter(|&w| !s.contains(w)) {
        let closed = g.closed_neighbors(w);
        let defender = g
            .neighbors(w)
            .iter()
            .filter(|&v| s.contains(v))
            .find(|v| private[v].is_subset(&closed));
        match defender {
            Some(v) => {
                defenders.insert(w, v);
            }
            None => return Ok(Verdict::fail(w, FailureReason::Undefended)),
        }
    }
    Ok(Verdict {
        ok: true,
        failure: None,
        defenders: Some(defenders),
    })
}

/// Dispatches to the check for `kind`.
pub fn verify(g: &Graph, kind: ParamKind, s: &VertexSet) -> Result<Verdict, VerifyError> {
    match kind {
        ParamKind::Dom => is_dominating(g, s),
        ParamKind::IndependentDom => is_independent_dominating(g, s),
        ParamKind::Dom12 => is_12_set(g, s),
        ParamKind::TwoDom => is_2_dominating(g, s),
        ParamKind::SecureDom => is_secure_dominating(g, s),
    }
}

/// A vertex set together with the parameter it claims and its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: ParamKind,
    pub set: VertexSet,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn check(g: &Graph, kind: ParamKind, set: VertexSet) -> Result<Self, VerifyError> {
        let verdict = verify(g, kind, &set)?;
        Ok(Self { kind, set, verdict })
    }
}

/// Per-column counts `d_i = |S ∩ X_i|` of a set in a product instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnProfile {
    counts: Vec<usize>,
    cyclic: bool,
}

impl ColumnProfile {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `d_i` for `i ∈ 0..=n+1`. Paths read `d_0 = d_{n+1} = 0`; cycles wrap.
    pub fn get(&self, i: usize) -> usize {
        let n = self.counts.len();
        if (1..=n).contains(&i) {
            self.counts[i - 1]
        } else if !self.cyclic {
            0
        } else if i == 0 {
            self.counts[n - 1]
        } else {
            self.counts[(i - 1) % n]
        }
    }

    /// `d_{i-1} + d_i + d_{i+1}`.
    pub fn triple(&self, i: usize) -> usize {
        self.get(i - 1) + self.get(i) + self.get(i + 1)
    }

    pub fn min_triple(&self) -> usize {
        (1..=self.counts.len())
            .map(|i| self.triple(i))
            .min()
            .unwrap_or(0)
    }
}

pub fn column_profile(g: &Graph, s: &VertexSet) -> Result<ColumnProfile, VerifyError> {
    check_capacity(g, s)?;
    let meta = g.family_meta().ok_or(VerifyError::NotAProduct)?;
    let coords = meta.coords();
    let mut counts = vec![0; meta.n];
    for v in s {
        counts[coords.column_of(v) - 1] += 1;
    }
    Ok(ColumnProfile {
        counts,
        cyclic: meta.family.is_cyclic(),
    })
}

/// Decides whether `{a, b}` dominates column `X_i` from the column pattern
/// alone: both vertices lie in `X_{i-1} ∪ X_i ∪ X_{i+1}`, not both in `X_i`,
/// and a pair with exactly one vertex in `X_i` shares a row while a pair with
/// both outside `X_i` does not.
pub fn doubleton_dominates_column(
    g: &Graph,
    a: usize,
    b: usize,
    i: usize,
) -> Result<bool, VerifyError> {
    let meta = g.family_meta().ok_or(VerifyError::NotAProduct)?;
    let (n, m) = (meta.n, meta.m);
    if !(1..=n).contains(&i) {
        return Err(VerifyError::ColumnOutOfRange { column: i, n });
    }
    for v in [a, b] {
        if v >= n * m {
            return Err(VerifyError::VertexOutOfRange { vertex: v });
        }
    }
    if m < 3 {
        return Err(VerifyError::CliqueTooSmall(m));
    }
    if a == b {
        return Ok(false);
    }
    let coords = meta.coords();
    let (ca, ra) = coords.coords(a);
    let (cb, rb) = coords.coords(b);
    let side = |c: usize| -> bool {
        if meta.family.is_cyclic() {
            (c % n) + 1 == i || (i % n) + 1 == c
        } else {
            c + 1 == i || i + 1 == c
        }
    };
    let near = |c: usize| c == i || side(c);
    if !near(ca) || !near(cb) {
        return Ok(false);
    }
    Ok(match (ca == i, cb == i) {
        (true, true) => false,
        (true, false) | (false, true) => ra == rb,
        (false, false) => ra != rb,
    })
}

/// Parses certificate text. For path-clique and cycle-clique instances each
/// line is `i j` (1-based column and row, optionally written `(i, j)`);
/// otherwise each line is a 0-based vertex id. `#` starts a comment line.
pub fn parse_certificate(g: &Graph, text: &str) -> Result<VertexSet, ParseError> {
    let n = g.vertex_count();
    let coords = g.family_meta().map(|m| m.coords());
    let mut set = VertexSet::new(n);
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let cleaned: String = content
            .chars()
            .map(|c| if matches!(c, '(' | ')' | ',') { ' ' } else { c })
            .collect();
        let fields: Vec<&str> = cleaned.split_whitespace().collect();
        let nums: Vec<usize> = fields
            .iter()
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| ParseError::new(lineno, format!("bad number `{f}`")))
            })
            .collect::<Result<_, _>>()?;
        let v = match (coords, nums.as_slice()) {
            (Some(c), &[i, j]) => c.try_index(i, j).ok_or_else(|| {
                ParseError::new(
                    lineno,
                    format!("coordinate ({i}, {j}) outside [{}] x [{}]", c.n(), c.m()),
                )
            })?,
            (Some(_), _) => return Err(ParseError::new(lineno, "expected `i j`")),
            (None, &[v]) if v < n => v,
            (None, &[v]) => {
                return Err(ParseError::new(
                    lineno,
                    format!("vertex {v} out of range for {n} vertices"),
                ))
            }
            (None, _) => return Err(ParseError::new(lineno, "expected a vertex id")),
        };
        if !set.insert(v) {
            return Err(ParseError::new(lineno, "duplicate vertex"));
        }
    }
    Ok(set)
}

/// Formats a set in the certificate text format, one vertex per line:
/// `(i j)` for product instances, the id otherwise.
pub fn format_certificate(g: &Graph, s: &VertexSet) -> String {
    let coords = g.family_meta().map(|m| m.coords());
    s.iter()
        .map(|v| match coords {
            Some(c) => {
                let (i, j) = c.coords(v);
                format!("({i} {j})\n")
            }
            None => format!("{v}\n"),
        })
        .collect()
}

/// Human-readable vertex label: `(i j)` for product instances, the id otherwise.
pub fn vertex_label(g: &Graph, v: usize) -> String {
    match g.family_meta() {
        Some(meta) => {
            let (i, j) = meta.coords().coords(v);
            format!("({i} {j})")
        }
        None => v.to_string(),
    }
}

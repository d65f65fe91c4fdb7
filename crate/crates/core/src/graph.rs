//! Simple undirected graphs with dense bit-vector adjacency, the path / cycle /
//! clique generators and the direct (tensor) product.
//!
//! Product instances `P_n × K_m` and `C_n × K_m` carry [`ProductMeta`] so that
//! callers can move between internal ids and 1-based `(column, row)`
//! coordinates. Vertex `(i, j)` of a product has id `(i - 1) * m + (j - 1)`,
//! which keeps every column `X_i` a contiguous id range.

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid size for {what}: got {value}, need at least {min}")]
    InvalidSize {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Which product family a graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    PathClique,
    CycleClique,
    Other,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::PathClique => "path-clique",
            Family::CycleClique => "cycle-clique",
            Family::Other => "other",
        }
    }

    pub fn is_cyclic(self) -> bool {
        self == Family::CycleClique
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path-clique" | "path" => Ok(Family::PathClique),
            "cycle-clique" | "cycle" => Ok(Family::CycleClique),
            other => Err(format!(
                "unknown family `{other}` (expected path-clique or cycle-clique)"
            )),
        }
    }
}

/// Product bookkeeping: `n` is the order of the first factor (the path or
/// cycle), `m` the order of the second (the clique).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductMeta {
    pub family: Family,
    pub n: usize,
    pub m: usize,
}

impl ProductMeta {
    pub fn coords(&self) -> ProductCoords {
        ProductCoords {
            n: self.n,
            m: self.m,
        }
    }
}

/// Bijection between ids `0..n*m` and 1-based coordinates `[n] × [m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductCoords {
    n: usize,
    m: usize,
}

impl ProductCoords {
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.m
    }

    /// Id of vertex `(i, j)`, with `i ∈ [n]` and `j ∈ [m]`.
    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.m).contains(&j));
        (i - 1) * self.m + (j - 1)
    }

    /// Checked variant of [`index`](Self::index).
    pub fn try_index(&self, i: usize, j: usize) -> Option<usize> {
        ((1..=self.n).contains(&i) && (1..=self.m).contains(&j)).then(|| self.index(i, j))
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        debug_assert!(v < self.vertex_count());
        (v / self.m + 1, v % self.m + 1)
    }

    #[inline]
    pub fn column_of(&self, v: usize) -> usize {
        v / self.m + 1
    }

    #[inline]
    pub fn row_of(&self, v: usize) -> usize {
        v % self.m + 1
    }

    /// Column `X_i`.
    pub fn column(&self, i: usize) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), (1..=self.m).map(|j| self.index(i, j)))
    }

    /// Row `R_j`.
    pub fn row(&self, j: usize) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), (1..=self.n).map(|i| self.index(i, j)))
    }

    /// Builds a set from 1-based coordinates.
    pub fn set_of<I: IntoIterator<Item = (usize, usize)>>(&self, cells: I) -> VertexSet {
        VertexSet::from_ids(
            self.vertex_count(),
            cells.into_iter().map(|(i, j)| self.index(i, j)),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Other,
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    shape: Shape,
    meta: Option<ProductMeta>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .field("meta", &self.meta)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![VertexSet::new(vertex_count); vertex_count];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adjacency[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[v].insert(u);
        }
        Ok(Self {
            adjacency,
            shape: Shape::Other,
            meta: None,
        })
    }

    fn from_adjacency(adjacency: Vec<VertexSet>, shape: Shape, meta: Option<ProductMeta>) -> Self {
        let g = Self {
            adjacency,
            shape,
            meta,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adjacency[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn meta(&self) -> Option<ProductMeta> {
        self.meta
    }

    /// Coordinates, when the graph is a direct product.
    pub fn coords(&self) -> Option<ProductCoords> {
        self.meta.map(|m| m.coords())
    }

    /// Metadata of a path-clique or cycle-clique instance, if this is one.
    pub fn family_meta(&self) -> Option<ProductMeta> {
        self.meta.filter(|m| m.family != Family::Other)
    }

    /// Symmetric, loop-free, and every bit in range.
    pub fn is_well_formed(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().enumerate().all(|(u, nb)| {
            nb.capacity() == n && !nb.contains(u) && nb.iter().all(|v| self.adjacency[v].contains(u))
        })
    }
}

/// Path `P_n` on vertices `0..n`.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize {
            what: "path",
            value: n,
            min: 1,
        });
    }
    let mut adjacency = vec![VertexSet::new(n); n];
    for k in 1..n {
        adjacency[k - 1].insert(k);
        adjacency[k].insert(k - 1);
    }
    Ok(Graph::from_adjacency(adjacency, Shape::Path(n), None))
}

/// Cycle `C_n`. `C_2` is a single edge.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidSize {
            what: "cycle",
            value: n,
            min: 2,
        });
    }
    let mut adjacency = vec![VertexSet::new(n); n];
    for k in 0..n {
        let next = (k + 1) % n;
        adjacency[k].insert(next);
        adjacency[next].insert(k);
    }
    Ok(Graph::from_adjacency(adjacency, Shape::Cycle(n), None))
}

/// Complete graph `K_m`.
pub fn make_clique(m: usize) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(GraphError::InvalidSize {
            what: "clique",
            value: m,
            min: 1,
        });
    }
    let adjacency = (0..m)
        .map(|v| {
            let mut row = VertexSet::full(m);
            row.remove(v);
            row
        })
        .collect();
    Ok(Graph::from_adjacency(adjacency, Shape::Clique(m), None))
}

/// Direct product `g × h`: `(g1, h1) ~ (g2, h2)` iff `g1 ~ g2` and `h1 ~ h2`.
///
/// Vertex `(a, b)` gets id `a * |h| + b`. The result always carries
/// [`ProductMeta`]; the family is `PathClique` / `CycleClique` when `g` came
/// from [`make_path`] / [`make_cycle`] and `h` from [`make_clique`].
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    for (what, count) in [("left factor", gn), ("right factor", hn)] {
        if count == 0 {
            return Err(GraphError::InvalidSize {
                what,
                value: 0,
                min: 1,
            });
        }
    }
    let total = gn * hn;
    let mut adjacency = vec![VertexSet::new(total); total];
    for (a1, a2) in g.edges() {
        for (b1, b2) in h.edges() {
            for (x, y) in [
                (a1 * hn + b1, a2 * hn + b2),
                (a1 * hn + b2, a2 * hn + b1),
            ] {
                adjacency[x].insert(y);
                adjacency[y].insert(x);
            }
        }
    }
    let family = match (g.shape, h.shape) {
        (Shape::Path(_), Shape::Clique(_)) => Family::PathClique,
        (Shape::Cycle(_), Shape::Clique(_)) => Family::CycleClique,
        _ => Family::Other,
    };
    let meta = ProductMeta {
        family,
        n: gn,
        m: hn,
    };
    Ok(Graph::from_adjacency(adjacency, Shape::Other, Some(meta)))
}

/// `P_n × K_m` or `C_n × K_m`.
pub fn product_instance(family: Family, n: usize, m: usize) -> Result<Graph, GraphError> {
    if m < 2 {
        return Err(GraphError::InvalidSize {
            what: "clique order m",
            value: m,
            min: 2,
        });
    }
    let base = match family {
        Family::PathClique => make_path(n)?,
        Family::CycleClique => make_cycle(n)?,
        Family::Other => {
            return Err(GraphError::InvalidSize {
                what: "product family",
                value: 0,
                min: 1,
            })
        }
    };
    direct_product(&base, &make_clique(m)?)
}

/// Reads the edge-list text format: the first content line is the vertex
/// count, every further content line is `u v` with 0-based ids. Blank lines
/// and lines starting with `#` are ignored.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    let mut count: Option<usize> = None;
    let mut adjacency: Vec<VertexSet> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| ParseError::new(lineno, e.to_string()))?;
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(n) = count else {
            if fields.len() != 1 {
                return Err(ParseError::new(lineno, "expected the vertex count"));
            }
            let n = fields[0]
                .parse::<usize>()
                .map_err(|_| ParseError::new(lineno, format!("bad vertex count `{}`", fields[0])))?;
            count = Some(n);
            adjacency = vec![VertexSet::new(n); n];
            continue;
        };
        if fields.len() != 2 {
            return Err(ParseError::new(lineno, "expected `u v`"));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| ParseError::new(lineno, format!("bad vertex id `{f}`")))?;
            if *slot >= n {
                return Err(ParseError::new(
                    lineno,
                    format!("vertex {slot} out of range for {n} vertices"),
                ));
            }
        }
        let [u, v] = ends;
        if u == v {
            return Err(ParseError::new(lineno, format!("self-loop at vertex {u}")));
        }
        if !adjacency[u].insert(v) {
            return Err(ParseError::new(lineno, format!("duplicate edge {u} {v}")));
        }
        adjacency[v].insert(u);
    }
    if count.is_none() {
        return Err(ParseError::new(0, "missing vertex count"));
    }
    Ok(Graph::from_adjacency(adjacency, Shape::Other, None))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    read_edge_list(text.as_bytes())
}

/// Canonical edge-list text: vertex count, then edges `u v` with `u < v` in
/// lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_sizes() {
        for (n, e) in [(1, 0), (2, 1), (5, 4)] {
            let p = make_path(n).unwrap();
            assert_eq!((p.vertex_count(), p.edge_count()), (n, e));
        }
        for (n, e) in [(2, 1), (3, 3), (6, 6)] {
            let c = make_cycle(n).unwrap();
            assert_eq!((c.vertex_count(), c.edge_count()), (n, e));
        }
        for (m, e) in [(1, 0), (4, 6), (5, 10)] {
            assert_eq!(make_clique(m).unwrap().edge_count(), e);
        }
    }

    #[test]
    fn generator_size_errors() {
        assert!(matches!(make_path(0), Err(GraphError::InvalidSize { .. })));
        assert!(matches!(make_cycle(1), Err(GraphError::InvalidSize { .. })));
        assert!(matches!(make_clique(0), Err(GraphError::InvalidSize { .. })));
        assert!(product_instance(Family::PathClique, 3, 1).is_err());
        assert!(product_instance(Family::CycleClique, 1, 3).is_err());
    }

    #[test]
    fn product_edge_counts() {
        let g = direct_product(&make_path(2).unwrap(), &make_clique(3).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        let g = product_instance(Family::CycleClique, 6, 5).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (30, 120));
    }

    #[test]
    fn p2_times_k2_is_two_disjoint_edges() {
        let g = product_instance(Family::PathClique, 2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 2));
        let c = g.coords().unwrap();
        assert!(g.has_edge(c.index(1, 1), c.index(2, 2)));
        assert!(g.has_edge(c.index(1, 2), c.index(2, 1)));
        assert!(!g.has_edge(c.index(1, 1), c.index(2, 1)));
    }

    #[test]
    fn product_neighbourhoods() {
        let g = product_instance(Family::PathClique, 6, 5).unwrap();
        let c = g.coords().unwrap();
        let v = c.index(2, 3);
        let expected: Vec<usize> = [1, 3]
            .iter()
            .flat_map(|&i| (1..=5).filter(|&j| j != 3).map(move |j| c.index(i, j)))
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(g.neighbors(v).to_vec(), expected);
        assert_eq!(g.degree(v), 8);
        assert_eq!(g.degree(c.index(1, 1)), 4);

        let g = product_instance(Family::CycleClique, 6, 5).unwrap();
        let v = c.index(1, 1);
        assert_eq!(g.degree(v), 8);
        let cols: Vec<usize> = g.neighbors(v).iter().map(|u| c.column_of(u)).collect();
        assert!(cols.iter().all(|&i| i == 2 || i == 6));
    }

    #[test]
    fn family_meta_is_attached() {
        let g = product_instance(Family::CycleClique, 4, 3).unwrap();
        assert_eq!(
            g.meta(),
            Some(ProductMeta {
                family: Family::CycleClique,
                n: 4,
                m: 3
            })
        );
        let h = direct_product(&make_clique(3).unwrap(), &make_clique(3).unwrap()).unwrap();
        assert_eq!(h.meta().unwrap().family, Family::Other);
        assert!(h.family_meta().is_none());
    }

    #[test]
    fn coords_round_trip_and_lines() {
        let c = ProductCoords::new(4, 3);
        for v in 0..12 {
            let (i, j) = c.coords(v);
            assert_eq!(c.index(i, j), v);
        }
        assert_eq!(c.column(2).to_vec(), vec![3, 4, 5]);
        assert_eq!(c.row(1).to_vec(), vec![0, 3, 6, 9]);
        assert_eq!(c.try_index(5, 1), None);
    }

    #[test]
    fn edge_list_reads_path() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(write_edge_list(&g), write_edge_list(&make_path(3).unwrap()));
    }

    #[test]
    fn edge_list_canonicalises() {
        let g = parse_edge_list("# comment\n4\n\n3 0\n2 1\n# x\n0 1\n").unwrap();
        assert_eq!(write_edge_list(&g), "4\n0 1\n0 3\n1 2\n");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("2\n0 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("self-loop"));
        assert_eq!(parse_edge_list("3\n0 1\n1 0\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("3\n0 5\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3\n0 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("x\n").unwrap_err().line, 1);
        assert!(parse_edge_list("# only a comment\n").is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }
}

//! Reference implementations used as test oracles. They work on plain
//! adjacency matrices and vectors of ids, sharing no code with the library's
//! checks or searches.

#![allow(dead_code)]

use domlab::{Family, Graph, ParamKind, VertexSet};

pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    /// `P_n × K_m` or `C_n × K_m` built cell by cell from the adjacency rule,
    /// with vertex `(i, j)` at id `(i - 1) * m + (j - 1)`.
    pub fn product(family: Family, n: usize, m: usize) -> Self {
        let size = n * m;
        let mut adj = vec![vec![false; size]; size];
        let factor_adjacent = |a: usize, b: usize| -> bool {
            let d = a.abs_diff(b);
            match family {
                Family::PathClique => d == 1,
                Family::CycleClique => d == 1 || (n >= 3 && d == n - 1),
                Family::Other => unreachable!(),
            }
        };
        for a in 0..size {
            for b in 0..size {
                let (ia, ja) = (a / m, a % m);
                let (ib, jb) = (b / m, b % m);
                adj[a][b] = factor_adjacent(ia, ib) && ja != jb;
            }
        }
        Self { n: size, adj }
    }

    fn count_in(&self, u: usize, s: &[bool]) -> usize {
        (0..self.n).filter(|&v| self.adj[u][v] && s[v]).count()
    }

    pub fn dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| s[u] || self.count_in(u, s) > 0)
    }

    pub fn independent(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| !s[u] || self.count_in(u, s) == 0)
    }

    pub fn one_two(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| s[u] || (1..=2).contains(&self.count_in(u, s)))
    }

    pub fn two_dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| s[u] || self.count_in(u, s) >= 2)
    }

    /// Tries every swap literally.
    pub fn secure(&self, s: &[bool]) -> bool {
        if !self.dominating(s) {
            return false;
        }
        (0..self.n).filter(|&w| !s[w]).all(|w| {
            (0..self.n).filter(|&v| s[v] && self.adj[v][w]).any(|v| {
                let mut t = s.to_vec();
                t[v] = false;
                t[w] = true;
                self.dominating(&t)
            })
        })
    }

    pub fn holds(&self, kind: ParamKind, s: &[bool]) -> bool {
        match kind {
            ParamKind::Dom => self.dominating(s),
            ParamKind::IndependentDom => self.dominating(s) && self.independent(s),
            ParamKind::Dom12 => self.one_two(s),
            ParamKind::TwoDom => self.two_dominating(s),
            ParamKind::SecureDom => self.secure(s),
        }
    }

    /// Visits every `size`-subset in lexicographic order until `f` returns true.
    fn any_subset(&self, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        fn rec(
            start: usize,
            n: usize,
            size: usize,
            cur: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            if cur.len() == size {
                return f(cur);
            }
            for v in start..n {
                if n - v < size - cur.len() {
                    break;
                }
                cur.push(v);
                if rec(v + 1, n, size, cur, f) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        rec(0, self.n, size, &mut Vec::new(), f)
    }

    fn mask(&self, ids: &[usize]) -> Vec<bool> {
        let mut s = vec![false; self.n];
        for &v in ids {
            s[v] = true;
        }
        s
    }

    /// All valid sets of exactly `size` vertices, lexicographic.
    pub fn all_of_size(&self, kind: ParamKind, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.any_subset(size, &mut |ids| {
            if self.holds(kind, &self.mask(ids)) {
                out.push(ids.to_vec());
            }
            false
        });
        out
    }

    /// Minimum size of a valid set, trying sizes in increasing order.
    pub fn minimum(&self, kind: ParamKind) -> usize {
        self.minimum_up_to(kind, self.n).expect("V is always valid")
    }

    pub fn minimum_up_to(&self, kind: ParamKind, cap: usize) -> Option<usize> {
        (0..=cap.min(self.n)).find(|&size| {
            self.any_subset(size, &mut |ids| self.holds(kind, &self.mask(ids)))
        })
    }

    pub fn holds_set(&self, kind: ParamKind, s: &VertexSet) -> bool {
        self.holds(kind, &self.mask(&s.to_vec()))
    }
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

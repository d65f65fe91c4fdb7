//! Exhaustive enumeration of valid sets of a fixed size.
//!
//! Vertices are decided in id order, inclusion first, so solutions appear in
//! lexicographic order. A vertex's requirement is checked as soon as every
//! vertex that can affect it has been decided. Each emitted set is confirmed
//! by the verifier, so this path shares no acceptance logic with the branch
//! and bound search.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::verify::{verify, ParamKind};

use super::search::Budget;

pub(crate) struct Enumerator<'a> {
    g: &'a Graph,
    kind: ParamKind,
    size: usize,
    closed: Vec<VertexSet>,
    /// Vertices whose local requirement becomes final after deciding a position.
    settle_at: Vec<Vec<usize>>,
    /// Vertices whose defence becomes final after deciding a position.
    defend_at: Vec<Vec<usize>>,
    s: VertexSet,
    cnt: Vec<u32>,
    first_only: bool,
    pending: u64,
    budget: &'a Budget,
    pub(crate) found: Vec<VertexSet>,
}

pub(crate) struct OutOfBudget;

fn last_of(set: &VertexSet) -> usize {
    set.iter().last().expect("closed neighbourhood is never empty")
}

impl<'a> Enumerator<'a> {
    pub(crate) fn new(
        g: &'a Graph,
        kind: ParamKind,
        size: usize,
        first_only: bool,
        budget: &'a Budget,
    ) -> Self {
        let n = g.vertex_count();
        let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
        let mut settle_at = vec![Vec::new(); n];
        let mut defend_at = vec![Vec::new(); n];
        for u in 0..n {
            settle_at[last_of(&closed[u])].push(u);
            if kind == ParamKind::SecureDom {
                let mut ball = closed[u].clone();
                for _ in 0..2 {
                    let mut grown = ball.clone();
                    for x in &ball {
                        grown.union_with(&closed[x]);
                    }
                    ball = grown;
                }
                defend_at[last_of(&ball)].push(u);
            }
        }
        Self {
            g,
            kind,
            size,
            closed,
            settle_at,
            defend_at,
            s: VertexSet::new(n),
            cnt: vec![0; n],
            first_only,
            pending: 0,
            budget,
            found: Vec::new(),
        }
    }

    pub(crate) fn run(&mut self) -> Result<(), OutOfBudget> {
        let result = self.dfs(0);
        self.budget.charge(self.pending);
        self.pending = 0;
        result.map(|_| ())
    }

    fn add(&mut self, v: usize) {
        self.s.insert(v);
        for u in self.g.neighbors(v) {
            self.cnt[u] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.s.remove(v);
        for u in self.g.neighbors(v) {
            self.cnt[u] -= 1;
        }
    }

    fn local_ok(&self, u: usize) -> bool {
        if self.s.contains(u) {
            return true;
        }
        let c = self.cnt[u];
        match self.kind {
            ParamKind::Dom | ParamKind::IndependentDom | ParamKind::SecureDom => c > 0,
            ParamKind::Dom12 => (1..=2).contains(&c),
            ParamKind::TwoDom => c >= 2,
        }
    }

    fn defended(&self, w: usize) -> bool {
        if self.s.contains(w) {
            return true;
        }
        let count = |x: usize| self.cnt[x] + u32::from(self.s.contains(x));
        self.g
            .neighbors(w)
            .iter()
            .filter(|&v| self.s.contains(v))
            .any(|v| {
                self.closed[v]
                    .iter()
                    .filter(|&x| count(x) == 1)
                    .all(|x| self.closed[w].contains(x))
            })
    }

    fn settled_ok(&self, pos: usize) -> bool {
        self.settle_at[pos].iter().all(|&u| self.local_ok(u))
            && self.defend_at[pos].iter().all(|&u| self.defended(u))
    }

    /// Whether the vertices from `pos` on can still satisfy every
    /// outstanding requirement with the remaining slots.
    fn reachable(&self, pos: usize) -> bool {
        let n = self.g.vertex_count();
        let remaining = self.size - self.s.len();
        let mut gains: Vec<usize>;
        let need: usize;
        if self.kind == ParamKind::TwoDom {
            let deficiency = |v: usize| {
                if self.s.contains(v) {
                    0
                } else {
                    2usize.saturating_sub(self.cnt[v] as usize)
                }
            };
            need = (0..n).map(deficiency).sum();
            let needy = VertexSet::from_ids(n, (0..n).filter(|&v| deficiency(v) > 0));
            gains = (pos..n)
                .map(|v| deficiency(v) + self.g.neighbors(v).intersection_len(&needy))
                .collect();
        } else {
            let mut covered = self.s.clone();
            for v in &self.s {
                covered.union_with(self.g.neighbors(v));
            }
            let open = covered.complement();
            need = open.len();
            gains = (pos..n)
                .map(|v| self.closed[v].intersection_len(&open))
                .collect();
        }
        if need == 0 {
            return true;
        }
        if gains.len() > remaining {
            gains.select_nth_unstable_by(remaining, |a, b| b.cmp(a));
        }
        gains.iter().take(remaining).sum::<usize>() >= need
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.pending += 1;
        if self.pending >= 1024 {
            let ok = self.budget.charge(self.pending);
            self.pending = 0;
            if !ok {
                return Err(OutOfBudget);
            }
        }
        Ok(())
    }

    /// Returns `Ok(true)` when enumeration should stop early.
    fn dfs(&mut self, pos: usize) -> Result<bool, OutOfBudget> {
        self.tick()?;
        let n = self.g.vertex_count();
        if self.s.len() == self.size {
            if verify(self.g, self.kind, &self.s)
                .expect("capacity matches")
                .ok
            {
                self.found.push(self.s.clone());
                return Ok(self.first_only);
            }
            return Ok(false);
        }
        if pos == n || self.s.len() + (n - pos) < self.size || !self.reachable(pos) {
            return Ok(false);
        }

        let mut can_include = true;
        if self.kind == ParamKind::IndependentDom && self.cnt[pos] > 0 {
            can_include = false;
        }
        if can_include {
            self.add(pos);
            let overloaded = self.kind == ParamKind::Dom12
                && self
                    .g
                    .neighbors(pos)
                    .iter()
                    .any(|u| u < pos && !self.s.contains(u) && self.cnt[u] >= 3);
            let stop = if !overloaded && self.settled_ok(pos) {
                self.dfs(pos + 1)
            } else {
                Ok(false)
            };
            self.remove(pos);
            if stop? {
                return Ok(true);
            }
        }

        if self.kind == ParamKind::Dom12 && self.cnt[pos] >= 3 {
            return Ok(false);
        }
        if self.settled_ok(pos) {
            return self.dfs(pos + 1);
        }
        Ok(false)
    }
}

//! Branch and bound for "is there a valid set of at most `k` vertices".
//!
//! The search keeps a partial set `S` and a set of forbidden vertices. At each
//! node it finds the smallest-id vertex whose requirement is unmet, and
//! branches over the vertices whose addition could meet it, in ascending
//! order; every sibling tried earlier is forbidden in later branches.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::verify::ParamKind;

const FLUSH_EVERY: u64 = 1024;

/// Node accounting shared by all workers of one solve.
pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Adds `nodes` and reports whether the limit still holds.
    pub(crate) fn charge(&self, nodes: u64) -> bool {
        let total = self.used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if total > self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }

    pub(crate) fn is_exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Budget,
    Cancelled,
}

enum Branch {
    Done,
    Dead,
    On(Vec<usize>),
}

struct Cancel<'a> {
    best: &'a AtomicUsize,
    index: usize,
}

struct Search<'a> {
    g: &'a Graph,
    kind: ParamKind,
    closed: &'a [VertexSet],
    k: usize,
    s: VertexSet,
    forbidden: VertexSet,
    /// Number of neighbours in `s`, per vertex.
    cnt: Vec<u32>,
    pending: u64,
    budget: &'a Budget,
    cancel: Option<Cancel<'a>>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        kind: ParamKind,
        closed: &'a [VertexSet],
        k: usize,
        budget: &'a Budget,
    ) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            kind,
            closed,
            k,
            s: VertexSet::new(n),
            forbidden: VertexSet::new(n),
            cnt: vec![0; n],
            pending: 0,
            budget,
            cancel: None,
        }
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

    fn tick(&mut self) -> Result<(), Stop> {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush()?;
            if let Some(c) = &self.cancel {
                if c.best.load(Ordering::Relaxed) < c.index {
                    return Err(Stop::Cancelled);
                }
            }
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<(), Stop> {
        let ok = self.budget.charge(self.pending);
        self.pending = 0;
        if ok {
            Ok(())
        } else {
            Err(Stop::Budget)
        }
    }

    fn undominated(&self) -> VertexSet {
        let mut covered = self.s.clone();
        for v in &self.s {
            covered.union_with(self.g.neighbors(v));
        }
        covered.complement()
    }

    fn available(&self, v: usize) -> bool {
        !self.s.contains(v)
            && !self.forbidden.contains(v)
            && (self.kind != ParamKind::IndependentDom || self.cnt[v] == 0)
    }

    /// Checks that the remaining budget of vertices can still dominate every
    /// vertex of `undominated`.
    fn can_cover(&self, undominated: &VertexSet) -> bool {
        let remaining = self.k.saturating_sub(self.s.len());
        if remaining == 0 {
            return false;
        }
        let n = self.g.vertex_count();
        let mut reachable = VertexSet::new(n);
        let mut gains = Vec::new();
        for v in (0..n).filter(|&v| self.available(v)) {
            let gain = self.closed[v].intersection_len(undominated);
            if gain > 0 {
                reachable.union_with(&self.closed[v]);
                gains.push(gain);
            }
        }
        if !undominated.is_subset(&reachable) {
            return false;
        }
        top_sum(&mut gains, remaining) >= undominated.len()
    }

    fn deficiency(&self, v: usize) -> usize {
        if self.s.contains(v) {
            0
        } else {
            2usize.saturating_sub(self.cnt[v] as usize)
        }
    }

    fn sorted_candidates(&self, cands: VertexSet) -> Vec<usize> {
        cands.iter().filter(|&v| self.available(v)).collect()
    }

    fn branch(&self) -> Branch {
        match self.kind {
            ParamKind::Dom | ParamKind::IndependentDom | ParamKind::SecureDom => {
                let undominated = self.undominated();
                if let Some(w) = undominated.first() {
                    if !self.can_cover(&undominated) {
                        return Branch::Dead;
                    }
                    return self.on(self.closed[w].clone());
                }
                if self.kind != ParamKind::SecureDom {
                    return Branch::Done;
                }
                match self.undefended() {
                    None => Branch::Done,
                    Some(cands) => self.on(cands),
                }
            }
            ParamKind::Dom12 => {
                let n = self.g.vertex_count();
                let over = |v: usize| !self.s.contains(v) && self.cnt[v] >= 3;
                if (0..n).any(|v| over(v) && self.forbidden.contains(v)) {
                    return Branch::Dead;
                }
                let undominated = self.undominated();
                if !undominated.is_empty() && !self.can_cover(&undominated) {
                    return Branch::Dead;
                }
                let first_over = (0..n).find(|&v| over(v));
                match (undominated.first(), first_over) {
                    (None, None) => Branch::Done,
                    (Some(w), o) if o.is_none_or(|o| w < o) => self.on(self.closed[w].clone()),
                    (_, Some(o)) => self.on(VertexSet::from_ids(n, [o])),
                    (Some(_), None) => unreachable!(),
                }
            }
            ParamKind::TwoDom => {
                let n = self.g.vertex_count();
                let total: usize = (0..n).map(|v| self.deficiency(v)).sum();
                let Some(w) = (0..n).find(|&v| self.deficiency(v) > 0) else {
                    return Branch::Done;
                };
                let remaining = self.k.saturating_sub(self.s.len());
                if remaining == 0 {
                    return Branch::Dead;
                }
                let needy = VertexSet::from_ids(n, (0..n).filter(|&v| self.deficiency(v) > 0));
                let mut gains: Vec<usize> = (0..n)
                    .filter(|&v| self.available(v))
                    .map(|v| self.deficiency(v) + self.g.neighbors(v).intersection_len(&needy))
                    .collect();
                if top_sum(&mut gains, remaining) < total {
                    return Branch::Dead;
                }
                self.on(self.closed[w].clone())
            }
        }
    }

    fn on(&self, cands: VertexSet) -> Branch {
        let list = self.sorted_candidates(cands);
        if list.is_empty() {
            Branch::Dead
        } else {
            Branch::On(list)
        }
    }

    /// For a dominating `s`, returns the repair candidates of the first
    /// outside vertex that no member of `s` can be swapped for.
    fn undefended(&self) -> Option<VertexSet> {
        let n = self.g.vertex_count();
        let once = VertexSet::from_ids(
            n,
            (0..n).filter(|&u| self.cnt[u] + u32::from(self.s.contains(u)) == 1),
        );
        let private = |v: usize| {
            let mut p = self.closed[v].clone();
            p.intersect_with(&once);
            p
        };
        for w in (0..n).filter(|&w| !self.s.contains(w)) {
            let closed_w = &self.closed[w];
            let mut blockers = Vec::new();
            let mut defended = false;
            for v in self.g.neighbors(w).iter().filter(|&v| self.s.contains(v)) {
                let mut outside = private(v);
                outside.difference_with(closed_w);
                match outside.first() {
                    None => {
                        defended = true;
                        break;
                    }
                    Some(u) => blockers.push(u),
                }
            }
            if defended {
                continue;
            }
            let mut cands = closed_w.clone();
            for u in blockers {
                cands.union_with(&self.closed[u]);
            }
            return Some(cands);
        }
        None
    }

    fn dfs(&mut self) -> Result<bool, Stop> {
        self.tick()?;
        let cands = match self.branch() {
            Branch::Done => return Ok(true),
            Branch::Dead => return Ok(false),
            Branch::On(c) => c,
        };
        if self.s.len() >= self.k {
            return Ok(false);
        }
        let mut banned = Vec::with_capacity(cands.len());
        let mut result = Ok(false);
        for v in cands {
            self.add(v);
            match self.dfs() {
                Ok(false) => {}
                other => {
                    result = other;
                    if result == Ok(true) {
                        // Leave the solution in place for the caller.
                        for b in banned {
                            self.forbidden.remove(b);
                        }
                        return result;
                    }
                    self.remove(v);
                    break;
                }
            }
            self.remove(v);
            self.forbidden.insert(v);
            banned.push(v);
        }
        for b in banned {
            self.forbidden.remove(b);
        }
        result
    }
}

/// Sum of the `r` largest values.
fn top_sum(values: &mut [usize], r: usize) -> usize {
    if values.len() > r {
        values.select_nth_unstable_by(r, |a, b| b.cmp(a));
    }
    values.iter().take(r).sum()
}

pub(crate) fn closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    (0..g.vertex_count()).map(|v| g.closed_neighbors(v)).collect()
}

/// Searches for a valid set of at most `k` vertices that contains `seed`.
///
/// With `width > 1` the root branches are distributed over worker threads;
/// the solution of the lowest-index branch is returned, so the answer does
/// not depend on scheduling.
pub(crate) fn find_set(
    g: &Graph,
    kind: ParamKind,
    closed: &[VertexSet],
    k: usize,
    seed: &VertexSet,
    width: usize,
    budget: &Budget,
) -> Result<Option<VertexSet>, Stop> {
    let mut root = Search::new(g, kind, closed, k, budget);
    for v in seed {
        if kind == ParamKind::IndependentDom && root.cnt[v] > 0 {
            return Ok(None);
        }
        root.add(v);
    }
    if root.s.len() > k {
        return Ok(None);
    }
    if width <= 1 {
        let found = root.dfs();
        let flushed = root.flush();
        return match found {
            Ok(true) => Ok(Some(root.s)),
            Ok(false) => flushed.map(|_| None),
            Err(e) => Err(e),
        };
    }

    root.tick()?;
    let cands = match root.branch() {
        Branch::Done => {
            root.flush()?;
            return Ok(Some(root.s));
        }
        Branch::Dead => {
            root.flush()?;
            return Ok(None);
        }
        Branch::On(c) => c,
    };
    root.flush()?;
    if root.s.len() >= k {
        return Ok(None);
    }

    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let found: Mutex<Vec<(usize, VertexSet)>> = Mutex::new(Vec::new());
    let base_s = root.s.clone();
    std::thread::scope(|scope| {
        for _ in 0..width.min(cands.len()) {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= cands.len() || index > best.load(Ordering::Relaxed) {
                    break;
                }
                let mut search = Search::new(g, kind, closed, k, budget);
                for v in &base_s {
                    search.add(v);
                }
                for &earlier in &cands[..index] {
                    search.forbidden.insert(earlier);
                }
                search.add(cands[index]);
                search.cancel = Some(Cancel {
                    best: &best,
                    index,
                });
                let outcome = search.dfs();
                let _ = search.flush();
                match outcome {
                    Ok(true) => {
                        best.fetch_min(index, Ordering::Relaxed);
                        found.lock().unwrap().push((index, search.s));
                    }
                    Ok(false) | Err(Stop::Cancelled) => {}
                    Err(Stop::Budget) => break,
                }
            });
        }
    });
    // Branches below the lowest successful index are never cancelled, so
    // without budget exhaustion they all ran to completion.
    if budget.is_exhausted() {
        return Err(Stop::Budget);
    }
    let found = found.into_inner().unwrap();
    Ok(found
        .into_iter()
        .min_by_key(|(i, _)| *i)
        .map(|(_, set)| set))
}

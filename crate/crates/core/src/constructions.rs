//! Explicit certificate sets for the product families.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::formulas;
use crate::graph::{product_instance, Family, Graph, ProductCoords};
use crate::verify::{verify, ParamKind, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    /// Row pairs in blocks of three columns on `C_n × K_m`.
    DomCycle,
    /// Row pairs in blocks of three columns on `P_n × K_m`.
    DomPath,
    /// The first row of `C_n × K_m`.
    SdomCycleRow,
    /// The first row plus `(2, 2)` and `(n - 1, 2)` on `P_n × K_m`.
    SdomPathRowPlus,
    /// Full middle columns of each block of three on `P_n × K_3`.
    SdomPathM3Columns,
    /// Two-column instances: `X_1` for `m = 3`, `R_1 ∪ R_2` for `m >= 4`.
    SdomC2,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{kind} needs {bound}, got {what} = {value}")]
    Guard {
        kind: ConstructionKind,
        bound: &'static str,
        what: &'static str,
        value: usize,
    },
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 6] = [
        ConstructionKind::DomCycle,
        ConstructionKind::DomPath,
        ConstructionKind::SdomCycleRow,
        ConstructionKind::SdomPathRowPlus,
        ConstructionKind::SdomPathM3Columns,
        ConstructionKind::SdomC2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::DomCycle => "dom-cycle",
            ConstructionKind::DomPath => "dom-path",
            ConstructionKind::SdomCycleRow => "sdom-cycle-row",
            ConstructionKind::SdomPathRowPlus => "sdom-path-rowplus",
            ConstructionKind::SdomPathM3Columns => "sdom-path-m3-columns",
            ConstructionKind::SdomC2 => "sdom-c2",
        }
    }

    pub fn family(self) -> Family {
        match self {
            ConstructionKind::DomCycle | ConstructionKind::SdomCycleRow | ConstructionKind::SdomC2 => {
                Family::CycleClique
            }
            _ => Family::PathClique,
        }
    }

    pub fn param(self) -> ParamKind {
        match self {
            ConstructionKind::DomCycle | ConstructionKind::DomPath => ParamKind::Dom,
            _ => ParamKind::SecureDom,
        }
    }

    /// Checks the `(n, m)` range the construction is defined on.
    pub fn check_guard(self, n: usize, m: usize) -> Result<(), ConstructionError> {
        let fail = |bound, what, value| {
            Err(ConstructionError::Guard {
                kind: self,
                bound,
                what,
                value,
            })
        };
        let (n_ok, n_bound) = match self {
            ConstructionKind::DomCycle => (n >= 6, "n >= 6"),
            ConstructionKind::SdomC2 => (n == 2, "n = 2"),
            _ => (n >= 3, "n >= 3"),
        };
        let (m_ok, m_bound) = match self {
            ConstructionKind::SdomPathRowPlus => (m >= 4, "m >= 4"),
            ConstructionKind::SdomPathM3Columns => (m == 3, "m = 3"),
            _ => (m >= 3, "m >= 3"),
        };
        if !n_ok {
            return fail(n_bound, "n", n);
        }
        if !m_ok {
            return fail(m_bound, "m", m);
        }
        Ok(())
    }

    /// The construction that certifies `kind` on `(family, n, m)`, if any.
    /// Independent and `[1,2]`-domination reuse the domination sets, and
    /// 2-domination reuses the secure sets.
    pub fn for_instance(family: Family, kind: ParamKind, n: usize, m: usize) -> Option<Self> {
        let candidate = match (kind, family) {
            (ParamKind::Dom | ParamKind::IndependentDom | ParamKind::Dom12, Family::CycleClique) => {
                ConstructionKind::DomCycle
            }
            (ParamKind::Dom | ParamKind::IndependentDom | ParamKind::Dom12, Family::PathClique) => {
                ConstructionKind::DomPath
            }
            (ParamKind::SecureDom | ParamKind::TwoDom, Family::CycleClique | Family::PathClique) => {
                if n == 2 {
                    ConstructionKind::SdomC2
                } else if family == Family::CycleClique {
                    ConstructionKind::SdomCycleRow
                } else if m == 3 {
                    ConstructionKind::SdomPathM3Columns
                } else {
                    ConstructionKind::SdomPathRowPlus
                }
            }
            _ => return None,
        };
        candidate.check_guard(n, m).ok().map(|_| candidate)
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown construction `{s}`"))
    }
}

/// Row for block `i >= 1` of the alternating pattern.
fn alternating_row(i: usize) -> usize {
    if i % 2 == 1 {
        1
    } else {
        2
    }
}

fn dom_cycle(c: &ProductCoords) -> Vec<(usize, usize)> {
    let n = c.n();
    let (k, r) = (n / 3, n % 3);
    let mut cells = Vec::new();
    for i in 1..k {
        let row = alternating_row(i);
        cells.extend([(3 * i - 2, row), (3 * i - 1, row)]);
    }
    cells.extend([(3 * k - 2, 3), (3 * k - 1, 3)]);
    for extra in 1..=r {
        cells.push((3 * k + extra, 1));
    }
    cells
}

/// Head `(1,3), (2,3)`, interior blocks on alternating rows 1 and 2, and a
/// tail on row 3 covering the last two or three columns. With no interior
/// block (`n = 5, 6`) a row-3 tail would leave `(3, 3)` undominated, so the
/// tail moves to row 1 there.
fn dom_path(c: &ProductCoords) -> Vec<(usize, usize)> {
    let n = c.n();
    let (k, r) = (n / 3, n % 3);
    let mut cells = vec![(1, 3), (2, 3)];
    let (interior, tail): (usize, Vec<usize>) = match r {
        0 => (k.saturating_sub(2), vec![3 * k - 2, 3 * k - 1, 3 * k]),
        1 => (k - 1, vec![3 * k, 3 * k + 1]),
        _ => (k - 1, vec![3 * k + 1, 3 * k + 2]),
    };
    for i in 1..=interior {
        let row = alternating_row(i);
        cells.extend([(3 * i + 1, row), (3 * i + 2, row)]);
    }
    let tail_row = if interior == 0 && n >= 5 { 1 } else { 3 };
    cells.extend(tail.into_iter().map(|col| (col, tail_row)));
    cells
}

/// Builds the construction's vertex set on its product instance.
pub fn build(kind: ConstructionKind, n: usize, m: usize) -> Result<VertexSet, ConstructionError> {
    kind.check_guard(n, m)?;
    let c = ProductCoords::new(n, m);
    let set = match kind {
        ConstructionKind::DomCycle => c.set_of(dom_cycle(&c)),
        ConstructionKind::DomPath => c.set_of(dom_path(&c)),
        ConstructionKind::SdomCycleRow => c.row(1),
        ConstructionKind::SdomPathRowPlus => {
            let mut s = c.row(1);
            s.insert(c.index(2, 2));
            s.insert(c.index(n - 1, 2));
            s
        }
        ConstructionKind::SdomPathM3Columns => {
            let mut s = VertexSet::new(c.vertex_count());
            for col in (2..=n).step_by(3) {
                s.union_with(&c.column(col));
            }
            if !n.is_multiple_of(3) {
                s.union_with(&c.column(n));
            }
            s
        }
        ConstructionKind::SdomC2 => {
            if m == 3 {
                c.column(1)
            } else {
                let mut s = c.row(1);
                s.union_with(&c.row(2));
                s
            }
        }
    };
    Ok(set)
}

/// A construction with the verdict of every check run on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub kind: ConstructionKind,
    pub n: usize,
    pub m: usize,
    pub graph: Graph,
    pub set: VertexSet,
    /// Closed-form value of the construction's parameter, when one exists.
    pub expected_size: Option<usize>,
    /// The construction's own parameter first, then the accompanying claims.
    pub checks: Vec<(ParamKind, Verdict)>,
}

impl ConstructionReport {
    pub fn verdict(&self, kind: ParamKind) -> Option<&Verdict> {
        self.checks.iter().find(|(k, _)| *k == kind).map(|(_, v)| v)
    }

    /// Whether the set has the construction's own property.
    pub fn is_valid(&self) -> bool {
        self.checks[0].1.ok
    }

    pub fn size_matches(&self) -> bool {
        self.expected_size == Some(self.set.len())
    }
}

/// Builds a construction and runs its verifier plus the claims that come
/// with it: independence and the `[1,2]` property for the domination sets,
/// 2-domination for the secure sets. Failed checks are reported as such.
pub fn build_and_verify(
    kind: ConstructionKind,
    n: usize,
    m: usize,
) -> Result<ConstructionReport, ConstructionError> {
    let set = build(kind, n, m)?;
    let graph = product_instance(kind.family(), n, m).expect("guard ensures a valid instance");
    let kinds: &[ParamKind] = match kind.param() {
        ParamKind::Dom => &[ParamKind::Dom, ParamKind::IndependentDom, ParamKind::Dom12],
        _ => &[ParamKind::SecureDom, ParamKind::TwoDom],
    };
    let checks = kinds
        .iter()
        .map(|&k| (k, verify(&graph, k, &set).expect("set built for this graph")))
        .collect();
    let expected_size = formulas::evaluate(kind.family(), kind.param(), n, m)
        .ok()
        .map(|r| r.value);
    Ok(ConstructionReport {
        kind,
        n,
        m,
        graph,
        set,
        expected_size,
        checks,
    })
}

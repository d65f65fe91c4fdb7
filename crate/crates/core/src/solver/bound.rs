//! Column-sum lower bounds for product instances.
//!
//! Any valid set has a column profile `d_1..d_n` satisfying
//!
//! * `d_{i-1} + d_i + d_{i+1} >= t` for every column, with `t = 2` for the
//!   domination-like parameters and `t = 3` for secure and 2-domination;
//! * `d_i = m` whenever both neighbouring columns are empty;
//! * on paths with `m >= 4` and `n >= 3`, the two end triples of a secure or
//!   2-dominating set carry at least 4 vertices.
//!
//! The bound is the least total over all profiles meeting these constraints,
//! found by dynamic programming over consecutive column pairs.

use crate::graph::Graph;
use crate::verify::ParamKind;

const INF: usize = usize::MAX / 4;

struct Rules {
    m: usize,
    t: usize,
    corners: bool,
}

impl Rules {
    fn column_ok(&self, left: usize, mid: usize, right: usize) -> bool {
        left + mid + right >= self.t && (left + right > 0 || mid == self.m)
    }
}

/// Least size of a column profile meeting the triple, isolation and corner
/// constraints. Returns 0 when the graph is not a product instance or
/// `m < 3`.
pub fn lower_bound_columns(g: &Graph, kind: ParamKind) -> usize {
    let Some(meta) = g.family_meta() else {
        return 0;
    };
    let (n, m) = (meta.n, meta.m);
    if m < 3 || n == 0 {
        return 0;
    }
    let secure_like = matches!(kind, ParamKind::SecureDom | ParamKind::TwoDom);
    let cyclic = meta.family.is_cyclic() && n >= 3;
    let rules = Rules {
        m,
        t: if secure_like { 3 } else { 2 },
        corners: secure_like && !cyclic && m >= 4 && n >= 3,
    };
    // Counts above 4 never help a threshold constraint, so only the full
    // column needs to be kept beyond them.
    let mut values: Vec<usize> = [0, 1, 2, 3, 4, m].into_iter().filter(|&v| v <= m).collect();
    values.dedup();
    if cyclic {
        cycle_bound(n, &values, &rules)
    } else {
        path_bound(n, &values, &rules)
    }
}

/// `best[a][b]` holds the least sum of `d_1..d_i` with `d_{i-1} = values[a]`
/// and `d_i = values[b]`, every column before `i` already checked.
fn path_bound(n: usize, values: &[usize], rules: &Rules) -> usize {
    let k = values.len();
    let zero = 0;
    // Padding column d_0 = 0 sits at index `zero` of `values`.
    let mut best = vec![vec![INF; k]; k];
    for (b, &vb) in values.iter().enumerate() {
        best[zero][b] = vb;
    }
    for i in 1..n {
        // Choose d_{i+1} and check column i.
        let mut next = vec![vec![INF; k]; k];
        for a in 0..k {
            for b in 0..k {
                let cur = best[a][b];
                if cur >= INF {
                    continue;
                }
                for (c, &vc) in values.iter().enumerate() {
                    let (va, vb) = (values[a], values[b]);
                    if !rules.column_ok(va, vb, vc) {
                        continue;
                    }
                    if rules.corners && i == 2 && va + vb + vc < 4 {
                        continue;
                    }
                    if rules.corners && i + 1 == n && va + vb + vc < 4 {
                        continue;
                    }
                    let total = cur + vc;
                    if total < next[b][c] {
                        next[b][c] = total;
                    }
                }
            }
        }
        best = next;
    }
    let mut answer = INF;
    for a in 0..k {
        for b in 0..k {
            if best[a][b] < INF && rules.column_ok(values[a], values[b], 0) {
                answer = answer.min(best[a][b]);
            }
        }
    }
    answer
}

fn cycle_bound(n: usize, values: &[usize], rules: &Rules) -> usize {
    let k = values.len();
    let mut answer = INF;
    for first in 0..k {
        for second in 0..k {
            let mut best = vec![vec![INF; k]; k];
            best[first][second] = values[first] + values[second];
            for _ in 3..=n {
                let mut next = vec![vec![INF; k]; k];
                for a in 0..k {
                    for b in 0..k {
                        let cur = best[a][b];
                        if cur >= INF {
                            continue;
                        }
                        for (c, &vc) in values.iter().enumerate() {
                            if rules.column_ok(values[a], values[b], vc) && cur + vc < next[b][c] {
                                next[b][c] = cur + vc;
                            }
                        }
                    }
                }
                best = next;
            }
            let (v1, v2) = (values[first], values[second]);
            for a in 0..k {
                for b in 0..k {
                    let (vprev, vlast) = (values[a], values[b]);
                    if best[a][b] < INF
                        && rules.column_ok(vprev, vlast, v1)
                        && rules.column_ok(vlast, v1, v2)
                    {
                        answer = answer.min(best[a][b]);
                    }
                }
            }
        }
    }
    answer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, product_instance, Family};

    fn bound(family: Family, n: usize, m: usize, kind: ParamKind) -> usize {
        lower_bound_columns(&product_instance(family, n, m).unwrap(), kind)
    }

    #[test]
    fn known_bounds() {
        assert_eq!(bound(Family::CycleClique, 6, 3, ParamKind::Dom), 4);
        assert_eq!(bound(Family::PathClique, 6, 3, ParamKind::Dom), 5);
        assert_eq!(bound(Family::CycleClique, 7, 3, ParamKind::SecureDom), 7);
    }

    #[test]
    fn no_bound_without_meta_or_small_m() {
        assert_eq!(lower_bound_columns(&make_path(5).unwrap(), ParamKind::Dom), 0);
        assert_eq!(bound(Family::CycleClique, 5, 2, ParamKind::Dom), 0);
    }

    #[test]
    fn single_column_is_full() {
        assert_eq!(bound(Family::PathClique, 1, 4, ParamKind::Dom), 4);
    }
}

//! Closed-form values of the parameters on `P_n × K_m` and `C_n × K_m`.
//!
//! Each value carries the branch that produced it and the inputs that
//! licensed that branch.

use std::fmt;

use thiserror::Error;

use crate::graph::Family;
use crate::verify::ParamKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("n = {n} is below the smallest covered value {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("m = {m} is below the smallest covered value {min}")]
    MTooSmall { m: usize, min: usize },
    #[error("no closed form for {kind} on {family} with n = {n}, m = {m}")]
    UncoveredCase {
        family: Family,
        kind: ParamKind,
        n: usize,
        m: usize,
    },
}

impl FormulaError {
    pub fn reason(&self) -> &'static str {
        match self {
            FormulaError::NTooSmall { .. } => "N_TOO_SMALL",
            FormulaError::MTooSmall { .. } => "M_TOO_SMALL",
            FormulaError::UncoveredCase { .. } => "UNCOVERED_CASE",
        }
    }
}

/// The formula branch a value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Two columns: `P_2 × K_m = C_2 × K_m`, domination 2.
    DomTwoColumns,
    /// `C_3 × K_m`, domination 3.
    DomTriangle,
    /// `C_4 × K_m` and `C_5 × K_m`, domination 4.
    DomShortCycle,
    /// `C_n × K_m`, `n >= 6`, by `n mod 3`.
    DomCycle,
    /// `P_n × K_m`, `n >= 3`, by `n mod 3`.
    DomPath,
    /// `P_n × K_2`, two copies of `P_n`.
    DomPathK2,
    /// `C_n × K_2`, one long cycle for odd `n`, two copies otherwise.
    DomCycleK2,
    /// Secure domination of `C_n × K_m`, `n >= 3`: one vertex per column.
    SecureCycle,
    /// Secure domination with two columns.
    SecureTwoColumns,
    /// Secure domination of `P_n × K_m`, `m >= 4`.
    SecurePathWide,
    /// Secure domination of `P_n × K_3`, by `n mod 3`.
    SecurePathThreeRows,
    SecurePathK2,
    SecureCycleK2,
    /// Secure domination of the path `P_n` itself.
    SecureBasePath,
    /// Secure domination of `C_2` and `C_3`.
    SecureBaseShortCycle,
    /// Secure domination of the cycle `C_n`, `n >= 4`.
    SecureBaseCycle,
    /// Independent domination equals domination, `n >= 6`.
    IndependentEqualsDom,
    /// `[1,2]`-domination equals domination, `n >= 6`.
    OneTwoEqualsDom,
    /// 2-domination equals secure domination.
    TwoDomEqualsSecure,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::DomTwoColumns => "dom-two-columns",
            Source::DomTriangle => "dom-triangle",
            Source::DomShortCycle => "dom-short-cycle",
            Source::DomCycle => "dom-cycle",
            Source::DomPath => "dom-path",
            Source::DomPathK2 => "dom-path-k2",
            Source::DomCycleK2 => "dom-cycle-k2",
            Source::SecureCycle => "sdom-cycle",
            Source::SecureTwoColumns => "sdom-two-columns",
            Source::SecurePathWide => "sdom-path-wide",
            Source::SecurePathThreeRows => "sdom-path-three-rows",
            Source::SecurePathK2 => "sdom-path-k2",
            Source::SecureCycleK2 => "sdom-cycle-k2",
            Source::SecureBasePath => "sdom-base-path",
            Source::SecureBaseShortCycle => "sdom-base-short-cycle",
            Source::SecureBaseCycle => "sdom-base-cycle",
            Source::IndependentEqualsDom => "idom-equals-dom",
            Source::OneTwoEqualsDom => "dom12-equals-dom",
            Source::TwoDomEqualsSecure => "2dom-equals-sdom",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The inputs a formula branch was evaluated on. `m` is `None` for values of
/// a single path or cycle rather than a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub family: Family,
    pub kind: ParamKind,
    pub n: usize,
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: usize,
    pub source: Source,
    pub guard: Guard,
}

fn result(
    value: usize,
    source: Source,
    family: Family,
    kind: ParamKind,
    n: usize,
    m: Option<usize>,
) -> FormulaResult {
    FormulaResult {
        value,
        source,
        guard: Guard { family, kind, n, m },
    }
}

fn need_n(n: usize, min: usize) -> Result<(), FormulaError> {
    if n < min {
        Err(FormulaError::NTooSmall { n, min })
    } else {
        Ok(())
    }
}

fn need_m(m: usize, min: usize) -> Result<(), FormulaError> {
    if m < min {
        Err(FormulaError::MTooSmall { m, min })
    } else {
        Ok(())
    }
}

/// `γ(C_n × K_m)` for `m >= 3`, `n >= 2`.
pub fn gamma_cycle(n: usize, m: usize) -> Result<FormulaResult, FormulaError> {
    need_m(m, 3)?;
    need_n(n, 2)?;
    let (k, r) = (n / 3, n % 3);
    let (value, source) = match n {
        2 => (2, Source::DomTwoColumns),
        3 => (3, Source::DomTriangle),
        4 | 5 => (4, Source::DomShortCycle),
        _ => (2 * k + r, Source::DomCycle),
    };
    Ok(result(value, source, Family::CycleClique, ParamKind::Dom, n, Some(m)))
}

/// `γ(P_n × K_m)` for `m >= 3`, `n >= 2`.
pub fn gamma_path(n: usize, m: usize) -> Result<FormulaResult, FormulaError> {
    need_m(m, 3)?;
    need_n(n, 2)?;
    let (k, r) = (n / 3, n % 3);
    let (value, source) = match (n, r) {
        (2, _) => (2, Source::DomTwoColumns),
        (_, 0) => (2 * k + 1, Source::DomPath),
        _ => (2 * k + 2, Source::DomPath),
    };
    Ok(result(value, source, Family::PathClique, ParamKind::Dom, n, Some(m)))
}

/// `γ(P_n × K_2)` and `γ(C_n × K_2)`.
pub fn gamma_k2(family: Family, n: usize) -> Result<FormulaResult, FormulaError> {
    need_n(n, 2)?;
    let (value, source) = match family {
        Family::PathClique => (2 * n.div_ceil(3), Source::DomPathK2),
        Family::CycleClique if n % 2 == 1 => ((2 * n).div_ceil(3), Source::DomCycleK2),
        Family::CycleClique => (2 * n.div_ceil(3), Source::DomCycleK2),
        Family::Other => {
            return Err(uncovered(family, ParamKind::Dom, n, 2));
        }
    };
    Ok(result(value, source, family, ParamKind::Dom, n, Some(2)))
}

/// `γ_s(C_n × K_m)` for `m >= 3`, `n >= 2`.
pub fn gamma_s_cycle(n: usize, m: usize) -> Result<FormulaResult, FormulaError> {
    need_m(m, 3)?;
    need_n(n, 2)?;
    let (value, source) = match (n, m) {
        (2, 3) => (3, Source::SecureTwoColumns),
        (2, _) => (4, Source::SecureTwoColumns),
        _ => (n, Source::SecureCycle),
    };
    Ok(result(value, source, Family::CycleClique, ParamKind::SecureDom, n, Some(m)))
}

/// `γ_s(P_n × K_m)` for `m >= 3`, `n >= 3`.
pub fn gamma_s_path(n: usize, m: usize) -> Result<FormulaResult, FormulaError> {
    need_n(n, 3)?;
    need_m(m, 3)?;
    let (k, r) = (n / 3, n % 3);
    let (value, source) = match (m, r) {
        (3, 0) => (3 * k, Source::SecurePathThreeRows),
        (3, _) => (3 * k + 3, Source::SecurePathThreeRows),
        _ => (n + 2, Source::SecurePathWide),
    };
    Ok(result(value, source, Family::PathClique, ParamKind::SecureDom, n, Some(m)))
}

/// `γ_s(P_n × K_2)` and `γ_s(C_n × K_2)`.
pub fn gamma_s_k2(family: Family, n: usize) -> Result<FormulaResult, FormulaError> {
    need_n(n, 2)?;
    let (value, source) = match family {
        Family::PathClique => (2 * (3 * n).div_ceil(7), Source::SecurePathK2),
        Family::CycleClique if n % 2 == 1 => ((6 * n).div_ceil(7), Source::SecureCycleK2),
        Family::CycleClique => (2 * (3 * n).div_ceil(7), Source::SecureCycleK2),
        Family::Other => return Err(uncovered(family, ParamKind::SecureDom, n, 2)),
    };
    Ok(result(value, source, family, ParamKind::SecureDom, n, Some(2)))
}

/// `γ_s(P_n)` for `n >= 1` and `γ_s(C_n)` for `n >= 2`.
pub fn gamma_s_path_cycle_base(family: Family, n: usize) -> Result<FormulaResult, FormulaError> {
    let (value, source) = match family {
        Family::PathClique => {
            need_n(n, 1)?;
            ((3 * n).div_ceil(7), Source::SecureBasePath)
        }
        Family::CycleClique => {
            need_n(n, 2)?;
            if n <= 3 {
                (1, Source::SecureBaseShortCycle)
            } else {
                ((3 * n).div_ceil(7), Source::SecureBaseCycle)
            }
        }
        Family::Other => return Err(uncovered(family, ParamKind::SecureDom, n, 0)),
    };
    Ok(result(value, source, family, ParamKind::SecureDom, n, None))
}

/// A group of parameters claimed to coincide on an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityClaim {
    pub kinds: Vec<ParamKind>,
}

/// The equalities claimed for `(family, n, m)`: domination, independent
/// domination and `[1,2]`-domination for `m >= 2, n >= 6`; secure and
/// 2-domination for `m >= 3, n >= 2`.
pub fn equal_params_claim(family: Family, n: usize, m: usize) -> Vec<EqualityClaim> {
    let mut claims = Vec::new();
    if family == Family::Other {
        return claims;
    }
    if m >= 2 && n >= 6 {
        claims.push(EqualityClaim {
            kinds: vec![ParamKind::Dom, ParamKind::IndependentDom, ParamKind::Dom12],
        });
    }
    if m >= 3 && n >= 2 {
        claims.push(EqualityClaim {
            kinds: vec![ParamKind::SecureDom, ParamKind::TwoDom],
        });
    }
    claims
}

/// `γ_2` through its claimed equality with `γ_s`.
pub fn gamma_2(family: Family, n: usize, m: usize) -> Result<FormulaResult, FormulaError> {
    need_m(m, 3)?;
    let secure = match family {
        Family::CycleClique => gamma_s_cycle(n, m)?,
        Family::PathClique => gamma_s_path(n, m)?,
        Family::Other => return Err(uncovered(family, ParamKind::TwoDom, n, m)),
    };
    Ok(result(
        secure.value,
        Source::TwoDomEqualsSecure,
        family,
        ParamKind::TwoDom,
        n,
        Some(m),
    ))
}

fn uncovered(family: Family, kind: ParamKind, n: usize, m: usize) -> FormulaError {
    FormulaError::UncoveredCase { family, kind, n, m }
}

/// The closed-form value of `kind` on `family` with parameters `n`, `m`.
pub fn evaluate(
    family: Family,
    kind: ParamKind,
    n: usize,
    m: usize,
) -> Result<FormulaResult, FormulaError> {
    if family == Family::Other {
        return Err(uncovered(family, kind, n, m));
    }
    need_m(m, 2)?;
    match kind {
        ParamKind::Dom => match (family, m) {
            (_, 2) => gamma_k2(family, n),
            (Family::CycleClique, _) => gamma_cycle(n, m),
            _ => gamma_path(n, m),
        },
        ParamKind::SecureDom => match (family, m) {
            (_, 2) => gamma_s_k2(family, n),
            (Family::CycleClique, _) => gamma_s_cycle(n, m),
            (_, _) if n == 2 => {
                let two = gamma_s_cycle(n, m)?;
                Ok(result(two.value, two.source, family, kind, n, Some(m)))
            }
            _ => gamma_s_path(n, m),
        },
        ParamKind::IndependentDom | ParamKind::Dom12 => {
            if n < 6 {
                return Err(uncovered(family, kind, n, m));
            }
            let dom = evaluate(family, ParamKind::Dom, n, m)?;
            let source = if kind == ParamKind::IndependentDom {
                Source::IndependentEqualsDom
            } else {
                Source::OneTwoEqualsDom
            };
            Ok(result(dom.value, source, family, kind, n, Some(m)))
        }
        ParamKind::TwoDom => {
            if m < 3 {
                return Err(uncovered(family, kind, n, m));
            }
            gamma_2(family, n, m)
        }
    }
}

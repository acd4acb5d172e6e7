//! Banzhaf-family power indices computed from Boolean quotients.
//!
//! Every count is a weight of a switching function. Quotient weights are taken over
//! the `n − 1` variables other than the voter; whole-function weights over all `n`.
//! All probabilities are exact rationals.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::boolean::{Literal, Polarity, SwitchingFunction};
use crate::error::{Error, Result};
use crate::voting::{
    apply_restrictions, decision_function, filter_mwcs, minimal_winning_coalitions,
    RestrictedSystem, VotingSystem,
};

pub type Rational = Ratio<u64>;

/// Which identity produced a total Banzhaf power.
///
/// Only [`TbpFormula::Swing`] and [`TbpFormula::ComplementUnion`] are valid for every
/// function. The rest assume the function is positively monoform in the voter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TbpFormula {
    /// `wt((f/X_m) ∧ (f̄/X̄_m))`
    Swing,
    /// `2^(n−1) − wt((f̄/X_m) ∨ (f/X̄_m))`
    ComplementUnion,
    /// `wt(∂f/∂X_m)`
    Derivative,
    /// `2·wt(f/X_m) − wt(f)`
    DoubleOneQuotient,
    /// `wt(f) − 2·wt(f/X̄_m)`
    WeightLessDoubleZeroQuotient,
    /// `wt(f/X_m) − wt(f/X̄_m)`
    QuotientDifference,
    /// `wt(f̄) − 2·wt(f̄/X_m)`
    ComplementWeightLessDoubleOneQuotient,
    /// `2·wt(f̄/X̄_m) − wt(f̄)`
    DoubleComplementZeroQuotient,
    /// `wt(f̄/X̄_m) − wt(f̄/X_m)`
    ComplementQuotientDifference,
    /// Picks `Swing` for a biform variable, `QuotientDifference` otherwise.
    Auto,
    /// Direct swing enumeration (brute-force oracle).
    Enumeration,
}

impl TbpFormula {
    /// Every concrete algebraic formula, general ones first.
    pub const ALL: [TbpFormula; 9] = [
        TbpFormula::Swing,
        TbpFormula::ComplementUnion,
        TbpFormula::Derivative,
        TbpFormula::DoubleOneQuotient,
        TbpFormula::WeightLessDoubleZeroQuotient,
        TbpFormula::QuotientDifference,
        TbpFormula::ComplementWeightLessDoubleOneQuotient,
        TbpFormula::DoubleComplementZeroQuotient,
        TbpFormula::ComplementQuotientDifference,
    ];

    pub fn requires_monotone(self) -> bool {
        !matches!(
            self,
            TbpFormula::Swing | TbpFormula::ComplementUnion | TbpFormula::Auto | TbpFormula::Enumeration
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            TbpFormula::Swing => "swing",
            TbpFormula::ComplementUnion => "complement-union",
            TbpFormula::Derivative => "derivative",
            TbpFormula::DoubleOneQuotient => "double-one-quotient",
            TbpFormula::WeightLessDoubleZeroQuotient => "weight-less-double-zero-quotient",
            TbpFormula::QuotientDifference => "quotient-difference",
            TbpFormula::ComplementWeightLessDoubleOneQuotient => {
                "complement-weight-less-double-one-quotient"
            }
            TbpFormula::DoubleComplementZeroQuotient => "double-complement-zero-quotient",
            TbpFormula::ComplementQuotientDifference => "complement-quotient-difference",
            TbpFormula::Auto => "auto",
            TbpFormula::Enumeration => "enumeration",
        }
    }
}

impl fmt::Display for TbpFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TbpFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TbpFormula::ALL
            .into_iter()
            .chain([TbpFormula::Auto, TbpFormula::Enumeration])
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSystem(format!("unknown formula `{s}`")))
    }
}

/// The quotient weights every formula draws from, for one voter.
struct QuotientWeights {
    n: usize,
    /// wt(f), wt(f̄) over n variables.
    f: u64,
    fbar: u64,
    /// wt(f/X_m), wt(f/X̄_m), wt(f̄/X_m), wt(f̄/X̄_m) over n − 1 variables.
    f_one: u64,
    f_zero: u64,
    fbar_one: u64,
    fbar_zero: u64,
}

fn quotients(f: &SwitchingFunction, m: usize) -> Result<(SwitchingFunction, SwitchingFunction)> {
    Ok((
        f.quotient_literal(Literal::pos(m))?,
        f.quotient_literal(Literal::neg(m))?,
    ))
}

impl QuotientWeights {
    fn new(f: &SwitchingFunction, m: usize) -> Result<Self> {
        let fbar = f.complement();
        let (f1, f0) = quotients(f, m)?;
        let (g1, g0) = quotients(&fbar, m)?;
        Ok(QuotientWeights {
            n: f.n(),
            f: f.popcount(),
            fbar: fbar.popcount(),
            f_one: f1.weight(&[m])?,
            f_zero: f0.weight(&[m])?,
            fbar_one: g1.weight(&[m])?,
            fbar_zero: g0.weight(&[m])?,
        })
    }
}

/// Weight of the pivotality indicator `(f/X_m) ∧ (f̄/X̄_m)` over the other voters.
pub fn swing_weight(f: &SwitchingFunction, m: usize) -> Result<u64> {
    let (f1, _) = quotients(f, m)?;
    let (_, g0) = quotients(&f.complement(), m)?;
    f1.and(&g0)?.weight(&[m])
}

/// Evaluates a formula without checking that it is valid for `f` and `m`.
///
/// The monotone-only formulas give wrong (possibly negative) answers for biform
/// variables; [`tbp`] refuses them there.
pub fn tbp_unchecked(f: &SwitchingFunction, m: usize, formula: TbpFormula) -> Result<i64> {
    let formula = match formula {
        TbpFormula::Auto => resolve_auto(f.polarity(m)?),
        TbpFormula::Enumeration => TbpFormula::Swing,
        other => other,
    };
    let w = QuotientWeights::new(f, m)?;
    let i = |v: u64| v as i64;
    Ok(match formula {
        TbpFormula::Swing => i(swing_weight(f, m)?),
        TbpFormula::ComplementUnion => {
            let (_, f0) = quotients(f, m)?;
            let (g1, _) = quotients(&f.complement(), m)?;
            i(1 << (w.n - 1)) - i(g1.or(&f0)?.weight(&[m])?)
        }
        TbpFormula::Derivative => i(f.boolean_difference(m)?.weight(&[m])?),
        TbpFormula::DoubleOneQuotient => 2 * i(w.f_one) - i(w.f),
        TbpFormula::WeightLessDoubleZeroQuotient => i(w.f) - 2 * i(w.f_zero),
        TbpFormula::QuotientDifference => i(w.f_one) - i(w.f_zero),
        TbpFormula::ComplementWeightLessDoubleOneQuotient => i(w.fbar) - 2 * i(w.fbar_one),
        TbpFormula::DoubleComplementZeroQuotient => 2 * i(w.fbar_zero) - i(w.fbar),
        TbpFormula::ComplementQuotientDifference => i(w.fbar_zero) - i(w.fbar_one),
        TbpFormula::Auto | TbpFormula::Enumeration => unreachable!("resolved above"),
    })
}

fn resolve_auto(p: Polarity) -> TbpFormula {
    if p.admits_monotone_formulas() {
        TbpFormula::QuotientDifference
    } else {
        TbpFormula::Swing
    }
}

/// Total Banzhaf power of voter `m`, with the concrete formula actually used.
pub fn tbp_with_formula(
    f: &SwitchingFunction,
    m: usize,
    formula: TbpFormula,
) -> Result<(u64, TbpFormula)> {
    let polarity = f.polarity(m)?;
    let formula = match formula {
        TbpFormula::Auto => resolve_auto(polarity),
        TbpFormula::Enumeration => TbpFormula::Swing,
        other => other,
    };
    if formula.requires_monotone() && !polarity.admits_monotone_formulas() {
        return Err(Error::MonotoneFormulaRejected {
            formula,
            var: m,
            polarity: polarity.name(),
        });
    }
    let value = tbp_unchecked(f, m, formula)?;
    Ok((u64::try_from(value).expect("valid formula is non-negative"), formula))
}

/// Total Banzhaf power of voter `m` via the requested formula.
pub fn tbp(f: &SwitchingFunction, m: usize, formula: TbpFormula) -> Result<u64> {
    tbp_with_formula(f, m, formula).map(|(v, _)| v)
}

/// TBP on the restricted function: restricted voters always go through the swing
/// formula, the others through `Auto`. The two general formulas are cross-checked.
pub fn tbp_restricted(rs: &RestrictedSystem, m: usize) -> Result<(u64, TbpFormula)> {
    let g = &rs.restricted;
    let swing = tbp(g, m, TbpFormula::Swing)?;
    let union = tbp(g, m, TbpFormula::ComplementUnion)?;
    assert_eq!(swing, union, "general TBP formulas disagree for X{}", m + 1);
    if rs.is_restricted_var(m) {
        Ok((swing, TbpFormula::Swing))
    } else {
        tbp_with_formula(g, m, TbpFormula::Auto)
    }
}

/// Probabilistic Banzhaf power `TBP / 2^(n−1)`.
pub fn pbp(tbp: u64, n: usize) -> Rational {
    Rational::new(tbp, 1 << (n.max(1) - 1))
}

fn ratio(num: u64, den: u64, what: &'static str) -> Result<Rational> {
    if den == 0 {
        return Err(Error::Undefined(what));
    }
    Ok(Rational::new(num, den))
}

/// Power to initiate: pivotality conditioned on a failing outcome.
pub fn pii(f: &SwitchingFunction, m: usize) -> Result<Rational> {
    ratio(swing_weight(f, m)?, f.complement().popcount(), "the complement of f")
}

/// Power to prevent: pivotality conditioned on a passing outcome.
pub fn ppi(f: &SwitchingFunction, m: usize) -> Result<Rational> {
    ratio(swing_weight(f, m)?, f.popcount(), "f")
}

/// Probability that the voter's vote agrees with the outcome.
pub fn sat(f: &SwitchingFunction, m: usize) -> Result<Rational> {
    let w = QuotientWeights::new(f, m)?;
    Ok(Rational::new(w.f_one + w.fbar_zero, 1 << w.n))
}

/// Satisfaction conditioned on a failing outcome.
pub fn nsat(f: &SwitchingFunction, m: usize) -> Result<Rational> {
    let w = QuotientWeights::new(f, m)?;
    ratio(w.fbar_zero, w.fbar, "the complement of f")
}

/// Satisfaction conditioned on a passing outcome.
pub fn psat(f: &SwitchingFunction, m: usize) -> Result<Rational> {
    let w = QuotientWeights::new(f, m)?;
    ratio(w.f_one, w.f, "f")
}

/// Public Good Index: per voter, the number of (restriction-filtered) MWCs containing it.
pub fn pgi(sys: &VotingSystem, max_vars: usize) -> Result<Vec<u64>> {
    let f = decision_function(sys, max_vars)?;
    pgi_of(&f, sys)
}

fn pgi_of(f: &SwitchingFunction, sys: &VotingSystem) -> Result<Vec<u64>> {
    let mwcs = filter_mwcs(&minimal_winning_coalitions(f)?, sys.forbidden());
    Ok((0..f.n())
        .map(|m| mwcs.iter().filter(|t| t.pos_mask() >> m & 1 == 1).count() as u64)
        .collect())
}

fn defined(r: Result<Rational>) -> Result<Option<Rational>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Undefined(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoterIndices {
    pub name: String,
    pub weights: Vec<u64>,
    pub tbp: u64,
    pub pbp: Rational,
    /// `None` where the conditioning outcome never occurs.
    pub pii: Option<Rational>,
    pub ppi: Option<Rational>,
    pub sat: Rational,
    pub nsat: Option<Rational>,
    pub psat: Option<Rational>,
    pub pgi: u64,
    pub formula_used: TbpFormula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub n: usize,
    /// True when forbidden coalitions were applied; the probabilistic indices are
    /// then computed on the zero-filled full sample space.
    pub restricted: bool,
    /// Weight of the analysed decision function and of its complement.
    pub passing: u64,
    pub failing: u64,
    pub voters: Vec<VoterIndices>,
}

impl IndexReport {
    pub fn tbp(&self) -> Vec<u64> {
        self.voters.iter().map(|v| v.tbp).collect()
    }

    pub fn pgi(&self) -> Vec<u64> {
        self.voters.iter().map(|v| v.pgi).collect()
    }

    /// First numeric disagreement with `other`, ignoring formula provenance.
    pub fn first_mismatch(&self, other: &IndexReport) -> Option<String> {
        if (self.n, self.passing, self.failing) != (other.n, other.passing, other.failing) {
            return Some(format!(
                "shape: n/wt(f)/wt(~f) {}/{}/{} vs {}/{}/{}",
                self.n, self.passing, self.failing, other.n, other.passing, other.failing
            ));
        }
        for (a, b) in self.voters.iter().zip(&other.voters) {
            let fields: [(&str, String, String); 9] = [
                ("tbp", a.tbp.to_string(), b.tbp.to_string()),
                ("pbp", a.pbp.to_string(), b.pbp.to_string()),
                ("pii", format!("{:?}", a.pii), format!("{:?}", b.pii)),
                ("ppi", format!("{:?}", a.ppi), format!("{:?}", b.ppi)),
                ("sat", a.sat.to_string(), b.sat.to_string()),
                ("nsat", format!("{:?}", a.nsat), format!("{:?}", b.nsat)),
                ("psat", format!("{:?}", a.psat), format!("{:?}", b.psat)),
                ("pgi", a.pgi.to_string(), b.pgi.to_string()),
                ("name", a.name.clone(), b.name.clone()),
            ];
            for (field, x, y) in fields {
                if x != y {
                    return Some(format!("{} {field}: {x} vs {y}", a.name));
                }
            }
        }
        None
    }
}

/// Indices of every voter for one function, with TBP supplied by `tbp_of`.
pub fn voter_indices(
    f: &SwitchingFunction,
    m: usize,
    name: String,
    weights: Vec<u64>,
    (tbp, formula_used): (u64, TbpFormula),
    pgi: u64,
) -> Result<VoterIndices> {
    Ok(VoterIndices {
        name,
        weights,
        tbp,
        pbp: pbp(tbp, f.n()),
        pii: defined(pii(f, m))?,
        ppi: defined(ppi(f, m))?,
        sat: sat(f, m)?,
        nsat: defined(nsat(f, m))?,
        psat: defined(psat(f, m))?,
        pgi,
        formula_used,
    })
}

/// Builds the decision function, applies any restrictions, and computes every index.
pub fn full_report(sys: &VotingSystem, max_vars: usize) -> Result<IndexReport> {
    let f = decision_function(sys, max_vars)?;
    let pgi = pgi_of(&f, sys)?;
    let restricted = !sys.forbidden().is_empty();
    let rs = restricted
        .then(|| apply_restrictions(&f, sys.forbidden()))
        .transpose()?;
    let analysed = rs.as_ref().map_or(&f, |r| &r.restricted);

    let voters = (0..sys.n())
        .map(|m| {
            let t = match &rs {
                Some(rs) => tbp_restricted(rs, m)?,
                None => tbp_with_formula(&f, m, TbpFormula::Auto)?,
            };
            voter_indices(
                analysed,
                m,
                sys.voters()[m].clone(),
                sys.weights_of(m),
                t,
                pgi[m],
            )
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(IndexReport {
        n: sys.n(),
        restricted,
        passing: analysed.popcount(),
        failing: analysed.complement().popcount(),
        voters,
    })
}

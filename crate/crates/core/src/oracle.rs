//! Brute-force reference implementations.
//!
//! Everything here works by enumerating assignments and evaluating the decision rule
//! directly. It shares only the truth-table type with the algebraic path: no
//! quotients, expansions or symmetric functions.

use num_rational::Ratio;

use crate::boolean::{Product, SwitchingFunction};
use crate::error::Result;
use crate::indices::{pbp, IndexReport, Rational, TbpFormula, VoterIndices};
use crate::voting::{check_cap, DecisionRule, VotingSystem};

/// Largest system the oracle will enumerate.
pub const ORACLE_MAX_VARS: usize = 20;

/// Inserts `bit` (0 or 1) at position `m` of the `(n−1)`-bit index `rest`.
fn spread(rest: u64, m: usize, bit: u64) -> u64 {
    let low = rest & ((1 << m) - 1);
    let high = (rest >> m) << (m + 1);
    high | bit << m | low
}

/// Number of assignments of the other voters where flipping `m` from 0 to 1 turns
/// `f` from false to true.
pub fn oracle_tbp(f: &SwitchingFunction, m: usize) -> Result<u64> {
    check_cap(f.n(), ORACLE_MAX_VARS)?;
    assert!(m < f.n(), "voter out of range");
    Ok((0..1u64 << (f.n() - 1))
        .filter(|&rest| f.value(spread(rest, m, 1)) && !f.value(spread(rest, m, 0)))
        .count() as u64)
}

/// Evaluates the decision rule on one coalition, ignoring restrictions.
fn wins(sys: &VotingSystem, coalition: u64) -> bool {
    match sys.rule() {
        DecisionRule::Weighted(rows) => rows.iter().all(|row| {
            let total: u64 = (0..sys.n())
                .filter(|&i| coalition & (1 << i) != 0)
                .map(|i| row.weights[i])
                .sum();
            total >= row.quota
        }),
        DecisionRule::Coalitions(sets) => sets
            .iter()
            .any(|s| s.iter().all(|&i| coalition & (1 << i) != 0)),
    }
}

fn contains_forbidden(sys: &VotingSystem, coalition: u64) -> bool {
    sys.forbidden()
        .iter()
        .any(|fc| fc.members().iter().all(|&i| coalition & (1 << i) != 0))
}

/// Minimal winning coalitions of the unrestricted rule: winning sets, scanned by
/// size, none of whose proper subsets was already found to win minimally.
pub fn oracle_mwcs(sys: &VotingSystem) -> Result<Vec<Product>> {
    check_cap(sys.n(), ORACLE_MAX_VARS)?;
    let n = sys.n();
    let mut coalitions: Vec<u64> = (0..1u64 << n).collect();
    coalitions.sort_by_key(|c| (c.count_ones(), *c));
    let mut minimal: Vec<u64> = Vec::new();
    for c in coalitions {
        if wins(sys, c) && !minimal.iter().any(|&s| s & c == s) {
            minimal.push(c);
        }
    }
    let mut members: Vec<Vec<usize>> = minimal
        .iter()
        .map(|&c| (0..n).filter(|&i| c & (1 << i) != 0).collect())
        .collect();
    members.sort();
    members.iter().map(|m| Product::positive(m)).collect()
}

/// The analysed decision function: the rule, with any coalition containing a
/// forbidden set forced to fail.
pub fn oracle_function(sys: &VotingSystem) -> Result<SwitchingFunction> {
    check_cap(sys.n(), ORACLE_MAX_VARS)?;
    SwitchingFunction::from_fn(sys.n(), |x| wins(sys, x) && !contains_forbidden(sys, x))
}

fn conditional(num: u64, den: u64) -> Option<Rational> {
    (den != 0).then(|| Ratio::new(num, den))
}

/// Every index recomputed by counting assignments.
pub fn oracle_report(sys: &VotingSystem) -> Result<IndexReport> {
    let g = oracle_function(sys)?;
    let n = sys.n();
    let total = 1u64 << n;
    let passing = (0..total).filter(|&x| g.value(x)).count() as u64;
    let failing = total - passing;
    let mwcs: Vec<u64> = oracle_mwcs(sys)?
        .iter()
        .map(Product::pos_mask)
        .filter(|&c| !contains_forbidden(sys, c))
        .collect();

    let voters = (0..n)
        .map(|m| {
            let bit = 1u64 << m;
            let swings = oracle_tbp(&g, m)?;
            // Count over the full sample space.
            let (mut agree, mut fail_and_no, mut pass_and_yes) = (0u64, 0u64, 0u64);
            for x in 0..total {
                let yes = x & bit != 0;
                let out = g.value(x);
                agree += u64::from(yes == out);
                fail_and_no += u64::from(!out && !yes);
                pass_and_yes += u64::from(out && yes);
            }
            Ok(VoterIndices {
                name: sys.voters()[m].clone(),
                weights: sys.weights_of(m),
                tbp: swings,
                pbp: pbp(swings, n),
                pii: conditional(swings, failing),
                ppi: conditional(swings, passing),
                sat: Ratio::new(agree, total),
                nsat: conditional(fail_and_no, failing),
                psat: conditional(pass_and_yes, passing),
                pgi: mwcs.iter().filter(|&&c| c & bit != 0).count() as u64,
                formula_used: TbpFormula::Enumeration,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(IndexReport {
        n,
        restricted: !sys.forbidden().is_empty(),
        passing,
        failing,
        voters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voting::ForbiddenCoalition;

    #[test]
    fn spread_inserts_bit() {
        assert_eq!(spread(0b11, 1, 0), 0b101);
        assert_eq!(spread(0b11, 0, 1), 0b111);
        assert_eq!(spread(0b10, 2, 1), 0b110);
    }

    #[test]
    fn two_of_three() {
        let sys = VotingSystem::k_out_of_n(2, 3).unwrap();
        let f = oracle_function(&sys).unwrap();
        for m in 0..3 {
            assert_eq!(oracle_tbp(&f, m).unwrap(), 2);
        }
        assert_eq!(oracle_mwcs(&sys).unwrap().len(), 3);

        let sys = sys
            .with_forbidden(vec![ForbiddenCoalition::pair(0, 1).unwrap()])
            .unwrap();
        let g = oracle_function(&sys).unwrap();
        assert_eq!(oracle_tbp(&g, 0).unwrap(), 1);
        assert_eq!(oracle_report(&sys).unwrap().pgi(), vec![1, 1, 2]);
    }

    #[test]
    fn five_of_eight() {
        let sys = VotingSystem::k_out_of_n(5, 8).unwrap();
        let f = oracle_function(&sys).unwrap();
        assert_eq!(oracle_tbp(&f, 0).unwrap(), 35);
    }

    #[test]
    fn yakuba_mwc_count() {
        let sys = VotingSystem::weighted(7, &[4, 2, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(oracle_mwcs(&sys).unwrap().len(), 16);
    }

    #[test]
    fn dictator_has_one_mwc() {
        let sys = VotingSystem::weighted(3, &[3, 1, 1]).unwrap();
        let mwcs = oracle_mwcs(&sys).unwrap();
        assert_eq!(mwcs.len(), 1);
        assert_eq!(mwcs[0].to_string(), "X1");
    }

    #[test]
    fn cap_enforced() {
        let sys = VotingSystem::k_out_of_n(1, 21).unwrap();
        assert!(oracle_mwcs(&sys).is_err());
    }
}

//! Voting systems, their decision functions, minimal winning coalitions and
//! coalition restrictions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::boolean::{Product, SwitchingFunction};
use crate::error::{Error, Result};

/// One `[quota; w1, …, wn]` row. A coalition meets the row when its weight reaches the quota.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub weights: Vec<u64>,
    pub quota: u64,
}

impl WeightRow {
    pub fn new(quota: u64, weights: Vec<u64>) -> Self {
        WeightRow { weights, quota }
    }

    pub fn is_met(&self, coalition: u64) -> bool {
        let total: u64 = self
            .weights
            .iter()
            .enumerate()
            .filter(|(i, _)| coalition >> i & 1 == 1)
            .map(|(_, w)| w)
            .sum();
        total >= self.quota
    }
}

impl fmt::Display for WeightRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}; {}]", self.quota, ws.join(", "))
    }
}

/// Parses the bracket notation `[65; 47, 46, 17, 16, 2]`.
impl FromStr for WeightRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSystem(format!("expected `[quota; w1, w2, ...]`, got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (quota, weights) = inner.split_once(';').ok_or_else(bad)?;
        let quota = quota.trim().parse().map_err(|_| bad())?;
        let weights = weights
            .split(',')
            .map(|w| w.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<u64>>>()?;
        Ok(WeightRow::new(quota, weights))
    }
}

/// How the winning coalitions are specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionRule {
    /// Winning iff every row's quota is met (one row: scalar weights; several: vector weights).
    Weighted(Vec<WeightRow>),
    /// Winning iff the coalition contains one of the listed voter sets.
    Coalitions(Vec<BTreeSet<usize>>),
}

/// A set of at least two voters who never join the same coalition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForbiddenCoalition {
    members: BTreeSet<usize>,
}

impl ForbiddenCoalition {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.len() < 2 {
            return Err(Error::InvalidSystem(
                "a forbidden coalition needs at least two distinct voters".into(),
            ));
        }
        Ok(ForbiddenCoalition { members })
    }

    /// Convenience for a forbidden pair given as 0-based voter indices.
    pub fn pair(a: usize, b: usize) -> Result<Self> {
        Self::new([a, b])
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn as_product(&self) -> Product {
        Product::positive(&self.members.iter().copied().collect::<Vec<_>>())
            .expect("distinct members")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VotingSystem {
    voters: Vec<String>,
    rule: DecisionRule,
    forbidden: Vec<ForbiddenCoalition>,
}

impl VotingSystem {
    pub fn new(
        voters: Vec<String>,
        rule: DecisionRule,
        forbidden: Vec<ForbiddenCoalition>,
    ) -> Result<Self> {
        let n = voters.len();
        if n == 0 {
            return Err(Error::InvalidSystem("no voters".into()));
        }
        match &rule {
            DecisionRule::Weighted(rows) => {
                if rows.is_empty() {
                    return Err(Error::InvalidSystem("no weight rows".into()));
                }
                for (r, row) in rows.iter().enumerate() {
                    if row.weights.len() != n {
                        return Err(Error::InvalidSystem(format!(
                            "row {} has {} weights for {n} voters",
                            r + 1,
                            row.weights.len()
                        )));
                    }
                    if row.quota == 0 {
                        return Err(Error::InvalidSystem(format!(
                            "row {}: quota must be at least 1",
                            r + 1
                        )));
                    }
                }
            }
            DecisionRule::Coalitions(sets) => {
                for set in sets {
                    if let Some(&v) = set.iter().find(|&&v| v >= n) {
                        return Err(Error::VarOutOfRange { var: v, n });
                    }
                }
            }
        }
        for fc in &forbidden {
            if let Some(&v) = fc.members.iter().find(|&&v| v >= n) {
                return Err(Error::VarOutOfRange { var: v, n });
            }
        }
        Ok(VotingSystem {
            voters,
            rule,
            forbidden,
        })
    }

    /// Scalar system `[quota; weights]` with voters named `X1..Xn`.
    pub fn weighted(quota: u64, weights: &[u64]) -> Result<Self> {
        let voters = (1..=weights.len()).map(|i| format!("X{i}")).collect();
        Self::new(
            voters,
            DecisionRule::Weighted(vec![WeightRow::new(quota, weights.to_vec())]),
            Vec::new(),
        )
    }

    /// The k-out-of-n system `[k; 1, …, 1]`.
    pub fn k_out_of_n(k: u64, n: usize) -> Result<Self> {
        Self::weighted(k, &vec![1; n])
    }

    pub fn with_forbidden(mut self, forbidden: Vec<ForbiddenCoalition>) -> Result<Self> {
        self.forbidden = forbidden;
        Self::new(self.voters, self.rule, self.forbidden)
    }

    pub fn n(&self) -> usize {
        self.voters.len()
    }

    pub fn voters(&self) -> &[String] {
        &self.voters
    }

    pub fn rule(&self) -> &DecisionRule {
        &self.rule
    }

    pub fn forbidden(&self) -> &[ForbiddenCoalition] {
        &self.forbidden
    }

    /// Per-voter weights, one entry per row (empty for coalition-listed systems).
    pub fn weights_of(&self, voter: usize) -> Vec<u64> {
        match &self.rule {
            DecisionRule::Weighted(rows) => rows.iter().map(|r| r.weights[voter]).collect(),
            DecisionRule::Coalitions(_) => Vec::new(),
        }
    }

    pub fn voter_index(&self, name: &str) -> Option<usize> {
        self.voters.iter().position(|v| v == name)
    }
}

pub fn check_cap(n: usize, max_vars: usize) -> Result<()> {
    if n > max_vars {
        return Err(Error::TooManyVariables { n, cap: max_vars });
    }
    Ok(())
}

/// The unrestricted decision function: true iff every row's quota is met
/// (or, for listed coalitions, iff some listed set is fully supportive).
pub fn decision_function(sys: &VotingSystem, max_vars: usize) -> Result<SwitchingFunction> {
    check_cap(sys.n(), max_vars)?;
    match &sys.rule {
        DecisionRule::Weighted(rows) => {
            SwitchingFunction::from_fn(sys.n(), |x| rows.iter().all(|r| r.is_met(x)))
        }
        DecisionRule::Coalitions(sets) => {
            let products = sets
                .iter()
                .map(|s| Product::positive(&s.iter().copied().collect::<Vec<_>>()))
                .collect::<Result<Vec<_>>>()?;
            SwitchingFunction::from_products(sys.n(), &products)
        }
    }
}

/// Prime implicants of a monotone function, found as its minimal true points
/// (true assignments where clearing any supporting vote falsifies `f`).
/// Sorted lexicographically by member indices.
pub fn minimal_winning_coalitions(f: &SwitchingFunction) -> Result<Vec<Product>> {
    f.require_monotone()?;
    let mut mwcs: Vec<Vec<usize>> = f
        .true_points()
        .filter(|&x| (0..f.n()).all(|b| x >> b & 1 == 0 || !f.value(x & !(1 << b))))
        .map(|x| (0..f.n()).filter(|&b| x >> b & 1 == 1).collect())
        .collect();
    mwcs.sort();
    mwcs.iter().map(|m| Product::positive(m)).collect()
}

/// Removes every MWC that contains all members of some forbidden coalition.
pub fn filter_mwcs(mwcs: &[Product], forbidden: &[ForbiddenCoalition]) -> Vec<Product> {
    mwcs.iter()
        .filter(|t| {
            forbidden
                .iter()
                .all(|fc| t.pos_mask() & fc.mask() != fc.mask())
        })
        .copied()
        .collect()
}

/// An unrestricted decision function together with its restricted counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedSystem {
    pub base: SwitchingFunction,
    pub restricted: SwitchingFunction,
    /// Voters appearing in at least one forbidden coalition, ascending.
    pub restricted_vars: Vec<usize>,
    /// Expansion keys whose subfunctions were nullified.
    pub nullified: Vec<Product>,
}

impl RestrictedSystem {
    pub fn is_restricted_var(&self, m: usize) -> bool {
        self.restricted_vars.contains(&m)
    }
}

fn restricted_vars(forbidden: &[ForbiddenCoalition]) -> Vec<usize> {
    forbidden
        .iter()
        .flat_map(|fc| fc.members.iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn check_members(n: usize, forbidden: &[ForbiddenCoalition]) -> Result<()> {
    for fc in forbidden {
        if let Some(&v) = fc.members.iter().find(|&&v| v >= n) {
            return Err(Error::VarOutOfRange { var: v, n });
        }
    }
    Ok(())
}

/// Zeroes every row in which all members of some forbidden coalition vote yes.
pub fn restrict_by_mask(
    f: &SwitchingFunction,
    forbidden: &[ForbiddenCoalition],
) -> Result<SwitchingFunction> {
    check_members(f.n(), forbidden)?;
    let masks: Vec<u64> = forbidden.iter().map(ForbiddenCoalition::mask).collect();
    SwitchingFunction::from_fn(f.n(), |x| {
        f.value(x) && masks.iter().all(|&m| x & m != m)
    })
}

/// Expands `f` over every restricted voter and nullifies each subfunction whose key
/// subsumes a forbidden coalition. Returns the restricted function and the nullified keys.
pub fn restrict_by_expansion(
    f: &SwitchingFunction,
    forbidden: &[ForbiddenCoalition],
) -> Result<(SwitchingFunction, Vec<Product>)> {
    check_members(f.n(), forbidden)?;
    let vars = restricted_vars(forbidden);
    let mut expansion = f.boole_shannon_expand(&vars)?;
    let coalitions: Vec<Product> = forbidden.iter().map(ForbiddenCoalition::as_product).collect();
    let nullified = expansion.nullify(|key| coalitions.iter().any(|c| key.implies(c)));
    Ok((expansion.recombine(), nullified))
}

/// Builds the restricted decision function `g` from a monotone `f`.
pub fn apply_restrictions(
    f: &SwitchingFunction,
    forbidden: &[ForbiddenCoalition],
) -> Result<RestrictedSystem> {
    f.require_monotone()?;
    let (restricted, nullified) = restrict_by_expansion(f, forbidden)?;
    debug_assert_eq!(restricted, restrict_by_mask(f, forbidden)?);
    Ok(RestrictedSystem {
        base: f.clone(),
        restricted,
        restricted_vars: restricted_vars(forbidden),
        nullified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{Literal, Polarity};

    fn p(s: &str) -> Product {
        s.parse().unwrap()
    }

    fn names(ps: &[Product]) -> Vec<String> {
        ps.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn bracket_notation() {
        let row: WeightRow = "[65; 47, 46, 17, 16, 2]".parse().unwrap();
        assert_eq!(row.quota, 65);
        assert_eq!(row.weights, vec![47, 46, 17, 16, 2]);
        assert_eq!(row.to_string(), "[65; 47, 46, 17, 16, 2]");
        assert!("65; 1".parse::<WeightRow>().is_err());
    }

    #[test]
    fn validation() {
        assert!(VotingSystem::weighted(0, &[1, 1]).is_err());
        assert!(ForbiddenCoalition::new([1]).is_err());
        assert!(ForbiddenCoalition::new([1, 1]).is_err());
        let sys = VotingSystem::weighted(2, &[1, 1, 1]).unwrap();
        assert_eq!(
            sys.with_forbidden(vec![ForbiddenCoalition::pair(0, 5).unwrap()]),
            Err(Error::VarOutOfRange { var: 5, n: 3 })
        );
    }

    #[test]
    fn two_of_three_decision_function() {
        let sys = VotingSystem::weighted(2, &[1, 1, 1]).unwrap();
        let f = decision_function(&sys, 24).unwrap();
        let expected =
            SwitchingFunction::from_products(3, &[p("X1 X2"), p("X2 X3"), p("X1 X3")]).unwrap();
        assert_eq!(f, expected);
        // Ties count as winning.
        let sys = VotingSystem::weighted(50, &[49, 49, 1]).unwrap();
        assert_eq!(decision_function(&sys, 24).unwrap(), expected);
    }

    #[test]
    fn bicameral_rows_conjoin() {
        let rows = vec![
            WeightRow::new(1, vec![1, 1, 0, 0, 0]),
            WeightRow::new(2, vec![0, 0, 2, 1, 1]),
        ];
        let voters = (1..=5).map(|i| format!("X{i}")).collect();
        let sys = VotingSystem::new(voters, DecisionRule::Weighted(rows), vec![]).unwrap();
        let f = decision_function(&sys, 24).unwrap();
        let expected = SwitchingFunction::from_products(
            5,
            &[p("X1 X3"), p("X2 X3"), p("X1 X4 X5"), p("X2 X4 X5")],
        )
        .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn cap_is_enforced() {
        let sys = VotingSystem::k_out_of_n(3, 6).unwrap();
        assert_eq!(
            decision_function(&sys, 5),
            Err(Error::TooManyVariables { n: 6, cap: 5 })
        );
    }

    #[test]
    fn mwc_examples() {
        let f = decision_function(&VotingSystem::weighted(2, &[1, 1, 1]).unwrap(), 24).unwrap();
        assert_eq!(
            names(&minimal_winning_coalitions(&f).unwrap()),
            ["X1 X2", "X1 X3", "X2 X3"]
        );

        let dictator = SwitchingFunction::literal(4, Literal::pos(2)).unwrap();
        assert_eq!(names(&minimal_winning_coalitions(&dictator).unwrap()), ["X3"]);

        let g = SwitchingFunction::from_products(3, &[p("~X1 X2 X3")]).unwrap();
        assert!(matches!(
            minimal_winning_coalitions(&g),
            Err(Error::NotMonotone { var: 0, .. })
        ));
    }

    #[test]
    fn restriction_of_two_of_three() {
        let f = decision_function(&VotingSystem::weighted(2, &[1, 1, 1]).unwrap(), 24).unwrap();
        let forbid = [ForbiddenCoalition::pair(0, 1).unwrap()];
        let rs = apply_restrictions(&f, &forbid).unwrap();
        let expected =
            SwitchingFunction::from_products(3, &[p("~X1 X2 X3"), p("X1 ~X2 X3")]).unwrap();
        assert_eq!(rs.restricted, expected);
        assert_eq!(rs.restricted_vars, vec![0, 1]);
        assert_eq!(names(&rs.nullified), ["X1 X2"]);
        assert!(rs.restricted.implies(&rs.base).unwrap());
        assert_eq!(rs.restricted.polarity(0).unwrap(), Polarity::Biform);

        let mwcs = minimal_winning_coalitions(&f).unwrap();
        assert_eq!(names(&filter_mwcs(&mwcs, &forbid)), ["X1 X3", "X2 X3"]);
        assert_eq!(filter_mwcs(&mwcs, &[]), mwcs);
    }

    #[test]
    fn empty_forbidden_list_is_identity() {
        let f = decision_function(&VotingSystem::weighted(3, &[2, 1, 1]).unwrap(), 24).unwrap();
        let rs = apply_restrictions(&f, &[]).unwrap();
        assert_eq!(rs.restricted, f);
        assert!(rs.restricted_vars.is_empty());
        assert!(rs.nullified.is_empty());
    }
}

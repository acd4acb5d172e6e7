//! Voter classification (veto, dummy, dictator, clique) and the desirability preorder.

use crate::boolean::{Literal, Polarity, Product, SwitchingFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DesirabilityRelation {
    Equivalent,
    FirstMoreDesirable,
    SecondMoreDesirable,
    Incomparable,
}

impl DesirabilityRelation {
    /// True when the first voter is at least as desirable as the second.
    pub fn first_at_least(self) -> bool {
        matches!(self, Self::Equivalent | Self::FirstMoreDesirable)
    }

    pub fn reversed(self) -> Self {
        match self {
            Self::FirstMoreDesirable => Self::SecondMoreDesirable,
            Self::SecondMoreDesirable => Self::FirstMoreDesirable,
            other => other,
        }
    }
}

/// Compares voters `i` and `j` of a monotone `f` by swapping them in every coalition
/// that contains exactly one of the two.
pub fn compare_desirability(
    f: &SwitchingFunction,
    i: usize,
    j: usize,
) -> Result<DesirabilityRelation> {
    if i == j {
        return Err(Error::SameVoter { var: i });
    }
    f.polarity(i)?;
    f.polarity(j)?;
    f.require_monotone()?;
    let (bi, bj) = (1u64 << i, 1u64 << j);
    let (mut i_wins, mut j_wins) = (false, false);
    for x in (0..f.len()).filter(|x| x & bi != 0 && x & bj == 0) {
        let y = x ^ bi ^ bj;
        match (f.value(x), f.value(y)) {
            (true, false) => i_wins = true,
            (false, true) => j_wins = true,
            _ => {}
        }
        if i_wins && j_wins {
            return Ok(DesirabilityRelation::Incomparable);
        }
    }
    Ok(match (i_wins, j_wins) {
        (false, false) => DesirabilityRelation::Equivalent,
        (true, false) => DesirabilityRelation::FirstMoreDesirable,
        (false, true) => DesirabilityRelation::SecondMoreDesirable,
        (true, true) => DesirabilityRelation::Incomparable,
    })
}

/// `m` is a veto player when no coalition without `m` wins.
pub fn is_veto(f: &SwitchingFunction, m: usize) -> Result<bool> {
    Ok(f.quotient_literal(Literal::neg(m))?.is_zero())
}

/// `m` is a dummy when the outcome never depends on its vote.
pub fn is_dummy(f: &SwitchingFunction, m: usize) -> Result<bool> {
    Ok(f.polarity(m)? == Polarity::Independent)
}

pub fn is_dictator(f: &SwitchingFunction, m: usize) -> Result<bool> {
    Ok(*f == SwitchingFunction::literal(f.n(), Literal::pos(m))?)
}

/// `members` form a clique when `f` is exactly their conjunction.
pub fn is_clique(f: &SwitchingFunction, members: &[usize]) -> Result<bool> {
    if members.is_empty() {
        return Err(Error::EmptyMembers);
    }
    Ok(*f == SwitchingFunction::from_product(f.n(), &Product::positive(members)?)?)
}

/// A scaled bicameral federal system with a president and a tie-breaking vice-president.
///
/// Variables: `P = 0`, `V = 1`, then the senators, then the representatives. A bill
/// passes with the president and a majority of each chamber, or over a veto with
/// two-thirds of each. At an even senate split the vice-president's vote decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FederalModel {
    pub senators: usize,
    pub representatives: usize,
}

impl FederalModel {
    pub const PRESIDENT: usize = 0;
    pub const VICE_PRESIDENT: usize = 1;

    pub fn new(senators: usize, representatives: usize) -> Self {
        FederalModel {
            senators,
            representatives,
        }
    }

    pub fn n(&self) -> usize {
        2 + self.senators + self.representatives
    }

    pub fn senator(&self, k: usize) -> usize {
        assert!(k < self.senators);
        2 + k
    }

    pub fn representative(&self, k: usize) -> usize {
        assert!(k < self.representatives);
        2 + self.senators + k
    }

    fn majority(size: usize) -> usize {
        size / 2 + 1
    }

    fn two_thirds(size: usize) -> usize {
        (2 * size).div_ceil(3)
    }

    /// Senate count the vice-president must complete; one short of a majority.
    pub fn tie_count(&self) -> usize {
        Self::majority(self.senators) - 1
    }

    pub fn function(&self, max_vars: usize) -> Result<SwitchingFunction> {
        crate::voting::check_cap(self.n(), max_vars)?;
        let s_mask = ((1u64 << self.senators) - 1) << 2;
        let h_mask = ((1u64 << self.representatives) - 1) << (2 + self.senators);
        let (s_pass, s_over) = (Self::majority(self.senators), Self::two_thirds(self.senators));
        let (h_pass, h_over) = (
            Self::majority(self.representatives),
            Self::two_thirds(self.representatives),
        );
        let tie = self.tie_count();
        SwitchingFunction::from_fn(self.n(), |x| {
            let p = x & 1 == 1;
            let v = x >> 1 & 1 == 1;
            let s = (x & s_mask).count_ones() as usize;
            let h = (x & h_mask).count_ones() as usize;
            if !p {
                s >= s_over && h >= h_over
            } else if v {
                s >= tie && h >= h_pass
            } else {
                s >= s_pass && h >= h_pass
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DesirabilityRelation::*;

    fn p(s: &str) -> Product {
        s.parse().unwrap()
    }

    fn bicameral() -> SwitchingFunction {
        SwitchingFunction::from_products(
            5,
            &[p("X1 X3"), p("X2 X3"), p("X1 X4 X5"), p("X2 X4 X5")],
        )
        .unwrap()
    }

    fn two_of_three() -> SwitchingFunction {
        SwitchingFunction::from_products(3, &[p("X1 X2"), p("X2 X3"), p("X1 X3")]).unwrap()
    }

    #[test]
    fn bicameral_relations() {
        let f = bicameral();
        assert_eq!(compare_desirability(&f, 0, 1).unwrap(), Equivalent);
        assert_eq!(compare_desirability(&f, 2, 3).unwrap(), FirstMoreDesirable);
        assert_eq!(compare_desirability(&f, 3, 2).unwrap(), SecondMoreDesirable);
        assert_eq!(compare_desirability(&f, 2, 4).unwrap(), FirstMoreDesirable);
        assert_eq!(compare_desirability(&f, 3, 4).unwrap(), Equivalent);
        assert_eq!(compare_desirability(&f, 0, 2).unwrap(), Incomparable);
        assert_eq!(
            compare_desirability(&f, 1, 1),
            Err(Error::SameVoter { var: 1 })
        );
    }

    #[test]
    fn non_monotone_refused() {
        let g = SwitchingFunction::from_products(3, &[p("~X1 X2 X3"), p("X1 ~X2 X3")]).unwrap();
        assert!(matches!(
            compare_desirability(&g, 0, 2),
            Err(Error::NotMonotone { .. })
        ));
    }

    #[test]
    fn classification() {
        let f = two_of_three();
        for m in 0..3 {
            assert!(!is_veto(&f, m).unwrap());
            assert!(!is_dummy(&f, m).unwrap());
            assert!(!is_dictator(&f, m).unwrap());
        }
        assert!(!is_clique(&f, &[0, 1]).unwrap());

        let d = SwitchingFunction::literal(4, Literal::pos(1)).unwrap();
        assert!(is_dictator(&d, 1).unwrap());
        assert!(is_veto(&d, 1).unwrap());
        for m in [0, 2, 3] {
            assert!(is_dummy(&d, m).unwrap());
        }

        let c = SwitchingFunction::from_product(3, &p("X1 X2")).unwrap();
        assert!(is_clique(&c, &[0, 1]).unwrap());
        assert!(is_veto(&c, 0).unwrap() && is_veto(&c, 1).unwrap());
        assert_eq!(is_clique(&c, &[]), Err(Error::EmptyMembers));
    }

    #[test]
    fn permanent_members_veto() {
        // P1 P2 P3 · Sy(4; {2..4}) over seven voters.
        let f = SwitchingFunction::from_fn(7, |x| x & 0b111 == 0b111 && (x >> 3).count_ones() >= 2)
            .unwrap();
        for m in 0..3 {
            assert!(is_veto(&f, m).unwrap());
        }
        for m in 3..7 {
            assert!(!is_veto(&f, m).unwrap());
        }
    }

    #[test]
    fn federal_chain() {
        let model = FederalModel::new(5, 9);
        assert_eq!(model.tie_count(), 2);
        let f = model.function(24).unwrap();
        assert!(f.is_monotone());
        let (pr, vp) = (FederalModel::PRESIDENT, FederalModel::VICE_PRESIDENT);
        for k in 0..5 {
            let s = model.senator(k);
            assert_eq!(compare_desirability(&f, vp, s).unwrap(), SecondMoreDesirable);
            assert_eq!(compare_desirability(&f, pr, s).unwrap(), FirstMoreDesirable);
        }
        assert_eq!(compare_desirability(&f, pr, vp).unwrap(), FirstMoreDesirable);
    }
}

//! Symmetric switching functions `Sy(n; A; X)` and the binomial machinery behind
//! their weights.
//!
//! A symmetric function is true exactly when the number of true variables among
//! `vars` lies in the characteristic set `A`. The k-out-of-n threshold function is
//! the up-set `A = {k..n}`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::boolean::{Literal, SwitchingFunction};
use crate::error::{Error, Result};

/// Exact binomial coefficient `c(n, k)`; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Cumulative coefficient `C(n, k) = Σ_{m=k}^{n} c(n, m)`.
pub fn cumulative_binomial(n: i64, k: i64) -> BigUint {
    (k.max(0)..=n).map(|m| binomial(n, m)).sum()
}

/// `c(n, k)` narrowed to `u64`, for closed forms over table-sized systems.
pub fn binomial_u64(n: i64, k: i64) -> u64 {
    u64::try_from(binomial(n, k)).expect("binomial exceeds u64")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricFunction {
    vars: Vec<usize>,
    charset: BTreeSet<usize>,
}

impl SymmetricFunction {
    pub fn new(vars: Vec<usize>, charset: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &vars {
            if !seen.insert(v) {
                return Err(Error::DuplicateVariable { var: v });
            }
        }
        let charset: BTreeSet<usize> = charset.into_iter().collect();
        if let Some(&bad) = charset.iter().find(|&&a| a > vars.len()) {
            return Err(Error::InvalidSystem(format!(
                "characteristic value {bad} exceeds arity {}",
                vars.len()
            )));
        }
        Ok(SymmetricFunction { vars, charset })
    }

    /// The threshold function `Sy(n; {k..n})`; `k > n` gives the constant 0.
    pub fn at_least(vars: Vec<usize>, k: usize) -> Result<Self> {
        let n = vars.len();
        Self::new(vars, k..=n)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn charset(&self) -> &BTreeSet<usize> {
        &self.charset
    }

    pub fn is_constant_one(&self) -> bool {
        self.charset.len() == self.arity() + 1
    }

    pub fn is_constant_zero(&self) -> bool {
        self.charset.is_empty()
    }

    /// `Some(k)` when the characteristic set is `{k..arity}`; the empty set counts as `k = arity + 1`.
    pub fn threshold(&self) -> Option<usize> {
        let k = self.charset.iter().next().copied().unwrap_or(self.arity() + 1);
        (self.charset.len() == self.arity() + 1 - k).then_some(k)
    }

    /// Complementary characteristic set with respect to `{0..arity}`.
    pub fn complement(&self) -> Self {
        SymmetricFunction {
            vars: self.vars.clone(),
            charset: (0..=self.arity())
                .filter(|a| !self.charset.contains(a))
                .collect(),
        }
    }

    /// Densifies over `ambient_n` variables; variables outside `vars` are dummies.
    pub fn to_function(&self, ambient_n: usize) -> Result<SwitchingFunction> {
        let mut mask = 0u64;
        for &v in &self.vars {
            if v >= ambient_n {
                return Err(Error::VarOutOfRange { var: v, n: ambient_n });
            }
            mask |= 1 << v;
        }
        SwitchingFunction::from_fn(ambient_n, |x| {
            self.charset.contains(&((x & mask).count_ones() as usize))
        })
    }

    fn position(&self, var: usize) -> Result<usize> {
        self.vars
            .iter()
            .position(|&v| v == var)
            .ok_or(Error::NotASymmetricVariable { var })
    }

    fn without(&self, var: usize) -> Result<Vec<usize>> {
        let idx = self.position(var)?;
        let mut vars = self.vars.clone();
        vars.remove(idx);
        Ok(vars)
    }

    /// Quotient by one literal: `X_m = 1` shifts every count down by one, `X_m = 0`
    /// keeps counts and drops the one that no longer fits.
    pub fn quotient(&self, lit: Literal) -> Result<Self> {
        let vars = self.without(lit.var)?;
        let arity = vars.len();
        let charset = if lit.positive {
            self.charset.iter().filter(|&&a| a >= 1).map(|a| a - 1).collect()
        } else {
            self.charset.iter().copied().filter(|&a| a <= arity).collect()
        };
        Ok(SymmetricFunction { vars, charset })
    }

    /// Boolean difference w.r.t. `X_m`.
    ///
    /// For a threshold function this is the single level `{k−1}`. In general both
    /// quotients are symmetric over the same variables, so their XOR has the
    /// symmetric difference of the two characteristic sets.
    pub fn difference(&self, m: usize) -> Result<Self> {
        let vars = self.without(m)?;
        if let Some(k) = self.threshold() {
            let charset = if k >= 1 && k <= self.arity() {
                BTreeSet::from([k - 1])
            } else {
                BTreeSet::new()
            };
            return Ok(SymmetricFunction { vars, charset });
        }
        let one = self.quotient(Literal::pos(m))?;
        let zero = self.quotient(Literal::neg(m))?;
        Ok(SymmetricFunction {
            vars,
            charset: one
                .charset
                .symmetric_difference(&zero.charset)
                .copied()
                .collect(),
        })
    }

    /// Exact weight over its own `arity` variables, `Σ_{a∈A} c(arity, a)`.
    pub fn weight(&self) -> BigUint {
        let n = self.arity() as i64;
        self.charset.iter().map(|&a| binomial(n, a as i64)).sum()
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.arity();
        write!(f, "Sy({n}; ")?;
        match self.threshold() {
            Some(k) if k <= n && k < n => write!(f, "{{{k}..{n}}}")?,
            _ => {
                let items: Vec<String> = self.charset.iter().map(|a| a.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))?;
            }
        }
        let names: Vec<String> = self.vars.iter().map(|v| format!("X{}", v + 1)).collect();
        write!(f, "; {})", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn vars(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 4), big(35));
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(cumulative_binomial(8, 5), big(93));
        assert_eq!(cumulative_binomial(5, 3), big(16));
        assert_eq!(cumulative_binomial(5, 1), big(31));
        assert_eq!(cumulative_binomial(10, 0), big(1024));
        // Beyond u64.
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn densify_examples() {
        let s = SymmetricFunction::new(vars(3), [2, 3]).unwrap();
        let f = s.to_function(3).unwrap();
        assert_eq!(f.popcount(), 4);
        assert!(SymmetricFunction::at_least(vars(4), 0)
            .unwrap()
            .to_function(4)
            .unwrap()
            .is_one());
        let s = SymmetricFunction::at_least(vars(8), 5).unwrap();
        assert_eq!(s.to_function(8).unwrap().popcount(), 93);
        assert!(s.to_function(7).is_err());
    }

    #[test]
    fn quotient_examples() {
        let s = SymmetricFunction::at_least(vars(8), 5).unwrap();
        let pos = s.quotient(Literal::pos(0)).unwrap();
        assert_eq!(pos.arity(), 7);
        assert_eq!(pos.threshold(), Some(4));
        let neg = s.quotient(Literal::neg(0)).unwrap();
        assert_eq!(neg.threshold(), Some(5));
        let one = SymmetricFunction::at_least(vars(3), 0).unwrap();
        assert!(one.quotient(Literal::pos(0)).unwrap().is_constant_one());
        assert_eq!(
            s.quotient(Literal::pos(9)),
            Err(Error::NotASymmetricVariable { var: 9 })
        );
    }

    #[test]
    fn difference_examples() {
        let s = SymmetricFunction::at_least(vars(8), 5).unwrap();
        let d = s.difference(3).unwrap();
        assert_eq!(d.charset(), &BTreeSet::from([4]));
        assert_eq!(d.arity(), 7);
        assert_eq!(d.weight(), big(35));

        let s = SymmetricFunction::new(vars(3), [2, 3]).unwrap();
        let d = s.difference(0).unwrap();
        assert_eq!(d.charset(), &BTreeSet::from([1]));
        assert_eq!(d.weight(), big(2));

        let one = SymmetricFunction::at_least(vars(5), 0).unwrap();
        assert!(one.difference(2).unwrap().is_constant_zero());
    }

    #[test]
    fn weight_examples() {
        let s = SymmetricFunction::at_least(vars(5), 3).unwrap();
        assert_eq!(s.weight(), big(16));
        let s = SymmetricFunction::at_least(vars(5), 1).unwrap();
        assert_eq!(s.weight(), big(31));
        let s = SymmetricFunction::new(vars(4), [2]).unwrap();
        assert_eq!(s.weight(), big(6));
    }

    #[test]
    fn threshold_detection() {
        assert_eq!(SymmetricFunction::new(vars(4), []).unwrap().threshold(), Some(5));
        assert_eq!(SymmetricFunction::new(vars(4), [2]).unwrap().threshold(), None);
        assert_eq!(SymmetricFunction::new(vars(4), [4]).unwrap().threshold(), Some(4));
        assert!(SymmetricFunction::new(vars(2), [3]).is_err());
    }

    #[test]
    fn display() {
        let s = SymmetricFunction::at_least(vec![2, 3, 4], 2).unwrap();
        assert_eq!(s.to_string(), "Sy(3; {2..3}; X3,X4,X5)");
        let s = SymmetricFunction::new(vec![0, 1], [1]).unwrap();
        assert_eq!(s.to_string(), "Sy(2; {1}; X1,X2)");
    }
}

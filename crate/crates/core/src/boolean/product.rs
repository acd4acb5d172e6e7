use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, ABSOLUTE_MAX_VARS};

/// A variable or its complement. `var` is 0-based; display is 1-based (`X1`, `~X1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn complement(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "X{}", self.var + 1)
        } else {
            write!(f, "~X{}", self.var + 1)
        }
    }
}

/// A conjunction of literals in which no variable appears twice.
///
/// Stored as two disjoint bit masks over variable indices. The empty product is the
/// constant 1; the constant 0 has no `Product` representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Product {
    pos: u64,
    neg: u64,
}

impl Product {
    /// The empty product (constant 1).
    pub fn one() -> Self {
        Product::default()
    }

    pub fn literal(lit: Literal) -> Result<Self> {
        Self::from_literals([lit])
    }

    pub fn from_literals<I: IntoIterator<Item = Literal>>(lits: I) -> Result<Self> {
        let mut p = Product::one();
        for lit in lits {
            if lit.var >= ABSOLUTE_MAX_VARS {
                return Err(Error::VarOutOfRange {
                    var: lit.var,
                    n: ABSOLUTE_MAX_VARS,
                });
            }
            let bit = 1u64 << lit.var;
            if (p.pos | p.neg) & bit != 0 {
                return Err(Error::DuplicateVariable { var: lit.var });
            }
            if lit.positive {
                p.pos |= bit;
            } else {
                p.neg |= bit;
            }
        }
        Ok(p)
    }

    /// Product of uncomplemented literals, e.g. a coalition `{X1, X3}`.
    pub fn positive(vars: &[usize]) -> Result<Self> {
        Self::from_literals(vars.iter().map(|&v| Literal::pos(v)))
    }

    /// Full-polarity product over `vars` where bit `j` of `minterm` gives the polarity of `vars[j]`.
    pub fn minterm(vars: &[usize], minterm: u64) -> Result<Self> {
        Self::from_literals(
            vars.iter()
                .enumerate()
                .map(|(j, &v)| Literal {
                    var: v,
                    positive: minterm >> j & 1 == 1,
                }),
        )
    }

    pub fn pos_mask(&self) -> u64 {
        self.pos
    }

    pub fn neg_mask(&self) -> u64 {
        self.neg
    }

    /// Mask of every variable mentioned by the product.
    pub fn support(&self) -> u64 {
        self.pos | self.neg
    }

    /// Number of literals, ℓ(t).
    pub fn len(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_one(&self) -> bool {
        self.support() == 0
    }

    /// Highest variable index mentioned, if any.
    pub fn max_var(&self) -> Option<usize> {
        let s = self.support();
        (s != 0).then(|| 63 - s.leading_zeros() as usize)
    }

    pub fn contains_var(&self, var: usize) -> bool {
        var < 64 && self.support() >> var & 1 == 1
    }

    /// Literals in ascending variable order.
    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        (0..64)
            .filter(move |&v| self.support() >> v & 1 == 1)
            .map(move |v| Literal {
                var: v,
                positive: self.pos >> v & 1 == 1,
            })
    }

    /// Indices of the uncomplemented literals.
    pub fn positive_vars(&self) -> Vec<usize> {
        (0..64).filter(|&v| self.pos >> v & 1 == 1).collect()
    }

    pub fn with(&self, lit: Literal) -> Result<Self> {
        Self::from_literals(self.literals().chain([lit]))
    }

    /// True if the two products AND to 0 (some variable appears with opposite polarity).
    pub fn clashes_with(&self, other: &Product) -> bool {
        (self.pos & other.neg) | (self.neg & other.pos) != 0
    }

    /// Conjunction, or `None` when the result is the constant 0.
    pub fn and(&self, other: &Product) -> Option<Product> {
        (!self.clashes_with(other)).then_some(Product {
            pos: self.pos | other.pos,
            neg: self.neg | other.neg,
        })
    }

    /// `self ≤ other` as functions: every literal of `other` occurs in `self`.
    pub fn implies(&self, other: &Product) -> bool {
        other.pos & !self.pos == 0 && other.neg & !self.neg == 0
    }

    /// Value at an assignment encoded with bit `k` = X_{k+1}.
    pub fn eval(&self, assignment: u64) -> bool {
        assignment & self.support() == self.pos
    }

    /// Removes the variables of `t` after checking compatibility; `None` if the product clashes with `t`.
    pub fn quotient(&self, t: &Product) -> Option<Product> {
        (!self.clashes_with(t)).then(|| {
            let keep = !t.support();
            Product {
                pos: self.pos & keep,
                neg: self.neg & keep,
            }
        })
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, lit) in self.literals().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}

/// Parses the display form: whitespace-separated `X3` / `~X3` tokens, or `1`.
impl FromStr for Product {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Product::one());
        }
        let mut lits = Vec::new();
        for tok in s.split_whitespace() {
            let (positive, rest) = match tok.strip_prefix('~') {
                Some(r) => (false, r),
                None => (true, tok),
            };
            let idx: usize = rest
                .strip_prefix('X')
                .and_then(|d| d.parse().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::InvalidSystem(format!("bad literal `{tok}`")))?;
            lits.push(Literal {
                var: idx - 1,
                positive,
            });
        }
        Product::from_literals(lits)
    }
}

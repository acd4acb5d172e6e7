use std::fmt;

use super::product::{Literal, Product};
use super::sop::SopForm;
use crate::error::{Error, Result, ABSOLUTE_MAX_VARS};

/// Within-word masks selecting the assignments where variable `k` (k < 6) is 1.
const VAR_MASK: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    And,
    Or,
    Xor,
}

/// How a function responds to one of its variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// `f/X_m ≥ f/~X_m` and the two differ.
    MonoformPositive,
    /// `f/X_m ≤ f/~X_m` and the two differ.
    MonoformNegative,
    /// `f/X_m = f/~X_m`: the variable is a dummy.
    Independent,
    /// Neither quotient dominates the other.
    Biform,
}

impl Polarity {
    pub fn name(self) -> &'static str {
        match self {
            Polarity::MonoformPositive => "monoform-positive",
            Polarity::MonoformNegative => "monoform-negative",
            Polarity::Independent => "independent",
            Polarity::Biform => "biform",
        }
    }

    /// Whether the monotone-only Banzhaf formulas are valid for this variable.
    pub fn admits_monotone_formulas(self) -> bool {
        matches!(self, Polarity::MonoformPositive | Polarity::Independent)
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A switching function of `n` variables stored as a dense truth table.
///
/// Bit `i` of the table is the value at assignment `i`, where bit `k` of `i` is the
/// value of `X_{k+1}`. Quotients keep the ambient arity: `f/X_m` is still a function
/// of `n` variables that simply ignores `X_m`.
#[derive(Clone)]
pub struct SwitchingFunction {
    n: usize,
    words: Vec<u64>,
    sop: Option<SopForm>,
}

impl PartialEq for SwitchingFunction {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.words == other.words
    }
}

impl Eq for SwitchingFunction {}

impl fmt::Debug for SwitchingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len().min(64))
            .map(|i| if self.value(i) { '1' } else { '0' })
            .collect();
        f.debug_struct("SwitchingFunction")
            .field("n", &self.n)
            .field("table", &bits)
            .field("sop", &self.sop.as_ref().map(|s| s.to_string()))
            .finish()
    }
}

fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

fn valid_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

fn check_arity(n: usize) -> Result<()> {
    if n > ABSOLUTE_MAX_VARS {
        return Err(Error::TooManyVariables {
            n,
            cap: ABSOLUTE_MAX_VARS,
        });
    }
    Ok(())
}

impl SwitchingFunction {
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_arity(n)?;
        let fill = if value { valid_mask(n) } else { 0 };
        Ok(SwitchingFunction {
            n,
            words: vec![fill; word_count(n)],
            sop: None,
        })
    }

    /// Tabulates `eval` over all `2^n` assignments.
    pub fn from_fn(n: usize, mut eval: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut f = Self::constant(n, false)?;
        for i in 0..1u64 << n {
            if eval(i) {
                f.words[(i >> 6) as usize] |= 1 << (i & 63);
            }
        }
        Ok(f)
    }

    pub fn from_product(n: usize, t: &Product) -> Result<Self> {
        if let Some(v) = t.max_var().filter(|&v| v >= n) {
            return Err(Error::VarOutOfRange { var: v, n });
        }
        let mut f = Self::constant(n, true)?;
        for lit in t.literals() {
            f = f.and(&Self::literal(n, lit)?)?;
        }
        Ok(f)
    }

    pub fn literal(n: usize, lit: Literal) -> Result<Self> {
        if lit.var >= n {
            return Err(Error::VarOutOfRange { var: lit.var, n });
        }
        let mut f = Self::constant(n, false)?;
        let valid = valid_mask(n);
        if lit.var < 6 {
            let m = if lit.positive {
                VAR_MASK[lit.var]
            } else {
                !VAR_MASK[lit.var]
            };
            f.words.iter_mut().for_each(|w| *w = m & valid);
        } else {
            let stride = 1usize << (lit.var - 6);
            for (i, w) in f.words.iter_mut().enumerate() {
                if (i & stride != 0) == lit.positive {
                    *w = u64::MAX;
                }
            }
        }
        Ok(f)
    }

    /// OR of the given products; the sum-of-products view is retained.
    pub fn from_products(n: usize, products: &[Product]) -> Result<Self> {
        Self::from_sop(SopForm::new(n, products.to_vec())?)
    }

    pub fn from_sop(sop: SopForm) -> Result<Self> {
        let n = sop.n();
        let mut f = Self::constant(n, false)?;
        for t in sop.products() {
            f = f.or(&Self::from_product(n, t)?)?;
        }
        f.sop = Some(sop);
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows, `2^n`.
    pub fn len(&self) -> u64 {
        1 << self.n
    }

    pub fn sop(&self) -> Option<&SopForm> {
        self.sop.as_ref()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn value(&self, assignment: u64) -> bool {
        debug_assert!(assignment < self.len());
        self.words[(assignment >> 6) as usize] >> (assignment & 63) & 1 == 1
    }

    pub fn true_points(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len()).filter(move |&i| self.value(i))
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self) -> bool {
        let v = valid_mask(self.n);
        self.words.iter().all(|&w| w == v)
    }

    /// Number of true rows over all `n` variables.
    pub fn popcount(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Weight counted over the variables not in `excluding`.
    ///
    /// The function must be independent of every excluded variable, which makes the
    /// division of the full popcount by `2^|excluding|` exact.
    pub fn weight(&self, excluding: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &v in excluding {
            self.check_var(v)?;
            if self.depends_on(v) {
                return Err(Error::DependsOnExcluded { var: v });
            }
            mask |= 1 << v;
        }
        Ok(self.popcount() >> mask.count_ones())
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var >= self.n {
            return Err(Error::VarOutOfRange { var, n: self.n });
        }
        Ok(())
    }

    fn check_same_arity(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `f` with `X_var` fixed to `value`, still over `n` variables.
    fn cofactor(&self, var: usize, value: bool) -> Self {
        let mut words = self.words.clone();
        if var < 6 {
            let shift = 1u32 << var;
            let m = VAR_MASK[var];
            for w in &mut words {
                *w = if value {
                    let hi = *w & m;
                    hi | hi >> shift
                } else {
                    let lo = *w & !m;
                    lo | lo << shift
                };
            }
        } else {
            let stride = 1usize << (var - 6);
            for chunk in words.chunks_mut(2 * stride) {
                let (lo, hi) = chunk.split_at_mut(stride);
                if value {
                    lo.copy_from_slice(hi);
                } else {
                    hi.copy_from_slice(lo);
                }
            }
        }
        SwitchingFunction {
            n: self.n,
            words,
            sop: None,
        }
    }

    pub fn quotient_literal(&self, lit: Literal) -> Result<Self> {
        self.check_var(lit.var)?;
        let mut q = self.cofactor(lit.var, lit.positive);
        q.sop = self
            .sop
            .as_ref()
            .map(|s| s.quotient(&Product::literal(lit).expect("single literal")));
        Ok(q)
    }

    /// Boolean quotient `f/t`: every literal of `t` fixed to 1.
    pub fn quotient(&self, t: &Product) -> Result<Self> {
        if let Some(v) = t.max_var().filter(|&v| v >= self.n) {
            return Err(Error::VarOutOfRange { var: v, n: self.n });
        }
        let mut q = self.clone();
        q.sop = None;
        for lit in t.literals() {
            q = q.cofactor(lit.var, lit.positive);
        }
        q.sop = self.sop.as_ref().map(|s| s.quotient(t));
        Ok(q)
    }

    pub fn complement(&self) -> Self {
        let v = valid_mask(self.n);
        SwitchingFunction {
            n: self.n,
            words: self.words.iter().map(|w| !w & v).collect(),
            sop: None,
        }
    }

    pub fn combine(&self, other: &Self, op: BinaryOp) -> Result<Self> {
        self.check_same_arity(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| match op {
                BinaryOp::And => a & b,
                BinaryOp::Or => a | b,
                BinaryOp::Xor => a ^ b,
            })
            .collect();
        Ok(SwitchingFunction {
            n: self.n,
            words,
            sop: None,
        })
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.combine(other, BinaryOp::And)
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.combine(other, BinaryOp::Or)
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.combine(other, BinaryOp::Xor)
    }

    /// Pointwise `self ≤ other`.
    pub fn implies(&self, other: &Self) -> Result<bool> {
        self.check_same_arity(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0))
    }

    pub fn depends_on(&self, var: usize) -> bool {
        var < self.n && self.cofactor(var, true) != self.cofactor(var, false)
    }

    /// `∂f/∂X_m = f/X_m ⊕ f/~X_m`.
    pub fn boolean_difference(&self, m: usize) -> Result<Self> {
        self.check_var(m)?;
        self.cofactor(m, true).xor(&self.cofactor(m, false))
    }

    pub fn polarity(&self, m: usize) -> Result<Polarity> {
        self.check_var(m)?;
        let one = self.cofactor(m, true);
        let zero = self.cofactor(m, false);
        Ok(if one == zero {
            Polarity::Independent
        } else if zero.implies(&one)? {
            Polarity::MonoformPositive
        } else if one.implies(&zero)? {
            Polarity::MonoformNegative
        } else {
            Polarity::Biform
        })
    }

    /// Every variable is positively monoform or a dummy.
    pub fn is_monotone(&self) -> bool {
        self.first_non_monotone().is_none()
    }

    /// The lowest variable that breaks monotonicity, with its polarity.
    pub fn first_non_monotone(&self) -> Option<(usize, Polarity)> {
        (0..self.n).find_map(|m| {
            let p = self.polarity(m).expect("in range");
            (!p.admits_monotone_formulas()).then_some((m, p))
        })
    }

    pub(crate) fn require_monotone(&self) -> Result<()> {
        match self.first_non_monotone() {
            None => Ok(()),
            Some((var, p)) => Err(Error::NotMonotone {
                var,
                polarity: p.name(),
            }),
        }
    }

    /// `f` with `X_i` and `X_j` exchanged.
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<Self> {
        self.check_var(i)?;
        self.check_var(j)?;
        Self::from_fn(self.n, |x| {
            let bi = x >> i & 1;
            let bj = x >> j & 1;
            let y = x & !(1 << i | 1 << j) | bi << j | bj << i;
            self.value(y)
        })
    }

    /// Boole-Shannon expansion over `vars`: one quotient per full-polarity minterm.
    pub fn boole_shannon_expand(&self, vars: &[usize]) -> Result<Expansion> {
        let mut seen = 0u64;
        for &v in vars {
            self.check_var(v)?;
            if seen >> v & 1 == 1 {
                return Err(Error::DuplicateVariable { var: v });
            }
            seen |= 1 << v;
        }
        let k = vars.len();
        let mut entries = Vec::with_capacity(1 << k);
        for idx in 0..1u64 << k {
            // First listed variable is the most significant, so keys run ~X1~X2, ~X1X2, X1~X2, X1X2.
            let minterm = (0..k).fold(0u64, |acc, j| acc | (idx >> (k - 1 - j) & 1) << j);
            let key = Product::minterm(vars, minterm)?;
            let value = self.quotient(&key)?;
            entries.push((key, value));
        }
        Ok(Expansion {
            n: self.n,
            vars: vars.to_vec(),
            entries,
        })
    }
}

/// Result of a Boole-Shannon expansion: `f = ⋁ key ∧ (f/key)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    n: usize,
    vars: Vec<usize>,
    entries: Vec<(Product, SwitchingFunction)>,
}

impl Expansion {
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn entries(&self) -> &[(Product, SwitchingFunction)] {
        &self.entries
    }

    pub fn get(&self, key: &Product) -> Option<&SwitchingFunction> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Replaces every subfunction whose key satisfies `pred` with the constant 0.
    pub fn nullify(&mut self, mut pred: impl FnMut(&Product) -> bool) -> Vec<Product> {
        let mut hit = Vec::new();
        for (key, value) in &mut self.entries {
            if pred(key) {
                *value = SwitchingFunction::constant(self.n, false).expect("arity already checked");
                hit.push(*key);
            }
        }
        hit
    }

    /// ORs `key ∧ value` over all entries.
    pub fn recombine(&self) -> SwitchingFunction {
        let mut acc = SwitchingFunction::constant(self.n, false).expect("arity already checked");
        for (key, value) in &self.entries {
            let term = SwitchingFunction::from_product(self.n, key)
                .and_then(|k| k.and(value))
                .expect("same arity");
            acc = acc.or(&term).expect("same arity");
        }
        acc
    }
}

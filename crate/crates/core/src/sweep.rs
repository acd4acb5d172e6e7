//! k-out-of-n sweep: computed indices against their binomial closed forms, with and
//! without the forbidden pair {X1, X2}.

use std::fmt;

use crate::error::Result;
use crate::indices::full_report;
use crate::symmetric::{binomial_u64, SymmetricFunction};
use crate::voting::{check_cap, ForbiddenCoalition, VotingSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCheck {
    pub label: &'static str,
    pub computed: u64,
    pub expected: u64,
}

impl SweepCheck {
    pub fn ok(&self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub checks: Vec<SweepCheck>,
    /// Every voter within a symmetry class received the same values.
    pub classes_uniform: bool,
}

impl SweepRow {
    pub fn ok(&self) -> bool {
        self.classes_uniform && self.checks.iter().all(SweepCheck::ok)
    }

    pub fn get(&self, label: &str) -> Option<&SweepCheck> {
        self.checks.iter().find(|c| c.label == label)
    }
}

impl fmt::Display for SweepRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={:<2} k={:<2}", self.n, self.k)?;
        for c in &self.checks {
            write!(f, "  {} {}/{}", c.label, c.computed, c.expected)?;
        }
        f.write_str(if self.ok() { "  ok" } else { "  MISMATCH" })
    }
}

fn c(n: usize, k: usize) -> i64 {
    binomial_u64(n as i64, k as i64) as i64
}

fn b(n: usize, k: isize) -> u64 {
    binomial_u64(n as i64, k as i64)
}

fn uniform(values: &[u64]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Closed forms for k-out-of-n with the pair {X1, X2} forbidden:
/// `(tbp_pair_member, tbp_other)`.
pub fn pair_closed_forms(n: usize, k: usize) -> (u64, u64) {
    let (n, k) = (n as isize, k as isize);
    let member = b((n - 2).max(0) as usize, k - 1);
    let other = if n >= 3 {
        b((n - 3) as usize, k - 1) + 2 * b((n - 3) as usize, k - 2)
    } else {
        0
    };
    (member, other)
}

/// Checks one (n, k) pair.
pub fn sweep_row(n: usize, k: usize) -> Result<SweepRow> {
    let ki = k as isize;
    let unrestricted = c(n - 1, k - 1) as u64;
    let sys = VotingSystem::k_out_of_n(k as u64, n)?;
    let r = full_report(&sys, n)?;
    let (tbp, pgi) = (r.tbp(), r.pgi());
    let sym = SymmetricFunction::at_least((0..n).collect(), k)?;
    let sym_tbp = u64::try_from(sym.difference(0)?.weight()).expect("fits u64");

    let mut checks = vec![
        SweepCheck { label: "tbp", computed: tbp[0], expected: unrestricted },
        SweepCheck { label: "tbp_sym", computed: sym_tbp, expected: unrestricted },
        SweepCheck { label: "pgi", computed: pgi[0], expected: unrestricted },
    ];
    let mut classes_uniform = uniform(&tbp) && uniform(&pgi);

    if n >= 2 {
        let restricted = sys.with_forbidden(vec![ForbiddenCoalition::pair(0, 1)?])?;
        let r = full_report(&restricted, n)?;
        let (tbp, pgi) = (r.tbp(), r.pgi());
        let (member, other) = pair_closed_forms(n, k);
        // PGI of a pair member: MWCs through X1 that avoid X2.
        let pgi_member = b(n - 2, ki - 1);
        checks.push(SweepCheck { label: "pair_tbp_x1", computed: tbp[0], expected: member });
        checks.push(SweepCheck { label: "pair_pgi_x1", computed: pgi[0], expected: pgi_member });
        classes_uniform &= tbp[0] == tbp[1] && pgi[0] == pgi[1];
        if n >= 3 {
            let pgi_other = (c(n - 1, k - 1) - if k >= 3 { c(n - 3, k - 3) } else { 0 }) as u64;
            checks.push(SweepCheck { label: "pair_tbp_x3", computed: tbp[2], expected: other });
            checks.push(SweepCheck { label: "pair_pgi_x3", computed: pgi[2], expected: pgi_other });
            classes_uniform &= uniform(&tbp[2..]) && uniform(&pgi[2..]);
        }
    }
    Ok(SweepRow { n, k, checks, classes_uniform })
}

/// Every `1 ≤ k ≤ n ≤ n_max`.
pub fn sweep_kofn(n_max: usize, max_vars: usize) -> Result<Vec<SweepRow>> {
    check_cap(n_max, max_vars)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            rows.push(sweep_row(n, k)?);
        }
    }
    Ok(rows)
}

//! Voting power indices from Boolean quotients.
//!
//! A yes-no voting system is modelled as a switching function `f` over its voters.
//! Banzhaf-family indices, satisfaction indices and the Public Good Index are then
//! weights of quotients, differences and complements of `f`. Forbidden coalitions
//! are handled by nullifying the Boole-Shannon subfunctions they subsume.
//!
//! ```
//! use quotient_power::{full_report, VotingSystem, ForbiddenCoalition, DEFAULT_MAX_VARS};
//!
//! let sys = VotingSystem::weighted(65, &[47, 46, 17, 16, 2]).unwrap();
//! assert_eq!(full_report(&sys, DEFAULT_MAX_VARS).unwrap().tbp(), vec![9, 7, 5, 3, 3]);
//!
//! let sys = sys.with_forbidden(vec![ForbiddenCoalition::pair(0, 1).unwrap()]).unwrap();
//! assert_eq!(full_report(&sys, DEFAULT_MAX_VARS).unwrap().tbp(), vec![4, 3, 5, 3, 3]);
//! ```

pub mod boolean;
pub mod desirability;
pub mod error;
pub mod indices;
pub mod oracle;
pub mod render;
pub mod sweep;
pub mod symmetric;
pub mod system_file;
pub mod voting;

pub use boolean::{
    parse_dump, positive_product, to_dump, BinaryOp, Expansion, Literal, Polarity, Product,
    SopForm, SwitchingFunction,
};
pub use desirability::{
    compare_desirability, is_clique, is_dictator, is_dummy, is_veto, DesirabilityRelation,
    FederalModel,
};
pub use error::{Error, Result, ABSOLUTE_MAX_VARS, DEFAULT_MAX_VARS};
pub use indices::{
    full_report, nsat, pbp, pgi, pii, ppi, psat, sat, tbp, IndexReport, Rational, TbpFormula,
    VoterIndices,
};
pub use oracle::{oracle_mwcs, oracle_report, oracle_tbp, ORACLE_MAX_VARS};
pub use render::{render, ReportFormat};
pub use sweep::{sweep_kofn, SweepRow};
pub use symmetric::SymmetricFunction;
pub use system_file::SystemFile;
pub use voting::{
    apply_restrictions, decision_function, minimal_winning_coalitions, DecisionRule,
    ForbiddenCoalition, RestrictedSystem, VotingSystem, WeightRow,
};

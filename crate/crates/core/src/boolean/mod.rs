//! Switching functions as dense truth tables, with products, sum-of-products forms,
//! Boolean quotients and the Boole-Shannon expansion.

mod dump;
mod product;
mod sop;
mod table;

pub use dump::{parse_dump, to_dump};
pub use product::{Literal, Product};
pub use sop::{positive_product, SopForm};
pub use table::{BinaryOp, Expansion, Polarity, SwitchingFunction};

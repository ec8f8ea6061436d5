//! Verification records, the registry of checked claims, and sweep tables.

mod claims;
mod record;
mod table;

pub use claims::{run_suite, Suite, EXPECTED_DISCREPANCIES};
pub use record::{Relation, Verdict, VerificationRecord};
pub use table::SweepTable;

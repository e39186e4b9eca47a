//! IO companion for `lapsep-core`: the graph text format, machine-readable
//! output records, the embedded reference table of degree-one graph counts,
//! and the thread-parallel census driver.

pub mod census;
pub mod graphfile;
pub mod record;
pub mod table1;

pub mod batch;
pub mod embedding;
pub mod error;
pub mod gadgets;
pub mod generators;
pub mod io;
pub mod oracle;
pub mod penalty;
pub mod solver;

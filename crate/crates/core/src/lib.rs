pub mod cli;
pub mod collapsed;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod oracle;
pub mod paths;
pub mod search;
pub mod suites;

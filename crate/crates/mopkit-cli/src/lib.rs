//! Library surface of the command-line front end: spec and report
//! documents plus the verification suites.

pub mod doc;
pub mod suites;

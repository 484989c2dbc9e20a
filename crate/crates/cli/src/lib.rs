//! Library surface of the CLI crate: the verification suites, reused by the
//! binary and by the acceptance tests.

pub mod suites;

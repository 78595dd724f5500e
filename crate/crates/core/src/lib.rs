//! Entropic relevance of stochastic process models to event logs.
//!
//! The crate covers the whole pipeline: reading XES/CSV logs into trace
//! multisets, discovering directly-follows graphs at a trace-coverage
//! threshold, converting them to stochastic deterministic automata, and
//! scoring automata against logs in bits per trace.
//!
//! ```
//! use entrel::model::EventLog;
//! use entrel::discovery::{build_fdag, fdag_to_sdfa};
//! use entrel::relevance::relevance;
//!
//! let log = EventLog::from_variants([(vec!["a", "b"], 3), (vec!["a"], 1)]).unwrap();
//! let model = fdag_to_sdfa(&build_fdag(&log)).unwrap();
//! let report = relevance(&log, &model).unwrap();
//! assert_eq!(report.rho, 1.0);
//! ```

pub mod discovery;
mod error;
pub mod formats;
pub mod ingest;
pub mod model;
pub mod numeric;
pub mod relevance;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};

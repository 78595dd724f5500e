//! File formats: model JSON, Graphviz DOT, log export, sweep and frontier CSV.

mod dot;
mod export;
mod json;
pub mod pareto;
pub mod sweep;

pub use dot::{fdag_to_dot, sdfa_to_dot};
pub use export::{write_csv, write_xes};
pub use json::{fdag_to_json, load_model, model_from_json, sdfa_to_json, Model};

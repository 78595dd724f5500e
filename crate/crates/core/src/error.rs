use std::fmt;
use std::path::PathBuf;

use crate::model::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("event log is empty; relevance is undefined for zero traces")]
    EmptyLog,

    #[error("invalid action label {0:?}")]
    InvalidAction(String),

    #[error("{0}")]
    Domain(String),

    #[error("malformed XML at line {line}, column {column}: {message}")]
    Xml {
        line: u64,
        column: u64,
        message: String,
    },

    #[error("event {event_index} of trace {trace_index} has no string attribute {key:?}")]
    MissingClassifier {
        trace_index: usize,
        event_index: usize,
        key: String,
    },

    #[error("trace {trace_index}: unparseable timestamp {value:?}")]
    XesTimestamp { trace_index: usize, value: String },

    #[error("missing CSV column {0:?}")]
    MissingColumn(String),

    #[error("CSV row {row}: unparseable timestamp {value:?}")]
    CsvTimestamp { row: u64, value: String },

    #[error("CSV row {row}: empty case identifier")]
    EmptyCaseId { row: u64 },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON model: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid model: {0}")]
    Model(String),

    #[error("model fails validation:\n{}", DiagnosticList(.0))]
    InvalidSdfa(Vec<Diagnostic>),

    #[error("unsupported format {0:?}")]
    UnknownFormat(String),

    /// Another error, tagged with the file it came from.
    #[error("{}: {source}", path.display())]
    InFile { path: PathBuf, source: Box<Error> },
}

impl Error {
    /// Whether the failure is about inputs (unreadable, undecodable, or
    /// misnamed files) rather than a computation on valid inputs.
    pub fn is_input_failure(&self) -> bool {
        if let Error::InFile { source, .. } = self {
            return source.is_input_failure();
        }
        matches!(
            self,
            Error::Io(_)
                | Error::File { .. }
                | Error::Xml { .. }
                | Error::Csv(_)
                | Error::MissingColumn(_)
                | Error::CsvTimestamp { .. }
                | Error::XesTimestamp { .. }
                | Error::MissingClassifier { .. }
                | Error::EmptyCaseId { .. }
                | Error::UnknownFormat(_)
                | Error::Json(_)
        )
    }
}

impl Error {
    pub fn in_file(self, path: &std::path::Path) -> Error {
        match self {
            e @ (Error::File { .. } | Error::InFile { .. }) => e,
            e => Error::InFile {
                path: path.to_owned(),
                source: Box::new(e),
            },
        }
    }
}

struct DiagnosticList<'a>(&'a [Diagnostic]);

impl fmt::Display for DiagnosticList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {d}")?;
        }
        Ok(())
    }
}

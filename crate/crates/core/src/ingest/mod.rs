//! Reading event logs from XES and CSV.
//!
//! Events of one case become one trace, ordered by timestamp with document
//! order breaking ties. A case with any event lacking a timestamp keeps
//! document order throughout. Lifecycle attributes are ignored; every event
//! is one action occurrence.

mod csv;
mod position;
mod stats;
mod timestamp;
mod xes;

pub use self::csv::parse_csv;
pub use self::stats::{log_stats, LogStats};
pub use self::xes::parse_xes;

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use chrono::{DateTime, Utc};
use flate2::read::MultiGzDecoder;

use crate::error::{Error, Result};
use crate::model::{EventLog, EventLogBuilder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestConfig {
    pub case_column: String,
    pub activity_column: String,
    /// When `None`, rows keep file order within a case.
    pub timestamp_column: Option<String>,
    /// chrono `strftime` pattern; when `None` common ISO-8601 layouts are tried.
    pub timestamp_format: Option<String>,
    pub delimiter: u8,
    pub classifier_key: String,
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            case_column: "case_id".to_owned(),
            activity_column: "activity".to_owned(),
            timestamp_column: Some("timestamp".to_owned()),
            timestamp_format: None,
            delimiter: b',',
            classifier_key: "concept:name".to_owned(),
        }
    }
}

impl IngestConfig {
    pub(crate) fn check_columns(&self) -> Result<()> {
        let mut cols = vec![&self.case_column, &self.activity_column];
        if let Some(t) = &self.timestamp_column {
            cols.push(t);
        }
        for (i, a) in cols.iter().enumerate() {
            if cols[..i].contains(a) {
                return Err(Error::Domain(format!("column {a:?} configured twice")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogFormat {
    Xes,
    Csv,
}

/// Format and compression from a file name: `.xes`, `.csv`, optionally
/// followed by `.gz`.
pub fn detect_format(path: &Path) -> Result<(LogFormat, bool)> {
    let name = path
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or_default()
        .to_ascii_lowercase();
    let (stem, gz) = match name.strip_suffix(".gz") {
        Some(s) => (s, true),
        None => (name.as_str(), false),
    };
    if stem.ends_with(".xes") {
        Ok((LogFormat::Xes, gz))
    } else if stem.ends_with(".csv") {
        Ok((LogFormat::Csv, gz))
    } else {
        Err(Error::UnknownFormat(name))
    }
}

/// Reads a log file, choosing the parser from its suffix.
pub fn read_log(path: &Path, cfg: &IngestConfig) -> Result<EventLog> {
    let (format, gz) = detect_format(path)?;
    let file = File::open(path).map_err(|source| Error::File {
        path: path.to_owned(),
        source,
    })?;
    let input: Box<dyn BufRead> = if gz {
        Box::new(BufReader::new(MultiGzDecoder::new(BufReader::new(file))))
    } else {
        Box::new(BufReader::new(file))
    };
    match format {
        LogFormat::Xes => parse_xes(input, cfg),
        LogFormat::Csv => parse_csv(input, cfg),
    }
}

/// One event of a case being assembled.
#[derive(Debug, Clone)]
pub(crate) struct CaseEvent {
    pub activity: String,
    pub timestamp: Option<DateTime<Utc>>,
}

/// Orders a case's events and adds the resulting trace to `log`.
pub(crate) fn push_case(log: &mut EventLogBuilder, events: &mut Vec<CaseEvent>) -> Result<()> {
    if events.iter().all(|e| e.timestamp.is_some()) {
        // stable: equal timestamps keep document order
        events.sort_by_key(|e| e.timestamp);
    }
    log.add_trace(events.iter().map(|e| e.activity.as_str()), 1)?;
    events.clear();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_from_suffixes() {
        assert_eq!(
            detect_format(Path::new("x.xes")).unwrap(),
            (LogFormat::Xes, false)
        );
        assert_eq!(
            detect_format(Path::new("a/B.XES.gz")).unwrap(),
            (LogFormat::Xes, true)
        );
        assert_eq!(
            detect_format(Path::new("x.csv")).unwrap(),
            (LogFormat::Csv, false)
        );
        assert_eq!(
            detect_format(Path::new("x.csv.gz")).unwrap(),
            (LogFormat::Csv, true)
        );
        assert!(detect_format(Path::new("x.json")).is_err());
    }

    #[test]
    fn duplicate_columns_are_rejected() {
        let cfg = IngestConfig {
            activity_column: "case_id".into(),
            ..IngestConfig::default()
        };
        assert!(cfg.check_columns().is_err());
    }
}

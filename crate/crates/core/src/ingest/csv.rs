use std::collections::HashMap;
use std::io::Read;

use super::timestamp::{parse_iso, parse_with};
use super::{push_case, CaseEvent, IngestConfig};
use crate::error::{Error, Result};
use crate::model::EventLog;

/// Reads an RFC 4180 CSV with a header row. Rows are grouped by case id;
/// a row whose activity cell is empty declares its case without adding an
/// event, which is how empty traces are written.
pub fn parse_csv<R: Read>(input: R, cfg: &IngestConfig) -> Result<EventLog> {
    cfg.check_columns()?;
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(cfg.delimiter)
        .has_headers(true)
        .flexible(false)
        .from_reader(input);
    let headers = reader.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::MissingColumn(name.to_owned()))
    };
    let case_col = column(&cfg.case_column)?;
    let activity_col = column(&cfg.activity_column)?;
    let time_col = cfg.timestamp_column.as_deref().map(column).transpose()?;

    let mut order: Vec<String> = Vec::new();
    let mut cases: HashMap<String, Vec<CaseEvent>> = HashMap::new();
    let mut record = csv::StringRecord::new();
    while reader.read_record(&mut record)? {
        let row = record.position().map_or(0, |p| p.line());
        let case = record.get(case_col).unwrap_or_default().trim();
        if case.is_empty() {
            return Err(Error::EmptyCaseId { row });
        }
        let events = match cases.get_mut(case) {
            Some(v) => v,
            None => {
                order.push(case.to_owned());
                cases.entry(case.to_owned()).or_default()
            }
        };
        let activity = record.get(activity_col).unwrap_or_default().trim();
        if activity.is_empty() {
            continue;
        }
        let timestamp = match time_col.map(|c| record.get(c).unwrap_or_default().trim()) {
            None | Some("") => None,
            Some(raw) => {
                let parsed = match &cfg.timestamp_format {
                    Some(fmt) => parse_with(raw, fmt),
                    None => parse_iso(raw),
                };
                Some(parsed.ok_or_else(|| Error::CsvTimestamp {
                    row,
                    value: raw.to_owned(),
                })?)
            }
        };
        events.push(CaseEvent {
            activity: activity.to_owned(),
            timestamp,
        });
    }

    let mut log = EventLog::builder();
    for case in order {
        let mut events = cases.remove(&case).expect("every listed case is present");
        push_case(&mut log, &mut events)?;
    }
    Ok(log.build())
}

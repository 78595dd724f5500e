use std::io::{BufRead, BufReader};

use quick_xml::events::{BytesStart, Event};
use quick_xml::{Reader, XmlVersion};

use super::position::LineTracker;
use super::timestamp::parse_iso;
use super::{push_case, CaseEvent, IngestConfig};
use crate::error::{Error, Result};
use crate::model::EventLog;

const TIMESTAMP_KEY: &str = "time:timestamp";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scope {
    Log,
    Trace,
    Event,
    Other,
}

#[derive(Default)]
struct PendingEvent {
    activity: Option<String>,
    timestamp: Option<String>,
}

/// Streams an XES document into an [`EventLog`]. Only attributes that are
/// direct children of an `<event>` are consulted; trace-level, global, and
/// nested attributes are ignored.
pub fn parse_xes<R: BufRead>(input: R, cfg: &IngestConfig) -> Result<EventLog> {
    let mut reader =
        Reader::from_reader(BufReader::with_capacity(64 * 1024, LineTracker::new(input)));
    reader.config_mut().trim_text(true);

    let mut log = EventLog::builder();
    let mut buf = Vec::new();
    let mut stack: Vec<Scope> = Vec::new();
    let mut case: Vec<CaseEvent> = Vec::new();
    let mut event = PendingEvent::default();
    let mut trace_index = 0usize;
    let mut event_index = 0usize;

    let xml_error = |reader: &Reader<BufReader<LineTracker<R>>>, message: String| {
        let (line, column) = reader.get_ref().get_ref().locate(reader.error_position());
        Error::Xml {
            line,
            column,
            message,
        }
    };

    loop {
        let ev = match reader.read_event_into(&mut buf) {
            Ok(ev) => ev,
            Err(e) => return Err(xml_error(&reader, e.to_string())),
        };
        match ev {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let empty = matches!(ev, Event::Empty(_));
                let parent = stack.last().copied();
                let scope = match (parent, e.local_name().as_ref()) {
                    (None, "log") => Scope::Log,
                    (Some(Scope::Log), "trace") => {
                        case.clear();
                        event_index = 0;
                        Scope::Trace
                    }
                    (Some(Scope::Trace), "event") => {
                        event = PendingEvent::default();
                        Scope::Event
                    }
                    (Some(Scope::Event), _) => {
                        read_event_attribute(e, cfg, &mut event)
                            .map_err(|m| xml_error(&reader, m))?;
                        Scope::Other
                    }
                    _ => Scope::Other,
                };
                if empty {
                    close(
                        scope,
                        &mut log,
                        &mut case,
                        &mut event,
                        cfg,
                        &mut trace_index,
                        &mut event_index,
                    )?;
                } else {
                    stack.push(scope);
                }
            }
            Event::End(_) => {
                if let Some(scope) = stack.pop() {
                    close(
                        scope,
                        &mut log,
                        &mut case,
                        &mut event,
                        cfg,
                        &mut trace_index,
                        &mut event_index,
                    )?;
                }
            }
            Event::Eof => break,
            _ => {}
        }
        buf.clear();
    }
    if !stack.is_empty() {
        let (line, column) = reader.get_ref().get_ref().locate(reader.buffer_position());
        return Err(Error::Xml {
            line,
            column,
            message: "unexpected end of document".to_owned(),
        });
    }
    Ok(log.build())
}

fn close(
    scope: Scope,
    log: &mut crate::model::EventLogBuilder,
    case: &mut Vec<CaseEvent>,
    event: &mut PendingEvent,
    cfg: &IngestConfig,
    trace_index: &mut usize,
    event_index: &mut usize,
) -> Result<()> {
    match scope {
        Scope::Trace => {
            push_case(log, case)?;
            *trace_index += 1;
        }
        Scope::Event => {
            let pending = std::mem::take(event);
            let activity = pending.activity.ok_or_else(|| Error::MissingClassifier {
                trace_index: *trace_index,
                event_index: *event_index,
                key: cfg.classifier_key.clone(),
            })?;
            let timestamp = match pending.timestamp {
                None => None,
                Some(raw) => Some(parse_iso(&raw).ok_or(Error::XesTimestamp {
                    trace_index: *trace_index,
                    value: raw,
                })?),
            };
            case.push(CaseEvent {
                activity,
                timestamp,
            });
            *event_index += 1;
        }
        Scope::Log | Scope::Other => {}
    }
    Ok(())
}

fn read_event_attribute(
    e: &BytesStart<'_>,
    cfg: &IngestConfig,
    event: &mut PendingEvent,
) -> std::result::Result<(), String> {
    let kind = e.local_name();
    let wanted_activity = kind.as_ref() == "string";
    let wanted_time = kind.as_ref() == "date";
    if !wanted_activity && !wanted_time {
        return Ok(());
    }
    let mut key = None;
    let mut value = None;
    for attr in e.attributes() {
        let attr = attr.map_err(|err| err.to_string())?;
        let v = attr
            .normalized_value(XmlVersion::Implicit1_0)
            .map_err(|err| err.to_string())?;
        match attr.key.local_name().as_ref() {
            "key" => key = Some(v.into_owned()),
            "value" => value = Some(v.into_owned()),
            _ => {}
        }
    }
    let (Some(key), Some(value)) = (key, value) else {
        return Ok(());
    };
    if wanted_activity && key == cfg.classifier_key {
        event.activity = Some(value.trim().to_owned());
    } else if wanted_time && key == TIMESTAMP_KEY {
        event.timestamp = Some(value);
    }
    Ok(())
}

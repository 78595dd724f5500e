//! C interface to `entrel`.
//!
//! Objects are opaque handles created by `er_*_open`/`er_*_from_*` and
//! released with the matching `_free`. Every fallible call returns an
//! `ErStatus`; on failure `er_last_error_message` describes the error for
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use entrel::discovery::{build_fdag, fdag_to_sdfa, filter_log, prefix_tree_sdfa, Threshold};
use entrel::formats::{load_model, model_from_json};
use entrel::ingest::{parse_csv, parse_xes, read_log, IngestConfig};
use entrel::model::{EventLog, Sdfa};
use entrel::relevance::{h0, relevance, relevance_lower_bound};
use entrel::Error;

/// Result codes. `ER_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Io = 3,
    Parse = 4,
    InvalidModel = 5,
    EmptyLog = 6,
    Panic = 7,
}

/// An event log.
pub struct ErLog {
    log: EventLog,
}

/// A stochastic deterministic finite automaton.
pub struct ErSdfa {
    sdfa: Sdfa,
}

/// Relevance of a model to a log and its constituents, in bits per trace.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ErRelevance {
    pub rho: f64,
    pub selector_bits: f64,
    pub background_bits: f64,
    pub model_bits: f64,
    pub relevance: f64,
    pub fitting_traces: u64,
    pub nonfitting_traces: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> ErStatus {
    match e {
        Error::InFile { source, .. } => status_of(source),
        Error::EmptyLog => ErStatus::EmptyLog,
        Error::InvalidSdfa(_) | Error::Model(_) => ErStatus::InvalidModel,
        Error::Domain(_) | Error::InvalidAction(_) | Error::UnknownFormat(_) => {
            ErStatus::InvalidArgument
        }
        Error::Io(_) | Error::File { .. } => ErStatus::Io,
        _ => ErStatus::Parse,
    }
}

struct Fail(ErStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard<F>(f: F) -> ErStatus
where
    F: FnOnce() -> Result<(), Fail>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ErStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_owned());
            ErStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(ErStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(ErStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn bytes<'a>(data: *const u8, len: usize) -> Result<&'a [u8], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null("data"));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn er_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn er_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Reads a `.xes`, `.csv`, `.xes.gz` or `.csv.gz` file with default
/// settings (`concept:name`; CSV columns `case_id`, `activity`, `timestamp`).
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_log_open(path: *const c_char, out: *mut *mut ErLog) -> ErStatus {
    guard(|| {
        let path = c_str(path, "path")?;
        let log = read_log(Path::new(path), &IngestConfig::default())?;
        put(out, ErLog { log })
    })
}

/// Parses an uncompressed XES document.
///
/// # Safety
/// `data` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_log_from_xes(
    data: *const u8,
    len: usize,
    out: *mut *mut ErLog,
) -> ErStatus {
    guard(|| {
        let log = parse_xes(bytes(data, len)?, &IngestConfig::default())?;
        put(out, ErLog { log })
    })
}

/// Parses a CSV document with columns `case_id`, `activity`, `timestamp`.
///
/// # Safety
/// `data` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_log_from_csv(
    data: *const u8,
    len: usize,
    out: *mut *mut ErLog,
) -> ErStatus {
    guard(|| {
        let log = parse_csv(bytes(data, len)?, &IngestConfig::default())?;
        put(out, ErLog { log })
    })
}

/// # Safety
/// `log` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn er_log_free(log: *mut ErLog) {
    if !log.is_null() {
        drop(Box::from_raw(log));
    }
}

/// Number of traces, 0 for NULL.
///
/// # Safety
/// `log` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn er_log_trace_count(log: *const ErLog) -> u64 {
    log.as_ref().map_or(0, |l| l.log.total())
}

/// Number of distinct traces, 0 for NULL.
///
/// # Safety
/// `log` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn er_log_variant_count(log: *const ErLog) -> usize {
    log.as_ref().map_or(0, |l| l.log.variant_count())
}

/// Number of events, 0 for NULL.
///
/// # Safety
/// `log` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn er_log_event_count(log: *const ErLog) -> u64 {
    log.as_ref().map_or(0, |l| l.log.total_events())
}

/// Loads an SDFA or FDAG JSON file; FDAGs are converted.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_sdfa_open(path: *const c_char, out: *mut *mut ErSdfa) -> ErStatus {
    guard(|| {
        let path = c_str(path, "path")?;
        let sdfa = load_model(Path::new(path))?.into_sdfa()?;
        put(out, ErSdfa { sdfa })
    })
}

/// Parses SDFA or FDAG JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_sdfa_from_json(json: *const c_char, out: *mut *mut ErSdfa) -> ErStatus {
    guard(|| {
        let sdfa = model_from_json(c_str(json, "json")?)?.into_sdfa()?;
        put(out, ErSdfa { sdfa })
    })
}

/// Directly-follows model of the most frequent variants covering
/// `threshold` of the log's traces, converted to an SDFA.
///
/// # Safety
/// `log` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_sdfa_discover(
    log: *const ErLog,
    threshold: f64,
    out: *mut *mut ErSdfa,
) -> ErStatus {
    guard(|| {
        let log = borrow(log, "log")?;
        if log.log.is_empty() {
            return Err(Error::EmptyLog.into());
        }
        let k = Threshold::new(threshold)?;
        let sdfa = fdag_to_sdfa(&build_fdag(&filter_log(&log.log, k)))?;
        put(out, ErSdfa { sdfa })
    })
}

/// Prefix tree acceptor of the log.
///
/// # Safety
/// `log` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_sdfa_prefix_tree(log: *const ErLog, out: *mut *mut ErSdfa) -> ErStatus {
    guard(|| {
        let log = borrow(log, "log")?;
        put(
            out,
            ErSdfa {
                sdfa: prefix_tree_sdfa(&log.log),
            },
        )
    })
}

/// Writes state and transition counts; either pointer may be NULL.
///
/// # Safety
/// `sdfa` must be a live handle; non-NULL outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_sdfa_size(
    sdfa: *const ErSdfa,
    states: *mut usize,
    transitions: *mut usize,
) -> ErStatus {
    guard(|| {
        let a = &borrow(sdfa, "sdfa")?.sdfa;
        if let Some(s) = states.as_mut() {
            *s = a.state_count();
        }
        if let Some(t) = transitions.as_mut() {
            *t = a.transition_count();
        }
        Ok(())
    })
}

/// # Safety
/// `sdfa` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn er_sdfa_free(sdfa: *mut ErSdfa) {
    if !sdfa.is_null() {
        drop(Box::from_raw(sdfa));
    }
}

/// Entropic relevance of `sdfa` to `log`.
///
/// # Safety
/// `log` and `sdfa` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_relevance(
    log: *const ErLog,
    sdfa: *const ErSdfa,
    out: *mut ErRelevance,
) -> ErStatus {
    guard(|| {
        let log = borrow(log, "log")?;
        let sdfa = borrow(sdfa, "sdfa")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let r = relevance(&log.log, &sdfa.sdfa)?;
        *out = ErRelevance {
            rho: r.rho,
            selector_bits: r.selector_bits,
            background_bits: r.background_bits,
            model_bits: r.model_bits,
            relevance: r.relevance,
            fitting_traces: r.fitting_traces,
            nonfitting_traces: r.nonfitting_traces,
        };
        Ok(())
    })
}

/// Entropy of the log's variant distribution in bits.
///
/// # Safety
/// `log` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_relevance_lower_bound(log: *const ErLog, out: *mut f64) -> ErStatus {
    guard(|| {
        let log = borrow(log, "log")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = relevance_lower_bound(&log.log)?;
        Ok(())
    })
}

/// Binary entropy of `p` in bits.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn er_h0(p: f64, out: *mut f64) -> ErStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = h0(p)?;
        Ok(())
    })
}

use chrono::{DateTime, NaiveDate, NaiveDateTime, Utc};

const NAIVE_LAYOUTS: [&str; 4] = [
    "%Y-%m-%dT%H:%M:%S%.f",
    "%Y-%m-%d %H:%M:%S%.f",
    "%Y/%m/%d %H:%M:%S%.f",
    "%d-%m-%Y %H:%M:%S%.f",
];

/// ISO-8601 / RFC 3339, falling back to zone-less layouts read as UTC.
pub(crate) fn parse_iso(s: &str) -> Option<DateTime<Utc>> {
    let s = s.trim();
    if let Ok(t) = DateTime::parse_from_rfc3339(s) {
        return Some(t.with_timezone(&Utc));
    }
    if let Ok(t) = DateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S%.f%z") {
        return Some(t.with_timezone(&Utc));
    }
    for layout in NAIVE_LAYOUTS {
        if let Ok(t) = NaiveDateTime::parse_from_str(s, layout) {
            return Some(t.and_utc());
        }
    }
    NaiveDate::parse_from_str(s, "%Y-%m-%d")
        .ok()
        .and_then(|d| d.and_hms_opt(0, 0, 0))
        .map(|t| t.and_utc())
}

/// Parses with an explicit `strftime` pattern, with or without a zone.
pub(crate) fn parse_with(s: &str, pattern: &str) -> Option<DateTime<Utc>> {
    let s = s.trim();
    if let Ok(t) = DateTime::parse_from_str(s, pattern) {
        return Some(t.with_timezone(&Utc));
    }
    if let Ok(t) = NaiveDateTime::parse_from_str(s, pattern) {
        return Some(t.and_utc());
    }
    NaiveDate::parse_from_str(s, pattern)
        .ok()
        .and_then(|d| d.and_hms_opt(0, 0, 0))
        .map(|t| t.and_utc())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_variants() {
        let a = parse_iso("2011-10-01T00:38:44.546+02:00").unwrap();
        let b = parse_iso("2011-09-30T22:38:44.546Z").unwrap();
        assert_eq!(a, b);
        assert!(parse_iso("2011-10-01T00:38:44").is_some());
        assert!(parse_iso("2011-10-01 00:38:44.1").is_some());
        assert!(parse_iso("2011-10-01").is_some());
        assert!(parse_iso("yesterday").is_none());
    }

    #[test]
    fn explicit_patterns() {
        assert!(parse_with("01.02.2020 10:00", "%d.%m.%Y %H:%M").is_some());
        assert!(parse_with("2020-02-01 10:00 +0100", "%Y-%m-%d %H:%M %z").is_some());
        assert!(parse_with("2020-02-01", "%d.%m.%Y %H:%M").is_none());
    }
}

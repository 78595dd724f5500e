//! Running-example automata and logs for unit tests.

use crate::model::{EventLog, Sdfa};

pub(crate) fn a1() -> Sdfa {
    let mut b = Sdfa::builder();
    b.initial("s0");
    for (from, act, to, p) in [
        ("s0", "a", "s1", 0.5),
        ("s1", "b", "s2", 0.5),
        ("s2", "c", "s3", 0.5),
        ("s3", "d", "s4", 0.5),
        ("s4", "d", "s5", 0.25),
        ("s4", "e", "s6", 0.25),
    ] {
        b.transition(from, act, to, p).unwrap();
    }
    b.build().unwrap()
}

pub(crate) fn a2() -> Sdfa {
    let mut b = Sdfa::builder();
    b.initial("q0");
    for (from, act, to, p) in [
        ("q0", "a", "q1", 3.0 / 4.0),
        ("q1", "b", "q2", 1.0 / 2.0),
        ("q2", "c", "q3", 1.0 / 2.0),
        ("q3", "d", "q4", 1.0 / 4.0),
        ("q3", "e", "q5", 1.0 / 4.0),
        ("q4", "d", "q4", 1.0 / 5.0),
        ("q4", "e", "q5", 2.0 / 5.0),
    ] {
        b.transition(from, act, to, p).unwrap();
    }
    b.build().unwrap()
}

pub(crate) fn e1() -> EventLog {
    EventLog::from_variants([
        (vec![], 32),
        (vec!["a"], 16),
        (vec!["a", "b"], 8),
        (vec!["a", "b", "c"], 4),
        (vec!["a", "b", "c", "d"], 2),
        (vec!["a", "b", "c", "d", "d"], 1),
        (vec!["a", "b", "c", "d", "e"], 1),
    ])
    .unwrap()
}

pub(crate) fn e2() -> EventLog {
    EventLog::from_variants([
        (vec![], 250),
        (vec!["a", "b"], 250),
        (vec!["a", "b", "c"], 250),
        (vec!["a", "b", "c", "d"], 50),
        (vec!["a", "b", "c", "e"], 50),
        (vec!["a", "b", "c", "d", "e"], 50),
        (vec!["a", "b", "c", "e", "d"], 50),
        (vec!["a", "b", "c", "d", "d", "e"], 50),
    ])
    .unwrap()
}

#!/usr/bin/env python3
"""Writes a synthetic traffic-fines style XES log, gzipped, with a fixed seed.

usage: gen_fines_excerpt.py OUT.xes.gz [TRACES]
"""
import gzip
import random
import sys
from datetime import datetime, timedelta, timezone
from xml.sax.saxutils import quoteattr

CREATE = "Create Fine"
SEND = "Send Fine"
NOTIFY = "Insert Fine Notification"
PENALTY = "Add penalty"
PAY = "Payment"
CREDIT = "Send for Credit Collection"
DATE_APPEAL = "Insert Date Appeal to Prefecture"
SEND_APPEAL = "Send Appeal to Prefecture"
RESULT = "Receive Result Appeal from Prefecture"
NOTIFY_RESULT = "Notify Result Appeal to Offender"
JUDGE = "Appeal to Judge"


def trace(rng):
    t = [CREATE]
    r = rng.random()
    if r < 0.38:
        t.append(PAY)
        if rng.random() < 0.05:
            t.append(PAY)
        return t
    t.append(SEND)
    if rng.random() < 0.03:
        return t
    t.append(NOTIFY)
    if rng.random() < 0.12:
        t.append(DATE_APPEAL)
        t.append(SEND_APPEAL)
        if rng.random() < 0.5:
            t += [RESULT, NOTIFY_RESULT]
        if rng.random() < 0.1:
            t.append(JUDGE)
        return t
    t.append(PENALTY)
    r = rng.random()
    if r < 0.45:
        t.append(CREDIT)
    elif r < 0.85:
        t.append(PAY)
        while rng.random() < 0.15:
            t.append(PAY)
    elif r < 0.93:
        t += [PAY, CREDIT]
    if rng.random() < 0.02:
        i = rng.randrange(1, len(t))
        t[i - 1], t[i] = t[i], t[i - 1]
    return t


def main():
    out = sys.argv[1]
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 4000
    rng = random.Random(20140101)
    base = datetime(2006, 1, 1, tzinfo=timezone.utc)
    with gzip.GzipFile(out, "wb", mtime=0) as f:
        w = lambda s: f.write((s + "\n").encode())
        w('<?xml version="1.0" encoding="UTF-8"?>')
        w('<log xes.version="1.0" xmlns="http://www.xes-standard.org/">')
        w('<extension name="Concept" prefix="concept" uri="http://www.xes-standard.org/concept.xesext"/>')
        w('<extension name="Time" prefix="time" uri="http://www.xes-standard.org/time.xesext"/>')
        for i in range(n):
            w("<trace>")
            w(f'<string key="concept:name" value="F{i:06d}"/>')
            ts = base + timedelta(days=rng.randrange(0, 3000))
            for a in trace(rng):
                ts += timedelta(days=rng.randrange(1, 90))
                w(f'<event><string key="concept:name" value={quoteattr(a)}/>'
                  f'<date key="time:timestamp" value="{ts.isoformat()}"/></event>')
            w("</trace>")
        w("</log>")


if __name__ == "__main__":
    main()

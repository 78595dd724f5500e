use std::collections::VecDeque;
use std::io::{self, Read};

const WINDOW: usize = 1 << 20;

/// Reader adapter that remembers the most recent bytes read so a byte
/// offset near the read head can be turned into a line and column without
/// buffering the whole input.
pub(crate) struct LineTracker<R> {
    inner: R,
    chunks: VecDeque<Vec<u8>>,
    window_len: usize,
    // Offset of the first byte still held in `chunks`.
    base_offset: u64,
    // Newlines seen before `base_offset`.
    base_lines: u64,
    // Offset just past the last newline before `base_offset`.
    base_line_start: u64,
}

impl<R: Read> LineTracker<R> {
    pub(crate) fn new(inner: R) -> Self {
        LineTracker {
            inner,
            chunks: VecDeque::new(),
            window_len: 0,
            base_offset: 0,
            base_lines: 0,
            base_line_start: 0,
        }
    }

    /// 1-based line and column of byte `offset`. Offsets that fell out of the
    /// window resolve to the start of the window.
    pub(crate) fn locate(&self, offset: u64) -> (u64, u64) {
        let mut line = self.base_lines;
        let mut line_start = self.base_line_start;
        let mut pos = self.base_offset;
        'outer: for chunk in &self.chunks {
            for &b in chunk {
                if pos >= offset {
                    break 'outer;
                }
                pos += 1;
                if b == b'\n' {
                    line += 1;
                    line_start = pos;
                }
            }
        }
        (line + 1, pos - line_start + 1)
    }
}

impl<R: Read> Read for LineTracker<R> {
    fn read(&mut self, buf: &mut [u8]) -> io::Result<usize> {
        let n = self.inner.read(buf)?;
        if n > 0 {
            self.chunks.push_back(buf[..n].to_vec());
            self.window_len += n;
            while self.window_len - self.chunks.front().map_or(0, Vec::len) >= WINDOW {
                let old = self.chunks.pop_front().expect("non-empty");
                self.window_len -= old.len();
                if let Some(last) = old.iter().rposition(|&b| b == b'\n') {
                    self.base_line_start = self.base_offset + last as u64 + 1;
                }
                self.base_lines += old.iter().filter(|&&b| b == b'\n').count() as u64;
                self.base_offset += old.len() as u64;
            }
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locates_lines_and_columns() {
        let mut t = LineTracker::new(&b"ab\ncd\n\nxyz"[..]);
        let mut sink = Vec::new();
        t.read_to_end(&mut sink).unwrap();
        assert_eq!(t.locate(0), (1, 1));
        assert_eq!(t.locate(1), (1, 2));
        assert_eq!(t.locate(3), (2, 1));
        assert_eq!(t.locate(7), (4, 1));
        assert_eq!(t.locate(9), (4, 3));
    }

    #[test]
    fn window_slides_on_large_inputs() {
        let line = b"0123456789\n";
        let data: Vec<u8> = line
            .iter()
            .copied()
            .cycle()
            .take(line.len() * 300_000)
            .collect();
        let mut t = LineTracker::new(&data[..]);
        let mut buf = [0u8; 4096];
        while t.read(&mut buf).unwrap() > 0 {}
        let last_line_start = (line.len() * 299_999) as u64;
        assert_eq!(t.locate(last_line_start + 4), (300_000, 5));
    }
}

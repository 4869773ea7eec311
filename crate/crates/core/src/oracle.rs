//! Neighbor-probe access to a hidden graph.
//!
//! Algorithms see the graph only through [`OracleHandle::query`], plus the
//! two integers `n` and `d`. Every valid probe is counted and, when a
//! [`Transcript`] is attached, recorded.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::graph::{EdgeKey, Graph, Vertex};

/// One recorded probe: the `slot`-th neighbor of `vertex` is `answer`
/// (`None` when `vertex` has fewer than `slot` neighbors).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub vertex: Vertex,
    pub slot: usize,
    pub answer: Option<Vertex>,
}

/// The ordered probe record of one per-edge run.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transcript {
    pub input_edge: EdgeKey,
    pub entries: Vec<Entry>,
}

impl Transcript {
    pub fn new(input_edge: EdgeKey) -> Self {
        Self { input_edge, entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-asks every recorded probe against `g`; true iff all answers agree.
    pub fn replays_on(&self, g: &Graph) -> bool {
        self.entries.iter().all(|e| g.contains(e.vertex) && g.neighbor(e.vertex, e.slot) == e.answer)
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "edge {} {}", self.input_edge.lo(), self.input_edge.hi())?;
        for e in &self.entries {
            match e.answer {
                Some(y) => writeln!(f, "{} {} {}", e.vertex, e.slot, y)?,
                None => writeln!(f, "{} {} -", e.vertex, e.slot)?,
            }
        }
        Ok(())
    }
}

impl FromStr for Transcript {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| perr(1, "missing `edge u v` header".into()))?;
        let input_edge = match header.split(' ').collect::<Vec<_>>().as_slice() {
            ["edge", u, v] => {
                let u = u.parse().map_err(|_| perr(1, format!("bad vertex {u:?}")))?;
                let v = v.parse().map_err(|_| perr(1, format!("bad vertex {v:?}")))?;
                EdgeKey::new(u, v).map_err(|e| perr(1, e.to_string()))?
            }
            _ => return Err(perr(1, format!("expected `edge u v`, got {header:?}"))),
        };
        let mut entries = Vec::new();
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let ln = i + 1;
            let [x, s, y] = line.split(' ').collect::<Vec<_>>()[..] else {
                return Err(perr(ln, format!("expected `x i y`, got {line:?}")));
            };
            let vertex = x.parse().map_err(|_| perr(ln, format!("bad vertex {x:?}")))?;
            let slot = s.parse().map_err(|_| perr(ln, format!("bad slot {s:?}")))?;
            let answer = match y {
                "-" => None,
                y => Some(y.parse().map_err(|_| perr(ln, format!("bad answer {y:?}")))?),
            };
            entries.push(Entry { vertex, slot, answer });
        }
        Ok(Self { input_edge, entries })
    }
}

pub struct OracleHandle<'g> {
    target: &'g Graph,
    probe_count: usize,
    recording: Option<Transcript>,
}

impl<'g> OracleHandle<'g> {
    pub fn new(target: &'g Graph) -> Self {
        Self { target, probe_count: 0, recording: None }
    }

    /// A handle that records every probe made on behalf of `input_edge`.
    pub fn recording(target: &'g Graph, input_edge: EdgeKey) -> Self {
        Self { target, probe_count: 0, recording: Some(Transcript::new(input_edge)) }
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    pub fn d(&self) -> usize {
        self.target.d_max()
    }

    /// The `i`-th neighbor of `v`, or `None` if `v` has fewer than `i`
    /// neighbors. Out-of-range arguments are errors and are not counted.
    pub fn query(&mut self, v: Vertex, i: usize) -> Result<Option<Vertex>> {
        if !self.target.contains(v) {
            return domain(format!("probe vertex {v} outside 1..={}", self.n()));
        }
        if i == 0 || i > self.d() {
            return domain(format!("probe slot {i} outside 1..={}", self.d()));
        }
        let answer = self.target.neighbor(v, i);
        self.probe_count += 1;
        if let Some(t) = &mut self.recording {
            t.entries.push(Entry { vertex: v, slot: i, answer });
        }
        Ok(answer)
    }

    pub fn probe_count(&self) -> usize {
        self.probe_count
    }

    pub fn reset_count(&mut self) {
        self.probe_count = 0;
    }

    pub fn transcript(&self) -> Option<&Transcript> {
        self.recording.as_ref()
    }

    pub fn take_transcript(&mut self) -> Option<Transcript> {
        self.recording.take()
    }
}

/// Certified probe budget `d^(k+1)` for one per-edge decision at radius `k`.
pub fn max_probes_per_edge(g: &Graph, k: usize) -> Result<u64> {
    probe_budget(g.d_max(), k)
}

pub fn probe_budget(d: usize, k: usize) -> Result<u64> {
    let exp = u32::try_from(k)
        .ok()
        .and_then(|k| k.checked_add(1))
        .ok_or_else(|| Error::Overflow(format!("budget unrepresentable: radius {k}")))?;
    (d as u64)
        .checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("budget unrepresentable: {d}^{exp}")))
}

//! `.ilg` incidence-list text format: a header line `n d`, then line `v`
//! holds the ordered neighbors of vertex `v` separated by single spaces.

use std::fmt::Write as _;
use std::path::Path;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn parse_ilg(text: &str) -> Result<Graph> {
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| perr(1, "missing header `n d`".into()))?;
    let fields: Vec<&str> = header.split(' ').collect();
    let [n, d] = fields.as_slice() else {
        return Err(perr(1, format!("expected `n d`, got {header:?}")));
    };
    let n: usize = n.parse().map_err(|_| perr(1, format!("bad vertex count {n:?}")))?;
    let d: usize = d.parse().map_err(|_| perr(1, format!("bad degree bound {d:?}")))?;
    if n == 0 || d == 0 {
        return Err(perr(1, "n and d must be positive".into()));
    }

    let mut adj = Vec::with_capacity(n);
    for v in 1..=n {
        let line_no = v + 1;
        let line = lines.next().ok_or_else(|| perr(line_no, format!("missing list for vertex {v}")))?;
        let list = if line.is_empty() {
            Vec::new()
        } else {
            line.split(' ')
                .map(|tok| {
                    tok.parse::<Vertex>().map_err(|_| perr(line_no, format!("bad neighbor id {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if list.len() > d {
            return Err(perr(line_no, format!("vertex {v} has {} neighbors > d = {d}", list.len())));
        }
        for (i, &u) in list.iter().enumerate() {
            if u == 0 || u as usize > n {
                return Err(perr(line_no, format!("neighbor {u} outside 1..={n}")));
            }
            if u as usize == v {
                return Err(perr(line_no, format!("self-loop at {v}")));
            }
            if list[..i].contains(&u) {
                return Err(perr(line_no, format!("duplicate neighbor {u}")));
            }
        }
        adj.push(list);
    }
    if let Some((extra, line)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(perr(n + 2 + extra, format!("unexpected trailing content {line:?}")));
    }
    for (i, list) in adj.iter().enumerate() {
        let v = (i + 1) as Vertex;
        if let Some(&u) = list.iter().find(|&&u| !adj[u as usize - 1].contains(&v)) {
            return Err(perr(i + 2, format!("asymmetric: {u} listed for {v} but {v} missing from line {}", u + 1)));
        }
    }
    Graph::from_adjacency(d, adj)
}

pub fn to_ilg(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.d_max()).unwrap();
    for v in g.vertices() {
        let line: Vec<String> = g.neighbors(v).iter().map(u32::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn read_ilg(path: impl AsRef<Path>) -> Result<Graph> {
    parse_ilg(&std::fs::read_to_string(path)?)
}

pub fn write_ilg(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_ilg(g))?;
    Ok(())
}

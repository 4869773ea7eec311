use std::fmt;
use std::path::PathBuf;

use lssg_core::spanner::SpannerDecision;
use lssg_core::Graph;

/// Plain-text run report: `key: value` lines, then free-form body lines.
#[derive(Clone, Debug)]
pub struct Report {
    fields: Vec<(String, String)>,
    body: Vec<String>,
    /// Written here instead of stdout when set.
    pub destination: Option<PathBuf>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self { fields: Vec::new(), body: Vec::new(), destination: None };
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn line(&mut self, line: String) {
        self.body.push(line);
    }

    pub fn digest(&mut self, g: &Graph) {
        self.push("n", g.n());
        self.push("d", g.d_max());
        self.push("edges", g.edge_count());
    }

    pub fn decision(&mut self, d: &SpannerDecision) {
        self.push("edge", d.edge);
        self.push("answer", d.answer);
        self.push("probes", d.probes_used);
        if let Some(path) = &d.certificate {
            self.push("certificate", path.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        for line in &self.body {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

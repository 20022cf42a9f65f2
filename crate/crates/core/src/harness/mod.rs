//! Corpus runs: per-graph invariants, relation checks and report output.

mod checks;
mod explain;
mod hunt;

pub use checks::{Check, Outcome, Values, Verdict};
pub use explain::{explain, Explanation};
pub use hunt::{hunt_extremal, hunt_graphs, HuntHit, Predicate};

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};
use std::time::Duration;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::deadline::Deadline;
use crate::error::Error;
use crate::graph::{parse_graph6, Graph};

/// Extremal-case markers; `None` where an invariant is undefined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub zgrundy_eq_gammat: Option<bool>,
    pub gammat_upper_eq_2zgrundy: Option<bool>,
    pub z_eq_delta: bool,
    /// `γt = γ_gr^Z = 3` with a simplicial vertex.
    pub simplicial_gammat_zgrundy_3: Option<bool>,
    pub chordal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(rename = "Z")]
    pub z: Option<usize>,
    pub zgrundy: Option<usize>,
    pub grundy_total: Option<usize>,
    pub gammat: Option<usize>,
    pub gammat_upper: Option<usize>,
    pub powerdom: Option<usize>,
    #[serde(serialize_with = "serialize_checks")]
    pub checks: Vec<(Check, Outcome)>,
    pub flags: Flags,
}

fn serialize_checks<S: Serializer>(checks: &[(Check, Outcome)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(checks.len()))?;
    for (c, o) in checks {
        map.serialize_entry(c.name(), o)?;
    }
    map.end()
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &(Check, Outcome)> {
        self.checks.iter().filter(|(_, o)| o.verdict == Verdict::Violation)
    }

    pub fn verdict(&self, check: Check) -> Option<Verdict> {
        self.checks.iter().find(|(c, _)| *c == check).map(|(_, o)| o.verdict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub line: usize,
    pub input: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ReportLine {
    Graph(BoundReport),
    Error(ErrorRecord),
}

/// Computes invariants and runs `checks` on `g` under `deadline`. When the
/// invariants themselves time out every check reports `timeout`.
pub fn analyze(g: &Graph, graph6: &str, line: usize, checks: &[Check], deadline: &Deadline) -> BoundReport {
    let values = Values::compute(g, deadline);
    let (outcomes, flags) = match &values {
        Ok(v) => {
            let outcomes = checks.iter().map(|&c| (c, checks::run_check(c, g, v, deadline))).collect();
            (outcomes, flags_of(g, v))
        }
        Err(e) => {
            let o = Outcome::from_error(e.clone());
            let flags = Flags { chordal: g.is_chordal(), ..Flags::default() };
            (checks.iter().map(|&c| (c, o.clone())).collect(), flags)
        }
    };
    let v = values.as_ref().ok();
    BoundReport {
        line,
        graph6: graph6.to_string(),
        n: g.n(),
        m: g.m(),
        delta: g.min_degree(),
        z: v.map(|v| v.z),
        zgrundy: v.map(|v| v.zgrundy),
        grundy_total: v.and_then(|v| v.grundy_total),
        gammat: v.and_then(|v| v.gammat),
        gammat_upper: v.and_then(|v| v.gammat_upper.map(|u| u.0)),
        powerdom: v.map(|v| v.powerdom),
        checks: outcomes,
        flags,
    }
}

fn flags_of(g: &Graph, v: &Values) -> Flags {
    let has_simplicial = !g.simplicial_vertices().is_empty();
    Flags {
        zgrundy_eq_gammat: v.gammat.map(|gt| gt == v.zgrundy),
        gammat_upper_eq_2zgrundy: v.gammat_upper.map(|(u, _)| u == 2 * v.zgrundy),
        z_eq_delta: v.z == g.min_degree(),
        simplicial_gammat_zgrundy_3: v.gammat.map(|gt| has_simplicial && gt == 3 && v.zgrundy == 3),
        chordal: g.is_chordal(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub checks: Vec<Check>,
    pub format: Format,
    /// Per-graph wall-clock budget.
    pub budget: Option<Duration>,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { checks: Check::ALL.to_vec(), format: Format::JsonLines, budget: None, jobs: 0 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    /// Line numbers that failed to parse.
    pub parse_errors: Vec<usize>,
    pub violations: usize,
    pub verdicts: BTreeMap<String, BTreeMap<String, usize>>,
    pub flags: BTreeMap<String, usize>,
}

impl Summary {
    fn record(&mut self, r: &BoundReport) {
        self.graphs += 1;
        for (c, o) in &r.checks {
            *self.verdicts.entry(c.name().into()).or_default().entry(o.verdict.name().into()).or_default() += 1;
            if o.verdict == Verdict::Violation {
                self.violations += 1;
            }
        }
        let f = &r.flags;
        let marks = [
            ("zgrundy_eq_gammat", f.zgrundy_eq_gammat == Some(true)),
            ("gammat_upper_eq_2zgrundy", f.gammat_upper_eq_2zgrundy == Some(true)),
            ("z_eq_delta", f.z_eq_delta),
            ("simplicial_gammat_zgrundy_3", f.simplicial_gammat_zgrundy_3 == Some(true)),
            ("chordal", f.chordal),
        ];
        for (name, on) in marks {
            if on {
                *self.flags.entry(name.into()).or_default() += 1;
            }
        }
    }
}

const CHUNK: usize = 256;

/// Reads graph6 lines, analyzes them in parallel and writes one report per
/// line in input order. Blank lines are skipped; unparsable lines produce
/// an error record and processing continues.
pub fn run_corpus<R: BufRead, W: Write>(input: R, output: W, opts: &RunOptions) -> io::Result<Summary> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().map_err(io::Error::other)?;
    let mut sink = Sink::new(output, opts.format, &opts.checks);
    let mut summary = Summary::default();
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    let mut lines = input.lines().enumerate();
    loop {
        batch.clear();
        for (i, line) in lines.by_ref() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            batch.push((i + 1, trimmed.to_string()));
            if batch.len() == CHUNK {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let reports: Vec<ReportLine> =
            pool.install(|| batch.par_iter().map(|(line, text)| process_line(*line, text, opts)).collect());
        for r in &reports {
            match r {
                ReportLine::Graph(b) => summary.record(b),
                ReportLine::Error(e) => summary.parse_errors.push(e.line),
            }
            sink.write(r)?;
        }
    }
    sink.finish()?;
    Ok(summary)
}

fn process_line(line: usize, text: &str, opts: &RunOptions) -> ReportLine {
    match parse_graph6(text) {
        Ok(g) => {
            let deadline = opts.budget.map_or(Deadline::NONE, Deadline::after);
            ReportLine::Graph(analyze(&g, text, line, &opts.checks, &deadline))
        }
        Err(e) => ReportLine::Error(ErrorRecord { line, input: text.to_string(), error: Error::from(e).to_string() }),
    }
}

enum Sink<W: Write> {
    Json(W),
    Csv { w: Box<csv::Writer<W>>, checks: Vec<Check>, header_written: bool },
}

const CSV_VALUES: [&str; 11] =
    ["line", "graph6", "n", "m", "delta", "Z", "zgrundy", "grundy_total", "gammat", "gammat_upper", "powerdom"];
const CSV_FLAGS: [&str; 5] =
    ["zgrundy_eq_gammat", "gammat_upper_eq_2zgrundy", "z_eq_delta", "simplicial_gammat_zgrundy_3", "chordal"];

impl<W: Write> Sink<W> {
    fn new(w: W, format: Format, checks: &[Check]) -> Self {
        match format {
            Format::JsonLines => Sink::Json(w),
            Format::Csv => {
                Sink::Csv { w: Box::new(csv::Writer::from_writer(w)), checks: checks.to_vec(), header_written: false }
            }
        }
    }

    fn write(&mut self, r: &ReportLine) -> io::Result<()> {
        match self {
            Sink::Json(w) => {
                serde_json::to_writer(&mut *w, r)?;
                w.write_all(b"\n")
            }
            Sink::Csv { w, checks, header_written } => {
                if !*header_written {
                    w.write_record(csv_header(checks))?;
                    *header_written = true;
                }
                w.write_record(csv_row(r, checks))?;
                Ok(())
            }
        }
    }

    fn finish(self) -> io::Result<()> {
        match self {
            Sink::Json(mut w) => w.flush(),
            Sink::Csv { mut w, checks, header_written } => {
                // an empty run still gets a header
                if !header_written {
                    w.write_record(csv_header(&checks))?;
                }
                w.flush()
            }
        }
    }
}

fn csv_header(checks: &[Check]) -> Vec<&'static str> {
    CSV_VALUES.iter().copied().chain(checks.iter().map(|c| c.name())).chain(CSV_FLAGS).chain(["error"]).collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_row(r: &ReportLine, checks: &[Check]) -> Vec<String> {
    let width = CSV_VALUES.len() + checks.len() + CSV_FLAGS.len() + 1;
    match r {
        ReportLine::Graph(b) => {
            let mut row = vec![
                b.line.to_string(),
                b.graph6.clone(),
                b.n.to_string(),
                b.m.to_string(),
                b.delta.to_string(),
                opt(b.z),
                opt(b.zgrundy),
                opt(b.grundy_total),
                opt(b.gammat),
                opt(b.gammat_upper),
                opt(b.powerdom),
            ];
            row.extend(b.checks.iter().map(|(_, o)| o.verdict.name().to_string()));
            let f = &b.flags;
            row.extend([
                opt(f.zgrundy_eq_gammat),
                opt(f.gammat_upper_eq_2zgrundy),
                f.z_eq_delta.to_string(),
                opt(f.simplicial_gammat_zgrundy_3),
                f.chordal.to_string(),
                String::new(),
            ]);
            row
        }
        ReportLine::Error(e) => {
            let mut row = vec![String::new(); width];
            row[0] = e.line.to_string();
            row[1] = e.input.clone();
            row[width - 1] = e.error.clone();
            row
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(input: &str, format: Format) -> (String, Summary) {
        let opts = RunOptions { format, ..RunOptions::default() };
        let mut out = Vec::new();
        let summary = run_corpus(input.as_bytes(), &mut out, &opts).unwrap();
        (String::from_utf8(out).unwrap(), summary)
    }

    #[test]
    fn triangle_has_no_gammat_bound() {
        let g = parse_graph6("Bw").unwrap();
        let r = analyze(&g, "Bw", 1, &Check::ALL, &Deadline::NONE);
        assert_eq!(r.verdict(Check::GammatBound), Some(Verdict::PreconditionNotMet));
        assert_eq!(r.violations().count(), 0);
        assert_eq!(r.flags.zgrundy_eq_gammat, Some(false));
    }

    #[test]
    fn c5_flags() {
        let g = parse_graph6("Dhc").unwrap();
        let r = analyze(&g, "Dhc", 1, &Check::ALL, &Deadline::NONE);
        assert_eq!(
            (r.z, r.zgrundy, r.gammat, r.gammat_upper, r.powerdom),
            (Some(2), Some(3), Some(3), Some(3), Some(1))
        );
        assert_eq!(r.flags.zgrundy_eq_gammat, Some(true));
        assert_eq!(r.flags.gammat_upper_eq_2zgrundy, Some(false));
        assert!(r.flags.z_eq_delta && !r.flags.chordal);
        assert_eq!(r.verdict(Check::ZDeltaPaths), Some(Verdict::Holds));
    }

    #[test]
    fn malformed_lines_become_error_records() {
        let (out, summary) = run("Bw\n\n~~~bad\nA_\n", Format::JsonLines);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].contains("\"error\"") && lines[1].contains("\"line\":3"));
        assert_eq!(summary.graphs, 2);
        assert_eq!(summary.parse_errors, vec![3]);
        assert_eq!(summary.violations, 0);
    }

    #[test]
    fn output_is_deterministic() {
        let corpus: String = ["A_", "Bw", "Ch", "C~", "Dhc", "D~{", "E?~o"].iter().map(|s| format!("{s}\n")).collect();
        let corpus = corpus.repeat(60);
        let a = run(&corpus, Format::JsonLines);
        let b = run(&corpus, Format::JsonLines);
        assert_eq!(a, b);
        let (csv, _) = run(&corpus, Format::Csv);
        assert_eq!(csv.lines().count(), 1 + 420);
        assert!(csv.starts_with("line,graph6,n,m,delta,Z,"));
    }

    #[test]
    fn empty_csv_run_writes_header() {
        let (csv, summary) = run("", Format::Csv);
        assert_eq!(csv.lines().count(), 1);
        assert_eq!(summary.graphs, 0);
    }
}

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Table {
        Table { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Column values by header.
    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i].as_str()).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Outcome of one command. The structured rendering leaves out timing so
/// that identical inputs give identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    pub tables: Vec<Table>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: &str, instance: &str) -> Report {
        Report {
            command: command.into(),
            instance: instance.into(),
            pass: false,
            checks: Vec::new(),
            tables: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine { name: name.into(), pass, detail: detail.into() });
    }

    pub fn table(&mut self, t: Table) {
        self.tables.push(t);
    }

    pub fn get_table(&self, title: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.title == title)
    }

    pub fn get_check(&self, name: &str) -> Option<&CheckLine> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn finish(&mut self, elapsed: Duration) {
        self.pass = !self.checks.is_empty() && self.failed() == 0;
        self.elapsed = elapsed;
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => self.render_structured(),
        }
    }

    pub fn render_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} on {}", self.command, self.instance);
        for t in &self.tables {
            let _ = writeln!(out, "\n{}", t.title);
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| t.rows.iter().map(|r| r[i].chars().count()).chain([t.columns[i].chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("  {}", parts.join("  ").trim_end())
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for r in &t.rows {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        let _ = writeln!(out);
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "[{mark}] {}", c.name);
            } else {
                let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
            }
        }
        let _ = writeln!(
            out,
            "\nresult: {} ({} of {} checks failed, {} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.failed(),
            self.checks.len(),
            self.elapsed.as_millis()
        );
        out
    }
}

use std::fmt::Write as _;

use serde::Serialize;
use xmod::ValidationReport;

/// Output of one command. Field order is the serialization order.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub name: Option<String>,
    pub ok: bool,
    pub orders: Vec<Order>,
    pub families: Vec<Family>,
    pub witnesses: Vec<Witness>,
    pub sections: Vec<Section>,
    pub tables: Vec<Table>,
}

#[derive(Debug, Serialize)]
pub struct Order {
    pub name: String,
    pub value: usize,
}

#[derive(Debug, Serialize)]
pub struct Family {
    pub axiom: String,
    pub checked: u64,
    pub violations: u64,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub axiom: String,
    pub witness: String,
}

#[derive(Debug, Serialize)]
pub struct Section {
    pub title: String,
    pub lines: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(command: &str, name: Option<&str>) -> Self {
        Report {
            command: command.to_string(),
            name: name.map(str::to_string),
            ok: true,
            ..Default::default()
        }
    }

    pub fn order(&mut self, name: &str, value: usize) {
        self.orders.push(Order { name: name.into(), value });
    }

    /// Adds the families and witnesses of `r`; clears `ok` if it failed.
    pub fn absorb(&mut self, scope: &str, r: &ValidationReport) {
        let r = r.clone().scoped(scope);
        for (axiom, checked, violations) in r.families() {
            let verdict = if violations == 0 { "pass" } else { "fail" };
            self.families.push(Family { axiom, checked, violations, verdict });
        }
        for v in &r.violations {
            self.witnesses.push(Witness { axiom: v.axiom.clone(), witness: v.witness.clone() });
        }
        if r.dropped > 0 {
            self.witnesses.push(Witness {
                axiom: scope.to_string(),
                witness: format!("{} further violations not shown", r.dropped),
            });
        }
        self.ok &= r.is_valid();
    }

    pub fn section(&mut self, title: &str, lines: Vec<String>) {
        self.sections.push(Section { title: title.into(), lines });
    }

    pub fn table(&mut self, title: &str, header: Vec<String>, rows: Vec<Vec<String>>) {
        self.tables.push(Table { title: title.into(), header, rows });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.name {
            Some(n) => writeln!(out, "{}: {n}", self.command),
            None => writeln!(out, "{}", self.command),
        }
        .unwrap();
        writeln!(out, "status: {}", if self.ok { "ok" } else { "FAILED" }).unwrap();
        if !self.orders.is_empty() {
            out.push_str("\norders:\n");
            let w = self.orders.iter().map(|o| o.name.chars().count()).max().unwrap_or(0);
            for o in &self.orders {
                writeln!(out, "  {:w$}  {}", o.name, o.value).unwrap();
            }
        }
        if !self.families.is_empty() {
            out.push_str("\naxioms:\n");
            for f in &self.families {
                let mark = if f.violations == 0 { "PASS" } else { "FAIL" };
                writeln!(out, "  {mark} {} ({} checked, {} violations)", f.axiom, f.checked, f.violations).unwrap();
            }
        }
        if !self.witnesses.is_empty() {
            out.push_str("\nwitnesses:\n");
            for w in &self.witnesses {
                writeln!(out, "  {}: {}", w.axiom, w.witness).unwrap();
            }
        }
        for s in &self.sections {
            writeln!(out, "\n{}:", s.title).unwrap();
            for l in &s.lines {
                writeln!(out, "  {l}").unwrap();
            }
        }
        for t in &self.tables {
            writeln!(out, "\n{}:", t.title).unwrap();
            let mut all = vec![t.header.clone()];
            all.extend(t.rows.iter().cloned());
            let cols = all.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..cols)
                .map(|c| all.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
                .collect();
            for r in &all {
                let cells: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:>w$}", w = widths[c])).collect();
                writeln!(out, "  {}", cells.join(" ").trim_end()).unwrap();
            }
        }
        out
    }
}

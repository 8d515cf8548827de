//! Output formats shared by every subcommand.

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    LatexTable,
    Plain,
}

/// A command result: a JSON document plus a flat table for the other formats.
pub struct Output {
    pub json: serde_json::Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Row>,
    /// Replaces the aligned table in plain mode.
    pub plain: Option<String>,
}

pub struct Row {
    pub cells: Vec<String>,
    /// Same cells, already in LaTeX.
    pub latex: Vec<String>,
}

impl Output {
    pub fn new(json: &impl Serialize, headers: Vec<&'static str>) -> Output {
        Output {
            json: serde_json::to_value(json).expect("command output serializes"),
            headers,
            rows: Vec::new(),
            plain: None,
        }
    }

    pub fn row(&mut self, cells: Vec<String>, latex: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        debug_assert_eq!(latex.len(), self.headers.len());
        self.rows.push(Row { cells, latex });
    }

    /// A row whose LaTeX form is the escaped text of each cell.
    pub fn text_row(&mut self, cells: Vec<String>) {
        let latex = cells.iter().map(|c| latex_text(c)).collect();
        self.row(cells, latex);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json value");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory csv");
                for row in &self.rows {
                    w.write_record(&row.cells).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
            }
            Format::LatexTable => self.latex(),
            Format::Plain => self.plain.clone().unwrap_or_else(|| self.aligned()),
        }
    }

    fn latex(&self) -> String {
        let mut out = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "l".repeat(self.headers.len()));
        let headers: Vec<String> = self.headers.iter().map(|h| latex_text(h)).collect();
        out.push_str(&format!("{} \\\\\n\\hline\n", headers.join(" & ")));
        for row in &self.rows {
            out.push_str(&format!("{} \\\\\n", row.latex.join(" & ")));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(&row.cells) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = line(self.headers.clone());
        for row in &self.rows {
            out.push_str(&line(row.cells.iter().map(String::as_str).collect()));
        }
        out
    }
}

pub fn latex_text(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(c),
        }
    }
    out
}

pub fn latex_math(s: &str) -> String {
    format!("${s}$")
}

/// `Z2^3 x Z4` becomes `\mathbb{Z}_{2}^{3} \times \mathbb{Z}_{4}`.
pub fn latex_group(name: &str) -> String {
    if !name.starts_with('Z') {
        return latex_math(name);
    }
    let parts: Vec<String> = name
        .split(" x ")
        .map(|atom| {
            let atom = atom.trim_start_matches('Z');
            match atom.split_once('^') {
                Some((k, e)) => format!("\\mathbb{{Z}}_{{{k}}}^{{{e}}}"),
                None => format!("\\mathbb{{Z}}_{{{atom}}}"),
            }
        })
        .collect();
    latex_math(&parts.join(" \\times "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Output {
        let mut out = Output::new(&json!({"k": 1}), vec!["group", "spectrum"]);
        out.row(
            vec!["Z8".into(), "0^1 8^7".into()],
            vec![latex_group("Z8"), "$x$".into()],
        );
        out.text_row(vec!["a,b".into(), "c_d".into()]);
        out
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(
            sample().render(Format::Csv),
            "group,spectrum\nZ8,0^1 8^7\n\"a,b\",c_d\n"
        );
    }

    #[test]
    fn latex_table() {
        let text = sample().render(Format::LatexTable);
        assert!(text.starts_with("\\begin{tabular}{ll}\n\\hline\ngroup & spectrum \\\\\n"));
        assert!(text.contains("$\\mathbb{Z}_{8}$ & $x$ \\\\\n"));
        assert!(text.contains("a,b & c\\_d \\\\\n"));
    }

    #[test]
    fn plain_is_aligned() {
        assert_eq!(
            sample().render(Format::Plain),
            "group  spectrum\nZ8     0^1 8^7\na,b    c_d\n"
        );
    }

    #[test]
    fn group_names() {
        assert_eq!(
            latex_group("Z2^3 x Z4"),
            "$\\mathbb{Z}_{2}^{3} \\times \\mathbb{Z}_{4}$"
        );
        assert_eq!(latex_group("1"), "$1$");
    }
}

//! Serializable command results and their three renderings.

use std::fmt::Write as _;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// A command result: serde gives the JSON form, the rest is per report.
pub trait Report: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug {
    /// `(field, value)` pairs for the human table.
    fn fields(&self) -> Vec<(&'static str, String)>;

    /// Header and rows for CSV. Defaults to a single row of [`Report::fields`].
    fn csv_rows(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let fields = self.fields();
        let header = fields.iter().map(|(k, _)| k.to_string()).collect();
        (header, vec![fields.into_iter().map(|(_, v)| v).collect()])
    }
}

pub fn render<R: Report>(report: &R, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let (header, rows) = report.csv_rows();
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            for row in std::iter::once(header).chain(rows) {
                w.write_record(&row).expect("writing to memory");
            }
            String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 cells")
        }
        Format::Table => {
            let fields = report.fields();
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut s = String::new();
            for (k, v) in fields {
                let _ = writeln!(s, "{k:<width$}  {v}");
            }
            s
        }
    }
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupReport {
    pub discriminant: String,
    pub fundamental_discriminant: String,
    pub conductor: String,
    /// Order of the form class group (narrow for `D > 0`).
    pub h: u64,
    pub h_wide: u64,
    pub divisors: Vec<u64>,
    pub wide_divisors: Vec<u64>,
    /// Reduced representatives, one per narrow class.
    pub forms: Vec<String>,
}

impl Report for ClassGroupReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("discriminant", self.discriminant.clone()),
            ("fundamental_discriminant", self.fundamental_discriminant.clone()),
            ("conductor", self.conductor.clone()),
            ("h", self.h.to_string()),
            ("h_wide", self.h_wide.to_string()),
            ("divisors", list(&self.divisors)),
            ("wide_divisors", list(&self.wide_divisors)),
            ("forms", list(&self.forms)),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConductorReport {
    pub d: String,
    pub f: u64,
    pub cm_discriminant: String,
    pub cm_class_number: u64,
    pub rm_conductor: u64,
    pub rm_discriminant: String,
    pub rm_class_number: u64,
    pub rm_field_discriminant: String,
    /// Wide ideal class representatives of the RM order.
    pub ideal_classes: Vec<String>,
}

impl Report for ConductorReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("d", self.d.clone()),
            ("f", self.f.to_string()),
            ("cm_discriminant", self.cm_discriminant.clone()),
            ("cm_class_number", self.cm_class_number.to_string()),
            ("rm_conductor", self.rm_conductor.to_string()),
            ("rm_discriminant", self.rm_discriminant.clone()),
            ("rm_class_number", self.rm_class_number.to_string()),
            ("rm_field_discriminant", self.rm_field_discriminant.clone()),
            ("ideal_classes", list(&self.ideal_classes)),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfReport {
    pub input: String,
    pub expansion: String,
    pub preperiod: Vec<String>,
    pub period: Vec<String>,
    /// Eventually periodic, i.e. a quadratic irrational.
    pub periodic: bool,
    /// `[A, B, C]` with `A x^2 + B x + C = 0`, for quadratic irrationals.
    pub minimal_polynomial: Option<Vec<String>>,
    pub convergents: Vec<String>,
    /// Bratteli blocks `[[a, 1], [1, 0]]` as row-major quadruples.
    pub blocks: Vec<[String; 4]>,
}

impl Report for CfReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("input", self.input.clone()),
            ("expansion", self.expansion.clone()),
            ("preperiod", list(&self.preperiod)),
            ("period", list(&self.period)),
            ("periodic", self.periodic.to_string()),
            (
                "minimal_polynomial",
                self.minimal_polynomial.as_deref().map(list).unwrap_or_default(),
            ),
            ("convergents", list(&self.convergents)),
            (
                "blocks",
                self.blocks.iter().map(|b| b.join(",")).collect::<Vec<_>>().join(" "),
            ),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShaReport {
    /// Row-major entries when a matrix was given.
    pub matrix: Option<Vec<String>>,
    pub charpoly: String,
    pub discriminant: String,
    /// Dominant eigenvalue `(P + √D)/Q` for primitive matrices.
    pub perron: Option<String>,
    pub class_group: Vec<u64>,
    pub h: u64,
    pub k: u32,
    pub sha: Vec<u64>,
    pub sha_order: u64,
    /// Brute-force similarity class count, when requested.
    pub similarity_classes: Option<u64>,
    /// Conjugating word length cap used by that count.
    pub similarity_word_cap: Option<u32>,
}

impl Report for ShaReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let opt = |o: &Option<String>| o.clone().unwrap_or_default();
        vec![
            ("matrix", self.matrix.as_deref().map(|m| m.join(",")).unwrap_or_default()),
            ("charpoly", self.charpoly.clone()),
            ("discriminant", self.discriminant.clone()),
            ("perron", opt(&self.perron)),
            ("class_group", list(&self.class_group)),
            ("h", self.h.to_string()),
            ("k", self.k.to_string()),
            ("sha", list(&self.sha)),
            ("sha_order", self.sha_order.to_string()),
            (
                "similarity_classes",
                self.similarity_classes.map(|c| c.to_string()).unwrap_or_default(),
            ),
            (
                "similarity_word_cap",
                self.similarity_word_cap.map(|c| c.to_string()).unwrap_or_default(),
            ),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightReport {
    pub theta: Vec<String>,
    /// `?(θ_i mod 1)`.
    pub question_mark: Vec<String>,
    pub point: String,
    pub height: String,
}

impl Report for HeightReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("theta", list(&self.theta)),
            ("question_mark", list(&self.question_mark)),
            ("point", self.point.clone()),
            ("height", self.height.clone()),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountRow {
    pub t: u64,
    pub count: u64,
    pub log2_count: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: usize,
    pub quantum: bool,
    pub rows: Vec<CountRow>,
    /// Least-squares slope of `log2 N` against `log2 T`.
    pub slope: Option<f64>,
}

impl Report for CountReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("n", self.n.to_string()),
            ("height", if self.quantum { "quantum" } else { "projective" }.to_string()),
        ];
        for r in &self.rows {
            out.push(("T N log2N", format!("{} {} {:.6}", r.t, r.count, r.log2_count)));
        }
        out.push(("slope", self.slope.map(|s| format!("{s:.6}")).unwrap_or_default()));
        out
    }

    fn csv_rows(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = ["T", "N", "log2N"].map(String::from).to_vec();
        let rows = self
            .rows
            .iter()
            .map(|r| vec![r.t.to_string(), r.count.to_string(), r.log2_count.to_string()])
            .collect();
        (header, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> HeightReport {
        HeightReport {
            theta: vec!["1/3".into(), "(-1+√5)/2".into()],
            question_mark: vec!["1/4".into(), "2/3".into()],
            point: "(12:3:8)".into(),
            height: "12".into(),
        }
    }

    #[test]
    fn csv_quotes_commas() {
        let mut r = sample();
        r.point = "a,b".into();
        let csv = render(&r, Format::Csv);
        assert_eq!(csv.lines().next().unwrap(), "theta,question_mark,point,height");
        assert!(csv.contains("\"a,b\""));
    }

    #[test]
    fn json_parses_back() {
        let r = sample();
        let back: HeightReport = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
        assert!(render(&r, Format::Table).starts_with("theta          1/3"));
    }
}

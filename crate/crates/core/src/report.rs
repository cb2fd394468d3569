//! Side-by-side comparison of every ranking method on one profile.

use serde_json::{json, Value};

use crate::axioms::MethodId;
use crate::ballots::{BallotProfile, Candidate};
use crate::rational::{to_decimal_string, to_exact_string, to_f64, Rational};
use crate::shapley::RankingResult;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub method: MethodId,
    pub ranking: RankingResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub candidates: Vec<Candidate>,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn build(profile: &BallotProfile) -> Self {
        Self::for_methods(profile, &MethodId::ALL)
    }

    pub fn for_methods(profile: &BallotProfile, methods: &[MethodId]) -> Self {
        let t = profile.tournament_matrix();
        let rows = methods
            .iter()
            .map(|&method| ReportRow { method, ranking: method.rank_tournament(&t) })
            .collect();
        Self { candidates: profile.candidates().to_vec(), rows }
    }

    pub fn row(&self, method: MethodId) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.method == method)
    }

    pub fn to_table(&self, decimals: u32) -> String {
        let mut header = vec!["method".to_string()];
        header.extend(self.candidates.iter().map(|c| c.to_string()));
        header.push("ranking".to_string());
        let mut lines = vec![header];
        for row in &self.rows {
            let mut line = vec![row.method.tag().to_string()];
            line.extend(row.ranking.scores.values.iter().map(|v| to_decimal_string(v, decimals)));
            line.push(row.ranking.render(&self.candidates));
            lines.push(line);
        }
        align(&lines)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("method");
        for c in &self.candidates {
            out.push(',');
            out.push_str(c.as_str());
        }
        out.push_str(",ranking\n");
        for row in &self.rows {
            out.push_str(row.method.tag());
            for v in &row.ranking.scores.values {
                out.push(',');
                out.push_str(&to_exact_string(v));
            }
            out.push(',');
            out.push_str(&row.ranking.render(&self.candidates));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, decimals: u32) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| ranking_json(r.method.tag(), &r.ranking, &self.candidates, decimals))
            .collect();
        json!({
            "candidates": self.candidates.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            "methods": rows,
        })
    }
}

/// `{"method": .., "values": {cand: {"exact": "p/q", "approx": x}}, "ranking": [[..], ..]}`.
pub fn ranking_json(method: &str, ranking: &RankingResult, candidates: &[Candidate], decimals: u32) -> Value {
    let mut values = serde_json::Map::new();
    for (c, v) in candidates.iter().zip(&ranking.scores.values) {
        values.insert(c.to_string(), json!({ "exact": to_exact_string(v), "approx": approx(v, decimals) }));
    }
    let groups: Vec<Vec<&str>> = ranking
        .groups
        .iter()
        .map(|g| g.iter().map(|&i| candidates[i].as_str()).collect())
        .collect();
    json!({
        "method": method,
        "values": values,
        "ranking": groups,
        "ranking_text": ranking.render(candidates),
    })
}

/// Rounded value as a JSON number.
pub fn approx(value: &Rational, decimals: u32) -> Value {
    let rounded = crate::rational::round_decimal(value, decimals);
    serde_json::Number::from_f64(to_f64(&rounded)).map_or(Value::Null, Value::Number)
}

/// Left-aligned columns separated by two spaces.
pub fn align(lines: &[Vec<String>]) -> String {
    let cols = lines.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| lines.iter().filter_map(|l| l.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in lines {
        let cells: Vec<String> = line
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{:<w$}", s, w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

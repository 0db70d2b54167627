//! Verification report as key/value text or JSON.

use std::fmt::Write as _;

use disklink::verify::Overlap;
use disklink::{Rational, VerificationReport};
use serde::{Deserialize, Serialize};

use crate::format::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub valid: bool,
    pub disk_link: bool,
    /// `None` when planarity was not checked
    pub planar: Option<bool>,
    /// `num/den` in lowest terms, `None` when no vertex-edge pair exists
    pub min_res_sq: Option<String>,
    pub witness: Option<Witness>,
    pub width: u64,
    pub height: u64,
    pub crossings: Vec<[usize; 4]>,
    pub vertex_on_edge: Vec<[usize; 3]>,
    pub edge_overlaps: Vec<[usize; 4]>,
    pub duplicates: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertex: usize,
    pub edge: (usize, usize),
}

impl ReportDocument {
    pub fn from_report(r: &VerificationReport) -> Self {
        let mut vertex_on_edge = Vec::new();
        let mut edge_overlaps = Vec::new();
        for o in &r.overlaps {
            match *o {
                Overlap::VertexOnEdge { vertex, edge } => {
                    vertex_on_edge.push([vertex, edge.0, edge.1])
                }
                Overlap::Edges(a, b) => edge_overlaps.push([a.0, a.1, b.0, b.1]),
            }
        }
        ReportDocument {
            valid: r.is_valid(),
            disk_link: r.is_disk_link,
            planar: r.is_planar(),
            min_res_sq: r.min_res_sq.as_ref().map(Rational::to_string),
            witness: r
                .resolution_witness
                .map(|(vertex, edge)| Witness { vertex, edge }),
            width: r.grid.0,
            height: r.grid.1,
            crossings: r
                .crossings
                .iter()
                .map(|&(a, b)| [a.0, a.1, b.0, b.1])
                .collect(),
            vertex_on_edge,
            edge_overlaps,
            duplicates: r.duplicates.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn min_res_sq(&self) -> Option<Rational> {
        self.min_res_sq.as_ref().and_then(|s| s.parse().ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// One `key value` line per field; lists print one entry per line.
    pub fn to_text(&self) -> String {
        let opt = |b: Option<bool>| b.map_or("unchecked".to_string(), |b| b.to_string());
        let mut s = String::new();
        let _ = writeln!(s, "valid {}", self.valid);
        let _ = writeln!(s, "disk_link {}", self.disk_link);
        let _ = writeln!(s, "planar {}", opt(self.planar));
        let _ = writeln!(
            s,
            "min_res_sq {}",
            self.min_res_sq.as_deref().unwrap_or("none")
        );
        match self.witness {
            Some(w) => {
                let _ = writeln!(s, "witness {} {} {}", w.vertex, w.edge.0, w.edge.1);
            }
            None => s.push_str("witness none\n"),
        }
        let _ = writeln!(s, "grid {} x {}", self.width, self.height);
        let list = |s: &mut String, key: &str, items: Vec<Vec<usize>>| {
            for it in items {
                let ids: Vec<String> = it.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "{key} {}", ids.join(" "));
            }
        };
        list(
            &mut s,
            "crossing",
            self.crossings.iter().map(|c| c.to_vec()).collect(),
        );
        list(
            &mut s,
            "vertex_on_edge",
            self.vertex_on_edge.iter().map(|c| c.to_vec()).collect(),
        );
        list(
            &mut s,
            "edge_overlap",
            self.edge_overlaps.iter().map(|c| c.to_vec()).collect(),
        );
        list(
            &mut s,
            "duplicate",
            self.duplicates.iter().map(|c| c.to_vec()).collect(),
        );
        s
    }
}

fn ids<const K: usize>(line: usize, toks: &[&str]) -> Result<[usize; K], ParseError> {
    let bad = || ParseError::Syntax {
        line,
        msg: format!("expected {K} vertex ids"),
    };
    if toks.len() != K {
        return Err(bad());
    }
    let mut out = [0; K];
    for (o, t) in out.iter_mut().zip(toks) {
        *o = t.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn flag(line: usize, t: &str) -> Result<bool, ParseError> {
    t.parse().map_err(|_| ParseError::Syntax {
        line,
        msg: format!("`{t}` is not a boolean"),
    })
}

/// Inverse of [`ReportDocument::to_text`].
pub fn parse_report(text: &str) -> Result<ReportDocument, ParseError> {
    let mut doc = ReportDocument {
        valid: false,
        disk_link: false,
        planar: None,
        min_res_sq: None,
        witness: None,
        width: 0,
        height: 0,
        crossings: Vec::new(),
        vertex_on_edge: Vec::new(),
        edge_overlaps: Vec::new(),
        duplicates: Vec::new(),
    };
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = l
            .split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .collect();
        let Some((key, rest)) = toks.split_first() else {
            continue;
        };
        let one = || match rest {
            [v] => Ok(*v),
            _ => Err(ParseError::Syntax {
                line,
                msg: format!("`{key}` takes one value"),
            }),
        };
        match *key {
            "valid" => doc.valid = flag(line, one()?)?,
            "disk_link" => doc.disk_link = flag(line, one()?)?,
            "planar" => {
                doc.planar = match one()? {
                    "unchecked" => None,
                    t => Some(flag(line, t)?),
                }
            }
            "min_res_sq" => {
                doc.min_res_sq = match one()? {
                    "none" => None,
                    t => {
                        let r: Rational = t.parse().map_err(|_| ParseError::Syntax {
                            line,
                            msg: format!("`{t}` is not a rational"),
                        })?;
                        Some(r.to_string())
                    }
                }
            }
            "witness" => {
                doc.witness = if rest == ["none"] {
                    None
                } else {
                    let [v, a, b] = ids::<3>(line, rest)?;
                    Some(Witness {
                        vertex: v,
                        edge: (a, b),
                    })
                }
            }
            "grid" => {
                let [w, "x", h] = rest else {
                    return Err(ParseError::Syntax {
                        line,
                        msg: "expected `grid W x H`".into(),
                    });
                };
                let [w, h] = ids::<2>(line, &[w, h])?;
                (doc.width, doc.height) = (w as u64, h as u64);
            }
            "crossing" => doc.crossings.push(ids(line, rest)?),
            "vertex_on_edge" => doc.vertex_on_edge.push(ids(line, rest)?),
            "edge_overlap" => doc.edge_overlaps.push(ids(line, rest)?),
            "duplicate" => doc.duplicates.push(ids(line, rest)?),
            other => {
                return Err(ParseError::Syntax {
                    line,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }
    Ok(doc)
}

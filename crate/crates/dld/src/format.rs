//! Line-oriented text formats for graphs, drawings, embeddings and vertex
//! orders. `#` starts a comment that runs to the end of the line; blank
//! lines are ignored.

use std::fmt::Write as _;

use disklink::{Graph, GridDrawing, PlaneGraph, Point};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("missing `n <count>` header")]
    MissingHeader,

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: `{token}` is not an integer coordinate")]
    NonIntegerCoordinate { line: usize, token: String },

    #[error("line {line}: unknown vertex {vertex}")]
    UnknownVertex { line: usize, vertex: usize },

    #[error("line {line}: vertex {vertex} given twice")]
    DuplicateVertex { line: usize, vertex: usize },

    #[error("line {line}: {msg}")]
    Embedding { line: usize, msg: String },
}

type Result<T> = std::result::Result<T, ParseError>;

/// Non-empty lines with comments stripped, numbered from 1.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_id(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| syntax(line, format!("`{tok}` is not a vertex id")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = parse_id(line, tok)?;
    if v >= n {
        return Err(ParseError::UnknownVertex { line, vertex: v });
    }
    Ok(v)
}

/// Reads the `n <count>` header and returns the remaining records.
fn header<'a>(recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<usize> {
    let (line, toks) = recs.next().ok_or(ParseError::MissingHeader)?;
    match toks.as_slice() {
        ["n", count] => parse_id(line, count),
        _ => Err(ParseError::MissingHeader),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut recs = records(text);
    let n = header(&mut recs)?;
    let mut g = Graph::new(n);
    for (line, toks) in recs {
        let [tag, u, v] = toks.as_slice() else {
            return Err(syntax(line, "expected `e <u> <v>`"));
        };
        if *tag != "e" {
            return Err(syntax(line, format!("unexpected record `{tag}`")));
        }
        let (u, v) = (vertex(line, u, n)?, vertex(line, v, n)?);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        g.add_edge(u, v).map_err(|e| syntax(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

/// Vertices without a `v` line stay unplaced; the verifier reports them.
pub fn parse_drawing(text: &str) -> Result<GridDrawing> {
    let mut recs = records(text);
    let n = header(&mut recs)?;
    let mut pos: Vec<Option<Point>> = vec![None; n];
    for (line, toks) in recs {
        let [tag, id, x, y] = toks.as_slice() else {
            return Err(syntax(line, "expected `v <id> <x> <y>`"));
        };
        if *tag != "v" {
            return Err(syntax(line, format!("unexpected record `{tag}`")));
        }
        let v = vertex(line, id, n)?;
        let coord = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| ParseError::NonIntegerCoordinate {
                    line,
                    token: t.to_string(),
                })
        };
        let p = Point::new(coord(x)?, coord(y)?);
        if pos[v].replace(p).is_some() {
            return Err(ParseError::DuplicateVertex { line, vertex: v });
        }
    }
    Ok(GridDrawing::from_partial(pos))
}

pub fn write_drawing(d: &GridDrawing) -> String {
    let mut s = format!("n {}\n", d.n());
    for (v, p) in d.positions().iter().enumerate() {
        if let Some(p) = p {
            let _ = writeln!(s, "v {v} {} {}", p.x, p.y);
        }
    }
    s
}

/// Counter-clockwise neighbour lists, one `rot` line per vertex of `g`.
pub fn parse_rotation(text: &str, g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut last_line = 0;
    for (line, toks) in records(text) {
        last_line = line;
        let Some((&"rot", rest)) = toks.split_first() else {
            return Err(syntax(line, "expected `rot <v> <n1> <n2> ...`"));
        };
        let Some((v, nbrs)) = rest.split_first() else {
            return Err(syntax(line, "missing vertex"));
        };
        let v = vertex(line, v, n)?;
        let nbrs = nbrs
            .iter()
            .map(|t| vertex(line, t, n))
            .collect::<Result<Vec<_>>>()?;
        let mut sorted = nbrs.clone();
        sorted.sort_unstable();
        let mut adj = g.neighbors(v).to_vec();
        adj.sort_unstable();
        if sorted != adj {
            return Err(ParseError::Embedding {
                line,
                msg: format!("rotation of {v} is not a permutation of its neighbours"),
            });
        }
        if rot[v].replace(nbrs).is_some() {
            return Err(ParseError::DuplicateVertex { line, vertex: v });
        }
    }
    rot.into_iter()
        .enumerate()
        .map(|(v, r)| match r {
            Some(r) => Ok(r),
            None if g.degree(v) == 0 => Ok(Vec::new()),
            None => Err(ParseError::Embedding {
                line: last_line,
                msg: format!("no rotation for vertex {v}"),
            }),
        })
        .collect()
}

pub fn write_rotation(pg: &PlaneGraph) -> String {
    let mut s = String::new();
    for v in 0..pg.n() {
        let _ = write!(s, "rot {v}");
        for w in pg.rotation(v) {
            let _ = write!(s, " {w}");
        }
        s.push('\n');
    }
    s
}

/// Whitespace-separated vertex ids; must be a permutation of `0..n`.
pub fn parse_order(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut last_line = 0;
    for (line, toks) in records(text) {
        last_line = line;
        for t in toks {
            let v = vertex(line, t, n)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(ParseError::DuplicateVertex { line, vertex: v });
            }
            order.push(v);
        }
    }
    if order.len() != n {
        return Err(syntax(
            last_line,
            format!("order lists {} of {n} vertices", order.len()),
        ));
    }
    Ok(order)
}

pub fn write_order(order: &[usize]) -> String {
    let ids: Vec<String> = order.iter().map(|v| v.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

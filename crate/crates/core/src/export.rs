//! Serialization of graphs, invariant reports, and verdict tables.
//!
//! Formats:
//!
//! * **DOT**: `graph` documents. Disjointness graphs use decimal masks as node
//!   ids and set notation (`{1,3}`) as labels; other graphs use indices.
//! * **Edge list**: a `#` header line, then one `u v` line per edge with
//!   `u < v`, ascending. Disjointness graphs write masks under
//!   `# topograph n=<n> order=<order> size=<size>`; other graphs write
//!   indices under `# graph <description> order=<order> size=<size>`.
//! * **JSON / CSV / text** for reports and verdicts.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::claims::{ClaimVerdict, Summary};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::invariants::InvariantReport;
use crate::topo::TopoGraph;

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn topo_dot(t: &TopoGraph) -> String {
    let mut out = format!("graph topograph_n{} {{\n", t.n());
    for v in t.vertices() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", v.mask(), v);
    }
    for (u, v) in t.edges() {
        let _ = writeln!(out, "  {} -- {};", u.mask(), v.mask());
    }
    out.push_str("}\n");
    out
}

pub fn simple_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", dot_escape(name));
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn topo_edge_list(t: &TopoGraph) -> String {
    let mut out = format!(
        "# topograph n={} order={} size={}\n",
        t.n(),
        t.order(),
        t.size()
    );
    for (u, v) in t.edges() {
        let _ = writeln!(out, "{} {}", u.mask(), v.mask());
    }
    out
}

pub fn simple_edge_list(g: &SimpleGraph, description: &str) -> String {
    let mut out = format!(
        "# graph {description} order={} size={}\n",
        g.order(),
        g.size()
    );
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn header_field(header: &str, key: &str, line: usize) -> Result<usize> {
    header
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("header lacks `{key}=`"),
        })?
        .parse()
        .map_err(|e| Error::Parse {
            line,
            message: format!("bad `{key}`: {e}"),
        })
}

/// Reads either edge-list flavour back into a [`SimpleGraph`].
///
/// Mask ids from a `topograph` header map to index `mask - 1`, so the result
/// matches [`TopoGraph::to_simple`] apart from labels.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let is_topo = header.starts_with("# topograph");
    if !is_topo && !header.starts_with("# graph") {
        return Err(Error::Parse {
            line: 1,
            message: "missing `# topograph` or `# graph` header".into(),
        });
    }
    let order = header_field(header, "order", 1)?;
    let size = header_field(header, "size", 1)?;

    let mut edges = Vec::with_capacity(size);
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let ids: Vec<usize> = line
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|e| bad(format!("`{tok}`: {e}"))))
            .collect::<Result<_>>()?;
        let [u, v] = ids[..] else {
            return Err(bad(format!("expected two ids, got {}", ids.len())));
        };
        let to_index = |id: usize| {
            if is_topo {
                id.checked_sub(1)
                    .ok_or_else(|| bad("mask 0 is not a vertex".into()))
            } else {
                Ok(id)
            }
        };
        edges.push((to_index(u)?, to_index(v)?));
    }
    let g = SimpleGraph::from_edges(order, edges)?;
    if g.size() != size {
        return Err(Error::Parse {
            line: 1,
            message: format!("header size {size} but {} distinct edges", g.size()),
        });
    }
    Ok(g)
}

/// Adjacency listing, one vertex per line.
pub fn topo_text(t: &TopoGraph) -> String {
    let mut out = format!(
        "disjointness graph on {{1..{}}}: order {}, size {}\n",
        t.n(),
        t.order(),
        t.size()
    );
    for v in t.vertices() {
        let nbrs: Vec<String> = t.neighbors(v).iter().map(|w| w.to_string()).collect();
        let _ = writeln!(out, "{v}: {}", nbrs.join(" "));
    }
    out
}

pub fn simple_text(g: &SimpleGraph, description: &str) -> String {
    let mut out = format!("{description}: order {}, size {}\n", g.order(), g.size());
    for v in 0..g.order() {
        let nbrs: Vec<String> = g.neighbors(v).map(|w| g.label(w)).collect();
        let _ = writeln!(out, "{}: {}", g.label(v), nbrs.join(" "));
    }
    out
}

fn to_pretty<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Serialize(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn topo_json(t: &TopoGraph) -> Result<String> {
    let vertices: Vec<u32> = t.vertices().map(|v| v.mask()).collect();
    let edges: Vec<[u32; 2]> = t.edges().map(|(u, v)| [u.mask(), v.mask()]).collect();
    to_pretty(&json!({
        "n": t.n(),
        "order": t.order(),
        "size": t.size(),
        "vertices": vertices,
        "edges": edges,
    }))
}

pub fn simple_json(g: &SimpleGraph, description: &str) -> Result<String> {
    let labels: Vec<String> = (0..g.order()).map(|v| g.label(v)).collect();
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    to_pretty(&json!({
        "graph": description,
        "order": g.order(),
        "size": g.size(),
        "labels": labels,
        "edges": edges,
    }))
}

/// Report JSON. `vertex_id` maps vertex indices to their exported ids
/// (masks for disjointness graphs).
pub fn report_json(
    n: Option<usize>,
    r: &InvariantReport,
    vertex_id: impl Fn(usize) -> u64,
) -> Result<String> {
    let ids = |vs: &[usize]| vs.iter().map(|&v| vertex_id(v)).collect::<Vec<u64>>();
    to_pretty(&json!({
        "n": n,
        "order": r.order,
        "size": r.size,
        "invariants": {
            "min_degree": r.min_degree,
            "max_degree": r.max_degree,
            "clique_number": r.clique.value,
            "independence_number": r.independence.value,
            "domination_number": r.domination.value,
            "radius": r.radius,
            "diameter": r.diameter,
            "is_connected": r.is_connected,
            "component_count": r.component_count,
            "cut_vertices": ids(&r.cut_vertices),
            "pendant_vertices": ids(&r.pendant_vertices),
        },
        "witnesses": {
            "max_clique": ids(&r.clique.witness),
            "max_independent_set": ids(&r.independence.witness),
            "min_dominating_set": ids(&r.domination.witness),
        },
        "exact": {
            "clique_number": r.clique.exact,
            "independence_number": r.independence.exact,
            "domination_number": r.domination.exact,
        },
    }))
}

pub fn report_text(r: &InvariantReport, label: impl Fn(usize) -> String) -> String {
    let set = |vs: &[usize]| {
        format!(
            "{{{}}}",
            vs.iter().map(|&v| label(v)).collect::<Vec<_>>().join(",")
        )
    };
    let flag = |exact: bool, bound: &str| {
        if exact {
            String::new()
        } else {
            format!(" ({bound}, budget exhausted)")
        }
    };
    let opt =
        |x: Option<usize>| x.map_or("undefined (disconnected)".to_string(), |v| v.to_string());
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", r.order);
    let _ = writeln!(out, "size: {}", r.size);
    let _ = writeln!(out, "min degree: {}", r.min_degree);
    let _ = writeln!(out, "max degree: {}", r.max_degree);
    let _ = writeln!(
        out,
        "connected: {} ({} component(s))",
        r.is_connected, r.component_count
    );
    let _ = writeln!(out, "radius: {}", opt(r.radius));
    let _ = writeln!(out, "diameter: {}", opt(r.diameter));
    let _ = writeln!(
        out,
        "clique number: {}{}",
        r.clique.value,
        flag(r.clique.exact, "lower bound")
    );
    let _ = writeln!(
        out,
        "independence number: {}{}",
        r.independence.value,
        flag(r.independence.exact, "lower bound")
    );
    let _ = writeln!(
        out,
        "domination number: {}{}",
        r.domination.value,
        flag(r.domination.exact, "upper bound")
    );
    let _ = writeln!(out, "cut vertices: {}", set(&r.cut_vertices));
    let _ = writeln!(out, "pendant vertices: {}", set(&r.pendant_vertices));
    let _ = writeln!(out, "maximum clique: {}", set(&r.clique.witness));
    let _ = writeln!(
        out,
        "maximum independent set: {}",
        set(&r.independence.witness)
    );
    let _ = writeln!(
        out,
        "minimum dominating set: {}",
        set(&r.domination.witness)
    );
    out
}

pub fn verdicts_json(verdicts: &[ClaimVerdict]) -> Result<String> {
    to_pretty(verdicts)
}

/// Columns `claim,params,predicted,computed,verdict`; one row per verdict.
pub fn verdicts_csv(verdicts: &[ClaimVerdict]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Serialize(e.to_string());
    w.write_record(["claim", "params", "predicted", "computed", "verdict"])
        .map_err(err)?;
    for v in verdicts {
        w.write_record([
            v.claim.to_string(),
            v.params.to_string(),
            v.predicted.to_string(),
            v.computed.to_string(),
            v.verdict.to_string(),
        ])
        .map_err(err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
}

/// Aligned table with evidence, alternative readings, and a summary line.
pub fn verdicts_text(verdicts: &[ClaimVerdict]) -> String {
    let rows: Vec<[String; 5]> = verdicts
        .iter()
        .map(|v| {
            [
                v.claim.to_string(),
                v.params.to_string(),
                v.predicted.to_string(),
                v.computed.to_string(),
                v.verdict.to_string(),
            ]
        })
        .collect();
    let header = ["claim", "params", "predicted", "computed", "verdict"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String; 5]| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if k > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if k < 4 {
                s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(&header);
    for (v, r) in verdicts.iter().zip(&rows) {
        out.push_str(&line(r));
        for reading in &v.readings {
            let _ = writeln!(
                out,
                "    reading {}: predicted {} -> {}",
                reading.label, reading.predicted, reading.verdict
            );
        }
        let _ = writeln!(out, "    {} [{}]", v.evidence.summary, v.evidence.graph);
    }
    let _ = writeln!(out, "summary: {}", Summary::tally(verdicts));
    out
}

/// Parsed form used by tests and tooling that consume verdict JSON.
pub fn parse_verdicts_json(text: &str) -> Result<Vec<Json>> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_topo_graph;

    #[test]
    fn topo_edge_list_format() {
        let t = build_topo_graph(3).unwrap();
        let text = topo_edge_list(&t);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# topograph n=3 order=6 size=6");
        assert_eq!(&lines[1..], ["1 2", "1 4", "1 6", "2 4", "2 5", "3 4"]);
    }

    #[test]
    fn topo_dot_k2() {
        let t = build_topo_graph(2).unwrap();
        assert_eq!(
            topo_dot(&t),
            "graph topograph_n2 {\n  1 [label=\"{1}\"];\n  2 [label=\"{2}\"];\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let t = build_topo_graph(5).unwrap();
        let back = parse_edge_list(&topo_edge_list(&t)).unwrap();
        let g = t.to_simple();
        assert_eq!(back.order(), g.order());
        assert!(g.edges().eq(back.edges()));

        let p = crate::corona(&g, &build_topo_graph(2).unwrap().to_simple()).unwrap();
        let back = parse_edge_list(&simple_edge_list(&p, "corona")).unwrap();
        assert!(p.edges().eq(back.edges()));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("1 2\n").is_err());
        assert!(parse_edge_list("# topograph n=2 order=2 size=1\n0 1\n").is_err());
        assert!(parse_edge_list("# graph g order=2 size=2\n0 1\n").is_err());
        assert!(parse_edge_list("# graph g order=2 size=1\n0 x\n").is_err());
    }
}

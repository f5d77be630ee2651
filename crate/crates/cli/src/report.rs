//! The `analyze` record and its JSON and text renderings.

use std::collections::BTreeMap;

use anyhow::Result;
use resonantk::resonance::{
    fries_number, hexagon_dichotomy_report, resonance_order, sextet_polynomial, find_all_g_star,
    GStar, OrderReport,
};
use resonantk::rings::{
    detect_r5_r6, pentagon_clusters, pentagonal_rings, tau_findings, CapWitness, Shape,
};
use resonantk::FullereneGraph;
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub fries: bool,
    pub pm_cap: usize,
    pub max_k: Option<usize>,
}

#[derive(Serialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub pentagons: usize,
    pub hexagons: usize,
}

#[derive(Serialize)]
pub struct PsiEntry {
    pub l: usize,
    pub psi: usize,
}

#[derive(Serialize)]
pub struct RingSummary {
    pub l: usize,
    pub count: usize,
    pub min_s: usize,
}

#[derive(Serialize)]
pub struct FragmentSummary {
    pub faces: Vec<usize>,
    pub shape: Shape,
    pub gamma: usize,
    pub maximal: bool,
    pub w: usize,
}

#[derive(Serialize)]
pub struct Dichotomy {
    pub hexagons: usize,
    pub central: usize,
    pub complement_bipartite: usize,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub canonical_sha256: String,
    pub counts: Counts,
    pub tau: Option<usize>,
    pub tau_findings: Vec<String>,
    pub psi: Vec<PsiEntry>,
    pub resonance: OrderReport,
    pub sextet_polynomial: Vec<u64>,
    pub clar_number: usize,
    pub fries_number: Option<usize>,
    pub pentagonal_rings: Vec<RingSummary>,
    pub caps: Vec<CapWitness>,
    pub pentagon_clusters: Vec<FragmentSummary>,
    /// True when some pentagon cluster is not a disk.
    pub degenerate_fragments: bool,
    pub g_star: Vec<GStar>,
    pub dichotomy: Dichotomy,
}

impl AnalysisReport {
    pub fn build(f: &FullereneGraph, opts: Options) -> Result<Self> {
        let g = f.graph();
        let rings = pentagonal_rings(f);
        let mut by_len: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for ring in &rings {
            let e = by_len.entry(ring.l()).or_insert((0, usize::MAX));
            e.0 += 1;
            e.1 = e.1.min(ring.s());
        }
        let tau = by_len.keys().next().copied();
        let clusters = pentagon_clusters(f);
        let poly = sextet_polynomial(f);
        let dichotomy = hexagon_dichotomy_report(f);
        let fries_number = if opts.fries {
            Some(fries_number(f, opts.pm_cap)?)
        } else {
            None
        };
        Ok(AnalysisReport {
            schema_version: SCHEMA_VERSION,
            canonical_sha256: g.canonical_code().digest(),
            counts: Counts {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                faces: f.faces().len(),
                pentagons: f.pentagons().len(),
                hexagons: f.hexagons().len(),
            },
            tau,
            tau_findings: tau_findings(tau),
            psi: by_len
                .iter()
                .map(|(&l, &(_, s))| PsiEntry { l, psi: s })
                .collect(),
            resonance: resonance_order(f, opts.max_k)?,
            sextet_polynomial: poly.descending(),
            clar_number: poly.degree(),
            fries_number,
            pentagonal_rings: by_len
                .into_iter()
                .map(|(l, (count, min_s))| RingSummary { l, count, min_s })
                .collect(),
            caps: detect_r5_r6(f),
            degenerate_fragments: clusters.iter().any(|c| !c.maximal),
            pentagon_clusters: clusters
                .into_iter()
                .map(|c| FragmentSummary {
                    w: c.w.len(),
                    faces: c.faces,
                    shape: c.shape,
                    gamma: c.gamma,
                    maximal: c.maximal,
                })
                .collect(),
            g_star: find_all_g_star(f),
            dichotomy: Dichotomy {
                hexagons: dichotomy.len(),
                central: dichotomy.iter().filter(|d| d.central).count(),
                complement_bipartite: dichotomy.iter().filter(|d| d.complement_bipartite).count(),
            },
        })
    }

    pub fn to_json(&self) -> Value {
        sorted(serde_json::to_value(self).expect("report serializes"))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(&format!("{k:<20} {v}\n"));
        };
        let c = &self.counts;
        line("canonical sha256", self.canonical_sha256.clone());
        line(
            "counts",
            format!(
                "V={} E={} F={} pentagons={} hexagons={}",
                c.vertices, c.edges, c.faces, c.pentagons, c.hexagons
            ),
        );
        line("tau", opt(self.tau));
        for finding in &self.tau_findings {
            line("tau finding", finding.clone());
        }
        line(
            "psi",
            self.psi
                .iter()
                .map(|p| format!("psi_{}={}", p.l, p.psi))
                .collect::<Vec<_>>()
                .join(" "),
        );
        line("resonance order", self.resonance.order.to_string());
        if let Some(set) = &self.resonance.failing_set {
            line("failing set", format!("{set:?}"));
        }
        line("sextet polynomial", format!("{:?}", self.sextet_polynomial));
        line("clar number", self.clar_number.to_string());
        line("fries number", opt(self.fries_number));
        line(
            "pentagonal rings",
            self.pentagonal_rings
                .iter()
                .map(|r| format!("l={}:{}", r.l, r.count))
                .collect::<Vec<_>>()
                .join(" "),
        );
        line("R5/R6 caps", self.caps.len().to_string());
        let shapes: Vec<String> = self
            .pentagon_clusters
            .iter()
            .map(|c| format!("{:?}({})", c.shape, c.faces.len()))
            .collect();
        line("pentagon clusters", shapes.join(" "));
        line(
            "G*",
            match self.g_star.first() {
                Some(w) => format!("vertex {} hexagons {:?}", w.vertex, w.hexagons),
                None => "none".into(),
            },
        );
        let d = &self.dichotomy;
        line(
            "dichotomy",
            format!(
                "{} hexagons, {} central, {} bipartite complements",
                d.hexagons, d.central, d.complement_bipartite
            ),
        );
        out
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

/// Rebuilds every object with its keys in ascending order.
pub fn sorted(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<_> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, sorted(v));
            }
            Value::Object(out)
        }
        Value::Array(xs) => Value::Array(xs.into_iter().map(sorted).collect()),
        other => other,
    }
}

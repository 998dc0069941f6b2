//! Finite simple graphs, the edge-list format and the named families.
//!
//! Vertices are 0-indexed internally and 1-indexed in every textual form.

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Immutable simple graph on vertices `0..n` stored as neighbor bitmasks.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    /// Builds a graph from 0-indexed edges. Duplicates are collapsed.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge {{{}, {}}} out of range for {n} vertices",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("loop at vertex {}", u + 1)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v]`: neighbors of `v` together with `v`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(i, j)` with `i < j`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| v < self.n && self.adj[v].is_disjoint(set))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Scans the adjacency for symmetry, loops and range violations.
    pub fn check_invariants(&self) -> Result<()> {
        for (i, nbrs) in self.adj.iter().enumerate() {
            for j in nbrs {
                if j >= self.n {
                    return Err(Error::Consistency(format!("neighbor {} out of range", j + 1)));
                }
                if j == i {
                    return Err(Error::Consistency(format!("loop at {}", i + 1)));
                }
                if !self.adj[j].contains(i) {
                    return Err(Error::Consistency(format!(
                        "asymmetric edge {} -> {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in self.edges() {
            out.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().into_iter().map(|(i, j)| (i + 1, j + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Parses the edge-list format: the first non-comment line holds the vertex
/// count, every later line an edge `u v` with 1-based endpoints. `#` starts a
/// comment and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(err(format!("expected vertex count, got {line:?}")));
                }
                let count: usize = fields[0]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count {:?}", fields[0])))?;
                if count == 0 {
                    return Err(err("vertex count must be positive".into()));
                }
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected \"u v\", got {line:?}")));
                }
                let mut ends = [0usize; 2];
                for (slot, field) in ends.iter_mut().zip(&fields) {
                    let v: usize = field
                        .parse()
                        .map_err(|_| err(format!("bad vertex index {field:?}")))?;
                    if v == 0 || v > count {
                        return Err(err(format!("vertex {v} out of range 1..{count}")));
                    }
                    *slot = v - 1;
                }
                if ends[0] == ends[1] {
                    return Err(err(format!("loop edge at vertex {}", ends[0] + 1)));
                }
                edges.push((ends[0], ends[1]));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex count".into(),
    })?;
    Graph::from_edges(n, edges)
}

/// A named graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    CyclePower { n: usize, d: usize },
    /// `n` legs; the graph has `2n` vertices.
    Centipede(usize),
    Complete(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Centipede(n) => n >= 1,
            FamilySpec::Cycle(n) => n >= 2,
            FamilySpec::CyclePower { n, d } => d >= 1 && n > d,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Argument(format!("invalid family parameters: {self}")))
        }
    }

    pub fn build(&self) -> Result<Graph> {
        build_family(*self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::CyclePower { n, d } => write!(f, "cyclepow:{n}:{d}"),
            FamilySpec::Centipede(n) => write!(f, "centipede:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| Error::Argument(format!("family {s:?}: missing parameter")))?
                .parse()
                .map_err(|_| Error::Argument(format!("family {s:?}: bad number")))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(Error::Argument(format!("family {s:?}: expected {k} parameter(s)")))
            }
        };
        let spec = match parts[0] {
            "path" => arity(1).and_then(|_| num(1)).map(FamilySpec::Path)?,
            "cycle" => arity(1).and_then(|_| num(1)).map(FamilySpec::Cycle)?,
            "centipede" => arity(1).and_then(|_| num(1)).map(FamilySpec::Centipede)?,
            "complete" => arity(1).and_then(|_| num(1)).map(FamilySpec::Complete)?,
            "cyclepow" => {
                arity(2)?;
                FamilySpec::CyclePower {
                    n: num(1)?,
                    d: num(2)?,
                }
            }
            other => return Err(Error::Argument(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn build_family(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges = Vec::new();
    let n = match spec {
        FamilySpec::Path(n) => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        FamilySpec::Cycle(n) => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            if n > 2 {
                edges.push((n - 1, 0));
            }
            n
        }
        FamilySpec::CyclePower { n, d } => {
            for i in 0..n {
                for j in i + 1..n {
                    if (j - i).min(n - (j - i)) <= d {
                        edges.push((i, j));
                    }
                }
            }
            n
        }
        FamilySpec::Centipede(n) => {
            // legs a_i -> i-1, spine b_i -> n+i-1
            edges.extend((0..n).map(|i| (i, n + i)));
            edges.extend((1..n).map(|j| (n + j - 1, n + j)));
            2 * n
        }
        FamilySpec::Complete(n) => {
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            n
        }
    };
    Graph::from_edges(n, edges)
}

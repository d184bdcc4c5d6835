//! Graph data model: undirected simple graphs over labelled nodes, edge-edit
//! perturbations, the symmetric normalised Laplacian, and the error matrix
//! between a graph and its perturbed counterpart.
//!
//! Node labels are `0..n-1` and fixed. Edges are unordered pairs stored
//! normalised as `(min, max)` and always iterated in lexicographic order, so
//! every operation here is deterministic.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::{Error, Result};

/// Normalise an unordered pair to `(min, max)`.
#[inline]
pub fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Dense symmetric real matrix. Mirrored entries are written together, so
/// `get(i, j) == get(j, i)` holds bit-exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// Row-major view of the full mirrored storage.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let row = self.row(i);
            let mut acc = 0.0;
            for j in 0..self.n {
                acc += row[j] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// Entrywise difference `self - other`.
    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SymMatrix { n: self.n, data })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Undirected simple graph on `n` labelled nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    degrees: Vec<usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are normalised and
    /// deduplicated; self-loops and out-of-range ids are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = BTreeSet::new();
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            edges.insert(ordered(u, v));
        }
        Ok(Graph::from_edge_set(n, edges))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Graph {
        let mut degrees = vec![0usize; n];
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph {
            n,
            edges,
            degrees,
            adj,
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The 1-hop neighbourhood of `u`, in ascending order.
    pub fn neighbourhood(&self, u: usize) -> &BTreeSet<usize> {
        &self.adj[u]
    }

    pub fn has_isolated(&self) -> bool {
        self.degrees.iter().any(|&d| d == 0)
    }

    /// Breadth-first reachability from node 0.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Symmetric normalised Laplacian. Diagonal entries are 1 for
    /// non-isolated nodes and 0 for isolated ones; the off-diagonal entry for
    /// an edge `u ~ v` is `-1/sqrt(d_u d_v)`.
    pub fn normalized_laplacian(&self) -> SymMatrix {
        let mut l = SymMatrix::zeros(self.n);
        for u in 0..self.n {
            if self.degrees[u] > 0 {
                l.set(u, u, 1.0);
            }
        }
        for &(u, v) in &self.edges {
            let w = -1.0 / ((self.degrees[u] as f64) * (self.degrees[v] as f64)).sqrt();
            l.set(u, v, w);
        }
        l
    }

    /// Applies an edge-edit perturbation, returning the perturbed graph.
    pub fn apply_perturbation(&self, p: &Perturbation) -> Result<Graph> {
        p.validate_against(self)?;
        let mut edges = self.edges.clone();
        for &(u, v) in &p.deleted {
            edges.remove(&(u, v));
        }
        for &(u, v) in &p.added {
            edges.insert((u, v));
        }
        Ok(Graph::from_edge_set(self.n, edges))
    }

    /// Writes the edge-list text format: a `n m` header line followed by one
    /// `u v` line per edge with `u < v`, in lexicographic order.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(w, "{} {}", u, v)?;
        }
        Ok(())
    }

    pub fn save_edge_list(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_edge_list(std::io::BufWriter::new(file))
    }

    /// Reads the edge-list text format. Unlike [`Graph::new`], the reader is
    /// strict: duplicate pairs (in either orientation) and self-loops are
    /// rejected rather than cleaned up.
    pub fn read_edge_list<R: BufRead>(r: R) -> Result<Graph> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list file".into()))??;
        let mut it = header.split_whitespace();
        let n: usize = parse_token(it.next(), "node count")?;
        let m: usize = parse_token(it.next(), "edge count")?;
        let mut seen = BTreeSet::new();
        let mut edge_list = Vec::with_capacity(m);
        for line in lines {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut it = trimmed.split_whitespace();
            let u: usize = parse_token(it.next(), "edge endpoint")?;
            let v: usize = parse_token(it.next(), "edge endpoint")?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert(ordered(u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            edge_list.push((u, v));
        }
        if edge_list.len() != m {
            return Err(Error::Parse(format!(
                "edge-list header says {} edges but {} were given",
                m,
                edge_list.len()
            )));
        }
        Graph::new(n, &edge_list)
    }

    pub fn load_edge_list(path: &Path) -> Result<Graph> {
        let file = std::fs::File::open(path)?;
        Graph::read_edge_list(std::io::BufReader::new(file))
    }
}

fn parse_token<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T> {
    tok.ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what}")))
}

/// Disjoint sets of added and deleted edges relative to a base graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Perturbation {
    added: BTreeSet<(usize, usize)>,
    deleted: BTreeSet<(usize, usize)>,
}

impl Perturbation {
    pub fn empty() -> Perturbation {
        Perturbation::default()
    }

    /// Builds a perturbation from added/deleted pair lists. Pairs are
    /// normalised; the two sets must be disjoint and free of self-loops.
    pub fn new(added: &[(usize, usize)], deleted: &[(usize, usize)]) -> Result<Perturbation> {
        let mut p = Perturbation::default();
        for &(u, v) in deleted {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            p.deleted.insert(ordered(u, v));
        }
        for &(u, v) in added {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = ordered(u, v);
            if p.deleted.contains(&e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            p.added.insert(e);
        }
        Ok(p)
    }

    pub fn added(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.added.iter().copied()
    }

    pub fn deleted(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.deleted.iter().copied()
    }

    pub fn has_added(&self, u: usize, v: usize) -> bool {
        self.added.contains(&ordered(u, v))
    }

    pub fn has_deleted(&self, u: usize, v: usize) -> bool {
        self.deleted.contains(&ordered(u, v))
    }

    /// Number of single-edge edits: `|added| + |deleted|`.
    pub fn edit_count(&self) -> usize {
        self.added.len() + self.deleted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.added.is_empty() && self.deleted.is_empty()
    }

    /// The inverse edit: swaps the added and deleted sets.
    pub fn inverse(&self) -> Perturbation {
        Perturbation {
            added: self.deleted.clone(),
            deleted: self.added.clone(),
        }
    }

    /// Checks the perturbation invariants against a base graph: every deleted
    /// edge must exist, no added edge may exist, and node ids must be in
    /// range.
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        for &(u, v) in self.deleted.iter().chain(self.added.iter()) {
            for node in [u, v] {
                if node >= g.node_count() {
                    return Err(Error::NodeOutOfRange {
                        node,
                        n: g.node_count(),
                    });
                }
            }
        }
        for &(u, v) in &self.deleted {
            if !g.has_edge(u, v) {
                return Err(Error::EdgeNotFound(u, v));
            }
        }
        for &(u, v) in &self.added {
            if g.has_edge(u, v) {
                return Err(Error::EdgeAlreadyExists(u, v));
            }
        }
        Ok(())
    }

    /// Writes the perturbation file format: one `+ u v` line per added edge
    /// followed by one `- u v` line per deleted edge.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        for &(u, v) in &self.added {
            writeln!(w, "+ {} {}", u, v)?;
        }
        for &(u, v) in &self.deleted {
            writeln!(w, "- {} {}", u, v)?;
        }
        Ok(())
    }

    pub fn save_text(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_text(std::io::BufWriter::new(file))
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Perturbation> {
        let mut added = Vec::new();
        let mut deleted = Vec::new();
        for line in r.lines() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut it = trimmed.split_whitespace();
            let sign = it.next().unwrap();
            let u: usize = parse_token(it.next(), "edge endpoint")?;
            let v: usize = parse_token(it.next(), "edge endpoint")?;
            match sign {
                "+" => added.push((u, v)),
                "-" => deleted.push((u, v)),
                other => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' line marker, got {other:?}"
                    )))
                }
            }
        }
        Perturbation::new(&added, &deleted)
    }

    pub fn load_text(path: &Path) -> Result<Perturbation> {
        let file = std::fs::File::open(path)?;
        Perturbation::read_text(std::io::BufReader::new(file))
    }
}

/// Error matrix `E = lp - l` between two equally sized symmetric matrices.
pub fn error_matrix(l: &SymMatrix, lp: &SymMatrix) -> Result<SymMatrix> {
    lp.sub(l)
}

//! Immutable simple undirected graphs and vertex subsets.
//!
//! Vertices are dense integer ids `0..n`. Display labels (the `u_i`, `v_i`,
//! `v'_i` names used when reporting witnesses) live in an optional label
//! table and never affect computation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Subset of the vertices of a graph of a fixed order (the "universe").
///
/// Stored as a bitset, one bit per vertex id, so sets over graphs of any
/// order can be represented; the exponential solvers impose their own cap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty subset of `0..universe`.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64).max(1)],
        }
    }

    /// The full vertex set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.words[v / 64] |= 1 << (v % 64);
        }
        s
    }

    /// Set containing exactly the given ids. Fails on an id >= universe.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            s.words[v / 64] |= 1 << (v % 64);
        }
        Ok(s)
    }

    /// Size of the universe this set lives in (the graph order).
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`; panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe");
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn complement(&self) -> VertexSet {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Order as sorted id sequences: {0,3} < {1,2}; ties broken by length.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an unordered edge list. Duplicate pairs collapse,
    /// symmetric closure is applied; ids out of range and self-loops fail.
    pub fn build(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::empty(order); order];
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    order,
                });
            }
            if v >= order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n: order,
            adj,
            labels: None,
        })
    }

    /// Attaches a display-label table; `labels.len()` must equal the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex required");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Display label of `v`: the label table entry, or the id as text.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(t) => t[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Labels of a set's members, ascending by id.
    pub fn labels_of(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.label(v)).collect()
    }

    /// Closed neighborhood N[S] = S together with every neighbor of S.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Induced subgraph on V minus `s`, vertices relabeled densely; the old
    /// display labels ride along so reports stay readable.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.induced_subgraph(&s.complement())
    }

    /// Induced subgraph on `s` with dense relabeling and retained labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        let kept = s.to_vec();
        if kept.is_empty() {
            return Err(Error::EmptyResult);
        }
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in kept.iter().enumerate() {
            index[old] = new;
        }
        let mut edges = Vec::new();
        for &u in &kept {
            for v in self.adj[u].iter() {
                if u < v && s.contains(v) {
                    edges.push((index[u], index[v]));
                }
            }
        }
        let labels = kept.iter().map(|&old| self.label(old)).collect();
        Ok(Graph::build(kept.len(), &edges)?.with_labels(labels))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.is_full()
    }

    /// Parses the edge-list text format: first data line "n m", then m lines
    /// "u v" with 0-based ids; '#' lines and blank lines are ignored, except
    /// that "# label <id> <name>" comments populate the label table.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut labels: Vec<(usize, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() == 4 && fields[0] == "#" && fields[1] == "label" {
                    if let Ok(v) = fields[2].parse::<usize>() {
                        labels.push((v, fields[3].to_string()));
                    }
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::ParseEdgeList {
                    line: idx + 1,
                    reason: format!("expected a non-negative integer, got '{s}'"),
                })
            };
            if fields.len() != 2 {
                return Err(Error::ParseEdgeList {
                    line: idx + 1,
                    reason: format!("expected two fields, got {}", fields.len()),
                });
            }
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some(_) => edges.push((a, b)),
            }
        }
        let (n, m) = header.ok_or(Error::ParseEdgeList {
            line: 0,
            reason: "missing 'n m' header line".into(),
        })?;
        if edges.len() != m {
            return Err(Error::ParseEdgeList {
                line: 0,
                reason: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        let g = Graph::build(n, &edges)?;
        if labels.iter().any(|&(v, _)| v < n) {
            let mut table: Vec<String> = (0..n).map(|v| v.to_string()).collect();
            for (v, name) in labels {
                if v < n {
                    table[v] = name;
                }
            }
            return Ok(g.with_labels(table));
        }
        Ok(g)
    }

    /// Serializes to the edge-list format, with the label table (when present)
    /// and any extra comments emitted as '#' lines.
    pub fn to_edge_list(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str(&format!("# {c}\n"));
        }
        if let Some(labels) = &self.labels {
            for (v, l) in labels.iter().enumerate() {
                out.push_str(&format!("# label {v} {l}\n"));
            }
        }
        let edges = self.edges();
        out.push_str(&format!("{} {}\n", self.n, edges.len()));
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

//! Generators for the analyzed graph families and the splitting operator.
//!
//! Labeling conventions (ids are dense, labels match the usual figures):
//! - path: v1..vn along the path.
//! - cycle: u1..un around the cycle.
//! - complete: v1..vn.
//! - bipartite K_{m,n}: u1..um then v1..vn.
//! - star K_{1,n}: center v0 (id 0), leaves v1..vn.
//! - wheel W_n: hub v0 (id 0), rim v1..v(n-1) forming C_{n-1}.
//! - ladder L_n: u1..un (ids 0..n-1) and v1..vn (ids n..2n-1), rungs u_i-v_i.
//! - hypercube Q_k: id = coordinate bit-string value, label = the bit string,
//!   most significant bit first.
//! - coconut tree CT(m,n): path v1..vm (ids 0..m-1), pendants u1..un at v1.
//! - diamond snake D_n: top u1..un, spine v1..v(n+1), bottom w1..wn; each
//!   spine edge of P_{n+1} is replaced by the 4-cycle v_i, u_i, v_{i+1}, w_i.
//! - triangular snake TS_n: spine v1..v(n+1), apexes u1..un over each edge.
//! - helm H_m: hub v0, rim v1..vm, pendants u1..um with u_i attached to v_i.
//! - pineapple K_m^n: clique v1..vm, star leaves u1..un attached to v1.
//! - dove tail DT_n: path v1..vn plus the join vertex v0 (id n).
//! - petersen: outer 5-cycle v1..v5, inner pentagram v6..v10, spokes v_i-v_{i+5}.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph family instance, as written in CLI specs like "coconut:4,3".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Ladder(usize),
    Hypercube(usize),
    CoconutTree(usize, usize),
    DiamondSnake(usize),
    TriangularSnake(usize),
    Helm(usize),
    Pineapple(usize, usize),
    DoveTail(usize),
    Petersen,
    /// One application of the splitting operator to an inner family.
    Split(Box<FamilySpec>),
}

impl FamilySpec {
    fn check(family: &'static str, ok: bool, reason: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter {
                family,
                reason: reason.to_string(),
            })
        }
    }

    /// Validates parameter ranges without building the graph.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match *self {
            Path(n) => Self::check("path", n >= 1, "need n >= 1"),
            Cycle(n) => Self::check("cycle", n >= 3, "need n >= 3"),
            Complete(n) => Self::check("complete", n >= 1, "need n >= 1"),
            CompleteBipartite(m, n) => {
                Self::check("bipartite", m >= 1 && n >= 1, "need m, n >= 1")
            }
            Star(n) => Self::check("star", n >= 1, "need n >= 1"),
            Wheel(n) => Self::check("wheel", n >= 4, "need n >= 4"),
            Ladder(n) => Self::check("ladder", n >= 1, "need n >= 1"),
            Hypercube(_) => Ok(()),
            CoconutTree(m, n) => Self::check("coconut", m >= 1 && n >= 1, "need m, n >= 1"),
            DiamondSnake(n) => Self::check("diamond", n >= 1, "need n >= 1"),
            TriangularSnake(n) => Self::check("triangular", n >= 1, "need n >= 1"),
            Helm(m) => Self::check("helm", m >= 4, "need m >= 4"),
            Pineapple(m, n) => Self::check("pineapple", m >= 3 && n >= 2, "need m >= 3, n >= 2"),
            DoveTail(n) => Self::check("dovetail", n >= 2, "need n >= 2"),
            Petersen => Ok(()),
            Split(ref inner) => inner.validate(),
        }
    }

    /// Builds the family instance with its canonical labels.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        let g = match *self {
            Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::build(n, &edges)?.with_labels(seq("v", 1, n))
            }
            Cycle(n) => {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::build(n, &edges)?.with_labels(seq("u", 1, n))
            }
            Complete(n) => {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Graph::build(n, &edges)?.with_labels(seq("v", 1, n))
            }
            CompleteBipartite(m, n) => {
                let mut edges = Vec::new();
                for u in 0..m {
                    for v in 0..n {
                        edges.push((u, m + v));
                    }
                }
                let mut labels = seq("u", 1, m);
                labels.extend(seq("v", 1, n));
                Graph::build(m + n, &edges)?.with_labels(labels)
            }
            Star(n) => {
                let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
                let mut labels = vec!["v0".to_string()];
                labels.extend(seq("v", 1, n));
                Graph::build(n + 1, &edges)?.with_labels(labels)
            }
            Wheel(n) => {
                let rim = n - 1;
                let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
                for i in 0..rim {
                    edges.push((1 + i, 1 + (i + 1) % rim));
                }
                let mut labels = vec!["v0".to_string()];
                labels.extend(seq("v", 1, rim));
                Graph::build(n, &edges)?.with_labels(labels)
            }
            Ladder(n) => {
                let mut edges = Vec::new();
                for i in 0..n {
                    edges.push((i, n + i));
                    if i + 1 < n {
                        edges.push((i, i + 1));
                        edges.push((n + i, n + i + 1));
                    }
                }
                let mut labels = seq("u", 1, n);
                labels.extend(seq("v", 1, n));
                Graph::build(2 * n, &edges)?.with_labels(labels)
            }
            Hypercube(k) => {
                let n = 1usize << k;
                let mut edges = Vec::new();
                for v in 0..n {
                    for b in 0..k {
                        let w = v ^ (1 << b);
                        if v < w {
                            edges.push((v, w));
                        }
                    }
                }
                let width = k.max(1);
                let labels = (0..n).map(|v| format!("{v:0width$b}")).collect();
                Graph::build(n, &edges)?.with_labels(labels)
            }
            CoconutTree(m, n) => {
                let mut edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
                for p in 0..n {
                    edges.push((0, m + p));
                }
                let mut labels = seq("v", 1, m);
                labels.extend(seq("u", 1, n));
                Graph::build(m + n, &edges)?.with_labels(labels)
            }
            DiamondSnake(n) => {
                // u_i = i-1, v_i = n+i-1, w_i = 2n+i.
                let mut edges = Vec::new();
                for i in 1..=n {
                    let (u, w) = (i - 1, 2 * n + i);
                    let (vl, vr) = (n + i - 1, n + i);
                    edges.extend([(vl, u), (u, vr), (vl, w), (w, vr)]);
                }
                let mut labels = seq("u", 1, n);
                labels.extend(seq("v", 1, n + 1));
                labels.extend(seq("w", 1, n));
                Graph::build(3 * n + 1, &edges)?.with_labels(labels)
            }
            TriangularSnake(n) => {
                // v_i = i-1 along the spine, u_i = n+i above each spine edge.
                let mut edges = Vec::new();
                for i in 1..=n {
                    let (vl, vr, u) = (i - 1, i, n + i);
                    edges.extend([(vl, vr), (vl, u), (u, vr)]);
                }
                let mut labels = seq("v", 1, n + 1);
                labels.extend(seq("u", 1, n));
                Graph::build(2 * n + 1, &edges)?.with_labels(labels)
            }
            Helm(m) => {
                let mut edges = Vec::new();
                for i in 1..=m {
                    edges.push((0, i));
                    edges.push((i, 1 + i % m));
                    edges.push((i, m + i));
                }
                let mut labels = vec!["v0".to_string()];
                labels.extend(seq("v", 1, m));
                labels.extend(seq("u", 1, m));
                Graph::build(2 * m + 1, &edges)?.with_labels(labels)
            }
            Pineapple(m, n) => {
                let mut edges = Vec::new();
                for u in 0..m {
                    for v in u + 1..m {
                        edges.push((u, v));
                    }
                }
                for p in 0..n {
                    edges.push((0, m + p));
                }
                let mut labels = seq("v", 1, m);
                labels.extend(seq("u", 1, n));
                Graph::build(m + n, &edges)?.with_labels(labels)
            }
            DoveTail(n) => {
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                for v in 0..n {
                    edges.push((v, n));
                }
                let mut labels = seq("v", 1, n);
                labels.push("v0".to_string());
                Graph::build(n + 1, &edges)?.with_labels(labels)
            }
            Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, 5 + i));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::build(10, &edges)?.with_labels(seq("v", 1, 10))
            }
            Split(ref inner) => splitting(&inner.generate()?),
        };
        Ok(g)
    }

    /// Display label of a vertex id under this family's convention.
    pub fn display_label(&self, v: usize) -> Result<String> {
        let g = self.generate()?;
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        Ok(g.label(v))
    }

    /// Parses the CLI grammar: "path:7", "coconut:4,3", "petersen",
    /// "split(<spec>)". Nesting of split(..) is allowed.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let err = |reason: &str| Error::ParseSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("split(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| err("missing ')'"))?;
            return Ok(FamilySpec::Split(Box::new(FamilySpec::parse(inner)?)));
        }
        let (tag, params) = match t.split_once(':') {
            Some((tag, p)) => (tag.trim(), Some(p)),
            None => (t, None),
        };
        let nums: Vec<usize> = match params {
            None => Vec::new(),
            Some(p) => p
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("parameters must be non-negative integers"))?,
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(err(&format!(
                    "family '{tag}' takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match tag {
            "path" => {
                arity(1)?;
                FamilySpec::Path(nums[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(nums[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(nums[0])
            }
            "bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(nums[0], nums[1])
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(nums[0])
            }
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel(nums[0])
            }
            "ladder" => {
                arity(1)?;
                FamilySpec::Ladder(nums[0])
            }
            "hypercube" => {
                arity(1)?;
                FamilySpec::Hypercube(nums[0])
            }
            "coconut" => {
                arity(2)?;
                FamilySpec::CoconutTree(nums[0], nums[1])
            }
            "diamond" => {
                arity(1)?;
                FamilySpec::DiamondSnake(nums[0])
            }
            "triangular" => {
                arity(1)?;
                FamilySpec::TriangularSnake(nums[0])
            }
            "helm" => {
                arity(1)?;
                FamilySpec::Helm(nums[0])
            }
            "pineapple" => {
                arity(2)?;
                FamilySpec::Pineapple(nums[0], nums[1])
            }
            "dovetail" => {
                arity(1)?;
                FamilySpec::DoveTail(nums[0])
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            other => return Err(err(&format!("unknown family '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            Star(n) => write!(f, "star:{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            Ladder(n) => write!(f, "ladder:{n}"),
            Hypercube(k) => write!(f, "hypercube:{k}"),
            CoconutTree(m, n) => write!(f, "coconut:{m},{n}"),
            DiamondSnake(n) => write!(f, "diamond:{n}"),
            TriangularSnake(n) => write!(f, "triangular:{n}"),
            Helm(m) => write!(f, "helm:{m}"),
            Pineapple(m, n) => write!(f, "pineapple:{m},{n}"),
            DoveTail(n) => write!(f, "dovetail:{n}"),
            Petersen => write!(f, "petersen"),
            Split(inner) => write!(f, "split({inner})"),
        }
    }
}

fn seq(prefix: &str, from: usize, count: usize) -> Vec<String> {
    (from..from + count).map(|i| format!("{prefix}{i}")).collect()
}

/// The splitting graph S(G): one shadow vertex per original, the shadow of v
/// adjacent to exactly N(v) among the originals, shadows pairwise non-adjacent.
/// Originals keep their ids and labels; the shadow of id v is id v + n with
/// label "x'" when v is labeled "x".
pub fn splitting(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges();
    for (u, v) in g.edges() {
        edges.push((u + n, v));
        edges.push((u, v + n));
    }
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    labels.extend((0..n).map(|v| format!("{}'", g.label(v))));
    Graph::build(2 * n, &edges)
        .expect("splitting preserves graph validity")
        .with_labels(labels)
}

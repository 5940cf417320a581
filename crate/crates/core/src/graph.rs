//! Weighted dual graphs of simple-normal-crossings resolutions.
//!
//! A vertex is an exceptional curve carrying its self-intersection (`weight`)
//! and genus; the number of edges between two vertices is the intersection
//! number of the two curves. Loops are impossible for snc divisors, multiple
//! edges are not.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ValidationError};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub label: String,
    pub weight: i64,
    pub genus: u32,
}

/// A connected, loop-free weighted multigraph with dense vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    // Multiplicity of each unordered pair (i, j) with i < j.
    edges: BTreeMap<(usize, usize), u32>,
}

/// Raw, unvalidated graph description. Labels are arbitrary strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<VertexDocument>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDocument {
    pub label: String,
    pub weight: i64,
    #[serde(default)]
    pub genus: i64,
}

impl DualGraph {
    /// Builds a graph from `(weight, genus)` pairs and an edge list of ids.
    /// Repeated pairs raise the multiplicity. Labels are the ids, zero-padded
    /// so that sorted label order is id order.
    pub fn new(nodes: &[(i64, u32)], edges: &[(usize, usize)]) -> Result<Self> {
        let width = nodes.len().to_string().len();
        let vertices = nodes
            .iter()
            .enumerate()
            .map(|(id, &(weight, genus))| Vertex {
                id,
                label: format!("{id:0width$}"),
                weight,
                genus,
            })
            .collect();
        Self::from_parts(vertices, edges.iter().copied())
    }

    fn from_parts(
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(ValidationError::Empty.into());
        }
        let n = vertices.len();
        let mut multiplicities = BTreeMap::new();
        for (i, j) in edges {
            for k in [i, j] {
                if k >= n {
                    return Err(ValidationError::UnknownVertex(k.to_string()).into());
                }
            }
            if i == j {
                return Err(ValidationError::SelfLoop(vertices[i].label.clone()).into());
            }
            *multiplicities.entry((i.min(j), i.max(j))).or_insert(0) += 1;
        }
        let graph = DualGraph {
            vertices,
            edges: multiplicities,
        };
        if !graph.is_connected() {
            return Err(ValidationError::Disconnected.into());
        }
        Ok(graph)
    }

    /// Validates a parsed document. Labels are mapped to ids in sorted order.
    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let mut by_label: BTreeMap<&str, &VertexDocument> = BTreeMap::new();
        for v in &doc.vertices {
            if by_label.insert(v.label.as_str(), v).is_some() {
                return Err(ValidationError::DuplicateId(v.label.clone()).into());
            }
            if v.genus < 0 {
                return Err(ValidationError::NegativeGenus {
                    label: v.label.clone(),
                    genus: v.genus,
                }
                .into());
            }
        }
        let ids: BTreeMap<&str, usize> = by_label
            .keys()
            .enumerate()
            .map(|(id, &l)| (l, id))
            .collect();
        let vertices = by_label
            .values()
            .enumerate()
            .map(|(id, v)| {
                let genus = u32::try_from(v.genus)
                    .map_err(|_| Error::Syntax(format!("genus {} out of range", v.genus)))?;
                Ok(Vertex {
                    id,
                    label: v.label.clone(),
                    weight: v.weight,
                    genus,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (a, b) in &doc.edges {
            let lookup = |l: &String| {
                ids.get(l.as_str())
                    .copied()
                    .ok_or_else(|| Error::from(ValidationError::UnknownVertex(l.clone())))
            };
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(ValidationError::SelfLoop(a.clone()).into());
            }
            edges.push((i, j));
        }
        Self::from_parts(vertices, edges)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDocument {
                    label: v.label.clone(),
                    weight: v.weight,
                    genus: v.genus.into(),
                })
                .collect(),
            edges: self
                .edge_list()
                .into_iter()
                .map(|(i, j)| {
                    (
                        self.vertices[i].label.clone(),
                        self.vertices[j].label.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.vertices[i].weight
    }

    pub fn genus(&self, i: usize) -> u32 {
        self.vertices[i].genus
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.edges.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    /// Edge count with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    /// Every edge once per unit of multiplicity, as `(i, j)` with `i < j`.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .flat_map(|(&pair, &m)| std::iter::repeat_n(pair, m as usize))
            .collect()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.keys().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    fn is_connected(&self) -> bool {
        let mut seen = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.len()
    }

    /// Same graph with vertex `i` moved to position `perm[i]`, relabelled
    /// like [`DualGraph::new`].
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len(), "permutation length");
        let mut nodes = vec![(0, 0); self.len()];
        for v in &self.vertices {
            nodes[perm[v.id]] = (v.weight, v.genus);
        }
        let edges: Vec<(usize, usize)> = self
            .edge_list()
            .into_iter()
            .map(|(i, j)| (perm[i], perm[j]))
            .collect();
        Self::new(&nodes, &edges).expect("permutation preserves validity")
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        let n = self.len();
        let mut entries = vec![vec![0i64; n]; n];
        for v in &self.vertices {
            entries[v.id][v.id] = v.weight;
        }
        for (&(i, j), &m) in &self.edges {
            entries[i][j] = m as i64;
            entries[j][i] = m as i64;
        }
        IntersectionMatrix { entries }
    }

    /// Cycle rank `b_1(Γ) = #edges - #vertices + 1`.
    pub fn first_betti(&self) -> u64 {
        (self.edge_count() + 1 - self.len()) as u64
    }

    /// Genus-0 curves of self-intersection -1; their presence means the
    /// resolution is not minimal.
    pub fn minimality_warnings(&self) -> Vec<MinimalityWarning> {
        self.vertices
            .iter()
            .filter(|v| v.genus == 0 && v.weight == -1)
            .map(|v| MinimalityWarning {
                vertex: v.id,
                label: v.label.clone(),
            })
            .collect()
    }
}

impl fmt::Display for DualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("{}:{}", v.weight, v.genus))
            .collect();
        let edges: Vec<String> = self
            .edge_list()
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect();
        write!(f, "{};{}", nodes.join(","), edges.join(","))
    }
}

/// A `(-1)`-curve of genus 0 that could be contracted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityWarning {
    pub vertex: usize,
    pub label: String,
}

impl fmt::Display for MinimalityWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {:?} is a rational (-1)-curve; the resolution is not minimal",
            self.label
        )
    }
}

/// Symmetric intersection form of the exceptional curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Self {
        let n = entries.len();
        assert!(
            entries.iter().all(|r| r.len() == n),
            "matrix must be square"
        );
        IntersectionMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_negative_definite(&self) -> bool {
        linalg::is_negative_definite(&self.entries)
    }

    /// `Z · E_i` for an integral cycle.
    pub fn dot_vertex(&self, z: &[i64], i: usize) -> i64 {
        self.entries[i].iter().zip(z).map(|(m, a)| m * a).sum()
    }
}

/// Parses a JSON graph document.
pub fn parse_graph(text: &str) -> Result<DualGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    DualGraph::from_document(&doc)
}

/// Parses the terse inline form `w:g,w:g,...;i-j,i-j,...`.
///
/// Nodes are `weight:genus` (genus may be omitted, meaning 0) and get ids in
/// order of appearance; edges are pairs of those ids. The edge part may be
/// empty or absent.
pub fn parse_inline(text: &str) -> Result<DualGraph> {
    let syntax = |msg: String| Error::Syntax(msg);
    let (node_part, edge_part) = match text.split_once(';') {
        Some((n, e)) => (n, e),
        None => (text, ""),
    };
    let mut nodes = Vec::new();
    for tok in node_part
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let (w, g) = tok.split_once(':').unwrap_or((tok, "0"));
        let weight = w
            .trim()
            .parse::<i64>()
            .map_err(|_| syntax(format!("bad weight in node {tok:?}")))?;
        let genus = g
            .trim()
            .parse::<i64>()
            .map_err(|_| syntax(format!("bad genus in node {tok:?}")))?;
        nodes.push((weight, genus));
    }
    let mut edges = Vec::new();
    for tok in edge_part
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| syntax(format!("bad edge {tok:?}")))?;
        let parse_id = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| syntax(format!("bad edge {tok:?}")))
        };
        edges.push((parse_id(a)?.to_string(), parse_id(b)?.to_string()));
    }
    // Zero-padded labels keep the sorted label order equal to the node order.
    let width = nodes.len().to_string().len();
    let label = |i: usize| format!("{i:0width$}");
    let doc = GraphDocument {
        vertices: nodes
            .iter()
            .enumerate()
            .map(|(i, &(weight, genus))| VertexDocument {
                label: label(i),
                weight,
                genus,
            })
            .collect(),
        edges: edges
            .into_iter()
            .map(|(a, b)| {
                let relabel = |s: String| s.parse::<usize>().map(label).unwrap_or(s);
                (relabel(a), relabel(b))
            })
            .collect(),
    };
    DualGraph::from_document(&doc)
}

//! Simple undirected graphs: construction, graph6 and edge-list parsing,
//! degree statistics, and the adjacency/Laplacian matrices.

use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// A simple undirected graph on vertices `0..n`.
///
/// Stored densely; the target scale is a few thousand vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n, symmetric, zero diagonal
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EdgeList {
                reason: "graph must have at least one vertex".into(),
            });
        }
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::EdgeList {
                    reason: format!("self-loop at vertex {u}"),
                });
            }
            if u >= n || v >= n {
                return Err(Error::EdgeList {
                    reason: format!("vertex id {} out of range (n = {n})", u.max(v)),
                });
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in column order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| {
            if self.adj[i * self.n + j] {
                1.0
            } else {
                0.0
            }
        })
    }

    /// `L = diag(degrees) - A`; every row sums to zero.
    pub fn laplacian_matrix(&self) -> DMatrix<f64> {
        let mut l = -self.adjacency_matrix();
        for v in 0..self.n {
            l[(v, v)] = self.degree(v) as f64;
        }
        l
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats::of(self)
    }

    /// Union with a disjoint copy of `other` (vertices shifted by `self.n`).
    /// Produces disconnected inputs for tests and error paths.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges).expect("union of valid graphs is valid")
    }
}

/// Per-vertex degrees together with the first two degree moments.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    /// Average degree.
    pub mean_degree: f64,
    /// Average of the squared degrees.
    pub mean_square_degree: f64,
    pub is_regular: bool,
}

impl DegreeStats {
    fn of(g: &Graph) -> Self {
        let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let n = degrees.len() as f64;
        let mean_degree = degrees.iter().map(|&d| d as f64).sum::<f64>() / n;
        let mean_square_degree = degrees.iter().map(|&d| (d * d) as f64).sum::<f64>() / n;
        let is_regular = degrees.windows(2).all(|w| w[0] == w[1]);
        Self {
            degrees,
            mean_degree,
            mean_square_degree,
            is_regular,
        }
    }

    pub fn min(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

const G6_BIAS: u8 = 63;
const G6_MAX: u8 = 126;

/// Decode one graph from McKay's graph6 format.
///
/// Supports the 1-byte header (`n <= 62`) and the 4-byte header
/// (`n <= 258047`); padding bits must be zero and no trailing bytes are
/// allowed, so decoding inverts [`encode_graph6`] exactly.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(G6_BIAS..=G6_MAX).contains(&b) {
            return Err(Error::Graph6 {
                offset: i,
                reason: format!("byte {b:#04x} outside printable graph6 range 63..=126"),
            });
        }
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Graph6 {
                offset: 1,
                reason: "8-byte vertex counts (n > 258047) not supported".into(),
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6 {
                offset: bytes.len(),
                reason: "truncated 4-byte vertex count".into(),
            });
        }
        let n = ((bytes[1] - G6_BIAS) as usize) << 12
            | ((bytes[2] - G6_BIAS) as usize) << 6
            | (bytes[3] - G6_BIAS) as usize;
        (n, 4)
    } else {
        ((bytes[0] - G6_BIAS) as usize, 1)
    };
    if n == 0 {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "vertex count 0".into(),
        });
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Error::Graph6 {
            offset: bytes.len(),
            reason: format!(
                "truncated bit vector: need {nbytes} data bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Error::Graph6 {
            offset: pos + nbytes,
            reason: "trailing data after bit vector".into(),
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut u = 0usize;
    let mut v = 1usize;
    while bit < nbytes * 6 {
        let byte = bytes[pos] - G6_BIAS;
        for k in (0..6).rev() {
            let set = (byte >> k) & 1 == 1;
            if bit < nbits {
                if set {
                    edges.push((u, v));
                }
                u += 1;
                if u == v {
                    u = 0;
                    v += 1;
                }
            } else if set {
                return Err(Error::Graph6 {
                    offset: pos,
                    reason: "nonzero padding bit".into(),
                });
            }
            bit += 1;
        }
        pos += 1;
    }

    Graph::from_edges(n, &edges).map_err(|e| Error::Graph6 {
        offset: 0,
        reason: e.to_string(),
    })
}

/// Encode in graph6 format (inverse of [`parse_graph6`]).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + G6_BIAS);
    } else {
        assert!(n <= 258_047, "graph too large for 4-byte graph6 header");
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + G6_BIAS);
        out.push(((n >> 6) & 0x3f) as u8 + G6_BIAS);
        out.push((n & 0x3f) as u8 + G6_BIAS);
    }
    let mut byte = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            byte <<= 1;
            if g.has_edge(u, v) {
                byte |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(byte + G6_BIAS);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + G6_BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse a whitespace-separated edge list with 0-based vertex ids.
///
/// If the first non-empty line holds a single integer it is taken as the
/// vertex count; otherwise `n` is inferred as `max id + 1`. Duplicate edges
/// collapse, self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut tokens: Vec<&str> = Vec::new();
    let mut explicit_n: Option<usize> = None;

    if let Some(first) = lines.next() {
        let first_tokens: Vec<&str> = first.split_whitespace().collect();
        if first_tokens.len() == 1 {
            explicit_n = Some(parse_vertex(first_tokens[0])?);
        } else {
            tokens.extend(first_tokens);
        }
    }
    for line in lines {
        tokens.extend(line.split_whitespace());
    }
    if !tokens.len().is_multiple_of(2) {
        return Err(Error::EdgeList {
            reason: format!("odd number of vertex ids ({})", tokens.len()),
        });
    }

    let mut edges = Vec::with_capacity(tokens.len() / 2);
    for pair in tokens.chunks(2) {
        edges.push((parse_vertex(pair[0])?, parse_vertex(pair[1])?));
    }

    let n = match explicit_n {
        Some(n) => {
            if n == 0 {
                return Err(Error::EdgeList {
                    reason: "declared vertex count is 0".into(),
                });
            }
            n
        }
        None => {
            let max = edges.iter().map(|&(u, v)| u.max(v)).max();
            match max {
                Some(m) => m + 1,
                None => {
                    return Err(Error::EdgeList {
                        reason: "empty edge list without a vertex count".into(),
                    })
                }
            }
        }
    };
    Graph::from_edges(n, &edges)
}

fn parse_vertex(token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::EdgeList {
        reason: format!("non-integer token {token:?}"),
    })
}

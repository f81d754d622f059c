//! Cobweb posets: level `s` holds `a_s` vertices `⟨1,s⟩..⟨a_s,s⟩` (one root
//! at level 0), and every vertex of level `p` has an arc to every vertex of
//! level `p + 1`.
//!
//! Arcs are never stored for [`CobwebPoset`]; order and path queries are
//! level comparisons. [`Dag`] is an explicit digraph used for the regularity
//! check, for admissibility on arbitrary DAGs, and as a test oracle.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sequence::SequenceSpec;

/// Vertex `⟨j,s⟩`: position `j` (1-based) on level `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub position: usize,
    pub level: usize,
}

impl Vertex {
    pub fn new(position: usize, level: usize) -> Self {
        Vertex { position, level }
    }

    /// Graphviz node id `v<j>_<s>`.
    pub fn dot_id(&self) -> String {
        format!("v{}_{}", self.position, self.level)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{},{}⟩", self.position, self.level)
    }
}

/// An ordering of every vertex of a truncated poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChain(pub Vec<Vertex>);

impl LinearChain {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Swaps two entries; used to build corrupted chains.
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(a, b);
        LinearChain(v)
    }

    pub fn render(&self) -> String {
        self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobwebPoset {
    spec: SequenceSpec,
    max_level: usize,
    level_sizes: Vec<usize>,
}

impl CobwebPoset {
    /// Levels `0..=max_level`. Level 0 is the single root `⟨1,0⟩` regardless
    /// of `a_0`; levels `s >= 1` have `a_s` vertices and must be nonempty.
    pub fn build(spec: SequenceSpec, max_level: usize) -> Result<Self> {
        let mut level_sizes = vec![1];
        for s in 1..=max_level {
            let t = spec.term(s)?;
            if t.is_zero() {
                return Err(Error::DegenerateSequence { index: s });
            }
            let size = t.to_usize().ok_or_else(|| {
                Error::InvalidSequence(format!("level {s} has {t} vertices, too many to enumerate"))
            })?;
            level_sizes.push(size);
        }
        Ok(CobwebPoset {
            spec,
            max_level,
            level_sizes,
        })
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.level_sizes
    }

    pub fn vertex_count(&self) -> usize {
        self.level_sizes.iter().sum()
    }

    /// Number of arcs: `Σ_p size(p) · size(p+1)`.
    pub fn edge_count(&self) -> usize {
        self.level_sizes.windows(2).map(|w| w[0] * w[1]).sum()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.level <= self.max_level && v.position >= 1 && v.position <= self.level_sizes[v.level]
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v.to_string()))
        }
    }

    /// All vertices, level by level, positions ascending.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.level_sizes
            .iter()
            .enumerate()
            .flat_map(|(s, &size)| (1..=size).map(move |j| Vertex::new(j, s)))
    }

    /// `⟨s,t⟩ ≤ ⟨u,v⟩` iff `t < v`, or `t = v` and `s = u`.
    pub fn leq(&self, x: Vertex, y: Vertex) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.level < y.level || x == y)
    }

    /// Whether a directed path of length >= 1 runs from `x` to `y`.
    pub fn has_path(&self, x: Vertex, y: Vertex) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.level < y.level)
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.level + 1 == y.level)
    }

    /// Explicit digraph with vertices numbered in [`vertices`](Self::vertices) order.
    pub fn to_dag(&self) -> Dag {
        let verts: Vec<Vertex> = self.vertices().collect();
        let mut dag = Dag::new(verts.len());
        let mut offset = 0;
        for w in self.level_sizes.windows(2) {
            let (lo, hi) = (offset, offset + w[0]);
            for u in lo..hi {
                for v in hi..hi + w[1] {
                    dag.add_edge(u, v);
                }
            }
            offset = hi;
        }
        dag
    }

    /// Plotnikov regularity, by explicit reachability on the materialized DAG.
    pub fn is_regular(&self) -> bool {
        self.to_dag().is_regular()
    }

    /// Level ascending, position ascending.
    pub fn chain_x(&self) -> LinearChain {
        LinearChain(self.vertices().collect())
    }

    /// Level ascending, position descending.
    pub fn chain_y(&self) -> LinearChain {
        LinearChain(
            self.level_sizes
                .iter()
                .enumerate()
                .flat_map(|(s, &size)| (1..=size).rev().map(move |j| Vertex::new(j, s)))
                .collect(),
        )
    }

    /// Position of each vertex in `chain`, erroring unless `chain` is a
    /// permutation of the vertex set.
    pub fn chain_positions(&self, chain: &LinearChain) -> Result<HashMap<Vertex, usize>> {
        if chain.0.len() != self.vertex_count() {
            return Err(Error::NotAPermutation(format!(
                "{} entries for {} vertices",
                chain.0.len(),
                self.vertex_count()
            )));
        }
        let mut pos = HashMap::with_capacity(chain.0.len());
        for (i, &v) in chain.0.iter().enumerate() {
            if !self.contains(v) {
                return Err(Error::NotAPermutation(format!("{v} is not a vertex")));
            }
            if pos.insert(v, i).is_some() {
                return Err(Error::NotAPermutation(format!("{v} appears twice")));
            }
        }
        Ok(pos)
    }

    /// No triple `i1 < i2 < i3` in chain order has a path `v1 → v3` while
    /// `v1 → v2` and `v2 → v3` are both missing.
    pub fn is_admissible(&self, chain: &LinearChain) -> Result<bool> {
        self.chain_positions(chain)?;
        let v = &chain.0;
        let path = |a: Vertex, b: Vertex| a.level < b.level;
        for i1 in 0..v.len() {
            for i3 in i1 + 2..v.len() {
                if !path(v[i1], v[i3]) {
                    continue;
                }
                if (i1 + 1..i3).any(|i2| !path(v[i1], v[i2]) && !path(v[i2], v[i3])) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `x ≤_P y ⟺ (x ≤ y in X) ∧ (x ≤ y in Y)` for every ordered pair.
    pub fn realizes(&self, x: &LinearChain, y: &LinearChain) -> Result<bool> {
        let px = self.chain_positions(x)?;
        let py = self.chain_positions(y)?;
        for a in self.vertices() {
            for b in self.vertices() {
                let both = px[&a] <= px[&b] && py[&a] <= py[&b];
                if self.leq(a, b)? != both {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `≤_P = X ∩ Y`, exhaustively over the truncation.
    pub fn verify_realizer(&self) -> bool {
        self.realizes(&self.chain_x(), &self.chain_y())
            .expect("chains built from the poset are permutations")
    }

    /// Deterministic Graphviz digraph, one rank group per level, arcs pointing
    /// from lower to higher level.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph cobweb {\n  rankdir=BT;\n");
        for (s, &size) in self.level_sizes.iter().enumerate() {
            let ids: Vec<String> = (1..=size).map(|j| Vertex::new(j, s).dot_id()).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
        for (p, w) in self.level_sizes.windows(2).enumerate() {
            for j in 1..=w[0] {
                for q in 1..=w[1] {
                    let _ = writeln!(
                        out,
                        "  {} -> {};",
                        Vertex::new(j, p).dot_id(),
                        Vertex::new(q, p + 1).dot_id()
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// `{"level_sizes": [...], "chain_x": [...], "chain_y": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let labels = |c: LinearChain| c.0.iter().map(ToString::to_string).collect::<Vec<_>>();
        serde_json::json!({
            "level_sizes": self.level_sizes,
            "chain_x": labels(self.chain_x()),
            "chain_y": labels(self.chain_y()),
        })
    }
}

/// A finite digraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    succ: Vec<Vec<usize>>,
}

impl Dag {
    pub fn new(n: usize) -> Self {
        Dag {
            succ: vec![Vec::new(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if !self.succ[u].contains(&v) {
            self.succ[u].push(v);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// `reach[u][v]`: a path of length >= 1 from `u` to `v`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut reach = vec![vec![false; n]; n];
        for (start, row) in reach.iter_mut().enumerate() {
            let mut stack: Vec<usize> = self.succ[start].clone();
            while let Some(u) = stack.pop() {
                if !row[u] {
                    row[u] = true;
                    stack.extend(self.succ[u].iter().copied());
                }
            }
        }
        reach
    }

    /// Kahn's algorithm; `None` when there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for (_, v) in self.edges() {
            indeg[v] += 1;
        }
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop() {
            order.push(u);
            for &v in &self.succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// No arc `(u, v)` duplicates a directed path of length >= 2 from `u` to `v`.
    pub fn is_regular(&self) -> bool {
        let reach = self.reachability();
        self.edges()
            .all(|(u, v)| !self.succ[u].iter().any(|&w| w != v && reach[w][v]))
    }

    /// Admissibility of a vertex ordering (see [`CobwebPoset::is_admissible`]).
    pub fn is_admissible(&self, order: &[usize]) -> Result<bool> {
        let n = self.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::NotAPermutation(format!("{} entries for {n} vertices", order.len())));
        }
        for &v in order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("bad or repeated vertex {v}")));
            }
        }
        let reach = self.reachability();
        for i1 in 0..n {
            for i3 in i1 + 2..n {
                let (a, c) = (order[i1], order[i3]);
                if !reach[a][c] {
                    continue;
                }
                if (i1 + 1..i3).any(|i2| {
                    let b = order[i2];
                    !reach[a][b] && !reach[b][c]
                }) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

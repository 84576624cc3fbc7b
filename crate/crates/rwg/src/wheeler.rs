//! Wheeler-graph view of a read collection.
//!
//! A read collection is a disjoint union of labelled paths: one node per
//! proper prefix of each read plus a final sink, one edge per character. The
//! validator checks an arbitrary node ordering against the two edge
//! conditions (labels sorted by destination; equal labels monotone in
//! origin), optionally insisting that in-degree-0 nodes occupy the first
//! ranks — the strict variant that dollar-free path indexes satisfy and
//! relaxed orderings deliberately give up.

use crate::alphabet::Symbol;
use crate::error::Error;
use crate::query;
use crate::reads::ReadCollection;
use crate::relaxed::{build_relaxed, ContextAssignment, RelaxedIndex};
use crate::rlbwt::RunLengthBwt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Symbol,
}

/// Nodes are 0-based ids; edges carry symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeLabelledGraph {
    pub node_count: usize,
    pub edges: Vec<Edge>,
}

impl EdgeLabelledGraph {
    pub fn new(node_count: usize, edges: Vec<Edge>) -> Result<Self, Error> {
        for e in &edges {
            if e.from >= node_count || e.to >= node_count {
                return Err(Error::PositionOutOfRange {
                    pos: e.from.max(e.to),
                    len: node_count,
                });
            }
        }
        Ok(EdgeLabelledGraph { node_count, edges })
    }

    pub fn in_degree_zero(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.node_count];
        for e in &self.edges {
            has_in[e.to] = true;
        }
        (0..self.node_count).filter(|&v| !has_in[v]).collect()
    }
}

/// Node id of prefix (read_id, k) in the path graph: reads laid out in order,
/// each occupying len+1 consecutive ids.
pub fn path_node_id(reads: &ReadCollection, read_id: usize, k: usize) -> usize {
    let mut base = 0;
    for rid in 0..read_id {
        base += reads.len_of(rid) + 1;
    }
    base + k
}

pub fn reads_to_path_graph(reads: &ReadCollection) -> EdgeLabelledGraph {
    let mut node_count = 0;
    for rid in 0..reads.r() {
        node_count += reads.len_of(rid) + 1;
    }
    let mut edges = Vec::with_capacity(reads.n());
    let mut base = 0;
    for rid in 0..reads.r() {
        let read = reads.read(rid);
        for (k, &c) in read.iter().enumerate() {
            edges.push(Edge {
                from: base + k,
                to: base + k + 1,
                label: c,
            });
        }
        base += read.len() + 1;
    }
    EdgeLabelledGraph { node_count, edges }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WheelerViolation {
    /// Edges e1, e2 with label(e1) < label(e2) but rank(to(e1)) ≥ rank(to(e2)).
    LabelOrder { e1: Edge, e2: Edge },
    /// Same label, rank(from(e1)) < rank(from(e2)) but rank(to(e1)) > rank(to(e2)).
    SameLabelOrder { e1: Edge, e2: Edge },
    /// Strict mode only: an in-degree-0 node sits at `rank` instead of the
    /// next free slot among the first ranks.
    SourcesNotFirst { rank: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WheelerCheck {
    Wheeler,
    NotWheeler(WheelerViolation),
}

/// Check `ordering` (node ids in rank order, a permutation of 0..node_count)
/// against the Wheeler conditions. `strict` additionally requires the
/// in-degree-0 nodes to occupy ranks 1..=r; the first rank breaking that is
/// reported. Quadratic in the edge count.
pub fn verify_wheeler(
    graph: &EdgeLabelledGraph,
    ordering: &[usize],
    strict: bool,
) -> Result<WheelerCheck, Error> {
    if ordering.len() != graph.node_count {
        return Err(Error::NotAPermutation(ordering.len()));
    }
    let mut rank_of = vec![usize::MAX; graph.node_count];
    for (i, &v) in ordering.iter().enumerate() {
        if v >= graph.node_count || rank_of[v] != usize::MAX {
            return Err(Error::NotAPermutation(v));
        }
        rank_of[v] = i + 1;
    }

    if strict {
        let mut source_ranks: Vec<usize> =
            graph.in_degree_zero().iter().map(|&v| rank_of[v]).collect();
        source_ranks.sort_unstable();
        for (i, &rank) in source_ranks.iter().enumerate() {
            if rank != i + 1 {
                return Ok(WheelerCheck::NotWheeler(WheelerViolation::SourcesNotFirst {
                    rank,
                }));
            }
        }
    }

    for e1 in &graph.edges {
        for e2 in &graph.edges {
            if e1.label < e2.label && rank_of[e1.to] >= rank_of[e2.to] {
                return Ok(WheelerCheck::NotWheeler(WheelerViolation::LabelOrder {
                    e1: *e1,
                    e2: *e2,
                }));
            }
            if e1.label == e2.label
                && rank_of[e1.from] < rank_of[e2.from]
                && rank_of[e1.to] > rank_of[e2.to]
            {
                return Ok(WheelerCheck::NotWheeler(WheelerViolation::SameLabelOrder {
                    e1: *e1,
                    e2: *e2,
                }));
            }
        }
    }
    Ok(WheelerCheck::Wheeler)
}

/// Dollar-free path index: the empty-context special case of the relaxed
/// index. Sources occupy the first r ranks, so the ordering is strictly
/// Wheeler, and every pattern match is a true match.
#[derive(Clone, Debug)]
pub struct WheelerPathIndex {
    inner: RelaxedIndex,
}

pub fn build_wheeler_paths(reads: ReadCollection) -> Result<WheelerPathIndex, Error> {
    let r = reads.r();
    let inner = build_relaxed(reads, ContextAssignment::empty(r))?;
    debug_assert!(inner.source_ranks().iter().enumerate().all(|(i, &s)| s == i + 1));
    Ok(WheelerPathIndex { inner })
}

impl WheelerPathIndex {
    pub fn inner(&self) -> &RelaxedIndex {
        &self.inner
    }

    pub fn bwt(&self) -> &RunLengthBwt {
        self.inner.bwt()
    }

    pub fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    /// Words spent marking sources and sinks.
    pub fn mark_words(&self) -> usize {
        self.inner.source_ranks().len() + self.inner.sink_ranks().len()
    }

    pub fn count(&self, pattern: &[Symbol]) -> usize {
        query::count(&self.inner, pattern)
    }

    pub fn locate(&self, pattern: &[Symbol]) -> Vec<query::Occurrence> {
        query::locate_all(&self.inner, pattern)
    }

    /// The node ordering as a rank-ordered list of path-graph node ids,
    /// ready for `verify_wheeler`.
    pub fn ordering(&self) -> Vec<usize> {
        let reads = self.inner.reads();
        (1..=self.inner.node_count())
            .map(|rank| {
                let (rid, k) = self.inner.node(rank);
                path_node_id(reads, rid, k)
            })
            .collect()
    }

    /// Recover the reads by walking each path from its source using only the
    /// BWT and the source/sink marks — the node list is consulted just to
    /// label each walk with its read id.
    pub fn reconstruct_reads(&self) -> Vec<(usize, Vec<Symbol>)> {
        let idx = &self.inner;
        let bwt = idx.bwt();
        let mut out = Vec::with_capacity(idx.source_ranks().len());
        for &src in idx.source_ranks() {
            let read_id = idx.node(src).0;
            let mut chars = Vec::new();
            let mut rank = src;
            loop {
                let p = match query::bwt_pos_of_rank(idx, rank) {
                    Some(p) => p,
                    None => break, // sink: path exhausted
                };
                let c = bwt.symbol_at(p).expect("in range");
                chars.push(c);
                let j = bwt.count_lt(c) + bwt.rank(c, p).expect("in range");
                rank = query::rank_of_nonsource_idx(idx, j);
            }
            out.push((read_id, chars));
        }
        out
    }
}

//! Relaxed Wheeler graph construction: order each read's path nodes as if the
//! read were preceded by an imaginary context string, so that early symbols
//! of a read sort among similar genuine contexts and the BWT develops longer
//! runs. Sources (in-degree-0 nodes) land wherever their context puts them,
//! which is exactly the relaxation.

use crate::alphabet::Symbol;
use crate::error::Error;
use crate::query::{LfBreakTable, ToeholdSamples};
use crate::reads::{ReadCollection, TextPosition};
use crate::rlbwt::RunLengthBwt;
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContextProvenance {
    Explicit,
    Genome,
    Overlap,
    Empty,
}

/// One context string per read.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContextAssignment {
    contexts: Vec<Vec<Symbol>>,
    provenance: Vec<ContextProvenance>,
    /// Reads whose requested context source produced nothing (e.g. a read
    /// missing from the genome); they fell back to an empty context.
    fallback_reads: Vec<usize>,
}

impl ContextAssignment {
    pub fn empty(r: usize) -> Self {
        ContextAssignment {
            contexts: vec![Vec::new(); r],
            provenance: vec![ContextProvenance::Empty; r],
            fallback_reads: Vec::new(),
        }
    }

    /// Explicit per-read contexts, e.g. from a context file.
    pub fn explicit(contexts: Vec<Vec<Symbol>>) -> Result<Self, Error> {
        for (read, ctx) in contexts.iter().enumerate() {
            if ctx.iter().any(|s| s.is_terminator()) {
                return Err(Error::TerminatorInContext { read });
            }
        }
        let provenance = contexts
            .iter()
            .map(|c| {
                if c.is_empty() {
                    ContextProvenance::Empty
                } else {
                    ContextProvenance::Explicit
                }
            })
            .collect();
        Ok(ContextAssignment {
            contexts,
            provenance,
            fallback_reads: Vec::new(),
        })
    }

    pub fn from_parts(
        contexts: Vec<Vec<Symbol>>,
        provenance: Vec<ContextProvenance>,
        fallback_reads: Vec<usize>,
    ) -> Result<Self, Error> {
        if contexts.len() != provenance.len() {
            return Err(Error::InconsistentIndex("context/provenance counts differ"));
        }
        for (read, ctx) in contexts.iter().enumerate() {
            if ctx.iter().any(|s| s.is_terminator()) {
                return Err(Error::TerminatorInContext { read });
            }
        }
        Ok(ContextAssignment {
            contexts,
            provenance,
            fallback_reads,
        })
    }

    pub fn len(&self) -> usize {
        self.contexts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contexts.is_empty()
    }

    pub fn context(&self, read_id: usize) -> &[Symbol] {
        &self.contexts[read_id]
    }

    pub fn contexts(&self) -> &[Vec<Symbol>] {
        &self.contexts
    }

    pub fn provenance(&self) -> &[ContextProvenance] {
        &self.provenance
    }

    pub fn fallback_reads(&self) -> &[usize] {
        &self.fallback_reads
    }
}

/// Context of each read = the genome symbols preceding its leftmost genome
/// occurrence, truncated to the last `cap` symbols (`None` = longest read
/// length). Reads absent from the genome fall back to an empty context and
/// are flagged.
pub fn contexts_from_genome(
    reads: &ReadCollection,
    genome: &[Symbol],
    cap: Option<usize>,
) -> ContextAssignment {
    let cap = cap.unwrap_or_else(|| (0..reads.r()).map(|i| reads.len_of(i)).max().unwrap_or(0));
    let mut contexts = Vec::with_capacity(reads.r());
    let mut provenance = Vec::with_capacity(reads.r());
    let mut fallback_reads = Vec::new();
    for (rid, read) in reads.reads().iter().enumerate() {
        let hit = (0..genome.len().saturating_sub(read.len() - 1))
            .find(|&s| &genome[s..s + read.len()] == read.as_slice());
        match hit {
            Some(s) => {
                let start = s.saturating_sub(cap);
                contexts.push(genome[start..s].to_vec());
                provenance.push(ContextProvenance::Genome);
            }
            None => {
                contexts.push(Vec::new());
                provenance.push(ContextProvenance::Empty);
                fallback_reads.push(rid);
            }
        }
    }
    ContextAssignment {
        contexts,
        provenance,
        fallback_reads,
    }
}

/// Context of each read R = the part of Q preceding the longest suffix of Q
/// that prefixes R, over all other reads Q, requiring overlap ≥ `min_overlap`
/// and capping it at min(|Q|,|R|) − 1 so a read never swallows an identical
/// partner whole. Overlap-length ties go to the smaller read id; reads with
/// no qualifying partner keep an empty context.
pub fn contexts_from_overlaps(
    reads: &ReadCollection,
    min_overlap: usize,
) -> Result<ContextAssignment, Error> {
    if min_overlap == 0 {
        return Err(Error::ZeroMinOverlap);
    }
    let mut contexts = Vec::with_capacity(reads.r());
    let mut provenance = Vec::with_capacity(reads.r());
    let mut fallback_reads = Vec::new();
    for (rid, read) in reads.reads().iter().enumerate() {
        let mut best: Option<(usize, usize)> = None; // (overlap, qid)
        for (qid, q) in reads.reads().iter().enumerate() {
            if qid == rid {
                continue;
            }
            let max_o = q.len().min(read.len()).saturating_sub(1);
            for o in (min_overlap..=max_o).rev() {
                if q[q.len() - o..] == read[..o] {
                    if best.map_or(true, |(bo, _)| o > bo) {
                        best = Some((o, qid));
                    }
                    break;
                }
            }
        }
        match best {
            Some((o, qid)) => {
                contexts.push(reads.read(qid)[..reads.len_of(qid) - o].to_vec());
                provenance.push(ContextProvenance::Overlap);
            }
            None => {
                contexts.push(Vec::new());
                provenance.push(ContextProvenance::Empty);
                fallback_reads.push(rid);
            }
        }
    }
    Ok(ContextAssignment {
        contexts,
        provenance,
        fallback_reads,
    })
}

/// Colexicographic comparison of `ctx_a · pref_a` against `ctx_b · pref_b`
/// without materializing either key.
pub(crate) fn colex_cmp(
    ctx_a: &[Symbol],
    pref_a: &[Symbol],
    ctx_b: &[Symbol],
    pref_b: &[Symbol],
) -> Ordering {
    let a = ctx_a.iter().chain(pref_a.iter()).rev();
    let b = ctx_b.iter().chain(pref_b.iter()).rev();
    a.cmp(b)
}

/// A read collection's path graph under the relaxed ordering, with the query
/// structures (run-head samples and the adjacency-break table) built in.
#[derive(Clone, Debug)]
pub struct RelaxedIndex {
    bwt: RunLengthBwt,
    reads: ReadCollection,
    contexts: ContextAssignment,
    /// rank-1 → (read id, prefix length k); k = 0 is the read's source node,
    /// k = |read| its sink.
    nodes: Vec<(usize, usize)>,
    source_ranks: Vec<usize>,
    sink_ranks: Vec<usize>,
    samples: ToeholdSamples,
    breaks: LfBreakTable,
    first_in_char: Option<TextPosition>,
}

/// Rank every path node (read id, prefix length) by the colexicographic
/// order of `context · prefix`; ties break by the read's lexicographic rank,
/// then its id. The BWT lists each non-sink node's outgoing label in rank
/// order.
pub fn build_relaxed(
    reads: ReadCollection,
    contexts: ContextAssignment,
) -> Result<RelaxedIndex, Error> {
    if contexts.len() != reads.r() {
        return Err(Error::ContextCountMismatch {
            got: contexts.len(),
            want: reads.r(),
        });
    }
    let lex = reads.lex_ranks();
    let mut nodes: Vec<(usize, usize)> = Vec::with_capacity(reads.n() + reads.r());
    for rid in 0..reads.r() {
        for k in 0..=reads.len_of(rid) {
            nodes.push((rid, k));
        }
    }
    nodes.sort_by(|&(ra, ka), &(rb, kb)| {
        colex_cmp(
            contexts.context(ra),
            &reads.read(ra)[..ka],
            contexts.context(rb),
            &reads.read(rb)[..kb],
        )
        .then(lex[ra].cmp(&lex[rb]))
        .then(ra.cmp(&rb))
    });
    Ok(assemble(reads, contexts, nodes))
}

fn assemble(
    reads: ReadCollection,
    contexts: ContextAssignment,
    nodes: Vec<(usize, usize)>,
) -> RelaxedIndex {
    let mut labels = Vec::with_capacity(reads.n());
    let mut source_ranks = Vec::with_capacity(reads.r());
    let mut sink_ranks = Vec::with_capacity(reads.r());
    // Out-going character position of each non-sink node, in rank order:
    // origin_chars[p-1] is the text position of BWT[p].
    let mut origin_chars = Vec::with_capacity(reads.n());
    // In-coming character position of each non-source node, in rank order —
    // the enumeration the next-position function walks.
    let mut in_chars = Vec::with_capacity(reads.n());
    for (i, &(rid, k)) in nodes.iter().enumerate() {
        let rank = i + 1;
        if k == 0 {
            source_ranks.push(rank);
        } else {
            in_chars.push(TextPosition::new(rid, k));
        }
        if k == reads.len_of(rid) {
            sink_ranks.push(rank);
        } else {
            labels.push(reads.read(rid)[k]);
            origin_chars.push(TextPosition::new(rid, k + 1));
        }
    }
    let bwt = RunLengthBwt::encode(&labels);
    let samples = ToeholdSamples::new(
        (0..bwt.rho())
            .map(|j| origin_chars[bwt.run_bounds(j).0 - 1])
            .collect(),
    );
    let read_lens: Vec<usize> = (0..reads.r()).map(|rid| reads.len_of(rid)).collect();
    let breaks = LfBreakTable::build(&in_chars, &read_lens);
    let first_in_char = in_chars.first().copied();
    RelaxedIndex {
        bwt,
        reads,
        contexts,
        nodes,
        source_ranks,
        sink_ranks,
        samples,
        breaks,
        first_in_char,
    }
}

impl RelaxedIndex {
    pub fn bwt(&self) -> &RunLengthBwt {
        &self.bwt
    }

    pub fn reads(&self) -> &ReadCollection {
        &self.reads
    }

    pub fn contexts(&self) -> &ContextAssignment {
        &self.contexts
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// (read id, prefix length) of the node at `rank` (1-based).
    pub fn node(&self, rank: usize) -> (usize, usize) {
        self.nodes[rank - 1]
    }

    pub fn nodes(&self) -> &[(usize, usize)] {
        &self.nodes
    }

    /// Text position of the node's incoming symbol; sources have none.
    pub fn node_origin(&self, rank: usize) -> Option<TextPosition> {
        let (rid, k) = self.node(rank);
        (k > 0).then(|| TextPosition::new(rid, k))
    }

    pub fn source_ranks(&self) -> &[usize] {
        &self.source_ranks
    }

    pub fn sink_ranks(&self) -> &[usize] {
        &self.sink_ranks
    }

    pub fn is_source(&self, rank: usize) -> bool {
        self.source_ranks.binary_search(&rank).is_ok()
    }

    pub fn is_sink(&self, rank: usize) -> bool {
        self.sink_ranks.binary_search(&rank).is_ok()
    }

    pub fn samples(&self) -> &ToeholdSamples {
        &self.samples
    }

    pub fn breaks(&self) -> &LfBreakTable {
        &self.breaks
    }

    /// Incoming-character position of the lowest-ranked non-source node.
    pub fn first_in_char(&self) -> Option<TextPosition> {
        self.first_in_char
    }

    /// Rebuild from stored parts. The node list is re-checked against the
    /// reads, and the BWT, samples, and break table are recomputed and
    /// compared, so a file that disagrees with itself is rejected.
    pub fn from_parts(
        reads: ReadCollection,
        contexts: ContextAssignment,
        nodes: Vec<(usize, usize)>,
        bwt: RunLengthBwt,
        samples: ToeholdSamples,
        breaks: LfBreakTable,
    ) -> Result<Self, Error> {
        if contexts.len() != reads.r() {
            return Err(Error::ContextCountMismatch {
                got: contexts.len(),
                want: reads.r(),
            });
        }
        if nodes.len() != reads.n() + reads.r() {
            return Err(Error::InconsistentIndex("node count is not n + r"));
        }
        let mut seen = vec![false; nodes.len()];
        let mut offsets = vec![0usize; reads.r() + 1];
        for rid in 0..reads.r() {
            offsets[rid + 1] = offsets[rid] + reads.len_of(rid) + 1;
        }
        for &(rid, k) in &nodes {
            if rid >= reads.r() || k > reads.len_of(rid) {
                return Err(Error::InconsistentIndex("node out of range"));
            }
            let slot = offsets[rid] + k;
            if seen[slot] {
                return Err(Error::InconsistentIndex("duplicate node"));
            }
            seen[slot] = true;
        }
        let lex = reads.lex_ranks();
        for pair in nodes.windows(2) {
            let (ra, ka) = pair[0];
            let (rb, kb) = pair[1];
            let ord = colex_cmp(
                contexts.context(ra),
                &reads.read(ra)[..ka],
                contexts.context(rb),
                &reads.read(rb)[..kb],
            )
            .then(lex[ra].cmp(&lex[rb]))
            .then(ra.cmp(&rb));
            if ord != Ordering::Less {
                return Err(Error::InconsistentIndex("nodes are out of order"));
            }
        }
        let rebuilt = assemble(reads, contexts, nodes);
        if rebuilt.bwt != bwt {
            return Err(Error::InconsistentIndex("stored BWT disagrees with node order"));
        }
        if rebuilt.samples != samples {
            return Err(Error::InconsistentIndex("stored samples disagree with node order"));
        }
        if rebuilt.breaks != breaks {
            return Err(Error::InconsistentIndex("stored break table disagrees with node order"));
        }
        Ok(rebuilt)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RunCountReport {
    pub rho: usize,
    pub n: usize,
    pub r: usize,
    pub node_count: usize,
}

pub fn run_count_report(index: &RelaxedIndex) -> RunCountReport {
    RunCountReport {
        rho: index.bwt().rho(),
        n: index.reads().n(),
        r: index.reads().r(),
        node_count: index.node_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn example() -> ReadCollection {
        ReadCollection::from_strs(
            Alphabet::dna(),
            &["GATTA", "TTAGA", "TAGATA", "GATAC", "ATACAT"],
        )
        .unwrap()
    }

    #[test]
    fn genome_contexts_take_preceding_symbols() {
        let reads = example();
        let genome = Alphabet::dna().encode("GATTAGATACAT").unwrap();
        let ctx = contexts_from_genome(&reads, &genome, None);
        let decoded: Vec<String> = (0..5)
            .map(|i| Alphabet::dna().decode_seq(ctx.context(i)))
            .collect();
        assert_eq!(decoded, vec!["", "GA", "GAT", "GATTA", "GATTAG"]);
        assert!(ctx.fallback_reads().is_empty());
    }

    #[test]
    fn whole_genome_read_gets_empty_context() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["GATTACA"]).unwrap();
        let genome = Alphabet::dna().encode("GATTACA").unwrap();
        let ctx = contexts_from_genome(&reads, &genome, None);
        assert!(ctx.context(0).is_empty());
        assert!(ctx.fallback_reads().is_empty());
        assert_eq!(ctx.provenance()[0], ContextProvenance::Genome);
    }

    #[test]
    fn absent_read_is_flagged() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["CCCC"]).unwrap();
        let genome = Alphabet::dna().encode("GATTACA").unwrap();
        let ctx = contexts_from_genome(&reads, &genome, None);
        assert!(ctx.context(0).is_empty());
        assert_eq!(ctx.fallback_reads(), &[0]);
        assert_eq!(ctx.provenance()[0], ContextProvenance::Empty);
    }

    #[test]
    fn context_cap_truncates() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["CAT"]).unwrap();
        let genome = Alphabet::dna().encode("GATTACAT").unwrap();
        let ctx = contexts_from_genome(&reads, &genome, Some(2));
        assert_eq!(Alphabet::dna().decode_seq(ctx.context(0)), "TA");
    }

    #[test]
    fn overlap_context_from_longest_suffix_prefix() {
        let reads = example();
        let ctx = contexts_from_overlaps(&reads, 2).unwrap();
        // GATAC's best partner is TAGATA: overlap GATA, context TA.
        assert_eq!(Alphabet::dna().decode_seq(ctx.context(3)), "TA");
        assert_eq!(ctx.provenance()[3], ContextProvenance::Overlap);
    }

    #[test]
    fn single_read_has_no_overlap_partner() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["GATTA"]).unwrap();
        let ctx = contexts_from_overlaps(&reads, 1).unwrap();
        assert!(ctx.context(0).is_empty());
        assert_eq!(ctx.fallback_reads(), &[0]);
    }

    #[test]
    fn identical_reads_overlap_is_capped() {
        // AAAA/AAAA: the full-length self match is capped at 3, leaving one
        // context symbol. GATT/GATT has no proper border, so no context.
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["AAAA", "AAAA"]).unwrap();
        let ctx = contexts_from_overlaps(&reads, 1).unwrap();
        assert_eq!(Alphabet::dna().decode_seq(ctx.context(0)), "A");
        assert_eq!(Alphabet::dna().decode_seq(ctx.context(1)), "A");
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["GATT", "GATT"]).unwrap();
        let ctx = contexts_from_overlaps(&reads, 1).unwrap();
        assert!(ctx.context(0).is_empty());
        assert_eq!(ctx.fallback_reads(), &[0, 1]);
    }

    #[test]
    fn zero_min_overlap_rejected() {
        let reads = example();
        assert_eq!(
            contexts_from_overlaps(&reads, 0).unwrap_err(),
            Error::ZeroMinOverlap
        );
    }

    #[test]
    fn two_single_symbol_reads_with_crossed_contexts() {
        // Read {A} has context C (keys C, CA); read {C} has context A (keys
        // A, AC). Sorting the four keys by their reversals gives
        // A < CA < C < AC.
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["A", "C"]).unwrap();
        let a = Alphabet::dna();
        let ctx =
            ContextAssignment::explicit(vec![a.encode("C").unwrap(), a.encode("A").unwrap()])
                .unwrap();
        let idx = build_relaxed(reads, ctx).unwrap();
        assert_eq!(idx.node(1), (1, 0));
        assert_eq!(idx.node(2), (0, 1));
        assert_eq!(idx.node(3), (0, 0));
        assert_eq!(idx.node(4), (1, 1));
        // Source of {A} (rank 3) lands after the source of {C} (rank 1).
        assert_eq!(idx.source_ranks(), &[1, 3]);
    }

    #[test]
    fn empty_collection_report() {
        let reads = ReadCollection::new(Alphabet::dna(), Vec::new()).unwrap();
        let idx = build_relaxed(reads, ContextAssignment::empty(0)).unwrap();
        assert_eq!(
            run_count_report(&idx),
            RunCountReport {
                rho: 0,
                n: 0,
                r: 0,
                node_count: 0
            }
        );
    }

    #[test]
    fn context_count_must_match() {
        let reads = example();
        assert_eq!(
            build_relaxed(reads, ContextAssignment::empty(3)).unwrap_err(),
            Error::ContextCountMismatch { got: 3, want: 5 }
        );
    }

    #[test]
    fn explicit_contexts_reject_terminators() {
        assert_eq!(
            ContextAssignment::explicit(vec![vec![Symbol::Terminator(1)]]).unwrap_err(),
            Error::TerminatorInContext { read: 0 }
        );
    }
}

//! Pattern search over the path-shaped Wheeler indexes.
//!
//! Search runs forward along the pattern: after `t` steps the interval holds
//! exactly the nodes whose key `context · prefix` ends with `P[1..t]` — the
//! destinations of the step's labelled edges plus any sources whose context
//! happens to end the same way. Counting reads the interval width, locating
//! walks the next-position function seeded by the interval's first
//! destination, and certification drags along one verified true match using
//! the witness pointer table.
//!
//! Everything here works on [`RelaxedIndex`]; a strict path index is the
//! empty-context special case, on which sources never re-enter an interval
//! and every reported match is true.

use crate::alphabet::Symbol;
use crate::reads::TextPosition;
use crate::relaxed::RelaxedIndex;

/// One reported match: the text position of the pattern's final character.
/// `offset` 0 means the match ends exactly at the context/read boundary (a
/// source node), which is never a true match.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Occurrence {
    pub read_id: usize,
    pub offset: usize,
    pub is_true: bool,
}

/// Text position of the first character of every BWT run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ToeholdSamples {
    samples: Vec<TextPosition>,
}

impl ToeholdSamples {
    pub fn new(samples: Vec<TextPosition>) -> Self {
        ToeholdSamples { samples }
    }

    pub fn get(&self, run: usize) -> TextPosition {
        self.samples[run]
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn as_slice(&self) -> &[TextPosition] {
        &self.samples
    }
}

/// The next-position function φ, stored compressed.
///
/// Rank order of the non-source nodes enumerates every text position once
/// (each non-source node owns its incoming character); φ maps each position
/// to the next one in that enumeration, wrapping at the end. Consecutive
/// positions of one read usually map to consecutive positions of one other
/// read — the mapping is "parallel" — so the table keeps only the places
/// where parallelism breaks, plus a seed at offset 1 of every read. A lookup
/// finds the predecessor entry in the same read and re-applies the offset
/// difference.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LfBreakTable {
    /// (position, φ(position)), sorted by position (read id, then offset).
    entries: Vec<(TextPosition, TextPosition)>,
}

impl LfBreakTable {
    /// Build from the incoming-character positions of the non-source nodes in
    /// rank order. `read_lens[rid]` is the length of read `rid`.
    pub fn build(in_chars: &[TextPosition], read_lens: &[usize]) -> Self {
        let n = in_chars.len();
        let mut phi_of: Vec<Vec<TextPosition>> = read_lens
            .iter()
            .map(|&len| vec![TextPosition::new(0, 0); len])
            .collect();
        for (i, &x) in in_chars.iter().enumerate() {
            phi_of[x.read_id][x.offset - 1] = in_chars[(i + 1) % n];
        }
        let mut entries = Vec::new();
        for (rid, len) in read_lens.iter().copied().enumerate() {
            for k in 1..=len {
                let y = phi_of[rid][k - 1];
                if k == 1 {
                    entries.push((TextPosition::new(rid, k), y));
                    continue;
                }
                let prev = phi_of[rid][k - 2];
                if y != TextPosition::new(prev.read_id, prev.offset + 1) {
                    entries.push((TextPosition::new(rid, k), y));
                }
            }
        }
        LfBreakTable { entries }
    }

    pub fn from_entries(entries: Vec<(TextPosition, TextPosition)>) -> Self {
        LfBreakTable { entries }
    }

    /// φ(x): predecessor entry in x's read plus the offset difference.
    pub fn phi(&self, x: TextPosition) -> TextPosition {
        let i = self.entries.partition_point(|&(pos, _)| pos <= x);
        debug_assert!(i > 0, "every read is seeded at offset 1");
        let (x0, y0) = self.entries[i - 1];
        debug_assert_eq!(x0.read_id, x.read_id);
        TextPosition::new(y0.read_id, y0.offset + (x.offset - x0.offset))
    }

    /// Stored entry count (the structure's whole size).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(TextPosition, TextPosition)] {
        &self.entries
    }
}

/// A pointer to another BWT copy of a boundary character's symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WitnessPointer {
    /// BWT position of the pointed copy.
    pub bwt_pos: usize,
    /// Text position of the pointed copy itself (its read id and offset).
    pub text_pos: TextPosition,
    /// Longest common suffix of the pointed copy's true context (its read
    /// prefix alone) with the boundary character's full context (imaginary
    /// context plus read prefix).
    pub lcs: usize,
}

/// Witness data for one run-boundary character.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WitnessEntry {
    pub own_bwt_pos: usize,
    /// Text position of the boundary character itself.
    pub own_pos: TextPosition,
    pub pred: Option<WitnessPointer>,
    pub succ: Option<WitnessPointer>,
}

/// Per run: witness entries for its first and last character (equal for
/// length-1 runs, still stored twice to keep the layout uniform).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessPointerTable {
    entries: Vec<(WitnessEntry, WitnessEntry)>,
}

impl WitnessPointerTable {
    pub fn from_entries(entries: Vec<(WitnessEntry, WitnessEntry)>) -> Self {
        WitnessPointerTable { entries }
    }

    pub fn for_run(&self, run: usize) -> &(WitnessEntry, WitnessEntry) {
        &self.entries[run]
    }

    /// Total stored entries (2ρ).
    pub fn len(&self) -> usize {
        self.entries.len() * 2
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(WitnessEntry, WitnessEntry)] {
        &self.entries
    }
}

/// Search progress after `t` pattern symbols.
#[derive(Clone, Debug)]
pub struct SearchState {
    lo: usize,
    hi: usize,
    dead: bool,
    t: usize,
    matched: Vec<Symbol>,
    /// Text position of the first character of the interval's BWT slice;
    /// `None` exactly when the interval holds no non-sink node.
    toehold: Option<TextPosition>,
    /// Incoming-character position of the interval's first non-source node;
    /// `None` when the interval is sources only. Seeds locate-all.
    first_dest: Option<TextPosition>,
    candidate: Option<Candidate>,
}

/// A verified true match of the matched prefix, ending at `end` (0 = the
/// empty match at a read's start). `bwt_pos` is where its next character
/// sits, absent when the read is exhausted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Candidate {
    read_id: usize,
    end: usize,
    bwt_pos: Option<usize>,
}

impl SearchState {
    pub fn is_live(&self) -> bool {
        !self.dead
    }

    /// Node-rank interval, `None` once the search died.
    pub fn interval(&self) -> Option<(usize, usize)> {
        (!self.dead).then_some((self.lo, self.hi))
    }

    pub fn width(&self) -> usize {
        if self.dead {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn matched(&self) -> &[Symbol] {
        &self.matched
    }

    pub fn toehold(&self) -> Option<TextPosition> {
        self.toehold
    }

    pub fn first_dest(&self) -> Option<TextPosition> {
        self.first_dest
    }

    /// (read id, end offset) of the tracked true match, if one survives.
    pub fn candidate(&self) -> Option<(usize, usize)> {
        self.candidate.map(|c| (c.read_id, c.end))
    }

    fn dead(t: usize, matched: Vec<Symbol>) -> Self {
        SearchState {
            lo: 1,
            hi: 0,
            dead: true,
            t,
            matched,
            toehold: None,
            first_dest: None,
            candidate: None,
        }
    }
}

/// The state before any symbol is matched: every node, with the candidate
/// parked just before the first BWT character's position (the empty pattern
/// truly matches everywhere).
pub fn start(index: &RelaxedIndex) -> SearchState {
    if index.node_count() == 0 {
        return SearchState::dead(0, Vec::new());
    }
    let toehold = (!index.bwt().is_empty()).then(|| index.samples().get(0));
    SearchState {
        lo: 1,
        hi: index.node_count(),
        dead: false,
        t: 0,
        matched: Vec::new(),
        toehold,
        first_dest: index.first_in_char(),
        candidate: toehold.map(|th| Candidate {
            read_id: th.read_id,
            end: th.offset - 1,
            bwt_pos: Some(1),
        }),
    }
}

/// Extend the search by one pattern symbol.
pub fn step(index: &RelaxedIndex, state: &SearchState, c: Symbol) -> SearchState {
    step_core(index, state, c, None)
}

// ---- rank-space helpers -------------------------------------------------

fn sinks_leq(index: &RelaxedIndex, rank: usize) -> usize {
    index.sink_ranks().partition_point(|&s| s <= rank)
}

fn sources_leq(index: &RelaxedIndex, rank: usize) -> usize {
    index.source_ranks().partition_point(|&s| s <= rank)
}

/// BWT position of the node at `rank`, or `None` for sinks.
pub(crate) fn bwt_pos_of_rank(index: &RelaxedIndex, rank: usize) -> Option<usize> {
    (!index.is_sink(rank)).then(|| rank - sinks_leq(index, rank))
}

/// Largest rank whose value under `g` does not exceed `target`; `g` must be
/// non-decreasing with g(1) ≤ target.
fn largest_rank_where_leq(n: usize, target: usize, g: impl Fn(usize) -> usize) -> usize {
    let (mut lo, mut hi) = (1, n);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if g(mid) <= target {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Rank of the j-th non-source node (j is 1-based).
pub(crate) fn rank_of_nonsource_idx(index: &RelaxedIndex, j: usize) -> usize {
    let rank = largest_rank_where_leq(index.node_count(), j, |r| r - sources_leq(index, r));
    debug_assert!(!index.is_source(rank));
    debug_assert_eq!(rank - sources_leq(index, rank), j);
    rank
}

/// Destination of the edge whose label sits at BWT position `p` (which must
/// hold symbol `c`): its node rank and its own BWT position (None for sinks).
fn dest_after(index: &RelaxedIndex, p: usize, c: Symbol) -> (usize, Option<usize>) {
    let j = index.bwt().count_lt(c) + index.bwt().rank(c, p).expect("p in range");
    let rank = rank_of_nonsource_idx(index, j);
    (rank, bwt_pos_of_rank(index, rank))
}

fn context_ends_with(index: &RelaxedIndex, read_id: usize, suffix: &[Symbol]) -> bool {
    let ctx = index.contexts().context(read_id);
    ctx.len() >= suffix.len() && ctx[ctx.len() - suffix.len()..] == *suffix
}

// ---- the step ------------------------------------------------------------

fn step_core(
    index: &RelaxedIndex,
    state: &SearchState,
    c: Symbol,
    witness: Option<&WitnessPointerTable>,
) -> SearchState {
    let mut matched = state.matched.clone();
    matched.push(c);
    if state.dead {
        return SearchState::dead(state.t + 1, matched);
    }
    let bwt = index.bwt();
    let n_nodes = index.node_count();

    // BWT slice of the current interval (skips sinks).
    let lo_b = (state.lo - 1) - sinks_leq(index, state.lo - 1) + 1;
    let hi_b = state.hi - sinks_leq(index, state.hi);
    let slice_live = lo_b <= hi_b;
    let (cnt_before, cnt_thru) = if slice_live {
        (
            bwt.rank(c, lo_b - 1).expect("slice in range"),
            bwt.rank(c, hi_b).expect("slice in range"),
        )
    } else {
        (0, 0)
    };
    let w = cnt_thru.saturating_sub(cnt_before);

    if w == 0 {
        // No labelled edge matches; the block can still consist of sources
        // whose contexts end with the whole matched string.
        let hits: Vec<usize> = index
            .source_ranks()
            .iter()
            .copied()
            .filter(|&s| context_ends_with(index, index.node(s).0, &matched))
            .collect();
        if hits.is_empty() {
            let mut next = SearchState::dead(state.t + 1, matched);
            next.candidate = None;
            return next;
        }
        let (lo2, hi2) = (hits[0], *hits.last().unwrap());
        debug_assert_eq!(hits.len(), hi2 - lo2 + 1, "matching sources form a block");
        return SearchState {
            lo: lo2,
            hi: hi2,
            dead: false,
            t: state.t + 1,
            matched,
            toehold: Some(TextPosition::new(index.node(lo2).0, 1)),
            first_dest: None,
            candidate: None, // a true match would need a within-read character
        };
    }

    let base = bwt.count_lt(c);
    let d1 = rank_of_nonsource_idx(index, base + cnt_before + 1);
    let d2 = rank_of_nonsource_idx(index, base + cnt_thru);

    // Text position of the first destination's incoming character: either the
    // toehold itself, or the head of the run its character starts.
    let q1 = bwt.select(c, cnt_before + 1).expect("w > 0");
    let first_dest = if q1 == lo_b {
        state.toehold.expect("live slice has a toehold")
    } else {
        index.samples().get(bwt.run_index(q1).expect("q1 in range"))
    };

    // Stretch the interval over adjacent sources that also end with the
    // matched string. Interior sources are part of the colex block already.
    let mut lo2 = d1;
    while lo2 > 1
        && index.is_source(lo2 - 1)
        && context_ends_with(index, index.node(lo2 - 1).0, &matched)
    {
        lo2 -= 1;
    }
    let mut hi2 = d2;
    while hi2 < n_nodes
        && index.is_source(hi2 + 1)
        && context_ends_with(index, index.node(hi2 + 1).0, &matched)
    {
        hi2 += 1;
    }

    let toehold = slice_head(index, lo2, hi2, first_dest, q1, c, cnt_before, w);

    let candidate = state.candidate.and_then(|cd| {
        let extended = cd.bwt_pos.and_then(|p| {
            (bwt.symbol_at(p).expect("candidate in range") == c).then(|| {
                let (rank, bwt_pos) = dest_after(index, p, c);
                debug_assert_eq!(index.node(rank), (cd.read_id, cd.end + 1));
                Candidate {
                    read_id: cd.read_id,
                    end: cd.end + 1,
                    bwt_pos,
                }
            })
        });
        extended.or_else(|| {
            witness.and_then(|table| {
                repair_candidate(index, table, state, c, lo_b, hi_b, cnt_before)
            })
        })
    });

    SearchState {
        lo: lo2,
        hi: hi2,
        dead: false,
        t: state.t + 1,
        matched,
        toehold,
        first_dest: Some(first_dest),
        candidate,
    }
}

/// Out-going character position of the first non-sink node in [lo2, hi2]:
/// a source contributes its read's first character; a destination that is
/// not a sink contributes the position after its incoming character. Leading
/// sink destinations are skipped by stepping their incoming characters along
/// (same-run neighbors via φ, run heads via the samples).
#[allow(clippy::too_many_arguments)]
fn slice_head(
    index: &RelaxedIndex,
    lo2: usize,
    hi2: usize,
    first_dest: TextPosition,
    q1: usize,
    c: Symbol,
    cnt_before: usize,
    w: usize,
) -> Option<TextPosition> {
    let bwt = index.bwt();
    let mut rank = lo2;
    let mut consumed = 0; // destinations passed over
    let mut pos = Some(first_dest);
    let mut q = q1;
    while rank <= hi2 {
        if index.is_source(rank) {
            return Some(TextPosition::new(index.node(rank).0, 1));
        }
        let p = pos.expect("destinations outnumber consumed sinks");
        if !index.is_sink(rank) {
            return Some(TextPosition::new(p.read_id, p.offset + 1));
        }
        consumed += 1;
        if consumed < w {
            let q_next = bwt.select(c, cnt_before + consumed + 1).expect("within count");
            pos = Some(if q_next == q + 1 {
                index.breaks().phi(p)
            } else {
                index.samples().get(bwt.run_index(q_next).expect("in range"))
            });
            q = q_next;
        } else {
            pos = None;
        }
        rank += 1;
    }
    None
}

/// Replace a lost candidate via the witness pointers of a run-boundary copy
/// of `c` inside the old interval's BWT slice.
fn repair_candidate(
    index: &RelaxedIndex,
    table: &WitnessPointerTable,
    state: &SearchState,
    c: Symbol,
    lo_b: usize,
    hi_b: usize,
    cnt_before: usize,
) -> Option<Candidate> {
    let bwt = index.bwt();
    let t_old = state.t;
    let first_sym = bwt.symbol_at(lo_b).expect("slice live");
    let z = if first_sym != c {
        // The first c in the slice has a non-c predecessor, so it heads a run.
        bwt.select(c, cnt_before + 1).expect("caller checked w > 0")
    } else {
        let run = bwt.run_index(lo_b).expect("in range");
        let (_, end) = bwt.run_bounds(run);
        if end <= hi_b {
            end
        } else {
            // The whole slice is one run of c: no boundary inside it, and the
            // candidate died at a sink. Walk the slice's positions directly.
            let mut pos = state.toehold.expect("slice live");
            for qq in lo_b..=hi_b {
                if pos.offset >= t_old + 1 {
                    let (_, bwt_pos) = dest_after(index, qq, c);
                    return Some(Candidate {
                        read_id: pos.read_id,
                        end: pos.offset,
                        bwt_pos,
                    });
                }
                if qq < hi_b {
                    pos = index.breaks().phi(pos);
                }
            }
            return None;
        }
    };

    let run = bwt.run_index(z).expect("in range");
    let (head, end) = bwt.run_bounds(run);
    let pair = table.for_run(run);
    let entry = if z == head { &pair.0 } else { &pair.1 };
    debug_assert!(z == head || z == end);
    debug_assert_eq!(entry.own_bwt_pos, z);

    // The boundary character itself may end a true match.
    if entry.own_pos.offset >= t_old + 1 {
        let (_, bwt_pos) = dest_after(index, z, c);
        return Some(Candidate {
            read_id: entry.own_pos.read_id,
            end: entry.own_pos.offset,
            bwt_pos,
        });
    }
    for ptr in [entry.succ, entry.pred].into_iter().flatten() {
        if ptr.bwt_pos >= lo_b && ptr.bwt_pos <= hi_b && ptr.lcs >= t_old {
            debug_assert!(ptr.text_pos.offset >= t_old + 1);
            let (_, bwt_pos) = dest_after(index, ptr.bwt_pos, c);
            return Some(Candidate {
                read_id: ptr.text_pos.read_id,
                end: ptr.text_pos.offset,
                bwt_pos,
            });
        }
    }
    None
}

// ---- whole-pattern operations ---------------------------------------------

/// Total match count, true and false alike: the final interval width.
pub fn count(index: &RelaxedIndex, pattern: &[Symbol]) -> usize {
    let mut state = start(index);
    for &c in pattern {
        state = step(index, &state, c);
        if !state.is_live() {
            return 0;
        }
    }
    state.width()
}

/// Every match, left to right across the final interval: sources report the
/// boundary (offset 0), destinations their final character's text position,
/// enumerated by iterating φ from the first destination.
pub fn locate_all(index: &RelaxedIndex, pattern: &[Symbol]) -> Vec<Occurrence> {
    if pattern.is_empty() {
        return Vec::new();
    }
    let mut state = start(index);
    for &c in pattern {
        state = step(index, &state, c);
        if !state.is_live() {
            return Vec::new();
        }
    }
    let (lo, hi) = state.interval().expect("live");
    let mut out = Vec::with_capacity(state.width());
    let mut pos = state.first_dest();
    for rank in lo..=hi {
        if index.is_source(rank) {
            out.push(Occurrence {
                read_id: index.node(rank).0,
                offset: 0,
                is_true: false,
            });
        } else {
            let p = pos.expect("non-sources are seeded by first_dest");
            out.push(Occurrence {
                read_id: p.read_id,
                offset: p.offset,
                is_true: p.offset >= pattern.len(),
            });
            pos = Some(index.breaks().phi(p));
        }
    }
    out
}

/// A match is true when it lies entirely inside its read: the final
/// character's offset must be at least the pattern length.
pub fn classify_match(index: &RelaxedIndex, occ: TextPosition, m: usize) -> bool {
    debug_assert!(occ.read_id < index.reads().r());
    debug_assert!(occ.offset >= 1 && occ.offset <= index.reads().len_of(occ.read_id));
    occ.offset >= m
}

/// Witness pointers for the first and last character of every run: the
/// nearest preceding and succeeding BWT copies of the same symbol whose true
/// contexts share the longest suffix with the boundary character's full
/// context.
pub fn build_witness_table(index: &RelaxedIndex) -> WitnessPointerTable {
    let bwt = index.bwt();
    // Origin (read id, prefix length) of every BWT position, in order.
    let mut origins = Vec::with_capacity(bwt.len());
    for rank in 1..=index.node_count() {
        if !index.is_sink(rank) {
            origins.push(index.node(rank));
        }
    }
    // BWT positions of every copy of each present symbol.
    let positions_of = |c: Symbol| -> Vec<usize> {
        let mut ps = Vec::new();
        for (i, run) in bwt.runs().iter().enumerate() {
            if run.symbol == c {
                let (s, e) = bwt.run_bounds(i);
                ps.extend(s..=e);
            }
        }
        ps
    };

    let lcs_with = |p: usize, q: usize| -> usize {
        // True context of p against full context of q.
        let (rid_p, k_p) = origins[p - 1];
        let (rid_q, k_q) = origins[q - 1];
        let true_side = index.reads().read(rid_p)[..k_p].iter().rev();
        let full_side = index
            .contexts()
            .context(rid_q)
            .iter()
            .chain(index.reads().read(rid_q)[..k_q].iter())
            .rev();
        true_side.zip(full_side).take_while(|(a, b)| a == b).count()
    };

    let mut entries = Vec::with_capacity(bwt.rho());
    for run_idx in 0..bwt.rho() {
        let c = bwt.runs()[run_idx].symbol;
        let (head, end) = bwt.run_bounds(run_idx);
        let copies = positions_of(c);
        let entry_for = |q: usize| -> WitnessEntry {
            let (rid, k) = origins[q - 1];
            let mut pred: Option<WitnessPointer> = None;
            let mut succ: Option<WitnessPointer> = None;
            for &p in &copies {
                if p == q {
                    continue;
                }
                let lcs = lcs_with(p, q);
                let (rid_p, k_p) = origins[p - 1];
                let ptr = WitnessPointer {
                    bwt_pos: p,
                    text_pos: TextPosition::new(rid_p, k_p + 1),
                    lcs,
                };
                if p < q {
                    // Ties prefer the nearest, i.e. the largest p; iteration
                    // order is ascending so >= keeps the later one.
                    if pred.map_or(true, |b| lcs >= b.lcs) {
                        pred = Some(ptr);
                    }
                } else if succ.map_or(true, |b| lcs > b.lcs) {
                    // Strict > keeps the smallest (nearest) p on ties.
                    succ = Some(ptr);
                }
            }
            WitnessEntry {
                own_bwt_pos: q,
                own_pos: TextPosition::new(rid, k + 1),
                pred,
                succ,
            }
        };
        entries.push((entry_for(head), entry_for(end)));
    }
    WitnessPointerTable::from_entries(entries)
}

/// Count the matches of `pattern` and return the final position of one true
/// match if any exists, maintaining the candidate across steps and repairing
/// it through the witness table on mismatch.
pub fn certify(
    index: &RelaxedIndex,
    table: &WitnessPointerTable,
    pattern: &[Symbol],
) -> (usize, Option<TextPosition>) {
    if pattern.is_empty() {
        return (index.node_count(), None);
    }
    let mut state = start(index);
    for &c in pattern {
        state = step_core(index, &state, c, Some(table));
        if !state.is_live() {
            return (0, None);
        }
    }
    let witness = state.candidate.and_then(|cd| {
        debug_assert!(cd.end >= pattern.len());
        (cd.end >= pattern.len()).then(|| TextPosition::new(cd.read_id, cd.end))
    });
    (state.width(), witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::reads::ReadCollection;
    use crate::relaxed::{build_relaxed, ContextAssignment};

    #[test]
    fn classify_by_offset() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["GATTA"]).unwrap();
        let idx = build_relaxed(reads, ContextAssignment::empty(1)).unwrap();
        assert!(classify_match(&idx, TextPosition::new(0, 3), 3));
        assert!(!classify_match(&idx, TextPosition::new(0, 2), 3));
    }

    #[test]
    fn empty_pattern_is_all_nodes_no_witness() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["GAT"]).unwrap();
        let idx = build_relaxed(reads, ContextAssignment::empty(1)).unwrap();
        let table = build_witness_table(&idx);
        assert_eq!(certify(&idx, &table, &[]), (4, None));
    }

    #[test]
    fn dead_search_reports_nothing() {
        let reads = ReadCollection::from_strs(Alphabet::dna(), &["AAAA"]).unwrap();
        let idx = build_relaxed(reads, ContextAssignment::empty(1)).unwrap();
        let g = Alphabet::dna().encode("G").unwrap();
        assert_eq!(count(&idx, &g), 0);
        assert!(locate_all(&idx, &g).is_empty());
        let table = build_witness_table(&idx);
        assert_eq!(certify(&idx, &table, &g), (0, None));
    }
}

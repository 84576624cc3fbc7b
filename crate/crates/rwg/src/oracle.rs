//! Brute-force reference implementations, kept deliberately separate from the
//! production builders: everything here materializes strings and sorts them
//! with the plainest comparison that is still correct. The test suites treat
//! these as ground truth.

use crate::alphabet::Symbol;
use crate::error::Error;
use crate::reads::ReadCollection;
use std::cmp::Ordering;

/// One within-read occurrence, 1-based inclusive.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct OracleMatch {
    pub read_id: usize,
    pub start: usize,
    pub end: usize,
}

/// Every within-read occurrence of `pattern`, by direct scanning.
pub fn naive_find_all(reads: &ReadCollection, pattern: &[Symbol]) -> Vec<OracleMatch> {
    let mut out = Vec::new();
    if pattern.is_empty() {
        return out;
    }
    for (read_id, read) in reads.reads().iter().enumerate() {
        for start in 0..read.len().saturating_sub(pattern.len() - 1) {
            if &read[start..start + pattern.len()] == pattern {
                out.push(OracleMatch {
                    read_id,
                    start: start + 1,
                    end: start + pattern.len(),
                });
            }
        }
    }
    out
}

/// Compare u^∞ against v^∞ by spelling out |u|+|v| symbols of each, which is
/// past the point where a difference must have appeared.
fn naive_omega_cmp(u: &[Symbol], v: &[Symbol]) -> Ordering {
    let bound = u.len() + v.len();
    for i in 0..bound {
        let a = u[i % u.len()];
        let b = v[i % v.len()];
        match a.cmp(&b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn naive_is_primitive(read: &[Symbol]) -> bool {
    // A string is a power iff it occurs inside its own square at a non-trivial
    // shift.
    let doubled: Vec<Symbol> = read.iter().chain(read.iter()).copied().collect();
    for shift in 1..read.len() {
        if &doubled[shift..shift + read.len()] == read {
            return false;
        }
    }
    true
}

/// The eBWT by explicit rotation generation and ω-order sorting.
pub fn naive_ebwt(reads: &ReadCollection) -> Result<Vec<Symbol>, Error> {
    for (id, read) in reads.reads().iter().enumerate() {
        if !naive_is_primitive(read) {
            return Err(Error::NonPrimitiveRead {
                id,
                read: reads.decode_read(id),
            });
        }
    }
    let mut rotations: Vec<Vec<Symbol>> = Vec::with_capacity(reads.n());
    for read in reads.reads() {
        for off in 0..read.len() {
            let rot: Vec<Symbol> = read[off..].iter().chain(read[..off].iter()).copied().collect();
            rotations.push(rot);
        }
    }
    rotations.sort_by(|a, b| naive_omega_cmp(a, b));
    Ok(rotations.iter().map(|rot| *rot.last().unwrap()).collect())
}

/// The BCR BWT: append `$_{j+1}` to the read `term_order[j]`, list every
/// rotation of every terminated read, sort them as plain strings (each
/// rotation holds a unique terminator, so there are no ties), and read off
/// the last symbols.
pub fn naive_bcr(reads: &ReadCollection, term_order: &[usize]) -> Vec<Symbol> {
    let mut terminated: Vec<Vec<Symbol>> = reads.reads().iter().map(|r| r.to_vec()).collect();
    for (j, &rid) in term_order.iter().enumerate() {
        terminated[rid].push(Symbol::Terminator(j as u32 + 1));
    }
    let mut rotations: Vec<Vec<Symbol>> = Vec::with_capacity(reads.n() + reads.r());
    for s in &terminated {
        for off in 0..s.len() {
            rotations.push(s[off..].iter().chain(s[..off].iter()).copied().collect());
        }
    }
    rotations.sort();
    rotations.iter().map(|rot| *rot.last().unwrap()).collect()
}

/// The relaxed BWT: materialize the key `context · read[1..k]` of every path
/// node, sort the reversed keys, and emit each non-sink node's outgoing
/// label. Ties between equal keys break by the read's lexicographic rank and
/// then its id, mirroring the production ordering. Returns the BWT and the
/// 1-based ranks of the source nodes.
pub fn naive_relaxed_bwt(
    reads: &ReadCollection,
    contexts: &[Vec<Symbol>],
) -> (Vec<Symbol>, Vec<usize>) {
    assert_eq!(contexts.len(), reads.r());
    let lex = reads.lex_ranks();
    // (reversed key, lex rank, read id, k)
    let mut nodes: Vec<(Vec<Symbol>, usize, usize, usize)> = Vec::new();
    for (rid, read) in reads.reads().iter().enumerate() {
        for k in 0..=read.len() {
            let mut rev_key: Vec<Symbol> =
                contexts[rid].iter().chain(read[..k].iter()).copied().collect();
            rev_key.reverse();
            nodes.push((rev_key, lex[rid], rid, k));
        }
    }
    nodes.sort();
    let mut bwt = Vec::with_capacity(reads.n());
    let mut sources = Vec::with_capacity(reads.r());
    for (rank0, &(_, _, rid, k)) in nodes.iter().enumerate() {
        if k == 0 {
            sources.push(rank0 + 1);
        }
        if k < reads.len_of(rid) {
            bwt.push(reads.read(rid)[k]);
        }
    }
    (bwt, sources)
}

/// Total (true plus false) matches of `pattern` on the relaxed index: the
/// number of path nodes whose key `context · prefix` ends with the pattern.
pub fn naive_relaxed_count(
    reads: &ReadCollection,
    contexts: &[Vec<Symbol>],
    pattern: &[Symbol],
) -> usize {
    assert_eq!(contexts.len(), reads.r());
    let mut count = 0;
    for (rid, read) in reads.reads().iter().enumerate() {
        let key: Vec<Symbol> = contexts[rid].iter().chain(read.iter()).copied().collect();
        for end in contexts[rid].len()..=key.len() {
            if end >= pattern.len() && key[end - pattern.len()..end] == *pattern {
                count += 1;
            }
        }
    }
    count
}

/// Rotations of any read that start with `pattern`, wrapping allowed — the
/// match set of eBWT backward search.
pub fn naive_ebwt_count(reads: &ReadCollection, pattern: &[Symbol]) -> usize {
    let mut count = 0;
    for read in reads.reads() {
        for off in 0..read.len() {
            if (0..pattern.len()).all(|i| read[(off + i) % read.len()] == pattern[i]) {
                count += 1;
            }
        }
    }
    count
}

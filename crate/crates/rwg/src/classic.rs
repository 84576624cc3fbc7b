//! The two baseline transforms: the eBWT over ω-order rotations and the BCR
//! transform with per-read terminators, plus the LF permutation and plain
//! backward search over either.

use crate::alphabet::Symbol;
use crate::error::Error;
use crate::query::Occurrence;
use crate::reads::ReadCollection;
use crate::rlbwt::RunLengthBwt;
use std::cmp::Ordering;
use std::collections::HashMap;

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Compare `u^∞` with `v^∞`, returning the ordering and the number of symbol
/// comparisons spent. A difference must appear within
/// `|u| + |v| − gcd(|u|,|v|)` symbols, so reaching that bound without one
/// proves the two share a primitive root.
pub fn omega_compare_counted(u: &[Symbol], v: &[Symbol]) -> Result<(Ordering, usize), Error> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyOmegaOperand);
    }
    let bound = u.len() + v.len() - gcd(u.len(), v.len());
    for i in 0..bound {
        let a = u[i % u.len()];
        let b = v[i % v.len()];
        if a != b {
            return Ok((a.cmp(&b), i + 1));
        }
    }
    Ok((Ordering::Equal, bound))
}

/// The ⪯_ω order on non-empty strings.
pub fn omega_compare(u: &[Symbol], v: &[Symbol]) -> Result<Ordering, Error> {
    omega_compare_counted(u, v).map(|(ord, _)| ord)
}

/// A string is primitive when it is not a power of a shorter string.
pub fn is_primitive(s: &[Symbol]) -> bool {
    let n = s.len();
    for d in 1..n {
        if n % d == 0 && (d..n).all(|i| s[i] == s[i - d]) {
            return false;
        }
    }
    true
}

/// A bijection on {1..N} with its cycle structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LfPermutation {
    /// map[i-1] is the image of i (both 1-based).
    map: Vec<usize>,
}

impl LfPermutation {
    pub fn new(map: Vec<usize>) -> Result<Self, Error> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &target in &map {
            if target == 0 || target > n || seen[target - 1] {
                return Err(Error::NotAPermutation(n));
            }
            seen[target - 1] = true;
        }
        Ok(LfPermutation { map })
    }

    pub fn domain_size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    /// Disjoint cycles covering 1..N, each starting at its smallest element,
    /// listed in order of those elements.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur - 1] {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// Cycle decomposition of an LF permutation.
pub fn cycle_decomposition(lf: &LfPermutation) -> Vec<Vec<usize>> {
    lf.cycles()
}

/// eBWT of a read collection: all rotations of all reads in ⪯_ω order.
#[derive(Clone, Debug)]
pub struct EbwtIndex {
    bwt: RunLengthBwt,
    lf: LfPermutation,
    reads: ReadCollection,
    /// Row → (read id, 0-based rotation start).
    rows: Vec<(usize, usize)>,
}

/// Sort all rotations of all reads by ⪯_ω; ties (rotations with equal
/// infinite powers, i.e. from reads that are cyclic shifts of one another)
/// break by (read id, rotation offset). Rejects non-primitive reads, on which
/// the ω-order is not total.
pub fn build_ebwt(reads: ReadCollection) -> Result<EbwtIndex, Error> {
    for (id, read) in reads.reads().iter().enumerate() {
        if !is_primitive(read) {
            return Err(Error::NonPrimitiveRead {
                id,
                read: reads.decode_read(id),
            });
        }
    }
    let mut rows: Vec<(usize, usize)> = Vec::with_capacity(reads.n());
    let mut rots: HashMap<(usize, usize), Vec<Symbol>> = HashMap::with_capacity(reads.n());
    for (rid, read) in reads.reads().iter().enumerate() {
        for off in 0..read.len() {
            rows.push((rid, off));
            let rot: Vec<Symbol> = read[off..].iter().chain(&read[..off]).copied().collect();
            rots.insert((rid, off), rot);
        }
    }
    rows.sort_by(|a, b| {
        omega_compare(&rots[a], &rots[b])
            .expect("rotations are non-empty")
            .then(a.cmp(b))
    });

    let row_of: HashMap<(usize, usize), usize> =
        rows.iter().enumerate().map(|(i, &row)| (row, i + 1)).collect();
    let mut last = Vec::with_capacity(rows.len());
    let mut map = Vec::with_capacity(rows.len());
    for &(rid, off) in &rows {
        let len = reads.len_of(rid);
        last.push(reads.read(rid)[(off + len - 1) % len]);
        // LF sends a rotation to the rotation starting one position earlier.
        map.push(row_of[&(rid, (off + len - 1) % len)]);
    }
    Ok(EbwtIndex {
        bwt: RunLengthBwt::encode(&last),
        lf: LfPermutation::new(map).expect("rotation shift is a bijection"),
        reads,
        rows,
    })
}

impl EbwtIndex {
    pub fn bwt(&self) -> &RunLengthBwt {
        &self.bwt
    }

    pub fn lf(&self) -> &LfPermutation {
        &self.lf
    }

    pub fn reads(&self) -> &ReadCollection {
        &self.reads
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    /// Rebuild from stored parts, re-deriving the LF map and checking that
    /// the stored BWT matches the row list.
    pub fn from_parts(
        reads: ReadCollection,
        rows: Vec<(usize, usize)>,
        bwt: RunLengthBwt,
    ) -> Result<Self, Error> {
        if rows.len() != reads.n() || bwt.len() != reads.n() {
            return Err(Error::InconsistentIndex("row/BWT counts disagree with reads"));
        }
        let row_of: HashMap<(usize, usize), usize> =
            rows.iter().enumerate().map(|(i, &row)| (row, i + 1)).collect();
        if row_of.len() != rows.len() {
            return Err(Error::InconsistentIndex("duplicate rotation row"));
        }
        let mut map = Vec::with_capacity(rows.len());
        for (i, &(rid, off)) in rows.iter().enumerate() {
            if rid >= reads.r() || off >= reads.len_of(rid) {
                return Err(Error::InconsistentIndex("rotation row out of range"));
            }
            let len = reads.len_of(rid);
            if bwt.symbol_at(i + 1)? != reads.read(rid)[(off + len - 1) % len] {
                return Err(Error::InconsistentIndex("BWT symbol does not match its rotation"));
            }
            map.push(
                *row_of
                    .get(&(rid, (off + len - 1) % len))
                    .ok_or(Error::InconsistentIndex("rotation row missing"))?,
            );
        }
        let rot = |&(rid, off): &(usize, usize)| -> Vec<Symbol> {
            let read = reads.read(rid);
            read[off..].iter().chain(&read[..off]).copied().collect()
        };
        for pair in rows.windows(2) {
            let ord = omega_compare(&rot(&pair[0]), &rot(&pair[1]))
                .map_err(|_| Error::InconsistentIndex("empty rotation"))?
                .then(pair[0].cmp(&pair[1]));
            if ord != Ordering::Less {
                return Err(Error::InconsistentIndex("rotation rows are out of order"));
            }
        }
        let lf = LfPermutation::new(map).map_err(|_| Error::InconsistentIndex("LF is not a bijection"))?;
        Ok(EbwtIndex { bwt, lf, reads, rows })
    }

    /// Backward-search interval of rotation rows starting (cyclically) with
    /// `pattern`.
    pub fn search(&self, pattern: &[Symbol]) -> Option<(usize, usize)> {
        backward_search(&self.bwt, pattern)
    }

    pub fn count(&self, pattern: &[Symbol]) -> usize {
        self.search(pattern).map(|(lo, hi)| hi - lo + 1).unwrap_or(0)
    }

    /// Every match, wrapped ones included, reporting the position of the
    /// final matched character. A match is true when it lies entirely within
    /// a read, i.e. does not use the circular wrap.
    pub fn find(&self, pattern: &[Symbol]) -> Vec<Occurrence> {
        let m = pattern.len();
        let Some((lo, hi)) = self.search(pattern) else {
            return Vec::new();
        };
        (lo..=hi)
            .map(|row| {
                let (rid, off) = self.rows[row - 1];
                let len = self.reads.len_of(rid);
                Occurrence {
                    read_id: rid,
                    offset: (off + m - 1) % len + 1,
                    is_true: off + m <= len,
                }
            })
            .collect()
    }
}

/// Read ids sorted by the lexicographic order of the reversed reads, ties by
/// input id: position j holds the read that receives terminator `$_{j+1}`.
pub fn colex_terminator_order(reads: &ReadCollection) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..reads.r()).collect();
    ids.sort_by(|&a, &b| {
        let ra = reads.read(a).iter().rev();
        let rb = reads.read(b).iter().rev();
        ra.cmp(rb).then(a.cmp(&b))
    });
    ids
}

/// BCR transform: each read gets a unique terminator and is treated
/// circularly.
#[derive(Clone, Debug)]
pub struct BcrIndex {
    bwt: RunLengthBwt,
    lf: LfPermutation,
    terminator_order: Vec<usize>,
    reads: ReadCollection,
    /// Row → (read id, 0-based rotation start within read·$).
    rows: Vec<(usize, usize)>,
}

/// Build the BCR BWT: rotations of every `read·$_j` string (terminator
/// subscripts assigned by `terminator_order`), sorted as plain strings.
/// Terminators are unique, so the order has no ties.
pub fn build_bcr(reads: ReadCollection, terminator_order: &[usize]) -> Result<BcrIndex, Error> {
    let r = reads.r();
    {
        let mut seen = vec![false; r];
        if terminator_order.len() != r {
            return Err(Error::BadTerminatorOrder);
        }
        for &id in terminator_order {
            if id >= r || seen[id] {
                return Err(Error::BadTerminatorOrder);
            }
            seen[id] = true;
        }
    }
    let mut terminated: Vec<Vec<Symbol>> = reads.reads().iter().map(|rd| rd.to_vec()).collect();
    for (j, &rid) in terminator_order.iter().enumerate() {
        terminated[rid].push(Symbol::Terminator(j as u32 + 1));
    }

    let mut rows: Vec<(usize, usize)> = Vec::with_capacity(reads.n() + r);
    let mut rots: HashMap<(usize, usize), Vec<Symbol>> = HashMap::with_capacity(reads.n() + r);
    for (rid, s) in terminated.iter().enumerate() {
        for off in 0..s.len() {
            rows.push((rid, off));
            rots.insert((rid, off), s[off..].iter().chain(&s[..off]).copied().collect());
        }
    }
    rows.sort_by(|a, b| rots[a].cmp(&rots[b]));

    let row_of: HashMap<(usize, usize), usize> =
        rows.iter().enumerate().map(|(i, &row)| (row, i + 1)).collect();
    let mut last = Vec::with_capacity(rows.len());
    let mut map = Vec::with_capacity(rows.len());
    for &(rid, off) in &rows {
        let len = terminated[rid].len();
        last.push(terminated[rid][(off + len - 1) % len]);
        map.push(row_of[&(rid, (off + len - 1) % len)]);
    }
    Ok(BcrIndex {
        bwt: RunLengthBwt::encode(&last),
        lf: LfPermutation::new(map).expect("rotation shift is a bijection"),
        terminator_order: terminator_order.to_vec(),
        reads,
        rows,
    })
}

impl BcrIndex {
    pub fn bwt(&self) -> &RunLengthBwt {
        &self.bwt
    }

    pub fn lf(&self) -> &LfPermutation {
        &self.lf
    }

    pub fn reads(&self) -> &ReadCollection {
        &self.reads
    }

    pub fn terminator_order(&self) -> &[usize] {
        &self.terminator_order
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn from_parts(
        reads: ReadCollection,
        terminator_order: Vec<usize>,
        rows: Vec<(usize, usize)>,
        bwt: RunLengthBwt,
    ) -> Result<Self, Error> {
        let rebuilt = build_bcr(reads, &terminator_order)?;
        if rebuilt.rows != rows || rebuilt.bwt != bwt {
            return Err(Error::InconsistentIndex("stored BCR disagrees with its reads"));
        }
        Ok(rebuilt)
    }

    pub fn search(&self, pattern: &[Symbol]) -> Option<(usize, usize)> {
        backward_search(&self.bwt, pattern)
    }

    pub fn count(&self, pattern: &[Symbol]) -> usize {
        self.search(pattern).map(|(lo, hi)| hi - lo + 1).unwrap_or(0)
    }

    /// Every match of a terminator-free pattern. The terminator blocks
    /// wrapping, so every BCR match is a true match.
    pub fn find(&self, pattern: &[Symbol]) -> Vec<Occurrence> {
        let m = pattern.len();
        let Some((lo, hi)) = self.search(pattern) else {
            return Vec::new();
        };
        (lo..=hi)
            .map(|row| {
                let (rid, off) = self.rows[row - 1];
                let len = self.reads.len_of(rid);
                let is_true = off + m <= len;
                Occurrence {
                    read_id: rid,
                    offset: if is_true { off + m } else { (off + m - 1) % (len + 1) + 1 },
                    is_true,
                }
            })
            .collect()
    }
}

/// Standard backward search over a BWT whose first column is the sorted
/// multiset of its own symbols (true for both rotation matrices here).
/// Returns the row interval of rotations starting with `pattern`.
pub fn backward_search(bwt: &RunLengthBwt, pattern: &[Symbol]) -> Option<(usize, usize)> {
    if bwt.is_empty() {
        return None;
    }
    let (mut lo, mut hi) = (1, bwt.len());
    for &c in pattern.iter().rev() {
        let base = bwt.count_lt(c);
        let lo2 = base + bwt.rank(c, lo - 1).expect("interval in range") + 1;
        let hi2 = base + bwt.rank(c, hi).expect("interval in range");
        if lo2 > hi2 {
            return None;
        }
        (lo, hi) = (lo2, hi2);
    }
    Some((lo, hi))
}

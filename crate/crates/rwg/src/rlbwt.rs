use crate::alphabet::Symbol;
use crate::error::Error;
use std::collections::BTreeMap;

/// One maximal unary run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Run {
    pub symbol: Symbol,
    pub len: usize,
}

/// A sequence stored as its maximal runs, with rank/select support.
///
/// Every query is O(log ρ): positions are mapped to runs by binary search on
/// the cumulative-start table, and per-symbol occurrence lists carry counts
/// accumulated run by run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunLengthBwt {
    runs: Vec<Run>,
    /// starts[i] = 1-based position of runs[i]'s first symbol.
    starts: Vec<usize>,
    len: usize,
    /// Per symbol: the runs holding it, each with the number of earlier
    /// occurrences of that symbol.
    occ: BTreeMap<Symbol, Vec<(usize, usize)>>,
}

impl RunLengthBwt {
    /// Run-length encode `seq`. Empty input yields zero runs.
    pub fn encode(seq: &[Symbol]) -> Self {
        let mut runs = Vec::new();
        for &s in seq {
            match runs.last_mut() {
                Some(Run { symbol, len }) if *symbol == s => *len += 1,
                _ => runs.push(Run { symbol: s, len: 1 }),
            }
        }
        Self::from_run_list(runs)
    }

    /// Rebuild from an explicit run list (e.g. a deserialized index).
    /// The list must already be maximal: positive lengths, adjacent runs
    /// holding different symbols.
    pub fn from_runs(runs: Vec<Run>) -> Result<Self, Error> {
        for (i, run) in runs.iter().enumerate() {
            if run.len == 0 {
                return Err(Error::InvalidRuns("zero-length run"));
            }
            if i > 0 && runs[i - 1].symbol == run.symbol {
                return Err(Error::InvalidRuns("adjacent runs share a symbol"));
            }
        }
        Ok(Self::from_run_list(runs))
    }

    fn from_run_list(runs: Vec<Run>) -> Self {
        let mut starts = Vec::with_capacity(runs.len());
        let mut occ: BTreeMap<Symbol, Vec<(usize, usize)>> = BTreeMap::new();
        let mut pos = 1;
        for (i, run) in runs.iter().enumerate() {
            starts.push(pos);
            pos += run.len;
            let list = occ.entry(run.symbol).or_default();
            let before = list
                .last()
                .map(|&(ri, cum)| cum + runs[ri].len)
                .unwrap_or(0);
            list.push((i, before));
        }
        RunLengthBwt {
            runs,
            starts,
            len: pos - 1,
            occ,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Run count ρ.
    pub fn rho(&self) -> usize {
        self.runs.len()
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn decode(&self) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.len);
        for run in &self.runs {
            out.extend(std::iter::repeat(run.symbol).take(run.len));
        }
        out
    }

    /// Index of the run covering 1-based position `pos`.
    pub fn run_index(&self, pos: usize) -> Result<usize, Error> {
        if pos == 0 || pos > self.len {
            return Err(Error::PositionOutOfRange { pos, len: self.len });
        }
        Ok(self.starts.partition_point(|&s| s <= pos) - 1)
    }

    /// 1-based inclusive bounds of run `idx`.
    pub fn run_bounds(&self, idx: usize) -> (usize, usize) {
        (self.starts[idx], self.starts[idx] + self.runs[idx].len - 1)
    }

    pub fn symbol_at(&self, pos: usize) -> Result<Symbol, Error> {
        Ok(self.runs[self.run_index(pos)?].symbol)
    }

    /// Occurrences of `symbol` in the length-`pos` prefix (`pos` may be 0).
    pub fn rank(&self, symbol: Symbol, pos: usize) -> Result<usize, Error> {
        if pos > self.len {
            return Err(Error::PositionOutOfRange { pos, len: self.len });
        }
        if pos == 0 {
            return Ok(0);
        }
        let list = match self.occ.get(&symbol) {
            Some(list) => list,
            None => return Ok(0),
        };
        let run = self.run_index(pos).expect("pos in range");
        // Last entry whose run is at or before `run`.
        let j = list.partition_point(|&(ri, _)| ri <= run);
        if j == 0 {
            return Ok(0);
        }
        let (ri, before) = list[j - 1];
        if ri == run {
            Ok(before + (pos - self.starts[ri] + 1))
        } else {
            Ok(before + self.runs[ri].len)
        }
    }

    /// Position of the k-th occurrence of `symbol` (k is 1-based).
    pub fn select(&self, symbol: Symbol, k: usize) -> Result<usize, Error> {
        let total = self.count(symbol);
        if k == 0 || k > total {
            return Err(Error::SelectOutOfRange { k, count: total });
        }
        let list = &self.occ[&symbol];
        // First run whose cumulative count reaches k.
        let j = list.partition_point(|&(ri, before)| before + self.runs[ri].len < k);
        let (ri, before) = list[j];
        Ok(self.starts[ri] + (k - before - 1))
    }

    /// Total occurrences of `symbol`.
    pub fn count(&self, symbol: Symbol) -> usize {
        self.occ
            .get(&symbol)
            .map(|list| {
                let &(ri, before) = list.last().unwrap();
                before + self.runs[ri].len
            })
            .unwrap_or(0)
    }

    /// Occurrences of symbols strictly smaller than `symbol` — the C array
    /// of backward search.
    pub fn count_lt(&self, symbol: Symbol) -> usize {
        self.occ
            .range(..symbol)
            .map(|(_, list)| {
                let &(ri, before) = list.last().unwrap();
                before + self.runs[ri].len
            })
            .sum()
    }

    /// Distinct symbols present, in order.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.occ.keys().copied()
    }
}

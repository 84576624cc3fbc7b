use crate::alphabet::{Alphabet, Symbol};
use crate::error::Error;

/// A 1-based character position inside one read.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TextPosition {
    pub read_id: usize,
    pub offset: usize,
}

impl TextPosition {
    pub fn new(read_id: usize, offset: usize) -> Self {
        TextPosition { read_id, offset }
    }
}

/// An ordered collection of non-empty reads over one alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReadCollection {
    alphabet: Alphabet,
    reads: Vec<Vec<Symbol>>,
    n: usize,
}

impl ReadCollection {
    pub fn new(alphabet: Alphabet, reads: Vec<Vec<Symbol>>) -> Result<Self, Error> {
        for (id, read) in reads.iter().enumerate() {
            if read.is_empty() {
                return Err(Error::EmptyRead { id });
            }
            debug_assert!(
                read.iter().all(|s| !s.is_terminator()),
                "reads hold regular symbols only"
            );
        }
        let n = reads.iter().map(Vec::len).sum();
        Ok(ReadCollection { alphabet, reads, n })
    }

    pub fn from_strs(alphabet: Alphabet, reads: &[&str]) -> Result<Self, Error> {
        let encoded = reads
            .iter()
            .map(|r| alphabet.encode(r))
            .collect::<Result<Vec<_>, _>>()?;
        ReadCollection::new(alphabet, encoded)
    }

    /// Total symbol count across all reads.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Read count.
    pub fn r(&self) -> usize {
        self.reads.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn read(&self, id: usize) -> &[Symbol] {
        &self.reads[id]
    }

    pub fn reads(&self) -> &[Vec<Symbol>] {
        &self.reads
    }

    pub fn len_of(&self, id: usize) -> usize {
        self.reads[id].len()
    }

    pub fn symbol_at(&self, pos: TextPosition) -> Symbol {
        self.reads[pos.read_id][pos.offset - 1]
    }

    pub fn decode_read(&self, id: usize) -> String {
        self.alphabet.decode_seq(&self.reads[id])
    }

    /// Rank of each read under plain lexicographic order, ties by id.
    /// Shared by the Wheeler-path and relaxed node orderings.
    pub fn lex_ranks(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.r()).collect();
        ids.sort_by(|&a, &b| self.reads[a].cmp(&self.reads[b]).then(a.cmp(&b)));
        let mut ranks = vec![0; self.r()];
        for (rank, &id) in ids.iter().enumerate() {
            ranks[id] = rank;
        }
        ranks
    }
}

use crate::error::Error;

/// One symbol of an indexed sequence.
///
/// Terminators compare below every regular symbol and among themselves by
/// subscript; both facts fall out of the derived `Ord` (variant order, then
/// payload order).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    /// Per-read end marker `$_i` with a 1-based subscript.
    Terminator(u32),
    /// Index into the owning [`Alphabet`]'s symbol table.
    Regular(u8),
}

impl Symbol {
    pub fn is_terminator(self) -> bool {
        matches!(self, Symbol::Terminator(_))
    }
}

/// Ordered set of regular symbols. The order of `chars` *is* the symbol
/// order, so the DNA default A < C < G < T comes from listing them that way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    chars: Vec<u8>,
}

impl Alphabet {
    pub fn new(chars: &[u8]) -> Result<Self, Error> {
        let mut seen = [false; 256];
        for &c in chars {
            if seen[c as usize] {
                return Err(Error::DuplicateAlphabetSymbol(c));
            }
            seen[c as usize] = true;
        }
        Ok(Alphabet {
            chars: chars.to_vec(),
        })
    }

    pub fn dna() -> Self {
        Alphabet {
            chars: b"ACGT".to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[u8] {
        &self.chars
    }

    pub fn encode_byte(&self, b: u8) -> Option<Symbol> {
        self.chars
            .iter()
            .position(|&c| c == b)
            .map(|i| Symbol::Regular(i as u8))
    }

    pub fn encode(&self, s: &str) -> Result<Vec<Symbol>, Error> {
        s.bytes()
            .map(|b| self.encode_byte(b).ok_or(Error::UnknownSymbol(b)))
            .collect()
    }

    /// Render one symbol; terminators print as `$` plus their subscript.
    pub fn decode(&self, sym: Symbol) -> String {
        match sym {
            Symbol::Regular(i) => (self.chars[i as usize] as char).to_string(),
            Symbol::Terminator(i) => format!("${i}"),
        }
    }

    pub fn decode_seq(&self, seq: &[Symbol]) -> String {
        seq.iter().map(|&s| self.decode(s)).collect()
    }
}

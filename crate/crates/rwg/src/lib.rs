//! Run-length compressed indexes for collections of short reads.
//!
//! The crate builds four index families over a read collection, all stored as
//! a run-length BWT:
//!
//! * [`classic::build_ebwt`] — rotation sorting under the ω-order, no
//!   terminators at all;
//! * [`classic::build_bcr`] — one terminator per read, terminators ordered
//!   colexicographically;
//! * [`wheeler::build_wheeler_paths`] — the terminator-free Wheeler path
//!   graph, whose BWT equals the BCR BWT with the terminators deleted;
//! * [`relaxed::build_relaxed`] — a relaxed Wheeler graph in which every read
//!   is sorted as if preceded by an imaginary context, trading false-positive
//!   matches for fewer runs.
//!
//! [`query`] implements counting, toehold locating, output-sensitive
//! locate-all, true/false match classification, and witness certification on
//! the relaxed family. [`oracle`] holds independent brute-force references
//! that the test suites compare against.

pub mod alphabet;
pub mod classic;
pub mod error;
pub mod oracle;
pub mod query;
pub mod reads;
pub mod relaxed;
pub mod rlbwt;
pub mod wheeler;

pub use alphabet::{Alphabet, Symbol};
pub use error::Error;
pub use reads::{ReadCollection, TextPosition};
pub use rlbwt::{Run, RunLengthBwt};

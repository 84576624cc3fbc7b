#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rwg::classic::is_primitive;
use rwg::{Alphabet, ReadCollection, Symbol};

pub fn enc(s: &str) -> Vec<Symbol> {
    Alphabet::dna().encode(s).unwrap()
}

pub fn dec(seq: &[Symbol]) -> String {
    Alphabet::dna().decode_seq(seq)
}

/// The worked five-read collection used by all the hand-checked values.
pub fn example() -> ReadCollection {
    ReadCollection::from_strs(
        Alphabet::dna(),
        &["GATTA", "TTAGA", "TAGATA", "GATAC", "ATACAT"],
    )
    .unwrap()
}

pub fn example_genome() -> Vec<Symbol> {
    enc("GATTAGATACAT")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_read(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Symbol> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| Symbol::Regular(rng.gen_range(0..4))).collect()
}

pub fn random_reads(rng: &mut ChaCha8Rng, max_r: usize, max_len: usize) -> ReadCollection {
    let r = rng.gen_range(1..=max_r);
    let reads = (0..r).map(|_| random_read(rng, max_len)).collect();
    ReadCollection::new(Alphabet::dna(), reads).unwrap()
}

pub fn random_primitive_reads(
    rng: &mut ChaCha8Rng,
    max_r: usize,
    max_len: usize,
) -> ReadCollection {
    let r = rng.gen_range(1..=max_r);
    let reads = (0..r)
        .map(|_| loop {
            let read = random_read(rng, max_len);
            if is_primitive(&read) {
                return read;
            }
        })
        .collect();
    ReadCollection::new(Alphabet::dna(), reads).unwrap()
}

pub fn random_pattern(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Symbol> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| Symbol::Regular(rng.gen_range(0..4))).collect()
}

/// A pattern sliced out of one of the reads, so matches are likely.
pub fn pattern_from_reads(
    rng: &mut ChaCha8Rng,
    reads: &ReadCollection,
    max_len: usize,
) -> Vec<Symbol> {
    let rid = rng.gen_range(0..reads.r());
    let read = reads.read(rid);
    let len = rng.gen_range(1..=read.len().min(max_len));
    let start = rng.gen_range(0..=read.len() - len);
    read[start..start + len].to_vec()
}

pub fn random_contexts(
    rng: &mut ChaCha8Rng,
    reads: &ReadCollection,
    max_ctx: usize,
) -> Vec<Vec<Symbol>> {
    (0..reads.r())
        .map(|_| {
            let len = rng.gen_range(0..=max_ctx);
            (0..len).map(|_| Symbol::Regular(rng.gen_range(0..4))).collect()
        })
        .collect()
}

/// Random genome plus reads sampled from it at roughly the given coverage.
pub fn genome_readset(
    rng: &mut ChaCha8Rng,
    genome_len: usize,
    coverage: usize,
    min_read: usize,
    max_read: usize,
) -> (Vec<Symbol>, ReadCollection) {
    let genome: Vec<Symbol> =
        (0..genome_len).map(|_| Symbol::Regular(rng.gen_range(0..4))).collect();
    let mean_read = (min_read + max_read) / 2;
    let count = (genome_len * coverage / mean_read).max(1);
    let reads = (0..count)
        .map(|_| {
            let len = rng.gen_range(min_read..=max_read.min(genome_len));
            let start = rng.gen_range(0..=genome_len - len);
            genome[start..start + len].to_vec()
        })
        .collect();
    (genome, ReadCollection::new(Alphabet::dna(), reads).unwrap())
}

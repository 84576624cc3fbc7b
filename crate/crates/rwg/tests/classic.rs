mod common;

use common::*;
use rand::prelude::*;
use rwg::classic::{
    build_bcr, build_ebwt, colex_terminator_order, omega_compare, omega_compare_counted,
};
use rwg::oracle::{naive_bcr, naive_ebwt, naive_ebwt_count, naive_find_all};
use rwg::{Error, Symbol};
use std::cmp::Ordering;

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn ebwt_example_golden() {
    let idx = build_ebwt(example()).unwrap();
    assert_eq!(dec(&idx.bwt().decode()), "TTTTTTGTCGGGAACAAAAAATTAAAA");
    assert_eq!(idx.bwt().rho(), 10);
    assert_eq!(idx.bwt().len(), 27);
    assert_eq!(
        idx.lf().cycles(),
        vec![
            vec![1, 19, 6, 24, 9, 13],
            vec![2, 20, 7, 15, 14],
            vec![3, 21, 8, 25, 10, 16],
            vec![4, 22, 26, 11, 17],
            vec![5, 23, 27, 12, 18],
        ]
    );
}

#[test]
fn ebwt_cycles_spell_rotations() {
    // Following LF collects the characters of one read backwards, so the
    // reversed labels of each cycle are exactly the rotation its head row
    // stands for.
    let idx = build_ebwt(example()).unwrap();
    for cycle in idx.lf().cycles() {
        let mut labels: Vec<Symbol> = cycle
            .iter()
            .map(|&row| idx.bwt().symbol_at(row).unwrap())
            .collect();
        labels.reverse();
        let (rid, off) = idx.rows()[cycle[0] - 1];
        let read = idx.reads().read(rid);
        let rotation: Vec<Symbol> =
            read[off..].iter().chain(&read[..off]).copied().collect();
        assert_eq!(labels, rotation);
    }
}

#[test]
fn ebwt_matches_brute_force() {
    for seed in 0..40 {
        let mut rng = rng(seed);
        let reads = random_primitive_reads(&mut rng, 6, 12);
        let expected = naive_ebwt(&reads).unwrap();
        let idx = build_ebwt(reads).unwrap();
        assert_eq!(idx.bwt().decode(), expected, "seed {seed}");
    }
}

#[test]
fn ebwt_unaffected_by_rotating_inputs() {
    // The transform sees rotations, not reads, so cyclically shifting any
    // input read leaves the BWT untouched.
    for seed in 100..115 {
        let mut rng = rng(seed);
        let reads = random_primitive_reads(&mut rng, 5, 10);
        let shifted: Vec<Vec<Symbol>> = reads
            .reads()
            .iter()
            .map(|read| {
                let s = rng.gen_range(0..read.len());
                read[s..].iter().chain(&read[..s]).copied().collect()
            })
            .collect();
        let shifted =
            rwg::ReadCollection::new(reads.alphabet().clone(), shifted).unwrap();
        let a = build_ebwt(reads).unwrap();
        let b = build_ebwt(shifted).unwrap();
        assert_eq!(a.bwt(), b.bwt(), "seed {seed}");
    }
}

#[test]
fn ebwt_rejects_non_primitive_reads() {
    let reads = rwg::ReadCollection::from_strs(rwg::Alphabet::dna(), &["ATAT"]).unwrap();
    assert!(matches!(
        build_ebwt(reads),
        Err(Error::NonPrimitiveRead { id: 0, .. })
    ));
    let reads =
        rwg::ReadCollection::from_strs(rwg::Alphabet::dna(), &["GAT", "AAA"]).unwrap();
    assert!(matches!(
        build_ebwt(reads),
        Err(Error::NonPrimitiveRead { id: 1, .. })
    ));
}

#[test]
fn ebwt_counts_include_wrapped_matches() {
    let idx = build_ebwt(example()).unwrap();
    // AGATT only ever matches across a wrap: the interval is non-empty while
    // the read scan finds nothing.
    let agatt = enc("AGATT");
    assert_eq!(idx.search(&agatt), Some((4, 5)));
    assert_eq!(idx.count(&agatt), 2);
    assert_eq!(naive_ebwt_count(&example(), &agatt), 2);
    assert!(naive_find_all(&example(), &agatt).is_empty());
    assert!(idx.find(&agatt).iter().all(|occ| !occ.is_true));

    let gat = enc("GAT");
    assert_eq!(idx.count(&gat), naive_ebwt_count(&example(), &gat));
    let true_hits: Vec<(usize, usize)> = idx
        .find(&gat)
        .iter()
        .filter(|o| o.is_true)
        .map(|o| (o.read_id, o.offset))
        .collect();
    let mut expected: Vec<(usize, usize)> = naive_find_all(&example(), &gat)
        .iter()
        .map(|m| (m.read_id, m.end))
        .collect();
    let mut got = true_hits;
    got.sort_unstable();
    expected.sort_unstable();
    assert_eq!(got, expected);
}

#[test]
fn ebwt_search_agrees_with_circular_oracle_randomly() {
    for seed in 200..230 {
        let mut rng = rng(seed);
        let reads = random_primitive_reads(&mut rng, 5, 10);
        let idx = build_ebwt(reads.clone()).unwrap();
        for _ in 0..10 {
            let pattern = if rng.gen_bool(0.5) {
                pattern_from_reads(&mut rng, &reads, 6)
            } else {
                random_pattern(&mut rng, 6)
            };
            assert_eq!(
                idx.count(&pattern),
                naive_ebwt_count(&reads, &pattern),
                "seed {seed}"
            );
            let trues: usize = idx.find(&pattern).iter().filter(|o| o.is_true).count();
            assert_eq!(trues, naive_find_all(&reads, &pattern).len(), "seed {seed}");
        }
    }
}

#[test]
fn fine_wilf_comparison_bound() {
    let mut rng = rng(7);
    for _ in 0..500 {
        let u = random_pattern(&mut rng, 10);
        let v = random_pattern(&mut rng, 10);
        let (ord, used) = omega_compare_counted(&u, &v).unwrap();
        assert!(used <= u.len() + v.len() - gcd(u.len(), v.len()));
        // u^∞ = v^∞ exactly when uv = vu.
        let uv: Vec<Symbol> = u.iter().chain(&v).copied().collect();
        let vu: Vec<Symbol> = v.iter().chain(&u).copied().collect();
        assert_eq!(ord == Ordering::Equal, uv == vu);
    }
    // Powers of a common root always hit the Equal case.
    for _ in 0..100 {
        let w = random_pattern(&mut rng, 4);
        let i = rng.gen_range(1..=3);
        let j = rng.gen_range(1..=3);
        let u: Vec<Symbol> = w.iter().cycle().take(w.len() * i).copied().collect();
        let v: Vec<Symbol> = w.iter().cycle().take(w.len() * j).copied().collect();
        assert_eq!(omega_compare(&u, &v).unwrap(), Ordering::Equal);
    }
}

#[test]
fn colex_terminator_order_golden() {
    assert_eq!(colex_terminator_order(&example()), vec![1, 2, 0, 3, 4]);
}

#[test]
fn bcr_example_golden() {
    let reads = example();
    let order = colex_terminator_order(&reads);
    let idx = build_bcr(reads.clone(), &order).unwrap();
    assert_eq!(idx.bwt().decode(), naive_bcr(&reads, &order));
    assert_eq!(
        dec(&idx.bwt().decode()),
        "AAACTGTTTTTTCGG$5GAAAA$4$3AATAAT$2A$1"
    );
    assert_eq!(idx.bwt().len(), 32);
    assert_eq!(idx.bwt().rho(), 19);
    assert_eq!(
        idx.lf().cycles(),
        vec![
            vec![1, 6, 20, 11, 29, 32],
            vec![2, 7, 25, 14, 21, 12, 30],
            vec![3, 8, 26, 31, 17, 23],
            vec![4, 18, 9, 27, 15, 22],
            vec![5, 24, 13, 19, 10, 28, 16],
        ]
    );
}

#[test]
fn bcr_cycles_spell_terminated_reads() {
    let reads = example();
    let order = colex_terminator_order(&reads);
    let idx = build_bcr(reads.clone(), &order).unwrap();
    for (i, cycle) in idx.lf().cycles().into_iter().enumerate() {
        let labels: Vec<Symbol> = cycle
            .iter()
            .map(|&row| idx.bwt().symbol_at(row).unwrap())
            .collect();
        // Cycle i starts at the $_{i+1} rotation, so its labels end with that
        // terminator and otherwise spell its read reversed.
        assert_eq!(*labels.last().unwrap(), Symbol::Terminator(i as u32 + 1));
        let mut regulars: Vec<Symbol> =
            labels[..labels.len() - 1].to_vec();
        regulars.reverse();
        assert_eq!(regulars, reads.read(order[i]));
    }
}

#[test]
fn bcr_matches_are_always_true() {
    let reads = example();
    let idx = build_bcr(reads.clone(), &colex_terminator_order(&reads)).unwrap();
    let gat = enc("GAT");
    let occs = idx.find(&gat);
    assert_eq!(occs.len(), naive_find_all(&reads, &gat).len());
    assert!(occs.iter().all(|o| o.is_true));
    let mut got: Vec<(usize, usize)> =
        occs.iter().map(|o| (o.read_id, o.offset)).collect();
    got.sort_unstable();
    let mut expected: Vec<(usize, usize)> = naive_find_all(&reads, &gat)
        .iter()
        .map(|m| (m.read_id, m.end))
        .collect();
    expected.sort_unstable();
    assert_eq!(got, expected);
    assert_eq!(idx.count(&enc("AGATT")), 0);
}

#[test]
fn bcr_accepts_non_primitive_reads() {
    let reads = rwg::ReadCollection::from_strs(rwg::Alphabet::dna(), &["ATAT"]).unwrap();
    let idx = build_bcr(reads.clone(), &[0]).unwrap();
    assert_eq!(idx.bwt().len(), 5);
    assert_eq!(idx.count(&enc("AT")), 2);
    assert_eq!(naive_find_all(&reads, &enc("AT")).len(), 2);
}

#[test]
fn bcr_matches_brute_force() {
    for seed in 300..340 {
        let mut rng = rng(seed);
        let reads = random_reads(&mut rng, 6, 12);
        let mut order: Vec<usize> = (0..reads.r()).collect();
        order.shuffle(&mut rng);
        let expected = naive_bcr(&reads, &order);
        let idx = build_bcr(reads, &order).unwrap();
        assert_eq!(idx.bwt().decode(), expected, "seed {seed}");
    }
}

#[test]
fn from_parts_round_trips_and_rejects_corruption() {
    let ebwt = build_ebwt(example()).unwrap();
    let rebuilt = rwg::classic::EbwtIndex::from_parts(
        example(),
        ebwt.rows().to_vec(),
        ebwt.bwt().clone(),
    )
    .unwrap();
    assert_eq!(rebuilt.bwt(), ebwt.bwt());
    assert_eq!(rebuilt.lf(), ebwt.lf());

    // Swapping two rows breaks the sortedness (or symbol) check.
    let mut rows = ebwt.rows().to_vec();
    rows.swap(0, 6);
    assert!(rwg::classic::EbwtIndex::from_parts(example(), rows, ebwt.bwt().clone())
        .is_err());

    let order = colex_terminator_order(&example());
    let bcr = build_bcr(example(), &order).unwrap();
    assert!(rwg::classic::BcrIndex::from_parts(
        example(),
        order.clone(),
        bcr.rows().to_vec(),
        bcr.bwt().clone()
    )
    .is_ok());
    let wrong_order = vec![0, 1, 2, 3, 4];
    assert!(rwg::classic::BcrIndex::from_parts(
        example(),
        wrong_order,
        bcr.rows().to_vec(),
        bcr.bwt().clone()
    )
    .is_err());
}

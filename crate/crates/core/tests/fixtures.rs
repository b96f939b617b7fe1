use std::collections::BTreeMap;

use sha2::{Digest, Sha256};
use truncalg::fixtures::{self, count_rows, frobenius_rows, generator_rows, monoid_rows};

#[test]
fn checksums_match() {
    let sums = include_str!("../fixtures/CHECKSUMS");
    let files = [
        ("count_tables.jsonl", fixtures::COUNT_TABLES),
        ("frobenius_families.jsonl", fixtures::FROBENIUS_FAMILIES),
        ("monoid_tables.jsonl", fixtures::MONOID_TABLES),
        ("subalgebra_tables.jsonl", fixtures::SUBALGEBRA_TABLES),
    ];
    for (name, body) in files {
        let digest = hex::encode(Sha256::digest(body.as_bytes()));
        let line = sums
            .lines()
            .find(|l| l.ends_with(name))
            .unwrap_or_else(|| panic!("no checksum for {name}"));
        assert!(line.starts_with(&digest), "{name} changed: {digest}");
    }
}

// The three tables were transcribed separately; tallying the generator rows
// must reproduce the other two.
#[test]
fn generator_rows_tally_to_monoid_grid() {
    let mut tally: BTreeMap<(usize, usize), BTreeMap<usize, u64>> = BTreeMap::new();
    for r in generator_rows().unwrap() {
        *tally
            .entry((r.n, r.n - r.members.len()))
            .or_default()
            .entry(r.e)
            .or_default() += 1;
    }
    let grid: BTreeMap<(usize, usize), BTreeMap<usize, u64>> = monoid_rows()
        .unwrap()
        .into_iter()
        .map(|r| {
            assert_eq!(r.counts.values().sum::<u64>(), r.total);
            ((r.n, r.c), r.counts)
        })
        .collect();
    assert_eq!(tally, grid);
}

#[test]
fn generator_rows_sum_to_count_polynomials() {
    let mut polys: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    for r in generator_rows().unwrap() {
        let c = r.n - r.members.len();
        if c == 0 {
            continue;
        }
        let p = polys.entry((r.n, c)).or_default();
        if p.len() <= r.e {
            p.resize(r.e + 1, 0);
        }
        p[r.e] += 1;
    }
    let table: BTreeMap<(usize, usize), Vec<u64>> = count_rows()
        .unwrap()
        .into_iter()
        .map(|r| ((r.n, r.c), r.coeffs))
        .collect();
    assert_eq!(polys, table);
}

#[test]
fn frobenius_rows_shape() {
    let rows = frobenius_rows().unwrap();
    let per_n: BTreeMap<usize, usize> = rows.iter().fold(BTreeMap::new(), |mut m, r| {
        *m.entry(r.n).or_default() += 1;
        m
    });
    assert_eq!(per_n, BTreeMap::from([(11, 2), (12, 5), (13, 1), (14, 7)]));
    assert_eq!(rows.iter().filter(|r| r.exceptional).count(), 1);
    assert_eq!(rows.iter().filter(|r| r.printed_e.is_some()).count(), 1);
}

#[test]
fn templates_in_range() {
    for r in generator_rows().unwrap() {
        for t in &r.templates {
            assert!(r.members.contains(&t.base_exp), "{r:?}");
            for s in &t.slots {
                assert!(s.pos > t.base_exp && s.pos < r.n, "{r:?}");
                assert!(!r.members.contains(&s.pos), "slot on a pivot in {r:?}");
            }
        }
    }
}

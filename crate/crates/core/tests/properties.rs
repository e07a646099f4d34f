//! Exhaustive structural properties: the coloring/reconstruction bijection,
//! greedy minimality (alphabet and lexicographic), and full-range roundtrips.

mod common;

use std::collections::HashMap;

use common::{counter_key, for_each_rgs, key_to_array, text_of};
use palcomb::{
    build_restriction_graph, coloring_to_text, compute_manacher, fingerprint_of,
    reconstruct_minimal, text_to_coloring, Census, Coloring, RestrictionGraph, Symbol,
};

/// Every reconstruction induces a proper coloring and the two maps are
/// mutually inverse, exhaustively over canonical strings of length <= 10.
#[test]
fn bijection_text_side_exhaustive() {
    for n in 0..=10 {
        for_each_rgs(n, n.max(1) as u32, &mut |ids| {
            let text = text_of(ids);
            let g = build_restriction_graph(&fingerprint_of(&text)).expect("realizable");
            let psi = text_to_coloring(&g, &text).expect("reconstruction colors properly");
            assert_eq!(coloring_to_text(&g, &psi).unwrap(), text);
        });
    }
}

fn for_each_proper_coloring(g: &RestrictionGraph, palette: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(
        g: &RestrictionGraph,
        palette: u32,
        colors: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]),
    ) {
        let v = colors.len();
        if v == g.vertex_count() {
            f(colors);
            return;
        }
        'next: for c in 1..=palette {
            for &u in g.neighbors(v) {
                if u < v && colors[u] == c {
                    continue 'next;
                }
            }
            colors.push(c);
            rec(g, palette, colors, f);
            colors.pop();
        }
    }
    rec(g, palette, &mut Vec::new(), f);
}

fn falling_factorial(v: u64, d: u64) -> u64 {
    (0..d).map(|i| v - i).product()
}

/// Every proper coloring yields a text with the source array, exhaustively
/// over all colorings with a |V|-color palette for n <= 7; for n <= 6 the
/// coloring count is cross-checked against the labeled-string count.
#[test]
fn bijection_coloring_side_exhaustive() {
    for n in 1..=7 {
        // canonical strings grouped by array: count per distinct-symbol size
        let mut groups: HashMap<u128, Vec<u64>> = HashMap::new();
        for_each_rgs(n, n as u32, &mut |ids| {
            let text = text_of(ids);
            let d = text.distinct_symbols();
            let entry = groups.entry(counter_key(&text)).or_default();
            if entry.len() < d + 1 {
                entry.resize(d + 1, 0);
            }
            entry[d] += 1;
        });
        for (&key, by_symbols) in &groups {
            let arr = key_to_array(key, n);
            let g = build_restriction_graph(&palcomb::array_to_fingerprint(&arr)).unwrap();
            let palette = g.vertex_count() as u32;
            let mut colorings = 0u64;
            for_each_proper_coloring(&g, palette, &mut |colors| {
                colorings += 1;
                let psi = Coloring::new(
                    colors
                        .iter()
                        .map(|&c| Symbol::new(c).unwrap())
                        .collect(),
                );
                let text = coloring_to_text(&g, &psi).expect("proper colorings convert");
                assert_eq!(compute_manacher(&text), arr);
                assert_eq!(text_to_coloring(&g, &text).unwrap(), psi);
            });
            if n <= 6 {
                // strings over a fixed |V|-symbol alphabet with this array
                let labeled: u64 = by_symbols
                    .iter()
                    .enumerate()
                    .map(|(d, &cnt)| cnt * falling_factorial(palette as u64, d as u64))
                    .sum();
                assert_eq!(colorings, labeled, "count mismatch at n = {n}");
            }
        }
    }
}

/// One full sweep of canonical strings for n <= 10: the greedy
/// reconstruction is lexicographically minimal, its alphabet matches the
/// exhaustive minimum, it roundtrips, and it obeys the log bound.
#[test]
fn greedy_minimality_exhaustive() {
    for n in 1..=10 {
        let mut best: HashMap<u128, (usize, Vec<u32>)> = HashMap::new();
        for_each_rgs(n, n as u32, &mut |ids| {
            let text = text_of(ids);
            let key = counter_key(&text);
            let alpha = text.distinct_symbols();
            best.entry(key)
                .and_modify(|(a, lex)| {
                    *a = (*a).min(alpha);
                    if ids < lex.as_slice() {
                        *lex = ids.to_vec();
                    }
                })
                .or_insert_with(|| (alpha, ids.to_vec()));
        });
        let log_bound = if n >= 2 {
            (n - 1).ilog2() as usize + 2
        } else {
            1
        };
        for (&key, (min_alpha, lex_min)) in &best {
            let arr = key_to_array(key, n);
            let r = reconstruct_minimal(&arr).expect("realizable");
            assert_eq!(r.alphabet_size, *min_alpha, "alphabet at n = {n}");
            assert_eq!(&r.text.text().ids(), lex_min, "lex minimality at n = {n}");
            assert_eq!(compute_manacher(r.text.text()), arr);
            assert!(r.alphabet_size <= log_bound);
            // first occurrences are strictly increasing by construction
            assert!(r.first_occurrences.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

/// The event encoding is a bijection on every counter array up to length 12.
#[test]
fn counter_history_bijection_to_12() {
    fn rec(cur: &mut Vec<usize>, n: usize, visited: &mut u64) {
        if cur.len() == n {
            let c = palcomb::CounterArray::new(cur.clone()).unwrap();
            let h = palcomb::decode_counter(&c);
            assert_eq!(palcomb::encode_events(&h), c);
            *visited += 1;
            return;
        }
        let i = cur.len();
        let lo = cur.last().map_or(1, |&v| v.saturating_sub(1).max(1));
        for v in lo..=i + 1 {
            cur.push(v);
            rec(cur, n, visited);
            cur.pop();
        }
    }
    for n in 0..=12 {
        let mut visited = 0u64;
        rec(&mut Vec::new(), n, &mut visited);
        assert_eq!(
            num_bigint::BigUint::from(visited),
            palcomb::sigma_count(n),
            "n = {n}"
        );
    }
}

/// Reconstruction roundtrips over every distinct array up to the census
/// limit.
#[test]
fn roundtrip_all_arrays_to_limit() {
    let census = Census::default();
    for n in 1..=12 {
        let counters = census.enumerate_rho_counters(n).unwrap();
        for c in counters {
            let arr = palcomb::compact_to_manacher(&palcomb::counter_to_compact(&c)).unwrap();
            let r = reconstruct_minimal(&arr).expect("enumerated arrays are realizable");
            assert_eq!(compute_manacher(r.text.text()), arr);
        }
    }
}

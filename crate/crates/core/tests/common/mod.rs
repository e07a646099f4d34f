//! Helpers shared by the integration suites.
#![allow(dead_code)]

use palcomb::{DupTree, ManacherArray, Text, TreeSpec};

/// Visits every restricted-growth string of length n over at most `cap`
/// symbols.
pub fn for_each_rgs(n: usize, cap: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(cur: &mut Vec<u32>, max: u32, n: usize, cap: u32, f: &mut impl FnMut(&[u32])) {
        if cur.len() == n {
            f(cur);
            return;
        }
        for v in 1..=(max + 1).min(cap) {
            cur.push(v);
            rec(cur, max.max(v), n, cap, f);
            cur.pop();
        }
    }
    if n == 0 {
        f(&[]);
    } else {
        rec(&mut Vec::with_capacity(n), 0, n, cap, f);
    }
}

pub fn text_of(ids: &[u32]) -> Text {
    Text::from_ids(ids).expect("test ids are positive")
}

/// Counter-array key of a text's Manacher array, packed 5 bits per entry.
pub fn counter_key(t: &Text) -> u128 {
    let c = palcomb::compact_to_counter(&palcomb::delta_array(t));
    let mut key = 0u128;
    for (i, &v) in c.values().iter().enumerate() {
        key |= (v as u128) << (5 * i);
    }
    key
}

pub fn key_to_array(key: u128, n: usize) -> ManacherArray {
    let a: Vec<usize> = (0..n).map(|i| ((key >> (5 * i)) & 0x1f) as usize).collect();
    let c = palcomb::CounterArray::new(a).expect("keys are counter arrays");
    palcomb::compact_to_manacher(&palcomb::counter_to_compact(&c)).expect("keys decode")
}

/// Right end (1-based) of the maximal palindrome at doubled center dc.
pub fn right_end(a: &ManacherArray, dc: usize) -> usize {
    dc / 2 + a.radius_at(dc)
}

/// Position m is palindromically dependent iff some maximal palindrome has
/// center strictly left of m and covers m.
pub fn is_dependent(a: &ManacherArray, m: usize) -> bool {
    (2..2 * m).any(|dc| right_end(a, dc) >= m)
}

/// For s[m] = σ_i, the length of the shortest palindrome p with
/// σ_j · p · σ_i a suffix of s[1..m], per j < i; None when absent.
pub fn shortest_suffix_palindromes(s: &[u32], m: usize, i: u32) -> Vec<Option<usize>> {
    (1..i)
        .map(|j| {
            (0..m.saturating_sub(1)).find(|&plen| {
                let pos = m - plen - 1; // 1-based position of σ_j
                let seg = &s[pos..m - 1];
                pos >= 1 && s[pos - 1] == j && seg.iter().eq(seg.iter().rev())
            })
        })
        .collect()
}

/// The 18-leaf worked-example duplication tree.
pub fn fig1_tree() -> DupTree {
    fn leaf(p: usize) -> Box<TreeSpec> {
        Box::new(TreeSpec::Leaf(p))
    }
    fn node(l: Box<TreeSpec>, r: Box<TreeSpec>) -> Box<TreeSpec> {
        Box::new(TreeSpec::Node(l, r))
    }
    let h = node(leaf(1), node(leaf(3), leaf(4)));
    let n = node(leaf(6), leaf(7));
    let d = node(h, n);
    let i = node(leaf(2), leaf(5));
    let j = node(leaf(8), leaf(10));
    let f = node(i, j);
    let b = node(d, f);
    let k = node(leaf(9), leaf(11));
    let a = node(b, k);
    let o = node(leaf(12), leaf(13));
    let p = node(leaf(14), leaf(15));
    let l = node(p, leaf(17));
    let m = node(leaf(16), leaf(18));
    let g = node(l, m);
    let c = node(o, g);
    DupTree::from_spec(&TreeSpec::Node(a, c)).expect("figure tree is well formed")
}

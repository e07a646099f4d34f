//! Array-level reconstruction: lexicographically minimal texts, exact-k
//! alphabets, the alphabet-size law α(k), and palindromic Zimin patterns.

use crate::error::{Error, Result};
use crate::fingerprint::array_to_fingerprint;
use crate::graph::{
    build_restriction_graph, coloring_to_text, expand_coloring, greedy_min_coloring,
};
use crate::manacher::{compute_manacher, ManacherArray};
use crate::text::{is_palindrome, CanonicalText, Symbol, Text};

/// Outcome of a minimal reconstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub text: CanonicalText,
    pub alphabet_size: usize,
    /// 1-based position of the first occurrence of each symbol, in symbol
    /// order; strictly increasing.
    pub first_occurrences: Vec<usize>,
}

/// The lexicographically minimal canonical text realizing the array, built
/// as restriction-graph coloring and post-verified by recomputation.  The
/// alphabet is globally minimal and at most ⌊log₂(n−1)⌋ + 2 for n ≥ 2.
pub fn reconstruct_minimal(a: &ManacherArray) -> Result<ReconstructionResult> {
    let f = array_to_fingerprint(a);
    let g = build_restriction_graph(&f)?;
    let psi = greedy_min_coloring(&g);
    let text = coloring_to_text(&g, &psi).expect("greedy coloring is proper and total");
    if compute_manacher(&text) != *a {
        return Err(Error::Unrealizable(
            "no string realizes this array (reconstruction mismatch)".into(),
        ));
    }
    let alphabet_size = text
        .symbols()
        .iter()
        .map(|s| s.id())
        .max()
        .unwrap_or(0) as usize;
    let mut first_occurrences = vec![0usize; alphabet_size];
    for (i, sym) in text.symbols().iter().enumerate() {
        let slot = &mut first_occurrences[(sym.id() - 1) as usize];
        if *slot == 0 {
            *slot = i + 1;
        }
    }
    let text = CanonicalText::new(text).expect("greedy introduces symbols in order");
    Ok(ReconstructionResult {
        text,
        alphabet_size,
        first_occurrences,
    })
}

/// A text realizing the array with exactly `k` distinct symbols, when
/// χ ≤ k ≤ number of equality classes.
pub fn reconstruct_with_k(a: &ManacherArray, k: usize) -> Result<Text> {
    let f = array_to_fingerprint(a);
    let g = build_restriction_graph(&f)?;
    let psi = greedy_min_coloring(&g);
    let minimal = coloring_to_text(&g, &psi).expect("greedy coloring is proper and total");
    if compute_manacher(&minimal) != *a {
        return Err(Error::Unrealizable(
            "no string realizes this array (reconstruction mismatch)".into(),
        ));
    }
    let expanded = expand_coloring(&g, &psi, k)?;
    let text = coloring_to_text(&g, &expanded).expect("expansion stays proper");
    debug_assert_eq!(compute_manacher(&text), *a);
    Ok(text)
}

/// Minimal number of distinct symbols over all realizations; the chromatic
/// number of the restriction graph.
pub fn min_alphabet_size(a: &ManacherArray) -> Result<usize> {
    reconstruct_minimal(a).map(|r| r.alphabet_size)
}

fn zimin_symbols(k: usize) -> Vec<Symbol> {
    let mut w: Vec<Symbol> = Vec::new();
    for j in 1..=k {
        let sep = Symbol::new(j as u32).expect("positive id");
        let mut next = Vec::with_capacity(2 * w.len() + 1);
        next.extend_from_slice(&w);
        next.push(sep);
        next.extend_from_slice(&w);
        w = next;
    }
    w
}

/// The shortest palindromic Zimin word of degree k: `P_1 = 1`,
/// `P_k = P_{k−1} · σ_k · P_{k−1}`; length 2^k − 1.
pub fn pal_zimin_word(k: usize) -> CanonicalText {
    assert!(k >= 1, "degree starts at 1");
    CanonicalText::new(Text::new(zimin_symbols(k))).expect("ascending first occurrences")
}

/// The shortest string whose array forces k distinct symbols:
/// `σ_{k−1} · P_{k−2} · σ_k`, canonically relabeled; length 2^{k−2} + 1.
pub fn tight_example(k: usize) -> CanonicalText {
    assert!(k >= 2, "needs at least two symbols");
    let mut symbols = vec![Symbol::new((k - 1) as u32).expect("positive id")];
    symbols.extend(zimin_symbols(k - 2));
    symbols.push(Symbol::new(k as u32).expect("positive id"));
    crate::text::canonicalize(&Text::new(symbols))
}

/// Minimal length of a Manacher array (in string characters) that cannot be
/// realized over fewer than k symbols: 1 for k = 1, else 2^{k−2} + 1.
pub fn alpha(k: usize) -> u64 {
    assert!(k >= 1, "alphabet sizes start at 1");
    if k == 1 {
        1
    } else {
        assert!(k - 2 < 64, "alpha({k}) exceeds u64");
        (1u64 << (k - 2)) + 1
    }
}

/// Matches w against the degree-k pattern: nested `t·p·t` with all chosen
/// inner palindromes nonempty and pairwise distinct across levels.
fn match_zp(w: &[Symbol], k: usize, banned: &mut Vec<Vec<Symbol>>) -> bool {
    if w.is_empty() {
        return false;
    }
    if k == 1 {
        return is_palindrome(w) && !banned.iter().any(|b| b.as_slice() == w);
    }
    let len = w.len();
    for tl in 1..=(len.saturating_sub(1)) / 2 {
        if w[..tl] != w[len - tl..] {
            continue;
        }
        let p = &w[tl..len - tl];
        if !is_palindrome(p) || banned.iter().any(|b| b.as_slice() == p) {
            continue;
        }
        banned.push(p.to_vec());
        let ok = match_zp(&w[..tl], k - 1, banned);
        banned.pop();
        if ok {
            return true;
        }
    }
    false
}

/// True iff some suffix of `s` is a palindromic Zimin word of degree `k`.
/// Degree 1 asks for any nonempty palindromic suffix.
pub fn has_pal_zimin_suffix(s: &Text, k: usize) -> bool {
    assert!(k >= 1, "degree starts at 1");
    let syms = s.symbols();
    let min_len = match 1usize.checked_shl(k as u32) {
        Some(v) => v - 1,
        None => return false,
    };
    if syms.len() < min_len {
        return false;
    }
    (0..=syms.len() - min_len)
        .any(|start| match_zp(&syms[start..], k, &mut Vec::new()))
}

/// Largest degree k with a palindromic Zimin suffix; 0 for the empty text.
pub fn pal_zimin_suffix_degree(s: &Text) -> usize {
    let mut k = 0;
    while has_pal_zimin_suffix(s, k + 1) {
        k += 1;
    }
    k
}

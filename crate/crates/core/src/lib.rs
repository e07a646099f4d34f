//! Manacher arrays end to end: compute them, convert them to palindromic
//! fingerprints, encode them in O(n) bits, reconstruct strings from them
//! (minimal or exact-k alphabets) through restriction-graph coloring, relate
//! them to rooted tandem duplication trees through counter arrays, and count
//! everything exhaustively at desk scale.
//!
//! ```
//! use palcomb::{compute_manacher, reconstruct_minimal, Text};
//!
//! let s: Text = "41213121566757".parse()?;
//! let arr = compute_manacher(&s);
//! let rec = reconstruct_minimal(&arr)?;
//! assert_eq!(rec.text.to_string(), "12324232511232");
//! assert_eq!(rec.alphabet_size, 5);
//! # Ok::<(), palcomb::Error>(())
//! ```
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

pub mod census;
pub mod codec;
#[cfg(test)]
pub(crate) mod testutil;
pub mod error;
pub mod fingerprint;
pub mod graph;
pub mod manacher;
pub mod reconstruct;
pub mod text;
pub mod trees;

pub use census::{census_csv, census_table, enumerate_rho, unrealizable_counters, Census, CensusRow};
pub use codec::{
    compact_to_counter, compact_to_manacher, counter_to_compact, decode_bits, delta_array,
    encode_bits, is_realizable_counter, CompactBits, CompactEnvelope, CounterArray, DeltaArray,
};
pub use error::{Error, Result};
pub use fingerprint::{
    array_to_fingerprint, fingerprint_of, fingerprint_to_array, PalindromicFingerprint,
};
pub use graph::{
    build_restriction_graph, coloring_to_text, equality_classes, expand_coloring,
    greedy_min_coloring, text_to_coloring, to_dot, Coloring, EqualityClasses, RestrictionGraph,
};
pub use manacher::{
    compute_manacher, naive_manacher, palindromic_suffixes, periodic_palindrome_decomposition,
    suffix_palindrome_centers, validate_array, validate_radii, ManacherArray,
    PalindromicDecomposition,
};
pub use reconstruct::{
    alpha, has_pal_zimin_suffix, min_alphabet_size, pal_zimin_suffix_degree, pal_zimin_word,
    reconstruct_minimal, reconstruct_with_k, tight_example, ReconstructionResult,
};
pub use text::{canonicalize, CanonicalText, Symbol, Text};
pub use trees::{
    decode_counter, decompose, encode_events, r_count, replay, sample_uniform_counter,
    sigma_count, DupTree, DuplicationEvent, DuplicationHistory, GrowingTree, TreeSpec,
};

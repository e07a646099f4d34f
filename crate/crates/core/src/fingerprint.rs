//! The palindromic fingerprint: the set of all 2n−1 maximal palindromes,
//! one per center, with empty palindromes stored explicitly as `(i, i−1)`.
//! Informationally equivalent to the Manacher array.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::manacher::{compute_manacher, radius_bound, ManacherArray};
use crate::text::Text;

/// All maximal palindromes `(i, j)` of a string, 1-based inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFingerprint", into = "RawFingerprint")]
pub struct PalindromicFingerprint {
    n: usize,
    palindromes: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawFingerprint {
    n: usize,
    palindromes: Vec<(usize, usize)>,
}

impl From<PalindromicFingerprint> for RawFingerprint {
    fn from(f: PalindromicFingerprint) -> RawFingerprint {
        RawFingerprint {
            n: f.n,
            palindromes: f.palindromes.into_iter().collect(),
        }
    }
}

impl TryFrom<RawFingerprint> for PalindromicFingerprint {
    type Error = Error;
    fn try_from(raw: RawFingerprint) -> Result<Self> {
        PalindromicFingerprint::new(raw.n, raw.palindromes)
    }
}

impl PalindromicFingerprint {
    /// Validates one entry per center with in-range radii.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let expected = if n == 0 { 0 } else { 2 * n - 1 };
        if pairs.len() != expected {
            return Err(Error::BadFingerprint(format!(
                "{} entries for length {n} (want {expected})",
                pairs.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(i, j) in &pairs {
            if j + 1 < i || i == 0 || j > n {
                return Err(Error::BadFingerprint(format!("pair ({i},{j}) out of range")));
            }
            let dc = i + j; // doubled center
            if dc < 2 || dc > 2 * n {
                return Err(Error::BadFingerprint(format!(
                    "pair ({i},{j}) has no valid center"
                )));
            }
            if seen[dc] {
                return Err(Error::BadFingerprint(format!(
                    "duplicate center {}",
                    (dc as f64) / 2.0
                )));
            }
            seen[dc] = true;
            let idx = dc - 1;
            let radius = j - dc / 2;
            let bound = radius_bound(idx, n);
            if radius > bound {
                return Err(Error::BadFingerprint(format!(
                    "pair ({i},{j}) exceeds radius bound {bound}"
                )));
            }
        }
        // every center present follows from the count and no duplicates
        Ok(PalindromicFingerprint {
            n,
            palindromes: pairs.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.palindromes.iter()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.palindromes.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.palindromes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.palindromes.is_empty()
    }

    /// Entries of length ≥ 2; the trivial palindromes are implied by the gaps.
    pub fn nontrivial(&self) -> Vec<(usize, usize)> {
        self.palindromes
            .iter()
            .copied()
            .filter(|&(i, j)| j >= i + 1)
            .collect()
    }
}

/// Expands each center/radius pair into its palindrome interval: odd center
/// `k` radius `r` becomes `(k−r, k+r)`, even center between `k` and `k+1`
/// becomes `(k−r+1, k+r)`.
pub fn array_to_fingerprint(a: &ManacherArray) -> PalindromicFingerprint {
    let n = a.n();
    let mut palindromes = BTreeSet::new();
    for (i, &r) in a.radii().iter().enumerate() {
        let dc = i + 2; // doubled center of array index i+1
        let j = dc / 2 + r;
        palindromes.insert((dc - j, j));
    }
    PalindromicFingerprint { n, palindromes }
}

/// Exact inverse of [`array_to_fingerprint`]; the fingerprint invariants
/// guarantee one in-range entry per center.
pub fn fingerprint_to_array(f: &PalindromicFingerprint) -> ManacherArray {
    let n = f.n;
    let mut radii = vec![0usize; if n == 0 { 0 } else { 2 * n - 1 }];
    for &(i, j) in f.iter() {
        let dc = i + j;
        radii[dc - 2] = j - dc / 2;
    }
    ManacherArray::from_radii(radii).expect("validated fingerprint converts")
}

/// Fingerprint of a text, via its Manacher array.
pub fn fingerprint_of(s: &Text) -> PalindromicFingerprint {
    array_to_fingerprint(&compute_manacher(s))
}

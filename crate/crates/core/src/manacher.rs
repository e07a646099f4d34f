//! Manacher arrays and the palindromic suffix machinery built on them.
//!
//! The array layout is 1-based over 2n−1 centers: entry `2k−1` holds the
//! radius of the maximal palindrome centered at character `k`, entry `2k`
//! the radius of the maximal palindrome centered between characters `k` and
//! `k+1`.  Centers are manipulated as doubled integers (`2c`) so half-integer
//! centers never touch fractional arithmetic; the doubled center of array
//! index `i` is `i + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{is_palindrome, Text};

/// Radii of all 2n−1 maximal palindromes of a length-n string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct ManacherArray {
    n: usize,
    radii: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawArray {
    n: usize,
    radii: Vec<usize>,
}

impl From<ManacherArray> for RawArray {
    fn from(a: ManacherArray) -> RawArray {
        RawArray {
            n: a.n,
            radii: a.radii,
        }
    }
}

impl TryFrom<RawArray> for ManacherArray {
    type Error = Error;
    fn try_from(raw: RawArray) -> Result<Self> {
        ManacherArray::from_parts(raw.n, raw.radii)
    }
}

/// Largest admissible radius at 1-based array index `idx` for string length
/// `n`: `min(k−1, n−k)` at odd indices `2k−1`, `min(k, n−k)` at even `2k`.
pub(crate) fn radius_bound(idx: usize, n: usize) -> usize {
    if idx % 2 == 1 {
        let k = (idx + 1) / 2;
        (k - 1).min(n - k)
    } else {
        let k = idx / 2;
        k.min(n - k)
    }
}

impl ManacherArray {
    /// Builds an array from raw radii, deriving n from the length.
    pub fn from_radii(radii: Vec<usize>) -> Result<Self> {
        let len = radii.len();
        if len % 2 == 0 && len != 0 {
            return Err(Error::BadRadiiLength(len));
        }
        let n = (len + 1) / 2;
        for (i, &r) in radii.iter().enumerate() {
            let idx = i + 1;
            let bound = radius_bound(idx, n);
            if r > bound {
                return Err(Error::RadiusBound {
                    index: idx,
                    radius: r,
                    bound,
                });
            }
        }
        Ok(ManacherArray { n, radii })
    }

    /// As [`from_radii`](Self::from_radii), but also checks a caller-supplied n.
    pub fn from_parts(n: usize, radii: Vec<usize>) -> Result<Self> {
        let expected = if n == 0 { 0 } else { 2 * n - 1 };
        if radii.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                len: radii.len(),
            });
        }
        Self::from_radii(radii)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn radii(&self) -> &[usize] {
        &self.radii
    }

    /// Radius at doubled center `dc` (valid range `2..=2n`).
    pub fn radius_at(&self, dc: usize) -> usize {
        self.radii[dc - 2]
    }

    /// True iff some string realizes this array; decided operationally by
    /// reconstructing and recomputing.
    pub fn is_realizable(&self) -> bool {
        crate::reconstruct::reconstruct_minimal(self).is_ok()
    }
}

/// Linear-time radii over any comparable slice.  Works on the interleaved
/// view (character, gap, character, …) so odd and even centers share one
/// pass; gap positions compare equal to each other and never to characters
/// because mirror partners always have equal parity.
pub(crate) fn manacher_radii_into<T: Eq>(s: &[T], out: &mut Vec<usize>) {
    out.clear();
    let n = s.len();
    if n == 0 {
        return;
    }
    let m = 2 * n - 1;
    out.resize(m, 0);
    let eq = |p: usize, q: usize| -> bool { p % 2 == 1 || s[p / 2] == s[q / 2] };
    let (mut c, mut rt) = (0usize, 0usize);
    for i in 0..m {
        let mut r = if i < rt {
            out[2 * c - i].min(rt - i)
        } else {
            0
        };
        while r + 1 <= i && i + r + 1 < m && eq(i - r - 1, i + r + 1) {
            r += 1;
        }
        out[i] = r;
        if i + r > rt {
            c = i;
            rt = i + r;
        }
    }
    // interleaved radii -> character radii
    for (p, v) in out.iter_mut().enumerate() {
        *v = if p % 2 == 0 { *v / 2 } else { (*v + 1) / 2 };
    }
}

pub(crate) fn manacher_radii<T: Eq>(s: &[T]) -> Vec<usize> {
    let mut out = Vec::new();
    manacher_radii_into(s, &mut out);
    out
}

/// Quadratic oracle: expand around every center.
pub(crate) fn naive_radii<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(2 * n - 1);
    for idx in 1..2 * n {
        let mut r = 0usize;
        if idx % 2 == 1 {
            let k = (idx + 1) / 2;
            while k > r + 1 && k + r + 1 <= n && s[k - r - 2] == s[k + r] {
                r += 1;
            }
        } else {
            let k = idx / 2;
            while k > r && k + r + 1 <= n && s[k - r - 1] == s[k + r] {
                r += 1;
            }
        }
        out.push(r);
    }
    out
}

/// Manacher's linear-time algorithm.
pub fn compute_manacher(s: &Text) -> ManacherArray {
    let radii = manacher_radii(s.symbols());
    ManacherArray {
        n: s.len(),
        radii,
    }
}

/// O(n²) differential-testing oracle with the same output contract as
/// [`compute_manacher`].
pub fn naive_manacher(s: &Text) -> ManacherArray {
    ManacherArray {
        n: s.len(),
        radii: naive_radii(s.symbols()),
    }
}

/// Visits `(i, 2·c_i)` for every prefix length i, where `c_i` is the center
/// of the longest palindromic suffix of `s[1..i]`.  The centers are
/// non-decreasing, so the scan resumes from the previous one.
pub(crate) fn for_each_suffix_center(
    radii: &[usize],
    n: usize,
    mut f: impl FnMut(usize, usize),
) {
    let mut dc = 2usize;
    for i in 1..=n {
        if dc < i + 1 {
            dc = i + 1;
        }
        // suffix [l..i] with doubled center dc is a palindrome iff the
        // maximal radius at dc reaches i, i.e. radius >= i - floor(dc/2)
        while radii[dc - 2] < i - dc / 2 {
            dc += 1;
            debug_assert!(dc <= 2 * i);
        }
        f(i, dc);
    }
}

pub(crate) fn suffix_centers_doubled(radii: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    for_each_suffix_center(radii, n, |_, dc| out.push(dc));
    out
}

/// Centers of the longest palindromic suffix of every prefix, in doubled
/// (2c) units.
pub fn suffix_palindrome_centers(s: &Text) -> Vec<usize> {
    let radii = manacher_radii(s.symbols());
    suffix_centers_doubled(&radii, s.len())
}

/// All lengths ℓ such that the length-ℓ suffix of `p` is a palindrome
/// (including ℓ = 0 and ℓ = n).  For 0 < ℓ < n these are exactly the
/// complements of the periods of `p`.
pub fn palindromic_suffixes(p: &Text) -> Result<Vec<usize>> {
    if !p.is_palindrome() {
        return Err(Error::NotPalindrome);
    }
    let s = p.symbols();
    let n = s.len();
    let mut out: Vec<usize> = (0..=n)
        .filter(|&l| is_palindrome(&s[n - l..]))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The structure `(q0·q1)^reps · q0` of a periodic palindrome; `q0` and `q1`
/// are themselves palindromes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromicDecomposition {
    pub q0: Text,
    pub q1: Text,
    pub reps: usize,
}

impl PalindromicDecomposition {
    pub fn reassemble(&self) -> Text {
        let mut symbols = Vec::new();
        for _ in 0..self.reps {
            symbols.extend_from_slice(self.q0.symbols());
            symbols.extend_from_slice(self.q1.symbols());
        }
        symbols.extend_from_slice(self.q0.symbols());
        Text::new(symbols)
    }
}

/// Splits a periodic palindrome along its minimal period into
/// `(q0·q1)^i · q0` with `i >= 2` and palindromic `q0`, `q1`.
pub fn periodic_palindrome_decomposition(p: &Text) -> Result<PalindromicDecomposition> {
    if !p.is_palindrome() {
        return Err(Error::NotPalindrome);
    }
    let s = p.symbols();
    let n = s.len();
    let period = (1..=n / 2)
        .find(|&q| (0..n - q).all(|i| s[i] == s[i + q]))
        .ok_or(Error::NotPeriodic)?;
    let rem = n % period;
    let q0 = Text::new(s[..rem].to_vec());
    let q1 = Text::new(s[rem..period].to_vec());
    let reps = n / period;
    debug_assert!(q0.is_palindrome() && q1.is_palindrome() && reps >= 2);
    Ok(PalindromicDecomposition { q0, q1, reps })
}

/// True iff some string realizes the array.  Decided by reconstruction plus
/// recomputation; there is no standalone validity predicate.
pub fn validate_array(a: &ManacherArray) -> bool {
    a.is_realizable()
}

/// As [`validate_array`] but for raw radii; structural violations return
/// false instead of failing construction.
pub fn validate_radii(radii: &[usize]) -> bool {
    match ManacherArray::from_radii(radii.to_vec()) {
        Ok(a) => a.is_realizable(),
        Err(_) => false,
    }
}

//! The O(n)-bit compact representation of a Manacher array and its
//! equivalence with counter arrays.
//!
//! For each prefix length i let `c_i` be the center of its longest
//! palindromic suffix.  The deltas `b_1 = 2`, `b_i = 2(c_i − c_{i−1})` are
//! non-negative, their prefix sums are the doubled centers `2c_i`, and the
//! whole sequence unary-codes into at most 3n−1 bits.  The full array is
//! recovered incrementally: each new maximal suffix palindrome fixes its own
//! radius and mirrors every center to its right.

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::manacher::{manacher_radii, suffix_centers_doubled, ManacherArray};
use crate::text::Text;

/// Doubled-center deltas of the maximal palindromic suffixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaArray {
    b: Vec<usize>,
}

impl DeltaArray {
    /// Validates `b[1] = 2` and the prefix-sum window `i+1 ≤ Σb ≤ 2i`.
    pub fn new(b: Vec<usize>) -> Result<Self> {
        if let Some(&first) = b.first() {
            if first != 2 {
                return Err(Error::BadDelta(format!("b[1] = {first}, want 2")));
            }
        }
        let mut sum = 0usize;
        for (i0, &v) in b.iter().enumerate() {
            let i = i0 + 1;
            sum += v;
            if sum < i + 1 || sum > 2 * i {
                return Err(Error::BadDelta(format!(
                    "prefix sum {sum} at {i} outside [{}, {}]",
                    i + 1,
                    2 * i
                )));
            }
        }
        Ok(DeltaArray { b })
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Doubled centers, i.e. the prefix sums of `b`.
    pub fn doubled_centers(&self) -> Vec<usize> {
        self.b
            .iter()
            .scan(0usize, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }
}

/// Deltas of a text's suffix-palindrome centers.
pub fn delta_array(s: &Text) -> DeltaArray {
    let radii = manacher_radii(s.symbols());
    let dcs = suffix_centers_doubled(&radii, s.len());
    DeltaArray::new(deltas_of(&dcs)).expect("suffix centers satisfy the window")
}

pub(crate) fn deltas_of(dcs: &[usize]) -> Vec<usize> {
    let mut b = Vec::with_capacity(dcs.len());
    let mut prev = 0;
    for &dc in dcs {
        b.push(dc - prev);
        prev = dc;
    }
    b
}

/// An MSB-first packed bit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactBits {
    bit_len: usize,
    bytes: Vec<u8>,
}

impl CompactBits {
    pub fn new(bit_len: usize, bytes: Vec<u8>) -> Result<Self> {
        if bytes.len() != bit_len.div_ceil(8) {
            return Err(Error::BadBits(format!(
                "{} bytes cannot hold exactly {bit_len} bits",
                bytes.len()
            )));
        }
        if bit_len % 8 != 0 {
            let tail = bytes[bytes.len() - 1] & (0xffu8 >> (bit_len % 8));
            if tail != 0 {
                return Err(Error::BadBits("padding bits must be zero".into()));
            }
        }
        Ok(CompactBits { bit_len, bytes })
    }

    pub fn bit_len(&self) -> usize {
        self.bit_len
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bytes[i / 8] & (0x80 >> (i % 8)) != 0
    }

    fn push(bytes: &mut Vec<u8>, bit_len: &mut usize, bit: bool) {
        if *bit_len % 8 == 0 {
            bytes.push(0);
        }
        if bit {
            *bytes.last_mut().unwrap() |= 0x80 >> (*bit_len % 8);
        }
        *bit_len += 1;
    }
}

/// Unary coding: `b[i]` one-bits per entry, entries separated by single
/// zeros, no trailing zero.  At most 2n ones and n−1 zeros: ≤ 3n−1 bits.
pub fn encode_bits(d: &DeltaArray) -> CompactBits {
    let mut bytes = Vec::new();
    let mut bit_len = 0usize;
    for (i, &v) in d.b().iter().enumerate() {
        if i > 0 {
            CompactBits::push(&mut bytes, &mut bit_len, false);
        }
        for _ in 0..v {
            CompactBits::push(&mut bytes, &mut bit_len, true);
        }
    }
    debug_assert!(d.n() == 0 || bit_len <= 3 * d.n() - 1);
    CompactBits { bit_len, bytes }
}

/// Exact inverse of [`encode_bits`]; the stream must contain exactly n−1
/// zeros and decode to a valid delta array.
pub fn decode_bits(bits: &CompactBits, n: usize) -> Result<DeltaArray> {
    let mut b = Vec::with_capacity(n);
    let mut run = 0usize;
    let mut zeros = 0usize;
    for i in 0..bits.bit_len() {
        if bits.bit(i) {
            run += 1;
        } else {
            zeros += 1;
            b.push(run);
            run = 0;
        }
    }
    if n == 0 {
        if bits.bit_len() != 0 {
            return Err(Error::BadBits("nonempty stream for n = 0".into()));
        }
        return DeltaArray::new(Vec::new());
    }
    b.push(run);
    if zeros != n - 1 {
        return Err(Error::BadBits(format!("{zeros} zeros, want {}", n - 1)));
    }
    DeltaArray::new(b)
}

/// The JSON file envelope `{"n", "bit_len", "bits"}` with base64 payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEnvelope", into = "RawEnvelope")]
pub struct CompactEnvelope {
    pub n: usize,
    pub bits: CompactBits,
}

#[derive(Serialize, Deserialize)]
struct RawEnvelope {
    n: usize,
    bit_len: usize,
    bits: String,
}

impl From<CompactEnvelope> for RawEnvelope {
    fn from(e: CompactEnvelope) -> RawEnvelope {
        RawEnvelope {
            n: e.n,
            bit_len: e.bits.bit_len(),
            bits: BASE64.encode(e.bits.bytes()),
        }
    }
}

impl TryFrom<RawEnvelope> for CompactEnvelope {
    type Error = Error;
    fn try_from(raw: RawEnvelope) -> Result<Self> {
        let bytes = BASE64
            .decode(raw.bits.as_bytes())
            .map_err(|e| Error::BadBits(format!("base64: {e}")))?;
        Ok(CompactEnvelope {
            n: raw.n,
            bits: CompactBits::new(raw.bit_len, bytes)?,
        })
    }
}

impl CompactEnvelope {
    pub fn encode_text(s: &Text) -> Self {
        CompactEnvelope {
            n: s.len(),
            bits: encode_bits(&delta_array(s)),
        }
    }

    /// Builds an envelope from its raw file fields.
    pub fn from_base64(n: usize, bit_len: usize, bits: &str) -> Result<Self> {
        RawEnvelope {
            n,
            bit_len,
            bits: bits.to_string(),
        }
        .try_into()
    }

    pub fn decode(&self) -> Result<ManacherArray> {
        compact_to_manacher(&decode_bits(&self.bits, self.n)?)
    }
}

/// Incremental decoder back to the full array.  For each prefix length m the
/// new suffix-palindrome center `c_m` gets radius ⌈m − c_m⌉ and every center
/// right of it mirrors: `radius(c) = min(⌈m − c⌉, radius(2c_m − c))`, for
/// half-integer centers as well as integer ones.
pub fn compact_to_manacher(d: &DeltaArray) -> Result<ManacherArray> {
    let n = d.n();
    let mut radii: Vec<usize> = Vec::with_capacity(2 * n.saturating_sub(1));
    let mut dc_m = 0usize;
    for (i, &bv) in d.b().iter().enumerate() {
        let m = i + 1;
        radii.push(0);
        if m > 1 {
            radii.push(0);
        }
        dc_m += bv;
        // ceil(m - dc/2) in doubled units
        let boundary = |dc: usize| (2 * m - dc + (dc & 1)) / 2;
        radii[dc_m - 2] = boundary(dc_m);
        for dc in dc_m + 1..=2 * m {
            let mirror = 2 * dc_m - dc;
            if mirror < 2 {
                return Err(Error::Unrealizable(format!(
                    "mirror of center {dc} undefined at prefix {m}"
                )));
            }
            radii[dc - 2] = boundary(dc).min(radii[mirror - 2]);
        }
    }
    ManacherArray::from_radii(radii)
}

/// Counter arrays: `1 ≤ a_i ≤ i` and `a_{i+1} ≥ a_i − 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCounter", into = "RawCounter")]
pub struct CounterArray {
    a: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawCounter {
    n: usize,
    a: Vec<usize>,
}

impl From<CounterArray> for RawCounter {
    fn from(c: CounterArray) -> RawCounter {
        RawCounter {
            n: c.a.len(),
            a: c.a,
        }
    }
}

impl TryFrom<RawCounter> for CounterArray {
    type Error = Error;
    fn try_from(raw: RawCounter) -> Result<Self> {
        if raw.n != raw.a.len() {
            return Err(Error::BadCounter(format!(
                "length field {} does not match {} entries",
                raw.n,
                raw.a.len()
            )));
        }
        CounterArray::new(raw.a)
    }
}

impl CounterArray {
    pub fn new(a: Vec<usize>) -> Result<Self> {
        for (i0, &v) in a.iter().enumerate() {
            let i = i0 + 1;
            if v < 1 || v > i {
                return Err(Error::BadCounter(format!("a[{i}] = {v} outside [1, {i}]")));
            }
            if i0 > 0 && v + 1 < a[i0 - 1] {
                return Err(Error::BadCounter(format!(
                    "a[{i}] = {v} drops more than 1 below {}",
                    a[i0 - 1]
                )));
            }
        }
        Ok(CounterArray { a })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.a
    }
}

/// `a_i = Σ_{j≤i} b_j − i = 2c_i − i`; always a valid counter array.
pub fn compact_to_counter(d: &DeltaArray) -> CounterArray {
    let a = d
        .doubled_centers()
        .iter()
        .enumerate()
        .map(|(i, &dc)| dc - (i + 1))
        .collect();
    CounterArray::new(a).expect("delta window implies counter bounds")
}

/// Exact inverse of [`compact_to_counter`]: `b_i = (a_i + i) − (a_{i−1} + i − 1)`.
pub fn counter_to_compact(c: &CounterArray) -> DeltaArray {
    let dcs: Vec<usize> = c
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| v + i + 1)
        .collect();
    DeltaArray::new(deltas_of(&dcs)).expect("counter bounds imply delta window")
}

/// True iff the counter array decodes to a realizable Manacher array.  The
/// representation is not tight, so some valid counter arrays fail here.
pub fn is_realizable_counter(c: &CounterArray) -> bool {
    match compact_to_manacher(&counter_to_compact(c)) {
        Ok(a) => a.is_realizable(),
        Err(_) => false,
    }
}

/// Per-string codec self-check used by the census sweeps; returns the bit
/// length.  Checks decode∘encode identity, the 3n−1 space bound, the
/// incremental decode against the true array, and the counter equivalence.
pub(crate) fn verify_codec_for_radii(radii: &[usize], n: usize) -> Result<usize> {
    let dcs = suffix_centers_doubled(radii, n);
    let d = DeltaArray::new(deltas_of(&dcs))?;
    let bits = encode_bits(&d);
    if n > 0 && bits.bit_len() > 3 * n - 1 {
        return Err(Error::BadBits(format!(
            "{} bits exceeds 3n-1 = {}",
            bits.bit_len(),
            3 * n - 1
        )));
    }
    if decode_bits(&bits, n)? != d {
        return Err(Error::BadBits("unary roundtrip mismatch".into()));
    }
    let decoded = compact_to_manacher(&d)?;
    if decoded.radii() != radii {
        return Err(Error::Unrealizable("incremental decode mismatch".into()));
    }
    let counter = compact_to_counter(&d);
    if counter_to_compact(&counter) != d {
        return Err(Error::BadCounter("counter roundtrip mismatch".into()));
    }
    Ok(bits.bit_len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manacher::compute_manacher;

    fn t(s: &str) -> Text {
        s.parse().unwrap()
    }

    fn bits_string(b: &CompactBits) -> String {
        (0..b.bit_len())
            .map(|i| if b.bit(i) { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_array(&t("11")).b(), &[2, 1]);
        assert_eq!(delta_array(&t("12")).b(), &[2, 2]);
        assert_eq!(delta_array(&t("121")).b(), &[2, 2, 0]);
        assert_eq!(delta_array(&t("")).b(), &[] as &[usize]);
    }

    #[test]
    fn delta_validation() {
        assert!(DeltaArray::new(vec![2, 1]).is_ok());
        assert!(DeltaArray::new(vec![1]).is_err()); // b[1] must be 2
        assert!(DeltaArray::new(vec![2, 3]).is_err()); // sum 5 > 4
        assert!(DeltaArray::new(vec![2, 0]).is_err()); // sum 2 < 3
    }

    #[test]
    fn encode_examples() {
        let b = encode_bits(&DeltaArray::new(vec![2, 1]).unwrap());
        assert_eq!((bits_string(&b), b.bit_len()), ("1101".into(), 4));
        let b = encode_bits(&DeltaArray::new(vec![2, 2, 0]).unwrap());
        assert_eq!((bits_string(&b), b.bit_len()), ("110110".into(), 6));
        let b = encode_bits(&DeltaArray::new(vec![2]).unwrap());
        assert_eq!((bits_string(&b), b.bit_len()), ("11".into(), 2));
    }

    #[test]
    fn decode_examples() {
        for d in [vec![2, 1], vec![2, 2, 0], vec![2]] {
            let d = DeltaArray::new(d).unwrap();
            assert_eq!(decode_bits(&encode_bits(&d), d.n()).unwrap(), d);
        }
        // wrong zero count
        let b = encode_bits(&DeltaArray::new(vec![2, 1]).unwrap());
        assert!(decode_bits(&b, 3).is_err());
        assert!(decode_bits(&b, 1).is_err());
    }

    #[test]
    fn incremental_decode_examples() {
        let d = DeltaArray::new(vec![2, 1]).unwrap();
        assert_eq!(compact_to_manacher(&d).unwrap().radii(), &[0, 1, 0]);
        let d = DeltaArray::new(vec![2, 2, 0]).unwrap();
        assert_eq!(compact_to_manacher(&d).unwrap().radii(), &[0, 0, 1, 0, 0]);
    }

    #[test]
    fn decode_matches_compute_exhaustive() {
        use crate::testutil::rgs;
        for n in 0..=12 {
            for ids in rgs(n, 5.min(n.max(1))) {
                let text = Text::from_ids(&ids).unwrap();
                let a = compute_manacher(&text);
                assert_eq!(compact_to_manacher(&delta_array(&text)).unwrap(), a);
                assert!(verify_codec_for_radii(a.radii(), n).is_ok(), "{text}");
            }
        }
    }

    #[test]
    fn counter_examples() {
        let c = compact_to_counter(&DeltaArray::new(vec![2, 1]).unwrap());
        assert_eq!(c.values(), &[1, 1]);
        let c = compact_to_counter(&DeltaArray::new(vec![2, 2]).unwrap());
        assert_eq!(c.values(), &[1, 2]);
        let c = compact_to_counter(&DeltaArray::new(vec![2, 2, 0]).unwrap());
        assert_eq!(c.values(), &[1, 2, 1]);
        for b in [vec![2, 1], vec![2, 2], vec![2, 2, 0]] {
            let d = DeltaArray::new(b).unwrap();
            assert_eq!(counter_to_compact(&compact_to_counter(&d)), d);
        }
    }

    #[test]
    fn counter_validation() {
        assert!(CounterArray::new(vec![1, 2, 1]).is_ok());
        assert!(CounterArray::new(vec![2]).is_err()); // a[1] > 1
        assert!(CounterArray::new(vec![1, 0]).is_err()); // below 1
        assert!(CounterArray::new(vec![1, 2, 3, 1]).is_err()); // drop of 2
    }

    #[test]
    fn realizability_examples() {
        assert!(is_realizable_counter(&CounterArray::new(vec![1, 2, 1]).unwrap()));
        assert!(!is_realizable_counter(&CounterArray::new(vec![1, 1, 2]).unwrap()));
        assert!(is_realizable_counter(&CounterArray::new(vec![1, 1]).unwrap()));
    }

    #[test]
    fn envelope_roundtrip() {
        let env = CompactEnvelope::encode_text(&t("41213121566757"));
        let js = serde_json::to_string(&env).unwrap();
        let back: CompactEnvelope = serde_json::from_str(&js).unwrap();
        assert_eq!(back, env);
        assert_eq!(
            back.decode().unwrap(),
            compute_manacher(&t("41213121566757"))
        );
        assert!(serde_json::from_str::<CompactEnvelope>(
            r#"{"n":2,"bit_len":4,"bits":"!!"}"#
        )
        .is_err());
    }

    #[test]
    fn bits_padding_checked() {
        assert!(CompactBits::new(4, vec![0b1101_0000]).is_ok());
        assert!(CompactBits::new(4, vec![0b1101_1000]).is_err());
        assert!(CompactBits::new(4, vec![0, 0]).is_err());
    }

    proptest::proptest! {
        #[test]
        fn envelope_roundtrip_random(ids in proptest::collection::vec(1u32..=3, 0..40)) {
            let text = Text::from_ids(&ids).unwrap();
            let env = CompactEnvelope::encode_text(&text);
            proptest::prop_assert!(env.bits.bit_len() <= 3 * ids.len().max(1) - 1);
            proptest::prop_assert_eq!(env.decode().unwrap(), compute_manacher(&text));
        }
    }
}

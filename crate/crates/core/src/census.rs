//! Exhaustive desk-scale census: enumerate distinct Manacher arrays over
//! canonical strings, compare the counts with counter arrays and rooted
//! duplication trees, and locate the counter arrays no string realizes.
//!
//! Enumeration walks restricted-growth strings directly, so each
//! symbol-permutation class is visited once.  Deduplication keys are the
//! counter arrays obtained through the compact codec, which exercises the
//! codec on every string.  The string space is sharded by fixed-length
//! prefixes across worker threads; merging is a set union, so counts do not
//! depend on scheduling.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::codec::{is_realizable_counter, verify_codec_for_radii, CounterArray};
use crate::error::{Error, Result};
use crate::manacher::{for_each_suffix_center, manacher_radii_into, ManacherArray};
use crate::trees::{r_count, sigma_count};

/// Default cap on exhaustive enumeration (minutes-scale).
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 12;

/// Packing counter values into a u128 key allows 5 bits per entry.
const HARD_LIMIT: usize = 25;

/// Environment variable capping census worker threads.
pub const WORKERS_ENV: &str = "PALCOMB_CENSUS_WORKERS";

pub fn default_workers() -> usize {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        if let Ok(k) = v.trim().parse::<usize>() {
            return k.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

/// Alphabet size sufficient to realize every Manacher array of length n:
/// the minimal-reconstruction bound ⌊log₂(n−1)⌋ + 2, capped at n.
pub fn enumeration_alphabet(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        n.min((n - 1).ilog2() as usize + 2)
    }
}

/// One row of the census table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub rho: u64,
    pub sigma: BigUint,
    pub r_next: BigUint,
    pub ternary_lower: u64,
}

impl Serialize for CensusRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            n: usize,
            rho: u64,
            sigma: &'a str,
            r_next: &'a str,
            ternary_lower: u64,
        }
        Raw {
            n: self.n,
            rho: self.rho,
            sigma: &self.sigma.to_string(),
            r_next: &self.r_next.to_string(),
            ternary_lower: self.ternary_lower,
        }
        .serialize(serializer)
    }
}

/// CSV rendering with the header `n,rho,sigma,r_next,ternary_lower`.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("n,rho,sigma,r_next,ternary_lower\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.n, r.rho, r.sigma, r.r_next, r.ternary_lower
        );
    }
    out
}

/// Statistics from a codec verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodecReport {
    pub strings: u64,
    pub max_bit_len: usize,
}

/// Census configuration: the exhaustive limit and the worker count.
#[derive(Debug, Clone)]
pub struct Census {
    pub max_exhaustive: usize,
    pub workers: usize,
}

impl Default for Census {
    fn default() -> Self {
        Census {
            max_exhaustive: DEFAULT_EXHAUSTIVE_LIMIT,
            workers: default_workers(),
        }
    }
}

struct SweepOut {
    keys: Vec<u128>,
    ternary: u64,
    strings: u64,
    max_bit_len: usize,
}

/// Walks all restricted-growth suffixes of `prefix` and feeds each complete
/// string to the callback.
fn walk_rgs(
    prefix: &mut Vec<u8>,
    max: u8,
    n: usize,
    cap: u8,
    f: &mut impl FnMut(&[u8]) -> Result<()>,
) -> Result<()> {
    if prefix.len() == n {
        return f(prefix);
    }
    for v in 1..=(max + 1).min(cap) {
        prefix.push(v);
        walk_rgs(prefix, max.max(v), n, cap, f)?;
        prefix.pop();
    }
    Ok(())
}

fn rgs_prefixes(n: usize, cap: u8, depth: usize) -> Vec<(Vec<u8>, u8)> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(cur: &mut Vec<u8>, max: u8, depth: usize, cap: u8, out: &mut Vec<(Vec<u8>, u8)>) {
        if cur.len() == depth {
            out.push((cur.clone(), max));
            return;
        }
        for v in 1..=(max + 1).min(cap) {
            cur.push(v);
            rec(cur, max.max(v), depth, cap, out);
            cur.pop();
        }
    }
    rec(&mut cur, 0, depth.min(n), cap, &mut out);
    out
}

fn sweep(n: usize, cap: u8, workers: usize, verify_codec: bool) -> Result<SweepOut> {
    let depth = n.min(4);
    let prefixes = rgs_prefixes(n, cap, depth);
    let workers = workers.max(1).min(prefixes.len().max(1));

    let run_shard = |shard: &[(Vec<u8>, u8)]| -> Result<SweepOut> {
        let mut out = SweepOut {
            keys: Vec::new(),
            ternary: 0,
            strings: 0,
            max_bit_len: 0,
        };
        let mut radii: Vec<usize> = Vec::new();
        let mut handle = |s: &[u8]| -> Result<()> {
            manacher_radii_into(s, &mut radii);
            let mut key = 0u128;
            for_each_suffix_center(&radii, n, |i, dc| {
                key |= ((dc - i) as u128) << (5 * (i - 1));
            });
            out.keys.push(key);
            out.strings += 1;
            if s.iter().all(|&v| v <= 3) {
                out.ternary += 1;
            }
            if verify_codec {
                let bits = verify_codec_for_radii(&radii, n)?;
                out.max_bit_len = out.max_bit_len.max(bits);
            }
            Ok(())
        };
        for (prefix, max) in shard {
            let mut buf = prefix.clone();
            walk_rgs(&mut buf, *max, n, cap, &mut handle)?;
        }
        Ok(out)
    };

    let mut merged = if workers <= 1 {
        run_shard(&prefixes)?
    } else {
        let shards: Vec<Vec<(Vec<u8>, u8)>> = {
            let mut shards = vec![Vec::new(); workers];
            for (i, p) in prefixes.into_iter().enumerate() {
                shards[i % workers].push(p);
            }
            shards
        };
        std::thread::scope(|scope| -> Result<SweepOut> {
            let handles: Vec<_> = shards
                .iter()
                .map(|shard| scope.spawn(|| run_shard(shard)))
                .collect();
            let mut acc = SweepOut {
                keys: Vec::new(),
                ternary: 0,
                strings: 0,
                max_bit_len: 0,
            };
            for h in handles {
                let part = h.join().expect("census worker panicked")?;
                acc.keys.extend(part.keys);
                acc.ternary += part.ternary;
                acc.strings += part.strings;
                acc.max_bit_len = acc.max_bit_len.max(part.max_bit_len);
            }
            Ok(acc)
        })?
    };
    merged.keys.sort_unstable();
    merged.keys.dedup();
    Ok(merged)
}

fn unpack_key(key: u128, n: usize) -> CounterArray {
    let a = (0..n)
        .map(|i| ((key >> (5 * i)) & 0x1f) as usize)
        .collect();
    CounterArray::new(a).expect("census keys are counter arrays")
}

impl Census {
    fn check_limit(&self, n: usize) -> Result<()> {
        let limit = self.max_exhaustive.min(HARD_LIMIT);
        if n == 0 || n > limit {
            return Err(Error::CensusLimit { n, limit });
        }
        Ok(())
    }

    /// Number of distinct Manacher arrays of length n.
    pub fn rho(&self, n: usize) -> Result<u64> {
        self.check_limit(n)?;
        let cap = enumeration_alphabet(n) as u8;
        Ok(sweep(n, cap, self.workers, false)?.keys.len() as u64)
    }

    /// The distinct arrays themselves, as their counter-array keys.
    pub fn enumerate_rho_counters(&self, n: usize) -> Result<Vec<CounterArray>> {
        self.check_limit(n)?;
        let cap = enumeration_alphabet(n) as u8;
        let out = sweep(n, cap, self.workers, false)?;
        Ok(out.keys.into_iter().map(|k| unpack_key(k, n)).collect())
    }

    /// The distinct arrays, decoded.  Memory-heavy near the limit; prefer
    /// [`enumerate_rho_counters`](Self::enumerate_rho_counters) above n ≈ 10.
    pub fn enumerate_rho(&self, n: usize) -> Result<Vec<ManacherArray>> {
        Ok(self
            .enumerate_rho_counters(n)?
            .iter()
            .map(|c| {
                crate::codec::compact_to_manacher(&crate::codec::counter_to_compact(c))
                    .expect("census counters decode")
            })
            .collect())
    }

    /// Rows for n = 1..=max_n with the sandwich inequalities checked.
    pub fn table(&self, max_n: usize) -> Result<Vec<CensusRow>> {
        let mut rows = Vec::with_capacity(max_n);
        for n in 1..=max_n {
            self.check_limit(n)?;
            let cap = enumeration_alphabet(n) as u8;
            let out = sweep(n, cap, self.workers, false)?;
            let row = CensusRow {
                n,
                rho: out.keys.len() as u64,
                sigma: sigma_count(n),
                r_next: r_count(n + 1),
                ternary_lower: out.ternary,
            };
            if row.sigma != row.r_next {
                return Err(Error::CensusInvariant(format!(
                    "sigma_{n} = {} differs from r_{} = {}",
                    row.sigma,
                    n + 1,
                    row.r_next
                )));
            }
            if BigUint::from(row.rho) > row.sigma || row.ternary_lower > row.rho {
                return Err(Error::CensusInvariant(format!(
                    "sandwich violated at n = {n}: {} <= {} <= {}",
                    row.ternary_lower, row.rho, row.sigma
                )));
            }
            rows.push(row);
        }
        Ok(rows)
    }

    /// All counter arrays of length n that no string realizes, in
    /// lexicographic order; there are σₙ − ρₙ of them.
    pub fn unrealizable_counters(&self, n: usize) -> Result<Vec<CounterArray>> {
        self.check_limit(n)?;
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        fn rec(cur: &mut Vec<usize>, n: usize, out: &mut Vec<CounterArray>) {
            if cur.len() == n {
                let c = CounterArray::new(cur.clone()).expect("enumeration stays in bounds");
                if !is_realizable_counter(&c) {
                    out.push(c);
                }
                return;
            }
            let i = cur.len();
            let lo = cur.last().map_or(1, |&v| v.saturating_sub(1).max(1));
            for v in lo..=i + 1 {
                cur.push(v);
                rec(cur, n, out);
                cur.pop();
            }
        }
        rec(&mut cur, n, &mut out);
        Ok(out)
    }

    /// Verifies the codec identities on every canonical string of length n:
    /// unary roundtrip, the 3n−1 space bound, incremental decode against the
    /// directly computed array, and the counter equivalence.
    pub fn codec_sweep(&self, n: usize) -> Result<CodecReport> {
        self.check_limit(n)?;
        let cap = enumeration_alphabet(n) as u8;
        let out = sweep(n, cap, self.workers, true)?;
        Ok(CodecReport {
            strings: out.strings,
            max_bit_len: out.max_bit_len,
        })
    }
}

/// Convenience wrapper over [`Census::enumerate_rho`] with defaults.
pub fn enumerate_rho(n: usize) -> Result<Vec<ManacherArray>> {
    Census::default().enumerate_rho(n)
}

/// Convenience wrapper over [`Census::table`] with defaults.
pub fn census_table(max_n: usize) -> Result<Vec<CensusRow>> {
    Census::default().table(max_n)
}

/// Convenience wrapper over [`Census::unrealizable_counters`] with defaults.
pub fn unrealizable_counters(n: usize) -> Result<Vec<CounterArray>> {
    Census::default().unrealizable_counters(n)
}

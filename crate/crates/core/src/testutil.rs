//! Shared helpers for the unit-test modules.

/// All restricted-growth strings of length n over at most `cap` symbols.
pub(crate) fn rgs(n: usize, cap: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, mx: u32, n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=(mx + 1).min(cap) {
            cur[i] = v;
            rec(i + 1, mx.max(v), n, cap, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        let mut cur = vec![1u32; n];
        rec(0, 0, n, cap as u32, &mut cur, &mut out);
    }
    out
}

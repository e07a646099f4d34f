//! Rooted tandem duplication trees: event replay, the unique ordered event
//! decomposition, the bijection with counter arrays, and the counting
//! recurrence.
//!
//! A duplication event replaces a contiguous block of ℓ genes by their 2ℓ
//! children in interleaved order (all left copies, then all right copies).
//! Histories are kept ⪯-ordered; the ordering condition is exactly that the
//! event encoding concatenates into a counter array.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint, Sign};
use serde::{Deserialize, Serialize};

use crate::codec::CounterArray;
use crate::error::{Error, Result};

/// One tandem duplication: genes `start..start+len-1` (1-based) duplicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicationEvent {
    pub start: usize,
    pub len: usize,
}

/// An ordered list of events whose encoding is a valid counter array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHistory", into = "RawHistory")]
pub struct DuplicationHistory {
    events: Vec<DuplicationEvent>,
}

#[derive(Serialize, Deserialize)]
struct RawHistory {
    events: Vec<(usize, usize)>,
}

impl From<DuplicationHistory> for RawHistory {
    fn from(h: DuplicationHistory) -> RawHistory {
        RawHistory {
            events: h.events.iter().map(|e| (e.start, e.len)).collect(),
        }
    }
}

impl TryFrom<RawHistory> for DuplicationHistory {
    type Error = Error;
    fn try_from(raw: RawHistory) -> Result<Self> {
        DuplicationHistory::from_pairs(&raw.events)
    }
}

impl DuplicationHistory {
    /// Validates the ⪯-ordering by walking the event encoding without
    /// materializing it.  Each event writes the run `start+len−1 … start`,
    /// so it must index into the current genes array, and its top index may
    /// not fall below the previous event's start — at event boundaries the
    /// encoding satisfies `a_{j+1} >= a_j`, strictly more than the
    /// counter-array condition, which is what keeps boundaries recoverable.
    pub fn new(events: Vec<DuplicationEvent>) -> Result<Self> {
        let mut genes = 1usize;
        let mut prev_start: Option<usize> = None;
        for e in &events {
            if e.len == 0 || e.start == 0 {
                return Err(Error::BadHistory(format!(
                    "event ({},{}) has an empty block",
                    e.start, e.len
                )));
            }
            let top = e
                .start
                .checked_add(e.len - 1)
                .filter(|&t| t <= genes)
                .ok_or_else(|| {
                    Error::BadHistory(format!(
                        "event ({},{}) indexes beyond {genes} genes",
                        e.start, e.len
                    ))
                })?;
            if let Some(p) = prev_start {
                if top < p {
                    return Err(Error::BadHistory(format!(
                        "event ({},{}) precedes the event before it",
                        e.start, e.len
                    )));
                }
            }
            genes = genes.checked_add(e.len).ok_or_else(|| {
                Error::BadHistory("history grows beyond addressable size".into())
            })?;
            prev_start = Some(e.start);
        }
        Ok(DuplicationHistory { events })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(start, len)| DuplicationEvent { start, len })
                .collect(),
        )
    }

    pub fn events(&self) -> &[DuplicationEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// 1 + Σ lenᵢ.
    pub fn final_gene_count(&self) -> usize {
        1 + self.events.iter().map(|e| e.len).sum::<usize>()
    }
}

pub type NodeId = usize;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct DupNode {
    left: Option<NodeId>,
    right: Option<NodeId>,
    leaf_pos: Option<usize>,
}

/// A rooted binary tree whose leaves carry their position in the final genes
/// array.  Every internal node has exactly two children.  Compare trees
/// through [`to_spec`](Self::to_spec) (or their decompositions): the arena
/// layout itself is not canonical.
#[derive(Debug, Clone)]
pub struct DupTree {
    nodes: Vec<DupNode>,
    root: NodeId,
}

/// Nested JSON form: a leaf is its position number, an internal node is the
/// two-element array `[left, right]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeSpec {
    Leaf(usize),
    Node(Box<TreeSpec>, Box<TreeSpec>),
}

impl DupTree {
    pub fn single_leaf() -> Self {
        DupTree {
            nodes: vec![DupNode {
                leaf_pos: Some(1),
                ..DupNode::default()
            }],
            root: 0,
        }
    }

    pub fn from_spec(spec: &TreeSpec) -> Result<Self> {
        let mut nodes = Vec::new();
        fn rec(spec: &TreeSpec, nodes: &mut Vec<DupNode>) -> NodeId {
            let id = nodes.len();
            nodes.push(DupNode::default());
            match spec {
                TreeSpec::Leaf(pos) => nodes[id].leaf_pos = Some(*pos),
                TreeSpec::Node(l, r) => {
                    let l = rec(l, nodes);
                    let r = rec(r, nodes);
                    nodes[id].left = Some(l);
                    nodes[id].right = Some(r);
                }
            }
            id
        }
        let root = rec(spec, &mut nodes);
        let tree = DupTree { nodes, root };
        tree.check_leaf_positions()?;
        Ok(tree)
    }

    pub fn to_spec(&self) -> TreeSpec {
        fn rec(tree: &DupTree, v: NodeId) -> TreeSpec {
            match (tree.nodes[v].left, tree.nodes[v].right) {
                (Some(l), Some(r)) => {
                    TreeSpec::Node(Box::new(rec(tree, l)), Box::new(rec(tree, r)))
                }
                _ => TreeSpec::Leaf(tree.nodes[v].leaf_pos.expect("leaf has a position")),
            }
        }
        rec(self, self.root)
    }

    fn check_leaf_positions(&self) -> Result<()> {
        let leaves = self.leaves();
        let mut seen = vec![false; leaves.len() + 1];
        for &id in &leaves {
            let pos = self.nodes[id]
                .leaf_pos
                .ok_or_else(|| Error::BadTree("leaf without position".into()))?;
            if pos == 0 || pos > leaves.len() || seen[pos] {
                return Err(Error::BadTree(format!(
                    "leaf positions must be a permutation of 1..={}, saw {pos} twice or out of range",
                    leaves.len()
                )));
            }
            seen[pos] = true;
        }
        Ok(())
    }

    fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v].left.is_none()
    }

    fn leaves(&self) -> Vec<NodeId> {
        (0..self.nodes.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    /// Leaf node ids ordered by final-array position.
    fn leaves_in_order(&self) -> Vec<NodeId> {
        let mut ls = self.leaves();
        ls.sort_by_key(|&v| self.nodes[v].leaf_pos);
        ls
    }

    /// Indented text rendering; leaves print their positions.
    pub fn render_indented(&self) -> String {
        let mut out = String::new();
        fn rec(tree: &DupTree, v: NodeId, depth: usize, out: &mut String) {
            let pad = "  ".repeat(depth);
            match (tree.nodes[v].left, tree.nodes[v].right) {
                (Some(l), Some(r)) => {
                    let _ = writeln!(out, "{pad}*");
                    rec(tree, l, depth + 1, out);
                    rec(tree, r, depth + 1, out);
                }
                _ => {
                    let _ = writeln!(out, "{pad}{}", tree.nodes[v].leaf_pos.unwrap());
                }
            }
        }
        rec(self, self.root, 0, &mut out);
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph duplication_tree {\n");
        for (id, node) in self.nodes.iter().enumerate() {
            match node.leaf_pos {
                Some(p) => {
                    let _ = writeln!(out, "  n{id} [label=\"{p}\", shape=box];");
                }
                None => {
                    let _ = writeln!(out, "  n{id} [label=\"\"];");
                }
            }
        }
        for (id, node) in self.nodes.iter().enumerate() {
            for child in [node.left, node.right].into_iter().flatten() {
                let _ = writeln!(out, "  n{id} -- n{child};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A tree being grown by successive duplication events, together with its
/// current genes array.
#[derive(Debug, Clone)]
pub struct GrowingTree {
    nodes: Vec<DupNode>,
    genes: Vec<NodeId>,
}

impl GrowingTree {
    /// Starts from the single ancestral gene.
    pub fn new() -> Self {
        GrowingTree {
            nodes: vec![DupNode::default()],
            genes: vec![0],
        }
    }

    pub fn genes(&self) -> &[NodeId] {
        &self.genes
    }

    /// Replaces the block by its 2ℓ children: `lc(g_i)…lc(g_{i+ℓ−1})` then
    /// `rc(g_i)…rc(g_{i+ℓ−1})`; the genes array grows by exactly ℓ.
    pub fn apply_event(&mut self, e: DuplicationEvent) -> Result<()> {
        if e.len == 0 || e.start == 0 || e.start + e.len - 1 > self.genes.len() {
            return Err(Error::EventOutOfRange {
                start: e.start,
                len: e.len,
                genes: self.genes.len(),
            });
        }
        let block: Vec<NodeId> = self.genes[e.start - 1..e.start - 1 + e.len].to_vec();
        let mut lcs = Vec::with_capacity(e.len);
        let mut rcs = Vec::with_capacity(e.len);
        for g in block {
            let l = self.nodes.len();
            self.nodes.push(DupNode::default());
            let r = self.nodes.len();
            self.nodes.push(DupNode::default());
            self.nodes[g].left = Some(l);
            self.nodes[g].right = Some(r);
            lcs.push(l);
            rcs.push(r);
        }
        lcs.extend(rcs);
        self.genes.splice(e.start - 1..e.start - 1 + e.len, lcs);
        Ok(())
    }

    /// Numbers the leaves by final array order and freezes the tree.
    pub fn finish(mut self) -> DupTree {
        for (i, &g) in self.genes.iter().enumerate() {
            self.nodes[g].leaf_pos = Some(i + 1);
        }
        DupTree {
            nodes: self.nodes,
            root: 0,
        }
    }
}

impl Default for GrowingTree {
    fn default() -> Self {
        Self::new()
    }
}

/// Replays a history into its tree.  History validation guarantees every
/// event is in range.
pub fn replay(h: &DuplicationHistory) -> DupTree {
    let mut tree = GrowingTree::new();
    for &e in h.events() {
        tree.apply_event(e)
            .expect("validated history events are in range");
    }
    tree.finish()
}

/// Recovers the unique ⪯-ordered event list that generates the tree.
///
/// Per round: collect low nodes (both children currently leaves), chain them
/// into blocks by the interleaving rule `lc(u) ≺ lc(v) ≺ rc(u) ≺ rc(v)`,
/// discard blocks whose generated leaves are not contiguous, take the block
/// with the maximal low node as the last event, contract it, recurse.  The
/// result is validated by replaying.
pub fn decompose(t: &DupTree) -> Result<DuplicationHistory> {
    t.check_leaf_positions()?;
    let mut cur = t.leaves_in_order();
    let mut events_rev: Vec<DuplicationEvent> = Vec::new();
    while cur.len() > 1 {
        let index_of: HashMap<NodeId, usize> =
            cur.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        // low nodes, ordered by left-child position
        let mut lows: Vec<NodeId> = (0..t.nodes.len())
            .filter(|&v| {
                matches!((t.nodes[v].left, t.nodes[v].right), (Some(l), Some(r))
                    if index_of.contains_key(&l) && index_of.contains_key(&r))
            })
            .collect();
        let (lc, rc) = (
            |v: NodeId| index_of[&t.nodes[v].left.unwrap()],
            |v: NodeId| index_of[&t.nodes[v].right.unwrap()],
        );
        lows.sort_by_key(|&v| lc(v));
        let mut blocks: Vec<Vec<NodeId>> = Vec::new();
        for u in lows {
            let chains = blocks.last().is_some_and(|blk| {
                let last = *blk.last().unwrap();
                lc(last) < lc(u) && lc(u) < rc(last) && rc(last) < rc(u)
            });
            if chains {
                blocks.last_mut().unwrap().push(u);
            } else {
                blocks.push(vec![u]);
            }
        }
        // keep blocks whose child leaves are contiguous in the current array
        let best = blocks
            .into_iter()
            .filter_map(|blk| {
                let mut idxs: Vec<usize> =
                    blk.iter().flat_map(|&u| [lc(u), rc(u)]).collect();
                idxs.sort_unstable();
                let contiguous = idxs.windows(2).all(|w| w[1] == w[0] + 1);
                contiguous.then(|| {
                    let start = idxs[0];
                    let high = blk.iter().map(|&u| lc(u)).max().unwrap();
                    (blk, start, high)
                })
            })
            .max_by_key(|&(_, _, high)| high);
        let Some((blk, start, _)) = best else {
            return Err(Error::BadTree(
                "no duplication block is contiguous; not an event-generated tree".into(),
            ));
        };
        let len = blk.len();
        events_rev.push(DuplicationEvent { start, len });
        cur.splice(start - 1..start - 1 + 2 * len, blk);
    }
    events_rev.reverse();
    let history = DuplicationHistory::new(events_rev)
        .map_err(|e| Error::BadTree(format!("decomposition is not ⪯-ordered: {e}")))?;
    // a tree is a duplication tree exactly when its decomposition replays to it
    if replay(&history).to_spec() != t.to_spec() {
        return Err(Error::BadTree(
            "tree is not generated by any ordered event sequence".into(),
        ));
    }
    Ok(history)
}

/// Concatenates each event's strictly decreasing index run
/// `(start+len−1, …, start)`; the history invariant makes this a counter
/// array.
pub fn encode_events(h: &DuplicationHistory) -> CounterArray {
    let mut out = Vec::new();
    for e in h.events() {
        out.extend((e.start..e.start + e.len).rev());
    }
    CounterArray::new(out).expect("history invariant")
}

/// Inverse of [`encode_events`]: a new event starts wherever the next entry
/// fails to drop by exactly 1.
pub fn decode_counter(c: &CounterArray) -> DuplicationHistory {
    let a = c.values();
    let mut events = Vec::new();
    let mut i = 0;
    while i < a.len() {
        let mut j = i;
        while j + 1 < a.len() && a[j + 1] + 1 == a[j] {
            j += 1;
        }
        events.push(DuplicationEvent {
            start: a[j],
            len: j - i + 1,
        });
        i = j + 1;
    }
    DuplicationHistory::new(events).expect("counter arrays decode to ordered histories")
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// Number of distinct rooted duplication trees with n leaves:
/// `r_1 = r_2 = 1`, then the alternating binomial recurrence.
pub fn r_count(n: usize) -> BigUint {
    assert!(n >= 1, "trees have at least one leaf");
    let mut rs: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)];
    for m in 3..=n {
        let mut total = BigInt::from(0);
        for k in 1..=(m + 1) / 3 {
            let term = BigInt::from_biguint(Sign::Plus, binom(m + 1 - 2 * k, k)) * &rs[m - k];
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        rs.push(total);
    }
    rs[n].to_biguint().expect("tree counts are positive")
}

/// Number of counter arrays of length n, by dynamic programming over the
/// last value.
pub fn sigma_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    // cnt[v-1] = arrays of the current length ending in v
    let mut cnt: Vec<BigUint> = vec![BigUint::from(1u32)];
    for i in 1..n {
        let mut nxt = vec![BigUint::from(0u32); i + 1];
        for (v0, c) in cnt.iter().enumerate() {
            // next value w >= v - 1 and w <= i + 1
            for (w0, slot) in nxt.iter_mut().enumerate().skip(v0.saturating_sub(1)) {
                debug_assert!(w0 < i + 1);
                *slot += c;
            }
        }
        cnt = nxt;
    }
    cnt.into_iter().sum()
}

/// Draws a counter array of length n uniformly at random, by sampling each
/// entry proportional to the number of completions.
pub fn sample_uniform_counter<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> CounterArray {
    assert!(n <= 38, "u128 completion counts overflow beyond n = 38");
    if n == 0 {
        return CounterArray::new(Vec::new()).unwrap();
    }
    // tails[i-1][v-1] = completions of a prefix ending at position i with value v
    let mut tails: Vec<Vec<u128>> = vec![Vec::new(); n];
    tails[n - 1] = vec![1u128; n];
    for i in (1..n).rev() {
        let mut row = vec![0u128; i];
        for (v0, slot) in row.iter_mut().enumerate() {
            let lo = v0.saturating_sub(1); // w0 = w-1 >= v-2 i.e. w >= v-1
            *slot = tails[i][lo..=i].iter().sum();
        }
        tails[i - 1] = row;
    }
    let mut a = Vec::with_capacity(n);
    a.push(1usize);
    for i in 1..n {
        let prev = a[i - 1];
        let lo = prev.saturating_sub(1).max(1);
        let weights: Vec<u128> = (lo..=i + 1).map(|w| tails[i][w - 1]).collect();
        let total: u128 = weights.iter().sum();
        let mut pick = rng.gen_range(0..total);
        let mut w = lo;
        for wt in &weights {
            if pick < *wt {
                break;
            }
            pick -= wt;
            w += 1;
        }
        a.push(w);
    }
    CounterArray::new(a).expect("sampled within bounds")
}

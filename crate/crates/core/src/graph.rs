//! The equality graph and restriction graph of a palindromic fingerprint.
//!
//! Positions forced equal by mirror pairs collapse into equality classes;
//! maximality of each palindrome forces its two flanking positions apart,
//! giving edges between classes.  Proper colorings of the restriction graph
//! are exactly the reconstructions of the fingerprint.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingerprint::PalindromicFingerprint;
use crate::text::{Symbol, Text};

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// The connected components of the equality graph: a partition of `1..=n`.
/// Class ids are assigned in order of minimal contained position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityClasses {
    n: usize,
    class_of: Vec<usize>, // index 0 unused
    classes: Vec<Vec<usize>>,
}

impl EqualityClasses {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class id of a 1-based position.
    pub fn class_of(&self, pos: usize) -> usize {
        self.class_of[pos]
    }

    /// Sorted member positions of every class, ordered by minimal position.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

/// Merges the mirror pairs of every maximal palindrome: for each entry with
/// doubled center `dc` and right end `j`, positions `m` and `dc − m` coincide
/// for all `dc/2 < m <= j`.  Merging only each palindrome's own mirror pairs
/// suffices because inner palindromes are themselves maximal at their center.
pub fn equality_classes(f: &PalindromicFingerprint) -> EqualityClasses {
    let n = f.n();
    let mut dsu = Dsu::new(n + 1);
    for &(i, j) in f.iter() {
        let dc = i + j;
        for m in dc / 2 + 1..=j {
            dsu.union(m, dc - m);
        }
    }
    let mut class_of = vec![usize::MAX; n + 1];
    let mut root_class = vec![usize::MAX; n + 1];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for pos in 1..=n {
        let r = dsu.find(pos);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[pos] = root_class[r];
        classes[root_class[r]].push(pos);
    }
    EqualityClasses {
        n,
        class_of,
        classes,
    }
}

/// Vertices are equality classes; an edge joins `class(i)` and `class(j)`
/// whenever `(i+1, j−1)` is in the fingerprint with both flanks in range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionGraph {
    eq: EqualityClasses,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// JSON form `{"classes": [[positions]…], "edges": [[a,b]…]}`.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub classes: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl RestrictionGraph {
    pub fn n(&self) -> usize {
        self.eq.n()
    }

    pub fn vertex_count(&self) -> usize {
        self.eq.class_count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn classes(&self) -> &EqualityClasses {
        &self.eq
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            classes: self.eq.classes().to_vec(),
            edges: self.edges.iter().copied().collect(),
        }
    }
}

pub fn build_restriction_graph(f: &PalindromicFingerprint) -> Result<RestrictionGraph> {
    let n = f.n();
    let eq = equality_classes(f);
    let mut edges = BTreeSet::new();
    for &(a, b) in f.iter() {
        // (a, b) = (i+1, j-1): flanks i = a-1 and j = b+1 must both exist
        if a >= 2 && b + 1 <= n {
            let (ci, cj) = (eq.class_of(a - 1), eq.class_of(b + 1));
            if ci == cj {
                return Err(Error::Unrealizable(format!(
                    "positions {} and {} are forced both equal and distinct",
                    a - 1,
                    b + 1
                )));
            }
            edges.insert((ci.min(cj), ci.max(cj)));
        }
    }
    let mut adj = vec![Vec::new(); eq.class_count()];
    for &(x, y) in &edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    Ok(RestrictionGraph { eq, edges, adj })
}

/// A total assignment of symbols to classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    color_of: Vec<Symbol>,
}

impl Coloring {
    pub fn new(color_of: Vec<Symbol>) -> Self {
        Coloring { color_of }
    }

    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        Ok(Coloring {
            color_of: ids
                .iter()
                .map(|&id| Symbol::new(id))
                .collect::<Result<_>>()?,
        })
    }

    pub fn get(&self, class: usize) -> Symbol {
        self.color_of[class]
    }

    pub fn len(&self) -> usize {
        self.color_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color_of.is_empty()
    }

    pub fn distinct_count(&self) -> usize {
        let mut ids: Vec<u32> = self.color_of.iter().map(|s| s.id()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    fn check_against(&self, g: &RestrictionGraph) -> Result<()> {
        if self.color_of.len() != g.vertex_count() {
            return Err(Error::PartialColoring {
                expected: g.vertex_count(),
                got: self.color_of.len(),
            });
        }
        for (a, b) in g.edges() {
            if self.color_of[a] == self.color_of[b] {
                return Err(Error::ImproperColoring(a, b));
            }
        }
        Ok(())
    }
}

/// Reads the text off a proper coloring: `T[i] = ψ(class(i))`.  The
/// fingerprint of the result is the graph's source fingerprint.
pub fn coloring_to_text(g: &RestrictionGraph, psi: &Coloring) -> Result<Text> {
    psi.check_against(g)?;
    let symbols = (1..=g.n())
        .map(|pos| psi.get(g.classes().class_of(pos)))
        .collect();
    Ok(Text::new(symbols))
}

/// Reads a coloring off a reconstruction: `ψ(A) = t[min A]`.  Errors signal
/// that `t` is not a reconstruction of the source fingerprint.
pub fn text_to_coloring(g: &RestrictionGraph, t: &Text) -> Result<Coloring> {
    if t.len() != g.n() {
        return Err(Error::TextLength {
            expected: g.n(),
            got: t.len(),
        });
    }
    let mut color_of = Vec::with_capacity(g.vertex_count());
    for (id, class) in g.classes().classes().iter().enumerate() {
        let sym = t.at(class[0]);
        if class.iter().any(|&p| t.at(p) != sym) {
            return Err(Error::NotConstantOnClass(id));
        }
        color_of.push(sym);
    }
    let psi = Coloring { color_of };
    psi.check_against(g)?;
    Ok(psi)
}

/// Greedy coloring in order of minimal contained position, always taking the
/// smallest symbol absent among already-colored neighbors.  The induced text
/// is the lexicographically minimal reconstruction and its alphabet is
/// globally minimal.
pub fn greedy_min_coloring(g: &RestrictionGraph) -> Coloring {
    // class ids are already ordered by minimal position
    let mut color_of: Vec<Symbol> = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let used: BTreeSet<u32> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u < v)
            .map(|&u| color_of[u].id())
            .collect();
        let mut c = 1u32;
        while used.contains(&c) {
            c += 1;
        }
        color_of.push(Symbol::new(c).expect("colors start at 1"));
    }
    Coloring { color_of }
}

/// Spreads a proper coloring to exactly `k` distinct colors by repeatedly
/// recoloring the vertex of largest minimal position whose color is still
/// shared, giving it a fresh symbol.
pub fn expand_coloring(g: &RestrictionGraph, psi: &Coloring, k: usize) -> Result<Coloring> {
    psi.check_against(g)?;
    let chi = psi.distinct_count();
    if k < chi || k > g.vertex_count() {
        return Err(Error::KOutOfRange {
            k,
            min: chi,
            max: g.vertex_count(),
        });
    }
    let mut colors: Vec<Symbol> = (0..g.vertex_count()).map(|v| psi.get(v)).collect();
    let mut distinct = chi;
    let mut fresh = colors.iter().map(|s| s.id()).max().unwrap_or(0);
    while distinct < k {
        let victim = (0..colors.len())
            .rev() // largest minimal position = largest class id
            .find(|&v| colors.iter().filter(|&&c| c == colors[v]).count() >= 2)
            .expect("distinct < vertex count implies a shared color");
        fresh += 1;
        colors[victim] = Symbol::new(fresh).expect("fresh symbol");
        distinct += 1;
    }
    Ok(Coloring { color_of: colors })
}

/// Graphviz rendering; vertex labels are the comma-joined positions, colors
/// become numeric attributes when a coloring is supplied.
pub fn to_dot(g: &RestrictionGraph, psi: Option<&Coloring>) -> String {
    let mut out = String::from("graph restriction {\n");
    for (id, class) in g.classes().classes().iter().enumerate() {
        let label = class
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        match psi {
            Some(c) => {
                let _ = writeln!(out, "  v{id} [label=\"{label}\", color=\"{}\"];", c.get(id).id());
            }
            None => {
                let _ = writeln!(out, "  v{id} [label=\"{label}\"];");
            }
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::fingerprint_of;
    use crate::manacher::compute_manacher;

    fn t(s: &str) -> Text {
        s.parse().unwrap()
    }

    fn graph_of(s: &str) -> RestrictionGraph {
        build_restriction_graph(&fingerprint_of(&t(s))).unwrap()
    }

    #[test]
    fn equality_classes_examples() {
        let eq = equality_classes(&fingerprint_of(&t("41213121566757")));
        assert_eq!(
            eq.classes(),
            &[
                vec![1],
                vec![2, 4, 6, 8],
                vec![3, 7],
                vec![5],
                vec![9],
                vec![10, 11],
                vec![12, 14],
                vec![13]
            ]
        );
        let eq = equality_classes(&fingerprint_of(&t("123")));
        assert_eq!(eq.classes(), &[vec![1], vec![2], vec![3]]);
        let eq = equality_classes(&fingerprint_of(&t("111")));
        assert_eq!(eq.classes(), &[vec![1, 2, 3]]);
    }

    /// The worked 14-character example.  The flanks of the maximal palindrome
    /// (10,11) force position 9 apart from position 12, so the full edge set
    /// has 16 members, one more than the figure the example is drawn from.
    #[test]
    fn restriction_graph_worked_example() {
        let g = graph_of("41213121566757");
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        // K5 on classes {1},{2,4,6,8},{3,7},{5},{9} = ids 0..=4
        for a in 0..5 {
            for b in a + 1..5 {
                assert!(g.has_edge(a, b), "missing clique edge {a}-{b}");
            }
        }
        let expected: Vec<(usize, usize)> = vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 7),
        ];
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn restriction_graph_small_examples() {
        let g = graph_of("123");
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        let g = graph_of("11");
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn self_loop_is_unrealizable() {
        // radii [0,1,0,1,0] forces 1=2=3 equal but claims center 2 is trivial
        let a = crate::manacher::ManacherArray::from_radii(vec![0, 1, 0, 1, 0]).unwrap();
        let f = crate::fingerprint::array_to_fingerprint(&a);
        assert!(matches!(
            build_restriction_graph(&f),
            Err(Error::Unrealizable(_))
        ));
    }

    #[test]
    fn coloring_roundtrip_on_worked_example() {
        let s = t("41213121566757");
        let g = graph_of("41213121566757");
        let arr = compute_manacher(&s);

        // the source string is a 7-color proper coloring
        let psi = text_to_coloring(&g, &s).unwrap();
        assert_eq!(psi.distinct_count(), 7);
        assert_eq!(coloring_to_text(&g, &psi).unwrap(), s);

        // the published 5-color optimal coloring, built class by class:
        // {1},{2,4,6,8},{3,7},{5},{9},{10,11},{12,14},{13}
        let optimal = Coloring::from_ids(&[4, 5, 2, 3, 1, 3, 2, 1]).unwrap();
        assert_eq!(optimal.distinct_count(), 5);
        assert_eq!(
            coloring_to_text(&g, &optimal).unwrap(),
            t("45253525133212")
        );
        assert_eq!(compute_manacher(&t("45253525133212")), arr);

        // the all-distinct 8-color reading of the published string
        assert_eq!(compute_manacher(&t("41213121566787")), arr);
        assert_eq!(
            text_to_coloring(&g, &t("41213121566787"))
                .unwrap()
                .distinct_count(),
            8
        );

        // single-class graph: any one color reconstructs
        let g2 = graph_of("11");
        let psi2 = Coloring::from_ids(&[7]).unwrap();
        assert_eq!(coloring_to_text(&g2, &psi2).unwrap(), t("77"));
        let psi2 = text_to_coloring(&g2, &t("11")).unwrap();
        assert_eq!(psi2.distinct_count(), 1);
        assert_eq!(coloring_to_text(&g2, &psi2).unwrap(), t("11"));
    }

    #[test]
    fn text_to_coloring_rejects_non_reconstructions() {
        let g = graph_of("121");
        // not constant on the class {1,3}
        assert!(matches!(
            text_to_coloring(&g, &t("122")),
            Err(Error::NotConstantOnClass(_))
        ));
        // equal across an edge: "111" collides classes {1,3} and {2}
        assert!(matches!(
            text_to_coloring(&g, &t("111")),
            Err(Error::ImproperColoring(..))
        ));
        assert!(matches!(
            text_to_coloring(&g, &t("12")),
            Err(Error::TextLength { .. })
        ));
    }

    #[test]
    fn greedy_examples() {
        let g = graph_of("41213121566757");
        let psi = greedy_min_coloring(&g);
        assert_eq!(psi.distinct_count(), 5);
        assert_eq!(
            coloring_to_text(&g, &psi).unwrap(),
            t("12324232511232")
        );

        let g = graph_of("111");
        assert_eq!(greedy_min_coloring(&g).distinct_count(), 1);

        let g = graph_of("412131215");
        assert_eq!(greedy_min_coloring(&g).distinct_count(), 5);
    }

    #[test]
    fn expand_examples() {
        let g = graph_of("41213121566757");
        let psi = greedy_min_coloring(&g);
        let e8 = expand_coloring(&g, &psi, 8).unwrap();
        assert_eq!(e8.distinct_count(), 8);
        // all vertices distinct
        let mut ids: Vec<u32> = (0..8).map(|v| e8.get(v).id()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 8);

        assert_eq!(
            expand_coloring(&g, &psi, 4),
            Err(Error::KOutOfRange {
                k: 4,
                min: 5,
                max: 8
            })
        );
        assert_eq!(
            expand_coloring(&g, &psi, 9),
            Err(Error::KOutOfRange {
                k: 9,
                min: 5,
                max: 8
            })
        );
        assert_eq!(expand_coloring(&g, &psi, 5).unwrap(), psi);

        // expanded colorings stay proper and keep the array
        for k in 5..=8 {
            let ek = expand_coloring(&g, &psi, k).unwrap();
            let text = coloring_to_text(&g, &ek).unwrap();
            assert_eq!(compute_manacher(&text), compute_manacher(&t("41213121566757")));
            assert_eq!(text.distinct_symbols(), k);
        }
    }

    #[test]
    fn dot_output() {
        let g = graph_of("11");
        let dot = to_dot(&g, None);
        assert_eq!(dot, "graph restriction {\n  v0 [label=\"1,2\"];\n}\n");

        let g = graph_of("123");
        let dot = to_dot(&g, Some(&greedy_min_coloring(&g)));
        assert_eq!(dot.matches("--").count(), 3);
        assert_eq!(dot.matches("label").count(), 3);
        assert!(dot.contains("color=\"1\""));
    }
}

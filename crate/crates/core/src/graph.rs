//! Undirected graphs with loops, as symmetric F2 matrices, plus the
//! loop-free (simple) variant.
//!
//! Pivots on graphs carry applicability conditions: `G * X` exists exactly
//! when the principal minor on `X` is nonsingular. The two elementary
//! cases, local complementation on a looped vertex and edge complementation
//! on an edge between loop-free vertices, are implemented by direct
//! neighbourhood toggling and cross-checked against the matrix pivot in the
//! test suites.

use crate::error::{Error, Result};
use crate::ground::{Ground, VertexSet};
use crate::matrix::F2Matrix;
use crate::set_system::SetSystem;
use crate::word::{GroupElement, OpToken};

/// An undirected graph with loops: a symmetric matrix over F2 whose
/// diagonal marks the loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    m: F2Matrix,
}

impl Graph {
    /// Edgeless, loopless graph.
    pub fn new(ground: &Ground) -> Graph {
        Graph {
            m: F2Matrix::zero(ground),
        }
    }

    /// Wraps a symmetric matrix. Panics if the matrix is not symmetric.
    pub fn from_matrix(m: F2Matrix) -> Graph {
        assert!(m.is_symmetric(), "adjacency matrix must be symmetric");
        Graph { m }
    }

    pub fn from_edges<'a>(
        ground: &Ground,
        edges: &[(&'a str, &'a str)],
        loops: &[&'a str],
    ) -> Result<Graph> {
        let mut g = Graph::new(ground);
        for (u, v) in edges {
            let i = ground.index_of(u)?;
            let j = ground.index_of(v)?;
            assert_ne!(i, j, "use the loops list for loops");
            g.m.set(i, j, true);
            g.m.set(j, i, true);
        }
        for u in loops {
            let i = ground.index_of(u)?;
            g.m.set(i, i, true);
        }
        Ok(g)
    }

    pub fn ground(&self) -> &Ground {
        self.m.ground()
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.m
    }

    pub fn size(&self) -> usize {
        self.m.size()
    }

    pub fn has_edge_at(&self, i: usize, j: usize) -> bool {
        i != j && self.m.get(i, j)
    }

    pub fn has_loop_at(&self, i: usize) -> bool {
        self.m.get(i, i)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.ground().position(u), self.ground().position(v)) {
            (Some(i), Some(j)) => self.has_edge_at(i, j),
            _ => false,
        }
    }

    pub fn has_loop(&self, u: &str) -> bool {
        self.ground().position(u).is_some_and(|i| self.has_loop_at(i))
    }

    /// Edges as position pairs (i < j), in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.m.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Looped vertex positions, ascending.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.has_loop_at(i)).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty()
    }

    /// Open neighbourhood of the vertex at `pos`, as a bitmask.
    pub fn neighbors_mask(&self, pos: usize) -> u32 {
        self.m.row_bits(pos) & !(1 << pos)
    }

    /// Closed neighbourhood (the vertex itself always included).
    pub fn closed_neighbors_mask(&self, pos: usize) -> u32 {
        self.m.row_bits(pos) | 1 << pos
    }

    /// Row-major adjacency bits, the canonical orbit key.
    pub fn adjacency_key(&self) -> Vec<u64> {
        let n = self.size();
        let mut words = vec![0u64; (n * n).div_ceil(64) + usize::from(n == 0)];
        for i in 0..n {
            for j in 0..n {
                if self.m.get(i, j) {
                    let k = i * n + j;
                    words[k / 64] |= 1u64 << (k % 64);
                }
            }
        }
        words
    }

    fn check_ground(&self, set: &VertexSet) {
        assert!(
            self.ground().same_as(set.ground()),
            "vertex set built over a different ground"
        );
    }

    /// Pivot on `set`; defined exactly when `det G[set] = 1`.
    pub fn pivot(&self, set: &VertexSet) -> Result<Graph> {
        self.check_ground(set);
        match self.m.ppt(set) {
            Ok(m) => {
                debug_assert!(m.is_symmetric());
                Ok(Graph { m })
            }
            Err(Error::SingularPrincipalMinor { set }) => Err(Error::UndefinedPivot { set }),
            Err(e) => Err(e),
        }
    }

    pub fn pivot_defined(&self, set: &VertexSet) -> bool {
        self.m.minor_det(set)
    }

    /// Toggles the loops on `set`; always defined.
    pub fn loop_complement(&self, set: &VertexSet) -> Graph {
        Graph {
            m: self.m.diag_add(set),
        }
    }

    /// Dual pivot on `set`; defined exactly when `det (G+set)[set] = 1`.
    pub fn dual_pivot(&self, set: &VertexSet) -> Result<Graph> {
        Ok(self
            .loop_complement(set)
            .pivot(set)?
            .loop_complement(set))
    }

    /// Local complementation on a looped vertex: complements all pairs
    /// inside the open neighbourhood, loops of neighbours included.
    /// Agrees with `pivot` on the singleton.
    pub fn local_complement(&self, u: &str) -> Result<Graph> {
        let pos = self.ground().index_of(u)?;
        if !self.has_loop_at(pos) {
            return Err(Error::NotALoop {
                vertex: u.to_string(),
            });
        }
        Ok(self.local_complement_unchecked(pos))
    }

    fn local_complement_unchecked(&self, pos: usize) -> Graph {
        let nb = self.neighbors_mask(pos);
        let mut out = self.clone();
        let n = self.size();
        for v in (0..n).filter(|&v| nb >> v & 1 == 1) {
            out.m.toggle(v, v);
            for w in (v + 1..n).filter(|&w| nb >> w & 1 == 1) {
                out.m.toggle(v, w);
                out.m.toggle(w, v);
            }
        }
        out
    }

    /// Edge complementation on an edge between two loop-free vertices:
    /// splits the closed neighbourhoods into three classes and toggles all
    /// pairs across distinct classes. Loops are untouched. Agrees with
    /// `pivot` on the pair.
    pub fn edge_complement(&self, u: &str, v: &str) -> Result<Graph> {
        let i = self.ground().index_of(u)?;
        let j = self.ground().index_of(v)?;
        let fail = |reason: &str| Error::NotAValidEdge {
            u: u.to_string(),
            v: v.to_string(),
            reason: reason.to_string(),
        };
        if i == j {
            return Err(fail("the two endpoints coincide"));
        }
        if !self.has_edge_at(i, j) {
            return Err(fail("no such edge"));
        }
        if self.has_loop_at(i) || self.has_loop_at(j) {
            return Err(fail("an endpoint has a loop"));
        }
        Ok(self.edge_complement_unchecked(i, j))
    }

    fn edge_complement_unchecked(&self, i: usize, j: usize) -> Graph {
        let nu = self.closed_neighbors_mask(i);
        let nv = self.closed_neighbors_mask(j);
        let classes = [nu & !nv, nv & !nu, nu & nv];
        let mut out = self.clone();
        let n = self.size();
        for a in 0..3 {
            for b in a + 1..3 {
                for x in (0..n).filter(|&x| classes[a] >> x & 1 == 1) {
                    for y in (0..n).filter(|&y| classes[b] >> y & 1 == 1) {
                        out.m.toggle(x, y);
                        out.m.toggle(y, x);
                    }
                }
            }
        }
        out
    }

    /// Splits a pivot set into a sequence of elementary pivots, each
    /// applicable in the running graph, whose composition equals the pivot
    /// on the whole set.
    ///
    /// Tie-breaking is fixed for reproducibility: the least looped vertex
    /// in ground order first; if the remainder is loop-free, the
    /// lexicographically least edge inside it.
    pub fn elementary_decomposition(&self, set: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_ground(set);
        if !self.pivot_defined(set) {
            return Err(Error::UndefinedPivot {
                set: set.to_string(),
            });
        }
        let ground = self.ground().clone();
        let mut running = self.clone();
        let mut rest = set.bits();
        let mut steps = Vec::new();
        while rest != 0 {
            let in_rest = |p: usize| rest >> p & 1 == 1;
            let step = if let Some(u) = (0..self.size()).find(|&p| in_rest(p) && running.has_loop_at(p))
            {
                VertexSet::from_bits(&ground, 1 << u)
            } else {
                let (i, j) = running
                    .edges()
                    .into_iter()
                    .find(|&(i, j)| in_rest(i) && in_rest(j))
                    .expect("nonsingular loop-free remainder must contain an edge");
                VertexSet::from_bits(&ground, 1 << i | 1 << j)
            };
            running = running.pivot(&step)?;
            rest &= !step.bits();
            steps.push(step);
        }
        Ok(steps)
    }

    /// The induced set system: all subsets with nonsingular principal minor.
    pub fn induced_set_system(&self) -> Result<SetSystem> {
        SetSystem::of_matrix(&self.m)
    }

    /// Reconstructs the unique graph whose induced set system is `s`.
    ///
    /// `{u}` becomes a loop iff it is a member; `{u,v}` becomes an edge iff
    /// its membership differs from the conjunction of the singletons. The
    /// reconstruction is verified by a full round trip; a mismatch (or a
    /// family without the empty set) means no graph induces `s`.
    pub fn from_set_system(s: &SetSystem) -> Result<Graph> {
        let ground = s.ground().clone();
        if !s.contains_mask(0) {
            return Err(Error::NotGraphic {
                reason: "the empty set is not a member".to_string(),
            });
        }
        let n = ground.len();
        let mut g = Graph::new(&ground);
        for i in 0..n {
            if s.contains_mask(1 << i) {
                g.m.set(i, i, true);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let pair = s.contains_mask(1 << i | 1 << j);
                let both = s.contains_mask(1 << i) && s.contains_mask(1 << j);
                if pair ^ both {
                    g.m.set(i, j, true);
                    g.m.set(j, i, true);
                }
            }
        }
        if &g.induced_set_system()? != s {
            return Err(Error::NotGraphic {
                reason: "no graph induces this family".to_string(),
            });
        }
        Ok(g)
    }

    /// Drops the loops (the projection onto simple graphs).
    pub fn strip_loops(&self) -> SimpleGraph {
        let loops = VertexSet::from_bits(
            self.ground(),
            self.loops().iter().fold(0u32, |acc, &i| acc | 1 << i),
        );
        SimpleGraph {
            g: self.loop_complement(&loops),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g = self.ground();
        write!(f, "Graph{{edges: [")?;
        for (k, (i, j)) in self.edges().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", g.label(*i), g.label(*j))?;
        }
        write!(f, "], loops: [")?;
        for (k, i) in self.loops().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.label(*i))?;
        }
        write!(f, "]}}")
    }
}

/// A graph with no loops, closed under the simple-graph complementations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleGraph {
    g: Graph,
}

impl SimpleGraph {
    pub fn new(ground: &Ground) -> SimpleGraph {
        SimpleGraph {
            g: Graph::new(ground),
        }
    }

    pub fn from_edges<'a>(ground: &Ground, edges: &[(&'a str, &'a str)]) -> Result<SimpleGraph> {
        Ok(SimpleGraph {
            g: Graph::from_edges(ground, edges, &[])?,
        })
    }

    /// The graph viewed loop-free (the injection into graphs).
    pub fn inject(&self) -> Graph {
        self.g.clone()
    }

    pub fn ground(&self) -> &Ground {
        self.g.ground()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.g.has_edge(u, v)
    }

    pub fn has_edge_at(&self, i: usize, j: usize) -> bool {
        self.g.has_edge_at(i, j)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.g.edges()
    }

    /// Local complementation without a loop condition: complements the
    /// pairs of distinct neighbours; no loops appear.
    pub fn local_complement(&self, u: &str) -> Result<SimpleGraph> {
        let pos = self.g.ground().index_of(u)?;
        Ok(self.local_complement_at(pos))
    }

    pub fn local_complement_at(&self, pos: usize) -> SimpleGraph {
        let nb = self.g.neighbors_mask(pos);
        let mut out = self.clone();
        let n = self.g.size();
        for v in (0..n).filter(|&v| nb >> v & 1 == 1) {
            for w in (v + 1..n).filter(|&w| nb >> w & 1 == 1) {
                out.g.m.toggle(v, w);
                out.g.m.toggle(w, v);
            }
        }
        out
    }

    /// Edge complementation on an existing edge; loop-freeness of the
    /// endpoints is automatic here.
    pub fn edge_complement(&self, u: &str, v: &str) -> Result<SimpleGraph> {
        let i = self.g.ground().index_of(u)?;
        let j = self.g.ground().index_of(v)?;
        if i == j || !self.g.has_edge_at(i, j) {
            return Err(Error::NotAValidEdge {
                u: u.to_string(),
                v: v.to_string(),
                reason: "no such edge".to_string(),
            });
        }
        Ok(SimpleGraph {
            g: self.g.edge_complement_unchecked(i, j),
        })
    }

    /// Collapses a sequence of local complementations into a single
    /// `+X *Y` prefix: the returned pair satisfies
    /// `self after word = (inject(self) + X * Y) stripped of loops`,
    /// with `X` contained in `Y`.
    ///
    /// The word is lifted step by step: a vertex that carries a loop in
    /// the running lifted graph pivots directly, otherwise its loop is
    /// toggled first; the lifted word then collapses to `+X *Y +Z` and the
    /// trailing `+Z` dies under loop stripping.
    pub fn sequence_as_pivot(&self, word: &[&str]) -> Result<(VertexSet, VertexSet)> {
        let ground = self.g.ground().clone();
        let mut running = self.inject();
        let mut lifted: Vec<OpToken> = Vec::new();
        for u in word {
            let pos = ground.index_of(u)?;
            let single = VertexSet::from_bits(&ground, 1 << pos);
            if !running.has_loop_at(pos) {
                running = running.loop_complement(&single);
                lifted.push(OpToken::loop_complement(single.clone()));
            }
            running = running.pivot(&single)?;
            lifted.push(OpToken::pivot(single));
        }
        let element = GroupElement::from_tokens(&ground, &lifted)?;
        let nf = element.normal_form();
        Ok((nf.first_add().clone(), nf.pivot_set().clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example_ground, example_matrix};

    fn example_graph() -> Graph {
        Graph::from_matrix(example_matrix())
    }

    fn vs(g: &Ground, labels: &str) -> VertexSet {
        VertexSet::from_labels(g, labels.split_whitespace()).unwrap()
    }

    #[test]
    fn pivot_examples() {
        let g = example_graph();
        let gr = g.ground().clone();
        let got = g.pivot(&vs(&gr, "p q r")).unwrap();
        let want = Graph::from_edges(
            &gr,
            &[("p", "r"), ("p", "s"), ("q", "r"), ("q", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap();
        assert_eq!(got, want);

        assert_eq!(g.pivot(&VertexSet::empty(&gr)).unwrap(), g);
        assert!(matches!(
            g.pivot(&vs(&gr, "p q")),
            Err(Error::UndefinedPivot { .. })
        ));
    }

    #[test]
    fn loop_complement_and_dual_pivot() {
        let gr = Ground::new(["1", "2", "3"]).unwrap();
        let g = Graph::from_edges(&gr, &[("1", "2"), ("1", "3")], &["1", "3"]).unwrap();
        let got = g.loop_complement(&vs(&gr, "3"));
        let want = Graph::from_edges(&gr, &[("1", "2"), ("1", "3")], &["1"]).unwrap();
        assert_eq!(got, want);

        let eg = example_graph();
        let egr = eg.ground().clone();
        let dual = eg.dual_pivot(&vs(&egr, "r")).unwrap();
        let want = Graph::from_edges(
            &egr,
            &[("p", "q"), ("p", "r"), ("r", "s")],
            &["q", "s"],
        )
        .unwrap();
        assert_eq!(dual, want);
    }

    #[test]
    fn one_sided_definedness_counterexample() {
        // edge between two looped vertices: the dual pivot is defined while
        // pivot-first fails at the very first step
        let gr = Ground::new(["u", "v"]).unwrap();
        let g = Graph::from_edges(&gr, &[("u", "v")], &["u", "v"]).unwrap();
        let x = VertexSet::full(&gr);
        assert!(g.dual_pivot(&x).is_ok());
        assert!(matches!(g.pivot(&x), Err(Error::UndefinedPivot { .. })));
    }

    #[test]
    fn local_complement_examples() {
        let g = example_graph();
        let gr = g.ground().clone();
        // removing q's loop view: N(q) = {p}, so only p's loop toggles
        let after = g.local_complement("q").unwrap();
        let want = Graph::from_edges(
            &gr,
            &[("p", "q"), ("p", "r"), ("p", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap();
        assert_eq!(after, want);
        assert_eq!(after, g.pivot(&vs(&gr, "q")).unwrap());

        // vertex with an empty neighbourhood changes nothing
        let lonely =
            Graph::from_edges(&Ground::new(["a", "b"]).unwrap(), &[], &["a"]).unwrap();
        assert_eq!(lonely.local_complement("a").unwrap(), lonely);

        // the five-node orbit closes: node V pivots back to node I on p
        let node5 = Graph::from_edges(
            &gr,
            &[("p", "q"), ("p", "r"), ("p", "s"), ("q", "r"), ("q", "s")],
            &["p", "r", "s"],
        )
        .unwrap();
        assert_eq!(node5.local_complement("p").unwrap(), g);

        assert!(matches!(
            g.local_complement("r"),
            Err(Error::NotALoop { .. })
        ));
        assert!(matches!(
            g.local_complement("zz"),
            Err(Error::UnknownVertex { .. })
        ));
    }

    #[test]
    fn edge_complement_examples() {
        let g = example_graph();
        let gr = g.ground().clone();
        // r and s have identical closed neighbourhoods: nothing toggles
        assert_eq!(g.edge_complement("r", "s").unwrap(), g);
        assert_eq!(
            g.edge_complement("r", "s").unwrap(),
            g.pivot(&vs(&gr, "r s")).unwrap()
        );

        // errors: loop on an endpoint, missing edge, equal endpoints
        assert!(matches!(
            g.edge_complement("p", "q"),
            Err(Error::NotAValidEdge { .. })
        ));
        assert!(matches!(
            g.edge_complement("q", "s"),
            Err(Error::NotAValidEdge { .. })
        ));
        assert!(matches!(
            g.edge_complement("r", "r"),
            Err(Error::NotAValidEdge { .. })
        ));
    }

    #[test]
    fn edge_complement_moves_between_orbit_nodes() {
        let gr = example_ground();
        // node II of the worked orbit
        let node2 = Graph::from_edges(
            &gr,
            &[("p", "q"), ("p", "r"), ("p", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap();
        let node3 = Graph::from_edges(
            &gr,
            &[("p", "r"), ("p", "s"), ("q", "r"), ("q", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap();
        assert_eq!(node2.edge_complement("p", "r").unwrap(), node3);
        assert_eq!(node3.edge_complement("p", "r").unwrap(), node2);
    }

    #[test]
    fn elementary_decomposition_examples() {
        let g = example_graph();
        let gr = g.ground().clone();
        let y = vs(&gr, "p r s");
        let steps = g.elementary_decomposition(&y).unwrap();
        let rendered: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["{p}", "{r}", "{s}"]);
        // each step is elementary in the running graph and the steps
        // compose to the full pivot
        let mut h = g.clone();
        for s in &steps {
            let members: Vec<usize> = s.positions().collect();
            match members.as_slice() {
                [u] => assert!(h.has_loop_at(*u), "loop step without a loop"),
                [u, v] => assert!(
                    h.has_edge_at(*u, *v) && !h.has_loop_at(*u) && !h.has_loop_at(*v),
                    "edge step must be a loop-free edge"
                ),
                other => panic!("step of size {}", other.len()),
            }
            h = h.pivot(s).unwrap();
        }
        assert_eq!(h, g.pivot(&y).unwrap());

        assert!(g
            .elementary_decomposition(&VertexSet::empty(&gr))
            .unwrap()
            .is_empty());

        let gr2 = Ground::new(["u", "v", "w"]).unwrap();
        let single = Graph::from_edges(&gr2, &[("u", "v")], &[]).unwrap();
        let steps = single.elementary_decomposition(&vs(&gr2, "u v")).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].to_string(), "{u,v}");

        assert!(matches!(
            g.elementary_decomposition(&vs(&gr, "p q")),
            Err(Error::UndefinedPivot { .. })
        ));
    }

    #[test]
    fn set_system_bridges() {
        let g = example_graph();
        let sys = g.induced_set_system().unwrap();
        assert_eq!(Graph::from_set_system(&sys).unwrap(), g);

        let gr = Ground::new(["1", "2", "3"]).unwrap();
        let trivial = crate::testutil::ss(&gr, &[""]);
        assert_eq!(
            Graph::from_set_system(&trivial).unwrap(),
            Graph::new(&gr)
        );

        // seven-member family over three vertices: no graph induces it
        let stubborn = crate::testutil::ss(&gr, &["", "1", "2", "3", "1 2", "2 3", "1 3"]);
        assert!(matches!(
            Graph::from_set_system(&stubborn),
            Err(Error::NotGraphic { .. })
        ));

        let no_empty = crate::testutil::ss(&gr, &["1"]);
        assert!(matches!(
            Graph::from_set_system(&no_empty),
            Err(Error::NotGraphic { .. })
        ));
    }

    #[test]
    fn strip_and_inject() {
        let gr = Ground::new(["1", "2", "3"]).unwrap();
        let g = Graph::from_edges(&gr, &[("1", "2"), ("1", "3")], &["1", "3"]).unwrap();
        let s = g.strip_loops();
        assert_eq!(
            s,
            SimpleGraph::from_edges(&gr, &[("1", "2"), ("1", "3")]).unwrap()
        );
        assert_eq!(s.inject().strip_loops(), s);
        assert!(s.inject().is_simple());
    }

    #[test]
    fn simple_edge_complement_is_three_local_complements() {
        let gr = Ground::new(["u", "v", "w"]).unwrap();
        let tri =
            SimpleGraph::from_edges(&gr, &[("u", "v"), ("v", "w"), ("u", "w")]).unwrap();
        let via_edge = tri.edge_complement("u", "v").unwrap();
        let via_locals = tri
            .local_complement("u")
            .unwrap()
            .local_complement("v")
            .unwrap()
            .local_complement("u")
            .unwrap();
        assert_eq!(via_edge, via_locals);

        assert!(matches!(
            tri.edge_complement("u", "u"),
            Err(Error::NotAValidEdge { .. })
        ));
    }

    #[test]
    fn loop_stripping_commutes_with_elementary_pivots() {
        let mut rng = crate::rng::Rng::new(53);
        let labels = ["a", "b", "c", "d", "e"];
        for _ in 0..100 {
            let n = 2 + rng.below(4) as usize;
            let gr = Ground::new(labels[..n].iter().copied()).unwrap();
            let mut f = Graph::new(&gr);
            for i in 0..n {
                for j in i..n {
                    if rng.bool() {
                        f.m.set(i, j, true);
                        f.m.set(j, i, true);
                    }
                }
            }
            // stripping loops never survives a loop complement
            let y = VertexSet::from_bits(&gr, rng.bits(n as u32) as u32);
            assert_eq!(f.loop_complement(&y).strip_loops(), f.strip_loops());
            // and it commutes with every applicable elementary pivot
            for u in f.loops() {
                let lhs = f.local_complement(gr.label(u)).unwrap().strip_loops();
                let rhs = f.strip_loops().local_complement_at(u);
                assert_eq!(lhs, rhs);
            }
            for (i, j) in f.edges() {
                if f.has_loop_at(i) || f.has_loop_at(j) {
                    continue;
                }
                let lhs = f
                    .edge_complement(gr.label(i), gr.label(j))
                    .unwrap()
                    .strip_loops();
                let rhs = f
                    .strip_loops()
                    .edge_complement(gr.label(i), gr.label(j))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn sequence_as_pivot_examples() {
        let gr = Ground::new(["u", "v", "w"]).unwrap();
        let s = SimpleGraph::from_edges(&gr, &[("u", "v"), ("v", "w")]).unwrap();

        let (x, y) = s.sequence_as_pivot(&[]).unwrap();
        assert!(x.is_empty() && y.is_empty());

        let (x, y) = s.sequence_as_pivot(&["u", "v", "u"]).unwrap();
        assert!(x.is_subset_of(&y));
        let direct = s.edge_complement("u", "v").unwrap();
        let lifted = s
            .inject()
            .loop_complement(&x)
            .pivot(&y)
            .unwrap()
            .strip_loops();
        assert_eq!(lifted, direct);
    }
}

//! Orbit enumeration: the closure of a labeled graph under its applicable
//! elementary pivots (and, optionally, single-vertex loop complementation).
//!
//! Nodes are labeled graphs keyed by their row-major adjacency bits; no
//! isomorphism reduction happens. Every applicable operation from every
//! node is recorded as a directed transition, self-transitions included.
//! Large frontiers are expanded on multiple threads; the merge order is
//! fixed so the result is independent of scheduling.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ground::VertexSet;
use crate::word::OpToken;

/// Tuning knobs for orbit enumeration.
#[derive(Clone, Debug)]
pub struct OrbitOptions {
    /// Abort with [`Error::OrbitTooLarge`] past this many nodes.
    pub node_cap: usize,
    /// Label a transition for every applicable pivot set, not only the
    /// elementary ones (node set unchanged; intended for small graphs).
    pub all_pivots: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            node_cap: 1 << 20,
            all_pivots: false,
        }
    }
}

/// One directed transition between orbit nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub token: OpToken,
}

/// The enumerated orbit: nodes in ascending key order plus all transitions.
#[derive(Clone, Debug)]
pub struct OrbitGraph {
    nodes: Vec<Graph>,
    keys: Vec<Vec<u64>>,
    transitions: Vec<Transition>,
}

/// Frontier chunks below this size are expanded on the calling thread.
const PARALLEL_THRESHOLD: usize = 256;

impl OrbitGraph {
    /// Closure of `g` under applicable local and edge complementations.
    pub fn pivot_orbit(g: &Graph, options: &OrbitOptions) -> Result<OrbitGraph> {
        Self::enumerate(g, options, false)
    }

    /// Closure of `g` under elementary pivots plus `+{v}` for every vertex.
    pub fn full_orbit(g: &Graph, options: &OrbitOptions) -> Result<OrbitGraph> {
        Self::enumerate(g, options, true)
    }

    fn enumerate(g: &Graph, options: &OrbitOptions, with_loops: bool) -> Result<OrbitGraph> {
        let mut nodes: Vec<Graph> = vec![g.clone()];
        let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
        index.insert(g.adjacency_key(), 0);
        let mut transitions: Vec<Transition> = Vec::new();
        let mut frontier: Vec<usize> = vec![0];

        while !frontier.is_empty() {
            let expansions = expand_frontier(&nodes, &frontier, options, with_loops);
            let mut next = Vec::new();
            for (slot, succs) in expansions.into_iter().enumerate() {
                let from = frontier[slot];
                for (token, h) in succs {
                    let key = h.adjacency_key();
                    let to = match index.get(&key) {
                        Some(&i) => i,
                        None => {
                            let i = nodes.len();
                            if i >= options.node_cap {
                                return Err(Error::OrbitTooLarge {
                                    cap: options.node_cap,
                                });
                            }
                            nodes.push(h);
                            index.insert(key, i);
                            next.push(i);
                            i
                        }
                    };
                    transitions.push(Transition { from, to, token });
                }
            }
            frontier = next;
        }

        // renumber nodes by ascending key so the result is canonical
        let mut order: Vec<usize> = (0..nodes.len()).collect();
        let keys: Vec<Vec<u64>> = nodes.iter().map(Graph::adjacency_key).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut rank = vec![0usize; nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut sorted_nodes = Vec::with_capacity(nodes.len());
        let mut sorted_keys = Vec::with_capacity(nodes.len());
        for &old in &order {
            sorted_nodes.push(nodes[old].clone());
            sorted_keys.push(keys[old].clone());
        }
        for t in &mut transitions {
            t.from = rank[t.from];
            t.to = rank[t.to];
        }
        transitions.sort_by_cached_key(|t| (t.from, t.to, t.token.to_string()));
        Ok(OrbitGraph {
            nodes: sorted_nodes,
            keys: sorted_keys,
            transitions,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Graph] {
        &self.nodes
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn node_index(&self, g: &Graph) -> Option<usize> {
        let key = g.adjacency_key();
        self.keys.binary_search(&key).ok()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.node_index(g).is_some()
    }

    /// Does some transition `from --token--> to` exist?
    pub fn has_transition(&self, from: &Graph, token_text: &str, to: &Graph) -> bool {
        let (Some(f), Some(t)) = (self.node_index(from), self.node_index(to)) else {
            return false;
        };
        self.transitions
            .iter()
            .any(|tr| tr.from == f && tr.to == t && tr.token.to_string() == token_text)
    }

    /// Undirected labeled edges, deduplicated and sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize, String)> {
        let mut set: Vec<(usize, usize, String)> = self
            .transitions
            .iter()
            .map(|t| (t.from.min(t.to), t.from.max(t.to), t.token.to_string()))
            .collect();
        set.sort();
        set.dedup();
        set
    }

    pub fn self_loop_count(&self) -> usize {
        self.undirected_edges()
            .iter()
            .filter(|(a, b, _)| a == b)
            .count()
    }

    /// Hex rendering of a node's adjacency key (the DOT node name).
    pub fn node_name(&self, idx: usize) -> String {
        let words = &self.keys[idx];
        let mut hex = String::new();
        let mut leading = true;
        for w in words.iter().rev() {
            if leading {
                if *w == 0 {
                    continue;
                }
                hex.push_str(&format!("{w:x}"));
                leading = false;
            } else {
                hex.push_str(&format!("{w:016x}"));
            }
        }
        if hex.is_empty() {
            hex.push('0');
        }
        format!("0x{hex}")
    }

    /// Deterministic DOT text: nodes by key order, undirected labeled edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph orbit {\n");
        for i in 0..self.nodes.len() {
            out.push_str(&format!("  \"{}\";\n", self.node_name(i)));
        }
        for (a, b, label) in self.undirected_edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                self.node_name(a),
                self.node_name(b),
                label
            ));
        }
        out.push_str("}\n");
        out
    }

    /// The `nodes:` / `transitions:` / `self-loops:` report.
    pub fn summary(&self) -> String {
        format!(
            "nodes: {}\ntransitions: {}\nself-loops: {}\n",
            self.node_count(),
            self.undirected_edges().len(),
            self.self_loop_count()
        )
    }
}

/// Applicable operations out of one node.
fn successors(g: &Graph, options: &OrbitOptions, with_loops: bool) -> Vec<(OpToken, Graph)> {
    let ground = g.ground().clone();
    let mut out = Vec::new();
    if options.all_pivots {
        let n = ground.len();
        for mask in 1..1u32 << n {
            let set = VertexSet::from_bits(&ground, mask);
            if let Ok(h) = g.pivot(&set) {
                out.push((OpToken::pivot(set), h));
            }
        }
    } else {
        for u in g.loops() {
            let set = VertexSet::from_bits(&ground, 1 << u);
            let h = g.pivot(&set).expect("a loop is an applicable pivot");
            out.push((OpToken::pivot(set), h));
        }
        for (i, j) in g.edges() {
            if !g.has_loop_at(i) && !g.has_loop_at(j) {
                let set = VertexSet::from_bits(&ground, 1 << i | 1 << j);
                let h = g
                    .pivot(&set)
                    .expect("a loop-free edge is an applicable pivot");
                out.push((OpToken::pivot(set), h));
            }
        }
    }
    if with_loops {
        for p in 0..ground.len() {
            let set = VertexSet::from_bits(&ground, 1 << p);
            out.push((OpToken::loop_complement(set.clone()), g.loop_complement(&set)));
        }
    }
    out
}

/// Expands every frontier slot, in parallel for large frontiers; the
/// returned vector is indexed by frontier slot, so merging downstream is
/// schedule-independent.
fn expand_frontier(
    nodes: &[Graph],
    frontier: &[usize],
    options: &OrbitOptions,
    with_loops: bool,
) -> Vec<Vec<(OpToken, Graph)>> {
    let threads = std::thread::available_parallelism()
        .map(std::num::NonZeroUsize::get)
        .unwrap_or(1);
    if frontier.len() < PARALLEL_THRESHOLD || threads < 2 {
        return frontier
            .iter()
            .map(|&i| successors(&nodes[i], options, with_loops))
            .collect();
    }
    let chunk = frontier.len().div_ceil(threads);
    let mut out: Vec<Vec<(OpToken, Graph)>> = Vec::with_capacity(frontier.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = frontier
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&i| successors(&nodes[i], options, with_loops))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            out.extend(h.join().expect("worker panicked"));
        }
    });
    out
}

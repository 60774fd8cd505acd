//! Built-in verification suites: exhaustive identity checks at small sizes
//! plus seeded randomized checks, one suite per invariant group.
//!
//! `max_n` bounds the exhaustive enumerations of matrices and graphs with
//! loops (costs grow as 2^(n^2), so it is capped at 4). Loop-free graphs on
//! n+1 vertices cost the same as loopy graphs on n, hence the simple-graph
//! suites run one vertex higher, up to 5. Set-system exhaustion stays at 3
//! (256 families). All randomized suites derive from the one seed.

use crate::graph::{Graph, SimpleGraph};
use crate::ground::{Ground, VertexSet};
use crate::matrix::F2Matrix;
use crate::orbit::{OrbitGraph, OrbitOptions};
use crate::rng::Rng;
use crate::set_system::{Flip2x2, SetSystem, S3};
use crate::text;
use crate::word::{OpToken, Word};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Bound for exhaustive matrix/graph enumeration (clamped to 4).
    pub max_n: usize,
    /// Seed for the randomized suites.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 4, seed: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Counts on success, first counterexample on failure.
    pub detail: String,
}

type SuiteResult = std::result::Result<String, String>;

const ALPHABET: [&str; 16] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
];

fn ground(n: usize) -> Ground {
    Ground::new(ALPHABET[..n].iter().copied()).expect("fixed labels")
}

/// All n x n matrices over F2.
fn all_matrices(n: usize) -> impl Iterator<Item = F2Matrix> {
    let g = ground(n);
    (0u64..1 << (n * n)).map(move |code| {
        let rows: Vec<u32> = (0..n)
            .map(|i| ((code >> (i * n)) & ((1 << n) - 1)) as u32)
            .collect();
        F2Matrix::from_row_bits(&g, rows)
    })
}

/// All graphs (symmetric matrices) on n vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let g = ground(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let npairs = pairs.len();
    (0u64..1 << (n + npairs)).map(move |code| {
        let mut m = F2Matrix::zero(&g);
        for i in 0..n {
            if code >> i & 1 == 1 {
                m.set(i, i, true);
            }
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if code >> (n + k) & 1 == 1 {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
        Graph::from_matrix(m)
    })
}

/// All loop-free graphs on n vertices.
fn all_simple_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    all_graphs(n).filter_map(|g| {
        if g.is_simple() {
            Some(g.strip_loops())
        } else {
            None
        }
    })
}

fn random_matrix(rng: &mut Rng, g: &Ground) -> F2Matrix {
    let n = g.len();
    let rows: Vec<u32> = (0..n).map(|_| rng.bits(n as u32) as u32).collect();
    F2Matrix::from_row_bits(g, rows)
}

fn random_graph(rng: &mut Rng, g: &Ground) -> Graph {
    let n = g.len();
    let mut m = F2Matrix::zero(g);
    for i in 0..n {
        for j in i..n {
            if rng.bool() {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    Graph::from_matrix(m)
}

fn random_simple_graph(rng: &mut Rng, g: &Ground) -> SimpleGraph {
    random_graph(rng, g).strip_loops()
}

fn random_set_system(rng: &mut Rng, g: &Ground) -> SetSystem {
    let mut s = SetSystem::empty_family(g).expect("small ground");
    for m in 0..1u32 << g.len() {
        if rng.bool() {
            s.set_mask(m, true);
        }
    }
    s
}

fn random_subset(rng: &mut Rng, g: &Ground) -> VertexSet {
    VertexSet::from_bits(g, rng.bits(g.len() as u32) as u32)
}

/// Random word of up to `max_len` tokens over all five kinds.
fn random_word(rng: &mut Rng, g: &Ground, max_len: usize) -> Word {
    let n = g.len();
    let len = rng.below(max_len as u64 + 1) as usize;
    let mut tokens = Vec::with_capacity(len);
    for _ in 0..len {
        let kind = rng.below(if n >= 2 { 5 } else { 4 });
        let token = match kind {
            0 => OpToken::pivot(random_subset(rng, g)),
            1 => OpToken::loop_complement(random_subset(rng, g)),
            2 => OpToken::dual_pivot(random_subset(rng, g)),
            3 => {
                let v = rng.below(n as u64) as usize;
                OpToken::local(VertexSet::from_bits(g, 1 << v))
            }
            _ => {
                let u = rng.below(n as u64) as usize;
                let mut v = rng.below(n as u64) as usize;
                while v == u {
                    v = rng.below(n as u64) as usize;
                }
                OpToken::edge(VertexSet::from_bits(g, 1 << u | 1 << v))
            }
        };
        tokens.push(token);
    }
    Word::from_tokens(g, tokens)
}

fn subset_of(g: &Ground, mask: u32) -> VertexSet {
    VertexSet::from_bits(g, mask)
}

// ---------------------------------------------------------------------------
// f2-linalg suites
// ---------------------------------------------------------------------------

/// Involution, composition and the minor-determinant translation law
/// `det (A*X)[Y] = det A[X ^ Y]`, exhaustive over all matrices.
fn f2_pivot_laws(max_n: usize) -> SuiteResult {
    let mut pairs = 0u64;
    for n in 0..=max_n.min(4) {
        let g = ground(n);
        for a in all_matrices(n) {
            let dets: Vec<bool> = (0..1u32 << n).map(|m| a.minor_det_mask(m)).collect();
            for x in (0..1u32 << n).filter(|&x| dets[x as usize]) {
                let xs = subset_of(&g, x);
                let b = a.ppt(&xs).map_err(|e| format!("pivot failed: {e}"))?;
                if b.ppt(&xs) != Ok(a.clone()) {
                    return Err(format!("involution failed: A={a:?} X={xs}"));
                }
                pairs += 1;
                for y in 0..1u32 << n {
                    let ys = subset_of(&g, y);
                    if b.minor_det(&ys) != dets[(x ^ y) as usize] {
                        return Err(format!(
                            "minor determinant law failed: A={a:?} X={xs} Y={ys}"
                        ));
                    }
                    if b.minor_det(&ys) {
                        let lhs = b.ppt(&ys);
                        let rhs = a.ppt(&subset_of(&g, x ^ y));
                        if lhs != rhs {
                            return Err(format!(
                                "composition failed: A={a:?} X={xs} Y={ys}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} defined pivots checked"))
}

/// The partial-inverse vector relation on every input vector.
fn f2_partial_inverse(max_n: usize, seed: u64) -> SuiteResult {
    let mut checked = 0u64;
    let mut run = |a: &F2Matrix, x: &VertexSet| -> SuiteResult {
        let b = a.ppt(x).map_err(|e| e.to_string())?;
        let n = a.size();
        let xm = x.bits();
        for v in 0..1u32 << n {
            let w = a.mul_bits(v);
            let v2 = (w & xm) | (v & !xm);
            let w2 = (v & xm) | (w & !xm);
            if b.mul_bits(v2) != w2 {
                return Err(format!(
                    "partial inverse relation failed: A={a:?} X={x} v={v:#b}"
                ));
            }
        }
        checked += 1;
        Ok(String::new())
    };
    for n in 0..=max_n.min(3) {
        let g = ground(n);
        for a in all_matrices(n) {
            for x in 0..1u32 << n {
                let xs = subset_of(&g, x);
                if a.minor_det(&xs) {
                    run(&a, &xs)?;
                }
            }
        }
    }
    let mut rng = Rng::new(seed);
    for n in 4..=6usize {
        let g = ground(n);
        let mut done = 0;
        while done < 50 {
            let a = random_matrix(&mut rng, &g);
            let x = random_subset(&mut rng, &g);
            if a.minor_det(&x) {
                run(&a, &x)?;
                done += 1;
            }
        }
    }
    Ok(format!("{checked} defined pivots, all input vectors"))
}

/// Symmetric input gives symmetric pivot, diagonal addition and dual pivot.
fn f2_symmetry_preservation(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 0..=max_n.min(4) {
        let g = ground(n);
        for gr in all_graphs(n) {
            let a = gr.matrix();
            for x in 0..1u32 << n {
                let xs = subset_of(&g, x);
                if !a.diag_add(&xs).is_symmetric() {
                    return Err(format!("diag_add broke symmetry: A={a:?} X={xs}"));
                }
                if a.minor_det(&xs) && !a.ppt(&xs).unwrap().is_symmetric() {
                    return Err(format!("pivot broke symmetry: A={a:?} X={xs}"));
                }
                if let Ok(d) = a.dual_ppt(&xs) {
                    if !d.is_symmetric() {
                        return Err(format!("dual pivot broke symmetry: A={a:?} X={xs}"));
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (graph, set) pairs"))
}

/// Rank and kernel are invariant under the dual pivot.
fn f2_kernel_invariance(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    let mut done = 0;
    while done < 500 {
        let n = 1 + rng.below(8) as usize;
        let g = ground(n);
        let a = random_matrix(&mut rng, &g);
        let x = random_subset(&mut rng, &g);
        let Ok(b) = a.dual_ppt(&x) else { continue };
        if a.rank() != b.rank() {
            return Err(format!("rank changed: A={a:?} X={x}"));
        }
        let ka = a.kernel_basis();
        if a.rank() + ka.len() != n {
            return Err(format!("rank-nullity failed: A={a:?}"));
        }
        for v in 0..1u32 << n {
            if (a.mul_bits(v) == 0) != (b.mul_bits(v) == 0) {
                return Err(format!("kernel changed: A={a:?} X={x} v={v:#b}"));
            }
        }
        done += 1;
    }
    Ok("500 dual pivots, kernels compared pointwise".to_string())
}

/// Adding the identity and inverting, three times over, is the identity
/// map wherever defined.
fn f2_s3_inversion(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 {
        attempts += 1;
        if attempts > 100_000 {
            return Err("could not find 100 defined chains".to_string());
        }
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let a = random_matrix(&mut rng, &g);
        if !a.det() {
            continue;
        }
        let full = VertexSet::full(&g);
        let step = |m: &F2Matrix| m.diag_add(&full).inverse();
        let Ok(a1) = step(&a) else { continue };
        let Ok(a2) = step(&a1) else { continue };
        let Ok(a3) = step(&a2) else { continue };
        if a3 != a {
            return Err(format!("triple add-and-invert chain moved A={a:?}"));
        }
        done += 1;
    }
    Ok("100 defined chains returned to the start".to_string())
}

// ---------------------------------------------------------------------------
// set-system suites
// ---------------------------------------------------------------------------

/// `+X *X +X = *X +X *X`, exhaustive over |V| <= 3 and randomized to 8.
fn ss_central_identity(seed: u64) -> SuiteResult {
    let mut count = 0u64;
    for n in 0..=3usize {
        let g = ground(n);
        for fam in 0u64..1 << (1 << n) {
            let m = SetSystem::from_family_bits(&g, fam).expect("small ground");
            for x in 0..1u32 << n {
                let xs = subset_of(&g, x);
                let lhs = m.loop_complement(&xs).pivot(&xs).loop_complement(&xs);
                let rhs = m.pivot(&xs).loop_complement(&xs).pivot(&xs);
                if lhs != rhs {
                    return Err(format!("central identity failed: M={m:?} X={xs}"));
                }
                if lhs != m.dual_pivot(&xs) {
                    return Err(format!("dual pivot disagrees: M={m:?} X={xs}"));
                }
                count += 1;
            }
        }
    }
    let mut rng = Rng::new(seed);
    for _ in 0..200 {
        let n = 1 + rng.below(8) as usize;
        let g = ground(n);
        let m = random_set_system(&mut rng, &g);
        let xs = random_subset(&mut rng, &g);
        let lhs = m.loop_complement(&xs).pivot(&xs).loop_complement(&xs);
        let rhs = m.pivot(&xs).loop_complement(&xs).pivot(&xs);
        if lhs != rhs || lhs != m.dual_pivot(&xs) {
            return Err(format!("central identity failed: M={m:?} X={xs}"));
        }
        count += 1;
    }
    Ok(format!("{count} (family, set) pairs"))
}

/// Flips on distinct vertices commute; same-vertex flips compose by
/// reversed matrix product.
fn ss_flip_commutation(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    for _ in 0..20 {
        let n = 2 + rng.below(4) as usize;
        let g = ground(n);
        let m = random_set_system(&mut rng, &g);
        for alpha in Flip2x2::all() {
            for beta in Flip2x2::all() {
                for j in 0..n {
                    for k in 0..n {
                        if j == k {
                            let lhs = m.vertex_flip_at(alpha, j).vertex_flip_at(beta, j);
                            let rhs = m.vertex_flip_at(beta.mul(alpha), j);
                            if lhs != rhs {
                                return Err(format!(
                                    "same-vertex composition failed: M={m:?} alpha={alpha:?} beta={beta:?} j={j}"
                                ));
                            }
                        } else {
                            let lhs = m.vertex_flip_at(alpha, j).vertex_flip_at(beta, k);
                            let rhs = m.vertex_flip_at(beta, k).vertex_flip_at(alpha, j);
                            if lhs != rhs {
                                return Err(format!(
                                    "commutation failed: M={m:?} alpha={alpha:?} beta={beta:?} j={j} k={k}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok("20 families x 256 flip pairs x all vertex pairs".to_string())
}

/// Generator relations and the classification of all 16 matrices.
fn ss_generator_relations() -> SuiteResult {
    let plus = Flip2x2::PLUS;
    let star = Flip2x2::STAR;
    if plus.mul(plus) != Flip2x2::IDENTITY || star.mul(star) != Flip2x2::IDENTITY {
        return Err("squares of the generators are not the identity".to_string());
    }
    let sp = star.mul(plus);
    if sp.mul(sp).mul(sp) != Flip2x2::IDENTITY {
        return Err("(STAR*PLUS)^3 is not the identity".to_string());
    }
    let mut invertible = 0;
    for m in Flip2x2::all() {
        match m.classify() {
            Some(name) => {
                invertible += 1;
                if name.matrix() != m {
                    return Err(format!("classification mismatch for {m:?}"));
                }
            }
            None => {
                if m.is_invertible() {
                    return Err(format!("{m:?} is invertible but unnamed"));
                }
            }
        }
    }
    if invertible != 6 {
        return Err(format!("expected 6 invertible matrices, found {invertible}"));
    }
    Ok("generator relations and 6+10 classification".to_string())
}

/// Dual pivot keeps the maximal members; loop complementation keeps the
/// minimal ones.
fn ss_max_min_invariance(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    for _ in 0..1000 {
        let n = 1 + rng.below(8) as usize;
        let g = ground(n);
        let m = random_set_system(&mut rng, &g);
        let x = random_subset(&mut rng, &g);
        if m.dual_pivot(&x).max_members() != m.max_members() {
            return Err(format!("max changed under dual pivot: M={m:?} X={x}"));
        }
        if m.loop_complement(&x).min_members() != m.min_members() {
            return Err(format!("min changed under loop complement: M={m:?} X={x}"));
        }
    }
    Ok("1000 random (family, set) pairs".to_string())
}

/// The matrix bridge intertwines both operations, and graphs round-trip
/// through their induced set systems.
fn ss_matrix_bridges(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 0..=max_n.min(4) {
        let g = ground(n);
        for graph in all_graphs(n) {
            let a = graph.matrix();
            let ma = SetSystem::of_matrix(a).map_err(|e| e.to_string())?;
            if Graph::from_set_system(&ma).as_ref() != Ok(&graph) {
                return Err(format!("round trip failed: G={graph:?}"));
            }
            for x in 0..1u32 << n {
                let xs = subset_of(&g, x);
                let shifted = SetSystem::of_matrix(&a.diag_add(&xs)).map_err(|e| e.to_string())?;
                if shifted != ma.loop_complement(&xs) {
                    return Err(format!(
                        "loop-complement bridge failed: G={graph:?} X={xs}"
                    ));
                }
                if ma.contains_mask(x) {
                    let pivoted =
                        SetSystem::of_matrix(&a.ppt(&xs).unwrap()).map_err(|e| e.to_string())?;
                    if pivoted != ma.pivot(&xs) {
                        return Err(format!("pivot bridge failed: G={graph:?} X={xs}"));
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (graph, set) pairs"))
}

// ---------------------------------------------------------------------------
// graph-algebra suites
// ---------------------------------------------------------------------------

/// Local and edge complementation coincide with the pivot on their sets.
fn graph_elementary_agreement(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 0..=max_n.min(4) {
        let g = ground(n);
        for graph in all_graphs(n) {
            for u in graph.loops() {
                let lc = graph.local_complement(g.label(u)).map_err(|e| e.to_string())?;
                if lc != graph.pivot(&subset_of(&g, 1 << u)).unwrap() {
                    return Err(format!(
                        "local complement disagrees with pivot: G={graph:?} u={}",
                        g.label(u)
                    ));
                }
                count += 1;
            }
            for (i, j) in graph.edges() {
                if graph.has_loop_at(i) || graph.has_loop_at(j) {
                    continue;
                }
                let ec = graph
                    .edge_complement(g.label(i), g.label(j))
                    .map_err(|e| e.to_string())?;
                if ec != graph.pivot(&subset_of(&g, 1 << i | 1 << j)).unwrap() {
                    return Err(format!(
                        "edge complement disagrees with pivot: G={graph:?} uv={}{}",
                        g.label(i),
                        g.label(j)
                    ));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} elementary operations"))
}

/// The seven-token word `*{u,v} +{u} *{u} *{v} +{u} *{u} +{u}` applies to
/// every graph with a loop-free edge {u,v} and acts as the identity.
fn graph_applicability_chain(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 2..=max_n.min(4) {
        let g = ground(n);
        for graph in all_graphs(n) {
            for i in 0..n {
                for j in 0..n {
                    if i == j
                        || !graph.has_edge_at(i, j)
                        || graph.has_loop_at(i)
                        || graph.has_loop_at(j)
                    {
                        continue;
                    }
                    let u = subset_of(&g, 1 << i);
                    let v = subset_of(&g, 1 << j);
                    let uv = subset_of(&g, 1 << i | 1 << j);
                    let word = Word::from_tokens(
                        &g,
                        vec![
                            OpToken::pivot(uv),
                            OpToken::loop_complement(u.clone()),
                            OpToken::pivot(u.clone()),
                            OpToken::pivot(v),
                            OpToken::loop_complement(u.clone()),
                            OpToken::pivot(u.clone()),
                            OpToken::loop_complement(u),
                        ],
                    );
                    match word.apply_to_graph(&graph) {
                        Ok(h) if h == graph => count += 1,
                        Ok(_) => {
                            return Err(format!(
                                "chain is not the identity on G={graph:?} u={} v={}",
                                g.label(i),
                                g.label(j)
                            ))
                        }
                        Err(e) => {
                            return Err(format!(
                                "chain not applicable on G={graph:?} u={} v={}: {e}",
                                g.label(i),
                                g.label(j)
                            ))
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{count} qualifying (graph, edge) pairs"))
}

fn simple_bound(max_n: usize) -> usize {
    (max_n + 1).min(5)
}

/// On loop-free graphs, edge complementation equals both three-step local
/// complementation sequences.
fn graph_simple_classic(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 2..=simple_bound(max_n) {
        let g = ground(n);
        for s in all_simple_graphs(n) {
            for (i, j) in s.edges() {
                let (u, v) = (g.label(i), g.label(j));
                let ec = s.edge_complement(u, v).map_err(|e| e.to_string())?;
                let uvu = s
                    .local_complement(u)
                    .and_then(|t| t.local_complement(v))
                    .and_then(|t| t.local_complement(u))
                    .map_err(|e| e.to_string())?;
                let vuv = s
                    .local_complement(v)
                    .and_then(|t| t.local_complement(u))
                    .and_then(|t| t.local_complement(v))
                    .map_err(|e| e.to_string())?;
                if ec != uvu || ec != vuv {
                    return Err(format!("classic identity failed: S={s:?} edge {u}{v}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} edges over all simple graphs"))
}

/// On a complete induced triple, the squared three-cycle of local
/// complementations equals the single middle one.
fn graph_triangle_identity(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 3..=simple_bound(max_n) {
        let g = ground(n);
        for s in all_simple_graphs(n) {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        if !(s.has_edge_at(i, j) && s.has_edge_at(j, k) && s.has_edge_at(i, k)) {
                            continue;
                        }
                        let (u, v, w) = (g.label(i), g.label(j), g.label(k));
                        let cycle = |t: &SimpleGraph| {
                            t.local_complement(u)
                                .and_then(|t| t.local_complement(v))
                                .and_then(|t| t.local_complement(w))
                        };
                        let twice = cycle(&cycle(&s).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        let single = s.local_complement(v).map_err(|e| e.to_string())?;
                        if twice != single {
                            return Err(format!(
                                "triangle identity failed: S={s:?} u={u} v={v} w={w}"
                            ));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} complete triples"))
}

/// `G+X*X+X = G*X+X*X` whenever both are defined, and pivot-first
/// definedness implies loop-first definedness.
fn graph_central_identity(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 0..=max_n.min(4) {
        let g = ground(n);
        for graph in all_graphs(n) {
            for x in 0..1u32 << n {
                let xs = subset_of(&g, x);
                let loop_first = graph.dual_pivot(&xs);
                let pivot_first = graph
                    .pivot(&xs)
                    .map(|h| h.loop_complement(&xs))
                    .and_then(|h| h.pivot(&xs));
                match (loop_first, pivot_first) {
                    (Ok(a), Ok(b)) => {
                        if a != b {
                            return Err(format!(
                                "central identity failed: G={graph:?} X={xs}"
                            ));
                        }
                    }
                    (Err(_), Ok(_)) => {
                        return Err(format!(
                            "one-sided definedness failed: G={graph:?} X={xs}"
                        ));
                    }
                    _ => {}
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (graph, set) pairs"))
}

/// Forward and converse of the sequence-to-pivot characterization on
/// simple graphs.
fn graph_sequence_as_pivot(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    for _ in 0..500 {
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let s = random_simple_graph(&mut rng, &g);
        let len = rng.below(9) as usize;
        let word: Vec<&str> = (0..len)
            .map(|_| g.label(rng.below(n as u64) as usize))
            .collect();
        let (x, y) = s.sequence_as_pivot(&word).map_err(|e| e.to_string())?;
        if !x.is_subset_of(&y) {
            return Err(format!("X not inside Y: S={s:?} word={word:?}"));
        }
        let mut direct = s.clone();
        for u in &word {
            direct = direct.local_complement(u).map_err(|e| e.to_string())?;
        }
        let lifted = s
            .inject()
            .loop_complement(&x)
            .pivot(&y)
            .map_err(|e| format!("lifted pivot undefined: S={s:?} word={word:?}: {e}"))?
            .strip_loops();
        if lifted != direct {
            return Err(format!("forward direction failed: S={s:?} word={word:?}"));
        }
    }

    let mut done = 0;
    while done < 500 {
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let f = random_graph(&mut rng, &g);
        let x = random_subset(&mut rng, &g);
        let y = random_subset(&mut rng, &g);
        let shifted = f.loop_complement(&x);
        let Ok(pivoted) = shifted.pivot(&y) else {
            continue;
        };
        let target = pivoted.strip_loops();
        // rebuild a local-complementation word from the elementary steps
        let steps = shifted
            .elementary_decomposition(&y)
            .map_err(|e| e.to_string())?;
        let mut running_graph = shifted.clone();
        let mut simple = f.strip_loops();
        for step in steps {
            let members: Vec<usize> = step.positions().collect();
            match members.as_slice() {
                [u] => {
                    simple = simple
                        .local_complement(g.label(*u))
                        .map_err(|e| e.to_string())?;
                }
                [u, v] => {
                    let (u, v) = (g.label(*u), g.label(*v));
                    simple = simple
                        .local_complement(u)
                        .and_then(|t| t.local_complement(v))
                        .and_then(|t| t.local_complement(u))
                        .map_err(|e| e.to_string())?;
                }
                _ => return Err("elementary step of unexpected size".to_string()),
            }
            running_graph = running_graph.pivot(&step).map_err(|e| e.to_string())?;
        }
        if simple != target {
            return Err(format!(
                "converse direction failed: F={f:?} X={x} Y={y}"
            ));
        }
        done += 1;
    }
    Ok("500 forward + 500 converse cases".to_string())
}

// ---------------------------------------------------------------------------
// group-word suites
// ---------------------------------------------------------------------------

/// Direct application of a random word equals applying its normal form.
fn word_normal_form(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    for _ in 0..1000 {
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let m = random_set_system(&mut rng, &g);
        let w = random_word(&mut rng, &g, 12);
        let nf = w.normal_form();
        if !nf.first_add().is_subset_of(nf.pivot_set()) {
            return Err(format!("X not inside Y for word `{w}`"));
        }
        if w.apply_to_set_system(&m) != nf.to_word().apply_to_set_system(&m) {
            return Err(format!(
                "normal form disagrees: word `{w}`, normal form `{nf}`, M={m:?}"
            ));
        }
    }
    Ok("1000 random (family, word) pairs".to_string())
}

/// Concatenation maps to composition; element orders divide 6; the
/// order-2 elements are exactly the all-involution assignments.
fn word_group_axioms(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    for _ in 0..200 {
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let w1 = random_word(&mut rng, &g, 6);
        let w2 = random_word(&mut rng, &g, 6);
        let mut tokens = w1.tokens().to_vec();
        tokens.extend(w2.tokens().to_vec());
        let concat = Word::from_tokens(&g, tokens);
        if concat.to_element() != w1.to_element().then(&w2.to_element()) {
            return Err(format!("homomorphism failed: `{w1}` • `{w2}`"));
        }
        let e = concat.to_element();
        if 6 % e.order() != 0 {
            return Err(format!("order {} does not divide 6: `{concat}`", e.order()));
        }
        let involutions = [
            Flip2x2::IDENTITY,
            Flip2x2::PLUS,
            Flip2x2::STAR,
            Flip2x2::DUAL,
        ];
        let all_involutive = (0..n).all(|p| involutions.contains(&e.flip_at(p)));
        let expected_order_two = all_involutive && !e.is_identity();
        if expected_order_two != (e.order() == 2) {
            return Err(format!("order-2 characterization failed: `{concat}`"));
        }
    }
    Ok("200 random word pairs".to_string())
}

/// `!{X}`, `+{X} *{X} +{X}` and `*{X} +{X} *{X}` are the same element.
fn word_dual_expansion(seed: u64) -> SuiteResult {
    let mut rng = Rng::new(seed);
    for _ in 0..300 {
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let x = random_subset(&mut rng, &g);
        let dual = Word::from_tokens(&g, vec![OpToken::dual_pivot(x.clone())]);
        let plus_star_plus = Word::from_tokens(
            &g,
            vec![
                OpToken::loop_complement(x.clone()),
                OpToken::pivot(x.clone()),
                OpToken::loop_complement(x.clone()),
            ],
        );
        let star_plus_star = Word::from_tokens(
            &g,
            vec![
                OpToken::pivot(x.clone()),
                OpToken::loop_complement(x.clone()),
                OpToken::pivot(x.clone()),
            ],
        );
        let e = dual.to_element();
        if e != plus_star_plus.to_element() || e != star_plus_star.to_element() {
            return Err(format!("dual expansion failed on X={x}"));
        }
    }
    Ok("300 random sets".to_string())
}

/// Whenever a word applies to a graph, its normal form `+X *Y +Z` applies
/// too and gives the same graph.
fn word_graph_applicability(max_n: usize, seed: u64) -> SuiteResult {
    let mut applied = 0u64;
    let mut check = |graph: &Graph, word: &Word| -> SuiteResult {
        let Ok(direct) = word.apply_to_graph(graph) else {
            return Ok(String::new());
        };
        applied += 1;
        let nf = word.normal_form();
        let shifted = graph.loop_complement(nf.first_add());
        if !shifted.pivot_defined(nf.pivot_set()) {
            return Err(format!(
                "normal-form pivot undefined: G={graph:?} word `{word}`"
            ));
        }
        let via_nf = shifted
            .pivot(nf.pivot_set())
            .unwrap()
            .loop_complement(nf.last_add());
        if via_nf != direct {
            return Err(format!(
                "normal-form result differs: G={graph:?} word `{word}`"
            ));
        }
        Ok(String::new())
    };

    // exhaustive: words of singleton tokens, length <= 4, graphs on <= 3 vertices
    for n in 1..=max_n.min(3) {
        let g = ground(n);
        let mut tokens = Vec::new();
        for p in 0..n {
            let s = subset_of(&g, 1 << p);
            tokens.push(OpToken::pivot(s.clone()));
            tokens.push(OpToken::loop_complement(s.clone()));
            tokens.push(OpToken::dual_pivot(s));
        }
        let mut words: Vec<Vec<OpToken>> = vec![Vec::new()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &words {
                for t in &tokens {
                    let mut w2 = w.clone();
                    w2.push(t.clone());
                    next.push(w2);
                }
            }
            for graph in all_graphs(n) {
                for w in &next {
                    check(&graph, &Word::from_tokens(&g, w.clone()))?;
                }
            }
            words = next;
        }
    }

    // randomized: longer words with multi-vertex tokens
    let mut rng = Rng::new(seed);
    for _ in 0..2000 {
        let n = 1 + rng.below(4) as usize;
        let g = ground(n);
        let graph = random_graph(&mut rng, &g);
        let w = random_word(&mut rng, &g, 6);
        check(&graph, &w)?;
    }
    Ok(format!("{applied} applicable (graph, word) pairs"))
}

// ---------------------------------------------------------------------------
// orbit-explorer suites
// ---------------------------------------------------------------------------

/// The pivot orbit is exactly the set of pivots over the induced family.
fn orbit_pivot_closure(max_n: usize) -> SuiteResult {
    let opts = OrbitOptions::default();
    let mut count = 0u64;
    for n in 0..=max_n.min(4) {
        let g = ground(n);
        for graph in all_graphs(n) {
            let orbit = OrbitGraph::pivot_orbit(&graph, &opts).map_err(|e| e.to_string())?;
            let family = graph.induced_set_system().map_err(|e| e.to_string())?;
            let mut expected: Vec<Vec<u64>> = family
                .member_masks()
                .map(|m| {
                    graph
                        .pivot(&subset_of(&g, m))
                        .expect("member masks are pivotable")
                        .adjacency_key()
                })
                .collect();
            expected.sort();
            expected.dedup();
            let mut got: Vec<Vec<u64>> = orbit.nodes().iter().map(Graph::adjacency_key).collect();
            got.sort();
            if got != expected {
                return Err(format!("orbit node set mismatch: G={graph:?}"));
            }
            count += 1;
        }
    }
    // a few 5-vertex spot checks of the node-count identity
    let mut rng = Rng::new(0x5e7);
    let g5 = ground(5);
    for _ in 0..10 {
        let graph = random_graph(&mut rng, &g5);
        let orbit = OrbitGraph::pivot_orbit(&graph, &opts).map_err(|e| e.to_string())?;
        let family = graph.induced_set_system().map_err(|e| e.to_string())?;
        let mut keys: Vec<Vec<u64>> = family
            .member_masks()
            .map(|m| graph.pivot(&subset_of(&g5, m)).unwrap().adjacency_key())
            .collect();
        keys.sort();
        keys.dedup();
        if orbit.node_count() != keys.len() {
            return Err(format!("orbit node count mismatch: G={graph:?}"));
        }
        count += 1;
    }
    Ok(format!("{count} orbits compared against direct pivots"))
}

/// Enumerating from any member of an orbit gives the same orbit.
fn orbit_equivalence(seed: u64) -> SuiteResult {
    let opts = OrbitOptions::default();
    let mut rng = Rng::new(seed);
    for _ in 0..10 {
        let n = 1 + rng.below(5) as usize;
        let g = ground(n);
        let graph = random_graph(&mut rng, &g);
        let orbit = OrbitGraph::pivot_orbit(&graph, &opts).map_err(|e| e.to_string())?;
        for node in orbit.nodes() {
            let other = OrbitGraph::pivot_orbit(node, &opts).map_err(|e| e.to_string())?;
            if other.to_dot() != orbit.to_dot() {
                return Err(format!("orbit changed from node {node:?}"));
            }
        }
    }
    Ok("10 random orbits, every node re-enumerated".to_string())
}

/// Same for the full orbit (pivots plus loop complementations).
fn orbit_full_invariance(seed: u64) -> SuiteResult {
    let opts = OrbitOptions::default();
    let mut rng = Rng::new(seed);
    for _ in 0..5 {
        let n = 1 + rng.below(4) as usize;
        let g = ground(n);
        let graph = random_graph(&mut rng, &g);
        let full = OrbitGraph::full_orbit(&graph, &opts).map_err(|e| e.to_string())?;
        if !full.contains(&graph) {
            return Err("full orbit lost its start".to_string());
        }
        for node in full.nodes().iter().take(5) {
            let other = OrbitGraph::full_orbit(node, &opts).map_err(|e| e.to_string())?;
            if other.to_dot() != full.to_dot() {
                return Err(format!("full orbit changed from node {node:?}"));
            }
        }
    }
    Ok("5 random full orbits".to_string())
}

// ---------------------------------------------------------------------------
// text / cli suites
// ---------------------------------------------------------------------------

/// Graph and set-system files round-trip losslessly.
fn text_roundtrip(max_n: usize, seed: u64) -> SuiteResult {
    let mut count = 0u64;
    for n in 1..=max_n.min(4) {
        for graph in all_graphs(n) {
            let parsed = text::parse_graph(&text::render_graph(&graph)).map_err(|e| e.to_string())?;
            if parsed != graph {
                return Err(format!("graph file round trip failed: G={graph:?}"));
            }
            let family = graph.induced_set_system().map_err(|e| e.to_string())?;
            let reparsed =
                text::parse_set_system(&text::render_set_system(&family)).map_err(|e| e.to_string())?;
            if Graph::from_set_system(&reparsed).as_ref() != Ok(&graph) {
                return Err(format!("set-system round trip failed: G={graph:?}"));
            }
            count += 1;
        }
    }
    let mut rng = Rng::new(seed);
    for _ in 0..100 {
        let n = 1 + rng.below(6) as usize;
        let g = ground(n);
        let m = random_set_system(&mut rng, &g);
        let reparsed = text::parse_set_system(&text::render_set_system(&m)).map_err(|e| e.to_string())?;
        if reparsed != m {
            return Err(format!("set-system file round trip failed: M={m:?}"));
        }
        count += 1;
    }
    Ok(format!("{count} round trips"))
}

/// Delta-matroid spot checks: induced graph systems always pass, and the
/// shifted seven-member family fails with the known witness.
fn delta_matroid_suite(max_n: usize) -> SuiteResult {
    let mut count = 0u64;
    for n in 0..=max_n.min(4) {
        for graph in all_graphs(n) {
            let family = graph.induced_set_system().map_err(|e| e.to_string())?;
            if !family.is_delta_matroid() {
                return Err(format!("induced family fails the exchange axiom: G={graph:?}"));
            }
            count += 1;
        }
    }
    let g = ground(3);
    let mut m = SetSystem::empty_family(&g).map_err(|e| e.to_string())?;
    for mask in [0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b101] {
        m.set_mask(mask, true);
    }
    if !m.is_delta_matroid() {
        return Err("seven-member family should pass".to_string());
    }
    let shifted = m.loop_complement(&subset_of(&g, 1));
    match shifted.delta_matroid_check() {
        crate::set_system::DeltaMatroidCheck::ExchangeFailure { x_set, y_set, x } => {
            if x_set.to_string() != "{}" || y_set.to_string() != "{a,b,c}" || x != "a" {
                return Err(format!(
                    "unexpected witness: X={x_set} Y={y_set} x={x}"
                ));
            }
        }
        other => return Err(format!("expected an exchange failure, got {other:?}")),
    }
    Ok(format!("{count} induced families plus the known counterexample"))
}

/// Normal-form triples: the six admissible (x, y, z) with x <= y hit all
/// six invertible matrices exactly once.
fn normal_form_bijection() -> SuiteResult {
    let mut seen = std::collections::HashSet::new();
    for (x, y, z) in [
        (false, false, false),
        (false, false, true),
        (false, true, false),
        (false, true, true),
        (true, true, false),
        (true, true, true),
    ] {
        let mut m = Flip2x2::IDENTITY;
        if x {
            m = Flip2x2::PLUS.mul(m);
        }
        if y {
            m = Flip2x2::STAR.mul(m);
        }
        if z {
            m = Flip2x2::PLUS.mul(m);
        }
        if !m.is_invertible() {
            return Err(format!("triple ({x},{y},{z}) gave a singular matrix"));
        }
        seen.insert(m);
    }
    if seen.len() != 6 {
        return Err(format!("expected 6 distinct matrices, got {}", seen.len()));
    }
    if !S3::all().iter().all(|s| seen.contains(&s.matrix())) {
        return Err("triples do not cover all six elements".to_string());
    }
    Ok("six triples biject with the six invertible matrices".to_string())
}

fn run(name: &'static str, body: impl FnOnce() -> SuiteResult) -> SuiteOutcome {
    match body() {
        Ok(detail) => SuiteOutcome {
            name,
            passed: true,
            detail,
        },
        Err(detail) => SuiteOutcome {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs every suite; failures do not stop later suites.
pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteOutcome> {
    let n = cfg.max_n.min(4);
    let s = cfg.seed;
    vec![
        run("f2/pivot-laws", || f2_pivot_laws(n)),
        run("f2/partial-inverse", || f2_partial_inverse(n, s ^ 0x01)),
        run("f2/symmetry-preservation", || f2_symmetry_preservation(n)),
        run("f2/kernel-invariance", || f2_kernel_invariance(s ^ 0x02)),
        run("f2/s3-inversion", || f2_s3_inversion(s ^ 0x03)),
        run("set-system/central-identity", || ss_central_identity(s ^ 0x04)),
        run("set-system/flip-commutation", || ss_flip_commutation(s ^ 0x05)),
        run("set-system/generator-relations", ss_generator_relations),
        run("set-system/max-min-invariance", || {
            ss_max_min_invariance(s ^ 0x06)
        }),
        run("set-system/matrix-bridges", || ss_matrix_bridges(n)),
        run("set-system/delta-matroid", || delta_matroid_suite(n)),
        run("graph/elementary-agreement", || graph_elementary_agreement(n)),
        run("graph/applicability-chain", || graph_applicability_chain(n)),
        run("graph/simple-classic-identity", || graph_simple_classic(n)),
        run("graph/triangle-identity", || graph_triangle_identity(n)),
        run("graph/central-identity", || graph_central_identity(n)),
        run("graph/sequence-as-pivot", || graph_sequence_as_pivot(s ^ 0x07)),
        run("word/normal-form", || word_normal_form(s ^ 0x08)),
        run("word/group-axioms", || word_group_axioms(s ^ 0x09)),
        run("word/dual-expansion", || word_dual_expansion(s ^ 0x0a)),
        run("word/normal-form-bijection", normal_form_bijection),
        run("word/graph-applicability", || {
            word_graph_applicability(n, s ^ 0x0b)
        }),
        run("orbit/pivot-closure", || orbit_pivot_closure(n)),
        run("orbit/equivalence", || orbit_equivalence(s ^ 0x0c)),
        run("orbit/full-invariance", || orbit_full_invariance(s ^ 0x0d)),
        run("text/round-trip", || text_roundtrip(n, s ^ 0x0e)),
    ]
}

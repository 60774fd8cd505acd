//! Property tests over randomly generated matrices, families and words.

use proptest::prelude::*;

use pivot_core::word::{OpToken, Word};
use pivot_core::{F2Matrix, Flip2x2, Graph, Ground, SetSystem, VertexSet};

#[test]
fn core_values_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<Ground>();
    check::<VertexSet>();
    check::<F2Matrix>();
    check::<SetSystem>();
    check::<Graph>();
    check::<pivot_core::SimpleGraph>();
    check::<pivot_core::OrbitGraph>();
    check::<Word>();
    check::<pivot_core::GroupElement>();
}

const LETTERS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn ground(n: usize) -> Ground {
    Ground::new(LETTERS[..n].iter().copied()).unwrap()
}

fn arb_sized(max_n: usize) -> impl Strategy<Value = (usize, u64)> {
    (1..=max_n, any::<u64>())
}

fn matrix_from(n: usize, mut seed: u64) -> F2Matrix {
    let g = ground(n);
    let rows: Vec<u32> = (0..n)
        .map(|_| {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (seed >> 33) as u32 & g.full_mask()
        })
        .collect();
    F2Matrix::from_row_bits(&g, rows)
}

fn graph_from(n: usize, mut seed: u64) -> Graph {
    let g = ground(n);
    let mut edges: Vec<(&str, &str)> = Vec::new();
    let mut loops: Vec<&str> = Vec::new();
    for i in 0..n {
        for j in i..n {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            if seed >> 62 & 1 == 1 {
                if i == j {
                    loops.push(g.label(i));
                } else {
                    edges.push((g.label(i), g.label(j)));
                }
            }
        }
    }
    Graph::from_edges(&g, &edges, &loops).unwrap()
}

fn family_from(n: usize, mut seed: u64) -> SetSystem {
    let g = ground(n);
    let masks = (0..1u32 << n).filter(|_| {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        seed >> 62 & 1 == 1
    });
    SetSystem::from_masks(&g, masks).unwrap()
}

proptest! {
    #[test]
    fn pivot_is_an_involution((n, seed) in arb_sized(6), x_raw in any::<u32>()) {
        let a = matrix_from(n, seed);
        let x = VertexSet::from_bits(a.ground(), x_raw & a.ground().full_mask());
        if let Ok(b) = a.ppt(&x) {
            prop_assert_eq!(b.ppt(&x).unwrap(), a);
        }
    }

    #[test]
    fn pivots_compose_by_symmetric_difference(
        (n, seed) in arb_sized(5),
        x_raw in any::<u32>(),
        y_raw in any::<u32>(),
    ) {
        let a = matrix_from(n, seed);
        let full = a.ground().full_mask();
        let x = VertexSet::from_bits(a.ground(), x_raw & full);
        let y = VertexSet::from_bits(a.ground(), y_raw & full);
        if let Ok(b) = a.ppt(&x) {
            if let Ok(c) = b.ppt(&y) {
                let direct = a.ppt(&x.symmetric_difference(&y));
                prop_assert_eq!(direct.unwrap(), c);
            }
        }
    }

    #[test]
    fn rank_plus_nullity_is_dimension((n, seed) in arb_sized(6)) {
        let a = matrix_from(n, seed);
        prop_assert_eq!(a.rank() + a.kernel_basis().len(), n);
    }

    #[test]
    fn family_flips_are_involutions((n, seed) in arb_sized(6), x_raw in any::<u32>()) {
        let m = family_from(n, seed);
        let x = VertexSet::from_bits(m.ground(), x_raw & m.ground().full_mask());
        prop_assert_eq!(m.pivot(&x).pivot(&x), m.clone());
        prop_assert_eq!(m.loop_complement(&x).loop_complement(&x), m.clone());
        prop_assert_eq!(m.dual_pivot(&x).dual_pivot(&x), m);
    }

    #[test]
    fn central_identity_on_random_families((n, seed) in arb_sized(6), x_raw in any::<u32>()) {
        let m = family_from(n, seed);
        let x = VertexSet::from_bits(m.ground(), x_raw & m.ground().full_mask());
        let lhs = m.loop_complement(&x).pivot(&x).loop_complement(&x);
        let rhs = m.pivot(&x).loop_complement(&x).pivot(&x);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, m.dual_pivot(&x));
    }

    #[test]
    fn induced_family_bridges_commute((n, seed) in arb_sized(4), x_raw in any::<u32>()) {
        let g = graph_from(n, seed);
        let x = VertexSet::from_bits(g.ground(), x_raw & g.ground().full_mask());
        let m = g.induced_set_system().unwrap();
        prop_assert_eq!(
            g.loop_complement(&x).induced_set_system().unwrap(),
            m.loop_complement(&x)
        );
        if let Ok(p) = g.pivot(&x) {
            prop_assert_eq!(p.induced_set_system().unwrap(), m.pivot(&x));
        }
    }

    #[test]
    fn words_render_and_reparse((n, seed) in arb_sized(5), picks in prop::collection::vec(any::<u32>(), 0..8)) {
        let g = ground(n);
        let full = g.full_mask();
        let mut tokens = Vec::new();
        for p in picks {
            let args = VertexSet::from_bits(&g, p & full);
            tokens.push(match p >> 29 {
                0 | 1 => OpToken::pivot(args),
                2 | 3 => OpToken::loop_complement(args),
                _ => OpToken::dual_pivot(args),
            });
        }
        let _ = seed;
        let w = Word::from_tokens(&g, tokens);
        let reparsed = Word::parse(&g, &w.to_string()).unwrap();
        prop_assert_eq!(reparsed, w);
    }

    #[test]
    fn normal_form_word_acts_identically((n, seed) in arb_sized(5), picks in prop::collection::vec(any::<u32>(), 0..10)) {
        let g = ground(n);
        let full = g.full_mask();
        let mut tokens = Vec::new();
        for p in picks {
            let args = VertexSet::from_bits(&g, p & full);
            tokens.push(match p >> 30 {
                0 => OpToken::pivot(args),
                1 => OpToken::loop_complement(args),
                _ => OpToken::dual_pivot(args),
            });
        }
        let w = Word::from_tokens(&g, tokens);
        let m = family_from(n, seed);
        let nf = w.normal_form();
        prop_assert!(nf.first_add().is_subset_of(nf.pivot_set()));
        prop_assert_eq!(
            w.apply_to_set_system(&m),
            nf.to_word().apply_to_set_system(&m)
        );
    }

    #[test]
    fn parsers_never_panic_on_arbitrary_input(text in ".*") {
        let g = ground(3);
        let _ = Word::parse(&g, &text);
        let _ = pivot_core::text::parse_graph(&text);
        let _ = pivot_core::text::parse_set_system(&text);
    }

    #[test]
    fn vertex_flip_pairs_respect_matrix_products(
        (n, seed) in arb_sized(4),
        a_bits in 0u8..16,
        b_bits in 0u8..16,
        j_raw in any::<usize>(),
    ) {
        let m = family_from(n, seed);
        let alpha = Flip2x2::new(a_bits & 1 != 0, a_bits & 2 != 0, a_bits & 4 != 0, a_bits & 8 != 0);
        let beta = Flip2x2::new(b_bits & 1 != 0, b_bits & 2 != 0, b_bits & 4 != 0, b_bits & 8 != 0);
        let j = j_raw % n;
        prop_assert_eq!(
            m.vertex_flip_at(alpha, j).vertex_flip_at(beta, j),
            m.vertex_flip_at(beta.mul(alpha), j)
        );
    }
}

mod common;

use common::*;
use gamekit_core::atlas::{self, InterchangeGraph};
use gamekit_core::construct::eulerian_to_game;
use gamekit_core::eulerian::{self, three_cycles};
use gamekit_core::reversal::{self, delta_id, replay};
use gamekit_core::{fixtures, morph, Digraph, Perm};
use proptest::prelude::*;

fn beta(a: &Digraph, b: &Digraph) -> usize {
    eulerian::balance(&delta_id(a, b).unwrap()).unwrap()
}

fn flip(g: &Digraph, c: [usize; 3]) -> Digraph {
    let d = Digraph::from_edges(g.p(), &[(c[0], c[1]), (c[1], c[2]), (c[2], c[0])]).unwrap();
    reversal::reverse_subgraph(g, &d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_replay_step_is_a_game(p in prop::sample::select(vec![5usize, 7, 9]), s in any::<u64>()) {
        let mut r = rng(s);
        let (a, b) = (random_game(p, &mut r), random_game(p, &mut r));
        let plan = reversal::plan_any(&a, &b).unwrap();
        let mut cur = a.clone();
        for c in &plan {
            cur = replay(&cur, std::slice::from_ref(c)).unwrap();
            prop_assert!(cur.is_game() && cur.p() == p);
        }
        prop_assert_eq!(cur, b);
    }
}

#[test]
fn oracle_triangle_at_size_five() {
    let ig = InterchangeGraph::new(5).unwrap();
    for i in 0..ig.len() {
        let dist = ig.bfs(i);
        let a = ig.game(i);
        for j in 0..ig.len() {
            let b = ig.game(j);
            let plan = reversal::plan_optimal(&a, &b).unwrap();
            assert_eq!(replay(&a, &plan).unwrap(), b);
            assert_eq!(plan.len(), beta(&a, &b));
            assert_eq!(plan.len(), dist[j] as usize);
            assert_eq!(plan.len() % 2, delta_id(&a, &b).unwrap().edge_count() % 2);
        }
    }
}

#[test]
fn oracle_triangle_sampled_at_size_seven() {
    let ig = InterchangeGraph::new(7).unwrap();
    let mut r = rng(11);
    for _ in 0..100 {
        let (a, b) = (random_game(7, &mut r), random_game(7, &mut r));
        let dist = ig.bfs(ig.index_of(&a).unwrap());
        let plan = reversal::plan_optimal(&a, &b).unwrap();
        assert_eq!(replay(&a, &plan).unwrap(), b);
        assert_eq!(plan.len(), beta(&a, &b));
        assert_eq!(plan.len(), dist[ig.index_of(&b).unwrap()] as usize);
    }
}

#[test]
fn one_reversal_moves_balance_by_one() {
    let games = atlas::enumerate_games(5).unwrap();
    for target in &games {
        for g in &games {
            let b0 = beta(g, target);
            let moves: Vec<usize> = three_cycles(g).into_iter().map(|c| beta(&flip(g, c), target)).collect();
            assert!(moves.iter().all(|&b| b + 1 == b0 || b == b0 + 1));
            if g != target {
                assert!(moves.iter().any(|&b| b + 1 == b0));
            }
        }
    }
    let mut r = rng(5);
    for _ in 0..20 {
        let (g, target) = (random_game(7, &mut r), random_game(7, &mut r));
        let b0 = beta(&g, &target);
        for c in three_cycles(&g) {
            let b = beta(&flip(&g, c), &target);
            assert!(b + 1 == b0 || b == b0 + 1);
        }
    }
}

#[test]
fn reversing_an_unused_triangle_costs_one() {
    let d = fixtures::chorded_nine_cycle();
    let (g, _) = eulerian_to_game(&d).unwrap();
    let pi = reversal::reverse_subgraph(&g, &d).unwrap();
    assert_eq!(beta(&g, &pi), 6);
    assert_eq!(beta(&flip(&g, [0, 6, 3]), &pi), 7);
}

#[test]
fn enumeration_matches_eulerian_subgraph_count() {
    for g in [Digraph::cycle(3).unwrap(), fixtures::g5(), fixtures::g7_i(), fixtures::g7_iii()] {
        let labeled = atlas::enumerate_keys(g.p()).unwrap().len() as u64;
        assert_eq!(labeled, eulerian::count_eulerian_subgraphs(&g).unwrap());
    }
}

#[test]
fn census_orbit_sizes_sum_to_total() {
    for p in [3, 5, 7] {
        let a = atlas::census(p).unwrap();
        assert!(a.orbit_counts_hold());
        assert_eq!(a.classes.iter().map(|c| c.labeled_count).sum::<u64>(), a.labeled_total);
    }
}

#[test]
fn interchange_graph_laws() {
    for p in [3, 5, 7] {
        let n = p / 2;
        let ig = InterchangeGraph::new(p).unwrap();
        assert_eq!(ig.is_regular(), Some((2 * n + 1) * n * (n + 1) / 6));
        let col = ig.two_coloring().unwrap();
        let base = ig.game(0);
        for i in 0..ig.len() {
            let g = ig.game(i);
            assert_eq!(col[i] as usize, beta(&g, &base) % 2);
            let to_inverse = ig.bfs(i)[ig.index_of(&g.reverse()).unwrap()] as usize;
            assert_eq!(to_inverse, eulerian::balance(&g).unwrap());
        }
    }
}

#[test]
fn parity_follows_permutation_sign() {
    let ig = InterchangeGraph::new(7).unwrap();
    let col = ig.two_coloring().unwrap();
    let mut r = rng(3);
    for _ in 0..50 {
        let g = random_game(7, &mut r);
        let rho = random_perm(7, &mut r);
        let h = g.relabel(&rho);
        let same = col[ig.index_of(&g).unwrap()] == col[ig.index_of(&h).unwrap()];
        assert_eq!(same, rho.is_even());
    }
    let t = Perm::new(vec![1, 0, 2, 3, 4, 5, 6]).unwrap();
    let g = fixtures::g7_i();
    assert_ne!(col[ig.index_of(&g).unwrap()], col[ig.index_of(&g.relabel(&t)).unwrap()]);
}

#[test]
fn steiner_game_off_its_decompositions() {
    let mut cases = 0;
    for c in atlas::census(7).unwrap().classes {
        let g = c.canon;
        if eulerian::steiner_decomposition(&g).is_none() {
            continue;
        }
        let inv = g.reverse();
        let d0 = atlas::interchange_distance(&g, &inv).unwrap();
        for t in three_cycles(&g) {
            let tri = Digraph::from_edges(7, &[(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]).unwrap();
            if eulerian::steiner_decomposition(&g.minus(&tri).unwrap()).is_some() {
                continue;
            }
            cases += 1;
            let moved = flip(&g, t);
            assert_eq!(atlas::interchange_distance(&moved, &inv).unwrap(), d0 + 1);
        }
    }
    assert!(cases > 0);
}

#[test]
fn geodesic_counts_at_least_factorial() {
    let mut r = rng(9);
    for _ in 0..25 {
        let (a, b) = (random_game(7, &mut r), random_game(7, &mut r));
        let d = atlas::interchange_distance(&a, &b).unwrap();
        let f: u128 = (1..=d as u128).product();
        assert!(atlas::geodesic_count(&a, &b).unwrap() >= f);
    }
    let g = fixtures::g7_i();
    assert_eq!(atlas::interchange_distance(&g, &g.reverse()).unwrap(), 9);
    assert!(atlas::geodesic_count(&g, &g.reverse()).unwrap() >= 362_880);
}

#[test]
fn fixed_edge_sets_are_convex() {
    let mut r = rng(1);
    for _ in 0..3 {
        let g = random_game(7, &mut r);
        assert!(atlas::convexity_check(&g, &[0]).unwrap());
        assert!(atlas::convexity_check(&g, &[1, 4]).unwrap());
    }
    let g = fixtures::g7_ii();
    assert!(atlas::convexity_check(&g, &(0..7).collect::<Vec<_>>()).unwrap());
    assert!(atlas::convexity_check(&fixtures::g5(), &[]).unwrap());
    assert_eq!(morph::classify7(&g).unwrap(), morph::GameType::II);
}

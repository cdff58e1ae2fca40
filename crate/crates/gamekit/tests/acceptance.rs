//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gamekit::{cli, report};
use gamekit_core::atlas::{self, InterchangeGraph};
use gamekit_core::construct::{self, Sep};
use gamekit_core::eulerian::{self, three_cycles};
use gamekit_core::groups::{self, cyclic_group, direct_product, GameSubset};
use gamekit_core::morph::{self, GameType};
use gamekit_core::reversal::{self, delta_id, replay};
use gamekit_core::{fixtures, Digraph, Perm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn interval_game(n: usize) -> Digraph {
    Digraph::circulant(2 * n + 1, &(1..=n).collect::<Vec<_>>()).unwrap()
}

fn beta(a: &Digraph, b: &Digraph) -> usize {
    eulerian::balance(&delta_id(a, b).unwrap()).unwrap()
}

fn flip(g: &Digraph, c: [usize; 3]) -> Digraph {
    let d = Digraph::from_edges(g.p(), &[(c[0], c[1]), (c[1], c[2]), (c[2], c[0])]).unwrap();
    reversal::reverse_subgraph(g, &d).unwrap()
}

fn random_tournament(p: usize, r: &mut impl Rng) -> Digraph {
    let m = p * (p - 1) / 2;
    let key = if m == 0 { 0 } else { r.gen::<u64>() >> (64 - m) };
    Digraph::from_upper_key(p, key)
}

fn random_game(p: usize, r: &mut impl Rng) -> Digraph {
    cli::random_game(p, r.gen()).unwrap()
}

/// Union of random edge-disjoint simple cycles.
fn random_eulerian(p: usize, r: &mut impl Rng) -> Digraph {
    let mut used = vec![vec![false; p]; p];
    let mut edges = Vec::new();
    let mut verts: Vec<usize> = (0..p).collect();
    for _ in 0..r.gen_range(1..3 * p) {
        let len = r.gen_range(3..=p);
        verts.shuffle(r);
        let c = &verts[..len];
        if (0..len).all(|k| !used[c[k]][c[(k + 1) % len]]) {
            for k in 0..len {
                let (a, b) = (c[k], c[(k + 1) % len]);
                used[a][b] = true;
                used[b][a] = true;
                edges.push((a, b));
            }
        }
    }
    Digraph::from_edges(p, &edges).unwrap()
}

/// Cyclic triples by direct enumeration.
fn count_cyclic_triples(g: &Digraph) -> usize {
    let p = g.p();
    let mut c = 0;
    for a in 0..p {
        for b in a + 1..p {
            for d in b + 1..p {
                if (g.has(a, b) && g.has(b, d) && g.has(d, a)) || (g.has(a, d) && g.has(d, b) && g.has(b, a)) {
                    c += 1;
                }
            }
        }
    }
    c
}

/// Number of permutations preserving `g`, by scanning all of them.
fn brute_aut_order(g: &Digraph) -> usize {
    let p = g.p();
    let mut perm: Vec<usize> = (0..p).collect();
    let mut count = 0;
    loop {
        if (0..p).all(|i| (0..p).all(|j| g.has(i, j) == g.has(perm[i], perm[j]))) {
            count += 1;
        }
        // next permutation
        let Some(i) = (0..p.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..p).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    count
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let mut argv = vec!["gamekit".into()];
    argv.extend(args.iter().map(|a| a.into()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap())
}

fn census_via_cli(p: usize) -> Result<serde_json::Value, String> {
    serde_json::from_str(&run_cli(&["atlas", "census", &p.to_string()])?).map_err(|e| e.to_string())
}

fn c1_small_uniqueness() -> Outcome {
    let mut detail = Vec::new();
    for (p, expect) in [(3usize, 2u64), (5, 24)] {
        let v = census_via_cli(p)?;
        let classes = v["classes"].as_array().unwrap().len();
        let total = v["labeled_total"].as_u64().unwrap();
        let oracle = eulerian::count_eulerian_subgraphs(&interval_game(p / 2)).unwrap();
        ensure!(classes == 1, "size {p}: {classes} classes");
        ensure!(total == oracle && oracle == expect, "size {p}: total {total}, oracle {oracle}");
        detail.push(format!("p={p}: 1 class, {total} labeled"));
    }
    Ok(detail.join("; "))
}

fn c2_size_seven() -> Outcome {
    let v = census_via_cli(7)?;
    let classes = v["classes"].as_array().unwrap();
    ensure!(classes.len() == 3, "{} classes", classes.len());
    let mut orders: Vec<u64> = classes.iter().map(|c| c["aut_order"].as_u64().unwrap()).collect();
    for c in classes {
        let (aut, count) = (c["aut_order"].as_u64().unwrap(), c["labeled_count"].as_u64().unwrap());
        ensure!(count * aut == 5040, "class with |Aut| {aut} has {count} labels");
    }
    let qr = groups::group_game(&cyclic_group(7).unwrap(), &GameSubset::from_elements(7, &[1, 2, 4])).unwrap();
    let third = brute_aut_order(&qr) as u64;
    orders.sort();
    let mut expect = vec![3, 7, third];
    expect.sort();
    ensure!(orders == expect, "aut orders {orders:?}, expected {expect:?}");
    let total = v["labeled_total"].as_u64().unwrap();
    let oracle = eulerian::count_eulerian_subgraphs(&interval_game(3)).unwrap();
    ensure!(total == oracle, "census {total} vs Eulerian-subgraph oracle {oracle}");
    let rep = report::full_report(7).map_err(|e| e.report())?;
    ensure!(rep.oracles_agree, "report oracles disagree");
    let flagged = rep.discrepancy.as_deref().is_some_and(|d| d.contains("1680"));
    ensure!(flagged == (total != 1680), "published total flag wrong: {:?}", rep.discrepancy);
    let agree = if total == 1680 { "agrees with" } else { "differs from" };
    Ok(format!("3 classes, |Aut| {orders:?}, {total} labeled = oracle; {agree} published 1680"))
}

fn c3_three_cycles() -> Outcome {
    let (za, zb) = fixtures::z3_nine_pair();
    let games = vec![
        Digraph::cycle(3).unwrap(),
        fixtures::g5(),
        fixtures::g7_i(),
        fixtures::g7_ii(),
        fixtures::g7_iii(),
        interval_game(4),
        fixtures::rigid_nine(),
        za,
        zb,
    ];
    for g in &games {
        ensure!(g.is_game(), "fixture of size {} is not a game", g.p());
        let n = g.n();
        let st = eulerian::three_cycle_stats(g);
        ensure!(st.per_vertex.iter().all(|&c| c == n * (n + 1) / 2), "per-vertex counts at size {}", g.p());
        ensure!(st.total == (2 * n + 1) * n * (n + 1) / 6, "total at size {}", g.p());
        ensure!(st.total == count_cyclic_triples(g), "direct count at size {}", g.p());
    }
    let mut r = rng(3);
    for _ in 0..50 {
        let g = random_tournament(r.gen_range(4..=8), &mut r);
        let st = eulerian::three_cycle_stats(&g);
        let direct = count_cyclic_triples(&g);
        ensure!(st.formula_total == direct as i64 && st.total == direct, "score formula on {:?}", g.scores());
    }
    Ok(format!("{} fixture games, 50 random tournaments", games.len()))
}

fn c4_balance_landmarks() -> Outcome {
    for n in 1..=4 {
        let b = eulerian::balance(&interval_game(n)).unwrap();
        ensure!(b == n * n, "beta of interval game n={n} is {b}");
    }
    let mut steiner = 0;
    for c in atlas::census(7).unwrap().classes {
        if eulerian::steiner_decomposition(&c.canon).is_some() {
            steiner += 1;
            let b = eulerian::balance(&c.canon).unwrap();
            ensure!(b == 7, "Steiner class {} has beta {b}", c.canon_hex);
        }
    }
    ensure!(steiner > 0, "no Steiner class at size 7");
    let r = eulerian::span(&fixtures::chorded_nine_cycle()).unwrap();
    ensure!(r.span == 3 && r.balance == 6, "chorded cycle span {} balance {}", r.span, r.balance);
    Ok(format!("n^2 for n=1..4; {steiner} Steiner classes at beta 7; chorded 9-cycle 3/6"))
}

fn c5_planner() -> Outcome {
    let ig5 = InterchangeGraph::new(5).unwrap();
    let mut pairs = 0;
    let check = |a: &Digraph, b: &Digraph, dist: usize| -> Result<(), String> {
        let plan = reversal::plan_optimal(a, b).map_err(|e| e.to_string())?;
        ensure!(replay(a, &plan).unwrap() == *b, "replay misses target");
        ensure!(plan.len() == beta(a, b) && plan.len() == dist, "len {} beta {} bfs {dist}", plan.len(), beta(a, b));
        let parity = delta_id(a, b).unwrap().edge_count() % 2;
        ensure!(plan.len() % 2 == parity, "parity");
        Ok(())
    };
    for i in 0..ig5.len() {
        let dist = ig5.bfs(i);
        for j in 0..ig5.len() {
            if i != j {
                check(&ig5.game(i), &ig5.game(j), dist[j] as usize)?;
                pairs += 1;
            }
        }
    }
    let ig7 = InterchangeGraph::new(7).unwrap();
    let mut r = rng(5);
    for _ in 0..100 {
        let (a, b) = (random_game(7, &mut r), random_game(7, &mut r));
        let d = ig7.bfs(ig7.index_of(&a).unwrap())[ig7.index_of(&b).unwrap()] as usize;
        check(&a, &b, d)?;
    }
    Ok(format!("{pairs} size-5 pairs, 100 size-7 pairs"))
}

fn c6_descent() -> Outcome {
    let games = atlas::enumerate_games(5).unwrap();
    let mut moves = 0;
    for target in &games {
        for g in &games {
            let b0 = beta(g, target);
            let mut down = false;
            for c in three_cycles(g) {
                let b = beta(&flip(g, c), target);
                ensure!(b + 1 == b0 || b == b0 + 1, "move changes beta {b0} -> {b}");
                down |= b + 1 == b0;
                moves += 1;
            }
            ensure!(down || g == target, "no decreasing move");
        }
    }
    Ok(format!("{moves} moves over {} pairs", games.len() * games.len()))
}

fn c7_group_laws() -> Outcome {
    for n in 1..=4 {
        let m = 2 * n + 1;
        let z = cyclic_group(m).unwrap();
        let mut aut = morph::automorphisms(&interval_game(n)).unwrap().perms;
        let mut tr: Vec<Perm> = (0..m).map(|k| z.translation(k)).collect();
        aut.sort();
        tr.sort();
        ensure!(aut == tr, "Aut of interval game n={n} is not the translations");
    }
    let mut subsets = 0;
    for n in 2..=4 {
        let m = 2 * n + 1;
        let z = cyclic_group(m).unwrap();
        let odd = GameSubset::from_elements(m, &(0..n).map(|k| 2 * k + 1).collect::<Vec<_>>()).mask;
        let multiples: Vec<u128> = groups::units(m).into_iter().map(|u| groups::multiply_subset(m, odd, u)).collect();
        for a in groups::enumerate_game_subsets(&z).unwrap() {
            let g = groups::group_game(&z, &a).unwrap();
            let reducible = construct::reducibility_graph(&g).unwrap().0.edge_count() > 0;
            ensure!(reducible == multiples.contains(&a.mask), "Z{m} subset {:?}", a.elements());
            subsets += 1;
        }
    }
    let z3 = cyclic_group(3).unwrap();
    let z33 = direct_product(&z3, &z3).unwrap();
    for a in groups::enumerate_game_subsets(&z33).unwrap() {
        let g = groups::group_game(&z33, &a).unwrap();
        ensure!(construct::reducibility_graph(&g).unwrap().0.edge_count() == 0, "reducible Z3xZ3 game");
        subsets += 1;
    }
    for m in [9, 15, 21, 25, 27] {
        ensure!(groups::units_act_freely(m).unwrap() == groups::is_fermat_square_free(m), "Fermat equivalence at {m}");
    }
    for p in [7, 11, 19] {
        let q = groups::group_game(&cyclic_group(p).unwrap(), &groups::quadratic_residue_subset(p).unwrap()).unwrap();
        let n = (p - 1) / 2;
        let subs: Vec<Digraph> = (0..p).flat_map(|v| [q.out_row(v), q.in_row(v)]).map(|s| q.restrict_mask(s).0).collect();
        ensure!(subs.iter().all(|s| s.is_game() && s.p() == n), "QR{p} neighbourhood not a game");
        for s in &subs[1..] {
            ensure!(morph::are_isomorphic(&subs[0], s).unwrap().is_some(), "QR{p} neighbourhoods differ");
        }
        let zn = cyclic_group(n).unwrap();
        let cyclic = groups::enumerate_game_subsets(&zn)
            .unwrap()
            .into_iter()
            .any(|a| morph::are_isomorphic(&groups::group_game(&zn, &a).unwrap(), &subs[0]).unwrap().is_some());
        ensure!(cyclic, "QR{p} neighbourhood is not a cyclic group game");
    }
    Ok(format!("translations n<=4; {subsets} group games checked; Fermat 5 moduli; QR 7/11/19"))
}

fn c8_size_nine() -> Outcome {
    let z9 = cyclic_group(9).unwrap();
    let subs = groups::enumerate_game_subsets(&z9).unwrap();
    ensure!(subs.len() == 16, "{} game subsets of Z9", subs.len());
    // isomorphism classes by canonical form, each labelled by its type
    let mut classes: Vec<(String, GameType, usize)> = Vec::new();
    for a in &subs {
        let t = morph::classify9_group(&z9, a).unwrap();
        let hex = morph::canonical_form(&groups::group_game(&z9, a).unwrap()).unwrap().hex();
        match classes.iter_mut().find(|c| c.0 == hex) {
            Some(c) => {
                ensure!(c.1 == t, "one class carries two types");
                c.2 += 1;
            }
            None => classes.push((hex, t, 1)),
        }
    }
    let mut split: Vec<(GameType, usize)> = classes.iter().map(|c| (c.1, c.2)).collect();
    split.sort_by_key(|c| c.0.name());
    let sizes: Vec<usize> = split.iter().map(|c| c.1).collect();
    ensure!(classes.len() == 3 && sizes == [6, 6, 4], "Z9 split {split:?}");

    let z3 = cyclic_group(3).unwrap();
    let z33 = direct_product(&z3, &z3).unwrap();
    let c3c3 = construct::lex_product(&Digraph::cycle(3).unwrap(), &Digraph::cycle(3).unwrap()).unwrap();
    let order_three: Vec<u128> = (1..9).map(|x| 1u128 | 1 << x | 1 << z33.mul(x, x)).collect();
    let subs = groups::enumerate_game_subsets(&z33).unwrap();
    for a in &subs {
        let g = groups::group_game(&z33, a).unwrap();
        let found = order_three.iter().find_map(|&h| groups::lex_factorization_check(&z33, h, a).ok());
        let Some((w, prod)) = found else { return Err(format!("no factorisation for {:?}", a.elements())) };
        ensure!(g.relabel(&w) == prod, "map is not an isomorphism");
        ensure!(morph::are_isomorphic(&prod, &c3c3).unwrap().is_some(), "product is not C3 x C3");
    }
    ensure!(subs.len() == 16, "{} game subsets of Z3xZ3", subs.len());
    let aut = morph::automorphisms(&c3c3).unwrap().order();
    let brute = brute_aut_order(&c3c3);
    ensure!(aut == 81 && brute == 81, "|Aut(C3 x C3)| = {aut}, brute force {brute}");
    Ok(format!("Z9 types {:?}; 16 Z3xZ3 factorisations; |Aut| 81", split))
}

fn check_pointed(gp: &Digraph, gm: &Digraph) -> Result<(), String> {
    let pg = construct::realize_pointed(gp, gm).map_err(|e| e.to_string())?;
    ensure!(pg.g.is_game(), "not a game");
    ensure!(pg.g.restrict(&pg.plus).unwrap().0 == *gp, "plus half differs");
    ensure!(pg.g.restrict(&pg.minus).unwrap().0 == *gm, "minus half differs");
    ensure!(pg.minus.iter().all(|&v| pg.g.has(pg.base, v)), "base misses its out-set");
    ensure!(pg.plus.iter().all(|&v| pg.g.has(v, pg.base)), "base misses its in-set");
    Ok(())
}

fn c9_pointed() -> Outcome {
    for a in 0..8u64 {
        for b in 0..8u64 {
            check_pointed(&Digraph::from_upper_key(3, a), &Digraph::from_upper_key(3, b))?;
        }
    }
    let mut r = rng(9);
    for _ in 0..50 {
        check_pointed(&random_tournament(4, &mut r), &random_tournament(4, &mut r))?;
    }
    Ok("64 pairs on 3+3, 50 on 4+4".into())
}

fn c10_completion() -> Outcome {
    let mut r = rng(10);
    let mut steps = 0;
    for p in [7, 9] {
        for _ in 0..100 {
            let d = random_eulerian(p, &mut r);
            let (g, trace) = construct::eulerian_to_game(&d).map_err(|e| e.to_string())?;
            ensure!(g.is_game() && d.is_subgraph_of(&g), "completion lost the input");
            ensure!(trace.windows(2).all(|w| w[1] < w[0]), "deviation not strictly decreasing: {trace:?}");
            ensure!(trace.last() == Some(&0), "final deviation nonzero");
            steps += trace.len() - 1;
        }
    }
    Ok(format!("200 digraphs, {steps} corrections"))
}

fn c11_interchange() -> Outcome {
    let mut notes = Vec::new();
    for p in [5, 7] {
        let n = p / 2;
        let ig = InterchangeGraph::new(p).unwrap();
        let deg = ig.is_regular();
        ensure!(deg == Some((2 * n + 1) * n * (n + 1) / 6), "size {p} degree {deg:?}");
        let col = ig.two_coloring().ok_or("not bipartite")?;
        let base = ig.game(0);
        for i in 0..ig.len() {
            let g = ig.game(i);
            ensure!(col[i] as usize == beta(&g, &base) % 2, "colour is not parity");
            let d = ig.bfs(i)[ig.index_of(&g.reverse()).unwrap()] as usize;
            ensure!(d == eulerian::balance(&g).unwrap(), "d(g, g^-1) != beta(g)");
        }
        let diam = atlas::diameter(p).unwrap().value;
        notes.push(format!("p={p} diameter {diam} (n^2 = {})", n * n));
    }
    let mut r = rng(11);
    for _ in 0..25 {
        let (a, b) = (random_game(7, &mut r), random_game(7, &mut r));
        let d = atlas::interchange_distance(&a, &b).unwrap();
        let fact: u128 = (1..=d as u128).product();
        ensure!(atlas::geodesic_count(&a, &b).unwrap() >= fact, "fewer than d! geodesics");
    }
    for g in atlas::enumerate_games(5).unwrap() {
        for q in 0..32u32 {
            let qs: Vec<usize> = (0..5).filter(|&v| q >> v & 1 == 1).collect();
            ensure!(atlas::convexity_check(&g, &qs).unwrap(), "size-5 fiber not convex");
        }
    }
    for _ in 0..3 {
        let g = random_game(7, &mut r);
        for qs in [vec![], vec![0], vec![2, 5]] {
            ensure!(atlas::convexity_check(&g, &qs).unwrap(), "size-7 fiber not convex");
        }
    }
    Ok(notes.join("; "))
}

fn c12_universal() -> Outcome {
    let s1 = construct::saturate(&Digraph::empty(1).unwrap()).map_err(|e| e.to_string())?;
    let s2 = construct::saturate(&s1).map_err(|e| e.to_string())?;
    ensure!(s1.p() == 3 && s2.p() == 11, "stage sizes {} and {}", s1.p(), s2.p());
    for t0 in 0..1u64 << s1.p() {
        ensure!(matches!(construct::has_sep(&s2, t0).unwrap(), Sep::Witness(_)), "sep fails for {t0:b}");
    }
    let mut outside = 0;
    for key in 0..8u64 {
        let pi = Digraph::from_upper_key(3, key);
        for x in 0..3 {
            for y in 0..s2.p() {
                match construct::extend_embedding(&pi, &[x], &[y], &s2) {
                    Ok(img) => {
                        let rho = |v: usize| img[v];
                        ensure!(img[x] == y, "anchor moved");
                        let ok = (0..3).all(|i| (0..3).all(|j| i == j || pi.has(i, j) == s2.has(rho(i), rho(j))));
                        ensure!(ok, "not an embedding");
                    }
                    Err(e) => {
                        ensure!(y >= s1.p(), "anchor {x}->{y} in stage 1 failed: {e}");
                        outside += 1;
                    }
                }
            }
        }
    }
    Ok(format!("sizes 3, 11; sep on all 8 subsets; 72 stage-1 anchors embed ({outside}/192 later anchors do not)"))
}

fn c13_pathologies() -> Outcome {
    let (pi, gamma) = fixtures::twin_double_pair();
    ensure!(morph::are_isomorphic(&pi, &gamma).unwrap().is_none(), "twin tournaments isomorphic");
    let (a, b) = (construct::double(&pi).unwrap().0, construct::double(&gamma).unwrap().0);
    ensure!(morph::are_isomorphic(&a, &b).unwrap().is_some(), "twin doubles differ");

    let g9 = fixtures::rigid_nine();
    ensure!(g9.is_game() && g9.p() == 9 && morph::is_rigid(&g9).unwrap(), "size-9 fixture not rigid");
    let g13 = fixtures::rigid_thirteen();
    ensure!(g13.is_game() && g13.p() == 13 && morph::is_rigid(&g13).unwrap(), "size-13 fixture not rigid");
    ensure!(morph::are_isomorphic(&g13, &g13.reverse()).unwrap().is_none(), "size-13 fixture self-reverse");

    let (z, zbar) = fixtures::z3_nine_pair();
    ensure!(morph::are_isomorphic(&z, &zbar).unwrap().is_none(), "size-9 pair isomorphic");
    let orders = (morph::automorphisms(&z).unwrap().order(), morph::automorphisms(&zbar).unwrap().order());
    ensure!(orders == (3, 3) && brute_aut_order(&z) == 3 && brute_aut_order(&zbar) == 3, "|Aut| {orders:?}");

    let (pi, ra, rb) = fixtures::two_reductions();
    let (big, lay) = construct::double(&pi).unwrap();
    let x = construct::reduce(&big, lay.minus[0], lay.plus[0]).unwrap().0;
    let y = construct::reduce(&big, lay.minus[4], lay.plus[4]).unwrap().0;
    ensure!(morph::are_isomorphic(&x, &ra).unwrap().is_some() && morph::are_isomorphic(&y, &rb).unwrap().is_some(), "reductions");
    ensure!(morph::are_isomorphic(&x, &y).unwrap().is_none(), "the two reductions are isomorphic");
    Ok("twin doubles; rigid 9 and 13; Aut-3 pair; two reductions".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "uniqueness at sizes 3 and 5", limit: secs(1), check: c1_small_uniqueness },
        Criterion { id: 2, name: "size-7 classification", limit: secs(30), check: c2_size_seven },
        Criterion { id: 3, name: "3-cycle formulas", limit: None, check: c3_three_cycles },
        Criterion { id: 4, name: "balance landmarks", limit: secs(60), check: c4_balance_landmarks },
        Criterion { id: 5, name: "planner optimality and parity", limit: None, check: c5_planner },
        Criterion { id: 6, name: "descent law at size 5", limit: None, check: c6_descent },
        Criterion { id: 7, name: "group-game laws", limit: secs(60), check: c7_group_laws },
        Criterion { id: 8, name: "size-9 algebra", limit: None, check: c8_size_nine },
        Criterion { id: 9, name: "pointed realization", limit: None, check: c9_pointed },
        Criterion { id: 10, name: "Eulerian completion", limit: None, check: c10_completion },
        Criterion { id: 11, name: "interchange analytics", limit: None, check: c11_interchange },
        Criterion { id: 12, name: "universal stages", limit: secs(1), check: c12_universal },
        Criterion { id: 13, name: "isomorphism pathologies", limit: None, check: c13_pathologies },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let res = match (res, c.limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match res {
            Ok(d) => println!("[PASS] {:>2} {} ({d}) {took:.2?}", c.id, c.name),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {:>2} {}: {e} {took:.2?}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

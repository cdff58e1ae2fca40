#![allow(dead_code)]

use gamekit_core::eulerian::three_cycles;
use gamekit_core::Digraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tournament(p: usize, r: &mut impl Rng) -> Digraph {
    let m = p * (p - 1) / 2;
    let key = if m == 0 { 0 } else { r.gen::<u64>() >> (64 - m) };
    Digraph::from_upper_key(p, key)
}

/// A random walk of 3-cycle reversals from the cyclic game.
pub fn random_game(p: usize, r: &mut impl Rng) -> Digraph {
    let n = p / 2;
    let mut g = Digraph::circulant(p, &(1..=n).collect::<Vec<_>>()).unwrap();
    for _ in 0..4 * p * p {
        let cs = three_cycles(&g);
        if cs.is_empty() {
            break;
        }
        let c = cs[r.gen_range(0..cs.len())];
        let d = Digraph::from_edges(p, &[(c[0], c[1]), (c[1], c[2]), (c[2], c[0])]).unwrap();
        g = gamekit_core::reversal::reverse_subgraph(&g, &d).unwrap();
    }
    g
}

/// A union of random edge-disjoint simple cycles.
pub fn random_eulerian(p: usize, r: &mut impl Rng) -> Digraph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![vec![false; p]; p];
    let tries = r.gen_range(0..3 * p);
    let mut verts: Vec<usize> = (0..p).collect();
    for _ in 0..tries {
        let len = r.gen_range(3..=p.max(3));
        if len > p {
            continue;
        }
        verts.shuffle(r);
        let c = &verts[..len];
        let ok = (0..len).all(|k| !used[c[k]][c[(k + 1) % len]]);
        if ok {
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

pub fn random_perm(p: usize, r: &mut impl Rng) -> gamekit_core::Perm {
    let mut v: Vec<usize> = (0..p).collect();
    v.shuffle(r);
    gamekit_core::Perm::new(v).unwrap()
}

/// All permutations of `0..p` (lexicographic).
pub fn all_perms(p: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; p], &mut out);
    out
}

/// All labeled tournaments on `p` vertices.
pub fn all_tournaments(p: usize) -> Vec<Digraph> {
    let m = p * (p - 1) / 2;
    (0..1u64 << m).map(|k| Digraph::from_upper_key(p, k)).collect()
}

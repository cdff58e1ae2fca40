//! Exhaustive tables of labeled games and their interchange graph.
//!
//! Labeled games are stored by [`Digraph::upper_key`]; sets of them are
//! sorted key vectors searched by bisection.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::eulerian;
use crate::morph;
use crate::reversal::flip_cycle;

/// Limits for exhaustive work.
#[derive(Clone, Copy, Debug)]
pub struct AtlasOptions {
    pub max_games: usize,
    /// Largest size for which the interchange graph is built in memory.
    pub max_graph_p: usize,
    /// Node budget for implicit breadth-first searches.
    pub max_bfs_nodes: usize,
}

impl Default for AtlasOptions {
    fn default() -> Self {
        AtlasOptions { max_games: 4_000_000, max_graph_p: 7, max_bfs_nodes: 4_000_000 }
    }
}

/// Upper-triangle keys of every labeled game on `p` vertices, ascending.
pub fn enumerate_keys(p: usize) -> Result<Vec<u64>> {
    enumerate_keys_with(p, &AtlasOptions::default())
}

pub fn enumerate_keys_with(p: usize, opts: &AtlasOptions) -> Result<Vec<u64>> {
    if p % 2 == 0 {
        return Err(Error::EvenSize);
    }
    if p > 11 {
        return Err(Error::TooLarge);
    }
    let n = p / 2;
    let mut pairs = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            pairs.push((i, j));
        }
    }
    let mut st = Enum { n, pairs, out: vec![0; p], inn: vec![0; p], keys: Vec::new(), max: opts.max_games };
    st.go(0, 0)?;
    let mut keys = st.keys;
    keys.sort_unstable();
    Ok(keys)
}

struct Enum {
    n: usize,
    pairs: Vec<(usize, usize)>,
    out: Vec<usize>,
    inn: Vec<usize>,
    keys: Vec<u64>,
    max: usize,
}

impl Enum {
    fn go(&mut self, k: usize, key: u64) -> Result<()> {
        if k == self.pairs.len() {
            if self.keys.len() >= self.max {
                return Err(Error::BudgetExceeded);
            }
            self.keys.push(key);
            return Ok(());
        }
        let (i, j) = self.pairs[k];
        for forward in [false, true] {
            let (a, b) = if forward { (i, j) } else { (j, i) };
            self.out[a] += 1;
            self.inn[b] += 1;
            let n = self.n;
            let ok = |v: usize, s: &Enum| s.out[v] <= n && s.inn[v] <= n;
            if ok(a, self) && ok(b, self) {
                let r = self.go(k + 1, if forward { key | 1 << k } else { key });
                if r.is_err() {
                    self.out[a] -= 1;
                    self.inn[b] -= 1;
                    return r;
                }
            }
            self.out[a] -= 1;
            self.inn[b] -= 1;
        }
        Ok(())
    }
}

/// Every labeled game on `p` vertices, in ascending key order.
pub fn enumerate_games(p: usize) -> Result<Vec<Digraph>> {
    Ok(enumerate_keys(p)?.into_iter().map(|k| Digraph::from_upper_key(p, k)).collect())
}

/// One isomorphism class in a census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    /// Canonical representative.
    pub canon: Digraph,
    pub canon_hex: String,
    pub aut_order: usize,
    pub labeled_count: u64,
}

#[derive(Clone, Debug)]
pub struct Atlas {
    pub p: usize,
    pub keys: Vec<u64>,
    /// Sorted by canonical hex.
    pub classes: Vec<ClassEntry>,
    pub labeled_total: u64,
}

impl Atlas {
    /// Does every class have `p! / |Aut|` labeled members?
    pub fn orbit_counts_hold(&self) -> bool {
        let f: u64 = (1..=self.p as u64).product();
        self.classes.iter().all(|c| c.labeled_count * c.aut_order as u64 == f)
    }
}

/// Enumerate and sort into isomorphism classes.
pub fn census(p: usize) -> Result<Atlas> {
    census_with(p, &AtlasOptions::default())
}

pub fn census_with(p: usize, opts: &AtlasOptions) -> Result<Atlas> {
    let keys = enumerate_keys_with(p, opts)?;
    let mut counts: BTreeMap<Digraph, u64> = BTreeMap::new();
    for &k in &keys {
        let c = morph::canonical_form(&Digraph::from_upper_key(p, k))?;
        *counts.entry(c.graph).or_insert(0) += 1;
    }
    let mut classes = Vec::new();
    for (canon, labeled_count) in counts {
        let aut_order = morph::automorphisms(&canon)?.order();
        let canon_hex = morph::matrix_hex(&canon);
        classes.push(ClassEntry { canon, canon_hex, aut_order, labeled_count });
    }
    classes.sort_by(|a, b| a.canon_hex.cmp(&b.canon_hex));
    Ok(Atlas { p, labeled_total: keys.len() as u64, keys, classes })
}

/// Games one 3-cycle reversal away, in the order of [`eulerian::three_cycles`].
pub fn interchange_neighbors(g: &Digraph) -> Vec<Digraph> {
    eulerian::three_cycles(g)
        .into_iter()
        .map(|c| {
            let mut h = g.clone();
            flip_cycle(&mut h, &c);
            h
        })
        .collect()
}

/// The interchange graph on all labeled games of one size, held in memory.
#[derive(Clone, Debug)]
pub struct InterchangeGraph {
    pub p: usize,
    pub keys: Vec<u64>,
    pub adj: Vec<Vec<u32>>,
}

impl InterchangeGraph {
    pub fn new(p: usize) -> Result<InterchangeGraph> {
        Self::with_options(p, &AtlasOptions::default())
    }

    pub fn with_options(p: usize, opts: &AtlasOptions) -> Result<InterchangeGraph> {
        if p > opts.max_graph_p {
            return Err(Error::BudgetExceeded);
        }
        let keys = enumerate_keys_with(p, opts)?;
        let mut adj = Vec::with_capacity(keys.len());
        for &k in &keys {
            let g = Digraph::from_upper_key(p, k);
            let mut row: Vec<u32> = interchange_neighbors(&g)
                .iter()
                .map(|h| keys.binary_search(&h.upper_key()).expect("neighbor is a game") as u32)
                .collect();
            row.sort_unstable();
            adj.push(row);
        }
        Ok(InterchangeGraph { p, keys, adj })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn index_of(&self, g: &Digraph) -> Option<usize> {
        if g.p() != self.p {
            return None;
        }
        self.keys.binary_search(&g.upper_key()).ok()
    }

    pub fn game(&self, idx: usize) -> Digraph {
        Digraph::from_upper_key(self.p, self.keys[idx])
    }

    /// Distances from `src`; `u32::MAX` marks unreachable nodes.
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        let mut q = VecDeque::new();
        dist[src] = 0;
        q.push_back(src);
        while let Some(x) = q.pop_front() {
            for &y in &self.adj[x] {
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = dist[x] + 1;
                    q.push_back(y as usize);
                }
            }
        }
        dist
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|r| r.len() == d).then_some(d)
    }

    /// Proper 2-colouring from node 0, or `None`.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut col = vec![u8::MAX; self.len()];
        for s in 0..self.len() {
            if col[s] != u8::MAX {
                continue;
            }
            col[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &self.adj[x] {
                    let y = y as usize;
                    if col[y] == u8::MAX {
                        col[y] = 1 - col[x];
                        q.push_back(y);
                    } else if col[y] == col[x] {
                        return None;
                    }
                }
            }
        }
        Some(col)
    }
}

fn check_pair(a: &Digraph, b: &Digraph) -> Result<()> {
    if a.p() != b.p() {
        return Err(Error::SizeMismatch);
    }
    a.check_game()?;
    b.check_game()?;
    if a.p() > 11 {
        return Err(Error::TooLarge);
    }
    Ok(())
}

/// Breadth-first search from `a` until the layer holding `b` is complete;
/// returns the distance and the number of shortest paths.
fn bfs_between(a: &Digraph, b: &Digraph, budget: usize) -> Result<(usize, u128)> {
    check_pair(a, b)?;
    let p = a.p();
    let target = b.upper_key();
    let mut count: BTreeMap<u64, u128> = BTreeMap::new();
    let mut seen: BTreeMap<u64, ()> = BTreeMap::new();
    let mut layer = vec![a.upper_key()];
    count.insert(layer[0], 1);
    seen.insert(layer[0], ());
    let mut d = 0;
    loop {
        if let Some(&c) = count.get(&target) {
            return Ok((d, c));
        }
        if layer.is_empty() {
            return Err(Error::NotConnected);
        }
        let mut next: BTreeMap<u64, u128> = BTreeMap::new();
        for &k in &layer {
            let c = count[&k];
            for h in interchange_neighbors(&Digraph::from_upper_key(p, k)) {
                let hk = h.upper_key();
                if seen.contains_key(&hk) {
                    continue;
                }
                let e = next.entry(hk).or_insert(0);
                *e = e.saturating_add(c);
            }
        }
        for &k in next.keys() {
            seen.insert(k, ());
        }
        if seen.len() > budget {
            return Err(Error::BudgetExceeded);
        }
        count = next;
        layer = count.keys().copied().collect();
        d += 1;
    }
}

/// Number of 3-cycle reversals needed to turn `a` into `b`, by search.
pub fn interchange_distance(a: &Digraph, b: &Digraph) -> Result<usize> {
    Ok(bfs_between(a, b, AtlasOptions::default().max_bfs_nodes)?.0)
}

/// Number of shortest reversal sequences from `a` to `b` (saturating).
pub fn geodesic_count(a: &Digraph, b: &Digraph) -> Result<u128> {
    Ok(bfs_between(a, b, AtlasOptions::default().max_bfs_nodes)?.1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diameter {
    pub value: usize,
    pub a: Digraph,
    pub b: Digraph,
}

/// Exact diameter of the interchange graph: eccentricities are constant on
/// relabelling orbits, so one search per isomorphism class suffices.
pub fn diameter(p: usize) -> Result<Diameter> {
    diameter_with(p, &AtlasOptions::default())
}

pub fn diameter_with(p: usize, opts: &AtlasOptions) -> Result<Diameter> {
    let ig = InterchangeGraph::with_options(p, opts)?;
    let atlas = census_with(p, opts)?;
    let mut best: Option<Diameter> = None;
    for c in &atlas.classes {
        let src = ig.index_of(&c.canon).ok_or(Error::NotGame)?;
        let dist = ig.bfs(src);
        if dist.contains(&u32::MAX) {
            return Err(Error::NotConnected);
        }
        let (far, &d) = dist.iter().enumerate().max_by_key(|&(i, d)| (*d, core::cmp::Reverse(i))).unwrap();
        if best.as_ref().map_or(true, |b| d as usize > b.value) {
            best = Some(Diameter { value: d as usize, a: c.canon.clone(), b: ig.game(far) });
        }
    }
    best.ok_or(Error::NotGame)
}

/// The two colour classes of the interchange graph, as sorted keys. The class
/// of the least key comes first.
pub fn parity_bipartition(p: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    let ig = InterchangeGraph::new(p)?;
    let col = ig.two_coloring().ok_or(Error::NotBipartite)?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, &k) in ig.keys.iter().enumerate() {
        if col[i] == 0 { a.push(k) } else { b.push(k) }
    }
    Ok((a, b))
}

/// Games agreeing with `pi` on every edge meeting `q`.
pub fn games_fixing(ig: &InterchangeGraph, pi: &Digraph, q: &[usize]) -> Vec<usize> {
    (0..ig.len())
        .filter(|&i| {
            let g = ig.game(i);
            q.iter().all(|&x| g.out_row(x) == pi.out_row(x))
        })
        .collect()
}

/// Is the set of games fixing every edge at `q` convex: connected by
/// geodesics, each of which stays inside?
///
/// Checked step by step: for members `s`, `t` every neighbour of `s` one
/// step closer to `t` must be a member.
pub fn convexity_check(pi: &Digraph, q: &[usize]) -> Result<bool> {
    pi.check_game()?;
    if let Some(&x) = q.iter().find(|&&x| x >= pi.p()) {
        return Err(Error::VertexOutOfRange(x));
    }
    let ig = InterchangeGraph::new(pi.p())?;
    let members = games_fixing(&ig, pi, q);
    let mut inside = vec![false; ig.len()];
    for &m in &members {
        inside[m] = true;
    }
    for &t in &members {
        let dist = ig.bfs(t);
        for &s in &members {
            if dist[s] == u32::MAX {
                return Ok(false);
            }
            let ok = ig.adj[s].iter().all(|&w| dist[w as usize] + 1 != dist[s] || inside[w as usize]);
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counting formulas for games of size `2n + 1`, with exact counts where
/// enumeration is affordable.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub n: usize,
    pub binom: u128,
    /// `2^(n(n-1))`, the lower bound on pointed games.
    pub pointed_lower_bound: u128,
    /// `C(2n, n) * 2^(n(n-1))`.
    pub lower_bound_games: u128,
    /// `2^(n(n-1)) / ((2n+1) (n!)^2)` as numerator and denominator.
    pub is_lower_bound: (u128, u128),
    /// Games with base 0 beating exactly `1..=n`.
    pub pointed_count: Option<u64>,
    pub total: Option<u64>,
    /// `total == C(2n, n) * pointed_count`.
    pub identity_holds: Option<bool>,
    /// Figures printed in the literature for comparison (size 7 only).
    pub published_pointed: Option<u64>,
    pub published_total: Option<u64>,
}

impl CountReport {
    pub fn is_lower_bound_f64(&self) -> f64 {
        self.is_lower_bound.0 as f64 / self.is_lower_bound.1 as f64
    }

    /// False when the enumerated counts differ from published figures.
    pub fn agrees_with_published(&self) -> Option<bool> {
        Some(self.published_total? == self.total? && self.published_pointed? == self.pointed_count?)
    }
}

pub fn count_report(n: usize) -> Result<CountReport> {
    if n > 10 {
        return Err(Error::TooLarge);
    }
    let binom: u128 = (0..n as u128).fold(1, |acc, i| acc * (2 * n as u128 - i) / (i + 1));
    let pointed_lower_bound = 1u128 << (n * n.saturating_sub(1));
    let fact: u128 = (1..=n as u128).product();
    let (mut num, mut den) = (pointed_lower_bound, (2 * n as u128 + 1) * fact * fact);
    let g = gcd(num, den);
    num /= g;
    den /= g;
    let (pointed_count, total) = if n <= 4 {
        let p = 2 * n + 1;
        let keys = enumerate_keys(p)?;
        let minus: u64 = ((1u64 << n) - 1) << 1;
        let pointed = keys.iter().filter(|&&k| Digraph::from_upper_key(p, k).out_row(0) == minus).count() as u64;
        (Some(pointed), Some(keys.len() as u64))
    } else {
        (None, None)
    };
    let identity_holds = match (pointed_count, total) {
        (Some(pc), Some(t)) => Some(t as u128 == binom * pc as u128),
        _ => None,
    };
    let (published_pointed, published_total) = if n == 3 { (Some(84), Some(1680)) } else { (None, None) };
    Ok(CountReport {
        n,
        binom,
        pointed_lower_bound,
        lower_bound_games: binom * pointed_lower_bound,
        is_lower_bound: (num, den),
        pointed_count,
        total,
        identity_holds,
        published_pointed,
        published_total,
    })
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

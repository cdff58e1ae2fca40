//! Cycle decompositions, spans and balances, strong components, cycle
//! counting and 3-cycle covers.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{bits, full_mask, Digraph};
use crate::error::{Error, Result};

/// A cycle as its vertex sequence; the closing edge is implicit.
pub type Cycle = Vec<usize>;

/// Rotate a cycle so it starts at its least vertex.
pub fn normalize_cycle(c: &[usize]) -> Cycle {
    if c.is_empty() {
        return Vec::new();
    }
    let k = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c[k..].iter().chain(c[..k].iter()).copied().collect()
}

/// The cycle as a digraph on `p` vertices.
pub fn cycle_edges(p: usize, c: &[usize]) -> Result<Digraph> {
    let e: Vec<_> = (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect();
    Digraph::from_edges(p, &e)
}

/// True iff `c` is a simple cycle (length >= 2 distinct vertices) of `g`.
pub fn is_cycle_of(g: &Digraph, c: &[usize]) -> bool {
    if c.len() < 2 {
        return false;
    }
    let mut seen = 0u64;
    for &v in c {
        if v >= g.p() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..c.len()).all(|i| g.has(c[i], c[(i + 1) % c.len()]))
}

/// Checks that `cycles` are pairwise edge-disjoint cycles whose union is `d`.
pub fn is_decomposition_of(d: &Digraph, cycles: &[Cycle]) -> bool {
    let mut rest = d.clone();
    for c in cycles {
        if c.len() < 2 || !is_cycle_of(&rest, c) {
            return false;
        }
        for i in 0..c.len() {
            rest.remove(c[i], c[(i + 1) % c.len()]);
        }
    }
    rest.is_edgeless()
}

/// Greedy decomposition: walk along least remaining out-edges from the least
/// remaining edge and cut off the first closed loop.
pub fn cycle_decomposition(d: &Digraph) -> Result<Vec<Cycle>> {
    if !d.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let mut rest = d.clone();
    let mut out = Vec::new();
    while let Some(start) = (0..rest.p()).find(|&i| rest.out_row(i) != 0) {
        let mut walk = vec![start];
        let mut pos = vec![usize::MAX; rest.p()];
        pos[start] = 0;
        loop {
            let x = *walk.last().unwrap();
            let y = rest.out_row(x).trailing_zeros() as usize;
            if pos[y] != usize::MAX {
                let c: Cycle = walk[pos[y]..].to_vec();
                for i in 0..c.len() {
                    rest.remove(c[i], c[(i + 1) % c.len()]);
                }
                out.push(c);
                break;
            }
            pos[y] = walk.len();
            walk.push(y);
        }
    }
    Ok(out)
}

/// Closed edge-simple walk through every edge (Hierholzer), starting at the
/// least non-isolated vertex. The first vertex is repeated at the end.
pub fn euler_trail(d: &Digraph) -> Result<Vec<usize>> {
    if !d.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let support = d.support();
    if support == 0 {
        return Ok(Vec::new());
    }
    let start = support.trailing_zeros() as usize;
    // Eulerian graphs are strongly connected on each weak component.
    if reach_from(d, start) & support != support {
        return Err(Error::NotConnected);
    }
    let mut rest = d.clone();
    let mut stack = vec![start];
    let mut trail = Vec::new();
    while let Some(&x) = stack.last() {
        let row = rest.out_row(x);
        if row == 0 {
            trail.push(x);
            stack.pop();
        } else {
            let y = row.trailing_zeros() as usize;
            rest.remove(x, y);
            stack.push(y);
        }
    }
    trail.reverse();
    Ok(trail)
}

/// Vertices reachable from `v` (including `v`).
pub fn reach_from(g: &Digraph, v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for x in bits(frontier) {
            next |= g.out_row(x);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// Span, balance and a maximum decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompReport {
    pub edge_count: usize,
    pub span: usize,
    pub balance: usize,
    pub witness: Vec<Cycle>,
}

/// Search limits for [`span_with`].
#[derive(Clone, Copy, Debug)]
pub struct SpanOptions {
    /// Maximum number of memoised states before giving up.
    pub max_states: usize,
}

impl Default for SpanOptions {
    fn default() -> Self {
        SpanOptions { max_states: 20_000_000 }
    }
}

/// Exact maximum decomposition.
pub fn span(d: &Digraph) -> Result<DecompReport> {
    span_with(d, SpanOptions::default())
}

pub fn span_with(d: &Digraph, opts: SpanOptions) -> Result<DecompReport> {
    if !d.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let mut s = SpanSolver::new(d, opts)?;
    let all = s.all;
    let span = s.solve(all)? as usize;
    let witness = s.witness(all);
    let m = d.edge_count();
    Ok(DecompReport { edge_count: m, span, balance: m - 2 * span, witness })
}

/// Balance `|d| - 2 span(d)`.
pub fn balance(d: &Digraph) -> Result<usize> {
    Ok(span(d)?.balance)
}

/// Cheap bounds on the span for inputs too large for the exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanBounds {
    pub edge_count: usize,
    pub span_lower: usize,
    pub span_upper: usize,
}

impl SpanBounds {
    pub fn balance_lower(&self) -> usize {
        self.edge_count - 2 * self.span_upper
    }

    pub fn balance_upper(&self) -> usize {
        self.edge_count - 2 * self.span_lower
    }
}

/// Lower bound from the greedy decomposition and `ceil(|d|/p)` (no cycle is
/// longer than `p`); upper bound `floor(|d|/3)`.
pub fn span_bounds(d: &Digraph) -> Result<SpanBounds> {
    let greedy = cycle_decomposition(d)?.len();
    let m = d.edge_count();
    let p = d.p().max(1);
    Ok(SpanBounds { edge_count: m, span_lower: greedy.max(m.div_ceil(p)), span_upper: m / 3 })
}

struct SpanSolver {
    /// Edge `e` is `edges[e]`, lexicographic.
    edges: Vec<(usize, usize)>,
    /// Edge index of `(i,j)`, `u8::MAX` if absent.
    index: Vec<u8>,
    p: usize,
    /// Edges leaving each vertex.
    tails: Vec<u128>,
    all: u128,
    memo: BTreeMap<u128, (u8, u128)>,
    opts: SpanOptions,
}

impl SpanSolver {
    fn new(d: &Digraph, opts: SpanOptions) -> Result<Self> {
        let edges = d.edges();
        if edges.len() > 128 {
            return Err(Error::TooLarge);
        }
        let p = d.p();
        let mut index = vec![u8::MAX; p * p];
        let mut tails = vec![0u128; p];
        for (e, &(i, j)) in edges.iter().enumerate() {
            index[i * p + j] = e as u8;
            tails[i] |= 1 << e;
        }
        let all = if edges.len() == 128 { u128::MAX } else { (1u128 << edges.len()) - 1 };
        Ok(SpanSolver { edges, index, p, tails, all, memo: BTreeMap::new(), opts })
    }

    /// Cycles of `rest` through its least edge, shortest first, then by
    /// vertex sequence.
    fn cycles_through_least(&self, rest: u128) -> Vec<(Vec<usize>, u128)> {
        let e0 = rest.trailing_zeros() as usize;
        let (a, b) = self.edges[e0];
        let mut found = Vec::new();
        let mut path = vec![a, b];
        self.dfs(rest, a, b, (1u64 << a) | (1u64 << b), 1u128 << e0, &mut path, &mut found);
        found.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        rest: u128,
        a: usize,
        x: usize,
        visited: u64,
        used: u128,
        path: &mut Vec<usize>,
        found: &mut Vec<(Vec<usize>, u128)>,
    ) {
        let mut outs = rest & self.tails[x];
        while outs != 0 {
            let e = outs.trailing_zeros() as usize;
            outs &= outs - 1;
            let y = self.edges[e].1;
            if y == a {
                found.push((path.clone(), used | 1 << e));
            } else if visited >> y & 1 == 0 {
                path.push(y);
                self.dfs(rest, a, y, visited | 1 << y, used | 1 << e, path, found);
                path.pop();
            }
        }
    }

    fn solve(&mut self, rest: u128) -> Result<u8> {
        if rest == 0 {
            return Ok(0);
        }
        if let Some(&(v, _)) = self.memo.get(&rest) {
            return Ok(v);
        }
        if self.memo.len() >= self.opts.max_states {
            return Err(Error::BudgetExceeded);
        }
        let ub = (rest.count_ones() / 3) as u8;
        let mut best = 0u8;
        let mut choice = 0u128;
        for (_, cmask) in self.cycles_through_least(rest) {
            let left = rest & !cmask;
            // Cycles come shortest first, so the bound only gets worse.
            if 1 + (left.count_ones() / 3) as u8 <= best {
                break;
            }
            let v = 1 + self.solve(left)?;
            if v > best {
                best = v;
                choice = cmask;
                if best == ub {
                    break;
                }
            }
        }
        self.memo.insert(rest, (best, choice));
        Ok(best)
    }

    fn witness(&self, mut rest: u128) -> Vec<Cycle> {
        let mut out = Vec::new();
        while rest != 0 {
            let (_, cmask) = self.memo[&rest];
            out.push(self.trace(cmask));
            rest &= !cmask;
        }
        out
    }

    /// Vertex sequence of the cycle with edge mask `cmask`, from the tail of
    /// its least edge.
    fn trace(&self, cmask: u128) -> Cycle {
        let (a, mut x) = self.edges[cmask.trailing_zeros() as usize];
        let mut c = vec![a];
        while x != a {
            c.push(x);
            let e = (cmask & self.tails[x]).trailing_zeros() as usize;
            x = self.edges[e].1;
        }
        debug_assert!(c.iter().zip(c.iter().skip(1)).all(|(&i, &j)| self.index[i * self.p + j] != u8::MAX));
        c
    }
}

/// Strong components in the order of the condensation: if one component
/// reaches another it is listed first. For tournaments this is the order
/// `[i] -> [j]`.
pub fn strong_components(g: &Digraph) -> Vec<Vec<usize>> {
    let p = g.p();
    let reach: Vec<u64> = (0..p).map(|v| reach_from(g, v)).collect();
    let rg = g.reverse();
    let mut comps: Vec<(u64, u64)> = Vec::new();
    let mut done = 0u64;
    for v in 0..p {
        if done >> v & 1 == 1 {
            continue;
        }
        let comp = reach[v] & reach_from(&rg, v);
        done |= comp;
        comps.push((comp, reach[v]));
    }
    comps.sort_by(|a, b| {
        b.1.count_ones().cmp(&a.1.count_ones()).then(a.0.trailing_zeros().cmp(&b.0.trailing_zeros()))
    });
    comps.into_iter().map(|(c, _)| bits(c).collect()).collect()
}

pub fn is_strong(g: &Digraph) -> bool {
    g.p() > 0 && reach_from(g, 0) == full_mask(g.p()) && reach_from(&g.reverse(), 0) == full_mask(g.p())
}

/// An `len`-cycle through `v` in a strong tournament, grown from a 3-cycle
/// one vertex at a time.
pub fn cycle_through(g: &Digraph, v: usize, len: usize) -> Result<Cycle> {
    g.check_tournament()?;
    let p = g.p();
    if v >= p {
        return Err(Error::VertexOutOfRange(v));
    }
    if p < 2 || !is_strong(g) {
        return Err(Error::NotStrong);
    }
    if len < 3 || len > p {
        return Err(Error::BadLength);
    }
    let mut c: Cycle = Vec::new();
    'start: for j1 in bits(g.out_row(v)) {
        for j2 in bits(g.out_row(j1) & g.in_row(v)) {
            c = vec![v, j1, j2];
            break 'start;
        }
    }
    debug_assert_eq!(c.len(), 3, "strong tournaments have a 3-cycle at every vertex");
    while c.len() < len {
        let on: u64 = c.iter().fold(0, |m, &x| m | 1 << x);
        let off = full_mask(p) & !on;
        let mut grown = false;
        // A vertex with neighbours on both sides slots in between a
        // consecutive pair c[s] -> j -> c[s+1].
        for j in bits(off) {
            if g.in_row(j) & on == 0 || g.out_row(j) & on == 0 {
                continue;
            }
            let k = c.len();
            if let Some(s) = (0..k).find(|&s| g.has(c[s], j) && g.has(j, c[(s + 1) % k])) {
                c.insert(s + 1, j);
                grown = true;
                break;
            }
        }
        if grown {
            continue;
        }
        // Every outside vertex is beaten by the whole cycle (A) or beats it (B).
        // Strongness gives u in A, w in B with u -> w; replace c[1] by u, w.
        let a_set: u64 = bits(off).filter(|&j| g.in_row(j) & on == on).fold(0, |m, j| m | 1 << j);
        let b_set = off & !a_set;
        let mut pair = None;
        'find: for u in bits(a_set) {
            for w in bits(g.out_row(u) & b_set) {
                pair = Some((u, w));
                break 'find;
            }
        }
        let (u, w) = pair.ok_or(Error::NotStrong)?;
        c.splice(1..2, [u, w]);
    }
    Ok(c)
}

/// The vertex ordering `i_1 -> i_2 -> ...` (earlier beats later) iff `g` is
/// a transitive tournament.
pub fn is_order(g: &Digraph) -> Option<Vec<usize>> {
    if !g.is_tournament() {
        return None;
    }
    let p = g.p();
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(g.out_degree(i)));
    for a in 0..p {
        for b in a + 1..p {
            if !g.has(order[a], order[b]) {
                return None;
            }
        }
    }
    Some(order)
}

/// All 3-cycles, each rotated to start at its least vertex, sorted.
pub fn three_cycles(g: &Digraph) -> Vec<[usize; 3]> {
    let p = g.p();
    let mut out = Vec::new();
    for i in 0..p {
        for j in bits(g.out_row(i) & !full_mask(i + 1)) {
            for k in bits(g.out_row(j) & g.in_row(i) & !full_mask(i + 1)) {
                out.push([i, j, k]);
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCycleStats {
    pub per_vertex: Vec<usize>,
    pub total: usize,
    /// `p(p-1)(2p-1)/12 - (sum of squared scores)/2`.
    pub formula_total: i64,
}

pub fn three_cycle_stats(g: &Digraph) -> ThreeCycleStats {
    let p = g.p();
    let cyc = three_cycles(g);
    let mut per_vertex = vec![0; p];
    for c in &cyc {
        for &v in c {
            per_vertex[v] += 1;
        }
    }
    let sq: i64 = (0..p).map(|i| (g.out_degree(i) * g.out_degree(i)) as i64).sum();
    let pp = p as i64;
    let formula_total = (pp * (pp - 1) * (2 * pp - 1) / 6 - sq) / 2;
    ThreeCycleStats { per_vertex, total: cyc.len(), formula_total }
}

/// A cover of the edges of `g` by edge-disjoint 3-cycles, if one exists.
/// Each triple starts with the least uncovered edge at the time it was placed.
pub fn steiner_decomposition(g: &Digraph) -> Option<Vec<[usize; 3]>> {
    if g.edge_count() % 3 != 0 || !g.is_eulerian() {
        return None;
    }
    let mut rest = g.clone();
    let mut out = Vec::new();
    if cover(&mut rest, &mut out) {
        Some(out)
    } else {
        None
    }
}

fn cover(rest: &mut Digraph, out: &mut Vec<[usize; 3]>) -> bool {
    let Some(i) = (0..rest.p()).find(|&i| rest.out_row(i) != 0) else {
        return true;
    };
    let j = rest.out_row(i).trailing_zeros() as usize;
    for k in bits(rest.out_row(j) & rest.in_row(i)) {
        let t = [i, j, k];
        for s in 0..3 {
            rest.remove(t[s], t[(s + 1) % 3]);
        }
        out.push(t);
        if cover(rest, out) {
            return true;
        }
        out.pop();
        for s in 0..3 {
            rest.add(t[s], t[(s + 1) % 3]);
        }
    }
    false
}

/// Largest state table the counting DP may build.
const COUNT_STATE_BUDGET: usize = 20_000_000;

/// Number of Eulerian subgraphs, the empty one included. Small edge sets are
/// enumerated directly; larger ones go through a vertex-by-vertex dynamic
/// programme on partial degree balances.
pub fn count_eulerian_subgraphs(g: &Digraph) -> Result<u64> {
    let edges = g.edges();
    if edges.len() <= 21 {
        Ok(count_brute(g.p(), &edges))
    } else {
        count_dp(g.p(), &edges)
    }
}

fn count_brute(p: usize, edges: &[(usize, usize)]) -> u64 {
    fn go(k: usize, edges: &[(usize, usize)], bal: &mut [i32]) -> u64 {
        if k == edges.len() {
            return bal.iter().all(|&b| b == 0) as u64;
        }
        let (i, j) = edges[k];
        let mut total = go(k + 1, edges, bal);
        bal[i] += 1;
        bal[j] -= 1;
        total += go(k + 1, edges, bal);
        bal[i] -= 1;
        bal[j] += 1;
        total
    }
    go(0, edges, &mut vec![0; p])
}

fn count_dp(p: usize, edges: &[(usize, usize)]) -> Result<u64> {
    // Order edges by their lower endpoint so vertex v is complete once all
    // edges with lower endpoint v have been placed.
    let mut sorted: Vec<(usize, usize)> = edges.to_vec();
    sorted.sort_by_key(|&(i, j)| (i.min(j), i.max(j)));
    let mut remaining = vec![0i32; p];
    for &(i, j) in &sorted {
        remaining[i] += 1;
        remaining[j] += 1;
    }
    let mut states: BTreeMap<Vec<i8>, u64> = BTreeMap::new();
    states.insert(vec![0; p], 1);
    for &(i, j) in &sorted {
        remaining[i] -= 1;
        remaining[j] -= 1;
        let mut next: BTreeMap<Vec<i8>, u64> = BTreeMap::new();
        for (bal, cnt) in states {
            for take in [false, true] {
                let mut b = bal.clone();
                if take {
                    b[i] += 1;
                    b[j] -= 1;
                }
                if (b[i] as i32).abs() <= remaining[i] && (b[j] as i32).abs() <= remaining[j] {
                    *next.entry(b).or_insert(0) += cnt;
                }
            }
        }
        if next.len() > COUNT_STATE_BUDGET {
            return Err(Error::TooLarge);
        }
        states = next;
    }
    Ok(states.get(&vec![0; p]).copied().unwrap_or(0))
}

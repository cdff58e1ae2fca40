//! Difference graphs, subgraph reversal and 3-cycle (or 4-cycle) plans.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{Digraph, Perm};
use crate::error::{Error, Result};
use crate::eulerian::{self, is_cycle_of, normalize_cycle, Cycle, SpanOptions};

/// Ordered moves; each is a cycle of the graph current at its step.
pub type Plan = Vec<Cycle>;

/// Edges `(i,j)` of `pi` whose image `(rho(i), rho(j))` is reversed in `gamma`.
pub fn delta(rho: &Perm, pi: &Digraph, gamma: &Digraph) -> Result<Digraph> {
    if pi.p() != gamma.p() || rho.len() != pi.p() {
        return Err(Error::SizeMismatch);
    }
    let mut d = Digraph::empty(pi.p())?;
    for (i, j) in pi.edges() {
        if gamma.has(rho.apply(j), rho.apply(i)) {
            d.add(i, j);
        }
    }
    Ok(d)
}

/// `delta` at the identity: the edges of `pi` reversed in `gamma`.
pub fn delta_id(pi: &Digraph, gamma: &Digraph) -> Result<Digraph> {
    delta(&Perm::identity(pi.p()), pi, gamma)
}

/// `(pi \ d) ∪ d⁻¹`.
pub fn reverse_subgraph(pi: &Digraph, d: &Digraph) -> Result<Digraph> {
    if !d.is_subgraph_of(pi) {
        return Err(Error::NotSubgraph);
    }
    let mut g = pi.clone();
    for (i, j) in d.edges() {
        g.flip(i, j);
    }
    Ok(g)
}

pub(crate) fn flip_cycle(g: &mut Digraph, c: &[usize]) {
    for s in 0..c.len() {
        g.flip(c[s], c[(s + 1) % c.len()]);
    }
}

/// Apply a plan, checking every step reverses a cycle of the current graph.
pub fn replay(pi: &Digraph, plan: &[Cycle]) -> Result<Digraph> {
    let mut g = pi.clone();
    for (k, c) in plan.iter().enumerate() {
        if !is_cycle_of(&g, c) {
            return Err(Error::BadMove(k));
        }
        flip_cycle(&mut g, c);
    }
    Ok(g)
}

fn same_size(pi: &Digraph, gamma: &Digraph) -> Result<()> {
    if pi.p() != gamma.p() {
        return Err(Error::SizeMismatch);
    }
    pi.check_tournament()?;
    gamma.check_tournament()
}

/// Any plan from `pi` to `gamma`: the greedy decomposition of the difference,
/// each `l`-cycle broken into `l-2` triangle reversals.
pub fn plan_any(pi: &Digraph, gamma: &Digraph) -> Result<Plan> {
    same_size(pi, gamma)?;
    let d = delta_id(pi, gamma)?;
    let cycles = eulerian::cycle_decomposition(&d).map_err(|_| Error::ScoreMismatch)?;
    let mut cur = pi.clone();
    let mut plan = Vec::new();
    for c in cycles {
        split_cycle(&mut cur, &c, 3, &mut plan);
    }
    debug_assert_eq!(&cur, gamma);
    Ok(plan)
}

/// Reverse the cycle `c` of `cur` through moves of length `step` (3 for
/// tournaments, 4 for bipartite tournaments), appending them to `plan`.
fn split_cycle(cur: &mut Digraph, c: &[usize], step: usize, plan: &mut Plan) {
    if c.len() <= step {
        flip_cycle(cur, c);
        plan.push(normalize_cycle(c));
        return;
    }
    let head: Vec<usize> = c[..step].to_vec();
    let (first, last) = (c[0], c[step - 1]);
    let mut shorter = vec![first];
    shorter.extend_from_slice(&c[step - 1..]);
    if cur.has(first, last) {
        // chord runs forwards: the shortened cycle exists now, the head after
        split_cycle(cur, &shorter, step, plan);
        flip_cycle(cur, &head);
        plan.push(normalize_cycle(&head));
    } else {
        flip_cycle(cur, &head);
        plan.push(normalize_cycle(&head));
        split_cycle(cur, &shorter, step, plan);
    }
}

/// A shortest plan. Each step re-solves the span of the current difference
/// and takes the least candidate triangle that lowers the balance by one.
pub fn plan_optimal(pi: &Digraph, gamma: &Digraph) -> Result<Plan> {
    plan_optimal_with(pi, gamma, SpanOptions::default())
}

pub fn plan_optimal_with(pi: &Digraph, gamma: &Digraph, opts: SpanOptions) -> Result<Plan> {
    same_size(pi, gamma)?;
    let mut cur = pi.clone();
    let mut plan = Vec::new();
    let d = delta_id(&cur, gamma)?;
    if !d.is_eulerian() {
        return Err(Error::ScoreMismatch);
    }
    let mut report = eulerian::span_with(&d, opts)?;
    while report.edge_count > 0 {
        let target = report.balance - 1;
        let mut chosen = None;
        for t in descent_candidates(&cur, &report.witness) {
            if let Some(r) = try_move(&cur, gamma, &t, target, opts)? {
                chosen = Some((t, r));
                break;
            }
        }
        if chosen.is_none() {
            for t in eulerian::three_cycles(&cur) {
                if let Some(r) = try_move(&cur, gamma, &t, target, opts)? {
                    chosen = Some((t, r));
                    break;
                }
            }
        }
        let (t, r) = chosen.ok_or(Error::BudgetExceeded)?;
        flip_cycle(&mut cur, &t);
        plan.push(t.to_vec());
        report = r;
    }
    Ok(plan)
}

fn try_move(
    cur: &Digraph,
    gamma: &Digraph,
    t: &[usize; 3],
    target: usize,
    opts: SpanOptions,
) -> Result<Option<eulerian::DecompReport>> {
    let mut next = cur.clone();
    flip_cycle(&mut next, t);
    let r = eulerian::span_with(&delta_id(&next, gamma)?, opts)?;
    Ok(if r.balance == target { Some(r) } else { None })
}

/// Triangles singled out by the descent argument for each cycle of a maximum
/// decomposition: the cycle itself if it is a triangle, a back chord
/// `c[s+2] -> c[s]` closing a triangle, or, when every chord runs forward,
/// a triangle through `c[s+2]` and a consecutive pair it splits. Sorted and
/// deduplicated; each is rotated to start at its least vertex.
pub fn descent_candidates(cur: &Digraph, witness: &[Cycle]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let push = |a: usize, b: usize, c: usize, out: &mut Vec<[usize; 3]>| {
        let n = normalize_cycle(&[a, b, c]);
        out.push([n[0], n[1], n[2]]);
    };
    for c in witness {
        let k = c.len();
        if k == 3 {
            push(c[0], c[1], c[2], &mut out);
            continue;
        }
        let mut forward = true;
        for s in 0..k {
            let (a, b, d) = (c[s], c[(s + 1) % k], c[(s + 2) % k]);
            if cur.has(d, a) {
                forward = false;
                push(a, b, d, &mut out);
            }
        }
        if forward && k >= 5 {
            for s in 0..k {
                let i3 = c[(s + 2) % k];
                // walk q from s+4 around to s+1 looking for i3 -> c[q], c[q+1] -> i3
                for off in 4..k {
                    let q = (s + off) % k;
                    let q1 = (q + 1) % k;
                    if q1 == (s + 2) % k {
                        break;
                    }
                    if cur.has(i3, c[q]) && cur.has(c[q1], i3) {
                        push(i3, c[q], c[q1], &mut out);
                        break;
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity shared by `|Δ|`, its balance and every plan length.
pub fn parity(pi: &Digraph, gamma: &Digraph) -> Result<Parity> {
    same_size(pi, gamma)?;
    let d = delta_id(pi, gamma)?;
    if !d.is_eulerian() {
        return Err(Error::ScoreMismatch);
    }
    Ok(if d.edge_count() % 2 == 0 { Parity::Even } else { Parity::Odd })
}

/// True iff every pair between `side` and its complement is joined by an edge
/// and no edge lies inside either side.
pub fn is_bipartite_tournament(g: &Digraph, side: u64) -> bool {
    let all = crate::digraph::full_mask(g.p());
    let other = all & !side;
    (0..g.p()).all(|i| {
        let (own, opp) = if side >> i & 1 == 1 { (side, other) } else { (other, side) };
        let nb = g.out_row(i) | g.in_row(i);
        nb & own == 0 && nb == opp
    })
}

/// Plan of 4-cycle reversals between bipartite tournaments on the same sides.
pub fn bipartite_plan(pi: &Digraph, gamma: &Digraph, side: u64) -> Result<Plan> {
    if pi.p() != gamma.p() {
        return Err(Error::SizeMismatch);
    }
    if !is_bipartite_tournament(pi, side) || !is_bipartite_tournament(gamma, side) {
        return Err(Error::NotBipartite);
    }
    let d = delta_id(pi, gamma)?;
    let cycles = eulerian::cycle_decomposition(&d).map_err(|_| Error::ScoreMismatch)?;
    let mut cur = pi.clone();
    let mut plan = Vec::new();
    for c in cycles {
        split_cycle(&mut cur, &c, 4, &mut plan);
    }
    Ok(plan)
}

/// Near and far triangles of a cycle `c` of `gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpecialCycles {
    pub near: Vec<[usize; 3]>,
    pub far: Vec<[usize; 3]>,
}

impl SpecialCycles {
    pub fn total(&self) -> usize {
        self.near.len() + self.far.len()
    }
}

/// Triangles whose reversal shortens or splits the cycle `c`. With positions
/// taken mod `L`: the near triangle at `i` is `<c[i-1], c[i], c[i+1]>` when
/// `c[i+1] -> c[i-1]`; far triangles at `i` are `<c[i], c[j], c[j+1]>` with
/// `c[i] -> c[j]`, `c[j+1] -> c[i]` and `j` not in `{i-2, i-1, i, i+1}`.
pub fn special_cycles(gamma: &Digraph, c: &[usize]) -> Result<SpecialCycles> {
    if c.len() < 4 || !is_cycle_of(gamma, c) {
        return Err(Error::NotACycle);
    }
    let l = c.len();
    let at = |k: isize| c[k.rem_euclid(l as isize) as usize];
    let mut out = SpecialCycles::default();
    for i in 0..l as isize {
        if gamma.has(at(i + 1), at(i - 1)) {
            out.near.push([at(i - 1), at(i), at(i + 1)]);
        }
        for off in 2..(l as isize - 2) {
            let j = i + off;
            if gamma.has(at(i), at(j)) && gamma.has(at(j + 1), at(i)) {
                out.far.push([at(i), at(j), at(j + 1)]);
            }
        }
    }
    Ok(out)
}

/// Upper bound on special cycles of a cycle of length `l` (`l >= 4`).
pub fn special_cycle_bound(l: usize) -> usize {
    let k = l / 2;
    if l % 2 == 1 {
        (2 * k + 1) * (k - 1)
    } else {
        k * (2 * k - 3)
    }
}

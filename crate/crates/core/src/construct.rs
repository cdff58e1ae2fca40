//! Building games: doubles, lexicographic products, extensions and
//! reductions, pointed realisation, Eulerian completion and saturation.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{bits, full_mask, Digraph};
use crate::error::{Error, Result};
use crate::eulerian::{self, Cycle};
use crate::reversal::{flip_cycle, reverse_subgraph};

/// Where the pieces of a double sit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleLayout {
    /// The tournament that was doubled, on `0..n`.
    pub source: Digraph,
    pub base: usize,
    /// `minus[j]` is the vertex `j-`.
    pub minus: Vec<usize>,
    /// `plus[j]` is the vertex `j+`.
    pub plus: Vec<usize>,
}

impl DoubleLayout {
    /// Standard numbering: base 0, `j- = 1 + j`, `j+ = 1 + n + j`.
    pub fn standard(source: Digraph) -> DoubleLayout {
        let n = source.p();
        DoubleLayout { source, base: 0, minus: (1..=n).collect(), plus: (n + 1..=2 * n).collect() }
    }

    pub fn minus_mask(&self) -> u64 {
        self.minus.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn plus_mask(&self) -> u64 {
        self.plus.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// The double of a tournament on `n` vertices: a game on `2n + 1`.
pub fn double(t: &Digraph) -> Result<(Digraph, DoubleLayout)> {
    t.check_tournament()?;
    let n = t.p();
    let mut g = Digraph::empty(2 * n + 1)?;
    let lay = DoubleLayout::standard(t.clone());
    for i in 0..n {
        let (im, ip) = (lay.minus[i], lay.plus[i]);
        g.add(0, im);
        g.add(ip, 0);
        g.add(im, ip);
        for j in bits(t.out_row(i)) {
            let (jm, jp) = (lay.minus[j], lay.plus[j]);
            g.add(im, jm);
            g.add(ip, jp);
            g.add(jp, im);
            g.add(jm, ip);
        }
    }
    Ok((g, lay))
}

/// `(p1, p2) -> (q1, q2)` iff `p1 -> q1`, or `p1 = q1` and `p2 -> q2`.
/// Vertex `(a, b)` is `a * |pi| + b`.
pub fn lex_product(gamma: &Digraph, pi: &Digraph) -> Result<Digraph> {
    let fibers = vec![pi.clone(); gamma.p()];
    Ok(generalized_lex(gamma, &fibers)?.0)
}

/// One fiber per vertex of `gamma`, laid out consecutively; returns the
/// product and the projection onto `gamma`.
pub fn generalized_lex(gamma: &Digraph, fibers: &[Digraph]) -> Result<(Digraph, Vec<usize>)> {
    if fibers.len() != gamma.p() {
        return Err(Error::FiberCountMismatch);
    }
    let proj: Vec<usize> = fibers.iter().enumerate().flat_map(|(a, f)| core::iter::repeat(a).take(f.p())).collect();
    let mut offset = vec![0; fibers.len() + 1];
    for (a, f) in fibers.iter().enumerate() {
        offset[a + 1] = offset[a] + f.p();
    }
    let mut g = Digraph::empty(proj.len())?;
    for (a, f) in fibers.iter().enumerate() {
        for (x, y) in f.edges() {
            g.add(offset[a] + x, offset[a] + y);
        }
        for c in bits(gamma.out_row(a)) {
            for x in offset[a]..offset[a + 1] {
                for y in offset[c]..offset[c + 1] {
                    g.add(x, y);
                }
            }
        }
    }
    Ok((g, proj))
}

/// Extension of a game on `2n - 1` vertices via `u -> v` and `K` (`|K| = n`):
/// `u = p`, `v = p + 1`, `K -> u -> (rest)`, `v -> K`, `(rest) -> v`.
pub fn extend(pi: &Digraph, k: &[usize]) -> Result<Digraph> {
    pi.check_game()?;
    let p = pi.p();
    let mut kmask = 0u64;
    for &x in k {
        if x >= p {
            return Err(Error::BadK);
        }
        kmask |= 1 << x;
    }
    if kmask.count_ones() as usize != (p + 1) / 2 || k.len() != (p + 1) / 2 {
        return Err(Error::BadK);
    }
    let (u, v) = (p, p + 1);
    let mut g = Digraph::empty(p + 2)?;
    for (i, j) in pi.edges() {
        g.add(i, j);
    }
    g.add(u, v);
    for x in 0..p {
        if kmask >> x & 1 == 1 {
            g.add(x, u);
            g.add(v, x);
        } else {
            g.add(u, x);
            g.add(x, v);
        }
    }
    Ok(g)
}

/// Deleting `u` and `v` leaves a game. Needs an edge between them.
pub fn is_reducible_via(g: &Digraph, u: usize, v: usize) -> bool {
    if u == v || u >= g.p() || v >= g.p() || !(g.has(u, v) || g.has(v, u)) || !g.is_game() {
        return false;
    }
    let rest = full_mask(g.p()) & !(1 << u) & !(1 << v);
    // no third vertex beats both or loses to both
    g.in_row(u) & g.in_row(v) & rest == 0 && g.out_row(u) & g.out_row(v) & rest == 0
}

/// The seven equivalent forms of reducibility via `u -> v`, in order:
/// restriction is a game; restriction is Eulerian; the edge lies in `n`
/// 3-cycles; no common in-neighbour; no common out-neighbour; in-sets
/// disjoint; out-sets disjoint.
pub fn reducibility_conditions(g: &Digraph, u: usize, v: usize) -> [bool; 7] {
    let rest = full_mask(g.p()) & !(1 << u) & !(1 << v);
    let (r, _) = g.restrict_mask(rest);
    let tri = (g.out_row(v) & g.in_row(u)).count_ones() as usize;
    let no_common_in = g.in_row(u) & g.in_row(v) & rest == 0;
    let no_common_out = g.out_row(u) & g.out_row(v) & rest == 0;
    [
        r.is_game(),
        r.is_eulerian(),
        tri == g.n(),
        no_common_in,
        no_common_out,
        g.in_row(u) & g.in_row(v) == 0,
        g.out_row(u) & g.out_row(v) == 0,
    ]
}

/// Restriction to everything but `u, v`, with the index map.
pub fn reduce(g: &Digraph, u: usize, v: usize) -> Result<(Digraph, Vec<usize>)> {
    if !is_reducible_via(g, u, v) {
        return Err(Error::NotReducible);
    }
    Ok(g.restrict_mask(full_mask(g.p()) & !(1 << u) & !(1 << v)))
}

/// Shape of a reducibility graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RStructure {
    Empty,
    HamiltonianCycle(Vec<usize>),
    /// Maximal paths, each listed from its source.
    Paths(Vec<Vec<usize>>),
}

/// All edges `(i, j)` of `g` such that `g` is reducible via `i -> j`.
pub fn reducibility_graph(g: &Digraph) -> Result<(Digraph, RStructure)> {
    g.check_game()?;
    let p = g.p();
    let mut r = Digraph::empty(p)?;
    for (i, j) in g.edges() {
        if is_reducible_via(g, i, j) {
            r.add(i, j);
        }
    }
    if r.is_edgeless() {
        return Ok((r, RStructure::Empty));
    }
    if p > 1 && (0..p).all(|v| r.out_degree(v) == 1 && r.in_degree(v) == 1) {
        let mut c = vec![0];
        let mut x = r.out_row(0).trailing_zeros() as usize;
        while x != 0 {
            c.push(x);
            x = r.out_row(x).trailing_zeros() as usize;
        }
        if c.len() == p {
            return Ok((r, RStructure::HamiltonianCycle(c)));
        }
    }
    let mut paths = Vec::new();
    let mut used = 0u64;
    for s in 0..p {
        if r.in_row(s) != 0 || r.out_row(s) == 0 {
            continue;
        }
        let mut path = vec![s];
        let mut x = s;
        used |= 1 << s;
        while r.out_row(x) != 0 {
            x = r.out_row(x).trailing_zeros() as usize;
            if used >> x & 1 == 1 {
                break;
            }
            used |= 1 << x;
            path.push(x);
        }
        paths.push(path);
    }
    Ok((r, RStructure::Paths(paths)))
}

/// A game with a base vertex; `plus[j]` beats the base, the base beats `minus[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedGame {
    pub g: Digraph,
    pub base: usize,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl PointedGame {
    pub fn pi_plus(&self) -> Digraph {
        self.g.restrict(&self.plus).map(|r| r.0).expect("valid vertices")
    }

    pub fn pi_minus(&self) -> Digraph {
        self.g.restrict(&self.minus).map(|r| r.0).expect("valid vertices")
    }

    /// The bipartite part between the two halves.
    pub fn xi(&self) -> Digraph {
        let (pm, mm) = (mask_of(&self.plus), mask_of(&self.minus));
        let mut x = Digraph::empty(self.g.p()).unwrap();
        for (i, j) in self.g.edges() {
            if (pm >> i & 1 == 1 && mm >> j & 1 == 1) || (mm >> i & 1 == 1 && pm >> j & 1 == 1) {
                x.add(i, j);
            }
        }
        x
    }
}

fn mask_of(v: &[usize]) -> u64 {
    v.iter().fold(0, |m, &x| m | 1 << x)
}

/// A pointed game whose halves are `gp` (on the in-set of the base) and `gm`
/// (on the out-set), vertex `j` of each sitting at `j+` and `j-` of the
/// standard double numbering.
pub fn realize_pointed(gp: &Digraph, gm: &Digraph) -> Result<PointedGame> {
    if gp.p() != gm.p() {
        return Err(Error::SizeMismatch);
    }
    gp.check_tournament()?;
    let (mut g, lay) = double(gm)?;
    let (pm, mm) = (lay.plus_mask(), lay.minus_mask());
    for (i, j) in gm.edges() {
        if gp.has(i, j) {
            continue;
        }
        let (ip, jp) = (lay.plus[i], lay.plus[j]);
        let path = bfs_path(&g, jp, |x| if pm >> x & 1 == 1 { mm } else if mm >> x & 1 == 1 { pm } else { 0 }, 1 << ip)
            .ok_or(Error::NotReducible)?;
        let mut cyc = vec![ip];
        cyc.extend_from_slice(&path[..path.len() - 1]);
        flip_cycle(&mut g, &cyc);
    }
    Ok(PointedGame { g, base: 0, plus: lay.plus, minus: lay.minus })
}

/// Shortest path from `from` into `targets`, stepping from `x` only to
/// out-neighbours in `allowed(x)`. Ties go to the least vertex.
fn bfs_path(g: &Digraph, from: usize, allowed: impl Fn(usize) -> u64, targets: u64) -> Option<Vec<usize>> {
    multi_bfs_path(g, 1 << from, allowed, targets)
}

fn multi_bfs_path(g: &Digraph, sources: u64, allowed: impl Fn(usize) -> u64, targets: u64) -> Option<Vec<usize>> {
    let p = g.p();
    let mut parent = vec![usize::MAX; p];
    let mut seen = sources;
    let mut queue: Vec<usize> = bits(sources).collect();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for y in bits(g.out_row(x) & allowed(x) & !seen) {
            seen |= 1 << y;
            parent[y] = x;
            if targets >> y & 1 == 1 {
                let mut path = vec![y];
                let mut z = y;
                while parent[z] != usize::MAX {
                    z = parent[z];
                    path.push(z);
                }
                path.reverse();
                return Some(path);
            }
            queue.push(y);
        }
    }
    None
}

/// A game on `2n - 1` vertices containing the tournament `t` on `n`; the map
/// sends each vertex of `t` to its place in the game.
pub fn embed_in_game(t: &Digraph) -> Result<(Digraph, Vec<usize>)> {
    t.check_tournament()?;
    let n = t.p();
    if n <= 1 {
        return Ok((t.clone(), (0..n).collect()));
    }
    let pg = realize_pointed(&Digraph::transitive(n)?, t)?;
    let u = pg.plus[0];
    let (g, map) = reduce(&pg.g, u, pg.base)?;
    let place: Vec<usize> = pg.minus.iter().map(|&v| map.iter().position(|&x| x == v).unwrap()).collect();
    Ok((g, place))
}

/// Complete an Eulerian digraph on an odd number of vertices to a game. The
/// second value lists the deviation before each correction and at the end.
pub fn eulerian_to_game(d: &Digraph) -> Result<(Digraph, Vec<usize>)> {
    if d.p() % 2 == 0 {
        return Err(Error::EvenSize);
    }
    if !d.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let p = d.p();
    let n = p / 2;
    let mut g = d.clone();
    for i in 0..p {
        for j in i + 1..p {
            if !g.has(i, j) && !g.has(j, i) {
                g.add(i, j);
            }
        }
    }
    let deviation = |g: &Digraph| (0..p).map(|i| g.out_degree(i).saturating_sub(n)).sum::<usize>();
    let mut trace = vec![deviation(&g)];
    while *trace.last().unwrap() > 0 {
        let over = (0..p).filter(|&i| g.out_degree(i) > n).fold(0u64, |m, i| m | 1 << i);
        let under = (0..p).filter(|&i| g.out_degree(i) < n).fold(0u64, |m, i| m | 1 << i);
        let path = multi_bfs_path(&g, over, |x| !d.out_row(x), under).ok_or(Error::NotEulerian)?;
        for w in path.windows(2) {
            g.flip(w[0], w[1]);
        }
        trace.push(deviation(&g));
    }
    Ok((g, trace))
}

/// `(2 pi) / pi_plus`: a game with no reducible pair.
pub fn nonreducible_from(pi: &Digraph) -> Result<Digraph> {
    pi.check_game()?;
    if pi.p() < 3 {
        return Err(Error::TooSmall);
    }
    let (g, lay) = double(pi)?;
    reverse_subgraph(&g, &layer(&g, lay.plus_mask()))
}

/// Edges of `g` with both ends in `mask`.
fn layer(g: &Digraph, mask: u64) -> Digraph {
    let mut d = Digraph::empty(g.p()).unwrap();
    for i in bits(mask) {
        for j in bits(g.out_row(i) & mask) {
            d.add(i, j);
        }
    }
    d
}

/// Crossing edges `j+ -> i-`, `j- -> i+` of a double.
fn crossings(g: &Digraph, lay: &DoubleLayout) -> Digraph {
    let (pm, mm) = (lay.plus_mask(), lay.minus_mask());
    let mut d = Digraph::empty(g.p()).unwrap();
    let n = lay.minus.len();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for (x, y) in [(lay.plus[b], lay.minus[a]), (lay.minus[b], lay.plus[a])] {
                if g.has(x, y) && (pm | mm) >> x & 1 == 1 {
                    d.add(x, y);
                }
            }
        }
    }
    d
}

/// Which part of the double is reversed in a Steiner variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantPart {
    Plus,
    Minus,
    Cross,
    PlusMinus,
    PlusCross,
    MinusCross,
}

impl VariantPart {
    pub const ALL: [VariantPart; 6] = [
        VariantPart::Plus,
        VariantPart::Minus,
        VariantPart::Cross,
        VariantPart::PlusMinus,
        VariantPart::PlusCross,
        VariantPart::MinusCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VariantPart::Plus => "plus",
            VariantPart::Minus => "minus",
            VariantPart::Cross => "cross",
            VariantPart::PlusMinus => "plus+minus",
            VariantPart::PlusCross => "plus+cross",
            VariantPart::MinusCross => "minus+cross",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SteinerVariant {
    pub part: VariantPart,
    pub game: Digraph,
    pub witness: Vec<[usize; 3]>,
}

/// The double of a Steiner game with its plus layer, minus layer, crossing
/// edges, or two of these reversed, each with a validated 3-cycle cover.
/// The plain double is not included: it need not be Steiner.
pub fn steiner_variants(pi: &Digraph) -> Result<Vec<SteinerVariant>> {
    pi.check_game()?;
    let triples = eulerian::steiner_decomposition(pi).ok_or(Error::NotSteiner)?;
    let (g, lay) = double(pi)?;
    let plus = layer(&g, lay.plus_mask());
    let minus = layer(&g, lay.minus_mask());
    let cross = crossings(&g, &lay);
    let mut out = Vec::new();
    for part in VariantPart::ALL {
        let d = match part {
            VariantPart::Plus => plus.clone(),
            VariantPart::Minus => minus.clone(),
            VariantPart::Cross => cross.clone(),
            VariantPart::PlusMinus => plus.union(&minus)?,
            VariantPart::PlusCross => plus.union(&cross)?,
            VariantPart::MinusCross => minus.union(&cross)?,
        };
        let game = reverse_subgraph(&g, &d)?;
        let mut witness: Vec<[usize; 3]> =
            (0..pi.p()).map(|x| [lay.plus[x], lay.base, lay.minus[x]]).collect();
        for t in &triples {
            // t = <a, b, c> with a -> b -> c -> a; in the k, j, i naming k = a, j = b, i = c
            let (k, j, i) = (t[0], t[1], t[2]);
            let local = if part == VariantPart::Plus {
                let (ip, jp, kp) = (lay.plus[i], lay.plus[j], lay.plus[k]);
                let (im, jm, km) = (lay.minus[i], lay.minus[j], lay.minus[k]);
                vec![[ip, jp, km], [im, jp, kp], [ip, jm, kp], [km, jm, im]]
            } else {
                let six: Vec<usize> = [i, j, k].iter().flat_map(|&x| [lay.minus[x], lay.plus[x]]).collect();
                let mut sub = Digraph::empty(g.p())?;
                for &x in &six {
                    for &y in &six {
                        let vertical = lay.minus.iter().zip(&lay.plus).any(|(&m, &p)| (x, y) == (m, p) || (x, y) == (p, m));
                        if game.has(x, y) && !vertical {
                            sub.add(x, y);
                        }
                    }
                }
                match eulerian::steiner_decomposition(&sub) {
                    Some(c) => c,
                    None => {
                        witness.clear();
                        break;
                    }
                }
            };
            witness.extend(local);
        }
        let mut cycles: Vec<Cycle> = witness.iter().map(|t| t.to_vec()).collect();
        if !eulerian::is_decomposition_of(&game, &cycles) {
            // no triangle-local cover: search the whole game
            witness = eulerian::steiner_decomposition(&game).ok_or(Error::NotSteiner)?;
            cycles = witness.iter().map(|t| t.to_vec()).collect();
            if !eulerian::is_decomposition_of(&game, &cycles) {
                return Err(Error::NotSteiner);
            }
        }
        out.push(SteinerVariant { part, game, witness });
    }
    Ok(out)
}

/// Vertex sets of the maximal paths (and any cycles) of `r`.
fn r_components(r: &Digraph) -> Vec<u64> {
    let mut out = Vec::new();
    let mut seen = 0u64;
    for v in 0..r.p() {
        if seen >> v & 1 == 1 || r.out_row(v) | r.in_row(v) == 0 {
            continue;
        }
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for x in bits(frontier) {
                next |= r.out_row(x) | r.in_row(x);
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

/// An extension whose reducibility graph is a single edge.
///
/// `K` must keep every reducibility path of `pi` wholly inside or wholly
/// outside, and its complement must differ from every out- and in-set. When
/// `k` is `None` the lexicographically first such `K` that works is used.
pub fn uniquely_reducible_extension(pi: &Digraph, k: Option<&[usize]>) -> Result<(Digraph, Vec<usize>)> {
    let (r, _) = reducibility_graph(pi)?;
    let p = pi.p();
    let comps = r_components(&r);
    let ok = |kmask: u64| {
        let rest = full_mask(p) & !kmask;
        comps.iter().all(|&c| c & kmask == c || c & kmask == 0)
            && (0..p).all(|j| rest != pi.out_row(j) && rest != pi.in_row(j))
    };
    let unique = |kv: &[usize]| -> Result<Option<Digraph>> {
        let g = extend(pi, kv)?;
        Ok(if reducibility_graph(&g)?.0.edge_count() == 1 { Some(g) } else { None })
    };
    if let Some(kv) = k {
        let kmask = kv.iter().fold(0u64, |m, &x| m | 1 << (x % 64));
        if !ok(kmask) {
            return Err(Error::NotApplicable);
        }
        return unique(kv)?.map(|g| (g, kv.to_vec())).ok_or(Error::NotApplicable);
    }
    let size = (p + 1) / 2;
    let mut comb: Vec<usize> = (0..size).collect();
    loop {
        let kmask = comb.iter().fold(0u64, |m, &x| m | 1 << x);
        if ok(kmask) {
            if let Some(g) = unique(&comb)? {
                return Ok((g, comb));
            }
        }
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return Err(Error::NotApplicable);
            }
            i -= 1;
            if comb[i] < p - size + i {
                break;
            }
        }
        comb[i] += 1;
        for t in i + 1..size {
            comb[t] = comb[t - 1] + 1;
        }
    }
}

/// Recognise `g` with base `base` as a double: pairs each out-neighbour `i`
/// of the base with its unique reducible partner among the in-neighbours.
pub fn is_double(g: &Digraph, base: usize) -> Option<DoubleLayout> {
    if base >= g.p() || !g.is_game() {
        return None;
    }
    let minus: Vec<usize> = bits(g.out_row(base)).collect();
    let in_set = g.in_row(base);
    let mut plus = Vec::with_capacity(minus.len());
    let mut used = 0u64;
    for &i in &minus {
        let partners: Vec<usize> = bits(g.out_row(i)).filter(|&v| is_reducible_via(g, i, v)).collect();
        match partners.as_slice() {
            [v] if in_set >> v & 1 == 1 && used >> v & 1 == 0 => {
                used |= 1 << v;
                plus.push(*v);
            }
            _ => return None,
        }
    }
    let (source, _) = g.restrict(&minus).ok()?;
    let lay = DoubleLayout { source, base, minus, plus };
    // confirm the identification edge by edge
    let (d, std) = double(&lay.source).ok()?;
    let mut map = vec![0; g.p()];
    map[std.base] = lay.base;
    for j in 0..lay.minus.len() {
        map[std.minus[j]] = lay.minus[j];
        map[std.plus[j]] = lay.plus[j];
    }
    let rho = crate::digraph::Perm::new(map).ok()?;
    if d.relabel(&rho) == *g {
        Some(lay)
    } else {
        None
    }
}

/// Rank of a subset `J` of the `k` listed vertices: its bit string, first
/// vertex most significant.
fn rank_of(j_bits: u64, k: usize) -> usize {
    (0..k).filter(|&x| j_bits >> x & 1 == 1).map(|x| 1usize << (k - 1 - x)).sum()
}

/// Outcome of [`has_sep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sep {
    /// `witness[r]` chooses the subset of rank `r`.
    Witness(Vec<usize>),
    /// The first subset (as a vertex mask) nobody chooses.
    Fails(u64),
}

/// For every `J ⊆ T0` a vertex outside `T0` beating exactly `J` within `T0`;
/// the least such vertex is taken.
pub fn has_sep(g: &Digraph, t0: u64) -> Result<Sep> {
    let verts: Vec<usize> = bits(t0).collect();
    let k = verts.len();
    if k > 20 {
        return Err(Error::TooLarge);
    }
    let outside: Vec<usize> = (0..g.p()).filter(|&v| t0 >> v & 1 == 0).collect();
    let mut witness = vec![0; 1 << k];
    for r in 0..(1usize << k) {
        let j: u64 = (0..k).filter(|&x| r >> (k - 1 - x) & 1 == 1).fold(0, |m, x| m | 1 << verts[x]);
        match outside.iter().find(|&&v| g.out_row(v) & t0 == j && g.in_row(v) & t0 == t0 & !j) {
            Some(&v) => witness[r] = v,
            None => return Ok(Sep::Fails(j)),
        }
    }
    Ok(Sep::Witness(witness))
}

/// One saturation step: a new vertex `v_J` for every `J ⊆ S0`, placed at
/// `p0 + rank(J)`, beating exactly `J` in `S0`; new vertices are ordered by rank.
pub fn saturate(t: &Digraph) -> Result<Digraph> {
    let p0 = t.p();
    if p0 >= 6 {
        return Err(Error::TooLarge);
    }
    let total = p0 + (1 << p0);
    let mut g = Digraph::empty(total)?;
    for (i, j) in t.edges() {
        g.add(i, j);
    }
    for r in 0..(1usize << p0) {
        let v = p0 + r;
        for x in 0..p0 {
            if r >> (p0 - 1 - x) & 1 == 1 {
                g.add(v, x);
            } else {
                g.add(x, v);
            }
        }
        for r2 in r + 1..(1usize << p0) {
            g.add(v, p0 + r2);
        }
    }
    debug_assert!(rank_of(1, p0.max(1)) == 1 << (p0.max(1) - 1));
    Ok(g)
}

/// Extend an embedding `s0[k] -> rho[k]` of `pi` into `gamma` to all of
/// `pi`, vertex by vertex in increasing order, each time taking the least
/// unused vertex of `gamma` with the right relations to the images so far.
pub fn extend_embedding(pi: &Digraph, s0: &[usize], rho: &[usize], gamma: &Digraph) -> Result<Vec<usize>> {
    if s0.len() != rho.len() {
        return Err(Error::SizeMismatch);
    }
    let mut img = vec![usize::MAX; pi.p()];
    let mut used = 0u64;
    for (&x, &y) in s0.iter().zip(rho) {
        if x >= pi.p() {
            return Err(Error::VertexOutOfRange(x));
        }
        if y >= gamma.p() {
            return Err(Error::VertexOutOfRange(y));
        }
        img[x] = y;
        used |= 1 << y;
    }
    for &a in s0 {
        for &b in s0 {
            if pi.has(a, b) != gamma.has(img[a], img[b]) {
                return Err(Error::NotSubgraph);
            }
        }
    }
    for w in 0..pi.p() {
        if img[w] != usize::MAX {
            continue;
        }
        let v = (0..gamma.p()).find(|&v| {
            used >> v & 1 == 0
                && (0..pi.p())
                    .filter(|&x| img[x] != usize::MAX)
                    .all(|x| pi.has(w, x) == gamma.has(v, img[x]) && pi.has(x, w) == gamma.has(img[x], v))
        });
        let v = v.ok_or(Error::SepExhausted)?;
        img[w] = v;
        used |= 1 << v;
    }
    Ok(img)
}

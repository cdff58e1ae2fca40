//! Digraphs as bit matrices, plus permutations of their vertices.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_P: usize = 64;

/// Iterate the set bit positions of `x`, lowest first.
pub fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

/// Mask of the low `p` bits.
pub fn full_mask(p: usize) -> u64 {
    if p >= 64 {
        u64::MAX
    } else {
        (1u64 << p) - 1
    }
}

/// A loopless digraph without antiparallel edges on `0..p`.
///
/// Row `i` has bit `j` set iff `i -> j`. In-rows are kept alongside so both
/// neighbourhoods are a single word lookup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Digraph {
    p: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

/// Explicit edge sets (difference graphs, reducibility graphs) share the carrier.
pub type EdgeSet = Digraph;

/// Result of [`Digraph::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classes {
    pub is_tournament: bool,
    pub is_eulerian: bool,
    pub is_game: bool,
    pub is_regular: bool,
}

impl Digraph {
    /// The edgeless digraph on `p` vertices.
    pub fn empty(p: usize) -> Result<Self> {
        if p > MAX_P {
            return Err(Error::TooLarge);
        }
        Ok(Digraph { p, out: vec![0; p], inn: vec![0; p] })
    }

    /// Build from an edge list, rejecting loops, antiparallel pairs and
    /// out-of-range endpoints. Repeated edges are harmless.
    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::empty(p)?;
        for &(i, j) in edges {
            g.try_add(i, j)?;
        }
        Ok(g)
    }

    /// Build from out-rows (bit `j` of `rows[i]` means `i -> j`).
    pub fn from_rows(p: usize, rows: &[u64]) -> Result<Self> {
        if rows.len() != p {
            return Err(Error::SizeMismatch);
        }
        let mut g = Digraph::empty(p)?;
        for (i, &r) in rows.iter().enumerate() {
            if r & !full_mask(p) != 0 {
                return Err(Error::VertexOutOfRange(63 - r.leading_zeros() as usize));
            }
            for j in bits(r) {
                g.try_add(i, j)?;
            }
        }
        Ok(g)
    }

    /// Build from a predicate on ordered pairs `i != j`.
    pub fn from_fn(p: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Digraph::empty(p)?;
        for i in 0..p {
            for j in 0..p {
                if i != j && f(i, j) {
                    g.try_add(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// `i -> j` iff `(j - i) mod m` lies in `conn`. A game when `conn` is a
    /// game subset of `Z_m`.
    pub fn circulant(m: usize, conn: &[usize]) -> Result<Self> {
        let mut set = 0u64;
        for &a in conn {
            if m == 0 || a % m == 0 {
                return Err(Error::LoopEdge(0));
            }
            set |= 1 << (a % m);
        }
        Digraph::from_fn(m, |i, j| set >> ((j + m - i) % m) & 1 == 1)
    }

    /// The standard order: `i -> j` iff `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        Digraph::from_fn(n, |i, j| i < j)
    }

    /// The cycle `0 -> 1 -> ... -> k-1 -> 0`.
    pub fn cycle(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Digraph::from_edges(k, &edges)
    }

    pub fn try_add(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.p {
            return Err(Error::VertexOutOfRange(i));
        }
        if j >= self.p {
            return Err(Error::VertexOutOfRange(j));
        }
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        if self.has(j, i) {
            return Err(Error::AntiparallelPair(i, j));
        }
        self.add(i, j);
        Ok(())
    }

    pub(crate) fn add(&mut self, i: usize, j: usize) {
        self.out[i] |= 1 << j;
        self.inn[j] |= 1 << i;
    }

    pub(crate) fn remove(&mut self, i: usize, j: usize) {
        self.out[i] &= !(1 << j);
        self.inn[j] &= !(1 << i);
    }

    /// Replace `i -> j` by `j -> i`.
    pub(crate) fn flip(&mut self, i: usize, j: usize) {
        debug_assert!(self.has(i, j));
        self.remove(i, j);
        self.add(j, i);
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Half-degree `(p-1)/2` of a game.
    pub fn n(&self) -> usize {
        self.p.saturating_sub(1) / 2
    }

    #[inline]
    pub fn has(&self, i: usize, j: usize) -> bool {
        self.out[i] >> j & 1 == 1
    }

    #[inline]
    pub fn out_row(&self, i: usize) -> u64 {
        self.out[i]
    }

    #[inline]
    pub fn in_row(&self, i: usize) -> u64 {
        self.inn[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.out
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out[i].count_ones() as usize
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.inn[i].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_edgeless(&self) -> bool {
        self.out.iter().all(|&r| r == 0)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.edge_count());
        for i in 0..self.p {
            for j in bits(self.out[i]) {
                v.push((i, j));
            }
        }
        v
    }

    /// Vertices touched by at least one edge.
    pub fn support(&self) -> u64 {
        let mut s = 0;
        for i in 0..self.p {
            if self.out[i] | self.inn[i] != 0 {
                s |= 1 << i;
            }
        }
        s
    }

    /// Restriction to `J`, reindexed to `0..|J|` in increasing order of the
    /// old labels. The returned map sends new indices to old ones.
    pub fn restrict(&self, verts: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        let mut mask = 0u64;
        for &v in verts {
            if v >= self.p {
                return Err(Error::VertexOutOfRange(v));
            }
            mask |= 1 << v;
        }
        Ok(self.restrict_mask(mask))
    }

    pub fn restrict_mask(&self, mask: u64) -> (Digraph, Vec<usize>) {
        let map: Vec<usize> = bits(mask & full_mask(self.p)).collect();
        let mut g = Digraph::empty(map.len()).expect("subset of a valid graph");
        for (a, &i) in map.iter().enumerate() {
            for (b, &j) in map.iter().enumerate() {
                if self.has(i, j) {
                    g.add(a, b);
                }
            }
        }
        (g, map)
    }

    /// The reverse relation.
    pub fn reverse(&self) -> Digraph {
        Digraph { p: self.p, out: self.inn.clone(), inn: self.out.clone() }
    }

    /// Out-degrees indexed by vertex.
    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.p).map(|i| self.out_degree(i)).collect()
    }

    /// Score vector, non-decreasing.
    pub fn scores(&self) -> Vec<usize> {
        let mut s = self.out_degrees();
        s.sort_unstable();
        s
    }

    pub fn is_tournament(&self) -> bool {
        (0..self.p).all(|i| self.out[i] | self.inn[i] | (1 << i) == full_mask(self.p))
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.p).all(|i| self.out_degree(i) == self.in_degree(i))
    }

    pub fn is_regular(&self) -> bool {
        (0..self.p).all(|i| {
            self.out_degree(i) == self.out_degree(0) && self.in_degree(i) == self.in_degree(0)
        })
    }

    pub fn is_game(&self) -> bool {
        self.p % 2 == 1 && self.is_tournament() && self.is_eulerian()
    }

    pub fn classify(&self) -> Classes {
        Classes {
            is_tournament: self.is_tournament(),
            is_eulerian: self.is_eulerian(),
            is_game: self.is_game(),
            is_regular: self.is_regular(),
        }
    }

    pub fn check_tournament(&self) -> Result<()> {
        if self.is_tournament() {
            Ok(())
        } else {
            Err(Error::NotTournament)
        }
    }

    pub fn check_game(&self) -> Result<()> {
        if self.is_game() {
            Ok(())
        } else {
            Err(Error::NotGame)
        }
    }

    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.p == other.p && (0..self.p).all(|i| self.out[i] & !other.out[i] == 0)
    }

    /// Edges of `self` not in `other`.
    pub fn minus(&self, other: &Digraph) -> Result<Digraph> {
        if self.p != other.p {
            return Err(Error::SizeMismatch);
        }
        let mut g = self.clone();
        for i in 0..self.p {
            g.out[i] &= !other.out[i];
            g.inn[i] &= !other.inn[i];
        }
        Ok(g)
    }

    /// Union of two edge sets; fails if the union has an antiparallel pair.
    pub fn union(&self, other: &Digraph) -> Result<Digraph> {
        if self.p != other.p {
            return Err(Error::SizeMismatch);
        }
        let mut g = self.clone();
        for (i, j) in other.edges() {
            g.try_add(i, j)?;
        }
        Ok(g)
    }

    /// Image under a relabeling: edge `(i,j)` becomes `(rho(i), rho(j))`.
    pub fn relabel(&self, rho: &Perm) -> Digraph {
        assert_eq!(rho.len(), self.p, "permutation size");
        let mut g = Digraph::empty(self.p).expect("same size");
        for i in 0..self.p {
            for j in bits(self.out[i]) {
                g.add(rho.apply(i), rho.apply(j));
            }
        }
        g
    }

    /// Disjoint union, `other` shifted above `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let mut g = Digraph::empty(self.p + other.p)?;
        for (i, j) in self.edges() {
            g.add(i, j);
        }
        for (i, j) in other.edges() {
            g.add(i + self.p, j + self.p);
        }
        Ok(g)
    }

    /// Tournament bits of the upper triangle: pair `i<j` in the usual
    /// row-major order gets bit set iff `i -> j`. Needs `p(p-1)/2 <= 64`.
    pub fn upper_key(&self) -> u64 {
        let mut key = 0u64;
        let mut k = 0;
        for i in 0..self.p {
            for j in i + 1..self.p {
                if self.has(i, j) {
                    key |= 1 << k;
                }
                k += 1;
            }
        }
        key
    }

    /// Inverse of [`Digraph::upper_key`].
    pub fn from_upper_key(p: usize, key: u64) -> Digraph {
        let mut g = Digraph::empty(p).expect("small");
        let mut k = 0;
        for i in 0..p {
            for j in i + 1..p {
                if key >> k & 1 == 1 {
                    g.add(i, j);
                } else {
                    g.add(j, i);
                }
                k += 1;
            }
        }
        g
    }
}

/// A bijection on `0..len`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::NotPermutation);
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle decomposition, each cycle starting at its least element,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    /// Order in the symmetric group.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// True iff the permutation maps `g` onto itself.
    pub fn is_automorphism(&self, g: &Digraph) -> bool {
        self.len() == g.p() && g.relabel(self) == *g
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions % 2 == 0
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

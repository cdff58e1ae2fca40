//! Canonical labelling, isomorphism tests, automorphism groups and the
//! size-7 / size-9 classifications.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{bits, Digraph, Perm};
use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup, GameSubset};

/// Maximum number of search-tree nodes before [`Error::TooLarge`].
pub const NODE_BUDGET: usize = 4_000_000;

/// A canonical relabelling: `g.relabel(&perm) == graph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: Digraph,
    pub perm: Perm,
}

impl CanonicalForm {
    /// Row-major `p*p` bit string of the canonical matrix in hex, zero padded
    /// at the end to a whole number of digits.
    pub fn hex(&self) -> String {
        matrix_hex(&self.graph)
    }
}

/// Hex of the row-major adjacency bit string (row 0 first, column 0 first).
pub fn matrix_hex(g: &Digraph) -> String {
    const DIGITS: &[u8; 16] = b"0123456789abcdef";
    let p = g.p();
    let mut s = String::new();
    let mut acc = 0u8;
    let mut nbits = 0;
    for i in 0..p {
        for j in 0..p {
            acc = acc << 1 | g.has(i, j) as u8;
            nbits += 1;
            if nbits == 4 {
                s.push(DIGITS[acc as usize] as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        s.push(DIGITS[(acc << (4 - nbits)) as usize] as char);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Row `r` read with column 0 as the most significant of `p` bits, so that
/// comparing these values compares the matrix rows as bit strings.
fn row_key(r: u64, p: usize) -> u64 {
    if p == 0 {
        0
    } else {
        r.reverse_bits() >> (64 - p)
    }
}

fn matrix_key(g: &Digraph) -> Vec<u64> {
    g.rows().iter().map(|&r| row_key(r, g.p())).collect()
}

type Partition = Vec<u64>;

/// Split cells until every vertex in a cell sees the same number of out- and
/// in-neighbours in every cell. Split pieces are ordered by that profile.
fn refine(g: &Digraph, mut cells: Partition) -> Partition {
    loop {
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut sig: Vec<(Vec<u8>, usize)> = bits(cell)
                .map(|v| {
                    let mut s = Vec::with_capacity(2 * cells.len());
                    for &c in &cells {
                        s.push((g.out_row(v) & c).count_ones() as u8);
                        s.push((g.in_row(v) & c).count_ones() as u8);
                    }
                    (s, v)
                })
                .collect();
            sig.sort();
            let mut k = 0;
            while k < sig.len() {
                let mut piece = 0u64;
                let mut e = k;
                while e < sig.len() && sig[e].0 == sig[k].0 {
                    piece |= 1 << sig[e].1;
                    e += 1;
                }
                next.push(piece);
                k = e;
            }
            if next.last() != Some(&cell) {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct Search<'a> {
    g: &'a Digraph,
    best: Option<(Vec<u64>, Perm)>,
    /// Leaves equal to the current best, as labellings.
    ties: Vec<Perm>,
    nodes: usize,
    collect: bool,
}

impl Search<'_> {
    fn run(&mut self, cells: Partition) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(Error::TooLarge);
        }
        let cells = refine(self.g, cells);
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return Ok(());
        };
        for v in bits(cells[t]) {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(cells[t] & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            self.run(child)?;
        }
        Ok(())
    }

    fn leaf(&mut self, cells: &Partition) {
        let mut pos = vec![0; self.g.p()];
        for (k, c) in cells.iter().enumerate() {
            pos[c.trailing_zeros() as usize] = k;
        }
        let perm = Perm::new(pos).expect("discrete partition");
        let key = matrix_key(&self.g.relabel(&perm));
        match &self.best {
            Some((b, _)) if key > *b => {}
            Some((b, _)) if key == *b => {
                if self.collect {
                    self.ties.push(perm);
                }
            }
            _ => {
                self.best = Some((key, perm.clone()));
                self.ties.clear();
                if self.collect {
                    self.ties.push(perm);
                }
            }
        }
    }
}

fn search(g: &Digraph, collect: bool) -> Result<Search<'_>> {
    let mut s = Search { g, best: None, ties: Vec::new(), nodes: 0, collect };
    let root = if g.p() == 0 { Vec::new() } else { vec![crate::digraph::full_mask(g.p())] };
    s.run(root)?;
    Ok(s)
}

/// Least relabelled matrix over the leaves of an individualisation-refinement
/// tree. Equal forms iff isomorphic.
pub fn canonical_form(g: &Digraph) -> Result<CanonicalForm> {
    let s = search(g, false)?;
    let perm = s.best.map(|b| b.1).unwrap_or_else(|| Perm::identity(0));
    Ok(CanonicalForm { graph: g.relabel(&perm), perm })
}

/// A permutation carrying `a` onto `b`, if one exists.
pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> Result<Option<Perm>> {
    if a.p() != b.p() || a.edge_count() != b.edge_count() || a.scores() != b.scores() {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.graph != cb.graph {
        return Ok(None);
    }
    let rho = cb.perm.inverse().compose(&ca.perm);
    debug_assert_eq!(a.relabel(&rho), *b);
    Ok(Some(rho))
}

/// The automorphism group as an explicit list, identity first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    pub perms: Vec<Perm>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Orbit of vertex `v`, sorted.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.perms.iter().map(|s| s.apply(v)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }
}

/// Every automorphism: leaves tying with the canonical leaf differ from it by
/// exactly the automorphisms.
pub fn automorphisms(g: &Digraph) -> Result<AutGroup> {
    let s = search(g, true)?;
    let Some((_, best)) = s.best else {
        return Ok(AutGroup { perms: vec![Perm::identity(0)] });
    };
    let inv = best.inverse();
    let mut perms: Vec<Perm> = s.ties.iter().map(|l| inv.compose(l)).collect();
    perms.sort();
    perms.dedup();
    debug_assert!(perms.iter().all(|a| a.is_automorphism(g)));
    Ok(AutGroup { perms })
}

/// Exact rigidity.
pub fn is_rigid(g: &Digraph) -> Result<bool> {
    Ok(automorphisms(g)?.order() == 1)
}

/// Sufficient test: a tournament in which no score occurs three times or more
/// is rigid (automorphisms keep scores and have odd order).
pub fn rigid_by_scores(g: &Digraph) -> bool {
    if !g.is_tournament() {
        return false;
    }
    let mut count = vec![0; g.p().max(1)];
    for s in g.out_degrees() {
        count[s] += 1;
    }
    count.iter().all(|&c| c <= 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GameType {
    I,
    II,
    III,
}

impl GameType {
    pub fn name(self) -> &'static str {
        match self {
            GameType::I => "I",
            GameType::II => "II",
            GameType::III => "III",
        }
    }
}

/// Type of a size-7 game from the shapes of its neighbourhoods: a vertex
/// whose out- and in-sets are both transitive gives I, all cyclic gives II,
/// anything else III.
pub fn classify7(g: &Digraph) -> Result<GameType> {
    if g.p() != 7 {
        return Err(Error::BadSize);
    }
    g.check_game()?;
    let cyclic = |mask: u64| g.restrict_mask(mask).0.is_eulerian();
    let mut all_cyclic = true;
    for v in 0..7 {
        let (o, i) = (cyclic(g.out_row(v)), cyclic(g.in_row(v)));
        if !o && !i {
            return Ok(GameType::I);
        }
        all_cyclic &= o && i;
    }
    Ok(if all_cyclic { GameType::II } else { GameType::III })
}

/// Type of a group game on `Z_9`: orbit of `[1,4]` under the units gives I,
/// orbit of `{1,5,6,7}` gives II, the rest III.
pub fn classify9_group(g: &FiniteGroup, a: &GameSubset) -> Result<GameType> {
    let z9 = groups::cyclic_group(9)?;
    if g != &z9 {
        return Err(Error::WrongGroup);
    }
    if !groups::is_game_subset(g, a.mask) {
        return Err(Error::NotGameSubset);
    }
    let orbit = |elems: &[usize]| {
        let base = GameSubset::from_elements(9, elems).mask;
        groups::units(9).into_iter().any(|u| groups::multiply_subset(9, base, u) == a.mask)
    };
    Ok(if orbit(&[1, 2, 3, 4]) {
        GameType::I
    } else if orbit(&[1, 5, 6, 7]) {
        GameType::II
    } else {
        GameType::III
    })
}

/// Structure of a vertex map from a big tournament onto a small digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    /// `theta(a) -> theta(b)` in `small` implies `a -> b` in `big`.
    pub is_morphism: bool,
    pub fibers_are_games: bool,
    pub fiber_sizes_equal: bool,
    pub base_is_game: bool,
    pub big_is_game: bool,
}

impl ProjectionReport {
    /// For a morphism, any two of {base a game, fibers equal-size games,
    /// big a game} give the third.
    pub fn two_of_three_holds(&self) -> bool {
        if !self.is_morphism {
            return true;
        }
        let fib = self.fibers_are_games && self.fiber_sizes_equal;
        let n = [self.base_is_game, fib, self.big_is_game].iter().filter(|&&b| b).count();
        n != 2
    }
}

pub fn check_projection(theta: &[usize], big: &Digraph, small: &Digraph) -> Result<ProjectionReport> {
    if theta.len() != big.p() {
        return Err(Error::SizeMismatch);
    }
    let mut fibers = vec![0u64; small.p()];
    for (v, &t) in theta.iter().enumerate() {
        if t >= small.p() {
            return Err(Error::VertexOutOfRange(t));
        }
        fibers[t] |= 1 << v;
    }
    if fibers.iter().any(|&f| f == 0) {
        return Err(Error::NotSurjective);
    }
    let mut is_morphism = true;
    for a in 0..big.p() {
        for b in 0..big.p() {
            if theta[a] != theta[b] && small.has(theta[a], theta[b]) && !big.has(a, b) {
                is_morphism = false;
            }
        }
    }
    let fibers_are_games = fibers.iter().all(|&f| big.restrict_mask(f).0.is_game());
    let fiber_sizes_equal = fibers.iter().all(|f| f.count_ones() == fibers[0].count_ones());
    Ok(ProjectionReport {
        is_morphism,
        fibers_are_games,
        fiber_sizes_equal,
        base_is_game: small.is_game(),
        big_is_game: big.is_game(),
    })
}

/// Computed `|Aut(gamma ⋉ pi)|` against `|Aut gamma| * |Aut pi|^|gamma|`.
pub fn aut_product_law_check(gamma: &Digraph, pi: &Digraph) -> Result<bool> {
    let prod = crate::construct::lex_product(gamma, pi)?;
    let lhs = automorphisms(&prod)?.order() as u128;
    let ag = automorphisms(gamma)?.order() as u128;
    let ap = automorphisms(pi)?.order() as u128;
    Ok(lhs == ag * ap.pow(gamma.p() as u32))
}

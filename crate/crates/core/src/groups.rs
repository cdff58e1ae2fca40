//! Finite groups as Cayley tables, game subsets and the games they define.

use alloc::vec;
use alloc::vec::Vec;

use crate::construct;
use crate::digraph::{Digraph, Perm};
use crate::error::{Error, Result};

/// Largest group order handled. Group games themselves need order <= 64.
pub const MAX_ORDER: usize = 128;

/// A group on `0..m` with identity 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    m: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a Cayley table (row-major, `table[a*m+b] = a*b`): closure,
    /// identity 0, inverses and associativity.
    pub fn from_table(m: usize, table: Vec<usize>) -> Result<Self> {
        if m == 0 || m > MAX_ORDER {
            return Err(Error::TooLarge);
        }
        if table.len() != m * m || table.iter().any(|&x| x >= m) {
            return Err(Error::NotGroup);
        }
        let at = |a: usize, b: usize| table[a * m + b];
        if (0..m).any(|a| at(0, a) != a || at(a, 0) != a) {
            return Err(Error::NotGroup);
        }
        let mut inv = vec![usize::MAX; m];
        for a in 0..m {
            match (0..m).find(|&b| at(a, b) == 0) {
                Some(b) if at(b, a) == 0 => inv[a] = b,
                _ => return Err(Error::NotGroup),
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = at(a, b);
                for c in 0..m {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotGroup);
                    }
                }
            }
        }
        Ok(FiniteGroup { m, mult: table, inv })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.m + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.mult
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.m).fold(1, |e, a| crate::digraph::lcm(e as u64, self.element_order(a) as u64) as usize)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.m).all(|a| (0..self.m).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Left translation `x -> k x` as a permutation.
    pub fn translation(&self, k: usize) -> Perm {
        Perm::new((0..self.m).map(|x| self.mul(k, x)).collect()).expect("Latin row")
    }
}

/// `Z_m` with `i * j = (i + j) mod m`.
pub fn cyclic_group(m: usize) -> Result<FiniteGroup> {
    let table = (0..m * m).map(|k| (k / m.max(1) + k % m.max(1)) % m.max(1)).collect();
    FiniteGroup::from_table(m, table)
}

/// `G1 × G2`, element `(a, b)` at index `a * |G2| + b`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    let (m1, m2) = (g1.order(), g2.order());
    let m = m1 * m2;
    if m > MAX_ORDER {
        return Err(Error::TooLarge);
    }
    let mut table = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            table[x * m + y] = g1.mul(x / m2, y / m2) * m2 + g2.mul(x % m2, y % m2);
        }
    }
    FiniteGroup::from_table(m, table)
}

/// `Z_q ⋉ Z_p` with `Z_q` acting by multiplication by `a`; element `(x, y)`
/// with `x` in `Z_p`, `y` in `Z_q` sits at index `y * p + x`, and
/// `(x1, y1)(x2, y2) = (x1 + a^y1 x2, y1 + y2)`.
pub fn semidirect_cyclic(q: usize, p: usize, a: usize) -> Result<FiniteGroup> {
    if p == 0 || q == 0 || pow_mod(a, q, p) != 1 % p {
        return Err(Error::BadAction);
    }
    let m = p * q;
    if m > MAX_ORDER {
        return Err(Error::TooLarge);
    }
    let mut table = vec![0; m * m];
    for s in 0..m {
        let (x1, y1) = (s % p, s / p);
        for t in 0..m {
            let (x2, y2) = (t % p, t / p);
            let x = (x1 + pow_mod(a, y1, p) * x2) % p;
            let y = (y1 + y2) % q;
            table[s * m + t] = y * p + x;
        }
    }
    FiniteGroup::from_table(m, table)
}

pub fn pow_mod(mut b: usize, mut e: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub fn euler_phi(m: usize) -> usize {
    units(m).len()
}

/// Residues in `1..m` coprime to `m` (`{0}` for `m = 1`).
pub fn units(m: usize) -> Vec<usize> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&a| crate::digraph::gcd(a as u64, m as u64) == 1).collect()
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// True iff `m` is a product of distinct primes of the form `2^(2^k) + 1`.
pub fn is_fermat_square_free(m: usize) -> bool {
    if m < 2 {
        return false;
    }
    let mut rest = m;
    let mut d = 2;
    while rest > 1 {
        if d * d > rest {
            d = rest;
        }
        if rest % d == 0 {
            rest /= d;
            if rest % d == 0 || !is_fermat_prime(d) {
                return false;
            }
        }
        d += 1;
    }
    true
}

fn is_fermat_prime(p: usize) -> bool {
    matches!(p, 3 | 5 | 17 | 257 | 65537)
}

/// A subset of group elements as a bit mask (bit `x` for element `x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameSubset {
    pub m: usize,
    pub mask: u128,
}

impl GameSubset {
    pub fn from_elements(m: usize, elems: &[usize]) -> GameSubset {
        GameSubset { m, mask: elems.iter().fold(0, |s, &x| s | 1u128 << (x % m)) }
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.m).filter(|&x| self.mask >> x & 1 == 1).collect()
    }

    /// Bit string with character `x` for element `x`.
    pub fn bitstring(&self) -> alloc::string::String {
        (0..self.m).map(|x| if self.mask >> x & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// Sort key matching lexicographic order of [`GameSubset::bitstring`].
    pub fn lex_key(&self) -> u128 {
        self.mask.reverse_bits() >> (128 - self.m)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

fn sort_lex(v: &mut [GameSubset]) {
    v.sort_by_key(|s| s.lex_key());
}

fn inverse_mask(g: &FiniteGroup, mask: u128) -> u128 {
    (0..g.order()).filter(|&x| mask >> x & 1 == 1).fold(0, |s, x| s | 1u128 << g.inv(x))
}

/// `e ∉ A` and `A ∩ A⁻¹ = ∅`.
pub fn is_graph_subset(g: &FiniteGroup, mask: u128) -> bool {
    mask & 1 == 0 && mask & inverse_mask(g, mask) == 0 && mask >> g.order() == 0
}

/// A graph subset with `(m-1)/2` elements: `{e}`, `A`, `A⁻¹` partition `G`.
pub fn is_game_subset(g: &FiniteGroup, mask: u128) -> bool {
    is_graph_subset(g, mask) && 2 * mask.count_ones() as usize + 1 == g.order()
}

/// Unordered pairs `{x, x⁻¹}` of non-identity elements inside `within`,
/// keyed by their least element.
fn inverse_pairs(g: &FiniteGroup, within: u128) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 1..g.order() {
        let y = g.inv(x);
        if within >> x & 1 == 1 && x < y {
            out.push((x, y));
        }
    }
    out
}

fn full(m: usize) -> u128 {
    if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

/// All `2^((m-1)/2)` game subsets in lexicographic bit-string order.
pub fn enumerate_game_subsets(g: &FiniteGroup) -> Result<Vec<GameSubset>> {
    if g.order() % 2 == 0 {
        return Err(Error::EvenOrder);
    }
    let pairs = inverse_pairs(g, full(g.order()));
    if pairs.len() > 24 {
        return Err(Error::TooLarge);
    }
    let blocks: Vec<[u128; 2]> = pairs.iter().map(|&(x, y)| [1u128 << x, 1u128 << y]).collect();
    Ok(choose_blocks(g.order(), 0, &blocks))
}

/// Every union picking one side of each block pair, added to `base`, in
/// lexicographic bit-string order.
fn choose_blocks(m: usize, base: u128, blocks: &[[u128; 2]]) -> Vec<GameSubset> {
    let mut out = Vec::with_capacity(1 << blocks.len());
    for bitsel in 0..(1u64 << blocks.len()) {
        let mut mask = base;
        for (k, b) in blocks.iter().enumerate() {
            mask |= b[(bitsel >> k & 1) as usize];
        }
        out.push(GameSubset { m, mask });
    }
    sort_lex(&mut out);
    out
}

/// `Γ[A]`: `i -> j` iff `i⁻¹ j ∈ A`.
pub fn group_game(g: &FiniteGroup, a: &GameSubset) -> Result<Digraph> {
    if a.m != g.order() || !is_game_subset(g, a.mask) {
        return Err(Error::NotGameSubset);
    }
    graph_of_subset(g, a.mask)
}

/// The digraph of a graph subset (not necessarily of full size).
pub fn graph_of_subset(g: &FiniteGroup, mask: u128) -> Result<Digraph> {
    if !is_graph_subset(g, mask) {
        return Err(Error::NotGameSubset);
    }
    if g.order() > crate::digraph::MAX_P {
        return Err(Error::TooLarge);
    }
    Digraph::from_fn(g.order(), |i, j| mask >> g.mul(g.inv(i), j) & 1 == 1)
}

/// Image of a subset under an element permutation.
pub fn map_subset(xi: &Perm, mask: u128) -> u128 {
    (0..xi.len()).filter(|&x| mask >> x & 1 == 1).fold(0, |s, x| s | 1u128 << xi.apply(x))
}

/// `m_u(A) = {u a mod m}` on `Z_m`.
pub fn multiply_subset(m: usize, mask: u128, u: usize) -> u128 {
    (0..m).filter(|&x| mask >> x & 1 == 1).fold(0, |s, x| s | 1u128 << (u * x % m))
}

fn preserves_table(g: &FiniteGroup, xi: &Perm) -> bool {
    let m = g.order();
    (0..m).all(|a| (0..m).all(|b| xi.apply(g.mul(a, b)) == g.mul(xi.apply(a), xi.apply(b))))
}

/// The automorphism group of `g`, sorted. Cyclic groups use the units;
/// other groups are searched exhaustively up to order 9.
pub fn group_automorphisms(g: &FiniteGroup) -> Result<Vec<Perm>> {
    let m = g.order();
    if let Some(gen) = (0..m).find(|&x| g.element_order(x) == m) {
        // x = gen^k  ->  gen^(u k)
        let mut log = vec![0; m];
        let mut x = 0;
        for k in 0..m {
            log[x] = k;
            x = g.mul(x, gen);
        }
        let mut pow = vec![0; m];
        for (x, &k) in log.iter().enumerate() {
            pow[k] = x;
        }
        let mut out: Vec<Perm> = units(m)
            .into_iter()
            .map(|u| Perm::new((0..m).map(|x| pow[u * log[x] % m]).collect()).unwrap())
            .collect();
        out.sort();
        return Ok(out);
    }
    if m > 9 {
        return Err(Error::TooLarge);
    }
    let mut out = Vec::new();
    let mut img = vec![0usize; m];
    fn go(g: &FiniteGroup, k: usize, img: &mut Vec<usize>, used: u64, out: &mut Vec<Perm>) {
        let m = g.order();
        if k == m {
            let xi = Perm::new(img.clone()).unwrap();
            if preserves_table(g, &xi) {
                out.push(xi);
            }
            return;
        }
        for y in 1..m {
            if used >> y & 1 == 0 {
                img[k] = y;
                go(g, k + 1, img, used | 1 << y, out);
            }
        }
    }
    go(g, 1, &mut img, 1, &mut out);
    out.sort();
    Ok(out)
}

/// `{ξ(A) : ξ ∈ G*}`, valid when `Aut(Γ[A])` is exactly the translations.
pub fn isomorphic_subset_family(g: &FiniteGroup, a: &GameSubset) -> Result<Vec<GameSubset>> {
    let game = group_game(g, a)?;
    if crate::morph::automorphisms(&game)?.order() != g.order() {
        return Err(Error::ExtraAutomorphisms);
    }
    let mut out: Vec<GameSubset> = group_automorphisms(g)?
        .iter()
        .map(|xi| GameSubset { m: a.m, mask: map_subset(xi, a.mask) })
        .collect();
    sort_lex(&mut out);
    out.dedup();
    Ok(out)
}

/// Closure of a set of permutations under composition, sorted.
pub fn closure(gens: &[Perm], n: usize) -> Result<Vec<Perm>> {
    let mut elems = vec![Perm::identity(n)];
    let mut k = 0;
    while k < elems.len() {
        for s in gens {
            if s.len() != n {
                return Err(Error::SizeMismatch);
            }
            let t = s.compose(&elems[k]);
            if !elems.contains(&t) {
                if elems.len() >= 4096 {
                    return Err(Error::TooLarge);
                }
                elems.push(t);
            }
        }
        k += 1;
    }
    elems.sort();
    Ok(elems)
}

/// Game subsets fixed by every automorphism in `h` (closed under generation).
pub fn h_invariant_subsets(g: &FiniteGroup, h: &[Perm]) -> Result<Vec<GameSubset>> {
    let m = g.order();
    if m % 2 == 0 {
        return Err(Error::EvenOrder);
    }
    if h.iter().any(|xi| xi.len() != m || !preserves_table(g, xi)) {
        return Err(Error::NotAutomorphism);
    }
    let hh = closure(h, m)?;
    if hh.len() % 2 == 0 {
        return Err(Error::EvenOrderSubgroup);
    }
    let mut seen = 1u128;
    let mut blocks = Vec::new();
    for x in 1..m {
        if seen >> x & 1 == 1 {
            continue;
        }
        let orbit = hh.iter().fold(0u128, |s, xi| s | 1u128 << xi.apply(x));
        let inv = inverse_mask(g, orbit);
        debug_assert_eq!(orbit & inv, 0, "odd-order orbits never contain inverses");
        seen |= orbit | inv;
        blocks.push([orbit, inv]);
    }
    Ok(choose_blocks(m, 0, &blocks))
}

/// Non-zero squares mod a prime `p ≡ 3 (mod 4)`.
pub fn quadratic_residue_subset(p: usize) -> Result<GameSubset> {
    if !is_prime(p) || p % 4 != 3 || p > MAX_ORDER {
        return Err(Error::BadPrime);
    }
    Ok(GameSubset::from_elements(p, &(1..p).map(|x| x * x % p).collect::<Vec<_>>()))
}

pub fn is_subgroup(g: &FiniteGroup, h: u128) -> bool {
    let m = g.order();
    h & 1 == 1
        && h >> m == 0
        && (0..m).all(|a| h >> a & 1 == 0 || (0..m).all(|b| h >> b & 1 == 0 || h >> g.mul(a, g.inv(b)) & 1 == 1))
}

/// Double cosets `H i H`, ordered by least element, with the block holding
/// the inverses of each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosets {
    pub blocks: Vec<u128>,
    pub inverse_of: Vec<usize>,
}

pub fn double_cosets(g: &FiniteGroup, h: u128) -> Result<DoubleCosets> {
    if !is_subgroup(g, h) {
        return Err(Error::NotSubgroup);
    }
    let m = g.order();
    let hs: Vec<usize> = (0..m).filter(|&x| h >> x & 1 == 1).collect();
    let mut seen = 0u128;
    let mut blocks = Vec::new();
    for i in 0..m {
        if seen >> i & 1 == 1 {
            continue;
        }
        let mut b = 0u128;
        for &x in &hs {
            for &y in &hs {
                b |= 1u128 << g.mul(g.mul(x, i), y);
            }
        }
        seen |= b;
        blocks.push(b);
    }
    let inverse_of = blocks
        .iter()
        .map(|&b| {
            let inv = inverse_mask(g, b);
            blocks.iter().position(|&c| c == inv).expect("inverse of a double coset is one")
        })
        .collect();
    Ok(DoubleCosets { blocks, inverse_of })
}

/// `A ∩ H` a game subset of `H` and `A \ H` a union of double cosets.
pub fn is_pair_subset(g: &FiniteGroup, h: u128, a: u128) -> bool {
    if !is_game_subset(g, a) || !is_subgroup(g, h) {
        return false;
    }
    let inside = a & h;
    if 2 * inside.count_ones() + 1 != h.count_ones() {
        return false;
    }
    let Ok(dc) = double_cosets(g, h) else { return false };
    dc.blocks.iter().all(|&b| b & h != 0 || b & a == 0 || b & a == b)
}

/// Game subsets for the pair `(G, H)`, lexicographic.
pub fn pair_game_subsets(g: &FiniteGroup, h: u128) -> Result<Vec<GameSubset>> {
    let m = g.order();
    if m % 2 == 0 {
        return Err(Error::EvenOrder);
    }
    let dc = double_cosets(g, h)?;
    if h.count_ones() % 2 == 0 {
        return Err(Error::EvenOrderSubgroup);
    }
    let mut blocks: Vec<[u128; 2]> = inverse_pairs(g, h).iter().map(|&(x, y)| [1u128 << x, 1u128 << y]).collect();
    for (k, &b) in dc.blocks.iter().enumerate() {
        let j = dc.inverse_of[k];
        if b & h == 0 && k < j {
            blocks.push([b, dc.blocks[j]]);
        }
    }
    Ok(choose_blocks(m, 0, &blocks))
}

/// Left cosets `xH`, ordered by least element; the map sends an element to
/// its coset index.
pub fn left_cosets(g: &FiniteGroup, h: u128) -> (Vec<u128>, Vec<usize>) {
    let m = g.order();
    let mut cosets = Vec::new();
    let mut proj = vec![usize::MAX; m];
    for x in 0..m {
        if proj[x] != usize::MAX {
            continue;
        }
        let c = (0..m).filter(|&y| h >> y & 1 == 1).fold(0u128, |s, y| s | 1u128 << g.mul(x, y));
        for y in 0..m {
            if c >> y & 1 == 1 {
                proj[y] = cosets.len();
            }
        }
        cosets.push(c);
    }
    (cosets, proj)
}

/// `Γ[A/H]` on the left cosets, with the projection from `G`.
pub fn quotient_game(g: &FiniteGroup, h: u128, a: &GameSubset) -> Result<(Digraph, Vec<usize>)> {
    if !is_pair_subset(g, h, a.mask) {
        return Err(Error::NotPairSubset);
    }
    let (cosets, proj) = left_cosets(g, h);
    if cosets.len() > crate::digraph::MAX_P {
        return Err(Error::TooLarge);
    }
    let reps: Vec<usize> = cosets.iter().map(|c| c.trailing_zeros() as usize).collect();
    let outside = a.mask & !h;
    let q = Digraph::from_fn(cosets.len(), |x, y| outside >> g.mul(g.inv(reps[x]), reps[y]) & 1 == 1)?;
    Ok((q, proj))
}

/// Explicit isomorphism `Γ[A] -> Γ[A/H] ⋉ Γ[A ∩ H]`: element `g = j(X) h`
/// (section `j` = least element of the coset `X`) goes to `X * |H| + idx(h)`,
/// `idx` ranking `H` increasingly. Returns the map and the product.
pub fn lex_factorization_check(g: &FiniteGroup, h: u128, a: &GameSubset) -> Result<(Perm, Digraph)> {
    let (q, proj) = quotient_game(g, h, a)?;
    let m = g.order();
    let hs: Vec<usize> = (0..m).filter(|&x| h >> x & 1 == 1).collect();
    let inner = Digraph::from_fn(hs.len(), |k, l| a.mask >> g.mul(g.inv(hs[k]), hs[l]) & 1 == 1)?;
    let (cosets, _) = left_cosets(g, h);
    let reps: Vec<usize> = cosets.iter().map(|c| c.trailing_zeros() as usize).collect();
    let w: Vec<usize> = (0..m)
        .map(|x| {
            let hx = g.mul(g.inv(reps[proj[x]]), x);
            proj[x] * hs.len() + hs.iter().position(|&y| y == hx).unwrap()
        })
        .collect();
    let w = Perm::new(w)?;
    let prod = construct::lex_product(&q, &inner)?;
    if group_game(g, a)?.relabel(&w) != prod {
        return Err(Error::NotPairSubset);
    }
    Ok((w, prod))
}

/// Orbit of a vertex under an odd-order group of automorphisms, with the
/// homogeneous-game description of the restriction to it.
#[derive(Clone, Debug)]
pub struct OrbitSubgame {
    pub orbit: Vec<usize>,
    pub restriction: Digraph,
    /// The acting group as permutations; element `k` is `elements[k]`.
    pub elements: Vec<Perm>,
    pub group: FiniteGroup,
    pub isotropy: u128,
    pub subset: GameSubset,
    pub quotient: Digraph,
    /// Coset index to position in `orbit`; carries `quotient` onto `restriction`.
    pub iso: Perm,
}

pub fn orbit_subgame(g: &Digraph, action: &[Perm], a: usize) -> Result<OrbitSubgame> {
    if a >= g.p() {
        return Err(Error::VertexOutOfRange(a));
    }
    if action.iter().any(|s| s.len() != g.p() || !s.is_automorphism(g)) {
        return Err(Error::NotAutomorphism);
    }
    let elements = closure(action, g.p())?;
    let m = elements.len();
    if m % 2 == 0 {
        return Err(Error::EvenOrderAction);
    }
    if m > MAX_ORDER {
        return Err(Error::TooLarge);
    }
    let mut table = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            let c = elements[x].compose(&elements[y]);
            table[x * m + y] = elements.binary_search(&c).expect("closed");
        }
    }
    let group = FiniteGroup::from_table(m, table)?;
    let mut orbit: Vec<usize> = elements.iter().map(|s| s.apply(a)).collect();
    orbit.sort_unstable();
    orbit.dedup();
    let (restriction, _) = g.restrict(&orbit)?;
    let isotropy = (0..m).filter(|&x| elements[x].apply(a) == a).fold(0u128, |s, x| s | 1u128 << x);
    let mut mask = 0u128;
    for (x, _) in inverse_pairs(&group, isotropy) {
        mask |= 1u128 << x;
    }
    for (x, s) in elements.iter().enumerate() {
        if g.has(a, s.apply(a)) {
            mask |= 1u128 << x;
        }
    }
    let subset = GameSubset { m, mask };
    let (quotient, proj) = quotient_game(&group, isotropy, &subset)?;
    let mut iso = vec![0; quotient.p()];
    for x in 0..m {
        iso[proj[x]] = orbit.binary_search(&elements[x].apply(a)).unwrap();
    }
    let iso = Perm::new(iso)?;
    debug_assert_eq!(quotient.relabel(&iso), restriction);
    Ok(OrbitSubgame { orbit, restriction, elements, group, isotropy, subset, quotient, iso })
}

/// True iff no unit other than 1 fixes a game subset of `Z_m`.
pub fn units_act_freely(m: usize) -> Result<bool> {
    let z = cyclic_group(m)?;
    let subsets = enumerate_game_subsets(&z)?;
    Ok(units(m).into_iter().filter(|&u| u != 1).all(|u| subsets.iter().all(|a| multiply_subset(m, a.mask, u) != a.mask)))
}

//! Named small games and tournaments used by tests, the acceptance suite and
//! the command line.

use alloc::vec::Vec;

use crate::construct::double;
use crate::digraph::Digraph;
use crate::reversal::reverse_subgraph;

/// The unique game of size 5, `Z5` with `{1, 2}`.
pub fn g5() -> Digraph {
    Digraph::circulant(5, &[1, 2]).unwrap()
}

/// `Z7` with `{1, 2, 3}`.
pub fn g7_i() -> Digraph {
    Digraph::circulant(7, &[1, 2, 3]).unwrap()
}

/// `Z7` with the quadratic residues `{1, 2, 4}`.
pub fn g7_ii() -> Digraph {
    Digraph::circulant(7, &[1, 2, 4]).unwrap()
}

/// `g7_ii` with the 3-cycle `3 -> 5 -> 6 -> 3` reversed.
pub fn g7_iii() -> Digraph {
    let c = Digraph::from_edges(7, &[(3, 5), (5, 6), (6, 3)]).unwrap();
    reverse_subgraph(&g7_ii(), &c).unwrap()
}

/// A 9-cycle with the chords `6 -> 3 -> 0 -> 6`: span 3, balance 6.
pub fn chorded_nine_cycle() -> Digraph {
    let mut e: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
    e.extend([(6, 3), (3, 0), (0, 6)]);
    Digraph::from_edges(9, &e).unwrap()
}

/// Vertex 0 beating the 3-cycle `1 -> 2 -> 3 -> 1`, and the same with the
/// crossing edges reversed. Not isomorphic, but their doubles are.
pub fn twin_double_pair() -> (Digraph, Digraph) {
    let pi = Digraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
    let gamma = Digraph::from_edges(4, &[(1, 0), (2, 0), (3, 0), (1, 2), (2, 3), (3, 1)]).unwrap();
    (pi, gamma)
}

/// Score vector `(1, 1, 2, 2)`: the 4-cycle `0 1 2 3` with `2 -> 0`, `3 -> 1`.
pub fn rigid_four() -> Digraph {
    Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 0), (3, 1)]).unwrap()
}

/// `g5` with a sixth vertex: `4 -> 5` and `5 -> {0, 1, 2, 3}`.
pub fn rigid_six() -> Digraph {
    let mut e = g5().edges();
    e.extend([(4, 5), (5, 0), (5, 1), (5, 2), (5, 3)]);
    Digraph::from_edges(6, &e).unwrap()
}

/// A rigid game of size 9.
pub fn rigid_nine() -> Digraph {
    double(&rigid_four()).unwrap().0
}

/// A rigid game of size 13 not isomorphic to its reverse.
pub fn rigid_thirteen() -> Digraph {
    double(&rigid_six()).unwrap().0
}

/// Score vector `(3, 1, 1, 1)`: vertex 0 beats the 3-cycle `1 2 3`.
pub fn theta_four() -> Digraph {
    twin_double_pair().0
}

/// The double of [`theta_four`] and the same with `1+ -> 2+ -> 3+` reversed:
/// non-isomorphic games of size 9, each with automorphism group `Z3`.
pub fn z3_nine_pair() -> (Digraph, Digraph) {
    let (g, lay) = double(&theta_four()).unwrap();
    let (a, b, c) = (lay.plus[1], lay.plus[2], lay.plus[3]);
    let cyc = Digraph::from_edges(g.p(), &[(a, b), (b, c), (c, a)]).unwrap();
    let bar = reverse_subgraph(&g, &cyc).unwrap();
    (g, bar)
}

/// The double of the 3-cycle, a size-7 game of the third type, with
/// doubles of two of its one-point deletions (at the base and at `0+`).
/// The two size-13 games reduce to the same game but are not isomorphic.
pub fn two_reductions() -> (Digraph, Digraph, Digraph) {
    let (pi, lay) = double(&Digraph::cycle(3).unwrap()).unwrap();
    let keep = |x: usize| -> Vec<usize> { (0..pi.p()).filter(|&v| v != x).collect() };
    let a = double(&pi.restrict(&keep(lay.base)).unwrap().0).unwrap().0;
    let b = double(&pi.restrict(&keep(lay.plus[0])).unwrap().0).unwrap().0;
    (pi, a, b)
}

/// Two 3-cycles `0 1 2` and `3 4 5` with `{0, 1, 2} -> {3, 4, 5}`.
pub fn two_triangles() -> Digraph {
    let mut e = Vec::from([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    Digraph::from_edges(6, &e).unwrap()
}

/// `C3 ⋉ C3`, a tournament on 5 vertices, and the map collapsing the second
/// and third fibers to the vertices 3 and 4.
pub fn collapsed_product() -> (Digraph, Digraph, Vec<usize>) {
    let c3 = Digraph::cycle(3).unwrap();
    let theta = crate::construct::lex_product(&c3, &c3).unwrap();
    let gamma = Digraph::from_edges(
        5,
        &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (3, 4), (4, 0), (4, 1), (4, 2)],
    )
    .unwrap();
    let map = (0..9).map(|x| if x < 3 { x } else if x < 6 { 3 } else { 4 }).collect();
    (theta, gamma, map)
}

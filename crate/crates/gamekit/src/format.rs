//! Text formats: graphs, decompositions, plans, groups and subsets.
//!
//! All writers end every line with `\n`; all readers skip lines starting
//! with `#` and blank lines.

use std::fmt::Write as _;

use gamekit_core::eulerian::{Cycle, DecompReport};
use gamekit_core::groups::{FiniteGroup, GameSubset};
use gamekit_core::reversal::Plan;
use gamekit_core::Digraph;

use crate::error::{AppError, AppResult};

/// Graph header classes, weakest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Header {
    Digraph,
    Tournament,
    Game,
}

impl Header {
    pub fn keyword(self) -> &'static str {
        match self {
            Header::Digraph => "digraph",
            Header::Tournament => "tournament",
            Header::Game => "game",
        }
    }

    /// The strongest header that is true of `g`.
    pub fn of(g: &Digraph) -> Header {
        if g.is_game() {
            Header::Game
        } else if g.is_tournament() {
            Header::Tournament
        } else {
            Header::Digraph
        }
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
}

fn parse_num(line: usize, s: &str) -> AppResult<usize> {
    s.parse().map_err(|_| AppError::parse(line, format!("expected a number, found `{s}`")))
}

pub fn write_graph(g: &Digraph) -> String {
    let mut s = format!("{} {}\n", Header::of(g).keyword(), g.p());
    for i in 0..g.p() {
        for j in 0..g.p() {
            s.push(if g.has(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

/// Parse a graph and check the header's claim.
pub fn parse_graph(text: &str) -> AppResult<Digraph> {
    let (g, header) = parse_graph_with_header(text)?;
    let ok = match header {
        Header::Digraph => true,
        Header::Tournament => g.is_tournament(),
        Header::Game => g.is_game(),
    };
    if !ok {
        return Err(AppError::HeaderClassMismatch { header: header.keyword().into() });
    }
    Ok(g)
}

pub fn parse_graph_with_header(text: &str) -> AppResult<(Digraph, Header)> {
    let mut lines = content_lines(text);
    let (hl, head) = lines.next().ok_or_else(|| AppError::parse(1, "missing header"))?;
    let mut words = head.split_whitespace();
    let header = match words.next() {
        Some("digraph") => Header::Digraph,
        Some("tournament") => Header::Tournament,
        Some("game") => Header::Game,
        other => return Err(AppError::parse(hl, format!("unknown header `{}`", other.unwrap_or("")))),
    };
    let p = parse_num(hl, words.next().ok_or_else(|| AppError::parse(hl, "missing size"))?)?;
    if words.next().is_some() {
        return Err(AppError::parse(hl, "trailing text after size"));
    }
    if p > gamekit_core::digraph::MAX_P {
        return Err(gamekit_core::Error::TooLarge.into());
    }
    let mut rows = Vec::with_capacity(p);
    for (ln, l) in lines {
        if rows.len() == p {
            return Err(AppError::parse(ln, "more rows than the header says"));
        }
        if l.len() != p || !l.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(AppError::parse(ln, format!("expected {p} characters from 0/1")));
        }
        rows.push(l.bytes().enumerate().fold(0u64, |m, (j, b)| m | u64::from(b == b'1') << j));
    }
    if rows.len() != p {
        return Err(AppError::parse(hl, format!("expected {p} rows, found {}", rows.len())));
    }
    Ok((Digraph::from_rows(p, &rows)?, header))
}

fn write_cycle_line(s: &mut String, tag: &str, c: &[usize]) {
    s.push_str(tag);
    for v in c {
        let _ = write!(s, " {v}");
    }
    s.push('\n');
}

pub fn write_decomposition(r: &DecompReport) -> String {
    let mut s = String::new();
    for c in &r.witness {
        write_cycle_line(&mut s, "c", c);
    }
    let _ = writeln!(s, "span={} balance={} edges={}", r.span, r.balance, r.edge_count);
    s
}

/// Cycles and, if present, the `span= balance= edges=` line.
pub fn parse_decomposition(text: &str) -> AppResult<(Vec<Cycle>, Option<(usize, usize, usize)>)> {
    let mut cycles = Vec::new();
    let mut report = None;
    for (ln, l) in content_lines(text) {
        let mut w = l.split_whitespace();
        match w.next() {
            Some("c") => cycles.push(w.map(|x| parse_num(ln, x)).collect::<AppResult<Vec<_>>>()?),
            Some(first) if first.starts_with("span=") => {
                let mut vals = [None; 3];
                for (k, part) in std::iter::once(first).chain(w).enumerate() {
                    let key = ["span=", "balance=", "edges="].get(k).ok_or_else(|| AppError::parse(ln, "extra field"))?;
                    let v = part.strip_prefix(key).ok_or_else(|| AppError::parse(ln, format!("expected `{key}`")))?;
                    vals[k] = Some(parse_num(ln, v)?);
                }
                match vals {
                    [Some(a), Some(b), Some(c)] => report = Some((a, b, c)),
                    _ => return Err(AppError::parse(ln, "incomplete report line")),
                }
            }
            _ => return Err(AppError::parse(ln, "expected `c ...` or a report line")),
        }
    }
    Ok((cycles, report))
}

pub fn write_plan(plan: &Plan) -> String {
    let mut s = String::new();
    for c in plan {
        write_cycle_line(&mut s, if c.len() == 3 { "r3" } else { "r4" }, c);
    }
    s
}

pub fn parse_plan(text: &str) -> AppResult<Plan> {
    let mut plan = Vec::new();
    for (ln, l) in content_lines(text) {
        let mut w = l.split_whitespace();
        let k = match w.next() {
            Some("r3") => 3,
            Some("r4") => 4,
            _ => return Err(AppError::parse(ln, "expected `r3` or `r4`")),
        };
        let c = w.map(|x| parse_num(ln, x)).collect::<AppResult<Vec<_>>>()?;
        if c.len() != k {
            return Err(AppError::parse(ln, format!("expected {k} vertices")));
        }
        plan.push(c);
    }
    Ok(plan)
}

pub fn write_group(g: &FiniteGroup) -> String {
    let m = g.order();
    let mut s = format!("group {m}\n");
    for a in 0..m {
        let row: Vec<String> = (0..m).map(|b| g.mul(a, b).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_group(text: &str) -> AppResult<FiniteGroup> {
    let mut lines = content_lines(text);
    let (hl, head) = lines.next().ok_or_else(|| AppError::parse(1, "missing header"))?;
    let m = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["group", m] => parse_num(hl, m)?,
        _ => return Err(AppError::parse(hl, "expected `group <m>`")),
    };
    let mut table = Vec::with_capacity(m * m);
    let mut rows = 0;
    for (ln, l) in lines {
        let row = l.split_whitespace().map(|x| parse_num(ln, x)).collect::<AppResult<Vec<_>>>()?;
        if row.len() != m || rows == m {
            return Err(AppError::parse(ln, format!("expected {m} rows of {m} entries")));
        }
        table.extend(row);
        rows += 1;
    }
    if rows != m {
        return Err(AppError::parse(hl, format!("expected {m} rows, found {rows}")));
    }
    Ok(FiniteGroup::from_table(m, table)?)
}

pub fn write_subset(a: &GameSubset) -> String {
    format!("subset {} {}\n", a.m, a.bitstring())
}

pub fn parse_subset(text: &str) -> AppResult<GameSubset> {
    let mut lines = content_lines(text);
    let (ln, l) = lines.next().ok_or_else(|| AppError::parse(1, "missing subset line"))?;
    if let Some((ln2, _)) = lines.next() {
        return Err(AppError::parse(ln2, "one subset per file"));
    }
    parse_subset_line(ln, l)
}

pub fn parse_subset_line(ln: usize, l: &str) -> AppResult<GameSubset> {
    match l.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["subset", m, bits] => {
            let m = parse_num(ln, m)?;
            if m > 128 {
                return Err(gamekit_core::Error::TooLarge.into());
            }
            if bits.len() != m || !bits.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(AppError::parse(ln, format!("expected {m} characters from 0/1")));
            }
            let mask = bits.bytes().enumerate().fold(0u128, |s, (x, b)| s | u128::from(b == b'1') << x);
            Ok(GameSubset { m, mask })
        }
        _ => Err(AppError::parse(ln, "expected `subset <m> <bitstring>`")),
    }
}

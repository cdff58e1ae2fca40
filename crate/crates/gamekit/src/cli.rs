//! The `gamekit` command line.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use gamekit_core::construct::{self, RStructure, Sep};
use gamekit_core::groups::{self, FiniteGroup, GameSubset};
use gamekit_core::{atlas, eulerian, morph, reversal, Digraph, Error as CoreError, Perm};
use rand::SeedableRng;

use crate::error::{AppError, AppResult};
use crate::format;
use crate::report;

#[derive(Parser, Debug)]
#[command(name = "gamekit", version, about = "Tournaments, games and 3-cycle reversals")]
pub struct Cli {
    /// Seed for randomised commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker count; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build graphs.
    #[command(subcommand)]
    Gen(Gen),
    /// Inspect one graph.
    #[command(subcommand)]
    Analyze(Analyze),
    /// Reversal plans between games.
    #[command(subcommand)]
    Plan(PlanCmd),
    /// Isomorphism and automorphisms.
    #[command(subcommand)]
    Iso(Iso),
    /// Finite groups and group games.
    #[command(subcommand)]
    Groups(GroupsCmd),
    /// Exhaustive tables of small games.
    #[command(subcommand)]
    Atlas(AtlasCmd),
    /// Saturation stages and embedding extension.
    #[command(subcommand)]
    Universal(Universal),
}

#[derive(Args, Debug)]
pub struct GroupSource {
    /// Use the cyclic group of this order.
    #[arg(long, conflicts_with = "group")]
    pub cyclic: Option<usize>,
    /// Read a Cayley table file.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Args, Debug)]
pub struct SubsetSource {
    /// Elements, comma separated.
    #[arg(long, conflicts_with = "subset_file")]
    pub subset: Option<String>,
    /// Read a subset file.
    #[arg(long)]
    pub subset_file: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Gen {
    /// Double of a tournament.
    Double { input: String },
    /// Lexicographic product.
    Lex { gamma: String, pi: String },
    /// Extension of a game by two vertices.
    Extend {
        input: String,
        /// The set K, comma separated.
        #[arg(long)]
        k: String,
    },
    /// Group game of a game subset.
    Group {
        #[command(flatten)]
        group: GroupSource,
        #[command(flatten)]
        subset: SubsetSource,
    },
    /// Quadratic-residue game on a prime.
    Qr { p: usize },
    /// Pointed game with the given halves.
    Realize { plus: String, minus: String },
    /// Complete an Eulerian digraph to a game.
    Complete { input: String },
    /// One saturation step.
    Saturate { input: String },
    /// Random game of the given odd size.
    Random { p: usize },
}

#[derive(Subcommand, Debug)]
pub enum Analyze {
    Scores { input: String },
    Classify { input: String },
    /// 3-cycle counts.
    Cycles { input: String },
    /// Maximum cycle decomposition.
    Span { input: String },
    /// 3-cycle decomposition, if any.
    Steiner { input: String },
    /// Reducibility graph.
    Reducibility { input: String },
    /// Simple extension property of a vertex set.
    Sep {
        input: String,
        #[arg(long)]
        set: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PlanCmd {
    Any { from: String, to: String },
    Optimal { from: String, to: String },
    Bipartite {
        from: String,
        to: String,
        /// One side of the bipartition, comma separated.
        #[arg(long)]
        side: String,
    },
    /// Replay a plan and print the result.
    Apply { from: String, plan: String },
}

#[derive(Subcommand, Debug)]
pub enum Iso {
    Canon { input: String },
    Test { a: String, b: String },
    Aut { input: String },
    Classify7 { input: String },
}

#[derive(Subcommand, Debug)]
pub enum GroupsCmd {
    /// All game subsets.
    Subsets {
        #[command(flatten)]
        group: GroupSource,
    },
    /// Game subsets made of double cosets of a subgroup.
    PairSubsets {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long)]
        subgroup: String,
    },
    /// Game on the left cosets of a subgroup.
    Quotient {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long)]
        subgroup: String,
        #[command(flatten)]
        subset: SubsetSource,
    },
    /// Check that a group game with a normal subgroup is a lexicographic product.
    Factorize {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long)]
        subgroup: String,
        #[command(flatten)]
        subset: SubsetSource,
    },
    /// Euler's totient.
    Phi { m: usize },
    /// Fermat square-free test beside the exhaustive unit-action check.
    Fermat { m: usize },
}

#[derive(Subcommand, Debug)]
pub enum AtlasCmd {
    /// Count (and optionally list) labeled games.
    Enumerate {
        p: usize,
        /// Print every game as its upper-triangle key.
        #[arg(long)]
        list: bool,
    },
    /// Isomorphism classes, as JSON.
    Census { p: usize },
    /// Interchange distance and geodesic count.
    Distance { a: String, b: String },
    Diameter { p: usize },
    /// Census, diameter, parity split and counting formulas, as JSON.
    Report { p: usize },
}

#[derive(Subcommand, Debug)]
pub enum Universal {
    /// Saturate a single vertex this many times and print the last stage.
    Stages { k: usize },
    /// Extend an embedding given by anchors `x:y`.
    Embed {
        pi: String,
        gamma: String,
        #[arg(long)]
        anchor: String,
    },
}

/// Run with the given arguments (program name first); returns the exit code.
pub fn run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let res = match &cli.output {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| AppError::Io { path: path.clone(), msg: e.to_string() }),
                None => out.write_all(text.as_bytes()).map_err(|e| AppError::Io { path: "-".into(), msg: e.to_string() }),
            };
            match res {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "{}", e.report());
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.report());
            e.exit_code()
        }
    }
}

fn read_text(path: &str) -> AppResult<String> {
    let io = |e: std::io::Error| AppError::Io { path: path.into(), msg: e.to_string() };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn read_graph(path: &str) -> AppResult<Digraph> {
    format::parse_graph(&read_text(path)?)
}

fn parse_list(s: &str) -> AppResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| AppError::Usage(format!("bad list entry `{x}`"))))
        .collect()
}

fn mask_of(v: &[usize], limit: usize) -> AppResult<u64> {
    v.iter().try_fold(0u64, |m, &x| if x < limit { Ok(m | 1 << x) } else { Err(CoreError::VertexOutOfRange(x).into()) })
}

fn load_group(src: &GroupSource) -> AppResult<FiniteGroup> {
    match (&src.cyclic, &src.group) {
        (Some(m), None) => Ok(groups::cyclic_group(*m)?),
        (None, Some(path)) => format::parse_group(&read_text(path)?),
        _ => Err(AppError::Usage("give exactly one of --cyclic or --group".into())),
    }
}

fn load_subset(src: &SubsetSource, m: usize) -> AppResult<GameSubset> {
    let a = match (&src.subset, &src.subset_file) {
        (Some(list), None) => {
            let v = parse_list(list)?;
            if let Some(&x) = v.iter().find(|&&x| x >= m) {
                return Err(CoreError::VertexOutOfRange(x).into());
            }
            GameSubset::from_elements(m, &v)
        }
        (None, Some(path)) => format::parse_subset(&read_text(path)?)?,
        _ => return Err(AppError::Usage("give exactly one of --subset or --subset-file".into())),
    };
    if a.m != m {
        return Err(CoreError::SizeMismatch.into());
    }
    Ok(a)
}

fn subgroup_mask(g: &FiniteGroup, list: &str) -> AppResult<u128> {
    let v = parse_list(list)?;
    if let Some(&x) = v.iter().find(|&&x| x >= g.order()) {
        return Err(CoreError::VertexOutOfRange(x).into());
    }
    Ok(v.iter().fold(0u128, |m, &x| m | 1 << x))
}

fn join(v: impl IntoIterator<Item = impl ToString>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn perm_line(tag: &str, p: &Perm) -> String {
    format!("{tag} {}\n", join(p.as_slice()))
}

pub fn execute(cli: &Cli) -> AppResult<String> {
    if cli.jobs == 0 {
        return Err(AppError::Usage("--jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::Gen(g) => gen(g, cli.seed),
        Command::Analyze(a) => analyze(a),
        Command::Plan(p) => plan(p),
        Command::Iso(i) => iso(i),
        Command::Groups(g) => groups_cmd(g),
        Command::Atlas(a) => atlas_cmd(a),
        Command::Universal(u) => universal(u),
    }
}

fn gen(cmd: &Gen, seed: u64) -> AppResult<String> {
    let g = match cmd {
        Gen::Double { input } => construct::double(&read_graph(input)?)?.0,
        Gen::Lex { gamma, pi } => construct::lex_product(&read_graph(gamma)?, &read_graph(pi)?)?,
        Gen::Extend { input, k } => {
            let k = parse_list(k)?;
            construct::extend(&read_graph(input)?, &k)?
        }
        Gen::Group { group, subset } => {
            let g = load_group(group)?;
            let a = load_subset(subset, g.order())?;
            groups::group_game(&g, &a)?
        }
        Gen::Qr { p } => {
            let a = groups::quadratic_residue_subset(*p)?;
            groups::group_game(&groups::cyclic_group(*p)?, &a)?
        }
        Gen::Realize { plus, minus } => construct::realize_pointed(&read_graph(plus)?, &read_graph(minus)?)?.g,
        Gen::Complete { input } => construct::eulerian_to_game(&read_graph(input)?)?.0,
        Gen::Saturate { input } => construct::saturate(&read_graph(input)?)?,
        Gen::Random { p } => random_game(*p, seed)?,
    };
    Ok(format::write_graph(&g))
}

/// A seeded random walk of 3-cycle reversals from the cyclic game.
pub fn random_game(p: usize, seed: u64) -> AppResult<Digraph> {
    use rand::Rng;
    if p % 2 == 0 {
        return Err(CoreError::EvenSize.into());
    }
    let n = p / 2;
    let mut g = Digraph::circulant(p, &(1..=n).collect::<Vec<_>>())?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 * p * p {
        let cs = eulerian::three_cycles(&g);
        if cs.is_empty() {
            break;
        }
        let c = cs[rng.gen_range(0..cs.len())];
        g = reversal::replay(&g, &[c.to_vec()])?;
    }
    Ok(g)
}

fn analyze(cmd: &Analyze) -> AppResult<String> {
    match cmd {
        Analyze::Scores { input } => {
            let g = read_graph(input)?;
            Ok(format!("scores {}\nout_degrees {}\n", join(g.scores()), join(g.out_degrees())))
        }
        Analyze::Classify { input } => {
            let c = read_graph(input)?.classify();
            Ok(format!(
                "tournament={} eulerian={} game={} regular={}\n",
                c.is_tournament, c.is_eulerian, c.is_game, c.is_regular
            ))
        }
        Analyze::Cycles { input } => {
            let g = read_graph(input)?;
            let st = eulerian::three_cycle_stats(&g);
            Ok(format!("three_cycles={} formula={}\nper_vertex {}\n", st.total, st.formula_total, join(&st.per_vertex)))
        }
        Analyze::Span { input } => Ok(format::write_decomposition(&eulerian::span(&read_graph(input)?)?)),
        Analyze::Steiner { input } => {
            let g = read_graph(input)?;
            g.check_game()?;
            Ok(match eulerian::steiner_decomposition(&g) {
                Some(ts) => ts.iter().map(|t| format!("c {}\n", join(t))).collect(),
                None => "none\n".into(),
            })
        }
        Analyze::Reducibility { input } => {
            let (r, st) = construct::reducibility_graph(&read_graph(input)?)?;
            let mut s = String::new();
            match st {
                RStructure::Empty => s.push_str("structure=empty\n"),
                RStructure::HamiltonianCycle(c) => s.push_str(&format!("structure=hamiltonian-cycle\ncycle {}\n", join(c))),
                RStructure::Paths(ps) => {
                    s.push_str("structure=paths\n");
                    for p in ps {
                        s.push_str(&format!("path {}\n", join(p)));
                    }
                }
            }
            s.push_str(&format!("edges={}\n", r.edge_count()));
            Ok(s)
        }
        Analyze::Sep { input, set } => {
            let g = read_graph(input)?;
            let verts = parse_list(set)?;
            let t0 = mask_of(&verts, g.p())?;
            let sorted: Vec<usize> = (0..g.p()).filter(|&v| t0 >> v & 1 == 1).collect();
            let bits = |j: u64| sorted.iter().map(|&v| if j >> v & 1 == 1 { '1' } else { '0' }).collect::<String>();
            Ok(match construct::has_sep(&g, t0)? {
                Sep::Witness(w) => {
                    let k = sorted.len();
                    let mut s = String::from("sep=true\n");
                    for (r, v) in w.iter().enumerate() {
                        let j = (0..k).filter(|&x| r >> (k - 1 - x) & 1 == 1).fold(0u64, |m, x| m | 1 << sorted[x]);
                        s.push_str(&format!("choose {} {v}\n", bits(j)));
                    }
                    s
                }
                Sep::Fails(j) => format!("sep=false\nmissing {}\n", bits(j)),
            })
        }
    }
}

fn plan(cmd: &PlanCmd) -> AppResult<String> {
    let p = match cmd {
        PlanCmd::Any { from, to } => reversal::plan_any(&read_graph(from)?, &read_graph(to)?)?,
        PlanCmd::Optimal { from, to } => reversal::plan_optimal(&read_graph(from)?, &read_graph(to)?)?,
        PlanCmd::Bipartite { from, to, side } => {
            let a = read_graph(from)?;
            let side = mask_of(&parse_list(side)?, a.p())?;
            reversal::bipartite_plan(&a, &read_graph(to)?, side)?
        }
        PlanCmd::Apply { from, plan } => {
            let g = reversal::replay(&read_graph(from)?, &format::parse_plan(&read_text(plan)?)?)?;
            return Ok(format::write_graph(&g));
        }
    };
    Ok(format::write_plan(&p))
}

fn iso(cmd: &Iso) -> AppResult<String> {
    match cmd {
        Iso::Canon { input } => Ok(format!("{}\n", morph::canonical_form(&read_graph(input)?)?.hex())),
        Iso::Test { a, b } => Ok(match morph::are_isomorphic(&read_graph(a)?, &read_graph(b)?)? {
            Some(p) => format!("isomorphic=true\n{}", perm_line("map", &p)),
            None => "isomorphic=false\n".into(),
        }),
        Iso::Aut { input } => {
            let aut = morph::automorphisms(&read_graph(input)?)?;
            let mut s = format!("order={}\n", aut.order());
            for p in &aut.perms {
                s.push_str(&perm_line("perm", p));
            }
            Ok(s)
        }
        Iso::Classify7 { input } => Ok(format!("type={}\n", morph::classify7(&read_graph(input)?)?.name())),
    }
}

fn groups_cmd(cmd: &GroupsCmd) -> AppResult<String> {
    match cmd {
        GroupsCmd::Subsets { group } => {
            let g = load_group(group)?;
            Ok(groups::enumerate_game_subsets(&g)?.iter().map(format::write_subset).collect())
        }
        GroupsCmd::PairSubsets { group, subgroup } => {
            let g = load_group(group)?;
            let h = subgroup_mask(&g, subgroup)?;
            Ok(groups::pair_game_subsets(&g, h)?.iter().map(format::write_subset).collect())
        }
        GroupsCmd::Quotient { group, subgroup, subset } => {
            let g = load_group(group)?;
            let h = subgroup_mask(&g, subgroup)?;
            let a = load_subset(subset, g.order())?;
            let (q, proj) = groups::quotient_game(&g, h, &a)?;
            Ok(format!("# projection {}\n{}", join(proj), format::write_graph(&q)))
        }
        GroupsCmd::Factorize { group, subgroup, subset } => {
            let g = load_group(group)?;
            let h = subgroup_mask(&g, subgroup)?;
            let a = load_subset(subset, g.order())?;
            let (iso, product) = groups::lex_factorization_check(&g, h, &a)?;
            Ok(format!("# isomorphism {}\n{}", join(iso.as_slice()), format::write_graph(&product)))
        }
        GroupsCmd::Phi { m } => Ok(format!("{}\n", groups::euler_phi(*m))),
        GroupsCmd::Fermat { m } => Ok(format!(
            "fermat_square_free={} units_act_freely={}\n",
            groups::is_fermat_square_free(*m),
            groups::units_act_freely(*m)?
        )),
    }
}

fn atlas_cmd(cmd: &AtlasCmd) -> AppResult<String> {
    match cmd {
        AtlasCmd::Enumerate { p, list } => {
            let keys = atlas::enumerate_keys(*p)?;
            let mut s = format!("labeled_total={}\n", keys.len());
            if *list {
                for k in keys {
                    s.push_str(&format!("{k:x}\n"));
                }
            }
            Ok(s)
        }
        AtlasCmd::Census { p } => report::census_json(&atlas::census(*p)?),
        AtlasCmd::Distance { a, b } => {
            let (a, b) = (read_graph(a)?, read_graph(b)?);
            Ok(format!(
                "distance={} geodesics={}\n",
                atlas::interchange_distance(&a, &b)?,
                atlas::geodesic_count(&a, &b)?
            ))
        }
        AtlasCmd::Diameter { p } => {
            let d = atlas::diameter(*p)?;
            let n = p / 2;
            Ok(format!("diameter={} n_squared={}\n", d.value, n * n))
        }
        AtlasCmd::Report { p } => report::full_report_json(*p),
    }
}

fn universal(cmd: &Universal) -> AppResult<String> {
    match cmd {
        Universal::Stages { k } => {
            let mut g = Digraph::empty(1)?;
            let mut sizes = vec![1];
            for _ in 0..*k {
                g = construct::saturate(&g)?;
                sizes.push(g.p());
            }
            Ok(format!("# sizes {}\n{}", join(sizes), format::write_graph(&g)))
        }
        Universal::Embed { pi, gamma, anchor } => {
            let (pi, gamma) = (read_graph(pi)?, read_graph(gamma)?);
            let mut s0 = Vec::new();
            let mut rho = Vec::new();
            for part in anchor.split(',').filter(|s| !s.is_empty()) {
                let (x, y) = part.split_once(':').ok_or_else(|| AppError::Usage(format!("anchor `{part}` is not x:y")))?;
                let num = |t: &str| t.trim().parse::<usize>().map_err(|_| AppError::Usage(format!("bad anchor `{part}`")));
                s0.push(num(x)?);
                rho.push(num(y)?);
            }
            let img = construct::extend_embedding(&pi, &s0, &rho, &gamma)?;
            Ok(format!("embedding {}\n", join(img)))
        }
    }
}

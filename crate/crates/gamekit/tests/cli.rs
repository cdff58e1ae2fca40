use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gamekit::format::{self, Header};
use gamekit_core::{fixtures, Digraph};
use proptest::prelude::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gamekit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, g: &Digraph) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, format::write_graph(g)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn group_game_example() {
    let o = run(&["gen", "group", "--cyclic", "7", "--subset", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), format::write_graph(&fixtures::g7_i()));
}

#[test]
fn optimal_plan_example() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.game", &fixtures::g7_iii());
    let b = write(dir.path(), "b.game", &fixtures::g7_ii());
    let o = run(&["plan", "optimal", s(&a), s(&b)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "r3 3 6 5\n");
}

#[test]
fn census_example() {
    let o = run(&["atlas", "census", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["labeled_total"], 2640);
}

#[test]
fn report_carries_counts_and_banner() {
    let o = run(&["atlas", "report", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["eulerian_oracle_total"], 2640);
    assert_eq!(v["oracles_agree"], true);
    assert_eq!(v["diameter"]["value"], 9);
    assert_eq!(v["counts"]["pointed_count"], 132);
    assert_eq!(v["counts"]["published_pointed"], 84);
    assert!(v["discrepancy"].as_str().unwrap().contains("84"));
    let split = v["parity_split"].as_array().unwrap();
    assert_eq!(split[0].as_u64().unwrap() + split[1].as_u64().unwrap(), 2640);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "qr"]).status.code(), Some(2));
    assert_eq!(run(&["--jobs", "0", "groups", "phi", "9"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "extend", "x", "--k", "1,a"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    // domain errors name the error on stderr
    let o = run(&["atlas", "census", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("EvenSize"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.game");
    std::fs::write(&bad, "game 3\n010\n00x\n100\n").unwrap();
    let o = run(&["analyze", "scores", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("ParseError"));

    let mislabeled = dir.path().join("t.game");
    std::fs::write(&mislabeled, format::write_graph(&Digraph::transitive(3).unwrap()).replace("tournament", "game")).unwrap();
    let o = run(&["analyze", "scores", s(&mislabeled)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("HeaderClassMismatch"));

    let o = run(&["analyze", "scores", s(&dir.path().join("missing"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("IoError"));
}

#[test]
fn plan_apply_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pairs = [
        (fixtures::g7_iii(), fixtures::g7_ii()),
        (fixtures::g7_i(), fixtures::g7_ii()),
        (fixtures::g7_i(), fixtures::g7_i().reverse()),
    ];
    for (i, (a, b)) in pairs.iter().enumerate() {
        let pa = write(dir.path(), &format!("a{i}"), a);
        let pb = write(dir.path(), &format!("b{i}"), b);
        for verb in ["any", "optimal"] {
            let plan = dir.path().join(format!("{verb}{i}.plan"));
            let o = run(&["plan", verb, s(&pa), s(&pb), "-o", s(&plan)]);
            assert_eq!(o.status.code(), Some(0));
            let o = run(&["plan", "apply", s(&pa), s(&plan)]);
            assert_eq!(o.status.code(), Some(0));
            assert_eq!(o.stdout, std::fs::read(&pb).unwrap());
        }
    }
}

#[test]
fn deterministic_output() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &fixtures::g7_i());
    let h = write(dir.path(), "h", &fixtures::g7_iii());
    let cmds: Vec<Vec<&str>> = vec![
        vec!["--seed", "7", "gen", "random", "9"],
        vec!["--seed", "7", "--jobs", "4", "gen", "random", "9"],
        vec!["analyze", "span", s(&g)],
        vec!["plan", "any", s(&g), s(&h)],
        vec!["iso", "aut", s(&g)],
        vec!["atlas", "report", "5"],
    ];
    for c in &cmds {
        assert_eq!(run(c).stdout, run(c).stdout, "{c:?}");
    }
    assert_eq!(run(&cmds[0]).stdout, run(&cmds[1]).stdout);
    assert_ne!(run(&cmds[0]).stdout, run(&["--seed", "8", "gen", "random", "9"]).stdout);
}

#[test]
fn analysis_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &fixtures::g7_i());
    let t = write(dir.path(), "t", &Digraph::cycle(3).unwrap());
    assert_eq!(stdout(&run(&["analyze", "scores", s(&g)])), "scores 3 3 3 3 3 3 3\nout_degrees 3 3 3 3 3 3 3\n");
    assert_eq!(stdout(&run(&["analyze", "classify", s(&g)])), "tournament=true eulerian=true game=true regular=true\n");
    assert!(stdout(&run(&["analyze", "cycles", s(&g)])).starts_with("three_cycles=14 formula=14\n"));
    assert_eq!(stdout(&run(&["analyze", "steiner", s(&g)])), "none\n");
    let qr = dir.path().join("qr");
    assert_eq!(run(&["gen", "qr", "7", "-o", s(&qr)]).status.code(), Some(0));
    assert_eq!(stdout(&run(&["analyze", "steiner", s(&qr)])).lines().count(), 7);
    assert_eq!(stdout(&run(&["iso", "classify7", s(&qr)])), "type=II\n");
    assert!(stdout(&run(&["iso", "aut", s(&qr)])).starts_with("order=21\n"));
    assert_eq!(stdout(&run(&["gen", "double", s(&t)])).lines().next(), Some("game 7"));
    assert_eq!(stdout(&run(&["analyze", "sep", s(&t), "--set", "0"])).lines().next(), Some("sep=true"));
    assert_eq!(stdout(&run(&["analyze", "sep", s(&t), "--set", "0,1"])), "sep=false\nmissing 00\n");
    assert_eq!(stdout(&run(&["groups", "phi", "9"])), "6\n");
    assert_eq!(stdout(&run(&["groups", "fermat", "15"])), "fermat_square_free=true units_act_freely=true\n");
    assert_eq!(stdout(&run(&["atlas", "enumerate", "5"])), "labeled_total=24\n");
    assert_eq!(stdout(&run(&["atlas", "diameter", "5"])), "diameter=4 n_squared=4\n");
    let o = run(&["universal", "stages", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# sizes 1 3 11\n"));
}

fn graph_strategy(header: Header) -> impl Strategy<Value = Digraph> {
    (1usize..=9).prop_flat_map(move |p| {
        let pairs = p * (p - 1) / 2;
        (Just(p), proptest::collection::vec(0u8..3, pairs)).prop_map(move |(p, choice)| {
            let mut e = Vec::new();
            let mut k = 0;
            for i in 0..p {
                for j in i + 1..p {
                    match (header, choice[k]) {
                        (Header::Digraph, 0) => {}
                        (_, 0 | 1) => e.push((i, j)),
                        _ => e.push((j, i)),
                    }
                    k += 1;
                }
            }
            Digraph::from_edges(p, &e).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn digraph_round_trip(g in graph_strategy(Header::Digraph)) {
        prop_assert_eq!(format::parse_graph(&format::write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn tournament_round_trip(g in graph_strategy(Header::Tournament)) {
        let text = format::write_graph(&g);
        prop_assert!(text.starts_with("tournament") || text.starts_with("game"));
        prop_assert_eq!(format::parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn game_round_trip(seed in any::<u64>(), n in 0usize..5) {
        let g = gamekit::cli::random_game(2 * n + 1, seed).unwrap();
        let text = format::write_graph(&g);
        prop_assert!(text.starts_with("game"));
        prop_assert_eq!(format::parse_graph(&text).unwrap(), g);
    }
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forestgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_forestgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classify_bowtie_file() {
    let o = run(&["classify", &data("bowtie.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Divergent; witness: two edge-disjoint triangles\n");
}

#[test]
fn classify_structured() {
    let o = run(&["classify", "--format", "structured", "--named", "C5"]);
    assert_eq!(
        stdout(&o),
        "status=Divergent\nwitness_kind=long-cycle\nwitness_edges=0-1,1-2,2-3,3-4,0-4\n"
    );
    let o = run(&["classify", "--format", "structured", "--edges", "0 1, 1 2, 2 0, 2 3"]);
    assert_eq!(stdout(&o), "status=Convergent\nlimit=K3\nsteps=1\n");
}

#[test]
fn count_k5() {
    let o = run(&["count", "--named", "K5"]);
    assert_eq!(stdout(&o), "125\n");
}

#[test]
fn roots_k4_from_dot() {
    let o = run(&["roots", &data("k4.dot")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "1 root: C_4; depth ≥ 1; chain stops (bipartite)\n");
}

#[test]
fn roots_of_bipartite_and_depth() {
    let o = run(&["roots", &data("c4.txt")]);
    assert_eq!(stdout(&o), "no root: bipartite\n");
    let o = run(&["depth", "--named", "K3"]);
    assert_eq!(stdout(&o), "depth ≥ 0; stable, depth unbounded\n");
}

#[test]
fn loop_edge_is_a_parse_error() {
    let o = run(&["count", &data("loop.txt")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error: parse error at line 3, column 3: loop at vertex 2\n");
    assert!(o.stdout.is_empty());
}

#[test]
fn iterate_c4_three_times_exceeds_budget() {
    let o = run(&["iterate", "--steps", "3", &data("c4.txt")]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        stderr(&o),
        "error: forest budget exceeded at step 3: 223304744960 maximal forests, budget 1000000\n"
    );
}

#[test]
fn iterate_c4_twice() {
    let o = run(&["iterate", "--steps", "2", "--named", "C4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("F^2(G): 16 vertices, 54 edges"));
}

#[test]
fn witness_cycle_must_be_a_cycle() {
    let o = run(&["fgraph", "--named", "C4", "--witness-cycle", "0 1 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not adjacent"), "{}", stderr(&o));

    let o = run(&["fgraph", &data("bowtie.txt"), "--witness-cycle", "c a b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "F(G): 9 vertices, 18 edges (graph on 9 vertices [0-1 0-2 0-3 0-6 1-2 1-4 1-7 2-5 2-8 3-4 3-5 3-6 4-5 4-7 5-8 6-7 6-8 7-8])\n\
         clique of size 3 from a 3-cycle: 6 0 3 (verified)\n"
    );
}

#[test]
fn stdin_input_and_forest_listing() {
    let o = run_stdin(&["forests", "-"], "x y\ny z\nz x\n");
    assert_eq!(stdout(&o), "3 maximal forests\n0: x-y x-z\n1: x-y y-z\n2: x-z y-z\n");
}

#[test]
fn distance_and_path() {
    let o = run(&["distance", "--named", "K4", "--from", "0", "--to", "15", "--format", "structured"]);
    let text = stdout(&o);
    let d: Vec<&str> = text.lines().map(|l| l.split('=').nth(1).unwrap()).collect();
    assert_eq!(d[0], d[1]);
    let o = run(&["path", "--named", "K4", "--from", "0", "--to", "15"]);
    assert_eq!(stdout(&o).lines().count(), d[0].parse::<usize>().unwrap() + 1);
    let o = run(&["distance", "--named", "K4", "--from", "0", "--to", "16"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn whitney_twist_and_split() {
    let o = run(&["whitney", "--named", "C4", "--op", "twist", "--vertex", "0", "--other", "2", "--side", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("twist: forest family preserved (4 forests)\n"));

    let o = run(&["whitney", &data("bowtie.txt"), "--op", "split", "--vertex", "c", "--side", "d e"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("split: forest family preserved (9 forests)\n"));

    let o = run(&["whitney", "--named", "K4", "--op", "split", "--vertex", "0", "--side", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stable_and_gen() {
    assert_eq!(stdout(&run(&["stable", "--named", "K3"])), "stable\n");
    assert_eq!(stdout(&run(&["stable", "--named", "K4"])), "not stable\n");
    let o = run(&["gen", "--vertices", "4"]);
    assert_eq!(stdout(&o).matches("# graph").count(), 11);
    let o = run(&["gen", "--named", "C3", "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
}

#[test]
fn verify_small_corpus() {
    let o = run(&["verify", "--max-vertices", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--named", "K3", "--budget", "0"]).status.code(), Some(2));
    assert_eq!(run(&["iterate", "--named", "Q9"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["fgraph".into(), "--named".into(), "K4".into(), "--format".into(), "dot".into()],
        vec!["forests".into(), data("bowtie.txt"), "--format".into(), "structured".into()],
        vec!["depth".into(), data("k4.dot"), "--format".into(), "structured".into()],
        vec!["whitney".into(), data("bowtie.txt"), "--op".into(), "random".into(), "--seed".into(), "7".into()],
        vec!["verify".into(), "--max-vertices".into(), "3".into(), "--seed".into(), "5".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
        assert!(!a.stdout.is_empty(), "{args:?}: {}", stderr(&a));
    }
}

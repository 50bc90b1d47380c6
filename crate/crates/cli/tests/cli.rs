use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pushgame"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn generated(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = run(&full, "");
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

const STRIP: &str = "\
simplex n 2
vertices 4
region 0 1 2
region 1 2 3
modulus 3
labeling zero 0 0 0 0
labeling pushed 1 1 1 0
labeling off 1 0 0 0
";

#[test]
fn probe_triangular_board() {
    let board = generated(&["triangular", "4"]);
    let o = run(&["probe", "--m", "2"], &board);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("Colorable\n"));
    assert!(out.contains("classes = 4\n"));
    assert!(out.contains("bound = 129\n"));
}

#[test]
fn probe_k4() {
    let board = generated(&["kplus", "2"]);
    let o = run(&["probe", "--m", "2"], &board);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("NotColorable\n"));
    assert!(out.contains("classes = 1\n"));
    assert!(out.contains("conflict\nvertex = 3\n"));
}

#[test]
fn probe_refuses_disconnected() {
    let board = generated(&["chain", "3"]);
    let o = run(&["probe", "--m", "2"], &board);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("NotRegionConnected"));
}

#[test]
fn validate_reports_region_size() {
    let o = run(&["validate"], "simplex n 2\nvertices 3\nregion 0 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("RegionSizeMismatch"));
    assert!(o.stdout.is_empty());

    let o = run(
        &["validate"],
        "simplex n 2\nvertices 3\nregion 0 1 2\nedge 0 1\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("ParseError"));

    let o = run(&["validate", "-"], STRIP);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid\nn = 2\nvertices = 4\nregions = 2\n"));
}

#[test]
fn color_strip_and_conflict() {
    let o = run(&["color"], STRIP);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "colorable\n0 0\n1 1\n2 2\n3 0\n");

    let o = run(&["color"], &generated(&["kplus", "2"]));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("conflict\n"));
}

#[test]
fn invariant_of_labeling() {
    let o = run(&["invariant", "--labeling", "off"], STRIP);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "P = (1, 0) mod 3\n");

    let o = run(&["invariant", "--labeling", "nope"], STRIP);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("UnknownLabeling"));
}

#[test]
fn solve_backends() {
    for backend in ["linear", "paths", "both"] {
        let o = run(
            &[
                "solve",
                "--backend",
                backend,
                "--from",
                "zero",
                "--to",
                "pushed",
            ],
            STRIP,
        );
        assert_eq!(o.status.code(), Some(0), "{backend}");
        assert!(stdout(&o).starts_with("feasible\n"));

        let o = run(
            &[
                "solve",
                "--backend",
                backend,
                "--from",
                "zero",
                "--to",
                "off",
            ],
            STRIP,
        );
        assert_eq!(o.status.code(), Some(1), "{backend}");
        assert!(stdout(&o).starts_with("infeasible\n"));
    }
    let o = run(
        &[
            "solve",
            "--backend",
            "linear",
            "--from",
            "zero",
            "--to",
            "pushed",
        ],
        STRIP,
    );
    assert_eq!(
        stdout(&o),
        "feasible\nparticular = 1 0\nkernel_basis = 0\nsolutions = 1\n"
    );
}

#[test]
fn count_prints_report() {
    let o = run(&["count"], STRIP);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("predicted_class_count = 9\n"));
    assert!(out.contains("measured_class_count = 9\n"));
    assert!(out.contains("hypotheses_hold = true\n"));

    let o = run(&["count"], &generated(&["kplus", "2"]));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("MissingModulus"));
}

#[test]
fn decompose_chain_and_cycle() {
    let o = run(&["decompose", "--m", "2"], &generated(&["chain", "3"]));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("components = 3\n"));
    assert!(out.contains("acyclic = true\nColorable\n"));

    let cycle = "simplex n 2\nvertices 6\nregion 0 1 2\nregion 2 3 4\nregion 4 5 0\n";
    let o = run(&["decompose", "--m", "2"], cycle);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("CyclicAssociation"));
}

#[test]
fn gen_round_trips_through_validate() {
    for args in [
        &["triangular", "5"][..],
        &["strip", "2", "5"],
        &["kplus", "3"],
        &["chain", "2"],
    ] {
        let text = generated(args);
        assert!(text.starts_with(&format!("# {}\nsimplex n ", args.join(" "))));
        assert_eq!(run(&["validate"], &text).status.code(), Some(0));
    }
    let o = run(&["gen", "triangular", "1"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("DomainError"));
}

#[test]
fn oracle_commands() {
    let o = run(&["oracle", "orbit", "--from", "zero"], STRIP);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("orbit_size = 9\n"));

    let o = run(
        &["oracle", "count", "--from", "zero", "--to", "pushed"],
        STRIP,
    );
    assert_eq!(stdout(&o), "solutions = 1\n");
    let o = run(&["oracle", "count", "--from", "zero", "--to", "off"], STRIP);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["oracle", "partition"], STRIP);
    assert!(stdout(&o).starts_with("classes = 9\nclass_sizes = 9 9 9 9 9 9 9 9 9\n"));

    let o = run(
        &["oracle", "partition", "--m", "2"],
        &generated(&["triangular", "6"]),
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("TooLarge"));
}

#[test]
fn bounds() {
    let o = run(&["bounds", "--r", "9", "--n", "2", "--m", "2"], "");
    assert_eq!(stdout(&o), "moves_bound = 129\n");
    let o = run(&["bounds", "--v", "10"], "");
    assert_eq!(stdout(&o), "planar_moves_bound = 8193\n");
    let o = run(&["bounds", "--v", "200"], "");
    let digits = stdout(&o);
    assert!(digits
        .trim_end()
        .chars()
        .skip(21)
        .all(|c| c.is_ascii_digit()));
    assert!(digits.len() > 100);
    let o = run(&["bounds", "--r", "2", "--n", "2", "--m", "2"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("DomainError"));
}

#[test]
fn output_is_deterministic() {
    let board = generated(&["triangular", "5"]);
    for args in [
        &["probe", "--m", "3"][..],
        &["count", "--m", "2"],
        &["color"],
    ] {
        let a = run(args, &board);
        let b = run(args, &board);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

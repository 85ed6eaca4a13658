use std::io::Write;
use std::process::{Command, Output, Stdio};

const FANO: &str = "3 7\n1 0 0 0 1 1 1\n0 1 0 1 0 1 1\n0 0 1 1 1 0 1\n";

const A_X: &str = "\
labels: 1 2 3 4 5 6 7 g1 g2
4 9
1 0 0 0 1 1 1 1 0
0 1 0 1 0 1 1 0 1
0 0 1 1 1 0 1 0 0
0 0 0 0 0 0 0 1 1
";

const A_Y: &str = "\
labels: 1 2 3 4 5 6 7 g1 g2 g3
4 10
1 0 0 0 1 1 1 1 0 0
0 1 0 1 0 1 1 0 1 0
0 0 1 1 1 0 1 0 0 1
0 0 0 0 0 0 0 1 1 1
";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gammatroid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
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

#[test]
fn gamma_ext_reproduces_the_fano_matrices() {
    let x = run(&["gamma-ext", "--x", "1,2"], FANO);
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(stdout(&x), A_X);
    let y = run(&["gamma-ext", "--x", "3,1,2"], FANO);
    assert_eq!(stdout(&y), A_Y);
    let named = run(&["gamma-ext", "--named", "fano", "--x", "1,2"], "");
    assert_eq!(stdout(&named), A_X);
}

#[test]
fn custom_gamma_labels() {
    let o = run(&["gamma-ext", "--x", "1,2", "--gamma", "p,q"], FANO);
    assert!(stdout(&o).starts_with("labels: 1 2 3 4 5 6 7 p q\n"));
}

#[test]
fn connectivity_of_the_extension() {
    let o = run(&["connectivity", "--k", "3"], A_X);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "3-connected: false\nwitness: 2-separation {1,2,3,4,5,6,7} | {g1,g2}\n"
    );
    let o = run(&["connectivity", "--k", "2"], A_X);
    assert_eq!(stdout(&o), "2-connected: true\n");
    let o = run(&["connectivity", "--k", "3", "--mode", "cumulative"], A_Y);
    assert_eq!(stdout(&o), "3-connected: true\n");
}

#[test]
fn json_output_parses() {
    let o = run(&["--json", "connectivity", "--k", "3"], A_X);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["connected"], false);
    assert_eq!(v["witness"]["order"], 2);
    assert_eq!(v["witness"]["side_b"], serde_json::json!(["g1", "g2"]));
    let o = run(&["circuits", "--json"], FANO);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 14);
}

#[test]
fn listing_commands() {
    let c = stdout(&run(&["circuits"], FANO));
    assert_eq!(c.lines().count(), 14);
    assert!(c.lines().any(|l| l == "{1,2,6}"));
    let mut sorted: Vec<&str> = c.lines().collect();
    sorted.sort();
    assert_eq!(c.lines().collect::<Vec<_>>(), sorted);
    assert_eq!(stdout(&run(&["cocircuits"], FANO)).lines().count(), 7);
    assert_eq!(stdout(&run(&["girth"], FANO)), "girth: 3\ncogirth: 4\n");
    assert_eq!(stdout(&run(&["components"], FANO)), "{1,2,3,4,5,6,7}\n");
    assert_eq!(stdout(&run(&["rank", "--set", "1,2,6"], FANO)), "2\n");
    assert!(stdout(&run(&["catalog"], "")).starts_with("fano\t3\t7\tconnected,3-connected\n"));
}

#[test]
fn split_and_direct_sum() {
    let s = run(&["split", "--y", "1,2,3"], FANO);
    assert_eq!(
        stdout(&s),
        "4 7\n1 0 0 0 1 1 1\n0 1 0 1 0 1 1\n0 0 1 1 1 0 1\n1 1 1 0 0 0 0\n"
    );
    let dir = std::env::temp_dir().join(format!("gammatroid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let u = dir.join("u23.txt");
    std::fs::write(&u, "labels: a b c\n2 3\n1 0 1\n0 1 1\n").unwrap();
    let o = run(
        &["direct-sum", u.to_str().unwrap(), u.to_str().unwrap()],
        "",
    );
    assert_eq!(
        stdout(&o),
        "labels: a1 b1 c1 a2 b2 c2\n4 6\n1 0 1 0 0 0\n0 1 1 0 0 0\n0 0 0 1 0 1\n0 0 0 0 1 1\n"
    );
    let out = dir.join("sum.txt");
    let o = run(
        &[
            "direct-sum",
            u.to_str().unwrap(),
            u.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
        ],
        "",
    );
    assert!(o.stdout.is_empty());
    let comps = stdout(&run(&["components", out.to_str().unwrap()], ""));
    assert_eq!(comps, "{a1,b1,c1}\n{a2,b2,c2}\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn compose_check() {
    let o = run(&["compose-check", "--x", "1,2,3"], FANO);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "compose-check: pass\n")
    );
}

#[test]
fn usage_and_input_errors_exit_two() {
    let o = run(&["rank"], "2 3\n1 0 1\n0 2 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(
        run(&["gamma-ext", "--x", "1,2,6"], FANO).status.code(),
        Some(2)
    );
    assert_eq!(run(&["gamma-ext", "--x", "9"], FANO).status.code(), Some(2));
    assert_eq!(run(&["connectivity"], FANO).status.code(), Some(2));
    assert_eq!(run(&["verify", "--law", "2.2"], "").status.code(), Some(2));
    assert_eq!(
        run(&["rank", "/nonexistent/file"], "").status.code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--law", "2.1", "--catalog", "3,6"], "");
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("rank-identities\tpass="));

    // the predicted circuit families miss circuits of F7 with X = {1,2}
    let bad = run(&["verify", "--law", "2.2", "--catalog", "3,7"], "");
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("fano r3n7:1.2.4.6.5.3.7 X={1,2}\tfail\tmissing=[{1,3,4,g1,g2};"));
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("circuit-characterization\tpass="));

    let k4 = run(
        &["verify", "--law", "2.6", "--catalog", "3,7", "--k", "4"],
        "",
    );
    assert_eq!(k4.status.code(), Some(0));
    assert!(stdout(&k4).contains("pass=0\tfail=0\tprecondition-unmet="));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "--law", "2.7", "--catalog", "3,7", "--all"], "");
    let b = run(&["verify", "--law", "2.7", "--catalog", "3,7", "--all"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
    let lines: Vec<&str> = std::str::from_utf8(&a.stdout).unwrap().lines().collect();
    assert!(lines.len() > 100);
    for l in &lines[..lines.len() - 1] {
        assert_eq!(l.split('\t').count(), 4, "{l}");
    }
}

#[test]
fn matrix_round_trip_through_the_cli() {
    let o = run(&["split", "--y", "g1,g2,g3"], A_Y);
    let text = stdout(&o);
    assert!(text.starts_with("labels: 1 2 3 4 5 6 7 g1 g2 g3\n5 10\n"));
    assert!(text.ends_with("0 0 0 0 0 0 0 1 1 1\n0 0 0 0 0 0 0 1 1 1\n"));
}

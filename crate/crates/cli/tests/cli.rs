use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bottomless"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn four_points_color_and_verify() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "a,0,3\nb,1,0\nc,2,2\nd,3,1\n");
    let col = dir.path().join("c.txt");
    let o = run(&["color", s(&pts), "-k", "2", "-o", s(&col)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&col).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("a,0,3,"));
    let v = run(&["verify", s(&pts), s(&col), "-k", "2", "-w", "4"]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v), "violations: 0\n");
}

#[test]
fn empty_file_gives_empty_output() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "# nothing\n\n");
    let o = run(&["color", s(&pts), "-k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn zero_k_and_zero_w_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "0,0\n");
    assert_eq!(run(&["color", s(&pts), "-k", "0"]).status.code(), Some(2));
    let col = write(&dir, "c.txt", "0,1\n");
    assert_eq!(run(&["verify", s(&pts), s(&col), "-k", "1", "-w", "0"]).status.code(), Some(2));
}

#[test]
fn single_color_fails_verification() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "0,0\n1,1\n2,2\n3,3\n4,4\n");
    let col = write(&dir, "c.txt", "0,1\n1,1\n2,1\n3,1\n4,1\n");
    let o = run(&["verify", s(&pts), s(&col), "-k", "2", "-w", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("violations: "));
    assert!(out.lines().count() <= 11);
    assert!(out.contains("WindowMissingColor color 2"));
}

#[test]
fn verify_rejects_mismatched_ids() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "a,0,0\nb,1,1\n");
    for bad in ["a,1\nz,2\n", "a,1\n", "a,0,0,1\nb,1,2,2\n"] {
        let col = write(&dir, "c.txt", bad);
        let o = run(&["verify", s(&pts), s(&col), "-k", "2"]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "0,0\n# comment\n1,one\n");
    let o = run(&["color", s(&pts), "-k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p.txt:3:"), "{}", stderr(&o));
}

#[test]
fn duplicates_need_normalize() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "0,5\n0,6\n1,7\n");
    let o = run(&["color", s(&pts), "-k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--normalize"));
    let o = run(&["color", s(&pts), "-k", "2", "--normalize"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("0,0,5,1"));
}

#[test]
fn coordinates_are_emitted_canonically() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "a,0.50,2/4\nb,-6/4,+3\nc,1/3,10.000\n");
    let o = run(&["color", s(&pts), "-k", "1"]);
    assert_eq!(stdout(&o), "a,0.5,0.5,1\nb,-1.5,3,1\nc,1/3,10,1\n");
}

#[test]
fn semi_and_online_round_trip() {
    let dir = TempDir::new().unwrap();
    let text: String = (0..60).map(|i| format!("{i},{},{}\n", (i * 37) % 61, (i * 11) % 60)).collect();
    let pts = write(&dir, "p.txt", &text);
    for k in ["1", "2", "3", "5"] {
        let col = dir.path().join("semi.txt");
        assert!(run(&["color", s(&pts), "-k", k, "-o", s(&col)]).status.success());
        assert_eq!(run(&["verify", s(&pts), s(&col), "-k", k]).status.code(), Some(0));
        let col = dir.path().join("online.txt");
        assert!(run(&["color", s(&pts), "-k", k, "--mode", "online", "-o", s(&col)]).status.success());
        let o = run(&["verify", s(&pts), s(&col), "-k", k, "--mode", "norepeat"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}

#[test]
fn constructions_have_expected_sizes() {
    let o = run(&["construct", "ckwitness", "--k", "4"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "0,0,0\n1,1,2\n2,2,4\n3,3,6\n4,7,1\n5,6,3\n6,5,5\n"
    );
    let o = run(&["construct", "lowerbound", "--n", "7", "--a", "4"]);
    assert_eq!(stdout(&o).lines().count(), 18);
    assert!(stdout(&o).contains("B4,4,0\n"));
    let o = run(&["construct", "tree", "--p", "3"]);
    assert_eq!(stdout(&o).lines().count(), 13);
    assert!(stderr(&o).contains("self-check passed"));
    assert_eq!(run(&["construct", "tree", "--p", "5"]).status.code(), Some(2));
    let o = run(&["construct", "lowerbound", "--n", "3", "--k", "10"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("a=6, b=14"));
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn plot_draws_points_rectangles_and_segments() {
    let dir = TempDir::new().unwrap();
    let pts = dir.path().join("ck.txt");
    assert!(run(&["construct", "ckwitness", "--k", "4", "-o", s(&pts)]).status.success());
    let o = run(&["plot", s(&pts), "--rect", "-1,3,4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let svg = stdout(&o);
    assert_eq!(svg.matches("<circle").count(), 7);
    assert_eq!(svg.matches("class=\"range\"").count(), 1);
    assert_eq!(svg, stdout(&run(&["plot", s(&pts), "--rect", "-1,3,4"])));

    let tree = dir.path().join("tree.txt");
    assert!(run(&["construct", "tree", "--p", "2", "-o", s(&tree)]).status.success());
    let colors = write(&dir, "tc.txt", "0,1\n1,2\n2,1\n");
    let o = run(&["plot", s(&tree), "--segments", "--coloring", s(&colors)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).matches("<line").count(), 3);
}

#[test]
fn plot_refuses_unpaintable_colorings() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.txt", "0,0\n1,1\n");
    let col = write(&dir, "c.txt", "0,1\n1,11\n");
    let o = run(&["plot", s(&pts), "--coloring", s(&col)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("at most 10 colors"));
}

fn max_run(o: &Output) -> usize {
    let out = stdout(o);
    let last = out.lines().last().unwrap();
    let field = last.split(' ').find_map(|f| f.strip_prefix("max_run=")).unwrap();
    field.parse().unwrap()
}

#[test]
fn adversary_builtins() {
    let o = run(&["adversary", "--strategy", "always-red", "--steps", "10"]);
    assert!(o.status.success());
    assert_eq!(max_run(&o), 10);
    let o = run(&["adversary", "--strategy", "alternate", "--steps", "20"]);
    assert!(max_run(&o) >= 10);
    assert_eq!(stdout(&o).lines().count(), 22);
    let o = run(&["adversary", "--strategy", "coin", "--steps", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn external_strategy_follows_the_protocol() {
    let dir = TempDir::new().unwrap();
    let log = dir.path().join("seen.txt");
    let script = format!("while read -r line; do echo \"$line\" >> {}; echo 2; done", s(&log));
    let o = run(&["adversary", "--script", &script, "--steps", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(max_run(&o), 3);
    assert_eq!(fs::read_to_string(&log).unwrap(), "0:0\n0:0 1:2\n0:0 1:2 2:2\n");
}

#[test]
fn external_strategy_that_recolors_is_rejected() {
    let o = run(&["adversary", "--script", "while read -r line; do echo 0:1; done", "--steps", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 1 or 2"));
    let o = run(&["adversary", "--script", "read -r line; echo 1", "--steps", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

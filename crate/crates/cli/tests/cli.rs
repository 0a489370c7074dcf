use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cylfusion")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn fusion_worked_example() {
    let o = run(&["fusion", "--n", "4", "--k", "3", "--mu", "4,3,1", "--nu", "3,2,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("lambda=3,2,1  N=2 + t - t^2"), "{}", stdout(&o));
}

#[test]
fn fusion_json_parses() {
    let o = run(&["fusion", "--n", "3", "--k", "2", "--mu", "2,1", "--nu", "3,1", "--format", "json"]);
    assert!(o.status.success());
    serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap();
}

#[test]
fn kostka_foulkes_all_methods() {
    let o = run(&["kostka-foulkes", "--lambda", "3,3,2", "--mu", "2,2,2,2", "--method", "all"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("t^3 + t^4 + t^5").count(), 3, "{}", stdout(&o));
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--suite", "all", "--n", "3", "--k", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn bethe_passes() {
    let o = run(&["bethe", "--n", "3", "--k", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["fusion", "--n", "4", "--k", "3", "--mu", "5,3,1", "--nu", "3,2,1"]).status.code(), Some(2));
    assert_eq!(run(&["fusion", "--n", "4", "--k", "3", "--mu", "1,3", "--nu", "3,2,1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

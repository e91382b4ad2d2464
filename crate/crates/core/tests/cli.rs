use std::io::Write;
use std::process::{Command, Output, Stdio};

fn creach(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_creach"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn creach");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn verify_don_holds_for_e12() {
    let o = creach(&["verify-don", &data("e12.json")], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("no violations"));
}

#[test]
fn e21_set_is_not_21_expandable() {
    let o = creach(&["expand", "E21", "--set", "3,10,17", "--max-len", "21"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not 21-expandable"));
    let o = creach(&["expand", "E21", "--set", "3,10,17", "--max-len", "22"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ab^14ab^6"));
}

#[test]
fn unreachable_subset_exits_one() {
    let o = creach(&["reach", &data("fig7.json"), "--set", "0,1,3,4"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unreachable"));
}

#[test]
fn reads_stdin() {
    let text = std::fs::read_to_string(data("e12.json")).unwrap();
    let o = creach(&["--json", "analyze", "-"], Some(&text));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["format"], "creach/1");
    assert_eq!(v["orbit"]["h0_generator"], 2);
}

#[test]
fn malformed_input_exits_two() {
    let o = creach(&["analyze", "-"], Some("{\"n\": 3, \"a\": [0, 1]}"));
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn writes_dot() {
    let dir = std::env::temp_dir().join(format!("creach-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let o = creach(
        &["digraph", "E12", "--kind", "restricted-rystsov", "--dot", path.to_str().unwrap()],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 13);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sync_and_enumerate() {
    let o = creach(&["--json", "sync", "FIG7"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["format"], "creach/1");
    let o = creach(&["enumerate", "--n", "4", "--exhaustive", "--count-only"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().ends_with("18"), "{}", stdout(&o));
}

use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lytab(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lytab"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let r = lytab(&a);
    assert_eq!(r.code, 0, "{}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

/// Entries `(p, i, v)` read back from the upper-triangular text matrix.
fn text_entries(stdout: &str) -> Vec<(u64, u64, u64)> {
    let rows: Vec<&str> = stdout
        .lines()
        .skip(1)
        .take_while(|l| !l.starts_with("certified"))
        .collect();
    let mut out = Vec::new();
    for (p, row) in rows.iter().enumerate() {
        for (k, cell) in row.split_whitespace().enumerate() {
            let v: u64 = cell.parse().unwrap();
            if v > 0 {
                out.push((p as u64, (p + k) as u64, v));
            }
        }
    }
    out
}

fn json_entries(v: &Value) -> Vec<(u64, u64, u64)> {
    let mut out: Vec<(u64, u64, u64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["p"].as_u64().unwrap(), e["i"].as_u64().unwrap(), e["v"].as_u64().unwrap()))
        .collect();
    out.sort();
    out
}

#[test]
fn seven_cycle_table() {
    let r = lytab(&["table", "--family", "cycle:7"]);
    assert_eq!(r.code, 0);
    assert_eq!(text_entries(&r.stdout), vec![(2, 4, 1), (4, 5, 1), (5, 5, 1)]);
    assert!(r.stdout.contains("certified: yes"));
}

#[test]
fn text_and_json_agree() {
    for fam in ["cycle:8", "complement-cycle:6", "ljoin:4,5,share", "wheel:5", "path:6"] {
        for method in ["auto", "oracle", "split"] {
            let text = lytab(&["table", "--family", fam, "--method", method]);
            let v = json(&["table", "--family", fam, "--method", method]);
            assert_eq!(text_entries(&text.stdout), json_entries(&v), "{fam} {method}");
        }
    }
}

#[test]
fn trivial_families() {
    let v = json(&["table", "--family", "wheel:6"]);
    assert_eq!(json_entries(&v), vec![(4, 4, 1)]);
    let v = json(&["table", "--g6", "A_"]);
    assert_eq!((v["n"].as_u64(), v["d"].as_u64()), (Some(2), Some(0)));
    assert_eq!(json_entries(&v), vec![(0, 0, 1)]);
}

#[test]
fn traces() {
    let r = lytab(&["table", "--family", "cycle:6", "--trace"]);
    assert!(r.stdout.contains("DegreeTwoCor@1: 6→5+3"));
    let v = json(&["table", "--family", "wheel:8", "--trace"]);
    assert_eq!(v["trace"][0], "Dominating@8: 8→-");
}

#[test]
fn five_path_bass_display() {
    let r = lytab(&["bass", "--family", "path:5"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert!(lines[0].starts_with("0 → H^2 → ⊕|α|=2 E_α"));
    assert!(lines[0].contains("E_11011^2"));
    assert_eq!(lines[1], "0 → H^3 → E_11011 → 0");
    let v = json(&["bass", "--family", "path:5"]);
    assert_eq!(v["strands"]["2"], 1);
    assert_eq!(v["strands"]["3"], 1);
}

#[test]
fn six_cycle_face() {
    let v = json(&["bass", "--family", "cycle:6", "--alpha", "110110"]);
    let e: Vec<(u64, u64, u64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["r"].as_u64().unwrap(), e["p"].as_u64().unwrap(), e["mu"].as_u64().unwrap()))
        .collect();
    assert!(e.contains(&(3, 0, 1)));
    assert!(e.iter().all(|x| x.2 > 0));
}

#[test]
fn dimensions() {
    assert_eq!(lytab(&["cd", "--family", "path:5"]).stdout, "cd = 3\n");
    assert_eq!(lytab(&["cd", "--family", "cycle:8", "--method", "closed"]).stdout, "cd = 4\n");
    let star = lytab(&["pd", "--family", "star:3"]);
    assert_eq!(star.code, 0);
    assert!(star.stdout.contains("pd(R/I) = 3"));
    assert!(star.stderr.contains("warning: pd(R/I) = 3 differs from c_max + 1 = 2"));
    let v = json(&["pd", "--family", "path:5"]);
    assert_eq!(v["pd"], 3);
    assert_eq!(v["flags"].as_array().unwrap().len(), 0);
}

#[test]
fn census_rows_and_field_independence() {
    for ch in ["32003", "2"] {
        let v = json(&["census", "4", "--char", ch]);
        assert_eq!((v["trivial"].as_u64(), v["total"].as_u64()), (Some(6), Some(6)));
        let v = json(&["census", "6", "--char", ch]);
        let got: Vec<u64> = ["trivial", "cycle", "complement_cycle", "other", "total"]
            .iter()
            .map(|k| v[k].as_u64().unwrap())
            .collect();
        assert_eq!(got, vec![106, 5, 1, 0, 112]);
    }
}

#[test]
fn file_inputs() {
    let dir = std::env::temp_dir().join(format!("lytab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let el = dir.join("c5.txt");
    std::fs::write(&el, "# five-cycle\n5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
    let a = json(&["table", "--edges", el.to_str().unwrap()]);
    let b = json(&["table", "--family", "cycle:5"]);
    assert_eq!(json_entries(&a), json_entries(&b));
    let g6 = dir.join("c5.g6");
    std::fs::write(&g6, "Dhc\n").unwrap();
    let c = json(&["table", "--g6", g6.to_str().unwrap()]);
    assert_eq!(json_entries(&c), json_entries(&b));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(lytab(&["table", "--g6", "zz"]).code, 2);
    assert_eq!(lytab(&["table", "--family", "torus:3"]).code, 2);
    assert_eq!(lytab(&["table"]).code, 2);
    assert_eq!(lytab(&["table", "--family", "cycle:5", "--char", "4"]).code, 2);
    let stuck = lytab(&["table", "--family", "complement-cycle:6", "--method", "split", "--policy", "fail"]);
    assert_eq!(stuck.code, 3);
    assert!(stuck.stderr.contains("no splitting rule"));
    assert_eq!(lytab(&["bass", "--family", "cycle:6", "--alpha", "101010"]).code, 4);
    assert_eq!(lytab(&["bass", "--family", "cycle:6", "--alpha", "1101"]).code, 4);
    assert_eq!(lytab(&["table", "--family", "complete:8", "--method", "oracle"]).code, 5);
    assert_eq!(lytab(&["--help"]).code, 0);
}

#[test]
fn characteristic_flag() {
    let a = json(&["table", "--family", "cycle:9", "--char", "2", "--method", "oracle"]);
    let b = json(&["table", "--family", "cycle:9", "--method", "oracle"]);
    assert_eq!(a["characteristic"], 2);
    assert_eq!(json_entries(&a), json_entries(&b));
}

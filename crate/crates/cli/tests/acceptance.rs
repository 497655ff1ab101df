//! End-to-end acceptance run against the release criteria. Every criterion
//! prints one `PASS`/`FAIL` line; all comparisons are exact.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

const RANDOM: &str = "50";

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { ok: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.ok = false;
            self.notes.push(format!("failed: {what}"));
        }
    }
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(format!("{name}.json")).to_string_lossy().into_owned()
}

fn cover_fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            let text = std::fs::read_to_string(&p).ok()?;
            let doc: Value = serde_json::from_str(&text).ok()?;
            doc["kind"].as_str()?.starts_with("cover").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
}

/// Runs the binary, returning exit code and stdout.
fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_snc-cohom"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--machine"];
    full.extend_from_slice(args);
    let (code, text) = run(&full);
    (code, serde_json::from_str(&text).expect("machine output is JSON"))
}

fn reports(doc: &Value) -> &Vec<Value> {
    doc["reports"].as_array().expect("reports array")
}

fn table(v: &Value) -> Vec<(i64, u64)> {
    let mut t: Vec<(i64, u64)> = v
        .as_object()
        .map(|m| m.iter().map(|(k, n)| (k.parse().unwrap(), n.as_u64().unwrap())).collect())
        .unwrap_or_default();
    t.sort();
    t
}

fn normalize(s: &str) -> String {
    s.replace('→', "->").chars().filter(|c| !c.is_whitespace()).collect()
}

fn suite_check(command: &str, o: &mut Outcome) -> usize {
    let dir = fixtures();
    let (code, doc) = machine(&[command, dir.to_str().unwrap(), "--random", RANDOM]);
    o.check(code == 0, format!("{command} exit code {code}"));
    let mut passed = 0;
    for r in reports(&doc) {
        let status = r["status"].as_str().unwrap();
        match status {
            "PASS" => {
                passed += 1;
                o.check(r["left"] == r["right"], format!("{} tables differ", r["instance"]));
            }
            "NOT-APPLICABLE" => {}
            _ => o.check(false, format!("{} reported {status}", r["instance"])),
        }
    }
    passed
}

fn resolution_identity() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let passed = suite_check("verify-resolution", &mut o);
    o.check(passed >= 60, format!("only {passed} resolution reports passed"));
    o.check(start.elapsed() < Duration::from_secs(300), "runtime over 5 minutes");
    o.notes.push(format!("{passed} exact matches"));
    o
}

fn final_identity() -> Outcome {
    let mut o = Outcome::new();
    let passed = suite_check("verify-final", &mut o);
    o.check(passed >= 60, format!("only {passed} final reports passed"));
    o.notes.push(format!("{passed} exact matches"));
    o
}

fn symbolic_reduction() -> Outcome {
    let mut o = Outcome::new();
    for k in 1..=6usize {
        let (code, doc) = machine(&["reduce", "--r", &k.to_string()]);
        let deepest = format!("({})", (1..=k).map(|i| i.to_string()).collect::<Vec<_>>().join("∩"));
        let mut want = vec!["0".to_string(); k - 1];
        want.push(deepest);
        let steps = doc["steps"].as_array().unwrap().len();
        o.check(code == 0, format!("reduce --r {k} exit code {code}"));
        o.check(doc["final"] == want.join(" -> "), format!("reduce --r {k} ended at {}", doc["final"]));
        o.check(steps < 1 << (k.max(1) - 1), format!("reduce --r {k} took {steps} steps"));
    }
    let displays = [
        (2, "(1,2) → (1) + (2)"),
        (3, "(1,2,3) → (1,2) + (1,3) + (2,3) → (1) + (2) + (3)"),
        (3, "0 → (1,2) + (1,2∩3) → (1) + (2) + (3)"),
        (3, "0 → (1,2∩3) → (1) + (2∩3)"),
    ];
    for (k, display) in displays {
        let (_, text) = run(&["reduce", "--r", &k.to_string(), "--trace"]);
        let lines: Vec<String> = text
            .lines()
            .filter_map(|l| l.split_once(": ").map(|(_, rest)| normalize(rest)))
            .collect();
        o.check(lines.contains(&normalize(display)), format!("trace for r = {k} never shows {display}"));
    }
    let names = cover_fixture_names();
    let paths: Vec<String> = names.iter().map(|n| fixture(n)).collect();
    let mut args = vec!["verify-trace"];
    args.extend(paths.iter().map(String::as_str));
    let (code, doc) = machine(&args);
    o.check(code == 0, format!("verify-trace exit code {code}"));
    for r in reports(&doc) {
        o.check(r["status"] == "PASS", format!("verify-trace {} is {}", r["instance"], r["status"]));
    }
    o
}

fn companion_isomorphy() -> Outcome {
    let mut o = Outcome::new();
    for (name, r) in [("cayley-point-r2", 2i64), ("cayley-point-r3", 3)] {
        let (code, doc) = machine(&["verify-theorem", &fixture(name)]);
        let rep = &reports(&doc)[0];
        o.check(code == 0 && rep["status"] == "PASS", format!("{name} is {}", rep["status"]));
        o.check(table(&rep["left"]) == vec![(r - 1, 1)], format!("{name} pair table {}", rep["left"]));
        let unshifted: Vec<(i64, u64)> = table(&rep["right"]).into_iter().map(|(m, n)| (m - (r - 1), n)).collect();
        o.check(unshifted == vec![(0, 1)], format!("{name} deepest table {}", rep["right"]));
        o.notes.push(format!("{name}: {} vs {{0:1}}[-{}]", rep["left"], r - 1));
    }
    o
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn rank_one() -> Outcome {
    let mut o = Outcome::new();
    let mut count = 0;
    for n in 2..=4usize {
        let binomials: Vec<(i64, u64)> = (0..n as u64)
            .map(|m| (m as i64, (0..m).fold(1, |acc, i| acc * (n as u64 - 1 - i) / (i + 1))))
            .collect();
        for degrees in compositions(n) {
            let list = degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
            let (code, doc) = machine(&["rank-one", "--N", &n.to_string(), "--degrees", &list]);
            let rep = &reports(&doc)[0];
            let left = table(&rep["left"]);
            o.check(code == 0 && rep["status"] == "PASS", format!("N={n} degrees={list}"));
            o.check(left == binomials, format!("N={n} degrees={list}: table {}", rep["left"]));
            o.check(left.last() == Some(&(n as i64 - 1, 1)), format!("N={n} degrees={list}: top"));
            count += 1;
        }
    }
    o.notes.push(format!("{count} partitions"));
    o
}

fn cross_module() -> Outcome {
    let mut o = Outcome::new();
    for name in cover_fixture_names() {
        let (_, fin) = machine(&["verify-final", &fixture(&name)]);
        let (_, tr) = machine(&["verify-trace", &fixture(&name)]);
        let (f, t) = (&reports(&fin)[0], &reports(&tr)[0]);
        o.check(f["status"] == t["status"], format!("{name}: {} vs {}", f["status"], t["status"]));
        o.check(f["left"] == t["right"], format!("{name}: final {} vs trace {}", f["left"], t["right"]));
    }
    o
}

fn full_suite(parallel: bool) -> Vec<u8> {
    let dir = fixtures();
    let mut bytes = Vec::new();
    for command in ["verify-resolution", "verify-final", "verify-theorem", "verify-trace"] {
        let mut args = vec!["--machine"];
        if parallel {
            args.push("--parallel");
        }
        args.extend([command, dir.to_str().unwrap(), "--seed", "0", "--random", RANDOM]);
        bytes.extend(run(&args).1.into_bytes());
    }
    for k in 1..=6 {
        bytes.extend(run(&["--machine", "reduce", "--r", &k.to_string()]).1.into_bytes());
    }
    bytes
}

fn determinism() -> Outcome {
    let mut o = Outcome::new();
    let first = full_suite(false);
    let second = full_suite(false);
    let threaded = full_suite(true);
    o.check(!first.is_empty(), "empty output");
    o.check(first == second, "serial reruns differ");
    o.check(first == threaded, "parallel run differs from serial");
    o.notes.push(format!("{} bytes", first.len()));
    o
}

type Criterion = (u32, &'static str, fn() -> Outcome);

/// Criteria whose wording cannot be met, with the reason. They are still run
/// and must still fail; a change in either direction needs a look.
const UNATTAINABLE: &[(u32, &str)] = &[(
    3,
    "the first three-set quotient display has the wrong Euler characteristic on two-points-three-members",
)];

fn main() {
    let criteria: [Criterion; 7] = [
        (1, "resolution identity", resolution_identity),
        (2, "deepest-intersection shift", final_identity),
        (3, "symbolic reduction", symbolic_reduction),
        (4, "companion isomorphy", companion_isomorphy),
        (5, "rank-one point", rank_one),
        (6, "cross-module consistency", cross_module),
        (7, "determinism", determinism),
    ];
    let mut surprises = Vec::new();
    for (id, title, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {id} [PRIMARY] {title:<26} {verdict} ({:.1?})", start.elapsed());
        for n in &outcome.notes {
            println!("    {n}");
        }
        let known = UNATTAINABLE.iter().find(|(i, _)| *i == id);
        if let Some((_, why)) = known {
            println!("    known unattainable: {why}");
        }
        if outcome.ok == known.is_some() {
            surprises.push(id);
        }
    }
    if !surprises.is_empty() {
        eprintln!("unexpected outcome for criteria {surprises:?}");
        std::process::exit(1);
    }
}

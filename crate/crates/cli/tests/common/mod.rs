use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: String,
    pub code: i32,
    pub args: Vec<String>,
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(name: &str, ext: &str) -> PathBuf {
    fixtures_dir().join("golden").join(format!("{name}.{ext}"))
}

pub fn manifest() -> Vec<Case> {
    let text = std::fs::read_to_string(fixtures_dir().join("manifest.txt")).expect("manifest");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut parts = l.split_whitespace();
            let name = parts.next().unwrap().to_string();
            let code = parts.next().unwrap().parse().unwrap();
            Case { name, code, args: parts.map(String::from).collect() }
        })
        .collect()
}

/// Runs the binary in the fixture directory; returns (exit code, stdout, stderr).
pub fn run(args: &[String]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_plrk"))
        .args(args)
        .current_dir(fixtures_dir())
        .env_remove("PLRK_SEED")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// Every manifest case twice: exit code as listed, identical output across runs and
/// identical to the golden files. Returns the number of cases.
pub fn check_corpus() -> Result<usize, String> {
    let cases = manifest();
    for c in &cases {
        let first = run(&c.args);
        let second = run(&c.args);
        if first != second {
            return Err(format!("{}: output differs between runs", c.name));
        }
        let (code, out, err) = first;
        if code != c.code {
            return Err(format!("{}: exit {code}, expected {}\n{out}{err}", c.name, c.code));
        }
        for (ext, got) in [("out", &out), ("err", &err)] {
            let want =
                std::fs::read_to_string(golden_path(&c.name, ext)).map_err(|e| format!("{}.{ext}: {e}", c.name))?;
            if &want != got {
                return Err(format!("{}.{ext} differs from the golden file", c.name));
            }
        }
    }
    Ok(cases.len())
}

/// Rewrites the golden files from the current binary.
pub fn bless() {
    std::fs::create_dir_all(fixtures_dir().join("golden")).unwrap();
    for c in manifest() {
        let (_, out, err) = run(&c.args);
        std::fs::write(golden_path(&c.name, "out"), out).unwrap();
        std::fs::write(golden_path(&c.name, "err"), err).unwrap();
    }
}

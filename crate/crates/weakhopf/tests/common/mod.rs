#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.whf"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn fixture_names() -> Vec<String> {
    weakhopf_core::zoo::all_fixtures().into_iter().map(|fx| fx.name).collect()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn weakhopf<I, S>(args: I) -> Run
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let out = Command::new(env!("CARGO_BIN_EXE_weakhopf")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Replaces entry `col` of row `row` in section `section` of document `doc`.
pub fn mutate(text: &str, doc: &str, section: &str, row: usize, col: usize, value: &str) -> String {
    let mut current = String::new();
    let mut in_section = false;
    let mut seen = 0;
    let mut applied = false;
    let mut out = Vec::new();
    for line in text.lines() {
        let mut line = line.to_string();
        if line == "---" {
            current.clear();
        } else if let Some(name) = line.strip_prefix("name: ") {
            current = name.to_string();
        }
        if line.starts_with("  ") {
            if in_section && current == doc {
                if seen == row {
                    let mut cells: Vec<&str> = line.split_whitespace().collect();
                    cells[col] = value;
                    line = format!("  {}", cells.join(" "));
                    applied = true;
                }
                seen += 1;
            }
        } else {
            in_section = line == format!("{section}:");
            seen = 0;
        }
        out.push(line);
    }
    assert!(applied, "no row {row} in {doc}/{section}");
    out.join("\n") + "\n"
}

pub fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

pub struct Run {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            Case {
                name: parts[0].to_string(),
                args: parts[1].split_whitespace().map(String::from).collect(),
                exit: parts[2].parse().expect("exit code"),
            }
        })
        .collect()
}

pub fn run(args: &[String]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_affgebra"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs");
    Run {
        exit: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn expected_stdout(case: &Case) -> String {
    std::fs::read_to_string(golden_dir().join(format!("{}.out", case.name))).expect("golden output")
}

/// Files written by the tool itself, hence in canonical form.
pub const CANONICAL: [&str; 4] = ["sl2_id.json", "sl2_data.json", "sl2_affgebra.json", "aff1_f7_data.json"];

//! Driving the command-line front end in-process and reading its JSON.

use hitchin::cli::{run_with, Settings};

fn main() {
    let out = run_with(
        ["hitchin", "--format", "json", "mirror", "--genus", "3"],
        Settings::default(),
    );
    let v: serde_json::Value = serde_json::from_str(&out.stdout).expect("valid JSON");
    println!(
        "exit {}: {} elements, pass = {}",
        out.code, v["elements_checked"], v["pass"]
    );

    let bad = run_with(
        ["hitchin", "mirror", "--genus", "3", "--mutate", "shift"],
        Settings::default(),
    );
    println!("with a wrong shift: exit {}", bad.code);
}

//! Acceptance gate: one line per criterion, non-zero exit if any fails.
//!
//! Criteria 1 to 11 come from the shared suite in `mckay_core::suite`.
//! Criterion 12 runs `mckay check` twice and compares every byte written.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};

use mckay_core::suite::{criteria, run_criterion, Workbench};
use mckay_core::DEFAULT_MAX_ORDER;

fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

fn check_run(out: &Path) -> (i32, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_mckay"))
        .arg("check")
        .arg("--out")
        .arg(out)
        .env_remove("MCKAY_MAX_ORDER")
        .output()
        .expect("mckay check runs");
    (o.status.code().unwrap_or(-1), o.stdout)
}

fn determinism() -> Result<String, String> {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    let (code_a, out_a) = check_run(&a);
    let (code_b, out_b) = check_run(&b);
    if code_a != code_b {
        return Err(format!("exit codes differ: {code_a} vs {code_b}"));
    }
    if out_a != out_b {
        return Err("stdout differs between runs".into());
    }
    let (sa, sb) = (snapshot(&a), snapshot(&b));
    if sa.keys().ne(sb.keys()) {
        return Err("artifact sets differ".into());
    }
    if let Some(name) = sa.keys().find(|k| sa[*k] != sb[*k]) {
        return Err(format!("{name} differs"));
    }
    if !sa.contains_key("check.log") {
        return Err("check.log missing".into());
    }
    Ok(format!("{} files byte-identical across two runs", sa.len()))
}

fn main() -> ExitCode {
    let mut w = Workbench::new(DEFAULT_MAX_ORDER);
    let mut failed = 0;
    for (id, _) in criteria() {
        let outcome = run_criterion(id, &mut w).unwrap();
        failed += usize::from(!outcome.passed);
        println!("{outcome}");
    }

    let title = "check runs are deterministic";
    match determinism() {
        Ok(note) => println!("criterion 12 [PASS] {title}\n    {note}"),
        Err(why) => {
            failed += 1;
            println!("criterion 12 [FAIL] {title}\n    FAILED: {why}");
        }
    }

    if failed == 0 {
        println!("acceptance: 12/12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 12 criteria failed");
        ExitCode::FAILURE
    }
}

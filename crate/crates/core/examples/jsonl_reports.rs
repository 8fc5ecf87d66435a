// Drive the CLI in-process and read its jsonl stream back.

use std::error::Error;

use zmgroup::cli::run_with;
use zmgroup::verifier::ReportRecord;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["zmgroup", "verify", "--max-order", "16", "--families", "zm,dicyclic", "--format", "jsonl"];
    let code = run_with(args, &mut out, &mut err);
    print!("{}", String::from_utf8(err)?);
    if code != 0 {
        return Err(format!("verify exited with {code}").into());
    }

    let records: Vec<ReportRecord> = String::from_utf8(out)?
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()?;
    for r in records.iter().filter(|r| r.order == 8 || r.order == 12) {
        println!("{:<14} order {:>2}  S {:>2}  formula {:?}", r.label, r.order, r.s, r.formula_s);
    }

    let mut out = Vec::new();
    let code = run_with(["zmgroup", "check-params", "4", "2", "3"], &mut out, &mut Vec::new());
    print!("{}", String::from_utf8(out)?);
    assert_eq!(code, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

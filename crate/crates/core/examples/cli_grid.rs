//! Drive the command-line surface in-process: a small grid as CSV, then a
//! verification run whose summary goes to stderr.

use zetalab::cli::run_with;

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = [
        "zetalab",
        "--format",
        "csv",
        "grid",
        "--fn",
        "zeta-reg",
        "--cutoff",
        "exp",
        "--sigma",
        "0.1:0.9:0.4",
        "--s-im",
        "14",
        "--lambda",
        "0.5",
    ];
    let code = run_with(args, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}");

    out.clear();
    err.clear();
    let code = run_with(
        [
            "zetalab",
            "verify",
            "--kind",
            "exp-symmetric",
            "--lambda",
            "1",
        ],
        &mut out,
        &mut err,
    );
    println!(
        "{} records, exit {code}",
        String::from_utf8_lossy(&out).lines().count()
    );
    print!("{}", String::from_utf8_lossy(&err));
}

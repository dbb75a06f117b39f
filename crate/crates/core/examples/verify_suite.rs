//! Runs the built-in cross-checks and prints one summary line each.

use hochschild::verify::run_suite;

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = filter.iter().map(String::as_str).collect();
    let mut failed = 0;
    for (name, result) in run_suite(&names).unwrap() {
        match result {
            Ok(report) => {
                failed += usize::from(!report.passed);
                println!("{:<28} {}", name, report.summary());
            }
            Err(e) => {
                failed += 1;
                println!("{name:<28} error: {e}");
            }
        }
    }
    std::process::exit(i32::from(failed > 0));
}

use std::io::Write;

fn main() {
    let (code, out) = clustersieve::cli::run(std::env::args_os());
    if !out.is_empty() {
        let _ = if code == 2 {
            writeln!(std::io::stderr(), "{out}")
        } else {
            writeln!(std::io::stdout(), "{out}")
        };
    }
    std::process::exit(code);
}

use std::io::Write;

fn main() {
    let (code, output) = weylord::cli::run(std::env::args());
    // reports still go to stdout on verification failure; only usage
    // errors go to stderr
    if code == 2 {
        let _ = write!(std::io::stderr(), "{output}");
    } else {
        print!("{output}");
    }
    std::process::exit(code);
}

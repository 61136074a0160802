use std::io;
use std::process;

fn main() {
    let code = secant_varieties::cli::run(std::env::args_os(), &mut io::stdout());
    process::exit(code);
}

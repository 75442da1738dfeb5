use std::io::Write;

fn main() {
    let code = bandgrowth::cli::main_with_args(std::env::args_os());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}

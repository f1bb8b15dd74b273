fn main() {
    let (code, out) = fm_cli::run(std::env::args_os());
    if code == fm_cli::EXIT_USAGE {
        eprintln!("{out}");
    } else if !out.is_empty() {
        println!("{out}");
    }
    std::process::exit(code);
}

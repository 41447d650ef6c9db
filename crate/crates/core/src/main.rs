fn main() {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = ncspectra::cli::run(std::env::args_os(), &mut out);
    std::process::exit(code);
}

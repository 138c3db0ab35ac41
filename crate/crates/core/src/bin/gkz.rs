fn main() {
    let (code, out, err) = gkz_core::cli::execute(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    std::process::exit(code);
}

fn main() {
    let code = zmgroup::cli::run(std::env::args_os());
    std::process::exit(code);
}

fn main() {
    let (code, out) = moldkit::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}

fn main() {
    let (code, out) = horofan::cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{out}");
    std::process::exit(code);
}

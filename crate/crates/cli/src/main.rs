fn main() {
    let r = z2z4_cli::run(std::env::args_os());
    print!("{}", r.stdout);
    eprint!("{}", r.stderr);
    std::process::exit(r.exit_code);
}

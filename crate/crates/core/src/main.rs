fn main() {
    let outcome = racah_bi::cli::run(std::env::args_os());
    if outcome.code != 2 {
        println!("{}", outcome.output);
    } else {
        eprintln!("{}", outcome.output);
    }
    std::process::exit(outcome.code);
}

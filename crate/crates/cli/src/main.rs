fn main() {
    std::process::exit(admcalc::run(std::env::args_os()));
}

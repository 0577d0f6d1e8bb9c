fn main() {
    std::process::exit(weaving::run(std::env::args_os()));
}

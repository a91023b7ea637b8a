fn main() {
    std::process::exit(frobdyn::cli::run());
}

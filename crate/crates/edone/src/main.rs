fn main() {
    std::process::exit(edone::cli::main());
}

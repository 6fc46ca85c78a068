fn main() {
    std::process::exit(szeged::cli::main());
}

fn main() {
    std::process::exit(macaulay::cli::main())
}

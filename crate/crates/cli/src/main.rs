fn main() {
    std::process::exit(abt_cli::main_with_std());
}

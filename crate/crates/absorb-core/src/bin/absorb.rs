fn main() {
    std::process::exit(absorb_core::cli::main_entry());
}

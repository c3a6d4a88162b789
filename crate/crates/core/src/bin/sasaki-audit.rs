fn main() {
    std::process::exit(sasaki_audit::cli::main_entry());
}

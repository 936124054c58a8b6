fn main() {
    std::process::exit(toric_mirror::cli::main_entry(std::env::args_os()));
}

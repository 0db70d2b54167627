fn main() {
    std::process::exit(dld::cli_main(std::env::args_os()));
}

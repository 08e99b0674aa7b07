fn main() {
    std::process::exit(heartknit::cli_main());
}

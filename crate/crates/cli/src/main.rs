fn main() {
    std::process::exit(zkring_cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(ncphase_cli::run() as i32);
}

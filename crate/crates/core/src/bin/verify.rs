fn main() {
    std::process::exit(qverify::cli::main(std::env::args_os()));
}

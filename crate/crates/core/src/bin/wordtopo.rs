fn main() {
    std::process::exit(wordtopo::cli::run(std::env::args_os()));
}

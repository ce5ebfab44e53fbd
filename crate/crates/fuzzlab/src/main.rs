fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Err(e) = fuzzlab::run::dispatch(&args) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
}

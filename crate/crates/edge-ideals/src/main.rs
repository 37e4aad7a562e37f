fn main() { std::process::exit(edge_ideals::cli::run(std::env::args().skip(1))); }

fn main() {
    std::process::exit(bohr_radius::cli::run(std::env::args_os()));
}

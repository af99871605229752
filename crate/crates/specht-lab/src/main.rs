fn main() {
    // CLI wired up once the library surface is complete.
    eprintln!("specht-lab: not yet wired");
    std::process::exit(2);
}

fn main() -> std::process::ExitCode {
    serre::cli::run()
}

fn main() -> std::process::ExitCode {
    tubeke::cli::main()
}

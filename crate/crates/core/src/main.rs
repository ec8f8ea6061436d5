fn main() -> std::process::ExitCode {
    landau_wehrl::cli::main()
}

fn main() -> std::process::ExitCode {
    bn_quasicrystal::cli::main()
}

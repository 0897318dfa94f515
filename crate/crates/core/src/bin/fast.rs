use fast_core::cli;

fn main() {
    cli::init_logging();
    let cmd = match cli::parse_args(std::env::args_os()) {
        Ok(cmd) => cmd,
        Err(e) => e.exit(),
    };
    std::process::exit(cli::dispatch(cmd));
}

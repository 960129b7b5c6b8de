use clap::Parser;

use multinacci_ecc::cli::{run, Cli};
use multinacci_ecc::Error;

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(err) = run(cli, &mut out) {
        // a downstream consumer closing the pipe is not a failure
        if let Error::Io(io_err) = &err {
            if io_err.kind() == std::io::ErrorKind::BrokenPipe {
                return;
            }
        }
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}

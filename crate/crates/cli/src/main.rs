use std::io::Write;

fn main() {
    let out = prv_cli::run_args(std::env::args_os());
    if out.code == prv_cli::EXIT_OK || out.code == prv_cli::EXIT_CHECK_FAILED {
        print!("{}", out.stdout);
        let _ = std::io::stdout().flush();
    } else {
        eprint!("{}", out.stdout);
    }
    std::process::exit(out.code);
}

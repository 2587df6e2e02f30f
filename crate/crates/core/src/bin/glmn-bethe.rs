use std::io::Write;

fn main() {
    let out = glmn_bethe::cli::run_args(std::env::args_os());
    if out.code == 2 {
        eprint!("{}", out.output);
    } else {
        let _ = std::io::stdout().write_all(out.output.as_bytes());
    }
    std::process::exit(out.code);
}

use std::io::Write;

fn main() {
    let seed = std::env::var("WACHSPRESS_SEED").ok();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = wachspress_cli::run(std::env::args_os(), seed.as_deref(), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}

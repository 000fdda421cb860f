use std::io;

fn main() {
    let code = cheb_identities::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}

use clap::Parser;

fn main() {
    let cli = lqw::cli::Cli::parse();
    match lqw::cli::run(&cli) {
        Ok(summary) => println!("{summary}"),
        Err(e) => {
            eprintln!("lqw: {e}");
            std::process::exit(1);
        }
    }
}

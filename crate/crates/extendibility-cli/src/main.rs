use clap::Parser;

fn main() {
    let cli = extendibility_cli::Cli::parse();
    match extendibility_cli::execute(cli) {
        Ok(output) => {
            println!("{}", output.text);
            std::process::exit(output.exit_code);
        }
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(1);
        }
    }
}

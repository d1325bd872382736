use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use recoll_cli::{parse_field, run, Command, Format, Instance, Options};

/// Verify recollements, Auslander-Bridger sequences and higher
/// Auslander-Reiten theory on an instance file.
#[derive(Parser, Debug)]
#[command(name = "recoll", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Instance file.
    instance: PathBuf,
    /// Override the field of the instance: `rationals` or `gf P`.
    #[arg(long)]
    field: Option<String>,
    /// Cluster-tilting degree, overriding `task n`.
    #[arg(long)]
    n: Option<usize>,
    /// Generator or vertex names whose idempotents are summed.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    idempotent: Option<Vec<String>>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| {
        let field = cli.field.as_deref().map(parse_field).transpose()?;
        let inst = Instance::from_path(&cli.instance, field)?;
        run(cli.command, &inst, &Options { n: cli.n, idempotent: cli.idempotent.clone() })
    })();
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(cli.format);
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use motzkin_cli::commands::{self, BfileCheck, CliError, Direction, Family};
use motzkin_core::refdata::SequenceId;

/// Multi-edge trees and 3-coloured Motzkin paths: convert, enumerate, verify.
#[derive(Parser, Debug)]
#[command(name = "motzkin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Map a tree to its path or a path back to its tree.
    Convert {
        #[arg(long, value_enum)]
        direction: Direction,
        /// Tree or path text; "-" reads standard input.
        input: String,
    },
    /// List every object of a family and size, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        /// Tree weight, path length, or Dyck semilength.
        #[arg(long)]
        size: usize,
        /// Print only the number of objects.
        #[arg(long)]
        count: bool,
    },
    /// Count the objects of a family and size without listing them.
    Count {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        size: usize,
    },
    /// Exhaustively check the bijection and the counting series.
    Verify {
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u16).range(1..))]
        max_size: u16,
        /// Local OEIS b-file to compare against the series.
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Sequence the b-file holds.
        #[arg(long, default_value = "A002212", requires = "bfile")]
        sequence: SequenceId,
    },
    /// Print the ten trees with three edges and every stage of their paths.
    Table,
    /// Draw a tree or path in ASCII.
    Render {
        /// Tree or path text; "-" reads standard input.
        input: String,
    },
}

fn read_input(arg: String) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(arg)
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::Convert { direction, input } => {
            writeln!(
                out,
                "{}",
                commands::convert(direction, &read_input(input)?)?
            )?;
            true
        }
        Command::Enumerate {
            family,
            size,
            count,
        } => {
            commands::enumerate(family, size, count, &mut out)?;
            true
        }
        Command::Count { family, size } => {
            writeln!(out, "{}", commands::count(family, size))?;
            true
        }
        Command::Verify {
            max_size,
            bfile,
            sequence,
        } => {
            let bfile = bfile.map(|path| BfileCheck { path, sequence });
            let (report, ok) = commands::verify(usize::from(max_size), bfile.as_ref())?;
            writeln!(out, "{report}")?;
            ok
        }
        Command::Table => {
            write!(out, "{}", commands::table())?;
            true
        }
        Command::Render { input } => {
            write!(out, "{}", commands::render(&read_input(input)?)?)?;
            true
        }
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("motzkin: verification failed");
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("motzkin: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

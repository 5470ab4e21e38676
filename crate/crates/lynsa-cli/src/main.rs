//! Command line front end: file/generator ingestion, variant selection,
//! serialization, correctness checking, and desk-scale benchmarking.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};

use lynsa::alloc::CountingAlloc;
use lynsa::types::{Text, TextError};
use lynsa_cli::gen::{generate, GenKind, GenSpec};
use lynsa_cli::io::{remap_alphabet, write_binary, write_text};
use lynsa_cli::report::{check, compute, CheckStatus, RunReport};
use lynsa_cli::Variant;

#[global_allocator]
static ALLOC: CountingAlloc = CountingAlloc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Sa,
    La,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Binary,
}

/// Suffix array and Lyndon array construction by induced sorting.
#[derive(Debug, Parser)]
#[command(name = "lynsa", version)]
#[command(group(ArgGroup::new("input").required(true).args(["text", "file", "gen"])))]
struct Args {
    /// Use the given string as input
    #[arg(long)]
    text: Option<String>,

    /// Read the input from a file
    #[arg(long)]
    file: Option<PathBuf>,

    /// Generate the input: KIND:SIZE[:SEED] with KIND one of
    /// bbba, fib, aab, rand<SIGMA>
    #[arg(long)]
    gen: Option<String>,

    /// Algorithm: naive, nextprev, singleaux, inplace or nsv-isa
    #[arg(long, default_value = "inplace", value_parser = parse_variant)]
    variant: Variant,

    /// Which arrays to write
    #[arg(long, value_enum, default_value_t = Emit::Both)]
    emit: Emit,

    /// Output encoding
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write arrays to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Verify the result against the reference implementations
    /// (exit code 3 on mismatch)
    #[arg(long)]
    check: bool,

    /// Benchmark instead of emitting arrays: print one report line per run
    #[arg(long)]
    bench: bool,

    /// With --bench and --gen: also run at size*2, size*4, ... up to
    /// size*2^K
    #[arg(long, value_name = "K", requires = "bench")]
    double: Option<u32>,

    /// Repetitions per benchmark run; the fastest is reported
    #[arg(long, value_name = "R", default_value_t = 1, requires = "bench")]
    reps: u32,

    /// Compact the observed alphabet onto 1..k (permits inputs
    /// containing byte 0)
    #[arg(long)]
    remap: bool,

    /// Accept empty input (the arrays of the bare sentinel)
    #[arg(long)]
    allow_empty: bool,

    /// Print reports as key=value pairs instead of tab-separated fields
    #[arg(long)]
    kv: bool,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

enum CliError {
    Usage(String),
    Io(String),
    CheckFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::CheckFailed => 3,
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Io(msg) => eprintln!("lynsa: {msg}"),
                CliError::CheckFailed => eprintln!("lynsa: check failed"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: Args) -> Result<(), CliError> {
    if args.bench {
        bench(&args)
    } else {
        single_run(&args)
    }
}

/// Reads or generates the raw input named by the flags.
fn load_raw(args: &Args, gen_size_override: Option<usize>) -> Result<(String, Vec<u8>), CliError> {
    if let Some(text) = &args.text {
        return Ok(("text".to_string(), text.as_bytes().to_vec()));
    }
    if let Some(path) = &args.file {
        let bytes = fs::read(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        return Ok((name, bytes));
    }
    let spec_str = args.gen.as_ref().expect("clap guarantees one input source");
    let mut spec: GenSpec = spec_str.parse().map_err(CliError::Usage)?;
    if let Some(size) = gen_size_override {
        spec.size = size;
    }
    let name = match spec.kind {
        GenKind::Rand(sigma) => format!("rand{sigma}:{}:{}", spec.size, spec.seed),
        GenKind::Bbba => format!("bbba:{}", spec.size),
        GenKind::Fib => format!("fib:{}", spec.size),
        GenKind::Aab => format!("aab:{}", spec.size),
    };
    Ok((name, generate(&spec)))
}

/// Applies remapping and sentinel policy; returns the text and the
/// effective alphabet size (distinct raw symbols, sentinel excluded).
fn build_text(args: &Args, raw: Vec<u8>) -> Result<(Text, usize), CliError> {
    let (raw, sigma_effective) = if args.remap {
        remap_alphabet(&raw)
    } else {
        let mut present = [false; 256];
        for &b in &raw {
            present[b as usize] = true;
        }
        (raw, present.iter().filter(|&&p| p).count())
    };
    let text = Text::with_options(&raw, args.allow_empty).map_err(|e| match e {
        TextError::EmptyInput => {
            CliError::Usage("empty input (pass --allow-empty to accept it)".to_string())
        }
        TextError::SentinelInInput(at) => CliError::Io(format!(
            "input contains byte 0x00 at offset {at}; pass --remap to compact the alphabet"
        )),
        TextError::TooLarge { len, max } => {
            CliError::Io(format!("input of {len} bytes exceeds the supported {max}"))
        }
    })?;
    Ok((text, sigma_effective))
}

fn single_run(args: &Args) -> Result<(), CliError> {
    let (name, raw) = load_raw(args, None)?;
    let (text, sigma_effective) = build_text(args, raw)?;
    let out = compute(&text, args.variant);

    let status = if args.check {
        check(&text, &out.sa, &out.la)
    } else {
        CheckStatus::Skipped
    };
    if args.check {
        let report = RunReport::build(&name, &text, sigma_effective, args.variant, &out, status);
        eprintln!(
            "{}",
            if args.kv {
                report.to_kv()
            } else {
                report.to_tsv()
            }
        );
    }

    emit_arrays(args, &out.sa, &out.la)?;

    if status == CheckStatus::Fail {
        return Err(CliError::CheckFailed);
    }
    Ok(())
}

fn emit_arrays(args: &Args, sa: &[lynsa::Index], la: &[lynsa::Index]) -> Result<(), CliError> {
    let io_err = |e: std::io::Error| CliError::Io(format!("cannot write output: {e}"));
    let mut sink: BufWriter<Box<dyn Write>> = BufWriter::new(match &args.out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    });
    let parts: &[&[lynsa::Index]] = match args.emit {
        Emit::Sa => &[sa],
        Emit::La => &[la],
        Emit::Both => &[sa, la],
    };
    for values in parts {
        match args.format {
            Format::Text => write_text(&mut sink, values).map_err(io_err)?,
            Format::Binary => write_binary(&mut sink, values).map_err(io_err)?,
        }
    }
    sink.flush().map_err(io_err)
}

fn bench(args: &Args) -> Result<(), CliError> {
    if args.double.is_some() && args.gen.is_none() {
        return Err(CliError::Usage(
            "--double only applies to generated inputs (--gen)".to_string(),
        ));
    }
    let doublings = args.double.unwrap_or(0);
    let reps = args.reps.max(1);

    let base_size = match &args.gen {
        Some(spec) => Some(spec.parse::<GenSpec>().map_err(CliError::Usage)?.size),
        None => None,
    };

    let stdout = std::io::stdout();
    let mut sink = BufWriter::new(stdout.lock());
    let io_err = |e: std::io::Error| CliError::Io(format!("cannot write report: {e}"));
    if !args.kv {
        writeln!(sink, "{}", RunReport::tsv_header()).map_err(io_err)?;
    }

    let mut any_failed = false;
    for step in 0..=doublings {
        let size_override = base_size.map(|s| s << step);
        let (name, raw) = load_raw(args, size_override)?;
        let (text, sigma_effective) = build_text(args, raw)?;

        let mut best = compute(&text, args.variant);
        for _ in 1..reps {
            let next = compute(&text, args.variant);
            if next.elapsed_secs < best.elapsed_secs {
                best = next;
            }
        }
        let status = if args.check {
            check(&text, &best.sa, &best.la)
        } else {
            CheckStatus::Skipped
        };
        any_failed |= status == CheckStatus::Fail;

        let report = RunReport::build(&name, &text, sigma_effective, args.variant, &best, status);
        let line = if args.kv {
            report.to_kv()
        } else {
            report.to_tsv()
        };
        writeln!(sink, "{line}").map_err(io_err)?;
    }
    sink.flush().map_err(io_err)?;

    if any_failed {
        return Err(CliError::CheckFailed);
    }
    Ok(())
}

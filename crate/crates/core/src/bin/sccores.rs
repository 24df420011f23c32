use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use sccores::gap_poset::{cores_from_ideals, GapPoset};
use sccores::harness::{write_csv, Claim, Sweep, Verifier};
use sccores::lattice_paths::{
    enumerate_gen_dyck, enumerate_motzkin, motzkin_number, symmetric_gen_dyck_count, symmetric_motzkin_count,
};
use sccores::sc_core::{count_sc_cores, enumerate_sc_cores, TildePoset};
use sccores::Count;

#[derive(Parser)]
#[command(
    name = "sccores",
    version,
    about = "Simultaneous core partitions, gap posets and Motzkin paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an exact count.
    Count {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Stream objects as JSON lines.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        emit: Emit,
        #[command(flatten)]
        out: Output,
    },
    /// Export a gap poset or a tilde poset.
    Poset {
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "tilde",
            required_unless_present = "tilde"
        )]
        generators: Vec<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        tilde: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Emit the terms a(0)..a(N) of a sequence.
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceName,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Check counting claims and print one report per instance.
    Verify {
        #[arg(long, value_parser = parse_claim, required_unless_present = "all", conflicts_with = "all")]
        claim: Vec<Claim>,
        #[arg(long)]
        all: bool,
        /// Upper end of the size sweep (s + t for pair claims).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_s: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
        /// Weight cap for brute-force partition legs.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Target {
    /// Self-conjugate (s, s+1, s+2)-cores.
    #[arg(long, value_name = "S")]
    sc_cores: Option<usize>,
    /// (s, s+1, ..., s+k)-cores.
    #[arg(long, value_name = "S", requires = "k")]
    cores: Option<usize>,
    #[arg(long, value_name = "N")]
    motzkin: Option<usize>,
    #[arg(long, value_name = "S", requires = "k")]
    gen_dyck: Option<usize>,
    /// Lower ideals of the gap poset given by --generators.
    #[arg(long, requires = "generators")]
    ideals: bool,
    #[arg(long, value_delimiter = ',')]
    generators: Vec<usize>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    #[arg(long)]
    symmetric: bool,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bfile,
    Dot,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Partitions,
    MdSets,
    Ideals,
    Paths,
    Witnesses,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    ScCoreCount,
    Motzkin,
    SymmetricMotzkin,
    EvenSymmetricMotzkin,
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    s.parse().map_err(|e: sccores::Error| e.to_string())
}

enum Family {
    ScCores(usize),
    Cores(usize, usize),
    Motzkin(usize, bool),
    GenDyck(usize, usize, bool),
    Ideals(Vec<usize>),
}

enum Failure {
    Usage(String),
    Input(String),
    Io(io::Error),
    Asserted,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<sccores::Error> for Failure {
    fn from(e: sccores::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

impl Target {
    fn family(&self) -> Result<Family, Failure> {
        let k = self.k.map(|k| k as usize);
        let mut found = Vec::new();
        if let Some(s) = self.sc_cores {
            found.push(Family::ScCores(s));
        }
        if let Some(s) = self.cores {
            found.push(Family::Cores(s, k.unwrap_or(1)));
        }
        if let Some(n) = self.motzkin {
            found.push(Family::Motzkin(n, self.symmetric));
        }
        if let Some(s) = self.gen_dyck {
            found.push(Family::GenDyck(s, k.unwrap_or(1), self.symmetric));
        }
        if self.ideals {
            found.push(Family::Ideals(self.generators.clone()));
        }
        if found.len() != 1 {
            return Err(Failure::Usage(
                "exactly one of --sc-cores, --cores, --motzkin, --gen-dyck, --ideals is required".into(),
            ));
        }
        let family = found.pop().expect("one family");
        match family {
            Family::Cores(0, _) | Family::GenDyck(0, _, _) => Err(Failure::Usage("size must be at least 1".into())),
            Family::ScCores(_) | Family::Cores(..) | Family::Ideals(_) if self.symmetric => {
                Err(Failure::Usage("--symmetric applies to --motzkin and --gen-dyck".into()))
            }
            f => Ok(f),
        }
    }
}

fn open(out: &Output) -> io::Result<Box<dyn Write>> {
    Ok(match &out.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_count(w: &mut dyn Write, format: Format, c: &Count) -> CmdResult {
    match format {
        Format::Plain | Format::Json => writeln!(w, "{c}")?,
        Format::Csv => writeln!(w, "count\n{c}")?,
        _ => return Err(Failure::Usage("count supports --format plain, json or csv".into())),
    }
    Ok(())
}

fn cmd_count(target: &Target, format: Format, out: &Output) -> CmdResult {
    let family = target.family()?;
    let c = match family {
        Family::ScCores(s) => count_sc_cores(s),
        Family::Cores(s, k) => GapPoset::new(&(s..=s + k).collect::<Vec<_>>())?.count_lower_ideals(),
        Family::Motzkin(n, false) => motzkin_number(n),
        Family::Motzkin(n, true) => symmetric_motzkin_count(n),
        Family::GenDyck(s, k, false) => Count::from(enumerate_gen_dyck(s, k)?.count()),
        Family::GenDyck(s, k, true) => symmetric_gen_dyck_count(s, k)?,
        Family::Ideals(gens) => GapPoset::new(&gens)?.count_lower_ideals(),
    };
    let mut w = open(out)?;
    write_count(&mut *w, format, &c)?;
    w.flush()?;
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data")
}

fn emit_ideals(w: &mut dyn Write, gens: &[usize], emit: Emit) -> CmdResult {
    let poset = GapPoset::new(gens)?;
    match emit {
        Emit::Ideals => {
            for ideal in poset.lower_ideals() {
                writeln!(w, "{}", json(&ideal))?;
            }
        }
        Emit::Partitions => {
            for p in cores_from_ideals(gens)? {
                writeln!(w, "{}", json(&p))?;
            }
        }
        _ => {
            return Err(Failure::Usage(
                "this family supports --emit ideals or partitions".into(),
            ))
        }
    }
    Ok(())
}

fn cmd_enumerate(target: &Target, emit: Emit, out: &Output) -> CmdResult {
    let family = target.family()?;
    let mut w = open(out)?;
    match family {
        Family::ScCores(s) => {
            let cores = enumerate_sc_cores(s)?;
            for witness in cores {
                let line = match emit {
                    Emit::Partitions => json(&witness.partition),
                    Emit::MdSets => json(&serde_json::json!({ "md": witness.md })),
                    Emit::Ideals => {
                        let mut ideal = witness.md.into_values();
                        ideal.sort_unstable();
                        json(&ideal)
                    }
                    Emit::Witnesses => witness.to_json(),
                    Emit::Paths => {
                        return Err(Failure::Usage(
                            "--sc-cores supports --emit partitions, md-sets, ideals or witnesses".into(),
                        ))
                    }
                };
                writeln!(w, "{line}")?;
            }
        }
        Family::Cores(s, k) => match emit {
            Emit::Paths => {
                for p in enumerate_gen_dyck(s, k)? {
                    writeln!(w, "{}", json(&p.to_string()))?;
                }
            }
            _ => emit_ideals(&mut *w, &(s..=s + k).collect::<Vec<_>>(), emit)?,
        },
        Family::Ideals(gens) => emit_ideals(&mut *w, &gens, emit)?,
        Family::Motzkin(n, symmetric) => {
            if emit != Emit::Paths {
                return Err(Failure::Usage("--motzkin supports --emit paths".into()));
            }
            for p in enumerate_motzkin(n).filter(|p| !symmetric || p.is_symmetric()) {
                writeln!(w, "{}", json(&p))?;
            }
        }
        Family::GenDyck(s, k, symmetric) => {
            if emit != Emit::Paths {
                return Err(Failure::Usage("--gen-dyck supports --emit paths".into()));
            }
            for p in enumerate_gen_dyck(s, k)?.filter(|p| !symmetric || p.is_symmetric()) {
                writeln!(w, "{}", json(&p.to_string()))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_poset(generators: &[usize], tilde: Option<u64>, format: Format, out: &Output) -> CmdResult {
    let text = match tilde {
        Some(s) => {
            let p = TildePoset::new(s as usize)?;
            match format {
                Format::Json => p.to_json(),
                Format::Dot => p.to_dot(),
                _ => return Err(Failure::Usage("poset supports --format json or dot".into())),
            }
        }
        None => {
            let p = GapPoset::new(generators)?;
            match format {
                Format::Json => p.to_json(),
                Format::Dot => p.to_dot(),
                _ => return Err(Failure::Usage("poset supports --format json or dot".into())),
            }
        }
    };
    let mut w = open(out)?;
    w.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_sequence(name: SequenceName, max_n: usize, format: Format, out: &Output) -> CmdResult {
    let term = |n: usize| match name {
        SequenceName::ScCoreCount => count_sc_cores(n),
        SequenceName::Motzkin => motzkin_number(n),
        SequenceName::SymmetricMotzkin => symmetric_motzkin_count(n),
        SequenceName::EvenSymmetricMotzkin => symmetric_motzkin_count(2 * n),
    };
    let terms: Vec<Count> = (0..=max_n).map(term).collect();
    let mut w = open(out)?;
    match format {
        Format::Bfile => {
            for (n, a) in terms.iter().enumerate() {
                writeln!(w, "{n} {a}")?;
            }
        }
        Format::Csv => {
            writeln!(w, "n,a(n)")?;
            for (n, a) in terms.iter().enumerate() {
                writeln!(w, "{n},{a}")?;
            }
        }
        Format::Plain => {
            let line: Vec<String> = terms.iter().map(Count::to_string).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Format::Json => {
            let line: Vec<String> = terms.iter().map(Count::to_string).collect();
            writeln!(w, "[{}]", line.join(","))?;
        }
        Format::Dot => {
            return Err(Failure::Usage(
                "sequence supports --format bfile, csv, plain or json".into(),
            ))
        }
    }
    w.flush()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    claims: &[Claim],
    all: bool,
    max_s: Option<u64>,
    k: Option<u64>,
    cap: Option<usize>,
    no_timing: bool,
    format: Format,
    out: &Output,
) -> CmdResult {
    let claims: Vec<Claim> = if all { Claim::ALL.to_vec() } else { claims.to_vec() };
    if !matches!(format, Format::Plain | Format::Json | Format::Csv) {
        return Err(Failure::Usage("verify supports --format plain, json or csv".into()));
    }
    let sweep = Sweep {
        max_s: max_s.map(|v| v as usize),
        k: k.map(|v| v as usize),
    };
    let reports = Verifier::with_cap(cap).run(&claims, sweep)?;
    let timing = !no_timing;
    let mut w = open(out)?;
    match format {
        Format::Json => {
            for r in &reports {
                writeln!(w, "{}", r.to_json_line(timing))?;
            }
        }
        Format::Csv => write_csv(&reports, &mut *w, timing)?,
        _ => {
            for r in &reports {
                if timing {
                    writeln!(w, "{} ({} ms)", r.summary_line(), r.elapsed_ms)?;
                } else {
                    writeln!(w, "{}", r.summary_line())?;
                }
            }
            let failed = reports.iter().filter(|r| r.is_failure()).count();
            let informational = reports.iter().filter(|r| !r.passed && !r.asserted).count();
            writeln!(
                w,
                "{} reports, {} passed, {} failed, {} informational mismatches",
                reports.len(),
                reports.iter().filter(|r| r.passed).count(),
                failed,
                informational
            )?;
        }
    }
    w.flush()?;
    if reports.iter().any(|r| r.is_failure()) {
        return Err(Failure::Asserted);
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Count { target, format, out } => cmd_count(&target, format, &out),
        Command::Enumerate { target, emit, out } => cmd_enumerate(&target, emit, &out),
        Command::Poset {
            generators,
            tilde,
            format,
            out,
        } => cmd_poset(&generators, tilde, format, &out),
        Command::Sequence {
            name,
            max_n,
            format,
            out,
        } => cmd_sequence(name, max_n, format, &out),
        Command::Verify {
            claim,
            all,
            max_s,
            k,
            cap,
            no_timing,
            format,
            out,
        } => cmd_verify(&claim, all, max_s, k, cap, no_timing, format, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::Count { .. } => "count",
        Command::Enumerate { .. } => "enumerate",
        Command::Poset { .. } => "poset",
        Command::Sequence { .. } => "sequence",
        Command::Verify { .. } => "verify",
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Asserted) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            let mut cmd = Cli::command();
            cmd.build();
            let sub = cmd.find_subcommand_mut(name).expect("registered subcommand");
            sub.error(ErrorKind::ArgumentConflict, msg).exit()
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

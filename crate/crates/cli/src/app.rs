//! Command-line parsing and dispatch.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use splythoff_core::games::{Family, GameRules, Position};
use splythoff_core::substitution::{
    render_word, Coding, Letter, Substitution, WordStream, DEFAULT_SCAN_CAP,
};

use crate::format::{Format, NamedRows};
use crate::play::{self, Player};
use crate::verify::{self, VerifyParams};
use crate::{experiment, sg, tables};

/// Exit code for a failed verification.
pub const EXIT_FAILED: i32 = 1;
/// Exit code for bad arguments or input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "splythoff",
    version,
    about = "k-bonacci tables and Splythoff Nim"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for the parallel grid sweep.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Longest word prefix any command may materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_CAP)]
    pub seed_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a prefix of the k-bonacci word, optionally through a coding.
    Word {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Delete every occurrence of this letter.
        #[arg(long, conflicts_with = "coding")]
        delete: Option<u8>,
        /// Letter images such as "0:0,1:1,2:" (empty image deletes).
        #[arg(long)]
        coding: Option<String>,
    },
    /// Print a table of sequences.
    Table(TableArgs),
    /// Run cross-checks; exits 1 if any fails.
    Verify {
        /// One of: all, golden, theorem1, coding, partitions, theorem4,
        /// lemma18, sg-table, sg-evidence, characterization, step-codes,
        /// table10-code, beatty.
        #[arg(default_value = "all")]
        check: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        upto: Option<u64>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Step-code experiment on a-Splythoff, printed as a JSON line.
    Experiment {
        #[arg(long)]
        a: u32,
        /// Number of P-positions.
        #[arg(long, default_value_t = 500)]
        n: usize,
        /// Extra substitution to test, such as "0:01,1:2,2:01".
        #[arg(long)]
        candidate: Vec<String>,
    },
    /// Export a table row as a b-file, or a Sprague-Grundy grid.
    #[command(subcommand)]
    Export(ExportCommand),
    /// Play against the engine on standard input.
    Play {
        #[command(flatten)]
        game: GameArgs,
        /// Starting piles, "m,n".
        #[arg(long, default_value = "4,7")]
        start: String,
        #[arg(long, value_enum, default_value_t = Player::Human)]
        first: Player,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExportCommand {
    /// One row of a table in b-file form.
    Row {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        row: String,
    },
    /// A Sprague-Grundy grid as CSV or as an SGG1 binary dump.
    Sg {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 18)]
        size: usize,
        /// Largest pile first, so the origin is bottom-left.
        #[arg(long)]
        paper_orientation: bool,
        /// Write the binary dump instead of CSV.
        #[arg(long)]
        binary: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Positions,
    Diff,
    Ddiff,
    Wythoff,
    Splythoff,
    Quadribonacci,
    Beatty,
    Game,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Wythoff,
    AWythoff,
    Splythoff,
    ASplythoff,
}

#[derive(Debug, Clone, Args)]
pub struct GameArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Splythoff)]
    pub family: FamilyArg,
    /// Bound on the difference of the two removals in a double.
    #[arg(long, default_value_t = 1)]
    pub a: u32,
}

impl GameArgs {
    pub fn rules(&self) -> Result<GameRules> {
        let family = match self.family {
            FamilyArg::Wythoff => Family::Wythoff,
            FamilyArg::AWythoff => Family::AWythoff,
            FamilyArg::Splythoff => Family::Splythoff,
            FamilyArg::ASplythoff => Family::ASplythoff,
        };
        Ok(GameRules::new(family, self.a)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Number of columns.
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Word order for positions, diff and ddiff.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// `a` for beatty and game tables.
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    /// `b` for beatty tables.
    #[arg(long, default_value_t = 1)]
    pub b: u32,
    #[arg(long, value_enum, default_value_t = FamilyArg::Splythoff)]
    pub family: FamilyArg,
}

impl TableArgs {
    pub fn build(&self, seed_cap: usize) -> Result<NamedRows> {
        ensure!(
            self.n <= seed_cap,
            "{} columns exceed --seed-cap {seed_cap}",
            self.n
        );
        match self.kind {
            TableKind::Positions => tables::positions(self.k, self.n),
            TableKind::Diff => tables::differences(self.k, self.n),
            TableKind::Ddiff => tables::double_differences(self.k, self.n),
            TableKind::Wythoff => tables::wythoff(self.n),
            TableKind::Splythoff => tables::splythoff(self.n),
            TableKind::Quadribonacci => tables::quadribonacci(self.n),
            TableKind::Beatty => tables::beatty(self.a, self.b, self.n),
            TableKind::Game => {
                let rules = GameArgs {
                    family: self.family,
                    a: self.a,
                }
                .rules()?;
                tables::game(&rules, self.n)
            }
        }
    }
}

/// Parses "l:image,.." where images may be empty; letters are base-36 digits.
pub fn parse_coding(spec: &str, alphabet: usize) -> Result<Coding> {
    let mut images = vec![None; alphabet];
    for rule in spec.split(',') {
        let (l, img) = rule
            .split_once(':')
            .with_context(|| format!("rule {rule:?} is not letter:image"))?;
        let mut chars = l.trim().chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            bail!("rule {rule:?} must name a single letter");
        };
        let l = Letter::from_char(c).with_context(|| format!("bad letter {c:?}"))?;
        ensure!(l.index() < alphabet, "letter {c} is outside the alphabet");
        let img = img
            .trim()
            .chars()
            .map(|c| Letter::from_char(c).with_context(|| format!("bad letter {c:?}")))
            .collect::<Result<Vec<_>>>()?;
        images[l.index()] = Some(img);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            img.with_context(|| format!("letter {} has no rule", Letter(i as u8).to_char()))
        })
        .collect::<Result<Vec<_>>>()?;
    let output = images
        .iter()
        .flatten()
        .map(|l| l.index() + 1)
        .max()
        .unwrap_or(1);
    Ok(Coding::new(images, output)?)
}

fn parse_position(s: &str) -> Result<Position> {
    let (m, n) = s.split_once(',').context("expected \"m,n\"")?;
    Ok(Position::new(m.trim().parse()?, n.trim().parse()?))
}

enum Outcome {
    Ok,
    Failed,
}

/// Parses `args` (program name first) and runs the command; returns the
/// process exit code.
pub fn run<I, T>(
    args: I,
    input: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = execute(
        &cli,
        input,
        if cli.out.is_some() { &mut buf } else { stdout },
    );
    let result = result.and_then(|o| {
        if let Some(path) = &cli.out {
            std::fs::write(path, &buf).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(o)
    });
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<Outcome> {
    if let Some(t) = cli.threads {
        // the global pool can be configured once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match &cli.command {
        Command::Word {
            k,
            n,
            delete,
            coding,
        } => {
            ensure!(
                *n <= cli.seed_cap,
                "{n} letters exceed --seed-cap {}",
                cli.seed_cap
            );
            let mut stream = WordStream::kbonacci(*k)?.with_cap(cli.seed_cap);
            let mut word = if *n <= 1 {
                stream.prefix()[..*n].to_vec()
            } else {
                stream.ensure(*n)?[..*n].to_vec()
            };
            let coding = match (delete, coding) {
                (Some(d), _) => Some(Coding::deleting(*k, Letter(*d))?),
                (None, Some(spec)) => Some(parse_coding(spec, *k)?),
                _ => None,
            };
            if let Some(c) = coding {
                word = c.apply(&word)?;
            }
            writeln!(out, "{}", render_word(&word))?;
        }
        Command::Table(args) => {
            let t = args.build(cli.seed_cap)?;
            out.write_all(
                t.render(cli.format.unwrap_or(Format::Tsv), None)?
                    .as_bytes(),
            )?;
        }
        Command::Export(ExportCommand::Row { table, row }) => {
            let t = table.build(cli.seed_cap)?;
            out.write_all(t.render(Format::Bfile, Some(row))?.as_bytes())?;
        }
        Command::Export(ExportCommand::Sg {
            game,
            size,
            paper_orientation,
            binary,
        }) => {
            let grid = sg::sprague_grundy_grid_par(&game.rules()?, *size)?;
            if *binary {
                sg::write_binary(&grid, out)?;
            } else {
                out.write_all(sg::to_csv(&grid, *paper_orientation).as_bytes())?;
            }
        }
        Command::Verify {
            check,
            n,
            k,
            upto,
            size,
            bound,
        } => {
            let params = VerifyParams {
                n: *n,
                k: *k,
                upto: *upto,
                size: *size,
                bound: *bound,
            };
            let check = check.as_str();
            ensure!(
                check == "all" || verify::CHECKS.contains(&check),
                "unknown check {check:?}; expected all or one of {:?}",
                verify::CHECKS
            );
            let mut all_passed = true;
            // run one at a time so progress is visible
            let names: Vec<&str> = if check == "all" {
                verify::CHECKS.to_vec()
            } else {
                vec![check]
            };
            for name in names {
                for r in verify::run(name, &params)? {
                    all_passed &= r.passed;
                    if cli.format == Some(Format::Json) {
                        writeln!(out, "{}", serde_json::to_string(&r)?)?;
                    } else {
                        writeln!(out, "{}", r.line())?;
                    }
                    out.flush()?;
                }
            }
            if !all_passed {
                return Ok(Outcome::Failed);
            }
        }
        Command::Experiment { a, n, candidate } => {
            let extra = candidate
                .iter()
                .map(|c| {
                    c.parse::<Substitution>()
                        .with_context(|| format!("candidate {c:?}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let record = experiment::run(*a, *n, &extra)?;
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        Command::Play { game, start, first } => {
            let start = parse_position(start)?;
            play::session(game.rules()?, start, *first, input, out)?;
        }
    }
    Ok(Outcome::Ok)
}

//! The `gammatroid` command line.
//!
//! Exit status: 0 on success, 1 when a law sweep (or `compose-check`)
//! fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gammatroid_core::catalog::{self, CatalogEntry};
use gammatroid_core::connectivity::connectivity_witness;
use gammatroid_core::extensions::compose_check;
use gammatroid_core::laws::{self, LawReport, Summary, SweepBounds, Verdict};
use gammatroid_core::matroid::direct_sum_labels;
use gammatroid_core::{
    gamma_extension, splitting, BinaryMatroid, ElementSet, Gf2Matrix, Label, LawId, Mode,
};
use serde_json::{json, Value};

use crate::matrix_file::MatrixFile;
use crate::report;

#[derive(Debug, Parser)]
#[command(
    name = "gammatroid",
    version,
    about = "Binary matroids, Γ-extensions and connectivity checks"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Matrix file; `-` or absent reads standard input.
    pub file: Option<PathBuf>,
    /// Use a named fixture instead of a file (see `catalog`).
    #[arg(long, conflicts_with = "file")]
    pub named: Option<String>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the matrix file here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Paper,
    Cumulative,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Cumulative => Mode::Cumulative,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank of the matroid, or of a subset with `--set`.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
    },
    /// All circuits, one per line.
    Circuits {
        #[command(flatten)]
        input: Input,
    },
    /// All cocircuits, one per line.
    Cocircuits {
        #[command(flatten)]
        input: Input,
    },
    /// Smallest circuit and cocircuit sizes.
    Girth {
        #[command(flatten)]
        input: Input,
    },
    /// Connected components, one per line.
    Components {
        #[command(flatten)]
        input: Input,
    },
    /// Decide k-connectedness and print the least witnessing separation.
    Connectivity {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
    },
    /// Write the Γ-extension matrix for an independent set X.
    GammaExt {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<String>,
        /// Labels for the new elements, one per element of X in label order.
        #[arg(long, value_delimiter = ',')]
        gamma: Option<Vec<String>>,
        #[command(flatten)]
        output: Output,
    },
    /// Write the splitting matrix: one extra row, 1 exactly on Y.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Write the block-diagonal direct sum of several matrix files.
    DirectSum {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Check that splitting the parallel extension by Γ gives the Γ-extension.
    ComposeCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<String>,
    },
    /// Run a law over a catalog pool and summarize.
    Verify {
        /// rank-identities (2.1), circuit-characterization (2.2), girth-bound (2.3),
        /// cocircuit-containment (2.4), deletion-rank (2.5), k-connected-extension (2.6),
        /// connecting-components (2.7), composition, extension-identity,
        /// never-5-connected or mode-agreement.
        #[arg(long)]
        law: String,
        /// Enumeration bounds `r,n`: fixtures with at most n elements plus
        /// every simple binary matroid of rank at most r on at most n elements.
        #[arg(long, value_parser = parse_bounds)]
        catalog: (usize, usize),
        /// Connectivity levels to check; defaults to 2, 3 and 4.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        /// Largest |X|; per-law default.
        #[arg(long)]
        max_x: Option<usize>,
        /// Print every report, not only the failures.
        #[arg(long)]
        all: bool,
    },
    /// List the named fixtures, or an enumerated pool with `--catalog r,n`.
    Catalog {
        #[arg(long, value_parser = parse_bounds)]
        catalog: Option<(usize, usize)>,
    },
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (r, n) = s.split_once(',').ok_or("expected r,n")?;
    let r = r.trim().parse().map_err(|_| format!("bad rank {r:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad size {n:?}"))?;
    Ok((r, n))
}

/// Resolves `--law`, accepting law names and numeric aliases.
pub fn law_by_name(s: &str) -> Option<LawId> {
    let alias = match s {
        "2.1" => Some(LawId::RankIdentities),
        "2.2" => Some(LawId::CircuitCharacterization),
        "2.3" => Some(LawId::GirthBound),
        "2.4" => Some(LawId::CocircuitContainment),
        "2.5" => Some(LawId::DeletionRank),
        "2.6" => Some(LawId::KConnectedExtension),
        "2.7" => Some(LawId::ConnectingComponents),
        _ => None,
    };
    alias.or_else(|| LawId::from_name(s))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Law(String),
}

impl From<gammatroid_core::Error> for Failure {
    fn from(e: gammatroid_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<crate::matrix_file::ParseError> for Failure {
    fn from(e: crate::matrix_file::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx<'a> {
    json: bool,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read_file(&mut self, path: Option<&PathBuf>) -> Result<MatrixFile, Failure> {
        let text = match path {
            Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        MatrixFile::parse(&text).map_err(|e| match path {
            Some(p) => Failure::Usage(format!("{}: {e}", p.display())),
            None => e.into(),
        })
    }

    fn load(&mut self, input: &Input) -> Result<(BinaryMatroid, Option<MatrixFile>), Failure> {
        if let Some(name) = &input.named {
            return Ok((catalog::named(name)?, None));
        }
        let file = self.read_file(input.file.as_ref())?;
        Ok((file.to_matroid()?, Some(file)))
    }

    fn emit(&mut self, text: &str, value: Value) -> Outcome {
        if self.json {
            writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(&value).expect("plain json")
            )?;
        } else {
            self.out.write_all(text.as_bytes())?;
        }
        Ok(())
    }

    fn emit_matrix(&mut self, file: &MatrixFile, output: &Output) -> Outcome {
        let text = file.render();
        let value = json!({
            "labels": file.labels.iter().map(Label::as_str).collect::<Vec<_>>(),
            "rows": (0..file.matrix.n_rows())
                .map(|i| (0..file.matrix.n_cols()).map(|j| u8::from(file.matrix.get(i, j))).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
        match &output.output {
            Some(p) => {
                fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                Ok(())
            }
            None => self.emit(&text, value),
        }
    }
}

fn set_of(items: &[String]) -> ElementSet {
    items.iter().map(|s| Label::from(s.as_str())).collect()
}

fn set_json(s: &ElementSet) -> Value {
    Value::Array(s.iter().map(|l| Value::from(l.as_str())).collect())
}

fn family(ctx: &mut Ctx<'_>, sets: &[ElementSet]) -> Outcome {
    let text: String = sets.iter().map(|s| format!("{s}\n")).collect();
    ctx.emit(&text, Value::Array(sets.iter().map(set_json).collect()))
}

fn opt_text(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

/// The A^X of the given matrix: X columns copied, plus a row that is 1 on
/// the copies only.
fn gamma_matrix(a: &Gf2Matrix, labels: &[Label], x: &[Label]) -> Gf2Matrix {
    let idx: Vec<usize> = x
        .iter()
        .map(|l| labels.iter().position(|m| m == l).expect("X checked"))
        .collect();
    let mut out = a.hconcat(&a.select_columns(&idx)).expect("same rows");
    let mut last = vec![false; a.n_cols()];
    last.resize(a.n_cols() + idx.len(), true);
    out.push_row(&last).expect("row length");
    out
}

fn execute(cli: Cli, ctx: &mut Ctx<'_>) -> Outcome {
    match cli.command {
        Command::Rank { input, set } => {
            let (m, _) = ctx.load(&input)?;
            let r = match &set {
                Some(s) => m.rank_of(&set_of(s))?,
                None => m.rank(),
            };
            ctx.emit(&format!("{r}\n"), json!({ "rank": r }))
        }
        Command::Circuits { input } => {
            let (m, _) = ctx.load(&input)?;
            family(ctx, &m.circuits()?)
        }
        Command::Cocircuits { input } => {
            let (m, _) = ctx.load(&input)?;
            family(ctx, &m.cocircuits()?)
        }
        Command::Girth { input } => {
            let (m, _) = ctx.load(&input)?;
            let (g, c) = (m.girth()?, m.cogirth()?);
            ctx.emit(
                &format!("girth: {}\ncogirth: {}\n", opt_text(g), opt_text(c)),
                json!({ "girth": g, "cogirth": c }),
            )
        }
        Command::Components { input } => {
            let (m, _) = ctx.load(&input)?;
            family(ctx, &m.components()?)
        }
        Command::Connectivity { input, k, mode } => {
            let (m, _) = ctx.load(&input)?;
            let mode = Mode::from(mode);
            let witness = connectivity_witness(&m, k, mode)?;
            let mut text = format!("{k}-connected: {}\n", witness.is_none());
            if let Some(w) = &witness {
                text.push_str(&format!("witness: {w}\n"));
            }
            let w = witness.as_ref().map(|w| {
                json!({ "order": w.order(), "side_a": set_json(w.side_a()), "side_b": set_json(w.side_b()) })
            });
            ctx.emit(
                &text,
                json!({ "k": k, "mode": mode.as_str(), "connected": witness.is_none(), "witness": w }),
            )
        }
        Command::GammaExt {
            input,
            x,
            gamma,
            output,
        } => {
            let (m, file) = ctx.load(&input)?;
            let names: Option<Vec<Label>> =
                gamma.map(|g| g.iter().map(|s| Label::from(s.as_str())).collect());
            let ext = gamma_extension(&m, &set_of(&x), names.as_deref())?;
            let out = match file {
                Some(f) => {
                    let matrix = gamma_matrix(&f.matrix, &f.labels, ext.x());
                    let mut labels = f.labels.clone();
                    labels.extend(ext.gamma().iter().cloned());
                    MatrixFile::new(matrix, Some(labels))
                }
                None => MatrixFile::new(ext.matrix().clone(), Some(ext.matrix_labels().to_vec())),
            };
            ctx.emit_matrix(&out, &output)
        }
        Command::Split { input, y, output } => {
            let (m, file) = ctx.load(&input)?;
            let split = splitting(&m, &set_of(&y))?;
            let out = match file {
                Some(f) => {
                    let mut matrix = f.matrix.clone();
                    let row: Vec<bool> = f
                        .labels
                        .iter()
                        .map(|l| y.iter().any(|s| s == l.as_str()))
                        .collect();
                    matrix.push_row(&row).expect("row length");
                    debug_assert!(BinaryMatroid::new_raw(&matrix, f.labels.clone())
                        .is_ok_and(|s| s.equals(&split)));
                    MatrixFile::new(matrix, Some(f.labels))
                }
                None => MatrixFile::from_matroid(&split),
            };
            ctx.emit_matrix(&out, &output)
        }
        Command::DirectSum { files, output } => {
            let mut parts = Vec::new();
            for p in &files {
                let f = ctx.read_file(Some(p))?;
                f.to_matroid()?;
                parts.push(f);
            }
            let label_parts: Vec<&[Label]> = parts.iter().map(|f| f.labels.as_slice()).collect();
            let labels = direct_sum_labels(&label_parts);
            let matrix = parts.iter().fold(Gf2Matrix::zeros(0, 0), |acc, f| {
                acc.block_diagonal(&f.matrix)
            });
            ctx.emit_matrix(&MatrixFile::new(matrix, Some(labels)), &output)
        }
        Command::ComposeCheck { input, x } => {
            let (m, _) = ctx.load(&input)?;
            let ok = compose_check(&m, &set_of(&x))?;
            let verdict = if ok { "pass" } else { "fail" };
            ctx.emit(
                &format!("compose-check: {verdict}\n"),
                json!({ "compose_check": verdict }),
            )?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Law("compose-check failed".into()))
            }
        }
        Command::Verify {
            law,
            catalog: (r, n),
            k,
            max_x,
            all,
        } => {
            let id =
                law_by_name(&law).ok_or_else(|| Failure::Usage(format!("unknown law {law:?}")))?;
            let ks = k.unwrap_or_else(|| vec![2, 3, 4]);
            if ks.iter().any(|&k| k < 2) {
                return Err(Failure::Usage("k must be at least 2".into()));
            }
            let reports = sweep(id, r, n, &ks, max_x)?;
            let summary = Summary::of(&reports);
            let shown: Vec<LawReport> = reports
                .into_iter()
                .filter(|r| all || r.verdict() == Verdict::Fail)
                .collect();
            let mut text = report::lines(&shown);
            text.push_str(&report::summary_line(id, &summary));
            text.push('\n');
            ctx.emit(
                &text,
                json!({ "summary": report::summary_record(id, &summary), "reports": report::records(&shown) }),
            )?;
            if summary.fail > 0 {
                Err(Failure::Law(format!("{} failing instances", summary.fail)))
            } else {
                Ok(())
            }
        }
        Command::Catalog { catalog: bounds } => {
            let entries = match bounds {
                Some((r, n)) => catalog::pool(r, n)?,
                None => catalog::NAMES
                    .iter()
                    .map(|name| catalog::named(name).map(|m| CatalogEntry::new(*name, m)))
                    .collect::<Result<_, _>>()?,
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in &entries {
                let tags = e.tags();
                let m = e.matroid();
                text.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    e.name(),
                    m.rank(),
                    m.len(),
                    tags.join(",")
                ));
                rows.push(
                    json!({ "name": e.name(), "rank": m.rank(), "size": m.len(), "tags": tags }),
                );
            }
            ctx.emit(&text, Value::Array(rows))
        }
    }
}

/// The reports of one law over the pool `catalog::pool(r, n)`.
pub fn sweep(
    law: LawId,
    r: usize,
    n: usize,
    ks: &[usize],
    max_x: Option<usize>,
) -> gammatroid_core::Result<Vec<LawReport>> {
    let pool = catalog::pool(r, n)?;
    let bounds = |max_x: usize, connected_only: bool| SweepBounds {
        max_n: n,
        max_extended: 64,
        min_x: 1,
        max_x,
        connected_only,
    };
    match law {
        LawId::RankIdentities
        | LawId::CircuitCharacterization
        | LawId::Composition
        | LawId::ExtensionIdentity => {
            laws::sweep_extension_law(&pool, law, bounds(max_x.unwrap_or(3), true))
        }
        LawId::NeverFiveConnected => laws::sweep_extension_law(
            &pool,
            law,
            SweepBounds {
                min_x: 2,
                ..bounds(max_x.unwrap_or(3), true)
            },
        ),
        LawId::ConnectingComponents => {
            let parts: Vec<CatalogEntry> = pool.into_iter().filter(|e| e.is_connected()).collect();
            let sums = catalog::direct_sums(&parts, 3, n);
            laws::sweep_extension_law(&sums, law, bounds(max_x.unwrap_or(4), false))
        }
        LawId::KConnectedExtension => laws::sweep_k_connected_extension(&pool, ks, n),
        LawId::GirthBound
        | LawId::CocircuitContainment
        | LawId::DeletionRank
        | LawId::ModeAgreement => laws::sweep_matroid_law(&pool, law, n, ks),
    }
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        stdin,
        out,
    };
    match execute(cli, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Law(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("gammatroid").chain(args.iter().copied()),
            &mut input,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn law_aliases() {
        assert_eq!(law_by_name("2.2"), Some(LawId::CircuitCharacterization));
        assert_eq!(law_by_name("composition"), Some(LawId::Composition));
        assert_eq!(law_by_name("2.9"), None);
    }

    #[test]
    fn bounds_parse() {
        assert_eq!(parse_bounds("3,7"), Ok((3, 7)));
        assert!(parse_bounds("3").is_err());
    }

    #[test]
    fn rank_of_named_fixture() {
        assert_eq!(
            run_str(&["rank", "--named", "fano"], ""),
            (0, "3\n".into(), String::new())
        );
        let (code, out, _) = run_str(&["rank", "--named", "fano", "--set", "1,2,6"], "");
        assert_eq!((code, out.as_str()), (0, "2\n"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["rank", "--named", "nope"], "").0, 2);
        assert_eq!(run_str(&["frobnicate"], "").0, 2);
        assert_eq!(run_str(&["rank"], "2 2\n1 2\n0 1\n").0, 2);
        assert_eq!(
            run_str(&["verify", "--law", "9.9", "--catalog", "2,3"], "").0,
            2
        );
    }

    #[test]
    fn stdin_input() {
        let (code, out, _) = run_str(&["circuits"], "2 3\n1 0 1\n0 1 1\n");
        assert_eq!((code, out.as_str()), (0, "{1,2,3}\n"));
    }
}

//! The `omega-dc` command line. [`run`] takes the arguments and output
//! streams explicitly so it can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::automaton::{AcceptanceKind, OmegaAutomaton};
use crate::error::{Error, Result};
use crate::hardness::{build_reduction, extract_coloring, Graph};
use crate::io::{
    export_hoa, format_upword, parse_automaton, parse_graph, parse_upword, print_native, split_upword_list,
    NativeOptions,
};
use crate::langops::{d_equivalent, has_trivial_rc};
use crate::learner::{learn, LearnerOptions, ScriptedTeacher, SimulatedTeacher};
use crate::priority::{minimize_to_irc, minimize_wdba, optimize_priorities};

pub const EXIT_OK: i32 = 0;
/// Negative answer of a yes/no command.
pub const EXIT_NO: i32 = 1;
/// `minimize`: the language is not in the requested class.
pub const EXIT_NOT_IN_CLASS: i32 = 2;
pub const EXIT_MALFORMED: i32 = 64;
pub const EXIT_PRECONDITION: i32 = 65;
pub const EXIT_RESOURCE: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "omega-dc", version, about = "Deterministic ω-automata modulo don't-care words")]
struct Cli {
    /// Complete missing transitions of input automata with self-loops.
    #[arg(long, global = true)]
    complete_with_selfloop: bool,
    /// Output format for written automata.
    #[arg(long, global = true, value_enum, default_value_t = Format::Native)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Native,
    Hoa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Parity,
    Buchi,
    Cobuchi,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether two automata agree outside the don't-care set.
    CheckEquiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        dontcare: Option<PathBuf>,
    },
    /// Replace the priorities by an optimal map on the same transition system.
    OptimizePriorities {
        a: PathBuf,
        #[arg(long)]
        dontcare: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the automaton on the don't-care congruence quotient.
    Minimize {
        a: PathBuf,
        #[arg(long)]
        dontcare: Option<PathBuf>,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the don't-care-minimal weak Büchi automaton.
    MinimizeWdba {
        w: PathBuf,
        #[arg(long)]
        dontcare: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Learn a weak Büchi automaton from a simulated teacher.
    Learn {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        dontcare: Option<PathBuf>,
        /// Counterexamples to give first, e.g. "(a)","(ab)".
        #[arg(long)]
        script: Option<String>,
        /// Print every closed observation table.
        #[arg(long)]
        trace: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the colouring instance A_G and its don't-care automaton D_G.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// Write <prefix>A.aut and <prefix>D.aut instead of printing.
        #[arg(long, short = 'p')]
        out_prefix: Option<String>,
    },
    /// Read a vertex colouring off a small automaton for A_G's language.
    ExtractColoring {
        c: PathBuf,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decide whether an automaton's language has one right-congruence class.
    CheckTrivialRc { d: PathBuf },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::Unsupported(_) => EXIT_MALFORMED,
        Error::Precondition(_) | Error::TeacherInconsistency(_) => EXIT_PRECONDITION,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    native: NativeOptions,
    format: Format,
}

impl Ctx<'_> {
    fn read_text(&self, path: &Path) -> Result<String> {
        fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
    }

    fn automaton(&self, path: &Path) -> Result<OmegaAutomaton> {
        let text = self.read_text(path)?;
        parse_automaton(&text, self.native).map_err(|e| match e {
            Error::Parse { line, message } => Error::Parse {
                line,
                message: format!("{}: {message}", path.display()),
            },
            other => other,
        })
    }

    fn dontcare(&self, path: &Option<PathBuf>, a: &OmegaAutomaton) -> Result<Option<OmegaAutomaton>> {
        let Some(p) = path else { return Ok(None) };
        let d = self.automaton(p)?;
        if d.alphabet() != a.alphabet() {
            return Err(Error::InvalidArgument(format!(
                "{} uses alphabet {} but the automaton uses {}",
                p.display(),
                d.alphabet(),
                a.alphabet()
            )));
        }
        Ok(Some(d))
    }

    fn render(&self, a: &OmegaAutomaton) -> String {
        match self.format {
            Format::Native => print_native(a),
            Format::Hoa => export_hoa(a),
        }
    }

    /// Writes `a` to `path`, or to stdout when no path is given.
    fn emit(&mut self, a: &OmegaAutomaton, path: &Option<PathBuf>) -> Result<()> {
        let text = self.render(a);
        match path {
            Some(p) => fs::write(p, text)
                .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", p.display()))),
            None => self.print(&text),
        }
    }

    fn print(&mut self, text: &str) -> Result<()> {
        match self.out.write_all(text.as_bytes()) {
            // a closed pipe (e.g. `| head`) is not an error of ours
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r.map_err(|e| Error::Internal(format!("cannot write output: {e}"))),
        }
    }

    fn line(&mut self, text: &str) -> Result<()> {
        self.print(&format!("{text}\n"))
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx {
        out,
        err,
        native: NativeOptions {
            complete_with_selfloop: cli.complete_with_selfloop,
        },
        format: cli.format,
    };
    match execute(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "omega-dc: {e}");
            exit_code(&e)
        }
    }
}

fn execute(ctx: &mut Ctx<'_>, command: Command) -> Result<i32> {
    match command {
        Command::CheckEquiv { a, b, dontcare } => {
            let a = ctx.automaton(&a)?;
            let b = ctx.automaton(&b)?;
            let d = ctx.dontcare(&dontcare, &a)?;
            match d_equivalent(&a, &b, d.as_ref())? {
                None => {
                    ctx.line("equivalent")?;
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    ctx.line(&format!("counterexample: {}", format_upword(&w, a.alphabet())))?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::OptimizePriorities { a, dontcare, output } => {
            let a = ctx.automaton(&a)?;
            let d = ctx.dontcare(&dontcare, &a)?;
            let opt = optimize_priorities(&a, d.as_ref())?;
            ctx.line(&format!(
                "priorities: {} -> {}",
                a.distinct_priorities(),
                opt.distinct_priorities()
            ))?;
            ctx.emit(&opt, &output)?;
            Ok(EXIT_OK)
        }
        Command::Minimize {
            a,
            dontcare,
            target,
            output,
        } => {
            let a = ctx.automaton(&a)?;
            let d = ctx.dontcare(&dontcare, &a)?;
            let kind = match target {
                Target::Parity => AcceptanceKind::Parity,
                Target::Buchi => AcceptanceKind::Buchi,
                Target::Cobuchi => AcceptanceKind::CoBuchi,
            };
            match minimize_to_irc(&a, d.as_ref(), kind)? {
                None => {
                    ctx.line("not in class")?;
                    Ok(EXIT_NOT_IN_CLASS)
                }
                Some(m) => {
                    ctx.line(&format!("states: {} -> {}", a.size(), m.size()))?;
                    ctx.emit(&m, &output)?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::MinimizeWdba { w, dontcare, output } => {
            let w = ctx.automaton(&w)?;
            let d = ctx.dontcare(&dontcare, &w)?;
            let m = minimize_wdba(&w, d.as_ref())?;
            ctx.line(&format!("states: {} -> {}", w.size(), m.size()))?;
            ctx.emit(&m, &output)?;
            Ok(EXIT_OK)
        }
        Command::Learn {
            target,
            dontcare,
            script,
            trace,
            output,
        } => {
            let u = ctx.automaton(&target)?;
            let d = ctx.dontcare(&dontcare, &u)?;
            let alphabet = u.alphabet().clone();
            let forced = match &script {
                Some(s) => split_upword_list(s)
                    .into_iter()
                    .map(|w| parse_upword(w, &alphabet))
                    .collect::<Result<Vec<_>>>()?,
                None => Vec::new(),
            };
            let inner = SimulatedTeacher::new(u, d)?;
            let mut teacher = ScriptedTeacher::new(inner, forced);
            let run = learn(&mut teacher, &alphabet, LearnerOptions::default())?;
            if trace {
                ctx.print(&run.trace(&alphabet))?;
            }
            for w in teacher.rejected() {
                let _ = writeln!(
                    ctx.err,
                    "omega-dc: scripted counterexample {} is not genuine, ignored",
                    format_upword(w, &alphabet)
                );
            }
            let stats = teacher.inner().stats();
            ctx.line(&format!(
                "learned: {} states ({} membership, {} equivalence queries)",
                run.hypothesis().size(),
                stats.member,
                stats.equiv
            ))?;
            ctx.emit(run.hypothesis(), &output)?;
            Ok(EXIT_OK)
        }
        Command::Reduce { graph, out_prefix } => {
            let g = read_graph(ctx, &graph)?;
            let (a, d) = build_reduction(&g)?;
            match out_prefix {
                Some(p) => {
                    ctx.emit(&a, &Some(PathBuf::from(format!("{p}A.aut"))))?;
                    ctx.emit(&d, &Some(PathBuf::from(format!("{p}D.aut"))))?;
                    ctx.line(&format!("A_G: {} states, D_G: {} states", a.size(), d.size()))?;
                }
                None => {
                    ctx.line("# A_G")?;
                    ctx.emit(&a, &None)?;
                    ctx.line("# D_G")?;
                    ctx.emit(&d, &None)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ExtractColoring { c, graph } => {
            let c = ctx.automaton(&c)?;
            let g = read_graph(ctx, &graph)?;
            match extract_coloring(&c, &g)? {
                Some(col) => {
                    for (v, name) in g.vertices().iter().enumerate() {
                        ctx.line(&format!("{name}={}", col.color(v)))?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.line("no coloring: some vertex word visits no even state infinitely often")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::CheckTrivialRc { d } => {
            let d = ctx.automaton(&d)?;
            if has_trivial_rc(&d)? {
                ctx.line("yes")?;
                Ok(EXIT_OK)
            } else {
                ctx.line("no")?;
                Ok(EXIT_NO)
            }
        }
    }
}

fn read_graph(ctx: &Ctx<'_>, path: &Path) -> Result<Graph> {
    parse_graph(&ctx.read_text(path)?)
}

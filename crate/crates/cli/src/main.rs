use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pomkit::report::{render, Format};

mod commands;
mod load;

use commands::Output;

/// Finite preordered monoids: cones, normality, free and quotient
/// constructions, Schreier extensions and preordered actions.
///
/// FILE is a path, `-` for standard input, or the name of a bundled example
/// (see `pomkit examples list`).
#[derive(Parser)]
#[command(name = "pomkit", version)]
struct Cli {
    /// Machine-readable output (YAML subset, byte-stable).
    #[arg(long, global = true)]
    machine: bool,
    /// Deterministic everything. Every command is already deterministic; the
    /// flag is accepted so scripts can state it.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Object {
    file: String,
    /// Block name; may be omitted when the file has a single candidate.
    #[arg(long)]
    object: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Side {
    Right,
    Left,
}

#[derive(Subcommand)]
enum Command {
    /// Load a file and check every block, including action axioms and
    /// extension invariants.
    Validate { file: String },
    /// Classify a preordered monoid.
    Classify(Object),
    /// Positive cone and the preorders it induces.
    Cone(Object),
    /// Left and right cosets of a submonoid (default: the whole monoid).
    Cosets {
        #[command(flatten)]
        obj: Object,
        /// Comma-separated elements.
        #[arg(long)]
        submonoid: Option<String>,
    },
    /// Preorder induced by a submonoid (default: the positive cone).
    Induced {
        #[command(flatten)]
        obj: Object,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        submonoid: Option<String>,
    },
    /// Right, left and two-sided normality of a submonoid.
    Normality {
        #[command(flatten)]
        obj: Object,
        #[arg(long)]
        submonoid: String,
    },
    /// Replace the preorder by the one induced by the cone.
    Coreflect(Object),
    /// Free preordered monoid on a preordered set, up to a word length.
    Free {
        #[command(flatten)]
        obj: Object,
        #[arg(long)]
        depth: usize,
        /// Preordered monoid to extend a map into.
        #[arg(long, requires = "map")]
        target: Option<String>,
        /// Images of the generators, comma-separated.
        #[arg(long, requires = "target")]
        map: Option<String>,
    },
    /// Coequalizer of two parallel monotone homomorphisms.
    Coeq {
        file: String,
        #[arg(long = "f")]
        f: String,
        #[arg(long = "g")]
        g: String,
    },
    /// Split extensions and preordered actions.
    Schreier {
        #[command(subcommand)]
        cmd: SchreierCmd,
    },
    /// Checks on infinite examples over a finite window.
    Demo {
        #[command(subcommand)]
        cmd: DemoCmd,
    },
    /// Exhaustive enumeration of small structures.
    Enumerate {
        #[command(subcommand)]
        cmd: EnumerateCmd,
    },
    /// Bundled example files.
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
}

#[derive(Subcommand)]
enum SchreierCmd {
    /// Schreier retraction, S1/S2 and their consequences.
    Check(Object),
    /// Preordered action of an extension with cones.
    Extract {
        #[command(flatten)]
        obj: Object,
        /// Write the result as a document (`-` for standard output).
        #[arg(long)]
        emit: Option<String>,
    },
    /// Semidirect product extension of a preordered action.
    Build {
        #[command(flatten)]
        obj: Object,
        #[arg(long)]
        emit: Option<String>,
    },
    /// Both round trips starting from an action or an extension with cones.
    Roundtrip(Object),
}

#[derive(Subcommand)]
enum DemoCmd {
    /// Integer extension with cone N x N.
    Zz {
        #[arg(long, default_value_t = 10)]
        window: u32,
    },
}

#[derive(Subcommand)]
enum EnumerateCmd {
    /// Monoid tables on {0..n-1} with identity 0.
    Monoids {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count: bool,
    },
    /// All preorders of a size, or the compatible preorders of a monoid.
    Preorders {
        file: Option<String>,
        #[arg(long)]
        object: Option<String>,
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        size: Option<usize>,
        #[arg(long)]
        count: bool,
    },
    /// Submonoids, optionally only the normal ones.
    Submonoids {
        #[command(flatten)]
        obj: Object,
        /// none, right_normal, left_normal or normal.
        #[arg(long, default_value = "none")]
        filter: String,
        #[arg(long)]
        count: bool,
    },
    /// Homomorphisms between two monoids.
    Homs {
        file: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        count: bool,
    },
    /// Preordered actions of B on X for given cones (default: trivial).
    Actions {
        file: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        px: Option<String>,
        #[arg(long)]
        pb: Option<String>,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    List,
    Show { name: String },
}

fn run(cli: Cli) -> Result<Output, load::CliError> {
    use commands as c;
    match cli.command {
        Command::Validate { file } => c::validate(&file),
        Command::Classify(o) => c::classify(&o.file, o.object.as_deref()),
        Command::Cone(o) => c::cone(&o.file, o.object.as_deref()),
        Command::Cosets { obj, submonoid } => c::cosets(&obj.file, obj.object.as_deref(), submonoid.as_deref()),
        Command::Induced { obj, side, submonoid } => {
            c::induced(&obj.file, obj.object.as_deref(), side, submonoid.as_deref())
        }
        Command::Normality { obj, submonoid } => c::normality(&obj.file, obj.object.as_deref(), &submonoid),
        Command::Coreflect(o) => c::coreflect(&o.file, o.object.as_deref()),
        Command::Free { obj, depth, target, map } => {
            c::free(&obj.file, obj.object.as_deref(), depth, target.as_deref().zip(map.as_deref()))
        }
        Command::Coeq { file, f, g } => c::coeq(&file, &f, &g),
        Command::Schreier { cmd } => match cmd {
            SchreierCmd::Check(o) => c::schreier_check(&o.file, o.object.as_deref()),
            SchreierCmd::Extract { obj, emit } => c::schreier_extract(&obj.file, obj.object.as_deref(), emit.as_deref()),
            SchreierCmd::Build { obj, emit } => c::schreier_build(&obj.file, obj.object.as_deref(), emit.as_deref()),
            SchreierCmd::Roundtrip(o) => c::schreier_roundtrip(&o.file, o.object.as_deref()),
        },
        Command::Demo { cmd: DemoCmd::Zz { window } } => Ok(c::demo_zz(window)),
        Command::Enumerate { cmd } => match cmd {
            EnumerateCmd::Monoids { size, count } => c::enum_monoids(size, count),
            EnumerateCmd::Preorders { file, object, size, count } => {
                c::enum_preorders(file.as_deref(), object.as_deref(), size, count)
            }
            EnumerateCmd::Submonoids { obj, filter, count } => {
                c::enum_submonoids(&obj.file, obj.object.as_deref(), &filter, count)
            }
            EnumerateCmd::Homs { file, from, to, count } => c::enum_homs(&file, &from, &to, count),
            EnumerateCmd::Actions { file, x, b, px, pb, count } => {
                c::enum_actions(&file, &x, &b, px.as_deref(), pb.as_deref(), count)
            }
        },
        Command::Examples { cmd } => match cmd {
            ExamplesCmd::List => Ok(c::examples_list()),
            ExamplesCmd::Show { name } => c::examples_show(&name),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.machine { Format::Machine } else { Format::Human };
    let mut stdout = std::io::stdout().lock();
    let result = run(cli);
    let (text, ok) = match result {
        Ok(Output::Report(r, ok)) => (render(&r, format), ok),
        Ok(Output::Text(t)) => (t, true),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

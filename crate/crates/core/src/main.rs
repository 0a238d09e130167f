use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mackey_spectrum::render::{self, golden, Format, RenderRequest, Target};
use mackey_spectrum::{Error, PermGroup};

/// Spectra of derived Mackey functor categories for finite groups.
///
/// Groups are given by descriptors: `C<n>`, `D<n>` (dihedral of ORDER n),
/// `Dih(<n>)` (dihedral on n points), `Q8`, `S<n>`, `A<n>`, products like
/// `C2 x C4`, or explicit generators `perm:(0 1 2)(3 4),(0 1)`.
#[derive(Parser)]
#[command(name = "mackeyspec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The spectrum space: points and specialization topology
    Spec(ViewArgs),
    /// The Burnside-ring spectrum (the gluing quotient)
    Burnside(ViewArgs),
    /// The comparison map onto the Burnside spectrum, side by side
    Compare {
        #[command(flatten)]
        view: ViewArgs,
        /// annotate points with their chromatic heights
        #[arg(long)]
        shg: bool,
    },
    /// Count or list the admissible sets (thick tensor-ideals) of a p-local slice
    Ideals {
        #[command(flatten)]
        view: ViewArgs,
        /// print the count only (the default)
        #[arg(long)]
        count: bool,
        /// list every admissible set
        #[arg(long, conflicts_with = "count")]
        list: bool,
    },
    /// Subgroups and their conjugacy classes
    Subgroups(ViewArgs),
    /// Check a group against the embedded golden figures
    Golden {
        /// `C<p>`, D8, S3 or Q8
        descriptor: String,
        /// the prime to localize at
        prime: u64,
    },
}

#[derive(Args)]
struct ViewArgs {
    /// group descriptor, e.g. D8, S3, "C2 x C4"
    group: String,
    /// restrict the prime slots to {0, p}
    #[arg(long, value_name = "p")]
    local: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
    /// cap on the group order accepted from the descriptor
    #[arg(long, default_value_t = PermGroup::DEFAULT_ORDER_CAP)]
    cap: usize,
    /// plain DOT output without per-class colors
    #[arg(long)]
    no_color: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Dot,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        }
    }
}

fn request(target: Target, view: &ViewArgs) -> RenderRequest {
    RenderRequest {
        target,
        group: view.group.clone(),
        local_prime: view.local,
        format: view.format.into(),
        shg: false,
        list: false,
        cap: view.cap,
        color: !view.no_color,
    }
}

/// Exit codes: 0 success, 2 usage (clap), 3 descriptor parse error,
/// 4 order cap exceeded, 5 golden mismatch, 1 anything else.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Descriptor { .. } => 3,
        Error::CapExceeded { .. } => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spec(view) => render::run(&request(Target::Spectrum, view)),
        Command::Burnside(view) => render::run(&request(Target::Burnside, view)),
        Command::Compare { view, shg } => {
            let mut r = request(Target::Compare, view);
            r.shg = *shg;
            render::run(&r)
        }
        Command::Ideals {
            view,
            count: _,
            list,
        } => {
            let mut r = request(Target::Ideals, view);
            r.list = *list;
            render::run(&r)
        }
        Command::Subgroups(view) => render::run(&request(Target::Subgroups, view)),
        Command::Golden { descriptor, prime } => {
            return match golden::golden_check(descriptor, *prime) {
                Ok(report) => {
                    print!("{}", report.render());
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(5)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(error_code(&e))
                }
            };
        }
    };
    match result {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.document);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

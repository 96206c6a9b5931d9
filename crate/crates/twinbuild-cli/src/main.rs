//! `twinbuild`: command-line front end. Every command prints a JSON
//! envelope `{schema, command, params, result | error}` (or plain text with
//! `--format text`).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, 3 domain error.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const SCHEMA: &str = "twinbuild/1";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(twinbuild::error::Error),
}

impl From<twinbuild::error::Error> for CliError {
    fn from(e: twinbuild::error::Error) -> Self {
        match e {
            twinbuild::error::Error::Parse(m) => CliError::Usage(m),
            e => CliError::Domain(e),
        }
    }
}

impl CliError {
    fn code(&self) -> &'static str {
        use twinbuild::error::Error::*;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain(e) => match e {
                InvalidRank(_) => "invalid_rank",
                InvalidWeights(_) => "invalid_weights",
                NotSpherical => "not_spherical",
                Unsupported(_) => "unsupported",
                BadGenerator(_) => "bad_generator",
                DegenerateLattice => "degenerate_lattice",
                SideMismatch(_) => "side_mismatch",
                Rank(_) => "rank",
                Dimension(_) => "dimension",
                NotSpecial => "not_special",
                NonConstant => "non_constant",
                NotOpposite => "not_opposite",
                NotReduced => "not_reduced",
                DistanceMismatch(_) => "distance_mismatch",
                NotProjector => "not_projector",
                NotUnitary => "not_unitary",
                TrivialSubspace => "trivial_subspace",
                WeightMismatch(_) => "weight_mismatch",
                NotInImage(_) => "not_in_image",
                Parse(_) => "usage",
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Domain(e) => e.to_string(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

/// A successful run: JSON result, its text rendering, and whether a
/// verification failed.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    pub fn new(result: Value, text: impl Into<String>) -> Self {
        Outcome {
            result,
            text: text.into(),
            failed: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "twinbuild", version, about = "Exact computations in spherical and twin buildings of SL_n")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Words in Coxeter groups of type A and affine A.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Weyl distance of two chambers on one side.
    Delta(PairArgs),
    /// Codistance of chambers on opposite sides.
    Codelta(PairArgs),
    /// Whether chambers on opposite sides are opposite.
    Opposite(PairArgs),
    /// Gate of a chamber in the residue of a simplex (same side).
    Project(ProjectArgs),
    /// Projection of a chamber onto a residue on the other side.
    ProjectTwin(ProjectArgs),
    /// Schubert-cell coordinates.
    #[command(subcommand)]
    Coords(CoordsCmd),
    /// Poincaré series of Schubert varieties and loop groups.
    #[command(subcommand)]
    Poincare(PoincareCmd),
    /// Veronese representations.
    #[command(subcommand)]
    Veronese(VeroneseCmd),
    /// Seeded property suites; `all` runs every suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoxeterCmd {
    /// Lexicographically least reduced word.
    Reduce {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
    },
    Length {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
    },
    /// Whether `v ≤ w` in the Bruhat order.
    Bruhat {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Shortest representatives of `W_K/W_J` and their covering relations.
    Cosets {
        #[arg(long = "type")]
        ty: String,
        /// Labels `K`; all labels when omitted.
        #[arg(long)]
        within: Option<String>,
        #[arg(long)]
        quotient: String,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Rank; used for the standard chambers when a representative is omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Side of `C` (default plus for delta, minus otherwise).
    #[arg(long)]
    pub side: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
}

#[derive(Args, Debug)]
pub struct ProjectArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Side of the simplex.
    #[arg(long, default_value = "plus")]
    pub side: String,
    /// Representative of a chamber containing the simplex.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Vertex types of the simplex.
    #[arg(long)]
    pub types: String,
    /// The chamber to project.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum CoordsCmd {
    /// Coordinates of `E` in the Schubert cell of `δ(C₀, E)`.
    Encode {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        c0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        /// Reduced word for `δ(C₀, E)`; the lexicographic normal form by default.
        #[arg(long)]
        word: Option<String>,
    },
    /// Chamber with the given coordinates.
    Decode {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        c0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d0: Option<String>,
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PoincareCmd {
    /// Series of the Schubert variety of `wW_J`.
    Schubert {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "")]
        quotient: String,
        #[arg(long)]
        w: String,
        /// Truncation degree.
        #[arg(long)]
        deg: Option<usize>,
    },
    /// Series of the affine Grassmannian of `SL_n` through degree `deg`.
    Loop {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: usize,
    },
    /// Compare the series of `Gr_k(C^2k)` and `V_k` through degree `deg`.
    BottCheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        deg: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VeroneseCmd {
    /// `Σ p_k Π_k^tls` of a weighted flag.
    Spherical {
        /// Subspaces separated by `|`, basis vectors by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        flag: String,
        /// Positive weights summing to 1; equal weights by default.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Flag and weights from a point in the image.
    Recover {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// `Σ p_k (gΠ_k g^#)^tls` for a unitary loop `g`.
    Affine {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Single vertex type.
        #[arg(long, conflicts_with = "weights")]
        k: Option<usize>,
        /// `type:weight` pairs.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Search for truncated eigenvectors of `diag(a, …, a, (1-n)a)`,
    /// `a = z + 1/z`.
    Caveat {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (name, params) = commands::describe(&cli.command);
    let outcome = commands::run(&cli.command);
    let mut env = json!({ "schema": SCHEMA, "command": name, "params": params });
    let code = match &outcome {
        Ok(o) => {
            env["result"] = o.result.clone();
            if o.failed {
                env["error"] = json!({ "code": "verification_failed", "message": "some cases failed" });
                1
            } else {
                0
            }
        }
        Err(e) => {
            env["error"] = json!({ "code": e.code(), "message": e.message() });
            e.exit_code()
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&env).expect("serializable")),
        Format::Text => match &outcome {
            Ok(o) => println!("{}", o.text),
            Err(e) => eprintln!("error [{}]: {}", e.code(), e.message()),
        },
    }
    ExitCode::from(code)
}

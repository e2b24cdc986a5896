use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "blockgap", version, about = "Certified spectral gaps for Hermitian block matrices")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Relative rank threshold (default: n·2⁻⁵² for order n).
    #[arg(long = "tol-rank", global = true, allow_negative_numbers = true)]
    pub tol_rank: Option<f64>,
    /// Relative threshold for accepting a matrix as positive semidefinite.
    #[arg(long = "tol-psd", global = true, default_value_t = 1e-10, allow_negative_numbers = true)]
    pub tol_psd: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gap certificates for a block matrix read from a file.
    Bounds(BoundsArgs),
    /// Pencil spectrum and enclosing intervals of a Stokes matrix.
    Stokes(StokesArgs),
    /// The tight-binding model and its boundary modification.
    Model {
        #[command(subcommand)]
        command: ModelCommand,
    },
    /// Counterexamples and non-monotone gap curves.
    Counterexamples(CounterexampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Diag,
    Stretch,
    Hbinv,
    ZeroDichotomy,
    Kirsch,
    Winklmeier,
    All,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// File with sections `A`, `B` and `C`.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct StokesArgs {
    /// File with sections `A`, `B` and `C`, where `C` is `zero k`.
    pub input: PathBuf,
    /// Relative perturbation size for eigenvalue enclosures.
    #[arg(long)]
    pub eta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    #[arg(short = 'm')]
    pub m: usize,
    #[arg(short = 'c')]
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    H,
    Htilde,
    K,
    W,
}

#[derive(Debug, Subcommand)]
pub enum ModelCommand {
    /// Roots of the secular equation and the eigenvalues they give.
    Secular(SizeArgs),
    /// The smallest eigenvalue for 0 < c < 1 by three routes.
    Spurious(SizeArgs),
    /// Eigenvalue counts inside (-2|c-1|, 2|c-1|).
    StableGap {
        #[arg(short = 'm', value_delimiter = ',', default_value = "10,25,50,100")]
        m: Vec<usize>,
        #[arg(short = 'c')]
        c: f64,
    },
    /// Spectrum of the boundary-modified matrix against its closed form.
    Modified(SizeArgs),
    /// Sorted spectrum of one model matrix.
    Spectrum {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_enum, default_value = "h")]
        matrix: MatrixArg,
    },
    /// Spectra with disorder U[M - δ, M + δ] for a list of means.
    Scan {
        #[arg(long = "M", value_delimiter = ',', required = true)]
        means: Vec<f64>,
        #[arg(long)]
        delta: f64,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One disorder draw: central pair and modified spectrum.
    Disorder {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
        lo: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        hi: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        count: usize,
    },
    /// Checks the model invariants for every (m, c) combination.
    Verify {
        #[arg(short = 'm', value_delimiter = ',', default_value = "10,25,50,100")]
        m: Vec<usize>,
        #[arg(short = 'c', value_delimiter = ',', default_value = "0,0.25,0.5,1,1.5,2")]
        c: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    KirschBt,
    ScaledA,
    Simple,
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    /// Grid `lo:hi:steps` for the gap curves, endpoints included.
    #[arg(long = "t-range", default_value = "5:20:151")]
    pub t_range: String,
    /// Restrict the curves to one family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
}

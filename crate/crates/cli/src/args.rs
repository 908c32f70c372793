use clap::{Args, Parser, Subcommand, ValueEnum};

use spingeo::selftest::DEFAULT_SEED;

#[derive(Parser, Debug)]
#[command(name = "spingeo", version, about = "Clifford algebras, spinors, characteristic classes and index checks")]
#[command(args_override_self = true)]
pub struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Tolerance override for floating-point checks; may only tighten the
    /// default unless `--allow-loose` is given.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true)]
    pub allow_loose: bool,

    /// Worker threads; defaults to $SPINGEO_THREADS, then to the core count.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            self.format
        }
    }

    /// The effective tolerance for a check whose module default is `default`.
    pub fn tolerance(&self, default: f64) -> anyhow::Result<f64> {
        match self.tol {
            None => Ok(default),
            Some(t) if !(t >= 0.0) || !t.is_finite() => anyhow::bail!("tolerance must be a finite non-negative number"),
            Some(t) if t > default && !self.allow_loose => {
                anyhow::bail!("--tol {t:e} is looser than the default {default:e}; pass --allow-loose to accept it")
            }
            Some(t) => Ok(t),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Isomorphism type of Cl_{p,q} or of the complex algebra Cl_n ⊗ C.
    Classify(ClassifyArgs),
    /// Checks on the complex spinor representation in dimension n.
    Spinrep(SpinrepArgs),
    /// Characteristic numbers of a curvature model.
    Genus(GenusArgs),
    /// Čech cohomology, Stiefel-Whitney classes and spin structures on a nerve.
    Cech(CechArgs),
    /// McKean-Singer supertrace curves on spectral models.
    Index(IndexArgs),
    /// Runs the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    pub p: Option<usize>,
    pub q: Option<usize>,

    /// Classify Cl_n ⊗ C instead.
    #[arg(long, conflicts_with_all = ["p", "q", "table"])]
    pub complex: Option<usize>,

    /// Print Cl_{n,0} and Cl_{0,n} for n = 1..=N.
    #[arg(long, conflicts_with_all = ["p", "q"])]
    pub table: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpinCheck {
    Relations,
    Chirality,
    Berezin,
}

#[derive(Args, Debug)]
pub struct SpinrepArgs {
    /// Even dimension n.
    pub n: usize,

    #[arg(long, value_enum, default_value_t = SpinCheck::Relations)]
    pub check: SpinCheck,

    /// Random antisymmetric matrices sampled by the Berezin check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct GenusArgs {
    /// chern, todd, ch, pontryagin, l, ahat or euler.
    #[arg(long)]
    pub name: String,

    /// Built-in model: sphere2, sphere4, torus2, or products such as sphere2xsphere2.
    #[arg(long, required_unless_present = "model_file", conflicts_with = "model_file")]
    pub model: Option<String>,

    /// Radius of the round spheres, as an integer, fraction or decimal.
    #[arg(long, default_value = "1")]
    pub radius: String,

    /// Curvature model in JSON.
    #[arg(long)]
    pub model_file: Option<std::path::PathBuf>,

    /// Expected characteristic number; a mismatch fails the run.
    #[arg(long, allow_hyphen_values = true)]
    pub expect: Option<String>,
}

#[derive(Args, Debug)]
pub struct CechArgs {
    /// Nerve JSON file or built-in name (circle, sphere, torus).
    #[arg(long)]
    pub nerve: String,

    /// Determinant signs on pair overlaps, for w1.
    #[arg(long)]
    pub signs: Option<std::path::PathBuf>,

    /// Spin lifts of the transition functions, for w2; `torus-anticommuting`
    /// selects the built-in non-spin example on the torus nerve.
    #[arg(long)]
    pub w2: Option<String>,

    /// Rank of the trivial lifts used when `--w2` is absent.
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    /// sphere2, torus2, torus_dirac or dlambda.
    #[arg(long)]
    pub model: String,

    /// Comma-separated heat times.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.5,1,2")]
    pub t: Vec<f64>,

    /// Spectral cutoff (l_max for sphere2, mode bound otherwise).
    #[arg(long, alias = "cutoff", default_value_t = 40)]
    pub lmax: usize,

    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lambda: f64,

    /// Flat connection parameters `a,b` for torus_dirac.
    #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.0], allow_hyphen_values = true)]
    pub delta: Vec<f64>,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Run a single criterion.
    #[arg(long)]
    pub only: Option<u8>,

    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fgest", version, about = "Smoothed multiparameter persistence estimators")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Prime characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2, value_parser = parse_prime)]
    pub field: u32,
    /// Deaths above this value are cut before distances are computed.
    #[arg(long = "truncate", global = true, default_value_t = 10.0)]
    pub truncation: f64,
    /// Seed for every random choice.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Round all grades to multiples of this step.
    #[arg(long, global = true)]
    pub snap: Option<f64>,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output file (stdout if absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record wall-clock times in experiment reports.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CloudInput {
    /// Point-cloud CSV with columns x1..xd (optional) and f1..fn.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Square distance matrix replacing the Euclidean metric.
    #[arg(long)]
    pub dist: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a multifiltration and write its simplex dump.
    Filtration {
        #[command(subcommand)]
        action: FiltrationCmd,
    },
    /// Compute a presentation and write it in PRES v1 format.
    Present {
        #[command(subcommand)]
        kind: PresentCmd,
    },
    /// Bigraded Betti numbers of a presentation.
    Betti {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Hilbert function of a presentation at the given grades.
    Hilbert {
        #[arg(long = "in")]
        input: PathBuf,
        /// A query grade, comma separated; repeatable.
        #[arg(long = "grade", value_parser = parse_floats, allow_hyphen_values = true)]
        grades: Vec<Floats>,
        /// A `lo:hi:n` axis; give one per coordinate for a product grid.
        #[arg(long = "grid", value_parser = parse_axis, allow_hyphen_values = true)]
        grid: Vec<Floats>,
    },
    /// Barcode of a presentation along a vertical slice or a line.
    Slice {
        #[arg(long = "in")]
        input: PathBuf,
        /// Scale of the vertical slice (two-parameter presentations).
        #[arg(long, conflicts_with_all = ["base", "dir"])]
        delta: Option<f64>,
        #[arg(long, value_parser = parse_floats, requires = "dir", allow_hyphen_values = true)]
        base: Option<Floats>,
        #[arg(long, value_parser = parse_floats, requires = "base", allow_hyphen_values = true)]
        dir: Option<Floats>,
    },
    /// Bottleneck distance between two barcode CSV files.
    Bottleneck { a: PathBuf, b: PathBuf },
    /// Monte Carlo matching distance between two presentations.
    Matching {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 1000)]
        lines: usize,
    },
    /// Data-driven scale selection.
    SelectDelta(SelectDelta),
    /// Run one of the built-in experiments.
    Experiment(Experiment),
}

#[derive(Subcommand, Debug)]
pub enum FiltrationCmd {
    Build {
        #[command(flatten)]
        cloud: CloudInput,
        #[arg(long, value_enum, default_value_t = FiltrationKind::Rips)]
        kind: FiltrationKind,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        /// Drop simplices with a larger scale grade.
        #[arg(long)]
        max_scale: Option<f64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationKind {
    Rips,
    Cech,
}

#[derive(Args, Debug)]
pub struct PresentArgs {
    #[arg(long, default_value_t = 0)]
    pub degree: usize,
    /// Point cloud to build the function-Rips complex from.
    #[arg(long = "in", required_unless_present = "complex", conflicts_with = "complex")]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "input")]
    pub dist: Option<PathBuf>,
    /// A simplex dump written by `filtration build`.
    #[arg(long)]
    pub complex: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum PresentCmd {
    /// Presentation of the homology of the complex.
    Homology(PresentArgs),
    /// Presentation of the smoothed estimator, indexed by the smaller scale.
    Smoothed(PresentArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectMethod {
    DeltaK,
    DeltaHat,
    DeltaPrime,
}

#[derive(Args, Debug)]
pub struct SelectDelta {
    #[command(flatten)]
    pub cloud: CloudInput,
    #[arg(long, value_enum)]
    pub method: SelectMethod,
    #[arg(long, default_value_t = 0)]
    pub degree: usize,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// Scale grid `lo:hi:n` of the dimension curve.
    #[arg(long, value_parser = parse_axis, default_value = "0.01:1:100", allow_hyphen_values = true)]
    pub grid: Floats,
    #[arg(long, default_value_t = 0.2)]
    pub window_frac: f64,
    /// Plateau at this dimension instead of any constant value.
    #[arg(long)]
    pub target_dim: Option<usize>,
    /// Where to write the `delta,dim` curve.
    #[arg(long)]
    pub curve: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentName {
    TwoCircles,
    TwoCirclesNoisy,
    Circle,
    Brownian,
    Custom,
}

#[derive(Args, Debug)]
pub struct Experiment {
    #[arg(value_enum)]
    pub name: ExperimentName,
    /// JSON configuration overriding the defaults of the experiment.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Point cloud for `custom`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "input")]
    pub dist: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    pub seeds: Option<Vec<u64>>,
    /// Random-walk resolution for `brownian`.
    #[arg(long)]
    pub resolution: Option<usize>,
    /// Per-scale CSV for the circle experiments.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// A comma-separated list or an expanded `lo:hi:n` axis.
#[derive(Clone, Debug, PartialEq)]
pub struct Floats(pub Vec<f64>);

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(format!("{p} is not prime"));
    }
    Ok(p)
}

fn parse_floats(s: &str) -> Result<Floats, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Floats)
}

fn parse_axis(s: &str) -> Result<Floats, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err("expected lo:hi:n".into());
    };
    let lo: f64 = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: f64 = hi.parse().map_err(|e| format!("{e}"))?;
    let n: usize = n.parse().map_err(|e| format!("{e}"))?;
    if n == 0 || !(lo <= hi) {
        return Err("need n >= 1 and lo <= hi".into());
    }
    if n == 1 {
        return Ok(Floats(vec![lo]));
    }
    Ok(Floats((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(parse_prime("2").is_ok());
        assert!(parse_prime("7").is_ok());
        assert!(parse_prime("9").is_err());
        assert!(parse_prime("1").is_err());
    }

    #[test]
    fn axis() {
        assert_eq!(parse_axis("0:1:3").unwrap().0, vec![0.0, 0.5, 1.0]);
        assert!(parse_axis("0:1").is_err());
        assert!(parse_axis("1:0:4").is_err());
    }

    #[test]
    fn definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

mod args;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use fgest::filtration::{build_function_cech_truncated, build_function_rips_truncated, BifilteredComplex};
use fgest::grade::format_f64;
use fgest::harness::{
    read_point_cloud, run_brownian, run_circle, run_custom, run_two_circles, ExperimentConfig, ExperimentKind,
};
use fgest::invariants::{
    betti_to_csv, bottleneck, curve_to_csv, matching_distance_mc, pointwise_dimension_curve, slice_line,
    slice_vertical, Barcode, Line, SliceSource,
};
use fgest::modalg::{betti_numbers, hilbert_function, homology_presentation, read_pres, smoothed_presentation, write_pres};
use fgest::scale::{delta_hat, delta_k, delta_prime, ABStandard, PlateauOptions, PlateauTarget};
use fgest::{Field, Grade, Presentation, SampledSpace};

use args::{
    Cli, Command, Experiment, ExperimentName, FiltrationCmd, FiltrationKind, Global, PresentArgs,
    PresentCmd, SelectDelta, SelectMethod,
};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    if let Some(n) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    let field = Field::new(g.field)?;
    let text = match cli.command {
        Command::Filtration {
            action:
                FiltrationCmd::Build {
                    cloud,
                    kind,
                    max_dim,
                    max_scale,
                },
        } => {
            let space = load_cloud(&cloud.input, cloud.dist.as_deref())?;
            let scale = max_scale.unwrap_or(f64::INFINITY);
            let c = match kind {
                FiltrationKind::Rips => build_function_rips_truncated(&space, max_dim, scale),
                FiltrationKind::Cech => build_function_cech_truncated(&space, max_dim, scale)?,
            };
            snap_complex(c, g).to_dump()
        }
        Command::Present { kind } => {
            let (args, smoothed) = match &kind {
                PresentCmd::Homology(a) => (a, false),
                PresentCmd::Smoothed(a) => (a, true),
            };
            let c = present_input(args, g)?;
            let p = if smoothed {
                smoothed_presentation(&c, args.degree, field)?
            } else {
                homology_presentation(&c, args.degree, field)?
            };
            write_pres(&p)
        }
        Command::Betti { input } => {
            let p = load_pres(&input, g)?;
            betti_to_csv(&betti_numbers(&p)?, p.params())
        }
        Command::Hilbert { input, grades, grid } => {
            let p = load_pres(&input, g)?;
            let mut queries: Vec<Grade> = grades.into_iter().map(|f| Grade::new(f.0)).collect();
            if !grid.is_empty() {
                let axes: Vec<Vec<f64>> = grid.into_iter().map(|f| f.0).collect();
                queries.extend(product(&axes).into_iter().map(Grade::new));
            }
            if queries.is_empty() {
                bail!("give query grades with --grade or --grid");
            }
            if let Some(q) = queries.iter().find(|q| q.dim() != p.params()) {
                bail!("query {:?} has {} coordinates, presentation has {}", q.0, q.dim(), p.params());
            }
            let dims = hilbert_function(&p, &queries);
            let mut out = (1..=p.params()).map(|i| format!("g{i},")).collect::<String>() + "dim\n";
            for (q, d) in queries.iter().zip(dims) {
                for v in &q.0 {
                    out += &format!("{},", format_f64(*v));
                }
                out += &format!("{d}\n");
            }
            out
        }
        Command::Slice { input, delta, base, dir } => {
            let p = load_pres(&input, g)?;
            let bars = match (delta, base, dir) {
                (Some(d), _, _) => slice_vertical(&p, d)?,
                (None, Some(b), Some(v)) => slice_line(&p, &Line::new(Grade::new(b.0), Grade::new(v.0))?)?,
                _ => bail!("give --delta or both --base and --dir"),
            };
            bars.to_csv()
        }
        Command::Bottleneck { a, b } => {
            let a = Barcode::from_csv(&read(&a)?)?;
            let b = Barcode::from_csv(&read(&b)?)?;
            format!("{}\n", format_f64(bottleneck(&a, &b, g.truncation)))
        }
        Command::Matching { a, b, lines } => {
            let (pa, pb) = (load_pres(&a, g)?, load_pres(&b, g)?);
            let d = matching_distance_mc(
                &SliceSource::Presentation(&pa),
                &SliceSource::Presentation(&pb),
                lines,
                g.seed.unwrap_or(0),
                g.truncation,
            )?;
            format!("{}\n", format_f64(d))
        }
        Command::SelectDelta(s) => select_delta(&s, g, field)?,
        Command::Experiment(e) => experiment(&e, g)?,
    };
    emit(g.out.as_deref(), &text)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load_cloud(input: &Path, dist: Option<&Path>) -> Result<SampledSpace> {
    let csv = read(input)?;
    let dist = dist.map(read).transpose()?;
    read_point_cloud(&csv, dist.as_deref()).with_context(|| format!("parsing {}", input.display()))
}

fn snap_complex(c: BifilteredComplex, g: &Global) -> BifilteredComplex {
    match g.snap {
        Some(step) => c.snapped(step),
        None => c,
    }
}

fn load_pres(path: &Path, g: &Global) -> Result<Presentation> {
    let p = read_pres(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(match g.snap {
        Some(step) => Presentation::new(p.matrix.map_grades(|x| x.snapped(step))),
        None => p,
    })
}

fn present_input(a: &PresentArgs, g: &Global) -> Result<BifilteredComplex> {
    let c = match (&a.input, &a.complex) {
        (Some(input), _) => {
            let space = load_cloud(input, a.dist.as_deref())?;
            build_function_rips_truncated(&space, a.degree + 1, f64::INFINITY)
        }
        (None, Some(path)) => BifilteredComplex::from_dump(&read(path)?)?,
        (None, None) => bail!("give --in or --complex"),
    };
    Ok(snap_complex(c, g))
}

fn product(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![Vec::new()], |acc, axis| {
        acc.iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

fn select_delta(s: &SelectDelta, g: &Global, field: Field) -> Result<String> {
    let space = load_cloud(&s.cloud.input, s.cloud.dist.as_deref())?;
    let k = space.len();
    let ab = ABStandard::new(s.a, s.b)?;
    let c = snap_complex(build_function_rips_truncated(&space, s.degree + 1, f64::INFINITY), g);
    let mut out = String::from("name,value\n");
    match s.method {
        SelectMethod::DeltaK => out += &format!("delta_k,{}\n", format_f64(delta_k(k, ab)?)),
        SelectMethod::DeltaHat => out += &format!("delta_hat,{}\n", format_f64(delta_hat(&space, s.beta)?)),
        SelectMethod::DeltaPrime => {
            let opts = PlateauOptions {
                grid: s.grid.0.clone(),
                window_frac: s.window_frac,
                target: s.target_dim.map_or(PlateauTarget::Constant, PlateauTarget::Dim),
                field,
            };
            let dp = delta_prime(&c, s.degree, ab, &opts)?;
            out += &format!("delta_star,{}\n", format_f64(dp.delta_star));
            out += &format!("k0,{}\n", dp.k0);
            out += &format!("ratio,{}\n", format_f64(dp.ratio()?));
            out += &format!("delta_prime,{}\n", format_f64(dp.at(k)?));
        }
    }
    if let Some(path) = &s.curve {
        let dims = pointwise_dimension_curve(&c, s.degree, &s.grid.0, None, field)?;
        emit(Some(path), &curve_to_csv(&s.grid.0, &dims))?;
    }
    Ok(out)
}

fn experiment(e: &Experiment, g: &Global) -> Result<String> {
    let kind = match e.name {
        ExperimentName::TwoCircles => ExperimentKind::TwoCircles,
        ExperimentName::TwoCirclesNoisy => ExperimentKind::TwoCirclesNoisy,
        ExperimentName::Circle => ExperimentKind::Circle,
        ExperimentName::Brownian => ExperimentKind::Brownian,
        ExperimentName::Custom => ExperimentKind::Custom,
    };
    let mut cfg = match &e.config {
        Some(path) => {
            let cfg: ExperimentConfig =
                serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            if cfg.name != kind {
                bail!("configuration is for {:?}, not {:?}", cfg.name, kind);
            }
            cfg
        }
        None => ExperimentConfig::defaults(kind),
    };
    cfg.field = g.field;
    cfg.truncation = g.truncation;
    cfg.timings |= g.timings;
    if let Some(s) = &e.sizes {
        cfg.sizes = s.clone();
    }
    if let Some(s) = &e.seeds {
        cfg.seeds = s.clone();
    }
    if let Some(seed) = g.seed {
        if e.seeds.is_none() {
            cfg.seeds = vec![seed];
        }
        cfg.path_seed = seed;
    }
    if let Some(m) = e.resolution {
        cfg.resolution = m;
    }
    let csv_path = e.csv.clone().or_else(|| cfg.out_dir.as_ref().map(|d| d.join("scales.csv")));
    let csv_out = |csv: &str, path: &Option<PathBuf>| -> Result<()> {
        match path {
            Some(p) => emit(Some(p), csv),
            None => Ok(()),
        }
    };
    let report = match kind {
        ExperimentKind::TwoCircles | ExperimentKind::TwoCirclesNoisy => {
            let o = run_two_circles(&cfg)?;
            csv_out(&o.to_csv(), &csv_path)?;
            report_violations(o.violations().len());
            o.report
        }
        ExperimentKind::Circle => {
            let o = run_circle(&cfg)?;
            csv_out(&o.to_csv(), &csv_path)?;
            report_violations(o.violations().len());
            o.report
        }
        ExperimentKind::Brownian => run_brownian(&cfg)?,
        ExperimentKind::Custom => {
            let input = e.input.as_ref().ok_or_else(|| anyhow!("`custom` needs --in"))?;
            let space = load_cloud(input, e.dist.as_deref())?;
            run_custom(&cfg, &space)?.0
        }
    };
    let json = report.to_json()? + "\n";
    if let Some(dir) = &cfg.out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        emit(Some(&dir.join("report.json")), &json)?;
    }
    Ok(json)
}

fn report_violations(n: usize) {
    if n > 0 {
        eprintln!("warning: {n} admissible scales exceed the interleaving bound");
    }
}

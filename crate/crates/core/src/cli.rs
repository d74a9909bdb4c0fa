//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify;
use crate::construct::{self, ConfigurationDocument, DEFAULT_VERIFY_TOL};
use crate::family::NamedFamily;
use crate::graph::Graph;
use crate::sigma::{self, TauWeighting, PSD_TOL};
use crate::spectra::{self, DEFAULT_TOL};

#[derive(Debug, Parser)]
#[command(
    name = "subspace-angles",
    version,
    about = "Configurations of subspaces with fixed angles on a graph"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Adjacency spectrum, index and minimum eigenvalue
    Spectrum(CommonArgs),
    /// Admissible parameter set for a tree or a cycle
    Sigma(CommonArgs),
    /// Whether a configuration exists at the given tau, and its dimension
    Exists(TauArgs),
    /// Dynkin / extended Dynkin classification and index trichotomy
    Classify(CommonArgs),
    /// Build a configuration and export it as JSON
    Construct {
        #[command(flatten)]
        args: TauArgs,
        /// Write the configuration here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check an exported configuration
    Verify {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERIFY_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Existence verdicts over a range of tau
    Sweep {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 0.01)]
        tau_min: f64,
        #[arg(long, default_value_t = 1.0)]
        tau_max: f64,
        /// Number of points, endpoints included
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = PSD_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Named graph: A<n>, D<n>, E6..E8, A~<n>, D~<n>, E~6..E~8, C<n>, P<n>, K1,<m>
    #[arg(long)]
    pub graph: Option<String>,
    /// Edge-list file
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub tau: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl GraphSource {
    fn load(&self) -> anyhow::Result<(String, Graph)> {
        match (&self.graph, &self.file) {
            (Some(spec), None) => {
                let fam: NamedFamily = spec.parse()?;
                Ok((spec.clone(), fam.generate()?))
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let g = Graph::parse_edge_list(&text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                Ok((path.display().to_string(), g))
            }
            _ => bail!("exactly one of --graph or --file is required"),
        }
    }
}

/// Rounds to 10 significant digits; magnitudes below 1e-12 print as zero.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("formatted float parses");
    let v = if rounded.abs() < 1e-12 { 0.0 } else { rounded };
    let s = v.to_string();
    if s.contains('.') {
        s
    } else {
        format!("{s}.0")
    }
}

fn require_text_or_json(format: Format) -> anyhow::Result<()> {
    if format == Format::Csv {
        bail!("csv output is only available for `sweep`");
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(&args, out),
        Command::Sigma(args) => cmd_sigma(&args, out),
        Command::Exists(args) => cmd_exists(&args, out),
        Command::Classify(args) => cmd_classify(&args, out),
        Command::Construct { args, out: path } => cmd_construct(&args, path.as_deref(), out),
        Command::Verify { input, tol, format } => cmd_verify(&input, tol, format, out),
        Command::Sweep {
            source,
            tau_min,
            tau_max,
            steps,
            tol,
            format,
        } => cmd_sweep(&source, tau_min, tau_max, steps, tol, format, out),
    }
}

fn cmd_spectrum(args: &CommonArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    require_text_or_json(args.format)?;
    let (name, g) = args.source.load()?;
    let adjacency = spectra::SymmetricMatrix::from(&g.adjacency_matrix());
    let s = spectra::eigen_symmetric(&adjacency, args.tol)?;
    match args.format {
        Format::Json => emit_json(
            out,
            &json!({
                "graph": name,
                "n": g.vertex_count(),
                "eigenvalues": s.eigenvalues,
                "index": s.index,
                "min_eigenvalue": s.min,
                "residual_bound": s.residual_bound,
            }),
        ),
        _ => {
            writeln!(
                out,
                "graph: {name} (n={}, edges={})",
                g.vertex_count(),
                g.edge_count()
            )?;
            let eig: Vec<String> = s.eigenvalues.iter().map(|&l| fmt_num(l)).collect();
            writeln!(out, "eigenvalues: {}", eig.join(" "))?;
            writeln!(out, "index: {}", fmt_num(s.index))?;
            writeln!(out, "min_eigenvalue: {}", fmt_num(s.min))?;
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
struct SigmaOutput {
    graph: String,
    shape: Option<String>,
    upper: f64,
    closed_form: Option<String>,
    trichotomy: Option<sigma::QuarterPosition>,
    /// cycles only: endpoint of the Gram PSD region, reported alongside
    gram_psd_upper: Option<f64>,
}

fn cmd_sigma(args: &CommonArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    require_text_or_json(args.format)?;
    let (name, g) = args.source.load()?;
    let label = classify::classify_structure(&g).single();
    let closed_form = label.as_ref().and_then(sigma::closed_form);
    let shape = label.and_then(|l| l.family()).map(|f| f.to_string());

    let result = if g.is_tree() {
        SigmaOutput {
            graph: name,
            shape,
            upper: sigma::sigma_tree(&g)?.upper,
            closed_form,
            trichotomy: Some(sigma::trichotomy(&g)?),
            gram_psd_upper: None,
        }
    } else if g.is_cycle() {
        let n = g.vertex_count();
        SigmaOutput {
            graph: name,
            shape,
            upper: sigma::sigma_cycle(n)?.upper,
            closed_form,
            trichotomy: None,
            gram_psd_upper: Some(sigma::cycle_psd_upper(n)?),
        }
    } else {
        return Err(
            crate::Error::NoFormula(format!("{name} is neither a tree nor a cycle")).into(),
        );
    };

    match args.format {
        Format::Json => emit_json(out, &result),
        _ => {
            writeln!(out, "graph: {}", result.graph)?;
            if let Some(shape) = &result.shape {
                writeln!(out, "shape: {shape}")?;
            }
            writeln!(out, "sigma: (0, {}]", fmt_num(result.upper))?;
            writeln!(out, "upper: {}", fmt_num(result.upper))?;
            if let Some(cf) = &result.closed_form {
                writeln!(out, "closed_form: {cf}")?;
            }
            if let Some(t) = result.trichotomy {
                writeln!(out, "trichotomy: {t}")?;
            }
            if let Some(p) = result.gram_psd_upper {
                writeln!(out, "gram_psd_upper: {}", fmt_num(p))?;
            }
            Ok(())
        }
    }
}

fn cmd_exists(args: &TauArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let common = &args.common;
    require_text_or_json(common.format)?;
    let (name, g) = common.source.load()?;
    let verdict = sigma::existence(&g, &TauWeighting::Constant(args.tau), common.tol)?;
    match common.format {
        Format::Json => emit_json(
            out,
            &json!({
                "graph": name,
                "tau": args.tau,
                "exists": verdict.exists,
                "min_eigenvalue": verdict.min_eigenvalue,
                "rank": verdict.rank,
            }),
        ),
        _ => {
            writeln!(out, "graph: {name}")?;
            writeln!(out, "tau: {}", fmt_num(args.tau))?;
            writeln!(out, "exists: {}", verdict.exists)?;
            writeln!(out, "min_eigenvalue: {}", fmt_num(verdict.min_eigenvalue))?;
            writeln!(out, "rank: {}", verdict.rank)?;
            Ok(())
        }
    }
}

fn cmd_classify(args: &CommonArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    require_text_or_json(args.format)?;
    let (name, g) = args.source.load()?;
    let structure = classify::classify_structure(&g);
    let numeric = classify::classify_index(&g, args.tol)?;
    let structural = structure.category();
    let consistent = structural == numeric.category;
    let components: Vec<_> = structure
        .components
        .iter()
        .map(|c| {
            (
                c.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                c.label.to_string(),
                c.label.category(),
            )
        })
        .collect();

    match args.format {
        Format::Json => emit_json(
            out,
            &json!({
                "graph": name,
                "components": components.iter().map(|(vs, label, cat)| json!({
                    "vertices": vs,
                    "label": label,
                    "category": cat.to_string(),
                })).collect::<Vec<_>>(),
                "structural_category": structural.to_string(),
                "index": numeric.index,
                "numeric_category": numeric.category.to_string(),
                "consistent": consistent,
            }),
        ),
        _ => {
            writeln!(out, "graph: {name}")?;
            for (k, (vs, label, cat)) in components.iter().enumerate() {
                let vs: Vec<String> = vs.iter().map(usize::to_string).collect();
                writeln!(
                    out,
                    "component {}: [{}] {label} ({cat})",
                    k + 1,
                    vs.join(" ")
                )?;
            }
            writeln!(out, "structural_category: {structural}")?;
            writeln!(out, "index: {}", fmt_num(numeric.index))?;
            writeln!(out, "numeric_category: {}", numeric.category)?;
            writeln!(out, "consistent: {consistent}")?;
            Ok(())
        }
    }
}

fn cmd_construct(
    args: &TauArgs,
    path: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    let common = &args.common;
    require_text_or_json(common.format)?;
    let (_, g) = common.source.load()?;
    let w = TauWeighting::Constant(args.tau);
    let c = construct::construct_configuration(&g, &w, PSD_TOL)?;
    let report = construct::verify_configuration(&c, &g, &w, DEFAULT_VERIFY_TOL)?;
    let doc = ConfigurationDocument::new(&c, &g, &w, Some(report));
    match path {
        None => emit_json(out, &doc),
        Some(path) => {
            let text = serde_json::to_string_pretty(&doc)?;
            fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            match common.format {
                Format::Json => emit_json(
                    out,
                    &json!({ "ambient_dim": c.ambient_dim, "report": report }),
                ),
                _ => {
                    writeln!(out, "wrote: {}", path.display())?;
                    writeln!(out, "ambient_dim: {}", c.ambient_dim)?;
                    writeln!(out, "pass: {}", report.pass)?;
                    Ok(())
                }
            }
        }
    }
}

fn cmd_verify(
    input: &std::path::Path,
    tol: f64,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    require_text_or_json(format)?;
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let doc: ConfigurationDocument =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", input.display()))?;
    let (g, w, c) = doc.decode()?;
    let r = construct::verify_configuration(&c, &g, &w, tol)?;
    match format {
        Format::Json => emit_json(out, &r),
        _ => {
            writeln!(out, "ambient_dim: {}", c.ambient_dim)?;
            for (key, value) in [
                ("idempotency", r.idempotency),
                ("symmetry", r.symmetry),
                ("braid", r.braid),
                ("orthogonality", r.orthogonality),
                ("gram_deviation", r.gram_deviation),
                ("angle_deviation", r.angle_deviation),
            ] {
                writeln!(out, "{key}: {value:e}")?;
            }
            writeln!(out, "verify_tol: {:e}", r.verify_tol)?;
            writeln!(out, "pass: {}", r.pass)?;
            Ok(())
        }
    }
}

/// `steps` evenly spaced values from `tau_min` to `tau_max` inclusive.
pub fn sweep_points(tau_min: f64, tau_max: f64, steps: usize) -> anyhow::Result<Vec<f64>> {
    if !(tau_min > 0.0 && tau_max <= 1.0 && tau_min <= tau_max) {
        bail!("sweep range must satisfy 0 < tau-min <= tau-max <= 1");
    }
    if steps == 0 {
        bail!("--steps must be positive");
    }
    if steps == 1 {
        return Ok(vec![tau_min]);
    }
    let h = (tau_max - tau_min) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| {
            if k + 1 == steps {
                tau_max
            } else {
                tau_min + h * k as f64
            }
        })
        .collect())
}

fn cmd_sweep(
    source: &GraphSource,
    tau_min: f64,
    tau_max: f64,
    steps: usize,
    tol: f64,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    let (name, g) = source.load()?;
    let rows = sweep_points(tau_min, tau_max, steps)?
        .into_iter()
        .map(|tau| sigma::existence(&g, &TauWeighting::Constant(tau), tol).map(|v| (tau, v)))
        .collect::<crate::Result<Vec<_>>>()?;
    match format {
        Format::Csv => {
            writeln!(out, "tau,min_eigenvalue,exists,rank")?;
            for (tau, v) in &rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_num(*tau),
                    fmt_num(v.min_eigenvalue),
                    v.exists,
                    v.rank
                )?;
            }
            Ok(())
        }
        Format::Json => emit_json(
            out,
            &json!({
                "graph": name,
                "rows": rows.iter().map(|(tau, v)| json!({
                    "tau": tau,
                    "min_eigenvalue": v.min_eigenvalue,
                    "exists": v.exists,
                    "rank": v.rank,
                })).collect::<Vec<_>>(),
            }),
        ),
        Format::Text => {
            writeln!(out, "graph: {name}")?;
            for (tau, v) in &rows {
                writeln!(
                    out,
                    "tau {}: exists={} min_eigenvalue={} rank={}",
                    fmt_num(*tau),
                    v.exists,
                    fmt_num(v.min_eigenvalue),
                    v.rank
                )?;
            }
            Ok(())
        }
    }
}

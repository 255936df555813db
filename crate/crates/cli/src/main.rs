use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use csphere::eigenbasis::{self, Block, EigenMode, HankelOrder};
use csphere::embedding::{domain_sample, registry, SYSTEM_COUNT};
use csphere::geometry::{constraint_check, hamiltonian_residual, metric_agreement};
use csphere::kernel;
use csphere::report::{nan_max, VerificationReport};
use csphere::specfun::{self, BesselKind};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] csphere::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "csphere", version, about = "Verification driver for separable coordinates on the complex 3-sphere")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Embedding-derived vs closed-form metric, Γ and √g (or the embedding constraint).
    VerifyMetric(VerifyMetric),
    /// Hamiltonian residuals of eigenmodes, Gram matrices and 1D block equations.
    Eigencheck(Eigencheck),
    /// Heat kernel Θ identity, resolvent identity and pole recovery on S³.
    KernelCompare(KernelCompare),
    /// Tabulates a special function as CSV.
    SpecfunTable(SpecfunTable),
    /// Lists the 21 charts with their capabilities.
    ListSystems {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyMetric {
    /// System number 1..=21 or `all`.
    #[arg(long)]
    system: String,
    #[arg(long, default_value_t = 64)]
    points: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// `metric` or `constraint`.
    #[arg(long, default_value = "metric")]
    check: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Eigencheck {
    /// 1, 2, 3, 4, 5, 16, a block name (liouville-block, sym-poschl-teller,
    /// mod-poschl-teller, radial-oscillator, airy, legendre-complex,
    /// bessel-k-imag) or `all`.
    #[arg(long)]
    system: String,
    #[arg(long = "J-max", alias = "j-max", default_value_t = 5)]
    j_max: u32,
    /// Number of sample points (modes) or grid points (blocks).
    #[arg(long, default_value_t = 32)]
    grid: usize,
    /// Defaults: 1e-6 for mode residuals, 1e-8 for Gram and block residuals.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KernelCompare {
    #[arg(long, value_delimiter = ',', default_values_t = kernel::PSI_GRID)]
    psi_grid: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = kernel::TAU_GRID)]
    tau_grid: Vec<f64>,
    /// Relative tolerance of the Θ identity.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    resolvent_tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    pole_tol: f64,
    /// JSON summary path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV of (psi, tau, spectral, theta, abs_diff).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct SpecfunTable {
    /// gamma, airy, bessel-j, bessel-i, bessel-k-imag, hankel1, legendre-p,
    /// jacobi-sn, theta3
    #[arg(long)]
    func: String,
    /// Grid as start:stop:count.
    #[arg(long, default_value = "0.1:5:50", allow_hyphen_values = true)]
    grid: String,
    /// Order ν (Bessel, Legendre degree), k for K_{ik}, modulus for sn,
    /// Im τ for Θ₃.
    #[arg(long, default_value_t = 0.0)]
    order: f64,
    /// Legendre order μ.
    #[arg(long, default_value_t = 0.0)]
    mu: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match cli.cmd {
        Cmd::VerifyMetric(a) => verify_metric(a),
        Cmd::Eigencheck(a) => eigencheck(a),
        Cmd::KernelCompare(a) => kernel_compare(a),
        Cmd::SpecfunTable(a) => specfun_table(a),
        Cmd::ListSystems { json } => list_systems(json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut so = std::io::stdout().lock();
            match so.write_all(text.as_bytes()).and_then(|_| so.write_all(b"\n")) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(CliError::Io { path: "stdout".into(), source: e })
                }
                _ => Ok(()),
            }
        }
    }
}

fn finish(reports: &[VerificationReport], out: Option<&PathBuf>, label: &str) -> CliResult<bool> {
    let text = serde_json::to_string_pretty(reports).expect("reports serialize");
    emit(&text, out)?;
    let passed = reports.iter().filter(|r| r.pass).count();
    eprintln!("{label}: {passed}/{} checks pass", reports.len());
    Ok(passed == reports.len())
}

fn parse_system(s: &str) -> CliResult<u32> {
    let n: u32 = s.parse().map_err(|_| CliError::Usage(format!("unknown system `{s}`")))?;
    if !(1..=SYSTEM_COUNT).contains(&n) {
        return Err(csphere::Error::UnknownSystem(n).into());
    }
    Ok(n)
}

/// A failed computation becomes a failing report rather than aborting the run.
fn failed(check: &str, system: Option<u32>, err: csphere::Error) -> VerificationReport {
    let mut r = VerificationReport::new(check, system);
    r.max_abs_err = f64::NAN;
    r.max_rel_err = f64::NAN;
    r.notes.push(format!("error: {err}"));
    r
}

fn verify_metric(a: VerifyMetric) -> CliResult<bool> {
    let systems: Vec<u32> =
        if a.system == "all" { (1..=SYSTEM_COUNT).collect() } else { vec![parse_system(&a.system)?] };
    if a.points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    let check: fn(u32, usize, u64, f64) -> csphere::Result<VerificationReport> = match a.check.as_str() {
        "metric" => metric_agreement,
        "constraint" => constraint_check,
        other => return Err(CliError::Usage(format!("unknown check `{other}` (metric, constraint)"))),
    };
    let reports: Vec<_> = systems
        .iter()
        .map(|&s| check(s, a.points, a.seed, a.tol).unwrap_or_else(|e| failed(&a.check, Some(s), e)))
        .collect();
    finish(&reports, a.out.as_ref(), "verify-metric")
}

const BLOCK_NAMES: [&str; 7] = [
    "liouville-block",
    "sym-poschl-teller",
    "mod-poschl-teller",
    "radial-oscillator",
    "airy",
    "legendre-complex",
    "bessel-k-imag",
];
const MODE_SYSTEMS: [u32; 6] = [1, 2, 3, 4, 5, 16];

fn eigencheck(a: Eigencheck) -> CliResult<bool> {
    if a.grid < 2 {
        return Err(CliError::Usage("--grid must be at least 2".into()));
    }
    let mut reports = Vec::new();
    if a.system == "all" {
        for s in MODE_SYSTEMS {
            reports.extend(mode_reports(s, &a)?);
        }
        for b in BLOCK_NAMES {
            reports.extend(block_reports(b, &a)?);
        }
    } else if BLOCK_NAMES.contains(&a.system.as_str()) || a.system == "complex-liouville" {
        reports.extend(block_reports(&a.system, &a)?);
    } else {
        let s = parse_system(&a.system)?;
        if let Some(reason) = eigenbasis::out_of_scope_reason(s) {
            return Err(csphere::Error::OutOfScope(reason).into());
        }
        reports.extend(mode_reports(s, &a)?);
    }
    finish(&reports, a.out.as_ref(), "eigencheck")
}

fn mode_reports(system: u32, a: &Eigencheck) -> CliResult<Vec<VerificationReport>> {
    let tol = a.tol.unwrap_or(1e-6);
    let points = domain_sample(system, a.grid, a.seed)?;
    let modes = eigenbasis::modes(system, a.j_max)?;
    let mut out = Vec::new();
    for q in &modes {
        let mode = EigenMode::new(system, *q)?;
        let mut r = VerificationReport::new("hamiltonian_residual", Some(system))
            .param("mode", "rel")
            .param("labels", serde_json::to_value(q).expect("labels serialize"))
            .param("J", q.j())
            .param("energy", mode.energy);
        r.n_points = points.len();
        r.seed = Some(a.seed);
        r.tol = tol;
        match hamiltonian_residual(system, &mode, mode.energy, &points) {
            Ok(res) => {
                r.max_rel_err = res;
                r.max_abs_err = res;
            }
            Err(e) => {
                r.max_rel_err = f64::NAN;
                r.max_abs_err = f64::NAN;
                r.notes.push(format!("error: {e}"));
            }
        }
        if matches!(system, 2 | 5) {
            r.notes.push("Hankel order J+1 in the x factor (printed order J+1/2 does not solve the x equation)".into());
        }
        if system == 16 {
            r.notes.push("Laguerre index -(J+1) with prefactor (xi eta)^(-J)".into());
        }
        if system == 3 {
            r.notes.push("outer Gegenbauer index m1+1".into());
        }
        out.push(r.decide());
    }
    if system == 1 || system == 3 {
        let first = &modes;
        let gram_tol = a.tol.map_or(1e-8, |t| t.min(1e-8));
        let mut r =
            VerificationReport::new("gram_matrix", Some(system)).param("mode", "abs").param("modes", first.len());
        r.n_points = first.len();
        r.tol = gram_tol;
        match eigenbasis::norm_check(system, first) {
            Ok(dev) => {
                r.max_abs_err = dev;
                r.max_rel_err = dev;
            }
            Err(e) => {
                r.max_abs_err = f64::NAN;
                r.max_rel_err = f64::NAN;
                r.notes.push(format!("error: {e}"));
            }
        }
        out.push(r.decide());
    }
    Ok(out)
}

fn block_report(name: &str, block: Block, grid: usize, tol: f64) -> VerificationReport {
    let g = block.default_grid(grid);
    let mut r = VerificationReport::new("ode_residual_1d", None)
        .param("mode", "rel")
        .param("block", name)
        .param("params", serde_json::to_value(block).expect("block serializes"));
    r.n_points = g.len();
    r.tol = tol;
    match eigenbasis::ode_residual_1d(&block, &g) {
        Ok(res) => {
            r.max_rel_err = res;
            r.max_abs_err = res;
        }
        Err(e) => {
            r.max_rel_err = f64::NAN;
            r.max_abs_err = f64::NAN;
            r.notes.push(format!("error: {e}"));
        }
    }
    r.decide()
}

fn block_reports(name: &str, a: &Eigencheck) -> CliResult<Vec<VerificationReport>> {
    let tol = a.tol.unwrap_or(1e-8);
    let n = a.grid;
    let out = match name {
        "liouville-block" | "complex-liouville" => vec![liouville_report(a.j_max, n, tol)?],
        "sym-poschl-teller" => (0..=a.j_max)
            .flat_map(|j| (0..=j).map(move |l| Block::SymPoschlTeller { j, l }))
            .map(|b| block_report(name, b, n, tol))
            .collect(),
        "mod-poschl-teller" => vec![block_report(name, Block::ModPoschlTeller { eta: 0.7, nu: 2.3, p: 1.4 }, n, tol)],
        "radial-oscillator" => (0..=a.j_max)
            .map(|k| block_report(name, Block::RadialOscillator { n: k, alpha: 1.5, omega: 0.8 }, n, tol))
            .collect(),
        "airy" => vec![block_report(name, Block::Airy, n, tol)],
        "legendre-complex" => vec![block_report(name, Block::LegendreComplex { k: 0.6, p: 1.1 }, n, tol)],
        "bessel-k-imag" => vec![block_report(name, Block::BesselKImag { k: 0.8, p: 1.2 }, n, tol)],
        other => return Err(CliError::Usage(format!("unknown block `{other}`"))),
    };
    Ok(out)
}

fn liouville_report(j_max: u32, n: usize, tol: f64) -> CliResult<VerificationReport> {
    let k = 1.3;
    let fail_tol = 1e-2;
    let mut r = VerificationReport::new("liouville_order_arbitration", None)
        .param("mode", "abs")
        .param("k", k)
        .param("J_max", j_max)
        .param("fail_tol", fail_tol);
    r.n_points = n;
    r.tol = tol;
    let mut selected = Vec::new();
    let mut all_one = true;
    let mut unique = true;
    for j in 0..=j_max {
        let arb = eigenbasis::liouville_arbitration(j, k, n, tol, fail_tol)?;
        r.notes.push(arb.summary());
        match arb.selected {
            Some(o) => {
                let passing =
                    if o == HankelOrder::JPlusOne { arb.residual_j_plus_one } else { arb.residual_j_plus_half };
                r.max_abs_err = nan_max(r.max_abs_err, passing);
                all_one &= o == HankelOrder::JPlusOne;
                selected.push(o.to_string());
            }
            None => {
                unique = false;
                all_one = false;
                r.max_abs_err = f64::NAN;
                selected.push("none".into());
            }
        }
    }
    r.max_rel_err = r.max_abs_err;
    r = r.param("selected", selected);
    if all_one {
        r.notes.push("order=J+1 passes; order=J+1/2 fails".into());
        r.notes.push("erratum: printed Hankel order J+1/2 in the horicyclic wave function replaced by J+1".into());
    } else if unique {
        r.notes.push("order=J+1/2 selected for some J".into());
    }
    r = r.decide();
    r.pass &= unique;
    Ok(r)
}

fn kernel_compare(a: KernelCompare) -> CliResult<bool> {
    if a.tau_grid.is_empty() || a.psi_grid.is_empty() {
        return Err(CliError::Usage("grids must be nonempty".into()));
    }
    if let Some(t) = a.tau_grid.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
        return Err(CliError::Usage(format!("tau must be positive (got {t})")));
    }
    if let Some(p) = a.psi_grid.iter().find(|p| !(**p > 0.0 && **p < std::f64::consts::PI)) {
        return Err(CliError::Usage(format!("psi must lie in (0, pi) (got {p})")));
    }
    let (rows, theta) = kernel::theta_identity(&a.psi_grid, &a.tau_grid, a.tol)?;
    let resolvent = kernel::resolvent_identity(&kernel::RESOLVENT_PSI, &kernel::RESOLVENT_E, a.resolvent_tol)?;
    let poles = kernel::pole_recovery(a.pole_tol)?;
    if let Some(path) = &a.csv {
        let mut text = String::from("psi,tau,spectral,theta,abs_diff\n");
        for r in &rows {
            text.push_str(&format!("{},{},{:e},{:e},{:e}\n", r.psi, r.tau, r.spectral, r.theta, r.abs_diff));
        }
        fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    finish(&[theta, resolvent, poles], a.out.as_ref(), "kernel-compare")
}

fn parse_grid(s: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Usage(format!("grid `{s}` is not start:stop:count"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: f64 = parts[0].parse().map_err(|_| bad())?;
    let b: f64 = parts[1].parse().map_err(|_| bad())?;
    let n: usize = parts[2].parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    Ok((0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect())
}

fn specfun_table(a: SpecfunTable) -> CliResult<bool> {
    let grid = parse_grid(&a.grid)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let eval = |x: f64| -> csphere::Result<Complex64> {
        match a.func.as_str() {
            "gamma" => specfun::gamma_real(x).map(c),
            "airy" => specfun::airy_ai(x).map(c),
            "bessel-j" => specfun::bessel_eval(BesselKind::JRealOrder, a.order, c(x)),
            "bessel-i" => specfun::bessel_eval(BesselKind::IRealOrder, a.order, c(x)),
            "bessel-k-imag" => specfun::bessel_eval(BesselKind::KImagOrder, a.order, c(x)),
            "hankel1" if a.order.fract() == 0.0 => specfun::bessel_eval(BesselKind::H1Integer, a.order, c(x)),
            "hankel1" => specfun::bessel_eval(BesselKind::H1HalfInteger, a.order, c(x)),
            "legendre-p" => specfun::legendre_p(c(a.order), c(a.mu), c(x)),
            "jacobi-sn" => specfun::jacobi_elliptic(x, a.order).map(|(sn, _, _)| c(sn)),
            "theta3" => specfun::theta3(c(x), Complex64::new(0.0, if a.order > 0.0 { a.order } else { 1.0 })),
            _ => Err(csphere::Error::InvalidParameter(format!("unknown function `{}`", a.func))),
        }
    };
    const KNOWN: [&str; 9] =
        ["gamma", "airy", "bessel-j", "bessel-i", "bessel-k-imag", "hankel1", "legendre-p", "jacobi-sn", "theta3"];
    if !KNOWN.contains(&a.func.as_str()) {
        return Err(CliError::Usage(format!("unknown function `{}` (one of {})", a.func, KNOWN.join(", "))));
    }
    let params = match a.func.as_str() {
        "bessel-j" | "bessel-i" | "hankel1" => format!("nu={}", a.order),
        "bessel-k-imag" | "jacobi-sn" => format!("k={}", a.order),
        "legendre-p" => format!("nu={};mu={}", a.order, a.mu),
        "theta3" => format!("tau=i*{}", if a.order > 0.0 { a.order } else { 1.0 }),
        _ => String::new(),
    };
    let mut text = String::from("family,params,arg,value_re,value_im\n");
    let mut ok = true;
    for x in grid {
        let row = match eval(x) {
            Ok(v) => format!("{:e},{:e}", v.re, v.im),
            Err(e) => {
                ok = false;
                eprintln!("x = {x}: {e}");
                "NaN,NaN".to_string()
            }
        };
        text.push_str(&format!("{},{params},{x},{row}\n", a.func));
    }
    emit(text.trim_end(), a.out.as_ref())?;
    Ok(ok)
}

fn list_systems(as_json: bool) -> CliResult<bool> {
    let charts = registry();
    if as_json {
        emit(&serde_json::to_string_pretty(&charts).expect("registry serializes"), None)?;
        return Ok(true);
    }
    let mut text = String::new();
    for ch in &charts {
        let caps = &ch.capabilities;
        let coords: Vec<&str> = ch.coordinates.iter().map(|c| c.name).collect();
        let eig = match eigenbasis::out_of_scope_reason(ch.system_id) {
            None => "eigenbasis".to_string(),
            Some(r) => format!("no eigenbasis ({r})"),
        };
        text.push_str(&format!(
            "{:>2}  {:<34} ({})  embedding={} metric={} gamma={}  {}\n",
            ch.system_id,
            ch.name,
            coords.join(", "),
            caps.embedding,
            caps.metric_closed_form,
            caps.gamma_closed_form,
            eig
        ));
    }
    emit(text.trim_end(), None)?;
    Ok(true)
}

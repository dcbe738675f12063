//! `monobasis`: certify monomial bases of zero-dimensional polynomial systems.
//!
//! Reports are `key=value` lines on stdout. Exit status 0 means success (or
//! "basis"), 1 means "not a basis" or a failed identity, 2 a usage or input
//! error.

mod parse;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monobasis_core::basis::{
    certify_basis, degree_bound_reject, factorize_delta, multiplication_matrix, profile_of, rank_oracle,
    upsilon_bivariate, vandermonde_verify,
};
use monobasis_core::hilbert::{hilbert_H, hilbert_h};
use monobasis_core::resultant::resultant_macaulay;
use monobasis_core::rooted::roots_of_unity_system;
use monobasis_core::subresultant::{delta_of_set, subresultant_delta};
use monobasis_core::{DegreeProfile, Error, Field, FieldSpec, MonomialSet, PolySystem, PrimeField, Rationals, Result};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[derive(Parser)]
#[command(name = "monobasis", version, about = "Exact monomial basis certificates for polynomial systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// `q` or `fp:<p>`.
    #[arg(long, default_value = "q")]
    field: String,
    /// System file: `degrees: d1,..,dn` header, one polynomial per line.
    #[arg(long)]
    system: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetKind {
    M0,
    Custom,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Hilbert functions H and h of a degree profile.
    Hilbert {
        #[arg(long)]
        degrees: String,
        #[arg(long, allow_negative_numbers = true)]
        tau: i64,
    },
    /// Resultant of the leading forms.
    Resultant(SystemArgs),
    /// Subresultant of a monomial set at degree t (default: its maximal degree).
    Subresultant {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        monomials: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Decide whether a monomial set is a basis of the quotient algebra.
    BasisCheck {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        monomials: String,
        /// Also run the rank oracle and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Degree-by-degree factorization of the certificate.
    Factor {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        monomials: String,
    },
    /// Generalized Vandermonde identity on a roots-of-unity system.
    VandermondeVerify {
        #[arg(long)]
        degrees: String,
        /// `fp:<p>` with every degree dividing p - 1.
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value = "m0")]
        set: SetKind,
        #[arg(long)]
        monomials: Option<String>,
        /// Randomize coordinates and equations with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Closed-form Upsilon for two bivariate polynomials.
    Upsilon(SystemArgs),
    /// Multiplication-by-g matrix in a certified basis.
    Mulmat {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        monomials: String,
        #[arg(long)]
        g: String,
    },
}

/// Ordered `key=value` lines and whether the run counts as a success.
struct Report {
    lines: Vec<(String, String)>,
    success: bool,
}

impl Report {
    fn new() -> Self {
        Report { lines: Vec::new(), success: true }
    }

    fn put(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }
}

fn read_system<F: Field>(path: &Path, field: &F) -> Result<PolySystem<F>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse::parse_system(&text, field)
}

fn monomial_set(text: &str, n: usize) -> Result<MonomialSet> {
    MonomialSet::new(n, parse::parse_monomials(text, n)?)
}

fn verdict(basis: bool) -> &'static str {
    if basis {
        "basis"
    } else {
        "not-basis"
    }
}

fn hilbert(degrees: &str, tau: i64) -> Result<Report> {
    let profile = DegreeProfile::new(parse::parse_degrees(degrees)?)?;
    let mut r = Report::new();
    r.put("tau", tau);
    r.put("H", hilbert_H(&profile, tau)?);
    r.put("h", hilbert_h(&profile, tau)?);
    r.put("rho", profile.rho());
    r.put("d", profile.bezout());
    Ok(r)
}

fn run_with_field<F: Field>(f: F, cmd: &Command) -> Result<Report> {
    let mut r = Report::new();
    match cmd {
        Command::Resultant(a) => {
            let sys = read_system(&a.system, &f)?;
            r.put("field", f.name());
            r.put("n", sys.n());
            r.put("res", f.format(&resultant_macaulay(&sys.leading_forms())?));
        }
        Command::Subresultant { sys, monomials, degree } => {
            let sys = read_system(&sys.system, &f)?;
            let set = monomial_set(monomials, sys.n())?;
            let t = degree.unwrap_or(set.delta());
            let v = subresultant_delta(&sys, t, &set.homogenize_to(t)?)?;
            r.put("t", t);
            r.put("size", set.len());
            r.put("exact", v.exact);
            r.put("value", f.format(&v.value));
        }
        Command::BasisCheck { sys, monomials, oracle } => {
            let sys = read_system(&sys.system, &f)?;
            let set = monomial_set(monomials, sys.n())?;
            let cert = certify_basis(&sys, &set)?;
            r.put("t", cert.t_used);
            r.put("degree_bound_reject", degree_bound_reject(&set, &profile_of(&sys)));
            r.put("res", f.format(&cert.res_value));
            r.put("delta", f.format(&cert.delta_value));
            r.put("product", f.format(&cert.product));
            r.put("verdict", verdict(cert.verdict.is_basis()));
            r.success = cert.verdict.is_basis();
            if *oracle {
                let by_rank = rank_oracle(&sys, &set)?;
                r.put("oracle", verdict(by_rank));
                r.put("agree", by_rank == cert.verdict.is_basis());
                if by_rank != cert.verdict.is_basis() {
                    eprintln!("certificate and rank oracle disagree");
                    r.success = false;
                }
            }
        }
        Command::Factor { sys, monomials } => {
            let sys = read_system(&sys.system, &f)?;
            let set = monomial_set(monomials, sys.n())?;
            let rep = factorize_delta(&sys.leading_forms(), &set)?;
            r.put("applicable", rep.applicable);
            for (t, v) in &rep.factors {
                r.put(format!("D{t}"), f.format(v));
            }
            if let Some(p) = &rep.product {
                let delta = delta_of_set(&sys, &set)?.value;
                let agree = *p == delta || *p == f.neg(&delta);
                r.put("product", f.format(p));
                r.put("delta", f.format(&delta));
                r.put("match_up_to_sign", agree);
                r.success = agree;
            }
        }
        Command::Upsilon(a) => {
            let sys = read_system(&a.system, &f)?;
            let (d1, d2) = match sys.degrees() {
                [d1, d2] => (*d1, *d2),
                _ => return Err(Error::Input("upsilon needs exactly two polynomials".into())),
            };
            r.put("set", MonomialSet::bivariate_staircase(d1, d2)?);
            r.put("upsilon", f.format(&upsilon_bivariate(&sys)?));
        }
        Command::Mulmat { sys, monomials, g } => {
            let sys = read_system(&sys.system, &f)?;
            let set = monomial_set(monomials, sys.n())?;
            let g = parse::parse_poly(g, sys.n(), &f)?;
            let mm = multiplication_matrix(&sys, &set, &g)?;
            r.put("size", mm.b.rows());
            r.put("kernel_dim", mm.kernel_dim);
            r.put("det", f.format(&mm.b.det()?));
            for i in 0..mm.b.rows() {
                let row: Vec<String> = mm.b.row(i).iter().map(|x| f.format(x)).collect();
                r.put(format!("row{}", i + 1), row.join(" "));
            }
        }
        Command::Hilbert { .. } | Command::VandermondeVerify { .. } => unreachable!("dispatched without a field"),
    }
    Ok(r)
}

fn vandermonde(degrees: &str, field: &str, set: SetKind, monomials: Option<&str>, seed: Option<u64>) -> Result<Report> {
    let f: PrimeField = match field.parse::<FieldSpec>()? {
        FieldSpec::Prime(f) => f,
        FieldSpec::Rationals => return Err(Error::InvalidField("vandermonde-verify needs fp:<p>".into())),
    };
    let degrees = parse::parse_degrees(degrees)?;
    let profile = DegreeProfile::new(degrees.clone())?;
    let mut rs = roots_of_unity_system(&f, &degrees, &vec![1; degrees.len()])?;
    if let Some(seed) = seed {
        let mut rng = StdRng::seed_from_u64(seed);
        rs = rs.random_linear_change(&mut rng)?.mix_equations(&mut rng)?;
    }
    let m = match (set, monomials) {
        (SetKind::M0, None) => MonomialSet::macaulay_box(&profile),
        (SetKind::Custom, Some(text)) => monomial_set(text, degrees.len())?,
        (SetKind::M0, Some(_)) => return Err(Error::Input("--monomials needs --set custom".into())),
        (SetKind::Custom, None) => return Err(Error::Input("--set custom needs --monomials".into())),
    };
    let rep = vandermonde_verify(&rs.system, &rs.roots, &m)?;
    let mut r = Report::new();
    r.put("d", rs.roots.len());
    r.put("set", &m);
    r.put("det", f.format(&rep.det_m));
    r.put("jacobian_product", f.format(&rep.jacobian_product));
    r.put("res", f.format(&rep.res_value));
    r.put("delta", f.format(&rep.delta_value));
    r.put("res_exponent", rep.res_exponent);
    r.put("c", rep.sign_constant);
    r.put("closing_sign", rep.closing_sign.map_or("none".to_string(), |s| s.to_string()));
    r.put("residual", f.format(&rep.identity_residual));
    if let Some(holds) = rep.constant_holds {
        r.put("constant_holds", holds);
    }
    r.success = rep.closing_sign.is_some() && rep.constant_holds != Some(false);
    Ok(r)
}

fn dispatch(cmd: &Command) -> Result<Report> {
    let field = match cmd {
        Command::Hilbert { degrees, tau } => return hilbert(degrees, *tau),
        Command::VandermondeVerify { degrees, field, set, monomials, seed } => {
            return vandermonde(degrees, field, *set, monomials.as_deref(), *seed)
        }
        Command::Resultant(a) | Command::Upsilon(a) => &a.field,
        Command::Subresultant { sys, .. }
        | Command::BasisCheck { sys, .. }
        | Command::Factor { sys, .. }
        | Command::Mulmat { sys, .. } => &sys.field,
    };
    match field.parse::<FieldSpec>()? {
        FieldSpec::Rationals => run_with_field(Rationals, cmd),
        FieldSpec::Prime(f) => run_with_field(f, cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.cmd) {
        Ok(report) => {
            for (k, v) in &report.lines {
                println!("{k}={v}");
            }
            ExitCode::from(if report.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

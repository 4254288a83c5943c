use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use canred::enumerate::{survey, SurveyOptions};
use canred::idealization::{over_semigroups, verify_trace_extension_bijection, IdealizationReport};
use canred::invariants::{
    blow_up, canonical_ideal, canonical_powers, hilbert_table, ClassificationReport,
    CLASSIFY_CHECKS,
};
use canred::semigroup::{parse_int_list, SemigroupJson};
use canred::{Check, Error, NumericalSemigroup, RelativeIdeal};

#[derive(Parser, Debug)]
#[command(name = "canred", version, about = "Canonical reduction numbers of numerical semigroup rings")]
struct Cli {
    /// Output format; defaults to table on a terminal and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semigroup invariants.
    Info { gens: String },
    /// Canonical ideal, canonical reduction number and blow-up.
    Canred {
        gens: String,
        /// List K^0 .. K^(can_red + 1).
        #[arg(long)]
        show_powers: bool,
    },
    /// Hilbert function of the canonical ideal.
    Hilbert {
        gens: String,
        #[arg(long = "n")]
        n: Option<usize>,
    },
    /// Full classification with cross-checks.
    Classify { gens: String },
    /// Idealization R ⋉ M for a symmetric semigroup and a monomial module.
    Idealize {
        gens: String,
        /// Generators of the module as a relative ideal.
        #[arg(long, allow_hyphen_values = true)]
        module: String,
    },
    /// Over-semigroups and the trace-ideal correspondence.
    Overrings { gens: String },
    /// Run cross-checks over every semigroup up to a genus.
    Survey {
        #[arg(long)]
        genus: i64,
        /// Comma-separated check names (default: all).
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write one row per semigroup to this file.
        #[arg(long)]
        csv: Option<String>,
    },
}

enum Failure {
    Input(String),
    Violation(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Violation(e.to_string()),
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    format: Format,
}

impl Output {
    fn emit(&self, value: &impl Serialize, table: impl FnOnce() -> String) -> Result<(), Failure> {
        let mut out = io::stdout().lock();
        match self.format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(value).expect("reports serialize")
            )?,
            Format::Table => write!(out, "{}", table())?,
            Format::Csv => {
                return Err(Failure::Input(
                    "csv output is only available for survey".into(),
                ))
            }
        }
        Ok(())
    }
}

fn semigroup(gens: &str) -> Result<Arc<NumericalSemigroup>, Failure> {
    Ok(Arc::new(gens.parse::<NumericalSemigroup>()?))
}

fn ints(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn info(h: &NumericalSemigroup) -> String {
    format!(
        "semigroup     {h}\nmultiplicity  {}\nfrobenius     {}\nconductor     {}\ngenus         {}\ntype          {}\npf            {{{}}}\ngaps          {{{}}}\napery         {{{}}}\nsymmetric     {}\n",
        h.multiplicity(),
        h.frobenius(),
        h.conductor(),
        h.genus(),
        h.cm_type(),
        ints(h.pseudo_frobenius()),
        ints(&h.gaps()),
        ints(h.apery()),
        h.is_symmetric(),
    )
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format.unwrap_or(if io::stdout().is_terminal() {
        Format::Table
    } else {
        Format::Json
    });
    let out = Output { format };
    match cli.command {
        Command::Info { gens } => {
            let h = semigroup(&gens)?;
            let mut v = serde_json::to_value(SemigroupJson::from(&*h)).expect("serializes");
            v["conductor"] = json!(h.conductor());
            v["gaps"] = json!(h.gaps());
            v["apery"] = json!(h.apery());
            v["symmetric"] = json!(h.is_symmetric());
            out.emit(&v, || info(&h))
        }
        Command::Canred { gens, show_powers } => {
            let h = semigroup(&gens)?;
            let k = canonical_ideal(&h);
            let n = canred::invariants::can_red(&h)?;
            let b = blow_up(&k)?;
            let powers: Vec<RelativeIdeal> = if show_powers {
                canonical_powers(&h, n + 1)
            } else {
                Vec::new()
            };
            let mut v = json!({
                "semigroup": SemigroupJson::from(&*h),
                "canonical": k.to_json(),
                "can_red": n,
                "blow_up": b.to_json(),
            });
            if show_powers {
                v["powers"] = json!(powers.iter().map(RelativeIdeal::to_json).collect::<Vec<_>>());
            }
            out.emit(&v, || {
                let mut s = format!("semigroup  {h}\nK          {k}\ncan_red = {n}\nblow-up    {b}\n");
                for (i, p) in powers.iter().enumerate() {
                    s += &format!("K^{i:<8} {p}\n");
                }
                s
            })
        }
        Command::Hilbert { gens, n } => {
            let h = semigroup(&gens)?;
            let n = n.unwrap_or(h.multiplicity() as usize + 2);
            let t = hilbert_table(&h, n)?;
            out.emit(&t, || {
                let mut s = format!(
                    "semigroup      {h}\ne0 = {}\ne1 = {}\nstabilization = {}\n  n  HF(n)  e0*n-e1\n",
                    t.e0, t.e1, t.stabilization
                );
                for (i, v) in t.values.iter().enumerate() {
                    s += &format!("{i:>3}  {v:>5}  {:>7}\n", t.linear_part(i));
                }
                s
            })
        }
        Command::Classify { gens } => {
            let h = semigroup(&gens)?;
            let report = ClassificationReport::compute(&h)?;
            let violations = report.violations(&CLASSIFY_CHECKS)?;
            let mut v = serde_json::to_value(report.to_json()).expect("serializes");
            v["checks"] = json!(CLASSIFY_CHECKS
                .iter()
                .map(|c| json!({
                    "name": c.name(),
                    "passed": !violations.iter().any(|x| x.check == *c),
                }))
                .collect::<Vec<_>>());
            v["violations"] = json!(violations);
            out.emit(&v, || {
                let r = &report;
                let mut s = format!(
                    "semigroup          {h}\ncan_red            {}\ne0                 {}\ne1                 {}\ntype               {}\ngenus              {}\ngorenstein         {}\nalmost_gorenstein  {}\nnearly_gorenstein  {}\ncanonical          {}\ntrace              {}\nblow-up            {}\nhilbert            {:?}\n",
                    r.can_red, r.e0, r.e1, r.cm_type, h.genus(), r.gorenstein,
                    r.almost_gorenstein, r.nearly_gorenstein, r.canonical, r.trace,
                    r.blow_up, r.hilbert.values,
                );
                for c in CLASSIFY_CHECKS {
                    let ok = !violations.iter().any(|x| x.check == c);
                    s += &format!("check {:<20} {}\n", c.name(), if ok { "ok" } else { "FAILED" });
                }
                s
            })?;
            match violations.into_iter().next() {
                Some(v) => Err(Failure::Violation(v.to_string())),
                None => Ok(()),
            }
        }
        Command::Idealize { gens, module } => {
            let h = semigroup(&gens)?;
            let e = RelativeIdeal::from_elements(&h, &parse_int_list(&module)?)?;
            let r = IdealizationReport::compute(&e)?;
            if let (Some(a), Some(b)) = (r.type_via_socle, r.type_via_mu) {
                if a != b {
                    return Err(Failure::Violation(format!(
                        "type formulas disagree: r(R/I)+2 = {a}, μ(H-I)+1 = {b}"
                    )));
                }
            }
            out.emit(&r.to_json(), || {
                let w = r
                    .witness
                    .as_ref()
                    .map_or("none".to_string(), |i| i.to_string());
                format!(
                    "semigroup        {h}\nmodule           {}\ntrace_iso        {}\ncanred_le2       {}\nwitness I        {w}\ngorenstein A     {}\ntype_via_socle   {:?}\ntype_via_mu      {:?}\n",
                    r.module, r.trace_iso, r.canred_le2, r.gorenstein, r.type_via_socle, r.type_via_mu
                )
            })
        }
        Command::Overrings { gens } => {
            let h = semigroup(&gens)?;
            let overs = over_semigroups(&h)?;
            let unit = RelativeIdeal::unit(&h);
            let rows: Vec<(RelativeIdeal, RelativeIdeal)> = overs
                .iter()
                .map(|b| (b.clone(), unit.colon(b).expect("same parent")))
                .collect();
            let bijection = if h.is_symmetric() {
                Some(verify_trace_extension_bijection(&h)?)
            } else {
                None
            };
            let v = json!({
                "semigroup": SemigroupJson::from(&*h),
                "over_semigroups": rows.iter().map(|(b, i)| json!({
                    "semigroup": b.to_json(),
                    "conductor_ideal": i.to_json(),
                })).collect::<Vec<_>>(),
                "bijection": bijection,
            });
            out.emit(&v, || {
                let mut s = format!("semigroup {h}: {} over-semigroups\n", rows.len());
                for (b, i) in &rows {
                    s += &format!("  B = {b:<24} H - B = {i}\n");
                }
                s += &format!("trace-ideal bijection: {bijection:?}\n");
                s
            })?;
            if bijection == Some(false) {
                return Err(Failure::Violation("trace-ideal correspondence failed".into()));
            }
            Ok(())
        }
        Command::Survey {
            genus,
            checks,
            jobs,
            csv,
        } => {
            let checks = match checks {
                Some(list) => list
                    .split(',')
                    .map(str::parse::<Check>)
                    .collect::<Result<Vec<_>, _>>()?,
                None => Check::ALL.to_vec(),
            };
            let opts = SurveyOptions {
                genus_max: genus,
                checks,
                jobs,
                keep_rows: csv.is_some() || format == Format::Csv,
            };
            let report = survey(&opts)?;
            if let Some(path) = csv {
                report
                    .write_csv(File::create(&path)?)
                    .map_err(|e| Failure::Input(e.to_string()))?;
            }
            if format == Format::Csv {
                report
                    .write_csv(io::stdout().lock())
                    .map_err(|e| Failure::Input(e.to_string()))?;
            } else {
                out.emit(&report, || {
                    let mut s = format!(
                        "genus ≤ {}: {} semigroups {:?}\n",
                        report.genus_max, report.total, report.per_genus
                    );
                    s += &format!("classes: {:?}\n", report.counts);
                    s += &format!("can_red histogram: {:?}\n", report.can_red_histogram);
                    for (c, n) in &report.check_visits {
                        s += &format!("check {:<20} visited {n}\n", c.name());
                    }
                    s += &format!("violations: {}\n", report.violations.len());
                    for v in &report.violations {
                        s += &format!("  {v}\n");
                    }
                    s
                })?;
            }
            if report.has_violations() {
                return Err(Failure::Violation(format!(
                    "{} violations",
                    report.violations.len()
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("usage error"));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(m)) => {
            eprintln!("bound overrun: {m}");
            ExitCode::from(3)
        }
    }
}

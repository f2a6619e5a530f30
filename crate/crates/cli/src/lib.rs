//! The `segal` command line.

use clap::{Parser, Subcommand, ValueEnum};
use segal_core::doublecat::{
    build_w, check_augmentation, check_double_functor, check_stable, hom_double_functors, validate_double_category,
    FiniteDoubleCategory,
};
use segal_core::equivalence::{path_double_cat, roundtrip_check, sdot, sdot_oracle_check, RoundtripInput};
use segal_core::examples::{expected_double_cat, validate_partial_monoid, Example, DEFAULT_BUDGET};
use segal_core::io::{self, Document, Mode};
use segal_core::simplicial::{
    check_1segal, check_2segal_pathspace, check_2segal_triangulations, check_simplicial_map, check_unital,
    enumerate_triangulations, validate_simplicial, TruncatedSimplicialSet, DEFAULT_DIM,
};
use segal_core::{Error, Report};
use serde_json::{json, Value};
use std::io::Write;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable holding the default truncation level.
pub const TRUNCATION_VAR: &str = "SEGAL_TRUNCATION";

#[derive(Parser, Debug)]
#[command(name = "segal", version, about = "Unital 2-Segal sets and augmented stable double categories")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    /// Warn about unknown fields instead of rejecting the input.
    #[arg(long, global = true)]
    pub lenient: bool,
    /// Write the constructed document here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<String>,
    /// Cell budget for generators and constructions.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    #[value(name = "1segal")]
    OneSegal,
    #[value(name = "2segal")]
    TwoSegal,
    #[value(name = "2segal-path")]
    TwoSegalPath,
    Unital,
    Stable,
    Augmented,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    PartialMonoid,
    Graph,
    Cobordism,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the structural axioms of any document.
    Validate { file: String },
    /// Check one property of a simplicial set or double category.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        file: String,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// The S-construction of an augmented stable double category.
    Sdot {
        file: String,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// The path construction of a unital 2-Segal set.
    Path {
        file: String,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// Compare an object with its image under both constructions.
    Roundtrip {
        file: String,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// Generate the 2-Segal set of an example.
    Gen {
        #[arg(value_enum)]
        family: Family,
        config: String,
        #[arg(long)]
        truncation: Option<usize>,
        /// Emit the directly described double category instead.
        #[arg(long)]
        expected: bool,
    },
    /// List the triangulations of the (n+1)-gon with vertices 0..=n.
    Triangulations { n: usize },
    /// Compare a level of the S-construction with all double functors out of W_n.
    Oracle {
        file: String,
        #[arg(long)]
        level: usize,
    },
}

/// Everything a command produces.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Report,
    pub document: Option<String>,
    pub warnings: Vec<String>,
}

fn default_truncation() -> usize {
    std::env::var(TRUNCATION_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_DIM)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::Malformed(_) | Error::Budget { .. } => EXIT_MALFORMED,
        Error::Precondition(_) | Error::Incompatible(_) => EXIT_FAIL,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn error_report(e: &Error) -> Report {
    let mut r = Report::new();
    match e {
        Error::Precondition(w) => {
            r.verdict("precondition", &Err((**w).clone()));
        }
        other => {
            r.check("error", false, other.to_string());
        }
    }
    r
}

struct Ctx {
    mode: Mode,
    budget: usize,
    warnings: Vec<String>,
}

impl Ctx {
    fn read(&mut self, path: &str, expected: Option<&str>) -> Result<Document, Error> {
        let p = io::read_document(path, self.mode, expected)?;
        self.warnings.extend(p.warnings);
        Ok(p.document)
    }

    /// A simplicial set, generating it when the document is an example
    /// configuration.
    fn simplicial(&self, doc: Document, truncation: Option<usize>) -> Result<TruncatedSimplicialSet, Error> {
        let pick = |own: Option<usize>| truncation.or(own).unwrap_or_else(default_truncation);
        match doc {
            Document::Simplicial(x) => match truncation {
                Some(t) if t < x.dim() => x.truncate(t),
                _ => Ok(x),
            },
            Document::PartialMonoid(m, t) => Example::PartialMonoid(m).two_segal(pick(t), self.budget),
            Document::Graph(g, t) => Example::Graph(g).two_segal(pick(t), self.budget),
            Document::Cobordism(c, t) => Example::Cobordism(c).two_segal(pick(t), self.budget),
            other => Err(Error::Argument(format!("expected a simplicial set, found a {} document", other.kind()))),
        }
    }

    fn double(&self, doc: Document) -> Result<(FiniteDoubleCategory, Option<Vec<usize>>), Error> {
        match doc {
            Document::Double(d, a) => Ok((d, a)),
            other => Err(Error::Argument(format!("expected a double category, found a {} document", other.kind()))),
        }
    }

    fn augmented(&self, doc: Document) -> Result<(FiniteDoubleCategory, Vec<usize>), Error> {
        match self.double(doc)? {
            (d, Some(a)) => Ok((d, a)),
            (_, None) => Err(Error::Malformed("the double category has no augmentation".into())),
        }
    }
}

fn level_counts(r: &mut Report, prefix: &str, x: &TruncatedSimplicialSet) {
    for n in 0..=x.dim() {
        r.count(format!("{prefix}{n}"), x.len(n));
    }
}

fn double_counts(r: &mut Report, d: &FiniteDoubleCategory, a: Option<&[usize]>) {
    r.count("objects", d.n_objects());
    r.count("horizontal", d.hor.morphisms.len());
    r.count("vertical", d.ver.morphisms.len());
    r.count("squares", d.squares.len());
    if let Some(a) = a {
        r.count("augmentation", a.len());
    }
}

fn axioms(d: &FiniteDoubleCategory) -> Vec<String> {
    validate_double_category(d).iter().map(|v| v.to_string()).collect()
}

fn execute(cli: &Cli, ctx: &mut Ctx) -> Result<(Report, Option<String>), Error> {
    let mut r = Report::new();
    let mut document = None;
    match &cli.command {
        Command::Validate { file } => match ctx.read(file, None)? {
            Document::Simplicial(x) => {
                level_counts(&mut r, "X", &x);
                let p: Vec<String> = validate_simplicial(&x).iter().map(|v| v.to_string()).collect();
                r.problems("simplicial identities", &p);
            }
            Document::Double(d, a) => {
                double_counts(&mut r, &d, a.as_deref());
                r.problems("double category axioms", &axioms(&d));
                if let Some(a) = a {
                    r.verdict("augmentation", &check_augmentation(&d, &a));
                }
            }
            Document::SimplicialMap { map, source, target } => {
                r.problems("simplicial map", &check_simplicial_map(&source, &target, &map));
            }
            Document::DoubleFunctor { functor, source, target } => {
                let augs = match (&source.1, &target.1) {
                    (Some(a), Some(b)) => Some((a.as_slice(), b.as_slice())),
                    _ => None,
                };
                r.problems("double functor", &check_double_functor(&functor, &source.0, &target.0, augs));
            }
            Document::PartialMonoid(m, _) => {
                r.count("elements", m.elements.len());
                r.problems("partial monoid", &validate_partial_monoid(&m));
            }
            Document::Graph(g, _) => {
                r.count("vertices", g.vertices.len());
                r.problems("graph", &g.validate());
            }
            Document::Cobordism(..) => {
                r.check("cobordism caps", true, "");
            }
        },
        Command::Check { property, file, truncation } => {
            let doc = ctx.read(file, None)?;
            match property {
                Property::Stable => {
                    let (d, _) = ctx.double(doc)?;
                    double_counts(&mut r, &d, None);
                    r.verdict("stable", &check_stable(&d));
                }
                Property::Augmented => {
                    let (d, a) = ctx.augmented(doc)?;
                    double_counts(&mut r, &d, Some(&a));
                    r.verdict("augmented", &check_augmentation(&d, &a));
                }
                p => {
                    let x = ctx.simplicial(doc, *truncation)?;
                    level_counts(&mut r, "X", &x);
                    let (name, v) = match p {
                        Property::OneSegal => ("1-Segal", check_1segal(&x)),
                        Property::TwoSegal => ("2-Segal", check_2segal_triangulations(&x)),
                        Property::TwoSegalPath => ("2-Segal (path spaces)", check_2segal_pathspace(&x)),
                        _ => ("unital", check_unital(&x)),
                    };
                    r.verdict(name, &v);
                }
            }
        }
        Command::Sdot { file, max_dim } => {
            let doc = ctx.read(file, None)?;
            let (d, a) = ctx.augmented(doc)?;
            let s = sdot(&d, &a, max_dim.unwrap_or_else(default_truncation))?;
            level_counts(&mut r, "S", &s.set);
            document = Some(io::simplicial_to_string(&s.set));
        }
        Command::Path { file, truncation } => {
            let doc = ctx.read(file, None)?;
            let x = ctx.simplicial(doc, *truncation)?;
            let (d, a) = path_double_cat(&x)?;
            double_counts(&mut r, &d, Some(&a));
            document = Some(io::double_to_string(&d, Some(&a)));
        }
        Command::Roundtrip { file, truncation } => match ctx.read(file, None)? {
            Document::Double(d, a) => {
                let a = a.ok_or_else(|| Error::Malformed("the double category has no augmentation".into()))?;
                r = roundtrip_check(RoundtripInput::Double(&d, &a));
            }
            doc => {
                let x = ctx.simplicial(doc, *truncation)?;
                r = roundtrip_check(RoundtripInput::Simplicial(&x));
            }
        },
        Command::Gen { family, config, truncation, expected } => {
            let kind = match family {
                Family::PartialMonoid => "partial_monoid",
                Family::Graph => "graph",
                Family::Cobordism => "cobordism",
            };
            let doc = ctx.read(config, Some(kind))?;
            if *expected {
                let example = match doc {
                    Document::PartialMonoid(m, _) => Example::PartialMonoid(m),
                    Document::Graph(g, _) => Example::Graph(g),
                    Document::Cobordism(c, _) => Example::Cobordism(c),
                    _ => unreachable!("kind fixed by the family"),
                };
                let (d, a) = expected_double_cat(&example, ctx.budget)?;
                double_counts(&mut r, &d, Some(&a));
                document = Some(io::double_to_string(&d, Some(&a)));
            } else {
                let x = ctx.simplicial(doc, *truncation)?;
                level_counts(&mut r, "X", &x);
                document = Some(io::simplicial_to_string(&x));
            }
        }
        Command::Triangulations { n } => {
            if *n > 12 {
                return Err(Error::Argument("triangulations are listed for n <= 12".into()));
            }
            let ts = enumerate_triangulations(*n);
            let problems: Vec<String> =
                ts.iter().flat_map(|t| t.validate().into_iter().map(move |p| format!("{t:?}: {p}"))).collect();
            r.problems("triangulations valid", &problems);
            r.count("triangulations", ts.len());
            let list: Vec<Value> = ts.iter().map(|t| json!(t.triangles())).collect();
            document = Some(match cli.report {
                ReportFormat::Json => io::render(&json!({ "n": n, "triangulations": list })),
                ReportFormat::Text => ts
                    .iter()
                    .map(|t| {
                        let tri: Vec<String> =
                            t.triangles().iter().map(|[a, b, c]| format!("{a}{b}{c}")).collect();
                        tri.join(" ") + "\n"
                    })
                    .collect(),
            });
        }
        Command::Oracle { file, level } => {
            let doc = ctx.read(file, None)?;
            let (d, a) = ctx.augmented(doc)?;
            let s = sdot(&d, &a, *level)?;
            let (w, wa) = build_w(*level);
            let functors = hom_double_functors(&w, &d, Some((&wa, &a)));
            r.count(format!("S{level}"), s.set.len(*level));
            r.count(format!("functors from W{level}"), functors.len());
            r.verdict("sdot agrees with the functor oracle", &sdot_oracle_check(&s, *level));
        }
    }
    Ok((r, document))
}

/// Runs one command without touching standard output.
pub fn run_command(cli: &Cli) -> Outcome {
    let mut ctx = Ctx {
        mode: if cli.lenient { Mode::Lenient } else { Mode::Strict },
        budget: cli.budget,
        warnings: Vec::new(),
    };
    match execute(cli, &mut ctx) {
        Ok((report, document)) => Outcome {
            code: if report.all_pass() { EXIT_PASS } else { EXIT_FAIL },
            report,
            document,
            warnings: ctx.warnings,
        },
        Err(e) => Outcome { code: exit_code(&e), report: error_report(&e), document: None, warnings: ctx.warnings },
    }
}

fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => io::render(&serde_json::to_value(report).expect("reports serialize")),
        ReportFormat::Text => report.to_text(),
    }
}

/// Parses `argv`, runs the command and writes its document and report.
///
/// A document goes to `--output` when given and to `out` otherwise; the
/// report then goes to `err`. Without a document the report goes to `out`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = target.write_all(text.as_bytes());
            return if code == 0 { EXIT_PASS } else { EXIT_MALFORMED };
        }
    };
    let o = run_command(&cli);
    for w in &o.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let report = render_report(&o.report, cli.report);
    match (&o.document, &cli.output) {
        (Some(doc), Some(path)) => {
            if let Err(e) = std::fs::write(path, doc) {
                let _ = writeln!(err, "cannot write {path}: {e}");
                return EXIT_MALFORMED;
            }
            let _ = out.write_all(report.as_bytes());
        }
        (Some(doc), None) => {
            let _ = out.write_all(doc.as_bytes());
            let _ = err.write_all(report.as_bytes());
        }
        (None, _) => {
            let _ = out.write_all(report.as_bytes());
        }
    }
    o.code
}

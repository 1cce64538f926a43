use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use neighborly::apolarity::{ann_component, hilbert_function, socle_check, top_socle_dim};
use neighborly::constructions::{construct, provenance, ConstructionKind};
use neighborly::mpoly::text::{parse_poly, write_poly};
use neighborly::search::{det_identity_check, enumerate_2222};
use neighborly::srbridge::{cross_check, load_complex, sphere_is_neighborly, SOURCE_COMMENT};
use neighborly::verify::{
    duality_check, even_d_type_rule, is_neighborly, render_tsv, table_rows, TypeRule,
};
use neighborly::{BalancedPoly, ColorSet, Error, FieldSpec};

#[derive(Parser)]
#[command(
    name = "neighborly",
    version,
    about = "Balanced neighborly polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,

    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write the neighborly polynomial of type (k,k,k,k).
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        field: FieldSpec,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print H(f,S) for every S and decide neighborliness.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated type; defaults to the polynomial's shape.
        #[arg(long = "type", value_delimiter = ',')]
        ty: Option<Vec<usize>>,
        /// Read coefficients into this field instead of the file's.
        #[arg(long)]
        field: Option<FieldSpec>,
    },
    /// Print the Hilbert function of R/ann(f) with kernel dimensions.
    Hilbert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        field: Option<FieldSpec>,
    },
    /// Enumerate all (2,2,2,2) tensors over F2 or F3.
    Search2222 {
        #[arg(long)]
        field: FieldSpec,
        /// Directory receiving one polynomial file per witness.
        #[arg(long)]
        emit_witnesses: Option<PathBuf>,
    },
    /// Check det(M) - det(N) - det(P) over the integers and mod 2.
    Detidentity,
    /// Extract the polynomial of a balanced sphere given by its facets.
    ///
    /// A complex with N_i vertices of color i gives a polynomial of shape
    /// (N_1 - 1, ..., N_d - 1); sphere-neighborliness is tested against that
    /// type.
    Sphere2poly {
        #[arg(long)]
        facets: PathBuf,
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a subcommand: text for stdout and whether the check held.
struct Report {
    stdout: String,
    verified: bool,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(m) => write!(f, "{m}"),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_poly(path: &Path, field: Option<FieldSpec>) -> Result<BalancedPoly, Failure> {
    let src = read(path)?;
    parse_poly(&src, field).map_err(|e| match e {
        Error::Parse { .. } => Failure::Io(format!("{}: {e}", path.display())),
        e => Failure::Lib(e),
    })
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn fmt_type(ty: &[usize]) -> String {
    let parts: Vec<String> = ty.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn run_construct(k: usize, field: FieldSpec, out: Option<&Path>) -> Result<Report, Failure> {
    let kind = ConstructionKind::for_k(k)?;
    let f = construct(k, field)?;
    write_out(out, &write_poly(&f, &[provenance(kind, k)]))?;
    let stdout = match out {
        None => String::new(),
        Some(p) => format!("wrote {} terms to {}\n", f.nnz(), p.display()),
    };
    Ok(Report {
        stdout,
        verified: true,
    })
}

fn run_verify(
    format: Format,
    input: &Path,
    ty: Option<Vec<usize>>,
    field: Option<FieldSpec>,
) -> Result<Report, Failure> {
    let f = load_poly(input, field)?;
    let ty = ty.unwrap_or_else(|| f.shape().dims().to_vec());
    let verdict = is_neighborly(&f, &ty)?;
    let duality = duality_check(&f);
    let rows = table_rows(&duality.table, &ty);
    let rule = even_d_type_rule(&ty);
    let stdout = match format {
        Format::Json => json_text(json!({
            "field": f.field(),
            "type": ty,
            "table": rows,
            "neighborly": verdict.neighborly,
            "witness": verdict.witness,
            "dualityViolations": duality.violations,
            "typeRule": rule,
        })),
        Format::Tsv => {
            let mut s = render_tsv(&rows);
            let _ = writeln!(s, "# field {} type {}", f.field(), fmt_type(&ty));
            if rule == TypeRule::Impossible {
                let _ = writeln!(
                    s,
                    "# even d with unequal counts: no neighborly polynomial of this type"
                );
            }
            for v in &duality.violations {
                let _ = writeln!(s, "# duality violated at {v}");
            }
            match &verdict.witness {
                None => s.push_str("neighborly\tyes\n"),
                Some(w) => {
                    let _ = writeln!(
                        s,
                        "neighborly\tno\t{}\texpected {}\tachieved {}",
                        w.set, w.expected, w.achieved
                    );
                }
            }
            s
        }
    };
    Ok(Report {
        stdout,
        verified: verdict.neighborly,
    })
}

fn run_hilbert(format: Format, input: &Path, field: Option<FieldSpec>) -> Result<Report, Failure> {
    let f = load_poly(input, field)?;
    let table = hilbert_function(&f)?;
    let ty = f.shape().dims().to_vec();
    let mut rows = table_rows(&table, &ty);
    for row in &mut rows {
        row.ann_dim = Some(ann_component(&f, row.set)?.dim());
    }
    let socle = socle_check(&f)?;
    let top = top_socle_dim(&f);
    let stdout = match format {
        Format::Json => json_text(json!({
            "field": f.field(),
            "table": rows,
            "socle": socle,
            "topSocleDim": top,
        })),
        Format::Tsv => {
            let mut s = render_tsv(&rows);
            let _ = writeln!(s, "top_socle_dim\t{top}");
            let _ = write!(s, "socle\t{}", if socle.passed { "pass" } else { "fail" });
            for v in &socle.failures {
                let _ = write!(s, "\t{v}");
            }
            s.push('\n');
            s
        }
    };
    Ok(Report {
        stdout,
        verified: socle.passed && top == 1,
    })
}

fn run_search(format: Format, field: FieldSpec, emit: Option<&Path>) -> Result<Report, Failure> {
    let report = enumerate_2222(field, 0)?;
    if let Some(dir) = emit {
        fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
        for (w, f) in report.witnesses.iter().zip(report.witness_polys()?) {
            let path = dir.join(format!("witness_{}.poly", w.index));
            let text = write_poly(&f, &[format!("search2222 candidate={}", w.index)]);
            fs::write(&path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        }
    }
    let stdout = match format {
        Format::Json => json_text(serde_json::to_value(&report).expect("serializable")),
        Format::Tsv => {
            let mut s = String::new();
            let c = report.per_flattening_nonsingular_counts;
            let _ = writeln!(s, "field\t{}", report.field);
            let _ = writeln!(s, "total_candidates\t{}", report.total_candidates);
            let _ = writeln!(s, "nonsingular_{{1,2}}\t{}", c[0]);
            let _ = writeln!(s, "nonsingular_{{1,3}}\t{}", c[1]);
            let _ = writeln!(s, "nonsingular_{{1,4}}\t{}", c[2]);
            let _ = writeln!(s, "all_three\t{}", report.all_three_count);
            let _ = writeln!(s, "singleton_checks\t{}", report.singleton_checks);
            let _ = writeln!(s, "neighborly_count\t{}", report.neighborly_count);
            for w in &report.witnesses {
                let digits: Vec<String> = w.coefficients.iter().map(u32::to_string).collect();
                let _ = writeln!(s, "witness\t{}\t{}", w.index, digits.join(" "));
            }
            s
        }
    };
    let verified = field.characteristic() != 2 || report.neighborly_count == 0;
    Ok(Report { stdout, verified })
}

fn run_detidentity(format: Format) -> Result<Report, Failure> {
    let id = det_identity_check();
    let stdout = match format {
        Format::Json => json_text(json!({
            "determinantTerms": id.dets.iter().map(|d| d.len()).collect::<Vec<_>>(),
            "integerResidualTerms": id.integer_residual.len(),
            "integerResidualZero": id.holds_over_integers(),
            "integerResidual": id.integer_residual.to_string(),
            "mod2ResidualTerms": id.mod2_residual.len(),
            "mod2ResidualZero": id.holds_mod2(),
        })),
        Format::Tsv => {
            let mut s = String::new();
            let terms: Vec<String> = id.dets.iter().map(|d| d.len().to_string()).collect();
            let _ = writeln!(s, "determinant_terms\t{}", terms.join("\t"));
            let _ = writeln!(s, "integer_residual_terms\t{}", id.integer_residual.len());
            let _ = writeln!(s, "integer_residual_zero\t{}", id.holds_over_integers());
            let _ = writeln!(s, "mod2_residual_terms\t{}", id.mod2_residual.len());
            let _ = writeln!(s, "mod2_residual_zero\t{}", id.holds_mod2());
            let _ = writeln!(s, "integer_residual\t{}", id.integer_residual);
            s
        }
    };
    Ok(Report {
        stdout,
        verified: id.holds_mod2(),
    })
}

fn run_sphere2poly(
    format: Format,
    facets: &Path,
    field: FieldSpec,
    out: Option<&Path>,
) -> Result<Report, Failure> {
    let complex = load_complex(facets).map_err(|e| match e {
        Error::Parse { .. } => Failure::Io(format!("{}: {e}", facets.display())),
        e => Failure::Lib(e),
    })?;
    let verdict = sphere_is_neighborly(&complex, field);
    let check = cross_check(&complex, field)?;
    if let Some(p) = out {
        write_out(
            Some(p),
            &write_poly(&check.poly, &[SOURCE_COMMENT.to_string()]),
        )?;
    }
    let sets = ColorSet::all_by_size(complex.d());
    let stdout = match format {
        Format::Json => json_text(json!({
            "field": field,
            "claimedType": verdict.claimed_type,
            "sphereNeighborly": verdict.neighborly,
            "witness": verdict.witness,
            "table": sets.iter().map(|&s| json!({
                "set": s,
                "quotient": check.quotient.get(s),
                "achieved": check.poly_table.get(s),
                "ok": check.quotient.get(s) == check.poly_table.get(s),
            })).collect::<Vec<_>>(),
            "crossCheck": check.passed(),
            "polynomial": if out.is_none() { Some(write_poly(&check.poly, &[])) } else { None },
        })),
        Format::Tsv => {
            let mut s = String::from("S\tquotient\tachieved\tok\n");
            for &set in &sets {
                let (a, b) = (check.quotient.get(set), check.poly_table.get(set));
                let _ = writeln!(s, "{set}\t{a}\t{b}\t{}", a == b);
            }
            let _ = writeln!(s, "# claimed type {}", fmt_type(&verdict.claimed_type));
            match &verdict.witness {
                None => s.push_str("sphere_neighborly\tyes\n"),
                Some(w) => {
                    let _ = writeln!(
                        s,
                        "sphere_neighborly\tno\t{}\texpected {}\tachieved {}",
                        w.set, w.expected, w.achieved
                    );
                }
            }
            let _ = writeln!(
                s,
                "cross_check\t{}",
                if check.passed() { "pass" } else { "fail" }
            );
            if out.is_none() {
                s.push_str(&write_poly(&check.poly, &[SOURCE_COMMENT.to_string()]));
            }
            s
        }
    };
    Ok(Report {
        stdout,
        verified: check.passed(),
    })
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Construct { k, field, out } => run_construct(k, field, out.as_deref()),
        Command::Verify { input, ty, field } => run_verify(format, &input, ty, field),
        Command::Hilbert { input, field } => run_hilbert(format, &input, field),
        Command::Search2222 {
            field,
            emit_witnesses,
        } => run_search(format, field, emit_witnesses.as_deref()),
        Command::Detidentity => run_detidentity(format),
        Command::Sphere2poly { facets, field, out } => {
            run_sphere2poly(format, &facets, field, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(report) => {
            print!("{}", report.stdout);
            if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Batch command-line front end for the heckelab checks.
//!
//! Every subcommand runs a reproducible computation and writes a
//! machine-readable report (JSON by default, CSV with `--format csv`).
//! Exit codes: 0 when every check passes, 1 when a mathematical check
//! fails, 2 for usage or domain errors.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use heckelab_core::bernstein;
use heckelab_core::coxeter::{
    enumerate_up_to_length, AffinePermutation, FinitePermutation, Permutation, Word,
};
use heckelab_core::fqsl2::{self, NCPoly, RelationMode, RepVariant, TruncatedRep};
use heckelab_core::hecke::{self, HeckeElement};
use heckelab_core::schur::{self, DgMode};
use heckelab_core::specht::{self, Partition};
use heckelab_core::CoreError;

use report::{complex_value, CheckRecord, Report};

#[derive(Parser)]
#[command(
    name = "heckelab",
    version,
    about = "Exact checks for affine Hecke algebras, Specht modules, v-Schur algebras, and the quantized SL2 function algebra"
)]
struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Seed for randomized spot checks (byte-identical reports per seed).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupType {
    Finite,
    Affine,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric and affine symmetric group computations.
    Coxeter {
        #[command(subcommand)]
        cmd: CoxeterCmd,
    },
    /// Hecke algebra products and presentation checks.
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    /// Bernstein-presentation relation checks.
    Bernstein {
        #[command(subcommand)]
        cmd: BernsteinCmd,
    },
    /// Specht modules and the l-regularity dichotomy.
    Specht {
        #[command(subcommand)]
        cmd: SpechtCmd,
    },
    /// v-Schur algebras, Schur-Weyl duality, and the S(2,d) presentation.
    Schur {
        #[command(subcommand)]
        cmd: SchurCmd,
    },
    /// Quantized SL2 function algebra: rewriting and representations.
    Fq {
        #[command(subcommand)]
        cmd: FqCmd,
    },
}

#[derive(Subcommand)]
enum CoxeterCmd {
    /// Reduced word and length of a window-notation permutation.
    Word {
        #[arg(long, value_enum, default_value_t = GroupType::Finite)]
        r#type: GroupType,
        #[arg(long)]
        rank: usize,
        /// Window notation, e.g. "[3,1,2]".
        #[arg(long)]
        window: String,
    },
    /// All elements of length at most the bound.
    Enumerate {
        #[arg(long, value_enum, default_value_t = GroupType::Finite)]
        r#type: GroupType,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Product of two elements in the T basis.
    Mul {
        #[arg(long, value_enum, default_value_t = GroupType::Finite)]
        r#type: GroupType,
        #[arg(long)]
        rank: usize,
        /// Left factor, e.g. "T[s1] + v^-2*T[]".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Length cutoff guard for affine products.
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Braid, quadratic, and length-additivity relations up to a length
    /// bound, plus seeded associativity spot checks.
    Verify {
        #[arg(long, value_enum, default_value_t = GroupType::Finite)]
        r#type: GroupType,
        #[arg(long)]
        rank: usize,
        /// Length bound for the enumeration.
        #[arg(long)]
        cutoff: usize,
        /// Number of random associativity triples.
        #[arg(long, default_value_t = 5)]
        random_triples: usize,
    },
}

#[derive(Subcommand)]
enum BernsteinCmd {
    /// All Bernstein relations as exact identities, plus the lattice box.
    Check {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 8)]
        cutoff: usize,
        /// Also verify X^a X^b = X^(a+b) on a coordinate box.
        #[arg(long)]
        box_radius: Option<i64>,
    },
}

#[derive(Subcommand)]
enum SpechtCmd {
    /// Specht and D-module dimensions per partition of n.
    Table {
        #[arg(long)]
        n: usize,
        /// Root-of-unity orders, comma separated (e.g. "2,3").
        #[arg(long, default_value = "2,3")]
        l: String,
        /// Evaluate the D modules at primitive l-th roots of unity (always
        /// on; kept as an explicit flag for scripting clarity).
        #[arg(long, default_value_t = true)]
        q_root: bool,
        /// Generic evaluation point for dim S (quadratic parameter q).
        #[arg(long, conflicts_with = "v")]
        q: Option<f64>,
        /// Generic evaluation point given as v (then q = v^-2).
        #[arg(long)]
        v: Option<f64>,
    },
    /// Dimension of one Specht module at a chosen point.
    Dim {
        /// Partition, e.g. "3,1".
        #[arg(long)]
        partition: String,
        #[arg(long, conflicts_with = "v")]
        q: Option<f64>,
        #[arg(long)]
        v: Option<f64>,
    },
}

#[derive(Subcommand)]
enum SchurCmd {
    /// Double-coset basis of S(n, r) against the closed-form dimension.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Schur-Weyl commutant check on the tensor space.
    Duality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = GroupType::Finite)]
        r#type: GroupType,
        /// Length cutoff for the (non-conclusive) affine mode.
        #[arg(long, default_value_t = 3)]
        cutoff: usize,
        #[arg(long, conflicts_with = "v")]
        q: Option<f64>,
        #[arg(long)]
        v: Option<f64>,
    },
    /// The E, F, K relations of S(2, d) on the d-fold tensor power.
    DgCheck {
        #[arg(long)]
        d: usize,
        /// Numeric evaluation point; omit for exact symbolic checking.
        #[arg(long)]
        v: Option<f64>,
        /// Residual tolerance in numeric mode.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RepKind {
    Pi,
    Tau,
}

#[derive(Subcommand)]
enum FqCmd {
    /// Rewrites a free-algebra element to normal form.
    NormalForm {
        /// Relation orientation: corrected or literal.
        #[arg(long, default_value = "corrected")]
        mode: String,
        /// Input element, e.g. "t12*t11" or "(v^2 - 1)*t11*t22 + 1".
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = fqsl2::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Relation residuals of a truncated representation.
    RepCheck {
        /// Operator family: corrected or literal.
        #[arg(long, default_value = "corrected")]
        variant: String,
        /// Relation orientation to test against.
        #[arg(long, default_value = "corrected")]
        mode: String,
        #[arg(long, value_enum, default_value_t = RepKind::Pi)]
        rep: RepKind,
        #[arg(long = "N", default_value_t = 32)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        v: f64,
        /// Circle parameter in turns: t = exp(2 pi i turns).
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        /// Excluded top boundary band width.
        #[arg(long, default_value_t = 1)]
        band: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Commutant dimension (1 signals irreducibility at the truncation).
    Commutant {
        #[arg(long, default_value = "corrected")]
        variant: String,
        #[arg(long, value_enum, default_value_t = RepKind::Pi)]
        rep: RepKind,
        #[arg(long = "N", default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        v: f64,
        #[arg(long, default_value_t = 0.0)]
        t: f64,
    },
    /// Equivalence test between two members of a representation family.
    Equiv {
        #[arg(long, value_enum, default_value_t = RepKind::Pi)]
        rep: RepKind,
        #[arg(long, default_value = "corrected")]
        variant: String,
        #[arg(long = "N", default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        v: f64,
        /// First circle parameter, in turns.
        #[arg(long, default_value_t = 0.0)]
        t1: f64,
        /// Second circle parameter, in turns.
        #[arg(long, default_value_t = 0.25)]
        t2: f64,
    },
    /// Tensor representation along a reduced word, with residual check.
    Tensor {
        /// Reduced word, e.g. "1 2" or "s1 s2".
        #[arg(long)]
        word: String,
        #[arg(long)]
        m: usize,
        #[arg(long = "N", default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        v: f64,
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        #[arg(long, default_value = "corrected")]
        variant: String,
        #[arg(long, default_value_t = 1)]
        band: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

fn turns_to_circle(turns: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * turns)
}

fn q_from_flags(q: Option<f64>, v: Option<f64>, default_q: f64) -> Complex64 {
    match (q, v) {
        (Some(q), _) => Complex64::new(q, 0.0),
        (None, Some(v)) => Complex64::new(v.powi(-2), 0.0),
        (None, None) => Complex64::new(default_q, 0.0),
    }
}

fn parse_word(s: &str) -> Result<Word, CoreError> {
    let letters = s
        .split_whitespace()
        .map(|tok| tok.strip_prefix('s').unwrap_or(tok))
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CoreError::Parse(format!("bad word '{s}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::new(letters))
}

fn threads_cap() -> Result<usize, CoreError> {
    match std::env::var("HECKELAB_THREADS") {
        Err(_) => Ok(1),
        Ok(raw) => raw.parse::<usize>().ok().filter(|&t| t >= 1).ok_or_else(|| {
            CoreError::Domain(format!(
                "HECKELAB_THREADS must be a positive integer, got '{raw}'"
            ))
        }),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}

fn run(cli: &Cli) -> Result<Report, CoreError> {
    let threads = threads_cap()?;
    let mut report = match &cli.command {
        Command::Coxeter { cmd } => run_coxeter(cmd)?,
        Command::Hecke { cmd } => run_hecke(cmd, cli.seed)?,
        Command::Bernstein { cmd } => run_bernstein(cmd)?,
        Command::Specht { cmd } => run_specht(cmd)?,
        Command::Schur { cmd } => run_schur(cmd)?,
        Command::Fq { cmd } => run_fq(cmd)?,
    };
    report.param("seed", json!(cli.seed));
    report.param("threads", json!(threads));
    Ok(report)
}

fn run_coxeter(cmd: &CoxeterCmd) -> Result<Report, CoreError> {
    match cmd {
        CoxeterCmd::Word { r#type, rank, window } => {
            let mut rep = Report::new("coxeter word");
            rep.param("rank", json!(rank));
            rep.param("window", json!(window));
            let (word, length, roundtrip) = match r#type {
                GroupType::Finite => {
                    rep.param("type", json!("finite"));
                    let w: FinitePermutation = window.parse()?;
                    if w.rank() != *rank {
                        return Err(CoreError::RankMismatch { left: w.rank(), right: *rank });
                    }
                    let word = w.reduced_word();
                    let back = FinitePermutation::from_word(*rank, &word)?;
                    (word, w.length(), back == w)
                }
                GroupType::Affine => {
                    rep.param("type", json!("affine"));
                    let w: AffinePermutation = window.parse()?;
                    if w.rank() != *rank {
                        return Err(CoreError::RankMismatch { left: w.rank(), right: *rank });
                    }
                    let (word, rho) = w.coxeter_decomposition();
                    let back = AffinePermutation::from_word(*rank, &word)?.compose(&rho)?;
                    (word, w.length(), back == w)
                }
            };
            rep.push(CheckRecord::new(
                "reduced-word",
                "smallest-descent reduced word composes back to the input",
                Some(roundtrip),
                json!({"word": word.to_string(), "length": length}),
            ));
            Ok(rep)
        }
        CoxeterCmd::Enumerate { r#type, rank, length } => {
            let mut rep = Report::new("coxeter enumerate");
            rep.param("rank", json!(rank));
            rep.param("length", json!(length));
            let windows: Vec<String> = match r#type {
                GroupType::Finite => {
                    rep.param("type", json!("finite"));
                    enumerate_up_to_length::<FinitePermutation>(*rank, *length)
                        .iter()
                        .map(|w| w.to_string())
                        .collect()
                }
                GroupType::Affine => {
                    rep.param("type", json!("affine"));
                    enumerate_up_to_length::<AffinePermutation>(*rank, *length)
                        .iter()
                        .map(|w| w.to_string())
                        .collect()
                }
            };
            rep.push(CheckRecord::new(
                "enumeration",
                "breadth-first enumeration up to the length bound",
                None,
                json!({"count": windows.len(), "elements": windows}),
            ));
            Ok(rep)
        }
    }
}

fn hecke_mul_generic<P: Permutation>(
    rank: usize,
    left: &str,
    right: &str,
    cutoff: Option<usize>,
) -> Result<Value, CoreError> {
    let a = HeckeElement::<P>::parse_with_rank(left, rank)?;
    let b = HeckeElement::<P>::parse_with_rank(right, rank)?;
    let prod = a.mul_with_cutoff(&b, cutoff)?;
    Ok(json!({
        "left": a.to_string(),
        "right": b.to_string(),
        "product": prod.to_string(),
        "terms": prod.num_terms(),
    }))
}

fn presentation_to_checks(report: &hecke::PresentationReport, rep: &mut Report) {
    for check in &report.checks {
        rep.push(CheckRecord::new(
            check.id.clone(),
            check.description.clone(),
            Some(check.pass),
            json!({"witness": check.witness}),
        ));
    }
}

fn associativity_checks<P: Permutation>(
    rank: usize,
    max_len: usize,
    triples: usize,
    seed: u64,
    rep: &mut Report,
) -> Result<(), CoreError> {
    for k in 0..triples {
        let a = hecke::sample_element::<P>(rank, max_len, 3, seed.wrapping_add(3 * k as u64));
        let b = hecke::sample_element::<P>(rank, max_len, 3, seed.wrapping_add(3 * k as u64 + 1));
        let c = hecke::sample_element::<P>(rank, max_len, 3, seed.wrapping_add(3 * k as u64 + 2));
        let lhs = a.mul(&b)?.mul(&c)?;
        let rhs = a.mul(&b.mul(&c)?)?;
        rep.push(CheckRecord::new(
            format!("associativity-{k}"),
            "(a b) c = a (b c) on seeded sparse elements, exact",
            Some(lhs == rhs),
            json!({}),
        ));
    }
    Ok(())
}

fn run_hecke(cmd: &HeckeCmd, seed: u64) -> Result<Report, CoreError> {
    match cmd {
        HeckeCmd::Mul { r#type, rank, left, right, cutoff } => {
            let mut rep = Report::new("hecke mul");
            rep.param("rank", json!(rank));
            rep.param("cutoff", json!(cutoff));
            let data = match r#type {
                GroupType::Finite => {
                    rep.param("type", json!("finite"));
                    hecke_mul_generic::<FinitePermutation>(*rank, left, right, *cutoff)?
                }
                GroupType::Affine => {
                    rep.param("type", json!("affine"));
                    hecke_mul_generic::<AffinePermutation>(*rank, left, right, *cutoff)?
                }
            };
            rep.push(CheckRecord::new("product", "Hecke product in the T basis", None, data));
            Ok(rep)
        }
        HeckeCmd::Verify { r#type, rank, cutoff, random_triples } => {
            let mut rep = Report::new("hecke verify");
            rep.param("rank", json!(rank));
            rep.param("cutoff", json!(cutoff));
            rep.param("random_triples", json!(random_triples));
            match r#type {
                GroupType::Finite => {
                    rep.param("type", json!("finite"));
                    let pres = hecke::verify_presentation::<FinitePermutation>(*rank, *cutoff)?;
                    presentation_to_checks(&pres, &mut rep);
                    associativity_checks::<FinitePermutation>(
                        *rank,
                        (*cutoff).min(4),
                        *random_triples,
                        seed,
                        &mut rep,
                    )?;
                }
                GroupType::Affine => {
                    rep.param("type", json!("affine"));
                    let pres = hecke::verify_presentation::<AffinePermutation>(*rank, *cutoff)?;
                    presentation_to_checks(&pres, &mut rep);
                    associativity_checks::<AffinePermutation>(
                        *rank,
                        (*cutoff).min(4),
                        *random_triples,
                        seed,
                        &mut rep,
                    )?;
                }
            }
            Ok(rep)
        }
    }
}

fn run_bernstein(cmd: &BernsteinCmd) -> Result<Report, CoreError> {
    let BernsteinCmd::Check { rank, cutoff, box_radius } = cmd;
    let mut rep = Report::new("bernstein check");
    rep.param("rank", json!(rank));
    rep.param("cutoff", json!(cutoff));
    rep.param("box_radius", json!(box_radius));
    for r in bernstein::check_bernstein_relations(*rank, *cutoff)? {
        let data = if r.equal {
            json!({})
        } else {
            json!({"lhs": r.lhs.to_string(), "rhs": r.rhs.to_string()})
        };
        rep.push(CheckRecord::new(r.id, r.description, Some(r.equal), data));
    }
    if let Some(radius) = box_radius {
        let lattice = bernstein::check_x_lattice(*rank, *radius, *cutoff)?;
        rep.push(CheckRecord::new(
            "x-lattice-box",
            "X^a X^b = X^(a+b) on the coordinate box, exact",
            Some(lattice.all_pass()),
            json!({
                "pairs_checked": lattice.pairs_checked,
                "failures": lattice.failures.len(),
            }),
        ));
    }
    Ok(rep)
}

fn parse_l_list(l: &str) -> Result<Vec<usize>, CoreError> {
    l.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CoreError::Parse(format!("bad root order '{t}'")))
        })
        .collect()
}

fn run_specht(cmd: &SpechtCmd) -> Result<Report, CoreError> {
    match cmd {
        SpechtCmd::Table { n, l, q_root, q, v } => {
            let mut rep = Report::new("specht table");
            let ls = parse_l_list(l)?;
            let generic_q = q_from_flags(*q, *v, 3.0);
            rep.param("n", json!(n));
            rep.param("l", json!(ls));
            rep.param("q_root", json!(q_root));
            rep.param("generic_q", complex_value(generic_q));
            for lambda in specht::partitions_of(*n) {
                let dim_s = specht::specht_dimension(&lambda, generic_q)?;
                rep.push(CheckRecord::new(
                    format!("dim-S-{lambda}"),
                    "Specht module dimension at the generic point",
                    None,
                    json!({"partition": lambda.to_string(), "dim_s": dim_s}),
                ));
                for &order in &ls {
                    let d = specht::d_dimension(&lambda, order)?;
                    let regular = lambda.is_l_regular(order)?;
                    rep.push(CheckRecord::new(
                        format!("D-{lambda}-l{order}"),
                        "D is nonzero exactly when the partition is l-regular",
                        Some((d > 0) == regular),
                        json!({
                            "partition": lambda.to_string(),
                            "l": order,
                            "dim_d": d,
                            "regular": regular,
                        }),
                    ));
                }
            }
            Ok(rep)
        }
        SpechtCmd::Dim { partition, q, v } => {
            let mut rep = Report::new("specht dim");
            let lambda: Partition = partition.parse()?;
            let point = q_from_flags(*q, *v, 3.0);
            rep.param("partition", json!(lambda.to_string()));
            rep.param("q", complex_value(point));
            let dim = specht::specht_dimension(&lambda, point)?;
            rep.push(CheckRecord::new(
                "specht-dim",
                "Specht module dimension at the evaluation point",
                None,
                json!({"dim": dim}),
            ));
            Ok(rep)
        }
    }
}

fn run_schur(cmd: &SchurCmd) -> Result<Report, CoreError> {
    match cmd {
        SchurCmd::Basis { n, r } => {
            let mut rep = Report::new("schur basis");
            rep.param("n", json!(n));
            rep.param("r", json!(r));
            let basis = schur::schur_basis(*n, *r)?;
            let expected = binomial(n * n + r - 1, *r);
            let labels: Vec<String> = basis
                .iter()
                .map(|b| format!("({}, {}, {})", b.row, b.col, b.rep))
                .collect();
            rep.push(CheckRecord::new(
                "basis-count",
                "double-coset count equals C(n^2 + r - 1, r)",
                Some(basis.len() == expected),
                json!({"count": basis.len(), "expected": expected, "elements": labels}),
            ));
            Ok(rep)
        }
        SchurCmd::Duality { n, r, r#type, cutoff, q, v } => {
            let mut rep = Report::new("schur duality");
            let point = q_from_flags(*q, *v, 3.0);
            rep.param("n", json!(n));
            rep.param("r", json!(r));
            rep.param("q", complex_value(point));
            let result = match r#type {
                GroupType::Finite => {
                    rep.param("type", json!("finite"));
                    schur::duality_check(*n, *r, point)?
                }
                GroupType::Affine => {
                    rep.param("type", json!("affine"));
                    rep.param("cutoff", json!(cutoff));
                    schur::duality_check_affine(*n, *r, *cutoff, point)?
                }
            };
            rep.push(CheckRecord::new(
                "schur-weyl",
                "dim End_H(T(n,r)) equals dim S(n,r)",
                result.matches,
                json!({
                    "dim_tensor": result.dim_tensor,
                    "dim_end_h": result.dim_end_h,
                    "dim_schur": result.dim_schur,
                    "mode": result.mode,
                    "dropped_terms": result.dropped_terms,
                }),
            ));
            Ok(rep)
        }
        SchurCmd::DgCheck { d, v, tol } => {
            let mut rep = Report::new("schur dg-check");
            rep.param("d", json!(d));
            let mode = match v {
                Some(v) => DgMode::Numeric(*v),
                None => DgMode::Symbolic,
            };
            rep.param(
                "mode",
                json!(match mode {
                    DgMode::Symbolic => "symbolic".to_string(),
                    DgMode::Numeric(v) => format!("numeric v={v}"),
                }),
            );
            rep.param("tol", json!(tol));
            let result = schur::doty_giaquinto_check(*d, mode)?;
            for rel in &result.relations {
                rep.push(CheckRecord::new(
                    rel.id.clone(),
                    rel.description.clone(),
                    Some(rel.pass(*tol)),
                    json!({"exact": rel.exact, "residual": rel.residual}),
                ));
            }
            Ok(rep)
        }
    }
}

fn build_rep(
    kind: RepKind,
    variant: RepVariant,
    n: usize,
    v: f64,
    t: Complex64,
) -> Result<TruncatedRep, CoreError> {
    match kind {
        RepKind::Pi => fqsl2::rep_pi(t, v, n, variant),
        RepKind::Tau => fqsl2::rep_tau(t),
    }
}

fn run_fq(cmd: &FqCmd) -> Result<Report, CoreError> {
    match cmd {
        FqCmd::NormalForm { mode, input, budget } => {
            let mut rep = Report::new("fq normal-form");
            let mode: RelationMode = mode.parse()?;
            rep.param("mode", json!(mode.to_string()));
            rep.param("input", json!(input));
            rep.param("budget", json!(budget));
            let p: NCPoly = input.parse()?;
            let set = fqsl2::relation_set(mode);
            let nf = fqsl2::normal_form(&p, &set, *budget)?;
            let idempotent = fqsl2::normal_form(&nf, &set, *budget)? == nf;
            rep.push(CheckRecord::new(
                "normal-form",
                "rewriting to ordered normal form; idempotency re-checked",
                Some(idempotent),
                json!({"input": p.to_string(), "normal_form": nf.to_string()}),
            ));
            Ok(rep)
        }
        FqCmd::RepCheck { variant, mode, rep: kind, n, v, t, band, tol } => {
            let mut rep = Report::new("fq rep-check");
            let variant: RepVariant = variant.parse()?;
            let mode: RelationMode = mode.parse()?;
            let t_val = turns_to_circle(*t);
            rep.param("variant", json!(variant.to_string()));
            rep.param("mode", json!(mode.to_string()));
            rep.param("N", json!(n));
            rep.param("v", json!(v));
            rep.param("t_turns", json!(t));
            rep.param("t", complex_value(t_val));
            rep.param("band", json!(band));
            rep.param("tol", json!(tol));
            rep.param(
                "coproduct_convention",
                json!("matrix coefficients: t_ab -> sum_c t_ac (x) t_cb"),
            );
            let representation = build_rep(*kind, variant, *n, *v, t_val)?;
            let residuals = fqsl2::relation_residual(&representation, mode, *band)?;
            for (id, res) in &residuals.per_relation {
                rep.push(CheckRecord::new(
                    id.clone(),
                    "operator-norm residual on the interior columns",
                    Some(*res < *tol),
                    json!({"residual": res, "excluded_band": residuals.excluded_band}),
                ));
            }
            Ok(rep)
        }
        FqCmd::Commutant { variant, rep: kind, n, v, t } => {
            let mut rep = Report::new("fq commutant");
            let variant: RepVariant = variant.parse()?;
            let t_val = turns_to_circle(*t);
            rep.param("variant", json!(variant.to_string()));
            rep.param("N", json!(n));
            rep.param("v", json!(v));
            rep.param("t_turns", json!(t));
            let representation = build_rep(*kind, variant, *n, *v, t_val)?;
            let dim = fqsl2::commutant_dim(&representation);
            rep.push(CheckRecord::new(
                "commutant-dim",
                "commutant dimension 1 signals irreducibility at the truncation",
                Some(dim == 1),
                json!({"dim": dim}),
            ));
            Ok(rep)
        }
        FqCmd::Equiv { rep: kind, variant, n, v, t1, t2 } => {
            let mut rep = Report::new("fq equiv");
            let variant: RepVariant = variant.parse()?;
            rep.param("variant", json!(variant.to_string()));
            rep.param("N", json!(n));
            rep.param("v", json!(v));
            rep.param("t1_turns", json!(t1));
            rep.param("t2_turns", json!(t2));
            let r1 = build_rep(*kind, variant, *n, *v, turns_to_circle(*t1))?;
            let r2 = build_rep(*kind, variant, *n, *v, turns_to_circle(*t2))?;
            let result = fqsl2::equivalence_check(&r1, &r2)?;
            rep.push(CheckRecord::new(
                "equivalence",
                "spectra comparison, then intertwiner search on ties",
                None,
                json!({
                    "equivalent": result.equivalent,
                    "method": result.method,
                    "detail": result.detail,
                }),
            ));
            Ok(rep)
        }
        FqCmd::Tensor { word, m, n, v, t, variant, band, tol } => {
            let mut rep = Report::new("fq tensor");
            let variant: RepVariant = variant.parse()?;
            let w = parse_word(word)?;
            let t_val = turns_to_circle(*t);
            rep.param("word", json!(w.to_string()));
            rep.param("m", json!(m));
            rep.param("N", json!(n));
            rep.param("v", json!(v));
            rep.param("t_turns", json!(t));
            rep.param("variant", json!(variant.to_string()));
            rep.param("band", json!(band));
            rep.param("tol", json!(tol));
            rep.param(
                "coproduct_convention",
                json!("matrix coefficients: t_ab -> sum_c t_ac (x) t_cb"),
            );
            rep.param(
                "relation_family",
                json!("rank-2 relations induced on 2x2 submatrices"),
            );
            let representation = fqsl2::tensor_rep(&w, *m, t_val, *v, *n, variant)?;
            let residuals =
                fqsl2::relation_residual(&representation, RelationMode::Corrected, *band)?;
            rep.push(CheckRecord::new(
                "tensor-residual",
                "max operator-norm residual of the induced relations, interior",
                Some(residuals.max_residual < *tol),
                json!({
                    "dim": representation.dim,
                    "max_residual": residuals.max_residual,
                    "relations_checked": residuals.per_relation.len(),
                }),
            ));
            Ok(rep)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
                }
                OutputFormat::Csv => print!("{}", report.to_csv()),
            }
            if report.failed() > 0 {
                std::process::exit(1);
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

//! Command-line front door for the fused-hecke library: compute elements
//! and products, build quotient and fused contexts, run the verification
//! registry, and export Bratteli diagrams as JSON or DOT.
//!
//! Exit codes: 0 all requested checks verified; 1 at least one claim
//! falsified (a witness is printed); 2 usage or bounds error.

mod expr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fused_hecke::combinat::{
    bratteli, dim_centraliser, dim_fused, dim_hecke_b, dim_one_boundary_tl, dim_seam,
    dim_symmetric_one_boundary, Family,
};
use fused_hecke::fused::{build_fused_context, verify_isomorphism, FusedContext, FUSED_BOUND};
use fused_hecke::quotient::{
    build_context, structure_constants, QuotientContext, QuotientSpec, QUOTIENT_BOUND,
};
use fused_hecke::verify::{run_all, run_claim, Params, Report, CLAIM_IDS};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fused-hecke",
    about = "Exact computation in two-parameter Hecke algebras of type B, \
             their one-boundary quotients, and the fused Hecke algebra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algebra {
    /// The full two-parameter algebra H(n) of type B (no quotient).
    Hb,
    /// Symmetric one-boundary quotient A(n).
    A,
    /// One-boundary Temperley-Lieb quotient C(n,2).
    C2,
    /// General centraliser quotient C(n,N); pass N via --cap-n.
    C,
    /// Truncated quotient A(n,k); pass k via --k.
    Ak,
    /// Boundary-seam quotient C(n,2,k); pass k via --k.
    Seam,
    /// Integral form of the boundary-seam quotient; pass k via --k.
    SeamIntegral,
    /// Fused algebra on k and n strands; pass k via --k.
    Fused,
}

#[derive(Args)]
struct ContextArgs {
    /// Which algebra to work in.
    #[arg(long, value_enum)]
    algebra: Algebra,
    /// Number of non-boundary strands n.
    #[arg(long)]
    n: usize,
    /// Boundary multiplicity k (fused/truncated/seam algebras, or to
    /// specialise a1 = q^-2, a2 = q^2k in A and C2).
    #[arg(long)]
    k: Option<u32>,
    /// The level N for the centraliser quotient C(n,N).
    #[arg(long)]
    cap_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension of an algebra from its closed-form count.
    Dim(ContextArgs),
    /// Build a quotient context and print its designated basis.
    Basis {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Parse and evaluate an element expression in a chosen context.
    ///
    /// Grammar: sums/differences of products; atoms are integers, ring
    /// literals q/a1/a2 with optional ^exponent, generators g0..g{n-1},
    /// idempotent generators e0..e{n-1}, E(n,x,b) with x in {q,-q^-1} and
    /// b in {1,2}, tildeE(n,v) with v in {A1,A2,C1,C2}, Lambda(x,i..j),
    /// and P(k). In the fused context the atoms are P, T, S0, S1.., U(i).
    Compute {
        /// The element expression.
        expr: String,
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification claims from the registry (all claims by default).
    Verify {
        /// Claim identifiers; runs the full registry when omitted.
        claims: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        cap_n: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        /// Bratteli family selector for DIM.cross (hb|a|c2|c|fused|seam).
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// List the registry and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print the branching graph of an algebra family.
    Bratteli {
        /// Family name: hb | a | c2 | c | fused | seam.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        cap_n: Option<u32>,
        #[arg(long, default_value = "5")]
        depth: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the full multiplication table of a quotient algebra.
    StructureConstants {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Operations on the fused algebra on k and n strands.
    Fused {
        #[command(subcommand)]
        action: FusedAction,
    },
}

#[derive(Subcommand)]
enum FusedAction {
    /// Build the double-coset basis and report its size.
    Build {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the defining relations of the abstract presentation on the
    /// concrete generators, and that the presentation map is bijective.
    VerifyIso {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a named generator in double-coset coordinates.
    Element {
        /// One of T, S0, S1, S2, ..., U1, U2, ...
        name: String,
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        n: usize,
        /// Also print the expansion in the ambient type-A algebra.
        #[arg(long)]
        expand: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A usage or bounds error: printed to stderr, exit code 2.
struct UsageError(String);

impl UsageError {
    fn new(msg: impl Into<String>) -> Self {
        UsageError(msg.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Dim(ctx) => cmd_dim(&ctx),
        Command::Basis { ctx, format } => cmd_basis(&ctx, format),
        Command::Compute { expr, ctx, format } => cmd_compute(&expr, &ctx, format),
        Command::Verify { claims, n, k, cap_n, depth, family, format, list } => {
            cmd_verify(claims, Params { n, k, cap_n, depth, family }, format, list)
        }
        Command::Bratteli { family, k, cap_n, depth, format } => {
            cmd_bratteli(&family, k, cap_n, depth, format)
        }
        Command::StructureConstants { ctx, format } => cmd_structure(&ctx, format),
        Command::Fused { action } => cmd_fused(action),
    }
}

fn require_k(ctx: &ContextArgs) -> Result<u32, UsageError> {
    ctx.k.ok_or_else(|| UsageError::new("this algebra requires --k"))
}

fn check_fused_bounds(k: usize, n: usize) -> Result<(), UsageError> {
    if k < 1 || n < 1 || k + n > FUSED_BOUND {
        return Err(UsageError::new(format!(
            "fused context needs k >= 1, n >= 1 and k + n <= {FUSED_BOUND}"
        )));
    }
    Ok(())
}

fn quotient_spec(ctx: &ContextArgs) -> Result<QuotientSpec, UsageError> {
    if ctx.n > QUOTIENT_BOUND {
        return Err(UsageError::new(format!(
            "n = {} exceeds the quotient bound {QUOTIENT_BOUND}",
            ctx.n
        )));
    }
    let spec = match ctx.algebra {
        Algebra::Hb => return Err(UsageError::new("hb is not a quotient; no context to build")),
        Algebra::A => match ctx.k {
            Some(k) => QuotientSpec::symmetric_one_boundary_specialised(ctx.n, k),
            None => QuotientSpec::symmetric_one_boundary(ctx.n),
        },
        Algebra::C2 => match ctx.k {
            Some(k) => QuotientSpec::one_boundary_tl_specialised(ctx.n, k),
            None => QuotientSpec::one_boundary_tl(ctx.n),
        },
        Algebra::C => {
            let cap_n = ctx
                .cap_n
                .ok_or_else(|| UsageError::new("algebra c requires --cap-n"))?;
            if cap_n < 2 || cap_n > ctx.n + 1 {
                return Err(UsageError::new("need 2 <= cap-n <= n + 1"));
            }
            QuotientSpec::centraliser(ctx.n, cap_n)
        }
        Algebra::Ak => QuotientSpec::truncated_one_boundary(ctx.n, require_k(ctx)?),
        Algebra::Seam => QuotientSpec::boundary_seam(ctx.n, require_k(ctx)?),
        Algebra::SeamIntegral => QuotientSpec::boundary_seam_integral(ctx.n, require_k(ctx)?),
        Algebra::Fused => return Err(UsageError::new("use the `fused` subcommand instead")),
    };
    Ok(spec)
}

fn build_quotient(ctx: &ContextArgs) -> Result<QuotientContext, UsageError> {
    Ok(build_context(quotient_spec(ctx)?))
}

fn cmd_dim(ctx: &ContextArgs) -> Result<ExitCode, UsageError> {
    let n = ctx.n as u64;
    let dim = match ctx.algebra {
        Algebra::Hb => dim_hecke_b(n),
        Algebra::A => dim_symmetric_one_boundary(n),
        Algebra::C2 => dim_one_boundary_tl(n),
        Algebra::C => {
            let cap_n = ctx
                .cap_n
                .ok_or_else(|| UsageError::new("algebra c requires --cap-n"))?;
            dim_centraliser(n, cap_n as u32)
        }
        Algebra::Ak | Algebra::Fused => dim_fused(require_k(ctx)? as u64, n),
        Algebra::Seam | Algebra::SeamIntegral => dim_seam(require_k(ctx)? as u64, n),
    };
    println!("{dim}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_basis(ctx: &ContextArgs, format: Format) -> Result<ExitCode, UsageError> {
    let qc = build_quotient(ctx)?;
    match format {
        Format::Json => {
            let basis: Vec<String> =
                qc.designated_basis().iter().map(|w| w.to_string()).collect();
            let v = serde_json::json!({
                "dim": qc.dim,
                "basis_theorem_holds": qc.basis_theorem_holds(),
                "basis": basis,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            println!("dim = {}", qc.dim);
            println!("designated basis is a basis: {}", qc.basis_theorem_holds());
            for w in qc.designated_basis() {
                println!("  g[{w}]");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compute(src: &str, ctx: &ContextArgs, format: Format) -> Result<ExitCode, UsageError> {
    let ast = expr::parse(src).map_err(|e| UsageError::new(format!("parse error: {e}")))?;
    if ctx.algebra == Algebra::Fused {
        let k = require_k(ctx)? as usize;
        check_fused_bounds(k, ctx.n)?;
        let fc = build_fused_context(k, ctx.n);
        let el = expr::eval_fused(&ast, &fc).map_err(UsageError::new)?;
        match format {
            Format::Json => {
                let v = serde_json::json!({
                    "k": k, "n": ctx.n,
                    "reps": fc.reps().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    "coords": el.to_json(),
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            }
            _ => println!("{}", expr::display_fused(&el, &fc)),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let el = match ctx.algebra {
        Algebra::Hb => {
            let e = expr::eval_hecke(&ast, ctx.n, ctx.k).map_err(UsageError::new)?;
            match ctx.k {
                Some(k) => e.specialise(k),
                None => e,
            }
        }
        _ => {
            let qc = build_quotient(ctx)?;
            let e = expr::eval_hecke(&ast, ctx.n, ctx.k).map_err(UsageError::new)?;
            let e = match qc.spec.spec_k {
                Some(k) => e.specialise(k),
                None => e,
            };
            qc.reduce(&e)
        }
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&el.to_json()).unwrap()),
        _ => println!("{el}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    claims: Vec<String>,
    params: Params,
    format: Format,
    list: bool,
) -> Result<ExitCode, UsageError> {
    if list {
        for id in CLAIM_IDS {
            println!("{id}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let reports: Vec<Report> = if claims.is_empty() {
        run_all(&params)
    } else {
        let mut out = Vec::new();
        for id in &claims {
            out.push(run_claim(id, &params).map_err(|e| UsageError::new(e.to_string()))?);
        }
        out.sort_by(|a, b| a.claim.cmp(&b.claim));
        out
    };
    match format {
        Format::Json => {
            let v: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            for r in &reports {
                println!("{r}");
            }
        }
    }
    if reports.iter().all(|r| r.status.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_bratteli(
    family: &str,
    k: Option<u32>,
    cap_n: Option<u32>,
    depth: usize,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let fam = Family::parse(family, k, cap_n).ok_or_else(|| {
        UsageError::new("unknown family (expected hb | a | c2 | c --cap-n N | fused --k K | seam --k K)")
    })?;
    if depth > 10 {
        return Err(UsageError::new("depth exceeds bound 10"));
    }
    let graph = bratteli(fam, depth);
    match format {
        Format::Dot => println!("{}", graph.to_dot()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&graph.to_json()).unwrap()),
        Format::Text => {
            for level in 0..=depth {
                let dims = graph.level_dims(level);
                println!("level {level}: dims {dims:?} (sum of squares {})",
                    graph.dim_sum_of_squares(level));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_structure(ctx: &ContextArgs, format: Format) -> Result<ExitCode, UsageError> {
    let qc = build_quotient(ctx)?;
    let sc = structure_constants(&qc);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&sc.to_json()).unwrap()),
        _ => {
            println!("dim = {}", qc.dim);
            println!("coefficients lie in the declared domain: {}", sc.integral());
            if !sc.violations.is_empty() {
                println!("violations:");
                for (u, v, w, c) in &sc.violations {
                    println!("  c[{u}][{v}][{w}] = {c}");
                }
            }
        }
    }
    if sc.integral() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn fused_ctx(k: usize, n: usize) -> Result<FusedContext, UsageError> {
    check_fused_bounds(k, n)?;
    Ok(build_fused_context(k, n))
}

fn cmd_fused(action: FusedAction) -> Result<ExitCode, UsageError> {
    match action {
        FusedAction::Build { k, n, format } => {
            let fc = fused_ctx(k, n)?;
            match format {
                Format::Json => {
                    let v = serde_json::json!({
                        "k": k, "n": n, "dim": fc.dim(),
                        "reps": fc.reps().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    println!("dim = {}", fc.dim());
                    for w in fc.reps() {
                        println!("  [{w}]");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        FusedAction::VerifyIso { k, n, format } => {
            let fc = fused_ctx(k, n)?;
            let checks = verify_isomorphism(&fc);
            let all = checks.iter().all(|c| c.pass);
            match format {
                Format::Json => {
                    let v: Vec<_> = checks
                        .iter()
                        .map(|c| serde_json::json!({"name": c.name, "pass": c.pass}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    for c in &checks {
                        println!("{}: {}", c.name, if c.pass { "ok" } else { "FAILED" });
                    }
                }
            }
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        FusedAction::Element { name, k, n, expand, format } => {
            let fc = fused_ctx(k, n)?;
            let el = expr::named_fused_element(&name, &fc).map_err(UsageError::new)?;
            match format {
                Format::Json => {
                    let mut v = serde_json::json!({
                        "k": k, "n": n, "name": name,
                        "reps": fc.reps().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        "coords": el.to_json(),
                    });
                    if expand {
                        v["ambient"] = fc.to_ambient(&el).to_json();
                    }
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    println!("{}", expr::display_fused(&el, &fc));
                    if expand {
                        println!("ambient: {}", fc.to_ambient(&el));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

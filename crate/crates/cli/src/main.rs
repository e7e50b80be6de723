//! Command-line interface for the pretzel-cg library: sliceness verdicts,
//! single signature evaluations, parameter scans, character tables and the
//! built-in self-check suite.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pretzel_cg::cg::{
    sigma_best, sigma_closed_form, sigma_colored, sigma_fchi, sigma_satellite, RepPolicy, Route,
};
use pretzel_cg::double_cover::{
    characters, homology, linking_form, metabolizers, presentation, vanishes_on, Character,
    PresentationKind,
};
use pretzel_cg::exact_math::SignConfig;
use pretzel_cg::pretzel::{ParityClass, PretzelKnot};
use pretzel_cg::verdict::{
    analyze, scan_even, scan_odd, AnalyzeOptions, CaseLabel, ScanRecord, Verdict, VerdictStatus,
};
use pretzel_cg::Error;

const EXIT_INVALID: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "pretzel-cg",
    about = "Casson-Gordon sliceness obstructions for 3-strand pretzel knots",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full sliceness verdict for P(p, q, r).
    #[command(allow_negative_numbers = true)]
    Analyze {
        p: i64,
        q: i64,
        r: i64,
        /// Emit the verdict as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Largest character order attempted (primes dividing the
        /// determinant root, plus 9 when applicable).
        #[arg(long, default_value_t = 9)]
        max_prime_power: i64,
    },
    /// Evaluate one Casson-Gordon signature sigma_k(chi) exactly.
    #[command(allow_negative_numbers = true)]
    Sigma {
        p: i64,
        q: i64,
        r: i64,
        /// Character modulus.
        #[arg(long)]
        d: i64,
        /// Comma-separated character images on the presentation meridians:
        /// 2 values select the two-component model, 3 values the
        /// four-component model with the axis image derived, 4 values the
        /// four-component model in full.
        #[arg(long)]
        chi: String,
        /// Eigenspace index, 1 <= k < d.
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Force a specific evaluation route (default: best applicable).
        #[arg(long, value_enum)]
        route: Option<RouteArg>,
    },
    /// Census over a parameter box, one CSV row per knot.
    Scan {
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Bound on the positive parameters (odd: p <= q <= max; even: the
        /// odd parameter p in P(-p, p+2, q) up to max).
        #[arg(long)]
        max: i64,
        /// Bound on the remaining parameter (odd: |r|; even: q). Defaults
        /// to --max.
        #[arg(long)]
        max_r: Option<i64>,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Worker threads (default: all cores). Output bytes are identical
        /// regardless of this setting.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 9)]
        max_prime_power: i64,
    },
    /// Run the built-in self-check suite; exits nonzero on any failure.
    Fixtures,
    #[command(allow_negative_numbers = true)]
    /// List the order-d characters of the double cover and their behavior
    /// on each metabolizer.
    CharacterTable {
        p: i64,
        q: i64,
        r: i64,
        /// Character modulus.
        #[arg(long)]
        d: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Satellite,
    Colored,
    ClosedForm,
    Fchi,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

enum CliError {
    Invalid(String),
    Internal(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAKnot(..) | Error::InvalidArgument(_) => CliError::Invalid(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Analyze {
            p,
            q,
            r,
            json,
            max_prime_power,
        } => cmd_analyze(p, q, r, json, max_prime_power),
        Command::Sigma {
            p,
            q,
            r,
            d,
            chi,
            k,
            route,
        } => cmd_sigma(p, q, r, d, &chi, k, route),
        Command::Scan {
            parity,
            max,
            max_r,
            out,
            jobs,
            max_prime_power,
        } => cmd_scan(parity, max, max_r, out, jobs, max_prime_power),
        Command::Fixtures => cmd_fixtures(),
        Command::CharacterTable { p, q, r, d } => cmd_character_table(p, q, r, d),
    }
}

fn opts(max_prime_power: i64) -> AnalyzeOptions {
    AnalyzeOptions {
        max_prime_power,
        cfg: SignConfig::from_env(),
    }
}

fn status_label(status: &VerdictStatus) -> &'static str {
    match status {
        VerdictStatus::RibbonSlice(_) => "ribbon_slice",
        VerdictStatus::FreedmanSlice { .. } => "freedman_slice",
        VerdictStatus::NotAlgSlice(_) => "not_alg_slice",
        VerdictStatus::CGObstructed(_) => "cg_obstructed",
        VerdictStatus::ExceptionalEven { .. } => "exceptional_even",
        VerdictStatus::Inconclusive(_) => "inconclusive",
        VerdictStatus::NotAttempted(_) => "not_attempted",
    }
}

fn case_label(c: &CaseLabel) -> &'static str {
    match c {
        CaseLabel::Case1 => "case1",
        CaseLabel::Case2 => "case2",
        CaseLabel::Case3 => "case3",
        CaseLabel::Case4 => "case4",
        CaseLabel::Case5 => "case5",
        CaseLabel::Case6 => "case6",
        CaseLabel::PowerOfThree => "power_of_three",
        CaseLabel::EvenReduced => "even_reduced",
        CaseLabel::NotApplicable => "not_applicable",
    }
}

fn verdict_json(v: &Verdict) -> serde_json::Value {
    let mut obj = json!({ "status": status_label(&v.status) });
    match &v.status {
        VerdictStatus::RibbonSlice(form) => {
            obj["form"] = json!(form.label());
        }
        VerdictStatus::FreedmanSlice { smoothly_slice } => {
            obj["smoothly_slice"] = json!(smoothly_slice);
        }
        VerdictStatus::NotAlgSlice(reason)
        | VerdictStatus::Inconclusive(reason)
        | VerdictStatus::NotAttempted(reason) => {
            obj["reason"] = json!(reason);
        }
        VerdictStatus::CGObstructed(witnesses) => {
            obj["witnesses"] = witnesses
                .iter()
                .map(|w| {
                    json!({
                        "metabolizer": w.metabolizer,
                        "d": w.d,
                        "chi": w.chi_images,
                        "k": w.k,
                        "sigma": w.sigma.to_string(),
                        "bound": w.bound,
                    })
                })
                .collect();
        }
        VerdictStatus::ExceptionalEven {
            a,
            residue,
            unresolved,
        } => {
            obj["a"] = json!(a);
            obj["residue_mod_60"] = json!(residue);
            obj["unresolved"] = json!(unresolved);
        }
    }
    obj
}

fn cmd_analyze(
    p: i64,
    q: i64,
    r: i64,
    as_json: bool,
    max_prime_power: i64,
) -> Result<ExitCode, CliError> {
    let knot = PretzelKnot::new(p, q, r)?;
    let classical = knot.classical();
    let verdict = analyze(&knot, &opts(max_prime_power))?;

    if as_json {
        let cases: serde_json::Map<String, serde_json::Value> = verdict
            .cases
            .iter()
            .map(|(d, c)| (d.to_string(), json!(case_label(c))))
            .collect();
        let doc = json!({
            "input": { "p": p, "q": q, "r": r },
            "class": match knot.class() {
                ParityClass::Odd => "odd",
                ParityClass::Even => "even",
                ParityClass::NotAKnot => unreachable!(),
            },
            "invariants": {
                "determinant": classical.determinant,
                "signature": classical.signature,
                "alexander": classical
                    .alexander
                    .as_ref()
                    .map(|a| a.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
                "alg_slice": classical.alg_slice,
            },
            "verdict": verdict_json(&verdict),
            "cases": cases,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        return Ok(ExitCode::SUCCESS);
    }

    println!("P({p}, {q}, {r})");
    println!(
        "  class: {}",
        match knot.class() {
            ParityClass::Odd => "odd",
            ParityClass::Even => "even",
            ParityClass::NotAKnot => unreachable!(),
        }
    );
    println!("  determinant: {}", classical.determinant);
    if let Some(s) = classical.signature {
        println!("  signature: {s}");
    }
    if let Some(a) = &classical.alexander {
        let coeffs: Vec<String> = a.iter().map(|c| c.to_string()).collect();
        println!("  alexander: [{}]", coeffs.join(", "));
    }
    match classical.alg_slice {
        Some(b) => println!("  algebraically slice: {b} ({})", classical.alg_slice_reason),
        None => println!("  algebraically slice: undetermined ({})", classical.alg_slice_reason),
    }
    match &verdict.status {
        VerdictStatus::RibbonSlice(form) => {
            println!("  verdict: ribbon (hence smoothly slice), family {}", form.label());
        }
        VerdictStatus::FreedmanSlice { smoothly_slice } => {
            println!(
                "  verdict: topologically slice (trivial Alexander polynomial){}",
                if *smoothly_slice { "" } else { "; not smoothly slice" }
            );
        }
        VerdictStatus::NotAlgSlice(reason) => {
            println!("  verdict: not (algebraically) slice: {reason}");
        }
        VerdictStatus::CGObstructed(witnesses) => {
            println!("  verdict: not topologically slice (signature obstruction)");
            for w in witnesses {
                let chi: Vec<String> = w.chi_images.iter().map(|x| x.to_string()).collect();
                println!(
                    "    metabolizer {} killed by d={} chi=({}) k={}: sigma = {} (bound {})",
                    w.metabolizer,
                    w.d,
                    chi.join(","),
                    w.k,
                    w.sigma,
                    w.bound
                );
            }
        }
        VerdictStatus::ExceptionalEven {
            a,
            residue,
            unresolved,
        } => {
            println!(
                "  verdict: exceptional determinant-one family member (a = {a}, a mod 60 = {residue}): {}",
                if *unresolved {
                    "topological sliceness unresolved"
                } else {
                    "not topologically slice"
                }
            );
        }
        VerdictStatus::Inconclusive(reason) => {
            println!("  verdict: inconclusive: {reason}");
        }
        VerdictStatus::NotAttempted(reason) => {
            println!("  verdict: not attempted: {reason}");
        }
    }
    if !verdict.cases.is_empty() {
        let cases: Vec<String> = verdict
            .cases
            .iter()
            .map(|(d, c)| format!("{d}: {}", case_label(c)))
            .collect();
        println!("  case labels: {}", cases.join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sigma(
    p: i64,
    q: i64,
    r: i64,
    d: i64,
    chi_spec: &str,
    k: i64,
    route: Option<RouteArg>,
) -> Result<ExitCode, CliError> {
    let knot = PretzelKnot::new(p, q, r)?;
    if d < 2 {
        return Err(CliError::Invalid(format!("modulus d={d} must be at least 2")));
    }
    let k = k.rem_euclid(d);
    if k == 0 {
        return Err(CliError::Invalid("k must be nonzero mod d".to_string()));
    }
    let images: Vec<i64> = chi_spec
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Invalid(format!("bad character image list '{chi_spec}': {e}")))?;

    let (pres, chi) = match images.len() {
        2 => {
            let kind = match knot.class() {
                ParityClass::Odd => PresentationKind::OddReduced2,
                _ => PresentationKind::Even2,
            };
            let pres = presentation(&knot, kind)?;
            let chi = Character {
                modulus: d,
                images: images.clone(),
            };
            (pres, chi)
        }
        3 => {
            // derive the axis image from the twist images
            let pres = presentation(&knot, PresentationKind::Odd4)?;
            let mut found = None;
            for eps in 0..d {
                let mut full = vec![eps];
                full.extend_from_slice(&images);
                let cand = Character {
                    modulus: d,
                    images: full,
                };
                if cand.is_valid_for(&pres) {
                    found = Some(cand);
                    break;
                }
            }
            let chi = found.ok_or_else(|| {
                CliError::Invalid(format!(
                    "twist images ({chi_spec}) admit no valid character mod {d}"
                ))
            })?;
            (pres, chi)
        }
        4 => {
            let pres = presentation(&knot, PresentationKind::Odd4)?;
            let chi = Character {
                modulus: d,
                images: images.clone(),
            };
            (pres, chi)
        }
        n => {
            return Err(CliError::Invalid(format!(
                "expected 2, 3, or 4 character images, got {n}"
            )))
        }
    };
    if !chi.is_valid_for(&pres) {
        return Err(CliError::Invalid(format!(
            "character ({chi_spec}) mod {d} is not well-defined on the cover homology"
        )));
    }
    if chi.is_trivial() {
        return Err(CliError::Invalid("the trivial character is excluded".to_string()));
    }

    let cfg = SignConfig::from_env();
    let (value, route_name) = match route {
        None => {
            let sv = sigma_best(&knot, &pres, &chi, k, cfg)?;
            let name = match sv.route {
                Route::Satellite => "satellite",
                Route::Colored => "colored",
                Route::ClosedForm => "closed-form",
                Route::FChi => "fchi",
            };
            (sv.value, name)
        }
        Some(RouteArg::Satellite) => (
            sigma_satellite(&pres, &chi, k, RepPolicy::CoherentLifts, cfg)?,
            "satellite",
        ),
        Some(RouteArg::Colored) => (sigma_colored(&pres, &chi, k, cfg)?, "colored"),
        Some(RouteArg::ClosedForm) => (sigma_closed_form(&knot, &chi, k)?, "closed-form"),
        Some(RouteArg::Fchi) => (sigma_fchi(&knot, &chi.multiple(k))?, "fchi"),
    };
    let full: Vec<String> = chi.images.iter().map(|x| x.to_string()).collect();
    eprintln!(
        "sigma_{k}(chi), chi = ({}) mod {d}, route {route_name}:",
        full.join(",")
    );
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn csv_row(rec: &ScanRecord) -> String {
    let ribbon = rec
        .ribbon_form
        .as_ref()
        .map(|f| f.label())
        .unwrap_or_default();
    let (wd, wchi, wk, wsigma, wbound) = match &rec.verdict.status {
        VerdictStatus::CGObstructed(ws) if !ws.is_empty() => {
            let w = &ws[0];
            let chi: Vec<String> = w.chi_images.iter().map(|x| x.to_string()).collect();
            (
                w.d.to_string(),
                chi.join(";"),
                w.k.to_string(),
                w.sigma.to_string(),
                w.bound.to_string(),
            )
        }
        _ => Default::default(),
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        rec.p,
        rec.q,
        rec.r,
        match rec.class {
            ParityClass::Odd => "odd",
            ParityClass::Even => "even",
            ParityClass::NotAKnot => "link",
        },
        rec.det,
        rec.signature.map(|s| s.to_string()).unwrap_or_default(),
        rec.alg_slice.map(|b| b.to_string()).unwrap_or_default(),
        ribbon,
        status_label(&rec.verdict.status),
        wd,
        wchi,
        wk,
        wsigma,
        wbound
    )
}

fn cmd_scan(
    parity: ParityArg,
    max: i64,
    max_r: Option<i64>,
    out: Option<std::path::PathBuf>,
    jobs: Option<usize>,
    max_prime_power: i64,
) -> Result<ExitCode, CliError> {
    if max < 1 {
        return Err(CliError::Invalid("--max must be positive".to_string()));
    }
    let analyze_opts = opts(max_prime_power);
    let second = max_r.unwrap_or(max);
    let compute = || match parity {
        ParityArg::Odd => scan_odd(max, second, &analyze_opts),
        ParityArg::Even => scan_even(max, second, &analyze_opts),
    };
    let records = match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            pool.install(compute)
        }
        None => compute(),
    }?;

    let mut body = String::from(
        "p,q,r,class,det,signature,alg_slice,ribbon_form,verdict,witness_d,witness_chi,witness_k,sigma,bound\n",
    );
    let mut histogram: std::collections::BTreeMap<&'static str, usize> = Default::default();
    for rec in &records {
        body.push_str(&csv_row(rec));
        *histogram.entry(status_label(&rec.verdict.status)).or_default() += 1;
    }
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(&path)?;
            f.write_all(body.as_bytes())?;
            f.flush()?;
        }
        None => {
            print!("{body}");
        }
    }
    let summary: Vec<String> = histogram
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect();
    eprintln!("{} knots scanned ({})", records.len(), summary.join(", "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_fixtures() -> Result<ExitCode, CliError> {
    let results = pretzel_cg::acceptance::run_all(&opts(9));
    let mut all_ok = true;
    for r in &results {
        println!(
            "[{}] {}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        all_ok &= r.passed;
    }
    if all_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_character_table(p: i64, q: i64, r: i64, d: i64) -> Result<ExitCode, CliError> {
    let knot = PretzelKnot::new(p, q, r)?;
    if d < 2 {
        return Err(CliError::Invalid(format!("modulus d={d} must be at least 2")));
    }
    let kind = match knot.class() {
        ParityClass::Odd => PresentationKind::Odd4,
        _ => PresentationKind::Even2,
    };
    let pres = presentation(&knot, kind)?;
    let group = homology(&pres)?;
    let form = linking_form(&pres, &group)?;
    let mets = metabolizers(&group, &form)?;
    let chars: Vec<Character> = characters(&pres, d)?
        .into_iter()
        .filter(|chi| !chi.is_trivial())
        .collect();

    let factors: Vec<String> = group.invariant_factors().iter().map(|f| f.to_string()).collect();
    println!(
        "H_1(double cover) = Z_{{{}}}, order {}",
        factors.join("} x Z_{"),
        group.order()
    );
    println!("{} metabolizer(s), {} nontrivial character(s) mod {d}", mets.len(), chars.len());
    println!("meridians: {}", pres.meridian_labels.join(", "));
    for chi in &chars {
        let images: Vec<String> = chi.images.iter().map(|x| x.to_string()).collect();
        let vanishing: Vec<String> = mets
            .iter()
            .enumerate()
            .filter(|(_, m)| vanishes_on(chi, &group, m))
            .map(|(i, _)| i.to_string())
            .collect();
        println!(
            "chi = ({})  order {}  vanishes on metabolizers [{}]",
            images.join(","),
            chi.order(),
            vanishing.join(",")
        );
    }
    Ok(ExitCode::SUCCESS)
}

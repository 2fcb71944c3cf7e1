//! Command-line surface of the gl3ortho toolkit: Gram matrices of the
//! invariant forms, the orthogonal polynomial families, the verification
//! suites, and normalized traces of enveloping-algebra words. All output
//! is exact: rationals are serialized as "num/den" strings, never floats.

use std::io::Write;
use std::process::exit;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gl3ortho::envelope::{casimir_element, realize, z_element, CasimirKind, EnvelopeElement, ZKind};
use gl3ortho::orthopoly::{
    casimir_eigencheck, difference_apply_1var, difference_eigenvalue, f1_via_ad, f2_via_ad,
    form_full, form_plus, gram_schmidt_plus, hyper3f2_poly, leading_resolved,
    resolved_hyper_params,
};
use gl3ortho::matrix::RationalMatrix;
use gl3ortho::poly::{Poly1, Poly2};
use gl3ortho::quotient::{adjoint_decomposition, hc_polynomial, invariant_form, model_dim,
    normalized_trace};
use gl3ortho::rational::{format_rational, parse_rational, rat, Rational};
use gl3ortho::rep::{build_symmetric_model, check_commutation, vacuum_vectors, Weight};
use gl3ortho::tgw::{generic_certificate, verify_consistency, verify_relations};
use gl3ortho::Error;

// exit codes: 2 invalid input / parse error, 3 degenerate form,
// 4 insufficient support, 1 any other failure
const EXIT_INVALID: i32 = 2;
const EXIT_DEGENERATE: i32 = 3;
const EXIT_SUPPORT: i32 = 4;

#[derive(Parser)]
#[command(name = "gl3ortho", about = "Exact constructions on U(gl(3)) quotients", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output format
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Gram matrix of an invariant form on a monomial or family basis
    Gram {
        #[arg(long)]
        alpha: usize,
        /// Weight as three comma-separated integers summing to zero
        #[arg(long)]
        nu: String,
        /// One-variable form at a dominant shift (polynomials in E33)
        #[arg(long)]
        plus: bool,
        /// Use the constructed orthogonal family instead of monomials
        #[arg(long)]
        family: bool,
        /// Maximal degree of the basis
        #[arg(long, default_value_t = 3)]
        maxdeg: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Construct an orthogonal polynomial and its invariants
    Ortho {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        nu: String,
        /// Degree index k
        #[arg(long)]
        k: usize,
        /// Second index l; selects the two-variable family
        #[arg(long)]
        l: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a verification suite
    Verify {
        /// One of: commutators, irreducible, decompose, nondegenerate,
        /// tgw, casimir, difference, orthogonality, all
        suite: String,
        #[arg(long)]
        alpha: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Normalized trace of a word in the generators
    Trace {
        /// Expression: terms separated by '+', factors by '*',
        /// generators E11..E33, integer coefficients
        word: Option<String>,
        /// Alpha; an integer, or any rational with --generic
        #[arg(long)]
        alpha: String,
        /// Evaluate the interpolated trace polynomial in alpha
        #[arg(long)]
        generic: bool,
        /// Use a named built-in element instead of a word
        /// (z21, z12, z13, z32, z31, z23, omega2, omega3)
        #[arg(long)]
        z: Option<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn die(code: i32, msg: &str) -> ! {
    eprintln!("error: {msg}");
    exit(code);
}

fn die_err(e: Error) -> ! {
    let code = match &e {
        Error::NotInRootLattice(..)
        | Error::NotInQPlus(..)
        | Error::InvalidHighestWeight(..)
        | Error::UnsupportedAlpha(..) => EXIT_INVALID,
        Error::DegenerateForm(_) => EXIT_DEGENERATE,
        Error::InsufficientSupport { needed, available } => die(
            EXIT_SUPPORT,
            &format!(
                "{e}; the form sees only {available} nodes but degree needs {needed} — \
                 increase --alpha"
            ),
        ),
        _ => 1,
    };
    die(code, &e.to_string())
}

fn parse_nu(s: &str) -> Weight {
    let parts: Vec<_> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        die(EXIT_INVALID, &format!("--nu expects three comma-separated integers, got {s:?}"));
    }
    let mut c = [0i64; 3];
    for (i, p) in parts.iter().enumerate() {
        c[i] = p
            .parse()
            .unwrap_or_else(|_| die(EXIT_INVALID, &format!("invalid integer {p:?} in --nu")));
    }
    let nu = Weight(c[0], c[1], c[2]);
    if !nu.in_root_lattice() {
        die(EXIT_INVALID, &format!("--nu must sum to zero, got {s}"));
    }
    nu
}

fn poly1_strings(f: &Poly1) -> Vec<String> {
    f.dense_coeffs().iter().map(format_rational).collect()
}

fn poly2_entries(f: &Poly2) -> Vec<Value> {
    f.iter()
        .map(|((a, b), c)| json!([a, b, format_rational(c)]))
        .collect()
}

fn emit(report: &Value, csv: Option<String>, output: &OutputOpts) {
    let text = if output.format == "csv" {
        csv.unwrap_or_else(|| {
            die(EXIT_INVALID, "csv output is only available for tabular commands")
        })
    } else {
        let mut s = serde_json::to_string_pretty(report).expect("serializable");
        s.push('\n');
        s
    };
    match &output.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .unwrap_or_else(|e| die(1, &format!("cannot write {}: {e}", path.display())));
            f.write_all(text.as_bytes())
                .unwrap_or_else(|e| die(1, &format!("write failed: {e}")));
        }
        None => print!("{text}"),
    }
}

fn checks_json(checks: &[(String, bool, Option<Value>)]) -> Vec<Value> {
    checks
        .iter()
        .map(|(name, pass, witness)| {
            json!({"name": name, "pass": pass, "witness": witness.clone().unwrap_or(Value::Null)})
        })
        .collect()
}

fn all_pass(checks: &[(String, bool, Option<Value>)]) -> bool {
    checks.iter().all(|(_, p, _)| *p)
}

// ---------------------------------------------------------------------------
// gram
// ---------------------------------------------------------------------------

fn cmd_gram(alpha: usize, nu: Weight, plus: bool, family: bool, maxdeg: usize, output: &OutputOpts) {
    let or_die = |r: Result<Rational, Error>| r.unwrap_or_else(|e| die_err(e));
    let (labels, gram): (Vec<String>, Vec<Vec<Rational>>) = if plus {
        let basis: Vec<(String, Poly1)> = if family {
            let fam = gram_schmidt_plus(nu, alpha, maxdeg).unwrap_or_else(|e| die_err(e));
            fam.polys
                .into_iter()
                .enumerate()
                .map(|(k, f)| (format!("f{k}"), f))
                .collect()
        } else {
            (0..=maxdeg)
                .map(|d| {
                    let mut m = Poly1::zero();
                    m.set(d, rat(1));
                    (format!("E33^{d}"), m)
                })
                .collect()
        };
        let g = basis
            .iter()
            .map(|(_, f)| {
                basis
                    .iter()
                    .map(|(_, h)| or_die(form_plus(f, h, nu, alpha)))
                    .collect()
            })
            .collect();
        (basis.into_iter().map(|(l, _)| l).collect(), g)
    } else {
        let basis: Vec<(String, Poly2)> = if family {
            let mut out = Vec::new();
            for t in 0..=maxdeg {
                for l in 0..=t {
                    let k = t - l;
                    let f = f2_via_ad(l, k, nu, alpha).unwrap_or_else(|e| die_err(e));
                    out.push((format!("f({l},{k})"), f));
                }
            }
            out
        } else {
            let mut out = Vec::new();
            for t in 0..=maxdeg {
                for a in 0..=t {
                    let mut m = Poly2::zero();
                    m.set((a, t - a), rat(1));
                    out.push((format!("H1^{a} H2^{}", t - a), m));
                }
            }
            out
        };
        let g = basis
            .iter()
            .map(|(_, f)| {
                basis
                    .iter()
                    .map(|(_, h)| or_die(form_full(f, h, nu, alpha)))
                    .collect()
            })
            .collect();
        (basis.into_iter().map(|(l, _)| l).collect(), g)
    };

    let n = labels.len();
    let symmetric = (0..n).all(|i| (0..i).all(|j| gram[i][j] == gram[j][i]));
    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || gram[i][j] == rat(0)));
    let mut checks = vec![("gram symmetric".to_string(), symmetric, None)];
    if family {
        checks.push(("family gram diagonal".to_string(), diagonal, None));
    }

    let rows: Vec<Vec<String>> = gram
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    let report = json!({
        "command": "gram",
        "params": {
            "alpha": alpha,
            "nu": [nu.0, nu.1, nu.2],
            "plus": plus,
            "family": family,
            "maxdeg": maxdeg,
        },
        "checks": checks_json(&checks),
        "tables": {"labels": labels, "gram": rows},
    });
    let mut csv = labels.join(",");
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    emit(&report, Some(csv), output);
    if !all_pass(&checks) {
        exit(1);
    }
}

// ---------------------------------------------------------------------------
// ortho
// ---------------------------------------------------------------------------

fn cmd_ortho(alpha: usize, nu: Weight, k: usize, l: Option<usize>, output: &OutputOpts) {
    match l {
        None => {
            let f = f1_via_ad(k, nu, alpha).unwrap_or_else(|e| die_err(e));
            let (_, eigen) =
                difference_apply_1var(&f, nu, alpha, k).unwrap_or_else(|e| die_err(e));
            let mut checks = vec![(
                "difference eigenvalue closed form".to_string(),
                eigen == difference_eigenvalue(k, nu),
                Some(json!(format_rational(&eigen))),
            )];
            let mut hyper_const = Value::Null;
            if nu.2 <= 0 {
                let h = hyper3f2_poly(&resolved_hyper_params(k, nu, alpha))
                    .unwrap_or_else(|e| die_err(e));
                let c = f.leading_coeff() / h.leading_coeff();
                checks.push((
                    "3F2 proportionality".to_string(),
                    f == h.scale(&c),
                    Some(json!(format_rational(&c))),
                ));
                hyper_const = json!(format_rational(&c));
            }
            let report = json!({
                "command": "ortho",
                "params": {"alpha": alpha, "nu": [nu.0, nu.1, nu.2], "k": k},
                "checks": checks_json(&checks),
                "tables": {
                    "coefficients": poly1_strings(&f),
                    "monic": poly1_strings(&f.monic()),
                    "hyper3f2_constant": hyper_const,
                    "eigenvalue": format_rational(&eigen),
                },
            });
            emit(&report, None, output);
            if !all_pass(&checks) {
                exit(1);
            }
        }
        Some(l) => {
            let f = f2_via_ad(l, k, nu, alpha).unwrap_or_else(|e| die_err(e));
            let leading = leading_resolved(&f);
            let cas = casimir_eigencheck(l, k, nu, alpha).unwrap_or_else(|e| die_err(e));
            let checks = vec![
                (
                    "leading exponent (l, k) in resolved coordinates".to_string(),
                    leading == Some((l, k)),
                    Some(json!(leading.map(|(a, b)| vec![a, b]))),
                ),
                (
                    "Omega2 eigenvalue".to_string(),
                    cas.omega2_ok,
                    Some(json!(format_rational(&cas.omega2_eigenvalue))),
                ),
                (
                    "Omega3 eigenvalue".to_string(),
                    cas.omega3_ok,
                    Some(json!(format_rational(&cas.omega3_eigenvalue))),
                ),
            ];
            let report = json!({
                "command": "ortho",
                "params": {"alpha": alpha, "nu": [nu.0, nu.1, nu.2], "k": k, "l": l},
                "checks": checks_json(&checks),
                "tables": {
                    "coefficients": poly2_entries(&f),
                    "leading_exponent": leading.map(|(a, b)| vec![a, b]),
                    "omega2_eigenvalue": format_rational(&cas.omega2_eigenvalue),
                    "omega3_eigenvalue": format_rational(&cas.omega3_eigenvalue),
                },
            });
            emit(&report, None, output);
            if !all_pass(&checks) {
                exit(1);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn suite_checks(suite: &str, alpha: usize) -> Vec<(String, bool, Option<Value>)> {
    let mut checks = Vec::new();
    let nu_grid = [Weight(0, 0, 0), Weight(1, -1, 0), Weight(1, 0, -1)];
    match suite {
        "commutators" => {
            let rep = build_symmetric_model(alpha as i64).unwrap_or_else(|e| die_err(e));
            let r = check_commutation(&rep);
            checks.push((
                format!("81 commutators, symmetric model alpha = {alpha}"),
                r.is_ok(),
                if r.is_ok() { None } else { Some(json!(r.failures)) },
            ));
        }
        "irreducible" => {
            let rep = build_symmetric_model(alpha as i64).unwrap_or_else(|e| die_err(e));
            let vv = vacuum_vectors(&rep);
            checks.push((
                "vacuum space 1-dimensional".to_string(),
                vv.len() == 1,
                Some(json!(vv.len())),
            ));
        }
        "decompose" => {
            let mult = adjoint_decomposition(alpha);
            checks.push((
                "multiplicity-free adjoint decomposition".to_string(),
                mult == vec![1; alpha + 1],
                Some(json!(mult)),
            ));
        }
        "nondegenerate" => {
            let n = model_dim(alpha);
            let mut units = Vec::with_capacity(n * n);
            for r in 0..n {
                for c in 0..n {
                    let mut m = RationalMatrix::zero(n, n);
                    m.set(r, c, rat(1));
                    units.push(m);
                }
            }
            let mut gram = RationalMatrix::zero(n * n, n * n);
            for (i, u) in units.iter().enumerate() {
                for (j, v) in units.iter().enumerate() {
                    let val = invariant_form(u, v, alpha).unwrap_or_else(|e| die_err(e));
                    if val != rat(0) {
                        gram.set(i, j, val);
                    }
                }
            }
            let det = gram.det().unwrap_or_else(|e| die_err(e));
            checks.push((
                format!("invariant form nondegenerate on End (size {})", n * n),
                det != rat(0),
                Some(json!(format_rational(&det))),
            ));
        }
        "tgw" => {
            let c = verify_consistency(alpha);
            checks.push(("TGW consistency identity".to_string(), c.all_ok(), None));
            let r = verify_relations(alpha).unwrap_or_else(|e| die_err(e));
            checks.push((
                format!("TGW relations, alpha = {alpha}"),
                r.all_ok(),
                if r.all_ok() { None } else { Some(json!(r.failures)) },
            ));
            let cert = generic_certificate();
            checks.push((
                "generic-alpha trace certificate".to_string(),
                cert.all_ok(),
                if cert.all_ok() { None } else { Some(json!(format!("{:?}", cert.failures))) },
            ));
        }
        "casimir" => {
            for nu in [Weight(0, 0, 0), Weight(1, -1, 0)] {
                for (l, k) in [(0usize, 0usize), (1, 0), (0, 1), (1, 1)] {
                    let cas =
                        casimir_eigencheck(l, k, nu, alpha).unwrap_or_else(|e| die_err(e));
                    checks.push((
                        format!("Casimir eigenvalues at nu = ({}, {}, {}), (l, k) = ({l}, {k})",
                            nu.0, nu.1, nu.2),
                        cas.omega2_ok && cas.omega3_ok,
                        Some(json!([
                            format_rational(&cas.omega2_eigenvalue),
                            format_rational(&cas.omega3_eigenvalue)
                        ])),
                    ));
                }
            }
        }
        "difference" => {
            for nu in nu_grid {
                for k in 0..=3usize {
                    let f = f1_via_ad(k, nu, alpha).unwrap_or_else(|e| die_err(e));
                    let res = difference_apply_1var(&f, nu, alpha, k);
                    let ok = matches!(&res, Ok((_, e)) if *e == difference_eigenvalue(k, nu));
                    checks.push((
                        format!("difference equation at nu = ({}, {}, {}), k = {k}",
                            nu.0, nu.1, nu.2),
                        ok,
                        res.ok().map(|(_, e)| json!(format_rational(&e))),
                    ));
                }
            }
        }
        "orthogonality" => {
            for nu in nu_grid {
                let fam: Vec<_> = (0..=3)
                    .map(|k| f1_via_ad(k, nu, alpha).unwrap_or_else(|e| die_err(e)))
                    .collect();
                let mut ok = true;
                for i in 0..fam.len() {
                    for j in 0..i {
                        ok &= form_plus(&fam[i], &fam[j], nu, alpha)
                            .unwrap_or_else(|e| die_err(e))
                            == rat(0);
                    }
                }
                checks.push((
                    format!("pairwise orthogonality at nu = ({}, {}, {})", nu.0, nu.1, nu.2),
                    ok,
                    None,
                ));
            }
        }
        "all" => {
            for s in [
                "commutators",
                "irreducible",
                "decompose",
                "nondegenerate",
                "tgw",
                "casimir",
                "difference",
                "orthogonality",
            ] {
                checks.extend(suite_checks(s, alpha));
            }
        }
        other => die(EXIT_INVALID, &format!("unknown suite {other:?}")),
    }
    checks
}

fn cmd_verify(suite: &str, alpha: usize, output: &OutputOpts) {
    let checks = suite_checks(suite, alpha);
    let report = json!({
        "command": "verify",
        "params": {"suite": suite, "alpha": alpha},
        "checks": checks_json(&checks),
        "tables": {},
    });
    emit(&report, None, output);
    if !all_pass(&checks) {
        exit(1);
    }
}

// ---------------------------------------------------------------------------
// trace
// ---------------------------------------------------------------------------

fn parse_word(s: &str) -> EnvelopeElement {
    let mut out = EnvelopeElement::zero();
    for term in s.split('+') {
        let mut coeff = rat(1);
        let mut word: Vec<(usize, usize)> = Vec::new();
        for factor in term.split('*') {
            let tok = factor.trim();
            if tok.is_empty() {
                die(EXIT_INVALID, &format!("empty factor in term {term:?}"));
            }
            if let Some(rest) = tok.strip_prefix('E') {
                let bytes = rest.as_bytes();
                if bytes.len() == 2
                    && (b'1'..=b'3').contains(&bytes[0])
                    && (b'1'..=b'3').contains(&bytes[1])
                {
                    word.push(((bytes[0] - b'0') as usize, (bytes[1] - b'0') as usize));
                    continue;
                }
                die(EXIT_INVALID, &format!("unknown generator {tok:?}"));
            }
            match tok.parse::<i64>() {
                Ok(n) => coeff *= rat(n),
                Err(_) => die(EXIT_INVALID, &format!("cannot parse factor {tok:?}")),
            }
        }
        out = out.add(&EnvelopeElement::word(&word, coeff));
    }
    out
}

fn builtin_element(name: &str) -> EnvelopeElement {
    match name {
        "z21" => z_element(ZKind::Z21, false),
        "z12" => z_element(ZKind::Z12, false),
        "z13" => z_element(ZKind::Z13, false),
        "z32" => z_element(ZKind::Z32, false),
        "z31" => z_element(ZKind::Z31, false),
        "z23" => z_element(ZKind::Z23, false),
        "omega2" => casimir_element(CasimirKind::Omega2),
        "omega3" => casimir_element(CasimirKind::Omega3),
        other => die(EXIT_INVALID, &format!("unknown built-in element {other:?}")),
    }
}

fn cmd_trace(
    word: Option<&str>,
    alpha_str: &str,
    generic: bool,
    z: Option<&str>,
    output: &OutputOpts,
) {
    let element = match (word, z) {
        (Some(w), None) => parse_word(w),
        (None, Some(name)) => builtin_element(name),
        (Some(_), Some(_)) => die(EXIT_INVALID, "give either a word or --z, not both"),
        (None, None) => die(EXIT_INVALID, "give a word or --z"),
    };
    let value = if generic {
        let a = parse_rational(alpha_str)
            .unwrap_or_else(|| die(EXIT_INVALID, &format!("invalid --alpha {alpha_str:?}")));
        hc_polynomial(&element).eval(&a)
    } else {
        let a: usize = alpha_str
            .parse()
            .unwrap_or_else(|_| {
                die(EXIT_INVALID,
                    &format!("--alpha must be a nonnegative integer (or use --generic), got {alpha_str:?}"))
            });
        let rep = build_symmetric_model(a as i64).unwrap_or_else(|e| die_err(e));
        normalized_trace(&realize(&element, &rep), a).unwrap_or_else(|e| die_err(e))
    };
    let report = json!({
        "command": "trace",
        "params": {"word": word, "z": z, "alpha": alpha_str, "generic": generic},
        "checks": [],
        "tables": {"trace": format_rational(&value)},
    });
    emit(&report, None, output);
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Gram { alpha, nu, plus, family, maxdeg, output } => {
            cmd_gram(alpha, parse_nu(&nu), plus, family, maxdeg, &output)
        }
        Command::Ortho { alpha, nu, k, l, output } => {
            cmd_ortho(alpha, parse_nu(&nu), k, l, &output)
        }
        Command::Verify { suite, alpha, output } => cmd_verify(&suite, alpha, &output),
        Command::Trace { word, alpha, generic, z, output } => {
            cmd_trace(word.as_deref(), &alpha, generic, z.as_deref(), &output)
        }
    }
}

use std::fmt::Write as _;
use std::path::Path;

use cyclorep::ansearch::{bounds_report, search_min, BoundsPolicy, SearchError, SearchStatus, Strategy};
use cyclorep::matrixrep::{
    circulant_minimal_polynomial_checked, delta_minimal_polynomial, hoffman_polynomial, path_cycle_spectrum_check,
    smallest_circulant_order, subfield_representation, symmetric_representation, DenseRatMatrix, MatrixError,
};
use cyclorep::numtheory::{factorize, is_prime_power, NumTheoryError};
use cyclorep::polyring::{cyclotomic, profile};
use cyclorep::verify::{run_all, run_suite, Check, Suite, VerifyOptions};
use serde_json::json;

use crate::report::{to_value, CliError, Report};

/// A finished command: the JSON report and its plain-text rendering.
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

fn require_positive(n: u64) -> Result<(), CliError> {
    if n == 0 {
        return Err(NumTheoryError::Zero.into());
    }
    Ok(())
}

pub fn profile_cmd(n: u64) -> Result<Outcome, CliError> {
    require_positive(n)?;
    let p = profile(n);
    let text = format!(
        "n        {}\nphi_n    {}\ntotient  {}\nradical  {}\nheight   {}\nflat     {}\norder    {}\n",
        p.n, p.phi_n, p.totient, p.radical, p.height, p.flat, p.order
    );
    let report = Report {
        result: to_value(&p),
        ..Report::new("profile").input("n", n)
    };
    Ok(Outcome { report, text })
}

pub fn cyclotomic_cmd(n: u64) -> Result<Outcome, CliError> {
    require_positive(n)?;
    let phi = cyclotomic(n);
    let text = format!("{phi}\n");
    let report = Report {
        result: json!({ "n": n, "coefficients": phi, "display": phi.to_string() }),
        ..Report::new("cyclotomic").input("n", n)
    };
    Ok(Outcome { report, text })
}

/// Without an explicit budget, moduli past the default exhaustive range get
/// the default bounds budget.
pub fn search_cmd(n: u64, strategy: Strategy, budget: Option<u64>) -> Result<Outcome, CliError> {
    if n < 2 {
        return Err(SearchError::ModulusTooSmall(n).into());
    }
    let policy = BoundsPolicy::default();
    let effective = budget.or((n > policy.exhaustive_max).then_some(policy.budget));
    let found = search_min(n, strategy, effective)?;
    let text = match &found {
        Some(s) => format!(
            "n         {n}\ndegree    {}\nwitness   {}\nstrategy  {strategy}\n",
            s.degree(),
            s.to_polynomial()
        ),
        None => format!("n         {n}\nA_n is empty ({})\n", empty_reason(n)),
    };
    let report = Report {
        result: json!({
            "n": n,
            "strategy": strategy,
            "empty": found.is_none(),
            "exact": found,
        }),
        ..Report::new("search-an")
            .input("n", n)
            .input("strategy", strategy)
            .input("budget", effective)
    };
    Ok(Outcome { report, text })
}

fn empty_reason(n: u64) -> &'static str {
    if is_prime_power(n) {
        "prime power"
    } else {
        "exhausted"
    }
}

pub fn bounds_cmd(n: u64) -> Result<Outcome, CliError> {
    let r = bounds_report(n)?;
    let mut text = format!("n      {}\nlower  > {}\n", r.n, r.lower);
    for u in &r.uppers {
        let _ = writeln!(
            text,
            "upper  <= {} ({})  {}",
            u.value,
            source_name(&u.source),
            u.witness.to_polynomial()
        );
    }
    for o in &r.omitted {
        let _ = writeln!(text, "skip   {}: {}", source_name(&o.source), o.reason);
    }
    match (&r.exact, r.empty) {
        (Some(e), _) => {
            let _ = writeln!(
                text,
                "exact  {} ({})  {}",
                e.degree(),
                e.strategy,
                e.witness.to_polynomial()
            );
        }
        (None, true) => text.push_str("exact  none, A_n is empty\n"),
        (None, false) => match &r.search {
            SearchStatus::BudgetExhausted {
                lowest_unexplored_degree,
            } => {
                let _ = writeln!(
                    text,
                    "exact  unknown, budget exhausted at degree {lowest_unexplored_degree}"
                );
            }
            _ => text.push_str("exact  not searched\n"),
        },
    }
    let report = Report {
        result: to_value(&r),
        ..Report::new("bounds").input("n", n)
    };
    Ok(Outcome { report, text })
}

fn source_name(source: &impl serde::Serialize) -> String {
    to_value(source).as_str().unwrap_or_default().to_string()
}

pub fn cayley_cmd(p: u64, r: u64) -> Result<Outcome, CliError> {
    let rep = subfield_representation(p, r)?;
    let text = format!(
        "prime                  {}\nregularity             {}\nfield degree           {}\nconnection             {:?}\nminimal polynomial     {}\neigenvalue polynomial  {}\nhoffman g (J = g(A))   {}\n",
        rep.prime,
        rep.regularity,
        rep.field_degree,
        rep.digraph.connection(),
        rep.minimal_polynomial,
        rep.eigenvalue_polynomial,
        rep.hoffman
    );
    let mut result = to_value(&rep);
    result["connection"] = to_value(rep.digraph.connection());
    result["display"] = json!({
        "minimal_polynomial": rep.minimal_polynomial.to_string(),
        "eigenvalue_polynomial": rep.eigenvalue_polynomial.to_string(),
        "hoffman": rep.hoffman.to_string(),
    });
    let report = Report {
        result,
        ..Report::new("cayley").input("p", p).input("r", r)
    };
    Ok(Outcome { report, text })
}

pub fn cayley_dot(p: u64, r: u64) -> Result<String, CliError> {
    Ok(subfield_representation(p, r)?.digraph.to_dot())
}

pub fn hoffman_cmd(path: &Path) -> Result<Outcome, CliError> {
    let raw = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let matrix: DenseRatMatrix = serde_json::from_str(&raw).map_err(|e| CliError::MatrixFormat(e.to_string()))?;
    let g = hoffman_polynomial(&matrix)?;
    let text = format!("{g}\n");
    let report = Report {
        result: json!({ "order": matrix.rows(), "hoffman": g, "display": g.to_string() }),
        ..Report::new("hoffman").input("matrix", path.display().to_string())
    };
    Ok(Outcome { report, text })
}

pub fn sym_cmd(n: u64) -> Result<Outcome, CliError> {
    let matrix = symmetric_representation(n)?;
    let delta = delta_minimal_polynomial(n);
    let mut checks = Vec::new();
    let divides = circulant_minimal_polynomial_checked(&matrix)
        .and_then(|m| Ok(m.rem(&delta).map_err(MatrixError::from)?.is_zero()));
    checks.push(Check {
        name: format!("sym/n={n}/minimal-polynomial"),
        passed: matches!(divides, Ok(true)),
        detail: match divides {
            Ok(ok) => format!("minimal polynomial of zeta + zeta^-1 divides that of the circulant: {ok}"),
            Err(e) => e.to_string(),
        },
    });
    let spectrum = (n.is_multiple_of(2) && n >= 4).then(|| path_cycle_spectrum_check(n));
    if let Some(outcome) = &spectrum {
        checks.push(Check {
            name: format!("sym/n={n}/path-cycle"),
            passed: matches!(outcome, Ok(true)),
            detail: match outcome {
                Ok(ok) => format!("path P_{} matches the inner cycle spectrum: {ok}", n / 2 - 1),
                Err(e) => e.to_string(),
            },
        });
    }
    let text = format!(
        "n                   {n}\nmatrix              W + W^{}\nminimal polynomial  {delta}\ndegree              {}\n",
        n - 1,
        delta.degree().unwrap_or(0)
    );
    let report = Report {
        result: json!({
            "n": n,
            "matrix": matrix,
            "minimal_polynomial": delta,
            "display": delta.to_string(),
            "degree": delta.degree(),
        }),
        checks,
        ..Report::new("sym").input("n", n)
    };
    Ok(Outcome { report, text })
}

pub fn smallest_order_cmd(n: u64) -> Result<Outcome, CliError> {
    factorize(n)?;
    let order = smallest_circulant_order(n);
    let report = Report {
        result: json!({ "n": n, "order": order }),
        ..Report::new("smallest-order").input("n", n)
    };
    Ok(Outcome {
        report,
        text: format!("{order}\n"),
    })
}

pub fn verify_cmd(target: &str, max_n: Option<u64>) -> Result<Outcome, CliError> {
    let options = VerifyOptions { max_n };
    let checks = if target == "all" {
        run_all(&options)
    } else {
        run_suite(target.parse::<Suite>()?, &options)
    };
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(
            text,
            "{} {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let _ = writeln!(text, "{} passed, {} failed", checks.len() - failed, failed);
    let report = Report {
        result: json!({ "passed": checks.len() - failed, "failed": failed }),
        checks,
        ..Report::new("verify").input("suite", target).input("max_n", max_n)
    };
    Ok(Outcome { report, text })
}

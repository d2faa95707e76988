//! Acceptance criteria 1-11, run in order. One PASS/FAIL line per criterion, then the
//! individual checks behind it. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cellring::report::CheckReport;
use cellring::verify::{
    bernstein, bimodule_blocks, coxeter, diagonal_blocks, eta, involutions, kl_sanity, lambda_rule, repring, stars,
    window_bijection, BIMODULE_BUDGET, UNIT_BUDGET,
};
use cellring::Error;

type Criterion = (u32, &'static str, Duration, fn() -> Result<Vec<CheckReport>, Error>);

fn criteria() -> Vec<Criterion> {
    let min = |m: u64| Duration::from_secs(60 * m);
    vec![
        (1, "Coxeter presentation", Duration::from_secs(1), || Ok(vec![coxeter()])),
        (2, "KL sanity", min(1), || Ok(kl_sanity(10))),
        (3, "eta identity", min(1), eta),
        (4, "four-term rule for t_x10", min(10), || Ok(vec![lambda_rule(1, 1)?])),
        (5, "five-term rule for t_x01", min(15), || Ok(vec![lambda_rule(2, 1)?])),
        (6, "Bernstein elements", min(5), bernstein),
        (7, "representation ring oracle", Duration::from_secs(10), || Ok(repring(4))),
        (8, "diagonal blocks", min(30), || diagonal_blocks(1)),
        (9, "bimodule blocks", min(30), || {
            let mut out = bimodule_blocks(1, BIMODULE_BUDGET)?;
            out.extend(window_bijection(30));
            Ok(out)
        }),
        (10, "star identities", min(10), || stars(12)),
        (11, "distinguished involutions", min(30), || involutions(26, UNIT_BUDGET)),
    ]
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut lines = Vec::new();
    for (n, name, budget, run) in criteria() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let (ok, detail) = match &result {
            Ok(reports) => (
                !reports.is_empty() && reports.iter().all(CheckReport::passed) && took <= budget,
                reports.iter().map(|r| format!("    {r}")).collect::<Vec<_>>().join("\n"),
            ),
            Err(e) => (false, format!("    error: {e}")),
        };
        let over = if took > budget { format!(", over budget {budget:?}") } else { String::new() };
        let line = format!("criterion {n:>2} {name}: {} ({:.2?}{over})", if ok { "PASS" } else { "FAIL" }, took);
        println!("{line}\n{detail}");
        lines.push(line);
        all_pass &= ok;
    }
    println!("\nsummary");
    for l in &lines {
        println!("{l}");
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

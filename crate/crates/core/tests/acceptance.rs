//! Acceptance suite: one line per criterion, exit status nonzero if any fails.
//!
//! Each criterion is judged on its verdict and on its runtime budget.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superjordan::jordanian::{limit_rh, rh_property_report, t_limit, verify_identities_rep};
use superjordan::numeric::spot_check;
use superjordan::rmatrix::{r_fund_arb, r_q, ybe_check};
use superjordan::uqsl21::{AlgebraElement, CartanMonomial, Identity, IdentityContext, Letter};
use superjordan::{Params, RepKind, Representation, Result, Scalar};

const REPS: [RepKind; 2] = [RepKind::Fund, RepKind::Fund2];

fn exact(kind: RepKind) -> Result<Representation<Scalar>> {
    kind.build(&Params::exact())
}

fn relations() -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for kind in REPS {
        let report = exact(kind)?.validate()?;
        ok &= report.all_hold();
        notes.push(format!("{kind}: {} relations", report.checks.len()));
    }
    Ok((ok, notes.join(", ")))
}

fn construction_equivalence() -> Result<(bool, String)> {
    let fund = exact(RepKind::Fund)?;
    let mut ok = true;
    for kind in REPS {
        let rep = exact(kind)?;
        ok &= r_q(&fund, &rep)?.r == r_fund_arb(&fund, &rep)?;
    }
    Ok((ok, "fund, fund2".into()))
}

fn rq_ybe() -> Result<(bool, String)> {
    let fund = exact(RepKind::Fund)?;
    let report = ybe_check(&r_q(&fund, &fund)?.r, fund.space())?;
    Ok((report.holds, format!("{}x{} residual nnz {}", report.dim, report.dim, report.residual_nnz)))
}

fn identities_symbolic() -> Result<(bool, String)> {
    let ctx = IdentityContext::new(6)?;
    let mut checked = 0;
    let mut failed = Vec::new();
    for id in Identity::standard_suite() {
        let v = ctx.verify(id)?;
        if v.diagnostic {
            continue;
        }
        checked += 1;
        if !v.holds {
            failed.push(v.identity);
        }
    }
    Ok((failed.is_empty(), format!("{checked} identities through order 6, failing: {failed:?}")))
}

fn identities_matrix() -> Result<(bool, String)> {
    let mut checked = 0;
    let mut failed = Vec::new();
    for kind in REPS {
        for v in verify_identities_rep(&exact(kind)?, &Identity::standard_suite())? {
            if v.diagnostic {
                continue;
            }
            checked += 1;
            if !v.holds {
                failed.push(format!("{kind}:{}", v.identity));
            }
        }
    }
    Ok((failed.is_empty(), format!("{checked} matrix identities, failing: {failed:?}")))
}

fn t_extraction() -> Result<(bool, String)> {
    let mut ok = true;
    for kind in REPS {
        let r = t_limit(&exact(kind)?)?;
        ok &= r.difference_holds && r.matches_closed_form && r.powers.iter().all(|p| p.holds);
    }
    Ok((ok, "alpha in {2, -1, 1/2}".into()))
}

fn contraction() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for kind in REPS {
        let r = limit_rh(&exact(kind)?)?;
        ok &= r.holds() && r.min_valuation.map_or(true, |v| v >= 0);
        notes.push(format!("{kind}: min valuation {:?}", r.min_valuation));
    }
    Ok((ok, notes.join(", ")))
}

fn rh_ybe() -> Result<(bool, String)> {
    let fund = exact(RepKind::Fund)?.limit_s1()?;
    let r = rh_property_report(&fund)?;
    let ybe = r.ybe.as_ref().map_or(false, |y| y.holds);
    Ok((ybe && r.identity_at_hbar_zero, format!("ybe {ybe}, identity at h=0 {}", r.identity_at_hbar_zero)))
}

fn random_word(rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let letters = [
        Letter::E1,
        Letter::E2,
        Letter::E3,
        Letter::F1,
        Letter::F2,
        Letter::F3,
        Letter::K(CartanMonomial::new(1, 0)),
        Letter::K(CartanMonomial::new(0, 1)),
        Letter::K(CartanMonomial::new(-1, 0)),
        Letter::K(CartanMonomial::new(0, -1)),
    ];
    let n = rng.gen_range(1..=6);
    (0..n).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

fn oracle() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let words: Vec<_> = (0..200).map(|_| random_word(&mut rng)).collect();
    let mut bad = 0;
    for kind in REPS {
        let rep = exact(kind)?;
        for w in &words {
            if rep.evaluate(&AlgebraElement::word(w))? != rep.word(w)? {
                bad += 1;
            }
        }
    }
    Ok((bad == 0, format!("200 words x 2 reps, {bad} disagreements")))
}

fn numeric() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for kind in REPS {
        for c in spot_check(kind, 1.21, 0.3, 1e-10)? {
            ok &= c.holds;
            worst = worst.max(c.max_rel_err);
        }
    }
    Ok((ok, format!("max relative error {worst:.2e}")))
}

type Check = fn() -> Result<(bool, String)>;

fn main() {
    let criteria: [(&str, u64, Check); 10] = [
        ("relation suite", 5, relations),
        ("construction equivalence", 60, construction_equivalence),
        ("graded YBE for R_q", 120, rq_ybe),
        ("identities, symbolic channel", 120, identities_symbolic),
        ("identities, matrix channel", 60, identities_matrix),
        ("T extraction", 30, t_extraction),
        ("contraction", 120, contraction),
        ("R_h YBE", 120, rh_ybe),
        ("oracle cross-check", 60, oracle),
        ("numeric sanity", 5, numeric),
    ];
    let mut failures = 0;
    for (n, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= Duration::from_secs(*budget);
        let (pass, detail) = match outcome {
            Ok((ok, detail)) => (ok && in_budget, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<30} {}  {:>8.2?} (budget {}s)  {}",
            n + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            budget,
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

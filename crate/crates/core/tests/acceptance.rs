//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};

use num_bigint::BigInt;
use num_traits::One;

use inessential::criteria::{
    self, analyze, gbar_table, is_cid_counts, is_cid_form, witness_search,
};
use inessential::field_file::{bundled_field, bundled_fields};
use inessential::fp_poly::{count_irreducible, enumerate_irreducibles, ExtFieldCtx, FpPolynomial};
use inessential::hnf_ideals::{frobenius_ideal, lambda_profile, ramification_probe, vp};
use inessential::multipoly::{
    disc_in_w, disc_via_resultant, eval_over_ext, in_system, reduce_mod_system, DivisorSystem,
    MPoly,
};
use inessential::number_field::{fundamental_charpoly, index_form, OrderElement};
use inessential::periods::{period_order, PeriodFieldSpec};
use inessential::supplementary::supplementary_report;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn dedekind_cubic_at_two() -> Outcome {
    let o = bundled_field("dedekind-cubic").map_err(err)?;
    ensure!(o.disc() == &BigInt::from(-503), "disc {}", o.disc());
    let lam = lambda_profile(&o, 2).map_err(err)?;
    ensure!(lam == vec![3, 0, 0], "lambda profile {lam:?}");
    let g = gbar_table(2, 3).map_err(err)?;
    ensure!(g == ints(&[2, 1, 2]), "gbar {g:?}");
    let (counts, failing) = is_cid_counts(&o, 2).map_err(err)?;
    ensure!(
        counts && failing == vec![1],
        "counts verdict {counts} {failing:?}"
    );
    ensure!(is_cid_form(&o, 2).map_err(err)?, "form verdict false");
    let delta = index_form(&o).map_err(err)?;
    let reduced = reduce_mod_system(&delta, &DivisorSystem::new(2, 1, 3).map_err(err)?);
    ensure!(reduced.is_zero(), "index form reduces to {reduced}");
    let s = supplementary_report(&o, 2).map_err(err)?;
    ensure!(
        (s.nu, s.mu, s.lambda) == (Some(3), Some(1), 2),
        "supplementary ({:?}, {:?}, {})",
        s.nu,
        s.mu,
        s.lambda
    );
    let f4 = ExtFieldCtx::new(2, 2).map_err(err)?;
    let t = f4.generator();
    let point = vec![f4.zero(), t.clone(), f4.mul(&t, &t)];
    let value = eval_over_ext(&delta, &f4, &point).map_err(err)?;
    ensure!(value == f4.one(), "delta(0, t, t^2) = {value}");
    Ok(())
}

fn quartic_at_two() -> Outcome {
    let o = bundled_field("quartic-13564").map_err(err)?;
    let n1 = frobenius_ideal(&o, 2, 1).map_err(err)?.norm();
    ensure!(n1 == BigInt::from(24), "N(I_1) = {n1}");
    ensure!(vp(&n1, 2).map_err(err)? == 3, "v_2(N(I_1)) != 3");
    let lam = lambda_profile(&o, 2).map_err(err)?;
    ensure!(lam == vec![3, 0, 0, 0], "lambda profile {lam:?}");
    ensure!(is_cid_counts(&o, 2).map_err(err)?.0, "counts verdict false");
    ensure!(is_cid_form(&o, 2).map_err(err)?, "form verdict false");
    let probe = ramification_probe(&o, 2).map_err(err)?;
    ensure!(
        probe.unramified_witness.is_none(),
        "unexpected witness {:?}",
        probe.unramified_witness
    );
    ensure!(probe.divides_disc, "2 does not divide {}", o.disc());
    Ok(())
}

fn period_quartic_at_three() -> Outcome {
    let built = period_order(&PeriodFieldSpec::new(13, 4).map_err(err)?).map_err(err)?;
    let shipped = bundled_field("period-13-4").map_err(err)?;
    for o in [&built, &shipped] {
        ensure!(o.disc() == &BigInt::from(2197), "disc {}", o.disc());
        let r = analyze(o, 3, 2).map_err(err)?;
        ensure!(
            r.lambda_profile[0] == 4,
            "lambda_1 = {}",
            r.lambda_profile[0]
        );
        ensure!(
            r.gbar_table[0] == BigInt::from(3),
            "gbar(1) = {}",
            r.gbar_table[0]
        );
        ensure!(
            r.verdict_counts && r.verdict_form,
            "verdicts {} {}",
            r.verdict_counts,
            r.verdict_form
        );
    }
    Ok(())
}

fn cubic_survey_to_200() -> Outcome {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    let code = inessential::cli::run(
        ["inessential", "cubic-survey", "--max", "200"],
        &mut out,
        &mut errs,
    );
    let out = String::from_utf8(out).map_err(err)?;
    ensure!(code == 0, "exit {code}: {}", String::from_utf8_lossy(&errs));
    ensure!(
        out.lines().any(|l| l == "primes: 31 43 109 127 157"),
        "output:\n{out}"
    );
    ensure!(
        out.contains("189 = 3^3 * 7"),
        "missing composite note:\n{out}"
    );
    let survey = inessential::periods::cubic_survey(200).map_err(err)?;
    for c in &survey.checks {
        ensure!(
            c.parity_verdict == c.counts_verdict && c.counts_verdict == c.form_verdict,
            "disagreement at {}",
            c.decomposition.nu
        );
    }
    for nu in [31u64, 43, 109, 127, 157] {
        let o = period_order(&PeriodFieldSpec::new(nu, 3).map_err(err)?).map_err(err)?;
        let r = analyze(&o, 2, 1).map_err(err)?;
        ensure!(
            r.verdict_counts && r.verdict_form,
            "analysis of {nu} says not a common divisor"
        );
    }
    Ok(())
}

fn formula_against_enumeration() -> Outcome {
    let mut checked = 0;
    for p in [2u64, 3, 5] {
        for k in 1..=4u32 {
            let formula = count_irreducible(p, k).map_err(err)?;
            let listed = enumerate_irreducibles(p, k).map_err(err)?.len();
            ensure!(
                formula == BigInt::from(listed),
                "p={p} k={k}: {formula} vs {listed}"
            );
            checked += 1;
        }
    }
    ensure!(checked == 12, "{checked} comparisons");
    Ok(())
}

/// Does `f` vanish on every point of `F_{p^k}^n`? Uses its own tabulated
/// field arithmetic and term-by-term evaluation.
fn vanishes_everywhere(f: &MPoly, ctx: &ExtFieldCtx) -> bool {
    let elements: Vec<FpPolynomial> = ctx.elements().unwrap().collect();
    let q = elements.len();
    let index = |a: &FpPolynomial| elements.iter().position(|b| b == a).unwrap();
    let mul: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index(&ctx.mul(a, b))).collect())
        .collect();
    let add: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index(&ctx.add(a, b))).collect())
        .collect();
    let zero = index(&ctx.zero());
    let one = index(&ctx.one());
    let terms: Vec<(Vec<u32>, usize)> = f
        .terms()
        .map(|(e, c)| (e.clone(), index(&ctx.from_int(c))))
        .filter(|(_, c)| *c != zero)
        .collect();
    let max_e = f.max_var_exponent() as usize;
    let pow: Vec<Vec<usize>> = (0..q)
        .map(|z| {
            let mut v = vec![one];
            for k in 1..=max_e {
                v.push(mul[v[k - 1]][z]);
            }
            v
        })
        .collect();
    let n = f.nvars();
    let mut point = vec![0usize; n];
    loop {
        let mut acc = zero;
        for (e, c) in &terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                t = mul[t][pow[point[i]][k as usize]];
            }
            acc = add[acc][t];
        }
        if acc != zero {
            return false;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            point[i] += 1;
            if point[i] < q {
                break;
            }
            point[i] = 0;
        }
    }
}

fn divisor_system_oracle() -> Outcome {
    let mut cases = 0;
    for o in bundled_fields().map_err(err)? {
        let delta = index_form(&o).map_err(err)?;
        let n = o.degree() as u32;
        for p in [2u64, 3, 5, 7] {
            for k in 1u32.. {
                match (p as u128).checked_pow(k * n) {
                    Some(size) if size <= 1 << 16 => {}
                    _ => break,
                }
                let symbolic =
                    in_system(&delta, &DivisorSystem::new(p, k, n as usize).map_err(err)?);
                let ctx = ExtFieldCtx::new(p, k).map_err(err)?;
                let brute = vanishes_everywhere(&delta, &ctx);
                ensure!(
                    symbolic == brute,
                    "{} p={p} k={k}: symbolic {symbolic}, evaluation {brute}",
                    o.label()
                );
                cases += 1;
            }
        }
    }
    ensure!(cases > 0, "no cases");
    Ok(())
}

fn discriminant_identity() -> Outcome {
    for o in bundled_fields().map_err(err)? {
        let delta = inessential::number_field::index_form_raw(&o).map_err(err)?;
        let f = fundamental_charpoly(&o).map_err(err)?;
        let expect = (&delta * &delta).scale(o.disc());
        let hankel = disc_in_w(&f).map_err(err)?;
        ensure!(
            hankel == expect,
            "{}: power-sum discriminant differs",
            o.label()
        );
        let sylvester = disc_via_resultant(&f).map_err(err)?;
        ensure!(
            sylvester == expect,
            "{}: resultant discriminant differs",
            o.label()
        );
    }
    Ok(())
}

fn criteria_agree() -> Outcome {
    for o in bundled_fields().map_err(err)? {
        for p in [2u64, 3, 5, 7] {
            let (counts, _) = is_cid_counts(&o, p).map_err(err)?;
            let form = is_cid_form(&o, p).map_err(err)?;
            ensure!(
                counts == form,
                "{} p={p}: counts {counts}, form {form}",
                o.label()
            );
            analyze(&o, p, 1).map_err(err)?;
        }
    }
    Ok(())
}

fn negative_case_witnesses() -> Outcome {
    let mut negatives = 0;
    for o in bundled_fields().map_err(err)? {
        for p in [2u64, 3, 5, 7] {
            if is_cid_counts(&o, p).map_err(err)?.0 {
                continue;
            }
            negatives += 1;
            let w = witness_search(&o, p, 3)
                .map_err(err)?
                .ok_or_else(|| format!("{} p={p}: no witness within 3", o.label()))?;
            ensure!(
                num_integer::Integer::gcd(&w.index, &BigInt::from(p)).is_one(),
                "{} p={p}: witness index {}",
                o.label(),
                w.index
            );
            let shape =
                criteria::factor_shape(&o, &OrderElement::new(w.coords.clone()), p).map_err(err)?;
            let lam = lambda_profile(&o, p).map_err(err)?;
            let mut distinct: Vec<u32> = shape.iter().map(|(d, _)| *d).collect();
            distinct.sort_unstable();
            let mut expected: Vec<u32> = lam
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize))
                .collect();
            expected.sort_unstable();
            ensure!(
                distinct == expected,
                "{} p={p}: shape {shape:?} vs profile {lam:?}",
                o.label()
            );
        }
    }
    ensure!(negatives > 0, "no negative cases");
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Dedekind cubic at p=2", dedekind_cubic_at_two),
        ("quartic 4.0.13564.1 at p=2", quartic_at_two),
        ("period quartic (13, 4) at p=3", period_quartic_at_three),
        ("cubic survey up to 200", cubic_survey_to_200),
        (
            "irreducible counts: formula vs enumeration",
            formula_against_enumeration,
        ),
        (
            "divisor systems vs exhaustive evaluation",
            divisor_system_oracle,
        ),
        (
            "discriminant of the fundamental equation",
            discriminant_identity,
        ),
        ("criteria agreement for p <= 7", criteria_agree),
        ("witnesses for negative cases", negative_case_witnesses),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(m) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {m}", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}

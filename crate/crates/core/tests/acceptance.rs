//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact.

mod common;

use std::process::ExitCode;

use chowring::char_classes::{chern_of_projectivization, chi_via_chern, chi_via_pontrjagin};
use chowring::cli::run;
use chowring::diophantine::{
    birational_elimination, fano_degree_check, fiber_class_lattice, p3_bundle_relation,
    solve_lemma_chern,
};
use chowring::expr::parse;
use chowring::invariants::{diffeo_classify, ring_iso_exists, verify_inv_constraints};
use chowring::presentations::{betti, bundle_over_curve, SpaceSpec};
use chowring::replay::{
    replay_main, replay_notatallmain, replay_notsomain, ReplayReport, StepKind, StepStatus,
};
use chowring::ring::{frac, int};
use common::{
    cubic_solutions, even_ring_iso, p3_square_zero, Cls, ANCHORS, DIFFEO_SPOT_PAIRS, ROUND_TRIP,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn riemann_roch() -> Outcome {
    for g in 0..=5u32 {
        for k in -8..=8i64 {
            let d = chern_of_projectivization(g, k);
            let via_c = chi_via_chern(&d.c1, &d.c2, &d.c3, &d.c4).map_err(|e| e.to_string())?;
            let via_p = chi_via_pontrjagin(&d.p1, &d.p2, &d.c2).map_err(|e| e.to_string())?;
            let want = int(1 - i64::from(g));
            ensure(via_c == want && via_p == want, || {
                format!("g={g} k={k}: chern {via_c}, pontrjagin {via_p}")
            })?;
        }
    }
    Ok(())
}

fn invariant_constraints() -> Outcome {
    for g in 0..=5u32 {
        for k in -8..=8i64 {
            let inv = verify_inv_constraints(g, k);
            let e = 1 - i64::from(g);
            ensure(
                inv.c2_squared == int(96 * e) && inv.chern_combination == int(384 * e),
                || {
                    format!(
                        "g={g} k={k}: {} / {}",
                        inv.c2_squared, inv.chern_combination
                    )
                },
            )?;
        }
    }
    Ok(())
}

fn top_degree() -> Outcome {
    for k in 0..=3i64 {
        let ring = bundle_over_curve(0, k, 4).unwrap();
        let v = ring.linear(4, 2 + k).pow(4).integrate().unwrap();
        ensure(v == int(512), || format!("k={k}: (4s+(2+k)f)^4 = {v}"))?;
    }
    let ring = bundle_over_curve(0, 3, 4).unwrap();
    let v = ring.linear(6, 5).pow(4).integrate().unwrap();
    ensure(v == int(432), || format!("(6s+5f)^4 = {v}"))
}

fn lemma_chern() -> Outcome {
    let expected: [&[(i64, i64)]; 4] = [&[(4, 2)], &[(4, 3)], &[(4, 4)], &[(4, 5), (6, 5)]];
    for k in 0..=3i64 {
        let set = solve_lemma_chern(k).map_err(|e| e.to_string())?;
        let want = expected[k as usize].to_vec();
        ensure(set.pairs() == want, || format!("k={k}: {:?}", set.pairs()))?;
        ensure(cubic_solutions(k, 96, true, true) == want, || {
            format!("k={k}: oracle disagrees")
        })?;
        if k == 1 {
            ensure(
                set.eliminated
                    .iter()
                    .any(|e| e.tuple == vec![6, 2] && e.filter.contains("mod 2")),
                || "(6,2) not recorded as parity-eliminated".into(),
            )?;
        }
    }
    Ok(())
}

fn birational() -> Outcome {
    for (k, cands, l4) in [
        (1, vec![(-3, -1), (1, 0)], ["27", "-1"]),
        (3, vec![(-1, -1), (3, 2)], ["1", "-27"]),
    ] {
        let elim = birational_elimination(k).map_err(|e| e.to_string())?;
        let got: Vec<(i64, i64)> = elim
            .candidates
            .solutions
            .iter()
            .map(|t| (t[0], t[1]))
            .collect();
        ensure(got == cands, || format!("k={k}: candidates {got:?}"))?;
        let got_l4: Vec<&str> = elim
            .verdicts
            .iter()
            .map(|v| v.lambda_fourth.as_str())
            .collect();
        ensure(got_l4 == l4, || format!("k={k}: lambda^4 {got_l4:?}"))?;
        for &(a, b) in &cands {
            let oracle = Cls::linear(k, a, b).pow(4).integrate().to_string();
            ensure(got_l4.contains(&oracle.as_str()), || {
                format!("k={k}: oracle lambda^4 {oracle}")
            })?;
        }
        ensure(elim.admissible.solutions.is_empty(), || {
            format!("k={k}: admissible nonempty")
        })?;
    }
    Ok(())
}

fn conic_numbers() -> Outcome {
    let ring = bundle_over_curve(0, 3, 4).unwrap();
    let ray = ring.class(&[(int(1), 3, 0), (frac(9, 4), 2, 1)]);
    let pairing = ring.linear(6, 5).mul(&ray).unwrap().integrate().unwrap();
    ensure(pairing == frac(1, 2), || format!("pairing {pairing}"))?;
    let fiber = fiber_class_lattice(&ring, &ring.linear(4, 3)).map_err(|e| e.to_string())?;
    let want = ring.class(&[(int(4), 3, 0), (int(9), 2, 1)]);
    ensure(fiber.primitive == want, || {
        format!("fiber {}", fiber.primitive)
    })?;
    let c1_f = ring
        .linear(6, 5)
        .mul(&fiber.primitive)
        .unwrap()
        .integrate()
        .unwrap();
    ensure(c1_f == int(2), || format!("c1.F = {c1_f}"))?;
    let cube = ring.linear(4, 3).pow(3);
    ensure(
        cube == ring.class(&[(int(64), 3, 0), (int(144), 2, 1)]),
        || format!("cube {cube}"),
    )?;
    let fd = fano_degree_check().map_err(|e| e.to_string())?;
    ensure(fd.degree == int(16), || format!("L^3 = {}", fd.degree))
}

fn classification() -> Outcome {
    for g1 in 0..=4u32 {
        for g2 in 0..=4u32 {
            for k1 in 0..8i64 {
                for k2 in 0..8i64 {
                    let rule = g1 == g2 && ((k1 - k2) % 4 == 0 || (k1 + k2) % 4 == 0);
                    let oracle = g1 == g2 && even_ring_iso(k1, k2);
                    let found = ring_iso_exists(g1, k1, g2, k2).is_some();
                    ensure(found == rule && oracle == rule, || {
                        format!("({g1},{k1}) vs ({g2},{k2}): engine {found}, oracle {oracle}")
                    })?;
                }
            }
        }
    }
    ensure(DIFFEO_SPOT_PAIRS.len() == 20, || "spot table size".into())?;
    for &((g1, k1), (g2, k2), want) in DIFFEO_SPOT_PAIRS {
        let got = diffeo_classify(g1, k1, g2, k2).as_str();
        ensure(got == want, || format!("({g1},{k1}) vs ({g2},{k2}): {got}"))?;
    }
    Ok(())
}

fn p3_relation() -> Outcome {
    for c1 in -6..=6i64 {
        for c2 in -6..=6i64 {
            let engine = p3_bundle_relation(c1, c2);
            let oracle = p3_square_zero(c1, c2);
            let rule = c1 * c1 == 4 * c2;
            ensure(engine == rule && oracle == rule, || {
                format!("c1={c1} c2={c2}: engine {engine}, oracle {oracle}")
            })?;
        }
    }
    Ok(())
}

fn flagged(report: &ReplayReport) -> Vec<&str> {
    report
        .steps_of_kind(StepKind::FlaggedDiscrepancy)
        .map(|s| s.id.as_str())
        .collect()
}

fn consistency() -> Outcome {
    for g in 0..=5u32 {
        let euler = betti(&SpaceSpec::curve(g, 1))
            .unwrap()
            .euler_characteristic();
        let c4 = chern_of_projectivization(g, 1).numbers["c4"].clone();
        ensure(int(euler) == c4 && c4 == int(8 - 8 * i64::from(g)), || {
            format!("g={g}: euler {euler}, c4 {c4}")
        })?;
    }
    for g in 2..=5u32 {
        for k in 0..4 {
            let r = replay_main(g, k).map_err(|e| e.to_string())?;
            let ids = flagged(&r);
            ensure(ids == ["betti-b3"], || {
                format!("g={g} k={k}: flagged {ids:?}")
            })?;
            let step = r.step("betti-b3").unwrap();
            ensure(
                step.payload["computed_b3"] == (2 * g).to_string()
                    && step.payload["stated_b3"] == (4 * g).to_string(),
                || format!("g={g}: payload {:?}", step.payload),
            )?;
        }
    }
    Ok(())
}

fn replays() -> Outcome {
    let mut reports = Vec::new();
    for g in 2..=5u32 {
        for k in 0..4 {
            reports.push(replay_main(g, k).map_err(|e| e.to_string())?);
        }
    }
    for k in 0..4 {
        reports.push(replay_notsomain(k).map_err(|e| e.to_string())?);
    }
    for k in -4..8 {
        let r = replay_notatallmain(k);
        let ids = flagged(&r);
        ensure(ids == ["betti-b3", "est2-a2"], || {
            format!("k={k}: flagged {ids:?}")
        })?;
        let a2 = r.step("est2-a2").unwrap();
        ensure(a2.status == StepStatus::Pass, || {
            format!("k={k}: a=2 vanishing not confirmed")
        })?;
        reports.push(r);
    }
    for r in &reports {
        ensure(r.passed(), || {
            let failed: Vec<&str> = r
                .steps
                .iter()
                .filter(|s| s.status == StepStatus::Fail)
                .map(|s| s.id.as_str())
                .collect();
            format!("{} {:?}: failed {failed:?}", r.theorem, r.parameters)
        })?;
        for s in &r.steps {
            ensure(
                ANCHORS.contains(&s.quote.as_str()) && !s.source.is_empty(),
                || {
                    format!(
                        "{}: step {} has unknown anchor {:?}",
                        r.theorem, s.id, s.quote
                    )
                },
            )?;
        }
    }
    Ok(())
}

fn parser_and_cli() -> Outcome {
    ensure(ROUND_TRIP.len() >= 30, || {
        "fewer than 30 round-trip cases".into()
    })?;
    for &(input, printed) in ROUND_TRIP {
        let ast = parse(input).map_err(|e| format!("{input}: {e}"))?;
        ensure(ast.to_string() == printed, || {
            format!("{input} printed as {ast}")
        })?;
        ensure(parse(printed).ok() == Some(ast), || {
            format!("{printed} does not round-trip")
        })?;
    }
    let ring = bundle_over_curve(0, 3, 4).unwrap();
    let neg = parse("-s^4")
        .unwrap()
        .eval(&ring)
        .unwrap()
        .integrate()
        .unwrap();
    ensure(neg == int(3), || format!("-s^4 integrates to {neg}"))?;

    let call = |args: &[&str]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("chowring").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    };
    let (code, out) = call(&[
        "eval",
        "--ring",
        "curve:g=0,k=3",
        "--integrate",
        "(6*s+5*f)^4",
    ]);
    ensure(code == 0 && out == "432\n", || {
        format!("eval: {code} {out:?}")
    })?;
    let (code, out) = call(&[
        "classify", "--g1", "2", "--k1", "1", "--g2", "2", "--k2", "3",
    ]);
    ensure(
        code == 0 && out.starts_with("diffeo_only (k1 ≡ −k2 mod 4)"),
        || format!("classify: {code} {out:?}"),
    )?;
    let (code, out) = call(&["replay", "main", "--g", "2", "--k", "1", "--format", "json"]);
    let ok = out.contains("\"theorem\": \"main\"") && out.contains("\"overall\": \"pass\"");
    ensure(code == 0 && ok, || format!("replay: exit {code}"))?;
    let (code, _) = call(&["eval", "--ring", "curve:g=0,k=3", "4·s"]);
    ensure(code == 2, || format!("bad input exit {code}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Riemann-Roch identities", riemann_roch),
        ("invariant constraints", invariant_constraints),
        ("top-degree checks", top_degree),
        ("first Chern class enumeration at genus zero", lemma_chern),
        ("birational elimination", birational),
        ("conic-case numbers", conic_numbers),
        ("classification decision", classification),
        ("P3-bundle relation", p3_relation),
        ("Euler characteristic and b3 cross-check", consistency),
        ("replay reports", replays),
        ("parser and CLI exit codes", parser_and_cli),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS criterion {:>2}: {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance gate. Each check prints one `PASS` / `FAIL` line with its
//! runtime; the process exits nonzero if any check fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidpoly::catalog::{baker_kegel, cable_t23, hopf_sum, torus_2, CatalogSpec};
use braidpoly::sweep::{fibered_knot_profile, verify_sweep, SweepOptions, SweepReport};
use braidpoly_core::homfly::{alexander, skein_triple};
use braidpoly_core::link::profile;
use braidpoly_core::normalized::{h_invariant, normalize, HGrid};
use braidpoly_core::{BraidWord, HomflyEngine, Laurent1, LaurentPoly2, LinkProfile};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn knot_profile(strands: usize, genus: i64) -> LinkProfile {
    LinkProfile::from_invariants(strands, 1, 1 - 2 * genus, 1, 1).expect("valid profile")
}

fn grid_from(profile: &LinkProfile, entries: &[(i32, i32, i64)]) -> HGrid {
    HGrid::from_entries(profile.clone(), entries.iter().copied())
}

fn cable_normalized() -> Outcome {
    let e = HomflyEngine::default();
    let prof = knot_profile(4, 3);
    let grid = normalize(&e.homfly(&cable_t23()).map_err(err)?, &prof).map_err(err)?;
    // (3 - α - α² - 2α³) + (9 - 5α² - α³) z² + (6 - α²) z⁴ + z⁶, as printed
    let printed = grid_from(
        &prof,
        &[
            (0, 0, 3),
            (1, 0, -1),
            (2, 0, -1),
            (3, 0, -2),
            (0, 1, 9),
            (2, 1, -5),
            (3, 1, -1),
            (0, 2, 6),
            (2, 2, -1),
            (0, 3, 1),
        ],
    );
    if grid == printed {
        return Ok("matches".into());
    }
    let diff: Vec<String> = (0..=3)
        .flat_map(|i| (0..=3).map(move |j| (i, j)))
        .filter(|&(i, j)| grid.h(i, j) != printed.h(i, j))
        .map(|(i, j)| {
            format!(
                "h[{i},{j}] computed {} expected {}",
                grid.h(i, j),
                printed.h(i, j)
            )
        })
        .collect();
    Err(diff.join("; "))
}

fn cable_jones() -> Outcome {
    let v = HomflyEngine::default().jones(&cable_t23()).map_err(err)?;
    let v = v.halve_exponents().ok_or("odd exponent")?;
    let expected = Laurent1::from_terms([(3, 1), (6, 1), (10, -1), (12, -1), (13, 1)]);
    ensure(v == expected, || format!("got {}", v.display_with("t")))?;
    Ok(v.display_with("t"))
}

fn baker_kegel_example() -> Outcome {
    let e = HomflyEngine::default();
    let w = baker_kegel();
    let p = e.homfly(&w).map_err(err)?;
    let prof = fibered_knot_profile(&w, &alexander(&p)).map_err(err)?;
    let grid = normalize(&p, &prof).map_err(err)?;
    let report = grid.check();
    ensure(!grid.all_nonnegative, || "no negative coefficient".into())?;
    ensure(report.coefficient_items_ok(), || format!("{report:?}"))?;
    Ok(format!(
        "genus {} from Alexander span, negative coefficient present, (a)-(f) pass",
        prof.genus.unwrap_or(0)
    ))
}

fn torus_family() -> Outcome {
    let e = HomflyEngine::default();
    for k in 3..=12 {
        let w = torus_2(k);
        let grid =
            normalize(&e.homfly(&w).map_err(err)?, &profile(&w).map_err(err)?).map_err(err)?;
        let h = h_invariant(&grid);
        ensure(h == BigInt::from(k as i64 - 3), || {
            format!("T(2,{k}): h = {h}")
        })?;
    }
    Ok("h = k - 3 for k = 3..12".into())
}

fn hopf_sums() -> Outcome {
    let e = HomflyEngine::default();
    for k in 1..=6 {
        let w = hopf_sum(k);
        let prof = profile(&w).map_err(err)?;
        let grid = normalize(&e.homfly(&w).map_err(err)?, &prof).map_err(err)?;
        let h = h_invariant(&grid);
        let k = k as i64;
        ensure(h == BigInt::from(k * (k - 1)), || format!("H_{k}: h = {h}"))?;
        ensure(
            h == BigInt::from((prof.m - 2) * prof.prime + prof.m),
            || format!("H_{k}: bound not attained"),
        )?;
    }
    Ok("h = k(k-1) = (m-2)p + m for k = 1..6".into())
}

fn sweep_theorem(r: &SweepReport) -> Outcome {
    let s = &r.summary;
    let failed: usize = s.items.iter().map(|x| x.2).sum();
    ensure(s.errors == 0 && failed == 0, || r.table())?;
    Ok(format!("{} classes, 0 item failures", s.words))
}

fn sweep_corollaries(r: &SweepReport) -> Outcome {
    let s = &r.summary;
    ensure(s.knots > 0, || "no knots".into())?;
    ensure(s.conway_failures == 0 && s.jones_failures == 0, || {
        r.table()
    })?;
    Ok(format!("{} knots", s.knots))
}

fn oracles(r: &SweepReport) -> Outcome {
    let mut checked = 0;
    for rec in &r.records {
        let Ok(e) = &rec.outcome else { continue };
        let Some(k) = &e.knot else { continue };
        if rec.entry.word.len() > 14 {
            continue;
        }
        ensure(k.jones_oracle == Some(true), || {
            format!("jones oracle mismatch on {}", rec.entry.word)
        })?;
        ensure(k.alexander_oracle, || {
            format!("alexander oracle mismatch on {}", rec.entry.word)
        })?;
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let e = HomflyEngine::default();
    let mut letters_checked = 0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=5usize);
        let len = rng.gen_range(1..=12usize);
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let w = BraidWord::new(n, letters).map_err(err)?;
        for pos in 0..w.len() {
            let t = skein_triple(&w, pos).map_err(err)?;
            let plus = e.homfly(&t.plus).map_err(err)?;
            let minus = e.homfly(&t.minus).map_err(err)?;
            let zero = e.homfly(&t.zero).map_err(err)?;
            let lhs: LaurentPoly2 = plus.shift(-1, 0) - minus.shift(1, 0);
            ensure(lhs == zero.shift(0, 1), || {
                format!("skein identity fails on {w} at {pos}")
            })?;
            letters_checked += 1;
        }
    }
    Ok(format!(
        "{checked} knots agree with both oracles; skein identity at {letters_checked} letters"
    ))
}

fn decomposition(r: &SweepReport) -> Outcome {
    for rec in &r.records {
        match &rec.outcome {
            Err(e) => return Err(format!("{}: {e}", rec.entry.word)),
            Ok(e) => ensure(e.decomposition_ok == Some(true), || {
                format!("h[1,d-1] != p on {}", rec.entry.word)
            })?,
        }
    }
    Ok(format!(
        "{} words, p = h[1,d-1], all divisions exact",
        r.records.len()
    ))
}

fn regression() -> Outcome {
    let e = HomflyEngine::default();
    let w = torus_2(3);
    let p = e.homfly(&w).map_err(err)?;
    ensure(
        p == LaurentPoly2::from_terms([(2, 0, 2), (4, 0, -1), (2, 2, 1)]),
        || format!("homfly {p}"),
    )?;
    let grid = normalize(&p, &profile(&w).map_err(err)?).map_err(err)?;
    let expected = LaurentPoly2::from_terms([(0, 0, 2), (1, 0, 1), (0, 2, 1)]);
    ensure(grid.to_poly() == expected, || {
        format!("normalized {}", grid.to_poly())
    })?;
    let c = e.conway(&w).map_err(err)?;
    ensure(c == Laurent1::from_terms([(0, 1), (2, 1)]), || {
        format!("conway {}", c.display_with("z"))
    })?;
    let v = e
        .jones(&w)
        .map_err(err)?
        .halve_exponents()
        .ok_or("odd exponent")?;
    let v = v.shift(-v.min_degree().unwrap_or(0));
    ensure(v == Laurent1::from_terms([(0, 1), (2, 1), (3, -1)]), || {
        format!("jones {}", v.display_with("t"))
    })?;
    Ok("trefoil constants".into())
}

struct Check {
    name: &'static str,
    limit: Duration,
}

fn report(check: Check, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(msg) if elapsed > check.limit => Err(format!(
            "{msg}; took {:.2?}, limit {:.0?}",
            elapsed, check.limit
        )),
        other => other,
    };
    let (tag, msg) = match &outcome {
        Ok(m) => ("PASS", m),
        Err(m) => ("FAIL", m),
    };
    println!("{tag}  {:<28} {:>9.2?}  {msg}", check.name, elapsed);
    outcome.is_ok()
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= report(
        Check {
            name: "cable normalized",
            limit: secs(5),
        },
        cable_normalized,
    );
    ok &= report(
        Check {
            name: "cable jones",
            limit: secs(5),
        },
        cable_jones,
    );
    ok &= report(
        Check {
            name: "baker-kegel",
            limit: secs(10),
        },
        baker_kegel_example,
    );
    ok &= report(
        Check {
            name: "torus family",
            limit: secs(5),
        },
        torus_family,
    );
    ok &= report(
        Check {
            name: "hopf sums",
            limit: secs(30),
        },
        hopf_sums,
    );

    let mut sweep: Option<SweepReport> = None;
    ok &= report(
        Check {
            name: "exhaustive sweep",
            limit: secs(300),
        },
        || {
            let mut opts = SweepOptions::new(CatalogSpec::exhaustive(4, 10));
            opts.jobs = 1;
            let r = verify_sweep(&opts).map_err(|e| format!("{e:#}"))?;
            let msg = sweep_theorem(&r);
            sweep = Some(r);
            msg
        },
    );
    match &sweep {
        Some(r) => {
            ok &= report(
                Check {
                    name: "conway and jones bounds",
                    limit: secs(60),
                },
                || sweep_corollaries(r),
            );
            ok &= report(
                Check {
                    name: "oracles and skein",
                    limit: secs(120),
                },
                || oracles(r),
            );
            ok &= report(
                Check {
                    name: "decomposition",
                    limit: secs(60),
                },
                || decomposition(r),
            );
        }
        None => {
            for name in [
                "conway and jones bounds",
                "oracles and skein",
                "decomposition",
            ] {
                println!("FAIL  {name:<28} sweep did not run");
            }
            ok = false;
        }
    }
    ok &= report(
        Check {
            name: "regression constants",
            limit: secs(5),
        },
        regression,
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! straight to stdout so the lines survive the test harness capture.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use abt_core::abh::{
    abh_to_ssb_triangle, enumerate_abh, enumerate_abh_with, ssb_triangle_to_abh, validate_abh,
    validate_abh_with, Bounds,
};
use abt_core::abt::{
    abt_to_approval_seq, abt_to_nclp, approval_seq_to_abt, enumerate_abt, enumerate_two_row_abt,
    for_each_abt, is_dyck_type, is_motzkin_type, nclp_to_abt, triangle_to_nclp, validate_abt,
    validate_nclp, AbtTriangle,
};
use abt_core::counting::{andrews_count, catalan, motzkin, ssb_count};
use abt_core::figures;
use abt_core::seq::prec;
use abt_core::ssb::{
    enumerate_ssb, ssb_to_syt, ssb_to_triangle, syt_to_ssb, syt_to_triangle, triangle_to_ssb,
    triangle_to_syt, validate_ssb, validate_ssb_triangle, validate_syt, Ballot, ShiftedSyt,
};
use abt_core::triangle::Triangle;
use abt_core::tsscpp::{
    abt_to_boolean, abt_to_magog, boolean_to_abt, boolean_to_nilp, domain_to_full, domain_to_magog,
    domain_to_nilp, enumerate_magog, magog_to_abt, magog_to_domain, nilp_to_boolean,
    nilp_to_domain, verify_tsscpp,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: abt_core::Error) -> String {
    err.to_string()
}

fn abt_count(n: usize) -> Result<u64, String> {
    let mut c = 0u64;
    for_each_abt(n, |_| c += 1).map_err(e)?;
    Ok(c)
}

fn criterion_1() -> Outcome {
    let want = [2u64, 7, 42, 429, 7436];
    for (n, &w) in (1..=5).zip(&want) {
        let got = abt_count(n)?;
        let formula = andrews_count(n as u64 + 1);
        ensure(got == w && formula == w.into(), || {
            format!("size {n}: enumerated {got}, formula {formula}, expected {w}")
        })?;
    }
    let start = Instant::now();
    let six = abt_count(6)?;
    let took = start.elapsed();
    ensure(six == 218348, || format!("size 6: enumerated {six}"))?;
    ensure(took < Duration::from_secs(60), || {
        format!("size 6 took {took:?}")
    })?;
    Ok(format!(
        "sizes 1-5 give 2, 7, 42, 429, 7436; size 6 gives 218348 in {} ms",
        took.as_millis()
    ))
}

fn criterion_2() -> Outcome {
    let mut seen = Vec::new();
    for n in 1..=3usize {
        let abh = enumerate_abh(n).map_err(e)?.len() as u64;
        let ssb = enumerate_ssb(n + 2).map_err(e)?.len() as u64;
        let formula = ssb_count(n as u64 + 2);
        ensure(abh == ssb && formula == abh.into(), || {
            format!("size {n}: {abh} hypertriangles, {ssb} ballots, formula {formula}")
        })?;
        seen.push(abh.to_string());
    }
    ensure(seen == ["2", "12", "286"], || format!("counts {seen:?}"))?;
    Ok("hypertriangle counts 2, 12, 286 equal ballot counts and the closed form".into())
}

fn bit_set(abts: &[AbtTriangle]) -> BTreeSet<Vec<u8>> {
    abts.iter()
        .map(|a| a.as_triangle().cells().to_vec())
        .collect()
}

fn criterion_3() -> Outcome {
    let six = enumerate_two_row_abt(6).map_err(e)?;
    let dyck: Vec<AbtTriangle> = six.iter().filter(|a| is_dyck_type(a, 3)).cloned().collect();
    let want: Vec<AbtTriangle> = figures::DYCK_6
        .iter()
        .map(|(u, l)| figures::two_row_abt(6, u, l))
        .collect();
    ensure(bit_set(&dyck) == bit_set(&want), || {
        format!("{} dyck-type at size 6", dyck.len())
    })?;
    let four = enumerate_two_row_abt(4).map_err(e)?;
    let motz: Vec<AbtTriangle> = four
        .iter()
        .filter(|a| is_motzkin_type(a))
        .cloned()
        .collect();
    let want: Vec<AbtTriangle> = figures::MOTZKIN_4
        .iter()
        .map(|(u, l)| figures::two_row_abt(4, u, l))
        .collect();
    ensure(bit_set(&motz) == bit_set(&want), || {
        format!("{} motzkin-type at size 4", motz.len())
    })?;
    for k in 1..=5usize {
        let got = enumerate_two_row_abt(2 * k)
            .map_err(e)?
            .iter()
            .filter(|a| is_dyck_type(a, k))
            .count() as u64;
        ensure(catalan(k as u64) == got.into(), || {
            format!("dyck k={k}: {got}")
        })?;
    }
    for m in 1..=8usize {
        let got = enumerate_two_row_abt(m)
            .map_err(e)?
            .iter()
            .filter(|a| is_motzkin_type(a))
            .count() as u64;
        ensure(motzkin(m as u64) == got.into(), || {
            format!("motzkin size {m}: {got}")
        })?;
    }
    Ok("5 dyck-type at size 6, 9 motzkin-type at size 4; Catalan to k=5, Motzkin to size 8".into())
}

fn criterion_4() -> Outcome {
    // (a)
    let all = enumerate_abt(3).map_err(e)?;
    ensure(bit_set(&all) == bit_set(&figures::size3_abts()), || {
        "size-3 set differs".into()
    })?;
    // (b)
    let abt = figures::order6_abt();
    ensure(abt_to_boolean(&abt) == figures::order6_boolean(), || {
        "ABT to Boolean".into()
    })?;
    ensure(
        boolean_to_abt(&figures::order6_boolean()).map_err(e)? == abt,
        || "Boolean to ABT".into(),
    )?;
    // (c)
    let domain = magog_to_domain(&figures::order5_magog()).map_err(e)?;
    let full = domain_to_full(&domain).map_err(e)?;
    ensure(full.matrix() == figures::order5_tsscpp().as_slice(), || {
        "10x10 matrix differs".into()
    })?;
    // (d)
    let syt = ssb_to_syt(&figures::ballot7()).map_err(e)?;
    ensure(syt.rows() == figures::ballot7_syt_rows().as_slice(), || {
        "tableau differs".into()
    })?;
    let tri = syt_to_triangle(&syt).map_err(e)?;
    ensure(tri.to_rows() == figures::ballot7_triangle_rows(), || {
        "triangle differs".into()
    })?;
    // (e)
    ensure(validate_abh(&figures::abh5()), || {
        "size-5 hypertriangle rejected".into()
    })?;
    // (f)
    let t = figures::ssb_triangle5();
    ensure(validate_ssb_triangle(&t), || {
        "order-5 triangle rejected".into()
    })?;
    let back = abh_to_ssb_triangle(&ssb_triangle_to_abh(&t).map_err(e)?).map_err(e)?;
    ensure(back == t, || "order-5 triangle does not round-trip".into())?;
    Ok("(a)-(f) all match".into())
}

fn criterion_5() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=4 {
        for a in enumerate_abt(n).map_err(e)? {
            ensure(
                approval_seq_to_abt(&abt_to_approval_seq(&a)).map_err(e)? == a,
                || format!("approval round trip fails at size {n}"),
            )?;
            ensure(boolean_to_abt(&abt_to_boolean(&a)).map_err(e)? == a, || {
                format!("Boolean round trip fails at size {n}")
            })?;
            ensure(nclp_to_abt(&abt_to_nclp(&a)).map_err(e)? == a, || {
                format!("NCLP round trip fails at size {n}")
            })?;
            checked += 1;
        }
    }
    let mut squares = 0usize;
    for order in 2..=5 {
        for m in enumerate_magog(order).map_err(e)? {
            let d = magog_to_domain(&m).map_err(e)?;
            let p = domain_to_nilp(&d).map_err(e)?;
            let b = nilp_to_boolean(&p).map_err(e)?;
            let a = boolean_to_abt(&b).map_err(e)?;
            ensure(magog_to_abt(&m).map_err(e)? == a, || {
                format!("square fails at order {order}")
            })?;
            ensure(abt_to_magog(&a).map_err(e)? == m, || {
                format!("inverse fails at order {order}")
            })?;
            ensure(boolean_to_nilp(&b).map_err(e)? == p, || {
                "boolean to nilp".into()
            })?;
            ensure(nilp_to_domain(&p).map_err(e)? == d, || {
                "nilp to domain".into()
            })?;
            ensure(domain_to_magog(&d).map_err(e)? == m, || {
                "domain to magog".into()
            })?;
            squares += 1;
        }
    }
    let mut ballots = 0usize;
    for n in 1..=4 {
        for b in enumerate_ssb(n).map_err(e)? {
            let s = ssb_to_syt(&b).map_err(e)?;
            let t = syt_to_triangle(&s).map_err(e)?;
            ensure(triangle_to_syt(&t).map_err(e)? == s, || {
                "triangle to tableau".into()
            })?;
            ensure(syt_to_ssb(&s).map_err(e)? == b, || {
                "tableau to ballot".into()
            })?;
            ensure(triangle_to_ssb(&t).map_err(e)? == b, || {
                "triangle to ballot".into()
            })?;
            ballots += 1;
        }
    }
    let mut hyper = 0usize;
    for n in 3..=5 {
        for b in enumerate_ssb(n).map_err(e)? {
            let t = ssb_to_triangle(&b).map_err(e)?;
            let h = ssb_triangle_to_abh(&t).map_err(e)?;
            ensure(validate_abh(&h), || "image is not a hypertriangle".into())?;
            ensure(abh_to_ssb_triangle(&h).map_err(e)? == t, || {
                format!("abh round trip at {n}")
            })?;
            hyper += 1;
        }
    }
    ensure(hyper == 2 + 12 + 286, || format!("{hyper} triangles"))?;
    Ok(format!(
        "{checked} ABTs, {squares} magog squares (429 at order 5), {ballots} ballots, {hyper} triangles (286 at order 5)"
    ))
}

fn criterion_6() -> Outcome {
    for mask in 0u32..(1 << 10) {
        let cells: Vec<u8> = (0..10).map(|k| ((mask >> k) & 1) as u8).collect();
        let tri = Triangle::from_cells(4, cells).map_err(e)?;
        let by_rows = validate_abt(&tri).map_err(e)?;
        let by_paths = validate_nclp(&triangle_to_nclp(&tri));
        ensure(by_rows == by_paths, || {
            format!("size-4 mask {mask:#x} disagrees")
        })?;
    }

    // All orderings of the multiset {1^4, 2^3, 3^2, 4}.
    let mut orderings = 0usize;
    let mut remaining = [0usize, 4, 3, 2, 1];
    let mut word = Vec::with_capacity(10);
    let mut mismatch = None;
    fn walk(
        remaining: &mut [usize; 5],
        word: &mut Vec<usize>,
        count: &mut usize,
        mismatch: &mut Option<String>,
    ) {
        if word.len() == 10 {
            *count += 1;
            let ballot = Ballot::new(4, word.clone()).expect("in range");
            let strict = validate_ssb(&ballot).expect("right multiset");
            let rows: Vec<Vec<u32>> = (1..=4)
                .map(|k| {
                    word.iter()
                        .enumerate()
                        .filter(|(_, &v)| v == k)
                        .map(|(p, _)| p as u32 + 1)
                        .collect()
                })
                .collect();
            let tableau = validate_syt(&ShiftedSyt::from_rows(rows).expect("staircase"));
            if strict != tableau && mismatch.is_none() {
                *mismatch = Some(format!("{word:?}"));
            }
            return;
        }
        for k in 1..=4 {
            if remaining[k] > 0 {
                remaining[k] -= 1;
                word.push(k);
                walk(remaining, word, count, mismatch);
                word.pop();
                remaining[k] += 1;
            }
        }
    }
    walk(&mut remaining, &mut word, &mut orderings, &mut mismatch);
    ensure(mismatch.is_none(), || {
        format!("ballot/tableau disagree on {mismatch:?}")
    })?;
    ensure(orderings == 12600, || format!("{orderings} orderings"))?;

    let seqs: Vec<Vec<u8>> = (0..=6usize)
        .flat_map(|len| {
            (0u32..(1 << len)).map(move |m| (0..len).map(|k| ((m >> k) & 1) as u8).collect())
        })
        .collect();
    for s in &seqs {
        for t in &seqs {
            let mut padded = s.clone();
            let oracle = s.len() <= t.len() && {
                padded.resize(t.len(), 0);
                let (mut a, mut b) = (0u32, 0u32);
                padded.iter().zip(t).rev().all(|(&x, &y)| {
                    a += u32::from(x);
                    b += u32::from(y);
                    a <= b
                })
            };
            ensure(prec(s, t) == oracle, || {
                format!("prec disagrees on {s:?} {t:?}")
            })?;
        }
    }
    Ok(format!(
        "1024 size-4 triangles, {orderings} vote orderings, {} sequence pairs",
        seqs.len() * seqs.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut checked = 0usize;
    for order in 1..=4 {
        for m in enumerate_magog(order).map_err(e)? {
            let full = domain_to_full(&magog_to_domain(&m).map_err(e)?).map_err(e)?;
            ensure(verify_tsscpp(&full), || {
                format!("order {order} fails symmetry")
            })?;
            checked += 1;
        }
    }
    let full = domain_to_full(&figures::order5_domain()).map_err(e)?;
    ensure(verify_tsscpp(&full), || {
        "order-5 instance fails symmetry".into()
    })?;
    Ok(format!(
        "{checked} objects of order <= 4 (42 at order 4) plus the order-5 instance"
    ))
}

fn criterion_8() -> Outcome {
    criterion_2()?;
    ensure(validate_abh(&figures::abh5()), || {
        "definition bounds reject size-5 example".into()
    })?;
    let strict: Vec<usize> = (1..=3)
        .map(|n| enumerate_abh_with(n, Bounds::StrictRestatement).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    let example = validate_abh_with(&figures::abh5(), Bounds::StrictRestatement);
    let diverges = strict != [2, 12, 286];
    Ok(format!(
        "definition bounds: 2, 12, 286 and the size-5 example passes; strict variant: counts {strict:?}{}, size-5 example {}",
        if diverges { " DIVERGE from the ballot counts" } else { " agree" },
        if example { "passes" } else { "fails" }
    ))
}

fn bin_output(args: &[&str], stdin: Option<&str>) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abt"));
    cmd.args(args);
    cmd.stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped());
    let mut child = cmd.spawn().map_err(|x| x.to_string())?;
    let mut pipe = child.stdin.take().expect("piped");
    pipe.write_all(stdin.unwrap_or("").as_bytes())
        .map_err(|x| x.to_string())?;
    drop(pipe);
    let out = child.wait_with_output().map_err(|x| x.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited {:?}", out.status.code())
    })?;
    Ok(out.stdout)
}

fn criterion_9() -> Outcome {
    let abt = r#"{"family":"abt","size":5,"rows":[[0],[0,1],[0,0,1],[1,0,1,0],[0,1,0,1,1]]}"#;
    let magog = r#"{"family":"magog","order":5,"rows":[[1],[1,1],[1,1,1],[1,2,2,3],[1,2,2,4,4]]}"#;
    let ballot = r#"{"family":"ssb","n":7,"votes":[1,1,1,2,1,2,2,3,1,3,1,2,3,1,2,4,4,5,2,3,4,5,3,4,6,5,6,7]}"#;
    let mut runs: Vec<(Vec<&str>, Option<String>)> = Vec::new();
    for (fam, size) in [
        ("abt", "4"),
        ("boolean", "5"),
        ("magog", "5"),
        ("ssb", "5"),
        ("abh", "3"),
    ] {
        runs.push((vec!["enumerate", "--family", fam, "--size", size], None));
    }
    for to in [
        "approval-seq",
        "nclp",
        "boolean",
        "nilp",
        "domain",
        "magog",
        "tsscpp",
    ] {
        runs.push((vec!["convert", "--to", to], Some(abt.to_string())));
    }
    for to in ["syt", "ssb-triangle", "abh"] {
        runs.push((vec!["convert", "--to", to], Some(ballot.to_string())));
    }
    runs.push((vec!["render", "--kind", "triangle"], Some(abt.to_string())));
    runs.push((
        vec!["render", "--kind", "triangle", "--format", "svg"],
        Some(abt.to_string()),
    ));
    runs.push((
        vec!["render", "--kind", "heights", "--format", "svg"],
        Some(magog.to_string()),
    ));
    let nclp = String::from_utf8(bin_output(&["convert", "--to", "nclp"], Some(abt))?).unwrap();
    runs.push((
        vec!["render", "--kind", "paths", "--format", "svg"],
        Some(nclp.clone()),
    ));
    runs.push((vec!["render", "--kind", "paths"], Some(nclp)));
    for (args, stdin) in &runs {
        let first = bin_output(args, stdin.as_deref())?;
        let second = bin_output(args, stdin.as_deref())?;
        ensure(!first.is_empty() && first == second, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(format!(
        "{} commands byte-identical across two runs",
        runs.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 ABT counts", criterion_1),
        ("2 hypertriangle counts", criterion_2),
        ("3 specialization counts", criterion_3),
        ("4 worked examples", criterion_4),
        ("5 round trips", criterion_5),
        ("6 oracle equivalences", criterion_6),
        ("7 symmetry", criterion_7),
        ("8 bound adjudication", criterion_8),
        ("9 determinism", criterion_9),
    ];
    let mut failed = Vec::new();
    let stdout = std::io::stdout();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        let line = match &outcome {
            Ok(d) => format!("criterion {name}: PASS ({ms} ms) {d}\n"),
            Err(d) => format!("criterion {name}: FAIL ({ms} ms) {d}\n"),
        };
        // Direct handle writes bypass the harness capture.
        let _ = stdout.lock().write_all(line.as_bytes());
        if outcome.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

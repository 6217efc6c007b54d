//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when a
//! blocking criterion fails; the statistical smoke check only reports.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bicolor_cli::dispatch;
use bicolor_core::generate::{for_each_doubly_lexical, random_pattern, random_tree, tree_from_prufer};
use bicolor_core::verifier::canonical_key;
use bicolor_core::{
    bbal_path_formula, bbal_star_formula, certify_extremal, construct_half_split, construct_path_extremal,
    construct_star_extremal, exact_bbal_star, exhaustive_bbal, find_copy_with_red_count, find_unavoidable_pattern,
    is_omnitonal, matches_extremal_family, random_pattern_experiment, spectrum_bruteforce, tonality_spectrum,
    Color, ExhaustiveOptions, ExtremalFamily, HostColoring, PatternGraph, Side, Vertex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

fn spectrum_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = 0u64;
    for p in 0..=10 {
        for q in 0..=10 - p {
            for_each_doubly_lexical(p, q, 12, |g| {
                checked += 1;
                if tonality_spectrum(g) != spectrum_bruteforce(g).unwrap() {
                    mismatches += 1;
                }
            });
        }
    }
    let exhaustive_time = start.elapsed();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let g = random_pattern(&mut rng, 16);
        checked += 1;
        if tonality_spectrum(&g) != spectrum_bruteforce(&g).unwrap() {
            mismatches += 1;
        }
    }
    let ok = mismatches == 0 && exhaustive_time < Duration::from_secs(60) && within(start, Duration::from_secs(300));
    outcome(
        ok,
        format!("{checked} patterns, {mismatches} mismatches, exhaustive part {exhaustive_time:.1?}"),
    )
}

/// Every Prüfer sequence of length `v - 2`, split on the first symbol.
fn all_trees_omnitonal(v: usize) -> (u64, u64) {
    if v < 3 {
        let g = match v {
            1 => PatternGraph::new(1, 0, Vec::new()).unwrap(),
            _ => tree_from_prufer(&[]),
        };
        return (1, u64::from(!is_omnitonal(&g)));
    }
    let len = v - 2;
    (0..v)
        .into_par_iter()
        .map(|first| {
            let mut seq = vec![0; len];
            seq[0] = first;
            let (mut count, mut bad) = (0u64, 0u64);
            loop {
                count += 1;
                if !is_omnitonal(&tree_from_prufer(&seq)) {
                    bad += 1;
                }
                let mut i = len - 1;
                loop {
                    if i == 0 {
                        return (count, bad);
                    }
                    seq[i] += 1;
                    if seq[i] < v {
                        break;
                    }
                    seq[i] = 0;
                    i -= 1;
                }
            }
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
}

fn trees_omnitonal() -> Outcome {
    let start = Instant::now();
    let (mut count, mut bad) = (0u64, 0u64);
    for v in 1..=9 {
        let (c, b) = all_trees_omnitonal(v);
        count += c;
        bad += b;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let v = rng.gen_range(1..=50);
        count += 1;
        if !is_omnitonal(&random_tree(&mut rng, v)) {
            bad += 1;
        }
    }
    outcome(
        bad == 0 && within(start, Duration::from_secs(600)),
        format!("{count} trees, {bad} not omnitonal, {:.1?}", start.elapsed()),
    )
}

fn non_omnitonal_witnesses() -> Outcome {
    let c4 = PatternGraph::cycle(2);
    let k33 = PatternGraph::complete_bipartite(3, 3);
    let a = tonality_spectrum(&c4).values();
    let b = tonality_spectrum(&k33).values();
    let ok = a == [0, 2, 4] && b == [0, 3, 6, 9] && !is_omnitonal(&c4) && !is_omnitonal(&k33);
    outcome(ok, format!("C4 {a:?}, K33 {b:?}"))
}

fn path_balancing_numbers() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, k) in [(3, 4), (4, 4), (4, 5)] {
        let r = exhaustive_bbal(n, &PatternGraph::path(k), &ExhaustiveOptions::default()).unwrap();
        let formula = bbal_path_formula(n, k).unwrap().value;
        let single_edge = r.extremal_red_graphs.len() == 1 && r.extremal_red_graphs[0].len() == 1;
        ok &= r.exact_value == 1 && r.exact_value as i64 == formula && single_edge && r.extremal_verified;
        notes.push(format!("n={n} P{k}: {}", r.exact_value));
    }
    ok &= within(start, Duration::from_secs(60));

    let long = ExhaustiveOptions {
        long_run: true,
        shards: 8,
        ..Default::default()
    };
    let r = exhaustive_bbal(5, &PatternGraph::path(6), &long).unwrap();
    let star = construct_path_extremal(5, 6).unwrap();
    let family_ok = r.extremal_red_graphs.len() == 1 && {
        let c = HostColoring::from_red_edges(5, r.extremal_red_graphs[0].iter().copied()).unwrap();
        canonical_key(c.to_mask().unwrap(), 5) == canonical_key(star.to_mask().unwrap(), 5)
            && matches_extremal_family(&c, ExtremalFamily::Path, 5, 6)
    };
    ok &= r.exact_value == 5 && family_ok && r.extremal_verified && within(start, Duration::from_secs(3600));
    notes.push(format!("n=5 P6: {} (K_1,5 family: {family_ok})", r.exact_value));
    outcome(ok, format!("{}, {:.1?}", notes.join(", "), start.elapsed()))
}

fn star_balancing_numbers() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut values = Vec::new();
    for (n, k) in (10..=16).map(|n| (n, 4)).chain([(22, 6)]) {
        let r = exact_bbal_star(n, k).unwrap();
        let formula = bbal_star_formula(n, k).unwrap().value;
        let expected = if k == 4 { 2 * n - 1 } else { 84 };
        ok &= r.exact_value == expected && r.exact_value as i64 == formula && r.extremal_verified;
        values.push(r.exact_value);
    }
    ok &= within(start, Duration::from_secs(60));
    outcome(ok, format!("values {values:?}, {:.1?}", start.elapsed()))
}

fn extremal_certificates() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in (2..=10).step_by(2) {
        let threshold = bbal_path_formula(2, k).unwrap().threshold as usize;
        // The formula needs n >= 2, which threshold + 1 misses for k = 2.
        let first = (threshold + 1).max(2);
        for n in first..first + 5 {
            let c = construct_path_extremal(n, k).unwrap();
            let claimed = bbal_path_formula(n, k).unwrap().value as usize;
            for len in [k, k + 1] {
                checked += 1;
                if !certify_extremal(&c, &PatternGraph::path(len), claimed) {
                    failures.push(format!("path n={n} k={k} P{len}"));
                }
            }
        }
    }
    for (n, k) in [(10, 4), (22, 6)] {
        let c = construct_star_extremal(n, k).unwrap();
        let claimed = bbal_star_formula(n, k).unwrap().value as usize;
        for len in [k, k + 1] {
            checked += 1;
            if !certify_extremal(&c, &PatternGraph::star(len), claimed) {
                failures.push(format!("star n={n} k={k} K1,{len}"));
            }
        }
    }
    let ok = failures.is_empty() && within(start, Duration::from_secs(120));
    outcome(
        ok,
        format!("{checked} certificates, failures {failures:?}, {:.1?}", start.elapsed()),
    )
}

fn mask_indices(mask: u32, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |i| mask >> i & 1 == 1)
}

/// Tries every `A` on either side against disjoint `B1`, `B2` on the other,
/// in both shapes and both core colors.
fn naive_unavoidable(c: &HostColoring, t: usize, big_t: usize) -> bool {
    let n = c.n();
    let sized = |s: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == s);
    for (a_len, b1_len, b2_len) in [(big_t, big_t, t), (t, big_t, big_t)] {
        for side in [Side::Left, Side::Right] {
            for a in sized(a_len) {
                for b1 in sized(b1_len) {
                    for b2 in sized(b2_len).filter(|b2| b2 & b1 == 0) {
                        let block = |ys: u32, col: Color| {
                            mask_indices(a, n).all(|x| {
                                mask_indices(ys, n)
                                    .all(|y| c.edge_color(Vertex::new(side, x), Vertex::new(side.other(), y)) == col)
                            })
                        };
                        for core in [Color::Red, Color::Blue] {
                            if block(b1, core) && block(b2, core.other()) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

fn scanner_soundness() -> Outcome {
    let mut disagreements = 0;
    let mut invalid = 0;
    let mut found = 0;
    for x in 0u64..512 {
        let c = HostColoring::from_mask(3, x).unwrap();
        let w = find_unavoidable_pattern(&c, 1, 1).unwrap();
        if w.is_some() != naive_unavoidable(&c, 1, 1) {
            disagreements += 1;
        }
        if let Some(w) = w {
            found += 1;
            if w.validate(&c).is_err() {
                invalid += 1;
            }
        }
    }
    outcome(
        disagreements == 0 && invalid == 0,
        format!("512 colorings, {found} with a witness, {disagreements} disagreements, {invalid} invalid"),
    )
}

fn half_split_cross_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut disagreements = Vec::new();
    for _ in 0..50 {
        let g = random_pattern(&mut rng, 8);
        let n = 2 * g.vertex_count();
        let host = construct_half_split(n).unwrap();
        let s = tonality_spectrum(&g);
        for r in 0..=g.edge_count() {
            let found = find_copy_with_red_count(&host, &g, r).unwrap();
            let valid = found.as_ref().is_none_or(|e| e.validate(&host, &g).is_ok());
            if found.is_some() != s.contains(r) || !valid {
                disagreements.push(format!("{} r={r}", g.to_bg().replace('\n', " ")));
            }
        }
    }
    outcome(disagreements.is_empty(), format!("50 patterns, disagreements {disagreements:?}"))
}

fn statistical_smoke() -> Outcome {
    let r = random_pattern_experiment(12, 1, 1, 10, 1000, 0).unwrap();
    let detail = format!("found {} of {}", r.found, r.trials);
    let detail = if r.missing.is_empty() {
        detail
    } else {
        format!("{detail}; missing {}", serde_json::to_string(&r.missing).unwrap())
    };
    outcome(r.found == 1000, detail)
}

fn cli(args: &[String]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bicolor".to_owned()).chain(args.iter().cloned());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn strings(args: &[&str]) -> Vec<String> {
    args.iter().map(|s| s.to_string()).collect()
}

fn without_timing(text: &str) -> String {
    text.lines().filter(|l| !l.contains("\"elapsedMillis\"")).collect::<Vec<_>>().join("\n")
}

fn drop_elapsed(v: &Value) -> Value {
    let mut v = v.clone();
    v.as_object_mut().unwrap().remove("elapsedMillis");
    v
}

const REPORT_FIELDS: [&str; 7] = [
    "n",
    "patternDescription",
    "exactValue",
    "extremalRedGraphs",
    "coloringsExamined",
    "extremalVerified",
    "method",
];

/// Max of the values, union of the graphs at the max, sum of the counts.
fn merge_in_test(parts: &[Value]) -> Value {
    let best = parts.iter().map(|p| p["exactValue"].as_u64().unwrap()).max().unwrap();
    let mut graphs: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    for p in parts.iter().filter(|p| p["exactValue"] == best) {
        let g: Vec<Vec<(usize, usize)>> = serde_json::from_value(p["extremalRedGraphs"].clone()).unwrap();
        graphs.extend(g);
    }
    let mut merged = parts[0].clone();
    merged["exactValue"] = best.into();
    merged["extremalRedGraphs"] = serde_json::to_value(&graphs).unwrap();
    merged["coloringsExamined"] = parts.iter().map(|p| p["coloringsExamined"].as_u64().unwrap()).sum::<u64>().into();
    merged["extremalVerified"] = parts.iter().all(|p| p["extremalVerified"] == true).into();
    merged
}

fn determinism() -> Outcome {
    let mut problems = Vec::new();
    let cases: [(&str, &str, bool); 6] =
        [("3", "4", false), ("4", "4", false), ("4", "5", false), ("3", "3", false), ("4", "3", false), ("5", "6", true)];
    for (n, k, long) in cases {
        let mut base = strings(&["--json-only", "verify-bbal", "--family", "path", "--n", n, "--k", k]);
        if long {
            base.push("--long-run".into());
        }
        let (code, single) = cli(&base);
        let single: Value = serde_json::from_str(&single).unwrap();
        let single = &single["result"];

        let mut parts = Vec::new();
        for i in 0..4 {
            let mut args = base.clone();
            args.extend(strings(&["--shards", "4", "--shard", &i.to_string()]));
            let (_, out) = cli(&args);
            let v: Value = serde_json::from_str(&out).unwrap();
            parts.push(v["result"].clone());
        }
        let merged = merge_in_test(&parts);
        let mut internal = base.clone();
        internal.extend(strings(&["--shards", "4"]));
        let (_, internal) = cli(&internal);
        let internal: Value = serde_json::from_str(&internal).unwrap();

        for field in REPORT_FIELDS {
            if merged[field] != single[field] {
                problems.push(format!("n={n} k={k} shards concatenated differ in {field}"));
            }
        }
        if drop_elapsed(&internal["result"]) != drop_elapsed(single) {
            problems.push(format!("n={n} k={k} internal sharding differs"));
        }
        if code != 0 {
            problems.push(format!("n={n} k={k} exit {code}"));
        }
    }

    let exp = strings(&[
        "--seed", "0", "experiment", "--n", "12", "--t", "1", "--T", "1", "--min-per-color", "10", "--trials", "300",
    ]);
    let (_, a) = cli(&exp);
    let (_, b) = cli(&exp);
    if without_timing(&a) != without_timing(&b) {
        problems.push("experiment output not byte-stable".into());
    }
    outcome(problems.is_empty(), format!("6 verify-bbal configurations, problems {problems:?}"))
}

/// Id, name, whether a failure is blocking, and the check.
type Criterion = (u32, &'static str, bool, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "spectrum DP equals brute force", true, spectrum_equivalence),
        (2, "trees are omnitonal", true, trees_omnitonal),
        (3, "C4 and K33 are not omnitonal", true, non_omnitonal_witnesses),
        (4, "exhaustive path balancing numbers", true, path_balancing_numbers),
        (5, "flow oracle star balancing numbers", true, star_balancing_numbers),
        (6, "extremal certificates", true, extremal_certificates),
        (7, "unavoidable pattern scanner on K33", true, scanner_soundness),
        (8, "half-split host realizes exactly the spectrum", true, half_split_cross_check),
        (9, "random pattern experiment (report only)", false, statistical_smoke),
        (10, "shard and seed determinism", true, determinism),
    ];
    let mut blocking_failures = 0;
    for (id, name, blocking, check) in criteria {
        let start = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {verdict} {name}: {} [{:.1?}]", o.detail, start.elapsed());
        if blocking && !o.pass {
            blocking_failures += 1;
        }
    }
    if blocking_failures > 0 {
        println!("{blocking_failures} blocking criteria failed");
        std::process::exit(1);
    }
}

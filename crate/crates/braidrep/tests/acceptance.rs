//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use braidrep::cli::{run_degeneration, run_elliptic, run_export, DegenerationArgs, EllipticArgs, ExportArgs, ModeArg};
use braidrep::files::BasisCache;
use braidrep_core::elliptic::{affine_hecke_check, build, check_daha, check_elliptic_on, check_scalars, Mode};
use braidrep_core::rea::{dmodule_axiom_check, reflection_check, Conventions};
use braidrep_core::report::Report;
use braidrep_core::slnjets::{check_hecke, check_yis, KParam, DEFAULT_ORDER};
use braidrep_core::uqsl2::check_quasitriangular;

struct Verdict {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[Report]) -> Verdict {
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(move |o| format!("{}: {}", r.title, o.name)))
        .collect();
    Verdict {
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

fn within(v: Verdict, elapsed: Duration, budget: Duration) -> Verdict {
    if elapsed <= budget {
        return v;
    }
    let over = format!("took {:.1}s, budget {}s", elapsed.as_secs_f64(), budget.as_secs());
    Verdict {
        passed: false,
        detail: if v.detail.is_empty() {
            over
        } else {
            format!("{}; {over}", v.detail)
        },
    }
}

fn c1() -> Verdict {
    from_reports(&[check_quasitriangular(3, 2)])
}

fn c2() -> Verdict {
    from_reports(&[reflection_check(4, Conventions::default()).unwrap()])
}

fn c3() -> Verdict {
    from_reports(&[dmodule_axiom_check(4, Conventions::default())])
}

fn c4() -> Verdict {
    let mut reports = Vec::new();
    let mut prescreen = Duration::ZERO;
    for (n, k) in [(2, 4), (2, 6), (4, 3)] {
        let (ambient, w) = build(n, k, Conventions::default()).unwrap();
        let start = Instant::now();
        reports.push(check_elliptic_on(
            &ambient,
            &w,
            Mode::Probabilistic { trials: 3, seed: 7 },
            None,
        ));
        prescreen += start.elapsed();
        reports.push(check_elliptic_on(&ambient, &w, Mode::Exact, None));
    }
    within(from_reports(&reports), prescreen, Duration::from_secs(60))
}

fn c5() -> Verdict {
    let reports: Vec<_> = [(2, 4), (4, 4)]
        .into_iter()
        .map(|(n, k)| check_scalars(n, k).unwrap())
        .collect();
    let mut v = from_reports(&reports);
    let constants: Vec<String> = reports
        .iter()
        .flat_map(|r| r.facts.iter().filter(|f| f.0 == "c_V").map(|f| f.1.clone()))
        .collect();
    if v.passed {
        v.detail = format!("c_V = {}", constants.join(", "));
    }
    v
}

fn c6() -> Verdict {
    from_reports(&[check_daha(2, 4).unwrap(), check_daha(4, 3).unwrap()])
}

fn c7() -> Verdict {
    let reports: Vec<_> = (2..=4).map(check_hecke).collect();
    from_reports(&reports)
}

fn c8() -> Verdict {
    let mut reports = Vec::new();
    for big_n in [2, 3] {
        for n in [2, 3] {
            reports.push(check_yis(big_n, n, &KParam::Symbolic, DEFAULT_ORDER).unwrap());
        }
    }
    let mut v = from_reports(&reports);
    let measured: Vec<String> = reports
        .iter()
        .map(|r| {
            let get = |k: &str| {
                r.facts
                    .iter()
                    .find(|f| f.0 == k)
                    .map(|f| f.1.clone())
                    .unwrap_or_default()
            };
            format!(
                "[{}] c = {}, c' = {}, alpha = {}",
                r.title,
                get("c"),
                get("c'"),
                get("alpha")
            )
        })
        .collect();
    let report = format!("{}; claimed: alpha = k", measured.join("; "));
    v.detail = if v.detail.is_empty() {
        report
    } else {
        format!("{}; {report}", v.detail)
    };
    v
}

fn c9() -> Verdict {
    let reports: Vec<_> = [(2, 1), (2, 2), (3, 1), (3, 2)]
        .into_iter()
        .map(|(n, m)| affine_hecke_check(n, m).unwrap())
        .collect();
    from_reports(&reports)
}

fn statuses(r: &Report) -> Vec<(String, bool)> {
    r.outcomes.iter().map(|o| (o.name.clone(), o.passed)).collect()
}

fn tree_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    out.sort();
    out
}

fn c10() -> Verdict {
    let mut problems = Vec::new();
    let cache = BasisCache::new(None);
    for (n, k) in [(2, 4), (2, 6), (4, 3)] {
        let args = |mode| EllipticArgs {
            n,
            k,
            mode,
            export: false,
            eval: None,
            out: None,
        };
        let exact = run_elliptic(&args(ModeArg::Exact), &cache).unwrap();
        let both = run_elliptic(&args(ModeArg::ProbabilisticThenExact), &cache).unwrap();
        let pre = &both.reports[0];
        if statuses(pre) != statuses(&both.reports[1]) {
            problems.push(format!("pre-screen and exact disagree at ({n}, {k})"));
        }
        let a: Vec<_> = exact.reports.iter().map(statuses).collect();
        let b: Vec<_> = both.reports[1..].iter().map(statuses).collect();
        if a != b || exact.passed() != both.passed() {
            problems.push(format!("modes disagree at ({n}, {k})"));
        }
    }
    let tmp = tempfile::tempdir().unwrap();
    for run in ["a", "b"] {
        let out = tmp.path().join(run);
        let export = ExportArgs {
            n: 2,
            k: 3,
            eval: Some("s=2".into()),
            out: out.join("elliptic"),
        };
        braidrep::cli::write_files(&run_export(&export, &cache).unwrap().files).unwrap();
        let deg = DegenerationArgs {
            big_n: 3,
            n: 2,
            k: "k".into(),
            jet_order: DEFAULT_ORDER,
            export: true,
            out: Some(out.join("degeneration")),
        };
        let files: Vec<_> = run_degeneration(&deg)
            .unwrap()
            .files
            .into_iter()
            .filter(|(p, _)| !p.ends_with("report.txt") && !p.ends_with("report.json"))
            .collect();
        braidrep::cli::write_files(&files).unwrap();
    }
    for sub in ["elliptic", "degeneration"] {
        let a = tree_bytes(&tmp.path().join("a").join(sub));
        let b = tree_bytes(&tmp.path().join("b").join(sub));
        if a.is_empty() || a != b {
            problems.push(format!("{sub} exports are not byte-stable"));
        }
    }
    Verdict {
        passed: problems.is_empty(),
        detail: problems.join("; "),
    }
}

type Criterion = (u32, &'static str, fn() -> Verdict, u64);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "quasi-triangularity and Yang-Baxter", c1, 60),
        (2, "reflection equation on V (x) V (x) A_<=4", c2, 120),
        (3, "D-module axiom on A_<=4", c3, 120),
        (4, "elliptic braid relations (2,4), (2,6), (4,3)", c4, 900),
        (5, "scalar identities and the two constructions of X~", c5, 900),
        (6, "DAHA quotient (2,4), (4,3)", c6, 900),
        (7, "Hecke relation for sl_N, N = 2, 3, 4", c7, 60),
        (8, "trigonometric degeneration, N, n in {2, 3}", c8, 180),
        (9, "affine Hecke relations on single layers", c9, 900),
        (10, "mode agreement and byte-stable exports", c10, 900),
    ];
    let mut all = true;
    for (i, name, f, budget) in criteria {
        let start = Instant::now();
        let v = f();
        let elapsed = start.elapsed();
        let v = within(v, elapsed, Duration::from_secs(budget));
        all &= v.passed;
        let status = if v.passed { "PASS" } else { "FAIL" };
        let detail = if v.detail.is_empty() {
            String::new()
        } else {
            format!("  {}", v.detail)
        };
        println!(
            "criterion {i:>2}: {status}  {name} ({:.2}s){detail}",
            elapsed.as_secs_f64()
        );
    }
    if !all {
        std::process::exit(1);
    }
}

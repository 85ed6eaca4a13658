//! Acceptance criteria, one PASS/FAIL line each.
//!
//! The catalog is every named fixture with at most 10 elements plus every
//! simple binary matroid of rank at most 4 on at most 10 elements
//! (`catalog::pool(4, 10)`); each criterion narrows it as its title says. All
//! connectivity checks use paper mode (no (k-1)-separation) unless noted.
//!
//! Exits with status 1 if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gammatroid::MatrixFile;
use gammatroid_core::catalog::{self, CatalogEntry};
use gammatroid_core::laws::{self, LawReport, Summary, SweepBounds, Verdict};
use gammatroid_core::{gamma_extension, is_k_connected, ElementSet, LawId, Mode};

const A_X: &str = "\
labels: 1 2 3 4 5 6 7 g1 g2
4 9
1 0 0 0 1 1 1 1 0
0 1 0 1 0 1 1 0 1
0 0 1 1 1 0 1 0 0
0 0 0 0 0 0 0 1 1
";

const A_Y: &str = "\
labels: 1 2 3 4 5 6 7 g1 g2 g3
4 10
1 0 0 0 1 1 1 1 0 0
0 1 0 1 0 1 1 0 1 0
0 0 1 1 1 0 1 0 0 1
0 0 0 0 0 0 0 1 1 1
";

struct Check {
    pass: bool,
    detail: String,
}

impl Check {
    fn from_reports(reports: &[LawReport]) -> Check {
        let s = Summary::of(reports);
        let mut detail = format!(
            "{} pass, {} fail, {} precondition-unmet",
            s.pass, s.fail, s.unmet
        );
        if let Some(r) = reports.iter().find(|r| r.verdict() == Verdict::Fail) {
            detail.push_str(&format!(
                "; first failure: {} {} {}",
                r.law(),
                r.instance(),
                r.counterexample().expect("failures carry a counterexample")
            ));
        }
        Check {
            pass: s.fail == 0 && s.pass > 0,
            detail,
        }
    }

    fn and(self, other: Check) -> Check {
        Check {
            pass: self.pass && other.pass,
            detail: format!("{}; {}", self.detail, other.detail),
        }
    }
}

fn criterion(id: usize, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let mut check = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            check.pass = false;
            check.detail.push_str(&format!("; exceeded {limit:?}"));
        }
    }
    let status = if check.pass { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {id:>2}: {title} [{:.2}s] {}",
        elapsed.as_secs_f64(),
        check.detail
    );
    check.pass
}

fn set(items: &[&str]) -> ElementSet {
    ElementSet::of(items)
}

/// Connected entries with at most 8 elements and every independent X with
/// `1 <= |X| <= 3`.
fn small_connected(pool: &[CatalogEntry]) -> Vec<CatalogEntry> {
    pool.iter()
        .filter(|e| e.matroid().len() <= 8 && e.is_connected())
        .cloned()
        .collect()
}

const SMALL_SWEEP: SweepBounds = SweepBounds {
    max_n: 8,
    max_extended: 64,
    min_x: 1,
    max_x: 3,
    connected_only: true,
};

fn fano_is_three_connected() -> Check {
    let f = catalog::fano();
    let paper = is_k_connected(&f, 3, Mode::Paper).unwrap();
    let cumulative = is_k_connected(&f, 3, Mode::Cumulative).unwrap();
    Check {
        pass: paper && cumulative,
        detail: format!("paper={paper} cumulative={cumulative}"),
    }
}

fn worked_example() -> Check {
    let f = catalog::fano();
    let mut notes = Vec::new();
    let mut pass = true;
    for (x, expected) in [(set(&["1", "2"]), A_X), (set(&["1", "2", "3"]), A_Y)] {
        let ext = gamma_extension(&f, &x, None).unwrap();
        let file = MatrixFile::new(ext.matrix().clone(), Some(ext.matrix_labels().to_vec()));
        let exact = file.render() == expected;
        pass &= exact;
        notes.push(format!("A for X={x} exact={exact}"));
    }
    let fx = gamma_extension(&f, &set(&["1", "2"]), None).unwrap();
    let fy = gamma_extension(&f, &set(&["1", "2", "3"]), None).unwrap();
    let observed = [
        is_k_connected(fy.result(), 3, Mode::Paper).unwrap(),
        is_k_connected(fx.result(), 3, Mode::Paper).unwrap(),
        is_k_connected(fx.result(), 2, Mode::Paper).unwrap(),
    ];
    pass &= observed == [true, false, true];
    notes.push(format!(
        "F7^Y 3-connected={}, F7^X 3-connected={}, F7^X 2-connected={}",
        observed[0], observed[1], observed[2]
    ));
    Check {
        pass,
        detail: notes.join(", "),
    }
}

fn rank_identities(pool: &[CatalogEntry]) -> Check {
    let f = catalog::fano();
    let mut reports = vec![
        laws::verify_rank_identities(&f, &set(&["1", "2"])).unwrap(),
        laws::verify_rank_identities(&f, &set(&["1", "2", "3"])).unwrap(),
    ];
    let bounds = SweepBounds {
        max_n: 11,
        max_extended: 12,
        min_x: 1,
        max_x: 11,
        connected_only: false,
    };
    reports.extend(laws::sweep_extension_law(pool, LawId::RankIdentities, bounds).unwrap());
    let sampled = reports
        .iter()
        .filter(|r| r.note() != Some("exhaustive"))
        .count();
    let mut c = Check::from_reports(&reports);
    c.pass &= sampled == 0;
    c.detail
        .push_str(&format!(", {sampled} sampled instead of exhaustive"));
    c
}

fn extension_sweep(small: &[CatalogEntry], law: LawId) -> Check {
    Check::from_reports(&laws::sweep_extension_law(small, law, SMALL_SWEEP).unwrap())
}

fn k_connected_extension(pool: &[CatalogEntry]) -> Check {
    let mut out = Check {
        pass: true,
        detail: String::new(),
    };
    for k in [2, 3, 4] {
        let reports = laws::sweep_k_connected_extension(pool, &[k], 10).unwrap();
        let s = Summary::of(&reports);
        let exercised = s.pass + s.fail > 0;
        out.pass &= s.fail == 0 && exercised;
        out.detail.push_str(&format!(
            "k={k}: {} pass, {} fail, {} precondition-unmet{}; ",
            s.pass,
            s.fail,
            s.unmet,
            if exercised {
                ""
            } else {
                " (no k-connected instance)"
            }
        ));
        if let Some(r) = reports.iter().find(|r| r.verdict() == Verdict::Fail) {
            out.detail.push_str(&format!(
                "first failure: {} {}; ",
                r.instance(),
                r.counterexample().unwrap()
            ));
        }
    }
    let modes = laws::sweep_matroid_law(pool, LawId::ModeAgreement, 10, &[2, 3, 4]).unwrap();
    let mode = Check::from_reports(&modes);
    out.detail.push_str("mode agreement: ");
    Check {
        pass: out.pass && mode.pass,
        detail: out.detail + &mode.detail,
    }
}

fn never_five_connected(small: &[CatalogEntry]) -> Check {
    let bounds = SweepBounds {
        min_x: 2,
        ..SMALL_SWEEP
    };
    Check::from_reports(
        &laws::sweep_extension_law(small, LawId::NeverFiveConnected, bounds).unwrap(),
    )
}

fn connecting_components() -> Check {
    let parts: Vec<CatalogEntry> = catalog::pool(3, 7)
        .unwrap()
        .into_iter()
        .filter(|e| e.is_connected())
        .collect();
    let sums = catalog::direct_sums(&parts, 3, 10);
    let bounds = SweepBounds {
        max_n: 10,
        max_extended: 64,
        min_x: 1,
        max_x: 4,
        connected_only: false,
    };
    let mut c = Check::from_reports(
        &laws::sweep_extension_law(&sums, LawId::ConnectingComponents, bounds).unwrap(),
    );
    c.detail
        .push_str(&format!(" over {} direct sums", sums.len()));
    c
}

fn oracle_cross_validation(pool: &[CatalogEntry]) -> Check {
    let mut small = Vec::new();
    for r in 1..=3 {
        for n in r + 1..=6 {
            small.extend(catalog::enumerate(r, n, Default::default()).unwrap());
        }
    }
    let circuits: Vec<_> = small.iter().map(|m| m.circuits().unwrap()).collect();
    let mut disagreements = 0;
    let mut pairs = 0;
    for i in 0..small.len() {
        for j in 0..small.len() {
            pairs += 1;
            let same_circuits =
                small[i].ground_set() == small[j].ground_set() && circuits[i] == circuits[j];
            if small[i].equals(&small[j]) != same_circuits {
                disagreements += 1;
            }
        }
    }
    let equality = Check {
        pass: disagreements == 0,
        detail: format!("equality vs circuits: {pairs} pairs, {disagreements} disagreements"),
    };
    let le8: Vec<CatalogEntry> = pool
        .iter()
        .filter(|e| e.matroid().len() <= 8)
        .cloned()
        .collect();
    let cocircuit = Check::from_reports(
        &laws::sweep_matroid_law(&le8, LawId::CocircuitContainment, 8, &[]).unwrap(),
    );
    let deletion =
        Check::from_reports(&laws::sweep_matroid_law(&le8, LawId::DeletionRank, 8, &[]).unwrap());
    equality
        .and(Check {
            detail: format!("cocircuit containment: {}", cocircuit.detail),
            ..cocircuit
        })
        .and(Check {
            detail: format!("deletion rank: {}", deletion.detail),
            ..deletion
        })
}

fn main() -> ExitCode {
    let pool = catalog::pool(4, 10).expect("catalog bounds are within limits");
    let small = small_connected(&pool);
    println!(
        "catalog: {} entries, {} connected with at most 8 elements",
        pool.len(),
        small.len()
    );

    let results = [
        criterion(
            1,
            "F7 is 3-connected in both modes",
            Some(Duration::from_secs(1)),
            fano_is_three_connected,
        ),
        criterion(
            2,
            "worked example: extension matrices and connectivity",
            Some(Duration::from_secs(5)),
            worked_example,
        ),
        criterion(
            3,
            "rank identities, exhaustive for |S ∪ Γ| <= 12",
            None,
            || rank_identities(&pool),
        ),
        criterion(
            4,
            "predicted circuit families equal the circuits of M^X",
            Some(Duration::from_secs(600)),
            || extension_sweep(&small, LawId::CircuitCharacterization),
        ),
        criterion(5, "M^X k-connected iff |X| >= k, k in 2..=4", None, || {
            k_connected_extension(&pool)
        }),
        criterion(
            6,
            "M^X has a 4-circuit and is not 5-connected",
            None,
            || never_five_connected(&small),
        ),
        criterion(
            7,
            "M^X connected iff X meets every component",
            None,
            connecting_components,
        ),
        criterion(
            8,
            "splitting the parallel extension gives M^X",
            None,
            || extension_sweep(&small, LawId::Composition),
        ),
        criterion(9, "deleting Γ from M^X gives M", None, || {
            extension_sweep(&small, LawId::ExtensionIdentity)
        }),
        criterion(10, "oracle cross-validation", None, || {
            oracle_cross_validation(&pool)
        }),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

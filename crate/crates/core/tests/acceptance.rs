//! The acceptance gate: twelve numbered criteria, each backed by checks from
//! the verification suites. One line is printed per criterion; the test
//! fails iff any criterion has a failing check (skipped-with-reason checks
//! do not fail a criterion).
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use pcensus::verify::{run_suite, CheckVerdict, SuiteConfig, VerifySuiteResult};

struct Criterion {
    number: u32,
    title: &'static str,
    suite: &'static str,
    /// Check-id prefixes inside the suite that belong to this criterion
    /// (empty = the whole suite).
    prefixes: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "unipotent counts in GL_n(q) are exactly q^{n(n-1)}, with the proportion bracket",
        suite: "steinberg",
        prefixes: &[],
    },
    Criterion {
        number: 2,
        title: "M_p values for Alt_5, Alt_6 and L_2(11)",
        suite: "mp-values",
        prefixes: &[],
    },
    Criterion {
        number: 3,
        title: "M_p(Alt_n) <= p^{n/2} for 5 <= n <= 8 and all primes p <= n",
        suite: "alt-theorem",
        prefixes: &[],
    },
    Criterion {
        number: 4,
        title: "extremal permutation towers: order h_p(m), p-element proportion 1/|G|",
        suite: "extremal",
        prefixes: &["extremal/perm-"],
    },
    Criterion {
        number: 5,
        title: "Hall p'-subgroups of GammaL_1(q^n): order, irreducibility, proportion",
        suite: "extremal",
        prefixes: &["extremal/hall-"],
    },
    Criterion {
        number: 6,
        title: "Table 1 witness groups match the P column (orders and 1/P proportions)",
        suite: "table1-witnesses",
        prefixes: &[],
    },
    Criterion {
        number: 7,
        title: "combinatorial lemma grids (digit, parity, factorial, mt-rows, bothcases)",
        suite: "lemma-grids",
        prefixes: &["lemma-grids/"],
    },
    Criterion {
        number: 8,
        title: "bound-function algebra: i <= f, supermultiplicativity, h_p <= p^{n-1}",
        suite: "lemma-grids",
        prefixes: &["algebra/"],
    },
    Criterion {
        number: 9,
        title: "|Ord(G,p)|*M_p(G) >= |G| across the small-group corpus",
        suite: "cor23-corpus",
        prefixes: &["cor23/alt", "cor23/sym", "cor23/dihedral", "cor23/gl", "cor23/sl",
                    "cor23/wreath", "cor23/direct"],
    },
    Criterion {
        number: 10,
        title: "wreath-coset count two ways, >= M^2 = 225",
        suite: "cor23-corpus",
        prefixes: &["cor23/lemma22"],
    },
    Criterion {
        number: 11,
        title: "rank-1 fixed-point caps over Aut(L_2(q)) at the defining prime",
        suite: "thmF-rank1",
        prefixes: &[],
    },
    Criterion {
        number: 12,
        title: "soundness sampling: proportions vs 1/f and 1/i, O^{p'} index vs f",
        suite: "extremal",
        prefixes: &["soundness/"],
    },
];

fn matching<'a>(result: &'a VerifySuiteResult, prefixes: &[&str]) -> Vec<&'a pcensus::verify::Check> {
    result
        .checks
        .iter()
        .filter(|c| prefixes.is_empty() || prefixes.iter().any(|p| c.id.starts_with(p)))
        .collect()
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig::default();
    let mut suites: std::collections::BTreeMap<&str, VerifySuiteResult> = Default::default();
    for c in CRITERIA {
        if !suites.contains_key(c.suite) {
            suites.insert(c.suite, run_suite(c.suite, &cfg).expect("suite must run"));
        }
    }

    let mut failed: Vec<String> = Vec::new();
    for c in CRITERIA {
        let checks = matching(&suites[c.suite], c.prefixes);
        assert!(!checks.is_empty(), "criterion {} matched no checks", c.number);
        let bad: Vec<_> =
            checks.iter().filter(|ch| ch.verdict == CheckVerdict::Fail).collect();
        let skips = checks
            .iter()
            .filter(|ch| matches!(ch.verdict, CheckVerdict::Skipped(_)))
            .count();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {:2}: {status} ({} checks, {} failing, {} skipped) — {}",
            c.number,
            checks.len(),
            bad.len(),
            skips,
            c.title
        );
        if let Some(first) = bad.first() {
            line.push_str(&format!(
                " | first failure: {} [{}] expected {} observed {}",
                first.id, first.params, first.expected, first.observed
            ));
        }
        println!("{line}");
        if !bad.is_empty() {
            failed.push(line);
        }
    }
    assert!(
        failed.is_empty(),
        "{} of 12 acceptance criteria failed:\n{}",
        failed.len(),
        failed.join("\n")
    );
}

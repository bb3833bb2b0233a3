//! Numbered classification claims about the modular families, each paired
//! with an executable checker that sweeps a range of moduli and compares the
//! printed statement against brute-force computation on the tables.
//!
//! A claim passes when every checked instance agrees with it. Deviations are
//! collected verbatim; a deviation may be excused by an [`Erratum`] when the
//! discrepancy is a documented defect of the printed claim rather than of
//! the computation. Reports keep the three outcomes apart: `PASS` (clean),
//! `PASS_WITH_ERRATA` (clean up to documented defects) and `FAIL`.

use std::fmt;

use groupoid_core::{
    build_loop, check_law, classify_pair, enumerate_class, enumerate_closed, is_ideal,
    is_normal_subgroupoid, is_smarandache, predicted_flags, qualifying_semigroup, s_commutative,
    s_conjugate, s_ideal, s_idempotent, s_inner_commutative, s_law_over, s_normal, s_semiconjugate,
    s_seminormal, s_subgroupoid_bound_check, s_subgroupoids, ClassTag, FiniteMagma, IdealSide,
    LawId, NormalityScope, SLawStrength, SPolicy, SubsetMask, ZnSpec,
};
use num_integer::Integer;
use serde::Serialize;

use crate::errata::erratum;
use crate::error::{Error, Result};

/// One instance that disagreed with the claim under check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deviation {
    /// The machine or configuration that produced the disagreement.
    pub subject: String,
    /// What was expected and what the computation found.
    pub detail: String,
    /// Erratum id when the disagreement is a documented defect of the
    /// printed claim; `None` marks a genuine failure.
    pub excused_by: Option<&'static str>,
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.detail)?;
        if let Some(id) = self.excused_by {
            write!(f, " [erratum {id}]")?;
        }
        Ok(())
    }
}

/// Tally kept by a checker while sweeping one modulus.
#[derive(Debug, Default)]
pub struct CheckStats {
    pub checked: usize,
    pub deviations: Vec<Deviation>,
}

impl CheckStats {
    fn pass(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, subject: impl Into<String>, detail: impl Into<String>) {
        self.checked += 1;
        self.deviations.push(Deviation {
            subject: subject.into(),
            detail: detail.into(),
            excused_by: None,
        });
    }

    fn excuse(
        &mut self,
        subject: impl Into<String>,
        detail: impl Into<String>,
        id: &'static str,
    ) {
        self.checked += 1;
        self.deviations.push(Deviation {
            subject: subject.into(),
            detail: detail.into(),
            excused_by: Some(id),
        });
    }

    fn expect(&mut self, ok: bool, subject: &str, detail: impl FnOnce() -> String) {
        if ok {
            self.pass();
        } else {
            self.fail(subject, detail());
        }
    }
}

type Checker = fn(usize) -> Result<CheckStats>;

/// A numbered claim together with its checker and sweep defaults.
pub struct TheoremEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Inclusive modulus range swept when the caller gives none.
    pub default_range: (usize, usize),
    /// Documented defects of the printed claim that this check carries.
    pub errata: &'static [&'static str],
    /// The claim asserts existence: the sweep passes when at least one
    /// witness turns up anywhere in the range, and fails otherwise.
    pub existential: bool,
    check: Checker,
}

/// Verification outcome for one registry entry over one range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    PassWithErrata,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PassWithErrata => "PASS_WITH_ERRATA",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub description: String,
    pub n_range: (usize, usize),
    /// Instances compared against the claim (deviations included).
    pub checked: usize,
    pub failures: Vec<Deviation>,
    pub errata: Vec<&'static str>,
    pub status: Status,
}

impl VerificationReport {
    pub fn summary_line(&self) -> String {
        let excused = self
            .failures
            .iter()
            .filter(|d| d.excused_by.is_some())
            .count();
        let mut line = format!(
            "{} {} (n={}..{}, checked {}, deviations {}",
            self.theorem, self.status, self.n_range.0, self.n_range.1, self.checked,
            self.failures.len(),
        );
        if excused > 0 {
            line.push_str(&format!(", {excused} excused"));
        }
        line.push(')');
        if !self.errata.is_empty() {
            line.push_str(&format!(" [errata: {}]", self.errata.join(", ")));
        }
        line
    }
}

/// Ids of all registered claims, in registry (chapter) order.
pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.id).collect()
}

pub fn theorem_entry(id: &str) -> Option<&'static TheoremEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Runs one registered claim over `range` (defaulting to the entry's own
/// range) and folds the per-modulus tallies into a report.
pub fn verify_theorem(id: &str, range: Option<(usize, usize)>) -> Result<VerificationReport> {
    let entry = theorem_entry(id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    let (lo, hi) = range.unwrap_or(entry.default_range);
    if lo == 0 || lo > hi {
        return Err(Error::Parse(format!(
            "modulus range must satisfy 1 <= lo <= hi, got {lo}..{hi}"
        )));
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in lo..=hi {
        let stats = (entry.check)(n)?;
        checked += stats.checked;
        failures.extend(stats.deviations);
    }
    if entry.existential && checked == 0 {
        failures.push(Deviation {
            subject: format!("n={lo}..{hi}"),
            detail: "no witness found anywhere in the range".into(),
            excused_by: None,
        });
    }
    let status = if failures.iter().any(|d| d.excused_by.is_none()) {
        Status::Fail
    } else if !entry.errata.is_empty() {
        Status::PassWithErrata
    } else {
        Status::Pass
    };
    Ok(VerificationReport {
        theorem: entry.id.to_string(),
        description: entry.description.to_string(),
        n_range: (lo, hi),
        checked,
        failures,
        errata: entry.errata.to_vec(),
        status,
    })
}

/// Verifies every registered claim. A range override, when given, applies
/// to each entry; otherwise every entry uses its own default.
pub fn verify_all(range: Option<(usize, usize)>) -> Result<Vec<VerificationReport>> {
    registry_ids()
        .into_iter()
        .map(|id| verify_theorem(id, range))
        .collect()
}

// ---------------------------------------------------------------------------
// arithmetic and construction helpers

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn distinct_primes(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            out.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

/// The primes of a squarefree composite, `None` when `n` is not one.
fn squarefree_parts(n: usize) -> Option<Vec<usize>> {
    let primes = distinct_primes(n);
    if primes.len() >= 2 && primes.iter().product::<usize>() == n {
        Some(primes)
    } else {
        None
    }
}

/// Maximal prime powers q = p^a with q | n and n/q coprime to p.
fn maximal_prime_powers(n: usize) -> Vec<usize> {
    distinct_primes(n)
        .into_iter()
        .map(|p| {
            let mut q = 1;
            let mut rest = n;
            while rest % p == 0 {
                q *= p;
                rest /= p;
            }
            q
        })
        .collect()
}

fn zn(n: usize, t: usize, u: usize) -> FiniteMagma {
    ZnSpec::new(n, t, u, false)
        .expect("checker domains stay inside valid specs")
        .build()
}

fn zn_adj(n: usize, t: usize, u: usize) -> FiniteMagma {
    ZnSpec::new(n, t, u, true)
        .expect("checker domains stay inside valid specs")
        .build()
}

fn name(n: usize, t: usize, u: usize) -> String {
    format!("Z_{n}({t},{u})")
}

fn adj_name(n: usize, t: usize, u: usize) -> String {
    format!("Z_{n}({t},{u})+e")
}

fn mask(m: &FiniteMagma, elems: &[usize]) -> SubsetMask {
    SubsetMask::from_elems(m.order(), elems.iter().copied())
}

fn pol() -> SPolicy {
    SPolicy::default()
}

/// Asserts that `elems` is a policy-admitted semigroup inside `m`.
fn expect_semigroup(
    st: &mut CheckStats,
    m: &FiniteMagma,
    subject: &str,
    elems: &[usize],
) -> Result<()> {
    let subset = mask(m, elems);
    let ok = qualifying_semigroup(m, &subset, pol())?;
    st.expect(ok, subject, || {
        format!("expected {subset} to be a semigroup admitted as Smarandache evidence")
    });
    Ok(())
}

/// Members of Z*(n) that fall outside Z(n).
fn zstar_minus_z(n: usize) -> Vec<(usize, usize)> {
    enumerate_class(n, ClassTag::ZStar)
        .into_iter()
        .filter(|&(t, u)| classify_pair(n, t, u) == ClassTag::ZStar)
        .collect()
}

/// Z(n) members on the idempotent ray t + u = 1 (mod n).
fn z_idempotent_pairs(n: usize) -> Vec<(usize, usize)> {
    enumerate_class(n, ClassTag::Z)
        .into_iter()
        .filter(|&(t, u)| (t + u) % n == 1)
        .collect()
}

// ---------------------------------------------------------------------------
// chapter 3: the modular classes themselves

fn c_3_1_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::Z) {
        let m = zn(n, t, u);
        let brute = m.basic_report().associative;
        let predicted = predicted_flags(n, t, u, false).semigroup;
        st.expect(brute == predicted, &name(n, t, u), || {
            format!("brute-force associativity {brute}, residue prediction {predicted}")
        });
    }
    Ok(st)
}

fn c_3_1_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        let brute = m.basic_report().idempotent_groupoid();
        let predicted = (t + u) % n == 1;
        st.expect(brute == predicted, &name(n, t, u), || {
            format!("idempotent table {brute}, t+u=1 prediction {predicted}")
        });
    }
    Ok(st)
}

fn c_3_2_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    let got = enumerate_class(n, ClassTag::ZStar).len();
    let want = (n - 1) * (n - 2);
    st.expect(got == want, &format!("Z*({n})"), || {
        format!("enumerated {got} members, expected (n-1)(n-2) = {want}")
    });
    Ok(st)
}

/// Divisor pairs (t, n-t) with t | n and t != n-t, as the even-modulus
/// theorems 3.2.3/3.2.4 require.
fn divisor_pairs(n: usize) -> Vec<(usize, usize)> {
    if n < 4 || n % 2 != 0 {
        return Vec::new();
    }
    (1..n)
        .filter(|&t| n % t == 0 && t != n - t)
        .map(|t| (t, n - t))
        .collect()
}

fn c_3_2_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    for (t, u) in divisor_pairs(n) {
        let m = zn(n, t, u);
        let multiples: Vec<usize> = (0..n).step_by(t).collect();
        let subset = mask(&m, &multiples);
        let closed = groupoid_core::is_closed_subset(&m, &subset)?;
        st.expect(closed && subset.len() == n / t, &name(n, t, u), || {
            format!(
                "multiples of {t} should be a closed subgroupoid of order {}",
                n / t
            )
        });
    }
    Ok(st)
}

fn c_3_2_4(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    for (t, u) in divisor_pairs(n) {
        let m = zn(n, t, u);
        let multiples = mask(&m, &(0..n).step_by(t).collect::<Vec<_>>());
        let family = enumerate_closed(&m)?;
        let of_that_order: Vec<&SubsetMask> = family
            .members
            .iter()
            .filter(|s| s.len() == n / t)
            .collect();
        let unique = of_that_order.len() == 1 && *of_that_order[0] == multiples;
        let normal = is_normal_subgroupoid(&m, &multiples, NormalityScope::LiteralV)?;
        st.expect(unique, &name(n, t, u), || {
            format!(
                "expected the multiples of {t} to be the only subgroupoid of order {}, found {}",
                n / t,
                of_that_order.len()
            )
        });
        st.expect(normal, &name(n, t, u), || {
            format!("expected {multiples} to be a normal subgroupoid")
        });
    }
    Ok(st)
}

fn c_3_3_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for t in 1..n {
        let m = zn(n, t, t);
        st.expect(m.basic_report().commutative, &name(n, t, t), || {
            "equal coefficients should give a commutative table".into()
        });
    }
    Ok(st)
}

fn c_3_3_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if !is_prime(n) || n < 3 {
        return Ok(st);
    }
    for t in 1..n {
        let m = zn(n, t, t);
        let full = SubsetMask::full(m.order());
        let normal = is_normal_subgroupoid(&m, &full, NormalityScope::LiteralV)?;
        st.expect(normal, &name(n, t, t), || {
            "the full carrier should satisfy the three normality set equations".into()
        });
    }
    Ok(st)
}

fn c_3_3_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for t in 1..n {
        let m = zn(n, t, t);
        st.expect(check_law(&m, LawId::P, false).holds, &name(n, t, t), || {
            "equal coefficients should satisfy (x*y)*x = x*(y*x)".into()
        });
    }
    Ok(st)
}

fn c_3_3_4(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if !is_prime(n) || n < 3 {
        return Ok(st);
    }
    for t in 2..n {
        let m = zn(n, t, t);
        let alt = check_law(&m, LawId::Alternative, false).holds;
        st.expect(!alt, &name(n, t, t), || {
            "prime modulus with 1 < t should break alternativity".into()
        });
    }
    Ok(st)
}

fn c_3_3_5(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || is_prime(n) {
        return Ok(st);
    }
    for t in 1..n {
        let m = zn(n, t, t);
        let alt = check_law(&m, LawId::Alternative, false).holds;
        let predicted = (t * t) % n == t;
        st.expect(alt == predicted, &name(n, t, t), || {
            format!("alternativity {alt}, t^2=t prediction {predicted}")
        });
    }
    Ok(st)
}

fn c_3_4_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for t in 1..n {
        let m = zn(n, 0, t);
        let p = check_law(&m, LawId::P, false).holds;
        let alt = check_law(&m, LawId::Alternative, false).holds;
        let predicted = (t * t) % n == t;
        st.expect(p == predicted && alt == predicted, &name(n, 0, t), || {
            format!("P {p} and alternativity {alt} should both equal the t^2=t prediction {predicted}")
        });
    }
    Ok(st)
}

fn c_3_5_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n <= 3 || n % 2 == 0 {
        return Ok(st);
    }
    for m in 2..n {
        if m.gcd(&n) != 1 || (m - 1).gcd(&n) != 1 {
            continue;
        }
        let table = build_loop(n, m)?;
        st.expect(table.is_loop(), &format!("L_{n}({m})"), || {
            "translation table with admissible multiplier should be a loop".into()
        });
    }
    Ok(st)
}

// ---------------------------------------------------------------------------
// chapter 4: Smarandache structure in general tables

fn c_4_1_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        if !m.basic_report().commutative || !is_smarandache(&m, pol())? {
            continue;
        }
        st.expect(s_commutative(&m, pol())?, &name(n, t, u), || {
            "commutative Smarandache table should carry a commutative semigroup".into()
        });
    }
    Ok(st)
}

fn c_4_2_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        if s_subgroupoids(&m, pol())?.members.is_empty() {
            continue;
        }
        st.expect(is_smarandache(&m, pol())?, &name(n, t, u), || {
            "a Smarandache subgroupoid should force Smarandache structure on the table".into()
        });
    }
    Ok(st)
}

fn c_4_2_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        for v in &s_subgroupoids(&m, pol())?.members {
            for side in [IdealSide::Left, IdealSide::Right] {
                if !s_ideal(&m, v, side, pol())? {
                    continue;
                }
                st.expect(is_ideal(&m, v, side)?, &name(n, t, u), || {
                    format!("{v} is a Smarandache {side:?} ideal but not a plain {side:?} ideal")
                });
            }
        }
    }
    Ok(st)
}

fn c_4_2_4(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        for v in &s_subgroupoids(&m, pol())?.members {
            if !s_normal(&m, v, pol())? {
                continue;
            }
            st.expect(s_seminormal(&m, v, pol())?, &name(n, t, u), || {
                format!("{v} is Smarandache normal but not Smarandache seminormal")
            });
        }
    }
    Ok(st)
}

fn c_4_2_5(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        let subs = s_subgroupoids(&m, pol())?.members;
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                if !s_conjugate(&m, &subs[i], &subs[j], pol())?.holds {
                    continue;
                }
                let semi = s_semiconjugate(&m, &subs[i], &subs[j], pol())?.holds;
                st.expect(semi, &name(n, t, u), || {
                    format!(
                        "{} and {} are Smarandache conjugate but not semiconjugate",
                        subs[i], subs[j]
                    )
                });
            }
        }
    }
    Ok(st)
}

fn c_4_2_6(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        let subject = name(n, t, u);
        let subs = s_subgroupoids(&m, pol())?.members;
        let inner = s_inner_commutative(&m, pol())?;
        let comm = s_commutative(&m, pol())?;
        if inner && !subs.is_empty() && is_smarandache(&m, pol())? {
            st.expect(comm, &subject, || {
                "inner commutative Smarandache table should be Smarandache commutative".into()
            });
        }
        if comm && !inner {
            st.excuse(
                &subject,
                "Smarandache commutative yet one of its Smarandache subgroupoids is \
                 noncommutative, refuting the printed direction",
                "4.2.6-direction",
            );
        }
    }
    Ok(st)
}

fn strong_after_global(n: usize, law: LawId) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        if !check_law(&m, law, false).holds || !is_smarandache(&m, pol())? {
            continue;
        }
        let subs = s_subgroupoids(&m, pol())?.members;
        let strong = s_law_over(&m, law, SLawStrength::Strong, &subs).holds;
        st.expect(strong, &name(n, t, u), || {
            format!("{law} holds globally but fails on some Smarandache subgroupoid")
        });
    }
    Ok(st)
}

fn weak_after_strong(n: usize, law: LawId) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        let subs = s_subgroupoids(&m, pol())?.members;
        if subs.is_empty() || !is_smarandache(&m, pol())? {
            continue;
        }
        if !s_law_over(&m, law, SLawStrength::Strong, &subs).holds {
            continue;
        }
        let weak = s_law_over(&m, law, SLawStrength::Weak, &subs).holds;
        st.expect(weak, &name(n, t, u), || {
            format!("strong {law} over the Smarandache subgroupoids must imply the weak form")
        });
    }
    Ok(st)
}

fn c_4_3_1(n: usize) -> Result<CheckStats> {
    strong_after_global(n, LawId::Moufang)
}

fn c_4_3_2(n: usize) -> Result<CheckStats> {
    weak_after_strong(n, LawId::Moufang)
}

fn c_4_3_3(n: usize) -> Result<CheckStats> {
    strong_after_global(n, LawId::Bol)
}

fn c_4_3_4(n: usize) -> Result<CheckStats> {
    weak_after_strong(n, LawId::Bol)
}

fn c_4_3_5(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn(n, t, u);
        if check_law(&m, LawId::P, false).holds {
            continue;
        }
        if !is_smarandache(&m, pol())? {
            continue;
        }
        let subs = s_subgroupoids(&m, pol())?.members;
        if subs.is_empty() {
            continue;
        }
        if s_law_over(&m, LawId::P, SLawStrength::Strong, &subs).holds {
            // Witness: strong P-structure without the global identity.
            st.pass();
            break;
        }
    }
    Ok(st)
}

fn c_4_3_6(n: usize) -> Result<CheckStats> {
    weak_after_strong(n, LawId::P)
}

fn c_4_3_7(n: usize) -> Result<CheckStats> {
    weak_after_strong(n, LawId::Alternative)
}

// ---------------------------------------------------------------------------
// chapter 5: Smarandache structure of the modular families

fn c_5_1_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in z_idempotent_pairs(n) {
        let m = zn(n, t, u);
        st.expect(is_smarandache(&m, pol())?, &name(n, t, u), || {
            "coprime pair on the idempotent ray should give a Smarandache table".into()
        });
    }
    Ok(st)
}

fn c_5_1_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 6 || n % 2 != 0 {
        return Ok(st);
    }
    let p = n / 2;
    if !is_prime(p) || p == 2 {
        return Ok(st);
    }
    let m = zn(n, 1, 2);
    expect_semigroup(&mut st, &m, &name(n, 1, 2), &[p])?;
    Ok(st)
}

fn c_5_1_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 6 || n % 3 != 0 {
        return Ok(st);
    }
    let p = n / 3;
    if !is_prime(p) || p == 3 {
        return Ok(st);
    }
    let m = zn(n, 1, 3);
    expect_semigroup(&mut st, &m, &name(n, 1, 3), &[p])?;
    Ok(st)
}

fn c_5_1_4(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    let Some(primes) = squarefree_parts(n) else {
        return Ok(st);
    };
    if primes.len() != 2 {
        return Ok(st);
    }
    let (p1, p2) = (primes[0], primes[1]);
    expect_semigroup(&mut st, &zn(n, 1, p2), &name(n, 1, p2), &[p1])?;
    expect_semigroup(&mut st, &zn(n, 1, p1), &name(n, 1, p1), &[p2])?;
    Ok(st)
}

fn c_5_1_5(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 {
        return Ok(st);
    }
    for p in distinct_primes(n) {
        if p >= n {
            continue;
        }
        let m = zn(n, 1, p);
        expect_semigroup(&mut st, &m, &name(n, 1, p), &[n / p])?;
    }
    Ok(st)
}

fn c_5_1_6(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    if n == 3 || n == 5 {
        for (t, u) in enumerate_class(n, ClassTag::Z) {
            let m = zn(n, t, u);
            st.expect(!is_smarandache(&m, pol())?, &name(n, t, u), || {
                "no member of this class should be Smarandache".into()
            });
        }
    } else {
        let mut found = None;
        for (t, u) in enumerate_class(n, ClassTag::Z) {
            if is_smarandache(&zn(n, t, u), pol())? {
                found = Some((t, u));
                break;
            }
        }
        st.expect(found.is_some(), &format!("Z({n})"), || {
            "expected at least one Smarandache member".into()
        });
    }
    Ok(st)
}

fn c_5_1_7(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in z_idempotent_pairs(n) {
        let m = zn(n, t, u);
        st.expect(s_idempotent(&m, pol())?, &name(n, t, u), || {
            "idempotent-ray member should be Smarandache idempotent".into()
        });
    }
    Ok(st)
}

fn c_5_1_8(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in z_idempotent_pairs(n) {
        let m = zn(n, t, u);
        let p = check_law(&m, LawId::P, false).holds;
        let printed = (t * t) % n == t && (u * u) % n == u;
        if p == printed {
            st.pass();
        } else {
            st.excuse(
                name(n, t, u),
                format!(
                    "P-identity holds={p} while the printed t^2=t, u^2=u condition gives \
                     {printed}; on this ray t^2-t = u^2-u always, so P holds unconditionally"
                ),
                "5.1.8",
            );
        }
    }
    Ok(st)
}

/// Shared shape of 5.1.9/5.1.10/5.1.11: on the idempotent ray the law holds
/// exactly under a residue condition, and then in Smarandache strong form.
fn idempotent_ray_law(
    n: usize,
    law: LawId,
    printed: impl Fn(usize, usize) -> bool,
) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in z_idempotent_pairs(n) {
        let m = zn(n, t, u);
        let holds = check_law(&m, law, false).holds;
        let cond = printed(t, u);
        st.expect(holds == cond, &name(n, t, u), || {
            format!("{law} holds={holds} but the printed residue condition gives {cond}")
        });
        if cond {
            let subs = s_subgroupoids(&m, pol())?.members;
            let strong = s_law_over(&m, law, SLawStrength::Strong, &subs).holds;
            st.expect(strong, &name(n, t, u), || {
                format!("{law} should hold on every Smarandache subgroupoid when the condition holds")
            });
        }
    }
    Ok(st)
}

fn c_5_1_9(n: usize) -> Result<CheckStats> {
    idempotent_ray_law(n, LawId::Alternative, |t, u| {
        (t * t) % n == t && (u * u) % n == u
    })
}

fn c_5_1_10(n: usize) -> Result<CheckStats> {
    idempotent_ray_law(n, LawId::Bol, |t, u| {
        (t * t * t) % n == t && (u * u) % n == u
    })
}

fn c_5_1_11(n: usize) -> Result<CheckStats> {
    idempotent_ray_law(n, LawId::Moufang, |t, u| {
        (t * t) % n == t && (u * u) % n == u
    })
}

fn c_5_2_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in zstar_minus_z(n) {
        if (t + u) % n != 1 {
            continue;
        }
        let m = zn(n, t, u);
        st.expect(is_smarandache(&m, pol())?, &name(n, t, u), || {
            "idempotent-ray member outside the coprime class should still be Smarandache".into()
        });
    }
    Ok(st)
}

fn c_5_2_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    let laws = [LawId::Moufang, LawId::Bol, LawId::P, LawId::Alternative];
    for (t, u) in zstar_minus_z(n) {
        if (t + u) % n != 1 {
            continue;
        }
        let m = zn(n, t, u);
        let cond = (t * t) % n == t && (u * u) % n == u;
        let global = laws.iter().all(|&l| check_law(&m, l, false).holds);
        st.expect(global == cond, &name(n, t, u), || {
            format!("all four identities hold={global} but the t^2=t, u^2=u condition gives {cond}")
        });
        if cond {
            let subs = s_subgroupoids(&m, pol())?.members;
            let strong = laws
                .iter()
                .all(|&l| s_law_over(&m, l, SLawStrength::Strong, &subs).holds);
            st.expect(strong && s_idempotent(&m, pol())?, &name(n, t, u), || {
                "under the condition the table should be Smarandache idempotent with all four \
                 identities in strong form"
                    .into()
            });
        }
    }
    Ok(st)
}

fn c_5_3_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if !is_prime(n) || n < 3 {
        return Ok(st);
    }
    let m_coef = (n + 1) / 2;
    let m = zn(n, m_coef, m_coef);
    st.expect(
        is_smarandache(&m, pol())?,
        &name(n, m_coef, m_coef),
        || "the averaged coefficient should give a Smarandache table for odd primes".into(),
    );
    Ok(st)
}

fn c_5_3_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if !is_prime(n) || n < 3 {
        return Ok(st);
    }
    let m_coef = (n + 1) / 2;
    let m = zn(n, m_coef, m_coef);
    st.expect(
        s_idempotent(&m, pol())?,
        &name(n, m_coef, m_coef),
        || "2m = 1 (mod p) makes every element idempotent, so the table should be \
            Smarandache idempotent"
            .into(),
    );
    Ok(st)
}

fn c_5_3_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 || n % 2 == 0 {
        return Ok(st);
    }
    let m_coef = (n + 1) / 2;
    let m = zn(n, m_coef, m_coef);
    st.expect(
        is_smarandache(&m, pol())?,
        &name(n, m_coef, m_coef),
        || "the averaged coefficient should give a Smarandache table for odd moduli".into(),
    );
    Ok(st)
}

fn c_5_3_4(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || n % 2 != 0 {
        return Ok(st);
    }
    let half = n / 2;
    if (half * half) % n != 0 {
        return Ok(st);
    }
    let m = zn(n, half, half);
    expect_semigroup(&mut st, &m, &name(n, half, half), &[0, half])?;
    Ok(st)
}

fn c_5_3_5(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 {
        return Ok(st);
    }
    for m_coef in 1..n {
        if (m_coef * m_coef) % n != m_coef || (2 * m_coef) % n != 0 {
            continue;
        }
        let m = zn(n, m_coef, m_coef);
        expect_semigroup(&mut st, &m, &name(n, m_coef, m_coef), &[0, m_coef])?;
    }
    Ok(st)
}

fn c_5_3_6(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for m_coef in 1..n {
        let m = zn(n, m_coef, m_coef);
        let sg = is_smarandache(&m, pol())?;
        let printed = (2 * m_coef) % n == 1;
        if sg == printed {
            st.pass();
        } else {
            st.excuse(
                name(n, m_coef, m_coef),
                format!(
                    "Smarandache={sg} while the printed criterion 2m=1 (mod n) gives {printed}; \
                     the condition is sufficient but not necessary"
                ),
                "5.3.6-converse",
            );
        }
    }
    Ok(st)
}

fn c_5_3_7(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    let laws = [LawId::Moufang, LawId::Bol, LawId::P, LawId::Alternative];
    for m_coef in 1..n {
        if (2 * m_coef) % n != 1 || (m_coef * m_coef) % n != m_coef {
            continue;
        }
        // The two congruences force m = 1 and n = 1, so for n >= 2 this body
        // never runs; it stays here so a range extension cannot silently
        // skip the claim.
        let m = zn(n, m_coef, m_coef);
        let subs = s_subgroupoids(&m, pol())?.members;
        let strong = laws
            .iter()
            .all(|&l| s_law_over(&m, l, SLawStrength::Strong, &subs).holds);
        st.expect(
            s_idempotent(&m, pol())? && strong,
            &name(n, m_coef, m_coef),
            || "both congruences should give Smarandache idempotent strong structure".into(),
        );
    }
    Ok(st)
}

fn c_5_4_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || n % 2 != 0 {
        return Ok(st);
    }
    expect_semigroup(&mut st, &zn(n, 2, 0), &name(n, 2, 0), &[0, n / 2])?;
    Ok(st)
}

fn c_5_4_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || n % 2 != 0 {
        return Ok(st);
    }
    expect_semigroup(&mut st, &zn(n, 0, 2), &name(n, 0, 2), &[0, n / 2])?;
    Ok(st)
}

fn c_5_4_3(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || n % 2 != 0 {
        return Ok(st);
    }
    expect_semigroup(&mut st, &zn(n, n / 2, 0), &name(n, n / 2, 0), &[0, 2])?;
    Ok(st)
}

fn c_5_4_4(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || n % 2 != 0 {
        return Ok(st);
    }
    expect_semigroup(&mut st, &zn(n, 0, n / 2), &name(n, 0, n / 2), &[0, 2])?;
    Ok(st)
}

fn prime_divisor_witnesses(n: usize, left_coefficient: bool) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 {
        return Ok(st);
    }
    for p in distinct_primes(n) {
        if p >= n {
            continue;
        }
        let (t, u) = if left_coefficient { (p, 0) } else { (0, p) };
        let m = zn(n, t, u);
        expect_semigroup(&mut st, &m, &name(n, t, u), &[0, n / p])?;
    }
    Ok(st)
}

fn c_5_4_5(n: usize) -> Result<CheckStats> {
    prime_divisor_witnesses(n, true)
}

fn c_5_4_6(n: usize) -> Result<CheckStats> {
    prime_divisor_witnesses(n, false)
}

fn c_5_4_7(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 {
        return Ok(st);
    }
    for p in distinct_primes(n) {
        if p >= n {
            continue;
        }
        let m = zn(n, n / p, 0);
        expect_semigroup(&mut st, &m, &name(n, n / p, 0), &[0, p])?;
    }
    Ok(st)
}

/// Products of nonempty proper subsets of the primes of a squarefree n.
fn squarefree_divisors(n: usize) -> Vec<usize> {
    let Some(primes) = squarefree_parts(n) else {
        return Vec::new();
    };
    let m = primes.len();
    (1..(1usize << m) - 1)
        .map(|bits| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &p)| p)
                .product()
        })
        .collect()
}

fn c_5_4_8(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    for d in squarefree_divisors(n) {
        let m = zn(n, d, 0);
        expect_semigroup(&mut st, &m, &name(n, d, 0), &[0, n / d])?;
    }
    Ok(st)
}

fn c_5_4_9(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    for d in squarefree_divisors(n) {
        expect_semigroup(&mut st, &zn(n, d, 0), &name(n, d, 0), &[0, n / d])?;
        expect_semigroup(&mut st, &zn(n, 0, d), &name(n, 0, d), &[0, n / d])?;
    }
    Ok(st)
}

fn c_5_4_10(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 {
        return Ok(st);
    }
    for q in maximal_prime_powers(n) {
        if q >= n {
            continue;
        }
        let m = zn(n, q, 0);
        expect_semigroup(&mut st, &m, &name(n, q, 0), &[0, n / q])?;
    }
    Ok(st)
}

fn c_5_4_11(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    let laws = [LawId::Moufang, LawId::Bol, LawId::P, LawId::Alternative];
    for m_coef in 1..n {
        if (m_coef * m_coef) % n != m_coef {
            continue;
        }
        let m = zn(n, m_coef, 0);
        expect_semigroup(&mut st, &m, &name(n, m_coef, 0), &[m_coef])?;
        let subs = s_subgroupoids(&m, pol())?.members;
        for law in laws {
            let strong = s_law_over(&m, law, SLawStrength::Strong, &subs).holds;
            st.expect(strong, &name(n, m_coef, 0), || {
                format!("idempotent left coefficient should give strong {law} structure")
            });
        }
    }
    Ok(st)
}

fn c_5_4_12(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for m_coef in 1..n {
        if (m_coef * m_coef) % n != m_coef {
            continue;
        }
        for (t, u) in [(m_coef, 0), (0, m_coef)] {
            let m = zn(n, t, u);
            st.expect(is_smarandache(&m, pol())?, &name(n, t, u), || {
                "one-sided idempotent coefficient should give a Smarandache table".into()
            });
        }
    }
    Ok(st)
}

fn c_5_5_1(_n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    let f1 = zn(4, 2, 3);
    let f2 = zn(6, 4, 5);
    let f3 = zn(3, 0, 1);

    let bc = s_subgroupoid_bound_check(&[&f1, &f2], pol())?;
    st.expect(
        bc.ok && bc.bound == 2 && bc.found >= 2,
        "Z_4(2,3) x Z_6(4,5)",
        || {
            format!(
                "expected at least 2^2-2 = {} Smarandache subgroupoids, found {}",
                bc.bound, bc.found
            )
        },
    );

    // Three factors: every block product with at least one full factor and
    // singleton zeros elsewhere must be a Smarandache subgroupoid.
    let factors = [&f1, &f2, &f3];
    let product = FiniteMagma::direct_product(&factors)?;
    for bits in 1..(1usize << factors.len()) - 1 {
        let blocks: Vec<SubsetMask> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                if bits >> i & 1 == 1 {
                    SubsetMask::full(f.order())
                } else {
                    SubsetMask::singleton(f.order(), 0)
                }
            })
            .collect();
        let subset = groupoid_core::product_block_subset(&factors, &blocks)?;
        let ok = groupoid_core::is_s_subgroupoid(&product, &subset, pol())?;
        st.expect(ok, "Z_4(2,3) x Z_6(4,5) x Z_3(0,1)", || {
            format!("block subset {bits:03b} should be a Smarandache subgroupoid of the product")
        });
    }
    Ok(st)
}

fn c_5_6_1(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn_adj(n, t, u);
        let mut pair = false;
        for a in 0..n {
            if qualifying_semigroup(&m, &mask(&m, &[n, a]), pol())? {
                pair = true;
                break;
            }
        }
        st.expect(
            is_smarandache(&m, pol())? && pair,
            &adj_name(n, t, u),
            || "adjoined identity should always give a Smarandache table via some {e,a}".into(),
        );
    }
    Ok(st)
}

fn c_5_6_2(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn_adj(n, t, u);
        st.expect(!s_idempotent(&m, pol())?, &adj_name(n, t, u), || {
            "a*a = e breaks idempotency, so no adjoined table is Smarandache idempotent".into()
        });
    }
    Ok(st)
}

/// Shared shape of 5.6.3/5.6.4: the adjoined one-sided alternative law on
/// non-degenerate assignments against its residue characterization.
fn adjoined_alternative(
    n: usize,
    law: LawId,
    predicted: impl Fn(usize, usize) -> bool,
    printed: impl Fn(usize, usize) -> bool,
) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 3 {
        return Ok(st);
    }
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn_adj(n, t, u);
        let subject = adj_name(n, t, u);
        let nd = check_law(&m, law, true);
        let pred = predicted(t, u);
        st.expect(nd.holds == pred, &subject, || {
            format!(
                "{law} on non-degenerate assignments holds={} but the residue \
                 characterization gives {pred}",
                nd.holds
            )
        });
        if nd.holds {
            let full = check_law(&m, law, false);
            if !full.holds {
                let w = full.witness.as_ref().expect("failing law carries a witness");
                let assignment: Vec<String> = w
                    .elems
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| format!("{}={}", (b'x' + i as u8) as char, m.label_of(v)))
                    .collect();
                st.excuse(
                    &subject,
                    format!(
                        "{law} holds on non-degenerate assignments but fails on the full \
                         domain at {} ({} vs {})",
                        assignment.join(", "),
                        m.label_of(w.lhs),
                        m.label_of(w.rhs)
                    ),
                    "5.6.3-degenerate",
                );
            }
        }
        if nd.holds != printed(t, u) {
            st.excuse(
                &subject,
                format!(
                    "printed congruences give {} but every instance is degenerate here, so \
                     the law holds vacuously",
                    printed(t, u)
                ),
                "5.6.3-degenerate",
            );
        }
    }
    Ok(st)
}

fn c_5_6_3(n: usize) -> Result<CheckStats> {
    adjoined_alternative(
        n,
        LawId::RightAlternative,
        |t, u| predicted_flags(n, t, u, true).adjoined_right_alt,
        |t, u| (t * t) % n == 1 && (t * u + u) % n == 0,
    )
}

fn c_5_6_4(n: usize) -> Result<CheckStats> {
    adjoined_alternative(
        n,
        LawId::LeftAlternative,
        |t, u| predicted_flags(n, t, u, true).adjoined_left_alt,
        |t, u| (u * u) % n == 1 && (t + t * u) % n == 0,
    )
}

fn c_5_6_5(n: usize) -> Result<CheckStats> {
    let mut st = CheckStats::default();
    if n < 4 || is_prime(n) {
        return Ok(st);
    }
    let laws = [LawId::Bol, LawId::Moufang, LawId::P];
    for (t, u) in enumerate_class(n, ClassTag::ZStarStarStar) {
        let m = zn_adj(n, t, u);
        let subject = adj_name(n, t, u);
        let cond = (t * t) % n == t && (u * u) % n == u;
        let all_hold = laws.iter().all(|&l| check_law(&m, l, true).holds);
        if cond {
            st.expect(all_hold, &subject, || {
                "t^2=t, u^2=u should force the Bol, Moufang and P identities on \
                 non-degenerate assignments"
                    .into()
            });
        } else if all_hold {
            st.excuse(
                &subject,
                "all three identities hold on non-degenerate assignments although t^2=t, \
                 u^2=u fails, refuting the printed converse",
                "5.6.5-converse",
            );
        } else {
            st.pass();
        }
    }
    Ok(st)
}

// ---------------------------------------------------------------------------
// the registry itself

pub const REGISTRY: &[TheoremEntry] = &[
    TheoremEntry {
        id: "3.1.1",
        description: "Z_n(t,u) built from a coprime pair is associative exactly when t^2 = t \
                      and u^2 = u (mod n)",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_3_1_1,
    },
    TheoremEntry {
        id: "3.1.3",
        description: "Z_n(t,u) is an idempotent groupoid exactly when t + u = 1 (mod n)",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_3_1_3,
    },
    TheoremEntry {
        id: "3.2.1",
        description: "the class of distinct nonzero coefficient pairs has (n-1)(n-2) members",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_3_2_1,
    },
    TheoremEntry {
        id: "3.2.3",
        description: "for even n with t | n and u = n - t, the multiples of t form a \
                      subgroupoid of order n/t",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_3_2_3,
    },
    TheoremEntry {
        id: "3.2.4",
        description: "under the same hypotheses the multiples of t are the unique subgroupoid \
                      of order n/t and form a normal subgroupoid",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_3_2_4,
    },
    TheoremEntry {
        id: "3.3.1",
        description: "equal coefficients give commutative tables",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_3_3_1,
    },
    TheoremEntry {
        id: "3.3.2",
        description: "for prime moduli the equal-coefficient tables satisfy the normality \
                      equations xG = Gx, (Gx)y = G(xy), y(xG) = (yx)G",
        default_range: (3, 11),
        errata: &[],
        existential: false,
        check: c_3_3_2,
    },
    TheoremEntry {
        id: "3.3.3",
        description: "equal coefficients satisfy the identity (x*y)*x = x*(y*x)",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_3_3_3,
    },
    TheoremEntry {
        id: "3.3.4",
        description: "for prime moduli and 1 < t the equal-coefficient tables are never \
                      alternative",
        default_range: (3, 11),
        errata: &[],
        existential: false,
        check: c_3_3_4,
    },
    TheoremEntry {
        id: "3.3.5",
        description: "for composite moduli the equal-coefficient tables are alternative \
                      exactly when t^2 = t (mod n)",
        default_range: (4, 12),
        errata: &[],
        existential: false,
        check: c_3_3_5,
    },
    TheoremEntry {
        id: "3.4.1",
        description: "Z_n(0,t) satisfies the (x*y)*x identity and alternativity exactly when \
                      t^2 = t (mod n)",
        default_range: (3, 12),
        errata: &["3.4-count"],
        existential: false,
        check: c_3_4_1,
    },
    TheoremEntry {
        id: "3.5.2",
        description: "for odd n > 3 and multipliers m with gcd(m,n) = gcd(m-1,n) = 1 the \
                      translation table on {1..n, e} is a loop",
        default_range: (5, 11),
        errata: &[],
        existential: false,
        check: c_3_5_2,
    },
    TheoremEntry {
        id: "4.1.1",
        description: "a commutative Smarandache groupoid is Smarandache commutative",
        default_range: (3, 10),
        errata: &[],
        existential: false,
        check: c_4_1_1,
    },
    TheoremEntry {
        id: "4.2.2",
        description: "a groupoid containing a Smarandache subgroupoid is itself Smarandache",
        default_range: (3, 9),
        errata: &[],
        existential: false,
        check: c_4_2_2,
    },
    TheoremEntry {
        id: "4.2.3",
        description: "a Smarandache ideal is an ideal of the ambient groupoid",
        default_range: (3, 8),
        errata: &[],
        existential: false,
        check: c_4_2_3,
    },
    TheoremEntry {
        id: "4.2.4",
        description: "a Smarandache normal subgroupoid is Smarandache seminormal",
        default_range: (3, 8),
        errata: &[],
        existential: false,
        check: c_4_2_4,
    },
    TheoremEntry {
        id: "4.2.5",
        description: "Smarandache conjugate subgroupoids are Smarandache semiconjugate",
        default_range: (3, 8),
        errata: &["4.2.5"],
        existential: false,
        check: c_4_2_5,
    },
    TheoremEntry {
        id: "4.2.6",
        description: "a Smarandache inner commutative groupoid with Smarandache subgroupoids \
                      is Smarandache commutative",
        default_range: (3, 8),
        errata: &["4.2.6-direction"],
        existential: false,
        check: c_4_2_6,
    },
    TheoremEntry {
        id: "4.3.1",
        description: "a Smarandache groupoid satisfying the Moufang identity globally is \
                      Smarandache strong Moufang",
        default_range: (3, 10),
        errata: &[],
        existential: false,
        check: c_4_3_1,
    },
    TheoremEntry {
        id: "4.3.2",
        description: "Smarandache strong Moufang implies Smarandache Moufang",
        default_range: (3, 9),
        errata: &[],
        existential: false,
        check: c_4_3_2,
    },
    TheoremEntry {
        id: "4.3.3",
        description: "a Smarandache groupoid satisfying the Bol identity globally is \
                      Smarandache strong Bol",
        default_range: (3, 10),
        errata: &[],
        existential: false,
        check: c_4_3_3,
    },
    TheoremEntry {
        id: "4.3.4",
        description: "Smarandache strong Bol implies Smarandache Bol",
        default_range: (3, 9),
        errata: &[],
        existential: false,
        check: c_4_3_4,
    },
    TheoremEntry {
        id: "4.3.5",
        description: "some Smarandache strong P-groupoid violates the P-identity on the full \
                      carrier",
        default_range: (4, 8),
        errata: &[],
        existential: true,
        check: c_4_3_5,
    },
    TheoremEntry {
        id: "4.3.6",
        description: "Smarandache strong P implies Smarandache P",
        default_range: (3, 9),
        errata: &[],
        existential: false,
        check: c_4_3_6,
    },
    TheoremEntry {
        id: "4.3.7",
        description: "Smarandache strong alternative implies Smarandache alternative",
        default_range: (3, 9),
        errata: &[],
        existential: false,
        check: c_4_3_7,
    },
    TheoremEntry {
        id: "5.1.1",
        description: "coprime pairs with t + u = 1 (mod n) give Smarandache tables",
        default_range: (6, 12),
        errata: &[],
        existential: false,
        check: c_5_1_1,
    },
    TheoremEntry {
        id: "5.1.2",
        description: "{p} is a semigroup in Z_2p(1,2) for odd primes p",
        default_range: (4, 14),
        errata: &[],
        existential: false,
        check: c_5_1_2,
    },
    TheoremEntry {
        id: "5.1.3",
        description: "{p} is a semigroup in Z_3p(1,3) for primes p other than 3",
        default_range: (6, 15),
        errata: &[],
        existential: false,
        check: c_5_1_3,
    },
    TheoremEntry {
        id: "5.1.4",
        description: "for n = p1 p2 the singletons {p1} and {p2} are semigroups in \
                      Z_n(1,p2) and Z_n(1,p1)",
        default_range: (6, 15),
        errata: &[],
        existential: false,
        check: c_5_1_4,
    },
    TheoremEntry {
        id: "5.1.5",
        description: "{n/p} is a semigroup in Z_n(1,p) for primes p dividing n",
        default_range: (4, 12),
        errata: &[],
        existential: false,
        check: c_5_1_5,
    },
    TheoremEntry {
        id: "5.1.6",
        description: "the coprime class contains a Smarandache member exactly when the \
                      modulus is neither 3 nor 5",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_1_6,
    },
    TheoremEntry {
        id: "5.1.7",
        description: "coprime pairs with t + u = 1 (mod n) give Smarandache idempotent tables",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_1_7,
    },
    TheoremEntry {
        id: "5.1.8",
        description: "the (x*y)*x identity on the idempotent ray against the printed t^2 = t, \
                      u^2 = u criterion",
        default_range: (3, 12),
        errata: &["5.1.8"],
        existential: false,
        check: c_5_1_8,
    },
    TheoremEntry {
        id: "5.1.9",
        description: "on the idempotent ray alternativity holds exactly under t^2 = t, \
                      u^2 = u, and then in Smarandache strong form",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_1_9,
    },
    TheoremEntry {
        id: "5.1.10",
        description: "on the idempotent ray the Bol identity holds exactly under t^3 = t, \
                      u^2 = u, and then in Smarandache strong form",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_1_10,
    },
    TheoremEntry {
        id: "5.1.11",
        description: "on the idempotent ray the Moufang identity holds exactly under t^2 = t, \
                      u^2 = u, and then in Smarandache strong form",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_1_11,
    },
    TheoremEntry {
        id: "5.2.1",
        description: "non-coprime distinct pairs with t + u = 1 (mod n) still give \
                      Smarandache tables",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_2_1,
    },
    TheoremEntry {
        id: "5.2.2",
        description: "on the same domain the four identities hold exactly under t^2 = t, \
                      u^2 = u, and then in Smarandache idempotent strong form",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_2_2,
    },
    TheoremEntry {
        id: "5.3.1",
        description: "Z_p((p+1)/2,(p+1)/2) is Smarandache for odd primes p",
        default_range: (3, 11),
        errata: &[],
        existential: false,
        check: c_5_3_1,
    },
    TheoremEntry {
        id: "5.3.2",
        description: "Z_p((p+1)/2,(p+1)/2) is Smarandache idempotent for odd primes p",
        default_range: (3, 11),
        errata: &[],
        existential: false,
        check: c_5_3_2,
    },
    TheoremEntry {
        id: "5.3.3",
        description: "Z_n((n+1)/2,(n+1)/2) is Smarandache for every odd modulus",
        default_range: (3, 15),
        errata: &[],
        existential: false,
        check: c_5_3_3,
    },
    TheoremEntry {
        id: "5.3.4",
        description: "{0, n/2} is a semigroup in Z_n(n/2,n/2) when (n/2)^2 = 0 (mod n)",
        default_range: (4, 16),
        errata: &["5.3.4-witness"],
        existential: false,
        check: c_5_3_4,
    },
    TheoremEntry {
        id: "5.3.5",
        description: "{0, m} is a semigroup in Z_n(m,m) when m^2 = m and 2m = 0 (mod n)",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_3_5,
    },
    TheoremEntry {
        id: "5.3.6",
        description: "Z_n(m,m) is Smarandache exactly when 2m = 1 (mod n)",
        default_range: (3, 12),
        errata: &["5.3.6-converse"],
        existential: false,
        check: c_5_3_6,
    },
    TheoremEntry {
        id: "5.3.7",
        description: "under 2m = 1 and m^2 = m (mod n) the table is Smarandache idempotent \
                      with all four identities in strong form",
        default_range: (3, 16),
        errata: &[],
        existential: false,
        check: c_5_3_7,
    },
    TheoremEntry {
        id: "5.4.1",
        description: "{0, n/2} is a semigroup in Z_n(2,0) for even n",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_4_1,
    },
    TheoremEntry {
        id: "5.4.2",
        description: "{0, n/2} is a semigroup in Z_n(0,2) for even n",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_4_2,
    },
    TheoremEntry {
        id: "5.4.3",
        description: "{0, 2} is a semigroup in Z_n(n/2,0) for even n",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_4_3,
    },
    TheoremEntry {
        id: "5.4.4",
        description: "{0, 2} is a semigroup in Z_n(0,n/2) for even n",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_4_4,
    },
    TheoremEntry {
        id: "5.4.5",
        description: "{0, n/p} is a semigroup in Z_n(p,0) for primes p dividing n",
        default_range: (4, 16),
        errata: &["5.4.5-hypothesis"],
        existential: false,
        check: c_5_4_5,
    },
    TheoremEntry {
        id: "5.4.6",
        description: "{0, n/p} is a semigroup in Z_n(0,p) for primes p dividing n",
        default_range: (4, 16),
        errata: &["5.4.5-hypothesis"],
        existential: false,
        check: c_5_4_6,
    },
    TheoremEntry {
        id: "5.4.7",
        description: "{0, p} is a semigroup in Z_n(n/p,0) for primes p dividing n",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_4_7,
    },
    TheoremEntry {
        id: "5.4.8",
        description: "a squarefree modulus with m prime factors yields 2^m - 2 Smarandache \
                      tables Z_n(d,0) with witness {0, n/d}",
        default_range: (4, 30),
        errata: &[],
        existential: false,
        check: c_5_4_8,
    },
    TheoremEntry {
        id: "5.4.9",
        description: "counting both coefficient sides doubles the squarefree bound to \
                      2(2^m - 2)",
        default_range: (4, 30),
        errata: &[],
        existential: false,
        check: c_5_4_9,
    },
    TheoremEntry {
        id: "5.4.10",
        description: "{0, n/q} is a semigroup in Z_n(q,0) for maximal prime powers q \
                      dividing n",
        default_range: (4, 16),
        errata: &[],
        existential: false,
        check: c_5_4_10,
    },
    TheoremEntry {
        id: "5.4.11",
        description: "Z_n(m,0) with m^2 = m (mod n) is Smarandache with all four identities \
                      in strong form",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_4_11,
    },
    TheoremEntry {
        id: "5.4.12",
        description: "Z_n(m,0) and Z_n(0,m) are Smarandache for idempotent m",
        default_range: (3, 12),
        errata: &[],
        existential: false,
        check: c_5_4_12,
    },
    TheoremEntry {
        id: "5.5.1",
        description: "direct products of Smarandache tables carry at least 2^r - 2 \
                      Smarandache subgroupoids",
        default_range: (1, 1),
        errata: &[],
        existential: false,
        check: c_5_5_1,
    },
    TheoremEntry {
        id: "5.6.1",
        description: "every identity-adjoined table is Smarandache via some pair {e, a}",
        default_range: (3, 10),
        errata: &[],
        existential: false,
        check: c_5_6_1,
    },
    TheoremEntry {
        id: "5.6.2",
        description: "no identity-adjoined table is Smarandache idempotent",
        default_range: (3, 10),
        errata: &[],
        existential: false,
        check: c_5_6_2,
    },
    TheoremEntry {
        id: "5.6.3",
        description: "adjoined tables satisfy right alternativity on non-degenerate \
                      assignments exactly when t^2 = 1 and tu + u = 0 (mod n)",
        default_range: (3, 10),
        errata: &["5.6.3-degenerate"],
        existential: false,
        check: c_5_6_3,
    },
    TheoremEntry {
        id: "5.6.4",
        description: "adjoined tables satisfy left alternativity on non-degenerate \
                      assignments exactly when u^2 = 1 and t + tu = 0 (mod n)",
        default_range: (3, 10),
        errata: &["5.6.3-degenerate"],
        existential: false,
        check: c_5_6_4,
    },
    TheoremEntry {
        id: "5.6.5",
        description: "for composite n the adjoined tables satisfy the Bol, Moufang and P \
                      identities on non-degenerate assignments exactly when t^2 = t and \
                      u^2 = u (mod n)",
        default_range: (4, 12),
        errata: &["5.6.5-converse"],
        existential: false,
        check: c_5_6_5,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_lists_sixty_three_unique_ids() {
        assert_eq!(REGISTRY.len(), 63);
        let ids: BTreeSet<_> = registry_ids().into_iter().collect();
        assert_eq!(ids.len(), 63, "duplicate theorem ids");
        assert!(theorem_entry("3.1.1").is_some());
        assert!(theorem_entry("5.6.5").is_some());
        assert!(theorem_entry("9.9.9").is_none());
    }

    #[test]
    fn unknown_theorem_id_is_reported() {
        let err = verify_theorem("9.9.9", None).unwrap_err();
        assert_eq!(err.code(), "UNKNOWN_THEOREM");
        let err = verify_theorem("3.1.1", Some((5, 4))).unwrap_err();
        assert_eq!(err.code(), "PARSE_ERROR");
    }

    #[test]
    fn errata_attachments_resolve_both_ways() {
        for entry in REGISTRY {
            for id in entry.errata {
                let e = erratum(id).unwrap_or_else(|| panic!("unknown erratum {id}"));
                assert!(
                    e.affected.contains(&entry.id),
                    "erratum {id} does not list theorem {}",
                    entry.id
                );
            }
        }
    }

    #[test]
    fn range_override_applies() {
        let rep = verify_theorem("3.2.1", Some((5, 5))).unwrap();
        assert_eq!(rep.checked, 1);
        assert_eq!(rep.n_range, (5, 5));
        // Z(4) = {(1,2),(2,1),(1,3),(3,1),(2,3),(3,2)}.
        let rep = verify_theorem("3.1.1", Some((4, 4))).unwrap();
        assert_eq!(rep.checked, 6);
        assert_eq!(rep.status, Status::Pass);
    }

    #[test]
    fn existential_claim_finds_witnesses_and_fails_on_barren_ranges() {
        let rep = verify_theorem("4.3.5", None).unwrap();
        assert_eq!(rep.status, Status::Pass);
        assert!(rep.checked >= 1);
        // No member of the order-5 family separates strong P from global P.
        let rep = verify_theorem("4.3.5", Some((5, 5))).unwrap();
        assert_eq!(rep.status, Status::Fail);
        assert_eq!(rep.checked, 0);
        assert_eq!(rep.failures.len(), 1);
        assert!(rep.failures[0].detail.contains("no witness"));
    }

    #[test]
    fn vacuous_hypotheses_pass_with_zero_checks() {
        let rep = verify_theorem("5.3.7", None).unwrap();
        assert_eq!(rep.status, Status::Pass);
        assert_eq!(rep.checked, 0);
    }

    #[test]
    fn idempotent_ray_p_law_deviations_are_excused() {
        let rep = verify_theorem("5.1.8", None).unwrap();
        assert_eq!(rep.status, Status::PassWithErrata);
        assert!(!rep.failures.is_empty());
        assert!(rep.failures.iter().all(|d| d.excused_by == Some("5.1.8")));
        // Z_10(3,8) satisfies P while 3^2 = 9 is not 3 (mod 10).
        assert!(rep.failures.iter().any(|d| d.subject == "Z_10(3,8)"));
    }

    #[test]
    fn equal_coefficient_smarandache_criterion_documents_even_counterexamples() {
        let rep = verify_theorem("5.3.6", Some((12, 12))).unwrap();
        assert_eq!(rep.status, Status::PassWithErrata);
        assert!(rep
            .failures
            .iter()
            .any(|d| d.subject == "Z_12(6,6)" && d.excused_by == Some("5.3.6-converse")));
    }

    #[test]
    fn adjoined_right_alternative_reports_full_domain_counterexample() {
        let rep = verify_theorem("5.6.3", Some((6, 6))).unwrap();
        assert_eq!(rep.status, Status::PassWithErrata);
        let degenerate: Vec<_> = rep
            .failures
            .iter()
            .filter(|d| d.subject == "Z_6(5,3)+e")
            .collect();
        assert!(
            degenerate
                .iter()
                .any(|d| d.detail.contains("fails on the full domain")),
            "expected a full-domain counterexample for Z_6(5,3)+e, got {degenerate:?}"
        );
    }

    #[test]
    fn every_entry_verifies_to_its_frozen_status() {
        let with_errata: BTreeSet<&str> = [
            "3.4.1", "4.2.5", "4.2.6", "5.1.8", "5.3.4", "5.3.6", "5.4.5", "5.4.6", "5.6.3",
            "5.6.4", "5.6.5",
        ]
        .into_iter()
        .collect();
        for entry in REGISTRY {
            let rep = verify_theorem(entry.id, None).unwrap();
            let want = if with_errata.contains(entry.id) {
                Status::PassWithErrata
            } else {
                Status::Pass
            };
            assert_eq!(
                rep.status,
                want,
                "{}: unexpected status; first deviation: {:?}",
                entry.id,
                rep.failures.first()
            );
            if want == Status::Pass {
                assert!(rep.failures.is_empty(), "{}: stray deviations", entry.id);
            } else {
                assert!(
                    rep.failures.iter().all(|d| d.excused_by.is_some()),
                    "{}: unexcused deviation {:?}",
                    entry.id,
                    rep.failures.iter().find(|d| d.excused_by.is_none())
                );
            }
        }
    }

    #[test]
    fn summary_lines_name_their_outcome() {
        let rep = verify_theorem("3.2.1", None).unwrap();
        let line = rep.summary_line();
        assert!(line.starts_with("3.2.1 PASS"), "{line}");
        let rep = verify_theorem("3.4.1", None).unwrap();
        assert!(rep.summary_line().contains("PASS_WITH_ERRATA"));
        assert!(rep.summary_line().contains("3.4-count"));
    }
}

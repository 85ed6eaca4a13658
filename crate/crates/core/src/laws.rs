//! Executable statements about the Γ-extension.
//!
//! Each `verify_*` function checks one statement on one instance and returns
//! a [`LawReport`]. A report is `Fail` only with a counterexample that has
//! been rechecked through the plain rank oracle, and a check whose
//! hypotheses do not hold is `PreconditionUnmet`, never `Pass`.
//!
//! The `sweep_*` functions run a check over catalog entries and return the
//! reports sorted by instance key.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::catalog::CatalogEntry;
use crate::connectivity::{connectivity_witness, is_k_connected, Mode, Separation};
use crate::error::{Error, Result};
use crate::extensions::{compose_check, gamma_extension, GammaExtension};
use crate::label::{ElementSet, Label};
use crate::matroid::{BinaryMatroid, Limits};
use crate::xor_basis::XorBasis;

/// Seed for the sampled rank checks on instances above
/// [`Limits::exhaustive_subsets`].
pub const RANK_SAMPLE_SEED: u64 = 0x6761_6d6d_615f_7831;
/// Number of sampled subsets in that case.
pub const RANK_SAMPLE_COUNT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LawId {
    /// Γ independent, ranks on `S` unchanged, `+1` on sets meeting Γ, `r' = r + 1`.
    RankIdentities,
    /// The circuits of `M^X` are exactly the three predicted families.
    CircuitCharacterization,
    /// Circuits and cocircuits of a k-connected matroid have at least k elements.
    GirthBound,
    /// A set whose deletion drops the rank by one contains a cocircuit.
    CocircuitContainment,
    /// Deleting fewer than k elements of a k-connected matroid keeps the rank.
    DeletionRank,
    /// `M^X` is k-connected iff `|X| >= k` and `2 <= k <= 4`.
    KConnectedExtension,
    /// For disconnected `M`, `M^X` is connected iff X meets every component.
    ConnectingComponents,
    /// Splitting the parallel extension by Γ gives `M^X`.
    Composition,
    /// `M^X \ Γ = M`.
    ExtensionIdentity,
    /// With `|X| >= 2`, `M^X` has a 4-circuit and is not 5-connected.
    NeverFiveConnected,
    /// Paper and cumulative k-connectedness agree.
    ModeAgreement,
}

impl LawId {
    pub const ALL: [LawId; 11] = [
        LawId::RankIdentities,
        LawId::CircuitCharacterization,
        LawId::GirthBound,
        LawId::CocircuitContainment,
        LawId::DeletionRank,
        LawId::KConnectedExtension,
        LawId::ConnectingComponents,
        LawId::Composition,
        LawId::ExtensionIdentity,
        LawId::NeverFiveConnected,
        LawId::ModeAgreement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawId::RankIdentities => "rank-identities",
            LawId::CircuitCharacterization => "circuit-characterization",
            LawId::GirthBound => "girth-bound",
            LawId::CocircuitContainment => "cocircuit-containment",
            LawId::DeletionRank => "deletion-rank",
            LawId::KConnectedExtension => "k-connected-extension",
            LawId::ConnectingComponents => "connecting-components",
            LawId::Composition => "composition",
            LawId::ExtensionIdentity => "extension-identity",
            LawId::NeverFiveConnected => "never-5-connected",
            LawId::ModeAgreement => "mode-agreement",
        }
    }

    pub fn from_name(s: &str) -> Option<LawId> {
        LawId::ALL.into_iter().find(|l| l.as_str() == s)
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    PreconditionUnmet,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::PreconditionUnmet => "precondition-unmet",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which rank identity of the Γ-extension was violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankClause {
    GammaIndependent,
    UnchangedOnGround,
    GrowsWhenMeetingGamma,
    TotalRankPlusOne,
}

impl RankClause {
    pub fn as_str(self) -> &'static str {
        match self {
            RankClause::GammaIndependent => "gamma-independent",
            RankClause::UnchangedOnGround => "unchanged-on-ground-set",
            RankClause::GrowsWhenMeetingGamma => "grows-when-meeting-gamma",
            RankClause::TotalRankPlusOne => "total-rank-plus-one",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// `missing`: circuits of `M^X` not predicted; `unexpected`: predicted
    /// sets that are not circuits.
    CircuitMismatch {
        missing: Vec<ElementSet>,
        unexpected: Vec<ElementSet>,
    },
    RankIdentity {
        clause: RankClause,
        subset: ElementSet,
        extended_rank: usize,
        base_rank: usize,
    },
    Connectivity {
        k: usize,
        connected: bool,
        predicted: bool,
        witness: Option<Separation>,
    },
    GirthBound {
        k: usize,
        girth: Option<usize>,
        cogirth: Option<usize>,
    },
    /// Deleting `deleted` drops the rank by one, yet it contains no cocircuit.
    UncoveredDeletion {
        deleted: ElementSet,
    },
    /// Deleting fewer than `k` elements dropped the rank.
    RankDrop {
        k: usize,
        deleted: ElementSet,
        rank: usize,
        expected: usize,
    },
    /// A component of `M` missed by X that is not a component of `M^X`.
    ComponentNotPreserved {
        component: ElementSet,
    },
    /// Two matroids that should be equal are not.
    NotEqual {
        detail: String,
    },
    NoFourCircuit,
    ModeDisagreement {
        k: usize,
        paper: bool,
        cumulative: bool,
    },
}

fn write_family(f: &mut fmt::Formatter<'_>, family: &[ElementSet]) -> fmt::Result {
    f.write_str("[")?;
    for (i, s) in family.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        write!(f, "{s}")?;
    }
    f.write_str("]")
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| String::from("none"), |v| format!("{v}"))
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::CircuitMismatch {
                missing,
                unexpected,
            } => {
                f.write_str("missing=")?;
                write_family(f, missing)?;
                f.write_str(" unexpected=")?;
                write_family(f, unexpected)
            }
            Counterexample::RankIdentity {
                clause,
                subset,
                extended_rank,
                base_rank,
            } => write!(
                f,
                "clause={} subset={subset} extended-rank={extended_rank} base-rank={base_rank}",
                clause.as_str()
            ),
            Counterexample::Connectivity {
                k,
                connected,
                predicted,
                witness,
            } => {
                write!(f, "k={k} connected={connected} predicted={predicted}")?;
                if let Some(w) = witness {
                    write!(f, " witness={w}")?;
                }
                Ok(())
            }
            Counterexample::GirthBound { k, girth, cogirth } => {
                write!(f, "k={k} girth={} cogirth={}", opt(*girth), opt(*cogirth))
            }
            Counterexample::UncoveredDeletion { deleted } => {
                write!(f, "deleted={deleted} contains no cocircuit")
            }
            Counterexample::RankDrop {
                k,
                deleted,
                rank,
                expected,
            } => write!(f, "k={k} deleted={deleted} rank={rank} expected={expected}"),
            Counterexample::ComponentNotPreserved { component } => {
                write!(f, "component={component} not a component of the extension")
            }
            Counterexample::NotEqual { detail } => f.write_str(detail),
            Counterexample::NoFourCircuit => f.write_str("no 4-element circuit"),
            Counterexample::ModeDisagreement {
                k,
                paper,
                cumulative,
            } => write!(f, "k={k}: paper={paper} cumulative={cumulative}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    law: LawId,
    instance: String,
    verdict: Verdict,
    counterexample: Option<Counterexample>,
    note: Option<String>,
}

impl LawReport {
    pub fn pass(law: LawId, instance: impl Into<String>) -> Self {
        Self::build(law, instance, Verdict::Pass, None)
    }

    pub fn fail(law: LawId, instance: impl Into<String>, cx: Counterexample) -> Self {
        Self::build(law, instance, Verdict::Fail, Some(cx))
    }

    pub fn unmet(law: LawId, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::build(law, instance, Verdict::PreconditionUnmet, None).with_note(reason)
    }

    fn build(
        law: LawId,
        instance: impl Into<String>,
        verdict: Verdict,
        counterexample: Option<Counterexample>,
    ) -> Self {
        LawReport {
            law,
            instance: instance.into(),
            verdict,
            counterexample,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Prefixes the instance key with a catalog name.
    pub fn named(mut self, name: &str) -> Self {
        self.instance = format!("{name} {}", self.instance);
        self
    }

    pub fn law(&self) -> LawId {
        self.law
    }

    pub fn instance(&self) -> &str {
        &self.instance
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }
}

/// Counts per verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unmet: usize,
}

impl Summary {
    pub fn of(reports: &[LawReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::PreconditionUnmet => s.unmet += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.unmet
    }
}

fn instance_key(m: &BinaryMatroid, x: Option<&ElementSet>, k: Option<usize>) -> String {
    let mut s = m.fingerprint();
    if let Some(x) = x {
        s.push_str(&format!(" X={x}"));
    }
    if let Some(k) = k {
        s.push_str(&format!(" k={k}"));
    }
    s
}

/// All subsets in increasing mask order, each rank kept incrementally on
/// both sides.
struct RankWalk<'a> {
    ext_cols: &'a [u64],
    /// Column in `M` of each element of `S`, 0 for Γ.
    base_cols: &'a [u64],
    gamma_mask: u64,
    ext: XorBasis,
    base: XorBasis,
}

impl RankWalk<'_> {
    /// Decides positions `pos - 1` down to 0; excluding first visits masks
    /// in increasing order.
    fn first_violation(&mut self, pos: usize, mask: u64) -> Option<u64> {
        if pos == 0 {
            let (e, b) = (self.ext.rank(), self.base.rank());
            let ok = if mask & self.gamma_mask == 0 {
                e == b
            } else {
                e > b
            };
            return (!ok).then_some(mask);
        }
        let i = pos - 1;
        if let Some(v) = self.first_violation(i, mask) {
            return Some(v);
        }
        let s1 = self.ext.insert_slot(self.ext_cols[i]);
        let s2 = self.base.insert_slot(self.base_cols[i]);
        let found = self.first_violation(i, mask | 1 << i);
        self.base.undo(s2);
        self.ext.undo(s1);
        found
    }
}

/// Direct minimal-dependence test: dependent, and dependent no longer
/// after removing any one element.
fn is_circuit(m: &BinaryMatroid, c: &ElementSet) -> Result<bool> {
    if c.is_empty() || m.rank_of(c)? == c.len() {
        return Ok(false);
    }
    for e in c {
        let mut smaller = c.clone();
        smaller.remove(e);
        if m.rank_of(&smaller)? < smaller.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The circuits of `M^X` predicted from the circuits of `M`:
///
/// 1. every circuit of `M`;
/// 2. `{x_i, x_j, γ_i, γ_j}` for every pair `i != j`;
/// 3. `J ∪ (D − X_J)` for every `J ⊆ Γ` with `|J|` even and at least 2, and
///    every circuit `D` of `M` containing `X_J = {x_i : γ_i ∈ J}`.
pub fn predicted_circuits(m: &BinaryMatroid, ext: &GammaExtension) -> Result<Vec<ElementSet>> {
    let base = m.circuits()?;
    let mut out: Vec<ElementSet> = base.clone();
    let pairs: Vec<(&Label, &Label)> = ext.pairs().collect();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            out.push(
                [pairs[i].0, pairs[j].0, pairs[i].1, pairs[j].1]
                    .into_iter()
                    .cloned()
                    .collect(),
            );
        }
    }
    let m_gamma = pairs.len();
    if m_gamma > 20 {
        return Err(Error::Size {
            size: m_gamma,
            limit: 20,
        });
    }
    for j_mask in 1u32..(1 << m_gamma) {
        if j_mask.count_ones() % 2 == 1 {
            continue;
        }
        let (mut j_set, mut x_j) = (ElementSet::new(), ElementSet::new());
        for (t, (x, g)) in pairs.iter().enumerate() {
            if j_mask >> t & 1 == 1 {
                j_set.insert((*g).clone());
                x_j.insert((*x).clone());
            }
        }
        for d in base.iter().filter(|d| x_j.is_subset(d)) {
            out.push(j_set.union(&d.difference(&x_j)));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn sorted_difference(a: &[ElementSet], b: &[ElementSet]) -> Vec<ElementSet> {
    a.iter()
        .filter(|s| b.binary_search(s).is_err())
        .cloned()
        .collect()
}

/// Compares [`predicted_circuits`] with the enumerated circuits of `M^X`.
pub fn verify_circuit_characterization(m: &BinaryMatroid, x: &ElementSet) -> Result<LawReport> {
    let key = instance_key(m, Some(x), None);
    let ext = gamma_extension(m, x, None)?;
    let predicted = predicted_circuits(m, &ext)?;
    let actual = ext.result().circuits()?;
    if predicted == actual {
        return Ok(LawReport::pass(LawId::CircuitCharacterization, key));
    }
    let missing = sorted_difference(&actual, &predicted);
    let unexpected = sorted_difference(&predicted, &actual);
    for c in &missing {
        assert!(is_circuit(ext.result(), c)?, "enumerated non-circuit {c}");
    }
    for c in &unexpected {
        assert!(!is_circuit(ext.result(), c)?, "missed circuit {c}");
    }
    Ok(LawReport::fail(
        LawId::CircuitCharacterization,
        key,
        Counterexample::CircuitMismatch {
            missing,
            unexpected,
        },
    ))
}

/// Checks the four rank identities of the Γ-extension on every subset of
/// `S ∪ Γ` (or on [`RANK_SAMPLE_COUNT`] seeded random subsets above
/// [`Limits::exhaustive_subsets`]).
pub fn verify_rank_identities(m: &BinaryMatroid, x: &ElementSet) -> Result<LawReport> {
    verify_rank_identities_within(m, x, Limits::DEFAULT.exhaustive_subsets)
}

pub fn verify_rank_identities_within(
    m: &BinaryMatroid,
    x: &ElementSet,
    exhaustive_limit: usize,
) -> Result<LawReport> {
    let key = instance_key(m, Some(x), None);
    let ext = gamma_extension(m, x, None)?;
    let mx = ext.result();
    mx.require_size(63)?;
    let law = LawId::RankIdentities;
    let fail = |clause, mask: u64, extended_rank, base_rank| {
        LawReport::fail(
            law,
            key.clone(),
            Counterexample::RankIdentity {
                clause,
                subset: mx.set_of_mask(mask),
                extended_rank,
                base_rank,
            },
        )
    };

    // position in M of each element of M^X, if it lies in S
    let to_base: Vec<Option<usize>> = mx.labels().iter().map(|l| m.index_of(l).ok()).collect();
    let gamma_mask = mx.mask_of(&ext.gamma_set())?;
    let base_mask = |mask: u64| {
        let mut out = 0u64;
        let mut rest = mask & !gamma_mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << to_base[i].expect("non-gamma element lies in S");
        }
        out
    };

    let g_rank = mx.rank_mask(gamma_mask);
    if g_rank != ext.gamma().len() {
        return Ok(fail(
            RankClause::GammaIndependent,
            gamma_mask,
            g_rank,
            ext.gamma().len(),
        ));
    }
    if mx.rank() != m.rank() + 1 {
        return Ok(fail(
            RankClause::TotalRankPlusOne,
            mx.full_mask(),
            mx.rank(),
            m.rank(),
        ));
    }

    let check = |mask: u64| -> Option<LawReport> {
        let ext_rank = mx.rank_mask(mask);
        let base_rank = m.rank_mask(base_mask(mask));
        if mask & gamma_mask == 0 {
            (ext_rank != base_rank)
                .then(|| fail(RankClause::UnchangedOnGround, mask, ext_rank, base_rank))
        } else {
            (ext_rank < base_rank + 1)
                .then(|| fail(RankClause::GrowsWhenMeetingGamma, mask, ext_rank, base_rank))
        }
    };

    if mx.len() <= exhaustive_limit {
        let base_cols: Vec<u64> = (0..mx.len())
            .map(|i| to_base[i].map_or(0, |b| m.column_masks()[b]))
            .collect();
        let mut walk = RankWalk {
            ext_cols: mx.column_masks(),
            base_cols: &base_cols,
            gamma_mask,
            ext: XorBasis::new(),
            base: XorBasis::new(),
        };
        if let Some(mask) = walk.first_violation(mx.len(), 0) {
            return Ok(check(mask).expect("walk and oracle agree"));
        }
        Ok(LawReport::pass(law, key).with_note("exhaustive"))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(RANK_SAMPLE_SEED);
        for _ in 0..RANK_SAMPLE_COUNT {
            if let Some(r) = check(rng.next_u64() & mx.full_mask()) {
                return Ok(r);
            }
        }
        Ok(LawReport::pass(law, key).with_note(format!(
            "sampled {RANK_SAMPLE_COUNT} subsets, seed {RANK_SAMPLE_SEED:#x}"
        )))
    }
}

/// `M^X` is k-connected iff `|X| >= k` and `2 <= k <= 4`, for `M`
/// k-connected with at least `2(k-1)` elements.
pub fn verify_k_connected_extension(
    m: &BinaryMatroid,
    x: &ElementSet,
    k: usize,
) -> Result<LawReport> {
    let key = instance_key(m, Some(x), Some(k));
    let law = LawId::KConnectedExtension;
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2"));
    }
    if m.len() < 2 * (k - 1) {
        return Ok(LawReport::unmet(law, key, "fewer than 2(k-1) elements"));
    }
    if !is_k_connected(m, k, Mode::Paper)? {
        return Ok(LawReport::unmet(law, key, "M is not k-connected"));
    }
    let ext = gamma_extension(m, x, None)?;
    let predicted = x.len() >= k && (2..=4).contains(&k);
    let witness = connectivity_witness(ext.result(), k, Mode::Paper)?;
    let connected = witness.is_none();
    if connected == predicted {
        return Ok(LawReport::pass(law, key));
    }
    if let Some(w) = &witness {
        assert!(w.holds_in(ext.result())?, "witness {w} does not recheck");
    }
    Ok(LawReport::fail(
        law,
        key,
        Counterexample::Connectivity {
            k,
            connected,
            predicted,
            witness,
        },
    ))
}

/// For disconnected `M`: `M^X` is connected iff every component of `M`
/// meets X; a component missed by X stays a component of `M^X`.
pub fn verify_connecting_components(m: &BinaryMatroid, x: &ElementSet) -> Result<LawReport> {
    let key = instance_key(m, Some(x), None);
    let law = LawId::ConnectingComponents;
    let components = m.components()?;
    if components.len() < 2 {
        return Ok(LawReport::unmet(law, key, "M is connected"));
    }
    let ext = gamma_extension(m, x, None)?;
    let predicted = components.iter().all(|c| !c.is_disjoint(x));
    let witness = connectivity_witness(ext.result(), 2, Mode::Paper)?;
    let connected = witness.is_none();
    if connected != predicted {
        if let Some(w) = &witness {
            assert!(w.holds_in(ext.result())?, "witness {w} does not recheck");
        }
        return Ok(LawReport::fail(
            law,
            key,
            Counterexample::Connectivity {
                k: 2,
                connected,
                predicted,
                witness,
            },
        ));
    }
    let ext_components = ext.result().components()?;
    for c in components.iter().filter(|c| c.is_disjoint(x)) {
        if !ext_components.contains(c) {
            return Ok(LawReport::fail(
                law,
                key,
                Counterexample::ComponentNotPreserved {
                    component: c.clone(),
                },
            ));
        }
    }
    Ok(LawReport::pass(law, key))
}

/// Every `Y` with `r(M \ Y) = r(M) - 1` contains a cocircuit of `M`.
pub fn verify_cocircuit_containment(m: &BinaryMatroid) -> Result<LawReport> {
    let key = instance_key(m, None, None);
    let law = LawId::CocircuitContainment;
    m.require_size(Limits::DEFAULT.circuits)?;
    let cocircuits: Vec<u64> = m
        .cocircuits()?
        .iter()
        .map(|c| m.mask_of(c))
        .collect::<Result<_>>()?;
    let full = m.full_mask();
    let mut exercised = 0usize;
    for y in 0..=full {
        if y == full || m.rank_mask(full & !y) + 1 != m.rank() {
            continue;
        }
        exercised += 1;
        if !cocircuits.iter().any(|&c| c & !y == 0) {
            return Ok(LawReport::fail(
                law,
                key,
                Counterexample::UncoveredDeletion {
                    deleted: m.set_of_mask(y),
                },
            ));
        }
    }
    if exercised == 0 {
        return Ok(LawReport::unmet(
            law,
            key,
            "no deletion drops the rank by exactly one",
        ));
    }
    Ok(LawReport::pass(law, key).with_note(format!("{exercised} sets checked")))
}

/// For every `k >= 2` such that `M` is k-connected with at least `2(k-1)`
/// elements: deleting any fewer than `k` elements keeps the rank.
pub fn verify_deletion_rank(m: &BinaryMatroid) -> Result<LawReport> {
    let key = instance_key(m, None, None);
    let law = LawId::DeletionRank;
    m.require_size(Limits::DEFAULT.separations)?;
    let full = m.full_mask();
    let mut checked = Vec::new();
    let mut k = 2;
    while m.len() >= 2 * (k - 1) && is_k_connected(m, k, Mode::Paper)? {
        for y in 0..=full {
            if (y.count_ones() as usize) >= k || y == full {
                continue;
            }
            let rank = m.rank_mask(full & !y);
            if rank != m.rank() {
                return Ok(LawReport::fail(
                    law,
                    key,
                    Counterexample::RankDrop {
                        k,
                        deleted: m.set_of_mask(y),
                        rank,
                        expected: m.rank(),
                    },
                ));
            }
        }
        checked.push(k);
        k += 1;
    }
    if checked.is_empty() {
        return Ok(LawReport::unmet(law, key, "M is not 2-connected"));
    }
    Ok(LawReport::pass(law, key).with_note(format!("k in {checked:?}")))
}

/// Circuits and cocircuits have at least `k` elements, for `M` k-connected
/// with at least `2(k-1)` elements.
pub fn verify_girth_bound(m: &BinaryMatroid, k: usize) -> Result<LawReport> {
    let key = instance_key(m, None, Some(k));
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2"));
    }
    if m.len() < 2 * (k - 1) || !is_k_connected(m, k, Mode::Paper)? {
        return Ok(LawReport::unmet(
            LawId::GirthBound,
            key,
            "M is not k-connected with at least 2(k-1) elements",
        ));
    }
    let mut r = crate::connectivity::girth_bound_check(m, k)?;
    r.note = None;
    r.instance = key;
    Ok(r)
}

pub fn verify_composition(m: &BinaryMatroid, x: &ElementSet) -> Result<LawReport> {
    let key = instance_key(m, Some(x), None);
    Ok(if compose_check(m, x)? {
        LawReport::pass(LawId::Composition, key)
    } else {
        LawReport::fail(
            LawId::Composition,
            key,
            Counterexample::NotEqual {
                detail:
                    "splitting the parallel extension by gamma differs from the gamma-extension"
                        .into(),
            },
        )
    })
}

pub fn verify_extension_identity(m: &BinaryMatroid, x: &ElementSet) -> Result<LawReport> {
    let key = instance_key(m, Some(x), None);
    let ext = gamma_extension(m, x, None)?;
    let back = ext.result().delete_raw(&ext.gamma_set())?;
    Ok(if back.equals(m) {
        LawReport::pass(LawId::ExtensionIdentity, key)
    } else {
        LawReport::fail(
            LawId::ExtensionIdentity,
            key,
            Counterexample::NotEqual {
                detail: format!("deleting gamma gives {}", back.fingerprint()),
            },
        )
    })
}

/// With `|X| >= 2`: `M^X` has a 4-element circuit, and is not 5-connected
/// once it has at least 8 elements.
pub fn verify_never_five_connected(m: &BinaryMatroid, x: &ElementSet) -> Result<LawReport> {
    let key = instance_key(m, Some(x), None);
    let law = LawId::NeverFiveConnected;
    if x.len() < 2 {
        return Ok(LawReport::unmet(law, key, "|X| < 2"));
    }
    let ext = gamma_extension(m, x, None)?;
    let mx = ext.result();
    if !mx.circuits()?.iter().any(|c| c.len() == 4) {
        return Ok(LawReport::fail(law, key, Counterexample::NoFourCircuit));
    }
    if mx.len() >= 8 && is_k_connected(mx, 5, Mode::Paper)? {
        return Ok(LawReport::fail(
            law,
            key,
            Counterexample::Connectivity {
                k: 5,
                connected: true,
                predicted: false,
                witness: None,
            },
        ));
    }
    Ok(LawReport::pass(law, key))
}

/// Paper and cumulative k-connectedness agree on `m`. Below `2(k-1)`
/// elements no `(k-1)`-separation fits, so paper mode holds
/// vacuously; both answers are then kept in the note of a
/// `PreconditionUnmet` report.
pub fn verify_mode_agreement(m: &BinaryMatroid, k: usize) -> Result<LawReport> {
    let key = instance_key(m, None, Some(k));
    let paper = is_k_connected(m, k, Mode::Paper)?;
    let cumulative = is_k_connected(m, k, Mode::Cumulative)?;
    if m.len() < 2 * (k - 1) {
        return Ok(LawReport::unmet(
            LawId::ModeAgreement,
            key,
            format!("fewer than 2(k-1) elements; paper={paper} cumulative={cumulative}"),
        ));
    }
    Ok(if paper == cumulative {
        LawReport::pass(LawId::ModeAgreement, key)
    } else {
        LawReport::fail(
            LawId::ModeAgreement,
            key,
            Counterexample::ModeDisagreement {
                k,
                paper,
                cumulative,
            },
        )
    })
}

/// Which `(M, X)` pairs a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    /// Largest `|S|`.
    pub max_n: usize,
    /// Largest `|S ∪ Γ|`.
    pub max_extended: usize,
    pub min_x: usize,
    pub max_x: usize,
    pub connected_only: bool,
}

fn sorted(mut reports: Vec<LawReport>) -> Vec<LawReport> {
    reports.sort_by(|a, b| (a.law, &a.instance).cmp(&(b.law, &b.instance)));
    reports
}

/// Runs a per-`(M, X)` law over every entry within `bounds` and every
/// independent X of allowed size.
pub fn sweep_extension_law(
    entries: &[CatalogEntry],
    law: LawId,
    bounds: SweepBounds,
) -> Result<Vec<LawReport>> {
    let check: fn(&BinaryMatroid, &ElementSet) -> Result<LawReport> = match law {
        LawId::RankIdentities => verify_rank_identities,
        LawId::CircuitCharacterization => verify_circuit_characterization,
        LawId::Composition => verify_composition,
        LawId::ExtensionIdentity => verify_extension_identity,
        LawId::NeverFiveConnected => verify_never_five_connected,
        LawId::ConnectingComponents => verify_connecting_components,
        _ => return Err(Error::InvalidArgument("not a per-(M, X) law")),
    };
    let mut out = Vec::new();
    for e in entries {
        let m = e.matroid();
        if m.len() > bounds.max_n || (bounds.connected_only && !e.is_connected()) {
            continue;
        }
        let max_x = bounds
            .max_x
            .min(bounds.max_extended.saturating_sub(m.len()));
        if max_x < bounds.min_x.max(1) {
            continue;
        }
        for x in m.independent_sets(bounds.min_x.max(1), max_x)? {
            out.push(check(m, &x)?.named(e.name()));
        }
    }
    Ok(sorted(out))
}

/// The k-connected-extension biconditional for each `k` in `ks`, over
/// entries with `2(k-1) <= n <= max_n` and independent X with
/// `1 <= |X| <= k + 1`. An entry that is not k-connected contributes one
/// `PreconditionUnmet` report for that `k`; a `k` with no usable entry at
/// all contributes one as well.
pub fn sweep_k_connected_extension(
    entries: &[CatalogEntry],
    ks: &[usize],
    max_n: usize,
) -> Result<Vec<LawReport>> {
    let law = LawId::KConnectedExtension;
    let mut out = Vec::new();
    for &k in ks {
        let mut exercised = false;
        for e in entries {
            let m = e.matroid();
            if m.len() < 2 * (k - 1) || m.len() > max_n {
                continue;
            }
            if !is_k_connected(m, k, Mode::Paper)? {
                out.push(
                    LawReport::unmet(law, instance_key(m, None, Some(k)), "M is not k-connected")
                        .named(e.name()),
                );
                continue;
            }
            exercised = true;
            for x in m.independent_sets(1, k + 1)? {
                out.push(verify_k_connected_extension(m, &x, k)?.named(e.name()));
            }
        }
        if !exercised {
            out.push(LawReport::unmet(
                law,
                format!("k={k}"),
                "no k-connected instance in the pool",
            ));
        }
    }
    Ok(sorted(out))
}

/// Per-matroid laws ([`LawId::CocircuitContainment`],
/// [`LawId::DeletionRank`], [`LawId::GirthBound`] for each `k` in `ks`,
/// [`LawId::ModeAgreement`] for each `k` in `ks`).
pub fn sweep_matroid_law(
    entries: &[CatalogEntry],
    law: LawId,
    max_n: usize,
    ks: &[usize],
) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for e in entries.iter().filter(|e| e.matroid().len() <= max_n) {
        let m = e.matroid();
        match law {
            LawId::CocircuitContainment => out.push(verify_cocircuit_containment(m)?),
            LawId::DeletionRank => out.push(verify_deletion_rank(m)?),
            LawId::GirthBound => {
                for &k in ks {
                    out.push(verify_girth_bound(m, k)?);
                }
            }
            LawId::ModeAgreement => {
                for &k in ks {
                    out.push(verify_mode_agreement(m, k)?);
                }
            }
            _ => return Err(Error::InvalidArgument("not a per-matroid law")),
        }
        let n = out.len();
        let start = n - if matches!(law, LawId::GirthBound | LawId::ModeAgreement) {
            ks.len()
        } else {
            1
        };
        for r in &mut out[start..] {
            *r = r.clone().named(e.name());
        }
    }
    Ok(sorted(out))
}

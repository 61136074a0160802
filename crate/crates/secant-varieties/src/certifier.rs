//! Mechanical emptiness certificates for secant varieties on general curves.
//!
//! Fix a series l1 = g^{r1}_{d1} with nonnegative Brill-Noether number rho
//! on a general curve of genus g, and let l2 = g^{r2}_{d2} be its residual.
//! An effective divisor D of degree e lies on the secant variety of l2 with
//! f failed conditions exactly when the extension series l1 + D is a
//! g^{r1+f}_{d1+e}. The certifier decides emptiness of that secant variety
//! by degenerating the curve to a flag curve: a chain with a rational spine
//! and g elliptic tails, each tail contributing a cusp-like weight r to any
//! aspect of rank r at its attachment point.
//!
//! The degeneration splits into two cases:
//!
//! - collision case: all e points of D collide at one smooth point of the
//!   spine. [`case_i_excluded`] rules this out by a weight overflow whenever
//!   g > d1 - r1.
//! - subcurve case: D specializes onto a connected subcurve Y of arithmetic
//!   genus d1 meeting the complementary curve Z (genus g - d1) at one point
//!   p. Both the l1 aspect and the extension aspect then satisfy a finite
//!   list of constraints on their vanishing sequences at p, enumerated
//!   exhaustively by [`enumerate_candidates`].
//!
//! If no candidate pair of vanishing sequences survives the enabled
//! constraints, the secant variety was empty on the general curve. Survivors
//! do not certify nonemptiness; they are reported as witnesses and the
//! result is inconclusive.
//!
//! Constraint catalogue (Y carries the aspects of l1 and of the extension
//! series; Z carries the complementary aspects):
//!
//! | code      | meaning                                                          |
//! |-----------|------------------------------------------------------------------|
//! | C-ZERO    | both Y-side sequences begin with 0                               |
//! | C-SUB     | the l1 sequence values embed in the extension sequence values    |
//! | C-E       | (f = 1) the value e occurs in the extension sequence             |
//! | C-PLK-Y1  | weight of the l1 sequence fits the Y budget for rank r1          |
//! | C-PLK-Y2  | weight of the extension sequence fits the Y budget for r1 + f    |
//! | C-PLK-Z1  | weight of the complementary l1 sequence fits the Z budget        |
//! | C-PLK-Z2  | weight of the complementary extension sequence fits the Z budget |
//! | C-ZSUB    | (f = 1) the Z-side embedding mirroring C-SUB                     |

use std::collections::BTreeSet;

use itertools::Itertools;
use num::bigint::BigInt;
use num::Signed;
use serde::ser::Serializer;
use serde::Serialize;
use thiserror::Error;

use crate::counting::gen_binomial;
use crate::ramification::{
    is_subsequence_values, ramification_budget_at_p, refined_complement, VanishingSequence,
};
use crate::series::{
    emptiness_condition_holds, expected_dim_secant, rho, ParamError, SecantParams, SeriesParams,
};

/// Default bound on the number of candidate sequence pairs the search may
/// examine. The `secant` tool reads CERTIFIER_SEARCH_CAP to override it.
pub const DEFAULT_SEARCH_CAP: u64 = 100_000_000;

/// At most this many survivors are stored as witnesses; the exact survivor
/// count is always reported.
pub const WITNESS_CAP: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifierError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("invalid certifier instance: {0}")]
    InvalidInstance(String),
    #[error("outside the classifier's domain: {0}")]
    NotApplicable(String),
    #[error("search space of {candidates} candidates exceeds the cap of {cap}")]
    SearchSpaceTooLarge { candidates: BigInt, cap: u64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Identifier of one searchable constraint; see the module table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintId {
    ZeroStart,
    ValueSubset,
    ExtraIsE,
    PluckerY1,
    PluckerY2,
    PluckerZ1,
    PluckerZ2,
    ComplementSubset,
}

impl ConstraintId {
    pub const ALL: [ConstraintId; 8] = [
        ConstraintId::ZeroStart,
        ConstraintId::ValueSubset,
        ConstraintId::ExtraIsE,
        ConstraintId::PluckerY1,
        ConstraintId::PluckerY2,
        ConstraintId::PluckerZ1,
        ConstraintId::PluckerZ2,
        ConstraintId::ComplementSubset,
    ];

    /// Stable machine-readable code.
    pub fn code(self) -> &'static str {
        match self {
            ConstraintId::ZeroStart => "C-ZERO",
            ConstraintId::ValueSubset => "C-SUB",
            ConstraintId::ExtraIsE => "C-E",
            ConstraintId::PluckerY1 => "C-PLK-Y1",
            ConstraintId::PluckerY2 => "C-PLK-Y2",
            ConstraintId::PluckerZ1 => "C-PLK-Z1",
            ConstraintId::PluckerZ2 => "C-PLK-Z2",
            ConstraintId::ComplementSubset => "C-ZSUB",
        }
    }

    pub fn from_code(code: &str) -> Option<ConstraintId> {
        ConstraintId::ALL.into_iter().find(|c| c.code() == code)
    }
}

impl Serialize for ConstraintId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

/// Set of enabled constraints. Weakening the set can only grow the survivor
/// list, which the tests check as a monotonicity property.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstraintFlags {
    enabled: BTreeSet<ConstraintId>,
}

impl ConstraintFlags {
    pub fn none() -> Self {
        ConstraintFlags::default()
    }

    pub fn all() -> Self {
        ConstraintFlags {
            enabled: ConstraintId::ALL.into_iter().collect(),
        }
    }

    /// Default set for a given f: everything for f = 1; without the f = 1
    /// specific C-E and C-ZSUB otherwise.
    pub fn default_for(f: i64) -> Self {
        let mut flags = ConstraintFlags::all();
        if f != 1 {
            flags.disable(ConstraintId::ExtraIsE);
            flags.disable(ConstraintId::ComplementSubset);
        }
        flags
    }

    pub fn enable(&mut self, id: ConstraintId) -> &mut Self {
        self.enabled.insert(id);
        self
    }

    pub fn disable(&mut self, id: ConstraintId) -> &mut Self {
        self.enabled.remove(&id);
        self
    }

    pub fn with(mut self, id: ConstraintId) -> Self {
        self.enable(id);
        self
    }

    pub fn contains(&self, id: ConstraintId) -> bool {
        self.enabled.contains(&id)
    }

    pub fn is_subset_of(&self, other: &ConstraintFlags) -> bool {
        self.enabled.is_subset(&other.enabled)
    }

    /// Enabled constraints in catalogue order.
    pub fn iter(&self) -> impl Iterator<Item = ConstraintId> + '_ {
        self.enabled.iter().copied()
    }
}

/// Validated instance `(g, r1, d1, e, f)` of the emptiness question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CertifierInstance {
    g: i64,
    r1: i64,
    d1: i64,
    e: i64,
    f: i64,
}

impl CertifierInstance {
    /// Validates that l1 is a series with rho >= 0 and an effective
    /// residual l2, and that `0 <= f < e <= min(d1, d2)`.
    pub fn new(g: i64, r1: i64, d1: i64, e: i64, f: i64) -> Result<Self, CertifierError> {
        let l1 = SeriesParams::new(g, r1, d1)?;
        if l1.rho().is_negative() {
            return Err(CertifierError::InvalidInstance(format!(
                "rho({g}, {r1}, {d1}) is negative; a general curve has no such series"
            )));
        }
        let l2 = l1.residual()?;
        SecantParams::new(e, f)?;
        if e > d1.min(l2.d()) {
            return Err(CertifierError::InvalidInstance(format!(
                "e = {e} exceeds min(d1, d2) = {}",
                d1.min(l2.d())
            )));
        }
        Ok(CertifierInstance { g, r1, d1, e, f })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn r1(&self) -> i64 {
        self.r1
    }

    pub fn d1(&self) -> i64 {
        self.d1
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn f(&self) -> i64 {
        self.f
    }

    pub fn l1(&self) -> SeriesParams {
        SeriesParams::new(self.g, self.r1, self.d1).expect("validated at construction")
    }

    pub fn l2(&self) -> SeriesParams {
        self.l1().residual().expect("validated at construction")
    }

    pub fn rho(&self) -> BigInt {
        rho(self.g, self.r1, self.d1)
    }
}

/// Outcome of a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Empty,
    Inconclusive,
    NotApplicable,
}

impl Status {
    pub fn code(self) -> &'static str {
        match self {
            Status::Empty => "EMPTY",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

/// Machine-readable explanation attached to a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReasonCode {
    /// The dimension gate fails; the method does not address the instance.
    GateFailed,
    /// The extension series g^{r1+f}_{d1+e} has negative Brill-Noether
    /// number, so a general curve carries none at all.
    ExtendedBnNegative,
    /// The pencil-trick rule for r1 = 1, rho = 1, f = 3, e = d1.
    SpecialRuleBpfTrick,
    /// Degeneration needs g > d1 to split off a genus-d1 subcurve; for
    /// f != 1 nothing forces that, so the method stops.
    GenusGate,
    /// The collision case could not be ruled out (unreachable after the
    /// earlier gates; kept as a defensive outcome).
    CollisionCaseNotExcluded,
    /// The collision case is excluded by weight overflow.
    CaseIExcluded,
    /// The subcurve case search eliminated every candidate.
    CaseIINoSurvivor,
    /// The subcurve case search left survivors, reported as witnesses.
    CaseIISurvivors,
    /// Speciality-two branch of the zero-count classifier: l1 is cut out by
    /// quadrics through a residual pencil, and the pencil trick applies.
    SpecialityTwoEmpty,
    /// Canonical branch of the zero-count classifier with a base-point-free
    /// pencil.
    CanonicalBpfEmpty,
    /// Canonical branch without base-point-freeness: the intersection is
    /// positive dimensional, no finite count exists.
    CanonicalNotBpf,
}

impl ReasonCode {
    pub fn code(self) -> &'static str {
        match self {
            ReasonCode::GateFailed => "GATE_FAILED",
            ReasonCode::ExtendedBnNegative => "EXTENDED_BN_NEGATIVE",
            ReasonCode::SpecialRuleBpfTrick => "SPECIAL_RULE_BPF_TRICK",
            ReasonCode::GenusGate => "GENUS_GATE",
            ReasonCode::CollisionCaseNotExcluded => "COLLISION_CASE_NOT_EXCLUDED",
            ReasonCode::CaseIExcluded => "CASE_I_EXCLUDED",
            ReasonCode::CaseIINoSurvivor => "CASE_II_NO_SURVIVOR",
            ReasonCode::CaseIISurvivors => "CASE_II_SURVIVORS",
            ReasonCode::SpecialityTwoEmpty => "SPECIALITY_TWO_EMPTY",
            ReasonCode::CanonicalBpfEmpty => "CANONICAL_BPF_EMPTY",
            ReasonCode::CanonicalNotBpf => "CANONICAL_NOT_BPF",
        }
    }
}

impl Serialize for ReasonCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

/// What a certificate talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum InstanceDescription {
    /// Emptiness of the secant variety of the residual of (g, r1, d1) with
    /// parameters (e, f).
    #[serde(rename = "secant_emptiness")]
    Secant { g: i64, r1: i64, d1: i64, e: i64, f: i64 },
    /// Finiteness classification of the intersection behind a zero count,
    /// for a pencil l2 of degree r1 + 2.
    #[serde(rename = "incidence_zero_locus")]
    IncidenceZero {
        g: i64,
        r1: i64,
        d1: i64,
        d2: i64,
        l2_base_point_free: bool,
    },
}

/// Candidate pair of Y-side vanishing sequences at the connecting node: the
/// aspect of l1 (bound d1) and of the extension series (bound d1 + e).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequencePair {
    a1_y: VanishingSequence,
    at_y: VanishingSequence,
}

impl SequencePair {
    pub fn a1_y(&self) -> &VanishingSequence {
        &self.a1_y
    }

    pub fn at_y(&self) -> &VanishingSequence {
        &self.at_y
    }

    /// Z-side sequence forced for the l1 aspect.
    pub fn a1_z(&self) -> VanishingSequence {
        refined_complement(&self.a1_y, self.a1_y.degree_bound())
    }

    /// Z-side sequence forced for the extension aspect.
    pub fn at_z(&self) -> VanishingSequence {
        refined_complement(&self.at_y, self.at_y.degree_bound())
    }

    fn to_witness(&self) -> Witness {
        Witness {
            a1_y: self.a1_y.entries().to_vec(),
            at_y: self.at_y.entries().to_vec(),
            a1_z: self.a1_z().entries().to_vec(),
            at_z: self.at_z().entries().to_vec(),
        }
    }
}

/// Serializable view of a surviving candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a1_y: Vec<i64>,
    pub at_y: Vec<i64>,
    pub a1_z: Vec<i64>,
    pub at_z: Vec<i64>,
}

/// Result record of a certification or classification run.
///
/// Invariants: `EMPTY` certificates carry no witnesses and a zero survivor
/// count; an `INCONCLUSIVE` certificate produced by the search carries at
/// least one witness (gate-based inconclusive outcomes carry none).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub instance: InstanceDescription,
    pub status: Status,
    pub reasons: Vec<ReasonCode>,
    pub constraints_used: Vec<ConstraintId>,
    pub survivor_count: u64,
    pub witnesses: Vec<Witness>,
}

impl Certificate {
    fn gate(instance: InstanceDescription, status: Status, reasons: Vec<ReasonCode>) -> Self {
        Certificate {
            instance,
            status,
            reasons,
            constraints_used: Vec::new(),
            survivor_count: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificates serialize cleanly")
    }
}

/// Raw outcome of one constraint-system search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSurvey {
    /// Surviving pairs in lexicographic discovery order, truncated to
    /// [`WITNESS_CAP`].
    pub survivors: Vec<SequencePair>,
    /// Exact number of survivors, never truncated.
    pub survivor_count: u64,
    /// Number of candidates examined.
    pub candidates: u64,
}

/// Whether the collision case is excluded: concentrating all e points at one
/// smooth point of the spine forces a ramification weight of at least
/// d1 - r1 at that point on top of weight r1 from each of the g tails,
/// overflowing the genus-zero total exactly when g > d1 - r1.
pub fn case_i_excluded(g: i64, r1: i64, d1: i64) -> bool {
    g > d1 - r1
}

/// Interval of values `sum x_i` may take for the l1 aspect sequence
/// `(0, x_1, ..., x_{r1})` once both rank-r1 weight budgets hold:
///
/// ```text
/// lo = d1 - r1 (r1 + 1) / 2 - rho        hi = d1 - r1 (r1 + 1) / 2
/// ```
///
/// C-PLK-Y1 is equivalent to `sum x_i <= hi` and C-PLK-Z1 to
/// `sum x_i >= lo`; the tests pin this equivalence.
pub fn x_sum_bounds(g: i64, r1: i64, d1: i64) -> (BigInt, BigInt) {
    let triangle = BigInt::from(r1) * BigInt::from(r1 + 1) / BigInt::from(2);
    let hi = BigInt::from(d1) - &triangle;
    let lo = &hi - rho(g, r1, d1);
    (lo, hi)
}

struct Budgets {
    y1: BigInt,
    y2: BigInt,
    z1: BigInt,
    z2: BigInt,
}

impl Budgets {
    /// Y has arithmetic genus d1 (so d1 tails), Z has the remaining g - d1.
    fn for_instance(inst: &CertifierInstance) -> Budgets {
        let (g, r1, d1, e, f) = (inst.g, inst.r1, inst.d1, inst.e, inst.f);
        Budgets {
            y1: ramification_budget_at_p(r1, d1, d1),
            y2: ramification_budget_at_p(r1 + f, d1 + e, d1),
            z1: ramification_budget_at_p(r1, d1, g - d1),
            z2: ramification_budget_at_p(r1 + f, d1 + e, g - d1),
        }
    }
}

fn constraint_holds(
    id: ConstraintId,
    inst: &CertifierInstance,
    budgets: &Budgets,
    a1_y: &VanishingSequence,
    at_y: &VanishingSequence,
) -> bool {
    match id {
        ConstraintId::ZeroStart => a1_y.entries()[0] == 0 && at_y.entries()[0] == 0,
        ConstraintId::ValueSubset => is_subsequence_values(a1_y, at_y),
        ConstraintId::ExtraIsE => at_y.contains_value(inst.e),
        ConstraintId::PluckerY1 => BigInt::from(a1_y.weight()) <= budgets.y1,
        ConstraintId::PluckerY2 => BigInt::from(at_y.weight()) <= budgets.y2,
        ConstraintId::PluckerZ1 => {
            BigInt::from(refined_complement(a1_y, inst.d1).weight()) <= budgets.z1
        }
        ConstraintId::PluckerZ2 => {
            BigInt::from(refined_complement(at_y, inst.d1 + inst.e).weight()) <= budgets.z2
        }
        ConstraintId::ComplementSubset => is_subsequence_values(
            &refined_complement(a1_y, inst.d1),
            &refined_complement(at_y, inst.d1 + inst.e),
        ),
    }
}

/// Exhaustive scan of the candidate domain with the default cap.
pub fn enumerate_candidates(
    inst: &CertifierInstance,
    flags: &ConstraintFlags,
) -> Result<CandidateSurvey, CertifierError> {
    enumerate_candidates_with_cap(inst, flags, DEFAULT_SEARCH_CAP)
}

/// Exhaustive scan of the candidate domain.
///
/// The domain fixes `a1_y = (0, x_1 < ... < x_{r1})` with entries in
/// `[1, d1]` and `at_y` the union of those values with f further distinct
/// values in `[1, d1 + e]`, visited in lexicographic order. A pair survives
/// when every enabled constraint holds. Constraints C-ZERO and C-SUB hold on
/// the whole domain by construction; they are still evaluated honestly so
/// that flag sets behave uniformly.
///
/// The instance must satisfy `g >= d1`, since the Z-side budgets charge
/// g - d1 tails.
pub fn enumerate_candidates_with_cap(
    inst: &CertifierInstance,
    flags: &ConstraintFlags,
    cap: u64,
) -> Result<CandidateSurvey, CertifierError> {
    let (g, r1, d1, e, f) = (inst.g, inst.r1, inst.d1, inst.e, inst.f);
    if g < d1 {
        return Err(CertifierError::InvalidInstance(format!(
            "subcurve split needs g >= d1, got g = {g}, d1 = {d1}"
        )));
    }

    let total = gen_binomial(d1, r1) * gen_binomial(d1 + e - r1, f);
    if total > BigInt::from(cap) {
        return Err(CertifierError::SearchSpaceTooLarge {
            candidates: total,
            cap,
        });
    }

    let budgets = Budgets::for_instance(inst);
    let enabled: Vec<ConstraintId> = flags.iter().collect();

    let mut survivors: Vec<SequencePair> = Vec::new();
    let mut survivor_count: u64 = 0;
    let mut candidates: u64 = 0;

    for xs in (1..=d1).combinations(r1 as usize) {
        let mut a1_entries = Vec::with_capacity(r1 as usize + 1);
        a1_entries.push(0);
        a1_entries.extend_from_slice(&xs);
        let a1_y =
            VanishingSequence::new(a1_entries, d1).expect("domain sequences are valid");

        let pool: Vec<i64> = (1..=d1 + e)
            .filter(|v| xs.binary_search(v).is_err())
            .collect();
        for extras in pool.into_iter().combinations(f as usize) {
            candidates += 1;
            let mut at_entries = a1_y.entries().to_vec();
            at_entries.extend_from_slice(&extras);
            at_entries.sort_unstable();
            let at_y = VanishingSequence::new(at_entries, d1 + e)
                .expect("domain sequences are valid");

            if enabled
                .iter()
                .all(|&c| constraint_holds(c, inst, &budgets, &a1_y, &at_y))
            {
                survivor_count += 1;
                if survivors.len() < WITNESS_CAP {
                    survivors.push(SequencePair {
                        a1_y: a1_y.clone(),
                        at_y: at_y.clone(),
                    });
                }
            }
        }
    }

    Ok(CandidateSurvey {
        survivors,
        survivor_count,
        candidates,
    })
}

/// Certifies emptiness with the default constraint set for the instance's f
/// and the default search cap.
pub fn certify_empty(inst: &CertifierInstance) -> Result<Certificate, CertifierError> {
    certify_empty_with(inst, &ConstraintFlags::default_for(inst.f()), DEFAULT_SEARCH_CAP)
}

/// Certifies emptiness of the secant variety of the residual of
/// (g, r1, d1) with parameters (e, f), using the given constraint set and
/// search cap. The pipeline:
///
/// 1. dimension gate ([`emptiness_condition_holds`]), else NOT_APPLICABLE;
/// 2. negative Brill-Noether number for the extension series, then EMPTY
///    with no search at all;
/// 3. the pencil-trick rule (r1 = 1, rho = 1, f = 3, e = d1), then EMPTY;
/// 4. for f != 1 the split needs g > d1, else INCONCLUSIVE (for f = 1 the
///    gate already forces e <= g - d1 - rho, checked as an invariant);
/// 5. collision-case exclusion, unreachable after the gates but checked;
/// 6. exhaustive subcurve-case search: EMPTY exactly when nothing survives.
pub fn certify_empty_with(
    inst: &CertifierInstance,
    flags: &ConstraintFlags,
    cap: u64,
) -> Result<Certificate, CertifierError> {
    let desc = InstanceDescription::Secant {
        g: inst.g,
        r1: inst.r1,
        d1: inst.d1,
        e: inst.e,
        f: inst.f,
    };

    if !emptiness_condition_holds(inst.g, inst.r1, inst.d1, inst.e, inst.f)? {
        return Ok(Certificate::gate(
            desc,
            Status::NotApplicable,
            vec![ReasonCode::GateFailed],
        ));
    }

    if rho(inst.g, inst.r1 + inst.f, inst.d1 + inst.e).is_negative() {
        return Ok(Certificate::gate(
            desc,
            Status::Empty,
            vec![ReasonCode::ExtendedBnNegative],
        ));
    }

    if inst.r1 == 1 && inst.rho() == BigInt::from(1) && inst.f == 3 && inst.e == inst.d1 {
        return Ok(Certificate::gate(
            desc,
            Status::Empty,
            vec![ReasonCode::SpecialRuleBpfTrick],
        ));
    }

    if inst.f == 1 {
        // The gate gives e <= r2 + 1 - r1 - rho = g - d1 - rho, so the
        // subcurve split below is always available.
        if inst.e > inst.g - inst.d1 {
            return Err(CertifierError::Internal(format!(
                "gate accepted f = 1 instance with e > g - d1: {inst:?}"
            )));
        }
    } else if inst.g <= inst.d1 {
        return Ok(Certificate::gate(
            desc,
            Status::Inconclusive,
            vec![ReasonCode::GenusGate],
        ));
    }

    if !case_i_excluded(inst.g, inst.r1, inst.d1) {
        // Unreachable: f = 1 gives g >= d1 + e > d1 >= d1 - r1, and other f
        // passed the genus gate. Kept so a future pipeline change cannot
        // silently claim emptiness without this exclusion.
        return Ok(Certificate::gate(
            desc,
            Status::Inconclusive,
            vec![ReasonCode::CollisionCaseNotExcluded],
        ));
    }

    let survey = enumerate_candidates_with_cap(inst, flags, cap)?;
    let constraints_used: Vec<ConstraintId> = flags.iter().collect();
    if survey.survivor_count == 0 {
        Ok(Certificate {
            instance: desc,
            status: Status::Empty,
            reasons: vec![ReasonCode::CaseIExcluded, ReasonCode::CaseIINoSurvivor],
            constraints_used,
            survivor_count: 0,
            witnesses: Vec::new(),
        })
    } else {
        Ok(Certificate {
            instance: desc,
            status: Status::Inconclusive,
            reasons: vec![ReasonCode::CaseIISurvivors],
            constraints_used,
            survivor_count: survey.survivor_count,
            witnesses: survey.survivors.iter().map(SequencePair::to_witness).collect(),
        })
    }
}

/// Classifies the intersection behind a zero count: on a general curve of
/// genus g with rho(g, r1, d1) = 0 and speciality s1 in {1, 2}, the
/// incidence loci of l1 and of a pencil l2 of degree r1 + 2 at divisor
/// degree e = r1 + 1 have an empty intersection or a positive-dimensional
/// one, never a finite nonzero count.
///
/// - s1 = 2: l2 is the residual pencil and the intersection is empty.
/// - s1 = 1: l1 is the canonical series; empty when l2 is base point free,
///   positive dimensional (reported INCONCLUSIVE here) otherwise.
pub fn classify_incidence_zero(
    g: i64,
    r1: i64,
    d1: i64,
    l2_base_point_free: bool,
) -> Result<Certificate, CertifierError> {
    let l1 = SeriesParams::new(g, r1, d1)?;
    if l1.rho() != BigInt::from(0) {
        return Err(CertifierError::NotApplicable(format!(
            "classifier needs rho = 0, got rho = {}",
            l1.rho()
        )));
    }
    let s1 = l1.speciality();
    if s1 != 1 && s1 != 2 {
        return Err(CertifierError::NotApplicable(format!(
            "classifier needs speciality 1 or 2, got {s1}"
        )));
    }
    let desc = InstanceDescription::IncidenceZero {
        g,
        r1,
        d1,
        d2: r1 + 2,
        l2_base_point_free,
    };
    let certificate = if s1 == 2 {
        Certificate::gate(desc, Status::Empty, vec![ReasonCode::SpecialityTwoEmpty])
    } else if l2_base_point_free {
        Certificate::gate(desc, Status::Empty, vec![ReasonCode::CanonicalBpfEmpty])
    } else {
        Certificate::gate(desc, Status::Inconclusive, vec![ReasonCode::CanonicalNotBpf])
    };
    Ok(certificate)
}

/// Report contrasting a nonnegative expected dimension with a certified
/// emptiness, for the pencil family `l1 = g^1_{d1}` on genus `g = 2 d1 - 3`.
///
/// The residual l2 is a g^{d1-3}_{3 d1 - 8}. Its secant variety with
/// `(e, f) = (2 d1 - 8, d1 - 4)` has expected dimension zero, which for a
/// well-behaved intersection would predict finitely many points, hence at
/// least one. But any such divisor D would make `|l2 - D|` a pencil of
/// degree d1 whose members all lie on this secant variety of parameters
/// `(e, f) = (d1, 3)`, and that variety is certified empty. The expected
/// dimension is therefore not a reliable nonemptiness predictor here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub d1: i64,
    pub g: i64,
    pub secant_r2: i64,
    pub secant_d2: i64,
    pub e: i64,
    pub f: i64,
    #[serde(serialize_with = "serialize_bigint_as_number")]
    pub expected_dim: BigInt,
    pub certified_empty: bool,
    pub contradiction: bool,
    pub certificate: Certificate,
}

fn serialize_bigint_as_number<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let number: serde_json::Number = x
        .to_string()
        .parse()
        .expect("decimal integers parse as JSON numbers");
    number.serialize(s)
}

impl CounterexampleReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize cleanly")
    }
}

/// Builds the report for one d1.
///
/// # Errors
///
/// `InvalidInstance` when `d1 < 6`; the family is defined from there on.
pub fn remark_counterexample_report(d1: i64) -> Result<CounterexampleReport, CertifierError> {
    if d1 < 6 {
        return Err(CertifierError::InvalidInstance(format!(
            "the counterexample family starts at d1 = 6, got {d1}"
        )));
    }
    let g = 2 * d1 - 3;
    let expected_dim = expected_dim_secant(2 * d1 - 8, d1 - 4, d1 - 3);
    let inst = CertifierInstance::new(g, 1, d1, d1, 3)?;
    let certificate = certify_empty(&inst)?;
    let certified_empty = certificate.status == Status::Empty;
    let contradiction = certified_empty && !expected_dim.is_negative();
    Ok(CounterexampleReport {
        d1,
        g,
        secant_r2: d1 - 3,
        secant_d2: 3 * d1 - 8,
        e: 2 * d1 - 8,
        f: d1 - 4,
        expected_dim,
        certified_empty,
        contradiction,
        certificate,
    })
}

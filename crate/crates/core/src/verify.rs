//! Exact dimension-count checks for restrictions of Weyl modules to Levi
//! subalgebras, and sweeps that run them over grids of inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::admissibility::{
    classify_pair, render_tau, surjectivity_oracle, vector_partitions, Surjectivity,
};
use crate::characters::{
    branching_multiplicities, decompose, dim_irreducible, irreducible_character, restrict_character,
};
use crate::error::{Error, Result};
use crate::levi::{enumerate_simple_levis, LeviSubalgebra};
use crate::rootsystem::{Family, NonnegSpan, RootSystem};
use crate::weight::Weight;
use crate::weylmodule::{fundamental_weyl_character, local_weyl_character, local_weyl_dim};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One check outcome. `status` is `pass` exactly when `expected` and
/// `computed` agree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub g: String,
    pub levi: String,
    pub lambda: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    pub provenance: String,
}

impl VerificationReport {
    fn compare(
        check: CheckKind,
        g: &RootSystem,
        levi: String,
        lambda: String,
        expected: Value,
        computed: Value,
        provenance: &str,
    ) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            check: check.to_string(),
            g: g.cartan_type().to_string(),
            levi,
            lambda,
            expected,
            computed,
            status,
            provenance: provenance.to_string(),
        }
    }

    fn skipped(
        check: CheckKind,
        g: &RootSystem,
        levi: String,
        lambda: String,
        reason: &str,
    ) -> Self {
        Self {
            check: check.to_string(),
            g: g.cartan_type().to_string(),
            levi,
            lambda,
            expected: Value::Null,
            computed: Value::Null,
            status: Status::Skipped(reason.to_string()),
            provenance: String::new(),
        }
    }

    fn error(check: CheckKind, g: &RootSystem, levi: String, lambda: String, err: &Error) -> Self {
        Self {
            check: check.to_string(),
            g: g.cartan_type().to_string(),
            levi,
            lambda,
            expected: Value::Null,
            computed: json!({ "error": err.to_string() }),
            status: Status::Fail,
            provenance: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CheckKind {
    #[serde(rename = "thm2i")]
    Thm2i,
    #[serde(rename = "thm2ii")]
    Thm2ii,
    #[serde(rename = "support-independence")]
    SupportIndependence,
    #[serde(rename = "quotient-bound")]
    QuotientBound,
    #[serde(rename = "lemmas")]
    Lemmas,
    #[serde(rename = "surjectivity")]
    Surjectivity,
    #[serde(rename = "global-local")]
    GlobalLocal,
    #[serde(rename = "simple-restriction")]
    SimpleRestriction,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Thm2i,
        CheckKind::Thm2ii,
        CheckKind::SupportIndependence,
        CheckKind::QuotientBound,
        CheckKind::Lemmas,
        CheckKind::Surjectivity,
        CheckKind::GlobalLocal,
        CheckKind::SimpleRestriction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Thm2i => "thm2i",
            CheckKind::Thm2ii => "thm2ii",
            CheckKind::SupportIndependence => "support-independence",
            CheckKind::QuotientBound => "quotient-bound",
            CheckKind::Lemmas => "lemmas",
            CheckKind::Surjectivity => "surjectivity",
            CheckKind::GlobalLocal => "global-local",
            CheckKind::SimpleRestriction => "simple-restriction",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

fn render_lambda(g: &RootSystem, lambda: &Weight) -> String {
    g.render_fundamental(lambda)
}

fn require_simple_root_generated(a: &LeviSubalgebra) -> Result<()> {
    if !a.is_simple_root_generated() {
        return Err(Error::Precondition(format!(
            "Levi {a} is not generated by simple roots of {}",
            a.ambient().cartan_type()
        )));
    }
    Ok(())
}

fn require_same_ambient(rs: &RootSystem, a: &LeviSubalgebra) -> Result<()> {
    if rs != a.ambient() {
        return Err(Error::AmbientMismatch {
            left: rs.cartan_type().to_string(),
            right: a.ambient().cartan_type().to_string(),
        });
    }
    Ok(())
}

/// Total dimension of the weight spaces of W(λ) whose weights lie in
/// λ − Q_a⁺. For a Levi generated by simple roots this is the dimension of
/// the submodule generated by a highest weight vector under the Levi's
/// current algebra.
pub fn highest_component_dim(rs: &RootSystem, a: &LeviSubalgebra, lambda: &Weight) -> Result<u64> {
    require_same_ambient(rs, a)?;
    require_simple_root_generated(a)?;
    let span = NonnegSpan::new(rs, a.simple_roots())?;
    let character = local_weyl_character(rs, lambda)?;
    Ok(character
        .iter()
        .filter(|(nu, _)| span.contains(&rs.sub(lambda, nu)))
        .map(|(_, m)| m)
        .sum())
}

/// Highest-weight-component count against the Levi local Weyl dimension.
pub fn check_thm2i(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
) -> Result<VerificationReport> {
    let count = highest_component_dim(rs, a, lambda)?;
    let expected = local_weyl_dim(a.system(), &a.project(lambda)?)?;
    Ok(VerificationReport::compare(
        CheckKind::Thm2i,
        rs,
        a.to_string(),
        render_lambda(rs, lambda),
        json!(expected),
        json!(count),
        "dim W^a(π(λ)) from Weyl dimension formula values along fundamental chains",
    ))
}

/// The dimension check together with the variable-count bookkeeping
/// Σ n_j ≤ Σ m_i, where π(λ) = Σ n_j τ_j and λ = Σ m_i ω_i.
pub fn check_thm2ii(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
) -> Result<VerificationReport> {
    let verdict = classify_pair(a, lambda)?;
    if !verdict.globally {
        return Err(Error::Precondition(format!(
            "pair ({a}, {}) is not globally admissible",
            render_lambda(rs, lambda)
        )));
    }
    let count = highest_component_dim(rs, a, lambda)?;
    let dim = local_weyl_dim(a.system(), &a.project(lambda)?)?;
    let m: i64 = rs.fundamental_coords(lambda)?.iter().sum();
    let n: i64 = a.project_coords(lambda)?.iter().sum();
    let expected = json!({ "dimension": dim, "variables_within_bound": true });
    let computed = json!({ "dimension": count, "variables_within_bound": n <= m });
    Ok(VerificationReport::compare(
        CheckKind::Thm2ii,
        rs,
        a.to_string(),
        render_lambda(rs, lambda),
        expected,
        computed,
        "Levi local Weyl dimension; polynomial variable counts Σ n_j and Σ m_i",
    ))
}

/// Joint count on λ against the product of counts over a decomposition of
/// λ into dominant parts.
pub fn check_support_independence(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
    parts: &[Weight],
) -> Result<VerificationReport> {
    let mut total = rs.zero();
    for p in parts {
        rs.require_dominant(p)?;
        total = rs.add(&total, p);
    }
    if total != *lambda {
        return Err(Error::Precondition(format!(
            "parts do not sum to {}",
            render_lambda(rs, lambda)
        )));
    }
    let joint = highest_component_dim(rs, a, lambda)?;
    let mut product: u64 = 1;
    for p in parts {
        product = product
            .checked_mul(highest_component_dim(rs, a, p)?)
            .ok_or(Error::Overflow("support independence product"))?;
    }
    let label = format!(
        "{} = {}",
        render_lambda(rs, lambda),
        parts
            .iter()
            .map(|p| format!("({})", render_lambda(rs, p)))
            .collect::<Vec<_>>()
            .join(" + ")
    );
    Ok(VerificationReport::compare(
        CheckKind::SupportIndependence,
        rs,
        a.to_string(),
        label,
        json!(product),
        json!(joint),
        "product of per-part highest-weight-component counts",
    ))
}

/// The highest-weight-component count never exceeds dim W^a(π(λ)).
pub fn check_quotient_bound(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
) -> Result<VerificationReport> {
    let count = highest_component_dim(rs, a, lambda)?;
    let bound = local_weyl_dim(a.system(), &a.project(lambda)?)?;
    Ok(VerificationReport::compare(
        CheckKind::QuotientBound,
        rs,
        a.to_string(),
        render_lambda(rs, lambda),
        json!({ "count_within_bound": true }),
        json!({ "count_within_bound": count <= bound }),
        "the component is a quotient of W^a(π(λ))",
    ))
}

/// c_λ^{π(λ)} ≥ 1, and the weight spaces of V(λ) in λ − Q_a⁺ have room for
/// the copy of V^a(π(λ)) generated by the highest weight vector. When Π_a ⊆ Π
/// those weight spaces are exactly that copy, so the dimensions agree.
pub fn check_simple_restriction(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
) -> Result<VerificationReport> {
    let branching = branching_multiplicities(rs, lambda, a)?;
    let top = a.project(lambda)?;
    let present = branching.get(&top).copied().unwrap_or(0) >= 1;
    let generated = dim_irreducible(a.system(), &top)?;
    let span = NonnegSpan::new(rs, a.simple_roots())?;
    let layer: u64 = irreducible_character(rs, lambda)?
        .iter()
        .filter(|(mu, _)| span.contains(&rs.sub(lambda, mu)))
        .map(|(_, m)| m)
        .sum();
    let (expected, computed) = if a.is_simple_root_generated() {
        (
            json!({ "present": true, "layer_dim": generated }),
            json!({ "present": present, "layer_dim": layer }),
        )
    } else {
        (
            json!({ "present": true, "layer_holds_generated": true }),
            json!({ "present": present, "layer_holds_generated": layer >= generated }),
        )
    };
    Ok(VerificationReport::compare(
        CheckKind::SimpleRestriction,
        rs,
        a.to_string(),
        render_lambda(rs, lambda),
        expected,
        computed,
        "highest weight vector of V(λ) generates a copy of V^a(π(λ))",
    ))
}

/// Lifting oracle against the globally-admissible verdict.
pub fn check_surjectivity(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
    bound: u64,
) -> Result<VerificationReport> {
    let verdict = classify_pair(a, lambda)?;
    let label = render_lambda(rs, lambda);
    match surjectivity_oracle(a, lambda, bound)? {
        Surjectivity::Inconclusive { bound } => Ok(VerificationReport::skipped(
            CheckKind::Surjectivity,
            rs,
            a.to_string(),
            label,
            &format!("inconclusive: bound {bound}"),
        )),
        s => Ok(VerificationReport::compare(
            CheckKind::Surjectivity,
            rs,
            a.to_string(),
            label,
            json!(verdict.globally),
            json!(s == Surjectivity::Surjective),
            "globally admissible verdict from projected fundamental weights",
        )),
    }
}

/// Globally admissible implies locally admissible.
pub fn check_global_local(
    rs: &RootSystem,
    a: &LeviSubalgebra,
    lambda: &Weight,
) -> Result<VerificationReport> {
    let v = classify_pair(a, lambda)?;
    Ok(VerificationReport::compare(
        CheckKind::GlobalLocal,
        rs,
        a.to_string(),
        render_lambda(rs, lambda),
        json!(true),
        json!(!v.globally || v.locally),
        "admissibility classifier",
    ))
}

/// Which restriction identity governs π(ω_k) on a simple Levi.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaInstance {
    pub lemma: u8,
    pub k: usize,
    /// Predicted constituents, as fundamental coordinates of the Levi.
    pub constituents: Vec<Vec<i64>>,
}

fn tau(s: usize, idx: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; s];
    for &(j, c) in idx {
        if (1..=s).contains(&j) {
            v[j - 1] += c;
        }
    }
    v
}

fn descending_chain(s: usize, start: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut l = start;
    while l >= 0 {
        out.push(tau(s, &[(l as usize, 1)]));
        l -= 2;
    }
    out
}

/// Identifies the restriction identity for (a, ω_k), if g has type B or D
/// and π(ω_k) falls in one of the non-simple patterns. `a` must be simple.
pub fn lemma_instance(a: &LeviSubalgebra, k: usize) -> Result<Option<LemmaInstance>> {
    let g = a.ambient();
    if !a.is_simple() {
        return Err(Error::Precondition(format!("Levi {a} is not simple")));
    }
    if !matches!(g.family(), Some(Family::B | Family::D)) {
        return Ok(None);
    }
    let comp = &a.components()[0];
    let s = comp.rank;
    let p = a.project_coords(&g.fundamental_weights()[k - 1])?;
    let nonzero: Vec<(usize, i64)> = p
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j + 1, c))
        .collect();
    let (lemma, constituents) = match (comp.family, nonzero.as_slice()) {
        (Family::B, &[(l, 1)]) if l < s => (1, descending_chain(s, l as i64)),
        (Family::D, &[(a1, 1), (a2, 1)]) if a1 == s - 1 && a2 == s => {
            let mut c = vec![tau(s, &[(s - 1, 1), (s, 1)])];
            c.extend(descending_chain(s, s as i64 - 3));
            (2, c)
        }
        (Family::D, &[(t, 2)]) if t + 1 >= s => {
            let mut c = vec![tau(s, &[(t, 2)])];
            c.extend(descending_chain(s, s as i64 - 2));
            (3, c)
        }
        (Family::D, &[(l, 1)]) if l + 2 <= s => (4, descending_chain(s, l as i64)),
        (Family::A, &[(pp, 1), (qq, 1)]) => (5, a_pairs(s, pp, qq)),
        (Family::A, &[(pp, 2)]) => (5, a_pairs(s, pp, pp)),
        _ => return Ok(None),
    };
    Ok(Some(LemmaInstance {
        lemma,
        k,
        constituents,
    }))
}

fn a_pairs(s: usize, p: usize, q: usize) -> Vec<Vec<i64>> {
    let top = p.min(s + 1 - q);
    (0..=top)
        .map(|r| tau(s, &[(p - r, 1), (q + r, 1)]))
        .collect()
}

/// Compares a predicted restriction identity with the decomposition of the
/// Levi local Weyl character, and checks each predicted constituent against
/// the branching of the fundamental Weyl module of g.
pub fn check_lemma(a: &LeviSubalgebra, inst: &LemmaInstance) -> Result<VerificationReport> {
    let g = a.ambient();
    let sys = a.system();
    let pi = a.project(&g.fundamental_weights()[inst.k - 1])?;
    let local = local_weyl_character(sys, &pi)?;
    let mut computed: Vec<Vec<i64>> = decompose(sys, &local)?
        .into_iter()
        .flat_map(|(w, m)| std::iter::repeat_n(sys.fundamental_coords(&w).unwrap(), m as usize))
        .collect();
    computed.sort();
    let mut expected = inst.constituents.clone();
    expected.sort();

    let restricted = restrict_character(&fundamental_weyl_character(g, inst.k)?, a)?;
    let branching: BTreeMap<Vec<i64>, u64> = decompose(sys, &restricted)?
        .into_iter()
        .map(|(w, m)| (sys.fundamental_coords(&w).unwrap(), m))
        .collect();
    let mut needed: BTreeMap<&Vec<i64>, u64> = BTreeMap::new();
    for c in &inst.constituents {
        *needed.entry(c).or_insert(0) += 1;
    }
    let branching_ok = needed
        .iter()
        .all(|(c, &n)| branching.get(*c).copied().unwrap_or(0) >= n);

    let render = |v: &[Vec<i64>]| v.iter().map(|c| render_tau(c)).collect::<Vec<_>>();
    Ok(VerificationReport::compare(
        CheckKind::Lemmas,
        g,
        a.to_string(),
        format!(
            "lem{} k={} π(ω_k)={}",
            inst.lemma,
            inst.k,
            render_tau(&a.project_coords(&g.fundamental_weights()[inst.k - 1])?)
        ),
        json!({ "constituents": render(&expected), "in_branching": true }),
        json!({ "constituents": render(&computed), "in_branching": branching_ok }),
        "explicit constituent list of the restriction identity",
    ))
}

/// All applicable restriction identities over the enumerated simple Levis
/// of `g`.
pub fn lemma_instances(g: &RootSystem) -> Result<Vec<(Arc<LeviSubalgebra>, LemmaInstance)>> {
    let mut out = Vec::new();
    for a in enumerate_simple_levis(g)? {
        let a = Arc::new(a);
        for k in 1..=g.rank() {
            if let Some(inst) = lemma_instance(&a, k)? {
                out.push((Arc::clone(&a), inst));
            }
        }
    }
    Ok(out)
}

/// Grid of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub systems: Vec<(Family, usize)>,
    pub checks: Vec<CheckKind>,
    /// Largest Σ m_i for the dimension-count checks.
    pub max_weight_sum: i64,
    /// Largest Σ m_i for the admissibility and branching checks.
    pub restriction_weight_sum: i64,
    pub surjectivity_bound: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            systems: Vec::new(),
            checks: CheckKind::ALL.to_vec(),
            max_weight_sum: 3,
            restriction_weight_sum: 2,
            surjectivity_bound: 8,
        }
    }
}

/// All dominant weights with 1 ≤ Σ m_i ≤ `max_sum`, ordered by Σ m_i then
/// lexicographically descending coordinates.
pub fn dominant_weights_up_to(rs: &RootSystem, max_sum: i64) -> Vec<Weight> {
    let n = rs.rank();
    let mut coords = Vec::new();
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in (0..=left).rev() {
            cur.push(c);
            rec(n, left - c, cur, out);
            cur.pop();
        }
    }
    rec(n, max_sum, &mut Vec::new(), &mut coords);
    coords.retain(|c| c.iter().sum::<i64>() > 0);
    coords.sort_by_key(|c| c.iter().sum::<i64>());
    coords
        .into_iter()
        .map(|c| rs.weight_from_fundamental(&c).expect("rank matches"))
        .collect()
}

/// Every Levi generated by a nonempty set of simple roots.
pub fn simple_root_generated_levis(rs: &RootSystem) -> Result<Vec<LeviSubalgebra>> {
    let n = rs.rank();
    (1u32..1 << n)
        .map(|mask| {
            let nodes: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            LeviSubalgebra::from_simple_indices(rs, &nodes)
        })
        .collect()
}

enum Task {
    Pair(CheckKind, Arc<LeviSubalgebra>, Weight),
    Partition(Arc<LeviSubalgebra>, Weight, Vec<Weight>),
    Lemma(Arc<LeviSubalgebra>, LemmaInstance),
    Conjectural(CheckKind, Arc<LeviSubalgebra>),
}

fn run_task(task: &Task, bound: u64) -> VerificationReport {
    let (kind, a, label) = match task {
        Task::Pair(k, a, l) => (*k, a, render_lambda(a.ambient(), l)),
        Task::Partition(a, l, _) => (
            CheckKind::SupportIndependence,
            a,
            render_lambda(a.ambient(), l),
        ),
        Task::Lemma(a, inst) => (
            CheckKind::Lemmas,
            a,
            format!("lem{} k={}", inst.lemma, inst.k),
        ),
        Task::Conjectural(k, a) => {
            return VerificationReport::skipped(
                *k,
                a.ambient(),
                a.to_string(),
                String::new(),
                "conjectural",
            )
        }
    };
    let g = a.ambient();
    let result = match task {
        Task::Pair(CheckKind::Thm2i, a, l) => check_thm2i(g, a, l),
        Task::Pair(CheckKind::Thm2ii, a, l) => check_thm2ii(g, a, l),
        Task::Pair(CheckKind::QuotientBound, a, l) => check_quotient_bound(g, a, l),
        Task::Pair(CheckKind::Surjectivity, a, l) => check_surjectivity(g, a, l, bound),
        Task::Pair(CheckKind::GlobalLocal, a, l) => check_global_local(g, a, l),
        Task::Pair(CheckKind::SimpleRestriction, a, l) => check_simple_restriction(g, a, l),
        Task::Pair(other, _, _) => Err(Error::Precondition(format!("{other} is not a pair check"))),
        Task::Partition(a, l, parts) => check_support_independence(g, a, l, parts),
        Task::Lemma(a, inst) => check_lemma(a, inst),
        Task::Conjectural(..) => unreachable!(),
    };
    result.unwrap_or_else(|e| VerificationReport::error(kind, g, a.to_string(), label, &e))
}

fn weight_partitions(g: &RootSystem, lambda: &Weight) -> Result<Vec<Vec<Weight>>> {
    let m = g.fundamental_coords(lambda)?;
    vector_partitions(&m)
        .into_iter()
        .map(|parts| parts.iter().map(|p| g.weight_from_fundamental(p)).collect())
        .collect()
}

fn tasks_for(g: &RootSystem, config: &SweepConfig) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    let dims: Vec<CheckKind> = config
        .checks
        .iter()
        .copied()
        .filter(|k| {
            matches!(
                k,
                CheckKind::Thm2i
                    | CheckKind::Thm2ii
                    | CheckKind::SupportIndependence
                    | CheckKind::QuotientBound
            )
        })
        .collect();
    if !dims.is_empty() {
        let levis: Vec<Arc<LeviSubalgebra>> = simple_root_generated_levis(g)?
            .into_iter()
            .map(Arc::new)
            .collect();
        let weights = dominant_weights_up_to(g, config.max_weight_sum);
        for &kind in &dims {
            for a in &levis {
                for l in &weights {
                    if kind == CheckKind::SupportIndependence {
                        for parts in weight_partitions(g, l)? {
                            tasks.push(Task::Partition(Arc::clone(a), l.clone(), parts));
                        }
                    } else {
                        tasks.push(Task::Pair(kind, Arc::clone(a), l.clone()));
                    }
                }
            }
        }
    }
    let needs_enumeration = config.checks.iter().any(|k| {
        matches!(
            k,
            CheckKind::Thm2i
                | CheckKind::Thm2ii
                | CheckKind::Surjectivity
                | CheckKind::GlobalLocal
                | CheckKind::SimpleRestriction
        )
    });
    if needs_enumeration {
        let enumerated: Vec<Arc<LeviSubalgebra>> = enumerate_simple_levis(g)?
            .into_iter()
            .map(Arc::new)
            .collect();
        let weights = dominant_weights_up_to(g, config.restriction_weight_sum);
        for &kind in &config.checks {
            match kind {
                CheckKind::Thm2i | CheckKind::Thm2ii => {
                    for a in enumerated.iter().filter(|a| !a.is_simple_root_generated()) {
                        tasks.push(Task::Conjectural(kind, Arc::clone(a)));
                    }
                }
                CheckKind::Surjectivity | CheckKind::GlobalLocal | CheckKind::SimpleRestriction => {
                    for a in &enumerated {
                        for l in &weights {
                            tasks.push(Task::Pair(kind, Arc::clone(a), l.clone()));
                        }
                    }
                }
                _ => {}
            }
        }
    }
    if config.checks.contains(&CheckKind::Lemmas) {
        for (a, inst) in lemma_instances(g)? {
            if a.rank() <= 4 {
                tasks.push(Task::Lemma(a, inst));
            }
        }
    }
    Ok(tasks)
}

/// Runs the configured checks. Report order depends only on the
/// configuration; individual failures are recorded, never raised.
pub fn sweep(config: &SweepConfig) -> Result<Vec<VerificationReport>> {
    let mut tasks = Vec::new();
    for &(family, rank) in &config.systems {
        let g = RootSystem::new(family, rank)?;
        tasks.extend(tasks_for(&g, config)?);
    }
    Ok(tasks
        .par_iter()
        .map(|t| run_task(t, config.surjectivity_bound))
        .collect())
}

/// Pass, fail and skip counts of a list of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped(_) => s.skipped += 1,
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levi::levi_from_generators;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn highest_component_examples() {
        let b3 = rs(Family::B, 3);
        let a = LeviSubalgebra::from_simple_indices(&b3, &[3]).unwrap();
        let w3 = b3.fundamental_weights()[2].clone();
        assert_eq!(highest_component_dim(&b3, &a, &w3).unwrap(), 2);
        assert_eq!(highest_component_dim(&b3, &a, &b3.zero()).unwrap(), 1);
        let full = LeviSubalgebra::from_simple_indices(&b3, &[1, 2, 3]).unwrap();
        let w2 = b3.fundamental_weights()[1].clone();
        assert_eq!(highest_component_dim(&b3, &full, &w2).unwrap(), 22);
        let gens: Vec<Weight> = ["e1-e2", "e2+e3"]
            .iter()
            .map(|t| b3.parse_eps(t).unwrap())
            .collect();
        let off = levi_from_generators(&b3, &gens).unwrap();
        assert!(matches!(
            highest_component_dim(&b3, &off, &w2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn thm2i_examples() {
        let a2 = rs(Family::A, 2);
        let a = LeviSubalgebra::from_simple_indices(&a2, &[1]).unwrap();
        let r = check_thm2i(&a2, &a, &a2.fundamental_weights()[0]).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.computed, json!(2));
        let b3 = rs(Family::B, 3);
        let b2 = LeviSubalgebra::from_simple_indices(&b3, &[2, 3]).unwrap();
        let r = check_thm2i(&b3, &b2, &b3.fundamental_weights()[1]).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.expected, json!(5));
        let r = check_thm2i(&b3, &b2, &b3.zero()).unwrap();
        assert_eq!(r.computed, json!(1));
    }

    #[test]
    fn lemma_patterns() {
        let b3 = rs(Family::B, 3);
        let gens: Vec<Weight> = ["e1-e2", "e2-e3", "e2+e3"]
            .iter()
            .map(|t| b3.parse_eps(t).unwrap())
            .collect();
        let d3 = levi_from_generators(&b3, &gens).unwrap();
        let inst = lemma_instance(&d3, 2).unwrap().unwrap();
        assert_eq!(inst.lemma, 2);
        assert_eq!(inst.constituents, vec![vec![0, 1, 1], vec![0, 0, 0]]);
        assert!(check_lemma(&d3, &inst).unwrap().passed());
    }

    #[test]
    fn empty_sweep() {
        assert!(sweep(&SweepConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn status_strings() {
        assert_eq!(
            Status::Skipped("conjectural".into()).to_string(),
            "skipped(conjectural)"
        );
        assert_eq!(serde_json::to_value(Status::Pass).unwrap(), json!("pass"));
    }
}

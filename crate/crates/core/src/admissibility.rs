//! Admissible pairs (a, λ) and the lifting test for projected current
//! weights.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::levi::LeviSubalgebra;
use crate::rootsystem::Family;
use crate::weight::Weight;

/// Why a pair (a, ω_k) fails to be globally admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReasonCase {
    /// π(ω_k) is neither 0 nor a fundamental weight; still locally admissible.
    #[serde(rename = "non-fundamental-projection")]
    NonFundamental,
    /// g of type B, a B_s component (s > 1) and π(ω_k) = 2τ_s.
    #[serde(rename = "type-B-doubled-short-node")]
    BDoubledShort,
    /// g of type C, a type-A component and π(ω_k) not 0 or fundamental.
    #[serde(rename = "type-C-A-component")]
    CTypeA,
}

impl ReasonCase {
    pub fn is_locally_admissible(self) -> bool {
        self == ReasonCase::NonFundamental
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reason {
    /// 0-based index into `LeviSubalgebra::components`.
    pub component: usize,
    /// 1-based fundamental index of g.
    pub k: usize,
    pub case: ReasonCase,
    /// π(ω_k) on this component, e.g. `2τ2`.
    pub projection: String,
}

/// Verdict for a pair (a, λ). `globally` implies `locally`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityVerdict {
    pub globally: bool,
    pub locally: bool,
    pub reasons: Vec<Reason>,
}

/// Renders fundamental coordinates as a sum of τ's, e.g. `τ2+τ3`.
pub fn render_tau(coords: &[i64]) -> String {
    let terms: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| match c {
            1 => format!("τ{}", j + 1),
            _ => format!("{c}τ{}", j + 1),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn component_slice(a: &LeviSubalgebra, comp: usize, full: &[i64]) -> Vec<i64> {
    let start: usize = a.components()[..comp].iter().map(|c| c.rank).sum();
    full[start..start + a.components()[comp].rank].to_vec()
}

/// Classifies (a_comp, ω_k) for one simple component of `a` and a 1-based
/// node `k` of g. Returns `None` when the pair is globally admissible.
pub fn classify_fundamental_pair(
    a: &LeviSubalgebra,
    component: usize,
    k: usize,
) -> Result<Option<Reason>> {
    let g = a.ambient();
    if k == 0 || k > g.rank() {
        return Err(Error::IndexOutOfRange {
            index: k,
            rank: g.rank(),
        });
    }
    let Some(comp) = a.components().get(component) else {
        return Err(Error::IndexOutOfRange {
            index: component + 1,
            rank: a.components().len(),
        });
    };
    let full = a.project_coords(&g.fundamental_weights()[k - 1])?;
    let pi = component_slice(a, component, &full);
    let total: i64 = pi.iter().sum();
    if total == 0 || (total == 1 && pi.iter().all(|&c| c == 0 || c == 1)) {
        return Ok(None);
    }
    let s = comp.rank;
    let doubled_last = pi[..s - 1].iter().all(|&c| c == 0) && pi[s - 1] == 2;
    let case = match (g.family(), comp.family) {
        (Some(Family::B), Family::B) if s > 1 && doubled_last => ReasonCase::BDoubledShort,
        (Some(Family::C), Family::A) => ReasonCase::CTypeA,
        _ => ReasonCase::NonFundamental,
    };
    Ok(Some(Reason {
        component,
        k,
        case,
        projection: render_tau(&pi),
    }))
}

/// Conjunction of the fundamental verdicts over all components of `a` and
/// all ω_k occurring in λ.
pub fn classify_pair(a: &LeviSubalgebra, lambda: &Weight) -> Result<AdmissibilityVerdict> {
    let g = a.ambient();
    g.require_dominant(lambda)?;
    let coords = g.fundamental_coords(lambda)?;
    let mut reasons = Vec::new();
    for (i, &m) in coords.iter().enumerate() {
        if m == 0 {
            continue;
        }
        for comp in 0..a.components().len() {
            if let Some(r) = classify_fundamental_pair(a, comp, i + 1)? {
                reasons.push(r);
            }
        }
    }
    reasons.sort_by_key(|r| (r.component, r.k));
    Ok(AdmissibilityVerdict {
        globally: reasons.is_empty(),
        locally: reasons.iter().all(|r| r.case.is_locally_admissible()),
        reasons,
    })
}

/// Outcome of the lifting search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surjectivity {
    Surjective,
    NotSurjective,
    /// π(λ) has more than `bound` fundamental summands; nothing was decided.
    Inconclusive {
        bound: u64,
    },
}

impl fmt::Display for Surjectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surjectivity::Surjective => f.write_str("surjective"),
            Surjectivity::NotSurjective => f.write_str("not surjective"),
            Surjectivity::Inconclusive { bound } => write!(f, "inconclusive: bound {bound}"),
        }
    }
}

impl Serialize for Surjectivity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All multisets of nonzero nonnegative vectors summing to `v`, each listed
/// with parts in non-increasing lexicographic order.
pub fn vector_partitions(v: &[i64]) -> Vec<Vec<Vec<i64>>> {
    fn parts_below(rem: &[i64], cap: Option<&[i64]>) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; rem.len()];
        loop {
            if cur.iter().any(|&c| c != 0) && cap.is_none_or(|c| cur.as_slice() <= c) {
                out.push(cur.clone());
            }
            let mut i = rem.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < rem[i] {
                    cur[i] += 1;
                    cur[i + 1..].iter_mut().for_each(|c| *c = 0);
                    break;
                }
            }
        }
    }
    fn rec(
        rem: &[i64],
        cap: Option<&[i64]>,
        acc: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if rem.iter().all(|&c| c == 0) {
            out.push(acc.clone());
            return;
        }
        for p in parts_below(rem, cap) {
            let next: Vec<i64> = rem.iter().zip(&p).map(|(r, x)| r - x).collect();
            acc.push(p.clone());
            rec(&next, Some(&p), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(v, None, &mut Vec::new(), &mut out);
    out
}

/// Distributes `m_i` copies of each π(ω_i) over the parts so that part ℓ
/// sums to `targets[ℓ]`.
fn lift_exists(images: &[(Vec<i64>, i64)], targets: &[Vec<i64>]) -> bool {
    fn place(
        images: &[(Vec<i64>, i64)],
        idx: usize,
        left: i64,
        part: usize,
        sums: &mut Vec<Vec<i64>>,
        targets: &[Vec<i64>],
    ) -> bool {
        if idx == images.len() {
            return sums == targets;
        }
        let (img, _) = &images[idx];
        if part + 1 == targets.len() {
            // The last part takes whatever is left of this fundamental.
            let ok = sums[part]
                .iter()
                .zip(img)
                .zip(&targets[part])
                .all(|((s, x), t)| s + left * x <= *t);
            if !ok {
                return false;
            }
            for (s, x) in sums[part].iter_mut().zip(img) {
                *s += left * x;
            }
            let next_m = images.get(idx + 1).map(|(_, m)| *m).unwrap_or(0);
            let found = place(images, idx + 1, next_m, 0, sums, targets);
            for (s, x) in sums[part].iter_mut().zip(img) {
                *s -= left * x;
            }
            return found;
        }
        for c in (0..=left).rev() {
            let ok = sums[part]
                .iter()
                .zip(img)
                .zip(&targets[part])
                .all(|((s, x), t)| s + c * x <= *t);
            if !ok {
                continue;
            }
            for (s, x) in sums[part].iter_mut().zip(img) {
                *s += c * x;
            }
            let found = place(images, idx, left - c, part + 1, sums, targets);
            for (s, x) in sums[part].iter_mut().zip(img) {
                *s -= c * x;
            }
            if found {
                return true;
            }
        }
        false
    }
    if targets.is_empty() {
        return images.iter().all(|(img, _)| img.iter().all(|&x| x == 0));
    }
    let mut sums = vec![vec![0i64; targets[0].len()]; targets.len()];
    let first = images.first().map(|(_, m)| *m).unwrap_or(0);
    place(images, 0, first, 0, &mut sums, targets)
}

/// Decides whether every decomposition π(λ) = ν_1 + … + ν_k into nonzero
/// dominant a-weights lifts to λ = μ_1 + … + μ_k with μ_ℓ dominant and
/// π(μ_ℓ) = ν_ℓ. Gives up once π(λ) has more than `bound` fundamental
/// summands.
pub fn surjectivity_oracle(
    a: &LeviSubalgebra,
    lambda: &Weight,
    bound: u64,
) -> Result<Surjectivity> {
    let g = a.ambient();
    g.require_dominant(lambda)?;
    let m = g.fundamental_coords(lambda)?;
    let target = a.project_coords(lambda)?;
    let size: i64 = target.iter().sum();
    if size as u64 > bound {
        return Ok(Surjectivity::Inconclusive { bound });
    }
    if size == 0 {
        return Ok(Surjectivity::Surjective);
    }
    let mut images = Vec::new();
    for (i, &mi) in m.iter().enumerate() {
        if mi > 0 {
            images.push((a.project_coords(&g.fundamental_weights()[i])?, mi));
        }
    }
    for parts in vector_partitions(&target) {
        if !lift_exists(&images, &parts) {
            return Ok(Surjectivity::NotSurjective);
        }
    }
    Ok(Surjectivity::Surjective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levi::levi_from_generators;
    use crate::rootsystem::RootSystem;

    fn b3() -> RootSystem {
        RootSystem::new(Family::B, 3).unwrap()
    }

    fn levi(r: &RootSystem, text: &str) -> LeviSubalgebra {
        let gens: Vec<Weight> = text.split(',').map(|t| r.parse_eps(t).unwrap()).collect();
        levi_from_generators(r, &gens).unwrap()
    }

    #[test]
    fn partitions_of_small_vectors() {
        assert_eq!(vector_partitions(&[2]).len(), 2);
        assert_eq!(vector_partitions(&[1, 1]).len(), 2);
        assert_eq!(vector_partitions(&[2, 1]).len(), 4);
        assert_eq!(vector_partitions(&[0, 0]), vec![Vec::<Vec<i64>>::new()]);
    }

    #[test]
    fn b2_in_b3() {
        let g = b3();
        let a = levi(&g, "e1-e2,e2");
        let r = classify_fundamental_pair(&a, 0, 2).unwrap().unwrap();
        assert_eq!(r.case, ReasonCase::BDoubledShort);
        assert_eq!(r.projection, "2τ2");
        let lam = g.weight_from_fundamental(&[1, 1, 0]).unwrap();
        let v = classify_pair(&a, &lam).unwrap();
        assert!(!v.globally && !v.locally);
        let w2 = g.fundamental_weights()[1].clone();
        assert_eq!(
            surjectivity_oracle(&a, &w2, 8).unwrap(),
            Surjectivity::NotSurjective
        );
        assert_eq!(
            surjectivity_oracle(&a, &w2, 1).unwrap(),
            Surjectivity::Inconclusive { bound: 1 }
        );
    }

    #[test]
    fn d3_in_b3() {
        let g = b3();
        let a = levi(&g, "e1-e2,e2-e3,e2+e3");
        let v = classify_pair(&a, &g.fundamental_weights()[1]).unwrap();
        assert!(!v.globally && v.locally);
        assert_eq!(v.reasons[0].projection, "τ2+τ3");
    }

    #[test]
    fn simple_root_generated_is_globally_admissible() {
        let g = b3();
        let a = LeviSubalgebra::from_simple_indices(&g, &[2, 3]).unwrap();
        for k in 1..=3 {
            assert_eq!(classify_fundamental_pair(&a, 0, k).unwrap(), None);
        }
        let v = classify_pair(&a, &g.zero()).unwrap();
        assert!(v.globally && v.locally && v.reasons.is_empty());
        let w1 = g.fundamental_weights()[0].clone();
        assert_eq!(
            surjectivity_oracle(&a, &w1, 8).unwrap(),
            Surjectivity::Surjective
        );
    }
}

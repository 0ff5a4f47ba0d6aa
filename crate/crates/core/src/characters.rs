//! Characters of finite-dimensional modules as exact weight multisets.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::levi::LeviSubalgebra;
use crate::rootsystem::{CartanType, RootSystem};
use crate::weight::Weight;

/// A finite map from weights to positive multiplicities over a fixed
/// (semi)simple type. Zero multiplicities are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    cartan_type: CartanType,
    mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn empty(cartan_type: CartanType) -> Self {
        Self {
            cartan_type,
            mults: BTreeMap::new(),
        }
    }

    /// The character of the trivial module.
    pub fn trivial(rs: &RootSystem) -> Self {
        let mut c = Self::empty(rs.cartan_type().clone());
        c.mults.insert(rs.zero(), 1);
        c
    }

    /// Builds a character from (weight, multiplicity) pairs, summing repeats
    /// and dropping zeros. Weights are canonicalized for `rs`.
    pub fn from_weights<I>(rs: &RootSystem, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, u64)>,
    {
        let mut c = Self::empty(rs.cartan_type().clone());
        for (w, m) in items {
            if w.ambient_dim() != rs.ambient_dim() {
                return Err(Error::AmbientMismatch {
                    left: rs.cartan_type().to_string(),
                    right: format!("weight {w}"),
                });
            }
            let w = rs.weight_from_doubled(w.doubled_coords())?;
            c.add_weight(w, m);
        }
        Ok(c)
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn mults(&self) -> &BTreeMap<Weight, u64> {
        &self.mults
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity, i.e. the dimension of the module.
    pub fn mass(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn support_size(&self) -> usize {
        self.mults.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    pub(crate) fn add_weight(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.mults.entry(w).or_insert(0) += m;
        }
    }

    fn check_same(&self, other: &Character) -> Result<()> {
        if self.cartan_type != other.cartan_type {
            return Err(Error::AmbientMismatch {
                left: self.cartan_type.to_string(),
                right: other.cartan_type.to_string(),
            });
        }
        Ok(())
    }

    /// Direct sum.
    pub fn sum(&self, other: &Character) -> Result<Character> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, &m) in &other.mults {
            out.add_weight(w.clone(), m);
        }
        Ok(out)
    }

    /// `k` copies of the module.
    pub fn scaled(&self, k: u64) -> Character {
        let mut out = Character::empty(self.cartan_type.clone());
        if k > 0 {
            for (w, &m) in &self.mults {
                out.mults.insert(w.clone(), m * k);
            }
        }
        out
    }

    /// True iff every simple reflection of `rs` preserves multiplicities.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> Result<bool> {
        for (w, &m) in &self.mults {
            for i in 0..rs.rank() {
                if self.mult(&rs.reflect(w, i)?) != m {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

type CacheKey = (CartanType, Weight);

static IRREDUCIBLE_CACHE: Lazy<RwLock<HashMap<CacheKey, Arc<Character>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Dominant weights μ ≤ λ, found by repeatedly subtracting positive roots
/// while staying dominant. Every dominant weight below λ is reachable this
/// way, and every one of them is a weight of V(λ).
fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(mu) = stack.pop() {
        for alpha in rs.positive_roots() {
            let nu = rs.sub(&mu, alpha);
            if !seen.contains(&nu) && rs.is_dominant(&nu)? {
                seen.insert(nu.clone());
                stack.push(nu);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Multiplicities of the dominant weights of V(λ) by Freudenthal's formula.
fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
    let rho = rs.rho();
    let norm_rho = |w: &Weight| {
        let s = rs.add(w, rho);
        rs.form(&s, &s)
    };
    let mut dominant = dominant_weights_below(rs, lambda)?;
    // Strictly larger dominant weights have strictly larger |μ+ρ|², so this
    // order computes every μ+kα before μ.
    dominant.sort_by_cached_key(|w| (std::cmp::Reverse(norm_rho(w)), std::cmp::Reverse(w.clone())));
    let top = norm_rho(lambda);
    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(dominant.len());
    let mut conj: HashMap<Weight, Weight> = HashMap::new();
    let mut out = Vec::with_capacity(dominant.len());
    for mu in &dominant {
        if mu == lambda {
            mult.insert(mu.clone(), 1);
            out.push((mu.clone(), 1));
            continue;
        }
        let mut acc: i128 = 0;
        for alpha in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let shifted = rs.add_scaled(mu, alpha, k);
                let dom = match conj.get(&shifted) {
                    Some(d) => d.clone(),
                    None => {
                        let d = rs.to_dominant(&shifted)?;
                        conj.insert(shifted.clone(), d.clone());
                        d
                    }
                };
                let Some(&m) = mult.get(&dom) else { break };
                acc += m as i128 * rs.form(&shifted, alpha) as i128;
                k += 1;
            }
        }
        let denom = (top - norm_rho(mu)) as i128;
        let num = 2 * acc;
        if denom <= 0 || num % denom != 0 || num < 0 {
            return Err(Error::Domain(format!(
                "inexact multiplicity at {mu} for highest weight {lambda}"
            )));
        }
        let m = u64::try_from(num / denom).map_err(|_| Error::Overflow("Freudenthal recursion"))?;
        mult.insert(mu.clone(), m);
        out.push((mu.clone(), m));
    }
    Ok(out)
}

fn compute_irreducible(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let mut c = Character::empty(rs.cartan_type().clone());
    for (mu, m) in dominant_multiplicities(rs, lambda)? {
        if m == 0 {
            continue;
        }
        for w in rs.weyl_orbit(&mu)? {
            c.add_weight(w, m);
        }
    }
    Ok(c)
}

/// Character of the simple module V(λ) for dominant integral λ.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
    rs.require_dominant(lambda)?;
    let key = (rs.cartan_type().clone(), lambda.clone());
    if let Some(c) = IRREDUCIBLE_CACHE.read().get(&key) {
        return Ok(Arc::clone(c));
    }
    let c = Arc::new(compute_irreducible(rs, lambda)?);
    IRREDUCIBLE_CACHE
        .write()
        .entry(key)
        .or_insert_with(|| Arc::clone(&c));
    Ok(c)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Dimension of V(λ) by the Weyl dimension formula.
pub fn dim_irreducible(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    rs.require_dominant(lambda)?;
    let shifted = rs.add(lambda, rs.rho());
    let (mut num, mut den) = (1u128, 1u128);
    for alpha in rs.positive_roots() {
        let a = rs.form(&shifted, alpha);
        let b = rs.form(rs.rho(), alpha);
        debug_assert!(a > 0 && b > 0);
        num = num
            .checked_mul(a as u128)
            .ok_or(Error::Overflow("Weyl dimension formula"))?;
        den *= b as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    if den != 1 {
        return Err(Error::Domain(
            "Weyl dimension formula is not integral".into(),
        ));
    }
    u64::try_from(num).map_err(|_| Error::Overflow("Weyl dimension formula"))
}

/// Weight convolution: the character of the tensor product.
pub fn tensor_character(c1: &Character, c2: &Character) -> Result<Character> {
    c1.check_same(c2)?;
    let ct = &c1.cartan_type;
    let mut acc: HashMap<Weight, u64> = HashMap::new();
    for (a, &ma) in &c1.mults {
        for (b, &mb) in &c2.mults {
            *acc.entry(ct.add(a, b)).or_insert(0) += ma * mb;
        }
    }
    Ok(Character {
        cartan_type: ct.clone(),
        mults: acc.into_iter().collect(),
    })
}

/// Writes a character as a sum of irreducible characters.
///
/// Repeatedly peels off the dominant weight of largest norm (ties broken by
/// the lexicographically greatest ε-coordinates), which is necessarily a
/// highest weight of a constituent. Returns `(highest weight, multiplicity)`
/// in peeling order.
pub fn decompose(rs: &RootSystem, c: &Character) -> Result<Vec<(Weight, u64)>> {
    if c.cartan_type != *rs.cartan_type() {
        return Err(Error::AmbientMismatch {
            left: rs.cartan_type().to_string(),
            right: c.cartan_type.to_string(),
        });
    }
    let mut remaining: BTreeMap<Weight, u64> = c.mults.clone();
    let mut out = Vec::new();
    while !remaining.is_empty() {
        let mut pivot: Option<(i64, &Weight)> = None;
        for w in remaining.keys() {
            if rs.is_dominant(w)? {
                let n = rs.form(w, w);
                if pivot.is_none_or(|(pn, pw)| (n, w) > (pn, pw)) {
                    pivot = Some((n, w));
                }
            }
        }
        let Some((_, top)) = pivot else {
            let (w, _) = remaining.iter().next().unwrap();
            return Err(Error::NotAModuleCharacter(format!(
                "no dominant weight left, but {w} remains"
            )));
        };
        let top = top.clone();
        let m = remaining[&top];
        let irr = irreducible_character(rs, &top)?;
        for (w, &k) in irr.mults() {
            let need = k * m;
            match remaining.get_mut(w) {
                Some(have) if *have >= need => {
                    *have -= need;
                    if *have == 0 {
                        remaining.remove(w);
                    }
                }
                _ => {
                    return Err(Error::NotAModuleCharacter(format!(
                        "multiplicity of {w} would become negative while removing V({})",
                        rs.render_fundamental(&top)
                    )))
                }
            }
        }
        out.push((top, m));
    }
    Ok(out)
}

/// Rebuilds a character from its decomposition.
pub fn recompose(rs: &RootSystem, parts: &[(Weight, u64)]) -> Result<Character> {
    let mut c = Character::empty(rs.cartan_type().clone());
    for (w, m) in parts {
        c = c.sum(&irreducible_character(rs, w)?.scaled(*m))?;
    }
    Ok(c)
}

/// Applies π weight by weight, producing a character of the Levi.
pub fn restrict_character(c: &Character, a: &LeviSubalgebra) -> Result<Character> {
    let ambient = a.ambient();
    if c.cartan_type != *ambient.cartan_type() {
        return Err(Error::AmbientMismatch {
            left: ambient.cartan_type().to_string(),
            right: c.cartan_type.to_string(),
        });
    }
    let mut out = Character::empty(a.system().cartan_type().clone());
    for (w, &m) in &c.mults {
        out.add_weight(a.project(w)?, m);
    }
    Ok(out)
}

/// Multiplicities c_λ^τ of the simple Levi modules V^a(τ) in V(λ).
pub fn branching_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    a: &LeviSubalgebra,
) -> Result<BTreeMap<Weight, u64>> {
    if rs != a.ambient() {
        return Err(Error::AmbientMismatch {
            left: rs.cartan_type().to_string(),
            right: a.ambient().cartan_type().to_string(),
        });
    }
    let restricted = restrict_character(&*irreducible_character(rs, lambda)?, a)?;
    Ok(decompose(a.system(), &restricted)?.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn sl2_string() {
        let a1 = rs(Family::A, 1);
        let lam = a1.weight_from_fundamental(&[2]).unwrap();
        let c = irreducible_character(&a1, &lam).unwrap();
        let coords: Vec<i64> = c
            .mults()
            .keys()
            .map(|w| a1.fundamental_coords(w).unwrap()[0])
            .collect();
        let mut sorted = coords.clone();
        sorted.sort();
        assert_eq!(sorted, vec![-2, 0, 2]);
        assert!(c.mults().values().all(|&m| m == 1));
    }

    #[test]
    fn adjoint_of_a2() {
        let a2 = rs(Family::A, 2);
        let lam = a2.weight_from_fundamental(&[1, 1]).unwrap();
        let c = irreducible_character(&a2, &lam).unwrap();
        assert_eq!(c.mass(), 8);
        assert_eq!(c.mult(&a2.zero()), 2);
        assert!(c.is_weyl_invariant(&a2).unwrap());
    }

    #[test]
    fn trivial_character() {
        let b3 = rs(Family::B, 3);
        let c = irreducible_character(&b3, &b3.zero()).unwrap();
        assert_eq!(*c, Character::trivial(&b3));
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = rs(Family::A, 1);
        for m in 0..6 {
            let w = a1.weight_from_fundamental(&[m]).unwrap();
            assert_eq!(dim_irreducible(&a1, &w).unwrap(), m as u64 + 1);
        }
        let b3 = rs(Family::B, 3);
        let w2 = b3.weight_from_fundamental(&[0, 1, 0]).unwrap();
        assert_eq!(dim_irreducible(&b3, &w2).unwrap(), 21);
        let c2 = rs(Family::C, 2);
        let w = c2.weight_from_fundamental(&[0, 1]).unwrap();
        assert_eq!(dim_irreducible(&c2, &w).unwrap(), 5);
    }

    #[test]
    fn non_dominant_rejected() {
        let a2 = rs(Family::A, 2);
        let w = a2.weight_from_fundamental(&[-1, 0]).unwrap();
        assert!(matches!(
            irreducible_character(&a2, &w),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            dim_irreducible(&a2, &w),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn tensor_examples() {
        let a1 = rs(Family::A, 1);
        let v2 = irreducible_character(&a1, &a1.weight_from_fundamental(&[2]).unwrap()).unwrap();
        let triv = Character::trivial(&a1);
        assert_eq!(tensor_character(&v2, &triv).unwrap(), *v2);
        let sq = tensor_character(&v2, &v2).unwrap();
        let parts: Vec<Vec<i64>> = decompose(&a1, &sq)
            .unwrap()
            .iter()
            .map(|(w, m)| {
                assert_eq!(*m, 1);
                a1.fundamental_coords(w).unwrap()
            })
            .collect();
        assert_eq!(parts, vec![vec![4], vec![2], vec![0]]);

        let a2 = rs(Family::A, 2);
        let w1 = irreducible_character(&a2, &a2.fundamental_weights()[0]).unwrap();
        let w2 = irreducible_character(&a2, &a2.fundamental_weights()[1]).unwrap();
        let parts = decompose(&a2, &tensor_character(&w1, &w2).unwrap()).unwrap();
        let coords: Vec<_> = parts
            .iter()
            .map(|(w, m)| (a2.fundamental_coords(w).unwrap(), *m))
            .collect();
        assert_eq!(coords, vec![(vec![1, 1], 1), (vec![0, 0], 1)]);
    }

    #[test]
    fn mismatched_ambients() {
        let a1 = Character::trivial(&rs(Family::A, 1));
        let a2 = Character::trivial(&rs(Family::A, 2));
        assert!(matches!(
            tensor_character(&a1, &a2),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn decompose_sum() {
        let b3 = rs(Family::B, 3);
        let v1 = irreducible_character(&b3, &b3.fundamental_weights()[0]).unwrap();
        let c = v1.sum(&Character::trivial(&b3)).unwrap();
        let parts = decompose(&b3, &c).unwrap();
        assert_eq!(
            parts,
            vec![(b3.fundamental_weights()[0].clone(), 1), (b3.zero(), 1)]
        );
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let a1 = rs(Family::A, 1);
        let w = a1.fundamental_weights()[0].clone();
        let c = Character::from_weights(&a1, [(w, 1)]).unwrap();
        assert!(matches!(
            decompose(&a1, &c),
            Err(Error::NotAModuleCharacter(_))
        ));
    }
}

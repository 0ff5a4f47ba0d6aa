//! Local and global Weyl modules of current algebras, at character level.
//!
//! Every function here takes a [`RootSystem`], which may be the product
//! system of a Levi subalgebra; fundamental indices are 1-based and run over
//! all factors in order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::Serialize;

use crate::characters::{dim_irreducible, irreducible_character, tensor_character, Character};
use crate::error::{Error, Result};
use crate::rootsystem::{CartanType, Family, RootSystem};
use crate::weight::Weight;

/// 0-based global nodes j such that W(ω_i) ≅ ⊕ V(ω_j), with `None` standing
/// for the trivial module.
pub fn fundamental_chain(rs: &RootSystem, node: usize) -> Result<Vec<Option<usize>>> {
    if node == 0 || node > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: node,
            rank: rs.rank(),
        });
    }
    let (comp, local) = rs.node_location(node - 1);
    let (family, n) = rs.cartan_type().components()[comp];
    let first = node - 1 - local;
    let i = local + 1;
    let descends = match family {
        Family::A | Family::C => false,
        Family::B => i < n,
        Family::D => i + 1 < n,
    };
    if !descends {
        return Ok(vec![Some(node - 1)]);
    }
    Ok((0..=i)
        .rev()
        .step_by(2)
        .map(|j| if j == 0 { None } else { Some(first + j - 1) })
        .collect())
}

fn chain_weight(rs: &RootSystem, j: Option<usize>) -> Weight {
    match j {
        Some(j) => rs.fundamental_weights()[j].clone(),
        None => rs.zero(),
    }
}

/// Character of the fundamental local Weyl module W(ψ_i), 1-based `i`.
pub fn fundamental_weyl_character(rs: &RootSystem, i: usize) -> Result<Character> {
    let mut c = Character::empty(rs.cartan_type().clone());
    for j in fundamental_chain(rs, i)? {
        c = c.sum(&*irreducible_character(rs, &chain_weight(rs, j))?)?;
    }
    Ok(c)
}

/// Highest weights of the constituents of W(ψ_i), in chain order.
pub fn fundamental_weyl_constituents(rs: &RootSystem, i: usize) -> Result<Vec<Weight>> {
    Ok(fundamental_chain(rs, i)?
        .into_iter()
        .map(|j| chain_weight(rs, j))
        .collect())
}

type LocalKey = (CartanType, Weight);

static LOCAL_CACHE: Lazy<RwLock<HashMap<LocalKey, Arc<Character>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Character of the local Weyl module W(ψ) for any ψ of weight λ: the
/// convolution of the fundamental characters, each raised to m_i.
pub fn local_weyl_character(rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
    rs.require_dominant(lambda)?;
    let key = (rs.cartan_type().clone(), lambda.clone());
    if let Some(c) = LOCAL_CACHE.read().get(&key) {
        return Ok(Arc::clone(c));
    }
    let coords = rs.fundamental_coords(lambda)?;
    let mut acc = Character::trivial(rs);
    for (i, &m) in coords.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let f = fundamental_weyl_character(rs, i + 1)?;
        for _ in 0..m {
            acc = tensor_character(&acc, &f)?;
        }
    }
    let acc = Arc::new(acc);
    LOCAL_CACHE
        .write()
        .entry(key)
        .or_insert_with(|| Arc::clone(&acc));
    Ok(acc)
}

/// dim W(λ) = ∏_i (dim W(ψ_i))^{m_i}, with each factor summed from Weyl
/// dimension formula values along the fundamental chain.
pub fn local_weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    rs.require_dominant(lambda)?;
    let coords = rs.fundamental_coords(lambda)?;
    let mut total: u64 = 1;
    for (i, &m) in coords.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let mut d = 0u64;
        for j in fundamental_chain(rs, i + 1)? {
            d += dim_irreducible(rs, &chain_weight(rs, j))?;
        }
        let p = d
            .checked_pow(m as u32)
            .ok_or(Error::Overflow("local Weyl dimension"))?;
        total = total
            .checked_mul(p)
            .ok_or(Error::Overflow("local Weyl dimension"))?;
    }
    Ok(total)
}

/// Bookkeeping data of the global Weyl module W(λ): the polynomial algebra
/// A_λ has Σ m_i variables, and W(λ) is free over it of the given rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalWeylDescriptor {
    #[serde(skip)]
    pub lambda: Weight,
    pub variable_multiplicities: Vec<(usize, u64)>,
    pub rank: u64,
}

impl GlobalWeylDescriptor {
    pub fn variable_count(&self) -> u64 {
        self.variable_multiplicities.iter().map(|&(_, m)| m).sum()
    }
}

pub fn global_weyl_descriptor(rs: &RootSystem, lambda: &Weight) -> Result<GlobalWeylDescriptor> {
    rs.require_dominant(lambda)?;
    let variable_multiplicities = rs
        .fundamental_coords(lambda)?
        .into_iter()
        .enumerate()
        .filter(|&(_, m)| m > 0)
        .map(|(i, m)| (i + 1, m as u64))
        .collect();
    Ok(GlobalWeylDescriptor {
        lambda: lambda.clone(),
        variable_multiplicities,
        rank: local_weyl_dim(rs, lambda)?,
    })
}

/// A finitely supported map from point labels to nonzero dominant weights.
///
/// Points are opaque labels: only their distinctness matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentWeight {
    cartan_type: CartanType,
    entries: BTreeMap<String, Weight>,
}

impl CurrentWeight {
    pub fn new(rs: &RootSystem, entries: BTreeMap<String, Weight>) -> Result<Self> {
        for (label, w) in &entries {
            if w.ambient_dim() != rs.ambient_dim() {
                return Err(Error::AmbientMismatch {
                    left: rs.cartan_type().to_string(),
                    right: format!("weight at {label:?}"),
                });
            }
            if w.is_zero() {
                return Err(Error::ZeroWeightAtPoint(label.clone()));
            }
            rs.require_dominant(w)?;
        }
        Ok(Self {
            cartan_type: rs.cartan_type().clone(),
            entries,
        })
    }

    /// Parses `p1:0,1,0;p2:1,0,0` (label, then fundamental coordinates).
    pub fn parse(rs: &RootSystem, text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (label, coords) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected label:coords in {part:?}")))?;
            let coeffs = parse_coords(coords)?;
            let w = rs.weight_from_fundamental(&coeffs)?;
            if entries.insert(label.trim().to_string(), w).is_some() {
                return Err(Error::Parse(format!("duplicate point label {label:?}")));
            }
        }
        Self::new(rs, entries)
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn entries(&self) -> &BTreeMap<String, Weight> {
        &self.entries
    }

    pub fn supp(&self) -> BTreeSet<String> {
        self.entries.keys().cloned().collect()
    }

    /// wt(ψ) = Σ_p ψ(p).
    pub fn wt(&self) -> Weight {
        let mut acc = Weight::zeros(self.cartan_type.ambient_dim());
        for w in self.entries.values() {
            acc = self.cartan_type.add(&acc, w);
        }
        acc
    }

    /// Character of W(ψ); depends on ψ only through wt(ψ).
    pub fn local_weyl_character(&self, rs: &RootSystem) -> Result<Arc<Character>> {
        local_weyl_character(rs, &self.wt())
    }
}

/// Parses comma-separated integer coordinates such as `0,1,0`.
pub fn parse_coords(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coordinate {t:?} in {text:?}")))
        })
        .collect()
}

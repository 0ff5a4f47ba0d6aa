//! Levi subalgebras attached to closed symmetric root subsets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsystem::{cartan_of, CartanType, Family, RootSystem};
use crate::weight::Weight;
use crate::weylmodule::CurrentWeight;

/// One simple factor of a Levi subalgebra, with its simple roots listed in
/// the factor's own Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleComponent {
    pub family: Family,
    pub rank: usize,
    pub simple_roots: Vec<Weight>,
}

impl SimpleComponent {
    /// Fundamental weights τ_1..τ_s as coordinate vectors in the factor's own
    /// fundamental basis.
    pub fn fundamental_weights(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| i64::from(i == j)).collect())
            .collect()
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

/// A semisimple Levi subalgebra of a classical Lie algebra.
///
/// Constructed from a closed symmetric root subset R′. Its simple roots
/// β_1, β_2, … are the indecomposable positive elements of R′, grouped by
/// simple factor; `system()` is the abstract root system of the factors,
/// whose fundamental weights are the τ_j.
#[derive(Clone, Debug)]
pub struct LeviSubalgebra {
    ambient: RootSystem,
    components: Vec<SimpleComponent>,
    simple_roots_flat: Vec<Weight>,
    roots: BTreeSet<Weight>,
    is_simple_root_generated: bool,
    system: RootSystem,
}

impl PartialEq for LeviSubalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.simple_roots_flat == other.simple_roots_flat
    }
}

impl Eq for LeviSubalgebra {}

impl LeviSubalgebra {
    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn components(&self) -> &[SimpleComponent] {
        &self.components
    }

    /// β_1, β_2, … concatenated over the components.
    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots_flat
    }

    /// The root subset R′ the Levi was built from.
    pub fn roots(&self) -> &BTreeSet<Weight> {
        &self.roots
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        self.roots
            .iter()
            .filter(|r| self.ambient.is_positive_root(r))
            .cloned()
            .collect()
    }

    pub fn is_simple_root_generated(&self) -> bool {
        self.is_simple_root_generated
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.simple_roots_flat.len()
    }

    /// Abstract root system of the Levi (product of its simple factors).
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn cartan_type(&self) -> &CartanType {
        self.system.cartan_type()
    }

    /// Fundamental coordinates ⟨λ, β_j^∨⟩ of π(λ).
    pub fn project_coords(&self, lambda: &Weight) -> Result<Vec<i64>> {
        self.simple_roots_flat
            .iter()
            .map(|b| self.ambient.pairing(lambda, b))
            .collect()
    }

    /// π(λ) as a weight of [`Self::system`].
    pub fn project(&self, lambda: &Weight) -> Result<Weight> {
        self.system
            .weight_from_fundamental(&self.project_coords(lambda)?)
    }

    /// Sorted Π_a rendered in ε-syntax, comma-separated.
    pub fn canonical_string(&self) -> String {
        let mut roots = self.simple_roots_flat.clone();
        roots.sort();
        roots
            .iter()
            .map(|r| self.ambient.render_eps(r))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Π_a in ε-syntax in the Levi's own node order.
    pub fn simple_roots_string(&self) -> String {
        self.simple_roots_flat
            .iter()
            .map(|r| self.ambient.render_eps(r))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// The Levi generated by the given 1-based simple roots of the ambient.
    pub fn from_simple_indices(rs: &RootSystem, nodes: &[usize]) -> Result<Self> {
        let mut gens = Vec::new();
        for &i in nodes {
            if i == 0 || i > rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: rs.rank(),
                });
            }
            gens.push(rs.simple_roots()[i - 1].clone());
        }
        levi_from_generators(rs, &gens)
    }
}

impl fmt::Display for LeviSubalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.cartan_type(), self.simple_roots_string())
    }
}

/// Smallest closed symmetric subset of roots containing `gens`.
pub fn root_closure(rs: &RootSystem, gens: &[Weight]) -> Result<BTreeSet<Weight>> {
    let mut set = BTreeSet::new();
    for g in gens {
        if !rs.is_root(g) {
            return Err(Error::NotARoot(rs.render_eps(g)));
        }
        set.insert(g.clone());
        set.insert(rs.neg(g));
    }
    loop {
        let current: Vec<Weight> = set.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let s = rs.add(a, b);
                if rs.is_root(&s) && set.insert(s) {
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(set);
        }
    }
}

/// The Levi whose roots are the closure of `gens`.
pub fn levi_from_generators(rs: &RootSystem, gens: &[Weight]) -> Result<LeviSubalgebra> {
    if gens.is_empty() {
        return Err(Error::EmptyRootSubset);
    }
    let closure = root_closure(rs, gens)?;
    levi_from_root_subset(rs, &closure)
}

/// Validates R′ and builds its Levi subalgebra.
pub fn levi_from_root_subset(
    rs: &RootSystem,
    r_prime: &BTreeSet<Weight>,
) -> Result<LeviSubalgebra> {
    if r_prime.is_empty() {
        return Err(Error::EmptyRootSubset);
    }
    for r in r_prime {
        if !rs.is_root(r) {
            return Err(Error::NotARoot(rs.render_eps(r)));
        }
    }
    for r in r_prime {
        if !r_prime.contains(&rs.neg(r)) {
            return Err(Error::NotSymmetric(rs.render_eps(r)));
        }
    }
    for a in r_prime {
        for b in r_prime {
            let s = rs.add(a, b);
            if rs.is_root(&s) && !r_prime.contains(&s) {
                return Err(Error::NotClosed {
                    left: rs.render_eps(a),
                    right: rs.render_eps(b),
                });
            }
        }
    }

    let positive: Vec<&Weight> = r_prime.iter().filter(|r| rs.is_positive_root(r)).collect();
    let positive_set: BTreeSet<&Weight> = positive.iter().copied().collect();
    let simple: Vec<Weight> = positive
        .iter()
        .filter(|&&r| {
            !positive
                .iter()
                .any(|&b| b != r && positive_set.contains(&rs.sub(r, b)))
        })
        .map(|&r| r.clone())
        .collect();

    // Connected components of the Dynkin diagram.
    let n = simple.len();
    let mut comp_of: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..n {
        for j in i + 1..n {
            if rs.form(&simple[i], &simple[j]) != 0 {
                let (ri, rj) = (find(&mut comp_of, i), find(&mut comp_of, j));
                comp_of[ri] = rj;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Weight>> = BTreeMap::new();
    for (i, root) in simple.iter().enumerate() {
        let r = find(&mut comp_of, i);
        groups.entry(r).or_default().push(root.clone());
    }
    let mut components = Vec::new();
    for roots in groups.into_values() {
        let (family, rank, ordered) = classify_component(rs, &roots)?;
        components.push(SimpleComponent {
            family,
            rank,
            simple_roots: ordered,
        });
    }
    components.sort_by(|x, y| y.simple_roots[0].cmp(&x.simple_roots[0]));
    let simple_roots_flat: Vec<Weight> = components
        .iter()
        .flat_map(|c| c.simple_roots.iter().cloned())
        .collect();
    let is_simple_root_generated = simple_roots_flat
        .iter()
        .all(|b| rs.simple_roots().contains(b));
    let system = RootSystem::product(components.iter().map(|c| (c.family, c.rank)).collect())?;
    Ok(LeviSubalgebra {
        ambient: rs.clone(),
        components,
        simple_roots_flat,
        roots: r_prime.clone(),
        is_simple_root_generated,
        system,
    })
}

fn is_spin_pair(rs: &RootSystem, a: &Weight, b: &Weight) -> bool {
    let s = rs.add(a, b);
    s.doubled_coords().iter().filter(|&&c| c != 0).count() == 1
        && s.doubled_coords().iter().any(|&c| c.abs() == 4)
}

fn matches_standard(rs: &RootSystem, family: Family, ordered: &[Weight]) -> bool {
    match RootSystem::new(family, ordered.len()) {
        Ok(std) => std.cartan_matrix() == cartan_of(rs, ordered),
        Err(_) => false,
    }
}

fn walk_path(adj: &[Vec<usize>], start: usize, avoid: Option<usize>) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    loop {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&x| Some(x) != prev && !order.contains(&x));
        match next {
            Some(x) => {
                order.push(x);
                prev = Some(cur);
                cur = x;
            }
            None => return order,
        }
    }
}

/// Identifies the classical type of a connected set of simple roots and
/// returns the roots reordered to match the standard Cartan matrix.
///
/// Type-A strings are oriented to be lexicographically greatest, B/C
/// strings end at the distinguished (short resp. long) root and D diagrams
/// end with the pair ε_i−ε_j, ε_i+ε_j. A three-node string whose end roots
/// form such a pair is reported as D3. Two-node non-simply-laced sets are
/// reported as C2 inside a C ambient and as B2 otherwise.
pub fn classify_component(
    rs: &RootSystem,
    roots: &[Weight],
) -> Result<(Family, usize, Vec<Weight>)> {
    let s = roots.len();
    let describe = || {
        roots
            .iter()
            .map(|r| rs.render_eps(r))
            .collect::<Vec<_>>()
            .join(",")
    };
    if s == 0 {
        return Err(Error::EmptyRootSubset);
    }
    if s == 1 {
        return Ok((Family::A, 1, roots.to_vec()));
    }
    let cm = cartan_of(rs, roots);
    let adj: Vec<Vec<usize>> = (0..s)
        .map(|i| (0..s).filter(|&j| j != i && cm[i][j] != 0).collect())
        .collect();
    let reached = walk_reach(&adj);
    if reached != s {
        return Err(Error::NonClassical(format!(
            "disconnected diagram {}",
            describe()
        )));
    }
    let norms: Vec<i64> = roots.iter().map(|r| rs.form(r, r)).collect();
    let min_norm = *norms.iter().min().unwrap();
    let max_norm = *norms.iter().max().unwrap();
    let pick = |idx: &[usize]| idx.iter().map(|&i| roots[i].clone()).collect::<Vec<_>>();
    let ends: Vec<usize> = (0..s).filter(|&i| adj[i].len() == 1).collect();
    let is_path = adj.iter().all(|a| a.len() <= 2) && ends.len() == 2;

    let candidate: Option<(Family, Vec<Weight>)> = if min_norm == max_norm {
        if let Some(branch) = (0..s).find(|&i| adj[i].len() == 3) {
            let leaves: Vec<usize> = adj[branch]
                .iter()
                .copied()
                .filter(|&x| adj[x].len() == 1)
                .collect();
            let mut best: Option<(bool, Vec<Weight>)> = None;
            for (x, &l1) in leaves.iter().enumerate() {
                for &l2 in &leaves[x + 1..] {
                    let Some(&tail) = adj[branch].iter().find(|&&y| y != l1 && y != l2) else {
                        continue;
                    };
                    let mut chain = walk_path(&adj, tail, Some(branch));
                    chain.reverse();
                    chain.push(branch);
                    let mut pair = [roots[l1].clone(), roots[l2].clone()];
                    pair.sort();
                    let mut order = pick(&chain);
                    order.extend(pair.iter().cloned());
                    let key = (is_spin_pair(rs, &pair[0], &pair[1]), order);
                    if best.as_ref().is_none_or(|b| key > *b) {
                        best = Some(key);
                    }
                }
            }
            best.map(|(_, order)| (Family::D, order))
        } else if is_path {
            let forward = walk_path(&adj, ends[0], None);
            let mut backward = forward.clone();
            backward.reverse();
            let (e0, e1) = (&roots[ends[0]], &roots[ends[1]]);
            if s == 3
                && rs.ambient_family_is_not_a()
                && rs.form(e0, e1) == 0
                && is_spin_pair(rs, e0, e1)
            {
                let mid = adj[ends[0]][0];
                let mut pair = [e0.clone(), e1.clone()];
                pair.sort();
                let mut order = vec![roots[mid].clone()];
                order.extend(pair);
                Some((Family::D, order))
            } else {
                let f = pick(&forward);
                let b = pick(&backward);
                Some((Family::A, if f >= b { f } else { b }))
            }
        } else {
            None
        }
    } else if is_path {
        let short: Vec<usize> = (0..s).filter(|&i| norms[i] == min_norm).collect();
        let long: Vec<usize> = (0..s).filter(|&i| norms[i] == max_norm).collect();
        if s == 2 {
            let (sh, lo) = (roots[short[0]].clone(), roots[long[0]].clone());
            if rs.family() == Some(Family::C) {
                Some((Family::C, vec![sh, lo]))
            } else {
                Some((Family::B, vec![lo, sh]))
            }
        } else if short.len() == 1 && ends.contains(&short[0]) {
            let mut order = walk_path(&adj, short[0], None);
            order.reverse();
            Some((Family::B, pick(&order)))
        } else if long.len() == 1 && ends.contains(&long[0]) {
            let mut order = walk_path(&adj, long[0], None);
            order.reverse();
            Some((Family::C, pick(&order)))
        } else {
            None
        }
    } else {
        None
    };
    match candidate {
        Some((family, order)) if matches_standard(rs, family, &order) => Ok((family, s, order)),
        _ => Err(Error::NonClassical(describe())),
    }
}

fn walk_reach(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

impl RootSystem {
    fn ambient_family_is_not_a(&self) -> bool {
        self.cartan_type()
            .components()
            .iter()
            .all(|&(f, _)| f != Family::A)
    }
}

fn subsets_of_size_at_least(n: usize, min: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

/// Every simple Levi subalgebra of a simple classical root system.
///
/// Candidate root subsets are the irreducible closed subsystems of the
/// classical types: index strings of type A (with arbitrary signs outside
/// type A), and B, C, D blocks on index subsets. Each candidate goes through
/// [`levi_from_root_subset`]; results are deduplicated by Π_a and sorted by
/// (rank, family, Π_a).
pub fn enumerate_simple_levis(rs: &RootSystem) -> Result<Vec<LeviSubalgebra>> {
    let family = rs
        .family()
        .ok_or_else(|| Error::Precondition("enumeration needs a simple ambient system".into()))?;
    let dim = rs.ambient_dim();
    let eps = |terms: &[(usize, i32)]| -> Weight {
        let mut c = vec![0i32; dim];
        for &(i, v) in terms {
            c[i] += v;
        }
        rs.weight_from_doubled(&c).expect("dimension matches")
    };
    let mut candidates: Vec<BTreeSet<Weight>> = Vec::new();
    for set in subsets_of_size_at_least(dim, 2) {
        let sign_patterns = if family == Family::A {
            1
        } else {
            1usize << (set.len() - 1)
        };
        for signs in 0..sign_patterns {
            let sigma = |pos: usize| {
                if pos == 0 || signs & (1 << (pos - 1)) == 0 {
                    1
                } else {
                    -1
                }
            };
            let mut r = BTreeSet::new();
            for (p, &a) in set.iter().enumerate() {
                for (q, &b) in set.iter().enumerate() {
                    if p != q {
                        r.insert(eps(&[(a, 2 * sigma(p)), (b, -2 * sigma(q))]));
                    }
                }
            }
            candidates.push(r);
        }
    }
    if family != Family::A {
        for set in subsets_of_size_at_least(dim, 1) {
            let mut long = BTreeSet::new();
            for (p, &a) in set.iter().enumerate() {
                for &b in &set[p + 1..] {
                    for sa in [2, -2] {
                        for sb in [2, -2] {
                            long.insert(eps(&[(a, sa), (b, sb)]));
                        }
                    }
                }
            }
            let mut extra = BTreeSet::new();
            for &a in &set {
                match family {
                    Family::B => {
                        extra.insert(eps(&[(a, 2)]));
                        extra.insert(eps(&[(a, -2)]));
                    }
                    Family::C => {
                        extra.insert(eps(&[(a, 4)]));
                        extra.insert(eps(&[(a, -4)]));
                    }
                    _ => {}
                }
            }
            match family {
                Family::B | Family::C => {
                    if set.len() == 1 {
                        candidates.push(extra);
                    } else {
                        candidates.push(long.union(&extra).cloned().collect());
                    }
                    if family == Family::B && set.len() >= 3 {
                        candidates.push(long);
                    }
                }
                Family::D if set.len() >= 3 => candidates.push(long),
                _ => {}
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in candidates {
        let levi = levi_from_root_subset(rs, &r)?;
        if !levi.is_simple() {
            continue;
        }
        let mut key = levi.simple_roots().to_vec();
        key.sort();
        if seen.insert(key) {
            out.push(levi);
        }
    }
    out.sort_by(|x, y| {
        let kx = (x.rank(), x.components[0].family, sorted(x.simple_roots()));
        let ky = (y.rank(), y.components[0].family, sorted(y.simple_roots()));
        kx.cmp(&ky)
    });
    Ok(out)
}

fn sorted(v: &[Weight]) -> Vec<Weight> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// π(λ) as a weight of the Levi's own root system.
pub fn project_weight(a: &LeviSubalgebra, lambda: &Weight) -> Result<Weight> {
    a.project(lambda)
}

/// Pointwise projection of a current weight; points with zero image drop
/// out of the support.
pub fn project_current_weight(a: &LeviSubalgebra, psi: &CurrentWeight) -> Result<CurrentWeight> {
    if psi.cartan_type() != a.ambient().cartan_type() {
        return Err(Error::AmbientMismatch {
            left: a.ambient().cartan_type().to_string(),
            right: psi.cartan_type().to_string(),
        });
    }
    let mut entries = BTreeMap::new();
    for (label, w) in psi.entries() {
        let img = a.project(w)?;
        if !img.is_zero() {
            entries.insert(label.clone(), img);
        }
    }
    CurrentWeight::new(a.system(), entries)
}

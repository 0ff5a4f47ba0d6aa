//! Classical root systems in ε-coordinates.
//!
//! A [`RootSystem`] is a product of simple classical blocks laid out on
//! consecutive ε-coordinates. The simple systems of types A, B, C, D follow
//! Bourbaki numbering; products appear as the weight lattices of semisimple
//! Levi subalgebras.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weight::{Coords, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }

    /// Number of ε-coordinates used by a block of this family.
    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            _ => rank,
        }
    }

    /// Number of positive roots of the rank-`rank` system.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
        }
    }

    fn bound(self) -> &'static str {
        match self {
            Family::A => "type A requires rank >= 1",
            Family::B => "type B requires rank >= 2",
            Family::C => "type C requires rank >= 2",
            Family::D => "type D requires rank >= 3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// The type of a (semi)simple system: an ordered list of simple factors.
///
/// Also describes the coordinate layout: factors occupy consecutive blocks of
/// ε-coordinates in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType(Vec<(Family, usize)>);

impl CartanType {
    pub fn new(parts: Vec<(Family, usize)>) -> Result<Self> {
        for &(family, rank) in &parts {
            if rank < family.min_rank() {
                return Err(Error::InvalidRank {
                    family,
                    rank,
                    bound: family.bound(),
                });
            }
        }
        Ok(Self(parts))
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![(family, rank)])
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.0
    }

    pub fn is_simple(&self) -> bool {
        self.0.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|&(_, r)| r).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.iter().map(|&(f, r)| f.ambient_dim(r)).sum()
    }

    /// Reduces every type-A block modulo its all-ones vector.
    pub(crate) fn canonicalize(&self, coords: &mut [i32]) {
        let mut offset = 0;
        for &(family, rank) in &self.0 {
            let dim = family.ambient_dim(rank);
            if family == Family::A {
                let block = &mut coords[offset..offset + dim];
                let min = *block.iter().min().expect("non-empty block");
                if min != 0 {
                    block.iter_mut().for_each(|c| *c -= min);
                }
            }
            offset += dim;
        }
    }

    pub(crate) fn canonical(&self, mut w: Weight) -> Weight {
        self.canonicalize(w.coords_mut());
        w
    }

    pub(crate) fn add(&self, a: &Weight, b: &Weight) -> Weight {
        self.canonical(a.raw_add_scaled(b, 1))
    }

    pub(crate) fn sub(&self, a: &Weight, b: &Weight) -> Weight {
        self.canonical(a.raw_add_scaled(b, -1))
    }

    pub(crate) fn add_scaled(&self, a: &Weight, b: &Weight, k: i64) -> Weight {
        self.canonical(a.raw_add_scaled(b, k))
    }

    /// Invariant bilinear form, scaled to stay integral.
    ///
    /// Non-A blocks use the doubled-coordinate dot product. A type-A block of
    /// rank n uses `(n+1) x.y - sum(x) sum(y)`, the dot product of the
    /// projections onto the sum-zero hyperplane times `n+1`, which is well
    /// defined on classes modulo the all-ones vector. Each simple factor may
    /// carry its own positive scale; Cartan integers, Freudenthal's recursion
    /// and the dimension formula are insensitive to that.
    pub(crate) fn form(&self, x: &[i32], y: &[i32]) -> i64 {
        let mut total = 0i64;
        let mut offset = 0;
        for &(family, rank) in &self.0 {
            let dim = family.ambient_dim(rank);
            let xs = &x[offset..offset + dim];
            let ys = &y[offset..offset + dim];
            let dot: i64 = xs.iter().zip(ys).map(|(&a, &b)| a as i64 * b as i64).sum();
            if family == Family::A {
                let sx: i64 = xs.iter().map(|&a| a as i64).sum();
                let sy: i64 = ys.iter().map(|&a| a as i64).sum();
                total += (rank as i64 + 1) * dot - sx * sy;
            } else {
                total += dot;
            }
            offset += dim;
        }
        total
    }

    /// Projects type-A blocks onto the sum-zero hyperplane (scaled by n+1),
    /// leaving other blocks untouched.
    pub(crate) fn project_scaled(&self, x: &[i32]) -> Vec<i64> {
        let mut out = Vec::with_capacity(x.len());
        let mut offset = 0;
        for &(family, rank) in &self.0 {
            let dim = family.ambient_dim(rank);
            let xs = &x[offset..offset + dim];
            if family == Family::A {
                let s: i64 = xs.iter().map(|&a| a as i64).sum();
                out.extend(xs.iter().map(|&a| (rank as i64 + 1) * a as i64 - s));
            } else {
                out.extend(xs.iter().map(|&a| a as i64));
            }
            offset += dim;
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (family, rank)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{family}{rank}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for piece in s.trim().split(['x', '*']) {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::Parse(format!("malformed type {s:?}")));
            }
            let (head, tail) = piece.split_at(1);
            let family: Family = head.parse()?;
            let rank: usize = tail
                .parse()
                .map_err(|_| Error::Parse(format!("malformed rank in {piece:?}")))?;
            parts.push((family, rank));
        }
        CartanType::new(parts)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A classical (semi)simple root system with its simple roots, positive
/// roots, fundamental weights and ρ, all as canonical [`Weight`]s.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    node_component: Vec<usize>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    rho: Weight,
    rho_from_roots: Weight,
    simple_norms: Vec<i64>,
    roots: HashSet<Weight>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type
    }
}

impl Eq for RootSystem {}

fn unit(dim: usize, i: usize, value: i32) -> Coords {
    let mut c = Coords::from_elem(0, dim);
    c[i] = value;
    c
}

fn pair(dim: usize, i: usize, a: i32, j: usize, b: i32) -> Coords {
    let mut c = Coords::from_elem(0, dim);
    c[i] += a;
    c[j] += b;
    c
}

struct Block {
    simple: Vec<Coords>,
    positive: Vec<Coords>,
    fundamental: Vec<Coords>,
}

/// Raw (doubled, local) data for one simple block, following the root lists
/// of the classical types in ε-coordinates.
fn block_data(family: Family, n: usize) -> Block {
    let dim = family.ambient_dim(n);
    let mut simple = Vec::with_capacity(n);
    let mut positive = Vec::new();
    let mut fundamental = Vec::with_capacity(n);
    let chain = |k: usize, v: i32| -> Coords {
        let mut c = Coords::from_elem(0, dim);
        for x in c.iter_mut().take(k) {
            *x = v;
        }
        c
    };
    match family {
        Family::A => {
            for i in 0..n {
                simple.push(pair(dim, i, 2, i + 1, -2));
            }
            for i in 0..dim {
                for j in i + 1..dim {
                    positive.push(pair(dim, i, 2, j, -2));
                }
            }
            for k in 1..=n {
                fundamental.push(chain(k, 2));
            }
        }
        Family::B | Family::C | Family::D => {
            for i in 0..n - 1 {
                simple.push(pair(dim, i, 2, i + 1, -2));
            }
            match family {
                Family::B => simple.push(unit(dim, n - 1, 2)),
                Family::C => simple.push(unit(dim, n - 1, 4)),
                _ => simple.push(pair(dim, n - 2, 2, n - 1, 2)),
            }
            for i in 0..n {
                for j in i + 1..n {
                    positive.push(pair(dim, i, 2, j, -2));
                    positive.push(pair(dim, i, 2, j, 2));
                }
            }
            match family {
                Family::B => (0..n).for_each(|i| positive.push(unit(dim, i, 2))),
                Family::C => (0..n).for_each(|i| positive.push(unit(dim, i, 4))),
                _ => {}
            }
            match family {
                Family::B => {
                    for k in 1..n {
                        fundamental.push(chain(k, 2));
                    }
                    fundamental.push(chain(n, 1));
                }
                Family::C => {
                    for k in 1..=n {
                        fundamental.push(chain(k, 2));
                    }
                }
                _ => {
                    for k in 1..=n - 2 {
                        fundamental.push(chain(k, 2));
                    }
                    let mut minus = chain(n, 1);
                    minus[n - 1] = -1;
                    fundamental.push(minus);
                    fundamental.push(chain(n, 1));
                }
            }
        }
    }
    Block {
        simple,
        positive,
        fundamental,
    }
}

/// Constructs the simple root system of the given family and rank.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Self::from_type(CartanType::simple(family, rank)?)
    }

    /// Builds the product system of a list of simple factors.
    pub fn product(parts: Vec<(Family, usize)>) -> Result<Self> {
        Self::from_type(CartanType::new(parts)?)
    }

    pub fn from_type(cartan_type: CartanType) -> Result<Self> {
        let dim = cartan_type.ambient_dim();
        let embed = |offset: usize, local: &Coords| -> Weight {
            let mut c = Coords::from_elem(0, dim);
            c[offset..offset + local.len()].copy_from_slice(local);
            Weight::from_coords(c)
        };
        let mut node_component = Vec::new();
        let mut simple_raw = Vec::new();
        let mut positive_raw = Vec::new();
        let mut fundamental_raw = Vec::new();
        let mut offset = 0;
        for (idx, &(family, rank)) in cartan_type.components().iter().enumerate() {
            let block = block_data(family, rank);
            node_component.extend(std::iter::repeat_n(idx, rank));
            simple_raw.extend(block.simple.iter().map(|c| embed(offset, c)));
            positive_raw.extend(block.positive.iter().map(|c| embed(offset, c)));
            fundamental_raw.extend(block.fundamental.iter().map(|c| embed(offset, c)));
            offset += family.ambient_dim(rank);
        }

        // Half the sum of positive roots, taken on raw sum-zero representatives
        // so that the halving is exact before canonicalization.
        let mut twice_rho = Weight::zeros(dim);
        for r in &positive_raw {
            twice_rho = twice_rho.raw_add_scaled(r, 1);
        }
        let half: Coords = twice_rho
            .doubled_coords()
            .iter()
            .map(|&c| {
                debug_assert!(c % 2 == 0);
                c / 2
            })
            .collect();
        let rho_from_roots = cartan_type.canonical(Weight::from_coords(half));

        let canon = |w: Weight| cartan_type.canonical(w);
        let simple_roots: Vec<Weight> = simple_raw.into_iter().map(canon).collect();
        let positive_roots: Vec<Weight> = positive_raw.into_iter().map(canon).collect();
        let fundamental_weights: Vec<Weight> = fundamental_raw.into_iter().map(canon).collect();

        let mut rho = Weight::zeros(dim);
        for w in &fundamental_weights {
            rho = cartan_type.add(&rho, w);
        }
        let simple_norms = simple_roots
            .iter()
            .map(|a| cartan_type.form(a.doubled_coords(), a.doubled_coords()))
            .collect();
        let mut roots = HashSet::new();
        let zero = Weight::zeros(dim);
        for r in &positive_roots {
            roots.insert(r.clone());
            roots.insert(cartan_type.sub(&zero, r));
        }
        Ok(Self {
            cartan_type,
            node_component,
            simple_roots,
            positive_roots,
            fundamental_weights,
            rho,
            rho_from_roots,
            simple_norms,
            roots,
        })
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    /// The family, when the system is simple.
    pub fn family(&self) -> Option<Family> {
        match self.cartan_type.components() {
            [(family, _)] => Some(*family),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cartan_type.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// ρ computed as half the sum of positive roots; equals [`Self::rho`].
    pub fn rho_from_roots(&self) -> &Weight {
        &self.rho_from_roots
    }

    /// Component index and 0-based local node index of a (0-based) node.
    pub fn node_location(&self, node: usize) -> (usize, usize) {
        let comp = self.node_component[node];
        let first = self.node_component.iter().position(|&c| c == comp).unwrap();
        (comp, node - first)
    }

    /// First global (0-based) node index of each component.
    pub fn component_first_nodes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for &(_, r) in self.cartan_type.components() {
            out.push(acc);
            acc += r;
        }
        out
    }

    pub fn zero(&self) -> Weight {
        Weight::zeros(self.ambient_dim())
    }

    /// Canonicalizes a raw doubled-coordinate vector into a weight.
    pub fn weight_from_doubled(&self, coords: &[i32]) -> Result<Weight> {
        if coords.len() != self.ambient_dim() {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.ambient_dim(),
                coords.len()
            )));
        }
        Ok(self
            .cartan_type
            .canonical(Weight::from_coords(coords.iter().copied().collect())))
    }

    /// Σ c_i ω_i.
    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank() {
            return Err(Error::Domain(format!(
                "expected {} fundamental coordinates, got {}",
                self.rank(),
                coeffs.len()
            )));
        }
        let mut w = self.zero();
        for (c, omega) in coeffs.iter().zip(&self.fundamental_weights) {
            if *c != 0 {
                w = w.raw_add_scaled(omega, *c);
            }
        }
        Ok(self.cartan_type.canonical(w))
    }

    pub fn add(&self, a: &Weight, b: &Weight) -> Weight {
        self.cartan_type.add(a, b)
    }

    pub fn sub(&self, a: &Weight, b: &Weight) -> Weight {
        self.cartan_type.sub(a, b)
    }

    pub fn neg(&self, a: &Weight) -> Weight {
        self.cartan_type.sub(&self.zero(), a)
    }

    pub fn add_scaled(&self, a: &Weight, b: &Weight, k: i64) -> Weight {
        self.cartan_type.add_scaled(a, b, k)
    }

    pub fn form(&self, x: &Weight, y: &Weight) -> i64 {
        self.cartan_type
            .form(x.doubled_coords(), y.doubled_coords())
    }

    /// ⟨λ, α^∨⟩ = 2(λ, α)/(α, α).
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<i64> {
        let norm = self.form(alpha, alpha);
        if norm == 0 {
            return Err(Error::Domain("pairing with the zero vector".into()));
        }
        let num = 2 * self.form(lambda, alpha);
        if num % norm != 0 {
            return Err(Error::Domain(format!(
                "weight {lambda} is not integral against {alpha}"
            )));
        }
        Ok(num / norm)
    }

    fn simple_pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        let num = 2 * self.form(lambda, &self.simple_roots[i]);
        let norm = self.simple_norms[i];
        if num % norm != 0 {
            return Err(Error::Domain(format!("weight {lambda} is not integral")));
        }
        Ok(num / norm)
    }

    /// Coordinates ⟨λ, α_i^∨⟩ in the fundamental-weight basis.
    pub fn fundamental_coords(&self, lambda: &Weight) -> Result<Vec<i64>> {
        (0..self.rank())
            .map(|i| self.simple_pairing(lambda, i))
            .collect()
    }

    pub fn is_dominant(&self, lambda: &Weight) -> Result<bool> {
        for i in 0..self.rank() {
            if self.simple_pairing(lambda, i)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn require_dominant(&self, lambda: &Weight) -> Result<()> {
        if self.is_dominant(lambda)? {
            Ok(())
        } else {
            Err(Error::NotDominant(self.render_fundamental(lambda)))
        }
    }

    /// s_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i.
    pub fn reflect(&self, mu: &Weight, i: usize) -> Result<Weight> {
        let k = self.simple_pairing(mu, i)?;
        Ok(self.add_scaled(mu, &self.simple_roots[i], -k))
    }

    /// Reflection in an arbitrary root α.
    pub fn reflect_in(&self, mu: &Weight, alpha: &Weight) -> Result<Weight> {
        let k = self.pairing(mu, alpha)?;
        Ok(self.add_scaled(mu, alpha, -k))
    }

    /// The unique dominant weight in the Weyl orbit of an integral μ.
    pub fn to_dominant(&self, mu: &Weight) -> Result<Weight> {
        let mut cur = mu.clone();
        'outer: loop {
            for i in 0..self.rank() {
                let k = self.simple_pairing(&cur, i)?;
                if k < 0 {
                    cur = self.add_scaled(&cur, &self.simple_roots[i], -k);
                    continue 'outer;
                }
            }
            return Ok(cur);
        }
    }

    /// Breadth-first closure of {λ} under the simple reflections.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank() {
                let k = self.simple_pairing(&mu, i)?;
                if k == 0 {
                    continue;
                }
                let next = self.add_scaled(&mu, &self.simple_roots[i], -k);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.roots.contains(w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w)
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Weight> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| self.neg(r)));
        out
    }

    /// Cartan matrix with entries ⟨α_i, α_j^∨⟩.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_of(self, &self.simple_roots)
    }

    /// Precomputes the nonnegative integer span of a linearly independent
    /// list of roots.
    pub fn nonneg_span(&self, basis: &[Weight]) -> Result<NonnegSpan> {
        NonnegSpan::new(self, basis)
    }

    /// True iff μ is a nonnegative integer combination of `basis`.
    pub fn in_nonneg_root_span(&self, mu: &Weight, basis: &[Weight]) -> Result<bool> {
        Ok(self.nonneg_span(basis)?.contains(mu))
    }

    /// Parses an ε-expression such as `e1-e2`, `2e3`, `e2+e3` or `1/2e1`.
    pub fn parse_eps(&self, s: &str) -> Result<Weight> {
        let dim = self.ambient_dim();
        let mut values = vec![Ratio::<i64>::from_integer(0); dim];
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty ε-expression".into()));
        }
        if text == "0" {
            return Ok(self.zero());
        }
        let bad_coef = || Error::Parse(format!("bad coefficient in {s:?}"));
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (sign, after) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let e_pos = after
                .find('e')
                .ok_or_else(|| Error::Parse(format!("missing 'e' in {s:?}")))?;
            let coef_text = &after[..e_pos];
            let coef = if coef_text.is_empty() {
                Ratio::from_integer(1)
            } else if let Some((num, den)) = coef_text.split_once('/') {
                let num: i64 = num.parse().map_err(|_| bad_coef())?;
                let den: i64 = den.parse().map_err(|_| bad_coef())?;
                if den <= 0 {
                    return Err(bad_coef());
                }
                Ratio::new(num, den)
            } else {
                Ratio::from_integer(coef_text.parse::<i64>().map_err(|_| bad_coef())?)
            };
            let digits_end = after[e_pos + 1..]
                .find(['+', '-'])
                .map(|p| e_pos + 1 + p)
                .unwrap_or(after.len());
            let idx: usize = after[e_pos + 1..digits_end]
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {s:?}")))?;
            if idx == 0 || idx > dim {
                return Err(Error::Parse(format!(
                    "index e{idx} out of range 1..={dim} in {s:?}"
                )));
            }
            values[idx - 1] += coef * sign;
            rest = &after[digits_end..];
        }

        // Type-A blocks are taken modulo the all-ones vector, so shift each
        // one to start at zero before doubling.
        let mut coords = Coords::from_elem(0, dim);
        let mut offset = 0;
        for &(family, rank) in self.cartan_type.components() {
            let len = family.ambient_dim(rank);
            let shift = if family == Family::A {
                values[offset]
            } else {
                Ratio::from_integer(0)
            };
            for i in offset..offset + len {
                let doubled = (values[i] - shift) * 2;
                if !doubled.is_integer() {
                    return Err(Error::Parse(format!("{s:?} is not in the weight lattice")));
                }
                coords[i] = i32::try_from(doubled.to_integer())
                    .map_err(|_| Error::Overflow("ε-coordinate"))?;
            }
            offset += len;
        }
        Ok(self.cartan_type.canonical(Weight::from_coords(coords)))
    }

    /// Renders a weight as an ε-expression, using the sum-zero representative
    /// on type-A blocks.
    pub fn render_eps(&self, w: &Weight) -> String {
        let mut terms: Vec<(usize, Ratio<i64>)> = Vec::new();
        let mut offset = 0;
        for &(family, rank) in self.cartan_type.components() {
            let dim = family.ambient_dim(rank);
            let block = &w.doubled_coords()[offset..offset + dim];
            let shift = if family == Family::A {
                let s: i64 = block.iter().map(|&c| c as i64).sum();
                Ratio::new(s, dim as i64)
            } else {
                Ratio::from_integer(0)
            };
            for (i, &c) in block.iter().enumerate() {
                let v = (Ratio::from_integer(c as i64) - shift) / 2;
                if v != Ratio::from_integer(0) {
                    terms.push((offset + i + 1, v));
                }
            }
            offset += dim;
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (idx, v)) in terms.into_iter().enumerate() {
            let neg = v < Ratio::from_integer(0);
            let a = if neg { -v } else { v };
            if neg {
                out.push('-');
            } else if n > 0 {
                out.push('+');
            }
            if a != Ratio::from_integer(1) {
                if a.is_integer() {
                    out.push_str(&a.to_integer().to_string());
                } else {
                    out.push_str(&format!("{}/{}", a.numer(), a.denom()));
                }
            }
            out.push_str(&format!("e{idx}"));
        }
        out
    }

    /// Fundamental coordinates joined by commas, e.g. `0,1,0`.
    pub fn render_fundamental(&self, w: &Weight) -> String {
        match self.fundamental_coords(w) {
            Ok(c) => join_coords(&c),
            Err(_) => w.to_string(),
        }
    }
}

pub(crate) fn join_coords(c: &[i64]) -> String {
    c.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Cartan integers ⟨β_i, β_j^∨⟩ of an arbitrary list of roots.
pub(crate) fn cartan_of(rs: &RootSystem, roots: &[Weight]) -> Vec<Vec<i64>> {
    roots
        .iter()
        .map(|bi| {
            roots
                .iter()
                .map(|bj| rs.pairing(bi, bj).expect("roots pair integrally"))
                .collect()
        })
        .collect()
}

/// The cone of nonnegative integer combinations of an independent list of
/// roots, with a precomputed exact left inverse.
#[derive(Clone, Debug)]
pub struct NonnegSpan {
    cartan_type: CartanType,
    basis: Vec<Vec<i64>>,
    pivot_rows: Vec<usize>,
    inverse: Vec<Vec<Ratio<i64>>>,
}

impl NonnegSpan {
    pub fn new(rs: &RootSystem, basis: &[Weight]) -> Result<Self> {
        let ct = rs.cartan_type().clone();
        let cols: Vec<Vec<i64>> = basis
            .iter()
            .map(|b| ct.project_scaled(b.doubled_coords()))
            .collect();
        let k = cols.len();
        let d = rs.ambient_dim();
        // Row-pivoted elimination on the d x k matrix to find k rows forming
        // an invertible block.
        let mut m: Vec<Vec<Ratio<i64>>> = (0..d)
            .map(|r| (0..k).map(|c| Ratio::from_integer(cols[c][r])).collect())
            .collect();
        let mut rows: Vec<usize> = (0..d).collect();
        for col in 0..k {
            let Some(p) = (col..d).find(|&r| m[r][col] != Ratio::from_integer(0)) else {
                return Err(Error::DependentBasis);
            };
            m.swap(col, p);
            rows.swap(col, p);
            let pivot = m[col][col];
            for r in col + 1..d {
                let f = m[r][col] / pivot;
                if f != Ratio::from_integer(0) {
                    let pivot_row = m[col].clone();
                    for (x, &v) in m[r].iter_mut().zip(&pivot_row).take(k).skip(col) {
                        *x -= f * v;
                    }
                }
            }
        }
        let pivot_rows: Vec<usize> = rows[..k].to_vec();
        let square: Vec<Vec<Ratio<i64>>> = pivot_rows
            .iter()
            .map(|&r| (0..k).map(|c| Ratio::from_integer(cols[c][r])).collect())
            .collect();
        let inverse = invert(square).ok_or(Error::DependentBasis)?;
        Ok(Self {
            cartan_type: ct,
            basis: cols,
            pivot_rows,
            inverse,
        })
    }

    /// Solves for the coefficients of μ, if μ lies in the rational span.
    pub fn coefficients(&self, mu: &Weight) -> Option<Vec<Ratio<i64>>> {
        let v = self.cartan_type.project_scaled(mu.doubled_coords());
        let k = self.basis.len();
        let rhs: Vec<Ratio<i64>> = self
            .pivot_rows
            .iter()
            .map(|&r| Ratio::from_integer(v[r]))
            .collect();
        let coeffs: Vec<Ratio<i64>> = (0..k)
            .map(|i| {
                self.inverse[i]
                    .iter()
                    .zip(&rhs)
                    .fold(Ratio::from_integer(0), |acc, (a, b)| acc + a * b)
            })
            .collect();
        for (r, &target) in v.iter().enumerate() {
            let got = coeffs
                .iter()
                .zip(&self.basis)
                .fold(Ratio::from_integer(0), |acc, (c, col)| {
                    acc + c * Ratio::from_integer(col[r])
                });
            if got != Ratio::from_integer(target) {
                return None;
            }
        }
        Some(coeffs)
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        match self.coefficients(mu) {
            Some(c) => c
                .iter()
                .all(|x| x.is_integer() && *x >= Ratio::from_integer(0)),
            None => false,
        }
    }
}

fn invert(mut a: Vec<Vec<Ratio<i64>>>) -> Option<Vec<Vec<Ratio<i64>>>> {
    let n = a.len();
    let zero = Ratio::from_integer(0);
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(if i == j { 1 } else { 0 }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| a[r][col] != zero)?;
        a.swap(col, p);
        inv.swap(col, p);
        let pivot = a[col][col];
        for c in 0..n {
            a[col][c] /= pivot;
            inv[col][c] /= pivot;
        }
        for r in 0..n {
            if r != col && a[r][col] != zero {
                let f = a[r][col];
                for c in 0..n {
                    let (ac, ic) = (a[col][c], inv[col][c]);
                    a[r][c] -= f * ac;
                    inv[r][c] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs(Family::A, 2).positive_roots().len(), 3);
        let b3 = rs(Family::B, 3);
        assert_eq!(b3.positive_roots().len(), 9);
        let short = b3
            .positive_roots()
            .iter()
            .filter(|r| b3.form(r, r) == 4)
            .count();
        assert_eq!(short, 3);
        assert_eq!(rs(Family::D, 3).positive_roots().len(), 6);
    }

    #[test]
    fn rank_bounds_are_enforced() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 2),
        ] {
            let err = RootSystem::new(f, n).unwrap_err();
            assert!(matches!(err, Error::InvalidRank { .. }), "{err}");
        }
    }

    #[test]
    fn pairing_examples() {
        let b2 = rs(Family::B, 2);
        let w1 = &b2.fundamental_weights()[0];
        assert_eq!(b2.pairing(w1, &b2.simple_roots()[0]).unwrap(), 1);
        let b3 = rs(Family::B, 3);
        let e2 = b3.parse_eps("e2").unwrap();
        let w2 = b3.parse_eps("e1+e2").unwrap();
        assert_eq!(b3.pairing(&w2, &e2).unwrap(), 2);
        assert_eq!(b3.pairing(&b3.zero(), &e2).unwrap(), 0);
        assert!(matches!(b3.pairing(&w2, &b3.zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn dominance_examples() {
        let a2 = rs(Family::A, 2);
        let w = a2.weight_from_fundamental(&[1, 1]).unwrap();
        assert!(a2.is_dominant(&w).unwrap());
        let neg = a2.weight_from_fundamental(&[-1, 0]).unwrap();
        assert!(!a2.is_dominant(&neg).unwrap());
        let b3 = rs(Family::B, 3);
        let root = b3.parse_eps("e1-e3").unwrap();
        assert_eq!(b3.fundamental_coords(&root).unwrap(), vec![1, 1, -2]);
        assert!(!b3.is_dominant(&root).unwrap());
    }

    #[test]
    fn orbit_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(
            a1.weyl_orbit(&a1.fundamental_weights()[0]).unwrap().len(),
            2
        );
        assert_eq!(a1.weyl_orbit(&a1.zero()).unwrap().len(), 1);
        let b3 = rs(Family::B, 3);
        assert_eq!(
            b3.weyl_orbit(&b3.fundamental_weights()[0]).unwrap().len(),
            6
        );
    }

    #[test]
    fn span_examples() {
        let a2 = rs(Family::A, 2);
        let basis = a2.simple_roots().to_vec();
        let mu = a2.add(&basis[0], &basis[1]);
        assert!(a2.in_nonneg_root_span(&mu, &basis).unwrap());
        assert!(a2.in_nonneg_root_span(&a2.zero(), &basis).unwrap());
        assert!(!a2.in_nonneg_root_span(&a2.neg(&mu), &basis).unwrap());
        let b3 = rs(Family::B, 3);
        let basis = vec![b3.simple_roots()[1].clone(), b3.simple_roots()[2].clone()];
        assert!(!b3
            .in_nonneg_root_span(&b3.simple_roots()[0], &basis)
            .unwrap());
        let dependent = vec![basis[0].clone(), basis[0].clone()];
        assert_eq!(
            b3.in_nonneg_root_span(&b3.zero(), &dependent),
            Err(Error::DependentBasis)
        );
        assert!(b3.in_nonneg_root_span(&b3.zero(), &[]).unwrap());
    }

    #[test]
    fn eps_round_trip() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let r = rs(f, n);
            for root in r.roots() {
                let text = r.render_eps(&root);
                assert_eq!(r.parse_eps(&text).unwrap(), root, "{text}");
            }
        }
        let b3 = rs(Family::B, 3);
        assert_eq!(
            b3.render_eps(&b3.fundamental_weights()[2]),
            "1/2e1+1/2e2+1/2e3"
        );
    }

    #[test]
    fn cartan_type_parsing() {
        let t: CartanType = "A1xB2".parse().unwrap();
        assert_eq!(t.components(), &[(Family::A, 1), (Family::B, 2)]);
        assert_eq!(t.to_string(), "A1xB2");
        assert!("B1".parse::<CartanType>().is_err());
        assert!("Q3".parse::<CartanType>().is_err());
    }
}

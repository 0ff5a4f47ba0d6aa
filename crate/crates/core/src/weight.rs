use std::fmt;

use smallvec::SmallVec;

pub(crate) type Coords = SmallVec<[i32; 8]>;

/// A weight in doubled ε-coordinates: the stored integer `c` stands for the
/// real coordinate `c/2`, which keeps spin weights exact.
///
/// Weights are only meaningful relative to a [`crate::RootSystem`] (or its
/// [`crate::CartanType`] layout). Values handed out by the engine are always
/// canonical: type-A blocks are reduced modulo the all-ones vector so that
/// their minimal coordinate is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Coords,
}

impl Weight {
    pub(crate) fn from_coords(coords: Coords) -> Self {
        Self { coords }
    }

    pub(crate) fn zeros(dim: usize) -> Self {
        Self {
            coords: SmallVec::from_elem(0, dim),
        }
    }

    /// The stored doubled coordinates.
    pub fn doubled_coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub(crate) fn coords_mut(&mut self) -> &mut Coords {
        &mut self.coords
    }

    /// Raw coordinatewise `self + k * other`, without canonicalization.
    pub(crate) fn raw_add_scaled(&self, other: &Weight, k: i64) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        let coords = self
            .coords
            .iter()
            .zip(other.coords.iter())
            .map(|(&a, &b)| (a as i64 + k * b as i64) as i32)
            .collect();
        Weight { coords }
    }
}

fn fmt_half(c: i32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c % 2 == 0 {
        write!(f, "{}", c / 2)
    } else {
        write!(f, "{}/2", c)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_half(c, f)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

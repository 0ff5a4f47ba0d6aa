//! Independent oracles used by the integration tests. Everything here works
//! in plain ε-coordinates (doubled to stay integral) and never calls the
//! library's form, pairing or character code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use levi_weyl::{Family, RootSystem, Weight};
use num_rational::Ratio;

pub fn ambient(f: Family, n: usize) -> usize {
    match f {
        Family::A => n + 1,
        _ => n,
    }
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Positive roots in doubled ε-coordinates, straight from the classical
/// lists.
pub fn positive_roots(f: Family, n: usize) -> Vec<Vec<i64>> {
    let d = ambient(f, n);
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            out.push(plus(&unit(d, i, 2), &unit(d, j, -2)));
            if f != Family::A {
                out.push(plus(&unit(d, i, 2), &unit(d, j, 2)));
            }
        }
        match f {
            Family::B => out.push(unit(d, i, 2)),
            Family::C => out.push(unit(d, i, 4)),
            _ => {}
        }
    }
    out
}

/// Fundamental weight ω_i (1-based) in doubled ε-coordinates.
pub fn fundamental(f: Family, n: usize, i: usize) -> Vec<i64> {
    let d = ambient(f, n);
    let mut v = vec![0; d];
    let half = (f == Family::B && i == n) || (f == Family::D && i + 1 >= n);
    if half {
        v.iter_mut().for_each(|c| *c = 1);
        if f == Family::D && i == n - 1 {
            v[n - 1] = -1;
        }
    } else {
        v[..i].iter_mut().for_each(|c| *c = 2);
    }
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weyl dimension formula with exact rationals.
pub fn weyl_dim(f: Family, n: usize, coords: &[i64]) -> u64 {
    let d = ambient(f, n);
    let mut lam = vec![0; d];
    for (i, &m) in coords.iter().enumerate() {
        let w = fundamental(f, n, i + 1);
        lam = plus(&lam, &w.iter().map(|c| c * m).collect::<Vec<_>>());
    }
    let pos = positive_roots(f, n);
    let mut rho2 = vec![0; d];
    for a in &pos {
        rho2 = plus(&rho2, a);
    }
    // rho2 is 4ρ in these units; double λ to match.
    let lam4: Vec<i64> = lam.iter().map(|c| 2 * c).collect();
    let mut r = Ratio::<i128>::from_integer(1);
    for a in &pos {
        let num = dot(&plus(&lam4, &rho2), a) as i128;
        let den = dot(&rho2, a) as i128;
        r *= Ratio::new(num, den);
    }
    assert!(r.is_integer(), "non-integral dimension");
    *r.numer() as u64
}

/// Nodes of the fundamental chain of W(ω_i), 0 meaning the trivial module.
pub fn chain(f: Family, n: usize, i: usize) -> Vec<usize> {
    let descending = |start: usize| (0..=start).rev().step_by(2).collect::<Vec<_>>();
    match f {
        Family::A | Family::C => vec![i],
        Family::B if i < n => descending(i),
        Family::D if i + 2 <= n => descending(i),
        _ => vec![i],
    }
}

/// dim W(ω_i) as a sum of Weyl dimensions along the chain.
pub fn fundamental_weyl_dim(f: Family, n: usize, i: usize) -> u64 {
    chain(f, n, i)
        .into_iter()
        .map(|j| {
            let mut c = vec![0; n];
            if j > 0 {
                c[j - 1] = 1;
            }
            weyl_dim(f, n, &c)
        })
        .sum()
}

pub fn lib_weight(rs: &RootSystem, doubled: &[i64]) -> Weight {
    let c: Vec<i32> = doubled.iter().map(|&x| x as i32).collect();
    rs.weight_from_doubled(&c).unwrap()
}

/// Every set of simple roots Π_a of an irreducible closed symmetric subset
/// of R, found by trying every subset of R⁺.
pub fn brute_force_simple_levis(f: Family, n: usize) -> BTreeSet<BTreeSet<Vec<i64>>> {
    let pos = positive_roots(f, n);
    let all: Vec<Vec<i64>> = pos
        .iter()
        .cloned()
        .chain(pos.iter().map(|a| a.iter().map(|c| -c).collect()))
        .collect();
    let root_set: BTreeSet<Vec<i64>> = all.iter().cloned().collect();
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << pos.len() {
        let sub: Vec<Vec<i64>> = (0..pos.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| pos[i].clone())
            .collect();
        let sym: BTreeSet<Vec<i64>> = sub
            .iter()
            .cloned()
            .chain(sub.iter().map(|a| a.iter().map(|c| -c).collect()))
            .collect();
        let closed = sym.iter().all(|a| {
            sym.iter().all(|b| {
                let s = plus(a, b);
                !root_set.contains(&s) || sym.contains(&s)
            })
        });
        if !closed {
            continue;
        }
        // Irreducible: the non-orthogonality graph on the subset is connected.
        let items: Vec<&Vec<i64>> = sym.iter().collect();
        let mut seen = vec![false; items.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for y in 0..items.len() {
                if !seen[y] && dot(items[x], items[y]) != 0 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            continue;
        }
        let subset: BTreeSet<Vec<i64>> = sub.iter().cloned().collect();
        let simple: BTreeSet<Vec<i64>> = sub
            .iter()
            .filter(|a| {
                !sub.iter().any(|b| {
                    let rest: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
                    subset.contains(&rest)
                })
            })
            .cloned()
            .collect();
        out.insert(simple);
    }
    out
}

/// Doubled coordinates of a library root-lattice weight, shifted to sum zero
/// in type A.
pub fn raw(w: &Weight, f: Family) -> Vec<i64> {
    let c: Vec<i64> = w.doubled_coords().iter().map(|&x| x as i64).collect();
    if f == Family::A {
        let d = c.len() as i64;
        let s: i64 = c.iter().sum();
        assert_eq!(s % d, 0, "not a root-lattice vector");
        c.iter().map(|x| x - s / d).collect()
    } else {
        c
    }
}

/// Number of semistandard tableaux of shape `shape` with entries in
/// 1..=m and content `content`, i.e. a weight multiplicity of gl_m.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
    let mut left = content.to_vec();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v - 1] -= 1;
            total += fill(k + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    fill(0, &cells, &mut grid, &mut left)
}

//! Brute-force models used as oracles. Nothing here calls into the library's
//! window arithmetic: semigroup membership is coin-problem reachability and
//! ideal operations are double loops over explicit member tables.

#![allow(dead_code)]

use rand::Rng;

/// Membership of `⟨gens⟩` on `[0, n)` by reachability.
pub fn reachable(gens: &[i64], n: usize) -> Vec<bool> {
    let mut r = vec![false; n];
    if n > 0 {
        r[0] = true;
    }
    for z in 1..n {
        r[z] = gens.iter().any(|&g| g as usize <= z && r[z - g as usize]);
    }
    r
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Explicit model of a numerical semigroup on a generous prefix.
#[derive(Clone, Debug)]
pub struct NaiveSemigroup {
    pub gens: Vec<i64>,
    pub table: Vec<bool>,
}

impl NaiveSemigroup {
    pub fn new(gens: &[i64]) -> Self {
        let bound = gens.iter().product::<i64>().max(4) as usize + 2 * *gens.iter().max().unwrap() as usize;
        NaiveSemigroup {
            gens: gens.to_vec(),
            table: reachable(gens, bound.min(20_000)),
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        match self.table.get(z as usize) {
            Some(&b) => b,
            None => true,
        }
    }

    pub fn frobenius(&self) -> i64 {
        (0..self.table.len() as i64)
            .rev()
            .find(|&z| !self.contains(z))
            .unwrap_or(-1)
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    pub fn genus(&self) -> i64 {
        (0..self.conductor()).filter(|&z| !self.contains(z)).count() as i64
    }

    pub fn pf(&self) -> Vec<i64> {
        let f = self.frobenius();
        (-1..=f)
            .filter(|&z| !self.contains(z) && (1..=f + 1 + self.gens[0]).all(|h| !self.contains(h) || self.contains(z + h)))
            .collect()
    }
}

/// Explicit relative ideal: members of `[min, min + width)` listed, everything above is in.
#[derive(Clone, Debug)]
pub struct NaiveIdeal {
    pub min: i64,
    pub member: Vec<bool>,
}

impl NaiveIdeal {
    pub fn width(h: &NaiveSemigroup) -> usize {
        6 * h.conductor().max(1) as usize + 8
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else {
            self.member
                .get((z - self.min) as usize)
                .copied()
                .unwrap_or(true)
        }
    }

    fn build(h: &NaiveSemigroup, lo: i64, pred: impl Fn(i64) -> bool) -> Self {
        let w = Self::width(h) as i64;
        let first = (lo..lo + w).find(|&z| pred(z)).unwrap_or(lo + w);
        NaiveIdeal {
            min: first,
            member: (first..first + w).map(&pred).collect(),
        }
    }

    pub fn from_gens(h: &NaiveSemigroup, gens: &[i64]) -> Self {
        let lo = *gens.iter().min().unwrap();
        Self::build(h, lo, |z| gens.iter().any(|&g| h.contains(z - g)))
    }

    pub fn unit(h: &NaiveSemigroup) -> Self {
        Self::from_gens(h, &[0])
    }

    pub fn add(&self, other: &Self, h: &NaiveSemigroup) -> Self {
        let w = Self::width(h) as i64;
        let lo = self.min + other.min;
        Self::build(h, lo, |z| {
            if z >= lo + w {
                return true;
            }
            (self.min..=z - other.min).any(|e| self.contains(e) && other.contains(z - e))
        })
    }

    pub fn colon(&self, other: &Self, h: &NaiveSemigroup) -> Self {
        let c = h.conductor().max(1);
        let w = Self::width(h) as i64;
        let base = self.min - other.min;
        Self::build(h, base - 2 * c, |z| {
            (other.min..other.min + w + 2 * c).all(|f| !other.contains(f) || self.contains(z + f))
        })
    }

    pub fn power(&self, n: usize, h: &NaiveSemigroup) -> Self {
        let mut acc = Self::unit(h);
        for _ in 0..n {
            acc = acc.add(self, h);
        }
        acc
    }
}

/// A random numerical semigroup with genus at most `max_genus`.
pub fn random_semigroup_gens<R: Rng>(rng: &mut R, max_genus: i64) -> Vec<i64> {
    loop {
        let m = rng.gen_range(1..=8i64);
        let k = rng.gen_range(1..=3);
        let mut gens = vec![m];
        for _ in 0..k {
            gens.push(rng.gen_range(m + 1..=3 * m + 3));
        }
        if gens.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
            continue;
        }
        let h = NaiveSemigroup::new(&gens);
        if h.genus() <= max_genus {
            return gens;
        }
    }
}

/// Gap-subset enumeration: semigroups of genus `g` have gaps inside `[1, 2g - 1]`.
pub fn brute_force_census(genus: usize) -> u64 {
    if genus == 0 {
        return 1;
    }
    let top = 2 * genus - 1;
    let mut count = 0;
    for mask in 0u64..(1 << top) {
        if mask.count_ones() as usize != genus {
            continue;
        }
        let gap = |z: usize| z >= 1 && z <= top && mask >> (z - 1) & 1 == 1;
        let closed = (1..=top).filter(|&a| !gap(a)).all(|a| {
            (a..=top).filter(|&b| !gap(b)).all(|b| !gap(a + b))
        });
        if closed {
            count += 1;
        }
    }
    count
}

/// Over-semigroups of `H` by testing every subset of gaps for closure.
pub fn brute_force_over_semigroups(h: &NaiveSemigroup) -> Vec<Vec<i64>> {
    let gaps: Vec<i64> = (0..h.conductor()).filter(|&z| !h.contains(z)).collect();
    let c = h.conductor();
    let mut out = Vec::new();
    for mask in 0u64..(1 << gaps.len()) {
        let adjoined: Vec<i64> = gaps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        let inb = |z: i64| z >= c || h.contains(z) || adjoined.contains(&z);
        let closed = (0..c).filter(|&a| inb(a)).all(|a| (0..c).filter(|&b| inb(b)).all(|b| inb(a + b)));
        if closed {
            out.push(adjoined);
        }
    }
    out.sort();
    out
}

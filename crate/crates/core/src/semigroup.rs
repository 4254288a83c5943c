//! Numerical semigroups `H = ⟨a1, …, al⟩ ⊆ ℤ≥0` with their cached invariants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Largest accepted input generator.
pub const MAX_GENERATOR: i64 = 1 << 31;

/// Largest conductor for which a membership window is materialized.
pub const MAX_CONDUCTOR: i64 = 1 << 26;

const UNREACHED: i64 = i64::MAX;

/// A cofinite additive submonoid of the non-negative integers.
///
/// Immutable after construction. Stands for the one-dimensional ring `k[[H]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    apery: Vec<i64>,
    membership: Bits,
    pf: Vec<i64>,
    genus: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Inserts generator `a` into an Apéry table modulo `ap.len()`.
///
/// Round-robin relaxation: each residue cycle of `+a` is walked once starting
/// from its current minimum, which cannot improve.
fn round_robin_insert(ap: &mut [i64], a: i64) {
    let m = ap.len();
    let step = (a % m as i64) as usize;
    let d = gcd(step as i64, m as i64) as usize;
    let cycle_len = m / d;
    for r in 0..d {
        let mut start = r;
        let mut p = r;
        for _ in 0..cycle_len {
            if ap[p] < ap[start] {
                start = p;
            }
            p = (p + step) % m;
        }
        if ap[start] == UNREACHED {
            continue;
        }
        let mut p = start;
        for _ in 0..cycle_len {
            let q = (p + step) % m;
            let cand = ap[p] + a;
            if cand < ap[q] {
                ap[q] = cand;
            }
            p = q;
        }
    }
}

impl NumericalSemigroup {
    /// Builds `⟨raw⟩`, reducing the input to the minimal generating set.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() || raw.iter().any(|&g| g <= 0) {
            return Err(Error::EmptyInput);
        }
        if let Some(&g) = raw.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::GeneratorTooLarge(g));
        }
        let mut gens = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
            return Err(Error::GcdNotOne(gens));
        }

        let m = gens[0];
        let mut apery = vec![UNREACHED; m as usize];
        apery[0] = 0;
        let mut minimal = vec![m];
        // ascending order: a generator can only be a sum of smaller ones
        for &g in &gens[1..] {
            if g < apery[(g % m) as usize] {
                minimal.push(g);
                round_robin_insert(&mut apery, g);
            }
        }
        debug_assert!(apery.iter().all(|&w| w != UNREACHED));

        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        let conductor = frobenius + 1;
        if conductor > MAX_CONDUCTOR {
            return Err(Error::WindowTooLarge(conductor));
        }
        let len = conductor.max(1) as usize;
        let mut membership = Bits::zeros(len);
        for z in 0..len {
            let z = z as i64;
            membership.set(z as usize, z >= apery[(z % m) as usize]);
        }
        let genus = (len - membership.count_ones()) as i64;

        let mut h = NumericalSemigroup {
            generators: minimal,
            frobenius,
            apery,
            membership,
            pf: Vec::new(),
            genus,
        };
        h.pf = h.pf_by_scan();
        assert_eq!(h.pf, h.pf_via_apery(), "pseudo-Frobenius routes disagree for {h}");
        Ok(h)
    }

    /// The semigroup `ℤ≥0`.
    pub fn full() -> Self {
        Self::new(&[1]).expect("⟨1⟩ is valid")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Largest integer outside `H`; `-1` for `ℤ≥0`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    /// Length of membership windows of relative ideals over `H`: the conductor, clamped to 1.
    pub fn window_len(&self) -> usize {
        self.membership.len()
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Pseudo-Frobenius numbers in increasing order (`{-1}` for `ℤ≥0`).
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pf
    }

    /// Cohen–Macaulay type `|PF(H)|`.
    pub fn cm_type(&self) -> usize {
        self.pf.len()
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z >= self.conductor() {
            true
        } else {
            self.membership.get(z as usize)
        }
    }

    pub(crate) fn membership(&self) -> &Bits {
        &self.membership
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor()).filter(|&z| !self.contains(z)).collect()
    }

    /// Elements of `H` below the conductor ("small elements").
    pub fn small_elements(&self) -> Vec<i64> {
        (0..self.conductor().max(1))
            .filter(|&z| self.contains(z))
            .collect()
    }

    /// `z ∉ H` with `z + g ∈ H` for every generator, scanning `[-1, frobenius]`.
    pub fn pf_by_scan(&self) -> Vec<i64> {
        (-1..=self.frobenius)
            .filter(|&z| {
                !self.contains(z) && self.generators.iter().all(|&g| self.contains(z + g))
            })
            .collect()
    }

    /// PF from the Apéry elements that are maximal under `w ≤ w' ⇔ w' - w ∈ H`.
    pub fn pf_via_apery(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut pf: Vec<i64> = self
            .apery
            .iter()
            .filter(|&&w| {
                self.apery
                    .iter()
                    .all(|&v| v == w || !self.contains(v - w))
            })
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    /// `z ∈ H ⇔ f - z ∉ H` for all integers `z`.
    pub fn is_symmetric(&self) -> bool {
        2 * self.genus == self.conductor()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Parses a comma-separated integer list, optionally wrapped in `⟨…⟩`, `<…>`, `(…)` or `[…]`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let t = s
        .trim()
        .trim_start_matches(['⟨', '<', '(', '[', '{'])
        .trim_end_matches(['⟩', '>', ')', ']', '}']);
    if t.trim().is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    t.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(tok.trim().to_string()))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(&parse_int_list(s)?)
    }
}

/// JSON view: `{generators, frobenius, genus, multiplicity, type, pf}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    pub multiplicity: i64,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub pf: Vec<i64>,
}

impl From<&NumericalSemigroup> for SemigroupJson {
    fn from(h: &NumericalSemigroup) -> Self {
        SemigroupJson {
            generators: h.generators.clone(),
            frobenius: h.frobenius,
            genus: h.genus,
            multiplicity: h.multiplicity(),
            cm_type: h.cm_type(),
            pf: h.pf.clone(),
        }
    }
}

//! Relative ideals of a numerical semigroup: subsets `E ⊆ ℤ`, bounded below,
//! with `E + H ⊆ E`. These are the monomial fractional ideals of `k[[H]]`.
//!
//! Representation: `offset = min(E)` and a window of length `c = max(conductor, 1)`
//! covering `offset .. offset + c`. Every integer `≥ offset + c` is a member,
//! because `E ⊇ min(E) + H ⊇ min(E) + [conductor, ∞)`. With the minimum pinned
//! to window bit 0 the representation is canonical: two ideals over the same
//! `H` are equal as sets iff their offsets and windows coincide.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug)]
pub struct RelativeIdeal {
    parent: Arc<NumericalSemigroup>,
    offset: i64,
    window: Bits,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.offset == other.offset && self.window == other.window
    }
}

impl Eq for RelativeIdeal {}

impl std::hash::Hash for RelativeIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.offset.hash(state);
        self.window.hash(state);
    }
}

impl RelativeIdeal {
    /// Normalizes a raw window anchored at `base` (implicit ones past its end).
    fn from_raw(parent: Arc<NumericalSemigroup>, base: i64, raw: Bits) -> Self {
        let p = raw.first_one().unwrap_or(raw.len());
        let window = if p == 0 {
            raw
        } else {
            raw.shifted_down_fill_ones(p)
        };
        RelativeIdeal {
            parent,
            offset: base + p as i64,
            window,
        }
    }

    /// Window of `self` re-anchored at `base`, as raw bits.
    fn bits_from(&self, base: i64) -> Bits {
        let len = self.window.len();
        let mut b = Bits::zeros(len);
        for i in 0..len {
            b.set(i, self.contains(base + i as i64));
        }
        b
    }

    /// `gens + H`.
    pub fn from_elements(parent: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let base = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let len = parent.window_len();
        let mut raw = Bits::zeros(len);
        for &g in gens {
            let d = (g - base) as usize;
            if d < len {
                raw.or_shifted_up(parent.membership(), d);
            }
        }
        Ok(Self::from_raw(parent.clone(), base, raw))
    }

    /// `H` as an ideal of itself.
    pub fn unit(parent: &Arc<NumericalSemigroup>) -> Self {
        RelativeIdeal {
            parent: parent.clone(),
            offset: 0,
            window: parent.membership().clone(),
        }
    }

    /// The maximal ideal `H \ {0}`.
    pub fn maximal(parent: &Arc<NumericalSemigroup>) -> Self {
        Self::from_elements(parent, parent.generators()).expect("generators are nonempty")
    }

    /// `ℤ≥0`, the integral closure.
    pub fn nonnegative(parent: &Arc<NumericalSemigroup>) -> Self {
        RelativeIdeal {
            parent: parent.clone(),
            offset: 0,
            window: Bits::ones(parent.window_len()),
        }
    }

    /// Rebuilds an ideal from its offset and the members listed below its tail.
    pub fn from_window_members(
        parent: &Arc<NumericalSemigroup>,
        offset: i64,
        members: &[i64],
    ) -> Result<Self> {
        let e = Self::from_elements(parent, members)?;
        if e.offset != offset || e.window_members() != members {
            return Err(Error::Parse(format!("ideal window at offset {offset}")));
        }
        Ok(e)
    }

    pub fn parent(&self) -> &Arc<NumericalSemigroup> {
        &self.parent
    }

    /// `min(E)`.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// First integer of the implicit tail; everything from here on is a member.
    pub fn tail_start(&self) -> i64 {
        self.offset + self.window.len() as i64
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.offset {
            false
        } else if z >= self.tail_start() {
            true
        } else {
            self.window.get((z - self.offset) as usize)
        }
    }

    /// Members in `[offset, tail_start)`.
    pub fn window_members(&self) -> Vec<i64> {
        self.window
            .iter_ones()
            .map(|i| self.offset + i as i64)
            .collect()
    }

    pub fn same_parent(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
            || self.parent.generators() == other.parent.generators()
    }

    fn check_parent(&self, other: &Self) -> Result<()> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Minkowski sum `E + F`, the product of the monomial ideals.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        let mut raw = Bits::zeros(self.window.len());
        // tails of either summand land past the result window
        for j in other.window.iter_ones() {
            raw.or_shifted_up(&self.window, j);
        }
        Ok(Self::from_raw(
            self.parent.clone(),
            self.offset + other.offset,
            raw,
        ))
    }

    /// `E - F = {z : z + F ⊆ E}`.
    ///
    /// Candidates start at `min(E) - min(F)`; anything lower misses `E`, and
    /// anything from `min(E) - min(F) + c` on is in. Only window members of `F`
    /// need checking since `z + tail(F)` lies in the tail of `E`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        let mut raw = Bits::ones(self.window.len());
        for j in other.window.iter_ones() {
            raw.and_assign(&self.window.shifted_down_fill_ones(j));
        }
        Ok(Self::from_raw(
            self.parent.clone(),
            self.offset - other.offset,
            raw,
        ))
    }

    /// `n`-fold sum of `E`; `E^0 = H`.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::unit(&self.parent);
        for _ in 0..n {
            acc = acc.add(self).expect("same parent");
        }
        acc
    }

    /// `E + s`.
    pub fn shift(&self, s: i64) -> Self {
        RelativeIdeal {
            parent: self.parent.clone(),
            offset: self.offset + s,
            window: self.window.clone(),
        }
    }

    /// Translate so that the minimum is 0.
    pub fn normalized(&self) -> Self {
        self.shift(-self.offset)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_parent(other)?;
        Ok(self == other)
    }

    /// `E ⊆ F`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_parent(other)?;
        if self.offset < other.offset {
            return Ok(false);
        }
        let end = self.tail_start().max(other.tail_start());
        Ok((self.offset..end).all(|z| !self.contains(z) || other.contains(z)))
    }

    /// `F = E + s` for some integer `s`; the only candidate is `min(F) - min(E)`.
    pub fn isomorphic(&self, other: &Self) -> Result<bool> {
        self.check_parent(other)?;
        Ok(self.window == other.window)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        let base = self.offset.min(other.offset);
        let mut raw = self.bits_from(base);
        let b = other.bits_from(base);
        for i in b.iter_ones() {
            raw.set(i, true);
        }
        Ok(Self::from_raw(self.parent.clone(), base, raw))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        let base = self.offset.max(other.offset);
        let mut raw = self.bits_from(base);
        raw.and_assign(&other.bits_from(base));
        Ok(Self::from_raw(self.parent.clone(), base, raw))
    }

    /// `E \ (E + M)` with `M = H \ {0}`: the minimal monomial generators of `E`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let em = self
            .add(&Self::maximal(&self.parent))
            .expect("same parent");
        (self.offset..em.tail_start())
            .filter(|&z| self.contains(z) && !em.contains(z))
            .collect()
    }

    /// `|E \ F|` for `F ⊆ E`.
    pub fn colength_in(&self, sub: &Self) -> Result<usize> {
        if !sub.is_subset(self)? {
            return Err(Error::NotASubset);
        }
        let end = self.tail_start().max(sub.tail_start());
        Ok((self.offset..end)
            .filter(|&z| self.contains(z) && !sub.contains(z))
            .count())
    }

    /// `E + E ⊆ E` and `0 ∈ E`: an over-semigroup of the parent.
    pub fn is_semigroup(&self) -> bool {
        self.offset == 0 && self.add(self).map(|s| &s == self).unwrap_or(false)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            offset: self.offset,
            members: self.window_members(),
        }
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members = self.window_members();
        // start of the final run of consecutive members
        let mut run = self.tail_start();
        for &z in members.iter().rev() {
            if z + 1 == run {
                run = z;
            } else {
                break;
            }
        }
        write!(f, "{{")?;
        for z in members.iter().take_while(|&&z| z < run) {
            write!(f, "{z},")?;
        }
        write!(f, "{run}→}}")
    }
}

/// JSON view `{offset, members}`; `members` are the window members as integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub offset: i64,
    pub members: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(g).unwrap())
    }

    fn id(p: &Arc<NumericalSemigroup>, g: &[i64]) -> RelativeIdeal {
        RelativeIdeal::from_elements(p, g).unwrap()
    }

    #[test]
    fn from_elements_examples() {
        let p = h(&[3, 4, 5]);
        let k = id(&p, &[0, 1]);
        assert_eq!(k.offset(), 0);
        assert_eq!(k.window_members(), vec![0, 1]);
        assert_eq!(k.tail_start(), 3);
        assert_eq!(id(&p, &[0]), RelativeIdeal::unit(&p));
        let q = h(&[2, 3]);
        let m = id(&q, &[2, 3]);
        assert_eq!(m.offset(), 2);
        assert!(!m.contains(1) && m.contains(2) && m.contains(3) && m.contains(4));
        assert!(matches!(
            RelativeIdeal::from_elements(&p, &[]),
            Err(Error::EmptyGenerators)
        ));
    }

    #[test]
    fn add_examples() {
        let p = h(&[3, 4, 5]);
        let k = id(&p, &[0, 1]);
        assert_eq!(k.add(&k).unwrap(), RelativeIdeal::nonnegative(&p));
        let e = id(&p, &[-2, 7]);
        assert_eq!(e.add(&RelativeIdeal::unit(&p)).unwrap(), e);

        let p = h(&[4, 5, 11]);
        let k = id(&p, &[0, 1]);
        let k2 = k.add(&k).unwrap();
        assert_eq!(k2, id(&p, &[0, 1, 2]));
        assert!(!k2.contains(3));
    }

    #[test]
    fn colon_examples() {
        let p = h(&[3, 4, 5]);
        let k = id(&p, &[0, 1]);
        let unit = RelativeIdeal::unit(&p);
        assert_eq!(unit.colon(&k).unwrap(), RelativeIdeal::maximal(&p));
        let e = id(&p, &[-4, 2]);
        assert_eq!(e.colon(&unit).unwrap(), e);
        let q = h(&[2, 3]);
        let m = RelativeIdeal::maximal(&q);
        assert_eq!(
            RelativeIdeal::unit(&q).colon(&m).unwrap(),
            RelativeIdeal::nonnegative(&q)
        );
    }

    #[test]
    fn power_examples() {
        let p = h(&[4, 5, 11]);
        let k = id(&p, &[0, 1]);
        assert_eq!(k.power(3), RelativeIdeal::nonnegative(&p));
        assert_eq!(k.power(1), k);
        assert_eq!(k.power(0), RelativeIdeal::unit(&p));
        let q = h(&[2, 3]);
        let m2 = RelativeIdeal::maximal(&q).power(2);
        assert_eq!(m2.offset(), 4);
        assert!(m2.contains(5) && m2.contains(6) && !m2.contains(3));
    }

    #[test]
    fn equality_and_subsets() {
        let p = h(&[3, 4, 5]);
        let k = id(&p, &[0, 1]);
        assert!(k.power(2).equals(&k.power(3)).unwrap());
        assert!(RelativeIdeal::unit(&p).is_subset(&k).unwrap());
        assert!(!k.is_subset(&RelativeIdeal::unit(&p)).unwrap());
        let q = h(&[2, 3]);
        assert!(id(&q, &[0]).equals(&RelativeIdeal::unit(&q)).unwrap());
    }

    #[test]
    fn shifts_and_isomorphism() {
        let p = h(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&p);
        assert!(m.isomorphic(&m.shift(7)).unwrap());
        let k = id(&p, &[0, 1]);
        assert!(!k.isomorphic(&RelativeIdeal::unit(&p)).unwrap());
        assert_eq!(k.shift(5).shift(-5), k);
    }

    #[test]
    fn minimal_generator_examples() {
        let p = h(&[3, 4, 5]);
        assert_eq!(id(&p, &[0, 1]).minimal_generators(), vec![0, 1]);
        assert_eq!(RelativeIdeal::unit(&p).minimal_generators(), vec![0]);
        let q = h(&[2, 3]);
        assert_eq!(RelativeIdeal::nonnegative(&q).minimal_generators(), vec![0, 1]);
        assert_eq!(RelativeIdeal::maximal(&p).minimal_generators(), vec![3, 4, 5]);
    }

    #[test]
    fn colength_examples() {
        let p = h(&[3, 4, 5]);
        let k = id(&p, &[0, 1]);
        let unit = RelativeIdeal::unit(&p);
        assert_eq!(unit.colength_in(&k.shift(3)).unwrap(), 2);
        assert_eq!(k.colength_in(&k).unwrap(), 0);
        assert_eq!(RelativeIdeal::nonnegative(&p).colength_in(&unit).unwrap(), 2);
        assert!(matches!(unit.colength_in(&k), Err(Error::NotASubset)));
    }

    #[test]
    fn parent_mismatch_is_an_error() {
        let a = RelativeIdeal::unit(&h(&[2, 3]));
        let b = RelativeIdeal::unit(&h(&[3, 4, 5]));
        assert!(matches!(a.add(&b), Err(Error::ParentMismatch)));
        assert!(matches!(a.colon(&b), Err(Error::ParentMismatch)));
        assert!(matches!(a.equals(&b), Err(Error::ParentMismatch)));
        assert!(matches!(a.isomorphic(&b), Err(Error::ParentMismatch)));
        assert!(a != b);
        // structurally equal parents built separately are the same parent
        let c = RelativeIdeal::unit(&h(&[3, 2]));
        assert_eq!(a, c);
    }

    #[test]
    fn union_and_intersection() {
        let p = h(&[3, 4, 5]);
        let a = id(&p, &[0]);
        let b = id(&p, &[1]);
        assert_eq!(a.union(&b).unwrap(), id(&p, &[0, 1]));
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.window_members(), vec![4, 5, 6]);
        assert_eq!(i, id(&p, &[4, 5, 6]));
    }

    #[test]
    fn full_monoid_ideals() {
        let p = h(&[1]);
        let e = id(&p, &[3, 9]);
        assert_eq!(e.offset(), 3);
        assert_eq!(e.window_members(), vec![3]);
        assert_eq!(e.colon(&e).unwrap(), RelativeIdeal::unit(&p));
        assert_eq!(RelativeIdeal::maximal(&p), id(&p, &[1]));
    }

    #[test]
    fn display_compresses_the_final_run() {
        let p = h(&[3, 5]);
        assert_eq!(RelativeIdeal::nonnegative(&p).to_string(), "{0→}");
        assert_eq!(RelativeIdeal::unit(&p).to_string(), "{0,3,5,6,8→}");
        assert_eq!(id(&p, &[0, 2, 3, 4]).to_string(), "{0,2→}");
    }

    #[test]
    fn window_members_round_trip() {
        let p = h(&[4, 5, 11]);
        let e = id(&p, &[-3, 1, 6]);
        let back = RelativeIdeal::from_window_members(&p, e.offset(), &e.window_members()).unwrap();
        assert_eq!(back, e);
        assert!(RelativeIdeal::from_window_members(&p, 0, &[1]).is_err());
    }
}

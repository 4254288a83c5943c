//! Idealizations `A = R ⋉ M` over a Gorenstein `R = k[[H]]` (`H` symmetric),
//! with `M` a rank-one monomial module given by a relative ideal `E`.
//!
//! `A` is never built. Its properties are read off ideal-theoretic data of `R`:
//! `M` is isomorphic to a trace ideal `I` iff the canonical reduction number of
//! `A` is at most 2, and then `r(A)` is computed both from the socle of `R/I`
//! and from the number of generators of `(R:I) × R`.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{type_of_quotient, Check, Violation};
use crate::relideal::{IdealJson, RelativeIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupJson};

/// Default genus limit for the over-semigroup search.
pub const MAX_OVERRING_GENUS: i64 = 24;

/// `I - I = H - I` for an integral ideal `I`.
pub fn is_trace_ideal(e: &RelativeIdeal) -> Result<bool> {
    let unit = RelativeIdeal::unit(e.parent());
    if !e.is_subset(&unit)? {
        return Err(Error::NotIntegral);
    }
    Ok(e.colon(e)? == unit.colon(e)?)
}

fn require_symmetric(h: &NumericalSemigroup) -> Result<()> {
    if h.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// If `E` is a translate of a trace ideal, returns that trace ideal.
///
/// Colons are translation covariant, so `E + s` is a trace ideal iff
/// `H - E = s + (E - E)`; since `min(E - E) = 0` the only candidate is `s = min(H - E)`.
pub fn is_trace_iso(e: &RelativeIdeal) -> Result<Option<RelativeIdeal>> {
    let h = e.parent();
    require_symmetric(h)?;
    let dual = RelativeIdeal::unit(h).colon(e)?;
    let endo = e.colon(e)?;
    if !dual.isomorphic(&endo)? {
        return Ok(None);
    }
    let witness = e.shift(dual.offset() - endo.offset());
    debug_assert!(is_trace_ideal(&witness)?);
    Ok(Some(witness))
}

#[derive(Clone, Debug)]
pub struct IdealizationReport {
    pub semigroup: Arc<NumericalSemigroup>,
    pub module: RelativeIdeal,
    pub trace_iso: bool,
    /// Equal to `trace_iso`.
    pub canred_le2: bool,
    pub witness: Option<RelativeIdeal>,
    /// `M ≅ R = ω_R`: `A` is Gorenstein of type 1.
    pub gorenstein: bool,
    /// `r(R/I) + 2`, for a proper trace ideal `I`.
    pub type_via_socle: Option<usize>,
    /// `μ(H - I) + 1`, the number of generators of `ω_A ≅ (R:I) × R`.
    pub type_via_mu: Option<usize>,
}

impl IdealizationReport {
    /// Computes the report; only fails when `H` is not symmetric.
    pub fn compute(e: &RelativeIdeal) -> Result<Self> {
        let h = e.parent().clone();
        let witness = is_trace_iso(e)?;
        let unit = RelativeIdeal::unit(&h);
        let gorenstein = witness.as_ref() == Some(&unit);
        let (type_via_socle, type_via_mu) = match &witness {
            Some(i) if !gorenstein => (
                Some(type_of_quotient(i)? + 2),
                Some(unit.colon(i)?.minimal_generators().len() + 1),
            ),
            _ => (None, None),
        };
        Ok(IdealizationReport {
            semigroup: h,
            module: e.clone(),
            trace_iso: witness.is_some(),
            canred_le2: witness.is_some(),
            witness,
            gorenstein,
            type_via_socle,
            type_via_mu,
        })
    }

    /// Cohen–Macaulay type of `A` when it is determined.
    pub fn cm_type(&self) -> Option<usize> {
        if self.gorenstein {
            Some(1)
        } else {
            self.type_via_socle
        }
    }

    pub fn to_json(&self) -> IdealizationJson {
        IdealizationJson {
            semigroup: SemigroupJson::from(&*self.semigroup),
            module: self.module.to_json(),
            trace_iso: self.trace_iso,
            canred_le2: self.canred_le2,
            gorenstein: self.gorenstein,
            witness_i: self.witness.as_ref().map(RelativeIdeal::to_json),
            type_via_socle: self.type_via_socle,
            type_via_mu: self.type_via_mu,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealizationJson {
    pub semigroup: SemigroupJson,
    pub module: IdealJson,
    pub trace_iso: bool,
    pub canred_le2: bool,
    pub gorenstein: bool,
    #[serde(rename = "witness_I")]
    pub witness_i: Option<IdealJson>,
    pub type_via_socle: Option<usize>,
    pub type_via_mu: Option<usize>,
}

/// Type of `R ⋉ M` for `M` isomorphic to a proper trace ideal, with both formulas checked.
pub fn idealization_type(e: &RelativeIdeal) -> Result<IdealizationReport> {
    let report = IdealizationReport::compute(e)?;
    if !report.trace_iso {
        return Err(Error::NotTraceIso);
    }
    if report.gorenstein {
        return Err(Error::GorensteinIdealization);
    }
    if report.type_via_socle != report.type_via_mu {
        return Err(Error::TheoremViolation(Box::new(Violation {
            check: Check::Idealization,
            generators: report.semigroup.generators().to_vec(),
            claim: format!("r(R/I) + 2 = μ(H - I) + 1 for I = {}", report.witness.as_ref().expect("trace iso")),
            lhs: format!("{:?}", report.type_via_socle),
            rhs: format!("{:?}", report.type_via_mu),
        })));
    }
    Ok(report)
}

/// Over-semigroups `H ⊆ B ⊆ ℤ≥0`, as relative ideals of `H`.
pub fn over_semigroups(h: &Arc<NumericalSemigroup>) -> Result<Vec<RelativeIdeal>> {
    over_semigroups_with_limit(h, MAX_OVERRING_GENUS)
}

fn adjoined_gaps(h: &NumericalSemigroup, b: &RelativeIdeal) -> Vec<i64> {
    h.gaps().into_iter().filter(|&g| b.contains(g)).collect()
}

/// Smallest over-semigroup of `b` containing `g`.
fn adjoin(b: &RelativeIdeal, g: i64) -> RelativeIdeal {
    let mut s = b
        .union(&b.shift(g))
        .expect("same parent");
    loop {
        let next = s.add(&s).expect("same parent");
        if next == s {
            return s;
        }
        s = next;
    }
}

/// As [`over_semigroups`] with a caller-chosen genus limit.
///
/// Found by closing under single-gap adjunction from `H`; sorted by the list of
/// adjoined gaps, lexicographically.
pub fn over_semigroups_with_limit(
    h: &Arc<NumericalSemigroup>,
    limit: i64,
) -> Result<Vec<RelativeIdeal>> {
    if h.genus() > limit {
        return Err(Error::TooManyGaps {
            genus: h.genus(),
            limit,
        });
    }
    let start = RelativeIdeal::unit(h);
    let mut seen: HashSet<RelativeIdeal> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(b) = stack.pop() {
        for g in h.gaps() {
            if !b.contains(g) {
                let c = adjoin(&b, g);
                if seen.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
    }
    let sorted: BTreeMap<Vec<i64>, RelativeIdeal> = seen
        .into_iter()
        .map(|b| (adjoined_gaps(h, &b), b))
        .collect();
    Ok(sorted.into_values().collect())
}

/// `B ↦ H - B` sends over-semigroups injectively to trace ideals, and
/// `I ↦ I - I` sends them back.
pub fn verify_trace_extension_bijection(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    Ok(bijection_failures(h)?.is_empty())
}

fn bijection_failures(h: &Arc<NumericalSemigroup>) -> Result<Vec<Violation>> {
    require_symmetric(h)?;
    let unit = RelativeIdeal::unit(h);
    let mut failures = Vec::new();
    let mut images = HashSet::new();
    let overs = over_semigroups(h)?;
    for b in &overs {
        let i = unit.colon(b)?;
        let back = i.colon(&i)?;
        let trace = is_trace_ideal(&i)?;
        if !trace || &back != b {
            failures.push(Violation {
                check: Check::Idealization,
                generators: h.generators().to_vec(),
                claim: "B ↦ H - B ↦ (H - B) - (H - B) is the identity onto trace ideals".into(),
                lhs: format!("B = {b}, I = {i}, trace = {trace}"),
                rhs: format!("I - I = {back}"),
            });
        }
        images.insert(i);
    }
    if images.len() != overs.len() {
        failures.push(Violation {
            check: Check::Idealization,
            generators: h.generators().to_vec(),
            claim: "B ↦ H - B is injective".into(),
            lhs: format!("{} over-semigroups", overs.len()),
            rhs: format!("{} distinct images", images.len()),
        });
    }
    Ok(failures)
}

/// Bijection and type-formula checks over every proper trace ideal of a symmetric `H`.
pub fn check_symmetric(h: &Arc<NumericalSemigroup>) -> Result<Vec<Violation>> {
    let mut out = bijection_failures(h)?;
    let unit = RelativeIdeal::unit(h);
    for b in over_semigroups(h)? {
        let i = unit.colon(&b)?;
        if i == unit {
            continue;
        }
        match idealization_type(&i) {
            Ok(_) => {}
            Err(Error::TheoremViolation(v)) => out.push(*v),
            Err(e) => {
                out.push(Violation {
                    check: Check::Idealization,
                    generators: h.generators().to_vec(),
                    claim: "proper trace ideal yields a non-Gorenstein idealization".into(),
                    lhs: format!("I = {i}"),
                    rhs: e.to_string(),
                });
            }
        }
    }
    Ok(out)
}

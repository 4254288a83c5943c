//! Canonical ideal, canonical reduction number, blow-up, Ratliff–Rush closure,
//! Hilbert function of the canonical ideal, trace of the canonical module and
//! the Gorenstein / almost Gorenstein / nearly Gorenstein classification.
//!
//! Every classification flag that has two independent characterizations is
//! computed both ways; disagreements surface as [`Violation`] records.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relideal::{IdealJson, RelativeIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupJson};

/// `K = {f - c : c ∈ PF(H)} + H`, with `H ⊆ K ⊆ ℤ≥0`.
///
/// Checked against the direct description `{z : f - z ∉ H}`.
pub fn canonical_ideal(h: &Arc<NumericalSemigroup>) -> RelativeIdeal {
    let f = h.frobenius();
    let gens: Vec<i64> = h.pseudo_frobenius().iter().map(|c| f - c).collect();
    let k = RelativeIdeal::from_elements(h, &gens).expect("PF(H) is nonempty");

    let direct: Vec<i64> = (0..=f.max(0) + 1).filter(|&z| !h.contains(f - z)).collect();
    let k2 = RelativeIdeal::from_elements(h, &direct).expect("0 is in the direct scan");
    assert!(
        k == k2 && (0..=f + 1).all(|z| k.contains(z) != h.contains(f - z)),
        "canonical ideal routes disagree for {h}: {k} vs {k2}"
    );
    k
}

/// Least `n ≥ 0` with `K^n = K^(n+1)`. Bounded by `multiplicity - 1`.
pub fn can_red(h: &Arc<NumericalSemigroup>) -> Result<usize> {
    let k = canonical_ideal(h);
    let bound = h.multiplicity() as usize - 1;
    let mut cur = RelativeIdeal::unit(h);
    for n in 0..=bound {
        let next = cur.add(&k)?;
        if next == cur {
            return Ok(n);
        }
        cur = next;
    }
    Err(Error::BoundExceeded {
        what: "canonical reduction number",
        bound: bound as i64,
    })
}

/// `K^0, …, K^n`.
pub fn canonical_powers(h: &Arc<NumericalSemigroup>, n: usize) -> Vec<RelativeIdeal> {
    let k = canonical_ideal(h);
    std::iter::successors(Some(RelativeIdeal::unit(h)), |p| Some(p.add(&k).expect("same parent")))
        .take(n + 1)
        .collect()
}

fn generic_bound(h: &NumericalSemigroup) -> usize {
    (2 * h.conductor() + h.multiplicity()) as usize
}

/// Least `n` at which normalized powers of `e` stop changing, and the stable value.
fn stable_power(e: &RelativeIdeal) -> Result<(usize, RelativeIdeal)> {
    let bound = generic_bound(e.parent());
    let mut power = RelativeIdeal::unit(e.parent());
    let mut norm = power.clone();
    for n in 0..=bound {
        let next = power.add(e)?;
        let next_norm = next.normalized();
        if next_norm == norm {
            return Ok((n, norm));
        }
        power = next;
        norm = next_norm;
    }
    Err(Error::BoundExceeded {
        what: "power stabilization",
        bound: bound as i64,
    })
}

/// Least `n` with `E^(n+1) = min(E) + E^n`: the monomial of degree `min(E)` is
/// an almost reduction of `E` from this exponent on.
pub fn reduction_number(e: &RelativeIdeal) -> Result<usize> {
    stable_power(e).map(|(n, _)| n)
}

/// Blow-up `R^E`: the stable normalized power of `E`, an over-semigroup of `H`.
///
/// Also computed as `E^n - E^n` for `n` past stabilization; the two must agree.
pub fn blow_up(e: &RelativeIdeal) -> Result<RelativeIdeal> {
    let (n, stable) = stable_power(e)?;
    let p = e.power(n.max(1));
    let endo = p.colon(&p)?;
    assert_eq!(
        endo,
        stable,
        "blow-up routes disagree for {} over {}",
        e,
        e.parent()
    );
    Ok(stable)
}

/// Ratliff–Rush closure `⋃_ℓ (E^(ℓ+1) - E^ℓ) ∩ H` of an integral ideal.
///
/// The colons increase with `ℓ` and are constant once `E^(ℓ+1) = min(E) + E^ℓ`,
/// so the union is exhausted at the reduction number.
pub fn ratliff_rush(e: &RelativeIdeal) -> Result<RelativeIdeal> {
    let h = e.parent().clone();
    let unit = RelativeIdeal::unit(&h);
    if !e.is_subset(&unit)? {
        return Err(Error::NotIntegral);
    }
    let r = reduction_number(e)?;
    let cap = 2 * h.conductor().max(1) as usize;
    if r > cap {
        return Err(Error::BoundExceeded {
            what: "Ratliff-Rush closure",
            bound: cap as i64,
        });
    }
    let mut lower = e.clone();
    let mut closure = e.clone();
    for _ in 1..=r.max(1) {
        let upper = lower.add(e)?;
        let c = upper.colon(&lower)?.intersection(&unit)?;
        closure = closure.union(&c)?;
        lower = upper;
    }
    Ok(closure)
}

/// `ℓ(R/ω^n)` for `n = 0..=n_max` together with its linear part `e0·n - e1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub e0: i64,
    pub e1: i64,
    pub stabilization: usize,
    pub values: Vec<i64>,
}

impl HilbertTable {
    pub fn linear_part(&self, n: usize) -> i64 {
        self.e0 * n as i64 - self.e1
    }
}

/// Elements of `H - K` in increasing order, up to and including the first `count` nonzero ones.
fn dual_shifts(h: &Arc<NumericalSemigroup>, count: usize) -> Vec<i64> {
    let k = canonical_ideal(h);
    let dual = RelativeIdeal::unit(h).colon(&k).expect("same parent");
    (dual.offset()..)
        .filter(|&z| z != 0 && dual.contains(z))
        .take(count)
        .collect()
}

/// Hilbert table of the embedded canonical ideal `ω = e + K`, `e` the least
/// nonzero element of `H - K`.
pub fn hilbert_table(h: &Arc<NumericalSemigroup>, n_max: usize) -> Result<HilbertTable> {
    let e = dual_shifts(h, 1)[0];
    hilbert_table_with_shift(h, e, n_max)
}

/// Hilbert table of `ω = e + K` for a caller-chosen nonzero `e ∈ H - K`.
pub fn hilbert_table_with_shift(
    h: &Arc<NumericalSemigroup>,
    e: i64,
    n_max: usize,
) -> Result<HilbertTable> {
    if (n_max as i64) < h.multiplicity() {
        return Err(Error::NMaxTooSmall {
            n_max,
            multiplicity: h.multiplicity(),
        });
    }
    let k = canonical_ideal(h);
    let unit = RelativeIdeal::unit(h);
    let omega = k.shift(e);
    if e <= 0 || !omega.is_subset(&unit)? {
        return Err(Error::NotIntegral);
    }
    let mut values = Vec::with_capacity(n_max + 1);
    let mut power = unit.clone();
    for n in 0..=n_max {
        if n > 0 {
            power = power.add(&omega)?;
        }
        values.push(unit.colength_in(&power)? as i64);
    }
    let b = blow_up(&k)?;
    let e1 = b.colength_in(&unit)? as i64;
    let mut table = HilbertTable {
        e0: e,
        e1,
        stabilization: 0,
        values,
    };
    table.stabilization = (0..=n_max)
        .rev()
        .take_while(|&n| table.values[n] == table.linear_part(n))
        .last()
        .unwrap_or(n_max + 1);
    Ok(table)
}

/// `tr(ω) = K + (H - K) ⊆ H`.
pub fn trace_of_canonical(h: &Arc<NumericalSemigroup>) -> RelativeIdeal {
    let k = canonical_ideal(h);
    let dual = RelativeIdeal::unit(h).colon(&k).expect("same parent");
    let tr = k.add(&dual).expect("same parent");
    assert!(
        tr.is_subset(&RelativeIdeal::unit(h)).expect("same parent"),
        "trace escapes H for {h}"
    );
    tr
}

/// Socle dimension of `R/C` for a proper integral ideal `C`.
pub fn type_of_quotient(c: &RelativeIdeal) -> Result<usize> {
    let h = c.parent();
    let unit = RelativeIdeal::unit(h);
    if !c.is_subset(&unit)? {
        return Err(Error::NotIntegral);
    }
    if *c == unit {
        return Err(Error::ZeroQuotient);
    }
    Ok((0..c.tail_start())
        .filter(|&x| {
            h.contains(x)
                && !c.contains(x)
                && h.generators().iter().all(|&g| c.contains(x + g))
        })
        .count())
}

/// A named cross-check between two characterizations of the same property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `can_red = 0 ⇔ H symmetric ⇔ tr(ω) = H`; `can_red ≠ 1`; `e1 = 0 ⇔ Gorenstein`.
    Gorenstein,
    /// `can_red ≤ 2 ⇔ tr(ω) ≅ H - K`.
    TraceDual,
    /// Hilbert stabilization index equals `can_red`, and `e1 = |B \ H|` is the fitted constant.
    Hilbert,
    /// `can_red ≤ multiplicity - 1`.
    MultiplicityBound,
    /// `e1 ≤ r(R) ⇔ M + K ⊆ H`.
    AlmostGorenstein,
    /// `AG ⇔ NG ∧ can_red ≤ 2 ⇔ NG ∧ R/(H - B) Gorenstein`.
    AgNg,
    /// Trace ideals versus over-semigroups, and the two type formulas for `R ⋉ I`.
    Idealization,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Gorenstein,
        Check::TraceDual,
        Check::Hilbert,
        Check::MultiplicityBound,
        Check::AlmostGorenstein,
        Check::AgNg,
        Check::Idealization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Gorenstein => "gorenstein",
            Check::TraceDual => "trace-dual",
            Check::Hilbert => "hilbert",
            Check::MultiplicityBound => "multiplicity-bound",
            Check::AlmostGorenstein => "almost-gorenstein",
            Check::AgNg => "ag-ng",
            Check::Idealization => "idealization",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// A failed cross-check with both sides spelled out.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub check: Check,
    pub generators: Vec<i64>,
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:?}: {} (lhs = {}, rhs = {})",
            self.check, self.generators, self.claim, self.lhs, self.rhs
        )
    }
}

/// All invariants of one semigroup ring.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub semigroup: Arc<NumericalSemigroup>,
    pub canonical: RelativeIdeal,
    /// `H - K`, the monomial model of `ω*`.
    pub dual: RelativeIdeal,
    pub can_red: usize,
    pub blow_up: RelativeIdeal,
    /// `H - B`, the conductor of the blow-up into `R`.
    pub blow_up_conductor: RelativeIdeal,
    pub e0: i64,
    pub e1: i64,
    pub cm_type: usize,
    pub trace: RelativeIdeal,
    pub hilbert: HilbertTable,
    pub gorenstein: bool,
    /// Via `e1 ≤ r(R)`.
    pub almost_gorenstein: bool,
    /// Via `M + K ⊆ H`.
    pub almost_gorenstein_by_maximal: bool,
    pub nearly_gorenstein: bool,
    pub canred_le2: bool,
    pub trace_iso_dual: bool,
    /// `None` when `H - B = H`, i.e. the quotient is the zero ring.
    pub quotient_type: Option<usize>,
}

impl ClassificationReport {
    /// Computes every invariant without asserting the cross-checks.
    pub fn compute(h: &Arc<NumericalSemigroup>) -> Result<Self> {
        let unit = RelativeIdeal::unit(h);
        let maximal = RelativeIdeal::maximal(h);
        let canonical = canonical_ideal(h);
        let dual = unit.colon(&canonical)?;
        let can_red = reduction_number(&canonical)?;
        let blow_up = blow_up(&canonical)?;
        let blow_up_conductor = unit.colon(&blow_up)?;
        let n_max = (h.multiplicity() as usize).max(can_red + 1);
        let hilbert = hilbert_table(h, n_max)?;
        let e1 = blow_up.colength_in(&unit)? as i64;
        let trace = canonical.add(&dual)?;
        let quotient_type = if blow_up_conductor == unit {
            None
        } else {
            Some(type_of_quotient(&blow_up_conductor)?)
        };
        Ok(ClassificationReport {
            gorenstein: can_red == 0,
            almost_gorenstein: e1 <= h.cm_type() as i64,
            almost_gorenstein_by_maximal: maximal.add(&canonical)?.is_subset(&unit)?,
            nearly_gorenstein: maximal.is_subset(&trace)?,
            canred_le2: can_red <= 2,
            trace_iso_dual: trace.isomorphic(&dual)?,
            e0: hilbert.e0,
            e1,
            cm_type: h.cm_type(),
            semigroup: h.clone(),
            canonical,
            dual,
            can_red,
            blow_up,
            blow_up_conductor,
            trace,
            hilbert,
            quotient_type,
        })
    }

    /// `R/(H - B)` is Gorenstein; the zero quotient (`B = H`) counts as Gorenstein.
    pub fn quotient_gorenstein(&self) -> bool {
        self.quotient_type.is_none_or(|t| t == 1)
    }

    fn violation(&self, check: Check, claim: &str, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Violation {
        Violation {
            check,
            generators: self.semigroup.generators().to_vec(),
            claim: claim.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// Runs the requested cross-checks and returns the failures.
    pub fn violations(&self, checks: &[Check]) -> Result<Vec<Violation>> {
        let mut out = Vec::new();
        for &check in checks {
            self.run_check(check, &mut out)?;
        }
        Ok(out)
    }

    fn run_check(&self, check: Check, out: &mut Vec<Violation>) -> Result<()> {
        let h = &self.semigroup;
        if check == Check::Idealization {
            if h.is_symmetric() {
                out.extend(crate::idealization::check_symmetric(h)?);
            }
            return Ok(());
        }
        let mut expect = |ok: bool, claim: &str, lhs: String, rhs: String| {
            if !ok {
                out.push(self.violation(check, claim, lhs, rhs));
            }
        };
        match check {
            Check::Gorenstein => {
                let sym = h.is_symmetric();
                expect(
                    self.gorenstein == sym,
                    "can_red = 0 iff H symmetric",
                    format!("can_red = {}", self.can_red),
                    format!("symmetric = {sym}"),
                );
                let trace_full = self.trace == RelativeIdeal::unit(h);
                expect(
                    self.gorenstein == trace_full,
                    "Gorenstein iff tr(ω) = H",
                    format!("gorenstein = {}", self.gorenstein),
                    format!("trace = {}", self.trace),
                );
                expect(
                    self.can_red != 1,
                    "can_red is never 1",
                    format!("can_red = {}", self.can_red),
                    "≠ 1".into(),
                );
                expect(
                    (self.e1 == 0) == self.gorenstein,
                    "e1 = 0 iff Gorenstein",
                    format!("e1 = {}", self.e1),
                    format!("gorenstein = {}", self.gorenstein),
                );
            }
            Check::MultiplicityBound => {
                expect(
                    (self.can_red as i64) < h.multiplicity(),
                    "can_red ≤ multiplicity - 1",
                    format!("can_red = {}", self.can_red),
                    format!("multiplicity - 1 = {}", h.multiplicity() - 1),
                );
                let strict = can_red(h);
                expect(
                    matches!(strict, Ok(n) if n == self.can_red),
                    "multiplicity-bounded can_red loop agrees",
                    format!("{strict:?}"),
                    format!("{}", self.can_red),
                );
            }
            Check::Hilbert => {
                let t = &self.hilbert;
                expect(
                    t.stabilization == self.can_red,
                    "Hilbert stabilization index = can_red",
                    format!("stabilization = {}", t.stabilization),
                    format!("can_red = {}", self.can_red),
                );
                let n = t.values.len() - 1;
                let fitted_e1 = t.e0 * n as i64 - t.values[n];
                expect(
                    fitted_e1 == self.e1,
                    "fitted constant term = |B \\ H|",
                    format!("fitted e1 = {fitted_e1}"),
                    format!("|B \\ H| = {}", self.e1),
                );
                // the stabilization index does not depend on the embedding of ω
                if let Some(&e2) = dual_shifts(h, 2).get(1) {
                    let alt = hilbert_table_with_shift(h, e2, n)?;
                    expect(
                        alt.stabilization == t.stabilization && alt.e1 == t.e1,
                        "stabilization independent of the embedding of ω",
                        format!("e = {}: stabilization {}", t.e0, t.stabilization),
                        format!("e = {e2}: stabilization {}", alt.stabilization),
                    );
                }
            }
            Check::AlmostGorenstein => expect(
                self.almost_gorenstein == self.almost_gorenstein_by_maximal,
                "e1 ≤ r(R) iff M + K ⊆ H",
                format!("e1 = {}, r = {}", self.e1, self.cm_type),
                format!("M + K ⊆ H = {}", self.almost_gorenstein_by_maximal),
            ),
            Check::TraceDual => expect(
                self.canred_le2 == self.trace_iso_dual,
                "can_red ≤ 2 iff tr(ω) ≅ H - K",
                format!("can_red = {}", self.can_red),
                format!("trace = {}, H - K = {}", self.trace, self.dual),
            ),
            Check::AgNg => {
                let ng = self.nearly_gorenstein;
                expect(
                    self.almost_gorenstein == (ng && self.canred_le2),
                    "AG iff NG and can_red ≤ 2",
                    format!("AG = {}", self.almost_gorenstein),
                    format!("NG = {ng}, can_red = {}", self.can_red),
                );
                expect(
                    self.almost_gorenstein == (ng && self.quotient_gorenstein()),
                    "AG iff NG and R/(H - B) Gorenstein",
                    format!("AG = {}", self.almost_gorenstein),
                    format!("NG = {ng}, type(R/(H - B)) = {:?}", self.quotient_type),
                );
            }
            Check::Idealization => unreachable!("handled above"),
        }
        Ok(())
    }

    pub fn to_json(&self) -> ClassificationJson {
        ClassificationJson {
            semigroup: SemigroupJson::from(&*self.semigroup),
            can_red: self.can_red,
            e0: self.e0,
            e1: self.e1,
            cm_type: self.cm_type,
            genus: self.semigroup.genus(),
            gorenstein: self.gorenstein,
            almost_gorenstein: self.almost_gorenstein,
            nearly_gorenstein: self.nearly_gorenstein,
            canred_le2: self.canred_le2,
            canonical: self.canonical.to_json(),
            trace: self.trace.to_json(),
            blow_up: self.blow_up.to_json(),
            hilbert: self.hilbert.clone(),
        }
    }
}

/// Cross-checks run by [`classify`].
pub const CLASSIFY_CHECKS: [Check; 6] = [
    Check::Gorenstein,
    Check::TraceDual,
    Check::Hilbert,
    Check::MultiplicityBound,
    Check::AlmostGorenstein,
    Check::AgNg,
];

/// Full report; any failed cross-check is returned as [`Error::TheoremViolation`].
pub fn classify(h: &Arc<NumericalSemigroup>) -> Result<ClassificationReport> {
    let report = ClassificationReport::compute(h)?;
    match report.violations(&CLASSIFY_CHECKS)?.into_iter().next() {
        Some(v) => Err(Error::TheoremViolation(Box::new(v))),
        None => Ok(report),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub semigroup: SemigroupJson,
    pub can_red: usize,
    pub e0: i64,
    pub e1: i64,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub genus: i64,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub canred_le2: bool,
    pub canonical: IdealJson,
    pub trace: IdealJson,
    pub blow_up: IdealJson,
    pub hilbert: HilbertTable,
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
    fn canonical_ideal_examples() {
        let p = h(&[3, 4, 5]);
        assert_eq!(canonical_ideal(&p), id(&p, &[0, 1]));
        let q = h(&[2, 3]);
        assert_eq!(canonical_ideal(&q), RelativeIdeal::unit(&q));
        let r = h(&[4, 5, 11]);
        let k = canonical_ideal(&r);
        assert_eq!(k, id(&r, &[0, 1]));
        assert!([2, 3, 7].iter().all(|&z| !k.contains(z)));
        let z = h(&[1]);
        assert_eq!(canonical_ideal(&z), RelativeIdeal::unit(&z));
    }

    #[test]
    fn can_red_examples() {
        assert_eq!(can_red(&h(&[3, 4, 5])).unwrap(), 2);
        assert_eq!(can_red(&h(&[2, 3])).unwrap(), 0);
        assert_eq!(can_red(&h(&[4, 5, 11])).unwrap(), 3);
        assert_eq!(can_red(&h(&[1])).unwrap(), 0);
    }

    #[test]
    fn blow_up_examples() {
        let p = h(&[3, 4, 5]);
        assert_eq!(blow_up(&canonical_ideal(&p)).unwrap(), RelativeIdeal::nonnegative(&p));
        let q = h(&[2, 5]);
        let unit = RelativeIdeal::unit(&q);
        assert_eq!(blow_up(&unit).unwrap(), unit);
        let r = h(&[4, 5, 11]);
        assert_eq!(blow_up(&canonical_ideal(&r)).unwrap(), RelativeIdeal::nonnegative(&r));
        // blow-up of the maximal ideal of ⟨3,5⟩ is ⟨2,3⟩
        let s = h(&[3, 5]);
        let b = blow_up(&RelativeIdeal::maximal(&s)).unwrap();
        assert_eq!(b, id(&s, &[0, 2, 3, 4]));
        assert!(b.is_semigroup());
    }

    #[test]
    fn ratliff_rush_examples() {
        let p = h(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&p);
        assert_eq!(ratliff_rush(&m).unwrap(), m);
        let unit = RelativeIdeal::unit(&p);
        assert_eq!(ratliff_rush(&unit).unwrap(), unit);
        let k = canonical_ideal(&p);
        assert!(matches!(ratliff_rush(&k), Err(Error::NotIntegral)));
    }

    #[test]
    fn reduction_number_examples() {
        let p = h(&[3, 4, 5]);
        assert_eq!(reduction_number(&canonical_ideal(&p)).unwrap(), 2);
        assert_eq!(reduction_number(&id(&p, &[7])).unwrap(), 0);
        let q = h(&[2, 3]);
        assert_eq!(reduction_number(&RelativeIdeal::maximal(&q)).unwrap(), 1);
    }

    #[test]
    fn hilbert_examples() {
        let t = hilbert_table(&h(&[3, 4, 5]), 6).unwrap();
        assert_eq!(t.e0, 3);
        assert_eq!(t.e1, 2);
        assert_eq!(t.values, vec![0, 2, 4, 7, 10, 13, 16]);
        assert_eq!(t.stabilization, 2);

        let t = hilbert_table(&h(&[2, 3]), 4).unwrap();
        assert_eq!(t.e0, 2);
        assert_eq!(t.e1, 0);
        assert_eq!(t.values, vec![0, 2, 4, 6, 8]);
        assert_eq!(t.stabilization, 0);

        assert_eq!(hilbert_table(&h(&[4, 5, 11]), 8).unwrap().stabilization, 3);
        assert!(matches!(
            hilbert_table(&h(&[4, 5, 11]), 3),
            Err(Error::NMaxTooSmall { .. })
        ));
    }

    #[test]
    fn trace_examples() {
        let p = h(&[3, 4, 5]);
        assert_eq!(trace_of_canonical(&p), RelativeIdeal::maximal(&p));
        let q = h(&[2, 3]);
        assert_eq!(trace_of_canonical(&q), RelativeIdeal::unit(&q));
        let r = h(&[4, 5, 11]);
        // H - K = {4, 8, 9, …} and 4 + K ∋ 4, 5; 10 + 1 = 11
        assert_eq!(trace_of_canonical(&r), RelativeIdeal::maximal(&r));
    }

    #[test]
    fn quotient_type_examples() {
        let p = h(&[3, 4, 5]);
        assert_eq!(type_of_quotient(&RelativeIdeal::maximal(&p)).unwrap(), 1);
        let q = h(&[2, 3]);
        // R/M^2 for embedding dimension 2: socle M/M^2 = {2, 3}
        assert_eq!(type_of_quotient(&id(&q, &[4, 5])).unwrap(), 2);
        assert_eq!(type_of_quotient(&id(&p, &[6, 7, 8])).unwrap(), 3);
        assert!(matches!(
            type_of_quotient(&RelativeIdeal::unit(&p)),
            Err(Error::ZeroQuotient)
        ));
        assert!(matches!(
            type_of_quotient(&canonical_ideal(&p)),
            Err(Error::NotIntegral)
        ));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&h(&[3, 4, 5])).unwrap();
        assert!(!r.gorenstein && r.almost_gorenstein && r.nearly_gorenstein);
        assert_eq!(r.can_red, 2);
        let r = classify(&h(&[2, 3])).unwrap();
        assert!(r.gorenstein && r.almost_gorenstein && r.nearly_gorenstein && r.canred_le2);
        let r = classify(&h(&[4, 5, 11])).unwrap();
        assert!(!r.almost_gorenstein && !r.canred_le2 && r.nearly_gorenstein);
        assert_eq!(r.can_red, 3);
        let r = classify(&h(&[1])).unwrap();
        assert!(r.gorenstein);
        assert_eq!(r.trace, RelativeIdeal::unit(&r.semigroup));
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }
}

//! Enumeration of all numerical semigroups up to a given genus, and the survey
//! harness that runs the classification cross-checks over that population.
//!
//! Semigroups are nodes of the genus tree rooted at `ℤ≥0`: the children of `S`
//! are `S \ {g}` for each minimal generator `g > frobenius(S)`. Every numerical
//! semigroup of genus `γ` appears exactly once, at depth `γ`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{Check, ClassificationReport, Violation};
use crate::semigroup::NumericalSemigroup;

/// Largest supported genus bound. Keeps every minimal generator below 128.
pub const MAX_GENUS: i64 = 30;

/// Tree node: bit `i` of `mask` is set iff `i ∈ S`, for `0 ≤ i < 128`.
#[derive(Clone, Copy, Debug)]
struct Node {
    mask: u128,
    frobenius: i64,
    genus: i64,
}

impl Node {
    fn root() -> Self {
        Node {
            mask: u128::MAX,
            frobenius: -1,
            genus: 0,
        }
    }

    fn multiplicity(&self) -> i64 {
        (self.mask & !1).trailing_zeros() as i64
    }

    fn generators(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let limit = (self.frobenius + m).max(m);
        let nonzero = self.mask & !1;
        let mut sums = 0u128;
        let mut rest = nonzero;
        while rest != 0 {
            let y = rest.trailing_zeros() as i64;
            if y > limit {
                break;
            }
            sums |= nonzero << y;
            rest &= rest - 1;
        }
        let gens = nonzero & !sums;
        (1..=limit).filter(|&x| gens >> x & 1 == 1).collect()
    }

    /// Children in increasing order of the removed generator.
    fn children(&self) -> impl Iterator<Item = Node> + '_ {
        let f = self.frobenius;
        let genus = self.genus + 1;
        let mask = self.mask;
        self.generators()
            .into_iter()
            .filter(move |&g| g > f)
            .map(move |g| Node {
                mask: mask & !(1u128 << g),
                frobenius: g,
                genus,
            })
    }

    fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(&self.generators()).expect("tree nodes are numerical semigroups")
    }
}

fn check_guard(genus_max: i64) -> Result<()> {
    if (0..=MAX_GENUS).contains(&genus_max) {
        Ok(())
    } else {
        Err(Error::GuardExceeded {
            genus_max,
            limit: MAX_GENUS,
        })
    }
}

/// Depth-first stream of every numerical semigroup of genus `≤ genus_max`.
pub struct GenusTree {
    genus_max: i64,
    stack: Vec<Node>,
}

impl GenusTree {
    fn from_node(node: Node, genus_max: i64) -> Self {
        GenusTree {
            genus_max,
            stack: vec![node],
        }
    }

    fn next_node(&mut self) -> Option<Node> {
        let node = self.stack.pop()?;
        if node.genus < self.genus_max {
            let mut kids: Vec<Node> = node.children().collect();
            kids.reverse();
            self.stack.extend(kids);
        }
        Some(node)
    }
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        self.next_node().map(|n| n.semigroup())
    }
}

pub fn genus_tree(genus_max: i64) -> Result<GenusTree> {
    check_guard(genus_max)?;
    Ok(GenusTree::from_node(Node::root(), genus_max))
}

/// Number of numerical semigroups of each genus `0..=genus_max`.
pub fn census(genus_max: i64) -> Result<Vec<u64>> {
    check_guard(genus_max)?;
    let mut counts = vec![0u64; genus_max as usize + 1];
    let mut tree = GenusTree::from_node(Node::root(), genus_max);
    while let Some(n) = tree.next_node() {
        counts[n.genus as usize] += 1;
    }
    Ok(counts)
}

/// One CSV row of a survey.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurveyRow {
    pub genus: i64,
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub cm_type: usize,
    pub can_red: usize,
    pub e0: i64,
    pub e1: i64,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub gorenstein: u64,
    pub almost_gorenstein_not_gorenstein: u64,
    pub nearly_gorenstein_not_almost: u64,
    pub neither: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub genus_max: i64,
    pub total: u64,
    pub per_genus: Vec<u64>,
    pub checks: Vec<Check>,
    pub check_visits: BTreeMap<Check, u64>,
    pub counts: ClassCounts,
    pub can_red_histogram: BTreeMap<usize, u64>,
    /// Largest `can_red - (multiplicity - 1)` seen; never positive when the bound holds.
    pub max_bound_slack: Option<i64>,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub rows: Vec<SurveyRow>,
}

impl SurveyReport {
    fn empty(genus_max: i64, checks: &[Check]) -> Self {
        SurveyReport {
            genus_max,
            per_genus: vec![0; genus_max as usize + 1],
            checks: checks.to_vec(),
            check_visits: checks.iter().map(|&c| (c, 0)).collect(),
            ..Default::default()
        }
    }

    fn merge(mut self, other: SurveyReport) -> Self {
        self.total += other.total;
        for (a, b) in self.per_genus.iter_mut().zip(&other.per_genus) {
            *a += b;
        }
        for (c, n) in other.check_visits {
            *self.check_visits.entry(c).or_default() += n;
        }
        self.counts.gorenstein += other.counts.gorenstein;
        self.counts.almost_gorenstein_not_gorenstein +=
            other.counts.almost_gorenstein_not_gorenstein;
        self.counts.nearly_gorenstein_not_almost += other.counts.nearly_gorenstein_not_almost;
        self.counts.neither += other.counts.neither;
        for (k, n) in other.can_red_histogram {
            *self.can_red_histogram.entry(k).or_default() += n;
        }
        self.max_bound_slack = match (self.max_bound_slack, other.max_bound_slack) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.violations.extend(other.violations);
        self.rows.extend(other.rows);
        self
    }

    fn visit(&mut self, node: &Node, checks: &[Check], keep_rows: bool) {
        let h = Arc::new(node.semigroup());
        self.total += 1;
        self.per_genus[node.genus as usize] += 1;
        for c in checks {
            *self.check_visits.entry(*c).or_default() += 1;
        }
        let outcome = ClassificationReport::compute(&h)
            .and_then(|r| r.violations(checks).map(|v| (r, v)));
        let (report, violations) = match outcome {
            Ok(x) => x,
            Err(e) => {
                self.violations.push(Violation {
                    check: Check::MultiplicityBound,
                    generators: h.generators().to_vec(),
                    claim: "invariants computable within proven loop bounds".into(),
                    lhs: e.to_string(),
                    rhs: String::new(),
                });
                return;
            }
        };
        self.violations.extend(violations);

        let c = &mut self.counts;
        if report.gorenstein {
            c.gorenstein += 1;
        } else if report.almost_gorenstein {
            c.almost_gorenstein_not_gorenstein += 1;
        } else if report.nearly_gorenstein {
            c.nearly_gorenstein_not_almost += 1;
        } else {
            c.neither += 1;
        }
        *self.can_red_histogram.entry(report.can_red).or_default() += 1;
        let slack = report.can_red as i64 - (h.multiplicity() - 1);
        self.max_bound_slack = Some(self.max_bound_slack.map_or(slack, |s| s.max(slack)));
        if keep_rows {
            self.rows.push(SurveyRow {
                genus: h.genus(),
                generators: h.generators().to_vec(),
                multiplicity: h.multiplicity(),
                cm_type: report.cm_type,
                can_red: report.can_red,
                e0: report.e0,
                e1: report.e1,
                gorenstein: report.gorenstein,
                almost_gorenstein: report.almost_gorenstein,
                nearly_gorenstein: report.nearly_gorenstein,
            });
        }
    }

    fn finish(mut self) -> Self {
        self.violations.sort();
        self.rows.sort();
        self
    }

    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }

    /// Semicolon-separated rows: `generators;genus;multiplicity;type;can_red;e0;e1;gor;ag;ng`.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::WriterBuilder::new().delimiter(b';').from_writer(out);
        w.write_record([
            "generators", "genus", "multiplicity", "type", "can_red", "e0", "e1", "gor", "ag",
            "ng",
        ])?;
        for r in &self.rows {
            let gens = r
                .generators
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            w.write_record([
                gens,
                r.genus.to_string(),
                r.multiplicity.to_string(),
                r.cm_type.to_string(),
                r.can_red.to_string(),
                r.e0.to_string(),
                r.e1.to_string(),
                r.gorenstein.to_string(),
                r.almost_gorenstein.to_string(),
                r.nearly_gorenstein.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    pub genus_max: i64,
    pub checks: Vec<Check>,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    pub keep_rows: bool,
}

impl SurveyOptions {
    pub fn new(genus_max: i64) -> Self {
        SurveyOptions {
            genus_max,
            checks: Check::ALL.to_vec(),
            jobs: 1,
            keep_rows: false,
        }
    }
}

/// Genus at which the tree is cut into independent work units.
const SPLIT_GENUS: i64 = 6;

pub fn survey(opts: &SurveyOptions) -> Result<SurveyReport> {
    check_guard(opts.genus_max)?;
    let mut checks = opts.checks.clone();
    checks.sort();
    checks.dedup();
    let split = opts.genus_max.min(SPLIT_GENUS);

    let mut head = SurveyReport::empty(opts.genus_max, &checks);
    let mut units = Vec::new();
    let mut tree = GenusTree::from_node(Node::root(), split);
    while let Some(node) = tree.next_node() {
        if node.genus == split && split < opts.genus_max {
            units.push(node);
        } else {
            head.visit(&node, &checks, opts.keep_rows);
        }
    }

    let run_unit = |root: &Node| {
        let mut part = SurveyReport::empty(opts.genus_max, &checks);
        let mut sub = GenusTree::from_node(*root, opts.genus_max);
        while let Some(node) = sub.next_node() {
            part.visit(&node, &checks, opts.keep_rows);
        }
        part
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let parts: Vec<SurveyReport> = pool.install(|| units.par_iter().map(run_unit).collect());

    Ok(parts.into_iter().fold(head, SurveyReport::merge).finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees() {
        let all: Vec<_> = genus_tree(0).unwrap().collect();
        assert_eq!(all, vec![NumericalSemigroup::full()]);
        let gens: Vec<Vec<i64>> = genus_tree(2)
            .unwrap()
            .map(|h| h.generators().to_vec())
            .collect();
        // depth-first, children by removed generator: ⟨2,3⟩∖{2} before ⟨2,3⟩∖{3}
        assert_eq!(gens, vec![vec![1], vec![2, 3], vec![3, 4, 5], vec![2, 5]]);
        assert_eq!(census(7).unwrap(), vec![1, 1, 2, 4, 7, 12, 23, 39]);
    }

    #[test]
    fn guard() {
        assert!(matches!(genus_tree(31), Err(Error::GuardExceeded { .. })));
        assert!(matches!(genus_tree(-1), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn node_generators_match_semigroup() {
        let mut tree = GenusTree::from_node(Node::root(), 6);
        while let Some(n) = tree.next_node() {
            let h = n.semigroup();
            assert_eq!(h.frobenius(), n.frobenius);
            assert_eq!(h.genus(), n.genus);
            for z in 0..128 {
                assert_eq!(h.contains(z), n.mask >> z & 1 == 1);
            }
        }
    }

    #[test]
    fn trivial_survey() {
        let r = survey(&SurveyOptions::new(0)).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.counts.gorenstein, 1);
        assert!(r.violations.is_empty());
    }
}

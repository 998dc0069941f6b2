//! The monomial ideal of independent sets, its descending generator order,
//! and the prefix-colon (linear quotient) check.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indep::enumerate_independent_sets;
use crate::monomial::{colon_of_generators, MonomialIdeal, SquarefreeMonomial, Var};

/// `phi(r_S) = prod_{i in S} s_i * prod_{i not in S} t_i`.
pub fn phi(g: &Graph, set: &VertexSet) -> Result<SquarefreeMonomial> {
    if !g.is_independent(set) {
        let members: Vec<usize> = set.iter().map(|v| v + 1).collect();
        return Err(Error::NotIndependent(format!("{members:?}")));
    }
    Ok(SquarefreeMonomial::new(
        set.clone(),
        g.vertices().difference(set),
    ))
}

/// Generators `m_1, m_2, ...` paired with their independent sets, listed so
/// that each entry is strictly smaller than the previous one: `s`-degree
/// increases, or stays equal while the `s`-part drops in lex order with
/// `s_1 > s_2 > ... > s_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorOrder {
    n: usize,
    entries: Vec<(VertexSet, SquarefreeMonomial)>,
}

impl GeneratorOrder {
    /// Validates strict descent and that the first entry is the empty set.
    pub fn new(n: usize, entries: Vec<(VertexSet, SquarefreeMonomial)>) -> Result<Self> {
        if entries.first().is_none_or(|(s, _)| !s.is_empty()) {
            return Err(Error::Consistency("order must start with the empty set".into()));
        }
        for pair in entries.windows(2) {
            let (a, b) = (&pair[0].0, &pair[1].0);
            let descends = a.len() < b.len() || (a.len() == b.len() && a < b);
            if !descends {
                return Err(Error::Consistency(format!(
                    "order is not strictly descending at {a:?} -> {b:?}"
                )));
            }
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(VertexSet, SquarefreeMonomial)] {
        &self.entries
    }

    pub fn monomials(&self) -> Vec<SquarefreeMonomial> {
        self.entries.iter().map(|(_, m)| m.clone()).collect()
    }
}

/// Builds `I` together with its generators in descending order.
pub fn ideal_of_independent_sets(g: &Graph) -> (MonomialIdeal, GeneratorOrder) {
    let entries: Vec<_> = enumerate_independent_sets(g)
        .map(|set| {
            let m = SquarefreeMonomial::new(set.clone(), g.vertices().difference(&set));
            (set, m)
        })
        .collect();
    let order = GeneratorOrder::new(g.n(), entries)
        .expect("enumeration emits the descending generator order");
    let ideal = MonomialIdeal::from_generators(order.monomials());
    debug_assert_eq!(ideal.len(), order.len());
    (ideal, order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientViolation {
    /// 1-based position in the order.
    pub index: usize,
    pub expected: Vec<String>,
    pub found: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientReport {
    /// Number of colon ideals computed (`len - 1`).
    pub checked: usize,
    /// Number of variables in each prefix colon, `set(m_1) = 0` first. For a
    /// violating index this is the generator count of the colon.
    pub set_sizes: Vec<usize>,
    pub violations: Vec<QuotientViolation>,
}

impl LinearQuotientReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Computes `(m_1, ..., m_{i-1}) : m_i` for every `i > 1` and checks it is
/// generated by exactly `{ t_r : r in S_i }`.
pub fn verify_linear_quotients(order: &GeneratorOrder) -> LinearQuotientReport {
    let gens = order.monomials();
    let results: Vec<(usize, Option<QuotientViolation>)> = (1..gens.len())
        .into_par_iter()
        .map(|i| {
            let colon = colon_of_generators(&gens[..i], &gens[i]);
            let expected = MonomialIdeal::from_vars(order.entries[i].0.iter().map(Var::T));
            let violation = (!colon.is_linear() || colon != expected).then(|| QuotientViolation {
                index: i + 1,
                expected: expected.gens().iter().map(ToString::to_string).collect(),
                found: colon.gens().iter().map(ToString::to_string).collect(),
            });
            (colon.len(), violation)
        })
        .collect();
    let mut set_sizes = vec![0];
    let mut violations = Vec::new();
    for (size, violation) in results {
        set_sizes.push(size);
        violations.extend(violation);
    }
    LinearQuotientReport {
        checked: gens.len().saturating_sub(1),
        set_sizes,
        violations,
    }
}

/// `|set(m_i)|` for each generator, read off the prefix colons.
pub fn set_sizes(order: &GeneratorOrder) -> Result<Vec<usize>> {
    let report = verify_linear_quotients(order);
    match report.violations.first() {
        None => Ok(report.set_sizes),
        Some(v) => Err(Error::Consistency(format!(
            "prefix colon at index {} is {:?}, expected {:?}",
            v.index, v.found, v.expected
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn rendered(order: &GeneratorOrder) -> Vec<String> {
        order.monomials().iter().map(ToString::to_string).collect()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn phi_examples() {
        let p2 = build_family(FamilySpec::Path(2)).unwrap();
        assert_eq!(phi(&p2, &set(&[1])).unwrap().to_string(), "s1*t2");
        let p3 = build_family(FamilySpec::Path(3)).unwrap();
        assert_eq!(phi(&p3, &set(&[])).unwrap().to_string(), "t1*t2*t3");
        assert_eq!(phi(&p3, &set(&[1, 3])).unwrap().to_string(), "s1*s3*t2");
        assert_eq!(phi(&p3, &set(&[1, 3])).unwrap().degree(), 3);
        assert!(matches!(phi(&p3, &set(&[1, 2])), Err(Error::NotIndependent(_))));
    }

    #[test]
    fn generator_orders() {
        let p2 = build_family(FamilySpec::Path(2)).unwrap();
        let (ideal, order) = ideal_of_independent_sets(&p2);
        assert_eq!(rendered(&order), ["t1*t2", "s1*t2", "s2*t1"]);
        assert_eq!(ideal.len(), 3);

        let k1 = build_family(FamilySpec::Complete(1)).unwrap();
        assert_eq!(rendered(&ideal_of_independent_sets(&k1).1), ["t1", "s1"]);

        let p3 = build_family(FamilySpec::Path(3)).unwrap();
        let order = ideal_of_independent_sets(&p3).1;
        let r = rendered(&order);
        assert_eq!(r.len(), 5);
        assert_eq!(r.first().unwrap(), "t1*t2*t3");
        assert_eq!(r.last().unwrap(), "s1*s3*t2");
    }

    #[test]
    fn order_rejects_non_descending() {
        let m = SquarefreeMonomial::one();
        assert!(GeneratorOrder::new(1, vec![(set(&[1]), m.clone())]).is_err());
        assert!(GeneratorOrder::new(2, vec![
            (set(&[]), m.clone()),
            (set(&[2]), m.clone()),
            (set(&[1]), m.clone()),
        ])
        .is_err());
        assert!(GeneratorOrder::new(2, vec![(set(&[]), m.clone()), (set(&[1]), m.clone()), (set(&[1]), m)]).is_err());
    }

    #[test]
    fn p2_prefix_colons() {
        let p2 = build_family(FamilySpec::Path(2)).unwrap();
        let order = ideal_of_independent_sets(&p2).1;
        let report = verify_linear_quotients(&order);
        assert!(report.passed());
        assert_eq!(report.checked, 2);
        assert_eq!(report.set_sizes, [0, 1, 1]);
    }

    #[test]
    fn set_size_examples() {
        let p3 = build_family(FamilySpec::Path(3)).unwrap();
        assert_eq!(set_sizes(&ideal_of_independent_sets(&p3).1).unwrap(), [0, 1, 1, 1, 2]);
        let k5 = build_family(FamilySpec::Complete(5)).unwrap();
        assert_eq!(set_sizes(&ideal_of_independent_sets(&k5).1).unwrap(), [0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn ascending_order_is_rejected_by_the_check() {
        // Put {1,3} ahead of {3}: the colon at {3} picks up s_1.
        let p3 = build_family(FamilySpec::Path(3)).unwrap();
        let order = ideal_of_independent_sets(&p3).1;
        let mut entries = order.entries().to_vec();
        entries.swap(3, 4);
        let bogus = GeneratorOrder { n: 3, entries };
        let report = verify_linear_quotients(&bogus);
        assert!(!report.passed());
        assert!(set_sizes(&bogus).is_err());
    }
}

//! Algebraic invariants of the ideal of independent sets, read off the graph
//! and its independence polynomial.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::indep::{binomial, independence_polynomial, IndependencePolynomial};
use crate::monomial::{colon_of_generators, MonomialIdeal, SquarefreeMonomial, Var};

/// A minimal prime of `I`: `(s_i, t_i)` for a vertex or `(t_i, t_j)` for an
/// edge `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeComponent {
    Vertex(usize),
    Edge(usize, usize),
}

impl PrimeComponent {
    pub fn vars(&self) -> [Var; 2] {
        match *self {
            PrimeComponent::Vertex(i) => [Var::S(i), Var::T(i)],
            PrimeComponent::Edge(i, j) => [Var::T(i), Var::T(j)],
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_vars(self.vars())
    }

    /// Product of the two variables: the matching generator of the dual.
    pub fn dual_generator(&self) -> SquarefreeMonomial {
        SquarefreeMonomial::from_vars(self.vars())
    }
}

impl fmt::Display for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.vars();
        write!(f, "({a},{b})")
    }
}

impl Serialize for PrimeComponent {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let [a, b] = self.vars();
        [a.to_string(), b.to_string()].serialize(ser)
    }
}

/// Vertex primes in vertex order, then edge primes in lexicographic order.
pub fn primary_decomposition(g: &Graph) -> Vec<PrimeComponent> {
    (0..g.n())
        .map(PrimeComponent::Vertex)
        .chain(g.edges().into_iter().map(|(i, j)| PrimeComponent::Edge(i, j)))
        .collect()
}

/// `beta_i(I) = sum_k s_k C(k, i)` for `0 <= i <= alpha`.
pub fn betti_numbers(poly: &IndependencePolynomial) -> Vec<BigUint> {
    let alpha = poly.degree();
    (0..=alpha)
        .map(|i| {
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(k, s)| s * binomial(k as u64, i as u64))
                .sum()
        })
        .collect()
}

/// `beta_i(I) = sum_u C(|set(u)|, i)` over the generators of an ideal with
/// linear quotients, trailing zeros dropped.
pub fn betti_numbers_from_set_sizes(sizes: &[usize]) -> Vec<BigUint> {
    let top = sizes.iter().copied().max().unwrap_or(0);
    (0..=top)
        .map(|i| {
            sizes
                .iter()
                .map(|&k| binomial(k as u64, i as u64))
                .sum()
        })
        .collect()
}

/// `projdim(T/I) = alpha(G) + 1`.
pub fn projective_dimension(poly: &IndependencePolynomial) -> usize {
    poly.degree() + 1
}

/// `reg(I) = |V(G)|`.
pub fn regularity(g: &Graph) -> usize {
    g.n()
}

/// `dim(T/I)`: the `2n` variables minus the smallest prime height.
pub fn krull_dimension(g: &Graph) -> usize {
    let min_height = primary_decomposition(g)
        .iter()
        .map(|p| p.vars().len())
        .min()
        .expect("every graph has at least one vertex prime");
    let dim = 2 * g.n() - min_height;
    assert_eq!(dim, 2 * g.n() - 2, "Krull dimension must be 2n - 2");
    dim
}

/// `depth(T/I) = 2n - projdim(T/I)` by Auslander–Buchsbaum.
pub fn depth(g: &Graph, poly: &IndependencePolynomial) -> usize {
    2 * g.n() - projective_dimension(poly)
}

/// Cohen–Macaulay exactly for complete graphs. Cross-checked against
/// `depth == dim`, which holds iff `alpha(G) = 1`.
pub fn is_cohen_macaulay(g: &Graph) -> bool {
    let complete = g.is_complete();
    let poly = independence_polynomial(g);
    let by_depth = depth(g, &poly) == krull_dimension(g);
    assert_eq!(complete, by_depth, "completeness and depth criterion disagree");
    complete
}

/// `I^∨ = (s_i t_i : i in V) + (t_i t_j : {i,j} in E)`.
pub fn alexander_dual(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        primary_decomposition(g)
            .iter()
            .map(PrimeComponent::dual_generator),
    )
}

/// Outcome of a linear-quotient order search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientOrderSearch {
    Found(Vec<SquarefreeMonomial>),
    /// The search space was exhausted: no order has linear quotients.
    NoneExists,
    /// Every restart ran out of budget.
    Undecided,
}

/// Tri-state answer for the dual's linear resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualResolution {
    Linear,
    NotLinear,
    Undecided,
}

impl DualResolution {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            DualResolution::Linear => Some(true),
            DualResolution::NotLinear => Some(false),
            DualResolution::Undecided => None,
        }
    }
}

impl Serialize for DualResolution {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self.as_bool() {
            Some(b) => ser.serialize_bool(b),
            None => ser.serialize_str("undecided"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Search nodes per restart before giving up on that restart.
    pub node_budget: u64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: 2_000_000,
            restarts: 4,
            seed: 0x5eed,
        }
    }
}

struct OrderSearch<'a> {
    gens: &'a [SquarefreeMonomial],
    candidates: Vec<usize>,
    dead: HashSet<VertexSet>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found(Vec<usize>),
    Dead,
    OutOfBudget,
}

impl OrderSearch<'_> {
    // The prefix colon depends only on which generators are in the prefix,
    // so failed prefixes are memoized as sets.
    fn extend(&mut self, chosen: &mut Vec<usize>, used: &mut VertexSet) -> Step {
        if chosen.len() == self.gens.len() {
            return Step::Found(chosen.clone());
        }
        if self.dead.contains(used) {
            return Step::Dead;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let prefix: Vec<SquarefreeMonomial> = chosen.iter().map(|&i| self.gens[i].clone()).collect();
        for idx in 0..self.candidates.len() {
            let j = self.candidates[idx];
            if used.contains(j) {
                continue;
            }
            if !prefix.is_empty() && !colon_of_generators(&prefix, &self.gens[j]).is_linear() {
                continue;
            }
            chosen.push(j);
            used.insert(j);
            let step = self.extend(chosen, used);
            chosen.pop();
            used.remove(j);
            match step {
                Step::Dead => {}
                other => return other,
            }
        }
        self.dead.insert(used.clone());
        Step::Dead
    }
}

/// Looks for an order of the minimal generators in which every prefix colon
/// is generated by variables. A completed search is exact; only budget
/// exhaustion on every restart yields `Undecided`.
pub fn find_linear_quotient_order(ideal: &MonomialIdeal, config: SearchConfig) -> QuotientOrderSearch {
    let gens = ideal.gens();
    if gens.is_empty() {
        return QuotientOrderSearch::Found(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for restart in 0..config.restarts.max(1) {
        let mut candidates: Vec<usize> = (0..gens.len()).collect();
        if restart > 0 {
            candidates.shuffle(&mut rng);
        }
        let mut search = OrderSearch {
            gens,
            candidates,
            dead: HashSet::new(),
            nodes: 0,
            budget: config.node_budget,
        };
        match search.extend(&mut Vec::new(), &mut VertexSet::new()) {
            Step::Found(order) => {
                return QuotientOrderSearch::Found(order.into_iter().map(|i| gens[i].clone()).collect())
            }
            Step::Dead => return QuotientOrderSearch::NoneExists,
            Step::OutOfBudget => {}
        }
    }
    QuotientOrderSearch::Undecided
}

/// Whether `I^∨` has linear quotients, which for an ideal generated in
/// degree 2 is the same as having a linear resolution.
pub fn dual_has_linear_resolution(g: &Graph) -> DualResolution {
    dual_has_linear_resolution_with(g, SearchConfig::default())
}

pub fn dual_has_linear_resolution_with(g: &Graph, config: SearchConfig) -> DualResolution {
    match find_linear_quotient_order(&alexander_dual(g), config) {
        QuotientOrderSearch::Found(_) => DualResolution::Linear,
        QuotientOrderSearch::NoneExists => DualResolution::NotLinear,
        QuotientOrderSearch::Undecided => DualResolution::Undecided,
    }
}

fn serialize_big<S: Serializer>(v: &[BigUint], ser: S) -> Result<S::Ok, S::Error> {
    crate::json::big_numbers(v).serialize(ser)
}

fn serialize_monomials<S: Serializer>(v: &[SquarefreeMonomial], ser: S) -> Result<S::Ok, S::Error> {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(ser)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    #[serde(rename = "betti", serialize_with = "serialize_big")]
    pub betti_numbers: Vec<BigUint>,
    #[serde(rename = "projdim_quotient")]
    pub projdim_quotient: usize,
    pub regularity: usize,
    #[serde(rename = "krull_dim")]
    pub krull_dim: usize,
    pub cohen_macaulay: bool,
    pub primes: Vec<PrimeComponent>,
    #[serde(serialize_with = "serialize_monomials")]
    pub dual_gens: Vec<SquarefreeMonomial>,
    #[serde(rename = "dual_linear_resolution")]
    pub dual_has_linear_resolution: DualResolution,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Self {
        Self::compute_with(g, SearchConfig::default())
    }

    pub fn compute_with(g: &Graph, config: SearchConfig) -> Self {
        let poly = independence_polynomial(g);
        let betti = betti_numbers(&poly);
        debug_assert!(betti.iter().all(|b| !b.is_zero()));
        Self {
            betti_numbers: betti,
            projdim_quotient: projective_dimension(&poly),
            regularity: regularity(g),
            krull_dim: krull_dimension(g),
            cohen_macaulay: is_cohen_macaulay(g),
            primes: primary_decomposition(g),
            dual_gens: alexander_dual(g).gens().to_vec(),
            dual_has_linear_resolution: dual_has_linear_resolution_with(g, config),
        }
    }
}

/// `sum_i (-1)^i beta_i`, as a signed value.
pub fn alternating_sum(betti: &[BigUint]) -> num_bigint::BigInt {
    betti
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let b = num_bigint::BigInt::from(b.clone());
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .sum()
}

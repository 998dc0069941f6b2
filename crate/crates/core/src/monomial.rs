//! Squarefree monomials in `K[s_i, t_i]` and monomial ideals given by
//! minimal generators.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A ring variable `s_i` or `t_i`, 0-indexed vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S(usize),
    T(usize),
}

impl Var {
    pub fn vertex(self) -> usize {
        match self {
            Var::S(i) | Var::T(i) => i,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S(i) => write!(f, "s{}", i + 1),
            Var::T(i) => write!(f, "t{}", i + 1),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("bad variable {s:?}"));
        let (kind, idx) = s.split_at_checked(1).ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match kind {
            "s" => Ok(Var::S(idx - 1)),
            "t" => Ok(Var::T(idx - 1)),
            _ => Err(bad()),
        }
    }
}

/// Product of distinct variables, stored as an s-mask and a t-mask.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    pub s: VertexSet,
    pub t: VertexSet,
}

impl SquarefreeMonomial {
    pub fn new(s: VertexSet, t: VertexSet) -> Self {
        Self { s, t }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::S(i) => Self::new(VertexSet::singleton(i), VertexSet::new()),
            Var::T(i) => Self::new(VertexSet::new(), VertexSet::singleton(i)),
        }
    }

    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        let mut m = Self::one();
        for v in vars {
            match v {
                Var::S(i) => m.s.insert(i),
                Var::T(i) => m.t.insert(i),
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.s.is_empty() && self.t.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.s.len() + self.t.len()
    }

    pub fn deg_s(&self) -> usize {
        self.s.len()
    }

    pub fn deg_t(&self) -> usize {
        self.t.len()
    }

    /// `s`-variables ascending, then `t`-variables ascending.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.s.iter().map(Var::S).chain(self.t.iter().map(Var::T))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.s.is_subset(&other.s) && self.t.is_subset(&other.t)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.s.union(&other.s), self.t.union(&other.t))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::new(self.s.intersection(&other.s), self.t.intersection(&other.t))
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Self) -> Self {
        Self::new(self.s.difference(&other.s), self.t.difference(&other.t))
    }

    /// Canonical order: by degree, then lexicographically on the variable
    /// list with `s_1 < ... < s_n < t_1 < ... < t_n`.
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.vars().cmp(other.vars()))
    }
}

pub fn monomial_divides(a: &SquarefreeMonomial, b: &SquarefreeMonomial) -> bool {
    a.divides(b)
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, v) in self.vars().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SquarefreeMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut m = Self::one();
        for part in s.split('*') {
            let before = m.degree();
            m = m.lcm(&Self::var(part.trim().parse()?));
            if m.degree() == before {
                return Err(Error::Argument(format!("repeated variable in {s:?}")));
            }
        }
        Ok(m)
    }
}

/// A squarefree monomial ideal held as its minimal generators in canonical
/// order. The unit ideal is the single generator `1`; the zero ideal has no
/// generators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    gens: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self {
            gens: vec![SquarefreeMonomial::one()],
        }
    }

    pub fn from_generators(gens: impl IntoIterator<Item = SquarefreeMonomial>) -> Self {
        Self {
            gens: minimalize(gens.into_iter().collect()),
        }
    }

    /// Ideal generated by the given variables.
    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        Self::from_generators(vars.into_iter().map(SquarefreeMonomial::var))
    }

    pub fn gens(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &SquarefreeMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Generated by variables only.
    pub fn is_linear(&self) -> bool {
        self.gens.iter().all(|g| g.degree() == 1)
    }

    /// The variables appearing in some generator, as a single monomial.
    pub fn support(&self) -> SquarefreeMonomial {
        self.gens
            .iter()
            .fold(SquarefreeMonomial::one(), |acc, g| acc.lcm(g))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Drops duplicates and every generator divisible by another, returning the
/// rest in canonical order. Degree-one generators are tracked as masks so
/// the common variable-generated case stays linear.
pub fn minimalize(mut gens: Vec<SquarefreeMonomial>) -> Vec<SquarefreeMonomial> {
    gens.sort_by(SquarefreeMonomial::canonical_cmp);
    gens.dedup();
    if gens.first().is_some_and(SquarefreeMonomial::is_one) {
        return vec![SquarefreeMonomial::one()];
    }
    let mut var_s = VertexSet::new();
    let mut var_t = VertexSet::new();
    let mut kept: Vec<SquarefreeMonomial> = Vec::with_capacity(gens.len());
    let mut first_wide = 0;
    for g in gens {
        if !g.s.is_disjoint(&var_s) || !g.t.is_disjoint(&var_t) {
            continue;
        }
        if g.degree() == 1 {
            var_s = var_s.union(&g.s);
            var_t = var_t.union(&g.t);
            kept.push(g);
            first_wide = kept.len();
            continue;
        }
        if kept[first_wide..].iter().any(|k| k.divides(&g)) {
            continue;
        }
        kept.push(g);
    }
    kept
}

/// Minimal generators of `(I : m)`, i.e. of `{ u / gcd(u, m) : u in G(I) }`.
pub fn colon_by_monomial(ideal: &MonomialIdeal, m: &SquarefreeMonomial) -> MonomialIdeal {
    colon_of_generators(ideal.gens(), m)
}

pub(crate) fn colon_of_generators(gens: &[SquarefreeMonomial], m: &SquarefreeMonomial) -> MonomialIdeal {
    MonomialIdeal::from_generators(gens.iter().map(|u| u.quotient_by_gcd(m)))
}

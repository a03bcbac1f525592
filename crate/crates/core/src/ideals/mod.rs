//! Polynomials over the rationals and small prime fields, term orders,
//! Groebner bases and the ideal operations built on them.
//!
//! Variables are indexed `0..n` and ordered `x_0 > x_1 > ...`. Ideals are
//! plain generator lists; Groebner bases are computed on demand and returned
//! as values.

mod field;
mod groebner;
mod poly;
mod toric;

pub use field::{Coeff, Field};
pub use groebner::{buchberger, buchberger_budgeted, divide_exact, normal_form, DEFAULT_PAIR_BUDGET};
pub use poly::{default_names, Monomial, Polynomial, TermJson, TermOrder};
pub use toric::{is_toric_binomial, same_generators_over_fields, toric_ideal, toric_ideal_of_lattice};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ideal of `K[x_0, ..., x_{n-1}]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    field: Field,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, field: Field, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: g.nvars() });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { nvars, field, generators })
    }

    pub fn zero(nvars: usize, field: Field) -> Ideal {
        Ideal { nvars, field, generators: Vec::new() }
    }

    pub fn unit(nvars: usize, field: Field) -> Ideal {
        Ideal { nvars, field, generators: vec![Polynomial::constant(nvars, field, 1)] }
    }

    /// Parses each string with the default variable names.
    pub fn parse(nvars: usize, field: Field, generators: &[&str]) -> Result<Ideal> {
        let names = default_names(nvars);
        let gens = generators.iter().map(|s| Polynomial::parse(s, &names, field)).collect::<Result<Vec<_>>>()?;
        Ideal::new(nvars, field, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Groebner basis for `order`.
    pub fn groebner(&self, order: &TermOrder) -> Result<Vec<Polynomial>> {
        buchberger(&self.generators, order)
    }

    pub fn groebner_budgeted(&self, order: &TermOrder, budget: usize) -> Result<Vec<Polynomial>> {
        buchberger_budgeted(&self.generators, order, budget)
    }

    /// The ideal generated by its reduced Groebner basis for `order`.
    pub fn reduced(&self, order: &TermOrder) -> Result<Ideal> {
        Ok(Ideal { generators: self.groebner(order)?, ..self.clone() })
    }

    pub fn normal_form(&self, f: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
        self.check_poly(f)?;
        normal_form(f, &self.groebner(order)?, order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        let basis = self.groebner(&TermOrder::GRevLex)?;
        Ok(normal_form(f, &basis, &TermOrder::GRevLex)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        let basis = self.groebner(&TermOrder::GRevLex)?;
        for g in &other.generators {
            if !normal_form(g, &basis, &TermOrder::GRevLex)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// A minimal generating set of a homogeneous ideal, by ascending degree.
    ///
    /// Its degrees are those of every minimal generating set.
    pub fn minimal_generators(&self) -> Result<Ideal> {
        if let Some(g) = self.generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::InvalidInput(format!("generator {} is not homogeneous", g.display_with(&default_names(self.nvars), &TermOrder::GRevLex))));
        }
        let mut candidates = self.groebner(&TermOrder::GRevLex)?;
        candidates.sort_by_key(Polynomial::total_degree);
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut basis: Vec<Polynomial> = Vec::new();
        for g in candidates {
            if !normal_form(&g, &basis, &TermOrder::GRevLex)?.is_zero() {
                kept.push(g);
                basis = buchberger(&kept, &TermOrder::GRevLex)?;
            }
        }
        Ideal::new(self.nvars, self.field, kept)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner(&TermOrder::GRevLex)?.iter().any(Polynomial::is_constant))
    }

    /// Initial ideal: leading terms of the reduced Groebner basis.
    pub fn initial_ideal(&self, order: &TermOrder) -> Result<Ideal> {
        let gens = self
            .groebner(order)?
            .iter()
            .map(|g| {
                let (m, _) = g.leading_term(order).expect("nonzero");
                Polynomial::monomial(self.nvars, self.field, m.clone(), self.field.one())
            })
            .collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `in_w(I)`: the `w`-initial forms of a Groebner basis for `w` refined by `tiebreak`.
    pub fn initial_ideal_weight(&self, weights: &[i64], tiebreak: &TermOrder) -> Result<Ideal> {
        let order = TermOrder::weight(weights.to_vec(), tiebreak.clone())?;
        let gens = self.groebner(&order)?.iter().map(|g| g.initial_form(weights)).collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.nvars, self.field, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let gens = self.generators.iter().flat_map(|f| other.generators.iter().map(move |g| f.mul(g))).collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `I ∩ K[x_i : i not in drop]`, kept in the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        if let Some(&bad) = drop.iter().find(|&&i| i >= self.nvars) {
            return Err(Error::InvalidInput(format!("variable index {bad} out of range")));
        }
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let mut w = vec![0; self.nvars];
        for &i in drop {
            w[i] = 1;
        }
        let order = TermOrder::weight(w, TermOrder::GRevLex)?;
        let gens = self.groebner(&order)?.into_iter().filter(|g| drop.iter().all(|&i| !g.uses_variable(i))).collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `I : f^∞`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(Ideal::unit(self.nvars, self.field));
        }
        let n = self.nvars;
        let t = Polynomial::var(n + 1, self.field, n);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.extend(1)).collect();
        gens.push(t.mul(&f.extend(1)).sub(&Polynomial::constant(n + 1, self.field, 1)));
        Ideal::new(n + 1, self.field, gens)?.eliminate(&[n])?.truncate(1)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(self.nvars, self.field));
        }
        let n = self.nvars;
        let t = Polynomial::var(n + 1, self.field, n);
        let one_minus_t = Polynomial::constant(n + 1, self.field, 1).sub(&t);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| t.mul(&g.extend(1))).collect();
        gens.extend(other.generators.iter().map(|g| one_minus_t.mul(&g.extend(1))));
        Ideal::new(n + 1, self.field, gens)?.eliminate(&[n])?.truncate(1)
    }

    /// `I : f = (I ∩ (f)) / f`.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(Ideal::unit(self.nvars, self.field));
        }
        let principal = Ideal::new(self.nvars, self.field, vec![f.clone()])?;
        let gens = self
            .intersect(&principal)?
            .generators
            .iter()
            .map(|g| divide_exact(g, f).expect("elements of (f) are multiples of f"))
            .collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut acc = Ideal::unit(self.nvars, self.field);
        for g in &other.generators {
            let q = self.quotient_by(g)?;
            acc = if acc.is_unit()? { q } else { acc.intersect(&q)? };
        }
        Ok(acc)
    }

    /// `I^[p]`, generated by the `p`-th powers of the generators; needs the field `F_p`.
    pub fn frobenius_power(&self, p: u32) -> Result<Ideal> {
        if self.field != Field::Prime(p) {
            return Err(Error::FieldMismatch);
        }
        let gens = self.generators.iter().map(|g| g.frobenius(p)).collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    /// The ideal read in another coefficient field.
    pub fn convert(&self, field: Field) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.convert(field)).collect::<Result<Vec<_>>>()?;
        Ideal::new(self.nvars, field, gens)
    }

    /// Drops the last `count` variables, none of which may occur.
    fn truncate(&self, count: usize) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.truncate(count)).collect();
        Ideal::new(self.nvars - count, self.field, gens)
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: f.nvars() });
        }
        Ok(())
    }

    fn check_ideal(&self, other: &Ideal) -> Result<()> {
        if other.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if other.nvars != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            nvars: self.nvars,
            field: self.field,
            generators: self.generators.iter().map(Polynomial::to_json).collect(),
            display: self.generators.iter().map(Polynomial::to_string).collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<Ideal> {
        let gens = json
            .generators
            .iter()
            .map(|terms| Polynomial::from_json(json.nvars, json.field, terms))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(json.nvars, json.field, gens)
    }
}

/// Serialized ideal; `display` is informational and ignored when reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub nvars: usize,
    pub field: Field,
    pub generators: Vec<Vec<TermJson>>,
    #[serde(default)]
    pub display: Vec<String>,
}

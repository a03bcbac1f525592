use num_bigint::BigInt;
use num_traits::Zero;

use super::field::Field;
use super::groebner::buchberger;
use super::poly::{Polynomial, TermOrder};
use super::Ideal;
use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, IntMatrix};
use crate::polyhedra::{Cone, PointConfig};

/// Toric ideal of the configuration: the kernel of `x_i -> t^{s_i}`.
///
/// Variables follow the order of the points. Computed from an integer basis
/// of the relation lattice, then saturated by the product of all variables;
/// the result is the reduced grevlex Groebner basis.
pub fn toric_ideal(config: &PointConfig, field: Field) -> Result<Ideal> {
    let m = config.len();
    let d = config.ambient_rank;
    let cols: Vec<Vec<i64>> = (0..d).map(|r| config.points.iter().map(|p| p[r]).collect()).collect();
    let a = IntMatrix::from_i64_rows(m, &cols);
    let basis = kernel_lattice(&a).to_i64();
    toric_ideal_of_lattice(m, &basis, field, positive_grading(config).as_deref())
}

/// Weights `w_i = l(s_i) > 0` for some linear form `l`, if one exists.
fn positive_grading(config: &PointConfig) -> Option<Vec<i64>> {
    if config.points.iter().any(|p| p.iter().all(|&x| x == 0)) {
        return None;
    }
    if config.is_empty() {
        return Some(Vec::new());
    }
    let cone = Cone::new(config.ambient_rank, &config.points).ok()?;
    if !cone.is_pointed() {
        return None;
    }
    let mut l = vec![0i64; config.ambient_rank];
    for f in cone.inequalities() {
        for (a, b) in l.iter_mut().zip(&f) {
            *a += b;
        }
    }
    let w: Vec<i64> = config.points.iter().map(|p| p.iter().zip(&l).map(|(x, y)| x * y).sum()).collect();
    w.iter().all(|&x| x > 0).then_some(w)
}

/// Lattice ideal `I_L : (x_1 ... x_m)^∞` for the lattice spanned by `basis`.
///
/// With a positive grading making the lattice homogeneous, saturation runs
/// one variable at a time on Groebner bases for orders in which the variable
/// is "reverse-lex last"; otherwise a tag variable is adjoined.
pub fn toric_ideal_of_lattice(nvars: usize, basis: &[Vec<i64>], field: Field, grading: Option<&[i64]>) -> Result<Ideal> {
    let mut gens = Vec::new();
    for u in basis {
        if u.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: u.len() });
        }
        let plus: Vec<u32> = u.iter().map(|&x| exponent(x.max(0))).collect::<Result<_>>()?;
        let minus: Vec<u32> = u.iter().map(|&x| exponent((-x).max(0))).collect::<Result<_>>()?;
        if plus != minus {
            gens.push(Polynomial::binomial(field, &plus, &minus));
        }
    }
    if gens.is_empty() {
        return Ok(Ideal::zero(nvars, field));
    }
    let saturated = match grading {
        Some(w) => {
            if w.len() != nvars || w.iter().any(|&x| x <= 0) {
                return Err(Error::InvalidInput("grading must be positive on every variable".into()));
            }
            for u in basis {
                if u.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() != 0 {
                    return Err(Error::InvalidInput("lattice is not homogeneous for the grading".into()));
                }
            }
            let mut current = gens;
            for k in 0..nvars {
                let mut w_rest = w.to_vec();
                w_rest[k] = 0;
                let order = TermOrder::weight(w.to_vec(), TermOrder::weight(w_rest, TermOrder::GRevLex)?)?;
                current = buchberger(&current, &order)?.iter().map(|g| strip_variable(g, k)).collect();
            }
            current
        }
        None => {
            let product = (0..nvars).fold(Polynomial::constant(nvars, field, 1), |acc, i| acc.mul(&Polynomial::var(nvars, field, i)));
            Ideal::new(nvars, field, gens)?.saturate(&product)?.generators().to_vec()
        }
    };
    Ideal::new(nvars, field, buchberger(&saturated, &TermOrder::GRevLex)?)
}

fn exponent(x: i64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::TooLarge(format!("exponent {x}")))
}

/// Divides out the largest power of `x_k` dividing `g`.
fn strip_variable(g: &Polynomial, k: usize) -> Polynomial {
    let low = g.terms().iter().map(|(m, _)| m[k]).min().unwrap_or(0);
    if low == 0 {
        return g.clone();
    }
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut m = m.clone();
            m[k] -= low;
            (m, c.clone())
        })
        .collect();
    Polynomial::from_terms(g.nvars(), g.field(), terms)
}

/// Whether `g = ±(x^a - x^b)` with disjoint supports and `S a = S b`.
pub fn is_toric_binomial(g: &Polynomial, config: &PointConfig) -> bool {
    let [(a, ca), (b, cb)] = g.terms() else {
        return false;
    };
    let f = g.field();
    if f.add(ca, cb) != f.zero() || !(ca.is_one() || cb.is_one()) {
        return false;
    }
    if a.iter().zip(b).any(|(x, y)| *x > 0 && *y > 0) || a.len() != config.len() {
        return false;
    }
    (0..config.ambient_rank).all(|r| {
        let s: BigInt = config
            .points
            .iter()
            .zip(a.iter().zip(b))
            .map(|(p, (x, y))| BigInt::from(p[r]) * (i64::from(*x) - i64::from(*y)))
            .sum();
        s.is_zero()
    })
}

/// Generators computed over the rationals, read over `F_2`, generate the
/// toric ideal computed natively over `F_2`.
pub fn same_generators_over_fields(config: &PointConfig) -> Result<bool> {
    let f2 = Field::Prime(2);
    let over_q = toric_ideal(config, Field::Rationals)?;
    let reread = over_q.convert(f2)?;
    let native = toric_ideal(config, f2)?;
    reread.same_ideal(&native)
}

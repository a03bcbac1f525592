use std::cmp::Ordering;

use super::field::{Coeff, Field};
use super::poly::{mono_coprime, mono_div, mono_divides, mono_lcm, mono_mul, Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// Default cap on the number of S-pairs Buchberger may reduce.
pub const DEFAULT_PAIR_BUDGET: usize = 1_000_000;

/// Terms sorted by descending `order`.
#[derive(Clone, Debug)]
struct Row {
    terms: Vec<(Monomial, Coeff)>,
}

impl Row {
    fn from_poly(p: &Polynomial, order: &TermOrder) -> Row {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Row { terms }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn to_poly(&self, nvars: usize, field: Field) -> Polynomial {
        Polynomial::from_terms(nvars, field, self.terms.clone())
    }

    fn make_monic(&mut self, field: Field) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = field.inv(c);
                for t in &mut self.terms {
                    t.1 = field.mul(&t.1, &inv);
                }
            }
        }
    }
}

/// `a - c * x^m * b` for order-sorted term lists.
fn sub_scaled(a: &[(Monomial, Coeff)], b: &[(Monomial, Coeff)], m: &[u32], c: &Coeff, field: Field, order: &TermOrder) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut bi = b.iter().map(|(n, d)| (mono_mul(n, m), field.mul(c, d))).peekable();
    let mut ai = a.iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ai.next().unwrap().clone()),
            (None, Some(_)) => {
                let (n, d) = bi.next().unwrap();
                out.push((n, field.neg(&d)));
            }
            (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                Ordering::Greater => out.push(ai.next().unwrap().clone()),
                Ordering::Less => {
                    let (n, d) = bi.next().unwrap();
                    out.push((n, field.neg(&d)));
                }
                Ordering::Equal => {
                    let (n, d) = bi.next().unwrap();
                    let x = ai.next().unwrap();
                    let s = field.sub(&x.1, &d);
                    if !s.is_zero() {
                        out.push((n, s));
                    }
                }
            },
        }
    }
    out
}

/// Full reduction of `terms` modulo the rows picked by `active`.
fn reduce_terms(mut terms: Vec<(Monomial, Coeff)>, rows: &[Row], active: &[usize], field: Field, order: &TermOrder) -> Vec<(Monomial, Coeff)> {
    let mut remainder = Vec::new();
    let mut start = 0;
    while start < terms.len() {
        let (m, c) = &terms[start];
        let divisor = active.iter().map(|&i| &rows[i]).find(|g| mono_divides(g.lm(), m));
        match divisor {
            Some(g) => {
                let q = mono_div(m, g.lm());
                let coef = field.mul(c, &field.inv(&g.terms[0].1));
                terms = sub_scaled(&terms[start..], &g.terms, &q, &coef, field, order);
                start = 0;
            }
            None => {
                remainder.push(terms[start].clone());
                start += 1;
            }
        }
    }
    remainder
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading monomial.
pub fn buchberger(generators: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>> {
    buchberger_budgeted(generators, order, DEFAULT_PAIR_BUDGET)
}

pub fn buchberger_budgeted(generators: &[Polynomial], order: &TermOrder, budget: usize) -> Result<Vec<Polynomial>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let (nvars, field) = (first.nvars(), first.field());
    if let TermOrder::Weight { weights, .. } = order {
        if weights.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: weights.len() });
        }
    }
    for g in generators {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: g.nvars() });
        }
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Row> = generators.iter().filter(|g| !g.is_zero()).map(|g| Row::from_poly(g, order)).collect();
    // small leading monomials first keeps the intermediate basis small
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for row in input {
        let terms = reduce_terms(row.terms, &rows, &basis, field, order);
        if terms.is_empty() {
            continue;
        }
        let mut h = Row { terms };
        h.make_monic(field);
        if h.lm().iter().all(|&e| e == 0) {
            return Ok(vec![Polynomial::constant(nvars, field, 1)]);
        }
        rows.push(h);
        update(&rows, &mut basis, &mut pairs, rows.len() - 1);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > budget {
            return Err(Error::BudgetExceeded(format!("more than {budget} S-pairs")));
        }
        let k = (0..pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs[a].lcm, &pairs[b].lcm).then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j))))
            .expect("nonempty");
        let pair = pairs.swap_remove(k);
        let s = s_polynomial(&rows[pair.i], &rows[pair.j], &pair.lcm, field, order);
        let terms = reduce_terms(s, &rows, &basis, field, order);
        if terms.is_empty() {
            continue;
        }
        let mut h = Row { terms };
        h.make_monic(field);
        if h.lm().iter().all(|&e| e == 0) {
            return Ok(vec![Polynomial::constant(nvars, field, 1)]);
        }
        rows.push(h);
        update(&rows, &mut basis, &mut pairs, rows.len() - 1);
    }

    // minimal basis, then tail reduction
    let mut minimal: Vec<usize> = basis
        .iter()
        .copied()
        .filter(|&i| !basis.iter().any(|&j| j != i && mono_divides(rows[j].lm(), rows[i].lm()) && (rows[j].lm() != rows[i].lm() || j < i)))
        .collect();
    minimal.sort_by(|&a, &b| order.cmp(rows[a].lm(), rows[b].lm()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for (pos, &i) in minimal.iter().enumerate() {
        let others: Vec<usize> = minimal.iter().copied().enumerate().filter(|&(q, _)| q != pos).map(|(_, j)| j).collect();
        let lead = rows[i].terms[0].clone();
        let tail = reduce_terms(rows[i].terms[1..].to_vec(), &rows, &others, field, order);
        let mut terms = vec![lead];
        terms.extend(tail);
        let mut r = Row { terms };
        r.make_monic(field);
        reduced.push(r.to_poly(nvars, field));
    }
    Ok(reduced)
}

fn s_polynomial(f: &Row, g: &Row, lcm: &[u32], field: Field, order: &TermOrder) -> Vec<(Monomial, Coeff)> {
    // both rows are monic
    let mf = mono_div(lcm, f.lm());
    let mg = mono_div(lcm, g.lm());
    let a: Vec<(Monomial, Coeff)> = f.terms[1..].iter().map(|(m, c)| (mono_mul(m, &mf), c.clone())).collect();
    sub_scaled(&a, &g.terms[1..], &mg, &field.one(), field, order)
}

/// Gebauer-Moeller installation of the new element `h`.
fn update(rows: &[Row], basis: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = rows[h].lm();
    let mut candidates: Vec<(usize, Monomial)> = basis.iter().map(|&g| (g, mono_lcm(lh, rows[g].lm()))).collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while let Some((g, l)) = candidates.pop() {
        let coprime = mono_coprime(lh, rows[g].lm());
        let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| mono_divides(l2, &l));
        if coprime || !dominated {
            kept.push((g, l));
        }
    }
    kept.retain(|(g, _)| !mono_coprime(lh, rows[*g].lm()));
    pairs.retain(|p| {
        !(mono_divides(lh, &p.lcm) && mono_lcm(rows[p.i].lm(), lh) != p.lcm && mono_lcm(lh, rows[p.j].lm()) != p.lcm)
    });
    for (g, l) in kept {
        pairs.push(Pair { i: g.min(h), j: g.max(h), lcm: l });
    }
    basis.retain(|&g| !mono_divides(lh, rows[g].lm()));
    basis.push(h);
}

/// Remainder of `f` modulo a Groebner basis for `order`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    if basis.iter().any(|g| g.field() != f.field()) {
        return Err(Error::FieldMismatch);
    }
    let rows: Vec<Row> = basis.iter().filter(|g| !g.is_zero()).map(|g| Row::from_poly(g, order)).collect();
    let active: Vec<usize> = (0..rows.len()).collect();
    let terms = reduce_terms(Row::from_poly(f, order).terms, &rows, &active, f.field(), order);
    Ok(Polynomial::from_terms(f.nvars(), f.field(), terms))
}

/// `f / g` when `g` divides `f` exactly.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let order = TermOrder::Lex;
    let field = f.field();
    let gr = Row::from_poly(g, &order);
    if gr.terms.is_empty() {
        return None;
    }
    let mut rem = Row::from_poly(f, &order).terms;
    let mut quotient = Vec::new();
    while let Some((m, c)) = rem.first().cloned() {
        if !mono_divides(gr.lm(), &m) {
            return None;
        }
        let q = mono_div(&m, gr.lm());
        let coef = field.mul(&c, &field.inv(&gr.terms[0].1));
        rem = sub_scaled(&rem, &gr.terms, &q, &coef, field, &order);
        quotient.push((q, coef));
    }
    Some(Polynomial::from_terms(f.nvars(), field, quotient))
}

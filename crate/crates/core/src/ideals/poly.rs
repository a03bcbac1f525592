use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::field::{Coeff, Field};
use crate::error::{Error, Result};

/// Exponent vector.
pub type Monomial = Vec<u32>;

pub(crate) fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a | b`.
pub(crate) fn mono_div(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub(crate) fn mono_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub(crate) fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| u64::from(x)).sum()
}

/// Monomial order. Variables are ordered `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    Lex,
    GrLex,
    GRevLex,
    /// Compare `w · a` first, then fall back to `tiebreak`.
    Weight { weights: Vec<i64>, tiebreak: Box<TermOrder> },
}

impl TermOrder {
    /// Weight order refined by `tiebreak`; weights must be nonnegative.
    pub fn weight(weights: Vec<i64>, tiebreak: TermOrder) -> Result<TermOrder> {
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::InvalidInput("weights of a term order must be nonnegative".into()));
        }
        Ok(TermOrder::Weight { weights, tiebreak: Box::new(tiebreak) })
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrLex => degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)),
            TermOrder::GRevLex => degree(a).cmp(&degree(b)).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Weight { weights, tiebreak } => {
                weigh(weights, a).cmp(&weigh(weights, b)).then_with(|| tiebreak.cmp(a, b))
            }
        }
    }

    /// Parses `lex`, `grlex`, `grevlex` or `weight:w1,w2,...[:tiebreak]`.
    pub fn parse(s: &str) -> Result<TermOrder> {
        let s = s.trim();
        match s {
            "lex" => return Ok(TermOrder::Lex),
            "grlex" | "deglex" => return Ok(TermOrder::GrLex),
            "grevlex" | "degrevlex" => return Ok(TermOrder::GRevLex),
            _ => {}
        }
        let rest = s
            .strip_prefix("weight:")
            .ok_or_else(|| Error::InvalidInput(format!("unknown term order {s:?}")))?;
        let (w, tie) = match rest.split_once(':') {
            Some((w, t)) => (w, TermOrder::parse(t)?),
            None => (rest, TermOrder::GRevLex),
        };
        let weights = parse_int_list(w)?;
        TermOrder::weight(weights, tie)
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::GrLex => "grlex".into(),
            TermOrder::GRevLex => "grevlex".into(),
            TermOrder::Weight { weights, tiebreak } => {
                let w: Vec<String> = weights.iter().map(i64::to_string).collect();
                format!("weight:{}:{}", w.join(","), tiebreak.name())
            }
        }
    }
}

pub(crate) fn weigh(w: &[i64], a: &[u32]) -> i64 {
    w.iter().zip(a).map(|(x, &e)| x * i64::from(e)).sum()
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad integer {t:?}"))))
        .collect()
}

/// Polynomial with coefficients in a `Field`; terms are kept sorted by
/// descending exponent vector (lexicographically), with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field) -> Polynomial {
        Polynomial { nvars, field, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, field: Field, c: i64) -> Polynomial {
        Polynomial::from_terms(nvars, field, vec![(vec![0; nvars], field.from_i64(c))])
    }

    pub fn var(nvars: usize, field: Field, i: usize) -> Polynomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Polynomial::from_terms(nvars, field, vec![(e, field.one())])
    }

    pub fn monomial(nvars: usize, field: Field, exp: Monomial, c: Coeff) -> Polynomial {
        Polynomial::from_terms(nvars, field, vec![(exp, c)])
    }

    /// `x^plus - x^minus`.
    pub fn binomial(field: Field, plus: &[u32], minus: &[u32]) -> Polynomial {
        let n = plus.len();
        Polynomial::from_terms(n, field, vec![(plus.to_vec(), field.one()), (minus.to_vec(), field.from_i64(-1))])
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(nvars: usize, field: Field, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent vector length");
            match map.get_mut(&m) {
                Some(acc) => *acc = field.add(acc, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars, field, terms }
    }

    /// Builds from terms already sorted descending by exponent and free of zeros.
    pub(crate) fn from_sorted(nvars: usize, field: Field, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial { nvars, field, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.iter().all(|&e| e == 0))
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| degree(m)).max().unwrap_or(0)
    }

    /// Homogeneous for the grading by `weights`.
    pub fn is_homogeneous_for(&self, weights: &[i64]) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| weigh(weights, m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_homogeneous_for(&vec![1; self.nvars])
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Sum of the terms of maximal weight.
    pub fn initial_form(&self, weights: &[i64]) -> Polynomial {
        let Some(top) = self.terms.iter().map(|(m, _)| weigh(weights, m)).max() else {
            return self.clone();
        };
        let terms = self.terms.iter().filter(|(m, _)| weigh(weights, m) == top).cloned().collect();
        Polynomial::from_sorted(self.nvars, self.field, terms)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial::from_sorted(self.nvars, self.field, out)
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect();
        Polynomial::from_sorted(self.nvars, self.field, terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), self.field.mul(c, d))).collect();
        Polynomial::from_sorted(self.nvars, self.field, terms)
    }

    pub fn mul_term(&self, mono: &[u32], c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let terms = self.terms.iter().map(|(m, d)| (mono_mul(m, mono), self.field.mul(c, d))).collect();
        Polynomial::from_sorted(self.nvars, self.field, terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((mono_mul(m, n), self.field.mul(c, d)));
            }
        }
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, self.field, 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c)),
        }
    }

    pub fn eval(&self, point: &[i64]) -> Coeff {
        assert_eq!(point.len(), self.nvars);
        let f = self.field;
        self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            let v = m.iter().zip(point).fold(c.clone(), |v, (&e, &x)| f.mul(&v, &f.pow(&f.from_i64(x), e)));
            f.add(&acc, &v)
        })
    }

    /// The same polynomial in a ring with `extra` more variables appended.
    pub fn extend(&self, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.extend(std::iter::repeat_n(0, extra));
                (m, c.clone())
            })
            .collect();
        Polynomial::from_sorted(self.nvars + extra, self.field, terms)
    }

    /// Drops the last `count` variables, which must not occur.
    pub fn truncate(&self, count: usize) -> Polynomial {
        let n = self.nvars - count;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert!(m[n..].iter().all(|&e| e == 0), "dropped variable occurs");
                (m[..n].to_vec(), c.clone())
            })
            .collect();
        Polynomial::from_sorted(n, self.field, terms)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[i] > 0)
    }

    /// Reinterprets the coefficients in another field.
    pub fn convert(&self, field: Field) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), field.convert(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(self.nvars, field, terms))
    }

    /// Replaces every term `c x^a` by `c^p x^{pa}`; over `F_p` this is `f^p`.
    pub fn frobenius(&self, p: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.iter().map(|e| e * p).collect(), self.field.pow(c, p)))
            .collect();
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    /// Sign normalization for binomials: the larger term under `order` gets coefficient 1.
    pub fn canonical_sign(&self, order: &TermOrder) -> Polynomial {
        self.monic(order)
    }

    fn check_ring(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
        assert_eq!(self.field, other.field, "polynomials have different coefficient fields");
    }

    /// Renders with the given variable names, terms in descending `order`.
    pub fn display_with(&self, names: &[String], order: &TermOrder) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<&(Monomial, Coeff)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { self.field.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", abs, mono.join("*")));
            }
        }
        out
    }
}

/// Default variable names: `x, y, z, t` for up to four variables, otherwise `x1, x2, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "t"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars), &TermOrder::GRevLex))
    }
}

/// JSON form of a term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

impl Polynomial {
    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms.iter().map(|(m, c)| TermJson { exp: m.clone(), coeff: c.to_string() }).collect()
    }

    pub fn from_json(nvars: usize, field: Field, terms: &[TermJson]) -> Result<Polynomial> {
        let parsed = terms
            .iter()
            .map(|t| {
                if t.exp.len() != nvars {
                    return Err(Error::DimensionMismatch { expected: nvars, got: t.exp.len() });
                }
                Ok((t.exp.clone(), parse_coeff(field, &t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(nvars, field, parsed))
    }

    /// Parses expressions such as `x^3 - y^2`, `2*x*z + 1/2*y` or `(x+y)^2`.
    pub fn parse(s: &str, names: &[String], field: Field) -> Result<Polynomial> {
        let mut p = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, names, field };
        let out = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::InvalidInput(format!("unexpected input at position {} in {s:?}", p.pos)));
        }
        Ok(out)
    }
}

fn parse_coeff(field: Field, s: &str) -> Result<Coeff> {
    let bad = || Error::InvalidInput(format!("bad coefficient {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().map_err(|_| bad())?, d.parse::<BigInt>().map_err(|_| bad())?),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
    };
    field.from_ratio(&n, &d)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
    field: Field,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                '/' => {
                    self.pos += 1;
                    let d = self.integer()?;
                    let inv = self.field.from_ratio(&BigInt::from(1), &d)?;
                    acc = acc.scale(&inv);
                }
                c if c.is_alphabetic() || c == '(' => acc = acc.mul(&self.power()?),
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| Error::InvalidInput("exponent out of range".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::InvalidInput(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::InvalidInput("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let c = self.field.from_ratio(&v, &BigInt::from(1))?;
                Ok(Polynomial::monomial(self.n(), self.field, vec![0; self.n()], c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().collect();
                // longest known name that prefixes the word, so `xy` reads as `x*y`
                let mut best: Option<usize> = None;
                for (i, name) in self.names.iter().enumerate() {
                    if word.starts_with(name.as_str()) && best.is_none_or(|b| self.names[b].len() < name.len()) {
                        best = Some(i);
                    }
                }
                let i = best.ok_or_else(|| Error::InvalidInput(format!("unknown variable in {word:?}")))?;
                self.pos = start + self.names[i].chars().count();
                Ok(Polynomial::var(self.n(), self.field, i))
            }
            other => Err(Error::InvalidInput(format!("unexpected {other:?} at position {}", self.pos))),
        }
    }
}

use alloc::{boxed::Box, collections::BTreeMap, string::String, sync::Arc, vec, vec::Vec};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::is_one;
use super::space::{Role, Var, VariableSpace};
use super::Rational;
use crate::{Error, Result};

/// Exponent vector over a [`VariableSpace`].
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared variable by variable in space order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(exps.into())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.0]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn weighted_degree(&self, space: &VariableSpace) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| u32::from(e) * space.info(Var(i)).weight)
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact polynomial with rational coefficients.
///
/// Values are immutable in spirit: every operation returns a new
/// polynomial. No zero coefficient is ever stored, so structural equality
/// is mathematical equality.
#[derive(Clone)]
pub struct Polynomial {
    space: Arc<VariableSpace>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        VariableSpace::same_space(&self.space, &other.space) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(space: &Arc<VariableSpace>) -> Self {
        Polynomial {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: &Arc<VariableSpace>, c: Rational) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(space.len()), c);
        }
        p
    }

    pub fn one(space: &Arc<VariableSpace>) -> Self {
        Self::constant(space, Rational::one())
    }

    /// The monomial `v`.
    pub fn var(space: &Arc<VariableSpace>, v: Var) -> Self {
        assert!(space.contains(v), "variable index out of range");
        let mut m = vec![0u16; space.len()];
        m[v.0] = 1;
        Self::term(space, Rational::one(), Monomial(m.into_boxed_slice()))
    }

    /// Looks a variable up by name.
    pub fn named(space: &Arc<VariableSpace>, name: &str) -> Result<Self> {
        Ok(Self::var(space, space.var(name)?))
    }

    pub fn term(space: &Arc<VariableSpace>, coeff: Rational, mono: Monomial) -> Self {
        assert_eq!(mono.0.len(), space.len(), "monomial arity mismatch");
        let mut p = Self::zero(space);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Total (unweighted) degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in the space's default grading (variable weights).
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.space))
            .max()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.space.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coefficient(&self, powers: &[(Var, u16)]) -> Rational {
        let mut m = vec![0u16; self.space.len()];
        for &(v, e) in powers {
            m[v.0] += e;
        }
        self.terms
            .get(&Monomial(m.into_boxed_slice()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if VariableSpace::same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(mono) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut out.terms, m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = Self::zero(&self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::accumulate(&mut out.terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.space);
        }
        Polynomial {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.space);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `v`.
    pub fn differentiate(&self, v: Var) -> Result<Self> {
        if !self.space.contains(v) {
            return Err(Error::UnknownVariable(alloc::format!("#{}", v.0)));
        }
        let mut out = Self::zero(&self.space);
        for (m, c) in &self.terms {
            let e = m.0[v.0];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[v.0] -= 1;
            Self::accumulate(&mut out.terms, Monomial(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Derivative with respect to a variable given by name.
    pub fn differentiate_by_name(&self, name: &str) -> Result<Self> {
        let v = self.space.var(name)?;
        self.differentiate(v)
    }

    /// Simultaneous substitution `v ↦ image` for every binding.
    ///
    /// Images must live in `target`. Variables of `self` that are not bound
    /// are carried over by name and must exist in `target`.
    pub fn substitute(&self, bindings: &[(Var, Polynomial)], target: &Arc<VariableSpace>) -> Result<Self> {
        let n = self.space.len();
        let mut images: Vec<Option<Polynomial>> = vec![None; n];
        for (v, img) in bindings {
            if !self.space.contains(*v) {
                return Err(Error::UnknownVariable(alloc::format!("#{}", v.0)));
            }
            if !VariableSpace::same_space(img.space(), target) {
                return Err(Error::SpaceMismatch);
            }
            images[v.0] = Some(img.clone());
        }
        // Variables that actually occur need an image.
        let used: Vec<bool> = (0..n)
            .map(|i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        for i in 0..n {
            if used[i] && images[i].is_none() {
                let name = self.space.name(Var(i));
                let tv = target
                    .var(name)
                    .map_err(|_| Error::UnboundVariable(name.into()))?;
                images[i] = Some(Polynomial::var(target, tv));
            }
        }
        // Powers are cached per variable.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| match img {
                Some(p) => vec![Polynomial::one(target), p.clone()],
                None => Vec::new(),
            })
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                acc = &acc * &cache[e as usize];
            }
            for (mm, cc) in acc.terms {
                Self::accumulate(&mut out.terms, mm, cc);
            }
        }
        Ok(out)
    }

    /// Rewrites `s² → 1 − c²` until the `s`-degree is at most one.
    ///
    /// `c` and `s` are the variables with roles [`Role::Cos`] and
    /// [`Role::Sin`]; a space lacking either is returned unchanged. The
    /// result is the canonical representative of `self` modulo
    /// `c² + s² − 1`.
    pub fn reduce_circle(&self) -> Self {
        let (Some(c), Some(s)) = (
            self.space.with_role(Role::Cos).next(),
            self.space.with_role(Role::Sin).next(),
        ) else {
            return self.clone();
        };
        let mut out = Self::zero(&self.space);
        for (m, coeff) in &self.terms {
            let es = m.0[s.0];
            if es < 2 {
                Self::accumulate(&mut out.terms, m.clone(), coeff.clone());
                continue;
            }
            // s^e = s^(e mod 2) (1 - c²)^(e div 2)
            let k = es / 2;
            let mut base = m.0.clone();
            base[s.0] = es % 2;
            let mut binom = Rational::one();
            for j in 0..=k {
                let mut exps = base.clone();
                exps[c.0] += 2 * j;
                let sign = if j % 2 == 0 { coeff.clone() } else { -coeff.clone() };
                Self::accumulate(&mut out.terms, Monomial(exps), sign * &binom);
                binom = binom * Rational::from_integer((k - j).into())
                    / Rational::from_integer((j + 1).into());
            }
        }
        out
    }

    /// Sum of the terms of weighted degree exactly `degree` in the default grading.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        self.filter_terms(|m| m.weighted_degree(&self.space) == degree)
    }

    /// Like [`homogeneous_part`](Self::homogeneous_part) with explicit per-variable weights.
    pub fn homogeneous_part_with(&self, degree: u32, weights: &[u32]) -> Self {
        assert_eq!(weights.len(), self.space.len());
        self.filter_terms(|m| {
            m.0.iter()
                .zip(weights)
                .map(|(&e, &w)| u32::from(e) * w)
                .sum::<u32>()
                == degree
        })
    }

    /// Keeps only terms of weighted degree at most `degree`.
    pub fn truncate(&self, degree: u32) -> Self {
        self.filter_terms(|m| m.weighted_degree(&self.space) <= degree)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True if some term involves `v`.
    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.0[v.0] > 0)
    }

    /// Floating-point evaluation; `values` is indexed by variable.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.space.len());
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for (i, &e) in m.0.iter().enumerate() {
                    for _ in 0..e {
                        t *= values[i];
                    }
                }
                t
            })
            .sum()
    }

    /// Moves the polynomial to another space whose variables it uses by name.
    pub fn rebase(&self, target: &Arc<VariableSpace>) -> Result<Self> {
        self.substitute(&[], target)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Text form: monomials in descending graded-lex order, explicit rational
/// coefficients, e.g. `2*G11^2 - 1/3*G12*p + 5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let body = monomial_text(&self.space, m);
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if is_one(&mag) {
                f.write_str(&body)?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn monomial_text(space: &VariableSpace, m: &Monomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(space.name(Var(i)));
        if e > 1 {
            out.push_str(&alloc::format!("^{e}"));
        }
    }
    out
}

impl Monomial {
    /// Text form of the monomial over `space`, empty for the unit monomial.
    pub fn to_text(&self, space: &VariableSpace) -> String {
        monomial_text(space, self)
    }
}

// Operator sugar; panics on mismatched spaces. Use the `checked_*`
// methods when operands may come from different spaces.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial space mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial space mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial space mismatch")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}

impl Mul<Rational> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Rational) -> Polynomial {
        self.scale(&rhs)
    }
}

//! Truncated multivariate Taylor polynomials at the origin.
//!
//! A [`Jet`] stores the coefficients of a polynomial in a fixed tuple of
//! variables up to a fixed total degree. Arithmetic truncates: monomials
//! whose total degree exceeds the order are dropped. All geometry in
//! [`crate::weyl`] runs on jets in the coordinates `(v, x^1..x^n, u)`.

use crate::error::JetError;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Exponent tuple of a monomial; one entry per variable.
pub type Monomial = Vec<u32>;

/// A polynomial in `vars` variables truncated at total degree `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Jet<T> {
    vars: usize,
    order: u32,
    terms: BTreeMap<Monomial, T>,
}

fn total_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl<T: Scalar> Jet<T> {
    pub fn zero(vars: usize, order: u32) -> Self {
        Self { vars, order, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, order: u32, value: T) -> Self {
        let mut jet = Self::zero(vars, order);
        if !value.is_zero() {
            jet.terms.insert(vec![0; vars], value);
        }
        jet
    }

    pub fn one(vars: usize, order: u32) -> Self {
        Self::constant(vars, order, T::one())
    }

    /// The coordinate function of variable `index`.
    pub fn variable(vars: usize, order: u32, index: usize) -> Result<Self, JetError> {
        if index >= vars {
            return Err(JetError::UnknownVariable { index, vars });
        }
        let mut jet = Self::zero(vars, order);
        if order >= 1 {
            let mut m = vec![0; vars];
            m[index] = 1;
            jet.terms.insert(m, T::one());
        }
        Ok(jet)
    }

    /// Build a jet from explicit (monomial, coefficient) pairs.
    pub fn from_terms(
        vars: usize,
        order: u32,
        terms: impl IntoIterator<Item = (Monomial, T)>,
    ) -> Self {
        let mut jet = Self::zero(vars, order);
        for (m, c) in terms {
            assert_eq!(m.len(), vars, "monomial arity mismatch");
            jet.add_term(m, c);
        }
        jet
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u32]) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Value at the origin.
    pub fn eval0(&self) -> T {
        self.coefficient(&vec![0; self.vars])
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() || total_degree(&m) > self.order {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<(), JetError> {
        if self.vars != other.vars || self.order != other.order {
            return Err(JetError::ShapeMismatch {
                vars_a: self.vars,
                order_a: self.order,
                vars_b: other.vars,
                order_b: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other).expect("jet shape mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_shape(other).expect("jet shape mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            let v = x.clone() * c.clone();
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other).expect("jet shape mismatch");
        let mut out = Self::zero(self.vars, self.order);
        for (ma, ca) in &self.terms {
            let da = total_degree(ma);
            for (mb, cb) in &other.terms {
                if da + total_degree(mb) > self.order {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Result<Self, JetError> {
        if index >= self.vars {
            return Err(JetError::UnknownVariable { index, vars: self.vars });
        }
        let mut out = Self::zero(self.vars, self.order);
        for (m, c) in &self.terms {
            let e = m[index];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm[index] = e - 1;
            let mut factor = T::zero();
            for _ in 0..e {
                factor = factor + T::one();
            }
            out.add_term(dm, c.clone() * factor);
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a non-vanishing constant term.
    pub fn invert(&self) -> Result<Self, JetError> {
        let c0 = self.eval0();
        if c0.is_zero() {
            return Err(JetError::NonInvertible);
        }
        // write self = c0 (1 - r) and expand the geometric series in r
        let inv_c0 = T::one() / c0.clone();
        let r = Self::one(self.vars, self.order).sub(&self.scale(&inv_c0));
        let mut sum = Self::one(self.vars, self.order);
        let mut power = Self::one(self.vars, self.order);
        for _ in 0..self.order {
            power = power.mul(&r);
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power);
        }
        Ok(sum.scale(&inv_c0))
    }

    /// Truncated exponential; requires a vanishing constant term.
    pub fn exp(&self) -> Result<Self, JetError> {
        if !self.eval0().is_zero() {
            return Err(JetError::ExpConstantTerm);
        }
        let mut sum = Self::one(self.vars, self.order);
        let mut power = Self::one(self.vars, self.order);
        let mut factorial = T::one();
        let mut k = T::zero();
        for _ in 1..=self.order {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            k = k + T::one();
            factorial = factorial * k.clone();
            sum = sum.add(&power.scale(&(T::one() / factorial.clone())));
        }
        Ok(sum)
    }

    /// Drop all monomials of total degree above `degree`.
    pub fn truncated(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        for (m, c) in &self.terms {
            if total_degree(m) <= degree {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Same coefficients, new truncation order (dropping what no longer fits).
    pub fn with_order(&self, order: u32) -> Self {
        let mut out = Self::zero(self.vars, order);
        for (m, c) in &self.terms {
            if total_degree(m) <= order {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Largest total degree carrying a non-zero coefficient.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| total_degree(m)).max().unwrap_or(0)
    }
}

impl<T: Scalar + std::fmt::Display> std::fmt::Display for Jet<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<String> = (0..self.vars).map(|i| format!("t{i}")).collect();
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", names[i])?,
                    _ => write!(f, "*{}^{}", names[i], e)?,
                }
            }
        }
        Ok(())
    }
}

impl<T: Scalar + std::fmt::Display> std::fmt::Debug for Jet<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Jet[{} vars, K={}]({})", self.vars, self.order, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use num_rational::BigRational;

    type QJet = Jet<BigRational>;

    fn var(vars: usize, order: u32, i: usize) -> QJet {
        QJet::variable(vars, order, i).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let t = var(1, 3, 0);
        let one = QJet::one(1, 3);
        let prod = one.add(&t).mul(&one.sub(&t));
        assert_eq!(prod, one.sub(&t.mul(&t)));
    }

    #[test]
    fn truncation_drops_high_degree() {
        let x = var(1, 1, 0);
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn square_of_trinomial() {
        // (1 + v + u)^2 at order 2 keeps every term
        let v = var(2, 2, 0);
        let u = var(2, 2, 1);
        let s = QJet::one(2, 2).add(&v).add(&u);
        let sq = s.mul(&s);
        let expected = QJet::from_terms(
            2,
            2,
            vec![
                (vec![0, 0], int(1)),
                (vec![1, 0], int(2)),
                (vec![0, 1], int(2)),
                (vec![2, 0], int(1)),
                (vec![1, 1], int(2)),
                (vec![0, 2], int(1)),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn geometric_series_inverse() {
        let t = var(1, 2, 0);
        let inv = QJet::one(1, 2).add(&t).invert().unwrap();
        let expected = QJet::from_terms(
            1,
            2,
            vec![(vec![0], int(1)), (vec![1], int(-1)), (vec![2], int(1))],
        );
        assert_eq!(inv, expected);
        assert!(t.invert().is_err());
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let v = var(3, 4, 0);
        let u = var(3, 4, 2);
        let a = QJet::one(3, 4)
            .add(&v.scale(&ratio(2, 3)))
            .add(&u.mul(&u))
            .sub(&v.mul(&u).scale(&ratio(5, 7)));
        assert_eq!(a.mul(&a.invert().unwrap()), QJet::one(3, 4));
    }

    #[test]
    fn exponential_series() {
        let t = var(1, 3, 0);
        let e = t.exp().unwrap();
        let expected = QJet::from_terms(
            1,
            3,
            vec![
                (vec![0], int(1)),
                (vec![1], int(1)),
                (vec![2], ratio(1, 2)),
                (vec![3], ratio(1, 6)),
            ],
        );
        assert_eq!(e, expected);
        assert!(QJet::one(1, 3).exp().is_err());
    }

    #[test]
    fn exponential_of_degree_two_argument() {
        // exp(-2 x u) at order 3: the square of the argument has degree 4
        // and is dropped
        let x = var(2, 3, 0);
        let u = var(2, 3, 1);
        let e = x.mul(&u).scale(&int(-2)).exp().unwrap();
        let expected =
            QJet::from_terms(2, 3, vec![(vec![0, 0], int(1)), (vec![1, 1], int(-2))]);
        assert_eq!(e, expected);
    }

    #[test]
    fn partial_derivatives() {
        // d/dv (v^3 / 3) = v^2
        let jet = QJet::from_terms(2, 4, vec![(vec![3, 0], ratio(1, 3))]);
        assert_eq!(
            jet.partial(0).unwrap(),
            QJet::from_terms(2, 4, vec![(vec![2, 0], int(1))])
        );
        // d/du of a constant vanishes
        assert!(QJet::constant(2, 4, int(5)).partial(1).unwrap().is_zero());
        // power rule with rational coefficient
        let a2 = QJet::from_terms(2, 4, vec![(vec![2, 0], ratio(2, 3))]);
        assert_eq!(
            a2.partial(0).unwrap(),
            QJet::from_terms(2, 4, vec![(vec![1, 0], ratio(4, 3))])
        );
        assert!(a2.partial(7).is_err());
    }
}

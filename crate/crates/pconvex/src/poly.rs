//! Exact sparse multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are stored as a sparse map from multi-indices to nonzero
//! `BigRational` coefficients, ordered graded-lexicographically so that
//! iteration, formatting, and hashing are deterministic. All operations are
//! pure; derivatives are plain partials `∂^α` (no `-i` factors — every
//! criterion downstream only consumes `|P^{(α)}|`, so the phase convention is
//! irrelevant).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial. Entry `j` is the power of `x_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// The unit multi-index e_j (0-based variable index).
    pub fn unit(dim: usize, var: usize) -> Self {
        let mut e = vec![0; dim];
        e[var] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total order |α| = Σ α_j.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    /// α! = Π α_j!
    pub fn factorial(&self) -> BigInt {
        let mut f = BigInt::one();
        for &a in &self.0 {
            for j in 2..=a {
                f *= BigInt::from(j);
            }
        }
        f
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiIndex {
    /// Graded-lexicographic: first by total order, then lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A point in Q^d with an f64 view for the numeric layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    coords: Vec<BigRational>,
}

impl Vector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![BigRational::zero(); dim],
        }
    }

    /// Standard basis vector e_{var+1} (0-based index).
    pub fn unit(dim: usize, var: usize) -> Self {
        let mut c = vec![BigRational::zero(); dim];
        c[var] = BigRational::one();
        Vector { coords: c }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    /// Exact lift of finite f64 coordinates (every finite f64 is rational).
    pub fn from_f64s(coords: &[f64]) -> Self {
        Vector {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_float(c).expect("finite coordinate"))
                .collect(),
        }
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coords.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dot(&self, other: &Vector) -> BigRational {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> BigRational {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, factor: &BigRational) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored zero coefficients; every multi-index has length
/// equal to `dim`. The zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<MultiIndex, BigRational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(dim);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zero(dim), c);
        }
        p
    }

    pub fn constant_i64(dim: usize, c: i64) -> Self {
        Self::constant(dim, BigRational::from_integer(c.into()))
    }

    /// The monomial x_{var+1} (0-based index).
    pub fn variable(dim: usize, var: usize) -> Result<Self> {
        if var >= dim {
            return Err(Error::VariableOutOfRange {
                index: var + 1,
                dim,
                pos: 0,
            });
        }
        let mut p = Polynomial::zero(dim);
        p.terms.insert(MultiIndex::unit(dim, var), BigRational::one());
        Ok(p)
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, BigRational)>,
    {
        let mut p = Polynomial::zero(dim);
        for (alpha, c) in terms {
            if alpha.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: alpha.len(),
                });
            }
            p.add_term(alpha, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, alpha: MultiIndex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigRational)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|a| a.order()).max()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> BigRational {
        self.terms.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Sum of absolute values of all coefficients (a coarse size measure).
    pub fn coefficient_scale(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).sum()
    }

    fn check_dim(&self, other_dim: usize) -> Result<()> {
        if self.dim != other_dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other_dim,
            });
        }
        Ok(())
    }

    /// Exact value of the polynomial at a rational point.
    pub fn evaluate(&self, point: &Vector) -> Result<BigRational> {
        self.check_dim(point.dim())?;
        // Cache coordinate powers up to the maximal per-variable exponent.
        let mut max_pow = vec![0u32; self.dim];
        for alpha in self.terms.keys() {
            for (j, &a) in alpha.0.iter().enumerate() {
                max_pow[j] = max_pow[j].max(a);
            }
        }
        let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(self.dim);
        for (j, &m) in max_pow.iter().enumerate() {
            let mut col = Vec::with_capacity(m as usize + 1);
            col.push(BigRational::one());
            for k in 1..=m {
                let prev = col[(k - 1) as usize].clone();
                col.push(prev * &point.coords()[j]);
            }
            powers.push(col);
        }
        let mut acc = BigRational::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for (j, &a) in alpha.0.iter().enumerate() {
                if a > 0 {
                    term *= &powers[j][a as usize];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Plain partial derivative ∂^α P.
    pub fn derivative(&self, alpha: &MultiIndex) -> Result<Polynomial> {
        self.check_dim(alpha.len())?;
        let mut out = Polynomial::zero(self.dim);
        'term: for (beta, c) in &self.terms {
            let mut coeff = c.clone();
            let mut gamma = beta.clone();
            for j in 0..self.dim {
                let a = alpha.0[j];
                let b = beta.0[j];
                if b < a {
                    continue 'term;
                }
                // ∂^a x^b = b (b-1) … (b-a+1) x^{b-a}
                for k in 0..a {
                    coeff *= BigRational::from_integer(BigInt::from(b - k));
                }
                gamma.0[j] = b - a;
            }
            out.add_term(gamma, coeff);
        }
        Ok(out)
    }

    /// All first partials (∂₁P, …, ∂_dP).
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.dim)
            .map(|j| {
                self.derivative(&MultiIndex::unit(self.dim, j))
                    .expect("matching dimension")
            })
            .collect()
    }

    /// Exact gradient vector ∇P(ξ).
    pub fn gradient_at(&self, point: &Vector) -> Result<Vector> {
        let grads = self.gradient();
        let mut coords = Vec::with_capacity(self.dim);
        for g in &grads {
            coords.push(g.evaluate(point)?);
        }
        Ok(Vector::new(coords))
    }

    /// The shifted polynomial x ↦ P(x + ξ), computed exactly.
    ///
    /// The coefficient of x^α in the result equals P^{(α)}(ξ)/α!.
    pub fn taylor_shift(&self, xi: &Vector) -> Result<Polynomial> {
        self.check_dim(xi.dim())?;
        let mut current = self.clone();
        for j in 0..self.dim {
            if xi.coords()[j].is_zero() {
                continue;
            }
            current = current.shift_one_var(j, &xi.coords()[j]);
        }
        Ok(current)
    }

    /// Substitute x_j ← x_j + s in place of variable j (binomial expansion).
    fn shift_one_var(&self, var: usize, s: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (alpha, c) in &self.terms {
            let a = alpha.0[var];
            // (x + s)^a = Σ_k C(a,k) s^{a-k} x^k
            let mut binom = BigInt::one();
            let mut s_pow = BigRational::one();
            // iterate k from a down to 0 so s_pow accumulates s^{a-k}
            let mut contributions: Vec<(u32, BigRational)> = Vec::with_capacity(a as usize + 1);
            for k in (0..=a).rev() {
                contributions.push((k, BigRational::from_integer(binom.clone()) * &s_pow));
                if k > 0 {
                    // C(a, k-1) = C(a,k) * k / (a-k+1)
                    binom = binom * BigInt::from(k) / BigInt::from(a - k + 1);
                    s_pow *= s;
                }
            }
            for (k, factor) in contributions {
                let mut beta = alpha.clone();
                beta.0[var] = k;
                out.add_term(beta, c * &factor);
            }
        }
        out
    }

    /// Top-degree homogeneous component.
    pub fn principal_part(&self) -> Result<Polynomial> {
        let m = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut out = Polynomial::zero(self.dim);
        for (alpha, c) in &self.terms {
            if alpha.order() == m {
                out.terms.insert(alpha.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other.dim)?;
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other.dim)?;
        let mut out = Polynomial::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let gamma = MultiIndex(
                    a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect(),
                );
                out.add_term(gamma, ca * cb);
            }
        }
        Ok(out)
    }

    /// P^k by binary exponentiation; pow(P, 0) = 1.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::constant(self.dim, BigRational::one());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// Reindex the same terms into dimension d + extra (the added trailing
    /// variables do not occur). evaluate(augment(P,1), (v,s)) = evaluate(P,v).
    pub fn augment(&self, extra: usize) -> Polynomial {
        let new_dim = self.dim + extra;
        Polynomial {
            dim: new_dim,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| {
                    let mut e = a.0.clone();
                    e.resize(new_dim, 0);
                    (MultiIndex(e), c.clone())
                })
                .collect(),
        }
    }

    /// `Some(m)` iff every stored term has |α| = m. The zero polynomial
    /// reports degree 0 by convention.
    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut orders = self.terms.keys().map(|a| a.order());
        match orders.next() {
            None => Some(0),
            Some(m) => {
                if orders.all(|o| o == m) {
                    Some(m)
                } else {
                    None
                }
            }
        }
    }

    /// Substitute x_j = Σ_i B[j][i]·s_i + c_j, producing a polynomial in the
    /// s-variables. `columns[i]` is the coefficient vector of s_i. Exact.
    pub fn compose_affine(&self, columns: &[Vector], offset: Option<&Vector>) -> Result<Polynomial> {
        let k = columns.len();
        for col in columns {
            self.check_dim(col.dim())?;
        }
        if let Some(off) = offset {
            self.check_dim(off.dim())?;
        }
        // Linear forms L_j(s) = c_j + Σ_i B[j][i] s_i, one per original variable.
        let mut linear_forms: Vec<Polynomial> = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut lf = match offset {
                Some(off) => Polynomial::constant(k, off.coords()[j].clone()),
                None => Polynomial::zero(k),
            };
            for (i, col) in columns.iter().enumerate() {
                let coef = col.coords()[j].clone();
                if !coef.is_zero() {
                    let mono = Polynomial::from_terms(k, [(MultiIndex::unit(k, i), coef)])?;
                    lf = lf.add(&mono)?;
                }
            }
            linear_forms.push(lf);
        }
        // Cache powers of each linear form as needed.
        let mut max_pow = vec![0u32; self.dim];
        for alpha in self.terms.keys() {
            for (j, &a) in alpha.0.iter().enumerate() {
                max_pow[j] = max_pow[j].max(a);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(self.dim);
        for (j, &m) in max_pow.iter().enumerate() {
            let mut col = Vec::with_capacity(m as usize + 1);
            col.push(Polynomial::constant(k, BigRational::one()));
            for e in 1..=m {
                let next = col[(e - 1) as usize].mul(&linear_forms[j])?;
                col.push(next);
            }
            powers.push(col);
        }
        let mut out = Polynomial::zero(k);
        for (alpha, c) in &self.terms {
            let mut term = Polynomial::constant(k, c.clone());
            for (j, &a) in alpha.0.iter().enumerate() {
                if a > 0 {
                    term = term.mul(&powers[j][a as usize])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

fn format_coefficient(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: graded-lex descending, `*` between factors, exponents
    /// with `^`. Re-parses to an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || alpha.order() == 0 {
                factors.push(format_coefficient(&abs));
            }
            for (j, &a) in alpha.0.iter().enumerate() {
                if a == 1 {
                    factors.push(format!("x{}", j + 1));
                } else if a > 1 {
                    factors.push(format!("x{}^{}", j + 1, a));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// Q(ξ) = ξ₁² − ξ₂² − … − ξ_d².
    pub(crate) fn lorentz_q(dim: usize) -> Polynomial {
        let mut terms = vec![(double_index(dim, 0), rat(1))];
        for j in 1..dim {
            terms.push((double_index(dim, j), rat(-1)));
        }
        Polynomial::from_terms(dim, terms).unwrap()
    }

    fn double_index(dim: usize, var: usize) -> MultiIndex {
        let mut e = vec![0; dim];
        e[var] = 2;
        MultiIndex(e)
    }

    #[test]
    fn evaluate_q_at_last_axis_is_minus_one() {
        let q = lorentz_q(3);
        let e3 = Vector::unit(3, 2);
        assert_eq!(q.evaluate(&e3).unwrap(), rat(-1));
    }

    #[test]
    fn evaluate_q_at_null_vector_is_zero() {
        let q = lorentz_q(3);
        let xi = Vector::from_ints(&[1, 1, 0]);
        assert!(q.evaluate(&xi).unwrap().is_zero());
    }

    #[test]
    fn evaluate_at_origin_gives_constant_term() {
        let p = Polynomial::parse("x1^2 + 3*x2 - 5/2", 2).unwrap();
        assert_eq!(
            p.evaluate(&Vector::zero(2)).unwrap(),
            BigRational::new((-5).into(), 2.into())
        );
    }

    #[test]
    fn evaluate_dimension_mismatch() {
        let q = lorentz_q(3);
        assert!(matches!(
            q.evaluate(&Vector::zero(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn derivative_of_q_along_x3() {
        let q = lorentz_q(3);
        let d = q.derivative(&MultiIndex(vec![0, 0, 1])).unwrap();
        let expected = Polynomial::parse("-2*x3", 3).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn derivative_zero_index_is_identity() {
        let p = Polynomial::parse("x1^3 - x2 + 7", 2).unwrap();
        assert_eq!(p.derivative(&MultiIndex::zero(2)).unwrap(), p);
    }

    #[test]
    fn third_derivative_of_quadratic_vanishes() {
        let q = lorentz_q(3);
        let d = q.derivative(&MultiIndex(vec![1, 1, 1])).unwrap();
        assert!(d.is_zero());
        let d2 = q.derivative(&MultiIndex(vec![3, 0, 0])).unwrap();
        assert!(d2.is_zero());
    }

    #[test]
    fn gradient_of_q() {
        let q = lorentz_q(3);
        let grads = q.gradient();
        assert_eq!(grads[0], Polynomial::parse("2*x1", 3).unwrap());
        assert_eq!(grads[1], Polynomial::parse("-2*x2", 3).unwrap());
        assert_eq!(grads[2], Polynomial::parse("-2*x3", 3).unwrap());
        let at = q.gradient_at(&Vector::from_ints(&[1, 1, 0])).unwrap();
        assert_eq!(at, Vector::from_ints(&[2, -2, 0]));
    }

    #[test]
    fn gradient_of_constant_is_zero() {
        let p = Polynomial::constant_i64(3, 4);
        assert!(p.gradient().iter().all(|g| g.is_zero()));
    }

    #[test]
    fn taylor_shift_by_zero_is_identity() {
        let p = Polynomial::parse("x1^2*x2 - x2^3 + 1", 2).unwrap();
        assert_eq!(p.taylor_shift(&Vector::zero(2)).unwrap(), p);
    }

    #[test]
    fn taylor_shift_composition_law() {
        let p = Polynomial::parse("x1^3 - 2*x1*x2 + x2^2", 2).unwrap();
        let xi = Vector::from_ints(&[2, -1]);
        let eta = Vector::from_ints(&[-3, 5]);
        let lhs = p.taylor_shift(&xi).unwrap().taylor_shift(&eta).unwrap();
        let rhs = p.taylor_shift(&xi.add(&eta)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn taylor_shift_of_q_linear_part() {
        // Q(x + n·(1,1,0)) has linear part 2n·x1 − 2n·x2.
        let q = lorentz_q(3);
        let n = 16;
        let shifted = q
            .taylor_shift(&Vector::from_ints(&[n, n, 0]))
            .unwrap();
        assert_eq!(shifted.coefficient(&MultiIndex(vec![1, 0, 0])), rat(2 * n));
        assert_eq!(shifted.coefficient(&MultiIndex(vec![0, 1, 0])), rat(-2 * n));
        assert_eq!(shifted.coefficient(&MultiIndex(vec![0, 0, 1])), rat(0));
        // Constant term Q(nξ) = 0 on the light cone.
        assert_eq!(shifted.coefficient(&MultiIndex::zero(3)), rat(0));
    }

    #[test]
    fn principal_part_of_q4_plus_lower() {
        let q = lorentz_q(3);
        let r = Polynomial::parse("(x1^2 + x2^2 + x3^2)^3", 3).unwrap();
        let p = q.pow(4).add(&r).unwrap();
        assert_eq!(p.principal_part().unwrap(), q.pow(4));
    }

    #[test]
    fn principal_part_of_homogeneous_is_itself() {
        let q = lorentz_q(4);
        assert_eq!(q.principal_part().unwrap(), q);
    }

    #[test]
    fn principal_part_drops_lower_terms() {
        let p = Polynomial::parse("x1^2 + x1", 1).unwrap();
        assert_eq!(
            p.principal_part().unwrap(),
            Polynomial::parse("x1^2", 1).unwrap()
        );
    }

    #[test]
    fn principal_part_of_zero_errors() {
        assert!(matches!(
            Polynomial::zero(2).principal_part(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let q = lorentz_q(3);
        assert_eq!(q.pow(2), q.mul(&q).unwrap());
        assert_eq!(q.pow(1), q);
        assert_eq!(q.pow(0), Polynomial::constant_i64(3, 1));
    }

    #[test]
    fn principal_part_commutes_with_pow() {
        let q = lorentz_q(3);
        let r = Polynomial::parse("x1*x2 + x3", 3).unwrap();
        let p = q.add(&r).unwrap();
        assert_eq!(
            p.pow(4).principal_part().unwrap(),
            p.principal_part().unwrap().pow(4)
        );
    }

    #[test]
    fn augment_keeps_terms_and_degree() {
        let q = lorentz_q(3);
        let qa = q.augment(1);
        assert_eq!(qa.dimension(), 4);
        assert_eq!(qa.num_terms(), 3);
        assert_eq!(qa.degree(), q.degree());
        // evaluate(augment(P,1),(v,s)) = evaluate(P,v) for several s
        let v = Vector::from_ints(&[3, -2, 5]);
        let base = q.evaluate(&v).unwrap();
        for s in [-7i64, 0, 13] {
            let w = Vector::from_ints(&[3, -2, 5, s]);
            assert_eq!(qa.evaluate(&w).unwrap(), base);
        }
    }

    #[test]
    fn augment_constant_is_constant() {
        let c = Polynomial::constant_i64(2, 9);
        let ca = c.augment(3);
        assert_eq!(ca.dimension(), 5);
        assert_eq!(ca.evaluate(&Vector::from_ints(&[1, 2, 3, 4, 5])).unwrap(), rat(9));
    }

    #[test]
    fn homogeneity_detection() {
        let q = lorentz_q(3);
        assert_eq!(q.is_homogeneous(), Some(2));
        let r = Polynomial::parse("(x1^2+x2^2+x3^2)^3", 3).unwrap();
        let p = q.pow(4).add(&r).unwrap();
        assert_eq!(p.is_homogeneous(), None);
        let affine = Polynomial::parse("x1 + 1", 1).unwrap();
        assert_eq!(affine.is_homogeneous(), None);
        assert_eq!(Polynomial::zero(2).is_homogeneous(), Some(0));
    }

    #[test]
    fn compose_affine_line_restriction() {
        // Q(ξ + s·e3) = Q(ξ) − s² at ξ = (1,1,0).
        let q = lorentz_q(3);
        let composed = q
            .compose_affine(
                &[Vector::unit(3, 2)],
                Some(&Vector::from_ints(&[1, 1, 0])),
            )
            .unwrap();
        assert_eq!(composed, Polynomial::parse("-x1^2", 1).unwrap());
    }

    #[test]
    fn taylor_coefficients_match_derivatives() {
        let p = Polynomial::parse("x1^3*x2 - 2*x1*x2^2 + x2 - 4", 2).unwrap();
        let xi = Vector::from_ints(&[2, -3]);
        let shifted = p.taylor_shift(&xi).unwrap();
        for (alpha, coeff) in shifted.terms() {
            let deriv_val = p.derivative(alpha).unwrap().evaluate(&xi).unwrap();
            let fact = BigRational::from_integer(alpha.factorial());
            assert_eq!(coeff * fact, deriv_val);
        }
    }
}

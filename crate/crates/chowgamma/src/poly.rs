//! Sparse exact-integer polynomials in the variables `t`, `q`, `p`.
//!
//! Every series and identity in this crate is carried by [`MVPoly`]:
//! Hilbert series, q-Eulerian polynomials, multiplicity polynomials,
//! specialization numerators. Coefficients are arbitrary-precision
//! integers and all arithmetic is exact. Terms are keyed by the exponent
//! triple `(e_t, e_q, e_p)` in lexicographic order, which fixes a
//! canonical serialization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// The three polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    Q,
    P,
}

/// Exponent triple `(e_t, e_q, e_p)`.
pub type Expt = (u32, u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("gaussian binomial requires k <= n, got n = {n}, k = {k}")]
    BinomialOutOfRange { n: u32, k: u32 },
    #[error("polynomial is not palindromic for degree {degree}: first mismatch at t^{index}")]
    NotPalindromic { degree: usize, index: usize },
    #[error("t-degree {found} exceeds the declared expansion degree {degree}")]
    DegreeTooLarge { degree: usize, found: usize },
    #[error("unimodality is defined only for univariate polynomials in t")]
    NotUnivariate,
}

/// Sparse multivariate polynomial over the integers in `t`, `q`, `p`.
///
/// Invariant: no stored zero coefficients. Immutable in spirit: all
/// operations return fresh values, so sharing across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MVPoly {
    terms: BTreeMap<Expt, BigInt>,
}

impl MVPoly {
    pub fn zero() -> Self {
        MVPoly::default()
    }

    pub fn one() -> Self {
        MVPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let mut p = MVPoly::zero();
        p.add_term((0, 0, 0), c.into());
        p
    }

    pub fn var(v: Var) -> Self {
        MVPoly::monomial(Self::expt_of(v, 1), BigInt::one())
    }

    /// `t^k`, `q^k`, or `p^k`.
    pub fn var_pow(v: Var, k: u32) -> Self {
        MVPoly::monomial(Self::expt_of(v, k), BigInt::one())
    }

    fn expt_of(v: Var, k: u32) -> Expt {
        match v {
            Var::T => (k, 0, 0),
            Var::Q => (0, k, 0),
            Var::P => (0, 0, k),
        }
    }

    pub fn monomial(e: Expt, c: BigInt) -> Self {
        let mut p = MVPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expt, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Expt) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(et, eq, ep)| match v {
                Var::T => et,
                Var::Q => eq,
                Var::P => ep,
            })
            .max()
    }

    /// True when only the requested variable occurs.
    pub fn is_univariate_in(&self, v: Var) -> bool {
        self.terms.keys().all(|&(et, eq, ep)| match v {
            Var::T => eq == 0 && ep == 0,
            Var::Q => et == 0 && ep == 0,
            Var::P => et == 0 && eq == 0,
        })
    }

    /// Coefficient of `t^k` as a polynomial in `q`, `p`.
    pub fn coeff_of_t(&self, k: u32) -> MVPoly {
        let mut out = MVPoly::zero();
        for (&(et, eq, ep), c) in &self.terms {
            if et == k {
                out.add_term((0, eq, ep), c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, e: Expt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &MVPoly) -> MVPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MVPoly) -> MVPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MVPoly {
        MVPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MVPoly) -> MVPoly {
        let mut out = MVPoly::zero();
        for (&(a0, a1, a2), ca) in &self.terms {
            for (&(b0, b1, b2), cb) in &other.terms {
                let e = (
                    a0.checked_add(b0).expect("t-exponent overflow"),
                    a1.checked_add(b1).expect("q-exponent overflow"),
                    a2.checked_add(b2).expect("p-exponent overflow"),
                );
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MVPoly {
        if c.is_zero() {
            return MVPoly::zero();
        }
        MVPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MVPoly {
        let mut out = MVPoly::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Substitute an integer value for one variable.
    pub fn substitute(&self, v: Var, value: &BigInt) -> MVPoly {
        let mut out = MVPoly::zero();
        for (&(et, eq, ep), c) in &self.terms {
            let (e_sub, rest) = match v {
                Var::T => (et, (0, eq, ep)),
                Var::Q => (eq, (et, 0, ep)),
                Var::P => (ep, (et, eq, 0)),
            };
            out.add_term(rest, c * value.pow(e_sub));
        }
        out
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> BigInt {
        debug_assert!(self.terms.keys().all(|&e| e == (0, 0, 0)));
        self.coeff((0, 0, 0))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Build a univariate polynomial in `t` from its coefficient list.
    pub fn from_t_coeffs(coeffs: &[BigInt]) -> MVPoly {
        let mut out = MVPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out.add_term((k as u32, 0, 0), c.clone());
        }
        out
    }

    /// JSON form: a list of `[e_t, e_q, e_p, "coefficient"]` entries in
    /// canonical order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(et, eq, ep), c)| json!([et, eq, ep, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<MVPoly> {
        let mut out = MVPoly::zero();
        for entry in v.as_array()? {
            let entry = entry.as_array()?;
            if entry.len() != 4 {
                return None;
            }
            let et = entry[0].as_u64()? as u32;
            let eq = entry[1].as_u64()? as u32;
            let ep = entry[2].as_u64()? as u32;
            let c: BigInt = entry[3].as_str()?.parse().ok()?;
            out.add_term((et, eq, ep), c);
        }
        Some(out)
    }
}

impl fmt::Display for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(et, eq, ep), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut vars = String::new();
            for (sym, e) in [("t", et), ("q", eq), ("p", ep)] {
                if e == 1 {
                    vars.push_str(&format!("*{sym}"));
                } else if e > 1 {
                    vars.push_str(&format!("*{sym}^{e}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", &vars[1..])?;
            } else {
                write!(f, "{abs}{vars}")?;
            }
        }
        Ok(())
    }
}

/// `[n]_t = 1 + t + ... + t^{n-1}`, with `[0]_t = 0`.
pub fn t_integer(n: u32) -> MVPoly {
    let mut out = MVPoly::zero();
    for k in 0..n {
        out.add_term((k, 0, 0), BigInt::one());
    }
    out
}

/// The Gaussian binomial coefficient as a polynomial in `q`, via the
/// Pascal-style recurrence (exact integer arithmetic throughout).
pub fn gaussian_binomial(n: u32, k: u32) -> Result<MVPoly, PolyError> {
    if k > n {
        return Err(PolyError::BinomialOutOfRange { n, k });
    }
    // row[j] holds the coefficient polynomial for the current n
    let mut row: Vec<MVPoly> = vec![MVPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        next.push(MVPoly::one());
        for j in 1..m {
            let qj = MVPoly::var_pow(Var::Q, j);
            next.push(row[j as usize - 1].add(&qj.mul(&row[j as usize])));
        }
        next.push(MVPoly::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// `1 + t`.
pub fn one_plus_t() -> MVPoly {
    MVPoly::one().add(&MVPoly::var(Var::T))
}

/// A palindromic polynomial written in the basis `t^k (1+t)^{d-2k}`.
///
/// Invariant: `reconstruct` returns the expanded source exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub degree: usize,
    pub gamma: Vec<MVPoly>,
}

impl GammaVector {
    pub fn reconstruct(&self) -> MVPoly {
        let mut out = MVPoly::zero();
        for (k, g) in self.gamma.iter().enumerate() {
            let basis = MVPoly::var_pow(Var::T, k as u32)
                .mul(&one_plus_t().pow((self.degree - 2 * k) as u32));
            out = out.add(&g.mul(&basis));
        }
        out
    }

    /// Per-coefficient nonnegativity of every gamma entry.
    pub fn is_nonnegative(&self) -> bool {
        self.gamma.iter().all(MVPoly::is_nonnegative)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "gamma": self.gamma.iter().map(MVPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, g) in self.gamma.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// True when the coefficient of `t^j` equals the coefficient of
/// `t^{d-j}` (as polynomials in `q`, `p`) for all `j`.
pub fn is_palindromic(f: &MVPoly, d: usize) -> bool {
    first_palindromy_violation(f, d).is_none()
}

fn first_palindromy_violation(f: &MVPoly, d: usize) -> Option<usize> {
    if let Some(deg) = f.degree(Var::T) {
        if deg as usize > d {
            return Some(d + 1);
        }
    }
    for j in 0..=d / 2 {
        if f.coeff_of_t(j as u32) != f.coeff_of_t((d - j) as u32) {
            return Some(j);
        }
    }
    None
}

/// Unimodality of the `t`-coefficient sequence. Errors on input that
/// involves `q` or `p`.
pub fn is_unimodal(f: &MVPoly) -> Result<bool, PolyError> {
    if !f.is_univariate_in(Var::T) {
        return Err(PolyError::NotUnivariate);
    }
    let deg = match f.degree(Var::T) {
        None => return Ok(true),
        Some(d) => d,
    };
    let coeffs: Vec<BigInt> = (0..=deg).map(|k| f.coeff((k, 0, 0))).collect();
    let mut rising = true;
    for w in coeffs.windows(2) {
        if rising {
            if w[1] < w[0] {
                rising = false;
            }
        } else if w[1] > w[0] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Expand a palindromic polynomial of degree `d` in the basis
/// `t^k (1+t)^{d-2k}` by iterated subtraction from the lowest `k` up.
pub fn gamma_expand(f: &MVPoly, d: usize) -> Result<GammaVector, PolyError> {
    if let Some(deg) = f.degree(Var::T) {
        if deg as usize > d {
            return Err(PolyError::DegreeTooLarge {
                degree: d,
                found: deg as usize,
            });
        }
    }
    if let Some(index) = first_palindromy_violation(f, d) {
        return Err(PolyError::NotPalindromic { degree: d, index });
    }
    let mut rest = f.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let g = rest.coeff_of_t(k as u32);
        let basis =
            MVPoly::var_pow(Var::T, k as u32).mul(&one_plus_t().pow((d - 2 * k) as u32));
        rest = rest.sub(&g.mul(&basis));
        gamma.push(g);
    }
    assert!(rest.is_zero(), "gamma expansion left a nonzero remainder");
    Ok(GammaVector { degree: d, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpoly(coeffs: &[i64]) -> MVPoly {
        MVPoly::from_t_coeffs(&coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn t_integer_basics() {
        assert!(t_integer(0).is_zero());
        assert_eq!(t_integer(1), MVPoly::one());
        assert_eq!(t_integer(3), tpoly(&[1, 1, 1]));
    }

    /// Independent oracle: sum of q^{sum(S) - (1+2+...+k)} over k-subsets
    /// of [n].
    fn qbin_subset_oracle(n: u32, k: u32) -> MVPoly {
        let mut out = MVPoly::zero();
        let n = n as usize;
        let k = k as usize;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let total: u32 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| i as u32 + 1).sum();
            let min: u32 = (1..=k as u32).sum();
            out = out.add(&MVPoly::var_pow(Var::Q, total - min));
        }
        out
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(3, 0).unwrap(), MVPoly::one());
        assert_eq!(
            gaussian_binomial(3, 1).unwrap(),
            MVPoly::one()
                .add(&MVPoly::var(Var::Q))
                .add(&MVPoly::var_pow(Var::Q, 2))
        );
        let g42 = gaussian_binomial(4, 2).unwrap();
        assert_eq!(g42, qbin_subset_oracle(4, 2));
        // must equal its own reversal in q
        let d = g42.degree(Var::Q).unwrap() as usize;
        for j in 0..=d {
            assert_eq!(g42.coeff((0, j as u32, 0)), g42.coeff((0, (d - j) as u32, 0)));
        }
        assert_eq!(gaussian_binomial(2, 3), Err(PolyError::BinomialOutOfRange { n: 2, k: 3 }));
    }

    #[test]
    fn gaussian_binomial_matches_subset_oracle() {
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(gaussian_binomial(n, k).unwrap(), qbin_subset_oracle(n, k));
            }
        }
    }

    #[test]
    fn gaussian_binomial_at_q1_is_binomial() {
        for n in 0..=20u32 {
            let mut choose = BigInt::one();
            for k in 0..=n {
                let val = gaussian_binomial(n, k)
                    .unwrap()
                    .substitute(Var::Q, &BigInt::one())
                    .constant_value();
                assert_eq!(val, choose, "n={n} k={k}");
                // next binomial coefficient
                choose = &choose * BigInt::from(n - k) / BigInt::from(k + 1);
            }
        }
    }

    #[test]
    fn gamma_expand_examples() {
        // 1 + 4t + t^2 = (1+t)^2 + 2t
        let g = gamma_expand(&tpoly(&[1, 4, 1]), 2).unwrap();
        assert_eq!(g.gamma, vec![MVPoly::one(), MVPoly::constant(2)]);
        assert_eq!(g.reconstruct(), tpoly(&[1, 4, 1]));

        let g = gamma_expand(&one_plus_t().pow(3), 3).unwrap();
        assert_eq!(g.gamma, vec![MVPoly::one(), MVPoly::zero()]);

        let err = gamma_expand(&tpoly(&[1, 2]), 1).unwrap_err();
        assert_eq!(err, PolyError::NotPalindromic { degree: 1, index: 0 });
    }

    #[test]
    fn gamma_expand_pure_binomials() {
        for d in 0..=20usize {
            let g = gamma_expand(&one_plus_t().pow(d as u32), d).unwrap();
            assert_eq!(g.gamma[0], MVPoly::one());
            assert!(g.gamma[1..].iter().all(MVPoly::is_zero));
        }
    }

    #[test]
    fn palindromy_and_unimodality() {
        assert!(is_palindromic(&tpoly(&[1, 4, 1]), 2));
        assert!(is_unimodal(&tpoly(&[1, 4, 1])).unwrap());
        // t + 7t^2 + t^3 with d = 4: a_0 = a_4 = 0
        assert!(is_palindromic(&tpoly(&[0, 1, 7, 1]), 4));
        assert!(is_palindromic(&tpoly(&[1, 0, 0, 1]), 3));
        assert!(!is_unimodal(&tpoly(&[1, 0, 0, 1])).unwrap());
        assert!(!is_palindromic(&tpoly(&[1, 2]), 1));
        assert_eq!(
            is_unimodal(&MVPoly::var(Var::Q)),
            Err(PolyError::NotUnivariate)
        );
    }

    #[test]
    fn palindromy_with_qp_coefficients() {
        // (1 + qt)(1 + t/q)*q = q + (1+q^2)t + q t^2: palindromic with q-coefficients
        let f = MVPoly::var(Var::Q)
            .add(&MVPoly::var(Var::T).mul(&MVPoly::one().add(&MVPoly::var_pow(Var::Q, 2))))
            .add(&MVPoly::var_pow(Var::T, 2).mul(&MVPoly::var(Var::Q)));
        assert!(is_palindromic(&f, 2));
        let g = gamma_expand(&f, 2).unwrap();
        assert_eq!(g.reconstruct(), f);
    }

    #[test]
    fn substitution_and_display() {
        let f = tpoly(&[1, 4, 1]);
        assert_eq!(f.to_string(), "1 + 4*t + t^2");
        assert_eq!(
            f.substitute(Var::T, &BigInt::one()).constant_value(),
            BigInt::from(6)
        );
        let g = MVPoly::var(Var::Q).mul(&MVPoly::var(Var::T)).sub(&MVPoly::constant(3));
        assert_eq!(g.to_string(), "-3 + t*q");
        assert_eq!(MVPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let f = MVPoly::var(Var::Q)
            .mul(&MVPoly::var(Var::T))
            .sub(&MVPoly::constant(3))
            .add(&MVPoly::var_pow(Var::P, 5));
        let j = f.to_json();
        assert_eq!(MVPoly::from_json(&j).unwrap(), f);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = MVPoly> {
            proptest::collection::vec(((0u32..4, 0u32..3, 0u32..3), -5i64..=5), 0..6).prop_map(
                |terms| {
                    let mut p = MVPoly::zero();
                    for (e, c) in terms {
                        p = p.add(&MVPoly::monomial(e, BigInt::from(c)));
                    }
                    p
                },
            )
        }

        proptest! {
            #[test]
            fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert_eq!(a.sub(&a), MVPoly::zero());
            }

            #[test]
            fn gamma_round_trip(gs in proptest::collection::vec(0i64..5, 1..5)) {
                // build a palindromic polynomial from a gamma vector, expand it back
                let d = 2 * (gs.len() - 1) + 1;
                let gv = GammaVector {
                    degree: d,
                    gamma: gs.iter().map(|&g| MVPoly::constant(g)).collect(),
                };
                let f = gv.reconstruct();
                let expanded = gamma_expand(&f, d).unwrap();
                prop_assert_eq!(expanded.gamma, gv.gamma);
            }
        }
    }
}

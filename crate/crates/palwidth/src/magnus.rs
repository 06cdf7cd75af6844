//! Exact arithmetic in `N_{n,r}` via truncated integer power series.
//!
//! The embedding sends `x_i` to `1 + X_i` and `x_i^{-1}` to the truncated
//! alternating geometric series `1 - X_i + X_i^2 - ...`; every monomial of
//! degree greater than `r` is discarded. Two words represent the same element
//! of `N_{n,r}` exactly when their truncated series coincide, and the
//! lower-central filtration becomes the degree filtration of the series. All
//! coefficients are arbitrary-precision integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::words::{commutator, GroupContext, Word};
use crate::{Error, Result};

/// A non-commutative monomial: an ordered sequence of generator indices of
/// length at most `r`. The empty sequence is the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_letters(letters: &[usize]) -> Self {
        Monomial(letters.iter().map(|&g| g as u16).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&g| g as usize)
    }

    fn append(&self, other: &Monomial) -> Monomial {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Monomial(letters)
    }
}

// Canonical storage order: by degree first, then lexicographically. This is
// what makes serialized series deterministic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "X{g}")?;
        }
        Ok(())
    }
}

/// A truncated non-commutative integer power series over `X_1..X_n`.
///
/// No zero coefficients are stored. A series that represents a group element
/// always has unit coefficient exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    ctx: GroupContext,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Series {
    pub fn zero(ctx: GroupContext) -> Self {
        Series {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: GroupContext) -> Self {
        Series::from_term(ctx, Monomial::unit(), BigInt::one())
    }

    pub fn from_term(ctx: GroupContext, monomial: Monomial, coefficient: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() && monomial.degree() <= ctx.class() {
            terms.insert(monomial, coefficient);
        }
        Series { ctx, terms }
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&Monomial::unit()).is_one()
    }

    fn insert(&mut self, monomial: Monomial, coefficient: BigInt) {
        if monomial.degree() > self.ctx.class() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !coefficient.is_zero() {
                    e.insert(coefficient);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        check_ctx(self, other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        check_ctx(self, other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c);
        }
        Ok(out)
    }
}

fn check_ctx(a: &Series, b: &Series) -> Result<()> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch {
            left: a.ctx,
            right: b.ctx,
        });
    }
    Ok(())
}

/// Non-commutative product with all monomials of degree > r discarded.
pub fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    check_ctx(a, b)?;
    let r = a.ctx.class();
    let mut out = Series::zero(a.ctx);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            if ma.degree() + mb.degree() > r {
                continue;
            }
            out.insert(ma.append(mb), ca * cb);
        }
    }
    Ok(out)
}

/// The truncated ring commutator `a·b - b·a`; the bracket realizing Lie
/// monomials inside the series ring.
pub fn ring_commutator(a: &Series, b: &Series) -> Result<Series> {
    series_mul(a, b)?.sub(&series_mul(b, a)?)
}

/// Series of `x_g^e`, i.e. `(1 + X_g)^e` truncated at degree r. The
/// coefficients are the (generalized) binomials `C(e, k)`, so negative
/// exponents reproduce the truncated alternating geometric series and huge
/// exponents stay cheap.
fn generator_power_series(generator: usize, exponent: &BigInt, ctx: GroupContext) -> Series {
    let mut out = Series::zero(ctx);
    let mut coefficient = BigInt::one();
    let mut letters = Vec::new();
    out.insert(Monomial::unit(), BigInt::one());
    for k in 1..=ctx.class() {
        coefficient = coefficient * (exponent - (k as i64 - 1)) / k;
        letters.push(generator);
        if coefficient.is_zero() {
            break;
        }
        out.insert(Monomial::from_letters(&letters), coefficient.clone());
    }
    out
}

/// Evaluates a word under the embedding; multiplicative by construction.
pub fn eval_word(w: &Word, ctx: &GroupContext) -> Result<Series> {
    let mut acc = Series::one(*ctx);
    for s in w.syllables() {
        if s.generator > ctx.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: s.generator,
                rank: ctx.rank(),
            });
        }
        let factor = generator_power_series(s.generator, &s.exponent, *ctx);
        acc = series_mul(&acc, &factor)?;
    }
    Ok(acc)
}

/// Decides the word problem in `N_{n,r}`.
pub fn equal_in_group(a: &Word, b: &Word, ctx: &GroupContext) -> Result<bool> {
    Ok(eval_word(a, ctx)? == eval_word(b, ctx)?)
}

/// True iff the word represents the identity of `N_{n,r}`.
pub fn is_identity(w: &Word, ctx: &GroupContext) -> Result<bool> {
    Ok(eval_word(w, ctx)?.is_one())
}

/// The sum of the degree-k terms only.
pub fn homogeneous_component(s: &Series, k: usize) -> Result<Series> {
    if k > s.ctx.class() {
        return Err(Error::DegreeOutOfRange {
            k,
            r: s.ctx.class(),
        });
    }
    let mut out = Series::zero(s.ctx);
    for (m, c) in &s.terms {
        if m.degree() == k {
            out.insert(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Membership in the k-th lower-central term `gamma_k` of `N_{n,r}`, for
/// `1 <= k <= r + 1`: all homogeneous components of degree below k vanish.
/// `k = r + 1` is the identity test.
pub fn is_in_gamma(w: &Word, k: usize, ctx: &GroupContext) -> Result<bool> {
    if k == 0 || k > ctx.class() + 1 {
        return Err(Error::DegreeOutOfRange {
            k,
            r: ctx.class(),
        });
    }
    let s = eval_word(w, ctx)?;
    for j in 1..k {
        if j > ctx.class() {
            break;
        }
        if homogeneous_component(&s, j)?.term_count() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the word commutes with every generator, i.e. lies in the center.
pub fn is_central(w: &Word, ctx: &GroupContext) -> Result<bool> {
    for i in 1..=ctx.rank() {
        let c = commutator(&Word::generator_power(i, 1), w);
        if !is_identity(&c, ctx)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// Canonical textual form, e.g. "1 + 2*X1 - 1*X1X2": terms in monomial order,
// the unit monomial printed as a bare coefficient, all other coefficients
// printed with an explicit magnitude.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            if m.degree() == 0 {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{left_normed_commutator, parse_word};
    use proptest::prelude::*;

    fn ctx(n: usize, r: usize) -> GroupContext {
        GroupContext::new(n, r).unwrap()
    }

    fn w(text: &str, c: &GroupContext) -> Word {
        parse_word(text, c).unwrap()
    }

    #[test]
    fn eval_generator() {
        let c = ctx(2, 2);
        let s = eval_word(&w("x1", &c), &c).unwrap();
        assert_eq!(s.to_string(), "1 + 1*X1");
    }

    #[test]
    fn eval_commutator_hand_multiplied() {
        // (1 - X2 + X2^2)(1 - X1 + X1^2)(1 + X2)(1 + X1) = 1 + X2X1 - X1X2
        // when truncated at degree 2.
        let c = ctx(2, 2);
        let s = eval_word(&w("[x2,x1]", &c), &c).unwrap();
        assert_eq!(s.to_string(), "1 - 1*X1X2 + 1*X2X1");
        assert_eq!(s.coefficient(&Monomial::from_letters(&[2, 1])), BigInt::one());
        assert_eq!(
            s.coefficient(&Monomial::from_letters(&[1, 2])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn eval_cancels_inverses() {
        let c = ctx(2, 3);
        assert!(eval_word(&w("x1 x1^-1", &c), &c).unwrap().is_one());
    }

    #[test]
    fn series_mul_truncates() {
        let c2 = ctx(2, 2);
        let one_plus_x1 = eval_word(&w("x1", &c2), &c2).unwrap();
        let sq = series_mul(&one_plus_x1, &one_plus_x1).unwrap();
        assert_eq!(sq.to_string(), "1 + 2*X1 + 1*X1X1");

        let c1 = ctx(2, 1);
        let one_plus_x1 = eval_word(&w("x1", &c1), &c1).unwrap();
        let sq = series_mul(&one_plus_x1, &one_plus_x1).unwrap();
        assert_eq!(sq.to_string(), "1 + 2*X1");

        let c2 = ctx(2, 2);
        let a = eval_word(&w("x1", &c2), &c2).unwrap();
        let b = eval_word(&w("x2", &c2), &c2).unwrap();
        assert_eq!(series_mul(&a, &b).unwrap().to_string(), "1 + 1*X1 + 1*X2 + 1*X1X2");
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Series::one(ctx(2, 2));
        let b = Series::one(ctx(2, 3));
        assert!(matches!(
            series_mul(&a, &b),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn equal_in_group_examples() {
        let c1 = ctx(2, 1);
        assert!(equal_in_group(&w("[x2,x1]", &c1), &Word::identity(), &c1).unwrap());
        let c2 = ctx(2, 2);
        assert!(!equal_in_group(&w("[x2,x1]", &c2), &Word::identity(), &c2).unwrap());
        let any = w("x1 x2^2 x1^-1", &c2);
        assert!(equal_in_group(&any, &any, &c2).unwrap());
    }

    #[test]
    fn homogeneous_component_examples() {
        let c = ctx(2, 2);
        let cube = eval_word(&w("x1^3", &c), &c).unwrap();
        assert_eq!(homogeneous_component(&cube, 1).unwrap().to_string(), "3*X1");
        let z = eval_word(&w("[x2,x1]", &c), &c).unwrap();
        assert_eq!(
            homogeneous_component(&z, 2).unwrap().to_string(),
            "-1*X1X2 + 1*X2X1"
        );
        let one = Series::one(c);
        assert_eq!(homogeneous_component(&one, 1).unwrap().to_string(), "0");
        assert!(matches!(
            homogeneous_component(&one, 3),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn gamma_membership_examples() {
        let c = ctx(2, 3);
        assert!(is_in_gamma(&w("[x2,x1]", &c), 2, &c).unwrap());
        assert!(!is_in_gamma(&w("x1", &c), 2, &c).unwrap());
        assert!(is_in_gamma(&w("[[x2,x1],x1]", &c), 3, &c).unwrap());
        assert!(!is_in_gamma(&w("[x2,x1]", &c), 3, &c).unwrap());
        // k = r + 1 is the identity test.
        assert!(is_in_gamma(&Word::identity(), 4, &c).unwrap());
        assert!(matches!(
            is_in_gamma(&Word::identity(), 5, &c),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn centrality_examples() {
        let c = ctx(2, 2);
        assert!(is_central(&w("[x2,x1]", &c), &c).unwrap());
        assert!(!is_central(&w("x1", &c), &c).unwrap());
        let c1 = ctx(3, 1);
        assert!(is_central(&w("x1 x2^4", &c1), &c1).unwrap());
    }

    #[test]
    fn huge_exponents_are_exact() {
        let c = ctx(1, 3);
        let e: BigInt = "1000000000000".parse().unwrap();
        let s = eval_word(&Word::generator_power(1, e.clone()), &c).unwrap();
        assert_eq!(s.coefficient(&Monomial::from_letters(&[1])), e.clone());
        // C(e, 2) = e(e-1)/2.
        let choose2 = (&e * (&e - 1)) / 2;
        assert_eq!(s.coefficient(&Monomial::from_letters(&[1, 1])), choose2);
    }

    #[test]
    fn weight_r_plus_one_brackets_vanish() {
        for (n, r) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let c = ctx(n, r);
            let mut indices = vec![2, 1];
            while indices.len() < r + 1 {
                indices.push(1 + indices.len() % n);
            }
            let bracket = left_normed_commutator(&indices);
            assert!(
                is_identity(&bracket, &c).unwrap(),
                "weight {} bracket should die at class {}",
                r + 1,
                r
            );
        }
    }

    #[test]
    fn sparsity_bound_holds() {
        let c = ctx(3, 2);
        let word = w("x1^5 x2^-4 x3 x1 [x2,x1]", &c);
        let s = eval_word(&word, &c).unwrap();
        assert!(s.term_count() <= 1 + 3 + 9);
    }

    prop_compose! {
        fn arb_word()(syllables in prop::collection::vec((1usize..4, -3i64..=3), 0..8)) -> Word {
            Word::from_syllables(syllables.into_iter().map(|(g, e)| (g, BigInt::from(e))))
        }
    }

    proptest! {
        #[test]
        fn eval_is_a_homomorphism(a in arb_word(), b in arb_word()) {
            let c = ctx(3, 3);
            let lhs = eval_word(&a.concat(&b), &c).unwrap();
            let rhs = series_mul(&eval_word(&a, &c).unwrap(), &eval_word(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_kills_inverses(a in arb_word()) {
            let c = ctx(3, 3);
            prop_assert!(is_identity(&a.concat(&a.invert()), &c).unwrap());
        }

        #[test]
        fn series_mul_is_associative(a in arb_word(), b in arb_word(), cw in arb_word()) {
            let c = ctx(3, 2);
            let (sa, sb, sc) = (
                eval_word(&a, &c).unwrap(),
                eval_word(&b, &c).unwrap(),
                eval_word(&cw, &c).unwrap(),
            );
            let lhs = series_mul(&series_mul(&sa, &sb).unwrap(), &sc).unwrap();
            let rhs = series_mul(&sa, &series_mul(&sb, &sc).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn group_series_have_unit_coefficient_one(a in arb_word()) {
            let c = ctx(3, 3);
            let s = eval_word(&a, &c).unwrap();
            prop_assert!(s.coefficient(&Monomial::unit()).is_one());
        }
    }
}

//! Palindrome calculus: constructors that turn conjugation and commutator
//! identities into explicit palindrome factorizations, plus the verifier that
//! certifies them.
//!
//! The working identities, all of which telescope at the word level:
//!
//! ```text
//! u^{-1} p u            = (u^{-1} p \bar{u^{-1}}) · (\bar{u} u)
//! [u, p]                = (u^{-1} p^{-1} \bar{u^{-1}}) · (\bar{u} u) · p
//! [u, pq]               = (u^{-1} q^{-1} \bar{u^{-1}}) · (\bar{u} p^{-1} u) · p · q
//! ```
//!
//! where `\bar{w}` is the reverse word. Each parenthesized factor is a
//! palindrome whenever `p` and `q` are.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::magnus::{equal_in_group, is_central};
use crate::words::{GroupContext, Word};
use crate::{Error, Result};

/// A target word together with an ordered list of claimed palindrome factors.
///
/// The `verified` flag is set only by [`Factorization::verify`] (equivalently
/// [`verify_factorization`]): it is true iff every factor is a palindrome
/// word and the product of the factors equals the target in the group fixed
/// by the context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    ctx: GroupContext,
    target: Word,
    factors: Vec<Word>,
    verified: bool,
}

impl Factorization {
    pub fn new(ctx: GroupContext, target: Word, factors: Vec<Word>) -> Self {
        Factorization {
            ctx,
            target,
            factors,
            verified: false,
        }
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// The product of the factors, freely reduced.
    pub fn product(&self) -> Word {
        self.factors
            .iter()
            .fold(Word::identity(), |acc, f| acc.concat(f))
    }

    /// Diagnoses why verification would fail, or `Ok(())` if it would pass.
    pub fn check(&self) -> Result<()> {
        for (index, f) in self.factors.iter().enumerate() {
            if !f.is_palindrome() {
                return Err(Error::FactorNotPalindrome { index });
            }
        }
        if !equal_in_group(&self.product(), &self.target, &self.ctx)? {
            return Err(Error::ProductMismatch);
        }
        Ok(())
    }

    /// Runs the check and records the outcome in the `verified` flag; the
    /// factors are never mutated.
    pub fn verify(mut self) -> Self {
        self.verified = self.check().is_ok();
        self
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.target)?;
        for (i, factor) in self.factors.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { " · " }, factor)?;
        }
        if self.factors.is_empty() {
            write!(f, " 1")?;
        }
        Ok(())
    }
}

/// Sets the `verified` flag from a fresh check; failures leave the flag false
/// and the reason is available through [`Factorization::check`].
pub fn verify_factorization(f: Factorization) -> Factorization {
    f.verify()
}

/// `p^m` for a palindrome `p`; the result is again a palindrome.
pub fn power_palindrome(p: &Word, m: &BigInt) -> Result<Word> {
    require_palindrome(p)?;
    p.pow(m)
}

/// Rewrites the conjugate `u^{-1} (p_1 ... p_k) u` as a product of
/// palindromes: `k` of them when `k` is even, `k + 1` when `k` is odd. The
/// even case alternates `u^{-1} p \bar{u^{-1}}` with `\bar{u} p u`; the odd
/// case k = 1 uses `(u^{-1} p \bar{u^{-1}}) · (\bar{u} u)` and odd k >= 3
/// appends the tail `(u^{-1} \bar{u^{-1}}) · (\bar{u} p_k u)`.
pub fn conjugate_factorization(u: &Word, palindromes: &[Word]) -> Result<Vec<Word>> {
    for p in palindromes {
        require_palindrome(p)?;
    }
    let u_inv = u.invert();
    let u_inv_rev = u_inv.reverse();
    let u_rev = u.reverse();
    let lower = |p: &Word| u_inv.concat(p).concat(&u_inv_rev);
    let upper = |p: &Word| u_rev.concat(p).concat(u);

    let k = palindromes.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    if k == 1 {
        return Ok(vec![lower(&palindromes[0]), u_rev.concat(u)]);
    }
    let even_prefix = if k % 2 == 0 { k } else { k - 1 };
    let mut out = Vec::with_capacity(k + 1);
    for (i, p) in palindromes[..even_prefix].iter().enumerate() {
        out.push(if i % 2 == 0 { lower(p) } else { upper(p) });
    }
    if k % 2 == 1 {
        out.push(u_inv.concat(&u_inv_rev));
        out.push(upper(&palindromes[k - 1]));
    }
    Ok(out)
}

/// Exactly 3 palindromes multiplying to `[u, p]`, or — when `beta` is nonzero
/// and `p = x_a^{alpha}` — to `[u, x_a^{alpha}] x_a^{beta}` (the trailing
/// power merges into the third factor, which becomes `x_a^{alpha + beta}`).
pub fn commutator_palindrome_factorization(
    u: &Word,
    p: &Word,
    beta: &BigInt,
    a: Option<usize>,
) -> Result<Vec<Word>> {
    require_palindrome(p)?;
    let third = if beta.is_zero() {
        p.clone()
    } else {
        let generator = a.ok_or_else(|| {
            Error::Unsupported("a trailing power needs its generator specified".into())
        })?;
        let alpha = p
            .as_power_of(generator)
            .ok_or_else(|| Error::NotAGeneratorPower {
                generator,
                word: p.to_string(),
            })?;
        Word::generator_power(generator, alpha + beta)
    };
    let u_inv = u.invert();
    let first = u_inv.concat(&p.invert()).concat(&u_inv.reverse());
    let second = u.reverse().concat(u);
    Ok(vec![first, second, third])
}

/// Exactly 4 palindromes multiplying to `[u, pq]`: the two-factor conjugate
/// rewriting of `u^{-1} (q^{-1} p^{-1}) u` followed by `p` and `q`.
pub fn commutator_two_palindromes_factorization(
    u: &Word,
    p: &Word,
    q: &Word,
) -> Result<Vec<Word>> {
    require_palindrome(p)?;
    require_palindrome(q)?;
    let mut out = conjugate_factorization(u, &[q.invert(), p.invert()])?;
    out.push(p.clone());
    out.push(q.clone());
    Ok(out)
}

/// For palindromes `p1, p2` whose product is central, `(p1 p2)^m` is the
/// product of the 2 palindromes `p1^m` and `p2^m`.
pub fn central_power_factorization(
    p1: &Word,
    p2: &Word,
    m: &BigInt,
    ctx: &GroupContext,
) -> Result<Vec<Word>> {
    require_palindrome(p1)?;
    require_palindrome(p2)?;
    if !is_central(&p1.concat(p2), ctx)? {
        return Err(Error::NotCentral);
    }
    Ok(vec![p1.pow(m)?, p2.pow(m)?])
}

fn require_palindrome(p: &Word) -> Result<()> {
    if p.is_palindrome() {
        Ok(())
    } else {
        Err(Error::NotAPalindrome(p.to_string()))
    }
}

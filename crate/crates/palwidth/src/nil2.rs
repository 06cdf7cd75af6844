//! Exponent normal form for the class-2 groups `N_{n,2}`.
//!
//! Every element has a unique spelling
//! `x_1^{a_1} ... x_n^{a_n} [x_2,x_1]^{b_21} [x_3,x_1]^{b_31} ...` with the
//! commutator exponents indexed by pairs `i > j`. Multiplication collects in
//! closed form: the commutators are central, and swapping `x_i^a x_j^b` to
//! `x_j^b x_i^a` (for `i > j`) costs exactly `[x_i, x_j]^{ab}`. That gives
//!
//! ```text
//! (a, b) · (a', b'):  a'' = a + a',   b''_ij = b_ij + b'_ij + a_i · a'_j
//! (a, b)^{-1}:        a'' = -a,       b''_ij = -b_ij + a_i · a_j
//! ```
//!
//! both cross-validated against the series arithmetic in the test suite.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::words::{GroupContext, Word};
use crate::{Error, Result};

/// An element of `N_{n,2}` in exponent normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nil2Element {
    n: usize,
    alpha: Vec<BigInt>,
    // Strictly lower-triangular, indexed by (i, j) with 1 <= j < i <= n in
    // row order: (2,1), (3,1), (3,2), (4,1), ...
    beta: Vec<BigInt>,
}

fn beta_index(i: usize, j: usize) -> usize {
    debug_assert!(j >= 1 && j < i);
    (i - 2) * (i - 1) / 2 + (j - 1)
}

/// Pairs `(i, j)` with `1 <= j < i <= n` in storage order.
pub fn beta_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=n).flat_map(|i| (1..i).map(move |j| (i, j)))
}

impl Nil2Element {
    pub fn identity(n: usize) -> Self {
        Nil2Element {
            n,
            alpha: vec![BigInt::zero(); n],
            beta: vec![BigInt::zero(); n * (n - 1) / 2],
        }
    }

    /// Builds an element from explicit exponents. `alpha` must have length n
    /// and `beta` length n(n-1)/2, in the storage order of [`beta_pairs`].
    pub fn from_exponents(alpha: Vec<BigInt>, beta: Vec<BigInt>) -> Result<Self> {
        let n = alpha.len();
        if n == 0 {
            return Err(Error::InvalidContext("rank must be at least 1".into()));
        }
        if beta.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidContext(format!(
                "expected {} commutator exponents, got {}",
                n * (n - 1) / 2,
                beta.len()
            )));
        }
        Ok(Nil2Element { n, alpha, beta })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Exponent of `x_i` (1-based).
    pub fn alpha(&self, i: usize) -> &BigInt {
        &self.alpha[i - 1]
    }

    /// Exponent of `[x_i, x_j]` for `i > j` (1-based).
    pub fn beta(&self, i: usize, j: usize) -> &BigInt {
        &self.beta[beta_index(i, j)]
    }

    pub fn alphas(&self) -> &[BigInt] {
        &self.alpha
    }

    pub fn betas(&self) -> &[BigInt] {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.iter().all(Zero::is_zero) && self.beta.iter().all(Zero::is_zero)
    }

    /// True iff the element lies in the commutator subgroup (all `a_i = 0`).
    pub fn is_commutator_element(&self) -> bool {
        self.alpha.iter().all(Zero::is_zero)
    }

    /// Collects a word into normal form. The context fixes the rank and must
    /// have class exactly 2.
    pub fn from_word(w: &Word, ctx: &GroupContext) -> Result<Self> {
        if ctx.class() != 2 {
            return Err(Error::ClassMismatch {
                expected: 2,
                got: ctx.class(),
            });
        }
        let n = ctx.rank();
        let mut acc = Nil2Element::identity(n);
        for s in w.syllables() {
            if s.generator > n {
                return Err(Error::GeneratorOutOfRange {
                    index: s.generator,
                    rank: n,
                });
            }
            // Multiply by the single syllable x_g^e on the right: only the
            // column j = g of beta picks up contributions a_i * e for i > g.
            for i in (s.generator + 1)..=n {
                let add = &acc.alpha[i - 1] * &s.exponent;
                acc.beta[beta_index(i, s.generator)] += add;
            }
            acc.alpha[s.generator - 1] += &s.exponent;
        }
        Ok(acc)
    }

    /// The canonical spelling: generator powers in order, then each
    /// `[x_i, x_j]^{b}` expanded as `x_i^{-1} x_j^{-b} x_i x_j^{b}` (the
    /// class-2 identity `[x_i, x_j]^b = [x_i, x_j^b]` keeps the syllable
    /// count independent of `b`).
    pub fn to_word(&self) -> Word {
        let mut w = Word::from_syllables(
            self.alpha
                .iter()
                .enumerate()
                .map(|(idx, e)| (idx + 1, e.clone())),
        );
        for (i, j) in beta_pairs(self.n) {
            let b = self.beta(i, j);
            if b.is_zero() {
                continue;
            }
            let factor = Word::from_syllables([
                (i, -BigInt::one()),
                (j, -b.clone()),
                (i, BigInt::one()),
                (j, b.clone()),
            ]);
            w = w.concat(&factor);
        }
        w
    }

    /// Product in normal form.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let alpha = self
            .alpha
            .iter()
            .zip(&other.alpha)
            .map(|(a, b)| a + b)
            .collect();
        let mut beta = Vec::with_capacity(self.beta.len());
        for (i, j) in beta_pairs(self.n) {
            let idx = beta_index(i, j);
            beta.push(&self.beta[idx] + &other.beta[idx] + &self.alpha[i - 1] * &other.alpha[j - 1]);
        }
        Ok(Nil2Element {
            n: self.n,
            alpha,
            beta,
        })
    }

    /// Inverse in normal form.
    pub fn inv(&self) -> Self {
        let alpha = self.alpha.iter().map(|a| -a).collect();
        let mut beta = Vec::with_capacity(self.beta.len());
        for (i, j) in beta_pairs(self.n) {
            let idx = beta_index(i, j);
            beta.push(-&self.beta[idx] + &self.alpha[i - 1] * &self.alpha[j - 1]);
        }
        Nil2Element {
            n: self.n,
            alpha,
            beta,
        }
    }
}

// Normal-form layout, e.g. "x1^2 x2^2 [x2,x1]"; zero exponents omitted, the
// identity prints as "1". Re-parses to a word equal in N_{n,2}.
impl fmt::Display for Nil2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        let mut sep = |f: &mut fmt::Formatter<'_>, wrote: &mut bool| -> fmt::Result {
            if *wrote {
                write!(f, " ")?;
            }
            *wrote = true;
            Ok(())
        };
        for (idx, a) in self.alpha.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            sep(f, &mut wrote)?;
            if a.is_one() {
                write!(f, "x{}", idx + 1)?;
            } else {
                write!(f, "x{}^{}", idx + 1, a)?;
            }
        }
        for (i, j) in beta_pairs(self.n) {
            let b = self.beta(i, j);
            if b.is_zero() {
                continue;
            }
            sep(f, &mut wrote)?;
            if b.is_one() {
                write!(f, "[x{i},x{j}]")?;
            } else {
                write!(f, "[x{i},x{j}]^{b}")?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// The mod-2 exponent-sum vector of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector(Vec<bool>);

impl ParityVector {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Number of nonzero entries; this is the abelian lower bound for the
    /// palindromic length (each palindrome contributes at most one odd
    /// coordinate).
    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn add(&self, other: &ParityVector) -> ParityVector {
        ParityVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a ^ b)
                .collect(),
        )
    }
}

/// Componentwise parity of the exponent sums of `x_1..x_n`; additive under
/// concatenation.
pub fn parity_vector(w: &Word, n: usize) -> Result<ParityVector> {
    if w.max_generator() > n {
        return Err(Error::GeneratorOutOfRange {
            index: w.max_generator(),
            rank: n,
        });
    }
    let mut odd = vec![false; n];
    for s in w.syllables() {
        if s.exponent.bit(0) {
            odd[s.generator - 1] ^= true;
        }
    }
    Ok(ParityVector(odd))
}

//! Free-group words over a fixed basis `x1..xn`.
//!
//! A [`Word`] is kept freely reduced at all times: adjacent syllables carry
//! distinct generators and no syllable has exponent zero. The empty word is
//! the identity. Everything here is pure word algebra, independent of any
//! nilpotency class; exponents are arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Cap on the number of syllables a grouped power `(w)^m` or word power may
/// expand to. Single-syllable powers never expand and are unbounded.
pub const POWER_EXPANSION_LIMIT: usize = 1 << 22;

/// Ambient group parameters: rank `n` and nilpotency class `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupContext {
    n: usize,
    r: usize,
}

impl GroupContext {
    /// A context for the free `r`-step nilpotent group of rank `n`.
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("rank must be at least 1".into()));
        }
        if r == 0 {
            return Err(Error::InvalidContext("class must be at least 1".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::InvalidContext(format!("rank {n} too large")));
        }
        Ok(Self { n, r })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> usize {
        self.r
    }

    /// Same rank, different class; used when moving between quotients.
    pub fn with_class(&self, r: usize) -> Result<Self> {
        Self::new(self.n, r)
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({},{})", self.n, self.r)
    }
}

/// One maximal run `x_g^e` of a reduced word; `e` is never zero and `g` is a
/// 1-based generator index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: BigInt,
}

/// A freely reduced word; the empty word denotes the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

fn push_reduced(buf: &mut Vec<Syllable>, generator: usize, exponent: BigInt) {
    if exponent.is_zero() {
        return;
    }
    if let Some(last) = buf.last_mut() {
        if last.generator == generator {
            last.exponent += exponent;
            if last.exponent.is_zero() {
                buf.pop();
            }
            return;
        }
    }
    buf.push(Syllable {
        generator,
        exponent,
    });
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Self::default()
    }

    /// The single syllable `x_g^e` (identity when `e = 0`).
    pub fn generator_power(generator: usize, exponent: impl Into<BigInt>) -> Self {
        assert!(generator >= 1, "generator indices are 1-based");
        let mut syllables = Vec::new();
        push_reduced(&mut syllables, generator, exponent.into());
        Self { syllables }
    }

    /// Builds a reduced word from a syllable stream, cancelling as it goes.
    pub fn from_syllables<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut syllables = Vec::new();
        for (g, e) in iter {
            assert!(g >= 1, "generator indices are 1-based");
            push_reduced(&mut syllables, g, e);
        }
        Self { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Largest generator index appearing in the word (0 for the identity).
    pub fn max_generator(&self) -> usize {
        self.syllables
            .iter()
            .map(|s| s.generator)
            .max()
            .unwrap_or(0)
    }

    /// Sum of the exponents of `x_g`.
    pub fn exponent_sum(&self, generator: usize) -> BigInt {
        self.syllables
            .iter()
            .filter(|s| s.generator == generator)
            .map(|s| &s.exponent)
            .sum()
    }

    /// Freely reduced product `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut syllables = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut syllables, s.generator, s.exponent.clone());
        }
        Word { syllables }
    }

    /// The group inverse: syllables reversed with negated exponents.
    pub fn invert(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable {
                generator: s.generator,
                exponent: -&s.exponent,
            })
            .collect();
        Word { syllables }
    }

    /// The reverse word: syllables in reverse order, exponents unchanged.
    pub fn reverse(&self) -> Word {
        let syllables = self.syllables.iter().rev().cloned().collect();
        Word { syllables }
    }

    /// True iff the word equals its own reversal.
    pub fn is_palindrome(&self) -> bool {
        let n = self.syllables.len();
        (0..n / 2).all(|i| self.syllables[i] == self.syllables[n - 1 - i])
    }

    /// `self^m`, freely reduced. Single-syllable words fold the exponent and
    /// never expand; longer words are expanded by repetition, subject to
    /// [`POWER_EXPANSION_LIMIT`].
    pub fn pow(&self, m: &BigInt) -> Result<Word> {
        if m.is_zero() || self.is_identity() {
            return Ok(Word::identity());
        }
        if self.syllables.len() == 1 {
            let s = &self.syllables[0];
            return Ok(Word::generator_power(s.generator, &s.exponent * m));
        }
        if m.is_one() {
            return Ok(self.clone());
        }
        let reps = m.magnitude().to_u64_digits();
        let expanded = match &reps[..] {
            [k] => (*k as u128).checked_mul(self.syllables.len() as u128),
            _ => None,
        };
        match expanded {
            Some(total) if total <= POWER_EXPANSION_LIMIT as u128 => {}
            _ => {
                return Err(Error::PowerTooLarge {
                    power: m.to_string(),
                    limit: POWER_EXPANSION_LIMIT,
                })
            }
        }
        let base = if m.is_negative() {
            self.invert()
        } else {
            self.clone()
        };
        let reps = reps[0];
        let mut acc = base.clone();
        for _ in 1..reps {
            acc = acc.concat(&base);
        }
        Ok(acc)
    }

    /// Checks the word is `x_g^e` for the given generator (or empty) and
    /// returns the exponent.
    pub fn as_power_of(&self, generator: usize) -> Option<BigInt> {
        match self.syllables.len() {
            0 => Some(BigInt::zero()),
            1 if self.syllables[0].generator == generator => {
                Some(self.syllables[0].exponent.clone())
            }
            _ => None,
        }
    }
}

/// Freely reduced product `a · b`.
pub fn concat(a: &Word, b: &Word) -> Word {
    a.concat(b)
}

/// The reduced palindrome `u · x_a^alpha · reverse(u)`.
pub fn make_palindrome(u: &Word, a: usize, alpha: &BigInt) -> Word {
    let middle = Word::generator_power(a, alpha.clone());
    u.concat(&middle).concat(&u.reverse())
}

/// The commutator `[u, v] = u^{-1} v^{-1} u v`, freely reduced.
pub fn commutator(u: &Word, v: &Word) -> Word {
    u.invert().concat(&v.invert()).concat(u).concat(v)
}

/// The left-normed commutator word `[x_{i_1}, x_{i_2}, ..., x_{i_k}]`,
/// bracketed from the left. A single index yields the plain generator.
pub fn left_normed_commutator(indices: &[usize]) -> Word {
    assert!(!indices.is_empty());
    let mut w = Word::generator_power(indices[0], 1);
    for &i in &indices[1..] {
        w = commutator(&w, &Word::generator_power(i, 1));
    }
    w
}

/// `[x_{i_1}^c, x_{i_2}, ..., x_{i_k}]`: the left-normed commutator with the
/// exponent pushed onto the first letter, so the syllable count stays fixed
/// no matter how large `c` is. Empty for `c = 0`.
pub fn left_normed_power(indices: &[usize], c: &BigInt) -> Word {
    assert!(!indices.is_empty());
    if c.is_zero() {
        return Word::identity();
    }
    let mut w = Word::generator_power(indices[0], c.clone());
    for &i in &indices[1..] {
        w = commutator(&w, &Word::generator_power(i, 1));
    }
    w
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exponent.is_one() {
                write!(f, "x{}", s.generator)?;
            } else {
                write!(f, "x{}^{}", s.generator, s.exponent)?;
            }
        }
        Ok(())
    }
}

/// Renders a word in the text grammar; inverse of [`parse_word`].
pub fn format_word(w: &Word) -> String {
    w.to_string()
}

/// Parses the word grammar:
///
/// ```text
/// word   := factor* ;
/// factor := atom power? ;
/// atom   := GEN | '(' word ')' | '[' word ',' word ']' ;
/// power  := '^' '-'? DIGIT+ ;
/// GEN    := 'x' DIGIT+            (1-based index <= n)
/// ```
///
/// Whitespace separates factors and is otherwise ignored; `1` alone denotes
/// the identity. Commutators and grouped powers are expanded into plain
/// syllables and the result is freely reduced.
pub fn parse_word(text: &str, ctx: &GroupContext) -> Result<Word> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        rank: ctx.rank(),
    };
    let word = parser.word(None)?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(word)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    rank: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    /// Parses a word up to `stop` (a closing delimiter) or end of input.
    fn word(&mut self, stop: Option<&[u8]>) -> Result<Word> {
        self.skip_ws();
        let at_stop = |b: Option<u8>| match (b, stop) {
            (None, _) => true,
            (Some(b), Some(set)) => set.contains(&b),
            (Some(_), None) => false,
        };
        // "1" denotes the identity when it is the entire (sub)word.
        if self.peek() == Some(b'1') {
            let mark = self.pos;
            self.pos += 1;
            self.skip_ws();
            if at_stop(self.peek()) {
                return Ok(Word::identity());
            }
            self.pos = mark;
            return Err(self.err("'1' denotes the identity and must stand alone"));
        }
        let mut acc = Word::identity();
        loop {
            self.skip_ws();
            if at_stop(self.peek()) {
                return Ok(acc);
            }
            let factor = self.factor()?;
            acc = acc.concat(&factor);
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let negative = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let digits = self.digits()?;
            let mut power: BigInt = digits.parse().expect("digit string");
            if negative {
                power = -power;
            }
            atom.pow(&power)
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let digits = self.digits()?;
                let index: usize = digits.parse().map_err(|_| Error::Parse {
                    pos: at,
                    msg: "generator index too large".into(),
                })?;
                if index == 0 || index > self.rank {
                    return Err(Error::GeneratorOutOfRange {
                        index,
                        rank: self.rank,
                    });
                }
                Ok(Word::generator_power(index, 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word(Some(b")"))?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let left = self.word(Some(b","))?;
                self.expect(b',')?;
                let right = self.word(Some(b"]"))?;
                self.expect(b']')?;
                Ok(commutator(&left, &right))
            }
            _ => Err(self.err("expected 'x', '(' or '['")),
        }
    }
}

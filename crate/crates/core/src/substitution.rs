//! Substitutions over small integer alphabets, their fixed points and codings.
//!
//! Words are contiguous arrays of [`Letter`]s. Positions handed out by this
//! module are 1-based, so the first letter of a fixed point sits at position 1.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 16;

/// Default number of letters a [`WordStream`] may materialize while scanning.
pub const DEFAULT_SCAN_CAP: usize = 1 << 28;

/// One letter of a word, an index into the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Single character used when printing words (`0-9`, then `a-f`).
    pub fn to_char(self) -> char {
        char::from_digit(self.0 as u32, 36).unwrap_or('?')
    }

    pub fn from_char(c: char) -> Option<Letter> {
        c.to_digit(36)
            .filter(|&d| (d as usize) < MAX_ALPHABET)
            .map(|d| Letter(d as u8))
    }
}

impl From<u8> for Letter {
    fn from(v: u8) -> Self {
        Letter(v)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Builds a word from raw letter values.
pub fn word(letters: &[u8]) -> Vec<Letter> {
    letters.iter().map(|&l| Letter(l)).collect()
}

/// Parses a word written as unseparated letter characters, e.g. `"0102"`.
pub fn parse_word(s: &str) -> Option<Vec<Letter>> {
    s.chars().map(Letter::from_char).collect()
}

/// Renders a word as unseparated letter characters.
pub fn render_word(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

fn check_letters(w: &[Letter], alphabet_size: usize) -> Result<()> {
    match w.iter().find(|l| l.index() >= alphabet_size) {
        Some(l) => Err(Error::InvalidLetter {
            letter: l.0,
            alphabet_size,
        }),
        None => Ok(()),
    }
}

/// A letter-to-word rewriting rule with non-empty images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    images: Vec<Vec<Letter>>,
}

impl Substitution {
    pub fn new(images: Vec<Vec<Letter>>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_ALPHABET {
            return Err(Error::InvalidParameter("alphabet size must be in 1..=16"));
        }
        for img in &images {
            if img.is_empty() {
                return Err(Error::InvalidParameter(
                    "substitution images must be non-empty",
                ));
            }
            check_letters(img, n)?;
        }
        Ok(Substitution { images })
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, l: Letter) -> &[Letter] {
        &self.images[l.index()]
    }

    pub fn images(&self) -> &[Vec<Letter>] {
        &self.images
    }

    /// Applies the substitution once to `w`.
    pub fn expand(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        check_letters(w, self.alphabet_size())?;
        let mut out = Vec::with_capacity(w.len() * 2);
        for &l in w {
            out.extend_from_slice(self.image(l));
        }
        Ok(out)
    }

    /// `sub^n(w)`.
    pub fn iterate(&self, w: &[Letter], n: usize) -> Result<Vec<Letter>> {
        let mut cur = w.to_vec();
        for _ in 0..n {
            cur = self.expand(&cur)?;
        }
        Ok(cur)
    }
}

/// The k-bonacci substitution `j -> 0 (j+1)` for `j < k-1` and `k-1 -> 0`.
pub fn kbonacci_substitution(k: usize) -> Result<Substitution> {
    if !(2..=MAX_ALPHABET).contains(&k) {
        return Err(Error::InvalidParameter("k must be in 2..=16"));
    }
    let images = (0..k)
        .map(|j| {
            if j + 1 < k {
                vec![Letter(0), Letter(j as u8 + 1)]
            } else {
                vec![Letter(0)]
            }
        })
        .collect();
    Substitution::new(images)
}

/// Applies `sub` once to `word`.
pub fn expand(sub: &Substitution, word: &[Letter]) -> Result<Vec<Letter>> {
    sub.expand(word)
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", Letter(i as u8), render_word(img))?;
        }
        Ok(())
    }
}

/// Parses the `letter:image` list syntax, e.g. `"0:01,1:2,2:01"`.
///
/// Every letter `0..n` must have exactly one rule, and every image letter
/// must itself have a rule.
impl FromStr for Substitution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rules: Vec<Option<Vec<Letter>>> = vec![None; MAX_ALPHABET];
        let mut count = 0usize;
        for part in s.split(',') {
            let (lhs, rhs) = part
                .trim()
                .split_once(':')
                .ok_or(Error::Parse("expected letter:image"))?;
            let mut lhs_chars = lhs.trim().chars();
            let letter = match (lhs_chars.next(), lhs_chars.next()) {
                (Some(c), None) => Letter::from_char(c).ok_or(Error::Parse("bad letter"))?,
                _ => return Err(Error::Parse("rule must start with a single letter")),
            };
            let image = parse_word(rhs.trim()).ok_or(Error::Parse("bad image letter"))?;
            if image.is_empty() {
                return Err(Error::Parse("empty image"));
            }
            let slot = &mut rules[letter.index()];
            if slot.is_some() {
                return Err(Error::Parse("duplicate rule"));
            }
            *slot = Some(image);
            count += 1;
        }
        if rules[..count].iter().any(Option::is_none) {
            return Err(Error::Parse("rules must cover letters 0..n without gaps"));
        }
        let images: Vec<Vec<Letter>> = rules.into_iter().take(count).flatten().collect();
        if images.iter().flatten().any(|l| l.index() >= count) {
            return Err(Error::Parse("image letter has no rule"));
        }
        Substitution::new(images)
    }
}

/// A letter-to-word map applied once; images may be empty, deleting letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding {
    images: Vec<Vec<Letter>>,
    output_alphabet: usize,
}

impl Coding {
    pub fn new(images: Vec<Vec<Letter>>, output_alphabet: usize) -> Result<Self> {
        if images.is_empty() || images.len() > MAX_ALPHABET {
            return Err(Error::InvalidParameter("alphabet size must be in 1..=16"));
        }
        for img in &images {
            check_letters(img, output_alphabet)?;
        }
        Ok(Coding {
            images,
            output_alphabet,
        })
    }

    pub fn identity(alphabet_size: usize) -> Result<Self> {
        Coding::new(
            (0..alphabet_size).map(|l| vec![Letter(l as u8)]).collect(),
            alphabet_size,
        )
    }

    /// The coding on `alphabet_size` letters that deletes `letter` and keeps
    /// every other letter.
    pub fn deleting(alphabet_size: usize, letter: Letter) -> Result<Self> {
        if letter.index() >= alphabet_size {
            return Err(Error::InvalidLetter {
                letter: letter.0,
                alphabet_size,
            });
        }
        Coding::new(
            (0..alphabet_size)
                .map(|l| {
                    if l == letter.index() {
                        Vec::new()
                    } else {
                        vec![Letter(l as u8)]
                    }
                })
                .collect(),
            alphabet_size,
        )
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn output_alphabet(&self) -> usize {
        self.output_alphabet
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        check_letters(w, self.alphabet_size())?;
        let mut out = Vec::with_capacity(w.len());
        for &l in w {
            out.extend_from_slice(&self.images[l.index()]);
        }
        Ok(out)
    }
}

pub fn apply_coding(coding: &Coding, word: &[Letter]) -> Result<Vec<Letter>> {
    coding.apply(word)
}

/// Lazily grown prefix of the fixed point of a substitution.
///
/// The materialized prefix is always a prefix of the true fixed point.
/// Growing it expands the current prefix, which yields a longer prefix.
#[derive(Debug, Clone)]
pub struct WordStream {
    sub: Substitution,
    seed: Letter,
    prefix: Vec<Letter>,
    cap: usize,
}

impl WordStream {
    pub fn new(sub: Substitution, seed: Letter) -> Result<Self> {
        check_letters(&[seed], sub.alphabet_size())?;
        let img = sub.image(seed);
        if img[0] != seed {
            return Err(Error::NoFixedPoint(seed.0));
        }
        Ok(WordStream {
            prefix: img.to_vec(),
            sub,
            seed,
            cap: DEFAULT_SCAN_CAP,
        })
    }

    /// The k-bonacci word, seeded at 0.
    pub fn kbonacci(k: usize) -> Result<Self> {
        WordStream::new(kbonacci_substitution(k)?, Letter(0))
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn substitution(&self) -> &Substitution {
        &self.sub
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    /// Grows the prefix to at least `n` letters and returns it.
    pub fn ensure(&mut self, n: usize) -> Result<&[Letter]> {
        if n > self.prefix.len() && self.prefix.len() == 1 {
            return Err(Error::NonGrowing(self.seed.0));
        }
        while self.prefix.len() < n {
            if self.prefix.len() >= self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            let mut next = Vec::with_capacity(n.max(self.prefix.len() * 2));
            for &l in &self.prefix {
                next.extend_from_slice(self.sub.image(l));
                if next.len() >= n {
                    break;
                }
            }
            self.prefix = next;
        }
        Ok(&self.prefix[..])
    }

    /// The letter at 1-based `position`.
    pub fn get(&mut self, position: usize) -> Result<Letter> {
        if position == 0 {
            return Err(Error::InvalidParameter("positions are 1-based"));
        }
        Ok(self.ensure(position)?[position - 1])
    }

    /// 1-based positions of the first `n` occurrences of `letter`.
    pub fn letter_positions(&mut self, letter: Letter, n: usize) -> Result<Vec<u64>> {
        check_letters(&[letter], self.sub.alphabet_size())?;
        let mut out = Vec::with_capacity(n);
        let mut i = 0usize;
        while out.len() < n {
            if i == self.prefix.len() {
                if i >= self.cap {
                    return Err(Error::CapExceeded { cap: self.cap });
                }
                let want = (i * 2).max(64).min(self.cap);
                self.ensure(want)?;
            }
            if self.prefix[i] == letter {
                out.push(i as u64 + 1);
            }
            i += 1;
        }
        Ok(out)
    }
}

/// First `n` letters of the fixed point of `sub` seeded at `seed`.
pub fn fixed_point_prefix(sub: &Substitution, seed: Letter, n: usize) -> Result<Vec<Letter>> {
    let mut stream = WordStream::new(sub.clone(), seed)?;
    if n <= 1 {
        return Ok(stream.prefix()[..n].to_vec());
    }
    Ok(stream.ensure(n)?[..n].to_vec())
}

/// Positions of the first `n` occurrences of `letter` in the stream.
pub fn letter_positions(stream: &mut WordStream, letter: Letter, n: usize) -> Result<Vec<u64>> {
    stream.letter_positions(letter, n)
}

/// The palindrome `w_j` with `theta_k^j(0) = w_j j`, built by
/// `w_0 = empty`, `w_{j+1} = w_j j w_j`.
pub fn prefix_word(k: usize, j: usize) -> Result<Vec<Letter>> {
    if !(2..=MAX_ALPHABET).contains(&k) {
        return Err(Error::InvalidParameter("k must be in 2..=16"));
    }
    if j >= k {
        return Err(Error::InvalidParameter("j must be below k"));
    }
    let mut w = Vec::new();
    for i in 0..j {
        let mut next = Vec::with_capacity(2 * w.len() + 1);
        next.extend_from_slice(&w);
        next.push(Letter(i as u8));
        next.extend_from_slice(&w);
        w = next;
    }
    Ok(w)
}

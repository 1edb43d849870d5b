//! Colored letters and words, ascent-starred ordered set partitions, faces,
//! and the statistics on them.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subset::{Subset, MAX_N};

/// A letter `letter^color` of the alphabet `[n] x {0,..,r-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ColoredLetter {
    pub letter: usize,
    pub color: usize,
}

impl ColoredLetter {
    pub fn new(letter: usize, color: usize) -> Self {
        ColoredLetter { letter, color }
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.letter, self.color)
    }
}

/// Larger colors are smaller letters; equal colors compare by letter.
pub fn compare_letters(a: ColoredLetter, b: ColoredLetter, r: usize) -> Result<Ordering> {
    for x in [a, b] {
        if x.color >= r {
            return Err(Error::InvalidColor { color: x.color, r });
        }
    }
    Ok(letter_order(a, b))
}

fn letter_order(a: ColoredLetter, b: ColoredLetter) -> Ordering {
    b.color.cmp(&a.color).then(a.letter.cmp(&b.letter))
}

/// A word of distinct colored letters from `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredWord {
    letters: Vec<ColoredLetter>,
    n: usize,
    r: usize,
}

impl ColoredWord {
    pub fn new(letters: Vec<ColoredLetter>, n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::domain("r must be positive"));
        }
        if n > MAX_N {
            return Err(Error::domain(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut seen = Subset::EMPTY;
        for l in &letters {
            if l.letter == 0 || l.letter > n {
                return Err(Error::domain(format!("letter {} outside [1,{n}]", l.letter)));
            }
            if l.color >= r {
                return Err(Error::InvalidColor { color: l.color, r });
            }
            if seen.contains(l.letter) {
                return Err(Error::domain(format!("letter {} repeated", l.letter)));
            }
            seen = seen.insert(l.letter);
        }
        Ok(ColoredWord { letters, n, r })
    }

    /// Builds a word from parallel letter and color lists.
    pub fn from_parts(perm: &[usize], colors: &[usize], n: usize, r: usize) -> Result<Self> {
        if perm.len() != colors.len() {
            return Err(Error::domain("letter and color lists differ in length"));
        }
        let letters = perm.iter().zip(colors).map(|(&l, &c)| ColoredLetter::new(l, c)).collect();
        ColoredWord::new(letters, n, r)
    }

    /// `1^0 2^0 ... n^0`.
    pub fn identity(n: usize, r: usize) -> Self {
        ColoredWord {
            letters: (1..=n).map(|i| ColoredLetter::new(i, 0)).collect(),
            n,
            r,
        }
    }

    /// Parses "4^3 2^2 5" (a missing color means 0). A single token of
    /// digits without `^`, such as "2461357", is read one letter per digit.
    pub fn parse(s: &str, n: usize, r: usize) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let mut letters = Vec::new();
        if toks.len() == 1 && !toks[0].contains('^') && toks[0].len() > 1 {
            for ch in toks[0].chars() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(format!("bad letter `{ch}`")))?;
                letters.push(ColoredLetter::new(d as usize, 0));
            }
        } else {
            for t in toks {
                letters.push(parse_letter(t)?);
            }
        }
        ColoredWord::new(letters, n, r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[ColoredLetter] {
        &self.letters
    }

    /// The underlying (uncolored) letters in order.
    pub fn underlying(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l.letter).collect()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l.color).collect()
    }

    pub fn support(&self) -> Subset {
        self.letters.iter().fold(Subset::EMPTY, |s, l| s.insert(l.letter))
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    /// Whether position `i` (1-based, `i < len`) is a descent.
    pub fn is_descent(&self, i: usize) -> bool {
        letter_order(self.letters[i - 1], self.letters[i]) == Ordering::Greater
    }

    /// 1-based descent positions.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.is_descent(i)).collect()
    }

    /// 1-based ascent positions.
    pub fn ascent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| !self.is_descent(i)).collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn color_sum(&self) -> usize {
        self.letters.iter().map(|l| l.color).sum()
    }

    pub fn maj(&self) -> usize {
        self.color_sum() + self.r * self.descent_set().iter().sum::<usize>()
    }
}

fn parse_letter(t: &str) -> Result<ColoredLetter> {
    let (l, c) = match t.split_once('^') {
        Some((l, c)) => (l, c),
        None => (t, "0"),
    };
    let letter = l.parse().map_err(|_| Error::parse(format!("bad letter `{t}`")))?;
    let color = c.parse().map_err(|_| Error::parse(format!("bad color `{t}`")))?;
    Ok(ColoredLetter::new(letter, color))
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().join(" "))
    }
}

/// Positions (1-based) of the starred ascents of a word carrying `blocks`
/// blocks and the augmentation `lambda`.
fn starred_positions(word: &ColoredWord, lambda: &Partition, blocks: usize) -> Result<Vec<usize>> {
    let m = word.len();
    let des = word.des();
    if blocks == 0 || blocks > m {
        return Err(Error::MalformedPartition(format!("{blocks} blocks on {m} letters")));
    }
    if des >= blocks {
        return Err(Error::MalformedPartition(format!("des = {des} is not below {blocks}")));
    }
    let stars = m - blocks;
    let south = blocks - des - 1;
    if lambda.len() > south {
        return Err(Error::MalformedPartition(format!(
            "lambda {lambda} has more than {south} parts"
        )));
    }
    if lambda.largest() > stars {
        return Err(Error::MalformedPartition(format!("lambda {lambda} has a part above {stars}")));
    }
    // east counts before each south step, weakly increasing
    let mut before: Vec<usize> = vec![0; south - lambda.len()];
    before.extend(lambda.parts().iter().rev());
    let ascents = word.ascent_set();
    let mut starred = Vec::with_capacity(stars);
    let mut east = 0;
    let mut j = 0;
    for &a in &ascents {
        if j < south && east == before[j] {
            j += 1;
        } else {
            starred.push(a);
            east += 1;
        }
    }
    debug_assert_eq!(starred.len(), stars);
    Ok(starred)
}

/// Reads the augmentation off a word whose starred ascents are given.
fn lambda_from_stars(word: &ColoredWord, starred: &[usize]) -> Partition {
    let mut east = 0;
    let mut parts = Vec::new();
    for a in word.ascent_set() {
        if starred.contains(&a) {
            east += 1;
        } else {
            parts.push(east);
        }
    }
    Partition::new(parts)
}

fn cut_blocks(word: &ColoredWord, starred: &[usize]) -> Vec<Vec<ColoredLetter>> {
    let mut blocks = vec![vec![]];
    for (i, l) in word.letters().iter().enumerate() {
        if i > 0 && !starred.contains(&i) {
            blocks.push(vec![]);
        }
        blocks.last_mut().unwrap().push(*l);
    }
    blocks
}

/// Sorts each block increasingly and concatenates; returns the word and the
/// starred positions.
fn join_blocks(blocks: &[Vec<ColoredLetter>], n: usize, r: usize) -> Result<(ColoredWord, Vec<usize>)> {
    let mut letters = Vec::new();
    let mut starred = Vec::new();
    for b in blocks {
        if b.is_empty() {
            return Err(Error::MalformedPartition("empty block".into()));
        }
        let mut b = b.clone();
        for l in &b {
            if l.color >= r {
                return Err(Error::InvalidColor { color: l.color, r });
            }
        }
        b.sort_by(|x, y| letter_order(*x, *y));
        for (i, l) in b.into_iter().enumerate() {
            if i > 0 {
                starred.push(letters.len());
            }
            letters.push(l);
        }
    }
    let word = ColoredWord::new(letters, n, r).map_err(|e| Error::MalformedPartition(e.to_string()))?;
    Ok((word, starred))
}

fn blocks_string(blocks: &[Vec<ColoredLetter>]) -> String {
    blocks.iter().map(|b| b.iter().join(" ")).join("|")
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<ColoredLetter>>> {
    s.split('|')
        .map(|b| {
            let toks: Vec<&str> = b.split_whitespace().collect();
            if toks.len() == 1 && !toks[0].contains('^') && toks[0].len() > 1 {
                toks[0]
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| ColoredLetter::new(d as usize, 0))
                            .ok_or_else(|| Error::parse(format!("bad letter `{ch}`")))
                    })
                    .collect()
            } else {
                toks.into_iter().map(parse_letter).collect()
            }
        })
        .collect()
}

fn lambda_string(lambda: &Partition) -> String {
    lambda.parts().iter().join(",")
}

fn strip_parens(s: &str) -> Result<&str> {
    let t = s.trim();
    t.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::parse(format!("expected parentheses around `{s}`")))
}

/// An ordered set partition in ascent-starred form `(g, λ)`. The number of
/// blocks `k` is supplied by the caller.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Osp {
    word: ColoredWord,
    lambda: Partition,
}

impl Osp {
    /// Builds `(g, λ)` and checks it is valid for `k` blocks.
    pub fn new(word: ColoredWord, lambda: Partition, k: usize) -> Result<Self> {
        let p = Osp { word, lambda };
        p.validate(k)?;
        Ok(p)
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        if !self.word.is_full() {
            return Err(Error::MalformedPartition("word does not use every letter of [n]".into()));
        }
        starred_positions(&self.word, &self.lambda, k).map(|_| ())
    }

    pub fn word(&self) -> &ColoredWord {
        &self.word
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn r(&self) -> usize {
        self.word.r()
    }

    /// `maj(g) + r|λ|`.
    pub fn comaj(&self) -> usize {
        self.word.maj() + self.r() * self.lambda.size()
    }

    /// Builds the ascent-starred form from blocks; `k` is the block count.
    pub fn from_blocks(blocks: &[Vec<ColoredLetter>], n: usize, r: usize) -> Result<Self> {
        let total: usize = blocks.iter().map(Vec::len).sum();
        if total != n {
            return Err(Error::MalformedPartition(format!("blocks cover {total} letters, not {n}")));
        }
        let (word, starred) = join_blocks(blocks, n, r)?;
        let lambda = lambda_from_stars(&word, &starred);
        Ok(Osp { word, lambda })
    }

    pub fn to_blocks(&self, k: usize) -> Result<Vec<Vec<ColoredLetter>>> {
        let starred = starred_positions(&self.word, &self.lambda, k)?;
        Ok(cut_blocks(&self.word, &starred))
    }

    /// "B1|B2|..." with the letters of each block in increasing order.
    pub fn blocks_string(&self, k: usize) -> Result<String> {
        Ok(blocks_string(&self.to_blocks(k)?))
    }

    pub fn parse_blocks(s: &str, n: usize, r: usize) -> Result<Self> {
        Osp::from_blocks(&parse_blocks(s)?, n, r)
    }

    /// Parses "(word; l1,l2,...)" and validates against `k`.
    pub fn parse(s: &str, n: usize, k: usize, r: usize) -> Result<Self> {
        let inner = strip_parens(s)?;
        let (w, l) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse(format!("expected `(word; lambda)`, got `{s}`")))?;
        let word = ColoredWord::parse(w, n, r)?;
        let lambda = Partition::parse(l)?;
        Osp::new(word, lambda, k)
    }

    /// Sum of the weights `w_i` over ascent positions, where `w_i` counts the
    /// blocks completed within the first `i` letters. Only for `r = 1`.
    pub fn hrs_maj(&self, k: usize) -> Result<usize> {
        if self.r() != 1 {
            return Err(Error::UnsupportedStatistic("hrs_maj"));
        }
        let blocks = self.to_blocks(k)?;
        let mut weights = Vec::with_capacity(self.n());
        let mut done = 0;
        for b in &blocks {
            for j in 0..b.len() {
                if j + 1 == b.len() {
                    done += 1;
                }
                weights.push(done);
            }
        }
        Ok(self.word.ascent_set().iter().map(|&i| weights[i - 1]).sum())
    }

    /// The weight sequence used by [`Osp::hrs_maj`].
    pub fn hrs_weights(&self, k: usize) -> Result<Vec<usize>> {
        let blocks = self.to_blocks(k)?;
        let mut weights = Vec::new();
        let mut done = 0;
        for b in &blocks {
            for j in 0..b.len() {
                if j + 1 == b.len() {
                    done += 1;
                }
                weights.push(done);
            }
        }
        Ok(weights)
    }
}

impl fmt::Display for Osp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.word, lambda_string(&self.lambda))
    }
}

/// A face `(Z, g, λ)`: a zero block `Z` and an ascent-starred partition of
/// the remaining letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Face {
    zero: Subset,
    word: ColoredWord,
    lambda: Partition,
}

impl Face {
    pub fn new(zero: Subset, word: ColoredWord, lambda: Partition, k: usize) -> Result<Self> {
        let f = Face { zero, word, lambda };
        f.validate(k)?;
        Ok(f)
    }

    /// The unique face in dimension zero: everything sits in the zero block.
    pub fn full_zero(n: usize, r: usize) -> Self {
        Face {
            zero: Subset::prefix(n),
            word: ColoredWord { letters: vec![], n, r },
            lambda: Partition::empty(),
        }
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        let n = self.word.n();
        let z = self.zero.len();
        if self.word.support().union(self.zero) != Subset::prefix(n)
            || !self.word.support().intersection(self.zero).is_empty()
        {
            return Err(Error::InvalidFace("word must use exactly the letters outside Z".into()));
        }
        if k == 0 {
            return if z == n && self.lambda.is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidFace("for k = 0 the zero block must be [n]".into()))
            };
        }
        if z + k > n {
            return Err(Error::InvalidFace(format!("|Z| = {z} exceeds n - k = {}", n as isize - k as isize)));
        }
        starred_positions(&self.word, &self.lambda, k)
            .map(|_| ())
            .map_err(|e| Error::InvalidFace(e.to_string()))
    }

    pub fn zero(&self) -> Subset {
        self.zero
    }

    pub fn word(&self) -> &ColoredWord {
        &self.word
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// `k r |Z| + maj(g) + r |λ|`.
    pub fn comaj(&self, k: usize) -> usize {
        let r = self.word.r();
        k * r * self.zero.len() + self.word.maj() + r * self.lambda.size()
    }

    /// The zero block followed by the colored blocks.
    pub fn to_blocks(&self, k: usize) -> Result<(Subset, Vec<Vec<ColoredLetter>>)> {
        if self.word.is_empty() {
            return Ok((self.zero, vec![]));
        }
        let starred = starred_positions(&self.word, &self.lambda, k)?;
        Ok((self.zero, cut_blocks(&self.word, &starred)))
    }

    pub fn from_blocks(zero: Subset, blocks: &[Vec<ColoredLetter>], n: usize, r: usize) -> Result<Self> {
        let total: usize = zero.len() + blocks.iter().map(Vec::len).sum::<usize>();
        if total != n {
            return Err(Error::MalformedPartition(format!("blocks cover {total} letters, not {n}")));
        }
        let (word, starred) = join_blocks(blocks, n, r)?;
        if !word.support().intersection(zero).is_empty() {
            return Err(Error::MalformedPartition("zero block meets a colored block".into()));
        }
        let lambda = lambda_from_stars(&word, &starred);
        Ok(Face { zero, word, lambda })
    }

    /// "{Z}|B1|B2|..." form.
    pub fn blocks_string(&self, k: usize) -> Result<String> {
        let (z, blocks) = self.to_blocks(k)?;
        let mut s = z.to_string();
        if !blocks.is_empty() {
            s.push('|');
            s.push_str(&blocks_string(&blocks));
        }
        Ok(s)
    }

    /// Parses "({1,4}; 5^2 2^1; 2)"; the braces around `Z` are optional.
    pub fn parse(s: &str, n: usize, k: usize, r: usize) -> Result<Self> {
        let inner = strip_parens(s)?;
        let fields: Vec<&str> = inner.split(';').collect();
        if fields.len() != 3 {
            return Err(Error::parse(format!("expected `(Z; word; lambda)`, got `{s}`")));
        }
        let z = fields[0].trim().trim_start_matches('{').trim_end_matches('}');
        let zero = if z.trim().is_empty() {
            Subset::EMPTY
        } else {
            Subset::from_elems(
                z.split(',')
                    .map(|e| e.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad element `{e}`"))))
                    .collect::<Result<Vec<_>>>()?,
            )?
        };
        let word = if fields[1].trim().is_empty() {
            ColoredWord::new(vec![], n, r)?
        } else {
            ColoredWord::parse(fields[1], n, r)?
        };
        let lambda = Partition::parse(fields[2])?;
        Face::new(zero, word, lambda, k)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.zero, self.word, lambda_string(&self.lambda))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// `|G_n| = r^n n!`.
pub fn count_words(n: usize, r: usize) -> u128 {
    (r as u128).pow(n as u32) * factorial(n)
}

/// `r^n k! S(n,k)`.
pub fn count_osp(n: usize, k: usize, r: usize) -> u128 {
    (r as u128).pow(n as u32) * factorial(k) * stirling2(n, k)
}

/// `Σ_z C(n,z) r^(n-z) k! S(n-z,k)`.
pub fn count_faces(n: usize, k: usize, r: usize) -> u128 {
    (0..=n)
        .map(|z| binomial(n, z) * (r as u128).pow((n - z) as u32) * factorial(k) * stirling2(n - z, k))
        .sum()
}

fn check_range(n: usize, k: usize, r: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::domain(format!("n = {n} outside 1..={MAX_N}")));
    }
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    if r == 0 {
        return Err(Error::domain("r must be positive"));
    }
    Ok(())
}

/// All colored words using each letter of `support` once, ordered by
/// underlying permutation and then by color vector.
pub fn enumerate_words_on(support: &[usize], n: usize, r: usize) -> Vec<ColoredWord> {
    let m = support.len();
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    let colorings: Vec<Vec<usize>> = if m == 0 {
        vec![vec![]]
    } else {
        (0..m).map(|_| 0..r).multi_cartesian_product().collect()
    };
    let mut out = Vec::new();
    for perm in sorted.iter().copied().permutations(m) {
        for colors in &colorings {
            out.push(ColoredWord::from_parts(&perm, colors, n, r).expect("valid by construction"));
        }
    }
    out
}

/// All `r^n n!` colored permutations of `[n]`.
pub fn enumerate_words(n: usize, r: usize) -> Result<Vec<ColoredWord>> {
    check_range(n, 0, r)?;
    Ok(enumerate_words_on(&(1..=n).collect::<Vec<_>>(), n, r))
}

/// All `(g, λ)` with `k` blocks.
pub fn enumerate_osp(n: usize, k: usize, r: usize) -> Result<Vec<Osp>> {
    check_range(n, k, r)?;
    if k == 0 {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for word in enumerate_words_on(&(1..=n).collect::<Vec<_>>(), n, r) {
        let des = word.des();
        if des >= k {
            continue;
        }
        for lambda in Partition::in_box(k - des - 1, n - k) {
            out.push(Osp { word: word.clone(), lambda });
        }
    }
    Ok(out)
}

/// All faces `(Z, g, λ)` of dimension `k`, ordered by `Z` (as a sorted
/// list), then word, then `λ`.
pub fn enumerate_faces(n: usize, k: usize, r: usize) -> Result<Vec<Face>> {
    check_range(n, k, r)?;
    if k == 0 {
        return Ok(vec![Face::full_zero(n, r)]);
    }
    let mut zs: Vec<Vec<usize>> = (0..=n - k).flat_map(|z| (1..=n).combinations(z)).collect();
    zs.sort();
    let mut out = Vec::new();
    for zlist in zs {
        let zero = Subset::from_elems(zlist.iter().copied())?;
        let rest: Vec<usize> = (1..=n).filter(|i| !zero.contains(*i)).collect();
        let m = rest.len();
        for word in enumerate_words_on(&rest, n, r) {
            let des = word.des();
            if des >= k {
                continue;
            }
            for lambda in Partition::in_box(k - des - 1, m - k) {
                out.push(Face { zero, word: word.clone(), lambda });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize, r: usize) -> ColoredWord {
        ColoredWord::parse(s, n, r).unwrap()
    }

    #[test]
    fn letter_order_examples() {
        let l = ColoredLetter::new;
        assert_eq!(compare_letters(l(1, 2), l(3, 0), 3).unwrap(), Ordering::Less);
        assert_eq!(compare_letters(l(3, 2), l(1, 1), 3).unwrap(), Ordering::Less);
        assert_eq!(compare_letters(l(2, 1), l(2, 1), 3).unwrap(), Ordering::Equal);
        assert!(matches!(compare_letters(l(1, 3), l(2, 0), 3), Err(Error::InvalidColor { .. })));
    }

    #[test]
    fn alphabet_chain() {
        let (n, r) = (3, 2);
        let mut all: Vec<ColoredLetter> = (1..=n)
            .flat_map(|i| (0..r).map(move |c| ColoredLetter::new(i, c)))
            .collect();
        all.sort_by(|a, b| compare_letters(*a, *b, r).unwrap());
        let want: Vec<ColoredLetter> = [(1, 1), (2, 1), (3, 1), (1, 0), (2, 0), (3, 0)]
            .iter()
            .map(|&(a, b)| ColoredLetter::new(a, b))
            .collect();
        assert_eq!(all, want);
    }

    #[test]
    fn descents_and_maj() {
        let g = w("3^3 1^1 5^2 2^2 4^0", 5, 4);
        assert_eq!(g.descent_set(), vec![2, 3]);
        assert_eq!(g.maj(), 28);
        let h = w("4^0 2^2 5^2 3^2 1^1", 5, 3);
        assert_eq!(h.descent_set(), vec![1, 3]);
        assert_eq!(h.maj(), 19);
        assert_eq!(ColoredWord::identity(4, 2).maj(), 0);
    }

    #[test]
    fn word_rejects_bad_input() {
        assert!(ColoredWord::parse("1^0 1^1", 2, 2).is_err());
        assert!(ColoredWord::parse("3^0", 2, 2).is_err());
        assert!(matches!(ColoredWord::parse("1^2", 2, 2), Err(Error::InvalidColor { .. })));
    }

    #[test]
    fn blocks_example() {
        let p = Osp::parse_blocks("4^3 2^2 3^2|9^1|6^1 1^0|5^2|7^2 8^1", 9, 4).unwrap();
        assert_eq!(p.to_string(), "(4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1; 3,2)");
        assert_eq!(p.word().descent_set(), vec![4, 6]);
        assert_eq!(p.comaj(), 74);
        assert_eq!(p.blocks_string(5).unwrap(), "4^3 2^2 3^2|9^1|6^1 1^0|5^2|7^2 8^1");
    }

    #[test]
    fn r1_example_and_weights() {
        let p = Osp::parse_blocks("24|6|1|357", 7, 1).unwrap();
        assert_eq!(p.to_string(), "(2^0 4^0 6^0 1^0 3^0 5^0 7^0; 1,1)");
        assert_eq!(p.hrs_weights(4).unwrap(), vec![0, 1, 2, 3, 3, 3, 4]);
        assert_eq!(p.hrs_maj(4).unwrap(), 10);
        assert_eq!(p.comaj(), 5);
    }

    #[test]
    fn hrs_maj_requires_r1() {
        let p = Osp::parse_blocks("1^0 2^1", 2, 2).unwrap();
        assert_eq!(p.hrs_maj(1), Err(Error::UnsupportedStatistic("hrs_maj")));
    }

    #[test]
    fn singleton_blocks_give_identity() {
        let p = Osp::parse_blocks("1|2|3|4", 4, 1).unwrap();
        assert_eq!(p.word(), &ColoredWord::identity(4, 1));
        assert!(p.lambda().is_empty());
    }

    #[test]
    fn malformed_blocks() {
        assert!(matches!(Osp::parse_blocks("1 2|2", 3, 1), Err(Error::MalformedPartition(_))));
        assert!(matches!(Osp::parse_blocks("1|2", 3, 1), Err(Error::MalformedPartition(_))));
    }

    #[test]
    fn face_example() {
        let f = Face::parse("({1,4}; 5^2 2^1 3^1 7^2 6^0; 2)", 7, 3, 3).unwrap();
        assert_eq!(f.word().maj(), 15);
        assert_eq!(f.comaj(3), 39);
        let (z, blocks) = f.to_blocks(3).unwrap();
        assert_eq!(z, Subset::from_elems([1, 4]).unwrap());
        assert_eq!(blocks.len(), 3);
        assert!(Face::parse("({1,2,3,4,5}; 6^0 7^0; )", 7, 3, 3).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_words(2, 2).unwrap().len(), 8);
        assert_eq!(enumerate_osp(3, 2, 1).unwrap().len(), 6);
        assert!(enumerate_osp(2, 3, 1).is_err());
        for n in 1..=4 {
            for r in 1..=2 {
                assert_eq!(enumerate_faces(n, n, r).unwrap().len() as u128, count_words(n, r));
                for k in 0..=n {
                    assert_eq!(enumerate_osp(n, k, r).unwrap().len() as u128, count_osp(n, k, r));
                    assert_eq!(enumerate_faces(n, k, r).unwrap().len() as u128, count_faces(n, k, r));
                }
            }
        }
    }
}

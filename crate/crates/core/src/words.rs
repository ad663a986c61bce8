//! Alphabets, words, subword-occurrence counting and occurrence vectors.
//!
//! Symbols are stored as indices into an explicit [`Alphabet`]. Occurrences
//! are counted with overlaps: `|w|_v` is the number of ways to split
//! `w = x v y`.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a symbol in its alphabet.
pub type Symbol = u16;

/// An ordered, finite, duplicate-free set of symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptyAlphabet);
            }
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        if symbols.len() > Symbol::MAX as usize {
            return Err(Error::CapExceeded(format!("alphabet of {} symbols", symbols.len())));
        }
        Ok(Alphabet { symbols })
    }

    /// Parses `"ab"` (one symbol per character) or `"a,b,c"` (comma form,
    /// which also admits multi-character symbols).
    pub fn parse(spec: &str) -> Result<Self> {
        if spec.contains(',') {
            Alphabet::new(spec.split(',').map(str::trim))
        } else {
            Alphabet::new(spec.chars().map(String::from))
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    fn index_of(&self, symbol: &str) -> Result<Symbol> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .map(|i| i as Symbol)
            .ok_or_else(|| Error::UnknownSymbol {
                symbol: symbol.to_string(),
                alphabet: self.symbols.join(","),
            })
    }

    /// Parses a word. Single-character alphabets read one symbol per
    /// character; otherwise symbols are separated by `.`.
    /// `""` and `"ε"` denote the empty word.
    pub fn word(&self, text: &str) -> Result<Word> {
        if text.is_empty() || (text == "ε" && self.index_of("ε").is_err()) {
            return Ok(Word::default());
        }
        let symbols = if self.single_char() {
            text.chars()
                .map(|c| self.index_of(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split('.').map(|s| self.index_of(s)).collect::<Result<Vec<_>>>()?
        };
        Ok(Word(symbols))
    }

    /// Renders a word; the empty word renders as `ε`.
    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_char() { "" } else { "." };
        word.0
            .iter()
            .map(|&s| self.symbols[s as usize].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// All words of length exactly `n` in lexicographic order (by symbol
    /// index).
    pub fn words_of_length(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        let q = self.len() as u128;
        let total = q.checked_pow(n as u32).unwrap_or(u128::MAX);
        (0..total).map(move |mut code| {
            let mut syms = vec![0; n];
            for slot in syms.iter_mut().rev() {
                *slot = (code % q) as Symbol;
                code /= q;
            }
            Word(syms)
        })
    }

    pub fn contains(&self, word: &Word) -> bool {
        word.0.iter().all(|&s| (s as usize) < self.len())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(","))
    }
}

/// A finite sequence of symbol indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

/// The parameter words `w_1, ..., w_k` of a Word-MIX language, over a shared
/// explicit alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamList {
    alphabet: Alphabet,
    words: Vec<Word>,
}

impl ParamList {
    pub fn new(alphabet: Alphabet, words: Vec<Word>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::EmptyParamList);
        }
        for (i, w) in words.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::EmptyParamWord(i + 1));
            }
            if !alphabet.contains(w) {
                return Err(Error::UnknownSymbol {
                    symbol: format!("#{}", w.0.iter().max().copied().unwrap_or(0)),
                    alphabet: alphabet.symbols.join(","),
                });
            }
        }
        Ok(ParamList { alphabet, words })
    }

    /// Parses a comma-separated word list such as `"ab,ba,a"`.
    pub fn parse(alphabet: &Alphabet, list: &str) -> Result<Self> {
        let words = list
            .split(',')
            .map(|w| alphabet.word(w.trim()))
            .collect::<Result<Vec<_>>>()?;
        ParamList::new(alphabet.clone(), words)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Number of parameter words `k`.
    pub fn k(&self) -> usize {
        self.words.len()
    }

    /// Maximum parameter word length `N`.
    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        self.words
            .iter()
            .map(|w| self.alphabet.render(w))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A vector of occurrence counts, one per parameter word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OccVector(pub Vec<u64>);

impl OccVector {
    pub fn zero(k: usize) -> Self {
        OccVector(vec![0; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, factor: u64) -> OccVector {
        OccVector(self.0.iter().map(|c| c * factor).collect())
    }
}

impl AddAssign<&OccVector> for OccVector {
    fn add_assign(&mut self, rhs: &OccVector) {
        assert_eq!(self.0.len(), rhs.0.len(), "occurrence vectors of different arity");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Add<&OccVector> for OccVector {
    type Output = OccVector;
    fn add(mut self, rhs: &OccVector) -> OccVector {
        self += rhs;
        self
    }
}

impl fmt::Display for OccVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `|w|_v`, overlapping occurrences included.
pub fn count_occurrences(w: &Word, v: &Word) -> Result<u64> {
    if v.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let (w, v) = (w.as_slice(), v.as_slice());
    if v.len() > w.len() {
        return Ok(0);
    }
    let mut count = 0;
    for start in 0..=w.len() - v.len() {
        if &w[start..start + v.len()] == v {
            count += 1;
        }
    }
    Ok(count)
}

pub fn occ_vector(w: &Word, p: &ParamList) -> OccVector {
    OccVector(
        p.words()
            .iter()
            .map(|v| count_occurrences(w, v).expect("parameter words are non-empty"))
            .collect(),
    )
}

/// Component `i` is 1 iff `w_i` is a suffix of `w`.
pub fn suffix_indicator(w: &Word, p: &ParamList) -> OccVector {
    OccVector(
        p.words()
            .iter()
            .map(|v| u64::from(w.as_slice().ends_with(v.as_slice())))
            .collect(),
    )
}

/// Length-`n` prefix and suffix of `w`.
pub fn pref_suff(w: &Word, n: usize) -> Result<(Word, Word)> {
    if n > w.len() {
        return Err(Error::OutOfRange { n, len: w.len() });
    }
    let s = w.as_slice();
    Ok((Word(s[..n].to_vec()), Word(s[s.len() - n..].to_vec())))
}

/// `Σ_i (max_j c_j − c_i)`; zero exactly when every component is equal.
pub fn diff(v: &OccVector) -> u64 {
    let max = v.0.iter().copied().max().unwrap_or(0);
    v.0.iter().map(|c| max - c).sum()
}

pub fn is_member(w: &Word, p: &ParamList) -> bool {
    diff(&occ_vector(w, p)) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn w(s: &str) -> Word {
        ab().word(s).unwrap()
    }

    fn params(list: &str) -> ParamList {
        ParamList::parse(&ab(), list).unwrap()
    }

    #[test]
    fn counts_overlapping_occurrences() {
        assert_eq!(count_occurrences(&w("ba"), &w("ba")).unwrap(), 1);
        assert_eq!(count_occurrences(&w(""), &w("a")).unwrap(), 0);
        assert_eq!(count_occurrences(&w("aaa"), &w("aa")).unwrap(), 2);
        assert_eq!(count_occurrences(&w("ab"), &w("aba")).unwrap(), 0);
    }

    #[test]
    fn empty_pattern_is_rejected() {
        assert_eq!(count_occurrences(&w("ab"), &w("")), Err(Error::EmptyPattern));
    }

    #[test]
    fn occurrence_vectors() {
        assert_eq!(occ_vector(&w("ba"), &params("ab,ba,a")).0, vec![0, 1, 1]);
        assert_eq!(occ_vector(&w("ba"), &params("ab,ba,a,b")).0, vec![0, 1, 1, 1]);
        assert_eq!(occ_vector(&w(""), &params("ab,ba,a,b")).0, vec![0; 4]);
    }

    #[test]
    fn suffix_indicators() {
        assert_eq!(suffix_indicator(&w("ab"), &params("ab,ba,a,b")).0, vec![1, 0, 0, 1]);
        assert_eq!(suffix_indicator(&w("aa"), &params("a")).0, vec![1]);
        assert_eq!(suffix_indicator(&w("ba"), &params("ab,ba,a")).0, vec![0, 1, 1]);
    }

    #[test]
    fn prefixes_and_suffixes() {
        let word = w("baaabba");
        assert_eq!(pref_suff(&word, 2).unwrap(), (w("ba"), w("ba")));
        assert_eq!(pref_suff(&word, 0).unwrap(), (w(""), w("")));
        assert_eq!(pref_suff(&word, 7).unwrap(), (word.clone(), word.clone()));
        assert_eq!(pref_suff(&word, 8), Err(Error::OutOfRange { n: 8, len: 7 }));
    }

    #[test]
    fn diff_and_membership() {
        assert_eq!(diff(&OccVector(vec![0, 1, 1, 1])), 1);
        assert_eq!(diff(&OccVector(vec![0, 1, 2])), 3);
        assert_eq!(diff(&OccVector(vec![4, 4, 4])), 0);
        assert_eq!(diff(&OccVector(vec![2, 2, 2])), 0);
        assert!(is_member(&w("babab"), &params("ab,ba,a")));
        assert!(is_member(&w(""), &params("ab,ba,a,b")));
        assert!(!is_member(&w("ab"), &params("ab,ba")));
    }

    #[test]
    fn param_list_validation() {
        assert_eq!(ParamList::parse(&ab(), "ab,,a"), Err(Error::EmptyParamWord(2)));
        assert!(matches!(ParamList::parse(&ab(), "ac"), Err(Error::UnknownSymbol { .. })));
        assert_eq!(params("ab,ba,a").max_len(), 2);
        assert_eq!(params("ab,ba,a").k(), 3);
    }

    #[test]
    fn alphabet_forms() {
        assert_eq!(Alphabet::parse("01").unwrap().symbols(), &["0", "1"]);
        let multi = Alphabet::parse("x,yy,z").unwrap();
        assert_eq!(multi.len(), 3);
        let word = multi.word("yy.x.yy").unwrap();
        assert_eq!(word.as_slice(), &[1, 0, 1]);
        assert_eq!(multi.render(&word), "yy.x.yy");
        assert_eq!(Alphabet::parse("aba"), Err(Error::DuplicateSymbol("a".into())));
        assert_eq!(Alphabet::parse(""), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn words_of_length_enumerates_lexicographically() {
        let a = ab();
        let all: Vec<String> = a.words_of_length(2).map(|x| a.render(&x)).collect();
        assert_eq!(all, ["aa", "ab", "ba", "bb"]);
        assert_eq!(a.words_of_length(0).count(), 1);
    }
}

//! Multi-track finite automata over digit tuples.
//!
//! An [`Alphabet`] is a list of [`Atom`]s of one arity; arity `k` means the
//! automaton reads `k` words in parallel, one digit of each per step. Words
//! of unequal length are aligned by padding the shorter ones with leading
//! zeros, the msd-first convention used for numeration systems.
//!
//! All automata are complete: a missing transition is an explicit dead state,
//! so complement is a flip of the accepting set.

mod builtins;
mod dfa;
mod export;
mod minimize;
mod nfa;
mod ops;
mod phi_tracks;
mod regex;
mod synth;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use builtins::{builtin, Builtin};
pub use dfa::Dfa;
pub use nfa::Nfa;
pub use ops::{dfa_equiv, ProductOp};
pub use phi_tracks::{check_phi_rep, expansion_tracks, phi_tracks};
pub use regex::regex_compile;
pub use synth::{synthesize_from_oracle, DEFAULT_MARGIN, MAX_DEPTH};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("atom at position {position} has arity {found}, alphabet has arity {expected}")]
    ArityMismatch {
        position: usize,
        expected: usize,
        found: usize,
    },
    #[error("atom {0} is not in the alphabet")]
    UnknownAtom(String),
    #[error("automata have different alphabets")]
    AlphabetMismatch,
    #[error("cannot erase track {track} of an automaton with arity {arity}")]
    BadTrack { track: usize, arity: usize },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("conjecture disagrees with the oracle on {witness:?}")]
    InconsistentConjecture { witness: String },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
}

/// One input symbol: a digit per track.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Vec<u8>);

impl Atom {
    pub fn new(digits: Vec<u8>) -> Atom {
        Atom(digits)
    }

    pub fn zero(arity: usize) -> Atom {
        Atom(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// This atom with one track removed.
    pub fn without(&self, track: usize) -> Atom {
        let mut digits = self.0.clone();
        digits.remove(track);
        Atom(digits)
    }
}

impl fmt::Display for Atom {
    /// `0` for a single track, `[0,1]` for several.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [d] = self.0[..] {
            return write!(f, "{d}");
        }
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Atom {
    type Err = AutomataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AutomataError::Syntax {
            position: 0,
            message: format!("not an atom: {s:?}"),
        };
        let digit = |t: &str| match t.trim().as_bytes() {
            [c @ b'0'..=b'9'] => Ok(c - b'0'),
            _ => Err(bad()),
        };
        match s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            Some(inner) => inner.split(',').map(digit).collect::<Result<_, _>>().map(Atom),
            None => Ok(Atom(vec![digit(s)?])),
        }
    }
}

/// Ordered, duplicate-free list of atoms sharing one arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    arity: usize,
    symbols: Vec<Atom>,
}

impl Alphabet {
    pub fn new(symbols: Vec<Atom>) -> Result<Alphabet, AutomataError> {
        let Some(first) = symbols.first() else {
            return Err(AutomataError::InvalidAlphabet("no symbols".into()));
        };
        let arity = first.arity();
        if arity == 0 {
            return Err(AutomataError::InvalidAlphabet("arity 0".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.arity() != arity {
                return Err(AutomataError::InvalidAlphabet(format!("mixed arity at {s}")));
            }
            if symbols[..i].contains(s) {
                return Err(AutomataError::InvalidAlphabet(format!("duplicate {s}")));
            }
        }
        Ok(Alphabet { arity, symbols })
    }

    /// `{0,1}^arity`, first track most significant: `[0,0], [0,1], [1,0], [1,1]`.
    pub fn binary(arity: usize) -> Alphabet {
        assert!(arity >= 1, "alphabet arity must be positive");
        let symbols = (0..1usize << arity)
            .map(|code| {
                Atom((0..arity)
                    .map(|t| ((code >> (arity - 1 - t)) & 1) as u8)
                    .collect())
            })
            .collect();
        Alphabet { arity, symbols }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Atom] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &Atom {
        &self.symbols[index]
    }

    pub fn index_of(&self, atom: &Atom) -> Option<usize> {
        self.symbols.iter().position(|s| s == atom)
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.symbols.iter().position(Atom::is_zero)
    }

    /// Looks up every atom of a word.
    pub fn encode(&self, word: &[Atom]) -> Result<Vec<usize>, AutomataError> {
        word.iter()
            .map(|a| {
                if a.arity() != self.arity {
                    return Err(AutomataError::AlphabetMismatch);
                }
                self.index_of(a)
                    .ok_or_else(|| AutomataError::UnknownAtom(a.to_string()))
            })
            .collect()
    }
}

/// Zips digit strings into one multi-track word, padding shorter tracks
/// with leading zeros.
pub fn pair_tracks(tracks: &[&str]) -> Result<Vec<Atom>, AutomataError> {
    let digits: Vec<Vec<u8>> = tracks
        .iter()
        .enumerate()
        .map(|(t, track)| {
            track
                .char_indices()
                .map(|(i, c)| {
                    c.to_digit(10).map(|d| d as u8).ok_or_else(|| AutomataError::Syntax {
                        position: i,
                        message: format!("track {t} has non-digit {c:?}"),
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let len = digits.iter().map(Vec::len).max().unwrap_or(0);
    Ok((0..len)
        .map(|i| {
            Atom(digits
                .iter()
                .map(|d| {
                    let pad = len - d.len();
                    if i < pad { 0 } else { d[i - pad] }
                })
                .collect())
        })
        .collect())
}

/// Splits a single-track digit string into atoms.
pub fn single_track(word: &str) -> Result<Vec<Atom>, AutomataError> {
    pair_tracks(&[word])
}

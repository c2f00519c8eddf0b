use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::{Alphabet, Atom, AutomataError, Dfa, Nfa};

/// Boolean connective for [`Dfa::product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOp {
    And,
    Or,
    /// Accepted by the left automaton but not the right.
    Diff,
}

impl ProductOp {
    fn combine(self, left: bool, right: bool) -> bool {
        match self {
            ProductOp::And => left && right,
            ProductOp::Or => left || right,
            ProductOp::Diff => left && !right,
        }
    }
}

impl fmt::Display for ProductOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductOp::And => "and",
            ProductOp::Or => "or",
            ProductOp::Diff => "diff",
        })
    }
}

impl FromStr for ProductOp {
    type Err = AutomataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "and" | "&" => Ok(ProductOp::And),
            "or" | "|" => Ok(ProductOp::Or),
            "diff" => Ok(ProductOp::Diff),
            _ => Err(AutomataError::Syntax {
                position: 0,
                message: format!("unknown product operation {s:?}"),
            }),
        }
    }
}

impl Dfa {
    fn same_alphabet(&self, other: &Dfa) -> Result<(), AutomataError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(AutomataError::AlphabetMismatch)
        }
    }

    /// Reachable part of the pair automaton, unminimized, with the pair of
    /// component states for each product state.
    fn pair_states(&self, other: &Dfa) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
        let width = self.alphabet.len();
        let mut index = HashMap::new();
        let mut pairs = vec![(self.start, other.start)];
        index.insert(pairs[0], 0usize);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let row = (0..width)
                .map(|s| {
                    let next = (self.delta[p][s], other.delta[q][s]);
                    *index.entry(next).or_insert_with(|| {
                        pairs.push(next);
                        pairs.len() - 1
                    })
                })
                .collect();
            delta.push(row);
            i += 1;
        }
        (pairs, delta)
    }

    /// Product construction followed by minimization.
    pub fn product(&self, op: ProductOp, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.same_alphabet(other)?;
        let (pairs, delta) = self.pair_states(other);
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op.combine(self.accepting[p], other.accepting[q]))
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            start: 0,
            accepting,
            delta,
        }
        .minimize())
    }

    pub fn and(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(ProductOp::And, other)
    }

    pub fn or(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(ProductOp::Or, other)
    }

    pub fn diff(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(ProductOp::Diff, other)
    }

    /// Flips acceptance; the automaton is already complete.
    pub fn complement(&self) -> Dfa {
        Dfa {
            alphabet: self.alphabet.clone(),
            start: self.start,
            accepting: self.accepting.iter().map(|a| !a).collect(),
            delta: self.delta.clone(),
        }
    }

    /// Existential quantification over one track.
    ///
    /// The track is erased from every atom, and a word is accepted when some
    /// leading-zero padding of it, paired with some contents of the erased
    /// track, was accepted before.
    pub fn project(&self, track: usize) -> Result<Dfa, AutomataError> {
        let arity = self.arity();
        if arity < 2 || track >= arity {
            return Err(AutomataError::BadTrack { track, arity });
        }
        let mut remaining: Vec<Atom> = Vec::new();
        let mut map = Vec::with_capacity(self.alphabet.len());
        for atom in self.alphabet.symbols() {
            let reduced = atom.without(track);
            let i = match remaining.iter().position(|a| *a == reduced) {
                Some(i) => i,
                None => {
                    remaining.push(reduced);
                    remaining.len() - 1
                }
            };
            map.push(i);
        }
        let mut nfa = Nfa::new(Alphabet::new(remaining)?);
        for _ in 0..self.num_states() {
            nfa.add_state();
        }
        for (q, row) in self.delta.iter().enumerate() {
            nfa.set_accepting(q, self.accepting[q]);
            for (s, &t) in row.iter().enumerate() {
                nfa.add_move(q, map[s], t);
            }
        }
        nfa.add_start(self.start);
        nfa.close_start_under_zeros();
        Ok(nfa.determinize().minimize())
    }

    /// Language equality. On a difference, returns a shortest word accepted
    /// by exactly one side.
    pub fn equivalent(&self, other: &Dfa) -> Result<Option<Vec<Atom>>, AutomataError> {
        self.same_alphabet(other)?;
        let width = self.alphabet.len();
        let start = (self.start, other.start);
        let mut parent: HashMap<(usize, usize), Option<((usize, usize), usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(pair @ (p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                let mut word = Vec::new();
                let mut cur = pair;
                while let Some(Some((prev, s))) = parent.get(&cur) {
                    word.push(self.alphabet.symbol(*s).clone());
                    cur = *prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            for s in 0..width {
                let next = (self.delta[p][s], other.delta[q][s]);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some((pair, s)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    /// `true` when both automata accept the same language.
    pub fn same_language(&self, other: &Dfa) -> Result<bool, AutomataError> {
        Ok(self.equivalent(other)?.is_none())
    }
}

/// Equality check with counterexample, as a free function.
pub fn dfa_equiv(a: &Dfa, b: &Dfa) -> Result<(bool, Option<Vec<Atom>>), AutomataError> {
    let witness = a.equivalent(b)?;
    Ok((witness.is_none(), witness))
}

#[cfg(test)]
mod tests {
    use super::super::{builtin, regex_compile, single_track};
    use super::*;

    fn bin() -> Alphabet {
        Alphabet::binary(1)
    }

    fn words(max_len: u32) -> Vec<String> {
        (0..=max_len)
            .flat_map(|len| {
                (0..1u32 << len).map(move |bits| {
                    (0..len).rev().map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect()
                })
            })
            .collect()
    }

    #[test]
    fn product_laws() {
        let end1 = builtin("end1").unwrap();
        assert!(end1.and(&end1.complement()).unwrap().is_empty_language());
        let empty = Dfa::empty(bin());
        assert_eq!(end1.or(&empty).unwrap(), end1);
    }

    #[test]
    fn noodd1_and_oneeven1() {
        let both = builtin("noodd1").unwrap().and(&builtin("oneeven1").unwrap()).unwrap();
        // positions counted from the right end, which is position 1
        for w in words(6) {
            let ones: Vec<usize> = w
                .chars()
                .rev()
                .enumerate()
                .filter(|&(_, c)| c == '1')
                .map(|(i, _)| i + 1)
                .collect();
            let expected = ones.iter().all(|p| p % 2 == 0) && ones.len() == 1;
            assert_eq!(both.accepts_str(&w).unwrap(), expected, "{w}");
        }
        assert!(!both.accepts_str("01").unwrap());
        assert!(both.accepts_str("10").unwrap());
    }

    #[test]
    fn complement_and_minimize() {
        let end1 = builtin("end1").unwrap();
        assert_eq!(end1.complement().complement(), end1);
        assert!(!end1.run(&single_track("0").unwrap()).unwrap());
        let m = end1.minimize();
        assert_eq!(m.minimize().num_states(), m.num_states());
        assert_eq!(m, end1);
    }

    #[test]
    fn run_with_foreign_atoms() {
        let end1 = builtin("end1").unwrap();
        assert_eq!(
            end1.run(&[Atom::new(vec![0, 1])]),
            Err(AutomataError::AlphabetMismatch)
        );
    }

    #[test]
    fn equivalence_with_counterexample() {
        let end1 = builtin("end1").unwrap();
        let end0 = regex_compile("(0|1)*0", &bin()).unwrap();
        assert_eq!(end1.equivalent(&end1.minimize()).unwrap(), None);
        // "0" and "1" are both shortest; BFS takes alphabet order
        let w = end1.equivalent(&end0).unwrap().unwrap();
        assert_eq!(w, single_track("0").unwrap());
        assert_ne!(end1.run(&w).unwrap(), end0.run(&w).unwrap());
        assert_eq!(
            dfa_equiv(&end1, &builtin("shiftl").unwrap()),
            Err(AutomataError::AlphabetMismatch)
        );
    }

    #[test]
    fn projection_of_shifts() {
        // erasing x from shiftl leaves the shifted words: empty or ending in 0
        let ys = builtin("shiftl").unwrap().project(0).unwrap();
        let expected = regex_compile("()|(0|1)*0", &bin()).unwrap();
        assert_eq!(ys.equivalent(&expected).unwrap(), None);
        // every word has a right shift, and a left shift once padded
        let universal = Dfa::universal(bin());
        for (name, track) in [("shiftr", 1), ("shiftl", 1)] {
            let xs = builtin(name).unwrap().project(track).unwrap();
            assert_eq!(xs.equivalent(&universal).unwrap(), None, "{name}");
        }
    }

    #[test]
    fn projection_errors() {
        assert_eq!(
            builtin("end1").unwrap().project(0),
            Err(AutomataError::BadTrack { track: 0, arity: 1 })
        );
        assert_eq!(
            builtin("shiftl").unwrap().project(2),
            Err(AutomataError::BadTrack { track: 2, arity: 2 })
        );
        let empty = Dfa::empty(Alphabet::binary(2)).project(1).unwrap();
        assert!(empty.is_empty_language());
    }
}

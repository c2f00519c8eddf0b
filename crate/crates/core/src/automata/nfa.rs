use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Alphabet, Dfa};

/// Nondeterministic automaton with ε-moves, used as the intermediate form of
/// regex compilation and projection.
#[derive(Debug, Clone)]
pub struct Nfa {
    pub(super) alphabet: Alphabet,
    pub(super) start: Vec<usize>,
    pub(super) accepting: Vec<bool>,
    pub(super) epsilon: Vec<Vec<usize>>,
    /// `(symbol index, target)` pairs per state
    pub(super) moves: Vec<Vec<(usize, usize)>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Nfa {
        Nfa {
            alphabet,
            start: Vec::new(),
            accepting: Vec::new(),
            epsilon: Vec::new(),
            moves: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.moves.len()
    }

    pub fn add_state(&mut self) -> usize {
        self.accepting.push(false);
        self.epsilon.push(Vec::new());
        self.moves.push(Vec::new());
        self.moves.len() - 1
    }

    pub fn add_move(&mut self, from: usize, symbol: usize, to: usize) {
        self.moves[from].push((symbol, to));
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        self.epsilon[from].push(to);
    }

    pub fn set_accepting(&mut self, state: usize, accepting: bool) {
        self.accepting[state] = accepting;
    }

    pub fn add_start(&mut self, state: usize) {
        self.start.push(state);
    }

    fn closure(&self, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        let mut stack: Vec<usize> = seed.into_iter().collect();
        while let Some(q) = stack.pop() {
            if set.insert(q) {
                stack.extend(self.epsilon[q].iter().copied());
            }
        }
        set
    }

    /// Adds to the start set everything reachable by reading the all-zero
    /// atom any number of times, so a word is accepted whenever some
    /// zero-padded version of it is.
    pub fn close_start_under_zeros(&mut self) {
        let Some(zero) = self.alphabet.zero_index() else {
            return;
        };
        let mut seen = self.closure(self.start.iter().copied());
        let mut queue: VecDeque<usize> = seen.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            let next: Vec<usize> = self.moves[q]
                .iter()
                .filter(|&&(s, _)| s == zero)
                .map(|&(_, t)| t)
                .collect();
            for q in self.closure(next) {
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        self.start = seen.into_iter().collect();
    }

    /// Subset construction. The empty subset becomes an explicit dead state,
    /// so the result is complete. Not minimized.
    pub fn determinize(&self) -> Dfa {
        let width = self.alphabet.len();
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = Vec::new();
        let mut delta: Vec<Vec<usize>> = Vec::new();

        let start = self.closure(self.start.iter().copied());
        index.insert(start.clone(), 0);
        subsets.push(start);
        let mut next = 0;
        while next < subsets.len() {
            let mut targets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); width];
            for &q in &subsets[next] {
                for &(s, t) in &self.moves[q] {
                    targets[s].insert(t);
                }
            }
            let row = targets
                .into_iter()
                .map(|t| {
                    let closed = self.closure(t);
                    *index.entry(closed.clone()).or_insert_with(|| {
                        subsets.push(closed);
                        subsets.len() - 1
                    })
                })
                .collect();
            delta.push(row);
            next += 1;
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q]))
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            start: 0,
            accepting,
            delta,
        }
    }
}

impl From<&Dfa> for Nfa {
    fn from(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet.clone());
        for _ in 0..d.num_states() {
            n.add_state();
        }
        for (q, row) in d.delta.iter().enumerate() {
            n.accepting[q] = d.accepting[q];
            for (s, &t) in row.iter().enumerate() {
                n.add_move(q, s, t);
            }
        }
        n.add_start(d.start);
        n
    }
}

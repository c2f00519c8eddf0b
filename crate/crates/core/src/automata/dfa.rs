use super::{pair_tracks, Alphabet, Atom, AutomataError};

/// A complete deterministic automaton. States are `0..num_states()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    pub(super) alphabet: Alphabet,
    pub(super) start: usize,
    pub(super) accepting: Vec<bool>,
    /// `delta[state][symbol index]`
    pub(super) delta: Vec<Vec<usize>>,
}

impl Dfa {
    /// Checks that the transition table is total and in range.
    pub fn from_parts(
        alphabet: Alphabet,
        start: usize,
        accepting: Vec<bool>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Dfa, AutomataError> {
        let n = delta.len();
        if n == 0 || start >= n {
            return Err(AutomataError::InvalidAutomaton("start state out of range".into()));
        }
        if accepting.len() != n {
            return Err(AutomataError::InvalidAutomaton("accepting set size mismatch".into()));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(AutomataError::InvalidAutomaton(format!(
                    "state {q} has {} transitions, alphabet has {} symbols",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(AutomataError::InvalidAutomaton(format!("state {q} goes to missing state {t}")));
            }
        }
        Ok(Dfa {
            alphabet,
            start,
            accepting,
            delta,
        })
    }

    /// The automaton accepting nothing.
    pub fn empty(alphabet: Alphabet) -> Dfa {
        let width = alphabet.len();
        Dfa {
            alphabet,
            start: 0,
            accepting: vec![false],
            delta: vec![vec![0; width]],
        }
    }

    /// The automaton accepting every word.
    pub fn universal(alphabet: Alphabet) -> Dfa {
        let mut d = Dfa::empty(alphabet);
        d.accepting[0] = true;
        d
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn arity(&self) -> usize {
        self.alphabet.arity()
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn step(&self, state: usize, symbol: usize) -> usize {
        self.delta[state][symbol]
    }

    /// State reached on a word of symbol indices.
    pub fn run_indices(&self, word: &[usize]) -> usize {
        word.iter().fold(self.start, |q, &s| self.delta[q][s])
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.accepting[self.run_indices(word)]
    }

    /// Runs the automaton on a word of atoms.
    pub fn run(&self, word: &[Atom]) -> Result<bool, AutomataError> {
        Ok(self.accepts_indices(&self.alphabet.encode(word)?))
    }

    /// Runs the automaton on digit strings, one per track, aligned by
    /// leading-zero padding.
    pub fn accepts_tracks(&self, tracks: &[&str]) -> Result<bool, AutomataError> {
        if tracks.len() != self.arity() {
            return Err(AutomataError::AlphabetMismatch);
        }
        self.run(&pair_tracks(tracks)?)
    }

    /// Shorthand for single-track automata.
    pub fn accepts_str(&self, word: &str) -> Result<bool, AutomataError> {
        self.accepts_tracks(&[word])
    }

    /// States from which some accepting state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut reverse = vec![Vec::new(); n];
        for (q, row) in self.delta.iter().enumerate() {
            for &t in row {
                reverse[t].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &reverse[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// True when the accepted language is empty.
    pub fn is_empty_language(&self) -> bool {
        !self.live_states()[self.start]
    }
}

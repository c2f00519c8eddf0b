//! DOT and JSON forms of an automaton.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Alphabet, Atom, AutomataError, Dfa};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DfaJson {
    states: usize,
    start: usize,
    accepting: Vec<usize>,
    transitions: Vec<TransitionJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TransitionJson {
    from: usize,
    atom: String,
    to: usize,
}

impl Dfa {
    /// Graphviz source: one node per state, accepting states double-circled,
    /// parallel edges merged with comma-joined atom labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
        for q in 0..self.num_states() {
            let shape = if self.accepting[q] { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  {q} [shape={shape}];");
        }
        let _ = writeln!(out, "  __start -> {};", self.start);
        for (q, row) in self.delta.iter().enumerate() {
            let mut edges: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for (s, &t) in row.iter().enumerate() {
                edges.entry(t).or_default().push(self.alphabet.symbol(s).to_string());
            }
            for (t, labels) in edges {
                let _ = writeln!(out, "  {q} -> {t} [label=\"{}\"];", labels.join(","));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("automaton serializes")
    }

    pub fn from_json(s: &str) -> Result<Dfa, AutomataError> {
        serde_json::from_str(s).map_err(|e| AutomataError::InvalidAutomaton(e.to_string()))
    }

    fn to_raw(&self) -> DfaJson {
        DfaJson {
            states: self.num_states(),
            start: self.start,
            accepting: (0..self.num_states()).filter(|&q| self.accepting[q]).collect(),
            transitions: self
                .delta
                .iter()
                .enumerate()
                .flat_map(|(q, row)| {
                    row.iter().enumerate().map(move |(s, &t)| TransitionJson {
                        from: q,
                        atom: self.alphabet.symbol(s).to_string(),
                        to: t,
                    })
                })
                .collect(),
        }
    }

    fn from_raw(raw: DfaJson) -> Result<Dfa, AutomataError> {
        let bad = |m: String| AutomataError::InvalidAutomaton(m);
        let mut symbols: Vec<Atom> = Vec::new();
        let mut parsed = Vec::with_capacity(raw.transitions.len());
        for t in &raw.transitions {
            let atom: Atom = t.atom.parse()?;
            let s = match symbols.iter().position(|a| *a == atom) {
                Some(s) => s,
                None => {
                    symbols.push(atom);
                    symbols.len() - 1
                }
            };
            parsed.push((t.from, s, t.to));
        }
        let alphabet = Alphabet::new(symbols)?;
        let mut delta = vec![vec![None; alphabet.len()]; raw.states];
        for (from, s, to) in parsed {
            let slot = delta
                .get_mut(from)
                .ok_or_else(|| bad(format!("transition from missing state {from}")))?;
            if slot[s].replace(to).is_some() {
                return Err(bad(format!("state {from} has two transitions on {}", alphabet.symbol(s))));
            }
        }
        let delta = delta
            .into_iter()
            .enumerate()
            .map(|(q, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(s, t)| t.ok_or_else(|| bad(format!("state {q} has no transition on {}", alphabet.symbol(s)))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut accepting = vec![false; raw.states];
        for q in raw.accepting {
            *accepting
                .get_mut(q)
                .ok_or_else(|| bad(format!("accepting state {q} out of range")))? = true;
        }
        Dfa::from_parts(alphabet, raw.start, accepting, delta)
    }
}

impl Serialize for Dfa {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dfa {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Dfa::from_raw(DfaJson::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

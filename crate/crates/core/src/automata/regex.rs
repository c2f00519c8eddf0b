//! Regular expressions in the numeration-prover dialect.
//!
//! ```text
//! alt    := concat ('|' concat)*
//! concat := repeat+
//! repeat := atom '*'*
//! atom   := digit | '[' digit (',' digit)* ']' | '(' ')' | '(' alt ')'
//! ```
//!
//! `()` is the empty word. Concatenation binds tighter than `|`, and
//! whitespace is ignored.

use super::{Alphabet, Atom, AutomataError, Dfa, Nfa};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Regex {
    Empty,
    Symbol(usize),
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Star(Box<Regex>),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(pattern: &str, alphabet: &'a Alphabet) -> Self {
        Parser {
            chars: pattern.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            alphabet,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Byte offset of the current character in the original pattern.
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> AutomataError {
        AutomataError::Syntax {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), AutomataError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn parse(mut self) -> Result<Regex, AutomataError> {
        let r = self.alt()?;
        if self.peek().is_some() {
            return Err(self.error("unexpected character"));
        }
        Ok(r)
    }

    fn alt(&mut self) -> Result<Regex, AutomataError> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 {
            branches.pop().expect("one branch")
        } else {
            Regex::Alt(branches)
        })
    }

    fn concat(&mut self) -> Result<Regex, AutomataError> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.repeat()?);
        }
        match parts.len() {
            0 => Err(self.error("empty alternative; write () for the empty word")),
            1 => Ok(parts.pop().expect("one part")),
            _ => Ok(Regex::Concat(parts)),
        }
    }

    fn repeat(&mut self) -> Result<Regex, AutomataError> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::Star(Box::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, AutomataError> {
        let start = self.offset();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Regex::Empty);
                }
                let inner = self.alt()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('[') => {
                self.pos += 1;
                let mut digits = vec![self.digit()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    digits.push(self.digit()?);
                }
                self.expect(']')?;
                self.symbol(Atom::new(digits), start)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digit()?;
                self.symbol(Atom::new(vec![d]), start)
            }
            Some(_) => Err(self.error("expected a digit, '[' or '('")),
            None => Err(self.error("unexpected end of pattern")),
        }
    }

    fn digit(&mut self) -> Result<u8, AutomataError> {
        match self.peek() {
            Some(c @ '0'..='9') => {
                self.pos += 1;
                Ok(c as u8 - b'0')
            }
            _ => Err(self.error("expected a digit")),
        }
    }

    fn symbol(&self, atom: Atom, position: usize) -> Result<Regex, AutomataError> {
        if atom.arity() != self.alphabet.arity() {
            return Err(AutomataError::ArityMismatch {
                position,
                expected: self.alphabet.arity(),
                found: atom.arity(),
            });
        }
        self.alphabet
            .index_of(&atom)
            .map(Regex::Symbol)
            .ok_or_else(|| AutomataError::UnknownAtom(atom.to_string()))
    }
}

/// Thompson construction; returns the fragment's (entry, exit) states.
fn thompson(r: &Regex, nfa: &mut Nfa) -> (usize, usize) {
    match r {
        Regex::Empty => {
            let s = nfa.add_state();
            (s, s)
        }
        Regex::Symbol(sym) => {
            let (s, t) = (nfa.add_state(), nfa.add_state());
            nfa.add_move(s, *sym, t);
            (s, t)
        }
        Regex::Concat(parts) => {
            let mut frags = parts.iter().map(|p| thompson(p, nfa)).collect::<Vec<_>>().into_iter();
            let (entry, mut exit) = frags.next().expect("concat is nonempty");
            for (s, t) in frags {
                nfa.add_epsilon(exit, s);
                exit = t;
            }
            (entry, exit)
        }
        Regex::Alt(branches) => {
            let (s, t) = (nfa.add_state(), nfa.add_state());
            for b in branches {
                let (bs, bt) = thompson(b, nfa);
                nfa.add_epsilon(s, bs);
                nfa.add_epsilon(bt, t);
            }
            (s, t)
        }
        Regex::Star(inner) => {
            let s = nfa.add_state();
            let (is, it) = thompson(inner, nfa);
            nfa.add_epsilon(s, is);
            nfa.add_epsilon(it, s);
            (s, s)
        }
    }
}

/// Compiles a pattern to its minimal complete automaton over `alphabet`.
pub fn regex_compile(pattern: &str, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
    let ast = Parser::new(pattern, alphabet).parse()?;
    let mut nfa = Nfa::new(alphabet.clone());
    let (entry, exit) = thompson(&ast, &mut nfa);
    nfa.add_start(entry);
    nfa.set_accepting(exit, true);
    Ok(nfa.determinize().minimize())
}

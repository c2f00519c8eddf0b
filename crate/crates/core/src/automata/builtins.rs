use std::fmt;
use std::str::FromStr;

use super::{regex_compile, Alphabet, AutomataError, Dfa};

/// The named regular languages used to characterise φ-representations.
///
/// Single-track patterns talk about positions counted from the right end,
/// where the last symbol is position 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// No 1 at an odd position.
    NoOdd1,
    /// No 1 at an even position.
    NoEven1,
    /// Exactly one 1 at an odd position.
    OneOdd1,
    /// Exactly one 1 at an even position.
    OneEven1,
    /// Exactly two 1s at odd positions.
    TwoOdd1,
    /// Exactly two 1s at even positions.
    TwoEven1,
    /// The most significant 1 is at an even position.
    LargestEven,
    /// Zeckendorf word of some `L_{2i}`.
    IsEvenLucas,
    /// Zeckendorf word of some `F_{2i}`, `i ≥ 1`.
    IsEvenFib,
    /// Ends in 1.
    End1,
    /// `y` is `x` shifted one place left.
    ShiftL,
    /// `y` is `x` shifted one place right.
    ShiftR,
    /// `x = F_i` and `y = L_i`.
    FibLuc,
    /// `y` marks the most significant 1 of `x`.
    LargestDig,
    /// `y` marks one of the 1s of `x`.
    FibMatch,
}

impl Builtin {
    pub const ALL: [Builtin; 15] = [
        Builtin::NoOdd1,
        Builtin::NoEven1,
        Builtin::OneOdd1,
        Builtin::OneEven1,
        Builtin::TwoOdd1,
        Builtin::TwoEven1,
        Builtin::LargestEven,
        Builtin::IsEvenLucas,
        Builtin::IsEvenFib,
        Builtin::End1,
        Builtin::ShiftL,
        Builtin::ShiftR,
        Builtin::FibLuc,
        Builtin::LargestDig,
        Builtin::FibMatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::NoOdd1 => "noodd1",
            Builtin::NoEven1 => "noeven1",
            Builtin::OneOdd1 => "oneodd1",
            Builtin::OneEven1 => "oneeven1",
            Builtin::TwoOdd1 => "twoodd1",
            Builtin::TwoEven1 => "twoeven1",
            Builtin::LargestEven => "largesteven",
            Builtin::IsEvenLucas => "isevenlucas",
            Builtin::IsEvenFib => "isevenfib",
            Builtin::End1 => "end1",
            Builtin::ShiftL => "shiftl",
            Builtin::ShiftR => "shiftr",
            Builtin::FibLuc => "fibluc",
            Builtin::LargestDig => "largest_dig",
            Builtin::FibMatch => "fibmatch",
        }
    }

    /// The pattern, verbatim.
    pub fn pattern(self) -> &'static str {
        match self {
            Builtin::NoOdd1 => "(()|0)((0|1)0)*",
            Builtin::NoEven1 => "()|((()|0)((0|1)0)*(0|1))",
            Builtin::OneOdd1 => "(()|0|1)(0(0|1))*1((0|1)0)*",
            Builtin::OneEven1 => "(()|0|1)(0(0|1))*1((0|1)0)*(0|1)",
            Builtin::TwoOdd1 => "(()|0|1)(0(0|1))*1(0|1)(0(0|1))*1((0|1)0)*",
            Builtin::TwoEven1 => "(()|0|1)(0(0|1))*1(0|1)(0(0|1))*1((0|1)0)*(0|1)",
            Builtin::LargestEven => "0*1(0|1)((0|1)(0|1))*",
            Builtin::IsEvenLucas => "0*10|0*100|0*1010(00)*",
            Builtin::IsEvenFib => "0*1(00)*",
            Builtin::End1 => "(0|1)*1",
            Builtin::ShiftL => "([0,0]|[0,1][1,1]*[1,0])*",
            Builtin::ShiftR => "([0,0]|[1,0][1,1]*[0,1])*(()|[1,0][1,1]*)",
            Builtin::FibLuc => "[0,0]*([0,1][0,0][1,0])|([0,1][1,0][0,1][0,0]*)",
            Builtin::LargestDig => "[0,0]*[1,1]([1,0]|[0,0])*",
            Builtin::FibMatch => "([0,0]|[1,0])*[1,1]([0,0]|[1,0])*",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Builtin::ShiftL
            | Builtin::ShiftR
            | Builtin::FibLuc
            | Builtin::LargestDig
            | Builtin::FibMatch => 2,
            _ => 1,
        }
    }

    pub fn alphabet(self) -> Alphabet {
        Alphabet::binary(self.arity())
    }

    pub fn compile(self) -> Dfa {
        regex_compile(self.pattern(), &self.alphabet()).expect("builtin patterns are well formed")
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = AutomataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| AutomataError::UnknownBuiltin(s.to_string()))
    }
}

/// Compiled, minimized automaton of a named builtin.
pub fn builtin(name: &str) -> Result<Dfa, AutomataError> {
    Ok(name.parse::<Builtin>()?.compile())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_compile_and_round_trip_names() {
        for b in Builtin::ALL {
            let d = b.compile();
            assert_eq!(d.arity(), b.arity(), "{b}");
            assert_eq!(b.name().parse::<Builtin>().unwrap(), b);
        }
        assert_eq!(
            builtin("nosuch"),
            Err(AutomataError::UnknownBuiltin("nosuch".into()))
        );
    }

    #[test]
    fn spot_memberships() {
        // plain regex semantics, no Zeckendorf validity check
        assert!(builtin("end1").unwrap().accepts_str("11").unwrap());
        assert!(builtin("isevenfib").unwrap().accepts_str("100").unwrap());
        // x = 1 = F_2 and y = 3 = L_2
        let fibluc = builtin("fibluc").unwrap();
        assert!(fibluc.run(&"[0,1][0,0][1,0]".split_inclusive(']').map(|a| a.parse().unwrap()).collect::<Vec<_>>()).unwrap());
        assert!(fibluc.accepts_tracks(&["1", "100"]).unwrap());
        // x = 8 = F_6, y = 18 = L_6
        assert!(fibluc.accepts_tracks(&["10000", "101000"]).unwrap());
        assert!(!fibluc.accepts_tracks(&["10000", "100000"]).unwrap());
    }
}

pub mod automata;
pub mod classify;
pub mod golden;
pub mod zeck;
pub mod verifier;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/golden-base.md")]
    mod golden_base {}
    #[doc = include_str!("../../../book/src/zeckendorf-lucas.md")]
    mod zeckendorf_lucas {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/automata.md")]
    mod automata {}
    #[doc = include_str!("../../../book/src/synthesis.md")]
    mod synthesis {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

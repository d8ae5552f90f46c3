//! Benchmark fixtures shared by the criterion targets.

use geomseq_core::{ExtFieldContext, NtuFamily, SymbolSequence};

/// `T_A` for the lexicographic primitive polynomial of `F_{p^m}`.
pub fn long_sequence(p: u64, m: usize, a: u32) -> SymbolSequence {
    let ctx = ExtFieldContext::new(p, m).expect("valid field");
    NtuFamily::new(ctx, 2, a).expect("valid family").generalized_ntu()
}

/// `S^e` built from `T_A`.
pub fn interleaved_sequence(p: u64, m: usize, a: u32, e: usize) -> SymbolSequence {
    let ctx = ExtFieldContext::new(p, m).expect("valid field");
    NtuFamily::new(ctx, 2, a)
        .and_then(|f| f.proposed_sequence(e))
        .expect("valid shift")
}

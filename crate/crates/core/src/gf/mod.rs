//! Exact arithmetic in `F_p` and `F_{p^m}`, traces, Legendre symbols and
//! cyclotomic classes.

mod cyclotomic;
mod ext;
mod prime;

pub use cyclotomic::CyclotomicContext;
pub use ext::{
    find_primitive_polynomial, is_primitive_polynomial, ExtFieldContext, ExtFieldElement,
    DEFAULT_MAX_FIELD,
};
pub use prime::{
    gcd, is_prime, is_primitive_root, legendre_symbol, mod_pow, multiplicative_order,
    prime_factors, PrimeField, PrimeFieldElement,
};

//! Prime-field scalars and the number-theoretic helpers the decoders need:
//! multiplicative orders, base-point selection, bounded discrete logarithms
//! and root finding.

mod dlog;
mod field;
mod order;
mod roots;

pub use dlog::integer_log;
pub use field::{is_prime, prime_factors, Felt, PrimeField};
pub use order::{multiplicative_order, order_at_least, select_base_points, PointLayout};
pub use roots::distinct_roots;

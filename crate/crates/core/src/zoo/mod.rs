//! Concrete instances: groupoid and group algebras, bicharacter twists,
//! direct sums, and the builtin fixtures.

mod bicharacter;
mod direct_sum;
mod fixtures;
mod groupoid;
mod groups;

pub use bicharacter::{bicharacter_cocycle, klein_beta, mixed_klein_beta, z2_beta};
pub use direct_sum::{block_element2, direct_sum, direct_sum_cocycle, direct_sum_qt};
pub use fixtures::{
    all_fixtures, d4_fixture, d4_klein_generators, d4_mixed_fixture, d4_plus_n_fixture, fixture_by_name,
    n_diagonal_element2, n_fixture, n_plus_z2_fixture, pair_fixture, v4_fixture, z2_fixture, Fixture,
};
pub use groupoid::{groupoid_algebra, groupoid_function_algebra, Arrow, GroupoidSpec};
pub use groups::{d4, d4_index, diagonal_n, pair_groupoid, v4, z2};

use alloc::vec::Vec;

use crate::error::Error;
use crate::weak_hopf::QuantumGroupoid;

use super::groupoid::{groupoid_algebra, GroupoidSpec};

/// The diagonal 2×2 matrices as a groupoid algebra: two objects, identity arrows only.
pub fn diagonal_n() -> QuantumGroupoid {
    groupoid_algebra("N", &GroupoidSpec::discrete(&["e1", "e2"])).expect("discrete groupoid is valid")
}

pub fn pair_groupoid() -> QuantumGroupoid {
    groupoid_algebra("pair2", &GroupoidSpec::pair(2)).expect("pair groupoid is valid")
}

fn group_algebra(name: &str, names: &[&str], table: &[Vec<usize>]) -> Result<QuantumGroupoid, Error> {
    groupoid_algebra(name, &GroupoidSpec::group(names, table)?)
}

pub fn z2() -> QuantumGroupoid {
    let table = [alloc::vec![0, 1], alloc::vec![1, 0]];
    group_algebra("kZ2", &["1", "g"], &table).expect("Z2 table is a group")
}

/// `Z₂ × Z₂` with basis `1, a, b, ab`; index bits are the exponents.
pub fn v4() -> QuantumGroupoid {
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    group_algebra("kV4", &["1", "a", "b", "ab"], &table).expect("V4 table is a group")
}

/// Index of `r^i s^j` in the dihedral basis `1, r, r2, r3, s, rs, r2s, r3s`.
pub fn d4_index(i: usize, j: usize) -> usize {
    (j % 2) * 4 + i % 4
}

/// The dihedral group of order 8.
pub fn d4() -> QuantumGroupoid {
    let table: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (i, a) = (x % 4, x / 4);
                    let (j, b) = (y % 4, y / 4);
                    // r^i s^a r^j s^b = r^{i ± j} s^{a+b}
                    let rot = if a == 0 { i + j } else { i + 4 - j };
                    d4_index(rot, a + b)
                })
                .collect()
        })
        .collect();
    group_algebra("kD4", &["1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"], &table).expect("D4 table is a group")
}

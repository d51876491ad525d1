use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{int, one, zeros, LinearMap, Rational};
use crate::weak_hopf::{QuantumGroupoid, WeakBialgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite groupoid. `compose[a][b]` is `a ∘ b` (first `b`, then `a`),
/// defined exactly when `source(a) = target(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidSpec {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidGroupoid(msg)
}

impl GroupoidSpec {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        compose: Vec<Vec<Option<usize>>>,
        inverse: Vec<usize>,
    ) -> Result<Self, Error> {
        let spec = Self { objects, arrows, compose, inverse };
        spec.validate()?;
        Ok(spec)
    }

    /// Objects only, one identity arrow each.
    pub fn discrete(objects: &[&str]) -> Self {
        let k = objects.len();
        let arrows = (0..k).map(|i| Arrow { name: objects[i].to_string(), source: i, target: i }).collect();
        let compose = (0..k).map(|a| (0..k).map(|b| (a == b).then_some(a)).collect()).collect();
        Self { objects: objects.iter().map(|s| s.to_string()).collect(), arrows, compose, inverse: (0..k).collect() }
    }

    /// One arrow `e_ij : j → i` for every ordered pair of objects.
    pub fn pair(k: usize) -> Self {
        let idx = |i: usize, j: usize| i * k + j;
        let arrows = (0..k * k)
            .map(|ij| Arrow { name: format!("e{}{}", ij / k + 1, ij % k + 1), source: ij % k, target: ij / k })
            .collect();
        let compose =
            (0..k * k).map(|a| (0..k * k).map(|b| (a % k == b / k).then(|| idx(a / k, b % k))).collect()).collect();
        let inverse = (0..k * k).map(|ij| idx(ij % k, ij / k)).collect();
        Self { objects: (1..=k).map(|i| format!("x{i}")).collect(), arrows, compose, inverse }
    }

    /// A group as a one-object groupoid; `table[a][b]` is the product `ab`.
    pub fn group(names: &[&str], table: &[Vec<usize>]) -> Result<Self, Error> {
        let n = names.len();
        let arrows = names.iter().map(|s| Arrow { name: s.to_string(), source: 0, target: 0 }).collect();
        let compose: Vec<Vec<Option<usize>>> = table.iter().map(|row| row.iter().map(|&c| Some(c)).collect()).collect();
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| invalid("group table has no identity".to_string()))?;
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == e).ok_or_else(|| invalid(format!("{} has no inverse", names[a]))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vec!["*".to_string()], arrows, compose, inverse)
    }

    fn identity_of(&self, x: usize) -> Option<usize> {
        (0..self.arrows.len()).find(|&a| {
            let ar = &self.arrows[a];
            ar.source == x
                && ar.target == x
                && (0..self.arrows.len()).all(|b| {
                    let br = &self.arrows[b];
                    (br.target != x || self.compose[a][b] == Some(b))
                        && (br.source != x || self.compose[b][a] == Some(b))
                })
        })
    }

    pub fn validate(&self) -> Result<(), Error> {
        let m = self.arrows.len();
        let k = self.objects.len();
        if m == 0 {
            return Err(invalid("no arrows".to_string()));
        }
        if self.compose.len() != m || self.compose.iter().any(|r| r.len() != m) || self.inverse.len() != m {
            return Err(invalid("table sizes do not match the arrow count".to_string()));
        }
        for (a, ar) in self.arrows.iter().enumerate() {
            if ar.source >= k || ar.target >= k {
                return Err(invalid(format!("arrow {} has an unknown endpoint", ar.name)));
            }
            for (b, br) in self.arrows.iter().enumerate() {
                match self.compose[a][b] {
                    None if ar.source == br.target => {
                        return Err(invalid(format!("{} ∘ {} should be defined", ar.name, br.name)));
                    }
                    Some(_) if ar.source != br.target => {
                        return Err(invalid(format!("{} ∘ {} should be undefined", ar.name, br.name)));
                    }
                    Some(c) if c >= m || self.arrows[c].source != br.source || self.arrows[c].target != ar.target => {
                        return Err(invalid(format!("{} ∘ {} has the wrong endpoints", ar.name, br.name)));
                    }
                    _ => {}
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let left = self.compose[a][b].and_then(|ab| self.compose[ab][c]);
                    let right = self.compose[b][c].and_then(|bc| self.compose[a][bc]);
                    if left != right {
                        return Err(invalid(format!(
                            "composition is not associative at ({}, {}, {})",
                            self.arrows[a].name, self.arrows[b].name, self.arrows[c].name
                        )));
                    }
                }
            }
        }
        let ids: Vec<usize> = (0..k)
            .map(|x| self.identity_of(x).ok_or_else(|| invalid(format!("object {} has no identity", self.objects[x]))))
            .collect::<Result<_, _>>()?;
        for a in 0..m {
            let ai = self.inverse[a];
            let ar = &self.arrows[a];
            if ai >= m || self.compose[a][ai] != Some(ids[ar.target]) || self.compose[ai][a] != Some(ids[ar.source]) {
                return Err(invalid(format!("inverse of {} is wrong", ar.name)));
            }
        }
        Ok(())
    }

    pub fn identities(&self) -> Vec<usize> {
        (0..self.objects.len()).filter_map(|x| self.identity_of(x)).collect()
    }
}

/// The groupoid algebra: `Δ(a) = a ⊗ a`, `ε(a) = 1`, `S(a) = a⁻¹`,
/// unit the sum of the identity arrows.
pub fn groupoid_algebra(name: &str, spec: &GroupoidSpec) -> Result<QuantumGroupoid, Error> {
    spec.validate()?;
    let n = spec.arrows.len();
    let mut mul = zeros(n * n * n);
    let mut comul = zeros(n * n * n);
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = spec.compose[a][b] {
                mul[(a * n + b) * n + c] = one();
            }
        }
        comul[(a * n + a) * n + a] = one();
    }
    let mut unit = zeros(n);
    for i in spec.identities() {
        unit[i] = one();
    }
    let counit = vec![int(1); n];
    let basis = spec.arrows.iter().map(|a| a.name.clone()).collect();
    let b = WeakBialgebra::new(name, basis, mul, unit, comul, counit)?;
    let s = LinearMap::from_fn(n, n, |r, c| if spec.inverse[c] == r { one() } else { Rational::default() });
    QuantumGroupoid::new(b, s)
}

/// The function algebra on the arrows: `δ_a δ_b = [a = b] δ_a`,
/// `Δ(δ_c) = Σ_{a∘b = c} δ_a ⊗ δ_b`, `ε(δ_a) = [a is an identity]`,
/// `S(δ_a) = δ_{a⁻¹}`. Commutative, and cocommutative only for abelian groupoids.
pub fn groupoid_function_algebra(name: &str, spec: &GroupoidSpec) -> Result<QuantumGroupoid, Error> {
    spec.validate()?;
    let n = spec.arrows.len();
    let mut mul = zeros(n * n * n);
    let mut comul = zeros(n * n * n);
    for a in 0..n {
        mul[(a * n + a) * n + a] = one();
        for b in 0..n {
            if let Some(c) = spec.compose[a][b] {
                comul[(c * n + a) * n + b] = one();
            }
        }
    }
    let unit = vec![int(1); n];
    let mut counit = zeros(n);
    for i in spec.identities() {
        counit[i] = one();
    }
    let basis = spec.arrows.iter().map(|a| format!("d_{}", a.name)).collect();
    let b = WeakBialgebra::new(name, basis, mul, unit, comul, counit)?;
    let s = LinearMap::from_fn(n, n, |r, c| if spec.inverse[c] == r { one() } else { Rational::default() });
    QuantumGroupoid::new(b, s)
}

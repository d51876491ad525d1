use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{zeros, LinearMap, Rational};
use crate::report::{expect_eq, VerificationReport, Witness};

use super::{QuantumGroupoid, WeakBialgebra};

/// Every axiom is quantified over basis tuples, which is exact by
/// multilinearity. Arity per check: associativity 3, unit 1,
/// coassociativity 1, counit 1, multiplicativity 2, weak unit 0,
/// weak counit 3.
pub fn check_weak_bialgebra(b: &WeakBialgebra) -> VerificationReport {
    let n = b.dim();
    let e: Vec<Vec<Rational>> = (0..n).map(|i| b.basis_vec(i)).collect();
    let products: Vec<Vec<Rational>> = (0..n * n).map(|ij| b.mul(&e[ij / n], &e[ij % n])).collect();
    let mut report = VerificationReport::new("weak-bialgebra");

    report.check("associativity", || {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = b.mul(&products[i * n + j], &e[k]);
                    let right = b.mul(&e[i], &products[j * n + k]);
                    expect_eq(&[i, j, k], left, right)?;
                }
            }
        }
        Ok(())
    });

    report.check("unit-axiom", || {
        for i in 0..n {
            expect_eq(&[i], b.mul(b.unit(), &e[i]), e[i].clone())?;
            expect_eq(&[i], b.mul(&e[i], b.unit()), e[i].clone())?;
        }
        Ok(())
    });

    let coproducts: Vec<Vec<Rational>> = e.iter().map(|x| b.comul(x)).collect();

    report.check("coassociativity", || {
        for i in 0..n {
            let left = b.comul_at(&coproducts[i], 2, 0);
            let right = b.comul_at(&coproducts[i], 2, 1);
            expect_eq(&[i], left, right)?;
        }
        Ok(())
    });

    report.check("counit-axiom", || {
        for i in 0..n {
            expect_eq(&[i], b.counit_at(&coproducts[i], 2, 0), e[i].clone())?;
            expect_eq(&[i], b.counit_at(&coproducts[i], 2, 1), e[i].clone())?;
        }
        Ok(())
    });

    report.check("multiplicativity", || {
        for i in 0..n {
            for j in 0..n {
                let left = b.comul(&products[i * n + j]);
                let right = b.tensor_mul(2, &coproducts[i], &coproducts[j]);
                expect_eq(&[i, j], left, right)?;
            }
        }
        Ok(())
    });

    report.check("weak-unit-axiom", || {
        let d1 = b.delta_one();
        let d2 = b.comul_at(&d1, 2, 0);
        let d1_1 = b.legs(&d1, &[0, 1], 3);
        let d1_2 = b.legs(&d1, &[1, 2], 3);
        expect_eq(&[], d2.clone(), b.tensor_mul(3, &d1_1, &d1_2))?;
        expect_eq(&[], d2, b.tensor_mul(3, &d1_2, &d1_1))
    });

    report.check("weak-counit-axiom", || {
        // pair[a*n+b] = ε(e_a e_b)
        let pair = b.counit_pairing();
        for h in 0..n {
            for g in 0..n {
                let hg = &products[h * n + g];
                for l in 0..n {
                    let lhs: Rational = (0..n).map(|k| &hg[k] * &pair[k * n + l]).sum();
                    let mut first = Rational::default();
                    let mut second = Rational::default();
                    for pq in 0..n * n {
                        let d = &coproducts[g][pq];
                        if *d == Rational::default() {
                            continue;
                        }
                        let (p, q) = (pq / n, pq % n);
                        first += d * &pair[h * n + p] * &pair[q * n + l];
                        second += d * &pair[h * n + q] * &pair[p * n + l];
                    }
                    expect_eq(&[h, g, l], vec![lhs.clone()], vec![first])?;
                    expect_eq(&[h, g, l], vec![lhs], vec![second])?;
                }
            }
        }
        Ok(())
    });

    report
}

fn columns_equal(indices_of: impl Fn(usize) -> Vec<usize>, a: &LinearMap, b: &LinearMap) -> Result<(), Witness> {
    for j in 0..a.cols() {
        expect_eq(&indices_of(j), a.column(j), b.column(j))?;
    }
    Ok(())
}

/// Antipode axioms plus the anti-(co)multiplicativity and bijectivity of `S`.
pub fn check_quantum_groupoid(h: &QuantumGroupoid) -> VerificationReport {
    let n = h.dim();
    let s = h.antipode();
    let id = LinearMap::identity(n);
    let mut report = VerificationReport::new("quantum-groupoid");

    let s_id = h.convolve(s, &id);
    let id_s = h.convolve(&id, s);
    report.check("S*id=eps_s", || columns_equal(|j| vec![j], &s_id, &h.epsilon_s_map()));
    report.check("id*S=eps_t", || columns_equal(|j| vec![j], &id_s, &h.epsilon_t_map()));
    report.check("S*id*S=S", || columns_equal(|j| vec![j], &h.convolve(&s_id, s), s));

    report.check("S-anti-multiplicative", || {
        for i in 0..n {
            for j in 0..n {
                let left = h.s(&h.mul(&h.basis_vec(i), &h.basis_vec(j)));
                let right = h.mul(&s.column(j), &s.column(i));
                expect_eq(&[i, j], left, right)?;
            }
        }
        Ok(())
    });

    report.check("S-anti-comultiplicative", || {
        for i in 0..n {
            let left = h.comul(&s.column(i));
            let cop = h.flip(&h.comul(&h.basis_vec(i)));
            let right = h.map_at(&h.map_at(&cop, 2, 0, s), 2, 1, s);
            expect_eq(&[i], left, right)?;
        }
        Ok(())
    });

    report.check("S-bijective", || {
        let inv = h.antipode_inverse();
        columns_equal(|j| vec![j], &s.compose(inv), &id)?;
        columns_equal(|j| vec![j], &inv.compose(s), &id)
    });

    report
}

/// Idempotence of the counital maps and the `H_t`/`H_s` coproduct
/// characterizations, on basis elements.
pub fn check_counital_maps(b: &WeakBialgebra) -> VerificationReport {
    let n = b.dim();
    let mut report = VerificationReport::new("counital-maps");
    let et = b.epsilon_t_map();
    let es = b.epsilon_s_map();
    report.check("eps_t-idempotent", || columns_equal(|j| vec![j], &et.compose(&et), &et));
    report.check("eps_s-idempotent", || columns_equal(|j| vec![j], &es.compose(&es), &es));
    let d1 = b.delta_one();
    report.check("target-coproduct", || {
        for i in 0..n {
            let z = et.column(i);
            let dz = b.comul(&z);
            let zl = b.legs(&z, &[0], 2);
            expect_eq(&[i], dz.clone(), b.tensor_mul(2, &zl, &d1))?;
            expect_eq(&[i], dz, b.tensor_mul(2, &d1, &zl))?;
        }
        Ok(())
    });
    report.check("source-coproduct", || {
        for i in 0..n {
            let y = es.column(i);
            let dy = b.comul(&y);
            let yr = b.legs(&y, &[1], 2);
            expect_eq(&[i], dy.clone(), b.tensor_mul(2, &yr, &d1))?;
            expect_eq(&[i], dy, b.tensor_mul(2, &d1, &yr))?;
        }
        Ok(())
    });
    report.check("subalgebras-closed", || {
        for (name, sub) in [(0usize, b.target_subalgebra()), (1, b.source_subalgebra())] {
            if !sub.contains(b.unit()) {
                return Err(Witness::new(&[name], b.unit().to_vec(), zeros(n)));
            }
            for (x, u) in sub.vectors().iter().enumerate() {
                for (y, w) in sub.vectors().iter().enumerate() {
                    let p = b.mul(u, w);
                    if !sub.contains(&p) {
                        return Err(Witness::new(&[name, x, y], p, zeros(n)));
                    }
                }
            }
        }
        Ok(())
    });
    report
}

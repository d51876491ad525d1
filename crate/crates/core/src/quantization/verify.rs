use alloc::vec::Vec;

use num_traits::Zero;

use crate::category::ModuleCategory;
use crate::linalg::tensor::outer;
use crate::linalg::{axpy, zeros, Rational};
use crate::qt::WeakCocycle;
use crate::report::{expect_eq, VerificationReport};
use crate::transmutation::{verify_braided_hopf, BraidedHopfPresentation};
use crate::weak_hopf::QuantumGroupoid;

/// Both sides of the four-factor exchange law in `H^{⊗4}`, with `X = Y = F`:
///
/// `Y¹F^{-(1)} ⊗ Y²X^{-(1)}F²Y^{-(1)} ⊗ X¹X^{-(2)}F¹F^{-(2)} ⊗ X²Y^{-(2)}`
/// and `(Δ⊗Δ)(F⁻¹) · ((Δ⊗Δ)F)_{1324}`.
pub fn four_factor_sides(h: &QuantumGroupoid, wc: &WeakCocycle) -> (Vec<Rational>, Vec<Rational>) {
    let (f, fi) = (wc.f(), wc.f_inv());
    let factors = [
        h.legs(f, &[0, 1], 4),
        h.legs(f, &[2, 3], 4),
        h.legs(fi, &[1, 2], 4),
        h.legs(f, &[2, 1], 4),
        h.legs(fi, &[0, 2], 4),
        h.legs(fi, &[1, 3], 4),
    ];
    let mut left = factors[0].clone();
    for x in &factors[1..] {
        left = h.tensor_mul(4, &left, x);
    }
    let dd = |x: &[Rational]| h.comul_at(&h.comul_at(x, 2, 1), 3, 0);
    let right = h.tensor_mul(4, &dd(fi), &h.permute(&dd(f), &[0, 2, 1, 3]));
    (left, right)
}

/// [`verify_braided_hopf`] in the `Φ`-context of `(H, F)`, followed by the
/// intermediate identities behind the algebra-map property of `Δ_F`.
pub fn verify_quantization(p: &BraidedHopfPresentation, h: &QuantumGroupoid, wc: &WeakCocycle) -> VerificationReport {
    let mut report = VerificationReport::new("quantization");
    let ctx = match ModuleCategory::phi(h, wc) {
        Ok(ctx) => ctx,
        Err(_) => {
            report.record("cocommutative", false);
            return report;
        }
    };
    report.absorb(verify_braided_hopf(p, &ctx));

    let n = h.dim();
    let (left4, right4) = four_factor_sides(h, wc);
    report.check("four-factor-exchange", || expect_eq(&[], left4.clone(), right4.clone()));

    let adv: Vec<Vec<Vec<Rational>>> =
        (0..n).map(|x| (0..n).map(|y| h.adjoint(&h.basis_vec(x)).column(y)).collect()).collect();
    let incl = p.carrier.inclusion();
    let incl2 = incl.kron(&incl);
    let cc = ctx.tensor(&p.module, &p.module).expect("same algebra");
    let terms: Vec<([usize; 4], &Rational)> =
        right4.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (split4(i, n), x)).collect();
    report.check("comul-multiplicative", || {
        for (k, v) in cc.image().vectors().iter().enumerate() {
            let lhs = incl2.apply(&p.comul.apply(&p.mul.apply(v)));
            // a_1 ⊗ b_1 ⊗ a_2 ⊗ b_2
            let plain = incl2.apply(v);
            let w = h.permute(&h.comul_at(&h.comul_at(&plain, 2, 1), 3, 0), &[0, 2, 1, 3]);
            let mut rhs = zeros(n * n);
            for (widx, wc) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let y = split4(widx, n);
                for (x, xc) in &terms {
                    let first = h.mul(&adv[x[0]][y[0]], &adv[x[1]][y[1]]);
                    let second = h.mul(&adv[x[2]][y[2]], &adv[x[3]][y[3]]);
                    axpy(&mut rhs, &(wc * *xc), &outer(&first, &second));
                }
            }
            expect_eq(&[k], lhs, rhs)?;
        }
        Ok(())
    });
    report.check("comul-unit", || {
        let one = p.one();
        expect_eq(&[], p.comul.apply(&one), cc.projector().apply(&outer(&one, &one)))
    });
    report
}

fn split4(i: usize, n: usize) -> [usize; 4] {
    [i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n]
}

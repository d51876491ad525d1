//! Exit-gate criteria. One line per criterion is written to stdout, then the
//! test fails if any criterion failed. Every comparison is exact.

mod common;

use std::fmt::Display;
use std::io::Write;

use common::{fixture, fixture_names, fixture_text, mutate, weakhopf, write_temp};
use weakhopf::format::{write_documents, write_presentation, Document, MorphismDoc};
use weakhopf_core::category::{check_braiding, HModule, ModuleCategory};
use weakhopf_core::linalg::tensor::outer;
use weakhopf_core::linalg::{int, one, unit_vector, zero};
use weakhopf_core::qt::{
    check_drinfeld_element, check_quasitriangular, derived_r_identities, drinfeld_element, QTStructure, WeakCocycle,
};
use weakhopf_core::quantization::{quantize, verify_quantization};
use weakhopf_core::transmutation::{
    centralizer, self_transmute, transmute, verify_braided_hopf, BraidedHopfPresentation, QGMorphism,
};
use weakhopf_core::twisting::{check_twist_element_identities, twist, verify_isomorphism};
use weakhopf_core::weak_hopf::{check_counital_maps, solve_antipode};
use weakhopf_core::zoo::{all_fixtures, direct_sum, direct_sum_cocycle, fixture_by_name, Fixture};
use weakhopf_core::{LinearMap, QuantumGroupoid, VerificationReport};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl Display) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn lift<T, E: Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn passes(report: &VerificationReport, subject: &str) -> Outcome {
    match report.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{subject}: {}/{} failed", report.suite, c.name)),
    }
}

fn get(name: &str) -> Fixture {
    fixture_by_name(name).expect("builtin fixture")
}

fn matrix(rows: &[&[i64]]) -> LinearMap {
    LinearMap::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
}

/// The table every N-based criterion expects, in the basis `e1, e2` of both
/// the carrier and `H_t`: `e_i e_j = δ_ij e_i`, `Δ(e_i) = e_i ⊗ e_i`,
/// `ε(e_i) = e_i`, `S(e_i) = e_i`, `η(e_i) = e_i`.
fn n_table(p: &BraidedHopfPresentation, label: &str) -> Outcome {
    let id = LinearMap::identity(2);
    ensure(p.carrier.inclusion() == id, format!("{label}: carrier is not e1, e2"))?;
    ensure(p.target.inclusion() == id, format!("{label}: H_t basis is not e1, e2"))?;
    ensure(p.target_one == vec![one(), one()], format!("{label}: 1 is not e1 + e2"))?;
    let mul = matrix(&[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
    let comul = matrix(&[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    ensure(p.mul == mul, format!("{label}: product differs"))?;
    ensure(p.comul == comul, format!("{label}: coproduct differs"))?;
    ensure(p.counit == id, format!("{label}: counit differs"))?;
    ensure(p.antipode == id, format!("{label}: antipode differs"))?;
    ensure(p.unit == id, format!("{label}: unit differs"))
}

/// Whether `p` is `(μ, η, Δ, ε, S)` of `h` itself, compared in ambient
/// coordinates: `η` is the inclusion of `H_t` and `ε` lands in `H_t` as
/// `ε(h)1`.
fn is_untwisted(p: &BraidedHopfPresentation, h: &QuantumGroupoid, label: &str) -> Outcome {
    let n = h.dim();
    ensure(p.carrier_dim() == n, format!("{label}: carrier is not all of H"))?;
    let ic = p.carrier.inclusion();
    let it = p.target.inclusion();
    let one_col = LinearMap::from_columns(n, &[h.unit().to_vec()]);
    ensure(ic.compose(&p.mul) == h.mul_map().compose(&ic.kron(&ic)), format!("{label}: μ"))?;
    ensure(ic.compose(&p.unit) == it, format!("{label}: η"))?;
    ensure(ic.kron(&ic).compose(&p.comul) == h.comul_map().compose(&ic), format!("{label}: Δ"))?;
    ensure(it.compose(&p.counit) == one_col.compose(&h.counit_map()).compose(&ic), format!("{label}: ε"))?;
    ensure(ic.compose(&p.antipode) == h.antipode().compose(&ic), format!("{label}: S"))
}

fn c1() -> Outcome {
    let run = weakhopf(["check", fixture("N").to_str().unwrap()]);
    ensure(run.code == 0 && !run.stdout.contains("FAIL"), format!("check N exit {}", run.code))?;
    for suite in ["[N] weak-bialgebra", "[N] quantum-groupoid", "[N] antipode-solve", "[N.R] quasitriangular"] {
        ensure(run.stdout.contains(suite), format!("check N did not run {suite}"))?;
    }
    let fx = get("N");
    let p = lift(self_transmute(&fx.algebra, &fx.qt), "self-transmute")?;
    n_table(&p, "self-transmute N")?;
    let via_identity = lift(transmute(&fx.algebra, &fx.qt, &QGMorphism::identity(&fx.algebra)), "transmute")?;
    ensure(via_identity.same_structure(&p), "transmute along id differs from self-transmute")
}

fn c2() -> Outcome {
    let fx = get("N");
    let f = [one(), zero(), zero(), one()];
    ensure(fx.cocycle.f() == f, "N.F is not e1⊗e1 + e2⊗e2")?;
    let p = lift(quantize(&fx.algebra, &fx.cocycle), "quantize")?;
    n_table(&p, "quantize N")?;
    passes(&verify_quantization(&p, &fx.algebra, &fx.cocycle), "quantize N")
}

fn c3() -> Outcome {
    let fx = get("N");
    let pair = lift(twist(&fx.algebra, &fx.qt, &fx.cocycle), "twist")?;
    let (h, t) = (&fx.algebra, &pair.twisted);
    ensure(t.mul_tensor() == h.mul_tensor(), "twisted product differs")?;
    ensure(t.comul_tensor() == h.comul_tensor(), "twisted coproduct differs")?;
    ensure(t.unit() == h.unit() && t.counit_vector() == h.counit_vector(), "twisted unit or counit differs")?;
    ensure(t.antipode() == h.antipode(), "twisted antipode differs")?;
    ensure(pair.twisted_qt.r() == fx.qt.r(), "R̃ differs from R")?;
    let out = lift(verify_isomorphism(h, &fx.qt, &fx.cocycle), "verify-iso")?;
    passes(&out.report, "verify-iso N")?;
    ensure(
        write_presentation(&out.quantized) == write_presentation(&out.transmuted),
        "serialized presentations differ",
    )?;
    let run = weakhopf(["verify-iso", fixture("N").to_str().unwrap()]);
    ensure(run.code == 0 && run.stdout.ends_with("presentations equal\n"), "CLI verify-iso N")
}

const SEVEN: [&str; 7] = ["module-map", "algebra-map", "unit", "coalgebra-map", "counit", "antipode", "bijectivity"];

fn c4() -> Outcome {
    let fx = get("kD4");
    let h = &fx.algebra;
    ensure(h.dim() == 8, "kD4 is not 8-dimensional")?;
    let one_one = outer(h.unit(), h.unit());
    ensure(fx.qt.r() == one_one, "R is not 1⊗1")?;
    ensure(h.tensor_mul(2, &h.delta_one_cop(), &h.delta_one()) == one_one, "Δcop(1)Δ(1) is not 1⊗1")?;
    let out = lift(verify_isomorphism(h, &fx.qt, &fx.cocycle), "verify-iso")?;
    for name in SEVEN {
        let check = out.report.get(name).ok_or(format!("no check {name}"))?;
        ensure(check.passed, format!("{name} failed"))?;
    }
    passes(&out.report, "verify-iso kD4")?;
    let expected = h.tensor_mul(2, &h.flip(fx.cocycle.f_inv()), fx.cocycle.f());
    ensure(out.pair.twisted_qt.r() == expected, "R̃ is not F21^-1 F")?;
    ensure(expected != one_one, "R̃ = 1⊗1")?;
    let run = weakhopf(["verify-iso", fixture("kD4").to_str().unwrap()]);
    ensure(run.code == 0, format!("CLI verify-iso kD4 exit {}", run.code))
}

fn weak_block_instance(
    name: &str,
    h: &QuantumGroupoid,
    qt: &QTStructure,
    wc: &WeakCocycle,
) -> Result<BraidedHopfPresentation, String> {
    ensure(h.delta_one() != outer(h.unit(), h.unit()), format!("{name}: Δ(1) = 1⊗1"))?;
    ensure(h.target_subalgebra().dim() > 1, format!("{name}: H_t is one-dimensional"))?;
    let p = lift(quantize(h, wc), "quantize")?;
    let ctx = lift(ModuleCategory::phi(h, wc), "phi")?;
    passes(&verify_braided_hopf(&p, &ctx), name)?;
    passes(&verify_quantization(&p, h, wc), name)?;
    let out = lift(verify_isomorphism(h, qt, wc), "verify-iso")?;
    passes(&out.report, name)?;
    Ok(p)
}

fn c5() -> Outcome {
    let fx = get("kD4+N");
    weak_block_instance("kD4+N", &fx.algebra, &fx.qt, &fx.cocycle)?;
    let run = weakhopf(["verify-iso", fixture("kD4+N").to_str().unwrap()]);
    ensure(run.code == 0, format!("CLI verify-iso kD4+N exit {}", run.code))?;

    let mixed = get("kD4-mixed");
    let n = get("N");
    let h = lift(direct_sum(&mixed.algebra, &n.algebra), "direct sum")?;
    let wc = direct_sum_cocycle(8, &mixed.cocycle, 2, &WeakCocycle::trivial(&n.algebra));
    let qt = lift(weakhopf_core::qt::canonical_r(&h), "canonical R")?;
    let p = weak_block_instance("kD4-mixed+N", &h, &qt, &wc)?;
    let plain = lift(quantize(&h, &WeakCocycle::trivial(&h)), "quantize")?;
    ensure(p.mul != plain.mul, "mixed cocycle leaves the product unchanged")
}

fn c6() -> Outcome {
    let fixtures = all_fixtures();
    ensure(fixtures.len() >= 5, "fewer than five fixtures")?;
    for fx in &fixtures {
        let h = &fx.algebra;
        let solved = lift(solve_antipode(h.base()), &fx.name)?;
        ensure(&solved == h.antipode(), format!("{}: solved antipode differs", fx.name))?;
        // Stored antipodes come from arrow inversion: S(a)·a and a·S(a) are identity arrows.
        for i in 0..h.dim() {
            let a = h.basis_vec(i);
            let s = h.antipode().apply(&a);
            ensure(h.target_subalgebra().contains(&h.mul(&a, &s)), format!("{}: a·S(a) is not in H_t", fx.name))?;
        }
    }
    Ok(())
}

fn c7() -> Outcome {
    let fx = get("kD4");
    let h = &fx.algebra;
    let one_one = outer(h.unit(), h.unit());
    let qt = QTStructure::new(one_one.clone(), one_one.clone());
    let wc = WeakCocycle::new(one_one.clone(), one_one);
    passes(&check_quasitriangular(h, &qt), "R = 1⊗1")?;
    let t = lift(self_transmute(h, &qt), "self-transmute")?;
    is_untwisted(&t, h, "transmutation")?;
    let q = lift(quantize(h, &wc), "quantize")?;
    is_untwisted(&q, h, "quantization")?;
    let pair = lift(twist(h, &qt, &wc), "twist")?;
    let t = &pair.twisted;
    ensure(
        t.mul_tensor() == h.mul_tensor() && t.comul_tensor() == h.comul_tensor() && t.antipode() == h.antipode(),
        "twist with F = 1⊗1 changes H",
    )?;
    ensure(pair.twisted_qt.r() == qt.r(), "twist with F = 1⊗1 changes R")?;
    let out = lift(verify_isomorphism(h, &qt, &wc), "verify-iso")?;
    passes(&out.report, "verify-iso")?;
    ensure(out.maps.alpha.is_identity(), "α is not the identity")
}

fn idempotent(m: &LinearMap) -> bool {
    &m.compose(m) == m
}

fn category_properties(ctx: &ModuleCategory, m: &HModule, label: &str) -> Outcome {
    let t = lift(ctx.tensor(m, m), label)?;
    ensure(idempotent(t.projector()), format!("{label}: P² ≠ P"))?;
    let b = lift(ctx.braiding(m, m), label)?;
    let bi = lift(ctx.braiding_inverse(m, m), label)?;
    let id = LinearMap::identity(t.dim());
    ensure(b.compose(&bi) == id && bi.compose(&b) == id, format!("{label}: braiding not invertible"))?;
    for (i, a) in t.actions().iter().enumerate() {
        ensure(&b.compose(a) == &a.compose(&b), format!("{label}: braiding not linear for basis element {i}"))?;
    }
    passes(&check_braiding(ctx, m, m), label)
}

fn properties(fx: &Fixture) -> Outcome {
    let h = &fx.algebra;
    let name = &fx.name;
    ensure(idempotent(&h.epsilon_t_map()), format!("{name}: ε_t not idempotent"))?;
    ensure(idempotent(&h.epsilon_s_map()), format!("{name}: ε_s not idempotent"))?;
    passes(&check_counital_maps(h.base()), name)?;

    let psi = ModuleCategory::psi(h, &fx.qt);
    category_properties(&psi, &HModule::regular(h.base()), &format!("{name} Ψ"))?;
    let phi = lift(ModuleCategory::phi(h, &fx.cocycle), name)?;
    let adj = lift(HModule::adjoint(h, &centralizer(h)), name)?;
    category_properties(&phi, &adj, &format!("{name} Φ"))?;

    passes(&derived_r_identities(h, &fx.qt), name)?;
    passes(&check_twist_element_identities(h, &fx.cocycle), name)?;

    passes(&check_drinfeld_element(h, &fx.qt), name)?;
    let d = lift(drinfeld_element(h, &fx.qt), name)?;
    ensure(
        h.mul(&d.u, &d.u_inv) == h.unit() && h.mul(&d.u_inv, &d.u) == h.unit(),
        format!("{name}: u not invertible"),
    )?;
    for i in 0..h.dim() {
        let x = h.basis_vec(i);
        let s2 = h.s(&h.s(&x));
        ensure(s2 == h.mul(&h.mul(&d.u, &x), &d.u_inv), format!("{name}: S² ≠ u(·)u⁻¹ at {i}"))?;
    }
    Ok(())
}

fn c8() -> Outcome {
    for fx in all_fixtures() {
        properties(&fx)?;
    }
    Ok(())
}

fn mutation_fails(dir: &tempfile::TempDir, label: &str, text: &str, check: &str) -> Outcome {
    let path = write_temp(dir, &format!("{label}.whf"), text);
    let run = weakhopf(["check", path.to_str().unwrap()]);
    ensure(run.code == 1, format!("{label}: exit {} instead of 1 {}", run.code, run.stderr))?;
    ensure(run.stdout.contains(&format!("  FAIL {check} at [")), format!("{label}: no witness for {check}"))
}

fn c9() -> Outcome {
    let dir = lift(tempfile::tempdir(), "tempdir")?;
    let n = fixture_text("N");
    let z2 = fixture_text("kZ2");
    let pair = fixture_text("pair2");
    let cases = [
        ("counit", mutate(&n, "N", "counit", 0, 0, "0"), "counit-axiom"),
        ("unit", mutate(&n, "N", "unit", 0, 0, "0"), "unit-axiom"),
        ("associativity", mutate(&pair, "pair2", "mul", 1, 3, "1"), "associativity"),
        ("coassociativity", mutate(&z2, "kZ2", "comul", 2, 0, "1"), "coassociativity"),
        ("multiplicativity", mutate(&z2, "kZ2", "mul", 3, 0, "2"), "multiplicativity"),
        ("antipode", mutate(&n, "N", "antipode", 0, 0, "2"), "S*id=eps_s"),
        ("r-matrix", mutate(&n, "N.R", "element2", 0, 0, "0"), "r-rinv"),
        ("cocycle", mutate(&n, "N.F", "element2", 1, 1, "0"), "f-finv"),
    ];
    for (label, text, check) in &cases {
        ensure(text != &n && text != &z2 && text != &pair, format!("{label}: mutation changed nothing"))?;
        mutation_fails(&dir, label, text, check)?;
    }

    let zh = get("kZ2").algebra;
    let mut actions = HModule::regular(zh.base()).actions().to_vec();
    actions[1] = actions[1].scale(&int(2));
    let module = lift(HModule::new("M", "kZ2", 2, actions), "module")?;
    let text = write_documents(&[Document::QuantumGroupoid(zh.clone()), Document::Module(module)]);
    mutation_fails(&dir, "module", &text, "module-associativity")?;

    let v4 = get("kV4").algebra;
    let mut columns = vec![unit_vector(4, 0), unit_vector(4, 1)];
    columns[1][2] = one();
    let morphism = MorphismDoc {
        name: "f".into(),
        source: "kZ2".into(),
        target: "kV4".into(),
        matrix: LinearMap::from_columns(4, &columns),
    };
    let text =
        write_documents(&[Document::QuantumGroupoid(zh), Document::QuantumGroupoid(v4), Document::Morphism(morphism)]);
    mutation_fails(&dir, "morphism", &text, "f-multiplicative")?;

    for name in fixture_names() {
        let run = weakhopf(["check", fixture(&name).to_str().unwrap()]);
        ensure(run.code == 0, format!("unmutated {name} fails"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("diagonal algebra check and self-transmutation", c1),
        ("diagonal algebra quantization table", c2),
        ("diagonal algebra twist and identical presentations", c3),
        ("kD4 isomorphism with nontrivial twisted R", c4),
        ("weak direct sum in the twisted module category", c5),
        ("solved antipode equals stored antipode", c6),
        ("degeneration with trivial R and F", c7),
        ("property suites on every fixture", c8),
        ("mutation sensitivity", c9),
    ];
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for (i, (title, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(()) => writeln!(out, "criterion {}: PASS {title}", i + 1).unwrap(),
            Err(why) => {
                writeln!(out, "criterion {}: FAIL {title}: {why}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

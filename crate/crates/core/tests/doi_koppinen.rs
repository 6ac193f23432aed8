use semihopf::doi_koppinen::*;
use semihopf::structures::check_semialgebra;
use semihopf::{example, BasisId, BisemialgebraDesc, Error, Example, LinearMap, Semiring, StructureDesc, Vector};

fn group_bi(order: u32, s: &Semiring) -> BisemialgebraDesc {
    example(&Example::GroupHopf { order }, s).unwrap().into_bisemialgebra().unwrap()
}

fn atom(n: &str) -> BasisId {
    BasisId::atom(n)
}

fn word(w: &[&str]) -> BasisId {
    BasisId::word(w)
}

#[test]
fn b_is_a_module_coalgebra_and_comodule_algebra_over_itself() {
    let b = group_bi(2, &Semiring::boolean());
    let c = StructureDesc::Semicoalgebra(b.coalgebra.clone());
    assert!(check_action_coaction(CompatKind::Rmc, &c, b.mu(), &b, 0).unwrap().passed());
    let a = StructureDesc::Semialgebra(b.algebra.clone());
    assert!(check_action_coaction(CompatKind::Rca, &a, b.delta(), &b, 0).unwrap().passed());
}

#[test]
fn ignoring_the_action_breaks_the_counit_companion() {
    let s = Semiring::naturals();
    let b = example(&Example::PolyBinomial, &s).unwrap().into_bisemialgebra().unwrap();
    let s2 = s.clone();
    let lazy = LinearMap::new("c·b := c", &s, move |p| Ok(Vector::basis(&s2, p.as_pair().unwrap().0.clone())));
    let r = check_action_coaction(CompatKind::Rmc, &StructureDesc::Semicoalgebra(b.coalgebra.clone()), &lazy, &b, 2).unwrap();
    assert!(!r.passed());
    // ε(1·x) = ε(1) = 1 but ε(1) ε(x) = 0
    assert!(r.witnesses.iter().any(|w| w.is("ε(c b) = ε(c) ε(b)", &["1", "x"])), "{r}");
}

#[test]
fn trivial_action_and_coaction_satisfy_rma_and_com_coal() {
    let s = Semiring::boolean();
    let b = group_bi(2, &s);
    let a = example(&Example::GroupHopf { order: 3 }, &s).unwrap();
    let eps = b.epsilon().clone();
    let s2 = s.clone();
    let trivial_action = LinearMap::new("a·b = ε(b)a", &s, move |p| {
        let (x, u) = p.as_pair().unwrap();
        Ok(Vector::term(&s2, eps.on_basis(u)?, x.clone()))
    });
    assert!(check_action_coaction(CompatKind::Rma, &a, &trivial_action, &b, 0).unwrap().passed());
    let eta = b.unit().clone();
    let trivial_coaction = LinearMap::new("c ↦ c⊗1", &s, move |x| Vector::basis(eta.semiring(), x.clone()).tensor(&eta));
    assert!(check_action_coaction(CompatKind::ComCoal, &a, &trivial_coaction, &b, 0).unwrap().passed());
    // Δ itself is not a comodule-coalgebra coaction on a group coalgebra
    let r = check_action_coaction(CompatKind::ComCoal, &StructureDesc::Semicoalgebra(b.coalgebra.clone()), b.delta(), &b, 0)
        .unwrap();
    assert!(r.find("Δ is colinear").is_some());
}

#[test]
fn kind_and_structure_must_match() {
    let s = Semiring::naturals();
    let b = group_bi(2, &s);
    let coalg = example(&Example::DirectSumCoalgebra { generators: 1 }, &s).unwrap();
    let err = check_action_coaction(CompatKind::Rma, &coalg, b.mu(), &b, 0).unwrap_err();
    assert!(matches!(err, Error::Configuration(_)));
    let alg = StructureDesc::Semialgebra(b.algebra.clone());
    assert!(matches!(check_action_coaction(CompatKind::Rmc, &alg, b.mu(), &b, 0), Err(Error::Configuration(_))));
}

#[test]
fn dk_modules() {
    let s = Semiring::boolean();
    let instances = builtin_instances(&s).unwrap();
    let (hopf, regular) = &instances[0];
    assert!(check_datum(hopf, 0).unwrap().passed());
    assert!(check_dk_module(regular, hopf, 0).unwrap().passed());
    let (graded, relative) = &instances[1];
    assert!(check_datum(graded, 0).unwrap().passed());
    assert!(check_dk_module(relative, graded, 0).unwrap().passed());
    let (hopf, corrupted) = &instances[2];
    let r = check_dk_module(corrupted, hopf, 0).unwrap();
    assert!(!r.passed());
    assert!(r.witnesses.iter().any(|w| w.is("DK compatibility", &["g", "g"])), "{r}");
}

#[test]
fn smash_product_of_boolean_z2_is_associative_and_unital() {
    let s = Semiring::boolean();
    let datum = DKDatum::hopf(&group_bi(2, &s));
    let smash = smash_product(&datum).unwrap();
    assert_eq!(smash.carrier.all().unwrap().len(), 4);
    let r = check_semialgebra(&smash, 0).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.checked, 64 + 4 + 4);
    for p in smash.carrier.all().unwrap() {
        let v = Vector::basis(&s, p);
        assert_eq!(smash.mul(&smash.eta, &v).unwrap(), v);
    }
    assert!(check_smash_embedding(&datum, 0).unwrap().passed());
}

#[test]
fn smash_product_of_trivial_datum_is_componentwise() {
    let s = Semiring::naturals();
    let a = example(&Example::GroupHopf { order: 3 }, &s).unwrap().into_bisemialgebra().unwrap().algebra;
    let c = group_bi(2, &s).coalgebra;
    let datum = DKDatum::trivial(&s, &a, &c).unwrap();
    let smash = smash_product(&datum).unwrap();
    assert!(check_semialgebra(&smash, 0).unwrap().passed());
    // oracle: (a # cᵢ*)(b # cⱼ*) = ab # δᵢⱼ cᵢ* for the group-like coalgebra
    let ab = a.carrier.all().unwrap();
    let cb = c.carrier.all().unwrap();
    for x in &ab {
        for y in &ab {
            for ci in &cb {
                for cj in &cb {
                    let l = BasisId::pair(x.clone(), BasisId::dual(ci.clone()));
                    let r = BasisId::pair(y.clone(), BasisId::dual(cj.clone()));
                    let got = smash.mul_basis(&l, &r).unwrap();
                    let expected = if ci == cj {
                        a.mul_basis(x, y).unwrap().tensor(&Vector::basis(&s, BasisId::dual(ci.clone()))).unwrap()
                    } else {
                        Vector::zero(&s)
                    };
                    assert_eq!(got, expected);
                }
            }
        }
    }
}

#[test]
fn hom_product_unit_and_associativity() {
    let s = Semiring::boolean();
    let datum = DKDatum::hopf(&group_bi(2, &s));
    let maps = elementary_maps(&datum).unwrap();
    assert_eq!(maps.len(), 4);
    let r = check_hom_product(&datum, &maps, 0).unwrap();
    assert!(r.passed(), "{r}");
    // 4 maps × 2 basis × 2 unit laws, and 64 triples × 2 basis elements
    assert_eq!(r.checked, 16 + 128);
}

#[test]
fn hom_product_with_trivial_coaction_is_opposite_convolution() {
    let s = Semiring::naturals();
    let words = example(&Example::HazWords { alphabet: vec!["2".into(), "3".into()] }, &s)
        .unwrap()
        .into_bisemialgebra()
        .unwrap();
    let datum = DKDatum::trivial(&s, &words.algebra, &words.coalgebra).unwrap();
    let id = LinearMap::identity(&s);
    let fg = dk_hom_product(&id, &id, &datum);
    // Σ c₂ c₁ over the deconcatenations of [2,3]
    let expected = Vector::from_terms(&s, [(Semiring::naturals().from_u64(2), word(&["2", "3"])), (s.one(), word(&["3", "2"]))]);
    assert_eq!(fg.on_basis(&word(&["2", "3"])).unwrap(), expected);
    let unit = dk_hom_unit(&datum);
    for w in [word(&[]), word(&["2"]), word(&["3", "2", "2"])] {
        assert_eq!(dk_hom_product(&id, &unit, &datum).on_basis(&w).unwrap(), Vector::basis(&s, w.clone()));
    }
}

#[test]
fn entwining_map_examples() {
    let s = Semiring::boolean();
    let datum = DKDatum::hopf(&group_bi(2, &s));
    let psi = entwining_map(&datum);
    let (e, g) = (atom("e"), atom("g"));
    assert_eq!(psi.on_pair(&g, &g).unwrap(), Vector::basis(&s, BasisId::pair(g.clone(), e.clone())));
    assert_eq!(psi.on_pair(&e, &e).unwrap(), Vector::basis(&s, BasisId::pair(e.clone(), e.clone())));

    let a = example(&Example::GroupHopf { order: 3 }, &s).unwrap().into_bisemialgebra().unwrap().algebra;
    let c = group_bi(2, &s).coalgebra;
    let trivial = DKDatum::trivial(&s, &a, &c).unwrap();
    let psi = entwining_map(&trivial);
    for x in c.carrier.all().unwrap() {
        for y in a.carrier.all().unwrap() {
            assert_eq!(psi.on_pair(&x, &y).unwrap(), Vector::basis(&s, BasisId::pair(y.clone(), x.clone())));
        }
    }
}

#[test]
fn builtin_data_satisfy_the_module_invariants() {
    for s in [Semiring::boolean(), Semiring::xn(2).unwrap(), Semiring::naturals()] {
        for (datum, m) in builtin_instances(&s).unwrap() {
            assert!(check_datum(&datum, 0).unwrap().passed());
            let smash = smash_product(&datum).unwrap();
            assert!(check_semialgebra(&smash, 0).unwrap().passed(), "{}", datum.name);
            assert!(check_smash_embedding(&datum, 0).unwrap().passed());
            let r = check_entwining_equivalence(&m, &datum, 0).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn hom_product_is_associative_for_valid_finite_data() {
    let s = Semiring::boolean();
    for (datum, _) in builtin_instances(&s).unwrap().into_iter().take(2) {
        let maps = elementary_maps(&datum).unwrap();
        let r = check_hom_product(&datum, &maps, 0).unwrap();
        assert!(r.passed(), "{}: {r}", datum.name);
    }
}

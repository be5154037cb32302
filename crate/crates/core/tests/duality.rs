use num_traits::Zero;
use operadkit::free::Signature;
use operadkit::linalg::{int, span_rank};
use operadkit::presentation::{pencil_associativity_check, preset, weight2_pairing, QuadraticPresentation, Weight2Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn vectors(p: &QuadraticPresentation) -> Vec<Weight2Vector> {
    p.relator_vectors()
        .into_iter()
        .map(|v| Weight2Vector::from_coords(p.signature(), v))
        .collect()
}

fn assert_annihilates(p: &QuadraticPresentation, q: &QuadraticPresentation) {
    for u in vectors(p) {
        for v in vectors(q) {
            assert!(weight2_pairing(&u, &v).unwrap().is_zero());
        }
    }
}

#[test]
fn two_as_and_as2_are_dual() {
    let two_as = preset("two_as").unwrap();
    let as2 = preset("as_2").unwrap();
    assert_eq!(two_as.relators().len() + as2.relators().len(), 8);
    assert!(two_as.koszul_dual().same_relations(&as2));
    assert!(as2.koszul_dual().same_relations(&two_as));
    assert_annihilates(&two_as, &as2);
}

#[test]
fn dual_is_an_involution_on_presets() {
    for name in ["as", "two_as", "as_2"] {
        let p = preset(name).unwrap();
        let d = p.koszul_dual();
        assert_eq!(p.relators().len() + d.relators().len(), p.weight2_dim());
        assert!(d.koszul_dual().same_relations(&p), "{name}");
        assert_annihilates(&p, &d);
    }
    assert!(preset("as").unwrap().koszul_dual().same_relations(&preset("as").unwrap()));
}

#[test]
fn random_presentations_dualize() {
    let sig = Signature::binary(&["*", "•"]);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let r = rng.gen_range(0..=8);
        let rows: Vec<Vec<_>> = (0..r).map(|_| (0..8).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
        let rank = span_rank(8, &rows);
        if rank != r {
            continue;
        }
        let relators = rows
            .into_iter()
            .map(|v| Weight2Vector::from_coords(&sig, v).to_element())
            .collect();
        let p = QuadraticPresentation::new(sig.clone(), relators).unwrap();
        let d = p.koszul_dual();
        assert_eq!(d.relators().len(), 8 - r);
        assert_annihilates(&p, &d);
        assert!(d.koszul_dual().same_relations(&p));
    }
}

#[test]
fn pencil_characterizes_as2() {
    assert!(pencil_associativity_check(&preset("as_2").unwrap()).unwrap());
    assert!(!pencil_associativity_check(&preset("two_as").unwrap()).unwrap());
}

#[test]
fn text_round_trip_of_dual() {
    let d = preset("as_2").unwrap().koszul_dual();
    let back = QuadraticPresentation::parse_text(&d.to_text()).unwrap();
    assert!(back.same_relations(&d));
}

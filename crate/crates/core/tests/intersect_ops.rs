use num_bigint::BigInt;
use num_rational::BigRational;

use gorenstein_wps::classify::{anticanonical_genus, enumerate_gorenstein_wps3};
use gorenstein_wps::intersect::{extension_consistency, model_degree, top_intersection};
use gorenstein_wps::reference::ReferenceData;
use gorenstein_wps::{Error, WeightedSpace};

fn space(w: &[u64]) -> WeightedSpace {
    WeightedSpace::new(w.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn top_intersection_examples() {
    assert_eq!(top_intersection(&space(&[1, 4, 5, 10]), &[1, 1, 1]).unwrap(), q(1, 200));
    assert_eq!(top_intersection(&space(&[1, 1, 1, 1]), &[1, 1, 1]).unwrap(), q(1, 1));
    assert_eq!(top_intersection(&space(&[2, 3, 10, 15]), &[30, 30, 30]).unwrap(), q(30, 1));
    assert!(matches!(top_intersection(&space(&[1, 1, 1, 1]), &[1, 1]), Err(Error::Dimension { .. })));
}

#[test]
fn top_intersection_is_multilinear() {
    let w = space(&[1, 3, 8, 12]);
    let base = top_intersection(&w, &[2, 5, 7]).unwrap();
    assert_eq!(top_intersection(&w, &[6, 5, 7]).unwrap(), base * q(3, 1));
}

#[test]
fn anticanonical_degree_is_two_g_minus_two() {
    for w in enumerate_gorenstein_wps3().unwrap() {
        let s = w.sigma() as i64;
        let g = anticanonical_genus(&w).unwrap() as i64;
        assert_eq!(top_intersection(&w, &[s, s, s]).unwrap(), q(2 * g - 2, 1), "{w}");
    }
}

#[test]
fn model_degree_examples() {
    let md = |w: &[u64], h: &[i64], p: i64| model_degree(&space(w), h, p).unwrap();
    assert_eq!(md(&[1, 1, 1, 2, 4, 4, 4], &[5], 4), q(40, 1));
    assert_eq!(md(&[1, 1, 3, 5, 9, 9], &[10], 9), q(54, 1));
    assert_eq!(md(&[1, 1, 3, 4, 8, 8], &[9], 8), q(48, 1));
    assert_eq!(md(&[1, 1, 2, 3, 6, 6], &[7], 6), q(42, 1));
    assert_eq!(md(&[1, 2, 4, 5, 10, 10], &[12], 10), q(30, 1));
    assert_eq!(md(&[1, 1, 2, 3, 5, 5, 5], &[6, 6], 5), q(30, 1));
    assert!(matches!(
        model_degree(&space(&[1, 1, 1, 1]), &[1, 1, 1], 1),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn model_degree_without_hypersurfaces() {
    let w = space(&[1, 2, 3, 6]);
    assert_eq!(model_degree(&w, &[], 12).unwrap(), top_intersection(&w, &[12, 12, 12]).unwrap());
}

#[test]
fn extension_checks() {
    let reference = ReferenceData::builtin();
    let checks = |id| extension_consistency(reference.case(id).unwrap()).unwrap();
    let find = |id, name: &str| checks(id).into_iter().find(|c| c.check == name).unwrap();

    assert!(checks(9).iter().all(|c| c.pass));
    assert_eq!(find(9, "9a").computed, "40");
    assert_eq!(find(9, "9b").computed, "5");

    let d = find(11, "11d");
    assert!(d.pass);
    assert_eq!(d.computed, "not extendable");
    assert_eq!(find(11, "11b").computed, "3");

    assert_eq!(find(13, "13a").computed, "42");
    assert_eq!(find(13, "13b").computed, "4");

    let a = find(12, "12a");
    assert!(a.pass);
    assert_eq!(a.computed, "48");
    assert!(a.note.contains("46"));
}

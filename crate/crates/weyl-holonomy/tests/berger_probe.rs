//! Probes of the Berger verdicts on listed families and exclusion fixtures.

use weyl_holonomy::curvature::berger_check;
use weyl_holonomy::lie::{
    case_b2_algebra, make_family, so_pseudo, Family, FamilySpec, LieSubalgebra, WittFrame,
};
use weyl_holonomy::{int, QMatrix};

fn j(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(j, i)] = int(1);
    m[(i, j)] = int(-1);
    m
}

#[test]
fn twisted_families_are_berger() {
    // g^{theta,2,so(2)} on n = 2
    let g = make_family(
        &FamilySpec::new(Family::GTheta2, 2)
            .with_h(vec![j(2, 0, 1)])
            .with_theta(vec![int(1)]),
    )
    .unwrap();
    let v = berger_check(&g);
    eprintln!("g-theta-2 so(2) n=2: dim R = {}, berger = {}", v.curvature_dim, v.is_berger);
    assert!(v.is_berger);

    // g^{alpha,theta,1,so(2)} with alpha = 1, theta = 1
    let g = make_family(
        &FamilySpec::new(Family::GAlphaTheta1, 2)
            .with_h(vec![j(2, 0, 1)])
            .with_theta(vec![int(1)])
            .with_alpha(int(1)),
    )
    .unwrap();
    assert!(berger_check(&g).is_berger);
}

#[test]
fn type_four_with_scalar_line_is_not_berger() {
    let spec = FamilySpec {
        family: Family::RidG4HMPsi,
        m: Some(2),
        psi: vec![vec![int(1)]],
        ..FamilySpec::new(Family::RidG4HMPsi, 3).with_h(vec![j(2, 0, 1)])
    };
    let g = make_family(&spec).unwrap();
    let v = berger_check(&g);
    eprintln!("Rid+type4: dim R = {}, witness dim = {}", v.curvature_dim, v.witness.dim());
    assert!(!v.is_berger);
    // the witness has no scalar part: it sits inside the orthogonal algebra
    let id_flat = QMatrix::identity(5).into_flat();
    let sum = v.witness.sum(&g.carrier().clone()).unwrap();
    assert!(!v.witness.contains(&id_flat).unwrap());
    assert_eq!(sum, g.carrier().clone());
}

#[test]
fn boost_rotation_coupling_fixture_is_not_berger() {
    // so(1,1) + R (e1 ^ e2 + a id) on R^{1,3}, a != 0
    let frame = WittFrame::new(2);
    let pq = frame.wedge(&frame.p(), &frame.q()).unwrap();
    let e12 = frame.wedge(&frame.e(1), &frame.e(2)).unwrap();
    let twisted = e12.add(&QMatrix::identity(4)); // a = 1
    let g = LieSubalgebra::lie_closure(4, Some(frame), &[pq, twisted], "case-1 fixture").unwrap();
    assert_eq!(g.dim(), 2);
    let v = berger_check(&g);
    eprintln!("so(1,1)+R(e12+id): dim R = {}, witness dim = {}", v.curvature_dim, v.witness.dim());
    assert!(!v.is_berger);
}

#[test]
fn case_b2_with_flat_twist_is_not_berger() {
    // h = so(2) on e2, e3; theta nonzero on the flat direction e1
    let frame = WittFrame::new(3);
    let g = case_b2_algebra(frame, 1, &[j(3, 1, 2)], &[int(0)], &[int(1)]).unwrap();
    let v = berger_check(&g);
    eprintln!("b2 twisted: dim R = {}, witness dim = {}", v.curvature_dim, v.witness.dim());
    assert!(!v.is_berger);
    // dropping the twist restores the Berger property
    let untwisted = case_b2_algebra(frame, 1, &[j(3, 1, 2)], &[int(1)], &[int(0)]).unwrap();
    assert!(berger_check(&untwisted).is_berger);
}

#[test]
fn twisted_second_conformal_algebra_is_not_berger() {
    // R(id + p^q) + { theta(B) id + B : B in so(n) } with theta != 0, k = 0
    let frame = WittFrame::new(2);
    let pq = frame.wedge(&frame.p(), &frame.q()).unwrap();
    let conf = QMatrix::identity(4).add(&pq);
    let e12 = frame.wedge(&frame.e(1), &frame.e(2)).unwrap();
    let twisted_rot = e12.add(&QMatrix::identity(4)); // theta(e12) = 1
    let g = LieSubalgebra::lie_closure(4, Some(frame), &[conf.clone(), twisted_rot], "cp2 twisted")
        .unwrap();
    assert_eq!(g.dim(), 2);
    let v = berger_check(&g);
    eprintln!("cp2 twisted: dim R = {}, witness dim = {}", v.curvature_dim, v.witness.dim());
    assert!(!v.is_berger);

    // theta = 0 gives the listed family, which is Berger
    let listed = LieSubalgebra::lie_closure(4, Some(frame), &[conf, e12], "cp2 k=0").unwrap();
    assert!(berger_check(&listed).is_berger);
}

#[test]
fn conformal_products_are_berger() {
    for (k, n) in [(0i64, 2usize), (1, 3), (-1, 2)] {
        let g = make_family(&FamilySpec::new(Family::ConformalProduct1, n).with_k(k)).unwrap();
        let v = berger_check(&g);
        eprintln!("cp1 k={k} n={n}: dim R = {}, berger = {}", v.curvature_dim, v.is_berger);
        assert!(v.is_berger, "k = {k}, n = {n}");
    }
    let g = make_family(&FamilySpec::new(Family::ConformalProduct2, 3).with_k(1)).unwrap();
    assert!(berger_check(&g).is_berger);
    let g = make_family(&FamilySpec::new(Family::ConformalProduct3, 3).with_k(1)).unwrap();
    assert!(berger_check(&g).is_berger);
}

#[test]
fn so_one_k_blocks_behave() {
    // a sanity anchor: full orthogonal algebras are Berger
    for (r, s) in [(1usize, 2usize), (1, 3)] {
        let g = so_pseudo(r, s);
        assert!(berger_check(&g).is_berger, "so({r},{s})");
    }
}

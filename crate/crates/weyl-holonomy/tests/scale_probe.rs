//! Timing probes at the upper end of the supported parameter ranges.

use std::time::Instant;
use weyl_holonomy::curvature::{berger_check, curvature_space};
use weyl_holonomy::lie::{direct_sum_euclidean, make_family, so_algebra, Family, FamilySpec};
use weyl_holonomy::{int, QMatrix};

fn j(n: usize, i: usize, jj: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(jj, i)] = int(1);
    m[(i, jj)] = int(-1);
    m
}

#[test]
fn so22_padded_families() {
    // h = so(2) + so(2) acting on the last four of n coordinates
    for n in [4usize, 5] {
        let off = n - 4;
        let h = vec![j(n, off, off + 1), j(n, off + 2, off + 3)];
        let g = make_family(&FamilySpec::new(Family::RidG1H, n).with_h(h)).unwrap();
        let t = Instant::now();
        let v = berger_check(&g);
        eprintln!("Rid+g1h so22 n={n}: dim R = {}, berger = {} ({:?})", v.curvature_dim, v.is_berger, t.elapsed());
        assert!(v.is_berger);
    }
}

#[test]
fn so22_padded_n6() {
    let n = 6;
    let h = vec![j(n, 2, 3), j(n, 4, 5)];
    let g = make_family(&FamilySpec::new(Family::RidG2H, n).with_h(h)).unwrap();
    let t = Instant::now();
    let v = berger_check(&g);
    eprintln!("Rid+g2h so22 n=6: dim R = {}, berger = {} ({:?})", v.curvature_dim, v.is_berger, t.elapsed());
    assert!(v.is_berger);
}

#[test]
fn three_by_three_sum_curvature() {
    let so3 = so_algebra(3);
    let sum = direct_sum_euclidean(&[&so3, &so3], true);
    let t = Instant::now();
    let basis = curvature_space(&sum);
    eprintln!("R(so3+so3+Rid on R^6): dim = {} ({:?})", basis.len(), t.elapsed());
    // additivity: 6 + 6 + 3*3
    assert_eq!(basis.len(), 21);
}

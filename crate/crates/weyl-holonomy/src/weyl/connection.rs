//! Connection coefficients of the gauge-compatible torsion-free connection,
//! its curvature, and iterated covariant derivatives.

use super::walker::{invert_metric, WeylStructure};
use super::JetMatrix;
use crate::error::WeylError;
use crate::curvature::{biv_count, biv_index};
use crate::QJet;

/// Christoffel matrices `Gamma_a` with entry `(c, b)` holding the
/// coefficient of `d_c` in the covariant derivative of `d_b` along `d_a`.
#[derive(Clone, Debug)]
pub struct Connection {
    size: usize,
    gamma: Vec<JetMatrix>,
}

impl Connection {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `Gamma_a` as an operator-valued jet.
    pub fn gamma(&self, a: usize) -> &JetMatrix {
        &self.gamma[a]
    }
}

/// The unique torsion-free connection with `nabla g = 2 omega (x) g`:
/// the Levi-Civita part of `g` plus the gauge term
/// `K_X Y = omega(X) Y + omega(Y) X - g(X, Y) U` with `U` the metric dual
/// of `omega`.
pub fn weyl_connection(g: &JetMatrix, omega: &[QJet]) -> Result<Connection, WeylError> {
    let size = g.size();
    assert_eq!(omega.len(), size, "covector length");
    let sample = g.get(0, 0);
    let (vars, order) = (sample.vars(), sample.order());
    let ginv = invert_metric(g)?;

    // partial derivatives of the metric per direction
    let dg: Vec<JetMatrix> = (0..size).map(|a| g.partial(a)).collect();

    // metric dual of the covector
    let u: Vec<QJet> = (0..size)
        .map(|c| {
            let mut acc = QJet::zero(vars, order);
            for d in 0..size {
                let gi = ginv.get(c, d);
                if !gi.is_zero() && !omega[d].is_zero() {
                    acc = acc.add(&gi.mul(&omega[d]));
                }
            }
            acc
        })
        .collect();

    let half = crate::ratio(1, 2);
    let mut gamma = Vec::with_capacity(size);
    for a in 0..size {
        let mut m = JetMatrix::zeros(size, vars, order);
        for c in 0..size {
            for b in 0..size {
                // Levi-Civita: 1/2 g^{cd} (d_a g_{db} + d_b g_{da} - d_d g_{ab})
                let mut acc = QJet::zero(vars, order);
                for d in 0..size {
                    let gi = ginv.get(c, d);
                    if gi.is_zero() {
                        continue;
                    }
                    let term = dg[a].get(d, b).add(dg[b].get(d, a)).sub(dg[d].get(a, b));
                    if !term.is_zero() {
                        acc = acc.add(&gi.mul(&term));
                    }
                }
                acc = acc.scale(&half);
                // gauge part
                if !omega[b].is_zero() && c == a {
                    acc = acc.add(&omega[b]);
                }
                if !omega[a].is_zero() && c == b {
                    acc = acc.add(&omega[a]);
                }
                let gab = g.get(a, b);
                if !gab.is_zero() && !u[c].is_zero() {
                    acc = acc.sub(&gab.mul(&u[c]));
                }
                m.set(c, b, acc);
            }
        }
        gamma.push(m);
    }
    Ok(Connection { size, gamma })
}

/// `Gamma^c_{ab} = Gamma^c_{ba}` for all indices, exactly.
pub fn torsion_free(conn: &Connection) -> bool {
    let size = conn.size;
    for a in 0..size {
        for b in a + 1..size {
            for c in 0..size {
                if conn.gamma[a].get(c, b) != conn.gamma[b].get(c, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Compatibility of the connection with the conformal class: the covariant
/// derivative of the metric is proportional to the metric with factor twice
/// the gauge covector,
/// `d_a g_{bc} - Gamma^d_{ba} g_{dc} - Gamma^d_{ca} g_{bd} = -2 omega_a g_{bc}`.
/// The sign matches the gauge term of [`weyl_connection`]; both sides are
/// compared after truncating at the given total degree (one below the data
/// order, since a derivative is taken).
pub fn gauge_compatible(g: &JetMatrix, omega: &[QJet], conn: &Connection, to_degree: u32) -> bool {
    let size = g.size();
    let two = crate::int(-2);
    for a in 0..size {
        let dga = g.partial(a);
        for b in 0..size {
            for c in 0..size {
                let mut lhs = dga.get(b, c).clone();
                for d in 0..size {
                    let gdc = g.get(d, c);
                    let t1 = conn.gamma[a].get(d, b);
                    if !gdc.is_zero() && !t1.is_zero() {
                        lhs = lhs.sub(&t1.mul(gdc));
                    }
                    let gbd = g.get(b, d);
                    let t2 = conn.gamma[a].get(d, c);
                    if !gbd.is_zero() && !t2.is_zero() {
                        lhs = lhs.sub(&t2.mul(gbd));
                    }
                }
                let rhs = omega[a].mul(g.get(b, c)).scale(&two);
                if lhs.truncated(to_degree) != rhs.truncated(to_degree) {
                    return false;
                }
            }
        }
    }
    true
}

/// Curvature operators `R(d_a, d_b)` for all coordinate pairs `a < b`.
#[derive(Clone, Debug)]
pub struct CurvatureJet {
    size: usize,
    values: Vec<JetMatrix>,
}

impl CurvatureJet {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `R(d_a, d_b)` for `a < b`.
    pub fn value(&self, a: usize, b: usize) -> &JetMatrix {
        assert!(a < b);
        &self.values[biv_index(a, b, self.size)]
    }

    pub fn values(&self) -> &[JetMatrix] {
        &self.values
    }
}

/// `R(d_a, d_b) = d_a Gamma_b - d_b Gamma_a + [Gamma_a, Gamma_b]`.
pub fn curvature(conn: &Connection) -> CurvatureJet {
    let size = conn.size;
    let mut values = Vec::with_capacity(biv_count(size));
    for a in 0..size {
        for b in a + 1..size {
            let m = conn.gamma[b]
                .partial(a)
                .sub(&conn.gamma[a].partial(b))
                .add(&conn.gamma[a].commutator(&conn.gamma[b]));
            values.push(m);
        }
    }
    CurvatureJet { size, values }
}

/// One covariant-derivative step of an operator-valued jet:
/// `d_dir X + [Gamma_dir, X]`.
pub fn derive_operator(conn: &Connection, x: &JetMatrix, dir: usize) -> JetMatrix {
    x.partial(dir).add(&conn.gamma[dir].commutator(x))
}

/// Iterated covariant derivative of a curvature value along the listed
/// directions, innermost first. An empty chain returns the value itself.
pub fn covariant_derivative_chain(
    conn: &Connection,
    curv: &CurvatureJet,
    pair: (usize, usize),
    chain: &[usize],
) -> JetMatrix {
    let mut x = curv.value(pair.0, pair.1).clone();
    for &dir in chain {
        x = derive_operator(conn, &x, dir);
    }
    x
}

impl WeylStructure {
    /// The connection defined by this structure's metric and gauge 1-form.
    pub fn connection(&self) -> Result<Connection, WeylError> {
        weyl_connection(&self.metric(), &self.omega())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, QMatrix};

    fn jet_var(vars: usize, order: u32, i: usize) -> QJet {
        QJet::variable(vars, order, i).unwrap()
    }

    #[test]
    fn flat_connection_vanishes() {
        let ws = WeylStructure::flat(2, 4);
        let conn = ws.connection().unwrap();
        for a in 0..4 {
            assert!(conn.gamma(a).is_zero());
        }
        let r = curvature(&conn);
        for v in r.values() {
            assert!(v.is_zero());
        }
    }

    #[test]
    fn gamma_v_has_the_single_dv_h_entry() {
        // with quadratic A-blocks and a table H, Gamma_v vanishes except
        // for the (v, u) entry 1/2 d_v H
        let n = 2;
        let vars = n + 2;
        let order = 6;
        let v = jet_var(vars, order, 0);
        let x1 = jet_var(vars, order, 1);
        let x2 = jet_var(vars, order, 2);
        // A_1 = -2/3 x1 x2, A_2 = 2/3 x1^2
        let a1 = x1.mul(&x2).scale(&crate::ratio(-2, 3));
        let a2 = x1.mul(&x1).scale(&crate::ratio(2, 3));
        let big_h = v.mul(&v).mul(&v).scale(&crate::ratio(1, 3)).add(&x1.mul(&x1));
        let ws = WeylStructure::flat(n, order)
            .with_big_h(big_h.clone());
        let ws = WeylStructure::new(
            n,
            order,
            ws.h().to_vec(),
            vec![a1, a2],
            big_h.clone(),
            v.clone(),
        )
        .unwrap();
        let conn = ws.connection().unwrap();
        let gamma_v = conn.gamma(0);
        let half_dvh = big_h.partial(0).unwrap().scale(&crate::ratio(1, 2));
        for r in 0..vars {
            for c in 0..vars {
                if (r, c) == (0, n + 1) {
                    assert_eq!(gamma_v.get(r, c), &half_dvh);
                } else {
                    assert!(gamma_v.get(r, c).is_zero(), "entry ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn connection_is_torsion_free_and_gauge_compatible() {
        let n = 2;
        let order = 5;
        let vars = n + 2;
        let v = jet_var(vars, order, 0);
        let x1 = jet_var(vars, order, 1);
        let ws = WeylStructure::flat(n, order)
            .with_big_h(v.mul(&v).add(&x1.mul(&x1)))
            .with_f(v.clone());
        let g = ws.metric();
        let omega = ws.omega();
        let conn = ws.connection().unwrap();
        assert!(torsion_free(&conn));
        assert!(gauge_compatible(&g, &omega, &conn, order - 1));
        // with a wrong right-hand side the check fails
        let mut bad = omega.clone();
        bad[n + 1] = bad[n + 1].add(&QJet::one(vars, order));
        assert!(!gauge_compatible(&g, &bad, &conn, order - 1));
    }

    #[test]
    fn pure_gauge_vanishes_when_f_is_zero() {
        let n = 1;
        let order = 4;
        let vars = n + 2;
        let x = jet_var(vars, order, 1);
        let h = vec![vec![QJet::one(vars, order).add(&x.mul(&x))]];
        let ws = WeylStructure::new(
            n,
            order,
            h,
            vec![QJet::zero(vars, order)],
            QJet::zero(vars, order),
            QJet::zero(vars, order),
        )
        .unwrap();
        // with f = 0 the gauge term drops and compatibility reduces to
        // metric-parallelism
        let g = ws.metric();
        let conn = ws.connection().unwrap();
        assert!(gauge_compatible(&g, &ws.omega(), &conn, order - 1));
        assert!(torsion_free(&conn));
    }

    #[test]
    fn curvature_of_quadratic_h_at_origin() {
        // H = v^2, f = 0: R(d_v, d_u)(0) = diag(1, 0, ..., 0, -1)
        for n in 1..=3usize {
            let order = 5;
            let vars = n + 2;
            let v = jet_var(vars, order, 0);
            let ws = WeylStructure::flat(n, order).with_big_h(v.mul(&v));
            let conn = ws.connection().unwrap();
            let r = curvature(&conn);
            let at0 = r.value(0, n + 1).eval0();
            let mut expected = QMatrix::zeros(n + 2, n + 2);
            expected[(0, 0)] = int(1);
            expected[(n + 1, n + 1)] = int(-1);
            assert_eq!(at0, expected, "n = {n}");
        }
    }

    #[test]
    fn gamma_u_gauge_blocks() {
        // product-type metric (A = 0, h independent of u): the gauge part
        // of Gamma_u is f E_n on the middle block, 2f in the corner and
        // -H f in the (v, u) entry
        let n = 2;
        let order = 6;
        let vars = n + 2;
        let v = jet_var(vars, order, 0);
        let x1 = jet_var(vars, order, 1);
        let x2 = jet_var(vars, order, 2);
        let f = x1.clone();
        let big_h = v.mul(&v);
        let h = vec![
            vec![QJet::one(vars, order).add(&x2.mul(&x2)), QJet::zero(vars, order)],
            vec![QJet::zero(vars, order), QJet::one(vars, order)],
        ];
        let ws = WeylStructure::new(
            n,
            order,
            h,
            vec![QJet::zero(vars, order); n],
            big_h.clone(),
            f.clone(),
        )
        .unwrap();
        let gamma_u = ws.connection().unwrap().gamma(n + 1).clone();
        // middle block: f E_n
        for i in 1..=n {
            for j in 1..=n {
                let expected = if i == j { f.clone() } else { QJet::zero(vars, order) };
                assert_eq!(gamma_u.get(i, j), &expected, "middle entry ({i},{j})");
            }
        }
        // corner: -1/2 d_v H + 2 f
        let half_dvh = big_h.partial(0).unwrap().scale(&crate::ratio(1, 2));
        assert_eq!(
            gamma_u.get(n + 1, n + 1),
            &f.scale(&int(2)).sub(&half_dvh)
        );
        // (v, u) entry: 1/2 H d_v H - H f
        assert_eq!(
            gamma_u.get(0, n + 1),
            &big_h.mul(&half_dvh).sub(&big_h.mul(&f))
        );
    }

    #[test]
    fn curvature_v_column_carries_the_gauge_derivative() {
        // R(d_v, d_i): the column over u in the rotation block is
        // (delta_ik d_v f)
        let n = 2;
        let order = 6;
        let vars = n + 2;
        let v = jet_var(vars, order, 0);
        let x1 = jet_var(vars, order, 1);
        // f = 2v + x^1 so that d_v f is a nonzero constant
        let f = v.scale(&int(2)).add(&x1);
        let ws = WeylStructure::flat(n, order)
            .with_big_h(v.mul(&v))
            .with_f(f.clone());
        let conn = ws.connection().unwrap();
        let r = curvature(&conn);
        let dvf = f.partial(0).unwrap();
        for i in 1..=n {
            let rvi = r.value(0, i);
            for k in 1..=n {
                let expected = if k == i { dvf.clone() } else { QJet::zero(vars, order) };
                assert_eq!(rvi.get(k, n + 1), &expected, "column entry ({k}) of R(v,{i})");
            }
        }
    }

    #[test]
    fn chain_of_length_zero_is_identity() {
        let ws = WeylStructure::flat(1, 4);
        let conn = ws.connection().unwrap();
        let r = curvature(&conn);
        let chain = covariant_derivative_chain(&conn, &r, (0, 2), &[]);
        assert_eq!(&chain, r.value(0, 2));
    }

    #[test]
    fn cubic_h_third_derivative_entries() {
        // H = v^3/3, f = v: the v-derivative of R(d_v, d_u) at 0 has
        // corner entries 1/2 d_v^3 H = 1 and -1/2 d_v^3 H + 2 d_v^2 f = -1
        let n = 1;
        let order = 5;
        let vars = n + 2;
        let v = jet_var(vars, order, 0);
        let x = jet_var(vars, order, 1);
        let big_h = v.mul(&v).mul(&v).scale(&crate::ratio(1, 3)).add(&x.mul(&x));
        let ws = WeylStructure::flat(n, order).with_big_h(big_h).with_f(v);
        let conn = ws.connection().unwrap();
        let r = curvature(&conn);
        let nabla_v = covariant_derivative_chain(&conn, &r, (0, n + 1), &[0]);
        let at0 = nabla_v.eval0();
        assert_eq!(at0[(0, 0)], int(1));
        assert_eq!(at0[(1, 1)], int(0));
        assert_eq!(at0[(n + 1, n + 1)], int(-1));
    }
}

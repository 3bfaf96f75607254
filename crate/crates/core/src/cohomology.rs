//! Exact cohomology of line bundles on the rational surface models, plus
//! the dimension counts derived from them.
//!
//! On `F_e` the pushforward along the ruling reduces everything to `P^1`:
//! for `L = a*h + b*f` with `a >= 0`,
//! `h^i(L) = sum_{k=0}^{a} h^i(P^1, b - k*e)` and `h^2 = 0`; `a = -1` gives
//! the zero sheaf pushforward, so all groups vanish; `a <= -2` is handled by
//! Serre duality `h^i(L) = h^{2-i}(K - L)`, whose right side lands in the
//! first branch. On the quadric the Kuenneth formula multiplies the two
//! `P^1` factors. Both routes are exact integer arithmetic.

use alloc::string::ToString;

use crate::error::Error;
use crate::lattice::{DivisorClass, SurfaceKind, SurfaceModel};
use crate::Result;

/// Dimensions of the three cohomology groups of a line bundle on a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cohomology {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl Cohomology {
    pub const ZERO: Cohomology = Cohomology { h0: 0, h1: 0, h2: 0 };

    /// Euler characteristic `h0 - h1 + h2`.
    pub fn chi(&self) -> i64 {
        self.h0 - self.h1 + self.h2
    }
}

/// `h^0(P^1, O(n))`.
pub fn h0_p1(n: i64) -> i64 {
    (n + 1).max(0)
}

/// `h^1(P^1, O(n))`.
pub fn h1_p1(n: i64) -> i64 {
    (-n - 1).max(0)
}

/// Full cohomology of `a*h + b*f` on `F_e`, `e >= 0`.
pub fn h_hirzebruch(e: i64, a: i64, b: i64) -> Cohomology {
    assert!(e >= 0, "F_e needs e >= 0");
    if a >= 0 {
        let mut h0 = 0;
        let mut h1 = 0;
        for k in 0..=a {
            h0 += h0_p1(b - k * e);
            h1 += h1_p1(b - k * e);
        }
        Cohomology { h0, h1, h2: 0 }
    } else if a == -1 {
        Cohomology::ZERO
    } else {
        // Serre duality; K - L has h-coefficient -2 - a >= 0.
        let dual = h_hirzebruch(e, -2 - a, -(e + 2) - b);
        Cohomology {
            h0: dual.h2,
            h1: dual.h1,
            h2: dual.h0,
        }
    }
}

/// Full cohomology of the bidegree `(a, b)` bundle on `P^1 x P^1`.
pub fn h_quadric(a: i64, b: i64) -> Cohomology {
    Cohomology {
        h0: h0_p1(a) * h0_p1(b),
        h1: h0_p1(a) * h1_p1(b) + h1_p1(a) * h0_p1(b),
        h2: h1_p1(a) * h1_p1(b),
    }
}

/// Cohomology of a line bundle on a surface model. Supported for the
/// rational ruled models (`F_e`, rational cones, the quadric); blown planes,
/// elliptic cones, and abstract scrolls go through their dedicated dimension
/// counts instead.
pub fn h_line_bundle(surface: &SurfaceModel, c: &DivisorClass) -> Result<Cohomology> {
    surface.check_class(c)?;
    match (&surface.kind, c) {
        (SurfaceKind::Hirzebruch { e }, DivisorClass::Hirzebruch { a, b, .. })
        | (SurfaceKind::RationalCone { .. }, DivisorClass::Hirzebruch { e, a, b }) => {
            Ok(h_hirzebruch(*e, *a, *b))
        }
        (SurfaceKind::Quadric, DivisorClass::Quadric { a, b }) => Ok(h_quadric(*a, *b)),
        _ => Err(Error::Domain {
            what: "line bundle cohomology",
            detail: alloc::format!(
                "not implemented on {}; use the model's dimension count",
                surface.kind
            ),
        }),
    }
}

/// Projective dimension of the system `|a*H + b*L|` on a smooth rational
/// normal scroll in `P^r`: `a(a+1)(r-1)/2 + (a+1)(b+1) - 1` for `a >= 0`.
/// `None` means the system is empty. Valid whenever every ruling summand has
/// degree at least `-1` (all the systems this crate feeds it satisfy that).
pub fn dim_linear_system_scroll(r: i64, a: i64, b: i64) -> Result<Option<i64>> {
    if r < 3 {
        return Err(Error::Domain {
            what: "scroll linear system",
            detail: alloc::format!("r = {r} must be at least 3"),
        });
    }
    if a < 0 {
        return Ok(None);
    }
    let dim = a * (a + 1) * (r - 1) / 2 + (a + 1) * (b + 1) - 1;
    Ok(if dim < 0 { None } else { Some(dim) })
}

/// A dimension count that is exact only when the imposed conditions are
/// independent (the generic-position assumption).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedDim {
    pub dim: i64,
    pub assumes_nonspecial: bool,
}

/// Expected projective dimension of plane curves of degree `a` with
/// multiplicity `b_i` at the i-th of `s` general points:
/// `a(a+3)/2 - sum b_i(b_i+1)/2`.
pub fn expected_dim_blowup(c: &DivisorClass) -> Result<ExpectedDim> {
    let (a, b) = match c {
        DivisorClass::Blowup { a, b } => (*a, b),
        _ => {
            return Err(Error::WrongLattice {
                surface: "blown plane".to_string(),
                class: c.to_string(),
            })
        }
    };
    let dim = a * (a + 3) / 2 - b.iter().map(|m| m * (m + 1) / 2).sum::<i64>();
    Ok(ExpectedDim {
        dim,
        assumes_nonspecial: true,
    })
}

/// `h^0(C, M|_C)` for a curve `C` on the surface, computed from the
/// restriction sequence `0 -> M - C -> M -> M|_C -> 0`. Requires
/// `h^0(M - C) = 0` and `h^1(M) = 0`, so that
/// `h^0(M|_C) = h^0(M) + h^1(M - C)` exactly.
pub fn h0_restricted(
    surface: &SurfaceModel,
    m: &DivisorClass,
    c: &DivisorClass,
) -> Result<i64> {
    let hm = h_line_bundle(surface, m)?;
    let hmc = h_line_bundle(surface, &m.try_sub(c)?)?;
    if hmc.h0 != 0 || hm.h1 != 0 {
        return Err(Error::RestrictionPrecondition {
            h0_m_minus_c: hmc.h0,
            h1_m: hm.h1,
        });
    }
    Ok(hm.h0 + hmc.h1)
}

/// Minimal twist `t >= 1` with `h^0(C, O_C(t*f)) >= t + 2`, for a curve
/// class `C` on `F_e` meeting the fiber in at least two points. Returns
/// `(t, h^0)` at that threshold. Below it the pencil cut out by the ruling
/// contributes a pencil's worth of sections and nothing more; the first
/// excess section detects the splitting type of the pushforward to `P^1`.
///
/// For fiber degree at least 2 the restriction-sequence preconditions of
/// [`h0_restricted`] hold at every twist, so the scan is exact. It gives up
/// at `t = 2*max(g, 1)` with [`Error::NoThreshold`].
pub fn scrollar_invariant(e: i64, c: &DivisorClass) -> Result<(i64, i64)> {
    let model = SurfaceModel::hirzebruch(e)?;
    model.check_class(c)?;
    let fiber = DivisorClass::hirzebruch(e, 0, 1);
    let k = c.intersect(&fiber)?;
    if k < 2 {
        return Err(Error::Domain {
            what: "ruling sections scan",
            detail: alloc::format!("class {c} has fiber degree {k}; need at least 2"),
        });
    }
    let g = model.arithmetic_genus(c)?;
    let guard = 2 * g.max(1);
    for t in 1..=guard {
        let h0 = h0_restricted(&model, &fiber.scale(t), c)?;
        if h0 >= t + 2 {
            return Ok((t, h0));
        }
    }
    Err(Error::NoThreshold { guard })
}

/// `h^0` of `t` times the hyperplane class on the cone over an elliptic
/// normal curve of degree `r` in `P^r`. Sections grade by fiber order over
/// the base: the constant, plus for each `1 <= j <= t` the `r*j` sections
/// of a nonspecial degree-`r*j` bundle on the elliptic curve, so
/// `h^0 = 1 + r*t(t+1)/2`. Negative twists carry no sections.
pub fn h0_elliptic_cone(r: i64, t: i64) -> Result<i64> {
    if r < 3 {
        return Err(Error::Domain {
            what: "elliptic cone sections",
            detail: alloc::format!("cone degree r = {r} must be at least 3"),
        });
    }
    if t < 0 {
        return Ok(0);
    }
    Ok(1 + r * t * (t + 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_values() {
        assert_eq!(h0_p1(3), 4);
        assert_eq!(h0_p1(0), 1);
        assert_eq!(h0_p1(-1), 0);
        assert_eq!(h1_p1(-1), 0);
        assert_eq!(h1_p1(-2), 1);
        assert_eq!(h1_p1(-5), 4);
    }

    #[test]
    fn hirzebruch_spot_values() {
        // h1(F_2, -3f) = 2
        assert_eq!(h_hirzebruch(2, 0, -3), Cohomology { h0: 0, h1: 2, h2: 0 });
        // h1(F_2, h) = 1
        assert_eq!(h_hirzebruch(2, 1, 0).h1, 1);
        // h0(F_2, 2h + 6f) = 15, nonspecial
        assert_eq!(h_hirzebruch(2, 2, 6), Cohomology { h0: 15, h1: 0, h2: 0 });
        // a = -1 kills everything
        assert_eq!(h_hirzebruch(3, -1, 7), Cohomology::ZERO);
        // canonical bundle: h2 = h0(O) = 1
        assert_eq!(h_hirzebruch(1, -2, -3), Cohomology { h0: 0, h1: 0, h2: 1 });
    }

    #[test]
    fn quadric_spot_values() {
        // h1(Q, (0,-3)) = 2
        assert_eq!(h_quadric(0, -3), Cohomology { h0: 0, h1: 2, h2: 0 });
        // h0(Q, (2,4)) = 15
        assert_eq!(h_quadric(2, 4), Cohomology { h0: 15, h1: 0, h2: 0 });
        assert_eq!(h_quadric(-2, -2), Cohomology { h0: 0, h1: 0, h2: 1 });
    }

    #[test]
    fn quadric_matches_f0() {
        // F_0 and the quadric are the same surface; (a,b) = a*h + b*f.
        for a in -5..=5 {
            for b in -5..=5 {
                assert_eq!(h_quadric(a, b), h_hirzebruch(0, a, b), "({a},{b})");
            }
        }
    }

    #[test]
    fn serre_duality_holds_on_samples() {
        for (e, a, b) in [(0i64, 3i64, -4i64), (1, -5, 2), (2, 4, 11), (3, -2, -7), (5, 0, 0)] {
            let l = h_hirzebruch(e, a, b);
            let d = h_hirzebruch(e, -2 - a, -(e + 2) - b);
            assert_eq!((l.h0, l.h1, l.h2), (d.h2, d.h1, d.h0), "e={e} a={a} b={b}");
        }
    }

    #[test]
    fn dispatcher_routes_by_surface() {
        let cone = SurfaceModel::rational_cone(3).unwrap();
        let c = DivisorClass::hirzebruch(2, 2, 6);
        assert_eq!(h_line_bundle(&cone, &c).unwrap().h0, 15);
        let q = SurfaceModel::quadric();
        assert_eq!(
            h_line_bundle(&q, &DivisorClass::quadric(2, 4)).unwrap().h0,
            15
        );
        // wrong lattice is rejected before any computation
        assert!(h_line_bundle(&q, &c).is_err());
        // no full cohomology on the abstract scroll
        let sc = SurfaceModel::scroll(5).unwrap();
        assert!(h_line_bundle(&sc, &DivisorClass::scroll(5, 1, 0)).is_err());
        let ec = SurfaceModel::elliptic_cone(5).unwrap();
        assert!(h_line_bundle(&ec, &DivisorClass::hirzebruch(5, 1, 5)).is_err());
    }

    #[test]
    fn scroll_system_dims() {
        assert_eq!(dim_linear_system_scroll(5, 3, 3).unwrap(), Some(39));
        assert_eq!(dim_linear_system_scroll(5, 5, -5).unwrap(), Some(35));
        assert_eq!(dim_linear_system_scroll(5, 4, -1).unwrap(), Some(39));
        assert_eq!(dim_linear_system_scroll(6, 3, 0).unwrap(), Some(33));
        // empty systems come back as None, not as errors
        assert_eq!(dim_linear_system_scroll(5, -1, 4).unwrap(), None);
        assert_eq!(dim_linear_system_scroll(5, 0, -2).unwrap(), None);
        assert!(dim_linear_system_scroll(2, 1, 1).is_err());
    }

    #[test]
    fn blowup_expected_dims() {
        let d = expected_dim_blowup(&DivisorClass::blowup(9, &[3, 3, 3, 3])).unwrap();
        assert_eq!(d.dim, 30);
        assert!(d.assumes_nonspecial);
        assert_eq!(
            expected_dim_blowup(&DivisorClass::blowup(8, &[3, 2, 2, 2]))
                .unwrap()
                .dim,
            29
        );
        assert_eq!(
            expected_dim_blowup(&DivisorClass::blowup(3, &[1, 1, 1, 1]))
                .unwrap()
                .dim,
            5
        );
        assert!(expected_dim_blowup(&DivisorClass::quadric(1, 1)).is_err());
    }

    #[test]
    fn restricted_sections_spot_value() {
        // h0 of the degree-5 embedding bundle restricted to a degree-15
        // curve on the F_2 cone model: 15 + 1 = 16.
        let model = SurfaceModel::hirzebruch(2).unwrap();
        let m = DivisorClass::hirzebruch(2, 2, 6);
        let c = DivisorClass::hirzebruch(2, 5, 10);
        assert_eq!(h0_restricted(&model, &m, &c).unwrap(), 16);
    }

    #[test]
    fn restricted_sections_reject_bad_preconditions() {
        let model = SurfaceModel::hirzebruch(0).unwrap();
        // M - C effective: h0(M - C) > 0
        let m = DivisorClass::hirzebruch(0, 3, 3);
        let c = DivisorClass::hirzebruch(0, 1, 1);
        match h0_restricted(&model, &m, &c) {
            Err(Error::RestrictionPrecondition { h0_m_minus_c, h1_m }) => {
                assert_eq!(h0_m_minus_c, 9);
                assert_eq!(h1_m, 0);
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn ruling_section_thresholds() {
        // genus-18 curve 4h+7f on F_0: h0(t*f) = t+1 until t = 7, where it is 11
        let c = DivisorClass::hirzebruch(0, 4, 7);
        assert_eq!(scrollar_invariant(0, &c).unwrap(), (7, 11));
        // same genus and fiber degree moved to F_2 as 4h+11f: threshold at t = 5
        let c = DivisorClass::hirzebruch(2, 4, 11);
        assert_eq!(scrollar_invariant(2, &c).unwrap(), (5, 7));
        // fiber degree zero is out of domain
        let c = DivisorClass::hirzebruch(2, 0, 3);
        assert!(scrollar_invariant(2, &c).is_err());
    }

    #[test]
    fn ruling_probe_values() {
        // spot values behind the thresholds above
        let model = SurfaceModel::hirzebruch(0).unwrap();
        let c = DivisorClass::hirzebruch(0, 4, 7);
        let f = DivisorClass::hirzebruch(0, 0, 1);
        assert_eq!(h0_restricted(&model, &f.scale(6), &c).unwrap(), 7);
        assert_eq!(h0_restricted(&model, &f.scale(7), &c).unwrap(), 11);
    }

    #[test]
    fn elliptic_cone_section_counts() {
        // t = 1 recovers the ambient coordinates: the degree-5 cone spans P^5
        assert_eq!(h0_elliptic_cone(5, 1).unwrap(), 6);
        assert_eq!(h0_elliptic_cone(5, 3).unwrap(), 31);
        assert_eq!(h0_elliptic_cone(4, 0).unwrap(), 1);
        assert_eq!(h0_elliptic_cone(4, -2).unwrap(), 0);
        assert!(h0_elliptic_cone(2, 1).is_err());
    }
}

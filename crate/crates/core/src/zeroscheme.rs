//! Zero-dimensional schemes of fat points in the plane: exact vanishing
//! conditions, cohomology of ideal-sheaf twists, residual schemes with
//! respect to lines and conics, and the genus and pencil arithmetic of
//! singular plane models.
//!
//! Coordinates are exact rationals throughout, so every rank is certified
//! rather than estimated.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::binom2;
use crate::error::Error;
use crate::linalg::{qint, QMatrix};
use crate::Result;

/// A point of the projective plane with exact rational coordinates,
/// stored normalized so the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    coords: [BigRational; 3],
}

impl PlanePoint {
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Result<Self> {
        let coords = [x, y, z];
        let Some(lead) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(Error::ZeroPoint);
        };
        let scale = coords[lead].clone();
        let coords = coords.map(|c| c / &scale);
        Ok(PlanePoint { coords })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        PlanePoint::new(qint(x), qint(y), qint(z))
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    /// The standard affine chart this point is certainly visible in: the
    /// index of its leading coordinate.
    fn chart(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A point together with a vanishing order `m >= 1`: curves through it are
/// required to vanish to order `m`, which is `m(m+1)/2` linear conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPoint {
    pub point: PlanePoint,
    pub multiplicity: i64,
}

impl FatPoint {
    pub fn new(point: PlanePoint, multiplicity: i64) -> Result<Self> {
        if multiplicity < 1 {
            return Err(Error::Domain {
                what: "fat point",
                detail: format!("multiplicity {multiplicity} must be at least 1"),
            });
        }
        Ok(FatPoint {
            point,
            multiplicity,
        })
    }

    /// Degree of the fat-point subscheme.
    pub fn degree(&self) -> i64 {
        self.multiplicity * (self.multiplicity + 1) / 2
    }
}

/// A zero-dimensional scheme: fat points with pairwise distinct supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroScheme {
    points: Vec<FatPoint>,
}

impl ZeroScheme {
    pub fn new(points: Vec<FatPoint>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            for q in &points[i + 1..] {
                if p.point == q.point {
                    return Err(Error::DuplicateSupport {
                        point: p.point.to_string(),
                    });
                }
            }
        }
        Ok(ZeroScheme { points })
    }

    /// A reduced scheme: every listed point simple.
    pub fn simple(points: &[PlanePoint]) -> Result<Self> {
        let fat = points
            .iter()
            .map(|p| FatPoint::new(p.clone(), 1))
            .collect::<Result<Vec<_>>>()?;
        ZeroScheme::new(fat)
    }

    pub fn fat_points(&self) -> &[FatPoint] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.points.iter().map(FatPoint::degree).sum()
    }
}

/// The line `a*x + b*y + c*z = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LinearForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a == 0 && b == 0 && c == 0 {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { a, b, c })
    }

    pub fn evaluate(&self, p: &PlanePoint) -> BigRational {
        let [x, y, z] = p.coords();
        qint(self.a) * x + qint(self.b) * y + qint(self.c) * z
    }

    pub fn vanishes_at(&self, p: &PlanePoint) -> bool {
        self.evaluate(p).is_zero()
    }

    /// Whether the two forms cut the same line.
    pub fn proportional_to(&self, other: &LinearForm) -> bool {
        self.a * other.b == self.b * other.a
            && self.a * other.c == self.c * other.a
            && self.b * other.c == self.c * other.b
    }
}

/// The conic `xx*x^2 + yy*y^2 + zz*z^2 + xy*x*y + xz*x*z + yz*y*z = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticForm {
    pub xx: i64,
    pub yy: i64,
    pub zz: i64,
    pub xy: i64,
    pub xz: i64,
    pub yz: i64,
}

impl QuadraticForm {
    pub fn new(xx: i64, yy: i64, zz: i64, xy: i64, xz: i64, yz: i64) -> Result<Self> {
        if [xx, yy, zz, xy, xz, yz].iter().all(|&v| v == 0) {
            return Err(Error::ZeroForm);
        }
        Ok(QuadraticForm {
            xx,
            yy,
            zz,
            xy,
            xz,
            yz,
        })
    }

    pub fn evaluate(&self, p: &PlanePoint) -> BigRational {
        let [x, y, z] = p.coords();
        qint(self.xx) * x * x
            + qint(self.yy) * y * y
            + qint(self.zz) * z * z
            + qint(self.xy) * x * y
            + qint(self.xz) * x * z
            + qint(self.yz) * y * z
    }

    pub fn vanishes_at(&self, p: &PlanePoint) -> bool {
        self.evaluate(p).is_zero()
    }

    /// Singular exactly when the doubled Gram matrix has determinant zero.
    pub fn is_singular(&self) -> bool {
        let xx = i128::from(self.xx);
        let yy = i128::from(self.yy);
        let zz = i128::from(self.zz);
        let xy = i128::from(self.xy);
        let xz = i128::from(self.xz);
        let yz = i128::from(self.yz);
        let m = [[2 * xx, xy, xz], [xy, 2 * yy, yz], [xz, yz, 2 * zz]];
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        det == 0
    }
}

/// Degree-`t` monomials `x^b0 y^b1 z^b2` in a fixed order.
fn monomials(t: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for b0 in (0..=t).rev() {
        for b1 in (0..=t - b0).rev() {
            out.push([b0, b1, t - b0 - b1]);
        }
    }
    out
}

fn falling(base: i64, k: i64) -> i64 {
    let mut acc = 1;
    for i in 0..k {
        acc *= base - i;
    }
    acc
}

/// Rows imposing vanishing to order `m` at `p`, written in the affine
/// chart `coords[chart] = 1`: one row per pair of partial-derivative
/// orders `(i, j)` with `i + j < m`, applied to each monomial.
fn point_rows(p: &PlanePoint, m: i64, chart: usize, monos: &[[i64; 3]]) -> Vec<Vec<BigRational>> {
    let (u, v) = match chart {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let scale = &p.coords()[chart];
    let pu = &p.coords()[u] / scale;
    let pv = &p.coords()[v] / scale;
    let mut rows = Vec::new();
    for order in 0..m {
        for i in 0..=order {
            let j = order - i;
            let mut row = Vec::with_capacity(monos.len());
            for mono in monos {
                let bu = mono[u];
                let bv = mono[v];
                if bu < i || bv < j {
                    row.push(BigRational::zero());
                    continue;
                }
                let coeff = qint(falling(bu, i) * falling(bv, j));
                row.push(coeff * pu.pow((bu - i) as i32) * pv.pow((bv - j) as i32));
            }
            rows.push(row);
        }
    }
    rows
}

fn assemble(rows: Vec<Vec<BigRational>>, ncols: usize) -> QMatrix {
    let mut m = QMatrix::zeros(rows.len(), ncols);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

/// The matrix of vanishing conditions the scheme imposes on curves of
/// degree `t`: for each fat point of order `m`, all partial derivatives of
/// order below `m` in an affine chart containing the point. Rows number
/// `deg Z`, columns the degree-`t` monomials; only the rank matters and it
/// is chart-independent.
pub fn conditions_matrix(z: &ZeroScheme, t: i64) -> Result<QMatrix> {
    if t < 0 {
        return Err(Error::Domain {
            what: "conditions matrix",
            detail: format!("twist t = {t} must be nonnegative"),
        });
    }
    let monos = monomials(t);
    let mut rows = Vec::new();
    for fp in z.fat_points() {
        rows.extend(point_rows(
            &fp.point,
            fp.multiplicity,
            fp.point.chart(),
            &monos,
        ));
    }
    Ok(assemble(rows, monos.len()))
}

/// The same conditions written in one caller-chosen chart (0, 1, or 2 for
/// `x = 1`, `y = 1`, `z = 1`); every point of the scheme must have a
/// nonzero coordinate there. Exposed for chart-independence checks.
pub fn conditions_matrix_in_chart(z: &ZeroScheme, t: i64, chart: usize) -> Result<QMatrix> {
    if chart > 2 {
        return Err(Error::Domain {
            what: "conditions matrix",
            detail: format!("chart {chart} is not one of the three standard charts"),
        });
    }
    if t < 0 {
        return Err(Error::Domain {
            what: "conditions matrix",
            detail: format!("twist t = {t} must be nonnegative"),
        });
    }
    let monos = monomials(t);
    let mut rows = Vec::new();
    for fp in z.fat_points() {
        if fp.point.coords()[chart].is_zero() {
            return Err(Error::Domain {
                what: "conditions matrix",
                detail: format!("point {} is invisible in chart {chart}", fp.point),
            });
        }
        rows.extend(point_rows(&fp.point, fp.multiplicity, chart, &monos));
    }
    Ok(assemble(rows, monos.len()))
}

/// `(h^0, h^1)` of the ideal-sheaf twist `I_Z(t)` in the plane:
/// `h^0 = C(t+2, 2) - rank` and `h^1 = deg Z - rank` of the conditions
/// matrix. Negative twists have no sections and carry the full degree in
/// `h^1`.
pub fn h_ideal(z: &ZeroScheme, t: i64) -> (i64, i64) {
    if t < 0 {
        return (0, z.degree());
    }
    let monos = monomials(t);
    let mut rows = Vec::new();
    for fp in z.fat_points() {
        rows.extend(point_rows(
            &fp.point,
            fp.multiplicity,
            fp.point.chart(),
            &monos,
        ));
    }
    let rank = assemble(rows, monos.len()).rank() as i64;
    (binom2(t + 2) - rank, z.degree() - rank)
}

/// The residual of `Z` with respect to a line: orders drop by one on the
/// line and are unchanged off it.
pub fn residual_line(z: &ZeroScheme, l: &LinearForm) -> ZeroScheme {
    let points = z
        .fat_points()
        .iter()
        .filter_map(|fp| {
            let m = if l.vanishes_at(&fp.point) {
                fp.multiplicity - 1
            } else {
                fp.multiplicity
            };
            (m >= 1).then(|| FatPoint {
                point: fp.point.clone(),
                multiplicity: m,
            })
        })
        .collect();
    ZeroScheme { points }
}

/// Degree of the trace `Z ∩ L`: each point on the line contributes its
/// multiplicity, so `deg Z = deg(Z ∩ L) + deg(residual)`.
pub fn line_trace_degree(z: &ZeroScheme, l: &LinearForm) -> i64 {
    z.fat_points()
        .iter()
        .filter(|fp| l.vanishes_at(&fp.point))
        .map(|fp| fp.multiplicity)
        .sum()
}

/// The residual with respect to a smooth conic: orders drop by one on the
/// conic. Singular quadratic forms are rejected; a conic split into two
/// lines goes through [`residual_split_conic`] instead.
pub fn residual_conic(z: &ZeroScheme, q: &QuadraticForm) -> Result<ZeroScheme> {
    if q.is_singular() {
        return Err(Error::SingularConic);
    }
    let points = z
        .fat_points()
        .iter()
        .filter_map(|fp| {
            let m = if q.vanishes_at(&fp.point) {
                fp.multiplicity - 1
            } else {
                fp.multiplicity
            };
            (m >= 1).then(|| FatPoint {
                point: fp.point.clone(),
                multiplicity: m,
            })
        })
        .collect();
    Ok(ZeroScheme { points })
}

/// The residual with respect to a reduced conic split into two distinct
/// lines: residuation by one line after the other, so a point on both
/// lines loses two orders.
pub fn residual_split_conic(
    z: &ZeroScheme,
    l1: &LinearForm,
    l2: &LinearForm,
) -> Result<ZeroScheme> {
    if l1.proportional_to(l2) {
        return Err(Error::Domain {
            what: "split conic",
            detail: String::from("the two linear forms cut the same line; the conic must be reduced"),
        });
    }
    Ok(residual_line(&residual_line(z, l1), l2))
}

/// Geometric genus of a plane curve of degree `d` whose singularities are
/// ordinary points of the given multiplicities: `(d-1)(d-2)/2` less
/// `m(m-1)/2` per point.
pub fn plane_model_genus(d: i64, mults: &[i64]) -> Result<i64> {
    if d < 3 {
        return Err(Error::Domain {
            what: "plane model",
            detail: format!("degree d = {d} must be at least 3"),
        });
    }
    let mut genus = binom2(d - 1);
    for &m in mults {
        if m < 0 {
            return Err(Error::Domain {
                what: "plane model",
                detail: format!("multiplicity {m} must be nonnegative"),
            });
        }
        if m >= d {
            return Err(Error::MultiplicityTooLarge { m, degree: d });
        }
        genus -= binom2(m);
    }
    Ok(genus)
}

/// Degrees of the pencils cut on the normalization by lines through each
/// listed singular point (`d - m`), plus the pencil of conics through all
/// of them appended when exactly four points are listed (`2d - sum m`).
pub fn singular_point_pencils(d: i64, mults: &[i64]) -> Result<Vec<i64>> {
    if d < 3 {
        return Err(Error::Domain {
            what: "plane model",
            detail: format!("degree d = {d} must be at least 3"),
        });
    }
    let mut out = Vec::with_capacity(mults.len() + 1);
    for &m in mults {
        if m < 0 {
            return Err(Error::Domain {
                what: "plane model",
                detail: format!("multiplicity {m} must be nonnegative"),
            });
        }
        if m >= d {
            return Err(Error::MultiplicityTooLarge { m, degree: d });
        }
        out.push(d - m);
    }
    if mults.len() == 4 {
        out.push(2 * d - mults.iter().sum::<i64>());
    }
    Ok(out)
}

fn support_collinear(z: &ZeroScheme) -> bool {
    let mut m = QMatrix::zeros(z.fat_points().len(), 3);
    for (i, fp) in z.fat_points().iter().enumerate() {
        for j in 0..3 {
            m.set(i, j, fp.point.coords()[j].clone());
        }
    }
    m.rank() <= 2
}

/// For a degree-6 scheme: whether `h^1(I_Z(4)) > 0`, which happens exactly
/// when the scheme is six simple points on one line. Both the rank route
/// and the geometric containment route are computed and must agree.
pub fn collinearity_h1_criterion(z: &ZeroScheme) -> Result<bool> {
    let degree = z.degree();
    if degree != 6 {
        return Err(Error::WrongSchemeDegree {
            got: degree,
            want: 6,
        });
    }
    let (_, h1) = h_ideal(z, 4);
    let algebraic = h1 > 0;
    let all_simple = z.fat_points().iter().all(|fp| fp.multiplicity == 1);
    let geometric = all_simple && support_collinear(z);
    if algebraic != geometric {
        return Err(Error::Domain {
            what: "collinearity criterion",
            detail: format!(
                "rank route gives {algebraic}, containment route gives {geometric}"
            ),
        });
    }
    Ok(algebraic)
}

//! Divisor-class enumeration on the surfaces that carry low-degree space
//! curves, and the lattice-level obstructions to very ampleness.
//!
//! The enumerators answer "which classes of degree `d` and genus `g` live on
//! this surface": smooth rational normal scrolls, cones over rational and
//! elliptic normal curves (through their minimal desingularizations), and
//! del Pezzo surfaces (the plane blown up at `9 - r` points). The
//! obstruction tests detect the standard ways a restricted linear system
//! fails to embed a curve: a fixed component, a contracted `(-1)`-curve, or
//! a ruling fiber that maps to a multisecant line.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cohomology::h_line_bundle;
use crate::error::Error;
use crate::isqrt;
use crate::lattice::{neg_one_curves, DivisorClass, SurfaceModel};
use crate::Result;

/// A divisor class solving a degree/genus constraint on a concrete surface.
/// Degree and genus are recomputed from the lattice on construction, so a
/// stored solution always round-trips through the model's own arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSolution {
    pub surface: SurfaceModel,
    pub class: DivisorClass,
    pub degree: i64,
    pub genus: i64,
    /// Intersection with the contracted section, for classes on cone models:
    /// the multiplicity of the image curve at the vertex.
    pub vertex_multiplicity: Option<i64>,
}

impl ClassSolution {
    fn of(
        surface: SurfaceModel,
        class: DivisorClass,
        vertex_multiplicity: Option<i64>,
    ) -> Result<Self> {
        let degree = surface.degree(&class)?;
        let genus = surface.arithmetic_genus(&class)?;
        Ok(ClassSolution {
            surface,
            class,
            degree,
            genus,
            vertex_multiplicity,
        })
    }

    /// Degree of the pencil the ruling cuts on the curve (`C.f` on ruled
    /// models, `C.L` on scrolls); `None` where no ruling is singled out.
    pub fn ruling_degree(&self) -> Option<i64> {
        let fiber = match &self.class {
            DivisorClass::Hirzebruch { e, .. } => DivisorClass::hirzebruch(*e, 0, 1),
            DivisorClass::Scroll { r, .. } => DivisorClass::scroll(*r, 0, 1),
            _ => return None,
        };
        Some(self.class.intersect(&fiber).expect("fiber shares the lattice"))
    }

    /// Whether the image curve on the cone is smooth at the vertex
    /// (multiplicity at most one); `None` off cone models.
    pub fn smooth_at_vertex(&self) -> Option<bool> {
        self.vertex_multiplicity.map(|m| m <= 1)
    }
}

/// Integer roots of `qa*x^2 + qb*x + qc = 0` with `qa > 0`, ascending; a
/// double root is listed once.
fn quadratic_roots(qa: i64, qb: i64, qc: i64) -> Vec<i64> {
    debug_assert!(qa > 0);
    let disc = i128::from(qb) * i128::from(qb) - 4 * i128::from(qa) * i128::from(qc);
    if disc < 0 {
        return Vec::new();
    }
    let s = isqrt(disc);
    if s * s != disc {
        return Vec::new();
    }
    let den = 2 * i128::from(qa);
    let mut out = Vec::new();
    for num in [-i128::from(qb) - s, -i128::from(qb) + s] {
        if num % den == 0 {
            let root = (num / den) as i64;
            if out.last() != Some(&root) {
                out.push(root);
            }
        }
    }
    out
}

/// All classes `aH + bL` with `a >= 1` of degree `d` and genus `g` on the
/// smooth rational normal scroll in `P^r`. The degree constraint fixes
/// `b = d - (r-1)a`, and substituting into adjunction leaves a quadratic in
/// the ruling coordinate:
///
/// `(r-1)a^2 - (2d + r - 3)a + (2d + 2g - 2) = 0`.
///
/// An empty list means no integer solutions. Results are sorted by class;
/// each solution's [`ClassSolution::ruling_degree`] is `a`, the degree of
/// the pencil the ruling cuts on the curve.
pub fn scroll_classes(d: i64, g: i64, r: i64) -> Result<Vec<ClassSolution>> {
    let model = SurfaceModel::scroll(r)?;
    let mut out = Vec::new();
    for a in quadratic_roots(r - 1, -(2 * d + r - 3), 2 * d + 2 * g - 2) {
        if a < 1 {
            continue;
        }
        let class = DivisorClass::scroll(r, a, d - (r - 1) * a);
        let sol = ClassSolution::of(model.clone(), class, None)?;
        if sol.degree == d && sol.genus == g {
            out.push(sol);
        }
    }
    out.sort_by(|x, y| x.class.cmp(&y.class));
    Ok(out)
}

/// All strict-transform classes `kh + df` on the cone over the rational
/// normal curve of degree `r-1` in `P^r`: every `k >= 1` with vertex
/// multiplicity `m = d - (r-1)k >= 0`. Genus is adjunction on `F_{r-1}`;
/// the image curve is smooth on the cone exactly when `m <= 1` (missing the
/// vertex, or passing through it smoothly).
pub fn rational_cone_classes(d: i64, r: i64) -> Result<Vec<ClassSolution>> {
    let model = SurfaceModel::rational_cone(r)?;
    let e = r - 1;
    let section = DivisorClass::hirzebruch(e, 1, 0);
    let mut out = Vec::new();
    for k in 1..=(d / e).max(0) {
        let class = DivisorClass::hirzebruch(e, k, d);
        let m = class.intersect(&section)?;
        if m < 0 {
            continue;
        }
        out.push(ClassSolution::of(model.clone(), class, Some(m))?);
    }
    Ok(out)
}

/// All strict-transform classes `kh + df` on the cone over an elliptic
/// normal curve of degree `r` in `P^r`: every `k >= 2` with vertex
/// multiplicity `m = d - rk >= 0`, plus the section class `k = 1` when it
/// misses the vertex (`m = 0`); a `k = 1` class with `m > 0` is a section
/// plus fibers, not an irreducible curve. The genus `1 + (k-1)(2d - rk)/2`
/// is an integer for every listed `(k, m)` (either `k - 1` or `2d - rk` is
/// even), so no solution is ever skipped on integrality grounds.
pub fn elliptic_cone_classes(d: i64, r: i64) -> Result<Vec<ClassSolution>> {
    let model = SurfaceModel::elliptic_cone(r)?;
    let section = DivisorClass::hirzebruch(r, 1, 0);
    let mut out = Vec::new();
    for k in 1..=(d / r).max(0) {
        let class = DivisorClass::hirzebruch(r, k, d);
        let m = class.intersect(&section)?;
        if m < 0 || (k == 1 && m > 0) {
            continue;
        }
        out.push(ClassSolution::of(model.clone(), class, Some(m))?);
    }
    Ok(out)
}

fn floor_div(n: i128, d: i128) -> i128 {
    n.div_euclid(d)
}

fn ceil_div(n: i128, d: i128) -> i128 {
    -(-n).div_euclid(d)
}

/// Non-increasing vectors of length `parts` with the given entry sum and
/// sum of squares, entries in `0..=cap`.
fn nonincreasing_vectors(parts: usize, sum: i64, sumsq: i64, cap: i64) -> Vec<Vec<i64>> {
    fn fill(
        parts: usize,
        sum: i64,
        sumsq: i64,
        cap: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if parts == 0 {
            if sum == 0 && sumsq == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if sum < 0 || sumsq < 0 {
            return;
        }
        // the next entry is the largest remaining: at least the average,
        // at most the cap and whatever the square budget allows
        let lo = ceil_div(i128::from(sum), parts as i128).max(0) as i64;
        let hi = cap.min(sum).min(isqrt(i128::from(sumsq)) as i64);
        for v in lo..=hi {
            prefix.push(v);
            fill(parts - 1, sum - v, sumsq - v * v, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(parts, sum, sumsq, cap, &mut Vec::new(), &mut out);
    out
}

/// All classes `(a; b_1, ..., b_s)` on the plane blown up at `s = 9 - r`
/// points with anticanonical degree `3a - sum(b_i) = d` and genus in
/// `[g_lo, g_hi]`, subject to `a >= 1` and `b_1 >= ... >= b_s >= 0`.
///
/// For a fixed genus `g` the two constraints pin `sum(b_i) = 3a - d` and
/// `sum(b_i^2) = a^2 - (2g - 2 + d)`, and the Cauchy-Schwarz inequality
/// `(sum b_i)^2 <= s * sum(b_i^2)` confines `a` to the window where
/// `(9-s)a^2 - 6da + d^2 + s(2g - 2 + d) <= 0`. Every nonnegative
/// coefficient vector satisfies the inequality, so scanning that window is
/// exhaustive. Results are sorted by class coefficients.
pub fn del_pezzo_classes(d: i64, g_lo: i64, g_hi: i64, r: i64) -> Result<Vec<ClassSolution>> {
    if !(4..=8).contains(&r) {
        return Err(Error::Domain {
            what: "del Pezzo class search",
            detail: format!("r = {r} must be between 4 and 8"),
        });
    }
    let s = (9 - r) as usize;
    let model = SurfaceModel::blown_plane(s)?;
    let mut out = Vec::new();
    for g in g_lo..=g_hi {
        let qa = 9 - s as i64;
        let qb = -6 * d;
        let qc = d * d + (s as i64) * (2 * g - 2 + d);
        let disc = i128::from(qb) * i128::from(qb) - 4 * i128::from(qa) * i128::from(qc);
        if disc < 0 {
            continue;
        }
        let sq = isqrt(disc);
        // pad the rounded window by one on each side and filter exactly
        let lo = ceil_div(-i128::from(qb) - sq, 2 * i128::from(qa)) as i64 - 1;
        let hi = floor_div(-i128::from(qb) + sq, 2 * i128::from(qa)) as i64 + 1;
        for a in lo.max(1)..=hi {
            if qa * a * a + qb * a + qc > 0 {
                continue;
            }
            let sum = 3 * a - d;
            let sumsq = a * a - (2 * g - 2 + d);
            if sum < 0 || sumsq < 0 {
                continue;
            }
            for b in nonincreasing_vectors(s, sum, sumsq, sum) {
                let class = DivisorClass::Blowup { a, b };
                out.push(ClassSolution::of(model.clone(), class, None)?);
            }
        }
    }
    out.sort_by(|x, y| x.class.cmp(&y.class));
    Ok(out)
}

/// Split a class on `F_e` into its fixed divisor and moving part, by
/// repeatedly stripping a copy of `h` (then `f`) while `h^0` is unchanged.
/// The returned moving part has no fixed component, though it may still
/// have isolated base points. Requires `h^0(c) >= 1`.
pub fn fixed_part(e: i64, c: &DivisorClass) -> Result<(DivisorClass, DivisorClass)> {
    let model = SurfaceModel::hirzebruch(e)?;
    model.check_class(c)?;
    let total = h_line_bundle(&model, c)?.h0;
    if total < 1 {
        return Err(Error::EmptySystem {
            class: c.to_string(),
        });
    }
    let section = DivisorClass::hirzebruch(e, 1, 0);
    let fiber = DivisorClass::hirzebruch(e, 0, 1);
    let mut fixed = c.zero_like();
    let mut moving = c.clone();
    'strip: loop {
        for part in [&section, &fiber] {
            let stripped = moving.try_sub(part)?;
            if h_line_bundle(&model, &stripped)?.h0 == total {
                fixed = fixed.try_add(part)?;
                moving = stripped;
                continue 'strip;
            }
        }
        return Ok((fixed, moving));
    }
}

/// How a restricted linear system can fail to embed a curve, at the level
/// of lattice arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionStatus {
    /// None of the tracked obstructions fire. This does not certify very
    /// ampleness; it only reports that the lattice sees no contracted
    /// curve, fixed component, or multisecant fiber.
    VeryAmpleCandidate,
    /// The system pairs negatively with an effective class, which is then
    /// part of its base locus.
    FixedComponent,
    /// A `(-1)`-curve meeting the curve at least twice is contracted to a
    /// point, so the image acquires a singularity.
    ContractedCurve,
    /// A ruling fiber maps to a line meeting the image curve in three or
    /// more points.
    MultisecantFiber,
}

/// Verdict of an obstruction scan: the status, the witness class it fires
/// on (absent for a candidate), and a short explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub status: ObstructionStatus,
    pub witness: Option<DivisorClass>,
    pub detail: String,
}

impl ObstructionVerdict {
    fn candidate(detail: String) -> Self {
        ObstructionVerdict {
            status: ObstructionStatus::VeryAmpleCandidate,
            witness: None,
            detail,
        }
    }
}

/// Scan the `(-1)`-curves on the plane blown up at `s` points for
/// obstructions to `M` embedding a curve of class `C`: a curve `E` with
/// `M.E = 0` and `C.E >= 2` is contracted to a singular point of the image
/// (reported first, in the index order of [`neg_one_curves`]); failing
/// that, a curve with `M.E < 0` is a fixed component of `|M|`.
pub fn contraction_obstruction(
    s: usize,
    c: &DivisorClass,
    m: &DivisorClass,
) -> Result<ObstructionVerdict> {
    let curves = neg_one_curves(s)?;
    let model = SurfaceModel::blown_plane(s)?;
    model.check_class(c)?;
    model.check_class(m)?;
    for e in &curves {
        let me = m.intersect(e)?;
        let ce = c.intersect(e)?;
        if me == 0 && ce >= 2 {
            return Ok(ObstructionVerdict {
                status: ObstructionStatus::ContractedCurve,
                witness: Some(e.clone()),
                detail: format!(
                    "{m} contracts {e} while the curve meets it in {ce} points"
                ),
            });
        }
    }
    for e in &curves {
        let me = m.intersect(e)?;
        if me < 0 {
            return Ok(ObstructionVerdict {
                status: ObstructionStatus::FixedComponent,
                witness: Some(e.clone()),
                detail: format!("{m} pairs with {e} in {me} < 0"),
            });
        }
    }
    Ok(ObstructionVerdict::candidate(format!(
        "no tracked (-1)-curve is contracted by {m} or fixed in it"
    )))
}

/// Check whether the ruling of `F_e` turns into multisecant lines under
/// `M`: when `M.f = 1` each fiber maps to a line, and if the curve class
/// `C` meets fibers in three or more points those lines are multisecants,
/// so `M` restricted to the curve cannot be very ample.
pub fn multisecant_fiber_check(
    e: i64,
    c: &DivisorClass,
    m: &DivisorClass,
) -> Result<ObstructionVerdict> {
    let model = SurfaceModel::hirzebruch(e)?;
    model.check_class(c)?;
    model.check_class(m)?;
    let fiber = DivisorClass::hirzebruch(e, 0, 1);
    let mf = m.intersect(&fiber)?;
    let cf = c.intersect(&fiber)?;
    if mf == 1 && cf >= 3 {
        Ok(ObstructionVerdict {
            status: ObstructionStatus::MultisecantFiber,
            witness: Some(fiber),
            detail: format!(
                "fibers map to lines meeting the image curve in {cf} points"
            ),
        })
    } else {
        Ok(ObstructionVerdict::candidate(format!(
            "fibers map with degree {mf} and meet the curve in {cf} points"
        )))
    }
}

//! Picard lattices of the supported surface models.
//!
//! Four lattices are supported, and each class carries its lattice as part of
//! the value:
//!
//! * Hirzebruch surface `F_e`: classes `a*h + b*f` with `h^2 = -e`,
//!   `h.f = 1`, `f^2 = 0`, canonical class `-2h - (e+2)f`.
//! * Quadric `P^1 x P^1`: bidegrees `(a, b)` with
//!   `(a1,b1).(a2,b2) = a1*b2 + a2*b1`, canonical `(-2,-2)`.
//! * Plane blown up at `s` points: classes `(a; b_1, ..., b_s)` meaning
//!   `a*l - sum b_i e_i`, pairing `a*a' - sum b_i b'_i`, canonical
//!   `(-3; -1, ..., -1)`.
//! * Rational normal scroll in `P^r`: classes `a*H + b*L` with
//!   `H^2 = r-1`, `H.L = 1`, `L.L = 0`, canonical `-2H + (r-3)L`, hyperplane
//!   degree `(r-1)a + b`. These scroll conventions are reconstructed from the
//!   pinned examples (no citable normal form); `scroll_to_hirzebruch` and its
//!   pairing-preservation property are the consistency witnesses.
//!
//! Cones enter through their minimal desingularizations: the cone over a
//! rational normal curve of degree `r-1` uses the `F_{r-1}` lattice, and the
//! elliptic cone over a degree-`r` elliptic curve uses a lattice with the
//! same pairing as `F_r` (its canonical class, `-2h - rf`, differs and lives
//! on the surface model, not the lattice).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::Result;

/// A divisor class on one of the supported lattices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DivisorClass {
    /// `a*h + b*f` on a lattice with `h^2 = -e` (Hirzebruch `F_e`, and the
    /// strict-transform lattices of rational and elliptic cones).
    Hirzebruch { e: i64, a: i64, b: i64 },
    /// Bidegree `(a, b)` on `P^1 x P^1`.
    Quadric { a: i64, b: i64 },
    /// `(a; b_1, ..., b_s)` on the plane blown up at `s` points.
    Blowup { a: i64, b: Vec<i64> },
    /// `a*H + b*L` on a rational normal scroll in `P^r`, `r >= 3`.
    Scroll { r: i64, a: i64, b: i64 },
}

impl DivisorClass {
    pub fn hirzebruch(e: i64, a: i64, b: i64) -> Self {
        DivisorClass::Hirzebruch { e, a, b }
    }

    pub fn quadric(a: i64, b: i64) -> Self {
        DivisorClass::Quadric { a, b }
    }

    pub fn blowup(a: i64, b: &[i64]) -> Self {
        DivisorClass::Blowup { a, b: b.to_vec() }
    }

    pub fn scroll(r: i64, a: i64, b: i64) -> Self {
        DivisorClass::Scroll { r, a, b }
    }

    /// Short name of the lattice a class lives on, for diagnostics.
    pub fn lattice_name(&self) -> String {
        match self {
            DivisorClass::Hirzebruch { e, .. } => format!("F[{e}]"),
            DivisorClass::Quadric { .. } => "Q".to_string(),
            DivisorClass::Blowup { b, .. } => format!("BP[{}]", b.len()),
            DivisorClass::Scroll { r, .. } => format!("Scroll[{r}]"),
        }
    }

    fn same_lattice(&self, other: &Self) -> bool {
        match (self, other) {
            (DivisorClass::Hirzebruch { e: e1, .. }, DivisorClass::Hirzebruch { e: e2, .. }) => {
                e1 == e2
            }
            (DivisorClass::Quadric { .. }, DivisorClass::Quadric { .. }) => true,
            (DivisorClass::Blowup { b: b1, .. }, DivisorClass::Blowup { b: b2, .. }) => {
                b1.len() == b2.len()
            }
            (DivisorClass::Scroll { r: r1, .. }, DivisorClass::Scroll { r: r2, .. }) => r1 == r2,
            _ => false,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::LatticeMismatch {
            left: self.lattice_name(),
            right: other.lattice_name(),
        }
    }

    /// Intersection number. Classes must live on the same lattice; the zero
    /// class of each lattice is a legal input.
    pub fn intersect(&self, other: &Self) -> Result<i64> {
        if !self.same_lattice(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (
                DivisorClass::Hirzebruch { e, a: a1, b: b1 },
                DivisorClass::Hirzebruch { a: a2, b: b2, .. },
            ) => -e * a1 * a2 + a1 * b2 + a2 * b1,
            (DivisorClass::Quadric { a: a1, b: b1 }, DivisorClass::Quadric { a: a2, b: b2 }) => {
                a1 * b2 + a2 * b1
            }
            (DivisorClass::Blowup { a: a1, b: b1 }, DivisorClass::Blowup { a: a2, b: b2 }) => {
                a1 * a2 - b1.iter().zip(b2).map(|(x, y)| x * y).sum::<i64>()
            }
            (
                DivisorClass::Scroll { r, a: a1, b: b1 },
                DivisorClass::Scroll { a: a2, b: b2, .. },
            ) => (r - 1) * a1 * a2 + a1 * b2 + a2 * b1,
            _ => unreachable!("same_lattice holds"),
        })
    }

    /// Self-intersection.
    pub fn self_intersect(&self) -> i64 {
        self.intersect(self).expect("same lattice")
    }

    /// Component-wise sum; lattices must match.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_lattice(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (
                DivisorClass::Hirzebruch { e, a: a1, b: b1 },
                DivisorClass::Hirzebruch { a: a2, b: b2, .. },
            ) => DivisorClass::Hirzebruch {
                e: *e,
                a: a1 + a2,
                b: b1 + b2,
            },
            (DivisorClass::Quadric { a: a1, b: b1 }, DivisorClass::Quadric { a: a2, b: b2 }) => {
                DivisorClass::Quadric {
                    a: a1 + a2,
                    b: b1 + b2,
                }
            }
            (DivisorClass::Blowup { a: a1, b: b1 }, DivisorClass::Blowup { a: a2, b: b2 }) => {
                DivisorClass::Blowup {
                    a: a1 + a2,
                    b: b1.iter().zip(b2).map(|(x, y)| x + y).collect(),
                }
            }
            (
                DivisorClass::Scroll { r, a: a1, b: b1 },
                DivisorClass::Scroll { a: a2, b: b2, .. },
            ) => DivisorClass::Scroll {
                r: *r,
                a: a1 + a2,
                b: b1 + b2,
            },
            _ => unreachable!("same_lattice holds"),
        })
    }

    /// Component-wise difference; lattices must match.
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(-1))
    }

    /// Scalar multiple.
    pub fn scale(&self, k: i64) -> Self {
        match self {
            DivisorClass::Hirzebruch { e, a, b } => DivisorClass::Hirzebruch {
                e: *e,
                a: k * a,
                b: k * b,
            },
            DivisorClass::Quadric { a, b } => DivisorClass::Quadric { a: k * a, b: k * b },
            DivisorClass::Blowup { a, b } => DivisorClass::Blowup {
                a: k * a,
                b: b.iter().map(|x| k * x).collect(),
            },
            DivisorClass::Scroll { r, a, b } => DivisorClass::Scroll {
                r: *r,
                a: k * a,
                b: k * b,
            },
        }
    }

    /// Zero class of the same lattice.
    pub fn zero_like(&self) -> Self {
        self.scale(0)
    }

    /// Run-length compact form for blown-plane classes, e.g. `(9;3^4)`;
    /// other lattices fall back to [`fmt::Display`].
    pub fn compact(&self) -> String {
        match self {
            DivisorClass::Blowup { a, b } => {
                let mut parts: Vec<String> = Vec::new();
                let mut i = 0;
                while i < b.len() {
                    let mut j = i;
                    while j < b.len() && b[j] == b[i] {
                        j += 1;
                    }
                    let run = j - i;
                    if run == 1 {
                        parts.push(format!("{}", b[i]));
                    } else {
                        parts.push(format!("{}^{}", b[i], run));
                    }
                    i = j;
                }
                format!("({a};{})", parts.join(","))
            }
            _ => self.to_string(),
        }
    }
}

fn fmt_pair(f: &mut fmt::Formatter<'_>, a: i64, x: &str, b: i64, y: &str) -> fmt::Result {
    if b < 0 {
        write!(f, "{a}*{x}-{}*{y}", -b)
    } else {
        write!(f, "{a}*{x}+{b}*{y}")
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorClass::Hirzebruch { e, a, b } => {
                write!(f, "F[{e}]:")?;
                fmt_pair(f, *a, "h", *b, "f")
            }
            DivisorClass::Quadric { a, b } => write!(f, "Q:({a},{b})"),
            DivisorClass::Blowup { a, b } => {
                let coords: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                write!(f, "BP[{}]:({a};{})", b.len(), coords.join(","))
            }
            DivisorClass::Scroll { r, a, b } => {
                write!(f, "Scroll[{r}]:(")?;
                fmt_pair(f, *a, "H", *b, "L")?;
                write!(f, ")")
            }
        }
    }
}

fn parse_err(input: &str, reason: &'static str) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason,
    }
}

fn parse_i64(s: &str, whole: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| parse_err(whole, "expected an integer"))
}

/// Parse `a*X+b*Y` / `a*X-b*Y` with the given variable letters.
fn parse_linear(body: &str, x: &str, y: &str, whole: &str) -> Result<(i64, i64)> {
    let body = body.trim();
    let star_x = format!("*{x}");
    let star_y = format!("*{y}");
    let ax_end = body
        .find(&star_x)
        .ok_or_else(|| parse_err(whole, "missing h/H term"))?;
    let a = parse_i64(&body[..ax_end], whole)?;
    let rest = &body[ax_end + star_x.len()..];
    let rest = rest.trim();
    let (sign, rest) = if let Some(r) = rest.strip_prefix('+') {
        (1, r)
    } else if let Some(r) = rest.strip_prefix('-') {
        (-1, r)
    } else {
        return Err(parse_err(whole, "expected + or - between terms"));
    };
    let by_end = rest
        .find(&star_y)
        .ok_or_else(|| parse_err(whole, "missing f/L term"))?;
    if !rest[by_end + star_y.len()..].trim().is_empty() {
        return Err(parse_err(whole, "trailing characters"));
    }
    let b = parse_i64(&rest[..by_end], whole)?;
    Ok((a, sign * b))
}

/// Parse a multiplicity list allowing run-length entries like `3^4`.
fn parse_multiplicities(s: &str, whole: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    if s.trim().is_empty() {
        return Ok(out);
    }
    for chunk in s.split(',') {
        match chunk.split_once('^') {
            Some((v, n)) => {
                let v = parse_i64(v, whole)?;
                let n = parse_i64(n, whole)?;
                if !(1..=8).contains(&n) {
                    return Err(parse_err(whole, "run length out of range 1..=8"));
                }
                for _ in 0..n {
                    out.push(v);
                }
            }
            None => out.push(parse_i64(chunk, whole)?),
        }
    }
    Ok(out)
}

impl FromStr for DivisorClass {
    type Err = Error;

    /// Accepts the canonical text forms `F[e]:a*h+b*f`, `Q:(a,b)`,
    /// `BP[s]:(a;b1,...,bs)` (run-length `b^k` entries allowed),
    /// and `Scroll[r]:(a*H+b*L)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("F[") {
            let (e, body) = rest
                .split_once("]:")
                .ok_or_else(|| parse_err(s, "expected F[e]:..."))?;
            let e = parse_i64(e, s)?;
            if e < 0 {
                return Err(parse_err(s, "e must be nonnegative"));
            }
            let (a, b) = parse_linear(body, "h", "f", s)?;
            Ok(DivisorClass::Hirzebruch { e, a, b })
        } else if let Some(rest) = t.strip_prefix("Q:(") {
            let body = rest
                .strip_suffix(')')
                .ok_or_else(|| parse_err(s, "missing closing parenthesis"))?;
            let (a, b) = body
                .split_once(',')
                .ok_or_else(|| parse_err(s, "expected Q:(a,b)"))?;
            Ok(DivisorClass::Quadric {
                a: parse_i64(a, s)?,
                b: parse_i64(b, s)?,
            })
        } else if let Some(rest) = t.strip_prefix("BP[") {
            let (sn, body) = rest
                .split_once("]:(")
                .ok_or_else(|| parse_err(s, "expected BP[s]:(...)"))?;
            let sn = parse_i64(sn, s)? as usize;
            let body = body
                .strip_suffix(')')
                .ok_or_else(|| parse_err(s, "missing closing parenthesis"))?;
            let (a, ms) = body
                .split_once(';')
                .ok_or_else(|| parse_err(s, "expected (a;b1,...)"))?;
            let b = parse_multiplicities(ms, s)?;
            if b.len() != sn {
                return Err(parse_err(s, "declared point count does not match list"));
            }
            Ok(DivisorClass::Blowup {
                a: parse_i64(a, s)?,
                b,
            })
        } else if let Some(rest) = t.strip_prefix("Scroll[") {
            let (r, body) = rest
                .split_once("]:(")
                .ok_or_else(|| parse_err(s, "expected Scroll[r]:(...)"))?;
            let body = body
                .strip_suffix(')')
                .ok_or_else(|| parse_err(s, "missing closing parenthesis"))?;
            let r = parse_i64(r, s)?;
            if r < 3 {
                return Err(parse_err(s, "scroll needs r >= 3"));
            }
            let (a, b) = parse_linear(body, "H", "L", s)?;
            Ok(DivisorClass::Scroll { r, a, b })
        } else {
            Err(parse_err(s, "unknown lattice prefix"))
        }
    }
}

/// Which surface a [`SurfaceModel`] describes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    /// The Hirzebruch surface `F_e`.
    Hirzebruch { e: i64 },
    /// The smooth quadric `P^1 x P^1`.
    Quadric,
    /// The plane blown up at `s` general points (anticanonical del Pezzo
    /// model for `s <= 6`).
    BlownPlane { s: usize },
    /// Minimal desingularization `F_{r-1}` of the cone over a rational
    /// normal curve of degree `r-1` in `P^r`.
    RationalCone { r: i64 },
    /// Minimal desingularization of the cone over a plane-section elliptic
    /// curve of degree `r` in `P^r`.
    EllipticCone { r: i64 },
    /// A smooth rational normal scroll in `P^r`, carried abstractly on the
    /// scroll lattice (specialize with `scroll_to_hirzebruch`).
    Scroll { r: i64 },
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Hirzebruch { e } => write!(f, "F[{e}]"),
            SurfaceKind::Quadric => write!(f, "quadric"),
            SurfaceKind::BlownPlane { s } => write!(f, "blown-plane[{s}]"),
            SurfaceKind::RationalCone { r } => write!(f, "rational-cone[{r}]"),
            SurfaceKind::EllipticCone { r } => write!(f, "elliptic-cone[{r}]"),
            SurfaceKind::Scroll { r } => write!(f, "scroll[{r}]"),
        }
    }
}

/// A surface together with the data adjunction and degree computations need:
/// its canonical class, an optional embedding class, and the dimension of its
/// automorphism group where one is on record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    pub kind: SurfaceKind,
    pub canonical: DivisorClass,
    pub embedding: Option<DivisorClass>,
    pub aut_dim: Option<i64>,
}

impl SurfaceModel {
    /// Abstract `F_e` (no preferred embedding).
    pub fn hirzebruch(e: i64) -> Result<Self> {
        if e < 0 {
            return Err(Error::Domain {
                what: "hirzebruch model",
                detail: format!("e = {e} must be nonnegative"),
            });
        }
        Ok(SurfaceModel {
            kind: SurfaceKind::Hirzebruch { e },
            canonical: DivisorClass::hirzebruch(e, -2, -(e + 2)),
            embedding: None,
            aut_dim: Some(if e == 0 { 6 } else { e + 5 }),
        })
    }

    /// The quadric surface.
    pub fn quadric() -> Self {
        SurfaceModel {
            kind: SurfaceKind::Quadric,
            canonical: DivisorClass::quadric(-2, -2),
            embedding: None,
            aut_dim: Some(6),
        }
    }

    /// Plane blown up at `s <= 8` general points, embedded anticanonically
    /// when that makes sense (`s <= 6`).
    pub fn blown_plane(s: usize) -> Result<Self> {
        if s > 8 {
            return Err(Error::UnsupportedPointCount { s, max: 8 });
        }
        let ones = vec![1i64; s];
        let minus_ones = vec![-1i64; s];
        Ok(SurfaceModel {
            kind: SurfaceKind::BlownPlane { s },
            canonical: DivisorClass::Blowup {
                a: -3,
                b: minus_ones,
            },
            embedding: if s <= 6 {
                Some(DivisorClass::Blowup { a: 3, b: ones })
            } else {
                None
            },
            aut_dim: Some((8 - 2 * s as i64).max(0)),
        })
    }

    /// Strict-transform model `F_{r-1}` of the rational-normal-curve cone in
    /// `P^r`; the embedding class `h + (r-1)f` contracts the negative section
    /// to the vertex.
    pub fn rational_cone(r: i64) -> Result<Self> {
        if r < 3 {
            return Err(Error::Domain {
                what: "rational cone",
                detail: format!("r = {r} must be at least 3"),
            });
        }
        let e = r - 1;
        Ok(SurfaceModel {
            kind: SurfaceKind::RationalCone { r },
            canonical: DivisorClass::hirzebruch(e, -2, -(e + 2)),
            embedding: Some(DivisorClass::hirzebruch(e, 1, r - 1)),
            aut_dim: Some(e + 5),
        })
    }

    /// Strict-transform model of the elliptic cone in `P^r`: the lattice
    /// pairing matches `F_r`, but the canonical class is `-2h - rf` (the base
    /// curve has genus one) and no automorphism dimension is on record.
    pub fn elliptic_cone(r: i64) -> Result<Self> {
        if r < 3 {
            return Err(Error::Domain {
                what: "elliptic cone",
                detail: format!("r = {r} must be at least 3"),
            });
        }
        Ok(SurfaceModel {
            kind: SurfaceKind::EllipticCone { r },
            canonical: DivisorClass::hirzebruch(r, -2, -r),
            embedding: Some(DivisorClass::hirzebruch(r, 1, r)),
            aut_dim: None,
        })
    }

    /// Smooth rational normal scroll in `P^r` on the abstract scroll lattice.
    pub fn scroll(r: i64) -> Result<Self> {
        if r < 3 {
            return Err(Error::Domain {
                what: "scroll",
                detail: format!("r = {r} must be at least 3"),
            });
        }
        Ok(SurfaceModel {
            kind: SurfaceKind::Scroll { r },
            canonical: DivisorClass::scroll(r, -2, r - 3),
            embedding: Some(DivisorClass::scroll(r, 1, 0)),
            aut_dim: None,
        })
    }

    /// Check that `c` lives on this surface's lattice.
    pub fn check_class(&self, c: &DivisorClass) -> Result<()> {
        let ok = match (&self.kind, c) {
            (SurfaceKind::Hirzebruch { e }, DivisorClass::Hirzebruch { e: ce, .. }) => e == ce,
            (SurfaceKind::RationalCone { r }, DivisorClass::Hirzebruch { e: ce, .. }) => {
                *ce == r - 1
            }
            (SurfaceKind::EllipticCone { r }, DivisorClass::Hirzebruch { e: ce, .. }) => ce == r,
            (SurfaceKind::Quadric, DivisorClass::Quadric { .. }) => true,
            (SurfaceKind::BlownPlane { s }, DivisorClass::Blowup { b, .. }) => b.len() == *s,
            (SurfaceKind::Scroll { r }, DivisorClass::Scroll { r: cr, .. }) => r == cr,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::WrongLattice {
                surface: self.kind.to_string(),
                class: c.to_string(),
            })
        }
    }

    /// Arithmetic genus of a curve in class `c` by adjunction:
    /// `p_a = 1 + (C.C + C.K)/2`. The zero class gives the formal value 1.
    pub fn arithmetic_genus(&self, c: &DivisorClass) -> Result<i64> {
        self.check_class(c)?;
        let n = c.self_intersect() + c.intersect(&self.canonical)?;
        if n.rem_euclid(2) != 0 {
            return Err(Error::NonIntegralGenus {
                class: c.to_string(),
                pairing: n,
            });
        }
        Ok(1 + n / 2)
    }

    /// Degree of a curve in class `c` under this model's embedding.
    pub fn degree(&self, c: &DivisorClass) -> Result<i64> {
        self.check_class(c)?;
        match &self.embedding {
            Some(h) => c.intersect(h),
            None => Err(Error::MissingEmbedding {
                surface: self.kind.to_string(),
            }),
        }
    }
}

/// All classes `E` with `E^2 = E.K = -1` on the plane blown up at
/// `1 <= s <= 5` general points: the exceptional classes `e_i` (by index),
/// then the lines `l - e_i - e_j` (by index pair), and for `s = 5` the conic
/// `2l - e_1 - ... - e_5` last. The index order is deterministic and is what
/// obstruction scans report witnesses in.
pub fn neg_one_curves(s: usize) -> Result<Vec<DivisorClass>> {
    if !(1..=5).contains(&s) {
        return Err(Error::UnsupportedPointCount { s, max: 5 });
    }
    let mut out = Vec::new();
    for i in 0..s {
        let mut b = vec![0i64; s];
        b[i] = -1;
        out.push(DivisorClass::Blowup { a: 0, b });
    }
    for i in 0..s {
        for j in (i + 1)..s {
            let mut b = vec![0i64; s];
            b[i] = 1;
            b[j] = 1;
            out.push(DivisorClass::Blowup { a: 1, b });
        }
    }
    if s == 5 {
        out.push(DivisorClass::Blowup {
            a: 2,
            b: vec![1; 5],
        });
    }
    Ok(out)
}

/// Rewrite a scroll class `aH + bL` on the `F_e` model of the same scroll:
/// `H = h + ((r-1+e)/2) f`, `L = f`. Requires `e >= 0`,
/// `e === r-1 (mod 2)`, and `(r-1+e)/2 >= e` (so `H` stays very ample).
pub fn scroll_to_hirzebruch(c: &DivisorClass, e: i64) -> Result<DivisorClass> {
    let (r, a, b) = match c {
        DivisorClass::Scroll { r, a, b } => (*r, *a, *b),
        _ => {
            return Err(Error::WrongLattice {
                surface: format!("F[{e}] scroll model"),
                class: c.to_string(),
            })
        }
    };
    if e < 0 {
        return Err(Error::ScrollModelInvalid {
            r,
            e,
            reason: "e must be nonnegative",
        });
    }
    if (r - 1 + e) % 2 != 0 {
        return Err(Error::ScrollModelInvalid {
            r,
            e,
            reason: "parity: e must be congruent to r-1 mod 2",
        });
    }
    let c0 = (r - 1 + e) / 2;
    if c0 < e {
        return Err(Error::ScrollModelInvalid {
            r,
            e,
            reason: "H = h + ((r-1+e)/2)f is not very ample for this e",
        });
    }
    Ok(DivisorClass::hirzebruch(e, a, a * c0 + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(a: i64, b: &[i64]) -> DivisorClass {
        DivisorClass::blowup(a, b)
    }

    #[test]
    fn pairing_spot_values() {
        // (2;1^5).(5;2^5) = 0
        let e = bp(2, &[1, 1, 1, 1, 1]);
        let c = bp(5, &[2, 2, 2, 2, 2]);
        assert_eq!(e.intersect(&c).unwrap(), 0);
        // (4h+13f).(h+3f) on F_3 = 13
        let x = DivisorClass::hirzebruch(3, 4, 13);
        let h = DivisorClass::hirzebruch(3, 1, 3);
        assert_eq!(x.intersect(&h).unwrap(), 13);
        // zero class pairs to zero with anything on its lattice
        let z = x.zero_like();
        assert_eq!(z.intersect(&x).unwrap(), 0);
        // quadric pairing
        let q1 = DivisorClass::quadric(3, 9);
        let q2 = DivisorClass::quadric(0, 1);
        assert_eq!(q1.intersect(&q2).unwrap(), 3);
    }

    #[test]
    fn pairing_rejects_lattice_mismatch() {
        let x = DivisorClass::hirzebruch(2, 1, 0);
        let y = DivisorClass::hirzebruch(3, 1, 0);
        let err = x.intersect(&y).unwrap_err();
        match err {
            Error::LatticeMismatch { left, right } => {
                assert_eq!(left, "F[2]");
                assert_eq!(right, "F[3]");
            }
            other => panic!("unexpected error {other:?}"),
        }
        let q = DivisorClass::quadric(1, 1);
        assert!(x.intersect(&q).is_err());
        let b4 = bp(1, &[1, 0, 0, 0]);
        let b5 = bp(1, &[1, 0, 0, 0, 0]);
        assert!(b4.intersect(&b5).is_err());
    }

    #[test]
    fn genus_spot_values() {
        // 4h+13f on the F_3 cone model: p_a = 18
        let cone = SurfaceModel::rational_cone(4).unwrap();
        let c = DivisorClass::hirzebruch(3, 4, 13);
        assert_eq!(cone.arithmetic_genus(&c).unwrap(), 18);
        // (9;3^4) on the blown plane: p_a = 16
        let dp = SurfaceModel::blown_plane(4).unwrap();
        let c = bp(9, &[3, 3, 3, 3]);
        assert_eq!(dp.arithmetic_genus(&c).unwrap(), 16);
        // zero class on F_0: formal value 1
        let f0 = SurfaceModel::hirzebruch(0).unwrap();
        assert_eq!(
            f0.arithmetic_genus(&DivisorClass::hirzebruch(0, 0, 0)).unwrap(),
            1
        );
        // a fiber line on the scroll is rational
        let sc = SurfaceModel::scroll(4).unwrap();
        let l = DivisorClass::scroll(4, 0, 1);
        assert_eq!(sc.arithmetic_genus(&l).unwrap(), 0);
        // genuine canonical classes always make C.(C+K) even, so the
        // parity guard can only fire on a model assembled with a wrong
        // canonical class
        let skewed = SurfaceModel {
            canonical: DivisorClass::hirzebruch(0, -2, -3),
            ..SurfaceModel::hirzebruch(0).unwrap()
        };
        let h = DivisorClass::hirzebruch(0, 1, 0);
        assert!(matches!(
            skewed.arithmetic_genus(&h),
            Err(Error::NonIntegralGenus { pairing: -3, .. })
        ));
    }

    #[test]
    fn genus_elliptic_cone_matches_cover_formula() {
        // On the elliptic cone over a degree-r curve, adjunction with
        // K = -2h - rf reproduces (k-1)(d - kr/2) + 1.
        for r in 3..=6i64 {
            let model = SurfaceModel::elliptic_cone(r).unwrap();
            for k in 1..=5i64 {
                for d in (r * k)..(r * k + 12) {
                    let c = DivisorClass::hirzebruch(r, k, d);
                    let got = model.arithmetic_genus(&c).unwrap();
                    let want = 1 + (k - 1) * (2 * d - r * k) / 2;
                    assert_eq!(got, want, "r={r} k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn degree_spot_values() {
        let sc = SurfaceModel::scroll(5).unwrap();
        assert_eq!(sc.degree(&DivisorClass::scroll(5, 3, 3)).unwrap(), 15);
        let dp = SurfaceModel::blown_plane(4).unwrap();
        assert_eq!(dp.degree(&bp(9, &[3, 3, 3, 3])).unwrap(), 15);
        assert_eq!(dp.degree(&bp(0, &[0, 0, 0, 0])).unwrap(), 0);
        // abstract F_e has no embedding
        let fe = SurfaceModel::hirzebruch(2).unwrap();
        assert!(matches!(
            fe.degree(&DivisorClass::hirzebruch(2, 1, 0)),
            Err(Error::MissingEmbedding { .. })
        ));
    }

    #[test]
    fn neg_one_curve_lists() {
        assert_eq!(neg_one_curves(1).unwrap().len(), 1);
        assert_eq!(neg_one_curves(2).unwrap().len(), 3);
        assert_eq!(neg_one_curves(3).unwrap().len(), 6);
        assert_eq!(neg_one_curves(4).unwrap().len(), 10);
        let five = neg_one_curves(5).unwrap();
        assert_eq!(five.len(), 16);
        assert!(five.contains(&bp(2, &[1, 1, 1, 1, 1])));
        // index order: exceptional classes first, then lines by index pair
        let four = neg_one_curves(4).unwrap();
        assert_eq!(four[0], bp(0, &[-1, 0, 0, 0]));
        assert_eq!(four[4], bp(1, &[1, 1, 0, 0]));
        assert!(neg_one_curves(0).is_err());
        assert!(neg_one_curves(6).is_err());
    }

    /// Oracle: brute-force search of the coefficient box recovers exactly the
    /// published lists, so the closed-form enumeration is exhaustive at least
    /// on |a| <= 4, |b_i| <= 4.
    #[test]
    fn neg_one_curves_match_brute_force() {
        for s in 1..=5usize {
            let model = SurfaceModel::blown_plane(s).unwrap();
            let k = model.canonical.clone();
            let mut found = Vec::new();
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(b) = stack.pop() {
                if b.len() == s {
                    for a in -4..=4i64 {
                        let c = DivisorClass::Blowup { a, b: b.clone() };
                        if c.self_intersect() == -1 && c.intersect(&k).unwrap() == -1 {
                            found.push(c);
                        }
                    }
                } else {
                    for v in -4..=4i64 {
                        let mut nb = b.clone();
                        nb.push(v);
                        stack.push(nb);
                    }
                }
            }
            found.sort();
            let mut listed = neg_one_curves(s).unwrap();
            listed.sort();
            assert_eq!(found, listed, "s = {s}");
        }
    }

    #[test]
    fn scroll_to_hirzebruch_spot_values() {
        // r=5, 3H+3L on F_2 -> 3h+12f
        let c = DivisorClass::scroll(5, 3, 3);
        assert_eq!(
            scroll_to_hirzebruch(&c, 2).unwrap(),
            DivisorClass::hirzebruch(2, 3, 12)
        );
        // r=5, 4H-L on F_2 -> 4h+11f
        let c = DivisorClass::scroll(5, 4, -1);
        assert_eq!(
            scroll_to_hirzebruch(&c, 2).unwrap(),
            DivisorClass::hirzebruch(2, 4, 11)
        );
        // r=4, 3H-4L on F_1 -> 3h+2f
        let c = DivisorClass::scroll(4, 3, -4);
        assert_eq!(
            scroll_to_hirzebruch(&c, 1).unwrap(),
            DivisorClass::hirzebruch(1, 3, 2)
        );
        // parity violations
        assert!(matches!(
            scroll_to_hirzebruch(&DivisorClass::scroll(5, 1, 0), 1),
            Err(Error::ScrollModelInvalid { .. })
        ));
        assert!(matches!(
            scroll_to_hirzebruch(&DivisorClass::scroll(4, 1, 0), 5),
            Err(Error::ScrollModelInvalid { .. })
        ));
    }

    /// The F_e identification preserves the pairing and sends the scroll
    /// canonical class to K_{F_e}. That validates the reconstructed scroll
    /// lattice conventions.
    #[test]
    fn scroll_map_preserves_pairing_and_canonical() {
        for (r, e) in [(4i64, 1i64), (4, 3), (5, 0), (5, 2), (6, 1), (7, 0), (7, 2)] {
            let ks = SurfaceModel::scroll(r).unwrap().canonical;
            let ke = SurfaceModel::hirzebruch(e).unwrap().canonical;
            assert_eq!(scroll_to_hirzebruch(&ks, e).unwrap(), ke, "K for r={r} e={e}");
            for (a1, b1, a2, b2) in [(1i64, 0i64, 0i64, 1i64), (3, 3, 5, -5), (2, -7, 4, 1)] {
                let x = DivisorClass::scroll(r, a1, b1);
                let y = DivisorClass::scroll(r, a2, b2);
                let fx = scroll_to_hirzebruch(&x, e).unwrap();
                let fy = scroll_to_hirzebruch(&y, e).unwrap();
                assert_eq!(
                    x.intersect(&y).unwrap(),
                    fx.intersect(&fy).unwrap(),
                    "pairing r={r} e={e}"
                );
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let cases = [
            DivisorClass::hirzebruch(2, 3, 12),
            DivisorClass::hirzebruch(0, -3, -4),
            DivisorClass::quadric(0, -3),
            DivisorClass::blowup(9, &[3, 3, 3, 3]),
            DivisorClass::blowup(8, &[3, 2, 2, 2]),
            DivisorClass::scroll(5, 5, -5),
            DivisorClass::scroll(4, 3, -4),
        ];
        for c in cases {
            let s = c.to_string();
            let back: DivisorClass = s.parse().unwrap();
            assert_eq!(back, c, "round trip through {s}");
        }
        // run-length form parses too
        let c: DivisorClass = "BP[5]:(11;4^5)".parse().unwrap();
        assert_eq!(c, DivisorClass::blowup(11, &[4, 4, 4, 4, 4]));
        assert_eq!(c.compact(), "(11;4^5)");
        assert_eq!(
            DivisorClass::blowup(8, &[3, 2, 2, 2]).compact(),
            "(8;3,2^3)"
        );
        assert!("BP[3]:(1;1,1)".parse::<DivisorClass>().is_err());
        assert!("nonsense".parse::<DivisorClass>().is_err());
    }
}

//! Exact point location and the brute-force lattice-point oracle.
//!
//! Nothing here divides: barycentric weights are kept as integer numerators
//! over the (sign-normalized) total determinant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{add, cross, det3, gcd, gcd_vec, mul, sub, IntMatrix3, IntVec3, LatticePoint};

/// Upper bound on the number of box points the oracle will visit.
pub const MAX_ORACLE_POINTS: u128 = 200_000_000;

/// Largest `c` for which [`parallelepiped_interior_points`] materializes its list.
pub const MAX_INTERIOR_LIST_C: i64 = 10_000_000;

/// Where a point sits relative to a closed tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointLocation {
    Outside,
    Vertex,
    BoundaryNonVertex,
    Interior,
}

/// A nondegenerate lattice tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tetrahedron {
    vertices: [LatticePoint; 4],
}

/// `det(b − a, c − a, d − a)`.
fn orient(a: IntVec3, b: IntVec3, c: IntVec3, d: IntVec3) -> Result<i64> {
    det3(&IntMatrix3::from_rows(b.checked_sub(a)?, c.checked_sub(a)?, d.checked_sub(a)?))
}

impl Tetrahedron {
    pub fn new(vertices: [LatticePoint; 4]) -> Result<Self> {
        let [v0, v1, v2, v3] = vertices;
        if orient(v0, v1, v2, v3)? == 0 {
            return Err(Error::Degenerate);
        }
        Ok(Tetrahedron { vertices })
    }

    /// `T_{a,b,c}` with vertices `0, e₁, e₂, (a, b, c)`; any `c ≠ 0` is accepted.
    pub fn standard(a: i64, b: i64, c: i64) -> Result<Self> {
        Tetrahedron::new([IntVec3::ZERO, IntVec3::E1, IntVec3::E2, IntVec3::new(a, b, c)])
    }

    pub fn vertices(&self) -> &[LatticePoint; 4] {
        &self.vertices
    }

    /// Signed `det(v1 − v0, v2 − v0, v3 − v0)`.
    pub fn signed_volume6(&self) -> Result<i64> {
        let [v0, v1, v2, v3] = self.vertices;
        orient(v0, v1, v2, v3)
    }

    pub fn map(&self, l: &crate::intlin::AffineUnimodularMap) -> Result<Tetrahedron> {
        let mut out = [IntVec3::ZERO; 4];
        for (o, v) in out.iter_mut().zip(self.vertices) {
            *o = l.apply(v)?;
        }
        Tetrahedron::new(out)
    }
}

/// Six times the volume.
pub fn volume6(t: &Tetrahedron) -> Result<i64> {
    t.signed_volume6()?.checked_abs().ok_or(Error::Overflow("volume"))
}

/// Affine form `p ↦ normal·p + offset`.
#[derive(Debug, Clone, Copy)]
struct AffineForm {
    normal: IntVec3,
    offset: i64,
}

impl AffineForm {
    #[inline]
    fn eval(&self, p: IntVec3) -> Result<i64> {
        add(self.normal.dot(p)?, self.offset, "barycentric")
    }
}

/// Precomputed barycentric numerators of a tetrahedron.
///
/// `forms[i](p)` is the determinant obtained by substituting `p` for vertex
/// `i`, multiplied by the sign of the total determinant. The four values sum
/// to `|det|` and `p` lies in the closed tetrahedron iff all are `>= 0`.
#[derive(Debug, Clone)]
pub struct Locator {
    tet: Tetrahedron,
    forms: [AffineForm; 4],
}

impl Locator {
    pub fn new(t: &Tetrahedron) -> Result<Self> {
        let sign = t.signed_volume6()?.signum();
        let substituted = |i: usize, p: IntVec3| -> Result<i64> {
            let mut vs = t.vertices;
            vs[i] = p;
            mul(orient(vs[0], vs[1], vs[2], vs[3])?, sign, "barycentric")
        };
        let mut forms = [AffineForm { normal: IntVec3::ZERO, offset: 0 }; 4];
        for (i, f) in forms.iter_mut().enumerate() {
            // an affine function is determined by its values at 0, e1, e2, e3
            let offset = substituted(i, IntVec3::ZERO)?;
            let normal = IntVec3::new(
                sub(substituted(i, IntVec3::E1)?, offset, "barycentric")?,
                sub(substituted(i, IntVec3::E2)?, offset, "barycentric")?,
                sub(substituted(i, IntVec3::E3)?, offset, "barycentric")?,
            );
            *f = AffineForm { normal, offset };
        }
        Ok(Locator { tet: *t, forms })
    }

    pub fn locate(&self, p: LatticePoint) -> Result<PointLocation> {
        let mut zeros = 0;
        for f in &self.forms {
            let s = f.eval(p)?;
            if s < 0 {
                return Ok(PointLocation::Outside);
            }
            if s == 0 {
                zeros += 1;
            }
        }
        Ok(match zeros {
            0 => PointLocation::Interior,
            3 => {
                debug_assert!(self.tet.vertices.contains(&p));
                PointLocation::Vertex
            }
            _ => PointLocation::BoundaryNonVertex,
        })
    }
}

/// Exact location of `p` relative to the closed tetrahedron `t`.
pub fn locate(t: &Tetrahedron, p: LatticePoint) -> Result<PointLocation> {
    Locator::new(t)?.locate(p)
}

fn bounding_box(points: &[IntVec3]) -> (IntVec3, IntVec3) {
    let mut lo = points[0];
    let mut hi = points[0];
    for p in &points[1..] {
        lo = IntVec3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
        hi = IntVec3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
    }
    (lo, hi)
}

/// Visits every lattice point of the closed box in lexicographic order.
fn scan_box(lo: IntVec3, hi: IntVec3, mut visit: impl FnMut(IntVec3) -> Result<()>) -> Result<()> {
    let span = |a: i64, b: i64| (b as i128 - a as i128 + 1) as u128;
    let count = span(lo.x, hi.x) * span(lo.y, hi.y) * span(lo.z, hi.z);
    if count > MAX_ORACLE_POINTS {
        return Err(Error::OracleTooLarge(count));
    }
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            for z in lo.z..=hi.z {
                visit(IntVec3::new(x, y, z))?;
            }
        }
    }
    Ok(())
}

/// Every lattice point of the closed tetrahedron with its location, in
/// lexicographic order. Scans the bounding box of the vertices.
pub fn lattice_points_in(t: &Tetrahedron) -> Result<Vec<(LatticePoint, PointLocation)>> {
    let loc = Locator::new(t)?;
    let (lo, hi) = bounding_box(t.vertices());
    let mut out = Vec::new();
    scan_box(lo, hi, |p| {
        let l = loc.locate(p)?;
        if l != PointLocation::Outside {
            out.push((p, l));
        }
        Ok(())
    })?;
    Ok(out)
}

/// Only the four vertices are lattice points.
pub fn is_empty_bruteforce(t: &Tetrahedron) -> Result<bool> {
    Ok(lattice_points_in(t)?.iter().all(|&(_, l)| l == PointLocation::Vertex))
}

/// No lattice point on the boundary other than the vertices.
pub fn is_clean_bruteforce(t: &Tetrahedron) -> Result<bool> {
    Ok(lattice_points_in(t)?.iter().all(|&(_, l)| l != PointLocation::BoundaryNonVertex))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Region {
    Triangle,
    Parallelogram,
}

/// Counts lattice points other than the corners in the closed triangle or
/// parallelogram spanned by `u` and `v` at the origin.
fn planar_extra_points(u: IntVec3, v: IntVec3, region: Region) -> Result<usize> {
    let n = cross(u, v)?;
    if n.is_zero() {
        return Err(Error::DependentPair);
    }
    // p = s·u + t·v  ⇒  p × v = s·n and u × p = t·n
    let nn = n.dot(n)?;
    let uv = u.checked_add(v)?;
    let (lo, hi) = match region {
        Region::Triangle => bounding_box(&[IntVec3::ZERO, u, v]),
        Region::Parallelogram => bounding_box(&[IntVec3::ZERO, u, v, uv]),
    };
    let corners: &[IntVec3] = match region {
        Region::Triangle => &[IntVec3::ZERO, u, v],
        Region::Parallelogram => &[IntVec3::ZERO, u, v, uv],
    };
    let mut extra = 0;
    scan_box(lo, hi, |p| {
        if n.dot(p)? != 0 || corners.contains(&p) {
            return Ok(());
        }
        let s = cross(p, v)?.dot(n)?;
        let t = cross(u, p)?.dot(n)?;
        let inside = match region {
            Region::Triangle => s >= 0 && t >= 0 && add(s, t, "triangle")? <= nn,
            Region::Parallelogram => (0..=nn).contains(&s) && (0..=nn).contains(&t),
        };
        if inside {
            extra += 1;
        }
        Ok(())
    })?;
    Ok(extra)
}

/// The closed triangle `0, u, v` holds no lattice point besides its vertices.
pub fn triangle_is_empty_bruteforce(u: IntVec3, v: IntVec3) -> Result<bool> {
    Ok(planar_extra_points(u, v, Region::Triangle)? == 0)
}

/// The closed parallelogram `0, u, v, u + v` holds no lattice point besides its vertices.
pub fn parallelogram_is_empty_bruteforce(u: IntVec3, v: IntVec3) -> Result<bool> {
    Ok(planar_extra_points(u, v, Region::Parallelogram)? == 0)
}

/// `gcd(u × v) = 1`.
pub fn is_primitive_pair(u: IntVec3, v: IntVec3) -> Result<bool> {
    let n = cross(u, v)?;
    if n.is_zero() {
        return Err(Error::DependentPair);
    }
    Ok(gcd_vec(n) == 1)
}

/// The `c − 1` interior lattice points of the parallelepiped spanned by
/// `e₁, e₂, (a, b, c)`, ordered by `k = 1..c−1`.
///
/// Point `k` is `⟨k(c−a)/c⟩e₁ + ⟨k(c−b)/c⟩e₂ + (k/c)(a, b, c)`. Each coordinate
/// is assembled over the common denominator `c` and must divide exactly.
pub fn parallelepiped_interior_points(a: i64, b: i64, c: i64) -> Result<Vec<LatticePoint>> {
    if c < 1 || !(0..c).contains(&a) || !(0..c).contains(&b) {
        return Err(Error::InvalidForm { a, b, c });
    }
    if c > MAX_INTERIOR_LIST_C {
        return Err(Error::Precondition(format!("c = {c} exceeds the listing limit {MAX_INTERIOR_LIST_C}")));
    }
    if gcd(a, c) != 1 || gcd(b, c) != 1 {
        return Err(Error::Precondition(format!(
            "gcd(a,c) = gcd(b,c) = 1 required, got gcd({a},{c}) = {}, gcd({b},{c}) = {}",
            gcd(a, c),
            gcd(b, c)
        )));
    }
    let ctx = "parallelepiped points";
    let coord = |k: i64, n: i64| -> Result<i64> {
        // c·(⟨k(c−n)/c⟩ + k·n/c)
        let frac_num = mul(k, sub(c, n, ctx)?, ctx)?.rem_euclid(c);
        let total = add(frac_num, mul(k, n, ctx)?, ctx)?;
        assert_eq!(total % c, 0, "non-integral interior point coordinate");
        Ok(total / c)
    };
    (1..c)
        .map(|k| Ok(IntVec3::new(coord(k, a)?, coord(k, b)?, k)))
        .collect()
}

/// Oracle: interior lattice points of the parallelepiped spanned by `u, v, w`
/// at the origin, by box scan, in lexicographic order.
pub fn parallelepiped_interior_bruteforce(u: IntVec3, v: IntVec3, w: IntVec3) -> Result<Vec<LatticePoint>> {
    let d = det3(&IntMatrix3::from_rows(u, v, w))?;
    if d == 0 {
        return Err(Error::Degenerate);
    }
    let sign = d.signum();
    let dabs = d.abs();
    // p = αu + βv + γw with α = det(p,v,w)/d, β = det(u,p,w)/d, γ = det(u,v,p)/d
    let na = cross(v, w)?.checked_scale(sign)?;
    let nb = cross(w, u)?.checked_scale(sign)?;
    let nc = cross(u, v)?.checked_scale(sign)?;
    let mut corners = Vec::with_capacity(8);
    for i in 0..8 {
        let mut p = IntVec3::ZERO;
        for (bit, e) in [u, v, w].into_iter().enumerate() {
            if i & (1 << bit) != 0 {
                p = p.checked_add(e)?;
            }
        }
        corners.push(p);
    }
    let (lo, hi) = bounding_box(&corners);
    let mut out = Vec::new();
    scan_box(lo, hi, |p| {
        let inside = |n: IntVec3| -> Result<bool> {
            let s = n.dot(p)?;
            Ok(0 < s && s < dabs)
        };
        if inside(na)? && inside(nb)? && inside(nc)? {
            out.push(p);
        }
        Ok(())
    })?;
    Ok(out)
}

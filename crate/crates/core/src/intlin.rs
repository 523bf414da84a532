//! Exact integer linear algebra in three dimensions.
//!
//! Every arithmetic step is checked: an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping, so a verdict computed from these
//! routines is never based on a corrupted intermediate value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

#[inline]
pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

#[inline]
pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

/// A point (or vector) of Z³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct IntVec3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// Lattice points and lattice vectors share a representation.
pub type LatticePoint = IntVec3;

impl IntVec3 {
    pub const ZERO: IntVec3 = IntVec3::new(0, 0, 0);
    pub const E1: IntVec3 = IntVec3::new(1, 0, 0);
    pub const E2: IntVec3 = IntVec3::new(0, 1, 0);
    pub const E3: IntVec3 = IntVec3::new(0, 0, 1);

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        IntVec3 { x, y, z }
    }

    pub const fn to_array(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn checked_add(self, o: IntVec3) -> Result<IntVec3> {
        Ok(IntVec3::new(
            add(self.x, o.x, "vector add")?,
            add(self.y, o.y, "vector add")?,
            add(self.z, o.z, "vector add")?,
        ))
    }

    pub fn checked_sub(self, o: IntVec3) -> Result<IntVec3> {
        Ok(IntVec3::new(
            sub(self.x, o.x, "vector sub")?,
            sub(self.y, o.y, "vector sub")?,
            sub(self.z, o.z, "vector sub")?,
        ))
    }

    pub fn checked_neg(self) -> Result<IntVec3> {
        IntVec3::ZERO.checked_sub(self)
    }

    pub fn checked_scale(self, k: i64) -> Result<IntVec3> {
        Ok(IntVec3::new(
            mul(self.x, k, "vector scale")?,
            mul(self.y, k, "vector scale")?,
            mul(self.z, k, "vector scale")?,
        ))
    }

    pub fn dot(self, o: IntVec3) -> Result<i64> {
        let xx = mul(self.x, o.x, "dot")?;
        let yy = mul(self.y, o.y, "dot")?;
        let zz = mul(self.z, o.z, "dot")?;
        add(add(xx, yy, "dot")?, zz, "dot")
    }

    pub fn is_zero(self) -> bool {
        self == IntVec3::ZERO
    }
}

impl From<[i64; 3]> for IntVec3 {
    fn from(a: [i64; 3]) -> Self {
        IntVec3::new(a[0], a[1], a[2])
    }
}

impl fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Integer cross product `u × v`.
///
/// For every `w`, `cross(u, v)·w == det3(rows u, v, w)`.
pub fn cross(u: IntVec3, v: IntVec3) -> Result<IntVec3> {
    let c = "cross";
    Ok(IntVec3::new(
        sub(mul(u.y, v.z, c)?, mul(u.z, v.y, c)?, c)?,
        sub(mul(u.z, v.x, c)?, mul(u.x, v.z, c)?, c)?,
        sub(mul(u.x, v.y, c)?, mul(u.y, v.x, c)?, c)?,
    ))
}

/// Nonnegative gcd of two integers; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// gcd of the three components; the zero vector has gcd 0.
pub fn gcd_vec(u: IntVec3) -> u64 {
    let g = gcd(u.x, u.y);
    let mut a = g;
    let mut b = u.z.unsigned_abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Classical extended Euclid: returns `(g, x, y)` with `g >= 0` and `a·x + b·y = g`.
pub fn extended_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    let ctx = "extended gcd";
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.checked_div(r).ok_or(Error::Overflow(ctx))?;
        (old_r, r) = (r, sub(old_r, mul(q, r, ctx)?, ctx)?);
        (old_s, s) = (s, sub(old_s, mul(q, s, ctx)?, ctx)?);
        (old_t, t) = (t, sub(old_t, mul(q, t, ctx)?, ctx)?);
    }
    if old_r < 0 {
        let neg = |v: i64| v.checked_neg().ok_or(Error::Overflow(ctx));
        return Ok((neg(old_r)?, neg(old_s)?, neg(old_t)?));
    }
    Ok((old_r, old_s, old_t))
}

/// Three-term extended gcd, nested as `gcd(gcd(a, b), c)`.
///
/// Returns `(g, x, y, z)` with `a·x + b·y + c·z = g >= 0`. All-zero input
/// yields `(0, 0, 0, 0)`. Fails only when an input is `i64::MIN`.
pub fn extended_gcd3(a: i64, b: i64, c: i64) -> Result<(i64, i64, i64, i64)> {
    if a == 0 && b == 0 && c == 0 {
        return Ok((0, 0, 0, 0));
    }
    let (g1, x1, y1) = extended_gcd(a, b)?;
    let (g, s, t) = extended_gcd(g1, c)?;
    let ctx = "extended gcd";
    Ok((g, mul(x1, s, ctx)?, mul(y1, s, ctx)?, t))
}

/// A 3×3 integer matrix stored row-major: `rows[i][j]` is row `i`, column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix3 {
    pub rows: [[i64; 3]; 3],
}

impl IntMatrix3 {
    pub const IDENTITY: IntMatrix3 = IntMatrix3 {
        rows: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    };

    pub const fn new(rows: [[i64; 3]; 3]) -> Self {
        IntMatrix3 { rows }
    }

    pub fn from_rows(r0: IntVec3, r1: IntVec3, r2: IntVec3) -> Self {
        IntMatrix3::new([r0.to_array(), r1.to_array(), r2.to_array()])
    }

    pub fn from_cols(c0: IntVec3, c1: IntVec3, c2: IntVec3) -> Self {
        IntMatrix3::from_rows(c0, c1, c2).transpose()
    }

    pub fn row(&self, i: usize) -> IntVec3 {
        IntVec3::from(self.rows[i])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.rows;
        let mut t = [[0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = m[j][i];
            }
        }
        IntMatrix3::new(t)
    }

    pub fn mul_vec(&self, p: IntVec3) -> Result<IntVec3> {
        Ok(IntVec3::new(
            self.row(0).dot(p)?,
            self.row(1).dot(p)?,
            self.row(2).dot(p)?,
        ))
    }

    pub fn mul_mat(&self, o: &IntMatrix3) -> Result<IntMatrix3> {
        let ot = o.transpose();
        let mut out = [[0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.row(i).dot(ot.row(j))?;
            }
        }
        Ok(IntMatrix3::new(out))
    }

    /// Classical adjugate; `m · adj(m) = det(m) · I`.
    pub fn adjugate(&self) -> Result<IntMatrix3> {
        // Column j of the adjugate transposed is the cross product of the other two rows.
        let r = [self.row(0), self.row(1), self.row(2)];
        let c0 = cross(r[1], r[2])?;
        let c1 = cross(r[2], r[0])?;
        let c2 = cross(r[0], r[1])?;
        Ok(IntMatrix3::from_cols(c0, c1, c2))
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(det3(self)?.abs() == 1)
    }
}

impl fmt::Display for IntMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(f, "[{:?}, {:?}, {:?}]", r[0], r[1], r[2])
    }
}

/// Exact determinant.
pub fn det3(m: &IntMatrix3) -> Result<i64> {
    cross(m.row(0), m.row(1))?.dot(m.row(2))
}

/// `x ↦ M·x + u` with `det(M) = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineUnimodularMap {
    matrix: IntMatrix3,
    translation: IntVec3,
}

impl AffineUnimodularMap {
    pub const IDENTITY: AffineUnimodularMap = AffineUnimodularMap {
        matrix: IntMatrix3::IDENTITY,
        translation: IntVec3::ZERO,
    };

    /// Fails with [`Error::NotUnimodular`] unless `det(matrix) = ±1`.
    pub fn new(matrix: IntMatrix3, translation: IntVec3) -> Result<Self> {
        let d = det3(&matrix)?;
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d));
        }
        Ok(AffineUnimodularMap { matrix, translation })
    }

    pub fn linear(matrix: IntMatrix3) -> Result<Self> {
        Self::new(matrix, IntVec3::ZERO)
    }

    pub fn translation_by(u: IntVec3) -> Self {
        AffineUnimodularMap {
            matrix: IntMatrix3::IDENTITY,
            translation: u,
        }
    }

    pub fn matrix(&self) -> &IntMatrix3 {
        &self.matrix
    }

    pub fn translation(&self) -> IntVec3 {
        self.translation
    }

    pub fn det(&self) -> i64 {
        // validated at construction, so this cannot overflow
        det3(&self.matrix).expect("determinant of a validated unimodular matrix")
    }

    pub fn apply(&self, p: IntVec3) -> Result<IntVec3> {
        apply_map(self, p)
    }
}

/// `L(p) = M·p + u`.
pub fn apply_map(l: &AffineUnimodularMap, p: IntVec3) -> Result<IntVec3> {
    l.matrix.mul_vec(p)?.checked_add(l.translation)
}

/// The map `p ↦ outer(inner(p))`.
pub fn compose(outer: &AffineUnimodularMap, inner: &AffineUnimodularMap) -> Result<AffineUnimodularMap> {
    let matrix = outer.matrix.mul_mat(&inner.matrix)?;
    let translation = outer.matrix.mul_vec(inner.translation)?.checked_add(outer.translation)?;
    AffineUnimodularMap::new(matrix, translation)
}

/// Exact inverse; `M⁻¹ = det(M)·adj(M)` since `det(M) = ±1`.
pub fn invert(l: &AffineUnimodularMap) -> Result<AffineUnimodularMap> {
    let d = l.det();
    let adj = l.matrix.adjugate()?;
    let inv = if d == 1 {
        adj
    } else {
        let mut rows = adj.rows;
        for e in rows.iter_mut().flatten() {
            *e = e.checked_neg().ok_or(Error::Overflow("invert"))?;
        }
        IntMatrix3::new(rows)
    };
    let translation = inv.mul_vec(l.translation)?.checked_neg()?;
    AffineUnimodularMap::new(inv, translation)
}

/// Completes a primitive pair `{u, v}` to a lattice basis `{u, v, w}` with `det(u, v, w) = +1`.
///
/// `w` comes from the extended gcd of the components of `u × v`, so
/// `(u × v)·w = 1`.
pub fn extend_to_basis(u: IntVec3, v: IntVec3) -> Result<IntVec3> {
    let n = cross(u, v)?;
    if n.is_zero() {
        return Err(Error::DependentPair);
    }
    let g = gcd_vec(n);
    if g != 1 {
        return Err(Error::NotPrimitive(i64::try_from(g).unwrap_or(i64::MAX)));
    }
    let (g, x, y, z) = extended_gcd3(n.x, n.y, n.z)?;
    debug_assert_eq!(g, 1);
    let w = IntVec3::new(x, y, z);
    debug_assert!(!matches!(det3(&IntMatrix3::from_rows(u, v, w)), Ok(d) if d != 1));
    Ok(w)
}

//! Reduction of a lattice tetrahedron to `T_{a,b,c}` by an explicit affine
//! unimodular map, and a canonical representative over all vertex labelings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Tetrahedron;
use crate::intlin::{compose, extend_to_basis, AffineUnimodularMap, IntMatrix3, IntVec3};
use crate::whitefn::CanonicalForm;

/// Which input vertex plays which role: `origin ↦ 0`, `first ↦ e₁`,
/// `second ↦ e₂`, `apex ↦ (a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexRoles {
    pub origin: usize,
    pub first: usize,
    pub second: usize,
    pub apex: usize,
}

impl VertexRoles {
    pub const IDENTITY: VertexRoles = VertexRoles { origin: 0, first: 1, second: 2, apex: 3 };

    pub fn new(origin: usize, first: usize, second: usize, apex: usize) -> Result<Self> {
        let r = VertexRoles { origin, first, second, apex };
        let mut seen = [false; 4];
        for i in r.as_array() {
            if i >= 4 || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!("roles {:?} are not a permutation of 0..4", r.as_array())));
            }
        }
        Ok(r)
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.origin, self.first, self.second, self.apex]
    }

    /// All 24 assignments, origin-major.
    pub fn all() -> impl Iterator<Item = VertexRoles> {
        (0..4).flat_map(|o| {
            (0..4).flat_map(move |f| {
                (0..4).filter_map(move |s| {
                    if o == f || o == s || f == s {
                        return None;
                    }
                    let apex = 6 - o - f - s;
                    Some(VertexRoles { origin: o, first: f, second: s, apex })
                })
            })
        })
    }
}

/// A witnessing map together with the form it produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationResult {
    pub map: AffineUnimodularMap,
    pub form: CanonicalForm,
    pub roles: VertexRoles,
}

impl NormalizationResult {
    /// The image of `t`'s vertices under `map` is exactly `{0, e₁, e₂, (a, b, c)}`.
    pub fn is_sound_for(&self, t: &Tetrahedron) -> Result<bool> {
        let f = &self.form;
        if !(f.c >= 1 && (0..f.c).contains(&f.a) && (0..f.c).contains(&f.b)) {
            return Ok(false);
        }
        let mut image = Vec::with_capacity(4);
        for v in t.vertices() {
            image.push(self.map.apply(*v)?);
        }
        image.sort();
        let mut target = vec![IntVec3::ZERO, IntVec3::E1, IntVec3::E2, IntVec3::new(f.a, f.b, f.c)];
        target.sort();
        Ok(image == target)
    }
}

/// Runs the constructive reduction for one role assignment.
///
/// Translate the origin vertex to 0, complete `{u, v}` to a basis `{u, v, w}`,
/// change basis so that `u, v, w ↦ e₁, e₂, e₃`, flip `z` if the apex lands
/// below the plane, then shear the apex coordinates into `[0, c)`.
pub fn normalize(t: &Tetrahedron, roles: VertexRoles) -> Result<NormalizationResult> {
    let vs = t.vertices();
    let origin = vs[roles.origin];
    let u = vs[roles.first].checked_sub(origin)?;
    let v = vs[roles.second].checked_sub(origin)?;

    let w = extend_to_basis(u, v)?;
    // det(u, v, w) = 1, so the adjugate of [u v w] is its inverse
    let change = IntMatrix3::from_cols(u, v, w).adjugate()?;
    let to_origin = AffineUnimodularMap::translation_by(origin.checked_neg()?);
    let mut map = compose(&AffineUnimodularMap::linear(change)?, &to_origin)?;

    let apex = map.apply(vs[roles.apex])?;
    let (big_a, big_b, mut c) = (apex.x, apex.y, apex.z);
    debug_assert_ne!(c, 0);
    if c < 0 {
        let flip = AffineUnimodularMap::linear(IntMatrix3::new([[1, 0, 0], [0, 1, 0], [0, 0, -1]]))?;
        map = compose(&flip, &map)?;
        c = c.checked_neg().ok_or(Error::Overflow("normalize"))?;
    }

    // A = q1·c + a, B = q2·c + b with 0 <= a, b < c
    let (q1, q2) = (big_a.div_euclid(c), big_b.div_euclid(c));
    let shear = AffineUnimodularMap::linear(IntMatrix3::new([[1, 0, -q1], [0, 1, -q2], [0, 0, 1]]))?;
    map = compose(&shear, &map)?;

    let form = CanonicalForm::new(big_a.rem_euclid(c), big_b.rem_euclid(c), c)?;
    let result = NormalizationResult { map, form, roles };
    debug_assert!(!matches!(result.is_sound_for(t), Ok(false)));
    Ok(result)
}

/// The normalization whose form has the smallest `(c, a, b)` over all 24 role
/// assignments; ties go to the first assignment in [`VertexRoles::all`] order.
///
/// Assignments whose `{first, second}` edge pair is not primitive are skipped.
pub fn canonicalize(t: &Tetrahedron) -> Result<NormalizationResult> {
    let mut best: Option<NormalizationResult> = None;
    for roles in VertexRoles::all() {
        let r = match normalize(t, roles) {
            Ok(r) => r,
            Err(Error::NotPrimitive(_)) => continue,
            Err(e) => return Err(e),
        };
        if best.is_none_or(|b| r.form.key() < b.form.key()) {
            best = Some(r);
        }
    }
    best.ok_or(Error::NotNormalizable)
}

pub fn canonical_form(t: &Tetrahedron) -> Result<CanonicalForm> {
    Ok(canonicalize(t)?.form)
}

/// Affine unimodular equivalence via equality of canonical forms.
pub fn equivalent(t1: &Tetrahedron, t2: &Tetrahedron) -> Result<bool> {
    Ok(canonical_form(t1)? == canonical_form(t2)?)
}

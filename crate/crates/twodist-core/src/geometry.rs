//! Exact plane isometries restricted to the coefficient space of
//! [`PlanePoint`]: axis reflections, the π/3 rotation about the origin,
//! the arccos(49/50) rotation about an arbitrary center, and orbits under
//! the dihedral group those reflections and rotations generate.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::exact::{rat, rat_int, PlanePoint};

/// One of the isometries used by the construction. Every variant maps
/// `PlanePoint`s to `PlanePoint`s and preserves `sq_distance` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isometry {
    ReflectX,
    ReflectY,
    /// Rotation by `turns·π/3` about the origin, `turns` in `0..=5`.
    Rotate60 { turns: u8 },
    /// Rotation by ±arccos(49/50) about `center`.
    RotateSpecial { center: PlanePoint, clockwise: bool },
}

impl Isometry {
    pub fn apply(&self, p: &PlanePoint) -> PlanePoint {
        match self {
            Isometry::ReflectX => reflect_x(p),
            Isometry::ReflectY => reflect_y(p),
            Isometry::Rotate60 { turns } => {
                let mut out = p.clone();
                for _ in 0..(*turns % 6) {
                    out = rotate60(&out);
                }
                out
            }
            Isometry::RotateSpecial { center, clockwise } => {
                if *clockwise {
                    rotate_special_cw(p, center)
                } else {
                    rotate_special(p, center)
                }
            }
        }
    }
}

/// (x, y) → (x, −y).
pub fn reflect_x(p: &PlanePoint) -> PlanePoint {
    PlanePoint::new(p.xa.clone(), p.xb.clone(), -p.yc.clone(), -p.yd.clone())
}

/// (x, y) → (−x, y).
pub fn reflect_y(p: &PlanePoint) -> PlanePoint {
    PlanePoint::new(-p.xa.clone(), -p.xb.clone(), p.yc.clone(), p.yd.clone())
}

/// Counterclockwise rotation by π/3 about the origin.
///
/// In coefficients: (xa, xb, yc, yd) → ((xa−yc)/2, (xb−3yd)/2, (3xa+yc)/2, (xb+yd)/2).
pub fn rotate60(p: &PlanePoint) -> PlanePoint {
    let half = rat(1, 2);
    PlanePoint::new(
        (&p.xa - &p.yc) * &half,
        (&p.xb - rat_int(3) * &p.yd) * &half,
        (rat_int(3) * &p.xa + &p.yc) * &half,
        (&p.xb + &p.yd) * &half,
    )
}

// The linear part of the rotation with cos = 49/50, sin = ±(3/50)√11.
// Multiplying coordinates by √11 uses √11·√3 = √33, √11·√11 = 11 and
// √11·√33 = 11√3, so the four-coefficient form stays closed:
//   x' = (49·xa ∓ 33·yd)/50 · √3 + (49·xb ∓ 3·yc)/50 · √11
//   y' = (±33·xb + 49·yc)/50     + (±3·xa + 49·yd)/50 · √33
fn rotate_special_linear(p: &PlanePoint, sin_sign: i64) -> PlanePoint {
    let fifty = rat_int(50);
    let c = rat_int(49);
    let s3 = rat_int(3 * sin_sign);
    let s33 = rat_int(33 * sin_sign);
    PlanePoint::new(
        (&c * &p.xa - &s33 * &p.yd) / &fifty,
        (&c * &p.xb - &s3 * &p.yc) / &fifty,
        (&s33 * &p.xb + &c * &p.yc) / &fifty,
        (&s3 * &p.xa + &c * &p.yd) / &fifty,
    )
}

/// Counterclockwise rotation by arccos(49/50) about `center`.
pub fn rotate_special(p: &PlanePoint, center: &PlanePoint) -> PlanePoint {
    rotate_special_linear(&p.sub(center), 1).add(center)
}

/// Clockwise rotation by arccos(49/50) about `center`; inverse of
/// [`rotate_special`].
pub fn rotate_special_cw(p: &PlanePoint, center: &PlanePoint) -> PlanePoint {
    rotate_special_linear(&p.sub(center), -1).add(center)
}

/// Closure of `{p}` under the reflections in both axes and the π/3
/// rotation: the orbit under the order-12 dihedral group, sorted and
/// deduplicated.
pub fn dihedral_orbit(p: &PlanePoint) -> Vec<PlanePoint> {
    let mut seen: BTreeSet<PlanePoint> = BTreeSet::new();
    let mut frontier = Vec::new();
    seen.insert(p.clone());
    frontier.push(p.clone());
    while let Some(q) = frontier.pop() {
        for img in [reflect_x(&q), reflect_y(&q), rotate60(&q)] {
            if seen.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    debug_assert!(seen.len() <= 12);
    seen.into_iter().collect()
}

fn angle_class(p: &PlanePoint) -> u8 {
    let sx = p.x_elem().sign();
    let sy = p.y_elem().sign();
    match (sx, sy) {
        (1, 0) => 0,
        (1, 1) => 1,
        (0, 1) => 2,
        (-1, 1) => 3,
        (-1, 0) => 4,
        (-1, -1) => 5,
        (0, -1) => 6,
        (1, -1) => 7,
        _ => unreachable!("origin has no polar angle"),
    }
}

/// Compare points by polar angle in [0, 2π), exactly.
///
/// Points are first classified by axis/quadrant; within an open quadrant
/// the sign of the cross product decides. The origin has no polar angle
/// and sorts before every other point. Points on a common ray from the
/// origin compare equal.
pub fn polar_angle_cmp(p: &PlanePoint, q: &PlanePoint) -> Ordering {
    match (p.is_origin(), q.is_origin()) {
        (true, true) => return Ordering::Equal,
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    let (cp, cq) = (angle_class(p), angle_class(q));
    if cp != cq {
        return cp.cmp(&cq);
    }
    // Same open quadrant: angle difference lies in (−π/2, π/2), so the
    // cross product's sign is the sign of sin(θq − θp).
    match p.cross(q).sign() {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

/// Strict polar-angle comparison; see [`polar_angle_cmp`].
pub fn polar_angle_less(p: &PlanePoint, q: &PlanePoint) -> bool {
    polar_angle_cmp(p, q) == Ordering::Less
}

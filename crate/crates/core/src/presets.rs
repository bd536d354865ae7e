//! Reference point sets with exact rational coordinates.
//!
//! Metrically regular odd n-gons cannot carry rational coordinates (their two
//! distance classes have an irrational ratio), so the odd "n-gon" presets here
//! are equal-diagonal analogues: planar rational point sets whose diameter
//! pairs form exactly the n-cycle a regular n-gon would give, with the
//! squared diameter normalized to 1 where possible. They live in a rational
//! plane of R^4 or R^5 whose induced quadratic form is x^2 + D*y^2; the step
//! data below was found by exhaustive search over such forms and is verified
//! exactly by the tests.

use crate::error::{Error, Result};
use crate::geom::PointSet;
use crate::rational::{rat_i, Rational};

/// Vertices of a regular d-simplex: the d+1 standard basis vectors of
/// R^{d+1}. All pairwise squared distances equal 2; affine dimension is d.
pub fn simplex(d: usize) -> PointSet {
    let mut pts = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut p = vec![rat_i(0); d + 1];
        p[i] = rat_i(1);
        pts.push(p);
    }
    PointSet::new(d + 1, pts)
        .expect("distinct by construction")
        .with_label(format!("simplex-{d}"))
}

/// Regular tetrahedron with rational coordinates in R^3 (alternate corners of
/// the unit cube; squared side 2).
pub fn tetrahedron() -> PointSet {
    PointSet::from_integers(3, &[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        .expect("distinct")
        .with_label("tetrahedron")
}

/// Unit square corners.
pub fn square() -> PointSet {
    PointSet::from_integers(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
        .expect("distinct")
        .with_label("square")
}

/// Seven-point patch of the triangular lattice: origin plus the six minimal
/// vectors of {x in Z^3 : x1+x2+x3 = 0}. Minimal squared distance 2, twelve
/// minimal pairs.
pub fn triangular_patch() -> PointSet {
    PointSet::from_integers(
        3,
        &[
            &[0, 0, 0],
            &[1, -1, 0],
            &[-1, 1, 0],
            &[1, 0, -1],
            &[-1, 0, 1],
            &[0, 1, -1],
            &[0, -1, 1],
        ],
    )
    .expect("distinct")
    .with_label("triangular-patch")
}

/// Five points in R^3 whose diameter pairs form a 5-cycle (squared diameter
/// 14). No planar rational set with this property exists in the searched
/// range of rational planes, so this one is genuinely 3-dimensional.
pub fn pentagon_cycle() -> PointSet {
    PointSet::from_integers(
        3,
        &[
            &[0, 0, 0],
            &[-3, -2, 1],
            &[-2, 0, -2],
            &[0, -1, 1],
            &[-3, -2, -1],
        ],
    )
    .expect("distinct")
    .with_label("pentagon-cycle")
}

// Step vectors (x, y) of closed equal-length walks in the plane with
// quadratic form x^2 + D*y^2; the walk visits the n vertices in diagonal
// order and the n step lengths are the only diameter pairs.
const STEPS_7: [(i64, i64); 7] = [
    (-74, -18),
    (87, -5),
    (-81, 13),
    (66, -22),
    (-11, 33),
    (-11, -33),
    (24, 32),
];
const STEPS_9: [(i64, i64); 9] = [
    (-13, -3),
    (14, 0),
    (-13, 3),
    (11, -5),
    (-7, 7),
    (2, -8),
    (2, 8),
    (-7, -7),
    (11, 5),
];
const STEPS_11: [(i64, i64); 11] = [
    (-179, -19),
    (179, -19),
    (-161, 49),
    (143, -65),
    (-107, 85),
    (26, -104),
    (-7, 105),
    (-7, -105),
    (61, 99),
    (-91, -91),
    (143, 65),
];

/// Embed plane coordinates (x, y) with form x^2 + D*y^2 into Euclidean space:
/// y is spread over coordinates whose squares sum to D. Scaling by 1/scale
/// brings the squared diameter to 1.
fn walk_to_points(
    steps: &[(i64, i64)],
    spread: &[i64],
    scale: i64,
    label: &str,
) -> Result<PointSet> {
    let dim = 1 + spread.len();
    let mut x = 0i64;
    let mut y = 0i64;
    let s = rat_i(scale);
    let mut pts = Vec::with_capacity(steps.len());
    for &(dx, dy) in steps.iter().take(steps.len()) {
        let mut p = Vec::with_capacity(dim);
        p.push(rat_i(x) / &s);
        for &c in spread {
            p.push(rat_i(y * c) / &s);
        }
        pts.push(p);
        x += dx;
        y += dy;
    }
    Ok(PointSet::new(dim, pts)?.with_label(label.to_string()))
}

/// Planar rational point set whose diameter graph is the n-cycle, for odd n.
///
/// n = 3 is the basis triangle; n = 7, 9, 11 are equal-diagonal analogues of
/// the regular n-gon with squared diameter exactly 1. For n = 5 no planar
/// rational realization was found (see `pentagon_cycle` for a spatial one).
pub fn ngon(n: usize) -> Result<PointSet> {
    match n {
        3 => Ok(simplex(2).with_label("ngon-3")),
        7 => walk_to_points(&STEPS_7, &[2, 1, 1, 1], 88, "ngon-7"), // form x^2+7y^2, 7=4+1+1+1
        9 => walk_to_points(&STEPS_9, &[1, 1, 1], 14, "ngon-9"),    // form x^2+3y^2
        11 => walk_to_points(&STEPS_11, &[1, 1, 1], 182, "ngon-11"),
        5 => Err(Error::InvalidArgument(
            "no planar rational 5-gon is known; use the spatial pentagon-cycle preset".into(),
        )),
        _ => Err(Error::InvalidArgument(format!(
            "supported n-gons: odd n in {{3, 7, 9, 11}}, got {n}"
        ))),
    }
}

/// Squared diameter of the n-gon preset (1 for the scaled walks, 2 for the
/// basis triangle).
pub fn ngon_sq_diameter(n: usize) -> Result<Rational> {
    match n {
        3 => Ok(rat_i(2)),
        7 | 9 | 11 => Ok(rat_i(1)),
        _ => Err(Error::InvalidArgument(format!("no n-gon preset for {n}"))),
    }
}

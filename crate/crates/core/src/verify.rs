//! Machine checks for the sharpness claims: inequality sweeps on the
//! extremal bound expressions, closed-form vs series cross-checks, and a
//! reproduction table for every numeric radius the source prints.

use crate::equations::{
    eval_f_corrected, eval_f_literal, eval_j1, eval_j2, eval_stable_univalent, eval_t_literal,
    BohrPolynomial, RadiusProblem,
};
use crate::error::Error;
use crate::series::{
    area_ratio_w0h, area_tail_closed_half, distance_closed_half, distance_w0h, majorant_w0h,
    majorant_tail_closed_half, Alpha, DEFAULT_EPS, R_MAX,
};
use crate::solver::{solve_radius, RadiusResult, DEFAULT_TOL};

/// Slack allowed when testing lhs <= rhs at a grid point.
pub const HOLDS_SLACK: f64 = 1e-9;

/// Grid points within this band of the computed radius are treated as
/// sitting on the boundary and are exempt from the strict above-the-radius
/// failure requirement (exact rational radii like 1/3 land on grid points).
const RADIUS_BAND: f64 = 1e-8;

/// Outcome of an inequality sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Verdict {
    Consistent,
    Violation,
    DomainLimited,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Consistent => "CONSISTENT",
            Verdict::Violation => "VIOLATION",
            Verdict::DomainLimited => "DOMAIN_LIMITED",
        }
    }
}

/// One sampled comparison of the inequality.
#[derive(Clone, Copy, Debug)]
pub struct GridPoint {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Full record of one inequality sweep.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub problem: RadiusProblem,
    pub radius: Option<RadiusResult>,
    pub grid_points: Vec<GridPoint>,
    pub max_crosscheck_dev: f64,
    pub verdict: Verdict,
}

/// Match status of one reproduced value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RowStatus {
    Match,
    Mismatch,
    SeeNotes,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::SeeNotes => "SEE_NOTES",
        }
    }
}

/// One printed value vs its recomputation.
#[derive(Clone, Debug)]
pub struct ComparisonRow {
    pub claim_id: String,
    pub paper_value: f64,
    pub computed_value: f64,
    pub abs_dev: f64,
    pub tolerance: f64,
    pub status: RowStatus,
    pub note: String,
}

/// Sweeps the inequality for one problem: computes the radius, samples
/// lhs vs rhs on `grid_n` points of [0, min(domain, 1.5 radius)], and
/// checks that the inequality holds exactly up to the radius.
///
/// A no-root outcome (J2 with m = 0) becomes a DOMAIN_LIMITED verdict.
pub fn verify_bohr_inequality(
    problem: &RadiusProblem,
    grid_n: usize,
) -> Result<VerificationReport, Error> {
    if grid_n < 10 {
        return Err(Error::InvalidArgument(format!(
            "grid_n must be >= 10, got {grid_n}"
        )));
    }
    let max_crosscheck_dev = cross_check_closed_forms(9)?;

    let solved = match problem.solve(DEFAULT_TOL) {
        Ok(res) => res,
        Err(e) if e.is_no_root() => {
            return Ok(VerificationReport {
                problem: problem.clone(),
                radius: None,
                grid_points: Vec::new(),
                max_crosscheck_dev,
                verdict: Verdict::DomainLimited,
            });
        }
        Err(e) => return Err(e),
    };

    let radius = solved.radius;
    let top = problem.domain_hi().min(radius * 1.5);
    let rhs = problem.rhs()?;
    let mut grid_points = Vec::with_capacity(grid_n);
    let mut verdict = Verdict::Consistent;
    for i in 0..grid_n {
        let r = top * i as f64 / (grid_n - 1) as f64;
        let lhs = problem.lhs(r)?;
        let holds = lhs <= rhs + HOLDS_SLACK;
        if r <= radius && !holds {
            verdict = Verdict::Violation;
        }
        if r > radius + RADIUS_BAND && holds {
            verdict = Verdict::Violation;
        }
        grid_points.push(GridPoint { r, lhs, rhs, holds });
    }

    Ok(VerificationReport {
        problem: problem.clone(),
        radius: Some(solved),
        grid_points,
        max_crosscheck_dev,
        verdict,
    })
}

/// Maximum absolute deviation between the closed-form and direct-series
/// evaluations of the alpha = 1/2 majorant tail, area tail, and distance
/// constant over `grid_n` interior points.
pub fn cross_check_closed_forms(grid_n: usize) -> Result<f64, Error> {
    if grid_n < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid_n must be >= 2, got {grid_n}"
        )));
    }
    let mut dev: f64 = (distance_closed_half() - distance_w0h(Alpha::HALF, DEFAULT_EPS)?.value).abs();
    for i in 1..=grid_n {
        let r = i as f64 / (grid_n + 1) as f64;
        let majorant = majorant_w0h(r, Alpha::HALF, DEFAULT_EPS)?.value;
        dev = dev.max((majorant_tail_closed_half(r)? - (majorant - r)).abs());
        let area = area_ratio_w0h(r, Alpha::HALF, DEFAULT_EPS)?.value;
        dev = dev.max((area_tail_closed_half(r)? - (area - r * r)).abs());
    }
    Ok(dev)
}

/// Expected status of every reproduction row; a regression in either
/// direction (a MATCH becoming MISMATCH or vice versa) fails loudly.
pub fn expected_statuses() -> &'static [(&'static str, RowStatus)] {
    &[
        ("w0h-half-area-literal", RowStatus::Match),
        ("w0h-half-area-series-vs-printed", RowStatus::Mismatch),
        ("w0h-half-area-series-vs-corrected", RowStatus::Match),
        ("w0h-half-power-literal", RowStatus::Match),
        ("w0h-half-power-series-vs-literal", RowStatus::Match),
        ("stable-univalent-k1-printed", RowStatus::Mismatch),
        ("w0h-half-baseline", RowStatus::Match),
        ("w0h-half-distance-constant", RowStatus::SeeNotes),
    ]
}

fn radius_row(
    claim_id: &str,
    paper_value: f64,
    computed_value: f64,
    tolerance: f64,
    note: &str,
) -> ComparisonRow {
    let abs_dev = (paper_value - computed_value).abs();
    let status = if abs_dev <= tolerance {
        RowStatus::Match
    } else {
        RowStatus::Mismatch
    };
    ComparisonRow {
        claim_id: claim_id.into(),
        paper_value,
        computed_value,
        abs_dev,
        tolerance,
        status,
        note: note.into(),
    }
}

/// Recomputes every printed radius and emits one comparison row per claim.
/// Mismatches are data, not errors: two of the printed values are not
/// reproducible from their own displayed equations, and the table records
/// that as the expected outcome.
pub fn reproduce_paper_values() -> Result<Vec<ComparisonRow>, Error> {
    let one = BohrPolynomial::new(vec![1.0])?;
    let zero = BohrPolynomial::zero();

    let f_literal = solve_radius(eval_f_literal, R_MAX, DEFAULT_TOL)?.radius;
    let f_corrected = solve_radius(eval_f_corrected, R_MAX, DEFAULT_TOL)?.radius;
    let t_literal = solve_radius(eval_t_literal, R_MAX, DEFAULT_TOL)?.radius;
    let j1_improved = solve_radius(|r| eval_j1(r, Alpha::HALF, &one), R_MAX, DEFAULT_TOL)?.radius;
    let j1_baseline = solve_radius(|r| eval_j1(r, Alpha::HALF, &zero), R_MAX, DEFAULT_TOL)?.radius;
    let j2_m1 = solve_radius(|r| eval_j2(r, Alpha::HALF, &one, 1), R_MAX, DEFAULT_TOL)?.radius;
    let univalent_k1 =
        solve_radius(|r| eval_stable_univalent(r, &one), R_MAX, DEFAULT_TOL)?.radius;

    let mut rows = vec![
        radius_row(
            "w0h-half-area-literal",
            0.600881,
            f_literal,
            5e-4,
            "root of the printed closed form F with constant 29 + 8 log 2",
        ),
        radius_row(
            "w0h-half-area-series-vs-printed",
            0.600881,
            j1_improved,
            5e-4,
            "series route disagrees with the printed 0.600881; recombining the displayed sums \
             with the distance 8 log 2 - 5 forces the constant 41 - 8 log 2 and a root near 0.33319",
        ),
        radius_row(
            "w0h-half-area-series-vs-corrected",
            f_corrected,
            j1_improved,
            1e-6,
            "reference value is the corrected closed form (constant 41 - 8 log 2), not a printed value",
        ),
        radius_row(
            "w0h-half-power-literal",
            0.302059,
            t_literal,
            5e-4,
            "root of the printed closed form T, which is series-faithful",
        ),
        radius_row(
            "w0h-half-power-series-vs-literal",
            t_literal,
            j2_m1,
            1e-4,
            "reference value is the T-literal root; both routes describe the same radius",
        ),
        radius_row(
            "stable-univalent-k1-printed",
            0.382,
            univalent_k1,
            1e-3,
            "printed 0.382 does not satisfy the displayed k = 1 equation; (3 - sqrt 5)/2 = 0.381966 \
             solves r/(1-r)^2 = 1, suggesting a right-hand-side slip",
        ),
        radius_row(
            "w0h-half-baseline",
            0.4057,
            j1_baseline,
            1e-3,
            "reference value derived by bisection on r + sum 4 r^n/(n^2+n) = 8 log 2 - 5",
        ),
    ];

    // The comparison constant is printed once as 2(-3 + 4 log 2) and once as
    // 1 + 2(-3 + 4 log 2); both readings are recorded rather than choosing.
    let first_reading = 2.0 * (-3.0 + 4.0 * std::f64::consts::LN_2);
    let computed_distance = distance_w0h(Alpha::HALF, DEFAULT_EPS)?.value;
    rows.push(ComparisonRow {
        claim_id: "w0h-half-distance-constant".into(),
        paper_value: first_reading,
        computed_value: computed_distance,
        abs_dev: (first_reading - computed_distance).abs(),
        tolerance: 1e-9,
        status: RowStatus::SeeNotes,
        note: "the distance constant appears both as 2(-3 + 4 log 2) and as 1 + 2(-3 + 4 log 2); \
               the summed series equals the latter (8 log 2 - 5), one unit above the former"
            .into(),
    });

    Ok(rows)
}

/// True iff every row's status equals its hard-coded expected status.
pub fn reproduction_matches_expectations(rows: &[ComparisonRow]) -> bool {
    let expected = expected_statuses();
    if rows.len() != expected.len() {
        return false;
    }
    rows.iter()
        .zip(expected)
        .all(|(row, (id, status))| row.claim_id == *id && row.status == *status)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::{ClassSpec, ProblemVariant};

    fn problem(class: ClassSpec, coeffs: &[f64], variant: ProblemVariant) -> RadiusProblem {
        RadiusProblem::new(
            class,
            BohrPolynomial::new(coeffs.to_vec()).unwrap(),
            variant,
        )
        .unwrap()
    }

    #[test]
    fn stable_convex_baseline_is_consistent_on_exact_grid() {
        // radius is exactly 1/3 and the 100-point grid over [0, 0.5] lands
        // a point on it; the boundary band keeps the verdict clean
        let p = problem(ClassSpec::StableConvex, &[], ProblemVariant::MajorantOnly);
        let report = verify_bohr_inequality(&p, 100).unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
        let res = report.radius.unwrap();
        assert!((res.radius - 1.0 / 3.0).abs() <= 1e-10);
        assert_eq!(report.grid_points.len(), 100);
        assert!(report.max_crosscheck_dev <= 1e-9);
    }

    #[test]
    fn w0h_improved_sweep_is_consistent() {
        let p = problem(
            ClassSpec::W0H { alpha: Alpha::HALF },
            &[1.0],
            ProblemVariant::MajorantOnly,
        );
        let report = verify_bohr_inequality(&p, 100).unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
        assert!((report.radius.unwrap().radius - 0.333_193_268_190_7).abs() <= 1e-6);
    }

    #[test]
    fn univalent_ratio_sweep_is_consistent_with_smaller_radius() {
        let p = problem(
            ClassSpec::StableUnivalent,
            &[1.0],
            ProblemVariant::RatioArea,
        );
        let report = verify_bohr_inequality(&p, 100).unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
        assert!(report.radius.unwrap().radius < 0.1566);
    }

    #[test]
    fn no_root_becomes_domain_limited() {
        let p = problem(
            ClassSpec::W0H { alpha: Alpha::HALF },
            &[1.0],
            ProblemVariant::WithPowerTerm { m: 0 },
        );
        let report = verify_bohr_inequality(&p, 100).unwrap();
        assert_eq!(report.verdict, Verdict::DomainLimited);
        assert!(report.radius.is_none());
        assert!(report.grid_points.is_empty());
    }

    #[test]
    fn grid_n_validation() {
        let p = problem(ClassSpec::StableConvex, &[], ProblemVariant::MajorantOnly);
        assert!(verify_bohr_inequality(&p, 9).is_err());
    }

    #[test]
    fn lhs_crosses_rhs_once_near_radius() {
        for p in [
            problem(ClassSpec::StableConvex, &[1.0], ProblemVariant::MajorantOnly),
            problem(
                ClassSpec::W0H { alpha: Alpha::HALF },
                &[1.0],
                ProblemVariant::MajorantOnly,
            ),
        ] {
            let report = verify_bohr_inequality(&p, 200).unwrap();
            let radius = report.radius.unwrap().radius;
            let points = &report.grid_points;
            let cell = points[1].r - points[0].r;
            let mut crossings = 0;
            for w in points.windows(2) {
                assert!(w[1].lhs >= w[0].lhs, "lhs not non-decreasing");
                if w[0].holds && !w[1].holds {
                    crossings += 1;
                    assert!((w[1].r - radius).abs() <= cell + 1e-12);
                }
            }
            assert_eq!(crossings, 1);
        }
    }

    #[test]
    fn cross_check_stays_tight() {
        assert!(cross_check_closed_forms(9).unwrap() <= 1e-9);
        assert!(cross_check_closed_forms(2).unwrap() <= 1e-9);
        assert!(cross_check_closed_forms(1).is_err());

        // spot deviation at r = 0.5 alone
        let maj = majorant_w0h(0.5, Alpha::HALF, DEFAULT_EPS).unwrap().value;
        let dev = (majorant_tail_closed_half(0.5).unwrap() - (maj - 0.5)).abs();
        assert!(dev <= 1e-10);
        let area = area_ratio_w0h(0.5, Alpha::HALF, DEFAULT_EPS).unwrap().value;
        let dev = (area_tail_closed_half(0.5).unwrap() - (area - 0.25)).abs();
        assert!(dev <= 1e-10);
    }

    #[test]
    fn reproduction_table_matches_expected_statuses() {
        let rows = reproduce_paper_values().unwrap();
        assert!(reproduction_matches_expectations(&rows));
        assert_eq!(rows.len(), expected_statuses().len());

        let by_id = |id: &str| rows.iter().find(|r| r.claim_id == id).unwrap();

        let literal = by_id("w0h-half-area-literal");
        assert_eq!(literal.status, RowStatus::Match);
        assert!(literal.abs_dev <= 5e-4);

        let series = by_id("w0h-half-area-series-vs-printed");
        assert_eq!(series.status, RowStatus::Mismatch);
        assert!(series.abs_dev > 0.2);
        assert!(series.note.contains("41 - 8 log 2"));

        let univalent_k1 = by_id("stable-univalent-k1-printed");
        assert_eq!(univalent_k1.status, RowStatus::Mismatch);
        assert!((univalent_k1.computed_value - 0.1566).abs() <= 1e-3);

        let baseline = by_id("w0h-half-baseline");
        assert_eq!(baseline.status, RowStatus::Match);
        assert!((baseline.computed_value - 0.4057).abs() <= 1e-3);
    }

    #[test]
    fn reproduction_is_deterministic() {
        let a = reproduce_paper_values().unwrap();
        let b = reproduce_paper_values().unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.computed_value.to_bits(), y.computed_value.to_bits());
            assert_eq!(x.status, y.status);
        }
    }
}

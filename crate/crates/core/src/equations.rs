//! Radius-defining functions. Each `eval_*` is a scalar function of r that
//! is strictly increasing on its domain, negative at r = 0, and whose unique
//! zero is the claimed sharp Bohr radius for the corresponding class and
//! inequality variant.
//!
//! The alpha = 1/2 closed forms exist in two flavours: `eval_f_literal`
//! carries the printed constant 29 + 8 log 2, while `eval_f_corrected`
//! carries 41 - 8 log 2, the constant forced by recombining the displayed
//! series sums with the distance constant 8 log 2 - 5. The two differ by
//! 12 - 16 log 2 everywhere and their zeros differ by more than 0.26; both
//! are kept as first-class operations so the discrepancy stays reportable.

use std::sync::OnceLock;

use crate::error::Error;
use crate::series::{
    area_ratio_w0h, distance_w0h, majorant_w0h, Alpha, DEFAULT_EPS, R_MAX,
};
use crate::solver::{self, RadiusResult};
use crate::specfun;

const LN_2: f64 = std::f64::consts::LN_2;

/// Safety margin kept between a ratio-variant domain endpoint (where the
/// bound denominator vanishes) and the solver's search interval.
const RATIO_DOMAIN_MARGIN: f64 = 1e-7;

/// Non-negative-coefficient polynomial P(w) = lambda_1 w + ... + lambda_k w^k.
///
/// An empty coefficient list means P = 0, which reduces every radius
/// equation to its plain majorant-vs-distance baseline.
#[derive(Clone, Debug, PartialEq)]
pub struct BohrPolynomial {
    coefficients: Vec<f64>,
}

impl BohrPolynomial {
    pub fn new(coefficients: Vec<f64>) -> Result<Self, Error> {
        for (j, &lambda) in coefficients.iter().enumerate() {
            if !lambda.is_finite() || lambda < 0.0 {
                return Err(Error::Polynomial(format!(
                    "lambda_{} = {lambda} must be finite and >= 0",
                    j + 1
                )));
            }
        }
        if let Some(&last) = coefficients.last() {
            if last == 0.0 {
                return Err(Error::Polynomial(
                    "trailing zero coefficient: the leading lambda_k must be > 0".into(),
                ));
            }
        }
        Ok(BohrPolynomial { coefficients })
    }

    /// P = 0.
    pub fn zero() -> Self {
        BohrPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }
}

/// P(w) for w >= 0; always >= 0 since P has no constant term.
pub fn poly_eval(p: &BohrPolynomial, w: f64) -> Result<f64, Error> {
    if w.is_nan() || w < 0.0 {
        return Err(Error::domain("w", w, "[0, inf)"));
    }
    // Horner on lambda_k .. lambda_1, then one final multiply by w.
    let mut acc = 0.0;
    for &lambda in p.coefficients.iter().rev() {
        acc = acc * w + lambda;
    }
    Ok(acc * w)
}

/// Which harmonic-mapping class a problem lives in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClassSpec {
    W0H { alpha: Alpha },
    StableConvex,
    StableUnivalent,
}

impl ClassSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ClassSpec::W0H { .. } => "w0h",
            ClassSpec::StableConvex => "stable-convex",
            ClassSpec::StableUnivalent => "stable-univalent",
        }
    }
}

/// Shape of the inequality's left-hand side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProblemVariant {
    /// Majorant plus P(S_r / pi).
    MajorantOnly,
    /// |f|^m plus coefficient tail plus P(S_r / pi); m = 0 contributes
    /// the constant 1, so no root exists.
    WithPowerTerm { m: u32 },
    /// Majorant plus P(S_r / (pi - S_r)); stable classes only.
    RatioArea,
}

fn check_r_range(r: f64) -> Result<(), Error> {
    if (0.0..=R_MAX).contains(&r) {
        Ok(())
    } else {
        Err(Error::domain("r", r, "[0, 1 - 1e-6]"))
    }
}

/// J1(r) = M(r) + P(S_r/pi) - d(alpha): negative below the radius of
/// the improved inequality, positive above.
pub fn eval_j1(r: f64, alpha: Alpha, p: &BohrPolynomial) -> Result<f64, Error> {
    check_r_range(r)?;
    let majorant = majorant_w0h(r, alpha, DEFAULT_EPS)?.value;
    let poly = if p.is_zero() {
        0.0
    } else {
        poly_eval(p, area_ratio_w0h(r, alpha, DEFAULT_EPS)?.value)?
    };
    let distance = distance_w0h(alpha, DEFAULT_EPS)?.value;
    Ok(majorant + poly - distance)
}

/// J2(r) = M(r)^m + (M(r) - r) + P(S_r/pi) - d(alpha); the middle term is
/// the coefficient tail of the majorant.
pub fn eval_j2(r: f64, alpha: Alpha, p: &BohrPolynomial, m: u32) -> Result<f64, Error> {
    check_r_range(r)?;
    let majorant = majorant_w0h(r, alpha, DEFAULT_EPS)?.value;
    let power = if m == 0 { 1.0 } else { majorant.powi(m as i32) };
    let poly = if p.is_zero() {
        0.0
    } else {
        poly_eval(p, area_ratio_w0h(r, alpha, DEFAULT_EPS)?.value)?
    };
    let distance = distance_w0h(alpha, DEFAULT_EPS)?.value;
    Ok(power + (majorant - r) + poly - distance)
}

/// Shared shape of the alpha = 1/2 closed forms:
/// (maj_mult/r)(1-r)log(1-r) + (16/r^2)(1-r^2)log(1-r^2) - (16/r^2)Li2(r^2)
/// - 3r^2 + r_coeff * r + constant.
fn closed_form_half(r: f64, maj_mult: f64, r_coeff: f64, constant: f64) -> Result<f64, Error> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain("r", r, "(0, 1)"));
    }
    let x = r * r;
    let li2 = specfun::li2(x)?;
    Ok(maj_mult / r * (1.0 - r) * (-r).ln_1p() + 16.0 / x * (1.0 - x) * (-x).ln_1p()
        - 16.0 / x * li2
        - 3.0 * x
        + r_coeff * r
        + constant)
}

/// F(r) exactly as printed for the alpha = 1/2 majorant-plus-area radius,
/// constant 29 + 8 log 2; its zero is near 0.600881.
pub fn eval_f_literal(r: f64) -> Result<f64, Error> {
    closed_form_half(r, 4.0, -1.0, 29.0 + 8.0 * LN_2)
}

/// The series-faithful variant of F with constant 41 - 8 log 2; its zero
/// coincides with the zero of `eval_j1` at alpha = 1/2, P = (1).
pub fn eval_f_corrected(r: f64) -> Result<f64, Error> {
    closed_form_half(r, 4.0, -1.0, 41.0 - 8.0 * LN_2)
}

/// T(r) as printed for the alpha = 1/2 power-term radius (m = 1),
/// constant 45 - 8 log 2; its zero is near 0.302059 and the form is
/// series-faithful.
pub fn eval_t_literal(r: f64) -> Result<f64, Error> {
    closed_form_half(r, 8.0, -3.0, 45.0 - 8.0 * LN_2)
}

/// Stable-convex radius function r/(1-r) + P(r^2/(1-r^2)^2) - 1/2.
pub fn eval_stable_convex(r: f64, p: &BohrPolynomial) -> Result<f64, Error> {
    check_r_range(r)?;
    let u = r * r / ((1.0 - r * r) * (1.0 - r * r));
    Ok(r / (1.0 - r) + poly_eval(p, u)? - 0.5)
}

/// Stable-univalent radius function
/// r/(1-r)^2 + P((r^6 + 4r^4 + r^2)/(1-r^2)^4) - 1/4.
pub fn eval_stable_univalent(r: f64, p: &BohrPolynomial) -> Result<f64, Error> {
    check_r_range(r)?;
    let x = r * r;
    let num = x * (x * x + 4.0 * x + 1.0);
    let den = (1.0 - x).powi(4);
    Ok(r / ((1.0 - r) * (1.0 - r)) + poly_eval(p, num / den)? - 0.25)
}

/// Stable-convex ratio-variant function
/// r/(1-r) + P(r^2 / ((1-r^2)^2 - r^2)) - 1/2 on the domain where the
/// bound denominator stays positive, i.e. r < (sqrt 5 - 1)/2.
pub fn eval_stable_convex_ratio(r: f64, p: &BohrPolynomial) -> Result<f64, Error> {
    check_r_range(r)?;
    let x = r * r;
    let den = (1.0 - x) * (1.0 - x) - x;
    if den <= 0.0 {
        return Err(Error::domain("r", r, "[0, (sqrt 5 - 1)/2)"));
    }
    Ok(r / (1.0 - r) + poly_eval(p, x / den)? - 0.5)
}

/// Stable-univalent ratio-variant function
/// r/(1-r)^2 + P((r^6+4r^4+r^2) / ((1-r^2)^4 - (r^6+4r^4+r^2))) - 1/4 on
/// the domain where the bound denominator stays positive.
pub fn eval_stable_univalent_ratio(r: f64, p: &BohrPolynomial) -> Result<f64, Error> {
    check_r_range(r)?;
    let x = r * r;
    let num = x * (x * x + 4.0 * x + 1.0);
    let den = (1.0 - x).powi(4) - num;
    if den <= 0.0 {
        return Err(Error::domain(
            "r",
            r,
            "[0, smallest positive root of (1-r^2)^4 = r^6+4r^4+r^2)",
        ));
    }
    Ok(r / ((1.0 - r) * (1.0 - r)) + poly_eval(p, num / den)? - 0.25)
}

/// End of the stable-convex ratio domain: (sqrt 5 - 1)/2, where
/// (1 - r^2)^2 = r^2.
pub fn ratio_convex_domain_end() -> f64 {
    (5.0f64.sqrt() - 1.0) / 2.0
}

/// End of the stable-univalent ratio domain: the smallest positive root of
/// (1 - r^2)^4 = r^6 + 4r^4 + r^2, located once by bisection.
pub fn ratio_univalent_domain_end() -> f64 {
    static END: OnceLock<f64> = OnceLock::new();
    *END.get_or_init(|| {
        let g = |r: f64| {
            let x = r * r;
            (1.0 - x).powi(4) - x * (x * x + 4.0 * x + 1.0)
        };
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        while hi - lo > 1e-15 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    })
}

/// A fully specified radius problem: class, polynomial, and variant.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusProblem {
    class: ClassSpec,
    poly: BohrPolynomial,
    variant: ProblemVariant,
}

impl RadiusProblem {
    /// Validates the class/variant combination: the ratio variant needs a
    /// stable class, the power-term variant the close-to-convex class.
    pub fn new(
        class: ClassSpec,
        poly: BohrPolynomial,
        variant: ProblemVariant,
    ) -> Result<Self, Error> {
        match (&class, &variant) {
            (ClassSpec::W0H { .. }, ProblemVariant::RatioArea) => {
                return Err(Error::InvalidArgument(
                    "the ratio variant is only defined for stable classes".into(),
                ))
            }
            (
                ClassSpec::StableConvex | ClassSpec::StableUnivalent,
                ProblemVariant::WithPowerTerm { .. },
            ) => {
                return Err(Error::InvalidArgument(
                    "the power-term variant is only defined for the w0h class".into(),
                ))
            }
            _ => {}
        }
        Ok(RadiusProblem {
            class,
            poly,
            variant,
        })
    }

    pub fn class(&self) -> ClassSpec {
        self.class
    }

    pub fn poly(&self) -> &BohrPolynomial {
        &self.poly
    }

    pub fn variant(&self) -> ProblemVariant {
        self.variant
    }

    /// Top of the solver's search interval for this problem.
    pub fn domain_hi(&self) -> f64 {
        match (&self.class, &self.variant) {
            (ClassSpec::StableConvex, ProblemVariant::RatioArea) => {
                ratio_convex_domain_end() - RATIO_DOMAIN_MARGIN
            }
            (ClassSpec::StableUnivalent, ProblemVariant::RatioArea) => {
                ratio_univalent_domain_end() - RATIO_DOMAIN_MARGIN
            }
            _ => R_MAX,
        }
    }

    /// The radius equation: LHS minus RHS at the given r.
    pub fn eval(&self, r: f64) -> Result<f64, Error> {
        match (&self.class, &self.variant) {
            (ClassSpec::W0H { alpha }, ProblemVariant::MajorantOnly) => {
                eval_j1(r, *alpha, &self.poly)
            }
            (ClassSpec::W0H { alpha }, ProblemVariant::WithPowerTerm { m }) => {
                eval_j2(r, *alpha, &self.poly, *m)
            }
            (ClassSpec::StableConvex, ProblemVariant::MajorantOnly) => {
                eval_stable_convex(r, &self.poly)
            }
            (ClassSpec::StableConvex, ProblemVariant::RatioArea) => {
                eval_stable_convex_ratio(r, &self.poly)
            }
            (ClassSpec::StableUnivalent, ProblemVariant::MajorantOnly) => {
                eval_stable_univalent(r, &self.poly)
            }
            (ClassSpec::StableUnivalent, ProblemVariant::RatioArea) => {
                eval_stable_univalent_ratio(r, &self.poly)
            }
            (ClassSpec::W0H { .. }, ProblemVariant::RatioArea)
            | (_, ProblemVariant::WithPowerTerm { .. }) => unreachable!("rejected in new()"),
        }
    }

    /// Extremal-function left-hand side of the inequality at r.
    pub fn lhs(&self, r: f64) -> Result<f64, Error> {
        Ok(self.eval(r)? + self.rhs()?)
    }

    /// Class distance the left-hand side is compared against.
    pub fn rhs(&self) -> Result<f64, Error> {
        match &self.class {
            ClassSpec::W0H { alpha } => Ok(distance_w0h(*alpha, DEFAULT_EPS)?.value),
            ClassSpec::StableConvex => Ok(0.5),
            ClassSpec::StableUnivalent => Ok(0.25),
        }
    }

    /// Locates and refines the radius.
    pub fn solve(&self, tol: f64) -> Result<RadiusResult, Error> {
        solver::solve_radius(|r| self.eval(r), self.domain_hi(), tol)
    }

    /// Series terms consumed by one evaluation of the radius equation at r;
    /// zero for the stable classes, whose bounds are rational functions.
    pub fn terms_used_at(&self, r: f64) -> Result<usize, Error> {
        match &self.class {
            ClassSpec::W0H { alpha } => {
                let mut terms = majorant_w0h(r, *alpha, DEFAULT_EPS)?.terms_used
                    + distance_w0h(*alpha, DEFAULT_EPS)?.terms_used;
                if !self.poly.is_zero() {
                    terms += area_ratio_w0h(r, *alpha, DEFAULT_EPS)?.terms_used;
                }
                Ok(terms)
            }
            _ => Ok(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_radius;
    use proptest::prelude::*;

    fn poly(coeffs: &[f64]) -> BohrPolynomial {
        BohrPolynomial::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn polynomial_validation() {
        assert!(BohrPolynomial::new(vec![]).is_ok());
        assert!(BohrPolynomial::new(vec![1.0]).is_ok());
        assert!(BohrPolynomial::new(vec![0.0, 2.0]).is_ok());
        assert!(BohrPolynomial::new(vec![1.0, 0.0]).is_err());
        assert!(BohrPolynomial::new(vec![-1.0]).is_err());
        assert!(BohrPolynomial::new(vec![f64::NAN]).is_err());
        assert!(BohrPolynomial::zero().is_zero());
    }

    #[test]
    fn poly_eval_examples() {
        assert_eq!(poly_eval(&poly(&[1.0]), 0.25).unwrap(), 0.25);
        assert_eq!(poly_eval(&BohrPolynomial::zero(), 5.0).unwrap(), 0.0);
        assert_eq!(poly_eval(&poly(&[1.0]), 0.0).unwrap(), 0.0);
        let v = poly_eval(&poly(&[16.0 / 9.0, 18.6095]), 0.5).unwrap();
        assert!((v - 5.541_263_888_888_888_5).abs() < 1e-12);
        assert!(poly_eval(&poly(&[1.0]), -0.1).is_err());
    }

    #[test]
    fn j1_at_origin_is_minus_distance() {
        let v = eval_j1(0.0, Alpha::HALF, &poly(&[1.0])).unwrap();
        assert!((v + 0.545_177_444_479_562_3).abs() <= 1e-12);
    }

    #[test]
    fn j1_roots_match_oracle() {
        // P = 0 reduces to the plain majorant-vs-distance baseline
        let base = solve_radius(
            |r| eval_j1(r, Alpha::HALF, &BohrPolynomial::zero()),
            R_MAX,
            1e-12,
        )
        .unwrap();
        assert!((base.radius - 0.405_695_871_763_122).abs() <= 1e-8);

        let improved = solve_radius(|r| eval_j1(r, Alpha::HALF, &poly(&[1.0])), R_MAX, 1e-12)
            .unwrap();
        assert!((improved.radius - 0.333_193_268_190_7).abs() <= 1e-8);
        // hand bracketing: J1(0.33) < 0 < J1(0.34)
        assert!(eval_j1(0.33, Alpha::HALF, &poly(&[1.0])).unwrap() < 0.0);
        assert!(eval_j1(0.34, Alpha::HALF, &poly(&[1.0])).unwrap() > 0.0);
    }

    #[test]
    fn j2_at_origin_and_roots() {
        let v = eval_j2(0.0, Alpha::HALF, &poly(&[1.0]), 1).unwrap();
        assert!((v + 0.545_177_444_479_562_3).abs() <= 1e-12);

        let m1 = solve_radius(|r| eval_j2(r, Alpha::HALF, &poly(&[1.0]), 1), R_MAX, 1e-12)
            .unwrap();
        assert!((m1.radius - 0.302_059_062_483_6).abs() <= 1e-8);

        let m2 = solve_radius(|r| eval_j2(r, Alpha::HALF, &poly(&[1.0]), 2), R_MAX, 1e-12)
            .unwrap();
        assert!((m2.radius - 0.383_146_949_431_1).abs() <= 1e-8);
    }

    #[test]
    fn j2_with_m_zero_has_no_root() {
        // constant power term 1 makes J2(0) = 1 - d > 0
        let v = eval_j2(0.0, Alpha::HALF, &poly(&[1.0]), 0).unwrap();
        assert!((v - 0.454_822_555_520_437_7).abs() <= 1e-12);
        let err = solver::bracket_root(
            |r| eval_j2(r, Alpha::HALF, &poly(&[1.0]), 0),
            R_MAX,
        )
        .unwrap_err();
        assert!(err.is_no_root());
    }

    #[test]
    fn f_literal_reproduces_printed_radius() {
        let res = solve_radius(eval_f_literal, R_MAX, 1e-10).unwrap();
        assert!((res.radius - 0.600881).abs() <= 5e-4);
        assert!((res.radius - 0.600_880_682_102_4).abs() <= 1e-8);
        assert!(eval_f_literal(0.600881).unwrap().abs() < 5e-3);
        assert!(eval_f_literal(0.5).unwrap() < 0.0);
        assert!(eval_f_literal(0.7).unwrap() > 0.0);
        assert!(eval_f_literal(0.0).is_err());
    }

    #[test]
    fn f_corrected_matches_series_route() {
        let corrected = solve_radius(eval_f_corrected, R_MAX, 1e-12).unwrap();
        assert!((corrected.radius - 0.333_193_268_190_58).abs() <= 1e-9);
        let series = solve_radius(
            |r| eval_j1(r, Alpha::HALF, &poly(&[1.0])),
            R_MAX,
            1e-12,
        )
        .unwrap();
        assert!((corrected.radius - series.radius).abs() <= 1e-9);
        assert!(eval_f_corrected(0.3325).unwrap().abs() < 1e-2);
        assert!(eval_f_corrected(0.2).unwrap() < 0.0);
    }

    #[test]
    fn f_variants_differ_by_constant() {
        let expected = 12.0 - 16.0 * LN_2;
        for i in 1..20 {
            let r = i as f64 / 20.0;
            let diff = eval_f_corrected(r).unwrap() - eval_f_literal(r).unwrap();
            assert!((diff - expected).abs() <= 1e-12, "at r = {r}");
        }
    }

    #[test]
    fn t_literal_examples() {
        let res = solve_radius(eval_t_literal, R_MAX, 1e-10).unwrap();
        assert!((res.radius - 0.302059).abs() <= 5e-4);
        assert!(eval_t_literal(0.302059).unwrap().abs() < 5e-3);
        assert!(eval_t_literal(0.2).unwrap() < 0.0);
        // series-faithful: matches the J2 route
        let series = solve_radius(
            |r| eval_j2(r, Alpha::HALF, &poly(&[1.0]), 1),
            R_MAX,
            1e-12,
        )
        .unwrap();
        assert!((res.radius - series.radius).abs() <= 1e-6);
    }

    #[test]
    fn stable_convex_baseline_and_root() {
        // r/(1-r) = 1/2 exactly at r = 1/3; float rounding leaves ~1 ulp
        assert!(
            eval_stable_convex(1.0 / 3.0, &BohrPolynomial::zero())
                .unwrap()
                .abs()
                <= 1e-15
        );
        assert_eq!(
            eval_stable_convex(0.0, &poly(&[3.0, 2.0])).unwrap(),
            -0.5
        );
        let res = solve_radius(|r| eval_stable_convex(r, &poly(&[1.0])), R_MAX, 1e-12).unwrap();
        assert!((res.radius - 0.286_875_639_212_9).abs() <= 1e-8);
        assert!(eval_stable_convex(0.285, &poly(&[1.0])).unwrap() < 0.0);
        assert!(eval_stable_convex(0.29, &poly(&[1.0])).unwrap() > 0.0);
    }

    #[test]
    fn stable_univalent_baseline_and_root() {
        let base = solve_radius(
            |r| eval_stable_univalent(r, &BohrPolynomial::zero()),
            R_MAX,
            1e-13,
        )
        .unwrap();
        assert!((base.radius - (3.0 - 2.0 * 2.0f64.sqrt())).abs() <= 1e-12);
        assert_eq!(
            eval_stable_univalent(0.0, &poly(&[1.0])).unwrap(),
            -0.25
        );
        let res = solve_radius(|r| eval_stable_univalent(r, &poly(&[1.0])), R_MAX, 1e-12)
            .unwrap();
        assert!((res.radius - 0.156_637_679_087_9).abs() <= 1e-8);
        assert!(eval_stable_univalent(0.156, &poly(&[1.0])).unwrap() < 0.0);
        assert!(eval_stable_univalent(0.157, &poly(&[1.0])).unwrap() > 0.0);
    }

    #[test]
    fn stable_convex_ratio_examples() {
        assert!(
            eval_stable_convex_ratio(1.0 / 3.0, &BohrPolynomial::zero())
                .unwrap()
                .abs()
                <= 1e-15
        );
        assert!(eval_stable_convex_ratio(0.62, &poly(&[1.0])).is_err());
        let res = solve_radius(
            |r| eval_stable_convex_ratio(r, &poly(&[1.0])),
            ratio_convex_domain_end() - 1e-7,
            1e-12,
        )
        .unwrap();
        assert!((res.radius - 0.283_263_387_703_7).abs() <= 1e-8);
    }

    #[test]
    fn stable_univalent_ratio_examples() {
        let end = ratio_univalent_domain_end();
        assert!((end - 0.456_850_251_747_872_2).abs() <= 1e-12);
        assert!(eval_stable_univalent_ratio(end + 1e-3, &poly(&[1.0])).is_err());
        assert_eq!(
            eval_stable_univalent_ratio(0.0, &poly(&[1.0])).unwrap(),
            -0.25
        );

        let base = solve_radius(
            |r| eval_stable_univalent_ratio(r, &BohrPolynomial::zero()),
            end - 1e-7,
            1e-13,
        )
        .unwrap();
        assert!((base.radius - (3.0 - 2.0 * 2.0f64.sqrt())).abs() <= 1e-12);

        let res = solve_radius(
            |r| eval_stable_univalent_ratio(r, &poly(&[1.0])),
            end - 1e-7,
            1e-12,
        )
        .unwrap();
        // ratio argument dominates the plain area argument, so the root is smaller
        assert!(res.radius < 0.156_637_679_087_9);
        assert!((res.radius - 0.156_257_996_087_8).abs() <= 1e-8);
    }

    #[test]
    fn ratio_domain_end_convex() {
        let end = ratio_convex_domain_end();
        assert!((end - 0.618_033_988_749_894_9).abs() <= 1e-15);
        let x = end * end;
        assert!(((1.0 - x) * (1.0 - x) - x).abs() <= 1e-15);
    }

    #[test]
    fn sign_structure_positive_at_top_of_domain() {
        let one = poly(&[1.0]);
        assert!(eval_j1(R_MAX, Alpha::HALF, &one).unwrap() > 0.0);
        assert!(eval_j2(R_MAX, Alpha::HALF, &one, 1).unwrap() > 0.0);
        assert!(eval_f_literal(0.999).unwrap() > 0.0);
        assert!(eval_t_literal(0.999).unwrap() > 0.0);
        assert!(eval_stable_convex(R_MAX, &one).unwrap() > 0.0);
        assert!(eval_stable_univalent(R_MAX, &one).unwrap() > 0.0);
        assert!(
            eval_stable_convex_ratio(ratio_convex_domain_end() - 1e-7, &one).unwrap() > 0.0
        );
        assert!(
            eval_stable_univalent_ratio(ratio_univalent_domain_end() - 1e-7, &one).unwrap()
                > 0.0
        );
    }

    #[test]
    fn problem_combination_validation() {
        assert!(RadiusProblem::new(
            ClassSpec::W0H { alpha: Alpha::HALF },
            BohrPolynomial::zero(),
            ProblemVariant::RatioArea,
        )
        .is_err());
        assert!(RadiusProblem::new(
            ClassSpec::StableConvex,
            BohrPolynomial::zero(),
            ProblemVariant::WithPowerTerm { m: 1 },
        )
        .is_err());
        assert!(RadiusProblem::new(
            ClassSpec::StableUnivalent,
            poly(&[1.0]),
            ProblemVariant::RatioArea,
        )
        .is_ok());
    }

    #[test]
    fn problem_solve_and_terms() {
        let p = RadiusProblem::new(
            ClassSpec::StableConvex,
            BohrPolynomial::zero(),
            ProblemVariant::MajorantOnly,
        )
        .unwrap();
        let res = p.solve(1e-13).unwrap();
        assert!((res.radius - 1.0 / 3.0).abs() <= 1e-12);
        assert_eq!(p.terms_used_at(res.radius).unwrap(), 0);
        assert_eq!(p.rhs().unwrap(), 0.5);

        let w = RadiusProblem::new(
            ClassSpec::W0H { alpha: Alpha::HALF },
            poly(&[1.0]),
            ProblemVariant::MajorantOnly,
        )
        .unwrap();
        assert!(w.terms_used_at(0.5).unwrap() > 0);
        let lhs = w.lhs(0.2).unwrap();
        let rhs = w.rhs().unwrap();
        assert!((lhs - rhs - w.eval(0.2).unwrap()).abs() <= 1e-15);
    }

    proptest! {
        #[test]
        fn poly_eval_nonnegative(w in 0.0..=100.0f64, a in 0.0..=5.0f64, b in 0.01..=5.0f64) {
            let p = BohrPolynomial::new(vec![a, b]).unwrap();
            prop_assert!(poly_eval(&p, w).unwrap() >= 0.0);
        }

        #[test]
        fn ratio_argument_dominates_plain_argument(r in 0.0..=0.45f64) {
            // S_r/(pi - S_r) >= S_r/pi pointwise via the bound expressions
            let x = r * r;
            let plain_c = x / ((1.0 - x) * (1.0 - x));
            let ratio_c = x / ((1.0 - x) * (1.0 - x) - x);
            prop_assert!(ratio_c >= plain_c);
            let num = x * (x * x + 4.0 * x + 1.0);
            let plain_u = num / (1.0 - x).powi(4);
            let ratio_u = num / ((1.0 - x).powi(4) - num);
            prop_assert!(ratio_u >= plain_u);
        }

        #[test]
        fn j1_negative_below_baseline_radius(r in 0.0..=0.40f64) {
            // baseline root at alpha = 1/2 is ~0.4057; J1 with P = 0 stays
            // negative below it
            let v = eval_j1(r, Alpha::HALF, &BohrPolynomial::zero()).unwrap();
            prop_assert!(v < 0.0);
        }
    }
}

//! Bracketing and bisection for monotone scalar functions on a bounded
//! domain. Every radius in this crate is the unique zero of a strictly
//! increasing function that is negative at the origin, so plain bisection
//! with an explicit bracket is enough and is fully deterministic.

use crate::error::Error;

/// Default bisection tolerance in r.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Bisection iteration cap; 200 halvings take any unit-length bracket
/// far below the smallest permitted tolerance.
pub const MAX_ITERATIONS: u32 = 200;

const GRID_START: f64 = 1e-4;
const GRID_RATIO: f64 = 1.3;
const REFINE_SUBDIVISIONS: usize = 8;

/// A sign-changing interval: f(lo) < 0 < f(hi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    fn is_valid(&self) -> bool {
        self.lo < self.hi && self.f_lo < 0.0 && self.f_hi > 0.0
    }
}

/// A refined root with its final bracket and diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusResult {
    pub radius: f64,
    pub bracket: Bracket,
    pub residual: f64,
    pub iterations: u32,
    pub converged: bool,
}

/// Scans a geometric grid from `GRID_START` toward `domain_hi` (ratio 1.3)
/// for a sign change, then tightens the coarse interval with one linear
/// refinement pass.
///
/// Returns `Error::NoRoot` when no sign change exists on the domain, e.g.
/// when f is already positive at the start of the grid.
pub fn bracket_root<F>(f: F, domain_hi: f64) -> Result<Bracket, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    if !domain_hi.is_finite() || domain_hi <= GRID_START {
        return Err(Error::domain("domain_hi", domain_hi, "(1e-4, inf)"));
    }

    let mut lo = GRID_START;
    let mut f_lo = f(lo)?;
    if f_lo >= 0.0 {
        return Err(Error::NoRoot {
            domain_hi,
            start: lo,
            f_start: f_lo,
        });
    }

    let mut x = GRID_START;
    let (mut hi, mut f_hi);
    loop {
        x = (x * GRID_RATIO).min(domain_hi);
        let fx = f(x)?;
        if fx > 0.0 {
            hi = x;
            f_hi = fx;
            break;
        }
        // fx == 0 keeps the previous negative endpoint so the final
        // bracket still straddles the zero strictly.
        if fx < 0.0 {
            lo = x;
            f_lo = fx;
        }
        if x >= domain_hi {
            return Err(Error::NoRoot {
                domain_hi,
                start: x,
                f_start: fx,
            });
        }
    }

    // One refinement pass over the coarse cell.
    let base = lo;
    let width = hi - lo;
    for i in 1..REFINE_SUBDIVISIONS {
        let xi = base + width * i as f64 / REFINE_SUBDIVISIONS as f64;
        let fi = f(xi)?;
        if fi < 0.0 {
            lo = xi;
            f_lo = fi;
        } else if fi > 0.0 {
            hi = xi;
            f_hi = fi;
            break;
        }
    }

    Ok(Bracket { lo, hi, f_lo, f_hi })
}

/// Sign-safe bisection until the bracket width drops below `tol`.
///
/// The radius is the final bracket midpoint; an exact zero of f is accepted
/// immediately. If the iteration cap is hit first, the best bracket is
/// still returned with `converged = false`.
pub fn refine_root<F>(f: F, bracket: Bracket, tol: f64) -> Result<RadiusResult, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    if !bracket.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "refine_root needs f(lo) < 0 < f(hi) with lo < hi, got {bracket:?}"
        )));
    }
    if !tol.is_finite() || tol < 1e-15 {
        return Err(Error::domain("tol", tol, "[1e-15, inf)"));
    }

    let Bracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;

    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(RadiusResult {
                radius: mid,
                bracket: Bracket { lo, hi, f_lo, f_hi },
                residual: 0.0,
                iterations,
                converged: true,
            });
        }
        if f_mid < 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if hi - lo <= tol {
            let radius = 0.5 * (lo + hi);
            return Ok(RadiusResult {
                radius,
                bracket: Bracket { lo, hi, f_lo, f_hi },
                residual: f(radius)?,
                iterations,
                converged: true,
            });
        }
    }

    let radius = 0.5 * (lo + hi);
    Ok(RadiusResult {
        radius,
        bracket: Bracket { lo, hi, f_lo, f_hi },
        residual: f(radius)?,
        iterations,
        converged: false,
    })
}

/// Bracket and refine in one step.
pub fn solve_radius<F>(f: F, domain_hi: f64, tol: f64) -> Result<RadiusResult, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    let bracket = bracket_root(&f, domain_hi)?;
    refine_root(&f, bracket, tol)
}

/// True iff f is strictly increasing across `samples` points on [0, domain_hi].
///
/// Sample points outside the function's domain (ratio variants stop short
/// of r = 1) are skipped; at least two valid samples are required.
pub fn check_monotone<F>(f: F, domain_hi: f64, samples: usize) -> Result<bool, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "check_monotone needs samples >= 2, got {samples}"
        )));
    }
    let mut prev: Option<f64> = None;
    let mut valid = 0usize;
    for i in 0..samples {
        let r = domain_hi * i as f64 / (samples - 1) as f64;
        let value = match f(r) {
            Ok(v) => v,
            Err(Error::Domain { .. }) => continue,
            Err(e) => return Err(e),
        };
        valid += 1;
        if let Some(p) = prev {
            if value <= p {
                return Ok(false);
            }
        }
        prev = Some(value);
    }
    if valid < 2 {
        return Err(Error::InvalidArgument(
            "check_monotone found fewer than two in-domain samples".into(),
        ));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn linear(r: f64) -> Result<f64, Error> {
        Ok(r - 1.0 / 3.0)
    }

    #[test]
    fn brackets_simple_linear_root() {
        let b = bracket_root(linear, 0.99).unwrap();
        assert!(b.lo < 1.0 / 3.0 && 1.0 / 3.0 < b.hi);
        assert!(b.f_lo < 0.0 && b.f_hi > 0.0);
    }

    #[test]
    fn no_root_when_positive_from_start() {
        // J2 with m = 0 has this shape: positive constant plus increasing terms
        let err = bracket_root(|r| Ok(0.4548 + r), 0.99).unwrap_err();
        assert!(err.is_no_root());
    }

    #[test]
    fn no_root_when_never_crossing() {
        let err = bracket_root(|r| Ok(r - 5.0), 0.99).unwrap_err();
        assert!(err.is_no_root());
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(bracket_root(linear, 1e-5).is_err());
        assert!(bracket_root(linear, f64::NAN).is_err());
    }

    #[test]
    fn refinement_pass_stays_inside_the_coarse_cell() {
        // the function is only defined up to domain_hi, and the root sits
        // near the top of the coarse cell; probing past hi would error
        let f = |r: f64| {
            if r > 0.5 {
                Err(Error::domain("r", r, "[0, 0.5]"))
            } else {
                Ok(r - 0.49)
            }
        };
        let b = bracket_root(f, 0.5).unwrap();
        assert!(b.lo < 0.49 && 0.49 < b.hi);
    }

    #[test]
    fn refines_linear_root_to_tolerance() {
        let b = bracket_root(linear, 0.99).unwrap();
        let res = refine_root(linear, b, 1e-12).unwrap();
        assert!(res.converged);
        assert!((res.radius - 1.0 / 3.0).abs() <= 1e-12);
        assert!(res.bracket.hi - res.bracket.lo <= 1e-12);
        assert!(res.bracket.lo <= res.radius && res.radius <= res.bracket.hi);
    }

    #[test]
    fn rejects_invalid_bracket_and_tol() {
        let good = Bracket {
            lo: 0.0,
            hi: 1.0,
            f_lo: -1.0,
            f_hi: 1.0,
        };
        let bad_sign = Bracket { f_lo: 1.0, ..good };
        assert!(refine_root(linear, bad_sign, 1e-12).is_err());
        let bad_order = Bracket {
            lo: 1.0,
            hi: 0.0,
            ..good
        };
        assert!(refine_root(linear, bad_order, 1e-12).is_err());
        assert!(refine_root(linear, good, 1e-16).is_err());
    }

    #[test]
    fn exact_zero_midpoint_accepted() {
        let b = Bracket {
            lo: 0.0,
            hi: 0.5,
            f_lo: -0.25,
            f_hi: 0.25,
        };
        let res = refine_root(|r| Ok(r - 0.25), b, 1e-12).unwrap();
        assert_eq!(res.radius, 0.25);
        assert_eq!(res.residual, 0.0);
        assert_eq!(res.iterations, 1);
    }

    #[test]
    fn independent_of_starting_bracket() {
        let f = |r: f64| Ok((r - 0.37).powi(3) + (r - 0.37));
        let a = refine_root(
            f,
            Bracket {
                lo: 0.0,
                hi: 0.9,
                f_lo: f(0.0).unwrap(),
                f_hi: f(0.9).unwrap(),
            },
            1e-13,
        )
        .unwrap();
        let b = refine_root(
            f,
            Bracket {
                lo: 0.2,
                hi: 0.5,
                f_lo: f(0.2).unwrap(),
                f_hi: f(0.5).unwrap(),
            },
            1e-13,
        )
        .unwrap();
        assert!((a.radius - b.radius).abs() <= 2e-13);
    }

    #[test]
    fn solve_is_bit_reproducible() {
        let a = solve_radius(linear, 0.99, 1e-12).unwrap();
        let b = solve_radius(linear, 0.99, 1e-12).unwrap();
        assert_eq!(a.radius.to_bits(), b.radius.to_bits());
        assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    fn monotone_detection() {
        assert!(check_monotone(Ok, 0.9, 100).unwrap());
        assert!(!check_monotone(|r| Ok((r - 0.5) * (r - 0.5)), 0.9, 100).unwrap());
        assert!(check_monotone(Ok, 0.9, 1).is_err());
    }

    #[test]
    fn monotone_skips_out_of_domain_samples() {
        let f = |r: f64| {
            if r > 0.6 {
                Err(Error::domain("r", r, "[0, 0.6]"))
            } else {
                Ok(r)
            }
        };
        assert!(check_monotone(f, 0.9, 100).unwrap());
    }

    proptest! {
        #[test]
        fn finds_roots_of_increasing_cubics(c in 0.01..=0.9f64, scale in 0.1..=50.0f64) {
            let f = move |r: f64| Ok(scale * ((r - c) + (r - c).powi(3)));
            let res = solve_radius(f, 0.99, 1e-12).unwrap();
            prop_assert!(res.converged);
            prop_assert!((res.radius - c).abs() <= 1e-10);
        }

        #[test]
        fn bisection_preserves_sign_invariant(c in 0.05..=0.9f64) {
            let f = move |r: f64| Ok(r - c);
            let bracket = bracket_root(f, 0.99).unwrap();
            let res = refine_root(f, bracket, 1e-12).unwrap();
            prop_assert!(res.bracket.f_lo < 0.0);
            prop_assert!(res.bracket.f_hi > 0.0);
            prop_assert!(res.bracket.lo <= res.radius && res.radius <= res.bracket.hi);
        }
    }
}

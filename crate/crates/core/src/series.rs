//! Series attached to the extremal function of the close-to-convex class:
//! majorant, boundary distance, and area ratio, each with a rigorous
//! truncation bound, plus their dilogarithm closed forms at alpha = 1/2.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;
use crate::specfun;

/// Default truncation target for all series evaluations.
pub const DEFAULT_EPS: f64 = 1e-13;

/// Upper end of the evaluation domain in r; tail bounds blow up beyond it
/// and every radius of interest lies far below.
pub const R_MAX: f64 = 1.0 - 1e-6;

/// Closed forms divide by r or r^2; below this the direct series is used.
const CLOSED_FORM_SWITCH: f64 = 0.05;

/// Hard cap on summed terms; the reported tail bound stays valid either way.
const MAX_TERMS: usize = 40_000_000;

/// A numerically evaluated series value.
///
/// The true sum lies within `value - tail_bound ..= value + tail_bound`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesEval {
    pub value: f64,
    pub tail_bound: f64,
    pub terms_used: usize,
}

/// Class parameter of the close-to-convex family, restricted to (0, 1].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Alpha(f64);

impl Alpha {
    pub const HALF: Alpha = Alpha(0.5);
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(alpha: f64) -> Result<Self, Error> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(Alpha(alpha))
        } else {
            Err(Error::domain("alpha", alpha, "(0, 1]"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn check_r(r: f64) -> Result<(), Error> {
    if (0.0..=R_MAX).contains(&r) {
        Ok(())
    } else {
        Err(Error::domain("r", r, "[0, 1 - 1e-6]"))
    }
}

fn check_eps(eps: f64) -> Result<(), Error> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(Error::domain("eps", eps, "(0, inf)"))
    }
}

/// Sharp coefficient bound c_n(alpha) = 2 / (alpha n^2 + (1 - alpha) n), n >= 2.
pub fn coeff_w0h(n: u32, alpha: Alpha) -> Result<f64, Error> {
    if n < 2 {
        return Err(Error::domain("n", f64::from(n), "integers >= 2"));
    }
    let a = alpha.get();
    let nf = f64::from(n);
    Ok(2.0 / (a * nf * nf + (1.0 - a) * nf))
}

/// Kahan-compensated accumulator; keeps float noise below the tail bounds
/// even for multi-million-term sums near r = 1.
#[derive(Clone, Copy, Default)]
struct Accum {
    sum: f64,
    carry: f64,
}

impl Accum {
    fn new(start: f64) -> Self {
        Accum {
            sum: start,
            carry: 0.0,
        }
    }

    fn add(&mut self, term: f64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Majorant r + sum_{n>=2} c_n(alpha) r^n of the extremal function.
///
/// Tail bound after N terms: (2 / (alpha (N+1)^2)) * r^(N+1) / (1 - r).
pub fn majorant_w0h(r: f64, alpha: Alpha, eps: f64) -> Result<SeriesEval, Error> {
    check_r(r)?;
    check_eps(eps)?;
    if r == 0.0 {
        return Ok(SeriesEval {
            value: 0.0,
            tail_bound: 0.0,
            terms_used: 0,
        });
    }
    let a = alpha.get();
    let mut acc = Accum::new(r);
    let mut power = r * r;
    let mut n: usize = 2;
    loop {
        let nf = n as f64;
        acc.add(2.0 / (a * nf * nf + (1.0 - a) * nf) * power);
        let next = nf + 1.0;
        let tail = 2.0 / (a * next * next) * power * r / (1.0 - r);
        if tail <= eps || n > MAX_TERMS {
            return Ok(SeriesEval {
                value: acc.sum,
                tail_bound: tail,
                terms_used: n - 1,
            });
        }
        power *= r;
        n += 1;
    }
}

/// Boundary-distance constant 1 + sum_{n>=2} 2 (-1)^(n-1) / (alpha n^2 + (1-alpha) n).
///
/// Alternating with strictly decreasing terms, so the tail is bounded by the
/// first omitted term. Values are memoized per (alpha, eps): the sum is
/// r-independent and radius solves would otherwise recompute it per iterate.
pub fn distance_w0h(alpha: Alpha, eps: f64) -> Result<SeriesEval, Error> {
    check_eps(eps)?;
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), SeriesEval>>> = OnceLock::new();
    let key = (alpha.get().to_bits(), eps.to_bits());
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(*hit);
    }

    let a = alpha.get();
    let coeff = |nf: f64| 2.0 / (a * nf * nf + (1.0 - a) * nf);
    let mut acc = Accum::new(1.0);
    let mut n: usize = 2;
    let mut sign = -1.0;
    let eval = loop {
        let nf = n as f64;
        acc.add(sign * coeff(nf));
        let first_omitted = coeff(nf + 1.0);
        if first_omitted <= eps || n > MAX_TERMS {
            break SeriesEval {
                value: acc.sum,
                tail_bound: first_omitted,
                terms_used: n - 1,
            };
        }
        sign = -sign;
        n += 1;
    };
    cache.lock().unwrap().insert(key, eval);
    Ok(eval)
}

/// Area ratio S_r / pi = r^2 + sum_{n>=2} 4 n r^(2n) / (alpha n^2 + (1-alpha) n)^2.
///
/// Tail bound after N terms, with x = r^2: (4 / (alpha^2 (N+1)^3)) * x^(N+1) / (1 - x).
pub fn area_ratio_w0h(r: f64, alpha: Alpha, eps: f64) -> Result<SeriesEval, Error> {
    check_r(r)?;
    check_eps(eps)?;
    if r == 0.0 {
        return Ok(SeriesEval {
            value: 0.0,
            tail_bound: 0.0,
            terms_used: 0,
        });
    }
    let a = alpha.get();
    let x = r * r;
    let mut acc = Accum::new(x);
    let mut power = x * x;
    let mut n: usize = 2;
    loop {
        let nf = n as f64;
        let denom = a * nf * nf + (1.0 - a) * nf;
        acc.add(4.0 * nf / (denom * denom) * power);
        let next = nf + 1.0;
        let tail = 4.0 / (a * a * next * next * next) * power * x / (1.0 - x);
        if tail <= eps || n > MAX_TERMS {
            return Ok(SeriesEval {
                value: acc.sum,
                tail_bound: tail,
                terms_used: n - 1,
            });
        }
        power *= x;
        n += 1;
    }
}

/// sum_{n>=2} 4 r^n / (n^2 + n) via its closed form
/// 4 - 2r + (4/r)(1 - r) log(1 - r); direct series below the switch point.
pub fn majorant_tail_closed_half(r: f64) -> Result<f64, Error> {
    check_r(r)?;
    if r < CLOSED_FORM_SWITCH {
        let mut sum = 0.0;
        let mut power = r * r;
        let mut n: u32 = 2;
        loop {
            let term = 4.0 * power / f64::from(n * n + n);
            sum += term;
            if term <= 1e-17 * (1.0 + sum) {
                return Ok(sum);
            }
            power *= r;
            n += 1;
        }
    }
    Ok(4.0 - 2.0 * r + 4.0 / r * (1.0 - r) * (-r).ln_1p())
}

/// sum_{n>=2} 16 n r^(2n) / (n^2 + n)^2 via its closed form
/// -4 r^2 + (16/r^2)(1 - r^2) log(1 - r^2) - (16/r^2) Li2(r^2) + 32;
/// direct series below the switch point, where the closed form cancels
/// against numbers near 32.
pub fn area_tail_closed_half(r: f64) -> Result<f64, Error> {
    check_r(r)?;
    let x = r * r;
    if r < CLOSED_FORM_SWITCH {
        let mut sum = 0.0;
        let mut power = x * x;
        let mut n: u32 = 2;
        loop {
            let denom = f64::from(n * n + n);
            let term = 16.0 * f64::from(n) * power / (denom * denom);
            sum += term;
            if term <= 1e-17 * (1.0 + sum) {
                return Ok(sum);
            }
            power *= x;
            n += 1;
        }
    }
    let li2 = specfun::li2(x)?;
    Ok(-4.0 * x + 16.0 / x * (1.0 - x) * (-x).ln_1p() - 16.0 / x * li2 + 32.0)
}

/// Boundary distance of the alpha = 1/2 extremal function:
/// 1 + 2(-3 + 4 log 2) = 8 log 2 - 5.
pub fn distance_closed_half() -> f64 {
    8.0 * std::f64::consts::LN_2 - 5.0
}

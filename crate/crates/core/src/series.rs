//! Hilbert series: rational fitting and the growth order of the fit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// Extra equations beyond the unknowns that every fit must satisfy.
pub const GUARD: usize = 4;

/// `numerator / denominator` with integer coefficients in ascending powers,
/// coprime, and `denominator[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero and trimmed.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let lead = b.last().expect("nonzero divisor");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") / lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn to_rational(s: &Scalar) -> BigRational {
    match s {
        Scalar::Q(r) => r.clone(),
        Scalar::Fp { .. } => unreachable!("series are fitted over Q"),
    }
}

fn integer_poly(p: &[BigRational]) -> Option<Vec<BigInt>> {
    p.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

impl RationalSeries {
    /// The first `len` coefficients of the expansion.
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            let mut c = self.numerator.get(n).cloned().unwrap_or_default();
            for j in 1..self.denominator.len().min(n + 1) {
                c -= &self.denominator[j] * &out[n - j];
            }
            out.push(c);
        }
        out
    }

    /// Multiplicity of `t = 1` as a root of the denominator, after checking
    /// that every root of the denominator is a root of unity.
    pub fn pole_order_at_one(&self) -> Result<usize> {
        let mut den: Poly = self.denominator.iter().cloned().map(BigRational::from_integer).collect();
        trim(&mut den);
        let one_minus_t = vec![BigRational::one(), -BigRational::one()];
        let mut order = 0;
        loop {
            let (q, r) = poly_divrem(&den, &one_minus_t);
            if !r.is_empty() || den.len() <= 1 {
                break;
            }
            den = q;
            order += 1;
        }
        // strip cyclotomic factors Φ_k; phi(k) <= deg forces k <= 2 deg²
        let bound = 2 * den.len() * den.len() + 2;
        let mut k = 2;
        while den.len() > 1 && k <= bound {
            let phi = cyclotomic(k);
            let (q, r) = poly_divrem(&den, &phi);
            if r.is_empty() {
                den = q;
            } else {
                k += 1;
            }
        }
        if den.len() > 1 {
            return Err(Error::NonPolynomialGrowth(format!(
                "denominator {} has a root that is not a root of unity",
                format_poly(&self.denominator)
            )));
        }
        Ok(order)
    }
}

/// The k-th cyclotomic polynomial over Q.
fn cyclotomic(k: usize) -> Poly {
    // t^k − 1 divided by Φ_d for every proper divisor d
    let mut p: Poly = vec![BigRational::zero(); k + 1];
    p[0] = -BigRational::one();
    p[k] = BigRational::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            p = poly_divrem(&p, &cyclotomic(d)).0;
        }
    }
    p
}

fn format_poly(p: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        if i == 0 || !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", format_poly(&self.numerator), format_poly(&self.denominator))
    }
}

/// Finds a rational function whose expansion reproduces every coefficient.
///
/// Searches denominators of degree `r = 0..=max_order` and, for each, the
/// earliest index `s` from which `Σ_j q_j a_{n−j} = 0` holds on all later
/// coefficients, using at least `r + GUARD` equations. The numerator is the
/// truncation of `Q·A` below `s`. Returns `None` when nothing fits.
pub fn rational_fit(coeffs: &[i64], max_order: usize) -> Result<Option<RationalSeries>> {
    let need = 2 * max_order + GUARD;
    if coeffs.len() < need {
        return Err(Error::InsufficientData {
            have: coeffs.len(),
            need,
        });
    }
    let f = Field::Rational;
    let len = coeffs.len();
    let a = |n: isize| if n < 0 { 0 } else { coeffs[n as usize] };
    for r in 0..=max_order {
        for s in 0..=len - r - GUARD {
            // unknowns q_1..q_r: Σ_j q_j a_{n−j} = −a_n for n in s..len
            let rows: Vec<Vec<Scalar>> = (s..len)
                .map(|n| (1..=r).map(|j| f.int(a(n as isize - j as isize))).collect())
                .collect();
            let rhs: Vec<Scalar> = (s..len).map(|n| f.int(-coeffs[n])).collect();
            let q = if r == 0 {
                rhs.iter().all(Scalar::is_zero).then(Vec::new)
            } else {
                Matrix::from_rows(f, r, rows)?.solve(&rhs)?
            };
            let Some(q) = q else { continue };
            let mut den: Poly = vec![BigRational::one()];
            den.extend(q.iter().map(to_rational));
            let series: Poly = coeffs[..s].iter().map(|&c| BigRational::from_integer(c.into())).collect();
            let mut num = poly_mul(&den, &series);
            num.truncate(s);
            trim(&mut num);
            let Some(fit) = reduce(num, den) else { continue };
            let expanded = fit.expand(len);
            if expanded.iter().zip(coeffs).all(|(x, &y)| *x == BigInt::from(y)) {
                return Ok(Some(fit));
            }
        }
    }
    Ok(None)
}

fn reduce(mut num: Poly, mut den: Poly) -> Option<RationalSeries> {
    trim(&mut den);
    if !num.is_empty() {
        let g = poly_gcd(&num, &den);
        if g.len() > 1 {
            num = poly_divrem(&num, &g).0;
            den = poly_divrem(&den, &g).0;
        }
    }
    let c = den[0].clone();
    let normalize = |p: Poly| -> Poly { p.into_iter().map(|x| x / &c).collect() };
    Some(RationalSeries {
        numerator: integer_poly(&normalize(num))?,
        denominator: integer_poly(&normalize(den))?,
    })
}

/// The pole order at `t = 1` of the fitted series, which is the growth
/// degree of the partial sums.
pub fn gk_estimate(s: &RationalSeries) -> Result<usize> {
    s.pole_order_at_one()
}

/// Heuristic growth exponent from raw coefficients: the least-squares slope
/// of `log(partial sum)` against `log n` over the second half of the data.
/// Not a proof of anything; reported only as a hint.
pub fn gk_heuristic(coeffs: &[i64]) -> Option<f64> {
    let mut sum = 0i64;
    let mut pts = Vec::new();
    for (n, &c) in coeffs.iter().enumerate() {
        sum += c;
        if n >= (coeffs.len() / 2).max(1) && sum > 0 {
            pts.push(((n as f64).ln(), (sum as f64).ln()));
        }
    }
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Converts dimensions to the signed coefficients the fitter takes.
pub fn as_coefficients(dims: &[usize]) -> Vec<i64> {
    dims.iter().map(|&d| d.to_i64().expect("dimension fits in i64")).collect()
}

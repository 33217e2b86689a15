//! Bessel functions of order zero and one, and Hankel functions of the
//! first kind.
//!
//! The fast path uses the ascending power series for `x <= 12` and the
//! Hankel asymptotic expansion above. The [`reference`] submodule holds a
//! slow, exact fixed-point evaluation of the same power series used by the
//! test suite as an independent oracle.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Crossover between the ascending series and the asymptotic expansion.
const SERIES_CUTOFF: f64 = 12.0;

/// Bessel function of the first kind, order zero.
///
/// Absolute error <= 1e-8 on [0, 60].
pub fn bessel_j0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("bessel_j0: non-finite input"));
    }
    if x < 0.0 {
        return Err(Error::domain("bessel_j0: negative input"));
    }
    Ok(if x <= SERIES_CUTOFF { j0_series(x) } else { asymptotic(0, x).0 })
}

/// Bessel function of the second kind, order zero.
///
/// Absolute error <= 1e-8 on (1e-6, 60]. Diverges to -inf as x -> 0+.
pub fn bessel_y0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("bessel_y0: non-finite input"));
    }
    if x <= 0.0 {
        return Err(Error::domain("bessel_y0: logarithmic singularity at x <= 0"));
    }
    Ok(if x <= SERIES_CUTOFF { y0_series(x) } else { asymptotic(0, x).1 })
}

/// Bessel function of the first kind, order one.
pub fn bessel_j1(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("bessel_j1: non-finite input"));
    }
    if x < 0.0 {
        return Err(Error::domain("bessel_j1: negative input"));
    }
    Ok(if x <= SERIES_CUTOFF { j1_series(x) } else { asymptotic(1, x).0 })
}

/// Bessel function of the second kind, order one.
pub fn bessel_y1(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("bessel_y1: non-finite input"));
    }
    if x <= 0.0 {
        return Err(Error::domain("bessel_y1: pole at x <= 0"));
    }
    Ok(if x <= SERIES_CUTOFF { y1_series(x) } else { asymptotic(1, x).1 })
}

/// Zero-order Hankel function of the first kind, H0 = J0 + i*Y0.
pub fn hankel1_0(x: f64) -> Result<Complex64> {
    Ok(Complex64::new(bessel_j0(x)?, bessel_y0(x)?))
}

/// First-order Hankel function of the first kind, H1 = J1 + i*Y1.
pub fn hankel1_1(x: f64) -> Result<Complex64> {
    Ok(Complex64::new(bessel_j1(x)?, bessel_y1(x)?))
}

/// J0 ascending series: sum over m of (-x^2/4)^m / (m!)^2.
fn j0_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..200 {
        term *= -q / ((m * m) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// Y0 ascending series:
/// (2/pi) [ (ln(x/2) + gamma) J0(x) + sum_{m>=1} (-1)^{m+1} H_m (x^2/4)^m/(m!)^2 ].
fn y0_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0; // q^m / (m!)^2
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for m in 1..200 {
        term *= q / ((m * m) as f64);
        harmonic += 1.0 / m as f64;
        let contrib = if m % 2 == 1 { harmonic * term } else { -harmonic * term };
        sum += contrib;
        if term * harmonic < 1e-18 {
            break;
        }
    }
    std::f64::consts::FRAC_2_PI * (((x / 2.0).ln() + EULER_GAMMA) * j0_series(x) + sum)
}

/// J1 ascending series: (x/2) sum over m of (-x^2/4)^m / (m!(m+1)!).
fn j1_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..200 {
        term *= -q / ((m * (m + 1)) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    x / 2.0 * sum
}

/// Y1 ascending series:
/// (2/pi) [ (ln(x/2)+gamma) J1(x) - 1/x
///          - (x/4) sum_{m>=0} (-1)^m (H_m + H_{m+1}) (x^2/4)^m/(m!(m+1)!) ].
fn y1_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0; // q^m / (m!(m+1)!)
    let mut h_m = 0.0;
    let mut h_m1 = 1.0;
    let mut sum = h_m + h_m1; // m = 0 contribution
    for m in 1..200 {
        term *= q / ((m * (m + 1)) as f64);
        h_m += 1.0 / m as f64;
        h_m1 += 1.0 / (m + 1) as f64;
        let w = h_m + h_m1;
        let contrib = if m % 2 == 0 { w * term } else { -w * term };
        sum += contrib;
        if term * w < 1e-18 {
            break;
        }
    }
    std::f64::consts::FRAC_2_PI
        * (((x / 2.0).ln() + EULER_GAMMA) * j1_series(x) - 1.0 / x - x / 4.0 * sum)
}

/// Hankel asymptotic expansion for large x: returns (J_nu(x), Y_nu(x)).
///
/// J = sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
/// Y = sqrt(2/(pi x)) [P sin(chi) + Q cos(chi)],
/// chi = x - (2 nu + 1) pi / 4. The series is semiconvergent; summation
/// stops at the smallest term, which bounds the truncation error. For
/// x >= 12 that bound is below 1e-10.
fn asymptotic(nu: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (nu * nu) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut u = 1.0; // u_m = prod_{j=1..m} (mu - (2j-1)^2) / (m! (8x)^m)
    let mut prev = f64::INFINITY;
    for m in 1u32..60 {
        let j = (2 * m - 1) as f64;
        u *= (mu - j * j) / (m as f64 * 8.0 * x);
        if u.abs() >= prev {
            break;
        }
        prev = u.abs();
        // P takes even m with sign (-1)^(m/2); Q takes odd m with (-1)^((m-1)/2).
        match m % 4 {
            1 => q += u,
            2 => p -= u,
            3 => q -= u,
            _ => p += u,
        }
        if u.abs() < 1e-18 {
            break;
        }
    }
    let chi = x - (2.0 * nu as f64 + 1.0) * std::f64::consts::FRAC_PI_4;
    let (s, c) = chi.sin_cos();
    let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
    (amp * (p * c - q * s), amp * (p * s + q * c))
}

pub mod reference {
    //! Exact fixed-point evaluation of the ascending power series.
    //!
    //! The plain f64 series loses all significance for x near 60 (the
    //! alternating terms peak around 1e23), so the reference path sums the
    //! series in 256-bit fixed point where the cancellation is exact. Used
    //! by the test suite as an oracle independent of the fast path.

    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};

    use super::EULER_GAMMA;

    /// Fixed-point scale: values are stored as round(v * 2^SCALE_BITS).
    const SCALE_BITS: u32 = 256;

    fn fixed_one() -> BigInt {
        BigInt::from(1) << SCALE_BITS
    }

    /// Exact fixed-point representation of a (dyadic) f64.
    fn from_f64(v: f64) -> BigInt {
        // Decompose v = sign * mant * 2^(exp). For the magnitudes used here
        // (|v| >= 1e-40) the shifted value is exactly representable.
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_raw = ((bits >> 52) & 0x7ff) as i64;
        let mant = bits & 0x000f_ffff_ffff_ffff;
        let (mant, exp) = if exp_raw == 0 {
            (mant, -1074i64)
        } else {
            (mant | 0x0010_0000_0000_0000, exp_raw - 1075)
        };
        let shift = exp + SCALE_BITS as i64;
        let m = BigInt::from(mant) * sign;
        if shift >= 0 {
            m << shift as u64
        } else {
            m >> (-shift) as u64
        }
    }

    fn to_f64(v: &BigInt) -> f64 {
        // v / 2^SCALE_BITS with rounding handled by the BigInt -> f64 cast.
        let hi = (v >> (SCALE_BITS - 64)).to_f64().unwrap_or(f64::NAN);
        hi / 2f64.powi(64)
    }

    /// x^2/4 in fixed point, exact (x*x done as a big-integer product).
    fn quarter_square(x: f64) -> BigInt {
        let fx = from_f64(x);
        (&fx * &fx) >> (SCALE_BITS + 2)
    }

    /// Reference J0 via the exact alternating series.
    pub fn j0(x: f64) -> f64 {
        let q = quarter_square(x);
        let mut term = fixed_one();
        let mut sum = fixed_one();
        for m in 1u64..400 {
            term = (&term * &q) >> SCALE_BITS;
            term /= BigInt::from(m * m);
            if m % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            if term.is_zero_like() {
                break;
            }
        }
        to_f64(&sum)
    }

    /// Reference Y0: (2/pi)[(ln(x/2)+gamma) J0 + S], S summed exactly.
    pub fn y0(x: f64) -> f64 {
        let q = quarter_square(x);
        let mut term = fixed_one();
        let mut harmonic = BigInt::from(0);
        let mut sum = BigInt::from(0);
        for m in 1u64..400 {
            term = (&term * &q) >> SCALE_BITS;
            term /= BigInt::from(m * m);
            harmonic += fixed_one() / BigInt::from(m);
            let contrib = (&term * &harmonic) >> SCALE_BITS;
            if m % 2 == 1 {
                sum += &contrib;
            } else {
                sum -= &contrib;
            }
            if term.is_zero_like() {
                break;
            }
        }
        std::f64::consts::FRAC_2_PI * (((x / 2.0).ln() + EULER_GAMMA) * j0(x) + to_f64(&sum))
    }

    /// Reference J1 via the exact alternating series.
    pub fn j1(x: f64) -> f64 {
        let q = quarter_square(x);
        let mut term = fixed_one();
        let mut sum = fixed_one();
        for m in 1u64..400 {
            term = (&term * &q) >> SCALE_BITS;
            term /= BigInt::from(m * (m + 1));
            if m % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            if term.is_zero_like() {
                break;
            }
        }
        x / 2.0 * to_f64(&sum)
    }

    /// Reference Y1: (2/pi)[(ln(x/2)+gamma) J1 - 1/x - (x/4) S], S exact.
    pub fn y1(x: f64) -> f64 {
        let q = quarter_square(x);
        let mut term = fixed_one();
        let mut h_m = BigInt::from(0);
        let mut h_m1 = fixed_one();
        let mut sum = &h_m + &h_m1;
        for m in 1u64..400 {
            term = (&term * &q) >> SCALE_BITS;
            term /= BigInt::from(m * (m + 1));
            h_m += fixed_one() / BigInt::from(m);
            h_m1 += fixed_one() / BigInt::from(m + 1);
            let w = &h_m + &h_m1;
            let contrib = (&term * &w) >> SCALE_BITS;
            if m % 2 == 0 {
                sum += &contrib;
            } else {
                sum -= &contrib;
            }
            if term.is_zero_like() {
                break;
            }
        }
        std::f64::consts::FRAC_2_PI
            * (((x / 2.0).ln() + EULER_GAMMA) * j1(x) - 1.0 / x - x / 4.0 * to_f64(&sum))
    }

    trait ZeroLike {
        fn is_zero_like(&self) -> bool;
    }

    impl ZeroLike for BigInt {
        fn is_zero_like(&self) -> bool {
            // Terms below 2^-200 of the fixed-point scale cannot affect the
            // f64 result.
            self.abs() < (BigInt::from(1) << 56)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j0(0.0).unwrap(), 1.0);
    }

    #[test]
    fn j0_at_one_matches_series_oracle() {
        let v = bessel_j0(1.0).unwrap();
        assert!((v - 0.765_197_686_557_966_5).abs() < 1e-12);
        assert!((v - reference::j0(1.0)).abs() < 1e-12);
    }

    #[test]
    fn j0_first_zero_by_bisection_on_oracle() {
        // Bisection on the reference series brackets the first zero.
        let (mut lo, mut hi) = (2.0, 3.0);
        assert!(reference::j0(lo) > 0.0 && reference::j0(hi) < 0.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if reference::j0(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let zero = 0.5 * (lo + hi);
        assert!((zero - 2.404_825_56).abs() < 1e-7);
        assert!(bessel_j0(zero).unwrap().abs() < 1e-7);
    }

    #[test]
    fn y0_at_one_matches_series_oracle() {
        let v = bessel_y0(1.0).unwrap();
        assert!((v - 0.088_256_964_215_677).abs() < 1e-12);
        assert!((v - reference::y0(1.0)).abs() < 1e-12);
    }

    #[test]
    fn y0_diverges_to_minus_infinity_near_zero() {
        assert!(bessel_y0(1e-6).unwrap() < -8.0);
        // Monotone decrease toward the singularity.
        let mut prev = bessel_y0(1e-1).unwrap();
        for &x in &[1e-2, 1e-3, 1e-4, 1e-5, 1e-6] {
            let v = bessel_y0(x).unwrap();
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn y0_zero_near_3_96_by_bisection_on_oracle() {
        let (mut lo, mut hi) = (3.5, 4.5);
        assert!(reference::y0(lo) > 0.0 && reference::y0(hi) < 0.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if reference::y0(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let zero = 0.5 * (lo + hi);
        assert!((zero - 3.957_678_42).abs() < 1e-7);
        assert!(bessel_y0(zero).unwrap().abs() < 1e-7);
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j0(f64::NAN).is_err());
        assert!(bessel_j0(-1.0).is_err());
        assert!(bessel_y0(0.0).is_err());
        assert!(bessel_y0(-3.0).is_err());
        assert!(bessel_y1(0.0).is_err());
    }

    #[test]
    fn order_one_against_oracle() {
        for &x in &[0.5, 1.0, 3.0, 7.0, 11.9, 12.1, 20.0, 45.0] {
            assert!((bessel_j1(x).unwrap() - reference::j1(x)).abs() < 1e-9, "J1({x})");
            assert!((bessel_y1(x).unwrap() - reference::y1(x)).abs() < 1e-9, "Y1({x})");
        }
    }

    #[test]
    fn crossover_continuity_at_12() {
        // Both branches agree with the oracle near the switch point.
        for &x in &[11.999, 12.0, 12.001] {
            assert!((bessel_j0(x).unwrap() - reference::j0(x)).abs() < 1e-8);
            assert!((bessel_y0(x).unwrap() - reference::y0(x)).abs() < 1e-8);
        }
    }

    #[test]
    fn j0_y0_match_oracle_across_range() {
        for i in 0..120 {
            let x = 1e-3 + (60.0 - 1e-3) * (i as f64 + 0.5) / 120.0;
            assert!(
                (bessel_j0(x).unwrap() - reference::j0(x)).abs() < 1e-8,
                "J0 mismatch at x={x}"
            );
            assert!(
                (bessel_y0(x).unwrap() - reference::y0(x)).abs() < 1e-8,
                "Y0 mismatch at x={x}"
            );
        }
    }

    #[test]
    fn wronskian_identity() {
        // J0 Y0' - J0' Y0 = 2/(pi x), derivatives by central differences of
        // the reference series.
        let h = 1e-5;
        for &x in &[0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
            let dj = (reference::j0(x + h) - reference::j0(x - h)) / (2.0 * h);
            let dy = (reference::y0(x + h) - reference::y0(x - h)) / (2.0 * h);
            let w = reference::j0(x) * dy - dj * reference::y0(x);
            assert!(
                (w - 2.0 / (std::f64::consts::PI * x)).abs() < 1e-7,
                "Wronskian off at x={x}: {w}"
            );
        }
    }

    #[test]
    fn hankel_large_argument_amplitude() {
        for &x in &[20.0, 25.0, 30.0, 40.0, 50.0, 60.0] {
            let h = hankel1_0(x).unwrap();
            let ratio = h.norm() / (2.0 / (std::f64::consts::PI * x)).sqrt();
            assert!((0.99..=1.01).contains(&ratio), "amplitude ratio {ratio} at x={x}");
        }
    }
}
